// Copyright 2026 The maxknap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXKNAP_CLI_FORMATS_HPP_
#define MAXKNAP_CLI_FORMATS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "maxknap/knapsack_types.hpp"
#include "maxknap/maxplus.hpp"
#include "maxknap/tree.hpp"

namespace maxknap::cli {

// Text formats. Everything after '#' on a line is ignored.
//
// Vector:   whitespace-separated integers, with -inf and +inf (or inf).
// Instance: a header "n t", then n lines "size value [multiplicity]", where a
//           missing multiplicity means 1 and "inf" means unbounded.
// Tree:     a header "n", then n - 1 lines "u v weight" with 0-based vertex
//           ids; the weight may be "inf".
//
// Parse failures throw DomainError naming the source and line.

MaxPlusVec parse_vector(std::istream& in, const std::string& source = "<input>");
KnapsackInstance parse_instance(std::istream& in, const std::string& source = "<input>");
WeightedTree parse_tree(std::istream& in, const std::string& source = "<input>");

MaxPlusVec read_vector_file(const std::string& path);
KnapsackInstance read_instance_file(const std::string& path);
WeightedTree read_tree_file(const std::string& path);

std::string format_vector(const MaxPlusVec& v);
std::string format_ints(const std::vector<std::int64_t>& v);
std::string format_instance(const KnapsackInstance& inst);
std::string format_tree(const WeightedTree& tree);

}  // namespace maxknap::cli

#endif  // MAXKNAP_CLI_FORMATS_HPP_
