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

#include "maxknap/cli/formats.hpp"

#include <fstream>
#include <sstream>

#include "maxknap/errors.hpp"

namespace maxknap::cli {

namespace {

// Non-empty lines with comments stripped, split into tokens, with 1-based
// line numbers for diagnostics.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  throw DomainError(source + ":" + std::to_string(line) + ": " + what);
}

ExtVal parse_token(const std::string& tok, const std::string& source, int line) {
  try {
    return parse_ext_val(tok);
  } catch (const std::exception& e) {
    fail(source, line, e.what());
  }
}

std::int64_t parse_int(const std::string& tok, const std::string& source, int line) {
  const ExtVal v = parse_token(tok, source, line);
  if (!v.is_finite()) fail(source, line, "expected an integer, got '" + tok + "'");
  return v.value();
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return in;
}

}  // namespace

MaxPlusVec parse_vector(std::istream& in, const std::string& source) {
  std::vector<ExtVal> values;
  for (const Line& line : tokenize(in)) {
    for (const std::string& tok : line.tokens) values.push_back(parse_token(tok, source, line.number));
  }
  if (values.empty()) throw DomainError(source + ": empty vector");
  return MaxPlusVec(std::move(values));
}

KnapsackInstance parse_instance(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw DomainError(source + ": missing header 'n t'");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) fail(source, header.number, "header must be 'n t'");
  const std::int64_t n = parse_int(header.tokens[0], source, header.number);
  KnapsackInstance inst;
  inst.capacity = parse_int(header.tokens[1], source, header.number);
  if (n < 0) fail(source, header.number, "item count must be non-negative");
  if (static_cast<std::int64_t>(lines.size()) - 1 != n) {
    fail(source, header.number, "header announces " + std::to_string(n) + " items, found " +
                                    std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() < 2 || line.tokens.size() > 3) fail(source, line.number, "item must be 'size value [mult]'");
    Item it;
    it.size = parse_int(line.tokens[0], source, line.number);
    it.value = parse_int(line.tokens[1], source, line.number);
    if (line.tokens.size() == 3) {
      const ExtVal m = parse_token(line.tokens[2], source, line.number);
      if (m.is_pos_inf()) {
        it.multiplicity = kUnbounded;
      } else if (m.is_finite()) {
        it.multiplicity = m.value();
      } else {
        fail(source, line.number, "invalid multiplicity");
      }
    }
    inst.items.push_back(it);
  }
  try {
    validate_instance(inst);
  } catch (const std::exception& e) {
    throw DomainError(source + ": " + e.what());
  }
  return inst;
}

WeightedTree parse_tree(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw DomainError(source + ": missing header 'n'");
  const Line& header = lines.front();
  if (header.tokens.size() != 1) fail(source, header.number, "header must be 'n'");
  const std::int64_t n = parse_int(header.tokens[0], source, header.number);
  if (n < 1 || n > (1 << 24)) fail(source, header.number, "vertex count out of range");
  if (static_cast<std::int64_t>(lines.size()) != n) {
    fail(source, header.number, "expected " + std::to_string(n - 1) + " edges");
  }
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) fail(source, line.number, "edge must be 'u v weight'");
    const std::int64_t u = parse_int(line.tokens[0], source, line.number);
    const std::int64_t v = parse_int(line.tokens[1], source, line.number);
    if (u < 0 || v < 0 || u >= n || v >= n) fail(source, line.number, "vertex id out of range");
    const ExtVal w = parse_token(line.tokens[2], source, line.number);
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
  }
  try {
    return WeightedTree(static_cast<int>(n), std::move(edges));
  } catch (const std::exception& e) {
    throw DomainError(source + ": " + e.what());
  }
}

MaxPlusVec read_vector_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_vector(in, path);
}

KnapsackInstance read_instance_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_instance(in, path);
}

WeightedTree read_tree_file(const std::string& path) {
  std::ifstream in = open(path);
  return parse_tree(in, path);
}

std::string format_vector(const MaxPlusVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

std::string format_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_instance(const KnapsackInstance& inst) {
  std::ostringstream os;
  os << inst.items.size() << ' ' << inst.capacity << '\n';
  for (const Item& it : inst.items) {
    os << it.size << ' ' << it.value;
    if (it.unbounded()) {
      os << " inf";
    } else if (it.multiplicity != 1) {
      os << ' ' << it.multiplicity;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_tree(const WeightedTree& tree) {
  std::ostringstream os;
  os << tree.size() << '\n';
  for (const TreeEdge& e : tree.edges()) os << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  return os.str();
}

}  // namespace maxknap::cli
