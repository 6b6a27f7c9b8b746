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

#include "maxknap/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "maxknap/bounded_conv.hpp"
#include "maxknap/cli/bench.hpp"
#include "maxknap/cli/formats.hpp"
#include "maxknap/cli/generate.hpp"
#include "maxknap/distorted_conv.hpp"
#include "maxknap/errors.hpp"
#include "maxknap/solvers.hpp"
#include "maxknap/tree.hpp"
#include "maxknap/vector_power.hpp"

namespace maxknap::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string algo;
  std::optional<std::int64_t> e_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> c_const;
  std::int64_t reps = 2;
  std::string format = "text";
  bool oracle = false;
  bool randomized_only = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_algo, std::vector<std::string> algos,
                std::vector<std::string> formats = {"text", "json"}) {
  c.algo = default_algo;
  if (!algos.empty()) {
    cmd->add_option("--algo", c.algo, "Algorithm")->check(CLI::IsMember(std::move(algos)))->capture_default_str();
  }
  cmd->add_option("--e-max", c.e_max, "Entry or value bound");
  cmd->add_option("--seed", c.seed, "Random seed (default: $KNAP_SEED or 0)");
  cmd->add_option("--c-const", c.c_const, "Repetition or window constant")->check(CLI::PositiveNumber);
  cmd->add_option("--reps", c.reps, "Independent repetitions")->check(CLI::PositiveNumber)->capture_default_str();
  c.format = formats.front();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
  cmd->add_flag("--oracle", c.oracle, "Force the brute-force or direct algorithm");
  cmd->add_flag("--randomized-only", c.randomized_only, "Never replace randomized subproblems with direct DP");
  cmd->add_option("--out", c.out_path, "Write the result to FILE instead of stdout");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("KNAP_SEED"); env != nullptr && *env != '\0') {
    const ExtVal v = parse_ext_val(env);
    if (!v.is_finite() || v.value() < 0) throw DomainError("KNAP_SEED must be a non-negative integer");
    return static_cast<std::uint64_t>(v.value());
  }
  return 0;
}

SolverConfig solver_config(const Common& c) {
  SolverConfig cfg;
  cfg.c_const = c.c_const;
  cfg.repetitions = c.reps;
  cfg.seed = resolve_seed(c);
  cfg.exact_base_case = !c.randomized_only;
  return cfg;
}

json ext_json(ExtVal v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

json vector_json(const MaxPlusVec& v) {
  json arr = json::array();
  for (ExtVal x : v) arr.push_back(ext_json(x));
  return arr;
}

std::string render(const Common& c, const std::string& text, json payload) {
  if (c.format == "json") return payload.dump() + "\n";
  return text + "\n";
}

// Shifts the finite entries down to start at zero; returns the shift.
std::int64_t shift_to_zero(MaxPlusVec& v) {
  const ExtVal hi = v.max_finite();
  if (!hi.is_finite()) return 0;
  std::int64_t lo = hi.value();
  for (ExtVal x : v) {
    if (x.is_finite()) lo = std::min(lo, x.value());
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_finite()) v[i] = ExtVal(checked_sub(v[i].value(), lo));
  }
  return lo;
}

MaxPlusVec run_conv(const Common& c, const MaxPlusVec& a, const MaxPlusVec& b) {
  const std::string algo = c.oracle ? "naive" : c.algo;
  if (algo == "naive") return naive_conv(a, b);
  if (algo == "min") return naive_min_conv(a, b);
  if (algo == "distorted") return distorted_conv(a, b, c.e_max ? *c.e_max : distortion(a, b));
  // bounded: operate on the shifted vectors and shift the result back.
  MaxPlusVec sa = a, sb = b;
  const std::int64_t shift = checked_add(shift_to_zero(sa), shift_to_zero(sb));
  auto top = [](const MaxPlusVec& v) { return v.max_finite().is_finite() ? v.max_finite().value() : 0; };
  const std::int64_t e = c.e_max ? *c.e_max : std::max(top(sa), top(sb));
  MaxPlusVec r = bounded_range_conv(sa, sb, e);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_finite()) r[i] = ExtVal(checked_add(r[i].value(), shift));
  }
  return r;
}

std::string cmd_knapsack(const Common& c, const KnapsackInstance& inst, bool want_profile) {
  const std::string algo = c.oracle ? "classic" : c.algo;
  const SolverConfig cfg = solver_config(c);
  const std::int64_t t = inst.capacity;
  std::optional<SolutionProfile> profile;
  std::int64_t optimum = 0;
  if (algo == "classic") {
    profile = classic_dp(t, inst.items);
  } else if (algo == "conv") {
    profile = knapsack_via_conv(t, inst.items, cfg);
  } else if (algo == "unbounded-power") {
    for (const Item& it : inst.items) require(it.unbounded(), "unbounded-power needs unbounded items");
    profile = unbounded_via_power(t, inst.items);
  } else if (algo == "small") {
    optimum = knapsack_small_sizes(t, inst.items, cfg).optimum;
  } else if (algo == "infinite") {
    optimum = knapsack_infinite_mult(t, inst.items, cfg);
  } else if (algo == "given") {
    optimum = knapsack_given_mult(t, inst.items, cfg);
  } else {
    optimum = unbounded_small_sizes(t, inst.items, cfg);
  }
  if (profile) optimum = profile->back();
  if (want_profile && !profile) throw DomainError("--profile is only available for classic, conv and unbounded-power");

  json payload{{"algorithm", algo}, {"capacity", t}, {"optimum", optimum}};
  if (want_profile) payload["profile"] = *profile;
  return render(c, want_profile ? format_ints(*profile) : std::to_string(optimum), payload);
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + c.out_path + "'");
  file << text;
}

std::vector<std::int64_t> split_ints(const std::string& list, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(list);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const ExtVal v = parse_ext_val(tok);
    if (!v.is_finite()) throw DomainError(what + " must be integers");
    out.push_back(v.value());
  }
  if (out.empty()) throw DomainError(what + " must not be empty");
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (max,+) convolution, knapsack and tree separability tools", "maxknap"};
  app.require_subcommand(1);

  Common c_conv, c_knap, c_power, c_tree, c_gen, c_bench;
  std::string a_path, b_path, inst_path, tree_path, gen_kind;
  bool knap_profile = false;
  std::int64_t power_k = 0;
  std::optional<std::size_t> power_cap;
  std::optional<int> tree_m;
  GenParams gen;
  std::string bench_sizes = "16384,32768,65536,131072", bench_seeds;
  int bench_runs = 5;
  bool bench_verify = false;

  CLI::App* conv = app.add_subcommand("conv", "Convolve two vector files");
  add_common(conv, c_conv, "naive", {"naive", "min", "bounded", "distorted"});
  conv->add_option("a", a_path, "First vector file")->required();
  conv->add_option("b", b_path, "Second vector file")->required();

  CLI::App* knap = app.add_subcommand("knapsack", "Solve a knapsack instance file");
  add_common(knap, c_knap, "classic",
             {"classic", "conv", "small", "infinite", "given", "unbounded-power", "unbounded-small"});
  knap->add_option("instance", inst_path, "Instance file")->required();
  knap->add_flag("--profile", knap_profile, "Print the optimum for every capacity 0..t");

  CLI::App* power = app.add_subcommand("power", "Compute the k-th (max,+) power of a vector file");
  add_common(power, c_power, "fast", {"fast", "naive"});
  power->add_option("a", a_path, "Vector file")->required();
  power->add_option("--k", power_k, "Exponent")->required()->check(CLI::PositiveNumber);
  power->add_option("--cap", power_cap, "Keep only the first CAP entries")->check(CLI::PositiveNumber);

  CLI::App* treesep = app.add_subcommand("treesep", "Tree separability profile of a tree file");
  add_common(treesep, c_tree, "spine", {"spine", "dp", "bounded", "brute"});
  treesep->add_option("tree", tree_path, "Tree file")->required();
  treesep->add_option("--m", tree_m, "Report only the value for part size M")->check(CLI::NonNegativeNumber);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance, tree or vector file");
  add_common(gen_cmd, c_gen, "", {});
  gen_cmd->add_option("kind", gen_kind, "bounded-value, bounded-size, unbounded, mult, tree or vector")->required();
  gen_cmd->add_option("--n", gen.n, "Items, vertices or vector length")->capture_default_str();
  gen_cmd->add_option("--t", gen.t, "Capacity")->capture_default_str();
  gen_cmd->add_option("--s-max", gen.s_max, "Largest item size (0: kind default)")->capture_default_str();
  gen_cmd->add_option("--v-max", gen.v_max, "Largest value")->capture_default_str();
  gen_cmd->add_option("--m-max", gen.m_max, "Largest multiplicity")->capture_default_str();
  gen_cmd->add_option("--w-max", gen.w_max, "Largest edge weight")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "Time algorithms over a size ladder");
  add_common(bench, c_bench, "bounded_range_conv", {}, {"json", "csv"});
  bench->add_option("--algo", c_bench.algo, "Comma-separated algorithms")->capture_default_str()->check(CLI::Validator(
      [](const std::string& list) -> std::string {
        std::stringstream ss(list);
        const auto& known = bench_algorithms();
        for (std::string tok; std::getline(ss, tok, ',');) {
          if (std::find(known.begin(), known.end(), tok) == known.end()) return "unknown bench algorithm '" + tok + "'";
        }
        return {};
      },
      "ALGO[,ALGO...]"));
  bench->add_option("--sizes", bench_sizes, "Comma-separated, strictly increasing sizes")->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "Comma-separated seeds (default: the single --seed)");
  bench->add_option("--runs", bench_runs, "Timed runs per cell")->check(CLI::Range(3, 1000))->capture_default_str();
  bench->add_flag("--verify", bench_verify, "Check results against a direct oracle up to size 1024");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (conv->parsed()) {
      const MaxPlusVec a = read_vector_file(a_path);
      const MaxPlusVec b = read_vector_file(b_path);
      const MaxPlusVec r = run_conv(c_conv, a, b);
      emit(c_conv, render(c_conv, format_vector(r), {{"algorithm", c_conv.oracle ? "naive" : c_conv.algo}, {"result", vector_json(r)}}),
           out);
    } else if (knap->parsed()) {
      emit(c_knap, cmd_knapsack(c_knap, read_instance_file(inst_path), knap_profile), out);
    } else if (power->parsed()) {
      const MaxPlusVec a = read_vector_file(a_path);
      const bool naive = c_power.oracle || c_power.algo == "naive";
      MaxPlusVec r = naive ? naive_power(a, power_k) : fast_power(a, power_k, power_cap);
      if (power_cap) r = r.prefix(*power_cap);
      emit(c_power, render(c_power, format_vector(r), {{"algorithm", naive ? "naive" : "fast"}, {"k", power_k}, {"result", vector_json(r)}}),
           out);
    } else if (treesep->parsed()) {
      const WeightedTree tree = read_tree_file(tree_path);
      const std::string algo = c_tree.oracle ? "brute" : c_tree.algo;
      std::vector<ExtVal> profile;
      if (algo == "brute") {
        profile = brute_separability(tree);
      } else if (algo == "bounded") {
        profile = bounded_separability(tree);
      } else {
        profile = separability_profile(tree, algo == "dp" ? SeparabilityStrategy::kSubtreeDp : SeparabilityStrategy::kSpine);
      }
      const MaxPlusVec pv(profile);
      if (tree_m) {
        require(*tree_m <= tree.size(), "--m must not exceed the vertex count");
        const ExtVal v = profile[static_cast<std::size_t>(*tree_m)];
        emit(c_tree, render(c_tree, v.to_string(), {{"algorithm", algo}, {"m", *tree_m}, {"value", ext_json(v)}}), out);
      } else {
        emit(c_tree, render(c_tree, format_vector(pv), {{"algorithm", algo}, {"profile", vector_json(pv)}}), out);
      }
    } else if (gen_cmd->parsed()) {
      emit(c_gen, gen_instance(parse_gen_kind(gen_kind), gen, resolve_seed(c_gen)), out);
    } else if (bench->parsed()) {
      BenchSpec spec;
      std::stringstream ss(c_bench.algo);
      for (std::string tok; std::getline(ss, tok, ',');) spec.algorithms.push_back(tok);
      spec.sizes = split_ints(bench_sizes, "--sizes");
      if (bench_seeds.empty()) {
        spec.seeds = {resolve_seed(c_bench)};
      } else {
        for (std::int64_t s : split_ints(bench_seeds, "--seeds")) {
          require(s >= 0, "--seeds must be non-negative");
          spec.seeds.push_back(static_cast<std::uint64_t>(s));
        }
      }
      spec.e_max = c_bench.e_max.value_or(4);
      spec.runs = bench_runs;
      spec.verify = bench_verify;
      const std::vector<BenchRecord> records = run_bench(spec);
      emit(c_bench, c_bench.format == "csv" ? bench_to_csv(records) : bench_to_json(records), out);
    }
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace maxknap::cli
