// SPDX-License-Identifier: Apache-2.0
//
// cochain-cli: solve, normalize, closed-form, generate, bench.
// Talks to the library only through cochain.h.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cochain/cochain.h"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kRejected = 2,
  kBudget = 3,
  kMismatch = 4,
};

// Thrown to unwind to main with an exit code; the message goes to stderr.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(cochain_status status) {
  switch (status) {
    case COCHAIN_ERR_REJECTED: return kRejected;
    case COCHAIN_ERR_BUDGET: return kBudget;
    case COCHAIN_ERR_INTERNAL: return kMismatch;
    default: return kInputError;
  }
}

void check(cochain_status status, const std::string& context) {
  if (status == COCHAIN_OK) return;
  throw Failure{exit_for(status), context + ": " + cochain_last_error()};
}

template <class T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr_); }
  T** out() {
    Free(ptr_);
    ptr_ = nullptr;
    return &ptr_;
  }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using Graph = Handle<cochain_graph, cochain_graph_free>;
using Form = Handle<cochain_form, cochain_form_free>;
using Solution = Handle<cochain_solution, cochain_solution_free>;
using Generator = Handle<cochain_generator, cochain_generator_free>;

struct Multiplicities {
  std::vector<int64_t> m;
  std::vector<int64_t> m_prime;
};

Multiplicities multiplicities(const cochain_form* form) {
  const auto rows = static_cast<std::size_t>(cochain_form_k(form)) + 1;
  Multiplicities out{std::vector<int64_t>(rows), std::vector<int64_t>(rows)};
  check(cochain_form_multiplicities(form, out.m.data(), out.m_prime.data(), rows),
        "reading multiplicities");
  return out;
}

template <class T>
std::string joined(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

json form_json(const cochain_form* form) {
  const Multiplicities mult = multiplicities(form);
  return {{"k", cochain_form_k(form)},
          {"variant", cochain_form_is_minus(form) ? "minus" : "full"},
          {"m", mult.m},
          {"mp", mult.m_prime}};
}

void print_form(const cochain_form* form) {
  const Multiplicities mult = multiplicities(form);
  std::cout << "k: " << cochain_form_k(form) << '\n'
            << "variant: " << (cochain_form_is_minus(form) ? "minus" : "full") << '\n'
            << "m: " << joined(mult.m) << '\n'
            << "mp: " << joined(mult.m_prime) << '\n';
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- input loading ---------------------------------------------------------

struct Loaded {
  bool from_graph = false;
  Graph graph;                      // edge-list input only
  Form form;
  std::vector<uint8_t> sides;       // per original vertex
  std::vector<uint64_t> rows;
};

cochain_file_format resolve_format(const std::string& path, const std::string& format) {
  if (format == "edgelist") return COCHAIN_FORMAT_EDGELIST;
  if (format == "chainform") return COCHAIN_FORMAT_CHAINFORM;
  cochain_file_format sniffed = COCHAIN_FORMAT_EDGELIST;
  check(cochain_sniff_format(path.c_str(), &sniffed), "reading " + path);
  return sniffed;
}

// Returns the rejection stage instead of throwing so callers can report it.
cochain_reject_stage load(const std::string& path, const std::string& format, Loaded& in) {
  if (resolve_format(path, format) == COCHAIN_FORMAT_CHAINFORM) {
    check(cochain_form_read(path.c_str(), in.form.out()), "reading " + path);
    return COCHAIN_ACCEPTED;
  }
  in.from_graph = true;
  check(cochain_graph_read_edgelist(path.c_str(), in.graph.out()), "reading " + path);
  const uint32_t n = cochain_graph_vertex_count(in.graph.get());
  in.sides.assign(n, 0);
  in.rows.assign(n, 0);
  cochain_reject_stage stage = COCHAIN_ACCEPTED;
  const cochain_status status = cochain_normalize(in.graph.get(), in.form.out(), &stage,
                                                  in.sides.data(), in.rows.data());
  if (status == COCHAIN_ERR_REJECTED) return stage;
  check(status, "normalizing " + path);
  return COCHAIN_ACCEPTED;
}

// Puts the first s_i vertices of each K row (and s'_i of each K' row) into S.
std::vector<uint8_t> partition_from_cut(const Loaded& in, const std::vector<int64_t>& s,
                                        const std::vector<int64_t>& s_prime) {
  std::vector<int64_t> left_k = s;
  std::vector<int64_t> left_kp = s_prime;
  std::vector<uint8_t> in_s(in.sides.size(), 0);
  for (std::size_t v = 0; v < in.sides.size(); ++v) {
    auto& left = in.sides[v] == COCHAIN_SIDE_K ? left_k : left_kp;
    if (left[in.rows[v]] > 0) {
      --left[in.rows[v]];
      in_s[v] = 1;
    }
  }
  return in_s;
}

// ---- solve -------------------------------------------------------------------

struct SolveArgs {
  std::string path;
  std::string format = "auto";
  bool certify = false;
  bool oracle = false;
  uint64_t oracle_limit = uint64_t{1} << 26;
  bool json = false;
};

int cmd_solve(const SolveArgs& args) {
  Loaded in;
  const cochain_reject_stage stage = load(args.path, args.format, in);
  const char* format_name = in.from_graph ? "edgelist" : "chainform";
  if (stage != COCHAIN_ACCEPTED) {
    const std::string why = cochain_reject_stage_string(stage);
    if (args.json) {
      std::cout << json{{"input", args.path},
                        {"format", format_name},
                        {"accepted", false},
                        {"stage", why}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "input: " << args.path << "\nformat: " << format_name
                << "\naccepted: no\nstage: " << why << '\n';
    }
    std::cerr << "rejected: " << why << '\n';
    return kRejected;
  }

  const cochain_form* form = in.form.get();
  const auto start = Clock::now();
  Solution solution;
  check(cochain_solve(form, 1, solution.out()), "solving");
  const double elapsed = seconds_since(start);
  const int64_t size = cochain_solution_size(solution.get());

  const auto rows = static_cast<std::size_t>(cochain_form_k(form)) + 1;
  std::vector<int64_t> s(rows);
  std::vector<int64_t> s_prime(rows);
  check(cochain_solution_cut(solution.get(), s.data(), s_prime.data(), rows),
        "reading certificate");

  // The certificate is re-evaluated before anything is printed.
  int64_t recheck = -1;
  check(cochain_cut_size(form, s.data(), s_prime.data(), &recheck), "evaluating certificate");
  if (recheck != size) {
    throw Failure{kMismatch, "certificate evaluates to " + std::to_string(recheck) +
                                 ", solver reported " + std::to_string(size)};
  }
  std::vector<uint8_t> partition;
  if (in.from_graph) {
    partition = partition_from_cut(in, s, s_prime);
    check(cochain_graph_cut_size(in.graph.get(), partition.data(), &recheck),
          "evaluating partition");
    if (recheck != size) {
      throw Failure{kMismatch, "mapped partition cuts " + std::to_string(recheck) +
                                   " edges, solver reported " + std::to_string(size)};
    }
  }

  std::optional<cochain_oracle_result> oracle;
  if (args.oracle) {
    cochain_oracle_result result{};
    const cochain_status status =
        in.from_graph
            ? cochain_oracle_subsets(in.graph.get(), args.oracle_limit, &result, nullptr)
            : cochain_oracle_multiplicity(form, args.oracle_limit, &result, nullptr, nullptr);
    if (status == COCHAIN_ERR_BUDGET) {
      throw Failure{kBudget, "oracle budget exceeded: needs " +
                                 std::to_string(result.required_states) +
                                 " states, limit " + std::to_string(args.oracle_limit)};
    }
    check(status, "running oracle");
    oracle = result;
  }

  std::vector<uint32_t> in_s_ids;
  for (std::size_t v = 0; v < partition.size(); ++v) {
    if (partition[v]) in_s_ids.push_back(static_cast<uint32_t>(v));
  }

  if (args.json) {
    json report{{"input", args.path},
                {"format", format_name},
                {"accepted", true},
                {"vertices", cochain_form_vertex_count(form)},
                {"edges", cochain_form_edge_count(form)},
                {"form", form_json(form)},
                {"size", size},
                {"seconds", elapsed}};
    if (args.certify) {
      report["certificate"] = {{"s", s}, {"s_prime", s_prime}, {"verified", true}};
      if (in.from_graph) report["certificate"]["partition"] = in_s_ids;
    }
    if (oracle) {
      report["oracle"] = {{"size", oracle->size},
                          {"states", oracle->states_examined},
                          {"agrees", oracle->size == size}};
    }
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "input: " << args.path << "\nformat: " << format_name << '\n'
              << "vertices: " << cochain_form_vertex_count(form) << '\n'
              << "edges: " << cochain_form_edge_count(form) << '\n';
    print_form(form);
    std::cout << "size: " << size << '\n'
              << "seconds: " << std::setprecision(6) << elapsed << '\n';
    if (args.certify) {
      std::cout << "cut_s: " << joined(s) << '\n' << "cut_s_prime: " << joined(s_prime) << '\n';
      if (in.from_graph) std::cout << "partition: " << joined(in_s_ids) << '\n';
      std::cout << "certificate: verified\n";
    }
    if (oracle) {
      std::cout << "oracle: dp=" << size << " oracle=" << oracle->size
                << (oracle->size == size ? " OK" : " MISMATCH") << '\n';
    }
  }
  if (oracle && oracle->size != size) {
    std::cerr << "oracle disagrees with the solver\n";
    return kMismatch;
  }
  return kOk;
}

// ---- normalize ---------------------------------------------------------------

int cmd_normalize(const std::string& path, const std::string& out_path) {
  Loaded in;
  const cochain_reject_stage stage = load(path, "edgelist", in);
  if (stage != COCHAIN_ACCEPTED) {
    std::cerr << "rejected: " << cochain_reject_stage_string(stage) << '\n';
    return kRejected;
  }
  if (!out_path.empty()) {
    check(cochain_form_write(in.form.get(), out_path.c_str()), "writing " + out_path);
    return kOk;
  }
  const Multiplicities mult = multiplicities(in.form.get());
  std::cout << cochain_form_k(in.form.get()) << "\nm: " << joined(mult.m)
            << "\nmp: " << joined(mult.m_prime) << '\n';
  return kOk;
}

// ---- closed-form -------------------------------------------------------------

int cmd_closed_form(uint64_t k, bool minus, bool as_json, uint64_t search_limit) {
  cochain_pattern closed{};
  check(cochain_closed_form(k, minus ? 1 : 0, &closed), "closed form");
  std::optional<cochain_pattern> searched;
  if (k <= search_limit) {
    searched.emplace();
    check(cochain_pattern_search(k, minus ? 1 : 0, &*searched), "pattern search");
  }
  const double kd = static_cast<double>(k);
  const double ratio = static_cast<double>(closed.value) / (kd * kd);
  const double gap = std::abs(ratio - 5.0 / 6.0);
  const bool agrees = !searched || closed.value == searched->value;

  if (as_json) {
    json report{{"k", k},
                {"variant", minus ? "minus" : "full"},
                {"pattern", {closed.x, closed.y, closed.z, closed.t}},
                {"value", closed.value},
                {"ratio", ratio},
                {"ratio_gap", gap}};
    if (minus) report["apex_in_s"] = closed.apex_in_s != 0;
    if (searched) {
      report["search_value"] = searched->value;
      report["agrees"] = agrees;
    }
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "k: " << k << "\nvariant: " << (minus ? "minus" : "full") << '\n'
              << "pattern: " << closed.x << ' ' << closed.y << ' ' << closed.z << ' '
              << closed.t << '\n';
    if (minus) std::cout << "apex_in_s: " << (closed.apex_in_s ? "yes" : "no") << '\n';
    std::cout << "value: " << closed.value << '\n'
              << std::setprecision(6) << "ratio: " << ratio << '\n'
              << "ratio_gap: " << gap << '\n';
    if (searched) {
      std::cout << "search_value: " << searched->value << '\n'
                << "search: " << (agrees ? "agrees" : "DISAGREES") << '\n';
    } else {
      std::cout << "search: skipped\n";
    }
  }
  return agrees ? kOk : kMismatch;
}

// ---- generate ----------------------------------------------------------------

struct GenerateArgs {
  uint64_t count = 10;
  uint64_t seed = 1;
  uint64_t k_min = 0;
  uint64_t k_max = 5;
  int64_t mult_min = 1;
  int64_t mult_max = 3;
  uint32_t full_weight = 1;
  uint32_t minus_weight = 1;
  bool twin_free = false;
  std::string out_dir = ".";
  std::string format = "chainform";
  std::optional<uint64_t> shuffle_seed;
};

int cmd_generate(const GenerateArgs& args) {
  cochain_gen_spec spec{args.k_min,       args.k_max,        args.mult_min, args.mult_max,
                        args.seed,        args.full_weight,  args.minus_weight};
  if (args.twin_free) spec.multiplicity_min = spec.multiplicity_max = 1;
  Generator gen;
  check(cochain_generator_create(&spec, gen.out()), "generator");

  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) throw Failure{kInputError, "cannot create " + args.out_dir + ": " + ec.message()};

  const bool edges = args.format == "edgelist";
  const int width = std::max<int>(4, static_cast<int>(std::to_string(args.count).size()));
  for (uint64_t i = 0; i < args.count; ++i) {
    Form form;
    check(cochain_generator_next(gen.get(), form.out()), "generator");
    std::ostringstream name;
    name << "instance_" << std::setw(width) << std::setfill('0') << i
         << (edges ? ".edges" : ".chain");
    const std::string path = (std::filesystem::path(args.out_dir) / name.str()).string();
    if (edges) {
      Graph graph;
      if (args.shuffle_seed) {
        check(cochain_form_shuffle_expand(form.get(), *args.shuffle_seed + i, graph.out()),
              "expanding");
      } else {
        check(cochain_form_expand(form.get(), graph.out()), "expanding");
      }
      check(cochain_graph_write_edgelist(graph.get(), path.c_str()), "writing " + path);
    } else {
      check(cochain_form_write(form.get(), path.c_str()), "writing " + path);
    }
    std::cout << path << '\n';
  }
  return kOk;
}

// ---- bench -------------------------------------------------------------------

struct BenchArgs {
  std::vector<int64_t> sizes{64, 128, 256};
  uint64_t seed = 1;
  double min_seconds = 0.05;
  bool json = false;
};

int cmd_bench(const BenchArgs& args) {
  if (args.sizes.size() < 2) throw Failure{kInputError, "bench needs at least two sizes"};
  std::vector<double> ns;
  std::vector<double> per_solve;
  json rows = json::array();
  if (!args.json) {
    std::cout << std::left << std::setw(8) << "N" << std::setw(8) << "k" << std::setw(8)
              << "reps" << std::setw(14) << "seconds" << "size\n";
  }
  for (int64_t n : args.sizes) {
    Form form;
    check(cochain_form_scaling_instance(n, args.seed, form.out()), "building instance");
    int reps = 0;
    int64_t size = 0;
    const auto start = Clock::now();
    do {
      Solution solution;
      check(cochain_solve(form.get(), 1, solution.out()), "solving");
      size = cochain_solution_size(solution.get());
      ++reps;
    } while (seconds_since(start) < args.min_seconds);
    const double each = seconds_since(start) / reps;
    ns.push_back(static_cast<double>(n));
    per_solve.push_back(each);
    rows.push_back({{"n", n},
                    {"k", cochain_form_k(form.get())},
                    {"reps", reps},
                    {"seconds", each},
                    {"size", size}});
    if (!args.json) {
      std::cout << std::left << std::setw(8) << n << std::setw(8) << cochain_form_k(form.get())
                << std::setw(8) << reps << std::setw(14) << std::setprecision(6) << each
                << size << '\n';
    }
  }
  double exponent = 0;
  check(cochain_fit_exponent(ns.data(), per_solve.data(), ns.size(), &exponent), "fit");
  if (args.json) {
    std::cout << json{{"runs", rows}, {"exponent", exponent}}.dump(2) << '\n';
  } else {
    std::cout << "exponent: " << std::setprecision(4) << exponent << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum cut for co-bipartite chain graphs"};
  app.set_version_flag("--version", std::string(cochain_version()));
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact maximum cut of a graph or chain form");
  solve_cmd->add_option("path", solve.path, "Input file")->required();
  solve_cmd->add_option("--format", solve.format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "chainform"}));
  solve_cmd->add_flag("--certify", solve.certify, "Print the verified cut");
  solve_cmd->add_flag("--oracle", solve.oracle, "Cross-check with brute force");
  solve_cmd->add_option("--oracle-limit", solve.oracle_limit, "Brute-force state budget");
  solve_cmd->add_flag("--json", solve.json, "JSON report");

  std::string normalize_path;
  std::string normalize_out;
  auto* normalize_cmd =
      app.add_subcommand("normalize", "Canonical chain form of an edge-list graph");
  normalize_cmd->add_option("path", normalize_path, "Edge-list file")->required();
  normalize_cmd->add_option("-o,--out", normalize_out, "Write the form to this file");

  uint64_t closed_k = 0;
  bool closed_minus = false;
  bool closed_json = false;
  auto* closed_cmd =
      app.add_subcommand("closed-form", "Optimal block pattern of a twin-free skeleton");
  closed_cmd->add_option("--k", closed_k, "Skeleton size (k >= 1)")
      ->required()
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 20));
  closed_cmd->add_flag("--minus", closed_minus, "Skeleton without v'_k");
  closed_cmd->add_flag("--json", closed_json, "JSON report");
  uint64_t search_limit = 1000;
  closed_cmd->add_option("--search-limit", search_limit,
                         "Largest k cross-checked by exhaustive pattern search");

  GenerateArgs gen;
  uint64_t shuffle_seed = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Write random chain-form instances");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--k-min", gen.k_min);
  gen_cmd->add_option("--k-max", gen.k_max);
  gen_cmd->add_option("--mult-min", gen.mult_min, "Smallest multiplicity");
  gen_cmd->add_option("--mult-max", gen.mult_max, "Largest multiplicity");
  gen_cmd->add_option("--full-weight", gen.full_weight);
  gen_cmd->add_option("--minus-weight", gen.minus_weight);
  gen_cmd->add_flag("--twin-free", gen.twin_free, "All multiplicities 1");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"chainform", "edgelist"}));
  auto* shuffle_opt = gen_cmd->add_option(
      "--shuffle", shuffle_seed, "Relabel edge lists; instance i uses seed + i");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solver time over a size ladder");
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--min-seconds", bench.min_seconds, "Minimum timed span per size");
  bench_cmd->add_flag("--json", bench.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*normalize_cmd) return cmd_normalize(normalize_path, normalize_out);
    if (*closed_cmd) return cmd_closed_form(closed_k, closed_minus, closed_json, search_limit);
    if (*gen_cmd) {
      if (*shuffle_opt) gen.shuffle_seed = shuffle_seed;
      return cmd_generate(gen);
    }
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
