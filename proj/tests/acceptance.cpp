// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion. Advisory lines are
// reported but do not change the exit status.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cochain/chain_form.hpp"
#include "cochain/dp_solver.hpp"
#include "cochain/error.hpp"
#include "cochain/generators.hpp"
#include "cochain/oracle.hpp"
#include "cochain/twinfree.hpp"

using namespace cochain;
using twinfree::Variant;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, bool advisory,
         const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("criterion %-3s %s%s  %s (%s; %.3fs)\n", id, out.pass ? "PASS" : "FAIL",
              advisory ? " [advisory]" : "", title, out.detail.c_str(), secs);
  std::fflush(stdout);
  if (!out.pass && !advisory) ++failures;
}

std::string str(Count v) { return std::to_string(v); }

double seconds_of(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr Variant kVariants[] = {Variant::Full, Variant::Minus};

// Random forms whose cut-function space fits the brute-force budget.
std::vector<ChainForm> oracle_sized_forms(std::size_t count) {
  GenSpec spec;
  spec.k_min = 0;
  spec.k_max = 7;
  spec.multiplicity_min = 1;
  spec.multiplicity_max = 6;
  spec.seed = 20240601;
  ChainFormGenerator gen(spec);
  std::vector<ChainForm> out;
  while (out.size() < count) {
    ChainForm f = gen.next();
    if (oracle::multiplicity_state_count(f) <= 1'000'000) out.push_back(std::move(f));
  }
  return out;
}

// Which of v_i, v_{i+1}, v'_i, v'_{i+1} (0..3) is alone on its side, or -1.
int separated(twinfree::RowType upper, twinfree::RowType lower) {
  using twinfree::RowType;
  auto k_in = [](RowType t) { return t == RowType::SS || t == RowType::SB; };
  auto p_in = [](RowType t) { return t == RowType::SS || t == RowType::BS; };
  const bool side[4] = {k_in(upper), k_in(lower), p_in(upper), p_in(lower)};
  for (int i = 0; i < 4; ++i) {
    int others = 0;
    for (int j = 0; j < 4; ++j) others += (j != i && side[j] != side[i]) ? 1 : 0;
    if (others == 3) return i;
  }
  return -1;
}

Outcome nine_rows_reproduction() {
  const ChainForm f = counterexample_instance();
  Solution sol;
  const double secs = seconds_of([&] { sol = solve(f); });
  const Count weak = cut_size(f, {{1, 1, 1, 3, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 7, 0, 0, 0}});
  const Count cert = cut_size(f, *sol.cut);
  const bool ok = sol.size == 223 && weak == 210 && cert == 223 && secs < 1.0;
  return {ok, "solve=" + str(sol.size) + " certificate=" + str(cert) +
                  " stated_cut=" + str(weak) + " expected 223/210, solve under 1s"};
}

Outcome nine_rows_oracle() {
  const ChainForm f = counterexample_instance();
  oracle::OracleResult r;
  const double secs = seconds_of([&] { r = oracle::brute_force_multiplicity(f); });
  const bool ok = r.size == 223 && secs <= 300.0;
  return {ok, "oracle=" + str(r.size) + " states=" + std::to_string(r.states_examined) +
                  " expected 223 within 300s"};
}

Outcome twin_free_equivalence() {
  int instances = 0;
  std::string bad;
  const double secs = seconds_of([&] {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (Variant v : kVariants) {
        const ChainForm f = twinfree::build_cc(k, v);
        const Count subsets = oracle::brute_force_subsets(expand(f)).size;
        const Count search = twinfree::pattern_search(k, v).value;
        const Count closed = twinfree::closed_form_optimum(k, v).value;
        const Count dp = solve(f).size;
        ++instances;
        if (!(subsets == search && search == closed && closed == dp)) {
          bad += " k=" + std::to_string(k) + (v == Variant::Minus ? "-" : "") + ":" +
                 str(subsets) + "/" + str(search) + "/" + str(closed) + "/" + str(dp);
        }
      }
    }
  });
  const bool ok = bad.empty() && secs < 10.0;
  return {ok, std::to_string(instances) + " skeletons, oracle=search=closed=dp" +
                  (bad.empty() ? "" : " mismatches:" + bad) + ", under 10s"};
}

Outcome closed_form_sign() {
  std::string values;
  bool ok = true;
  for (Count k = 1; k <= 5; ++k) {
    const Count best =
        oracle::brute_force_subsets(expand(twinfree::build_cc(static_cast<std::size_t>(k),
                                                              Variant::Full)))
            .size;
    // floor of (50k^2 +- 90k + 45) / 60, both numerators positive for k >= 1
    const Count plus = (50 * k * k + 90 * k + 45) / 60;
    const Count minus_num = 50 * k * k - 90 * k + 45;
    const Count minus = minus_num >= 0 ? minus_num / 60 : -((-minus_num + 59) / 60);
    ok = ok && best == plus && best != minus;
    values += " k=" + str(k) + ":" + str(best) + "/" + str(plus) + "/" + str(minus);
  }
  return {ok, "oracle/plus-sign/minus-sign" + values};
}

Outcome pattern_structure() {
  std::string bad;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (Variant v : kVariants) {
      const ChainForm f = twinfree::build_cc(k, v);
      const Count best = oracle::brute_force_subsets(expand(f)).size;
      const Count rows = static_cast<Count>(v == Variant::Full ? k + 1 : k);
      const double third = static_cast<double>(k) / 3.0;
      bool found = false;
      for (Count x = 0; x <= rows && !found; ++x) {
        for (Count y = 0; x + y <= rows && !found; ++y) {
          const twinfree::BlockPattern p{x, y, rows - x - y, 0};
          if (std::abs(p.x - third) > 1 || std::abs(p.y - third) > 1 ||
              std::abs(p.z - third) > 1) {
            continue;
          }
          for (bool apex : {false, true}) {
            if (apex && v == Variant::Full) continue;
            if (cut_size(f, twinfree::pattern_to_cut(p, v, apex)) == best) found = true;
          }
        }
      }
      if (!found) bad += " k=" + std::to_string(k) + (v == Variant::Minus ? "-" : "");
    }
  }
  return {bad.empty(), "t=0 optimal pattern within 1 of k/3 for k<=6, both skeletons" +
                           (bad.empty() ? "" : " missing:" + bad)};
}

Outcome randomized_suite(const std::vector<ChainForm>& forms) {
  std::size_t mismatches = 0;
  std::size_t bad_certificates = 0;
  const double secs = seconds_of([&] {
    for (const ChainForm& f : forms) {
      const Solution sol = solve(f);
      if (sol.size != oracle::brute_force_multiplicity(f).size) ++mismatches;
      if (!sol.cut || cut_size(f, *sol.cut) != sol.size) ++bad_certificates;
    }
  });
  const bool ok = forms.size() >= 200 && mismatches == 0 && bad_certificates == 0 &&
                  secs < 300.0;
  return {ok, std::to_string(forms.size()) + " forms, " + std::to_string(mismatches) +
                  " size mismatches, " + std::to_string(bad_certificates) +
                  " bad certificates, under 300s"};
}

Outcome swap_law() {
  std::size_t checked = 0;
  std::size_t wrong = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (Variant v : kVariants) {
      const std::size_t rows = v == Variant::Full ? k + 1 : k;
      std::size_t total = 1;
      for (std::size_t r = 0; r < rows; ++r) total *= 4;
      for (bool apex : {false, true}) {
        if (apex && v == Variant::Full) continue;
        for (std::size_t code = 0; code < total; ++code) {
          twinfree::RowCut cut{{}, v, apex};
          for (std::size_t r = 0, c = code; r < rows; ++r, c /= 4) {
            cut.rows.push_back(static_cast<twinfree::RowType>(c % 4));
          }
          const Count before = twinfree::cut_size(cut);
          for (std::size_t i = 0; i + 1 < rows; ++i) {
            const Count delta = twinfree::cut_size(twinfree::swap_rows(cut, i)) - before;
            Count expected = 0;
            if (twinfree::monochromatic(cut.rows[i]) !=
                twinfree::monochromatic(cut.rows[i + 1])) {
              const int who = separated(cut.rows[i], cut.rows[i + 1]);
              expected = (who == 0 || who == 3) ? 1 : -1;
            }
            ++checked;
            if (delta != expected || twinfree::swap_delta(cut, i) != expected) ++wrong;
          }
        }
      }
    }
  }
  return {wrong == 0 && checked > 0,
          std::to_string(checked) + " swaps over all row-type lists k<=4, " +
              std::to_string(wrong) + " off the case table"};
}

Outcome lower_bound(const std::vector<ChainForm>& oracle_forms) {
  std::vector<ChainForm> forms = oracle_forms;
  GenSpec spec;
  spec.k_max = 12;
  spec.multiplicity_max = 20;
  spec.seed = 99;
  ChainFormGenerator gen(spec);
  for (int i = 0; i < 500; ++i) forms.push_back(gen.next());
  std::size_t below = 0;
  for (const ChainForm& f : forms) {
    const Count e = edge_count(f);
    if (solve(f, {false}).size < (e + 1) / 2) ++below;
  }
  return {below == 0, std::to_string(forms.size()) + " instances, " + std::to_string(below) +
                          " below ceil(edges/2)"};
}

Outcome recognition() {
  GenSpec spec;
  spec.k_max = 8;
  spec.multiplicity_max = 4;
  spec.seed = 4242;
  ChainFormGenerator gen(spec);
  int round_trips = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const ChainForm f = gen.next();
    const Normalization n = normalize(shuffle_expand(f, seed));
    if (const auto* ok = std::get_if<Normalized>(&n)) {
      if ((ok->form == f || ok->form == mirror(f)) && ok->form == canonical(f)) ++round_trips;
    }
  }
  auto cycle = [](VertexId n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return SimpleGraph(n, edges);
  };
  auto stage_of = [](const SimpleGraph& g) -> std::string {
    const Recognition r = recognize(g);
    if (const auto* rej = std::get_if<Rejection>(&r)) return std::string(to_string(rej->stage));
    return "accepted";
  };
  const std::string c4 = stage_of(cycle(4));
  const std::string c5 = stage_of(cycle(5));
  const bool ok = round_trips == 100 && c4 == to_string(RejectStage::ChainViolated) &&
                  c5 == to_string(RejectStage::ComplementNotBipartite);
  return {ok, std::to_string(round_trips) + "/100 round trips; C_4: " + c4 + "; C_5: " + c5};
}

Outcome scaling() {
  std::vector<double> sizes;
  std::vector<double> times;
  std::string table;
  for (Count n : {64, 128, 256}) {
    const ChainForm f = scaling_instance(n, 1);
    int reps = 0;
    const auto start = Clock::now();
    double elapsed = 0;
    do {
      (void)solve(f);
      ++reps;
      elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    } while (elapsed < 0.05);
    sizes.push_back(static_cast<double>(n));
    times.push_back(elapsed / reps);
    char cell[64];
    std::snprintf(cell, sizeof cell, " N=%lld:%.2es", static_cast<long long>(n), elapsed / reps);
    table += cell;
  }
  const double exponent = fitted_exponent(sizes, times);
  char head[64];
  std::snprintf(head, sizeof head, "fitted exponent %.3f (limit 4.6);", exponent);
  return {exponent <= 4.6, head + table};
}

Outcome asymptotic_ratio() {
  const Count value = twinfree::closed_form_optimum(100, Variant::Full).value;
  const double ratio = static_cast<double>(value) / 1e4;
  const double gap = std::abs(ratio - 5.0 / 6.0);
  char text[128];
  std::snprintf(text, sizeof text, "k=100 value %lld, ratio %.5f, |ratio-5/6| %.5f (limit 0.01)",
                static_cast<long long>(value), ratio, gap);
  return {gap <= 0.01, text};
}

}  // namespace

int main() {
  const std::vector<ChainForm> forms = oracle_sized_forms(220);

  run("1", "nine-row instance: solve 223, stated cut 210", false, nine_rows_reproduction);
  run("2", "nine-row instance confirmed by the multiplicity oracle", false, nine_rows_oracle);
  run("3", "twin-free skeletons k<=5: oracle, pattern search, closed form, solver agree", false,
      twin_free_equivalence);
  run("4", "CC_k optimum is floor(5/6 k^2 + 3/2 k + 3/4), not the minus-sign variant", false,
      closed_form_sign);
  run("5", "block structure of an optimal pattern", false, pattern_structure);
  run("6", "randomized solver vs oracle", false, [&] { return randomized_suite(forms); });
  run("7", "swap law", false, swap_law);
  run("8", "half-edge lower bound", false, [&] { return lower_bound(forms); });
  run("9", "recognition and normalization", false, recognition);
  run("10", "scaling smoke test", true, scaling);
  run("10b", "k=100 value per k^2 near 5/6", true, asymptotic_ratio);

  std::printf("acceptance: %s (%d required criteria failed)\n", failures ? "FAIL" : "PASS",
              failures);
  return failures ? 1 : 0;
}
