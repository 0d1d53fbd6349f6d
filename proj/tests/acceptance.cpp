// Acceptance suite: every criterion is exact (zero tolerance) and prints
// one PASS/FAIL line. The process exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <vector>

#include "cliquevec/board.hpp"
#include "cliquevec/bounds.hpp"
#include "cliquevec/complexes.hpp"
#include "cliquevec/constructions.hpp"
#include "cliquevec/graphs.hpp"
#include "cliquevec/oracle.hpp"
#include "cliquevec/representations.hpp"
#include "test_rng.hpp"

using namespace cliquevec;

namespace {

int failures_total = 0;
int checks_in_criterion = 0;
int failures_in_criterion = 0;

void expect(bool ok, const char* what) {
  ++checks_in_criterion;
  if (!ok) {
    ++failures_in_criterion;
    std::printf("    FAILED: %s\n", what);
  }
}

#define EXPECT(cond) expect((cond), #cond)

template <typename F>
void criterion(int number, const char* label, F&& body) {
  checks_in_criterion = 0;
  failures_in_criterion = 0;
  auto start = std::chrono::steady_clock::now();
  body();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool ok = failures_in_criterion == 0;
  failures_total += failures_in_criterion;
  std::printf("[%s] criterion %d: %s (%d checks, %.1fs)\n",
              ok ? "PASS" : "FAIL", number, label, checks_in_criterion,
              seconds);
}

Nat lgbd(long long m, int k) { return large_clique_bound(m, k); }
Nat oldbd(long long m, int k) { return kruskal_katona_bound(m, k); }
std::optional<Nat> smbd(long long m, int k) { return small_clique_bound(m, k); }

void known_value_regression() {
  EXPECT(oldbd(102, 3) == 149);
  EXPECT(lgbd(102, 3) == 147);
  EXPECT(smbd(102, 3) == Nat(146));
  EXPECT(combined_bound(102, 3).combined == 147);
  EXPECT(combined_bound(102, 3).winner == Winner::Large);

  EXPECT(smbd(70, 3) == Nat(85));
  EXPECT(lgbd(70, 3) == 81);
  EXPECT(combined_bound(70, 3).combined == 85);
  EXPECT(combined_bound(70, 3).winner == Winner::Small);

  EXPECT(smbd(85, 4) == Nat(61));
  EXPECT(lgbd(85, 4) == 62);
  EXPECT(combined_bound(85, 4).combined == 62);
  EXPECT(combined_bound(85, 4).winner == Winner::Large);

  EXPECT(kalai_eckhoff_bound(35, 3, 4) == 17);

  EXPECT(smbd(20, 3) == Nat(10));
  EXPECT(smbd(10, 4) == Nat(0));
  MultistepReport two_step = multistep_report(20, 3, 2);
  EXPECT(two_step.colored_route == Nat(2));
  EXPECT(*smbd(10, 4) != *two_step.colored_route);

  EXPECT(multistep_bound(70, 3, 2) == 61);
}

void construction_attainment() {
  BuiltConstruction c2 = construction2(102, 3);
  CliqueVector v2 = clique_vector(c2.graph, 4);
  EXPECT(v2.at(3) == 102);
  EXPECT(v2.at(4) == 147);

  BuiltConstruction c1 = construction1(85, 4);
  CliqueVector v1 = clique_vector(c1.graph, 5);
  EXPECT(v1.at(4) == 85);
  EXPECT(v1.at(5) == 62);

  BuiltConstruction c3 = construction3(70, 3);
  EXPECT(c3.graph == turan_graph(9, 7));
  CliqueVector v3 = clique_vector(c3.graph, 4);
  EXPECT(v3.at(3) == 70);
  EXPECT(v3.at(4) == 85);

  Graph k10e = Graph::complete(10);
  k10e.remove_edge(3, 7);
  EXPECT(clique_vector(k10e, 3).at(3) == 112);

  CliqueVector k7 = clique_vector(Graph::complete(7));
  EXPECT(k7.at(3) == 35);
  EXPECT(k7.at(4) == 35);
}

void oracle_sweep() {
  for (int k = 2; k <= 5; ++k) {
    oracle::VerifyReport report = oracle::verify_combined_bound(k, 7);
    EXPECT(report.graphs == (std::uint64_t(1) << 21));
    EXPECT(report.combined_violations == 0);
    EXPECT(report.refined_violations == 0);
  }
  oracle::ExtremalTable table = oracle::build_extremal_table(3, 7);
  const oracle::ExtremalRow& row35 = table.rows[35];
  EXPECT(row35.with_clique.any);
  EXPECT(row35.with_clique.max == 35);
  EXPECT(!row35.without_clique.any || row35.without_clique.max <= 17);
}

void count_unique_reps(int level, long long max_term, const Nat& remaining,
                       long long& found) {
  if (remaining == 0) {
    ++found;
    return;
  }
  if (level < 1) return;
  for (long long t = level; t < max_term; ++t) {
    Nat c = binom(t, level);
    if (c > remaining) break;
    count_unique_reps(level - 1, t, remaining - c, found);
  }
}

void property_suites() {
  // Representation round-trip over the full stated range.
  bool round_trip_ok = true;
  for (int k = 1; k <= 6 && round_trip_ok; ++k) {
    for (long long m = 1; m <= 100000; ++m) {
      if (cascade_rep(m, k).value() != m) {
        round_trip_ok = false;
        break;
      }
    }
  }
  EXPECT(round_trip_ok);

  bool unique_ok = true;
  for (int k = 1; k <= 4 && unique_ok; ++k) {
    for (long long m = 1; m <= 2000; ++m) {
      long long found = 0;
      count_unique_reps(k, 1 << 30, Nat(m), found);
      if (found != 1) {
        unique_ok = false;
        break;
      }
    }
  }
  EXPECT(unique_ok);

  bool order_ok = true;
  bool strict_ok = true;
  for (int k = 2; k <= 6; ++k) {
    for (long long m = 1; m <= 100000; ++m) {
      Nat classical = oldbd(m, k);
      if (lgbd(m, k) > classical) order_ok = false;
      std::optional<Nat> small = smbd(m, k);
      if (small && classical > 0 && *small >= classical) strict_ok = false;
    }
  }
  EXPECT(order_ok);
  EXPECT(strict_ok);

  bool superadditive_ok = true;
  for (int k = 2; k <= 5; ++k) {
    std::vector<std::uint64_t> table(6001);
    for (long long m = 1; m <= 6000; ++m) {
      table[m] = oldbd(m, k).convert_to<std::uint64_t>();
    }
    for (long long m = 1; m <= 3000; ++m) {
      for (long long n = m; n <= 3000; ++n) {
        if (table[m + n] < table[m] + table[n]) superadditive_ok = false;
      }
    }
  }
  EXPECT(superadditive_ok);

  // Shadow identity over an assortment of shifted-valid term lists.
  bool shadow_ok = true;
  std::vector<std::vector<Nat>> lists = {
      {6}, {9, 6, 3}, {8, 5, 4}, {12, 7}, {15, 14, 13}, {10, 4, 3, 2}, {19}};
  for (const auto& terms : lists) {
    for (int k = static_cast<int>(terms.size()); k <= 6; ++k) {
      bool valid = true;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < k + 1 - static_cast<int>(i)) valid = false;
      }
      if (!valid) continue;
      Nat above = r_sum(k + 1, terms);
      if (above == 0 || above > 3000) continue;
      std::vector<Nat> fv = face_vector(revlex_complex(k + 1, above));
      Nat shadow = k < static_cast<int>(fv.size()) ? fv[k] : Nat(0);
      if (shadow != r_sum(k, terms)) shadow_ok = false;
    }
  }
  EXPECT(shadow_ok);

  bool turan_ok = true;
  for (int n = 0; n <= 12; ++n) {
    for (long long r = 1; r <= n; ++r) {
      CliqueVector counts = clique_vector(turan_graph(n, r));
      for (int k = 0; k <= n; ++k) {
        if (counts.at(k) != turan_binom(n, k, r)) turan_ok = false;
      }
    }
  }
  EXPECT(turan_ok);

  bool link_ok = true;
  TestRng rng(970);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng.range(1, 9));
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.range(0, 99) < rng.range(15, 85)) g.add_edge(u, v);
      }
    }
    int v = static_cast<int>(rng.range(0, n - 1));
    CliqueVector whole = clique_vector(g);
    CliqueVector reduced = clique_vector(g.without_vertex(v));
    CliqueVector around = clique_vector(link(g, {v}));
    for (int k = 1; k <= n; ++k) {
      if (whole.at(k) != reduced.at(k) + around.at(k - 1)) link_ok = false;
    }
  }
  EXPECT(link_ok);
}

void board_algorithm() {
  TestRng rng(20260809);
  int done = 0;
  bool all_ok = true;
  for (int attempt = 0; attempt < 4000 && done < 200; ++attempt) {
    int k = static_cast<int>(rng.range(1, 5));
    std::vector<Nat> a;
    {
      int len = static_cast<int>(rng.range(1, k));
      long long upper = 15;
      for (int i = 0; i < len; ++i) {
        int level = k - i;
        if (upper < level) break;
        long long t = rng.range(level, upper);
        a.push_back(t);
        upper = t - 1;
      }
    }
    Nat m_a = r_sum(k, a);
    Nat target = binom(a[0] + 1, k);
    Nat lo = target - m_a < 1 ? Nat(1) : target - m_a;
    Nat hi = target - 1;
    if (lo > hi) continue;
    Nat m_c = lo + Nat(rng.range(0, (hi - lo).convert_to<long long>()));
    std::vector<Nat> c = cascade_rep(m_c, k).terms;

    BoardTrace trace = run_board(k, a, c);
    Nat level_total = r_sum(k, a) + r_sum(k, c);
    Nat up_total = r_sum(k + 1, a) + r_sum(k + 1, c);
    if (Nat(static_cast<long long>(trace.moves.size())) > binom(a[0] + 1, k)) {
      all_ok = false;
    }
    for (const MoveRecord& move : trace.moves) {
      if (!board_permissible(move.post)) all_ok = false;
      if (move.rk_top_after + move.rk_bottom_after != level_total) {
        all_ok = false;
      }
      Nat up_after = move.rk1_top_after + move.rk1_bottom_after;
      if (up_after < up_total) all_ok = false;
      up_total = up_after;
      if (move.rk_top_after <= move.rk_top_before) all_ok = false;
    }
    if (!trace.strict_increase_occurred) all_ok = false;
    if (trace.final_state.top != std::vector<Nat>{a[0] + 1}) all_ok = false;
    Nat rest = level_total - binom(a[0] + 1, k);
    std::vector<Nat> expected;
    if (rest > 0) expected = cascade_rep(rest, k).terms;
    if (trace.final_state.bottom != expected) all_ok = false;
    if (binom(a[0] + 1, k + 1) + r_sum(k + 1, expected) <=
        r_sum(k + 1, a) + r_sum(k + 1, c)) {
      all_ok = false;
    }
    ++done;
  }
  EXPECT(done == 200);
  EXPECT(all_ok);
}

void ratio_statistics() {
  bool ratbound_ok = true;
  for (int k : {3, 4}) {
    for (long long m = 1; m <= 100000; ++m) {
      RatioStats stats = ratio_stats(m, k);
      if (stats.ratbound_rhs && stats.ratio_proxy > *stats.ratbound_rhs) {
        ratbound_ok = false;
      }
    }
  }
  EXPECT(ratbound_ok);

  for (unsigned long long j : {1000ULL, 10000ULL, 100000ULL}) {
    Rational f = large_win_fraction(j, 3);
    Nat num = boost::multiprecision::numerator(f);
    Nat den = boost::multiprecision::denominator(f);
    double approx = num.convert_to<double>() / den.convert_to<double>();
    std::printf("    f_j at j = %llu: %s/%s (~%.4f), reported only\n", j,
                num.str().c_str(), den.str().c_str(), approx);
  }

  EXPECT(lgbd(102, 3) > *smbd(102, 3));
  EXPECT(*smbd(70, 3) > lgbd(70, 3));
}

}  // namespace

int main() {
  criterion(1, "known-value regression", known_value_regression);
  criterion(2, "construction attainment", construction_attainment);
  criterion(3, "exhaustive sweep on seven vertices", oracle_sweep);
  criterion(4, "property suites", property_suites);
  criterion(5, "board rearrangement algorithm", board_algorithm);
  criterion(6, "ratio statistics", ratio_statistics);
  if (failures_total == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d check(s) failed\n", failures_total);
  return 1;
}
