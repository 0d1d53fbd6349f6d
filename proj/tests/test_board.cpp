#include "cliquevec/board.hpp"

#include "cliquevec/binomial.hpp"
#include "cliquevec/representations.hpp"
#include "doctest.h"
#include "test_rng.hpp"

using namespace cliquevec;

namespace {

std::vector<Nat> random_cascade_terms(TestRng& rng, int k, long long max_term) {
  int len = static_cast<int>(rng.range(1, k));
  std::vector<Nat> terms;
  long long upper = max_term;
  for (int i = 0; i < len; ++i) {
    int level = k - i;
    if (upper < level) break;
    long long t = rng.range(level, upper);
    terms.push_back(t);
    upper = t - 1;
  }
  return terms;
}

void check_trace(int k, const std::vector<Nat>& a, const std::vector<Nat>& c,
                 const BoardTrace& trace) {
  Nat level_total = r_sum(k, a) + r_sum(k, c);
  Nat up_total = r_sum(k + 1, a) + r_sum(k + 1, c);
  REQUIRE(Nat(static_cast<long long>(trace.moves.size())) <=
          binom(a[0] + 1, k));
  for (const MoveRecord& move : trace.moves) {
    REQUIRE(board_permissible(move.pre));
    REQUIRE(board_permissible(move.post));
    REQUIRE(move.rk_top_after + move.rk_bottom_after == level_total);
    Nat up_after = move.rk1_top_after + move.rk1_bottom_after;
    REQUIRE(up_after >= up_total);
    up_total = up_after;
    REQUIRE(move.rk_top_after > move.rk_top_before);
  }
  REQUIRE(trace.strict_increase_occurred);
  // Terminal shape: single bumped lead on top, cascade of the rest below.
  REQUIRE(trace.final_state.top == std::vector<Nat>{a[0] + 1});
  Nat rest = level_total - binom(a[0] + 1, k);
  std::vector<Nat> expected;
  if (rest > 0) expected = cascade_rep(rest, k).terms;
  REQUIRE(trace.final_state.bottom == expected);
  // The strict inequality, recomputed from the raw inputs.
  REQUIRE(binom(a[0] + 1, k + 1) + r_sum(k + 1, expected) >
          r_sum(k + 1, a) + r_sum(k + 1, c));
}

}  // namespace

TEST_CASE("worked two-column run") {
  // a = [3], c = [3] at k = 2: one lift move, then one clearing move.
  BoardTrace trace = run_board(2, {3}, {3});
  REQUIRE(trace.moves.size() == 2);
  CHECK(trace.moves[0].type == MoveType::T6);
  CHECK(trace.moves[0].post.top == std::vector<Nat>{3, 2});
  CHECK(trace.moves[0].post.bottom == std::vector<Nat>{2});
  CHECK(trace.moves[1].type == MoveType::T3);
  CHECK(trace.final_state.top == std::vector<Nat>{4});
  CHECK(trace.final_state.bottom.empty());
  // Level-3 total rises from 2 to 4, strictly, at the clearing move.
  CHECK(trace.moves[0].rk1_top_before + trace.moves[0].rk1_bottom_before == 2);
  CHECK(trace.moves[1].rk1_top_after + trace.moves[1].rk1_bottom_after == 4);
  check_trace(2, {3}, {3}, trace);
}

TEST_CASE("worked three-column run") {
  BoardTrace trace = run_board(3, {4, 3}, {4, 2});
  CHECK(trace.final_state.top == std::vector<Nat>{5});
  CHECK(trace.final_state.bottom == std::vector<Nat>{3, 2});
  check_trace(3, {4, 3}, {4, 2}, trace);
}

TEST_CASE("single-column run uses the unit shift") {
  BoardTrace trace = run_board(1, {3}, {2});
  REQUIRE(trace.moves.size() == 1);
  CHECK(trace.moves[0].type == MoveType::T7);
  CHECK(trace.final_state.top == std::vector<Nat>{4});
  CHECK(trace.final_state.bottom == std::vector<Nat>{1});
  check_trace(1, {3}, {2}, trace);
}

TEST_CASE("classification on fixed states") {
  // Shared-column violation wins over everything else.
  CHECK(classify_move(BoardState{3, {4, 2}, {4, 3}}) == MoveType::T2);
  // Bottom overhang gets lifted.
  CHECK(classify_move(BoardState{3, {5}, {4, 3}}) == MoveType::T1);
  // Minimal bottom entry: clear it and feed the top.
  CHECK(classify_move(BoardState{2, {3, 1}, {2}}) == MoveType::T3);
  CHECK(classify_move(BoardState{2, {3}, {2}}) == MoveType::T4);
  CHECK(classify_move(BoardState{2, {3}, {3}}) == MoveType::T6);
  // Empty bottom row is terminal.
  CHECK_THROWS_AS(classify_move(BoardState{2, {3}, {}}), std::invalid_argument);
}

TEST_CASE("subdivide-and-swap move") {
  BoardState s{3, {6, 2}, {5}};
  REQUIRE(classify_move(s) == MoveType::T5);
  auto [after, record] = apply_move(s, MoveType::T5);
  REQUIRE(record.substeps == std::vector<Substep>{Substep::Subdivide});
  CHECK(after.top == std::vector<Nat>{6, 4});
  CHECK(after.bottom == std::vector<Nat>{4, 2});
}

TEST_CASE("subdivide-shift-collapse move") {
  // Subdividing 5 from column 3 down to column 1 yields 4, 3, 3; the unit
  // shift then doubles the top tail and a full-width collapse fires.
  BoardState s{3, {6, 5, 4}, {5}};
  REQUIRE(classify_move(s) == MoveType::T8);
  auto [after, record] = apply_move(s, MoveType::T8);
  REQUIRE(record.substeps ==
          std::vector<Substep>{Substep::Subdivide, Substep::Collapse});
  CHECK(after.top == std::vector<Nat>{7});
  CHECK(after.bottom == std::vector<Nat>{4, 3, 2});
}

TEST_CASE("preconditions are enforced") {
  // Totals too small: 3 + 1 < C(4, 2).
  CHECK_THROWS_AS(run_board(2, {3}, {2}), std::invalid_argument);
  // Empty bottom row can never reach the target.
  CHECK_THROWS_AS(run_board(3, {5, 3}, {}), std::invalid_argument);
  // Bottom lead exceeds top lead.
  CHECK_THROWS_AS(run_board(2, {3}, {4}), std::invalid_argument);
  // Not cascade-shaped.
  CHECK_THROWS_AS(run_board(2, {3, 3}, {3}), std::invalid_argument);
}

TEST_CASE("random valid runs satisfy every move condition") {
  TestRng rng(20260809);
  int done = 0;
  for (int attempt = 0; attempt < 4000 && done < 220; ++attempt) {
    int k = static_cast<int>(rng.range(1, 5));
    std::vector<Nat> a = random_cascade_terms(rng, k, 15);
    Nat m_a = r_sum(k, a);
    Nat target = binom(a[0] + 1, k);
    Nat lo = target - m_a < 1 ? Nat(1) : target - m_a;
    Nat hi = target - 1;
    if (lo > hi) continue;
    Nat m_c = lo + Nat(rng.range(0, (hi - lo).convert_to<long long>()));
    std::vector<Nat> c = cascade_rep(m_c, k).terms;
    BoardTrace trace = run_board(k, a, c);
    check_trace(k, a, c, trace);
    ++done;
  }
  CHECK(done == 220);
}

TEST_CASE("ascii rendering") {
  std::string art = render_ascii(BoardState{3, {4, 3}, {4}});
  CHECK(art ==
        "col: 3 2 1\n"
        "top: 4 3 .\n"
        "bot: 4 . .\n");
}
