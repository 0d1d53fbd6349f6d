#include "cliquevec/board.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cliquevec/binomial.hpp"
#include "cliquevec/representations.hpp"

namespace cliquevec {

namespace {

// Value in column c, or 0 if the row does not reach that column.
Nat entry(int k, const std::vector<Nat>& row, int c) {
  int idx = k - c;
  if (idx < 0 || idx >= static_cast<int>(row.size())) return 0;
  return row[idx];
}

bool occupied(int k, const std::vector<Nat>& row, int c) {
  int idx = k - c;
  return idx >= 0 && idx < static_cast<int>(row.size());
}

}  // namespace

Nat BoardState::top_sum(int level) const { return r_sum(level, top); }
Nat BoardState::bottom_sum(int level) const { return r_sum(level, bottom); }

const char* move_name(MoveType t) {
  switch (t) {
    case MoveType::T1: return "T1";
    case MoveType::T2: return "T2";
    case MoveType::T3: return "T3";
    case MoveType::T4: return "T4";
    case MoveType::T5: return "T5";
    case MoveType::T6: return "T6";
    case MoveType::T7: return "T7";
    case MoveType::T8: return "T8";
  }
  return "?";
}

bool row_permissible(int k, const std::vector<Nat>& row) {
  if (static_cast<int>(row.size()) > k) return false;
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    if (row[i] <= row[i + 1]) return false;
  }
  if (!row.empty()) {
    int last_column = k - static_cast<int>(row.size()) + 1;
    if (row.back() < last_column) return false;
  }
  return true;
}

bool board_permissible(const BoardState& s) {
  return s.k >= 1 && row_permissible(s.k, s.top) &&
         row_permissible(s.k, s.bottom);
}

MoveType classify_move(const BoardState& s) {
  if (s.bottom.empty()) {
    throw std::invalid_argument("classify_move: empty bottom row is terminal");
  }
  if (s.top.empty()) {
    throw InvariantError("classify_move: top row must not be empty");
  }
  int g = s.top_end();
  int h = s.bottom_end();

  // Largest shared column where the bottom entry beats the top entry.
  for (int c = s.k; c >= std::max(g, h); --c) {
    if (entry(s.k, s.bottom, c) > entry(s.k, s.top, c)) return MoveType::T2;
  }
  if (g > h) return MoveType::T1;
  const Nat& yh = s.bottom.back();
  if (yh == h) return g == 1 ? MoveType::T3 : MoveType::T4;
  const Nat& xg = s.top.back();
  // Compare slacks x_g - g and y_h - h without negative intermediates.
  if (xg + h < yh + g) return MoveType::T5;
  if (g > 1) return MoveType::T6;
  return h == 1 ? MoveType::T7 : MoveType::T8;
}

namespace {

// Replaces the rightmost entry v of `row` (in column `from`) by the run
// v-1, v-2, ..., v-(from-to), v-(from-to) filling columns from..to.
// Level sums are unchanged (telescoping Pascal identity).
void subdivide(std::vector<Nat>& row, int k, int to) {
  int from = k - static_cast<int>(row.size()) + 1;
  Nat v = row.back();
  row.pop_back();
  for (int c = from; c > to; --c) {
    row.push_back(v - (from - c + 1));
  }
  row.push_back(v - (from - to));
}

// Inverse of a subdivision: if the row ends with a doubled value at the
// end of a maximal by-ones run, replaces the run with one bumped entry.
// Returns true if a collapse happened.
bool collapse(std::vector<Nat>& row) {
  std::size_t sz = row.size();
  if (sz < 2 || row[sz - 1] != row[sz - 2]) return false;
  std::size_t start = sz - 2;
  while (start > 0 && row[start - 1] == row[start] + 1) --start;
  Nat bumped = row[start] + 1;
  row.resize(start);
  row.push_back(bumped);
  return true;
}

}  // namespace

std::pair<BoardState, MoveRecord> apply_move(const BoardState& s, MoveType t) {
  if (!board_permissible(s)) {
    throw InvariantError("apply_move: pre-state not permissible");
  }
  MoveRecord record;
  record.type = t;
  record.pre = s;
  record.rk_top_before = s.top_sum(s.k);
  record.rk_bottom_before = s.bottom_sum(s.k);
  record.rk1_top_before = s.top_sum(s.k + 1);
  record.rk1_bottom_before = s.bottom_sum(s.k + 1);

  BoardState next = s;
  int g = s.top_end();
  int h = s.bottom_end();

  switch (t) {
    case MoveType::T1: {
      // Lift the bottom row's overhang (columns g-1..h) onto the top row.
      for (int c = g - 1; c >= h; --c) {
        next.top.push_back(entry(s.k, s.bottom, c));
      }
      next.bottom.resize(s.k - g + 1);
      break;
    }
    case MoveType::T2: {
      int pivot = 0;
      for (int c = s.k; c >= std::max(g, h); --c) {
        if (entry(s.k, s.bottom, c) > entry(s.k, s.top, c)) {
          pivot = c;
          break;
        }
      }
      std::vector<Nat> top_tail(next.top.begin() + (s.k - pivot),
                                next.top.end());
      std::vector<Nat> bottom_tail(next.bottom.begin() + (s.k - pivot),
                                   next.bottom.end());
      next.top.resize(s.k - pivot);
      next.bottom.resize(s.k - pivot);
      next.top.insert(next.top.end(), bottom_tail.begin(), bottom_tail.end());
      next.bottom.insert(next.bottom.end(), top_tail.begin(), top_tail.end());
      break;
    }
    case MoveType::T3: {
      next.bottom.pop_back();
      next.top.back() += 1;
      if (collapse(next.top)) record.substeps.push_back(Substep::Collapse);
      break;
    }
    case MoveType::T4: {
      next.bottom.pop_back();
      next.top.push_back(g - 1);
      break;
    }
    case MoveType::T5: {
      // Largest column c in [g, h-1] whose subdivided value beats the top
      // entry; c = g qualifies by the move's selection condition.
      const Nat& yh = s.bottom.back();
      int pivot = -1;
      for (int c = h - 1; c >= g; --c) {
        if (yh + c > entry(s.k, s.top, c) + h) {
          pivot = c;
          break;
        }
      }
      if (pivot < 0) throw InvariantError("T5: no subdivision pivot");
      subdivide(next.bottom, s.k, pivot);
      record.substeps.push_back(Substep::Subdivide);
      // Swap the tails from the pivot column rightward; the bottom tail is
      // the single subdivided entry.
      std::vector<Nat> top_tail(next.top.begin() + (s.k - pivot),
                                next.top.end());
      Nat lifted = next.bottom.back();
      next.bottom.pop_back();
      next.top.resize(s.k - pivot);
      next.top.push_back(lifted);
      next.bottom.insert(next.bottom.end(), top_tail.begin(), top_tail.end());
      break;
    }
    case MoveType::T6: {
      subdivide(next.bottom, s.k, g - 1);
      record.substeps.push_back(Substep::Subdivide);
      next.top.push_back(next.bottom.back());
      next.bottom.pop_back();
      break;
    }
    case MoveType::T7: {
      if (next.bottom.back() == 1) {
        next.bottom.pop_back();
      } else {
        next.bottom.back() -= 1;
      }
      next.top.back() += 1;
      if (collapse(next.top)) record.substeps.push_back(Substep::Collapse);
      break;
    }
    case MoveType::T8: {
      subdivide(next.bottom, s.k, 1);
      record.substeps.push_back(Substep::Subdivide);
      if (next.bottom.back() == 1) {
        next.bottom.pop_back();
      } else {
        next.bottom.back() -= 1;
      }
      next.top.back() += 1;
      if (collapse(next.top)) record.substeps.push_back(Substep::Collapse);
      break;
    }
  }

  record.post = next;
  record.rk_top_after = next.top_sum(s.k);
  record.rk_bottom_after = next.bottom_sum(s.k);
  record.rk1_top_after = next.top_sum(s.k + 1);
  record.rk1_bottom_after = next.bottom_sum(s.k + 1);

  auto fail = [&](const char* what) {
    std::ostringstream msg;
    msg << "apply_move(" << move_name(t) << "): " << what << "\npre:\n"
        << render_ascii(s) << "post:\n" << render_ascii(next);
    throw InvariantError(msg.str());
  };
  if (!board_permissible(next)) fail("post-state not permissible");
  if (record.rk_top_after + record.rk_bottom_after !=
      record.rk_top_before + record.rk_bottom_before) {
    fail("level-k total changed");
  }
  if (record.rk1_top_after + record.rk1_bottom_after <
      record.rk1_top_before + record.rk1_bottom_before) {
    fail("level-(k+1) total decreased");
  }
  if (record.rk_top_after <= record.rk_top_before) {
    fail("top row level-k sum did not increase");
  }
  return {next, record};
}

BoardTrace run_board(int k, const std::vector<Nat>& a_terms,
                     const std::vector<Nat>& c_terms) {
  if (k < 1) throw std::invalid_argument("run_board: k must be >= 1");
  if (a_terms.empty()) {
    throw std::invalid_argument("run_board: top row must be non-empty");
  }
  if (!row_permissible(k, a_terms) || !row_permissible(k, c_terms)) {
    throw std::invalid_argument("run_board: rows must be cascade terms");
  }
  if (!c_terms.empty() && c_terms[0] > a_terms[0]) {
    throw std::invalid_argument("run_board: bottom leading term exceeds top");
  }
  const Nat a_lead = a_terms[0];
  const Nat total = r_sum(k, a_terms) + r_sum(k, c_terms);
  const Nat target = binom(a_lead + 1, k);
  if (total < target) {
    throw std::invalid_argument(
        "run_board: totals too small to reach the target configuration");
  }

  BoardTrace trace;
  trace.initial = BoardState{k, a_terms, c_terms};
  BoardState state = trace.initial;
  Nat steps = 0;
  while (state.top[0] <= a_lead) {
    if (steps >= target) {
      throw InvariantError("run_board: step bound exceeded");
    }
    MoveType t = classify_move(state);
    auto [next, record] = apply_move(state, t);
    if (record.strict_level_up_increase()) {
      trace.strict_increase_occurred = true;
    }
    trace.moves.push_back(std::move(record));
    state = std::move(next);
    steps += 1;
  }
  trace.final_state = state;

  // Terminal shape: the top row is the single entry a_lead + 1 and the
  // bottom row carries the cascade of the remaining total.
  if (state.top.size() != 1 || state.top[0] != a_lead + 1) {
    throw InvariantError("run_board: terminal top row malformed");
  }
  Nat rest = total - target;
  std::vector<Nat> expected_bottom;
  if (rest > 0) expected_bottom = cascade_rep(rest, k).terms;
  if (state.bottom != expected_bottom) {
    throw InvariantError("run_board: terminal bottom row malformed");
  }
  if (!trace.strict_increase_occurred) {
    throw InvariantError("run_board: no strictly increasing move occurred");
  }
  // The algebraic conclusion, recomputed from scratch.
  Nat lhs = binom(a_lead + 1, k + 1) + r_sum(k + 1, expected_bottom);
  Nat rhs = r_sum(k + 1, a_terms) + r_sum(k + 1, c_terms);
  if (lhs <= rhs) {
    throw InvariantError("run_board: strict inequality failed");
  }
  return trace;
}

std::string render_ascii(const BoardState& s) {
  std::vector<std::string> top_cells(s.k), bottom_cells(s.k), headers(s.k);
  std::size_t width = 1;
  for (int c = s.k; c >= 1; --c) {
    int i = s.k - c;
    headers[i] = std::to_string(c);
    top_cells[i] = occupied(s.k, s.top, c) ? entry(s.k, s.top, c).str() : ".";
    bottom_cells[i] =
        occupied(s.k, s.bottom, c) ? entry(s.k, s.bottom, c).str() : ".";
    width = std::max({width, headers[i].size(), top_cells[i].size(),
                      bottom_cells[i].size()});
  }
  auto line = [&](const char* label, const std::vector<std::string>& cells) {
    std::ostringstream out;
    out << label;
    for (const std::string& cell : cells) {
      out << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
    return out.str();
  };
  return line("col:", headers) + line("top:", top_cells) +
         line("bot:", bottom_cells);
}

}  // namespace cliquevec
