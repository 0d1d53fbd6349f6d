#pragma once

#include <string>
#include <vector>

#include "cliquevec/nat.hpp"

namespace cliquevec {

// Two-row board with columns k (leftmost) down to 1 (rightmost). Each row
// is stored leftmost-first: row[i] sits in column k - i, so rows are
// anchored at column k and occupy a contiguous prefix of columns. A row is
// permissible when its entries strictly decrease left to right and the
// rightmost entry in column c is at least c (which forces every entry to
// be at least its column). A permissible row read off the board is exactly
// a cascade representation of its row sum.
struct BoardState {
  int k = 0;
  std::vector<Nat> top;
  std::vector<Nat> bottom;

  // Rightmost occupied column of a row (rows are never empty when asked).
  int top_end() const { return k - static_cast<int>(top.size()) + 1; }
  int bottom_end() const { return k - static_cast<int>(bottom.size()) + 1; }

  Nat top_sum(int level) const;     // r_level over the top row
  Nat bottom_sum(int level) const;  // r_level over the bottom row
};

enum class MoveType { T1, T2, T3, T4, T5, T6, T7, T8 };
enum class Substep { Subdivide, Collapse };

const char* move_name(MoveType t);

struct MoveRecord {
  MoveType type = MoveType::T1;
  BoardState pre;
  BoardState post;
  std::vector<Substep> substeps;
  Nat rk_top_before, rk_bottom_before, rk_top_after, rk_bottom_after;
  Nat rk1_top_before, rk1_bottom_before, rk1_top_after, rk1_bottom_after;
  // Per-move conditions: the level-k total is conserved, the level-(k+1)
  // total never drops, and the top row's level-k sum strictly rises.
  bool strict_level_up_increase() const {
    return rk1_top_after + rk1_bottom_after > rk1_top_before + rk1_bottom_before;
  }
};

struct BoardTrace {
  BoardState initial;
  BoardState final_state;
  std::vector<MoveRecord> moves;
  bool strict_increase_occurred = false;
};

bool row_permissible(int k, const std::vector<Nat>& row);
bool board_permissible(const BoardState& s);

// The unique move the selection flowchart picks for a non-terminal state:
//   some shared column has bottom > top      -> T2 (swap tails there)
//   bottom reaches further right than top    -> T1 (lift the overhang)
//   bottom's last entry is minimal           -> T3 (top at column 1) / T4
//   bottom's slack exceeds top's             -> T5 (subdivide + swap)
//   top not at column 1                      -> T6 (subdivide + lift one)
//   both rows at column 1                    -> T7 (shift one unit)
//   otherwise                                -> T8 (subdivide + T7)
// Throws std::invalid_argument if the bottom row is empty (terminal) and
// InvariantError if no branch matches (cannot happen for permissible
// states).
MoveType classify_move(const BoardState& s);

// Applies the given move (which must be classify_move(s)) and validates
// the move conditions, throwing InvariantError with context on failure.
std::pair<BoardState, MoveRecord> apply_move(const BoardState& s, MoveType t);

// Runs the rearrangement until the top row's column-k entry exceeds its
// starting value. Starting rows are the cascade terms a (top) and c
// (bottom); requires c's leading term <= a's and
// r_k(a) + r_k(c) >= C(a_k + 1, k), else the terminal configuration is
// unreachable and the run refuses to start. On success the top row ends
// as the single entry a_k + 1 and the bottom row is the cascade of the
// rest; the step count never exceeds C(a_k + 1, k), and the level-(k+1)
// total strictly exceeded its starting value at least once.
BoardTrace run_board(int k, const std::vector<Nat>& a_terms,
                     const std::vector<Nat>& c_terms);

// Fixed-width two-row rendering with column headers.
std::string render_ascii(const BoardState& s);

}  // namespace cliquevec
