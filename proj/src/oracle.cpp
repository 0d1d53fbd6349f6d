#include "cliquevec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <thread>

#include "cliquevec/bounds.hpp"
#include "cliquevec/graph_io.hpp"
#include "cliquevec/representations.hpp"

namespace cliquevec::oracle {

namespace {

struct EdgeSlot {
  int u, v;
};

std::vector<EdgeSlot> edge_slots(int n) {
  std::vector<EdgeSlot> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.push_back({u, v});
  }
  return slots;
}

SmallGraph graph_from_code(int n, const std::vector<EdgeSlot>& slots,
                           std::uint64_t code) {
  SmallGraph g;
  g.n = n;
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if (code & (std::uint64_t(1) << e)) {
      g.adj[slots[e].u] |= static_cast<std::uint8_t>(1u << slots[e].v);
      g.adj[slots[e].v] |= static_cast<std::uint8_t>(1u << slots[e].u);
    }
  }
  return g;
}

bool degree_sorted(const SmallGraph& g) {
  for (int v = 0; v + 1 < g.n; ++v) {
    if (std::popcount(static_cast<unsigned>(g.adj[v])) <
        std::popcount(static_cast<unsigned>(g.adj[v + 1]))) {
      return false;
    }
  }
  return true;
}

void count_rec(const SmallGraph& g, std::uint8_t cand, int depth,
               SmallCliqueCounts& out) {
  while (cand != 0) {
    int v = std::countr_zero(static_cast<unsigned>(cand));
    cand = static_cast<std::uint8_t>(cand & (cand - 1));
    out.counts[depth] += 1;
    if (depth > out.omega) out.omega = depth;
    std::uint8_t next = static_cast<std::uint8_t>(cand & g.adj[v]);
    if (next != 0) count_rec(g, next, depth + 1, out);
  }
}

void check_cap(int n, bool allow_large) {
  if (n < 0 || n > kHardVertexCap || (n > kDefaultVertexCap && !allow_large)) {
    throw ResourceError("oracle: vertex count beyond the enumeration cap");
  }
}

// Per-m bound tables in machine words; every count at this scale is tiny.
struct BoundTables {
  std::vector<std::uint64_t> combined;
  std::vector<std::uint64_t> large;
  std::vector<std::uint64_t> small;  // meaningful only where defined
  std::vector<char> small_defined;
  std::vector<int> lead;  // leading cascade term of m

  explicit BoundTables(int k, std::uint64_t m_max) {
    combined.resize(m_max + 1);
    large.resize(m_max + 1);
    small.resize(m_max + 1);
    small_defined.resize(m_max + 1, 0);
    lead.resize(m_max + 1, 0);
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      BoundReport report = combined_bound(Nat(m), k);
      combined[m] = report.combined.convert_to<std::uint64_t>();
      large[m] = report.large_clique.convert_to<std::uint64_t>();
      if (report.small_clique) {
        small[m] = report.small_clique->convert_to<std::uint64_t>();
        small_defined[m] = 1;
      }
      lead[m] = static_cast<int>(cascade_leading_term(Nat(m), k));
    }
  }
};

void update_cell(OracleCell& cell, std::uint64_t value, std::uint64_t code) {
  if (!cell.any || Nat(value) > cell.max ||
      (Nat(value) == cell.max && code < cell.witness_code)) {
    cell.any = true;
    cell.max = value;
    cell.witness_code = code;
  }
}

void merge_cell(OracleCell& into, const OracleCell& from) {
  if (!from.any) return;
  if (!into.any || from.max > into.max ||
      (from.max == into.max && from.witness_code < into.witness_code)) {
    into = from;
  }
}

}  // namespace

Graph SmallGraph::to_graph() const {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u] & (1u << v)) g.add_edge(u, v);
    }
  }
  return g;
}

SmallCliqueCounts small_clique_counts(const SmallGraph& g) {
  SmallCliqueCounts out;
  out.counts[0] = 1;
  std::uint8_t all = static_cast<std::uint8_t>((1u << g.n) - 1u);
  if (g.n > 0) count_rec(g, all, 1, out);
  return out;
}

std::uint64_t enumerate_graphs(
    int n, const std::function<void(const SmallGraph&)>& consumer,
    bool allow_large, bool prune) {
  check_cap(n, allow_large);
  std::vector<EdgeSlot> slots = edge_slots(n);
  std::uint64_t total = std::uint64_t(1) << slots.size();
  std::uint64_t visited = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    SmallGraph g = graph_from_code(n, slots, code);
    if (prune && !degree_sorted(g)) continue;
    ++visited;
    consumer(g);
  }
  return visited;
}

std::string ExtremalTable::to_csv() const {
  std::ostringstream out;
  out << "m,max_all,max_with_clique,max_without,lgbd,smbd,oldbd,witness6\n";
  for (std::size_t m = 0; m < rows.size(); ++m) {
    const ExtremalRow& row = rows[m];
    out << m << ',';
    if (row.all.any) out << row.all.max;
    out << ',';
    if (row.with_clique.any) out << row.with_clique.max;
    out << ',';
    if (row.without_clique.any) out << row.without_clique.max;
    out << ',';
    if (m > 0) {
      out << large_clique_bound(Nat(m), k) << ',';
      std::optional<Nat> small = small_clique_bound(Nat(m), k);
      if (small) out << *small;
      out << ',' << kruskal_katona_bound(Nat(m), k);
    } else {
      out << "0,0,0";
    }
    out << ',' << row.all.witness6 << '\n';
  }
  return out.str();
}

ExtremalTable build_extremal_table(int k, int n_max, int threads,
                                   bool allow_large) {
  if (k < 2) throw std::invalid_argument("build_extremal_table: k must be >= 2");
  check_cap(n_max, allow_large);
  std::vector<EdgeSlot> slots = edge_slots(n_max);
  std::uint64_t total = std::uint64_t(1) << slots.size();
  std::uint64_t m_max = binom(Nat(n_max), k).convert_to<std::uint64_t>();
  BoundTables bounds(k, m_max);

  threads = std::max(1, threads);
  std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::vector<ExtremalRow>> partial(
      threads, std::vector<ExtremalRow>(m_max + 1));

  auto worker = [&](int t) {
    std::uint64_t begin = chunk * t;
    std::uint64_t end = std::min(total, begin + chunk);
    std::vector<ExtremalRow>& rows = partial[t];
    for (std::uint64_t code = begin; code < end; ++code) {
      SmallGraph g = graph_from_code(n_max, slots, code);
      SmallCliqueCounts counts = small_clique_counts(g);
      std::uint64_t m = counts.counts[k];
      std::uint64_t above = counts.counts[k + 1];
      ExtremalRow& row = rows[m];
      update_cell(row.all, above, code);
      if (m > 0) {
        if (counts.omega >= bounds.lead[m]) {
          update_cell(row.with_clique, above, code);
        } else {
          update_cell(row.without_clique, above, code);
        }
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  ExtremalTable table;
  table.k = k;
  table.n_max = n_max;
  table.rows.resize(m_max + 1);
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    for (int t = 0; t < threads; ++t) {
      merge_cell(table.rows[m].all, partial[t][m].all);
      merge_cell(table.rows[m].with_clique, partial[t][m].with_clique);
      merge_cell(table.rows[m].without_clique, partial[t][m].without_clique);
    }
    ExtremalRow& row = table.rows[m];
    for (OracleCell* cell : {&row.all, &row.with_clique, &row.without_clique}) {
      if (cell->any) {
        cell->witness6 =
            to_graph6(graph_from_code(n_max, slots, cell->witness_code).to_graph());
      }
    }
    if (m > 0 && row.with_clique.any &&
        row.with_clique.max == Nat(bounds.large[m])) {
      row.extremal_exact = true;
    }
  }
  return table;
}

VerifyReport verify_combined_bound(int k, int n_max, int threads,
                                 bool allow_large) {
  return verify_table(build_extremal_table(k, n_max, threads, allow_large));
}

VerifyReport verify_table(const ExtremalTable& table) {
  int k = table.k;
  std::uint64_t m_max = table.rows.size() - 1;
  BoundTables bounds(k, m_max);

  VerifyReport report;
  report.k = k;
  report.n_max = table.n_max;
  report.graphs = std::uint64_t(1) << edge_slots(table.n_max).size();
  for (std::uint64_t m = 0; m <= m_max; ++m) {
    const ExtremalRow& row = table.rows[m];
    if (!row.all.any) continue;
    ++report.rows_nonempty;
    std::uint64_t combined = m == 0 ? 0 : bounds.combined[m];
    if (row.all.max > Nat(combined)) {
      ++report.combined_violations;
      report.counterexamples.push_back(row.all.witness6);
    }
    if (row.all.max == Nat(combined)) ++report.rows_attaining_bound;
    if (m == 0) continue;
    if (row.with_clique.any && row.with_clique.max > Nat(bounds.large[m])) {
      ++report.refined_violations;
      report.counterexamples.push_back(row.with_clique.witness6);
    }
    if (row.without_clique.any) {
      // A graph without a clique on the leading term only exists where the
      // small bound is defined (otherwise every graph with m k-cliques has
      // one), so an undefined bound here is itself a violation.
      if (!bounds.small_defined[m] ||
          row.without_clique.max > Nat(bounds.small[m])) {
        ++report.refined_violations;
        report.counterexamples.push_back(row.without_clique.witness6);
      }
    }
  }
  return report;
}

NonexistenceResult verify_nonexistence(int k, int i, const Nat& m,
                                       const Nat& target, int n_max,
                                       bool allow_large) {
  NonexistenceResult result;
  if (multistep_bound(m, k, i) < target) {
    result.certified_by_bound = true;
    return result;
  }
  check_cap(n_max, allow_large);
  if (m > binom(Nat(n_max), k) || target > binom(Nat(n_max), k + i)) {
    return result;  // nothing at this scale can match
  }
  std::uint64_t m64 = m.convert_to<std::uint64_t>();
  std::uint64_t target64 = target.convert_to<std::uint64_t>();
  int above = k + i;
  enumerate_graphs(
      n_max,
      [&](const SmallGraph& g) {
        if (result.exists) return;
        SmallCliqueCounts counts = small_clique_counts(g);
        std::uint64_t high =
            above <= kHardVertexCap ? counts.counts[above] : 0;
        std::uint64_t base = k <= kHardVertexCap ? counts.counts[k] : 0;
        if (base == m64 && high == target64) {
          result.exists = true;
          result.witness6 = to_graph6(g.to_graph());
        }
      },
      allow_large);
  return result;
}

}  // namespace cliquevec::oracle
