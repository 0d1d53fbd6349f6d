#include "cliquevec/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliquevec {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: vertex count must be >= 0");
  if (n > kMaxExplicitVertices) {
    throw ResourceError("Graph: vertex count exceeds the explicit cap");
  }
  adj_.assign(n, boost::dynamic_bitset<>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                " out of range");
  }
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (const auto& row : adj_) twice += static_cast<long long>(row.count());
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[u].test(v);
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph sub(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (keep[i] == keep[j]) {
        throw std::invalid_argument("Graph::induced: duplicate vertex");
      }
      if (adj_[keep[i]].test(keep[j])) {
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return sub;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph result(n_ + other.n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adj_[u].test(v)) result.add_edge(u, v);
    }
  }
  for (int u = 0; u < other.n_; ++u) {
    for (int v = u + 1; v < other.n_; ++v) {
      if (other.adj_[u].test(v)) result.add_edge(n_ + u, n_ + v);
    }
  }
  return result;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

namespace {

class CliqueCounter {
 public:
  CliqueCounter(const Graph& g, int limit)
      : g_(g), limit_(limit), counts_(limit + 1, Nat(0)) {
    scratch_.assign(limit + 1, boost::dynamic_bitset<>(g.vertex_count()));
  }

  std::vector<Nat> run() {
    counts_[0] = 1;
    if (limit_ == 0 || g_.vertex_count() == 0) return counts_;
    scratch_[1].set();
    extend(1);
    return counts_;
  }

 private:
  // scratch_[d] holds the candidates extending the current (d-1)-clique.
  // Consuming candidates in ascending order keeps the remaining set equal
  // to "candidates above v", so each clique is visited exactly once.
  void extend(int depth) {
    auto& cand = scratch_[depth];
    std::size_t v = cand.find_first();
    while (v != boost::dynamic_bitset<>::npos) {
      cand.reset(v);
      counts_[depth] += 1;
      if (depth < limit_) {
        scratch_[depth + 1] = cand;
        scratch_[depth + 1] &= g_.neighbors(static_cast<int>(v));
        if (scratch_[depth + 1].any()) extend(depth + 1);
      }
      v = cand.find_next(v);
    }
  }

  const Graph& g_;
  int limit_;
  std::vector<Nat> counts_;
  std::vector<boost::dynamic_bitset<>> scratch_;
};

}  // namespace

CliqueVector clique_vector(const Graph& g, std::optional<int> max_size) {
  if (!max_size && g.vertex_count() > kEnumerationCap) {
    throw ResourceError(
        "clique_vector: graph exceeds the enumeration cap; pass max_size");
  }
  int limit = max_size ? std::min(*max_size, g.vertex_count())
                       : g.vertex_count();
  if (limit < 0) throw std::invalid_argument("clique_vector: negative max_size");
  CliqueVector result{CliqueCounter(g, limit).run()};
  if (!max_size) {
    while (result.counts.size() > 1 && result.counts.back() == 0) {
      result.counts.pop_back();
    }
  }
  return result;
}

Graph link(const Graph& g, const std::vector<int>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.has_edge(clique[i], clique[j])) {
        throw std::invalid_argument("link: the given vertices are not a clique");
      }
    }
  }
  boost::dynamic_bitset<> common(g.vertex_count());
  common.set();
  for (int v : clique) {
    common &= g.neighbors(v);
  }
  std::vector<int> keep;
  for (std::size_t v = common.find_first(); v != boost::dynamic_bitset<>::npos;
       v = common.find_next(v)) {
    keep.push_back(static_cast<int>(v));
  }
  return g.induced(keep);
}

std::vector<long long> turan_parts(long long n, long long r) {
  if (r < 1) throw std::invalid_argument("turan_parts: r must be >= 1");
  if (n < 0) throw std::invalid_argument("turan_parts: n must be >= 0");
  long long q = n / r;
  long long t = n % r;
  std::vector<long long> parts(r, q);
  for (long long i = 0; i < t; ++i) parts[i] = q + 1;
  return parts;
}

Graph turan_graph(long long n, long long r) {
  if (n > kMaxExplicitVertices) {
    throw ResourceError("turan_graph: vertex count exceeds the explicit cap");
  }
  std::vector<long long> parts = turan_parts(n, r);
  Graph g(static_cast<int>(n));
  std::vector<int> part_of(n);
  int v = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (long long i = 0; i < parts[p]; ++i) part_of[v++] = static_cast<int>(p);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace cliquevec
