#include "cliquevec/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cliquevec/binomial.hpp"
#include "cliquevec/bounds.hpp"
#include "cliquevec/representations.hpp"

namespace cliquevec {

bool revlex_precedes(const Face& a, const Face& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("revlex_precedes: sets must have equal cardinality");
  }
  // Compare largest elements first, skipping the common tail.
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    if (*ia != *ib) return *ia < *ib;
    ++ia;
    ++ib;
  }
  throw std::invalid_argument("revlex_precedes: sets must be distinct");
}

Face revlex_unrank(const Nat& t, int k) {
  if (t < 0) throw std::invalid_argument("revlex_unrank: rank must be >= 0");
  if (k < 1) throw std::invalid_argument("revlex_unrank: k must be >= 1");
  Face face(k);
  Nat rest = t;
  for (int level = k; level >= 1; --level) {
    // Largest c with C(c, level) <= rest; the element is c + 1.
    Nat c;
    if (rest == 0) {
      c = level - 1;
    } else {
      c = cascade_leading_term(rest, level);
    }
    rest -= binom(c, level);
    face[level - 1] = static_cast<int>(c) + 1;
  }
  return face;
}

Nat revlex_rank(const Face& f) {
  Nat rank = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    rank += binom(Nat(f[i]) - 1, static_cast<long long>(i) + 1);
  }
  return rank;
}

std::vector<Face> revlex_faces(int k, const Nat& m) {
  if (m < 0) throw std::invalid_argument("revlex_faces: m must be >= 0");
  if (m > kMaxExplicitFaces) {
    throw ResourceError("revlex_faces: face count exceeds the explicit cap");
  }
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(m));
  for (Nat t = 0; t < m; ++t) {
    faces.push_back(revlex_unrank(t, k));
  }
  return faces;
}

Complex revlex_complex(int k, const Nat& m) {
  return Complex{revlex_faces(k, m)};
}

bool is_r_permissible(const Face& f, long long r) {
  if (r < 1) throw std::invalid_argument("is_r_permissible: r must be >= 1");
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if ((f[j] - f[i]) % r == 0) return false;
    }
  }
  return true;
}

namespace {

// Visits k-subsets of {1, 2, ...} in rev-lex order, pruning to sets whose
// residues mod r are pairwise distinct, until the consumer declines.
// Elements are chosen largest-first; rev-lex sorts by maximum first, then
// rev-lex on the rest.
class PermissibleGenerator {
 public:
  PermissibleGenerator(int k, long long r) : k_(k), r_(r) {}

  template <typename F>
  void run(F&& consume) {
    Face chosen;
    for (int top = k_;; ++top) {
      chosen.clear();
      chosen.push_back(top);
      if (!descend(chosen, consume)) return;
    }
  }

 private:
  // Extends `chosen` (largest elements first) with all valid smaller
  // elements; emits when full. Returns false once the consumer stops.
  template <typename F>
  bool descend(Face& chosen, F&& consume) {
    if (static_cast<int>(chosen.size()) == k_) {
      Face face(chosen.rbegin(), chosen.rend());
      return consume(face);
    }
    int remaining = k_ - static_cast<int>(chosen.size());
    for (int v = remaining; v <= chosen.back() - 1; ++v) {
      bool clash = false;
      for (int u : chosen) {
        if ((u - v) % r_ == 0) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      chosen.push_back(v);
      if (!descend(chosen, consume)) return false;
      chosen.pop_back();
    }
    return true;
  }

  int k_;
  long long r_;
};

}  // namespace

std::vector<Face> colored_revlex_faces(int k, const Nat& m, long long r) {
  if (k < 1) throw std::invalid_argument("colored_revlex_faces: k must be >= 1");
  if (r < k) throw std::invalid_argument("colored_revlex_faces: requires r >= k");
  if (m < 0) throw std::invalid_argument("colored_revlex_faces: m must be >= 0");
  if (m > kMaxExplicitFaces) {
    throw ResourceError("colored_revlex_faces: face count exceeds the explicit cap");
  }
  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(m));
  if (m == 0) return faces;
  PermissibleGenerator gen(k, r);
  gen.run([&](const Face& f) {
    faces.push_back(f);
    return Nat(static_cast<long long>(faces.size())) < m;
  });
  return faces;
}

Complex colored_revlex_complex(int k, const Nat& m, long long r) {
  return Complex{colored_revlex_faces(k, m, r)};
}

Complex multi_revlex_complex(const std::vector<std::pair<int, Nat>>& specs) {
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    if (specs[i].first >= specs[i + 1].first) {
      throw std::invalid_argument("multi_revlex_complex: dimensions must increase");
    }
  }
  // Each count must fit under the iterated shadow bound of its predecessor,
  // or the union gains unwanted lower faces.
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    Nat allowed = specs[i].second;
    for (int level = specs[i].first; level < specs[i + 1].first; ++level) {
      allowed = kruskal_katona_bound(allowed, level);
    }
    if (specs[i + 1].second > allowed) {
      throw std::invalid_argument(
          "multi_revlex_complex: face counts violate the shadow bounds");
    }
  }

  std::vector<Face> all;
  for (const auto& [dim, count] : specs) {
    std::vector<Face> faces = revlex_faces(dim, count);
    all.insert(all.end(), faces.begin(), faces.end());
  }
  // Drop faces contained in a later (larger) facet.
  std::vector<Face> facets;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (all[j].size() <= all[i].size()) continue;
      dominated = std::includes(all[j].begin(), all[j].end(), all[i].begin(),
                                all[i].end());
    }
    if (!dominated) facets.push_back(all[i]);
  }
  return Complex{facets};
}

std::vector<Nat> face_vector(const Complex& c) {
  std::set<Face> closure;
  closure.insert(Face{});
  // Downward closure by peeling one element at a time.
  std::vector<Face> stack(c.facets.begin(), c.facets.end());
  while (!stack.empty()) {
    Face f = stack.back();
    stack.pop_back();
    if (!closure.insert(f).second) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face sub;
      sub.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != i) sub.push_back(f[j]);
      }
      if (!closure.count(sub)) stack.push_back(sub);
    }
  }
  std::size_t max_size = 0;
  for (const Face& f : closure) max_size = std::max(max_size, f.size());
  std::vector<Nat> counts(max_size + 1, Nat(0));
  for (const Face& f : closure) counts[f.size()] += 1;
  return counts;
}

std::string to_facet_text(const Complex& c) {
  std::vector<Face> sorted = c.facets;
  std::sort(sorted.begin(), sorted.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return revlex_precedes(a, b);
  });
  std::ostringstream out;
  for (const Face& f : sorted) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f[i];
    }
    out << '\n';
  }
  return out.str();
}

Complex from_facet_text(std::string_view text) {
  Complex c;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    Face f;
    int v;
    while (fields >> v) {
      if (v < 1) throw std::invalid_argument("from_facet_text: labels must be >= 1");
      f.push_back(v);
    }
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw std::invalid_argument("from_facet_text: labels must strictly increase");
    }
    if (!f.empty()) c.facets.push_back(f);
  }
  return c;
}

}  // namespace cliquevec
