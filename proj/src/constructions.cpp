#include "cliquevec/constructions.hpp"

#include <stdexcept>

#include "cliquevec/binomial.hpp"
#include "cliquevec/bounds.hpp"
#include "cliquevec/representations.hpp"

namespace cliquevec {

namespace {

long long to_small(const Nat& value, const char* what) {
  if (value > kMaxExplicitVertices) {
    throw ResourceError(std::string(what) + " exceeds the explicit cap");
  }
  return value.convert_to<long long>();
}

// Appends `blocks` disjoint K_k components, then enumerates the result
// against the plan whenever it fits under the enumeration cap.
BuiltConstruction finish(ConstructionPlan plan, Graph core, const Nat& m,
                         int k) {
  Nat deficit = m - plan.predicted_ck;
  if (deficit < 0) {
    throw InvariantError("construction: clique count overshoots the target");
  }
  long long blocks = to_small(deficit, "construction padding");
  if (core.vertex_count() + blocks * k > kMaxExplicitVertices) {
    throw ResourceError("construction graph exceeds the explicit cap");
  }
  plan.padding_blocks = blocks;
  Graph padded = core;
  for (long long b = 0; b < blocks; ++b) {
    padded = padded.disjoint_union(Graph::complete(k));
  }
  plan.predicted_ck = m;
  if (padded.vertex_count() <= kEnumerationCap) {
    CliqueVector counts = clique_vector(padded, k + 1);
    if (counts.at(k) != m || counts.at(k + 1) != plan.predicted_ck1) {
      throw InvariantError("construction: enumerated counts disagree with plan");
    }
    plan.verified = true;
  }
  return BuiltConstruction{plan, padded};
}

}  // namespace

BuiltConstruction construction1(const Nat& m, int k) {
  TwoTermRep rep = two_term_rep(m, k);
  if (rep.tail.size() >= 2 && rep.tail[1] != k - 2) {
    throw InapplicableError(
        "construction 1 needs the second tail term to be minimal or absent");
  }
  long long lead = to_small(rep.lead, "construction core");

  Graph g(static_cast<int>(lead) + (rep.second_absent() ? 0 : 1) +
          (rep.tail.empty() ? 0 : 1));
  for (int a = 0; a < lead; ++a) {
    for (int b = a + 1; b < lead; ++b) g.add_edge(a, b);
  }
  int next = static_cast<int>(lead);
  Nat ck = binom(rep.lead, k) + binom(rep.second, k - 1);
  Nat ck1 = binom(rep.lead, k + 1) + binom(rep.second, k);
  if (!rep.second_absent()) {
    long long degree = rep.second.convert_to<long long>();
    for (long long t = 0; t < degree; ++t) g.add_edge(next, static_cast<int>(t));
    ++next;
  }
  if (!rep.tail.empty()) {
    long long degree = rep.tail[0].convert_to<long long>();
    for (long long t = 0; t < degree; ++t) g.add_edge(next, static_cast<int>(t));
    ck += binom(rep.tail[0], k - 1);
    ck1 += binom(rep.tail[0], k);
  }

  ConstructionPlan plan;
  plan.kind = ConstructionKind::CliquePlusTwo;
  plan.k = k;
  plan.m = m;
  plan.parameters = {rep.lead, rep.second,
                     rep.tail.empty() ? Nat(0) : rep.tail[0]};
  plan.predicted_ck = ck;
  plan.predicted_ck1 = ck1;
  if (ck1 != large_clique_bound(m, k)) {
    throw InvariantError("construction 1: predicted count misses the bound");
  }
  return finish(plan, g, m, k);
}

BuiltConstruction construction2(const Nat& m, int k) {
  TwoTermRep rep = two_term_rep(m, k);
  if (rep.tail.size() >= 3 && rep.tail[2] != k - 3) {
    throw InapplicableError(
        "construction 2 needs the third tail term to be minimal or absent");
  }
  Nat a1 = rep.tail.empty() ? Nat(0) : rep.tail[0];
  Nat a2 = rep.tail.size() < 2 ? Nat(0) : rep.tail[1];
  if (rep.lead + a2 < rep.second + a1) {
    throw InapplicableError(
        "construction 2 needs lead + common >= second + attached");
  }
  long long lead = to_small(rep.lead, "construction core");

  Graph g(static_cast<int>(lead) + (rep.second_absent() ? 0 : 1) +
          (rep.tail.empty() ? 0 : 1));
  for (int a = 0; a < lead; ++a) {
    for (int b = a + 1; b < lead; ++b) g.add_edge(a, b);
  }
  int next = static_cast<int>(lead);
  Nat ck = binom(rep.lead, k) + binom(rep.second, k - 1);
  Nat ck1 = binom(rep.lead, k + 1) + binom(rep.second, k);
  int v = -1;
  if (!rep.second_absent()) {
    v = next++;
    long long degree = rep.second.convert_to<long long>();
    for (long long t = 0; t < degree; ++t) g.add_edge(v, static_cast<int>(t));
  }
  if (!rep.tail.empty()) {
    // The second added vertex shares exactly a2 core neighbors with the
    // first one: a2 inside its neighborhood, the rest just past it.
    int u = next++;
    long long shared = a2.convert_to<long long>();
    long long extra = (a1 - a2).convert_to<long long>();
    long long second = rep.second.convert_to<long long>();
    for (long long t = 0; t < shared; ++t) g.add_edge(u, static_cast<int>(t));
    for (long long t = 0; t < extra; ++t) {
      g.add_edge(u, static_cast<int>(second + t));
    }
    g.add_edge(u, v);
    ck += binom(a1, k - 1) + binom(a2, k - 2);
    ck1 += binom(a1, k) + binom(a2, k - 1);
  }

  ConstructionPlan plan;
  plan.kind = ConstructionKind::CliquePlusLinked;
  plan.k = k;
  plan.m = m;
  plan.parameters = {rep.lead, rep.second, a1, a2};
  plan.predicted_ck = ck;
  plan.predicted_ck1 = ck1;
  if (ck1 != large_clique_bound(m, k)) {
    throw InvariantError("construction 2: predicted count misses the bound");
  }
  return finish(plan, g, m, k);
}

BuiltConstruction construction3(const Nat& m, int k) {
  if (m < 1) throw std::invalid_argument("construction3: m must be >= 1");
  Nat lead = cascade_leading_term(m, k);
  if (lead == k) {
    throw InapplicableError(
        "construction 3 needs the small-clique bound to be defined");
  }
  long long budget = lead.convert_to<long long>() - 1;
  ColoredRep crep = colored_rep(m, k, budget);
  if (crep.terms.size() >= 3 && crep.terms[2].n != k - 2) {
    throw InapplicableError(
        "construction 3 needs the third colored term to be minimal or absent");
  }

  long long t0 = to_small(crep.terms[0].n, "construction core");
  Graph g = turan_graph(t0, budget);
  Nat ck = turan_binom(crep.terms[0].n, k, budget);
  Nat ck1 = turan_binom(crep.terms[0].n, k + 1, budget);
  if (crep.terms.size() >= 2) {
    long long t1 = to_small(crep.terms[1].n, "construction attachment");
    // Embed an induced Turan graph on t1 vertices and budget-1 parts into
    // the budget-1 largest host parts; the gap condition guarantees the
    // fit. Host parts occupy consecutive label ranges, larger parts first.
    std::vector<long long> host = turan_parts(t0, budget);
    std::vector<long long> needed = turan_parts(t1, budget - 1);
    int w = g.vertex_count();
    Graph extended(w + 1);
    for (int a = 0; a < w; ++a) {
      for (int b = a + 1; b < w; ++b) {
        if (g.has_edge(a, b)) extended.add_edge(a, b);
      }
    }
    long long offset = 0;
    for (std::size_t p = 0; p < needed.size(); ++p) {
      if (needed[p] > host[p]) {
        throw InvariantError("construction 3: attachment does not fit");
      }
      for (long long t = 0; t < needed[p]; ++t) {
        extended.add_edge(w, static_cast<int>(offset + t));
      }
      offset += host[p];
    }
    g = extended;
    ck += turan_binom(crep.terms[1].n, k - 1, budget - 1);
    ck1 += turan_binom(crep.terms[1].n, k, budget - 1);
  }

  ConstructionPlan plan;
  plan.kind = ConstructionKind::TuranPlusOne;
  plan.k = k;
  plan.m = m;
  plan.parameters = {crep.terms[0].n,
                     crep.terms.size() >= 2 ? crep.terms[1].n : Nat(0)};
  plan.predicted_ck = ck;
  plan.predicted_ck1 = ck1;
  std::optional<Nat> small = small_clique_bound(m, k);
  if (!small || ck1 != *small) {
    throw InvariantError("construction 3: predicted count misses the bound");
  }
  return finish(plan, g, m, k);
}

BuiltConstruction build_construction(ConstructionKind kind, const Nat& m,
                                     int k) {
  switch (kind) {
    case ConstructionKind::CliquePlusTwo:
      return construction1(m, k);
    case ConstructionKind::CliquePlusLinked:
      return construction2(m, k);
    case ConstructionKind::TuranPlusOne:
      return construction3(m, k);
  }
  throw std::invalid_argument("build_construction: unknown kind");
}

}  // namespace cliquevec
