#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "drckit/biordered.hpp"
#include "drckit/chains.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/report.hpp"

namespace drckit {

// A projection algebra, a biordered category whose objects realise it, and
// an evaluation table on F-related pairs of projections. eval is keyed by
// p*pa.n+q and must cover every F-pair, with the diagonal mapping to the
// object itself.
struct ChainedProjectionCategory {
  ProjectionAlgebra pa;
  BiorderedCategory cat;
  std::vector<int> objs;  // pa index -> object morphism
  std::unordered_map<long long, int> eval;

  // Derived by finalize().
  std::vector<int> objs_inv;  // object morphism -> pa index, -1 elsewhere

  void finalize();

  int eval_at(int p, int q) const;  // throws Error when absent
  int d_idx(int a) const { return objs_inv[cat.dom[a]]; }
  int r_idx(int a) const { return objs_inv[cat.cod[a]]; }

  // Partial maps on projections, defined below dom/cod respectively.
  std::optional<int> vt(int a, int p) const;
  std::optional<int> vd(int a, int q) const;

  // Total extensions: project below dom/cod first, then apply vt/vd.
  int Theta(int a, int p) const;
  int Delta(int a, int s) const;

  bool operator==(const ChainedProjectionCategory& o) const {
    return pa == o.pa && cat == o.cat && objs == o.objs && eval == o.eval;
  }
};

// Objects biject with the projection algebra and both derived orders
// restrict to the projection order on them.
AxiomReport check_weak_pc(const ChainedProjectionCategory& c);

// Evaluation laws: fixes objects, has the right endpoints, restricts on
// either side by pushing the projection through the pair, and commutes
// with restriction on chains up to length 3.
AxiomReport check_evaluation(const ChainedProjectionCategory& c);

// First coherence axiom: restricting a morphism composes the total maps
// with the corresponding unary operation.
AxiomReport check_c1(const ChainedProjectionCategory& c);

struct CoherenceProjections {
  int e, e1, e2, f, f1, f2;
};

// The six projections attached to a morphism b and outer projections p, s.
CoherenceProjections coherence_projections(const ChainedProjectionCategory& c,
                                           int b, int p, int s);

// The two composite morphisms whose equality is the second coherence
// axiom. nullopt when a needed composite fell outside a truncated carrier.
std::optional<int> lambda_morphism(const ChainedProjectionCategory& c, int p,
                                   int b, int s);
std::optional<int> rho_morphism(const ChainedProjectionCategory& c, int p,
                                int b, int s);

// Second coherence axiom, exhaustive over every morphism and every pair of
// projections.
AxiomReport check_c2(const ChainedProjectionCategory& c);

// Every check above plus the underlying category and biordered reports.
AxiomReport check_cpc(const ChainedProjectionCategory& c);

// Evaluation of a duplicate-free path by folding pair evaluations.
std::optional<int> eval_chain(const ChainedProjectionCategory& c,
                              const Path& p);

// Biordered functor whose object map is a projection-algebra morphism and
// which matches the two evaluation tables on F-pairs and on chains up to
// length 3.
bool is_cp_functor(const ChainedProjectionCategory& src,
                   const ChainedProjectionCategory& dst,
                   const std::vector<int>& phi,
                   std::vector<long long>* witness = nullptr,
                   std::string* reason = nullptr);

// The chain category over pa with the identity evaluation, truncated at
// max_len.
ChainedProjectionCategory make_chain_cpc(const ProjectionAlgebra& pa,
                                         int max_len);

}  // namespace drckit
