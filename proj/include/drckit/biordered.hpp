#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drckit/report.hpp"

namespace drckit {

// Small category with two restriction actions and an order on objects.
// Morphisms are 0..m-1; objects are the identity morphisms, listed in
// `objects`, and dom/cod take values in that list (objects are their own
// indices, there is no separate object numbering).
//
// comp is stored sparsely: key a*m+b for a stored composite of a then b.
// When trunc_bound == 0 the category is complete and comp must contain
// exactly the composable pairs. When trunc_bound > 0 the category is a
// truncation of a larger one (chains are capped at that length) and comp
// may omit composable pairs whose result fell outside the carrier; the
// checkers then quantify over stored entries and report the bound.
// Restrictions never leave the carrier, so lres/rres are total either way.
struct BiorderedCategory {
  long long m = 0;
  std::vector<int> objects;
  std::vector<int> dom, cod;
  std::unordered_map<long long, int> comp;  // key a*m+b
  std::unordered_map<long long, int> lres;  // key p*m+a
  std::unordered_map<long long, int> rres;  // key a*m+q
  std::vector<std::pair<int, int>> obj_leq_pairs;
  long long trunc_bound = 0;

  // Derived by finalize().
  std::vector<int> obj_pos;
  std::vector<std::vector<bool>> oleq;

  // Validates shapes and builds the object index; throws Error.
  void finalize();

  bool is_object(int x) const { return obj_pos[x] >= 0; }
  bool obj_le(int p, int q) const { return oleq[obj_pos[p]][obj_pos[q]]; }

  std::optional<int> comp_opt(int a, int b) const;
  std::optional<int> lres_opt(int p, int a) const;
  std::optional<int> rres_opt(int a, int q) const;
  int comp_at(int a, int b) const;  // throws Error when absent
  int lres_at(int p, int a) const;
  int rres_at(int a, int q) const;

  bool operator==(const BiorderedCategory& o) const {
    return m == o.m && objects == o.objects && dom == o.dom && cod == o.cod &&
           comp == o.comp && lres == o.lres && rres == o.rres &&
           obj_leq_pairs == o.obj_leq_pairs && trunc_bound == o.trunc_bound;
  }
};

// Identity/composition bookkeeping: objects are identities, stored
// composites agree with dom/cod, composition is total when complete,
// associativity over all stored triples.
AxiomReport check_category(const BiorderedCategory& c);

// Order and restriction laws: object order is a partial order; the
// domain/codomain law for restrictions; identity restrictions; repeated
// restrictions collapse; restrictions distribute over composition.
AxiomReport check_biordered(const BiorderedCategory& c);

// a <=l b iff dom(a) <= dom(b) and a is b left-restricted to dom(a);
// <=r is the mirror image. Returned as dense m x m matrices.
struct DerivedOrders {
  std::vector<std::vector<bool>> leq_l;
  std::vector<std::vector<bool>> leq_r;
};
DerivedOrders derive_orders(const BiorderedCategory& c);

// Partial map on object positions: p -> cod of a left-restricted to p,
// defined for p <= dom(a); -1 elsewhere. vd_map is the mirror image.
std::vector<int> vt_map(const BiorderedCategory& c, int a);
std::vector<int> vd_map(const BiorderedCategory& c, int a);

// Reverses composition and swaps the two restriction actions.
BiorderedCategory opposite_cat(const BiorderedCategory& c);

// Functor preserving the object order and both restriction actions.
// Object-order preservation is checked before anything else since the
// restriction clauses are only well-posed once it holds.
bool is_biordered_functor(const BiorderedCategory& src,
                          const BiorderedCategory& dst,
                          const std::vector<int>& phi,
                          std::vector<long long>* witness = nullptr,
                          std::string* reason = nullptr);

// Equivalence on morphisms (class index per morphism) that respects
// dom/cod, composition on both sides, and both restriction actions.
AxiomReport check_biordered_congruence(const BiorderedCategory& c,
                                       const std::vector<int>& cls);

// Quotient by such a congruence; object classes are singletons, so the
// object order carries over unchanged. Throws Error if the input fails
// check_biordered_congruence.
BiorderedCategory quotient_category(const BiorderedCategory& c,
                                    const std::vector<int>& cls);

}  // namespace drckit
