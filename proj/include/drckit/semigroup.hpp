#pragma once

#include <vector>

#include "drckit/projection_algebra.hpp"
#include "drckit/report.hpp"

namespace drckit {

// Finite semigroup with domain and range operations, all as dense tables.
struct FiniteSemigroup {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> d_op;
  std::vector<int> r_op;

  int prod(int a, int b) const { return mul[a][b]; }
  int D(int a) const { return d_op[a]; }
  int R(int a) const { return r_op[a]; }

  void validate_shape() const;

  bool operator==(const FiniteSemigroup&) const = default;
};

// Associativity plus the four defining unary-operation axiom pairs.
AxiomReport check_drc_axioms(const FiniteSemigroup& s);

// Consequences: D and R are idempotent operations, fix projections, and
// D(a)a = a = aR(a) forces D/R images to consist of idempotents.
AxiomReport check_drc_derived(const FiniteSemigroup& s);

// Elements p with p*p == p == D(p) == R(p), ascending. Coincides with the
// image of D and of R; see the property tests.
std::vector<int> projections_of(const FiniteSemigroup& s);

struct ExtractedPA {
  ProjectionAlgebra pa;
  std::vector<int> elems;       // pa index -> semigroup element
  std::vector<int> elem_to_pa;  // semigroup element -> pa index or -1
};

// q theta_p = R(qp), q delta_p = D(pq) on the projections.
ExtractedPA extract_pa(const FiniteSemigroup& s);

bool is_drc_morphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                     const std::vector<int>& phi,
                     std::vector<long long>* witness = nullptr);

// Reversed multiplication with D and R exchanged.
FiniteSemigroup opposite_semigroup(const FiniteSemigroup& s);

// a <=l b iff D(a) <= D(b) and a == D(a)b; <=r is the mirror image.
// The object order on projections is the one from extract_pa.
std::vector<std::vector<bool>> left_order_of(const FiniteSemigroup& s);
std::vector<std::vector<bool>> right_order_of(const FiniteSemigroup& s);

// Largest projection-separating congruence: a mu b iff a and b induce the
// same maps p -> R(pa) and p -> D(ap) on projections. Returns the class
// index of every element; classes are numbered by first occurrence.
std::vector<int> mu_of(const FiniteSemigroup& s);

bool is_fundamental(const FiniteSemigroup& s);

// The multiplicative closure of the projections is everything.
bool is_projection_generated(const FiniteSemigroup& s);

// Quotient by a partition (class index per element). Throws Error unless
// the partition is a congruence compatible with D and R.
FiniteSemigroup quotient_semigroup(const FiniteSemigroup& s,
                                   const std::vector<int>& cls);

// All congruences compatible with multiplication, D and R, one partition
// each, listed by ascending class count then lexicographic class vector.
// Lattice built by closing the principal congruences under joins; refuses
// carriers past 12 elements.
std::vector<std::vector<int>> enumerate_congruences(const FiniteSemigroup& s);

}  // namespace drckit
