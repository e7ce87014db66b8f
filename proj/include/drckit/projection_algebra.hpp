#pragma once

#include <optional>
#include <vector>

#include "drckit/report.hpp"

namespace drckit {

// Carrier {0,...,n-1} with two families of unary operations stored as
// tables: theta[p][q] == q theta_p and delta[p][q] == q delta_p.
// Operations compose postfix: t theta_q theta_p == th(p, th(q, t)).
struct ProjectionAlgebra {
  int n = 0;
  std::vector<std::vector<int>> theta;
  std::vector<std::vector<int>> delta;

  int th(int p, int q) const { return theta[p][q]; }
  int de(int p, int q) const { return delta[p][q]; }

  // Dimensions and entry ranges only; throws Error.
  void validate_shape() const;

  bool operator==(const ProjectionAlgebra&) const = default;
};

// The defining axioms P1-P5 for theta together with their delta duals.
AxiomReport check_pa_axioms(const ProjectionAlgebra& pa);

// Consequences P6-P10 (and duals), rechecked directly as a regression net.
AxiomReport check_pa_derived(const ProjectionAlgebra& pa);

// p <= q. The five equivalent characterisations (fixed-point of theta_q,
// image membership for theta_q, same two for delta_q, and the four-way
// fixed-point conjunction) are each computed; disagreement means the tables
// are not a projection algebra and throws Error. Also verifies the result
// is a partial order.
std::vector<std::vector<bool>> order_of(const ProjectionAlgebra& pa);

// f[p][q] iff p = q delta_p and q = p theta_q. Reflexive, not symmetric.
std::vector<std::vector<bool>> f_relation_of(const ProjectionAlgebra& pa);

// phi respects both operation families:
// (q theta_p) phi == (q phi) theta'_{p phi}, same for delta.
// On failure, witness gets {p, q}.
bool is_pa_morphism(const ProjectionAlgebra& src, const ProjectionAlgebra& dst,
                    const std::vector<int>& phi,
                    std::vector<long long>* witness = nullptr);

// Swaps the two operation families.
ProjectionAlgebra opposite_pa(const ProjectionAlgebra& pa);

bool is_symmetric(const ProjectionAlgebra& pa);

// The single-family axioms P1'-P5' for theta, plus the delta mirror.
// P1'-P3' follow from P1-P10; P4' and P5' are genuinely stronger.
AxiomReport check_imaoka(const ProjectionAlgebra& pa);

}  // namespace drckit
