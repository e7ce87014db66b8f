#pragma once

#include <vector>

#include "drckit/matrix.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/report.hpp"

namespace drckit {

// A matrix bundled with its Moore-Penrose inverse; construction verifies the
// four defining identities (the pseudoinverse routine already does).
struct StarRegularElement {
    RationalMatrix matrix;
    RationalMatrix pinv;
    explicit StarRegularElement(RationalMatrix m);
};

// Domain and range projections a a^+ and a^+ a.
RationalMatrix d_of(const RationalMatrix& a);
RationalMatrix r_of(const RationalMatrix& a);

// Action of the projection p on the projection q. The range form R(qp), the
// left closed form p (p q)^+ and the right closed form (q p)^+ p are all
// computed and must agree; the delta variant computes D(pq) and must agree
// with the theta value. Inputs must be symmetric idempotents.
RationalMatrix theta_of(const RationalMatrix& p, const RationalMatrix& q);
RationalMatrix delta_of(const RationalMatrix& p, const RationalMatrix& q);

// One-sided restrictions.
RationalMatrix lres_mat(const RationalMatrix& p, const RationalMatrix& a);
RationalMatrix rres_mat(const RationalMatrix& a, const RationalMatrix& q);

// Total actions of an arbitrary element on a projection: (pa)^+ a on the
// range side and a (ap)^+ on the domain side.
RationalMatrix total_theta(const RationalMatrix& p, const RationalMatrix& a);
RationalMatrix total_delta(const RationalMatrix& a, const RationalMatrix& p);

// Index tables over a finite list of pairwise distinct projections; throws
// Error when the list is not closed under the action.
ProjectionAlgebra pa_of_projections(const std::vector<RationalMatrix>& projs);

// Closure of a seed list under theta_of, capped; throws Error past the cap.
std::vector<RationalMatrix> close_projections(std::vector<RationalMatrix> seed, int cap = 64);

// Recomputes every bundled matrix counterexample exactly and compares
// against the hardcoded fractions; each line is a separate check.
AxiomReport reproduce_counterexamples();

// Randomized probe over rational projection triples (e, b, f). A pair (e, f)
// is b-linked when e acted on by b and then by f comes back to f, and dually.
// For linked pairs the probe compares the four shortcut projections
//   e1 = e theta_{d(b)}   e2 = f Delta_b   f1 = e Theta_b   f2 = f delta_{r(b)}
// against the coherence values built from the definitions, and counts any
// disagreements. The counts are informational: no finite run certifies the
// shortcuts in general.
struct ProbeResult {
    long trials = 0;           // triples sampled
    long linked = 0;           // how many were b-linked
    long e1_mismatch = 0;
    long e2_mismatch = 0;
    long f1_mismatch = 0;
    long f2_mismatch = 0;
    AxiomReport report;        // one check per shortcut, pass = zero mismatches seen
};

ProbeResult probe_linked_simplifications(unsigned seed, int trials, int dim = 3);

}  // namespace drckit
