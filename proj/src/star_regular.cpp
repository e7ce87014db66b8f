#include "drckit/star_regular.hpp"

#include <random>
#include <utility>

#include "drckit/error.hpp"

namespace drckit {

StarRegularElement::StarRegularElement(RationalMatrix m)
    : matrix(std::move(m)), pinv(pseudoinverse(matrix)) {}

RationalMatrix d_of(const RationalMatrix& a) { return a * pseudoinverse(a); }

RationalMatrix r_of(const RationalMatrix& a) { return pseudoinverse(a) * a; }

RationalMatrix theta_of(const RationalMatrix& p, const RationalMatrix& q) {
    if (!is_projection_matrix(p) || !is_projection_matrix(q))
        throw Error("theta_of expects symmetric idempotents");
    RationalMatrix range_form = r_of(q * p);
    RationalMatrix left_form = p * pseudoinverse(p * q);
    RationalMatrix right_form = pseudoinverse(q * p) * p;
    if (range_form != left_form || range_form != right_form)
        throw Error("closed forms of the projection action disagree");
    return range_form;
}

RationalMatrix delta_of(const RationalMatrix& p, const RationalMatrix& q) {
    RationalMatrix dom_form = d_of(p * q);
    if (dom_form != theta_of(p, q)) throw Error("theta and delta disagree on projections");
    return dom_form;
}

RationalMatrix lres_mat(const RationalMatrix& p, const RationalMatrix& a) { return p * a; }

RationalMatrix rres_mat(const RationalMatrix& a, const RationalMatrix& q) { return a * q; }

RationalMatrix total_theta(const RationalMatrix& p, const RationalMatrix& a) {
    return pseudoinverse(p * a) * a;
}

RationalMatrix total_delta(const RationalMatrix& a, const RationalMatrix& p) {
    return a * pseudoinverse(a * p);
}

ProjectionAlgebra pa_of_projections(const std::vector<RationalMatrix>& projs) {
    const int n = static_cast<int>(projs.size());
    for (int i = 0; i < n; ++i) {
        if (!is_projection_matrix(projs[i])) throw Error("entry is not a symmetric idempotent");
        for (int j = i + 1; j < n; ++j)
            if (projs[i] == projs[j]) throw Error("duplicate projection in list");
    }
    auto find = [&](const RationalMatrix& m) {
        for (int i = 0; i < n; ++i)
            if (projs[i] == m) return i;
        throw Error("projection list is not closed under the action");
    };
    ProjectionAlgebra pa;
    pa.n = n;
    pa.theta.assign(n, std::vector<int>(n, -1));
    pa.delta.assign(n, std::vector<int>(n, -1));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            pa.theta[p][q] = find(theta_of(projs[p], projs[q]));
            pa.delta[p][q] = find(delta_of(projs[p], projs[q]));
        }
    return pa;
}

std::vector<RationalMatrix> close_projections(std::vector<RationalMatrix> seed, int cap) {
    for (std::size_t i = 0; i < seed.size(); ++i)
        for (std::size_t j = i + 1; j < seed.size(); ++j)
            if (seed[i] == seed[j]) throw Error("duplicate projection in seed");
    // Appending can invalidate rows already swept, so iterate to a fixpoint.
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < seed.size(); ++i) {
            for (std::size_t j = 0; j < seed.size(); ++j) {
                RationalMatrix t = theta_of(seed[i], seed[j]);
                bool known = false;
                for (const RationalMatrix& m : seed)
                    if (m == t) {
                        known = true;
                        break;
                    }
                if (!known) {
                    seed.push_back(t);
                    grew = true;
                    if (static_cast<int>(seed.size()) > cap)
                        throw Error("projection closure exceeded the cap");
                }
            }
        }
    }
    return seed;
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

void expect_eq(AxiomReport& rep, const std::string& law, const RationalMatrix& got,
               const RationalMatrix& want) {
    CheckResult c{law, got == want, {}, ""};
    if (!c.pass) c.note = "computed value differs from the bundled one";
    rep.checks.push_back(std::move(c));
}

void expect_ne(AxiomReport& rep, const std::string& law, const RationalMatrix& a,
               const RationalMatrix& b) {
    CheckResult c{law, a != b, {}, ""};
    if (!c.pass) c.note = "the two sides unexpectedly agree";
    rep.checks.push_back(std::move(c));
}

void expect_that(AxiomReport& rep, const std::string& law, bool ok, const std::string& note_on_fail) {
    CheckResult c{law, ok, {}, ""};
    if (!ok) c.note = note_on_fail;
    rep.checks.push_back(std::move(c));
}

// The six coherence projections of a triple (p, b, s): the outer pair (e, f)
// and the two refinement pairs that bracket the evaluation of b between them.
struct CoherenceSix {
    RationalMatrix e, e1, e2, f, f1, f2;
};

CoherenceSix coherence_six(const RationalMatrix& p, const RationalMatrix& b,
                           const RationalMatrix& s) {
    RationalMatrix q = d_of(b);
    RationalMatrix r = r_of(b);
    RationalMatrix u = total_delta(b, s);
    RationalMatrix v = theta_of(q, p);
    RationalMatrix w = total_theta(p, b);
    RationalMatrix z = theta_of(r, s);
    return CoherenceSix{theta_of(p, u), theta_of(v, u), theta_of(u, p),
                        theta_of(s, w), theta_of(w, s), theta_of(z, w)};
}

}  // namespace

AxiomReport reproduce_counterexamples() {
    AxiomReport rep;
    rep.subject = "matrix counterexamples";

    // Pseudoinverse showcase: a singular 3x3 with fractional pseudoinverse.
    {
        RationalMatrix a = from_rows(Rows{{"1", "1", "1"}, {"1", "0", "0"}, {"0", "0", "0"}});
        RationalMatrix ap = pseudoinverse(a);
        expect_eq(rep, "pseudoinverse of the rank-2 showcase", ap,
                  from_rows(Rows{{"0", "1", "0"}, {"1/2", "-1/2", "0"}, {"1/2", "-1/2", "0"}}));
        expect_eq(rep, "domain projection of the showcase", a * ap,
                  from_rows(Rows{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}));
        expect_eq(rep, "range projection of the showcase", ap * a,
                  from_rows(Rows{{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}}));
    }

    // The naive sandwich pqp is not even idempotent, while the action value is.
    {
        RationalMatrix p = from_rows(Rows{{"1/2", "1/2"}, {"1/2", "1/2"}});
        RationalMatrix q = from_rows(Rows{{"1", "0"}, {"0", "0"}});
        RationalMatrix pqp = p * q * p;
        expect_eq(rep, "sandwich pqp value", pqp, from_rows(Rows{{"1/4", "1/4"}, {"1/4", "1/4"}}));
        expect_that(rep, "sandwich pqp is not idempotent", !is_idempotent(pqp),
                    "pqp is idempotent");
        RationalMatrix act = theta_of(p, q);
        expect_eq(rep, "action value at the sandwich pair", act, p);
        expect_ne(rep, "action differs from the sandwich", act, pqp);
    }

    // One-sided orders separate: a sits below b on the left but not on the right.
    {
        RationalMatrix a = from_rows(Rows{{"1", "1"}, {"0", "0"}});
        RationalMatrix b = from_rows(Rows{{"1", "1"}, {"0", "1"}});
        RationalMatrix p = from_rows(Rows{{"1", "0"}, {"0", "0"}});
        RationalMatrix q = from_rows(Rows{{"1/2", "1/2"}, {"1/2", "1/2"}});
        expect_eq(rep, "domain projection of a", d_of(a), p);
        expect_eq(rep, "range projection of a", r_of(a), q);
        expect_eq(rep, "domain projection of b", d_of(b), identity_matrix(2));
        expect_eq(rep, "range projection of b", r_of(b), identity_matrix(2));
        expect_eq(rep, "left restriction of b reaches a", lres_mat(p, b), a);
        expect_eq(rep, "right restriction of b by the range of a", rres_mat(b, q),
                  from_rows(Rows{{"1", "1"}, {"1/2", "1/2"}}));
        expect_ne(rep, "right restriction misses a", rres_mat(b, q), a);
    }

    // The bounded action of an invertible element is not an algebra morphism.
    {
        RationalMatrix a = from_rows(Rows{{"1", "1"}, {"0", "1"}});
        RationalMatrix p = from_rows(Rows{{"1", "0"}, {"0", "0"}});
        RationalMatrix q = from_rows(Rows{{"0", "0"}, {"0", "1"}});
        RationalMatrix lhs = total_theta(theta_of(q, p), a);
        RationalMatrix rhs = theta_of(total_theta(q, a), total_theta(p, a));
        expect_eq(rep, "morphism test left side", lhs, zero_matrix(2, 2));
        expect_eq(rep, "morphism test right side", rhs, from_rows(Rows{{"0", "0"}, {"0", "1"}}));
        expect_ne(rep, "action fails to be an algebra morphism", lhs, rhs);
    }

    // Acting by the image projection differs from routing through the
    // element on both sides.
    {
        RationalMatrix p = identity_matrix(2);
        RationalMatrix t = from_rows(Rows{{"1", "0"}, {"0", "0"}});
        RationalMatrix a = from_rows(Rows{{"1", "1"}, {"0", "1"}});
        RationalMatrix lhs = theta_of(total_theta(p, a), t);
        RationalMatrix rhs = total_theta(theta_of(p, total_delta(a, t)), a);
        expect_eq(rep, "direct action of the image projection", lhs,
                  from_rows(Rows{{"1", "0"}, {"0", "0"}}));
        expect_eq(rep, "action routed through the element", rhs,
                  from_rows(Rows{{"1/2", "1/2"}, {"1/2", "1/2"}}));
        expect_ne(rep, "routed action differs from the direct one", lhs, rhs);
    }

    // Single-family axioms: the bundled triple satisfies both laws, while the
    // diagonal witness below breaks them.
    {
        RationalMatrix t = from_rows(Rows{{"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "0", "1"}});
        RationalMatrix p = from_rows(Rows{{"1/2", "0", "1/2"}, {"0", "1", "0"}, {"1/2", "0", "1/2"}});
        RationalMatrix q = from_rows(Rows{{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}});
        auto p4_sides = [&](const RationalMatrix& w) {
            RationalMatrix lhs = theta_of(p, theta_of(q, theta_of(p, w)));
            RationalMatrix rhs = theta_of(theta_of(p, q), w);
            return std::make_pair(lhs, rhs);
        };
        auto p5_sides = [&](const RationalMatrix& w) {
            RationalMatrix inner = theta_of(p, w);
            RationalMatrix lhs = theta_of(q, theta_of(p, theta_of(q, inner)));
            RationalMatrix rhs = theta_of(q, inner);
            return std::make_pair(lhs, rhs);
        };
        auto [l4t, r4t] = p4_sides(t);
        expect_eq(rep, "fourth single-family law holds at the bundled witness", l4t, r4t);
        auto [l5t, r5t] = p5_sides(t);
        expect_eq(rep, "fifth single-family law holds at the bundled witness", l5t, r5t);

        RationalMatrix w = from_rows(Rows{{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
        auto [l4, r4] = p4_sides(w);
        expect_eq(rep, "fourth law left side at the diagonal witness", l4,
                  from_rows(Rows{{"9/22", "3/11", "9/22"},
                                 {"3/11", "2/11", "3/11"},
                                 {"9/22", "3/11", "9/22"}}));
        expect_eq(rep, "fourth law right side at the diagonal witness", r4,
                  from_rows(Rows{{"1/2", "0", "1/2"}, {"0", "0", "0"}, {"1/2", "0", "1/2"}}));
        expect_ne(rep, "fourth single-family law fails", l4, r4);
        auto [l5, r5] = p5_sides(w);
        expect_eq(rep, "fifth law left side at the diagonal witness", l5,
                  from_rows(Rows{{"18/43", "15/43", "15/43"},
                                 {"15/43", "25/86", "25/86"},
                                 {"15/43", "25/86", "25/86"}}));
        expect_eq(rep, "fifth law right side at the diagonal witness", r5,
                  from_rows(Rows{{"2/3", "1/3", "1/3"},
                                 {"1/3", "1/6", "1/6"},
                                 {"1/3", "1/6", "1/6"}}));
        expect_ne(rep, "fifth single-family law fails", l5, r5);
    }

    // Coherence projections: refining the outer pair can move the inner ones.
    {
        RationalMatrix b = from_rows(Rows{{"1", "1", "0"}, {"1", "1", "0"}, {"0", "0", "1"}});
        RationalMatrix p = from_rows(Rows{{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}});
        RationalMatrix s = from_rows(Rows{{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}});

        CoherenceSix outer = coherence_six(p, b, s);
        expect_eq(rep, "left outer projection of the bundled triple", outer.e,
                  from_rows(Rows{{"0", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}}));
        expect_eq(rep, "right outer projection of the bundled triple", outer.f, s);
        expect_eq(rep, "first left refinement", outer.e1, s);
        expect_eq(rep, "second left refinement", outer.e2, s);
        expect_eq(rep, "first right refinement", outer.f1, s);
        expect_eq(rep, "second right refinement", outer.f2, s);

        CoherenceSix inner = coherence_six(outer.e, b, outer.f);
        expect_eq(rep, "first left refinement after replacing the pair", inner.e1,
                  from_rows(Rows{{"1/6", "1/6", "1/3"},
                                 {"1/6", "1/6", "1/3"},
                                 {"1/3", "1/3", "2/3"}}));
        expect_ne(rep, "left refinements disagree across the replacement", inner.e1, outer.e1);
        expect_eq(rep, "first right refinement after replacing the pair", inner.f1,
                  from_rows(Rows{{"1/3", "1/3", "1/3"},
                                 {"1/3", "1/3", "1/3"},
                                 {"1/3", "1/3", "1/3"}}));
        expect_ne(rep, "right refinements disagree across the replacement", inner.f1, outer.f1);
        expect_eq(rep, "second left refinement is stable", inner.e2, outer.e2);
        expect_eq(rep, "second right refinement is stable", inner.f2, outer.f2);
    }

    return rep;
}

ProbeResult probe_linked_simplifications(unsigned seed, int trials, int dim) {
    if (trials < 1) throw Error("the probe needs at least one trial");
    if (dim < 2 || dim > 6) throw Error("probe dimension must be between 2 and 6");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> width(1, dim - 1);

    auto random_matrix = [&](int r, int c) {
        RationalMatrix m = zero_matrix(r, c);
        for (auto& x : m.ent) x = entry(rng);
        return m;
    };
    // d_of(v) is the orthogonal projection onto the column space of v, so
    // rectangular seeds of random width give projections of varying rank.
    auto random_projection = [&]() { return d_of(random_matrix(dim, width(rng))); };

    ProbeResult res;
    res.report.subject = "linked pair shortcut probe";
    for (int t = 0; t < trials; ++t) {
        ++res.trials;
        RationalMatrix b = random_matrix(dim, dim);
        RationalMatrix p = random_projection();
        RationalMatrix s = random_projection();
        CoherenceSix outer = coherence_six(p, b, s);
        const RationalMatrix& e = outer.e;
        const RationalMatrix& f = outer.f;
        // Linkedness is verified, not assumed: acting across b and back must
        // return each end of the pair.
        bool linked = theta_of(f, total_theta(e, b)) == f &&
                      delta_of(e, total_delta(b, f)) == e;
        if (!linked) continue;
        ++res.linked;
        CoherenceSix inner = coherence_six(e, b, f);
        if (inner.e1 != theta_of(d_of(b), e)) ++res.e1_mismatch;
        if (inner.e2 != total_delta(b, f)) ++res.e2_mismatch;
        if (inner.f1 != total_theta(e, b)) ++res.f1_mismatch;
        if (inner.f2 != theta_of(r_of(b), f)) ++res.f2_mismatch;
    }

    auto tally = [&](const std::string& law, long bad) {
        CheckResult c{law, bad == 0, {}, ""};
        c.note = std::to_string(res.linked) + " linked pairs seen, " +
                 std::to_string(bad) + " mismatches";
        res.report.checks.push_back(std::move(c));
    };
    tally("one step left shortcut", res.e1_mismatch);
    tally("cross step left shortcut", res.e2_mismatch);
    tally("cross step right shortcut", res.f1_mismatch);
    tally("one step right shortcut", res.f2_mismatch);
    return res;
}

}  // namespace drckit
