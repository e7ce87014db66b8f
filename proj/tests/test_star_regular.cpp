#include <doctest.h>

#include <vector>

#include "drckit/error.hpp"
#include "drckit/matrix.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/star_regular.hpp"

using namespace drckit;

namespace {

RationalMatrix avg3() {
    return from_rows({{"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "0", "1"}});
}

RationalMatrix outer3() {
    return from_rows({{"1/2", "0", "1/2"}, {"0", "1", "0"}, {"1/2", "0", "1/2"}});
}

RationalMatrix lower3() {
    return from_rows({{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}});
}

}  // namespace

TEST_CASE("the bundled counterexamples recompute bit for bit") {
    AxiomReport rep = reproduce_counterexamples();
    for (const CheckResult& c : rep.checks) {
        INFO(c.law);
        CHECK(c.pass);
    }
    CHECK(rep.ok());
    CHECK(rep.checks.size() == 40);
}

TEST_CASE("domain and range of any element are orthogonal projections") {
    RationalMatrix v = from_rows({{"1", "0"}, {"1", "0"}});
    CHECK(d_of(v) == from_rows({{"1/2", "1/2"}, {"1/2", "1/2"}}));
    CHECK(r_of(v) == from_rows({{"1", "0"}, {"0", "0"}}));
    CHECK(is_projection_matrix(d_of(v)));
    CHECK(is_projection_matrix(r_of(v)));

    RationalMatrix a = from_rows({{"1", "2"}, {"3", "4"}});
    CHECK(d_of(a) == identity_matrix(2));
    CHECK(lres_mat(d_of(a), a) == a);
    CHECK(rres_mat(a, r_of(a)) == a);
    CHECK(lres_mat(d_of(v), v) == v);
}

TEST_CASE("the two action forms agree on symmetric idempotents") {
    std::vector<RationalMatrix> projs = {avg3(), outer3(), lower3(),
                                         identity_matrix(3)};
    for (const RationalMatrix& p : projs)
        for (const RationalMatrix& q : projs) {
            RationalMatrix th = theta_of(p, q);
            CHECK(th == delta_of(p, q));
            CHECK(is_projection_matrix(th));
            // A projection acts on a projection as the element would.
            CHECK(total_theta(q, p) == th);
            CHECK(total_delta(p, q) == delta_of(p, q));
        }
}

TEST_CASE("the printed triple closes onto itself") {
    std::vector<RationalMatrix> cl = close_projections({avg3(), outer3(), lower3()});
    CHECK(cl.size() == 3);
    ProjectionAlgebra pa = pa_of_projections(cl);
    CHECK(check_pa_axioms(pa).ok());
    CHECK(check_imaoka(pa).ok());
}

TEST_CASE("one corner projection makes the closure outgrow any cap") {
    RationalMatrix corner = from_rows(
        {{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
    CHECK_THROWS_AS(close_projections({corner, outer3(), lower3()}, 16), Error);
}

TEST_CASE("random linked pairs match the shortcut projections") {
    ProbeResult r = probe_linked_simplifications(12345, 60, 3);
    CHECK(r.trials == 60);
    CHECK(r.linked >= 1);
    REQUIRE(r.report.checks.size() == 4);
    CHECK(r.report.checks[0].pass == (r.e1_mismatch == 0));
    CHECK(r.report.checks[1].pass == (r.e2_mismatch == 0));
    CHECK(r.report.checks[2].pass == (r.f1_mismatch == 0));
    CHECK(r.report.checks[3].pass == (r.f2_mismatch == 0));

    CHECK_THROWS_AS(probe_linked_simplifications(1, 0), Error);
    CHECK_THROWS_AS(probe_linked_simplifications(1, 5, 7), Error);
}
