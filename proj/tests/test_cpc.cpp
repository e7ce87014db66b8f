#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "drckit/corpus.hpp"
#include "drckit/cpc.hpp"
#include "drckit/functors.hpp"
#include "drckit/semigroup.hpp"

using namespace drckit;

TEST_CASE("each layer of the chained category checks passes on its own") {
    ChainedProjectionCategory c = c_of(make_b2());
    CHECK(check_weak_pc(c).ok());
    CHECK(check_evaluation(c).ok());
    CHECK(check_c1(c).ok());
    CHECK(check_c2(c).ok());
    CHECK(check_cpc(c).ok());
}

TEST_CASE("the truncated chain construction satisfies every axiom") {
    ChainedProjectionCategory c = make_chain_cpc(corpus_algebra("const2"), 3);
    CHECK(c.cat.trunc_bound == 3);
    CHECK(check_cpc(c).ok());
}

TEST_CASE("chain evaluation folds pair products") {
    ChainedProjectionCategory c = c_of(make_rb22());
    // The two projections multiply as a rectangular band, so the zigzag
    // returns to its starting corner.
    REQUIRE(c.eval_at(0, 1) == 1);
    CHECK(eval_chain(c, {0, 1}) == std::optional<int>{1});
    CHECK(eval_chain(c, {0, 1, 0}) == std::optional<int>{0});
    CHECK(eval_chain(c, {0}) == std::optional<int>{c.objs[0]});

    ChainedProjectionCategory t = make_chain_cpc(corpus_algebra("const2"), 3);
    CHECK(eval_chain(t, {0, 1, 0}) == std::optional<int>{4});
    CHECK_FALSE(eval_chain(t, {0, 1, 0, 1}).has_value());
}

TEST_CASE("a retargeted pair evaluation is caught by the endpoint law") {
    ChainedProjectionCategory c = c_of(make_rb22());
    REQUIRE(check_evaluation(c).ok());
    c.eval[0 * c.pa.n + 1] = c.objs[0];
    CHECK_FALSE(check_evaluation(c).ok());
    CHECK_FALSE(check_cpc(c).ok());
}

TEST_CASE("the identity is a chained functor and endpoint damage is not") {
    ChainedProjectionCategory c = c_of(make_b2());
    std::vector<int> id(c.cat.m);
    for (int i = 0; i < c.cat.m; ++i) id[i] = i;
    CHECK(is_cp_functor(c, c, id));

    std::vector<int> broken = id;
    broken[2] = 0;  // keeps the carrier but moves both endpoints
    std::string reason;
    CHECK_FALSE(is_cp_functor(c, c, broken, nullptr, &reason));
    CHECK_FALSE(reason.empty());
}

TEST_CASE("total action maps agree with one sided products") {
    for (const char* name : {"b2", "rel2"}) {
        INFO(name);
        FiniteSemigroup s = corpus_semigroup(name);
        ExtractedPA ex = extract_pa(s);
        ChainedProjectionCategory c = c_of(s);
        for (int a = 0; a < s.n; ++a) {
            for (int p = 0; p < c.pa.n; ++p) {
                CHECK(c.Theta(a, p) ==
                      ex.elem_to_pa[s.r_op[s.mul[ex.elems[p]][a]]]);
                CHECK(c.Delta(a, p) ==
                      ex.elem_to_pa[s.d_op[s.mul[a][ex.elems[p]]]]);
            }
        }
    }
}

TEST_CASE("partial action maps are defined exactly below the endpoints") {
    ChainedProjectionCategory c = c_of(make_b2());
    const auto leq = order_of(c.pa);
    for (int a = 0; a < c.cat.m; ++a) {
        for (int p = 0; p < c.pa.n; ++p) {
            std::optional<int> vt = c.vt(a, p);
            CHECK(vt.has_value() == leq[p][c.d_idx(a)]);
            if (vt) CHECK(*vt == c.Theta(a, p));
            std::optional<int> vd = c.vd(a, p);
            CHECK(vd.has_value() == leq[p][c.r_idx(a)]);
            if (vd) CHECK(*vd == c.Delta(a, p));
        }
    }
}
