#include <doctest.h>

#include <vector>

#include "drckit/biordered.hpp"
#include "drckit/chains.hpp"
#include "drckit/corpus.hpp"
#include "drckit/error.hpp"
#include "drckit/functors.hpp"
#include "drckit/semigroup.hpp"

using namespace drckit;

TEST_CASE("induced categories pass the category and restriction laws") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        BiorderedCategory c = c_of(e.sg).cat;
        CHECK(check_category(c).ok());
        CHECK(check_biordered(c).ok());
        CHECK(c.trunc_bound == 0);
    }
}

TEST_CASE("derived element orders restrict the object order") {
    FiniteSemigroup s = make_b2();
    BiorderedCategory c = c_of(s).cat;
    DerivedOrders ord = derive_orders(c);
    for (int a = 0; a < c.m; ++a)
        for (int b = 0; b < c.m; ++b) {
            if (ord.leq_l[a][b]) CHECK(c.obj_le(c.dom[a], c.dom[b]));
            if (ord.leq_r[a][b]) CHECK(c.obj_le(c.cod[a], c.cod[b]));
        }
    // On objects the two orders agree with the object order itself.
    for (int p : c.objects)
        for (int q : c.objects) {
            CHECK(ord.leq_l[p][q] == c.obj_le(p, q));
            CHECK(ord.leq_r[p][q] == c.obj_le(p, q));
        }
}

TEST_CASE("the cod of a left restriction realises the range action") {
    FiniteSemigroup s = make_b2();
    BiorderedCategory c = c_of(s).cat;
    for (int a = 0; a < c.m; ++a) {
        std::vector<int> vt = vt_map(c, a);
        for (std::size_t i = 0; i < c.objects.size(); ++i) {
            int p = c.objects[i];
            if (!c.obj_le(p, c.dom[a])) {
                CHECK(vt[i] == -1);
            } else {
                CHECK(c.objects[vt[i]] == s.r_op[s.mul[p][a]]);
            }
        }
        std::vector<int> vd = vd_map(c, a);
        for (std::size_t i = 0; i < c.objects.size(); ++i) {
            int q = c.objects[i];
            if (!c.obj_le(q, c.cod[a])) {
                CHECK(vd[i] == -1);
            } else {
                CHECK(c.objects[vd[i]] == s.d_op[s.mul[a][q]]);
            }
        }
    }
}

TEST_CASE("reversing a category twice is the identity") {
    BiorderedCategory c = c_of(make_rb22()).cat;
    BiorderedCategory op = opposite_cat(c);
    CHECK(check_category(op).ok());
    CHECK(check_biordered(op).ok());
    CHECK(opposite_cat(op) == c);
    // Left restrictions of the reverse are the right restrictions.
    CHECK(op.lres.size() == c.rres.size());
}

TEST_CASE("the identity map is a functor and a dom swap is not") {
    BiorderedCategory c = c_of(make_b2()).cat;
    std::vector<int> id(c.m);
    for (int a = 0; a < c.m; ++a) id[a] = a;
    CHECK(is_biordered_functor(c, c, id));

    // Sending a non-object onto an object breaks dom preservation.
    std::vector<int> broken = id;
    broken[2] = c.objects[0];
    std::string reason;
    CHECK_FALSE(is_biordered_functor(c, c, broken, nullptr, &reason));
    CHECK_FALSE(reason.empty());
}

TEST_CASE("truncated chain categories stay lawful inside the bound") {
    BiorderedCategory c = chain_category(corpus_algebra("const2"), 3);
    CHECK(c.trunc_bound == 3);
    CHECK(c.m == 6);  // two singletons, two pairs, two triples
    CHECK(check_category(c).ok());
    CHECK(check_biordered(c).ok());

    // A composite that would leave the bound is absent, not wrong.
    // Ids are length-then-lex: 4 is the alternating triple starting at 0.
    CHECK(c.comp_opt(2, 3).has_value());
    CHECK(c.comp_at(2, 3) == 4);
    CHECK_FALSE(c.comp_opt(4, 4).has_value());
    CHECK_THROWS_AS(c.comp_at(4, 4), Error);
}

TEST_CASE("a corrupted composite is caught") {
    BiorderedCategory c = c_of(make_rb22()).cat;
    c.comp[0 * c.m + 0] = 1;  // identity composed with itself is itself
    CHECK_FALSE(check_category(c).ok());
}

TEST_CASE("singleton partitions form a congruence and rebuild the category") {
    BiorderedCategory c = c_of(make_rb22()).cat;
    std::vector<int> cls(c.m);
    for (int a = 0; a < c.m; ++a) cls[a] = a;
    CHECK(check_biordered_congruence(c, cls).ok());
    CHECK(quotient_category(c, cls) == c);

    // Merging morphisms with different endpoints is refused.
    std::vector<int> bad = {0, 0, 1, 2};
    CHECK_FALSE(check_biordered_congruence(c, bad).ok());
    CHECK_THROWS_AS(quotient_category(c, bad), Error);
}
