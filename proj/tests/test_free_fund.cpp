#include <doctest.h>

#include <set>
#include <vector>

#include "drckit/chains.hpp"
#include "drckit/corpus.hpp"
#include "drckit/error.hpp"
#include "drckit/free_fund.hpp"
#include "drckit/semigroup.hpp"

using namespace drckit;

namespace {

const char* kAlgebraNames[] = {"chain2pa", "chain3pa", "const2", "b2pa",
                               "rel2pa"};

}  // namespace

TEST_CASE("rewriting lands on a linked word with the same action pair") {
    ProjectionAlgebra b2pa = corpus_algebra("b2pa");
    CHECK(rewrite_to_path(b2pa, {1, 2}) == Path{0});
    CHECK(rewrite_to_path(corpus_algebra("const2"), {0, 0, 1}) == Path{0, 1});
    CHECK(rewrite_to_path(corpus_algebra("chain3pa"), {2, 0}) == Path{0});

    for (const char* name : kAlgebraNames) {
        INFO(name);
        ProjectionAlgebra pa = corpus_algebra(name);
        for (Word w : {Word{0}, Word{0, 1}, Word{1, 0, 1}, Word{1, 1, 0}}) {
            Path p = rewrite_to_path(pa, w);
            CHECK(is_path(pa, p));
            MPElement before = psi(pa, w);
            MPElement after = psi(pa, p);
            CHECK(before.tmap == after.tmap);
            CHECK(before.dmap == after.dmap);
        }
    }
}

TEST_CASE("class counts at length four and their slack invariance") {
    std::vector<std::pair<const char*, int>> expect = {
        {"chain2pa", 2}, {"chain3pa", 3}, {"const2", 8}, {"b2pa", 3},
        {"rel2pa", 4}};
    for (const auto& [name, classes] : expect) {
        INFO(name);
        ProjectionAlgebra pa = corpus_algebra(name);
        BoundedFreeSemigroup f2 = build_bounded_free(pa, 4, 2);
        BoundedFreeSemigroup f4 = build_bounded_free(pa, 4, 4);
        CHECK(f2.num_classes == classes);
        CHECK(f4.num_classes == classes);
        CHECK(check_free_projections(f2).ok());
    }
    // The alternating words keep producing fresh classes past the bound.
    CHECK(build_bounded_free(corpus_algebra("const2"), 4, 2)
              .num_classes_total == 12);
}

TEST_CASE("collapsing to tables succeeds exactly when products resolve") {
    FiniteSemigroup chain3 =
        as_semigroup(build_bounded_free(corpus_algebra("chain3pa"), 4));
    CHECK(chain3 == corpus_semigroup("chain3"));

    ProjectionAlgebra b2pa = corpus_algebra("b2pa");
    FiniteSemigroup flat = as_semigroup(build_bounded_free(b2pa, 4));
    CHECK(flat.mul == b2pa.theta);
    for (int p = 0; p < flat.n; ++p) {
        CHECK(flat.d_op[p] == p);
        CHECK(flat.r_op[p] == p);
    }

    // Alternating words grow without bound, so no finite table exists.
    CHECK_THROWS_AS(as_semigroup(build_bounded_free(corpus_algebra("const2"), 4)),
                    Error);
}

TEST_CASE("the action pair closure is fundamental and recovers the algebra") {
    std::vector<std::pair<const char*, int>> expect = {
        {"chain2pa", 2}, {"chain3pa", 3}, {"const2", 4}, {"b2pa", 3},
        {"rel2pa", 4}};
    for (const auto& [name, size] : expect) {
        INFO(name);
        ProjectionAlgebra pa = corpus_algebra(name);
        MPSemigroup mp = mp_of(pa);
        CHECK((int)mp.elems.size() == size);
        CHECK(mp.sg.n == size);
        CHECK(check_drc_axioms(mp.sg).ok());
        CHECK(is_fundamental(mp.sg));
        CHECK(is_projection_generated(mp.sg));
        CHECK(extract_pa(mp.sg).pa == pa);
    }
}

TEST_CASE("the two generator closure over the flip algebra is the band") {
    MPSemigroup mp = mp_of(corpus_algebra("const2"));
    REQUIRE(mp.sg.n == 4);
    CHECK(mp.sg.d_op == std::vector<int>{0, 1, 0, 1});
    CHECK(mp.sg.r_op == std::vector<int>{0, 1, 1, 0});

    FiniteSemigroup rb22 = corpus_semigroup("rb22");
    std::vector<int> phi = {0, 3, 1, 2};
    CHECK(is_drc_morphism(mp.sg, rb22, phi));
    CHECK(std::set<int>(phi.begin(), phi.end()).size() == 4);
}

TEST_CASE("stored generator assignments extend uniquely") {
    for (const BundledMorphism& b : corpus_morphisms()) {
        INFO(b.algebra << " -> " << b.semigroup);
        BoundedFreeSemigroup f = build_bounded_free(corpus_algebra(b.algebra), 4);
        FiniteSemigroup s = corpus_semigroup(b.semigroup);
        CHECK(check_unique_extension(f, s, b.image).ok());
    }
}

TEST_CASE("an assignment off the algebra morphisms cannot extend") {
    BoundedFreeSemigroup f = build_bounded_free(corpus_algebra("chain2pa"), 4);
    FiniteSemigroup b2 = corpus_semigroup("b2");
    CHECK_FALSE(check_unique_extension(f, b2, {1, 4}).ok());
    CHECK_THROWS_AS(induced_morphism(f, {1, 4}, b2), Error);
}

TEST_CASE("commuting projections and the restriction laws across the corpus") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        bool ehresmann = e.name != "rb22";
        bool restriction = e.name != "rel2";
        CHECK(is_ehresmann(e.sg) == ehresmann);
        CHECK(is_drc_restriction(e.sg) == restriction);
        CHECK(orders_coincide(e.sg) == restriction);
    }
}
