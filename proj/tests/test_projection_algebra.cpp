#include <doctest.h>

#include <vector>

#include "drckit/corpus.hpp"
#include "drckit/error.hpp"
#include "drckit/projection_algebra.hpp"

using namespace drckit;

TEST_CASE("every corpus algebra passes the axioms and their consequences") {
    for (const CorpusAlgebra& a : corpus_algebras()) {
        INFO(a.name);
        CHECK(check_pa_axioms(a.pa).ok());
        CHECK(check_pa_derived(a.pa).ok());
    }
}

TEST_CASE("the extracted tables of the small Brandt semigroup are flat") {
    ProjectionAlgebra pa = corpus_algebra("b2pa");
    REQUIRE(pa.n == 3);
    // Index 0 is the zero projection; distinct nonzero projections squash to it.
    CHECK(pa.theta == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK(pa.delta == pa.theta);
    CHECK(is_symmetric(pa));
}

TEST_CASE("a broken cell is rejected with the offending indices") {
    ProjectionAlgebra pa = corpus_algebra("chain3pa");
    pa.theta[1][1] = 0;  // breaks p theta_p = p
    AxiomReport rep = check_pa_axioms(pa);
    CHECK_FALSE(rep.ok());
    const CheckResult* bad = rep.first_failure();
    REQUIRE(bad != nullptr);
    CHECK(bad->witness == std::vector<long long>{1});
}

TEST_CASE("the order is a partial order matching the chain") {
    ProjectionAlgebra pa = corpus_algebra("chain3pa");
    auto leq = order_of(pa);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) CHECK(leq[p][q] == (p <= q));
}

TEST_CASE("the constant algebra orders every pair both ways nowhere") {
    auto leq = order_of(corpus_algebra("const2"));
    CHECK(leq[0][0]);
    CHECK(leq[1][1]);
    CHECK_FALSE(leq[0][1]);
    CHECK_FALSE(leq[1][0]);
}

TEST_CASE("the linking relation is reflexive and total only where it should be") {
    SUBCASE("chains link only equal projections") {
        auto f = f_relation_of(corpus_algebra("chain2pa"));
        CHECK(f[0][0]);
        CHECK(f[1][1]);
        CHECK_FALSE(f[0][1]);
        CHECK_FALSE(f[1][0]);
    }
    SUBCASE("the constant algebra links everything") {
        auto f = f_relation_of(corpus_algebra("const2"));
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) CHECK(f[p][q]);
    }
}

TEST_CASE("swapping the families twice is the identity") {
    for (const CorpusAlgebra& a : corpus_algebras()) {
        INFO(a.name);
        ProjectionAlgebra op = opposite_pa(a.pa);
        CHECK(check_pa_axioms(op).ok());
        CHECK(opposite_pa(op) == a.pa);
    }
}

TEST_CASE("symmetric corpus algebras coincide with their opposite") {
    for (const CorpusAlgebra& a : corpus_algebras()) {
        INFO(a.name);
        CHECK(is_symmetric(a.pa));
        CHECK(opposite_pa(a.pa) == a.pa);
    }
}

TEST_CASE("identity and collapse maps are morphisms, a family swap is not always") {
    ProjectionAlgebra chain3 = corpus_algebra("chain3pa");
    std::vector<int> id = {0, 1, 2};
    CHECK(is_pa_morphism(chain3, chain3, id));

    // Collapsing the top two levels respects minimum.
    std::vector<int> squash = {0, 1, 1};
    CHECK(is_pa_morphism(chain3, chain3, squash));

    // Swapping bottom and top of a chain does not respect minimum.
    ProjectionAlgebra chain2 = corpus_algebra("chain2pa");
    std::vector<long long> witness;
    CHECK_FALSE(is_pa_morphism(chain2, chain2, {1, 0}, &witness));
    CHECK(witness.size() == 2);
}

TEST_CASE("single family axioms hold on the symmetric corpus algebras") {
    for (const CorpusAlgebra& a : corpus_algebras()) {
        INFO(a.name);
        CHECK(check_imaoka(a.pa).ok());
    }
}

TEST_CASE("shape validation rejects ragged and out of range tables") {
    ProjectionAlgebra pa = corpus_algebra("chain2pa");
    pa.theta[0][1] = 7;
    CHECK_THROWS_AS(check_pa_axioms(pa), Error);
    pa = corpus_algebra("chain2pa");
    pa.delta.pop_back();
    CHECK_THROWS_AS(check_pa_axioms(pa), Error);
}
