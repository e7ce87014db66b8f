#include <doctest.h>

#include <string>
#include <vector>

#include "drckit/error.hpp"
#include "drckit/model_search.hpp"
#include "drckit/projection_algebra.hpp"

using namespace drckit;

TEST_CASE("axiom identifiers are case insensitive and validated") {
    CHECK(is_known_axiom("p1"));
    CHECK(is_known_axiom("P4'"));
    CHECK(is_known_axiom("LP3"));
    CHECK(is_known_axiom("symmetry"));
    CHECK_FALSE(is_known_axiom("p11"));
    CHECK_FALSE(is_known_axiom(""));
    CHECK_THROWS_AS(search_models({"bogus"}, "p1", 2, 1), Error);
    CHECK_THROWS_AS(search_models({"p1"}, "bogus", 2, 1), Error);
    CHECK_THROWS_AS(search_models({"p1"}, "p2", 0, 1), Error);
    CHECK_THROWS_AS(search_models({"p1"}, "p2", 9, 1), Error);
}

TEST_CASE("the first three one sided laws force the fourth up to size two") {
    std::vector<std::string> sat = {"lp1", "lp2", "lp3"};
    for (int size = 1; size <= 2; ++size) {
        SearchResult r = search_models(sat, "lp4", size, 4);
        CHECK(r.exhausted);
        CHECK(r.models.empty());
    }

    SearchResult r = search_models(sat, "lp4", 3, 2);
    REQUIRE(r.models.size() == 2);
    CHECK_FALSE(r.exhausted);  // stopped at the limit, not the space
    const ProjectionAlgebra& m = r.models[0];
    CHECK(m.theta == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    CHECK(m.delta == std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 0}, {2, 2, 2}});
    for (const ProjectionAlgebra& model : r.models) {
        for (const std::string& id : sat) CHECK(axiom_holds(id, model));
        CHECK_FALSE(axiom_holds("lp4", model));
    }
}

TEST_CASE("the composite closure law follows from the base five") {
    std::vector<std::string> sat = {"p1", "p2", "p3", "p4", "p5"};
    for (int size = 1; size <= 4; ++size) {
        INFO(size);
        SearchResult r = search_models(sat, "p6", size, 1);
        CHECK(r.exhausted);
        CHECK(r.models.empty());
    }
}

TEST_CASE("the primed fourth law is independent of the base axioms") {
    SearchResult r = search_models({"p1", "p2", "p3", "p4", "p5", "symmetry"},
                                   "p4'", 3, 8);
    CHECK(r.exhausted);
    REQUIRE(r.models.size() == 1);
    const ProjectionAlgebra& m = r.models[0];
    CHECK(m.theta == std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 1}, {2, 2, 2}});
    CHECK(m.delta == m.theta);
    CHECK(check_pa_axioms(m).ok());
    CHECK_FALSE(axiom_holds("p4'", m));
    CHECK_FALSE(check_imaoka(m).ok());

    // No smaller witness exists.
    for (int size = 1; size <= 2; ++size) {
        SearchResult small = search_models({"p1", "p2", "p3", "p4", "p5",
                                            "symmetry"},
                                           "p4'", size, 1);
        CHECK(small.exhausted);
        CHECK(small.models.empty());
    }
}
