#include <doctest.h>

#include <map>
#include <vector>

#include "drckit/chains.hpp"
#include "drckit/corpus.hpp"
#include "drckit/projection_algebra.hpp"

using namespace drckit;

TEST_CASE("normal forms drop adjacent duplicates and nothing else") {
    CHECK(normalize_chain({0, 0, 0}) == Path{0});
    CHECK(normalize_chain({0, 1, 1, 0}) == Path{0, 1, 0});
    CHECK(normalize_chain({0, 1, 0}) == Path{0, 1, 0});
    CHECK(normalize_chain({2}) == Path{2});
}

TEST_CASE("linked tuples depend on the algebra") {
    ProjectionAlgebra const2 = corpus_algebra("const2");
    ProjectionAlgebra chain2 = corpus_algebra("chain2pa");
    CHECK(is_path(const2, {0, 1, 0, 1}));
    CHECK(is_path(chain2, {0}));
    CHECK(is_path(chain2, {1, 1}));
    CHECK_FALSE(is_path(chain2, {0, 1}));
    CHECK_FALSE(is_path(const2, {}));
}

TEST_CASE("composition shares the junction entry") {
    CHECK(compose_paths({0, 1}, {1, 0}) == Path{0, 1, 0});
    CHECK(compose_paths({2}, {2, 1}) == Path{2, 1});
}

TEST_CASE("restrictions slide an end projection along the tuple") {
    ProjectionAlgebra pa = corpus_algebra("const2");
    // Every theta value is its left argument, so the left restriction copies
    // the tuple once the head matches.
    CHECK(left_restrict_path(pa, 0, {0, 1, 0}) == Path{0, 1, 0});
    CHECK(right_restrict_path(pa, {0, 1, 0}, 0) == Path{0, 1, 0});

    ProjectionAlgebra ch = corpus_algebra("chain3pa");
    CHECK(left_restrict_path(ch, 0, {2}) == Path{0});
    CHECK(right_restrict_path(ch, {2}, 1) == Path{1});
}

TEST_CASE("chain counts over the corpus algebras") {
    CHECK(all_chains(corpus_algebra("chain2pa"), 5).size() == 2);
    CHECK(all_chains(corpus_algebra("chain3pa"), 5).size() == 3);
    CHECK(all_chains(corpus_algebra("const2"), 5).size() == 10);
    CHECK(all_chains(corpus_algebra("b2pa"), 5).size() == 3);
}

TEST_CASE("chain operations renormalise their results") {
    ProjectionAlgebra pa = corpus_algebra("const2");
    CHECK(chain_compose({0, 1}, {1, 0}) == Path{0, 1, 0});
    CHECK(chain_compose({0, 1}, {1}) == Path{0, 1});
    CHECK(chain_left_restrict(pa, 0, {0, 1}) == Path{0, 1});
    CHECK(chain_right_restrict(pa, {0, 1}, 1) == Path{0, 1});
}

TEST_CASE("collapsing repeats classifies paths exactly at desk scale") {
    for (const char* name : {"chain2pa", "const2", "b2pa"}) {
        INFO(name);
        ProjectionAlgebra pa = corpus_algebra(name);
        PathClosure pc = path_congruence_closure(pa, 5);
        REQUIRE(pc.paths.size() == pc.cls.size());
        // Two paths share a class exactly when their normal forms agree.
        std::map<Path, int> seen;
        for (std::size_t i = 0; i < pc.paths.size(); ++i) {
            Path nf = normalize_chain(pc.paths[i]);
            auto it = seen.find(nf);
            if (it == seen.end()) {
                seen.emplace(nf, pc.cls[i]);
            } else {
                CHECK(it->second == pc.cls[i]);
            }
        }
        // Distinct normal forms never share a class.
        std::map<int, Path> rep;
        for (const auto& [nf, cls] : seen) {
            auto it = rep.find(cls);
            CHECK(it == rep.end());
            rep.emplace(cls, nf);
        }
    }
}

TEST_CASE("the truncated chain category records its bound") {
    BiorderedCategory c = chain_category(corpus_algebra("b2pa"), 4);
    // Only singleton chains exist here, so nothing is truncated away.
    CHECK(c.m == 3);
    CHECK(check_category(c).ok());
    CHECK(check_biordered(c).ok());
}
