#include <doctest.h>

#include <vector>

#include "drckit/corpus.hpp"
#include "drckit/error.hpp"
#include "drckit/functors.hpp"
#include "drckit/semigroup.hpp"

using namespace drckit;

TEST_CASE("a semigroup survives the trip through its category") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        CHECK(roundtrip_sc(e.sg));
    }
}

TEST_CASE("an induced category survives the trip through its semigroup") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        CHECK(roundtrip_cs(c_of(e.sg)));
    }
}

TEST_CASE("rebuilding needs every composite, not a truncated table") {
    ChainedProjectionCategory t = make_chain_cpc(corpus_algebra("const2"), 3);
    CHECK_THROWS_AS(s_of(t), Error);
}

TEST_CASE("semigroup morphisms transport verbatim to chained functors") {
    FiniteSemigroup src = corpus_semigroup("chain2");
    FiniteSemigroup dst = corpus_semigroup("chain3");
    std::vector<int> phi = {0, 2};
    REQUIRE(is_drc_morphism(src, dst, phi));
    CHECK(transport_morphism(src, dst, phi) == phi);

    // The order-reversing self map breaks the unary operations.
    CHECK_THROWS_AS(transport_morphism(src, src, {1, 0}), Error);
}

TEST_CASE("single entry damage is either unlawful or still round trips") {
    for (const char* name : {"rb22", "b2"}) {
        INFO(name);
        FiniteSemigroup s = corpus_semigroup(name);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j)
                for (int v = 0; v < s.n; ++v) {
                    if (v == s.mul[i][j]) continue;
                    FiniteSemigroup m = s;
                    m.mul[i][j] = v;
                    bool lawful = check_drc_axioms(m).ok();
                    CHECK((!lawful || roundtrip_sc(m)));
                }
    }
}
