#include <doctest.h>

#include <vector>

#include "drckit/corpus.hpp"
#include "drckit/error.hpp"
#include "drckit/projection_algebra.hpp"
#include "drckit/semigroup.hpp"

using namespace drckit;

namespace {

// Independent congruence oracle: every partition of the carrier, kept when
// it respects products, D and R. Restricted growth strings enumerate the
// partitions without repetition.
int count_congruences_brute(const FiniteSemigroup& s) {
    int n = s.n;
    std::vector<int> cls(n, 0);
    int found = 0;
    auto respects = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (cls[a] != cls[b]) continue;
                if (cls[s.d_op[a]] != cls[s.d_op[b]]) return false;
                if (cls[s.r_op[a]] != cls[s.r_op[b]]) return false;
                for (int c = 0; c < n; ++c) {
                    if (cls[s.mul[a][c]] != cls[s.mul[b][c]]) return false;
                    if (cls[s.mul[c][a]] != cls[s.mul[c][b]]) return false;
                }
            }
        return true;
    };
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (respects()) ++found;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            cls[i] = c;
            self(self, i + 1, c == used ? used + 1 : used);
        }
    };
    rec(rec, 1, 1);
    return found;
}

}  // namespace

TEST_CASE("every corpus semigroup passes the defining laws and their consequences") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        CHECK(check_drc_axioms(e.sg).ok());
        CHECK(check_drc_derived(e.sg).ok());
    }
}

TEST_CASE("projection lists are as expected") {
    CHECK(projections_of(make_chain2()) == std::vector<int>{0, 1});
    CHECK(projections_of(make_chain3()) == std::vector<int>{0, 1, 2});
    CHECK(projections_of(make_rb22()) == std::vector<int>{0, 3});
    CHECK(projections_of(make_b2()) == std::vector<int>{0, 1, 4});
    CHECK(projections_of(make_chain2xc3()) == std::vector<int>{0, 3});
    CHECK(projections_of(make_rel2()) == std::vector<int>{0, 1, 8, 9});
}

TEST_CASE("projections coincide with the images of D and of R") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        std::vector<int> projs = projections_of(e.sg);
        std::vector<bool> in_proj(e.sg.n, false);
        for (int p : projs) in_proj[p] = true;
        std::vector<bool> d_image(e.sg.n, false), r_image(e.sg.n, false);
        for (int a = 0; a < e.sg.n; ++a) {
            d_image[e.sg.d_op[a]] = true;
            r_image[e.sg.r_op[a]] = true;
        }
        CHECK(d_image == in_proj);
        CHECK(r_image == in_proj);
    }
}

TEST_CASE("the rectangular band induces the constant algebra") {
    ExtractedPA ex = extract_pa(make_rb22());
    CHECK(ex.elems == std::vector<int>{0, 3});
    CHECK(ex.pa == corpus_algebra("const2"));
    CHECK(ex.elem_to_pa[0] == 0);
    CHECK(ex.elem_to_pa[3] == 1);
    CHECK(ex.elem_to_pa[1] == -1);
}

TEST_CASE("a corrupted product table is rejected") {
    FiniteSemigroup s = make_b2();
    s.mul[1][1] = 2;
    AxiomReport rep = check_drc_axioms(s);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("reversing twice is the identity and reversing swaps D with R") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        FiniteSemigroup op = opposite_semigroup(e.sg);
        CHECK(check_drc_axioms(op).ok());
        CHECK(op.d_op == e.sg.r_op);
        CHECK(op.r_op == e.sg.d_op);
        CHECK(opposite_semigroup(op) == e.sg);
    }
}

TEST_CASE("element orders restrict to the algebra order on projections") {
    for (const CorpusSemigroup& e : corpus_semigroups()) {
        INFO(e.name);
        ExtractedPA ex = extract_pa(e.sg);
        auto leq = order_of(ex.pa);
        auto left = left_order_of(e.sg);
        auto right = right_order_of(e.sg);
        int k = static_cast<int>(ex.elems.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                CHECK(left[ex.elems[i]][ex.elems[j]] == leq[i][j]);
                CHECK(right[ex.elems[i]][ex.elems[j]] == leq[i][j]);
            }
    }
}

TEST_CASE("the group component is squashed by the separating congruence") {
    FiniteSemigroup s = make_chain2xc3();
    CHECK(mu_of(s) == std::vector<int>{0, 0, 0, 1, 1, 1});
    CHECK_FALSE(is_fundamental(s));
    CHECK(quotient_semigroup(s, mu_of(s)) == make_chain2());
}

TEST_CASE("fundamental and projection generated flags") {
    CHECK(is_fundamental(make_chain2()));
    CHECK(is_fundamental(make_chain3()));
    CHECK(is_fundamental(make_rb22()));
    CHECK(is_fundamental(make_b2()));
    CHECK(is_fundamental(make_rel2()));

    CHECK(is_projection_generated(make_chain2()));
    CHECK(is_projection_generated(make_chain3()));
    CHECK(is_projection_generated(make_rb22()));
    CHECK_FALSE(is_projection_generated(make_b2()));
    CHECK_FALSE(is_projection_generated(make_chain2xc3()));
    CHECK_FALSE(is_projection_generated(make_rel2()));
}

TEST_CASE("quotients demand genuine congruences") {
    // Merging bottom and top of a chain but not the middle breaks products.
    CHECK_THROWS_AS(quotient_semigroup(make_chain3(), {0, 1, 0}), Error);
}

TEST_CASE("congruence listings match a partition brute force") {
    for (const char* name : {"chain2", "chain3", "rb22", "b2"}) {
        INFO(name);
        FiniteSemigroup s = corpus_semigroup(name);
        auto listed = enumerate_congruences(s);
        CHECK(static_cast<int>(listed.size()) == count_congruences_brute(s));
        for (const auto& cls : listed) CHECK_NOTHROW(quotient_semigroup(s, cls));
    }
}

TEST_CASE("congruence listing refuses large carriers") {
    CHECK_THROWS_AS(enumerate_congruences(make_rel2()), Error);
}

TEST_CASE("morphism checks accept embeddings and reject swaps") {
    CHECK(is_drc_morphism(make_chain2(), make_chain3(), {0, 2}));
    std::vector<long long> witness;
    CHECK_FALSE(is_drc_morphism(make_chain2(), make_chain2(), {1, 0}, &witness));
    CHECK_FALSE(witness.empty());
}
