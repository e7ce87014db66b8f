#include "drckit/corpus.hpp"

#include "drckit/error.hpp"

namespace drckit {

namespace {

FiniteSemigroup chain_semigroup(int n) {
    FiniteSemigroup s;
    s.n = n;
    s.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s.mul[a][b] = a < b ? a : b;
    s.d_op.resize(n);
    s.r_op.resize(n);
    for (int a = 0; a < n; ++a) s.d_op[a] = s.r_op[a] = a;
    return s;
}

ProjectionAlgebra chain_algebra(int n) {
    ProjectionAlgebra pa;
    pa.n = n;
    pa.theta.assign(n, std::vector<int>(n, 0));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) pa.theta[p][q] = p < q ? p : q;
    pa.delta = pa.theta;
    return pa;
}

}  // namespace

FiniteSemigroup make_chain2() { return chain_semigroup(2); }

FiniteSemigroup make_chain3() { return chain_semigroup(3); }

FiniteSemigroup make_rb22() {
    FiniteSemigroup s;
    s.n = 4;
    s.mul.assign(4, std::vector<int>(4, 0));
    s.d_op.resize(4);
    s.r_op.resize(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int a = 2 * i + j;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s.mul[a][2 * k + l] = 2 * i + l;
            s.d_op[a] = 3 * i;
            s.r_op[a] = 3 * j;
        }
    return s;
}

FiniteSemigroup make_b2() {
    FiniteSemigroup s;
    s.n = 5;
    // 0 is the zero; 1, 2, 3, 4 are the units e11, e12, e21, e22.
    s.mul = {{0, 0, 0, 0, 0},
             {0, 1, 2, 0, 0},
             {0, 0, 0, 1, 2},
             {0, 3, 4, 0, 0},
             {0, 0, 0, 3, 4}};
    s.d_op = {0, 1, 1, 4, 4};
    s.r_op = {0, 1, 4, 1, 4};
    return s;
}

FiniteSemigroup make_chain2xc3() {
    FiniteSemigroup s;
    s.n = 6;
    s.mul.assign(6, std::vector<int>(6, 0));
    s.d_op.resize(6);
    s.r_op.resize(6);
    for (int a = 0; a < 6; ++a) {
        int sa = a / 3, ga = a % 3;
        for (int b = 0; b < 6; ++b) {
            int sb = b / 3, gb = b % 3;
            s.mul[a][b] = 3 * (sa < sb ? sa : sb) + (ga + gb) % 3;
        }
        s.d_op[a] = s.r_op[a] = 3 * sa;
    }
    return s;
}

FiniteSemigroup make_rel2() {
    FiniteSemigroup s;
    s.n = 16;
    auto bit = [](int i, int j) { return 1 << (2 * i + j); };
    s.mul.assign(16, std::vector<int>(16, 0));
    s.d_op.assign(16, 0);
    s.r_op.assign(16, 0);
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            int c = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        if ((a & bit(i, k)) && (b & bit(k, j))) c |= bit(i, j);
            s.mul[a][b] = c;
        }
        int d = 0, r = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (a & bit(i, j)) {
                    d |= bit(i, i);
                    r |= bit(j, j);
                }
        s.d_op[a] = d;
        s.r_op[a] = r;
    }
    return s;
}

std::vector<CorpusSemigroup> corpus_semigroups() {
    return {
        {"chain2", make_chain2(), true},
        {"chain3", make_chain3(), true},
        {"rb22", make_rb22(), false},
        {"b2", make_b2(), true},
        {"chain2xc3", make_chain2xc3(), true},
        {"rel2", make_rel2(), false},
    };
}

std::vector<CorpusAlgebra> corpus_algebras() {
    ProjectionAlgebra const2;
    const2.n = 2;
    const2.theta = {{0, 0}, {1, 1}};
    const2.delta = const2.theta;
    return {
        {"chain2pa", chain_algebra(2)},
        {"chain3pa", chain_algebra(3)},
        {"const2", const2},
        {"b2pa", extract_pa(make_b2()).pa},
        {"rel2pa", extract_pa(make_rel2()).pa},
    };
}

std::vector<BundledMorphism> corpus_morphisms() {
    return {
        {"const2", "rb22", {0, 3}},
        {"chain2pa", "chain2", {0, 1}},
        {"chain2pa", "chain3", {0, 2}},
        {"b2pa", "b2", {0, 1, 4}},
    };
}

FiniteSemigroup corpus_semigroup(const std::string& name) {
    for (CorpusSemigroup& e : corpus_semigroups())
        if (e.name == name) return e.sg;
    throw Error("unknown corpus semigroup: " + name);
}

ProjectionAlgebra corpus_algebra(const std::string& name) {
    for (CorpusAlgebra& e : corpus_algebras())
        if (e.name == name) return e.pa;
    throw Error("unknown corpus algebra: " + name);
}

}  // namespace drckit
