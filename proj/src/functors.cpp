#include "drckit/functors.hpp"

#include <string>

#include "drckit/error.hpp"

namespace drckit {

ChainedProjectionCategory c_of(const FiniteSemigroup& s) {
    ExtractedPA ex = extract_pa(s);
    const int n = s.n;
    const int np = static_cast<int>(ex.elems.size());

    ChainedProjectionCategory c;
    c.pa = ex.pa;

    BiorderedCategory& cat = c.cat;
    cat.m = n;
    cat.objects = ex.elems;
    cat.dom.resize(n);
    cat.cod.resize(n);
    for (int a = 0; a < n; ++a) {
        cat.dom[a] = s.d_op[a];
        cat.cod[a] = s.r_op[a];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.r_op[a] == s.d_op[b]) cat.comp[static_cast<long long>(a) * n + b] = s.mul[a][b];

    std::vector<std::vector<bool>> leq = order_of(ex.pa);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (leq[i][j]) cat.obj_leq_pairs.emplace_back(ex.elems[i], ex.elems[j]);

    // p <= D(a) makes p * a the left restriction; dually on the right.
    for (int a = 0; a < n; ++a) {
        const int di = ex.elem_to_pa[s.d_op[a]];
        const int ri = ex.elem_to_pa[s.r_op[a]];
        for (int i = 0; i < np; ++i) {
            if (leq[i][di]) cat.lres[static_cast<long long>(ex.elems[i]) * n + a] = s.mul[ex.elems[i]][a];
            if (leq[i][ri]) cat.rres[static_cast<long long>(a) * n + ex.elems[i]] = s.mul[a][ex.elems[i]];
        }
    }
    cat.trunc_bound = 0;
    cat.finalize();

    c.objs = ex.elems;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            // F-pairs include the diagonal since de(i,i)==i and th(i,i)==i.
            bool f_related = ex.pa.de(i, j) == i && ex.pa.th(j, i) == j;
            if (f_related) c.eval[static_cast<long long>(i) * np + j] = s.mul[ex.elems[i]][ex.elems[j]];
        }
    c.finalize();
    return c;
}

FiniteSemigroup s_of(const ChainedProjectionCategory& c) {
    if (c.cat.trunc_bound != 0)
        throw Error("s_of requires a complete category, got truncation bound " +
                    std::to_string(c.cat.trunc_bound));
    const int n = static_cast<int>(c.cat.m);
    FiniteSemigroup s;
    s.n = n;
    s.mul.assign(n, std::vector<int>(n, -1));
    s.d_op = c.cat.dom;
    s.r_op = c.cat.cod;
    for (int a = 0; a < n; ++a) {
        const int p = c.r_idx(a);
        for (int b = 0; b < n; ++b) {
            const int q = c.d_idx(b);
            const int pp = c.pa.de(p, q);
            const int qq = c.pa.th(q, p);
            int x = c.cat.rres_at(a, c.objs[pp]);
            int y = c.cat.lres_at(c.objs[qq], b);
            int mid = c.eval_at(pp, qq);
            s.mul[a][b] = c.cat.comp_at(c.cat.comp_at(x, mid), y);
        }
    }
    s.validate_shape();
    return s;
}

bool roundtrip_sc(const FiniteSemigroup& s) { return s_of(c_of(s)) == s; }

bool roundtrip_cs(const ChainedProjectionCategory& c) { return c_of(s_of(c)) == c; }

std::vector<int> transport_morphism(const FiniteSemigroup& src,
                                    const FiniteSemigroup& dst,
                                    const std::vector<int>& phi) {
    std::vector<long long> w;
    if (!is_drc_morphism(src, dst, phi, &w))
        throw Error("transport_morphism: map is not a DRC-morphism");
    ChainedProjectionCategory cs = c_of(src);
    ChainedProjectionCategory cd = c_of(dst);
    std::string reason;
    if (!is_cp_functor(cs, cd, phi, nullptr, &reason))
        throw Error("transport_morphism: transported map fails to be a cp functor: " + reason);
    return phi;
}

}  // namespace drckit
