#include "drckit/free_fund.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "drckit/error.hpp"
#include "drckit/kernels.hpp"

namespace drckit {

namespace {

struct UnionFind {
    std::vector<int> par;
    explicit UnionFind(int n) : par(n) { std::iota(par.begin(), par.end(), 0); }
    int find(int x) {
        while (par[x] != x) {
            par[x] = par[par[x]];
            x = par[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) par[std::max(a, b)] = std::min(a, b);
    }
};

void check_letters(const ProjectionAlgebra& pa, const Word& w) {
    if (w.empty()) throw Error("empty word");
    for (int x : w)
        if (x < 0 || x >= pa.n) throw Error("letter " + std::to_string(x) + " out of range");
}

Path rewrite_raw(const ProjectionAlgebra& pa, const Word& w) {
    if (w.size() == 1) return w;
    const int a = w[w.size() - 2];
    const int b = w[w.size() - 1];
    // One round of the defining relations turns the final pair into an
    // F-related one sitting below it.
    const int a2 = pa.de(a, b);
    const int b2 = pa.th(b, a);
    Word pre(w.begin(), w.end() - 2);
    pre.push_back(a2);
    Path out = rewrite_raw(pa, pre);
    // The recursion may have shrunk the junction, so pull the right half
    // down to the new endpoint.
    out.push_back(pa.th(b2, out.back()));
    return out;
}

}  // namespace

Path rewrite_to_path(const ProjectionAlgebra& pa, const Word& w) {
    check_letters(pa, w);
    Path raw = rewrite_raw(pa, w);
    std::vector<std::vector<bool>> leq = order_of(pa);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!leq[raw[i]][w[i]])
            throw Error("rewrite produced an entry above its letter at position " + std::to_string(i));
    if (!is_path(pa, raw)) throw Error("rewrite produced consecutive entries that are not linked");
    return normalize_chain(raw);
}

long long BoundedFreeSemigroup::word_index(const Word& w) const {
    const int cap = max_len + slack;
    const int len = static_cast<int>(w.size());
    if (len < 1 || len > cap) return -1;
    long long off = 0, pw = 1;
    for (int l = 1; l < len; ++l) {
        pw *= pa.n;
        off += pw;
    }
    // off now counts the words shorter than len; decode w in base n on top.
    long long code = 0;
    for (int x : w) code = code * pa.n + x;
    return off + code;
}

int BoundedFreeSemigroup::class_of(const Word& w) const {
    long long i = word_index(w);
    return i < 0 ? -1 : cls[static_cast<std::size_t>(i)];
}

Word BoundedFreeSemigroup::rep(int c) const { return words[rep_index[c]]; }

BoundedFreeSemigroup build_bounded_free(const ProjectionAlgebra& pa, int max_len, int slack) {
    pa.validate_shape();
    if (max_len < 1) throw Error("length bound must be at least 1");
    if (slack < 0) throw Error("slack must be nonnegative");
    const int n = pa.n;
    const int cap = max_len + slack;
    long long total = 0, pw = 1;
    for (int l = 1; l <= cap; ++l) {
        pw *= n;
        total += pw;
        if (total > 5'000'000) throw Error("word store would exceed five million entries");
    }

    BoundedFreeSemigroup f;
    f.pa = pa;
    f.max_len = max_len;
    f.slack = slack;
    f.words.reserve(static_cast<std::size_t>(total));
    for (int l = 1; l <= cap; ++l) {
        Word w(l, 0);
        while (true) {
            f.words.push_back(w);
            int j = l - 1;
            while (j >= 0 && w[j] == n - 1) w[j--] = 0;
            if (j < 0) break;
            ++w[j];
        }
    }

    UnionFind uf(static_cast<int>(total));
    for (int i = 0; i < static_cast<int>(total); ++i) {
        const Word& w = f.words[i];
        const int len = static_cast<int>(w.size());
        Word tmp;
        for (int j = 0; j + 1 < len; ++j) {
            const int p = w[j], q = w[j + 1];
            if (p == q) {
                tmp = w;
                tmp.erase(tmp.begin() + j);
                uf.unite(i, static_cast<int>(f.word_index(tmp)));
            }
            const int q2 = pa.th(q, p);
            if (q2 != q) {
                tmp = w;
                tmp[j + 1] = q2;
                uf.unite(i, static_cast<int>(f.word_index(tmp)));
            }
            const int p2 = pa.de(p, q);
            if (p2 != p) {
                tmp = w;
                tmp[j] = p2;
                uf.unite(i, static_cast<int>(f.word_index(tmp)));
            }
        }
    }

    long long inbound_total = 0;
    pw = 1;
    for (int l = 1; l <= max_len; ++l) {
        pw *= n;
        inbound_total += pw;
    }

    f.cls.assign(static_cast<std::size_t>(total), -1);
    std::vector<int> root_to_cls(static_cast<std::size_t>(total), -1);
    for (int i = 0; i < static_cast<int>(total); ++i) {
        int r = uf.find(i);
        if (root_to_cls[r] < 0) {
            root_to_cls[r] = f.num_classes_total++;
            f.rep_index.push_back(i);
            if (i < inbound_total) f.num_classes = f.num_classes_total;
        }
        f.cls[i] = root_to_cls[r];
    }
    return f;
}

int bounded_product(const BoundedFreeSemigroup& f, int ca, int cb) {
    Word w = f.rep(ca);
    const Word& wb = f.words[f.rep_index[cb]];
    w.insert(w.end(), wb.begin(), wb.end());
    if (static_cast<int>(w.size()) <= f.max_len + f.slack) return f.class_of(w);
    Path p = rewrite_to_path(f.pa, w);
    return f.class_of(p);
}

int bounded_d(const BoundedFreeSemigroup& f, int c) {
    Path p = rewrite_to_path(f.pa, f.rep(c));
    return f.class_of({p.front()});
}

int bounded_r(const BoundedFreeSemigroup& f, int c) {
    Path p = rewrite_to_path(f.pa, f.rep(c));
    return f.class_of({p.back()});
}

FiniteSemigroup as_semigroup(const BoundedFreeSemigroup& f) {
    FiniteSemigroup s;
    s.n = f.num_classes;
    s.mul.assign(s.n, std::vector<int>(s.n, -1));
    s.d_op.resize(s.n);
    s.r_op.resize(s.n);
    for (int i = 0; i < s.n; ++i) {
        s.d_op[i] = bounded_d(f, i);
        s.r_op[i] = bounded_r(f, i);
        for (int j = 0; j < s.n; ++j) {
            int c = bounded_product(f, i, j);
            if (c < 0 || c >= f.num_classes)
                throw Error("product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                            " escapes the length bound");
            s.mul[i][j] = c;
        }
    }
    s.validate_shape();
    return s;
}

AxiomReport check_free_projections(const BoundedFreeSemigroup& f) {
    AxiomReport rep;
    rep.subject = "free projections";
    const int n = f.pa.n;
    std::vector<int> one(n);
    for (int p = 0; p < n; ++p) one[p] = f.class_of({p});

    rep.checks.push_back(scan2("one-letter classes are distinct", n, n, [&](long long p, long long q) {
        return p == q || one[p] != one[q];
    }));
    rep.checks.push_back(scan1("one-letter classes are projections", n, [&](long long p) {
        int c = one[p];
        return bounded_product(f, c, c) == c && bounded_d(f, c) == c && bounded_r(f, c) == c;
    }));
    rep.checks.push_back(scan2("induced tables match the algebra", n, n, [&](long long p, long long q) {
        int ip = static_cast<int>(p), iq = static_cast<int>(q);
        int qp = f.class_of({iq, ip});
        int pq = f.class_of({ip, iq});
        return bounded_r(f, qp) == one[f.pa.th(ip, iq)] && bounded_d(f, pq) == one[f.pa.de(ip, iq)];
    }));
    return rep;
}

MPElement psi(const ProjectionAlgebra& pa, const Word& w) {
    check_letters(pa, w);
    MPElement e;
    e.tmap.resize(pa.n);
    e.dmap.resize(pa.n);
    for (int t = 0; t < pa.n; ++t) {
        int cur = t;
        for (std::size_t i = 0; i < w.size(); ++i) cur = pa.th(w[i], cur);
        e.tmap[t] = cur;
        cur = t;
        for (std::size_t i = w.size(); i-- > 0;) cur = pa.de(w[i], cur);
        e.dmap[t] = cur;
    }
    e.witness = rewrite_to_path(pa, w);
    return e;
}

int MPSemigroup::elem_of(const std::vector<int>& tmap, const std::vector<int>& dmap) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i].tmap == tmap && elems[i].dmap == dmap) return static_cast<int>(i);
    return -1;
}

namespace {

MPElement mp_product(const ProjectionAlgebra& pa, const MPElement& a, const MPElement& b) {
    MPElement e;
    e.tmap.resize(pa.n);
    e.dmap.resize(pa.n);
    for (int t = 0; t < pa.n; ++t) {
        e.tmap[t] = b.tmap[a.tmap[t]];
        e.dmap[t] = a.dmap[b.dmap[t]];
    }
    // Meet the two witnesses at a common junction pair and keep both halves.
    const int s = pa.de(a.witness.back(), b.witness.front());
    const int t = pa.th(b.witness.front(), a.witness.back());
    Path left = right_restrict_path(pa, a.witness, s);
    Path right = left_restrict_path(pa, t, b.witness);
    left.insert(left.end(), right.begin(), right.end());
    e.witness = normalize_chain(left);
    MPElement probe = psi(pa, e.witness);
    if (probe.tmap != e.tmap || probe.dmap != e.dmap)
        throw Error("composed witness does not realize the composed actions");
    return e;
}

}  // namespace

MPSemigroup mp_of(const ProjectionAlgebra& pa) {
    pa.validate_shape();
    MPSemigroup m;
    m.pa = pa;
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    auto add = [&](MPElement&& e) {
        auto key = std::make_pair(e.tmap, e.dmap);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(m.elems.size());
        index.emplace(std::move(key), id);
        m.elems.push_back(std::move(e));
        return id;
    };

    m.gen_idx.resize(pa.n);
    for (int p = 0; p < pa.n; ++p) m.gen_idx[p] = add(psi(pa, {p}));
    if (static_cast<int>(m.elems.size()) != pa.n)
        throw Error("distinct projections share an action pair");

    for (std::size_t i = 0; i < m.elems.size(); ++i)
        for (std::size_t j = 0; j < m.elems.size(); ++j) add(mp_product(pa, m.elems[i], m.elems[j]));

    const int n = static_cast<int>(m.elems.size());
    m.sg.n = n;
    m.sg.mul.assign(n, std::vector<int>(n, -1));
    m.sg.d_op.resize(n);
    m.sg.r_op.resize(n);
    for (int i = 0; i < n; ++i) {
        m.sg.d_op[i] = m.gen_idx[m.elems[i].witness.front()];
        m.sg.r_op[i] = m.gen_idx[m.elems[i].witness.back()];
        for (int j = 0; j < n; ++j) {
            MPElement e = mp_product(pa, m.elems[i], m.elems[j]);
            int id = m.elem_of(e.tmap, e.dmap);
            if (id < 0) throw Error("product escaped the closure");
            m.sg.mul[i][j] = id;
        }
    }
    m.sg.validate_shape();
    return m;
}

namespace {

// Image of every stored class under the multiplicative extension, or empty
// with a reason when two words of one class disagree.
std::vector<int> extend_full(const BoundedFreeSemigroup& f, const std::vector<int>& gen_img,
                             const FiniteSemigroup& s, std::string* reason) {
    std::vector<int> val(f.num_classes_total, -1);
    for (std::size_t i = 0; i < f.words.size(); ++i) {
        const Word& w = f.words[i];
        int v = gen_img[w[0]];
        for (std::size_t j = 1; j < w.size(); ++j) v = s.mul[v][gen_img[w[j]]];
        int c = f.cls[i];
        if (val[c] < 0) {
            val[c] = v;
        } else if (val[c] != v) {
            if (reason)
                *reason = "two words of class " + std::to_string(c) + " map to elements " +
                          std::to_string(val[c]) + " and " + std::to_string(v);
            return {};
        }
    }
    return val;
}

bool extension_valid(const BoundedFreeSemigroup& f, const std::vector<int>& gen_img,
                     const FiniteSemigroup& s) {
    std::vector<int> img = extend_full(f, gen_img, s, nullptr);
    if (img.empty()) return false;
    for (int a = 0; a < f.num_classes; ++a) {
        if (s.d_op[img[a]] != img[bounded_d(f, a)]) return false;
        if (s.r_op[img[a]] != img[bounded_r(f, a)]) return false;
        for (int b = 0; b < f.num_classes; ++b) {
            int c = bounded_product(f, a, b);
            if (c >= 0 && img[c] != s.mul[img[a]][img[b]]) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> induced_morphism(const BoundedFreeSemigroup& f, const std::vector<int>& gen_img,
                                  const FiniteSemigroup& s) {
    if (static_cast<int>(gen_img.size()) != f.pa.n) throw Error("generator image size mismatch");
    for (int v : gen_img)
        if (v < 0 || v >= s.n) throw Error("generator image out of range");
    std::string reason;
    std::vector<int> img = extend_full(f, gen_img, s, &reason);
    if (img.empty()) throw Error("extension is not well-defined: " + reason);
    img.resize(f.num_classes);
    return img;
}

AxiomReport check_unique_extension(const BoundedFreeSemigroup& f, const FiniteSemigroup& s,
                                   const std::vector<int>& gen_img) {
    AxiomReport rep;
    rep.subject = "unique extension";
    const int n = f.pa.n;

    std::vector<int> projs = projections_of(s);
    std::vector<bool> is_proj(s.n, false);
    for (int p : projs) is_proj[p] = true;

    rep.checks.push_back(scan1("generator images are projections", n,
                               [&](long long p) { return is_proj[gen_img[p]]; }));

    CheckResult wd{"extension well-defined on every class", true, {}, ""};
    std::vector<int> img;
    {
        std::string reason;
        img = extend_full(f, gen_img, s, &reason);
        if (img.empty()) {
            wd.pass = false;
            wd.note = reason;
        }
    }
    rep.checks.push_back(wd);
    if (img.empty()) return rep;

    rep.checks.push_back(scan2("extension preserves resolved products", f.num_classes, f.num_classes,
                               [&](long long a, long long b) {
                                   int c = bounded_product(f, static_cast<int>(a), static_cast<int>(b));
                                   return c < 0 || img[c] == s.mul[img[a]][img[b]];
                               }));
    rep.checks.push_back(scan1("extension preserves D and R", f.num_classes, [&](long long a) {
        return s.d_op[img[a]] == img[bounded_d(f, static_cast<int>(a))] &&
               s.r_op[img[a]] == img[bounded_r(f, static_cast<int>(a))];
    }));
    rep.checks.push_back(scan1("extension fixes the generator images", n, [&](long long p) {
        return img[f.class_of({static_cast<int>(p)})] == gen_img[p];
    }));

    // Every assignment of generators to projections of s, coded in base
    // |projs|: valid extensions must coincide with algebra morphisms, and
    // any valid assignment other than the given one must differ on some
    // one-letter class.
    ExtractedPA ex = extract_pa(s);
    long long count = 1;
    for (int p = 0; p < n; ++p) count *= static_cast<long long>(projs.size());
    CheckResult exact{"valid assignments are exactly the algebra morphisms", true, {}, ""};
    CheckResult unique{"no other valid assignment fixes the same generators", true, {}, ""};
    long long valid_count = 0;
    for (long long code = 0; code < count; ++code) {
        long long c = code;
        std::vector<int> cand(n), cand_pa(n);
        for (int p = 0; p < n; ++p) {
            cand[p] = projs[c % projs.size()];
            cand_pa[p] = ex.elem_to_pa[cand[p]];
            c /= static_cast<long long>(projs.size());
        }
        bool valid = extension_valid(f, cand, s);
        bool morph = is_pa_morphism(f.pa, ex.pa, cand_pa, nullptr);
        if (valid != morph && exact.pass) {
            exact.pass = false;
            exact.witness = {code};
            exact.note = valid ? "extension valid but not a morphism" : "morphism without a valid extension";
        }
        if (valid) {
            ++valid_count;
            if (cand != gen_img) {
                bool differs = false;
                for (int p = 0; p < n && !differs; ++p)
                    differs = img[f.class_of({p})] != cand[p];
                if (!differs && unique.pass) {
                    unique.pass = false;
                    unique.witness = {code};
                }
            }
        }
    }
    exact.note = exact.pass ? std::to_string(valid_count) + " valid assignments" : exact.note;
    rep.checks.push_back(exact);
    rep.checks.push_back(unique);
    return rep;
}

bool is_ehresmann(const FiniteSemigroup& s) {
    std::vector<int> projs = projections_of(s);
    for (int p : projs)
        for (int q : projs)
            if (s.mul[p][q] != s.mul[q][p]) return false;
    return true;
}

bool is_drc_restriction(const FiniteSemigroup& s) {
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b) {
            if (s.mul[s.d_op[s.mul[a][b]]][a] != s.mul[a][s.d_op[s.mul[s.r_op[a]][b]]]) return false;
            if (s.mul[a][s.r_op[s.mul[b][a]]] != s.mul[s.r_op[s.mul[b][s.d_op[a]]]][a]) return false;
        }
    return true;
}

bool orders_coincide(const FiniteSemigroup& s) {
    return left_order_of(s) == right_order_of(s);
}

}  // namespace drckit
