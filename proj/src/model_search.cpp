#include "drckit/model_search.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "drckit/error.hpp"

namespace drckit {

namespace {

struct Term {
    int kind;  // 0 variable, 1 theta lookup, 2 delta lookup
    int var = -1;
    const Term* a = nullptr;
    const Term* b = nullptr;
};

struct Equation {
    const Term* lhs;
    const Term* rhs;
};

struct Axiom {
    std::string id;
    int nvars = 0;
    std::vector<Equation> eqs;
    bool uses_th = false;
    bool uses_de = false;
};

struct AxiomTable {
    std::deque<Term> arena;
    std::vector<Axiom> axioms;

    const Term* v(int i) {
        arena.push_back(Term{0, i, nullptr, nullptr});
        return &arena.back();
    }
    const Term* th(const Term* a, const Term* b) {
        arena.push_back(Term{1, -1, a, b});
        return &arena.back();
    }
    const Term* de(const Term* a, const Term* b) {
        arena.push_back(Term{2, -1, a, b});
        return &arena.back();
    }

    void mark(Axiom& ax, const Term* t) {
        if (t->kind == 1) ax.uses_th = true;
        if (t->kind == 2) ax.uses_de = true;
        if (t->a) mark(ax, t->a);
        if (t->b) mark(ax, t->b);
    }

    void add(const std::string& id, int nvars, std::vector<Equation> eqs) {
        Axiom ax;
        ax.id = id;
        ax.nvars = nvars;
        ax.eqs = std::move(eqs);
        for (const Equation& e : ax.eqs) {
            mark(ax, e.lhs);
            mark(ax, e.rhs);
        }
        axioms.push_back(std::move(ax));
    }

    AxiomTable() {
        const Term *p = v(0), *q = v(1), *t = v(2);

        add("p1", 1, {{th(p, p), p}, {de(p, p), p}});
        add("p2", 2, {{th(th(p, q), p), th(p, q)}, {de(de(p, q), p), de(p, q)}});
        add("p3", 3, {{th(th(p, q), th(q, t)), th(p, th(q, t))},
                      {de(de(p, q), de(q, t)), de(p, de(q, t))}});
        add("p4", 2, {{de(p, th(p, q)), th(p, q)}, {th(p, de(p, q)), de(p, q)}});
        add("p5", 3, {{th(p, th(de(q, p), t)), th(p, th(q, t))},
                      {de(p, de(th(q, p), t)), de(p, de(q, t))}});
        add("p6", 2, {{th(p, th(p, q)), th(p, q)}, {de(p, de(p, q)), de(p, q)}});
        add("p7", 3, {{th(th(p, q), t), th(th(p, q), th(p, t))},
                      {th(th(p, q), t), th(p, th(th(p, q), t))},
                      {de(de(p, q), t), de(de(p, q), de(p, t))},
                      {de(de(p, q), t), de(p, de(de(p, q), t))}});
        add("p8", 2, {{th(th(p, q), q), th(p, q)}, {de(de(p, q), q), de(p, q)}});
        add("p9", 2, {{th(p, de(q, p)), th(p, q)}, {de(p, th(q, p)), de(p, q)}});
        add("p10", 3, {{th(th(p, q), de(q, t)), th(p, de(q, t))},
                       {de(de(p, q), th(q, t)), de(p, th(q, t))}});

        // One-sided systems via x(e,f) = de(e,f) and y(e,f) = th(f,e),
        // with variables (e,f,g) read as (p,q,t).
        add("lp1", 1, {{de(p, p), p}});
        add("lp2", 2, {{de(de(p, q), p), de(p, q)}});
        add("lp3", 3, {{de(t, de(q, p)), de(de(t, q), de(q, p))}});
        add("lp4", 3, {{de(de(t, q), p), de(de(t, q), de(t, p))}});
        add("rp1", 1, {{th(p, p), p}});
        add("rp2", 2, {{th(th(p, q), p), th(p, q)}});
        add("rp3", 3, {{th(t, th(q, p)), th(th(t, q), th(q, p))}});
        add("rp4", 3, {{th(th(t, q), p), th(th(t, q), th(t, p))}});
        add("pa1", 2, {{th(q, de(q, p)), de(q, p)}, {de(q, th(q, p)), th(q, p)}});
        add("pa2", 3, {{th(t, th(de(q, t), p)), th(t, th(q, p))},
                       {de(t, de(th(q, t), p)), de(t, de(q, p))}});

        // Single-family variants; the mirror swaps the two tables.
        add("p1'", 1, {{th(p, p), p}, {de(p, p), p}});
        add("p2'", 2, {{th(p, th(p, q)), th(p, q)}, {de(p, de(p, q)), de(p, q)}});
        add("p3'", 2, {{th(p, th(q, p)), th(p, q)}, {de(p, de(q, p)), de(p, q)}});
        add("p4'", 3, {{th(p, th(q, th(p, t))), th(th(p, q), t)},
                       {de(p, de(q, de(p, t))), de(de(p, q), t)}});
        add("p5'", 3, {{th(q, th(p, th(q, th(p, t)))), th(q, th(p, t))},
                       {de(q, de(p, de(q, de(p, t)))), de(q, de(p, t))}});

        add("symmetry", 2, {{th(p, q), de(p, q)}});
    }
};

const AxiomTable& table() {
    static AxiomTable t;
    return t;
}

const Axiom* find_axiom(std::string id) {
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const Axiom& a : table().axioms)
        if (a.id == id) return &a;
    return nullptr;
}

// -1 when some mentioned cell is unassigned.
int eval_term(const Term* t, const int* vars, const std::vector<int>& th, const std::vector<int>& de,
              int n) {
    if (t->kind == 0) return vars[t->var];
    int x = eval_term(t->a, vars, th, de, n);
    if (x < 0) return -1;
    int y = eval_term(t->b, vars, th, de, n);
    if (y < 0) return -1;
    return (t->kind == 1 ? th : de)[x * n + y];
}

struct Searcher {
    int n;
    long long limit;
    std::vector<const Axiom*> sat;
    const Axiom* vio;
    bool use_th, use_de;
    std::vector<int> th, de;
    std::vector<std::pair<int, int>> trail;  // (table, cell)
    std::set<std::vector<int>> seen;
    SearchResult out;
    bool stopped = false;

    int& cell(int tab, int idx) { return tab == 1 ? th[idx] : de[idx]; }

    bool assign(int tab, int idx, int val) {
        int& c = cell(tab, idx);
        if (c >= 0) return c == val;
        c = val;
        trail.emplace_back(tab, idx);
        return true;
    }

    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            auto [tab, idx] = trail.back();
            trail.pop_back();
            cell(tab, idx) = -1;
        }
    }

    // Scans ground instances of the satisfied axioms: determined instances
    // must hold, and an instance with exactly one bare unassigned cell on
    // one side gets that cell forced. Returns false on conflict.
    bool propagate() {
        bool changed = true;
        int vars[3];
        while (changed) {
            changed = false;
            for (const Axiom* ax : sat) {
                long long count = 1;
                for (int i = 0; i < ax->nvars; ++i) count *= n;
                for (long long code = 0; code < count; ++code) {
                    long long c = code;
                    for (int i = 0; i < ax->nvars; ++i) {
                        vars[i] = static_cast<int>(c % n);
                        c /= n;
                    }
                    for (const Equation& eq : ax->eqs) {
                        int l = eval_term(eq.lhs, vars, th, de, n);
                        int r = eval_term(eq.rhs, vars, th, de, n);
                        if (l >= 0 && r >= 0) {
                            if (l != r) return false;
                            continue;
                        }
                        if (l == r) continue;  // both unknown
                        int known = l >= 0 ? l : r;
                        const Term* open = l >= 0 ? eq.rhs : eq.lhs;
                        // A bare variable always evaluates, so open is a lookup.
                        int x = eval_term(open->a, vars, th, de, n);
                        int y = open->b ? eval_term(open->b, vars, th, de, n) : -1;
                        if (x < 0 || y < 0) continue;
                        int tab = open->kind;
                        if (cell(tab, x * n + y) < 0) {
                            if (!assign(tab, x * n + y, known)) return false;
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool violated() {
        int vars[3];
        long long count = 1;
        for (int i = 0; i < vio->nvars; ++i) count *= n;
        for (long long code = 0; code < count; ++code) {
            long long c = code;
            for (int i = 0; i < vio->nvars; ++i) {
                vars[i] = static_cast<int>(c % n);
                c /= n;
            }
            for (const Equation& eq : vio->eqs) {
                int l = eval_term(eq.lhs, vars, th, de, n);
                int r = eval_term(eq.rhs, vars, th, de, n);
                if (l != r) return true;
            }
        }
        return false;
    }

    static std::vector<int> serialized(const std::vector<int>& eth, const std::vector<int>& ede,
                                       int n, const std::vector<int>& perm) {
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i) inv[perm[i]] = i;
        std::vector<int> s;
        s.reserve(2 * n * n);
        for (const std::vector<int>* tabp : {&eth, &ede})
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) s.push_back(perm[(*tabp)[inv[p] * n + inv[q]]]);
        return s;
    }

    static std::vector<int> canonical(const std::vector<int>& eth, const std::vector<int>& ede, int n) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::vector<int> best = serialized(eth, ede, n, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<int> s = serialized(eth, ede, n, perm);
            if (s < best) best = s;
        }
        return best;
    }

    int next_cell(int& tab) const {
        if (use_th)
            for (int i = 0; i < n * n; ++i)
                if (th[i] < 0) {
                    tab = 1;
                    return i;
                }
        if (use_de)
            for (int i = 0; i < n * n; ++i)
                if (de[i] < 0) {
                    tab = 2;
                    return i;
                }
        return -1;
    }

    void leaf() {
        if (!violated()) return;
        // Materialize the identity action for any table the axioms never
        // mention, so canonicalization and the emitted file are total.
        std::vector<int> eth(n * n), ede(n * n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                eth[p * n + q] = use_th ? th[p * n + q] : q;
                ede[p * n + q] = use_de ? de[p * n + q] : q;
            }
        if (!seen.insert(canonical(eth, ede, n)).second) return;
        ProjectionAlgebra pa;
        pa.n = n;
        pa.theta.assign(n, std::vector<int>(n, 0));
        pa.delta.assign(n, std::vector<int>(n, 0));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                pa.theta[p][q] = eth[p * n + q];
                pa.delta[p][q] = ede[p * n + q];
            }
        out.models.push_back(std::move(pa));
        if (static_cast<long long>(out.models.size()) >= limit) stopped = true;
    }

    void dfs() {
        if (stopped) return;
        ++out.nodes;
        std::size_t mark = trail.size();
        if (!propagate()) {
            rollback(mark);
            return;
        }
        int tab = 0;
        int idx = next_cell(tab);
        if (idx < 0) {
            leaf();
            rollback(mark);
            return;
        }
        for (int val = 0; val < n && !stopped; ++val) {
            std::size_t inner = trail.size();
            if (assign(tab, idx, val)) dfs();
            rollback(inner);
        }
        rollback(mark);
    }
};

}  // namespace

bool is_known_axiom(const std::string& id) { return find_axiom(id) != nullptr; }

bool axiom_holds(const std::string& id, const ProjectionAlgebra& pa) {
    const Axiom* ax = find_axiom(id);
    if (!ax) throw Error("unknown axiom id: " + id);
    pa.validate_shape();
    const int n = pa.n;
    std::vector<int> th(n * n), de(n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            th[p * n + q] = pa.theta[p][q];
            de[p * n + q] = pa.delta[p][q];
        }
    int vars[3];
    long long count = 1;
    for (int i = 0; i < ax->nvars; ++i) count *= n;
    for (long long code = 0; code < count; ++code) {
        long long c = code;
        for (int i = 0; i < ax->nvars; ++i) {
            vars[i] = static_cast<int>(c % n);
            c /= n;
        }
        for (const Equation& eq : ax->eqs)
            if (eval_term(eq.lhs, vars, th, de, n) != eval_term(eq.rhs, vars, th, de, n)) return false;
    }
    return true;
}

SearchResult search_models(const std::vector<std::string>& satisfy, const std::string& violate,
                           int size, int limit) {
    if (size < 1) throw Error("model size must be at least 1");
    if (size > 8) throw Error("model size above 8 is not supported");
    if (limit < 1) throw Error("model limit must be at least 1");

    Searcher s;
    s.n = size;
    s.limit = limit;
    for (const std::string& id : satisfy) {
        const Axiom* ax = find_axiom(id);
        if (!ax) throw Error("unknown axiom id: " + id);
        s.sat.push_back(ax);
    }
    s.vio = find_axiom(violate);
    if (!s.vio) throw Error("unknown axiom id: " + violate);

    s.use_th = s.vio->uses_th;
    s.use_de = s.vio->uses_de;
    for (const Axiom* ax : s.sat) {
        s.use_th = s.use_th || ax->uses_th;
        s.use_de = s.use_de || ax->uses_de;
    }

    s.th.assign(static_cast<std::size_t>(size) * size, -1);
    s.de.assign(static_cast<std::size_t>(size) * size, -1);
    s.dfs();
    s.out.exhausted = !s.stopped;
    return s.out;
}

}  // namespace drckit
