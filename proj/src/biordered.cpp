#include "drckit/biordered.hpp"

#include <algorithm>
#include <set>

#include "drckit/error.hpp"
#include "drckit/kernels.hpp"

namespace drckit {

void BiorderedCategory::finalize() {
  if (m <= 0) throw Error("category: no morphisms");
  if ((int)dom.size() != m || (int)cod.size() != m) {
    throw Error("category: dom/cod have wrong size");
  }
  if (objects.empty()) throw Error("category: no objects");
  if (!std::is_sorted(objects.begin(), objects.end())) {
    throw Error("category: objects not sorted");
  }
  obj_pos.assign(m, -1);
  for (int i = 0; i < (int)objects.size(); ++i) {
    int e = objects[i];
    if (e < 0 || e >= m) throw Error("category: object out of range");
    if (obj_pos[e] >= 0) throw Error("category: duplicate object");
    obj_pos[e] = i;
  }
  for (int a = 0; a < m; ++a) {
    if (dom[a] < 0 || dom[a] >= m || obj_pos[dom[a]] < 0) {
      throw Error("category: dom value is not an object");
    }
    if (cod[a] < 0 || cod[a] >= m || obj_pos[cod[a]] < 0) {
      throw Error("category: cod value is not an object");
    }
  }
  auto check_key = [&](long long key, int val, bool first_is_object,
                       bool second_is_object) {
    long long x = key / m, y = key % m;
    if (key < 0 || key >= m * m || val < 0 || val >= m) {
      throw Error("category: sparse entry out of range");
    }
    if (first_is_object && obj_pos[x] < 0) {
      throw Error("category: restriction key is not an object");
    }
    if (second_is_object && obj_pos[y] < 0) {
      throw Error("category: restriction key is not an object");
    }
  };
  for (auto [k, v] : comp) check_key(k, v, false, false);
  for (auto [k, v] : lres) check_key(k, v, true, false);
  for (auto [k, v] : rres) check_key(k, v, false, true);

  const int k = (int)objects.size();
  oleq.assign(k, std::vector<bool>(k, false));
  for (auto [p, q] : obj_leq_pairs) {
    if (p < 0 || p >= m || q < 0 || q >= m || obj_pos[p] < 0 || obj_pos[q] < 0) {
      throw Error("category: order pair is not a pair of objects");
    }
    oleq[obj_pos[p]][obj_pos[q]] = true;
  }
  if (trunc_bound < 0) throw Error("category: negative truncation bound");
}

std::optional<int> BiorderedCategory::comp_opt(int a, int b) const {
  auto it = comp.find((long long)a * m + b);
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BiorderedCategory::lres_opt(int p, int a) const {
  auto it = lres.find((long long)p * m + a);
  if (it == lres.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BiorderedCategory::rres_opt(int a, int q) const {
  auto it = rres.find((long long)a * m + q);
  if (it == rres.end()) return std::nullopt;
  return it->second;
}

int BiorderedCategory::comp_at(int a, int b) const {
  auto v = comp_opt(a, b);
  if (!v) throw Error("category: composite not stored");
  return *v;
}

int BiorderedCategory::lres_at(int p, int a) const {
  auto v = lres_opt(p, a);
  if (!v) throw Error("category: left restriction not stored");
  return *v;
}

int BiorderedCategory::rres_at(int a, int q) const {
  auto v = rres_opt(a, q);
  if (!v) throw Error("category: right restriction not stored");
  return *v;
}

namespace {

std::string trunc_note(const BiorderedCategory& c) {
  if (c.trunc_bound == 0) return "";
  return "truncated at length " + std::to_string(c.trunc_bound) +
         "; quantified over stored entries";
}

}  // namespace

AxiomReport check_category(const BiorderedCategory& c) {
  const long long m = c.m;
  AxiomReport rep;
  rep.subject = "category axioms";

  rep.checks.push_back(scan1("objects are identities", (long long)c.objects.size(),
                             [&](long long i) {
    int e = c.objects[i];
    return c.dom[e] == e && c.cod[e] == e;
  }));
  rep.checks.push_back(scan1("identity composition", m, [&](long long a) {
    return c.comp_opt(c.dom[a], a) == (int)a && c.comp_opt(a, c.cod[a]) == (int)a;
  }));

  {
    CheckResult r;
    r.law = "stored composites are composable with matching endpoints";
    for (auto [key, val] : c.comp) {
      int a = (int)(key / m), b = (int)(key % m);
      if (c.cod[a] != c.dom[b] || c.dom[val] != c.dom[a] ||
          c.cod[val] != c.cod[b]) {
        r.pass = false;
        r.witness = {a, b};
        break;
      }
    }
    rep.checks.push_back(r);
  }

  {
    CheckResult r;
    r.law = "composition total on composable pairs";
    r.note = trunc_note(c);
    if (c.trunc_bound == 0) {
      long long bad = first_violation(m * m, [&](long long i) {
        int a = (int)(i / m), b = (int)(i % m);
        return c.cod[a] == c.dom[b] && !c.comp_opt(a, b).has_value();
      });
      r.pass = bad < 0;
      if (bad >= 0) r.witness = {bad / m, bad % m};
    }
    rep.checks.push_back(r);
  }

  {
    CheckResult r = scan3("associativity", m, m, m,
                          [&](long long a, long long b, long long x) {
      if (c.cod[a] != c.dom[b] || c.cod[b] != c.dom[x]) return true;
      auto ab = c.comp_opt(a, b);
      auto bx = c.comp_opt(b, x);
      if (!ab || !bx) return c.trunc_bound != 0;
      auto left = c.comp_opt(*ab, x);
      auto right = c.comp_opt(a, *bx);
      if (!left || !right) return c.trunc_bound != 0;
      return *left == *right;
    });
    r.note = trunc_note(c);
    rep.checks.push_back(r);
  }
  return rep;
}

AxiomReport check_biordered(const BiorderedCategory& c) {
  const long long m = c.m;
  const int k = (int)c.objects.size();
  AxiomReport rep;
  rep.subject = "biordered category axioms";

  rep.checks.push_back(scan1("object order reflexive", k, [&](long long i) {
    return c.oleq[i][i];
  }));
  rep.checks.push_back(scan2("object order antisymmetric", k, k,
                             [&](long long i, long long j) {
    return i == j || !(c.oleq[i][j] && c.oleq[j][i]);
  }));
  rep.checks.push_back(scan3("object order transitive", k, k, k,
                             [&](long long i, long long j, long long l) {
    return !(c.oleq[i][j] && c.oleq[j][l]) || c.oleq[i][l];
  }));

  rep.checks.push_back(scan2("left restriction defined exactly below dom", k, m,
                             [&](long long i, long long a) {
    int p = c.objects[i];
    return c.lres_opt(p, a).has_value() == c.obj_le(p, c.dom[a]);
  }));
  rep.checks.push_back(scan2("right restriction defined exactly below cod", m, k,
                             [&](long long a, long long j) {
    int q = c.objects[j];
    return c.rres_opt(a, q).has_value() == c.obj_le(q, c.cod[a]);
  }));

  rep.checks.push_back(scan2("left restriction endpoints", k, m,
                             [&](long long i, long long a) {
    int p = c.objects[i];
    auto r = c.lres_opt(p, a);
    if (!r) return true;
    return c.dom[*r] == p && c.obj_le(c.cod[*r], c.cod[a]);
  }));
  rep.checks.push_back(scan2("right restriction endpoints", m, k,
                             [&](long long a, long long j) {
    int q = c.objects[j];
    auto r = c.rres_opt(a, q);
    if (!r) return true;
    return c.cod[*r] == q && c.obj_le(c.dom[*r], c.dom[a]);
  }));

  rep.checks.push_back(scan1("full restriction is identity", m, [&](long long a) {
    return c.lres_opt(c.dom[a], a) == (int)a && c.rres_opt(a, c.cod[a]) == (int)a;
  }));
  rep.checks.push_back(scan2("restriction of an object", k, k,
                             [&](long long i, long long j) {
    int p = c.objects[i], q = c.objects[j];
    if (!c.obj_le(p, q)) return true;
    return c.lres_opt(p, q) == p && c.rres_opt(q, p) == p;
  }));

  rep.checks.push_back(scan3("repeated left restrictions collapse", k, k, m,
                             [&](long long i, long long j, long long a) {
    int p = c.objects[i], q = c.objects[j];
    if (!c.obj_le(p, q) || !c.obj_le(q, c.dom[a])) return true;
    return c.lres_opt(p, c.lres_at(q, a)) == c.lres_opt(p, a);
  }));
  rep.checks.push_back(scan3("repeated right restrictions collapse", m, k, k,
                             [&](long long a, long long i, long long j) {
    int r = c.objects[i], s = c.objects[j];
    if (!c.obj_le(r, s) || !c.obj_le(s, c.cod[a])) return true;
    return c.rres_opt(c.rres_at(a, s), r) == c.rres_opt(a, r);
  }));

  {
    CheckResult r;
    r.law = "left restriction distributes over composition";
    r.note = trunc_note(c);
    for (auto [key, ab] : c.comp) {
      int a = (int)(key / m), b = (int)(key % m);
      for (int i = 0; i < k && r.pass; ++i) {
        int p = c.objects[i];
        if (!c.obj_le(p, c.dom[a])) continue;
        int pa = c.lres_at(p, a);
        int q = c.cod[pa];
        int qb = c.lres_at(q, b);
        auto rhs = c.comp_opt(pa, qb);
        if (!rhs) {
          if (c.trunc_bound == 0) {
            r.pass = false;
            r.witness = {p, a, b};
          }
          continue;
        }
        if (*rhs != c.lres_at(p, ab)) {
          r.pass = false;
          r.witness = {p, a, b};
        }
      }
      if (!r.pass) break;
    }
    rep.checks.push_back(r);
  }
  {
    CheckResult r;
    r.law = "right restriction distributes over composition";
    r.note = trunc_note(c);
    for (auto [key, ab] : c.comp) {
      int a = (int)(key / m), b = (int)(key % m);
      for (int j = 0; j < k && r.pass; ++j) {
        int q = c.objects[j];
        if (!c.obj_le(q, c.cod[b])) continue;
        int bq = c.rres_at(b, q);
        int s = c.dom[bq];
        int as = c.rres_at(a, s);
        auto rhs = c.comp_opt(as, bq);
        if (!rhs) {
          if (c.trunc_bound == 0) {
            r.pass = false;
            r.witness = {a, b, q};
          }
          continue;
        }
        if (*rhs != c.rres_at(ab, q)) {
          r.pass = false;
          r.witness = {a, b, q};
        }
      }
      if (!r.pass) break;
    }
    rep.checks.push_back(r);
  }
  return rep;
}

DerivedOrders derive_orders(const BiorderedCategory& c) {
  DerivedOrders d;
  d.leq_l.assign(c.m, std::vector<bool>(c.m, false));
  d.leq_r.assign(c.m, std::vector<bool>(c.m, false));
  for (int a = 0; a < c.m; ++a) {
    for (int b = 0; b < c.m; ++b) {
      if (c.obj_le(c.dom[a], c.dom[b])) {
        d.leq_l[a][b] = c.lres_opt(c.dom[a], b) == a;
      }
      if (c.obj_le(c.cod[a], c.cod[b])) {
        d.leq_r[a][b] = c.rres_opt(b, c.cod[a]) == a;
      }
    }
  }
  return d;
}

std::vector<int> vt_map(const BiorderedCategory& c, int a) {
  std::vector<int> out(c.objects.size(), -1);
  for (int i = 0; i < (int)c.objects.size(); ++i) {
    int p = c.objects[i];
    if (c.obj_le(p, c.dom[a])) out[i] = c.obj_pos[c.cod[c.lres_at(p, a)]];
  }
  return out;
}

std::vector<int> vd_map(const BiorderedCategory& c, int a) {
  std::vector<int> out(c.objects.size(), -1);
  for (int j = 0; j < (int)c.objects.size(); ++j) {
    int q = c.objects[j];
    if (c.obj_le(q, c.cod[a])) out[j] = c.obj_pos[c.dom[c.rres_at(a, q)]];
  }
  return out;
}

BiorderedCategory opposite_cat(const BiorderedCategory& c) {
  BiorderedCategory op;
  op.m = c.m;
  op.objects = c.objects;
  op.dom = c.cod;
  op.cod = c.dom;
  op.obj_leq_pairs = c.obj_leq_pairs;
  op.trunc_bound = c.trunc_bound;
  for (auto [key, val] : c.comp) {
    long long a = key / c.m, b = key % c.m;
    op.comp[b * c.m + a] = val;
  }
  for (auto [key, val] : c.lres) {
    long long p = key / c.m, a = key % c.m;
    op.rres[a * c.m + p] = val;
  }
  for (auto [key, val] : c.rres) {
    long long a = key / c.m, q = key % c.m;
    op.lres[q * c.m + a] = val;
  }
  op.finalize();
  return op;
}

bool is_biordered_functor(const BiorderedCategory& src,
                          const BiorderedCategory& dst,
                          const std::vector<int>& phi,
                          std::vector<long long>* witness,
                          std::string* reason) {
  auto fail = [&](std::vector<long long> w, const char* why) {
    if (witness) *witness = std::move(w);
    if (reason) *reason = why;
    return false;
  };
  if ((int)phi.size() != src.m) throw Error("functor: map has wrong size");
  for (int v : phi) {
    if (v < 0 || v >= dst.m) throw Error("functor: image out of range");
  }

  // Object-order preservation first: the restriction clauses below are
  // only defined once images of comparable objects are comparable.
  for (int p : src.objects) {
    if (!dst.is_object(phi[p])) return fail({p}, "object image not an object");
  }
  for (int p : src.objects) {
    for (int q : src.objects) {
      if (src.obj_le(p, q) && !dst.obj_le(phi[p], phi[q])) {
        return fail({p, q}, "object order not preserved");
      }
    }
  }
  for (int a = 0; a < src.m; ++a) {
    if (dst.dom[phi[a]] != phi[src.dom[a]] ||
        dst.cod[phi[a]] != phi[src.cod[a]]) {
      return fail({a}, "endpoints not preserved");
    }
  }
  for (auto [key, val] : src.comp) {
    int a = (int)(key / src.m), b = (int)(key % src.m);
    auto img = dst.comp_opt(phi[a], phi[b]);
    if (!img) {
      if (dst.trunc_bound == 0) return fail({a, b}, "composite missing in target");
      continue;
    }
    if (*img != phi[val]) return fail({a, b}, "composition not preserved");
  }
  for (auto [key, val] : src.lres) {
    int p = (int)(key / src.m), a = (int)(key % src.m);
    if (dst.lres_at(phi[p], phi[a]) != phi[val]) {
      return fail({p, a}, "left restriction not preserved");
    }
  }
  for (auto [key, val] : src.rres) {
    int a = (int)(key / src.m), q = (int)(key % src.m);
    if (dst.rres_at(phi[a], phi[q]) != phi[val]) {
      return fail({a, q}, "right restriction not preserved");
    }
  }
  return true;
}

AxiomReport check_biordered_congruence(const BiorderedCategory& c,
                                       const std::vector<int>& cls) {
  const long long m = c.m;
  if ((int)cls.size() != m) throw Error("congruence: partition has wrong size");
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> seen(k, 0);
  for (int v : cls) {
    if (v < 0 || v >= k) throw Error("congruence: bad class index");
    seen[v] = 1;
  }
  for (int v : seen) {
    if (!v) throw Error("congruence: class indices not contiguous");
  }

  AxiomReport rep;
  rep.subject = "biordered congruence";
  rep.checks.push_back(scan2("related morphisms share endpoints", m, m,
                             [&](long long a, long long b) {
    if (cls[a] != cls[b]) return true;
    return c.dom[a] == c.dom[b] && c.cod[a] == c.cod[b];
  }));
  rep.checks.push_back(scan3("compatible with left composition", m, m, m,
                             [&](long long u, long long a, long long b) {
    if (cls[a] != cls[b] || c.cod[u] != c.dom[a] || c.dom[a] != c.dom[b]) {
      return true;
    }
    auto ua = c.comp_opt(u, a);
    auto ub = c.comp_opt(u, b);
    if (!ua || !ub) return c.trunc_bound != 0;
    return cls[*ua] == cls[*ub];
  }));
  rep.checks.push_back(scan3("compatible with right composition", m, m, m,
                             [&](long long a, long long b, long long v) {
    if (cls[a] != cls[b] || c.cod[a] != c.cod[b] || c.cod[a] != c.dom[v]) {
      return true;
    }
    auto av = c.comp_opt(a, v);
    auto bv = c.comp_opt(b, v);
    if (!av || !bv) return c.trunc_bound != 0;
    return cls[*av] == cls[*bv];
  }));
  rep.checks.push_back(scan3("compatible with left restriction",
                             (long long)c.objects.size(), m, m,
                             [&](long long i, long long a, long long b) {
    int p = c.objects[i];
    if (cls[a] != cls[b] || c.dom[a] != c.dom[b]) return true;
    if (!c.obj_le(p, c.dom[a])) return true;
    return cls[c.lres_at(p, a)] == cls[c.lres_at(p, b)];
  }));
  rep.checks.push_back(scan3("compatible with right restriction", m, m,
                             (long long)c.objects.size(),
                             [&](long long a, long long b, long long j) {
    int q = c.objects[j];
    if (cls[a] != cls[b] || c.cod[a] != c.cod[b]) return true;
    if (!c.obj_le(q, c.cod[a])) return true;
    return cls[c.rres_at(a, q)] == cls[c.rres_at(b, q)];
  }));
  return rep;
}

BiorderedCategory quotient_category(const BiorderedCategory& c,
                                    const std::vector<int>& cls) {
  auto rep = check_biordered_congruence(c, cls);
  if (!rep.ok()) {
    throw Error("quotient_category: not a biordered congruence (" +
                rep.first_failure()->law + ")");
  }
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> repr(k, -1);
  for (int a = 0; a < c.m; ++a) {
    if (repr[cls[a]] < 0) repr[cls[a]] = a;
  }

  BiorderedCategory q;
  q.m = k;
  q.trunc_bound = c.trunc_bound;
  q.dom.assign(k, 0);
  q.cod.assign(k, 0);
  for (int x = 0; x < k; ++x) {
    q.dom[x] = cls[c.dom[repr[x]]];
    q.cod[x] = cls[c.cod[repr[x]]];
  }
  std::set<int> objs;
  for (int e : c.objects) objs.insert(cls[e]);
  q.objects.assign(objs.begin(), objs.end());
  std::set<std::pair<int, int>> pairs;
  for (auto [p, qq] : c.obj_leq_pairs) pairs.insert({cls[p], cls[qq]});
  q.obj_leq_pairs.assign(pairs.begin(), pairs.end());
  for (auto [key, val] : c.comp) {
    long long a = key / c.m, b = key % c.m;
    q.comp[(long long)cls[a] * k + cls[b]] = cls[val];
  }
  for (auto [key, val] : c.lres) {
    long long p = key / c.m, a = key % c.m;
    q.lres[(long long)cls[p] * k + cls[a]] = cls[val];
  }
  for (auto [key, val] : c.rres) {
    long long a = key / c.m, qq = key % c.m;
    q.rres[(long long)cls[a] * k + cls[qq]] = cls[val];
  }
  q.finalize();
  return q;
}

}  // namespace drckit
