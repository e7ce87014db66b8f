#include "drckit/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "drckit/error.hpp"
#include "drckit/kernels.hpp"

namespace drckit {

void FiniteSemigroup::validate_shape() const {
  if (n <= 0) throw Error("semigroup: carrier must be nonempty");
  if ((int)mul.size() != n) throw Error("semigroup: bad table height");
  for (const auto& row : mul) {
    if ((int)row.size() != n) throw Error("semigroup: bad table width");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error("semigroup: product out of range");
    }
  }
  for (const auto* op : {&d_op, &r_op}) {
    if ((int)op->size() != n) throw Error("semigroup: bad unary table size");
    for (int v : *op) {
      if (v < 0 || v >= n) throw Error("semigroup: unary value out of range");
    }
  }
}

AxiomReport check_drc_axioms(const FiniteSemigroup& s) {
  s.validate_shape();
  const int n = s.n;
  AxiomReport rep;
  rep.subject = "drc semigroup axioms";
  rep.checks.push_back(scan3("associativity", n, n, n,
                             [&](long long a, long long b, long long c) {
    return s.mul[s.mul[a][b]][c] == s.mul[a][s.mul[b][c]];
  }));
  rep.checks.push_back(scan1("D(a)a = a", n, [&](long long a) {
    return s.mul[s.d_op[a]][a] == a;
  }));
  rep.checks.push_back(scan1("aR(a) = a", n, [&](long long a) {
    return s.mul[a][s.r_op[a]] == a;
  }));
  rep.checks.push_back(scan2("D(ab) = D(aD(b))", n, n,
                             [&](long long a, long long b) {
    return s.d_op[s.mul[a][b]] == s.d_op[s.mul[a][s.d_op[b]]];
  }));
  rep.checks.push_back(scan2("R(ab) = R(R(a)b)", n, n,
                             [&](long long a, long long b) {
    return s.r_op[s.mul[a][b]] == s.r_op[s.mul[s.r_op[a]][b]];
  }));
  rep.checks.push_back(scan2("D(ab) = D(a)D(ab)D(a)", n, n,
                             [&](long long a, long long b) {
    int v = s.d_op[s.mul[a][b]];
    int da = s.d_op[a];
    return v == s.mul[s.mul[da][v]][da];
  }));
  rep.checks.push_back(scan2("R(ab) = R(b)R(ab)R(b)", n, n,
                             [&](long long a, long long b) {
    int v = s.r_op[s.mul[a][b]];
    int rb = s.r_op[b];
    return v == s.mul[s.mul[rb][v]][rb];
  }));
  rep.checks.push_back(scan1("R(D(a)) = D(a)", n, [&](long long a) {
    return s.r_op[s.d_op[a]] == s.d_op[a];
  }));
  rep.checks.push_back(scan1("D(R(a)) = R(a)", n, [&](long long a) {
    return s.d_op[s.r_op[a]] == s.r_op[a];
  }));
  return rep;
}

AxiomReport check_drc_derived(const FiniteSemigroup& s) {
  s.validate_shape();
  const int n = s.n;
  AxiomReport rep;
  rep.subject = "drc semigroup derived laws";
  rep.checks.push_back(scan1("D(D(a)) = D(a)", n, [&](long long a) {
    return s.d_op[s.d_op[a]] == s.d_op[a];
  }));
  rep.checks.push_back(scan1("R(R(a)) = R(a)", n, [&](long long a) {
    return s.r_op[s.r_op[a]] == s.r_op[a];
  }));
  rep.checks.push_back(scan1("D(a) idempotent", n, [&](long long a) {
    int p = s.d_op[a];
    return s.mul[p][p] == p;
  }));
  rep.checks.push_back(scan1("R(a) idempotent", n, [&](long long a) {
    int p = s.r_op[a];
    return s.mul[p][p] == p;
  }));

  std::set<int> im_d(s.d_op.begin(), s.d_op.end());
  std::set<int> im_r(s.r_op.begin(), s.r_op.end());
  auto projs = projections_of(s);
  std::set<int> fixed(projs.begin(), projs.end());
  CheckResult images;
  images.law = "im D = im R = projections";
  images.pass = im_d == im_r && im_d == fixed;
  rep.checks.push_back(images);
  return rep;
}

std::vector<int> projections_of(const FiniteSemigroup& s) {
  s.validate_shape();
  std::vector<int> out;
  for (int p = 0; p < s.n; ++p) {
    if (s.mul[p][p] == p && s.d_op[p] == p && s.r_op[p] == p) out.push_back(p);
  }
  return out;
}

ExtractedPA extract_pa(const FiniteSemigroup& s) {
  ExtractedPA ex;
  ex.elems = projections_of(s);
  const int k = (int)ex.elems.size();
  if (k == 0) throw Error("extract_pa: no projections");
  ex.elem_to_pa.assign(s.n, -1);
  for (int i = 0; i < k; ++i) ex.elem_to_pa[ex.elems[i]] = i;

  ex.pa.n = k;
  ex.pa.theta.assign(k, std::vector<int>(k, 0));
  ex.pa.delta.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int p = ex.elems[i], q = ex.elems[j];
      int t = s.r_op[s.mul[q][p]];
      int d = s.d_op[s.mul[p][q]];
      if (ex.elem_to_pa[t] < 0 || ex.elem_to_pa[d] < 0) {
        throw Error("extract_pa: D/R image is not a projection");
      }
      ex.pa.theta[i][j] = ex.elem_to_pa[t];
      ex.pa.delta[i][j] = ex.elem_to_pa[d];
    }
  }
  return ex;
}

bool is_drc_morphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                     const std::vector<int>& phi,
                     std::vector<long long>* witness) {
  src.validate_shape();
  dst.validate_shape();
  if ((int)phi.size() != src.n) throw Error("drc morphism: map has wrong size");
  for (int v : phi) {
    if (v < 0 || v >= dst.n) throw Error("drc morphism: image out of range");
  }
  for (int a = 0; a < src.n; ++a) {
    if (phi[src.d_op[a]] != dst.d_op[phi[a]] ||
        phi[src.r_op[a]] != dst.r_op[phi[a]]) {
      if (witness) *witness = {a, a};
      return false;
    }
    for (int b = 0; b < src.n; ++b) {
      if (phi[src.mul[a][b]] != dst.mul[phi[a]][phi[b]]) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  }
  return true;
}

FiniteSemigroup opposite_semigroup(const FiniteSemigroup& s) {
  FiniteSemigroup op;
  op.n = s.n;
  op.mul.assign(s.n, std::vector<int>(s.n, 0));
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) op.mul[a][b] = s.mul[b][a];
  }
  op.d_op = s.r_op;
  op.r_op = s.d_op;
  return op;
}

std::vector<std::vector<bool>> left_order_of(const FiniteSemigroup& s) {
  auto ex = extract_pa(s);
  auto leq = order_of(ex.pa);
  std::vector<std::vector<bool>> out(s.n, std::vector<bool>(s.n, false));
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      int pa_a = ex.elem_to_pa[s.d_op[a]];
      int pa_b = ex.elem_to_pa[s.d_op[b]];
      out[a][b] = leq[pa_a][pa_b] && s.mul[s.d_op[a]][b] == a;
    }
  }
  return out;
}

std::vector<std::vector<bool>> right_order_of(const FiniteSemigroup& s) {
  auto ex = extract_pa(s);
  auto leq = order_of(ex.pa);
  std::vector<std::vector<bool>> out(s.n, std::vector<bool>(s.n, false));
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      int pa_a = ex.elem_to_pa[s.r_op[a]];
      int pa_b = ex.elem_to_pa[s.r_op[b]];
      out[a][b] = leq[pa_a][pa_b] && s.mul[b][s.r_op[a]] == a;
    }
  }
  return out;
}

std::vector<int> mu_of(const FiniteSemigroup& s) {
  auto projs = projections_of(s);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  std::vector<int> cls(s.n, -1);
  int next = 0;
  for (int a = 0; a < s.n; ++a) {
    std::vector<int> tmap, dmap;
    tmap.reserve(projs.size());
    dmap.reserve(projs.size());
    for (int p : projs) {
      tmap.push_back(s.r_op[s.mul[p][a]]);
      dmap.push_back(s.d_op[s.mul[a][p]]);
    }
    auto key = std::make_pair(std::move(tmap), std::move(dmap));
    auto it = seen.find(key);
    if (it == seen.end()) it = seen.emplace(std::move(key), next++).first;
    cls[a] = it->second;
  }
  return cls;
}

bool is_fundamental(const FiniteSemigroup& s) {
  auto cls = mu_of(s);
  return *std::max_element(cls.begin(), cls.end()) == s.n - 1;
}

bool is_projection_generated(const FiniteSemigroup& s) {
  auto projs = projections_of(s);
  std::vector<bool> in(s.n, false);
  std::queue<int> work;
  for (int p : projs) {
    in[p] = true;
    work.push(p);
  }
  std::vector<int> have = projs;
  while (!work.empty()) {
    int a = work.front();
    work.pop();
    for (size_t i = 0; i < have.size(); ++i) {
      for (int x : {s.mul[a][have[i]], s.mul[have[i]][a]}) {
        if (!in[x]) {
          in[x] = true;
          have.push_back(x);
          work.push(x);
        }
      }
    }
  }
  return (int)have.size() == s.n;
}

FiniteSemigroup quotient_semigroup(const FiniteSemigroup& s,
                                   const std::vector<int>& cls) {
  s.validate_shape();
  if ((int)cls.size() != s.n) throw Error("quotient: partition has wrong size");
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(k, -1);
  for (int a = 0; a < s.n; ++a) {
    if (cls[a] < 0 || cls[a] >= k) throw Error("quotient: bad class index");
    if (rep[cls[a]] < 0) rep[cls[a]] = a;
  }
  for (int c = 0; c < k; ++c) {
    if (rep[c] < 0) throw Error("quotient: class indices not contiguous");
  }

  FiniteSemigroup q;
  q.n = k;
  q.mul.assign(k, std::vector<int>(k, 0));
  q.d_op.assign(k, 0);
  q.r_op.assign(k, 0);
  for (int a = 0; a < k; ++a) {
    q.d_op[a] = cls[s.d_op[rep[a]]];
    q.r_op[a] = cls[s.r_op[rep[a]]];
    for (int b = 0; b < k; ++b) q.mul[a][b] = cls[s.mul[rep[a]][rep[b]]];
  }
  for (int a = 0; a < s.n; ++a) {
    if (cls[s.d_op[a]] != q.d_op[cls[a]] || cls[s.r_op[a]] != q.r_op[cls[a]]) {
      throw Error("quotient: partition not compatible with D/R");
    }
    for (int b = 0; b < s.n; ++b) {
      if (cls[s.mul[a][b]] != q.mul[cls[a]][cls[b]]) {
        throw Error("quotient: partition is not a congruence");
      }
    }
  }
  return q;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Class vector with classes numbered by first occurrence.
std::vector<int> canonical_classes(UnionFind& uf, int n) {
  std::vector<int> remap(n, -1), out(n);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    int r = uf.find(a);
    if (remap[r] < 0) remap[r] = next++;
    out[a] = remap[r];
  }
  return out;
}

// Smallest congruence containing the seed pairs: closes under left and
// right translation and under D and R.
std::vector<int> close_congruence(const FiniteSemigroup& s,
                                  const std::vector<std::pair<int, int>>& seed) {
  UnionFind uf(s.n);
  for (auto [a, b] : seed) uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < s.n; ++a) {
      for (int b = a + 1; b < s.n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        changed |= uf.unite(s.d_op[a], s.d_op[b]);
        changed |= uf.unite(s.r_op[a], s.r_op[b]);
        for (int c = 0; c < s.n; ++c) {
          changed |= uf.unite(s.mul[c][a], s.mul[c][b]);
          changed |= uf.unite(s.mul[a][c], s.mul[b][c]);
        }
      }
    }
  }
  return canonical_classes(uf, s.n);
}

std::vector<std::pair<int, int>> pairs_of_partition(const std::vector<int>& cls) {
  std::vector<std::pair<int, int>> out;
  std::vector<int> first(cls.size(), -1);
  for (int a = 0; a < (int)cls.size(); ++a) {
    if (first[cls[a]] < 0) {
      first[cls[a]] = a;
    } else {
      out.emplace_back(first[cls[a]], a);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> enumerate_congruences(const FiniteSemigroup& s) {
  s.validate_shape();
  if (s.n > 12) throw Error("enumerate_congruences: carrier too large (max 12)");

  std::vector<std::vector<int>> principals;
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      principals.push_back(close_congruence(s, {{a, b}}));
    }
  }

  std::vector<int> discrete(s.n);
  std::iota(discrete.begin(), discrete.end(), 0);
  std::set<std::vector<int>> known{discrete};
  std::vector<std::vector<int>> work{discrete};
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    auto base = pairs_of_partition(cur);
    for (const auto& principal : principals) {
      auto seed = base;
      auto extra = pairs_of_partition(principal);
      seed.insert(seed.end(), extra.begin(), extra.end());
      auto joined = close_congruence(s, seed);
      if (known.insert(joined).second) work.push_back(joined);
    }
  }

  std::vector<std::vector<int>> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int cx = *std::max_element(x.begin(), x.end());
    int cy = *std::max_element(y.begin(), y.end());
    if (cx != cy) return cx > cy;
    return x < y;
  });
  return out;
}

}  // namespace drckit
