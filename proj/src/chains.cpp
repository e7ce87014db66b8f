#include "drckit/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "drckit/error.hpp"

namespace drckit {

bool is_path(const ProjectionAlgebra& pa, const Path& p) {
  if (p.empty()) return false;
  for (int v : p) {
    if (v < 0 || v >= pa.n) return false;
  }
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    int a = p[i], b = p[i + 1];
    if (!(pa.delta[a][b] == a && pa.theta[b][a] == b)) return false;
  }
  return true;
}

Path compose_paths(const Path& a, const Path& b) {
  if (a.empty() || b.empty() || a.back() != b.front()) {
    throw Error("compose_paths: endpoints do not meet");
  }
  Path out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

Path left_restrict_path(const ProjectionAlgebra& pa, int q, const Path& p) {
  if (p.empty()) throw Error("left_restrict_path: empty path");
  if (pa.theta[p.front()][q] != q) {
    throw Error("left_restrict_path: projection not below the front");
  }
  Path out(p.size());
  int cur = q;
  for (size_t i = 0; i < p.size(); ++i) {
    cur = pa.theta[p[i]][cur];
    out[i] = cur;
  }
  return out;
}

Path right_restrict_path(const ProjectionAlgebra& pa, const Path& p, int r) {
  if (p.empty()) throw Error("right_restrict_path: empty path");
  if (pa.theta[p.back()][r] != r) {
    throw Error("right_restrict_path: projection not below the back");
  }
  Path out(p.size());
  int cur = r;
  for (size_t i = p.size(); i-- > 0;) {
    cur = pa.delta[p[i]][cur];
    out[i] = cur;
  }
  return out;
}

Path normalize_chain(const Path& p) {
  Path out;
  for (int v : p) {
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

Path chain_compose(const Path& a, const Path& b) {
  return normalize_chain(compose_paths(a, b));
}

Path chain_left_restrict(const ProjectionAlgebra& pa, int q, const Path& p) {
  return normalize_chain(left_restrict_path(pa, q, p));
}

Path chain_right_restrict(const ProjectionAlgebra& pa, const Path& p, int r) {
  return normalize_chain(right_restrict_path(pa, p, r));
}

namespace {

void grow(const ProjectionAlgebra& pa,
          const std::vector<std::vector<bool>>& f, const Path& cur,
          int max_len, bool allow_dups, std::vector<Path>* out) {
  out->push_back(cur);
  if ((int)cur.size() == max_len) return;
  for (int next = 0; next < pa.n; ++next) {
    if (!allow_dups && next == cur.back()) continue;
    if (!f[cur.back()][next]) continue;
    Path ext = cur;
    ext.push_back(next);
    grow(pa, f, ext, max_len, allow_dups, out);
  }
}

std::vector<Path> enumerate_paths(const ProjectionAlgebra& pa, int max_len,
                                  bool allow_dups) {
  if (max_len < 1) throw Error("path enumeration: bound must be positive");
  auto f = f_relation_of(pa);
  std::vector<Path> out;
  for (int p = 0; p < pa.n; ++p) grow(pa, f, {p}, max_len, allow_dups, &out);
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace

std::vector<Path> all_chains(const ProjectionAlgebra& pa, int max_len) {
  return enumerate_paths(pa, max_len, false);
}

BiorderedCategory chain_category(const ProjectionAlgebra& pa, int max_len) {
  auto chains = all_chains(pa, max_len);
  const long long m = (long long)chains.size();
  std::map<Path, int> index;
  for (int i = 0; i < m; ++i) index[chains[i]] = i;

  auto leq = order_of(pa);
  BiorderedCategory c;
  c.m = m;
  c.dom.resize(m);
  c.cod.resize(m);
  for (int i = 0; i < m; ++i) {
    c.dom[i] = index.at({chains[i].front()});
    c.cod[i] = index.at({chains[i].back()});
  }
  for (int p = 0; p < pa.n; ++p) {
    c.objects.push_back(index.at({p}));
    for (int q = 0; q < pa.n; ++q) {
      if (leq[p][q]) c.obj_leq_pairs.emplace_back(index.at({p}), index.at({q}));
    }
  }
  std::sort(c.objects.begin(), c.objects.end());

  bool omitted = false;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (chains[a].back() != chains[b].front()) continue;
      Path ab = chain_compose(chains[a], chains[b]);
      if ((int)ab.size() > max_len) {
        omitted = true;
        continue;
      }
      c.comp[(long long)a * m + b] = index.at(ab);
    }
    for (int q = 0; q < pa.n; ++q) {
      if (leq[q][chains[a].front()]) {
        Path r = chain_left_restrict(pa, q, chains[a]);
        c.lres[(long long)index.at({q}) * m + a] = index.at(r);
      }
      if (leq[q][chains[a].back()]) {
        Path r = chain_right_restrict(pa, chains[a], q);
        c.rres[(long long)a * m + index.at({q})] = index.at(r);
      }
    }
  }
  c.trunc_bound = omitted ? max_len : 0;
  c.finalize();
  return c;
}

PathClosure path_congruence_closure(const ProjectionAlgebra& pa, int max_len) {
  PathClosure pc;
  pc.paths = enumerate_paths(pa, max_len, true);
  const int m = (int)pc.paths.size();
  std::map<Path, int> index;
  for (int i = 0; i < m; ++i) index[pc.paths[i]] = i;
  auto leq = order_of(pa);

  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  };

  // Generators: delete one member of an adjacent repeated pair.
  for (int i = 0; i < m; ++i) {
    const Path& w = pc.paths[i];
    for (size_t j = 0; j + 1 < w.size(); ++j) {
      if (w[j] != w[j + 1]) continue;
      Path shorter = w;
      shorter.erase(shorter.begin() + j);
      unite(i, index.at(shorter));
    }
  }

  // Close under composition on either side and under both restrictions,
  // staying inside the length bound.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (find(a) != find(b)) continue;
        const Path& wa = pc.paths[a];
        const Path& wb = pc.paths[b];
        if (wa.front() != wb.front() || wa.back() != wb.back()) continue;
        for (int u = 0; u < m; ++u) {
          const Path& wu = pc.paths[u];
          if (wu.back() == wa.front()) {
            Path ua = compose_paths(wu, wa);
            Path ub = compose_paths(wu, wb);
            if ((int)ua.size() <= max_len && (int)ub.size() <= max_len) {
              changed |= unite(index.at(ua), index.at(ub));
            }
          }
          if (wu.front() == wa.back()) {
            Path au = compose_paths(wa, wu);
            Path bu = compose_paths(wb, wu);
            if ((int)au.size() <= max_len && (int)bu.size() <= max_len) {
              changed |= unite(index.at(au), index.at(bu));
            }
          }
        }
        for (int q = 0; q < pa.n; ++q) {
          if (leq[q][wa.front()]) {
            changed |= unite(index.at(left_restrict_path(pa, q, wa)),
                             index.at(left_restrict_path(pa, q, wb)));
          }
          if (leq[q][wa.back()]) {
            changed |= unite(index.at(right_restrict_path(pa, wa, q)),
                             index.at(right_restrict_path(pa, wb, q)));
          }
        }
      }
    }
  }

  pc.cls.assign(m, -1);
  std::vector<int> remap(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (remap[r] < 0) remap[r] = next++;
    pc.cls[i] = remap[r];
  }
  return pc;
}

}  // namespace drckit
