#include "drckit/projection_algebra.hpp"

#include <sstream>

#include "drckit/error.hpp"
#include "drckit/kernels.hpp"

namespace drckit {

void ProjectionAlgebra::validate_shape() const {
  if (n <= 0) throw Error("projection algebra: carrier must be nonempty");
  for (const auto* tab : {&theta, &delta}) {
    if ((int)tab->size() != n) throw Error("projection algebra: bad table height");
    for (const auto& row : *tab) {
      if ((int)row.size() != n) throw Error("projection algebra: bad table width");
      for (int v : row) {
        if (v < 0 || v >= n) throw Error("projection algebra: entry out of range");
      }
    }
  }
}

AxiomReport check_pa_axioms(const ProjectionAlgebra& pa) {
  pa.validate_shape();
  const int n = pa.n;
  auto th = [&](int p, int q) { return pa.theta[p][q]; };
  auto de = [&](int p, int q) { return pa.delta[p][q]; };

  AxiomReport rep;
  rep.subject = "projection algebra axioms";
  rep.checks.push_back(scan1("P1 theta", n, [&](long long p) {
    return th(p, p) == p;
  }));
  rep.checks.push_back(scan2("P2 theta", n, n, [&](long long p, long long q) {
    int v = th(p, q);
    return th(v, p) == v;
  }));
  rep.checks.push_back(scan3("P3 theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return th(th(p, q), th(q, t)) == th(p, th(q, t));
  }));
  rep.checks.push_back(scan2("P4 theta", n, n, [&](long long p, long long t) {
    int v = th(p, t);
    return de(p, v) == v;
  }));
  rep.checks.push_back(scan3("P5 theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return th(p, th(de(q, p), t)) == th(p, th(q, t));
  }));
  rep.checks.push_back(scan1("P1 delta", n, [&](long long p) {
    return de(p, p) == p;
  }));
  rep.checks.push_back(scan2("P2 delta", n, n, [&](long long p, long long q) {
    int v = de(p, q);
    return de(v, p) == v;
  }));
  rep.checks.push_back(scan3("P3 delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return de(de(p, q), de(q, t)) == de(p, de(q, t));
  }));
  rep.checks.push_back(scan2("P4 delta", n, n, [&](long long p, long long t) {
    int v = de(p, t);
    return th(p, v) == v;
  }));
  rep.checks.push_back(scan3("P5 delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return de(p, de(th(q, p), t)) == de(p, de(q, t));
  }));
  return rep;
}

AxiomReport check_pa_derived(const ProjectionAlgebra& pa) {
  pa.validate_shape();
  const int n = pa.n;
  auto th = [&](int p, int q) { return pa.theta[p][q]; };
  auto de = [&](int p, int q) { return pa.delta[p][q]; };

  AxiomReport rep;
  rep.subject = "projection algebra derived laws";
  rep.checks.push_back(scan2("P6 theta", n, n, [&](long long p, long long t) {
    return th(p, th(p, t)) == th(p, t);
  }));
  rep.checks.push_back(scan3("P7 theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    int v = th(p, q);
    return th(v, t) == th(v, th(p, t)) && th(v, t) == th(p, th(v, t));
  }));
  rep.checks.push_back(scan2("P8 theta", n, n, [&](long long p, long long q) {
    int v = th(p, q);
    return th(v, q) == v;
  }));
  rep.checks.push_back(scan2("P9 theta", n, n, [&](long long p, long long q) {
    return th(p, de(q, p)) == th(p, q);
  }));
  rep.checks.push_back(scan3("P10 theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    int v = th(p, q);
    return th(v, de(q, t)) == th(p, de(q, t));
  }));
  rep.checks.push_back(scan2("P6 delta", n, n, [&](long long p, long long t) {
    return de(p, de(p, t)) == de(p, t);
  }));
  rep.checks.push_back(scan3("P7 delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    int v = de(p, q);
    return de(v, t) == de(v, de(p, t)) && de(v, t) == de(p, de(v, t));
  }));
  rep.checks.push_back(scan2("P8 delta", n, n, [&](long long p, long long q) {
    int v = de(p, q);
    return de(v, q) == v;
  }));
  rep.checks.push_back(scan2("P9 delta", n, n, [&](long long p, long long q) {
    return de(p, th(q, p)) == de(p, q);
  }));
  rep.checks.push_back(scan3("P10 delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    int v = de(p, q);
    return de(v, th(q, t)) == de(p, th(q, t));
  }));
  return rep;
}

std::vector<std::vector<bool>> order_of(const ProjectionAlgebra& pa) {
  pa.validate_shape();
  const int n = pa.n;
  std::vector<std::vector<bool>> im_th(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> im_de(n, std::vector<bool>(n, false));
  for (int q = 0; q < n; ++q) {
    for (int t = 0; t < n; ++t) {
      im_th[q][pa.theta[q][t]] = true;
      im_de[q][pa.delta[q][t]] = true;
    }
  }

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      bool c1 = pa.theta[q][p] == p;
      bool c2 = im_th[q][p];
      bool c3 = pa.delta[q][p] == p;
      bool c4 = im_de[q][p];
      bool c5 = c1 && c3 && pa.theta[p][q] == p && pa.delta[p][q] == p;
      if (c1 != c2 || c1 != c3 || c1 != c4 || c1 != c5) {
        std::ostringstream os;
        os << "order characterisations disagree at (" << p << "," << q << ")";
        throw Error(os.str());
      }
      leq[p][q] = c1;
    }
  }

  for (int p = 0; p < n; ++p) {
    if (!leq[p][p]) throw Error("projection order is not reflexive");
    for (int q = 0; q < n; ++q) {
      if (p != q && leq[p][q] && leq[q][p]) {
        throw Error("projection order is not antisymmetric");
      }
      for (int r = 0; r < n; ++r) {
        if (leq[p][q] && leq[q][r] && !leq[p][r]) {
          throw Error("projection order is not transitive");
        }
      }
    }
  }
  return leq;
}

std::vector<std::vector<bool>> f_relation_of(const ProjectionAlgebra& pa) {
  pa.validate_shape();
  const int n = pa.n;
  std::vector<std::vector<bool>> f(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      f[p][q] = pa.delta[p][q] == p && pa.theta[q][p] == q;
    }
  }
  return f;
}

bool is_pa_morphism(const ProjectionAlgebra& src, const ProjectionAlgebra& dst,
                    const std::vector<int>& phi,
                    std::vector<long long>* witness) {
  src.validate_shape();
  dst.validate_shape();
  if ((int)phi.size() != src.n) throw Error("pa morphism: map has wrong size");
  for (int v : phi) {
    if (v < 0 || v >= dst.n) throw Error("pa morphism: image out of range");
  }
  for (int p = 0; p < src.n; ++p) {
    for (int q = 0; q < src.n; ++q) {
      bool ok = phi[src.theta[p][q]] == dst.theta[phi[p]][phi[q]] &&
                phi[src.delta[p][q]] == dst.delta[phi[p]][phi[q]];
      if (!ok) {
        if (witness) *witness = {p, q};
        return false;
      }
    }
  }
  return true;
}

ProjectionAlgebra opposite_pa(const ProjectionAlgebra& pa) {
  ProjectionAlgebra op = pa;
  std::swap(op.theta, op.delta);
  return op;
}

bool is_symmetric(const ProjectionAlgebra& pa) {
  return pa.theta == pa.delta;
}

AxiomReport check_imaoka(const ProjectionAlgebra& pa) {
  pa.validate_shape();
  const int n = pa.n;
  auto th = [&](int p, int q) { return pa.theta[p][q]; };
  auto de = [&](int p, int q) { return pa.delta[p][q]; };

  AxiomReport rep;
  rep.subject = "single-family axioms";
  rep.checks.push_back(scan1("P1' theta", n, [&](long long p) {
    return th(p, p) == p;
  }));
  rep.checks.push_back(scan2("P2' theta", n, n, [&](long long p, long long t) {
    return th(p, th(p, t)) == th(p, t);
  }));
  rep.checks.push_back(scan2("P3' theta", n, n, [&](long long p, long long q) {
    return th(p, th(q, p)) == th(p, q);
  }));
  rep.checks.push_back(scan3("P4' theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return th(p, th(q, th(p, t))) == th(th(p, q), t);
  }));
  rep.checks.push_back(scan3("P5' theta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return th(q, th(p, th(q, th(p, t)))) == th(q, th(p, t));
  }));
  rep.checks.push_back(scan1("P1' delta", n, [&](long long p) {
    return de(p, p) == p;
  }));
  rep.checks.push_back(scan2("P2' delta", n, n, [&](long long p, long long t) {
    return de(p, de(p, t)) == de(p, t);
  }));
  rep.checks.push_back(scan2("P3' delta", n, n, [&](long long p, long long q) {
    return de(p, de(q, p)) == de(p, q);
  }));
  rep.checks.push_back(scan3("P4' delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return de(p, de(q, de(p, t))) == de(de(p, q), t);
  }));
  rep.checks.push_back(scan3("P5' delta", n, n, n,
                             [&](long long p, long long q, long long t) {
    return de(q, de(p, de(q, de(p, t)))) == de(q, de(p, t));
  }));
  return rep;
}

}  // namespace drckit
