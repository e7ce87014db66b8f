#pragma once

#include <atomic>

namespace drckit {

// Worker count for the parallel scans: DRC_KIT_THREADS when set and positive,
// otherwise the OpenMP default (1 in builds without OpenMP). Read once.
int worker_cap();

// Least i in [0, total) with bad(i), or -1. The predicate must be pure.
template <class Pred>
long long first_violation_serial(long long total, Pred&& bad) {
  for (long long i = 0; i < total; ++i) {
    if (bad(i)) return i;
  }
  return -1;
}

// Same contract and same result as the serial scan. Threads race on disjoint
// chunks and fold their hits with a CAS-min, so the reported index is still
// the global minimum; indices past the current best are skipped, not tested.
template <class Pred>
long long first_violation_parallel(long long total, Pred&& bad) {
  std::atomic<long long> best{total};
#pragma omp parallel for schedule(dynamic, 1024) num_threads(worker_cap())
  for (long long i = 0; i < total; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (bad(i)) {
      long long cur = best.load(std::memory_order_relaxed);
      while (i < cur &&
             !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  long long r = best.load();
  return r == total ? -1 : r;
}

// Small scans are not worth the fork/join overhead.
template <class Pred>
long long first_violation(long long total, Pred&& bad) {
  if (total < (1 << 14) || worker_cap() == 1) {
    return first_violation_serial(total, bad);
  }
  return first_violation_parallel(total, bad);
}

}  // namespace drckit

#include "drckit/report.hpp"

namespace drckit {

// Report builders over rectangular index spaces. `holds` must be pure.
template <class F>
CheckResult scan1(std::string law, long long n, F&& holds) {
  long long bad = first_violation(n, [&](long long i) { return !holds(i); });
  CheckResult r;
  r.law = std::move(law);
  r.pass = bad < 0;
  if (bad >= 0) r.witness = {bad};
  return r;
}

template <class F>
CheckResult scan2(std::string law, long long n0, long long n1, F&& holds) {
  long long bad = first_violation(n0 * n1, [&](long long i) {
    return !holds(i / n1, i % n1);
  });
  CheckResult r;
  r.law = std::move(law);
  r.pass = bad < 0;
  if (bad >= 0) r.witness = {bad / n1, bad % n1};
  return r;
}

template <class F>
CheckResult scan3(std::string law, long long n0, long long n1, long long n2,
                  F&& holds) {
  long long bad = first_violation(n0 * n1 * n2, [&](long long i) {
    return holds(i / (n1 * n2), (i / n2) % n1, i % n2) ? false : true;
  });
  CheckResult r;
  r.law = std::move(law);
  r.pass = bad < 0;
  if (bad >= 0) r.witness = {bad / (n1 * n2), (bad / n2) % n1, bad % n2};
  return r;
}

}  // namespace drckit
