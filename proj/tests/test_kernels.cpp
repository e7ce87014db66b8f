#include <doctest.h>

#include <vector>

#include "drckit/kernels.hpp"

using namespace drckit;

TEST_CASE("serial scan finds the least violating index") {
    CHECK(first_violation_serial(10, [](long long i) { return i >= 7; }) == 7);
    CHECK(first_violation_serial(10, [](long long) { return false; }) == -1);
    CHECK(first_violation_serial(0, [](long long) { return true; }) == -1);
}

TEST_CASE("parallel scan agrees with the serial scan") {
    // Big enough that the dispatcher picks the parallel path.
    const long long n = 1 << 16;
    for (long long planted : {0LL, 1LL, 12345LL, n - 1, n}) {
        auto bad = [&](long long i) { return i >= planted; };
        long long want = planted == n ? -1 : planted;
        CHECK(first_violation_parallel(n, bad) == want);
        CHECK(first_violation(n, bad) == want);
    }
}

TEST_CASE("parallel scan reports the global minimum, not a chunk minimum") {
    const long long n = 1 << 16;
    // Violations sprinkled across chunks; 100 is the least of them.
    auto bad = [](long long i) { return i % 9001 == 100; };
    CHECK(first_violation_parallel(n, bad) == first_violation_serial(n, bad));
    CHECK(first_violation_parallel(n, bad) == 100);
}

TEST_CASE("scan builders decode the witness tuple") {
    CheckResult one = scan1("law", 5, [](long long i) { return i != 3; });
    CHECK_FALSE(one.pass);
    CHECK(one.witness == std::vector<long long>{3});

    CheckResult two =
        scan2("law", 4, 5, [](long long a, long long b) { return !(a == 2 && b == 4); });
    CHECK_FALSE(two.pass);
    CHECK(two.witness == std::vector<long long>{2, 4});

    CheckResult three = scan3("law", 3, 4, 5, [](long long a, long long b, long long c) {
        return !(a == 1 && b == 2 && c == 3);
    });
    CHECK_FALSE(three.pass);
    CHECK(three.witness == std::vector<long long>{1, 2, 3});

    CheckResult clean = scan3("law", 3, 4, 5, [](long long, long long, long long) { return true; });
    CHECK(clean.pass);
    CHECK(clean.witness.empty());
}

TEST_CASE("scan2 picks the first witness in row major order") {
    CheckResult r = scan2("law", 10, 10, [](long long a, long long b) { return a + b < 15; });
    CHECK_FALSE(r.pass);
    CHECK(r.witness == std::vector<long long>{6, 9});
}

TEST_CASE("worker cap is positive") { CHECK(worker_cap() >= 1); }
