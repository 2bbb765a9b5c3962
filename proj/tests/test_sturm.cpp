#include "polyrec/sturm.hpp"
#include "polyrec/recurrence.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace polyrec;
using namespace polyrec::testutil;

namespace {

IntPoly ip(std::initializer_list<long long> cs) {
    IntPoly p;
    for (long long c : cs) p.push_back(BigInt(c));
    return p;
}

}  // namespace

TEST_CASE("distinct_real_roots on known polynomials") {
    CHECK(distinct_real_roots(ip({-1, 0, 1})) == 2);      // x^2 - 1
    CHECK(distinct_real_roots(ip({1, 0, 1})) == 0);       // x^2 + 1
    CHECK(distinct_real_roots(ip({0, -1, 0, 1})) == 3);   // x^3 - x
    CHECK(distinct_real_roots(ip({1, -2, 1})) == 1);      // (x-1)^2
    CHECK(distinct_real_roots(ip({0, 1})) == 1);
    CHECK(distinct_real_roots(ip({5})) == 0);
    // (x^2+1)(x-2): one real root
    CHECK(distinct_real_roots(ip({-2, 1, -2, 1})) == 1);
}

TEST_CASE("real_rooted_exact handles multiplicity") {
    CHECK(real_rooted_exact(ip({1, -2, 1})));              // (x-1)^2
    CHECK(real_rooted_exact(ip({0, 0, 0, 1})));            // x^3
    CHECK(gcd_degree(ip({1, -2, 1})) == 1);
    CHECK(gcd_degree(ip({-1, 0, 1})) == 0);
    CHECK_FALSE(real_rooted_exact(ip({1, 0, 1})));
    // (x^2+1)^2: gcd degree 2, not real-rooted
    CHECK_FALSE(real_rooted_exact(ip({1, 0, 2, 0, 1})));
    CHECK(gcd_degree(ip({1, 0, 2, 0, 1})) == 2);
    // constants and linears are trivially real-rooted
    CHECK(real_rooted_exact(ip({7})));
    CHECK(real_rooted_exact(ip({3, -2})));
}

TEST_CASE("exact_sequence matches the floating generator up to scaling") {
    RecurrenceParams p{0.5, -1.5, 1, -0.25};
    auto exact = exact_sequence(p, 8);
    auto w = generate_sequence(p, 8, 256);
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(static_cast<int>(exact[n].size()) == n + 1);
        // V_n = 2^{shift n} W_n for a fixed shift; recover it from the
        // leading coefficients
        Real lead = w[n].leading();
        Real scale = Real(exact[n].back().str()) / lead;
        for (int k = 0; k <= n; ++k) {
            Real want = w[n].coeff(k) * scale;
            Real got = Real(exact[n][k].str());
            CHECK(abs(got - want) <= Real(1e-60) * (1 + abs(want)));
        }
    }
}

TEST_CASE("exact real-rootedness of W_n on known witnesses") {
    // criterion-true point: real-rooted through n = 40
    auto good = exact_sequence({1, -1, 2, -3}, 40);
    for (int n = 2; n <= 40; ++n) CHECK(real_rooted_exact(good[n]));
    // criterion-false point fails at some n
    auto bad = exact_sequence({1, -2, 1, -1}, 40);
    bool failed = false;
    for (int n = 2; n <= 40; ++n)
        if (!real_rooted_exact(bad[n])) failed = true;
    CHECK(failed);
    // x_A = x_B: high-multiplicity factor, still real-rooted
    auto eq = exact_sequence({1, -1, 1, -1}, 20);
    for (int n = 2; n <= 20; ++n) CHECK(real_rooted_exact(eq[n]));
}
