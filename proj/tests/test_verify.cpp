#include "polyrec/verify.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace polyrec;
using namespace polyrec::testutil;
using boost::multiprecision::abs;

TEST_CASE("real_rooted_criterion") {
    CHECK(real_rooted_criterion({1, -1, 2, -3}));       // x_A = 1 <= x_B = 1.5
    CHECK_FALSE(real_rooted_criterion({1, -2, 1, -1})); // x_A = 2 > x_B = 1
    CHECK(real_rooted_criterion({1, -1, 1, -1}));       // equality boundary
    CHECK_THROWS_AS(real_rooted_criterion({1, 2, -2, -1}), std::invalid_argument);
}

TEST_CASE("criterion is equivalent to ad <= bc in the (+,-,+,-) case") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        RecurrenceParams p{rand_in(rng, 0.1, 3), rand_in(rng, -3, -0.1),
                           rand_in(rng, 0.1, 3), rand_in(rng, -3, -0.1)};
        CHECK(real_rooted_criterion(p) == (p.a * p.d <= p.b * p.c));
    }
}

TEST_CASE("interlacing chain for (1,-1,2,-3)") {
    VerifyConfig cfg;
    VerificationReport rep = verify_interlacing_chain({1, -1, 2, -3}, 12, cfg);
    CHECK(rep.passed);
    CHECK(rep.worst_margin > 0);
}

TEST_CASE("interlacing chain rejects x_A = x_B and x_A > x_B") {
    CHECK_THROWS_AS(verify_interlacing_chain({1, -1, 1, -1}, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_interlacing_chain({1, -2, 1, -1}, 10), std::invalid_argument);
}

TEST_CASE("non-real-rootedness is found for a criterion-false point") {
    ScanSummary sum = scan_sign_region({1}, {-2}, {1}, {-1}, 40);
    REQUIRE(sum.points.size() == 1);
    CHECK_FALSE(sum.points[0].criterion);
    CHECK(sum.points[0].outcome == ScanOutcome::FailureFound);
    CHECK(sum.points[0].first_failure_n > 1);
}

TEST_CASE("sign conditions for (1,-1,2,-3)") {
    VerificationReport rep = verify_sign_conditions({1, -1, 2, -3}, 20);
    CHECK(rep.passed);
    // scalar recurrence evaluation agrees with polynomial eval for n <= 20
    CriticalScalars s = critical_scalars({1, -1, 2, -3}, 256);
    auto w = generate_sequence({1, -1, 2, -3}, 20, 256);
    for (int n = 0; n <= 20; ++n) {
        Real via_scalar = eval_recurrence_at({1, -1, 2, -3}, n, *s.u, 256);
        Real via_poly = w[n].eval(*s.u);
        CHECK(approx(via_scalar, via_poly, 1e-30));
    }
}

TEST_CASE("bound sharpness for (1,-1,2,-3)") {
    VerifyConfig cfg;
    cfg.convergence_tol = 0.05;
    VerificationReport rep = verify_bound_sharpness({1, -1, 2, -3}, 60, cfg);
    CHECK(rep.passed);
}

TEST_CASE("limit convergence traces the lollipop") {
    VerifyConfig cfg;
    cfg.convergence_tol = 0.2;
    VerificationReport rep = verify_limit_convergence({1, 2, -2, -1}, 30, cfg);
    CHECK(rep.passed);
}

TEST_CASE("normalized case for (1,-1,1,-1)") {
    VerifyConfig cfg;
    cfg.convergence_tol = 0.1;
    VerificationReport rep = verify_normalized_case({1, -1, 1, -1}, 40, cfg);
    CHECK(rep.passed);

    // u < -c' < 0 < x_B for this parameter set
    CriticalScalars s = critical_scalars({1, -1, 1, -1}, 256);
    REQUIRE(s.u.has_value());
    CHECK(*s.u < -1);
    CHECK(s.x_B == 1);

    CHECK_THROWS_AS(verify_normalized_case({1, -1, 2, -3}, 10), std::invalid_argument);
}

TEST_CASE("u and v are members of the limit set when x_A < x_B") {
    std::mt19937 rng(61);
    int seen = 0;
    while (seen < 25) {
        RecurrenceParams p{rand_in(rng, 0.2, 2.5), rand_in(rng, -2.5, -0.2),
                           rand_in(rng, 0.2, 2.5), rand_in(rng, -2.5, -0.2)};
        CriticalScalars s = critical_scalars(p, 128);
        if (!(s.x_A < s.x_B - 1e-6)) continue;
        if (!s.u || !s.v) continue;
        ++seen;
        LimitSet ls = classify(p, 128);
        CHECK(distance_to(ls, Complex(*s.u)) < 1e-8);
        CHECK(distance_to(ls, Complex(*s.v)) < 1e-8);
    }
}

TEST_CASE("interlacing chain implies full degree counts") {
    VerificationReport rep = verify_interlacing_chain({2, -0.5, 1, -0.75}, 15);
    CHECK(rep.passed);
    // records run n = 1..N+1, each with a positive margin
    for (const DetailRecord& d : rep.details) CHECK(d.margin > 0);
}

TEST_CASE("reports are deterministic") {
    VerificationReport r1 = verify_sign_conditions({1, -1, 2, -3}, 15);
    VerificationReport r2 = verify_sign_conditions({1, -1, 2, -3}, 15);
    REQUIRE(r1.details.size() == r2.details.size());
    CHECK(r1.worst_margin == r2.worst_margin);
    for (std::size_t i = 0; i < r1.details.size(); ++i)
        CHECK(r1.details[i].margin == r2.details[i].margin);
}

TEST_CASE("roots of U_n plus copies of x_A reproduce roots of W_n") {
    RecurrenceParams p{1, -1, 1, -1};
    int n = 14;
    auto useq = normalized_sequence(p, n, 256);
    auto w = generate_sequence(p, n, 256);
    RootSet ur = snap_real(find_roots(useq[n]));
    RootSet wr = snap_real(find_roots(w[n]));
    REQUIRE(wr.converged);
    std::vector<Real> expect = real_parts_sorted(ur);
    CriticalScalars s = critical_scalars(p, 256);
    for (int k = 0; k < n / 2; ++k) expect.push_back(s.x_A);
    std::sort(expect.begin(), expect.end());
    std::vector<Real> got = real_parts_sorted(wr);
    REQUIRE(expect.size() == got.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(approx(expect[i], got[i], 1e-8));
}
