#include "polyrec/sturm.hpp"

#include <cmath>
#include <stdexcept>

namespace polyrec {

namespace {

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (int k = 1; k <= deg(p); ++k) d.push_back(BigInt(k) * p[k]);
    return d;
}

// Strip the content so coefficient growth stays linear in the degree. The
// divisor is positive, which keeps the Sturm sign pattern intact.
void primitive(IntPoly& p) {
    BigInt g(0);
    for (const BigInt& c : p) g = gcd(g, c);
    if (g > 1)
        for (BigInt& c : p) c /= g;
}

// lc(B)^k * A mod B for the k reduction steps actually taken; flips the sign
// back when the accumulated multiplier was negative, so the result stays a
// positive multiple of the true remainder.
IntPoly prem(IntPoly A, const IntPoly& B) {
    const BigInt& lb = B.back();
    int db = deg(B);
    int steps = 0;
    while (deg(A) >= db) {
        BigInt la = A.back();
        int shift = deg(A) - db;
        for (BigInt& c : A) c *= lb;
        for (int j = 0; j <= db; ++j) A[j + shift] -= la * B[j];
        trim(A);
        ++steps;
    }
    if (lb < 0 && steps % 2 == 1)
        for (BigInt& c : A) c = -c;
    return A;
}

struct SturmInfo {
    int distinct;   // distinct real roots
    int gcd_deg;    // deg gcd(p, p')
};

SturmInfo sturm_info(IntPoly p) {
    trim(p);
    if (deg(p) < 1) return {0, 0};
    IntPoly prev = p;
    IntPoly cur = derivative(p);
    primitive(prev);
    primitive(cur);

    // sign variations at -inf and +inf from leading coefficients
    int v_neg = 0, v_pos = 0;
    int last_neg = 0, last_pos = 0;
    auto account = [&](const IntPoly& q) {
        int s = q.back() > 0 ? 1 : -1;
        int s_pos = s;
        int s_neg = deg(q) % 2 == 0 ? s : -s;
        if (last_pos != 0 && s_pos != last_pos) ++v_pos;
        if (last_neg != 0 && s_neg != last_neg) ++v_neg;
        last_pos = s_pos;
        last_neg = s_neg;
    };
    account(prev);
    int last_deg = deg(prev);
    if (!cur.empty()) {
        account(cur);
        last_deg = deg(cur);
        while (true) {
            IntPoly r = prem(prev, cur);
            if (r.empty()) break;
            for (BigInt& c : r) c = -c;
            primitive(r);
            account(r);
            last_deg = deg(r);
            prev = std::move(cur);
            cur = std::move(r);
        }
    }
    return {v_neg - v_pos, last_deg};
}

// smallest k with x * 2^k integral; every finite double terminates
int dyadic_shift(double x) {
    int k = 0;
    while (x != std::floor(x)) {
        x *= 2;
        if (++k > 1100) throw std::invalid_argument("parameter is not finite");
    }
    return k;
}

BigInt scaled_int(double x, int shift) {
    if (shift > 62) throw std::invalid_argument("parameter needs too much scaling");
    double v = std::ldexp(x, shift);
    if (std::abs(v) >= 9.0e18) throw std::invalid_argument("parameter needs too much scaling");
    return BigInt(static_cast<long long>(std::llround(v)));
}

}  // namespace

std::vector<IntPoly> exact_sequence(const RecurrenceParams& params, int N) {
    params.require_valid();
    int shift = std::max({dyadic_shift(params.a), dyadic_shift(params.b),
                          dyadic_shift(params.c), dyadic_shift(params.d)});
    // V_n = 2^{shift n} W_n satisfies V_n = A' V_{n-1} + 2^shift B' V_{n-2}
    // with A' = 2^shift A, B' = 2^shift B, all integral.
    BigInt a = scaled_int(params.a, shift), b = scaled_int(params.b, shift);
    BigInt c = scaled_int(params.c, shift), d = scaled_int(params.d, shift);
    BigInt D = BigInt(1) << shift;

    std::vector<IntPoly> w(N + 1);
    w[0] = {BigInt(1)};
    if (N >= 1) w[1] = {BigInt(0), D};
    for (int n = 2; n <= N; ++n) {
        const IntPoly& p1 = w[n - 1];
        const IntPoly& p2 = w[n - 2];
        IntPoly out(n + 1, BigInt(0));
        for (int k = 0; k <= deg(p1); ++k) {
            out[k] += b * p1[k];
            out[k + 1] += a * p1[k];
        }
        for (int k = 0; k <= deg(p2); ++k) {
            out[k] += D * d * p2[k];
            out[k + 1] += D * c * p2[k];
        }
        trim(out);
        w[n] = std::move(out);
    }
    return w;
}

int distinct_real_roots(const IntPoly& p) { return sturm_info(p).distinct; }

int gcd_degree(const IntPoly& p) { return sturm_info(p).gcd_deg; }

bool real_rooted_exact(const IntPoly& p) {
    IntPoly q = p;
    trim(q);
    if (deg(q) < 1) return true;
    SturmInfo info = sturm_info(q);
    // roots(p) = roots(squarefree part) with multiplicities carried by
    // gcd(p, p'), whose roots are a subset; all real iff every distinct
    // root is real
    return info.distinct == deg(q) - info.gcd_deg;
}

}  // namespace polyrec
