#include "mhdlab/specfun.hpp"

#include <cmath>
#include <limits>

namespace mhdlab {

namespace {

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::round(x); }

double rgamma(double x) {
    if (nonpositive_integer(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

// plain Gauss series, |z| < 1
Hyp2F1Result series(double a, double b, double c, double z, long max_terms = 20'000'000) {
    Hyp2F1Result r;
    r.method = "series";
    double term = 1.0, sum = 1.0, comp = 0.0;
    const double eps = std::numeric_limits<double>::epsilon();
    for (long n = 0; n < max_terms; ++n) {
        const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        term *= ratio;
        // Kahan summation keeps long near-unit-radius sums accurate
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term == 0.0) break;
        const double next = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * z);
        if (next < 1.0 && n > 2) {
            const double tail = std::abs(term) * next / (1.0 - next);
            if (tail <= 0.25 * eps * std::abs(sum)) {
                r.truncation_bound = tail;
                r.value = sum;
                return r;
            }
        }
    }
    r.value = sum;
    r.truncation_bound = std::abs(term);
    r.method = "series-unconverged";
    return r;
}

// F(a,b;c;w) for 0 <= w < 1
Hyp2F1Result unit_interval(double a, double b, double c, double w) {
    if (w <= 0.9) return series(a, b, c, w);
    const double s = c - a - b;
    if (std::abs(s - std::round(s)) < 1e-9) {
        // degenerate connection coefficients; the direct series still converges
        return series(a, b, c, w);
    }
    const double q = 1.0 - w;
    const double g = std::tgamma(c);
    const double A1 = g * std::tgamma(s) * rgamma(c - a) * rgamma(c - b);
    const double A2 = g * std::tgamma(-s) * rgamma(a) * rgamma(b);
    Hyp2F1Result r;
    r.method = "one-minus-z";
    double v = 0.0, tb = 0.0;
    if (A1 != 0.0) {
        auto f1 = series(a, b, 1.0 - s, q);
        v += A1 * f1.value;
        tb += std::abs(A1) * f1.truncation_bound;
    }
    if (A2 != 0.0) {
        auto f2 = series(c - a, c - b, 1.0 + s, q);
        const double pre = A2 * std::pow(q, s);
        v += pre * f2.value;
        tb += std::abs(pre) * f2.truncation_bound;
    }
    r.value = v;
    r.truncation_bound = tb;
    return r;
}

}  // namespace

Hyp2F1Result hyp2f1_eval(const Hyp2F1Args& x) {
    const double a = x.a, b = x.b, c = x.c, z = x.z;
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
        throw SpecfunError("hyp2f1: non-finite argument");
    if (nonpositive_integer(c)) throw SpecfunError("hyp2f1: pole, c is a non-positive integer");
    if (z >= 1.0) throw SpecfunError("hyp2f1: z >= 1 is outside the real branch");
    if (z == 0.0) return {1.0, 0.0, "trivial"};
    // terminating series
    if (nonpositive_integer(a) || nonpositive_integer(b)) return series(a, b, c, z);
    if (z > 0.0) return unit_interval(a, b, c, z);
    if (z >= -0.5) return series(a, b, c, z);
    // Pfaff: F(a,b;c;z) = (1-z)^(-b) F(c-a, b; c; z/(z-1))
    const double w = z / (z - 1.0);
    Hyp2F1Result r = unit_interval(c - a, b, c, w);
    const double pre = std::pow(1.0 - z, -b);
    r.value *= pre;
    r.truncation_bound *= std::abs(pre);
    r.method = "pfaff+" + r.method;
    return r;
}

double hyp2f1(double a, double b, double c, double z) { return hyp2f1_eval({a, b, c, z}).value; }

ArtanhResult artanh(double x) {
    if (std::abs(x) == 1.0) throw SpecfunError("artanh: singular at |x| = 1");
    if (std::abs(x) < 1.0) return {std::atanh(x), false};
    return {0.5 * std::log((x + 1.0) / (x - 1.0)), true};
}

Jet2 artanh_real(const Jet2& x) {
    const double q = 1.0 - x.v * x.v;
    return lift(x, artanh(x.v).value, 1.0 / q, 2.0 * x.v / (q * q));
}

}  // namespace mhdlab
