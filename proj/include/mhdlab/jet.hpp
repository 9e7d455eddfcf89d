// Second-order truncated Taylor jets in the four spacetime variables (t,x,y,z).
#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace mhdlab {

// value, gradient and Hessian of a scalar with respect to (t, x, y, z)
struct Jet2 {
    double v = 0.0;
    std::array<double, 4> g{};
    std::array<std::array<double, 4>, 4> h{};

    Jet2() = default;
    Jet2(double value) : v(value) {}  // NOLINT: constants promote implicitly

    static Jet2 variable(double value, int slot) {
        Jet2 j(value);
        j.g[slot] = 1.0;
        return j;
    }

    Jet2& operator+=(const Jet2& o) {
        v += o.v;
        for (int i = 0; i < 4; ++i) {
            g[i] += o.g[i];
            for (int k = 0; k < 4; ++k) h[i][k] += o.h[i][k];
        }
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        v -= o.v;
        for (int i = 0; i < 4; ++i) {
            g[i] -= o.g[i];
            for (int k = 0; k < 4; ++k) h[i][k] -= o.h[i][k];
        }
        return *this;
    }
    Jet2& operator*=(double s) {
        v *= s;
        for (int i = 0; i < 4; ++i) {
            g[i] *= s;
            for (int k = 0; k < 4; ++k) h[i][k] *= s;
        }
        return *this;
    }
    Jet2& operator*=(const Jet2& o) {
        Jet2 r(v * o.v);
        for (int i = 0; i < 4; ++i) r.g[i] = v * o.g[i] + o.v * g[i];
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                r.h[i][k] = v * o.h[i][k] + o.v * h[i][k] + g[i] * o.g[k] + g[k] * o.g[i];
        *this = r;
        return *this;
    }
    Jet2& operator/=(const Jet2& o);
};

// f(a) given f, f', f'' at a.v
inline Jet2 lift(const Jet2& a, double f0, double f1, double f2) {
    Jet2 r(f0);
    for (int i = 0; i < 4; ++i) r.g[i] = f1 * a.g[i];
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r.h[i][k] = f1 * a.h[i][k] + f2 * a.g[i] * a.g[k];
    return r;
}

inline Jet2 operator-(Jet2 a) {
    a *= -1.0;
    return a;
}
inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
inline Jet2 operator+(Jet2 a, double s) {
    a.v += s;
    return a;
}
inline Jet2 operator+(double s, Jet2 a) { return a + s; }
inline Jet2 operator-(Jet2 a, double s) {
    a.v -= s;
    return a;
}
inline Jet2 operator-(double s, const Jet2& a) { return -a + s; }

inline Jet2 reciprocal(const Jet2& a) {
    const double i = 1.0 / a.v;
    return lift(a, i, -i * i, 2.0 * i * i * i);
}
inline Jet2& Jet2::operator/=(const Jet2& o) { return *this *= reciprocal(o); }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator/(Jet2 a, double s) { return a *= (1.0 / s); }
inline Jet2 operator/(double s, const Jet2& a) { return reciprocal(a) * s; }

inline bool operator<(const Jet2& a, const Jet2& b) { return a.v < b.v; }
inline bool operator>(const Jet2& a, const Jet2& b) { return a.v > b.v; }

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return lift(a, e, e, e);
}
inline Jet2 log(const Jet2& a) { return lift(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
inline Jet2 sqrt(const Jet2& a) {
    const double s = std::sqrt(a.v);
    return lift(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 pow(const Jet2& a, double n) {
    const double p = std::pow(a.v, n - 2.0);
    return lift(a, p * a.v * a.v, n * p * a.v, n * (n - 1.0) * p);
}
inline Jet2 pow(const Jet2& a, const Jet2& b) { return exp(b * log(a)); }
inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v);
    return lift(a, s, std::cos(a.v), -s);
}
inline Jet2 cos(const Jet2& a) {
    const double c = std::cos(a.v);
    return lift(a, c, -std::sin(a.v), -c);
}
inline Jet2 tan(const Jet2& a) {
    const double t = std::tan(a.v);
    const double s2 = 1.0 + t * t;
    return lift(a, t, s2, 2.0 * t * s2);
}
inline Jet2 atan(const Jet2& a) {
    const double d = 1.0 / (1.0 + a.v * a.v);
    return lift(a, std::atan(a.v), d, -2.0 * a.v * d * d);
}
inline Jet2 acos(const Jet2& a) {
    const double q = 1.0 - a.v * a.v;
    const double d = -1.0 / std::sqrt(q);
    return lift(a, std::acos(a.v), d, d * a.v / q);
}
inline Jet2 sinh(const Jet2& a) { return lift(a, std::sinh(a.v), std::cosh(a.v), std::sinh(a.v)); }
inline Jet2 cosh(const Jet2& a) { return lift(a, std::cosh(a.v), std::sinh(a.v), std::cosh(a.v)); }

// branch-free atan2: continues atan(y/x) or pi/2 - atan(x/y), whichever is well-conditioned
inline Jet2 atan2(const Jet2& y, const Jet2& x) {
    const double base = std::atan2(y.v, x.v);
    if (std::abs(x.v) >= std::abs(y.v)) {
        Jet2 r = atan(y / x);
        return r + (base - r.v);
    }
    Jet2 r = -atan(x / y);
    return r + (base - r.v);
}

// plain overloads so templated formulas resolve inside this namespace
inline double exp(double a) { return std::exp(a); }
inline double log(double a) { return std::log(a); }
inline double sqrt(double a) { return std::sqrt(a); }
inline double pow(double a, double n) { return std::pow(a, n); }
inline double sin(double a) { return std::sin(a); }
inline double cos(double a) { return std::cos(a); }
inline double tan(double a) { return std::tan(a); }
inline double atan(double a) { return std::atan(a); }
inline double acos(double a) { return std::acos(a); }
inline double sinh(double a) { return std::sinh(a); }
inline double cosh(double a) { return std::cosh(a); }
inline double atan2(double y, double x) { return std::atan2(y, x); }

// f(a) for a scalar or a jet, given f and its first two derivatives at a
inline double lift(double, double f0, double, double) { return f0; }

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.v; }

// first-order jet, used for quantities that already consumed one derivative
struct Jet1 {
    double v = 0.0;
    std::array<double, 4> g{};

    Jet1() = default;
    Jet1(double value) : v(value) {}  // NOLINT
};

inline Jet1 first(const Jet2& a) {
    Jet1 r(a.v);
    r.g = a.g;
    return r;
}
// the jet of the partial derivative d a / d slot
inline Jet1 partial(const Jet2& a, int slot) {
    Jet1 r(a.g[slot]);
    r.g = a.h[slot];
    return r;
}

inline Jet1 operator+(Jet1 a, const Jet1& b) {
    a.v += b.v;
    for (int i = 0; i < 4; ++i) a.g[i] += b.g[i];
    return a;
}
inline Jet1 operator-(Jet1 a, const Jet1& b) {
    a.v -= b.v;
    for (int i = 0; i < 4; ++i) a.g[i] -= b.g[i];
    return a;
}
inline Jet1 operator-(Jet1 a) {
    a.v = -a.v;
    for (auto& x : a.g) x = -x;
    return a;
}
inline Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r(a.v * b.v);
    for (int i = 0; i < 4; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
    return r;
}
inline Jet1 operator*(Jet1 a, double s) {
    a.v *= s;
    for (auto& x : a.g) x *= s;
    return a;
}
inline Jet1 operator*(double s, Jet1 a) { return a * s; }
inline Jet1 operator/(const Jet1& a, const Jet1& b) {
    const double i = 1.0 / b.v;
    Jet1 r(a.v * i);
    for (int k = 0; k < 4; ++k) r.g[k] = (a.g[k] - r.v * b.g[k]) * i;
    return r;
}

}  // namespace mhdlab
