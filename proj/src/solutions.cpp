#include "mhdlab/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "family_impl.hpp"
#include "mhdlab/reduced.hpp"

namespace mhdlab {

SolutionFamily::SolutionFamily(std::string id, ParamSet params, VariantChoice variant)
    : id_(std::move(id)), params_(std::move(params)), variant_(std::move(variant)) {}

double SolutionFamily::param(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) throw std::out_of_range(id_ + ": no parameter " + key);
    return it->second;
}

bool SolutionFamily::variant_is(const std::string& axis, const std::string& option) const {
    auto it = variant_.find(axis);
    return it != variant_.end() && it->second == option;
}

std::string SolutionFamily::name() const {
    if (variant_.empty()) return id_;
    return id_ + "[" + variant_string(variant_) + "]";
}

namespace detail {
namespace {

using std::numbers::pi;

// ---------------------------------------------------------------- G1

class G1 final : public FamilyBase<G1> {
public:
    G1(std::string id, ParamSet p, VariantChoice v, int branch)
        : FamilyBase(std::move(id), std::move(p), std::move(v)), branch_(branch) {
        a = param("alpha"), A = param("A_o"), R0 = param("R_o"), W0 = param("W_o");
        U = param("U_o"), X = param("X_o"), th0 = param("theta_o"), g = gamma();
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-1, 1}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)x, (void)y;
        const T lt = log(t);
        T lnR, W;
        if (branch_ == 1) {
            lnR = std::log(R0) + (4 * a * a * A - 1) * lt - 2 * a * W0 / t - 2 * a * a * X * X * (1 + lt) / t;
            W = W0 + 2 * a * A * t / (2 - g) + a * X * X * lt;
        } else if (branch_ == 2) {
            lnR = std::log(R0) - lt - 2 * a * W0 / t - 2 * a * a * (2 * A + X * X) * (1 + lt) / t;
            W = W0 + a * (2 * A + X * X) * lt;
        } else {
            lnR = std::log(R0) - lt - 2 * a * W0 / t - 2 * a * a * X * X * (1 + lt) / t +
                  4 * a * a * A * pow(t, 1 - g) / ((2 - g) * (1 - g));
            W = W0 + 2 * a * A * pow(t, 2 - g) / (2 - g) + a * X * X * lt;
        }
        FS<T> s;
        s.rho = exp(2 * a * z / t + lnR);
        s.p = A * pow(t, 1 - g) * s.rho;
        const T ph = (std::log(th0) - lt - lnR) / (2 * a) - z / t;
        const T sn = sin(ph), cs = cos(ph);
        s.v = {U * sn, U * cs, z / t - W / t};
        const T amp = X * sqrt(s.rho / t);
        s.B = {amp * sn, amp * cs, T(0.0)};
        return s;
    }

private:
    int branch_;
    double a, A, R0, W0, U, X, th0, g;
};

// ---------------------------------------------------------------- G2

class G2 final : public FamilyBase<G2> {
public:
    enum Branch { three_halves, two, generic };
    G2(std::string id, ParamSet p, VariantChoice v, Branch b) : FamilyBase(std::move(id), std::move(p), std::move(v)), b_(b) {
        a1 = param("alpha1"), a2 = param("alpha2"), A = param("A_o"), R0 = param("R_o"), W0 = param("W_o");
        U = param("U_o"), X = param("X_o"), th0 = param("theta_o"), g = gamma();
        corrected_ = variant_is("form", "corrected");
        if (b_ == generic) {
            Rint0_ = param("R_int0");
            G1_ = generic_terms(1.0)[3];
        }
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const T Tt = t + a1;
        T W, Rx;
        if (b_ == three_halves) {
            const T u = sqrt(1 + t / a1);
            const T art = artanh_real(u);
            W = -2 * art / std::sqrt(a1);
            const T sT = sqrt(Tt), sa = std::sqrt(a1);
            const T lnRp = (2 * a2 * a2 * A / std::pow(a1, 1.5)) * log((sT - sa) / (sT + sa)) +
                           4 * a2 * a2 * A / (a1 * sT) + 4 * a2 * a2 * A * art / (sa * Tt);
            Rx = corrected_ ? 2 * lnRp : exp(lnRp);
        } else if (b_ == two) {
            const T l = log(1 + a1 / t);
            W = l / (a1 * a1) - 1 / (a1 * t);
            const T lnRp = 8 * a2 * a2 * A * l / (a1 * a1 * a1) - 4 * a2 * a2 * A * (2 + l) / (a1 * a1 * Tt);
            Rx = corrected_ ? lnRp : exp(lnRp);
        } else {
            const auto w = generic_terms(value_of(t));
            W = lift(t, w[0], w[1], w[2]);
            // G' = W / T^2, G'' = W'/T^2 - 2 W / T^3
            const double Tv = value_of(t) + a1;
            const T G = lift(t, w[3], w[0] / (Tv * Tv), w[1] / (Tv * Tv) - 2 * w[0] / (Tv * Tv * Tv));
            Rx = corrected_ ? 4 * a2 * a2 * A * (G - G1_) + Rint0_ : G - G1_ + Rint0_;
        }
        const T E = (5 * a1 + W0 - 2 * a2 * z) / Tt;
        const T lT = log(Tt);
        const T L = 2 * a2 * a2 * X * X * (1 + lT) / Tt;
        FS<T> s;
        s.rho = R0 / (t * t * Tt) * exp(Rx - E - L);
        s.p = A * pow(t * t * Tt, 1 - g) * s.rho;
        const T th = th0 - Rx / (2 * a2) + E / (2 * a2) + a2 * X * X * (1 + lT) / Tt;
        const T sn = sin(th), cs = cos(th);
        s.v[0] = x / t - U * sn / t;
        s.v[1] = y / t - U * cs / t;
        if (corrected_)
            s.v[2] = (z - 2 * a2 * A * W - a2 * X * X * lT - (5 * a1 + W0) / (2 * a2)) / Tt;
        else
            s.v[2] = z / Tt - 2 * a2 * W / Tt - A * a2 * X * X * lT / Tt - (5 * a1 + W0) / (2 * a2 * Tt);
        const T amp = X * sqrt(s.rho) / sqrt(Tt);
        s.B = {amp * sn, amp * cs, T(0.0)};
        return s;
    }

private:
    // W, W', W'', G at t for the hypergeometric branch
    std::array<double, 4> generic_terms(double t) const {
        const double z = -t / a1;
        const double e3 = 3 - 2 * g, e4 = 4 - 2 * g;
        const double F3 = hyp2f1(e3, g, e3 + 1, z), F4 = hyp2f1(e4, g, e4 + 1, z);
        const double T = t + a1;
        const double W = std::pow(a1, 1 - g) * std::pow(t, e3) / e3 * F3 + std::pow(a1, -g) * std::pow(t, e4) / e4 * F4;
        const double W1 = std::pow(t, 2 - 2 * g) * std::pow(T, 1 - g);
        const double W2 = W1 * ((2 - 2 * g) / t + (1 - g) / T);
        const double G = -W / T + std::pow(a1, -g) * std::pow(t, e3) / e3 * F3;
        return {W, W1, W2, G};
    }

    Branch b_;
    bool corrected_ = false;
    double a1, a2, A, R0, W0, U, X, th0, g;
    double Rint0_ = 0.0, G1_ = 0.0;
};

// ---------------------------------------------------------------- G3 cases

class G3Case final : public FamilyBase<G3Case> {
public:
    G3Case(std::string id, ParamSet p, VariantChoice v, int which)
        : FamilyBase(std::move(id), std::move(p), std::move(v)), c_(which) {
        const auto& q = params();
        auto get = [&](const char* k) { return q.count(k) ? q.at(k) : 0.0; };
        a1 = c_ == 2 || c_ == 3 ? 1.0 : get("alpha1");
        a2 = c_ == 1 ? a1 + 1 : get("alpha2");
        R0 = get("R_o"), A = get("A_o"), X = get("X_o");
        U = get("U_o"), C2 = get("C_2"), th0 = get("theta_o");
        corrected_ = variant_is("form", "corrected");
        if (c_ == 4)
            C1 = (2 * a1 - 1) / a1;
        else if (c_ == 5)
            C1 = (4 * a1 - 2) / (3 * a1);
        else
            C1 = 1.0;
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        if (!(W(q.t, q.z) > 0)) return fail("W > 0");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (W(q.t, q.z) < 0.3) return fail("W >= 0.3");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-1, 1}}; }

    template <class T>
    T W(const T& t, const T& z) const {
        return C1 * (log(t) / a1 + z) + C2;
    }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const T w = W(t, z);
        const T lt = log(t), lw = log(w);
        FS<T> s;
        T th, Bamp;
        switch (c_) {
        case 1: {
            th = th0 - (lw - lt) / a1;
            s.rho = R0 * exp(-2 / a1 * lt + (2 - 3 * a1) / a1 * lw);
            const double pamp = corrected_ ? R0 / (2 * (a1 - 1)) - X * X / 2 : R0 / (2 * (a1 - 1));
            s.p = pamp * exp(-2 * (a1 + 1) / a1 * lt + 2 * (1 - a1) / a1 * lw);
            Bamp = X * exp(-(a1 + 1) / a1 * lt);
            if (corrected_) Bamp = Bamp * exp((1 - a1) / a1 * lw);
            break;
        }
        case 2:
            th = th0 - (lw - lt);
            s.rho = R0 * exp(2 * (1 - a2) * lt + (2 * a2 - 5) * lw);
            s.p = A * exp(-2 * a2 * lt);
            Bamp = std::sqrt(R0 / (2 - a2)) * exp(-a2 * lt + (a2 - 2) * lw);
            break;
        case 3:
            th = th0 - (lw - lt);
            s.rho = (2 - a2) * (2 * A + X * X) * exp(2 * (1 - a2) * lt + (2 * a2 - 5) * lw);
            s.p = A * exp(-2 * a2 * lt + (2 * a2 - 4) * lw);
            Bamp = X * exp(-a2 * lt + (a2 - 2) * lw);
            break;
        case 4:
            th = th0 + lt / a1 + lw / (1 - 2 * a1);
            s.rho = R0 * exp(2 * (a1 - a2) / a1 * lt + (2 * a2 - 6 * a1 + 1) / (2 * a1 - 1) * lw);
            s.p = (1 - a1) * R0 / (2 * (a2 - a1) - 1) *
                  exp(-2 * a2 / a1 * lt + (2 * a2 - 2 * a1 - 1) / (2 * a1 - 1) * lw);
            Bamp = std::sqrt(R0 / (2 * a1 - a2)) * exp(-a2 / a1 * lt + (a2 - 2 * a1) / (2 * a1 - 1) * lw);
            break;
        default:
            th = th0 + lt / a1 + 3 * lw / (2 - 4 * a1);
            s.rho = R0 * exp(2 * (a1 - a2) / a1 * lt + (3 * a2 - 8 * a1 + 1) / (2 * a1 - 1) * lw);
            s.p = R0 / (2 * (2 * a1 - a2)) * exp(-2 * a2 / a1 * lt + 3 * (a2 - 2 * a1) / (2 * a1 - 1) * lw);
            Bamp = std::sqrt((a1 - 2) * R0 / (4 * a1 - 3 * a2 + 1)) *
                   exp(-a2 / a1 * lt + (3 * a2 - 4 * a1 - 1) / (4 * a1 - 2) * lw);
            break;
        }
        const T sn = sin(th), cs = cos(th);
        s.v = {x / t - U * sn / t, y / t - U * cs / t, (w - 1 / a1) / t};
        s.B = {Bamp * sn, Bamp * cs, T(0.0)};
        return s;
    }

private:
    int c_;
    bool corrected_ = false;
    double a1, a2, R0, A, X, U, C2, th0, C1;
};

// ---------------------------------------------------------------- G4

class G4 final : public FamilyBase<G4> {
public:
    G4(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        a1 = param("alpha1"), c = param("c_o"), A = param("A_o"), W0 = param("W_o");
        Y = param("Y_o"), Z = param("Z_o"), R0 = param("R_o"), Ramp = param("R_amp");
        int_power_ = a1 == std::round(a1);
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.x > 0)) return fail("x > 0 (real power of x)");
        if (q.y == 0) return fail("y != 0");
        const double sn = std::sin(c * std::atan2(q.y, q.x));
        if (sn == 0) return fail("y != x tan(k pi / c_o)");
        if (!int_power_ && sn < 0) return fail("sin(c_o theta) > 0 (real power)");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (q.x < 0.3 || std::abs(q.y) < 0.3) return fail("x, |y| >= 0.3");
        if (std::abs(std::sin(c * std::atan2(q.y, q.x))) < 0.2) return fail("|sin(c_o theta)| >= 0.2");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0, 1}, {0.3, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)t, (void)z;
        const T th = atan2(y, x);
        const T r2 = x * x + y * y;
        const T sn = sin(c * th), cs = cos(c * th);
        const T cot = cs / sn;
        FS<T> s;
        s.rho = pow(x, -2 * (1 + a1)) * R0 * (1 + Ramp * sin(x / y));
        s.p = A - (c * c * Y * Y + Z * Z) / (2 * r2 * sn * sn);
        const T snp = int_power_ ? pow_int(sn) : pow(sn, a1);
        s.v = {T(0.0), T(0.0), W0 * pow(r2, a1 / 2) * snp};
        s.B = {c * Y * x * cot / r2 + Y * y / r2, c * Y * y * cot / r2 - Y * x / r2, Z / (sqrt(r2) * sn)};
        return s;
    }

private:
    template <class T>
    T pow_int(const T& b) const {
        const int n = static_cast<int>(a1);
        T r(1.0);
        for (int i = 0; i < std::abs(n); ++i) r = r * b;
        return n < 0 ? 1.0 / r : r;
    }
    bool int_power_;
    double a1, c, A, W0, Y, Z, R0, Ramp;
};

// ---------------------------------------------------------------- G6, alpha2 = 0

class G6Zero final : public FamilyBase<G6Zero> {
public:
    G6Zero(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        a1 = param("alpha1"), A = param("A_o"), W0 = param("W_o"), X = param("X_o"), Z = param("Z_o");
        R0 = param("R_o"), Ramp = param("R_amp"), Y0 = param("Y_o");
        k = a1 * a1 + 1;
        ev_ = variant_is("form", "corrected") ? a1 * a1 / k : a1 / k;
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (q.x == 0 && q.y == 0) return fail("r > 0");
        if (q.y == 0 && q.x < 0) return fail("phi != pi (branch cut of the spiral angle)");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (std::hypot(q.x, q.y) < 0.3) return fail("r >= 0.3");
        if (near_branch_cut(q.x, q.y, 0.3)) return fail("|phi| <= pi - 0.3");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0, 1}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)t, (void)z;
        const T r = sqrt(x * x + y * y);
        const T ph = atan2(y, x);
        const T lr = log(r);
        const T Yv = Y0 + (a1 / k) * lr - (a1 * a1 / k) * ph;
        const T s_ = r * exp(-a1 * ph);
        const T cY = cos(Yv), sY = sin(Yv);
        const T cph = x / r, sph = y / r;
        FS<T> s;
        s.rho = exp(-2 * a1 * ph) * R0 * (1 + Ramp * sin(s_));
        s.p = T(A);
        s.v = {T(0.0), T(0.0), W0 * exp(ev_ * lr + a1 * ph / k) * (a1 * sY - cY)};
        const T amp = X * exp(-lr / k + a1 * ph / k);
        auto bxy = polar_to_cart(amp * cY, amp * sY, cph, sph);
        s.B = {bxy[0], bxy[1], T(Z)};
        return s;
    }

private:
    double a1, A, W0, X, Z, R0, Ramp, Y0, k, ev_;
};

// ---------------------------------------------------------------- G7

class G7 final : public FamilyBase<G7> {
public:
    G7(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        rho0 = param("rho_o"), p0 = param("p_o"), E = param("E_o"), d = param("delta_o");
        ph0 = param("phi_o"), Z = param("Z_o"), W0 = param("W_o"), V0 = param("V_o");
        sq = std::sqrt(rho0);
        Zt = std::sqrt(std::max(0.0, E * E - rho0 * d * d));
        principal_ = variant_is("branch", "principal");
    }

    std::optional<std::string> domain_violation(const SpacetimePoint&) const override { return std::nullopt; }
    SampleBox sample_box() const override { return {{0, 10}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)x, (void)y;
        const T sarg = ph0 - 2 * Z * t / sq;
        const T ssin = sin(sarg);
        const T U = sqrt(E - Zt * ssin), Xf = sqrt(E + Zt * ssin);
        const T psi = ph0 / 2 - Z * t / sq;
        const double a = E / (sq * d), b = Zt / (sq * d);
        T V, Yp;
        if (principal_) {
            V = V0 + W0 * t + atan(a * tan(psi) - b);
            Yp = V + acos(sq * d / (U * Xf));
        } else {
            const double k = std::floor((value_of(psi) + pi / 2) / pi);
            const T ps = psi - k * pi;
            V = V0 + W0 * t + atan2(a * sin(ps) - b * cos(ps), cos(ps)) + (d > 0 ? 1.0 : -1.0) * k * pi;
            Yp = V + atan(Zt * cos(sarg) / (sq * d)) + (d < 0 ? pi : 0.0);
        }
        FS<T> s;
        s.rho = T(rho0);
        s.p = T(p0);
        s.v = {U / sq * sin(V - z), U / sq * cos(V - z), T(W0)};
        s.B = {Xf * sin(Yp - z), Xf * cos(Yp - z), T(Z)};
        return s;
    }

    // U and X at time t (the conserved combination U^2 + X^2 = 2 E_o)
    std::pair<double, double> amplitudes(double t) const {
        const double ssin = std::sin(ph0 - 2 * Z * t / sq);
        return {std::sqrt(E - Zt * ssin), std::sqrt(E + Zt * ssin)};
    }

private:
    bool principal_ = false;
    double rho0, p0, E, d, ph0, Z, W0, V0, sq, Zt;
};

// ---------------------------------------------------------------- G8

class G8 final : public FamilyBase<G8> {
public:
    G8(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        al = param("alpha"), be = param("beta"), A = param("A_o"), W = param("W_o"), U = param("U_o");
        V = param("V_o"), X = param("X_o"), Y = param("Y_o"), Z = param("Z_o"), R0 = param("R_o"), g = gamma();
    }

    double Rt(double t) const { return be * W * t * t - (W + be * U + al * V) * t + R0; }
    double L(const SpacetimePoint& q) const { return al * (be * q.x - q.y) + (1 - be * q.t) * q.z; }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (L(q) == 0) return fail("t != [z + alpha(beta x - y)]/(beta z) (stagnation)");
        if (!(Rt(q.t) > 0)) return fail("R(t) > 0");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (std::abs(L(q)) < 0.2) return fail("|alpha(beta x - y) + (1 - beta t) z| >= 0.2");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0, 3}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const T R = be * W * t * t - (W + be * U + al * V) * t + R0;
        const T Lv = al * (be * x - y) + (1 - be * t) * z;
        FS<T> s;
        s.rho = R / (Lv * Lv);
        s.p = A * pow(R, -g);
        s.v = {z / al + (W * t - U) * Lv / (al * R), V * Lv / R, -W * Lv / R};
        s.B = {(Z * t + al * X) / (al * R), Y / R, Z / R};
        return s;
    }

    ParamSet derived_constants() const override {
        return {{"induction_compatibility", al * be * X - al * Y + Z}};
    }

private:
    double al, be, A, W, U, V, X, Y, Z, R0, g;
};

// ---------------------------------------------------------------- G9

class G9 final : public FamilyBase<G9> {
public:
    G9(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        al = param("alpha"), be = param("beta"), C2 = param("C_2"), C3 = param("C_3");
        V = param("V_o"), Y = param("Y_o"), Z = param("Z_o");
        K = Y * Y + (1 + be * be) * Z * Z;
        P = variant_is("form", "corrected") ? al : 2 * al;
    }

    double xi(const SpacetimePoint& q) const {
        return C2 - be / 2 * std::log(q.t) - (q.x - be * q.z) / (2 * q.t);
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        if (!(xi(q) > 0)) return fail("xi > 0");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (xi(q) < 0.3) return fail("xi >= 0.3");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)y;
        const T lt = log(t);
        const T w = x - be * z;
        const T xv = C2 - be / 2 * lt - w / (2 * t);
        const T lx = log(xv);
        const double b2 = 1 + be * be;
        FS<T> s;
        s.rho = -(2 * al + 1) * b2 * K / (2 * be) * exp(2 * al * lt + (4 * al + 1) * lx);
        s.p = -(2 * al + 1) * K / (2 * be * (4 * al + 3)) * exp(2 * al * lt + (4 * al + 3) * lx);
        s.v[0] = 2 * be * (lt / 4 + lx) / b2 + w / (2 * b2 * t) + (C2 + be * (C3 - 1)) / b2;
        s.v[1] = T(V);
        s.v[2] = 2 * ((2 + be * be) * lt / 4 + lx) / b2 - be * w / (2 * b2 * t) + (C3 + be * (be - C2)) / b2;
        const T amp = exp(P * lt + (2 * al + 1) * lx);
        s.B = {be * Z * amp, Y * amp, Z * amp};
        return s;
    }

private:
    double al, be, C2, C3, V, Y, Z, K, P;
};

// ---------------------------------------------------------------- G10

class G10Case1 final : public FamilyBase<G10Case1> {
public:
    G10Case1(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        R0 = param("R_o"), A = param("A_o"), C2 = param("C_2"), U = param("U_o"), V = param("V_o");
        X = param("X_o"), Y = param("Y_o"), Z = param("Z_o");
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        if (!(q.z > -C2)) return fail("z > -C_2");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (q.z + C2 < 0.3) return fail("z + C_2 >= 0.3");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        FS<T> s;
        const T w = z + C2;
        s.rho = R0 / (t * t * w);
        s.p = A / (t * t * t * t);
        s.v = {(x - U) / t + Z * X / (R0 * t), (y - V) / t + Z * Y / (R0 * t), w / t};
        const T it2 = 1 / (t * t);
        s.B = {X * it2, Y * it2, Z * it2};
        return s;
    }

private:
    double R0, A, C2, U, V, X, Y, Z;
};

class G10Case2 final : public FamilyBase<G10Case2> {
public:
    G10Case2(std::string id, ParamSet p, VariantChoice v) : FamilyBase(std::move(id), std::move(p), std::move(v)) {
        A = param("A_o"), C2 = param("C_2"), U = param("U_o"), V = param("V_o");
        X = param("X_o"), Y = param("Y_o"), Z = param("Z_o");
        S = X * X + Y * Y;
        a2 = Z * Z / (2 * A + S);
    }

    double w(double z) const { return 2 * z / 3 + C2; }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        if (!(w(q.z) > a2)) return fail("z > 3(a_o^2 - C_2)/2");
        return std::nullopt;
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (w(q.z) - a2 < 0.1) return fail("2z/3 + C_2 - a_o^2 >= 0.1");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {-2, 2}}; }
    ParamSet derived_constants() const override { return {{"a_o^2", a2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const T wv = 2 * z / 3 + C2;
        const T q = sqrt(wv - a2);
        FS<T> s;
        s.rho = (2 * A + S) / (t * t * wv);
        s.p = A * wv / (t * t * t * t);
        s.v = {(x - U) / t + a2 * X * q / (Z * t), (y - V) / t + a2 * Y * q / (Z * t), wv / t};
        const T it2 = 1 / (t * t);
        s.B = {X * q * it2, Y * q * it2, Z * it2};
        return s;
    }

private:
    double A, C2, U, V, X, Y, Z, S, a2;
};

// ---------------------------------------------------------------- metadata

std::vector<FamilyMetadata> build_metadata() {
    const std::string fast = "magnetoacoustic fast wave F";
    std::vector<FamilyMetadata> m;
    for (const char* id : {"G1/gamma=1", "G1/gamma=2", "G1/gamma=generic", "G2/gamma=3/2", "G2/gamma=2",
                           "G2/gamma=generic", "G3/case2", "G3/case3", "G3/case4", "G3/case5", "G3/general"})
        m.push_back({id, "planar", false, true, fast, "pressure-only", true});
    m.push_back({"G3/case1", "planar", false, true, fast, "none", true});
    m.push_back({"G4", "full", true, false, "double entropic wave E1E1", "mixed", true});
    m.push_back({"G5", "full", true, false, "entropic wave E1", "mixed", true});
    m.push_back({"G6", "full", true, false, "entropic wave E1", "mixed", true});
    m.push_back({"G6/alpha2=0", "full", true, false, "entropic wave E1", "force-free", true});
    m.push_back({"G7", "full", false, false, "double Alfvén-entropic wave AE1", "tension-only", false});
    m.push_back({"G8", "full", false, true, "", "force-free", true});
    m.push_back({"G9", "full", false, true, "double magnetoacoustic wave FF", "pressure-only", true});
    m.push_back({"G10/case1", "full", false, true, "", "force-free", true});
    m.push_back({"G10/case2", "full", false, true, "compressional Alfvén wave", "mixed", false});
    m.push_back({"G10/general", "full", false, true, "compressional Alfvén wave", "mixed", false});
    return m;
}

}  // namespace
}  // namespace detail

FamilyPtr make_family(std::string_view id_view, const ParamSet& raw, std::string_view variant, const MhdConfig& cfg) {
    using namespace detail;
    const auto& d = family_descriptor(id_view);
    ParamSet p = validate_params(d.id, raw, cfg);
    VariantChoice v = resolve_variant(d.id, variant);
    const std::string& id = d.id;
    if (d.kind == "reduced") return make_reduced_family(id, p, v, cfg);
    if (id == "G1/gamma=1") return std::make_shared<G1>(id, p, v, 1);
    if (id == "G1/gamma=2") return std::make_shared<G1>(id, p, v, 2);
    if (id == "G1/gamma=generic") return std::make_shared<G1>(id, p, v, 0);
    if (id == "G2/gamma=3/2") return std::make_shared<G2>(id, p, v, G2::three_halves);
    if (id == "G2/gamma=2") return std::make_shared<G2>(id, p, v, G2::two);
    if (id == "G2/gamma=generic") return std::make_shared<G2>(id, p, v, G2::generic);
    if (id.rfind("G3/case", 0) == 0) return std::make_shared<G3Case>(id, p, v, id.back() - '0');
    if (id == "G4") return std::make_shared<G4>(id, p, v);
    if (id == "G6/alpha2=0") return std::make_shared<G6Zero>(id, p, v);
    if (id == "G7") return std::make_shared<G7>(id, p, v);
    if (id == "G8") return std::make_shared<G8>(id, p, v);
    if (id == "G9") return std::make_shared<G9>(id, p, v);
    if (id == "G10/case1") return std::make_shared<G10Case1>(id, p, v);
    if (id == "G10/case2") return std::make_shared<G10Case2>(id, p, v);
    throw UnknownFamily(id);
}

const FamilyMetadata& family_metadata(std::string_view id) {
    static const std::vector<FamilyMetadata> all = detail::build_metadata();
    for (const auto& m : all)
        if (m.id == id) return m;
    throw UnknownFamily(std::string(id));
}

std::vector<std::string> closed_form_ids() {
    std::vector<std::string> out;
    for (const auto& d : family_catalog())
        if (d.kind == "closed") out.push_back(d.id);
    return out;
}

double uniform01(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

std::vector<SpacetimePoint> sample_points(const SolutionFamily& family, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const SampleBox b = family.sample_box();
    auto draw = [&](const std::array<double, 2>& r) { return r[0] + (r[1] - r[0]) * uniform01(rng()); };
    std::vector<SpacetimePoint> out;
    out.reserve(n);
    std::size_t tries = 0;
    while (out.size() < n) {
        if (++tries > 1000 * n + 1000)
            throw DomainError("sampling box of " + family.name() + " hardly intersects its domain");
        SpacetimePoint q;
        q.t = draw(b.t);
        q.x = draw(b.x);
        q.y = draw(b.y);
        q.z = draw(b.z);
        if (!family.sampling_violation(q)) out.push_back(q);
    }
    return out;
}

}  // namespace mhdlab
