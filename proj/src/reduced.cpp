#include "mhdlab/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <type_traits>

#include "family_impl.hpp"

namespace mhdlab {

using std::numbers::pi;

// ---------------------------------------------------------------- profile

ReducedProfile::ReducedProfile(std::string system, std::vector<std::string> columns, OdeRhs f, JetRhs fj,
                               const OdeSolution& sol)
    : system_(std::move(system)), columns_(std::move(columns)), f_(std::move(f)), fj_(std::move(fj)),
      s_(sol.t), y_(sol.y), err_(sol.local_error) {
    if (s_.size() < 2) throw OdeError("profile needs at least one step");
    dy_.resize(y_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) {
        dy_[i].resize(y_[i].size());
        f_(s_[i], y_[i], dy_[i]);
    }
    double acc = 0.0;
    for (double e : err_) acc += e;
    // Hermite interpolant against the integrator's own dense output
    double herm = 0.0;
    for (std::size_t i = 0; i + 1 < s_.size(); ++i) {
        for (double th : {0.25, 0.5, 0.75}) {
            const double s = s_[i] + th * (s_[i + 1] - s_[i]);
            const State d = sol.at(s);
            const State h = sample(s).value;
            for (std::size_t k = 0; k < d.size(); ++k) herm = std::max(herm, std::abs(d[k] - h[k]));
        }
    }
    error_estimate_ = acc + herm;
}

ReducedProfile::Sample ReducedProfile::sample(double s) const {
    if (!contains(s)) throw DomainError("s inside the profile span [" + std::to_string(s_min()) + ", " +
                                       std::to_string(s_max()) + "]");
    std::size_t i = static_cast<std::size_t>(std::upper_bound(s_.begin(), s_.end(), s) - s_.begin());
    if (i >= s_.size()) i = s_.size() - 1;
    if (i == 0) i = 1;
    --i;
    const double h = s_[i + 1] - s_[i];
    const double th = (s - s_[i]) / h, th2 = th * th, th3 = th2 * th;
    const double h00 = 2 * th3 - 3 * th2 + 1, h10 = th3 - 2 * th2 + th, h01 = -2 * th3 + 3 * th2, h11 = th3 - th2;
    const std::size_t n = y_[i].size();
    Sample out;
    out.value.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.value[k] = h00 * y_[i][k] + h10 * h * dy_[i][k] + h01 * y_[i + 1][k] + h11 * h * dy_[i + 1][k];
    out.d1.resize(n);
    f_(s, out.value, out.d1);
    // second derivative: push (s, y(s)) through the right-hand side as a jet in slot 0
    JetState yj(n), dj(n);
    for (std::size_t k = 0; k < n; ++k) {
        yj[k] = Jet2(out.value[k]);
        yj[k].g[0] = out.d1[k];
    }
    fj_(Jet2::variable(s, 0), yj, dj);
    out.d2.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.d2[k] = dj[k].g[0];
    return out;
}

JetState ReducedProfile::lift_state(const Jet2& s) const {
    const Sample q = sample(s.v);
    JetState out(q.value.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = lift(s, q.value[k], q.d1[k], q.d2[k]);
    return out;
}

std::string ReducedProfile::to_csv() const {
    std::string out = "s";
    for (const auto& c : columns_) out += "," + c;
    out += ",local_error\n";
    char buf[64];
    for (std::size_t i = 0; i < s_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", s_[i]);
        out += buf;
        for (double v : y_[i]) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out += buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g\n", err_[i]);
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------- systems

namespace {

double get(const ParamSet& p, const char* k) {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument(std::string("missing parameter ") + k);
    return it->second;
}

struct G5Sys {
    double a2, beta;
    template <class T>
    void operator()(const T& r, const T* y, T* dy) const {
        const T c = cos(y[0]);
        dy[0] = a2 * (beta * r * r * c * c + 1) / r;
        dy[1] = tan(y[0]) / r;
    }
};

struct G6Sys {
    double a1, a2, beta;
    template <class T>
    void operator()(const T& s, const T* y, T* dy) const {
        const T c = cos(y[0]), sn = sin(y[0]);
        const T D = c - a1 * sn;
        const double k = 1 + a1 * a1;
        dy[0] = (a2 * beta * D * D * exp(2 * y[1]) / k + (a1 + a2) / k) / s;
        dy[1] = c / (D * s);
        dy[2] = sn / (D * s);
    }
};

struct G3Sys {
    double a1, a2, A, R, X, g;
    bool corrected;
    template <class T>
    std::array<T, 2> parts(const T* y) const {  // coefficient of W', remainder
        const T& W = y[0];
        const T& F = y[1];
        const T W3 = W * W * W;
        const T aterm = (A / R) * pow(W, 2 - g) * exp(2 * (2 - g) * F);
        const T emag = corrected ? exp(2 * F) : exp((4 - 2 / a1) * F);
        const double m = corrected ? 1 - a2 / a1 : (1 - a2) / a1;
        const T coef = W3 - g * aterm - (X * X / R) * emag;
        const T rest = W3 - W * W / a1 + 2 * (g - a2 / a1) * aterm + (X * X / R) * m * emag;
        return {coef, rest};
    }
    template <class T>
    void operator()(const T&, const T* y, T* dy) const {
        const auto pr = parts(y);
        dy[0] = pr[1] / pr[0];
        dy[1] = 1 / y[0];
    }
};

struct G10Sys {
    double R, A, S, a2, g;
    template <class T>
    std::array<T, 2> parts(const T* y) const {
        const T& W = y[0];
        const T q = W - a2;
        const T aterm = (A / R) * pow(W, -g) * exp(2 * (2 - g) * y[1]);
        const T c2 = S * W * exp(2 * y[2]) / (R * q * q * q);
        return {W - g * aterm - c2, W - 2 * (2 - g) * aterm - c2};
    }
    template <class T>
    void operator()(const T&, const T* y, T* dy) const {
        const auto pr = parts(y);
        dy[0] = pr[1] / pr[0];
        dy[1] = 1 / y[0];
        dy[2] = 1 / (y[0] - a2);
    }
};

template <class Sys>
std::pair<OdeRhs, JetRhs> wrap(const Sys& sys) {
    OdeRhs f = [sys](double s, const State& y, State& dy) { sys(s, y.data(), dy.data()); };
    JetRhs fj = [sys](const Jet2& s, const JetState& y, JetState& dy) { sys(s, y.data(), dy.data()); };
    return {f, fj};
}

OdeOptions options(double tol, Span span) {
    OdeOptions o;
    o.rtol = tol;
    o.atol = tol;
    o.hmax = (span.b - span.a) / 16;  // keeps the Hermite grid from getting too coarse
    return o;
}

ProfilePtr finish(std::string name, std::vector<std::string> cols, std::pair<OdeRhs, JetRhs> fs, const OdeSolution& sol,
                  Span span) {
    if (!sol.reached(span.b))
        throw ProfileEvent(sol.event ? *sol.event : std::string("integration stopped"), sol.event_t);
    return std::make_shared<const ReducedProfile>(std::move(name), std::move(cols), fs.first, fs.second, sol);
}

void check_span(Span sp, bool positive) {
    if (!(sp.a < sp.b)) throw std::invalid_argument("empty span");
    if (positive && !(sp.a > 0)) throw std::invalid_argument("span must lie in (0, inf)");
}

}  // namespace

double beta_o(const ParamSet& p) {
    const double X = get(p, "X_o");
    return (2 * get(p, "A_o") + get(p, "Z_o") * get(p, "Z_o")) / (X * X);
}

ProfilePtr solve_g5(const ParamSet& p, Span sp, double Y0, double tol) {
    check_span(sp, true);
    if (std::abs(std::cos(Y0)) < 1e-6) throw std::invalid_argument("Y0 = (2k+1) pi/2");
    G5Sys sys{get(p, "alpha2"), beta_o(p)};
    auto fs = wrap(sys);
    OdeOptions o = options(tol, sp);
    o.event = [](double, const State& y) -> std::optional<std::string> {
        if (std::abs(std::cos(y[0])) < 1e-6) return "Y reached (2k+1) pi/2";
        return std::nullopt;
    };
    return finish("G5", {"Y", "theta"}, fs, integrate(fs.first, sp.a, {Y0, 0.0}, sp.b, o), sp);
}

ProfilePtr solve_g6(const ParamSet& p, Span sp, double Y0, double tol) {
    check_span(sp, true);
    const double a1 = get(p, "alpha1");
    if (std::abs(std::cos(Y0) - a1 * std::sin(Y0)) < 1e-6) throw std::invalid_argument("Y0 = arctan(1/alpha1) + k pi");
    const double a2 = p.count("alpha2") ? p.at("alpha2") : 0.0;
    G6Sys sys{a1, a2, a2 == 0.0 ? 0.0 : beta_o(p)};
    auto fs = wrap(sys);
    OdeOptions o = options(tol, sp);
    o.event = [a1](double, const State& y) -> std::optional<std::string> {
        if (std::abs(std::cos(y[0]) - a1 * std::sin(y[0])) < 1e-6) return "cos Y - alpha1 sin Y reached 0";
        return std::nullopt;
    };
    return finish("G6", {"Y", "theta1", "theta2"}, fs, integrate(fs.first, sp.a, {Y0, 0.0, 0.0}, sp.b, o), sp);
}

ProfilePtr solve_g3_general(const ParamSet& p, Span sp, double W0, double tol, bool corrected) {
    check_span(sp, false);
    if (!(W0 > 0)) throw std::invalid_argument("W0 must be > 0");
    G3Sys sys{get(p, "alpha1"), get(p, "alpha2"), get(p, "A_o"), get(p, "R_o"), get(p, "X_o"), get(p, "gamma"),
              corrected};
    auto fs = wrap(sys);
    OdeOptions o = options(tol, sp);
    o.event = [sys](double, const State& y) -> std::optional<std::string> {
        if (!(y[0] > 0)) return "W reached 0";
        const auto pr = sys.parts(y.data());
        if (std::abs(pr[0]) < 1e-8 * (y[0] * y[0] * y[0])) return "coefficient of dW/ds vanished";
        return std::nullopt;
    };
    return finish(corrected ? "G3/general[corrected]" : "G3/general[printed]", {"W", "F"}, fs,
                  integrate(fs.first, sp.a, {W0, 0.0}, sp.b, o), sp);
}

ProfilePtr solve_g10_general(const ParamSet& p, Span sp, double W0, double tol) {
    check_span(sp, false);
    const double R = get(p, "R_o"), Z = get(p, "Z_o");
    const double a2 = Z * Z / R;
    if (std::abs(W0 - a2) < 1e-9) throw std::invalid_argument("W0 = a_o^2");
    G10Sys sys{R, get(p, "A_o"), get(p, "X_o") * get(p, "X_o") + get(p, "Y_o") * get(p, "Y_o"), a2, get(p, "gamma")};
    auto fs = wrap(sys);
    OdeOptions o = options(tol, sp);
    o.event = [sys](double, const State& y) -> std::optional<std::string> {
        if (!(y[0] > 0)) return "W reached 0";
        if (std::abs(y[0] - sys.a2) < 1e-6) return "W reached a_o^2 (Alfven resonance)";
        const auto pr = sys.parts(y.data());
        if (std::abs(pr[0]) < 1e-8 * std::abs(y[0])) return "coefficient of dW/dz vanished";
        return std::nullopt;
    };
    return finish("G10/general", {"W", "I1", "I2"}, fs, integrate(fs.first, sp.a, {W0, 0.0, 0.0}, sp.b, o), sp);
}

// ---------------------------------------------------------------- assembled fields

namespace detail {
namespace {

class Profiled : public SolutionFamily {
public:
    Profiled(std::string id, ParamSet p, VariantChoice v, ProfilePtr prof)
        : SolutionFamily(std::move(id), std::move(p), std::move(v)), prof_(std::move(prof)) {}
    const ProfilePtr& profile() const { return prof_; }

protected:
    template <class T>
    std::vector<T> state(const T& s) const {
        if constexpr (std::is_same_v<T, double>)
            return prof_->sample(s).value;
        else
            return prof_->lift_state(s);
    }
    // keep samples a little inside the profile ends
    bool inside(double s, double margin_frac) const {
        const double m = margin_frac * (prof_->s_max() - prof_->s_min());
        return s > prof_->s_min() + m && s < prof_->s_max() - m;
    }
    std::optional<std::string> span_violation(double s, const char* var) const {
        if (!prof_->contains(s)) return std::string(var) + " inside the profile span";
        return std::nullopt;
    }

private:
    ProfilePtr prof_;
};

enum class Rho { free, cyl_printed, cyl_corrected };

Rho rho_choice(const SolutionFamily& f) {
    if (f.variant_is("rho", "const-cyl-printed")) return Rho::cyl_printed;
    if (f.variant_is("rho", "const-cyl-corrected")) return Rho::cyl_corrected;
    return Rho::free;
}

class G5Field final : public FamilyBase<G5Field, Profiled> {
public:
    G5Field(std::string id, ParamSet p, VariantChoice v, ProfilePtr prof)
        : FamilyBase(std::move(id), std::move(p), std::move(v), std::move(prof)) {
        a1 = param("alpha1"), a2 = param("alpha2"), A = param("A_o"), W0 = param("W_o");
        X = param("X_o"), Z = param("Z_o"), R0 = param("R_o"), Ramp = param("R_amp");
        cz = variant_is("vz", "corrected-vz") ? a1 : a2;
        rho_ = rho_choice(*this);
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (q.y == 0 && q.x <= 0) return fail("phi in (-pi, pi) (off the branch cut and axis)");
        return span_violation(std::hypot(q.x, q.y), "r");
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (!inside(std::hypot(q.x, q.y), 0.02)) return fail("r away from the profile ends");
        if (near_branch_cut(q.x, q.y, 0.3)) return fail("|phi| <= pi - 0.3");
        return std::nullopt;
    }
    SampleBox sample_box() const override {
        const double b = profile()->s_max();
        return {{0, 1}, {-b, b}, {-b, b}, {-2, 2}};
    }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)t, (void)z;
        const T r = sqrt(x * x + y * y);
        const T ph = atan2(y, x);
        const auto st = state(r);
        const T& Y = st[0];
        const T& th = st[1];
        const T E = exp(a2 * ph - a2 * th);
        FS<T> s;
        s.p = A * E * E;
        switch (rho_) {
        case Rho::free: s.rho = exp(2 * (a2 - a1) * ph) * R0 * (1 + Ramp * sin(r)); break;
        case Rho::cyl_printed: s.rho = R0 * exp(2 * (a2 - a1) * ph - 2 * a2 * th); break;
        case Rho::cyl_corrected: s.rho = R0 * exp(2 * (a2 - a1) * (ph - th)); break;
        }
        s.v = {T(0.0), T(0.0), W0 * exp(a1 * ph - cz * th)};
        const T Br = X * E / r;
        auto bxy = polar_to_cart(Br, Br * tan(Y), x / r, y / r);
        s.B = {bxy[0], bxy[1], Z * E};
        return s;
    }

private:
    Rho rho_;
    double a1, a2, A, W0, X, Z, R0, Ramp, cz;
};

class G6Field final : public FamilyBase<G6Field, Profiled> {
public:
    G6Field(std::string id, ParamSet p, VariantChoice v, ProfilePtr prof)
        : FamilyBase(std::move(id), std::move(p), std::move(v), std::move(prof)) {
        a1 = param("alpha1"), a2 = param("alpha2"), A = param("A_o"), W0 = param("W_o");
        X = param("X_o"), Z = param("Z_o"), R0 = param("R_o"), Ramp = param("R_amp");
        cz = variant_is("vz", "corrected-vz") ? a1 : a2;
        expbz_ = variant_is("bz", "exp-Bz");
        rho_ = rho_choice(*this);
    }

    double s_of(const SpacetimePoint& q) const {
        return std::hypot(q.x, q.y) * std::exp(-a1 * std::atan2(q.y, q.x));
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (q.y == 0 && q.x <= 0) return fail("phi in (-pi, pi) (off the branch cut and axis)");
        return span_violation(s_of(q), "s = r exp(-alpha1 phi)");
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (!inside(s_of(q), 0.02)) return fail("s away from the profile ends");
        if (near_branch_cut(q.x, q.y, 0.3)) return fail("|phi| <= pi - 0.3");
        if (std::hypot(q.x, q.y) < 0.1) return fail("r >= 0.1");
        return std::nullopt;
    }
    SampleBox sample_box() const override { return {{0, 1}, {-3, 3}, {-3, 3}, {-2, 2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        (void)t, (void)z;
        const T r = sqrt(x * x + y * y);
        const T ph = atan2(y, x);
        const T sv = r * exp(-a1 * ph);
        const auto st = state(sv);
        const T &Y = st[0], &th1 = st[1], &th2 = st[2];
        const T cY = cos(Y), sY = sin(Y);
        const T D = cY - a1 * sY;
        const T E = exp(a2 * ph - th1 - a2 * th2);
        FS<T> s;
        s.p = A * exp(2 * a2 * ph - 2 * a2 * th2);
        switch (rho_) {
        case Rho::free: s.rho = exp(2 * (a2 - a1) * ph) * R0 * (1 + Ramp * sin(sv)); break;
        case Rho::cyl_printed: s.rho = R0 * exp(2 * (a2 - a1) * ph - 2 * a2 * th2); break;
        case Rho::cyl_corrected: s.rho = R0 * exp(2 * (a2 - a1) * (ph - th2)); break;
        }
        s.v = {T(0.0), T(0.0), W0 * exp(a1 * ph - cz * th2)};
        auto bxy = polar_to_cart(X * E * cY / D, X * E * sY / D, x / r, y / r);
        const T bz_arg = a2 * ph - a2 * th2;
        s.B = {bxy[0], bxy[1], expbz_ ? Z * exp(bz_arg) : Z * bz_arg};
        return s;
    }

private:
    Rho rho_;
    bool expbz_;
    double a1, a2, A, W0, X, Z, R0, Ramp, cz;
};

class G3General final : public FamilyBase<G3General, Profiled> {
public:
    G3General(std::string id, ParamSet p, VariantChoice v, ProfilePtr prof)
        : FamilyBase(std::move(id), std::move(p), std::move(v), std::move(prof)) {
        a1 = param("alpha1"), a2 = param("alpha2"), A = param("A_o"), R = param("R_o"), X = param("X_o");
        U = param("U_o"), th0 = param("theta_o"), g = gamma();
        const bool c = variant_is("form", "corrected");
        krho = c ? 2.0 : 1.0;
        kB = c ? a2 / a1 - 1 : (a2 - 1) / a1;
    }

    double s_of(const SpacetimePoint& q) const { return q.z + std::log(q.t) / a1; }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        return span_violation(s_of(q), "s = z + ln(t)/alpha1");
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (!inside(s_of(q), 0.02)) return fail("s away from the profile ends");
        return std::nullopt;
    }
    SampleBox sample_box() const override {
        const double sh = std::max(std::abs(std::log(0.5)), std::abs(std::log(3.0))) / std::abs(a1);
        return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {profile()->s_min() - sh, profile()->s_max() + sh}};
    }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const T lt = log(t);
        const auto st = state(z + lt / a1);
        const T &W = st[0], &F = st[1];
        FS<T> s;
        s.rho = (R / W) * exp(2 * (a1 - a2) / a1 * lt + 2 * (a2 / a1 - krho) * F);
        s.p = A * pow(W, -g) * exp(-2 * a2 / a1 * lt + 2 * (a2 / a1 - g) * F);
        const T th = th0 + lt / a1 - F / a1;
        const T sn = sin(th), cs = cos(th);
        s.v = {x / t - U * sn / t, y / t - U * cs / t, (W - 1 / a1) / t};
        const T amp = (X / W) * exp(-a2 / a1 * lt + kB * F);
        s.B = {amp * sn, amp * cs, T(0.0)};
        return s;
    }

private:
    double a1, a2, A, R, X, U, th0, g, krho, kB;
};

class G10General final : public FamilyBase<G10General, Profiled> {
public:
    G10General(std::string id, ParamSet p, VariantChoice v, ProfilePtr prof)
        : FamilyBase(std::move(id), std::move(p), std::move(v), std::move(prof)) {
        R = param("R_o"), A = param("A_o"), U = param("U_o"), V = param("V_o");
        X = param("X_o"), Y = param("Y_o"), Z = param("Z_o"), g = gamma();
        a2 = Z * Z / R;
    }

    std::optional<std::string> domain_violation(const SpacetimePoint& q) const override {
        if (!(q.t > 0)) return fail("t > 0");
        return span_violation(q.z, "z");
    }
    std::optional<std::string> sampling_violation(const SpacetimePoint& q) const override {
        if (auto d = domain_violation(q)) return d;
        if (!inside(q.z, 0.02)) return fail("z away from the profile ends");
        return std::nullopt;
    }
    SampleBox sample_box() const override {
        return {{0.5, 3.0}, {-2, 2}, {-2, 2}, {profile()->s_min(), profile()->s_max()}};
    }
    ParamSet derived_constants() const override { return {{"a_o^2", a2}}; }

    template <class T>
    FS<T> field(const T& t, const T& x, const T& y, const T& z) const {
        const auto st = state(z);
        const T &W = st[0], &I1 = st[1], &I2 = st[2];
        const T E2 = exp(I2) / (W - a2);
        const T it2 = 1 / (t * t);
        FS<T> s;
        s.rho = R * it2 / W;
        s.p = A * it2 * it2 * pow(W, -g) * exp(2 * (2 - g) * I1);
        s.v = {(x - U) / t + a2 * X * E2 / (Z * t), (y - V) / t + a2 * Y * E2 / (Z * t), W / t};
        s.B = {X * E2 * it2, Y * E2 * it2, Z * it2};
        return s;
    }

private:
    double R, A, U, V, X, Y, Z, g, a2;
};

}  // namespace
}  // namespace detail

FamilyPtr assemble_field(ProfilePtr prof, const std::string& id, const ParamSet& p, const VariantChoice& v) {
    using namespace detail;
    if (!prof) throw std::invalid_argument("null profile");
    if (id == "G5") return std::make_shared<G5Field>(id, p, v, prof);
    if (id == "G6") return std::make_shared<G6Field>(id, p, v, prof);
    if (id == "G3/general") return std::make_shared<G3General>(id, p, v, prof);
    if (id == "G10/general") return std::make_shared<G10General>(id, p, v, prof);
    throw UnknownFamily(id);
}

FamilyPtr make_reduced_family(const std::string& id, const ParamSet& p, const VariantChoice& v, const MhdConfig& cfg) {
    const double tol = cfg.ode_tol;
    ProfilePtr prof;
    if (id == "G5")
        prof = solve_g5(p, {p.at("r_a"), p.at("r_b")}, p.at("Y_init"), tol);
    else if (id == "G6")
        prof = solve_g6(p, {p.at("s_a"), p.at("s_b")}, p.at("Y_init"), tol);
    else if (id == "G3/general") {
        auto it = v.find("form");
        prof = solve_g3_general(p, {p.at("s_a"), p.at("s_b")}, p.at("W_init"), tol,
                                it != v.end() && it->second == "corrected");
    } else if (id == "G10/general")
        prof = solve_g10_general(p, {p.at("z_a"), p.at("z_b")}, p.at("W_init"), tol);
    else
        throw UnknownFamily(id);
    return assemble_field(prof, id, p, v);
}

ProfilePtr profile_of(const SolutionFamily& f) {
    if (auto* pf = dynamic_cast<const detail::Profiled*>(&f)) return pf->profile();
    return nullptr;
}

// ---------------------------------------------------------------- functionals

FunctionalValue g3_reduced_functional(const ParamSet& p, double W, double dW, double F, bool corrected) {
    const double a1 = get(p, "alpha1"), a2 = get(p, "alpha2"), A = get(p, "A_o"), R = get(p, "R_o");
    const double X = get(p, "X_o"), g = get(p, "gamma");
    const double W3 = W * W * W;
    const double t1 = W3 * dW, t2 = -W3, t3 = W * W / a1;
    const double t4 = -(A / R) * (g * dW + 2 * (g - a2 / a1)) * std::pow(W, 2 - g) * std::exp(2 * (2 - g) * F);
    const double m = corrected ? 1 - a2 / a1 : (1 - a2) / a1;
    const double emag = corrected ? std::exp(2 * F) : std::exp((4 - 2 / a1) * F);
    const double t5 = -(X * X / R) * (dW + m) * emag;
    FunctionalValue out;
    out.value = t1 + t2 + t3 + t4 + t5;
    for (double v : {t1, t2, t3, t4, t5}) out.scale = std::max(out.scale, std::abs(v));
    return out;
}

FunctionalValue g10_reduced_functional(const ParamSet& p, double W, double dW, double I1, double I2) {
    const double R = get(p, "R_o"), A = get(p, "A_o"), Z = get(p, "Z_o"), g = get(p, "gamma");
    const double S = get(p, "X_o") * get(p, "X_o") + get(p, "Y_o") * get(p, "Y_o");
    const double a2 = Z * Z / R, q = W - a2;
    const double t1 = W * dW, t2 = -W;
    const double t3 = (A / R) * std::pow(W, -g) * (2 * (2 - g) - g * dW) * std::exp(2 * (2 - g) * I1);
    const double t4 = -(S / R) * W / (q * q * q) * (dW - 1) * std::exp(2 * I2);
    FunctionalValue out;
    out.value = t1 + t2 + t3 + t4;
    for (double v : {t1, t2, t3, t4}) out.scale = std::max(out.scale, std::abs(v));
    return out;
}

namespace {

// parameter set of the general G3 functional implied by a case's relations
std::pair<ParamSet, double> g3_case_params(int k, const ParamSet& c) {
    ParamSet p;
    auto val = [&](const char* key, double fb) { return c.count(key) ? c.at(key) : fb; };
    double C1 = 1.0;
    switch (k) {
    case 1: {
        const double a1 = get(c, "alpha1"), R = get(c, "R_o");
        p = {{"alpha1", a1}, {"alpha2", a1 + 1}, {"R_o", R}, {"A_o", R / (2 * (a1 - 1))}, {"X_o", val("X_o", 0.8)},
             {"gamma", 4.0 / 3.0}};
        break;
    }
    case 2: {
        const double a2 = get(c, "alpha2"), R = get(c, "R_o");
        p = {{"alpha1", 1.0}, {"alpha2", a2}, {"R_o", R}, {"A_o", get(c, "A_o")}, {"X_o", std::sqrt(R / (2 - a2))},
             {"gamma", 2 * a2 / 3}};
        break;
    }
    case 3: {
        const double a2 = get(c, "alpha2"), A = get(c, "A_o"), X = get(c, "X_o");
        p = {{"alpha1", 1.0}, {"alpha2", a2}, {"R_o", (2 - a2) * (2 * A + X * X)}, {"A_o", A}, {"X_o", X},
             {"gamma", 4.0 / 3.0}};
        break;
    }
    case 4: {
        const double a1 = get(c, "alpha1"), a2 = get(c, "alpha2"), R = get(c, "R_o");
        C1 = (2 * a1 - 1) / a1;
        p = {{"alpha1", a1},
             {"alpha2", a2},
             {"R_o", R},
             {"A_o", (1 - a1) * R / (2 * (a2 - a1) - 1)},
             {"X_o", std::sqrt(R / (2 * a1 - a2))},
             {"gamma", (2 * a1 + 1) / (4 * a1 - 1)}};
        break;
    }
    case 5: {
        const double a1 = get(c, "alpha1"), a2 = get(c, "alpha2"), R = get(c, "R_o");
        C1 = (4 * a1 - 2) / (3 * a1);
        p = {{"alpha1", a1},
             {"alpha2", a2},
             {"R_o", R},
             {"A_o", R / (2 * (2 * a1 - a2))},
             {"X_o", std::sqrt((a1 - 2) * R / (4 * a1 - 3 * a2 + 1))},
             {"gamma", 6 * a1 / (5 * a1 - 1)}};
        break;
    }
    default: throw std::invalid_argument("G3 case must be 1..5");
    }
    p["C_1"] = C1;
    p["C_2"] = val("C_2", 3.0);
    return {p, C1};
}

}  // namespace

AnsatzReport g3_ansatz_check(int k, const ParamSet& base, int n) {
    auto [p, C1] = g3_case_params(k, base);
    const double C2 = p.at("C_2");
    AnsatzReport r;
    r.label = "G3/case" + std::to_string(k);
    r.params = p;
    for (int j = 0; j < n; ++j) {
        const double s = 2.0 * j / std::max(1, n - 1);
        const double W = C1 * s + C2;
        if (!(W > 0)) continue;
        const auto fv = g3_reduced_functional(p, W, C1, std::log(W) / C1, false);
        r.max_abs = std::max(r.max_abs, std::abs(fv.value));
        r.max_rel = std::max(r.max_rel, fv.rel());
        ++r.points;
    }
    return r;
}

AnsatzReport g10_ansatz_check(int k, const ParamSet& base, int n) {
    ParamSet p = base;
    double C1;
    if (k == 1) {
        C1 = 1.0;
        p["gamma"] = 4.0 / 3.0;
    } else if (k == 2) {
        C1 = 2.0 / 3.0;
        p["gamma"] = 5.0 / 4.0;
        p["R_o"] = 2 * get(p, "A_o") + get(p, "X_o") * get(p, "X_o") + get(p, "Y_o") * get(p, "Y_o");
    } else {
        throw std::invalid_argument("G10 case must be 1 or 2");
    }
    const double C2 = p.count("C_2") ? p.at("C_2") : 2.0;
    const double a2 = get(p, "Z_o") * get(p, "Z_o") / get(p, "R_o");
    AnsatzReport r;
    r.label = "G10/case" + std::to_string(k);
    r.params = p;
    for (int j = 0; j < n; ++j) {
        const double z = 2.0 * j / std::max(1, n - 1);
        const double W = C1 * z + C2;
        if (!(W > a2)) continue;
        const auto fv = g10_reduced_functional(p, W, C1, std::log(W) / C1, std::log(W - a2) / C1);
        r.max_abs = std::max(r.max_abs, std::abs(fv.value));
        r.max_rel = std::max(r.max_rel, fv.rel());
        ++r.points;
    }
    return r;
}

G9Reduced g9_reduced(const ParamSet& p, double s) {
    const double al = get(p, "alpha"), be = get(p, "beta"), C2 = get(p, "C_2"), C3 = get(p, "C_3");
    const double K = get(p, "Y_o") * get(p, "Y_o") + (1 + be * be) * get(p, "Z_o") * get(p, "Z_o");
    const double b2 = 1 + be * be, g = 3.0;
    const double xi = C2 - s / 2;
    if (!(xi > 0)) throw DomainError("xi > 0");
    const double lx = std::log(xi);
    const double U = 2 * be * lx / b2 + s / (2 * b2) + (C2 + be * (C3 - 1)) / b2;
    const double W = 2 * lx / b2 - be * s / (2 * b2) + (C3 + be * (be - C2)) / b2;
    const double dU = (-be / xi + 0.5) / b2, dW = (-1 / xi - be / 2) / b2;
    const double f = xi, df = -0.5, I = -2 * lx;
    const double R = -(2 * al + 1) * b2 * K / (2 * be);
    const double A = -(2 * al + 1) * K / (2 * be * (4 * al + 3));
    G9Reduced out;
    out.a = f - (U - be * W - s + be);
    out.b_printed = be * dU + dW + 1;
    out.b_corrected = be * dU + dW + 1 / f;
    const double f3 = f * f * f;
    const double t1 = f3 * df, t2 = f3, t3 = -be * f * f;
    const double t4 = -b2 * (A / R) * (g * df + g + 2 * al) * std::pow(f, 2 - g) * std::exp((1 - g) * I);
    const double t5 = -(b2 / R) * K * (df + 1 + al) * std::exp(-I);
    out.c = t1 + t2 + t3 + t4 + t5;
    for (double v : {t1, t2, t3, t4, t5}) out.c_scale = std::max(out.c_scale, std::abs(v));
    return out;
}

}  // namespace mhdlab
