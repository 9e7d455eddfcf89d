#include "mhdlab/lagrangian.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "mhdlab/mhdcheck.hpp"
#include "mhdlab/ode.hpp"

namespace mhdlab {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

// velocity rhs; NaN outside the domain so the integrator shrinks onto the boundary
OdeRhs velocity_rhs(const FieldMap& field) {
    return [&field](double t, const State& y, State& dy) {
        const SpacetimePoint q{t, y[0], y[1], y[2]};
        if (!q.finite() || field.domain_violation(q)) {
            dy.assign(3, nan_v);
            return;
        }
        try {
            const MhdState s = field.evaluate(q);
            dy = {s.v[0], s.v[1], s.v[2]};
        } catch (const DomainError&) {  // overflow near a singular time
            dy.assign(3, nan_v);
        }
    };
}

struct Traj {
    Vec3 end{};
    double err = 0.0;
};

Traj advect_one(const FieldMap& field, const Vec3& p, double t0, double t1, double tol, std::size_t idx) {
    if (t0 == t1) return {p, 0.0};
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    opt.hmax = std::abs(t1 - t0) / 4;
    OdeSolution sol;
    try {
        sol = integrate(velocity_rhs(field), t0, State(p.begin(), p.end()), t1, opt);
    } catch (const OdeError& e) {
        throw AdvectionError(e.what(), t0, idx);
    }
    if (!sol.reached(t1)) throw AdvectionError(sol.event ? *sol.event : "stopped", sol.event_t, idx);
    Traj r;
    std::copy(sol.y.back().begin(), sol.y.back().end(), r.end.begin());
    for (double e : sol.local_error) r.err += e;
    return r;
}

std::mutex fftw_mutex;

// d x / d s at s_k = 2 pi k / N for each coordinate
std::vector<Vec3> spectral_tangent(const std::vector<Vec3>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<Vec3> d(x.size());
    std::vector<double> in(n), out(n);
    std::vector<fftw_complex> c(n / 2 + 1);
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_plan fwd = fftw_plan_dft_r2c_1d(n, in.data(), c.data(), FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_c2r_1d(n, c.data(), out.data(), FFTW_ESTIMATE);
    for (int comp = 0; comp < 3; ++comp) {
        for (int k = 0; k < n; ++k) in[k] = x[k][comp];
        fftw_execute(fwd);
        for (int m = 0; m <= n / 2; ++m) {
            const double re = c[m][0], im = c[m][1];
            const double f = (2 * m == n) ? 0.0 : m / static_cast<double>(n);
            c[m][0] = -im * f;
            c[m][1] = re * f;
        }
        fftw_execute(bwd);
        for (int k = 0; k < n; ++k) d[k][comp] = out[k];
    }
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    return d;
}

double spectral_integral(const std::vector<Vec3>& x, const std::vector<Vec3>& a) {
    const auto d = spectral_tangent(x);
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += dot(a[k], d[k]);
    return s * 2 * std::numbers::pi / static_cast<double>(x.size());
}

double secant_integral(const std::vector<Vec3>& x, const std::vector<Vec3>& a) {
    double s = 0.0;
    const std::size_t n = x.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = (k + 1) % n;
        for (int i = 0; i < 3; ++i) s += 0.5 * (a[k][i] + a[j][i]) * (x[j][i] - x[k][i]);
    }
    return s;
}

Vec3 acceleration(const FieldMap& field, const SpacetimePoint& q, bool tension_only) {
    const FieldJet f = field.jet(q);
    const Vec3 B = values(f.B);
    Vec3 a{};
    if (tension_only) {
        for (int i = 0; i < 3; ++i)
            a[i] = (B[0] * f.B[i].g[1] + B[1] * f.B[i].g[2] + B[2] * f.B[i].g[3]) / f.rho.v;
        return a;
    }
    const Vec3 F = cross(curl(f.B), B);
    const Vec3 gp = grad(f.p);
    for (int i = 0; i < 3; ++i) a[i] = (F[i] - gp[i]) / f.rho.v;
    return a;
}

}  // namespace

AdvectionError::AdvectionError(std::string why, double exit_time, std::size_t index)
    : std::runtime_error("point " + std::to_string(index) + " left the domain at t = " + std::to_string(exit_time) +
                         " (" + why + ")"),
      exit_time_(exit_time),
      index_(index) {}

AdvectResult advect(const FieldMap& field, const std::vector<Vec3>& points, double t0, double t1, double tol,
                    unsigned threads) {
    std::vector<Traj> out(points.size());
    const unsigned nt = std::min<unsigned>(thread_count(threads), std::max<std::size_t>(1, points.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::size_t err_index = points.size();
    std::mutex err_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next++) < points.size();) {
            try {
                out[i] = advect_one(field, points[i], t0, t1, tol, i);
            } catch (...) {
                // keep the lowest index so the reported failure does not depend on scheduling
                std::lock_guard<std::mutex> lock(err_mutex);
                if (i < err_index) err_index = i, err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nt; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    AdvectResult r;
    r.points.reserve(points.size());
    for (const auto& t : out) {
        r.points.push_back(t.end);
        r.error_estimate = std::max(r.error_estimate, t.err);
    }
    return r;
}

MaterialLoop::MaterialLoop(std::vector<Vec3> points, double t) : pts_(std::move(points)), t_(t) {
    if (pts_.size() < 16) throw std::invalid_argument("material loop needs at least 16 points");
    for (std::size_t k = 0; k < pts_.size(); ++k) {
        const Vec3& a = pts_[k];
        const Vec3& b = pts_[(k + 1) % pts_.size()];
        if (a == b) throw std::invalid_argument("material loop has repeated consecutive points");
        for (double c : a)
            if (!std::isfinite(c)) throw std::invalid_argument("material loop point not finite");
    }
}

MaterialLoop MaterialLoop::circle(const Vec3& c, double radius, const Vec3& normal, int n, double t) {
    if (!(radius > 0)) throw std::invalid_argument("loop radius must be > 0");
    const double nn = norm(normal);
    if (!(nn > 0)) throw std::invalid_argument("loop normal must be nonzero");
    const Vec3 nz{normal[0] / nn, normal[1] / nn, normal[2] / nn};
    // any vector not parallel to the normal
    const Vec3 helper = std::abs(nz[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = cross(nz, helper);
    const double l1 = norm(e1);
    for (auto& x : e1) x /= l1;
    const Vec3 e2 = cross(nz, e1);
    std::vector<Vec3> pts(std::max(n, 0));
    for (int k = 0; k < n; ++k) {
        const double a = 2 * std::numbers::pi * k / n;
        for (int i = 0; i < 3; ++i) pts[k][i] = c[i] + radius * (std::cos(a) * e1[i] + std::sin(a) * e2[i]);
    }
    return MaterialLoop(std::move(pts), t);
}

MaterialLoop advect(const FieldMap& field, const MaterialLoop& loop, double t1, double tol) {
    return MaterialLoop(advect(field, loop.points(), loop.t(), t1, tol).points, t1);
}

Circulation loop_integral(const MaterialLoop& loop, const std::function<Vec3(const SpacetimePoint&)>& f) {
    const auto& x = loop.points();
    std::vector<Vec3> a(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) a[k] = f({loop.t(), x[k][0], x[k][1], x[k][2]});
    Circulation c;
    c.value = spectral_integral(x, a);
    if (x.size() % 2 == 0 && x.size() >= 32) {
        std::vector<Vec3> xh, ah;
        for (std::size_t k = 0; k < x.size(); k += 2) {
            xh.push_back(x[k]);
            ah.push_back(a[k]);
        }
        c.error = std::abs(c.value - spectral_integral(xh, ah));
    } else {
        c.error = std::abs(c.value - secant_integral(x, a));
    }
    return c;
}

Circulation circulation(const FieldMap& field, const MaterialLoop& loop) {
    return loop_integral(loop, [&field](const SpacetimePoint& q) {
        const MhdState s = field.evaluate(q);
        return s.v;
    });
}

RateCheck circulation_rate_check(const FieldMap& field, const MaterialLoop& loop, double tol) {
    const double t = loop.t();
    const double dt = 1e-4 * (t != 0.0 ? std::abs(t) : 1.0);
    auto rate = [&](double h) {
        const double gp = circulation(field, advect(field, loop, t + h, tol)).value;
        const double gm = circulation(field, advect(field, loop, t - h, tol)).value;
        return (gp - gm) / (2 * h);
    };
    RateCheck r;
    r.t = t;
    r.gamma = circulation(field, loop).value;
    r.dgamma_dt = rate(dt);
    r.dgamma_dt_error = std::abs(r.dgamma_dt - rate(dt / 2));
    r.acceleration = loop_integral(loop, [&](const SpacetimePoint& q) { return acceleration(field, q, false); }).value;
    r.tension = loop_integral(loop, [&](const SpacetimePoint& q) { return acceleration(field, q, true); }).value;
    return r;
}

CirculationVerdict circulation_verdict(const FamilyPtr& family, int loops, std::uint64_t seed, double threshold) {
    CirculationVerdict v;
    const SampleBox box = family->sample_box();
    const double ext = std::min({box.x[1] - box.x[0], box.y[1] - box.y[0], box.z[1] - box.z[0]});
    const double radius = 0.05 * ext;
    const auto centers = sample_points(*family, static_cast<std::size_t>(20 * loops), seed);
    std::mt19937_64 rng(seed);
    for (const auto& c : centers) {
        if (v.loops >= loops) break;
        const Vec3 normal{uniform01(rng()) - 0.5, uniform01(rng()) - 0.5, uniform01(rng()) - 0.5};
        if (norm(normal) < 0.1) continue;
        const MaterialLoop loop = MaterialLoop::circle({c.x, c.y, c.z}, radius, normal, 64, c.t);
        bool inside = true;
        for (const auto& p : loop.points())
            if (family->sampling_violation({c.t, p[0], p[1], p[2]})) inside = false;
        if (!inside) continue;
        RateCheck r;
        try {
            r = circulation_rate_check(*family, loop);
        } catch (const AdvectionError&) {
            continue;
        }
        v.max_rate = std::max(v.max_rate, std::abs(r.dgamma_dt));
        v.max_accel = std::max(v.max_accel, std::abs(r.acceleration));
        ++v.loops;
    }
    v.conserved = v.max_rate < threshold;
    return v;
}

FieldLine trace_field_line(const FieldMap& field, const Vec3& seed, double t, double span, double tol) {
    auto rhs = [&](double, const State& y, State& dy) {
        const SpacetimePoint q{t, y[0], y[1], y[2]};
        if (!q.finite() || field.domain_violation(q)) {
            dy.assign(3, nan_v);
            return;
        }
        const Vec3 B = field.evaluate(q).B;
        const double b = norm(B);
        if (!(b > 0)) {
            dy.assign(3, nan_v);
            return;
        }
        dy = {B[0] / b, B[1] / b, B[2] / b};
    };
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    opt.hmax = std::abs(span) / 64;
    opt.event = [&](double, const State& y) -> std::optional<std::string> {
        const SpacetimePoint q{t, y[0], y[1], y[2]};
        if (!q.finite() || field.domain_violation(q)) return "domain boundary";
        if (norm(field.evaluate(q).B) < 1e-12) return "|B| < 1e-12";
        return std::nullopt;
    };
    FieldLine line;
    line.t = t;
    const OdeSolution sol = integrate(rhs, 0.0, State(seed.begin(), seed.end()), span, opt);
    if (sol.event) line.stop_reason = *sol.event == "non-finite right-hand side" ? "domain boundary" : *sol.event;
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        line.points.push_back({sol.y[i][0], sol.y[i][1], sol.y[i][2]});
        line.arclength.push_back(sol.t[i]);
    }
    for (double e : sol.local_error) line.error_estimate += e;
    return line;
}

std::string polyline_csv(const std::vector<Vec3>& pts, double t) {
    std::string out = "t,x,y,z\n";
    char buf[128];
    for (const auto& p : pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t, p[0], p[1], p[2]);
        out += buf;
    }
    return out;
}

}  // namespace mhdlab
