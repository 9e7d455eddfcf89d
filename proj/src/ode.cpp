#include "mhdlab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace mhdlab {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

bool all_finite(const State& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double scaled_norm(const State& err, const State& y0, const State& y1, const OdeOptions& o) {
    double s = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc = o.atol + o.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        s += (err[i] / sc) * (err[i] / sc);
    }
    return std::sqrt(s / static_cast<double>(err.size()));
}

}  // namespace

State OdeSolution::at(double tq) const {
    if (t.empty()) throw OdeError("empty solution");
    const bool fwd = t.size() < 2 || t.back() >= t.front();
    const double lo = fwd ? t.front() : t.back(), hi = fwd ? t.back() : t.front();
    if (tq < lo || tq > hi) throw OdeError("dense output requested outside the integrated span");
    if (t.size() == 1) return y.front();
    // first index with t[i] >= tq in the direction of integration
    std::size_t i;
    if (fwd)
        i = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), tq) - t.begin());
    else
        i = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), tq, std::greater<double>()) - t.begin());
    if (i == 0) return y.front();
    const auto& r = dense[i - 1];
    const double h = t[i] - t[i - 1];
    const double th = (tq - t[i - 1]) / h, th1 = 1.0 - th;
    State out(r[0].size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = r[0][k] + th * (r[1][k] + th1 * (r[2][k] + th * (r[3][k] + th1 * r[4][k])));
    return out;
}

OdeSolution integrate(const OdeRhs& f, double t0, const State& y0, double t1, const OdeOptions& opt) {
    OdeSolution sol;
    const std::size_t n = y0.size();
    sol.t.push_back(t0);
    sol.y.push_back(y0);
    sol.local_error.push_back(0.0);
    if (t1 == t0) return sol;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    if (opt.event) {
        if (auto why = opt.event(t0, y0)) {
            sol.event = *why;
            sol.event_t = t0;
            return sol;
        }
    }

    State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ys(n), y1(n), err(n);
    State y = y0;
    double t = t0;
    f(t, y, k1);
    if (!all_finite(k1)) throw OdeError("non-finite right-hand side at the initial point");

    double h = opt.h0;
    if (h <= 0.0) {
        // Hairer's starting-step heuristic, simplified
        double d0 = 0, dd1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            d0 += (y[i] / sc) * (y[i] / sc);
            dd1 += (k1[i] / sc) * (k1[i] / sc);
        }
        d0 = std::sqrt(d0 / n);
        dd1 = std::sqrt(dd1 / n);
        h = (d0 < 1e-5 || dd1 < 1e-5) ? 1e-6 : 0.01 * d0 / dd1;
        h = std::min(h, std::abs(t1 - t0));
    }
    h = std::min(h, opt.hmax);
    double err_old = 1e-4;
    const double hmin = 1e-14 * std::max(1.0, std::max(std::abs(t0), std::abs(t1)));

    for (long step = 0; step < opt.max_steps; ++step) {
        bool last = false;
        if (std::abs(t1 - t) <= h * (1 + 1e-12)) {
            h = std::abs(t1 - t);
            last = true;
        }
        const double hs = dir * h;
        for (std::size_t i = 0; i < n; ++i) ys[i] = y[i] + hs * a21 * k1[i];
        f(t + c2 * hs, ys, k2);
        for (std::size_t i = 0; i < n; ++i) ys[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * hs, ys, k3);
        for (std::size_t i = 0; i < n; ++i) ys[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * hs, ys, k4);
        for (std::size_t i = 0; i < n; ++i)
            ys[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * hs, ys, k5);
        for (std::size_t i = 0; i < n; ++i)
            ys[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(t + hs, ys, k6);
        for (std::size_t i = 0; i < n; ++i)
            y1[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        const double tn = last ? t1 : t + hs;

        bool ok = all_finite(y1);
        std::optional<std::string> ev;
        if (ok && opt.event) ev = opt.event(tn, y1);
        if (ok && !ev) {
            f(tn, y1, k7);
            ok = all_finite(k7);
        }
        if (!ok || ev) {
            // shrink towards the obstruction
            ++sol.rejected;
            h *= 0.5;
            if (h < hmin) {
                sol.event = ev ? *ev : std::string("non-finite right-hand side");
                sol.event_t = t;
                return sol;
            }
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double en = scaled_norm(err, y, y1, opt);
        if (en <= 1.0) {
            std::array<State, 5> rc;
            rc[0] = y;
            rc[1].resize(n);
            rc[2].resize(n);
            rc[3].resize(n);
            rc[4].resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                rc[1][i] = y1[i] - y[i];
                rc[2][i] = hs * k1[i] - rc[1][i];
                rc[3][i] = rc[1][i] - hs * k7[i] - rc[2][i];
                rc[4][i] = hs * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            }
            double emax = 0.0;
            for (double e : err) emax = std::max(emax, std::abs(e));
            sol.dense.push_back(std::move(rc));
            t = tn;
            y = y1;
            k1 = k7;
            sol.t.push_back(t);
            sol.y.push_back(y);
            sol.local_error.push_back(emax);
            if (last) return sol;
            // PI step control
            const double en_c = std::max(en, 1e-10);
            double fac = 0.9 * std::pow(en_c, -0.7 / 5) * std::pow(err_old, 0.4 / 5);
            fac = std::clamp(fac, 0.2, 10.0);
            err_old = std::max(en, 1e-4);
            h = std::min(h * fac, opt.hmax);
        } else {
            ++sol.rejected;
            h *= std::max(0.2, 0.9 * std::pow(en, -0.2));
            if (h < hmin) throw OdeError("step size underflow at t = " + std::to_string(t));
        }
    }
    throw OdeError("maximum number of steps exceeded");
}

}  // namespace mhdlab
