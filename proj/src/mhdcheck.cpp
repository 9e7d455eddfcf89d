#include "mhdlab/mhdcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace mhdlab {

namespace {

struct Term {
    double res = 0.0, scale = 0.0;
    void add(double t) {
        res += t;
        scale = std::max(scale, std::abs(t));
    }
    double rel() const { return std::abs(res) / std::max(1.0, scale); }
};

// (a . grad) b for jets, with a given by values
Vec3 directional(const Vec3& a, const std::array<Jet2, 3>& b) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = a[0] * b[i].g[1] + a[1] * b[i].g[2] + a[2] * b[i].g[3];
    return r;
}

struct Equations {
    Term cont, pres, divb;
    std::array<Term, 3> mom, ind;
};

Equations equations(const FieldJet& f, double gamma) {
    Equations e;
    const Vec3 v = values(f.v), B = values(f.B);
    const double rho = f.rho.v, p = f.p.v;
    const double divv = div(f.v), divB = div(f.B);

    e.cont.add(f.rho.g[0]);
    e.cont.add(dot(v, grad(f.rho)));
    e.cont.add(rho * divv);

    const Vec3 J = curl(f.B);
    const Vec3 BxJ = cross(B, J);
    const Vec3 gp = grad(f.p);
    const Vec3 vgv = directional(v, f.v);
    for (int i = 0; i < 3; ++i) {
        e.mom[i].add(f.v[i].g[0]);
        e.mom[i].add(vgv[i]);
        e.mom[i].add(gp[i] / rho);
        e.mom[i].add(BxJ[i] / rho);
    }

    e.pres.add(f.p.g[0]);
    e.pres.add(dot(v, gp));
    e.pres.add(gamma * p * divv);

    // curl(v x B) = v div B - B div v + (B.grad) v - (v.grad) B
    const Vec3 bgv = directional(B, f.v), vgb = directional(v, f.B);
    for (int i = 0; i < 3; ++i) {
        e.ind[i].add(f.B[i].g[0]);
        e.ind[i].add(-v[i] * divB);
        e.ind[i].add(B[i] * divv);
        e.ind[i].add(-bgv[i]);
        e.ind[i].add(vgb[i]);
    }

    e.divb.add(f.B[0].g[1]);
    e.divb.add(f.B[1].g[2]);
    e.divb.add(f.B[2].g[3]);
    return e;
}

double field_scale(const FieldJet& f) {
    double s = std::max(std::abs(f.rho.v), std::abs(f.p.v));
    for (int i = 0; i < 3; ++i) s = std::max({s, std::abs(f.v[i].v), std::abs(f.B[i].v)});
    return s;
}

}  // namespace

nlohmann::json to_json(const ResidualReport& r) {
    nlohmann::json j;
    j["continuity"] = r.continuity;
    j["momentum"] = {r.momentum[0], r.momentum[1], r.momentum[2]};
    j["pressure"] = r.pressure;
    j["induction"] = {r.induction[0], r.induction[1], r.induction[2]};
    j["divB"] = r.divB;
    j["max_abs"] = r.max_abs;
    j["rel"] = r.rel;
    return j;
}

ResidualReport residual(const FieldMap& field, const FieldJet& f) {
    const Equations e = equations(f, field.gamma());
    ResidualReport r;
    r.continuity = e.cont.res;
    r.pressure = e.pres.res;
    r.divB = e.divb.res;
    double ma = std::max({std::abs(r.continuity), std::abs(r.pressure), std::abs(r.divB)});
    double rel = std::max({e.cont.rel(), e.pres.rel(), e.divb.rel()});
    for (int i = 0; i < 3; ++i) {
        r.momentum[i] = e.mom[i].res;
        r.induction[i] = e.ind[i].res;
        ma = std::max({ma, std::abs(r.momentum[i]), std::abs(r.induction[i])});
        rel = std::max({rel, e.mom[i].rel(), e.ind[i].rel()});
    }
    r.max_abs = ma;
    r.rel = rel;
    return r;
}

ResidualReport residual(const FieldMap& field, const SpacetimePoint& pt) { return residual(field, field.jet(pt)); }

std::string dominant_equation(const FieldMap& field, const SpacetimePoint& pt) {
    const Equations e = equations(field.jet(pt), field.gamma());
    std::string name = "continuity";
    double best = e.cont.rel();
    auto consider = [&](const Term& t, const std::string& n) {
        if (t.rel() > best) {
            best = t.rel();
            name = n;
        }
    };
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) consider(e.mom[i], std::string("momentum-") + xyz[i]);
    consider(e.pres, "pressure");
    for (int i = 0; i < 3; ++i) consider(e.ind[i], std::string("induction-") + xyz[i]);
    consider(e.divb, "divB");
    return name;
}

Vec3 current_density(const FieldMap& field, const SpacetimePoint& pt) { return curl(field.jet(pt), VectorSel::B); }

ForceDecomposition force_decomposition(const FieldMap& field, const SpacetimePoint& pt) {
    const FieldJet f = field.jet(pt);
    const Vec3 B = values(f.B);
    ForceDecomposition d;
    d.lorentz = cross(curl(f.B), B);
    for (int i = 0; i < 3; ++i) d.pressure_part[i] = -(B[0] * f.B[0].g[i + 1] + B[1] * f.B[1].g[i + 1] + B[2] * f.B[2].g[i + 1]);
    d.tension_part = directional(B, f.B);
    return d;
}

Vec3 frozen_in_residual(const FieldMap& field, const SpacetimePoint& pt) {
    const FieldJet f = field.jet(pt);
    std::array<Jet2, 3> q;
    for (int i = 0; i < 3; ++i) q[i] = f.B[i] / f.rho;
    const Vec3 v = values(f.v), qv = values(q);
    const Vec3 vgq = directional(v, q), qgv = directional(qv, f.v);
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = q[i].g[0] + vgq[i] - qgv[i];
    return r;
}

VorticityTransport vorticity_transport(const FieldMap& field, const SpacetimePoint& pt) {
    const FieldJet f = field.jet(pt);
    const Vec3J1 w = curl_j1(f.v);
    const Vec3J1 v = first(f.v), B = first(f.B);
    const Vec3J1 J = curl_j1(f.B);
    const Vec3J1 Fm = cross(J, B);
    const Jet1 rho = first(f.rho);
    Vec3J1 a;
    for (int i = 0; i < 3; ++i) a[i] = Fm[i] / rho;
    VorticityTransport out;
    const Vec3 cvw = curl(cross(v, w));
    out.curl_force = curl(a);
    for (int i = 0; i < 3; ++i) {
        out.omega[i] = w[i].v;
        out.domega_dt[i] = w[i].g[0];
        out.residual[i] = w[i].g[0] - cvw[i] - out.curl_force[i];
    }
    return out;
}

Vec3 vorticity(const FieldMap& field, const SpacetimePoint& pt) { return curl(field.jet(pt), VectorSel::v); }

EnergyLaw energy_law_residual(const FieldMap& field, const SpacetimePoint& pt, double flux_sign) {
    const double g = field.gamma();
    if (g == 1.0) throw std::domain_error("energy law needs gamma != 1");
    const FieldJet f = field.jet(pt);
    const Vec3J1 v = first(f.v), B = first(f.B);
    const Jet1 rho = first(f.rho), p = first(f.p);
    const Jet1 v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const Jet1 b2 = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
    const Jet1 bv = B[0] * v[0] + B[1] * v[1] + B[2] * v[2];
    const Jet1 kin = 0.5 * rho * v2;
    const Jet1 e = kin + p * (1.0 / (g - 1)) + 0.5 * b2;
    const Jet1 h = kin + p * (g / (g - 1)) + b2;
    EnergyLaw out;
    out.residual = e.g[0];
    out.scale = std::abs(e.g[0]);
    for (int i = 0; i < 3; ++i) {
        const Jet1 flux = h * v[i] + flux_sign * bv * B[i];
        out.residual += flux.g[i + 1];
        out.scale = std::max(out.scale, std::abs(flux.g[i + 1]));
    }
    return out;
}

bool is_force_free(const FieldMap& field, const SpacetimePoint& pt, double tol) {
    const FieldJet f = field.jet(pt);
    const double sc = std::max(1.0, field_scale(f));
    const Vec3 F = cross(curl(f.B), values(f.B));
    return norm(grad(f.p)) <= tol * sc && norm(F) <= tol * sc * sc;
}

double field_aligned_gradient(const FieldMap& field, const SpacetimePoint& pt, ScalarSel which) {
    const FieldJet f = field.jet(pt);
    return dot(values(f.B), grad(select(f, which)));
}

Vec3 b_dot_grad_v(const FieldMap& field, const SpacetimePoint& pt) {
    const FieldJet f = field.jet(pt);
    return directional(values(f.B), f.v);
}

std::array<double, 2> cylindrical_balance(const FieldMap& field, const SpacetimePoint& pt) {
    const FieldJet f = field.jet(pt);
    const Vec3 B = values(f.B);
    const Vec3 tension = directional(B, f.B);
    Vec3 g{};
    for (int i = 0; i < 3; ++i)
        g[i] = f.p.g[i + 1] + B[0] * f.B[0].g[i + 1] + B[1] * f.B[1].g[i + 1] + B[2] * f.B[2].g[i + 1] - tension[i];
    const double r = std::hypot(pt.x, pt.y);
    if (!(r > 0)) throw DomainError("r > 0 (axis singularity)");
    const double c = pt.x / r, s = pt.y / r;
    return {g[0] * c + g[1] * s, -g[0] * s + g[1] * c};
}

unsigned thread_count(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MHDLAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

SweepSummary sweep(const FieldMap& field, const std::vector<SpacetimePoint>& pts, unsigned threads) {
    std::vector<ResidualReport> reps(pts.size());
    const unsigned nt = std::min<unsigned>(thread_count(threads), std::max<std::size_t>(1, pts.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        try {
            for (std::size_t i; (i = next++) < pts.size() && !failed;) reps[i] = residual(field, pts[i]);
        } catch (...) {
            if (!failed.exchange(true)) err = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nt; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);

    // in-order max reduction keeps the result independent of scheduling
    SweepSummary s;
    s.points = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& r = reps[i];
        s.max_abs = std::max(s.max_abs, r.max_abs);
        s.max_divB = std::max(s.max_divB, std::abs(r.divB));
        auto& m = s.max_norms;
        m.continuity = std::max(m.continuity, std::abs(r.continuity));
        m.pressure = std::max(m.pressure, std::abs(r.pressure));
        m.divB = s.max_divB;
        for (int k = 0; k < 3; ++k) {
            m.momentum[k] = std::max(m.momentum[k], std::abs(r.momentum[k]));
            m.induction[k] = std::max(m.induction[k], std::abs(r.induction[k]));
        }
        m.max_abs = s.max_abs;
        m.rel = std::max(m.rel, r.rel);
        if (i == 0 || r.rel > s.max_rel) {
            s.max_rel = r.rel;
            s.worst = r;
            s.worst_point = pts[i];
        }
    }
    if (!pts.empty()) s.worst_equation = dominant_equation(field, s.worst_point);
    return s;
}

}  // namespace mhdlab
