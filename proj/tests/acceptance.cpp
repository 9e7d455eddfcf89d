// Acceptance driver: `acceptance --criterion N` runs one criterion, prints its
// details and a final PASS/FAIL line, and exits 0 only on PASS.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mhdlab/cli.hpp"
#include "mhdlab/lagrangian.hpp"
#include "mhdlab/mhdcheck.hpp"
#include "mhdlab/reduced.hpp"
#include "mhdlab/symmetry.hpp"

using namespace mhdlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}
std::string sci(double v) { return fmt("%.3e", v); }

void detail(const std::string& s) { std::cout << "    " << s << "\n"; }

double max_diff(const Vec3& a, const Vec3& b) {
    double d = 0.0;
    for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

// ---------------------------------------------------------------- 1

const std::vector<std::string> residual_cases = {
    "G1/gamma=1", "G1/gamma=2", "G1/gamma=generic", "G2/gamma=3/2", "G2/gamma=2", "G3/case1",
    "G3/case2",   "G3/case3",   "G3/case4",         "G3/case5",     "G4",         "G6/alpha2=0",
    "G7",         "G8",         "G9",               "G10/case1",    "G10/case2"};

Outcome residual_suite() {
    const auto start = std::chrono::steady_clock::now();
    cli::VerifyOptions opt;  // 1000 samples, seed 42, tol 1e-8
    int passed = 0, ledgered = 0;
    for (const auto& id : residual_cases) {
        const auto r = cli::verify_family(id, {}, "", opt);
        const bool ok = r["pass"].get<bool>();
        passed += ok;
        if (!ok && r.contains("ledger")) ++ledgered;
        detail(id + " [" + r["variant"].get<std::string>() + "] max_abs=" + sci(r["max_abs"].get<double>()) +
               (ok ? " pass" : " ledger: " + r["worst_equation"].get<std::string>()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // corrected readings, for information
    int corrected_pass = 0;
    for (const auto& id : residual_cases) {
        std::string v;
        for (const auto& ax : family_descriptor(id).variants)
            for (const auto& o : ax.options)
                if (o == "corrected" || o == "continuous") v = o;
        corrected_pass += cli::verify_family(id, {}, v, opt)["pass"].get<bool>();
    }
    const int n = static_cast<int>(residual_cases.size());
    const bool all_ledgered = passed + ledgered == n;
    const double frac = static_cast<double>(passed) / n;
    Outcome o;
    o.pass = frac >= 0.8 && all_ledgered && secs < 30.0;
    o.summary = std::to_string(passed) + "/" + std::to_string(n) + " sub-cases pass as printed (" +
                fmt("%.0f", 100 * frac) + "%, need 80%), " + std::to_string(ledgered) + " ledgered, " +
                std::to_string(corrected_pass) + "/" + std::to_string(n) + " with corrected variants, " +
                fmt("%.3f", secs) + " s";
    return o;
}

// ---------------------------------------------------------------- 2

Outcome divergence_free() {
    double worst = 0.0;
    std::string where;
    std::size_t points = 0;
    for (const auto& d : family_catalog())
        for (const auto& v : cli::variant_combinations(d.id)) {
            const auto f = make_family(d.id, {}, v);
            const auto s = sweep(*f, sample_points(*f, 1000, 42));
            points += s.points;
            if (s.max_divB >= worst) {
                worst = s.max_divB;
                where = f->name();
            }
        }
    detail("largest |div B| at " + where);
    return {worst < 1e-11, "max |div B| = " + sci(worst) + " over " + std::to_string(points) + " points"};
}

// ---------------------------------------------------------------- 3

Outcome g7_conservation() {
    const auto f = make_family("G7");
    const double rho0 = f->param("rho_o"), E = f->param("E_o"), d = f->param("delta_o");
    double amp = 0.0, drift = 0.0, energy = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double t = 10.0 * i / 2000;
        for (const Vec3 x : {Vec3{0.3, -0.7, 0.2}, Vec3{-1.1, 0.4, 1.7}, Vec3{0.0, 0.0, -2.5}}) {
            const SpacetimePoint p{t, x[0], x[1], x[2]};
            const MhdState s = f->evaluate(p);
            const double U2 = rho0 * (s.v[0] * s.v[0] + s.v[1] * s.v[1]);
            const double X2 = s.B[0] * s.B[0] + s.B[1] * s.B[1];
            amp = std::max(amp, std::abs(U2 + X2 - 2 * E));
            drift = std::max(drift, std::abs(s.v[0] * s.B[0] + s.v[1] * s.B[1] - d));
            if (i % 20 == 0) energy = std::max(energy, std::abs(energy_law_residual(*f, p).residual));
        }
    }
    detail("|U^2 + X^2 - 2E_o| max = " + sci(amp));
    detail("|v_h . B_h - delta_o| max over t in [0,10] = " + sci(drift));
    detail("energy-law residual max = " + sci(energy));
    return {amp < 1e-12 && drift < 1e-10 && energy < 1e-8,
            "amplitude " + sci(amp) + ", cross-helicity drift " + sci(drift) + ", energy " + sci(energy)};
}

// ---------------------------------------------------------------- 4

// each check returns the max deviation between displayed and computed vectors
using Display = std::function<std::pair<Vec3, Vec3>(const SpacetimePoint&)>;

double compare(const FamilyPtr& f, const Display& fn, int n = 200) {
    double worst = 0.0;
    for (const auto& p : sample_points(*f, n, 5)) {
        const auto [shown, computed] = fn(p);
        worst = std::max(worst, max_diff(shown, computed));
    }
    return worst;
}

Outcome displayed_quantities() {
    std::vector<std::pair<std::string, double>> rows;

    for (const char* id : {"G1/gamma=1", "G1/gamma=2", "G1/gamma=generic"}) {
        const auto f = make_family(id);
        const double a = f->param("alpha"), X = f->param("X_o");
        rows.emplace_back(std::string(id) + " J", compare(f, [&](const SpacetimePoint& p) {
                              const MhdState s = f->evaluate(p);
                              const Vec3 J{-(a * s.B[1] + s.B[0]) / p.t, (a * s.B[0] - s.B[1]) / p.t, 0.0};
                              return std::pair{J, current_density(*f, p)};
                          }));
        rows.emplace_back(std::string(id) + " F_m", compare(f, [&](const SpacetimePoint& p) {
                              const MhdState s = f->evaluate(p);
                              const Vec3 F{0.0, 0.0, -a * X * X * s.rho / (p.t * p.t)};
                              return std::pair{F, force_decomposition(*f, p).lorentz};
                          }));
    }

    // G9 against the corrected (exact) field; the printed one differs as well
    for (const char* variant : {"corrected", "printed"}) {
        const auto f = make_family("G9", {}, variant);
        const double a = f->param("alpha"), b = f->param("beta"), C2 = f->param("C_2"), Z = f->param("Z_o");
        const std::string tag = std::string("G9[") + variant + "]";
        rows.emplace_back(tag + " J", compare(f, [&](const SpacetimePoint& p) {
                              const double xi = C2 - b / 2 * std::log(p.t) - (p.x - b * p.z) / (2 * p.t);
                              const double k = -(2 * a + 1) * Z * std::pow(p.t, a - 1) * std::pow(xi, 2 * a);
                              return std::pair{Vec3{k, -(1 + b * b) * k, k}, current_density(*f, p)};
                          }));
        rows.emplace_back(tag + " F_m", compare(f, [&](const SpacetimePoint& p) {
                              const double k = b / (1 + b * b) * f->evaluate(p).rho / p.t;
                              return std::pair{Vec3{k, 0.0, -b * k}, force_decomposition(*f, p).lorentz};
                          }));
    }

    {
        const auto f = make_family("G7");
        const double Z = f->param("Z_o");
        rows.emplace_back("G7 F_m", compare(f, [&](const SpacetimePoint& p) {
                              const MhdState s = f->evaluate(p);
                              return std::pair{Vec3{-Z * s.B[1], Z * s.B[0], 0.0}, force_decomposition(*f, p).lorentz};
                          }));
    }

    {
        const auto f = make_family("G10/case2");
        const double A = f->param("A_o"), C2 = f->param("C_2"), X = f->param("X_o"), Y = f->param("Y_o"),
                     Z = f->param("Z_o");
        const double a2 = Z * Z / (2 * A + X * X + Y * Y);
        rows.emplace_back("G10/case2 F_m", compare(f, [&](const SpacetimePoint& p) {
                              const double w = 2.0 / 3 * p.z + C2 - a2, t4 = 3 * std::pow(p.t, 4);
                              const Vec3 F{Z / t4 / std::sqrt(w) * X, Z / t4 / std::sqrt(w) * Y, -(X * X + Y * Y) / t4};
                              return std::pair{F, force_decomposition(*f, p).lorentz};
                          }));
        rows.emplace_back("G10/case2 omega", compare(f, [&](const SpacetimePoint& p) {
                              const double w = 2.0 / 3 * p.z + C2 - a2;
                              const double k = a2 / (3 * Z) / p.t / std::sqrt(w);
                              return std::pair{Vec3{-Y * k, X * k, 0.0}, vorticity(*f, p)};
                          }));
    }

    {
        const auto f = make_family("G4");
        const double a1 = f->param("alpha1"), c = f->param("c_o"), Y = f->param("Y_o");
        rows.emplace_back("G4 J", compare(f, [&](const SpacetimePoint& p) {
                              const MhdState s = f->evaluate(p);
                              const double r2 = p.x * p.x + p.y * p.y, sn = std::sin(c * std::atan2(p.y, p.x));
                              const Vec3 J{-s.B[0] * s.B[2] / Y, -s.B[1] * s.B[2] / Y, c * c * Y / (r2 * sn * sn)};
                              return std::pair{J, current_density(*f, p)};
                          }));
        rows.emplace_back("G4 omega", compare(f, [&](const SpacetimePoint& p) {
                              const MhdState s = f->evaluate(p);
                              const double r2 = p.x * p.x + p.y * p.y, th = std::atan2(p.y, p.x);
                              const double cot = std::cos(c * th) / std::sin(c * th);
                              const Vec3 w{a1 * (p.x + c * p.y * cot) / r2 * s.v[2],
                                           a1 * (p.y - c * p.x * cot) / r2 * s.v[2], 0.0};
                              return std::pair{w, vorticity(*f, p)};
                          }));
    }

    {
        MhdConfig cfg;
        cfg.ode_tol = 1e-12;
        const auto f = make_family("G5", {}, "", cfg);
        const auto prof = profile_of(*f);
        const double a2 = f->param("alpha2");
        rows.emplace_back("G5 J (r, phi, z)", compare(f, [&](const SpacetimePoint& p) {
                              const Vec3 pos{p.x, p.y, p.z};
                              const MhdState s = f->evaluate(p);
                              const auto B = cart_to_cyl(pos, s.B), J = cart_to_cyl(pos, current_density(*f, p));
                              const double r = B.r;
                              const auto smp = prof->sample(r);
                              const double Y = smp.value[0], dY = smp.d1[0], tY = std::tan(Y), cY = std::cos(Y);
                              const Vec3 shown{a2 / r * B.vec[2], a2 / r * tY * B.vec[2],
                                               B.vec[0] / (cY * cY) * dY - a2 / r * B.vec[1] * tY - a2 / r * B.vec[0]};
                              return std::pair{shown, J.vec};
                          }));
    }

    bool pass = true;
    for (const auto& [name, dev] : rows) {
        const bool ok = dev < 1e-10;
        // the printed G9 row is informational only
        if (name.find("[printed]") == std::string::npos) pass = pass && ok;
        detail(name + ": max deviation " + sci(dev) + (ok ? " match" : " MISMATCH"));
    }
    int mism = 0;
    for (const auto& [name, dev] : rows)
        if (name.find("[printed]") == std::string::npos && dev >= 1e-10) ++mism;
    return {pass, std::to_string(mism) + " displayed quantities disagree with the computed ones"};
}

// ---------------------------------------------------------------- 5

Outcome ansatz_algebra() {
    double worst = 0.0;
    for (int k = 1; k <= 5; ++k) {
        const auto r = g3_ansatz_check(k, make_family("G3/case" + std::to_string(k))->params(), 100);
        detail(r.label + ": max |functional| = " + sci(r.max_abs) + " over " + std::to_string(r.points) + " points");
        worst = std::max(worst, r.max_abs);
    }
    for (int k = 1; k <= 2; ++k) {
        const auto r = g10_ansatz_check(k, make_family("G10/case" + std::to_string(k))->params(), 100);
        detail(r.label + ": max |functional| = " + sci(r.max_abs) + " over " + std::to_string(r.points) + " points");
        worst = std::max(worst, r.max_abs);
    }
    const auto g9 = make_family("G9");
    double a = 0, b = 0, bc = 0, c = 0;
    for (int i = 0; i < 100; ++i) {
        const double s = 2.0 * i / 99;
        const auto r = g9_reduced(g9->params(), s);
        a = std::max(a, std::abs(r.a));
        b = std::max(b, std::abs(r.b_printed));
        bc = std::max(bc, std::abs(r.b_corrected));
        c = std::max(c, std::abs(r.c));
    }
    detail("G9 (C1 = -1/2, gamma = 3): first " + sci(a) + ", second " + sci(b) + " (with 1/f in place of 1: " +
           sci(bc) + "), third " + sci(c));
    const bool pass = worst < 1e-10 && a < 1e-10 && b < 1e-10 && c < 1e-10;
    return {pass, "G3/G10 worst " + sci(worst) + "; G9 equations " + sci(a) + ", " + sci(b) + ", " + sci(c)};
}

// ---------------------------------------------------------------- 6

double profile_change(const ReducedProfile& a, const ReducedProfile& b) {
    double d = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double s = a.s_min() + (a.s_max() - a.s_min()) * i / 400.0;
        const auto x = a.sample(s), y = b.sample(s);
        for (std::size_t k = 0; k < x.value.size(); ++k) d = std::max(d, std::abs(x.value[k] - y.value[k]));
    }
    return d;
}

Outcome reduced_solvers() {
    bool pass = true;
    for (const char* id : {"G5", "G6"}) {
        MhdConfig half;
        half.ode_tol = MhdConfig{}.ode_tol / 2;
        const auto pa = profile_of(*make_family(id)), pb = profile_of(*make_family(id, {}, "", half));
        const double change = profile_change(*pa, *pb);
        const bool ok = change < 10 * pa->error_estimate();
        pass = pass && ok;
        detail(std::string(id) + ": halved tolerance moves the profile by " + sci(change) + ", estimate " +
               sci(pa->error_estimate()));
    }

    const auto g5 = make_family("G5");
    double bal = 0.0, bgp = 0.0;
    for (const auto& p : sample_points(*g5, 1000, 42)) {
        const auto c = cylindrical_balance(*g5, p);
        bal = std::max({bal, std::abs(c[0]), std::abs(c[1])});
        bgp = std::max(bgp, std::abs(field_aligned_gradient(*g5, p, ScalarSel::p)));
    }
    detail("G5 radial/azimuthal balance " + sci(bal) + ", B . grad p " + sci(bgp));
    pass = pass && bal < 1e-7 && bgp < 1e-7;

    // the integrated spiral with alpha2 = 0 against the closed form; the
    // integration constants of the angle integrals are matched at s_a
    const auto closed = make_family("G6/alpha2=0", {}, "corrected");
    const double a1 = closed->param("alpha1"), k = 1 + a1 * a1, sa = 0.5;
    const double Ya = closed->param("Y_o") + a1 / k * std::log(sa);
    const double Da = std::cos(Ya) - a1 * std::sin(Ya);
    MhdConfig fine;
    fine.ode_tol = 1e-12;
    const ParamSet np{{"alpha1", a1},
                      {"alpha2", 0.0},
                      {"A_o", closed->param("A_o")},
                      {"W_o", -closed->param("W_o") * Da * std::pow(sa, a1 * a1 / k)},
                      {"X_o", closed->param("X_o") * Da * std::pow(sa, -1 / k)},
                      {"Z_o", closed->param("Z_o")},
                      {"R_o", closed->param("R_o")},
                      {"R_amp", closed->param("R_amp")},
                      {"s_a", sa},
                      {"s_b", 1.5},
                      {"Y_init", Ya}};
    const auto numeric = make_family("G6", np, "exp-Bz,corrected-vz", fine);
    double dev = 0.0;
    int used = 0;
    for (const auto& p : sample_points(*numeric, 1000, 42)) {
        if (closed->domain_violation(p)) continue;
        ++used;
        const auto x = pack(closed->evaluate(p)), y = pack(numeric->evaluate(p));
        for (int i = 0; i < 8; ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
    }
    detail("G6 alpha2=0 integrated vs closed form: " + sci(dev) + " over " + std::to_string(used) + " points");
    pass = pass && dev < 1e-8 && used > 0;
    return {pass, "self-convergence, G5 balance " + sci(bal) + ", G6 closed-form match " + sci(dev)};
}

// ---------------------------------------------------------------- 7

Outcome symmetry() {
    bool pass = true;
    std::vector<FamilyPtr> passing;
    for (const auto& d : family_catalog())
        for (const auto& v : cli::variant_combinations(d.id)) {
            const auto f = make_family(d.id, {}, v);
            if (sweep(*f, sample_points(*f, 200, 42)).max_abs < 1e-8) passing.push_back(f);
        }
    detail(std::to_string(passing.size()) + " passing family/variant pairs");

    double push_worst = 0.0;
    std::string push_where;
    for (const auto& f : passing)
        for (Gen g : all_generators) {
            const auto pf = std::make_shared<const Pushforward>(f, Combo(g), 0.1);
            int used = 0;
            for (const auto& q : sample_points(*f, 200, 3)) {
                if (pf->domain_violation(q) || f->sampling_violation(pf->preimage(q)))
                    continue;
                const double r = residual(*pf, q).max_abs;
                if (r > push_worst) push_worst = r, push_where = f->name() + " under " + gen_name(g);
                if (++used == 40) break;
            }
        }
    detail("pushforward residual max " + sci(push_worst) + (push_where.empty() ? "" : " (" + push_where + ")"));
    pass = pass && push_worst < 1e-8;

    double inv_worst = 0.0;
    int inv_fail = 0;
    for (const auto& f : passing)
        for (const auto& c : defining_algebra(*f)) {
            const auto r = invariance_check(f, c, 0.1, 100);
            if (r.deviation >= 1e-9) {
                ++inv_fail;
                detail("not invariant: " + f->name() + " under " + c.str() + ", deviation " + sci(r.deviation));
            }
            inv_worst = std::max(inv_worst, r.deviation);
        }
    detail("invariance deviation max " + sci(inv_worst));
    pass = pass && inv_fail == 0;

    const SpacetimePoint p{0.8, 0.3, -0.4, 0.6};
    MhdState u;
    u.rho = 1.2, u.p = 0.8, u.v = {0.3, -0.2, 0.5}, u.B = {0.1, 0.6, -0.4};
    double law = 0.0, comm = 0.0;
    for (const char* c : {"J3+K3+0.7*H", "F+0.6*G-H", "J3+P3+0.5*G+0.3*H", "K1+P2+0.3*P3", "F+K3+0.2*H"})
        law = std::max(law, group_law_defect(Combo::parse(c), 0.1, 0.05, p, u));
    for (Gen g : all_generators) comm = std::max(comm, commutator_defect(Gen::H, g, 0.1, p, u));
    detail("group law defect " + sci(law) + ", [H, X] defect " + sci(comm));
    pass = pass && law < 1e-8 && comm < 1e-8;
    return {pass, "pushforward " + sci(push_worst) + ", invariance " + sci(inv_worst) + " (" +
                      std::to_string(inv_fail) + " failing), group law " + sci(law) + ", [H,.] " + sci(comm)};
}

// ---------------------------------------------------------------- 8

Outcome circulation() {
    bool pass = true;
    double drift = 0.0;
    for (const char* id : {"G1/gamma=1", "G1/gamma=2", "G1/gamma=generic"}) {
        const auto f = make_family(id);
        const auto loop = MaterialLoop::circle({0.2, 0.1, 0.3}, 0.4, {0.3, 0.5, 1.0}, 128, 1.0);
        const double g0 = circulation(*f, loop).value;
        const auto moved = advect(*f, loop, 2.0, 1e-12);
        const double d = std::abs(circulation(*f, moved).value - g0);
        detail(std::string(id) + ": Gamma(1) = " + fmt("%.12g", g0) + ", drift to t = 2 " + sci(d));
        drift = std::max(drift, d);
    }
    pass = pass && drift < 1e-6;

    const auto g7 = make_family("G7");
    const auto loop = MaterialLoop::circle({0.1, -0.2, 0.3}, 0.5, {1.0, 0.2, 0.4}, 128, 1.0);
    const auto rc = circulation_rate_check(*g7, loop);
    const double rel = std::abs(rc.dgamma_dt - rc.tension) / std::abs(rc.tension);
    detail("G7: dGamma/dt = " + fmt("%.12g", rc.dgamma_dt) + ", tension integral = " + fmt("%.12g", rc.tension) +
           ", relative gap " + sci(rel));
    pass = pass && rel < 1e-5 && std::abs(rc.dgamma_dt) > 1e-6;

    int mismatch = 0;
    for (const auto& d : family_catalog()) {
        // Kelvin's theorem is a statement about solutions: judge the first variant that is one
        FamilyPtr f = make_family(d.id);
        for (const auto& var : cli::variant_combinations(d.id)) {
            auto g = make_family(d.id, {}, var);
            if (sweep(*g, sample_points(*g, 200, 42)).max_abs < 1e-8) {
                f = g;
                break;
            }
        }
        const auto v = circulation_verdict(f);
        const bool want = family_metadata(d.id).circulation_conserved;
        if (v.conserved != want) {
            ++mismatch;
            detail("verdict mismatch for " + d.id);
        }
    }
    detail("verdict mismatches: " + std::to_string(mismatch) + " of " + std::to_string(family_catalog().size()));
    pass = pass && mismatch == 0;
    return {pass, "G1 drift " + sci(drift) + ", G7 rate gap " + sci(rel) + ", " + std::to_string(mismatch) +
                      " verdict mismatches"};
}

// ---------------------------------------------------------------- 9

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    std::vector<std::string> files;
    for (const char* extra : {"", "", " --threads 1"}) {
        const std::string path = (dir / ("mhdlab_verify_" + std::to_string(files.size()) + ".json")).string();
        const std::string cmd = std::string(MHDLAB_CLI_PATH) + " verify --all --out " + path + extra + " 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        (void)rc;  // exit 2 is expected while printed variants fail
        files.push_back(path);
    }
    const std::string a = slurp(files[0]), b = slurp(files[1]), c = slurp(files[2]);
    for (const auto& f : files) std::filesystem::remove(f);
    detail("report size " + std::to_string(a.size()) + " bytes");
    const bool same = !a.empty() && a == b && a == c;
    return {same, same ? "three runs (one single-threaded) byte-identical" : "reports differ"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "1..9")->required()->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    static const std::array<std::pair<const char*, Outcome (*)()>, 9> table{{
        {"residual suite", residual_suite},
        {"divergence-free field", divergence_free},
        {"G7 conservation", g7_conservation},
        {"displayed derived quantities", displayed_quantities},
        {"ansatz algebra", ansatz_algebra},
        {"reduced solvers", reduced_solvers},
        {"symmetry", symmetry},
        {"circulation", circulation},
        {"determinism", determinism},
    }};
    const auto& [name, fn] = table[criterion - 1];
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
    }
    std::cout << "criterion " << criterion << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.summary << std::endl;
    return o.pass ? 0 : 1;
}
