#include "mhdlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "mhdlab/lagrangian.hpp"
#include "mhdlab/mhdcheck.hpp"
#include "mhdlab/reduced.hpp"
#include "mhdlab/solutions.hpp"
#include "mhdlab/symmetry.hpp"

namespace mhdlab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

double to_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad number '" + s + "' in " + what);
    return v;
}

std::pair<std::string, std::string> split_eq(const std::string& text, const std::string& what) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(what + " must look like key=value: '" + text + "'");
    return {text.substr(0, eq), text.substr(eq + 1)};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

char axis_of(const std::string& k) {
    if (k.size() != 1 || std::string("txyz").find(k[0]) == std::string::npos)
        throw UsageError("axis must be one of t, x, y, z: '" + k + "'");
    return k[0];
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json point_json(const SpacetimePoint& p) { return {{"t", p.t}, {"x", p.x}, {"y", p.y}, {"z", p.z}}; }

json params_json(const ParamSet& p) {
    json j = json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f << text;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
    const unsigned nt = std::min<unsigned>(thread_count(threads), std::max<std::size_t>(1, n));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) fn(i);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < nt; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

struct RunSpec {
    std::string family, variant, out, format;
    std::vector<std::string> params, grid, fix;
    std::optional<double> gamma;
    double tol = 1e-8;
    unsigned threads = 0;
    int samples = 1000;
    std::uint64_t seed = 42;
};

ParamSet raw_params(const RunSpec& rs) {
    ParamSet raw;
    for (const auto& p : rs.params) {
        auto [k, v] = parse_param(p);
        raw[k] = v;
    }
    if (rs.gamma) {
        if (!family_descriptor(rs.family).free_gamma)
            throw ConstraintViolation(rs.family, {"gamma is fixed by this family and cannot be set"});
        raw["gamma"] = *rs.gamma;
    }
    return raw;
}

FamilyPtr build(const RunSpec& rs) { return make_family(rs.family, raw_params(rs), rs.variant); }

std::vector<SpacetimePoint> grid_points(const SolutionFamily& f, const RunSpec& rs) {
    const SampleBox box = f.sample_box();
    std::map<char, std::vector<double>> axes;
    const std::map<char, std::array<double, 2>> mid{{'t', box.t}, {'x', box.x}, {'y', box.y}, {'z', box.z}};
    for (const auto& [a, r] : mid) axes[a] = {0.5 * (r[0] + r[1])};
    for (const auto& s : rs.fix) {
        auto [a, v] = parse_fix(s);
        axes[a] = {v};
    }
    for (const auto& s : rs.grid) {
        const GridAxis g = parse_grid(s);
        std::vector<double> vals;
        for (int k = 0; k < g.n; ++k) vals.push_back(g.n == 1 ? g.lo : g.lo + (g.hi - g.lo) * k / (g.n - 1));
        axes[g.axis] = vals;
    }
    std::vector<SpacetimePoint> pts;
    for (double t : axes['t'])
        for (double x : axes['x'])
            for (double y : axes['y'])
                for (double z : axes['z']) pts.push_back({t, x, y, z});
    return pts;
}

// rows of (t,x,y,z, rho,p,v,B, |J|,|F_m|,|omega|); points outside the domain are dropped
std::string sample_table(const FieldMap& field, const std::vector<SpacetimePoint>& pts, const std::string& format,
                         unsigned threads, std::ostream& err) {
    std::vector<std::optional<std::array<double, 15>>> rows(pts.size());
    parallel_for(pts.size(), threads, [&](std::size_t i) {
        const SpacetimePoint& q = pts[i];
        if (field.domain_violation(q)) return;
        try {
            const FieldJet f = field.jet(q);
            const Vec3 J = curl(f.B), B = values(f.B);
            rows[i] = std::array<double, 15>{q.t,       q.x,       q.y,       q.z,       f.rho.v,
                                             f.p.v,     f.v[0].v,  f.v[1].v,  f.v[2].v,  B[0],
                                             B[1],      B[2],      norm(J),   norm(cross(J, B)),
                                             norm(curl(f.v))};
        } catch (const DomainError&) {
        }
    });
    static const char* cols[] = {"t",  "x",  "y",  "z",  "rho",  "p",     "v1",    "v2",
                                 "v3", "B1", "B2", "B3", "absJ", "absFm", "absOmega"};
    std::size_t skipped = 0;
    std::string text;
    json arr = json::array();
    if (format == "csv") {
        for (int c = 0; c < 15; ++c) text += std::string(c ? "," : "") + cols[c];
        text += "\n";
    }
    for (const auto& r : rows) {
        if (!r) {
            ++skipped;
            continue;
        }
        if (format == "csv") {
            for (int c = 0; c < 15; ++c) text += (c ? "," : "") + fmt17((*r)[c]);
            text += "\n";
        } else {
            json o;
            for (int c = 0; c < 15; ++c) o[cols[c]] = (*r)[c];
            arr.push_back(o);
        }
    }
    if (skipped) err << "warning: skipped " << skipped << " grid points outside the domain\n";
    return format == "csv" ? text : arr.dump(2) + "\n";
}

// free gamma comes from MhdConfig, not from the catalog fallback
double default_of(const ParamInfo& p) { return p.name == "gamma" ? MhdConfig{}.gamma : p.fallback; }

int cmd_list(const std::string& format, std::ostream& out) {
    json fams = json::array();
    std::ostringstream txt;
    std::string group;
    for (const auto& d : family_catalog()) {
        const FamilyMetadata& m = family_metadata(d.id);
        json j;
        j["id"] = d.id;
        j["group"] = d.group;
        j["kind"] = d.kind;
        j["gamma"] = d.free_gamma ? "free" : "fixed";
        json ps = json::array();
        for (const auto& p : d.params)
            ps.push_back({{"name", p.name}, {"default", default_of(p)}, {"note", p.note}});
        j["params"] = ps;
        json cs = json::array();
        for (const auto& c : d.constraints) cs.push_back(c.statement);
        j["constraints"] = cs;
        json vs = json::object();
        for (const auto& ax : d.variants) vs[ax.name] = ax.options;
        j["variants"] = vs;
        j["metadata"] = {{"B", m.b_configuration},         {"stationary", m.stationary},
                         {"compressible", m.compressible}, {"wave", m.wave},
                         {"force", m.force},               {"circulation_conserved", m.circulation_conserved}};
        fams.push_back(j);

        if (d.group != group) {
            group = d.group;
            txt << group << "\n";
        }
        txt << "  " << d.id << "  [" << d.kind << (d.free_gamma ? ", gamma free" : "") << "]";
        txt << "  B " << m.b_configuration << (m.stationary ? ", stationary" : "")
            << (m.compressible ? ", compressible" : ", incompressible") << ", " << m.force
            << (m.circulation_conserved ? ", circulation conserved" : ", circulation not conserved");
        if (!m.wave.empty()) txt << ", " << m.wave;
        txt << "\n    params:";
        for (const auto& p : d.params) txt << " " << p.name << "=" << default_of(p);
        txt << "\n";
        if (!d.constraints.empty()) {
            txt << "    constraints:";
            for (std::size_t k = 0; k < d.constraints.size(); ++k)
                txt << (k ? "; " : " ") << d.constraints[k].statement;
            txt << "\n";
        }
        for (const auto& ax : d.variants) {
            txt << "    variant " << ax.name << ":";
            for (const auto& o : ax.options) txt << " " << o;
            txt << "\n";
        }
    }
    if (format == "json") out << json{{"families", fams}}.dump(2) << "\n";
    else out << txt.str();
    return ok;
}

int cmd_sample(const RunSpec& rs, std::ostream& out, std::ostream& err) {
    const FamilyPtr f = build(rs);
    emit(sample_table(*f, grid_points(*f, rs), rs.format, rs.threads, err), rs.out, out);
    return ok;
}

int cmd_verify(const RunSpec& rs, bool all, bool all_variants, const std::string& ledger, std::ostream& out) {
    VerifyOptions opt{rs.samples, rs.seed, rs.tol, rs.threads};
    json reports = json::array();
    std::vector<std::pair<std::string, std::string>> jobs;
    if (all) {
        for (const auto& d : family_catalog())
            for (const auto& v : variant_combinations(d.id)) jobs.emplace_back(d.id, v);
    } else if (all_variants) {
        for (const auto& v : variant_combinations(rs.family)) jobs.emplace_back(rs.family, v);
    } else {
        jobs.emplace_back(rs.family, rs.variant);
    }
    json entries = json::array();
    bool pass = true;
    for (const auto& [id, v] : jobs) {
        RunSpec one = rs;
        one.family = id;
        const json r = verify_family(id, all ? ParamSet{} : raw_params(one), v, opt);
        pass = pass && r["pass"].get<bool>();
        if (r.contains("ledger")) entries.push_back(r["ledger"]);
        reports.push_back(r);
    }
    json rep;
    rep["reports"] = reports;
    rep["ledger"] = entries;
    rep["pass"] = pass;
    rep["tolerance"] = rs.tol;
    rep["samples"] = rs.samples;
    rep["seed"] = rs.seed;
    emit(rep.dump(2) + "\n", rs.out, out);
    if (!ledger.empty()) update_ledger(ledger, entries);
    return pass ? ok : verification_failed;
}

int cmd_flow(const RunSpec& rs, const std::string& combo_text, double eps, std::ostream& out, std::ostream& err) {
    const FamilyPtr f = build(rs);
    const Combo combo = Combo::parse(combo_text);
    const int n = std::min(rs.samples, 200);
    json rep;
    rep["family"] = f->id();
    rep["variant"] = variant_string(f->variant());
    rep["combo"] = combo.str();
    rep["eps"] = eps;
    auto inv_json = [&](const Combo& c) {
        const InvarianceReport r = invariance_check(f, c, eps, n, rs.seed);
        return json{{"combo", c.str()},         {"deviation", r.deviation},       {"rel_deviation", r.rel_deviation},
                    {"residual", r.residual},   {"residual_rel", r.residual_rel}, {"points", r.points}};
    };
    rep["invariance"] = inv_json(combo);
    json defining = json::array();
    for (const auto& c : defining_algebra(*f)) defining.push_back(inv_json(c));
    rep["defining_algebra"] = defining;
    if (!rs.out.empty()) {
        const Pushforward pf(f, combo, eps);
        emit(sample_table(pf, grid_points(*f, rs), rs.format, rs.threads, err), rs.out, out);
    }
    out << rep.dump(2) << "\n";
    return ok;
}

int cmd_circulate(const RunSpec& rs, const std::string& loop_text, std::optional<double> t0_opt, double t1, int steps,
                  std::ostream& out) {
    const FamilyPtr f = build(rs);
    const LoopSpec ls = parse_loop(loop_text);
    const SampleBox box = f->sample_box();
    const double t0 = t0_opt ? *t0_opt : box.t[0] + 0.25 * (box.t[1] - box.t[0]);
    if (steps < 1) throw UsageError("--steps must be >= 1");
    MaterialLoop loop = MaterialLoop::circle(ls.center, ls.radius, ls.normal, ls.n, t0);
    std::string csv = "t,gamma,gamma_error,dgamma_dt,dgamma_dt_error,acceleration,tension\n";
    json rows = json::array();
    for (int k = 0; k <= steps; ++k) {
        const double t = t0 + (t1 - t0) * k / steps;
        if (k > 0) loop = advect(*f, loop, t);
        const Circulation g = circulation(*f, loop);
        const RateCheck r = circulation_rate_check(*f, loop);
        const std::array<double, 7> v{t, g.value, g.error, r.dgamma_dt, r.dgamma_dt_error, r.acceleration, r.tension};
        for (int c = 0; c < 7; ++c) csv += (c ? "," : "") + fmt17(v[c]);
        csv += "\n";
        rows.push_back({{"t", t},
                        {"gamma", g.value},
                        {"gamma_error", g.error},
                        {"dgamma_dt", r.dgamma_dt},
                        {"dgamma_dt_error", r.dgamma_dt_error},
                        {"acceleration", r.acceleration},
                        {"tension", r.tension}});
    }
    if (rs.format == "csv") {
        emit(csv, rs.out, out);
    } else {
        json rep{{"family", f->id()}, {"variant", variant_string(f->variant())}, {"series", rows}};
        emit(rep.dump(2) + "\n", rs.out, out);
    }
    return ok;
}

int cmd_fieldline(const RunSpec& rs, const std::string& seed_text, double t, double span, std::ostream& out,
                  std::ostream& err) {
    const FamilyPtr f = build(rs);
    const auto parts = split(seed_text, ',');
    if (parts.size() != 3) throw UsageError("--start needs x,y,z");
    const Vec3 s{to_double(parts[0], "--start"), to_double(parts[1], "--start"), to_double(parts[2], "--start")};
    const FieldLine line = trace_field_line(*f, s, t, span);
    if (!line.stop_reason.empty()) err << "field line stopped: " << line.stop_reason << "\n";
    emit(polyline_csv(line.points, t), rs.out, out);
    return ok;
}

}  // namespace

GridAxis parse_grid(const std::string& text) {
    auto [k, v] = split_eq(text, "--grid");
    const auto parts = split(v, ':');
    if (parts.size() != 3) throw UsageError("--grid must look like axis=min:max:n, got '" + text + "'");
    GridAxis g;
    g.axis = axis_of(k);
    g.lo = to_double(parts[0], "--grid");
    g.hi = to_double(parts[1], "--grid");
    const double n = to_double(parts[2], "--grid");
    if (n < 1 || n != std::floor(n)) throw UsageError("grid count must be an integer >= 1: '" + text + "'");
    g.n = static_cast<int>(n);
    return g;
}

std::pair<char, double> parse_fix(const std::string& text) {
    auto [k, v] = split_eq(text, "--fix");
    return {axis_of(k), to_double(v, "--fix")};
}

std::pair<std::string, double> parse_param(const std::string& text) {
    auto [k, v] = split_eq(text, "--param");
    return {k, to_double(v, "--param " + k)};
}

LoopSpec parse_loop(const std::string& text) {
    // tokens without '=' continue the previous key's value list
    std::map<std::string, std::vector<std::string>> kv;
    std::string key;
    for (const auto& tok : split(text, ',')) {
        if (auto eq = tok.find('='); eq != std::string::npos) {
            key = tok.substr(0, eq);
            kv[key].push_back(tok.substr(eq + 1));
        } else if (!key.empty()) {
            kv[key].push_back(tok);
        } else {
            throw UsageError("--loop must start with key=value: '" + text + "'");
        }
    }
    LoopSpec ls;
    auto vec3 = [&](const std::string& k, Vec3& dst) {
        const auto& v = kv[k];
        if (v.size() != 3) throw UsageError("--loop " + k + " needs three numbers");
        for (int i = 0; i < 3; ++i) dst[i] = to_double(v[i], "--loop " + k);
    };
    auto scalar = [&](const std::string& k) {
        const auto& v = kv[k];
        if (v.size() != 1) throw UsageError("--loop " + k + " needs one number");
        return to_double(v[0], "--loop " + k);
    };
    for (const auto& [k, v] : kv) {
        if (k == "center") vec3(k, ls.center);
        else if (k == "normal") vec3(k, ls.normal);
        else if (k == "radius") ls.radius = scalar(k);
        else if (k == "n") ls.n = static_cast<int>(scalar(k));
        else throw UsageError("unknown --loop key '" + k + "'");
    }
    return ls;
}

std::vector<std::string> variant_combinations(const std::string& id) {
    std::vector<std::string> out{""};
    for (const auto& ax : family_descriptor(id).variants) {
        std::vector<std::string> next;
        for (const auto& prefix : out)
            for (const auto& o : ax.options) next.push_back(prefix.empty() ? o : prefix + "," + o);
        out = next;
    }
    return out;
}

json verify_family(const std::string& id, const ParamSet& raw, const std::string& variant, const VerifyOptions& opt,
                   const MhdConfig& cfg) {
    const FamilyPtr f = make_family(id, raw, variant, cfg);
    const auto pts = sample_points(*f, static_cast<std::size_t>(opt.samples), opt.seed);
    const SweepSummary s = sweep(*f, pts, opt.threads);
    json r;
    r["family"] = f->id();
    r["variant"] = variant_string(f->variant());
    r["params"] = params_json(f->params());
    r["gamma"] = f->gamma();
    r["samples"] = s.points;
    r["residuals"] = to_json(s.max_norms);
    r["max_abs"] = s.max_abs;
    r["max_rel"] = s.max_rel;
    r["max_divB"] = s.max_divB;
    r["worst_point"] = point_json(s.worst_point);
    r["worst_equation"] = s.worst_equation;
    const ParamSet derived = f->derived_constants();
    if (!derived.empty()) r["derived"] = params_json(derived);
    if (const ProfilePtr p = profile_of(*f)) {
        r["profile"] = {{"system", p->system()},
                        {"s_min", p->s_min()},
                        {"s_max", p->s_max()},
                        {"nodes", p->grid().size()},
                        {"error_estimate", p->error_estimate()}};
    }
    const bool pass = s.max_abs < opt.tol;
    r["pass"] = pass;
    if (!pass) {
        json e;
        e["family"] = f->id();
        e["variant"] = variant_string(f->variant());
        e["params"] = params_json(f->params());
        e["measured_max_abs"] = s.max_abs;
        e["measured_max_rel"] = s.max_rel;
        e["suspect_term"] = s.worst_equation;
        e["worst_point"] = point_json(s.worst_point);
        e["tolerance"] = opt.tol;
        e["samples"] = s.points;
        e["seed"] = opt.seed;
        if (!derived.empty()) e["derived"] = params_json(derived);
        r["ledger"] = e;
    }
    return r;
}

void update_ledger(const std::string& path, const json& entries) {
    std::map<std::string, json> merged;
    auto key = [](const json& e) { return e.at("family").get<std::string>() + "|" + e.at("variant").get<std::string>(); };
    if (std::ifstream in(path); in) {
        json old;
        try {
            in >> old;
        } catch (const json::exception& ex) {
            throw UsageError("ledger file '" + path + "' is not valid JSON: " + ex.what());
        }
        if (old.contains("entries"))
            for (const auto& e : old["entries"]) merged[key(e)] = e;
    }
    for (const auto& e : entries) merged[key(e)] = e;
    json out;
    out["entries"] = json::array();
    for (const auto& [k, e] : merged) out["entries"].push_back(e);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write ledger '" + path + "'");
    f << out.dump(2) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mhdlab: exact ideal-MHD solutions, checked"};
    app.name(args.empty() ? "mhdlab" : args[0]);
    app.require_subcommand(1);

    RunSpec rs;
    auto family_opts = [&](CLI::App* c, bool grid) {
        c->add_option("--family", rs.family, "family id (see list)")->required();
        c->add_option("--variant", rs.variant, "comma separated variant options");
        c->add_option("--param", rs.params, "k=v, repeatable");
        c->add_option("--gamma", rs.gamma, "adiabatic index for families where it is free");
        c->add_option("--out", rs.out, "output file (default stdout)");
        c->add_option("--threads", rs.threads, "worker threads (0: all cores; MHDLAB_THREADS caps)");
        if (grid) {
            c->add_option("--grid", rs.grid, "axis=min:max:n, repeatable");
            c->add_option("--fix", rs.fix, "axis=value for held axes (default: box midpoint)");
        }
    };

    std::string list_format = "text";
    auto* list = app.add_subcommand("list", "families, parameters, constraints and metadata");
    list->add_option("--format", list_format)->check(CLI::IsMember({"text", "json"}));

    auto* sample = app.add_subcommand("sample", "evaluate a family on a grid");
    family_opts(sample, true);
    rs.format = "csv";
    sample->add_option("--format", rs.format)->check(CLI::IsMember({"csv", "json"}));

    bool all = false, all_variants = false;
    std::string ledger;
    auto* verify = app.add_subcommand("verify", "residual sweep and discrepancy ledger");
    verify->add_option("--family", rs.family, "family id");
    verify->add_flag("--all", all, "every family and every variant combination");
    verify->add_flag("--all-variants", all_variants, "every variant combination of --family");
    verify->add_option("--variant", rs.variant);
    verify->add_option("--param", rs.params, "k=v, repeatable");
    verify->add_option("--gamma", rs.gamma);
    verify->add_option("--tol", rs.tol, "max-abs residual tolerance");
    verify->add_option("--samples", rs.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", rs.seed);
    verify->add_option("--out", rs.out);
    verify->add_option("--ledger", ledger, "JSON ledger file to merge failures into");
    verify->add_option("--threads", rs.threads);

    std::string combo;
    double eps = 0.1;
    auto* flowc = app.add_subcommand("flow", "push a family through a generator flow");
    family_opts(flowc, true);
    flowc->add_option("--combo", combo, "e.g. J3+K3+0.5*H")->required();
    flowc->add_option("--eps", eps);
    flowc->add_option("--samples", rs.samples)->check(CLI::PositiveNumber);
    flowc->add_option("--seed", rs.seed);
    flowc->add_option("--format", rs.format)->check(CLI::IsMember({"csv", "json"}));

    std::string loop_text;
    std::optional<double> t0;
    double t1 = 0.0;
    int steps = 4;
    auto* circ = app.add_subcommand("circulate", "advect a loop and track its circulation");
    family_opts(circ, false);
    circ->add_option("--loop", loop_text, "center=x,y,z,radius=r,normal=a,b,c,n=N")->required();
    circ->add_option("--t0", t0, "loop time (default: a quarter into the sample box)");
    circ->add_option("--t1", t1)->required();
    circ->add_option("--steps", steps);
    circ->add_option("--format", rs.format)->check(CLI::IsMember({"csv", "json"}));

    std::string start;
    double line_t = 1.0, span = 1.0;
    auto* fl = app.add_subcommand("fieldline", "trace a magnetic field line at fixed t");
    family_opts(fl, false);
    fl->add_option("--start", start, "x,y,z")->required();
    fl->add_option("--t", line_t);
    fl->add_option("--span", span, "arclength");

    std::vector<std::string> argv_s = args.empty() ? std::vector<std::string>{"mhdlab"} : args;
    std::vector<char*> argv;
    for (auto& a : argv_s) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*list) return cmd_list(list_format, out);
        if (*sample) return cmd_sample(rs, out, err);
        if (*verify) {
            if (!all && rs.family.empty()) throw UsageError("verify needs --family or --all");
            if (!all) family_descriptor(rs.family);
            return cmd_verify(rs, all, all_variants, ledger, out);
        }
        if (*flowc) return cmd_flow(rs, combo, eps, out, err);
        if (*circ) return cmd_circulate(rs, loop_text, t0, t1, steps, out);
        if (*fl) return cmd_fieldline(rs, start, line_t, span, out, err);
    } catch (const std::invalid_argument& e) {
        // UnknownFamily, ConstraintViolation, usage problems
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

}  // namespace mhdlab::cli
