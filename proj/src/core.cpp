#include "mhdlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mhdlab {

bool SpacetimePoint::finite() const {
    return std::isfinite(t) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

bool is_finite(const MhdState& s) {
    if (!std::isfinite(s.rho) || !std::isfinite(s.p)) return false;
    for (int i = 0; i < 3; ++i)
        if (!std::isfinite(s.v[i]) || !std::isfinite(s.B[i])) return false;
    return true;
}

static std::string join_failures(const std::string& family, const std::vector<std::string>& f) {
    std::ostringstream os;
    os << "invalid parameters for " << family << ":";
    for (const auto& s : f) os << " [" << s << "]";
    return os.str();
}

ConstraintViolation::ConstraintViolation(std::string family, std::vector<std::string> failures)
    : std::invalid_argument(join_failures(family, failures)), failures_(std::move(failures)) {}

std::pair<Vec3, Vec3> cyl_to_cart(const CylComponents& q) {
    if (!(q.r > 0.0)) throw DomainError("r > 0 (axis singularity)");
    const double c = std::cos(q.phi), s = std::sin(q.phi);
    Vec3 pos{q.r * c, q.r * s, q.z};
    Vec3 vec{q.vec[0] * c - q.vec[1] * s, q.vec[0] * s + q.vec[1] * c, q.vec[2]};
    return {pos, vec};
}

CylComponents cart_to_cyl(const Vec3& position, const Vec3& vec) {
    CylComponents q;
    q.r = std::hypot(position[0], position[1]);
    if (!(q.r > 0.0)) throw DomainError("r > 0 (axis singularity)");
    q.phi = std::atan2(position[1], position[0]);
    q.z = position[2];
    const double c = position[0] / q.r, s = position[1] / q.r;
    q.vec = {vec[0] * c + vec[1] * s, -vec[0] * s + vec[1] * c, vec[2]};
    return q;
}

// ---------------------------------------------------------------------------
// family catalog

namespace {

using P = const ParamSet&;
double at(P p, const char* k) { return p.at(k); }
int sgn(double x) { return (x > 0) - (x < 0); }

Constraint positive(const char* name) {
    return {std::string(name) + " > 0", std::string(name) + " must be > 0",
            [n = std::string(name)](P p) { return p.at(n) > 0.0; }};
}
Constraint nonzero(const char* name) {
    return {std::string(name) + " != 0", std::string(name) + " must be nonzero",
            [n = std::string(name)](P p) { return p.at(n) != 0.0; }};
}
Constraint gamma_at_least_one() {
    return {"gamma >= 1", "gamma must be >= 1", [](P p) { return p.at("gamma") >= 1.0; }};
}

std::vector<ParamInfo> g1_params(bool generic) {
    std::vector<ParamInfo> v{{"alpha", 0.7, "subalgebra parameter"},
                             {"A_o", 0.3, "pressure amplitude"},
                             {"R_o", 2.0, "density amplitude"},
                             {"W_o", 1.2, "v3 constant"},
                             {"U_o", 0.5, "helix radius"},
                             {"X_o", 0.8, "field amplitude"},
                             {"theta_o", 1.3, "phase constant"}};
    if (generic) v.push_back({"gamma", 0.0, "adiabatic exponent"});
    return v;
}

std::vector<Constraint> g1_constraints(int branch) {  // branch: 1, 2, 0=generic
    std::vector<Constraint> c{positive("R_o"), nonzero("alpha")};
    if (branch == 1) {
        c.push_back({"0 <= A_o < 1/(4 alpha^2)", "A_o outside [0, 1/(4 alpha^2))", [](P p) {
                         const double a = at(p, "alpha");
                         return at(p, "A_o") >= 0.0 && at(p, "A_o") < 1.0 / (4.0 * a * a);
                     }});
    } else {
        c.push_back(positive("A_o"));
    }
    c.push_back({"sgn[W_o] = sgn[alpha]", "sgn[W_o] ≠ sgn[α]",
                 [](P p) { return sgn(at(p, "W_o")) == sgn(at(p, "alpha")); }});
    c.push_back({"theta_o > 0", "theta_o must be > 0 (logarithm of theta_o/(t R))",
                 [](P p) { return at(p, "theta_o") > 0.0; }});
    if (branch == 0) {
        c.push_back(gamma_at_least_one());
        c.push_back({"gamma != 1, 2", "gamma = 1 or 2 belongs to its own branch",
                     [](P p) { return at(p, "gamma") != 1.0 && at(p, "gamma") != 2.0; }});
    }
    return c;
}

std::vector<ParamInfo> g2_params(bool generic) {
    std::vector<ParamInfo> v{{"alpha1", 0.8, ""},  {"alpha2", 0.6, ""}, {"A_o", 0.4, ""},
                             {"R_o", 1.5, ""},     {"W_o", 0.3, ""},    {"U_o", 0.5, ""},
                             {"X_o", 0.7, ""},     {"theta_o", 0.2, ""}};
    if (generic) {
        v.push_back({"gamma", 0.0, "adiabatic exponent"});
        v.push_back({"R_int0", 0.0, "additive constant of the integral R(t), lower limit t=1"});
    }
    return v;
}

std::vector<Constraint> g2_constraints(bool generic) {
    std::vector<Constraint> c{positive("R_o"), positive("A_o"), positive("alpha1"), nonzero("alpha2")};
    if (generic) {
        c.push_back(gamma_at_least_one());
        c.push_back({"2 gamma not in {3, 4, 5, ...}",
                     "2 gamma is an integer >= 3 (special branch or hypergeometric pole)", [](P p) {
                         const double g2 = 2.0 * at(p, "gamma");
                         return !(g2 >= 3.0 && g2 == std::round(g2));
                     }});
    }
    return c;
}

std::vector<ParamInfo> g3_common() {
    return {{"U_o", 0.5, ""}, {"C_2", 3.0, "ansatz intercept"}, {"theta_o", 0.4, ""}};
}

std::vector<VariantAxis> form_axis() { return {{"form", {"printed", "corrected"}}}; }

FamilyDescriptor closed(std::string id, std::string group, std::vector<ParamInfo> params,
                        std::vector<Constraint> cons, std::function<double(P)> gamma_rule,
                        std::vector<VariantAxis> variants = {}) {
    FamilyDescriptor d;
    d.id = std::move(id);
    d.group = std::move(group);
    d.kind = "closed";
    d.params = std::move(params);
    d.constraints = std::move(cons);
    d.variants = std::move(variants);
    d.free_gamma = !gamma_rule;
    d.fixed_gamma = std::move(gamma_rule);
    if (d.free_gamma) {
        bool has = std::any_of(d.params.begin(), d.params.end(), [](const ParamInfo& i) { return i.name == "gamma"; });
        if (!has) d.params.push_back({"gamma", 0.0, "adiabatic exponent"});
        if (std::none_of(d.constraints.begin(), d.constraints.end(),
                         [](const Constraint& c) { return c.statement == "gamma >= 1"; }))
            d.constraints.push_back(gamma_at_least_one());
    }
    return d;
}

std::function<double(P)> fixed(double g) {
    return [g](P) { return g; };
}

std::vector<FamilyDescriptor> build_catalog() {
    std::vector<FamilyDescriptor> cat;

    cat.push_back(closed("G1/gamma=1", "G1", g1_params(false), g1_constraints(1), fixed(1.0)));
    cat.push_back(closed("G1/gamma=2", "G1", g1_params(false), g1_constraints(2), fixed(2.0)));
    cat.push_back(closed("G1/gamma=generic", "G1", g1_params(true), g1_constraints(0), nullptr));

    cat.push_back(closed("G2/gamma=3/2", "G2", g2_params(false), g2_constraints(false), fixed(1.5), form_axis()));
    cat.push_back(closed("G2/gamma=2", "G2", g2_params(false), g2_constraints(false), fixed(2.0), form_axis()));
    cat.push_back(closed("G2/gamma=generic", "G2", g2_params(true), g2_constraints(true), nullptr, form_axis()));

    {
        auto p = g3_common();
        p.insert(p.begin(), {{"alpha1", 1.7, ""}, {"R_o", 2.0, ""}, {"X_o", 0.8, ""}});
        cat.push_back(closed("G3/case1", "G3", p,
                             {positive("R_o"), positive("alpha1"),
                              {"alpha1 != 1", "alpha1 = 1 makes the pressure amplitude singular",
                               [](P q) { return at(q, "alpha1") != 1.0; }}},
                             fixed(4.0 / 3.0), form_axis()));
    }
    {
        auto p = g3_common();
        p.insert(p.begin(), {{"alpha2", 1.7, ""}, {"R_o", 2.0, ""}, {"A_o", 0.5, ""}, {"X_o", 0.0, "listed but unused"}});
        cat.push_back(closed("G3/case2", "G3", p,
                             {positive("R_o"), positive("A_o"),
                              {"3/2 <= alpha2 < 2", "alpha2 outside [3/2, 2)",
                               [](P q) { return at(q, "alpha2") >= 1.5 && at(q, "alpha2") < 2.0; }}},
                             [](P q) { return 2.0 * q.at("alpha2") / 3.0; }));
    }
    {
        auto p = g3_common();
        p.insert(p.begin(), {{"alpha2", 1.5, ""}, {"A_o", 0.5, ""}, {"X_o", 0.8, ""}});
        cat.push_back(closed("G3/case3", "G3", p,
                             {positive("A_o"),
                              {"1 < alpha2 < 2", "alpha2 outside (1, 2)",
                               [](P q) { return at(q, "alpha2") > 1.0 && at(q, "alpha2") < 2.0; }}},
                             fixed(4.0 / 3.0)));
    }
    {
        auto p = g3_common();
        p.insert(p.begin(), {{"alpha1", 0.75, ""}, {"alpha2", 1.35, ""}, {"R_o", 2.0, ""}});
        cat.push_back(closed(
            "G3/case4", "G3", p,
            {positive("R_o"),
             {"1/2 < alpha1 < 1", "alpha1 outside (1/2, 1)",
              [](P q) { return at(q, "alpha1") > 0.5 && at(q, "alpha1") < 1.0; }},
             {"(2 alpha1 + 1)/2 < alpha2 < 2 alpha1",
              "alpha2 outside ((2α₁+1)/2, 2α₁) (realness of B, positivity of p)", [](P q) {
                  const double a1 = at(q, "alpha1"), a2 = at(q, "alpha2");
                  return a2 > (2.0 * a1 + 1.0) / 2.0 && a2 < 2.0 * a1;
              }}},
            [](P q) { return (2.0 * q.at("alpha1") + 1.0) / (4.0 * q.at("alpha1") - 1.0); }));
    }
    {
        auto p = g3_common();
        p.insert(p.begin(), {{"alpha1", 1.2, ""}, {"alpha2", 2.0, ""}, {"R_o", 2.0, ""}});
        cat.push_back(closed(
            "G3/case5", "G3", p,
            {positive("R_o"),
             {"(1/2 < alpha1 < 2 and (4 alpha1+1)/3 < alpha2 < 2 alpha1) or (alpha1 > 2 and alpha1 < alpha2 < (4 alpha1+1)/3)",
              "(alpha1, alpha2) outside both admissible intervals", [](P q) {
                  const double a1 = at(q, "alpha1"), a2 = at(q, "alpha2");
                  const double m = (4.0 * a1 + 1.0) / 3.0;
                  return (a1 > 0.5 && a1 < 2.0 && a2 > m && a2 < 2.0 * a1) || (a1 > 2.0 && a2 > a1 && a2 < m);
              }}},
            [](P q) { return 6.0 * q.at("alpha1") / (5.0 * q.at("alpha1") - 1.0); }));
    }
    {
        FamilyDescriptor d = closed("G3/general", "G3",
                                    {{"alpha1", 1.3, ""},
                                     {"alpha2", 0.9, ""},
                                     {"A_o", 0.5, ""},
                                     {"R_o", 2.0, ""},
                                     {"X_o", 0.6, ""},
                                     {"U_o", 0.5, ""},
                                     {"theta_o", 0.3, ""},
                                     {"s_a", 0.5, "profile start (s = z + ln t / alpha1)"},
                                     {"s_b", 3.0, "profile end"},
                                     {"W_init", 2.0, "W(s_a)"}},
                                    {nonzero("alpha1"), positive("R_o"), positive("W_init"),
                                     {"s_a < s_b", "profile span empty", [](P q) { return at(q, "s_a") < at(q, "s_b"); }}},
                                    nullptr, form_axis());
        d.kind = "reduced";
        cat.push_back(d);
    }

    cat.push_back(closed("G4", "G4",
                         {{"alpha1", 0.6, ""},
                          {"c_o", 1.5, ""},
                          {"A_o", 5.0, ""},
                          {"W_o", 0.7, ""},
                          {"Y_o", 0.4, ""},
                          {"Z_o", 0.9, ""},
                          {"R_o", 1.0, "R(s) = R_o (1 + R_amp sin s)"},
                          {"R_amp", 0.3, ""}},
                         {positive("A_o"), nonzero("c_o"), nonzero("alpha1"),
                          {"alpha1 != 1", "alpha1 must differ from 1", [](P q) { return at(q, "alpha1") != 1.0; }},
                          positive("R_o"),
                          {"|R_amp| < 1", "|R_amp| must be < 1 (R > 0)", [](P q) { return std::abs(at(q, "R_amp")) < 1.0; }}},
                         nullptr));

    auto rho_axis = VariantAxis{"rho", {"rho-free", "const-cyl-printed", "const-cyl-corrected"}};
    auto vz_axis = VariantAxis{"vz", {"printed-vz", "corrected-vz"}};
    {
        FamilyDescriptor d = closed(
            "G5", "G5",
            {{"alpha1", 0.4, ""},
             {"alpha2", 0.2, ""},
             {"A_o", 0.5, ""},
             {"W_o", 0.6, ""},
             {"X_o", 0.8, ""},
             {"Z_o", 0.5, ""},
             {"R_o", 1.0, "R(r) = R_o (1 + R_amp sin r)"},
             {"R_amp", 0.2, ""},
             {"r_a", 0.5, "profile start radius"},
             {"r_b", 2.0, "profile end radius"},
             {"Y_init", 0.2, "Y(r_a)"}},
            {positive("A_o"), nonzero("X_o"), positive("R_o"),
             {"|R_amp| < 1", "|R_amp| must be < 1", [](P q) { return std::abs(at(q, "R_amp")) < 1.0; }},
             {"0 < r_a < r_b", "need 0 < r_a < r_b", [](P q) { return at(q, "r_a") > 0.0 && at(q, "r_a") < at(q, "r_b"); }},
             {"Y_init != (2k+1) pi/2", "cos(Y_init) = 0", [](P q) { return std::abs(std::cos(at(q, "Y_init"))) > 1e-6; }}},
            nullptr, {vz_axis, rho_axis});
        d.kind = "reduced";
        cat.push_back(d);
    }
    {
        FamilyDescriptor d = closed(
            "G6", "G6",
            {{"alpha1", 0.5, ""},
             {"alpha2", 0.3, ""},
             {"A_o", 0.5, ""},
             {"W_o", 0.6, ""},
             {"X_o", 0.8, ""},
             {"Z_o", 0.5, ""},
             {"R_o", 1.0, "R(s) = R_o (1 + R_amp sin s)"},
             {"R_amp", 0.2, ""},
             {"s_a", 0.5, "profile start (s = r exp(-alpha1 phi))"},
             {"s_b", 1.5, "profile end"},
             {"Y_init", -0.5, "Y(s_a)"}},
            {nonzero("alpha1"), positive("A_o"), nonzero("X_o"), positive("R_o"),
             {"|R_amp| < 1", "|R_amp| must be < 1", [](P q) { return std::abs(at(q, "R_amp")) < 1.0; }},
             {"0 < s_a < s_b", "need 0 < s_a < s_b", [](P q) { return at(q, "s_a") > 0.0 && at(q, "s_a") < at(q, "s_b"); }},
             {"Y_init != arctan(1/alpha1) + k pi", "cos Y - alpha1 sin Y = 0 at Y_init", [](P q) {
                  const double y = at(q, "Y_init");
                  return std::abs(std::cos(y) - at(q, "alpha1") * std::sin(y)) > 1e-6;
              }}},
            nullptr, {{"bz", {"printed-Bz", "exp-Bz"}}, vz_axis, rho_axis});
        d.kind = "reduced";
        cat.push_back(d);
    }
    cat.push_back(closed("G6/alpha2=0", "G6",
                         {{"alpha1", 0.5, ""},
                          {"A_o", 0.5, ""},
                          {"W_o", 0.6, ""},
                          {"X_o", 0.8, ""},
                          {"Z_o", 0.5, ""},
                          {"R_o", 1.0, "R(s) = R_o (1 + R_amp sin s)"},
                          {"R_amp", 0.2, ""},
                          {"Y_o", 0.1, "angle constant of Y"}},
                         {nonzero("alpha1"), positive("A_o"), positive("R_o"),
                          {"|R_amp| < 1", "|R_amp| must be < 1", [](P q) { return std::abs(at(q, "R_amp")) < 1.0; }}},
                         nullptr, form_axis()));

    cat.push_back(closed("G7", "G7",
                         {{"rho_o", 1.3, ""},
                          {"p_o", 1.0, ""},
                          {"E_o", 1.0, ""},
                          {"delta_o", 0.5, ""},
                          {"phi_o", 0.3, ""},
                          {"Z_o", 0.7, ""},
                          {"W_o", 0.2, ""},
                          {"V_o", 0.1, ""}},
                         {positive("rho_o"), positive("p_o"), nonzero("Z_o"), positive("E_o"), nonzero("delta_o"),
                          {"delta_o^2 <= E_o^2/rho_o", "δ_o² > E_o²/ρ_o (solution not real)", [](P q) {
                               const double d = at(q, "delta_o");
                               return d * d <= at(q, "E_o") * at(q, "E_o") / at(q, "rho_o");
                           }}},
                         nullptr, {{"branch", {"continuous", "principal"}}}));

    cat.push_back(closed("G8", "G8",
                         {{"alpha", 0.5, ""},
                          {"beta", 1.2, ""},
                          {"A_o", 0.6, ""},
                          {"W_o", 0.8, ""},
                          {"U_o", 0.3, ""},
                          {"V_o", -0.2, ""},
                          {"X_o", 0.4, ""},
                          {"Y_o", 0.5, ""},
                          {"Z_o", 0.3, ""},
                          {"R_o", 3.0, ""}},
                         {positive("A_o"), positive("W_o"), nonzero("alpha"), positive("beta"),
                          {"R_o > (W_o + beta U_o + alpha V_o)^2 / (2 beta W_o)", "R_o too small (ρ > 0 not guaranteed)",
                           [](P q) {
                               const double k = at(q, "W_o") + at(q, "beta") * at(q, "U_o") + at(q, "alpha") * at(q, "V_o");
                               return at(q, "R_o") > k * k / (2.0 * at(q, "beta") * at(q, "W_o"));
                           }}},
                         nullptr));

    cat.push_back(closed("G9", "G9",
                         {{"alpha", -0.6, ""},
                          {"beta", 1.3, ""},
                          {"C_2", 3.0, ""},
                          {"C_3", 0.4, ""},
                          {"V_o", 0.2, ""},
                          {"Y_o", 0.5, ""},
                          {"Z_o", 0.7, ""}},
                         {positive("beta"),
                          {"-3/4 < alpha < -1/2", "alpha outside (-3/4, -1/2)",
                           [](P q) { return at(q, "alpha") > -0.75 && at(q, "alpha") < -0.5; }},
                          {"Y_o^2 + (1+beta^2) Z_o^2 > 0", "Y_o and Z_o both zero (ρ = 0)", [](P q) {
                               const double b = at(q, "beta");
                               return at(q, "Y_o") * at(q, "Y_o") + (1 + b * b) * at(q, "Z_o") * at(q, "Z_o") > 0.0;
                           }}},
                         fixed(3.0), form_axis()));

    std::vector<ParamInfo> g10{{"A_o", 0.4, ""}, {"C_2", 2.0, ""}, {"U_o", 0.3, ""}, {"V_o", -0.2, ""},
                               {"X_o", 0.5, ""}, {"Y_o", 0.3, ""}, {"Z_o", 0.8, ""}};
    {
        auto p = g10;
        p.insert(p.begin(), ParamInfo{"R_o", 1.5, ""});
        cat.push_back(closed("G10/case1", "G10", p,
                             {{"R_o > 0", "R_o must be > 0 (ρ > 0 on z > -C_2)", [](P q) { return at(q, "R_o") > 0.0; }},
                              positive("A_o"), nonzero("Z_o")},
                             fixed(4.0 / 3.0)));
    }
    cat.push_back(closed("G10/case2", "G10", g10, {positive("A_o"), nonzero("Z_o")}, fixed(5.0 / 4.0)));
    {
        FamilyDescriptor d = closed("G10/general", "G10",
                                    {{"R_o", 1.5, ""},
                                     {"A_o", 0.4, ""},
                                     {"U_o", 0.3, ""},
                                     {"V_o", -0.2, ""},
                                     {"X_o", 0.5, ""},
                                     {"Y_o", 0.3, ""},
                                     {"Z_o", 0.8, ""},
                                     {"z_a", 0.0, "profile start"},
                                     {"z_b", 2.0, "profile end"},
                                     {"W_init", 2.0, "W(z_a)"}},
                                    {positive("R_o"), nonzero("Z_o"), positive("W_init"),
                                     {"z_a < z_b", "profile span empty", [](P q) { return at(q, "z_a") < at(q, "z_b"); }},
                                     {"W_init != a_o^2", "W_init on the Alfvén resonance W = Z_o²/R_o", [](P q) {
                                          return std::abs(at(q, "W_init") - at(q, "Z_o") * at(q, "Z_o") / at(q, "R_o")) > 1e-9;
                                      }}},
                                    nullptr);
        d.kind = "reduced";
        cat.push_back(d);
    }
    return cat;
}

}  // namespace

const std::vector<FamilyDescriptor>& family_catalog() {
    static const std::vector<FamilyDescriptor> cat = build_catalog();
    return cat;
}

const FamilyDescriptor& family_descriptor(std::string_view id) {
    for (const auto& d : family_catalog())
        if (d.id == id) return d;
    throw UnknownFamily(std::string(id));
}

ParamSet validate_params(std::string_view family_id, const ParamSet& raw, const MhdConfig& cfg) {
    const auto& d = family_descriptor(family_id);
    std::vector<std::string> failures;
    ParamSet out;
    for (const auto& pi : d.params) out[pi.name] = pi.name == "gamma" ? cfg.gamma : pi.fallback;
    for (const auto& [k, val] : raw) {
        if (!out.count(k)) {
            failures.push_back("unknown parameter '" + k + "'");
            continue;
        }
        if (!std::isfinite(val)) {
            failures.push_back(k + " is not finite");
            continue;
        }
        out[k] = val;
    }
    if (!failures.empty()) throw ConstraintViolation(d.id, failures);
    for (const auto& c : d.constraints)
        if (!c.holds(out)) failures.push_back(c.violation);
    if (!failures.empty()) throw ConstraintViolation(d.id, failures);
    if (!d.free_gamma) out["gamma"] = d.fixed_gamma(out);
    return out;
}

VariantChoice resolve_variant(std::string_view family_id, std::string_view spec) {
    const auto& d = family_descriptor(family_id);
    VariantChoice out;
    for (const auto& ax : d.variants) out[ax.name] = ax.options.front();
    std::string s(spec);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        pos = end + 1;
        if (tok.empty()) continue;
        bool found = false;
        for (const auto& ax : d.variants)
            if (std::find(ax.options.begin(), ax.options.end(), tok) != ax.options.end()) {
                out[ax.name] = tok;
                found = true;
            }
        if (!found) throw ConstraintViolation(d.id, {"unknown variant '" + tok + "'"});
    }
    return out;
}

std::string variant_string(const VariantChoice& v) {
    std::string s;
    for (const auto& [axis, opt] : v) {
        if (!s.empty()) s += ",";
        s += opt;
    }
    return s.empty() ? "default" : s;
}

}  // namespace mhdlab
