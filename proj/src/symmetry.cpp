#include "mhdlab/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

#include "mhdlab/mhdcheck.hpp"
#include "mhdlab/ode.hpp"

namespace mhdlab {

namespace {

constexpr int RHO = 0, P = 1, V = 2, B = 5;

// tangent of a combo: xi = Lx x + cx, phi = Lu u + cu
struct Linear {
    std::array<std::array<double, 4>, 4> Lx{};
    std::array<double, 4> cx{};
    std::array<std::array<double, 8>, 8> Lu{};
    StateVec cu{};
};

int levi(int k, int i, int j) {
    if (k == i || i == j || k == j) return 0;
    return ((i - k + 3) % 3 == 1) ? 1 : -1;
}

void add_generator(Linear& L, Gen g, double c) {
    const int gi = static_cast<int>(g);
    if (g <= Gen::P3) {
        L.cx[gi] += c;
    } else if (g <= Gen::J3) {
        // eps_kij (x_i d_xj + v_i d_vj + B_i d_Bj)
        const int k = gi - static_cast<int>(Gen::J1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double e = c * levi(k, i, j);
                L.Lx[1 + j][1 + i] += e;
                L.Lu[V + j][V + i] += e;
                L.Lu[B + j][B + i] += e;
            }
    } else if (g <= Gen::K3) {
        const int i = gi - static_cast<int>(Gen::K1);
        L.Lx[1 + i][0] += c;
        L.cu[V + i] += c;
    } else if (g == Gen::F) {
        for (int i = 0; i < 4; ++i) L.Lx[i][i] += c;
    } else if (g == Gen::G) {
        L.Lx[0][0] -= c;
        L.Lu[RHO][RHO] -= 2 * c;
        for (int i = 0; i < 3; ++i) L.Lu[V + i][V + i] += c;
    } else {
        L.Lu[RHO][RHO] += 2 * c;
        L.Lu[P][P] += 2 * c;
        for (int i = 0; i < 3; ++i) L.Lu[B + i][B + i] += c;
    }
}

Linear linear_of(const Combo& c) {
    Linear L;
    for (const auto& t : c.terms()) add_generator(L, t.gen, t.coef);
    return L;
}

using Full = std::array<double, 12>;

Full to_full(const SpacetimePoint& pt, const MhdState& u) {
    Full y{};
    const auto c = pt.coords();
    const auto s = pack(u);
    std::copy(c.begin(), c.end(), y.begin());
    std::copy(s.begin(), s.end(), y.begin() + 4);
    return y;
}

FlowResult from_full(const Full& y) {
    StateVec s;
    std::copy(y.begin() + 4, y.end(), s.begin());
    return {{y[0], y[1], y[2], y[3]}, unpack(s)};
}

// exact flow of c * X over eps
FlowResult flow_single(Gen g, double a, const SpacetimePoint& pt, const MhdState& u0) {
    SpacetimePoint x = pt;
    MhdState u = u0;
    const int gi = static_cast<int>(g);
    if (g == Gen::P0) {
        x.t += a;
    } else if (g <= Gen::P3) {
        std::array<double*, 3> xs{&x.x, &x.y, &x.z};
        *xs[gi - 1] += a;
    } else if (g <= Gen::J3) {
        const int k = gi - static_cast<int>(Gen::J1);
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        const double cs = std::cos(a), sn = std::sin(a);
        auto rot = [&](double& xi, double& xj) {
            const double p = xi, q = xj;
            xi = p * cs - q * sn;
            xj = p * sn + q * cs;
        };
        std::array<double*, 3> xs{&x.x, &x.y, &x.z};
        rot(*xs[i], *xs[j]);
        rot(u.v[i], u.v[j]);
        rot(u.B[i], u.B[j]);
    } else if (g <= Gen::K3) {
        const int i = gi - static_cast<int>(Gen::K1);
        std::array<double*, 3> xs{&x.x, &x.y, &x.z};
        *xs[i] += a * x.t;
        u.v[i] += a;
    } else if (g == Gen::F) {
        const double e = std::exp(a);
        x = {x.t * e, x.x * e, x.y * e, x.z * e};
    } else if (g == Gen::G) {
        x.t *= std::exp(-a);
        u.rho *= std::exp(-2 * a);
        for (auto& c : u.v) c *= std::exp(a);
    } else {
        u.rho *= std::exp(2 * a);
        u.p *= std::exp(2 * a);
        for (auto& c : u.B) c *= std::exp(a);
    }
    return {x, u};
}

double max_diff(const FlowResult& a, const FlowResult& b) {
    const Full p = to_full(a.point, a.state), q = to_full(b.point, b.state);
    double m = 0.0;
    for (int i = 0; i < 12; ++i) m = std::max(m, std::abs(p[i] - q[i]));
    return m;
}

}  // namespace

std::string gen_name(Gen g) {
    static const char* names[] = {"P0", "P1", "P2", "P3", "J1", "J2", "J3", "K1", "K2", "K3", "F", "G", "H"};
    return names[static_cast<int>(g)];
}

StateVec pack(const MhdState& s) {
    return {s.rho, s.p, s.v[0], s.v[1], s.v[2], s.B[0], s.B[1], s.B[2]};
}

MhdState unpack(const StateVec& u) {
    MhdState s;
    s.rho = u[0];
    s.p = u[1];
    s.v = {u[2], u[3], u[4]};
    s.B = {u[5], u[6], u[7]};
    return s;
}

Combo::Combo(std::vector<Term> terms) {
    std::map<int, double> acc;
    for (const auto& t : terms) {
        if (!std::isfinite(t.coef)) throw std::invalid_argument("combo coefficient must be finite");
        acc[static_cast<int>(t.gen)] += t.coef;
    }
    for (auto [g, c] : acc)
        if (c != 0.0) terms_.push_back({c, static_cast<Gen>(g)});
}

Combo Combo::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty combo");
    std::vector<Term> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        double sign = 1.0;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1.0 : 1.0;
            ++i;
        } else if (i != 0) {
            throw std::invalid_argument("combo: expected '+' or '-' at '" + s.substr(i) + "'");
        }
        // a sign right after a mantissa's 'e' belongs to the number ("1e-3*H")
        std::size_t stop = i;
        while (stop < s.size()) {
            const char ch = s[stop];
            if ((ch == '+' || ch == '-') && stop > i &&
                !((s[stop - 1] == 'e' || s[stop - 1] == 'E') && stop >= i + 2 &&
                  (std::isdigit(static_cast<unsigned char>(s[stop - 2])) || s[stop - 2] == '.')))
                break;
            ++stop;
        }
        std::string tok = s.substr(i, stop - i);
        i = stop;
        double coef = 1.0;
        if (auto star = tok.find('*'); star != std::string::npos) {
            const std::string num = tok.substr(0, star);
            std::size_t used = 0;
            try {
                coef = std::stod(num, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != num.size() || num.empty()) throw std::invalid_argument("combo: bad coefficient '" + num + "'");
            tok = tok.substr(star + 1);
        }
        std::string up;
        for (char ch : tok) up += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (up == "PO") up = "P0";
        bool found = false;
        for (Gen g : all_generators)
            if (gen_name(g) == up) {
                terms.push_back({sign * coef, g});
                found = true;
            }
        if (!found) throw std::invalid_argument("combo: unknown generator '" + tok + "'");
    }
    return Combo(std::move(terms));
}

namespace {
// shortest text that round-trips
std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}
}  // namespace

std::string Combo::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += t.coef < 0 ? "-" : "+";
        else if (t.coef < 0) out += "-";
        const double a = std::abs(t.coef);
        if (a != 1.0) out += shortest(a) + "*";
        out += gen_name(t.gen);
    }
    return out;
}

Combo Combo::operator+(const Combo& o) const {
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return Combo(std::move(t));
}

Combo Combo::operator*(double s) const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coef *= s;
    return Combo(std::move(t));
}

Tangent tangent(const Combo& c, const SpacetimePoint& pt, const MhdState& u) {
    const Linear L = linear_of(c);
    const auto x = pt.coords();
    const auto s = pack(u);
    Tangent T;
    for (int i = 0; i < 4; ++i) {
        T.xi[i] = L.cx[i];
        for (int k = 0; k < 4; ++k) T.xi[i] += L.Lx[i][k] * x[k];
    }
    for (int i = 0; i < 8; ++i) {
        T.phi[i] = L.cu[i];
        for (int k = 0; k < 8; ++k) T.phi[i] += L.Lu[i][k] * s[k];
    }
    return T;
}

FlowResult flow(const Combo& c, double eps, const SpacetimePoint& pt, const MhdState& u, double tol) {
    if (c.terms().empty() || eps == 0.0) return {pt, u};
    if (c.single()) return flow_single(c.terms()[0].gen, c.terms()[0].coef * eps, pt, u);

    const Linear L = linear_of(c);
    auto rhs = [&L](double, const State& y, State& dy) {
        for (int i = 0; i < 4; ++i) {
            double a = L.cx[i];
            for (int k = 0; k < 4; ++k) a += L.Lx[i][k] * y[k];
            dy[i] = a;
        }
        for (int i = 0; i < 8; ++i) {
            double a = L.cu[i];
            for (int k = 0; k < 8; ++k) a += L.Lu[i][k] * y[4 + k];
            dy[4 + i] = a;
        }
    };
    const Full y0 = to_full(pt, u);
    OdeOptions opt;
    opt.rtol = tol;
    opt.atol = tol;
    opt.hmax = std::abs(eps) / 8;
    const OdeSolution sol = integrate(rhs, 0.0, State(y0.begin(), y0.end()), eps, opt);
    if (!sol.reached(eps)) throw OdeError("generator flow did not reach eps");
    Full y;
    std::copy(sol.y.back().begin(), sol.y.back().end(), y.begin());
    return from_full(y);
}

AffineAction AffineAction::of(const Combo& c, double eps, double tol) {
    AffineAction a;
    const FlowResult o = flow(c, eps, {}, MhdState{}, tol);
    a.b = o.point.coords();
    a.e = pack(o.state);
    for (int k = 0; k < 4; ++k) {
        std::array<double, 4> x{};
        x[k] = 1.0;
        const auto r = flow(c, eps, SpacetimePoint::from(x), MhdState{}, tol).point.coords();
        for (int i = 0; i < 4; ++i) a.A[i][k] = r[i] - a.b[i];
    }
    for (int k = 0; k < 8; ++k) {
        StateVec u{};
        u[k] = 1.0;
        const auto r = pack(flow(c, eps, {}, unpack(u), tol).state);
        for (int i = 0; i < 8; ++i) a.M[i][k] = r[i] - a.e[i];
    }
    return a;
}

SpacetimePoint AffineAction::apply(const SpacetimePoint& p) const {
    const auto x = p.coords();
    std::array<double, 4> r = b;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i] += A[i][k] * x[k];
    return SpacetimePoint::from(r);
}

JetCoords AffineAction::apply(const JetCoords& p) const {
    JetCoords r;
    for (int i = 0; i < 4; ++i) {
        r[i] = Jet2(b[i]);
        for (int k = 0; k < 4; ++k)
            if (A[i][k] != 0.0) r[i] += A[i][k] * p[k];
    }
    return r;
}

MhdState AffineAction::apply(const MhdState& u) const {
    const StateVec s = pack(u);
    StateVec r = e;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) r[i] += M[i][k] * s[k];
    return unpack(r);
}

FieldJet AffineAction::apply(const FieldJet& u) const {
    const std::array<const Jet2*, 8> s{&u.rho, &u.p, &u.v[0], &u.v[1], &u.v[2], &u.B[0], &u.B[1], &u.B[2]};
    FieldJet out;
    const std::array<Jet2*, 8> r{&out.rho, &out.p, &out.v[0], &out.v[1], &out.v[2], &out.B[0], &out.B[1], &out.B[2]};
    for (int i = 0; i < 8; ++i) {
        *r[i] = Jet2(e[i]);
        for (int k = 0; k < 8; ++k)
            if (M[i][k] != 0.0) *r[i] += M[i][k] * *s[k];
    }
    return out;
}

Pushforward::Pushforward(FieldMapPtr base, Combo combo, double eps, double tol)
    : base_(std::move(base)), combo_(std::move(combo)), eps_(eps) {
    forward_ = AffineAction::of(combo_, eps_, tol);
    inverse_ = AffineAction::of(combo_, -eps_, tol);
}

std::string Pushforward::name() const {
    return base_->name() + " pushed by " + combo_.str() + " eps=" + shortest(eps_);
}

std::optional<std::string> Pushforward::domain_violation(const SpacetimePoint& pt) const {
    const SpacetimePoint q = inverse_.apply(pt);
    if (!q.finite()) return "finite preimage";
    if (auto why = base_->domain_violation(q)) return "preimage: " + *why;
    return std::nullopt;
}

MhdState Pushforward::eval_value(const std::array<double, 4>& c) const {
    return forward_.apply(base_->evaluate(inverse_.apply(SpacetimePoint::from(c))));
}

FieldJet Pushforward::eval_jet(const JetCoords& c) const { return forward_.apply(base_->jet(inverse_.apply(c))); }

FieldMapPtr pushforward(FieldMapPtr base, const Combo& c, double eps) {
    return std::make_shared<Pushforward>(std::move(base), c, eps);
}

InvarianceReport invariance_check(const FamilyPtr& family, const Combo& c, double eps, int n, std::uint64_t seed) {
    const Pushforward pf(family, c, eps);
    InvarianceReport rep;
    const auto cand = sample_points(*family, static_cast<std::size_t>(4 * n), seed);
    for (const auto& q : cand) {
        if (rep.points >= n) break;
        if (family->sampling_violation(pf.preimage(q))) continue;
        const StateVec a = pack(pf.evaluate(q)), b = pack(family->evaluate(q));
        for (int i = 0; i < 8; ++i) {
            const double d = std::abs(a[i] - b[i]);
            rep.deviation = std::max(rep.deviation, d);
            rep.rel_deviation = std::max(rep.rel_deviation, d / std::max(1.0, std::abs(b[i])));
        }
        const ResidualReport r = residual(pf, q);
        rep.residual = std::max(rep.residual, r.max_abs);
        rep.residual_rel = std::max(rep.residual_rel, r.rel);
        ++rep.points;
    }
    return rep;
}

std::vector<Combo> defining_algebra(const SolutionFamily& f) {
    const std::string& id = f.id();
    const std::string group = family_descriptor(id).group;
    auto p = [&](const char* k) { return f.param(k); };
    using enum Gen;
    if (group == "G1") return {Combo(J3) + Combo(K3) + p("alpha") * Combo(H), P1, P2};
    if (group == "G2") return {Combo(J3) + Combo(K3) + p("alpha1") * Combo(P3) + p("alpha2") * Combo(H), K1, K2};
    if (group == "G3") {
        double a1, a2;
        if (id == "G3/case1") a1 = p("alpha1"), a2 = a1 + 1;
        else if (id == "G3/case2" || id == "G3/case3") a1 = 1.0, a2 = p("alpha2");
        else a1 = p("alpha1"), a2 = p("alpha2");
        return {Combo(J3) + Combo(P3) + a1 * Combo(G) + a2 * Combo(H), K1, K2};
    }
    if (group == "G4") return {Combo(F) + p("alpha1") * Combo(G) + (-1.0) * Combo(H), P0, P3};
    if (group == "G5") return {Combo(J3) + p("alpha1") * Combo(G) + p("alpha2") * Combo(H), P0, P3};
    if (group == "G6") {
        const double a2 = id == "G6/alpha2=0" ? 0.0 : p("alpha2");
        return {Combo(J3) + p("alpha1") * (Combo(F) + Combo(G)) + a2 * Combo(H), P0, P3};
    }
    if (group == "G7") return {Combo(J3) + Combo(P3), P1, P2};
    if (group == "G8")
        return {Combo(F) + Combo(G), Combo(K1) + Combo(P2) + p("alpha") * Combo(P3), Combo(P1) + p("beta") * Combo(P2)};
    if (group == "G9") return {Combo(F) + Combo(K3) + p("alpha") * Combo(H), P2, Combo(P3) + p("beta") * Combo(P1)};
    if (group == "G10") return {Combo(G) + 2.0 * Combo(H), K1, K2};
    throw UnknownFamily(id);
}

double commutator_defect(const Combo& a, const Combo& b, double eps, const SpacetimePoint& pt, const MhdState& u) {
    const FlowResult ab0 = flow(b, eps, pt, u);
    const FlowResult ab = flow(a, eps, ab0.point, ab0.state);
    const FlowResult ba0 = flow(a, eps, pt, u);
    const FlowResult ba = flow(b, eps, ba0.point, ba0.state);
    return max_diff(ab, ba);
}

double group_law_defect(const Combo& c, double a, double b, const SpacetimePoint& pt, const MhdState& u) {
    const FlowResult s1 = flow(c, b, pt, u);
    const FlowResult s2 = flow(c, a, s1.point, s1.state);
    return max_diff(s2, flow(c, a + b, pt, u));
}

}  // namespace mhdlab
