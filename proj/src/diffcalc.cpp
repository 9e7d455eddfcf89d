#include "mhdlab/diffcalc.hpp"

#include <cmath>

namespace mhdlab {

JetCoords seed_coords(const SpacetimePoint& pt) {
    return {Jet2::variable(pt.t, 0), Jet2::variable(pt.x, 1), Jet2::variable(pt.y, 2), Jet2::variable(pt.z, 3)};
}

MhdState FieldMap::evaluate(const SpacetimePoint& pt) const {
    if (!pt.finite()) throw DomainError("finite coordinates");
    if (auto why = domain_violation(pt)) throw DomainError(*why);
    MhdState s = eval_value(pt.coords());
    if (!is_finite(s)) throw DomainError("finite field values");
    return s;
}

FieldJet FieldMap::jet(const SpacetimePoint& pt) const { return jet(seed_coords(pt)); }

FieldJet FieldMap::jet(const JetCoords& c) const {
    const SpacetimePoint pt{c[0].v, c[1].v, c[2].v, c[3].v};
    if (!pt.finite()) throw DomainError("finite coordinates");
    if (auto why = domain_violation(pt)) throw DomainError(*why);
    return eval_jet(c);
}

FieldJet jet_eval(const FieldMap& field, const SpacetimePoint& pt) { return field.jet(pt); }

const std::array<Jet2, 3>& select(const FieldJet& f, VectorSel w) { return w == VectorSel::v ? f.v : f.B; }
const Jet2& select(const FieldJet& f, ScalarSel w) { return w == ScalarSel::rho ? f.rho : f.p; }

Vec3 grad(const Jet2& f) { return {f.g[1], f.g[2], f.g[3]}; }

double div(const std::array<Jet2, 3>& a) { return a[0].g[1] + a[1].g[2] + a[2].g[3]; }

Vec3 curl(const std::array<Jet2, 3>& a) {
    return {a[2].g[2] - a[1].g[3], a[0].g[3] - a[2].g[1], a[1].g[1] - a[0].g[2]};
}

Vec3 values(const std::array<Jet2, 3>& a) { return {a[0].v, a[1].v, a[2].v}; }

Vec3 grad(const FieldJet& f, ScalarSel w) { return grad(select(f, w)); }
double div(const FieldJet& f, VectorSel w) { return div(select(f, w)); }
Vec3 curl(const FieldJet& f, VectorSel w) { return curl(select(f, w)); }

double convective(const FieldJet& f, ScalarSel w) {
    const Jet2& s = select(f, w);
    return s.g[0] + f.v[0].v * s.g[1] + f.v[1].v * s.g[2] + f.v[2].v * s.g[3];
}

Vec3 convective(const FieldJet& f, VectorSel w) {
    const auto& a = select(f, w);
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = a[i].g[0] + f.v[0].v * a[i].g[1] + f.v[1].v * a[i].g[2] + f.v[2].v * a[i].g[3];
    return r;
}

Vec3J1 first(const std::array<Jet2, 3>& a) { return {first(a[0]), first(a[1]), first(a[2])}; }

Vec3J1 curl_j1(const std::array<Jet2, 3>& a) {
    return {partial(a[2], 2) - partial(a[1], 3), partial(a[0], 3) - partial(a[2], 1),
            partial(a[1], 1) - partial(a[0], 2)};
}

Vec3 curl(const Vec3J1& a) {
    return {a[2].g[2] - a[1].g[3], a[0].g[3] - a[2].g[1], a[1].g[1] - a[0].g[2]};
}

double div(const Vec3J1& a) { return a[0].g[1] + a[1].g[2] + a[2].g[3]; }

Vec3J1 cross(const Vec3J1& a, const Vec3J1& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace mhdlab
