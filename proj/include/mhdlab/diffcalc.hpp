// Field maps evaluated on jets, and the vector calculus built on them.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mhdlab/core.hpp"
#include "mhdlab/jet.hpp"

namespace mhdlab {

using FieldJet = FieldState<Jet2>;
using JetCoords = std::array<Jet2, 4>;

JetCoords seed_coords(const SpacetimePoint& pt);

// Anything that maps spacetime points to an MHD state. Implementations
// provide the same formula for plain values and for jets.
class FieldMap {
public:
    virtual ~FieldMap() = default;

    virtual std::string name() const = 0;
    virtual double gamma() const = 0;
    // empty when the point is admissible, otherwise the violated condition
    virtual std::optional<std::string> domain_violation(const SpacetimePoint& pt) const = 0;

    MhdState evaluate(const SpacetimePoint& pt) const;
    FieldJet jet(const SpacetimePoint& pt) const;
    // coordinates may themselves be jets of other variables (chain rule)
    FieldJet jet(const JetCoords& coords) const;

protected:
    virtual MhdState eval_value(const std::array<double, 4>& c) const = 0;
    virtual FieldJet eval_jet(const JetCoords& c) const = 0;
};

using FieldMapPtr = std::shared_ptr<const FieldMap>;

// Adapts a generic callable `f(const auto& t, x, y, z) -> FieldState<T>`.
template <class F>
class GenericField final : public FieldMap {
public:
    GenericField(std::string name, double gamma, F f) : name_(std::move(name)), gamma_(gamma), f_(std::move(f)) {}
    std::string name() const override { return name_; }
    double gamma() const override { return gamma_; }
    std::optional<std::string> domain_violation(const SpacetimePoint&) const override { return std::nullopt; }

protected:
    MhdState eval_value(const std::array<double, 4>& c) const override { return f_(c[0], c[1], c[2], c[3]); }
    FieldJet eval_jet(const JetCoords& c) const override { return f_(c[0], c[1], c[2], c[3]); }

private:
    std::string name_;
    double gamma_;
    F f_;
};

template <class F>
FieldMapPtr make_field(std::string name, double gamma, F f) {
    return std::make_shared<GenericField<F>>(std::move(name), gamma, std::move(f));
}

FieldJet jet_eval(const FieldMap& field, const SpacetimePoint& pt);

enum class VectorSel { v, B };
enum class ScalarSel { rho, p };

const std::array<Jet2, 3>& select(const FieldJet& f, VectorSel w);
const Jet2& select(const FieldJet& f, ScalarSel w);

// spatial operators on the (x, y, z) slots
Vec3 grad(const Jet2& f);
double div(const std::array<Jet2, 3>& a);
Vec3 curl(const std::array<Jet2, 3>& a);

Vec3 grad(const FieldJet& f, ScalarSel w);
double div(const FieldJet& f, VectorSel w);
Vec3 curl(const FieldJet& f, VectorSel w);
double convective(const FieldJet& f, ScalarSel w);
Vec3 convective(const FieldJet& f, VectorSel w);

// first-order jet versions, for quantities built from one derivative already
using Vec3J1 = std::array<Jet1, 3>;
Vec3J1 first(const std::array<Jet2, 3>& a);
Vec3J1 curl_j1(const std::array<Jet2, 3>& a);  // curl with its own first derivatives
Vec3 curl(const Vec3J1& a);
double div(const Vec3J1& a);
Vec3J1 cross(const Vec3J1& a, const Vec3J1& b);

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 values(const std::array<Jet2, 3>& a);

}  // namespace mhdlab
