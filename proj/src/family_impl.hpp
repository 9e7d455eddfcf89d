// Internal helpers shared by the closed-form and profile-backed families.
#pragma once

#include <cmath>
#include <numbers>

#include "mhdlab/solutions.hpp"
#include "mhdlab/specfun.hpp"

namespace mhdlab::detail {

template <class T>
using FS = FieldState<T>;

// Implements both evaluators from one `field<T>(t, x, y, z)` template.
template <class D, class Base = SolutionFamily>
class FamilyBase : public Base {
public:
    using Base::Base;

protected:
    MhdState eval_value(const std::array<double, 4>& c) const override {
        return static_cast<const D&>(*this).template field<double>(c[0], c[1], c[2], c[3]);
    }
    FieldJet eval_jet(const JetCoords& c) const override {
        return static_cast<const D&>(*this).template field<Jet2>(c[0], c[1], c[2], c[3]);
    }
};

template <class T>
T sq(const T& a) {
    return a * a;
}

// (a_r, a_phi) at angle with cos c, sin s -> (a_x, a_y)
template <class T>
std::array<T, 2> polar_to_cart(const T& ar, const T& aphi, const T& c, const T& s) {
    return {ar * c - aphi * s, ar * s + aphi * c};
}

inline std::optional<std::string> fail(const char* why) { return std::string(why); }

// true when (x, y) lies on or near the negative x axis, where atan2 jumps
inline bool near_branch_cut(double x, double y, double margin) {
    return std::abs(std::atan2(y, x)) > std::numbers::pi - margin;
}

}  // namespace mhdlab::detail
