// The 13 Galilean-similitude generators, their flows, and pushforwards of
// solutions under them.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mhdlab/diffcalc.hpp"
#include "mhdlab/solutions.hpp"

namespace mhdlab {

enum class Gen { P0, P1, P2, P3, J1, J2, J3, K1, K2, K3, F, G, H };

inline constexpr std::array<Gen, 13> all_generators{Gen::P0, Gen::P1, Gen::P2, Gen::P3, Gen::J1,
                                                    Gen::J2, Gen::J3, Gen::K1, Gen::K2, Gen::K3,
                                                    Gen::F,  Gen::G,  Gen::H};

std::string gen_name(Gen g);

// (rho, p, v1, v2, v3, B1, B2, B3)
using StateVec = std::array<double, 8>;
StateVec pack(const MhdState& s);
MhdState unpack(const StateVec& u);

struct Tangent {
    std::array<double, 4> xi{};  // (t, x, y, z) components
    StateVec phi{};
};

class Combo {
public:
    struct Term {
        double coef;
        Gen gen;
    };

    Combo() = default;
    Combo(Gen g) : terms_{{1.0, g}} {}  // NOLINT
    explicit Combo(std::vector<Term> terms);

    // "J3+K3+0.5*H", "F - 2*G", "0.3*P1"
    static Combo parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    bool single() const { return terms_.size() == 1; }
    std::string str() const;

    Combo operator+(const Combo& o) const;
    Combo operator*(double s) const;

private:
    std::vector<Term> terms_;  // one term per generator, nonzero coefficients, fixed order
};

inline Combo operator*(double s, const Combo& c) { return c * s; }
inline Combo operator+(Gen a, Gen b) { return Combo(a) + Combo(b); }

Tangent tangent(const Combo& c, const SpacetimePoint& pt, const MhdState& u);

struct FlowResult {
    SpacetimePoint point;
    MhdState state;
};

// Closed form for a single generator, Dormand-Prince integration otherwise.
FlowResult flow(const Combo& c, double eps, const SpacetimePoint& pt, const MhdState& u, double tol = 1e-12);

// Every combo acts affinely, with the point part independent of the state:
// x' = A x + b, u' = M u + e.
struct AffineAction {
    std::array<std::array<double, 4>, 4> A{};
    std::array<double, 4> b{};
    std::array<std::array<double, 8>, 8> M{};
    StateVec e{};

    static AffineAction of(const Combo& c, double eps, double tol = 1e-12);
    SpacetimePoint apply(const SpacetimePoint& p) const;
    JetCoords apply(const JetCoords& p) const;
    MhdState apply(const MhdState& u) const;
    FieldJet apply(const FieldJet& u) const;
};

// u~(x~) = flow of u at the inverse-flowed point
class Pushforward final : public FieldMap {
public:
    Pushforward(FieldMapPtr base, Combo combo, double eps, double tol = 1e-12);

    std::string name() const override;
    double gamma() const override { return base_->gamma(); }
    std::optional<std::string> domain_violation(const SpacetimePoint& pt) const override;

    SpacetimePoint preimage(const SpacetimePoint& pt) const { return inverse_.apply(pt); }
    const Combo& combo() const { return combo_; }
    double eps() const { return eps_; }

protected:
    MhdState eval_value(const std::array<double, 4>& c) const override;
    FieldJet eval_jet(const JetCoords& c) const override;

private:
    FieldMapPtr base_;
    Combo combo_;
    double eps_;
    AffineAction forward_, inverse_;
};

FieldMapPtr pushforward(FieldMapPtr base, const Combo& c, double eps);

struct InvarianceReport {
    double deviation = 0.0;      // max |u~ - u| over points and components
    double rel_deviation = 0.0;  // same, each component over max(1, |u|)
    double residual = 0.0;       // max-abs MHD residual of u~
    double residual_rel = 0.0;
    int points = 0;
};

// Points are drawn from the family's sampler and kept when their preimage
// still passes its sampling predicate.
InvarianceReport invariance_check(const FamilyPtr& family, const Combo& c, double eps, int n = 200,
                                  std::uint64_t seed = 7);

// The subalgebra under which the family is invariant, with its parameters
// substituted. Profile-backed families use the same list.
std::vector<Combo> defining_algebra(const SolutionFamily& family);

// max-abs difference between flow(a) o flow(b) and flow(b) o flow(a)
double commutator_defect(const Combo& a, const Combo& b, double eps, const SpacetimePoint& pt, const MhdState& u);
// max-abs difference between flow(a) o flow(b) and flow(a + b)
double group_law_defect(const Combo& c, double a, double b, const SpacetimePoint& pt, const MhdState& u);

}  // namespace mhdlab
