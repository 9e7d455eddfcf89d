// Reduced ODE systems left open in closed form: solvers, interpolated
// profiles, assembled fields and the reduced-equation residual functionals.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "mhdlab/ode.hpp"
#include "mhdlab/solutions.hpp"

namespace mhdlab {

using JetState = std::vector<Jet2>;
using JetRhs = std::function<void(const Jet2& s, const JetState& y, JetState& dy)>;

class ReducedProfile {
public:
    struct Sample {
        State value, d1, d2;  // state and its first two derivatives in s
    };

    ReducedProfile(std::string system, std::vector<std::string> columns, OdeRhs f, JetRhs fj,
                   const OdeSolution& sol);

    const std::string& system() const { return system_; }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<double>& grid() const { return s_; }
    const std::vector<State>& states() const { return y_; }
    const std::vector<double>& local_errors() const { return err_; }
    double s_min() const { return s_.front(); }
    double s_max() const { return s_.back(); }
    bool contains(double s) const { return s >= s_min() && s <= s_max(); }

    // bound on |interpolated - exact| (accumulated local errors plus the
    // Hermite/dense-output discrepancy)
    double error_estimate() const { return error_estimate_; }

    // cubic Hermite value with analytic slopes; derivatives from the ODE
    // right-hand side at the interpolated state
    Sample sample(double s) const;
    // each state component as a jet of whatever `s` is a jet of
    JetState lift_state(const Jet2& s) const;

    // grid, states, local error estimate per row (%.17g)
    std::string to_csv() const;

private:
    std::string system_;
    std::vector<std::string> columns_;
    OdeRhs f_;
    JetRhs fj_;
    std::vector<double> s_;
    std::vector<State> y_, dy_;
    std::vector<double> err_;
    double error_estimate_ = 0.0;
};

using ProfilePtr = std::shared_ptr<const ReducedProfile>;

// an event (singular surface) reached before the end of the span
class ProfileEvent : public std::runtime_error {
public:
    ProfileEvent(std::string what, double where)
        : std::runtime_error(what + " at s = " + std::to_string(where)), where_(where) {}
    double where() const { return where_; }

private:
    double where_;
};

struct Span {
    double a = 0.0, b = 1.0;
};

// r Y' = alpha2 beta_o r^2 cos^2 Y + alpha2 with theta' = tan Y / r; state (Y, theta)
ProfilePtr solve_g5(const ParamSet& params, Span r_span, double Y0, double tol);
// spiral equation with the two angle integrals carried as state; state (Y, theta1, theta2)
ProfilePtr solve_g6(const ParamSet& params, Span s_span, double Y0, double tol);
// G3 reduced equation solved for W'; state (W, F = int ds/W). `corrected` selects the magnetic term.
ProfilePtr solve_g3_general(const ParamSet& params, Span s_span, double W0, double tol, bool corrected);
// G10 reduced equation solved for W'; state (W, I1 = int dz/W, I2 = int dz/(W - a^2))
ProfilePtr solve_g10_general(const ParamSet& params, Span z_span, double W0, double tol);

double beta_o(const ParamSet& params);  // (2 A_o + Z_o^2) / X_o^2

FamilyPtr assemble_field(ProfilePtr profile, const std::string& family_id, const ParamSet& params,
                         const VariantChoice& variant);
// used by make_family for ids of kind "reduced"
FamilyPtr make_reduced_family(const std::string& id, const ParamSet& params, const VariantChoice& variant,
                              const MhdConfig& cfg);
// the profile behind a family built by make_reduced_family (null otherwise)
ProfilePtr profile_of(const SolutionFamily& family);

// ---- residual functionals of the reduced equations ----

struct FunctionalValue {
    double value = 0.0;
    double scale = 0.0;  // largest individual term
    double rel() const { return std::abs(value) / std::max(1.0, scale); }
};

// G3 reduced equation at (W, W', F); params need alpha1, alpha2, A_o, R_o, X_o, gamma
FunctionalValue g3_reduced_functional(const ParamSet& p, double W, double dW, double F, bool corrected);
// G10 reduced equation at (W, W', I1, I2); params need R_o, A_o, X_o, Y_o, Z_o, gamma
FunctionalValue g10_reduced_functional(const ParamSet& p, double W, double dW, double I1, double I2);

struct AnsatzReport {
    std::string label;
    ParamSet params;  // the full parameter set the functional was evaluated with
    double max_abs = 0.0;
    double max_rel = 0.0;
    int points = 0;
};

// Case k (1..5) with its defining relations imposed on `base`; W = C1 s + C2 along n points
AnsatzReport g3_ansatz_check(int case_no, const ParamSet& base, int n = 100);
// Case 1 (C1 = 1, gamma = 4/3) or Case 2 (C1 = 2/3, gamma = 5/4, R_o = 2 A_o + X_o^2 + Y_o^2)
AnsatzReport g10_ansatz_check(int case_no, const ParamSet& base, int n = 100);

// G9 system on the closed branch: f = xi = C_2 - s/2, gamma = 3.
struct G9Reduced {
    double a = 0.0;            // f - (U - beta W - s + beta)
    double b_printed = 0.0;    // beta U' + W' + 1
    double b_corrected = 0.0;  // beta U' + W' + 1/f
    double c = 0.0;            // the f equation
    double c_scale = 0.0;
};
G9Reduced g9_reduced(const ParamSet& params, double s);

}  // namespace mhdlab
