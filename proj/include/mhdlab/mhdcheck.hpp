// Residuals of the ideal-MHD system and of the relations derived from it.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhdlab/diffcalc.hpp"

namespace mhdlab {

struct ResidualReport {
    double continuity = 0.0;
    Vec3 momentum{};
    double pressure = 0.0;
    Vec3 induction{};
    double divB = 0.0;
    double max_abs = 0.0;
    double rel = 0.0;  // max over equations of |residual| / max(1, largest term)
};

nlohmann::json to_json(const ResidualReport& r);

// all equations from one jet at `pt`; throws DomainError outside the domain
ResidualReport residual(const FieldMap& field, const SpacetimePoint& pt);
ResidualReport residual(const FieldMap& field, const FieldJet& f);

Vec3 current_density(const FieldMap& field, const SpacetimePoint& pt);

struct ForceDecomposition {
    Vec3 lorentz{};        // J x B
    Vec3 pressure_part{};  // -grad(|B|^2)/2
    Vec3 tension_part{};   // (B . grad) B
};
ForceDecomposition force_decomposition(const FieldMap& field, const SpacetimePoint& pt);

// d/dt(B/rho) - ((B/rho) . grad) v
Vec3 frozen_in_residual(const FieldMap& field, const SpacetimePoint& pt);

struct VorticityTransport {
    Vec3 residual{};  // d(omega)/dt - curl(v x omega) - curl(F_m / rho)
    Vec3 omega{};
    Vec3 domega_dt{};
    Vec3 curl_force{};  // curl(F_m / rho)
};
VorticityTransport vorticity_transport(const FieldMap& field, const SpacetimePoint& pt);
Vec3 vorticity(const FieldMap& field, const SpacetimePoint& pt);

// Energy balance with Poynting-like flux s * (B.v) B; s = -1 is the standard
// one, s = +1 the literal transcription. Both are offered.
struct EnergyLaw {
    double residual = 0.0;
    double scale = 0.0;
};
EnergyLaw energy_law_residual(const FieldMap& field, const SpacetimePoint& pt, double flux_sign = -1.0);

bool is_force_free(const FieldMap& field, const SpacetimePoint& pt, double tol);

// B . grad(rho) or B . grad(p)
double field_aligned_gradient(const FieldMap& field, const SpacetimePoint& pt, ScalarSel which);
// (B . grad) v
Vec3 b_dot_grad_v(const FieldMap& field, const SpacetimePoint& pt);

// radial and azimuthal components of grad(p + |B|^2/2) - (B . grad) B
std::array<double, 2> cylindrical_balance(const FieldMap& field, const SpacetimePoint& pt);

// ---- sample sweeps ----

struct SweepSummary {
    std::size_t points = 0;
    double max_abs = 0.0;
    double max_rel = 0.0;
    double max_divB = 0.0;
    ResidualReport max_norms;  // componentwise max of |residual| over the points
    ResidualReport worst;      // report at the point of largest rel
    SpacetimePoint worst_point;
    std::string worst_equation;
};

// max-reduction over the points, run on up to `threads` workers (0: all cores,
// capped by MHDLAB_THREADS)
SweepSummary sweep(const FieldMap& field, const std::vector<SpacetimePoint>& pts, unsigned threads = 0);

// name of the equation with the largest relative residual
std::string dominant_equation(const FieldMap& field, const SpacetimePoint& pt);

unsigned thread_count(unsigned requested = 0);

}  // namespace mhdlab
