// Material points and loops carried by the flow, circulation around them,
// and magnetic field lines.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhdlab/diffcalc.hpp"
#include "mhdlab/solutions.hpp"

namespace mhdlab {

// a trajectory left the field's domain
class AdvectionError : public std::runtime_error {
public:
    AdvectionError(std::string why, double exit_time, std::size_t index);
    double exit_time() const { return exit_time_; }
    std::size_t index() const { return index_; }

private:
    double exit_time_;
    std::size_t index_;
};

struct AdvectResult {
    std::vector<Vec3> points;
    double error_estimate = 0.0;  // max over points of the summed local errors
};

// dx/dt = v(x, t) from t0 to t1 for every point; points run in parallel
AdvectResult advect(const FieldMap& field, const std::vector<Vec3>& points, double t0, double t1,
                    double tol = 1e-11, unsigned threads = 0);

class MaterialLoop {
public:
    // closed polyline: the last point connects back to the first
    MaterialLoop(std::vector<Vec3> points, double t);

    static MaterialLoop circle(const Vec3& center, double radius, const Vec3& normal, int n, double t);

    const std::vector<Vec3>& points() const { return pts_; }
    double t() const { return t_; }
    std::size_t size() const { return pts_.size(); }

private:
    std::vector<Vec3> pts_;
    double t_;
};

MaterialLoop advect(const FieldMap& field, const MaterialLoop& loop, double t1, double tol = 1e-11);

struct Circulation {
    double value = 0.0;
    double error = 0.0;  // |value - value on every other point| (or secant rule for odd N)
};

// trapezoid rule in the loop parameter with spectrally differentiated positions
Circulation circulation(const FieldMap& field, const MaterialLoop& loop);
// loop integral of an arbitrary vector function a(x) . dl at the loop's time
Circulation loop_integral(const MaterialLoop& loop, const std::function<Vec3(const SpacetimePoint&)>& a);

struct RateCheck {
    double t = 0.0;
    double gamma = 0.0;
    double dgamma_dt = 0.0;        // central difference of the advected loop
    double dgamma_dt_error = 0.0;  // change when dt is halved
    double acceleration = 0.0;     // loop integral of (J x B - grad p) / rho
    double tension = 0.0;          // loop integral of (B . grad) B / rho
};

RateCheck circulation_rate_check(const FieldMap& field, const MaterialLoop& loop, double tol = 1e-12);

struct CirculationVerdict {
    bool conserved = true;
    double max_rate = 0.0;   // largest |dGamma/dt| over the loops
    double max_accel = 0.0;  // largest |loop integral of the acceleration|
    int loops = 0;
};

// small generic loops at sampled points; conserved when every |dGamma/dt| < threshold
CirculationVerdict circulation_verdict(const FamilyPtr& family, int loops = 3, std::uint64_t seed = 11,
                                       double threshold = 1e-6);

struct FieldLine {
    double t = 0.0;
    std::vector<Vec3> points;
    std::vector<double> arclength;
    std::string stop_reason;  // empty when the whole span was traced
    double error_estimate = 0.0;
};

// dx/ds = B / |B| at fixed t; stops at the domain boundary or where |B| < 1e-12
FieldLine trace_field_line(const FieldMap& field, const Vec3& seed, double t, double span, double tol = 1e-10);

// rows "t,x,y,z" with %.17g
std::string polyline_csv(const std::vector<Vec3>& pts, double t);

}  // namespace mhdlab
