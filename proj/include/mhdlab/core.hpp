// Shared value types, coordinate conversions and parameter validation.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mhdlab {

using Vec3 = std::array<double, 3>;

struct SpacetimePoint {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    std::array<double, 4> coords() const { return {t, x, y, z}; }
    static SpacetimePoint from(const std::array<double, 4>& c) { return {c[0], c[1], c[2], c[3]}; }
    bool finite() const;
};

// rho, p, v, B; T is double for values or Jet2 for derivative queries
template <class T>
struct FieldState {
    T rho{};
    T p{};
    std::array<T, 3> v{};
    std::array<T, 3> B{};
};
using MhdState = FieldState<double>;

bool is_finite(const MhdState& s);

struct CylComponents {
    double r = 0.0, phi = 0.0, z = 0.0;
    Vec3 vec{};  // (a_r, a_phi, a_z)
};

struct MhdConfig {
    double gamma = 5.0 / 3.0;  // default for families whose gamma is free
    double residual_tol = 1e-8;
    double ode_tol = 1e-10;
    double quad_tol = 1e-10;
};

// ---- errors ----

class DomainError : public std::runtime_error {
public:
    explicit DomainError(std::string condition)
        : std::runtime_error("point outside domain: " + condition), condition_(std::move(condition)) {}
    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

class ConstraintViolation : public std::invalid_argument {
public:
    ConstraintViolation(std::string family, std::vector<std::string> failures);
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

class UnknownFamily : public std::invalid_argument {
public:
    explicit UnknownFamily(const std::string& id) : std::invalid_argument("unknown family id: " + id) {}
};

// ---- coordinates ----

// returns (position, vector) in Cartesian components; throws DomainError at r = 0
std::pair<Vec3, Vec3> cyl_to_cart(const CylComponents& q);
CylComponents cart_to_cyl(const Vec3& position, const Vec3& vec);

// ---- parameters ----

using ParamSet = std::map<std::string, double>;

struct ParamInfo {
    std::string name;
    double fallback;  // used when the caller does not supply the value
    std::string note;
};

struct Constraint {
    std::string statement;  // what must hold
    std::string violation;  // message when it does not
    std::function<bool(const ParamSet&)> holds;
};

struct VariantAxis {
    std::string name;
    std::vector<std::string> options;  // options.front() is the default
};

struct FamilyDescriptor {
    std::string id;
    std::string group;  // "G1" ... "G10"
    std::string kind;   // "closed" or "reduced"
    std::vector<ParamInfo> params;
    std::vector<Constraint> constraints;
    std::vector<VariantAxis> variants;
    bool free_gamma = false;
    std::function<double(const ParamSet&)> fixed_gamma;  // set when !free_gamma
};

const std::vector<FamilyDescriptor>& family_catalog();
const FamilyDescriptor& family_descriptor(std::string_view id);

// Merges fallbacks, rejects unknown names, checks every constraint and
// throws ConstraintViolation naming all failures. The returned set always
// contains "gamma".
ParamSet validate_params(std::string_view family_id, const ParamSet& raw, const MhdConfig& cfg = {});

// axis name -> chosen option; tokens are comma separated option names
using VariantChoice = std::map<std::string, std::string>;
VariantChoice resolve_variant(std::string_view family_id, std::string_view spec);
std::string variant_string(const VariantChoice& v);

}  // namespace mhdlab
