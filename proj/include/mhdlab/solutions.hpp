// Closed-form solution families and their static descriptors.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhdlab/core.hpp"
#include "mhdlab/diffcalc.hpp"

namespace mhdlab {

struct SampleBox {
    std::array<double, 2> t{0.0, 1.0}, x{-1.0, 1.0}, y{-1.0, 1.0}, z{-1.0, 1.0};
};

// A family instance: validated parameters plus variant choices.
class SolutionFamily : public FieldMap {
public:
    SolutionFamily(std::string id, ParamSet params, VariantChoice variant);

    const std::string& id() const { return id_; }
    const ParamSet& params() const { return params_; }
    const VariantChoice& variant() const { return variant_; }
    double param(const std::string& key) const;
    bool variant_is(const std::string& axis, const std::string& option) const;

    std::string name() const override;
    double gamma() const override { return params_.at("gamma"); }

    virtual SampleBox sample_box() const = 0;
    // stricter than the domain; keeps random points away from singular sets
    virtual std::optional<std::string> sampling_violation(const SpacetimePoint& pt) const {
        return domain_violation(pt);
    }
    // constants computed from the parameters (e.g. a_o^2)
    virtual ParamSet derived_constants() const { return {}; }

private:
    std::string id_;
    ParamSet params_;
    VariantChoice variant_;
};

using FamilyPtr = std::shared_ptr<const SolutionFamily>;

// Validates `raw` against the catalog and builds the family. Reduced
// families integrate their profile here.
FamilyPtr make_family(std::string_view id, const ParamSet& raw = {}, std::string_view variant = "",
                      const MhdConfig& cfg = {});

struct FamilyMetadata {
    std::string id;
    std::string b_configuration;  // "planar" (B3 = 0) or "full"
    bool stationary = false;
    bool compressible = true;
    std::string wave;
    std::string force;  // "force-free", "pressure-only", "tension-only", "mixed", "none"
    bool circulation_conserved = true;
};

const FamilyMetadata& family_metadata(std::string_view id);

// the sub-cases with explicit formulas (no integrated profile)
std::vector<std::string> closed_form_ids();

// Deterministic uniform draws (mt19937_64, 53-bit mantissa) inside the sample
// box, rejecting points that violate the sampling predicate.
std::vector<SpacetimePoint> sample_points(const SolutionFamily& family, std::size_t n, std::uint64_t seed);

double uniform01(std::uint64_t word);

}  // namespace mhdlab
