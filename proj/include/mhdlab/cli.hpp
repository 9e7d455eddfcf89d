// Command-line front end: list, sample, verify, flow, circulate, fieldline.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhdlab/core.hpp"

namespace mhdlab::cli {

// exit codes
inline constexpr int ok = 0;
inline constexpr int usage_error = 1;
inline constexpr int verification_failed = 2;

// args[0] is the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GridAxis {
    char axis = 't';
    double lo = 0.0, hi = 0.0;
    int n = 1;
};
GridAxis parse_grid(const std::string& text);                   // "x=-1:1:11"
std::pair<char, double> parse_fix(const std::string& text);     // "z=0.5"
std::pair<std::string, double> parse_param(const std::string& text);  // "alpha=0.7"

struct LoopSpec {
    Vec3 center{};
    double radius = 0.1;
    Vec3 normal{0, 0, 1};
    int n = 64;
};
LoopSpec parse_loop(const std::string& text);  // "center=0,0,0,radius=0.5,normal=0,0,1,n=64"

struct VerifyOptions {
    int samples = 1000;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    unsigned threads = 0;
};

// one family x variant; "pass" is max-abs residual < tol
nlohmann::json verify_family(const std::string& id, const ParamSet& raw, const std::string& variant,
                             const VerifyOptions& opt, const MhdConfig& cfg = {});

// every option combination of the family's variant axes, as variant strings
std::vector<std::string> variant_combinations(const std::string& id);

// merge entries into the ledger at `path` (created if missing), keyed by family and variant
void update_ledger(const std::string& path, const nlohmann::json& entries);

}  // namespace mhdlab::cli
