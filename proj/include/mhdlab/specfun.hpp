// Gauss hypergeometric function and the real-part inverse hyperbolic tangent.
#pragma once

#include <stdexcept>
#include <string>

#include "mhdlab/jet.hpp"

namespace mhdlab {

class SpecfunError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Hyp2F1Args {
    double a = 0.0, b = 0.0, c = 1.0, z = 0.0;
};

struct Hyp2F1Result {
    double value = 0.0;
    double truncation_bound = 0.0;  // estimated absolute size of the discarded series tail
    std::string method;             // "series", "pfaff", "one-minus-z", ...
};

Hyp2F1Result hyp2f1_eval(const Hyp2F1Args& args);
double hyp2f1(double a, double b, double c, double z);

struct ArtanhResult {
    double value = 0.0;
    bool principal_real_part = false;  // set for |x| > 1
};

ArtanhResult artanh(double x);

// jet version; derivatives are 1/(1-x^2) on both sides of |x| = 1
Jet2 artanh_real(const Jet2& x);
inline double artanh_real(double x) { return artanh(x).value; }

}  // namespace mhdlab
