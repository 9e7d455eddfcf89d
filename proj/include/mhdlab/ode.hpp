// Dormand–Prince 5(4) integrator with dense output and stop events.
#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhdlab {

using State = std::vector<double>;
using OdeRhs = std::function<void(double t, const State& y, State& dydt)>;
// returns a reason when integration must stop before reaching the state
using OdeEvent = std::function<std::optional<std::string>(double t, const State& y)>;

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h0 = 0.0;  // 0: automatic
    double hmax = std::numeric_limits<double>::infinity();
    long max_steps = 2'000'000;
    OdeEvent event;
};

class OdeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OdeSolution {
    std::vector<double> t;
    std::vector<State> y;
    std::vector<double> local_error;  // max-norm of the embedded estimate for the step ending at t[i]
    std::vector<std::array<State, 5>> dense;  // per step (t[i-1], t[i]], index i-1
    std::optional<std::string> event;         // set if an event stopped the run
    double event_t = 0.0;
    long rejected = 0;

    bool reached(double t_end) const { return !event && !t.empty() && t.back() == t_end; }
    State at(double tq) const;  // dense output, tq inside [t.front(), t.back()]
};

OdeSolution integrate(const OdeRhs& f, double t0, const State& y0, double t1, const OdeOptions& opt = {});

}  // namespace mhdlab
