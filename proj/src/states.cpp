#include "qcmp/states.hpp"

#include <cmath>
#include <utility>

#include "qcmp/extremal.hpp"

namespace qcmp {

namespace {
constexpr double kZeroNormFloor = 1e-300;
}

PureState::PureState(Vec amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw DimensionError("state dimension must be at least 2, got " +
                             std::to_string(amps_.size()));
    }
    const double norm = amps_.norm();
    if (!(norm > kZeroNormFloor)) {
        throw ZeroVectorError("cannot normalize a zero amplitude vector");
    }
    // Near-unit inputs are kept bit-exact so parsed states round-trip.
    if (std::abs(norm - 1.0) > 1e-12) {
        amps_ /= norm;
    }
}

PureState make_state(const Vec& amplitudes) { return PureState(amplitudes); }

double fidelity(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("fidelity of states with dimensions " +
                             std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

StateEnsemble::StateEnsemble(std::vector<PureState> states) : states_(std::move(states)) {
    if (states_.size() < 2) {
        throw DimensionError("an ensemble needs at least 2 states, got " +
                             std::to_string(states_.size()));
    }
    const int d = states_.front().dim();
    for (const PureState& s : states_) {
        if (s.dim() != d) {
            throw DimensionError("ensemble states must share one dimension");
        }
    }
}

double closeness(const StateEnsemble& e) {
    const int n = e.size();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            sum += fidelity(e[i], e[j]);
        }
    }
    return 2.0 * sum / (static_cast<double>(n) * (n - 1));
}

ThresholdRegime ThresholdSpec::classify(double value, int n, int d) {
    const double lo = c_min(n, d);
    if (value < lo || value > 1.0 || !std::isfinite(value)) {
        return ThresholdRegime::below_cmin_invalid;
    }
    if (value == lo) return ThresholdRegime::at_cmin;
    if (value == 1.0) return ThresholdRegime::at_one;
    return ThresholdRegime::interior;
}

ThresholdSpec::ThresholdSpec(double value, int n, int d)
    : value_(value), regime_(classify(value, n, d)) {
    if (regime_ == ThresholdRegime::below_cmin_invalid) {
        throw ThresholdRangeError("threshold " + std::to_string(value) +
                                  " outside [c_min(" + std::to_string(n) + "," +
                                  std::to_string(d) + "), 1]");
    }
}

bool threshold_predicate(const StateEnsemble& e, const ThresholdSpec& t) {
    // Re-validate against this ensemble's (n, d): the spec was possibly built
    // for a different context.
    if (ThresholdSpec::classify(t.value(), e.size(), e.dim()) ==
        ThresholdRegime::below_cmin_invalid) {
        throw ThresholdRangeError("threshold inadmissible for this ensemble");
    }
    const double c = closeness(e);
    // Boundary guard: values within 1e-12 of the threshold count as meeting
    // it, so exact closed-form boundary cases are stable under rounding.
    return c >= t.value() - 1e-12;
}

} // namespace qcmp
