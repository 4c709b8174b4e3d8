#ifndef QCMP_STATES_HPP
#define QCMP_STATES_HPP

#include <vector>

#include "qcmp/errors.hpp"
#include "qcmp/types.hpp"

namespace qcmp {

/// Unit-norm pure state in a finite-dimensional Hilbert space (d >= 2).
/// Amplitudes are stored normalized but not phase-canonicalized.
class PureState {
  public:
    /// Normalizes the given amplitude vector. Throws ZeroVectorError on a
    /// (numerically) zero vector and DimensionError when length < 2.
    explicit PureState(Vec amplitudes);

    int dim() const { return static_cast<int>(amps_.size()); }
    const Vec& amplitudes() const { return amps_; }

  private:
    Vec amps_;
};

PureState make_state(const Vec& amplitudes);

/// |<a|b>|^2, in [0,1]. Symmetric and global-phase invariant.
double fidelity(const PureState& a, const PureState& b);

/// Ordered list of n >= 2 states sharing one dimension.
class StateEnsemble {
  public:
    explicit StateEnsemble(std::vector<PureState> states);

    int size() const { return static_cast<int>(states_.size()); }
    int dim() const { return states_.front().dim(); }
    const std::vector<PureState>& states() const { return states_; }
    const PureState& operator[](int i) const { return states_[static_cast<std::size_t>(i)]; }

  private:
    std::vector<PureState> states_;
};

/// Average pairwise fidelity C = 2/(n(n-1)) sum_{i<j} |<psi_i|psi_j>|^2.
double closeness(const StateEnsemble& e);

enum class ThresholdRegime { below_cmin_invalid, at_cmin, interior, at_one };

/// Threshold A, admissible only within [c_min(n,d), 1].
class ThresholdSpec {
  public:
    /// Throws ThresholdRangeError when classify(value, n, d) is invalid.
    ThresholdSpec(double value, int n, int d);

    static ThresholdRegime classify(double value, int n, int d);

    double value() const { return value_; }
    ThresholdRegime regime() const { return regime_; }

  private:
    double value_;
    ThresholdRegime regime_;
};

/// Ground-truth classifier closeness(e) >= A. This is exactly the decision
/// the no-go theorem forbids for unknown states; here the states are known.
bool threshold_predicate(const StateEnsemble& e, const ThresholdSpec& t);

} // namespace qcmp

#endif
