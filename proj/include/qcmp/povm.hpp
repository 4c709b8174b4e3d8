#ifndef QCMP_POVM_HPP
#define QCMP_POVM_HPP

#include <string>
#include <vector>

#include "qcmp/states.hpp"

namespace qcmp {

/// Dense operator on the composite space H^{tensor n}, D = d^n.
class CompositeOperator {
  public:
    CompositeOperator(int factors, int local_dim, Mat matrix);

    int factors() const { return factors_; }
    int local_dim() const { return local_dim_; }
    long dim() const { return matrix_.rows(); }
    const Mat& matrix() const { return matrix_; }

  private:
    int factors_;
    int local_dim_;
    Mat matrix_;
};

/// d^n as a long, guarded by the composite dimension cap.
long composite_dim(int factors, int local_dim);

struct PovmElement {
    std::string label;
    CompositeOperator op;
};

class Povm {
  public:
    explicit Povm(std::vector<PovmElement> elements);

    const std::vector<PovmElement>& elements() const { return elements_; }
    const CompositeOperator& element(const std::string& label) const;

  private:
    std::vector<PovmElement> elements_;
};

/// Tensor product of n factor states with the cached composite vector.
/// Index convention: the first factor is the most significant digit.
class ProductState {
  public:
    explicit ProductState(std::vector<PureState> factors);

    int factors() const { return static_cast<int>(factors_.size()); }
    int local_dim() const { return factors_.front().dim(); }
    const std::vector<PureState>& factor_states() const { return factors_; }
    const Vec& composite() const { return composite_; }

  private:
    std::vector<PureState> factors_;
    Vec composite_;
};

ProductState kron_state(std::vector<PureState> factors);

/// <s|M|s>, real part; the imaginary residue must stay below 1e-12 or
/// NonHermitianError is thrown. Tiny negatives in [-1e-12, 0) clamp to 0.
double outcome_probability(const CompositeOperator& m, const ProductState& s);

struct PovmValidationRow {
    std::string label;
    double min_eigenvalue;
    double hermiticity_residue;
    double completeness_residue;
};

struct PovmValidation {
    std::vector<PovmValidationRow> rows;
    double completeness_residue; // max entrywise |sum - I|
    bool passed;
};

struct PovmTolerances {
    double hermiticity = 1e-12;
    double completeness = 1e-10;
    double positivity = 1e-10; // relative to each element's spectral norm
};

PovmValidation validate_povm(const Povm& p, const PovmTolerances& tol = {});

/// Projector onto the totally symmetric subspace of H^{tensor n},
/// built as the n!-term permutation average. Trace = binom(n+d-1, d-1).
CompositeOperator symmetric_projector(int n, int d);

/// The A=1 comparison measurement: {R2: I - P_sym, R?: P_sym}.
Povm comparison_povm(int n, int d);

/// Max outcome probability of `m` over a forbidden class of product states.
/// An unambiguous detector requires this <= 1e-10.
double unambiguity_violation(const CompositeOperator& m,
                             const std::vector<ProductState>& forbidden);

} // namespace qcmp

#endif
