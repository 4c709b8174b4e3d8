#ifndef QCMP_EXTREMAL_HPP
#define QCMP_EXTREMAL_HPP

#include "qcmp/states.hpp"

namespace qcmp {

/// n x n Hermitian PSD matrix G_ij = <psi_i|psi_j> with unit diagonal,
/// eigenvalues cached in descending order.
class GramMatrix {
  public:
    explicit GramMatrix(const StateEnsemble& e);

    int size() const { return static_cast<int>(entries_.rows()); }
    const Mat& entries() const { return entries_; }
    const RealVec& eigenvalues() const { return eigenvalues_; }

    /// Eigenvalues <= 1e-10 * lambda_max count as zero.
    int numerical_rank() const;

  private:
    Mat entries_;
    RealVec eigenvalues_; // descending
};

GramMatrix gram_matrix(const StateEnsemble& e);

/// C recomputed through the Gram spectrum: (Tr G^2 - n)/(n(n-1)).
/// Cross-check route for closeness().
double closeness_via_gram(const StateEnsemble& e);

/// Minimum achievable closeness: 0 for n <= d, (n-d)/(d(n-1)) for n > d.
double c_min(int n, int d);

/// An ensemble achieving c_min(n,d). For n > d: the Fourier states
/// |psi_j> = d^{-1/2} sum_k w^{jk}|k> with w = exp(i 2 pi / n).
/// For n <= d: the first n computational basis states.
StateEnsemble minimal_ensemble(int n, int d);

/// Tr G^2 - n^2/d; nonnegative for every ensemble in dimension d, zero
/// exactly when the top d Gram eigenvalues are all n/d.
double power_mean_gap(const GramMatrix& g, int d);

} // namespace qcmp

#endif
