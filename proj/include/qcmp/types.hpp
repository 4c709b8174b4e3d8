#ifndef QCMP_TYPES_HPP
#define QCMP_TYPES_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qcmp {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

// Largest composite dimension D = d^n we allocate dense operators for.
inline constexpr long kCompositeDimCap = 4096;

// Largest factor count for the explicit n! permutation sum.
inline constexpr int kMaxPermutationFactors = 6;

} // namespace qcmp

#endif
