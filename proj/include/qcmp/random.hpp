#ifndef QCMP_RANDOM_HPP
#define QCMP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qcmp/states.hpp"

namespace qcmp {

/// Deterministic per-stream engine: trial k of a run seeded with s gets
/// seeded_engine(s, k), so results are independent of scheduling.
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-random state: i.i.d. standard complex Gaussian entries, normalized.
PureState haar_state(int d, std::mt19937_64& rng);

StateEnsemble haar_ensemble(int n, int d, std::mt19937_64& rng);

/// Random PSD matrix B^dagger B with standard complex Gaussian B.
Mat random_psd(long dim, std::mt19937_64& rng);

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
Mat random_unitary(int d, std::mt19937_64& rng);

} // namespace qcmp

#endif
