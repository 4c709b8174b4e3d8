#ifndef QCMP_KERNELS_HPP
#define QCMP_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "qcmp/types.hpp"

namespace qcmp::kernels {

/// Row-major D x D table of permutation counts: entry (r, c) is the number
/// of factor permutations mapping basis index c to basis index r. The
/// symmetric projector is this table divided by n!. Counts are integers, so
/// the parallel variant is bit-identical to the sequential lexicographic sum.
std::vector<std::int64_t> symmetric_projector_counts_serial(int n, int d);
std::vector<std::int64_t> symmetric_projector_counts(int n, int d); // OpenMP over columns

/// Aggregates over a batch of seeded Haar-random ensembles; trial k draws
/// from seeded_engine(seed, k) so the parallel sweep reproduces the serial
/// one exactly.
struct HaarSweepStats {
    double max_closeness_mismatch = 0.0; // |closeness - closeness_via_gram|
    double max_trace_residue = 0.0;      // |Tr G - n|
    double min_power_gap = 0.0;          // min Tr G^2 - n^2/d
    double min_closeness_gap = 0.0;      // min closeness - c_min(n,d)
};

HaarSweepStats haar_gram_sweep_serial(int n, int d, int trials, std::uint64_t seed);
HaarSweepStats haar_gram_sweep(int n, int d, int trials, std::uint64_t seed); // OpenMP

} // namespace qcmp::kernels

#endif
