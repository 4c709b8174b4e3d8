#include "qcmp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcmp/extremal.hpp"
#include "qcmp/random.hpp"
#include "qcmp/states.hpp"

namespace qcmp::kernels {

namespace {

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void decode(long index, int n, int d, std::vector<int>& digits) {
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(index % d);
        index /= d;
    }
}

// All counts feeding column c: for each factor permutation pi (lexicographic),
// the image row of basis tuple t is s with s[i] = t[pi[i]].
void accumulate_column(long c, int n, int d, long dim, std::int64_t* column) {
    std::vector<int> t(static_cast<std::size_t>(n));
    decode(c, n, d, t);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        long r = 0;
        for (int i = 0; i < n; ++i) {
            r = r * d + t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        }
        column[r * dim] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

std::vector<std::int64_t> symmetric_projector_counts_serial(int n, int d) {
    const long dim = pow_long(d, n);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dim * dim), 0);
    for (long c = 0; c < dim; ++c) {
        accumulate_column(c, n, d, dim, counts.data() + c);
    }
    return counts;
}

std::vector<std::int64_t> symmetric_projector_counts(int n, int d) {
    const long dim = pow_long(d, n);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dim * dim), 0);
    std::int64_t* data = counts.data();
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < dim; ++c) {
        accumulate_column(c, n, d, dim, data + c);
    }
    return counts;
}

namespace {

HaarSweepStats sweep_trial(int n, int d, std::uint64_t seed, std::uint64_t trial) {
    std::mt19937_64 rng = seeded_engine(seed, trial);
    const StateEnsemble ens = haar_ensemble(n, d, rng);
    const GramMatrix g = gram_matrix(ens);
    const double c_direct = closeness(ens);
    const double c_gram = closeness_via_gram(ens);
    HaarSweepStats s;
    s.max_closeness_mismatch = std::abs(c_direct - c_gram);
    s.max_trace_residue = std::abs(g.entries().trace().real() - n);
    s.min_power_gap = power_mean_gap(g, d);
    s.min_closeness_gap = c_direct - c_min(n, d);
    return s;
}

void merge(HaarSweepStats& acc, const HaarSweepStats& s) {
    acc.max_closeness_mismatch = std::max(acc.max_closeness_mismatch, s.max_closeness_mismatch);
    acc.max_trace_residue = std::max(acc.max_trace_residue, s.max_trace_residue);
    acc.min_power_gap = std::min(acc.min_power_gap, s.min_power_gap);
    acc.min_closeness_gap = std::min(acc.min_closeness_gap, s.min_closeness_gap);
}

HaarSweepStats initial_stats() {
    HaarSweepStats s;
    s.min_power_gap = std::numeric_limits<double>::infinity();
    s.min_closeness_gap = std::numeric_limits<double>::infinity();
    return s;
}

} // namespace

HaarSweepStats haar_gram_sweep_serial(int n, int d, int trials, std::uint64_t seed) {
    HaarSweepStats acc = initial_stats();
    for (int k = 0; k < trials; ++k) {
        merge(acc, sweep_trial(n, d, seed, static_cast<std::uint64_t>(k)));
    }
    return acc;
}

HaarSweepStats haar_gram_sweep(int n, int d, int trials, std::uint64_t seed) {
    HaarSweepStats acc = initial_stats();
#pragma omp parallel
    {
        HaarSweepStats local = initial_stats();
#pragma omp for schedule(static)
        for (int k = 0; k < trials; ++k) {
            merge(local, sweep_trial(n, d, seed, static_cast<std::uint64_t>(k)));
        }
#pragma omp critical
        merge(acc, local);
    }
    return acc;
}

} // namespace qcmp::kernels
