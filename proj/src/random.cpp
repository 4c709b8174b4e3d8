#include "qcmp/random.hpp"

namespace qcmp {

namespace {
// splitmix64 finalizer; decorrelates (seed, stream) pairs.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
} // namespace

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream + 0x5851f42d4c957f2dULL)));
}

PureState haar_state(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(d);
    for (int i = 0; i < d; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = cplx(re, im);
    }
    return PureState(std::move(v));
}

StateEnsemble haar_ensemble(int n, int d, std::mt19937_64& rng) {
    std::vector<PureState> states;
    states.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) states.push_back(haar_state(d, rng));
    return StateEnsemble(std::move(states));
}

Mat random_psd(long dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat b(dim, dim);
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            b(i, j) = cplx(re, im);
        }
    }
    return b.adjoint() * b;
}

Mat random_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = cplx(re, im);
        }
    }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is Haar.
    for (int j = 0; j < d; ++j) {
        const cplx rjj = r(j, j);
        const double a = std::abs(rjj);
        q.col(j) *= (a > 0.0) ? rjj / a : cplx(1.0, 0.0);
    }
    return q;
}

} // namespace qcmp
