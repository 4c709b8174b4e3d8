#include "qcmp/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcmp {

GramMatrix::GramMatrix(const StateEnsemble& e) {
    const int n = e.size();
    entries_ = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries_(i, j) = e[i].amplitudes().dot(e[j].amplitudes());
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> solver(entries_);
    eigenvalues_ = solver.eigenvalues().reverse();
}

int GramMatrix::numerical_rank() const {
    const double cutoff = 1e-10 * eigenvalues_(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
        if (eigenvalues_(i) > cutoff) ++rank;
    }
    return rank;
}

GramMatrix gram_matrix(const StateEnsemble& e) { return GramMatrix(e); }

double closeness_via_gram(const StateEnsemble& e) {
    const GramMatrix g(e);
    const int n = e.size();
    const double trace_sq = g.eigenvalues().squaredNorm();
    return (trace_sq - n) / (static_cast<double>(n) * (n - 1));
}

double c_min(int n, int d) {
    if (n < 2 || d < 2) {
        throw DomainError("c_min requires n >= 2 and d >= 2");
    }
    if (n <= d) return 0.0;
    return static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1));
}

StateEnsemble minimal_ensemble(int n, int d) {
    if (n < 2 || d < 2) {
        throw DomainError("minimal_ensemble requires n >= 2 and d >= 2");
    }
    std::vector<PureState> states;
    states.reserve(static_cast<std::size_t>(n));
    if (n <= d) {
        // n orthogonal basis states reach C = 0.
        for (int j = 0; j < n; ++j) {
            Vec v = Vec::Zero(d);
            v(j) = 1.0;
            states.emplace_back(std::move(v));
        }
        return StateEnsemble(std::move(states));
    }
    // Fourier states with the n-th root of unity (not the d-th).
    const double step = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        Vec v(d);
        for (int k = 0; k < d; ++k) {
            v(k) = std::polar(1.0, step * j * k);
        }
        states.emplace_back(std::move(v));
    }
    return StateEnsemble(std::move(states));
}

double power_mean_gap(const GramMatrix& g, int d) {
    const int n = g.size();
    const double trace_sq = g.eigenvalues().squaredNorm();
    return trace_sq - static_cast<double>(n) * n / d;
}

} // namespace qcmp
