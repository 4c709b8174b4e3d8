#include "qcmp/nogo.hpp"

#include <cmath>
#include <utility>

#include "qcmp/extremal.hpp"
#include "qcmp/random.hpp"

namespace qcmp {

namespace {

constexpr int kMaxHalvings = 60;
constexpr int kHaarRejectionBudget = 10000;

long pow_long(int base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<int> decode_tuple(long index, int n, int d) {
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(index % d);
        index /= d;
    }
    return tuple;
}

bool on_side(double value, double threshold, Side side) {
    return side == Side::S1 ? value >= threshold : value < threshold;
}

PureState perturbed_variant(const PureState& base, const PureState& complement, double eps) {
    // base and complement are orthonormal, so the norm is sqrt(1 + eps^2);
    // the PureState constructor renormalizes.
    return PureState(base.amplitudes() + eps * complement.amplitudes());
}

std::vector<std::vector<PureState>> all_complements(const StateEnsemble& base) {
    std::vector<std::vector<PureState>> out;
    out.reserve(static_cast<std::size_t>(base.size()));
    for (const PureState& s : base.states()) out.push_back(complement_basis(s));
    return out;
}

// One fresh sub-seed per (seed, stream) pair.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return seeded_engine(seed, stream)();
}

} // namespace

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<PureState> complement_basis(const PureState& s) {
    const int d = s.dim();
    const Vec& v = s.amplitudes();
    // Householder reflection sending e_0 to exp(i phi) * s with <e_0, target>
    // real; columns 1..d-1 then span the complement of s.
    const cplx v0 = v(0);
    const cplx phase = std::abs(v0) > 1e-15 ? v0 / std::abs(v0) : cplx(1.0, 0.0);
    const Vec target = v / phase;
    Vec w = -target;
    w(0) += 1.0;
    Mat u = Mat::Identity(d, d);
    const double w_norm2 = w.squaredNorm();
    if (w_norm2 > 1e-30) {
        u -= (2.0 / w_norm2) * (w * w.adjoint());
    }
    std::vector<PureState> basis;
    basis.reserve(static_cast<std::size_t>(d - 1));
    for (int j = 1; j < d; ++j) {
        basis.emplace_back(Vec(phase * u.col(j)));
    }
    return basis;
}

double perturbed_closeness_direct(const StateEnsemble& base,
                                  const std::vector<std::vector<PureState>>& complements,
                                  double eps, const std::vector<int>& tuple) {
    const int n = base.size();
    const int d = base.dim();
    std::vector<PureState> states;
    states.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int j = tuple[static_cast<std::size_t>(i)];
        if (j == d - 1) {
            states.push_back(base[i]);
        } else {
            states.push_back(perturbed_variant(
                base[i], complements[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                eps));
        }
    }
    return closeness(StateEnsemble(std::move(states)));
}

double perturbed_closeness_formula(const StateEnsemble& base,
                                   const std::vector<std::vector<PureState>>& complements,
                                   double eps, const std::vector<int>& tuple) {
    const int n = base.size();
    const int d = base.dim();
    const double norm1 = 1.0 + eps * eps;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const int jk = tuple[static_cast<std::size_t>(k)];
        const bool pk = jk != d - 1;
        for (int l = k + 1; l < n; ++l) {
            const int jl = tuple[static_cast<std::size_t>(l)];
            const bool pl = jl != d - 1;
            const Vec& psi_k = base[k].amplitudes();
            const Vec& psi_l = base[l].amplitudes();
            cplx overlap = psi_k.dot(psi_l);
            if (pl) {
                overlap += eps * psi_k.dot(
                    complements[static_cast<std::size_t>(l)][static_cast<std::size_t>(jl)]
                        .amplitudes());
            }
            if (pk) {
                const Vec& phi_k =
                    complements[static_cast<std::size_t>(k)][static_cast<std::size_t>(jk)]
                        .amplitudes();
                overlap += eps * phi_k.dot(psi_l);
                if (pl) {
                    overlap += eps * eps *
                               phi_k.dot(complements[static_cast<std::size_t>(l)]
                                                    [static_cast<std::size_t>(jl)]
                                                        .amplitudes());
                }
            }
            const double norm = (pk ? norm1 : 1.0) * (pl ? norm1 : 1.0);
            sum += std::norm(overlap) / norm;
        }
    }
    return 2.0 * sum / (static_cast<double>(n) * (n - 1));
}

double select_epsilon(const StateEnsemble& base, double threshold, Side side) {
    const double c = closeness(base);
    if (!on_side(c, threshold, side)) {
        throw PreconditionError("base ensemble closeness " + std::to_string(c) +
                                " is on the wrong side of threshold " +
                                std::to_string(threshold));
    }
    const int n = base.size();
    const int d = base.dim();
    const long tuples = pow_long(d, n);
    const std::vector<std::vector<PureState>> complements = all_complements(base);
    double eps = 0.5;
    for (int attempt = 0; attempt <= kMaxHalvings; ++attempt) {
        bool ok = true;
        for (long t = 0; t < tuples && ok; ++t) {
            const std::vector<int> tuple = decode_tuple(t, n, d);
            ok = on_side(perturbed_closeness_direct(base, complements, eps, tuple),
                         threshold, side);
        }
        if (ok) return eps;
        eps /= 2.0;
    }
    throw EpsilonSearchError("no admissible epsilon after " + std::to_string(kMaxHalvings) +
                             " halvings; threshold margin below numerical resolution");
}

PerturbedFamily build_family(const StateEnsemble& base, double threshold, double eps,
                             Side side) {
    const int n = base.size();
    const int d = base.dim();
    const long member_count = composite_dim(n, d);
    PerturbedFamily fam{base, threshold, eps, side, all_complements(base), {}, {}};

    for (int i = 0; i < n; ++i) {
        std::vector<PureState> variants;
        variants.reserve(static_cast<std::size_t>(d));
        for (int j = 0; j < d - 1; ++j) {
            variants.push_back(perturbed_variant(
                base[i], fam.complements[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                eps));
        }
        variants.push_back(base[i]);
        if (eps != 0.0) {
            Mat m(d, d);
            for (int j = 0; j < d; ++j) m.col(j) = variants[static_cast<std::size_t>(j)].amplitudes();
            Eigen::JacobiSVD<Mat> svd(m);
            const auto& sv = svd.singularValues();
            if (sv(d - 1) <= 1e-10 * sv(0)) {
                throw FamilyVerificationError("factor " + std::to_string(i) +
                                              " variants are numerically dependent");
            }
        }
        fam.factor_variants.push_back(std::move(variants));
    }

    fam.members.reserve(static_cast<std::size_t>(member_count));
    for (long t = 0; t < member_count; ++t) {
        const std::vector<int> tuple = decode_tuple(t, n, d);
        const double c_prime = perturbed_closeness_direct(base, fam.complements, eps, tuple);
        if (!on_side(c_prime, threshold, side)) {
            throw FamilyVerificationError(
                "member tuple " + std::to_string(t) + " has closeness " +
                std::to_string(c_prime) + " on the wrong side of " + std::to_string(threshold));
        }
        std::vector<PureState> factors;
        factors.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            factors.push_back(
                fam.factor_variants[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])]);
        }
        fam.members.emplace_back(std::move(factors));
    }
    return fam;
}

namespace {

Mat member_matrix(const std::vector<ProductState>& members) {
    const long dim = members.front().composite().size();
    Mat m(dim, static_cast<long>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) {
        m.col(static_cast<long>(k)) = members[k].composite();
    }
    return m;
}

// Projector onto the orthogonal complement of span(members).
Mat span_complement_projector(const std::vector<ProductState>& members) {
    const Mat m = member_matrix(members);
    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-10 * sv(0);
    long rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    const Mat u = svd.matrixU().leftCols(rank);
    return Mat::Identity(m.rows(), m.rows()) - u * u.adjoint();
}

} // namespace

double complement_residual(const std::vector<ProductState>& members,
                           const CompositeOperator& probe) {
    if (members.empty()) throw EmptyInputError("no member states given");
    const Mat p = span_complement_projector(members);
    if (probe.matrix().rows() != p.rows()) {
        throw DimensionError("probe dimension does not match the member space");
    }
    return (p * probe.matrix() * p).cwiseAbs().maxCoeff();
}

double force_zero_operator(const PerturbedFamily& fam, const CompositeOperator& probe) {
    const Mat m = member_matrix(fam.members);
    Eigen::BDCSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    if (m.rows() != m.cols() || sv(sv.size() - 1) <= 1e-10 * sv(0)) {
        throw PreconditionError("family does not span the composite space");
    }
    return complement_residual(fam.members, probe);
}

SpanningCertificate spanning_certificate(const PerturbedFamily& fam, std::uint64_t probe_seed,
                                         int probes) {
    const int n = fam.base.size();
    const int d = fam.base.dim();
    const long dim = composite_dim(n, d);
    const Mat m = member_matrix(fam.members);
    Eigen::BDCSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv(0);
    const double sigma_min = sv(sv.size() - 1);
    long rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 1e-10 * sigma_max) ++rank;
    }
    SpanningCertificate cert;
    cert.n = n;
    cert.d = d;
    cert.threshold = fam.threshold;
    cert.epsilon = fam.epsilon;
    cert.sigma_min = sigma_min;
    cert.rank = rank;
    cert.verdict = rank == dim;
    cert.residual = 0.0;
    if (cert.verdict) {
        double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
        for (int k = 0; k < probes; ++k) {
            std::mt19937_64 rng = seeded_engine(probe_seed, static_cast<std::uint64_t>(k));
            Mat psd = random_psd(dim, rng);
            psd /= psd.cwiseAbs().maxCoeff(); // scale-free residual
            const double r =
                force_zero_operator(fam, CompositeOperator(n, d, std::move(psd)));
            worst = std::max(worst, r);
        }
        cert.residual = worst;
    }
    return cert;
}

StateEnsemble sample_region(int n, int d, double threshold, Side side, std::uint64_t seed) {
    const double lo = c_min(n, d);
    if (threshold < lo || threshold > 1.0) {
        throw ThresholdRangeError("threshold " + std::to_string(threshold) +
                                  " outside [c_min, 1]");
    }
    std::mt19937_64 rng = seeded_engine(seed);
    for (int attempt = 0; attempt < kHaarRejectionBudget; ++attempt) {
        StateEnsemble ens = haar_ensemble(n, d, rng);
        if (on_side(closeness(ens), threshold, side)) return ens;
    }

    // Constructive fallback: perturb an extremal base, shrinking the noise
    // until the ensemble lands on the requested side.
    if (side == Side::S1) {
        const PureState anchor = haar_state(d, rng);
        if (threshold == 1.0) {
            // Only exactly identical states qualify; a perturbed ensemble that
            // rounds to C == 1 would still leave the symmetric subspace.
            return StateEnsemble(std::vector<PureState>(static_cast<std::size_t>(n), anchor));
        }
        std::vector<Vec> noise;
        for (int i = 0; i < n; ++i) {
            noise.push_back(haar_state(d, rng).amplitudes());
        }
        double eps = 0.5;
        for (int k = 0; k <= kMaxHalvings; ++k) {
            std::vector<PureState> states;
            for (int i = 0; i < n; ++i) {
                states.emplace_back(Vec(anchor.amplitudes() + eps * noise[static_cast<std::size_t>(i)]));
            }
            StateEnsemble ens(std::move(states));
            if (closeness(ens) >= threshold) return ens;
            eps /= 2.0;
        }
        // C = 1 always qualifies for S1.
        return StateEnsemble(std::vector<PureState>(static_cast<std::size_t>(n), anchor));
    }

    const StateEnsemble base = minimal_ensemble(n, d);
    std::vector<Vec> noise;
    for (int i = 0; i < n; ++i) {
        noise.push_back(haar_state(d, rng).amplitudes());
    }
    double eps = 0.5;
    for (int k = 0; k <= kMaxHalvings; ++k) {
        std::vector<PureState> states;
        for (int i = 0; i < n; ++i) {
            states.emplace_back(Vec(base[i].amplitudes() + eps * noise[static_cast<std::size_t>(i)]));
        }
        StateEnsemble ens(std::move(states));
        if (closeness(ens) < threshold) return ens;
        eps /= 2.0;
    }
    throw RegionSamplingError("no ensemble found with closeness " +
                              std::string(side == Side::S1 ? ">= " : "< ") +
                              std::to_string(threshold));
}

DecayCurve nullspace_decay(int n, int d, double threshold, Side side, int max_samples,
                           std::uint64_t seed) {
    const long dim = composite_dim(n, d);
    DecayCurve curve;
    curve.side = side;
    curve.seed = seed;
    Mat basis(dim, 0);
    for (int k = 1; k <= max_samples; ++k) {
        const StateEnsemble ens =
            sample_region(n, d, threshold, side, derive_seed(seed, static_cast<std::uint64_t>(k)));
        Vec v = kron_state(ens.states()).composite();
        // Two projection passes keep the basis orthonormal to working precision.
        for (int pass = 0; pass < 2; ++pass) {
            if (basis.cols() > 0) v -= basis * (basis.adjoint() * v);
        }
        const double res = v.norm();
        if (res > 1e-10) {
            basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
            basis.col(basis.cols() - 1) = v / res;
        }
        curve.samples.emplace_back(k, static_cast<int>(dim - basis.cols()));
        if (basis.cols() == dim) break;
    }
    return curve;
}

} // namespace qcmp
