#ifndef QCMP_NOGO_HPP
#define QCMP_NOGO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qcmp/povm.hpp"
#include "qcmp/states.hpp"

namespace qcmp {

/// Which side of the threshold a product state's factor ensemble falls on:
/// S1 holds C >= A, S2 holds C < A.
enum class Side { S1, S2 };

/// Deterministic orthonormal basis of the orthogonal complement of s,
/// taken as columns 2..d of the Householder completion of s to a unitary.
std::vector<PureState> complement_basis(const PureState& s);

/// The perturbed product-state family: factor variants
/// psi_{i,j} = (psi_i + eps * phi_{i,j}) / sqrt(1+eps^2) for j < d and
/// psi_{i,d} = psi_i, with one member product state per index tuple.
struct PerturbedFamily {
    StateEnsemble base;
    double threshold;
    double epsilon;
    Side side;
    std::vector<std::vector<PureState>> complements;     // n x (d-1)
    std::vector<std::vector<PureState>> factor_variants; // n x d, last unperturbed
    std::vector<ProductState> members;                   // d^n, lexicographic tuples
};

/// Closeness of the tuple (psi_{1,j_1}, ..., psi_{n,j_n}) built explicitly
/// from the perturbed vectors. Tuple entries are 0-based; d-1 = unperturbed.
double perturbed_closeness_direct(const StateEnsemble& base,
                                  const std::vector<std::vector<PureState>>& complements,
                                  double eps, const std::vector<int>& tuple);

/// Same quantity from base overlaps alone (no perturbed vectors formed):
/// per pair |<psi_k|psi_l> + eps(<psi_k|phi_l> + <phi_k|psi_l>) + eps^2 <phi_k|phi_l>|^2
/// over the product of the perturbed factors' normalizations.
double perturbed_closeness_formula(const StateEnsemble& base,
                                   const std::vector<std::vector<PureState>>& complements,
                                   double eps, const std::vector<int>& tuple);

/// Largest eps in {0.5, 0.25, ...} (at most 60 halvings) for which every
/// index tuple keeps its closeness on the requested side of A, verified by
/// direct evaluation. S2 requires closeness(base) < A, S1 requires >= A.
double select_epsilon(const StateEnsemble& base, double threshold, Side side = Side::S2);

/// Builds and verifies all d^n members; throws FamilyVerificationError if
/// any tuple lands on the wrong side of the threshold.
PerturbedFamily build_family(const StateEnsemble& base, double threshold, double eps,
                             Side side = Side::S2);

/// Numerical evidence that the d^n members span H^{tensor n}.
struct SpanningCertificate {
    int n = 0;
    int d = 0;
    double threshold = 0.0;
    double epsilon = 0.0;
    double sigma_min = 0.0;
    long rank = 0;
    bool verdict = false;
    double residual = 0.0; // max forced-zero residue over the probe operators
};

/// SVD of the d^n x d^n member matrix; verdict = full numerical rank
/// (sigma_min > 1e-10 * sigma_max). When the verdict holds, runs
/// force_zero_operator on `probes` seeded PSD probes and records the max
/// residual — the witness that the corresponding detector element is zero.
SpanningCertificate spanning_certificate(const PerturbedFamily& fam,
                                         std::uint64_t probe_seed = 1, int probes = 10);

/// Residual of a PSD probe forced through the orthogonal complement of
/// span(members): max entrywise |P M P| with P the complement projector.
double complement_residual(const std::vector<ProductState>& members,
                           const CompositeOperator& probe);

/// Same, but requires a spanning family (throws PreconditionError otherwise);
/// the complement is then zero-dimensional and the residual witnesses M = 0.
double force_zero_operator(const PerturbedFamily& fam, const CompositeOperator& probe);

/// Seeded sampler for an ensemble on the requested side of A. Haar rejection
/// first (10000 tries), then a constructive fallback; RegionSamplingError
/// when both fail (e.g. S2 at A = c_min).
StateEnsemble sample_region(int n, int d, double threshold, Side side, std::uint64_t seed);

struct DecayCurve {
    Side side = Side::S2;
    std::uint64_t seed = 0;
    std::vector<std::pair<int, int>> samples; // (sample_count, nullspace_dim)
};

/// Samples product states from one side and tracks the dimension of the
/// orthogonal complement of their span. S2 curves (c_min < A < 1) reach 0;
/// S1 curves at A = 1 plateau at d^n - binom(n+d-1, d-1).
DecayCurve nullspace_decay(int n, int d, double threshold, Side side, int max_samples,
                           std::uint64_t seed);

long binomial(int n, int k);

} // namespace qcmp

#endif
