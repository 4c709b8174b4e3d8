#include "qcmp/povm.hpp"

#include <cmath>
#include <utility>

#include "qcmp/kernels.hpp"

namespace qcmp {

long composite_dim(int factors, int local_dim) {
    if (factors < 2) throw DimensionError("composite space needs at least 2 factors");
    if (local_dim < 2) throw DimensionError("local dimension must be at least 2");
    long dim = 1;
    for (int i = 0; i < factors; ++i) {
        dim *= local_dim;
        if (dim > kCompositeDimCap) {
            throw SizeCapError("composite dimension " + std::to_string(local_dim) + "^" +
                               std::to_string(factors) + " exceeds cap " +
                               std::to_string(kCompositeDimCap));
        }
    }
    return dim;
}

CompositeOperator::CompositeOperator(int factors, int local_dim, Mat matrix)
    : factors_(factors), local_dim_(local_dim), matrix_(std::move(matrix)) {
    const long dim = composite_dim(factors, local_dim);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw DimensionError("operator matrix must be " + std::to_string(dim) + "x" +
                             std::to_string(dim));
    }
}

Povm::Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw EmptyInputError("a POVM needs at least one element");
    const long dim = elements_.front().op.dim();
    for (const PovmElement& e : elements_) {
        if (e.op.dim() != dim) throw DimensionError("POVM elements must share one dimension");
    }
}

const CompositeOperator& Povm::element(const std::string& label) const {
    for (const PovmElement& e : elements_) {
        if (e.label == label) return e.op;
    }
    throw EmptyInputError("no POVM element labeled '" + label + "'");
}

ProductState::ProductState(std::vector<PureState> factors) : factors_(std::move(factors)) {
    if (factors_.size() < 2) throw DimensionError("a product state needs at least 2 factors");
    const int d = factors_.front().dim();
    for (const PureState& f : factors_) {
        if (f.dim() != d) throw DimensionError("product state factors must share one dimension");
    }
    const long dim = composite_dim(static_cast<int>(factors_.size()), d);
    // First factor most significant: index = ((i1*d + i2)*d + ...) + in.
    composite_ = Vec::Ones(1);
    for (const PureState& f : factors_) {
        Vec next(composite_.size() * d);
        for (Eigen::Index i = 0; i < composite_.size(); ++i) {
            next.segment(i * d, d) = composite_(i) * f.amplitudes();
        }
        composite_ = std::move(next);
    }
    (void)dim;
}

ProductState kron_state(std::vector<PureState> factors) {
    return ProductState(std::move(factors));
}

double outcome_probability(const CompositeOperator& m, const ProductState& s) {
    const Vec& v = s.composite();
    if (m.dim() != v.size()) {
        throw DimensionError("operator dimension " + std::to_string(m.dim()) +
                             " does not match state dimension " + std::to_string(v.size()));
    }
    const cplx expectation = v.dot(m.matrix() * v);
    if (std::abs(expectation.imag()) >= 1e-12) {
        throw NonHermitianError("expectation has imaginary residue " +
                                std::to_string(expectation.imag()));
    }
    double p = expectation.real();
    if (p < 0.0 && p >= -1e-12) p = 0.0;
    return p;
}

PovmValidation validate_povm(const Povm& p, const PovmTolerances& tol) {
    const long dim = p.elements().front().op.dim();
    Mat sum = Mat::Zero(dim, dim);
    PovmValidation report;
    report.passed = true;
    for (const PovmElement& e : p.elements()) {
        const Mat& m = e.op.matrix();
        sum += m;
        const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
        Eigen::SelfAdjointEigenSolver<Mat> solver((m + m.adjoint()) / 2.0);
        const double min_eig = solver.eigenvalues().minCoeff();
        const double spectral = solver.eigenvalues().cwiseAbs().maxCoeff();
        report.rows.push_back({e.label, min_eig, herm, 0.0});
        if (herm > tol.hermiticity) report.passed = false;
        if (min_eig < -tol.positivity * spectral) report.passed = false;
    }
    report.completeness_residue =
        (sum - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
    for (PovmValidationRow& row : report.rows) {
        row.completeness_residue = report.completeness_residue;
    }
    if (report.completeness_residue > tol.completeness) report.passed = false;
    return report;
}

CompositeOperator symmetric_projector(int n, int d) {
    if (n > kMaxPermutationFactors) {
        throw SizeCapError("permutation sum limited to n <= " +
                           std::to_string(kMaxPermutationFactors));
    }
    const long dim = composite_dim(n, d);
    const std::vector<std::int64_t> counts = kernels::symmetric_projector_counts(n, d);
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= i;
    Mat p(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            p(r, c) = static_cast<double>(counts[static_cast<std::size_t>(r * dim + c)]) /
                      factorial;
        }
    }
    return CompositeOperator(n, d, std::move(p));
}

Povm comparison_povm(int n, int d) {
    CompositeOperator p_sym = symmetric_projector(n, d);
    const long dim = p_sym.dim();
    Mat complement = Mat::Identity(dim, dim) - p_sym.matrix();
    std::vector<PovmElement> elements;
    elements.push_back({"R2", CompositeOperator(n, d, std::move(complement))});
    elements.push_back({"R?", std::move(p_sym)});
    return Povm(std::move(elements));
}

double unambiguity_violation(const CompositeOperator& m,
                             const std::vector<ProductState>& forbidden) {
    if (forbidden.empty()) {
        throw EmptyInputError("unambiguity check needs at least one forbidden state");
    }
    double worst = 0.0;
    for (const ProductState& s : forbidden) {
        worst = std::max(worst, outcome_probability(m, s));
    }
    return worst;
}

} // namespace qcmp
