#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcmp/kernels.hpp"
#include "qcmp/povm.hpp"
#include "qcmp/random.hpp"

#include "oracles.hpp"

using namespace qcmp;

namespace {

PureState basis_state(int d, int k) {
    Vec v = Vec::Zero(d);
    v(k) = 1.0;
    return PureState(std::move(v));
}

PureState plus_state() {
    Vec v(2);
    v << 1.0, 1.0;
    return PureState(std::move(v));
}

CompositeOperator identity_op(int n, int d) {
    const long dim = composite_dim(n, d);
    return CompositeOperator(n, d, Mat::Identity(dim, dim));
}

oracles::cvec raw(const Vec& v) {
    oracles::cvec out(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
    return out;
}

} // namespace

TEST_CASE("composite dimension cap") {
    CHECK(composite_dim(3, 2) == 8);
    CHECK(composite_dim(6, 4) == 4096);
    CHECK_THROWS_AS(composite_dim(13, 2), SizeCapError);
    CHECK_THROWS_AS(composite_dim(7, 4), SizeCapError);
}

TEST_CASE("kron_state index convention") {
    const ProductState s00 = kron_state({basis_state(2, 0), basis_state(2, 0)});
    CHECK(std::abs(s00.composite()(0) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(s00.composite().tail(3).cwiseAbs().maxCoeff() < 1e-15);

    // First factor is the most significant digit: |1>|0> sits at index 2.
    const ProductState s10 = kron_state({basis_state(2, 1), basis_state(2, 0)});
    CHECK(std::abs(s10.composite()(2) - cplx(1.0, 0.0)) < 1e-15);

    const ProductState plus1 = kron_state({plus_state(), basis_state(2, 1)});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus1.composite()(0)) < 1e-15);
    CHECK(std::abs(plus1.composite()(1) - cplx(r, 0.0)) < 1e-15);
    CHECK(std::abs(plus1.composite()(2)) < 1e-15);
    CHECK(std::abs(plus1.composite()(3) - cplx(r, 0.0)) < 1e-15);

    CHECK_THROWS_AS(kron_state({basis_state(2, 0), basis_state(3, 0)}), DimensionError);
}

TEST_CASE("kron_state matches the oracle for random factors") {
    std::mt19937_64 rng = seeded_engine(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<PureState> factors{haar_state(3, rng), haar_state(3, rng), haar_state(3, rng)};
        const ProductState p = kron_state(factors);
        CHECK(std::abs(p.composite().norm() - 1.0) < 1e-12);
        const oracles::cvec expected = oracles::kron(
            {raw(factors[0].amplitudes()), raw(factors[1].amplitudes()), raw(factors[2].amplitudes())});
        for (Eigen::Index i = 0; i < p.composite().size(); ++i) {
            CHECK(std::abs(p.composite()(i) - expected[static_cast<std::size_t>(i)]) < 1e-12);
        }
    }
}

TEST_CASE("outcome probability") {
    const ProductState s = kron_state({basis_state(2, 0), basis_state(2, 1)});
    CHECK(outcome_probability(identity_op(2, 2), s) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(outcome_probability(CompositeOperator(2, 2, Mat::Zero(4, 4)), s) == 0.0);

    const Povm cmp = comparison_povm(2, 2);
    CHECK(outcome_probability(cmp.element("R2"), s) == doctest::Approx(0.5).epsilon(1e-13));

    const ProductState mixed = kron_state({plus_state(), plus_state()});
    Mat bad = Mat::Zero(4, 4);
    bad(0, 1) = cplx(0.0, 1.0); // skew part leaves an imaginary expectation residue
    CHECK_THROWS_AS(outcome_probability(CompositeOperator(2, 2, bad), mixed), NonHermitianError);
}

TEST_CASE("validate_povm") {
    const long dim = 4;
    const CompositeOperator id = identity_op(2, 2);
    const CompositeOperator half(2, 2, Mat(0.5 * Mat::Identity(dim, dim)));

    CHECK(validate_povm(Povm({{"E0", id}})).passed);
    CHECK(validate_povm(Povm({{"E0", half}, {"E1", half}})).passed);

    const PovmValidation twice = validate_povm(Povm({{"E0", id}, {"E1", id}}));
    CHECK_FALSE(twice.passed);
    CHECK(twice.completeness_residue == doctest::Approx(1.0).epsilon(1e-14));

    const CompositeOperator skewed(2, 2, Mat(Mat::Identity(dim, dim) + 1e-6 * Mat::Identity(dim, dim)));
    CHECK_FALSE(validate_povm(Povm({{"E0", skewed}})).passed);
    PovmTolerances loose;
    loose.completeness = 1e-3;
    CHECK(validate_povm(Povm({{"E0", skewed}}), loose).passed);
}

TEST_CASE("symmetric projector traces and structure") {
    CHECK(symmetric_projector(2, 2).matrix().trace().real() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(symmetric_projector(2, 3).matrix().trace().real() == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(symmetric_projector(3, 2).matrix().trace().real() == doctest::Approx(4.0).epsilon(1e-12));

    const Mat p = symmetric_projector(3, 3).matrix();
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(symmetric_projector(7, 2), SizeCapError);
}

TEST_CASE("symmetric projector fixes symmetric products and is permutation covariant") {
    std::mt19937_64 rng = seeded_engine(9);
    const Mat p = symmetric_projector(3, 2).matrix();
    for (int t = 0; t < 20; ++t) {
        const PureState psi = haar_state(2, rng);
        const Vec v = kron_state({psi, psi, psi}).composite();
        CHECK((p * v - v).cwiseAbs().maxCoeff() < 1e-10);
    }
    // Conjugation by the factor-swap operator leaves P_sym unchanged.
    const Mat q = symmetric_projector(2, 3).matrix();
    Mat swap = Mat::Zero(9, 9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) swap(3 * i + j, 3 * j + i) = 1.0;
    }
    CHECK((swap * q * swap.adjoint() - q).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("parallel permutation counts equal the serial reference") {
    for (const auto& [n, d] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
        CHECK(kernels::symmetric_projector_counts(n, d) ==
              kernels::symmetric_projector_counts_serial(n, d));
    }
}

TEST_CASE("comparison POVM is unambiguous at A=1") {
    const Povm cmp = comparison_povm(2, 2);
    CHECK(validate_povm(cmp).passed);

    std::mt19937_64 rng = seeded_engine(13);
    std::vector<ProductState> symmetric_products;
    for (int t = 0; t < 30; ++t) {
        const PureState psi = haar_state(2, rng);
        symmetric_products.push_back(kron_state({psi, psi}));
    }
    CHECK(unambiguity_violation(cmp.element("R2"), symmetric_products) < 1e-12);

    // |01> has antisymmetric weight 1/2.
    const ProductState s01 = kron_state({basis_state(2, 0), basis_state(2, 1)});
    CHECK(outcome_probability(cmp.element("R2"), s01) == doctest::Approx(0.5).epsilon(1e-13));

    // |001>: expected value frozen from the permutation-average oracle.
    const Povm cmp3 = comparison_povm(3, 2);
    const ProductState s001 =
        kron_state({basis_state(2, 0), basis_state(2, 0), basis_state(2, 1)});
    const double sym_weight = oracles::symmetric_expectation(raw(s001.composite()), 3, 2);
    CHECK(sym_weight == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(outcome_probability(cmp3.element("R2"), s001) ==
          doctest::Approx(1.0 - sym_weight).epsilon(1e-13));
}

TEST_CASE("unambiguity violation edge cases") {
    const ProductState s = kron_state({basis_state(2, 0), basis_state(2, 1)});
    CHECK(unambiguity_violation(identity_op(2, 2), {s}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unambiguity_violation(CompositeOperator(2, 2, Mat::Zero(4, 4)), {s}) == 0.0);
    CHECK_THROWS_AS(unambiguity_violation(identity_op(2, 2), {}), EmptyInputError);
}

TEST_CASE("outcome probabilities form a distribution") {
    std::mt19937_64 rng = seeded_engine(17);
    const Povm cmp = comparison_povm(3, 2);
    for (int t = 0; t < 20; ++t) {
        const ProductState s =
            kron_state({haar_state(2, rng), haar_state(2, rng), haar_state(2, rng)});
        double total = 0.0;
        for (const PovmElement& e : cmp.elements()) {
            const double p = outcome_probability(e.op, s);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-12);
            total += p;
        }
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}
