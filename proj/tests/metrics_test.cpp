#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "qcss/analytics.hpp"
#include "qcss/classical_code.hpp"
#include "qcss/construct.hpp"
#include "qcss/linalg.hpp"
#include "qcss/metrics.hpp"
#include "test_util.hpp"

using namespace qcss;

namespace {

CssCode toric(std::size_t l1, std::size_t l2) {
    const ConstructionSpec spec(2, {BlockLabel("BC")}, {1});
    return assemble(spec, {repetition_code(l1), repetition_code(l2)});
}

TEST(ComputeK, CaseAIsAlwaysThree) {
    for (const Lengths& L : {Lengths{2, 2, 2}, Lengths{2, 3, 4}, Lengths{4, 2, 5}}) {
        EXPECT_EQ(compute_k(build_case_code(CodeCase::A, L)), 3);
    }
}

TEST(ComputeK, CaseBGcdFormula) {
    EXPECT_EQ(compute_k(build_case_code(CodeCase::B, {3, 3, 4})), 12);
}

TEST(ComputeK, CaseDGainsLinearTerm) {
    EXPECT_EQ(compute_k(build_case_code(CodeCase::D, {3, 3, 4})), 36);
}

TEST(LogicalBasis, ToricHasTwoPerSideOfWeightTwo) {
    const CssCode code = toric(2, 2);
    for (Side side : {Side::X, Side::Z}) {
        const auto basis = logical_basis(code, side);
        ASSERT_EQ(basis.size(), 2u);
        const BitMatrix& annihilator = side == Side::Z ? code.hx : code.hz;
        const BitMatrix& stabilizers = side == Side::Z ? code.hz : code.hx;
        for (const BitVector& v : basis) {
            ASSERT_TRUE(mat_vec(annihilator, v).is_zero());
            ASSERT_FALSE(in_row_space(stabilizers, v));
        }
    }
    // Exhaustive check: the lightest Z-logical has weight 2.
    std::size_t lightest = code.n;
    for (std::size_t bits = 1; bits < (std::size_t{1} << code.n); ++bits) {
        BitVector v(code.n);
        for (std::size_t i = 0; i < code.n; ++i) {
            if (bits & (std::size_t{1} << i)) {
                v.set(i, true);
            }
        }
        if (mat_vec(code.hx, v).is_zero() && !in_row_space(code.hz, v)) {
            lightest = std::min(lightest, v.weight());
        }
    }
    EXPECT_EQ(lightest, 2u);
}

TEST(LogicalBasis, SizeMatchesKOnRandomConstructions) {
    std::mt19937_64 gen(51);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + gen() % 2;
        const ConstructionSpec spec = qcss_test::random_legal_spec(gen, d);
        const CssCode code = assemble(spec, qcss_test::random_codes(gen, d, 4));
        const long long k = compute_k(code);
        ASSERT_GE(k, 0);
        ASSERT_EQ(logical_basis(code, Side::Z).size(), static_cast<std::size_t>(k));
        ASSERT_EQ(logical_basis(code, Side::X).size(), static_cast<std::size_t>(k));
    }
}

TEST(LogicalBasis, FullRankPairHasNoLogicals) {
    CssCode code;
    code.hx = BitMatrix(1, 2);
    code.hx.set(0, 0, true);
    code.hz = BitMatrix(1, 2);
    code.hz.set(0, 1, true);
    code.n = 2;
    ASSERT_TRUE(validate_css(code));
    EXPECT_EQ(compute_k(code), 0);
    EXPECT_TRUE(logical_basis(code, Side::Z).empty());
    EXPECT_TRUE(logical_basis(code, Side::X).empty());
}

TEST(DistanceExact, ToricTwoByTwo) {
    const DistanceResult r = distance_exact(toric(2, 2));
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.kind, DistanceKind::exact);
}

TEST(DistanceExact, MatchesBruteForceOracleOnTinyCodes) {
    // Independent oracle: sweep all 2^n Pauli supports.
    {
        const CssCode code = toric(2, 2);  // n = 8
        const auto oracle = qcss_test::exhaustive_distance(code);
        ASSERT_TRUE(oracle.has_value());
        EXPECT_EQ(distance_exact(code).d, *oracle);
    }
    {
        const CssCode code = toric(2, 3);  // n = 12
        const auto oracle = qcss_test::exhaustive_distance(code);
        ASSERT_TRUE(oracle.has_value());
        EXPECT_EQ(distance_exact(code).d, *oracle);
    }
    {
        // Random LDPC product with a handful of qubits.
        std::mt19937_64 gen(3);
        const ConstructionSpec spec(2, {BlockLabel("BC")}, {1});
        for (int trial = 0; trial < 8; ++trial) {
            const auto codes = qcss_test::random_codes(gen, 2, 3);
            const CssCode code = assemble(spec, codes);
            if (code.n > 14 || compute_k(code) <= 0) {
                continue;
            }
            const auto oracle = qcss_test::exhaustive_distance(code);
            ASSERT_TRUE(oracle.has_value());
            ASSERT_EQ(distance_exact(code).d, *oracle) << spec.str();
        }
    }
}

TEST(DistanceExact, CaseAAtTwoCubed) {
    const DistanceResult r = distance_exact(build_case_code(CodeCase::A, {2, 2, 2}));
    EXPECT_EQ(r.d, 2u);
}

TEST(DistanceExact, CaseCBoundedByWeightFourLoop) {
    const DistanceResult r = distance_exact(build_case_code(CodeCase::C, {2, 2, 2}));
    EXPECT_LE(r.d, 4u);
    EXPECT_EQ(r.d, 2u);  // min(L1, L2, L3, 4)
}

TEST(DistanceExact, UndefinedForZeroK) {
    CssCode code;
    code.hx = BitMatrix(1, 2);
    code.hx.set(0, 0, true);
    code.hz = BitMatrix(1, 2);
    code.hz.set(0, 1, true);
    code.n = 2;
    EXPECT_THROW(distance_exact(code), undefined_distance_error);
}

TEST(DistanceExact, TinyBudgetRefusalNamesRequiredSize) {
    const CssCode code = build_case_code(CodeCase::B, {2, 2, 2});
    try {
        distance_exact(code, 4);
        FAIL() << "expected budget refusal";
    } catch (const budget_error& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("2^"), std::string::npos) << what;
        EXPECT_NE(what.find("kernel vectors"), std::string::npos) << what;
    }
}

TEST(DistanceEstimate, UpperBoundsAndMatchesExactOnSmallCases) {
    for (CodeCase c : kAllCases) {
        for (std::size_t l : {2, 3}) {
            const Lengths L{l, 2, l};
            const CssCode code = build_case_code(c, L);
            const DistanceResult exact = distance_exact(code);
            const DistanceResult estimate = distance_estimate(code, 500, 1);
            ASSERT_GE(estimate.d, exact.d);
            ASSERT_EQ(estimate.d, exact.d) << case_name(c) << " L=" << l;
        }
    }
}

TEST(DistanceEstimate, DeterministicGivenTrialsAndSeed) {
    const CssCode code = build_case_code(CodeCase::B, {2, 3, 2});
    const DistanceResult a = distance_estimate(code, 100, 7);
    const DistanceResult b = distance_estimate(code, 100, 7);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.d_z, b.d_z);
    EXPECT_EQ(a.d_x, b.d_x);
}

TEST(DistanceEstimate, MonotoneNonincreasingInTrials) {
    const CssCode code = build_case_code(CodeCase::D, {3, 3, 2});
    const DistanceResult few = distance_estimate(code, 10, 5);
    const DistanceResult many = distance_estimate(code, 200, 5);
    EXPECT_GE(few.d, many.d);
}

TEST(DistanceEstimate, ZeroTrialsRejected) {
    EXPECT_THROW(distance_estimate(toric(2, 2), 0, 1), std::invalid_argument);
}

TEST(ComputeMetrics, ExactWhenSmallEstimateWhenRefused) {
    const CssCode code = build_case_code(CodeCase::A, {2, 2, 2});
    {
        const CodeMetrics m = compute_metrics(code);
        ASSERT_TRUE(m.distance.has_value());
        EXPECT_EQ(m.distance->kind, DistanceKind::exact);
        EXPECT_EQ(m.distance->d, 2u);
        EXPECT_EQ(m.k, 3);
    }
    {
        MetricsOptions options;
        options.budget = 2;
        options.trials = 200;
        options.seed = 1;
        const CodeMetrics m = compute_metrics(code, options);
        ASSERT_TRUE(m.distance.has_value());
        EXPECT_EQ(m.distance->kind, DistanceKind::upper_bound);
        EXPECT_EQ(m.distance->d, 2u);
    }
}

TEST(ComputeMetrics, ZeroKReportsNoDistance) {
    CssCode code;
    code.hx = BitMatrix(1, 2);
    code.hx.set(0, 0, true);
    code.hz = BitMatrix(1, 2);
    code.hz.set(0, 1, true);
    code.n = 2;
    const CodeMetrics m = compute_metrics(code);
    EXPECT_EQ(m.k, 0);
    EXPECT_FALSE(m.distance.has_value());
}

}  // namespace
