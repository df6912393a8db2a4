#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "qcss/analytics.hpp"
#include "qcss/classify.hpp"
#include "qcss/metrics.hpp"

using namespace qcss;

namespace {

TEST(Predict, CaseAExamples) {
    const Prediction p = predict(CodeCase::A, {4, 5, 6});
    EXPECT_EQ(p.n, 360u);
    EXPECT_EQ(*p.k, 3);
    EXPECT_EQ(p.d, 4u);
}

TEST(Predict, CaseBExamples) {
    const Prediction p = predict(CodeCase::B, {3, 3, 4});
    EXPECT_EQ(*p.k, 12);
    EXPECT_EQ(p.d, 4u);  // min(2*lcm(3,3)=6, 9, 4)
    EXPECT_EQ(predict(CodeCase::B, {2, 6, 9}).d, 9u);
    EXPECT_EQ(*predict(CodeCase::B, {2, 6, 9}).k, 8);
}

TEST(Predict, CaseCCoprimeBeta) {
    const Prediction p = predict(CodeCase::C, {2, 3, 5});
    EXPECT_FALSE(p.k.has_value());
    EXPECT_EQ(p.d, 2u);  // beta = 5, min(2,3,5,5)
    EXPECT_EQ(predict(CodeCase::C, {5, 6, 7}).d, 5u);
    EXPECT_EQ(predict(CodeCase::C, {4, 4, 5}).d, 4u);  // shared divisor: beta = 4
}

TEST(Predict, CaseDExamples) {
    const Prediction p = predict(CodeCase::D, {3, 3, 12});
    EXPECT_EQ(*p.k, 100);
    EXPECT_EQ(p.d, 6u);
    EXPECT_EQ(*predict(CodeCase::D, {2, 2, 5}).k, 8);  // alpha = 0
}

TEST(Predict, MatchesComputedKOnSmallGrid) {
    for (std::size_t l1 = 1; l1 <= 3; ++l1) {
        for (std::size_t l2 = 1; l2 <= 3; ++l2) {
            for (std::size_t l3 = 1; l3 <= 3; ++l3) {
                const Lengths L{l1, l2, l3};
                for (CodeCase c : {CodeCase::A, CodeCase::B, CodeCase::D}) {
                    ASSERT_EQ(compute_k(build_case_code(c, L)), *predict(c, L).k)
                        << case_name(c) << " " << l1 << l2 << l3;
                }
            }
        }
    }
}

TEST(Predict, DistanceFormulasMatchExactOracleUpToLengthThree) {
    for (std::size_t l1 = 1; l1 <= 3; ++l1) {
        for (std::size_t l2 = 1; l2 <= 3; ++l2) {
            for (std::size_t l3 = 1; l3 <= 3; ++l3) {
                const Lengths L{l1, l2, l3};
                for (CodeCase c : kAllCases) {
                    const CssCode code = build_case_code(c, L);
                    if (compute_k(code) <= 0) {
                        continue;
                    }
                    ASSERT_EQ(distance_exact(code).d, predict(c, L).d)
                        << case_name(c) << " " << l1 << l2 << l3;
                }
            }
        }
    }
}

TEST(Predict, EstimatorMatchesExactOnSampledTriples) {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Lengths L{1 + gen() % 3, 1 + gen() % 3, 1 + gen() % 3};
        const CodeCase c = kAllCases[gen() % 4];
        const CssCode code = build_case_code(c, L);
        if (compute_k(code) <= 0) {
            continue;
        }
        const DistanceResult exact = distance_exact(code);
        const DistanceResult estimate = distance_estimate(code, 10000, 1);
        ASSERT_GE(estimate.d, exact.d);
        ASSERT_EQ(estimate.d, exact.d)
            << case_name(c) << " " << L[0] << L[1] << L[2];
    }
}

TEST(Predict, CaseBDimensionIndependentOfThirdLength) {
    for (std::size_t a = 1; a <= 5; ++a) {
        for (std::size_t b = 1; b <= 5; ++b) {
            ASSERT_EQ(compute_k(build_case_code(CodeCase::B, {2, 3, a})),
                      compute_k(build_case_code(CodeCase::B, {2, 3, b})));
        }
    }
}

TEST(CanonicalSpecs, BijectiveWithClassifyClasses) {
    const auto classes = classify(3);
    ASSERT_EQ(classes.size(), 4u);
    for (CodeCase c : kAllCases) {
        const ConstructionSpec spec = canonical_spec(c);
        // The case's spec must land in exactly one class key.
        std::size_t matches = 0;
        for (const auto& cls : classes) {
            if (cls.seed_size == spec.z_seed.size() && cls.flip_counts == spec.flip_counts) {
                ++matches;
            }
        }
        ASSERT_EQ(matches, 1u) << case_name(c);
    }
}

TEST(Scan, TinyCaseAOnlyRow) {
    ScanOptions options;
    options.distance_trials = 100;
    options.seed = 1;
    const auto rows = scan_fixed_n(3, {CodeCase::A}, options);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].L, (Lengths{1, 1, 1}));
    EXPECT_EQ(rows[0].k, 3);
    EXPECT_EQ(rows[0].n, 3u);
}

TEST(Scan, NoFactorizationYieldsNoRows) {
    ScanOptions options;
    options.distance_trials = 10;
    EXPECT_TRUE(scan_fixed_n(5, {CodeCase::A, CodeCase::B}, options).empty());
}

TEST(Scan, RowsAreSortedAndCoverAllOrderedTriples) {
    ScanOptions options;
    options.distance_trials = 100;
    options.seed = 1;
    const auto rows = scan_fixed_n(32, {CodeCase::B}, options);
    // 8 = 2^3 has 3+3... ordered triples of product 8: (1,1,8),(1,2,4),(1,4,2),
    // (1,8,1),(2,1,4),(2,2,2),(2,4,1),(4,1,2),(4,2,1),(8,1,1) -> 10 rows.
    ASSERT_EQ(rows.size(), 10u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_LT(rows[i - 1].L, rows[i].L);
    }
    for (const ScanRow& row : rows) {
        ASSERT_EQ(row.n, 32u);
        ASSERT_EQ(row.k, 4 * static_cast<long long>(std::gcd(row.L[0], row.L[1])));
    }
}

TEST(Lattice, CaseASitesAndDegrees) {
    const LatticeGeometry g = lattice_geometry(CodeCase::A, {2, 2, 2});
    EXPECT_EQ(g.qubits.size(), 24u);
    EXPECT_EQ(g.z_checks.size(), 8u);
    EXPECT_EQ(g.x_checks.size(), 24u);
    for (const auto& neighbors : g.z_incidence) {
        ASSERT_EQ(neighbors.size(), 6u);
    }
    for (const auto& neighbors : g.x_incidence) {
        ASSERT_EQ(neighbors.size(), 4u);
    }
}

TEST(Lattice, CaseBAddsBodyCenters) {
    const LatticeGeometry g = lattice_geometry(CodeCase::B, {2, 2, 2});
    EXPECT_EQ(g.qubits.size(), 32u);
    std::size_t body_centers = 0;
    for (const LatticeSite& site : g.qubits) {
        if (site.block.pattern == "CCC") {
            ++body_centers;
            for (double coord : site.coords) {
                ASSERT_EQ(std::fmod(coord, 1.0), 0.5);
            }
        }
    }
    EXPECT_EQ(body_centers, 8u);
}

TEST(Lattice, CoordinateConventions) {
    const LatticeGeometry g = lattice_geometry(CodeCase::C, {2, 3, 4});
    auto half_count = [](const LatticeSite& s) {
        std::size_t count = 0;
        for (double c : s.coords) {
            if (std::fmod(c, 1.0) == 0.5) {
                ++count;
            }
        }
        return count;
    };
    for (const LatticeSite& s : g.z_checks) {
        ASSERT_EQ(half_count(s), s.block.b_count() == 3 ? 0u : 2u);
    }
    for (const LatticeSite& s : g.x_checks) {
        ASSERT_EQ(half_count(s), 2u);  // plaquette centers
    }
    for (const LatticeSite& s : g.qubits) {
        const std::size_t halves = half_count(s);
        ASSERT_TRUE(halves == 1 || halves == 3);  // edges or body centers
    }
}

TEST(Lattice, GeometricIncidenceEqualsMatrixPattern) {
    for (CodeCase c : kAllCases) {
        for (const Lengths& L : {Lengths{2, 2, 2}, Lengths{2, 3, 4}, Lengths{1, 3, 3}}) {
            const LatticeGeometry g = lattice_geometry(c, L);
            const CssCode code = build_case_code(c, L);
            ASSERT_EQ(g.z_incidence.size(), code.hz.rows());
            ASSERT_EQ(g.x_incidence.size(), code.hx.rows());
            auto compare = [&](const BitMatrix& h,
                               const std::vector<std::vector<std::size_t>>& incidence) {
                for (std::size_t r = 0; r < h.rows(); ++r) {
                    std::vector<std::size_t> row_pattern;
                    h.for_each_set_bit(r, [&](std::size_t col) { row_pattern.push_back(col); });
                    ASSERT_EQ(incidence[r], row_pattern)
                        << case_name(c) << " (" << L[0] << "," << L[1] << "," << L[2]
                        << ") row " << r;
                }
            };
            compare(code.hz, g.z_incidence);
            compare(code.hx, g.x_incidence);
        }
    }
}

}  // namespace
