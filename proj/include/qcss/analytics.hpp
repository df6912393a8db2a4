#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcss/classical_code.hpp"
#include "qcss/construct.hpp"
#include "qcss/metrics.hpp"

namespace qcss {

/// The four inequivalent three-sector constructions.
enum class CodeCase { A, B, C, D };

inline const char* case_name(CodeCase c) {
    switch (c) {
        case CodeCase::A: return "A";
        case CodeCase::B: return "B";
        case CodeCase::C: return "C";
        case CodeCase::D: return "D";
    }
    return "?";
}

inline CodeCase case_from_name(const std::string& name) {
    if (name == "A") return CodeCase::A;
    if (name == "B") return CodeCase::B;
    if (name == "C") return CodeCase::C;
    if (name == "D") return CodeCase::D;
    throw std::invalid_argument("unknown case \"" + name + "\" (expected A, B, C or D)");
}

inline constexpr std::array<CodeCase, 4> kAllCases = {CodeCase::A, CodeCase::B, CodeCase::C,
                                                      CodeCase::D};

/// Canonical spec for each case. The two-seed cases single out sector 3, so
/// closed-form expressions below speak of L1, L2 (symmetric pair) and L3.
///   A: seed {BBB},     flips {1}      B: seed {BBB,CCB}, flips {1}
///   C: seed {BBB},     flips {1,3}    D: seed {BBB,CCB}, flips {1,3}
inline ConstructionSpec canonical_spec(CodeCase c) {
    const std::set<BlockLabel> one_seed{BlockLabel("BBB")};
    const std::set<BlockLabel> two_seed{BlockLabel("BBB"), BlockLabel("CCB")};
    switch (c) {
        case CodeCase::A: return ConstructionSpec(3, one_seed, {1});
        case CodeCase::B: return ConstructionSpec(3, two_seed, {1});
        case CodeCase::C: return ConstructionSpec(3, one_seed, {1, 3});
        case CodeCase::D: return ConstructionSpec(3, two_seed, {1, 3});
    }
    throw std::logic_error("canonical_spec: bad case");
}

using Lengths = std::array<std::size_t, 3>;

/// Closed-form prediction for repetition-code inputs of lengths L.
struct Prediction {
    std::size_t n = 0;
    /// Absent for case C, which has no known closed form.
    std::optional<long long> k;
    std::size_t d = 0;
};

/// Closed forms for the four cases:
///   A: k = 3,                          d = min(L1, L2, L3)
///   B: k = 4 gcd(L1,L2),               d = min(2 lcm(L1,L2), L1 L2, L3)
///   C: k = (no closed form),           d = min(L1, L2, L3, beta)
///   D: k = 4 gcd(L1,L2) + alpha(L3-1), d as in B
/// with beta = 5 when L1, L2, L3 are pairwise coprime and 4 otherwise, and
/// alpha = 8 when 3 divides both L1 and L2 and 0 otherwise.
///
/// The 2*lcm coefficient in the B/D distance matters: it is what the numeric
/// estimator confirms (for example (2,6,9) has d = 9, not min(lcm,..) = 6).
inline Prediction predict(CodeCase c, const Lengths& L) {
    for (std::size_t Li : L) {
        if (Li < 1) {
            throw std::invalid_argument("predict: lengths must be >= 1");
        }
    }
    const std::size_t product = L[0] * L[1] * L[2];
    const std::size_t g = std::gcd(L[0], L[1]);
    const std::size_t lcm12 = std::lcm(L[0], L[1]);
    Prediction p;
    switch (c) {
        case CodeCase::A:
            p.n = 3 * product;
            p.k = 3;
            p.d = std::min({L[0], L[1], L[2]});
            break;
        case CodeCase::B:
            p.n = 4 * product;
            p.k = static_cast<long long>(4 * g);
            p.d = std::min({2 * lcm12, L[0] * L[1], L[2]});
            break;
        case CodeCase::C: {
            p.n = 4 * product;
            const bool coprime = std::gcd(L[0], L[1]) == 1 && std::gcd(L[0], L[2]) == 1 &&
                                 std::gcd(L[1], L[2]) == 1;
            const std::size_t beta = coprime ? 5 : 4;
            p.d = std::min({L[0], L[1], L[2], beta});
            break;
        }
        case CodeCase::D: {
            p.n = 4 * product;
            const std::size_t alpha = (L[0] % 3 == 0 && L[1] % 3 == 0) ? 8 : 0;
            p.k = static_cast<long long>(4 * g + alpha * (L[2] - 1));
            p.d = std::min({2 * lcm12, L[0] * L[1], L[2]});
            break;
        }
    }
    return p;
}

/// Builds the case's code from repetition inputs.
inline CssCode build_case_code(CodeCase c, const Lengths& L) {
    const std::vector<ClassicalCode> codes = {repetition_code(L[0]), repetition_code(L[1]),
                                              repetition_code(L[2])};
    return assemble(canonical_spec(c), codes);
}

struct ScanRow {
    CodeCase code_case = CodeCase::A;
    Lengths L{1, 1, 1};
    std::size_t n = 0;
    long long k = 0;
    /// Absent when k == 0.
    std::optional<std::size_t> d;
    std::string d_kind;  // "exact", "upper_bound" or "undefined"
};

struct ScanOptions {
    uint64_t distance_trials = 1000;
    uint64_t seed = 0;
    std::size_t budget = kDefaultDistanceBudget;
};

/// All ordered length triples realizing exactly n qubits for the requested
/// cases, with numerically computed k and measured d per row. Rows are sorted
/// by (case, L); cases whose qubit-count formula does not divide n simply
/// contribute no rows.
inline std::vector<ScanRow> scan_fixed_n(std::size_t n, const std::set<CodeCase>& cases,
                                         const ScanOptions& options = {}) {
    if (n < 1) {
        throw std::invalid_argument("scan_fixed_n: n must be >= 1");
    }
    std::vector<ScanRow> rows;
    for (CodeCase c : kAllCases) {
        if (!cases.count(c)) {
            continue;
        }
        const std::size_t per_block = c == CodeCase::A ? 3 : 4;
        if (n % per_block != 0) {
            continue;
        }
        const std::size_t target = n / per_block;
        for (std::size_t l1 = 1; l1 <= target; ++l1) {
            if (target % l1 != 0) {
                continue;
            }
            const std::size_t rest = target / l1;
            for (std::size_t l2 = 1; l2 <= rest; ++l2) {
                if (rest % l2 != 0) {
                    continue;
                }
                const Lengths L{l1, l2, rest / l2};
                const CssCode code = build_case_code(c, L);
                MetricsOptions mopts;
                mopts.budget = options.budget;
                mopts.trials = options.distance_trials;
                mopts.seed = options.seed;
                const CodeMetrics metrics = compute_metrics(code, mopts);

                ScanRow row;
                row.code_case = c;
                row.L = L;
                row.n = metrics.n;
                row.k = metrics.k;
                if (metrics.distance) {
                    row.d = metrics.distance->d;
                    row.d_kind =
                        metrics.distance->kind == DistanceKind::exact ? "exact" : "upper_bound";
                } else {
                    row.d_kind = "undefined";
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

/// One lattice site: a block element placed on the 3-torus. Sites sit at
/// integer coordinates (corner checks), one half-integer coordinate (edge
/// qubits), two (plaquette checks) or three (body-center qubits), matching
/// which sectors of the block label carry checks.
struct LatticeSite {
    BlockLabel block;
    std::array<std::size_t, 3> index;   // per-sector element index
    std::array<double, 3> coords;       // half-integer lattice coordinates
    std::size_t matrix_index = 0;       // column (qubits) or row (checks)
};

/// Geometry document for one case on an L1 x L2 x L3 torus. Incidence lists
/// are derived geometrically (checks reach qubits offset by +-1/2 in each
/// flipped sector, with even-multiplicity hits cancelling), which is an
/// independent route to the same adjacency as the assembled matrices.
struct LatticeGeometry {
    CodeCase code_case = CodeCase::A;
    Lengths L{1, 1, 1};
    std::vector<LatticeSite> qubits;
    std::vector<LatticeSite> z_checks;
    std::vector<LatticeSite> x_checks;
    std::vector<std::vector<std::size_t>> z_incidence;  // per Z row: qubit columns
    std::vector<std::vector<std::size_t>> x_incidence;
};

namespace detail {

inline std::vector<LatticeSite> lattice_sites(const std::vector<BlockLabel>& blocks,
                                              const std::map<BlockLabel, BlockRange>& ranges,
                                              const Lengths& L) {
    std::vector<LatticeSite> sites;
    for (const BlockLabel& block : blocks) {
        const BlockRange range = ranges.at(block);
        std::size_t flat = 0;
        for (std::size_t i1 = 0; i1 < L[0]; ++i1) {
            for (std::size_t i2 = 0; i2 < L[1]; ++i2) {
                for (std::size_t i3 = 0; i3 < L[2]; ++i3, ++flat) {
                    LatticeSite site;
                    site.block = block;
                    site.index = {i1, i2, i3};
                    for (std::size_t l = 0; l < 3; ++l) {
                        site.coords[l] = static_cast<double>(site.index[l]) +
                                         (block.pattern[l] == 'C' ? 0.5 : 0.0);
                    }
                    site.matrix_index = range.begin + flat;
                    sites.push_back(std::move(site));
                }
            }
        }
    }
    return sites;
}

/// Geometric incidence of one check site: walk every +-1/2 offset pattern
/// over the flipped sectors; targets hit an even number of times cancel
/// (which is exactly what collapses the length-1 sectors).
inline std::vector<std::size_t> geometric_incidence(const LatticeSite& check,
                                                    const ConstructionSpec& spec,
                                                    const std::map<BlockLabel, BlockRange>& ranges,
                                                    const Lengths& L) {
    std::set<std::size_t> odd_hits;
    for (const auto& [qubit_block, range] : ranges) {
        std::vector<std::size_t> flipped;
        for (std::size_t l = 0; l < 3; ++l) {
            if (qubit_block.pattern[l] != check.block.pattern[l]) {
                flipped.push_back(l);
            }
        }
        if (!spec.flip_counts.count(flipped.size())) {
            continue;
        }
        const std::size_t strides[3] = {L[1] * L[2], L[2], 1};
        for (std::size_t signs = 0; signs < (std::size_t{1} << flipped.size()); ++signs) {
            std::array<std::size_t, 3> target = check.index;
            for (std::size_t b = 0; b < flipped.size(); ++b) {
                const std::size_t l = flipped[b];
                // Half-unit coordinate of the check in sector l, offset by
                // +-1 half-unit, wrapped on the torus of circumference 2L.
                const std::size_t two_l = 2 * L[l];
                const std::size_t half = 2 * check.index[l] + (check.block.pattern[l] == 'C');
                const std::size_t moved =
                    (signs >> b) & 1 ? (half + 1) % two_l : (half + two_l - 1) % two_l;
                target[l] = qubit_block.pattern[l] == 'C' ? (moved - 1) / 2 : moved / 2;
            }
            const std::size_t column =
                range.begin + target[0] * strides[0] + target[1] * strides[1] + target[2];
            const auto [it, inserted] = odd_hits.insert(column);
            if (!inserted) {
                odd_hits.erase(it);
            }
        }
    }
    return std::vector<std::size_t>(odd_hits.begin(), odd_hits.end());
}

}  // namespace detail

/// Builds the lattice document for a case: site placements for all blocks
/// plus geometric incidence lists (indexed like the assembled hx/hz).
inline LatticeGeometry lattice_geometry(CodeCase c, const Lengths& L) {
    for (std::size_t Li : L) {
        if (Li < 1) {
            throw std::invalid_argument("lattice_geometry: lengths must be >= 1");
        }
    }
    const ConstructionSpec spec = canonical_spec(c);
    const RoleAssignment roles = derive_roles(spec);

    // Block sizes equal L1*L2*L3 for every block (square repetition inputs),
    // so ranges can be laid out directly in role order.
    const std::size_t block = L[0] * L[1] * L[2];
    auto make_ranges = [&](const std::vector<BlockLabel>& blocks) {
        std::map<BlockLabel, BlockRange> ranges;
        std::size_t at = 0;
        for (const BlockLabel& b : blocks) {
            ranges[b] = BlockRange{at, at + block};
            at += block;
        }
        return ranges;
    };
    const auto qubit_ranges = make_ranges(roles.qubit_blocks);
    const auto z_ranges = make_ranges(roles.z_blocks);
    const auto x_ranges = make_ranges(roles.x_blocks);

    LatticeGeometry geometry;
    geometry.code_case = c;
    geometry.L = L;
    geometry.qubits = detail::lattice_sites(roles.qubit_blocks, qubit_ranges, L);
    geometry.z_checks = detail::lattice_sites(roles.z_blocks, z_ranges, L);
    geometry.x_checks = detail::lattice_sites(roles.x_blocks, x_ranges, L);

    geometry.z_incidence.resize(geometry.z_checks.size());
    for (const LatticeSite& site : geometry.z_checks) {
        geometry.z_incidence[site.matrix_index] =
            detail::geometric_incidence(site, spec, qubit_ranges, L);
    }
    geometry.x_incidence.resize(geometry.x_checks.size());
    for (const LatticeSite& site : geometry.x_checks) {
        geometry.x_incidence[site.matrix_index] =
            detail::geometric_incidence(site, spec, qubit_ranges, L);
    }
    return geometry;
}

}  // namespace qcss
