#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qcss/bit_matrix.hpp"
#include "qcss/classical_code.hpp"

namespace qcss {

/// Construction-rule violation (bad seed parity, no X-checks, decoupling...).
class legality_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Work-size refusal: the requested computation exceeds the configured cap.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A block label: one letter per sector, 'B' when the block carries the
/// sector's bits, 'C' when it carries the sector's checks. Ordering is
/// lexicographic with B < C, which fixes every emitted block layout.
struct BlockLabel {
    std::string pattern;

    BlockLabel() = default;
    explicit BlockLabel(std::string p) : pattern(std::move(p)) {
        for (char ch : pattern) {
            if (ch != 'B' && ch != 'C') {
                throw std::invalid_argument("BlockLabel: invalid letter '" + std::string(1, ch) +
                                            "' in \"" + pattern + "\" (expected B or C)");
            }
        }
    }

    std::size_t dims() const { return pattern.size(); }

    std::size_t b_count() const {
        return static_cast<std::size_t>(std::count(pattern.begin(), pattern.end(), 'B'));
    }

    bool is_check_like() const { return b_count() % 2 == 1; }

    /// Number of sectors where the two labels differ.
    std::size_t distance(const BlockLabel& other) const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            d += pattern[i] != other.pattern[i];
        }
        return d;
    }

    /// Label with the given sectors' letters interchanged.
    BlockLabel flipped(const std::vector<std::size_t>& sectors) const {
        BlockLabel out = *this;
        for (std::size_t s : sectors) {
            out.pattern[s] = out.pattern[s] == 'B' ? 'C' : 'B';
        }
        return out;
    }

    bool operator<(const BlockLabel& other) const { return pattern < other.pattern; }
    bool operator==(const BlockLabel& other) const { return pattern == other.pattern; }
    bool operator!=(const BlockLabel& other) const { return pattern != other.pattern; }
};

/// A construction instance: the number of classical-code sectors, the initial
/// set of Z-check blocks, and the set of allowed flip counts. Flip counts are
/// odd; seeds carry an odd number of B letters.
struct ConstructionSpec {
    std::size_t d = 0;
    std::set<BlockLabel> z_seed;
    std::set<std::size_t> flip_counts;

    ConstructionSpec() = default;

    ConstructionSpec(std::size_t dims, std::set<BlockLabel> seed, std::set<std::size_t> flips)
        : d(dims), z_seed(std::move(seed)), flip_counts(std::move(flips)) {
        validate();
    }

    void validate() const {
        if (d < 1) {
            throw legality_error("spec: d must be >= 1");
        }
        if (z_seed.empty()) {
            throw legality_error("spec: the Z-check seed set is empty");
        }
        for (const BlockLabel& label : z_seed) {
            if (label.dims() != d) {
                throw legality_error("spec: seed block \"" + label.pattern + "\" has " +
                                     std::to_string(label.dims()) + " sectors, expected " +
                                     std::to_string(d));
            }
            if (!label.is_check_like()) {
                throw legality_error("spec: seed block \"" + label.pattern +
                                     "\" has an even number of B letters; Z-check blocks need an "
                                     "odd count");
            }
        }
        if (flip_counts.empty()) {
            throw legality_error("spec: the flip-count set is empty");
        }
        for (std::size_t f : flip_counts) {
            if (f % 2 == 0 || f < 1 || f > d) {
                throw legality_error("spec: flip count " + std::to_string(f) +
                                     " must be odd and within [1, " + std::to_string(d) + "]");
            }
        }
    }

    std::string str() const {
        std::string s = "d=" + std::to_string(d) + " seed={";
        bool first = true;
        for (const BlockLabel& label : z_seed) {
            if (!first) {
                s += ",";
            }
            s += label.pattern;
            first = false;
        }
        s += "} flips={";
        first = true;
        for (std::size_t f : flip_counts) {
            if (!first) {
                s += ",";
            }
            s += std::to_string(f);
            first = false;
        }
        return s + "}";
    }

    bool operator<(const ConstructionSpec& other) const {
        return std::tie(d, z_seed, flip_counts) <
               std::tie(other.d, other.z_seed, other.flip_counts);
    }
    bool operator==(const ConstructionSpec& other) const {
        return d == other.d && z_seed == other.z_seed && flip_counts == other.flip_counts;
    }
};

/// Block roles produced by the three construction steps, each list sorted
/// lexicographically for reproducible layouts.
struct RoleAssignment {
    std::vector<BlockLabel> z_blocks;
    std::vector<BlockLabel> qubit_blocks;
    std::vector<BlockLabel> x_blocks;
};

namespace detail {

template <typename Fn>
void for_each_sector_subset(std::size_t dims, std::size_t size, Fn&& fn) {
    std::vector<std::size_t> subset(size);
    // Standard lexicographic combinations of {0..dims-1}.
    for (std::size_t i = 0; i < size; ++i) {
        subset[i] = i;
    }
    if (size > dims) {
        return;
    }
    while (true) {
        fn(subset);
        std::size_t i = size;
        while (i > 0 && subset[i - 1] == dims - size + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++subset[i - 1];
        for (std::size_t j = i; j < size; ++j) {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

inline std::set<BlockLabel> flip_closure(const std::set<BlockLabel>& sources,
                                         const std::set<std::size_t>& flip_counts,
                                         std::size_t dims) {
    std::set<BlockLabel> out;
    for (const BlockLabel& label : sources) {
        for (std::size_t f : flip_counts) {
            for_each_sector_subset(dims, f, [&](const std::vector<std::size_t>& sectors) {
                out.insert(label.flipped(sectors));
            });
        }
    }
    return out;
}

}  // namespace detail

/// Steps 1-3 of the construction: the seed set is the Z-checks, applying
/// every allowed flip count to them yields the qubit blocks, and applying
/// the same flips to the qubit blocks yields the X-checks (minus any block
/// that is already a Z-check).
inline RoleAssignment derive_roles(const ConstructionSpec& spec) {
    spec.validate();
    const std::set<BlockLabel> qubits = detail::flip_closure(spec.z_seed, spec.flip_counts, spec.d);
    std::set<BlockLabel> x_candidates = detail::flip_closure(qubits, spec.flip_counts, spec.d);
    for (const BlockLabel& z : spec.z_seed) {
        x_candidates.erase(z);
    }

    RoleAssignment roles;
    roles.z_blocks.assign(spec.z_seed.begin(), spec.z_seed.end());
    roles.qubit_blocks.assign(qubits.begin(), qubits.end());
    roles.x_blocks.assign(x_candidates.begin(), x_candidates.end());

    // Parity bookkeeping: odd flips cannot change it, but the layout logic
    // downstream relies on it, so fail loudly rather than subtly.
    for (const BlockLabel& q : roles.qubit_blocks) {
        if (q.is_check_like()) {
            throw legality_error("derive_roles: qubit block \"" + q.pattern +
                                 "\" has odd B-parity");
        }
    }
    for (const BlockLabel& x : roles.x_blocks) {
        if (!x.is_check_like()) {
            throw legality_error("derive_roles: X-check block \"" + x.pattern +
                                 "\" has even B-parity");
        }
    }
    return roles;
}

/// Index range [begin, end) of a block's rows or columns.
struct BlockRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const { return end - begin; }
};

/// Assembled CSS pair plus the layout mapping each block label to its row or
/// column range. Columns are qubits; hx and hz rows are X-/Z-check generators.
struct CssCode {
    BitMatrix hx;
    BitMatrix hz;
    std::size_t n = 0;
    RoleAssignment roles;
    std::map<BlockLabel, BlockRange> qubit_ranges;
    std::map<BlockLabel, BlockRange> z_ranges;
    std::map<BlockLabel, BlockRange> x_ranges;
};

/// Legality report for a derived role assignment.
struct LegalityReport {
    bool no_x_checks = false;
    bool decoupled = false;
    bool role_conflict = false;

    bool legal() const { return !no_x_checks && !decoupled && !role_conflict; }

    std::string str() const {
        if (legal()) {
            return "legal";
        }
        std::string s;
        auto append = [&s](const char* flag) {
            if (!s.empty()) {
                s += ",";
            }
            s += flag;
        };
        if (no_x_checks) {
            append("no_x_checks");
        }
        if (decoupled) {
            append("decoupled");
        }
        if (role_conflict) {
            append("role_conflict");
        }
        return s;
    }
};

/// Flags constructions the classification must reject: no X-checks at all,
/// a block claimed as both X- and Z-check, or a check/qubit incidence graph
/// that splits into independent components (a decoupled code).
inline LegalityReport check_legality(const ConstructionSpec& spec, const RoleAssignment& roles) {
    LegalityReport report;
    report.no_x_checks = roles.x_blocks.empty();

    for (const BlockLabel& x : roles.x_blocks) {
        if (std::find(roles.z_blocks.begin(), roles.z_blocks.end(), x) != roles.z_blocks.end()) {
            report.role_conflict = true;
        }
    }

    // Connectivity of the block graph: nodes are all assigned blocks, edges
    // join a check block and a qubit block at label distance in flip_counts.
    std::vector<BlockLabel> nodes;
    nodes.insert(nodes.end(), roles.z_blocks.begin(), roles.z_blocks.end());
    nodes.insert(nodes.end(), roles.x_blocks.begin(), roles.x_blocks.end());
    const std::size_t num_checks = nodes.size();
    nodes.insert(nodes.end(), roles.qubit_blocks.begin(), roles.qubit_blocks.end());
    if (!nodes.empty()) {
        std::vector<std::size_t> component(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            component[i] = i;
        }
        std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
            while (component[a] != a) {
                component[a] = component[component[a]];
                a = component[a];
            }
            return a;
        };
        for (std::size_t c = 0; c < num_checks; ++c) {
            for (std::size_t q = num_checks; q < nodes.size(); ++q) {
                if (spec.flip_counts.count(nodes[c].distance(nodes[q]))) {
                    component[find(c)] = find(q);
                }
            }
        }
        const std::size_t root = find(0);
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (find(i) != root) {
                report.decoupled = true;
                break;
            }
        }
    }
    return report;
}

namespace detail {

inline std::size_t sector_dim(const ClassicalCode& code, char letter) {
    return letter == 'B' ? code.num_bits() : code.num_checks();
}

inline std::size_t block_size(const BlockLabel& label, const std::vector<ClassicalCode>& codes,
                              std::size_t cap) {
    std::size_t size = 1;
    for (std::size_t l = 0; l < label.dims(); ++l) {
        const std::size_t dim = sector_dim(codes[l], label.pattern[l]);
        if (dim != 0 && size > cap / dim) {
            throw budget_error("block \"" + label.pattern + "\" exceeds the size cap of " +
                               std::to_string(cap));
        }
        size *= dim;
    }
    return size;
}

/// The action of check block `check` on qubit block `qubit`: the Kronecker
/// product over sectors (sector 1 slowest) of H^l, (H^l)^T, or the identity,
/// depending on which side of the sector each block carries. Returns a zero
/// block when the label distance is not an allowed flip count.
inline BitMatrix action_block(const BlockLabel& check, const BlockLabel& qubit,
                              const ConstructionSpec& spec,
                              const std::vector<ClassicalCode>& codes) {
    BitMatrix acc = BitMatrix::identity(1);
    for (std::size_t l = 0; l < spec.d; ++l) {
        const char tl = check.pattern[l];
        const char ql = qubit.pattern[l];
        if (tl == ql) {
            acc = kron(acc, BitMatrix::identity(sector_dim(codes[l], tl)));
        } else if (tl == 'C') {
            acc = kron(acc, codes[l].h);
        } else {
            acc = kron(acc, codes[l].h.transposed());
        }
    }
    return acc;
}

}  // namespace detail

inline constexpr std::size_t kDefaultBlockSizeCap = std::size_t{1} << 22;

/// Assembles hx/hz from a spec and one classical code per sector. Sub-blocks
/// are laid out in lexicographic block order; within a block, multi-indices
/// follow the Kronecker convention (sector 1 slowest).
inline CssCode assemble(const ConstructionSpec& spec, const std::vector<ClassicalCode>& codes,
                        std::size_t block_size_cap = kDefaultBlockSizeCap) {
    spec.validate();
    if (codes.size() != spec.d) {
        throw std::invalid_argument("assemble: got " + std::to_string(codes.size()) +
                                    " classical codes for d=" + std::to_string(spec.d));
    }

    CssCode out;
    out.roles = derive_roles(spec);

    std::size_t n = 0;
    for (const BlockLabel& q : out.roles.qubit_blocks) {
        const std::size_t size = detail::block_size(q, codes, block_size_cap);
        if (n > block_size_cap - size) {
            throw budget_error("total qubit count exceeds the size cap of " +
                               std::to_string(block_size_cap));
        }
        out.qubit_ranges[q] = BlockRange{n, n + size};
        n += size;
    }
    out.n = n;

    auto build_side = [&](const std::vector<BlockLabel>& checks,
                          std::map<BlockLabel, BlockRange>& ranges) {
        std::size_t rows = 0;
        for (const BlockLabel& t : checks) {
            const std::size_t size = detail::block_size(t, codes, block_size_cap);
            ranges[t] = BlockRange{rows, rows + size};
            rows += size;
        }
        BitMatrix h(rows, n);
        for (const BlockLabel& t : checks) {
            const BlockRange row_range = ranges[t];
            for (const BlockLabel& q : out.roles.qubit_blocks) {
                if (!spec.flip_counts.count(t.distance(q))) {
                    continue;
                }
                const BlockRange col_range = out.qubit_ranges[q];
                const BitMatrix sub = detail::action_block(t, q, spec, codes);
                for (std::size_t r = 0; r < sub.rows(); ++r) {
                    sub.for_each_set_bit(r, [&](std::size_t c) {
                        h.set(row_range.begin + r, col_range.begin + c, true);
                    });
                }
            }
        }
        return h;
    };

    out.hz = build_side(out.roles.z_blocks, out.z_ranges);
    out.hx = build_side(out.roles.x_blocks, out.x_ranges);
    return out;
}

/// The stabilizer condition: every X-check overlaps every Z-check on an even
/// number of qubits, i.e. hx * hz^T == 0.
inline bool validate_css(const CssCode& code) {
    if (code.hx.rows() == 0 || code.hz.rows() == 0) {
        return true;
    }
    return mat_mul(code.hx, code.hz.transposed()).is_zero();
}

/// First (hx row, hz row) pair with odd overlap, or {-1,-1} when valid.
inline std::pair<long long, long long> first_css_violation(const CssCode& code) {
    if (code.hx.rows() != 0 && code.hz.rows() != 0) {
        const BitMatrix product = mat_mul(code.hx, code.hz.transposed());
        for (std::size_t r = 0; r < product.rows(); ++r) {
            if (!product.row_is_zero(r)) {
                for (std::size_t c = 0; c < product.cols(); ++c) {
                    if (product.get(r, c)) {
                        return {static_cast<long long>(r), static_cast<long long>(c)};
                    }
                }
            }
        }
    }
    return {-1, -1};
}

/// Textbook hypergraph product of two classical codes, with the same block
/// ordering as assemble (bit-bit block before check-check block). Used as an
/// independent reference for the two-sector construction.
inline std::pair<BitMatrix, BitMatrix> hgp_reference(const ClassicalCode& c1,
                                                     const ClassicalCode& c2) {
    const std::size_t n1 = c1.num_bits();
    const std::size_t m1 = c1.num_checks();
    const std::size_t n2 = c2.num_bits();
    const std::size_t m2 = c2.num_checks();

    const BitMatrix left_x = kron(c1.h, BitMatrix::identity(n2));
    const BitMatrix right_x = kron(BitMatrix::identity(m1), c2.h.transposed());
    const BitMatrix left_z = kron(BitMatrix::identity(n1), c2.h);
    const BitMatrix right_z = kron(c1.h.transposed(), BitMatrix::identity(m2));

    auto hstack = [](const BitMatrix& a, const BitMatrix& b) {
        BitMatrix out(a.rows(), a.cols() + b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            a.for_each_set_bit(r, [&](std::size_t c) { out.set(r, c, true); });
            b.for_each_set_bit(r, [&](std::size_t c) { out.set(r, a.cols() + c, true); });
        }
        return out;
    };
    return {hstack(left_x, right_x), hstack(left_z, right_z)};
}

}  // namespace qcss
