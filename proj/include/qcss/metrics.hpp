#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qcss/construct.hpp"
#include "qcss/linalg.hpp"
#include "qcss/rng.hpp"

namespace qcss {

/// Raised when a distance is requested for a code with no logical qubits.
class undefined_distance_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Side { X, Z };

inline const char* side_name(Side side) { return side == Side::X ? "X" : "Z"; }

/// Number of logical qubits: n minus the independent checks of both types.
inline long long compute_k(const CssCode& code) {
    return static_cast<long long>(code.n) - static_cast<long long>(rank(code.hx)) -
           static_cast<long long>(rank(code.hz));
}

/// Basis of the side's logical operators: for Z, vectors spanning ker(hx)
/// modulo the row space of hz (and symmetrically for X). Every returned
/// vector is annihilated by the opposite check matrix and independent of the
/// same-side stabilizers; the list has exactly k elements.
inline std::vector<BitVector> logical_basis(const CssCode& code, Side side) {
    const BitMatrix& annihilator = side == Side::Z ? code.hx : code.hz;
    const BitMatrix& stabilizers = side == Side::Z ? code.hz : code.hx;

    EchelonForm span(stabilizers);
    std::vector<BitVector> basis;
    for (const BitVector& v : kernel_basis(annihilator)) {
        BitVector reduced = span.reduce(v);
        if (!reduced.is_zero()) {
            span.add(reduced);
            basis.push_back(std::move(reduced));
        }
    }
    return basis;
}

enum class DistanceKind { exact, upper_bound };

struct DistanceResult {
    DistanceKind kind = DistanceKind::exact;
    std::size_t d = 0;
    /// Per-side minima when the computation determined them.
    std::optional<std::size_t> d_x;
    std::optional<std::size_t> d_z;
    std::string method;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultDistanceBudget = std::size_t{1} << 24;

namespace detail {

/// One side of the distance problem: minimum weight over
/// ker(annihilator) \ rowspace(stabilizers). Membership in the row space is
/// decided by pairing with the opposite side's logical basis: a kernel vector
/// is a stabilizer product iff it overlaps every opposite logical evenly.
struct DistanceSide {
    Side side;
    const BitMatrix* annihilator;
    std::vector<BitVector> opposite_logicals;
    std::vector<BitVector> kernel;

    DistanceSide(const CssCode& code, Side s)
        : side(s), annihilator(s == Side::Z ? &code.hx : &code.hz),
          opposite_logicals(logical_basis(code, s == Side::Z ? Side::X : Side::Z)),
          kernel(kernel_basis(*annihilator)) {}

    bool gray_feasible(std::size_t budget) const {
        return kernel.size() < 64 && (std::size_t{1} << kernel.size()) <= budget;
    }

    /// Exact minimum by Gray-code enumeration of the full kernel space.
    std::size_t gray_search() const {
        const std::size_t m = kernel.size();
        const std::size_t n = annihilator->cols();
        std::vector<uint64_t> signature_mask(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < opposite_logicals.size(); ++j) {
                if (kernel[i].dot(opposite_logicals[j])) {
                    signature_mask[i] |= uint64_t{1} << j;
                }
            }
        }
        BitVector v(n);
        uint64_t signature = 0;
        std::size_t best = n + 1;
        const uint64_t total = uint64_t{1} << m;
        for (uint64_t step = 1; step < total; ++step) {
            const unsigned idx = static_cast<unsigned>(std::countr_zero(step));
            v ^= kernel[idx];
            signature ^= signature_mask[idx];
            if (signature != 0) {
                best = std::min(best, v.weight());
            }
        }
        return best;
    }
};

/// Enumerates every weight-w support over the side's columns, maintaining the
/// check syndrome incrementally; a zero syndrome plus odd overlap with some
/// opposite logical is a logical operator of weight exactly w.
struct WeightSearcher {
    std::vector<BitVector> columns;
    const std::vector<BitVector>* opposite_logicals;
    std::size_t n;

    explicit WeightSearcher(const DistanceSide& side)
        : opposite_logicals(&side.opposite_logicals), n(side.annihilator->cols()) {
        const BitMatrix t = side.annihilator->transposed();
        columns.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            columns.push_back(t.row(j));
        }
    }

    bool logical_overlap(const std::vector<std::size_t>& support) const {
        for (const BitVector& logical : *opposite_logicals) {
            bool parity = false;
            for (std::size_t j : support) {
                parity ^= logical.get(j);
            }
            if (parity) {
                return true;
            }
        }
        return false;
    }

    bool search_weight(std::size_t w) const {
        BitVector syndrome(columns.empty() ? 0 : columns[0].size());
        std::vector<std::size_t> support;
        support.reserve(w);
        return descend(0, w, syndrome, support);
    }

  private:
    bool descend(std::size_t start, std::size_t remaining, BitVector& syndrome,
                 std::vector<std::size_t>& support) const {
        for (std::size_t j = start; j + remaining <= n; ++j) {
            syndrome ^= columns[j];
            support.push_back(j);
            if (remaining == 1) {
                if (syndrome.is_zero() && logical_overlap(support)) {
                    return true;
                }
            } else if (descend(j + 1, remaining - 1, syndrome, support)) {
                return true;
            }
            support.pop_back();
            syndrome ^= columns[j];
        }
        return false;
    }
};

/// C(n, w), saturating to SIZE_MAX once it passes `cap` (or would overflow).
/// After step i the running value is exactly C(n-w+i, i), so the division is
/// always exact.
inline std::size_t binomial_capped(std::size_t n, std::size_t w, std::size_t cap) {
    if (w > n) {
        return 0;
    }
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t result = 1;
    for (std::size_t i = 1; i <= w; ++i) {
        const std::size_t factor = n - w + i;
        if (result > kMax / factor) {
            return kMax;
        }
        result = result * factor / i;
        if (result > cap) {
            return kMax;
        }
    }
    return result;
}

}  // namespace detail

/// Exact minimum distance by exhaustive enumeration, refusing work beyond
/// `budget` enumerated candidates per side.
///
/// Each side is resolved by whichever exhaustive route fits: Gray-code
/// enumeration of the full kernel space when 2^dim(kernel) is within budget,
/// otherwise support enumeration in increasing weight, which settles small
/// distances even when the kernel itself is far too large to sweep. The two
/// sides advance weight level by weight level, and the minimum is returned
/// only once every side either produced its exact value or provably cannot
/// hold anything lighter.
inline DistanceResult distance_exact(const CssCode& code,
                                     std::size_t budget = kDefaultDistanceBudget) {
    if (compute_k(code) <= 0) {
        throw undefined_distance_error(
            "distance_exact: the code has no logical qubits; distance is undefined");
    }

    detail::DistanceSide z_data(code, Side::Z);
    detail::DistanceSide x_data(code, Side::X);

    struct SideState {
        detail::DistanceSide* data;
        std::optional<detail::WeightSearcher> searcher;
        std::optional<std::size_t> exact;
        std::size_t cleared_below = 1;  // every weight < this holds no logical
        std::size_t enumerated = 0;
        bool refused = false;
    };

    SideState sides[2] = {SideState{&z_data}, SideState{&x_data}};
    bool used_gray = false;
    bool used_weight = false;
    for (SideState& side : sides) {
        if (side.data->gray_feasible(budget)) {
            side.exact = side.data->gray_search();
            used_gray = true;
        } else {
            side.searcher.emplace(*side.data);
            used_weight = true;
        }
    }

    auto finish = [&](std::size_t d) {
        DistanceResult result;
        result.kind = DistanceKind::exact;
        result.d = d;
        result.d_z = sides[0].exact;
        result.d_x = sides[1].exact;
        if (used_gray && used_weight) {
            result.method = "kernel_enumeration+weight_enumeration";
        } else {
            result.method = used_gray ? "kernel_enumeration" : "weight_enumeration";
        }
        return result;
    };

    auto refusal = [&]() -> budget_error {
        std::string need;
        for (const SideState& side : sides) {
            if (side.refused) {
                if (!need.empty()) {
                    need += " and ";
                }
                need += "2^" + std::to_string(side.data->kernel.size()) + " kernel vectors (" +
                        side_name(side.data->side) + " side)";
            }
        }
        return budget_error("distance_exact: budget of " + std::to_string(budget) +
                            " enumerated candidates exceeded; the full kernel sweep needs " + need);
    };

    const std::size_t n = code.n;
    for (std::size_t w = 1; w <= n + 1; ++w) {
        // The minimum is certified once some exact value is at or below every
        // other side's cleared frontier.
        std::optional<std::size_t> candidate;
        for (const SideState& side : sides) {
            if (side.exact && (!candidate || *side.exact < *candidate)) {
                candidate = side.exact;
            }
        }
        if (candidate) {
            bool certified = true;
            for (const SideState& side : sides) {
                if (!side.exact && side.cleared_below < *candidate) {
                    certified = false;
                }
            }
            if (certified) {
                return finish(*candidate);
            }
        }

        bool progress = false;
        for (SideState& side : sides) {
            if (side.exact || side.refused) {
                continue;
            }
            const std::size_t level = detail::binomial_capped(n, w, budget);
            if (side.enumerated > budget || level > budget - side.enumerated) {
                side.refused = true;
                continue;
            }
            side.enumerated += level;  // no overflow: level <= budget - enumerated
            progress = true;
            if (side.searcher->search_weight(w)) {
                side.exact = w;
            } else {
                side.cleared_below = w + 1;
            }
        }
        if (!progress) {
            bool all_settled = true;
            for (const SideState& side : sides) {
                all_settled &= side.exact.has_value();
            }
            if (!all_settled) {
                throw refusal();
            }
        }
    }
    // Unreachable for k >= 1: some logical operator of weight <= n exists.
    throw std::logic_error("distance_exact: exhausted all weights without finding a logical");
}

namespace detail {

/// Random-information-set pass for one side: permute columns, fully reduce
/// the stacked [stabilizers; logicals] matrix, and harvest the weight of
/// every reduced row that still carries a logical component. Each harvested
/// row is a genuine logical operator, so the minimum is a certified upper
/// bound on the side's distance.
class InformationSetSide {
  public:
    InformationSetSide(const BitMatrix& stabilizers, const std::vector<BitVector>& logicals,
                       std::size_t n)
        : n_(n), data_words_((n + 63) / 64),
          indicator_words_((logicals.size() + 63) / 64),
          stride_(data_words_ + indicator_words_),
          num_rows_(stabilizers.rows() + logicals.size()), base_(num_rows_ * stride_, 0) {
        for (std::size_t r = 0; r < stabilizers.rows(); ++r) {
            std::copy(stabilizers.row_words(r), stabilizers.row_words(r) + data_words_,
                      base_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
        }
        for (std::size_t j = 0; j < logicals.size(); ++j) {
            const std::size_t r = stabilizers.rows() + j;
            std::copy(logicals[j].words().begin(), logicals[j].words().end(),
                      base_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
            base_[r * stride_ + data_words_ + j / 64] |= uint64_t{1} << (j % 64);
        }
    }

    /// Minimum logical-row weight over one randomized reduction.
    std::size_t run_trial(uint64_t trial_seed) const {
        std::vector<uint64_t> work = base_;
        std::mt19937_64 gen = make_engine(trial_seed);
        std::vector<std::size_t> perm(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            perm[i] = i;
        }
        deterministic_shuffle(perm, gen);

        auto bit = [&](std::size_t row, std::size_t col) -> bool {
            return (work[row * stride_ + (col >> 6)] >> (col & 63)) & 1u;
        };

        std::size_t next_pivot_row = 0;
        for (std::size_t ci = 0; ci < n_ && next_pivot_row < num_rows_; ++ci) {
            const std::size_t c = perm[ci];
            std::size_t pivot = next_pivot_row;
            while (pivot < num_rows_ && !bit(pivot, c)) {
                ++pivot;
            }
            if (pivot == num_rows_) {
                continue;
            }
            if (pivot != next_pivot_row) {
                for (std::size_t w = 0; w < stride_; ++w) {
                    std::swap(work[pivot * stride_ + w], work[next_pivot_row * stride_ + w]);
                }
            }
            const uint64_t* src = work.data() + next_pivot_row * stride_;
            for (std::size_t r = 0; r < num_rows_; ++r) {
                if (r != next_pivot_row && bit(r, c)) {
                    uint64_t* dst = work.data() + r * stride_;
                    for (std::size_t w = 0; w < stride_; ++w) {
                        dst[w] ^= src[w];
                    }
                }
            }
            ++next_pivot_row;
        }

        std::size_t best = n_ + 1;
        for (std::size_t r = 0; r < num_rows_; ++r) {
            const uint64_t* row = work.data() + r * stride_;
            bool logical = false;
            for (std::size_t w = data_words_; w < stride_; ++w) {
                logical |= row[w] != 0;
            }
            if (!logical) {
                continue;
            }
            std::size_t weight = 0;
            for (std::size_t w = 0; w < data_words_; ++w) {
                weight += static_cast<std::size_t>(std::popcount(row[w]));
            }
            best = std::min(best, weight);
        }
        return best;
    }

  private:
    std::size_t n_;
    std::size_t data_words_;
    std::size_t indicator_words_;
    std::size_t stride_;
    std::size_t num_rows_;
    std::vector<uint64_t> base_;
};

}  // namespace detail

/// Randomized information-set upper bound on the distance. Trial i draws its
/// permutation from stream_seed(seed, 2i) on the Z side and
/// stream_seed(seed, 2i+1) on the X side, so the result depends only on
/// (trials, seed) and never on worker scheduling. Monotone nonincreasing in
/// the trial count for a fixed seed.
inline DistanceResult distance_estimate(const CssCode& code, uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("distance_estimate: trials must be >= 1");
    }
    if (compute_k(code) <= 0) {
        throw undefined_distance_error(
            "distance_estimate: the code has no logical qubits; distance is undefined");
    }

    const detail::InformationSetSide z_side(code.hz, logical_basis(code, Side::Z), code.n);
    const detail::InformationSetSide x_side(code.hx, logical_basis(code, Side::X), code.n);

    const std::size_t hardware = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t num_threads = std::min<std::size_t>({hardware, trials, 16});

    std::vector<std::size_t> best_z(num_threads, code.n + 1);
    std::vector<std::size_t> best_x(num_threads, code.n + 1);
    auto worker = [&](std::size_t tid) {
        for (uint64_t t = tid; t < trials; t += num_threads) {
            best_z[tid] = std::min(best_z[tid], z_side.run_trial(stream_seed(seed, 2 * t)));
            best_x[tid] = std::min(best_x[tid], x_side.run_trial(stream_seed(seed, 2 * t + 1)));
        }
    };
    if (num_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(num_threads);
        for (std::size_t tid = 0; tid < num_threads; ++tid) {
            pool.emplace_back(worker, tid);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    DistanceResult result;
    result.kind = DistanceKind::upper_bound;
    result.d_z = *std::min_element(best_z.begin(), best_z.end());
    result.d_x = *std::min_element(best_x.begin(), best_x.end());
    result.d = std::min(*result.d_z, *result.d_x);
    result.method = "information_set";
    result.trials = trials;
    result.seed = seed;
    return result;
}

/// Full parameter report for a code.
struct CodeMetrics {
    std::size_t n = 0;
    long long k = 0;
    /// Absent when k == 0 (no logical operators exist).
    std::optional<DistanceResult> distance;
};

struct MetricsOptions {
    std::size_t budget = kDefaultDistanceBudget;
    uint64_t trials = 1000;
    uint64_t seed = 0;
};

/// n, k, and distance: exact when the exhaustive oracle fits the budget,
/// otherwise the information-set upper bound.
inline CodeMetrics compute_metrics(const CssCode& code, const MetricsOptions& options = {}) {
    CodeMetrics metrics;
    metrics.n = code.n;
    metrics.k = compute_k(code);
    if (metrics.k <= 0) {
        return metrics;
    }
    try {
        metrics.distance = distance_exact(code, options.budget);
    } catch (const budget_error&) {
        metrics.distance = distance_estimate(code, options.trials, options.seed);
    }
    return metrics;
}

}  // namespace qcss
