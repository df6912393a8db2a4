#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qcss/construct.hpp"

namespace qcss {

/// One equivalence class of constructions: a representative spec and the
/// number of distinct codes of this shape (after X/Z-swap merging).
struct ConstructionClass {
    ConstructionSpec representative;
    std::size_t seed_size = 0;
    std::set<std::size_t> flip_counts;
    std::size_t member_count = 0;
};

inline constexpr std::size_t kDefaultClassifyMaxD = 5;

/// Enumerates every construction for `d` classical codes: all nonempty seed
/// sets of odd-B blocks crossed with all nonempty sets of odd flip counts.
/// Illegal specs are dropped; a spec and the spec seeded by its X-check set
/// describe the same code with X and Z interchanged, so each such pair is
/// merged into one member. Classes group members by (seed size, flip set),
/// keyed on the smaller seed of each merged pair.
inline std::vector<ConstructionClass> classify(std::size_t d,
                                               std::size_t max_d = kDefaultClassifyMaxD) {
    if (d < 2) {
        throw std::invalid_argument("classify: d must be >= 2");
    }
    if (d > max_d) {
        throw budget_error("classify: d=" + std::to_string(d) +
                           " exceeds the exhaustive-enumeration cap of " + std::to_string(max_d));
    }

    std::vector<BlockLabel> odd_blocks;
    for (std::size_t bits = 0; bits < (std::size_t{1} << d); ++bits) {
        std::string pattern(d, 'B');
        for (std::size_t l = 0; l < d; ++l) {
            if (bits & (std::size_t{1} << (d - 1 - l))) {
                pattern[l] = 'C';
            }
        }
        BlockLabel label(pattern);
        if (label.is_check_like()) {
            odd_blocks.push_back(label);
        }
    }
    std::sort(odd_blocks.begin(), odd_blocks.end());

    std::vector<std::set<std::size_t>> flip_sets;
    {
        std::vector<std::size_t> odd_counts;
        for (std::size_t f = 1; f <= d; f += 2) {
            odd_counts.push_back(f);
        }
        for (std::size_t mask = 1; mask < (std::size_t{1} << odd_counts.size()); ++mask) {
            std::set<std::size_t> flips;
            for (std::size_t i = 0; i < odd_counts.size(); ++i) {
                if (mask & (std::size_t{1} << i)) {
                    flips.insert(odd_counts[i]);
                }
            }
            flip_sets.push_back(std::move(flips));
        }
    }

    // Survivors keyed by (seed, flips), each mapped to its X-check seed.
    std::map<ConstructionSpec, std::set<BlockLabel>> survivors;
    for (std::size_t mask = 1; mask < (std::size_t{1} << odd_blocks.size()); ++mask) {
        std::set<BlockLabel> seed;
        for (std::size_t i = 0; i < odd_blocks.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                seed.insert(odd_blocks[i]);
            }
        }
        for (const auto& flips : flip_sets) {
            ConstructionSpec spec(d, seed, flips);
            const RoleAssignment roles = derive_roles(spec);
            if (!check_legality(spec, roles).legal()) {
                continue;
            }
            survivors.emplace(std::move(spec),
                              std::set<BlockLabel>(roles.x_blocks.begin(), roles.x_blocks.end()));
        }
    }

    // Merge each spec with its X/Z-swap partner; the canonical member of a
    // pair is the one with the smaller (then lexicographically smaller) seed.
    std::set<ConstructionSpec> consumed;
    std::map<std::pair<std::size_t, std::set<std::size_t>>, std::vector<ConstructionSpec>> classes;
    for (const auto& [spec, x_seed] : survivors) {
        if (consumed.count(spec)) {
            continue;
        }
        ConstructionSpec canonical = spec;
        const ConstructionSpec partner(d, x_seed, spec.flip_counts);
        const auto partner_it = survivors.find(partner);
        if (partner_it != survivors.end() && !(partner == spec)) {
            consumed.insert(partner);
            if (partner.z_seed.size() < canonical.z_seed.size() ||
                (partner.z_seed.size() == canonical.z_seed.size() && partner < canonical)) {
                canonical = partner;
            }
        }
        consumed.insert(spec);
        classes[{canonical.z_seed.size(), canonical.flip_counts}].push_back(canonical);
    }

    std::vector<ConstructionClass> out;
    for (auto& [key, members] : classes) {
        std::sort(members.begin(), members.end());
        ConstructionClass cls;
        cls.representative = members.front();
        cls.seed_size = key.first;
        cls.flip_counts = key.second;
        cls.member_count = members.size();
        out.push_back(std::move(cls));
    }
    // Deterministic presentation: by flip set, then seed size.
    std::sort(out.begin(), out.end(), [](const ConstructionClass& a, const ConstructionClass& b) {
        return std::tie(a.flip_counts, a.seed_size) < std::tie(b.flip_counts, b.seed_size);
    });
    return out;
}

}  // namespace qcss
