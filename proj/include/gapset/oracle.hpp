#pragma once

// Brute-force reference implementations. These deliberately use different
// algorithmic strategies than the main modules (subset scan instead of the
// gapset formula, maximality scan instead of the membership test) so that
// agreement between the two sides is evidence rather than tautology.
// Exponential time is acceptable here; the ceilings keep runs at desk scale.

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "gapset/semigroup.hpp"

namespace gapset::oracle {

inline Int env_ceiling(const char* name, Int fallback) {
    if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        long long parsed = std::strtoll(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return static_cast<Int>(parsed);
    }
    return fallback;
}

/// Largest genus the tree enumerator accepts (GAPSET_CEILING_GENUS overrides).
inline Int genus_ceiling() { return env_ceiling("GAPSET_CEILING_GENUS", 22); }

/// Largest Frobenius number the subset-scan enumerator accepts
/// (GAPSET_CEILING_FROBENIUS overrides; hard cap 62, the scan packs
/// candidate members of [1, F-1] and their pair sums into one 64-bit word).
inline Int frobenius_ceiling() {
    return std::min<Int>(env_ceiling("GAPSET_CEILING_FROBENIUS", 26), 62);
}

namespace detail {

template <class Visit>
void tree_walk(const NumericalSemigroup& s, Int depth, Int target, Visit&& visit) {
    visit(s, depth);
    if (depth == target) return;
    // children remove one minimal generator above the Frobenius number
    for (Int x : minimal_generators(s)) {
        if (x <= s.frobenius()) continue;
        std::vector<Int> gaps = s.gaps();
        gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x), x);
        tree_walk(from_gaps(std::move(gaps)), depth + 1, target, visit);
    }
}

// Depth-first scan over membership choices for 1..F-1. `members` packs the
// decided members, `sums` their pairwise (and doubled) sums; a sum landing
// on an undecided slot forces it in, a sum landing on F kills the branch.
template <class Emit>
void frobenius_scan(Int frobenius, Int x, std::uint64_t members, std::uint64_t sums,
                    Emit&& emit) {
    if (x == frobenius) {
        std::vector<Int> gaps;
        for (Int v = 1; v < frobenius; ++v)
            if (!((members >> v) & 1u)) gaps.push_back(v);
        gaps.push_back(frobenius);
        emit(std::move(gaps));
        return;
    }
    const bool forced = (sums >> x) & 1u;
    std::uint64_t with = members | (std::uint64_t{1} << x);
    std::uint64_t with_sums = sums | (members << x);
    if (2 * x <= frobenius) with_sums |= std::uint64_t{1} << (2 * x);
    if (!((with_sums >> frobenius) & 1u))
        frobenius_scan(frobenius, x + 1, with, with_sums, emit);
    if (!forced) frobenius_scan(frobenius, x + 1, members, sums, emit);
}

}  // namespace detail

/// All numerical semigroups of the exact genus, canonical order, via the
/// genus tree (children remove one minimal generator beyond the Frobenius
/// number, so each semigroup is reached exactly once).
inline std::vector<NumericalSemigroup> tree_enumerate_by_genus(Int genus) {
    if (genus < 0 || genus > genus_ceiling())
        throw DomainError("genus out of oracle ceiling (GAPSET_CEILING_GENUS)");
    std::vector<NumericalSemigroup> out;
    detail::tree_walk(NumericalSemigroup{}, 0, genus, [&](const NumericalSemigroup& s, Int d) {
        if (d == genus) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Tree node counts per level: result[j-1] is the number of semigroups of
/// genus j, for j = 1..g_max.
inline std::vector<Int> tree_count_by_genus(Int g_max) {
    if (g_max < 1 || g_max > genus_ceiling())
        throw DomainError("genus out of oracle ceiling (GAPSET_CEILING_GENUS)");
    std::vector<Int> counts(static_cast<std::size_t>(g_max), 0);
    detail::tree_walk(NumericalSemigroup{}, 0, g_max, [&](const NumericalSemigroup&, Int d) {
        if (d > 0) ++counts[static_cast<std::size_t>(d - 1)];
    });
    return counts;
}

/// All numerical semigroups with the exact Frobenius number, canonical order.
inline std::vector<NumericalSemigroup> enumerate_by_frobenius(Int frobenius) {
    if (frobenius < 1 || frobenius > frobenius_ceiling())
        throw DomainError("frobenius out of oracle ceiling (GAPSET_CEILING_FROBENIUS)");
    std::vector<NumericalSemigroup> out;
    detail::frobenius_scan(frobenius, 1, 0, 0,
                           [&](std::vector<Int> gaps) { out.push_back(from_gaps(std::move(gaps))); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Almost symmetric semigroups with the exact Frobenius number, optionally
/// filtered by type; filtering uses the gap-by-gap definition.
inline std::vector<NumericalSemigroup> enumerate_as_by_frobenius(
    Int frobenius, std::optional<Int> type = std::nullopt) {
    std::vector<NumericalSemigroup> out;
    for (auto& s : enumerate_by_frobenius(frobenius)) {
        if (!is_almost_symmetric_definitional(s)) continue;
        if (type && static_cast<Int>(pseudo_frobenius(s).elements.size()) != *type) continue;
        out.push_back(std::move(s));
    }
    return out;
}

/// Pseudo-Frobenius numbers by the maximality definition: a gap x is in PF
/// exactly when no other gap y has y - x in the semigroup.
inline PseudoFrobeniusSet pf_bruteforce(const NumericalSemigroup& s) {
    if (s.genus() == 0)
        throw DomainError("pseudo-Frobenius numbers are undefined for the full monoid");
    PseudoFrobeniusSet pf;
    for (Int x : s.gaps()) {
        bool maximal = true;
        for (Int y : s.gaps())
            if (y != x && s.contains(y - x)) {
                maximal = false;
                break;
            }
        if (maximal) pf.elements.push_back(x);
    }
    return pf;
}

}  // namespace gapset::oracle
