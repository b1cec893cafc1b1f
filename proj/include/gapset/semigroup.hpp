#pragma once

// Core representation of numerical semigroups (cofinite additive submonoids
// of the nonnegative integers) and their classical invariants: Frobenius
// number, genus, multiplicity, pseudo-Frobenius numbers, type, depth.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapset {

using Int = std::int64_t;

// Inputs above this are rejected; keeps all arithmetic safely inside int64.
inline constexpr Int kMaxValue = 2147483646;  // 2^31 - 2

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedInputError : Error { using Error::Error; };
struct NotCofiniteError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct InvalidPfError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

/// Witness of a closure failure: a + b is in the set, neither a nor b is.
struct ClosureWitness {
    Int a = 0, b = 0;
    friend bool operator==(const ClosureWitness&, const ClosureWitness&) = default;
};

/// Pseudo-Frobenius numbers, ascending. The largest one is the Frobenius number.
struct PseudoFrobeniusSet {
    std::vector<Int> elements;
    friend bool operator==(const PseudoFrobeniusSet&, const PseudoFrobeniusSet&) = default;
};

struct InvariantSummary {
    Int frobenius = -1;
    Int genus = 0;
    Int multiplicity = 1;
    Int type = 0;   // reported as 0 for the full monoid, where PF is undefined
    Int depth = 0;  // smallest q with q*multiplicity >= frobenius+1
    friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

/// Checks the gapset closure condition on a strictly increasing list of
/// positive integers: whenever a+b is in the set, a or b must be too.
/// Returns the first violating pair (a <= b), or nullopt if the list is a
/// gapset. Nonpositive, duplicate or unsorted entries are malformed input.
inline std::optional<ClosureWitness> validate_gapset(const std::vector<Int>& gaps) {
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        if (gaps[k] <= 0)
            throw MalformedInputError("gapset entries must be positive");
        if (gaps[k] > kMaxValue)
            throw MalformedInputError("gapset entry exceeds supported range");
        if (k > 0 && gaps[k] <= gaps[k - 1])
            throw MalformedInputError("gapset entries must be strictly increasing");
    }
    if (gaps.empty()) return std::nullopt;

    const Int top = gaps.back();
    std::vector<std::uint64_t> in(static_cast<std::size_t>(top / 64) + 1, 0);
    auto test = [&](Int x) {
        return (in[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1u;
    };
    for (Int g : gaps) in[static_cast<std::size_t>(g) >> 6] |= std::uint64_t{1} << (g & 63);

    for (Int c : gaps)
        for (Int a = 1; 2 * a <= c; ++a)
            if (!test(a) && !test(c - a)) return ClosureWitness{a, c - a};
    return std::nullopt;
}

/// A numerical semigroup, stored as its gap set plus a membership bit table
/// over [0, frobenius]. Immutable after construction; every integer above
/// the Frobenius number is a member without a table lookup.
class NumericalSemigroup {
public:
    /// The full monoid (no gaps, Frobenius number -1 by convention).
    NumericalSemigroup() = default;

    const std::vector<Int>& gaps() const { return gaps_; }
    Int frobenius() const { return frobenius_; }
    Int genus() const { return static_cast<Int>(gaps_.size()); }
    Int multiplicity() const { return multiplicity_; }

    bool contains(Int x) const {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return (bits_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1u;
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ == b.gaps_;
    }
    /// Canonical order: lexicographic by gap list.
    friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ < b.gaps_;
    }

private:
    explicit NumericalSemigroup(std::vector<Int> gaps) : gaps_(std::move(gaps)) {
        if (gaps_.empty()) return;
        frobenius_ = gaps_.back();
        bits_.assign(static_cast<std::size_t>(frobenius_ / 64) + 1, ~std::uint64_t{0});
        for (Int g : gaps_)
            bits_[static_cast<std::size_t>(g) >> 6] &= ~(std::uint64_t{1} << (g & 63));
        multiplicity_ = 1;
        while (!contains(multiplicity_)) ++multiplicity_;
    }

    friend NumericalSemigroup from_gaps(std::vector<Int> gaps);

    std::vector<Int> gaps_;
    Int frobenius_ = -1;
    Int multiplicity_ = 1;
    std::vector<std::uint64_t> bits_;  // bit x set <=> x is a member, x in [0, frobenius]
};

/// Builds the semigroup whose gap set is the given gapset.
inline NumericalSemigroup from_gaps(std::vector<Int> gaps) {
    if (auto w = validate_gapset(gaps))
        throw MalformedInputError("not a gapset: " + std::to_string(w->a) + "+" +
                                  std::to_string(w->b) + " is a gap but neither summand is");
    return NumericalSemigroup(std::move(gaps));
}

/// Smallest numerical semigroup containing the given generators (gcd must
/// be 1). Uses an additive sieve, growing the sieve window until a run of
/// multiplicity-many consecutive members proves every larger integer is in.
inline NumericalSemigroup from_generators(std::vector<Int> gens) {
    if (gens.empty()) throw MalformedInputError("generator list is empty");
    for (Int g : gens)
        if (g <= 0 || g > kMaxValue)
            throw MalformedInputError("generators must be in [1, " + std::to_string(kMaxValue) + "]");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int d = 0;
    for (Int g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw NotCofiniteError("generators have gcd " + std::to_string(d) +
                               ", the generated monoid is not cofinite");
    if (gens.front() == 1) return NumericalSemigroup();

    const Int m = gens.front();
    Int bound = std::min<Int>(std::max<Int>(2 * gens.back(), 64), kMaxValue);
    for (;;) {
        std::vector<std::uint64_t> member(static_cast<std::size_t>(bound / 64) + 1, 0);
        auto get = [&](Int x) {
            return (member[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1u;
        };
        member[0] = 1;
        for (Int x = m; x <= bound; ++x)
            for (Int g : gens) {
                if (g > x) break;
                if (get(x - g)) {
                    member[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
                    break;
                }
            }
        Int last_gap = 0;
        for (Int x = bound; x >= 1; --x)
            if (!get(x)) {
                last_gap = x;
                break;
            }
        // a run of m consecutive members closes the complement above it
        if (bound - last_gap >= m) {
            std::vector<Int> gaps;
            for (Int x = 1; x <= last_gap; ++x)
                if (!get(x)) gaps.push_back(x);
            return from_gaps(std::move(gaps));
        }
        if (bound >= kMaxValue)
            throw DomainError("Frobenius number of the generated semigroup exceeds supported range");
        bound = std::min<Int>(bound * 2, kMaxValue);
    }
}

/// Gaps x such that x + s is a member for every nonzero member s.
/// Undefined (error) for the full monoid.
inline PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup& s) {
    if (s.genus() == 0)
        throw DomainError("pseudo-Frobenius numbers are undefined for the full monoid");
    PseudoFrobeniusSet pf;
    for (Int x : s.gaps()) {
        bool ok = true;
        // members above frobenius() - x push x past the Frobenius number anyway
        for (Int y = s.multiplicity(); y <= s.frobenius() - x; ++y)
            if (s.contains(y) && !s.contains(x + y)) {
                ok = false;
                break;
            }
        if (ok) pf.elements.push_back(x);
    }
    return pf;
}

inline InvariantSummary invariants(const NumericalSemigroup& s) {
    InvariantSummary v;
    v.frobenius = s.frobenius();
    v.genus = s.genus();
    v.multiplicity = s.multiplicity();
    if (s.genus() > 0) {
        v.type = static_cast<Int>(pseudo_frobenius(s).elements.size());
        v.depth = (v.frobenius + v.multiplicity) / v.multiplicity;  // ceil((F+1)/m)
    }
    return v;
}

/// Numerical test of almost symmetry: 2*genus == frobenius + type.
inline bool is_almost_symmetric(const NumericalSemigroup& s) {
    if (s.genus() == 0)
        throw DomainError("almost symmetry is undefined for the full monoid");
    const Int type = static_cast<Int>(pseudo_frobenius(s).elements.size());
    return 2 * s.genus() == s.frobenius() + type;
}

/// Gap-by-gap test of almost symmetry: every gap a has F-a a nonzero member,
/// or a is pseudo-Frobenius. Independent route kept as a cross-check for
/// is_almost_symmetric.
inline bool is_almost_symmetric_definitional(const NumericalSemigroup& s) {
    if (s.genus() == 0)
        throw DomainError("almost symmetry is undefined for the full monoid");
    const Int f = s.frobenius();
    for (Int a : s.gaps()) {
        if (f - a > 0 && s.contains(f - a)) continue;
        bool pf = true;
        for (Int y = s.multiplicity(); y <= f - a; ++y)
            if (s.contains(y) && !s.contains(a + y)) {
                pf = false;
                break;
            }
        if (!pf) return false;
    }
    return true;
}

/// Members that are not a sum of two nonzero members; the unique minimal
/// generating set. {1} for the full monoid.
inline std::vector<Int> minimal_generators(const NumericalSemigroup& s) {
    if (s.genus() == 0) return {1};
    const Int f = s.frobenius();
    const Int m = s.multiplicity();
    std::vector<Int> gens;
    for (Int x = m; x <= f + m; ++x) {  // every member above f+m decomposes as m + member
        if (!s.contains(x)) continue;
        bool sum = false;
        for (Int a = m; 2 * a <= x; ++a)
            if (s.contains(a) && s.contains(x - a)) {
                sum = true;
                break;
            }
        if (!sum) gens.push_back(x);
    }
    return gens;
}

}  // namespace gapset
