#pragma once

// Relative ideals of a numerical semigroup: the shifted canonical ideal
// K_S(s) = { F(S)+s-z : z an integer outside S } and the star dual
// S* = S u PF(S), the dual of S\{0} with respect to S.

#include <algorithm>
#include <cassert>
#include <vector>

#include "gapset/semigroup.hpp"

namespace gapset {

/// A cofinite subset I of the integers with I + S contained in I. Stored in
/// normalized form: `bound` is the largest integer NOT in the ideal and
/// `small_elements` lists the members below it, so two ideals are equal
/// exactly when their normalized forms coincide. Negative members are
/// allowed.
class RelativeIdeal {
public:
    RelativeIdeal(NumericalSemigroup owner, std::vector<Int> elements, Int bound)
        : owner_(std::move(owner)) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        while (!elements.empty() && elements.back() > bound) elements.pop_back();
        // shrink the bound to the largest non-member
        Int lo = elements.empty() ? bound : elements.front();
        std::size_t k = elements.size();
        while (bound > lo - 1) {
            if (k == 0 || elements[k - 1] != bound) break;
            --bound;
            --k;
        }
        elements.resize(k);
        bound_ = bound;
        small_ = std::move(elements);
    }

    const NumericalSemigroup& owner() const { return owner_; }
    const std::vector<Int>& small_elements() const { return small_; }
    /// Largest integer not in the ideal; every integer above it is a member.
    Int bound() const { return bound_; }
    /// Smallest member.
    Int min_element() const { return small_.empty() ? bound_ + 1 : small_.front(); }

    bool contains(Int x) const {
        if (x > bound_) return true;
        return std::binary_search(small_.begin(), small_.end(), x);
    }

    /// Nonnegative integers missing from the ideal that are at least 1; this
    /// is the gapset of the numerical semigroup the ideal spans once 0 is
    /// adjoined (the reading under which the bijection operates).
    std::vector<Int> positive_gaps() const {
        std::vector<Int> out;
        for (Int x = 1; x <= bound_; ++x)
            if (!contains(x)) out.push_back(x);
        return out;
    }

    /// Ideal equality is equality of normalized (small_elements, bound) forms.
    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
        return a.bound_ == b.bound_ && a.small_ == b.small_;
    }

private:
    NumericalSemigroup owner_;
    std::vector<Int> small_;  // members <= bound_, ascending
    Int bound_ = -1;
};

/// True when the candidate set (members `elements` up to `bound`, everything
/// above `bound` in) is a relative ideal of s: closed under adding members
/// of s, and mapped into s by some member of s.
inline bool is_relative_ideal(const std::vector<Int>& elements, Int bound,
                              const NumericalSemigroup& s) {
    RelativeIdeal cand(s, elements, bound);
    for (Int e : cand.small_elements())
        for (Int y = s.multiplicity(); e + y <= cand.bound(); ++y)
            if (s.contains(y) && !cand.contains(e + y)) return false;
    // witness for the second condition: any member a with a + min >= F+1
    Int a = std::max<Int>(s.multiplicity(), s.frobenius() + 1 - cand.min_element());
    while (!s.contains(a)) ++a;
    for (Int e : cand.small_elements())
        if (!s.contains(a + e)) return false;
    return a + cand.bound() + 1 > s.frobenius();
}

/// The s-shifted canonical ideal K_S(shift) = { F(S)+shift-z : z outside S }.
/// Gaps of S land in [shift, F(S)+shift-1]; negative z fill (F(S)+shift, oo).
/// F(S)+shift itself never arises (it would need z = 0 outside S), so the
/// normalized bound is exactly F(S)+shift.
inline RelativeIdeal shifted_canonical(const NumericalSemigroup& s, Int shift) {
    const Int top = s.frobenius() + shift;
    std::vector<Int> elems;
    elems.reserve(s.gaps().size());
    for (auto it = s.gaps().rbegin(); it != s.gaps().rend(); ++it) elems.push_back(top - *it);
    return RelativeIdeal(s, std::move(elems), top);
}

/// Gapset of the numerical semigroup spanned by K_S(F - F(S)), for a target
/// Frobenius number F above F(S): exactly {1..F} minus { F-a : a a gap of S }.
inline std::vector<Int> gaps_of_shifted_canonical(const NumericalSemigroup& s, Int frobenius) {
    if (frobenius <= s.frobenius())
        throw DomainError("target Frobenius number must exceed the Frobenius number of S");
    std::vector<char> removed(static_cast<std::size_t>(frobenius) + 1, 0);
    for (Int a : s.gaps())
        if (frobenius - a >= 1) removed[static_cast<std::size_t>(frobenius - a)] = 1;
    std::vector<Int> out;
    for (Int x = 1; x <= frobenius; ++x)
        if (!removed[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

/// The star dual S* = S u PF(S).
inline RelativeIdeal star_dual(const NumericalSemigroup& s) {
    if (s.genus() == 0)
        throw DomainError("star dual is undefined for the full monoid");
    std::vector<Int> elems = pseudo_frobenius(s).elements;
    for (Int x = 0; x <= s.frobenius(); ++x)
        if (s.contains(x)) elems.push_back(x);
    RelativeIdeal dual(s, std::move(elems), s.frobenius());
#ifndef NDEBUG
    // equivalent description: S* = { z : z + (S \ {0}) is contained in S }
    for (Int z = 0; z <= s.frobenius(); ++z) {
        bool in = true;
        for (Int y = s.multiplicity(); y <= s.frobenius() - z; ++y)
            if (s.contains(y) && !s.contains(z + y)) {
                in = false;
                break;
            }
        assert(in == dual.contains(z));
    }
#endif
    return dual;
}

}  // namespace gapset
