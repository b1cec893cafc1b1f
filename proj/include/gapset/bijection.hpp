#pragma once

// The correspondence between numerical semigroups of genus g and almost
// symmetric numerical semigroups with Frobenius number F and type F-2g.
// Forward direction: adjoin 0 to the shifted canonical ideal K_S(F-F(S)),
// i.e. take the semigroup with gapset {1..F} \ {F-a : a a gap of S}.
// Inverse direction: the star dual. The round trip is exact for F >= 4g-1;
// the forward image is well defined for any F > 2 F(S).

#include <algorithm>
#include <cassert>
#include <vector>

#include "gapset/ideals.hpp"
#include "gapset/semigroup.hpp"

namespace gapset {

struct ForwardImage {
    NumericalSemigroup semigroup;
    /// F >= 4*genus(S)-1: the image determines S and the round trip is exact.
    /// Below that threshold the image is still almost symmetric with the
    /// stated invariants, but distinct sources may collide.
    bool bijective = false;
};

/// Maps S to the almost symmetric semigroup with Frobenius number
/// `frobenius`, genus frobenius-g, type frobenius-2g, multiplicity
/// frobenius-F(S) and depth two (depth one in the degenerate genus-0 case).
inline ForwardImage forward(const NumericalSemigroup& s, Int frobenius) {
    if (frobenius < 1 || frobenius > kMaxValue)
        throw DomainError("target Frobenius number must be a positive integer in range");
    if (frobenius <= 2 * s.frobenius())
        throw DomainError("target Frobenius number must exceed twice the Frobenius number of S");
    ForwardImage out;
    out.semigroup = from_gaps(gaps_of_shifted_canonical(s, frobenius));
    out.bijective = frobenius >= 4 * s.genus() - 1;
    return out;
}

/// Pseudo-Frobenius numbers of forward(s, frobenius) by the closed formula:
/// the positive members of S up to f = F(S), the band f+1 .. frobenius-f-1,
/// and frobenius - a for members a of S up to f. Cardinality frobenius - 2g.
inline PseudoFrobeniusSet image_pf(const NumericalSemigroup& s, Int frobenius) {
    if (frobenius < 1 || frobenius > kMaxValue)
        throw DomainError("target Frobenius number must be a positive integer in range");
    if (frobenius <= 2 * s.frobenius())
        throw DomainError("target Frobenius number must exceed twice the Frobenius number of S");
    const Int f = s.frobenius();
    std::vector<Int> pf;
    for (Int a = 1; a <= f; ++a)
        if (s.contains(a)) pf.push_back(a);
    // for the genus-0 seed (f = -1) the band formally starts at 0, which is
    // not a gap of the image; the positive part is exactly PF there
    for (Int a = std::max<Int>(f + 1, 1); a <= frobenius - f - 1; ++a) pf.push_back(a);
    for (Int a = f; a >= 0; --a)
        if (s.contains(a)) pf.push_back(frobenius - a);
    assert(std::is_sorted(pf.begin(), pf.end()));
    assert(static_cast<Int>(pf.size()) == frobenius - 2 * s.genus());
    return PseudoFrobeniusSet{std::move(pf)};
}

/// Inverse of the forward map on its image: the star dual of an almost
/// symmetric semigroup with type t >= (F-1)/2 and F-t even is the unique
/// genus-(F-t)/2 source semigroup.
inline NumericalSemigroup inverse(const NumericalSemigroup& t) {
    if (t.genus() == 0)
        throw DomainError("inverse expects an almost symmetric semigroup, not the full monoid");
    const Int f = t.frobenius();
    const Int type = static_cast<Int>(pseudo_frobenius(t).elements.size());
    if (2 * type < f - 1 || (f - type) % 2 != 0 || !is_almost_symmetric(t))
        throw DomainError("inverse expects an almost symmetric semigroup of high type");
    std::vector<Int> dual_gaps = star_dual(t).positive_gaps();
    if (validate_gapset(dual_gaps))
        throw InternalError("star dual of an almost symmetric high-type semigroup must be a semigroup");
    NumericalSemigroup s = from_gaps(std::move(dual_gaps));
    if (2 * s.genus() != f - type)
        throw InternalError("star dual has unexpected genus");
    return s;
}

/// Characterization of almost symmetry in the high-type regime
/// (t >= (F-1)/2, F-t even): T is almost symmetric exactly when its star
/// dual is a numerical semigroup with (F-t)/2 gaps.
inline bool almost_symmetric_via_star_dual(const NumericalSemigroup& t) {
    if (t.genus() == 0)
        throw DomainError("characterization expects a semigroup with at least one gap");
    const Int f = t.frobenius();
    const Int type = static_cast<Int>(pseudo_frobenius(t).elements.size());
    if (2 * type < f - 1 || (f - type) % 2 != 0)
        throw DomainError("characterization applies only for type >= (F-1)/2 with F-type even");
    std::vector<Int> dual_gaps = star_dual(t).positive_gaps();
    if (validate_gapset(dual_gaps)) return false;  // dual not closed under addition
    return 2 * static_cast<Int>(dual_gaps.size()) == f - type;
}

/// Rebuilds the genus-g source semigroup from the pseudo-Frobenius set of
/// its image: gaps are {1 .. 2g-1} minus the PF elements.
inline NumericalSemigroup recover_from_pf(const PseudoFrobeniusSet& pf, Int genus) {
    if (genus < 0)
        throw DomainError("genus must be nonnegative");
    std::vector<Int> gaps;
    for (Int x = 1; x <= 2 * genus - 1; ++x)
        if (!std::binary_search(pf.elements.begin(), pf.elements.end(), x)) gaps.push_back(x);
    if (auto w = validate_gapset(gaps))
        throw InvalidPfError("pseudo-Frobenius set does not describe a genus-" +
                             std::to_string(genus) + " semigroup: " + std::to_string(w->a) + "+" +
                             std::to_string(w->b) + " breaks closure");
    return from_gaps(std::move(gaps));
}

}  // namespace gapset
