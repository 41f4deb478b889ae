#pragma once

#include <optional>

#include "mukai/mukai_vector.hpp"

namespace mukai {

/// Degree-level data of the stable-extension problem: a bundle of rank r and
/// determinant degree l, and a target slope bound beta with l/r < beta.
struct ExtensionProblem {
    Rat l;   // deg of the determinant line bundle
    Int r;   // rank, positive
    Rat beta;
};

/// A degree/rank pair (l', r') with
///     (l + l')/(r + r') <= beta < l'/r'
/// holding exactly. l' = power * l when ray_aligned (the solution is a power
/// of the input determinant); a twist normalization for non-positive input
/// degree breaks ray alignment and is recorded in h_power.
struct ExtensionSolution {
    Rat l_prime;
    Int r_prime;
    Rat e_min;     // subsheaf-slope threshold of the bounded-rank case
    Int power;     // Stern-Brocot numerator: l' = power * l on the ray
    bool ray_aligned;
    Int h_power;   // auxiliary twist exponent used for normalization (0 if none)
    std::optional<Int> s_min; // filled by the Euler threshold when Mukai data is known
};

/// Best upper rational approximation of x > 0 with unit excess: the unique
/// fraction a/b > x of minimal denominator with a*den(x) - b*num(x) = 1
/// (b = 1, a = x+1 when x is an integer). Stern-Brocot descent with
/// quotient batching.
std::pair<Int, Int> farey_upper_neighbor(const Rat& x);

/// Solves the extension-degree problem: returns the minimal-denominator
/// unit-excess solution (l', r') of the double inequality above, obtained by
/// Stern-Brocot descent on beta/l. Requires l/r < beta (HypothesisError
/// "slope" otherwise). Non-positive l is normalized internally by twisting
/// with an auxiliary positive degree (default 1; the l > 0 case never uses it).
ExtensionSolution solve_extension_problem(const ExtensionProblem& p, const Rat& twist_degree = Rat(1));

/// Strengthened-stability threshold of the bounded-rank destabilizing case:
///     ((r'*r - r)/(r + r'))*(l'/r' - l/r).
/// Requires r' >= r. When the family bound mu0 is supplied, returns the
/// combined max with l'/r' - mu0 (mu0 is never guessed).
Rat e_stability_threshold(const Rat& l, const Int& r, const Rat& l_prime, const Int& r_prime,
                          const std::optional<Rat>& mu0 = std::nullopt);

/// Minimal integer s' such that chi(vF, (r + r_extra, l + c_extra, s')) > 0,
/// i.e. the least degree-four component forcing a positive Euler pairing.
/// Requires vF.r > 0.
Int euler_positive_s_min(const IntersectionLattice& L, const MukaiVector& vF, const NSClass& c_extra,
                         const Int& r_extra);

} // namespace mukai
