#pragma once

#include <vector>

#include "mukai/mukai_vector.hpp"

namespace mukai {

/// K3 surface with Picard group generated by a single class of square 2n.
struct Rank1Surface {
    Int n; // >= 1

    explicit Rank1Surface(Int n_) : n(std::move(n_)) {
        if (n < 1) throw ValidationError("requires n >= 1");
    }

    IntersectionLattice lattice() const { return rank_one_lattice(2 * n); }
};

/// Candidate moduli vector (r, ell, s) with r*s = n, gcd(r,s) = 1, r >= 1,
/// certified isotropic and fine.
struct PartnerCandidate {
    Int r;
    Int s;

    MukaiVector vector(const Rank1Surface& X) const {
        (void)X;
        return {r, NSClass({Int(1)}), s};
    }
};

/// A candidate pair identified under the duality swap (r,s) <-> (s,r);
/// first.r <= second.r, and first == second only for the square class.
struct PartnerClass {
    PartnerCandidate first;
    PartnerCandidate second;
};

/// All coprime factorizations r*s = n grouped under the swap, ordered by
/// increasing r of the representative. Every candidate passes the fine-moduli
/// certificate with a = 1 and is isotropic.
std::vector<PartnerClass> enumerate_partner_candidates(const Rank1Surface& X);

/// Number of swap classes of coprime factorizations of n: 2^(k-1) for n > 1
/// with k distinct prime factors, and 1 for n = 1. Deterministic trial
/// division; desk scale.
Int partner_class_count(const Int& n);

} // namespace mukai
