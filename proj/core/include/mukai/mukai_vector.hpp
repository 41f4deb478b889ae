#pragma once

#include "mukai/lattice.hpp"

namespace mukai {

/// Integral class (r, l, s) in Z + NS + Z. r is the rank component, s the
/// degree-four component of ch(F)*sqrt(td).
struct MukaiVector {
    Int r;
    NSClass l;
    Int s;

    static MukaiVector point_class(std::size_t rank) {
        return {Int(0), NSClass::zero(rank), Int(1)};
    }

    friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
        return {a.r + b.r, a.l + b.l, a.s + b.s};
    }
    friend MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.l, -a.s}; }
    friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
        return a.r == b.r && a.l == b.l && a.s == b.s;
    }
    friend bool operator!=(const MukaiVector& a, const MukaiVector& b) { return !(a == b); }
};

/// <(r,l,s),(r',l',s')> = (l.l') - r s' - r' s. Symmetric, even on the
/// diagonal over an even lattice.
Int mukai_pair(const IntersectionLattice& L, const MukaiVector& v, const MukaiVector& w);

/// chi(F,E) = -<v(F),v(E)>.
Int euler_chi(const IntersectionLattice& L, const MukaiVector& v, const MukaiVector& w);

/// Discrete Chern data of a sheaf: rank, first Chern class, second Chern number.
struct ChernData {
    Int rank;
    NSClass c1;
    Int c2;
};

/// v = (rank, c1, rank + c1^2/2 - c2). Exact: c1^2 is even on an even lattice.
MukaiVector from_chern(const IntersectionLattice& L, const ChernData& c);

inline bool is_spherical(const IntersectionLattice& L, const MukaiVector& v) {
    return mukai_pair(L, v, v) == -2;
}
inline bool is_isotropic(const IntersectionLattice& L, const MukaiVector& v) {
    return mukai_pair(L, v, v) == 0;
}

/// Certificate for the fine two-dimensional moduli conditions on
/// v = (r, a*ell, s) with ell primitive:
///   gcd(r, a*(ell.H), s) = 1  and  a^2 (ell.ell) = 2 r s.
/// A zero degree component is evaluated literally with a = 0, ell = 0
/// (decomposition_found stays false in that case).
struct FineModuliReport {
    bool decomposition_found = false;
    bool gcd_one = false;
    bool square_matches = false;
    Int a;
    NSClass ell;
    Int ell_dot_ample;

    bool passes() const { return gcd_one && square_matches; }
};

FineModuliReport fine_moduli_check(const IntersectionLattice& L, const MukaiVector& v);

} // namespace mukai
