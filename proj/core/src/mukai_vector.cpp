#include "mukai/mukai_vector.hpp"

namespace mukai {

Int mukai_pair(const IntersectionLattice& L, const MukaiVector& v, const MukaiVector& w) {
    return L.pair(v.l, w.l) - v.r * w.s - w.r * v.s;
}

Int euler_chi(const IntersectionLattice& L, const MukaiVector& v, const MukaiVector& w) {
    return -mukai_pair(L, v, w);
}

MukaiVector from_chern(const IntersectionLattice& L, const ChernData& c) {
    Int c1_sq = L.pair(c.c1, c.c1);
    // c1^2 is even on an even lattice, so the division is exact.
    return {c.rank, c.c1, c.rank + c1_sq / 2 - c.c2};
}

FineModuliReport fine_moduli_check(const IntersectionLattice& L, const MukaiVector& v) {
    FineModuliReport rep;
    if (v.l.is_zero()) {
        rep.decomposition_found = false;
        rep.a = 0;
        rep.ell = NSClass::zero(L.rank());
        rep.ell_dot_ample = 0;
    } else {
        ContentSplit split = content_split(v.l);
        rep.decomposition_found = true;
        rep.a = split.content;
        rep.ell = split.primitive;
        rep.ell_dot_ample = L.pair(rep.ell, L.ample());
    }
    Int g = gcd(gcd(v.r, rep.a * rep.ell_dot_ample), v.s);
    rep.gcd_one = (g == 1);
    rep.square_matches = (rep.a * rep.a * L.pair(rep.ell, rep.ell) == 2 * v.r * v.s);
    return rep;
}

} // namespace mukai
