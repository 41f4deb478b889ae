#include "mukai/complex_class.hpp"

namespace mukai {

CRat mukai_pair_c(const IntersectionLattice& L, const MukaiVectorC& v, const MukaiVectorC& w) {
    if (v.l.size() != L.rank() || w.l.size() != L.rank())
        throw ValidationError("complex class length does not match lattice rank");
    CRat acc;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        for (std::size_t j = 0; j < L.rank(); ++j) {
            const Int& g = L.gram().at(i, j);
            if (g == 0) continue;
            acc = acc + Rat(g) * (v.l[i] * w.l[j]);
        }
    }
    return acc - v.r * w.s - w.r * v.s;
}

} // namespace mukai
