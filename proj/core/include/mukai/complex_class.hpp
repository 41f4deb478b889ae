#pragma once

#include "mukai/mukai_vector.hpp"

namespace mukai {

/// Complexified Mukai class: each component carries exact rational real and
/// imaginary parts. Set im-parts to zero for a plain rational class.
struct MukaiVectorC {
    CRat r;
    std::vector<CRat> l;
    CRat s;

    static MukaiVectorC from_real(const MukaiVector& v) {
        MukaiVectorC w;
        w.r = CRat(Rat(v.r));
        w.l.reserve(v.l.size());
        for (std::size_t i = 0; i < v.l.size(); ++i) w.l.emplace_back(Rat(v.l[i]));
        w.s = CRat(Rat(v.s));
        return w;
    }

    MukaiVectorC conj() const {
        MukaiVectorC w;
        w.r = r.conj();
        w.l.reserve(l.size());
        for (const CRat& x : l) w.l.push_back(x.conj());
        w.s = s.conj();
        return w;
    }

    bool is_zero() const {
        if (!r.is_zero() || !s.is_zero()) return false;
        for (const CRat& x : l)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const MukaiVectorC& a, const MukaiVectorC& b) {
        return a.r == b.r && a.l == b.l && a.s == b.s;
    }
};

/// Complex-bilinear extension of the Mukai pairing.
CRat mukai_pair_c(const IntersectionLattice& L, const MukaiVectorC& v, const MukaiVectorC& w);

} // namespace mukai
