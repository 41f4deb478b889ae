#include "mukai/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "mukai/isometry.hpp"

namespace mukai {

int TiltSlope::compare(const Rat& mu) const {
    if (exact_) {
        if (mu < *exact_) return -1;
        if (mu > *exact_) return 1;
        return 0;
    }
    if (mu < lo_) return -1;
    if (mu > hi_) return 1;
    throw ValidationError("slope " + format_rat(mu) + " lies inside the irrational bracket [" +
                          format_rat(lo_) + ", " + format_rat(hi_) + "]");
}

ComplexifiedClass::ComplexifiedClass(const IntersectionLattice& L, QClass b, QClass w)
    : B(std::move(b)), omega(std::move(w)) {
    if (B.size() != L.rank() || omega.size() != L.rank())
        throw ValidationError("B/omega length does not match lattice rank");
    if (!L.positive_cone(omega))
        throw ValidationError("omega is not in the positive cone of the polarization");
    beta = L.pair(B, omega);
    stability_valid = L.pair(omega, omega) > 2;
}

CentralCharge central_charge(const IntersectionLattice& L, const ComplexifiedClass& K,
                             const MukaiVector& v) {
    Rat b_l = L.pair(v.l, K.B);
    Rat w_l = L.pair(v.l, K.omega);
    Rat b2 = L.pair(K.B, K.B);
    Rat o2 = L.pair(K.omega, K.omega);
    Rat bo = L.pair(K.B, K.omega);
    return {b_l - Rat(v.s) - Rat(v.r) * (b2 - o2) / 2, w_l - Rat(v.r) * bo};
}

Rat central_charge_im(const IntersectionLattice& L, const ComplexifiedClass& K,
                      const MukaiVector& v) {
    return L.pair(v.l, K.omega) - Rat(v.r) * K.beta;
}

PhaseReport phase(const IntersectionLattice& L, const ComplexifiedClass& K, const MukaiVector& v) {
    CentralCharge z = central_charge(L, K, v);
    if (z.im > 0) {
        double phi = std::atan2(to_double(z.im), to_double(z.re)) / M_PI;
        return {PhaseClass::interior, z.re, z.im, phi};
    }
    if (z.im == 0 && z.re < 0) return {PhaseClass::boundary, z.re, z.im, 1.0};
    return {PhaseClass::invalid, z.re, z.im, std::numeric_limits<double>::quiet_NaN()};
}

Int FormalSheaf::total_rank() const {
    Int r = 0;
    for (const SheafFactor& f : factors) r += f.rank;
    return r;
}

NSClass FormalSheaf::total_c1(std::size_t rank) const {
    NSClass c = NSClass::zero(rank);
    if (torsion) c = c + torsion->degree;
    for (const SheafFactor& f : factors) c = c + f.c1;
    return c;
}

Rat slope(const IntersectionLattice& L, const SheafFactor& f, const QClass& omega) {
    if (f.rank <= 0) throw ValidationError("factor rank must be positive");
    return L.pair(f.c1, omega) / Rat(f.rank);
}

void validate_profile(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega) {
    if (F.torsion && F.torsion->points < 0)
        throw ValidationError("torsion point length must be non-negative");
    std::optional<Rat> prev;
    for (const SheafFactor& f : F.factors) {
        Rat mu = slope(L, f, omega);
        if (prev && !(*prev > mu))
            throw ValidationError("factor slopes must be strictly decreasing");
        prev = mu;
    }
}

Rat hn_mu_max(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega) {
    validate_profile(L, F, omega);
    if (F.factors.empty())
        throw ValidationError("extreme slopes are undefined without torsion-free factors");
    return slope(L, F.factors.front(), omega);
}

Rat hn_mu_min(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega) {
    validate_profile(L, F, omega);
    if (F.factors.empty())
        throw ValidationError("extreme slopes are undefined without torsion-free factors");
    return slope(L, F.factors.back(), omega);
}

bool in_torsion_class(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega,
                      const TiltSlope& beta) {
    validate_profile(L, F, omega);
    if (F.factors.empty()) return true; // torsion sheaves, including 0
    return beta.compare(slope(L, F.factors.back(), omega)) > 0;
}

bool in_free_class(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega,
                   const TiltSlope& beta) {
    validate_profile(L, F, omega);
    if (F.torsion) return false;
    if (F.factors.empty()) return true; // the zero sheaf
    return beta.compare(slope(L, F.factors.front(), omega)) <= 0;
}

TorsionSide torsion_pair_membership(const IntersectionLattice& L, const FormalSheaf& F,
                                    const QClass& omega, const TiltSlope& beta) {
    if (F.is_zero_object()) return TorsionSide::free_side;
    if (in_torsion_class(L, F, omega, beta)) return TorsionSide::torsion_side;
    if (in_free_class(L, F, omega, beta)) return TorsionSide::free_side;
    return TorsionSide::neither;
}

std::pair<FormalSheaf, FormalSheaf> decompose(const IntersectionLattice& L, const FormalSheaf& F,
                                              const QClass& omega, const TiltSlope& beta) {
    validate_profile(L, F, omega);
    FormalSheaf t_part, f_part;
    t_part.torsion = F.torsion;
    for (const SheafFactor& f : F.factors) {
        if (beta.compare(slope(L, f, omega)) > 0)
            t_part.factors.push_back(f);
        else
            f_part.factors.push_back(f);
    }
    return {std::move(t_part), std::move(f_part)};
}

HeartReport heart_membership(const IntersectionLattice& L, const NumericalComplex& X,
                             const QClass& omega, const TiltSlope& beta) {
    if (X.h_minus1.torsion)
        throw ValidationError("degree -1 cohomology must be torsion-free");
    bool minus_ok = in_free_class(L, X.h_minus1, omega, beta);
    bool zero_ok = in_torsion_class(L, X.h0, omega, beta);
    return {minus_ok && zero_ok, minus_ok, zero_ok};
}

MinimalShape classify_minimal_shape(const IntersectionLattice& L, const NumericalComplex& X,
                                    const QClass& omega, const TiltSlope& beta) {
    validate_profile(L, X.h_minus1, omega);
    validate_profile(L, X.h0, omega);
    if (X.h_minus1.torsion)
        throw ValidationError("degree -1 cohomology must be torsion-free");
    if (X.h_minus1.is_zero_object() && X.h0.is_pure_torsion() && X.h0.torsion->degree.is_zero() &&
        X.h0.torsion->points == 1)
        return MinimalShape::point_class;
    if (X.h0.is_zero_object() && !X.h_minus1.torsion && X.h_minus1.factors.size() == 1 &&
        beta.compare(slope(L, X.h_minus1.factors.front(), omega)) == 0)
        return MinimalShape::shifted_stable_slope_beta;
    return MinimalShape::not_minimal_shape;
}

MinimalShape classify_minimal_shape(const IntersectionLattice& L, const MukaiVector& v,
                                    const QClass& omega, const TiltSlope& beta) {
    if (v == MukaiVector::point_class(L.rank())) return MinimalShape::point_class;
    if (v.r < 0) {
        MukaiVector f = -v; // shifted sheaf shape: v = -v(F)
        Rat mu = L.pair(f.l, omega) / Rat(f.r);
        if (beta.compare(mu) == 0) return MinimalShape::shifted_stable_slope_beta;
    }
    return MinimalShape::not_minimal_shape;
}

namespace {

// Enumerates NS coordinates in [-bound, bound]^rho for a slice of the first
// coordinate, appending hits. Spherical: (l.l) - 2 r s = -2.
void scan_slice(const IntersectionLattice& L, const ComplexifiedClass& K, long bound,
                long first_lo, long first_hi, std::vector<ScanHit>& hits) {
    const std::size_t rho = L.rank();
    std::vector<long> cur(rho, 0);
    cur[0] = first_lo;
    if (first_lo > first_hi) return;
    for (std::size_t i = 1; i < rho; ++i) cur[i] = -bound;
    while (true) {
        std::vector<Int> coords(cur.begin(), cur.end());
        NSClass l(std::move(coords));
        Int l2 = L.pair(l, l);
        Int q = l2 + 2; // need 2 r s = q
        for (long r = 0; r <= bound; ++r) {
            if (r == 0) {
                if (q != 0) continue;
                for (long s = -bound; s <= bound; ++s) {
                    MukaiVector v{Int(0), l, Int(s)};
                    CentralCharge z = central_charge(L, K, v);
                    if (z.im == 0 && z.re <= 0) hits.push_back({v, z.re});
                }
            } else {
                Int two_r(2 * r);
                if (q % two_r != 0) continue;
                Int s = q / two_r;
                if (s < -bound || s > bound) continue;
                MukaiVector v{Int(r), l, s};
                CentralCharge z = central_charge(L, K, v);
                if (z.im == 0 && z.re <= 0) hits.push_back({v, z.re});
            }
        }
        std::size_t k = rho;
        while (k > 1 && cur[k - 1] == bound) {
            cur[k - 1] = -bound;
            --k;
        }
        if (k == 1) {
            if (cur[0] == first_hi) break;
            ++cur[0];
        } else {
            ++cur[k - 1];
        }
    }
}

bool scan_hit_less(const ScanHit& a, const ScanHit& b) {
    if (a.v.r != b.v.r) return a.v.r < b.v.r;
    for (std::size_t i = 0; i < a.v.l.size(); ++i)
        if (a.v.l[i] != b.v.l[i]) return a.v.l[i] < b.v.l[i];
    return a.v.s < b.v.s;
}

} // namespace

std::vector<ScanHit> spherical_scan(const IntersectionLattice& L, const ComplexifiedClass& K,
                                    long bound, int threads) {
    if (bound < 0) throw ValidationError("scan bound must be non-negative");
    if (threads < 1) throw ValidationError("thread count must be positive");

    std::vector<ScanHit> hits;
    if (threads == 1) {
        scan_slice(L, K, bound, -bound, bound, hits);
    } else {
        const long span = 2 * bound + 1;
        const int workers = static_cast<int>(std::min<long>(threads, span));
        std::vector<std::vector<ScanHit>> parts(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            long lo = -bound + span * t / workers;
            long hi = -bound + span * (t + 1) / workers - 1;
            pool.emplace_back([&, t, lo, hi] { scan_slice(L, K, bound, lo, hi, parts[t]); });
        }
        for (std::thread& th : pool) th.join();
        for (const auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
    }
    std::sort(hits.begin(), hits.end(), scan_hit_less);
    return hits;
}

QuadricClass period_quadric_membership(const IntersectionLattice& L, const MukaiVectorC& x) {
    if (x.is_zero()) return QuadricClass::neither;
    CRat self = mukai_pair_c(L, x, x);
    CRat with_conj = mukai_pair_c(L, x, x.conj());
    // <x, conj x> is real for a symmetric pairing.
    if (!self.is_zero() || !(with_conj.re > 0)) return QuadricClass::neither;
    return x.r.is_zero() ? QuadricClass::q_prime : QuadricClass::q_tilde;
}

std::pair<CRat, CRat> exp_isotropy_identities(const IntersectionLattice& L,
                                              const ComplexifiedClass& K) {
    ExponentialForm form{Rat(1), K.B, K.omega};
    MukaiVectorC phi = form.expand(L);
    return {mukai_pair_c(L, phi, phi), mukai_pair_c(L, phi, phi.conj())};
}

} // namespace mukai
