#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mukai/complex_class.hpp"

namespace mukai {

/// The tilt parameter beta. Either an exact rational, or a symbolic
/// irrational pinned only by a rational bracket lo < beta < hi that is
/// guaranteed to contain no slope of interest; comparisons against a slope
/// inside [lo, hi] are rejected. In bracket mode no slope ever equals beta.
class TiltSlope {
public:
    static TiltSlope exact(Rat value) {
        TiltSlope t;
        t.exact_ = std::move(value);
        return t;
    }
    static TiltSlope bracket(Rat lo, Rat hi) {
        if (!(lo < hi)) throw ValidationError("bracket requires lo < hi");
        TiltSlope t;
        t.lo_ = std::move(lo);
        t.hi_ = std::move(hi);
        return t;
    }

    bool is_exact() const { return exact_.has_value(); }
    const Rat& value() const { return *exact_; }

    /// -1 if mu < beta, 0 if mu == beta (exact mode only), +1 if mu > beta.
    int compare(const Rat& mu) const;

private:
    TiltSlope() = default;
    std::optional<Rat> exact_;
    Rat lo_, hi_;
};

/// B + i*omega with omega in the positive cone. beta = (B.omega) is cached;
/// stability_valid records (omega.omega) > 2, the regime in which no
/// spherical sheaf class has central charge in the non-positive reals.
struct ComplexifiedClass {
    QClass B;
    QClass omega;
    Rat beta;
    bool stability_valid;

    ComplexifiedClass(const IntersectionLattice& L, QClass b, QClass w);

    TiltSlope tilt() const { return TiltSlope::exact(beta); }
};

struct CentralCharge {
    Rat re;
    Rat im;
};

/// Z(v) = <v, exp(B + i omega)> expanded to exact real/imaginary parts:
/// re = (B.l) - s - r((B.B) - (omega.omega))/2, im = (omega.l) - r(B.omega).
CentralCharge central_charge(const IntersectionLattice& L, const ComplexifiedClass& K,
                             const MukaiVector& v);

/// The direct route to Im Z: (l.omega) - r*(B.omega). Kept independent of
/// central_charge as a cross-check identity.
Rat central_charge_im(const IntersectionLattice& L, const ComplexifiedClass& K,
                      const MukaiVector& v);

enum class PhaseClass { interior, boundary, invalid };

struct PhaseReport {
    PhaseClass cls;
    Rat re;
    Rat im;
    double phi_approx; // display only; 1.0 on the boundary, NaN when invalid
};

/// Im > 0: interior phase in (0,1). Im = 0 and Re < 0: boundary phase 1.
/// Everything else (including Z = 0): invalid.
PhaseReport phase(const IntersectionLattice& L, const ComplexifiedClass& K, const MukaiVector& v);

/// Torsion summand of a formal sheaf. A nonzero degree class marks
/// one-dimensional support; degree zero with points > 0 is zero-dimensional.
struct TorsionPart {
    NSClass degree;
    Int points = 0;
};

struct SheafFactor {
    Int rank; // > 0
    NSClass c1;
};

/// Numerical shadow of a coherent sheaf: optional torsion part plus the
/// slope-semistable quotients of its filtration, slopes strictly decreasing
/// against the ambient omega.
struct FormalSheaf {
    std::optional<TorsionPart> torsion;
    std::vector<SheafFactor> factors;

    bool is_zero_object() const { return !torsion && factors.empty(); }
    bool is_pure_torsion() const { return torsion && factors.empty(); }

    Int total_rank() const;
    NSClass total_c1(std::size_t rank) const; // torsion degree + sum of factor c1
};

/// Throws unless factor slopes are strictly decreasing under omega and all
/// factor ranks are positive.
void validate_profile(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega);

Rat slope(const IntersectionLattice& L, const SheafFactor& f, const QClass& omega);

/// Extreme factor slopes. Rejects pure-torsion and zero input.
Rat hn_mu_max(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega);
Rat hn_mu_min(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega);

/// Torsion-pair predicates. The torsion class contains torsion sheaves and
/// sheaves with mu_min > beta; the free class contains torsion-free sheaves
/// with mu_max <= beta. The zero object belongs to both.
bool in_torsion_class(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega,
                      const TiltSlope& beta);
bool in_free_class(const IntersectionLattice& L, const FormalSheaf& F, const QClass& omega,
                   const TiltSlope& beta);

enum class TorsionSide { torsion_side, free_side, neither };

/// Classification per the predicates above; the zero object reports
/// free_side (the free class includes 0 explicitly).
TorsionSide torsion_pair_membership(const IntersectionLattice& L, const FormalSheaf& F,
                                    const QClass& omega, const TiltSlope& beta);

/// Splits F into (torsion + factors of slope > beta, factors of slope <= beta).
/// Both parts satisfy their membership predicate; rank and c1 are conserved.
std::pair<FormalSheaf, FormalSheaf> decompose(const IntersectionLattice& L, const FormalSheaf& F,
                                              const QClass& omega, const TiltSlope& beta);

/// Two-term complex with cohomology in degrees -1 and 0 only; the degree -1
/// part must be torsion-free.
struct NumericalComplex {
    FormalSheaf h_minus1;
    FormalSheaf h0;
};

struct HeartReport {
    bool in_heart;
    bool h_minus1_in_free;
    bool h0_in_torsion;
};

/// Membership in the tilted heart: H^-1 in the free class and H^0 in the
/// torsion class. The report names the violated side.
HeartReport heart_membership(const IntersectionLattice& L, const NumericalComplex& X,
                             const QClass& omega, const TiltSlope& beta);

enum class MinimalShape { point_class, shifted_stable_slope_beta, not_minimal_shape };

/// Necessary numerical shape test for minimal objects of the heart: point
/// classes, or shifted single semistable factors of slope exactly beta.
/// Actual stability/local freeness of a witness is not numerical and is not
/// decided here. With a bracketed (irrational) beta the shifted shape is
/// unreachable.
MinimalShape classify_minimal_shape(const IntersectionLattice& L, const NumericalComplex& X,
                                    const QClass& omega, const TiltSlope& beta);
MinimalShape classify_minimal_shape(const IntersectionLattice& L, const MukaiVector& v,
                                    const QClass& omega, const TiltSlope& beta);

struct ScanHit {
    MukaiVector v;
    Rat re; // Z(v) = re, with im = 0 by membership
};

/// All spherical classes with 0 <= r <= bound, |s| <= bound, NS coordinates
/// in [-bound, bound], whose central charge lies in the non-positive reals.
/// Result sorted lexicographically by (r, l, s); threads only partition the
/// work and never change the output.
std::vector<ScanHit> spherical_scan(const IntersectionLattice& L, const ComplexifiedClass& K,
                                    long bound, int threads = 1);

enum class QuadricClass { q_tilde, q_prime, neither };

/// Period-domain membership of a complex class x: isotropic with (x.conj x) > 0
/// lands in the full quadric, additionally vanishing degree-zero component in
/// its hyperplane section; everything else in neither.
QuadricClass period_quadric_membership(const IntersectionLattice& L, const MukaiVectorC& x);

/// (<phi,phi>, <phi,conj phi>) for phi = exp(B + i omega). The first is 0 and
/// the second 2(omega.omega) identically; returned as computed values so the
/// identity can be checked, not assumed.
std::pair<CRat, CRat> exp_isotropy_identities(const IntersectionLattice& L,
                                              const ComplexifiedClass& K);

} // namespace mukai
