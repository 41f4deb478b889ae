#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/complex_class.hpp"
#include "mukai/mukai_vector.hpp"

namespace mukai {

/// Integer matrix on the coordinates (r, l_1..l_rho, s) preserving the Mukai
/// pairing exactly. Construction validates M^T G M = G against the extended
/// Gram matrix (NS block plus the hyperbolic (r,s) block with
/// <(1,0,0),(0,0,1)> = -1), which forces det = +-1.
class MukaiIsometry {
public:
    static MukaiIsometry from_matrix(const IntersectionLattice& L, IntMatrix m);
    static MukaiIsometry identity(const IntersectionLattice& L);

    /// Reflection in the spherical class (1,0,1): (r,l,s) -> (-s,l,-r).
    /// Swaps the degree-zero and degree-four generators up to sign and fixes
    /// the NS block pointwise. An involution.
    static MukaiIsometry spherical_twist(const IntersectionLattice& L);

    /// Multiplication by exp(c): (r,l,s) -> (r, l + r c, s + (c.l) + r (c.c)/2).
    /// Additive in c.
    static MukaiIsometry line_twist(const IntersectionLattice& L, const NSClass& c);

    /// -identity (the cohomological action of the shift [1]).
    static MukaiIsometry negation(const IntersectionLattice& L);

    /// Extended Gram matrix of the Mukai pairing for a given lattice.
    static IntMatrix mukai_gram(const IntersectionLattice& L);

    MukaiVector apply(const MukaiVector& v) const;

    /// this after other: apply(compose(M,N), v) = M(N(v)).
    MukaiIsometry compose(const MukaiIsometry& other) const;
    MukaiIsometry inverse() const;

    /// True iff (0,0,1) is fixed. This is the lattice-level partner
    /// isomorphism criterion; the geometric conclusion is reported, not proved.
    bool fixes_point_class() const;

    const IntMatrix& matrix() const { return m_; }
    std::size_t ns_rank() const { return m_.rows() - 2; }

    friend bool operator==(const MukaiIsometry& a, const MukaiIsometry& b) { return a.m_ == b.m_; }

private:
    explicit MukaiIsometry(IntMatrix m) : m_(std::move(m)) {}
    IntMatrix m_;
};

/// One step of a reduction trace, in application order.
struct TraceStep {
    enum class Kind { line_twist, spherical_twist, negate };
    Kind kind;
    NSClass c; // set for line_twist only

    MukaiIsometry to_isometry(const IntersectionLattice& L) const;
};

struct ReductionResult {
    MukaiVector v_star;
    std::vector<TraceStep> trace;
    std::string note; // nonempty for the short-circuit cases

    MukaiIsometry composite(const IntersectionLattice& L) const;
};

/// Modifies an isotropic fine-moduli vector v = (r, a*ell, s) by one line
/// twist exp(ell~) and the spherical twist, sign-normalized to non-negative
/// rank, so that the result has rank coprime to the content of its degree
/// component (and still satisfies the fine-moduli conditions).
///
/// ell~ is searched over primitive classes linearly independent of ell, in
/// increasing sup-norm with descending lexicographic tie-break; the first
/// candidate whose twisted vector satisfies the full postcondition wins, so
/// the result is reproducible.
///
/// Short-circuits: gcd(r, a) = 1 already, zero degree component, or a
/// rank-one lattice (returned unchanged with a note).
ReductionResult reduce_to_coprime(const IntersectionLattice& L, const MukaiVector& v);

/// lambda * exp(B + i omega) = (lambda, lambda(B+i omega), lambda(B+i omega)^2/2).
/// Isotropic by construction.
struct ExponentialForm {
    Rat lambda; // > 0
    QClass B;
    QClass omega; // in the positive cone

    MukaiVectorC expand(const IntersectionLattice& L) const;
};

/// Reads (lambda, B', omega') off a complex class of exponential shape.
/// Checks, in order: the degree-zero component is real and positive
/// (HypothesisError "degree0"), the degree-four component equals
/// w2^2/(2 lambda) exactly (HypothesisError "quadratic"), and omega' lies in
/// the positive cone (HypothesisError "cone").
ExponentialForm normalize_exponential(const IntersectionLattice& L, const MukaiVectorC& w);

} // namespace mukai
