#pragma once

#include <cstdint>
#include <optional>
#include <ostream>

#include "mukai/stability.hpp"

namespace mukai::selftest {

/// Deterministic generator (splitmix64). Identical sequences on every
/// platform, so selftest output is byte-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [lo, hi] inclusive; bias is irrelevant here.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long num_bound, long den_bound) {
        return make_rat(Int(range(-num_bound, num_bound)), Int(range(1, den_bound)));
    }

    Rat positive_rat(long num_bound, long den_bound) {
        return make_rat(Int(range(1, num_bound)), Int(range(1, den_bound)));
    }

private:
    std::uint64_t state_;
};

/// Random even nondegenerate lattice of the given rank whose first basis
/// vector has square 2 and serves as the polarization.
IntersectionLattice random_lattice(Rng& rng, std::size_t rank);

/// Random rational class in the positive cone of L.
QClass random_positive_cone_class(const IntersectionLattice& L, Rng& rng);

QClass random_q_class(const IntersectionLattice& L, Rng& rng, long bound);

MukaiVector random_mukai_vector(const IntersectionLattice& L, Rng& rng, long bound);

/// Random vector satisfying the fine-moduli conditions, built by solving
/// a^2 (ell.ell) = 2 r s over random primitive ell. When want_reducible is
/// set, prefers gcd(r, a) > 1 so the reduction has work to do.
std::optional<MukaiVector> random_fine_vector(const IntersectionLattice& L, Rng& rng,
                                              bool want_reducible);

/// Random slope profile: strictly decreasing factor slopes under omega,
/// optionally with a torsion part.
FormalSheaf random_formal_sheaf(const IntersectionLattice& L, Rng& rng, const QClass& omega,
                                bool allow_torsion);

/// Runs the deterministic invariant suites, printing one line per suite.
/// Returns the number of failed suites.
int run(std::ostream& out);

} // namespace mukai::selftest
