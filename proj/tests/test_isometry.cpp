#include <doctest.h>

#include "mukai/isometry.hpp"
#include "mukai/selftest.hpp"

using namespace mukai;

namespace {

IntersectionLattice u_lattice() { return hyperbolic_lattice(NSClass({Int(1), Int(2)})); }

MukaiVector mv(long r, std::vector<long> l, long s) {
    std::vector<Int> coords(l.begin(), l.end());
    return {Int(r), NSClass(std::move(coords)), Int(s)};
}

} // namespace

TEST_CASE("spherical twist swaps the outer components up to sign") {
    IntersectionLattice r1 = rank_one_lattice(Int(2));
    MukaiIsometry t = MukaiIsometry::spherical_twist(r1);
    CHECK(t.apply(mv(0, {0}, 1)) == mv(-1, {0}, 0));
    CHECK(t.apply(mv(1, {0}, 1)) == mv(-1, {0}, -1));
    CHECK(t.apply(mv(5, {3}, -2)) == mv(2, {3}, -5));
}

TEST_CASE("line twist component formula on the running example") {
    IntersectionLattice u = u_lattice();
    MukaiIsometry e = MukaiIsometry::line_twist(u, NSClass({Int(1), Int(0)}));
    CHECK(e.apply(mv(4, {2, 2}, 1)) == mv(4, {6, 2}, 3));

    MukaiIsometry none = MukaiIsometry::line_twist(u, NSClass::zero(2));
    CHECK(none == MukaiIsometry::identity(u));
}

TEST_CASE("twists are pairing-preserving; line twists form a group") {
    selftest::Rng rng(301);
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        MukaiIsometry t = MukaiIsometry::spherical_twist(L);
        MukaiVector v = selftest::random_mukai_vector(L, rng, 8);
        MukaiVector w = selftest::random_mukai_vector(L, rng, 8);
        CHECK(t.apply(t.apply(v)) == v);
        CHECK(t.apply(v).l == v.l);
        CHECK(mukai_pair(L, t.apply(v), t.apply(w)) == mukai_pair(L, v, w));

        NSClass c1 = selftest::random_mukai_vector(L, rng, 4).l;
        NSClass c2 = selftest::random_mukai_vector(L, rng, 4).l;
        CHECK(MukaiIsometry::line_twist(L, c1).compose(MukaiIsometry::line_twist(L, c2)) ==
              MukaiIsometry::line_twist(L, c1 + c2));
    }
}

TEST_CASE("compose, invert, identity") {
    IntersectionLattice u = u_lattice();
    MukaiIsometry id = MukaiIsometry::identity(u);
    MukaiIsometry e = MukaiIsometry::line_twist(u, NSClass({Int(2), Int(-1)}));
    CHECK(id.compose(e) == e);
    CHECK(e.compose(e.inverse()) == id);
    CHECK(e.inverse() == MukaiIsometry::line_twist(u, NSClass({Int(-2), Int(1)})));
}

TEST_CASE("non-isometric matrices are rejected at construction") {
    IntersectionLattice r1 = rank_one_lattice(Int(2));
    IntMatrix bad = IntMatrix::identity(3);
    bad.at(0, 0) = 2; // scales the rank component
    CHECK_THROWS_AS(MukaiIsometry::from_matrix(r1, bad), ValidationError);
    CHECK_THROWS_AS(MukaiIsometry::from_matrix(r1, IntMatrix::identity(4)), ValidationError);
}

TEST_CASE("point-class fixing") {
    IntersectionLattice u = u_lattice();
    CHECK(MukaiIsometry::identity(u).fixes_point_class());
    CHECK_FALSE(MukaiIsometry::spherical_twist(u).fixes_point_class());
    selftest::Rng rng(302);
    for (int i = 0; i < 50; ++i) {
        NSClass c = selftest::random_mukai_vector(u, rng, 6).l;
        CHECK(MukaiIsometry::line_twist(u, c).fixes_point_class());
    }
}

TEST_CASE("point-class fixing is closed under composition") {
    selftest::Rng rng(303);
    for (int i = 0; i < 200; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 2);
        NSClass c1 = selftest::random_mukai_vector(L, rng, 5).l;
        NSClass c2 = selftest::random_mukai_vector(L, rng, 5).l;
        MukaiIsometry m = MukaiIsometry::line_twist(L, c1);
        MukaiIsometry n = MukaiIsometry::line_twist(L, c2);
        CHECK(m.compose(n).fixes_point_class());
    }
}

TEST_CASE("reduction reproduces the worked example") {
    IntersectionLattice u = u_lattice();
    ReductionResult red = reduce_to_coprime(u, mv(4, {2, 2}, 1));
    CHECK(red.v_star == mv(3, {-6, -2}, 4));
    REQUIRE(red.trace.size() == 3);
    CHECK(red.trace[0].kind == TraceStep::Kind::line_twist);
    CHECK(red.trace[0].c == NSClass({Int(1), Int(0)}));
    CHECK(red.trace[1].kind == TraceStep::Kind::spherical_twist);
    CHECK(red.trace[2].kind == TraceStep::Kind::negate);
    CHECK(red.composite(u).apply(mv(4, {2, 2}, 1)) == red.v_star);
}

TEST_CASE("reduction short-circuits") {
    IntersectionLattice u = u_lattice();

    // gcd(rank, content) = 1 already.
    ReductionResult red = reduce_to_coprime(u, mv(2, {1, 2}, 1));
    CHECK(red.v_star == mv(2, {1, 2}, 1));
    CHECK(red.trace.empty());

    // Point class: zero degree component.
    red = reduce_to_coprime(u, mv(0, {0, 0}, 1));
    CHECK(red.v_star == mv(0, {0, 0}, 1));
    CHECK(red.trace.empty());

    // Rank-one lattice.
    IntersectionLattice r1 = rank_one_lattice(Int(2));
    red = reduce_to_coprime(r1, mv(1, {1}, 1));
    CHECK(red.v_star == mv(1, {1}, 1));
    CHECK_FALSE(red.note.empty());

    CHECK_THROWS_AS(reduce_to_coprime(u, mv(2, {2, 2}, 2)), HypothesisError);
}

TEST_CASE("reduction postconditions on random fine vectors") {
    selftest::Rng rng(304);
    int done = 0;
    while (done < 60) {
        IntersectionLattice L = selftest::random_lattice(rng, 2 + done % 3);
        auto v = selftest::random_fine_vector(L, rng, true);
        if (!v) continue;
        ++done;
        ReductionResult red = reduce_to_coprime(L, *v);
        const MukaiVector& u = red.v_star;
        CHECK(u.r >= 0);
        CHECK(is_isotropic(L, u));
        CHECK(fine_moduli_check(L, u).passes());
        if (!u.l.is_zero()) CHECK(gcd(u.r, content_split(u.l).content) == 1);
    }
}

TEST_CASE("exponential normalization") {
    IntersectionLattice r1 = rank_one_lattice(Int(2));

    // exp(B + i omega) itself.
    ExponentialForm in{Rat(1), QClass({make_rat(Int(1), Int(3))}), QClass({Rat(2)})};
    ExponentialForm out = normalize_exponential(r1, in.expand(r1));
    CHECK(out.lambda == 1);
    CHECK(out.B == in.B);
    CHECK(out.omega == in.omega);

    // 3 * exp(h + 2ih) -> (3, h, 2h).
    ExponentialForm scaled{Rat(3), QClass({Rat(1)}), QClass({Rat(2)})};
    out = normalize_exponential(r1, scaled.expand(r1));
    CHECK(out.lambda == 3);
    CHECK(out.B == QClass({Rat(1)}));
    CHECK(out.omega == QClass({Rat(2)}));

    // Perturbing the degree-four component breaks the quadratic consistency.
    MukaiVectorC w = scaled.expand(r1);
    w.s.re += 1;
    CHECK_THROWS_WITH_AS(normalize_exponential(r1, w), doctest::Contains("degree-four"),
                         HypothesisError);
    try {
        normalize_exponential(r1, w);
    } catch (const HypothesisError& e) {
        CHECK(e.code() == "quadratic");
    }

    // Non-positive degree-zero component.
    MukaiVectorC bad = scaled.expand(r1);
    bad.r = CRat(Rat(-3));
    CHECK_THROWS_AS(normalize_exponential(r1, bad), HypothesisError);

    // Imaginary part on the wrong side of the cone.
    ExponentialForm flipped{Rat(1), QClass({Rat(0)}), QClass({Rat(-1)})};
    try {
        normalize_exponential(r1, flipped.expand(r1));
        CHECK(false);
    } catch (const HypothesisError& e) {
        CHECK(e.code() == "cone");
    }
}

TEST_CASE("exponential round-trip on random data") {
    selftest::Rng rng(305);
    for (int i = 0; i < 300; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        ExponentialForm f{rng.positive_rat(9, 4), selftest::random_q_class(L, rng, 5),
                          selftest::random_positive_cone_class(L, rng)};
        ExponentialForm back = normalize_exponential(L, f.expand(L));
        CHECK(back.lambda == f.lambda);
        CHECK(back.B == f.B);
        CHECK(back.omega == f.omega);
    }
}
