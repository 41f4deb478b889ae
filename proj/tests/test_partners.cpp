#include <doctest.h>

#include "mukai/partners.hpp"
#include "mukai/selftest.hpp"

using namespace mukai;

TEST_CASE("class counts on small n") {
    CHECK(partner_class_count(Int(1)) == 1);
    CHECK(partner_class_count(Int(6)) == 2);
    CHECK(partner_class_count(Int(12)) == 2);  // 2^2 * 3: splittings {1,12}, {3,4}
    CHECK(partner_class_count(Int(30)) == 4);  // three prime factors
    CHECK(partner_class_count(Int(210)) == 8); // four prime factors
    CHECK_THROWS_AS(partner_class_count(Int(0)), ValidationError);
}

TEST_CASE("enumeration for n = 6") {
    Rank1Surface X{Int(6)};
    auto classes = enumerate_partner_candidates(X);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].first.r == 1);
    CHECK(classes[0].first.s == 6);
    CHECK(classes[0].second.r == 6);
    CHECK(classes[0].second.s == 1);
    CHECK(classes[1].first.r == 2);
    CHECK(classes[1].first.s == 3);
}

TEST_CASE("every candidate carries a valid certificate") {
    Rank1Surface X{Int(30)};
    IntersectionLattice L = X.lattice();
    for (const PartnerClass& cls : enumerate_partner_candidates(X)) {
        for (const PartnerCandidate& cand : {cls.first, cls.second}) {
            CHECK(cand.r * cand.s == X.n);
            CHECK(gcd(cand.r, cand.s) == 1);
            MukaiVector v = cand.vector(X);
            FineModuliReport rep = fine_moduli_check(L, v);
            CHECK(rep.passes());
            CHECK(rep.a == 1);
            CHECK(is_isotropic(L, v));
        }
    }
}

TEST_CASE("formula equals enumeration for all n up to 2000") {
    for (long n = 1; n <= 2000; ++n) {
        Rank1Surface X{Int(n)};
        CHECK(Int(static_cast<long>(enumerate_partner_candidates(X).size())) ==
              partner_class_count(Int(n)));
    }
}

TEST_CASE("count doubles under a new coprime prime power") {
    selftest::Rng rng(601);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 100; ++i) {
        long m = rng.range(2, 400);
        long p = primes[rng.range(0, 5)];
        if (m % p == 0) continue;
        long power = 1;
        for (long e = rng.range(1, 3); e > 0; --e) power *= p;
        CHECK(partner_class_count(Int(power * m)) == 2 * partner_class_count(Int(m)));
    }
}
