#include "mukai/partners.hpp"

#include <algorithm>

namespace mukai {

std::vector<PartnerClass> enumerate_partner_candidates(const Rank1Surface& X) {
    const IntersectionLattice L = X.lattice();

    std::vector<PartnerClass> classes;
    for (Int r = 1; r * r <= X.n; ++r) {
        if (X.n % r != 0) continue;
        Int s = X.n / r;
        if (gcd(r, s) != 1) continue;

        PartnerClass cls{{r, s}, {s, r}};
        for (const PartnerCandidate& cand : {cls.first, cls.second}) {
            MukaiVector v = cand.vector(X);
            FineModuliReport rep = fine_moduli_check(L, v);
            if (!rep.passes() || rep.a != 1 || !is_isotropic(L, v))
                throw std::logic_error("partner candidate failed its certificate");
        }
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const PartnerClass& a, const PartnerClass& b) { return a.first.r < b.first.r; });
    return classes;
}

Int partner_class_count(const Int& n) {
    if (n < 1) throw ValidationError("requires n >= 1");
    if (n == 1) return 1;

    Int m = n;
    int distinct_primes = 0;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        ++distinct_primes;
        while (m % p == 0) m /= p;
    }
    if (m > 1) ++distinct_primes;

    Int count = 1;
    for (int i = 1; i < distinct_primes; ++i) count *= 2;
    return count;
}

} // namespace mukai
