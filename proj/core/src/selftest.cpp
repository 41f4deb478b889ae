#include "mukai/selftest.hpp"

#include <functional>
#include <vector>

#include "mukai/construct.hpp"
#include "mukai/isometry.hpp"
#include "mukai/partners.hpp"

namespace mukai::selftest {

IntersectionLattice random_lattice(Rng& rng, std::size_t rank) {
    while (true) {
        IntMatrix gram(rank, rank);
        gram.at(0, 0) = 2;
        for (std::size_t i = 1; i < rank; ++i) gram.at(i, i) = 2 * rng.range(-2, -1);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j) {
                Int off = rng.range(-2, 2);
                gram.at(i, j) = off;
                gram.at(j, i) = off;
            }
        if (determinant(gram) == 0) continue;
        NSClass ample = NSClass::zero(rank);
        ample[0] = 1;
        return IntersectionLattice(std::move(gram), std::move(ample));
    }
}

QClass random_positive_cone_class(const IntersectionLattice& L, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rat> coords(L.rank());
        coords[0] = rng.positive_rat(6, 3) + 1;
        for (std::size_t i = 1; i < L.rank(); ++i) coords[i] = rng.rat(1, 4);
        QClass w(std::move(coords));
        if (L.positive_cone(w)) return w;
    }
    return QClass(L.ample());
}

QClass random_q_class(const IntersectionLattice& L, Rng& rng, long bound) {
    std::vector<Rat> coords(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i) coords[i] = rng.rat(bound, 4);
    return QClass(std::move(coords));
}

MukaiVector random_mukai_vector(const IntersectionLattice& L, Rng& rng, long bound) {
    std::vector<Int> coords(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i) coords[i] = rng.range(-bound, bound);
    return {Int(rng.range(-bound, bound)), NSClass(std::move(coords)), Int(rng.range(-bound, bound))};
}

std::optional<MukaiVector> random_fine_vector(const IntersectionLattice& L, Rng& rng,
                                              bool want_reducible) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Int> coords(L.rank());
        bool zero = true;
        for (std::size_t i = 0; i < L.rank(); ++i) {
            coords[i] = rng.range(-3, 3);
            if (coords[i] != 0) zero = false;
        }
        if (zero) continue;
        NSClass ell = content_split(NSClass(std::move(coords))).primitive;
        Int ell_sq = L.pair(ell, ell);
        if (ell_sq == 0) continue;

        Int a(rng.range(1, 3));
        Int target = a * a * ell_sq / 2; // r*s must equal this
        Int abs_target = abs(target);

        std::vector<std::pair<Int, Int>> options;
        for (Int r = 1; r <= abs_target; ++r) {
            if (abs_target % r != 0) continue;
            Int s = target / r;
            if (gcd(gcd(r, a * L.pair(ell, L.ample())), s) != 1) continue;
            options.emplace_back(r, s);
        }
        if (options.empty()) continue;
        if (want_reducible) {
            std::vector<std::pair<Int, Int>> reducible;
            for (const auto& o : options)
                if (gcd(o.first, a) > 1) reducible.push_back(o);
            if (!reducible.empty()) options = std::move(reducible);
        }
        const auto& pick = options[rng.next() % options.size()];
        MukaiVector v{pick.first, a * ell, pick.second};
        if (!fine_moduli_check(L, v).passes()) continue;
        return v;
    }
    return std::nullopt;
}

FormalSheaf random_formal_sheaf(const IntersectionLattice& L, Rng& rng, const QClass& omega,
                                bool allow_torsion) {
    FormalSheaf F;
    if (allow_torsion && rng.range(0, 2) == 0) {
        TorsionPart t;
        if (rng.range(0, 1) == 0) {
            t.degree = NSClass::zero(L.rank());
        } else {
            std::vector<Int> coords(L.rank());
            for (std::size_t i = 0; i < L.rank(); ++i) coords[i] = rng.range(0, 2);
            t.degree = NSClass(std::move(coords));
        }
        t.points = rng.range(0, 3);
        F.torsion = std::move(t);
    }
    const long want = rng.range(0, 3);
    std::vector<SheafFactor> factors;
    for (long i = 0; i < want * 4 && static_cast<long>(factors.size()) < want; ++i) {
        std::vector<Int> coords(L.rank());
        for (std::size_t k = 0; k < L.rank(); ++k) coords[k] = rng.range(-4, 4);
        SheafFactor f{Int(rng.range(1, 3)), NSClass(std::move(coords))};
        Rat mu = slope(L, f, omega);
        bool distinct = true;
        for (const SheafFactor& g : factors)
            if (slope(L, g, omega) == mu) distinct = false;
        if (distinct) factors.push_back(std::move(f));
    }
    std::sort(factors.begin(), factors.end(), [&](const SheafFactor& x, const SheafFactor& y) {
        return slope(L, x, omega) > slope(L, y, omega);
    });
    F.factors = std::move(factors);
    return F;
}

namespace {

struct Suite {
    const char* name;
    std::function<bool(std::string&)> body;
};

bool check(bool cond, std::string& detail, const char* what) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

bool pairing_suite(std::string& detail) {
    Rng rng(11);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 4);
        MukaiVector u = random_mukai_vector(L, rng, 8);
        MukaiVector v = random_mukai_vector(L, rng, 8);
        MukaiVector w = random_mukai_vector(L, rng, 8);
        ok &= check(mukai_pair(L, u, v) == mukai_pair(L, v, u), detail, "pairing not symmetric");
        ok &= check(mukai_pair(L, u + v, w) == mukai_pair(L, u, w) + mukai_pair(L, v, w), detail,
                    "pairing not bilinear");
        ok &= check(mukai_pair(L, v, v) % 2 == 0, detail, "square not even");
    }
    return ok;
}

bool lattice_suite(std::string& detail) {
    Rng rng(12);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 4);
        MukaiVector v = random_mukai_vector(L, rng, 9);
        if (v.l.is_zero()) continue;
        ContentSplit split = content_split(v.l);
        ok &= check(split.content * split.primitive == v.l, detail, "content split round-trip");
        ok &= check(is_primitive(split.primitive), detail, "content split primitive part");
        QClass w = random_positive_cone_class(L, rng);
        Rat t = rng.positive_rat(9, 5);
        ok &= check(L.positive_cone(t * w), detail, "positive cone not scale-invariant");
    }
    return ok;
}

bool chern_suite(std::string& detail) {
    Rng rng(13);
    bool ok = true;
    for (int i = 0; i < 500; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 3);
        MukaiVector v = random_mukai_vector(L, rng, 6);
        if (v.r < 0) v.r = -v.r;
        ChernData c{v.r, v.l, v.r + L.pair(v.l, v.l) / 2 - v.s};
        ok &= check(from_chern(L, c) == v, detail, "Chern data round-trip");
    }
    return ok;
}

bool fine_isotropy_suite(std::string& detail) {
    Rng rng(14);
    bool ok = true;
    for (int i = 0; i < 300; ++i) {
        IntersectionLattice L = random_lattice(rng, 2 + i % 3);
        auto v = random_fine_vector(L, rng, false);
        if (!v) continue;
        ok &= check(is_isotropic(L, *v), detail, "fine vector not isotropic");
    }
    return ok;
}

bool twist_suite(std::string& detail) {
    Rng rng(15);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 4);
        MukaiIsometry t = MukaiIsometry::spherical_twist(L);
        MukaiVector v = random_mukai_vector(L, rng, 8);
        MukaiVector w = random_mukai_vector(L, rng, 8);
        ok &= check(t.apply(t.apply(v)) == v, detail, "spherical twist not an involution");
        ok &= check(t.apply(v).l == v.l, detail, "spherical twist moves the NS block");
        ok &= check(mukai_pair(L, t.apply(v), t.apply(w)) == mukai_pair(L, v, w), detail,
                    "spherical twist not an isometry");

        NSClass c1 = random_mukai_vector(L, rng, 4).l;
        NSClass c2 = random_mukai_vector(L, rng, 4).l;
        MukaiIsometry e1 = MukaiIsometry::line_twist(L, c1);
        MukaiIsometry e2 = MukaiIsometry::line_twist(L, c2);
        ok &= check(e1.compose(e2) == MukaiIsometry::line_twist(L, c1 + c2), detail,
                    "line twist not additive");
        ok &= check(mukai_pair(L, e1.apply(v), e1.apply(w)) == mukai_pair(L, v, w), detail,
                    "line twist not an isometry");
        ok &= check(e1.fixes_point_class(), detail, "line twist moves the point class");
        ok &= check(e1.compose(e1.inverse()) == MukaiIsometry::identity(L), detail,
                    "inverse composition is not the identity");
    }
    return ok;
}

bool reduction_suite(std::string& detail) {
    Rng rng(16);
    bool ok = true;
    int done = 0;
    while (done < 50) {
        IntersectionLattice L = random_lattice(rng, 2 + done % 3);
        auto v = random_fine_vector(L, rng, true);
        if (!v) continue;
        ++done;
        ReductionResult red = reduce_to_coprime(L, *v);
        const MukaiVector& u = red.v_star;
        ok &= check(u.r >= 0, detail, "reduced rank negative");
        ok &= check(is_isotropic(L, u), detail, "reduction broke isotropy");
        ok &= check(fine_moduli_check(L, u).passes(), detail, "reduction broke fine-moduli");
        if (!u.l.is_zero()) {
            Int content = content_split(u.l).content;
            ok &= check(gcd(u.r, content) == 1, detail, "rank/content not coprime after reduction");
        }
        ok &= check(red.composite(L).apply(*v) == u, detail, "trace composite mismatch");
    }
    return ok;
}

bool charge_suite(std::string& detail) {
    Rng rng(17);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 4);
        ComplexifiedClass K(L, random_q_class(L, rng, 5), random_positive_cone_class(L, rng));
        MukaiVector v = random_mukai_vector(L, rng, 8);
        MukaiVector w = random_mukai_vector(L, rng, 8);
        CentralCharge zv = central_charge(L, K, v);
        ok &= check(zv.im == central_charge_im(L, K, v), detail, "Im Z routes disagree");
        CentralCharge zw = central_charge(L, K, w);
        CentralCharge zsum = central_charge(L, K, v + w);
        ok &= check(zsum.re == zv.re + zw.re && zsum.im == zv.im + zw.im, detail, "Z not additive");
    }
    return ok;
}

bool heart_suite(std::string& detail) {
    Rng rng(18);
    bool ok = true;
    for (int i = 0; i < 500; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 3);
        QClass omega = random_positive_cone_class(L, rng);
        TiltSlope beta = TiltSlope::exact(rng.rat(6, 3));
        FormalSheaf F = random_formal_sheaf(L, rng, omega, true);

        auto [t_part, f_part] = decompose(L, F, omega, beta);
        ok &= check(t_part.total_rank() + f_part.total_rank() == F.total_rank(), detail,
                    "decompose rank leak");
        ok &= check(t_part.total_c1(L.rank()) + f_part.total_c1(L.rank()) == F.total_c1(L.rank()),
                    detail, "decompose c1 leak");
        ok &= check(in_torsion_class(L, t_part, omega, beta), detail, "T-part not in torsion class");
        ok &= check(in_free_class(L, f_part, omega, beta), detail, "F-part not in free class");

        Rat t = rng.positive_rat(7, 4);
        QClass omega2 = t * omega;
        TiltSlope beta2 = TiltSlope::exact(beta.value() * t);
        ok &= check(torsion_pair_membership(L, F, omega, beta) ==
                        torsion_pair_membership(L, F, omega2, beta2),
                    detail, "membership not invariant under joint rescale");
    }
    return ok;
}

bool exp_suite(std::string& detail) {
    Rng rng(19);
    bool ok = true;
    for (int i = 0; i < 400; ++i) {
        IntersectionLattice L = random_lattice(rng, 1 + i % 4);
        ComplexifiedClass K(L, random_q_class(L, rng, 5), random_positive_cone_class(L, rng));
        auto [self, conj] = exp_isotropy_identities(L, K);
        ok &= check(self.is_zero(), detail, "exponential class not isotropic");
        ok &= check(conj == CRat(2 * L.pair(K.omega, K.omega)), detail,
                    "pairing with conjugate is not 2 omega^2");

        ExponentialForm f{rng.positive_rat(9, 4), K.B, K.omega};
        ExponentialForm back = normalize_exponential(L, f.expand(L));
        ok &= check(back.lambda == f.lambda && back.B == f.B && back.omega == f.omega, detail,
                    "exponential normalization does not round-trip");
    }
    return ok;
}

bool extension_suite(std::string& detail) {
    Rng rng(20);
    bool ok = true;
    for (int i = 0; i < 300; ++i) {
        Int r(rng.range(1, 6));
        Rat l = rng.positive_rat(8, 4);
        Rat beta = l / Rat(r) + rng.positive_rat(6, 5);
        ExtensionSolution sol = solve_extension_problem({l, r, beta});
        Rat left = (l + sol.l_prime) / Rat(r + sol.r_prime);
        Rat right = sol.l_prime / Rat(sol.r_prime);
        ok &= check(left <= beta && beta < right, detail, "solution violates the double inequality");

        // Minimality: no smaller denominator reaches unit excess over beta/l.
        Rat x = beta / l;
        const Int P = rat_num(x), Q = rat_den(x);
        ok &= check(sol.power * Q - sol.r_prime * P == 1, detail, "solution excess is not a unit");
        for (Int b = 1; b < sol.r_prime; ++b)
            ok &= check((b * P + 1) % Q != 0, detail, "smaller denominator attains unit excess");
    }
    return ok;
}

bool partner_suite(std::string& detail) {
    bool ok = true;
    for (long n = 1; n <= 400; ++n) {
        Rank1Surface X{Int(n)};
        auto classes = enumerate_partner_candidates(X);
        ok &= check(Int(static_cast<long>(classes.size())) == partner_class_count(Int(n)), detail,
                    "class count disagrees with enumeration");
    }
    return ok;
}

bool scan_suite(std::string& detail) {
    bool ok = true;
    IntersectionLattice L = rank_one_lattice(Int(2));
    ComplexifiedClass boundary(L, QClass::zero(1), QClass({Rat(1)}));
    auto hits = spherical_scan(L, boundary, 4);
    bool found = false;
    for (const ScanHit& h : hits)
        if (h.v == MukaiVector{Int(1), NSClass({Int(0)}), Int(1)} && h.re == 0) found = true;
    ok &= check(found, detail, "boundary witness not found at omega^2 = 2");

    ComplexifiedClass valid(L, QClass::zero(1), QClass({Rat(2)}));
    ok &= check(spherical_scan(L, valid, 6).empty(), detail, "unexpected hit at omega^2 = 8");
    return ok;
}

} // namespace

int run(std::ostream& out) {
    const std::vector<Suite> suites{
        {"pairing-symmetry-bilinearity-evenness", pairing_suite},
        {"content-split-and-positive-cone", lattice_suite},
        {"chern-round-trip", chern_suite},
        {"fine-moduli-implies-isotropic", fine_isotropy_suite},
        {"twist-isometries", twist_suite},
        {"reduction-postconditions", reduction_suite},
        {"central-charge-identities", charge_suite},
        {"torsion-pair-and-heart", heart_suite},
        {"exponential-identities", exp_suite},
        {"extension-solver", extension_suite},
        {"partner-counts", partner_suite},
        {"spherical-scan", scan_suite},
    };
    int failures = 0;
    for (const Suite& s : suites) {
        std::string detail;
        bool ok = false;
        try {
            ok = s.body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            out << "ok " << s.name << "\n";
        } else {
            ++failures;
            out << "FAIL " << s.name << ": " << (detail.empty() ? "unspecified" : detail) << "\n";
        }
    }
    return failures;
}

} // namespace mukai::selftest
