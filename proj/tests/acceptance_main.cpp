// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "mukai/construct.hpp"
#include "mukai/isometry.hpp"
#include "mukai/json_io.hpp"
#include "mukai/partners.hpp"
#include "mukai/selftest.hpp"

#ifndef MUKAI_CLI_PATH
#error "MUKAI_CLI_PATH must be defined by the build"
#endif
#ifndef MUKAI_GOLDEN_DIR
#error "MUKAI_GOLDEN_DIR must be defined by the build"
#endif

using namespace mukai;
using selftest::Rng;

namespace {

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    bool (*body)(std::string& detail);
};

bool expect(bool cond, std::string& detail, const std::string& what) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

MukaiVector mv(long r, std::vector<long> l, long s) {
    std::vector<Int> coords(l.begin(), l.end());
    return {Int(r), NSClass(std::move(coords)), Int(s)};
}

// ---- 1: pairing convention pin ---------------------------------------------

bool criterion_pairing(std::string& detail) {
    Rng rng(1001);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        MukaiVector f = selftest::random_mukai_vector(L, rng, 9);
        MukaiVector g = selftest::random_mukai_vector(L, rng, 9);
        MukaiVector e{f.r + g.r, f.l + g.l, g.s};
        Int direct = L.pair(f.l, f.l + g.l) - f.r * g.s - (f.r + g.r) * f.s;
        ok &= expect(mukai_pair(L, f, e) == direct, detail, "pairing display mismatch");
    }
    return ok;
}

// ---- 2: Im Z identity -------------------------------------------------------

bool criterion_im_z(std::string& detail) {
    Rng rng(1002);
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        ComplexifiedClass K(L, selftest::random_q_class(L, rng, 6),
                            selftest::random_positive_cone_class(L, rng));
        MukaiVector v = selftest::random_mukai_vector(L, rng, 9);
        Rat direct = L.pair(v.l, K.omega) - Rat(v.r) * L.pair(K.B, K.omega);
        CentralCharge z = central_charge(L, K, v);
        ok &= expect(z.im == direct, detail, "Im Z != (l.omega) - r(B.omega)");
        ok &= expect(central_charge_im(L, K, v) == direct, detail, "direct route disagrees");
    }
    return ok;
}

// ---- 3: isometry suite ------------------------------------------------------

bool criterion_isometries(std::string& detail) {
    Rng rng(1003);
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        MukaiIsometry t = MukaiIsometry::spherical_twist(L);
        MukaiVector v = selftest::random_mukai_vector(L, rng, 9);
        MukaiVector w = selftest::random_mukai_vector(L, rng, 9);
        ok &= expect(t.apply(t.apply(v)) == v, detail, "twist is not an involution");
        ok &= expect(t.apply(v).l == v.l, detail, "twist moves the NS block");
        ok &= expect(mukai_pair(L, t.apply(v), t.apply(w)) == mukai_pair(L, v, w), detail,
                     "twist breaks the pairing");

        NSClass c1 = selftest::random_mukai_vector(L, rng, 5).l;
        NSClass c2 = selftest::random_mukai_vector(L, rng, 5).l;
        MukaiIsometry e1 = MukaiIsometry::line_twist(L, c1);
        ok &= expect(e1.compose(MukaiIsometry::line_twist(L, c2)) ==
                         MukaiIsometry::line_twist(L, c1 + c2),
                     detail, "line twist is not additive");

        // Squares are preserved, so sphericity and isotropy are too.
        ok &= expect(mukai_pair(L, e1.apply(v), e1.apply(v)) == mukai_pair(L, v, v), detail,
                     "line twist changes a square");
        ok &= expect(mukai_pair(L, t.apply(v), t.apply(v)) == mukai_pair(L, v, v), detail,
                     "spherical twist changes a square");
    }
    return ok;
}

// ---- 4: reduction algorithm -------------------------------------------------

bool criterion_reduction(std::string& detail) {
    Rng rng(1004);
    bool ok = true;
    int done = 0;
    while (done < 100) {
        IntersectionLattice L = selftest::random_lattice(rng, 2 + done % 3);
        auto v = selftest::random_fine_vector(L, rng, done % 2 == 0);
        if (!v) continue;
        ++done;
        ReductionResult red = reduce_to_coprime(L, *v);
        const MukaiVector& u = red.v_star;
        ok &= expect(u.r >= 0, detail, "reduced rank negative");
        ok &= expect(is_isotropic(L, u), detail, "reduction breaks isotropy");
        ok &= expect(fine_moduli_check(L, u).passes(), detail, "reduction breaks the certificate");
        if (!u.l.is_zero())
            ok &= expect(gcd(u.r, content_split(u.l).content) == 1, detail,
                         "rank and content not coprime");
        ok &= expect(red.composite(L).apply(*v) == u, detail, "trace composite mismatch");
    }

    IntersectionLattice u_lat = hyperbolic_lattice(NSClass({Int(1), Int(2)}));
    ReductionResult red = reduce_to_coprime(u_lat, mv(4, {2, 2}, 1));
    ok &= expect(red.v_star == mv(3, {-6, -2}, 4), detail, "worked example mismatch");
    ok &= expect(red.trace.size() == 3 && red.trace[0].c == NSClass({Int(1), Int(0)}), detail,
                 "worked example trace mismatch");
    return ok;
}

// ---- 5: extension lemma -----------------------------------------------------

bool criterion_extension(std::string& detail) {
    Rng rng(1005);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        Int r(rng.range(1, 6));
        Rat l = rng.positive_rat(9, 5);
        Rat beta = l / Rat(r) + rng.positive_rat(7, 6);
        ExtensionSolution sol = solve_extension_problem({l, r, beta});

        Rat left = (l + sol.l_prime) / Rat(r + sol.r_prime);
        Rat right = sol.l_prime / Rat(sol.r_prime);
        ok &= expect(left <= beta && beta < right, detail, "double inequality violated");

        Rat x = beta / l;
        Int P = rat_num(x), Q = rat_den(x);
        ok &= expect(sol.power * Q - sol.r_prime * P == 1, detail, "excess is not a unit");
        for (Int b = 1; b < sol.r_prime; ++b)
            ok &= expect((b * P + 1) % Q != 0, detail, "smaller denominator attains unit excess");
    }

    ExtensionSolution sol = solve_extension_problem({Rat(1), Int(2), make_rat(Int(7), Int(10))});
    ok &= expect(sol.l_prime == 5 && sol.r_prime == 7, detail, "worked instance is not (5,7)");
    return ok;
}

// ---- 6: spherical scan ------------------------------------------------------

bool criterion_scan(std::string& detail) {
    bool ok = true;

    // Rank one, omega = generator, omega^2 in {4, 6, 8}.
    for (long two_n : {4, 6, 8}) {
        IntersectionLattice L = rank_one_lattice(Int(two_n));
        ComplexifiedClass K(L, QClass::zero(1), QClass({Rat(1)}));
        ok &= expect(spherical_scan(L, K, 10).empty(), detail,
                     "unexpected hit on the rank-one lattice");
    }

    // Hyperbolic plane, omega^2 in {4, 6, 8}.
    IntersectionLattice U = hyperbolic_lattice(NSClass({Int(1), Int(1)}));
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 2}}) {
        ComplexifiedClass K(U, QClass::zero(2), QClass({Rat(a), Rat(b)}));
        ok &= expect(spherical_scan(U, K, 10).empty(), detail, "unexpected hit on U");
    }

    // Boundary omega^2 = 2: the spherical class (1,0,1) has Z = 0.
    IntersectionLattice L2 = rank_one_lattice(Int(2));
    ComplexifiedClass K2(L2, QClass::zero(1), QClass({Rat(1)}));
    bool witness = false;
    for (const ScanHit& h : spherical_scan(L2, K2, 10))
        if (h.v == mv(1, {0}, 1) && h.re == 0) witness = true;
    ok &= expect(witness, detail, "boundary witness (1,0,1) not found");
    return ok;
}

// ---- 7: partner count oracle ------------------------------------------------

bool criterion_partners(std::string& detail) {
    bool ok = true;
    for (long n = 1; n <= 10000; ++n) {
        // Independent brute force over ordered coprime factorizations.
        long ordered = 0;
        for (long r = 1; r * r <= n; ++r) {
            if (n % r != 0) continue;
            long s = n / r;
            if (std::gcd(r, s) != 1) continue;
            ordered += (r == s) ? 1 : 2;
        }
        long classes = (n == 1) ? 1 : ordered / 2;

        Rank1Surface X{Int(n)};
        ok &= expect(Int(classes) == partner_class_count(Int(n)), detail,
                     "formula disagrees with brute force at n = " + std::to_string(n));
        ok &= expect(static_cast<long>(enumerate_partner_candidates(X).size()) == classes, detail,
                     "enumeration disagrees at n = " + std::to_string(n));
        if (!ok) break;
    }
    return ok;
}

// ---- 8: exponential identities ----------------------------------------------

bool criterion_exponential(std::string& detail) {
    Rng rng(1008);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 4);
        ComplexifiedClass K(L, selftest::random_q_class(L, rng, 6),
                            selftest::random_positive_cone_class(L, rng));
        auto [self, conj] = exp_isotropy_identities(L, K);
        ok &= expect(self.is_zero(), detail, "<phi,phi> != 0");
        ok &= expect(conj == CRat(2 * L.pair(K.omega, K.omega)), detail,
                     "<phi,conj phi> != 2 omega^2");

        ExponentialForm f{rng.positive_rat(9, 5), K.B, K.omega};
        ExponentialForm back = normalize_exponential(L, f.expand(L));
        ok &= expect(back.lambda == f.lambda && back.B == f.B && back.omega == f.omega, detail,
                     "normalization does not round-trip");
    }
    return ok;
}

// ---- 9: heart / torsion-pair suite -------------------------------------------

bool criterion_heart(std::string& detail) {
    Rng rng(1009);
    bool ok = true;

    for (int i = 0; i < 1000; ++i) {
        IntersectionLattice L = selftest::random_lattice(rng, 1 + i % 3);
        QClass omega = selftest::random_positive_cone_class(L, rng);
        TiltSlope beta = TiltSlope::exact(rng.rat(6, 3));
        FormalSheaf F = selftest::random_formal_sheaf(L, rng, omega, true);

        auto [t_part, f_part] = decompose(L, F, omega, beta);
        ok &= expect(t_part.total_rank() + f_part.total_rank() == F.total_rank(), detail,
                     "rank not conserved");
        ok &= expect(t_part.total_c1(L.rank()) + f_part.total_c1(L.rank()) == F.total_c1(L.rank()),
                     detail, "c1 not conserved");

        Rat t = rng.positive_rat(7, 4);
        ok &= expect(torsion_pair_membership(L, F, omega, beta) ==
                         torsion_pair_membership(L, F, t * omega,
                                                 TiltSlope::exact(t * beta.value())),
                     detail, "membership changes under joint rescale");

        FormalSheaf tf = selftest::random_formal_sheaf(L, rng, omega, false);
        NumericalComplex X{tf, selftest::random_formal_sheaf(L, rng, omega, true)};
        ok &= expect(heart_membership(L, X, omega, beta).in_heart ==
                         heart_membership(L, X, t * omega, TiltSlope::exact(t * beta.value()))
                             .in_heart,
                     detail, "heart membership changes under joint rescale");
    }

    // Boundary conventions.
    IntersectionLattice r1 = rank_one_lattice(Int(2));
    QClass h({Rat(1)});
    FormalSheaf at_beta;
    at_beta.factors = {{Int(1), NSClass({Int(1)})}}; // slope 2
    ok &= expect(torsion_pair_membership(r1, at_beta, h, TiltSlope::exact(Rat(2))) ==
                     TorsionSide::free_side,
                 detail, "mu = beta does not land on the free side");
    FormalSheaf point;
    point.torsion = TorsionPart{NSClass::zero(1), Int(1)};
    ok &= expect(torsion_pair_membership(r1, point, h, TiltSlope::exact(Rat(0))) ==
                     TorsionSide::torsion_side,
                 detail, "point class not on the torsion side");
    return ok;
}

// ---- 10: CLI determinism ------------------------------------------------------

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(MUKAI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool criterion_cli(std::string& detail) {
    bool ok = true;
    const std::string lattice = std::string("--lattice ") + MUKAI_GOLDEN_DIR + "/u_lattice.json";

    RunResult self = run_cli("selftest");
    ok &= expect(self.exit_code == 0, detail, "selftest not green");

    const std::vector<std::pair<std::string, std::string>> cases = {
        {"reduce " + lattice + " --v '{\"r\":4,\"l\":[2,2],\"s\":1}'", "reduce.json"},
        {"extension-lemma --l 1 --r 2 --beta 7/10", "extension_lemma.json"},
        {"partners --n 6", "partners6.json"},
    };
    for (const auto& [args, golden] : cases) {
        std::ifstream in(std::string(MUKAI_GOLDEN_DIR) + "/" + golden, std::ios::binary);
        if (!expect(static_cast<bool>(in), detail, "missing golden file " + golden)) return false;
        std::ostringstream ss;
        ss << in.rdbuf();
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        ok &= expect(first.exit_code == 0, detail, "golden command failed: " + args);
        ok &= expect(first.out == ss.str(), detail, "output differs from golden " + golden);
        ok &= expect(first.out == second.out, detail, "output differs across runs: " + args);
    }

    const std::string scan = "scan-spherical " + lattice + " --omega '[1,1]' --bound 6";
    RunResult t1 = run_cli(scan + " --threads 1");
    RunResult t2 = run_cli(scan + " --threads 2");
    RunResult t4 = run_cli(scan + " --threads 4");
    ok &= expect(t1.exit_code == 0, detail, "scan failed");
    ok &= expect(t1.out == t2.out && t1.out == t4.out, detail,
                 "scan output differs across thread counts");
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "pairing-convention-pin", 1.0, criterion_pairing},
        {2, "im-z-identity", 2.0, criterion_im_z},
        {3, "isometry-suite", 5.0, criterion_isometries},
        {4, "reduction-algorithm", 10.0, criterion_reduction},
        {5, "extension-lemma", 5.0, criterion_extension},
        {6, "spherical-scan", 30.0, criterion_scan},
        {7, "partner-count-oracle", 10.0, criterion_partners},
        {8, "exponential-identities", 2.0, criterion_exponential},
        {9, "heart-torsion-pair-suite", 2.0, criterion_heart},
        {10, "cli-determinism", 30.0, criterion_cli},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= c.limit_seconds) {
            ok = false;
            if (detail.empty()) detail = "time limit exceeded";
        }
        char line[256];
        std::snprintf(line, sizeof(line), "%s criterion-%02d %-26s %7.3fs (limit %gs)",
                      ok ? "PASS" : "FAIL", c.number, c.name, elapsed, c.limit_seconds);
        std::cout << line;
        if (!ok) std::cout << "  -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
