#include "mukai/construct.hpp"

namespace mukai {

std::pair<Int, Int> farey_upper_neighbor(const Rat& x) {
    if (x <= 0) throw ValidationError("upper neighbor requires a positive argument");
    const Int P = rat_num(x);
    const Int Q = rat_den(x);
    if (Q == 1) return {P + 1, Int(1)};

    Int pl = floor_rat(x), ql = 1;
    Int pr = pl + 1, qr = 1;
    while (true) {
        Int a = pl * Q - P * ql; // L - x, scaled; negative
        Int b = pr * Q - P * qr; // R - x, scaled; positive
        Int m = a + b;           // sign of mediant - x
        if (m == 0) return {pr, qr};
        if (m < 0) {
            // Batch of left moves: largest k with a + k*b < 0.
            Int k = (-a - 1) / b;
            pl += k * pr;
            ql += k * qr;
            if (a + (k + 1) * b == 0) return {pr, qr};
        } else {
            // Batch of right moves: largest k with b + k*a > 0.
            Int k = (b - 1) / (-a);
            pr += k * pl;
            qr += k * ql;
            if (b + (k + 1) * a == 0) return {pr, qr};
        }
    }
}

namespace {

ExtensionSolution solve_normalized(const Rat& l, const Int& r, const Rat& beta) {
    // beta/l > 1/r holds here; the unit-excess upper neighbor of beta/l
    // satisfies both sides of the target inequality.
    Rat x = beta / l;
    auto [a, b] = farey_upper_neighbor(x);

    ExtensionSolution sol;
    sol.l_prime = Rat(a) * l;
    sol.r_prime = b;
    sol.power = a;
    sol.ray_aligned = true;
    sol.h_power = 0;
    return sol;
}

} // namespace

ExtensionSolution solve_extension_problem(const ExtensionProblem& p, const Rat& twist_degree) {
    if (p.r <= 0) throw ValidationError("rank must be positive");
    if (twist_degree <= 0) throw ValidationError("twist degree must be positive");
    const Rat mu = p.l / Rat(p.r);
    if (!(mu < p.beta))
        throw HypothesisError("slope", "requires l/r < beta; got mu = " + format_rat(mu) +
                                           ", beta = " + format_rat(p.beta));

    Int k = 0;
    Rat l = p.l, beta = p.beta;
    if (p.l <= 0) {
        // Twist by the k-th power of an auxiliary positive degree until the
        // determinant degree is positive; shifts both l and beta.
        Rat step = Rat(p.r) * twist_degree;
        k = floor_rat(-p.l / step) + 1;
        l = p.l + Rat(k) * step;
        beta = p.beta + Rat(k) * twist_degree;
    }

    ExtensionSolution sol = solve_normalized(l, p.r, beta);
    if (k != 0) {
        sol.l_prime -= Rat(sol.r_prime * k) * twist_degree;
        sol.ray_aligned = false;
        sol.h_power = k;
    }

    // The double inequality holds by construction; verify exactly anyway.
    Rat left = (p.l + sol.l_prime) / Rat(p.r + sol.r_prime);
    Rat right = sol.l_prime / Rat(sol.r_prime);
    if (!(left <= p.beta && p.beta < right))
        throw std::logic_error("extension solution violates its defining inequality");

    // Same formula as e_stability_threshold but without its r' >= r guard:
    // the solution may have a smaller denominator, where the bound is moot.
    Rat coeff = Rat(sol.r_prime * p.r - p.r) / Rat(p.r + sol.r_prime);
    sol.e_min = coeff * (right - p.l / Rat(p.r));
    return sol;
}

Rat e_stability_threshold(const Rat& l, const Int& r, const Rat& l_prime, const Int& r_prime,
                          const std::optional<Rat>& mu0) {
    if (r <= 0 || r_prime <= 0) throw ValidationError("ranks must be positive");
    if (r_prime < r)
        throw HypothesisError("rank-order", "threshold requires r' >= r");
    Rat coeff = Rat(r_prime * r - r) / Rat(r + r_prime);
    Rat gap = l_prime / Rat(r_prime) - l / Rat(r);
    Rat step = coeff * gap;
    if (!mu0) return step;
    Rat family_bound = l_prime / Rat(r_prime) - *mu0;
    return std::max(step, family_bound);
}

Int euler_positive_s_min(const IntersectionLattice& L, const MukaiVector& vF, const NSClass& c_extra,
                         const Int& r_extra) {
    if (vF.r <= 0) throw HypothesisError("rank", "requires positive rank");
    Int threshold = L.pair(vF.l, vF.l + c_extra) - (vF.r + r_extra) * vF.s;
    Int s_min = floor_div(threshold, vF.r) + 1;

    MukaiVector vE{vF.r + r_extra, vF.l + c_extra, s_min};
    if (euler_chi(L, vF, vE) <= 0)
        throw std::logic_error("Euler threshold failed its defining check");
    return s_min;
}

} // namespace mukai
