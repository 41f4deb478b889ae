#include "mukai/isometry.hpp"

namespace mukai {

namespace {

std::vector<Int> to_coords(const MukaiVector& v) {
    std::vector<Int> c;
    c.reserve(v.l.size() + 2);
    c.push_back(v.r);
    for (std::size_t i = 0; i < v.l.size(); ++i) c.push_back(v.l[i]);
    c.push_back(v.s);
    return c;
}

MukaiVector from_coords(const std::vector<Int>& c) {
    std::vector<Int> l(c.begin() + 1, c.end() - 1);
    return {c.front(), NSClass(std::move(l)), c.back()};
}

// NS-block square of a complex class: sum g_ij x_i x_j.
CRat ns_square_c(const IntersectionLattice& L, const std::vector<CRat>& x) {
    CRat acc;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) {
            const Int& g = L.gram().at(i, j);
            if (g == 0) continue;
            acc = acc + Rat(g) * (x[i] * x[j]);
        }
    return acc;
}

} // namespace

IntMatrix MukaiIsometry::mukai_gram(const IntersectionLattice& L) {
    const std::size_t n = L.rank() + 2;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j) g.at(i + 1, j + 1) = L.gram().at(i, j);
    g.at(0, n - 1) = -1;
    g.at(n - 1, 0) = -1;
    return g;
}

MukaiIsometry MukaiIsometry::from_matrix(const IntersectionLattice& L, IntMatrix m) {
    const std::size_t n = L.rank() + 2;
    if (m.rows() != n || m.cols() != n)
        throw ValidationError("isometry matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    IntMatrix g = mukai_gram(L);
    if (m.transpose() * g * m != g)
        throw ValidationError("matrix does not preserve the Mukai pairing");
    Int d = determinant(m);
    if (d != 1 && d != -1) throw ValidationError("isometry determinant must be +-1");
    return MukaiIsometry(std::move(m));
}

MukaiIsometry MukaiIsometry::identity(const IntersectionLattice& L) {
    return MukaiIsometry(IntMatrix::identity(L.rank() + 2));
}

MukaiIsometry MukaiIsometry::spherical_twist(const IntersectionLattice& L) {
    const std::size_t n = L.rank() + 2;
    IntMatrix m(n, n);
    for (std::size_t i = 1; i + 1 < n; ++i) m.at(i, i) = 1;
    m.at(0, n - 1) = -1;
    m.at(n - 1, 0) = -1;
    return MukaiIsometry(std::move(m));
}

MukaiIsometry MukaiIsometry::line_twist(const IntersectionLattice& L, const NSClass& c) {
    if (c.size() != L.rank()) throw ValidationError("twist class length does not match rank");
    const std::size_t n = L.rank() + 2;
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t i = 0; i < L.rank(); ++i) m.at(i + 1, 0) = c[i];
    std::vector<Int> gc = L.gram().apply(c.coords());
    for (std::size_t j = 0; j < L.rank(); ++j) m.at(n - 1, j + 1) = gc[j];
    // (c.c)/2 is integral on an even lattice.
    m.at(n - 1, 0) = L.pair(c, c) / 2;
    return MukaiIsometry(std::move(m));
}

MukaiIsometry MukaiIsometry::negation(const IntersectionLattice& L) {
    const std::size_t n = L.rank() + 2;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = -1;
    return MukaiIsometry(std::move(m));
}

MukaiVector MukaiIsometry::apply(const MukaiVector& v) const {
    if (v.l.size() + 2 != m_.rows())
        throw ValidationError("vector length does not match isometry size");
    return from_coords(m_.apply(to_coords(v)));
}

MukaiIsometry MukaiIsometry::compose(const MukaiIsometry& other) const {
    if (m_.rows() != other.m_.rows()) throw ValidationError("isometry size mismatch in composition");
    return MukaiIsometry(m_ * other.m_);
}

MukaiIsometry MukaiIsometry::inverse() const { return MukaiIsometry(inverse_unimodular(m_)); }

bool MukaiIsometry::fixes_point_class() const {
    MukaiVector p = MukaiVector::point_class(ns_rank());
    return apply(p) == p;
}

MukaiIsometry TraceStep::to_isometry(const IntersectionLattice& L) const {
    switch (kind) {
        case Kind::line_twist: return MukaiIsometry::line_twist(L, c);
        case Kind::spherical_twist: return MukaiIsometry::spherical_twist(L);
        case Kind::negate: return MukaiIsometry::negation(L);
    }
    throw ValidationError("unknown trace step");
}

MukaiIsometry ReductionResult::composite(const IntersectionLattice& L) const {
    MukaiIsometry m = MukaiIsometry::identity(L);
    for (const TraceStep& step : trace) m = step.to_isometry(L).compose(m);
    return m;
}

namespace {

bool proportional(const NSClass& x, const NSClass& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] * y[j] != x[j] * y[i]) return false;
    return true;
}

// Vectors of sup-norm exactly `norm` in descending lexicographic order.
// rho >= 2 here, so the shell is small for the norms this search visits.
std::vector<NSClass> sup_norm_shell(std::size_t rho, long norm) {
    std::vector<NSClass> shell;
    std::vector<long> cur(rho, norm);
    while (true) {
        long maxabs = 0;
        for (long v : cur) maxabs = std::max(maxabs, std::abs(v));
        if (maxabs == norm) {
            std::vector<Int> coords(cur.begin(), cur.end());
            shell.emplace_back(std::move(coords));
        }
        // Descending odometer over {-norm..norm}^rho.
        std::size_t k = rho;
        while (k > 0 && cur[k - 1] == -norm) {
            cur[k - 1] = norm;
            --k;
        }
        if (k == 0) break;
        --cur[k - 1];
    }
    return shell;
}

} // namespace

ReductionResult reduce_to_coprime(const IntersectionLattice& L, const MukaiVector& v) {
    FineModuliReport rep = fine_moduli_check(L, v);
    if (!rep.passes())
        throw HypothesisError("crucform", "input does not satisfy the fine-moduli conditions");

    ReductionResult out;
    out.v_star = v;
    if (v.l.is_zero()) {
        out.note = "degenerate: zero degree component";
        return out;
    }
    if (L.rank() < 2) {
        out.note = "rank-one lattice: rank and degree are already coprime";
        return out;
    }
    const Int alpha = gcd(v.r, rep.a);
    if (alpha == 1) {
        out.note = "rank and degree content already coprime";
        return out;
    }

    const MukaiIsometry twist = MukaiIsometry::spherical_twist(L);
    constexpr long kMaxSupNorm = 40;
    for (long norm = 1; norm <= kMaxSupNorm; ++norm) {
        for (const NSClass& cand : sup_norm_shell(L.rank(), norm)) {
            if (vec_gcd(cand.coords()) != 1) continue;
            if (proportional(cand, rep.ell)) continue;

            MukaiVector w = MukaiIsometry::line_twist(L, cand).apply(v);
            if (gcd(alpha, w.s) != 1) continue;

            MukaiVector u = twist.apply(w);
            bool negated = false;
            if (u.r < 0) {
                u = -u;
                negated = true;
            }
            if (u.l.is_zero()) continue;
            ContentSplit split = content_split(u.l);
            if (gcd(u.r, split.content) != 1) continue;
            if (!fine_moduli_check(L, u).passes()) continue;

            out.v_star = u;
            out.trace.push_back({TraceStep::Kind::line_twist, cand});
            out.trace.push_back({TraceStep::Kind::spherical_twist, {}});
            if (negated) out.trace.push_back({TraceStep::Kind::negate, {}});
            return out;
        }
    }
    throw HypothesisError("search", "no admissible twist class found within the search bound");
}

MukaiVectorC ExponentialForm::expand(const IntersectionLattice& L) const {
    MukaiVectorC w;
    w.r = CRat(lambda);
    w.l.reserve(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i) w.l.emplace_back(lambda * B[i], lambda * omega[i]);
    Rat b2 = L.pair(B, B);
    Rat o2 = L.pair(omega, omega);
    Rat bo = L.pair(B, omega);
    w.s = CRat(lambda * (b2 - o2) / 2, lambda * bo);
    return w;
}

ExponentialForm normalize_exponential(const IntersectionLattice& L, const MukaiVectorC& w) {
    if (w.l.size() != L.rank()) throw ValidationError("class length does not match lattice rank");
    if (!w.r.is_real() || w.r.re <= 0)
        throw HypothesisError("degree0", "degree-zero component must be real and positive");
    const Rat lambda = w.r.re;

    CRat expected_s = div_by(ns_square_c(L, w.l), 2 * lambda);
    if (w.s != expected_s)
        throw HypothesisError("quadratic",
                              "degree-four component does not equal the square of the degree-two "
                              "component over twice the scale");

    std::vector<Rat> b(L.rank()), o(L.rank());
    for (std::size_t i = 0; i < L.rank(); ++i) {
        CRat z = div_by(w.l[i], lambda);
        b[i] = z.re;
        o[i] = z.im;
    }
    ExponentialForm form{lambda, QClass(std::move(b)), QClass(std::move(o))};
    if (!L.positive_cone(form.omega))
        throw HypothesisError("cone", "imaginary part is not in the positive cone of the polarization");
    return form;
}

} // namespace mukai
