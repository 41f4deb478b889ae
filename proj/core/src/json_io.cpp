#include "mukai/json_io.hpp"

#include <fstream>
#include <limits>

namespace mukai {

namespace {

bool fits_int64(const Int& x) {
    static const Int lo(std::numeric_limits<long>::min());
    static const Int hi(std::numeric_limits<long>::max());
    return lo <= x && x <= hi;
}

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

json int_to_json(const Int& x) {
    if (fits_int64(x)) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Rat q = parse_rat(j.get<std::string>());
        if (q.get_den() != 1) throw ValidationError("expected an integer, got " + j.get<std::string>());
        return rat_num(q);
    }
    throw ValidationError("expected an integer value");
}

json rat_to_json(const Rat& q) { return json(format_rat(q)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ValidationError("expected a rational value (\"p/q\" string or integer)");
}

json ns_class_to_json(const NSClass& x) {
    json arr = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) arr.push_back(int_to_json(x[i]));
    return arr;
}

NSClass ns_class_from_json(const json& j, std::size_t rank) {
    if (!j.is_array()) throw ValidationError("expected an array of integers");
    if (j.size() != rank)
        throw ValidationError("class length " + std::to_string(j.size()) +
                              " does not match lattice rank " + std::to_string(rank));
    std::vector<Int> coords;
    coords.reserve(j.size());
    for (const json& e : j) coords.push_back(int_from_json(e));
    return NSClass(std::move(coords));
}

json q_class_to_json(const QClass& x) {
    json arr = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) arr.push_back(rat_to_json(x[i]));
    return arr;
}

QClass q_class_from_json(const json& j, std::size_t rank) {
    if (!j.is_array()) throw ValidationError("expected an array of rationals");
    if (j.size() != rank)
        throw ValidationError("class length " + std::to_string(j.size()) +
                              " does not match lattice rank " + std::to_string(rank));
    std::vector<Rat> coords;
    coords.reserve(j.size());
    for (const json& e : j) coords.push_back(rat_from_json(e));
    return QClass(std::move(coords));
}

IntersectionLattice lattice_from_json(const json& j) {
    const json& jrank = require_field(j, "rank");
    const json& jgram = require_field(j, "gram");
    const json& jample = require_field(j, "ample");
    Int rank = int_from_json(jrank);
    if (rank < 1 || rank > 64) throw ValidationError("rank must be in [1, 64]");
    const std::size_t n = static_cast<std::size_t>(rank.get_ui());

    if (!jgram.is_array() || jgram.size() != n)
        throw ValidationError("gram must be a rank x rank array");
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!jgram[i].is_array() || jgram[i].size() != n)
            throw ValidationError("gram row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) gram.at(i, k) = int_from_json(jgram[i][k]);
    }
    return IntersectionLattice(std::move(gram), ns_class_from_json(jample, n));
}

json lattice_to_json(const IntersectionLattice& L) {
    json jgram = json::array();
    for (std::size_t i = 0; i < L.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < L.rank(); ++k) row.push_back(int_to_json(L.gram().at(i, k)));
        jgram.push_back(std::move(row));
    }
    return json{{"rank", L.rank()}, {"gram", std::move(jgram)}, {"ample", ns_class_to_json(L.ample())}};
}

IntersectionLattice load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open lattice file: " + path);
    json j = json::parse(in); // parse errors propagate as json::parse_error
    return lattice_from_json(j);
}

MukaiVector mukai_vector_from_json(const IntersectionLattice& L, const json& j) {
    if (!j.is_object()) throw ValidationError("expected a Mukai vector object");
    if (j.contains("rank") || j.contains("c1") || j.contains("c2")) {
        ChernData c{int_from_json(require_field(j, "rank")),
                    ns_class_from_json(require_field(j, "c1"), L.rank()),
                    int_from_json(require_field(j, "c2"))};
        if (c.rank < 0) throw ValidationError("Chern rank must be non-negative");
        return from_chern(L, c);
    }
    return {int_from_json(require_field(j, "r")),
            ns_class_from_json(require_field(j, "l"), L.rank()),
            int_from_json(require_field(j, "s"))};
}

json mukai_vector_to_json(const MukaiVector& v) {
    return json{{"r", int_to_json(v.r)}, {"l", ns_class_to_json(v.l)}, {"s", int_to_json(v.s)}};
}

namespace {

// Rational Mukai-vector-shaped triple.
struct RatTriple {
    Rat r;
    std::vector<Rat> l;
    Rat s;
};

RatTriple rat_triple_from_json(const IntersectionLattice& L, const json& j) {
    RatTriple t;
    t.r = rat_from_json(require_field(j, "r"));
    QClass l = q_class_from_json(require_field(j, "l"), L.rank());
    t.l = l.coords();
    t.s = rat_from_json(require_field(j, "s"));
    return t;
}

} // namespace

MukaiVectorC complex_class_from_json(const IntersectionLattice& L, const json& j) {
    RatTriple re = rat_triple_from_json(L, require_field(j, "re"));
    RatTriple im = rat_triple_from_json(L, require_field(j, "im"));
    MukaiVectorC w;
    w.r = CRat(re.r, im.r);
    for (std::size_t i = 0; i < L.rank(); ++i) w.l.emplace_back(re.l[i], im.l[i]);
    w.s = CRat(re.s, im.s);
    return w;
}

json complex_class_to_json(const MukaiVectorC& w) {
    json re_l = json::array(), im_l = json::array();
    for (const CRat& x : w.l) {
        re_l.push_back(rat_to_json(x.re));
        im_l.push_back(rat_to_json(x.im));
    }
    return json{{"re", json{{"r", rat_to_json(w.r.re)}, {"l", std::move(re_l)}, {"s", rat_to_json(w.s.re)}}},
                {"im", json{{"r", rat_to_json(w.r.im)}, {"l", std::move(im_l)}, {"s", rat_to_json(w.s.im)}}}};
}

FormalSheaf formal_sheaf_from_json(const IntersectionLattice& L, const json& j) {
    if (!j.is_object()) throw ValidationError("expected a formal sheaf object");
    FormalSheaf F;
    if (j.contains("torsion") && !j["torsion"].is_null()) {
        const json& jt = j["torsion"];
        TorsionPart t;
        t.degree = jt.contains("degree") ? ns_class_from_json(jt["degree"], L.rank())
                                         : NSClass::zero(L.rank());
        t.points = jt.contains("points") ? int_from_json(jt["points"]) : Int(0);
        if (t.points < 0) throw ValidationError("torsion point length must be non-negative");
        F.torsion = std::move(t);
    }
    if (j.contains("factors")) {
        if (!j["factors"].is_array()) throw ValidationError("factors must be an array");
        for (const json& jf : j["factors"]) {
            SheafFactor f{int_from_json(require_field(jf, "rank")),
                          ns_class_from_json(require_field(jf, "c1"), L.rank())};
            if (f.rank <= 0) throw ValidationError("factor rank must be positive");
            F.factors.push_back(std::move(f));
        }
    }
    return F;
}

json formal_sheaf_to_json(const FormalSheaf& F) {
    json j;
    if (F.torsion)
        j["torsion"] = json{{"degree", ns_class_to_json(F.torsion->degree)},
                            {"points", int_to_json(F.torsion->points)}};
    else
        j["torsion"] = nullptr;
    json factors = json::array();
    for (const SheafFactor& f : F.factors)
        factors.push_back(json{{"rank", int_to_json(f.rank)}, {"c1", ns_class_to_json(f.c1)}});
    j["factors"] = std::move(factors);
    return j;
}

NumericalComplex numerical_complex_from_json(const IntersectionLattice& L, const json& j) {
    NumericalComplex X;
    if (j.contains("h_minus1") && !j["h_minus1"].is_null())
        X.h_minus1 = formal_sheaf_from_json(L, j["h_minus1"]);
    if (j.contains("h0") && !j["h0"].is_null()) X.h0 = formal_sheaf_from_json(L, j["h0"]);
    if (X.h_minus1.torsion) throw ValidationError("degree -1 cohomology must be torsion-free");
    return X;
}

json isometry_to_json(const MukaiIsometry& m) {
    const IntMatrix& mat = m.matrix();
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(int_to_json(mat.at(i, k)));
        rows.push_back(std::move(row));
    }
    return json{{"size", mat.rows()}, {"matrix", std::move(rows)}, {"mukai_isometry", true}};
}

MukaiIsometry isometry_from_json(const IntersectionLattice& L, const json& j) {
    if (!require_field(j, "mukai_isometry").get<bool>())
        throw ValidationError("matrix is not stamped as a Mukai isometry");
    const json& jm = require_field(j, "matrix");
    const std::size_t n = L.rank() + 2;
    if (!jm.is_array() || jm.size() != n) throw ValidationError("isometry matrix has wrong size");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!jm[i].is_array() || jm[i].size() != n)
            throw ValidationError("isometry matrix row has wrong length");
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = int_from_json(jm[i][k]);
    }
    return MukaiIsometry::from_matrix(L, std::move(m));
}

json fine_moduli_report_to_json(const FineModuliReport& rep) {
    return json{{"passes", rep.passes()},
                {"decomposition_found", rep.decomposition_found},
                {"gcd_one", rep.gcd_one},
                {"square_matches", rep.square_matches},
                {"a", int_to_json(rep.a)},
                {"ell", ns_class_to_json(rep.ell)},
                {"ell_dot_ample", int_to_json(rep.ell_dot_ample)}};
}

json reduction_to_json(const IntersectionLattice& L, const ReductionResult& red) {
    json trace = json::array();
    for (const TraceStep& step : red.trace) {
        switch (step.kind) {
            case TraceStep::Kind::line_twist:
                trace.push_back(json{{"op", "line_twist"}, {"c", ns_class_to_json(step.c)}});
                break;
            case TraceStep::Kind::spherical_twist:
                trace.push_back(json{{"op", "spherical_twist"}});
                break;
            case TraceStep::Kind::negate:
                trace.push_back(json{{"op", "negate"}});
                break;
        }
    }
    return json{{"v_star", mukai_vector_to_json(red.v_star)},
                {"trace", std::move(trace)},
                {"composite", isometry_to_json(red.composite(L))},
                {"note", red.note}};
}

json exponential_form_to_json(const ExponentialForm& f) {
    return json{{"lambda", rat_to_json(f.lambda)},
                {"B", q_class_to_json(f.B)},
                {"omega", q_class_to_json(f.omega)}};
}

json extension_solution_to_json(const ExtensionProblem& p, const ExtensionSolution& sol) {
    Rat left = (p.l + sol.l_prime) / Rat(p.r + sol.r_prime);
    Rat right = sol.l_prime / Rat(sol.r_prime);
    json j{{"l_prime", rat_to_json(sol.l_prime)},
           {"r_prime", int_to_json(sol.r_prime)},
           {"e_min", rat_to_json(sol.e_min)},
           {"power", int_to_json(sol.power)},
           {"ray_aligned", sol.ray_aligned},
           {"checks", json{{"ineq3", left <= p.beta && p.beta < right}}}};
    if (sol.s_min) j["s_min"] = int_to_json(*sol.s_min);
    return j;
}

json partner_classes_to_json(const Rank1Surface& X, const std::vector<PartnerClass>& classes) {
    json jclasses = json::array();
    for (const PartnerClass& cls : classes) {
        json pair = json::array();
        pair.push_back(json{{"r", int_to_json(cls.first.r)}, {"s", int_to_json(cls.first.s)}});
        pair.push_back(json{{"r", int_to_json(cls.second.r)}, {"s", int_to_json(cls.second.s)}});
        jclasses.push_back(std::move(pair));
    }
    const std::size_t count = jclasses.size();
    return json{{"n", int_to_json(X.n)},
                {"generator_square", int_to_json(2 * X.n)},
                {"classes", std::move(jclasses)},
                {"count", count}};
}

json scan_hits_to_json(const std::vector<ScanHit>& hits, bool approx) {
    json arr = json::array();
    for (const ScanHit& h : hits) {
        json e{{"v", mukai_vector_to_json(h.v)}, {"re", rat_to_json(h.re)}, {"im", "0"}};
        if (approx) e["re_approx"] = to_double(h.re);
        arr.push_back(std::move(e));
    }
    const std::size_t count = arr.size();
    return json{{"violations", std::move(arr)}, {"count", count}};
}

} // namespace mukai
