#pragma once

#include <json.hpp>

#include <string>

#include "mukai/construct.hpp"
#include "mukai/isometry.hpp"
#include "mukai/partners.hpp"
#include "mukai/stability.hpp"

namespace mukai {

using json = nlohmann::json;

// Conventions: integers are emitted as JSON numbers when they fit in 64 bits
// and as decimal strings otherwise; rationals are always canonical "p/q"
// strings ("p" when the denominator is 1). Inputs accept numbers or strings
// everywhere. nlohmann objects keep keys sorted, so dumps are deterministic.

json int_to_json(const Int& x);
Int int_from_json(const json& j);
json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json ns_class_to_json(const NSClass& x);
NSClass ns_class_from_json(const json& j, std::size_t rank);
json q_class_to_json(const QClass& x);
QClass q_class_from_json(const json& j, std::size_t rank);

/// {"rank": n, "gram": [[...]], "ample": [...]} with integer entries.
IntersectionLattice lattice_from_json(const json& j);
json lattice_to_json(const IntersectionLattice& L);
IntersectionLattice load_lattice_file(const std::string& path);

/// {"r": int, "l": [ints], "s": int}. Also accepts Chern data
/// {"rank": int, "c1": [ints], "c2": int}, converted via from_chern.
MukaiVector mukai_vector_from_json(const IntersectionLattice& L, const json& j);
json mukai_vector_to_json(const MukaiVector& v);

/// {"re": {mukai vector of rationals}, "im": {...}}.
MukaiVectorC complex_class_from_json(const IntersectionLattice& L, const json& j);
json complex_class_to_json(const MukaiVectorC& w);

/// {"torsion": null | {"degree": [...], "points": n},
///  "factors": [{"rank": n, "c1": [...]}, ...]}
FormalSheaf formal_sheaf_from_json(const IntersectionLattice& L, const json& j);
json formal_sheaf_to_json(const FormalSheaf& F);

/// {"h_minus1": formal sheaf | null, "h0": formal sheaf | null}
NumericalComplex numerical_complex_from_json(const IntersectionLattice& L, const json& j);

/// Integer matrix with a validity stamp:
/// {"size": n, "matrix": [[...]], "mukai_isometry": true}.
json isometry_to_json(const MukaiIsometry& m);
MukaiIsometry isometry_from_json(const IntersectionLattice& L, const json& j);

json fine_moduli_report_to_json(const FineModuliReport& rep);
json reduction_to_json(const IntersectionLattice& L, const ReductionResult& red);
json exponential_form_to_json(const ExponentialForm& f);
json extension_solution_to_json(const ExtensionProblem& p, const ExtensionSolution& sol);
json partner_classes_to_json(const Rank1Surface& X, const std::vector<PartnerClass>& classes);
json scan_hits_to_json(const std::vector<ScanHit>& hits, bool approx);

} // namespace mukai
