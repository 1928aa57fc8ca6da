#pragma once

#include "vee/arrangements.hpp"
#include "vee/covector.hpp"
#include "vee/flatsections.hpp"
#include "vee/matrix.hpp"
#include "vee/multipoly.hpp"
#include "vee/potentials.hpp"
#include "vee/veecheck.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace vee {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// Canonical term list: [{"exponents": [...], "coeff": "p/q"}, ...] in graded
// lex descending order.
Json poly_terms_to_json(const MultiPoly& p);
MultiPoly poly_from_terms_json(const VarsPtr& vars, const Json& terms);

Json matrix_to_json(const RatMatrix& m);

Json system_to_json(const CovectorSystem& sys);

struct LoadedSystem {
    CovectorSystem system;
    std::vector<std::string> normalizations; // what the loader had to fix
};

LoadedSystem system_from_json(const Json& j);

Json vee_report_to_json(const VeeReport& rep);
Json holonomy_report_to_json(const HolonomyReport& rep);
Json flat_basis_to_json(const FlatBasis& fb, const VarsPtr& vars);
Json harmonic_result_to_json(const HarmonicResult& hr, const VarsPtr& vars);
Json quasi_to_json(const QuasiInvariantBasis& q, const VarsPtr& vars);
Json lattice_to_json(const IntersectionLattice& lat);
Json certificate_to_json(const FreenessCertificate& cert);
Json potential_set_to_json(const PotentialSet& ps);
Json field_to_json(const PolyVectorField& f);
PolyVectorField field_from_json(const VarsPtr& vars, const Json& j);

} // namespace vee
