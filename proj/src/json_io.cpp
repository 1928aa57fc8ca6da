#include "vee/json_io.hpp"

#include "vee/errors.hpp"

#include <algorithm>
#include <sstream>

namespace vee {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("expected a rational as \"p/q\" string or integer");
}

Json poly_terms_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exponents"] = e;
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    return terms;
}

MultiPoly poly_from_terms_json(const VarsPtr& vars, const Json& terms) {
    if (!terms.is_array()) throw InputError("polynomial terms must be an array");
    MultiPoly p(vars);
    for (const auto& term : terms) {
        if (!term.contains("exponents") || !term.contains("coeff"))
            throw InputError("polynomial term needs 'exponents' and 'coeff'");
        MultiPoly::Exps e = term["exponents"].get<std::vector<int>>();
        p += MultiPoly::monomial(vars, std::move(e), rational_from_json(term["coeff"]));
    }
    return p;
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json system_to_json(const CovectorSystem& sys) {
    Json j;
    j["dimension"] = sys.dimension();
    if (!sys.name().empty()) j["name"] = sys.name();
    if (sys.arrangement_only()) j["arrangement_only"] = true;
    Json covs = Json::array();
    for (const auto& cv : sys.covectors()) {
        Json c;
        c["direction"] = cv.direction;
        c["weight"] = cv.weight.str();
        covs.push_back(std::move(c));
    }
    j["covectors"] = std::move(covs);
    return j;
}

LoadedSystem system_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("covectors"))
        throw InputError("system JSON needs 'dimension' and 'covectors'");
    int dim = j["dimension"].get<int>();
    std::string name = j.value("name", std::string{});
    bool arrangement_only = j.value("arrangement_only", false);
    std::vector<std::string> notes;
    std::vector<WeightedCovector> covs;
    std::size_t idx = 0;
    for (const auto& c : j["covectors"]) {
        if (!c.contains("direction") || !c.contains("weight"))
            throw InputError("covector JSON needs 'direction' and 'weight'");
        WeightedCovector cv;
        cv.direction = c["direction"].get<std::vector<long long>>();
        cv.weight = rational_from_json(c["weight"]);
        std::vector<long long> normalized = cv.direction;
        bool flipped = false;
        long long content = normalize_direction(normalized, &flipped);
        if (content == 0) throw InputError("zero covector direction at index " + std::to_string(idx));
        if (content != 1)
            throw InputError("covector direction at index " + std::to_string(idx) +
                             " is not primitive (content " + std::to_string(content) + ")");
        if (flipped) {
            notes.push_back("covector " + std::to_string(idx) + ": direction sign normalized");
            cv.direction = std::move(normalized);
        }
        covs.push_back(std::move(cv));
        ++idx;
    }
    // detect re-sorting for the load report
    std::vector<std::vector<long long>> order_before;
    for (const auto& cv : covs) order_before.push_back(cv.direction);
    CovectorSystem sys = CovectorSystem::make(dim, std::move(covs), std::move(name), arrangement_only);
    std::vector<std::vector<long long>> order_after;
    for (const auto& cv : sys.covectors()) order_after.push_back(cv.direction);
    if (order_before != order_after) notes.push_back("covectors re-sorted into canonical order");
    return LoadedSystem{std::move(sys), std::move(notes)};
}

Json vee_report_to_json(const VeeReport& rep) {
    Json j;
    j["is_vee_system"] = rep.is_vee_system;
    j["canonical_form"] = matrix_to_json(rep.canonical_form);
    Json planes = Json::array();
    for (const auto& p : rep.planes) {
        Json pj;
        pj["covectors"] = p.covector_indices;
        pj["kind"] = p.multi_covector ? "multi-covector" : "two-covector";
        if (p.nu) pj["nu"] = p.nu->str();
        pj["passed"] = p.passed;
        planes.push_back(std::move(pj));
    }
    j["planes"] = std::move(planes);
    j["failures"] = rep.failures;
    return j;
}

Json holonomy_report_to_json(const HolonomyReport& rep) {
    Json j;
    j["passes"] = rep.passes;
    Json fails = Json::array();
    for (const auto& [cov, plane] : rep.failing_planes) {
        Json f;
        f["covector"] = cov;
        f["plane"] = plane;
        fails.push_back(std::move(f));
    }
    j["failing_planes"] = std::move(fails);
    return j;
}

Json field_to_json(const PolyVectorField& f) {
    Json comps = Json::array();
    for (const auto& c : f.components) comps.push_back(poly_terms_to_json(c));
    return comps;
}

PolyVectorField field_from_json(const VarsPtr& vars, const Json& j) {
    if (!j.is_array()) throw InputError("vector field JSON must be an array of component term lists");
    PolyVectorField f;
    for (const auto& comp : j) f.components.push_back(poly_from_terms_json(vars, comp));
    return f;
}

Json flat_basis_to_json(const FlatBasis& fb, const VarsPtr& vars) {
    Json j;
    j["kappa"] = fb.kappa;
    j["variables"] = *vars;
    j["dimension_of_solution_space"] = fb.sections.size();
    Json sections = Json::array();
    for (const auto& s : fb.sections) sections.push_back(field_to_json(s));
    j["sections"] = std::move(sections);
    Json pots = Json::array();
    for (const auto& p : fb.potentials) pots.push_back(poly_terms_to_json(p));
    j["potentials"] = std::move(pots);
    return j;
}

Json harmonic_result_to_json(const HarmonicResult& hr, const VarsPtr& vars) {
    Json j;
    j["is_harmonic"] = hr.is_harmonic;
    j["degrees"] = hr.degrees;
    Json table = Json::object();
    for (const auto& [kappa, dim] : hr.dimension_table) table[std::to_string(kappa)] = dim;
    j["dimension_table"] = std::move(table);
    j["search_exhausted"] = hr.search_exhausted;
    if (hr.is_harmonic) {
        j["variables"] = *vars;
        Json sections = Json::array();
        for (const auto& s : hr.sections) sections.push_back(field_to_json(s));
        j["sections"] = std::move(sections);
        Json pots = Json::array();
        for (const auto& p : hr.potentials) pots.push_back(poly_terms_to_json(p));
        j["potentials"] = std::move(pots);
    }
    return j;
}

Json quasi_to_json(const QuasiInvariantBasis& q, const VarsPtr& vars) {
    Json j;
    j["dim"] = q.dim;
    j["variables"] = *vars;
    Json basis = Json::array();
    for (const auto& p : q.basis) basis.push_back(poly_terms_to_json(p));
    j["basis"] = std::move(basis);
    return j;
}

Json lattice_to_json(const IntersectionLattice& lat) {
    Json j;
    j["dimension"] = lat.dimension;
    Json elems = Json::array();
    for (const auto& e : lat.elements) {
        Json ej;
        ej["codim"] = e.codim;
        Json rows = Json::array();
        for (const auto& row : e.rows) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(x.str());
            rows.push_back(std::move(r));
        }
        ej["rows"] = std::move(rows);
        ej["mobius"] = e.mobius;
        elems.push_back(std::move(ej));
    }
    j["elements"] = std::move(elems);
    return j;
}

Json certificate_to_json(const FreenessCertificate& cert) {
    Json j;
    j["valid"] = cert.valid;
    j["degrees"] = cert.degrees;
    j["det_ratio"] = cert.det_ratio.str();
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    return j;
}

Json potential_set_to_json(const PotentialSet& ps) {
    Json j;
    j["family"] = ps.family;
    Json pots = Json::array();
    for (std::size_t i = 0; i < ps.potentials.size(); ++i) {
        Json pj;
        pj["kappa"] = ps.kappas[i];
        pj["degree"] = ps.potentials[i].total_degree();
        pj["terms"] = poly_terms_to_json(ps.potentials[i]);
        pots.push_back(std::move(pj));
    }
    j["potentials"] = std::move(pots);
    return j;
}

} // namespace vee
