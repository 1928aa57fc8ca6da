// Command-line front end: every subcommand emits one Report JSON object on
// stdout and exits 0 (verdict pass), 1 (verdict fail) or 2 (input error).

#include "vee/arrangements.hpp"
#include "vee/corpus.hpp"
#include "vee/errors.hpp"
#include "vee/families.hpp"
#include "vee/flatsections.hpp"
#include "vee/json_io.hpp"
#include "vee/potentials.hpp"
#include "vee/veecheck.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using vee::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct Outcome {
    std::string verdict; // pass | fail
    Json payload;
};

int emit(const std::string& command, const std::string& digest, const std::string& anchor,
         const Outcome& outcome) {
    Json report;
    report["command"] = command;
    report["input_digest"] = digest;
    report["verdict"] = outcome.verdict;
    report["payload"] = outcome.payload;
    report["paper_anchor"] = anchor;
    std::cout << report.dump(2) << "\n";
    return outcome.verdict == "pass" ? kExitPass : kExitFail;
}

vee::LoadedSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw vee::InputError("cannot open '" + path + "'");
    Json j = Json::parse(in);
    return vee::system_from_json(j);
}

std::string system_digest(const vee::CovectorSystem& sys) {
    return fnv1a_digest(vee::system_to_json(sys).dump());
}

Json degenerate_payload(const vee::DegenerateFormError& e) {
    Json j;
    j["degenerate_canonical_form"] = true;
    Json kernel = Json::array();
    for (const auto& v : e.kernel()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.str());
        kernel.push_back(std::move(row));
    }
    j["kernel_basis"] = std::move(kernel);
    j["message"] = e.what();
    return j;
}

std::map<std::string, vee::Rational> parse_params(const std::string& spec) {
    std::map<std::string, vee::Rational> params;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw vee::ParamError("parameter '" + item + "' is not of the form key=value");
        params[item.substr(0, eq)] = vee::Rational::parse(item.substr(eq + 1));
    }
    return params;
}

std::vector<vee::Rational> c_vector(const std::map<std::string, vee::Rational>& params) {
    std::vector<vee::Rational> c;
    for (int i = 0;; ++i) {
        auto it = params.find("c" + std::to_string(i));
        if (it == params.end()) break;
        c.push_back(it->second);
    }
    if (c.empty()) throw vee::ParamError("missing parameters c0..cn");
    return c;
}

vee::Rational need_param(const std::map<std::string, vee::Rational>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw vee::ParamError("missing parameter '" + key + "'");
    return it->second;
}

int need_int_param(const std::map<std::string, vee::Rational>& params, const std::string& key) {
    vee::Rational r = need_param(params, key);
    if (!r.is_integer()) throw vee::ParamError("parameter '" + key + "' must be an integer");
    return static_cast<int>(r.num().get_si());
}

std::string params_digest(const std::string& family, const std::map<std::string, vee::Rational>& params) {
    std::ostringstream os;
    os << family;
    for (const auto& [k, v] : params) os << ";" << k << "=" << v.str();
    return fnv1a_digest(os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of covector systems, flat sections and arrangement freeness"};
    app.require_subcommand(1);

    std::string file, params_spec, fields_file, corpus_dir = "corpus", only;
    if (const char* env = std::getenv("VEE_CORPUS")) corpus_dir = env;
    int kappa = 1, degree = 0;
    std::optional<std::size_t> index;
    std::size_t hyperplane = 0;
    bool bare = false;

    auto* check = app.add_subcommand("check", "plane-wise conditions on a covector system");
    check->add_option("file", file)->required();

    auto* canonical = app.add_subcommand("canonical", "canonical symmetric form and its rank");
    canonical->add_option("file", file)->required();

    auto* dual = app.add_subcommand("dual", "inverse-form images of the covector directions");
    dual->add_option("file", file)->required();
    std::size_t dual_index = 0;
    auto* dual_index_opt = dual->add_option("--index", dual_index, "restrict to one covector");

    auto* holonomy = app.add_subcommand("holonomy", "plane-wise centralizer relations of the induced representation");
    holonomy->add_option("file", file)->required();

    auto* components = app.add_subcommand("components", "direct-sum decomposition of the configuration");
    components->add_option("file", file)->required();

    auto* flat = app.add_subcommand("flat", "polynomial flat sections at a fixed degree");
    flat->add_option("file", file)->required();
    flat->add_option("--kappa", kappa, "section degree")->required();

    auto* harmonic = app.add_subcommand("harmonic", "search for a full flat basis with degrees summing to the covector count");
    harmonic->add_option("file", file)->required();

    auto* quasi = app.add_subcommand("quasi", "quasi-invariants of a fixed degree");
    quasi->add_option("file", file)->required();
    quasi->add_option("--degree", degree, "polynomial degree")->required();

    auto* potentials = app.add_subcommand("potentials", "closed-form potentials of the classical families");
    std::string pot_family;
    potentials->add_option("family", pot_family, "an | bn | f4 | zaslavsky | dihedral-b2")->required();
    potentials->add_option("--params", params_spec, "comma-separated key=value rational parameters")->required();

    auto* family = app.add_subcommand("family", "instantiate a named configuration");
    std::string family_name;
    family->add_option("name", family_name)->required();
    family->add_option("--params", params_spec, "comma-separated key=value rational parameters")->required();
    family->add_flag("--bare", bare, "emit the bare system JSON instead of a report");

    auto* arr = app.add_subcommand("arr", "arrangement-level computations");
    arr->require_subcommand(1);
    auto* arr_lattice = arr->add_subcommand("lattice", "intersection lattice with Moebius values");
    arr_lattice->add_option("file", file)->required();
    auto* arr_poincare = arr->add_subcommand("poincare", "Poincare polynomial of the complement");
    arr_poincare->add_option("file", file)->required();
    auto* arr_factor = arr->add_subcommand("factor", "factor the Poincare polynomial over 1 + b t");
    arr_factor->add_option("file", file)->required();
    auto* arr_restrict = arr->add_subcommand("restrict", "restrict the arrangement to one hyperplane");
    arr_restrict->add_option("file", file)->required();
    arr_restrict->add_option("--hyperplane", hyperplane, "covector index")->required();
    auto* arr_saito = arr->add_subcommand("saito", "freeness certificate from candidate fields");
    arr_saito->add_option("file", file)->required();
    arr_saito->add_option("--fields", fields_file, "JSON with candidate vector fields")->required();

    auto* corpus = app.add_subcommand("corpus", "run the bundled verification corpus");
    corpus->add_option("--corpus", corpus_dir, "corpus directory (default: $VEE_CORPUS or ./corpus)");
    corpus->add_option("--only", only, "filter entries by substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) {
            auto loaded = load_system(file);
            std::string digest = system_digest(loaded.system);
            Outcome out;
            try {
                vee::VeeReport rep = vee::vee_check(loaded.system);
                out.verdict = rep.is_vee_system ? "pass" : "fail";
                out.payload = vee::vee_report_to_json(rep);
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            if (!loaded.normalizations.empty()) out.payload["input_normalizations"] = loaded.normalizations;
            return emit("check", digest, "vee-conditions", out);
        }
        if (canonical->parsed()) {
            auto loaded = load_system(file);
            vee::RatMatrix g = vee::canonical_form(loaded.system);
            Outcome out;
            out.verdict = "pass";
            out.payload["canonical_form"] = vee::matrix_to_json(g);
            out.payload["rank"] = vee::rank(g);
            return emit("canonical", system_digest(loaded.system), "canonical-form", out);
        }
        if (dual->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            try {
                Json duals = Json::array();
                if (dual_index_opt->count()) {
                    Json row = Json::array();
                    for (const auto& x : vee::vee_dual(loaded.system, dual_index)) row.push_back(x.str());
                    duals.push_back(std::move(row));
                } else {
                    for (const auto& d : vee::vee_duals(loaded.system)) {
                        Json row = Json::array();
                        for (const auto& x : d) row.push_back(x.str());
                        duals.push_back(std::move(row));
                    }
                }
                out.verdict = "pass";
                out.payload["duals"] = std::move(duals);
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            return emit("dual", system_digest(loaded.system), "vee-dual", out);
        }
        if (holonomy->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            try {
                vee::HolonomyReport rep = vee::holonomy_check(loaded.system);
                out.verdict = rep.passes ? "pass" : "fail";
                out.payload = vee::holonomy_report_to_json(rep);
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            return emit("holonomy", system_digest(loaded.system), "holonomy-representation", out);
        }
        if (components->parsed()) {
            auto loaded = load_system(file);
            auto comps = vee::irreducible_components(loaded.system);
            Outcome out;
            out.verdict = "pass";
            Json arrj = Json::array();
            for (const auto& c : comps) arrj.push_back(vee::system_to_json(c));
            out.payload["components"] = std::move(arrj);
            out.payload["count"] = comps.size();
            return emit("components", system_digest(loaded.system), "irreducible-components", out);
        }
        if (flat->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            try {
                vee::FlatBasis fb = vee::flat_solve(loaded.system, kappa);
                out.verdict = "pass";
                out.payload = vee::flat_basis_to_json(fb, vee::ambient_vars(loaded.system));
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            return emit("flat", system_digest(loaded.system), "flat-sections", out);
        }
        if (harmonic->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            try {
                vee::HarmonicResult hr = vee::harmonic_test(loaded.system);
                out.verdict = hr.is_harmonic ? "pass" : "fail";
                out.payload = vee::harmonic_result_to_json(hr, vee::ambient_vars(loaded.system));
                if (!hr.is_harmonic) {
                    // quasi-invariant dimensions beside the flat table, as the
                    // finer obstruction witness
                    Json qdims = Json::object();
                    int maxdeg = static_cast<int>(loaded.system.size()) - loaded.system.dimension() + 2;
                    for (int d = 2; d <= maxdeg; ++d)
                        qdims["deg" + std::to_string(d)] = vee::quasi_invariant_dim(loaded.system, d).dim;
                    out.payload["quasi_invariant_dims"] = std::move(qdims);
                }
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            return emit("harmonic", system_digest(loaded.system), "harmonic-flat-basis", out);
        }
        if (quasi->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            try {
                vee::QuasiInvariantBasis q = vee::quasi_invariant_dim(loaded.system, degree);
                out.verdict = "pass";
                out.payload = vee::quasi_to_json(q, vee::ambient_vars(loaded.system));
            } catch (const vee::DegenerateFormError& e) {
                out.verdict = "fail";
                out.payload = degenerate_payload(e);
            }
            return emit("quasi", system_digest(loaded.system), "quasi-invariants", out);
        }
        if (potentials->parsed()) {
            auto params = parse_params(params_spec);
            Outcome out;
            out.verdict = "pass";
            vee::PotentialSet ps;
            if (pot_family == "an") {
                auto c = c_vector(params);
                ps.family = "an";
                for (int k = 1; k <= static_cast<int>(c.size()) - 1; ++k) {
                    ps.kappas.push_back(k);
                    ps.potentials.push_back(vee::potential_an(c, k));
                }
            } else if (pot_family == "bn") {
                auto c = c_vector(params);
                ps.family = "bn";
                for (int k = 1; k <= static_cast<int>(c.size()) - 1; ++k) {
                    ps.kappas.push_back(2 * k - 1);
                    ps.potentials.push_back(vee::potential_bn(c, k));
                }
            } else if (pot_family == "f4") {
                ps = vee::f4_potentials(need_param(params, "s"));
            } else if (pot_family == "zaslavsky") {
                int n = need_int_param(params, "n");
                int m = need_int_param(params, "m");
                ps.family = "zaslavsky";
                ps.kappas.push_back(n + m - 1);
                ps.potentials.push_back(vee::zaslavsky_potential(n, m));
            } else if (pot_family == "dihedral-b2" || pot_family == "dihedral_b2") {
                ps = vee::dihedral_b2_potentials(need_param(params, "a2"), need_param(params, "b2"));
            } else {
                throw vee::ParamError("unknown potentials family '" + pot_family + "'");
            }
            out.payload = vee::potential_set_to_json(ps);
            return emit("potentials", params_digest(pot_family, params), "closed-form-potentials", out);
        }
        if (family->parsed()) {
            auto params = parse_params(params_spec);
            vee::FamilySpec spec{vee::family_from_string(family_name), params};
            vee::CovectorSystem sys = vee::instantiate(spec);
            if (bare) {
                std::cout << vee::system_to_json(sys).dump(2) << "\n";
                return kExitPass;
            }
            Outcome out;
            out.verdict = "pass";
            out.payload = vee::system_to_json(sys);
            return emit("family", params_digest(family_name, params), "family-catalog", out);
        }
        if (arr_lattice->parsed()) {
            auto loaded = load_system(file);
            Outcome out;
            out.verdict = "pass";
            out.payload = vee::lattice_to_json(vee::intersection_lattice(loaded.system));
            return emit("arr lattice", system_digest(loaded.system), "intersection-lattice", out);
        }
        if (arr_poincare->parsed()) {
            auto loaded = load_system(file);
            vee::MultiPoly pi = vee::poincare_polynomial(vee::intersection_lattice(loaded.system));
            Outcome out;
            out.verdict = "pass";
            out.payload["poincare"] = vee::poly_terms_to_json(pi);
            return emit("arr poincare", system_digest(loaded.system), "poincare-polynomial", out);
        }
        if (arr_factor->parsed()) {
            auto loaded = load_system(file);
            vee::MultiPoly pi = vee::poincare_polynomial(vee::intersection_lattice(loaded.system));
            auto factors = vee::factorization_check(pi);
            Outcome out;
            out.payload["poincare"] = vee::poly_terms_to_json(pi);
            if (factors) {
                out.verdict = "pass";
                out.payload["factors"] = *factors;
            } else {
                out.verdict = "fail";
                out.payload["factors"] = nullptr;
                out.payload["reason"] = "no factorization over nonnegative integers";
            }
            return emit("arr factor", system_digest(loaded.system), "terao-factorization", out);
        }
        if (arr_restrict->parsed()) {
            auto loaded = load_system(file);
            vee::CovectorSystem restricted = vee::restrict_arrangement(loaded.system, hyperplane);
            Outcome out;
            out.verdict = "pass";
            out.payload = vee::system_to_json(restricted);
            return emit("arr restrict", system_digest(loaded.system), "arrangement-restriction", out);
        }
        if (arr_saito->parsed()) {
            auto loaded = load_system(file);
            std::ifstream fin(fields_file);
            if (!fin) throw vee::InputError("cannot open '" + fields_file + "'");
            Json fj = Json::parse(fin);
            vee::VarsPtr vars = vee::ambient_vars(loaded.system);
            std::vector<vee::PolyVectorField> fields;
            for (const auto& f : fj.at("fields")) fields.push_back(vee::field_from_json(vars, f));
            vee::FreenessCertificate cert = vee::saito_criterion(loaded.system, fields);
            Outcome out;
            out.verdict = cert.valid ? "pass" : "fail";
            out.payload = vee::certificate_to_json(cert);
            return emit("arr saito", system_digest(loaded.system), "saito-criterion", out);
        }
        if (corpus->parsed()) {
            vee::CorpusResult result = vee::corpus_run(corpus_dir, only);
            Outcome out;
            out.verdict = result.all_match ? "pass" : "fail";
            Json rows = Json::array();
            for (const auto& r : result.rows) {
                Json row;
                row["name"] = r.name;
                row["count"] = r.count;
                row["check"] = r.vee_status;
                row["exponents_or_poincare"] = r.exponents;
                row["matches"] = r.matches;
                if (!r.detail.empty()) row["detail"] = r.detail;
                rows.push_back(std::move(row));
            }
            out.payload["rows"] = std::move(rows);
            out.payload["table"] = result.table;
            out.payload["all_match"] = result.all_match;
            return emit("corpus", fnv1a_digest(corpus_dir + "|" + only), "corpus-verification", out);
        }
        std::cerr << "unknown command\n" << app.help() << "\n";
        return kExitError;
    } catch (const vee::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
