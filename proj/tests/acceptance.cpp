// Acceptance suite: one line per criterion, exact checks throughout.
// Usage: acceptance [--corpus DIR] [--skip-slow]

#include "vee/arrangements.hpp"
#include "vee/corpus.hpp"
#include "vee/errors.hpp"
#include "vee/families.hpp"
#include "vee/flatsections.hpp"
#include "vee/json_io.hpp"
#include "vee/potentials.hpp"
#include "vee/veecheck.hpp"

#include "helpers.hpp"

#include <chrono>
#include <cstring>
#include <iomanip>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace vee;
using vee::test::proportional;
using vee::test::Rng;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<void(std::ostream&)> run; // throws on failure
};

struct FailedCriterion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw FailedCriterion(what);
}

std::vector<Rational> rat(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (auto x : xs) out.push_back(Rational(x));
    return out;
}

// ---- criterion 1 -------------------------------------------------------

void criterion1(std::ostream& log) {
    std::vector<CovectorSystem> systems;
    // at least three parameter points per family, all within valid ranges
    systems.push_back(instantiate_an(rat({1, 1, 1})));
    systems.push_back(instantiate_an(rat({1, 2, 3, 4})));
    systems.push_back(instantiate_an({Rational(1), Rational(1, 2), Rational(3), Rational(-1), Rational(2)}));
    systems.push_back(instantiate_an(rat({2, 1, 1, 1, 1})));
    systems.push_back(instantiate_bn(rat({1, 1, 2})));
    systems.push_back(instantiate_bn(rat({0, 1, 1, 1})));
    systems.push_back(instantiate_bn(rat({-1, 1, 1, 3})));
    systems.push_back(instantiate_bn(rat({1, 1, 1, 1, 1})));
    systems.push_back(instantiate_bn({Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(5)}));
    systems.push_back(instantiate_f4(Rational(1)));
    systems.push_back(instantiate_f4(Rational(1, 2)));
    systems.push_back(instantiate_f4(Rational(2)));
    systems.push_back(instantiate_f3(Rational(1)));
    systems.push_back(instantiate_f3(Rational(2)));
    systems.push_back(instantiate_f3(Rational(3)));
    systems.push_back(instantiate_g3(Rational(1)));
    systems.push_back(instantiate_g3(Rational(2)));
    systems.push_back(instantiate_g3(Rational(1, 2)));
    systems.push_back(instantiate_d3(Rational(1), Rational(1)));
    systems.push_back(instantiate_d3(Rational(3, 2), Rational(3, 2)));
    systems.push_back(instantiate_d3(Rational(2), Rational(5)));
    systems.push_back(instantiate_ab4(Rational(1)));
    systems.push_back(instantiate_ab4(Rational(2)));
    systems.push_back(instantiate_ab4(Rational(1, 3)));
    systems.push_back(instantiate_ab4_a1_1(Rational(1)));
    systems.push_back(instantiate_ab4_a1_1(Rational(2)));
    systems.push_back(instantiate_ab4_a1_1(Rational(1, 2)));
    systems.push_back(instantiate_ab4_a1_2(Rational(1)));
    systems.push_back(instantiate_ab4_a1_2(Rational(2)));
    systems.push_back(instantiate_ab4_a1_2(Rational(3)));
    systems.push_back(instantiate_dihedral_b2(Rational(1), Rational(1)));
    systems.push_back(instantiate_dihedral_b2(Rational(1), Rational(2)));
    systems.push_back(instantiate_dihedral_b2(Rational(2), Rational(3)));

    for (const auto& sys : systems) {
        require(vee_check(sys).is_vee_system, sys.name() + " fails the plane-wise conditions");
        require(holonomy_check(sys).passes, sys.name() + " fails the holonomy relations");
    }
    log << systems.size() << " instantiations pass both checks; ";

    // 100 random weight perturbations: the two checks must agree exactly
    Rng rng(0x5eed0001);
    int agreements = 0;
    std::size_t base_idx = 0;
    while (agreements < 100) {
        const auto& base = systems[base_idx++ % systems.size()];
        std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(base.size()) - 1));
        auto sys = base.with_weight(i, base.covectors()[i].weight * rng.nonzero_rational());
        try {
            bool v = vee_check(sys).is_vee_system;
            bool h = holonomy_check(sys).passes;
            require(v == h, "holonomy/vee disagree on a perturbation of " + base.name());
            ++agreements;
        } catch (const DegenerateFormError&) {
            // both operations reject identically; not a comparison point
        }
    }
    log << "100 perturbed systems agree";
}

// ---- criterion 2 -------------------------------------------------------

void criterion2(std::ostream& log) {
    auto a3 = instantiate_an(rat({1, 1, 1, 1}));
    int degree_sum = 0;
    for (int kappa = 1; kappa <= 3; ++kappa) {
        FlatBasis fb = flat_solve(a3, kappa);
        require(!fb.sections.empty(), "no flat section at kappa " + std::to_string(kappa));
        degree_sum += kappa * static_cast<int>(fb.sections.size());
        QuasiInvariantBasis quasi = quasi_invariant_dim(a3, kappa + 1);
        auto basis = homogeneous_exponents(3, kappa + 1);
        RatMatrix qm = vee::test::coeff_matrix(quasi.basis, basis);
        for (std::size_t i = 0; i < fb.sections.size(); ++i) {
            SectionProperties props = section_properties(a3, fb.sections[i]);
            require(props.is_gradient, "flat section is not gradient");
            require(props.is_logarithmic, "flat section is not logarithmic");
            require(props.degree && *props.degree == kappa, "flat section degree mismatch");
            std::vector<MultiPoly> joined = quasi.basis;
            joined.push_back(fb.potentials[i]);
            require(rank(vee::test::coeff_matrix(joined, basis)) == rank(qm),
                    "potential is not a quasi-invariant");
        }
    }
    require(degree_sum == static_cast<int>(a3.size()), "flat degrees do not sum to the covector count");
    log << "flat degrees 1,2,3 sum to 6 with gradient/logarithmic/quasi-invariant sections";
}

// ---- criterion 3 -------------------------------------------------------

void criterion3(std::ostream& log) {
    auto sys = instantiate_bn(rat({-1, 1, 1, 3}));
    require(quasi_invariant_dim(sys, 3).dim == 0, "expected no quasi-invariants of degree 3");
    require(quasi_invariant_dim(sys, 4).dim == 2, "expected a 2-dimensional degree-4 space");
    HarmonicResult hr = harmonic_test(sys);
    require(!hr.is_harmonic, "system must not be harmonic");
    require(hr.search_exhausted, "certificate must be exhaustive");
    require(!hr.dimension_table.empty(), "certificate table missing");
    MultiPoly pi = poincare_polynomial(intersection_lattice(sys));
    VarsPtr t = make_vars({"t"});
    MultiPoly expected = MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(7)) +
                         MultiPoly::monomial(t, {2}, Rational(15)) + MultiPoly::monomial(t, {3}, Rational(9));
    require(pi == expected, "Poincare polynomial differs from (1+t)(1+3t)^2");
    log << "quasi-invariant dims 0 and 2, non-harmonic with exhaustive table, Poincare (1+t)(1+3t)^2";
}

// ---- criterion 4 -------------------------------------------------------

void criterion4(std::ostream& log) {
    auto sys = instantiate_f3(Rational(-1, 2));
    require(canonical_form(sys).is_zero(), "canonical form must vanish");
    auto wd = well_distributed_check(sys, RatMatrix::identity(3));
    require(wd.proportional && wd.mu && wd.mu->is_zero(), "proportionality scalar must be 0");
    MultiPoly pi = poincare_polynomial(intersection_lattice(sys));
    VarsPtr t = make_vars({"t"});
    MultiPoly expected = MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(10)) +
                         MultiPoly::monomial(t, {2}, Rational(35)) + MultiPoly::monomial(t, {3}, Rational(26));
    require(pi == expected, "Poincare polynomial differs from 1+10t+35t^2+26t^3");
    require(!factorization_check(pi).has_value(), "Poincare polynomial unexpectedly factors");
    log << "zero form, mu = 0, Poincare 1+10t+35t^2+26t^3 not factorizable";
}

// ---- criterion 5 -------------------------------------------------------

void criterion5(std::ostream& log) {
    Rng rng(0x5eed0005);
    int checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> c;
            Rational sigma(0);
            do {
                c.clear();
                sigma = Rational(0);
                for (int i = 0; i <= n; ++i) {
                    c.push_back(rng.nonzero_rational(-4, 6, 3));
                    sigma += c.back();
                }
            } while (sigma.is_zero());
            for (int kappa = 1; kappa <= n; ++kappa) {
                MultiPoly f = potential_an(c, kappa);
                require(f == potential_an_partition(c, kappa), "determinant and partition forms differ");
                require(f == series_oracle_an(c, kappa), "determinant and series forms differ");
            }
            auto sys = instantiate_an(c);
            for (int kappa = 1; kappa <= n; ++kappa) {
                MultiPoly reduced =
                    reduce_to_subspace_an(potential_an(c, kappa), c).rename(ambient_vars(sys));
                require(epd_check(sys, reduced, kappa), "reduced potential fails the flat equations");
            }
            ++checked;
        }
    }
    require(checked == 20, "expected 20 parameter draws");
    require(jacobian_identity_check(rat({1, 2})), "jacobian identity n=1");
    require(jacobian_identity_check(rat({1, 2, 3})), "jacobian identity n=2");
    require(jacobian_identity_check(rat({1, 2, 3, 5})), "jacobian identity n=3");
    require(jacobian_identity_check({Rational(1), Rational(-2), Rational(1, 3), Rational(5)}),
            "jacobian identity n=3 with mixed signs");
    log << "20 draws: all three closed forms agree and reduce onto the flat equations; jacobian identity exact for n <= 3";
}

// ---- criterion 6 -------------------------------------------------------

void criterion6(std::ostream& log) {
    Rng rng(0x5eed0006);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<Rational> c;
            Rational sigma(0);
            do {
                c.clear();
                c.push_back(rng.rational(-2, 3, 2));
                sigma = c[0];
                for (int i = 1; i <= n; ++i) {
                    c.push_back(rng.nonzero_rational(1, 5, 2));
                    sigma += c.back();
                }
            } while (sigma.is_zero() || (c[1] + c[0]).is_zero());
            auto sys = instantiate_bn(c);
            for (int k = 1; k <= n; ++k) {
                MultiPoly f = potential_bn(c, k).rename(ambient_vars(sys));
                require(epd_check(sys, f, 2 * k - 1),
                        "potential_bn fails the flat equations at kappa " + std::to_string(2 * k - 1));
            }
        }
    }
    // classical residue comparison at c0 = 0, c_i = 1
    for (int n = 2; n <= 3; ++n) {
        std::vector<Rational> c(n + 1, Rational(1));
        c[0] = Rational(0);
        for (int k = 1; k <= n; ++k) {
            MultiPoly f = potential_bn(c, k);
            VarsPtr vars = f.vars();
            Rational lam(2 * k - 1, 2 * n);
            // coefficient of u^k in prod_i (1 - x_i^2 u)^lam via the
            // generalized binomial series
            std::vector<std::vector<Rational>> binom(n + 1, std::vector<Rational>(k + 1));
            std::vector<MultiPoly> series;
            for (int i = 0; i < n; ++i) {
                MultiPoly dummy(vars);
                series.push_back(dummy);
            }
            std::vector<std::vector<MultiPoly>> fac;
            for (int i = 0; i < n; ++i) {
                std::vector<MultiPoly> coeffs;
                Rational acc(1);
                for (int j = 0; j <= k; ++j) {
                    if (j > 0) acc = acc * (lam - Rational(j - 1)) / Rational(j);
                    coeffs.push_back(MultiPoly::variable(vars, i, 2 * j) * acc *
                                     Rational(j % 2 == 0 ? 1 : -1));
                    if (j == 0) coeffs.back() = MultiPoly::constant(vars, Rational(1));
                }
                fac.push_back(std::move(coeffs));
            }
            std::vector<MultiPoly> prod(k + 1, MultiPoly(vars));
            prod[0] = MultiPoly::constant(vars, Rational(1));
            for (int i = 0; i < n; ++i) {
                std::vector<MultiPoly> next(k + 1, MultiPoly(vars));
                for (int d1 = 0; d1 <= k; ++d1)
                    for (int d2 = 0; d1 + d2 <= k; ++d2) next[d1 + d2] += prod[d1] * fac[i][d2];
                prod = std::move(next);
            }
            require(proportional(f, prod[k]), "potential_bn is not proportional to the residue polynomial");
        }
    }
    // harmonicity of the generic weighted configurations
    HarmonicResult h2 = harmonic_test(instantiate_bn(rat({1, 1, 2})));
    require(h2.is_harmonic && h2.degrees == std::vector<int>{1, 3}, "rank-2 degrees");
    HarmonicResult h3 = harmonic_test(instantiate_bn(rat({2, 1, 1, 3})));
    require(h3.is_harmonic && h3.degrees == std::vector<int>{1, 3, 5}, "rank-3 degrees");
    log << "flat equations hold at kappa = 2k-1, residue polynomials match, generic degrees 1,3,...,2n-1";
}

// ---- criterion 7 -------------------------------------------------------

void criterion7(std::ostream& log) {
    auto sys = instantiate_bn(rat({-1, 1, 2, 2}));
    HarmonicResult hr = harmonic_test(sys);
    require(hr.is_harmonic, "the one-normal-removed system must be harmonic");
    require(hr.degrees == (std::vector<int>{1, 3, 4}), "expected degrees 1,3,4");
    MultiPoly j = zaslavsky_potential(3, 2).rename(ambient_vars(sys));
    require(epd_check(sys, j, 4), "closed-form potential fails the flat equations at kappa 4");
    // complete a Saito basis from the flat sections at 1 and 3 plus the
    // closed-form potential's gradient
    RatMatrix ginv = canonical_form_inverse(sys);
    PolyVectorField jfield;
    for (int i = 0; i < 3; ++i) {
        MultiPoly comp(j.vars());
        for (int l = 0; l < 3; ++l)
            if (!ginv.at(i, l).is_zero()) comp += j.derivative(l) * ginv.at(i, l);
        jfield.components.push_back(std::move(comp));
    }
    std::vector<PolyVectorField> fields{flat_solve(sys, 1).sections.at(0), flat_solve(sys, 3).sections.at(0),
                                        jfield};
    FreenessCertificate cert = saito_criterion(sys, fields);
    require(cert.valid, "freeness certificate invalid: " + cert.reason);
    int sum = 0;
    for (int d : cert.degrees) sum += d;
    require(sum == 8 && sys.size() == 8, "degrees must sum to the hyperplane count 8");
    log << "harmonic degrees 1,3,4; closed-form potential completes a valid certificate with degree sum 8";
}

// ---- criterion 8 -------------------------------------------------------

void criterion8(std::ostream& log) {
    for (const Rational& s : {Rational(1), Rational(1, 2), Rational(2)}) {
        auto sys = instantiate_f4(s);
        PotentialSet ps = f4_potentials(s);
        RatMatrix ginv = canonical_form_inverse(sys);
        std::vector<PolyVectorField> fields;
        VarsPtr vars = ambient_vars(sys);
        for (std::size_t i = 0; i < ps.potentials.size(); ++i) {
            MultiPoly f = ps.potentials[i].rename(vars);
            require(epd_check(sys, f, ps.kappas[i]),
                    "potential at kappa " + std::to_string(ps.kappas[i]) + " fails for s = " + s.str());
            PolyVectorField field;
            for (int r = 0; r < 4; ++r) {
                MultiPoly comp(vars);
                for (int l = 0; l < 4; ++l)
                    if (!ginv.at(r, l).is_zero()) comp += f.derivative(l) * ginv.at(r, l);
                field.components.push_back(std::move(comp));
            }
            fields.push_back(std::move(field));
        }
        FreenessCertificate cert = saito_criterion(sys, fields);
        require(cert.valid, "freeness certificate invalid for s = " + s.str() + ": " + cert.reason);
        int sum = 0;
        for (int d : cert.degrees) sum += d;
        require(sum == 24, "degrees must sum to 24");
    }
    log << "all four potentials satisfy the flat equations at kappa 1,5,7,11 for s in {1, 1/2, 2}; certificates sum to 24";
}

// ---- criterion 9 -------------------------------------------------------

void criterion9(std::ostream& log) {
    VarsPtr t = make_vars({"t"});
    for (int n = 2; n <= 5; ++n) {
        MultiPoly pi = poincare_polynomial(intersection_lattice(instantiate_braid(n)));
        MultiPoly expected = MultiPoly::constant(t, Rational(1));
        for (int k = 1; k < n; ++k)
            expected = expected * (MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(k)));
        require(pi == expected, "configuration-space Poincare polynomial mismatch at n = " + std::to_string(n));
    }

    Rng rng(0x5eed0009);
    for (int iter = 0; iter < 50; ++iter) {
        int dim = 2 + static_cast<int>(rng.integer(0, 2));
        int count = 2 + static_cast<int>(rng.integer(0, 6));
        Arrangement arr;
        arr.dimension = dim;
        while (static_cast<int>(arr.directions.size()) < count) {
            std::vector<long long> d(dim);
            for (auto& x : d) x = rng.integer(-2, 2);
            if (normalize_direction(d) == 0) continue;
            if (std::find(arr.directions.begin(), arr.directions.end(), d) != arr.directions.end()) continue;
            arr.directions.push_back(d);
        }
        std::sort(arr.directions.begin(), arr.directions.end());
        std::size_t h = static_cast<std::size_t>(rng.integer(0, count - 1));
        MultiPoly whole = poincare_polynomial(intersection_lattice(arr));
        MultiPoly deleted = poincare_polynomial(intersection_lattice(delete_hyperplane(arr, h)));
        MultiPoly restricted = poincare_polynomial(intersection_lattice(restrict_hyperplane(arr, h)));
        require(whole == deleted + restricted * MultiPoly::monomial(t, {1}, Rational(1)),
                "deletion-restriction identity fails");
    }

    // double restriction of the rank-5 even sign-change arrangement
    std::vector<WeightedCovector> data;
    for (int i = 0; i < 5; ++i)
        for (int l = i + 1; l < 5; ++l)
            for (long long sg : {1, -1}) {
                std::vector<long long> d(5, 0);
                d[i] = 1;
                d[l] = sg;
                data.push_back({d, Rational(1)});
            }
    auto d5 = CovectorSystem::make(5, data, "coxeter d5");
    auto find_dir = [](const CovectorSystem& sys, const std::vector<long long>& d) {
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (sys.covectors()[i].direction == d) return i;
        throw FailedCriterion("direction not found");
    };
    auto first = restrict_arrangement(d5, find_dir(d5, {0, 0, 1, -1, 0}));
    auto second = restrict_arrangement(first, find_dir(first, {0, 0, 1, -1}));
    require(second.size() == 7, "double restriction must have 7 hyperplanes");
    MultiPoly pi = poincare_polynomial(intersection_lattice(second));
    MultiPoly expected = MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(7)) +
                         MultiPoly::monomial(t, {2}, Rational(15)) + MultiPoly::monomial(t, {3}, Rational(9));
    require(pi == expected, "double restriction Poincare polynomial mismatch");
    log << "configuration-space formula for n <= 5, 50 deletion-restriction identities, double restriction reproduces (1+t)(1+3t)^2";
}

// ---- criterion 10 ------------------------------------------------------

void criterion10(std::ostream& log, const std::string& corpus_dir) {
    CorpusResult a = corpus_run(corpus_dir);
    CorpusResult b = corpus_run(corpus_dir);
    require(a.all_match, "corpus expectations not met:\n" + a.table);
    require(a.table == b.table, "corpus runs are not byte-identical");
    Json ja = Json::array(), jb = Json::array();
    for (const auto& r : a.rows) ja.push_back(r.name + "|" + r.exponents + "|" + (r.matches ? "1" : "0"));
    for (const auto& r : b.rows) jb.push_back(r.name + "|" + r.exponents + "|" + (r.matches ? "1" : "0"));
    require(ja.dump() == jb.dump(), "corpus row payloads differ between runs");
    log << a.rows.size() << " corpus entries match; repeated runs byte-identical";
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus_dir = "corpus";
    if (const char* env = std::getenv("VEE_CORPUS")) corpus_dir = env;
    bool skip_slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--corpus") == 0 && i + 1 < argc) corpus_dir = argv[++i];
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;
    }

    std::vector<Criterion> criteria = {
        {1, "vee/holonomy verification corpus with random perturbations", criterion1},
        {2, "flat sections of the rank-3 unit system", criterion2},
        {3, "non-harmonicity of the restricted rank-3 system", criterion3},
        {4, "degenerate counterexample with non-factorizable Poincare polynomial", criterion4},
        {5, "type-A potentials: three routes, jacobian identity, reduction", criterion5},
        {6, "type-B potentials: flat equations, residues, generic degrees", criterion6},
        {7, "one-normal-removed configuration: degrees 1,3,4 and certificate", criterion7},
        {8, "explicit rank-4 potentials at kappa 1,5,7,11 with certificates (slow)",
         criterion8},
        {9, "arrangement engine: configuration-space formula, deletion-restriction, double restriction",
         criterion9},
        {10, "corpus determinism",
         [&corpus_dir](std::ostream& log) { criterion10(log, corpus_dir); }},
    };

    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.number != only) continue;
        if (skip_slow && c.number == 8) {
            std::cout << "SKIP criterion " << c.number << ": " << c.description << std::endl;
            continue;
        }
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(log);
            auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::cout << "PASS criterion " << c.number << ": " << c.description;
            if (!log.str().empty()) std::cout << " -- " << log.str();
            std::cout << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL criterion " << c.number << ": " << c.description << " -- " << e.what()
                      << std::endl;
        }
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
