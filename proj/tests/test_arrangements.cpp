#include "vee/arrangements.hpp"
#include "vee/errors.hpp"
#include "vee/families.hpp"
#include "vee/veecheck.hpp"
#include "vee/flatsections.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vee;
using vee::test::Rng;
using vee::test::sys_of;

namespace {

std::vector<Rational> poincare_coeffs(const CovectorSystem& sys) {
    MultiPoly pi = poincare_polynomial(intersection_lattice(sys));
    std::vector<Rational> out(pi.total_degree() + 1);
    for (const auto& [e, c] : pi.terms()) out[e[0]] = c;
    return out;
}

// the restricted-D5 arrangement together with its free basis
CovectorSystem restricted_d5() {
    return sys_of(3, {{{1, 1, 0}, Rational(1)}, {{1, -1, 0}, Rational(1)}, {{1, 0, 1}, Rational(1)},
                      {{1, 0, -1}, Rational(1)}, {{0, 1, 1}, Rational(1)}, {{0, 1, -1}, Rational(1)},
                      {{0, 0, 1}, Rational(1)}},
                  "restricted d5");
}

std::vector<PolyVectorField> restricted_d5_fields(const VarsPtr& vars) {
    MultiPoly x1 = MultiPoly::variable(vars, 0), x2 = MultiPoly::variable(vars, 1),
              x3 = MultiPoly::variable(vars, 2);
    PolyVectorField e{{x1, x2, x3}};
    PolyVectorField cubes{{x1.pow(3), x2.pow(3), x3.pow(3)}};
    PolyVectorField x3sq{{x2 * x3.pow(2), x1 * x3.pow(2), x1 * x2 * x3}};
    return {e, cubes, x3sq};
}

} // namespace

TEST_CASE("boolean lattice") {
    IntersectionLattice lat = intersection_lattice(instantiate_boolean(3));
    CHECK(lat.elements.size() == 8);
    auto pc = poincare_coeffs(instantiate_boolean(3));
    CHECK(pc == std::vector<Rational>{Rational(1), Rational(3), Rational(3), Rational(1)});
}

TEST_CASE("rank-two braid lattice carries the double point") {
    IntersectionLattice lat = intersection_lattice(instantiate_braid(3));
    REQUIRE(lat.elements.size() == 5);
    CHECK(lat.elements.back().codim == 2);
    CHECK(lat.elements.back().mobius == 2);
    CHECK(poincare_coeffs(instantiate_braid(3)) ==
          std::vector<Rational>{Rational(1), Rational(3), Rational(2)});
}

TEST_CASE("poincare polynomials of the bundled cases") {
    CHECK(poincare_coeffs(instantiate_braid(4)) ==
          std::vector<Rational>{Rational(1), Rational(6), Rational(11), Rational(6)});
    CHECK(poincare_coeffs(instantiate_bn({Rational(-1), Rational(1), Rational(1), Rational(3)})) ==
          std::vector<Rational>{Rational(1), Rational(7), Rational(15), Rational(9)});
    CHECK(poincare_coeffs(instantiate_f3(Rational(-1, 2))) ==
          std::vector<Rational>{Rational(1), Rational(10), Rational(35), Rational(26)});
}

TEST_CASE("factorization check") {
    VarsPtr t = make_vars({"t"});
    MultiPoly p133 = MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(7)) +
                     MultiPoly::monomial(t, {2}, Rational(15)) + MultiPoly::monomial(t, {3}, Rational(9));
    auto f = factorization_check(p133);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<long long>{1, 3, 3});

    MultiPoly nonfree = MultiPoly::constant(t, Rational(1)) + MultiPoly::monomial(t, {1}, Rational(10)) +
                        MultiPoly::monomial(t, {2}, Rational(35)) + MultiPoly::monomial(t, {3}, Rational(26));
    CHECK(!factorization_check(nonfree).has_value());

    CHECK(factorization_check(MultiPoly::constant(t, Rational(1)))->empty());
    CHECK_THROWS_AS(factorization_check(MultiPoly::constant(t, Rational(2))), InputError);
}

TEST_CASE("factorization matches harmonic degrees on free cases") {
    for (const auto& sys : {instantiate_an({Rational(1), Rational(1), Rational(1), Rational(1)}),
                            instantiate_bn({Rational(0), Rational(1), Rational(1), Rational(1)}),
                            instantiate_bn({Rational(-1), Rational(1), Rational(2), Rational(2)})}) {
        CAPTURE(sys.name());
        auto factors = factorization_check(poincare_polynomial(intersection_lattice(sys)));
        REQUIRE(factors.has_value());
        HarmonicResult hr = harmonic_test(sys);
        REQUIRE(hr.is_harmonic);
        std::vector<long long> degrees(hr.degrees.begin(), hr.degrees.end());
        CHECK(*factors == degrees);
    }
}

TEST_CASE("logarithmic field checks") {
    auto sys = restricted_d5();
    VarsPtr vars = ambient_vars(sys);
    auto fields = restricted_d5_fields(vars);
    for (const auto& f : fields) CHECK(is_logarithmic(sys, f));

    auto line = sys_of(1, {{{1}, Rational(1)}}, "line");
    VarsPtr v1 = make_vars("x", 1);
    PolyVectorField d1{{MultiPoly::constant(v1, Rational(1))}};
    CHECK(!is_logarithmic(line, d1));
}

TEST_CASE("saito criterion on the restricted Coxeter basis") {
    auto sys = restricted_d5();
    VarsPtr vars = ambient_vars(sys);
    FreenessCertificate cert = saito_criterion(sys, restricted_d5_fields(vars));
    CHECK(cert.valid);
    CHECK(cert.degrees == std::vector<int>{1, 3, 3});
    CHECK(!cert.det_ratio.is_zero());
}

TEST_CASE("saito criterion accepts harmonic flat bases and rejects duplicates") {
    auto a3 = instantiate_an({Rational(1), Rational(1), Rational(1), Rational(1)});
    HarmonicResult hr = harmonic_test(a3);
    REQUIRE(hr.is_harmonic);
    FreenessCertificate cert = saito_criterion(a3, hr.sections);
    CHECK(cert.valid);
    CHECK(cert.degrees == std::vector<int>{1, 2, 3});

    auto b2 = instantiate_dihedral_b2(Rational(1), Rational(1));
    VarsPtr v2 = make_vars("x", 2);
    PolyVectorField e{{MultiPoly::variable(v2, 0), MultiPoly::variable(v2, 1)}};
    FreenessCertificate bad = saito_criterion(b2, {e, e});
    CHECK(!bad.valid);
}

TEST_CASE("saito validity survives constant rescaling and equal-degree mixing") {
    auto cube = instantiate_boolean(3);
    VarsPtr vars = ambient_vars(cube);
    std::vector<PolyVectorField> fields;
    for (int i = 0; i < 3; ++i) {
        PolyVectorField f{{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)}};
        f.components[i] = MultiPoly::variable(vars, i);
        fields.push_back(f);
    }
    CHECK(saito_criterion(cube, fields).valid);
    // unimodular integer mix of the three degree-1 fields
    std::vector<PolyVectorField> mixed(3, PolyVectorField{{MultiPoly(vars), MultiPoly(vars), MultiPoly(vars)}});
    long long m[3][3] = {{1, 2, 0}, {0, 1, 5}, {0, 0, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int comp = 0; comp < 3; ++comp)
                mixed[r].components[comp] += fields[c].components[comp] * Rational(m[r][c]);
    FreenessCertificate cert = saito_criterion(cube, mixed);
    CHECK(cert.valid);
}

TEST_CASE("restriction examples") {
    auto cube4 = instantiate_boolean(4);
    std::size_t idx = 3; // direction e4 sorts last? directions sorted ascending: e1=(1,0,0,0) sorts last
    // find the covector x4
    for (std::size_t i = 0; i < cube4.size(); ++i)
        if (cube4.covectors()[i].direction == std::vector<long long>{0, 0, 0, 1}) idx = i;
    auto restricted = restrict_arrangement(cube4, idx);
    CHECK(restricted.dimension() == 3);
    CHECK(restricted.size() == 3);
    CHECK(restricted.arrangement_only());
    CHECK_THROWS_AS(vee_check(restricted), InputError);

    // Coxeter B3 restricted along x3 is Coxeter B2
    auto b3 = instantiate_bn({Rational(0), Rational(1), Rational(1), Rational(1)});
    std::size_t e3 = 0;
    for (std::size_t i = 0; i < b3.size(); ++i)
        if (b3.covectors()[i].direction == std::vector<long long>{0, 0, 1}) e3 = i;
    auto b2 = restrict_arrangement(b3, e3);
    CHECK(b2.size() == 4);
    std::vector<std::vector<long long>> dirs;
    for (const auto& cv : b2.covectors()) dirs.push_back(cv.direction);
    for (auto d : std::vector<std::vector<long long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}})
        CHECK(std::find(dirs.begin(), dirs.end(), d) != dirs.end());
}

TEST_CASE("double restriction of the D5 Coxeter arrangement") {
    // D5: all x_i - x_j and x_i + x_j, i < j <= 5
    std::vector<std::pair<std::vector<long long>, Rational>> data;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (long long s : {1, -1}) {
                std::vector<long long> d(5, 0);
                d[i] = 1;
                d[j] = s;
                data.push_back({d, Rational(1)});
            }
    auto d5 = sys_of(5, std::move(data), "coxeter d5");
    CHECK(d5.size() == 20);

    auto find_dir = [](const CovectorSystem& sys, const std::vector<long long>& d) {
        for (std::size_t i = 0; i < sys.size(); ++i)
            if (sys.covectors()[i].direction == d) return i;
        throw std::runtime_error("direction not found");
    };
    // restrict along x3 - x4, then along the image of x4 - x5
    auto first = restrict_arrangement(d5, find_dir(d5, {0, 0, 1, -1, 0}));
    CHECK(first.dimension() == 4);
    auto second = restrict_arrangement(first, find_dir(first, {0, 0, 1, -1}));
    CHECK(second.dimension() == 3);
    CHECK(second.size() == 7);
    auto pc = poincare_coeffs(second);
    CHECK(pc == std::vector<Rational>{Rational(1), Rational(7), Rational(15), Rational(9)});
    auto factors = factorization_check(poincare_polynomial(intersection_lattice(second)));
    REQUIRE(factors.has_value());
    CHECK(*factors == std::vector<long long>{1, 3, 3});
}

TEST_CASE("deletion-restriction identity on random arrangements") {
    Rng rng(1515);
    VarsPtr t = make_vars({"t"});
    for (int iter = 0; iter < 30; ++iter) {
        int dim = 2 + static_cast<int>(rng.integer(0, 2));
        int count = 2 + static_cast<int>(rng.integer(0, 5));
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
        CHECK(whole == deleted + restricted * MultiPoly::monomial(t, {1}, Rational(1)));
    }
}

TEST_CASE("mobius values alternate in sign with codimension") {
    for (const auto& sys : {instantiate_f3(Rational(-1, 2)), instantiate_braid(4),
                            instantiate_bn({Rational(-1), Rational(1), Rational(1), Rational(3)})}) {
        CAPTURE(sys.name());
        IntersectionLattice lat = intersection_lattice(sys);
        for (const auto& e : lat.elements) {
            long long expected_sign = (e.codim % 2 == 0) ? 1 : -1;
            CHECK(e.mobius * expected_sign > 0);
        }
    }
}
