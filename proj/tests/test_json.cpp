#include "vee/errors.hpp"
#include "vee/families.hpp"
#include "vee/json_io.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace vee;

TEST_CASE("system JSON round trip") {
    auto sys = instantiate_bn({Rational(-1), Rational(1), Rational(1), Rational(3)});
    Json j = system_to_json(sys);
    LoadedSystem back = system_from_json(j);
    CHECK(back.system.dimension() == sys.dimension());
    CHECK(back.system.covectors() == sys.covectors());
    CHECK(back.normalizations.empty());
    CHECK(j.dump() == system_to_json(back.system).dump());
}

TEST_CASE("loader normalizes sign and order with notes") {
    Json j;
    j["dimension"] = 2;
    j["covectors"] = Json::array();
    j["covectors"].push_back({{"direction", {-1, 0}}, {"weight", "1"}});
    j["covectors"].push_back({{"direction", {0, 1}}, {"weight", "1/2"}});
    LoadedSystem ls = system_from_json(j);
    CHECK(ls.system.covectors()[1].direction == std::vector<long long>{1, 0});
    REQUIRE(ls.normalizations.size() == 2);
    CHECK(ls.normalizations[0].find("sign normalized") != std::string::npos);
    CHECK(ls.normalizations[1].find("re-sorted") != std::string::npos);
}

TEST_CASE("loader rejects malformed systems") {
    Json j;
    j["dimension"] = 2;
    j["covectors"] = Json::array();
    j["covectors"].push_back({{"direction", {2, 4}}, {"weight", "1"}});
    CHECK_THROWS_AS(system_from_json(j), InputError); // not primitive

    Json j2;
    j2["dimension"] = 2;
    j2["covectors"] = Json::array();
    j2["covectors"].push_back({{"direction", {1, 0}}, {"weight", "0"}});
    CHECK_THROWS_AS(system_from_json(j2), InputError); // zero weight

    Json j3;
    j3["covectors"] = Json::array();
    CHECK_THROWS_AS(system_from_json(j3), InputError); // missing dimension
}

TEST_CASE("polynomial terms serialize in canonical order") {
    VarsPtr vars = make_vars("x", 2);
    MultiPoly p = MultiPoly::monomial(vars, {0, 2}, Rational(1)) +
                  MultiPoly::monomial(vars, {2, 0}, Rational(1, 3)) +
                  MultiPoly::monomial(vars, {1, 0}, Rational(-2));
    Json terms = poly_terms_to_json(p);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0]["exponents"] == Json::array({2, 0}));
    CHECK(terms[0]["coeff"] == "1/3");
    CHECK(terms[1]["exponents"] == Json::array({0, 2}));
    CHECK(terms[2]["exponents"] == Json::array({1, 0}));
    MultiPoly back = poly_from_terms_json(vars, terms);
    CHECK(back == p);
}

TEST_CASE("rationals accept integers and strings") {
    CHECK(rational_from_json(Json(5)) == Rational(5));
    CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), InputError);
}

TEST_CASE("vector field round trip") {
    VarsPtr vars = make_vars("x", 2);
    PolyVectorField f{{MultiPoly::variable(vars, 0, 3), MultiPoly::variable(vars, 1) * Rational(-2)}};
    Json j = field_to_json(f);
    PolyVectorField back = field_from_json(vars, j);
    REQUIRE(back.components.size() == 2);
    CHECK(back.components[0] == f.components[0]);
    CHECK(back.components[1] == f.components[1]);
}
