#pragma once

#include "vee/covector.hpp"
#include "vee/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vee {

enum class Family {
    an,
    bn,
    f4,
    f3,
    g3,
    d3,
    ab4,
    ab4_a1_1,
    ab4_a1_2,
    dihedral_b2,
    boolean_arr,
    braid,
};

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Parameters are named rationals: c0..cn (an/bn), s (f4/f3/ab4 restrictions,
// d3), t (g3/d3), k (ab4), a2/b2 (dihedral_b2), n (boolean/braid).
struct FamilySpec {
    Family family;
    std::map<std::string, Rational> params;
};

// Instantiates the named configuration with exact rational data. Covectors
// whose weight vanishes at the given parameters are dropped, with a notice
// appended to the returned system's name.
CovectorSystem instantiate(const FamilySpec& spec);

CovectorSystem instantiate_an(const std::vector<Rational>& c);
CovectorSystem instantiate_bn(const std::vector<Rational>& c);
CovectorSystem instantiate_f4(const Rational& s);
CovectorSystem instantiate_f3(const Rational& s);
CovectorSystem instantiate_g3(const Rational& t);
CovectorSystem instantiate_d3(const Rational& t, const Rational& s);
CovectorSystem instantiate_ab4(const Rational& k);
CovectorSystem instantiate_ab4_a1_1(const Rational& s);
CovectorSystem instantiate_ab4_a1_2(const Rational& s);
CovectorSystem instantiate_dihedral_b2(const Rational& a2, const Rational& b2);
CovectorSystem instantiate_boolean(int n);
CovectorSystem instantiate_braid(int n);

} // namespace vee
