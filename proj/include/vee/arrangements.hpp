#pragma once

#include "vee/covector.hpp"
#include "vee/flatsections.hpp"
#include "vee/multipoly.hpp"

#include <optional>
#include <vector>

namespace vee {

// Directions-only view of a configuration; weights are deliberately ignored
// by every arrangement-level operation.
struct Arrangement {
    int dimension = 0;
    std::vector<std::vector<long long>> directions;
};

Arrangement arrangement_of(const CovectorSystem& sys);

struct LatticeElement {
    int codim = 0;
    std::vector<std::vector<Rational>> rows; // reduced row-echelon equations
    long long mobius = 0;
};

struct IntersectionLattice {
    int dimension = 0;
    std::vector<LatticeElement> elements; // ordered by (codim, echelon key)
};

IntersectionLattice intersection_lattice(const Arrangement& arr);
IntersectionLattice intersection_lattice(const CovectorSystem& sys);

// pi(t) = sum_X mu(X) (-t)^codim X, in the one-variable ring "t".
MultiPoly poincare_polynomial(const IntersectionLattice& lat);

// Nonnegative integers b_1 <= ... with p = prod (1 + b_i t); nullopt when no
// such splitting exists.
std::optional<std::vector<long long>> factorization_check(const MultiPoly& p);

// Tangency to every hyperplane, as exact divisibility of the contractions.
bool is_logarithmic(const CovectorSystem& sys, const PolyVectorField& field);

struct FreenessCertificate {
    std::vector<PolyVectorField> fields;
    std::vector<int> degrees;
    Rational det_ratio; // det of the component matrix = det_ratio * Q
    bool valid = false;
    std::string reason; // empty when valid
};

// Saito's criterion: n homogeneous logarithmic fields whose degrees sum to
// the hyperplane count and whose component determinant is a nonzero constant
// multiple of the defining polynomial.
FreenessCertificate saito_criterion(const CovectorSystem& sys, const std::vector<PolyVectorField>& fields);

// Defining polynomial: product of one primitive linear form per direction.
MultiPoly defining_polynomial(const CovectorSystem& sys, const VarsPtr& vars);

// The arrangement cut out on the indexed hyperplane, expressed in the
// echelon basis of that hyperplane. Weights are reset to 1 and the result is
// marked arrangement-only.
CovectorSystem restrict_arrangement(const CovectorSystem& sys, std::size_t index);

// Deletion of one hyperplane (test support for the deletion-restriction
// identity); may produce a non-spanning direction set.
Arrangement delete_hyperplane(const Arrangement& arr, std::size_t index);
Arrangement restrict_hyperplane(const Arrangement& arr, std::size_t index);

} // namespace vee
