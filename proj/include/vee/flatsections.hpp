#pragma once

#include "vee/covector.hpp"
#include "vee/multipoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vee {

// Polynomial vector field, one component per ambient variable.
struct PolyVectorField {
    std::vector<MultiPoly> components;

    bool is_zero() const;
    // common total degree of the nonzero components, if homogeneous
    std::optional<int> homogeneous_degree() const;
};

struct FlatBasis {
    int kappa = 0;
    std::vector<PolyVectorField> sections;
    std::vector<MultiPoly> potentials;
};

// Polynomial flat sections of the connection at the given kappa, solved in
// potential form: F runs over homogeneous polynomials of degree kappa+1, and
// the pole-by-pole content of the flat equations becomes two linear blocks,
//   (a) each directional derivative along a dual is divisible by its form,
//   (b) the second derivatives match the quotient sums.
// Sections are the canonical-form gradients of the kernel's potentials.
FlatBasis flat_solve(const CovectorSystem& sys, int kappa);

// Same solution space computed from the first-order system on the section
// components; kept as an independent route for cross-checking flat_solve.
FlatBasis flat_solve_raw(const CovectorSystem& sys, int kappa);

// Exact check that F solves the potential-form flat equations at kappa.
bool epd_check(const CovectorSystem& sys, const MultiPoly& F, int kappa);

struct SectionProperties {
    bool is_gradient = false;
    std::optional<MultiPoly> potential;
    bool is_logarithmic = false;
    std::optional<int> degree;
};

SectionProperties section_properties(const CovectorSystem& sys, const PolyVectorField& psi);

struct HarmonicResult {
    bool is_harmonic = false;
    std::vector<int> degrees;                  // ascending, when harmonic
    std::vector<PolyVectorField> sections;     // the certified independent sections
    std::vector<MultiPoly> potentials;
    std::map<int, int> dimension_table;        // kappa -> flat solution dimension
    bool search_exhausted = false;             // all admissible selections tried
};

// Searches degree multisets summing to the covector count whose chosen
// sections have a non-vanishing symbolic determinant.
HarmonicResult harmonic_test(const CovectorSystem& sys);

struct QuasiInvariantBasis {
    int dim = 0;
    std::vector<MultiPoly> basis;
};

// Homogeneous polynomials whose dual-directional derivatives vanish on the
// respective hyperplanes, imposed as exact divisibility.
QuasiInvariantBasis quasi_invariant_dim(const CovectorSystem& sys, int degree);

// Euler field potential: half the canonical-form quadratic.
MultiPoly euler_potential(const CovectorSystem& sys, const VarsPtr& vars);

VarsPtr ambient_vars(const CovectorSystem& sys);

} // namespace vee
