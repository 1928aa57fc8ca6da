#pragma once

#include "vee/multipoly.hpp"
#include "vee/rational.hpp"

#include <vector>

namespace vee {

// Deformed Newton sums p_s = sum_i lambda_i x_i^s (stride 1) or
// q_s = sum lambda_i x_i^{2s} (stride 2); index i starts at `first`.
MultiPoly deformed_power_sum(const VarsPtr& vars, const std::vector<Rational>& lambda, int s,
                             int stride = 1, std::size_t first = 0);

// The determinant/partition closed form built from power sums p_1..p_{kappa+1}:
// both routes are computed and must agree exactly.
MultiPoly power_sum_potential(const std::vector<MultiPoly>& psums, int kappa);
MultiPoly power_sum_potential_partition(const std::vector<MultiPoly>& psums, int kappa);

// Type-A potential of degree kappa+1 in ambient variables x0..xn, with
// lambda_i = kappa c_i / sigma.
MultiPoly potential_an(const std::vector<Rational>& c, int kappa);
MultiPoly potential_an_partition(const std::vector<Rational>& c, int kappa);

// Independent series route: coefficient of the relevant inverse power in the
// exponential of the generating sum of power sums.
MultiPoly series_oracle_an(const std::vector<Rational>& c, int kappa);

// Type-B potential of degree 2k (flat at kappa = 2k-1): the same closed form
// with p_s replaced by even power sums over x1..xn.
MultiPoly potential_bn(const std::vector<Rational>& c, int k);

// Restriction of a type-A potential to the reduced chart y_i = x_i - x0.
// The potential is invariant under simultaneous translation, so the chart
// substitution x0 = 0 realizes the recentered subspace reduction.
MultiPoly reduce_to_subspace_an(const MultiPoly& F, const std::vector<Rational>& c);

// det of the (n+1)x(n+1) gradient matrix of {p_1^lambda, F_1, ..., F_n}
// against its closed product form; the constant is pinned exactly.
bool jacobian_identity_check(const std::vector<Rational>& c);
// same identity evaluated at a point (for larger n)
bool jacobian_identity_check_at(const std::vector<Rational>& c, const std::vector<Rational>& point);

struct PotentialSet {
    std::string family;
    std::vector<int> kappas;
    std::vector<MultiPoly> potentials;
};

// The four explicit type-F4 potentials with t^2 = s, kappa = 1, 5, 7, 11.
PotentialSet f4_potentials(const Rational& s);

// x_1...x_{n-m} (x_{n-m+1}...x_n)^2 for the arrangement with m coordinate
// hyperplanes present; flat at kappa = n+m-1.
MultiPoly zaslavsky_potential(int n, int m);

// Rank-two even dihedral potentials at p = 2, kappa = 1 and 3.
PotentialSet dihedral_b2_potentials(const Rational& a2, const Rational& b2);

} // namespace vee
