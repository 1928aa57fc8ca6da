#pragma once

#include "vee/covector.hpp"
#include "vee/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vee {

// Canonical symmetric form G = sum of weight * direction (x) direction.
// Degeneracy is allowed; callers that need the inverse must check.
RatMatrix canonical_form(const CovectorSystem& sys);

// Inverse canonical form; throws DegenerateFormError naming the kernel.
RatMatrix canonical_form_inverse(const CovectorSystem& sys);

// G^{-1} applied to the indexed covector's direction. The weight is carried
// separately by the caller so everything stays rational.
std::vector<Rational> vee_dual(const CovectorSystem& sys, std::size_t index);

// All dual direction vectors at once.
std::vector<std::vector<Rational>> vee_duals(const CovectorSystem& sys);

// A two-dimensional span of covector directions, keyed by the reduced
// row-echelon basis of the span.
struct Plane {
    std::vector<std::vector<Rational>> basis; // 2 echelon rows of length n
    std::size_t pivot0 = 0, pivot1 = 0;
    std::vector<std::size_t> members; // covector indices, ascending
};

// Deterministic enumeration of all 2D spans containing at least two covector
// directions, ordered by echelon key.
std::vector<Plane> enumerate_planes(const CovectorSystem& sys);

struct PlaneRecord {
    std::vector<std::size_t> covector_indices;
    bool multi_covector = false;
    std::optional<Rational> nu;
    bool passed = false;
};

struct VeeReport {
    bool is_vee_system = false;
    RatMatrix canonical_form;
    std::vector<PlaneRecord> planes;
    std::vector<std::string> failures;
};

// Plane-wise conditions: two-covector planes need the duals orthogonal under
// the canonical form; larger planes need the restricted operator to be a
// multiple of the identity, whose scalar is recorded as nu.
VeeReport vee_check(const CovectorSystem& sys);

struct HolonomyReport {
    bool passes = false;
    // (covector index, plane index into enumerate_planes order)
    std::vector<std::pair<std::size_t, std::size_t>> failing_planes;
};

// Checks that t_alpha -> weight * dual (x) direction satisfies the plane-wise
// centralizer relations of the holonomy Lie algebra.
HolonomyReport holonomy_check(const CovectorSystem& sys);

struct ProportionalityReport {
    bool proportional = false;
    std::optional<Rational> mu;
};

// Is the canonical form an exact scalar multiple of G (zero allowed)?
ProportionalityReport well_distributed_check(const CovectorSystem& sys, const RatMatrix& G);

// Partition into components whose direction spans are complementary, each
// re-expressed in the echelon basis of its span.
std::vector<CovectorSystem> irreducible_components(const CovectorSystem& sys);

} // namespace vee
