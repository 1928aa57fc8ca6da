#pragma once

#include "vee/matrix.hpp"
#include "vee/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vee {

// A covector stored as (primitive integer direction, rational weight); the
// represented rank-one tensor is weight * direction (x) direction. Negative
// weights encode covectors with imaginary scale.
struct WeightedCovector {
    std::vector<long long> direction;
    Rational weight;
};

bool operator==(const WeightedCovector& a, const WeightedCovector& b);

// Divides out the gcd and flips sign so the first nonzero entry is positive.
// Returns the (nonzero, positive-signed) content that was removed, or 0 for
// the zero vector.
long long normalize_direction(std::vector<long long>& v, bool* flipped = nullptr);

// A finite weighted covector configuration in fixed ambient dimension.
// Directions are pairwise non-collinear, stored sorted lexicographically.
class CovectorSystem {
public:
    static CovectorSystem make(int dimension, std::vector<WeightedCovector> covectors,
                               std::string name = "", bool arrangement_only = false);

    int dimension() const { return dimension_; }
    const std::vector<WeightedCovector>& covectors() const { return covectors_; }
    std::size_t size() const { return covectors_.size(); }
    const std::string& name() const { return name_; }
    bool arrangement_only() const { return arrangement_only_; }

    CovectorSystem with_name(std::string name) const;
    CovectorSystem with_weight(std::size_t index, Rational w) const;

private:
    CovectorSystem() = default;

    int dimension_ = 0;
    std::vector<WeightedCovector> covectors_;
    std::string name_;
    bool arrangement_only_ = false;
};

} // namespace vee
