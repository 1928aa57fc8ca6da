#include "vee/covector.hpp"

#include "vee/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vee {

bool operator==(const WeightedCovector& a, const WeightedCovector& b) {
    return a.direction == b.direction && a.weight == b.weight;
}

long long normalize_direction(std::vector<long long>& v, bool* flipped) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (flipped) *flipped = false;
    if (g == 0) return 0;
    bool neg = false;
    for (long long x : v) {
        if (x != 0) {
            neg = x < 0;
            break;
        }
    }
    for (auto& x : v) x = x / g * (neg ? -1 : 1);
    if (flipped) *flipped = neg;
    return g;
}

CovectorSystem CovectorSystem::make(int dimension, std::vector<WeightedCovector> covectors,
                                    std::string name, bool arrangement_only) {
    if (dimension <= 0) throw InputError("dimension must be positive");
    for (auto& cv : covectors) {
        if (static_cast<int>(cv.direction.size()) != dimension)
            throw InputError("covector direction arity mismatch in '" + name + "'");
        std::vector<long long> d = cv.direction;
        long long g = normalize_direction(d);
        if (g == 0) throw InputError("zero covector direction in '" + name + "'");
        if (d != cv.direction)
            throw InputError("covector direction not primitive/sign-normalized in '" + name + "'");
        if (cv.weight.is_zero()) throw InputError("zero covector weight in '" + name + "'");
    }
    std::sort(covectors.begin(), covectors.end(),
              [](const WeightedCovector& a, const WeightedCovector& b) { return a.direction < b.direction; });
    for (std::size_t i = 1; i < covectors.size(); ++i)
        if (covectors[i].direction == covectors[i - 1].direction)
            throw InputError("collinear covector directions in '" + name + "'");
    if (!covectors.empty()) {
        RatMatrix dirmat(covectors.size(), dimension);
        for (std::size_t r = 0; r < covectors.size(); ++r)
            for (int c = 0; c < dimension; ++c) dirmat.at(r, c) = Rational(covectors[r].direction[c]);
        if (rank(dirmat) != static_cast<std::size_t>(dimension))
            throw InputError("covector directions do not span the ambient dual space in '" + name + "'");
    } else {
        throw InputError("empty covector system");
    }
    CovectorSystem sys;
    sys.dimension_ = dimension;
    sys.covectors_ = std::move(covectors);
    sys.name_ = std::move(name);
    sys.arrangement_only_ = arrangement_only;
    return sys;
}

CovectorSystem CovectorSystem::with_name(std::string name) const {
    CovectorSystem s = *this;
    s.name_ = std::move(name);
    return s;
}

CovectorSystem CovectorSystem::with_weight(std::size_t index, Rational w) const {
    if (index >= covectors_.size()) throw InputError("covector index out of range");
    if (w.is_zero()) throw InputError("zero covector weight");
    CovectorSystem s = *this;
    s.covectors_[index].weight = std::move(w);
    return s;
}

} // namespace vee
