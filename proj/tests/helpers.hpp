#pragma once

#include "vee/covector.hpp"
#include "vee/flatsections.hpp"
#include "vee/matrix.hpp"
#include "vee/multipoly.hpp"

#include <random>
#include <vector>

namespace vee::test {

inline CovectorSystem sys_of(int dim, std::vector<std::pair<std::vector<long long>, Rational>> data,
                             std::string name = "test") {
    std::vector<WeightedCovector> covs;
    for (auto& [d, w] : data) covs.push_back({std::move(d), std::move(w)});
    return CovectorSystem::make(dim, std::move(covs), std::move(name));
}

// a == c*b for some nonzero rational c
inline bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [eb, cb] = *b.terms().begin();
    Rational ca = a.coeff(eb);
    if (ca.is_zero()) return false;
    Rational ratio = ca / cb;
    MultiPoly diff = a;
    diff -= b * ratio;
    return diff.is_zero();
}

// row space of polynomial coefficient vectors
inline RatMatrix coeff_matrix(const std::vector<MultiPoly>& polys,
                              const std::vector<MultiPoly::Exps>& basis) {
    RatMatrix m(polys.size(), basis.size());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) m.at(r, c) = polys[r].coeff(basis[c]);
    return m;
}

inline bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, int degree,
                      std::size_t nvars) {
    auto basis = homogeneous_exponents(nvars, degree);
    RatMatrix ma = coeff_matrix(a, basis);
    RatMatrix mb = coeff_matrix(b, basis);
    RatMatrix both(a.size() + b.size(), basis.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) both.at(r, c) = ma.at(r, c);
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) both.at(a.size() + r, c) = mb.at(r, c);
    std::size_t ra = rank(ma), rb = rank(mb);
    return ra == rb && rank(both) == ra;
}

// flatten vector fields into coefficient rows over (component, monomial)
inline bool same_section_span(const std::vector<PolyVectorField>& a,
                              const std::vector<PolyVectorField>& b, int degree, std::size_t nvars) {
    auto basis = homogeneous_exponents(nvars, degree);
    auto build = [&](const std::vector<PolyVectorField>& fs) {
        RatMatrix m(fs.size() == 0 ? 1 : fs.size(), nvars * basis.size());
        for (std::size_t r = 0; r < fs.size(); ++r)
            for (std::size_t comp = 0; comp < nvars; ++comp)
                for (std::size_t c = 0; c < basis.size(); ++c)
                    m.at(r, comp * basis.size() + c) = fs[r].components[comp].coeff(basis[c]);
        return m;
    };
    RatMatrix ma = build(a), mb = build(b);
    RatMatrix both(ma.rows() + mb.rows(), ma.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r)
        for (std::size_t c = 0; c < ma.cols(); ++c) both.at(r, c) = ma.at(r, c);
    for (std::size_t r = 0; r < mb.rows(); ++r)
        for (std::size_t c = 0; c < mb.cols(); ++c) both.at(ma.rows() + r, c) = mb.at(r, c);
    std::size_t ra = rank(ma), rb = rank(mb);
    return ra == rb && rank(both) == ra && a.size() == b.size();
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen);
    }

    Rational rational(long long lo = -6, long long hi = 6, long long den_hi = 4) {
        return Rational(integer(lo, hi), integer(1, den_hi));
    }

    Rational nonzero_rational(long long lo = -6, long long hi = 6, long long den_hi = 4) {
        for (;;) {
            Rational r = rational(lo, hi, den_hi);
            if (!r.is_zero()) return r;
        }
    }
};

} // namespace vee::test
