#pragma once

#include "vee/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vee {

// Dense rational matrix with immutable shape.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    RatMatrix scaled(const Rational& s) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    RatMatrix m;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// Reduced row-echelon form. Forward elimination is fraction-free (Bareiss);
// pivot normalization and back-substitution happen on the echelon entries.
RrefResult rref(const RatMatrix& m);

// Canonical basis of the right null space, one vector per free column in
// ascending column order, pivot-normalized from the reduced echelon form.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Exact determinant by fraction-free elimination over the integers.
Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v);

} // namespace vee
