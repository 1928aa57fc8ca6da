#include "vee/matrix.hpp"

#include "vee/errors.hpp"

#include <gmpxx.h>

namespace vee {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    RatMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a.at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, c) += x * b.at(k, c);
        }
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix difference dimension mismatch");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) - b.at(r, c);
    return m;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c) * s;
    return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw InputError("matrix-vector dimension mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
    return out;
}

namespace {

struct IntEchelon {
    std::vector<std::vector<mpz_class>> m;
    std::vector<mpz_class> row_scale; // original row was multiplied by this
    std::vector<std::size_t> pivots;
    int sign = 1;
};

// Scale each row to integers, then run fraction-free (Bareiss) forward
// elimination with column pivoting.
IntEchelon int_echelon(const RatMatrix& a) {
    const std::size_t R = a.rows(), C = a.cols();
    IntEchelon e;
    e.m.assign(R, std::vector<mpz_class>(C));
    e.row_scale.assign(R, 1);
    for (std::size_t r = 0; r < R; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).den().get_mpz_t());
        e.row_scale[r] = l;
        for (std::size_t c = 0; c < C; ++c) {
            const Rational& x = a.at(r, c);
            e.m[r][c] = x.num() * (l / x.den());
        }
    }
    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && e.m[piv][col] == 0) ++piv;
        if (piv == R) continue;
        if (piv != row) {
            std::swap(e.m[piv], e.m[row]);
            e.sign = -e.sign;
        }
        for (std::size_t i = row + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                mpz_class t = e.m[i][j] * e.m[row][col] - e.m[i][col] * e.m[row][j];
                mpz_divexact(e.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e.m[i][col] = 0;
        }
        prev = e.m[row][col];
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

RrefResult rref(const RatMatrix& a) {
    const std::size_t C = a.cols();
    IntEchelon e = int_echelon(a);
    const std::size_t rk = e.pivots.size();
    RatMatrix m(a.rows(), C);
    for (std::size_t r = 0; r < rk; ++r) {
        Rational p = Rational(e.m[r][e.pivots[r]]).inv();
        for (std::size_t c = e.pivots[r]; c < C; ++c) m.at(r, c) = Rational(e.m[r][c]) * p;
    }
    for (std::size_t r = rk; r-- > 0;) {
        for (std::size_t above = 0; above < r; ++above) {
            Rational f = m.at(above, e.pivots[r]);
            if (f.is_zero()) continue;
            for (std::size_t c = e.pivots[r]; c < C; ++c)
                m.at(above, c) -= f * m.at(r, c);
        }
    }
    return RrefResult{std::move(m), std::move(e.pivots)};
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw InputError("kernel of empty matrix");
    RrefResult r = rref(a);
    const std::size_t C = a.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(C);
        v[free] = Rational(1);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            v[r.pivots[pr]] = -r.m.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
    if (a.rows() == 0) return Rational(1);
    IntEchelon e = int_echelon(a);
    if (e.pivots.size() < a.rows()) return Rational(0);
    mpz_class denom = 1;
    for (const auto& s : e.row_scale) denom *= s;
    Rational d(e.m[a.rows() - 1][a.cols() - 1], denom);
    return e.sign > 0 ? d : -d;
}

std::size_t rank(const RatMatrix& a) { return int_echelon(a).pivots.size(); }

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    RrefResult rr = rref(aug);
    if (rr.rank() < n || rr.pivots[n - 1] >= n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.m.at(r, n + c);
    return inv;
}

} // namespace vee
