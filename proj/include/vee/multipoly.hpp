#pragma once

#include "vee/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vee {

// Shared, immutable variable context. Polynomials may only be combined when
// they reference the same context (compared by content).
using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

VarsPtr make_vars(std::vector<std::string> names);
VarsPtr make_vars(const std::string& stem, int count, int start = 1);

// Graded lexicographic, largest term first.
struct GradedLexDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over the rationals with named variables.
// No zero coefficients are ever stored; term order is graded lex descending.
class MultiPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rational, GradedLexDesc>;

    explicit MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarsPtr vars, Rational c);
    static MultiPoly variable(VarsPtr vars, std::size_t index, int power = 1);
    static MultiPoly monomial(VarsPtr vars, Exps exps, Rational c);
    static MultiPoly linear_form(VarsPtr vars, const std::vector<Rational>& coeffs);

    const VarsPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    Rational coeff(const Exps& e) const;
    Rational leading_coeff() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    MultiPoly operator-() const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int k) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly directional_derivative(const std::vector<Rational>& d) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Ring morphism sending variable i to images[i]; all images share one ring.
    MultiPoly compose(const VarsPtr& target, const std::vector<MultiPoly>& images) const;
    // Same coefficients in a different ring of equal arity.
    MultiPoly rename(const VarsPtr& target) const;

    std::string str() const;

private:
    void add_term(const Exps& e, const Rational& c);

    VarsPtr vars_;
    TermMap terms_;
};

struct LinDivmodResult {
    MultiPoly quotient;
    MultiPoly remainder;
};

// Division of p by a linear form (no constant term): p = q*ell + r where r
// does not involve the pivot variable of ell. Exact and deterministic.
LinDivmodResult divmod_linear(const MultiPoly& p, const MultiPoly& ell);

// Exact multivariate division; nullopt if d does not divide p.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

// Determinant of a square matrix of polynomials (Laplace expansion with
// column-subset memoization; intended for small sizes).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

// All monomials of the given total degree in graded-lex descending order.
std::vector<MultiPoly::Exps> homogeneous_exponents(std::size_t n_vars, int degree);
std::vector<MultiPoly> homogeneous_basis(const VarsPtr& vars, int degree);

bool same_ring(const VarsPtr& a, const VarsPtr& b);

} // namespace vee
