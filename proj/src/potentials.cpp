#include "vee/potentials.hpp"

#include "vee/errors.hpp"
#include "vee/matrix.hpp"

#include <algorithm>
#include <functional>

namespace vee {

namespace {

Rational sigma_of(const std::vector<Rational>& c) {
    Rational s(0);
    for (const auto& x : c) s += x;
    return s;
}

void check_an_params(const std::vector<Rational>& c, int kappa) {
    if (c.size() < 2) throw ParamError("potential needs parameters c0..cn with n >= 1");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].is_zero()) throw ParamError("potential: c" + std::to_string(i) + " must be non-zero");
    if (sigma_of(c).is_zero()) throw ParamError("potential: sigma = c0+...+cn must be non-zero");
    const int n = static_cast<int>(c.size()) - 1;
    if (kappa < 1 || kappa > n) throw ParamError("potential: kappa must lie in 1..n");
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace

MultiPoly deformed_power_sum(const VarsPtr& vars, const std::vector<Rational>& lambda, int s,
                             int stride, std::size_t first) {
    if (first + lambda.size() > vars->size()) throw InputError("power sum arity mismatch");
    MultiPoly p(vars);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].is_zero()) continue;
        p += MultiPoly::variable(vars, first + i, s * stride) * lambda[i];
    }
    return p;
}

MultiPoly power_sum_potential(const std::vector<MultiPoly>& psums, int kappa) {
    // psums[s-1] = p_s, s = 1..kappa+1
    if (static_cast<int>(psums.size()) < kappa + 1) throw InputError("need power sums up to kappa+1");
    const VarsPtr& vars = psums[0].vars();
    const int m = kappa + 1;
    std::vector<std::vector<MultiPoly>> mat(m, std::vector<MultiPoly>(m, MultiPoly(vars)));
    for (int i = 0; i < m; ++i) {
        mat[i][0] = psums[i];
        for (int j = 1; j < m; ++j) {
            if (j == i + 1)
                mat[i][j] = MultiPoly::constant(vars, Rational(i + 1));
            else if (j <= i)
                mat[i][j] = psums[i - j];
        }
    }
    Rational norm(mpz_class(kappa % 2 == 0 ? -1 : 1), factorial(kappa + 1));
    return poly_det(mat) * norm;
}

MultiPoly power_sum_potential_partition(const std::vector<MultiPoly>& psums, int kappa) {
    if (static_cast<int>(psums.size()) < kappa + 1) throw InputError("need power sums up to kappa+1");
    const VarsPtr& vars = psums[0].vars();
    MultiPoly f(vars);
    for (const auto& mu : partitions_of(kappa + 1)) {
        // z_mu = prod_j j^{m_j} m_j!
        mpz_class z = 1;
        for (std::size_t i = 0; i < mu.size();) {
            std::size_t j = i;
            while (j < mu.size() && mu[j] == mu[i]) ++j;
            int mult = static_cast<int>(j - i);
            mpz_class pw = 1;
            for (int t = 0; t < mult; ++t) pw *= mu[i];
            z *= pw * factorial(mult);
            i = j;
        }
        MultiPoly term = MultiPoly::constant(vars, Rational(mpz_class(mu.size() % 2 == 0 ? 1 : -1), z));
        for (int part : mu) term = term * psums[part - 1];
        f += term;
    }
    return f;
}

namespace {

std::vector<MultiPoly> an_power_sums(const std::vector<Rational>& c, int kappa, const VarsPtr& vars) {
    Rational sigma = sigma_of(c);
    std::vector<Rational> lambda;
    for (const auto& ci : c) lambda.push_back(Rational(kappa) * ci / sigma);
    std::vector<MultiPoly> psums;
    for (int s = 1; s <= kappa + 1; ++s) psums.push_back(deformed_power_sum(vars, lambda, s));
    return psums;
}

} // namespace

MultiPoly potential_an(const std::vector<Rational>& c, int kappa) {
    check_an_params(c, kappa);
    VarsPtr vars = make_vars("x", static_cast<int>(c.size()), 0);
    return power_sum_potential(an_power_sums(c, kappa, vars), kappa);
}

MultiPoly potential_an_partition(const std::vector<Rational>& c, int kappa) {
    check_an_params(c, kappa);
    VarsPtr vars = make_vars("x", static_cast<int>(c.size()), 0);
    return power_sum_potential_partition(an_power_sums(c, kappa, vars), kappa);
}

MultiPoly series_oracle_an(const std::vector<Rational>& c, int kappa) {
    check_an_params(c, kappa);
    VarsPtr vars = make_vars("x", static_cast<int>(c.size()), 0);
    auto psums = an_power_sums(c, kappa, vars);
    const int order = kappa + 1;
    // exponential of A(T) = -(p_1 T + p_2 T^2/2 + ...) truncated at T^order
    std::vector<MultiPoly> a(order + 1, MultiPoly(vars));
    for (int s = 1; s <= order; ++s) a[s] = psums[s - 1] * Rational(mpz_class(-1), mpz_class(s));
    std::vector<MultiPoly> exp_acc(order + 1, MultiPoly(vars));
    exp_acc[0] = MultiPoly::constant(vars, Rational(1));
    std::vector<MultiPoly> power = exp_acc; // A^k / k!
    for (int k = 1; k <= order; ++k) {
        std::vector<MultiPoly> next(order + 1, MultiPoly(vars));
        for (int d1 = 0; d1 <= order; ++d1) {
            if (power[d1].is_zero()) continue;
            for (int d2 = 1; d1 + d2 <= order; ++d2) {
                if (a[d2].is_zero()) continue;
                next[d1 + d2] += power[d1] * a[d2];
            }
        }
        Rational inv_k(mpz_class(1), mpz_class(k));
        for (auto& p : next) p *= inv_k;
        power = std::move(next);
        for (int d = 0; d <= order; ++d) exp_acc[d] += power[d];
    }
    return exp_acc[order];
}

MultiPoly potential_bn(const std::vector<Rational>& c, int k) {
    if (c.size() < 2) throw ParamError("potential_bn needs parameters c0..cn with n >= 1");
    const int n = static_cast<int>(c.size()) - 1;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].is_zero()) throw ParamError("potential_bn: c" + std::to_string(i) + " must be non-zero");
    Rational sigma = sigma_of(c);
    if (sigma.is_zero()) throw ParamError("potential_bn: sigma must be non-zero");
    if (k < 1 || k > n) throw ParamError("potential_bn: k must lie in 1..n");
    VarsPtr vars = make_vars("x", n);
    std::vector<Rational> lambda;
    for (int i = 1; i <= n; ++i) lambda.push_back(Rational(2 * k - 1) * c[i] / (Rational(2) * sigma));
    std::vector<MultiPoly> qsums;
    for (int s = 1; s <= k; ++s) qsums.push_back(deformed_power_sum(vars, lambda, s, /*stride=*/2));
    return power_sum_potential(qsums, k - 1);
}

MultiPoly reduce_to_subspace_an(const MultiPoly& F, const std::vector<Rational>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    if (static_cast<int>(F.nvars()) != n + 1) throw InputError("reduce_to_subspace_an arity mismatch");
    VarsPtr yvars = make_vars("y", n);
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly(yvars)); // x0 -> 0 after recentering along the diagonal
    for (int i = 0; i < n; ++i) images.push_back(MultiPoly::variable(yvars, i));
    return F.compose(yvars, images);
}

namespace {

MultiPoly vandermonde(const VarsPtr& vars) {
    MultiPoly v = MultiPoly::constant(vars, Rational(1));
    for (std::size_t i = 0; i < vars->size(); ++i)
        for (std::size_t j = i + 1; j < vars->size(); ++j)
            v = v * (MultiPoly::variable(vars, i) - MultiPoly::variable(vars, j));
    return v;
}

Rational jacobian_expected_constant(const std::vector<Rational>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    Rational sigma = sigma_of(c);
    Rational prod(1);
    for (const auto& ci : c) prod *= ci / sigma;
    prod *= Rational(factorial(n));
    if ((n * (n + 3) / 2) % 2 != 0) prod = -prod;
    return prod;
}

} // namespace

bool jacobian_identity_check(const std::vector<Rational>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    check_an_params(c, std::max(1, n));
    VarsPtr vars = make_vars("x", n + 1, 0);
    Rational sigma = sigma_of(c);
    std::vector<Rational> nu;
    for (const auto& ci : c) nu.push_back(ci / sigma);

    std::vector<std::vector<MultiPoly>> rows;
    MultiPoly p1 = deformed_power_sum(vars, nu, 1);
    std::vector<MultiPoly> row0;
    for (int j = 0; j <= n; ++j) row0.push_back(p1.derivative(j));
    rows.push_back(std::move(row0));
    for (int kappa = 1; kappa <= n; ++kappa) {
        MultiPoly f = potential_an(c, kappa);
        std::vector<MultiPoly> row;
        for (int j = 0; j <= n; ++j) row.push_back(f.derivative(j));
        rows.push_back(std::move(row));
    }
    MultiPoly expected = vandermonde(vars) * jacobian_expected_constant(c);
    return poly_det(rows) == expected;
}

bool jacobian_identity_check_at(const std::vector<Rational>& c, const std::vector<Rational>& point) {
    const int n = static_cast<int>(c.size()) - 1;
    check_an_params(c, std::max(1, n));
    if (point.size() != c.size()) throw InputError("evaluation point arity mismatch");
    VarsPtr vars = make_vars("x", n + 1, 0);
    Rational sigma = sigma_of(c);
    std::vector<Rational> nu;
    for (const auto& ci : c) nu.push_back(ci / sigma);

    RatMatrix m(n + 1, n + 1);
    MultiPoly p1 = deformed_power_sum(vars, nu, 1);
    for (int j = 0; j <= n; ++j) m.at(0, j) = p1.derivative(j).evaluate(point);
    for (int kappa = 1; kappa <= n; ++kappa) {
        MultiPoly f = potential_an(c, kappa);
        for (int j = 0; j <= n; ++j) m.at(kappa, j) = f.derivative(j).evaluate(point);
    }
    Rational vander(1);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vander *= point[i] - point[j];
    return determinant(m) == jacobian_expected_constant(c) * vander;
}

PotentialSet f4_potentials(const Rational& s) {
    if (s == Rational(-1))
        throw DegenerateFormError("f4 potentials: degenerate canonical form at s = -1", {});
    VarsPtr vars = make_vars("x", 4);
    auto inv = [&](int m) {
        MultiPoly sum(vars);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                MultiPoly xi = MultiPoly::variable(vars, i);
                MultiPoly xj = MultiPoly::variable(vars, j);
                sum += (xi - xj).pow(m) + (xi + xj).pow(m);
            }
        return sum;
    };
    MultiPoly i2 = inv(2), i6 = inv(6), i8 = inv(8), i12 = inv(12);
    Rational one(1);

    PotentialSet out;
    out.family = "f4";
    out.kappas = {1, 5, 7, 11};
    out.potentials.push_back(i2);
    out.potentials.push_back(i6 * (Rational(648) * (one + s)) - i2.pow(3) * (Rational(5) * (Rational(5) + Rational(4) * s)));
    out.potentials.push_back(i8 * (Rational(69984) * (one + s) * (one + s)) -
                             (i2 * i6) * (Rational(9072) * (Rational(7) + Rational(2) * s) * (one + s)) +
                             i2.pow(4) * (Rational(35) * (Rational(49) + Rational(46) * s + Rational(4) * s * s)));
    out.potentials.push_back(
        i12 * (Rational(10077696) * (one + s) * (one + s) * (one + s)) -
        (i8 * i2.pow(2)) * (Rational(384912) * (Rational(11) + Rational(8) * s) * (one + s) * (one + s)) +
        i6.pow(2) * (Rational(769824) * (Rational(4) * s - Rational(11)) * (one + s) * (one + s)) +
        (i6 * i2.pow(3)) *
            (Rational(7128) * (Rational(319) + Rational(376) * s + Rational(112) * s * s) * (one + s)) -
        i2.pow(6) * (Rational(11) * (Rational(3641) + Rational(7032) * s + Rational(4560) * s * s +
                                     Rational(1048) * s * s * s)));
    return out;
}

MultiPoly zaslavsky_potential(int n, int m) {
    if (n < 2 || m < 1 || m > n - 1) throw ParamError("zaslavsky_potential needs 1 <= m <= n-1");
    VarsPtr vars = make_vars("x", n);
    MultiPoly f = MultiPoly::constant(vars, Rational(1));
    for (int i = 0; i < n - m; ++i) f = f * MultiPoly::variable(vars, i);
    for (int i = n - m; i < n; ++i) f = f * MultiPoly::variable(vars, i, 2);
    return f;
}

PotentialSet dihedral_b2_potentials(const Rational& a2, const Rational& b2) {
    if (a2.is_zero() || b2.is_zero()) throw ParamError("dihedral_b2_potentials: a2 and b2 must be non-zero");
    if ((a2 + b2).is_zero()) throw ParamError("dihedral_b2_potentials: a2 + b2 must be non-zero");
    VarsPtr vars = make_vars("x", 2);
    MultiPoly x1 = MultiPoly::variable(vars, 0);
    MultiPoly x2 = MultiPoly::variable(vars, 1);
    MultiPoly f1 = x1 * x1 + x2 * x2;
    MultiPoly base = x1.pow(4) - (x1.pow(2) * x2.pow(2)) * Rational(6) + x2.pow(4);
    MultiPoly f2 = base * Rational(2) + f1.pow(2) * (Rational(6) * (a2 - b2) / (a2 + b2));
    PotentialSet out;
    out.family = "dihedral_b2";
    out.kappas = {1, 3};
    out.potentials = {std::move(f1), std::move(f2)};
    return out;
}

} // namespace vee
