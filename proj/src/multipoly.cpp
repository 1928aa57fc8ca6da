#include "vee/multipoly.hpp"

#include "vee/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vee {

VarsPtr make_vars(std::vector<std::string> names) {
    if (names.empty()) throw InputError("polynomial ring needs at least one variable");
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarsPtr make_vars(const std::string& stem, int count, int start) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(start + i));
    return make_vars(std::move(names));
}

bool same_ring(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same_ring(const VarsPtr& a, const VarsPtr& b) {
    if (!same_ring(a, b)) throw InputError("polynomials from different rings");
}

int exps_degree(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

bool GradedLexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = exps_degree(a), db = exps_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(VarsPtr vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exps(p.nvars(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarsPtr vars, std::size_t index, int power) {
    if (index >= vars->size()) throw InputError("variable index out of range");
    if (power < 0) throw InputError("negative exponent");
    MultiPoly p(std::move(vars));
    Exps e(p.nvars(), 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarsPtr vars, Exps exps, Rational c) {
    if (exps.size() != vars->size()) throw InputError("monomial exponent arity mismatch");
    for (int x : exps)
        if (x < 0) throw InputError("negative exponent");
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

MultiPoly MultiPoly::linear_form(VarsPtr vars, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != vars->size()) throw InputError("linear form arity mismatch");
    MultiPoly p(vars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exps e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return exps_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exps_degree(terms_.begin()->first);
    return exps_degree(terms_.rbegin()->first) == d;
}

Rational MultiPoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(vars_, o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_ring(a.vars_, b.vars_);
    MultiPoly r(a.vars_);
    const std::size_t n = a.nvars();
    MultiPoly::Exps e(n);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return same_ring(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw InputError("negative power");
    MultiPoly r = constant(vars_, Rational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars()) throw InputError("derivative variable out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::directional_derivative(const std::vector<Rational>& d) const {
    if (d.size() != nvars()) throw InputError("direction arity mismatch");
    MultiPoly r(vars_);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].is_zero()) continue;
        r += derivative(i) * d[i];
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw InputError("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const VarsPtr& target, const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars()) throw InputError("compose arity mismatch");
    for (const auto& im : images) require_same_ring(im.vars(), target);
    // memoized powers of each image
    std::vector<std::vector<MultiPoly>> pows(images.size());
    auto power = [&](std::size_t i, int k) -> const MultiPoly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, Rational(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::rename(const VarsPtr& target) const {
    if (target->size() != nvars()) throw InputError("rename arity mismatch");
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c);
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

LinDivmodResult divmod_linear(const MultiPoly& p, const MultiPoly& ell) {
    if (ell.total_degree() != 1 || !ell.is_homogeneous())
        throw InputError("divmod_linear needs a homogeneous linear divisor");
    std::size_t piv = 0;
    Rational pivc;
    for (const auto& [e, c] : ell.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) {
                piv = i;
                pivc = c;
                break;
            }
        break; // leading term decides the pivot
    }
    MultiPoly q(p.vars());
    MultiPoly rem = p;
    for (;;) {
        // gradlex-largest term involving the pivot variable
        const MultiPoly::Exps* best = nullptr;
        for (const auto& [e, c] : rem.terms())
            if (e[piv] > 0) {
                best = &e;
                break;
            }
        if (!best) break;
        MultiPoly::Exps e2 = *best;
        e2[piv] -= 1;
        Rational f = rem.coeff(*best) / pivc;
        MultiPoly t = MultiPoly::monomial(p.vars(), e2, f);
        q += t;
        rem -= t * ell;
    }
    return LinDivmodResult{std::move(q), std::move(rem)};
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw InputError("division by zero polynomial");
    MultiPoly q(p.vars());
    MultiPoly rem = p;
    const auto& dlead = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        MultiPoly::Exps e(rem.nvars());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        MultiPoly t = MultiPoly::monomial(p.vars(), e, rlead.second / dlead.second);
        q += t;
        rem -= t * d;
    }
    return q;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0 || n > 16) throw InputError("poly_det size unsupported");
    for (const auto& row : m)
        if (row.size() != n) throw InputError("poly_det needs a square matrix");
    const VarsPtr& vars = m[0][0].vars();
    // Laplace expansion; the minor is determined by its column mask since
    // row = n - popcount(mask).
    std::map<unsigned, MultiPoly> memo;
    std::function<MultiPoly(unsigned)> rec = [&](unsigned mask) -> MultiPoly {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
        MultiPoly acc(vars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            if (!m[row][c].is_zero()) {
                if (__builtin_popcount(mask) == 1) {
                    acc += sign > 0 ? m[row][c] : -m[row][c];
                } else {
                    MultiPoly t = m[row][c] * rec(mask & ~(1u << c));
                    acc += sign > 0 ? t : -t;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec((1u << n) - 1);
}

std::vector<MultiPoly::Exps> homogeneous_exponents(std::size_t n_vars, int degree) {
    if (degree < 0) throw InputError("negative degree");
    std::vector<MultiPoly::Exps> out;
    MultiPoly::Exps cur(n_vars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n_vars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int d = left; d >= 0; --d) {
            cur[i] = d;
            rec(i + 1, left - d);
        }
    };
    rec(0, degree);
    return out;
}

std::vector<MultiPoly> homogeneous_basis(const VarsPtr& vars, int degree) {
    std::vector<MultiPoly> out;
    for (auto& e : homogeneous_exponents(vars->size(), degree))
        out.push_back(MultiPoly::monomial(vars, e, Rational(1)));
    return out;
}

} // namespace vee
