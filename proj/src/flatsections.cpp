#include "vee/flatsections.hpp"

#include "vee/errors.hpp"
#include "vee/veecheck.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace vee {

bool PolyVectorField::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<int> PolyVectorField::homogeneous_degree() const {
    int deg = -1;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return std::nullopt;
        if (deg == -1)
            deg = c.total_degree();
        else if (deg != c.total_degree())
            return std::nullopt;
    }
    if (deg == -1) return std::nullopt;
    return deg;
}

VarsPtr ambient_vars(const CovectorSystem& sys) { return make_vars("x", sys.dimension()); }

namespace {

void require_weights(const CovectorSystem& sys) {
    if (sys.arrangement_only())
        throw InputError("system '" + sys.name() + "' carries arrangement-only (placeholder) weights");
}

MultiPoly covector_form(const VarsPtr& vars, const WeightedCovector& cv) {
    std::vector<Rational> coeffs(cv.direction.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rational(cv.direction[i]);
    return MultiPoly::linear_form(vars, coeffs);
}

// Sparse linear system indexed by (block, i, j, monomial) rows.
using RowKey = std::tuple<int, int, int, MultiPoly::Exps>;

struct LinearSystem {
    std::map<RowKey, std::map<std::size_t, Rational>> rows;

    void add_poly(int block, int i, int j, std::size_t col, const MultiPoly& p) {
        for (const auto& [e, c] : p.terms()) {
            auto& row = rows[RowKey{block, i, j, e}];
            auto [it, inserted] = row.try_emplace(col, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) row.erase(it);
            }
        }
    }

    std::vector<std::vector<Rational>> solve(std::size_t n_cols) const {
        if (rows.empty()) {
            // no constraints: the whole space
            std::vector<std::vector<Rational>> basis(n_cols, std::vector<Rational>(n_cols));
            for (std::size_t i = 0; i < n_cols; ++i) basis[i][i] = Rational(1);
            return basis;
        }
        RatMatrix m(rows.size(), n_cols);
        std::size_t r = 0;
        for (const auto& [key, row] : rows) {
            for (const auto& [col, c] : row) m.at(r, col) = c;
            ++r;
        }
        return kernel_basis(m);
    }
};

struct DualData {
    std::vector<std::vector<Rational>> duals;
    std::vector<MultiPoly> forms;
};

DualData dual_data(const CovectorSystem& sys, const VarsPtr& vars) {
    DualData d;
    d.duals = vee_duals(sys);
    for (const auto& cv : sys.covectors()) d.forms.push_back(covector_form(vars, cv));
    return d;
}

MultiPoly from_coeffs(const VarsPtr& vars, const std::vector<MultiPoly::Exps>& basis,
                      const std::vector<Rational>& coeffs) {
    MultiPoly p(vars);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) p += MultiPoly::monomial(vars, basis[k], coeffs[k]);
    return p;
}

PolyVectorField gradient_section(const CovectorSystem& sys, const RatMatrix& ginv, const MultiPoly& F) {
    const int n = sys.dimension();
    std::vector<MultiPoly> grad;
    grad.reserve(n);
    for (int i = 0; i < n; ++i) grad.push_back(F.derivative(i));
    PolyVectorField psi;
    for (int i = 0; i < n; ++i) {
        MultiPoly comp(F.vars());
        for (int j = 0; j < n; ++j) {
            const Rational& gij = ginv.at(i, j);
            if (!gij.is_zero()) comp += grad[j] * gij;
        }
        psi.components.push_back(std::move(comp));
    }
    return psi;
}

} // namespace

FlatBasis flat_solve(const CovectorSystem& sys, int kappa) {
    require_weights(sys);
    if (kappa < 1) throw InputError("flat_solve needs kappa >= 1");
    const int n = sys.dimension();
    VarsPtr vars = ambient_vars(sys);
    RatMatrix ginv = canonical_form_inverse(sys);
    DualData dd = dual_data(sys, vars);
    const auto& cov = sys.covectors();

    auto basis = homogeneous_exponents(n, kappa + 1);
    LinearSystem ls;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        MultiPoly m = MultiPoly::monomial(vars, basis[k], Rational(1));
        std::vector<MultiPoly> quotients;
        quotients.reserve(cov.size());
        for (std::size_t a = 0; a < cov.size(); ++a) {
            auto [q, r] = divmod_linear(m.directional_derivative(dd.duals[a]), dd.forms[a]);
            ls.add_poly(0, static_cast<int>(a), 0, k, r);
            quotients.push_back(std::move(q));
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                MultiPoly p = m.derivative(i).derivative(j);
                for (std::size_t a = 0; a < cov.size(); ++a) {
                    Rational c = cov[a].weight * Rational(cov[a].direction[i] * cov[a].direction[j]) * Rational(kappa);
                    if (!c.is_zero()) p -= quotients[a] * c;
                }
                ls.add_poly(1, i, j, k, p);
            }
    }

    FlatBasis fb;
    fb.kappa = kappa;
    for (const auto& sol : ls.solve(basis.size())) {
        MultiPoly F = from_coeffs(vars, basis, sol);
        fb.sections.push_back(gradient_section(sys, ginv, F));
        fb.potentials.push_back(std::move(F));
    }
    return fb;
}

FlatBasis flat_solve_raw(const CovectorSystem& sys, int kappa) {
    require_weights(sys);
    if (kappa < 1) throw InputError("flat_solve_raw needs kappa >= 1");
    const int n = sys.dimension();
    VarsPtr vars = ambient_vars(sys);
    (void)canonical_form_inverse(sys);
    DualData dd = dual_data(sys, vars);
    const auto& cov = sys.covectors();

    auto mono = homogeneous_exponents(n, kappa);
    const std::size_t M = mono.size();
    // column (comp, m) -> comp * M + m
    LinearSystem ls;
    for (std::size_t m = 0; m < M; ++m) {
        MultiPoly mm = MultiPoly::monomial(vars, mono[m], Rational(1));
        std::vector<LinDivmodResult> dm;
        dm.reserve(cov.size());
        for (std::size_t a = 0; a < cov.size(); ++a) dm.push_back(divmod_linear(mm, dd.forms[a]));
        for (int comp = 0; comp < n; ++comp) {
            std::size_t col = static_cast<std::size_t>(comp) * M + m;
            for (std::size_t a = 0; a < cov.size(); ++a) {
                Rational va = Rational(cov[a].direction[comp]);
                if (va.is_zero()) continue;
                // tangency block: v . psi divisible by the form
                ls.add_poly(0, static_cast<int>(a), 0, col, dm[a].remainder * va);
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    MultiPoly p(vars);
                    if (comp == j) p += mm.derivative(i);
                    for (std::size_t a = 0; a < cov.size(); ++a) {
                        Rational c = cov[a].weight * Rational(cov[a].direction[i]) * Rational(cov[a].direction[comp]) *
                                     dd.duals[a][j] * Rational(kappa);
                        if (!c.is_zero()) p -= dm[a].quotient * c;
                    }
                    ls.add_poly(1, i, j, col, p);
                }
        }
    }

    FlatBasis fb;
    fb.kappa = kappa;
    for (const auto& sol : ls.solve(static_cast<std::size_t>(n) * M)) {
        PolyVectorField psi;
        for (int comp = 0; comp < n; ++comp) {
            std::vector<Rational> coeffs(sol.begin() + static_cast<std::size_t>(comp) * M,
                                         sol.begin() + static_cast<std::size_t>(comp + 1) * M);
            psi.components.push_back(from_coeffs(vars, mono, coeffs));
        }
        fb.sections.push_back(std::move(psi));
    }
    return fb;
}

bool epd_check(const CovectorSystem& sys, const MultiPoly& F, int kappa) {
    require_weights(sys);
    if (kappa < 1) throw InputError("epd_check needs kappa >= 1");
    if (!F.is_homogeneous()) throw InputError("epd_check needs a homogeneous polynomial");
    const int n = sys.dimension();
    if (static_cast<int>(F.nvars()) != n) throw InputError("epd_check variable arity mismatch");
    if (F.is_zero()) return true;
    const VarsPtr& vars = F.vars();
    RatMatrix ginv = canonical_form_inverse(sys);
    const auto& cov = sys.covectors();

    std::vector<MultiPoly> quotients;
    quotients.reserve(cov.size());
    for (std::size_t a = 0; a < cov.size(); ++a) {
        std::vector<Rational> vr(n);
        for (int i = 0; i < n; ++i) vr[i] = Rational(cov[a].direction[i]);
        std::vector<Rational> dual = mat_vec(ginv, vr);
        auto [q, r] = divmod_linear(F.directional_derivative(dual), MultiPoly::linear_form(vars, vr));
        if (!r.is_zero()) return false;
        quotients.push_back(std::move(q));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            MultiPoly p = F.derivative(i).derivative(j);
            for (std::size_t a = 0; a < cov.size(); ++a) {
                Rational c = cov[a].weight * Rational(cov[a].direction[i] * cov[a].direction[j]) * Rational(kappa);
                if (!c.is_zero()) p -= quotients[a] * c;
            }
            if (!p.is_zero()) return false;
        }
    return true;
}

SectionProperties section_properties(const CovectorSystem& sys, const PolyVectorField& psi) {
    const int n = sys.dimension();
    if (static_cast<int>(psi.components.size()) != n)
        throw InputError("section has wrong number of components");
    const VarsPtr& vars = psi.components[0].vars();
    RatMatrix g = canonical_form(sys);

    SectionProperties props;
    props.degree = psi.homogeneous_degree();

    // lower the field with the canonical form
    std::vector<MultiPoly> phi;
    for (int i = 0; i < n; ++i) {
        MultiPoly comp(vars);
        for (int j = 0; j < n; ++j) {
            const Rational& gij = g.at(i, j);
            if (!gij.is_zero()) comp += psi.components[j] * gij;
        }
        phi.push_back(std::move(comp));
    }
    bool symmetric = true;
    for (int i = 0; i < n && symmetric; ++i)
        for (int j = i + 1; j < n && symmetric; ++j)
            if (phi[i].derivative(j) != phi[j].derivative(i)) symmetric = false;
    if (symmetric) {
        // radial integration of the exact 1-form
        MultiPoly p(vars);
        for (int i = 0; i < n; ++i) p += phi[i] * MultiPoly::variable(vars, i);
        MultiPoly F(vars);
        for (const auto& [e, c] : p.terms()) {
            int d = 0;
            for (int x : e) d += x;
            F += MultiPoly::monomial(vars, e, c / Rational(d));
        }
        bool exact = true;
        for (int i = 0; i < n; ++i)
            if (F.derivative(i) != phi[i]) exact = false;
        if (exact) {
            props.is_gradient = true;
            props.potential = std::move(F);
        }
    }

    props.is_logarithmic = true;
    for (const auto& cv : sys.covectors()) {
        MultiPoly contraction(vars);
        for (int i = 0; i < n; ++i)
            if (cv.direction[i] != 0) contraction += psi.components[i] * Rational(cv.direction[i]);
        auto [q, r] = divmod_linear(contraction, covector_form(vars, cv));
        (void)q;
        if (!r.is_zero()) {
            props.is_logarithmic = false;
            break;
        }
    }
    return props;
}

QuasiInvariantBasis quasi_invariant_dim(const CovectorSystem& sys, int degree) {
    require_weights(sys);
    if (degree < 0) throw InputError("quasi_invariant_dim needs degree >= 0");
    const int n = sys.dimension();
    VarsPtr vars = ambient_vars(sys);
    (void)canonical_form_inverse(sys);
    DualData dd = dual_data(sys, vars);
    const auto& cov = sys.covectors();

    auto basis = homogeneous_exponents(n, degree);
    LinearSystem ls;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        MultiPoly m = MultiPoly::monomial(vars, basis[k], Rational(1));
        for (std::size_t a = 0; a < cov.size(); ++a) {
            auto [q, r] = divmod_linear(m.directional_derivative(dd.duals[a]), dd.forms[a]);
            (void)q;
            ls.add_poly(0, static_cast<int>(a), 0, k, r);
        }
    }
    QuasiInvariantBasis out;
    for (const auto& sol : ls.solve(basis.size())) out.basis.push_back(from_coeffs(vars, basis, sol));
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

MultiPoly euler_potential(const CovectorSystem& sys, const VarsPtr& vars) {
    RatMatrix g = canonical_form(sys);
    const int n = sys.dimension();
    MultiPoly F(vars);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& gij = g.at(i, j);
            if (!gij.is_zero())
                F += MultiPoly::variable(vars, i) * MultiPoly::variable(vars, j) * (gij / Rational(2));
        }
    return F;
}

namespace {

// nondecreasing degree multisets of size n, sum = target, multiplicity
// bounded by the flat dimension at each degree
void enumerate_multisets(const std::map<int, int>& dims, int n, int target, int min_deg,
                         std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& visit,
                         bool& done) {
    if (done) return;
    if (static_cast<int>(cur.size()) == n) {
        if (target == 0 && visit(cur)) done = true;
        return;
    }
    int remaining = n - static_cast<int>(cur.size());
    for (int d = min_deg; d * remaining <= target; ++d) {
        auto it = dims.find(d);
        if (it == dims.end() || it->second == 0) continue;
        int used = 0;
        for (auto r = cur.rbegin(); r != cur.rend() && *r == d; ++r) ++used;
        if (used >= it->second) continue;
        cur.push_back(d);
        enumerate_multisets(dims, n, target - d, d, cur, visit, done);
        cur.pop_back();
        if (done) return;
    }
}

} // namespace

HarmonicResult harmonic_test(const CovectorSystem& sys) {
    require_weights(sys);
    const int n = sys.dimension();
    const int count = static_cast<int>(sys.size());
    const int kmax = count - (n - 1);

    HarmonicResult res;
    std::map<int, FlatBasis> solved;
    for (int kappa = 1; kappa <= kmax; ++kappa) {
        solved.emplace(kappa, flat_solve(sys, kappa));
        res.dimension_table[kappa] = static_cast<int>(solved.at(kappa).sections.size());
    }

    auto try_multiset = [&](const std::vector<int>& degrees) -> bool {
        // per-degree choice of basis sections, greedy with backtracking
        std::vector<std::pair<int, int>> slots; // (degree, multiplicity)
        for (int d : degrees) {
            if (!slots.empty() && slots.back().first == d)
                ++slots.back().second;
            else
                slots.emplace_back(d, 1);
        }
        std::vector<std::vector<std::size_t>> chosen(slots.size());
        std::function<bool(std::size_t)> pick = [&](std::size_t si) -> bool {
            if (si == slots.size()) {
                std::vector<std::vector<MultiPoly>> rows;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    for (std::size_t idx : chosen[s])
                        rows.push_back(solved.at(slots[s].first).sections[idx].components);
                if (poly_det(rows).is_zero()) return false;
                res.is_harmonic = true;
                res.degrees = degrees;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    for (std::size_t idx : chosen[s]) {
                        res.sections.push_back(solved.at(slots[s].first).sections[idx]);
                        res.potentials.push_back(solved.at(slots[s].first).potentials[idx]);
                    }
                return true;
            }
            auto [deg, mult] = slots[si];
            const auto& fb = solved.at(deg);
            std::vector<std::size_t> comb(mult);
            std::function<bool(int, std::size_t)> combos = [&](int pos, std::size_t start) -> bool {
                if (pos == mult) {
                    chosen[si] = comb;
                    return pick(si + 1);
                }
                for (std::size_t i = start; i < fb.sections.size(); ++i) {
                    comb[pos] = i;
                    if (combos(pos + 1, i + 1)) return true;
                }
                return false;
            };
            return combos(0, 0);
        };
        return pick(0);
    };

    std::vector<int> cur;
    bool done = false;
    enumerate_multisets(res.dimension_table, n, count, 1, cur, try_multiset, done);
    res.search_exhausted = true;
    return res;
}

} // namespace vee
