#include "vee/veecheck.hpp"

#include "vee/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace vee {

RatMatrix canonical_form(const CovectorSystem& sys) {
    const int n = sys.dimension();
    RatMatrix g(n, n);
    for (const auto& cv : sys.covectors())
        for (int i = 0; i < n; ++i) {
            if (cv.direction[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                g.at(i, j) += cv.weight * Rational(cv.direction[i] * cv.direction[j]);
        }
    return g;
}

RatMatrix canonical_form_inverse(const CovectorSystem& sys) {
    RatMatrix g = canonical_form(sys);
    auto inv = inverse(g);
    if (!inv) throw DegenerateFormError("degenerate canonical form for '" + sys.name() + "'", kernel_basis(g));
    return *inv;
}

std::vector<Rational> vee_dual(const CovectorSystem& sys, std::size_t index) {
    if (index >= sys.size()) throw InputError("covector index out of range");
    RatMatrix gi = canonical_form_inverse(sys);
    std::vector<Rational> v(sys.dimension());
    for (int i = 0; i < sys.dimension(); ++i) v[i] = Rational(sys.covectors()[index].direction[i]);
    return mat_vec(gi, v);
}

std::vector<std::vector<Rational>> vee_duals(const CovectorSystem& sys) {
    RatMatrix gi = canonical_form_inverse(sys);
    std::vector<std::vector<Rational>> out;
    out.reserve(sys.size());
    for (const auto& cv : sys.covectors()) {
        std::vector<Rational> v(sys.dimension());
        for (int i = 0; i < sys.dimension(); ++i) v[i] = Rational(cv.direction[i]);
        out.push_back(mat_vec(gi, v));
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> rref_rows(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr) {
    RrefResult r = rref(m);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        std::vector<Rational> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = r.m.at(i, c);
        rows.push_back(std::move(row));
    }
    if (pivots) *pivots = r.pivots;
    return rows;
}

} // namespace

std::vector<Plane> enumerate_planes(const CovectorSystem& sys) {
    const int n = sys.dimension();
    const auto& cov = sys.covectors();
    std::map<std::vector<Rational>, Plane> planes; // key: flattened echelon rows
    for (std::size_t a = 0; a < cov.size(); ++a)
        for (std::size_t b = a + 1; b < cov.size(); ++b) {
            RatMatrix m(2, n);
            for (int c = 0; c < n; ++c) {
                m.at(0, c) = Rational(cov[a].direction[c]);
                m.at(1, c) = Rational(cov[b].direction[c]);
            }
            std::vector<std::size_t> piv;
            auto rows = rref_rows(m, &piv);
            std::vector<Rational> key;
            for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
            auto [it, inserted] = planes.try_emplace(key);
            if (inserted) {
                it->second.basis = rows;
                it->second.pivot0 = piv[0];
                it->second.pivot1 = piv[1];
            }
            it->second.members.push_back(a);
            it->second.members.push_back(b);
        }
    std::vector<Plane> out;
    for (auto& [key, pl] : planes) {
        std::sort(pl.members.begin(), pl.members.end());
        pl.members.erase(std::unique(pl.members.begin(), pl.members.end()), pl.members.end());
        out.push_back(std::move(pl));
    }
    return out;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rational> direction_rat(const WeightedCovector& cv) {
    std::vector<Rational> v(cv.direction.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(cv.direction[i]);
    return v;
}

std::string plane_label(const Plane& pl) {
    std::ostringstream os;
    os << "plane{";
    for (std::size_t i = 0; i < pl.members.size(); ++i) os << (i ? "," : "") << pl.members[i];
    os << "}";
    return os.str();
}

} // namespace

VeeReport vee_check(const CovectorSystem& sys) {
    if (sys.arrangement_only())
        throw InputError("system '" + sys.name() + "' carries arrangement-only (placeholder) weights");
    RatMatrix g = canonical_form(sys);
    auto ginv = inverse(g);
    if (!ginv) throw DegenerateFormError("degenerate canonical form for '" + sys.name() + "'", kernel_basis(g));

    VeeReport rep{false, g, {}, {}};
    const auto& cov = sys.covectors();
    bool all_ok = true;
    for (const auto& pl : enumerate_planes(sys)) {
        PlaneRecord rec;
        rec.covector_indices = pl.members;
        rec.multi_covector = pl.members.size() > 2;
        if (!rec.multi_covector) {
            const auto va = direction_rat(cov[pl.members[0]]);
            const auto vb = direction_rat(cov[pl.members[1]]);
            rec.passed = dot(va, mat_vec(*ginv, vb)).is_zero();
            if (!rec.passed)
                rep.failures.push_back(plane_label(pl) + ": duals of a two-covector plane are not orthogonal");
        } else {
            // restricted operator xi -> sum_b w_b (xi . G^{-1} v_b) v_b in the
            // echelon basis of the plane; must equal nu * Id
            Rational entries[2][2];
            for (int m = 0; m < 2; ++m) {
                std::vector<Rational> img(sys.dimension());
                for (std::size_t bi : pl.members) {
                    const auto vb = direction_rat(cov[bi]);
                    Rational coef = cov[bi].weight * dot(pl.basis[m], mat_vec(*ginv, vb));
                    for (int c = 0; c < sys.dimension(); ++c) img[c] += coef * vb[c];
                }
                entries[m][0] = img[pl.pivot0];
                entries[m][1] = img[pl.pivot1];
            }
            bool diag_ok = entries[0][0] == entries[1][1];
            bool off_ok = entries[0][1].is_zero() && entries[1][0].is_zero();
            rec.passed = diag_ok && off_ok;
            if (rec.passed)
                rec.nu = entries[0][0];
            else
                rep.failures.push_back(plane_label(pl) + ": restricted operator is not a multiple of the identity");
        }
        all_ok = all_ok && rec.passed;
        rep.planes.push_back(std::move(rec));
    }
    rep.is_vee_system = all_ok;
    return rep;
}

HolonomyReport holonomy_check(const CovectorSystem& sys) {
    if (sys.arrangement_only())
        throw InputError("system '" + sys.name() + "' carries arrangement-only (placeholder) weights");
    RatMatrix g = canonical_form(sys);
    auto ginv = inverse(g);
    if (!ginv) throw DegenerateFormError("degenerate canonical form for '" + sys.name() + "'", kernel_basis(g));

    const int n = sys.dimension();
    const auto& cov = sys.covectors();
    std::vector<RatMatrix> rho;
    rho.reserve(cov.size());
    for (const auto& cv : cov) {
        auto d = mat_vec(*ginv, direction_rat(cv));
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = cv.weight * d[i] * Rational(cv.direction[j]);
        rho.push_back(std::move(m));
    }

    HolonomyReport rep;
    rep.passes = true;
    auto planes = enumerate_planes(sys);
    for (std::size_t pi = 0; pi < planes.size(); ++pi) {
        RatMatrix s(n, n);
        for (std::size_t bi : planes[pi].members) s = s + rho[bi];
        for (std::size_t ai : planes[pi].members) {
            if (!(rho[ai] * s == s * rho[ai])) {
                rep.passes = false;
                rep.failing_planes.emplace_back(ai, pi);
            }
        }
    }
    return rep;
}

ProportionalityReport well_distributed_check(const CovectorSystem& sys, const RatMatrix& G) {
    if (G.rows() != static_cast<std::size_t>(sys.dimension()) || G.rows() != G.cols())
        throw InputError("reference form has wrong shape");
    if (!G.is_symmetric()) throw InputError("reference form is not symmetric");
    if (rank(G) != G.rows()) throw InputError("reference form is degenerate");
    RatMatrix g = canonical_form(sys);
    if (g.is_zero()) return {true, Rational(0)};
    Rational mu;
    bool found = false;
    for (std::size_t r = 0; r < G.rows() && !found; ++r)
        for (std::size_t c = 0; c < G.cols() && !found; ++c)
            if (!G.at(r, c).is_zero()) {
                mu = g.at(r, c) / G.at(r, c);
                found = true;
            }
    if (!found) return {false, std::nullopt};
    if (g == G.scaled(mu)) return {true, mu};
    return {false, std::nullopt};
}

std::vector<CovectorSystem> irreducible_components(const CovectorSystem& sys) {
    const int n = sys.dimension();
    const auto& cov = sys.covectors();
    // Components of the direct-sum decomposition are the connected components
    // of the underlying matroid: pick a greedy basis, expand every dependent
    // direction over it, and join each element with the basis elements in its
    // fundamental circuit.
    std::vector<std::size_t> basis_idx;
    RatMatrix basis_mat(cov.size(), n);
    for (std::size_t i = 0; i < cov.size(); ++i) {
        for (int c = 0; c < n; ++c) basis_mat.at(basis_idx.size(), c) = Rational(cov[i].direction[c]);
        RatMatrix head(basis_idx.size() + 1, n);
        for (std::size_t r = 0; r <= basis_idx.size(); ++r)
            for (int c = 0; c < n; ++c) head.at(r, c) = basis_mat.at(r, c);
        if (rank(head) == basis_idx.size() + 1) basis_idx.push_back(i);
    }

    std::vector<std::size_t> parent(cov.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    const std::size_t k = basis_idx.size();
    for (std::size_t j = 0; j < cov.size(); ++j) {
        if (std::find(basis_idx.begin(), basis_idx.end(), j) != basis_idx.end()) continue;
        // solve basis^T x = v_j
        RatMatrix aug(n, k + 1);
        for (std::size_t b = 0; b < k; ++b)
            for (int r = 0; r < n; ++r) aug.at(r, b) = Rational(cov[basis_idx[b]].direction[r]);
        for (int r = 0; r < n; ++r) aug.at(r, k) = Rational(cov[j].direction[r]);
        RrefResult rr = rref(aug);
        for (std::size_t row = 0; row < rr.rank(); ++row) {
            if (rr.pivots[row] == k) throw InputError("inconsistent expansion"); // cannot happen
            if (!rr.m.at(row, k).is_zero()) unite(j, basis_idx[rr.pivots[row]]);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < cov.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [root, g] : by_root) groups.push_back(std::move(g));
    std::sort(groups.begin(), groups.end());

    std::vector<CovectorSystem> out;
    for (const auto& g : groups) {
        RatMatrix m(g.size(), n);
        for (std::size_t r = 0; r < g.size(); ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Rational(cov[g[r]].direction[c]);
        std::vector<std::size_t> pivots;
        auto basis = rref_rows(m, &pivots);
        const std::size_t k = basis.size();
        std::vector<WeightedCovector> restricted;
        for (std::size_t idx : g) {
            // coordinates in the echelon basis are read off at the pivots
            std::vector<Rational> coords(k);
            for (std::size_t bi = 0; bi < k; ++bi) coords[bi] = Rational(cov[idx].direction[pivots[bi]]);
            // rebuild as integers: clear denominators, then primitivize
            mpz_class lcm = 1;
            for (const auto& x : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
            std::vector<long long> dir(k);
            for (std::size_t bi = 0; bi < k; ++bi) {
                mpz_class z = coords[bi].num() * (lcm / coords[bi].den());
                if (!z.fits_slong_p()) throw InputError("component coordinate overflow");
                dir[bi] = z.get_si();
            }
            long long content = normalize_direction(dir);
            // direction scale folds into the weight as its square
            Rational scale = Rational(content, 1) / Rational(mpz_class(lcm));
            restricted.push_back({dir, cov[idx].weight * scale * scale});
        }
        out.push_back(CovectorSystem::make(static_cast<int>(k), std::move(restricted),
                                           sys.name().empty() ? "component" : sys.name() + " component"));
    }
    return out;
}

} // namespace vee
