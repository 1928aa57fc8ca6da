#include "vee/arrangements.hpp"

#include "vee/errors.hpp"
#include "vee/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vee {

Arrangement arrangement_of(const CovectorSystem& sys) {
    Arrangement arr;
    arr.dimension = sys.dimension();
    for (const auto& cv : sys.covectors()) arr.directions.push_back(cv.direction);
    return arr;
}

namespace {

using EchelonKey = std::vector<Rational>; // flattened echelon rows

struct RawElement {
    std::vector<std::vector<Rational>> rows;
};

EchelonKey key_of(const std::vector<std::vector<Rational>>& rows) {
    EchelonKey k;
    for (const auto& r : rows) k.insert(k.end(), r.begin(), r.end());
    return k;
}

// echelon rows of (element rows + one direction); empty if rank does not grow
std::vector<std::vector<Rational>> extend_element(const std::vector<std::vector<Rational>>& rows,
                                                  const std::vector<long long>& dir, int dim) {
    RatMatrix m(rows.size() + 1, dim);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = rows[r][c];
    for (int c = 0; c < dim; ++c) m.at(rows.size(), c) = Rational(dir[c]);
    RrefResult rr = rref(m);
    if (rr.rank() != rows.size() + 1) return {};
    std::vector<std::vector<Rational>> out(rr.rank(), std::vector<Rational>(dim));
    for (std::size_t r = 0; r < rr.rank(); ++r)
        for (int c = 0; c < dim; ++c) out[r][c] = rr.m.at(r, c);
    return out;
}

// does the subspace cut by sup's equations contain the one cut by sub's?
bool subspace_contains(const std::vector<std::vector<Rational>>& sup_rows,
                       const std::vector<std::vector<Rational>>& sub_rows, int dim) {
    if (sup_rows.empty()) return true;
    if (sup_rows.size() > sub_rows.size()) return false;
    // every equation of sup must be a combination of sub's equations
    RatMatrix m(sub_rows.size() + 1, dim);
    for (std::size_t r = 0; r < sub_rows.size(); ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = sub_rows[r][c];
    for (const auto& row : sup_rows) {
        for (int c = 0; c < dim; ++c) m.at(sub_rows.size(), c) = row[c];
        if (rank(m) != sub_rows.size()) return false;
    }
    return true;
}

} // namespace

IntersectionLattice intersection_lattice(const Arrangement& arr) {
    const int dim = arr.dimension;
    IntersectionLattice lat;
    lat.dimension = dim;

    std::vector<std::map<EchelonKey, RawElement>> levels(1);
    levels[0].emplace(EchelonKey{}, RawElement{});
    for (int codim = 0; static_cast<std::size_t>(codim) < levels.size(); ++codim) {
        std::map<EchelonKey, RawElement> next;
        for (const auto& [key, elem] : levels[codim]) {
            for (const auto& dir : arr.directions) {
                auto rows = extend_element(elem.rows, dir, dim);
                if (rows.empty()) continue;
                EchelonKey key = key_of(rows);
                next.try_emplace(std::move(key), RawElement{std::move(rows)});
            }
        }
        if (!next.empty()) levels.push_back(std::move(next));
    }

    for (std::size_t codim = 0; codim < levels.size(); ++codim)
        for (const auto& [key, elem] : levels[codim]) {
            LatticeElement le;
            le.codim = static_cast<int>(codim);
            le.rows = elem.rows;
            lat.elements.push_back(std::move(le));
        }

    // Moebius values by downward recursion from the ambient space
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
        if (lat.elements[i].codim == 0) {
            lat.elements[i].mobius = 1;
            continue;
        }
        long long s = 0;
        for (std::size_t j = 0; j < lat.elements.size(); ++j) {
            if (lat.elements[j].codim >= lat.elements[i].codim) continue;
            if (subspace_contains(lat.elements[j].rows, lat.elements[i].rows, dim)) s += lat.elements[j].mobius;
        }
        lat.elements[i].mobius = -s;
    }
    return lat;
}

IntersectionLattice intersection_lattice(const CovectorSystem& sys) {
    return intersection_lattice(arrangement_of(sys));
}

MultiPoly poincare_polynomial(const IntersectionLattice& lat) {
    VarsPtr tvar = make_vars({"t"});
    MultiPoly pi(tvar);
    for (const auto& e : lat.elements) {
        Rational c = Rational(e.mobius) * (e.codim % 2 == 0 ? Rational(1) : Rational(-1));
        pi += MultiPoly::monomial(tvar, {e.codim}, c);
    }
    return pi;
}

std::optional<std::vector<long long>> factorization_check(const MultiPoly& p) {
    if (p.nvars() != 1) throw InputError("factorization_check takes a one-variable polynomial");
    const int deg = p.total_degree();
    if (deg < 0) throw InputError("factorization_check of the zero polynomial");
    std::vector<mpz_class> coeff(deg + 1); // coeff[i] of t^i
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_integer()) throw InputError("factorization_check needs integer coefficients");
        coeff[e[0]] = c.num();
    }
    if (coeff[0] != 1) throw InputError("factorization_check needs constant term 1");
    if (deg == 0) return std::vector<long long>{};

    // q(s) = s^deg p(-1/s) is monic with the factor multipliers as its roots
    std::vector<mpz_class> q(deg + 1);
    for (int i = 0; i <= deg; ++i) q[deg - i] = (i % 2 == 0 ? coeff[i] : -coeff[i]);

    std::vector<long long> roots;
    auto try_root = [&](const mpz_class& r) {
        for (;;) {
            // synthetic division by (s - r)
            std::vector<mpz_class> div(q.size() - 1);
            mpz_class acc = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                acc = acc * r + q[q.size() - 1 - i];
                if (i + 1 < q.size()) div[q.size() - 2 - i] = acc;
            }
            if (acc != 0) break;
            if (!r.fits_slong_p()) throw InputError("factor out of range");
            roots.push_back(r.get_si());
            q = std::move(div);
            if (q.size() == 1) break;
        }
    };

    while (q.size() > 1) {
        mpz_class c0 = q[0];
        if (c0 == 0) {
            try_root(0);
            continue;
        }
        bool found = false;
        mpz_class limit = abs(c0);
        for (mpz_class r = 1; r <= limit && !found; ++r) {
            if (c0 % r != 0) continue;
            std::size_t before = roots.size();
            try_root(r);
            found = roots.size() > before;
        }
        if (!found) return std::nullopt; // no further nonnegative integer root
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

MultiPoly direction_form(const VarsPtr& vars, const std::vector<long long>& dir) {
    std::vector<Rational> coeffs(dir.size());
    for (std::size_t i = 0; i < dir.size(); ++i) coeffs[i] = Rational(dir[i]);
    return MultiPoly::linear_form(vars, coeffs);
}

} // namespace

MultiPoly defining_polynomial(const CovectorSystem& sys, const VarsPtr& vars) {
    MultiPoly q = MultiPoly::constant(vars, Rational(1));
    for (const auto& cv : sys.covectors()) q = q * direction_form(vars, cv.direction);
    return q;
}

bool is_logarithmic(const CovectorSystem& sys, const PolyVectorField& field) {
    const int n = sys.dimension();
    if (static_cast<int>(field.components.size()) != n)
        throw InputError("field has wrong number of components");
    const VarsPtr& vars = field.components[0].vars();
    for (const auto& cv : sys.covectors()) {
        MultiPoly contraction(vars);
        for (int i = 0; i < n; ++i)
            if (cv.direction[i] != 0) contraction += field.components[i] * Rational(cv.direction[i]);
        if (contraction.is_zero()) continue;
        auto dm = divmod_linear(contraction, direction_form(vars, cv.direction));
        if (!dm.remainder.is_zero()) return false;
    }
    return true;
}

FreenessCertificate saito_criterion(const CovectorSystem& sys, const std::vector<PolyVectorField>& fields) {
    const int n = sys.dimension();
    if (static_cast<int>(fields.size()) != n)
        throw InputError("saito_criterion needs exactly dimension-many fields");
    FreenessCertificate cert;
    cert.fields = fields;
    const VarsPtr& vars = fields[0].components.at(0).vars();
    for (const auto& f : fields) {
        auto deg = f.homogeneous_degree();
        if (!deg) throw InputError("saito_criterion needs homogeneous fields");
        cert.degrees.push_back(*deg);
    }
    for (const auto& f : fields)
        if (!is_logarithmic(sys, f)) {
            cert.reason = "a field is not logarithmic";
            return cert;
        }
    long long degsum = std::accumulate(cert.degrees.begin(), cert.degrees.end(), 0LL);
    if (degsum != static_cast<long long>(sys.size())) {
        cert.reason = "degrees sum to " + std::to_string(degsum) + ", expected " + std::to_string(sys.size());
        return cert;
    }
    std::vector<std::vector<MultiPoly>> m;
    for (const auto& f : fields) m.push_back(f.components);
    MultiPoly det = poly_det(m);
    MultiPoly q = defining_polynomial(sys, vars);
    auto ratio = exact_divide(det, q);
    if (!ratio || ratio->is_zero() || ratio->total_degree() != 0) {
        cert.reason = "determinant is not a nonzero constant multiple of the defining polynomial";
        return cert;
    }
    cert.det_ratio = ratio->leading_coeff();
    cert.valid = true;
    return cert;
}

CovectorSystem restrict_arrangement(const CovectorSystem& sys, std::size_t index) {
    if (index >= sys.size()) throw InputError("hyperplane index out of range");
    const int n = sys.dimension();
    // basis of the hyperplane: canonical kernel of its normal
    RatMatrix normal(1, n);
    for (int c = 0; c < n; ++c) normal.at(0, c) = Rational(sys.covectors()[index].direction[c]);
    auto basis = kernel_basis(normal); // n-1 vectors
    const std::size_t k = basis.size();

    std::vector<WeightedCovector> restricted;
    std::vector<std::vector<long long>> seen;
    for (std::size_t a = 0; a < sys.size(); ++a) {
        if (a == index) continue;
        std::vector<Rational> coords(k);
        bool zero = true;
        for (std::size_t b = 0; b < k; ++b) {
            Rational s(0);
            for (int c = 0; c < n; ++c) s += Rational(sys.covectors()[a].direction[c]) * basis[b][c];
            coords[b] = s;
            zero = zero && s.is_zero();
        }
        if (zero) continue; // parallel image collapses (cannot happen for distinct directions)
        mpz_class lcm = 1;
        for (const auto& x : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
        std::vector<long long> dir(k);
        for (std::size_t b = 0; b < k; ++b) {
            mpz_class z = coords[b].num() * (lcm / coords[b].den());
            if (!z.fits_slong_p()) throw InputError("restricted direction overflow");
            dir[b] = z.get_si();
        }
        normalize_direction(dir);
        if (std::find(seen.begin(), seen.end(), dir) != seen.end()) continue;
        seen.push_back(dir);
        restricted.push_back({dir, Rational(1)});
    }
    return CovectorSystem::make(static_cast<int>(k), std::move(restricted),
                                sys.name() + " | restricted", /*arrangement_only=*/true);
}

Arrangement delete_hyperplane(const Arrangement& arr, std::size_t index) {
    if (index >= arr.directions.size()) throw InputError("hyperplane index out of range");
    Arrangement out;
    out.dimension = arr.dimension;
    for (std::size_t i = 0; i < arr.directions.size(); ++i)
        if (i != index) out.directions.push_back(arr.directions[i]);
    return out;
}

Arrangement restrict_hyperplane(const Arrangement& arr, std::size_t index) {
    if (index >= arr.directions.size()) throw InputError("hyperplane index out of range");
    const int n = arr.dimension;
    RatMatrix normal(1, n);
    for (int c = 0; c < n; ++c) normal.at(0, c) = Rational(arr.directions[index][c]);
    auto basis = kernel_basis(normal);
    const std::size_t k = basis.size();
    Arrangement out;
    out.dimension = static_cast<int>(k);
    for (std::size_t a = 0; a < arr.directions.size(); ++a) {
        if (a == index) continue;
        std::vector<Rational> coords(k);
        bool zero = true;
        for (std::size_t b = 0; b < k; ++b) {
            Rational s(0);
            for (int c = 0; c < n; ++c) s += Rational(arr.directions[a][c]) * basis[b][c];
            coords[b] = s;
            zero = zero && s.is_zero();
        }
        if (zero) continue;
        mpz_class lcm = 1;
        for (const auto& x : coords) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
        std::vector<long long> dir(k);
        for (std::size_t b = 0; b < k; ++b) {
            mpz_class z = coords[b].num() * (lcm / coords[b].den());
            if (!z.fits_slong_p()) throw InputError("restricted direction overflow");
            dir[b] = z.get_si();
        }
        normalize_direction(dir);
        if (std::find(out.directions.begin(), out.directions.end(), dir) == out.directions.end())
            out.directions.push_back(dir);
    }
    std::sort(out.directions.begin(), out.directions.end());
    return out;
}

} // namespace vee
