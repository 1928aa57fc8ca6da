#include "vee/families.hpp"

#include "vee/errors.hpp"

#include <sstream>

namespace vee {

namespace {

struct Builder {
    int n;
    std::vector<WeightedCovector> covs;
    int dropped = 0;

    explicit Builder(int dim) : n(dim) {}

    void add(std::vector<long long> dir, Rational w) {
        if (w.is_zero()) {
            ++dropped;
            return;
        }
        normalize_direction(dir);
        covs.push_back({std::move(dir), std::move(w)});
    }

    std::vector<long long> unit(int i) const {
        std::vector<long long> v(n, 0);
        v[i] = 1;
        return v;
    }

    std::vector<long long> pair(int i, int j, long long si, long long sj) const {
        std::vector<long long> v(n, 0);
        v[i] = si;
        v[j] = sj;
        return v;
    }

    CovectorSystem finish(std::string name) const {
        if (dropped > 0) {
            std::ostringstream os;
            os << name << " [dropped " << dropped << " zero-weight covector" << (dropped > 1 ? "s" : "") << "]";
            name = os.str();
        }
        return CovectorSystem::make(n, covs, std::move(name));
    }
};

std::string rat_list(const std::vector<Rational>& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].str();
    return os.str();
}

Rational sigma_of(const std::vector<Rational>& c) {
    Rational s(0);
    for (const auto& x : c) s += x;
    return s;
}

void check_an_bn_params(const std::vector<Rational>& c, const char* fam) {
    if (c.size() < 2) throw ParamError(std::string(fam) + " needs parameters c0..cn with n >= 1");
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].is_zero())
            throw ParamError(std::string(fam) + ": c" + std::to_string(i) + " must be non-zero");
    if (sigma_of(c).is_zero())
        throw ParamError(std::string(fam) + ": degenerate canonical form (sigma = c0+...+cn = 0)");
}

} // namespace

CovectorSystem instantiate_an(const std::vector<Rational>& c) {
    check_an_bn_params(c, "an");
    if (c[0].is_zero()) throw ParamError("an: c0 must be non-zero");
    const int n = static_cast<int>(c.size()) - 1;
    Builder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.add(b.pair(i - 1, j - 1, 1, -1), c[i] * c[j]);
    for (int i = 1; i <= n; ++i) b.add(b.unit(i - 1), c[0] * c[i]);
    return b.finish("an(" + rat_list(c) + ")");
}

CovectorSystem instantiate_bn(const std::vector<Rational>& c) {
    check_an_bn_params(c, "bn");
    const int n = static_cast<int>(c.size()) - 1;
    Builder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (long long s : {1, -1}) b.add(b.pair(i - 1, j - 1, 1, s), c[i] * c[j]);
    for (int i = 1; i <= n; ++i) b.add(b.unit(i - 1), Rational(2) * c[i] * (c[i] + c[0]));
    return b.finish("bn(" + rat_list(c) + ")");
}

CovectorSystem instantiate_f4(const Rational& s) {
    Builder b(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (long long sg : {1, -1}) b.add(b.pair(i, j, 1, sg), Rational(1));
    for (int i = 0; i < 4; ++i) b.add(b.unit(i), Rational(2) * s);
    for (long long s2 : {1, -1})
        for (long long s3 : {1, -1})
            for (long long s4 : {1, -1}) b.add({1, s2, s3, s4}, s / Rational(2));
    return b.finish("f4(s=" + s.str() + ")");
}

CovectorSystem instantiate_f3(const Rational& s) {
    Builder b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (long long sg : {1, -1}) b.add(b.pair(i, j, 1, sg), Rational(1));
    for (int i = 0; i < 3; ++i) b.add(b.unit(i), Rational(4) * s + Rational(2));
    for (long long s2 : {1, -1})
        for (long long s3 : {1, -1}) b.add({1, s2, s3}, Rational(2) * s);
    return b.finish("f3(s=" + s.str() + ")");
}

CovectorSystem instantiate_g3(const Rational& t) {
    if (t.is_zero() || t == Rational(-1, 2))
        throw ParamError("g3: t must avoid the excluded values 0 and -1/2");
    Rational a = Rational(2) * t + Rational(1);
    Rational bw = (Rational(2) * t - Rational(1)) / Rational(3);
    Rational c = Rational(3) / t;
    Builder b(3);
    b.add({1, 0, 0}, a);
    b.add({0, 1, 0}, a);
    b.add({1, 1, 0}, a);
    b.add({1, -1, 0}, bw);
    b.add({2, 1, 0}, bw);
    b.add({1, 2, 0}, bw);
    b.add({0, 0, 1}, c);
    b.add({1, 0, 1}, Rational(1));
    b.add({1, 0, -1}, Rational(1));
    b.add({0, 1, 1}, Rational(1));
    b.add({0, 1, -1}, Rational(1));
    b.add({1, 1, 1}, Rational(1));
    b.add({1, 1, -1}, Rational(1));
    return b.finish("g3(t=" + t.str() + ")");
}

CovectorSystem instantiate_d3(const Rational& t, const Rational& s) {
    if (t.is_zero() || s.is_zero())
        throw ParamError("d3: s and t must be non-zero");
    if ((s + t + Rational(1)).is_zero())
        throw ParamError("d3: excluded locus s+t+1 = 0");
    Builder b(3);
    for (long long s2 : {1, -1})
        for (long long s3 : {1, -1}) b.add({1, s2, s3}, Rational(1));
    b.add({1, 0, 0}, Rational(2) * (s + t - Rational(1)));
    b.add({0, 1, 0}, Rational(2) * (s - t + Rational(1)) / t);
    b.add({0, 0, 1}, Rational(2) * (t - s + Rational(1)) / s);
    return b.finish("d3(t=" + t.str() + ",s=" + s.str() + ")");
}

CovectorSystem instantiate_ab4(const Rational& k) {
    if (k.is_zero() || k == Rational(-1, 3))
        throw ParamError("ab4: k must avoid the excluded values 0 and -1/3");
    Rational a = (Rational(3) * k + Rational(1)) / Rational(2);
    Rational bw = (Rational(3) * k - Rational(1)) / Rational(4);
    Rational c = (Rational(1) - k) / (Rational(2) * k);
    Builder b(4);
    for (int i = 0; i < 3; ++i) b.add(b.unit(i), a);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (long long sg : {1, -1}) b.add(b.pair(i, j, 1, sg), bw);
    b.add(b.unit(3), c);
    for (long long s2 : {1, -1})
        for (long long s3 : {1, -1})
            for (long long s4 : {1, -1}) b.add({1, s2, s3, s4}, Rational(1, 4));
    return b.finish("ab4(k=" + k.str() + ")");
}

CovectorSystem instantiate_ab4_a1_1(const Rational& s) {
    if (s == Rational(-1) || s == Rational(-1, 2))
        throw ParamError("ab4_a1_1: s must avoid the excluded values -1 and -1/2");
    Builder b(3);
    b.add({1, 0, 0}, Rational(2) * (Rational(2) * s + Rational(1)));
    b.add({0, 1, 0}, Rational(8) * (s + Rational(1)));
    b.add({0, 0, 1}, Rational(2) * s * (Rational(2) * s - Rational(1)) / (s + Rational(1)));
    b.add({1, 1, 0}, Rational(2));
    b.add({1, -1, 0}, Rational(2));
    b.add({1, 0, 1}, Rational(2) * s);
    b.add({1, 0, -1}, Rational(2) * s);
    for (long long s2 : {1, -1})
        for (long long s3 : {1, -1}) b.add({1, 2 * s2, s3}, s);
    return b.finish("ab4_a1_1(s=" + s.str() + ")");
}

CovectorSystem instantiate_ab4_a1_2(const Rational& s) {
    if (s == Rational(-1) || s == Rational(-1, 2) || s == Rational(-1, 4))
        throw ParamError("ab4_a1_2: s must avoid the excluded values -1, -1/2 and -1/4");
    Builder b(3);
    b.add({1, 1, 0}, Rational(1));
    b.add({1, 0, 1}, Rational(1));
    b.add({0, 1, 1}, Rational(1));
    for (int i = 0; i < 3; ++i) b.add(b.unit(i), Rational(2));
    b.add({1, 1, 1}, Rational(2) * s / (s + Rational(1)));
    Rational dw = Rational(1) / (Rational(4) * s + Rational(1));
    b.add({1, -1, 0}, dw);
    b.add({1, 0, -1}, dw);
    b.add({0, 1, -1}, dw);
    return b.finish("ab4_a1_2(s=" + s.str() + ")");
}

CovectorSystem instantiate_dihedral_b2(const Rational& a2, const Rational& b2) {
    if (a2.is_zero() || b2.is_zero()) throw ParamError("dihedral_b2: a2 and b2 must be non-zero");
    if ((a2 + b2).is_zero()) throw ParamError("dihedral_b2: degenerate canonical form (a2 + b2 = 0)");
    Builder b(2);
    b.add({1, 0}, a2);
    b.add({0, 1}, a2);
    b.add({1, 1}, b2 / Rational(2));
    b.add({1, -1}, b2 / Rational(2));
    return b.finish("dihedral_b2(a2=" + a2.str() + ",b2=" + b2.str() + ")");
}

CovectorSystem instantiate_boolean(int n) {
    if (n < 1) throw ParamError("boolean: n must be >= 1");
    Builder b(n);
    for (int i = 0; i < n; ++i) b.add(b.unit(i), Rational(1));
    return b.finish("boolean(" + std::to_string(n) + ")");
}

CovectorSystem instantiate_braid(int n) {
    if (n < 2) throw ParamError("braid: n must be >= 2");
    std::vector<Rational> c(n, Rational(1));
    return instantiate_an(c).with_name("braid(" + std::to_string(n) + ")");
}

Family family_from_string(const std::string& s) {
    if (s == "h3" || s == "h4" || s.rfind("i2", 0) == 0 ||
        (s.rfind("dihedral", 0) == 0 && s != "dihedral_b2" && s != "dihedral-b2"))
        throw ParamError("family '" + s +
                         "' has irrational coordinates, which are unsupported; the rational rank-2 "
                         "instance dihedral_b2 is available");
    if (s == "an") return Family::an;
    if (s == "bn") return Family::bn;
    if (s == "f4") return Family::f4;
    if (s == "f3") return Family::f3;
    if (s == "g3") return Family::g3;
    if (s == "d3") return Family::d3;
    if (s == "ab4") return Family::ab4;
    if (s == "ab4_a1_1") return Family::ab4_a1_1;
    if (s == "ab4_a1_2") return Family::ab4_a1_2;
    if (s == "dihedral_b2" || s == "dihedral-b2") return Family::dihedral_b2;
    if (s == "boolean") return Family::boolean_arr;
    if (s == "braid") return Family::braid;
    throw ParamError("unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::an: return "an";
        case Family::bn: return "bn";
        case Family::f4: return "f4";
        case Family::f3: return "f3";
        case Family::g3: return "g3";
        case Family::d3: return "d3";
        case Family::ab4: return "ab4";
        case Family::ab4_a1_1: return "ab4_a1_1";
        case Family::ab4_a1_2: return "ab4_a1_2";
        case Family::dihedral_b2: return "dihedral_b2";
        case Family::boolean_arr: return "boolean";
        case Family::braid: return "braid";
    }
    throw ParamError("unknown family enum");
}

namespace {

Rational need(const FamilySpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw ParamError(family_to_string(spec.family) + ": missing parameter '" + key + "'");
    return it->second;
}

int need_int(const FamilySpec& spec, const std::string& key) {
    Rational r = need(spec, key);
    if (!r.is_integer()) throw ParamError(family_to_string(spec.family) + ": parameter '" + key + "' must be an integer");
    mpz_class z = r.num();
    if (!z.fits_sint_p()) throw ParamError("parameter '" + key + "' out of range");
    return static_cast<int>(z.get_si());
}

std::vector<Rational> c_params(const FamilySpec& spec) {
    std::vector<Rational> c;
    for (int i = 0;; ++i) {
        auto it = spec.params.find("c" + std::to_string(i));
        if (it == spec.params.end()) break;
        c.push_back(it->second);
    }
    if (c.empty()) throw ParamError(family_to_string(spec.family) + ": missing parameters c0..cn");
    return c;
}

} // namespace

CovectorSystem instantiate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::an: return instantiate_an(c_params(spec));
        case Family::bn: return instantiate_bn(c_params(spec));
        case Family::f4: return instantiate_f4(need(spec, "s"));
        case Family::f3: return instantiate_f3(need(spec, "s"));
        case Family::g3: return instantiate_g3(need(spec, "t"));
        case Family::d3: return instantiate_d3(need(spec, "t"), need(spec, "s"));
        case Family::ab4: return instantiate_ab4(need(spec, "k"));
        case Family::ab4_a1_1: return instantiate_ab4_a1_1(need(spec, "s"));
        case Family::ab4_a1_2: return instantiate_ab4_a1_2(need(spec, "s"));
        case Family::dihedral_b2: return instantiate_dihedral_b2(need(spec, "a2"), need(spec, "b2"));
        case Family::boolean_arr: return instantiate_boolean(need_int(spec, "n"));
        case Family::braid: return instantiate_braid(need_int(spec, "n"));
    }
    throw ParamError("unknown family enum");
}

} // namespace vee
