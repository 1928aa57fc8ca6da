#include "vee/rational.hpp"

#include "vee/errors.hpp"

#include <cctype>
#include <ostream>

namespace vee {

DegenerateFormError::DegenerateFormError(std::string msg, std::vector<std::vector<Rational>> kernel)
    : std::runtime_error(std::move(msg)), kernel_(std::move(kernel)) {}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(mpz_class(std::to_string(num)));
    q_ /= mpq_class(mpz_class(std::to_string(den)));
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(std::move(num));
    q_ /= mpq_class(std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw InputError("inverse of zero rational");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s)) throw InputError("malformed rational: '" + s + "'");
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-' || den[0] == '+')
        throw InputError("malformed rational: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw InputError("malformed rational (zero denominator): '" + s + "'");
    return Rational(mpz_class(num), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace vee
