#include "vlab/rational.hpp"

#include <cctype>
#include <ostream>

#include "vlab/errors.hpp"

namespace vlab {

Rational::Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::parse_error, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) fail(ErrorCode::parse_error, "empty rational literal");
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!valid_int(num_part) || !valid_int(den_part))
        fail(ErrorCode::parse_error, "malformed rational literal '" + text + "'");
    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (den == 0) fail(ErrorCode::parse_error, "zero denominator in '" + text + "'");
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(std::move(q));
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) fail(ErrorCode::unsupported_exponent, "0 raised to a negative power");
    const unsigned long mag = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num_pow, den_pow;
    mpz_pow_ui(num_pow.get_mpz_t(), v_.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den_pow.get_mpz_t(), v_.get_den().get_mpz_t(), mag);
    mpq_class q;
    if (e > 0)
        q = mpq_class(num_pow) / mpq_class(den_pow);
    else
        q = mpq_class(den_pow) / mpq_class(num_pow);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::parse_error, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace vlab
