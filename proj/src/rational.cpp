#include "hadstar/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hadstar/error.hpp"

namespace hadstar {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw Error(ErrorCode::BadInput, "not a rational: \"" + text + "\"",
                    "rationals are \"p\" or \"p/q\" with integer p, q");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw Error(ErrorCode::BadInput, "zero denominator in \"" + text + "\"",
                    "rational denominators are nonzero");
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

bool all_entries_nonzero(const RatVector& v) {
    for (const auto& x : v)
        if (x.is_zero()) return false;
    return true;
}

}  // namespace hadstar
