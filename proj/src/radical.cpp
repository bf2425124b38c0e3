#include "hadstar/radical.hpp"

#include <map>
#include <stdexcept>

namespace hadstar {

namespace {

// Factorization of positive integers: trial division for small primes,
// then Brent's cycle-finding variant of Pollard rho on the cofactor.
// Radicands here come from kernel vectors of small exact matrices, so
// inputs are modest; rho keeps the square-free reduction exact anyway.

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    unsigned long d = 37;
    while (d <= 1000 && n > 1) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[mpz_class(d)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
        d += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        std::map<mpz_class, unsigned> sub;
        factor_into(root, sub);
        for (const auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    mpz_class d2 = pollard_rho(n);
    factor_into(d2, out);
    factor_into(n / d2, out);
}

}  // namespace

mpz_class square_part(const mpz_class& n) {
    if (n <= 0) throw std::domain_error("square_part of non-positive integer");
    std::map<mpz_class, unsigned> factors;
    factor_into(n, factors);
    mpz_class s = 1;
    for (const auto& [p, e] : factors)
        for (unsigned k = 0; k + 1 < e; k += 2) s *= p;
    return s;
}

RadicalScalar::RadicalScalar(const Rational& coeff, const Rational& radicand)
    : coeff_(coeff), radicand_(radicand) {
    if (coeff_.is_zero() || radicand_.is_zero()) {
        coeff_ = Rational(0);
        radicand_ = Rational(1);
        return;
    }
    mpz_class num = radicand_.numerator();
    mpz_class den = radicand_.denominator();
    int sign = sgn(num);
    mpz_class s = square_part(mpz_class(::abs(num)));
    mpz_class t = square_part(den);
    coeff_ = coeff_ * Rational(s, t);
    mpz_class reduced_num = sign * (::abs(num) / (s * s));
    mpz_class reduced_den = den / (t * t);
    radicand_ = Rational(reduced_num, reduced_den);
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& r) {
    return RadicalScalar(Rational(1), r);
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& other) const {
    Rational c = coeff_ * other.coeff_;
    // sqrt(a)*sqrt(b) = -sqrt(ab) when both radicands are negative,
    // which makes sqrt(r)*sqrt(r) = r hold identically.
    if (radicand_.sign() < 0 && other.radicand_.sign() < 0) c = -c;
    return RadicalScalar(c, radicand_ * other.radicand_);
}

RadicalScalar RadicalScalar::operator*(const Rational& scalar) const {
    return RadicalScalar(coeff_ * scalar, radicand_);
}

RadicalScalar RadicalScalar::operator/(const Rational& scalar) const {
    return RadicalScalar(coeff_ / scalar, radicand_);
}

RadicalScalar RadicalScalar::operator-() const {
    return RadicalScalar(-coeff_, radicand_);
}

RadicalScalar RadicalScalar::operator+(const RadicalScalar& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    if (!(radicand_ == other.radicand_))
        throw std::domain_error("sum of radical scalars with distinct radicands");
    return RadicalScalar(coeff_ + other.coeff_, radicand_);
}

Rational RadicalScalar::ratio_same_radicand(const RadicalScalar& num, const RadicalScalar& den) {
    if (den.is_zero()) throw std::domain_error("division by zero radical scalar");
    if (!(num.radicand_ == den.radicand_))
        throw std::domain_error("ratio of radical scalars with distinct radicands");
    return num.coeff_ / den.coeff_;
}

std::string RadicalScalar::str() const {
    if (is_rational()) return coeff_.str();
    return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
}

}  // namespace hadstar
