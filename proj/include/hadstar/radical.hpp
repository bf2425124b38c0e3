#pragma once

#include <string>

#include "hadstar/rational.hpp"

namespace hadstar {

// Scalar of the form coeff * sqrt(radicand), the closure needed for
// square roots of rational numbers.  The branch is fixed once and for
// all by sqrt(r) * sqrt(r) = r, also for negative radicands (so the
// value may be imaginary; no separate complex type is needed because
// every identity we verify rationalizes through squares).
//
// Canonical form: the radicand carries no nontrivial square integer
// factor in numerator or denominator, and zero is 0 * sqrt(1).
class RadicalScalar {
public:
    RadicalScalar() : coeff_(0), radicand_(1) {}
    explicit RadicalScalar(const Rational& rational_value)
        : coeff_(rational_value), radicand_(1) {}
    RadicalScalar(const Rational& coeff, const Rational& radicand);

    // Principal square root of r: coefficient positive, a negative r
    // keeps its sign on the radicand.
    static RadicalScalar sqrt_of(const Rational& r);

    const Rational& coeff() const { return coeff_; }
    const Rational& radicand() const { return radicand_; }

    bool is_zero() const { return coeff_.is_zero(); }
    bool is_rational() const { return radicand_ == Rational(1); }

    // coeff^2 * radicand; exact, branch-independent.
    Rational square() const { return coeff_ * coeff_ * radicand_; }

    RadicalScalar operator*(const RadicalScalar& other) const;
    RadicalScalar operator*(const Rational& scalar) const;
    RadicalScalar operator/(const Rational& scalar) const;
    RadicalScalar operator-() const;

    // Defined only for equal reduced radicands.
    RadicalScalar operator+(const RadicalScalar& other) const;

    // Quotient of two scalars sharing a radicand is rational.
    static Rational ratio_same_radicand(const RadicalScalar& num, const RadicalScalar& den);

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

    std::string str() const;

private:
    Rational coeff_;
    Rational radicand_;
};

// Largest s with s^2 dividing n (n > 0); n / s^2 is the square-free part.
mpz_class square_part(const mpz_class& n);

}  // namespace hadstar
