#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cycsig {

/// Dense polynomial over Z, constant term first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    static IntPolynomial constant(const mpz_class& c) { return monomial(c, 0); }
    static IntPolynomial variable() { return monomial(1, 1); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the degree.
    mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
    const mpz_class& lead() const { return coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }
    IntPolynomial& operator*=(const mpz_class& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
    IntPolynomial operator-() const;
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial pow(unsigned e) const;
    IntPolynomial derivative() const;
    /// gcd of the coefficients, nonnegative.
    mpz_class content() const;
    /// Divided by its content and normalised to a positive leading coefficient.
    IntPolynomial primitive_part() const;

    /// Exact value at a rational point.
    mpq_class evaluate(const mpq_class& x) const;
    /// Sign (-1, 0, 1) at a rational point, computed without fractions.
    int sign_at(const mpq_class& x) const;

    /// "c0,c1,...,cd"; the zero polynomial is "0".
    std::string to_coeff_list() const;
    /// Inverse of to_coeff_list. Throws ParseError.
    static IntPolynomial from_coeff_list(std::string_view text);
    /// Human-readable form, highest degree first, e.g. "x^3 + x^2 - 54*x - 169".
    std::string to_string(std::string_view var = "x") const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

/// Remainder of a by a monic divisor; exact over Z.
IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& monic_divisor);

/// lc(b)^(deg a - deg b + 1) * a mod b, scaled by a positive constant so the
/// sign of each remainder is that of the true (rational) remainder.
IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

} // namespace cycsig
