#pragma once

// Exact arithmetic in Z[zeta_N] = Z[x] / (Phi_N), N = p^n, in the power
// basis 1, zeta, ..., zeta^(phi(N)-1).

#include "cycsig/resgroup.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace cycsig {

class CycIntElement {
public:
    explicit CycIntElement(const Modulus& m);

    static CycIntElement from_integer(const Modulus& m, const mpz_class& c);
    /// zeta^e for any integer e.
    static CycIntElement zeta_power(const Modulus& m, std::int64_t e);
    /// Reduces a vector indexed by exponent mod N (an element of Z[x]/(x^N - 1)).
    static CycIntElement from_cyclic(const Modulus& m, const std::vector<mpz_class>& cyclic);

    const Modulus& modulus() const noexcept { return modulus_; }
    const std::vector<mpz_class>& coords() const noexcept { return coords_; }

    /// The integer c when the element equals c, otherwise nullopt.
    std::optional<mpz_class> as_integer() const;
    bool is_zero() const;

    CycIntElement& operator+=(const CycIntElement& rhs);
    CycIntElement& operator-=(const CycIntElement& rhs);
    friend CycIntElement operator+(CycIntElement a, const CycIntElement& b) { return a += b; }
    friend CycIntElement operator-(CycIntElement a, const CycIntElement& b) { return a -= b; }
    friend CycIntElement operator*(const CycIntElement& a, const CycIntElement& b);
    friend bool operator==(const CycIntElement&, const CycIntElement&) = default;

private:
    Modulus modulus_;
    std::vector<mpz_class> coords_;
};

/// Element of Z[x]/(x^N - 1), indexed by exponent in [0, N). Products here
/// map onto products in Z[zeta_N] under CycIntElement::from_cyclic, and stay
/// sparse for sums of a few roots of unity.
class CyclicElement {
public:
    explicit CyclicElement(const Modulus& m) : modulus_(m), coeffs_(static_cast<std::size_t>(m.N())) {}

    static CyclicElement from_integer(const Modulus& m, const mpz_class& c);

    const Modulus& modulus() const noexcept { return modulus_; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    void add_zeta_power(std::int64_t e, const mpz_class& c = 1);

    CyclicElement& operator+=(const CyclicElement& rhs);
    CyclicElement& operator-=(const CyclicElement& rhs);
    friend CyclicElement operator*(const CyclicElement& a, const CyclicElement& b);
    CyclicElement operator-() const;

    CycIntElement reduce() const { return CycIntElement::from_cyclic(modulus_, coeffs_); }

private:
    Modulus modulus_;
    std::vector<mpz_class> coeffs_;
};

} // namespace cycsig
