#pragma once

// Gaussian-period subfields of Q(zeta_N)^+ and their real roots.
//
// For the index-d subgroup H of G, the period of coset j is
//   eta_j = sum_{h in coset j} (zeta^h + zeta^-h),
// and eta_0 generates the unique degree-d subfield. Its minimal polynomial
// is prod_j (x - eta_j), expanded exactly in Z[zeta_N].
//
// When N = p^n with n >= 2 the degree-d subfield may already lie in
// Q(zeta_{p^k})^+ for some k < n, and then the sum above can vanish
// (N = 16, d = 2: zeta^7 = -zeta^-1). The periods are therefore taken at the
// smallest such level p^k, with the coset reduced mod p^k.

#include "cycsig/cycint.hpp"
#include "cycsig/polynomial.hpp"
#include "cycsig/realroots.hpp"
#include "cycsig/resgroup.hpp"

#include <cstddef>
#include <vector>

namespace cycsig {

/// Smallest k with the degree-d subfield inside Q(zeta_{p^k})^+.
int period_conductor_exponent(const CosetDecomposition& c);

/// Distinct exponents e (mod N, 0 < e < N/2) with eta_j = sum 2cos(2 pi e / N).
std::vector<std::int64_t> period_exponents(const CosetDecomposition& c, std::size_t j);

CycIntElement period_element(const CosetDecomposition& c, std::size_t j);

/// Throws NonRationalCoefficient if an expanded coefficient is not in Z.
IntPolynomial period_min_poly(const CosetDecomposition& c);

/// Rational interval guaranteed to contain the real value of eta_j, computed
/// at `precision_bits` of working precision.
RationalInterval period_enclosure(const CosetDecomposition& c, std::size_t j, long precision_bits);

struct PeriodField {
    CosetDecomposition cosets;
    IntPolynomial min_poly;
    /// Isolating intervals, ascending.
    std::vector<RationalInterval> roots;
    /// root_of_coset[j] is the index into `roots` of eta_j.
    std::vector<std::size_t> root_of_coset;
};

inline constexpr long kInitialPrecisionBits = 64;
inline constexpr long kMaxPrecisionBits = 16384;

/// Pairs each coset period with the isolating interval containing it,
/// doubling precision until every enclosure sits strictly inside exactly one
/// interval. Throws PrecisionExhausted past `max_precision_bits`.
PeriodField match_roots(const CosetDecomposition& c, const IntPolynomial& min_poly,
                        const std::vector<RationalInterval>& intervals,
                        long max_precision_bits = kMaxPrecisionBits);

/// period_min_poly, sturm_isolate and match_roots in sequence.
PeriodField make_period_field(const CosetDecomposition& c);

} // namespace cycsig
