#pragma once

// Real root isolation and exact sign determination at algebraic points,
// via Sturm sequences and rational bisection.

#include "cycsig/polynomial.hpp"

#include <gmpxx.h>

#include <vector>

namespace cycsig {

struct RationalInterval {
    mpq_class lo;
    mpq_class hi;

    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

class SturmSequence {
public:
    /// p must be nonzero and squarefree for root counting to be meaningful.
    explicit SturmSequence(const IntPolynomial& p);

    const std::vector<IntPolynomial>& polys() const noexcept { return seq_; }

    /// Sign variations at a rational point (zeros skipped).
    int variations_at(const mpq_class& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Number of distinct roots in (lo, hi].
    int count_roots(const mpq_class& lo, const mpq_class& hi) const;
    int count_real_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<IntPolynomial> seq_;
};

/// Integer B with every real root of p strictly inside (-B, B).
mpz_class cauchy_root_bound(const IntPolynomial& p);

bool is_squarefree(const IntPolynomial& p);

/// Disjoint ascending intervals, one per real root, with endpoints that are
/// not roots. Throws NotSquarefree.
std::vector<RationalInterval> sturm_isolate(const IntPolynomial& p);

/// Halves iv (keeping the root) until its width is at most `max_width`.
RationalInterval refine_root(const SturmSequence& sturm, RationalInterval iv, const mpq_class& max_width);

/// Exact sign of P(theta), where theta is the unique root of min_poly in iv.
/// Throws VanishesAtRoot when P mod min_poly shares a factor with min_poly.
int certified_sign_at_root(const IntPolynomial& P, const IntPolynomial& min_poly, const RationalInterval& iv);

} // namespace cycsig
