#pragma once

// Residue arithmetic modulo a prime power N = p^n and the cyclic group
// G = (Z/N)^x / {+-1}, whose elements label the real embeddings of the
// maximal real subfield of Q(zeta_N).

#include <cstdint>
#include <vector>

namespace cycsig {

/// A prime power N = p^n, with n >= 2 when p = 2.
class Modulus {
public:
    /// Throws CompositeP / BadExponent when (p, n) is not admissible.
    Modulus(std::int64_t p, int n);

    std::int64_t p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    std::int64_t N() const noexcept { return N_; }
    /// phi(N) / 2, the degree of the maximal real subfield.
    std::int64_t half_degree() const noexcept { return half_degree_; }
    std::int64_t phi() const noexcept { return 2 * half_degree_; }
    /// p^(n-1), the spacing of the exponents in the cyclotomic polynomial.
    std::int64_t stride() const noexcept { return N_ / p_; }

    bool is_unit(std::int64_t x) const noexcept;
    /// x mod N in [0, N).
    std::int64_t residue(std::int64_t x) const noexcept;
    /// min(x mod N, N - x mod N); maps unit residues 2-to-1 onto B.
    std::int64_t fold(std::int64_t x) const noexcept;
    std::int64_t mul(std::int64_t x, std::int64_t y) const noexcept;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t p_;
    int n_;
    std::int64_t N_;
    std::int64_t half_degree_;
};

Modulus make_modulus(std::int64_t p, int n);

bool is_prime(std::int64_t x) noexcept;

/// Ascending list B of all 1 <= b < N/2 with gcd(b, N) = 1.
std::vector<std::int64_t> embedding_set(const Modulus& m);

/// Position of each b in embedding_set order; only unit residues in (0, N/2)
/// are valid keys.
class EmbeddingIndexMap {
public:
    explicit EmbeddingIndexMap(const Modulus& m);
    std::size_t index_of(std::int64_t b) const { return slot_.at(static_cast<std::size_t>(b)); }

private:
    std::vector<std::size_t> slot_;
};

struct QuotientGroup {
    Modulus modulus;
    std::int64_t generator;
    std::int64_t order;

    /// generator^k folded into B.
    std::int64_t power(std::int64_t k) const;
};

/// Smallest representative generating G (3 when p = 2).
QuotientGroup group_generator(const Modulus& m);

struct CosetDecomposition {
    QuotientGroup group;
    std::int64_t degree;
    /// Index-`degree` subgroup H = <generator^degree>, in power order.
    std::vector<std::int64_t> subgroup;
    /// cosets[j] = generator^j * H folded into B; cosets[0] == subgroup.
    std::vector<std::vector<std::int64_t>> cosets;

    /// Coset index of each b, keyed by b (entries for non-B values are unused).
    std::vector<std::int64_t> coset_of;
};

/// Throws BadDegree unless d divides the group order.
CosetDecomposition coset_decomposition(const QuotientGroup& g, std::int64_t d);

} // namespace cycsig
