#pragma once

// Exact signatures of the circular units of Q(zeta_N)^+.
//
// C is generated by -1 and xi_a = zeta^((1-a)/2) (1 - zeta^a) / (1 - zeta)
// for a in B \ {1}, with (1-a)/2 taken mod N when N is odd. Under the
// embedding sigma_b, xi_a maps to sin(pi a b' / N) / sin(pi b' / N), where b'
// is whichever of b, N - b is odd, so its sign is a product of two sine
// signs and needs no floating point.

#include "cycsig/gf2mat.hpp"
#include "cycsig/resgroup.hpp"

#include <cstdint>
#include <string>

namespace cycsig {

struct CircularGenerator {
    /// Sentinel value of `a` for the torsion generator -1.
    static constexpr std::int64_t kMinusOne = -1;

    Modulus modulus;
    std::int64_t a;

    static CircularGenerator minus_one(const Modulus& m) { return {m, kMinusOne}; }
    bool is_minus_one() const noexcept { return a == kMinusOne; }
    /// "-1" or "xi_<a>".
    std::string label() const;
};

/// Bits indexed in embedding_set order; 1 = negative.
using SignVector = BitVector;

/// Sign (+1 / -1) of sin(pi m / N). Throws ZeroArgument when N | m.
int sin_sign(std::int64_t m, const Modulus& mod);

SignVector generator_signature(const CircularGenerator& g);

/// The half_degree x half_degree matrix with rows -1, xi_2, xi_3, ... and
/// columns in embedding_set order.
BitMatrix signature_matrix(const Modulus& mod);

struct IndexExponents {
    /// log2 [C : C^+]
    std::int64_t C_to_Cplus;
    /// log2 [C^+ : C^2]
    std::int64_t Cplus_to_Csq;
};

/// Splits [C : C^2] = 2^half_degree by the signature rank r.
/// Throws RankOutOfRange unless 1 <= r <= half_degree.
IndexExponents indices_from_rank(const Modulus& mod, std::int64_t r);

} // namespace cycsig
