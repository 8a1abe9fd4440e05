#include "cycsig/circsig.hpp"

#include "cycsig/error.hpp"

namespace cycsig {

std::string CircularGenerator::label() const {
    return is_minus_one() ? std::string("-1") : "xi_" + std::to_string(a);
}

int sin_sign(std::int64_t m, const Modulus& mod) {
    const std::int64_t period = 2 * mod.N();
    std::int64_t r = m % period;
    if (r < 0) r += period;
    if (r == 0 || r == mod.N()) {
        throw Error(Errc::ZeroArgument, "sin(pi * " + std::to_string(m) + " / " + std::to_string(mod.N()) + ") = 0");
    }
    return r < mod.N() ? 1 : -1;
}

SignVector generator_signature(const CircularGenerator& g) {
    const Modulus& m = g.modulus;
    const auto embeddings = embedding_set(m);
    SignVector v(embeddings.size());
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        if (g.is_minus_one()) {
            v.set(i);
            continue;
        }
        // For odd N the exponent (1-a)/2 lives in Z/N, which makes
        // sigma_b(xi_a) = sin(pi a b'/N) / sin(pi b'/N) for the odd one b' of
        // b, N - b. For N = 2^n every unit b is already odd.
        const std::int64_t b = embeddings[i] % 2 == 1 ? embeddings[i] : m.N() - embeddings[i];
        // a < N / 2 and b < N < 2^31, so a * b fits.
        if (sin_sign(g.a * b, m) * sin_sign(b, m) < 0) v.set(i);
    }
    return v;
}

BitMatrix signature_matrix(const Modulus& mod) {
    const auto embeddings = embedding_set(mod);
    BitMatrix out(embeddings.size());
    const auto minus_one = CircularGenerator::minus_one(mod);
    out.push_row(generator_signature(minus_one), minus_one.label());
    for (std::int64_t a : embeddings) {
        if (a == 1) continue;
        const CircularGenerator g{mod, a};
        out.push_row(generator_signature(g), g.label());
    }
    return out;
}

IndexExponents indices_from_rank(const Modulus& mod, std::int64_t r) {
    if (r < 1 || r > mod.half_degree()) {
        throw Error(Errc::RankOutOfRange, "rank " + std::to_string(r) + " outside [1, " +
                                              std::to_string(mod.half_degree()) + "]");
    }
    return IndexExponents{r, mod.half_degree() - r};
}

} // namespace cycsig
