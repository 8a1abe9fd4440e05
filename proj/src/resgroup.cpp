#include "cycsig/resgroup.hpp"

#include "cycsig/error.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace cycsig {

namespace {

// Keeps all pairwise products of residues inside int64.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

} // namespace

bool is_prime(std::int64_t x) noexcept {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::int64_t d = 3; d <= x / d; d += 2) {
        if (x % d == 0) return false;
    }
    return true;
}

Modulus::Modulus(std::int64_t p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) {
        throw Error(Errc::CompositeP, std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw Error(Errc::BadExponent, "exponent must be at least 1");
    }
    if (p == 2 && n < 2) {
        throw Error(Errc::BadExponent, "p = 2 requires n >= 2");
    }
    std::int64_t N = 1;
    for (int i = 0; i < n; ++i) {
        if (N > kMaxModulus / p) {
            throw Error(Errc::BadExponent, "p^n exceeds 2^31");
        }
        N *= p;
    }
    N_ = N;
    half_degree_ = (N / p) * (p - 1) / 2;
}

bool Modulus::is_unit(std::int64_t x) const noexcept { return residue(x) % p_ != 0; }

std::int64_t Modulus::residue(std::int64_t x) const noexcept {
    const std::int64_t r = x % N_;
    return r < 0 ? r + N_ : r;
}

std::int64_t Modulus::fold(std::int64_t x) const noexcept {
    const std::int64_t r = residue(x);
    return std::min(r, N_ - r);
}

std::int64_t Modulus::mul(std::int64_t x, std::int64_t y) const noexcept {
    return residue(residue(x) * residue(y));
}

Modulus make_modulus(std::int64_t p, int n) { return Modulus(p, n); }

std::vector<std::int64_t> embedding_set(const Modulus& m) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(m.half_degree()));
    for (std::int64_t b = 1; 2 * b < m.N(); ++b) {
        if (b % m.p() != 0) out.push_back(b);
    }
    return out;
}

EmbeddingIndexMap::EmbeddingIndexMap(const Modulus& m)
    : slot_(static_cast<std::size_t>(m.N() / 2 + 1), std::numeric_limits<std::size_t>::max()) {
    std::size_t i = 0;
    for (std::int64_t b : embedding_set(m)) slot_[static_cast<std::size_t>(b)] = i++;
}

std::int64_t QuotientGroup::power(std::int64_t k) const {
    std::int64_t result = 1;
    std::int64_t base = modulus.residue(generator);
    while (k > 0) {
        if (k & 1) result = modulus.mul(result, base);
        base = modulus.mul(base, base);
        k >>= 1;
    }
    return modulus.fold(result);
}

namespace {

// Order of the image of g in G, or 0 if g is not a unit.
std::int64_t quotient_order(const Modulus& m, std::int64_t g) {
    if (!m.is_unit(g)) return 0;
    std::int64_t x = m.residue(g);
    std::int64_t k = 1;
    while (m.fold(x) != 1) {
        x = m.mul(x, g);
        ++k;
    }
    return k;
}

} // namespace

QuotientGroup group_generator(const Modulus& m) {
    const std::int64_t order = m.half_degree();
    if (m.p() == 2) {
        return QuotientGroup{m, 3, order};
    }
    for (std::int64_t g = 1; g < m.N(); ++g) {
        if (quotient_order(m, g) == order) return QuotientGroup{m, g, order};
    }
    // Unreachable: G is cyclic for odd prime powers.
    throw std::logic_error("no generator found");
}

CosetDecomposition coset_decomposition(const QuotientGroup& g, std::int64_t d) {
    if (d < 1 || g.order % d != 0) {
        throw Error(Errc::BadDegree, std::to_string(d) + " does not divide " + std::to_string(g.order));
    }
    const Modulus& m = g.modulus;
    CosetDecomposition out{g, d, {}, {}, std::vector<std::int64_t>(static_cast<std::size_t>(m.N() / 2 + 1), -1)};

    const std::int64_t h_size = g.order / d;
    const std::int64_t step = m.residue(g.power(d));
    std::int64_t x = 1;
    out.subgroup.reserve(static_cast<std::size_t>(h_size));
    for (std::int64_t k = 0; k < h_size; ++k) {
        out.subgroup.push_back(m.fold(x));
        x = m.mul(x, step);
    }

    out.cosets.reserve(static_cast<std::size_t>(d));
    std::int64_t shift = 1;
    for (std::int64_t j = 0; j < d; ++j) {
        std::vector<std::int64_t> coset;
        coset.reserve(out.subgroup.size());
        for (std::int64_t h : out.subgroup) {
            const std::int64_t b = m.fold(m.mul(shift, h));
            coset.push_back(b);
            out.coset_of[static_cast<std::size_t>(b)] = j;
        }
        out.cosets.push_back(std::move(coset));
        shift = m.mul(shift, g.generator);
    }
    return out;
}

} // namespace cycsig
