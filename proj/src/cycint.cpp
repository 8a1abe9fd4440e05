#include "cycsig/cycint.hpp"

namespace cycsig {

CycIntElement::CycIntElement(const Modulus& m)
    : modulus_(m), coords_(static_cast<std::size_t>(m.phi())) {}

CycIntElement CycIntElement::from_integer(const Modulus& m, const mpz_class& c) {
    CycIntElement e(m);
    e.coords_[0] = c;
    return e;
}

CycIntElement CycIntElement::zeta_power(const Modulus& m, std::int64_t e) {
    std::vector<mpz_class> cyclic(static_cast<std::size_t>(m.N()));
    cyclic[static_cast<std::size_t>(m.residue(e))] = 1;
    return from_cyclic(m, cyclic);
}

CycIntElement CycIntElement::from_cyclic(const Modulus& m, const std::vector<mpz_class>& cyclic) {
    // Phi_N(x) = sum_{k<p} x^(k s) with s = p^(n-1), so for phi <= e < N,
    // x^e = -sum_{k<p-1} x^(e - phi + k s), all exponents below phi.
    const std::int64_t phi = m.phi();
    const std::int64_t s = m.stride();
    CycIntElement out(m);
    for (std::int64_t e = 0; e < m.N(); ++e) {
        const mpz_class& c = cyclic[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        if (e < phi) {
            out.coords_[static_cast<std::size_t>(e)] += c;
            continue;
        }
        for (std::int64_t k = 0; k + 1 < m.p(); ++k) {
            out.coords_[static_cast<std::size_t>(e - phi + k * s)] -= c;
        }
    }
    return out;
}

std::optional<mpz_class> CycIntElement::as_integer() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return std::nullopt;
    }
    return coords_[0];
}

bool CycIntElement::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

CycIntElement& CycIntElement::operator+=(const CycIntElement& rhs) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

CycIntElement& CycIntElement::operator-=(const CycIntElement& rhs) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

CycIntElement operator*(const CycIntElement& a, const CycIntElement& b) {
    const Modulus& m = a.modulus_;
    const std::size_t n = static_cast<std::size_t>(m.N());
    std::vector<mpz_class> cyclic(n);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) {
            if (b.coords_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n;
            mpz_addmul(cyclic[k].get_mpz_t(), a.coords_[i].get_mpz_t(), b.coords_[j].get_mpz_t());
        }
    }
    return CycIntElement::from_cyclic(m, cyclic);
}

CyclicElement CyclicElement::from_integer(const Modulus& m, const mpz_class& c) {
    CyclicElement e(m);
    e.coeffs_[0] = c;
    return e;
}

void CyclicElement::add_zeta_power(std::int64_t e, const mpz_class& c) {
    coeffs_[static_cast<std::size_t>(modulus_.residue(e))] += c;
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclicElement& CyclicElement::operator-=(const CyclicElement& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclicElement CyclicElement::operator-() const {
    CyclicElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclicElement operator*(const CyclicElement& a, const CyclicElement& b) {
    const std::size_t n = a.coeffs_.size();
    std::vector<std::size_t> support_b;
    for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j] != 0) support_b.push_back(j);
    }
    CyclicElement out(a.modulus_);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j : support_b) {
            std::size_t k = i + j;
            if (k >= n) k -= n;
            mpz_addmul(out.coeffs_[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

} // namespace cycsig
