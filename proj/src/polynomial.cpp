#include "cycsig/polynomial.hpp"

#include "cycsig/error.hpp"

#include <sstream>

namespace cycsig {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lead() < 0) g = -g;
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
    // Homogenised Horner: sum c_i num^i den^(d-i), with den > 0.
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

std::string IntPolynomial::to_coeff_list() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s;
}

IntPolynomial IntPolynomial::from_coeff_list(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        item = b == std::string::npos ? std::string{} : item.substr(b, e - b + 1);
        if (!item.empty() && item[0] == '+') item.erase(0, 1);
        mpz_class c;
        if (item.empty() || c.set_str(item, 10) != 0) {
            throw Error(Errc::ParseError, "bad coefficient '" + item + "'");
        }
        coeffs.push_back(c);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

IntPolynomial rem_monic(const IntPolynomial& a, const IntPolynomial& monic_divisor) {
    const long db = monic_divisor.degree();
    std::vector<mpz_class> r = a.coeffs();
    const auto& b = monic_divisor.coeffs();
    for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
        const mpz_class q = r[static_cast<std::size_t>(k)];
        if (q == 0) continue;
        for (long i = 0; i <= db; ++i) {
            mpz_submul(r[static_cast<std::size_t>(k - db + i)].get_mpz_t(), q.get_mpz_t(),
                       b[static_cast<std::size_t>(i)].get_mpz_t());
        }
    }
    if (r.size() > static_cast<std::size_t>(std::max(db, 0L))) r.resize(static_cast<std::size_t>(std::max(db, 0L)));
    return IntPolynomial(std::move(r));
}

IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    const long db = b.degree();
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    const mpz_class lb = abs(b.lead());
    const bool negative_lead = b.lead() < 0;
    // Multiply by |lc(b)| each step; subtract q * sign(lc(b)) * x^shift * b.
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        const std::size_t k = r.size() - 1;
        const mpz_class q = negative_lead ? mpz_class(-r[k]) : r[k];
        for (auto& c : r) c *= lb;
        const std::size_t shift = k - static_cast<std::size_t>(db);
        for (long i = 0; i <= db; ++i) {
            mpz_submul(r[shift + static_cast<std::size_t>(i)].get_mpz_t(), q.get_mpz_t(),
                       bc[static_cast<std::size_t>(i)].get_mpz_t());
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = signed_pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

} // namespace cycsig
