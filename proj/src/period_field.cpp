#include "cycsig/period_field.hpp"

#include "cycsig/error.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cycsig {

namespace {

CyclicElement cyclic_period(const CosetDecomposition& c, std::size_t j) {
    const Modulus& m = c.group.modulus;
    CyclicElement eta(m);
    for (std::int64_t h : period_exponents(c, j)) {
        eta.add_zeta_power(h);
        eta.add_zeta_power(-h);
    }
    return eta;
}

class MpfrValue {
public:
    explicit MpfrValue(long precision) { mpfr_init2(v_, precision); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() noexcept { return v_; }

private:
    mpfr_t v_;
};

} // namespace

int period_conductor_exponent(const CosetDecomposition& c) {
    const Modulus& m = c.group.modulus;
    for (int k = m.p() == 2 ? 2 : 1; k < m.n(); ++k) {
        if (Modulus(m.p(), k).half_degree() % c.degree == 0) return k;
    }
    return m.n();
}

std::vector<std::int64_t> period_exponents(const CosetDecomposition& c, std::size_t j) {
    const Modulus& m = c.group.modulus;
    const int k = period_conductor_exponent(c);
    const Modulus level(m.p(), k);
    const std::int64_t scale = m.N() / level.N();
    std::vector<std::int64_t> out;
    for (std::int64_t h : c.cosets.at(j)) out.push_back(level.fold(h) * scale);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CycIntElement period_element(const CosetDecomposition& c, std::size_t j) {
    return cyclic_period(c, j).reduce();
}

IntPolynomial period_min_poly(const CosetDecomposition& c) {
    const Modulus& m = c.group.modulus;
    // product[k] is the coefficient of x^k.
    std::vector<CyclicElement> product{CyclicElement::from_integer(m, 1)};
    for (std::size_t j = 0; j < c.cosets.size(); ++j) {
        const CyclicElement eta = cyclic_period(c, j);
        std::vector<CyclicElement> next(product.size() + 1, CyclicElement(m));
        for (std::size_t k = 0; k < product.size(); ++k) {
            next[k + 1] += product[k];
            next[k] -= product[k] * eta;
        }
        product = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    coeffs.reserve(product.size());
    for (std::size_t k = 0; k < product.size(); ++k) {
        const auto value = product[k].reduce().as_integer();
        if (!value) {
            throw Error(Errc::NonRationalCoefficient,
                        "coefficient of x^" + std::to_string(k) + " is not a rational integer");
        }
        coeffs.push_back(*value);
    }
    return IntPolynomial(std::move(coeffs));
}

RationalInterval period_enclosure(const CosetDecomposition& c, std::size_t j, long precision_bits) {
    const Modulus& m = c.group.modulus;
    const auto coset = period_exponents(c, j);
    MpfrValue pi(precision_bits), angle(precision_bits), term(precision_bits), sum(precision_bits);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    mpfr_set_zero(sum.get(), 1);
    for (std::int64_t h : coset) {
        mpfr_mul_si(angle.get(), pi.get(), 2 * h, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), m.N(), MPFR_RNDN);
        mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
        mpfr_mul_2ui(term.get(), term.get(), 1, MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    // The angle is below pi with three roundings, so each 2cos term is off by
    // at most 2^(6-P); each of the k additions adds at most 2k * 2^-P.
    const auto k = static_cast<long>(coset.size());
    mpq_class err(k * (128 + 4 * k));
    mpz_class denom = 1;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), static_cast<mp_bitcnt_t>(precision_bits));
    err /= denom;
    err.canonicalize();
    mpq_class centre;
    mpfr_get_q(centre.get_mpq_t(), sum.get());
    return RationalInterval{centre - err, centre + err};
}

PeriodField match_roots(const CosetDecomposition& c, const IntPolynomial& min_poly,
                        const std::vector<RationalInterval>& intervals, long max_precision_bits) {
    const std::size_t d = c.cosets.size();
    std::vector<std::size_t> root_of_coset(d);
    std::vector<bool> taken(intervals.size(), false);
    for (std::size_t j = 0; j < d; ++j) {
        long precision = kInitialPrecisionBits;
        while (true) {
            if (precision > max_precision_bits) {
                throw Error(Errc::PrecisionExhausted,
                            "coset " + std::to_string(j) + " unresolved at " + std::to_string(max_precision_bits) + " bits");
            }
            const RationalInterval enc = period_enclosure(c, j, precision);
            std::size_t hits = 0;
            std::size_t found = 0;
            bool strictly_inside = false;
            for (std::size_t i = 0; i < intervals.size(); ++i) {
                const auto& iv = intervals[i];
                if (enc.hi < iv.lo || iv.hi < enc.lo) continue;
                ++hits;
                found = i;
                strictly_inside = iv.lo < enc.lo && enc.hi < iv.hi;
            }
            if (hits == 1 && strictly_inside) {
                if (taken[found]) {
                    throw std::logic_error("two cosets matched to one root");
                }
                taken[found] = true;
                root_of_coset[j] = found;
                break;
            }
            precision *= 2;
        }
    }
    return PeriodField{c, min_poly, intervals, std::move(root_of_coset)};
}

PeriodField make_period_field(const CosetDecomposition& c) {
    IntPolynomial mp = period_min_poly(c);
    auto roots = sturm_isolate(mp);
    return match_roots(c, mp, roots);
}

} // namespace cycsig
