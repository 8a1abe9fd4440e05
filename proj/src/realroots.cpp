#include "cycsig/realroots.hpp"

#include "cycsig/error.hpp"

namespace cycsig {

namespace {

int count_sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int sign_at_infinity(const IntPolynomial& q, bool negative) {
    const int s = sgn(q.lead());
    return (negative && (q.degree() % 2 == 1)) ? -s : s;
}

// A positive multiple of the remainder of a by b over Q, so its sign at
// any root of b is the sign of a there.
IntPolynomial reduce_mod(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_monic()) return rem_monic(a, b);
    return signed_pseudo_remainder(a, b);
}

} // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
    if (p.is_zero()) return;
    seq_.push_back(p);
    IntPolynomial d = p.derivative();
    if (d.is_zero()) return;
    // Positive rescaling of any member keeps every variation count intact.
    seq_.push_back(d.primitive_part() * mpz_class(sgn(d.lead())));
    while (true) {
        const IntPolynomial& a = seq_[seq_.size() - 2];
        const IntPolynomial& b = seq_.back();
        IntPolynomial r = -signed_pseudo_remainder(a, b);
        if (r.is_zero()) break;
        IntPolynomial scaled = r.primitive_part();
        if (r.lead() < 0) scaled = -scaled;
        seq_.push_back(std::move(scaled));
    }
}

int SturmSequence::variations_at(const mpq_class& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& q : seq_) signs.push_back(q.sign_at(x));
    return count_sign_changes(signs);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq_) signs.push_back(sign_at_infinity(q, true));
    return count_sign_changes(signs);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq_) signs.push_back(sign_at_infinity(q, false));
    return count_sign_changes(signs);
}

int SturmSequence::count_roots(const mpq_class& lo, const mpq_class& hi) const {
    return variations_at(lo) - variations_at(hi);
}

mpz_class cauchy_root_bound(const IntPolynomial& p) {
    mpz_class max_abs = 0;
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        if (abs(p.coeffs()[i]) > max_abs) max_abs = abs(p.coeffs()[i]);
    }
    const mpz_class lead = abs(p.lead());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
    // |root| < 1 + max|a_i| / |a_d| <= 1 + ceil(...); one more keeps it strict.
    return q + 2;
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).is_constant();
}

namespace {

// A split point strictly inside (lo, hi) that is not a root of p.
mpq_class split_point(const IntPolynomial& p, const RationalInterval& iv) {
    mpq_class mid = iv.midpoint();
    if (p.sign_at(mid) != 0) return mid;
    for (long den = 3;; ++den) {
        for (long k = 1; k < den; ++k) {
            mpq_class x = iv.lo + iv.width() * mpq_class(k, den);
            x.canonicalize();
            if (p.sign_at(x) != 0) return x;
        }
    }
}

} // namespace

std::vector<RationalInterval> sturm_isolate(const IntPolynomial& p) {
    if (!is_squarefree(p)) throw Error(Errc::NotSquarefree, p.to_string() + " is not squarefree");
    std::vector<RationalInterval> out;
    if (p.degree() < 1) return out;

    const SturmSequence sturm(p);
    const mpz_class bound = cauchy_root_bound(p);
    struct Pending {
        RationalInterval iv;
        int roots;
    };
    RationalInterval whole{mpq_class(-bound), mpq_class(bound)};
    std::vector<Pending> stack{{whole, sturm.count_roots(whole.lo, whole.hi)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.roots == 0) continue;
        if (cur.roots == 1) {
            out.push_back(cur.iv);
            continue;
        }
        const mpq_class mid = split_point(p, cur.iv);
        const int left = sturm.count_roots(cur.iv.lo, mid);
        // Push right first so the left half is handled next.
        stack.push_back({{mid, cur.iv.hi}, cur.roots - left});
        stack.push_back({{cur.iv.lo, mid}, left});
    }
    return out;
}

RationalInterval refine_root(const SturmSequence& sturm, RationalInterval iv, const mpq_class& max_width) {
    const IntPolynomial& p = sturm.polys().front();
    while (iv.width() > max_width) {
        const mpq_class mid = iv.midpoint();
        const int s = p.sign_at(mid);
        if (s == 0) return {mid, mid};
        if (sturm.count_roots(iv.lo, mid) == 1) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return iv;
}

int certified_sign_at_root(const IntPolynomial& P, const IntPolynomial& min_poly, const RationalInterval& iv) {
    const IntPolynomial R = reduce_mod(P, min_poly);
    if (R.is_zero() || !gcd(R, min_poly).is_constant()) {
        throw Error(Errc::VanishesAtRoot, P.to_string("a") + " vanishes at a root of " + min_poly.to_string());
    }
    if (R.is_constant()) return sgn(R.lead());

    const SturmSequence mp_sturm(min_poly);
    const SturmSequence r_sturm(R);
    RationalInterval cur = iv;
    while (true) {
        if (cur.lo == cur.hi) return R.sign_at(cur.lo);
        const int s_lo = R.sign_at(cur.lo);
        if (s_lo != 0 && R.sign_at(cur.hi) == s_lo && r_sturm.count_roots(cur.lo, cur.hi) == 0) {
            return s_lo;
        }
        const mpq_class mid = cur.midpoint();
        if (min_poly.sign_at(mid) == 0) return R.sign_at(mid);
        if (mp_sturm.count_roots(cur.lo, mid) == 1) {
            cur.hi = mid;
        } else {
            cur.lo = mid;
        }
    }
}

} // namespace cycsig
