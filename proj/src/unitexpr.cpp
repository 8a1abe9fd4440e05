#include "cycsig/unitexpr.hpp"

#include "cycsig/error.hpp"

#include <cctype>

namespace cycsig {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 16;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IntPolynomial parse() {
        IntPolynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    IntPolynomial expr() {
        IntPolynomial acc = term();
        while (true) {
            skip_space();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    IntPolynomial term() {
        IntPolynomial acc = unary();
        while (true) {
            skip_space();
            if (!accept('*')) return acc;
            acc *= unary();
        }
    }

    IntPolynomial unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    IntPolynomial power() {
        IntPolynomial base = primary();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        const mpz_class e = digits();
        if (e > kMaxExponent) fail("exponent too large", at);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    IntPolynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        IntPolynomial out;
        if (c == 'a') {
            ++pos_;
            out = IntPolynomial::variable();
        } else if (c == '(') {
            ++pos_;
            out = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            out = IntPolynomial::constant(digits());
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        // Juxtaposition such as "2a" or "a(a+1)" is rejected here.
        skip_space();
        if (pos_ < text_.size() && (text_[pos_] == 'a' || text_[pos_] == '(' ||
                                    std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
            fail("implicit multiplication is not allowed");
        }
        return out;
    }

    mpz_class digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) {
        throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(at), at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

UnitExpr parse_unit_expr(std::string_view text) {
    IntPolynomial poly = Parser(text).parse();
    if (poly.is_zero()) throw Error(Errc::ZeroExpression, "'" + std::string(text) + "' expands to 0");
    return UnitExpr{std::string(text), std::move(poly)};
}

SignVector expr_signature(const UnitExpr& e, const PeriodField& pf, const Modulus& mod) {
    std::vector<int> root_sign(pf.roots.size(), 0);
    for (std::size_t i = 0; i < pf.roots.size(); ++i) {
        root_sign[i] = certified_sign_at_root(e.poly, pf.min_poly, pf.roots[i]);
    }
    const auto embeddings = embedding_set(mod);
    SignVector v(embeddings.size());
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        const auto j = pf.cosets.coset_of.at(static_cast<std::size_t>(embeddings[i]));
        if (root_sign[pf.root_of_coset.at(static_cast<std::size_t>(j))] < 0) v.set(i);
    }
    return v;
}

} // namespace cycsig
