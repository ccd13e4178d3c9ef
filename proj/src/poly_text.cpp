#include "poly_text.hpp"

#include <algorithm>
#include <cctype>

namespace lsreal {

namespace {

template <class F>
std::string render(const Poly<F>& p, const Ring& ring, const F& field,
                   bool (*negative)(const typename F::Elem&),
                   std::string (*magnitude)(const typename F::Elem&, const F&)) {
    if (p.terms.empty()) return "0";
    MonomialOrder order = MonomialOrder::make_degrevlex(ring.nvars());
    std::vector<typename Poly<F>::Term> terms = p.terms;
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return order.greater(a.m, b.m); });

    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        bool neg = negative(t.c);
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::vector<std::string> factors;
        std::string mag = magnitude(t.c, field);
        if (mag != "1" || t.m.is_constant()) factors.push_back(mag);
        for (int v = 0; v < ring.nvars(); ++v) {
            if (!t.m.e[v]) continue;
            std::string f = ring.vars[v];
            if (t.m.e[v] > 1) f += "^" + std::to_string(t.m.e[v]);
            factors.push_back(std::move(f));
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k) out += "*";
            out += factors[k];
        }
    }
    return out;
}

bool q_negative(const mpq_class& c) { return sgn(c) < 0; }
std::string q_magnitude(const mpq_class& c, const RationalField&) { return mpq_class(abs(c)).get_str(); }

bool fp_negative(const std::uint64_t&) { return false; }
std::string fp_magnitude(const std::uint64_t& c, const PrimeField&) { return std::to_string(c); }

template <class F>
class Parser {
public:
    Parser(const std::string& text, const Ring& ring, const F& field)
        : text_(text), ring_(ring), field_(field) {}

    Poly<F> run() {
        Poly<F> acc;
        MonomialOrder order = MonomialOrder::make_degrevlex(ring_.nvars());
        skip_space();
        bool negate = consume_sign();
        for (;;) {
            Poly<F> term = parse_term();
            if (negate) term = poly_neg(term, field_);
            acc = poly_add(acc, term, field_, order);
            skip_space();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == '+') {
                ++pos_;
                negate = false;
            } else if (c == '-') {
                ++pos_;
                negate = true;
            } else {
                fail(ErrorCode::parse, "unexpected character in polynomial: " + std::string(1, c));
            }
            skip_space();
        }
        return acc;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume_sign() {
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            skip_space();
            return true;
        }
        if (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            skip_space();
        }
        return false;
    }

    std::string parse_integer() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(ErrorCode::parse, "expected a number in polynomial");
        return text_.substr(start, pos_ - start);
    }

    typename F::Elem parse_coefficient() {
        std::string num = parse_integer();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_space();
            std::string den = parse_integer();
            return coeff_from_fraction(num, den);
        }
        return coeff_from_fraction(num, "1");
    }

    typename F::Elem coeff_from_fraction(const std::string& num, const std::string& den);

    Poly<F> parse_term() {
        typename F::Elem coeff = field_.one();
        Monomial mono = Monomial::one();
        bool any = false;
        for (;;) {
            skip_space();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coeff = field_.mul(coeff, parse_coefficient());
                any = true;
            } else {
                int var = match_var();
                if (var < 0) {
                    if (!any) fail(ErrorCode::parse, "expected a coefficient or variable");
                    break;
                }
                int exp = 1;
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == '^') {
                    ++pos_;
                    skip_space();
                    exp = std::stoi(parse_integer());
                }
                mono = mono.times(Monomial::var(var, exp));
                any = true;
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return poly_term(field_, mono, coeff);
    }

    int match_var() {
        int best = -1;
        size_t best_len = 0;
        for (int i = 0; i < ring_.nvars(); ++i) {
            const std::string& name = ring_.vars[i];
            if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
                best = i;
                best_len = name.size();
            }
        }
        if (best >= 0) pos_ += best_len;
        return best;
    }

    const std::string& text_;
    const Ring& ring_;
    const F& field_;
    size_t pos_ = 0;
};

template <>
mpq_class Parser<RationalField>::coeff_from_fraction(const std::string& num, const std::string& den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

template <>
std::uint64_t Parser<PrimeField>::coeff_from_fraction(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    mpz_class p(static_cast<unsigned long>(field_.p));
    mpz_class nr = n % p;
    if (nr < 0) nr += p;
    mpz_class dr = d % p;
    if (dr < 0) dr += p;
    if (dr == 0) fail(ErrorCode::parse, "denominator divisible by the modulus");
    return field_.div(nr.get_ui(), dr.get_ui());
}

} // namespace

std::string poly_to_text(const PolyQ& p, const Ring& ring) {
    RationalField field;
    return render<RationalField>(p, ring, field, q_negative, q_magnitude);
}

PolyQ poly_from_text(const std::string& text, const Ring& ring) {
    RationalField field;
    return Parser<RationalField>(text, ring, field).run();
}

std::string poly_to_text_fp(const PolyFp& p, const Ring& ring, const PrimeField& field) {
    return render<PrimeField>(p, ring, field, fp_negative, fp_magnitude);
}

PolyFp poly_from_text_fp(const std::string& text, const Ring& ring, const PrimeField& field) {
    return Parser<PrimeField>(text, ring, field).run();
}

} // namespace lsreal
