// Sparse multivariate polynomials over an exact coefficient ring.
//
// A Polynomial is a term list sorted descending in its ring's monomial
// order, with no zero coefficients stored. The canonical text format used
// by files and the CLI is produced by to_string() and read by parse();
// round-trips are bit-exact.
#ifndef RESFIN_POLYNOMIAL_HPP
#define RESFIN_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "resfin/coeff.hpp"
#include "resfin/monomial.hpp"

namespace resfin {

template <class R>
struct PolyRing {
    R coeff;
    std::vector<std::string> vars;
    MonomialOrder order;

    PolyRing(R c, std::vector<std::string> v, MonomialOrder o = MonomialOrder::grevlex())
        : coeff(std::move(c)), vars(std::move(v)), order(o) {
        if (vars.size() > kMaxVars) throw Error("too many variables");
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw Error("duplicate variable name: " + vars[i]);
    }
    std::size_t nvars() const { return vars.size(); }
    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }
    bool compatible(const PolyRing& o) const {
        return vars == o.vars && order == o.order && coeff.domain() == o.coeff.domain();
    }
};

template <class R>
using PolyRingPtr = std::shared_ptr<const PolyRing<R>>;

template <class R>
PolyRingPtr<R> make_poly_ring(R c, std::vector<std::string> vars,
                              MonomialOrder o = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing<R>>(std::move(c), std::move(vars), o);
}

template <class R>
class Polynomial {
  public:
    using Coeff = typename R::Elem;
    struct Term {
        Monomial mono;
        Coeff coeff;
    };

    Polynomial() = default;
    explicit Polynomial(PolyRingPtr<R> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(PolyRingPtr<R> ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(PolyRingPtr<R> ring, Coeff c) {
        Polynomial p(ring);
        if (!ring->coeff.is_zero(c))
            p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
        return p;
    }
    static Polynomial from_int(PolyRingPtr<R> ring, long v) {
        return constant(ring, ring->coeff.from_int(v));
    }
    static Polynomial variable(PolyRingPtr<R> ring, std::size_t i) {
        Polynomial p(ring);
        Monomial m(ring->nvars());
        m.set_exp(i, 1);
        p.terms_.push_back({m, ring->coeff.one()});
        return p;
    }
    static Polynomial monomial_term(PolyRingPtr<R> ring, Monomial m, Coeff c) {
        Polynomial p(ring);
        if (!ring->coeff.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    // Normalizes an arbitrary term list: combines duplicates, drops zeros, sorts.
    static Polynomial from_terms(PolyRingPtr<R> ring, std::vector<Term> raw) {
        Polynomial p(ring);
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        for (auto& t : raw) {
            auto it = acc.find(t.mono);
            if (it == acc.end())
                acc.emplace(t.mono, std::move(t.coeff));
            else
                it->second = ring->coeff.add(it->second, t.coeff);
        }
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!ring->coeff.is_zero(c)) p.terms_.push_back({m, std::move(c)});
        p.sort_terms();
        return p;
    }

    const PolyRingPtr<R>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }
    unsigned degree() const {  // total degree; 0 for the zero polynomial
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.deg());
        return d;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) ||
                !ring_->coeff.eq(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = ring_->coeff.neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        return merge(a, b, true);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        const auto& K = a.ring_->coeff;
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(a.terms_.size() * 2);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                Coeff c = K.mul(ta.coeff, tb.coeff);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = K.add(it->second, c);
            }
        Polynomial r(a.ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!K.is_zero(c)) r.terms_.push_back({m, std::move(c)});
        r.sort_terms();
        return r;
    }

    Polynomial scaled(const Coeff& c) const {
        const auto& K = ring_->coeff;
        Polynomial r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Coeff v = K.mul(t.coeff, c);
            if (!K.is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
        }
        return r;
    }

    // c * m * (*this), term order preserved
    Polynomial mul_term(const Coeff& c, const Monomial& m) const {
        const auto& K = ring_->coeff;
        Polynomial r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Coeff v = K.mul(t.coeff, c);
            if (!K.is_zero(v)) r.terms_.push_back({t.mono * m, std::move(v)});
        }
        return r;
    }

    // Moves the term list out; used by reduction buckets.
    std::vector<Term> take_terms() && { return std::move(terms_); }
    static Polynomial from_sorted_terms(PolyRingPtr<R> ring, std::vector<Term> sorted) {
        Polynomial p(std::move(ring));
        p.terms_ = std::move(sorted);
        return p;
    }

    std::string to_string() const;

  private:
    PolyRingPtr<R> ring_;
    std::vector<Term> terms_;

    void check_same_ring(const Polynomial& o) const {
        if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_))
            throw Error("polynomial ring mismatch");
    }
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
            return compare_monomials(x.mono, y.mono, ring_->order) == Cmp::Greater;
        });
    }
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        const auto& K = a.ring_->coeff;
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            Cmp c = compare_monomials(a.terms_[i].mono, b.terms_[j].mono, a.ring_->order);
            if (c == Cmp::Greater) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c == Cmp::Less) {
                const auto& t = b.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? K.neg(t.coeff) : t.coeff});
            } else {
                Coeff v = subtract ? K.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                   : K.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!K.is_zero(v)) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            r.terms_.push_back({t.mono, subtract ? K.neg(t.coeff) : t.coeff});
        }
        return r;
    }
};

enum class PolyOp { Add, Sub, Mul };

template <class R>
Polynomial<R> poly_arith(const Polynomial<R>& f, const Polynomial<R>& g, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return f + g;
        case PolyOp::Sub: return f - g;
        default: return f * g;
    }
}

// ---------------------------------------------------------------------------
// Multivariate division with remainder (field coefficients).
// ---------------------------------------------------------------------------

template <class R>
struct DivModResult {
    std::vector<Polynomial<R>> quotients;
    Polynomial<R> remainder;
};

// Divides f by the given list: f = sum q_i d_i + r, where no monomial of r
// is divisible by any leading monomial of the divisors. Divisor choice at
// each step is the first divisor in list order whose leading monomial fits.
template <class R>
DivModResult<R> poly_divmod(const Polynomial<R>& f, const std::vector<Polynomial<R>>& divisors) {
    static_assert(R::is_field, "division with remainder requires field coefficients");
    const auto ring = f.ring();
    const auto& K = ring->coeff;
    for (const auto& d : divisors)
        if (d.is_zero()) throw Error("zero divisor polynomial");

    DivModResult<R> out;
    out.quotients.assign(divisors.size(), Polynomial<R>::zero(ring));
    out.remainder = Polynomial<R>::zero(ring);

    using Term = typename Polynomial<R>::Term;
    std::vector<Term> rem;
    Polynomial<R> h = f;
    while (!h.is_zero()) {
        const auto& lt = h.leading();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const auto& dlt = divisors[i].leading();
            if (dlt.mono.divides(lt.mono)) {
                typename R::Elem c = K.div(lt.coeff, dlt.coeff);
                Monomial m = lt.mono / dlt.mono;
                out.quotients[i] =
                    out.quotients[i] + Polynomial<R>::monomial_term(ring, m, c);
                h = h - divisors[i].mul_term(c, m);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(lt);
            auto ts = std::move(h).take_terms();
            ts.erase(ts.begin());
            h = Polynomial<R>::from_sorted_terms(ring, std::move(ts));
        }
    }
    out.remainder = Polynomial<R>::from_sorted_terms(ring, std::move(rem));
    return out;
}

// Content (gcd of coefficients) of an integer polynomial.
inline mpz_class poly_content(const Polynomial<ZZRing>& f) {
    mpz_class g = 0;
    for (const auto& t : f.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline Polynomial<ZZRing> primitive_part(const Polynomial<ZZRing>& f) {
    mpz_class c = poly_content(f);
    if (c == 0 || c == 1) return f;
    std::vector<Polynomial<ZZRing>::Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) ts.push_back({t.mono, t.coeff / c});
    return Polynomial<ZZRing>::from_sorted_terms(f.ring(), std::move(ts));
}

// ---------------------------------------------------------------------------
// Canonical text format.
// ---------------------------------------------------------------------------

namespace detail {
inline std::string coeff_text(const ZZRing& K, const mpz_class& c) { return K.to_string(c); }
inline std::string coeff_text(const QQRing& K, const mpq_class& c) { return K.to_string(c); }
inline std::string coeff_text(const FpRing& K, std::uint64_t c) { return K.to_string(c); }
inline bool coeff_negative(const ZZRing&, const mpz_class& c) { return sgn(c) < 0; }
inline bool coeff_negative(const QQRing&, const mpq_class& c) { return sgn(c) < 0; }
inline bool coeff_negative(const FpRing&, std::uint64_t) { return false; }
}  // namespace detail

template <class R>
std::string Polynomial<R>::to_string() const {
    if (terms_.empty()) return "0";
    const auto& K = ring_->coeff;
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Coeff c = t.coeff;
        bool neg = detail::coeff_negative(K, c);
        if (neg) c = K.neg(c);
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? '-' : '+';
        }
        std::string cs = detail::coeff_text(K, c);
        if (t.mono.is_one()) {
            out += cs;
        } else {
            bool unit = K.is_one(c);
            if (!unit) {
                out += cs;
                out += '*';
            }
            bool firstv = true;
            for (std::size_t i = 0; i < ring_->nvars(); ++i) {
                unsigned e = t.mono.exp(i);
                if (!e) continue;
                if (!firstv) out += '*';
                firstv = false;
                out += ring_->vars[i];
                if (e > 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
    }
    return out;
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("polynomial syntax error at position " + std::to_string(pos) + ": " + msg);
    }
    std::string ident() {
        skip_ws();
        std::size_t b = pos;
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos]))))
            fail("expected identifier");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(b, pos - b);
    }
    std::string integer() {
        skip_ws();
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (b == pos) fail("expected integer");
        return s.substr(b, pos - b);
    }
};

template <class R>
typename R::Elem parse_coeff(PolyLexer& lx, const R& K, const std::string& num) {
    if constexpr (std::is_same_v<R, QQRing>) {
        if (lx.peek() == '/') {
            ++lx.pos;
            std::string den = lx.integer();
            mpq_class q(num + "/" + den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    } else if constexpr (std::is_same_v<R, ZZRing>) {
        return mpz_class(num);
    } else {
        mpz_class z(num);
        mpz_class m = z % static_cast<unsigned long>(K.p);
        if (m < 0) m += static_cast<unsigned long>(K.p);
        return static_cast<std::uint64_t>(m.get_ui());
    }
}

}  // namespace detail

// Parses the canonical format (signs, integer or num/den coefficients,
// '*'-separated variable powers). Whitespace is permitted between tokens.
template <class R>
Polynomial<R> parse_polynomial(PolyRingPtr<R> ring, const std::string& text) {
    detail::PolyLexer lx{text};
    const auto& K = ring->coeff;
    using Term = typename Polynomial<R>::Term;
    std::vector<Term> terms;

    bool any = false;
    while (!lx.eof()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++lx.pos;
        } else if (any) {
            lx.fail("expected '+' or '-' between terms");
        }
        // term: coefficient and/or variable powers
        typename R::Elem coeff = K.one();
        bool saw_factor = false;
        Monomial mono(ring->nvars());
        for (;;) {
            char t = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(t))) {
                std::string num = lx.integer();
                coeff = K.mul(coeff, detail::parse_coeff(lx, K, num));
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(t))) {
                std::string name = lx.ident();
                auto idx = ring->var_index(name);
                if (!idx) lx.fail("unknown variable '" + name + "'");
                unsigned e = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    e = static_cast<unsigned>(std::stoul(lx.integer()));
                }
                mono.set_exp(*idx, mono.exp(*idx) + e);
                saw_factor = true;
            } else {
                break;
            }
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) lx.fail("expected term");
        if (neg) coeff = K.neg(coeff);
        terms.push_back({mono, coeff});
        any = true;
    }
    if (!any) throw Error("empty polynomial text");
    return Polynomial<R>::from_terms(ring, std::move(terms));
}

}  // namespace resfin

#endif
