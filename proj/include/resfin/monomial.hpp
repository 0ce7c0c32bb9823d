// Power products over a fixed ambient variable list, with grevlex/lex orders.
#ifndef RESFIN_MONOMIAL_HPP
#define RESFIN_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

#include "resfin/coeff.hpp"

namespace resfin {

// Hard cap on ambient variables; large enough for every model built here
// (a 4-generator PSL2 model with 10 relators uses 26).
inline constexpr std::size_t kMaxVars = 32;

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
        if (nvars > kMaxVars) throw Error("too many variables (cap " + std::to_string(kMaxVars) + ")");
    }
    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    std::size_t nvars() const { return nvars_; }
    unsigned deg() const { return deg_; }
    unsigned exp(std::size_t i) const { return e_[i]; }
    bool is_one() const { return deg_ == 0; }

    void set_exp(std::size_t i, unsigned v) {
        if (v > 255) throw Error("exponent overflow");
        deg_ += v - e_[i];
        e_[i] = static_cast<std::uint8_t>(v);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < nvars_; ++i) {
            unsigned s = static_cast<unsigned>(e_[i]) + o.e_[i];
            if (s > 255) throw Error("exponent overflow");
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller guarantees o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(nvars_);
        unsigned d = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            r.e_[i] = e_[i] > o.e_[i] ? e_[i] : o.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        return nvars_ == o.nvars_ && deg_ == o.deg_ &&
               std::memcmp(e_.data(), o.e_.data(), nvars_) == 0;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < nvars_; ++i) {
            h ^= e_[i];
            h *= 1099511628211ull;
        }
        return h ^ deg_;
    }

  private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
    std::uint8_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Grevlex, Lex };

struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;

    static MonomialOrder grevlex() { return {OrderKind::Grevlex}; }
    static MonomialOrder lex() { return {OrderKind::Lex}; }
    bool operator==(const MonomialOrder&) const = default;

    std::string name() const { return kind == OrderKind::Grevlex ? "grevlex" : "lex"; }
    static MonomialOrder parse(const std::string& s) {
        if (s == "grevlex") return grevlex();
        if (s == "lex") return lex();
        throw Error("unknown monomial order: " + s);
    }
};

inline Cmp compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.nvars() != b.nvars()) throw Error("monomial length mismatch");
    const std::size_t n = a.nvars();
    if (ord.kind == OrderKind::Lex) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? Cmp::Greater : Cmp::Less;
        }
        return Cmp::Equal;
    }
    if (a.deg() != b.deg()) return a.deg() > b.deg() ? Cmp::Greater : Cmp::Less;
    // grevlex tie-break: last differing exponent, smaller exponent wins
    for (std::size_t i = n; i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
}

inline bool mono_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return compare_monomials(a, b, ord) == Cmp::Less;
}

}  // namespace resfin

#endif
