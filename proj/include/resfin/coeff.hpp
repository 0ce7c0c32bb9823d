// Coefficient domains: arbitrary-precision integers and rationals (GMP),
// and prime fields with word-sized modulus.
#ifndef RESFIN_COEFF_HPP
#define RESFIN_COEFF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace resfin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DomainTag { Integers, Rationals, PrimeField };

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Runtime description of a coefficient domain (ZZ, QQ, or F_p).
struct CoefficientDomain {
    DomainTag tag = DomainTag::Rationals;
    std::uint64_t p = 0;  // modulus when tag == PrimeField

    static CoefficientDomain integers() { return {DomainTag::Integers, 0}; }
    static CoefficientDomain rationals() { return {DomainTag::Rationals, 0}; }
    static CoefficientDomain prime_field(std::uint64_t p) {
        if (!is_prime_u64(p)) throw Error("prime field modulus must be prime: " + std::to_string(p));
        return {DomainTag::PrimeField, p};
    }
    bool is_field() const { return tag != DomainTag::Integers; }
    bool operator==(const CoefficientDomain&) const = default;

    std::string name() const {
        switch (tag) {
            case DomainTag::Integers: return "zz";
            case DomainTag::Rationals: return "qq";
            default: return "fp:" + std::to_string(p);
        }
    }
    // Accepts the CLI spelling: zz | qq | fp:<p>
    static CoefficientDomain parse(const std::string& s) {
        if (s == "zz") return integers();
        if (s == "qq") return rationals();
        if (s.rfind("fp:", 0) == 0) return prime_field(std::stoull(s.substr(3)));
        throw Error("unknown coefficient domain: " + s);
    }
};

// ---------------------------------------------------------------------------
// Static coefficient rings. Each provides the element type plus the handful
// of operations polynomial arithmetic needs. Fp carries its modulus as state.
// ---------------------------------------------------------------------------

struct ZZRing {
    using Elem = mpz_class;
    static constexpr bool is_field = false;

    CoefficientDomain domain() const { return CoefficientDomain::integers(); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem&, const Elem&) const { throw Error("division in ZZ is not defined"); }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct QQRing {
    using Elem = mpq_class;
    static constexpr bool is_field = true;

    CoefficientDomain domain() const { return CoefficientDomain::rationals(); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { Elem r = a + b; r.canonicalize(); return r; }
    Elem sub(const Elem& a, const Elem& b) const { Elem r = a - b; r.canonicalize(); return r; }
    Elem mul(const Elem& a, const Elem& b) const { Elem r = a * b; r.canonicalize(); return r; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw Error("division by zero");
        Elem r = a / b; r.canonicalize(); return r;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct FpRing {
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;
    std::uint64_t p;

    explicit FpRing(std::uint64_t p_) : p(p_) {
        if (!is_prime_u64(p_)) throw Error("modulus must be prime");
        if (p_ >> 32) throw Error("prime field modulus too large");
    }
    CoefficientDomain domain() const { return CoefficientDomain::prime_field(p); }
    Elem zero() const { return 0; }
    Elem one() const { return p == 1 ? 0 : 1; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return static_cast<Elem>(m);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    std::string to_string(Elem a) const { return std::to_string(a); }
};

// Calls fn with the static ring matching a runtime domain tag.
template <class Fn>
auto with_coeff_ring(const CoefficientDomain& d, Fn&& fn) {
    switch (d.tag) {
        case DomainTag::Integers: return fn(ZZRing{});
        case DomainTag::Rationals: return fn(QQRing{});
        default: return fn(FpRing{d.p});
    }
}

}  // namespace resfin

#endif
