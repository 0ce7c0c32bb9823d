// Universal 2x2 representation data for a finite presentation: the polynomial
// ring S_K, the ideal I_K, and the generator matrices, for K in
// {SL2, GL2, PSL2, PGL2}; plus element-level triviality testing.
//
// Variable layout (grevlex declaration order): per generator g the four
// matrix entries g_a, g_b, g_c, g_d; then y_<g> for the GL2/PGL2 kinds; then
// lam<j> per relator for the projective kinds. Inverse matrices are
// adjugates (times y_<g> for GL2/PGL2).
#ifndef RESFIN_UNIVERSAL_HPP
#define RESFIN_UNIVERSAL_HPP

#include <array>
#include <string>
#include <vector>

#include "resfin/membership.hpp"
#include "resfin/presentation.hpp"

namespace resfin {

enum class KKind { SL2, GL2, PSL2, PGL2 };

inline const char* to_string(KKind k) {
    switch (k) {
        case KKind::SL2: return "sl2";
        case KKind::GL2: return "gl2";
        case KKind::PSL2: return "psl2";
        default: return "pgl2";
    }
}
inline KKind parse_kkind(const std::string& s) {
    if (s == "sl2") return KKind::SL2;
    if (s == "gl2") return KKind::GL2;
    if (s == "psl2") return KKind::PSL2;
    if (s == "pgl2") return KKind::PGL2;
    throw Error("unknown matrix-group kind: " + s);
}
inline bool is_projective(KKind k) { return k == KKind::PSL2 || k == KKind::PGL2; }
inline bool has_det_unit_vars(KKind k) { return k == KKind::GL2 || k == KKind::PGL2; }

// Row-major 2x2 matrix of integer polynomials.
struct PolyMatrix2 {
    std::array<Polynomial<ZZRing>, 4> e;

    static PolyMatrix2 identity(const PolyRingPtr<ZZRing>& ring) {
        return {{Polynomial<ZZRing>::from_int(ring, 1), Polynomial<ZZRing>::zero(ring),
                 Polynomial<ZZRing>::zero(ring), Polynomial<ZZRing>::from_int(ring, 1)}};
    }
    PolyMatrix2 operator*(const PolyMatrix2& o) const {
        return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                 e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
    }
    Polynomial<ZZRing> det() const { return e[0] * e[3] - e[1] * e[2]; }
    bool operator==(const PolyMatrix2& o) const { return e == o.e; }
};

class UniversalModel {
  public:
    UniversalModel(Presentation pres, KKind kind);

    const Presentation& presentation() const { return pres_; }
    KKind kind() const { return kind_; }
    const PolyRingPtr<ZZRing>& ring() const { return ring_; }
    const IdealZ& ideal() const { return ideal_; }
    const PolyMatrix2& generator_matrix(std::size_t i) const { return gen_mats_[i]; }
    const PolyMatrix2& inverse_matrix(std::size_t i) const { return inv_mats_[i]; }
    std::size_t lambda_var(std::size_t relator) const { return lambda_index_[relator]; }
    std::size_t det_unit_var(std::size_t gen) const { return y_index_[gen]; }

    PolyMatrix2 eval_word(const Word& w) const {
        PolyMatrix2 m = PolyMatrix2::identity(ring_);
        for (const auto& l : w.letters)
            m = m * (l.sign > 0 ? gen_mats_[l.gen] : inv_mats_[l.gen]);
        return m;
    }

  private:
    Presentation pres_;
    KKind kind_;
    PolyRingPtr<ZZRing> ring_;
    std::vector<PolyMatrix2> gen_mats_, inv_mats_;
    std::vector<std::size_t> y_index_, lambda_index_;
    IdealZ ideal_;
};

inline UniversalModel::UniversalModel(Presentation pres, KKind kind)
    : pres_(std::move(pres)), kind_(kind) {
    const std::size_t n = pres_.rank();
    const std::size_t nrel = pres_.relators().size();

    std::vector<std::string> vars;
    for (const auto& g : pres_.generators())
        for (const char* s : {"_a", "_b", "_c", "_d"}) vars.push_back(g + s);
    if (has_det_unit_vars(kind_))
        for (const auto& g : pres_.generators()) {
            y_index_.push_back(vars.size());
            vars.push_back("y_" + g);
        }
    if (is_projective(kind_))
        for (std::size_t j = 0; j < nrel; ++j) {
            lambda_index_.push_back(vars.size());
            vars.push_back("lam" + std::to_string(j + 1));
        }
    ring_ = make_poly_ring(ZZRing{}, vars);

    auto var = [&](std::size_t i) { return Polynomial<ZZRing>::variable(ring_, i); };
    for (std::size_t i = 0; i < n; ++i) {
        auto a = var(4 * i), b = var(4 * i + 1), c = var(4 * i + 2), d = var(4 * i + 3);
        gen_mats_.push_back({{a, b, c, d}});
        PolyMatrix2 adj{{d, -b, -c, a}};
        if (has_det_unit_vars(kind_)) {
            auto y = var(y_index_[i]);
            adj = {{y * adj.e[0], y * adj.e[1], y * adj.e[2], y * adj.e[3]}};
        }
        inv_mats_.push_back(adj);
    }

    std::vector<Polynomial<ZZRing>> gens;
    auto one = Polynomial<ZZRing>::from_int(ring_, 1);
    for (std::size_t i = 0; i < n; ++i) {
        auto d = gen_mats_[i].det();
        gens.push_back(has_det_unit_vars(kind_) ? d * var(y_index_[i]) - one : d - one);
    }
    if (kind_ == KKind::PSL2)
        for (std::size_t j = 0; j < nrel; ++j)
            gens.push_back(var(lambda_index_[j]) * var(lambda_index_[j]) - one);
    for (std::size_t j = 0; j < nrel; ++j) {
        PolyMatrix2 pr = eval_word(pres_.relators()[j]);
        Polynomial<ZZRing> scalar =
            is_projective(kind_) ? var(lambda_index_[j]) : one;
        gens.push_back(pr.e[0] - scalar);
        gens.push_back(pr.e[1]);
        gens.push_back(pr.e[2]);
        gens.push_back(pr.e[3] - scalar);
    }
    ideal_ = IdealZ(ring_, std::move(gens));
}

inline UniversalModel build_universal(Presentation P, KKind K) {
    return UniversalModel(std::move(P), K);
}

// ---------------------------------------------------------------------------
// Element-level triviality (the injectivity test specialized to one word).
// ---------------------------------------------------------------------------

enum class Triviality { Trivial, Nontrivial, Inconclusive, DegenerateUnitIdeal };

inline const char* to_string(Triviality t) {
    switch (t) {
        case Triviality::Trivial: return "TRIVIAL";
        case Triviality::Nontrivial: return "NONTRIVIAL";
        case Triviality::Inconclusive: return "INCONCLUSIVE";
        default: return "DEGENERATE_UNIT_IDEAL";
    }
}

struct TrivialityVerdict {
    Triviality status = Triviality::Inconclusive;
    CoefficientDomain domain;
    // one membership verdict per tested matrix-entry condition
    std::vector<std::pair<std::string, MembershipVerdict>> entries;
};

// SL2/GL2: w is trivial iff all four entries of p(w) - Id lie in I_K.
// PSL2/PGL2: both off-diagonal entries and the diagonal difference lie in
// I_K; the shared diagonal value is then automatically a unit scalar.
inline TrivialityVerdict test_triviality(const UniversalModel& M, const Word& w,
                                         CoefficientDomain domain,
                                         const MembershipOptions& opts = {}) {
    TrivialityVerdict out;
    out.domain = domain;

    if (domain.is_field()) {
        const bool unit = with_coeff_ring(domain, [&](auto K) {
            using R = decltype(K);
            if constexpr (std::is_same_v<R, QQRing>)
                return M.ideal().gb_qq(opts.order, opts.gb).is_unit_ideal();
            else if constexpr (std::is_same_v<R, FpRing>)
                return M.ideal().gb_fp(K.p, opts.order, opts.gb).is_unit_ideal();
            else
                return false;
        });
        if (unit) {
            out.status = Triviality::DegenerateUnitIdeal;
            return out;
        }
    }

    PolyMatrix2 pw = M.eval_word(w);
    auto one = Polynomial<ZZRing>::from_int(M.ring(), 1);
    std::vector<std::pair<std::string, Polynomial<ZZRing>>> targets;
    if (is_projective(M.kind())) {
        targets.emplace_back("entry12", pw.e[1]);
        targets.emplace_back("entry21", pw.e[2]);
        targets.emplace_back("diag-difference", pw.e[0] - pw.e[3]);
    } else {
        targets.emplace_back("entry11-1", pw.e[0] - one);
        targets.emplace_back("entry12", pw.e[1]);
        targets.emplace_back("entry21", pw.e[2]);
        targets.emplace_back("entry22-1", pw.e[3] - one);
    }

    bool all_member = true, any_nonmember = false;
    for (auto& [label, poly] : targets) {
        MembershipVerdict v = is_member(poly, M.ideal(), domain, opts);
        all_member = all_member && v.status == Membership::Member;
        any_nonmember = any_nonmember || v.status == Membership::NonMember;
        out.entries.emplace_back(label, std::move(v));
    }
    out.status = all_member ? Triviality::Trivial
                            : (any_nonmember ? Triviality::Nontrivial : Triviality::Inconclusive);
    return out;
}

}  // namespace resfin

#endif
