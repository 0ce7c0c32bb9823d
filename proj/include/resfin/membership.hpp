// Ideal membership verdicts over a chosen coefficient domain.
//
// Field domains are decided by normal form against a cached Groebner basis.
// Integer-domain questions are answered through certificates: a verdict of
// MEMBER over ZZ always carries an integral cofactor certificate, NON_MEMBER
// over QQ transfers to ZZ, and anything else is reported INCONCLUSIVE with
// diagnostics rather than guessed.
#ifndef RESFIN_MEMBERSHIP_HPP
#define RESFIN_MEMBERSHIP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resfin/certificate.hpp"
#include "resfin/groebner.hpp"

namespace resfin {

// An ideal presented over ZZ (the base ring of every symbolic model here),
// queried over ZZ, QQ, or F_p. Groebner bases are cached per (domain, order).
class IdealZ {
  public:
    IdealZ() = default;
    IdealZ(PolyRingPtr<ZZRing> ring, std::vector<Polynomial<ZZRing>> gens)
        : ring_(std::move(ring)) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));  // zero generators dropped
    }

    const PolyRingPtr<ZZRing>& ring() const { return ring_; }
    const std::vector<Polynomial<ZZRing>>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    PolyRingPtr<QQRing> ring_qq(MonomialOrder ord) const {
        auto& slot = qq_rings_[ord.name()];
        if (!slot) slot = make_poly_ring(QQRing{}, ring_->vars, ord);
        return slot;
    }
    PolyRingPtr<FpRing> ring_fp(std::uint64_t p, MonomialOrder ord) const {
        auto& slot = fp_rings_[{p, ord.name()}];
        if (!slot) slot = make_poly_ring(FpRing{p}, ring_->vars, ord);
        return slot;
    }

    const GroebnerBasis<QQRing>& gb_qq(MonomialOrder ord, const BuchbergerOptions& opts) const {
        auto it = qq_gb_.find(ord.name());
        if (it != qq_gb_.end() && (it->second.complete || it->second.pairs_processed >= opts.pair_budget))
            return it->second;
        auto ring = ring_qq(ord);
        std::vector<Polynomial<QQRing>> gens;
        for (const auto& g : gens_) gens.push_back(coerce_poly(g, ring));
        return qq_gb_[ord.name()] = buchberger(ring, gens, opts);
    }
    const GroebnerBasis<FpRing>& gb_fp(std::uint64_t p, MonomialOrder ord,
                                       const BuchbergerOptions& opts) const {
        auto key = std::make_pair(p, ord.name());
        auto it = fp_gb_.find(key);
        if (it != fp_gb_.end() && (it->second.complete || it->second.pairs_processed >= opts.pair_budget))
            return it->second;
        auto ring = ring_fp(p, ord);
        std::vector<Polynomial<FpRing>> gens;
        for (const auto& g : gens_) gens.push_back(coerce_poly(g, ring));
        return fp_gb_[key] = buchberger(ring, gens, opts);
    }

  private:
    PolyRingPtr<ZZRing> ring_;
    std::vector<Polynomial<ZZRing>> gens_;
    mutable std::map<std::string, PolyRingPtr<QQRing>> qq_rings_;
    mutable std::map<std::pair<std::uint64_t, std::string>, PolyRingPtr<FpRing>> fp_rings_;
    mutable std::map<std::string, GroebnerBasis<QQRing>> qq_gb_;
    mutable std::map<std::pair<std::uint64_t, std::string>, GroebnerBasis<FpRing>> fp_gb_;
};

enum class Membership { Member, NonMember, Inconclusive };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::Member: return "MEMBER";
        case Membership::NonMember: return "NON_MEMBER";
        default: return "INCONCLUSIVE";
    }
}

struct MembershipVerdict {
    Membership status = Membership::Inconclusive;
    CoefficientDomain domain;
    std::optional<MembershipCertificate> certificate;
    std::string normal_form;   // nonzero remainder backing a NON_MEMBER verdict
    std::string diagnostics;
    std::size_t basis_size = 0;
    std::optional<unsigned> cofactor_degree;
};

struct MembershipOptions {
    MonomialOrder order = MonomialOrder::grevlex();
    BuchbergerOptions gb;
    unsigned max_degree = 8;            // cofactor degree bound for the ZZ route
    std::size_t macaulay_cell_budget = 40'000'000;  // matrix-size guard
    bool use_groebner = true;           // certificate_search fast path
    bool want_certificate = true;
};

// --------------------------------------------------------------------------
// Degree-bounded certificate search (Macaulay linear system).
// --------------------------------------------------------------------------

enum class CertSearchStatus {
    Found,            // certificate over the requested domain
    FoundRationalOnly,  // ZZ requested; rational certificate found, integrality open
    NotFound,         // no certificate with cofactor degrees <= bound exists
    Inconclusive      // resource budget exceeded before a decision
};

struct CertSearchResult {
    CertSearchStatus status = CertSearchStatus::Inconclusive;
    std::optional<MembershipCertificate> certificate;
    unsigned degree_bound = 0;
    std::string diagnostics;
};

namespace detail {

// All monomials of total degree <= maxdeg, in a fixed deterministic order.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
        if (pos == nvars) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= rem; ++e) {
            cur.set_exp(pos, e);
            self(self, pos + 1, rem - e);
        }
        cur.set_exp(pos, 0);
    };
    rec(rec, 0, maxdeg);
    return out;
}

}  // namespace detail

// Solves sum_{i,m} x_{i,m} * m * gens[i] = f for cofactor coefficients of
// degree <= maxdeg via sparse Gaussian elimination. Complete within the
// bound: an unsolvable system proves no such certificate exists.
template <class R>
CertSearchResult macaulay_search(const PolyRingPtr<R>& ring,
                                 const std::vector<Polynomial<R>>& gens,
                                 const Polynomial<R>& f, unsigned maxdeg,
                                 std::size_t cell_budget) {
    static_assert(R::is_field);
    const auto& K = ring->coeff;
    CertSearchResult res;
    res.degree_bound = maxdeg;

    std::vector<Monomial> mons = detail::monomials_up_to(ring->nvars(), maxdeg);
    std::size_t ncols = 0;
    std::size_t cells = f.size();
    for (const auto& g : gens) {
        ncols += mons.size();
        cells += mons.size() * g.size();
    }
    if (cells > cell_budget) {
        res.status = CertSearchStatus::Inconclusive;
        res.diagnostics = "macaulay system too large (" + std::to_string(cells) +
                          " cells at degree " + std::to_string(maxdeg) + ")";
        return res;
    }

    // Intern row monomials.
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> row_id;
    auto intern = [&](const Monomial& m) {
        auto [it, fresh] = row_id.emplace(m, static_cast<std::uint32_t>(row_id.size()));
        return it->second;
    };

    using Entry = std::pair<std::uint32_t, typename R::Elem>;  // (column, coeff)
    std::vector<std::vector<Entry>> rows;
    auto row_of = [&](const Monomial& m) -> std::vector<Entry>& {
        std::uint32_t id = intern(m);
        if (id >= rows.size()) rows.resize(id + 1);
        return rows[id];
    };

    std::uint32_t col = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& m : mons) {
            for (const auto& t : gens[i].terms()) row_of(t.mono * m).push_back({col, t.coeff});
            ++col;
        }
    }
    std::vector<typename R::Elem> rhs(rows.size(), K.zero());
    for (const auto& t : f.terms()) {
        std::uint32_t id = intern(t.mono);
        if (id >= rows.size()) rows.resize(id + 1);
        if (id >= rhs.size()) rhs.resize(id + 1, K.zero());
        rhs[id] = t.coeff;
    }
    rhs.resize(rows.size(), K.zero());

    // Row order: fewest entries first (grevlex-descending as tie-break is
    // implicit in creation order, which is deterministic).
    std::vector<std::uint32_t> row_order(rows.size());
    for (std::uint32_t i = 0; i < rows.size(); ++i) row_order[i] = i;
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rows[a].size() < rows[b].size(); });

    struct PivotRow {
        std::uint32_t col;
        std::vector<Entry> entries;  // normalized, pivot coefficient 1
        typename R::Elem rhs;
    };
    std::vector<PivotRow> pivots;
    std::unordered_map<std::uint32_t, std::uint32_t> pivot_of_col;

    auto combine = [&](std::vector<Entry>& row, typename R::Elem& b, const PivotRow& pv,
                       const typename R::Elem& factor) {
        // row -= factor * pv
        std::vector<Entry> out;
        out.reserve(row.size() + pv.entries.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() && j < pv.entries.size()) {
            if (row[i].first < pv.entries[j].first)
                out.push_back(std::move(row[i++]));
            else if (row[i].first > pv.entries[j].first) {
                out.push_back({pv.entries[j].first, K.neg(K.mul(factor, pv.entries[j].second))});
                ++j;
            } else {
                typename R::Elem v = K.sub(row[i].second, K.mul(factor, pv.entries[j].second));
                if (!K.is_zero(v)) out.push_back({row[i].first, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < row.size(); ++i) out.push_back(std::move(row[i]));
        for (; j < pv.entries.size(); ++j)
            out.push_back({pv.entries[j].first, K.neg(K.mul(factor, pv.entries[j].second))});
        row = std::move(out);
        b = K.sub(b, K.mul(factor, pv.rhs));
    };

    for (std::uint32_t ri : row_order) {
        std::vector<Entry> row = rows[ri];
        std::sort(row.begin(), row.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        // merge duplicate columns (same monomial can arise from several m*g terms)
        {
            std::vector<Entry> merged;
            for (auto& e : row) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second = K.add(merged.back().second, e.second);
                else
                    merged.push_back(std::move(e));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [&](const Entry& e) { return K.is_zero(e.second); }),
                         merged.end());
            row = std::move(merged);
        }
        typename R::Elem b = rhs[ri];
        // eliminate known pivots
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : row) {
                auto it = pivot_of_col.find(e.first);
                if (it != pivot_of_col.end()) {
                    combine(row, b, pivots[it->second], e.second);
                    changed = true;
                    break;
                }
            }
        }
        if (row.empty()) {
            if (!K.is_zero(b)) {
                res.status = CertSearchStatus::NotFound;
                res.diagnostics = "inconsistent linear system at degree " + std::to_string(maxdeg);
                return res;
            }
            continue;
        }
        // pivot choice: prefer a +-1 coefficient (keeps solutions integral when
        // one exists with that shape), then the lowest column index
        std::size_t best = 0;
        bool best_unit = false;
        for (std::size_t i = 0; i < row.size(); ++i) {
            bool unit = K.is_one(row[i].second) || K.eq(row[i].second, K.neg(K.one()));
            if ((unit && !best_unit) ||
                (unit == best_unit && row[i].first < row[best].first)) {
                best = i;
                best_unit = unit;
            }
        }
        std::uint32_t pcol = row[best].first;
        typename R::Elem inv = K.div(K.one(), row[best].second);
        PivotRow pv;
        pv.col = pcol;
        pv.rhs = K.mul(b, inv);
        for (auto& e : row)
            if (e.first != pcol) pv.entries.push_back({e.first, K.mul(e.second, inv)});
        pivot_of_col.emplace(pcol, static_cast<std::uint32_t>(pivots.size()));
        pivots.push_back(std::move(pv));
    }

    // Back-substitution in reverse creation order; free columns are zero.
    std::unordered_map<std::uint32_t, typename R::Elem> value;
    for (std::size_t k = pivots.size(); k-- > 0;) {
        typename R::Elem v = pivots[k].rhs;
        for (const auto& e : pivots[k].entries) {
            auto it = value.find(e.first);
            if (it != value.end()) v = K.sub(v, K.mul(e.second, it->second));
        }
        if (!K.is_zero(v)) value.emplace(pivots[k].col, std::move(v));
    }

    std::vector<Polynomial<R>> cof;
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<typename Polynomial<R>::Term> ts;
        for (const auto& m : mons) {
            auto it = value.find(c++);
            if (it != value.end()) ts.push_back({m, it->second});
        }
        cof.push_back(Polynomial<R>::from_terms(ring, std::move(ts)));
    }

    // sanity: the solution must reproduce f
    auto acc = Polynomial<R>::zero(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) acc = acc + cof[i] * gens[i];
    if (!(acc == f)) throw Error("internal error: macaulay solution failed re-expansion");

    res.status = CertSearchStatus::Found;
    res.certificate = make_certificate(ring, f, gens, cof, ring->coeff.domain());
    unsigned d = 0;
    for (const auto& g : cof) d = std::max(d, g.degree());
    res.degree_bound = d;
    res.diagnostics = "macaulay system solved (" + std::to_string(ncols) + " columns)";
    return res;
}

namespace detail {

inline bool qq_poly_is_integral(const Polynomial<QQRing>& f) {
    for (const auto& t : f.terms())
        if (t.coeff.get_den() != 1) return false;
    return true;
}

}  // namespace detail

// Degree-bounded cofactor search for f in <gens> over ZZ or QQ (or F_p).
//
// Fast path: reduce f against a Groebner basis with provenance tracking; when
// the resulting cofactors fit the degree bound the certificate is returned
// directly. Complete path: the Macaulay system at the bound, whose
// unsolvability proves NOT_FOUND.
inline CertSearchResult certificate_search(const Polynomial<ZZRing>& f,
                                           const std::vector<Polynomial<ZZRing>>& gens,
                                           unsigned max_degree, CoefficientDomain domain,
                                           const MembershipOptions& opts = {}) {
    if (domain.tag == DomainTag::PrimeField) {
        auto ring = make_poly_ring(FpRing{domain.p}, f.ring()->vars, opts.order);
        std::vector<Polynomial<FpRing>> g;
        for (const auto& x : gens) g.push_back(coerce_poly(x, ring));
        return macaulay_search(ring, g, coerce_poly(f, ring), max_degree,
                               opts.macaulay_cell_budget);
    }

    auto ring = make_poly_ring(QQRing{}, f.ring()->vars, opts.order);
    std::vector<Polynomial<QQRing>> g;
    for (const auto& x : gens) g.push_back(coerce_poly(x, ring));
    Polynomial<QQRing> fq = coerce_poly(f, ring);

    const bool want_zz = domain.tag == DomainTag::Integers;

    if (opts.use_groebner) {
        auto gb = buchberger(ring, g, opts.gb);
        if (gb.complete) {
            auto nf = normal_form_tracked(fq, gb);
            if (nf.remainder.is_zero()) {
                auto cof = expand_to_cofactors(gb, nf.steps);
                unsigned d = 0;
                bool integral = true;
                for (const auto& c : cof) {
                    d = std::max(d, c.degree());
                    integral = integral && detail::qq_poly_is_integral(c);
                }
                if (d <= max_degree && (!want_zz || integral)) {
                    CertSearchResult res;
                    res.status = CertSearchStatus::Found;
                    res.certificate = make_certificate(
                        ring, fq, g, cof,
                        want_zz ? CoefficientDomain::integers() : CoefficientDomain::rationals());
                    res.degree_bound = d;
                    res.diagnostics = "groebner reduction certificate";
                    return res;
                }
            }
        }
    }

    CertSearchResult res = macaulay_search(ring, g, fq, max_degree, opts.macaulay_cell_budget);
    if (res.status == CertSearchStatus::Found && want_zz) {
        bool integral = true;
        auto cr = make_poly_ring(QQRing{}, f.ring()->vars, opts.order);
        for (const auto& ctext : res.certificate->cofactors)
            integral = integral && detail::qq_poly_is_integral(parse_polynomial(cr, ctext));
        if (integral) {
            res.certificate->domain = CoefficientDomain::integers();
        } else {
            res.status = CertSearchStatus::FoundRationalOnly;
            res.diagnostics += "; rational certificate only, integrality not established";
        }
    }
    return res;
}

// --------------------------------------------------------------------------
// is_member
// --------------------------------------------------------------------------

template <class R>
MembershipVerdict field_membership(const IdealZ& ideal, const GroebnerBasis<R>& gb,
                                   const Polynomial<ZZRing>& f, CoefficientDomain domain,
                                   const MembershipOptions& opts) {
    MembershipVerdict v;
    v.domain = domain;
    v.basis_size = gb.basis.size();
    if (!gb.complete) {
        v.status = Membership::Inconclusive;
        v.diagnostics = "groebner pair budget exhausted after " +
                        std::to_string(gb.pairs_processed) + " pairs (basis size " +
                        std::to_string(gb.basis.size()) + ")";
        return v;
    }
    auto fq = coerce_poly(f, gb.ring);
    if (ideal.is_zero_ideal()) {
        v.status = fq.is_zero() ? Membership::Member : Membership::NonMember;
        if (v.status == Membership::NonMember) v.normal_form = fq.to_string();
        else if (opts.want_certificate)
            v.certificate = make_certificate(gb.ring, fq, std::vector<Polynomial<R>>{},
                                             std::vector<Polynomial<R>>{}, domain);
        return v;
    }
    if (opts.want_certificate) {
        auto nf = normal_form_tracked(fq, gb);
        if (nf.remainder.is_zero()) {
            auto cof = expand_to_cofactors(gb, nf.steps);
            std::vector<Polynomial<R>> gens;
            for (const auto& x : ideal.generators()) gens.push_back(coerce_poly(x, gb.ring));
            v.status = Membership::Member;
            v.certificate = make_certificate(gb.ring, fq, gens, cof, domain);
            unsigned d = 0;
            for (const auto& c : cof) d = std::max(d, c.degree());
            v.cofactor_degree = d;
        } else {
            v.status = Membership::NonMember;
            v.normal_form = nf.remainder.to_string();
        }
    } else {
        auto nf = normal_form(fq, gb);
        v.status = nf.is_zero() ? Membership::Member : Membership::NonMember;
        if (v.status == Membership::NonMember) v.normal_form = nf.to_string();
    }
    return v;
}

inline MembershipVerdict is_member(const Polynomial<ZZRing>& f, const IdealZ& ideal,
                                   CoefficientDomain domain, const MembershipOptions& opts = {}) {
    if (!f.ring()->compatible(*ideal.ring())) throw Error("is_member: ring mismatch");

    switch (domain.tag) {
        case DomainTag::Rationals:
            return field_membership(ideal, ideal.gb_qq(opts.order, opts.gb), f, domain, opts);
        case DomainTag::PrimeField:
            return field_membership(ideal, ideal.gb_fp(domain.p, opts.order, opts.gb), f, domain,
                                    opts);
        default: break;
    }

    // INTEGERS: decided by certificates.
    MembershipVerdict v;
    v.domain = domain;
    if (ideal.is_zero_ideal()) {
        v.status = f.is_zero() ? Membership::Member : Membership::NonMember;
        if (v.status == Membership::NonMember) v.normal_form = f.to_string();
        else
            v.certificate = make_certificate(f.ring(), f, std::vector<Polynomial<ZZRing>>{},
                                             std::vector<Polynomial<ZZRing>>{}, domain);
        return v;
    }
    auto search = certificate_search(f, ideal.generators(), opts.max_degree, domain, opts);
    switch (search.status) {
        case CertSearchStatus::Found:
            v.status = Membership::Member;
            v.certificate = search.certificate;
            v.cofactor_degree = search.degree_bound;
            v.diagnostics = search.diagnostics;
            return v;
        case CertSearchStatus::FoundRationalOnly:
            v.status = Membership::Inconclusive;
            v.diagnostics = "member over QQ; " + search.diagnostics;
            return v;
        default: break;
    }
    // fall back to the rational verdict: NON_MEMBER over QQ holds over ZZ
    MembershipVerdict q = field_membership(ideal, ideal.gb_qq(opts.order, opts.gb), f,
                                           CoefficientDomain::rationals(), opts);
    if (q.status == Membership::NonMember) {
        q.domain = domain;
        q.diagnostics = "non-membership over QQ transfers to ZZ";
        return q;
    }
    v.status = Membership::Inconclusive;
    v.diagnostics = "no integral certificate within degree bound " +
                    std::to_string(opts.max_degree) + "; " + search.diagnostics;
    if (q.status == Membership::Member) v.diagnostics += "; member over QQ";
    return v;
}

}  // namespace resfin

#endif
