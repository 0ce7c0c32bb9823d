// Buchberger's algorithm over field coefficients, normal forms, and
// ideal-membership verdicts with explicit cofactor certificates.
//
// Every basis element carries a provenance record (a linear combination of
// earlier elements), so a successful reduction to zero can be expanded into
// cofactors over the original generators. Certificates are stored textually
// in the canonical polynomial format and re-verified by plain arithmetic.
#ifndef RESFIN_GROEBNER_HPP
#define RESFIN_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <iostream>
#include <set>
#include <unordered_map>
#include <vector>

#include "resfin/polynomial.hpp"

namespace resfin {

// ---------------------------------------------------------------------------
// Domain coercion helpers (the symbolic models live over ZZ).
// ---------------------------------------------------------------------------

template <class To>
Polynomial<To> coerce_poly(const Polynomial<ZZRing>& f, const PolyRingPtr<To>& ring) {
    using Term = typename Polynomial<To>::Term;
    const auto& K = ring->coeff;
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        typename To::Elem c;
        if constexpr (std::is_same_v<To, QQRing>) {
            c = mpq_class(t.coeff);
        } else if constexpr (std::is_same_v<To, ZZRing>) {
            c = t.coeff;
        } else {
            mpz_class m = t.coeff % static_cast<unsigned long>(K.p);
            if (m < 0) m += static_cast<unsigned long>(K.p);
            c = static_cast<std::uint64_t>(m.get_ui());
        }
        if (!K.is_zero(c)) ts.push_back({t.mono, std::move(c)});
    }
    return Polynomial<To>::from_terms(ring, std::move(ts));
}

// ---------------------------------------------------------------------------
// Geobucket: a sum of sorted term lists with geometrically growing capacity,
// amortizing long chains of `h -= c*m*g` updates during reduction.
// ---------------------------------------------------------------------------

template <class R>
class Geobucket {
  public:
    using Term = typename Polynomial<R>::Term;

    explicit Geobucket(PolyRingPtr<R> ring) : ring_(std::move(ring)) {}

    void add(std::vector<Term> v) {
        if (v.empty()) return;
        std::size_t b = 0, cap = kBase;
        while (cap < v.size()) {
            cap *= kBase;
            ++b;
        }
        while (true) {
            if (b >= buckets_.size()) {
                buckets_.resize(b + 1);
                buckets_[b].terms = std::move(v);
                buckets_[b].head = 0;
                return;
            }
            auto& bk = buckets_[b];
            if (bk.size() == 0) {
                bk.terms = std::move(v);
                bk.head = 0;
                return;
            }
            v = merge(bk, std::move(v));
            bk.terms.clear();
            bk.head = 0;
            if (v.empty()) return;
            while (cap < v.size()) {
                cap *= kBase;
                ++b;
            }
        }
    }

    // Adds c * m * g, skipping the first `skip` terms of g.
    void add_scaled(const Polynomial<R>& g, const typename R::Elem& c, const Monomial& m,
                    std::size_t skip = 0) {
        const auto& K = ring_->coeff;
        std::vector<Term> v;
        v.reserve(g.size() - skip);
        for (std::size_t i = skip; i < g.terms().size(); ++i) {
            const auto& t = g.terms()[i];
            typename R::Elem nc = K.mul(t.coeff, c);
            if (!K.is_zero(nc)) v.push_back({t.mono * m, std::move(nc)});
        }
        add(std::move(v));
    }

    // Extracts the leading term (combining duplicates across buckets);
    // returns nothing when the sum is zero.
    std::optional<Term> pop_leading() {
        const auto& K = ring_->coeff;
        while (true) {
            int best = -1;
            for (std::size_t i = 0; i < buckets_.size(); ++i) {
                if (buckets_[i].size() == 0) continue;
                if (best < 0 ||
                    compare_monomials(buckets_[i].front().mono,
                                      buckets_[best].front().mono, ring_->order) == Cmp::Greater)
                    best = static_cast<int>(i);
            }
            if (best < 0) return std::nullopt;
            Monomial m = buckets_[best].front().mono;
            typename R::Elem c = K.zero();
            for (auto& bk : buckets_) {
                while (bk.size() > 0 && bk.front().mono == m) {
                    c = K.add(c, bk.front().coeff);
                    ++bk.head;
                }
            }
            if (!K.is_zero(c)) return Term{m, std::move(c)};
        }
    }

  private:
    static constexpr std::size_t kBase = 4;
    struct Bucket {
        std::vector<Term> terms;
        std::size_t head = 0;
        std::size_t size() const { return terms.size() - head; }
        const Term& front() const { return terms[head]; }
    };
    PolyRingPtr<R> ring_;
    std::vector<Bucket> buckets_;

    std::vector<Term> merge(Bucket& a, std::vector<Term> b) {
        const auto& K = ring_->coeff;
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = a.head, j = 0;
        while (i < a.terms.size() && j < b.size()) {
            Cmp c = compare_monomials(a.terms[i].mono, b[j].mono, ring_->order);
            if (c == Cmp::Greater)
                out.push_back(std::move(a.terms[i++]));
            else if (c == Cmp::Less)
                out.push_back(std::move(b[j++]));
            else {
                typename R::Elem v = K.add(a.terms[i].coeff, b[j].coeff);
                if (!K.is_zero(v)) out.push_back({a.terms[i].mono, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < a.terms.size(); ++i) out.push_back(std::move(a.terms[i]));
        for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
        return out;
    }
};

// ---------------------------------------------------------------------------
// Provenance: node t is the linear combination sum c * m * node_k (k < t).
// Nodes 0..n-1 are the original generators.
// ---------------------------------------------------------------------------

template <class R>
struct ProvEntry {
    typename R::Elem coeff;
    Monomial mono;
    std::uint32_t node;
};

template <class R>
struct GroebnerBasis {
    PolyRingPtr<R> ring;
    std::vector<Polynomial<R>> basis;           // monic, sorted by leading monomial
    bool reduced = false;
    bool complete = false;                      // false when the pair budget ran out
    std::size_t pairs_processed = 0;
    std::size_t generator_count = 0;            // provenance leaves
    std::vector<std::vector<ProvEntry<R>>> provenance;  // per node; leaves empty
    std::vector<std::uint32_t> basis_nodes;     // node id per basis element

    bool is_unit_ideal() const {
        return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
    }
};

namespace detail {

template <class R>
struct Reducer {
    const PolyRingPtr<R>& ring;
    const std::vector<Polynomial<R>>& polys;
    const std::vector<std::uint32_t>* nodes;  // may be null when not tracking

    // Divisor selection: among basis elements whose leading monomial divides,
    // take the one with the fewest terms (ties: lowest index). Deterministic,
    // and keeps the working sum small during long reductions.
    int pick_divisor(const Monomial& m) const {
        int best = -1;
        std::size_t best_size = 0;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (polys[i].is_zero()) continue;
            if (!polys[i].leading().mono.divides(m)) continue;
            if (best < 0 || polys[i].size() < best_size) {
                best = static_cast<int>(i);
                best_size = polys[i].size();
            }
        }
        return best;
    }

    // Fully reduces the bucket contents; appends reduction steps (coeff, mono,
    // node) such that input = remainder + sum step.coeff * step.mono * poly.
    Polynomial<R> reduce(Geobucket<R>& bucket, std::vector<ProvEntry<R>>* steps) const {
        const auto& K = ring->coeff;
        std::vector<typename Polynomial<R>::Term> rem;
        std::size_t dbg_steps = 0;
        while (auto lt = bucket.pop_leading()) {
            if (++dbg_steps % 1000000 == 0)
                std::cerr << "  reduce: steps=" << dbg_steps << " remsize=" << rem.size()
                          << " ltdeg=" << lt->mono.deg() << "\n" << std::flush;
            int i = pick_divisor(lt->mono);
            if (i < 0) {
                rem.push_back(std::move(*lt));
                continue;
            }
            typename R::Elem c = K.div(lt->coeff, polys[i].leading().coeff);
            Monomial m = lt->mono / polys[i].leading().mono;
            bucket.add_scaled(polys[i], K.neg(c), m, 1);  // tail only
            if (steps)
                steps->push_back({c, m, nodes ? (*nodes)[i] : static_cast<std::uint32_t>(i)});
        }
        return Polynomial<R>::from_sorted_terms(ring, std::move(rem));
    }
};

}  // namespace detail

// S-polynomial of two nonzero polynomials (leading terms cancel).
template <class R>
Polynomial<R> s_polynomial(const Polynomial<R>& f, const Polynomial<R>& g) {
    const auto& K = f.ring()->coeff;
    const auto& lf = f.leading();
    const auto& lg = g.leading();
    Monomial L = lf.mono.lcm(lg.mono);
    return f.mul_term(K.div(K.one(), lf.coeff), L / lf.mono) -
           g.mul_term(K.div(K.one(), lg.coeff), L / lg.mono);
}

struct BuchbergerOptions {
    std::size_t pair_budget = 1u << 20;
    bool track_provenance = true;   // needed for cofactor certificates
    std::ostream* trace = nullptr;  // progress lines every few hundred pairs
};

// Computes the reduced Groebner basis of <gens> for the ring's order.
// Normal selection (smallest lcm first); the coprime-lm and chain criteria
// are installed via the Gebauer-Moller pair update.
template <class R>
GroebnerBasis<R> buchberger(PolyRingPtr<R> ring, const std::vector<Polynomial<R>>& gens_in,
                            BuchbergerOptions opts = {}) {
    static_assert(R::is_field, "Groebner bases are computed over field coefficients");
    const auto& K = ring->coeff;

    GroebnerBasis<R> out;
    out.ring = ring;
    out.generator_count = gens_in.size();
    out.provenance.resize(gens_in.size());

    std::vector<Polynomial<R>> basis;   // working basis, monic
    std::vector<std::uint32_t> node_of; // provenance node per element
    std::vector<bool> alive;            // false once the leading monomial is superseded
    auto add_node = [&](std::vector<ProvEntry<R>> entries) {
        if (!opts.track_provenance) entries.clear();
        out.provenance.push_back(std::move(entries));
        return static_cast<std::uint32_t>(out.provenance.size() - 1);
    };

    struct Pair {
        Monomial lcm;
        std::uint32_t i, j;
    };
    struct PairCmp {
        const MonomialOrder order;
        bool operator()(const Pair& a, const Pair& b) const {
            Cmp c = compare_monomials(a.lcm, b.lcm, order);
            if (c != Cmp::Equal) return c == Cmp::Less;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairCmp> queue(PairCmp{ring->order});

    // Gebauer-Moller update: prune old pairs by the chain criterion against
    // the new element, build the new pair set minimal by lcm divisibility,
    // then drop coprime-lm pairs.
    auto update_pairs = [&](std::uint32_t t) {
        const Monomial& lmt = basis[t].leading().mono;
        for (auto it = queue.begin(); it != queue.end();) {
            const Monomial lcm_ij = it->lcm;
            if (lmt.divides(lcm_ij) &&
                !(basis[it->i].leading().mono.lcm(lmt) == lcm_ij) &&
                !(basis[it->j].leading().mono.lcm(lmt) == lcm_ij))
                it = queue.erase(it);
            else
                ++it;
        }
        std::vector<Pair> cand;
        for (std::uint32_t i = 0; i < t; ++i)
            if (alive[i]) cand.push_back({basis[i].leading().mono.lcm(lmt), i, t});
        std::sort(cand.begin(), cand.end(), PairCmp{ring->order});
        std::vector<Pair> kept;
        for (auto& c : cand) {
            bool dominated = false;
            for (const auto& k : kept)
                if (k.lcm.divides(c.lcm)) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(std::move(c));
        }
        for (auto& k : kept)
            if (!basis[k.i].leading().mono.coprime(lmt)) queue.insert(std::move(k));
        for (std::uint32_t i = 0; i < t; ++i)
            if (alive[i] && lmt.divides(basis[i].leading().mono)) alive[i] = false;
        alive.push_back(true);
    };

    for (std::size_t i = 0; i < gens_in.size(); ++i) {
        if (gens_in[i].is_zero()) continue;  // zero generators contribute nothing
        typename R::Elem s = K.div(K.one(), gens_in[i].leading().coeff);
        basis.push_back(gens_in[i].scaled(s));
        node_of.push_back(add_node({{s, Monomial::one(ring->nvars()),
                                     static_cast<std::uint32_t>(i)}}));
        update_pairs(static_cast<std::uint32_t>(basis.size() - 1));
    }

    detail::Reducer<R> reducer{ring, basis, &node_of};
    std::size_t prov_entries = 0;

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());

        if (++out.pairs_processed > opts.pair_budget) {
            out.basis = std::move(basis);
            out.basis_nodes = std::move(node_of);
            out.complete = false;
            return out;
        }
        if (opts.trace && out.pairs_processed % 250 == 0)
            *opts.trace << "gb: pairs=" << out.pairs_processed << " basis=" << basis.size()
                        << " queue=" << queue.size() << " lcm-deg=" << pr.lcm.deg()
                        << " prov=" << prov_entries << "\n"
                        << std::flush;

        Geobucket<R> bucket(ring);
        const Monomial& lmi = basis[pr.i].leading().mono;
        const Monomial& lmj = basis[pr.j].leading().mono;
        typename R::Elem ci = K.div(K.one(), basis[pr.i].leading().coeff);
        typename R::Elem cj = K.neg(K.div(K.one(), basis[pr.j].leading().coeff));
        Monomial mi = pr.lcm / lmi;
        Monomial mj = pr.lcm / lmj;
        bucket.add_scaled(basis[pr.i], ci, mi);
        bucket.add_scaled(basis[pr.j], cj, mj);

        std::vector<ProvEntry<R>> steps;
        steps.push_back({ci, mi, node_of[pr.i]});
        steps.push_back({cj, mj, node_of[pr.j]});
        Polynomial<R> h = reducer.reduce(bucket, opts.track_provenance ? &steps : nullptr);
        if (h.is_zero()) continue;

        // negate reduction steps: h = ci*mi*bi + cj*mj*bj - sum c*m*b_k
        for (std::size_t s = 2; s < steps.size(); ++s)
            steps[s].coeff = K.neg(steps[s].coeff);
        typename R::Elem lc = h.leading().coeff;
        if (!K.is_one(lc)) {
            typename R::Elem inv = K.div(K.one(), lc);
            h = h.scaled(inv);
            for (auto& st : steps) st.coeff = K.mul(st.coeff, inv);
        }
        prov_entries += steps.size();
        basis.push_back(std::move(h));
        node_of.push_back(add_node(std::move(steps)));
        update_pairs(static_cast<std::uint32_t>(basis.size() - 1));

        if (basis.back().is_constant()) break;  // unit ideal
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another kept element's leading monomial.
    std::vector<std::size_t> order_idx(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return compare_monomials(basis[a].leading().mono, basis[b].leading().mono,
                                 ring->order) == Cmp::Less;
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order_idx) {
        bool dominated = false;
        for (std::size_t k : kept)
            if (basis[k].leading().mono.divides(basis[idx].leading().mono)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(idx);
    }

    // Tail-reduce each kept element against the others (reduced GB).
    std::vector<Polynomial<R>> reducers;
    std::vector<std::uint32_t> reducer_nodes;
    for (std::size_t k : kept) {
        reducers.push_back(basis[k]);
        reducer_nodes.push_back(node_of[k]);
    }
    detail::Reducer<R> final_reducer{ring, reducers, &reducer_nodes};
    for (std::size_t pos = 0; pos < reducers.size(); ++pos) {
        Polynomial<R> self = reducers[pos];
        reducers[pos] = Polynomial<R>::zero(ring);  // exclude from its own reduction
        Geobucket<R> bucket(ring);
        bucket.add(std::vector<typename Polynomial<R>::Term>(self.terms()));
        std::vector<ProvEntry<R>> steps;
        Polynomial<R> red = final_reducer.reduce(bucket, &steps);
        if (steps.empty()) {
            reducers[pos] = std::move(self);
            continue;
        }
        // red = self - sum c*m*b_k
        std::vector<ProvEntry<R>> entries;
        entries.push_back({K.one(), Monomial::one(ring->nvars()), reducer_nodes[pos]});
        for (auto& st : steps) entries.push_back({K.neg(st.coeff), st.mono, st.node});
        typename R::Elem lc = red.leading().coeff;
        if (!K.is_one(lc)) {
            typename R::Elem inv = K.div(K.one(), lc);
            red = red.scaled(inv);
            for (auto& e : entries) e.coeff = K.mul(e.coeff, inv);
        }
        reducers[pos] = std::move(red);
        reducer_nodes[pos] = add_node(std::move(entries));
    }

    out.basis = std::move(reducers);
    out.basis_nodes = std::move(reducer_nodes);
    out.reduced = true;
    out.complete = true;
    return out;
}

// ---------------------------------------------------------------------------
// Normal forms.
// ---------------------------------------------------------------------------

template <class R>
struct NormalFormResult {
    Polynomial<R> remainder;
    std::vector<ProvEntry<R>> steps;  // f = remainder + sum c * m * node
};

template <class R>
NormalFormResult<R> normal_form_tracked(const Polynomial<R>& f, const GroebnerBasis<R>& gb) {
    if (!f.ring()->compatible(*gb.ring)) throw Error("normal form: ring mismatch");
    Geobucket<R> bucket(gb.ring);
    bucket.add(std::vector<typename Polynomial<R>::Term>(f.terms()));
    detail::Reducer<R> reducer{gb.ring, gb.basis, &gb.basis_nodes};
    NormalFormResult<R> out;
    out.remainder = reducer.reduce(bucket, &out.steps);
    return out;
}

template <class R>
Polynomial<R> normal_form(const Polynomial<R>& f, const GroebnerBasis<R>& gb) {
    if (!f.ring()->compatible(*gb.ring)) throw Error("normal form: ring mismatch");
    Geobucket<R> bucket(gb.ring);
    bucket.add(std::vector<typename Polynomial<R>::Term>(f.terms()));
    detail::Reducer<R> reducer{gb.ring, gb.basis, nullptr};
    return reducer.reduce(bucket, nullptr);
}

// Expands reduction steps through the provenance DAG into cofactors over the
// original generators: sum steps = sum cofactor_i * gen_i.
template <class R>
std::vector<Polynomial<R>> expand_to_cofactors(const GroebnerBasis<R>& gb,
                                               const std::vector<ProvEntry<R>>& steps) {
    const auto& ring = gb.ring;
    std::map<std::uint32_t, Polynomial<R>, std::greater<>> pending;  // node -> multiplier
    auto accumulate = [&](std::uint32_t node, const Polynomial<R>& mult) {
        auto it = pending.find(node);
        if (it == pending.end())
            pending.emplace(node, mult);
        else
            it->second = it->second + mult;
    };
    for (const auto& st : steps)
        accumulate(st.node, Polynomial<R>::monomial_term(ring, st.mono, st.coeff));

    std::vector<Polynomial<R>> cof(gb.generator_count, Polynomial<R>::zero(ring));
    std::size_t dbg_count = 0;
    while (!pending.empty()) {
        if (++dbg_count % 20 == 0) {
            std::size_t total = 0;
            for (auto& kv : pending) total += kv.second.size();
            std::cerr << "expand: processed=" << dbg_count << " pending=" << pending.size()
                      << " terms=" << total << "\n" << std::flush;
        }
        auto it = pending.begin();  // largest node first
        std::uint32_t node = it->first;
        Polynomial<R> mult = std::move(it->second);
        pending.erase(it);
        if (mult.is_zero()) continue;
        if (node < gb.generator_count) {
            cof[node] = cof[node] + mult;
            continue;
        }
        for (const auto& e : gb.provenance[node]) {
            Polynomial<R> scaled = mult.mul_term(e.coeff, e.mono);
            if (!scaled.is_zero()) accumulate(e.node, scaled);
        }
    }
    return cof;
}

}  // namespace resfin

#endif
