#include "idem/fragment.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idem {

namespace {

// All exponent vectors of total degree <= bound, in lexicographic order.
void enumerate_monomials(int arity, int bound, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == arity) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (int e : cur) used += e;
    for (int e = 0; e + used <= bound; ++e) {
        cur.push_back(e);
        enumerate_monomials(arity, bound, cur, out);
        cur.pop_back();
    }
}

struct saturator {
    int arity;
    int bound;
    fragment_caps caps;

    std::vector<std::vector<int>> univ;
    std::map<std::vector<int>, int> univ_index;
    std::vector<std::vector<int>> prod;  // monomial product or -1 on overflow

    struct rec {
        bits a, b;
        std::string rule;
        int parent1, parent2;
    };
    std::vector<rec> pairs;
    std::map<std::pair<bits, bits>, int> index_of;
    std::map<bits, std::vector<int>> by_first;
    bool truncated = false;
    long long attempts = 0;

    saturator(int arity_, int bound_, fragment_caps caps_)
        : arity(arity_), bound(bound_), caps(caps_) {
        std::vector<int> cur;
        enumerate_monomials(arity, bound, cur, univ);
        for (size_t i = 0; i < univ.size(); ++i) univ_index[univ[i]] = static_cast<int>(i);
        const int n = static_cast<int>(univ.size());
        prod.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> m(arity);
                int total = 0;
                for (int v = 0; v < arity; ++v) {
                    m[v] = univ[i][v] + univ[j][v];
                    total += m[v];
                }
                if (total <= bound) prod[i][j] = univ_index.at(m);
            }
    }

    bits encode(const bool_poly& p) const {
        bits out(static_cast<int>(univ.size()));
        for (const auto& m : p.monomials) {
            auto it = univ_index.find(m);
            if (it == univ_index.end())
                throw validation_error("seed degree exceeds the fragment bound");
            out.set(it->second);
        }
        return out;
    }

    bool_poly decode(const bits& p) const {
        std::vector<std::vector<int>> ms;
        for (int i : p.elements()) ms.push_back(univ[i]);
        return bp_from_monomials(arity, std::move(ms));
    }

    std::optional<bits> mul_bits(const bits& p, const bits& q) const {
        bits r(static_cast<int>(univ.size()));
        for (int i : p.elements())
            for (int j : q.elements()) {
                int k = prod[i][j];
                if (k < 0) return std::nullopt;  // degree overflow: discard
                r.set(k);
            }
        return r;
    }

    // Both take bits by value: callers pass references into `pairs`, which
    // push_back below may reallocate mid-call.
    int add_pair(bits a, bits b, const std::string& rule, int p1, int p2) {
        auto key = std::make_pair(std::move(a), std::move(b));
        if (index_of.count(key)) return -1;
        if (static_cast<int>(pairs.size()) >= caps.max_pairs) {
            truncated = true;
            return -1;
        }
        int id = static_cast<int>(pairs.size());
        pairs.push_back(rec{key.first, key.second, rule, p1, p2});
        by_first[key.first].push_back(id);
        index_of.emplace(std::move(key), id);
        return id;
    }

    int add_with_sym(bits a, bits b, const std::string& rule, int p1, int p2) {
        int id = add_pair(a, b, rule, p1, p2);
        if (id >= 0 && !(a == b)) add_pair(std::move(b), std::move(a), "symmetry", id, -1);
        return id;
    }

    bool spend_attempt() {
        if (++attempts > caps.max_attempts) {
            truncated = true;
            return false;
        }
        return true;
    }

    void run(const std::vector<seeded_pair>& seeds) {
        for (const auto& s : seeds)
            add_with_sym(encode(s.value.first), encode(s.value.second), s.rule, s.parent1,
                         s.parent2);
        // Diagonal pairs for the zero polynomial and each monomial; diagonal
        // pairs of larger polynomials arise from these under +.
        bits zero(static_cast<int>(univ.size()));
        add_pair(zero, zero, "diagonal", -1, -1);
        for (size_t i = 0; i < univ.size(); ++i) {
            bits m(static_cast<int>(univ.size()));
            m.set(static_cast<int>(i));
            add_pair(m, m, "diagonal", -1, -1);
        }

        std::vector<int> frontier(pairs.size());
        for (size_t i = 0; i < frontier.size(); ++i) frontier[i] = static_cast<int>(i);

        for (int round = 0; round < caps.max_rounds; ++round) {
            const int snapshot = static_cast<int>(pairs.size());
            // Products first: they reach deep consequences (powers) before
            // the flood of union combinations claims the pair budget.
            for (int i : frontier) {
                for (int j = 0; j < snapshot; ++j) {
                    if (!spend_attempt()) return;
                    auto a = mul_bits(pairs[i].a, pairs[j].a);
                    if (!a) continue;
                    auto b = mul_bits(pairs[i].b, pairs[j].b);
                    if (!b) continue;
                    add_with_sym(*a, *b, "mul", i, j);
                }
            }
            for (int i : frontier) {
                for (int j = 0; j < snapshot; ++j) {
                    if (!spend_attempt()) return;
                    add_with_sym(pairs[i].a | pairs[j].a, pairs[i].b | pairs[j].b, "add",
                                 i, j);
                }
            }
            for (int i : frontier) {
                auto it = by_first.find(pairs[i].b);
                if (it == by_first.end()) continue;
                // The bucket can grow while we append; index-based loop.
                for (size_t bi = 0; bi < it->second.size(); ++bi) {
                    int j = it->second[bi];
                    if (!spend_attempt()) return;
                    add_with_sym(pairs[i].a, pairs[j].b, "trans", i, j);
                }
            }
            if (static_cast<int>(pairs.size()) == snapshot) return;  // stable
            frontier.clear();
            for (int k = snapshot; k < static_cast<int>(pairs.size()); ++k)
                frontier.push_back(k);
        }
        truncated = true;  // round limit hit while still producing new pairs
    }

    congruence_fragment finish() const {
        congruence_fragment out;
        out.arity = arity;
        out.degree_bound = bound;
        out.truncated = truncated;
        out.pairs.reserve(pairs.size());
        for (const auto& r : pairs)
            out.pairs.push_back(
                fragment_pair{decode(r.a), decode(r.b), r.rule, r.parent1, r.parent2});
        return out;
    }
};

void collect_ancestors(const congruence_fragment& frag, int idx, std::set<int>& own,
                       std::set<int>& from_source) {
    if (own.count(idx)) return;
    own.insert(idx);
    const auto& p = frag.pairs[idx];
    if (p.rule == "twist") {
        if (p.parent1 >= 0) from_source.insert(p.parent1);
        if (p.parent2 >= 0) from_source.insert(p.parent2);
        return;
    }
    if (p.parent1 >= 0) collect_ancestors(frag, p.parent1, own, from_source);
    if (p.parent2 >= 0) collect_ancestors(frag, p.parent2, own, from_source);
}

std::string pair_text(const fragment_pair& p) {
    return "(" + bp_to_string(p.first) + ", " + bp_to_string(p.second) + ")";
}

std::string step_text(const std::string& tag, int idx, const fragment_pair& p,
                      const std::string& parent_tag) {
    std::string line = tag + std::to_string(idx) + " = " + p.rule;
    if (p.parent1 >= 0 || p.parent2 >= 0) {
        line += "(";
        if (p.parent1 >= 0) line += parent_tag + std::to_string(p.parent1);
        if (p.parent2 >= 0) line += ", " + parent_tag + std::to_string(p.parent2);
        line += ")";
    }
    return line + ": " + pair_text(p);
}

}  // namespace

std::optional<int> congruence_fragment::find_pair(const bool_poly& a,
                                                  const bool_poly& b) const {
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == a && pairs[i].second == b) return static_cast<int>(i);
    return std::nullopt;
}

congruence_fragment fragment_saturate(int arity, const std::vector<bp_pair>& seeds,
                                      int degree_bound, fragment_caps caps) {
    std::vector<seeded_pair> sp;
    sp.reserve(seeds.size());
    for (const auto& s : seeds) sp.push_back(seeded_pair{s, "seed", -1, -1});
    return fragment_saturate_seeded(arity, sp, degree_bound, caps);
}

congruence_fragment fragment_saturate_seeded(int arity,
                                             const std::vector<seeded_pair>& seeds,
                                             int degree_bound, fragment_caps caps) {
    if (arity < 1 || arity > 3) throw capability_error("fragment arity limited to 3");
    if (degree_bound < 0) throw validation_error("negative degree bound");
    saturator sat(arity, degree_bound, caps);
    sat.run(seeds);
    return sat.finish();
}

membership_verdict fragment_member(const congruence_fragment& frag, const bool_poly& a,
                                   const bool_poly& b,
                                   const congruence_fragment* twist_source) {
    membership_verdict out;
    if (a == b) {
        out.verdict = membership::proven;
        out.derivation.push_back("(" + bp_to_string(a) + ", " + bp_to_string(b) +
                                 ") is a diagonal pair");
        return out;
    }
    auto idx = frag.find_pair(a, b);
    if (!idx) return out;  // inconclusive
    out.verdict = membership::proven;

    std::set<int> own, from_source;
    collect_ancestors(frag, *idx, own, from_source);
    if (twist_source) {
        std::set<int> src_all, src_none;
        for (int i : from_source) collect_ancestors(*twist_source, i, src_all, src_none);
        for (int i : src_all)
            out.derivation.push_back(step_text("c", i, twist_source->pairs[i], "c"));
    }
    for (int i : own) {
        const auto& p = frag.pairs[i];
        out.derivation.push_back(
            step_text("p", i, p, p.rule == "twist" ? std::string("c") : std::string("p")));
    }
    return out;
}

cd_example_result cd_product_fragment(int degree_bound, fragment_caps caps,
                                      int seed_budget) {
    auto x = bp_monomial({1, 0});
    auto y = bp_monomial({0, 1});
    auto base = fragment_saturate(2, {{x, y}}, degree_bound, caps);

    // Seed the product with twisted products of base pairs.  Only pairs that
    // relate distinct polynomials matter (a diagonal factor always yields a
    // diagonal product); simplest pairs first so the budget covers products
    // of the low-degree relations.
    std::vector<int> cand;
    for (size_t i = 0; i < base.pairs.size(); ++i)
        if (!(base.pairs[i].first == base.pairs[i].second))
            cand.push_back(static_cast<int>(i));
    auto weight = [&](int i) {
        const auto& p = base.pairs[i];
        return std::make_tuple(
            static_cast<int>(p.first.monomials.size() + p.second.monomials.size()),
            std::max(bp_degree(p.first), bp_degree(p.second)), i);
    };
    std::sort(cand.begin(), cand.end(),
              [&](int i, int j) { return weight(i) < weight(j); });

    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= seed_budget && k < static_cast<int>(cand.size())) ++k;
    std::vector<seeded_pair> seeds;
    for (int band = 0; band <= 2 * (k - 1); ++band)
        for (int i = std::max(0, band - k + 1); 2 * i <= band; ++i) {
            int j = band - i;
            if (j >= k) continue;
            const auto& p = base.pairs[cand[i]];
            const auto& q = base.pairs[cand[j]];
            bp_pair tw = bp_twisted_mul({p.first, p.second}, {q.first, q.second});
            if (bp_degree(tw.first) > degree_bound || bp_degree(tw.second) > degree_bound)
                continue;
            seeds.push_back(seeded_pair{tw, "twist", cand[i], cand[j]});
        }

    auto product = fragment_saturate_seeded(2, seeds, degree_bound, caps);
    return cd_example_result{std::move(base), std::move(product)};
}

}  // namespace idem
