#include "idem/congruence.hpp"

#include <algorithm>

#include "idem/ideals.hpp"

namespace idem {

int congruence::blocks() const {
    int b = 0;
    for (int v : block_of) b = std::max(b, v + 1);
    return b;
}

bits congruence::pair_bits() const {
    const int n = size();
    bits out(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (related(x, y)) out.set(x * n + y);
    return out;
}

bits congruence::class_of(int x) const {
    bits out(size());
    for (int y = 0; y < size(); ++y)
        if (related(x, y)) out.set(y);
    return out;
}

congruence normalize_partition(std::vector<int> raw) {
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    for (int& v : raw) {
        if (remap[v] < 0) remap[v] = next++;
        v = remap[v];
    }
    return congruence{std::move(raw)};
}

congruence diagonal_congruence(int n) {
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = i;
    return congruence{std::move(b)};
}

congruence full_congruence(int n) {
    return congruence{std::vector<int>(n, 0)};
}

bool is_congruence(const finite_semiring& s, const congruence& c) {
    const int n = s.size();
    if (c.size() != n) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!c.related(a, b)) continue;
            for (int z = 0; z < n; ++z) {
                if (!c.related(s.add(a, z), s.add(b, z))) return false;
                if (!c.related(s.mul(a, z), s.mul(b, z))) return false;
            }
        }
    return true;
}

congruence congruence_from_blocks(const finite_semiring& s,
                                  const std::vector<std::vector<int>>& blocks) {
    const int n = s.size();
    std::vector<int> block_of(n, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int x : blocks[b]) {
            if (x < 0 || x >= n) throw validation_error("block element out of range");
            if (block_of[x] != -1) throw validation_error("element appears in two blocks");
            block_of[x] = static_cast<int>(b);
        }
    for (int x = 0; x < n; ++x)
        if (block_of[x] == -1)
            throw validation_error("element " + s.names[x] + " missing from the partition");
    congruence c = normalize_partition(std::move(block_of));
    if (!is_congruence(s, c))
        throw validation_error("partition is not compatible with the operations");
    return c;
}

std::string congruence_label(const finite_semiring& s, const congruence& c) {
    std::string out;
    for (int b = 0; b < c.blocks(); ++b) {
        out += "{";
        bool first = true;
        for (int x = 0; x < s.size(); ++x)
            if (c.block_of[x] == b) {
                if (!first) out += ",";
                out += s.names[x];
                first = false;
            }
        out += "}";
    }
    return out;
}

congruence generate_congruence(const finite_semiring& s,
                               const std::vector<std::pair<int, int>>& seed) {
    const int n = s.size();
    // Relation matrix; the four closure steps are iterated to a fixpoint.
    std::vector<bool> rel(n * n, false);
    auto at = [&](int x, int y) -> std::vector<bool>::reference { return rel[x * n + y]; };
    for (int i = 0; i < n; ++i) at(i, i) = true;
    for (auto [x, y] : seed) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw validation_error("seed pair out of range");
        at(x, y) = true;
        at(y, x) = true;
    }
    for (bool changed = true; changed;) {
        changed = false;
        auto relate = [&](int x, int y) {
            if (!at(x, y)) {
                at(x, y) = true;
                at(y, x) = true;
                changed = true;
            }
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!at(a, b)) continue;
                // transitivity
                for (int z = 0; z < n; ++z)
                    if (at(b, z)) relate(a, z);
                // componentwise + and * against every related pair
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (!at(c, d)) continue;
                        relate(s.add(a, c), s.add(b, d));
                        relate(s.mul(a, c), s.mul(b, d));
                    }
            }
    }
    std::vector<int> block_of(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (block_of[x] != -1) continue;
        block_of[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (at(x, y)) block_of[y] = next;
        ++next;
    }
    return congruence{std::move(block_of)};
}

std::vector<congruence> enumerate_congruences(const finite_semiring& s) {
    const int n = s.size();
    if (n > 10)
        throw capability_error("congruence enumeration supports at most 10 elements");
    std::vector<congruence> out;
    // Restricted-growth strings enumerate set partitions canonically.
    std::vector<int> rgs(n, 0);
    for (;;) {
        congruence c{rgs};
        if (is_congruence(s, c)) out.push_back(c);
        // advance
        int i = n - 1;
        for (; i > 0; --i) {
            int maxv = 0;
            for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
            if (rgs[i] <= maxv) { ++rgs[i]; break; }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

congruence intersect_congruences(const congruence& a, const congruence& b) {
    const int n = a.size();
    std::vector<int> block_of(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        if (block_of[x] != -1) continue;
        block_of[x] = next;
        for (int y = x + 1; y < n; ++y)
            if (a.related(x, y) && b.related(x, y)) block_of[y] = next;
        ++next;
    }
    return congruence{std::move(block_of)};
}

bool congruence_leq(const congruence& a, const congruence& b) {
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.related(x, y) && !b.related(x, y)) return false;
    return true;
}

int pair_add(const finite_semiring& s, int e1, int e2) {
    auto [x1, x2] = pair_of(s, e1);
    auto [y1, y2] = pair_of(s, e2);
    return pair_index(s, s.add(x1, y1), s.add(x2, y2));
}

int twisted_mul(const finite_semiring& s, int e1, int e2) {
    auto [x1, x2] = pair_of(s, e1);
    auto [y1, y2] = pair_of(s, e2);
    return pair_index(s, s.add(s.mul(x1, y1), s.mul(x2, y2)),
                      s.add(s.mul(x1, y2), s.mul(x2, y1)));
}

int twisted_pow(const finite_semiring& s, int e, int k) {
    int r = e;
    for (int i = 1; i < k; ++i) r = twisted_mul(s, r, e);
    return r;
}

finite_semiring twisted_pair_semiring(const finite_semiring& s) {
    const int n = s.size();
    finite_semiring t;
    t.names.reserve(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.names.push_back("(" + s.names[x] + "," + s.names[y] + ")");
    t.add_table.assign(n * n * n * n, 0);
    t.mul_table.assign(n * n * n * n, 0);
    for (int e1 = 0; e1 < n * n; ++e1)
        for (int e2 = 0; e2 < n * n; ++e2) {
            t.add_table[e1 * n * n + e2] = pair_add(s, e1, e2);
            t.mul_table[e1 * n * n + e2] = twisted_mul(s, e1, e2);
        }
    t.zero = pair_index(s, s.zero, s.zero);
    t.one = pair_index(s, s.one, s.zero);
    validate_semiring(t);
    return t;
}

namespace {

std::vector<std::pair<int, int>> related_pairs(const congruence& c) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < c.size(); ++x)
        for (int y = 0; y < c.size(); ++y)
            if (c.related(x, y)) out.emplace_back(x, y);
    return out;
}

}  // namespace

congruence congruence_product(const finite_semiring& s, const congruence& c,
                              const congruence& d) {
    std::vector<std::pair<int, int>> seed;
    for (auto [c1, c2] : related_pairs(c))
        for (auto [d1, d2] : related_pairs(d)) {
            int e = twisted_mul(s, pair_index(s, c1, c2), pair_index(s, d1, d2));
            seed.push_back(pair_of(s, e));
        }
    return generate_congruence(s, seed);
}

congruence congruence_product_componentwise(const finite_semiring& s, const congruence& c,
                                            const congruence& d) {
    std::vector<std::pair<int, int>> seed;
    for (auto [c1, c2] : related_pairs(c))
        for (auto [d1, d2] : related_pairs(d))
            seed.emplace_back(s.mul(c1, d1), s.mul(c2, d2));
    return generate_congruence(s, seed);
}

bool is_prime_congruence(const finite_semiring& s, const congruence& c) {
    if (!classify(s).idempotent)
        throw capability_error("prime congruences are defined over idempotent carriers");
    const int n = s.size();
    if (c.blocks() <= 1 && n > 1) return false;  // the full congruence is not proper
    if (n == 1) return false;
    auto in = [&](int e) {
        auto [x, y] = pair_of(s, e);
        return c.related(x, y);
    };
    for (int a = 0; a < n * n; ++a)
        for (int b = 0; b < n * n; ++b)
            if (in(twisted_mul(s, a, b)) && !in(a) && !in(b)) return false;
    return true;
}

bool is_prime_congruence_via_quotient(const finite_semiring& s, const congruence& c) {
    if (c.blocks() <= 1 && s.size() > 1) return false;
    if (s.size() == 1) return false;
    auto q = quotient_semiring(s, c.block_of);
    auto r = classify(q);
    return r.totally_ordered && r.cancellative;
}

finite_space spec_c(const finite_semiring& s) {
    std::vector<congruence> primes;
    for (const auto& c : enumerate_congruences(s))
        if (is_prime_congruence(s, c)) primes.push_back(c);
    return congruence_family_space(s, primes);
}

finite_space congruence_family_space(const finite_semiring& s,
                                     const std::vector<congruence>& family) {
    std::vector<bits> sets;
    std::vector<std::string> names;
    for (const auto& c : family) {
        sets.push_back(c.pair_bits());
        names.push_back(congruence_label(s, c));
    }
    return hull_kernel_space(sets, names);
}

bits kernel_of(const finite_semiring& s, const congruence& c) {
    bits k = c.class_of(s.zero);
    if (!is_k_ideal(s, k))
        throw validation_error("congruence kernel failed the k-ideal check");
    return k;
}

congruence congruence_from_ideal(const finite_semiring& s, const bits& ideal) {
    if (!is_ideal(s, ideal))
        throw validation_error("kernel congruence requires an ideal");
    std::vector<std::pair<int, int>> seed;
    for (int a : ideal.elements()) seed.emplace_back(a, s.zero);
    return generate_congruence(s, seed);
}

bits generalized_powers(const finite_semiring& s, int alpha, int m_max, int n_max) {
    const int n = s.size();
    auto [x1, x2] = pair_of(s, alpha);
    const int astar = pair_index(s, s.add(x1, x2), s.zero);
    bits out(n * n);
    for (int m = 1; m <= m_max; ++m) {
        int am = twisted_pow(s, astar, m);
        for (int c = 0; c < n; ++c) {
            int head = pair_add(s, am, pair_index(s, c, s.zero));
            for (int k = 1; k <= n_max; ++k)
                out.set(twisted_mul(s, head, twisted_pow(s, alpha, k)));
        }
    }
    return out;
}

congruence radical_congruence(const finite_semiring& s, const congruence& c) {
    congruence acc = full_congruence(s.size());
    for (const auto& p : enumerate_congruences(s))
        if (is_prime_congruence(s, p) && congruence_leq(c, p))
            acc = intersect_congruences(acc, p);
    return acc;
}

bits radical_congruence_via_powers(const finite_semiring& s, const congruence& c) {
    const int n = s.size();
    const int bound = n * n + 1;
    const bits cset = c.pair_bits();
    bits out(n * n);
    for (int alpha = 0; alpha < n * n; ++alpha) {
        bits gp = generalized_powers(s, alpha, bound, bound);
        if (!(gp & cset).empty()) out.set(alpha);
    }
    return out;
}

}  // namespace idem
