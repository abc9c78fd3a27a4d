#include "idem/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "idem/congruence.hpp"
#include "idem/ideals.hpp"

namespace idem {

namespace {

int require_index(const std::vector<bits>& family, const bits& b, const char* what) {
    auto it = std::find(family.begin(), family.end(), b);
    if (it == family.end())
        throw validation_error(std::string(what) + " produced a set outside the expected family");
    return static_cast<int>(it - family.begin());
}

}  // namespace

void validate_lattice(const finite_lattice& l) {
    int n = l.size();
    if (n == 0) throw validation_error("lattice carrier is empty");
    size_t nn = static_cast<size_t>(n) * n;
    if (l.leq.size() != nn || l.join_table.size() != nn || l.meet_table.size() != nn)
        throw validation_error("lattice table sizes do not match the carrier");
    if (l.bottom < 0 || l.bottom >= n || l.top < 0 || l.top >= n)
        throw validation_error("lattice bottom/top out of range");
    for (size_t i = 0; i < nn; ++i)
        if (l.join_table[i] < 0 || l.join_table[i] >= n || l.meet_table[i] < 0 ||
            l.meet_table[i] >= n)
            throw validation_error("lattice table entry out of range");

    for (int x = 0; x < n; ++x)
        if (!l.le(x, x)) throw validation_error("lattice order is not reflexive at " + l.names[x]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && l.le(x, y) && l.le(y, x))
                throw validation_error("lattice order is not antisymmetric at " + l.names[x] +
                                       ", " + l.names[y]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!l.le(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (l.le(y, z) && !l.le(x, z))
                    throw validation_error("lattice order is not transitive at " + l.names[x] +
                                           ", " + l.names[y] + ", " + l.names[z]);
        }

    for (int x = 0; x < n; ++x) {
        if (!l.le(l.bottom, x))
            throw validation_error("bottom is not the least element (fails at " + l.names[x] + ")");
        if (!l.le(x, l.top))
            throw validation_error("top is not the greatest element (fails at " + l.names[x] + ")");
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int j = l.join(x, y);
            if (!l.le(x, j) || !l.le(y, j))
                throw validation_error("join is not an upper bound at " + l.names[x] + ", " +
                                       l.names[y]);
            int m = l.meet(x, y);
            if (!l.le(m, x) || !l.le(m, y))
                throw validation_error("meet is not a lower bound at " + l.names[x] + ", " +
                                       l.names[y]);
            for (int u = 0; u < n; ++u) {
                if (l.le(x, u) && l.le(y, u) && !l.le(j, u))
                    throw validation_error("join is not the least upper bound at " + l.names[x] +
                                           ", " + l.names[y]);
                if (l.le(u, x) && l.le(u, y) && !l.le(u, m))
                    throw validation_error("meet is not the greatest lower bound at " +
                                           l.names[x] + ", " + l.names[y]);
            }
        }
}

bool is_distributive_lattice(const finite_lattice& l) {
    int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
    return true;
}

finite_lattice lattice_from_leq(std::vector<std::string> names, std::vector<uint8_t> leq) {
    int n = static_cast<int>(names.size());
    if (leq.size() != static_cast<size_t>(n) * n)
        throw validation_error("order matrix size does not match the carrier");
    finite_lattice l;
    l.names = std::move(names);
    l.leq = std::move(leq);
    l.join_table.assign(static_cast<size_t>(n) * n, -1);
    l.meet_table.assign(static_cast<size_t>(n) * n, -1);

    auto le = [&](int x, int y) { return l.leq[x * n + y] != 0; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int join = -1, meet = -1;
            for (int u = 0; u < n; ++u) {
                if (le(x, u) && le(y, u)) {
                    bool least = true;
                    for (int v = 0; v < n && least; ++v)
                        if (le(x, v) && le(y, v) && !le(u, v)) least = false;
                    if (least) join = u;
                }
                if (le(u, x) && le(u, y)) {
                    bool greatest = true;
                    for (int v = 0; v < n && greatest; ++v)
                        if (le(v, x) && le(v, y) && !le(v, u)) greatest = false;
                    if (greatest) meet = u;
                }
            }
            if (join < 0)
                throw validation_error("pair has no least upper bound: " + l.names[x] + ", " +
                                       l.names[y]);
            if (meet < 0)
                throw validation_error("pair has no greatest lower bound: " + l.names[x] + ", " +
                                       l.names[y]);
            l.join_table[x * n + y] = join;
            l.meet_table[x * n + y] = meet;
        }

    l.bottom = l.top = -1;
    for (int c = 0; c < n; ++c) {
        bool least = true, greatest = true;
        for (int x = 0; x < n; ++x) {
            if (!le(c, x)) least = false;
            if (!le(x, c)) greatest = false;
        }
        if (least) l.bottom = c;
        if (greatest) l.top = c;
    }
    if (l.bottom < 0) throw validation_error("order has no bottom element");
    if (l.top < 0) throw validation_error("order has no top element");
    validate_lattice(l);
    return l;
}

finite_lattice semiring_to_lattice(const finite_semiring& s) {
    validate_semiring(s);
    auto props = classify(s);
    if (!props.radical_idealic)
        throw capability_error(
            "the lattice view needs x*x = x everywhere with 1 as the maximum element");
    int n = s.size();
    finite_lattice l;
    l.names = s.names;
    l.leq.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (canonical_leq(s, x, y)) l.leq[x * n + y] = 1;
    l.join_table = s.add_table;
    l.meet_table = s.mul_table;
    l.bottom = s.zero;
    l.top = s.one;
    validate_lattice(l);
    return l;
}

finite_semiring lattice_to_semiring(const finite_lattice& l) {
    validate_lattice(l);
    if (!is_distributive_lattice(l))
        throw capability_error(
            "only distributive lattices carry a semiring structure with join as addition");
    finite_semiring s;
    s.names = l.names;
    s.add_table = l.join_table;
    s.mul_table = l.meet_table;
    s.zero = l.bottom;
    s.one = l.top;
    validate_semiring(s);
    return s;
}

k_subsemigroup_family k_subsemigroup_lattice(const finite_semiring& s) {
    validate_semiring(s);
    if (!classify(s).idempotent)
        throw capability_error("additive k-subsemigroups need an idempotent addition");
    int n = s.size();
    if (n > 16) throw capability_error("k-subsemigroup enumeration is limited to 16 elements");

    k_subsemigroup_family f;
    f.base = s;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bits cand(n);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) cand.set(i);
        if (!cand.test(s.zero)) continue;
        auto members = cand.elements();
        bool ok = true;
        for (int x : members) {
            for (int y : members)
                if (!cand.test(s.add(x, y))) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            for (int z = 0; z < n; ++z)
                if (canonical_leq(s, z, x) && !cand.test(z)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) f.elements.push_back(cand);
    }
    canonicalize_family(f.elements);
    return f;
}

int smallest_k_subsemigroup(const k_subsemigroup_family& f, const bits& set) {
    bits acc = bits::full(f.base.size());
    for (const bits& m : f.elements)
        if (set.subset_of(m)) acc &= m;
    return require_index(f.elements, acc, "k-subsemigroup hull");
}

std::vector<int> compact_elements(const k_subsemigroup_family& f) {
    std::vector<int> out(f.elements.size());
    std::iota(out.begin(), out.end(), 0);
    // Finite sanity check of compactness: each member is the hull of itself,
    // a finite join, so nothing is excluded.
    for (int i : out) {
        bits single = f.elements[i];
        if (smallest_k_subsemigroup(f, single) != i)
            throw validation_error("family member is not the hull of itself");
    }
    return out;
}

finite_semiring compact_semiring(const k_subsemigroup_family& f) {
    const finite_semiring& base = f.base;
    int m = static_cast<int>(f.elements.size());
    finite_semiring c;
    c.names.reserve(m);
    for (const bits& e : f.elements) c.names.push_back(subset_label(e, base.names));
    c.add_table.assign(static_cast<size_t>(m) * m, -1);
    c.mul_table.assign(static_cast<size_t>(m) * m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            c.add_table[i * m + j] = smallest_k_subsemigroup(f, f.elements[i] | f.elements[j]);
            bits prods(base.size());
            for (int x : f.elements[i].elements())
                for (int y : f.elements[j].elements()) prods.set(base.mul(x, y));
            c.mul_table[i * m + j] = smallest_k_subsemigroup(f, prods);
        }
    bits z(base.size()), o(base.size());
    z.set(base.zero);
    o.set(base.one);
    c.zero = smallest_k_subsemigroup(f, z);
    c.one = smallest_k_subsemigroup(f, o);
    validate_semiring(c);
    return c;
}

std::vector<int> principal_map(const k_subsemigroup_family& f) {
    std::vector<int> out(f.base.size());
    for (int x = 0; x < f.base.size(); ++x) {
        bits single(f.base.size());
        single.set(x);
        out[x] = smallest_k_subsemigroup(f, single);
    }
    return out;
}

namespace {

quotient_result quotient_by_seeds(const finite_semiring& s,
                                  const std::vector<std::pair<int, int>>& seeds) {
    congruence c = generate_congruence(s, seeds);
    quotient_result r;
    r.block_of = c.block_of;
    r.semiring = quotient_semiring(s, c.block_of);
    return r;
}

}  // namespace

quotient_result idealization(const finite_semiring& s) {
    validate_semiring(s);
    if (!classify(s).idempotent)
        throw capability_error("idealization needs an idempotent addition");
    std::vector<std::pair<int, int>> seeds;
    for (int x = 0; x < s.size(); ++x) seeds.emplace_back(s.add(x, s.one), s.one);
    return quotient_by_seeds(s, seeds);
}

quotient_result radicalization(const finite_semiring& s) {
    validate_semiring(s);
    if (!classify(s).idealic)
        throw capability_error("radicalization needs 1 to be the maximum element");
    std::vector<std::pair<int, int>> seeds;
    for (int x = 0; x < s.size(); ++x) seeds.emplace_back(s.mul(x, x), x);
    return quotient_by_seeds(s, seeds);
}

quotient_result i_rad_compact(const finite_semiring& s) {
    validate_semiring(s);
    if (!classify(s).idempotent)
        throw capability_error("the compact radical quotient needs an idempotent addition");
    std::vector<std::pair<int, int>> seeds;
    for (int x = 0; x < s.size(); ++x) {
        seeds.emplace_back(s.add(x, s.one), s.one);
        seeds.emplace_back(s.mul(x, x), x);
    }
    return quotient_by_seeds(s, seeds);
}

finite_semiring k_ideal_semiring(const finite_semiring& s) {
    validate_semiring(s);
    auto ideals = enumerate_ideals(s, ideal_kind::k);
    int m = static_cast<int>(ideals.size());
    finite_semiring r;
    r.names.reserve(m);
    for (const bits& i : ideals) r.names.push_back(subset_label(i, s.names));
    r.add_table.assign(static_cast<size_t>(m) * m, -1);
    r.mul_table.assign(static_cast<size_t>(m) * m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            r.add_table[i * m + j] =
                require_index(ideals, k_sum(s, ideals[i], ideals[j]), "k-sum");
            r.mul_table[i * m + j] =
                require_index(ideals, k_product(s, ideals[i], ideals[j]), "k-product");
        }
    bits z(s.size());
    z.set(s.zero);
    r.zero = require_index(ideals, k_closure(s, z), "zero ideal");
    r.one = require_index(ideals, bits::full(s.size()), "unit ideal");
    validate_semiring(r);
    return r;
}

finite_semiring radical_k_ideal_semiring(const finite_semiring& s) {
    validate_semiring(s);
    auto all = enumerate_ideals(s, ideal_kind::k);
    std::vector<bits> rads;
    for (const bits& i : all)
        if (radical_k_ideal(s, i) == i) rads.push_back(i);
    canonicalize_family(rads);
    int m = static_cast<int>(rads.size());
    finite_semiring r;
    r.names.reserve(m);
    for (const bits& i : rads) r.names.push_back(subset_label(i, s.names));
    r.add_table.assign(static_cast<size_t>(m) * m, -1);
    r.mul_table.assign(static_cast<size_t>(m) * m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            r.add_table[i * m + j] = require_index(
                rads, radical_k_ideal(s, k_sum(s, rads[i], rads[j])), "radical k-sum");
            r.mul_table[i * m + j] = require_index(
                rads, radical_k_ideal(s, k_product(s, rads[i], rads[j])), "radical k-product");
        }
    bits z(s.size());
    z.set(s.zero);
    r.zero = require_index(rads, radical_k_ideal(s, k_closure(s, z)), "radical zero ideal");
    r.one = require_index(rads, bits::full(s.size()), "unit ideal");
    validate_semiring(r);
    return r;
}

std::vector<int> prime_lattice_elements(const finite_semiring& s) {
    validate_semiring(s);
    if (!classify(s).idealic)
        throw capability_error("prime elements use the canonical order with 1 as the maximum");
    int n = s.size();
    std::vector<int> out;
    for (int p = 0; p < n; ++p) {
        if (p == s.one) continue;
        bool prime = true;
        for (int x = 0; x < n && prime; ++x)
            for (int y = 0; y < n && prime; ++y)
                if (canonical_leq(s, s.mul(x, y), p) && !canonical_leq(s, x, p) &&
                    !canonical_leq(s, y, p))
                    prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

finite_space zariski_space(const finite_semiring& s) {
    auto primes = prime_lattice_elements(s);
    int m = static_cast<int>(primes.size());
    std::vector<std::string> names;
    names.reserve(m);
    for (int p : primes) names.push_back(s.names[p]);
    std::vector<bits> opens;
    for (int x = 0; x < s.size(); ++x) {
        bits v(m);
        for (int i = 0; i < m; ++i)
            if (canonical_leq(s, x, primes[i])) v.set(i);
        opens.push_back(v.complement());
    }
    canonicalize_family(opens);
    finite_space sp{std::move(names), std::move(opens)};
    validate_space(sp);
    return sp;
}

realization realize_space(const finite_space& x) {
    validate_space(x);
    if (x.size() > 8) throw capability_error("realization is limited to 8 points");
    if (!is_spectral(x)) throw validation_error("realization needs a spectral space");

    int k = static_cast<int>(x.opens.size());
    finite_semiring a;
    a.names.reserve(k);
    for (const bits& o : x.opens) a.names.push_back(subset_label(o, x.point_names));
    a.add_table.assign(static_cast<size_t>(k) * k, -1);
    a.mul_table.assign(static_cast<size_t>(k) * k, -1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            a.add_table[i * k + j] = require_index(x.opens, x.opens[i] | x.opens[j], "open union");
            a.mul_table[i * k + j] =
                require_index(x.opens, x.opens[i] & x.opens[j], "open intersection");
        }
    a.zero = require_index(x.opens, bits(x.size()), "empty open");
    a.one = require_index(x.opens, bits::full(x.size()), "full open");
    validate_semiring(a);

    auto primes = enumerate_ideals(a, ideal_kind::prime_k);
    if (static_cast<int>(primes.size()) != x.size())
        throw validation_error("spectrum size does not match the point count");

    realization r;
    r.semiring = a;
    r.point_map.assign(x.size(), -1);
    std::vector<char> used(primes.size(), 0);
    for (int p = 0; p < x.size(); ++p) {
        bits kp(k);
        for (int u = 0; u < k; ++u)
            if (!x.opens[u].test(p)) kp.set(u);
        int idx = require_index(primes, kp, "opens avoiding a point");
        if (used[idx]) throw validation_error("two points name the same prime k-ideal");
        used[idx] = 1;
        r.point_map[p] = idx;
    }

    finite_space sk = spec_k(a);
    if (sk.opens.size() != x.opens.size())
        throw validation_error("open set counts differ between the space and its spectrum");
    std::set<bits> sk_opens(sk.opens.begin(), sk.opens.end());
    for (const bits& o : x.opens) {
        bits img(sk.size());
        for (int p : o.elements()) img.set(r.point_map[p]);
        if (!sk_opens.count(img))
            throw validation_error("point map fails to carry an open onto an open");
    }
    return r;
}

std::vector<finite_space> enumerate_t0_spaces(int n) {
    if (n < 1 || n > 5)
        throw capability_error("T0 space enumeration is limited to 1..5 points");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    long total = 1;
    for (size_t i = 0; i < pairs.size(); ++i) total *= 3;

    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p = ident;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::set<std::vector<uint8_t>> seen;
    std::vector<finite_space> out;
    for (long code = 0; code < total; ++code) {
        std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
        long c = code;
        for (auto [i, j] : pairs) {
            int t = static_cast<int>(c % 3);
            c /= 3;
            if (t == 1) leq[i * n + j] = 1;
            else if (t == 2) leq[j * n + i] = 1;
        }
        bool transitive = true;
        for (int a = 0; a < n && transitive; ++a)
            for (int b = 0; b < n && transitive; ++b) {
                if (!leq[a * n + b]) continue;
                for (int d = 0; d < n; ++d)
                    if (leq[b * n + d] && !leq[a * n + d]) {
                        transitive = false;
                        break;
                    }
            }
        if (!transitive) continue;

        std::vector<uint8_t> canon;
        for (const auto& perm : perms) {
            std::vector<uint8_t> rel(static_cast<size_t>(n) * n, 0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (leq[a * n + b]) rel[perm[a] * n + perm[b]] = 1;
            if (canon.empty() || rel < canon) canon = std::move(rel);
        }
        if (!seen.insert(canon).second) continue;

        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
        std::vector<bits> opens;
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool down = true;
            for (int y = 0; y < n && down; ++y) {
                if (!(mask & (1u << y))) continue;
                for (int z = 0; z < n; ++z)
                    if (leq[z * n + y] && !(mask & (1u << z))) {
                        down = false;
                        break;
                    }
            }
            if (!down) continue;
            bits o(n);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) o.set(i);
            opens.push_back(o);
        }
        canonicalize_family(opens);
        finite_space sp{std::move(names), std::move(opens)};
        validate_space(sp);
        out.push_back(std::move(sp));
    }
    return out;
}

std::vector<finite_lattice> enumerate_bounded_distributive_lattices(int n) {
    if (n < 1 || n > 5)
        throw capability_error(
            "bounded distributive lattice enumeration is limited to 1..5 elements");

    std::vector<finite_lattice> out;
    for (int k = 0; k <= 4; ++k) {
        std::vector<std::vector<uint8_t>> posets;
        if (k == 0) {
            posets.emplace_back();
        } else {
            for (const finite_space& sp : enumerate_t0_spaces(k)) {
                std::vector<uint8_t> m(static_cast<size_t>(k) * k, 0);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        if (sp.leq(i, j)) m[i * k + j] = 1;
                posets.push_back(std::move(m));
            }
        }
        for (const auto& m : posets) {
            std::vector<bits> downsets;
            for (uint32_t mask = 0; mask < (1u << k); ++mask) {
                bool down = true;
                for (int y = 0; y < k && down; ++y) {
                    if (!(mask & (1u << y))) continue;
                    for (int z = 0; z < k; ++z)
                        if (m[z * k + y] && !(mask & (1u << z))) {
                            down = false;
                            break;
                        }
                }
                if (!down) continue;
                bits d(k);
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) d.set(i);
                downsets.push_back(d);
            }
            canonicalize_family(downsets);
            if (static_cast<int>(downsets.size()) != n) continue;

            std::vector<std::string> gen_names;
            for (int i = 0; i < k; ++i) gen_names.push_back("p" + std::to_string(i));
            std::vector<std::string> names;
            for (const bits& d : downsets) names.push_back(subset_label(d, gen_names));
            std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (downsets[i].subset_of(downsets[j])) leq[i * n + j] = 1;
            finite_lattice l = lattice_from_leq(std::move(names), std::move(leq));
            if (!is_distributive_lattice(l))
                throw validation_error("downset lattice failed the distributivity check");
            out.push_back(std::move(l));
        }
    }
    return out;
}

}  // namespace idem
