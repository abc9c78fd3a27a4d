#include "idem/ideals.hpp"

#include <algorithm>

namespace idem {

bool is_ideal(const finite_semiring& s, const bits& subset) {
    const int n = s.size();
    if (subset.universe() != n || !subset.test(s.zero)) return false;
    for (int x : subset.elements()) {
        for (int y : subset.elements())
            if (!subset.test(s.add(x, y))) return false;
        for (int a = 0; a < n; ++a)
            if (!subset.test(s.mul(a, x))) return false;
    }
    return true;
}

bool is_k_ideal(const finite_semiring& s, const bits& subset) {
    if (!is_ideal(s, subset)) return false;
    const int n = s.size();
    for (int x : subset.elements())
        for (int y = 0; y < n; ++y)
            if (subset.test(s.add(x, y)) && !subset.test(y)) return false;
    return true;
}

namespace {

// In an idempotent carrier every k-ideal is the down-set of its own sum m
// (subtraction recovers each y <= m from m itself), and a down-set of m is
// a k-ideal exactly when m absorbs: a*m <= m for all a.
std::vector<bits> k_ideals_via_downsets(const finite_semiring& s) {
    const int n = s.size();
    std::vector<bits> out;
    for (int m = 0; m < n; ++m) {
        bool absorbing = true;
        for (int a = 0; a < n; ++a)
            if (s.add(s.mul(a, m), m) != m) { absorbing = false; break; }
        if (!absorbing) continue;
        bits down(n);
        for (int x = 0; x < n; ++x)
            if (s.add(x, m) == m) down.set(x);
        out.push_back(down);
    }
    canonicalize_family(out);
    return out;
}

std::vector<bits> ideals_by_exhaustion(const finite_semiring& s, bool k_only) {
    const int n = s.size();
    if (n > 16)
        throw capability_error("exhaustive ideal enumeration supports at most 16 elements");
    std::vector<bits> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> s.zero & 1)) continue;
        bits b(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) b.set(i);
        if (k_only ? is_k_ideal(s, b) : is_ideal(s, b)) out.push_back(b);
    }
    canonicalize_family(out);
    return out;
}

}  // namespace

std::vector<bits> enumerate_ideals(const finite_semiring& s, ideal_kind kind) {
    const bool idem_add = classify(s).idempotent;
    std::vector<bits> fam;
    switch (kind) {
        case ideal_kind::all:
            fam = ideals_by_exhaustion(s, false);
            break;
        case ideal_kind::proper: {
            fam = ideals_by_exhaustion(s, false);
            bits full = bits::full(s.size());
            fam.erase(std::remove(fam.begin(), fam.end(), full), fam.end());
            break;
        }
        case ideal_kind::k:
            fam = idem_add ? k_ideals_via_downsets(s) : ideals_by_exhaustion(s, true);
            break;
        case ideal_kind::prime_k: {
            fam = idem_add ? k_ideals_via_downsets(s) : ideals_by_exhaustion(s, true);
            std::vector<bits> primes;
            for (const bits& b : fam)
                if (is_prime_k_ideal(s, b)) primes.push_back(b);
            fam = std::move(primes);
            break;
        }
    }
    return fam;
}

bits ideal_generated_by(const finite_semiring& s, const bits& gens) {
    const int n = s.size();
    if (gens.universe() != n) throw validation_error("generators over the wrong carrier");
    bits cur = gens;
    cur.set(s.zero);
    for (;;) {
        bits next = cur;
        for (int x : cur.elements()) {
            for (int y : cur.elements()) next.set(s.add(x, y));
            for (int a = 0; a < n; ++a) next.set(s.mul(a, x));
        }
        if (next == cur) return cur;
        cur = next;
    }
}

bits k_closure(const finite_semiring& s, const bits& ideal) {
    if (!is_ideal(s, ideal))
        throw validation_error("k-closure requires an ideal");
    const int n = s.size();
    bits cur = ideal;
    for (;;) {
        bits next = cur;
        for (int x = 0; x < n; ++x) {
            if (next.test(x)) continue;
            for (int y : cur.elements())
                if (cur.test(s.add(x, y))) { next.set(x); break; }
        }
        if (next == cur) return cur;
        cur = next;
    }
}

bits k_sum(const finite_semiring& s, const bits& i, const bits& j) {
    if (!is_ideal(s, i) || !is_ideal(s, j))
        throw validation_error("k-sum requires ideals");
    bits sums(s.size());
    for (int a : i.elements())
        for (int b : j.elements()) sums.set(s.add(a, b));
    return k_closure(s, ideal_generated_by(s, sums));
}

bits ideal_product(const finite_semiring& s, const bits& i, const bits& j) {
    if (!is_ideal(s, i) || !is_ideal(s, j))
        throw validation_error("ideal product requires ideals");
    bits prods(s.size());
    for (int a : i.elements())
        for (int b : j.elements()) prods.set(s.mul(a, b));
    return ideal_generated_by(s, prods);
}

bits k_product(const finite_semiring& s, const bits& i, const bits& j) {
    return k_closure(s, ideal_product(s, i, j));
}

bool is_prime_k_ideal(const finite_semiring& s, const bits& subset) {
    const int n = s.size();
    if (!is_k_ideal(s, subset) || subset.count() == n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (subset.test(s.mul(x, y)) && !subset.test(x) && !subset.test(y)) return false;
    return true;
}

bool is_prime_k_ideal_pair_form(const finite_semiring& s, const bits& subset) {
    const int n = s.size();
    if (!is_k_ideal(s, subset) || subset.count() == n) return false;
    auto ks = enumerate_ideals(s, ideal_kind::k);
    for (const bits& a : ks)
        for (const bits& b : ks)
            if (k_product(s, a, b).subset_of(subset) && !a.subset_of(subset) &&
                !b.subset_of(subset))
                return false;
    return true;
}

finite_space spec_k(const finite_semiring& s) {
    auto primes = enumerate_ideals(s, ideal_kind::prime_k);
    std::vector<std::string> names;
    names.reserve(primes.size());
    for (const bits& p : primes) names.push_back(subset_label(p, s.names));
    return hull_kernel_space(primes, names);
}

bits radical_k_ideal(const finite_semiring& s, const bits& ideal) {
    if (!is_ideal(s, ideal))
        throw validation_error("radical requires an ideal");
    bits acc = bits::full(s.size());
    for (const bits& p : enumerate_ideals(s, ideal_kind::prime_k))
        if (ideal.subset_of(p)) acc &= p;
    return acc;
}

std::optional<int> radical_power_criterion(const finite_semiring& s, const bits& j,
                                           const bits& i) {
    if (!is_ideal(s, j) || !is_ideal(s, i))
        throw validation_error("radical power criterion requires ideals");
    const int bound = s.size() * s.size();
    bits power = k_closure(s, j);
    for (int n = 1; n <= bound; ++n) {
        if (power.subset_of(i)) return n;
        bits next = k_product(s, power, j);
        if (next == power) return std::nullopt;  // stabilized outside i
        power = next;
    }
    return std::nullopt;
}

}  // namespace idem
