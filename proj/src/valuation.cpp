#include "idem/valuation.hpp"

#include <string>

namespace idem {

valuation_witness valuation_from_prime(const finite_semiring& s, const congruence& c) {
    validate_semiring(s);
    if (!is_prime_congruence(s, c))
        throw validation_error("valuations arise from prime congruences only");

    valuation_witness v;
    v.source = s;
    v.prime = normalize_partition(c.block_of);
    v.map = v.prime.block_of;
    v.quotient = quotient_semiring(s, v.map);

    auto props = classify(v.quotient);
    if (!props.cancellative || !props.totally_ordered)
        throw validation_error("prime quotient is not totally ordered and cancellative");
    int m = v.quotient.size();
    for (int q = 0; q < m; ++q) {
        if (q == v.quotient.zero) continue;
        bool invertible = false;
        for (int y = 0; y < m && !invertible; ++y)
            if (v.quotient.mul(q, y) == v.quotient.one) invertible = true;
        if (!invertible) throw validation_error("prime quotient is not a semifield");
    }

    v.quotient_leq.assign(static_cast<size_t>(m) * m, 0);
    for (int qx = 0; qx < m; ++qx)
        for (int qy = 0; qy < m; ++qy)
            if (canonical_leq(v.quotient, qx, qy)) v.quotient_leq[qx * m + qy] = 1;

    if (v.map[s.zero] != v.quotient.zero || v.map[s.one] != v.quotient.one)
        throw validation_error("valuation does not fix the constants");
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (v.map[s.mul(x, y)] != v.quotient.mul(v.map[x], v.map[y]))
                throw validation_error("valuation does not preserve products");
            int larger = v.value_le(v.map[x], v.map[y]) ? v.map[y] : v.map[x];
            if (v.map[s.add(x, y)] != larger)
                throw validation_error("the value of a sum is not the larger value");
        }
    return v;
}

congruence kernel_congruence(const valuation_witness& v) {
    congruence k = normalize_partition(v.map);
    if (!is_prime_congruence(v.source, k))
        throw validation_error("valuation kernel is not prime");
    return k;
}

std::vector<valuation_witness> spv(const finite_semiring& s) {
    validate_semiring(s);
    std::vector<valuation_witness> out;
    for (const congruence& c : enumerate_congruences(s))
        if (is_prime_congruence(s, c)) out.push_back(valuation_from_prime(s, c));
    for (const valuation_witness& v : out)
        if (!(kernel_congruence(v) == v.prime))
            throw validation_error("kernel does not recover its prime");
    return out;
}

valuation_order valuation_order_of(const valuation_witness& v) {
    int n = v.source.size();
    valuation_order o;
    o.source = v.source;
    o.rel.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (v.value_le(v.map[x], v.map[y])) o.rel[x * n + y] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!o.le(x, y) && !o.le(y, x))
                throw validation_error("valuation order is not total");
    return o;
}

finite_space spv_topology(const finite_semiring& s) {
    auto vals = spv(s);
    int m = static_cast<int>(vals.size());
    std::vector<std::string> names;
    names.reserve(vals.size());
    for (const valuation_witness& v : vals) names.push_back(congruence_label(s, v.prime));

    std::vector<bits> subbasis;
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            bits d(m);
            for (int i = 0; i < m; ++i) {
                const valuation_witness& v = vals[i];
                if (v.map[y] != v.quotient.zero && v.value_le(v.map[x], v.map[y])) d.set(i);
            }
            subbasis.push_back(d);
        }
    finite_space sp = space_from_subbasis(std::move(names), subbasis);
    if (!is_spectral(sp)) throw validation_error("valuation space failed the spectrality check");
    return sp;
}

}  // namespace idem
