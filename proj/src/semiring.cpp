#include "idem/semiring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idem {

int finite_semiring::pow(int x, int k) const {
    int r = x;
    for (int i = 1; i < k; ++i) r = mul(r, x);
    return r;
}

int finite_semiring::sum(const std::vector<int>& xs) const {
    int r = zero;
    for (int x : xs) r = add(r, x);
    return r;
}

int finite_semiring::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == label) return i;
    throw parse_error("unknown element label: '" + label + "'");
}

namespace {

void check_commutative_monoid(const finite_semiring& s, bool additive) {
    const int n = s.size();
    auto op = [&](int a, int b) { return additive ? s.add(a, b) : s.mul(a, b); };
    const char* what = additive ? "addition" : "multiplication";
    const int e = additive ? s.zero : s.one;
    for (int a = 0; a < n; ++a) {
        if (op(e, a) != a || op(a, e) != a)
            throw validation_error(std::string(what) + " identity fails at element " + s.names[a]);
        for (int b = 0; b < n; ++b) {
            if (op(a, b) != op(b, a))
                throw validation_error(std::string(what) + " is not commutative at (" +
                                       s.names[a] + "," + s.names[b] + ")");
            for (int c = 0; c < n; ++c) {
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw validation_error(std::string(what) + " is not associative at (" +
                                           s.names[a] + "," + s.names[b] + "," + s.names[c] + ")");
            }
        }
    }
}

}  // namespace

void validate_semiring(const finite_semiring& s) {
    const int n = s.size();
    if (n == 0) throw validation_error("empty carrier");
    if (static_cast<int>(s.add_table.size()) != n * n ||
        static_cast<int>(s.mul_table.size()) != n * n)
        throw validation_error("operation tables are not n x n");
    for (int v : s.add_table)
        if (v < 0 || v >= n) throw validation_error("addition table entry out of range");
    for (int v : s.mul_table)
        if (v < 0 || v >= n) throw validation_error("multiplication table entry out of range");
    if (s.zero < 0 || s.zero >= n || s.one < 0 || s.one >= n)
        throw validation_error("zero/one index out of range");
    {
        std::set<std::string> seen;
        for (const auto& nm : s.names)
            if (!seen.insert(nm).second)
                throw validation_error("duplicate element label: '" + nm + "'");
    }
    if (n > 1 && s.zero == s.one)
        throw validation_error("zero equals one on a carrier with more than one element");

    check_commutative_monoid(s, true);
    check_commutative_monoid(s, false);

    for (int a = 0; a < n; ++a) {
        if (s.mul(s.zero, a) != s.zero)
            throw validation_error("zero is not absorbing at element " + s.names[a]);
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
                    throw validation_error("distributivity fails at (" + s.names[a] + "," +
                                           s.names[b] + "," + s.names[c] + ")");
    }
}

property_report classify(const finite_semiring& s) {
    const int n = s.size();
    property_report r;

    r.idempotent = true;
    for (int a = 0; a < n; ++a)
        if (s.add(a, a) != a) r.idempotent = false;

    r.integral = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.mul(a, b) == s.zero && a != s.zero && b != s.zero) r.integral = false;

    r.cancellative = true;
    for (int c = 0; c < n; ++c) {
        if (c == s.zero) continue;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (s.mul(a, c) == s.mul(b, c) && a != b) r.cancellative = false;
    }

    r.zero_sum_free = true;
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            if (s.add(x, a) == s.zero && !(x == s.zero && a == s.zero)) r.zero_sum_free = false;

    if (r.idempotent) {
        r.idealic = true;
        for (int a = 0; a < n; ++a)
            if (s.add(a, s.one) != s.one) r.idealic = false;
        if (r.idealic) {
            r.radical_idealic = true;
            for (int a = 0; a < n; ++a)
                if (s.mul(a, a) != a) r.radical_idealic = false;
        }
        r.totally_ordered = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int j = s.add(a, b);
                if (j != a && j != b) r.totally_ordered = false;
            }
    }

    r.freshman_dream = true;
    for (int a = 0; a < n && r.freshman_dream; ++a)
        for (int b = 0; b < n && r.freshman_dream; ++b)
            for (int k = 1; k <= n; ++k)
                if (s.add(s.pow(a, k), s.pow(b, k)) != s.pow(s.add(a, b), k)) {
                    r.freshman_dream = false;
                    break;
                }
    return r;
}

bool canonical_leq(const finite_semiring& s, int x, int y) {
    if (!classify(s).idempotent)
        throw capability_error("canonical order requires an idempotent carrier");
    return s.add(x, y) == y;
}

bool check_homomorphism(const std::vector<int>& f, const finite_semiring& s,
                        const finite_semiring& t) {
    const int n = s.size();
    if (static_cast<int>(f.size()) != n) return false;
    if (f[s.zero] != t.zero || f[s.one] != t.one) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (f[s.add(a, b)] != t.add(f[a], f[b])) return false;
            if (f[s.mul(a, b)] != t.mul(f[a], f[b])) return false;
        }
    return true;
}

finite_semiring quotient_semiring(const finite_semiring& s, const std::vector<int>& block_of) {
    const int n = s.size();
    if (static_cast<int>(block_of.size()) != n)
        throw validation_error("partition does not cover the carrier");
    int nb = 0;
    for (int b : block_of) nb = std::max(nb, b + 1);
    // Compatibility: representatives must multiply/add consistently.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (block_of[a] == block_of[b] && block_of[c] == block_of[d]) {
                        if (block_of[s.add(a, c)] != block_of[s.add(b, d)] ||
                            block_of[s.mul(a, c)] != block_of[s.mul(b, d)])
                            throw validation_error("partition is not compatible with the operations");
                    }

    finite_semiring q;
    q.names.assign(nb, "");
    for (int blk = 0; blk < nb; ++blk) {
        std::string label = "{";
        bool first = true;
        for (int a = 0; a < n; ++a)
            if (block_of[a] == blk) {
                if (!first) label += ",";
                label += s.names[a];
                first = false;
            }
        label += "}";
        if (label == "{}") throw validation_error("partition has an empty block");
        q.names[blk] = label;
    }
    std::vector<int> rep(nb, -1);
    for (int a = n - 1; a >= 0; --a) rep[block_of[a]] = a;
    q.add_table.assign(nb * nb, 0);
    q.mul_table.assign(nb * nb, 0);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            q.add_table[i * nb + j] = block_of[s.add(rep[i], rep[j])];
            q.mul_table[i * nb + j] = block_of[s.mul(rep[i], rep[j])];
        }
    q.zero = block_of[s.zero];
    q.one = block_of[s.one];
    validate_semiring(q);
    return q;
}

namespace {

// Per-element invariant used to prune the isomorphism search: the multiset
// of (row value multiplicities) is preserved by any isomorphism.
std::vector<long> element_profile(const finite_semiring& s, int x) {
    const int n = s.size();
    std::vector<long> p;
    p.push_back(x == s.zero ? 1 : 0);
    p.push_back(x == s.one ? 1 : 0);
    p.push_back(s.add(x, x) == x ? 1 : 0);
    p.push_back(s.mul(x, x) == x ? 1 : 0);
    // How often x absorbs under + / under *; order of x under both ops.
    long aa = 0, mm = 0;
    for (int y = 0; y < n; ++y) {
        if (s.add(x, y) == x) ++aa;
        if (s.mul(x, y) == x) ++mm;
    }
    p.push_back(aa);
    p.push_back(mm);
    std::vector<int> addrow, mulrow;
    for (int y = 0; y < n; ++y) {
        addrow.push_back(s.add(x, y));
        mulrow.push_back(s.mul(x, y));
    }
    std::sort(addrow.begin(), addrow.end());
    p.push_back(std::unique(addrow.begin(), addrow.end()) - addrow.begin());
    std::sort(mulrow.begin(), mulrow.end());
    p.push_back(std::unique(mulrow.begin(), mulrow.end()) - mulrow.begin());
    return p;
}

bool iso_extend(const finite_semiring& s, const finite_semiring& t,
                const std::vector<std::vector<int>>& cand, std::vector<int>& f,
                std::vector<bool>& used, int next) {
    const int n = s.size();
    if (next == n) return check_homomorphism(f, s, t);
    for (int img : cand[next]) {
        if (used[img]) continue;
        f[next] = img;
        // Early consistency on the already-assigned prefix.
        bool ok = true;
        for (int a = 0; a <= next && ok; ++a) {
            int sa = s.add(a, next), sm = s.mul(a, next);
            if (sa <= next && f[sa] != t.add(f[a], f[next])) ok = false;
            if (sm <= next && f[sm] != t.mul(f[a], f[next])) ok = false;
        }
        if (ok) {
            used[img] = true;
            if (iso_extend(s, t, cand, f, used, next + 1)) return true;
            used[img] = false;
        }
    }
    f[next] = -1;
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_semiring_isomorphism(const finite_semiring& s,
                                                          const finite_semiring& t) {
    const int n = s.size();
    if (t.size() != n) return std::nullopt;
    std::vector<std::vector<int>> cand(n);
    for (int x = 0; x < n; ++x) {
        auto px = element_profile(s, x);
        for (int y = 0; y < n; ++y)
            if (px == element_profile(t, y)) cand[x].push_back(y);
        if (cand[x].empty()) return std::nullopt;
    }
    std::vector<int> f(n, -1);
    std::vector<bool> used(n, false);
    if (iso_extend(s, t, cand, f, used, 0)) return f;
    return std::nullopt;
}

}  // namespace idem
