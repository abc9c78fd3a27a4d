#include "idem/corpus.hpp"

#include <string>
#include <utility>

namespace idem {

namespace {

finite_semiring from_rows(std::vector<std::string> names, int zero, int one,
                          std::vector<int> add_rows, std::vector<int> mul_rows) {
    finite_semiring s;
    s.names = std::move(names);
    s.add_table = std::move(add_rows);
    s.mul_table = std::move(mul_rows);
    s.zero = zero;
    s.one = one;
    validate_semiring(s);
    return s;
}

}  // namespace

finite_semiring make_trivial() {
    return from_rows({"0"}, 0, 0, {0}, {0});
}

finite_semiring make_bool() {
    return from_rows({"0", "1"}, 0, 1,
                     {0, 1,
                      1, 1},
                     {0, 0,
                      0, 1});
}

finite_semiring make_chain3() {
    // 0 < a < 1, add = max, mul = min.
    return from_rows({"0", "a", "1"}, 0, 2,
                     {0, 1, 2,
                      1, 1, 2,
                      2, 2, 2},
                     {0, 0, 0,
                      0, 1, 1,
                      0, 1, 2});
}

finite_semiring make_n3() {
    // 0 < a < 1, add = max, but a*a = 0.
    return from_rows({"0", "a", "1"}, 0, 2,
                     {0, 1, 2,
                      1, 1, 2,
                      2, 2, 2},
                     {0, 0, 0,
                      0, 0, 1,
                      0, 1, 2});
}

finite_semiring make_inf3() {
    // 0 < 1 < a: a dominates additively and is multiplicatively idempotent.
    return from_rows({"0", "1", "a"}, 0, 1,
                     {0, 1, 2,
                      1, 1, 2,
                      2, 2, 2},
                     {0, 0, 0,
                      0, 1, 2,
                      0, 2, 2});
}

finite_semiring make_diamond() {
    // 0 < a,b < c < 1 with a+b = c and a*b = 0; join/meet of the lattice.
    return from_rows({"0", "a", "b", "c", "1"}, 0, 4,
                     {0, 1, 2, 3, 4,
                      1, 1, 3, 3, 4,
                      2, 3, 2, 3, 4,
                      3, 3, 3, 3, 4,
                      4, 4, 4, 4, 4},
                     {0, 0, 0, 0, 0,
                      0, 1, 0, 1, 1,
                      0, 0, 2, 2, 2,
                      0, 1, 2, 3, 3,
                      0, 1, 2, 3, 4});
}

std::vector<finite_semiring> standard_corpus() {
    return {make_bool(), make_chain3(), make_n3(), make_inf3(), make_diamond()};
}

std::vector<finite_semiring> standard_corpus_with_trivial() {
    auto v = standard_corpus();
    v.insert(v.begin(), make_trivial());
    return v;
}

namespace {

// Advance a base-n odometer; returns false once it wraps around.
bool next_digits(std::vector<int>& d, int base) {
    for (size_t i = 0; i < d.size(); ++i) {
        if (++d[i] < base) return true;
        d[i] = 0;
    }
    return false;
}

bool table_associative(const std::vector<int>& t, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
    return true;
}

int find_neutral(const std::vector<int>& t, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (t[e * n + x] != x) { ok = false; break; }
        if (ok) return e;
    }
    return -1;
}

}  // namespace

std::vector<finite_semiring> enumerate_idempotent_commutative_semirings(int n, bool up_to_iso) {
    if (n < 1) throw validation_error("order must be positive");
    if (n > 4) throw capability_error("exhaustive enumeration is supported up to order 4");

    std::vector<finite_semiring> out;

    // Free addition entries: the strict upper triangle (idempotence fixes the
    // diagonal, commutativity the lower half).
    std::vector<std::pair<int, int>> apos;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) apos.emplace_back(i, j);

    std::vector<int> adig(apos.size(), 0);
    std::vector<int> add(n * n), mul(n * n);
    do {
        for (int i = 0; i < n; ++i) add[i * n + i] = i;
        for (size_t k = 0; k < apos.size(); ++k) {
            add[apos[k].first * n + apos[k].second] = adig[k];
            add[apos[k].second * n + apos[k].first] = adig[k];
        }
        if (!table_associative(add, n)) continue;
        const int z = find_neutral(add, n);
        if (z < 0) continue;

        // Free multiplication entries: upper triangle off the zero row/column.
        std::vector<std::pair<int, int>> mpos;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (i != z && j != z) mpos.emplace_back(i, j);
        std::vector<int> mdig(mpos.size(), 0);
        do {
            for (int x = 0; x < n; ++x) {
                mul[z * n + x] = z;
                mul[x * n + z] = z;
            }
            for (size_t k = 0; k < mpos.size(); ++k) {
                mul[mpos[k].first * n + mpos[k].second] = mdig[k];
                mul[mpos[k].second * n + mpos[k].first] = mdig[k];
            }
            if (!table_associative(mul, n)) continue;
            const int e = find_neutral(mul, n);
            if (e < 0 || (e == z && n > 1)) continue;
            bool distrib = true;
            for (int a = 0; a < n && distrib; ++a)
                for (int b = 0; b < n && distrib; ++b)
                    for (int c = 0; c < n; ++c)
                        if (mul[add[a * n + b] * n + c] !=
                            add[mul[a * n + c] * n + mul[b * n + c]]) {
                            distrib = false;
                            break;
                        }
            if (!distrib) continue;

            finite_semiring s;
            s.names.reserve(n);
            for (int i = 0; i < n; ++i) s.names.push_back("e" + std::to_string(i));
            s.add_table = add;
            s.mul_table = mul;
            s.zero = z;
            s.one = e;
            validate_semiring(s);
            if (up_to_iso) {
                bool fresh = true;
                for (const auto& seen : out)
                    if (find_semiring_isomorphism(s, seen)) { fresh = false; break; }
                if (!fresh) continue;
            }
            out.push_back(std::move(s));
        } while (next_digits(mdig, n));
    } while (next_digits(adig, n));

    return out;
}

}  // namespace idem
