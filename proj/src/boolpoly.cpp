#include "idem/boolpoly.hpp"

#include <algorithm>

namespace idem {

namespace {

void normalize(bool_poly& p) {
    for (const auto& m : p.monomials) {
        if (static_cast<int>(m.size()) != p.arity)
            throw validation_error("monomial arity mismatch");
        for (int e : m)
            if (e < 0) throw validation_error("negative exponent");
    }
    std::sort(p.monomials.begin(), p.monomials.end());
    p.monomials.erase(std::unique(p.monomials.begin(), p.monomials.end()),
                      p.monomials.end());
}

void require_same_arity(const bool_poly& p, const bool_poly& q) {
    if (p.arity != q.arity) throw validation_error("polynomial arity mismatch");
}

std::string variable_name(int i) {
    static const char* first[] = {"x", "y", "z"};
    if (i < 3) return first[i];
    return "x" + std::to_string(i);
}

}  // namespace

bool_poly bp_zero(int arity) {
    bool_poly p;
    p.arity = arity;
    return p;
}

bool_poly bp_one(int arity) {
    bool_poly p;
    p.arity = arity;
    p.monomials.push_back(std::vector<int>(arity, 0));
    return p;
}

bool_poly bp_monomial(std::vector<int> exps) {
    bool_poly p;
    p.arity = static_cast<int>(exps.size());
    p.monomials.push_back(std::move(exps));
    normalize(p);
    return p;
}

bool_poly bp_from_monomials(int arity, std::vector<std::vector<int>> ms) {
    bool_poly p;
    p.arity = arity;
    p.monomials = std::move(ms);
    normalize(p);
    return p;
}

bool_poly bp_add(const bool_poly& p, const bool_poly& q) {
    require_same_arity(p, q);
    bool_poly r;
    r.arity = p.arity;
    r.monomials.reserve(p.monomials.size() + q.monomials.size());
    std::set_union(p.monomials.begin(), p.monomials.end(), q.monomials.begin(),
                   q.monomials.end(), std::back_inserter(r.monomials));
    return r;
}

bool_poly bp_mul(const bool_poly& p, const bool_poly& q) {
    require_same_arity(p, q);
    bool_poly r;
    r.arity = p.arity;
    for (const auto& a : p.monomials)
        for (const auto& b : q.monomials) {
            std::vector<int> m(p.arity);
            for (int i = 0; i < p.arity; ++i) m[i] = a[i] + b[i];
            r.monomials.push_back(std::move(m));
        }
    normalize(r);
    return r;
}

bool_poly bp_pow(const bool_poly& p, int k) {
    if (k < 0) throw validation_error("negative power");
    bool_poly r = bp_one(p.arity);
    for (int i = 0; i < k; ++i) r = bp_mul(r, p);
    return r;
}

bool bp_leq(const bool_poly& p, const bool_poly& q) {
    require_same_arity(p, q);
    return std::includes(q.monomials.begin(), q.monomials.end(),
                         p.monomials.begin(), p.monomials.end());
}

int bp_degree(const bool_poly& p) {
    int best = -1;
    for (const auto& m : p.monomials) {
        int d = 0;
        for (int e : m) d += e;
        best = std::max(best, d);
    }
    return best;
}

std::string bp_to_string(const bool_poly& p) {
    if (p.monomials.empty()) return "0";
    // Display monomials by descending total degree, then descending lex, so
    // "x^2 + x + 1" reads naturally.
    auto sorted = p.monomials;
    auto total = [](const std::vector<int>& m) {
        int d = 0;
        for (int e : m) d += e;
        return d;
    };
    std::sort(sorted.begin(), sorted.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  int da = total(a), db = total(b);
                  if (da != db) return da > db;
                  return a > b;
              });
    std::string out;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += " + ";
        const auto& m = sorted[i];
        std::string term;
        for (int v = 0; v < p.arity; ++v) {
            if (m[v] == 0) continue;
            if (!term.empty()) term += "*";
            term += variable_name(v);
            if (m[v] > 1) term += "^" + std::to_string(m[v]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

bp_pair bp_twisted_mul(const bp_pair& x, const bp_pair& y) {
    return {bp_add(bp_mul(x.first, y.first), bp_mul(x.second, y.second)),
            bp_add(bp_mul(x.first, y.second), bp_mul(x.second, y.first))};
}

}  // namespace idem
