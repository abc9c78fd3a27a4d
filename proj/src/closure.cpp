#include "idem/closure.hpp"

#include <algorithm>

#include "idem/ideals.hpp"

namespace idem {

namespace {

int domain_index(const closure_operator& op, const bits& x) {
    for (size_t k = 0; k < op.domain.size(); ++k)
        if (op.domain[k] == x) return static_cast<int>(k);
    return -1;
}

void require_ideal(const finite_semiring& s, const bits& i) {
    if (!is_ideal(s, i)) throw validation_error("input set is not an ideal");
}

void require_idempotent(const finite_semiring& s) {
    if (!classify(s).idempotent)
        throw capability_error("operation requires an additively idempotent carrier");
}

}  // namespace

axiom_report verify_closure_axioms(const closure_operator& op) {
    axiom_report rep;
    const size_t n = op.domain.size();
    std::vector<bits> closed;
    closed.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        closed.push_back(op.map(op.domain[k]));
        if (domain_index(op, closed[k]) < 0) {
            rep.ok = false;
            rep.failing_axiom = "domain";
            rep.detail = "image of " + op.domain_names[k] + " leaves the domain";
            return rep;
        }
        if (!op.domain[k].subset_of(closed[k])) {
            rep.ok = false;
            rep.failing_axiom = "extension";
            rep.detail = op.domain_names[k] + " is not contained in its closure";
            return rep;
        }
    }
    for (size_t k = 0; k < n; ++k)
        if (!(op.map(closed[k]) == closed[k])) {
            rep.ok = false;
            rep.failing_axiom = "idempotence";
            rep.detail = "closure of " + op.domain_names[k] + " is not closed";
            return rep;
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (op.domain[a].subset_of(op.domain[b]) && !closed[a].subset_of(closed[b])) {
                rep.ok = false;
                rep.failing_axiom = "order";
                rep.detail = op.domain_names[a] + " <= " + op.domain_names[b] +
                             " but the closures are not ordered";
                return rep;
            }
    return rep;
}

bits closure_at_congruence(const finite_semiring& s, const congruence& c, const bits& i) {
    require_ideal(s, i);
    bits out(s.size());
    for (int x = 0; x < s.size(); ++x)
        for (int z : i.elements())
            if (c.related(x, z)) {
                out.set(x);
                break;
            }
    return out;
}

bits bracket_closure(const finite_semiring& s, const congruence& c, const bits& i) {
    require_ideal(s, i);
    bits out(s.size());
    for (int x = 0; x < s.size(); ++x)
        for (int z : i.elements())
            if (c.related(z, s.add(x, z))) {
                out.set(x);
                break;
            }
    if (!is_k_ideal(s, out))
        throw validation_error("internal error: bracket closure not a k-ideal");
    return out;
}

bits integral_elements(const finite_semiring& s, const bits& i) {
    require_idempotent(s);
    require_ideal(s, i);
    const int bound = s.size() * s.size() + 1;
    bits out(s.size());
    for (int x = 0; x < s.size(); ++x) {
        for (int z : i.elements()) {
            int p = s.add(x, z);
            int prev = s.one;  // p^0
            int cur = p;       // p^1
            bool found = false;
            for (int n = 1; n <= bound; ++n) {
                if (cur == s.mul(z, prev)) {
                    found = true;
                    break;
                }
                prev = cur;
                cur = s.mul(cur, p);
            }
            if (found) {
                out.set(x);
                break;
            }
        }
    }
    if (!is_ideal(s, out))
        throw validation_error("internal error: integral elements not an ideal");
    return out;
}

std::vector<integral_witness> integral_witnesses(const finite_semiring& s,
                                                 const bits& i) {
    require_idempotent(s);
    require_ideal(s, i);
    const int bound = s.size() * s.size() + 1;
    std::vector<integral_witness> out;
    for (int x = 0; x < s.size(); ++x) {
        bool done = false;
        for (int z : i.elements()) {
            int p = s.add(x, z);
            int prev = s.one;
            int cur = p;
            for (int n = 1; n <= bound && !done; ++n) {
                if (cur == s.mul(z, prev)) {
                    out.push_back(integral_witness{x, z, n});
                    done = true;
                }
                prev = cur;
                cur = s.mul(cur, p);
            }
            if (done) break;
        }
    }
    return out;
}

bits integral_closure(const finite_semiring& s, const bits& i) {
    return k_closure(s, integral_elements(s, i));
}

namespace {

bits power_bracket_ideal(const finite_semiring& s, const bits& i, int n) {
    bits gens(s.size());
    for (int x : i.elements()) gens.set(s.pow(x, n));
    return ideal_generated_by(s, gens);
}

}  // namespace

bits frobenius_closure(const finite_semiring& s, const bits& i) {
    if (!classify(s).freshman_dream)
        throw capability_error(
            "frobenius closure requires the power-sum identity (a+b)^n = a^n + b^n");
    require_ideal(s, i);
    bits out(s.size());
    for (int x = 0; x < s.size(); ++x)
        for (int n = 1; n <= s.size() + 1; ++n)
            if (power_bracket_ideal(s, i, n).test(s.pow(x, n))) {
                out.set(x);
                break;
            }
    return out;
}

std::vector<frobenius_witness> frobenius_witnesses(const finite_semiring& s,
                                                   const bits& i) {
    if (!classify(s).freshman_dream)
        throw capability_error(
            "frobenius closure requires the power-sum identity (a+b)^n = a^n + b^n");
    require_ideal(s, i);
    std::vector<frobenius_witness> out;
    for (int x = 0; x < s.size(); ++x)
        for (int n = 1; n <= s.size() + 1; ++n)
            if (power_bracket_ideal(s, i, n).test(s.pow(x, n))) {
                out.push_back(frobenius_witness{x, n});
                break;
            }
    return out;
}

bool is_finite_type(const closure_operator& op) {
    for (size_t k = 0; k < op.domain.size(); ++k) {
        bits expected = op.map(op.domain[k]);
        bits got(expected.universe());
        for (size_t j = 0; j < op.domain.size(); ++j)
            if (op.domain[j].subset_of(op.domain[k])) got |= op.map(op.domain[j]);
        if (!(got == expected)) return false;
    }
    return true;
}

finite_space fixed_point_space(const closure_operator& op) {
    std::vector<bits> fixed;
    std::vector<std::string> names;
    for (size_t k = 0; k < op.domain.size(); ++k)
        if (op.map(op.domain[k]) == op.domain[k]) {
            fixed.push_back(op.domain[k]);
            names.push_back(op.domain_names[k]);
        }
    return hull_kernel_space(fixed, names);
}

namespace {

closure_operator ideal_domain_closure(const finite_semiring& s, std::string name,
                                      ideal_kind kind,
                                      std::function<bits(const bits&)> map) {
    closure_operator op;
    op.name = std::move(name);
    op.domain = enumerate_ideals(s, kind);
    for (const bits& i : op.domain) op.domain_names.push_back(subset_label(i, s.names));
    op.map = std::move(map);
    return op;
}

}  // namespace

closure_operator make_ideal_closure(const finite_semiring& s, const std::string& name,
                                    const std::optional<congruence>& c) {
    const bool wants_congruence = name == "at-congruence" || name == "bracket";
    if (wants_congruence && !c)
        throw validation_error("closure '" + name + "' needs a congruence");
    if (!wants_congruence && c)
        throw validation_error("closure '" + name + "' takes no congruence");
    if (name == "identity")
        return ideal_domain_closure(s, name, ideal_kind::all, [](const bits& i) { return i; });
    if (name == "indiscrete")
        return ideal_domain_closure(s, name, ideal_kind::all,
                                    [n = s.size()](const bits&) { return bits::full(n); });
    if (name == "radical")
        return ideal_domain_closure(s, name, ideal_kind::k,
                                    [s](const bits& i) { return radical_k_ideal(s, i); });
    if (name == "k")
        return ideal_domain_closure(s, name, ideal_kind::all,
                                    [s](const bits& i) { return k_closure(s, i); });
    if (name == "at-congruence")
        return ideal_domain_closure(
            s, name, ideal_kind::all,
            [s, cc = *c](const bits& i) { return closure_at_congruence(s, cc, i); });
    if (name == "bracket")
        return ideal_domain_closure(
            s, name, ideal_kind::all,
            [s, cc = *c](const bits& i) { return bracket_closure(s, cc, i); });
    if (name == "integral")
        return ideal_domain_closure(s, name, ideal_kind::all,
                                    [s](const bits& i) { return integral_closure(s, i); });
    if (name == "integral-raw")
        return ideal_domain_closure(s, name, ideal_kind::all,
                                    [s](const bits& i) { return integral_elements(s, i); });
    if (name == "frobenius") {
        if (!classify(s).freshman_dream)
            throw capability_error(
                "frobenius closure requires the power-sum identity (a+b)^n = a^n + b^n");
        return ideal_domain_closure(s, name, ideal_kind::all,
                                    [s](const bits& i) { return frobenius_closure(s, i); });
    }
    throw validation_error("unknown closure operator '" + name + "'");
}

closure_operator make_congruence_radical_closure(const finite_semiring& s) {
    closure_operator op;
    op.name = "congruence-radical";
    auto all = enumerate_congruences(s);
    for (const auto& c : all) {
        op.domain.push_back(c.pair_bits());
        op.domain_names.push_back(congruence_label(s, c));
    }
    op.map = [s, all](const bits& rel) {
        for (const auto& c : all)
            if (c.pair_bits() == rel) return radical_congruence(s, c).pair_bits();
        throw validation_error("relation is not a congruence of this carrier");
    };
    return op;
}

std::vector<closure_operator> standard_closures(const finite_semiring& s) {
    std::vector<closure_operator> out;
    for (const char* name : {"identity", "indiscrete", "radical", "k", "integral",
                             "integral-raw"})
        out.push_back(make_ideal_closure(s, name));
    if (classify(s).freshman_dream) out.push_back(make_ideal_closure(s, "frobenius"));
    for (const auto& c : enumerate_congruences(s)) {
        auto at = make_ideal_closure(s, "at-congruence", c);
        at.name += " " + congruence_label(s, c);
        out.push_back(std::move(at));
        auto br = make_ideal_closure(s, "bracket", c);
        br.name += " " + congruence_label(s, c);
        out.push_back(std::move(br));
    }
    out.push_back(make_congruence_radical_closure(s));
    return out;
}

}  // namespace idem
