#include "idem/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace idem {

bool finite_space::is_open(const bits& u) const {
    return std::find(opens.begin(), opens.end(), u) != opens.end();
}

bool finite_space::is_closed(const bits& c) const {
    return is_open(c.complement());
}

bits finite_space::closure(const bits& s) const {
    bits away(size());
    for (const bits& u : opens)
        if ((u & s).empty()) away |= u;
    return away.complement();
}

bits finite_space::closure_of_point(int p) const {
    bits s(size());
    s.set(p);
    return closure(s);
}

bool finite_space::leq(int x, int y) const {
    return closure_of_point(x).test(y);
}

void validate_space(const finite_space& s) {
    const int n = s.size();
    bits empty(n), full = bits::full(n);
    if (!s.is_open(empty) || !s.is_open(full))
        throw validation_error("topology must contain the empty and full sets");
    for (const bits& u : s.opens) {
        if (u.universe() != n)
            throw validation_error("open set over the wrong point universe");
        for (const bits& v : s.opens) {
            if (!s.is_open(u | v))
                throw validation_error("opens not closed under union");
            if (!s.is_open(u & v))
                throw validation_error("opens not closed under intersection");
        }
    }
    std::unordered_set<std::string> seen;
    for (const auto& nm : s.point_names)
        if (!seen.insert(nm).second)
            throw validation_error("duplicate point label: '" + nm + "'");
}

finite_space space_from_subbasis(std::vector<std::string> point_names,
                                 const std::vector<bits>& subbasis) {
    const int n = static_cast<int>(point_names.size());
    for (const bits& b : subbasis)
        if (b.universe() != n)
            throw validation_error("subbasis set over the wrong point universe");

    // Basis: all finite intersections (the empty intersection is the full set).
    std::vector<bits> basis = {bits::full(n)};
    auto push_unique = [](std::vector<bits>& fam, const bits& b) {
        if (std::find(fam.begin(), fam.end(), b) == fam.end()) fam.push_back(b);
    };
    for (const bits& sb : subbasis) push_unique(basis, sb);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            push_unique(basis, basis[i] & basis[j]);

    // Opens: all unions of basis sets (the empty union is the empty set).
    std::vector<bits> opens = {bits(n)};
    for (const bits& b : basis) {
        std::vector<bits> grown = opens;
        for (const bits& o : opens) push_unique(grown, o | b);
        opens = std::move(grown);
        if (opens.size() > (1u << 20))
            throw capability_error("generated topology exceeds the supported size");
    }

    finite_space out;
    out.point_names = std::move(point_names);
    out.opens = std::move(opens);
    canonicalize_family(out.opens);
    validate_space(out);
    return out;
}

spectral_report check_spectral(const finite_space& s) {
    spectral_report r;
    const int n = s.size();

    // T0: some open must separate every pair of distinct points.
    r.t0 = true;
    for (int x = 0; x < n && r.t0; ++x)
        for (int y = x + 1; y < n && r.t0; ++y) {
            bool separated = false;
            for (const bits& u : s.opens)
                if (u.test(x) != u.test(y)) { separated = true; break; }
            if (!separated) {
                r.t0 = false;
                r.detail = "points " + s.point_names[x] + " and " + s.point_names[y] +
                           " are topologically indistinguishable";
            }
        }

    // Every cover of a finite set by opens is itself finite, hence its own
    // finite subcover; likewise every open is quasi-compact, and the full
    // family of opens is a basis closed under intersection.  So these two
    // conditions hold for any finite topology.
    r.quasi_compact = true;
    r.qc_open_basis = true;

    // Sober: every irreducible closed set has exactly one generic point.
    r.sober = true;
    std::vector<bits> closed;
    for (const bits& u : s.opens) closed.push_back(u.complement());
    canonicalize_family(closed);
    for (const bits& c : closed) {
        if (c.empty()) continue;
        bool irreducible = true;
        for (size_t i = 0; i < closed.size() && irreducible; ++i)
            for (size_t j = 0; j < closed.size() && irreducible; ++j) {
                if (!c.subset_of(closed[i] | closed[j])) continue;
                if (!c.subset_of(closed[i]) && !c.subset_of(closed[j]))
                    irreducible = false;
            }
        if (!irreducible) continue;
        int generic_count = 0;
        for (int p : c.elements())
            if (s.closure_of_point(p) == c) ++generic_count;
        if (generic_count != 1) {
            r.sober = false;
            r.detail = "irreducible closed set " + subset_label(c, s.point_names) + " has " +
                       std::to_string(generic_count) + " generic points";
            break;
        }
    }
    return r;
}

bool is_spectral(const finite_space& s) { return check_spectral(s).spectral(); }

finite_space patch_topology(const finite_space& s) {
    std::vector<bits> sub = s.opens;
    for (const bits& u : s.opens) sub.push_back(u.complement());
    return space_from_subbasis(s.point_names, sub);
}

finite_space hull_kernel_space(const std::vector<bits>& family,
                               const std::vector<std::string>& member_names) {
    if (family.size() != member_names.size())
        throw validation_error("family and member names disagree in length");
    const int m = static_cast<int>(family.size());
    const int carrier = m == 0 ? 0 : family[0].universe();
    std::vector<bits> sub;
    for (int x = 0; x < carrier; ++x) {
        bits d(m);
        for (int i = 0; i < m; ++i)
            if (!family[i].test(x)) d.set(i);
        sub.push_back(d);
    }
    return space_from_subbasis(member_names, sub);
}

namespace {

// Invariants preserved by homeomorphism, per point: how many opens of each
// size contain it.
std::vector<int> point_profile(const finite_space& s, int p) {
    std::vector<int> prof(s.size() + 1, 0);
    for (const bits& u : s.opens)
        if (u.test(p)) ++prof[u.count()];
    return prof;
}

bool homeo_extend(const finite_space& a, const finite_space& b,
                  const std::vector<std::vector<int>>& cand, std::vector<int>& f,
                  std::vector<bool>& used, size_t next) {
    const int n = a.size();
    if (next == static_cast<size_t>(n)) {
        for (const bits& u : a.opens) {
            bits img(n);
            for (int p : u.elements()) img.set(f[p]);
            if (!b.is_open(img)) return false;
        }
        return true;
    }
    for (int img : cand[next]) {
        if (used[img]) continue;
        f[next] = img;
        used[img] = true;
        if (homeo_extend(a, b, cand, f, used, next + 1)) return true;
        used[img] = false;
    }
    f[next] = -1;
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_homeomorphism(const finite_space& a,
                                                   const finite_space& b) {
    if (a.size() > 8 || b.size() > 8)
        throw capability_error("homeomorphism search is limited to spaces with at most 8 points");
    if (a.size() != b.size() || a.opens.size() != b.opens.size()) return std::nullopt;
    const int n = a.size();
    std::vector<std::vector<int>> cand(n);
    for (int p = 0; p < n; ++p) {
        auto pp = point_profile(a, p);
        for (int q = 0; q < n; ++q)
            if (pp == point_profile(b, q)) cand[p].push_back(q);
        if (cand[p].empty()) return std::nullopt;
    }
    std::vector<int> f(n, -1);
    std::vector<bool> used(n, false);
    if (homeo_extend(a, b, cand, f, used, 0)) return f;
    return std::nullopt;
}

bool same_topology(const finite_space& a, const finite_space& b) {
    return a.size() == b.size() && a.opens == b.opens;
}

}  // namespace idem
