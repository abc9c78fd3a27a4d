#include "idem/io.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace idem {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
    if (!doc.is_object())
        throw parse_error("expected a JSON object with a \"" + std::string(name) +
                          "\" field");
    auto it = doc.find(name);
    if (it == doc.end())
        throw parse_error("missing required field \"" + std::string(name) + "\"");
    return *it;
}

std::string string_value(const json& j, const std::string& what) {
    if (!j.is_string()) throw parse_error(what + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> string_array(const json& j, const std::string& what) {
    if (!j.is_array()) throw parse_error(what + " must be an array of strings");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(string_value(e, "entry of " + what));
    return out;
}

// Element labels must be unique or table lookups would be ambiguous.
std::vector<std::string> label_list(const json& j, const std::string& what) {
    auto labels = string_array(j, what);
    if (labels.empty()) throw parse_error(what + " must not be empty");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw parse_error("duplicate label \"" + l + "\" in " + what);
    return labels;
}

int label_index(const std::vector<std::string>& labels, const std::string& l,
                const std::string& what) {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return static_cast<int>(i);
    throw parse_error("unknown label \"" + l + "\" in " + what);
}

// n x n label matrix -> row-major index table.
std::vector<int> table_from_doc(const json& j, const std::vector<std::string>& labels,
                                const std::string& what) {
    if (!j.is_array() || j.size() != labels.size())
        throw parse_error(what + " must be an array of " +
                          std::to_string(labels.size()) + " rows");
    std::vector<int> table;
    table.reserve(labels.size() * labels.size());
    for (const auto& row : j) {
        auto entries = string_array(row, "row of " + what);
        if (entries.size() != labels.size())
            throw parse_error("ragged row in " + what + ": expected " +
                              std::to_string(labels.size()) + " entries");
        for (const auto& e : entries) table.push_back(label_index(labels, e, what));
    }
    return table;
}

json table_to_doc(const std::vector<int>& table, const std::vector<std::string>& labels) {
    json rows = json::array();
    int n = static_cast<int>(labels.size());
    for (int x = 0; x < n; ++x) {
        json row = json::array();
        for (int y = 0; y < n; ++y) row.push_back(labels[table[x * n + y]]);
        rows.push_back(row);
    }
    return rows;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Shared DOT renderer: nodes plus the covering edges of the given order,
// drawn bottom-to-top.
std::string dot_of_order(const std::vector<std::string>& names,
                         const std::function<bool(int, int)>& le) {
    int n = static_cast<int>(names.size());
    std::string out = "digraph order {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < n; ++i) out += "  \"" + dot_escape(names[i]) + "\";\n";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !le(x, y) || le(y, x)) continue;
            bool covering = true;
            for (int z = 0; z < n && covering; ++z)
                if (z != x && z != y && le(x, z) && le(z, y) && !le(z, x) && !le(y, z))
                    covering = false;
            if (covering)
                out += "  \"" + dot_escape(names[x]) + "\" -> \"" +
                       dot_escape(names[y]) + "\";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace

json semiring_to_doc(const finite_semiring& s) {
    json doc;
    doc["elements"] = s.names;
    doc["zero"] = s.names[s.zero];
    doc["one"] = s.names[s.one];
    doc["add"] = table_to_doc(s.add_table, s.names);
    doc["mul"] = table_to_doc(s.mul_table, s.names);
    return doc;
}

finite_semiring semiring_from_doc(const json& doc) {
    finite_semiring s;
    s.names = label_list(field(doc, "elements"), "\"elements\"");
    s.zero = label_index(s.names, string_value(field(doc, "zero"), "\"zero\""), "\"zero\"");
    s.one = label_index(s.names, string_value(field(doc, "one"), "\"one\""), "\"one\"");
    s.add_table = table_from_doc(field(doc, "add"), s.names, "\"add\"");
    s.mul_table = table_from_doc(field(doc, "mul"), s.names, "\"mul\"");
    validate_semiring(s);
    return s;
}

json space_to_doc(const finite_space& x) {
    json doc;
    doc["points"] = x.point_names;
    json opens = json::array();
    for (const auto& u : x.opens) {
        json open = json::array();
        for (int p : u.elements()) open.push_back(x.point_names[p]);
        opens.push_back(open);
    }
    doc["opens"] = opens;
    return doc;
}

finite_space space_from_doc(const json& doc) {
    finite_space x;
    x.point_names = label_list(field(doc, "points"), "\"points\"");
    const json& opens = field(doc, "opens");
    if (!opens.is_array()) throw parse_error("\"opens\" must be an array of label arrays");
    int n = static_cast<int>(x.point_names.size());
    for (const auto& open : opens) {
        bits u(n);
        for (const auto& l : string_array(open, "open set"))
            u.set(label_index(x.point_names, l, "open set"));
        x.opens.push_back(u);
    }
    canonicalize_family(x.opens);
    validate_space(x);
    return x;
}

json lattice_to_doc(const finite_lattice& l) {
    json doc;
    doc["elements"] = l.names;
    json pairs = json::array();
    for (int x = 0; x < l.size(); ++x)
        for (int y = 0; y < l.size(); ++y)
            if (x != y && l.le(x, y)) pairs.push_back(json::array({l.names[x], l.names[y]}));
    doc["leq"] = pairs;
    return doc;
}

finite_lattice lattice_from_doc(const json& doc) {
    auto names = label_list(field(doc, "elements"), "\"elements\"");
    int n = static_cast<int>(names.size());

    if (doc.contains("join") || doc.contains("meet")) {
        finite_lattice l;
        l.names = names;
        l.join_table = table_from_doc(field(doc, "join"), names, "\"join\"");
        l.meet_table = table_from_doc(field(doc, "meet"), names, "\"meet\"");
        // The order is recovered from join; validation then checks that the
        // two tables are the genuine bounds of that order.
        l.leq.assign(n * n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (l.join_table[x * n + y] == y) l.leq[x * n + y] = 1;
        for (int i = 0; i < n; ++i) {
            bool bottom = true, top = true;
            for (int y = 0; y < n; ++y) {
                if (!l.leq[i * n + y]) bottom = false;
                if (!l.leq[y * n + i]) top = false;
            }
            if (bottom) l.bottom = i;
            if (top) l.top = i;
        }
        validate_lattice(l);
        return l;
    }

    const json& pairs = field(doc, "leq");
    if (!pairs.is_array()) throw parse_error("\"leq\" must be an array of [lo, hi] pairs");
    std::vector<uint8_t> leq(n * n, 0);
    for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& pr : pairs) {
        auto entry = string_array(pr, "\"leq\" pair");
        if (entry.size() != 2) throw parse_error("\"leq\" pairs must have exactly two labels");
        leq[label_index(names, entry[0], "\"leq\"") * n +
            label_index(names, entry[1], "\"leq\"")] = 1;
    }
    // Transitive closure; the pairs may list only generators of the order.
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (leq[x * n + k])
                for (int y = 0; y < n; ++y)
                    if (leq[k * n + y]) leq[x * n + y] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < x; ++y)
            if (leq[x * n + y] && leq[y * n + x])
                throw validation_error("the order is not antisymmetric: " + names[x] +
                                       " and " + names[y] + " lie below each other");
    return lattice_from_leq(std::move(names), std::move(leq));
}

json subset_to_doc(const finite_semiring& s, const bits& subset) {
    json out = json::array();
    for (int i : subset.elements()) out.push_back(s.names[i]);
    return out;
}

bits subset_from_doc(const finite_semiring& s, const json& doc) {
    bits out(s.size());
    for (const auto& l : string_array(doc, "subset")) out.set(s.index_of(l));
    return out;
}

json congruence_to_doc(const finite_semiring& s, const congruence& c) {
    json blocks = json::array();
    for (int b = 0; b < c.blocks(); ++b) {
        json block = json::array();
        for (int i = 0; i < s.size(); ++i)
            if (c.block_of[i] == b) block.push_back(s.names[i]);
        blocks.push_back(block);
    }
    return blocks;
}

congruence congruence_from_doc(const finite_semiring& s, const json& doc) {
    if (!doc.is_array()) throw parse_error("a congruence document is an array of blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : doc) {
        std::vector<int> ids;
        for (const auto& l : string_array(block, "congruence block")) ids.push_back(s.index_of(l));
        blocks.push_back(std::move(ids));
    }
    return congruence_from_blocks(s, blocks);
}

json valuation_to_doc(const valuation_witness& v) {
    json doc;
    doc["prime"] = congruence_to_doc(v.source, v.prime);
    doc["quotient"] = semiring_to_doc(v.quotient);
    json values;
    for (int i = 0; i < v.source.size(); ++i)
        values[v.source.names[i]] = v.quotient.names[v.map[i]];
    doc["values"] = values;
    return doc;
}

std::string doc_kind(const json& doc) {
    if (!doc.is_object()) throw parse_error("expected a JSON object document");
    if (doc.contains("add") || doc.contains("mul")) return "semiring";
    if (doc.contains("points") || doc.contains("opens")) return "space";
    if (doc.contains("elements")) return "lattice";
    throw parse_error("unrecognized document shape: expected semiring, space, or lattice fields");
}

json load_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
}

std::string space_to_dot(const finite_space& x) {
    return dot_of_order(x.point_names, [&x](int a, int b) { return x.leq(a, b); });
}

std::string lattice_to_dot(const finite_lattice& l) {
    return dot_of_order(l.names, [&l](int a, int b) { return l.le(a, b); });
}

}  // namespace idem
