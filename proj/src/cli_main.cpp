// Command-line front end: every subcommand reads label-based JSON documents,
// writes a structured result envelope to standard output, and signals
// through the exit code — 0 for success, 1 for any validation or axiom
// failure, 2 when a bounded search ends without a verdict.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "idem/boolpoly.hpp"
#include "idem/closure.hpp"
#include "idem/congruence.hpp"
#include "idem/corpus.hpp"
#include "idem/fragment.hpp"
#include "idem/ideals.hpp"
#include "idem/io.hpp"
#include "idem/lattice.hpp"
#include "idem/semiring.hpp"
#include "idem/topology.hpp"
#include "idem/valuation.hpp"

using nlohmann::json;

namespace {

struct command_result {
    std::string status = "ok";  // ok | validation-failure | inconclusive
    json payload = json::object();
    std::vector<std::string> diagnostics;
};

bool verbose_enabled() {
    const char* v = std::getenv("IDEM_VERBOSE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void note(command_result& r, const std::string& msg) {
    if (verbose_enabled()) r.diagnostics.push_back(msg);
}

int emit(const command_result& r) {
    json envelope;
    envelope["status"] = r.status;
    envelope["payload"] = r.payload;
    envelope["diagnostics"] = r.diagnostics;
    std::cout << envelope.dump(2) << "\n";
    if (r.status == "ok") return 0;
    if (r.status == "inconclusive") return 2;
    return 1;
}

idem::finite_semiring load_semiring(const std::string& path) {
    return idem::semiring_from_doc(idem::load_doc(path));
}

idem::finite_space load_space(const std::string& path) {
    return idem::space_from_doc(idem::load_doc(path));
}

idem::finite_lattice load_lattice(const std::string& path) {
    return idem::lattice_from_doc(idem::load_doc(path));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw idem::parse_error("cannot write file: " + path);
    out << content;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        size_t b = cur.find_first_not_of(" \t");
        size_t e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else cur.push_back(ch);
    }
    flush();
    return out;
}

idem::bits parse_label_set(const idem::finite_semiring& s, const std::string& csv) {
    idem::bits out(s.size());
    for (const auto& label : split_csv(csv)) out.set(s.index_of(label));
    return out;
}

// Blocks in the same syntax the tool prints: "{0,a}{1}".
idem::congruence parse_blocks(const idem::finite_semiring& s, const std::string& text) {
    std::vector<std::vector<int>> blocks;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '{')
            throw idem::parse_error("blocks must be written like {0,a}{1}; got \"" + text + "\"");
        size_t close = text.find('}', i);
        if (close == std::string::npos)
            throw idem::parse_error("unterminated block in \"" + text + "\"");
        std::vector<int> block;
        for (const auto& label : split_csv(text.substr(i + 1, close - i - 1)))
            block.push_back(s.index_of(label));
        blocks.push_back(std::move(block));
        i = close + 1;
    }
    if (blocks.empty()) throw idem::parse_error("no blocks found in \"" + text + "\"");
    return idem::congruence_from_blocks(s, blocks);
}

json property_doc(const idem::property_report& r) {
    json p;
    p["idempotent"] = r.idempotent;
    p["integral"] = r.integral;
    p["cancellative"] = r.cancellative;
    p["zero_sum_free"] = r.zero_sum_free;
    p["idealic"] = r.idealic;
    p["radical_idealic"] = r.radical_idealic;
    p["totally_ordered"] = r.totally_ordered;
    p["freshman_dream"] = r.freshman_dream;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for finite commutative semirings: spectra, closures, "
                 "lattice duality, and valuations over label-based JSON documents"};
    app.require_subcommand(1);

    command_result result;

    // --- validate ----------------------------------------------------------
    std::string validate_path;
    auto* validate_cmd =
        app.add_subcommand("validate", "check a semiring, space, or lattice document");
    validate_cmd->add_option("doc", validate_path, "input document")->required();
    validate_cmd->callback([&] {
        auto doc = idem::load_doc(validate_path);
        auto kind = idem::doc_kind(doc);
        result.payload["kind"] = kind;
        if (kind == "semiring") {
            auto s = idem::semiring_from_doc(doc);
            result.payload["elements"] = s.size();
            result.payload["properties"] = property_doc(idem::classify(s));
        } else if (kind == "space") {
            auto x = idem::space_from_doc(doc);
            auto rep = idem::check_spectral(x);
            result.payload["points"] = x.size();
            result.payload["opens"] = static_cast<int>(x.opens.size());
            result.payload["spectral"] = rep.spectral();
            if (!rep.spectral()) result.diagnostics.push_back(rep.detail);
        } else {
            auto l = idem::lattice_from_doc(doc);
            result.payload["elements"] = l.size();
            result.payload["distributive"] = idem::is_distributive_lattice(l);
        }
        note(result, "document passed every structural check");
    });

    // --- props --------------------------------------------------------------
    std::string props_path;
    auto* props_cmd =
        app.add_subcommand("props", "structural property flags of a semiring document");
    props_cmd->add_option("doc", props_path, "semiring document")->required();
    props_cmd->callback([&] {
        auto s = load_semiring(props_path);
        result.payload["elements"] = s.size();
        result.payload["properties"] = property_doc(idem::classify(s));
    });

    // --- ideals --------------------------------------------------------------
    std::string ideals_path, ideals_kind = "k";
    auto* ideals_cmd = app.add_subcommand("ideals", "enumerate ideals of a semiring");
    ideals_cmd->add_option("doc", ideals_path, "semiring document")->required();
    ideals_cmd->add_option("--kind", ideals_kind, "k | prime-k | all (default k)")
        ->check(CLI::IsMember({"k", "prime-k", "all"}));
    ideals_cmd->callback([&] {
        auto s = load_semiring(ideals_path);
        idem::ideal_kind kind = ideals_kind == "all"   ? idem::ideal_kind::all
                                : ideals_kind == "prime-k" ? idem::ideal_kind::prime_k
                                                           : idem::ideal_kind::k;
        auto family = idem::enumerate_ideals(s, kind);
        result.payload["kind"] = ideals_kind;
        result.payload["count"] = static_cast<int>(family.size());
        json list = json::array();
        for (const auto& i : family) list.push_back(idem::subset_to_doc(s, i));
        result.payload["ideals"] = list;
    });

    // --- the four spectrum commands -----------------------------------------
    struct spectrum_spec {
        const char* name;
        const char* help;
    };
    std::string spectrum_path, spectrum_dot;
    std::string spectrum_chosen;
    for (const auto& sc : {spectrum_spec{"speck", "hull-kernel space of prime k-ideals"},
                           spectrum_spec{"specc", "hull-kernel space of prime congruences"},
                           spectrum_spec{"spv", "valuation space with its topology"},
                           spectrum_spec{"zar", "space of prime lattice elements"}}) {
        auto* cmd = app.add_subcommand(sc.name, sc.help);
        cmd->add_option("doc", spectrum_path, "semiring document")->required();
        cmd->add_option("--dot", spectrum_dot, "write the specialization diagram here");
        std::string name = sc.name;
        cmd->callback([&, name] { spectrum_chosen = name; });
    }

    // --- closure --------------------------------------------------------------
    std::string closure_path, closure_op, closure_ideal, closure_blocks;
    auto* closure_cmd =
        app.add_subcommand("closure", "apply a named closure operation to a set of elements");
    closure_cmd->add_option("doc", closure_path, "semiring document")->required();
    closure_cmd
        ->add_option("--op", closure_op,
                     "identity | indiscrete | radical | k | at-congruence | bracket | "
                     "integral | integral-raw | frobenius")
        ->required();
    closure_cmd->add_option("--ideal", closure_ideal, "comma-separated element labels")
        ->required();
    closure_cmd->add_option("--congruence", closure_blocks,
                            "blocks like {0,a}{1}; only for at-congruence and bracket");
    closure_cmd->callback([&] {
        auto s = load_semiring(closure_path);
        std::optional<idem::congruence> c;
        if (!closure_blocks.empty()) c = parse_blocks(s, closure_blocks);
        auto op = idem::make_ideal_closure(s, closure_op, c);
        auto input = parse_label_set(s, closure_ideal);
        if (std::find(op.domain.begin(), op.domain.end(), input) == op.domain.end())
            throw idem::validation_error("the input set is not in the domain of \"" +
                                         op.name + "\"");
        auto closed = op.map(input);
        result.payload["op"] = op.name;
        result.payload["input"] = idem::subset_to_doc(s, input);
        result.payload["closed"] = idem::subset_to_doc(s, closed);
        json witnesses = json::array();
        if (closure_op == "integral" || closure_op == "integral-raw") {
            for (const auto& w : idem::integral_witnesses(s, input)) {
                json e;
                e["element"] = s.names[w.element];
                e["z"] = s.names[w.z];
                e["n"] = w.n;
                witnesses.push_back(e);
            }
        } else if (closure_op == "frobenius") {
            for (const auto& w : idem::frobenius_witnesses(s, input)) {
                json e;
                e["element"] = s.names[w.element];
                e["n"] = w.n;
                witnesses.push_back(e);
            }
        }
        result.payload["witnesses"] = witnesses;
    });

    // --- radical-congruence -----------------------------------------------------
    std::string radc_path, radc_blocks;
    auto* radc_cmd = app.add_subcommand(
        "radical-congruence", "intersection of the prime congruences above the given one");
    radc_cmd->add_option("doc", radc_path, "semiring document")->required();
    radc_cmd->add_option("--blocks", radc_blocks, "blocks like {0,a}{1}")->required();
    radc_cmd->callback([&] {
        auto s = load_semiring(radc_path);
        auto c = parse_blocks(s, radc_blocks);
        auto r = idem::radical_congruence(s, c);
        result.payload["input"] = idem::congruence_to_doc(s, c);
        result.payload["radical"] = idem::congruence_to_doc(s, r);
    });

    // --- duality ------------------------------------------------------------------
    std::string duality_mode, duality_path, duality_dot;
    auto* duality_cmd = app.add_subcommand(
        "duality", "translate between semiring and lattice presentations");
    duality_cmd->add_option("mode", duality_mode, "to-lattice | from-lattice | roundtrip")
        ->required()
        ->check(CLI::IsMember({"to-lattice", "from-lattice", "roundtrip"}));
    duality_cmd->add_option("doc", duality_path, "input document")->required();
    duality_cmd->add_option("--dot", duality_dot, "write the order diagram here");
    duality_cmd->callback([&] {
        if (duality_mode == "from-lattice") {
            auto l = load_lattice(duality_path);
            auto s = idem::lattice_to_semiring(l);
            result.payload["semiring"] = idem::semiring_to_doc(s);
            if (!duality_dot.empty()) write_file(duality_dot, idem::lattice_to_dot(l));
            return;
        }
        auto s = load_semiring(duality_path);
        auto l = idem::semiring_to_lattice(s);
        if (duality_mode == "to-lattice") {
            result.payload["lattice"] = idem::lattice_to_doc(l);
        } else {
            auto back = idem::lattice_to_semiring(l);
            bool identical = back.names == s.names && back.add_table == s.add_table &&
                             back.mul_table == s.mul_table && back.zero == s.zero &&
                             back.one == s.one;
            if (!identical)
                throw idem::validation_error("round trip did not reproduce the tables");
            result.payload["identical"] = true;
            result.payload["semiring"] = idem::semiring_to_doc(back);
        }
        if (!duality_dot.empty()) write_file(duality_dot, idem::lattice_to_dot(l));
    });

    // --- idealize / radicalize ------------------------------------------------------
    std::string quot_path;
    std::string quot_chosen;
    for (const char* name : {"idealize", "radicalize"}) {
        auto* cmd = app.add_subcommand(
            name, std::string(name) == "idealize"
                      ? "quotient forcing every element below the multiplicative identity"
                      : "quotient forcing every element multiplicatively idempotent");
        cmd->add_option("doc", quot_path, "semiring document")->required();
        std::string chosen = name;
        cmd->callback([&, chosen] { quot_chosen = chosen; });
    }

    // --- realize ---------------------------------------------------------------------
    std::string realize_path, realize_dot;
    auto* realize_cmd = app.add_subcommand(
        "realize", "rebuild a semiring whose prime k-ideal spectrum is the given space");
    realize_cmd->add_option("space-doc", realize_path, "space document")->required();
    realize_cmd->add_option("--dot", realize_dot, "write the specialization diagram here");
    realize_cmd->callback([&] {
        auto x = load_space(realize_path);
        auto r = idem::realize_space(x);
        result.payload["semiring"] = idem::semiring_to_doc(r.semiring);
        auto spectrum = idem::spec_k(r.semiring);
        json points;
        for (int i = 0; i < x.size(); ++i)
            points[x.point_names[i]] = spectrum.point_names[r.point_map[i]];
        result.payload["points"] = points;
        if (!realize_dot.empty()) write_file(realize_dot, idem::space_to_dot(x));
    });

    // --- enumerate --------------------------------------------------------------------
    int enumerate_order = 0;
    auto* enumerate_cmd = app.add_subcommand(
        "enumerate", "all idempotent commutative semirings of a given order, up to isomorphism");
    enumerate_cmd->add_option("--order", enumerate_order, "carrier size (1 to 4)")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate_cmd->callback([&] {
        auto list = idem::enumerate_idempotent_commutative_semirings(enumerate_order, true);
        result.payload["order"] = enumerate_order;
        result.payload["count"] = static_cast<int>(list.size());
        json docs = json::array();
        for (const auto& s : list) docs.push_back(idem::semiring_to_doc(s));
        result.payload["semirings"] = docs;
    });

    // --- cd-example --------------------------------------------------------------------
    int cd_n = 0, cd_degree = 0;
    auto* cd_cmd = app.add_subcommand(
        "cd-example",
        "bounded saturation of the product congruence on two-variable 0/1 polynomials, "
        "then a membership query for (x^2n + y^2n, x^n y^n)");
    cd_cmd->add_option("--n", cd_n, "exponent parameter")->required()->check(CLI::PositiveNumber);
    cd_cmd->add_option("--degree", cd_degree, "total-degree bound for the saturation")
        ->required()
        ->check(CLI::PositiveNumber);
    cd_cmd->callback([&] {
        auto frag = idem::cd_product_fragment(cd_degree);
        auto x = idem::bp_monomial({1, 0});
        auto y = idem::bp_monomial({0, 1});
        auto first = idem::bp_add(idem::bp_pow(x, 2 * cd_n), idem::bp_pow(y, 2 * cd_n));
        auto second = idem::bp_mul(idem::bp_pow(x, cd_n), idem::bp_pow(y, cd_n));
        auto verdict = idem::fragment_member(frag.product, first, second, &frag.base);

        json pair;
        pair["first"] = idem::bp_to_string(first);
        pair["second"] = idem::bp_to_string(second);
        result.payload["pair"] = pair;
        json fragment_info;
        fragment_info["degree_bound"] = cd_degree;
        fragment_info["pairs"] = static_cast<int>(frag.product.pairs.size());
        fragment_info["truncated"] = frag.base.truncated || frag.product.truncated;
        result.payload["fragment"] = fragment_info;

        if (verdict.verdict == idem::membership::proven) {
            result.payload["membership"] = "proven";
            result.payload["derivation"] = verdict.derivation;
        } else {
            result.status = "inconclusive";
            result.payload["membership"] = "inconclusive";
            result.diagnostics.push_back(
                "the bounded saturation did not reach the pair; a larger --degree may, "
                "and absence at this bound proves nothing");
        }
    });

    // --- homeo ----------------------------------------------------------------------
    std::string homeo_first, homeo_second;
    auto* homeo_cmd =
        app.add_subcommand("homeo", "decide whether two space documents are homeomorphic");
    homeo_cmd->add_option("first", homeo_first, "space document")->required();
    homeo_cmd->add_option("second", homeo_second, "space document")->required();
    homeo_cmd->callback([&] {
        auto a = load_space(homeo_first);
        auto b = load_space(homeo_second);
        auto m = idem::find_homeomorphism(a, b);
        result.payload["homeomorphic"] = m.has_value();
        if (m) {
            json map;
            for (int i = 0; i < a.size(); ++i) map[a.point_names[i]] = b.point_names[(*m)[i]];
            result.payload["map"] = map;
        }
    });

    try {
        app.parse(argc, argv);

        // Spectrum and quotient commands share their option plumbing; the
        // callbacks only record which one fired.
        if (!spectrum_chosen.empty()) {
            auto s = load_semiring(spectrum_path);
            idem::finite_space space;
            if (spectrum_chosen == "speck") {
                space = idem::spec_k(s);
            } else if (spectrum_chosen == "specc") {
                space = idem::spec_c(s);
            } else if (spectrum_chosen == "zar") {
                space = idem::zariski_space(s);
            } else {
                space = idem::spv_topology(s);
                json vals = json::array();
                for (const auto& v : idem::spv(s)) vals.push_back(idem::valuation_to_doc(v));
                result.payload["valuations"] = vals;
            }
            result.payload["space"] = idem::space_to_doc(space);
            result.payload["points"] = static_cast<int>(space.size());
            note(result, "derived space has " + std::to_string(space.opens.size()) +
                             " open sets");
            if (!spectrum_dot.empty()) write_file(spectrum_dot, idem::space_to_dot(space));
        }
        if (!quot_chosen.empty()) {
            auto s = load_semiring(quot_path);
            auto qr = quot_chosen == "idealize" ? idem::idealization(s)
                                                : idem::radicalization(s);
            result.payload["semiring"] = idem::semiring_to_doc(qr.semiring);
            json map;
            for (int i = 0; i < s.size(); ++i)
                map[s.names[i]] = qr.semiring.names[qr.block_of[i]];
            result.payload["map"] = map;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        result.status = "validation-failure";
        result.diagnostics.push_back(std::string("command line: ") + e.what());
        return emit(result);
    } catch (const idem::parse_error& e) {
        result.status = "validation-failure";
        result.diagnostics.push_back(std::string("input document: ") + e.what());
        return emit(result);
    } catch (const idem::validation_error& e) {
        result.status = "validation-failure";
        result.diagnostics.push_back(std::string("validation: ") + e.what());
        return emit(result);
    } catch (const idem::capability_error& e) {
        result.status = "validation-failure";
        result.diagnostics.push_back(std::string("unsupported input: ") + e.what());
        return emit(result);
    } catch (const std::exception& e) {
        result.status = "validation-failure";
        result.diagnostics.push_back(e.what());
        return emit(result);
    }

    return emit(result);
}
