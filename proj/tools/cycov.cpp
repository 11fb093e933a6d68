// cycov: command-line front end for the cyclic-cover classification library.
//
// Exit codes: 0 success (also for empty results), 1 usage error,
// 2 input data violating a constraint.

#include <cycov/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using cycov::json;

struct Options {
    int genus = 0;
    int order = 0;
    int dmax = 0;
    int vertex = -1;
    std::string format = "table";
    std::string input;
    std::string type = "max";
    std::vector<int> counts;
};

json read_document(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw cycov::UsageError("cannot open input file '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw cycov::ConstraintViolation("parse", "malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

void require_genus(int g, int min = 2) {
    if (g < min) throw cycov::UsageError("--genus must be >= " + std::to_string(min) + ", got " + std::to_string(g));
}

void require_order(int d) {
    if (d < 2) throw cycov::UsageError("--order must be >= 2, got " + std::to_string(d));
}

void emit(const Options& o, const std::string& command, const json& result, const std::string& table) {
    if (o.format == "json") {
        json doc{{"command", command}, {"result", result}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << table;
    }
}

std::string row(const std::vector<std::pair<std::string, int>>& cells) {
    std::ostringstream s;
    for (const auto& [text, width] : cells) s << std::left << std::setw(width) << text << ' ';
    std::string out = s.str();
    out.erase(out.find_last_not_of(' ') + 1);
    return out + "\n";
}

std::string loci_table(const std::vector<cycov::SmoothLocus>& ls) {
    std::string t = row({{"datum", 24}, {"h", 4}, {"k", 4}, {"dim", 5}, {"codim", 5}});
    for (const auto& l : ls)
        t += row({{l.datum.to_string(), 24}, {std::to_string(l.h), 4}, {std::to_string(l.k), 4},
                  {std::to_string(l.dim), 5}, {std::to_string(l.codim), 5}});
    return t;
}

std::string records_table(const std::string& title, const std::vector<cycov::ClassificationRecord>& rs) {
    std::string t = title + " (" + std::to_string(rs.size()) + ")\n";
    for (const auto& r : rs) {
        t += "  " + r.locus.name() + "  dim " + std::to_string(r.locus.dim);
        if (r.case_tag) t += "  " + cycov::to_string(*r.case_tag);
        if (!r.note.empty()) t += "  -- " + r.note;
        t += "\n";
    }
    return t;
}

std::string decomposition_table(const cycov::SmoothDecomposition& s) {
    return "genus " + std::to_string(s.g) + "\n" + records_table("components", s.components) +
           records_table("redundant", s.redundant) + records_table("excluded", s.excluded) +
           records_table("manual review", s.manual_review);
}

std::string boundary_table(const std::vector<cycov::BoundaryComponent>& bs) {
    std::string t = "boundary components (" + std::to_string(bs.size()) + ")\n";
    for (const auto& b : bs) {
        t += "  dim " + std::to_string(b.dim) + " codim " + std::to_string(b.codim) + "  " + cycov::to_text(b.graph.graph());
        for (const auto& f : b.flags()) t += "  [" + f + "]";
        t += "\n";
    }
    return t;
}

json boundary_doc(int g, int dmax, const std::vector<cycov::BoundaryComponent>& bs, const std::vector<std::string>& notes) {
    return {{"g", g}, {"d_max", dmax}, {"components", cycov::detail::docs(bs)}, {"notices", notes}};
}

int cmd_admissible(const Options& o) {
    require_genus(o.genus);
    require_order(o.order);
    std::vector<cycov::SmoothLocus> ls;
    for (const auto& a : cycov::enumerate_admissible(o.genus, o.order)) ls.push_back(cycov::locus(o.genus, a.datum));
    emit(o, "admissible", cycov::detail::docs(ls), loci_table(ls));
    return 0;
}

int cmd_locus(const Options& o) {
    require_genus(o.genus);
    require_order(o.order);
    auto l = cycov::locus(o.genus, cycov::BranchingSequence(o.order, o.counts));
    json j{{"locus", cycov::to_doc(l)}, {"maximal_cyclic_exception", cycov::to_string(cycov::maximal_cyclic_exception(l.h, l.k))},
           {"classification", nullptr}};
    std::string t = loci_table({l});
    if (cycov::is_prime(l.d) && l.g >= 3) {
        auto rec = cycov::classify(l);
        j["classification"] = cycov::to_doc(rec);
        t += "verdict " + cycov::to_string(rec.verdict) + (rec.note.empty() ? "" : "  -- " + rec.note) + "\n";
    }
    emit(o, "locus", j, t);
    return 0;
}

int cmd_sing(const Options& o) {
    require_genus(o.genus);
    auto s = cycov::decompose_sing(o.genus);
    emit(o, "sing", cycov::to_doc(s), decomposition_table(s));
    return 0;
}

int cmd_graphs(const Options& o) {
    require_genus(o.genus);
    require_order(o.order);
    json a = json::array();
    std::string t;
    for (const auto& g : cycov::enumerate_graphs(o.genus, o.order)) {
        const int dim = cycov::stratum_dimension(g);
        a.push_back({{"dim", dim}, {"type", cycov::to_text(g.graph())}, {"graph", cycov::to_doc(g)}});
        t += "dim " + std::to_string(dim) + "  " + cycov::to_text(g.graph()) + "\n";
    }
    emit(o, "graphs", a, "graphs (" + std::to_string(a.size()) + ")\n" + t);
    return 0;
}

int cmd_simplify(const Options& o) {
    if (o.input.empty()) throw cycov::UsageError("simplify needs --input");
    auto pre = cycov::from_doc<cycov::PreGraph>(read_document(o.input));
    auto res = cycov::simplify(pre);
    auto canon = cycov::canonical_graph(res.graph.graph());
    json j{{"type", canon.text}, {"trace", res.trace}, {"graph", cycov::to_doc(canon.graph)}};
    std::string t;
    for (const auto& s : res.trace) t += s + "\n";
    emit(o, "simplify", j, t + "result " + canon.text + "\n");
    return 0;
}

int cmd_enlarge(const Options& o) {
    if (o.input.empty()) throw cycov::UsageError("enlarge needs --input");
    if (o.vertex < 0) throw cycov::UsageError("enlarge needs --vertex");
    auto a = cycov::from_doc<cycov::AutoGraph>(read_document(o.input));
    cycov::AutoGraph out = o.type == "1"   ? cycov::enlarge_type1(a, o.vertex)
                           : o.type == "2" ? cycov::enlarge_type2(a, o.vertex)
                                           : cycov::enlarge_max(a, o.vertex);
    auto canon = cycov::canonical_graph(out.graph());
    const int before = cycov::stratum_dimension(a), after = cycov::stratum_dimension(out);
    json j{{"type", canon.text}, {"dim_before", before}, {"dim_after", after}, {"graph", cycov::to_doc(canon.graph)}};
    emit(o, "enlarge", j,
         "result " + canon.text + "\ndimension " + std::to_string(before) + " -> " + std::to_string(after) + "\n");
    return 0;
}

int cmd_boundary(const Options& o) {
    require_genus(o.genus);
    std::vector<std::string> notes;
    auto bs = cycov::boundary_components(o.genus, o.dmax, &notes);
    std::string t;
    for (const auto& n : notes) t += "note: " + n + "\n";
    emit(o, "boundary", boundary_doc(o.genus, cycov::capped_order_bound(o.genus, o.dmax), bs, notes), t + boundary_table(bs));
    return 0;
}

int cmd_sing_bar(const Options& o) {
    require_genus(o.genus);
    auto r = cycov::decompose_sing_bar(o.genus, o.dmax);
    std::string t = decomposition_table(r.interior) + boundary_table(r.boundary);
    t += "warnings (" + std::to_string(r.warnings.size()) + ")\n";
    for (const auto& w : r.warnings) t += "  " + w + "\n";
    emit(o, "sing-bar", cycov::to_doc(r), t);
    return 0;
}

int cmd_bounds(const Options& o) {
    require_genus(o.genus);
    auto r = cycov::aut_bounds(o.genus);
    emit(o, "bounds", cycov::to_doc(r),
         "2^g          " + r.generic_lower.str() + "\n2g*6^g       " + r.special_config.str() + "\n84(g-1)      " +
             r.hurwitz_smooth.str() + "\nexceeds      " + (r.special_exceeds_hurwitz ? "yes" : "no") + "\n");
    return 0;
}

int cmd_cover_check(const Options& o) {
    if (o.input.empty()) throw cycov::UsageError("cover check needs --input");
    auto ba = cycov::from_doc<cycov::BranchAssignment>(read_document(o.input));
    cycov::require_valid(ba);
    auto w = cycov::is_irreducible(ba);
    json lchi = json::array();
    for (int chi = 0; chi < ba.d; ++chi) lchi.push_back(cycov::to_doc(cycov::l_chi(ba, chi)));
    json j{{"assignment", cycov::to_doc(ba)},
           {"irreducible", w.irreducible},
           {"m", w.m},
           {"etale_class", cycov::to_doc(w.etale_class)},
           {"etale_class_order", w.order ? json(*w.order) : json(nullptr)},
           {"l_chi", lchi}};
    std::string t = std::string(w.irreducible ? "irreducible" : "reducible") + "  m=" + std::to_string(w.m) +
                    "  order(L')=" + (w.order ? std::to_string(*w.order) : std::string("infinite")) + "\n";
    emit(o, "cover check", j, t);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of cyclic covers of curves and of the singular locus of M_g"};
    app.require_subcommand(1);
    Options o;

    auto format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };
    auto genus = [&](CLI::App* c) { c->add_option("--genus", o.genus, "covering genus g")->required(); };
    auto order = [&](CLI::App* c) { c->add_option("--order", o.order, "cover order d")->required(); };
    auto dmax = [&](CLI::App* c) { c->add_option("--dmax", o.dmax, "largest prime order considered")->required(); };
    auto input = [&](CLI::App* c) { c->add_option("--input", o.input, "input document, '-' for stdin")->required(); };

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
    auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        auto* c = app.add_subcommand(name, help);
        format(c);
        commands.push_back({c, fn});
        return c;
    };

    auto* c_adm = add("admissible", "admissible branching data for (g, d)", cmd_admissible);
    genus(c_adm);
    order(c_adm);
    auto* c_locus = add("locus", "dimension and classification of one locus", cmd_locus);
    genus(c_locus);
    order(c_locus);
    c_locus->add_option("--counts", o.counts, "branching counts k_1 .. k_{d-1}")->required()->delimiter(',');
    genus(add("sing", "irreducible components of Sing(M_g)", cmd_sing));
    auto* c_graphs = add("graphs", "admissible automorphism graphs of genus g and order d", cmd_graphs);
    genus(c_graphs);
    order(c_graphs);
    input(add("simplify", "smooth all smoothable nodes of a graph document", cmd_simplify));
    auto* c_enl = add("enlarge", "enlargement of an automorphism graph at an I1 vertex", cmd_enlarge);
    input(c_enl);
    c_enl->add_option("--vertex", o.vertex, "I1 vertex id")->required();
    c_enl->add_option("--type", o.type, "1, 2 or max")->check(CLI::IsMember({"1", "2", "max"}));
    auto* c_bd = add("boundary", "boundary components of Sing(Mbar_g)", cmd_boundary);
    genus(c_bd);
    dmax(c_bd);
    auto* c_sb = add("sing-bar", "decomposition of Sing(Mbar_g)", cmd_sing_bar);
    genus(c_sb);
    dmax(c_sb);
    genus(add("bounds", "automorphism group cardinality bounds", cmd_bounds));
    auto* c_cover = app.add_subcommand("cover", "cyclic cover algebra");
    c_cover->require_subcommand(1);
    auto* c_check = c_cover->add_subcommand("check", "validate a branch assignment and test irreducibility");
    format(c_check);
    input(c_check);
    commands.push_back({c_check, cmd_cover_check});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        for (const auto& [c, fn] : commands)
            if (c->parsed()) return fn(o);
    } catch (const cycov::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const cycov::ConstraintViolation& e) {
        for (const auto& v : e.violations()) std::cerr << "constraint violated [" << v.clause << "]: " << v.message << "\n";
        return 2;
    }
    return 1;
}
