#pragma once

// JSON documents for every value the command-line tool reads or writes.
// to_doc(x) emits; from_doc<T>(j) parses and validates, so that
// from_doc<T>(to_doc(x)) == x for every emitted x.

#include <cycov/cover_algebra.hpp>
#include <cycov/sing_stable.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace cycov {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ConstraintViolation("document", path + " is not an object");
    auto it = j.find(key);
    if (it == j.end()) throw ConstraintViolation("document", "missing field '" + key + "' at " + path);
    return *it;
}

template <typename T>
T get(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw ConstraintViolation("document", "field '" + key + "' at " + path + " has the wrong type");
    }
}

inline const json& array_field(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_array()) throw ConstraintViolation("document", "field '" + key + "' at " + path + " is not an array");
    return v;
}

} // namespace detail

template <typename T>
T from_doc(const json& j);

// ---- branching ----

inline json to_doc(const BranchingSequence& s) { return {{"d", s.order()}, {"counts", s.counts()}}; }

template <>
inline BranchingSequence from_doc<BranchingSequence>(const json& j) {
    return {detail::get<int>(j, "d", "sequence"), detail::get<std::vector<int>>(j, "counts", "sequence")};
}

inline json to_doc(const SmoothLocus& l) {
    return {{"name", l.name()}, {"g", l.g},   {"d", l.d},     {"datum", l.datum.sequence().counts()},
            {"h", l.h},         {"k", l.k},   {"dim", l.dim}, {"codim", l.codim}};
}

template <>
inline SmoothLocus from_doc<SmoothLocus>(const json& j) {
    const int g = detail::get<int>(j, "g", "locus");
    BranchingSequence seq(detail::get<int>(j, "d", "locus"), detail::get<std::vector<int>>(j, "datum", "locus"));
    auto l = locus(g, seq);
    if (l.h != detail::get<int>(j, "h", "locus") || l.dim != detail::get<int>(j, "dim", "locus") ||
        l.codim != detail::get<int>(j, "codim", "locus"))
        throw ConstraintViolation("document", "locus " + l.name() + " has inconsistent derived fields");
    return l;
}

// ---- sing_smooth ----

namespace detail {

template <typename E>
E enum_from(const std::string& s, std::initializer_list<E> all, const std::string& what) {
    for (E e : all)
        if (to_string(e) == s) return e;
    throw ConstraintViolation("document", "unknown " + what + " '" + s + "'");
}

} // namespace detail

inline json to_doc(const ContainerLocus& c) {
    return {{"name", c.name()}, {"g", c.g}, {"q", c.q}, {"locus", c.locus ? to_doc(*c.locus) : json(nullptr)},
            {"dim", c.dim},     {"exact", c.exact}, {"may_be_excluded", c.may_be_excluded}};
}

template <>
inline ContainerLocus from_doc<ContainerLocus>(const json& j) {
    ContainerLocus c{detail::get<int>(j, "g", "container"), detail::get<int>(j, "q", "container"), std::nullopt,
                     detail::get<int>(j, "dim", "container"), detail::get<bool>(j, "exact", "container"),
                     detail::get<bool>(j, "may_be_excluded", "container")};
    if (const auto& l = detail::field(j, "locus", "container"); !l.is_null()) c.locus = from_doc<SmoothLocus>(l);
    return c;
}

inline json to_doc(const ClassificationRecord& r) {
    return {{"locus", to_doc(r.locus)},
            {"verdict", to_string(r.verdict)},
            {"case", r.case_tag ? json(to_string(*r.case_tag)) : json(nullptr)},
            {"normalizer_shape", r.normalizer_shape ? json(to_string(*r.normalizer_shape)) : json(nullptr)},
            {"container", r.container ? to_doc(*r.container) : json(nullptr)},
            {"note", r.note}};
}

template <>
inline ClassificationRecord from_doc<ClassificationRecord>(const json& j) {
    using V = Verdict;
    using C = CaseTag;
    using S = NormalizerShape;
    ClassificationRecord r{from_doc<SmoothLocus>(detail::field(j, "locus", "record")),
                           detail::enum_from(detail::get<std::string>(j, "verdict", "record"),
                                             {V::Component, V::Redundant, V::ExcludedPseudoreflection, V::ManualReview},
                                             "verdict"),
                           std::nullopt, std::nullopt, std::nullopt, detail::get<std::string>(j, "note", "record")};
    if (const auto& c = detail::field(j, "case", "record"); !c.is_null())
        r.case_tag = detail::enum_from(c.get<std::string>(), {C::Case1, C::Case2, C::Case3, C::Case4_Z2, C::Case4_Z3},
                                       "case");
    if (const auto& s = detail::field(j, "normalizer_shape", "record"); !s.is_null())
        r.normalizer_shape = detail::enum_from(
            s.get<std::string>(), {S::Dihedral, S::DihedralTimesZ2, S::Cyclic2p, S::Klein4, S::Cyclic3Extension}, "shape");
    if (const auto& c = detail::field(j, "container", "record"); !c.is_null()) r.container = from_doc<ContainerLocus>(c);
    return r;
}

namespace detail {

template <typename T>
json docs(const std::vector<T>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_doc(x));
    return a;
}

template <typename T>
std::vector<T> parse_all(const json& j, const std::string& key, const std::string& path) {
    std::vector<T> out;
    for (const auto& x : array_field(j, key, path)) out.push_back(from_doc<T>(x));
    return out;
}

} // namespace detail

inline json to_doc(const SmoothDecomposition& s) {
    return {{"g", s.g},
            {"components", detail::docs(s.components)},
            {"redundant", detail::docs(s.redundant)},
            {"excluded", detail::docs(s.excluded)},
            {"manual_review", detail::docs(s.manual_review)}};
}

template <>
inline SmoothDecomposition from_doc<SmoothDecomposition>(const json& j) {
    return {detail::get<int>(j, "g", "interior"),
            detail::parse_all<ClassificationRecord>(j, "components", "interior"),
            detail::parse_all<ClassificationRecord>(j, "redundant", "interior"),
            detail::parse_all<ClassificationRecord>(j, "excluded", "interior"),
            detail::parse_all<ClassificationRecord>(j, "manual_review", "interior")};
}

// ---- graphs ----

inline json to_doc(const Graph& g) {
    json vs = json::array();
    for (const auto& v : g.vertices) {
        json jv{{"id", v.id}, {"colour", to_string(v.colour)}, {"genus", v.genus}};
        if (v.colour == Colour::I1) jv["free_branching"] = v.free_branching;
        vs.push_back(std::move(jv));
    }
    json es = json::array();
    for (const auto& l : g.links) es.push_back({{"kind", "link"}, {"u", l.u}, {"v", l.v}, {"labels", {l.label_u, l.label_v}}});
    for (const auto& l : g.loops) {
        if (l.branch_swapped) es.push_back({{"kind", "loop"}, {"v", l.v}, {"branch_swapped", true}});
        else es.push_back({{"kind", "loop"}, {"v", l.v}, {"pair", {l.n1, l.n2}}});
    }
    return {{"d", g.d}, {"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

/// Structural parse only; callers wrap the result in PreGraph or AutoGraph for validation.
template <>
inline Graph from_doc<Graph>(const json& j) {
    Graph g{detail::get<int>(j, "d", "graph"), {}, {}, {}};
    if (g.d < 2) throw ConstraintViolation("prime-order", "order " + std::to_string(g.d) + " is not prime");
    const auto& vs = detail::array_field(j, "vertices", "graph");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto path = "/vertices/" + std::to_string(i);
        const auto colour = detail::get<std::string>(vs[i], "colour", path);
        if (colour != "I0" && colour != "I1")
            throw ConstraintViolation("document", "colour at " + path + " must be I0 or I1");
        Vertex v{detail::get<int>(vs[i], "id", path), colour == "I0" ? Colour::I0 : Colour::I1,
                 detail::get<int>(vs[i], "genus", path), std::vector<int>(g.d - 1, 0)};
        if (vs[i].contains("free_branching")) v.free_branching = detail::get<std::vector<int>>(vs[i], "free_branching", path);
        g.vertices.push_back(std::move(v));
    }
    const auto& es = detail::array_field(j, "edges", "graph");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto path = "/edges/" + std::to_string(i);
        const auto kind = detail::get<std::string>(es[i], "kind", path);
        if (kind == "link") {
            const auto labels = detail::get<std::vector<int>>(es[i], "labels", path);
            if (labels.size() != 2) throw ConstraintViolation("document", "labels at " + path + " must have two entries");
            g.links.push_back({detail::get<int>(es[i], "u", path), detail::get<int>(es[i], "v", path), labels[0], labels[1]});
        } else if (kind == "loop") {
            const int v = detail::get<int>(es[i], "v", path);
            if (es[i].value("branch_swapped", false)) {
                g.loops.push_back({v, 0, 0, true});
                continue;
            }
            const auto pair = detail::get<std::vector<int>>(es[i], "pair", path);
            if (pair.size() != 2) throw ConstraintViolation("document", "pair at " + path + " must have two entries");
            g.loops.push_back({v, pair[0], pair[1], false});
        } else {
            throw ConstraintViolation("document", "edge kind at " + path + " must be link or loop");
        }
    }
    return normalized(std::move(g));
}

inline json to_doc(const AutoGraph& a) { return to_doc(a.graph()); }

template <>
inline AutoGraph from_doc<AutoGraph>(const json& j) {
    return AutoGraph(from_doc<Graph>(j));
}

template <>
inline PreGraph from_doc<PreGraph>(const json& j) {
    return PreGraph(from_doc<Graph>(j));
}

// ---- sing_stable ----

inline json to_doc(const BoundaryComponent& c) {
    return {{"d", c.d},         {"dim", c.dim},   {"codim", c.codim},
            {"flags", c.flags()}, {"type", to_text(c.graph.graph())}, {"graph", to_doc(c.graph)}};
}

template <>
inline BoundaryComponent from_doc<BoundaryComponent>(const json& j) {
    BoundaryComponent c{from_doc<AutoGraph>(detail::field(j, "graph", "boundary")), detail::get<int>(j, "d", "boundary"),
                        detail::get<int>(j, "dim", "boundary"), detail::get<int>(j, "codim", "boundary")};
    for (const auto& f : detail::get<std::vector<std::string>>(j, "flags", "boundary")) {
        if (f == "manual_review") c.manual_review = true;
        else if (f == "rigid_I1_cover") c.rigid_i1_cover = true;
        else throw ConstraintViolation("document", "unknown flag '" + f + "'");
    }
    return c;
}

inline json to_doc(const AutBoundReport& r) {
    return {{"g", r.g},
            {"generic_lower", r.generic_lower.str()},
            {"special_config", r.special_config.str()},
            {"hurwitz_smooth", r.hurwitz_smooth.str()},
            {"tail_orders", r.tail_orders},
            {"special_exceeds_hurwitz", r.special_exceeds_hurwitz}};
}

template <>
inline AutBoundReport from_doc<AutBoundReport>(const json& j) {
    using boost::multiprecision::cpp_int;
    auto big = [&](const char* key) { return cpp_int(detail::get<std::string>(j, key, "bounds")); };
    return {detail::get<int>(j, "g", "bounds"), big("generic_lower"), big("special_config"), big("hurwitz_smooth"),
            detail::get<std::vector<int>>(j, "tail_orders", "bounds"),
            detail::get<bool>(j, "special_exceeds_hurwitz", "bounds")};
}

inline json to_doc(const DecompositionReport& r) {
    return {{"g", r.g},
            {"d_max", r.d_max},
            {"interior", to_doc(r.interior)},
            {"boundary", detail::docs(r.boundary)},
            {"warnings", r.warnings}};
}

template <>
inline DecompositionReport from_doc<DecompositionReport>(const json& j) {
    return {detail::get<int>(j, "g", "report"), detail::get<int>(j, "d_max", "report"),
            from_doc<SmoothDecomposition>(detail::field(j, "interior", "report")),
            detail::parse_all<BoundaryComponent>(j, "boundary", "report"),
            detail::get<std::vector<std::string>>(j, "warnings", "report")};
}

// ---- cover_algebra ----

inline json to_doc(const DivisorClass& c) { return {{"free", c.free_part}, {"torsion", c.torsion_part}}; }

inline DivisorClass class_from_doc(const PicardModel& pic, const json& j, const std::string& path) {
    return pic.element(detail::get<std::vector<std::int64_t>>(j, "free", path),
                       detail::get<std::vector<std::int64_t>>(j, "torsion", path));
}

inline json to_doc(const BranchAssignment& b) {
    json ds = json::object();
    for (const auto& [i, ps] : b.divisors) {
        json a = json::array();
        for (const auto& p : ps) a.push_back({{"symbol", p.symbol}, {"class", to_doc(p.cls)}});
        ds[std::to_string(i)] = std::move(a);
    }
    return {{"d", b.d},
            {"picard", {{"free_rank", b.picard.free_rank()}, {"torsion", b.picard.torsion_factors()}}},
            {"divisors", std::move(ds)},
            {"L", to_doc(b.L)}};
}

template <>
inline BranchAssignment from_doc<BranchAssignment>(const json& j) {
    const auto& pj = detail::field(j, "picard", "assignment");
    PicardModel pic(detail::get<int>(pj, "free_rank", "/picard"),
                    detail::get<std::vector<std::int64_t>>(pj, "torsion", "/picard"));
    BranchAssignment b{detail::get<int>(j, "d", "assignment"), pic, {},
                       class_from_doc(pic, detail::field(j, "L", "assignment"), "/L")};
    const auto& ds = detail::field(j, "divisors", "assignment");
    if (!ds.is_object()) throw ConstraintViolation("document", "divisors must map residues to lists");
    for (const auto& [key, list] : ds.items()) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ConstraintViolation("document", "divisor key '" + key + "' is not a residue");
        }
        if (!list.is_array()) throw ConstraintViolation("document", "/divisors/" + key + " is not an array");
        auto& out = b.divisors[i];
        for (std::size_t n = 0; n < list.size(); ++n) {
            const auto path = "/divisors/" + key + "/" + std::to_string(n);
            out.push_back({detail::get<std::string>(list[n], "symbol", path),
                           class_from_doc(pic, detail::field(list[n], "class", path), path)});
        }
    }
    return b;
}

} // namespace cycov
