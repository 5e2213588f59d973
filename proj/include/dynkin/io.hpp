#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynkin/exchange_graph.hpp"
#include "dynkin/hn.hpp"
#include "dynkin/qseries.hpp"
#include "dynkin/stability.hpp"

namespace dynkin::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read error on " + path);
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write error on " + path);
}

inline json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + what + ": " + e.what());
    }
}

inline json to_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& [a, b] : q.arrows()) arrows.push_back({a, b});
    return {{"type", q.type().str()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
    try {
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        return build_quiver(TypeTag::parse(j.at("type").get<std::string>()), std::move(arrows));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad quiver JSON: ") + e.what());
    }
}

inline json to_json(const DerivedCategory& dc, const IndecObject& x) {
    return {{"root", dc.root(x)}, {"shift", x.shift}};
}

inline IndecObject object_from_json(const DerivedCategory& dc, const json& j) {
    try {
        const DimVec r = j.at("root").get<DimVec>();
        auto idx = dc.reps().find_root(r);
        if (!idx) throw std::invalid_argument("not a positive root: " + dim_str(r));
        return {*idx, j.at("shift").get<int>()};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad object JSON: ") + e.what());
    }
}

inline json to_json(const DerivedCategory& dc, const Heart& h) {
    json a = json::array();
    for (const auto& s : h.simples()) a.push_back(to_json(dc, s));
    return a;
}

inline Heart heart_from_json(const DerivedCategory& dc, const json& j) {
    std::vector<IndecObject> s;
    for (const auto& x : j) s.push_back(object_from_json(dc, x));
    return Heart(std::move(s));
}

inline json to_json(const DerivedCategory& dc, const HNStratum& s) {
    json a = json::array();
    for (const auto& x : s.labels) a.push_back(to_json(dc, x));
    return a;
}

inline HNStratum stratum_from_json(const DerivedCategory& dc, const json& j) {
    HNStratum s;
    for (const auto& x : j) s.labels.push_back(object_from_json(dc, x));
    return s;
}

/// {"S1": ["258", "9"], ...} with exact rational strings.
inline StabilityFunction charges_from_json(const json& j, int n) {
    std::vector<Charge> z(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (!j.is_object()) throw std::invalid_argument("charges JSON must be an object");
    for (const auto& [key, val] : j.items()) {
        if (key.size() < 2 || key[0] != 'S') throw std::invalid_argument("bad charge key '" + key + "'");
        int i = 0;
        try {
            i = std::stoi(key.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad charge key '" + key + "'");
        }
        if (i < 1 || i > n) throw std::invalid_argument("charge key '" + key + "' out of range");
        if (!val.is_array() || val.size() != 2 || !val[0].is_string() || !val[1].is_string())
            throw std::invalid_argument("charge '" + key + "' must be [re, im] strings");
        z[static_cast<std::size_t>(i - 1)] = {parse_rat(val[0].get<std::string>()), parse_rat(val[1].get<std::string>())};
        seen[static_cast<std::size_t>(i - 1)] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<std::size_t>(i)]) throw std::invalid_argument("missing charge S" + std::to_string(i + 1));
    return StabilityFunction(std::move(z));
}

inline json to_json(const StabilityFunction& f) {
    json j = json::object();
    for (std::size_t i = 0; i < f.z.size(); ++i)
        j["S" + std::to_string(i + 1)] = {to_string(f.z[i].re), to_string(f.z[i].im)};
    return j;
}

template <class C>
json to_json(const QSeries<C>& s) {
    json a = json::array();
    for (const auto& [e, c] : s.terms()) a.push_back({{"alpha", e}, {"coeff", c.str()}});
    return a;
}

/// Terms of a series JSON as exact rational functions.
inline std::map<DimVec, RatFun> series_terms_from_json(const json& j) {
    std::map<DimVec, RatFun> out;
    for (const auto& t : j) out[t.at("alpha").get<DimVec>()] = RatFun::parse(t.at("coeff").get<std::string>());
    return out;
}

inline const char* face_kind_str(FaceKind k) { return k == FaceKind::Square ? "square" : "pentagon"; }

inline json to_json(const DerivedCategory& dc, const ExchangeGraph& g) {
    json v = json::array(), e = json::array(), f = json::array();
    for (const auto& h : g.vertices()) v.push_back(to_json(dc, h));
    for (const auto& x : g.edges()) e.push_back({{"from", x.from}, {"to", x.to}, {"label", to_json(dc, x.label)}});
    for (const auto& x : g.faces()) f.push_back({{"kind", face_kind_str(x.kind)}, {"left", x.left}, {"right", x.right}});
    return {{"schema", "eg/1"},
            {"quiver", to_json(dc.quiver())},
            {"base", to_json(dc, g.base())},
            {"k", g.k()},
            {"vertices", v},
            {"edges", e},
            {"faces", f}};
}

/// Rebuilds the graph and re-checks every edge against the tilt calculus.
inline ExchangeGraph graph_from_json(const HeartCalculus& hc, const json& j) {
    const auto& dc = hc.category();
    try {
        if (j.at("schema") != "eg/1") throw std::invalid_argument("unsupported schema " + j.at("schema").dump());
        if (!(quiver_from_json(j.at("quiver")) == dc.quiver()))
            throw std::invalid_argument("graph JSON was written for a different quiver");
        std::vector<Heart> verts;
        for (const auto& h : j.at("vertices")) verts.push_back(heart_from_json(dc, h));
        std::vector<Edge> edges;
        for (const auto& x : j.at("edges")) {
            Edge ed{x.at("from").get<int>(), x.at("to").get<int>(), object_from_json(dc, x.at("label"))};
            if (ed.from < 0 || ed.to < 0 || ed.from >= static_cast<int>(verts.size()) || ed.to >= static_cast<int>(verts.size()))
                throw std::invalid_argument("edge endpoint out of range");
            if (!(hc.forward_tilt(verts[static_cast<std::size_t>(ed.from)], ed.label) == verts[static_cast<std::size_t>(ed.to)]))
                throw std::invalid_argument("edge is not a forward tilt");
            edges.push_back(ed);
        }
        ExchangeGraph g(std::move(verts), std::move(edges), heart_from_json(dc, j.at("base")), j.at("k").get<int>());
        std::vector<Face> faces;
        for (const auto& x : j.at("faces")) {
            const std::string kind = x.at("kind").get<std::string>();
            if (kind != "square" && kind != "pentagon") throw std::invalid_argument("unknown face kind " + kind);
            faces.push_back({kind == "square" ? FaceKind::Square : FaceKind::Pentagon, x.at("left").get<std::vector<int>>(),
                             x.at("right").get<std::vector<int>>()});
        }
        g.set_faces(std::move(faces));
        return g;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
    }
}

inline std::string to_dot(const DerivedCategory& dc, const ExchangeGraph& g) {
    std::ostringstream os;
    os << "digraph EG {\n";
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        std::string label;
        for (const auto& s : g.vertices()[v].simples()) label += (label.empty() ? "" : " ") + dc.name(s);
        os << "  h" << v << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : g.edges()) os << "  h" << e.from << " -> h" << e.to << " [label=\"" << dc.name(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace dynkin::io
