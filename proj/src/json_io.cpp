#include "ramsey/json_io.hpp"

#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

Json edge_pairs(const Graph& g, const Coloring& c, Color color) {
    Json arr = Json::array();
    for (size_t e = 0; e < g.edges().size(); ++e)
        if (c.at((int)e) == color) {
            auto [u, v] = g.edges()[e];
            arr.push_back(Json::array({u, v}));
        }
    return arr;
}

void apply_edges(const Graph& g, Coloring& c, const Json& arr, Color color) {
    for (const auto& pair : arr) {
        int u = pair.at(0).get<int>(), v = pair.at(1).get<int>();
        int e = g.edge_index(u, v);
        if (e < 0)
            throw std::invalid_argument("coloring: edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not in graph");
        c.set(e, color);
    }
}

}  // namespace

Json witness_to_json(const Graph& g, const WitnessColoring& w) {
    Json j;
    j["graph6"] = graph6_encode(g);
    j["red_edges"] = edge_pairs(g, w.coloring, Color::Red);
    j["avoided"] = {{"red", w.avoided_red.to_string()}, {"blue", w.avoided_blue.to_string()}};
    j["provenance"] = w.provenance;
    if (!w.virtual_edges.empty()) {
        Json arr = Json::array();
        for (auto [u, v] : w.virtual_edges) arr.push_back(Json::array({u, v}));
        j["virtual_edges"] = arr;
    }
    return j;
}

WitnessColoring witness_from_json(const Graph& g, const Json& j) {
    WitnessColoring w;
    w.coloring = Coloring(g);
    for (size_t e = 0; e < g.edges().size(); ++e) w.coloring.set((int)e, Color::Blue);
    apply_edges(g, w.coloring, j.at("red_edges"), Color::Red);
    w.avoided_red = TargetPattern::parse(j.at("avoided").at("red").get<std::string>());
    w.avoided_blue = TargetPattern::parse(j.at("avoided").at("blue").get<std::string>());
    w.provenance = j.value("provenance", "");
    if (j.contains("virtual_edges"))
        for (const auto& pair : j["virtual_edges"])
            w.virtual_edges.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    return w;
}

Json coloring_to_json(const Graph& g, const Coloring& c) {
    Json j;
    j["red_edges"] = edge_pairs(g, c, Color::Red);
    j["blue_edges"] = edge_pairs(g, c, Color::Blue);
    return j;
}

Coloring coloring_from_json(const Graph& g, const Json& j) {
    Coloring c(g);
    if (j.contains("red_edges")) apply_edges(g, c, j["red_edges"], Color::Red);
    if (j.contains("blue_edges")) apply_edges(g, c, j["blue_edges"], Color::Blue);
    return c;
}

Json system_to_json(const NstSystem& sys) {
    Json j;
    j["n"] = sys.n;
    j["s"] = sys.s;
    j["t"] = sys.t;
    Json orders = Json::array();
    for (const auto& p : sys.paths) orders.push_back((int)p.size());
    j["path_orders"] = orders;
    j["graph6"] = graph6_encode(sys.graph);
    j["clique"] = sys.clique;
    j["paths"] = sys.paths;
    return j;
}

NstSystem system_from_json(const Json& j) {
    std::vector<int> orders;
    for (const auto& o : j.at("path_orders")) orders.push_back(o.get<int>());
    NstSystem sys = nst_system(j.at("n").get<int>(), j.at("s").get<int>(),
                               j.at("t").get<int>(), orders);
    if (j.contains("graph6") && j["graph6"].get<std::string>() != graph6_encode(sys.graph))
        throw std::invalid_argument("system: stored graph6 does not match the parameters");
    return sys;
}

Json report_to_json(const ConstructionReport& rep) {
    Json j;
    j["construction"] = rep.construction;
    j["vertices"] = rep.vertices;
    j["edges"] = rep.edges;
    j["bound"] = rep.bound;
    j["bound_name"] = rep.bound_name;
    j["strict"] = rep.strict;
    j["satisfied"] = rep.satisfied;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

Json bound_entry_to_json(const BoundTableEntry& e) {
    Json j;
    j["kind"] = e.kind;
    j["d"] = e.d;
    j["n"] = e.n;
    if (e.eta.num != 0) j["eta"] = e.eta.to_string();
    j["report"] = report_to_json(e.report);
    if (e.kind == "interval") {
        j["lower"] = e.lower;
        j["upper"] = e.upper;
    }
    return j;
}

Json extract_to_json(const ExtractOutcome& out) {
    Json j;
    switch (out.kind) {
        case ExtractOutcome::Kind::BlueCycle: j["kind"] = "blue_cycle"; break;
        case ExtractOutcome::Kind::RedCycle: j["kind"] = "red_cycle"; break;
        case ExtractOutcome::Kind::Absent: j["kind"] = "absent"; break;
    }
    j["cycle"] = out.cycle;
    if (!out.detail.empty()) j["detail"] = out.detail;
    return j;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string hex64(uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[value & 15];
        value >>= 4;
    }
    return s;
}

bool validate_schema(const Json& doc, const Json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("type")) {
        std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) || (t == "integer" && doc.is_number_integer()) ||
                  (t == "number" && doc.is_number()) || (t == "boolean" && doc.is_boolean());
        if (!ok) return fail("expected type " + t);
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema["enum"])
            if (v == doc) ok = true;
        if (!ok) return fail("value not in enum");
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!doc.contains(key.get<std::string>()))
                return fail("missing required key " + key.get<std::string>());
    if (schema.contains("properties") && doc.is_object()) {
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
            if (!doc.contains(it.key())) continue;
            std::string sub;
            if (!validate_schema(doc[it.key()], it.value(), &sub))
                return fail(it.key() + ": " + sub);
        }
    }
    if (schema.contains("items") && doc.is_array()) {
        for (const auto& item : doc) {
            std::string sub;
            if (!validate_schema(item, schema["items"], &sub)) return fail("item: " + sub);
        }
    }
    return true;
}

}  // namespace ramsey
