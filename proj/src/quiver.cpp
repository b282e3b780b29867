#include "qsing/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsing/errors.hpp"

namespace qsing {

void Quiver::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()),
                   vertices.end());
    std::sort(arrows.begin(), arrows.end());
}

bool Quiver::has_vertex(const std::string& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Quiver::out_degree(const std::string& v) const {
    int n = 0;
    for (const auto& a : arrows) n += a.src == v;
    return n;
}

int Quiver::in_degree(const std::string& v) const {
    int n = 0;
    for (const auto& a : arrows) n += a.dst == v;
    return n;
}

Quiver Quiver::opposite() const {
    Quiver q;
    q.name = name + "^op";
    q.group_spec = group_spec;
    q.vertices = vertices;
    for (const auto& a : arrows) q.arrows.push_back({a.dst, a.src, a.label});
    q.normalize();
    return q;
}

std::vector<std::vector<std::string>> Quiver::components() const {
    std::map<std::string, int> comp;
    int next = 0;
    for (const auto& v : vertices) comp[v] = next++;
    // union-find over arrow endpoints
    std::vector<int> parent(next);
    for (int i = 0; i < next; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : arrows) parent[find(comp[a.src])] = find(comp[a.dst]);
    std::map<int, std::vector<std::string>> groups;
    for (const auto& [v, i] : comp) groups[find(i)].push_back(v);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, vs] : groups) out.push_back(std::move(vs));
    return out;
}

std::string plain_vertex(const Character& chi) { return chi.str(); }

std::string folded_vertex(int p, const Character& chi) {
    return "(" + std::to_string(p) + "," + chi.str() + ")";
}

Quiver mckay_quiver(const WeightGroup& g) {
    Quiver q;
    q.name = "mckay";
    q.group_spec = g.spec_string();
    for (long i = 0; i < g.order; ++i)
        q.vertices.push_back(plain_vertex(g.char_of_index(i)));
    for (long i = 0; i < g.order; ++i) {
        Character chi = g.char_of_index(i);
        for (int j = 0; j < g.d; ++j) {
            Character to = g.add(chi, g.weights[j]);
            q.arrows.push_back({plain_vertex(chi), plain_vertex(to),
                                "x" + std::to_string(j + 1)});
        }
    }
    q.normalize();
    return q;
}

Quiver folded_quiver(const WeightGroup& g) {
    Quiver q;
    q.name = "folded";
    q.group_spec = g.spec_string();
    for (int p = 1; p <= g.d; ++p)
        for (long i = 0; i < g.order; ++i)
            q.vertices.push_back(folded_vertex(p, g.char_of_index(i)));
    for (int p = 1; p < g.d; ++p) {
        for (long i = 0; i < g.order; ++i) {
            Character chi = g.char_of_index(i);
            for (int j = 0; j < g.d; ++j) {
                Character to = g.add(chi, g.weights[j]);
                q.arrows.push_back({folded_vertex(p, chi),
                                    folded_vertex(p + 1, to),
                                    "x" + std::to_string(j + 1)});
            }
        }
    }
    q.normalize();
    return q;
}

Quiver stable_folded_quiver(const WeightGroup& g) {
    Quiver folded = folded_quiver(g);
    Quiver q;
    q.name = "stable_folded";
    q.group_spec = folded.group_spec;
    std::set<std::string> removed;
    for (int p = 1; p <= g.d; ++p)
        removed.insert(folded_vertex(p, g.zero_char()));
    for (const auto& v : folded.vertices)
        if (!removed.count(v)) q.vertices.push_back(v);
    for (const auto& a : folded.arrows)
        if (!removed.count(a.src) && !removed.count(a.dst))
            q.arrows.push_back(a);
    q.normalize();
    return q;
}

static std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string emit(const Quiver& q, const std::string& format) {
    if (format == "dot") {
        std::ostringstream os;
        os << "digraph \"" << dot_escape(q.name) << "\" {\n";
        for (const auto& v : q.vertices) os << "  \"" << dot_escape(v) << "\";\n";
        for (const auto& a : q.arrows)
            os << "  \"" << dot_escape(a.src) << "\" -> \"" << dot_escape(a.dst)
               << "\" [label=\"" << dot_escape(a.label) << "\"];\n";
        os << "}\n";
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["name"] = q.name;
        j["group"] = q.group_spec;
        j["vertices"] = q.vertices;
        j["arrows"] = nlohmann::json::array();
        for (const auto& a : q.arrows)
            j["arrows"].push_back(
                {{"src", a.src}, {"dst", a.dst}, {"label", a.label}});
        return j.dump(2) + "\n";
    }
    throw UnknownFormat("unknown quiver format '" + format + "'");
}

Quiver parse_quiver_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Quiver q;
    q.name = j.value("name", "");
    q.group_spec = j.value("group", "");
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v);
    for (const auto& a : j.at("arrows"))
        q.arrows.push_back({a.at("src"), a.at("dst"), a.at("label")});
    q.normalize();
    return q;
}

} // namespace qsing
