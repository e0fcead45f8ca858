#include "msd/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace msd {

using nlohmann::json;

TwoLevelGraph parse_two_level_graph(const std::string& text) {
    json j = json::parse(text);
    TwoLevelGraph g;
    for (const auto& v : j.at("top")) {
        VertexData vd;
        vd.genus = v.at("genus").get<long long>();
        if (v.contains("legs"))
            for (const auto& l : v["legs"]) vd.legs.push_back(l.get<int>());
        g.top.push_back(vd);
    }
    for (const auto& v : j.at("bottom")) {
        VertexData vd;
        vd.genus = v.at("genus").get<long long>();
        if (v.contains("legs"))
            for (const auto& l : v["legs"]) vd.legs.push_back(l.get<int>());
        g.bottom.push_back(vd);
    }
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e.at("top").get<int>(), e.at("bot").get<int>(),
                           e.at("prong").get<long long>()});
    return g;
}

MultiLevelGraph parse_multi_level_graph(const std::string& text) {
    json j = json::parse(text);
    MultiLevelGraph g;
    if (j.contains("vertices")) {
        for (const auto& v : j["vertices"]) {
            MLVertex vd;
            vd.level = v.at("level").get<int>();
            vd.genus = v.at("genus").get<long long>();
            if (v.contains("legs"))
                for (const auto& l : v["legs"]) vd.legs.push_back(l.get<int>());
            g.vertices.push_back(vd);
        }
        for (const auto& e : j.at("edges"))
            g.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                               e.at("prong").get<long long>()});
        return g;
    }
    // two-level format: top vertices first, then bottom at level -1
    TwoLevelGraph two = parse_two_level_graph(text);
    for (const auto& v : two.top) g.vertices.push_back({0, v.genus, v.legs});
    int off = static_cast<int>(two.top.size());
    for (const auto& v : two.bottom) g.vertices.push_back({-1, v.genus, v.legs});
    for (const auto& e : two.edges) g.edges.push_back({e.top, off + e.bot, e.prong});
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

TwoLevelGraph parse_graph_file_as_two_level(const std::string& path) {
    std::string text = read_file(path);
    json j = json::parse(text);
    if (j.contains("top")) return parse_two_level_graph(text);
    MultiLevelGraph g = parse_multi_level_graph(text);
    if (g.depth() != 1)
        throw std::runtime_error("graph in '" + path + "' is not two-level");
    TwoLevelGraph two;
    std::vector<int> map(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        VertexData vd{g.vertices[v].genus, g.vertices[v].legs};
        if (g.vertices[v].level == 0) {
            map[v] = static_cast<int>(two.top.size());
            two.top.push_back(vd);
        } else {
            map[v] = static_cast<int>(two.bottom.size());
            two.bottom.push_back(vd);
        }
    }
    for (const auto& e : g.edges) two.edges.push_back({map[e.upper], map[e.lower], e.prong});
    return two;
}

MultiLevelGraph parse_graph_file_as_multi_level(const std::string& path) {
    return parse_multi_level_graph(read_file(path));
}

}  // namespace msd
