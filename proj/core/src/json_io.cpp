#include "mpx/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mpx {

std::string digraph_to_json(const Digraph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) j["edges"].push_back({e.source, e.target});
    return j.dump();
}

Digraph digraph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected keys \"n\" and \"edges\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge must be a pair");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Digraph::from_pairs(n, pairs);
}

Digraph digraph_from_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return digraph_from_json(buffer.str());
}

Digraph load_digraph(const std::string& path) {
    if (path == "-") return digraph_from_stream(std::cin);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open graph file: " + path);
    return digraph_from_stream(file);
}

}  // namespace mpx
