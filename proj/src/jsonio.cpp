#include "ksg/jsonio.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "ksg/sha256.hpp"

namespace ksg {

std::string canonical_dump(const json& j) { return j.dump(); }

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = edges;
    if (!g.exclusive_pairs().empty()) {
        json ex = json::array();
        for (auto [a, b] : g.exclusive_pairs()) ex.push_back(json::array({a, b}));
        j["exclusive"] = ex;
    }
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n")) throw std::invalid_argument("graph json: missing n");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.value("edges", json::array())) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& e : j.value("exclusive", json::array()))
        g.add_exclusive(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
}

json scalar_to_json(const Scalar& s) {
    switch (s.kind()) {
        case Scalar::Kind::Rational: return json{{"r", s.rat().to_string()}};
        case Scalar::Kind::Quad:
            return json{{"quad",
                         {{"a", s.quad_a().to_string()}, {"b", s.quad_b().to_string()}, {"s", s.surd()}}}};
        default: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.21Lg", s.to_long_double());
            return json{{"f", std::string(buf)}};
        }
    }
}

Scalar scalar_from_json(const json& j) {
    if (j.contains("r")) return Scalar(Rational::parse(j.at("r").get<std::string>()));
    if (j.contains("quad")) {
        const auto& q = j.at("quad");
        return Scalar::quad(Rational::parse(q.at("a").get<std::string>()),
                            Rational::parse(q.at("b").get<std::string>()), q.at("s").get<uint64_t>());
    }
    if (j.contains("f")) return Scalar::approx(strtold(j.at("f").get<std::string>().c_str(), nullptr));
    throw std::invalid_argument("scalar json: expected r, quad or f");
}

json vectors_to_json(const VectorSet& V) {
    json j;
    j["d"] = V.d;
    json vs = json::array();
    for (const auto& v : V.vectors) {
        json row = json::array();
        for (const auto& x : v) row.push_back(scalar_to_json(x));
        vs.push_back(row);
    }
    j["vectors"] = vs;
    return j;
}

VectorSet vectors_from_json(const json& j) {
    VectorSet V;
    V.d = j.at("d").get<int>();
    for (const auto& row : j.at("vectors")) {
        SVec v;
        for (const auto& x : row) v.push_back(scalar_from_json(x));
        if (static_cast<int>(v.size()) != V.d) throw std::invalid_argument("vectors json: row dimension mismatch");
        V.vectors.push_back(std::move(v));
    }
    return V;
}

std::string graph_sha(const Graph& g) { return sha256_hex(canonical_dump(graph_to_json(g))); }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << data;
}

}  // namespace ksg
