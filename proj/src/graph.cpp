#include "pgg/graphs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace pgg::graphs {

const std::vector<std::int64_t>& SimpleGraph::at(std::int64_t v) const {
    if (v < 0 || v >= vertex_count())
        throw domain_error("SimpleGraph: vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::int64_t>& SimpleGraph::at(std::int64_t v) {
    if (v < 0 || v >= vertex_count())
        throw domain_error("SimpleGraph: vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

SimpleGraph SimpleGraph::from_edges(std::int64_t n, const std::vector<Edge>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool SimpleGraph::has_edge(std::int64_t u, std::int64_t v) const {
    const auto& nb = at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void SimpleGraph::add_edge(std::int64_t u, std::int64_t v) {
    if (u == v) throw domain_error("SimpleGraph: self-loop rejected");
    auto& nu = at(u);
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) throw domain_error("SimpleGraph: duplicate edge rejected");
    nu.insert(it, v);
    auto& nv = at(v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
}

void SimpleGraph::remove_edge(std::int64_t u, std::int64_t v) {
    auto& nu = at(u);
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v)
        throw domain_error("SimpleGraph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") not present");
    nu.erase(it);
    auto& nv = at(v);
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edges_;
}

std::int64_t SimpleGraph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

graphic::DegreeMultiset SimpleGraph::degree_multiset() const {
    graphic::DegreeMultiset ms;
    for (const auto& nb : adj_) ms.insert(static_cast<std::int64_t>(nb.size()));
    return ms;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (std::int64_t u = 0; u < vertex_count(); ++u)
        for (std::int64_t v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::read_edge_list(std::istream& in) {
    std::string line;
    std::int64_t n = -1, m = -1;
    std::int64_t seen = 0;
    SimpleGraph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw io_error("edge list: bad header at line " + std::to_string(lineno));
            g = SimpleGraph(n);
            continue;
        }
        std::int64_t u, v;
        if (!(ss >> u >> v))
            throw io_error("edge list: bad edge at line " + std::to_string(lineno));
        g.add_edge(u, v);
        ++seen;
    }
    if (n < 0) throw io_error("edge list: missing header");
    if (seen != m)
        throw io_error("edge list: header claims " + std::to_string(m) + " edges, found " +
                       std::to_string(seen));
    return g;
}

void SimpleGraph::write_edge_list(std::ostream& out) const {
    out << vertex_count() << ' ' << edge_count() << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

bool vizing_matching_bound(const graphic::DegreeMultiset& seq, std::int64_t delta,
                           std::int64_t d) {
    if (delta < 1) throw domain_error("vizing_matching_bound: delta must be >= 1");
    if (d < 2 || d % 2 != 0) throw domain_error("vizing_matching_bound: d must be even, >= 2");
    std::int64_t below = 0, above = 0;
    for (auto [v, c] : seq.counts()) {
        if (v < delta)
            below += v * c;
        else
            above += v * c;
    }
    return delta * d <= below - above;
}

} // namespace pgg::graphs
