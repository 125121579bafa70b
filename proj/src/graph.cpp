#include "fslab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fslab {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    adj_.resize(n);
    bits_.assign(n, std::vector<uint64_t>((n + 63) / 64, 0));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    bits_[u][v / 64] |= uint64_t{1} << (v % 64);
    bits_[v][u / 64] |= uint64_t{1} << (u % 64);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    return (bits_[u][v / 64] >> (v % 64)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

NamedGraphSpec NamedGraphSpec::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return {Kind::Cycle, n, 0};
}

NamedGraphSpec NamedGraphSpec::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete bipartite needs both parts nonempty");
    if (s > t) std::swap(s, t);
    return {Kind::CompleteBipartite, s, t};
}

NamedGraphSpec NamedGraphSpec::star(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    return {Kind::Star, n, 0};
}

NamedGraphSpec NamedGraphSpec::star_plus(int n) {
    if (n < 4) throw std::invalid_argument("star-plus needs n >= 4");
    return {Kind::StarPlus, n, 0};
}

NamedGraphSpec NamedGraphSpec::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    return {Kind::Complete, n, 0};
}

NamedGraphSpec NamedGraphSpec::theta() { return {Kind::Theta, 7, 0}; }

std::optional<NamedGraphSpec> NamedGraphSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t used = 0;
                int value = std::stoi(item, &used);
                if (used != item.size()) return std::nullopt;
                args.push_back(value);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
    }
    try {
        if (name == "cycle" && args.size() == 1) return cycle(args[0]);
        if (name == "kbip" && args.size() == 2) return complete_bipartite(args[0], args[1]);
        if (name == "star" && args.size() == 1) return star(args[0]);
        if (name == "starplus" && args.size() == 1) return star_plus(args[0]);
        if (name == "complete" && args.size() == 1) return complete(args[0]);
        if (name == "theta" && args.empty()) return theta();
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

Graph build_named(const NamedGraphSpec& spec) {
    using Kind = NamedGraphSpec::Kind;
    switch (spec.kind) {
        case Kind::Cycle: {
            Graph g(spec.a);
            for (int i = 0; i < spec.a; ++i) g.add_edge(i, (i + 1) % spec.a);
            return g;
        }
        case Kind::CompleteBipartite: {
            Graph g(spec.a + spec.b);
            for (int i = 0; i < spec.a; ++i)
                for (int j = spec.a; j < spec.a + spec.b; ++j) g.add_edge(i, j);
            return g;
        }
        case Kind::Star: {
            Graph g(spec.a);
            for (int i = 1; i < spec.a; ++i) g.add_edge(0, i);
            return g;
        }
        case Kind::StarPlus: {
            Graph g(spec.a);
            for (int i = 1; i < spec.a; ++i) g.add_edge(0, i);
            g.add_edge(1, 2);
            return g;
        }
        case Kind::Complete: {
            Graph g(spec.a);
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) g.add_edge(i, j);
            return g;
        }
        case Kind::Theta: {
            Graph g(7);
            for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
            g.add_edge(6, 0);
            g.add_edge(6, 3);
            return g;
        }
    }
    throw std::invalid_argument("unknown named graph kind");
}

Graph parse_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header, expected \"n m\"");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: missing edge at line " + std::to_string(i + 2));
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("edge list: line " + std::to_string(i + 2) + ": " + e.what());
        }
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    size_t pos = 0;
    if (line[0] == '>') {
        if (line.rfind(">>graph6<<", 0) != 0) throw std::invalid_argument("graph6: bad header");
        pos = 10;
    }
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
    int n = line[pos] - 63;
    if (n < 1 || n > 62) throw std::invalid_argument("graph6: only n in [1,62] supported");
    ++pos;
    Graph g(n);
    int bit = 0;
    int value = 0;
    int avail = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                if (pos >= line.size()) throw std::invalid_argument("graph6: truncated bits");
                value = line[pos] - 63;
                if (value < 0 || value > 63) throw std::invalid_argument("graph6: bad character");
                ++pos;
                avail = 6;
            }
            bit = (value >> (avail - 1)) & 1;
            --avail;
            if (bit) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6: only n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int value = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph load_graph(const std::string& spec_or_path) {
    if (auto spec = NamedGraphSpec::parse(spec_or_path)) return build_named(*spec);
    std::ifstream file(spec_or_path);
    if (!file)
        throw std::invalid_argument("not a named graph spec and not a readable file: " +
                                    spec_or_path);
    std::string first;
    while (std::getline(file, first)) {
        if (!first.empty() && first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream header(first);
    int n = 0, m = 0;
    if (header >> n >> m) {
        file.clear();
        file.seekg(0);
        return parse_edge_list(file);
    }
    while (!first.empty() && (first.back() == '\r' || first.back() == '\n')) first.pop_back();
    return parse_graph6(first);
}

}  // namespace fslab
