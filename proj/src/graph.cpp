#include "gammalab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace gammalab {

namespace {

void check_vertex_count(int d) {
    if (d < 0 || d > kMaxBits) {
        throw Error(ErrorKind::validation,
                    "vertex count " + std::to_string(d) + " outside 0.." +
                        std::to_string(kMaxBits));
    }
}

void check_iso_guard(int d) {
    if (d > kIsoGuard) {
        throw Error(ErrorKind::too_large,
                    "brute-force isomorphism limited to " + std::to_string(kIsoGuard) +
                        " vertices, got " + std::to_string(d));
    }
}

// Enumerates adjacency-preserving bijections g -> h; stops when visit returns false.
void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    const int d = g.size();
    std::vector<int> map(d, -1);
    Mask used = 0;
    bool stop = false;

    std::function<void(int)> extend = [&](int v) {
        if (stop) return;
        if (v == d) {
            if (!visit(map)) stop = true;
            return;
        }
        for (int w = 0; w < d && !stop; ++w) {
            if ((used >> w) & 1U) continue;
            if (g.degree(v) != h.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(u, v) != h.adjacent(map[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[v] = w;
            used |= bit(w);
            extend(v + 1);
            used &= ~bit(w);
            map[v] = -1;
        }
    };
    extend(0);
}

int parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::parse, "expected integer, got '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

Graph::Graph(int d) {
    check_vertex_count(d);
    adj_.assign(d, 0);
}

Graph::Graph(int d, const std::vector<Edge>& edges) : Graph(d) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= d || v >= d) {
            throw Error(ErrorKind::validation, "edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) +
                                                   ") has an out-of-range vertex");
        }
        if (u == v) {
            throw Error(ErrorKind::validation, "self-loop at vertex " + std::to_string(u));
        }
        if (adjacent(u, v)) {
            throw Error(ErrorKind::validation, "duplicate edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ")");
        }
        add_edge(u, v);
    }
}

void Graph::add_edge(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u) {
        for (int v : bits_of(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask m : adj_) twice += popcount(m);
    return twice / 2;
}

bool Graph::is_complete() const {
    for (int v = 0; v < size(); ++v) {
        if (adj_[v] != (all_vertices() & ~bit(v))) return false;
    }
    return true;
}

bool Graph::is_connected() const { return connected_components(*this).count() <= 1; }

int VertexPartition::block_of(int v) const {
    for (int i = 0; i < count(); ++i) {
        if ((blocks[i] >> v) & 1U) return i;
    }
    return -1;
}

Graph path_graph(int d) {
    Graph g(d);
    for (int i = 0; i + 1 < d; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int d) {
    if (d < 3) throw Error(ErrorKind::validation, "cycle needs at least 3 vertices");
    Graph g = path_graph(d);
    g.add_edge(d - 1, 0);
    return g;
}

Graph complete_graph(int d) {
    Graph g(d);
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int d) {
    if (d < 2) throw Error(ErrorKind::validation, "star needs at least 2 vertices");
    Graph g(d);
    for (int i = 0; i + 1 < d; ++i) g.add_edge(i, d - 1);
    return g;
}

Graph empty_graph(int d) { return Graph(d); }

Graph complete_multipartite_graph(const std::vector<int>& parts) {
    if (parts.empty()) throw Error(ErrorKind::validation, "complete_multipartite needs parts");
    std::vector<int> part_of;
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
        if (parts[p] < 1) throw Error(ErrorKind::validation, "part sizes must be >= 1");
        part_of.insert(part_of.end(), parts[p], p);
    }
    Graph g(static_cast<int>(part_of.size()));
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

Graph hamming_graph(const std::vector<int>& parts) {
    if (parts.empty()) throw Error(ErrorKind::validation, "hamming needs at least one part");
    long long count = 1;
    for (int p : parts) {
        if (p < 1) throw Error(ErrorKind::validation, "hamming part sizes must be >= 1");
        count *= p;
        if (count > kMaxBits) throw Error(ErrorKind::too_large, "hamming graph too large");
    }
    const int d = static_cast<int>(count);
    const int m = static_cast<int>(parts.size());
    std::vector<std::vector<int>> tuples(d, std::vector<int>(m));
    for (int v = 0; v < d; ++v) {
        int rest = v;
        for (int k = m - 1; k >= 0; --k) {
            tuples[v][k] = rest % parts[k];
            rest /= parts[k];
        }
    }
    Graph g(d);
    for (int u = 0; u < d; ++u) {
        for (int v = u + 1; v < d; ++v) {
            int diff = 0;
            for (int k = 0; k < m; ++k) diff += tuples[u][k] != tuples[v][k];
            if (diff == 1) g.add_edge(u, v);
        }
    }
    return g;
}

Graph family(Family kind, const std::vector<int>& params) {
    auto single = [&](const char* name) {
        if (params.size() != 1) {
            throw Error(ErrorKind::validation, std::string(name) + " takes one parameter");
        }
        return params[0];
    };
    switch (kind) {
        case Family::path: return path_graph(single("path"));
        case Family::cycle: return cycle_graph(single("cycle"));
        case Family::complete: return complete_graph(single("complete"));
        case Family::star: return star_graph(single("star"));
        case Family::empty: return empty_graph(single("empty"));
        case Family::complete_multipartite: return complete_multipartite_graph(params);
        case Family::petersen:
            if (!params.empty()) throw Error(ErrorKind::validation, "petersen takes no parameters");
            return petersen_graph();
        case Family::hamming: return hamming_graph(params);
    }
    throw Error(ErrorKind::validation, "unknown family");
}

Graph family_from_spec(std::string_view spec) {
    std::vector<std::string_view> fields;
    size_t start = 0;
    while (true) {
        size_t comma = spec.find(',', start);
        fields.push_back(spec.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    static const std::pair<std::string_view, Family> names[] = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"complete", Family::complete},
        {"star", Family::star},
        {"empty", Family::empty},
        {"complete_multipartite", Family::complete_multipartite},
        {"petersen", Family::petersen},
        {"hamming", Family::hamming},
    };
    std::vector<int> params;
    for (size_t i = 1; i < fields.size(); ++i) params.push_back(parse_int(fields[i]));
    for (auto [name, kind] : names) {
        if (fields[0] == name) return family(kind, params);
    }
    throw Error(ErrorKind::parse, "unknown family '" + std::string(fields[0]) + "'");
}

VertexPartition connected_components(const Graph& g) {
    VertexPartition out;
    Mask unseen = g.all_vertices();
    while (unseen) {
        Mask block = bit(lowest_bit(unseen));
        Mask frontier = block;
        while (frontier) {
            int v = lowest_bit(frontier);
            frontier &= frontier - 1;
            Mask fresh = g.neighbors(v) & ~block;
            block |= fresh;
            frontier |= fresh;
        }
        out.blocks.push_back(block);
        unseen &= ~block;
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, Mask vertices) {
    if (vertices & ~g.all_vertices()) {
        throw Error(ErrorKind::validation, "induced_subgraph: vertex outside the graph");
    }
    InducedSubgraph out;
    out.original = bits_of(vertices);
    const int k = static_cast<int>(out.original.size());
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
    return out;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    check_iso_guard(g.size());
    std::vector<int> g_deg, h_deg;
    for (int v = 0; v < g.size(); ++v) {
        g_deg.push_back(g.degree(v));
        h_deg.push_back(h.degree(v));
    }
    std::sort(g_deg.begin(), g_deg.end());
    std::sort(h_deg.begin(), h_deg.end());
    if (g_deg != h_deg) return std::nullopt;

    std::optional<std::vector<int>> found;
    for_each_isomorphism(g, h, [&](const std::vector<int>& map) {
        found = map;
        return false;
    });
    return found;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    check_iso_guard(g.size());
    std::vector<std::vector<int>> out;
    for_each_isomorphism(g, g, [&](const std::vector<int>& map) {
        out.push_back(map);
        return true;
    });
    return out;
}

std::vector<int> canonical_permutation(const Graph& g) {
    const int d = g.size();
    check_iso_guard(d);
    // Bits in graph6 order: column j holds pairs (0,j) .. (j-1,j). Column j of
    // a candidate is fixed once positions 0..j are placed, so prefixes compare
    // column by column.
    std::vector<int> perm(d), best;
    std::vector<Mask> best_cols(d, 0);
    std::vector<Mask> cols(d, 0);
    // below[p]: prefix of length p is already strictly smaller than best's.
    std::vector<char> below(d + 1, 0);
    Mask used = 0;

    std::function<void(int)> place = [&](int pos) {
        if (pos == d) {
            if (best.empty() || below[pos]) {
                best = perm;
                best_cols = cols;
                std::fill(below.begin(), below.end(), 0);
            }
            return;
        }
        for (int v = 0; v < d; ++v) {
            if ((used >> v) & 1U) continue;
            // Column bits MSB-first as (0,pos),(1,pos),...; a 0 beats a 1.
            Mask col = 0;
            for (int i = 0; i < pos; ++i) {
                col = (col << 1) | (g.adjacent(perm[i], v) ? 1U : 0U);
            }
            if (!best.empty() && !below[pos] && col > best_cols[pos]) continue;
            below[pos + 1] = below[pos] || (!best.empty() && col < best_cols[pos]);
            perm[pos] = v;
            cols[pos] = col;
            used |= bit(v);
            place(pos + 1);
            used &= ~bit(v);
        }
    };
    place(0);
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.adjacent(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

std::string canonical_form(const Graph& g) {
    return graph6_encode(relabel(g, canonical_permutation(g)));
}

std::string graph6_encode(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    auto fail = [&](size_t offset, const std::string& what) -> Error {
        return Error(ErrorKind::parse,
                     "graph6 byte offset " + std::to_string(offset) + ": " + what);
    };
    auto value_at = [&](size_t offset) {
        if (offset >= text.size()) throw fail(offset, "unexpected end of input");
        int c = static_cast<unsigned char>(text[offset]);
        if (c < 63 || c > 126) throw fail(offset, "byte outside 63..126");
        return c - 63;
    };
    if (text.empty()) throw fail(0, "empty string");
    size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw fail(1, "vertex counts above 258047 unsupported");
        n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
        pos = 4;
    } else {
        n = value_at(0);
        pos = 1;
    }
    if (n > kMaxBits) throw fail(0, "vertex count " + std::to_string(n) + " exceeds 64");
    const size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t expected = pos + (pairs + 5) / 6;
    if (text.size() != expected) {
        throw fail(std::min(text.size(), expected),
                   "expected " + std::to_string(expected) + " bytes, got " +
                       std::to_string(text.size()));
    }
    Graph g(n);
    size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = value_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (pairs % 6 != 0) {
        int last = value_at(pos + pairs / 6);
        if (last & ((1 << (6 - pairs % 6)) - 1)) {
            throw fail(pos + pairs / 6, "nonzero padding bits");
        }
    }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"d", g.size()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        int d = j.at("d").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw Error(ErrorKind::parse, "edge entries must be [u, v] pairs");
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(d, edges);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("graph JSON: ") + ex.what());
    }
}

Graph parse_graph(std::string_view text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw Error(ErrorKind::parse, "empty graph input");
    size_t last = text.find_last_not_of(" \t\r\n");
    text = text.substr(first, last - first + 1);
    if (text.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorKind::parse, std::string("graph JSON: ") + ex.what());
        }
        return graph_from_json(j);
    }
    return graph6_decode(text);
}

}  // namespace gammalab
