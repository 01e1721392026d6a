#include "gammalab/labeling.hpp"

#include <algorithm>
#include <set>

namespace gammalab {

namespace {

// Renumbers the elements of `used` to 0..|used|-1 keeping their order.
Mask compact(Mask label, Mask used) {
    Mask out = 0;
    int next = 0;
    for (int e : bits_of(used)) {
        if ((label >> e) & 1U) out |= bit(next);
        ++next;
    }
    return out;
}

Mask union_of(const Labeling& labeling) {
    Mask all = 0;
    for (Mask l : labeling.labels) all |= l;
    return all;
}

void check_ground_size(int n) {
    if (n < 0 || n > kMaxBits) {
        throw Error(ErrorKind::validation, "ground set size " + std::to_string(n) +
                                               " outside 0.." + std::to_string(kMaxBits));
    }
}

Labeling pad(const Labeling& labeling, int extra) {
    Labeling out = labeling;
    check_ground_size(labeling.n + extra);
    Mask fresh = low_bits(labeling.n + extra) & ~low_bits(labeling.n);
    for (Mask& l : out.labels) l |= fresh;
    out.n += extra;
    out.s += extra;
    return out;
}

}  // namespace

Labeling make_labeling(int n, int s, const std::vector<std::vector<int>>& labels) {
    check_ground_size(n);
    Labeling out{n, s, {}};
    for (const auto& elements : labels) {
        Mask m = 0;
        for (int e : elements) {
            if (e < 1 || e > n) {
                throw Error(ErrorKind::validation, "label element " + std::to_string(e) +
                                                       " outside 1.." + std::to_string(n));
            }
            if ((m >> (e - 1)) & 1U) {
                throw Error(ErrorKind::validation,
                            "label element " + std::to_string(e) + " repeated");
            }
            m |= bit(e - 1);
        }
        out.labels.push_back(m);
    }
    return out;
}

Mask parse_label(const std::string& text) {
    std::vector<int> elements;
    if (text.find(',') != std::string::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            std::string field = text.substr(start, comma - start);
            try {
                elements.push_back(std::stoi(field));
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, "bad label element '" + field + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw Error(ErrorKind::parse, "bad label digit in '" + text + "'");
            elements.push_back(c - '0');
        }
    }
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxBits) throw Error(ErrorKind::parse, "label element out of range");
        m |= bit(e - 1);
    }
    return m;
}

std::string format_label(Mask label, int n) {
    std::string out;
    for (int e : bits_of(label)) {
        if (n > 9 && !out.empty()) out += ',';
        out += std::to_string(e + 1);
    }
    return out;
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::size: return "size";
        case Violation::Kind::injective: return "injective";
        case Violation::Kind::union_: return "union";
        case Violation::Kind::edge: return "edge";
        case Violation::Kind::nonedge: return "nonedge";
    }
    return "unknown";
}

VerificationReport verify_labeling(const Graph& g, const Labeling& labeling) {
    if (g.size() != labeling.size()) {
        throw Error(ErrorKind::validation, "graph has " + std::to_string(g.size()) +
                                               " vertices but labeling has " +
                                               std::to_string(labeling.size()) + " labels");
    }
    VerificationReport report;
    const int d = g.size();
    const int s = labeling.s;
    for (int v = 0; v < d; ++v) {
        int size = popcount(labeling.labels[v]);
        if (size != s) {
            report.violations.push_back({Violation::Kind::size, {v},
                                         "label has " + std::to_string(size) +
                                             " elements, expected " + std::to_string(s)});
        }
    }
    Mask all = union_of(labeling);
    if (all != low_bits(labeling.n)) {
        report.violations.push_back(
            {Violation::Kind::union_, {},
             "union of labels is {" + format_label(all, kMaxBits) + "}, expected {1.." +
                 std::to_string(labeling.n) + "}"});
    }
    for (int v = 0; v < d; ++v) {
        for (int w = v + 1; w < d; ++w) {
            Mask a = labeling.labels[v], b = labeling.labels[w];
            int meet = popcount(a & b);
            if (a == b) {
                report.violations.push_back({Violation::Kind::injective, {v, w}, "equal labels"});
            }
            if (g.adjacent(v, w) && meet != s - 1) {
                report.violations.push_back({Violation::Kind::edge, {v, w},
                                             "adjacent but labels share " +
                                                 std::to_string(meet) + " elements"});
            } else if (!g.adjacent(v, w) && meet == s - 1) {
                report.violations.push_back({Violation::Kind::nonedge, {v, w},
                                             "non-adjacent but labels share " +
                                                 std::to_string(meet) + " elements"});
            }
        }
    }
    return report;
}

void require_verified(const Graph& g, const Labeling& labeling) {
    auto report = verify_labeling(g, labeling);
    if (!report.ok()) {
        const auto& first = report.violations.front();
        std::string where;
        for (int v : first.vertices) where += " v" + std::to_string(v + 1);
        throw Error(ErrorKind::verification_failed,
                    std::string("labeling fails: ") + to_string(first.kind) + where + ": " +
                        first.detail);
    }
}

Labeling path_labeling(int d) {
    if (d < 1) throw Error(ErrorKind::validation, "path labeling needs d >= 1");
    Labeling out{d + 1, 2, {}};
    for (int i = 0; i < d; ++i) out.labels.push_back(bit(i) | bit(i + 1));
    return out;
}

Labeling cycle_labeling(int d) {
    if (d < 3) throw Error(ErrorKind::validation, "cycle labeling needs d >= 3");
    Labeling out{d, 2, {}};
    for (int i = 0; i < d; ++i) out.labels.push_back(bit(i) | bit((i + 1) % d));
    return out;
}

Labeling complete_labeling(int d) {
    if (d < 1) throw Error(ErrorKind::validation, "complete labeling needs d >= 1");
    Labeling out{d, 1, {}};
    for (int i = 0; i < d; ++i) out.labels.push_back(bit(i));
    return out;
}

Labeling empty_labeling(int d) {
    if (d < 0 || 2 * d > kMaxBits) throw Error(ErrorKind::validation, "bad empty labeling size");
    Labeling out{2 * d, 2, {}};
    for (int i = 0; i < d; ++i) out.labels.push_back(bit(2 * i) | bit(2 * i + 1));
    return out;
}

Labeling star_labeling(int d) {
    if (d < 2) throw Error(ErrorKind::validation, "star labeling needs d >= 2");
    check_ground_size(2 * (d - 1));
    Labeling out{2 * (d - 1), d - 1, {}};
    const Mask center = low_bits(d - 1);
    // Leaf i (1-indexed) swaps element i for d-1+i.
    for (int i = 0; i + 1 < d; ++i) out.labels.push_back((center & ~bit(i)) | bit(d - 1 + i));
    out.labels.push_back(center);
    return out;
}

LabeledGraph hamming_labeling(const std::vector<int>& parts) {
    LabeledGraph out{hamming_graph(parts), {}};
    const int m = static_cast<int>(parts.size());
    std::vector<int> offset(m, 0);
    int n = 0;
    for (int k = 0; k < m; ++k) {
        offset[k] = n;
        n += parts[k];
    }
    check_ground_size(n);
    out.labeling = Labeling{n, m, {}};
    for (int v = 0; v < out.graph.size(); ++v) {
        Mask label = 0;
        int rest = v;
        for (int k = m - 1; k >= 0; --k) {
            label |= bit(offset[k] + rest % parts[k]);
            rest /= parts[k];
        }
        out.labeling.labels.push_back(label);
    }
    return out;
}

Labeling restrict_labeling(const Graph& g, const Labeling& labeling, Mask vertices) {
    require_verified(g, labeling);
    if (vertices & ~g.all_vertices()) {
        throw Error(ErrorKind::validation, "restrict_labeling: vertex outside the graph");
    }
    Mask used = 0;
    for (int v : bits_of(vertices)) used |= labeling.labels[v];
    Labeling out{popcount(used), labeling.s, {}};
    for (int v : bits_of(vertices)) out.labels.push_back(compact(labeling.labels[v], used));
    return out;
}

Labeling normalize_labeling(const Graph& g, const Labeling& labeling) {
    const int d = g.size();
    if (d < 2) throw Error(ErrorKind::precondition, "normalize_labeling needs d >= 2");
    if (!g.is_connected()) throw Error(ErrorKind::precondition, "normalize_labeling needs a connected graph");
    require_verified(g, labeling);
    const int s = labeling.s;
    if (s == d - 1) return labeling;
    if (s < d - 1) return pad(labeling, d - 1 - s);

    // At least s-d+1 elements lie in every label; drop the largest ones.
    int drop = s - d + 1;
    Mask common = common_elements(labeling);
    if (popcount(common) < drop) {
        throw Error(ErrorKind::invariant_violation, "intersection bound violated on a verified labeling");
    }
    Mask removed = 0;
    auto common_bits = bits_of(common);
    for (int i = 0; i < drop; ++i) removed |= bit(common_bits[common_bits.size() - 1 - i]);
    Mask keep = low_bits(labeling.n) & ~removed;
    Labeling out{labeling.n - drop, d - 1, {}};
    for (Mask l : labeling.labels) out.labels.push_back(compact(l & keep, keep));
    return out;
}

LabeledGraph compose_components(const std::vector<LabeledGraph>& parts) {
    int s = 2;
    int total_d = 0;
    for (const auto& part : parts) {
        require_verified(part.graph, part.labeling);
        s = std::max(s, part.labeling.s);
        total_d += part.graph.size();
    }
    LabeledGraph out{Graph(total_d), Labeling{0, s, {}}};
    int vertex_offset = 0;
    for (const auto& part : parts) {
        Labeling padded = pad(part.labeling, s - part.labeling.s);
        check_ground_size(out.labeling.n + padded.n);
        for (Mask l : padded.labels) out.labeling.labels.push_back(l << out.labeling.n);
        for (auto [u, v] : part.graph.edges()) out.graph.add_edge(u + vertex_offset, v + vertex_offset);
        vertex_offset += part.graph.size();
        out.labeling.n += padded.n;
    }
    return out;
}

std::vector<Mask> connected_vertex_sets(const Graph& g, int max_size) {
    const int cap = max_size <= 0 ? g.size() : max_size;
    std::set<Mask> seen;
    std::vector<Mask> layer;
    for (int v = 0; v < g.size() && cap >= 1; ++v) {
        seen.insert(bit(v));
        layer.push_back(bit(v));
    }
    for (int size = 2; size <= cap && !layer.empty(); ++size) {
        std::vector<Mask> next;
        for (Mask set : layer) {
            Mask boundary = 0;
            for (int v : bits_of(set)) boundary |= g.neighbors(v);
            boundary &= ~set;
            for (int w : bits_of(boundary)) {
                if (seen.insert(set | bit(w)).second) next.push_back(set | bit(w));
            }
        }
        layer = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool check_union_bound(const Graph& g, const Labeling& labeling, int max_size) {
    for (Mask set : connected_vertex_sets(g, max_size)) {
        Mask all = 0;
        for (int v : bits_of(set)) all |= labeling.labels[v];
        if (popcount(all) > labeling.s + popcount(set) - 1) return false;
    }
    return true;
}

bool check_intersection_bound(const Graph& g, const Labeling& labeling, int max_size) {
    for (Mask set : connected_vertex_sets(g, max_size)) {
        Mask common = ~Mask{0};
        for (int v : bits_of(set)) common &= labeling.labels[v];
        if (popcount(common) < labeling.s - popcount(set) + 1) return false;
    }
    return true;
}

Mask common_elements(const Labeling& labeling) {
    Mask common = ~Mask{0};
    for (Mask l : labeling.labels) common &= l;
    return common;
}

nlohmann::json labeling_to_json(const Labeling& labeling) {
    nlohmann::json labels = nlohmann::json::array();
    for (Mask l : labeling.labels) {
        nlohmann::json elements = nlohmann::json::array();
        for (int e : bits_of(l)) elements.push_back(e + 1);
        labels.push_back(elements);
    }
    return {{"n", labeling.n}, {"s", labeling.s}, {"labels", labels}};
}

Labeling labeling_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        int s = j.at("s").get<int>();
        std::vector<std::vector<int>> labels;
        for (const auto& label : j.at("labels")) labels.push_back(label.get<std::vector<int>>());
        return make_labeling(n, s, labels);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("labeling JSON: ") + ex.what());
    }
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json vertices = nlohmann::json::array();
        for (int x : v.vertices) vertices.push_back(x + 1);
        violations.push_back(
            {{"kind", to_string(v.kind)}, {"vertices", vertices}, {"detail", v.detail}});
    }
    return {{"ok", report.ok()}, {"violations", violations}};
}

}  // namespace gammalab
