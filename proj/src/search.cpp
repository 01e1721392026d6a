#include "gammalab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace gammalab {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes = 0;
    std::optional<Clock::time_point> deadline;

    // False once the node or time budget is spent.
    bool charge() {
        ++nodes;
        if (nodes > max_nodes) return false;
        if (deadline && (nodes & 1023U) == 0 && Clock::now() > *deadline) return false;
        return true;
    }
};

// Backtracking over label assignments for a fixed label size s and ground
// set size in [n_min, n_max]. Vertices are visited in spanning-forest
// preorder; a non-root label differs from its tree parent's label in exactly
// one element, and unused ground elements are only ever introduced as the
// next integer. Every ground-set orbit of admissible labelings therefore
// has at least one representative among the emitted labelings.
class LabelKernel {
public:
    enum class Result { complete, stopped, budget_exceeded };

    LabelKernel(const Graph& g, int s, int n_min, int n_max, Budget& budget)
        : g_(g), s_(s), n_min_(n_min), n_max_(std::min(n_max, kMaxBits - 1)), budget_(budget) {
        build_order();
    }

    Result run(const std::function<bool(const Labeling&)>& visit) {
        visit_ = &visit;
        result_ = Result::complete;
        const int d = g_.size();
        if (s_ < 1 || n_max_ < s_) return result_;
        labels_.assign(d, 0);
        assign(0, 0);
        return result_;
    }

private:
    void build_order() {
        const int d = g_.size();
        parent_.assign(d, -1);
        pos_of_.assign(d, -1);
        Mask seen = 0;
        for (Mask block : connected_components(g_).blocks) {
            int root = -1;
            for (int v : bits_of(block)) {
                if (root < 0 || g_.degree(v) > g_.degree(root)) root = v;
            }
            std::vector<std::pair<int, int>> stack{{root, -1}};
            while (!stack.empty()) {
                auto [v, parent] = stack.back();
                stack.pop_back();
                if ((seen >> v) & 1U) continue;
                seen |= bit(v);
                pos_of_[v] = static_cast<int>(order_.size());
                parent_[order_.size()] = parent < 0 ? -1 : pos_of_[parent];
                order_.push_back(v);
                auto next = bits_of(g_.neighbors(v) & ~seen);
                for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back({*it, v});
            }
        }
        // adjacency and fresh-element capacity in position space
        adj_pos_.assign(d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (g_.adjacent(order_[i], order_[j])) adj_pos_[i] |= bit(j);
        fresh_after_.assign(d + 1, 0);
        for (int i = d - 1; i >= 0; --i) fresh_after_[i] = fresh_after_[i + 1] + (parent_[i] < 0 ? s_ : 1);
    }

    bool consistent(int pos, Mask label) const {
        for (int j = 0; j < pos; ++j) {
            int meet = popcount(label & labels_[j]);
            if ((adj_pos_[pos] >> j) & 1U) {
                if (meet != s_ - 1) return false;
            } else if (meet > s_ - 2) {
                return false;
            }
        }
        return true;
    }

    // Returns false when the search must stop.
    bool try_label(int pos, Mask label, int used) {
        if (!consistent(pos, label)) return true;
        if (!budget_.charge()) {
            result_ = Result::budget_exceeded;
            return false;
        }
        labels_[pos] = label;
        return assign(pos + 1, used);
    }

    bool assign(int pos, int used) {
        const int d = g_.size();
        if (pos == d) {
            if (used < n_min_ || used > n_max_) return true;
            Labeling out{used, s_, std::vector<Mask>(d)};
            for (int i = 0; i < d; ++i) out.labels[order_[i]] = labels_[i];
            if (!(*visit_)(out)) {
                result_ = Result::stopped;
                return false;
            }
            return true;
        }
        if (used + fresh_after_[pos] < n_min_) return true;

        if (parent_[pos] < 0) {
            // Tree root: k old elements plus s-k new ones.
            for (int k = std::min(s_, used); k >= 0; --k) {
                int fresh = s_ - k;
                if (used + fresh > n_max_) break;
                Mask fresh_bits = low_bits(used + fresh) & ~low_bits(used);
                if (k == 0) {
                    if (!try_label(pos, fresh_bits, used + fresh)) return false;
                    continue;
                }
                // Gosper's hack over k-subsets of the used elements.
                Mask subset = low_bits(k);
                while (subset < bit(used)) {
                    if (!try_label(pos, subset | fresh_bits, used + fresh)) return false;
                    Mask c = subset & (~subset + 1);
                    Mask r = subset + c;
                    subset = (((r ^ subset) >> 2) / c) | r;
                }
            }
            return true;
        }

        const Mask parent = labels_[parent_[pos]];
        const Mask old_outside = low_bits(used) & ~parent;
        for (int a : bits_of(parent)) {
            Mask base = parent & ~bit(a);
            for (int b : bits_of(old_outside)) {
                if (!try_label(pos, base | bit(b), used)) return false;
            }
            if (used < n_max_) {
                if (!try_label(pos, base | bit(used), used + 1)) return false;
            }
        }
        return true;
    }

    const Graph& g_;
    int s_;
    int n_min_;
    int n_max_;
    Budget& budget_;
    std::vector<int> order_;
    std::vector<int> pos_of_;
    std::vector<int> parent_;
    std::vector<Mask> adj_pos_;
    std::vector<int> fresh_after_;
    std::vector<Mask> labels_;
    const std::function<bool(const Labeling&)>* visit_ = nullptr;
    Result result_ = Result::complete;
};

std::vector<int> default_s_values(const Graph& component) {
    const int d = component.size();
    if (d <= 1) return {1};
    std::vector<int> out;
    if (component.is_complete()) out.push_back(1);
    for (int s = 2; s <= d - 1; ++s) out.push_back(s);
    return out;
}

// Column keys: element e maps to the set of vertices whose label holds it,
// with vertex 0 as the most significant bit. Sorted descending.
std::vector<Mask> column_keys(const std::vector<Mask>& labels, int n) {
    const int d = static_cast<int>(labels.size());
    std::vector<Mask> keys(n, 0);
    for (int v = 0; v < d; ++v)
        for (int e : bits_of(labels[v]))
            if (e < n) keys[e] |= bit(d - 1 - v);
    std::sort(keys.begin(), keys.end(), std::greater<>());
    return keys;
}

Labeling from_keys(const std::vector<Mask>& keys, int d, int s) {
    Labeling out{static_cast<int>(keys.size()), s, std::vector<Mask>(d, 0)};
    for (int r = 0; r < static_cast<int>(keys.size()); ++r)
        for (int v = 0; v < d; ++v)
            if ((keys[r] >> (d - 1 - v)) & 1U) out.labels[v] |= bit(r);
    return out;
}

void check_enumeration_guard(const Graph& g, int n) {
    if (g.size() > kEnumerateMaxVertices || n > kEnumerateMaxGround) {
        throw Error(ErrorKind::too_large,
                    "enumeration limited to d <= " + std::to_string(kEnumerateMaxVertices) +
                        " and n <= " + std::to_string(kEnumerateMaxGround));
    }
}

bool labels_less(const Labeling& a, const Labeling& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.s != b.s) return a.s < b.s;
    return a.labels < b.labels;
}

}  // namespace

const char* to_string(Dedupe mode) {
    switch (mode) {
        case Dedupe::none: return "none";
        case Dedupe::ground_set: return "ground";
        case Dedupe::full: return "full";
    }
    return "unknown";
}

Dedupe dedupe_from_string(const std::string& text) {
    if (text == "none") return Dedupe::none;
    if (text == "ground" || text == "ground_set") return Dedupe::ground_set;
    if (text == "full" || text == "ground_set_and_automorphisms") return Dedupe::full;
    throw Error(ErrorKind::parse, "unknown dedupe mode '" + text + "'");
}

const char* to_string(SearchOutcome::Status status) {
    switch (status) {
        case SearchOutcome::Status::found: return "found";
        case SearchOutcome::Status::exhausted: return "exhausted";
        case SearchOutcome::Status::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

const char* to_string(ClassRow::Verdict verdict) {
    switch (verdict) {
        case ClassRow::Verdict::labelable: return "yes";
        case ClassRow::Verdict::not_labelable: return "no";
        case ClassRow::Verdict::undecided: return "undecided";
    }
    return "unknown";
}

SearchOutcome find_labeling(const Graph& g, const SearchConfig& cfg) {
    SearchOutcome outcome;
    if (g.size() == 0) {
        outcome.status = SearchOutcome::Status::found;
        outcome.solutions.push_back(Labeling{0, 0, {}});
        return outcome;
    }
    for (int s : cfg.s_values) {
        if (s < 1) throw Error(ErrorKind::validation, "label size must be >= 1");
    }

    Budget budget;
    budget.max_nodes = cfg.node_budget;
    if (cfg.time_budget) budget.deadline = Clock::now() + *cfg.time_budget;

    const auto components = connected_components(g);
    const int wanted = std::max(cfg.limit, 1);
    const bool single = components.count() == 1;
    bool any_exhausted = false;
    bool any_budget = false;
    std::vector<std::optional<LabeledGraph>> found(components.count());

    for (int c = 0; c < components.count(); ++c) {
        const auto sub = induced_subgraph(g, components.blocks[c]);
        const int dc = sub.graph.size();
        const auto s_values = cfg.s_values.empty() ? default_s_values(sub.graph) : cfg.s_values;
        const int collect = single ? wanted : 1;
        std::vector<Labeling> solutions;
        bool hit_budget = false;
        std::vector<ExhaustedSpace> boxes;

        for (int s : s_values) {
            if (static_cast<int>(solutions.size()) >= collect) break;
            const int n_max = cfg.n_cap.value_or(s + dc - 1);
            LabelKernel kernel(sub.graph, s, s, n_max, budget);
            auto result = kernel.run([&](const Labeling& l) {
                solutions.push_back(l);
                return static_cast<int>(solutions.size()) < collect;
            });
            if (result == LabelKernel::Result::budget_exceeded) {
                hit_budget = true;
                break;
            }
            if (result == LabelKernel::Result::complete) boxes.push_back({c, s, n_max});
        }

        if (!solutions.empty()) {
            if (single) {
                outcome.solutions = std::move(solutions);
            } else {
                found[c] = LabeledGraph{sub.graph, solutions.front()};
            }
        } else if (hit_budget) {
            any_budget = true;
        } else {
            any_exhausted = true;
            outcome.certificate.insert(outcome.certificate.end(), boxes.begin(), boxes.end());
        }
        // Later components cannot change a negative verdict.
        if (hit_budget) break;
    }
    outcome.nodes_explored = budget.nodes;

    if (any_exhausted) {
        outcome.status = SearchOutcome::Status::exhausted;
        outcome.solutions.clear();
        return outcome;
    }
    if (any_budget) {
        outcome.status = SearchOutcome::Status::budget_exceeded;
        outcome.solutions.clear();
        return outcome;
    }

    if (!single) {
        std::vector<LabeledGraph> parts;
        for (auto& part : found) parts.push_back(*part);
        auto composed = compose_components(parts);
        Labeling labeling{composed.labeling.n, composed.labeling.s, std::vector<Mask>(g.size())};
        int offset = 0;
        for (Mask block : components.blocks) {
            for (int v : bits_of(block)) labeling.labels[v] = composed.labeling.labels[offset++];
        }
        outcome.solutions = {labeling};
    }
    for (const auto& l : outcome.solutions) {
        if (!verify_labeling(g, l).ok()) {
            throw Error(ErrorKind::invariant_violation, "search produced an inadmissible labeling");
        }
    }
    outcome.solutions = dedupe_labelings(g, outcome.solutions, cfg.dedupe);
    outcome.status = SearchOutcome::Status::found;
    return outcome;
}

std::vector<Labeling> enumerate_raw_labelings(const Graph& g, int s, int n) {
    check_enumeration_guard(g, n);
    if (s < 1) throw Error(ErrorKind::validation, "label size must be >= 1");
    std::vector<Labeling> out;
    if (g.size() == 0) {
        if (n == 0) out.push_back(Labeling{0, s, {}});
        return out;
    }
    Budget budget;
    budget.max_nodes = std::numeric_limits<std::uint64_t>::max();
    LabelKernel kernel(g, s, n, n, budget);
    kernel.run([&](const Labeling& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

Labeling canonical_labeling(const Labeling& labeling,
                            const std::vector<std::vector<int>>& automorphisms) {
    const int d = labeling.size();
    std::vector<Mask> best = column_keys(labeling.labels, labeling.n);
    std::vector<Mask> permuted(d);
    for (const auto& perm : automorphisms) {
        for (int v = 0; v < d; ++v) permuted[v] = labeling.labels[perm[v]];
        auto keys = column_keys(permuted, labeling.n);
        if (keys > best) best = std::move(keys);
    }
    return from_keys(best, d, labeling.s);
}

std::vector<Labeling> dedupe_labelings(const Graph& g, const std::vector<Labeling>& labelings,
                                       Dedupe mode) {
    if (mode == Dedupe::none) return labelings;
    std::vector<std::vector<int>> autos;
    if (mode == Dedupe::full) autos = automorphisms(g);
    std::vector<Labeling> out;
    for (const auto& l : labelings) out.push_back(canonical_labeling(l, autos));
    std::sort(out.begin(), out.end(), labels_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Labeling> enumerate_labelings(const Graph& g, int s, int n, Dedupe up_to) {
    if (up_to == Dedupe::none) {
        throw Error(ErrorKind::validation, "enumerate_labelings needs a ground_set or full quotient");
    }
    return dedupe_labelings(g, enumerate_raw_labelings(g, s, n), up_to);
}

Decision decide_labelable(const Graph& g, int component_cap, std::uint64_t node_budget) {
    for (Mask block : connected_components(g).blocks) {
        if (popcount(block) > component_cap) {
            throw Error(ErrorKind::undecided,
                        "component with " + std::to_string(popcount(block)) +
                            " vertices exceeds the decision cap of " +
                            std::to_string(component_cap));
        }
    }
    SearchConfig cfg;
    cfg.node_budget = node_budget;
    auto outcome = find_labeling(g, cfg);
    if (outcome.status == SearchOutcome::Status::budget_exceeded) {
        throw Error(ErrorKind::undecided, "node budget of " + std::to_string(node_budget) +
                                              " exhausted before a verdict");
    }
    Decision decision;
    decision.nodes_explored = outcome.nodes_explored;
    if (outcome.status == SearchOutcome::Status::found) {
        decision.labelable = true;
        decision.witness = outcome.solutions.front();
    } else {
        decision.certificate = outcome.certificate;
        for (const auto& box : outcome.certificate) {
            if (decision.failing_components.empty() || decision.failing_components.back() != box.component) {
                decision.failing_components.push_back(box.component);
            }
        }
    }
    return decision;
}

std::vector<Graph> graph_classes(int d, bool connected_only) {
    if (d < 0 || d > kClassifyMaxVertices) {
        throw Error(ErrorKind::too_large,
                    "classification limited to d <= " + std::to_string(kClassifyMaxVertices));
    }
    // Every graph on k+1 vertices is some graph on k vertices plus one vertex.
    std::map<std::string, Graph> level{{canonical_form(Graph(0)), Graph(0)}};
    for (int k = 0; k < d; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, base] : level) {
            for (Mask nbrs = 0; nbrs < bit(k); ++nbrs) {
                Graph g(k + 1);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int u : bits_of(nbrs)) g.add_edge(u, k);
                auto perm = canonical_permutation(g);
                Graph canon = relabel(g, perm);
                next.emplace(graph6_encode(canon), canon);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : level) {
        if (connected_only && !g.is_connected()) continue;
        out.push_back(g);
    }
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return graph6_encode(a) < graph6_encode(b);
    });
    return out;
}

std::vector<ClassRow> classify_graphs(int d, bool connected_only) {
    std::vector<ClassRow> rows;
    for (auto& g : graph_classes(d, connected_only)) {
        ClassRow row;
        row.canonical = graph6_encode(g);
        row.graph = std::move(g);
        rows.push_back(std::move(row));
    }
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < rows.size(); i = next++) {
            auto& row = rows[i];
            try {
                auto decision = decide_labelable(row.graph);
                row.verdict = decision.labelable ? ClassRow::Verdict::labelable
                                                 : ClassRow::Verdict::not_labelable;
                row.witness = decision.witness;
            } catch (const Error& ex) {
                row.verdict = ClassRow::Verdict::undecided;
                row.note = ex.what();
            }
        }
    };
    const int workers = std::min<int>(worker_count(), static_cast<int>(rows.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

int worker_count() {
    if (const char* env = std::getenv("GAMMALAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace gammalab
