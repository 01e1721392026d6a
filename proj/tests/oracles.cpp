#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

namespace {

int pc(Mask m) { return __builtin_popcountll(m); }

}  // namespace

bool is_admissible(const Graph& g, const Labeling& l) {
    const int d = g.size();
    if (l.size() != d) return false;
    Mask all = 0;
    for (Mask m : l.labels) {
        if (pc(m) != l.s) return false;
        all |= m;
    }
    Mask full = l.n == 64 ? ~Mask{0} : ((Mask{1} << l.n) - 1);
    if (all != full) return false;
    for (int v = 0; v < d; ++v) {
        for (int w = v + 1; w < d; ++w) {
            if (l.labels[v] == l.labels[w]) return false;
            bool linked = pc(l.labels[v] & l.labels[w]) == l.s - 1;
            if (linked != g.adjacent(v, w)) return false;
        }
    }
    return true;
}

namespace {

// Highest-degree vertex first, then breadth-first, so constraints bite early.
std::vector<int> search_order(const Graph& g) {
    const int d = g.size();
    std::vector<int> order;
    std::vector<bool> seen(d, false);
    while (static_cast<int>(order.size()) < d) {
        int start = -1;
        for (int v = 0; v < d; ++v)
            if (!seen[v] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
        seen[start] = true;
        order.push_back(start);
        for (size_t head = order.size() - 1; head < order.size(); ++head)
            for (int w = 0; w < d; ++w)
                if (!seen[w] && g.adjacent(order[head], w)) {
                    seen[w] = true;
                    order.push_back(w);
                }
    }
    return order;
}

}  // namespace

std::vector<Labeling> all_labelings(const Graph& g, int s, int n) {
    std::vector<Mask> subsets;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (pc(m) == s) subsets.push_back(m);
    const int d = g.size();
    std::vector<Labeling> out;
    std::vector<Mask> labels(d);
    const auto order = search_order(g);
    std::function<void(int)> go = [&](int v) {
        if (v == d) {
            Labeling l{n, s, labels};
            if (is_admissible(g, l)) out.push_back(l);
            return;
        }
        for (Mask m : subsets) {
            bool ok = true;
            for (int i = 0; i < v && ok; ++i) {
                int w = order[i];
                int meet = pc(m & labels[w]);
                ok = m != labels[w] && ((meet == s - 1) == g.adjacent(order[v], w));
            }
            if (!ok) continue;
            labels[order[v]] = m;
            go(v + 1);
        }
    };
    go(0);
    return out;
}

bool has_labeling(const Graph& g, int s, int n) {
    // Stops at the first hit.
    std::vector<Mask> subsets;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (pc(m) == s) subsets.push_back(m);
    const int d = g.size();
    std::vector<Mask> labels(d);
    const auto order = search_order(g);
    std::function<bool(int)> go = [&](int v) {
        if (v == d) return is_admissible(g, Labeling{n, s, labels});
        for (Mask m : subsets) {
            bool ok = true;
            for (int i = 0; i < v && ok; ++i) {
                int w = order[i];
                int meet = pc(m & labels[w]);
                ok = m != labels[w] && ((meet == s - 1) == g.adjacent(order[v], w));
            }
            if (!ok) continue;
            labels[order[v]] = m;
            if (go(v + 1)) return true;
        }
        return false;
    };
    return go(0);
}

bool labelable_by_brute_force(const Graph& g, int max_extra_ground) {
    const int d = g.size();
    if (d <= 1) return true;
    // Connected graphs need n <= s + d - 1; otherwise any union size up to s*d.
    const bool connected = g.is_connected();
    for (int s = 1; s <= std::max(2, d); ++s)
        for (int n = s; n <= (connected ? s + d - 1 + max_extra_ground : s * d); ++n)
            if (has_labeling(g, s, n)) return true;
    return false;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int orbit_count(const std::vector<Labeling>& labelings, const std::vector<std::vector<int>>& vertex_perms) {
    if (labelings.empty()) return 0;
    const int n = labelings.front().n;
    const auto ground_perms = all_permutations(n);
    std::vector<std::vector<int>> vperms = vertex_perms;
    if (vperms.empty()) {
        std::vector<int> id(labelings.front().size());
        std::iota(id.begin(), id.end(), 0);
        vperms.push_back(id);
    }
    std::set<std::vector<Mask>> seen;
    int orbits = 0;
    for (const auto& l : labelings) {
        if (seen.count(l.labels)) continue;
        ++orbits;
        for (const auto& sigma : ground_perms) {
            std::vector<Mask> moved(l.size());
            for (int v = 0; v < l.size(); ++v) {
                Mask m = 0;
                for (int e = 0; e < n; ++e)
                    if ((l.labels[v] >> e) & 1U) m |= Mask{1} << sigma[e];
                moved[v] = m;
            }
            for (const auto& tau : vperms) {
                std::vector<Mask> image(l.size());
                for (int v = 0; v < l.size(); ++v) image[v] = moved[tau[v]];
                seen.insert(image);
            }
        }
    }
    return orbits;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    for (const auto& p : all_permutations(a.size())) {
        bool ok = true;
        for (int v = 0; v < a.size() && ok; ++v)
            for (int w = v + 1; w < a.size() && ok; ++w) ok = a.adjacent(v, w) == b.adjacent(p[v], p[w]);
        if (ok) return true;
    }
    return false;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& p : all_permutations(g.size())) {
        bool ok = true;
        for (int v = 0; v < g.size() && ok; ++v)
            for (int w = v + 1; w < g.size() && ok; ++w) ok = g.adjacent(v, w) == g.adjacent(p[v], p[w]);
        if (ok) out.push_back(p);
    }
    return out;
}

int class_count(int d, bool connected_only) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < d; ++v)
        for (int w = v + 1; w < d; ++w) pairs.emplace_back(v, w);
    const auto perms = all_permutations(d);
    std::set<std::uint64_t> classes;
    for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << pairs.size()); ++edges) {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& p : perms) {
            std::uint64_t code = 0;
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (!((edges >> i) & 1U)) continue;
                int a = std::min(p[pairs[i].first], p[pairs[i].second]);
                int b = std::max(p[pairs[i].first], p[pairs[i].second]);
                auto idx = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin();
                code |= std::uint64_t{1} << idx;
            }
            best = std::min(best, code);
        }
        if (connected_only) {
            Graph g(d);
            for (size_t i = 0; i < pairs.size(); ++i)
                if ((edges >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
            // reachability closure
            std::vector<int> comp(d);
            std::iota(comp.begin(), comp.end(), 0);
            for (int round = 0; round < d; ++round)
                for (auto [a, b] : pairs)
                    if (g.adjacent(a, b)) comp[a] = comp[b] = std::min(comp[a], comp[b]);
            if (d > 0 && std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; })) continue;
        }
        classes.insert(best);
    }
    return static_cast<int>(classes.size());
}

bool meets_all(Mask s, const std::vector<Mask>& family) {
    for (Mask f : family)
        if (!(s & f)) return false;
    return true;
}

bool contains_subset(Mask s, const std::vector<Mask>& gens) {
    for (Mask g : gens)
        if ((g & ~s) == 0) return true;
    return false;
}

std::vector<Mask> minimal_covers(const std::vector<Mask>& family, int n) {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (!meets_all(s, family)) continue;
        bool minimal = true;
        for (int e = 0; e < n && minimal; ++e)
            if (((s >> e) & 1U) && meets_all(s & ~(Mask{1} << e), family)) minimal = false;
        if (minimal) out.push_back(s);
    }
    return out;
}

int chain_height(const std::vector<Mask>& ideal_gens, const std::vector<Mask>& j_gens, int n) {
    const Mask subsets = Mask{1} << n;
    // h[A] = length of the longest chain of primes over I ending at P_A.
    std::vector<int> h(subsets, -1);
    std::vector<Mask> order;
    for (Mask a = 0; a < subsets; ++a) order.push_back(a);
    std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return pc(a) < pc(b); });
    int best = -1;
    for (Mask a : order) {
        if (!meets_all(a, ideal_gens)) continue;
        int longest = 0;
        for (Mask b = (a - 1) & a; a; b = (b - 1) & a) {  // proper subsets of a
            if (h[b] >= 0) longest = std::max(longest, h[b] + 1);
            if (b == 0) break;
        }
        h[a] = longest;
        if (meets_all(a, j_gens) && (best < 0 || h[a] < best)) best = h[a];
    }
    return best;
}

std::vector<int> poset_component_of(const std::vector<Mask>& ideal_gens, const std::vector<Mask>& j_gens,
                                    int n, const std::vector<Mask>& primes) {
    const Mask subsets = Mask{1} << n;
    std::vector<Mask> alive;
    for (Mask a = 0; a < subsets; ++a)
        if (meets_all(a, ideal_gens) && !meets_all(a, j_gens)) alive.push_back(a);
    std::vector<int> parent(alive.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t i = 0; i < alive.size(); ++i)
        for (size_t k = 0; k < alive.size(); ++k)
            if (i != k && (alive[i] & ~alive[k]) == 0) parent[find(i)] = find(k);
    std::vector<int> out;
    for (Mask p : primes) {
        auto it = std::find(alive.begin(), alive.end(), p);
        out.push_back(it == alive.end() ? -1 : find(static_cast<int>(it - alive.begin())));
    }
    return out;
}

int count_distinct(const std::vector<int>& ids) {
    return static_cast<int>(std::set<int>(ids.begin(), ids.end()).size());
}

std::vector<Mask> random_antichain(std::mt19937_64& rng, int n, int max_members) {
    std::vector<Mask> out;
    int members = 1 + static_cast<int>(rng() % max_members);
    for (int i = 0; i < members * 4 && static_cast<int>(out.size()) < members; ++i) {
        Mask m = rng() & ((Mask{1} << n) - 1);
        if (!m) continue;
        bool comparable = false;
        for (Mask x : out) comparable |= (x & ~m) == 0 || (m & ~x) == 0;
        if (!comparable) out.push_back(m);
    }
    return out;
}

std::string graph6_reference(const Graph& g) {
    const int n = g.size();
    std::string out;
    out += static_cast<char>(n + 63);
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
        out += static_cast<char>(value + 63);
    }
    return out;
}

}  // namespace oracle
