#include "gammalab/gamma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace gammalab {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

VertexPartition partition_from(DisjointSets& sets, int count) {
    std::vector<Mask> by_root(count, 0);
    for (int i = 0; i < count; ++i) by_root[sets.find(i)] |= bit(i);
    VertexPartition out;
    for (Mask m : by_root)
        if (m) out.blocks.push_back(m);
    return out;
}

// Linked classes of minimal primes; assumes every minimal prime avoids V(J).
VertexPartition link_classes(const RingPresentation& ring, const SquareFreeIdeal& j) {
    const int k = static_cast<int>(ring.min_primes.size());
    DisjointSets sets(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            VarSet joined{ring.min_primes[a].bits | ring.min_primes[b].bits};
            if (!ideal_in_prime(j, joined)) sets.unite(a, b);
        }
    }
    return partition_from(sets, k);
}

// Monomial primes of R (variable sets containing a minimal prime) of height <= 1.
std::vector<VarSet> low_height_primes(const RingPresentation& ring) {
    std::vector<VarSet> out;
    for (VarSet p : ring.min_primes) {
        out.push_back(p);
        for (int v = 0; v < ring.n_vars; ++v) {
            if (!((p.bits >> v) & 1U)) out.push_back(VarSet{p.bits | bit(v)});
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Enumerates the up-sets U of the subset lattice of [n] that contain
// `required` and miss the empty set. U is the set of supports of monomials in
// a proper square-free monomial ideal, and each such ideal has exactly one U.
class UpsetEnumerator {
public:
    UpsetEnumerator(int n_vars, std::uint64_t required) : n_(n_vars), required_(required) {
        const int subsets = 1 << n_;
        for (int x = 0; x < subsets; ++x) order_.push_back(x);
        std::stable_sort(order_.begin(), order_.end(),
                         [](int a, int b) { return popcount(a) > popcount(b); });
        supersets_.assign(subsets, 0);
        for (int x = 0; x < subsets; ++x)
            for (int v = 0; v < n_; ++v)
                if (!((x >> v) & 1)) supersets_[x] |= bit(x | (1 << v));
    }

    void run(const std::function<void(std::uint64_t)>& visit) {
        visit_ = &visit;
        descend(0, 0);
    }

private:
    void descend(size_t k, std::uint64_t upset) {
        if (k == order_.size()) {
            (*visit_)(upset);
            return;
        }
        const int x = order_[k];
        const bool closed_above = (supersets_[x] & ~upset) == 0;
        if ((required_ >> x) & 1U) {
            descend(k + 1, upset | bit(x));
            return;
        }
        if (x != 0 && closed_above) descend(k + 1, upset | bit(x));
        descend(k + 1, upset);
    }

    int n_;
    std::uint64_t required_;
    std::vector<int> order_;
    std::vector<std::uint64_t> supersets_;
    const std::function<void(std::uint64_t)>* visit_ = nullptr;
};

SquareFreeIdeal ideal_of_upset(int n_vars, std::uint64_t upset) {
    std::vector<VarSet> gens;
    for (int x : bits_of(upset)) {
        bool minimal = true;
        for (int v = 0; v < n_vars && minimal; ++v) {
            if (((x >> v) & 1) && ((upset >> (x & ~(1 << v))) & 1U)) minimal = false;
        }
        if (minimal) gens.push_back(VarSet{static_cast<Mask>(x)});
    }
    return SquareFreeIdeal(n_vars, gens);
}

std::uint64_t upward_closure(int n_vars, std::uint64_t sets) {
    std::uint64_t out = 0;
    const int subsets = 1 << n_vars;
    for (int y = 0; y < subsets; ++y) {
        for (int x : bits_of(sets)) {
            if ((x & ~y) == 0) {
                out |= bit(y);
                break;
            }
        }
    }
    return out;
}

}  // namespace

GammaGraph gamma_from_ring(const RingPresentation& ring) {
    GammaGraph out;
    out.vertex_primes = ring.min_primes;
    const int k = static_cast<int>(ring.min_primes.size());
    out.graph = Graph(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (popcount(ring.min_primes[a].bits | ring.min_primes[b].bits) == ring.codim + 1) {
                out.graph.add_edge(a, b);
            }
        }
    }
    return out;
}

Realization realize(const Graph& g, const Labeling& labeling, int exhaustive_cap) {
    require_verified(g, labeling);
    if (g.size() == 0) throw Error(ErrorKind::precondition, "cannot realize the empty graph");
    std::vector<VarSet> primes;
    for (Mask l : labeling.labels) primes.push_back(VarSet{l});
    auto ideal = intersect_primes(labeling.n, primes);
    Realization out{make_ring(labeling.n, ideal), {}};

    auto expected = primes;
    std::sort(expected.begin(), expected.end(), canonical_less);
    if (out.ring.min_primes != expected) {
        throw Error(ErrorKind::invariant_violation, "minimal primes differ from the label sets");
    }
    out.report = theorem_report(out.ring, exhaustive_cap);
    const auto& gamma = out.report.gamma;
    std::vector<int> vertex_of_label(g.size());
    for (int v = 0; v < g.size(); ++v) {
        auto it = std::find(gamma.vertex_primes.begin(), gamma.vertex_primes.end(), primes[v]);
        vertex_of_label[v] = static_cast<int>(it - gamma.vertex_primes.begin());
    }
    for (int v = 0; v < g.size(); ++v) {
        for (int w = v + 1; w < g.size(); ++w) {
            if (g.adjacent(v, w) != gamma.graph.adjacent(vertex_of_label[v], vertex_of_label[w])) {
                throw Error(ErrorKind::invariant_violation,
                            "Gamma of the realized ring differs from the input graph");
            }
        }
    }
    return out;
}

VertexPartition spec_minus_components(const RingPresentation& ring, const SquareFreeIdeal& j) {
    if (height_in_ring(ring, j) < 1) {
        throw Error(ErrorKind::precondition,
                    "J R has height 0, so V(J) contains a minimal prime");
    }
    return link_classes(ring, j);
}

SquareFreeIdeal construct_height2_ideal(const RingPresentation& ring) {
    if (ring.dim() < 2) {
        throw Error(ErrorKind::precondition,
                    "dim R = " + std::to_string(ring.dim()) + " leaves no height-two ideal");
    }
    const auto gamma = gamma_from_ring(ring);
    const auto components = connected_components(gamma.graph);
    const int t = components.count();

    auto verified = [&](const SquareFreeIdeal& ideal) {
        int height = height_in_ring(ring, ideal);
        int classes = spec_minus_components(ring, ideal).count();
        if (height != 2 || classes != t) {
            throw Error(ErrorKind::invariant_violation,
                        "height-two construction gave height " + std::to_string(height) + " and " +
                            std::to_string(classes) + " components, expected 2 and " +
                            std::to_string(t));
        }
        return ideal;
    };

    if (t == 1) {
        // Least (c+2)-set containing a minimal prime: a height-two prime.
        std::optional<VarSet> best;
        for (VarSet p : ring.min_primes) {
            auto outside = bits_of(~p.bits & low_bits(ring.n_vars));
            VarSet q{p.bits | bit(outside[0]) | bit(outside[1])};
            if (!best || canonical_less(q, *best)) best = q;
        }
        return verified(SquareFreeIdeal::prime(ring.n_vars, *best));
    }

    std::vector<SquareFreeIdeal> component_ideals;
    std::vector<std::vector<VarSet>> component_primes;
    for (Mask block : components.blocks) {
        std::vector<VarSet> primes;
        for (int v : bits_of(block)) primes.push_back(gamma.vertex_primes[v]);
        component_primes.push_back(primes);
        component_ideals.push_back(intersect_primes(ring.n_vars, primes));
    }
    auto pair_sum = [&](int a, int b) { return sum_ideals(component_ideals[a], component_ideals[b]); };
    auto intersect_other_pairs = [&](SquareFreeIdeal acc) {
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                if (a != 0 || b != 1) acc = intersect_ideals(acc, pair_sum(a, b));
        return acc;
    };

    const auto first_pair = pair_sum(0, 1);
    auto ideal = intersect_other_pairs(first_pair);
    int height = height_in_ring(ring, ideal);
    if (height == 2) return verified(ideal);
    if (height < 2) {
        throw Error(ErrorKind::invariant_violation, "pairwise component sums have height below two");
    }

    // Height above two: swap the first minimal prime Q1 over the first pair
    // sum for a height-two prime q inside it.
    std::vector<VarSet> over = ring.ideal.gens();
    over.insert(over.end(), first_pair.gens().begin(), first_pair.gens().end());
    auto primes_over = minimal_transversals(over, ring.n_vars);
    const VarSet q1 = primes_over.front();
    std::optional<VarSet> inner;
    for (VarSet p : component_primes[0]) {
        if (p.subset_of(q1)) {
            inner = p;
            break;
        }
    }
    if (!inner) throw Error(ErrorKind::invariant_violation, "no minimal prime inside Q1");
    auto extra = bits_of(q1.bits & ~inner->bits);
    if (extra.size() < 2) throw Error(ErrorKind::invariant_violation, "Q1 has height below three");
    VarSet q{inner->bits | bit(extra[0]) | bit(extra[1])};

    std::vector<VarSet> replacement{q};
    replacement.insert(replacement.end(), primes_over.begin() + 1, primes_over.end());
    auto adjusted = intersect_primes(ring.n_vars, replacement);
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            if (a != 0 || b != 1) adjusted = intersect_ideals(adjusted, pair_sum(a, b));
    return verified(adjusted);
}

SpecMaximum exhaustive_spec_maximum(const RingPresentation& ring) {
    if (ring.n_vars > kExhaustiveSpecGuard) {
        throw Error(ErrorKind::too_large, "exhaustive ideal enumeration limited to " +
                                              std::to_string(kExhaustiveSpecGuard) + " variables");
    }
    const int n = ring.n_vars;
    const Mask all = low_bits(n);
    // J has height >= 2 iff it avoids every monomial prime of height <= 1,
    // i.e. the complement of each such prime lies in the up-set of J.
    std::uint64_t required = 0;
    for (VarSet a : low_height_primes(ring)) required |= bit(static_cast<int>(all & ~a.bits));
    required = upward_closure(n, required);

    SpecMaximum out;
    if (required & 1U) return out;  // only the unit ideal would qualify

    const int k = static_cast<int>(ring.min_primes.size());
    std::vector<std::pair<std::pair<int, int>, int>> links;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            links.push_back({{a, b}, static_cast<int>(all & ~(ring.min_primes[a].bits | ring.min_primes[b].bits))});

    std::uint64_t best_upset = 0;
    UpsetEnumerator(n, required).run([&](std::uint64_t upset) {
        ++out.ideals_examined;
        DisjointSets sets(k);
        for (const auto& [pair, comp] : links)
            if ((upset >> comp) & 1U) sets.unite(pair.first, pair.second);
        int classes = 0;
        for (int i = 0; i < k; ++i) classes += sets.find(i) == i;
        if (classes > out.max_components) {
            out.max_components = classes;
            best_upset = upset;
        }
    });
    if (out.ideals_examined > 0) out.argmax = ideal_of_upset(n, best_upset);
    return out;
}

GammaReport theorem_report(const RingPresentation& ring, int exhaustive_cap) {
    GammaReport report;
    report.gamma = gamma_from_ring(ring);
    report.beta_gamma = connected_components(report.gamma.graph).count();
    report.zeta_top_local_cohomology = report.beta_gamma;
    report.zeta_canonical_module = report.beta_gamma;
    report.max_ideals_s2ification = report.beta_gamma;
    report.notes.push_back(
        "zeta(H^dim), zeta(omega) and |m-Spec(T)| are set equal to beta(Gamma_R) by the "
        "component theorem; they are not independently computed");

    if (ring.dim() <= 1) {
        report.max_beta_spec = 1;
        report.max_beta_spec_exhaustive = true;
        report.notes.push_back("dim R <= 1: Gamma_R is complete and every quantity is 1");
        return report;
    }

    auto witness_ideal = construct_height2_ideal(ring);
    report.witness = HeightTwoWitness{witness_ideal, height_in_ring(ring, witness_ideal),
                                      spec_minus_components(ring, witness_ideal).count()};

    if (ring.n_vars <= std::min(exhaustive_cap, kExhaustiveSpecGuard)) {
        auto maximum = exhaustive_spec_maximum(ring);
        report.max_beta_spec = maximum.max_components;
        report.max_beta_spec_exhaustive = true;
        report.ideals_examined = maximum.ideals_examined;
        return report;
    }

    // Beyond the cap: the witness gives a lower bound; random ideals of
    // height >= 2 spot-check the upper bound.
    report.max_beta_spec = report.witness->components;
    std::vector<VarSet> base;
    for (VarSet a : low_height_primes(ring)) base.push_back(VarSet{low_bits(ring.n_vars) & ~a.bits});
    std::mt19937_64 rng(0x5eed);
    constexpr int kSamples = 64;
    for (int i = 0; i < kSamples; ++i) {
        auto gens = base;
        int extra = static_cast<int>(rng() % 4);
        for (int e = 0; e < extra; ++e) {
            Mask m = rng() & low_bits(ring.n_vars);
            if (m) gens.push_back(VarSet{m});
        }
        auto classes = link_classes(ring, SquareFreeIdeal(ring.n_vars, gens)).count();
        report.max_beta_spec = std::max(report.max_beta_spec, classes);
        ++report.sampled_checks;
    }
    report.notes.push_back("max over J not exhausted: witness lower bound with " +
                           std::to_string(report.sampled_checks) + " sampled upper-bound checks");
    return report;
}

nlohmann::json report_to_json(const GammaReport& report) {
    nlohmann::json primes = nlohmann::json::array();
    for (VarSet p : report.gamma.vertex_primes) primes.push_back(varset_to_json(p));
    nlohmann::json j = {
        {"graph6", graph6_encode(report.gamma.graph)},
        {"gamma", graph_to_json(report.gamma.graph)},
        {"vertex_primes", primes},
        {"beta_gamma", report.beta_gamma},
        {"equidimensional", report.equidimensional},
        {"quantities",
         {{"zeta_H", report.zeta_top_local_cohomology},
          {"zeta_omega", report.zeta_canonical_module},
          {"mspec_T", report.max_ideals_s2ification},
          {"max_beta_spec", report.max_beta_spec},
          {"max_beta_spec_exhaustive", report.max_beta_spec_exhaustive},
          {"beta_gamma", report.beta_gamma}}},
        {"ideals_examined", report.ideals_examined},
        {"sampled_checks", report.sampled_checks},
        {"notes", report.notes},
    };
    if (report.witness) {
        j["witness"] = {{"ideal", ideal_to_json(report.witness->ideal)},
                        {"height", report.witness->height},
                        {"components", report.witness->components}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace gammalab
