#include "gammalab/monomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gammalab {

namespace {

void check_n_vars(int n_vars) {
    if (n_vars < 0 || n_vars > kMaxVars) {
        throw Error(ErrorKind::too_large, "variable count " + std::to_string(n_vars) +
                                              " outside 0.." + std::to_string(kMaxVars));
    }
}

void check_same_ring(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
    if (a.n_vars() != b.n_vars()) {
        throw Error(ErrorKind::validation, "ideals live in rings with " +
                                               std::to_string(a.n_vars()) + " and " +
                                               std::to_string(b.n_vars()) + " variables");
    }
}

// Branch on the uncovered member with the fewest free variables; branch i
// takes its i-th free variable and forbids the earlier ones, so each
// transversal is reached once. A chosen variable that has lost every private
// member can never regain one, which prunes non-minimal branches early.
class TransversalSearch {
public:
    explicit TransversalSearch(const std::vector<VarSet>& family) {
        for (VarSet s : family) family_.push_back(s.bits);
    }

    void run(const std::function<void(Mask)>& emit) {
        emit_ = &emit;
        descend(0, 0);
    }

private:
    bool has_private_member(Mask chosen, int var) const {
        for (Mask e : family_) {
            if ((e & chosen) == bit(var)) return true;
        }
        return false;
    }

    void descend(Mask chosen, Mask excluded) {
        Mask branch = 0;
        int best = kMaxBits + 1;
        for (Mask e : family_) {
            if (e & chosen) continue;
            Mask free = e & ~excluded;
            if (popcount(free) < best) {
                best = popcount(free);
                branch = free;
                if (best == 0) return;
            }
        }
        if (best == kMaxBits + 1) {
            (*emit_)(chosen);
            return;
        }
        Mask forbidden = excluded;
        for (int v : bits_of(branch)) {
            Mask next = chosen | bit(v);
            bool minimal = true;
            for (int u : bits_of(next)) {
                if (!has_private_member(next, u)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) descend(next, forbidden);
            forbidden |= bit(v);
        }
    }

    std::vector<Mask> family_;
    const std::function<void(Mask)>* emit_ = nullptr;
};

std::vector<VarSet> checked_family(const std::vector<VarSet>& family, int n_vars) {
    check_n_vars(n_vars);
    auto minimal = minimalize(family);
    if (static_cast<int>(minimal.size()) > kMaxFamily) {
        throw Error(ErrorKind::too_large, "set family of " + std::to_string(minimal.size()) +
                                              " members exceeds " + std::to_string(kMaxFamily));
    }
    for (VarSet s : minimal) {
        if (s.bits & ~low_bits(n_vars)) {
            throw Error(ErrorKind::validation, "set uses a variable beyond x" + std::to_string(n_vars));
        }
    }
    return minimal;
}

}  // namespace

VarSet VarSet::of(const std::vector<int>& vars) {
    VarSet out;
    for (int v : vars) {
        if (v < 1 || v > kMaxBits) {
            throw Error(ErrorKind::validation, "variable index " + std::to_string(v) + " out of range");
        }
        out.bits |= bit(v - 1);
    }
    return out;
}

std::vector<int> VarSet::vars() const {
    auto out = bits_of(bits);
    for (int& v : out) ++v;
    return out;
}

bool canonical_less(VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.bits == b.bits) return false;
    // The first differing variable decides: whoever holds it sorts first.
    Mask diff = a.bits ^ b.bits;
    return (a.bits >> lowest_bit(diff)) & 1U;
}

std::vector<VarSet> minimalize(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (VarSet s : sets) {
        bool dominated = false;
        for (VarSet kept : out) {
            if (kept.subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    return out;
}

std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& family, int n_vars) {
    auto minimal = checked_family(family, n_vars);
    std::vector<VarSet> out;
    TransversalSearch(minimal).run([&](Mask t) { out.push_back(VarSet{t}); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

int min_transversal_size(const std::vector<VarSet>& family, int n_vars) {
    auto all = minimal_transversals(family, n_vars);
    if (all.empty()) throw Error(ErrorKind::validation, "family contains the empty set");
    return all.front().size();
}

SquareFreeIdeal::SquareFreeIdeal(int n_vars, std::vector<VarSet> gens) : n_vars_(n_vars) {
    check_n_vars(n_vars);
    for (VarSet g : gens) {
        if (g.bits == 0) {
            throw Error(ErrorKind::validation, "generator with empty support gives the unit ideal");
        }
        if (g.bits & ~low_bits(n_vars)) {
            throw Error(ErrorKind::validation,
                        "generator uses a variable beyond x" + std::to_string(n_vars));
        }
    }
    gens_ = minimalize(std::move(gens));
}

SquareFreeIdeal SquareFreeIdeal::prime(int n_vars, VarSet vars) {
    std::vector<VarSet> gens;
    for (int v : bits_of(vars.bits)) gens.push_back(VarSet{bit(v)});
    return SquareFreeIdeal(n_vars, gens);
}

bool SquareFreeIdeal::contains_monomial(VarSet support) const {
    for (VarSet g : gens_) {
        if (g.subset_of(support)) return true;
    }
    return false;
}

SquareFreeIdeal intersect_primes(int n_vars, const std::vector<VarSet>& sets) {
    if (sets.empty()) throw Error(ErrorKind::validation, "intersection over an empty family of primes");
    for (VarSet s : sets) {
        if (s.bits == 0) throw Error(ErrorKind::validation, "the zero ideal is not a monomial prime here");
    }
    return SquareFreeIdeal(n_vars, minimal_transversals(sets, n_vars));
}

std::vector<VarSet> minimal_primes(const SquareFreeIdeal& ideal) {
    return minimal_transversals(ideal.gens(), ideal.n_vars());
}

SquareFreeIdeal intersect_ideals(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
    check_same_ring(a, b);
    std::vector<VarSet> lcms;
    for (VarSet g : a.gens())
        for (VarSet h : b.gens()) lcms.push_back(VarSet{g.bits | h.bits});
    return SquareFreeIdeal(a.n_vars(), lcms);
}

SquareFreeIdeal sum_ideals(const SquareFreeIdeal& a, const SquareFreeIdeal& b) {
    check_same_ring(a, b);
    std::vector<VarSet> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return SquareFreeIdeal(a.n_vars(), gens);
}

bool ideal_in_prime(const SquareFreeIdeal& ideal, VarSet prime) {
    for (VarSet g : ideal.gens()) {
        if (!g.meets(prime)) return false;
    }
    return true;
}

RingPresentation make_ring(int n_vars, const SquareFreeIdeal& ideal) {
    if (ideal.n_vars() != n_vars) {
        throw Error(ErrorKind::validation, "ideal declared over " + std::to_string(ideal.n_vars()) +
                                               " variables, ring has " + std::to_string(n_vars));
    }
    RingPresentation ring;
    ring.n_vars = n_vars;
    ring.ideal = ideal;
    ring.min_primes = minimal_primes(ideal);
    ring.codim = ring.min_primes.front().size();
    for (VarSet p : ring.min_primes) {
        if (p.size() != ring.codim) {
            std::ostringstream msg;
            msg << "minimal primes have different sizes:";
            for (VarSet q : ring.min_primes) msg << " (" << monomial_text(q) << "):" << q.size();
            throw Error(ErrorKind::not_equidimensional, msg.str());
        }
    }
    return ring;
}

int height_in_ring(const RingPresentation& ring, const SquareFreeIdeal& j) {
    if (j.n_vars() != ring.n_vars) {
        throw Error(ErrorKind::validation, "ideal and ring have different variable counts");
    }
    std::vector<VarSet> both = ring.ideal.gens();
    both.insert(both.end(), j.gens().begin(), j.gens().end());
    return min_transversal_size(both, ring.n_vars) - ring.codim;
}

std::string monomial_text(VarSet support) {
    std::string out;
    for (int v : support.vars()) {
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(v);
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string generator_list(const SquareFreeIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (VarSet g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += monomial_text(g);
    }
    return out;
}

}  // namespace

std::string ring_text(const RingPresentation& ring) {
    std::string vars;
    for (int i = 1; i <= ring.n_vars; ++i) {
        if (i > 1) vars += ',';
        vars += "x" + std::to_string(i);
    }
    return "k[[" + vars + "]]/(" + generator_list(ring.ideal) + ")";
}

std::string ideal_string(const SquareFreeIdeal& ideal) {
    return "ideal(" + generator_list(ideal) + ")";
}

nlohmann::json varset_to_json(VarSet set) { return set.vars(); }

nlohmann::json ideal_to_json(const SquareFreeIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (VarSet g : ideal.gens()) gens.push_back(varset_to_json(g));
    return {{"n_vars", ideal.n_vars()}, {"gens", gens}};
}

SquareFreeIdeal ideal_from_json(const nlohmann::json& j) {
    try {
        int n_vars = j.at("n_vars").get<int>();
        check_n_vars(n_vars);
        std::vector<VarSet> gens;
        for (const auto& g : j.at("gens")) {
            auto vars = g.get<std::vector<int>>();
            for (int v : vars) {
                if (v < 1 || v > n_vars) {
                    throw Error(ErrorKind::validation, "variable x" + std::to_string(v) +
                                                           " outside x1..x" + std::to_string(n_vars));
                }
            }
            gens.push_back(VarSet::of(vars));
        }
        return SquareFreeIdeal(n_vars, gens);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::parse, std::string("ideal JSON: ") + ex.what());
    }
}

nlohmann::json ring_to_json(const RingPresentation& ring) {
    nlohmann::json primes = nlohmann::json::array();
    for (VarSet p : ring.min_primes) primes.push_back(varset_to_json(p));
    return {{"n_vars", ring.n_vars},
            {"ideal", ideal_to_json(ring.ideal)},
            {"min_primes", primes},
            {"codim", ring.codim},
            {"dim", ring.dim()},
            {"text", ring_text(ring)},
            {"ideal_string", ideal_string(ring.ideal)}};
}

}  // namespace gammalab
