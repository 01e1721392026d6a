#pragma once

#include <string>
#include <vector>

#include "gammalab/common.hpp"
#include "json.hpp"

namespace gammalab {

/// Subset of the variables x1..xn; variable i is bit i-1.
///
/// Doubles as the monomial prime (x_i : i in A) and as the support of a
/// square-free monomial.
struct VarSet {
    Mask bits = 0;

    static VarSet of(const std::vector<int>& vars);

    int size() const { return popcount(bits); }
    bool contains(int var) const { return var >= 1 && ((bits >> (var - 1)) & 1U); }
    bool meets(VarSet other) const { return (bits & other.bits) != 0; }
    bool subset_of(VarSet other) const { return (bits & ~other.bits) == 0; }
    std::vector<int> vars() const;

    friend bool operator==(VarSet, VarSet) = default;
};

/// Canonical order: by size, then lexicographically on the sorted variables.
bool canonical_less(VarSet a, VarSet b);

/// Inclusion-minimal members of `sets`, deduplicated and canonically sorted.
std::vector<VarSet> minimalize(std::vector<VarSet> sets);

/// Guards for the exact transversal kernel.
inline constexpr int kMaxVars = 24;
inline constexpr int kMaxFamily = 1024;

/// Inclusion-minimal sets meeting every member of `family`, canonically
/// sorted. An empty family yields the single empty set.
std::vector<VarSet> minimal_transversals(const std::vector<VarSet>& family, int n_vars);

/// Smallest size of a set meeting every member of `family`.
int min_transversal_size(const std::vector<VarSet>& family, int n_vars);

/// Square-free monomial ideal given by the supports of its minimal
/// generators. gens is a canonically sorted antichain; gens == {} is the
/// zero ideal. The unit ideal is not representable.
class SquareFreeIdeal {
public:
    SquareFreeIdeal() = default;
    /// Minimalizes and sorts; rejects empty supports and variables > n_vars.
    SquareFreeIdeal(int n_vars, std::vector<VarSet> gens);

    /// The monomial prime generated by the variables in `vars`.
    static SquareFreeIdeal prime(int n_vars, VarSet vars);

    int n_vars() const { return n_vars_; }
    const std::vector<VarSet>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// Square-free monomial with support `support` lies in the ideal.
    bool contains_monomial(VarSet support) const;

    friend bool operator==(const SquareFreeIdeal&, const SquareFreeIdeal&) = default;

private:
    int n_vars_ = 0;
    std::vector<VarSet> gens_;
};

/// Intersection of the monomial primes P_A, A in `sets`.
SquareFreeIdeal intersect_primes(int n_vars, const std::vector<VarSet>& sets);

/// Variable sets of the minimal primes of S/I.
std::vector<VarSet> minimal_primes(const SquareFreeIdeal& ideal);

SquareFreeIdeal intersect_ideals(const SquareFreeIdeal& a, const SquareFreeIdeal& b);
SquareFreeIdeal sum_ideals(const SquareFreeIdeal& a, const SquareFreeIdeal& b);

/// I is contained in the prime P_A.
bool ideal_in_prime(const SquareFreeIdeal& ideal, VarSet prime);

/// k[[x1..xn]]/I with every minimal prime generated by c variables.
struct RingPresentation {
    int n_vars = 0;
    SquareFreeIdeal ideal;
    std::vector<VarSet> min_primes;
    int codim = 0;

    int dim() const { return n_vars - codim; }
};

/// Throws not_equidimensional (listing prime sizes) for mixed-size primes.
RingPresentation make_ring(int n_vars, const SquareFreeIdeal& ideal);

/// Height of J*R. For a proper J this is the least size of a variable set
/// containing I + J minus the codimension of I: the quotient is catenary and
/// equidimensional, so ht(P_A R) = |A| - c for every monomial prime P_A
/// containing I, and the minimum over primes containing J is attained at a
/// monomial one.
int height_in_ring(const RingPresentation& ring, const SquareFreeIdeal& j);

/// "k[[x1,...,xn]]/(x1*x2, ...)".
std::string ring_text(const RingPresentation& ring);
/// "ideal(x1*x2, ...)" for external computer-algebra cross-checks.
std::string ideal_string(const SquareFreeIdeal& ideal);
std::string monomial_text(VarSet support);

nlohmann::json varset_to_json(VarSet set);
nlohmann::json ideal_to_json(const SquareFreeIdeal& ideal);
SquareFreeIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingPresentation& ring);

}  // namespace gammalab
