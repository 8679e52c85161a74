#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/bounds.hpp"
#include "sumsets/group.hpp"
#include "sumsets/seqset.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {

struct WitnessSets {
    std::vector<GSet> B;
    std::vector<GSet> A1;
    std::vector<GSet> A2;
    std::vector<GSet> S;
    GSet X;
    std::map<Element, int> L;
};

// Smallest i in [0, μ(a)] with i + #{j in (i, ℓ] : a ∈ A_j} = μ(a).
// Requires 1 <= η(a) <= μ(a) < ℓ.
int compute_L(const SetSequence& seq, int ell, const Element& a);

WitnessSets build_witness_sets(const SetSequence& seq, int ell);

struct WitnessCheck {
    bool split = true;        // A_j^2 = A_j^1 ∪ S_j and S_j = A_j^2 \ A_j^1
    bool multiplicity = true; // Σ_j χ_{A_j^2}(a) = μ(a)
    bool total = true;        // Σ_j |A_j^2| = Σ μ
    bool containment = true;  // A_1^2 ⋯ A_ℓ^2 ⊆ Π^ℓ
    bool growth = true;       // |A_j^2| >= |A_j|
    bool claim = true;        // a ∈ S_r lies in >= r of A_1..A_{r-1}, A_{ℓ+1}..A_m
    bool late_insertion = true; // 𝓛(a) > τ(a) for a ∈ X

    bool all() const { return split && multiplicity && total && containment && growth && claim && late_insertion; }
};

WitnessCheck check_witness_sets(const SetSequence& seq, int ell, const WitnessSets& ws,
                                const Budget& budget = {});

struct PrimeChain {
    std::vector<GSet> sets; // A'_j = {a : μ(a) >= j}, j = 1..ℓ
    bool hypothesis_met = false;
    bool total_matches = false;
    std::optional<bool> containment; // checked only when the hypothesis holds
};

PrimeChain build_prime_chain(const SetSequence& seq, int ell, const Budget& budget = {});

struct MinimizingWitness {
    Element g;
    std::vector<GSet> B;
    std::vector<ProgressionType> types;
    bool from_construction = false;
};

struct SearchBudget {
    Budget sets;
    std::size_t max_union = 12;
    std::size_t max_nodes = 2'000'000;
};

// Linked types (α_i, g, β_i) with α_{i+1} = β_i⁻¹ realizing each set, if any.
std::optional<std::vector<ProgressionType>> find_linked_chain(const std::vector<GSet>& sets);

// Checks the four defining conditions for the given candidate B_1..B_ℓ.
std::optional<MinimizingWitness> test_minimizing_candidate(const SetSequence& seq, int ell,
                                                           const std::vector<GSet>& candidate,
                                                           const GSet& pi, const MultiplicityProfile& prof);

// Throws BudgetExceeded when the search space is too large.
std::optional<MinimizingWitness> check_minimizing(const SetSequence& seq, int ell, const SearchBudget& budget = {});

bool verify_minimizing(const SetSequence& seq, int ell, const MinimizingWitness& w, const Budget& budget = {});

struct ExtremalReport {
    BoundReport bound;
    std::int64_t mu_total = 0;
    bool equality = false;
    std::vector<std::string> applicable_theorems;
    std::vector<std::string> hypothesis_failures;
    std::optional<RatioFamily> union_family;          // (A_i ∪ M)
    std::vector<std::optional<ProgressionType>> union_progressions; // each A_i ∪ M separately
    std::optional<ProgressionType> union_set_progression; // A with the family ratio
    std::optional<std::vector<ProgressionType>> prime_chain; // A'_1..A'_k
    std::optional<MinimizingWitness> minimizing;
    // Conclusions asserted by applicable theorems; empty means all held.
    std::vector<std::string> violations;
};

ExtremalReport classify_extremal(const SetSequence& seq, int ell, const SearchBudget& budget = {});

struct VosperReport {
    std::int64_t actual = 0;
    std::int64_t expected = 0; // Σ|A_i| - ℓ + 1
    bool equality = false;
    std::vector<std::string> applicable_theorems;
    std::vector<std::string> hypothesis_failures;
    std::optional<Element> difference; // common difference when all sets are APs with one d
    std::vector<ProgressionType> witnesses;

    bool applicable() const { return !applicable_theorems.empty(); }
    // Both directions of the biconditional, when applicable.
    bool consistent() const { return !applicable() || equality == difference.has_value(); }
};

// Abelian models only.
VosperReport vosper_classify(const GSet& a, const GSet& b);
VosperReport vosper_classify(const std::vector<GSet>& sets);

// Torsion-free models, |A_i| >= 2. Purely structural: the linked chain realizing
// A_1..A_ℓ if one exists. Expected present iff |A_1⋯A_ℓ| = Σ|A_i| - ℓ + 1.
std::optional<std::vector<ProgressionType>> brailovsky_classify(const std::vector<GSet>& sets);

struct SparseScanParams {
    int m = 3;
    int ell = 2;
    std::int64_t lo = 0;
    std::int64_t hi = 6;
    int shard = 0;
    int shards = 1;
};

struct SparseScanResult {
    std::int64_t scanned = 0;
    std::int64_t hypothesis_instances = 0;
    std::vector<SetSequence> violations;
};

// Exhaustive ℤ scan for equality instances with at most one element of multiplicity >= 2.
SparseScanResult no_sparse_extremal_scan(const SparseScanParams& params);

} // namespace sumsets
