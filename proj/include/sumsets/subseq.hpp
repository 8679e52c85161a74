#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumsets/bounds.hpp"
#include "sumsets/seqset.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {

struct SubseqProfile {
    int ell = 1;
    GSet distinct{GroupModel::integers()};
    std::vector<int> rho; // aligned with distinct
    std::vector<int> mu;  // min(ℓ, ρ)
    GSet X{GroupModel::integers()}; // {a : μ(a) >= 2}
    std::vector<Element> X_order; // ρ-descending, ties in canonical order
    std::optional<int> t;

    std::int64_t mu_total() const;
};

SubseqProfile subseq_profile(const ElementSequence& a, int ell);

struct XSetsCheck {
    bool first_is_A = false;     // X_1 = A
    bool multiplicity = false;   // Σ_j χ_{X_j} = μ
    bool containment = false;    // X_1 ⋯ X_ℓ ⊆ Σ^ℓ(𝐚)
    bool total = false;          // Σ|X_j| = Σμ
    bool shape = false;          // |X_1| >= ... >= |X_r| >= 2, r >= 2, the rest singletons
    int r = 0;

    bool all() const { return first_is_A && multiplicity && containment && total && shape; }
};

// The X_j sets; requires ℓ <= m - 2, |X| >= 2 and t present.
std::vector<GSet> build_x_sets(const ElementSequence& a, int ell, const SubseqProfile& prof);
XSetsCheck check_x_sets(const ElementSequence& a, int ell, const std::vector<GSet>& xs,
                        const Budget& budget = {});

struct SubseqReport {
    std::int64_t actual = 0;
    std::int64_t mu_total = 0;
    bool equality = false;
    BoundReport disjunction;
    std::vector<std::string> applicable_theorems;
    std::vector<std::string> hypothesis_failures;
    std::optional<ProgressionType> progression; // A as a progression, when asserted
    std::vector<GSet> x_sets;
    std::optional<XSetsCheck> x_check;
    std::optional<bool> x_chain_equality; // |X_1⋯X_r| = Σ_{j<=r}|X_j| - r + 1 on extremal instances
    std::vector<std::string> violations;
};

SubseqReport subseq_inverse_check(const ElementSequence& a, int ell, const Budget& budget = {});

} // namespace sumsets
