#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/group.hpp"
#include "sumsets/seqset.hpp"

namespace sumsets {

enum class BoundName {
    CauchyDavenport,
    KemperTF,
    Kneser,
    DGM,
    TorsionFreeMu,
    ZpMu,
    AbelianMu,
    SubseqHamidoune,
};

std::string to_string(BoundName b);
std::optional<BoundName> bound_from_string(const std::string& s);

struct BoundWitness {
    std::optional<GSet> stabilizer;
    std::vector<int> coset_mu;         // μ(Q) per coset of the stabilizer (DGM)
    std::optional<std::int64_t> mu_total;
    std::optional<std::int64_t> p_of_g; // absent when p(G) = ∞
    // Subsequence disjunction.
    std::optional<bool> size_disjunct;
    std::optional<bool> membership_disjunct;
};

struct BoundReport {
    BoundName bound;
    std::int64_t value = 0;
    std::int64_t actual = 0;
    std::int64_t slack = 0;
    BoundWitness witness;

    // slack >= 0, or for the subsequence disjunction, one disjunct holds.
    bool holds() const;
};

// Plain sumset A_1 + ... + A_m in Z_p.
BoundReport cauchy_davenport_bound(const SetSequence& seq);
// A_1 ⋯ A_m in listed order, torsion-free models.
BoundReport kemperman_tf_bound(const SetSequence& seq, const Budget& budget = {});
BoundReport kneser_bound(const GSet& a, const GSet& b);
BoundReport dgm_bound(const SetSequence& seq, int ell);
BoundReport torsion_free_mu_bound(const SetSequence& seq, int ell, const Budget& budget = {});
BoundReport zp_mu_bound(const SetSequence& seq, int ell);
BoundReport abelian_mu_bound(const SetSequence& seq, int ell, const Budget& budget = {});
BoundReport hamidoune_check(const ElementSequence& a, int ell, const Budget& budget = {});

// Every bound whose hypotheses the instance meets.
std::vector<BoundReport> applicable_bounds(const SetSequence& seq, int ell, const Budget& budget = {});

bool is_prime(std::int64_t n);

} // namespace sumsets
