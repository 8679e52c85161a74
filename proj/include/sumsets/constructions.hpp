#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/seqset.hpp"

namespace sumsets {

enum class Variant { C1, C2, C3 };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct ConstructionParams {
    Variant variant = Variant::C1;
    int ell = 2;
    std::vector<std::int64_t> k;     // k_1..k_m, nondecreasing
    std::vector<std::int64_t> n_aux; // C2: n_1..n_{m-ℓ}; C3: n_1..n_ℓ
    std::int64_t n_blocks = 0;       // C1: n with nℓ >= m

    int m() const { return static_cast<int>(k.size()); }
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const ConstructionParams& p);

// Interval family over ℤ; with free_mirror, the exponents of x in Free(1).
SetSequence construct(const ConstructionParams& p, bool free_mirror = false);

std::int64_t expected_equality_value(const ConstructionParams& p);

// The auxiliary sequence used for the lower half of the equality argument (C2, C3).
SetSequence auxiliary_sequence(const ConstructionParams& p);

struct ConstructionCheck {
    std::int64_t actual = 0;
    std::int64_t expected = 0;
    std::int64_t mu_bound = 0; // Σμ - ℓ + 1
    int max_incidence = 0;
    bool incidence_ok = false; // C1: never above ℓ; C2/C3: some element above ℓ
    std::optional<bool> auxiliary_ok;

    bool ok() const { return actual == expected && mu_bound == expected && incidence_ok && auxiliary_ok.value_or(true); }
};

ConstructionCheck check_construction(const ConstructionParams& p);

// Every valid parameter set with Σk <= max_sum, 2 <= ℓ < m <= max_m. C1 uses n = ⌈m/ℓ⌉.
void for_each_params(std::int64_t max_sum, int max_m, const std::function<void(const ConstructionParams&)>& fn);

SetSequence named_example(const std::string& name, bool free_mirror = false);
int named_example_ell(const std::string& name);

} // namespace sumsets
