#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sumsets/seqset.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {

using Rng = std::mt19937_64;

struct FuzzLimits {
    int max_m = 6;
    int max_set = 5;
    std::int64_t z_universe = 16; // ℤ elements drawn from [0, z_universe)
    int word_length = 2;          // free-group elements of at most this many letters
};

Element random_element(const GroupModel& model, Rng& rng, const FuzzLimits& lim);
// min_size is clamped to the group order.
GSet random_set(const GroupModel& model, Rng& rng, int min_size, int max_size, const FuzzLimits& lim);
SetSequence random_sequence(const GroupModel& model, Rng& rng, const FuzzLimits& lim, int min_set = 1);
ElementSequence random_elements(const GroupModel& model, Rng& rng, const FuzzLimits& lim);
ProgressionType random_progression(const GroupModel& model, Rng& rng, const FuzzLimits& lim);

// ℤ, ℤ_p for p in {2,3,5,7,11,13}, ℤ_6, ℤ_2+ℤ_4, F_2.
std::vector<GroupModel> standard_models();

int uniform(Rng& rng, int lo, int hi);

} // namespace sumsets
