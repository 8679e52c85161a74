#include "sumsets/fuzz.hpp"

#include <algorithm>

namespace sumsets {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Element random_element(const GroupModel& model, Rng& rng, const FuzzLimits& lim)
{
    switch (model.kind()) {
    case ModelKind::Integers:
        return Element(static_cast<std::int64_t>(uniform(rng, 0, static_cast<int>(lim.z_universe) - 1)));
    case ModelKind::Cyclic:
    case ModelKind::FiniteAbelian:
        return model.element_at(std::uniform_int_distribution<std::int64_t>(0, model.order() - 1)(rng));
    case ModelKind::Free: {
        Word w;
        const int len = uniform(rng, 0, lim.word_length);
        for (int i = 0; i < len; ++i)
            w.push_back({uniform(rng, 0, model.rank() - 1), uniform(rng, 0, 1) ? 1 : -1});
        return model.make(w);
    }
    }
    return model.identity();
}

GSet random_set(const GroupModel& model, Rng& rng, int min_size, int max_size, const FuzzLimits& lim)
{
    std::int64_t room = model.is_finite() ? model.order() : lim.z_universe;
    if (model.kind() == ModelKind::Free) {
        // Number of reduced words with at most word_length letters.
        room = 1;
        std::int64_t layer = 2 * model.rank();
        for (int k = 1; k <= lim.word_length; ++k) {
            room += layer;
            layer *= 2 * model.rank() - 1;
        }
    }
    const int hi = static_cast<int>(std::min<std::int64_t>(max_size, room));
    const int lo = std::min(min_size, hi);
    const int want = uniform(rng, lo, hi);
    std::vector<Element> e;
    GSet s(model);
    while (static_cast<int>(s.size()) < want) {
        e.push_back(random_element(model, rng, lim));
        s = GSet(model, e);
    }
    return s;
}

SetSequence random_sequence(const GroupModel& model, Rng& rng, const FuzzLimits& lim, int min_set)
{
    const int m = uniform(rng, 1, lim.max_m);
    std::vector<GSet> sets;
    for (int i = 0; i < m; ++i)
        sets.push_back(random_set(model, rng, std::max(1, min_set), lim.max_set, lim));
    return SetSequence(model, std::move(sets));
}

ElementSequence random_elements(const GroupModel& model, Rng& rng, const FuzzLimits& lim)
{
    const int m = uniform(rng, 1, 2 * lim.max_m);
    // A small pool makes repeated terms common.
    const auto pool = random_set(model, rng, 1, lim.max_set, lim);
    std::vector<Element> terms;
    for (int i = 0; i < m; ++i)
        terms.push_back(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))]);
    return ElementSequence(model, std::move(terms));
}

ProgressionType random_progression(const GroupModel& model, Rng& rng, const FuzzLimits& lim)
{
    Element g = model.identity();
    while (g == model.identity())
        g = random_element(model, rng, lim);
    return {random_element(model, rng, lim), g, random_element(model, rng, lim), uniform(rng, 1, lim.max_set)};
}

std::vector<GroupModel> standard_models()
{
    std::vector<GroupModel> out{GroupModel::integers()};
    for (std::int64_t p : {2, 3, 5, 7, 11, 13})
        out.push_back(GroupModel::cyclic(p));
    out.push_back(GroupModel::cyclic(6));
    out.push_back(GroupModel::finite_abelian({2, 4}));
    out.push_back(GroupModel::free(2));
    return out;
}

} // namespace sumsets
