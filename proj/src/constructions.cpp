#include "sumsets/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "dense.hpp"

namespace sumsets {

namespace {

// Zero-extended index functions: k_i = n_i = 0 for i <= 0.
std::int64_t at(const std::vector<std::int64_t>& v, int i)
{
    return i >= 1 && i <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i - 1)] : 0;
}

std::int64_t sum(const std::vector<std::int64_t>& v)
{
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw std::invalid_argument("construction parameters: " + what);
}

void check_aux(const ConstructionParams& p, std::size_t len)
{
    require(p.n_aux.size() == len, "n_aux must have " + std::to_string(len) + " entries");
    for (std::size_t j = 0; j < len; ++j) {
        require(p.n_aux[j] >= 1 && p.n_aux[j] <= p.k[j] - 1, "need 1 <= n_j <= k_j - 1");
        require(j == 0 || p.n_aux[j] <= p.n_aux[j - 1], "n_aux must be nonincreasing");
    }
}

SetSequence from_intervals(const std::vector<std::pair<std::int64_t, std::int64_t>>& iv, bool free_mirror)
{
    const auto model = free_mirror ? GroupModel::free(1) : GroupModel::integers();
    std::vector<GSet> sets;
    for (const auto& [lo, hi] : iv) {
        if (!free_mirror) {
            sets.push_back(interval(model, lo, hi));
            continue;
        }
        std::vector<Element> e;
        for (auto x = lo; x <= hi; ++x)
            e.push_back(model.make(x == 0 ? Word{} : Word{{0, x}}));
        sets.emplace_back(model, std::move(e));
    }
    return SetSequence(model, std::move(sets));
}

void nondecreasing(int m, std::int64_t lo, std::int64_t budget, std::vector<std::int64_t>& pref,
                   const std::function<void(const std::vector<std::int64_t>&)>& fn)
{
    if (static_cast<int>(pref.size()) == m) {
        fn(pref);
        return;
    }
    const auto left = static_cast<std::int64_t>(m - static_cast<int>(pref.size()) - 1);
    for (auto v = lo; v + v * left <= budget; ++v) {
        pref.push_back(v);
        nondecreasing(m, v, budget - v, pref, fn);
        pref.pop_back();
    }
}

void nonincreasing_aux(const std::vector<std::int64_t>& k, std::size_t len, std::vector<std::int64_t>& pref,
                       const std::function<void(const std::vector<std::int64_t>&)>& fn)
{
    if (pref.size() == len) {
        fn(pref);
        return;
    }
    auto top = k[pref.size()] - 1;
    if (!pref.empty())
        top = std::min(top, pref.back());
    for (std::int64_t v = 1; v <= top; ++v) {
        pref.push_back(v);
        nonincreasing_aux(k, len, pref, fn);
        pref.pop_back();
    }
}

} // namespace

std::string to_string(Variant v)
{
    switch (v) {
    case Variant::C1:
        return "c1";
    case Variant::C2:
        return "c2";
    case Variant::C3:
        return "c3";
    }
    return "?";
}

Variant variant_from_string(const std::string& s)
{
    std::string t;
    for (char c : s)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "c1")
        return Variant::C1;
    if (t == "c2")
        return Variant::C2;
    if (t == "c3")
        return Variant::C3;
    throw std::invalid_argument("unknown construction variant: " + s);
}

void validate(const ConstructionParams& p)
{
    const int m = p.m();
    require(p.ell >= 2 && p.ell < m, "need 2 <= ell < m");
    for (std::size_t i = 0; i < p.k.size(); ++i) {
        require(p.k[i] >= 1, "k_i must be positive");
        require(i == 0 || p.k[i - 1] <= p.k[i], "k must be nondecreasing");
    }
    switch (p.variant) {
    case Variant::C1:
        require(p.n_blocks >= 1 && p.n_blocks * p.ell >= m, "need n >= 1 with n*ell >= m");
        require(p.n_aux.empty(), "c1 takes no n_aux");
        break;
    case Variant::C2:
        require(p.k.front() >= 2, "need k_1 >= 2");
        require(m <= 2 * p.ell, "c2 needs m <= 2*ell");
        check_aux(p, static_cast<std::size_t>(m - p.ell));
        break;
    case Variant::C3:
        require(p.k.front() >= 2, "need k_1 >= 2");
        require(m > 2 * p.ell, "c3 needs m > 2*ell");
        check_aux(p, static_cast<std::size_t>(p.ell));
        break;
    }
}

namespace {

using Intervals = std::vector<std::pair<std::int64_t, std::int64_t>>;

Intervals intervals(const ConstructionParams& p)
{
    const int l = p.ell;
    std::vector<std::pair<std::int64_t, std::int64_t>> iv;
    for (int j = 1; j <= p.m(); ++j) {
        std::int64_t off = 0;
        switch (p.variant) {
        case Variant::C1:
            for (std::int64_t t = 1; t <= p.n_blocks; ++t)
                off += at(p.k, j - static_cast<int>(t) * l);
            break;
        case Variant::C2:
            off = at(p.k, j - l) - at(p.n_aux, j - l);
            break;
        case Variant::C3:
            if (j > l) {
                // ⌊(j-1)/ℓ⌋ blocks; ⌊j/ℓ⌋ overshoots by one block when ℓ divides j.
                const int n = (j - 1) / l;
                for (int t = 1; t <= n; ++t)
                    off += at(p.k, j - t * l);
                off -= at(p.n_aux, j - n * l);
            }
            break;
        }
        iv.emplace_back(off + 1, at(p.k, j) + off);
    }
    return iv;
}

Intervals auxiliary_intervals(const ConstructionParams& p)
{
    const int l = p.ell;
    auto iv = intervals(p);
    const int last = p.variant == Variant::C2 ? p.m() : 2 * l;
    for (int j = l + 1; j <= last; ++j)
        iv[static_cast<std::size_t>(j - 1)] = {at(p.k, j - l) + 1, at(p.k, j) + at(p.k, j - l) - at(p.n_aux, j - l)};
    return iv;
}

// Σ^ℓ of nonnegative integer intervals as a bitset, by DP over (set, count).
detail::Bits interval_sumset(const Intervals& iv, int ell, std::int64_t top)
{
    const auto width = static_cast<std::size_t>(top * ell + 1);
    std::vector<detail::Bits> reach(static_cast<std::size_t>(ell) + 1, detail::Bits(width));
    reach[0].set(0);
    for (std::size_t j = 0; j < iv.size(); ++j) {
        const auto [lo, hi] = iv[j];
        const auto len = static_cast<std::size_t>(hi - lo + 1);
        for (std::size_t c = std::min<std::size_t>(j + 1, static_cast<std::size_t>(ell)); c >= 1; --c) {
            if (reach[c - 1].none())
                continue;
            detail::Bits spread(width);
            spread.or_shifted_up(reach[c - 1], static_cast<std::size_t>(lo));
            for (std::size_t have = 1; have < len;) {
                const auto step = std::min(have, len - have);
                const auto copy = spread;
                spread.or_shifted_up(copy, step);
                have += step;
            }
            reach[c].or_with(spread);
        }
    }
    return reach[static_cast<std::size_t>(ell)];
}

std::int64_t top_of(const Intervals& iv)
{
    std::int64_t top = 0;
    for (const auto& [lo, hi] : iv)
        top = std::max(top, hi);
    return top;
}

// Incidence of every integer in [0, top].
std::vector<int> incidences(const Intervals& iv, std::int64_t top)
{
    std::vector<int> diff(static_cast<std::size_t>(top + 2), 0);
    for (const auto& [lo, hi] : iv) {
        ++diff[static_cast<std::size_t>(lo)];
        --diff[static_cast<std::size_t>(hi + 1)];
    }
    std::vector<int> inc(static_cast<std::size_t>(top + 1), 0);
    int run = 0;
    for (std::size_t i = 0; i < inc.size(); ++i)
        inc[i] = run += diff[i];
    return inc;
}

} // namespace

SetSequence construct(const ConstructionParams& p, bool free_mirror)
{
    validate(p);
    return from_intervals(intervals(p), free_mirror);
}

std::int64_t expected_equality_value(const ConstructionParams& p)
{
    validate(p);
    return sum(p.k) - sum(p.n_aux) - p.ell + 1;
}

SetSequence auxiliary_sequence(const ConstructionParams& p)
{
    validate(p);
    if (p.variant == Variant::C1)
        throw std::invalid_argument("c1 has no auxiliary sequence");
    return from_intervals(auxiliary_intervals(p), false);
}

ConstructionCheck check_construction(const ConstructionParams& p)
{
    // Every interval lies in [1, Σk], so the integer kernels apply directly.
    validate(p);
    const auto iv = intervals(p);
    const auto aux = p.variant == Variant::C1 ? Intervals{} : auxiliary_intervals(p);
    const auto top = std::max(top_of(iv), top_of(aux));
    const auto inc = incidences(iv, top);
    const auto sigma = interval_sumset(iv, p.ell, top);
    ConstructionCheck c;
    c.actual = static_cast<std::int64_t>(sigma.count());
    c.expected = expected_equality_value(p);
    std::int64_t mu = 0;
    for (int v : inc) {
        mu += std::min(v, p.ell);
        c.max_incidence = std::max(c.max_incidence, v);
    }
    c.mu_bound = mu - p.ell + 1;
    if (p.variant == Variant::C1) {
        c.incidence_ok = c.max_incidence <= p.ell;
        return c;
    }
    c.incidence_ok = c.max_incidence > p.ell;
    const auto aux_inc = incidences(aux, top);
    bool ok = true;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < inc.size(); ++i) {
        ok = ok && (inc[i] > 0) == (aux_inc[i] > 0) && aux_inc[i] <= p.ell;
        total += aux_inc[i];
    }
    auto joined = sigma;
    joined.or_with(interval_sumset(aux, p.ell, top));
    ok = ok && joined.count() == sigma.count();
    c.auxiliary_ok = ok && total == sum(p.k) - sum(p.n_aux);
    return c;
}

void for_each_params(std::int64_t max_sum, int max_m, const std::function<void(const ConstructionParams&)>& fn)
{
    std::vector<std::int64_t> pref;
    for (int m = 3; m <= max_m; ++m)
        for (int l = 2; l < m; ++l) {
            nondecreasing(m, 1, max_sum, pref, [&](const std::vector<std::int64_t>& k) {
                fn(ConstructionParams{Variant::C1, l, k, {}, (m + l - 1) / l});
                if (k.front() < 2)
                    return;
                const bool second = m <= 2 * l;
                const auto len = static_cast<std::size_t>(second ? m - l : l);
                std::vector<std::int64_t> npref;
                nonincreasing_aux(k, len, npref, [&](const std::vector<std::int64_t>& n) {
                    fn(ConstructionParams{second ? Variant::C2 : Variant::C3, l, k, n, 0});
                });
            });
        }
}

SetSequence named_example(const std::string& name, bool free_mirror)
{
    if (name == "example-1.1")
        return from_intervals({{0, 3}, {6, 9}, {7, 10}, {8, 11}, {9, 12}}, free_mirror);
    throw std::invalid_argument("unknown example: " + name);
}

int named_example_ell(const std::string& name)
{
    if (name == "example-1.1")
        return 3;
    throw std::invalid_argument("unknown example: " + name);
}

} // namespace sumsets
