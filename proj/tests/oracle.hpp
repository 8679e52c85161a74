// Brute-force reference implementations. Deliberately naive: no shared code
// with the library beyond the group operation itself.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sumsets/group.hpp"

namespace oracle {

using sumsets::Element;
using sumsets::GroupModel;
using sumsets::GSet;

using Sets = std::vector<std::vector<Element>>;

inline Sets raw(const std::vector<GSet>& v)
{
    Sets out;
    for (const auto& s : v)
        out.push_back(s.elements());
    return out;
}

inline std::set<Element> to_set(const GSet& s)
{
    return {s.begin(), s.end()};
}

// Symbol-list cancellation: a word is a list of ±(gen+1) letters.
inline std::vector<int> letters(const sumsets::Word& w)
{
    std::vector<int> out;
    for (const auto& s : w)
        for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i)
            out.push_back(s.exp < 0 ? -(s.gen + 1) : s.gen + 1);
    return out;
}

inline std::vector<int> cancel(const std::vector<int>& in)
{
    std::vector<int> st;
    for (int c : in) {
        if (!st.empty() && st.back() == -c)
            st.pop_back();
        else
            st.push_back(c);
    }
    return st;
}

// All products x_{σ(1)}⋯x_{σ(ℓ)} over ℓ distinct indices in every order.
inline std::set<Element> product_set(const GroupModel& g, const Sets& sets, int ell)
{
    const int m = static_cast<int>(sets.size());
    std::set<Element> out;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != ell)
            continue;
        std::vector<int> chosen;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u)
                chosen.push_back(i);
        do {
            std::set<Element> acc{g.identity()};
            for (int i : chosen) {
                std::set<Element> next;
                for (const auto& x : acc)
                    for (const auto& y : sets[static_cast<std::size_t>(i)])
                        next.insert(g.op(x, y));
                acc = std::move(next);
            }
            out.insert(acc.begin(), acc.end());
        } while (!g.is_abelian() && std::next_permutation(chosen.begin(), chosen.end()));
    }
    return out;
}

inline std::map<Element, int> incidence(const Sets& sets)
{
    std::map<Element, int> out;
    for (const auto& s : sets)
        for (const auto& x : s)
            ++out[x];
    return out;
}

inline std::map<Element, int> mu(const Sets& sets, int ell)
{
    auto out = incidence(sets);
    for (auto& [x, c] : out)
        c = std::min(c, ell);
    return out;
}

inline std::int64_t mu_total(const Sets& sets, int ell)
{
    std::int64_t t = 0;
    for (const auto& [x, c] : mu(sets, ell))
        t += c;
    return t;
}

// Sums over ℓ-element index subsets, every order of the chosen terms.
inline std::set<Element> subsequence_sums(const GroupModel& g, const std::vector<Element>& a, int ell)
{
    Sets singletons;
    for (const auto& x : a)
        singletons.push_back({x});
    return product_set(g, singletons, ell);
}

inline std::set<Element> stabilizer(const GroupModel& g, const std::vector<Element>& s)
{
    std::set<Element> in(s.begin(), s.end()), out;
    for (std::int64_t i = 0; i < g.order(); ++i) {
        const auto h = g.element_at(i);
        bool ok = true;
        for (const auto& x : s)
            ok = ok && in.count(g.op(h, x));
        if (ok)
            out.insert(h);
    }
    return out;
}

// Residues mod n (n = 0 for ℤ) forming {x, x+d, ..., x+(k-1)d} for some d ≠ 0.
inline bool is_ap(const std::set<std::int64_t>& s, std::int64_t n)
{
    if (s.size() <= 1)
        return true;
    const auto k = static_cast<std::int64_t>(s.size());
    const auto norm = [n](std::int64_t v) { return n ? ((v % n) + n) % n : v; };
    for (auto x : s)
        for (auto y : s) {
            if (x == y)
                continue;
            const auto d = y - x;
            std::set<std::int64_t> t;
            for (std::int64_t j = 0; j < k; ++j)
                t.insert(norm(x + j * d));
            if (t == s)
                return true;
        }
    return false;
}

inline std::set<std::int64_t> ints(const std::set<Element>& s)
{
    std::set<std::int64_t> out;
    for (const auto& x : s)
        out.insert(x.scalar());
    return out;
}

// ℓ = 2 minimizing condition in ℤ or ℤ_n, by enumeration: two progressions
// B_1, B_2 ⊆ A sharing one difference d, |B_i| >= 2, Σχ = μ, B_1 + B_2 = Σ².
inline bool minimizing_pair_exists(const Sets& sets, std::int64_t n)
{
    const auto mu2 = mu(sets, 2);
    std::set<std::int64_t> a;
    for (const auto& [x, c] : mu2)
        a.insert(x.scalar());
    const auto norm = [n](std::int64_t v) { return n ? ((v % n) + n) % n : v; };
    std::set<std::int64_t> target;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (const auto& x : sets[i])
                for (const auto& y : sets[j])
                    target.insert(norm(x.scalar() + y.scalar()));
    const std::int64_t span = n ? n : (*a.rbegin() - *a.begin() + 1);
    for (std::int64_t d = 1; d < span; ++d) {
        // Every progression with difference d inside A of length >= 2.
        std::vector<std::set<std::int64_t>> aps;
        for (auto x : a) {
            std::set<std::int64_t> cur{x};
            auto y = norm(x + d);
            while (a.count(y) && !cur.count(y)) {
                cur.insert(y);
                aps.push_back(cur);
                y = norm(y + d);
            }
        }
        for (const auto& b1 : aps)
            for (const auto& b2 : aps) {
                bool ok = true;
                for (const auto& [x, c] : mu2)
                    ok = ok && static_cast<int>(b1.count(x.scalar()) + b2.count(x.scalar())) == c;
                if (!ok)
                    continue;
                std::set<std::int64_t> s;
                for (auto x : b1)
                    for (auto y : b2)
                        s.insert(norm(x + y));
                if (s == target)
                    return true;
            }
    }
    return false;
}

} // namespace oracle
