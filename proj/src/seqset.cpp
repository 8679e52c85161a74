#include "sumsets/seqset.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dense.hpp"

namespace sumsets {

void check_ell(int ell, int m)
{
    if (ell < 1 || ell > m)
        throw std::invalid_argument("ell must satisfy 1 <= ell <= m (ell=" + std::to_string(ell) +
                                    ", m=" + std::to_string(m) + ")");
}

SetSequence::SetSequence(GroupModel model, std::vector<GSet> sets)
    : model_(std::move(model)), sets_(std::move(sets)), union_(model_)
{
    if (sets_.empty())
        throw std::invalid_argument("set sequence must contain at least one set");
    std::vector<Element> all;
    for (const auto& s : sets_) {
        if (!(s.model() == model_))
            throw ModelError("set sequence mixes group models");
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<Element> distinct;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i])
            ++j;
        distinct.push_back(all[i]);
        incidence_.push_back(static_cast<int>(j - i));
        i = j;
    }
    union_ = GSet::from_sorted(model_, std::move(distinct));
}

int SetSequence::incidence(const Element& a) const
{
    auto it = std::lower_bound(union_.begin(), union_.end(), a);
    if (it == union_.end() || !(*it == a))
        return 0;
    return incidence_[static_cast<std::size_t>(it - union_.begin())];
}

int SetSequence::incidence_in(const Element& a, int from, int to) const
{
    int c = 0;
    for (int j = from; j < to; ++j)
        c += sets_[static_cast<std::size_t>(j)].contains(a) ? 1 : 0;
    return c;
}

std::int64_t SetSequence::total_size() const
{
    std::int64_t n = 0;
    for (const auto& s : sets_)
        n += static_cast<std::int64_t>(s.size());
    return n;
}

std::int64_t MultiplicityProfile::mu_total() const
{
    std::int64_t t = 0;
    for (auto v : mu)
        t += v;
    return t;
}

std::size_t MultiplicityProfile::index_of(const Element& a) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it == elements.end() || !(*it == a))
        throw std::out_of_range("element " + elements.model().format(a) + " not in the union");
    return static_cast<std::size_t>(it - elements.begin());
}

int MultiplicityProfile::mu_of(const Element& a) const
{
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it == elements.end() || !(*it == a))
        return 0;
    return mu[static_cast<std::size_t>(it - elements.begin())];
}

int MultiplicityProfile::eta_of(const Element& a) const
{
    return eta[index_of(a)];
}

int MultiplicityProfile::tau_of(const Element& a) const
{
    return tau[index_of(a)];
}

MultiplicityProfile multiplicity_profile(const SetSequence& seq, int ell)
{
    check_ell(ell, seq.m());
    MultiplicityProfile p{ell, seq.union_set(), {}, {}, {}, GSet(seq.model())};
    std::vector<Element> saturated;
    for (const auto& a : seq.union_set()) {
        const int head = seq.incidence_in(a, 0, ell);
        const int tail = seq.incidence(a) - head;
        p.mu.push_back(std::min(ell, seq.incidence(a)));
        p.eta.push_back(head);
        p.tau.push_back(std::min(ell, tail));
        if (p.mu.back() == ell)
            saturated.push_back(a);
    }
    p.M = GSet::from_sorted(seq.model(), std::move(saturated));
    return p;
}

namespace {

bool dense_ok(const SetSequence& seq, int ell)
{
    if (seq.model().is_finite())
        return true;
    const auto& u = seq.union_set();
    if (u.empty())
        return true;
    return (u.back().scalar() - u.front().scalar() + 1) * ell < detail::DenseSet::kMaxWindow;
}

GSet sumset_dense(const SetSequence& seq, int ell)
{
    using detail::DenseSet;
    const int m = seq.m();
    std::vector<DenseSet> dp(static_cast<std::size_t>(ell) + 1, DenseSet::empty_of(seq.model()));
    dp[0] = DenseSet::identity_of(seq.model());
    for (int i = 0; i < m; ++i) {
        if (seq[static_cast<std::size_t>(i)].empty())
            continue;
        const auto a = DenseSet::from(seq[static_cast<std::size_t>(i)]);
        const int remaining = m - 1 - i;
        for (int c = std::min(i + 1, ell); c >= 1; --c) {
            if (c + remaining < ell)
                break;
            auto& prev = dp[static_cast<std::size_t>(c - 1)];
            if (prev.empty())
                continue;
            dp[static_cast<std::size_t>(c)].unite(prev.sum(a));
        }
    }
    return dp[static_cast<std::size_t>(ell)].to_gset();
}

GSet sumset_sparse(const SetSequence& seq, int ell)
{
    const int m = seq.m();
    std::vector<GSet> dp(static_cast<std::size_t>(ell) + 1, GSet(seq.model()));
    dp[0] = GSet::from_sorted(seq.model(), {seq.model().identity()});
    for (int i = 0; i < m; ++i) {
        const int remaining = m - 1 - i;
        for (int c = std::min(i + 1, ell); c >= 1; --c) {
            if (c + remaining < ell)
                break;
            const auto& prev = dp[static_cast<std::size_t>(c - 1)];
            if (prev.empty())
                continue;
            dp[static_cast<std::size_t>(c)] =
                set_union(dp[static_cast<std::size_t>(c)], product(prev, seq[static_cast<std::size_t>(i)]));
        }
    }
    return dp[static_cast<std::size_t>(ell)];
}

void sort_unique(std::vector<Element>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

GSet generalized_sumset(const SetSequence& seq, int ell)
{
    check_ell(ell, seq.m());
    if (!seq.model().is_abelian())
        throw ModelError("generalized_sumset needs an abelian model; use generalized_product_set");
    return dense_ok(seq, ell) ? sumset_dense(seq, ell) : sumset_sparse(seq, ell);
}

GSet generalized_product_set(const SetSequence& seq, int ell, const Budget& budget)
{
    check_ell(ell, seq.m());
    if (seq.model().is_abelian())
        return generalized_sumset(seq, ell);
    const int m = seq.m();
    if (m > budget.max_sets || m > 30)
        throw BudgetExceeded("product set: m=" + std::to_string(m) + " exceeds the set budget of " +
                             std::to_string(budget.max_sets));
    const auto& model = seq.model();
    std::unordered_map<std::uint32_t, std::vector<Element>> level{{0U, {model.identity()}}};
    std::size_t work = 0;
    for (int c = 0; c < ell; ++c) {
        std::unordered_map<std::uint32_t, std::vector<Element>> next;
        for (const auto& [mask, words] : level) {
            for (int j = 0; j < m; ++j) {
                if (mask & (1U << j))
                    continue;
                const auto& aj = seq[static_cast<std::size_t>(j)];
                auto& out = next[mask | (1U << j)];
                for (const auto& w : words)
                    for (const auto& x : aj)
                        out.push_back(model.op(w, x));
                work += words.size() * aj.size();
                if (work > budget.max_elements)
                    throw BudgetExceeded("product set: more than " + std::to_string(budget.max_elements) +
                                         " intermediate elements");
            }
        }
        for (auto& [mask, words] : next)
            sort_unique(words);
        level = std::move(next);
    }
    std::vector<Element> all;
    for (auto& [mask, words] : level)
        all.insert(all.end(), words.begin(), words.end());
    sort_unique(all);
    return GSet::from_sorted(model, std::move(all));
}

ElementSequence::ElementSequence(GroupModel model, std::vector<Element> terms)
    : model_(std::move(model)), terms_(std::move(terms)), distinct_(model_)
{
    for (const auto& t : terms_)
        model_.check(t);
    std::map<Element, int> counts;
    for (const auto& t : terms_)
        ++counts[t];
    std::vector<Element> d;
    for (const auto& [e, c] : counts) {
        d.push_back(e);
        rho_.push_back(c);
    }
    distinct_ = GSet::from_sorted(model_, std::move(d));
}

int ElementSequence::rho_of(const Element& a) const
{
    auto it = std::lower_bound(distinct_.begin(), distinct_.end(), a);
    if (it == distinct_.end() || !(*it == a))
        return 0;
    return rho_[static_cast<std::size_t>(it - distinct_.begin())];
}

SetSequence ElementSequence::as_singletons() const
{
    std::vector<GSet> sets;
    sets.reserve(terms_.size());
    for (const auto& t : terms_)
        sets.push_back(GSet::from_sorted(model_, {t}));
    return SetSequence(model_, std::move(sets));
}

GSet subsequence_sumset(const ElementSequence& a, int ell, const Budget& budget)
{
    check_ell(ell, a.m());
    if (a.model().is_abelian())
        return generalized_sumset(a.as_singletons(), ell);
    // Nonabelian: products over multisets of distinct terms (bounded by ρ), in every order.
    const auto& model = a.model();
    const auto& d = a.distinct();
    const auto n = d.size();
    std::map<std::vector<int>, std::vector<Element>> level{{std::vector<int>(n, 0), {model.identity()}}};
    std::size_t work = 0;
    for (int c = 0; c < ell; ++c) {
        std::map<std::vector<int>, std::vector<Element>> next;
        for (const auto& [used, words] : level) {
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j] >= a.rho()[j])
                    continue;
                auto key = used;
                ++key[j];
                auto& out = next[key];
                for (const auto& w : words)
                    out.push_back(model.op(w, d[j]));
                work += words.size();
                if (work > budget.max_elements)
                    throw BudgetExceeded("subsequence sums: more than " + std::to_string(budget.max_elements) +
                                         " intermediate elements");
            }
        }
        for (auto& [key, words] : next)
            sort_unique(words);
        level = std::move(next);
    }
    std::vector<Element> all;
    for (auto& [key, words] : level)
        all.insert(all.end(), words.begin(), words.end());
    sort_unique(all);
    return GSet::from_sorted(model, std::move(all));
}

} // namespace sumsets
