#include "sumsets/structure.hpp"

#include <algorithm>
#include <map>

namespace sumsets {

namespace {

struct Letter {
    int gen;
    int sign;
    friend bool operator==(const Letter&, const Letter&) = default;
};

std::vector<Letter> letters(const Word& w)
{
    std::vector<Letter> out;
    for (const auto& s : w) {
        const int sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k)
            out.push_back({s.gen, sign});
    }
    return out;
}

Word from_letters(const std::vector<Letter>& ls, std::size_t from, std::size_t to)
{
    Word w;
    for (std::size_t i = from; i < to; ++i)
        w.push_back({ls[i].gen, ls[i].sign});
    return reduce_word(w);
}

// w = u·core·u⁻¹ with core cyclically reduced.
std::pair<Word, std::vector<Letter>> cyclic_reduction(const Word& w)
{
    auto ls = letters(w);
    std::size_t lo = 0;
    std::size_t hi = ls.size();
    while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && ls[lo].sign == -ls[hi - 1].sign) {
        ++lo;
        --hi;
    }
    Word u = from_letters(ls, 0, lo);
    return {u, std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                   ls.begin() + static_cast<std::ptrdiff_t>(hi))};
}

ProgressionType witness(const Element& x, const Element& h, std::int64_t n, const GroupModel& model)
{
    return {x, h, model.identity(), n};
}

} // namespace

GSet realize(const GroupModel& model, const ProgressionType& t)
{
    if (t.length < 1)
        throw ModelError("progression length must be >= 1");
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(t.length));
    Element cur = t.a;
    for (std::int64_t j = 0; j < t.length; ++j) {
        out.push_back(model.op(cur, t.b));
        cur = model.op(cur, t.g);
    }
    GSet s(model, out);
    if (static_cast<std::int64_t>(s.size()) != t.length)
        throw ModelError("progression collides: ratio has order below the length");
    return s;
}

std::optional<ProgressionType> progression_with_ratio(const GSet& s, const Element& h)
{
    const auto& model = s.model();
    const auto n = static_cast<std::int64_t>(s.size());
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return witness(s.front(), h, 1, model);
    if (h == model.identity())
        return std::nullopt;
    const auto hinv = model.inverse(h);
    std::optional<Element> start;
    for (const auto& y : s) {
        if (!s.contains(model.op(y, hinv))) {
            if (start)
                return std::nullopt;
            start = y;
        }
    }
    const Element x = start ? *start : s.front();
    Element cur = x;
    for (std::int64_t j = 1; j < n; ++j) {
        cur = model.op(cur, h);
        if (!s.contains(cur) || cur == x)
            return std::nullopt;
    }
    // Closed orbit: the next step must return to x, otherwise the walk revisited an inner point.
    if (!start && !(model.op(cur, h) == x))
        return std::nullopt;
    return witness(x, h, n, model);
}

std::vector<ProgressionType> detect_progressions(const GSet& s)
{
    const auto& model = s.model();
    std::vector<ProgressionType> out;
    if (s.empty())
        return out;
    if (s.size() == 1) {
        out.push_back({s.front(), model.identity(), model.identity(), 1});
        return out;
    }
    std::vector<Element> ratios;
    for (const auto& x : s) {
        const auto xinv = model.inverse(x);
        for (const auto& y : s)
            if (!(x == y))
                ratios.push_back(model.op(xinv, y));
    }
    std::sort(ratios.begin(), ratios.end());
    ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
    for (const auto& h : ratios)
        if (auto w = progression_with_ratio(s, h))
            out.push_back(*w);
    std::sort(out.begin(), out.end(), [](const ProgressionType& p, const ProgressionType& q) {
        if (!(p.a == q.a))
            return p.a < q.a;
        return p.g < q.g;
    });
    return out;
}

Element canonical_generator(const GroupModel& model)
{
    switch (model.kind()) {
    case ModelKind::Integers:
        return Element(std::int64_t{1});
    case ModelKind::Cyclic:
        return model.make(1);
    case ModelKind::FiniteAbelian: {
        std::vector<std::int64_t> v(model.moduli().size(), 0);
        v.back() = 1;
        return Element(std::move(v));
    }
    case ModelKind::Free:
        return Element(Word{{0, 1}});
    }
    return model.identity();
}

std::optional<Element> find_conjugator(const GroupModel& model, const Element& g, const Element& h)
{
    if (model.is_abelian()) {
        if (g == h)
            return model.identity();
        return std::nullopt;
    }
    auto [u, gc] = cyclic_reduction(g.word());
    auto [v, hc] = cyclic_reduction(h.word());
    if (gc.size() != hc.size())
        return std::nullopt;
    const auto n = gc.size();
    const Element ue(u);
    const Element ve(v);
    if (n == 0)
        return model.op(ue, model.inverse(ve));
    for (std::size_t k = 0; k < n; ++k) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            match = gc[(i + k) % n] == hc[i];
        if (!match)
            continue;
        // hc = p⁻¹·gc·p with p the first k letters of gc; then c = u·p·v⁻¹.
        const Element p(from_letters(gc, 0, k));
        auto c = model.op(model.op(ue, p), model.inverse(ve));
        if (model.op(model.op(model.inverse(c), g), c) == h)
            return c;
    }
    return std::nullopt;
}

std::optional<RatioFamily> same_ratio_family(const std::vector<GSet>& sets)
{
    if (sets.empty())
        return std::nullopt;
    const auto& model = sets.front().model();
    for (const auto& s : sets)
        if (s.empty())
            return std::nullopt;
    std::vector<std::vector<ProgressionType>> detected;
    for (const auto& s : sets)
        detected.push_back(detect_progressions(s));

    auto lead = std::find_if(sets.begin(), sets.end(), [](const GSet& s) { return s.size() >= 2; });
    std::vector<Element> candidates;
    if (lead == sets.end()) {
        candidates.push_back(canonical_generator(model));
    } else {
        for (const auto& t : detected[static_cast<std::size_t>(lead - sets.begin())])
            candidates.push_back(t.g);
    }

    for (const auto& g : candidates) {
        RatioFamily fam{g, {}};
        bool ok = true;
        for (std::size_t i = 0; i < sets.size() && ok; ++i) {
            const auto& s = sets[i];
            if (s.size() == 1) {
                fam.types.push_back({s.front(), g, model.identity(), 1});
                continue;
            }
            if (auto w = progression_with_ratio(s, g)) {
                fam.types.push_back(*w);
                continue;
            }
            ok = false;
            if (model.is_abelian())
                break;
            for (const auto& t : detected[i]) {
                if (auto c = find_conjugator(model, g, t.g)) {
                    // {x·h^j} with h = c⁻¹gc equals {x·c⁻¹·g^j·c}.
                    fam.types.push_back({model.op(t.a, model.inverse(*c)), g, *c, t.length});
                    ok = true;
                    break;
                }
            }
        }
        if (ok)
            return fam;
    }
    return std::nullopt;
}

bool linked_chain_check(const GroupModel& model, const std::vector<ProgressionType>& types)
{
    for (std::size_t i = 1; i < types.size(); ++i)
        if (!(types[i].g == types[0].g))
            throw ModelError("linked_chain_check: progressions do not share one ratio");
    for (std::size_t i = 0; i + 1 < types.size(); ++i)
        if (!(types[i + 1].a == model.inverse(types[i].b)))
            return false;
    return true;
}

ProgressionType chain_progression(const std::vector<ProgressionType>& types)
{
    if (types.empty())
        throw std::invalid_argument("chain_progression needs at least one progression");
    std::int64_t len = 0;
    for (const auto& t : types)
        len += t.length;
    len -= static_cast<std::int64_t>(types.size()) - 1;
    return {types.front().a, types.front().g, types.back().b, len};
}

std::optional<ProgressionType> union_progression(const GSet& a, const GSet& b, const Element& g)
{
    if (!a.model().is_abelian())
        throw ModelError("union_progression requires an abelian model");
    if (set_intersection(a, b).empty())
        return std::nullopt;
    if (!progression_with_ratio(a, g) || !progression_with_ratio(b, g))
        return std::nullopt;
    return progression_with_ratio(set_union(a, b), g);
}

std::optional<std::pair<std::int64_t, std::int64_t>> subprogression_form(const GSet& a,
                                                                         const ProgressionType& whole)
{
    const auto& model = a.model();
    if (a.empty())
        return std::nullopt;
    std::map<Element, std::int64_t> index;
    Element cur = whole.a;
    for (std::int64_t j = 0; j < whole.length; ++j) {
        index.emplace(model.op(cur, whole.b), j);
        cur = model.op(cur, whole.g);
    }
    std::vector<std::int64_t> pos;
    for (const auto& x : a) {
        auto it = index.find(x);
        if (it == index.end())
            return std::nullopt;
        pos.push_back(it->second);
    }
    std::sort(pos.begin(), pos.end());
    if (pos.size() == 1)
        return std::make_pair(std::int64_t{1}, pos[0]);
    const auto p = pos[1] - pos[0];
    for (std::size_t i = 2; i < pos.size(); ++i)
        if (pos[i] - pos[i - 1] != p)
            return std::nullopt;
    return std::make_pair(p, pos[0]);
}

std::optional<RepresentationRelation> relate_representations(const GroupModel& model,
                                                             const ProgressionType& first,
                                                             const ProgressionType& second)
{
    if (first.length != second.length || first.length < 2)
        return std::nullopt;
    const auto c = model.op(model.inverse(second.a), first.a);
    const auto cinv = model.inverse(c);
    const auto conj = [&](const Element& x) { return model.op(model.op(cinv, x), c); };
    if (first.g == conj(second.g) && first.b == model.op(cinv, second.b))
        return RepresentationRelation{c, false};
    const auto tail = model.pow(second.g, first.length - 1);
    if (first.g == conj(model.inverse(second.g)) && first.b == model.op(model.op(cinv, tail), second.b))
        return RepresentationRelation{c, true};
    return std::nullopt;
}

} // namespace sumsets
