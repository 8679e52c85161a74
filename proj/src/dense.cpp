#include "dense.hpp"

#include <algorithm>

namespace sumsets::detail {

bool Bits::none() const
{
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

std::size_t Bits::count() const
{
    std::size_t c = 0;
    for (auto x : w_)
        c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
}

void Bits::trim()
{
    if (n_ % 64 && !w_.empty())
        w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

void Bits::or_with(const Bits& src)
{
    const auto k = std::min(w_.size(), src.w_.size());
    for (std::size_t i = 0; i < k; ++i)
        w_[i] |= src.w_[i];
    trim();
}

void Bits::or_shifted_up(const Bits& src, std::size_t s)
{
    if (s >= n_)
        return;
    const std::size_t ws = s >> 6;
    const unsigned bs = s & 63;
    for (std::size_t i = 0; i < src.w_.size() && i + ws < w_.size(); ++i) {
        const auto x = src.w_[i];
        if (!x)
            continue;
        w_[i + ws] |= x << bs;
        if (bs && i + ws + 1 < w_.size())
            w_[i + ws + 1] |= x >> (64 - bs);
    }
    trim();
}

void Bits::or_shifted_down(const Bits& src, std::size_t s)
{
    if (s >= src.n_)
        return;
    const std::size_t ws = s >> 6;
    const unsigned bs = s & 63;
    for (std::size_t i = 0; i < w_.size() && i + ws < src.w_.size(); ++i) {
        std::uint64_t x = src.w_[i + ws] >> bs;
        if (bs && i + ws + 1 < src.w_.size())
            x |= src.w_[i + ws + 1] << (64 - bs);
        w_[i] |= x;
    }
    trim();
}

std::int64_t integer_span(const GSet& s)
{
    if (s.model().kind() != ModelKind::Integers || s.empty())
        return 0;
    return s.back().scalar() - s.front().scalar() + 1;
}

DenseSet DenseSet::empty_of(const GroupModel& model)
{
    DenseSet d;
    d.model_ = model;
    if (model.is_finite())
        d.bits_ = Bits(static_cast<std::size_t>(model.order()));
    return d;
}

DenseSet DenseSet::identity_of(const GroupModel& model)
{
    DenseSet d = empty_of(model);
    if (model.is_finite()) {
        d.bits_.set(0);
    } else {
        d.offset_ = 0;
        d.bits_ = Bits(1);
        d.bits_.set(0);
    }
    return d;
}

DenseSet DenseSet::from(const GSet& s)
{
    const auto& model = s.model();
    if (!model.is_abelian())
        throw ModelError("dense sets require an abelian model");
    DenseSet d = empty_of(model);
    if (model.is_finite()) {
        for (const auto& x : s)
            d.bits_.set(static_cast<std::size_t>(model.index_of(x)));
        return d;
    }
    if (s.empty())
        return d;
    d.offset_ = s.front().scalar();
    d.bits_ = Bits(static_cast<std::size_t>(integer_span(s)));
    for (const auto& x : s)
        d.bits_.set(static_cast<std::size_t>(x.scalar() - d.offset_));
    return d;
}

GSet DenseSet::to_gset() const
{
    std::vector<Element> out;
    out.reserve(bits_.count());
    if (model_.is_finite())
        bits_.for_each([&](std::size_t i) { out.push_back(model_.element_at(static_cast<std::int64_t>(i))); });
    else
        bits_.for_each([&](std::size_t i) { out.push_back(Element(offset_ + static_cast<std::int64_t>(i))); });
    return GSet::from_sorted(model_, std::move(out));
}

DenseSet DenseSet::sum(const DenseSet& other) const
{
    const DenseSet& small = count() <= other.count() ? *this : other;
    const DenseSet& large = count() <= other.count() ? other : *this;
    DenseSet r = empty_of(model_);
    if (small.empty() || large.empty())
        return r;

    switch (model_.kind()) {
    case ModelKind::Integers: {
        r.offset_ = offset_ + other.offset_;
        r.bits_ = Bits(bits_.size() + other.bits_.size() - 1);
        small.bits_.for_each([&](std::size_t i) { r.bits_.or_shifted_up(large.bits_, i); });
        break;
    }
    case ModelKind::Cyclic: {
        const auto n = static_cast<std::size_t>(model_.modulus());
        small.bits_.for_each([&](std::size_t i) {
            r.bits_.or_shifted_up(large.bits_, i);
            if (i)
                r.bits_.or_shifted_down(large.bits_, n - i);
        });
        break;
    }
    case ModelKind::FiniteAbelian: {
        std::vector<std::int64_t> lidx;
        large.bits_.for_each([&](std::size_t j) { lidx.push_back(static_cast<std::int64_t>(j)); });
        std::vector<Element> lel;
        lel.reserve(lidx.size());
        for (auto j : lidx)
            lel.push_back(model_.element_at(j));
        small.bits_.for_each([&](std::size_t i) {
            const auto x = model_.element_at(static_cast<std::int64_t>(i));
            for (const auto& y : lel)
                r.bits_.set(static_cast<std::size_t>(model_.index_of(model_.op(x, y))));
        });
        break;
    }
    case ModelKind::Free:
        throw ModelError("dense sets require an abelian model");
    }
    return r;
}

void DenseSet::unite(const DenseSet& other)
{
    if (other.empty())
        return;
    if (model_.is_finite()) {
        bits_.or_with(other.bits_);
        return;
    }
    if (empty()) {
        *this = other;
        return;
    }
    const auto lo = std::min(offset_, other.offset_);
    const auto hi = std::max(offset_ + static_cast<std::int64_t>(bits_.size()),
                             other.offset_ + static_cast<std::int64_t>(other.bits_.size()));
    if (lo == offset_ && hi == offset_ + static_cast<std::int64_t>(bits_.size())) {
        bits_.or_shifted_up(other.bits_, static_cast<std::size_t>(other.offset_ - lo));
        return;
    }
    Bits merged(static_cast<std::size_t>(hi - lo));
    merged.or_shifted_up(bits_, static_cast<std::size_t>(offset_ - lo));
    merged.or_shifted_up(other.bits_, static_cast<std::size_t>(other.offset_ - lo));
    bits_ = std::move(merged);
    offset_ = lo;
}

} // namespace sumsets::detail
