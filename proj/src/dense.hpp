#pragma once

// Dense bitset representation of subsets of abelian models, used by the
// sumset kernels. Integers use an offset window, finite models use the
// canonical dense index.

#include <cstdint>
#include <vector>

#include "sumsets/group.hpp"

namespace sumsets::detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
    bool none() const;
    std::size_t count() const;

    // this[i + s] |= src[i] for every i with i + s < size().
    void or_shifted_up(const Bits& src, std::size_t s);
    // this[i] |= src[i + s] for every i with i + s < src.size().
    void or_shifted_down(const Bits& src, std::size_t s);
    void or_with(const Bits& src);

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                const int b = __builtin_ctzll(x);
                f(k * 64 + static_cast<std::size_t>(b));
                x &= x - 1;
            }
        }
    }

private:
    void trim();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class DenseSet {
public:
    DenseSet() = default;
    static DenseSet empty_of(const GroupModel& model);
    static DenseSet identity_of(const GroupModel& model);
    static DenseSet from(const GSet& s);

    bool empty() const { return bits_.none(); }
    std::size_t count() const { return bits_.count(); }
    GSet to_gset() const;

    DenseSet sum(const DenseSet& other) const;
    void unite(const DenseSet& other);

    // Windows above this many bits fall back to pairwise enumeration.
    static constexpr std::int64_t kMaxWindow = std::int64_t{1} << 24;

private:
    GroupModel model_;
    std::int64_t offset_ = 0;
    Bits bits_;
};

// Width of the integer window spanned by s, or 0 for non-integer models.
std::int64_t integer_span(const GSet& s);

} // namespace sumsets::detail
