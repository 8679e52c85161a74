#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sumsets {

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Syllable {
    int gen = 0;
    std::int64_t exp = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Reduced word: no zero exponents, no two adjacent syllables on the same generator.
using Word = std::vector<Syllable>;

std::int64_t word_length(const Word& w);

class Element {
public:
    Element() : payload_(std::int64_t{0}) {}
    explicit Element(std::int64_t v) : payload_(v) {}
    explicit Element(std::vector<std::int64_t> v) : payload_(std::move(v)) {}
    explicit Element(Word w) : payload_(std::move(w)) {}

    bool is_scalar() const { return payload_.index() == 0; }
    bool is_vector() const { return payload_.index() == 1; }
    bool is_word() const { return payload_.index() == 2; }

    std::int64_t scalar() const { return std::get<0>(payload_); }
    const std::vector<std::int64_t>& vec() const { return std::get<1>(payload_); }
    const Word& word() const { return std::get<2>(payload_); }

    friend bool operator==(const Element& x, const Element& y) { return x.payload_ == y.payload_; }
    friend std::strong_ordering operator<=>(const Element& x, const Element& y);

private:
    std::variant<std::int64_t, std::vector<std::int64_t>, Word> payload_;
};

enum class ModelKind { Integers, Cyclic, FiniteAbelian, Free };

class GroupModel {
public:
    static GroupModel integers();
    static GroupModel cyclic(std::int64_t n);
    static GroupModel finite_abelian(std::vector<std::int64_t> moduli);
    static GroupModel free(int rank);

    ModelKind kind() const { return kind_; }
    std::int64_t modulus() const { return n_; }
    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    int rank() const { return rank_; }

    bool is_finite() const { return kind_ == ModelKind::Cyclic || kind_ == ModelKind::FiniteAbelian; }
    bool is_abelian() const { return kind_ != ModelKind::Free; }
    bool is_torsion_free() const { return !is_finite(); }

    // |G|; throws on infinite models.
    std::int64_t order() const;

    Element identity() const;
    Element op(const Element& x, const Element& y) const;
    Element inverse(const Element& x) const;
    Element pow(const Element& x, std::int64_t e) const;

    // Reduces raw integer data into canonical form for this model.
    Element make(std::int64_t v) const;
    Element make(std::vector<std::int64_t> v) const;
    Element make(Word w) const;

    bool is_canonical(const Element& x) const;
    void check(const Element& x) const;

    // Dense indexing of finite models, consistent with the canonical order.
    std::int64_t index_of(const Element& x) const;
    Element element_at(std::int64_t i) const;

    std::string name() const;
    std::string format(const Element& x) const;

    friend bool operator==(const GroupModel&, const GroupModel&) = default;

private:
    ModelKind kind_ = ModelKind::Integers;
    std::int64_t n_ = 0;
    std::vector<std::int64_t> moduli_;
    int rank_ = 0;
};

// Free-group word helpers (exposed for testing).
Word reduce_word(const Word& w);
Word multiply_words(const Word& x, const Word& y);
Word invert_word(const Word& w);

class GSet {
public:
    using const_iterator = std::vector<Element>::const_iterator;

    explicit GSet(GroupModel model) : model_(std::move(model)) {}
    GSet(GroupModel model, std::vector<Element> elems);

    // Trusted constructor: elems already sorted, distinct and canonical.
    static GSet from_sorted(GroupModel model, std::vector<Element> elems);

    const GroupModel& model() const { return model_; }
    const std::vector<Element>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const_iterator begin() const { return elems_.begin(); }
    const_iterator end() const { return elems_.end(); }
    const Element& operator[](std::size_t i) const { return elems_[i]; }
    const Element& front() const { return elems_.front(); }
    const Element& back() const { return elems_.back(); }

    bool contains(const Element& x) const;
    bool is_subset_of(const GSet& other) const;

    friend bool operator==(const GSet& a, const GSet& b) { return a.elems_ == b.elems_ && a.model_ == b.model_; }

private:
    GroupModel model_;
    std::vector<Element> elems_;
};

GSet make_set(const GroupModel& model, std::initializer_list<std::int64_t> values);
GSet interval(const GroupModel& model, std::int64_t lo, std::int64_t hi);

GSet set_union(const GSet& a, const GSet& b);
GSet set_intersection(const GSet& a, const GSet& b);
GSet set_difference(const GSet& a, const GSet& b);

// g·S and S·g.
GSet left_translate(const Element& g, const GSet& s);
GSet right_translate(const GSet& s, const Element& g);

// A·B (A+B in abelian models).
GSet product(const GSet& a, const GSet& b);

GSet enumerate(const GroupModel& model);
std::optional<std::int64_t> smallest_subgroup_order(const GroupModel& model);
GSet stabilizer(const GSet& s);
bool is_subgroup(const GSet& h);
std::vector<GSet> cosets(const GSet& h);

std::string format_set(const GSet& s);

} // namespace sumsets
