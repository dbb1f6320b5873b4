#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace autsys {

/// Hard limit on ground-set size: subsets are single 64-bit words.
inline constexpr std::size_t kMaxGround = 64;

/// An element of a ground set, identified by its position in the
/// sorted-label order of that ground.
struct Element {
    unsigned index = 0;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// A subset of a ground set of at most 64 elements, stored as a bit mask.
/// Ordering is numeric on the mask; a proper subset always compares less.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

    static constexpr Subset single(Element x) { return Subset{std::uint64_t{1} << x.index}; }
    static constexpr Subset full(std::size_t n)
    {
        return Subset{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(Element x) const { return (bits_ >> x.index) & 1U; }
    constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(Subset other) const { return subset_of(other) && bits_ != other.bits_; }
    constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

    /// Lowest element; undefined on the empty set.
    constexpr Element first() const { return Element{static_cast<unsigned>(std::countr_zero(bits_))}; }

    constexpr Subset with(Element x) const { return Subset{bits_ | (std::uint64_t{1} << x.index)}; }
    constexpr Subset without(Element x) const { return Subset{bits_ & ~(std::uint64_t{1} << x.index)}; }

    constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
    constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
    constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
    friend constexpr bool operator==(Subset, Subset) = default;
    friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Element;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Element operator*() const { return Element{static_cast<unsigned>(std::countr_zero(rest_))}; }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    /// Iterates elements in increasing index order.
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

private:
    std::uint64_t bits_ = 0;
};

static_assert(sizeof(Subset) == sizeof(std::uint64_t));

} // namespace autsys
