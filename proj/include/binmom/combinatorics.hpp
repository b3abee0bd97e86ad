#pragma once

// Exact combinatorial kernels: binomials, multinomials, falling powers,
// Stirling numbers of the second kind (plain and associated, i.e. blocks of
// size >= 2) and compositions with a lower bound on the parts.

#include "binmom/poly.hpp"
#include "binmom/scalar.hpp"

#include <cstdint>
#include <iterator>
#include <mutex>
#include <span>
#include <vector>

namespace binmom {

Integer factorial(std::uint32_t k);

/// binom(n, k); zero when k > n.
Integer binom(std::uint64_t n, std::uint32_t k);

/// binom(x, k) = x(x-1)...(x-k+1) / k! as a polynomial (rational coefficients).
Poly binom(const Poly& x, std::uint32_t k);

/// d! / prod(parts!) when the parts sum to d, else 0.
Integer multinomial(std::uint32_t d, std::span<const std::uint32_t> parts);

/// x(x-1)...(x-d+1); 1 for d = 0.
Integer falling_power(std::int64_t x, std::uint32_t d);
Poly falling_power(const Poly& x, std::uint32_t d);

/// Memoized S(m, j) and S_2(m, j) tables. Rows are grown on demand under a
/// mutex, so one table can be shared between threads.
class StirlingTable {
public:
    Integer plain(std::uint32_t m, std::uint32_t j);
    Integer associated(std::uint32_t m, std::uint32_t j);

    /// Process-wide instance used by stirling2() and assoc_stirling2().
    static StirlingTable& shared();

private:
    void grow(std::uint32_t m);

    std::mutex mutex_;
    std::vector<std::vector<Integer>> plain_;       // S(m, j) = j S(m-1, j) + S(m-1, j-1)
    std::vector<std::vector<Integer>> associated_;  // S2(m, j) = j S2(m-1, j) + (m-1) S2(m-2, j-1)
};

Integer stirling2(std::uint32_t m, std::uint32_t j);
Integer assoc_stirling2(std::uint32_t m, std::uint32_t j);

/// Ordered tuple of parts, each >= the minimum it was generated with.
struct Composition {
    std::vector<std::uint32_t> parts;

    std::uint32_t total() const;
    std::size_t size() const { return parts.size(); }
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Lexicographically ordered range of the compositions of `total` into exactly
/// `count` parts, each at least `min_part`.
class Compositions {
public:
    Compositions(std::uint32_t total, std::uint32_t count, std::uint32_t min_part);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition*;
        using reference = const Composition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int)
        {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class Compositions;
        iterator(std::uint32_t total, std::uint32_t min_part, Composition first)
            : total_(total), min_part_(min_part), current_(std::move(first)), done_(false)
        {
        }

        std::uint32_t total_ = 0;
        std::uint32_t min_part_ = 0;
        Composition current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return iterator{}; }

    std::vector<Composition> to_vector() const { return {begin(), end()}; }

private:
    std::uint32_t total_;
    std::uint32_t count_;
    std::uint32_t min_part_;
};

/// The index set of the stable central-moment formula: parts >= 2 summing to d.
inline Compositions compositions_min2(std::uint32_t d, std::uint32_t k)
{
    return Compositions(d, k, 2);
}

} // namespace binmom
