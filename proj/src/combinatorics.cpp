#include "binmom/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace binmom {

Integer factorial(std::uint32_t k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binom(std::uint64_t n, std::uint32_t k)
{
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
    return r;
}

Poly binom(const Poly& x, std::uint32_t k)
{
    Poly r = falling_power(x, k);
    r *= make_rational(Integer(1), factorial(k));
    return r;
}

Integer multinomial(std::uint32_t d, std::span<const std::uint32_t> parts)
{
    std::uint64_t sum = 0;
    for (auto part : parts) {
        sum += part;
    }
    if (sum != d) {
        return 0;
    }
    Integer r = factorial(d);
    for (auto part : parts) {
        r /= factorial(part);
    }
    return r;
}

Integer falling_power(std::int64_t x, std::uint32_t d)
{
    Integer r = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        r *= Integer(static_cast<long>(x)) - static_cast<unsigned long>(i);
    }
    return r;
}

Poly falling_power(const Poly& x, std::uint32_t d)
{
    Poly r(1L);
    for (std::uint32_t i = 0; i < d; ++i) {
        r *= x - Poly(static_cast<long>(i));
    }
    return r;
}

// ---------------------------------------------------------------------------

StirlingTable& StirlingTable::shared()
{
    static StirlingTable table;
    return table;
}

void StirlingTable::grow(std::uint32_t m)
{
    if (plain_.empty()) {
        plain_.push_back({Integer(1)});
        associated_.push_back({Integer(1)});
    }
    while (plain_.size() <= m) {
        const std::size_t row = plain_.size();
        std::vector<Integer> s(row + 1, Integer(0));
        std::vector<Integer> a(row + 1, Integer(0));
        const auto& prev = plain_[row - 1];
        for (std::size_t j = 1; j <= row; ++j) {
            if (j < prev.size()) {
                s[j] += Integer(static_cast<unsigned long>(j)) * prev[j];
            }
            s[j] += prev[j - 1];
        }
        const auto& aprev = associated_[row - 1];
        for (std::size_t j = 1; j <= row; ++j) {
            if (j < aprev.size()) {
                a[j] += Integer(static_cast<unsigned long>(j)) * aprev[j];
            }
            if (row >= 2) {
                const auto& aprev2 = associated_[row - 2];
                if (j - 1 < aprev2.size()) {
                    a[j] += Integer(static_cast<unsigned long>(row - 1)) * aprev2[j - 1];
                }
            }
        }
        plain_.push_back(std::move(s));
        associated_.push_back(std::move(a));
    }
}

Integer StirlingTable::plain(std::uint32_t m, std::uint32_t j)
{
    if (j > m) {
        return 0;
    }
    std::lock_guard lock(mutex_);
    grow(m);
    return plain_[m][j];
}

Integer StirlingTable::associated(std::uint32_t m, std::uint32_t j)
{
    if (2ULL * j > m && !(m == 0 && j == 0)) {
        return 0;
    }
    std::lock_guard lock(mutex_);
    grow(m);
    return associated_[m][j];
}

Integer stirling2(std::uint32_t m, std::uint32_t j)
{
    return StirlingTable::shared().plain(m, j);
}

Integer assoc_stirling2(std::uint32_t m, std::uint32_t j)
{
    return StirlingTable::shared().associated(m, j);
}

// ---------------------------------------------------------------------------

std::uint32_t Composition::total() const
{
    return std::accumulate(parts.begin(), parts.end(), std::uint32_t{0});
}

Compositions::Compositions(std::uint32_t total, std::uint32_t count, std::uint32_t min_part)
    : total_(total), count_(count), min_part_(min_part)
{
}

Compositions::iterator Compositions::begin() const
{
    if (count_ == 0) {
        return total_ == 0 ? iterator(total_, min_part_, Composition{}) : end();
    }
    if (static_cast<std::uint64_t>(min_part_) * count_ > total_) {
        return end();
    }
    Composition first{std::vector<std::uint32_t>(count_, min_part_)};
    first.parts.back() = total_ - min_part_ * (count_ - 1);
    return iterator(total_, min_part_, std::move(first));
}

Compositions::iterator& Compositions::iterator::operator++()
{
    auto& parts = current_.parts;
    const std::size_t k = parts.size();
    if (k < 2) {
        done_ = true;
        return *this;
    }
    // bump the rightmost free position whose suffix can still be filled
    std::uint64_t prefix = 0;
    std::vector<std::uint64_t> prefix_sums(k);
    for (std::size_t i = 0; i < k; ++i) {
        prefix += parts[i];
        prefix_sums[i] = prefix;
    }
    for (std::size_t i = k - 1; i-- > 0;) {
        const std::uint64_t used = prefix_sums[i] + 1;
        const std::uint64_t tail_parts = k - 1 - i;
        if (used + tail_parts * min_part_ > total_) {
            continue;
        }
        ++parts[i];
        for (std::size_t t = i + 1; t + 1 < k; ++t) {
            parts[t] = min_part_;
        }
        parts[k - 1] = static_cast<std::uint32_t>(total_ - used - (tail_parts - 1) * min_part_);
        return *this;
    }
    done_ = true;
    return *this;
}

} // namespace binmom
