/**
 * @file core.hpp
 * @brief Bitstrings, fitness vectors and the Pareto dominance order.
 *
 * Positions are 0-based and run left to right: position 0 is the leftmost
 * character of the text form and the first bit of a leading-ones prefix.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paes25 {

/// Objective vectors of different length were combined.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid parameters for a benchmark, archiver, run or sweep.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value outside the domain an operation is defined on.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Instance too large for an exhaustive oracle.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * @brief Fixed-length bit string packed into 64-bit words.
 *
 * Bit i lives in word i/64 at bit offset i%64. Bits past size() in the last
 * word are kept zero so that counting and equality work word-wise.
 */
class Bitstring {
public:
    Bitstring() = default;

    explicit Bitstring(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
        if (n == 0) throw ConfigError("bitstring length must be positive");
    }

    static Bitstring from_string(std::string_view text) {
        Bitstring x(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                x.set(i, true);
            } else if (text[i] != '0') {
                throw ConfigError("bitstring text may only contain '0' and '1'");
            }
        }
        return x;
    }

    static Bitstring ones(std::size_t n) {
        Bitstring x(n);
        for (std::size_t i = 0; i < n; ++i) x.set(i, true);
        return x;
    }

    std::size_t size() const noexcept { return n_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const noexcept { return test(i); }

    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void set(std::size_t i, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Number of ones in [first, last).
    std::size_t count(std::size_t first, std::size_t last) const noexcept {
        std::size_t total = 0;
        std::size_t i = first;
        while (i < last) {
            const std::size_t off = i & 63;
            const std::size_t take = std::min<std::size_t>(64 - off, last - i);
            std::uint64_t bits = words_[i >> 6] >> off;
            if (take < 64) bits &= (std::uint64_t{1} << take) - 1;
            total += static_cast<std::size_t>(std::popcount(bits));
            i += take;
        }
        return total;
    }

    std::size_t count() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// Length of the all-ones prefix of the range [first, last).
    std::size_t leading_ones(std::size_t first, std::size_t last) const noexcept {
        std::size_t i = first;
        while (i < last) {
            const std::size_t off = i & 63;
            const std::size_t avail = std::min<std::size_t>(64 - off, last - i);
            const std::size_t run = std::min<std::size_t>(
                static_cast<std::size_t>(std::countr_one(words_[i >> 6] >> off)), avail);
            i += run;
            if (run < avail) break;
        }
        return i - first;
    }

    /// Length of the all-zeros suffix of the range [first, last).
    std::size_t trailing_zeros(std::size_t first, std::size_t last) const noexcept {
        std::size_t j = last;
        while (j > first) {
            const std::size_t hi = j - 1;
            const std::size_t off = hi & 63;
            const std::size_t avail = std::min<std::size_t>(off + 1, j - first);
            const std::size_t run = std::min<std::size_t>(
                static_cast<std::size_t>(std::countl_zero(words_[hi >> 6] << (63 - off))), avail);
            j -= run;
            if (run < avail) break;
        }
        return last - j;
    }

    std::string to_string() const {
        std::string out(n_, '0');
        for (std::size_t i = 0; i < n_; ++i) {
            if (test(i)) out[i] = '1';
        }
        return out;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const Bitstring& x) { return os << x.to_string(); }

inline std::size_t leading_ones(const Bitstring& x) noexcept { return x.leading_ones(0, x.size()); }
inline std::size_t trailing_zeros(const Bitstring& x) noexcept { return x.trailing_zeros(0, x.size()); }

/// Reference implementations used by debug cross-checks and tests.
namespace naive {
inline std::size_t leading_ones(const Bitstring& x, std::size_t first, std::size_t last) {
    std::size_t k = 0;
    while (first + k < last && x.test(first + k)) ++k;
    return k;
}
inline std::size_t trailing_zeros(const Bitstring& x, std::size_t first, std::size_t last) {
    std::size_t k = 0;
    while (last - k > first && !x.test(last - k - 1)) ++k;
    return k;
}
}  // namespace naive

/// Objective vector of non-negative integers. Ordered lexicographically so it can key sets.
class FitnessVector {
public:
    FitnessVector() = default;
    explicit FitnessVector(std::size_t m) : values_(m, 0) {}
    FitnessVector(std::initializer_list<int> values) : values_(values) {}
    explicit FitnessVector(std::vector<int> values) : values_(std::move(values)) {}
    explicit FitnessVector(std::span<const int> values) : values_(values.begin(), values.end()) {}

    std::size_t size() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const noexcept { return values_[i]; }
    int& operator[](std::size_t i) noexcept { return values_[i]; }

    std::span<const int> values() const noexcept { return values_; }
    std::span<int> values() noexcept { return values_; }
    operator std::span<const int>() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const FitnessVector&, const FitnessVector&) = default;
    friend auto operator<=>(const FitnessVector&, const FitnessVector&) = default;

private:
    std::vector<int> values_;
};

inline std::ostream& operator<<(std::ostream& os, const FitnessVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

/**
 * @brief Outcome of comparing u against v under maximisation.
 *
 * Weak dominance of u over v is Dominates or Equal; the dominated-by cases
 * mirror them.
 */
enum class Dominance { Dominates, Equal, DominatedBy, Incomparable };

inline Dominance compare(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw DimensionError("compare: objective counts differ");
    bool ge = true;
    bool le = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < v[i]) {
            ge = false;
        } else if (u[i] > v[i]) {
            le = false;
        }
        if (!ge && !le) return Dominance::Incomparable;
    }
    if (ge && le) return Dominance::Equal;
    return ge ? Dominance::Dominates : Dominance::DominatedBy;
}

inline bool weakly_dominates(std::span<const int> u, std::span<const int> v) {
    const Dominance d = compare(u, v);
    return d == Dominance::Dominates || d == Dominance::Equal;
}

inline bool strictly_dominates(std::span<const int> u, std::span<const int> v) {
    return compare(u, v) == Dominance::Dominates;
}

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Dominates: return "dominates";
        case Dominance::Equal: return "equal";
        case Dominance::DominatedBy: return "dominated-by";
        case Dominance::Incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace paes25
