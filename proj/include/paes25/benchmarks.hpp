/**
 * @file benchmarks.hpp
 * @brief m-LOTZ, OneMinMax and COCZ together with their exact Pareto fronts.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace paes25 {

enum class BenchmarkKind { MLotz, Omm, Cocz };

inline const char* to_string(BenchmarkKind k) {
    switch (k) {
        case BenchmarkKind::MLotz: return "mlotz";
        case BenchmarkKind::Omm: return "omm";
        case BenchmarkKind::Cocz: return "cocz";
    }
    return "?";
}

inline BenchmarkKind parse_benchmark_kind(std::string_view name) {
    if (name == "mlotz" || name == "lotz") return BenchmarkKind::MLotz;
    if (name == "omm") return BenchmarkKind::Omm;
    if (name == "cocz") return BenchmarkKind::Cocz;
    throw ConfigError("unknown benchmark '" + std::string(name) + "' (expected mlotz|omm|cocz)");
}

/**
 * @brief A pseudo-Boolean multi-objective benchmark of fixed size.
 *
 * m-LOTZ splits x into m/2 blocks of length 2n/m; objective 2i-1 is the
 * leading-ones count of block i and objective 2i its trailing-zeros count.
 * OMM is (ones, zeros). COCZ is (ones, ones in the left half + zeros in the
 * right half).
 */
class Benchmark {
public:
    Benchmark(BenchmarkKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {
        if (n < 1) throw ConfigError("benchmark: n must be positive");
        switch (kind) {
            case BenchmarkKind::MLotz:
                if (m < 2 || m % 2 != 0) throw ConfigError("mlotz: m must be even and at least 2");
                if (m > n) throw ConfigError("mlotz: m must not exceed n");
                if (n % (m / 2) != 0) throw ConfigError("mlotz: n must be a multiple of m/2");
                break;
            case BenchmarkKind::Omm:
                if (m != 2) throw ConfigError("omm: m must be 2");
                break;
            case BenchmarkKind::Cocz:
                if (m != 2) throw ConfigError("cocz: m must be 2");
                if (n % 2 != 0) throw ConfigError("cocz: n must be even");
                break;
        }
    }

    static Benchmark mlotz(int m, int n) { return {BenchmarkKind::MLotz, m, n}; }
    static Benchmark lotz(int n) { return {BenchmarkKind::MLotz, 2, n}; }
    static Benchmark omm(int n) { return {BenchmarkKind::Omm, 2, n}; }
    static Benchmark cocz(int n) { return {BenchmarkKind::Cocz, 2, n}; }

    BenchmarkKind kind() const noexcept { return kind_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    std::string name() const { return to_string(kind_); }

    /// Block length 2n/m for m-LOTZ; n otherwise.
    int block_length() const noexcept { return kind_ == BenchmarkKind::MLotz ? 2 * n_ / m_ : n_; }
    int blocks() const noexcept { return kind_ == BenchmarkKind::MLotz ? m_ / 2 : 1; }
    int f_max() const noexcept { return block_length(); }

    std::uint64_t front_size() const {
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                std::uint64_t size = 1;
                for (int i = 0; i < blocks(); ++i) size *= static_cast<std::uint64_t>(block_length() + 1);
                return size;
            }
            case BenchmarkKind::Omm: return static_cast<std::uint64_t>(n_) + 1;
            case BenchmarkKind::Cocz: return static_cast<std::uint64_t>(n_) / 2 + 1;
        }
        return 0;
    }

    void evaluate_into(const Bitstring& x, std::span<int> out) const {
        check_input(x, out.size());
        switch (kind_) {
            case BenchmarkKind::MLotz:
                for (int b = 0; b < blocks(); ++b) evaluate_block(x, b, out);
                break;
            case BenchmarkKind::Omm: {
                const int ones = static_cast<int>(x.count());
                out[0] = ones;
                out[1] = n_ - ones;
                break;
            }
            case BenchmarkKind::Cocz: {
                const auto half = static_cast<std::size_t>(n_ / 2);
                const int left = static_cast<int>(x.count(0, half));
                const int right = static_cast<int>(x.count(half, x.size()));
                out[0] = left + right;
                out[1] = left + (n_ / 2 - right);
                break;
            }
        }
    }

    FitnessVector evaluate(const Bitstring& x) const {
        FitnessVector v(static_cast<std::size_t>(m_));
        evaluate_into(x, v.values());
        return v;
    }

    /**
     * @brief Update `fitness` of the pre-flip string to that of `x`, which
     * differs from it exactly at the distinct positions `flipped`.
     *
     * m-LOTZ recomputes only the touched blocks; OMM and COCZ adjust counts.
     */
    void update_after_flips(const Bitstring& x, std::span<const std::size_t> flipped,
                            std::span<int> fitness) const {
        check_input(x, fitness.size());
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                const auto len = static_cast<std::size_t>(block_length());
                int last_block = -1;
                for (auto p : flipped) {
                    const int b = static_cast<int>(p / len);
                    if (b == last_block) continue;
                    evaluate_block(x, b, fitness);
                    last_block = b;
                }
                // Positions need not be sorted; re-evaluating a block twice is harmless.
                break;
            }
            case BenchmarkKind::Omm:
                for (auto p : flipped) {
                    const int delta = x.test(p) ? 1 : -1;
                    fitness[0] += delta;
                    fitness[1] -= delta;
                }
                break;
            case BenchmarkKind::Cocz: {
                const auto half = static_cast<std::size_t>(n_ / 2);
                for (auto p : flipped) {
                    const int delta = x.test(p) ? 1 : -1;
                    fitness[0] += delta;
                    fitness[1] += p < half ? delta : -delta;
                }
                break;
            }
        }
    }

    bool is_pareto_optimal(std::span<const int> v) const {
        if (static_cast<int>(v.size()) != m_) throw DimensionError("is_pareto_optimal: wrong objective count");
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                const int len = block_length();
                for (int b = 0; b < blocks(); ++b) {
                    const int lo = v[2 * b];
                    const int tz = v[2 * b + 1];
                    if (lo < 0 || tz < 0 || lo + tz != len) return false;
                }
                return true;
            }
            case BenchmarkKind::Omm:
                return v[0] >= 0 && v[1] >= 0 && v[0] + v[1] == n_;
            case BenchmarkKind::Cocz:
                return v[0] >= n_ / 2 && v[0] <= n_ && v[0] + v[1] == 3 * n_ / 2;
        }
        return false;
    }

    /// Position of a Pareto-optimal vector in the enumeration order of pareto_front_fitness().
    std::optional<std::uint64_t> front_index(std::span<const int> v) const {
        if (!is_pareto_optimal(v)) return std::nullopt;
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                std::uint64_t idx = 0;
                for (int b = 0; b < blocks(); ++b) {
                    idx = idx * static_cast<std::uint64_t>(block_length() + 1) + static_cast<std::uint64_t>(v[2 * b]);
                }
                return idx;
            }
            case BenchmarkKind::Omm: return static_cast<std::uint64_t>(v[0]);
            case BenchmarkKind::Cocz: return static_cast<std::uint64_t>(v[0] - n_ / 2);
        }
        return std::nullopt;
    }

    /// All Pareto-optimal fitness vectors, in front_index order.
    std::vector<FitnessVector> pareto_front_fitness() const {
        const std::uint64_t size = front_size();
        if (size > 20'000'000) throw TooLargeError("pareto front too large to enumerate");
        std::vector<FitnessVector> front;
        front.reserve(static_cast<std::size_t>(size));
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                const int len = block_length();
                std::vector<int> lo(static_cast<std::size_t>(blocks()), 0);
                for (std::uint64_t k = 0; k < size; ++k) {
                    FitnessVector v(static_cast<std::size_t>(m_));
                    for (int b = 0; b < blocks(); ++b) {
                        v[2 * b] = lo[b];
                        v[2 * b + 1] = len - lo[b];
                    }
                    front.push_back(std::move(v));
                    for (int b = blocks() - 1; b >= 0; --b) {
                        if (++lo[b] <= len) break;
                        lo[b] = 0;
                    }
                }
                break;
            }
            case BenchmarkKind::Omm:
                for (int i = 0; i <= n_; ++i) front.push_back(FitnessVector{i, n_ - i});
                break;
            case BenchmarkKind::Cocz:
                for (int k = 0; k <= n_ / 2; ++k) front.push_back(FitnessVector{n_ / 2 + k, n_ - k});
                break;
        }
        return front;
    }

    /// A genotype attaining the Pareto-optimal vector v.
    Bitstring front_genotype(std::span<const int> v) const {
        if (!is_pareto_optimal(v)) throw RangeError("front_genotype: vector is not Pareto-optimal");
        Bitstring x(static_cast<std::size_t>(n_));
        switch (kind_) {
            case BenchmarkKind::MLotz: {
                const int len = block_length();
                for (int b = 0; b < blocks(); ++b) {
                    for (int i = 0; i < v[2 * b]; ++i) x.set(static_cast<std::size_t>(b * len + i), true);
                }
                break;
            }
            case BenchmarkKind::Omm:
                for (int i = 0; i < v[0]; ++i) x.set(static_cast<std::size_t>(i), true);
                break;
            case BenchmarkKind::Cocz:
                for (int i = 0; i < v[0]; ++i) x.set(static_cast<std::size_t>(i), true);
                break;
        }
        return x;
    }

    friend bool operator==(const Benchmark&, const Benchmark&) = default;

private:
    void check_input(const Bitstring& x, std::size_t m) const {
        if (static_cast<int>(x.size()) != n_) throw DimensionError("evaluate: bitstring length differs from n");
        if (static_cast<int>(m) != m_) throw DimensionError("evaluate: output has wrong objective count");
    }

    void evaluate_block(const Bitstring& x, int b, std::span<int> out) const {
        const auto len = static_cast<std::size_t>(block_length());
        const std::size_t first = static_cast<std::size_t>(b) * len;
        out[2 * b] = static_cast<int>(x.leading_ones(first, first + len));
        out[2 * b + 1] = static_cast<int>(x.trailing_zeros(first, first + len));
    }

    BenchmarkKind kind_;
    int m_;
    int n_;
};

}  // namespace paes25
