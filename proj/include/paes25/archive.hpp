#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core.hpp"

namespace paes25 {

/**
 * @brief Bounded store of (genotype, fitness) pairs.
 *
 * Fitness vectors are kept contiguous (row-major, m ints per member) so the
 * per-iteration dominance scan touches one flat buffer. Removal swaps the
 * last member into the hole, so indices are only stable between mutations.
 */
class Archive {
public:
    Archive(std::size_t objectives, std::size_t capacity) : m_(objectives), capacity_(capacity) {
        if (capacity == 0) throw ConfigError("archive capacity must be at least 1");
        if (objectives == 0) throw ConfigError("archive needs at least one objective");
    }

    std::size_t size() const noexcept { return genotypes_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t objectives() const noexcept { return m_; }
    bool empty() const noexcept { return genotypes_.empty(); }
    bool full() const noexcept { return genotypes_.size() >= capacity_; }

    std::span<const int> fitness(std::size_t i) const noexcept {
        return std::span<const int>(fitness_).subspan(i * m_, m_);
    }
    const Bitstring& genotype(std::size_t i) const noexcept { return genotypes_[i]; }

    /// All member fitness vectors, row-major.
    std::span<const int> fitness_data() const noexcept { return fitness_; }

    void insert(const Bitstring& genotype, std::span<const int> fitness) {
        if (full()) throw std::logic_error("archive: insert into full archive");
        if (fitness.size() != m_) throw DimensionError("archive: fitness has wrong objective count");
        genotypes_.push_back(genotype);
        fitness_.insert(fitness_.end(), fitness.begin(), fitness.end());
    }

    void erase(std::size_t i) {
        const std::size_t last = size() - 1;
        if (i != last) {
            genotypes_[i] = std::move(genotypes_[last]);
            std::copy_n(fitness_.begin() + static_cast<std::ptrdiff_t>(last * m_), m_,
                        fitness_.begin() + static_cast<std::ptrdiff_t>(i * m_));
        }
        genotypes_.pop_back();
        fitness_.resize(last * m_);
    }

    void replace(std::size_t i, const Bitstring& genotype, std::span<const int> fitness) {
        genotypes_[i] = genotype;
        std::copy(fitness.begin(), fitness.end(), fitness_.begin() + static_cast<std::ptrdiff_t>(i * m_));
    }

    std::vector<FitnessVector> fitness_vectors() const {
        std::vector<FitnessVector> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.emplace_back(fitness(i));
        return out;
    }

    /// No member weakly dominates another (this also rules out equal fitness).
    bool pairwise_incomparable() const {
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = i + 1; j < size(); ++j) {
                if (compare(fitness(i), fitness(j)) != Dominance::Incomparable) return false;
            }
        }
        return true;
    }

private:
    std::size_t m_;
    std::size_t capacity_;
    std::vector<Bitstring> genotypes_;
    std::vector<int> fitness_;
};

}  // namespace paes25
