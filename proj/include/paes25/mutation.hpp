#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace paes25 {

enum class MutationKind { OneBit, StandardBit };

inline const char* to_string(MutationKind k) {
    return k == MutationKind::OneBit ? "one-bit" : "standard-bit";
}

inline MutationKind parse_mutation_kind(std::string_view name) {
    if (name == "one-bit") return MutationKind::OneBit;
    if (name == "standard-bit") return MutationKind::StandardBit;
    throw ConfigError("unknown mutation '" + std::string(name) + "' (expected one-bit|standard-bit)");
}

/**
 * @brief One-bit or standard-bit mutation for strings of a fixed length n.
 *
 * Standard-bit mutation draws the number of flips from Binomial(n, 1/n) and
 * then picks that many distinct positions uniformly (Floyd's sampling), so a
 * call costs O(flips) rather than O(n).
 */
class Mutation {
public:
    Mutation(MutationKind kind, std::size_t n) : kind_(kind), n_(n), flips_(n, 1.0 / static_cast<double>(n)) {
        if (n == 0) throw ConfigError("mutation: n must be positive");
    }

    MutationKind kind() const noexcept { return kind_; }

    /// Flips x in place and reports the distinct flipped positions.
    void apply(Bitstring& x, Rng& rng, std::vector<std::size_t>& flipped) {
        flipped.clear();
        if (kind_ == MutationKind::OneBit) {
            const std::size_t p = uniform_index(rng, n_);
            x.flip(p);
            flipped.push_back(p);
            return;
        }
        const std::size_t k = flips_(rng);
        for (std::size_t j = n_ - k; j < n_; ++j) {
            const std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
            const bool seen = std::find(flipped.begin(), flipped.end(), t) != flipped.end();
            flipped.push_back(seen ? j : t);
        }
        for (auto p : flipped) x.flip(p);
    }

private:
    MutationKind kind_;
    std::size_t n_;
    std::binomial_distribution<std::size_t> flips_;
};

inline Bitstring mutate(MutationKind kind, const Bitstring& x, Rng& rng) {
    Bitstring child = x;
    std::vector<std::size_t> flipped;
    Mutation(kind, x.size()).apply(child, rng, flipped);
    return child;
}

}  // namespace paes25
