/**
 * @file paes.hpp
 * @brief The PAES-25 loop: mutate the current solution, then
 *   (1) if the candidate weakly dominates some member, drop every member it
 *       weakly dominates, insert it and make it current;
 *   (2) else if some member strictly dominates it, discard it;
 *   (3) else insert it if there is room, otherwise ask the archiver.
 *
 * The current solution is always the most recently inserted member, so it
 * sits at the last archive index.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "archive.hpp"
#include "archivers.hpp"
#include "benchmarks.hpp"
#include "core.hpp"
#include "mutation.hpp"
#include "rng.hpp"

#ifndef PAES25_CHECK_INVARIANTS
#define PAES25_CHECK_INVARIANTS 0
#endif

namespace paes25 {

enum class StepEvent {
    DominatesAccepted,
    DominatedRejected,
    IncomparableAddedNotFull,
    IncomparableArchiverAccepted,
    IncomparableArchiverRejected,
};

inline const char* to_string(StepEvent e) {
    switch (e) {
        case StepEvent::DominatesAccepted: return "dominates-accepted";
        case StepEvent::DominatedRejected: return "dominated-rejected";
        case StepEvent::IncomparableAddedNotFull: return "incomparable-added";
        case StepEvent::IncomparableArchiverAccepted: return "archiver-accepted";
        case StepEvent::IncomparableArchiverRejected: return "archiver-rejected";
    }
    return "?";
}

inline bool accepted(StepEvent e) {
    return e == StepEvent::DominatesAccepted || e == StepEvent::IncomparableAddedNotFull ||
           e == StepEvent::IncomparableArchiverAccepted;
}

/// Views into engine buffers; valid until the next step.
struct StepOutcome {
    StepEvent event;
    std::span<const int> candidate;
    /// Fitness of removed members, row-major, m ints each.
    std::span<const int> removed;
    std::size_t removed_count = 0;
};

struct PaesOptions {
    Benchmark benchmark;
    MutationKind mutation = MutationKind::OneBit;
    Archiver archiver;
    std::size_t archive_size = 1;
    std::uint64_t seed = 0;
    /// Re-evaluate fitness from scratch and re-check archive invariants after every step.
    bool check_invariants = PAES25_CHECK_INVARIANTS != 0;
};

class Paes {
public:
    /// s ~ Unif({0,1}^n), A_0 = {s}, t = 0.
    explicit Paes(PaesOptions options)
        : opt_(std::move(options)),
          rng_(opt_.seed),
          mutation_(opt_.mutation, static_cast<std::size_t>(opt_.benchmark.n())),
          archive_(static_cast<std::size_t>(opt_.benchmark.m()), opt_.archive_size) {
        validate();
        const auto n = static_cast<std::size_t>(opt_.benchmark.n());
        current_ = Bitstring(n);
        std::bernoulli_distribution coin(0.5);
        for (std::size_t i = 0; i < n; ++i) current_.set(i, coin(rng_));
        start_from(current_, {});
    }

    /**
     * @brief Engine in a given state: `current` plus the other archive members.
     * The RNG is seeded from options.seed; no bits are drawn for initialisation.
     */
    Paes(PaesOptions options, const Bitstring& current, std::span<const Bitstring> others)
        : opt_(std::move(options)),
          rng_(opt_.seed),
          mutation_(opt_.mutation, static_cast<std::size_t>(opt_.benchmark.n())),
          archive_(static_cast<std::size_t>(opt_.benchmark.m()), opt_.archive_size) {
        validate();
        start_from(current, others);
    }

    StepOutcome step() {
        candidate_ = current_;
        mutation_.apply(candidate_, rng_, flipped_);
        candidate_fitness_ = current_fitness_;
        opt_.benchmark.update_after_flips(candidate_, flipped_, candidate_fitness_);
        if (opt_.check_invariants) {
            const FitnessVector fresh = opt_.benchmark.evaluate(candidate_);
            if (!std::ranges::equal(fresh.values(), candidate_fitness_)) {
                throw std::logic_error("paes: incremental fitness disagrees with full evaluation");
            }
        }
        return apply_candidate();
    }

    /// One iteration with a caller-supplied candidate instead of a mutation.
    StepOutcome step_with(const Bitstring& candidate) {
        if (candidate.size() != current_.size()) throw DimensionError("step_with: candidate has wrong length");
        candidate_ = candidate;
        candidate_fitness_.resize(current_fitness_.size());
        opt_.benchmark.evaluate_into(candidate_, candidate_fitness_);
        return apply_candidate();
    }

    const PaesOptions& options() const noexcept { return opt_; }
    const Benchmark& benchmark() const noexcept { return opt_.benchmark; }
    const Bitstring& current() const noexcept { return current_; }
    std::span<const int> current_fitness() const noexcept { return current_fitness_; }
    const Archive& archive() const noexcept { return archive_; }
    std::uint64_t iteration() const noexcept { return t_; }
    Rng& rng() noexcept { return rng_; }

    /// Sum of all objective values of s; on m-LOTZ this is sum over blocks of LO + TZ.
    int potential() const noexcept {
        int w = 0;
        for (int v : current_fitness_) w += v;
        return w;
    }

    bool current_is_pareto_optimal() const { return opt_.benchmark.is_pareto_optimal(current_fitness_); }

    /// Members whose fitness is Pareto-optimal; members have distinct fitness, so this is |f(A) ∩ front|.
    std::uint64_t pareto_members() const noexcept { return pareto_members_; }

    bool archive_is_front() const {
        return pareto_members_ == opt_.benchmark.front_size() && archive_.size() == pareto_members_;
    }

    /// Full invariant check; throws std::logic_error on violation.
    void check_state() const {
        if (archive_.empty() || archive_.size() > archive_.capacity()) throw std::logic_error("paes: archive size");
        if (archive_.genotype(archive_.size() - 1) != current_) throw std::logic_error("paes: current not last member");
        if (!archive_.pairwise_incomparable()) throw std::logic_error("paes: archive members not pairwise incomparable");
        std::uint64_t pareto = 0;
        for (std::size_t i = 0; i < archive_.size(); ++i) {
            const FitnessVector fresh = opt_.benchmark.evaluate(archive_.genotype(i));
            if (!std::ranges::equal(fresh.values(), archive_.fitness(i))) throw std::logic_error("paes: stale fitness");
            if (opt_.benchmark.is_pareto_optimal(archive_.fitness(i))) ++pareto;
            if (compare(archive_.fitness(i), current_fitness_) == Dominance::Dominates) {
                throw std::logic_error("paes: current solution strictly dominated by a member");
            }
        }
        if (pareto != pareto_members_) throw std::logic_error("paes: pareto member count drifted");
    }

private:
    void validate() const {
        if (opt_.archive_size < 1) throw ConfigError("paes: archive size must be at least 1");
    }

    void start_from(const Bitstring& current, std::span<const Bitstring> others) {
        if (static_cast<int>(current.size()) != opt_.benchmark.n()) throw DimensionError("paes: wrong genotype length");
        for (const auto& x : others) insert_member(x, opt_.benchmark.evaluate(x));
        current_ = current;
        current_fitness_.resize(static_cast<std::size_t>(opt_.benchmark.m()));
        opt_.benchmark.evaluate_into(current_, current_fitness_);
        insert_member(current_, current_fitness_);
        t_ = 0;
        if (!archive_.pairwise_incomparable()) throw ConfigError("paes: initial archive is not pairwise incomparable");
    }

    void insert_member(const Bitstring& x, std::span<const int> f) {
        archive_.insert(x, f);
        if (opt_.benchmark.is_pareto_optimal(f)) ++pareto_members_;
    }

    void remove_member(std::size_t i) {
        const auto f = archive_.fitness(i);
        removed_.insert(removed_.end(), f.begin(), f.end());
        if (opt_.benchmark.is_pareto_optimal(f)) --pareto_members_;
        archive_.erase(i);
    }

    void accept_candidate() {
        insert_member(candidate_, candidate_fitness_);
        std::swap(current_, candidate_);
        std::swap(current_fitness_, candidate_fitness_);
    }

    StepOutcome apply_candidate() {
        removed_.clear();
        const std::size_t last = archive_.size() - 1;
        StepEvent event;

        // s is a member, so comparing against it first settles the two most frequent cases:
        // equal to s means s is the only member c weakly dominates; dominated by s means case (2).
        const Dominance vs_current = compare(candidate_fitness_, current_fitness_);
        if (vs_current == Dominance::Equal) {
            remove_member(last);
            accept_candidate();
            event = StepEvent::DominatesAccepted;
        } else if (vs_current == Dominance::DominatedBy) {
            event = StepEvent::DominatedRejected;
        } else {
            dominated_.clear();
            bool beaten = false;
            for (std::size_t i = 0; i < archive_.size(); ++i) {
                const Dominance d = compare(candidate_fitness_, archive_.fitness(i));
                if (d == Dominance::Dominates || d == Dominance::Equal) {
                    dominated_.push_back(i);
                } else if (d == Dominance::DominatedBy) {
                    beaten = true;
                }
            }
            if (!dominated_.empty()) {
                for (auto it = dominated_.rbegin(); it != dominated_.rend(); ++it) remove_member(*it);
                accept_candidate();
                event = StepEvent::DominatesAccepted;
            } else if (beaten) {
                event = StepEvent::DominatedRejected;
            } else if (!archive_.full()) {
                accept_candidate();
                event = StepEvent::IncomparableAddedNotFull;
            } else {
                const ArchiverDecision decision = opt_.archiver.decide(archive_, candidate_fitness_, rng_);
                if (decision.accepted) {
                    if (!decision.removal || *decision.removal >= archive_.size()) {
                        throw std::logic_error("paes: archiver accepted without a valid removal");
                    }
                    remove_member(*decision.removal);
                    accept_candidate();
                    event = StepEvent::IncomparableArchiverAccepted;
                } else {
                    event = StepEvent::IncomparableArchiverRejected;
                }
            }
        }
        ++t_;
        if (opt_.check_invariants) check_state();

        const std::span<const int> cand = accepted(event) ? std::span<const int>(current_fitness_)
                                                          : std::span<const int>(candidate_fitness_);
        return {event, cand, removed_, removed_.size() / static_cast<std::size_t>(opt_.benchmark.m())};
    }

    PaesOptions opt_;
    Rng rng_;
    Mutation mutation_;
    Archive archive_;
    Bitstring current_;
    std::vector<int> current_fitness_;
    Bitstring candidate_;
    std::vector<int> candidate_fitness_;
    std::vector<std::size_t> flipped_;
    std::vector<std::size_t> dominated_;
    std::vector<int> removed_;
    std::uint64_t pareto_members_ = 0;
    std::uint64_t t_ = 0;
};

}  // namespace paes25
