#include <gtest/gtest.h>

#include <set>

#include "paes25/paes.hpp"

using namespace paes25;

namespace {

PaesOptions options(const Benchmark& b, std::size_t L, std::uint64_t seed = 1,
                    ArchiverKind kind = ArchiverKind::Aga, MutationKind mut = MutationKind::OneBit) {
    return PaesOptions{b, mut, Archiver::with_defaults(kind, b.m(), b.f_max(), L), L, seed, true};
}

std::set<FitnessVector> archive_set(const Paes& p) {
    const auto v = p.archive().fitness_vectors();
    return {v.begin(), v.end()};
}

}  // namespace

TEST(Init, SingleMemberArchive) {
    Paes p(options(Benchmark::lotz(10), 5, 3));
    EXPECT_EQ(p.archive().size(), 1u);
    EXPECT_EQ(p.archive().genotype(0), p.current());
    EXPECT_EQ(p.iteration(), 0u);
    EXPECT_EQ(FitnessVector(p.current_fitness()), Benchmark::lotz(10).evaluate(p.current()));
}

TEST(Init, UniformOnOneBit) {
    int ones = 0;
    constexpr int runs = 4000;
    for (int s = 0; s < runs; ++s) {
        Paes p(options(Benchmark::omm(1), 2, static_cast<std::uint64_t>(s)));
        ones += p.current().test(0);
    }
    EXPECT_NEAR(ones / double(runs), 0.5, 0.03);
}

TEST(Init, SameSeedSameState) {
    Paes a(options(Benchmark::mlotz(4, 40), 10, 77));
    Paes b(options(Benchmark::mlotz(4, 40), 10, 77));
    EXPECT_EQ(a.current(), b.current());
    for (int i = 0; i < 500; ++i) {
        a.step();
        b.step();
    }
    EXPECT_EQ(a.current(), b.current());
    EXPECT_EQ(a.archive().fitness_vectors(), b.archive().fitness_vectors());
}

TEST(Step, StrictImprovementReplacesCurrent) {
    const Benchmark b = Benchmark::lotz(4);
    Paes p(options(b, 4), Bitstring::from_string("1010"), {});
    const auto out = p.step_with(Bitstring::from_string("1110"));  // (1,1) -> (3,1)
    EXPECT_EQ(out.event, StepEvent::DominatesAccepted);
    EXPECT_EQ(out.removed_count, 1u);
    EXPECT_EQ(p.current().to_string(), "1110");
    EXPECT_EQ(archive_set(p), (std::set<FitnessVector>{{3, 1}}));
    EXPECT_EQ(p.iteration(), 1u);
}

TEST(Step, CompletingThePrefixIsIncomparable) {
    // 110 has fitness (2,1), so 111 at (3,0) joins the archive beside it.
    const Benchmark b = Benchmark::lotz(3);
    Paes p(options(b, 4), Bitstring::from_string("110"), {});
    const auto out = p.step_with(Bitstring::from_string("111"));
    EXPECT_EQ(out.event, StepEvent::IncomparableAddedNotFull);
    EXPECT_EQ(p.current().to_string(), "111");
    EXPECT_EQ(archive_set(p), (std::set<FitnessVector>{{2, 1}, {3, 0}}));
}

TEST(Step, EqualFitnessReplacesMember) {
    const Benchmark b = Benchmark::lotz(6);
    Paes p(options(b, 4), Bitstring::from_string("100100"), {});
    const auto out = p.step_with(Bitstring::from_string("101100"));
    // Both (1,2): equal fitness still counts as weak dominance.
    EXPECT_EQ(out.event, StepEvent::DominatesAccepted);
    EXPECT_EQ(p.current().to_string(), "101100");
    EXPECT_EQ(p.archive().size(), 1u);
}

TEST(Step, DominatedCandidateDiscarded) {
    const Benchmark b = Benchmark::lotz(4);
    const std::vector<Bitstring> others{Bitstring::from_string("0000")};
    Paes p(options(b, 4), Bitstring::from_string("1100"), others);
    const auto before = archive_set(p);
    const auto out = p.step_with(Bitstring::from_string("1000"));  // (1,3)
    EXPECT_EQ(out.event, StepEvent::IncomparableAddedNotFull);

    Paes q(options(b, 4), Bitstring::from_string("1100"), others);
    const auto out2 = q.step_with(Bitstring::from_string("0010"));  // (0,1)
    EXPECT_EQ(out2.event, StepEvent::DominatedRejected);
    EXPECT_EQ(archive_set(q), before);
    EXPECT_EQ(q.current().to_string(), "1100");
}

TEST(Step, RemovesEveryWeaklyDominatedMember) {
    const Benchmark b = Benchmark::lotz(6);
    const std::vector<Bitstring> others{Bitstring::from_string("110001"), Bitstring::from_string("001000")};
    Paes p(options(b, 5), Bitstring::from_string("100010"), others);
    ASSERT_EQ(archive_set(p), (std::set<FitnessVector>{{2, 0}, {0, 3}, {1, 1}}));
    const auto out = p.step_with(Bitstring::from_string("110000"));  // (2,4)
    EXPECT_EQ(out.event, StepEvent::DominatesAccepted);
    EXPECT_EQ(out.removed_count, 3u);
    EXPECT_EQ(archive_set(p), (std::set<FitnessVector>{{2, 4}}));
}

TEST(Step, ArchiverConsultedOnlyWhenFull) {
    const Benchmark b = Benchmark::lotz(4);
    auto opt = options(b, 1, 1, ArchiverKind::None);
    Paes p(opt, Bitstring::from_string("1100"), {});
    const auto out = p.step_with(Bitstring::from_string("1000"));
    EXPECT_EQ(out.event, StepEvent::IncomparableArchiverRejected);
    EXPECT_EQ(p.current().to_string(), "1100");
}

TEST(Step, RejectsWrongLength) {
    Paes p(options(Benchmark::lotz(4), 2));
    EXPECT_THROW(p.step_with(Bitstring(5)), DimensionError);
}

TEST(Options, Validation) {
    EXPECT_THROW(Paes(options(Benchmark::lotz(4), 0)), ConfigError);
    const std::vector<Bitstring> clash{Bitstring::from_string("1100")};
    EXPECT_THROW(Paes(options(Benchmark::lotz(4), 3), Bitstring::from_string("1100"), clash), ConfigError);
}

TEST(Run, SmallLotzReachesFront) {
    for (auto kind : {ArchiverKind::Aga, ArchiverKind::Hva, ArchiverKind::Mga, ArchiverKind::None}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Paes p(options(Benchmark::lotz(2), 3, seed, kind));
            int guard = 0;
            while (!p.archive_is_front() && guard++ < 100000) p.step();
            ASSERT_TRUE(p.archive_is_front()) << to_string(kind) << " seed " << seed;
            EXPECT_EQ(archive_set(p), (std::set<FitnessVector>{{0, 2}, {1, 1}, {2, 0}}));
            for (int i = 0; i < 200; ++i) p.step();
            EXPECT_TRUE(p.archive_is_front());
        }
    }
}

TEST(Run, InvariantsHoldUnderLongRuns) {
    for (auto mut : {MutationKind::OneBit, MutationKind::StandardBit}) {
        for (auto kind : {ArchiverKind::Aga, ArchiverKind::Hva, ArchiverKind::Mga}) {
            Paes p(options(Benchmark::mlotz(4, 12), 6, 5, kind, mut));
            for (int i = 0; i < 3000; ++i) p.step();
            EXPECT_NO_THROW(p.check_state());
            EXPECT_LE(p.archive().size(), 6u);
        }
    }
}

TEST(Run, PotentialNeverDecreasesUnderOneBit) {
    Paes p(options(Benchmark::mlotz(4, 16), 8, 9));
    int w = p.potential();
    for (int i = 0; i < 20000; ++i) {
        p.step();
        ASSERT_GE(p.potential(), w);
        w = p.potential();
    }
}
