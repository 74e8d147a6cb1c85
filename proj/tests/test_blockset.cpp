#include <doctest.h>

#include "gq/blockset.hpp"
#include "gq/error.hpp"
#include "gq/generate.hpp"
#include "helpers.hpp"

using namespace gq;
using gqt::bs;

TEST_CASE("canonical forms are minimal") {
    CHECK(bs("pre=;per=1010").to_string() == "pre=;per=10");
    CHECK(bs("pre=1;per=01").to_string() == "pre=;per=10");    // preperiod folds into the cycle
    CHECK(bs("pre=111;per=1").to_string() == "pre=;per=1");
    CHECK(bs("pre=0;per=0").to_string() == "pre=;per=0");
    CHECK(bs("pre=10;per=110110").to_string() == "pre=;per=101");  // the tail is fully periodic
    CHECK(bs("pre=01;per=10").to_string() == "pre=01;per=10");     // genuinely eventually periodic
    CHECK(BlockSet::full_set().to_string() == "pre=;per=1");
}

TEST_CASE("canonicalization is idempotent and preserves membership") {
    ElementGen gen(7);
    for (int t = 0; t < 300; ++t) {
        long plen = gen.pick(1, 6), mlen = gen.pick(0, 4);
        std::string pre, per;
        for (long i = 0; i < mlen; ++i) pre += gen.pick(0, 1) ? '1' : '0';
        for (long i = 0; i < plen; ++i) per += gen.pick(0, 1) ? '1' : '0';
        BlockSet a = BlockSet::from_bits(pre, per);
        BlockSet again = BlockSet::parse(a.to_string());
        CHECK(a == again);
        BlockSet raw;  // reference membership straight off the strings
        for (std::size_t k = 0; k < 40; ++k) {
            bool member = k < pre.size() ? pre[k] == '1' : per[(k - pre.size()) % per.size()] == '1';
            CHECK(a.contains(k) == member);
            (void)raw;
        }
    }
}

TEST_CASE("boolean operations") {
    BlockSet evens = gqt::evens, odds = gqt::odds;
    CHECK(evens.complement() == odds);
    CHECK(evens.complement().complement() == evens);
    CHECK(evens.intersect(odds).is_empty());
    CHECK(evens.unite(odds).is_full());
    CHECK(evens.difference(odds) == evens);
    CHECK(bs("pre=;per=1100").intersect(evens) == bs("pre=;per=1000"));
}

TEST_CASE("boolean algebra laws on random sets") {
    ElementGen gen(11);
    for (int t = 0; t < 200; ++t) {
        BlockSet a = gen.blockset(), b = gen.blockset(), c = gen.blockset();
        CHECK(a.unite(b.unite(c)) == a.unite(b).unite(c));
        CHECK(a.intersect(b.unite(c)) == a.intersect(b).unite(a.intersect(c)));
        CHECK(a.unite(b).complement() == a.complement().intersect(b.complement()));
        CHECK(a.intersect(b).complement() == a.complement().unite(b.complement()));
        CHECK(a.complement().complement() == a);
        // N is infinite, so a set or its complement accumulates.
        CHECK((a.accumulates() || a.complement().accumulates()));
    }
}

TEST_CASE("accumulation") {
    CHECK(gqt::evens.accumulates());
    CHECK(BlockSet::full_set().accumulates());
    CHECK_FALSE(bs("pre=111;per=0").accumulates());  // {0,1,2}
    CHECK_FALSE(BlockSet::empty_set().accumulates());
}

TEST_CASE("periodic core forgets finitely many blocks") {
    CHECK(bs("pre=1;per=01").periodic_core() == gqt::evens);
    CHECK(bs("pre=0010;per=10").periodic_core() == gqt::evens);
    CHECK(bs("pre=111;per=0").periodic_core().is_empty());
    ElementGen gen(13);
    for (int t = 0; t < 200; ++t) {
        long mlen = gen.pick(0, 5);
        std::string pre;
        for (long i = 0; i < mlen; ++i) pre += gen.pick(0, 1) ? '1' : '0';
        BlockSet a = gen.blockset();
        BlockSet noisy = BlockSet::from_bits(pre, a.period());
        BlockSet core = noisy.periodic_core();
        // Same tail: membership agrees once past the preperiod.
        for (std::size_t k = pre.size(); k < pre.size() + 20; ++k)
            CHECK(core.contains(k) == noisy.contains(k));
        CHECK(core.preperiod().empty());
    }
}

TEST_CASE("sample epsilons follow the midpoint formula") {
    // eps_k = 3*2^{-(k+2)} for the first member blocks, decreasing.
    auto all = BlockSet::full_set().sample_epsilons(3);
    CHECK(all == std::vector<double>{0.75, 0.375, 0.1875});
    // evens: blocks 0 and 2.
    auto ev = gqt::evens.sample_epsilons(2);
    CHECK(ev == std::vector<double>{0.75, 0.1875});
    CHECK(gqt::error_kind([] { bs("pre=111;per=0").sample_epsilons(1); }) ==
          ErrKind::NotAccumulating);
}

TEST_CASE("block_of inverts block_midpoint") {
    for (std::size_t k = 0; k < 50; ++k) CHECK(block_of(block_midpoint(k)) == k);
    CHECK(block_of(1.0) == 0);
    CHECK(block_of(0.5) == 1);
    CHECK(block_of(0.25) == 2);
}

TEST_CASE("blockset literal parse errors") {
    CHECK_THROWS_AS(BlockSet::parse("per=10"), Error);
    CHECK_THROWS_AS(BlockSet::parse("pre=;per="), Error);
    CHECK_THROWS_AS(BlockSet::from_bits("12", "0"), Error);
}
