#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qwm/cluster.hpp"

using namespace qwm;

namespace {

std::vector<MaskSym> mask_of(const char* s) { return cluster_mask(parse_directions(s)); }

void for_each_rl_sequence(int length, const std::function<void(const DirectionSequence&)>& fn) {
  DirectionSequence seq = parse_directions("RL");
  seq.resize(static_cast<std::size_t>(length));
  const int tail = length - 2;
  const std::uint64_t total = std::uint64_t{1} << tail;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < tail; ++i)
      seq[2 + i] = ((bits >> (tail - 1 - i)) & 1) ? Dir::R : Dir::L;
    fn(seq);
  }
}

}  // namespace

TEST_CASE("cluster masks") {
  using M = MaskSym;
  CHECK(mask_of("LRRLLLRRLRLRRRLLLLR") ==
        std::vector<M>{M::I, M::Mbar, M::M, M::Mbar, M::S, M::Sbar, M::S, M::Mbar, M::M, M::Ibar});
  CHECK(mask_of("RLRL") == std::vector<M>{M::Ibar, M::S, M::Sbar, M::I});
  CHECK(mask_of("RLLL") == std::vector<M>{M::Ibar, M::M});
  CHECK(mask_to_string(mask_of("RLLL")) == "Ī M");
}

TEST_CASE("profiles") {
  const ClusterProfile a = profile(parse_directions("RLRL"));
  CHECK(a == ClusterProfile{2, 2, 2, 2, 2, 2, 0, 0, 1, 1, kT110});

  const ClusterProfile b = profile(parse_directions("RLLL"));
  CHECK(b == ClusterProfile{3, 1, 1, 1, 0, 1, 0, 0, 1, 0, kT001});

  // L cluster mask I,M,S,S,M has two M groups and one S group; the lone
  // inner R cluster sits between two S's, so it does not count toward r
  const ClusterProfile c = profile(parse_directions("LRRLLLRRLRLRRRLLLLR"));
  CHECK(c.g == 3);
  CHECK(c.r == 0);
  CHECK(c.NL == 10);
  CHECK(c.NR == 9);
  CHECK(c.CL == 5);
  CHECK(c.CR == 5);
  CHECK(c.CL1 == 3);
  CHECK(c.CR1 == 2);
  CHECK(c.CL2 == 0);
  CHECK(c.CR2 == 2);
  CHECK(c.t == kT001);
}

TEST_CASE("phase from profile matches examples") {
  CHECK(phase_from_profile(profile(parse_directions("RLRL"))) == -1);
  CHECK(phase_from_profile(profile(parse_directions("RLLL"))) == +1);
}

TEST_CASE("phase formula equals the dynamic sign exhaustively") {
  for (int len = 3; len <= 13; ++len) {
    for_each_rl_sequence(len, [&](const DirectionSequence& seq) {
      REQUIRE(phase_from_profile(profile(seq)) == path_sign(seq));
    });
  }
}

TEST_CASE("concrete sequences only realize the four concrete end codes") {
  std::set<int> seen;
  for (int len = 3; len <= 11; ++len)
    for_each_rl_sequence(len, [&](const DirectionSequence& seq) { seen.insert(profile(seq).t); });
  CHECK(seen == std::set<int>{kT001, kT010, kT110, kT101});
}
