#include <doctest.h>

#include "oracle.hpp"
#include "p4bound/invariants.hpp"

#include <algorithm>
#include <functional>

using p4bound::Connectivity;
using p4bound::ConnectedInvariants;
using p4bound::Rational;

namespace {

std::vector<oracle::Seq> as_seqs(const std::vector<ConnectedInvariants>& invs) {
  std::vector<oracle::Seq> out;
  for (const auto& inv : invs) out.emplace_back(inv.lambda().begin(), inv.lambda().end());
  return out;
}

ConnectedInvariants inv(std::initializer_list<std::int64_t> l) { return ConnectedInvariants(std::vector(l)); }

}  // namespace

TEST_CASE("construction validates the sequence") {
  CHECK_THROWS_AS(inv({}), std::invalid_argument);
  CHECK_THROWS_AS(inv({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(inv({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(inv({2, 0}), std::invalid_argument);
  CHECK(inv({5, 4, 1}).d() == 10);
  CHECK(inv({5, 4, 1}).s() == 3);
  CHECK(inv({5, 4, 1}).to_string() == "(5,4,1)");
  CHECK(ConnectedInvariants::parse("(5,3,2)") == inv({5, 3, 2}));
  CHECK(ConnectedInvariants::parse("7,2,1") == inv({7, 2, 1}));
  CHECK_THROWS(ConnectedInvariants::parse("7,,1"));
}

TEST_CASE("d = 10, s = 3 listings") {
  CHECK(p4bound::enumerate_invariants({10, 3, Connectivity::unrestricted}) ==
        std::vector{inv({7, 2, 1}), inv({6, 3, 1}), inv({5, 4, 1}), inv({5, 3, 2})});
  CHECK(p4bound::enumerate_invariants({10, 3, Connectivity::lambda_caps}) ==
        std::vector{inv({5, 4, 1}), inv({5, 3, 2})});
  CHECK(p4bound::enumerate_invariants({2, 3, Connectivity::unrestricted}).empty());
  CHECK(p4bound::enumerate_invariants({2, 3}).empty());
}

TEST_CASE("enumeration matches subset brute force for d <= 30, s <= 6") {
  for (std::int64_t d = 1; d <= 30; ++d) {
    for (int s = 1; s <= 6; ++s) {
      auto all = oracle::distinct_partitions(d, s);
      std::sort(all.begin(), all.end(), std::greater<>());
      std::vector<oracle::Seq> caps, gap;
      for (const auto& l : all) {
        if (oracle::capped(l)) caps.push_back(l);
        if (oracle::gap_free(l)) gap.push_back(l);
      }
      const auto got_all = as_seqs(p4bound::enumerate_invariants({d, s, Connectivity::unrestricted}));
      const auto got_caps = as_seqs(p4bound::enumerate_invariants({d, s, Connectivity::lambda_caps}));
      const auto got_gap = as_seqs(p4bound::enumerate_invariants({d, s, Connectivity::gap_free}));
      CAPTURE(d);
      CAPTURE(s);
      CHECK(got_all == all);
      CHECK(got_caps == caps);
      CHECK(got_gap == gap);
      CHECK(p4bound::count_invariants({d, s, Connectivity::unrestricted}) == static_cast<std::int64_t>(all.size()));
    }
  }
}

TEST_CASE("gap-free sequences satisfy the caps") {
  for (std::int64_t d = 2; d <= 60; ++d) {
    for (int s = 1; s <= 8; ++s) {
      p4bound::for_each_invariant({d, s, Connectivity::gap_free}, [](const ConnectedInvariants& c) {
        CHECK(c.is_gap_free());
        CHECK(c.satisfies_caps());
      });
    }
  }
}

TEST_CASE("enumeration order is strictly lexicographically decreasing") {
  for (std::int64_t d : {25, 40, 61}) {
    for (int s : {3, 4, 5}) {
      const auto list = p4bound::enumerate_invariants({d, s, Connectivity::unrestricted});
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i] < list[i - 1]);
    }
  }
}

TEST_CASE("genus functionals") {
  CHECK(p4bound::genus_functional(inv({1})) == 0);
  CHECK(p4bound::genus_functional(inv({5, 4, 1})) == 13);
  CHECK(p4bound::genus_functional(inv({3, 2, 1})) == 3);
  CHECK(p4bound::genus_functional_alt(inv({1})) == 0);
  CHECK(p4bound::genus_functional_alt(inv({5, 4, 1})) == 22);
  CHECK(p4bound::genus_functional_alt(inv({3, 2, 1})) == 8);
}

TEST_CASE("chi functional") {
  CHECK(p4bound::chi_functional(inv({1})) == Rational(1));
  CHECK(p4bound::chi_functional(inv({5, 4, 1})) == Rational(9));
  CHECK(p4bound::chi_functional(inv({3, 2, 1})) == Rational(1));
}

TEST_CASE("functionals match the oracle; alt - genus = d - 1; chi is an integer") {
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (int s = 1; s <= 7; ++s) {
      p4bound::for_each_invariant({d, s, Connectivity::unrestricted}, [&](const ConnectedInvariants& c) {
        const oracle::Seq l(c.lambda().begin(), c.lambda().end());
        CHECK(p4bound::genus_functional(c) == oracle::genus(l));
        CHECK(p4bound::genus_functional_alt(c) - p4bound::genus_functional(c) == d - 1);
        const Rational x = p4bound::chi_functional(c);
        CHECK(x.to_fraction_string() == oracle::chi(l).str());
        CHECK(x.is_integer());
      });
    }
  }
}

TEST_CASE("connectivity names") {
  for (auto c : {Connectivity::unrestricted, Connectivity::lambda_caps, Connectivity::gap_free}) {
    CHECK(p4bound::parse_connectivity(p4bound::to_string(c)) == c);
  }
  CHECK_THROWS_AS(p4bound::parse_connectivity("loose"), std::invalid_argument);
}
