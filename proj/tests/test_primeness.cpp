#include <gtest/gtest.h>

#include <thread>

#include "helpers.hpp"
#include "oracle.hpp"
#include "primesrc/ideals.hpp"
#include "primesrc/primeness.hpp"

using namespace primesrc;
using testing_helpers::labels;

namespace {

std::vector<std::uint64_t> as_u64(const std::vector<Element>& v) {
  return {v.begin(), v.end()};
}

std::set<std::uint64_t> as_set(const Subset& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST(Primeness, KnownValues) {
  auto r = make_subring_kzn(2, 16);
  auto whole = Subset::whole(r);
  EXPECT_EQ(format_subset(r, primeness_source(r, whole)), "{0,4,8,12}");
  EXPECT_EQ(format_subset(r, semiprimeness_source(r, whole)), "{0,4,8,12}");

  auto z6 = make_zn(6);
  EXPECT_EQ(format_subset(z6, s_set(z6, 2, Subset::whole(z6))), "{0,3}");
  EXPECT_EQ(format_subset(z6, s_set(z6, 3, Subset::whole(z6))), "{0,2,4}");
  EXPECT_EQ(format_subset(z6, primeness_source(z6, Subset::of(z6, {3}))), "{0,2,4}");
  EXPECT_EQ(format_subset(z6, semiprimeness_source(z6, Subset::whole(z6))), "{0}");

  auto sz = make_scaled_zn(4, 2);
  EXPECT_TRUE(primeness_source(sz, Subset::whole(sz)).is_whole());

  auto two = make_subring_kzn(2, 4);
  EXPECT_EQ(format_subset(two, primeness_source(two, Subset::whole(two))), "{0,2}");

  auto sq = make_product(make_subring_kzn(2, 16), make_subring_kzn(2, 16));
  EXPECT_EQ(primeness_source(sq, Subset::whole(sq)).size(), 16u);
}

TEST(Primeness, FamiliesOfCyclicRings) {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    auto z = make_zn(n);
    EXPECT_EQ(primeness_source(z, Subset::whole(z)), Subset::zero(z)) << n;
  }
  for (std::uint64_t n = 1; n <= 8; ++n) {
    auto r = make_zero_mult_ring(n);
    EXPECT_TRUE(primeness_source(r, Subset::whole(r)).is_whole()) << n;
  }
}

TEST(Primeness, SSetWithSubsetRestriction) {
  auto z12 = make_zn(12);
  // S^a(A) = {b : a A b = 0}; with a = 2 and A = {3}, 6b = 0 mod 12.
  EXPECT_EQ(format_subset(z12, s_set(z12, 2, Subset::of(z12, {3}))), "{0,2,4,6,8,10}");
  EXPECT_TRUE(s_set(z12, 0, Subset::of(z12, {5})).is_whole());
  EXPECT_THROW(s_set(z12, 2, Subset::empty(z12)), Error);
  EXPECT_THROW(s_set(z12, 12, Subset::whole(z12)), Error);
}

TEST(Primeness, BothRoutesAgreeOnEverySubset) {
  std::vector<FiniteRing> rings{make_zn(6), make_zn(8), make_zero_mult_ring(4),
                                make_scaled_zn(8, 2), make_subring_kzn(2, 16),
                                make_product(make_zn(2), make_zero_mult_ring(2)),
                                make_scaled_zn(9, 3)};
  for (const auto& r : rings) {
    SCOPED_TRACE(r.descriptor());
    for (unsigned mask = 1; mask < (1u << r.order()); ++mask) {
      auto a = Subset::empty(r);
      for (Element x = 0; x < r.order(); ++x) {
        if (mask & (1u << x)) a.insert(x);
      }
      const auto via_s = primeness_source(r, a);
      ASSERT_EQ(via_s, primeness_source_direct(r, a)) << format_subset(r, a);
      ASSERT_TRUE(via_s.is_subset_of(semiprimeness_source(r, a))) << format_subset(r, a);
    }
  }
}

TEST(Primeness, BothRoutesAgreeOnMatrixRing) {
  auto m = make_matrix_ring(2, make_zn(2));
  for (Element x = 0; x < m.order(); ++x) {
    auto a = Subset::of(m, {x});
    EXPECT_EQ(primeness_source(m, a), primeness_source_direct(m, a));
  }
  EXPECT_EQ(primeness_source(m, Subset::whole(m)), Subset::zero(m));
}

TEST(Primeness, CrossCheckAgainstResidueArithmetic) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t e = 0; e < n; ++e) {
      auto r = make_scaled_zn(n, e);
      const auto whole = Subset::whole(r);
      std::vector<std::uint64_t> all(n);
      for (std::uint64_t i = 0; i < n; ++i) all[i] = i;
      ASSERT_EQ(as_set(primeness_source(r, whole)), oracle::p_source_cyclic(n, e, all)) << n << "," << e;
      ASSERT_EQ(as_set(semiprimeness_source(r, whole)), oracle::semi_source_cyclic(n, e, all));
      ASSERT_EQ(is_prime_ring(r).holds, oracle::is_prime_cyclic(n, e)) << n << "," << e;
      for (Element x = 0; x < n; ++x) {
        auto single = Subset::of(r, {x});
        ASSERT_EQ(as_set(primeness_source(r, single)),
                  oracle::p_source_cyclic(n, e, as_u64(single.members())));
      }
    }
  }
}

TEST(Primeness, PrimeRingWitnesses) {
  for (std::uint64_t p : {2, 3, 5, 7}) EXPECT_TRUE(is_prime_ring(make_zn(p)).holds) << p;
  EXPECT_TRUE(is_prime_ring(make_matrix_ring(2, make_zn(2))).holds);
  EXPECT_TRUE(is_prime_ring(make_zn(1)).holds);

  auto z6 = is_prime_ring(make_zn(6));
  EXPECT_FALSE(z6.holds);
  ASSERT_TRUE(z6.witness);
  EXPECT_EQ(*z6.witness, std::make_pair(Element{2}, Element{3}));

  EXPECT_TRUE(is_semiprime_ring(make_zn(6)).holds);
  auto z4 = is_semiprime_ring(make_zn(4));
  EXPECT_FALSE(z4.holds);
  EXPECT_EQ(z4.witness, std::optional<Element>(2));
}

TEST(Primeness, ConverseControlOnZ6) {
  // Z(6) is not prime yet its primeness source is {0}.
  auto z6 = make_zn(6);
  EXPECT_FALSE(is_prime_ring(z6).holds);
  EXPECT_EQ(primeness_source(z6, Subset::whole(z6)), Subset::zero(z6));
}

TEST(Primeness, SourcesAreIdealsForIdealA) {
  for (const auto& r : testing_helpers::battery_rings()) {
    if (r.order() > 16) continue;
    for (const auto& i : enumerate_ideals(r)) {
      EXPECT_TRUE(is_ideal(r, primeness_source(r, i))) << r.descriptor();
    }
  }
}

TEST(Primeness, ComputeSourceDispatch) {
  auto z6 = make_zn(6);
  auto whole = Subset::whole(z6);
  auto res = compute_source(z6, SourceKind::s_set, whole, Element{2});
  EXPECT_EQ(res.members, Subset::of(z6, {0, 3}));
  EXPECT_EQ(res.parameter_a, std::optional<Element>(2));
  EXPECT_EQ(to_string(res.kind), "S_a");
  EXPECT_THROW(compute_source(z6, SourceKind::s_set, whole), Error);
  EXPECT_EQ(to_string(compute_source(z6, SourceKind::primeness, whole).kind), "P");
  EXPECT_EQ(to_string(compute_source(z6, SourceKind::semiprimeness, whole).kind), "S_semi");
}

TEST(Primeness, ConcurrentReadsAreSafe) {
  // Rings are immutable after construction, so parallel queries must agree.
  auto r = make_product(make_subring_kzn(2, 16), make_zn(4));
  const auto expected = primeness_source(r, Subset::whole(r));
  std::vector<int> ok(4, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      auto copy = r;
      ok[t] = primeness_source(copy, Subset::whole(copy)) == expected &&
              primeness_source_direct(r, Subset::whole(r)) == expected;
    });
  }
  for (auto& t : threads) t.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

TEST(Primeness, LabelledInputs) {
  auto r = make_subring_kzn(2, 16);
  auto a = labels(r, {"4", "8"});
  EXPECT_EQ(format_subset(r, primeness_source(r, a)), "{0,2,4,6,8,10,12,14}");
}
