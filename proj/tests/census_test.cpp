#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>

#include "ratjones/census.hpp"
#include "ratjones/jones.hpp"

namespace ratjones {
namespace {

// Number of inversion orbits {q, q^-1} over all odd 3 <= p < max_det, by
// direct search for inverses.
std::size_t orbit_count(std::int64_t max_det) {
  std::size_t count = 0;
  for (std::int64_t p = 3; p < max_det; p += 2) {
    std::set<std::int64_t> seen;
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1 || seen.count(q)) continue;
      std::int64_t inv = 1;
      while (inv * q % p != 1) ++inv;
      seen.insert(q);
      seen.insert(inv);
      ++count;
    }
  }
  return count;
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_classes(4).size(), 2u);
  EXPECT_EQ(enumerate_classes(10).size(), 13u);
  const auto p9 = classes_of_det(9);
  EXPECT_EQ(p9.size(), 4u);
}

TEST(Enumerate, MatchesOrbitCount) {
  for (std::int64_t max_det : {3, 12, 50, 301}) EXPECT_EQ(enumerate_classes(max_det).size(), orbit_count(max_det));
}

TEST(Enumerate, AscendingAndCanonical) {
  const auto classes = enumerate_classes(150);
  for (std::size_t i = 1; i < classes.size(); ++i) EXPECT_LT(classes[i - 1], classes[i]);
  for (const auto& k : classes) {
    EXPECT_EQ(k, schubert_canonical(k.p, k.q));
    EXPECT_NE(k.p, 1);
  }
}

TEST(Census, EntriesCarryInvariants) {
  const auto entries = compute_census(120, 2);
  ASSERT_EQ(entries.size(), enumerate_classes(120).size());
  for (const auto& e : entries) {
    EXPECT_EQ(e.det, e.knot.p);
    EXPECT_EQ(e.span, jones_span(e.jones));
    EXPECT_EQ(eval_int(e.jones, 1), 1);
  }
}

TEST(Coincidences, NoneBelowFortyNine) { EXPECT_TRUE(find_coincidences(49).empty()); }

TEST(Coincidences, FirstGroup) {
  const auto groups = find_coincidences(50);
  ASSERT_EQ(groups.size(), 1u);
  const auto& g = groups[0];
  EXPECT_EQ(g.det, 49);
  ASSERT_EQ(g.members.size(), 2u);
  const std::set<KnotClass> got(g.members.begin(), g.members.end());
  const std::set<KnotClass> want{schubert_canonical(49, 22), schubert_canonical(49, 36)};
  EXPECT_EQ(got, want);
  EXPECT_EQ(g.jones, jones_knot(49, 22));
  EXPECT_EQ(g.span, 10);
  EXPECT_FALSE(g.has_amphicheiral());
}

TEST(Coincidences, GroupInvariants) {
  const auto groups = find_coincidences(260, 2);
  ASSERT_FALSE(groups.empty());
  std::set<std::string> seen;
  for (const auto& g : groups) {
    EXPECT_GE(g.members.size(), 2u);
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      const auto& m = g.members[i];
      EXPECT_EQ(m.p, g.det);
      EXPECT_EQ(jones_knot(m.p, m.q), g.jones);
      if (i) EXPECT_LT(g.members[i - 1].q, m.q);
    }
    EXPECT_LE(to_string(g.jones), to_string(bar_t(g.jones)));
    // a mirror group never appears alongside its original
    const CoincidenceGroup m = mirror_group(g);
    EXPECT_EQ(m.jones, bar_t(g.jones));
    if (m.jones != g.jones) EXPECT_FALSE(seen.count(to_string(m.jones)));
    seen.insert(to_string(g.jones));
  }
}

TEST(Coincidences, IndependentOfShardCount) {
  const auto a = find_coincidences(300, 1);
  const auto b = find_coincidences(300, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].members, b[i].members);
    EXPECT_EQ(a[i].jones, b[i].jones);
  }
}

TEST(Parallel, EachIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 3,
                            [](std::size_t i) {
                              if (i == 57) throw Error(ErrorKind::Overflow, "boom");
                            }),
               Error);
}

TEST(Parallel, JobsFromEnvironment) {
  ::setenv("JONES_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3u);
  ::setenv("JONES_JOBS", "0", 1);
  EXPECT_GE(default_jobs(), 1u);
  ::unsetenv("JONES_JOBS");
  EXPECT_GE(default_jobs(), 1u);
}

}  // namespace
}  // namespace ratjones
