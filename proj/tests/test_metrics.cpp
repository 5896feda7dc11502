#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "mofs/errors.hpp"
#include "mofs/metrics.hpp"

using namespace mofs;
using VS = std::vector<ObjectiveVector>;

namespace {

ReferenceFront front_of(VS vectors, const char* criteria = "gamma2") {
  ReferenceFront f;
  f.criteria = builtin_criteria(criteria);
  f.vectors = std::move(vectors);
  return f;
}

RunRecord record_with(VS vectors, const char* criteria = "gamma2") {
  RunRecord r;
  r.criteria = builtin_criteria(criteria);
  r.vectors = std::move(vectors);
  return r;
}

}  // namespace

TEST_CASE("deviation") {
  const std::vector<double> unit{1.0, 1.0};
  CHECK(deviation(ObjectiveVector{3, 4}, ObjectiveVector{3, 4}, unit) == 0.0);
  CHECK(deviation(ObjectiveVector{9, 14}, ObjectiveVector{7, 12}, range_weights(VS{{7, 12}})) == 2.0);
  CHECK(deviation(ObjectiveVector{1, 1}, ObjectiveVector{3, 4}, unit) == 0.0);
  CHECK_THROWS_AS(deviation(ObjectiveVector{1}, ObjectiveVector{1, 2}, unit), InvalidArgument);
}

TEST_CASE("D1 and D2 examples") {
  const auto perfect = d1_d2(VS{{0, 10}, {10, 0}}, front_of({{0, 10}, {10, 0}}));
  CHECK(perfect.d1 == 0.0);
  CHECK(perfect.d2 == 0.0);
  CHECK(perfect.covered == 2);

  const auto single = d1_d2(VS{{9, 14}}, front_of({{7, 12}}));
  CHECK(single.d1 == 2.0);
  CHECK(single.d2 == 2.0);

  const auto half = d1_d2(VS{{0, 10}}, front_of({{0, 10}, {10, 0}}));
  CHECK(half.d1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.d2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(half.covered == 1);
  CHECK(half.reference_size == 2);

  CHECK_THROWS_AS(d1_d2(VS{}, front_of({{1, 2}})), InvalidArgument);
  CHECK_THROWS_AS(d1_d2(VS{{1, 2}}, front_of({})), InvalidArgument);
}

TEST_CASE("metric properties") {
  SplitMix64 rng(61);
  auto random_set = [&](std::size_t count) {
    VS s;
    for (std::size_t i = 0; i < count; ++i) {
      ObjectiveVector v(3);
      for (auto& x : v) x = static_cast<Value>(rng.below(50));
      s.push_back(v);
    }
    return s;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const VS ref = pareto_filter(random_set(8));
    VS approx = random_set(1 + rng.below(6));
    const auto base = d1_d2(approx, std::span<const ObjectiveVector>(ref));
    CHECK(base.d1 <= base.d2);
    CHECK(base.d1 >= 0.0);

    VS shuffled_a = approx, shuffled_r = ref;
    std::reverse(shuffled_a.begin(), shuffled_a.end());
    std::reverse(shuffled_r.begin(), shuffled_r.end());
    const auto reordered = d1_d2(shuffled_a, std::span<const ObjectiveVector>(shuffled_r));
    CHECK(reordered.d1 == doctest::Approx(base.d1).epsilon(1e-12));
    CHECK(reordered.d2 == base.d2);

    VS more = approx;
    more.push_back(random_set(1).front());
    const auto grown = d1_d2(more, std::span<const ObjectiveVector>(ref));
    CHECK(grown.d1 <= base.d1 + 1e-15);
    CHECK(grown.d2 <= base.d2);

    VS scaled_a = approx, scaled_r = ref;
    for (auto& v : scaled_a) for (auto& x : v) x *= 3;
    for (auto& v : scaled_r) for (auto& x : v) x *= 3;
    const auto scaled = d1_d2(scaled_a, std::span<const ObjectiveVector>(scaled_r));
    bool ranges_positive = true;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [lo, hi] = std::minmax_element(ref.begin(), ref.end(), [k](const auto& a, const auto& b) { return a[k] < b[k]; });
      ranges_positive = ranges_positive && (*hi)[k] > (*lo)[k];
    }
    if (ranges_positive) {
      CHECK(scaled.d1 == doctest::Approx(base.d1).epsilon(1e-12));
      CHECK(scaled.d2 == doctest::Approx(base.d2).epsilon(1e-12));
    }

    VS superset = ref;
    superset.insert(superset.end(), approx.begin(), approx.end());
    const auto full = d1_d2(superset, std::span<const ObjectiveVector>(ref));
    CHECK(full.d1 == 0.0);
    CHECK(full.d2 == 0.0);
    CHECK(full.covered == ref.size());
  }
}

TEST_CASE("identification frequency") {
  const auto front = front_of({{1, 5}, {3, 3}, {5, 1}});
  const std::vector<RunRecord> runs{record_with({{1, 5}, {3, 3}}), record_with({{1, 5}, {4, 4}}),
                                    record_with({{1, 5}, {3, 3}, {5, 1}}), record_with({{1, 5}})};
  const auto table = identification_frequency(runs, front);
  CHECK(table.runs == 4);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].count == 4);
  CHECK(table.rows[0].frequency == 1.0);
  CHECK(table.rows[1].count == 2);
  CHECK(table.rows[1].frequency == 0.5);
  CHECK(table.rows[2].count == 1);

  const std::vector<RunRecord> none{record_with({{9, 9}})};
  CHECK(identification_frequency(none, front).rows[1].frequency == 0.0);

  const std::vector<RunRecord> mismatched{record_with({{1, 5}}, "gamma1")};
  CHECK_THROWS_AS(identification_frequency(mismatched, front), InvalidArgument);

  std::ostringstream csv;
  write_frequency_csv(csv, table, front.criteria, "d");
  CHECK(csv.str() == "# config_digest=d\n# runs=4\nCMAX,CSUM,count,frequency\n1,5,4,1\n3,3,2,0.5\n5,1,1,0.25\n");
}
