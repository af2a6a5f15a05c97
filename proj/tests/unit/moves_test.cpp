#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "foamlink/homology.hpp"
#include "foamlink/moves.hpp"

using namespace foamlink;
using testing_support::corpus;

namespace {
std::vector<ClassVector> sorted_classes(const Diagram& d) {
  auto v = strand_classes(d);
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("a kink on the core adds one crossing") {
  const Diagram d = corpus("annulus_core");
  for (KinkSign s : {KinkSign::Positive, KinkSign::Negative}) {
    const Diagram k = apply_r1(d, 0, s);
    CHECK(k.crossing_count() == 1);
    CHECK(k.edges.size() == 2);  // strand edge plus the loop of the kink
    CHECK(validate(k).ok());
    CHECK(sorted_classes(k) == sorted_classes(d));
  }
}

TEST_CASE("opposite kinks cancel up to homology") {
  const Diagram d = corpus("annulus_core");
  const Diagram twice = apply_r1(apply_r1(d, 0, KinkSign::Positive), 0, KinkSign::Negative);
  CHECK(twice.crossing_count() == 2);
  CHECK(homology(build_complex(twice, {})) == homology(build_complex(d, {})));
}

TEST_CASE("R1 and R2 conserve strand classes on every corpus diagram") {
  for (const auto& [name, d] : testing_support::load_corpus()) {
    CAPTURE(name);
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
      const Diagram k = apply_r1(d, e, KinkSign::Positive);
      CHECK(validate(k).ok());
      CHECK(k.crossing_count() == d.crossing_count() + 1);
      CHECK(sorted_classes(k) == sorted_classes(d));
    }
    for (auto [a, b] : r2_candidates(d)) {
      const Diagram r = apply_r2(d, a, b);
      CHECK(validate(r).ok());
      CHECK(r.crossing_count() == d.crossing_count() + 2);
      CHECK(sorted_classes(r) == sorted_classes(d));
    }
  }
}

TEST_CASE("R3 keeps the crossing count and strand classes") {
  int seen = 0;
  for (const auto& [name, d] : testing_support::load_corpus()) {
    for (const auto& tri : r3_candidates(d)) {
      CAPTURE(name);
      const Diagram r = apply_r3(d, tri);
      CHECK(validate(r).ok());
      CHECK(r.crossing_count() == d.crossing_count());
      CHECK(sorted_classes(r) == sorted_classes(d));
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("moves refuse patterns that are not present") {
  const Diagram d = corpus("trefoil");
  CHECK_THROWS_AS((void)apply_r3(d, {0, 0, 1}), MoveNotApplicable);
  CHECK_THROWS_AS((void)apply_r1(d, 99, KinkSign::Positive), LookupError);
}

TEST_CASE("changing the crossing order permutes the order only") {
  const Diagram d = corpus("figure8");
  const Diagram p = with_crossing_order(d, {3, 1, 0, 2});
  CHECK(p.crossing_order == std::vector<int>{3, 1, 0, 2});
  CHECK(with_crossing_order(p, d.crossing_order).crossing_order == d.crossing_order);
  CHECK(p.edges.size() == d.edges.size());
  CHECK_THROWS_AS((void)with_crossing_order(d, {0, 0, 1, 2}), DomainError);
}
