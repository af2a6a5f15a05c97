#include <doctest.h>

#include "corpus.hpp"
#include "foamlink/complex.hpp"
#include "foamlink/homology.hpp"
#include "foamlink/moves.hpp"

using namespace foamlink;
using testing_support::corpus;

namespace {
BuildOptions k_options(std::optional<int> k) {
  BuildOptions o;
  o.theory = Theory::K;
  o.k.k = k;
  return o;
}
}  // namespace

TEST_CASE("crossingless diagrams have no differential") {
  for (const char* name : {"annulus_core", "trivial_unknot", "torus_10"}) {
    CAPTURE(name);
    for (const auto& [key, b] : build_complex(corpus(name), {}).blocks) CHECK(b.differential.empty());
  }
}

TEST_CASE("kink on the core: one block with a small nonzero map") {
  const GradedComplex c = build_complex(corpus("annulus_core_kink_pos"), {});
  int nonzero = 0;
  for (const auto& [key, b] : c.blocks)
    for (const auto& [i, m] : b.differential)
      if (!m.entries.empty()) {
        ++nonzero;
        CHECK(rational_rank(m) <= 2);
      }
  CHECK(nonzero == 1);
}

TEST_CASE("d squared vanishes in the k-theory on the corpus") {
  for (const auto& [name, d] : testing_support::load_corpus())
    for (std::optional<int> k : {std::optional<int>(0), std::optional<int>(1), std::optional<int>(2), std::optional<int>()}) {
      CAPTURE(name);
      CAPTURE(k.value_or(-1));
      const D2Report r = check_d_squared(build_complex(d, k_options(k)));
      CHECK(r.ok);
    }
}

TEST_CASE("dropping the signs breaks d squared") {
  BuildOptions o;
  o.corrupt_signs = true;
  CHECK_FALSE(check_d_squared(build_complex(corpus("trefoil"), o)).ok);
  BuildOptions k = k_options(std::nullopt);
  k.corrupt_signs = true;
  CHECK_FALSE(check_d_squared(build_complex(corpus("figure8"), k)).ok);
}

// Two parallel cores joined by an R2: from the single trivial circle, one
// path splits it into two essential circles (killed as a turnback annulus),
// the other splits and remerges trivially, leaving twice the dotted disk.
TEST_CASE("the simple theory fails d squared on two parallel cores") {
  const D2Report r = check_d_squared(build_complex(corpus("annulus_two_cores_r2"), {}));
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].find("coefficient -2") != std::string::npos);
}

TEST_CASE("permuting the crossing order leaves homology unchanged") {
  const Diagram d = corpus("figure8");
  const Diagram p = with_crossing_order(d, {2, 0, 3, 1});
  CHECK(homology(build_complex(d, {})) == homology(build_complex(p, {})));
  CHECK(homology(build_complex(d, k_options(1))) == homology(build_complex(p, k_options(1))));
}

TEST_CASE("sector filter keeps only the named sectors") {
  BuildOptions o;
  o.sector_filter = std::set<std::string>{"[]"};
  const GradedComplex c = build_complex(corpus("annulus_braid_s1s1"), o);
  for (const auto& [key, b] : c.blocks) CHECK(b.sector == "[]");
  CHECK_FALSE(c.blocks.empty());
}

TEST_CASE("Euler characteristic is a simple-theory notion") {
  CHECK_THROWS_AS((void)graded_euler_characteristic(build_complex(corpus("hopf"), k_options(0))), UnsupportedTheory);
}

TEST_CASE("worker count follows the environment") {
  setenv("FOAMLINK_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  unsetenv("FOAMLINK_WORKERS");
  CHECK(worker_count() >= 1);
}
