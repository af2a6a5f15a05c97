#include <doctest.h>

#include "corpus.hpp"
#include "foamlink/moves.hpp"
#include "oracle.hpp"

using namespace foamlink;

TEST_CASE("bridge tables agree with the rewriting oracle on every corpus bridge") {
  for (const auto& [name, d] : testing_support::load_corpus()) {
    CAPTURE(name);
    const ResolutionTable t(d);
    const auto sectors = k_sector_candidates(t);
    for (const Resolution& r : t.all())
      for (int p = 0; p < d.crossing_count(); ++p) {
        if (r.state.at(p) != Smoothing::Positive) continue;
        for (const auto& g : enumerate_simple(r)) {
          const auto lib = oracle::canonical(t, bridge_simple(t, g, p));
          CHECK_MESSAGE(lib == oracle::bridge_simple(t, g, p), g.label());
        }
        for (std::optional<int> k : {std::optional<int>(0), std::optional<int>()}) {
          KOptions opt;
          opt.k = k;
          for (const auto& s : sectors)
            for (const auto& g : enumerate_k(r, d.surface, s, opt)) {
              const auto lib = oracle::canonical(bridge_k(t, d.surface, g, p, opt));
              CHECK_MESSAGE(lib == oracle::bridge_k(t, g, p, k), g.label());
            }
        }
      }
  }
}

TEST_CASE("random sweep over moved diagrams") {
  std::vector<Diagram> pool;
  for (const auto& [name, d] : testing_support::load_corpus()) {
    pool.push_back(d);
    if (d.crossing_count() <= 3 && !d.edges.empty()) pool.push_back(apply_r1(d, 0, KinkSign::Negative));
  }
  const auto res = oracle::sweep(pool, 3000, 5);
  CHECK(res.simple_cases == 3000);
  CHECK(res.k_cases == 3000);
  CHECK_MESSAGE(res.mismatch_count == 0, (res.mismatches.empty() ? std::string() : res.mismatches[0]));
}
