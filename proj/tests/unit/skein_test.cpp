#include <doctest.h>

#include "corpus.hpp"
#include "foamlink/moves.hpp"
#include "foamlink/skein.hpp"

using namespace foamlink;
using testing_support::corpus;

namespace {
LaurentPoly A(int e, long long c = 1) { return LaurentPoly::monomial(e, c); }
CurveMultiset core() { return {UnorientedClass(ClassVector{1})}; }
}  // namespace

TEST_CASE("bracket spot values") {
  CHECK(kauffman_bracket(corpus("trivial_unknot")).coeff({}) == LaurentPoly::delta());
  CHECK(LaurentPoly::delta() == A(2, -1) + A(-2, -1));
  const SkeinElement c = kauffman_bracket(corpus("annulus_core"));
  CHECK(c.terms().size() == 1);
  CHECK(c.coeff(core()) == A(0));
  const SkeinElement kink = kauffman_bracket(corpus("annulus_core_kink_pos"));
  CHECK(kink.terms().size() == 1);
  CHECK(kink.coeff(core()) == A(3, -1));
  CHECK(kauffman_bracket(corpus("annulus_core_kink_neg")).coeff(core()) == A(-3, -1));
}

TEST_CASE("bracket of the planar trefoil") {
  const SkeinElement t = kauffman_bracket(corpus("trefoil"));
  const LaurentPoly p = t.coeff({});
  // unnormalized: the familiar A^-7 - A^-3 - A^5 (or its mirror) times delta
  const LaurentPoly mirror_a = LaurentPoly::delta() * (A(-7, 1) + A(-3, -1) + A(5, -1));
  const LaurentPoly mirror_b = LaurentPoly::delta() * (A(7, 1) + A(3, -1) + A(-5, -1));
  CHECK((p == mirror_a || p == mirror_b));
}

TEST_CASE("Euler characteristic equals the bracket on every corpus diagram") {
  for (const auto& [name, d] : testing_support::load_corpus()) {
    CAPTURE(name);
    const EulerComparison e = compare_euler(d);
    CHECK(e.ok);
  }
}

TEST_CASE("skein relations on the corpus") {
  for (const auto& [name, d] : testing_support::load_corpus()) {
    CAPTURE(name);
    const SkeinElement b = kauffman_bracket(d);
    CHECK(kauffman_bracket(with_trivial_circle(d)) == LaurentPoly::delta() * b);
    for (int c = 0; c < d.crossing_count(); ++c) {
      const SkeinElement plus = kauffman_bracket(smooth_crossing(d, c, Smoothing::Positive));
      const SkeinElement minus = kauffman_bracket(smooth_crossing(d, c, Smoothing::Negative));
      CHECK(b == A(1) * plus + A(-1) * minus);
    }
  }
}

TEST_CASE("polynomial text") {
  CHECK(LaurentPoly{}.str() == "0");
  CHECK((A(-2, 3) + A(1, -1)).str().find("3*A^-2 - A") != std::string::npos);
}
