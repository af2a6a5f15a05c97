#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "foamlink/homology.hpp"

using namespace foamlink;
using testing_support::corpus;

namespace {

template <class S>
IntMatrix<S> mat(int r, int c, std::initializer_list<long long> v) {
  IntMatrix<S> m(r, c);
  auto it = v.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = S(*it++);
  return m;
}

// Determinant by cofactor expansion; test matrices are small.
BigInt det(const IntMatrix<BigInt>& m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    IntMatrix<BigInt> minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    total += (c % 2 ? -1 : 1) * m(0, c) * det(minor);
  }
  return total;
}

IntMatrix<BigInt> mul(const IntMatrix<BigInt>& a, const IntMatrix<BigInt>& b) {
  IntMatrix<BigInt> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

bool same(const IntMatrix<BigInt>& a, const IntMatrix<BigInt>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

SparseMatrix sparse(const IntMatrix<long long>& m) {
  SparseMatrix s;
  s.rows = static_cast<int>(m.rows());
  s.cols = static_cast<int>(m.cols());
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j)
      if (m(i, j)) s.entries.push_back({i, j, m(i, j)});
  return s;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form<long long>(mat<long long>(1, 1, {2})).factors == std::vector<long long>{2});
  const auto id = smith_normal_form<long long>(IntMatrix<long long>::Identity(3, 3));
  CHECK(id.D == IntMatrix<long long>::Identity(3, 3));
  const auto m = mat<long long>(2, 2, {2, 4, 6, 8});
  const auto s = smith_normal_form<long long>(m);
  CHECK(s.factors == std::vector<long long>{2, 4});
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("random Smith forms: transforms, divisibility, rank") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 6), val(-4, 4), zero(0, 2);
  for (int t = 0; t < 200; ++t) {
    const int r = dim(rng), c = dim(rng);
    IntMatrix<BigInt> m(r, c);
    IntMatrix<long long> ml(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        ml(i, j) = zero(rng) ? 0 : val(rng);
        m(i, j) = ml(i, j);
      }
    const auto s = smith_normal_form<BigInt>(m);
    CHECK(same(mul(mul(s.U, m), s.V), s.D));
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    for (int k = 0; k < s.rank(); ++k) {
      CHECK(s.factors[static_cast<std::size_t>(k)] > 0);
      if (k + 1 < s.rank()) CHECK(s.factors[static_cast<std::size_t>(k + 1)] % s.factors[static_cast<std::size_t>(k)] == 0);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j || i >= s.rank()) CHECK(s.D(i, j) == 0);
    CHECK(rational_rank(sparse(ml)) == s.rank());
    CHECK(invariant_factors(sparse(ml)).rank == s.rank());
  }
}

TEST_CASE("machine integers overflow into arbitrary precision") {
  const long long big = 3'000'000'019LL;
  const auto m = mat<long long>(3, 3, {big, 1, 0, 0, big, 1, 1, 0, big});
  CHECK_THROWS_AS((void)smith_normal_form<long long>(m * big), Overflow);
  const auto f = invariant_factors(sparse(m * big));
  CHECK(f.rank == 3);
  REQUIRE(f.torsion.size() == 3);
  IntMatrix<BigInt> mb(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mb(i, j) = m(i, j);
  const BigInt cube = BigInt(big) * big * big;
  BigInt product = 1;
  for (const auto& t : f.torsion) product *= BigInt(t.c_str());
  CHECK(product == abs(det(mb)) * cube);
}

TEST_CASE("homology spot values") {
  const auto core = homology(build_complex(corpus("annulus_core"), {}));
  REQUIRE(core.groups.size() == 1);
  CHECK(core.groups.begin()->first == HomologyKey{0, 0, "[(1)]"});
  CHECK(core.groups.begin()->second == HomologyGroup{1, {}});

  const auto unknot = homology(build_complex(corpus("trivial_unknot"), {}));
  CHECK(unknot.groups.size() == 2);
  CHECK(unknot.groups.count({0, -2, "[]"}) == 1);
  CHECK(unknot.groups.count({0, 2, "[]"}) == 1);

  for (std::optional<int> k : {std::optional<int>(0), std::optional<int>(3), std::optional<int>()}) {
    BuildOptions o;
    o.theory = Theory::K;
    o.k.k = k;
    const auto h = homology(build_complex(corpus("annulus_core"), o));
    CHECK(h.groups.size() == 2);
    CHECK(h.groups.count({0, 0, "[(1)]"}) == 1);
    CHECK(h.groups.count({0, 0, "[(-1)]"}) == 1);
  }
}

TEST_CASE("trefoil has 2-torsion") {
  const auto h = homology(build_complex(corpus("trefoil"), {}));
  bool torsion = false;
  for (const auto& [key, g] : h.groups) torsion |= g.torsion == std::vector<std::string>{"2"};
  CHECK(torsion);
}

TEST_CASE("homology refuses a complex with nonzero d squared") {
  CHECK_THROWS_AS((void)homology(build_complex(corpus("annulus_two_cores_r2"), {})), InvariantViolation);
}

TEST_CASE("shift and diff") {
  HomologyResult a;
  a.groups[{0, 0, "[]"}] = {1, {}};
  const HomologyResult b = a.shifted(1, 3);
  CHECK(b.groups.count({1, 3, "[]"}) == 1);
  CHECK(homology_diff(a, a).empty());
  CHECK(homology_diff(a, b).size() == 2);
  CHECK(HomologyGroup{2, {"2", "4"}}.str() == "Z^2 + Z/2 + Z/4");
}
