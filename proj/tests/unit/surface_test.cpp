#include <doctest.h>

#include "foamlink/surface.hpp"

using namespace foamlink;

namespace {
UnorientedClass U(std::initializer_list<int> v) { return UnorientedClass(ClassVector(v)); }
}  // namespace

TEST_CASE("essential curves are exactly the nonzero classes") {
  const auto p2 = SurfaceSpec::planar(2);
  CHECK_FALSE(is_essential(U({0, 0}), p2));
  CHECK(is_essential(U({1, 0}), p2));
  CHECK(is_essential(U({1, 1}), SurfaceSpec::torus()));
}

TEST_CASE("parallelism compares unoriented classes") {
  const auto p2 = SurfaceSpec::planar(2);
  CHECK(are_parallel(U({1, 0}), U({1, 0}), p2));
  CHECK_FALSE(are_parallel(U({1, 0}), U({1, 1}), p2));
  CHECK(are_parallel(U({1, 0}), U({-1, 0}), SurfaceSpec::torus()));
}

TEST_CASE("canonical representative has a positive leading coordinate") {
  CHECK(U({0, -1, 0}).rep() == ClassVector{0, 1, 0});
  CHECK(U({1, 1}).rep() == ClassVector{1, 1});
  CHECK(U({-2, 1}).rep() == ClassVector{2, -1});
}

TEST_CASE("simple classes") {
  CHECK(is_simple_class(ClassVector{1, -1}, SurfaceSpec::planar(2)));
  CHECK_FALSE(is_simple_class(ClassVector{2}, SurfaceSpec::annulus()));
  CHECK(is_simple_class(ClassVector{2, 3}, SurfaceSpec::torus()));
  CHECK_FALSE(is_simple_class(ClassVector{2, 4}, SurfaceSpec::torus()));
}

TEST_CASE("region validity") {
  const auto p2 = SurfaceSpec::planar(2);
  CHECK(region_valid({U({1, 1}), U({1, 0}), U({0, 1})}, p2));
  CHECK(region_valid({U({1, 0}), U({1, 0})}, p2));
  CHECK_FALSE(region_valid({U({1, 0}), U({0, 1})}, SurfaceSpec::torus()));
  CHECK(region_valid({U({1, 0}), U({1, 0})}, SurfaceSpec::torus()));
  CHECK_FALSE(region_valid({U({1, 0}), U({0, 1})}, p2));
}

TEST_CASE("boundary signs close up a pants") {
  const auto s = boundary_signs({U({1, 1}), U({1, 0}), U({0, 1})});
  REQUIRE(s.size() == 3);
  CHECK(s == std::vector<int>{1, -1, -1});
  CHECK(boundary_signs({U({1, 0}), U({0, 1})}).empty());
}

TEST_CASE("class length is checked against the surface") {
  CHECK_THROWS_AS(check_class_length(ClassVector{1, 0}, SurfaceSpec::annulus()), DomainError);
  CHECK_NOTHROW(check_class_length(ClassVector{1, 0}, SurfaceSpec::torus()));
}
