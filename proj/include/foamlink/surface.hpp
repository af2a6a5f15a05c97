#pragma once

// Base surfaces and first-homology arithmetic for curves on them.
//
// Supported surfaces are the disk with n punctures (planar(n); the annulus is
// planar(1)) and the torus. On these a simple closed curve bounds a disk iff
// its homology class vanishes, and disjoint essential curves are isotopic iff
// their unoriented classes agree, so curve classification is integer
// arithmetic on class vectors.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "foamlink/errors.hpp"

namespace foamlink {

enum class SurfaceKind { Planar, Annulus, Torus };

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Planar;
  int punctures = 0;  // meaningful for Planar only

  static SurfaceSpec planar(int n);
  static SurfaceSpec annulus() { return {SurfaceKind::Annulus, 1}; }
  static SurfaceSpec torus() { return {SurfaceKind::Torus, 0}; }

  /// annulus -> planar(1); everything downstream works on the canonical form.
  [[nodiscard]] SurfaceSpec canonical() const;
  [[nodiscard]] int h1_rank() const;
  [[nodiscard]] bool is_torus() const { return kind == SurfaceKind::Torus; }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
    const SurfaceSpec ca = a.canonical(), cb = b.canonical();
    return ca.kind == cb.kind && ca.punctures == cb.punctures;
  }
};

/// Integer class vector in H1(F). Shared storage for the oriented and
/// unoriented class types below.
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  ClassVector(std::initializer_list<int> coords) : coords_(coords) {}

  [[nodiscard]] const std::vector<int>& coords() const { return coords_; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] bool is_zero() const;
  /// +1 if the first nonzero coordinate is positive, -1 if negative, 0 for zero.
  [[nodiscard]] int leading_sign() const;

  ClassVector& operator+=(const ClassVector& o);
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a) {
    for (int& c : a.coords_) c = -c;
    return a;
  }
  friend ClassVector operator*(int s, ClassVector a) {
    for (int& c : a.coords_) c *= s;
    return a;
  }
  friend auto operator<=>(const ClassVector&, const ClassVector&) = default;
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<int> coords_;
};

/// Class of an oriented curve.
struct OrientedClass {
  ClassVector v;
  friend auto operator<=>(const OrientedClass&, const OrientedClass&) = default;
  friend bool operator==(const OrientedClass&, const OrientedClass&) = default;
};

/// Canonical representative of {v, -v}: first nonzero coordinate positive.
class UnorientedClass {
 public:
  UnorientedClass() = default;
  /// Canonicalizes; v and -v give the same result.
  explicit UnorientedClass(const ClassVector& v);

  [[nodiscard]] const ClassVector& rep() const { return rep_; }
  [[nodiscard]] bool is_zero() const { return rep_.is_zero(); }
  friend auto operator<=>(const UnorientedClass&, const UnorientedClass&) = default;
  friend bool operator==(const UnorientedClass&, const UnorientedClass&) = default;

 private:
  ClassVector rep_;
};

inline UnorientedClass canonicalize(const ClassVector& v) { return UnorientedClass(v); }

/// Sorted multiset of unoriented classes (a collection of disjoint essential
/// curves up to isotopy).
using CurveMultiset = std::vector<UnorientedClass>;
/// Sorted multiset of oriented classes.
using OrientedMultiset = std::vector<OrientedClass>;

[[nodiscard]] std::string multiset_str(const CurveMultiset& m);
[[nodiscard]] std::string multiset_str(const OrientedMultiset& m);

/// Throws DomainError unless c has h1_rank(f) coordinates.
void check_class_length(const ClassVector& c, const SurfaceSpec& f);

[[nodiscard]] bool is_essential(const UnorientedClass& c, const SurfaceSpec& f);
[[nodiscard]] bool are_parallel(const UnorientedClass& c1, const UnorientedClass& c2,
                                const SurfaceSpec& f);
/// The orientation we call positive for the isotopy class of c.
[[nodiscard]] OrientedClass positive_orientation(const UnorientedClass& c);
/// +1 if v is the positive orientation of its class, -1 otherwise (v != 0).
[[nodiscard]] int orientation_sign(const ClassVector& v);

/// Whether a traced curve with this class can be a simple closed curve on f:
/// planar coordinates in {-1,0,1}; torus classes zero or primitive.
[[nodiscard]] bool is_simple_class(const ClassVector& v, const SurfaceSpec& f);

/// Whether a genus-0 subsurface of f with exactly these boundary curves exists
/// (curves given by unoriented class, all essential).
///
/// planar(n): one curve encloses exactly the disjoint union of the punctures
/// enclosed by the others (the region between them then contains no puncture
/// and not the outer boundary). torus: exactly two parallel curves.
[[nodiscard]] bool region_valid(const std::vector<UnorientedClass>& curves, const SurfaceSpec& f);

/// Signs s_i with sum s_i * positive(c_i) = 0, normalized so s_0 = +1: the
/// boundary orientation a region with these boundary curves induces, up to a
/// global flip. Empty result when no such assignment exists or it is not
/// unique.
[[nodiscard]] std::vector<int> boundary_signs(const std::vector<UnorientedClass>& curves);

}  // namespace foamlink
