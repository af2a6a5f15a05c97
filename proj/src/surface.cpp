#include "foamlink/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace foamlink {

SurfaceSpec SurfaceSpec::planar(int n) {
  if (n < 0) throw DomainError("planar surface needs a non-negative puncture count");
  return {SurfaceKind::Planar, n};
}

SurfaceSpec SurfaceSpec::canonical() const {
  if (kind == SurfaceKind::Annulus) return {SurfaceKind::Planar, 1};
  if (kind == SurfaceKind::Torus) return {SurfaceKind::Torus, 0};
  return *this;
}

int SurfaceSpec::h1_rank() const {
  switch (kind) {
    case SurfaceKind::Planar: return punctures;
    case SurfaceKind::Annulus: return 1;
    case SurfaceKind::Torus: return 2;
  }
  return 0;
}

std::string SurfaceSpec::describe() const {
  switch (kind) {
    case SurfaceKind::Planar: return "planar(" + std::to_string(punctures) + ")";
    case SurfaceKind::Annulus: return "annulus";
    case SurfaceKind::Torus: return "torus";
  }
  return "?";
}

bool ClassVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

int ClassVector::leading_sign() const {
  for (int c : coords_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  if (coords_.size() != o.coords_.size()) throw DomainError("class vectors of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

std::string ClassVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

UnorientedClass::UnorientedClass(const ClassVector& v) : rep_(v.leading_sign() < 0 ? -v : v) {}

std::string multiset_str(const CurveMultiset& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + m[i].rep().str();
  return s + "]";
}

std::string multiset_str(const OrientedMultiset& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + m[i].v.str();
  return s + "]";
}

void check_class_length(const ClassVector& c, const SurfaceSpec& f) {
  if (static_cast<int>(c.size()) != f.h1_rank())
    throw DomainError("malformed class " + c.str() + ": expected " + std::to_string(f.h1_rank()) +
                      " coordinates on " + f.describe());
}

bool is_essential(const UnorientedClass& c, const SurfaceSpec& f) {
  check_class_length(c.rep(), f);
  return !c.is_zero();
}

bool are_parallel(const UnorientedClass& c1, const UnorientedClass& c2, const SurfaceSpec& f) {
  if (!is_essential(c1, f) || !is_essential(c2, f))
    throw DomainError("parallelism is only defined for essential curves");
  return c1 == c2;
}

OrientedClass positive_orientation(const UnorientedClass& c) {
  if (c.is_zero()) throw DomainError("the zero class has no positive orientation");
  return {c.rep()};
}

int orientation_sign(const ClassVector& v) {
  const int s = v.leading_sign();
  if (s == 0) throw DomainError("the zero class has no orientation");
  return s;
}

bool is_simple_class(const ClassVector& v, const SurfaceSpec& f) {
  const SurfaceSpec cf = f.canonical();
  if (cf.is_torus()) {
    if (v.is_zero()) return true;
    return std::gcd(std::abs(v[0]), std::abs(v[1])) == 1;
  }
  return std::all_of(v.coords().begin(), v.coords().end(), [](int c) { return c >= -1 && c <= 1; });
}

namespace {

// Puncture set enclosed by a simple curve on a punctured disk.
std::vector<bool> enclosure(const UnorientedClass& c) {
  std::vector<bool> s;
  s.reserve(c.rep().size());
  for (int x : c.rep().coords()) s.push_back(x != 0);
  return s;
}

}  // namespace

bool region_valid(const std::vector<UnorientedClass>& curves, const SurfaceSpec& f) {
  for (const auto& c : curves)
    if (!is_essential(c, f)) throw DomainError("region_valid needs essential curves");
  if (curves.size() < 2) return false;
  const SurfaceSpec cf = f.canonical();
  if (cf.is_torus()) return curves.size() == 2 && curves[0] == curves[1];

  const std::size_t n = static_cast<std::size_t>(cf.punctures);
  for (std::size_t outer = 0; outer < curves.size(); ++outer) {
    const auto target = enclosure(curves[outer]);
    std::vector<int> hits(n, 0);
    for (std::size_t k = 0; k < curves.size(); ++k) {
      if (k == outer) continue;
      const auto e = enclosure(curves[k]);
      for (std::size_t p = 0; p < n; ++p) hits[p] += e[p] ? 1 : 0;
    }
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) ok = hits[p] == (target[p] ? 1 : 0);
    if (ok) return true;
  }
  return false;
}

std::vector<int> boundary_signs(const std::vector<UnorientedClass>& curves) {
  const std::size_t n = curves.size();
  if (n == 0 || n > 20) return {};
  std::vector<int> found;
  int solutions = 0;
  const std::size_t free_bits = n - 1;
  for (unsigned long mask = 0; mask < (1UL << free_bits); ++mask) {
    std::vector<int> s(n, 1);
    for (std::size_t i = 1; i < n; ++i) s[i] = (mask >> (i - 1)) & 1UL ? -1 : 1;
    ClassVector sum = 0 * curves[0].rep();
    for (std::size_t i = 0; i < n; ++i) sum += s[i] * curves[i].rep();
    if (sum.is_zero()) {
      ++solutions;
      found = s;
    }
  }
  if (solutions != 1) return {};
  return found;
}

}  // namespace foamlink
