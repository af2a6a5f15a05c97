#pragma once

// Integer homology of graded complexes via Smith normal form.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "foamlink/complex.hpp"
#include "foamlink/errors.hpp"

namespace foamlink {

using BigInt = boost::multiprecision::cpp_int;

template <class Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised by checked machine-integer arithmetic; callers retry with BigInt.
struct Overflow : Error {
  Overflow() : Error("integer overflow") {}
};

namespace detail {

template <class T>
T checked_mul(const T& a, const T& b) {
  return a * b;
}
template <class T>
T checked_sub(const T& a, const T& b) {
  return a - b;
}
template <class T>
T checked_add(const T& a, const T& b) {
  return a + b;
}
template <>
inline long long checked_mul(const long long& a, const long long& b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
  return r;
}
template <>
inline long long checked_sub(const long long& a, const long long& b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
  return r;
}
template <>
inline long long checked_add(const long long& a, const long long& b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow();
  return r;
}
template <class T>
T abs_value(const T& a) {
  return a < 0 ? T(-a) : a;
}

}  // namespace detail

template <class Scalar>
struct SmithForm {
  IntMatrix<Scalar> D;  // U * M * V
  IntMatrix<Scalar> U;
  IntMatrix<Scalar> V;
  std::vector<Scalar> factors;  // nonzero diagonal entries, each dividing the next
  [[nodiscard]] int rank() const { return static_cast<int>(factors.size()); }
};

/// Smith normal form U * M * V = D with U, V unimodular. Transforms are
/// tracked only when `transforms` is set (U and V are left empty otherwise).
template <class Scalar>
SmithForm<Scalar> smith_normal_form(const IntMatrix<Scalar>& M, bool transforms = true) {
  using detail::abs_value;
  using detail::checked_mul;
  using detail::checked_sub;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  SmithForm<Scalar> out;
  out.D = M;
  auto& A = out.D;
  if (transforms) {
    out.U = IntMatrix<Scalar>::Identity(rows, rows);
    out.V = IntMatrix<Scalar>::Identity(cols, cols);
  }
  // row_i -= q * row_t (and the same on U)
  auto row_sub = [&](Eigen::Index i, Eigen::Index t, const Scalar& q) {
    for (Eigen::Index c = 0; c < cols; ++c)
      if (A(t, c) != 0) A(i, c) = checked_sub(A(i, c), checked_mul(q, A(t, c)));
    if (transforms)
      for (Eigen::Index c = 0; c < rows; ++c)
        if (out.U(t, c) != 0) out.U(i, c) = checked_sub(out.U(i, c), checked_mul(q, out.U(t, c)));
  };
  auto col_sub = [&](Eigen::Index j, Eigen::Index t, const Scalar& q) {
    for (Eigen::Index r = 0; r < rows; ++r)
      if (A(r, t) != 0) A(r, j) = checked_sub(A(r, j), checked_mul(q, A(r, t)));
    if (transforms)
      for (Eigen::Index r = 0; r < cols; ++r)
        if (out.V(r, t) != 0) out.V(r, j) = checked_sub(out.V(r, j), checked_mul(q, out.V(r, t)));
  };
  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.row(a).swap(A.row(b));
    if (transforms) out.U.row(a).swap(out.U.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.col(a).swap(A.col(b));
    if (transforms) out.V.col(a).swap(out.V.col(b));
  };

  const Eigen::Index n = std::min(rows, cols);
  for (Eigen::Index t = 0; t < n; ++t) {
    // Pivot of least absolute value in the trailing submatrix.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c)
        if (A(r, c) != 0 && (pr < 0 || abs_value(A(r, c)) < abs_value(A(pr, pc)))) pr = r, pc = c;
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool dirty = false;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (A(r, t) == 0) continue;
        row_sub(r, t, Scalar(A(r, t) / A(t, t)));
        if (A(r, t) != 0) {
          swap_rows(t, r);
          dirty = true;
        }
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (A(t, c) == 0) continue;
        col_sub(c, t, Scalar(A(t, c) / A(t, t)));
        if (A(t, c) != 0) {
          swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold a row with an entry the pivot does not divide.
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (A(r, c) % A(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      row_sub(t, bad, Scalar(-1));
    }
    if (A(t, t) < 0) {
      for (Eigen::Index c = 0; c < cols; ++c) A(t, c) = -A(t, c);
      if (transforms)
        for (Eigen::Index c = 0; c < rows; ++c) out.U(t, c) = -out.U(t, c);
    }
    out.factors.push_back(A(t, t));
  }
  return out;
}

/// Invariant factors of a sparse integer matrix: the count of unit factors and
/// the factors greater than one (decimal). Unit pivots are eliminated sparsely
/// first; the remainder goes through smith_normal_form, in machine integers
/// when they suffice and in BigInt otherwise.
struct InvariantFactors {
  int rank = 0;
  std::vector<std::string> torsion;
};
[[nodiscard]] InvariantFactors invariant_factors(const SparseMatrix& m);

/// Rank over the rationals by fraction-free elimination.
[[nodiscard]] int rational_rank(const SparseMatrix& m);

struct HomologyGroup {
  long long betti = 0;
  std::vector<std::string> torsion;  // invariant factors > 1
  [[nodiscard]] bool is_zero() const { return betti == 0 && torsion.empty(); }
  [[nodiscard]] std::string str() const;  // "Z^2 + Z/2"
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

using HomologyKey = std::tuple<int, int, std::string>;  // (i, j, sector)

struct HomologyResult {
  std::map<HomologyKey, HomologyGroup> groups;  // nonzero groups only
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;

  /// Same groups relabelled (i, j) -> (i + di, j + dj).
  [[nodiscard]] HomologyResult shifted(int di, int dj) const;
  /// Groups restricted to the given sectors.
  [[nodiscard]] HomologyResult restricted(const std::set<std::string>& sectors) const;
};

struct HomologyOptions {
  /// Cross-check every block's SNF rank against rational_rank.
  bool verify_rational = true;
};

/// Homology of every block. Throws InvariantViolation if d^2 != 0.
[[nodiscard]] HomologyResult homology(const GradedComplex& c, const HomologyOptions& opt = {});

/// Human-readable differences between two results (empty when equal).
[[nodiscard]] std::vector<std::string> homology_diff(const HomologyResult& a, const HomologyResult& b);

}  // namespace foamlink
