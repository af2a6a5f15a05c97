#pragma once

// Cube complexes of either theory, split into blocks of fixed (sector, j).
// Inside a block the groups are indexed by i in steps of 2 and the
// differential lowers i by 2.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "foamlink/diagram.hpp"
#include "foamlink/k_foam.hpp"
#include "foamlink/laurent.hpp"
#include "foamlink/states.hpp"

namespace foamlink {

enum class Theory { Simple, K };

struct SparseMatrix {
  struct Entry {
    int row = 0;
    int col = 0;
    long long value = 0;
  };
  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;  // sorted by (row, col), no zeros
};

struct Block {
  std::string sector;
  int j = 0;
  std::map<int, std::vector<std::string>> levels;  // i -> generator labels
  std::map<int, SparseMatrix> differential;        // i -> map from level i to level i-2
};

struct BuildOptions {
  Theory theory = Theory::Simple;
  KOptions k;
  int cap = kDefaultCrossingCap;
  /// Restricts the k-theory to these sectors (all candidates when unset).
  std::optional<std::set<OrientedMultiset>> k_sectors;
  /// Only keep sectors whose key text is listed (all when unset).
  std::optional<std::set<std::string>> sector_filter;
  /// Negative control: drop the (-1)^t signs.
  bool corrupt_signs = false;
};

struct GradedComplex {
  Theory theory = Theory::Simple;
  KOptions k;
  std::map<std::pair<std::string, int>, Block> blocks;  // keyed by (sector, j)
  std::set<std::string> sectors;

  [[nodiscard]] std::size_t generator_count() const;
};

/// Key text used for sectors of the simple theory.
[[nodiscard]] std::string sector_key(const CurveMultiset& s);
/// Key text used for sectors of the k-theory.
[[nodiscard]] std::string sector_key(const OrientedMultiset& s);

[[nodiscard]] GradedComplex build_complex(const Diagram& d, const BuildOptions& opt);

/// Candidate k-sectors of a diagram (orientations of its states' essential
/// classes). Sectors outside this set can still carry homology, so any
/// comparison between two diagrams must use a common sector set.
[[nodiscard]] std::set<OrientedMultiset> k_sector_candidates(const Diagram& d, int cap = kDefaultCrossingCap);

/// For the k-theory, pins opt.k_sectors to the union of both diagrams'
/// candidates (intersected with any sectors already pinned). No-op otherwise.
void share_k_sectors(BuildOptions& opt, const Diagram& a, const Diagram& b);

struct D2Report {
  bool ok = true;
  std::size_t compositions = 0;
  std::vector<std::string> failures;  // first few offending entries
};

[[nodiscard]] D2Report check_d_squared(const GradedComplex& c);

/// Sum over generators of A^j (-1)^((j-i)/2), per sector. Simple theory only.
[[nodiscard]] std::map<std::string, LaurentPoly> graded_euler_characteristic(const GradedComplex& c);
[[nodiscard]] LaurentPoly graded_euler_characteristic(const GradedComplex& c, const std::string& sector);

/// Worker count from FOAMLINK_WORKERS, defaulting to the hardware count.
[[nodiscard]] unsigned worker_count();

}  // namespace foamlink
