#pragma once

// Brute-force reference for the bridge tables. A foam is a list of symbolic
// pieces (genus, dots, boundary curves with their boundary orientation as
// classes on the surface, and an optional k-orientation). A bridge glues a
// band onto the record; the result is rewritten with the local relations
// until only disks and incompressible genus-0 pieces remain.

#include <map>
#include <optional>
#include <string>

#include "foamlink/k_foam.hpp"
#include "foamlink/simple_foam.hpp"

namespace oracle {

/// Normal forms keyed by canonical text, zero coefficients dropped.
using Outcome = std::map<std::string, long long>;

[[nodiscard]] Outcome bridge_simple(const foamlink::ResolutionTable& table, const foamlink::SimpleGenerator& g, int p);
[[nodiscard]] Outcome bridge_k(const foamlink::ResolutionTable& table, const foamlink::KGenerator& g, int p,
                               std::optional<int> k);

/// Canonical text of library outputs, for comparison with the oracle.
[[nodiscard]] Outcome canonical(const foamlink::ResolutionTable& table,
                                const foamlink::Combination<foamlink::SimpleGenerator>& c);
[[nodiscard]] Outcome canonical(const foamlink::Combination<foamlink::KGenerator>& c);

[[nodiscard]] std::string describe(const Outcome& o);

}  // namespace oracle

#include <cstdint>
#include <vector>

#include "foamlink/diagram.hpp"

namespace oracle {

struct SweepResult {
  long long simple_cases = 0;
  long long k_cases = 0;
  std::vector<std::string> mismatches;  // first few disagreements
  long long mismatch_count = 0;
};

/// Compares both bridge tables with the oracle on `cases` random
/// (generator, crossing) pairs per theory drawn from the pool. For the
/// k-theory, k is drawn from {0, 1, 2, inf} per case.
[[nodiscard]] SweepResult sweep(const std::vector<foamlink::Diagram>& pool, long long cases, std::uint64_t seed);

}  // namespace oracle
