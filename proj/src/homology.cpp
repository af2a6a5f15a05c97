#include "foamlink/homology.hpp"

#include <future>
#include <sstream>

namespace foamlink {

namespace {

template <class Scalar>
IntMatrix<Scalar> dense(const SparseMatrix& m) {
  IntMatrix<Scalar> out = IntMatrix<Scalar>::Zero(m.rows, m.cols);
  for (const auto& e : m.entries) out(e.row, e.col) = Scalar(e.value);
  return out;
}

template <class Scalar>
InvariantFactors factors_of(const SparseMatrix& m) {
  const auto snf = smith_normal_form<Scalar>(dense<Scalar>(m), false);
  InvariantFactors out;
  out.rank = snf.rank();
  for (const Scalar& f : snf.factors) {
    if (f == 1) continue;
    std::ostringstream s;
    s << f;
    out.torsion.push_back(s.str());
  }
  return out;
}

}  // namespace

InvariantFactors invariant_factors(const SparseMatrix& m) {
  if (m.entries.empty()) return {};
  try {
    return factors_of<long long>(m);
  } catch (const Overflow&) {
    return factors_of<BigInt>(m);
  }
}

int rational_rank(const SparseMatrix& m) {
  IntMatrix<BigInt> a = dense<BigInt>(m);
  const Eigen::Index rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  int rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(rank).swap(a.row(p));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index k = c + 1; k < cols; ++k)
        a(r, k) = (a(rank, c) * a(r, k) - a(r, c) * a(rank, k)) / prev;
      a(r, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

std::string HomologyGroup::str() const {
  std::string out;
  if (betti > 0) out = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t;
  return out.empty() ? "0" : out;
}

HomologyResult HomologyResult::shifted(int di, int dj) const {
  HomologyResult out;
  for (const auto& [key, g] : groups)
    out.groups[{std::get<0>(key) + di, std::get<1>(key) + dj, std::get<2>(key)}] = g;
  return out;
}

HomologyResult HomologyResult::restricted(const std::set<std::string>& sectors) const {
  HomologyResult out;
  for (const auto& [key, g] : groups)
    if (sectors.count(std::get<2>(key))) out.groups.emplace(key, g);
  return out;
}

namespace {

std::vector<std::pair<HomologyKey, HomologyGroup>> block_homology(const Block& b, bool verify) {
  std::map<int, InvariantFactors> out_of;  // factors of the differential leaving level i
  for (const auto& [i, m] : b.differential) {
    out_of[i] = invariant_factors(m);
    if (verify && rational_rank(m) != out_of[i].rank)
      throw InvariantViolation("Smith form rank disagrees with rational rank in sector " + b.sector +
                               " j=" + std::to_string(b.j) + " i=" + std::to_string(i));
  }
  std::vector<std::pair<HomologyKey, HomologyGroup>> res;
  for (const auto& [i, gens] : b.levels) {
    HomologyGroup g;
    long long r_out = 0, r_in = 0;
    if (auto it = out_of.find(i); it != out_of.end()) r_out = it->second.rank;
    if (auto it = out_of.find(i + 2); it != out_of.end()) {
      r_in = it->second.rank;
      g.torsion = it->second.torsion;
    }
    g.betti = static_cast<long long>(gens.size()) - r_out - r_in;
    if (!g.is_zero()) res.push_back({{i, b.j, b.sector}, std::move(g)});
  }
  return res;
}

}  // namespace

HomologyResult homology(const GradedComplex& c, const HomologyOptions& opt) {
  const D2Report d2 = check_d_squared(c);
  if (!d2.ok) {
    std::string msg = "d^2 != 0, refusing to compute homology";
    for (const auto& f : d2.failures) msg += "\n  " + f;
    throw InvariantViolation(msg);
  }
  std::vector<const Block*> blocks;
  for (const auto& [key, b] : c.blocks) blocks.push_back(&b);

  HomologyResult out;
  const std::size_t workers = std::max<std::size_t>(1, worker_count());
  for (std::size_t start = 0; start < blocks.size(); start += workers) {
    std::vector<std::future<std::vector<std::pair<HomologyKey, HomologyGroup>>>> jobs;
    for (std::size_t k = start; k < std::min(blocks.size(), start + workers); ++k)
      jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, block_homology,
                                std::cref(*blocks[k]), opt.verify_rational));
    for (auto& j : jobs)
      for (auto& [key, g] : j.get()) out.groups.emplace(key, std::move(g));
  }
  return out;
}

std::vector<std::string> homology_diff(const HomologyResult& a, const HomologyResult& b) {
  std::vector<std::string> out;
  auto where = [](const HomologyKey& k) {
    return "i=" + std::to_string(std::get<0>(k)) + " j=" + std::to_string(std::get<1>(k)) + " sector " +
           std::get<2>(k);
  };
  for (const auto& [k, g] : a.groups) {
    auto it = b.groups.find(k);
    const std::string other = it == b.groups.end() ? "0" : it->second.str();
    if (it == b.groups.end() || !(it->second == g)) out.push_back(where(k) + ": " + g.str() + " vs " + other);
  }
  for (const auto& [k, g] : b.groups)
    if (!a.groups.count(k)) out.push_back(where(k) + ": 0 vs " + g.str());
  return out;
}

}  // namespace foamlink
