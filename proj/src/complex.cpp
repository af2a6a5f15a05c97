#include "foamlink/complex.hpp"

#include <cstdlib>
#include <thread>

#include "foamlink/simple_foam.hpp"

namespace foamlink {

std::size_t GradedComplex::generator_count() const {
  std::size_t n = 0;
  for (const auto& [key, b] : blocks)
    for (const auto& [i, labels] : b.levels) n += labels.size();
  return n;
}

std::string sector_key(const CurveMultiset& s) { return multiset_str(s); }
std::string sector_key(const OrientedMultiset& s) { return multiset_str(s); }

unsigned worker_count() {
  if (const char* env = std::getenv("FOAMLINK_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {

struct Slot {
  std::pair<std::string, int> block;
  int i = 0;
  int index = 0;
};

template <class G>
class Assembler {
 public:
  Assembler(const Diagram& d, const BuildOptions& opt) : d_(d), opt_(opt), positions_(d.order_positions()) {}

  void add(const G& g, const std::string& sector) {
    if (opt_.sector_filter && !opt_.sector_filter->count(sector)) return;
    const auto key = std::make_pair(sector, g.j);
    Block& b = out_.blocks[key];
    b.sector = sector;
    b.j = g.j;
    auto& level = b.levels[g.i];
    slots_.emplace(g, Slot{key, g.i, static_cast<int>(level.size())});
    level.push_back(g.label());
    out_.sectors.insert(sector);
  }

  template <class Bridge>
  GradedComplex finish(Bridge&& bridge) {
    std::map<std::pair<std::pair<std::string, int>, int>, std::map<std::pair<int, int>, long long>> acc;
    for (const auto& [g, src] : slots_) {
      for (int p = 0; p < d_.crossing_count(); ++p) {
        if (g.state.at(p) == Smoothing::Negative) continue;
        const auto terms = bridge(g, p);
        if (terms.empty()) continue;
        const int sign =
            opt_.corrupt_signs ? 1 : (sign_exponent(d_, positions_, g.state, p) % 2 ? -1 : 1);
        for (const auto& [target, coeff] : terms) {
          const auto it = slots_.find(target);
          if (it == slots_.end())
            throw InvariantViolation("bridge at crossing '" + d_.crossings[static_cast<std::size_t>(p)].id +
                                     "' of " + g.label() + " left the basis: " + target.label());
          if (it->second.block != src.block || it->second.i != src.i - 2)
            throw InvariantViolation("bridge changed the block of " + g.label());
          acc[{src.block, src.i}][{it->second.index, src.index}] += sign * coeff;
        }
      }
    }
    for (auto& [key, b] : out_.blocks) {
      for (const auto& [i, labels] : b.levels) {
        const auto lower = b.levels.find(i - 2);
        if (lower == b.levels.end()) continue;
        SparseMatrix m;
        m.rows = static_cast<int>(lower->second.size());
        m.cols = static_cast<int>(labels.size());
        const auto found = acc.find({key, i});
        if (found != acc.end())
          for (const auto& [rc, v] : found->second)
            if (v != 0) m.entries.push_back({rc.first, rc.second, v});
        b.differential[i] = std::move(m);
      }
    }
    return std::move(out_);
  }

  GradedComplex& result() { return out_; }

 private:
  const Diagram& d_;
  BuildOptions opt_;
  std::vector<int> positions_;
  std::map<G, Slot> slots_;
  GradedComplex out_;
};

}  // namespace

GradedComplex build_complex(const Diagram& d, const BuildOptions& opt) {
  require_valid(d);
  check_crossing_cap(d, opt.cap);
  const ResolutionTable table(d, opt.cap);
  const SurfaceSpec f = d.surface.canonical();

  if (opt.theory == Theory::Simple) {
    Assembler<SimpleGenerator> as(d, opt);
    for (const Resolution& r : table.all())
      for (const auto& g : enumerate_simple(r)) as.add(g, sector_key(g.bottom));
    GradedComplex c = as.finish([&](const SimpleGenerator& g, int p) { return bridge_simple(table, g, p); });
    c.theory = Theory::Simple;
    return c;
  }

  Assembler<KGenerator> as(d, opt);
  const auto sectors = opt.k_sectors ? *opt.k_sectors : k_sector_candidates(table);
  for (const auto& s : sectors) {
    const std::string key = sector_key(s);
    if (opt.sector_filter && !opt.sector_filter->count(key)) continue;
    for (const Resolution& r : table.all())
      for (const auto& g : enumerate_k(r, f, s, opt.k)) as.add(g, key);
  }
  GradedComplex c = as.finish([&](const KGenerator& g, int p) { return bridge_k(table, f, g, p, opt.k); });
  c.theory = Theory::K;
  c.k = opt.k;
  return c;
}

D2Report check_d_squared(const GradedComplex& c) {
  D2Report rep;
  for (const auto& [key, b] : c.blocks) {
    for (const auto& [i, upper] : b.differential) {
      const auto lower = b.differential.find(i - 2);
      if (lower == b.differential.end()) continue;
      ++rep.compositions;
      std::map<std::pair<int, int>, long long> prod;
      std::multimap<int, const SparseMatrix::Entry*> by_row;
      for (const auto& e : lower->second.entries) by_row.emplace(e.col, &e);
      for (const auto& e : upper.entries) {
        const auto [lo, hi] = by_row.equal_range(e.row);
        for (auto it = lo; it != hi; ++it) prod[{it->second->row, e.col}] += it->second->value * e.value;
      }
      for (const auto& [rc, v] : prod) {
        if (v == 0) continue;
        rep.ok = false;
        if (rep.failures.size() < 10)
          rep.failures.push_back("sector " + b.sector + ", j=" + std::to_string(b.j) + ": d^2(" +
                                 b.levels.at(i)[static_cast<std::size_t>(rc.second)] + ") has coefficient " +
                                 std::to_string(v) + " on " + b.levels.at(i - 4)[static_cast<std::size_t>(rc.first)]);
      }
    }
  }
  return rep;
}

std::map<std::string, LaurentPoly> graded_euler_characteristic(const GradedComplex& c) {
  if (c.theory != Theory::Simple)
    throw UnsupportedTheory("the graded Euler characteristic is only defined for the simple theory");
  std::map<std::string, LaurentPoly> out;
  for (const std::string& s : c.sectors) out[s];
  for (const auto& [key, b] : c.blocks)
    for (const auto& [i, labels] : b.levels) {
      const int half = (b.j - i) / 2;
      out[b.sector].add_term(b.j, (half % 2 ? -1 : 1) * static_cast<long long>(labels.size()));
    }
  return out;
}

LaurentPoly graded_euler_characteristic(const GradedComplex& c, const std::string& sector) {
  const auto all = graded_euler_characteristic(c);
  const auto it = all.find(sector);
  return it == all.end() ? LaurentPoly{} : it->second;
}

std::set<OrientedMultiset> k_sector_candidates(const Diagram& d, int cap) {
  return k_sector_candidates(ResolutionTable(d, cap));
}

void share_k_sectors(BuildOptions& opt, const Diagram& a, const Diagram& b) {
  if (opt.theory != Theory::K) return;
  auto all = k_sector_candidates(a, opt.cap);
  all.merge(k_sector_candidates(b, opt.cap));
  if (opt.k_sectors) std::erase_if(all, [&](const auto& s) { return !opt.k_sectors->count(s); });
  opt.k_sectors = std::move(all);
}

}  // namespace foamlink
