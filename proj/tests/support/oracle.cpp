#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace oracle {

using foamlink::ClassVector;
using foamlink::Resolution;
using foamlink::ResolutionTable;
using foamlink::Smoothing;
using foamlink::State;

namespace {

struct Curve {
  bool top = true;
  int id = -1;     // top circle id; unused for bottoms
  ClassVector v;   // boundary orientation as a class on the surface (zero if trivial)
  ClassVector rep; // positive representative of the unoriented class (zero if trivial)
};

struct Piece {
  int genus = 0;
  int dots = 0;
  int eps = 0;  // k-orientation relative to v: +1, -1, or 0 for none
  std::vector<Curve> bd;
};

using Record = std::vector<Piece>;

enum class Mode { Simple, K };

struct Failure : std::logic_error {
  using std::logic_error::logic_error;
};

ClassVector rep_of(const Resolution& r, int id) { return r.circle_by_id(id).cls.rep(); }

bool pm_equal(const ClassVector& w, const ClassVector& rep) { return w == rep || w == -rep; }

int piece_with_top(const Record& rec, int id) {
  for (std::size_t k = 0; k < rec.size(); ++k)
    for (const auto& c : rec[k].bd)
      if (c.top && c.id == id) return static_cast<int>(k);
  throw Failure("no piece carries top circle " + std::to_string(id));
}

Curve take(Piece& p, int id) {
  auto it = std::find_if(p.bd.begin(), p.bd.end(), [id](const Curve& c) { return c.top && c.id == id; });
  Curve c = *it;
  p.bd.erase(it);
  return c;
}

// Sign vector with the first entry +1 making the boundary classes sum to zero.
std::vector<int> closing_signs(const std::vector<ClassVector>& reps) {
  const std::size_t n = reps.size();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (m & 1U) continue;
    ClassVector sum = 0 * reps[0];
    for (std::size_t b = 0; b < n; ++b) sum += ((m >> b) & 1U ? -1 : 1) * reps[b];
    if (sum.is_zero()) {
      std::vector<int> s(n);
      for (std::size_t b = 0; b < n; ++b) s[b] = (m >> b) & 1U ? -1 : 1;
      return s;
    }
  }
  throw Failure("boundary classes of an unoriented piece admit no closing signs");
}

Record record_of(const Resolution& r, const foamlink::KGenerator& g) {
  Record rec;
  for (const auto& comp : g.components) {
    Piece p;
    p.dots = comp.dots;
    if (comp.disk) {
      const int id = comp.tops.at(0).first;
      p.bd.push_back({true, id, 0 * rep_of(r, id), 0 * rep_of(r, id)});
      rec.push_back(p);
      continue;
    }
    for (const auto& [id, s] : comp.tops) p.bd.push_back({true, id, s * rep_of(r, id), rep_of(r, id)});
    for (const auto& b : comp.bottoms) p.bd.push_back({false, -1, b.v, foamlink::UnorientedClass(b.v).rep()});
    if (comp.oriented()) {
      p.eps = 1;
      ClassVector sum = 0 * p.bd[0].v;
      for (const auto& c : p.bd) sum += c.v;
      if (!sum.is_zero()) throw Failure("oriented piece whose boundary classes do not sum to zero");
    } else {
      std::vector<ClassVector> reps;
      for (const auto& c : p.bd) reps.push_back(c.rep);
      const auto s = closing_signs(reps);
      for (std::size_t b = 0; b < p.bd.size(); ++b) p.bd[b].v = s[b] * p.bd[b].rep;
    }
    rec.push_back(p);
  }
  return rec;
}

Record record_of(const Resolution& r, const foamlink::SimpleGenerator& g) {
  Record rec;
  for (const auto& c : r.circles) {
    Piece p;
    if (!c.essential) {
      p.dots = g.decorations.at(c.id) == foamlink::Decoration::X ? 1 : 0;
      p.bd.push_back({true, c.id, 0 * c.cls.rep(), 0 * c.cls.rep()});
    } else {
      p.bd.push_back({true, c.id, c.cls.rep(), c.cls.rep()});
      p.bd.push_back({false, -1, -c.cls.rep(), c.cls.rep()});
    }
    rec.push_back(p);
  }
  return rec;
}

std::vector<int> ids_at(const Resolution& r, int crossing) {
  std::vector<int> out;
  for (int idx : r.circle_of_slot[static_cast<std::size_t>(crossing)])
    if (const int id = r.circles[static_cast<std::size_t>(idx)].id; std::find(out.begin(), out.end(), id) == out.end())
      out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

// Band surgery. Returns nullopt when the result vanishes before rewriting
// (non-orientable band, orientation clash, or the simple theory's rule for
// bands between distinct essential curves).
std::optional<Record> glue_band(Record rec, const Resolution& from, const Resolution& to, int p, Mode mode) {
  const auto before = ids_at(from, p);
  const auto after = ids_at(to, p);
  if (before.size() == after.size()) return std::nullopt;  // one-sided band

  if (before.size() == 2) {
    const int a = before[0], b = before[1], m = after[0];
    const ClassVector rm = rep_of(to, m);
    const int ia = piece_with_top(rec, a), ib = piece_with_top(rec, b);
    if (mode == Mode::Simple && from.circle_by_id(a).essential && from.circle_by_id(b).essential) return std::nullopt;
    if (ia == ib) {
      Piece& pc = rec[static_cast<std::size_t>(ia)];
      const Curve ca = take(pc, a), cb = take(pc, b);
      const ClassVector w = ca.v + cb.v;
      if (!pm_equal(w, rm)) return std::nullopt;
      pc.bd.push_back({true, m, w, rm});
      pc.genus += 1;
      return rec;
    }
    Piece A = rec[static_cast<std::size_t>(ia)], B = rec[static_cast<std::size_t>(ib)];
    rec.erase(rec.begin() + std::max(ia, ib));
    rec.erase(rec.begin() + std::min(ia, ib));
    const Curve ca = take(A, a), cb = take(B, b);
    int flip = 0;
    for (int f : {1, -1})
      if (!flip && pm_equal(ca.v + f * cb.v, rm)) flip = f;
    if (!flip) throw Failure("band sum class matches neither orientation");
    for (auto& c : B.bd) c.v = flip * c.v;
    const int ea = A.eps, eb = flip * B.eps;
    if (ea && eb && ea != eb) return std::nullopt;
    Piece M;
    M.genus = A.genus + B.genus;
    M.dots = A.dots + B.dots;
    M.eps = ea ? ea : eb;
    M.bd = A.bd;
    M.bd.insert(M.bd.end(), B.bd.begin(), B.bd.end());
    M.bd.push_back({true, m, ca.v + flip * cb.v, rm});
    rec.push_back(M);
    return rec;
  }

  const int a = before[0], c1 = after[0], c2 = after[1];
  Piece& pc = rec[static_cast<std::size_t>(piece_with_top(rec, a))];
  const Curve ca = take(pc, a);
  const ClassVector r1 = rep_of(to, c1), r2 = rep_of(to, c2);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      if (s1 * r1 + s2 * r2 == ca.v) {
        pc.bd.push_back({true, c1, s1 * r1, r1});
        pc.bd.push_back({true, c2, s2 * r2, r2});
        return rec;
      }
  throw Failure("split classes cannot close up with the original curve");
}

std::string text_of(const Record& rec, const State& s, Mode mode) {
  std::vector<std::string> parts;
  for (const Piece& p : rec) {
    if (p.bd.size() == 1) {
      parts.push_back("D" + std::to_string(p.bd[0].id) + (p.dots ? "." : ""));
      continue;
    }
    if (mode == Mode::Simple) {
      parts.push_back(p.bd.size() == 2 && p.bd[0].top != p.bd[1].top
                          ? "V" + std::to_string(p.bd[0].top ? p.bd[0].id : p.bd[1].id)
                          : "?unexpected");
      continue;
    }
    std::vector<std::pair<int, int>> tops;
    std::vector<std::string> bottoms;
    for (const auto& c : p.bd) {
      const ClassVector w = p.eps * c.v;
      if (c.top)
        tops.emplace_back(c.id, p.eps == 0 ? 0 : (w == c.rep ? 1 : -1));
      else
        bottoms.push_back(w.str());
    }
    std::sort(tops.begin(), tops.end());
    std::sort(bottoms.begin(), bottoms.end());
    std::string t = "P{";
    for (const auto& [id, sg] : tops) t += "c" + std::to_string(id) + (sg > 0 ? "+" : sg < 0 ? "-" : "0") + " ";
    t += "|";
    for (const auto& b : bottoms) t += " " + b;
    parts.push_back(t + "}");
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (Smoothing x : s.assignment) out += x == Smoothing::Positive ? '+' : '-';
  for (const auto& q : parts) out += " " + q;
  return out;
}

bool compressible(const Piece& p, std::vector<Curve>* side) {
  const std::size_t n = p.bd.size();
  for (std::uint32_t m = 1; m + 1 < (1U << n); ++m) {
    ClassVector sum = 0 * p.bd[0].v;
    for (std::size_t b = 0; b < n; ++b)
      if ((m >> b) & 1U) sum += p.bd[b].v;
    if (!sum.is_zero()) continue;
    if (side) {
      side->clear();
      for (std::size_t b = 0; b < n; ++b)
        if ((m >> b) & 1U) side->push_back(p.bd[b]);
    }
    return true;
  }
  return false;
}

struct Rewriter {
  Mode mode;
  std::optional<int> k;
  State state;
  Outcome out;

  void run(Record rec, long long coeff) {
    for (std::size_t x = 0; x < rec.size(); ++x) {
      Piece& p = rec[x];
      if (p.dots >= 2) return;  // TD
      if (p.genus > 0) {        // non-separating compression
        --p.genus;
        ++p.dots;
        run(std::move(rec), 2 * coeff);
        return;
      }
      if (p.bd.empty()) {  // SB / SD
        if (p.dots != 1) return;
        rec.erase(rec.begin() + static_cast<long>(x));
        run(std::move(rec), coeff);
        return;
      }
      if (p.bd.size() == 1) {
        if (!p.bd[0].rep.is_zero()) throw Failure("disk bounded by an essential curve");
        continue;
      }
      auto trivial = std::find_if(p.bd.begin(), p.bd.end(), [](const Curve& c) { return c.rep.is_zero(); });
      if (trivial != p.bd.end()) {  // NC around the trivial curve
        Piece disk{0, 0, 0, {*trivial}};
        Piece rest = p;
        rest.bd.erase(rest.bd.begin() + (trivial - p.bd.begin()));
        split_into(rec, x, disk, rest, coeff);
        return;
      }
      std::vector<Curve> side;
      if (compressible(p, &side)) {  // NC along a separating curve
        Piece s1 = p, s2 = p;
        s1.bd = side;
        s2.bd.clear();
        for (const auto& c : p.bd) {
          const bool in_side = std::any_of(side.begin(), side.end(), [&](const Curve& q) {
            return q.top == c.top && q.id == c.id && q.v == c.v;
          });
          if (!in_side) s2.bd.push_back(c);
        }
        s1.dots = p.dots;
        s2.dots = 0;
        split_into(rec, x, s1, s2, coeff);
        return;
      }
    }
    for (const Piece& p : rec) {
      if (p.bd.size() < 2) continue;
      if (p.dots) return;  // NDD
      const int chi = 2 - static_cast<int>(p.bd.size());
      if (mode == Mode::K) {
        if (k && chi < -*k) return;  // KEC
      } else {
        if (chi < 0) return;  // NEC
        if (p.bd[0].top == p.bd[1].top) return;  // TT
      }
    }
    out[text_of(rec, state, mode)] += coeff;
  }

  // Replaces piece x by two pieces a and b with one extra dot on either side.
  void split_into(const Record& rec, std::size_t x, Piece a, Piece b, long long coeff) {
    for (int side : {0, 1}) {
      Record next = rec;
      next.erase(next.begin() + static_cast<long>(x));
      Piece pa = a, pb = b;
      (side == 0 ? pa : pb).dots += 1;
      next.push_back(pa);
      next.push_back(pb);
      run(std::move(next), coeff);
    }
  }
};

Outcome finish(Outcome o) {
  std::erase_if(o, [](const auto& kv) { return kv.second == 0; });
  return o;
}

template <class G>
Outcome bridge(const ResolutionTable& table, const G& g, int p, Mode mode, std::optional<int> k) {
  if (g.state.at(p) != Smoothing::Positive) throw Failure("bridge at a negative crossing");
  const Resolution& from = table.at(g.state);
  const State next = g.state.with(p, Smoothing::Negative);
  const Resolution& to = table.at(next);
  Rewriter rw{mode, k, next, {}};
  if (auto rec = glue_band(record_of(from, g), from, to, p, mode)) rw.run(std::move(*rec), 1);
  return finish(std::move(rw.out));
}

}  // namespace

Outcome bridge_simple(const ResolutionTable& table, const foamlink::SimpleGenerator& g, int p) {
  return bridge(table, g, p, Mode::Simple, std::nullopt);
}

Outcome bridge_k(const ResolutionTable& table, const foamlink::KGenerator& g, int p, std::optional<int> k) {
  return bridge(table, g, p, Mode::K, k);
}

Outcome canonical(const ResolutionTable& table, const foamlink::Combination<foamlink::SimpleGenerator>& c) {
  Outcome o;
  for (const auto& [g, coeff] : c) {
    Record rec = record_of(table.at(g.state), g);
    o[text_of(rec, g.state, Mode::Simple)] += coeff;
  }
  return finish(std::move(o));
}

Outcome canonical(const foamlink::Combination<foamlink::KGenerator>& c) {
  Outcome o;
  for (const auto& [g, coeff] : c) {
    std::vector<std::string> parts;
    for (const auto& comp : g.components) {
      if (comp.disk) {
        parts.push_back("D" + std::to_string(comp.tops.at(0).first) + (comp.dots ? "." : ""));
        continue;
      }
      auto tops = comp.tops;
      std::sort(tops.begin(), tops.end());
      std::vector<std::string> bottoms;
      for (const auto& b : comp.bottoms) bottoms.push_back(b.v.str());
      std::sort(bottoms.begin(), bottoms.end());
      std::string t = "P{";
      for (const auto& [id, sg] : tops) t += "c" + std::to_string(id) + (sg > 0 ? "+" : sg < 0 ? "-" : "0") + " ";
      t += "|";
      for (const auto& b : bottoms) t += " " + b;
      parts.push_back(t + "}");
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (Smoothing x : g.state.assignment) out += x == Smoothing::Positive ? '+' : '-';
    for (const auto& q : parts) out += " " + q;
    o[out] += coeff;
  }
  return finish(std::move(o));
}

std::string describe(const Outcome& o) {
  if (o.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : o) s += (s.empty() ? "" : " + ") + std::to_string(c) + "*[" + t + "]";
  return s;
}

namespace {

struct PoolEntry {
  const foamlink::Diagram* d;
  ResolutionTable table;
  std::vector<foamlink::SimpleGenerator> simple;
  std::map<int, std::vector<foamlink::KGenerator>> k;  // -1 for inf
};

std::optional<int> k_of(int key) { return key < 0 ? std::nullopt : std::optional<int>(key); }

std::vector<int> positive_crossings(const State& s) {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(s.assignment.size()); ++c)
    if (s.at(c) == Smoothing::Positive) out.push_back(c);
  return out;
}

}  // namespace

SweepResult sweep(const std::vector<foamlink::Diagram>& pool, long long cases, std::uint64_t seed) {
  std::vector<PoolEntry> entries;
  for (const auto& d : pool) {
    PoolEntry e{&d, ResolutionTable(d), {}, {}};
    if (d.crossing_count() == 0) continue;
    for (const auto& r : e.table.all())
      for (auto& g : foamlink::enumerate_simple(r)) e.simple.push_back(std::move(g));
    const auto sectors = foamlink::k_sector_candidates(e.table);
    for (int key : {0, 1, 2, -1}) {
      foamlink::KOptions opt;
      opt.k = k_of(key);
      for (const auto& r : e.table.all())
        for (const auto& s : sectors)
          for (auto& g : foamlink::enumerate_k(r, d.surface, s, opt)) e.k[key].push_back(std::move(g));
    }
    entries.push_back(std::move(e));
  }

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  SweepResult res;
  auto note = [&res](const std::string& what) {
    ++res.mismatch_count;
    if (res.mismatches.size() < 5) res.mismatches.push_back(what);
  };

  while (res.simple_cases < cases) {
    const PoolEntry& e = entries[pick(entries.size())];
    const auto& g = e.simple[pick(e.simple.size())];
    const auto pos = positive_crossings(g.state);
    if (pos.empty()) continue;
    const int p = pos[pick(pos.size())];
    ++res.simple_cases;
    const Outcome lib = canonical(e.table, foamlink::bridge_simple(e.table, g, p));
    const Outcome ref = oracle::bridge_simple(e.table, g, p);
    if (lib != ref) note("simple " + g.label() + " at " + std::to_string(p) + ": " + describe(lib) + " vs " + describe(ref));
  }
  const int keys[] = {0, 1, 2, -1};
  while (res.k_cases < cases) {
    const PoolEntry& e = entries[pick(entries.size())];
    const int key = keys[pick(4)];
    const auto& gens = e.k.at(key);
    if (gens.empty()) continue;
    const auto& g = gens[pick(gens.size())];
    const auto pos = positive_crossings(g.state);
    if (pos.empty()) continue;
    const int p = pos[pick(pos.size())];
    ++res.k_cases;
    foamlink::KOptions opt;
    opt.k = k_of(key);
    const Outcome lib = canonical(foamlink::bridge_k(e.table, e.d->surface, g, p, opt));
    const Outcome ref = oracle::bridge_k(e.table, g, p, opt.k);
    if (lib != ref)
      note("k=" + (key < 0 ? std::string("inf") : std::to_string(key)) + " " + g.label() + " at " + std::to_string(p) +
           ": " + describe(lib) + " vs " + describe(ref));
  }
  return res;
}

}  // namespace oracle
