#include "foamlink/k_foam.hpp"

#include <algorithm>
#include <map>

namespace foamlink {

std::string KComponent::kind() const {
  if (disk) return "disk";
  if (tops.size() == 1 && bottoms.size() == 1) return "vertical-annulus";
  if (tops.size() == 2 && bottoms.empty()) return "top-turnback";
  if (tops.empty() && bottoms.size() == 2) return "bottom-annulus";
  return "vertical-tree";
}

std::string KComponent::label() const {
  std::string s = kind() + "{";
  for (std::size_t k = 0; k < tops.size(); ++k) {
    s += (k ? " c" : "c") + std::to_string(tops[k].first);
    if (tops[k].second) s += tops[k].second > 0 ? "+" : "-";
  }
  if (!bottoms.empty()) s += " | " + multiset_str(bottoms);
  if (dots) s += " dot";
  return s + "}";
}

int KGenerator::dots() const {
  int d = 0;
  for (const auto& c : components) d += c.dots;
  return d;
}

int KGenerator::chi() const {
  int x = 0;
  for (const auto& c : components) x += c.chi();
  return x;
}

std::string KGenerator::label() const {
  std::string s = "s";
  for (Smoothing x : state.assignment) s += x == Smoothing::Positive ? '+' : '-';
  for (const auto& c : components) s += " " + c.label();
  return s;
}

int KGenerator::component_of(int id) const {
  for (std::size_t k = 0; k < components.size(); ++k)
    for (const auto& t : components[k].tops)
      if (t.first == id) return static_cast<int>(k);
  return -1;
}

void normalize(KGenerator& g) {
  for (auto& c : g.components) {
    std::sort(c.tops.begin(), c.tops.end());
    std::sort(c.bottoms.begin(), c.bottoms.end());
  }
  std::sort(g.components.begin(), g.components.end());
  g.i = g.state.i_grading();
  g.j = g.i + 2 * (2 * g.dots() - g.chi());
}

std::string k_value_str(const OrientedMultiset& sector) {
  std::map<UnorientedClass, int> coeff;
  for (const auto& o : sector) coeff[UnorientedClass(o.v)] += orientation_sign(o.v);
  std::string s;
  for (const auto& [cls, c] : coeff) {
    if (c == 0) continue;
    if (!s.empty()) s += " ";
    s += (c > 0 ? "+" : "") + std::to_string(c) + cls.rep().str();
  }
  return s.empty() ? "0" : s;
}

std::set<OrientedMultiset> k_sector_candidates(const ResolutionTable& table) {
  std::set<OrientedMultiset> out;
  std::set<CurveMultiset> seen;
  for (const Resolution& r : table.all()) {
    CurveMultiset ess;
    for (const auto& c : r.circles)
      if (c.essential) ess.push_back(c.cls);
    std::sort(ess.begin(), ess.end());
    if (!seen.insert(ess).second) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ess.size()); ++bits) {
      OrientedMultiset o;
      for (std::size_t k = 0; k < ess.size(); ++k) o.push_back({((bits >> k) & 1U ? -1 : 1) * ess[k].rep()});
      std::sort(o.begin(), o.end());
      out.insert(o);
    }
  }
  return out;
}

std::optional<std::vector<int>> close_orientation(const std::vector<UnorientedClass>& curves,
                                                  const std::vector<int>& known) {
  const auto first = std::find_if(known.begin(), known.end(), [](int x) { return x != 0; });
  if (first == known.end()) return std::vector<int>(curves.size(), 0);
  const std::vector<int> s = boundary_signs(curves);
  if (s.empty()) throw InvariantViolation("component boundary has no unique orientation");
  const std::size_t at = static_cast<std::size_t>(first - known.begin());
  const int flip = known[at] * s[at];
  std::vector<int> out(curves.size());
  for (std::size_t k = 0; k < curves.size(); ++k) {
    out[k] = flip * s[k];
    if (known[k] != 0 && known[k] != out[k]) return std::nullopt;
  }
  return out;
}

namespace {

bool kec_kills(int chi, const KOptions& opt) { return opt.k && chi < -*opt.k; }

int max_block(const SurfaceSpec& f, const KOptions& opt) {
  int m = f.canonical().is_torus() ? 2 : f.h1_rank() + 1;
  if (opt.k) m = std::min(m, 2 + *opt.k);
  return m;
}

struct Item {
  bool top = false;
  int id = -1;
  UnorientedClass cls;
  OrientedClass bottom;
};

class Enumerator {
 public:
  Enumerator(const Resolution& r, const SurfaceSpec& f, const OrientedMultiset& sector, const KOptions& opt)
      : r_(r), f_(f), sector_(sector), opt_(opt), limit_(max_block(f, opt)) {
    for (const auto& c : r.circles) {
      if (c.essential)
        items_.push_back({true, c.id, c.cls, {}});
      else
        trivial_.push_back(c.id);
    }
    for (const auto& o : sector) items_.push_back({false, -1, UnorientedClass(o.v), o});
    used_.assign(items_.size(), false);
  }

  std::vector<KGenerator> run() {
    recurse();
    return {found_.begin(), found_.end()};
  }

 private:
  void recurse() {
    const auto it = std::find(used_.begin(), used_.end(), false);
    if (it == used_.end()) {
      finish();
      return;
    }
    const std::size_t first = static_cast<std::size_t>(it - used_.begin());
    std::vector<std::size_t> rest;
    for (std::size_t k = first + 1; k < items_.size(); ++k)
      if (!used_[k]) rest.push_back(k);
    used_[first] = true;
    std::vector<std::size_t> block{first};
    choose(rest, 0, block);
    used_[first] = false;
  }

  void choose(const std::vector<std::size_t>& rest, std::size_t from, std::vector<std::size_t>& block) {
    if (block.size() >= 2) try_block(block);
    if (static_cast<int>(block.size()) >= limit_) return;
    for (std::size_t k = from; k < rest.size(); ++k) {
      block.push_back(rest[k]);
      used_[rest[k]] = true;
      choose(rest, k + 1, block);
      used_[rest[k]] = false;
      block.pop_back();
    }
  }

  void try_block(const std::vector<std::size_t>& block) {
    std::vector<UnorientedClass> curves;
    std::vector<int> known;
    bool has_bottom = false;
    for (std::size_t k : block) {
      curves.push_back(items_[k].cls);
      known.push_back(items_[k].top ? 0 : orientation_sign(items_[k].bottom.v));
      has_bottom = has_bottom || !items_[k].top;
    }
    if (!region_valid(curves, f_)) return;
    if (kec_kills(2 - static_cast<int>(block.size()), opt_)) return;

    std::vector<std::vector<int>> variants;
    if (has_bottom) {
      if (auto s = close_orientation(curves, known)) variants.push_back(*s);
    } else {
      variants.emplace_back(block.size(), 0);
      if (opt_.variants == OrientationVariants::All) {
        known[0] = 1;
        variants.push_back(*close_orientation(curves, known));
        known[0] = -1;
        variants.push_back(*close_orientation(curves, known));
      }
    }
    for (const auto& signs : variants) {
      KComponent c;
      for (std::size_t n = 0; n < block.size(); ++n) {
        const Item& item = items_[block[n]];
        if (item.top)
          c.tops.emplace_back(item.id, signs[n]);
        else
          c.bottoms.push_back(item.bottom);
      }
      chosen_.push_back(std::move(c));
      // Items of this block stay marked used while recursing.
      recurse();
      chosen_.pop_back();
    }
  }

  void finish() {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << trivial_.size()); ++bits) {
      KGenerator g;
      g.state = r_.state;
      g.sector = sector_;
      g.components = chosen_;
      for (std::size_t k = 0; k < trivial_.size(); ++k) {
        KComponent disk;
        disk.disk = true;
        disk.tops.emplace_back(trivial_[k], 0);
        disk.dots = static_cast<int>((bits >> k) & 1U);
        g.components.push_back(std::move(disk));
      }
      normalize(g);
      found_.insert(std::move(g));
    }
  }

  const Resolution& r_;
  SurfaceSpec f_;
  OrientedMultiset sector_;
  KOptions opt_;
  int limit_;
  std::vector<Item> items_;
  std::vector<int> trivial_;
  std::vector<bool> used_;
  std::vector<KComponent> chosen_;
  std::set<KGenerator> found_;
};

// Orientation of circle `x` as +1/-1 along its own traversal.
int along_traversal(const Resolution& r, int id, int sign) {
  return sign * r.circle_by_id(id).traversal_sign();
}

// Slides an orientation of `x` (before the bridge) onto `y` (after it) through
// an edge both share; returns the sign of y relative to its positive class.
int slide(const Resolution& from, const Resolution& to, int x, int sign, int y) {
  const StateCircle& cx = from.circle_by_id(x);
  const StateCircle& cy = to.circle_by_id(y);
  for (const DirectedEdge& de : cx.traversal) {
    if (to.circles[static_cast<std::size_t>(to.circle_of_edge[static_cast<std::size_t>(de.edge)])].id != y) continue;
    const int delta = along_traversal(from, x, sign) * transfer_sign(from, to, de.edge);
    return cy.essential ? delta * cy.traversal_sign() : delta;
  }
  throw InvariantViolation("orientation slide between circles sharing no edge");
}

class Bridger {
 public:
  Bridger(const ResolutionTable& table, const SurfaceSpec& f, const KGenerator& g, int p, const KOptions& opt)
      : g_(g), p_(p), opt_(opt), f_(f), from_(table.at(g.state)),
        target_(g.state.with(p, Smoothing::Negative)), to_(table.at(target_)) {}

  Combination<KGenerator> run() {
    if (g_.state.at(p_) == Smoothing::Negative) return out_;
    const Saddle sd = saddle_at(from_, to_, p_);
    if (sd.one_sided) return out_;  // non-orientable bridged component
    if (sd.merge)
      merge(sd.before[0], sd.before[1], sd.after[0]);
    else
      split(sd.before[0], sd.after[0], sd.after[1]);
    return out_;
  }

 private:
  using Tops = std::vector<std::pair<int, int>>;

  const KComponent& comp(int idx) const { return g_.components[static_cast<std::size_t>(idx)]; }

  int sign_in(const KComponent& c, int id) const {
    for (const auto& t : c.tops)
      if (t.first == id) return t.second;
    throw InvariantViolation("circle not on component");
  }

  Tops without(const KComponent& c, int id) const {
    Tops t;
    for (const auto& x : c.tops)
      if (x.first != id) t.push_back(x);
    return t;
  }

  // Region check, KEC and orientation closure for an all-essential piece.
  std::optional<KComponent> finish_piece(const Tops& tops, const OrientedMultiset& bottoms) const {
    std::vector<UnorientedClass> curves;
    std::vector<int> known;
    for (const auto& [id, s] : tops) {
      const StateCircle& c = to_.circle_by_id(id);
      if (!c.essential) throw InvariantViolation("trivial circle left on a non-disk piece");
      curves.push_back(c.cls);
      known.push_back(s);
    }
    for (const auto& o : bottoms) {
      curves.push_back(UnorientedClass(o.v));
      known.push_back(orientation_sign(o.v));
    }
    if (curves.size() < 2) throw InvariantViolation("non-disk piece with fewer than two boundary curves");
    if (!region_valid(curves, f_)) return std::nullopt;
    if (kec_kills(2 - static_cast<int>(curves.size()), opt_)) return std::nullopt;
    const auto signs = close_orientation(curves, known);
    if (!signs) return std::nullopt;
    KComponent out;
    for (std::size_t k = 0; k < tops.size(); ++k) out.tops.emplace_back(tops[k].first, (*signs)[k]);
    out.bottoms = bottoms;
    return out;
  }

  static KComponent disk(int id, int dots) {
    KComponent c;
    c.disk = true;
    c.dots = dots;
    c.tops.emplace_back(id, 0);
    return c;
  }

  void emit(std::vector<int> drop, std::vector<KComponent> add, long long coeff = 1) {
    KGenerator r;
    r.state = target_;
    r.sector = g_.sector;
    std::sort(drop.begin(), drop.end());
    for (std::size_t k = 0; k < g_.components.size(); ++k)
      if (!std::binary_search(drop.begin(), drop.end(), static_cast<int>(k))) r.components.push_back(g_.components[k]);
    for (auto& c : add) r.components.push_back(std::move(c));
    normalize(r);
    if (r.j != g_.j || r.i != g_.i - 2) throw InvariantViolation("bridge broke the grading of " + g_.label());
    out_.emplace_back(std::move(r), coeff);
  }

  void merge(int a, int b, int m) {
    const int ia = g_.component_of(a), ib = g_.component_of(b);
    if (ia == ib) {
      same_component_merge(ia, m);
      return;
    }
    const KComponent& A = comp(ia);
    const KComponent& B = comp(ib);
    const bool m_essential = to_.circle_by_id(m).essential;

    // Orientation of m seen from each side; disagreement is EO.
    int from_a = A.oriented() ? slide(from_, to_, a, sign_in(A, a), m) : 0;
    int from_b = B.oriented() ? slide(from_, to_, b, sign_in(B, b), m) : 0;
    if (from_a && from_b && from_a != from_b) return;
    const int sm = m_essential ? (from_a ? from_a : from_b) : 0;

    if (A.disk && B.disk) {
      if (A.dots + B.dots >= 2) return;
      if (m_essential) throw InvariantViolation("two disks merged into an essential circle");
      emit({ia, ib}, {disk(m, A.dots + B.dots)});
      return;
    }
    if (A.disk || B.disk) {
      const KComponent& D = A.disk ? A : B;
      const KComponent& N = A.disk ? B : A;
      const int n_circle = A.disk ? b : a;
      if (D.dots) return;
      if (!m_essential) throw InvariantViolation("disk merged into an essential curve gave a trivial one");
      Tops tops = without(N, n_circle);
      tops.emplace_back(m, sm);
      if (auto piece = finish_piece(tops, N.bottoms)) emit({ia, ib}, {*piece});
      return;
    }

    Tops tops = without(A, a);
    for (const auto& t : without(B, b)) tops.push_back(t);
    OrientedMultiset bottoms = A.bottoms;
    bottoms.insert(bottoms.end(), B.bottoms.begin(), B.bottoms.end());
    if (m_essential) {
      tops.emplace_back(m, sm);
      if (auto piece = finish_piece(tops, bottoms)) emit({ia, ib}, {*piece});
      return;
    }
    // Trivial merged circle compresses off; the dotted co-term dies.
    if (auto piece = finish_piece(tops, bottoms)) emit({ia, ib}, {disk(m, 1), *piece});
  }

  // A bridge between two boundary curves of one component adds a handle. The
  // result survives only for a turnback annulus closed up along a trivial
  // curve inside its own region: compressing that curve leaves a disk and a
  // compressible torus, which evaluates to 2 (and to 0 with a dot).
  void same_component_merge(int ia, int m) {
    const KComponent& A = comp(ia);
    if (A.disk || !A.bottoms.empty() || A.tops.size() != 2 || to_.circle_by_id(m).essential) return;
    emit({ia}, {disk(m, 1)}, 2);
  }

  void split(int a, int c1, int c2) {
    const int ia = g_.component_of(a);
    const KComponent& A = comp(ia);
    const bool e1 = to_.circle_by_id(c1).essential, e2 = to_.circle_by_id(c2).essential;
    if (A.disk) {
      if (e1 != e2) throw InvariantViolation("trivial circle split into trivial and essential circles");
      if (!e1) {
        if (A.dots) {
          emit({ia}, {disk(c1, 1), disk(c2, 1)});
        } else {
          emit({ia}, {disk(c1, 0), disk(c2, 1)});
          emit({ia}, {disk(c1, 1), disk(c2, 0)});
        }
        return;
      }
      if (A.dots) return;
      if (auto piece = finish_piece({{c1, 0}, {c2, 0}}, {})) emit({ia}, {*piece});
      return;
    }
    if (!e1 && !e2) throw InvariantViolation("essential circle split into two trivial circles");
    const int sa = sign_in(A, a);
    Tops tops = without(A, a);
    if (e1 && e2) {
      tops.emplace_back(c1, sa ? slide(from_, to_, a, sa, c1) : 0);
      tops.emplace_back(c2, sa ? slide(from_, to_, a, sa, c2) : 0);
      if (auto piece = finish_piece(tops, A.bottoms)) emit({ia}, {*piece});
      return;
    }
    const int ce = e1 ? c1 : c2, ct = e1 ? c2 : c1;
    tops.emplace_back(ce, sa ? slide(from_, to_, a, sa, ce) : 0);
    if (auto piece = finish_piece(tops, A.bottoms)) emit({ia}, {disk(ct, 1), *piece});
  }

  const KGenerator& g_;
  int p_;
  KOptions opt_;
  SurfaceSpec f_;
  const Resolution& from_;
  State target_;
  const Resolution& to_;
  Combination<KGenerator> out_;
};

}  // namespace

std::vector<KGenerator> enumerate_k(const Resolution& r, const SurfaceSpec& f, const OrientedMultiset& sector,
                                    const KOptions& opt) {
  return Enumerator(r, f.canonical(), sector, opt).run();
}

Combination<KGenerator> bridge_k(const ResolutionTable& table, const SurfaceSpec& f, const KGenerator& g, int p,
                                 const KOptions& opt) {
  return Bridger(table, f.canonical(), g, p, opt).run();
}

}  // namespace foamlink
