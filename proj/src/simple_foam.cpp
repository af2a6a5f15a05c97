#include "foamlink/simple_foam.hpp"

#include <algorithm>

namespace foamlink {

int SimpleGenerator::dots() const {
  return static_cast<int>(std::count_if(decorations.begin(), decorations.end(),
                                        [](const auto& kv) { return kv.second == Decoration::X; }));
}

std::string SimpleGenerator::label() const {
  std::string s = "s";
  for (Smoothing x : state.assignment) s += x == Smoothing::Positive ? '+' : '-';
  for (const auto& [id, dec] : decorations) s += " c" + std::to_string(id) + (dec == Decoration::X ? ":X" : ":1");
  return s;
}

void assign_simple_gradings(SimpleGenerator& g) {
  g.i = g.state.i_grading();
  const int chi = static_cast<int>(g.decorations.size());
  g.j = g.i + 2 * (2 * g.dots() - chi);
}

std::vector<SimpleGenerator> enumerate_simple(const Resolution& r) {
  std::vector<int> trivial;
  CurveMultiset bottom;
  for (const auto& c : r.circles) {
    if (c.essential)
      bottom.push_back(c.cls);
    else
      trivial.push_back(c.id);
  }
  std::sort(bottom.begin(), bottom.end());
  std::vector<SimpleGenerator> out;
  const std::size_t n = trivial.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SimpleGenerator g;
    g.state = r.state;
    g.bottom = bottom;
    for (std::size_t k = 0; k < n; ++k) g.decorations[trivial[k]] = (bits >> k) & 1U ? Decoration::X : Decoration::One;
    assign_simple_gradings(g);
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

void emit(Combination<SimpleGenerator>& out, const SimpleGenerator& src, SimpleGenerator g) {
  assign_simple_gradings(g);
  if (g.j != src.j || g.i != src.i - 2 || g.bottom != src.bottom)
    throw InvariantViolation("bridge broke the grading of " + src.label());
  out.emplace_back(std::move(g), 1);
}

}  // namespace

Combination<SimpleGenerator> bridge_simple(const ResolutionTable& table, const SimpleGenerator& g, int p) {
  Combination<SimpleGenerator> out;
  if (g.state.at(p) == Smoothing::Negative) return out;

  const Resolution& from = table.at(g.state);
  const State target_state = g.state.with(p, Smoothing::Negative);
  const Resolution& to = table.at(target_state);
  const Saddle sd = saddle_at(from, to, p);
  // A half-twisted band makes the bridged component non-orientable.
  if (sd.one_sided) return out;

  SimpleGenerator base;
  base.state = target_state;
  base.bottom = g.bottom;
  for (const auto& [id, dec] : g.decorations)
    if (std::find(sd.before.begin(), sd.before.end(), id) == sd.before.end()) base.decorations[id] = dec;

  auto essential_before = [&](int id) { return from.circle_by_id(id).essential; };
  auto essential_after = [&](int id) { return to.circle_by_id(id).essential; };
  auto dec_of = [&](int id) { return g.decorations.at(id); };

  if (sd.merge) {
    const int a = sd.before[0], b = sd.before[1], m = sd.after[0];
    const bool ea = essential_before(a), eb = essential_before(b);
    if (!ea && !eb) {
      if (essential_after(m)) throw InvariantViolation("two trivial circles merged into an essential one");
      if (dec_of(a) == Decoration::X && dec_of(b) == Decoration::X) return out;
      SimpleGenerator r = base;
      r.decorations[m] = (dec_of(a) == Decoration::X || dec_of(b) == Decoration::X) ? Decoration::X : Decoration::One;
      emit(out, g, std::move(r));
    } else if (ea != eb) {
      if (!essential_after(m)) throw InvariantViolation("trivial and essential circles merged into a trivial one");
      const int t = ea ? b : a;
      if (dec_of(t) == Decoration::X) return out;
      emit(out, g, base);
    }
    // Two essential circles bridged to each other vanish.
    return out;
  }

  const int a = sd.before[0], c1 = sd.after[0], c2 = sd.after[1];
  const bool e1 = essential_after(c1), e2 = essential_after(c2);
  if (!essential_before(a)) {
    if (e1 != e2) throw InvariantViolation("trivial circle split into trivial and essential circles");
    if (e1) return out;  // turnback annulus
    SimpleGenerator r = base;
    if (dec_of(a) == Decoration::One) {
      r.decorations[c1] = Decoration::One;
      r.decorations[c2] = Decoration::X;
      emit(out, g, r);
      r.decorations[c1] = Decoration::X;
      r.decorations[c2] = Decoration::One;
      emit(out, g, r);
    } else {
      r.decorations[c1] = Decoration::X;
      r.decorations[c2] = Decoration::X;
      emit(out, g, r);
    }
    return out;
  }
  if (!e1 && !e2) throw InvariantViolation("essential circle split into two trivial circles");
  if (e1 && e2) return out;  // pair of pants
  SimpleGenerator r = base;
  r.decorations[e1 ? c2 : c1] = Decoration::X;
  emit(out, g, r);
  return out;
}

}  // namespace foamlink
