// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Tolerances and sample sizes are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stochstab/hub.hpp"
#include "stochstab/oracle/brute_force.hpp"
#include "stochstab/oracle/numeric.hpp"
#include "stochstab/transforms.hpp"
#include "support/fixtures.hpp"

using namespace stochstab;
using namespace stochstab::test;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kFixtureRuntimeLimit = 1e-3;      // seconds
constexpr double kResidualLimit = 1e-12;
constexpr double kEmpiricalThreshold = 0.01;
constexpr double kScalingExponentLimit = 3.5;
constexpr double kLargestRuntimeLimit = 10.0;      // seconds at n = 400

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class Fn>
double median_seconds(int runs, Fn&& fn) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = Clock::now();
    fn();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string braces(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "}";
}

bool same_up_to_renaming(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a.vertices())
    if (!b.index_of(v)) return false;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (u != v && a.weight(u, v) != b.weight(*b.index_of(a.vertex(u)), *b.index_of(a.vertex(v)))) return false;
  return true;
}

const VanishedEntry<MC>* vanished_entry(const StabilityReport<MC>& r, const std::string& name) {
  for (const auto& v : r.vanished)
    if (v.states.contains(name)) return &v;
  return nullptr;
}

MC weight_by_name(const Graph& g, const char* from, const char* to) {
  return g.weight(*g.index_of(from), *g.index_of(to));
}

oracle::OffDiagonal unit_coefficients(const Graph& g) {
  oracle::OffDiagonal spec;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (u != v && !g.weight(u, v).is_zero()) spec[{u, v}] = oracle::MonomialSpec(Rational(1), g.weight(u, v).exponent());
  return spec;
}

/// Calls fn on every graph with `n` vertices whose arcs take values in
/// `alphabet`, reusing one graph object.
void for_each_graph(std::size_t n, const std::vector<MC>& alphabet, const std::function<void(const Graph&)>& fn) {
  auto g = Graph::from_names(state_names(n));
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) arcs.emplace_back(u, v);
  std::vector<std::size_t> digit(arcs.size(), 0);
  for (const auto& [u, v] : arcs) g.set_weight(u, v, alphabet[0]);
  while (true) {
    fn(g);
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == alphabet.size()) {
      digit[i] = 0;
      g.set_weight(arcs[i].first, arcs[i].second, alphabet[0]);
      ++i;
    }
    if (i == digit.size()) return;
    g.set_weight(arcs[i].first, arcs[i].second, alphabet[digit[i]]);
  }
}

Outcome criterion_1() {
  Outcome o;
  const auto g = fig_stable1();
  const auto r = hub(g).report;
  require(o, r.stable == std::vector<std::string>{"y"}, "stable = " + braces(r.stable));
  const double t = median_seconds(101, [&] { (void)hub(g); });
  require(o, t < kFixtureRuntimeLimit, "median runtime " + fmt("%.3g s", t));
  if (o.pass) o.detail = "stable = {y}, median runtime " + fmt("%.3g us", t * 1e6);
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto r = hub(fig_disconnected());
  require(o, r.report.stable == std::vector<std::string>{"x", "z"}, "stable = " + braces(r.report.stable));
  require(o, r.trace.levels.size() == 3, "expected two scaling levels and a terminal one");
  if (!o.pass) return o;
  const auto& l1 = r.trace.levels[0];
  const auto& s1 = *l1.scaled;
  require(o, l1.divisor == E(2), "M1 = " + to_string(l1.divisor));
  require(o, weight_by_name(s1, "x", "y") == E(1) && weight_by_name(s1, "y", "x") == MC::one() &&
                 weight_by_name(s1, "z", "t") == E(7) && weight_by_name(s1, "t", "z") == E(4) &&
                 s1.nonzero_arc_count() == 4,
          "level 1 scaled weights");
  const auto& l2 = r.trace.levels[1];
  const auto& s2 = *l2.scaled;
  require(o, l2.divisor == E(4), "M2 = " + to_string(l2.divisor));
  require(o, s2.size() == 3 && weight_by_name(s2, "z", "t") == E(3) && weight_by_name(s2, "t", "z") == MC::one() &&
                 s2.nonzero_arc_count() == 2,
          "level 2 scaled weights");
  const auto* y = vanished_entry(r.report, "y");
  const auto* t = vanished_entry(r.report, "t");
  require(o, y && y->depth == 1 && exponent(y->time_scale) == Rational(-2), "y vanishing record");
  require(o, t && t->depth == 2 && exponent(t->time_scale) == Rational(-6), "t vanishing record");
  require(o, r.report.vanished.size() == 2, "exactly y and t vanish");
  if (o.pass) o.detail = "stable = {x,z}, M = e^2, e^4, y at eps^-2, t at eps^-6";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto r = hub(fig_vanishing_time_scale()).report;
  require(o, r.stable == std::vector<std::string>{"t"}, "stable = " + braces(r.stable));
  for (const char* s : {"x", "y", "z"}) {
    const auto* e = vanished_entry(r, s);
    const Rational want = std::string(s) == "z" ? Rational(-2) : Rational(0);
    require(o, e && exponent(e->time_scale) == want, std::string(s) + " time scale");
  }
  if (o.pass) o.detail = "stable = {t}, x and y at eps^0, z at eps^-2";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto s = shrink(fig_transient_deletion());
  const auto expected = make_graph(
      {"x", "y", "z"},
      {{"x", "y", E(1)}, {"z", "x", E(1)}, {"y", "x", E(2)}, {"z", "y", E(4)}, {"y", "z", E(2)}});
  require(o, same_up_to_renaming(s, expected), "shrunk graph differs");
  if (o.pass) o.detail = "x->y e^1, z->x e^1, y->x e^2, z->y e^4, y->z e^2, x->z 0";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  std::uniform_real_distribution<double> sparsity(0.0, 0.8);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = random_strongly_connected(rng, size(rng), sparsity(rng));
    std::vector<std::string> want;
    for (auto x : oracle::young_stable_states(g)) want.push_back(g.vertex(x).names().front());
    std::sort(want.begin(), want.end());
    if (hub(g).report.stable != want) ++mismatches;
  }
  require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = "1000 graphs, 0 mismatches";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const std::vector<MC> alphabet{Z(), E(0), E(1), E(2)};
  long checked = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for_each_graph(n, alphabet, [&](const Graph& g) {
      ++checked;
      if (shrink(g) != oracle::brute_shrink(g)) ++mismatches;
    });
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> frac(0.0, 0.5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_scaled_graph(rng, size(rng), frac(rng), frac(rng));
    ++checked;
    if (shrink(g) != oracle::brute_shrink(g)) ++mismatches;
  }
  require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = std::to_string(checked) + " graphs, 0 mismatches";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  long checked = 0, mismatches = 0;
  auto compare = [&](std::size_t n, const std::vector<Arc>& arcs) {
    ++checked;
    if (sink_sccs(n, arcs) != oracle::brute_sink_sccs(n, arcs)) ++mismatches;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Arc> all;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) arcs.push_back(all[i]);
      compare(n, arcs);
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    std::bernoulli_distribution keep(density(rng));
    std::vector<Arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && keep(rng)) arcs.emplace_back(u, v);
    std::shuffle(arcs.begin(), arcs.end(), rng);
    compare(n, arcs);
  }
  require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = std::to_string(checked) + " digraphs, 0 mismatches";
  return o;
}

MC random_class(std::mt19937_64& rng) {
  if (rng() % 8 == 0) return Z();
  if (rng() % 8 == 0) return MC::one();
  return MC::exp(random_exponent(rng, 6));
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(8);
  constexpr int kCases = 20000;
  int failures = 0;
  auto law = [&](bool ok) { failures += ok ? 0 : 1; };
  for (int i = 0; i < kCases; ++i) {
    const MC a = random_class(rng), b = random_class(rng), c = random_class(rng);
    const auto add = [](const MC& p, const MC& q) { return semiring_max(p, q); };
    law(mul(a, b) == mul(b, a));
    law(mul(mul(a, b), c) == mul(a, mul(b, c)));
    law(add(a, b) == add(b, a));
    law(add(add(a, b), c) == add(a, add(b, c)));
    law(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    law(mul(a, MC::one()) == a);
    law(mul(a, Z()) == Z());
    law(add(a, Z()) == a);
    law(add(a, a) == a);
    law(le(a, MC::one()));
    law(le(Z(), a));
    law(le(a, b) || le(b, a));
    law(!(le(a, b) && le(b, a)) || a == b);
    law(!(le(a, b) && le(b, c)) || le(a, c));
    law(!le(a, b) || le(mul(a, c), mul(b, c)));
    if (le(a, b)) law(mul(div(a, b), b) == a);
    if (le(b, a)) law(mul(div(b, a), a) == b);
  }
  require(o, failures == 0, std::to_string(failures) + " law failures");
  if (o.pass) o.detail = std::to_string(kCases) + " random triples, 0 failures";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> size(2, 10);
  int checked = 0, mismatches = 0, attempts = 0;
  while (checked < 500 && attempts < 100000) {
    ++attempts;
    const auto g = random_scaled_graph(rng, size(rng), 0.3, 0.3);
    const auto s = essential_structure(g);
    auto big = std::find_if(s.classes.begin(), s.classes.end(), [](const VertexSet& c) { return c.size() > 1; });
    if (big == s.classes.end()) continue;
    ++checked;
    if (!same_up_to_renaming(shrink(g), shrink(essential_collapse(g, *big)))) ++mismatches;
  }
  require(o, checked == 500, "only " + std::to_string(checked) + " qualifying graphs generated");
  require(o, mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = "500 graphs, 0 mismatches";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const std::vector<double> sweep{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  double worst = 0.0;
  for (const auto& [label, g] : {std::pair{"three-state", fig_stable1()}, std::pair{"disconnected", fig_disconnected()}}) {
    std::vector<std::string> states;
    for (const auto& v : g.vertices()) states.push_back(v.names().front());
    const auto e = oracle::empirical_stability(states, unit_coefficients(g), sweep, kEmpiricalThreshold);
    const auto want = hub(g).report.stable;
    require(o, e.epsilons.size() == sweep.size(), std::string(label) + ": sweep truncated");
    require(o, e.names_with(oracle::Empirical::stable) == want,
            std::string(label) + ": empirically stable " + braces(e.names_with(oracle::Empirical::stable)) +
                " vs hub " + braces(want));
    require(o, e.max_residual <= kResidualLimit, std::string(label) + ": residual " + fmt("%.3g", e.max_residual));
    worst = std::max(worst, e.max_residual);
  }
  if (o.pass) o.detail = "both fixtures agree, max residual " + fmt("%.3g", worst);
  return o;
}

/// Every arc non-Zero with exponent p/1000, p uniform in 1..10^6. Ties are
/// rare, so each level removes only a few vertices and the recursion runs
/// about n levels deep.
Graph dense_random_graph(std::mt19937_64& rng, std::size_t n) {
  auto g = Graph::from_names(state_names(n));
  std::uniform_int_distribution<std::int64_t> p(1, 1000000);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) g.set_weight(u, v, MC::exp(Rational(p(rng), 1000)));
  return g;
}

Outcome criterion_11() {
  Outcome o;
  std::mt19937_64 rng(11);
  const std::vector<std::size_t> sizes{100, 200, 400};
  const HubOptions options{Execution::parallel, false};
  std::vector<double> medians;
  std::vector<std::size_t> depths;
  for (auto n : sizes) {
    const auto g = dense_random_graph(rng, n);
    std::size_t levels = 0;
    medians.push_back(median_seconds(3, [&] { levels = hub(g, options).trace.levels.size(); }));
    depths.push_back(levels);
  }
  // Least-squares slope of log t against log n.
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    mx += std::log(double(sizes[i]));
    my += std::log(medians[i]);
  }
  mx /= sizes.size();
  my /= sizes.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double dx = std::log(double(sizes[i])) - mx;
    sxy += dx * (std::log(medians[i]) - my);
    sxx += dx * dx;
  }
  const double slope = sxy / sxx;
  std::string timing;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    timing += "n=" + std::to_string(sizes[i]) + ": " + fmt("%.3f s", medians[i]) + " over " +
              std::to_string(depths[i]) + " levels, ";
  require(o, slope <= kScalingExponentLimit, timing + "exponent " + fmt("%.2f", slope));
  require(o, medians.back() < kLargestRuntimeLimit, timing + "n=400 too slow");
  if (o.pass) o.detail = timing + "exponent " + fmt("%.2f", slope);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-state fixture stable set and runtime", criterion_1},
      {"disconnected fixture trace", criterion_2},
      {"chain fixture time scales", criterion_3},
      {"transient deletion shrink", criterion_4},
      {"arborescence oracle equivalence", criterion_5},
      {"shrink against path enumeration", criterion_6},
      {"sink SCCs against brute force", criterion_7},
      {"semiring laws", criterion_8},
      {"collapse then shrink equals shrink", criterion_9},
      {"numerical cross-check", criterion_10},
      {"complexity scaling", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %zu: %s (%s) [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
