// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each line carries the measured numbers so a failure can
// be read without rerunning.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracle_constants.hpp"
#include "pcts/harness.hpp"
#include "reference_hoo.hpp"

using namespace pcts;
using Eigen::VectorXd;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<RunTrace> suite(const OptionMap& opts) { return run_suite(resolve_spec(opts)).traces; }

double median_of(const std::vector<RunTrace>& ts, auto field) {
  std::vector<double> v;
  for (const auto& t : ts) v.push_back(field(t));
  return median(v);
}

double final_value(const RunTrace& t) { return t.final.true_value; }
double final_regret(const RunTrace& t) { return t.final.regret; }
double height(const RunTrace& t) { return static_cast<double>(t.tree.height); }

// ---- reproductions --------------------------------------------------------

Outcome a1() {
  const double m = median_of(suite({{"preset", "hartmann3-paper"}}), final_value);
  return {m >= 3.85, fmt("median final true value %.6f (need >= 3.85, f* = 3.86278)", m)};
}

Outcome a2() {
  const double m = median_of(suite({{"preset", "branin-paper"}}), final_value);
  return {std::abs(m - (-0.3979)) <= 0.1, fmt("median final true value %.6f (need within 0.1 of -0.3979)", m)};
}

Outcome a3() {
  const double m = median_of(suite({{"preset", "currin-paper"}}), final_value);
  return {m >= 13.75, fmt("median final true value %.6f (need >= 13.75, f* = 13.798685)", m)};
}

Outcome a4() {
  const double m = median_of(suite({{"preset", "branin-geo"}}), final_value);
  return {std::abs(m - (-0.3979)) <= 0.1,
          fmt("geo:10, 190 rounds: median final true value %.6f (need within 0.1 of -0.3979)", m)};
}

Outcome a5() {
  OptionMap base{{"preset", "hartmann3-paper"}, {"policy", "ucb1-sigma"}, {"seeds", "0-19"}};
  OptionMap none = base, late = base;
  none["delay"] = "none";
  late["delay"] = "const:50";
  const double r0 = median_of(suite(none), final_regret);
  const double r50 = median_of(suite(late), final_regret);
  return {r0 <= r50, fmt("median regret tau=0 %.6f vs const:50 %.6f (20 paired seeds)", r0, r50)};
}

Outcome a6() {
  OptionMap base{{"preset", "hartmann3-paper"}, {"policy", "ucb1"}, {"delay", "const:10"}};
  OptionMap waa = base;
  waa["algo"] = "wait_and_act";
  auto p = suite(base), w = suite(waa);
  const double rp = median_of(p, final_regret), rw = median_of(w, final_regret);
  const double hp = median_of(p, height), hw = median_of(w, height);
  return {rp <= rw && hp > hw,
          fmt("median regret pcts %.6f vs wait-and-act %.6f; median height %.0f vs %.0f", rp, rw, hp, hw)};
}

Outcome a7() {
  std::size_t rounds_checked = 0, mismatches = 0, s_ne_t = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunConfig c;
    c.benchmark = benchmark_by_name("quadratic1d");
    c.policy = PolicyParams::ucb1();
    c.budget = RoundBudget{200};
    c.seed = seed;
    RunHooks hooks;
    hooks.on_round = [&](const RoundView& v) {
      ++rounds_checked;
      for (NodeId id = 0; id < v.tree->size(); ++id) {
        const auto& s = v.tree->node(id).stats;
        if (s.observed != s.invoked) ++s_ne_t;
      }
    };
    auto got = reference::selections_of(run_pcts(c, hooks));
    auto want = reference::run(c, 200);
    if (got.size() != want.size()) {
      ++mismatches;
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i) mismatches += got[i] == want[i] ? 0 : 1;
  }
  return {mismatches == 0 && s_ne_t == 0,
          fmt("5 seeds x 200 rounds: %zu selection mismatches vs reference HOO, %zu node-rounds with S != T",
              mismatches, s_ne_t)};
}

// ---- horizons -------------------------------------------------------------

Outcome a8() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> variant(0, 3);
  std::uniform_real_distribution<double> u(0, 1);
  int below = 0, off_by_more = 0, consistent = 0;
  std::string first_below, first_off;
  for (int c = 0; c < 100; ++c) {
    const double lambda1 = 0.5 + 4.5 * u(rng);
    const double budget = lambda1 * (1.0 + 99.0 * u(rng));
    CostModel cm;
    switch (variant(rng)) {
      case 0: cm = LinearGrowthCost{0.05 + 2.95 * u(rng)}; break;
      case 1: cm = ConstantCost{0.05 + 0.95 * u(rng) * lambda1}; break;
      // beta >= 1 makes the cost series summable, so the horizon is unbounded
      // and the closed form has no meaning; stay well below it
      case 2: cm = PolyDecayCost{0.05 + 0.55 * u(rng)}; break;
      default: cm = ExpDecayCost{0.05 + 0.9 * u(rng)}; break;
    }
    const double bound = horizon_lower_bound(cm, budget, lambda1);
    const auto exact = static_cast<double>(horizon_exact(cm, budget, lambda1));
    const std::string where = to_string(cm) + fmt(" lambda1=%.3g budget=%.3g: exact %.0f bound %.4g", lambda1,
                                                  budget, exact, bound);
    if (exact < bound) {
      if (below++ == 0) first_below = where;
    }
    if (!std::holds_alternative<ConstantCost>(cm)) {
      ++consistent;
      if (std::abs(exact - bound) > 1.0) {
        if (off_by_more++ == 0) first_off = where;
      }
    }
  }
  // the worked constant-cost example: bound 38 against 20 affordable steps
  const double ex_bound = horizon_lower_bound(ConstantCost{0.5}, 10, 1);
  const auto ex_exact = horizon_exact(ConstantCost{0.5}, 10, 1);
  std::string detail = fmt("exact < bound in %d/100; closed form off by > 1 step in %d/%d (linear/poly/exp)", below,
                           off_by_more, consistent);
  detail += fmt("; constant beta=0.5 lambda1=1 budget=10: bound %.0f, exact %llu", ex_bound,
                static_cast<unsigned long long>(ex_exact));
  if (!first_below.empty()) detail += "; e.g. " + first_below;
  if (!first_off.empty() && first_off != first_below) detail += "; e.g. " + first_off;
  return {below == 0 && off_by_more == 0, detail};
}

// ---- invariant suites -----------------------------------------------------

struct Property {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t need = 1000;
  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  bool pass() const { return failures == 0 && cases >= need; }
};

RunConfig engine_config(const char* bench, std::uint64_t seed, DelayModel delay) {
  RunConfig c;
  c.benchmark = benchmark_by_name(bench);
  c.policy = PolicyParams::ucbv(2.0);
  c.noise_sigma2 = 0.05;
  c.delay = delay;
  c.budget = RoundBudget{120};
  c.seed = seed;
  return c;
}

PartitionTree random_tree(Rng& rng, const Box& domain, int expansions) {
  PartitionTree tree(domain);
  for (int i = 0; i < expansions; ++i) {
    std::vector<NodeId> leaves;
    for (NodeId id = 0; id < tree.size(); ++id) {
      if (tree.node(id).is_leaf()) leaves.push_back(id);
    }
    tree.expand(leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)]);
  }
  return tree;
}

std::vector<double> random_bounds(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> v(-2, 2), u(0, 1);
  std::vector<double> b(n);
  for (auto& x : b) x = u(rng) < 0.1 ? kInf : v(rng);
  return b;
}

bool interior(const Box& box, const VectorXd& x) {
  return (x.array() > box.lower().array()).all() && (x.array() < box.upper().array()).all();
}

Outcome a9() {
  std::vector<Property> props;
  Rng rng(99);
  std::uniform_real_distribution<double> u(0, 1);

  {
    Property p{"partition validity"};
    for (int t = 0; t < 50; ++t) {
      const Box dom = benchmark_by_name(t % 2 ? "hartmann3" : "borehole").domain;
      PartitionTree tree = random_tree(rng, dom, 40);
      for (int k = 0; k < 20; ++k) {
        const VectorXd x = sample_uniform(dom, rng);
        int holders = 0;
        for (NodeId id = 0; id < tree.size(); ++id) {
          if (tree.node(id).is_leaf() && interior(tree.node(id).box, x)) ++holders;
        }
        p.check(holders == 1 && interior(tree.node(tree.locate(x)).box, x));
      }
    }
    props.push_back(p);
  }
  {
    Property p{"B^min recursion bounds and monotone coupling"};
    const double nu1 = 1.0, rho = 0.7;
    for (int t = 0; t < 1000; ++t) {
      PartitionTree tree = random_tree(rng, Box::cube(2, 0, 1), 1 + t % 30);
      auto bounds = random_bounds(rng, tree.size());
      tree.backup_bmin(bounds, nu1, rho);
      bool ok = true;
      for (NodeId id = 0; id < tree.size(); ++id) {
        const auto& n = tree.node(id);
        const double own = bounds[id] + nu1 * std::pow(rho, n.depth);
        const double want = n.is_leaf() ? own : std::min(own, std::max(tree.node(n.left).b_min, tree.node(n.right).b_min));
        ok = ok && n.b_min == want && n.b_min <= own;
      }
      // raise one leaf and recompute: no ancestor may drop
      std::vector<double> before;
      for (NodeId id = 0; id < tree.size(); ++id) before.push_back(tree.node(id).b_min);
      NodeId leaf = tree.size() - 1;
      bounds[leaf] += 1.0 + u(rng);
      tree.backup_bmin(bounds, nu1, rho);
      for (NodeId id : tree.path_to(leaf)) ok = ok && tree.node(id).b_min >= before[id];
      p.check(ok);
    }
    props.push_back(p);
  }
  {
    Property cons{"T = S + G conservation, ancestor counting, growth by 2"};
    Property budget{"budget discipline and running-max best value"};
    const DelayModel delays[] = {NoDelay{}, ConstantDelay{4}, GeometricDelay{6}};
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      for (const auto& d : delays) {
        RunConfig c = engine_config("branin", seed, d);
        std::uint64_t rounds = 0;
        std::map<std::pair<std::uint32_t, std::string>, std::uint64_t> picked;
        RunHooks hooks;
        hooks.on_round = [&](const RoundView& v) {
          ++rounds;
          const auto& tree = *v.tree;
          picked[{v.record.selected->depth, v.record.selected->index.to_string()}]++;
          std::vector<std::uint64_t> in_flight(tree.size(), 0);
          for (const auto& q : v.env.pending()) {
            for (NodeId id : q.path) ++in_flight[id];
          }
          bool ok = tree.node(0).stats.invoked == rounds && tree.size() == 2 * rounds + 1 &&
                    tree.node(0).stats.missing() == v.env.pending_count();
          for (NodeId id = 0; id < tree.size(); ++id) {
            const auto& n = tree.node(id);
            const std::uint64_t kids =
                n.is_leaf() ? 0 : tree.node(n.left).stats.invoked + tree.node(n.right).stats.invoked;
            auto it = picked.find({n.depth, n.index.to_string()});
            const std::uint64_t own = it == picked.end() ? 0 : it->second;
            ok = ok && n.stats.invoked == n.stats.observed + in_flight[id] && n.stats.invoked == kids + own;
          }
          cons.check(ok);
        };
        RunTrace tr = run_pcts(c, hooks);
        for (std::size_t i = 0; i < tr.rounds.size(); ++i) {
          budget.check((i == 0 || tr.rounds[i].best_value >= tr.rounds[i - 1].best_value) &&
                       tr.rounds[i].cumulative_cost <= tr.rounds.size() * c.benchmark.full_cost());
        }
      }
    }
    for (int k = 0; k < 10; ++k) {
      RunConfig c = engine_config("hartmann3", static_cast<std::uint64_t>(k), ConstantDelay{3});
      c.fidelity.enabled = true;
      c.budget = CostBudget{5.0 + k};
      RunTrace tr = run_pcts(c);
      for (const auto& r : tr.rounds) budget.check(r.cumulative_cost <= 5.0 + k + c.benchmark.full_cost());
    }
    props.push_back(cons);
    props.push_back(budget);
  }
  {
    Property t_mono{"bounds nondecreasing in t"}, s_mono{"bonus strictly decreasing in s"},
        ucbv0{"UCBV zero-variance reduction"}, var{"running variance vs two-pass"};
    const PolicyParams kinds[] = {PolicyParams::ucb1(), PolicyParams::ucb1_sigma(0.3), PolicyParams::ucbv(2.0, 0.5)};
    std::uniform_int_distribution<std::uint64_t> round(2, 100000), count(1, 500);
    for (int c = 0; c < 1000; ++c) {
      NodeStats s;
      const int n = 1 + c % 40;
      std::vector<double> xs(n);
      for (auto& x : xs) {
        x = 6 * u(rng) - 3;
        s.sum += x;
        s.sum_sq += x * x;
      }
      s.invoked = s.observed = n;
      std::uint64_t t1 = round(rng), t2 = round(rng);
      if (t1 > t2) std::swap(t1, t2);
      bool ok = true;
      for (const auto& p : kinds) ok = ok && confidence_bound(p, s, t1) <= confidence_bound(p, s, t2);
      t_mono.check(ok);

      std::uint64_t s1 = count(rng), s2 = count(rng);
      if (s1 == s2) s2 = s1 + 1;
      if (s1 > s2) std::swap(s1, s2);
      const double m = 6 * u(rng) - 3, v = 2 * u(rng);
      auto make = [&](std::uint64_t k) {
        NodeStats st;
        st.invoked = st.observed = k;
        st.sum = m * static_cast<double>(k);
        st.sum_sq = (v + m * m) * static_cast<double>(k);
        return st;
      };
      ok = true;
      for (const auto& p : kinds) {
        const NodeStats a = make(s1), b = make(s2);
        ok = ok && confidence_bound(p, a, t1) - *empirical_mean(a) > confidence_bound(p, b, t1) - *empirical_mean(b);
      }
      s_mono.check(ok);

      const double x0 = std::round(20 * u(rng) - 10);
      NodeStats z;
      z.invoked = z.observed = static_cast<std::uint64_t>(n);
      z.sum = x0 * n;
      z.sum_sq = x0 * x0 * n;
      const auto pv = PolicyParams::ucbv(0.01 + 10 * u(rng), 0.01 + 3 * u(rng));
      ucbv0.check(confidence_bound(pv, z, t1) == x0 + pv.c * 3.0 * pv.b * std::log(static_cast<double>(t1)) / n);

      if (n >= 2) {
        double mean = 0;
        for (double x : xs) mean += x;
        mean /= n;
        double acc = 0;
        for (double x : xs) acc += (x - mean) * (x - mean);
        var.check(std::abs(*empirical_variance(s) - acc / n) <= 1e-10 * (acc / n));
      }
    }
    var.need = 900;  // single-sample streams are skipped
    props.insert(props.end(), {t_mono, s_mono, ucbv0, var});
  }
  {
    Property geo{"geometric delay mean within 5%"};
    geo.need = 4;
    for (double mean : {2.0, 5.0, 10.0, 25.0}) {
      double sum = 0;
      const int n = 100000;
      bool support = true;
      for (int i = 0; i < n; ++i) {
        const auto d = sample_delay(GeometricDelay{mean}, rng);
        support = support && d >= 1;
        sum += static_cast<double>(d);
      }
      geo.check(support && std::abs(sum / n - mean) <= 0.05 * mean);
    }
    props.push_back(geo);

    Property cap{"step cost cap"};
    for (int c = 0; c < 1000; ++c) {
      const double l1 = 0.1 + 10 * u(rng), b = 0.05 + 3 * u(rng);
      const auto h = 1 + static_cast<std::uint64_t>(200 * u(rng));
      bool ok = true;
      for (const CostModel& cm : {CostModel{LinearGrowthCost{b}}, CostModel{ConstantCost{b}},
                                  CostModel{PolyDecayCost{b}}, CostModel{ExpDecayCost{std::min(b, 0.99)}}}) {
        const double sc = step_cost(cm, h, l1, 0.0);
        ok = ok && sc > 0.0 && sc <= l1;
      }
      cap.check(ok);
    }
    props.push_back(cap);
  }
  {
    Property grid{"MFPOO grid law"};
    for (int c = 0; c < 1000; ++c) {
      const double rm = 0.05 + 0.94 * u(rng);
      const auto t = static_cast<std::uint64_t>(100000 * u(rng));
      auto plan = plan_instances(1.0, rm, RoundBudget{t}, ConstantCost{1}, 1.0);
      const double n = static_cast<double>(plan.instances);
      bool ok = plan.rho_grid.size() == plan.instances;
      for (std::size_t i = 0; i < plan.rho_grid.size(); ++i) {
        ok = ok && std::abs(std::pow(plan.rho_grid[i], (i + 2.0) / (2.0 * n)) - rm) <= 1e-12;
      }
      grid.check(ok);
    }
    props.push_back(grid);
  }
  {
    Property rt{"trace CSV round trip"};
    RunTrace t;
    std::uniform_real_distribution<double> wide(-1e6, 1e6);
    for (std::uint64_t r = 1; r <= 1000; ++r) {
      RoundRecord rec;
      rec.round = r;
      rec.cumulative_cost = std::ldexp(u(rng), static_cast<int>(r % 60) - 30);
      rec.fidelity = u(rng);
      rec.best_value = r % 97 == 0 ? -kInf : wide(rng);
      rec.simple_regret = r % 89 == 0 ? std::numeric_limits<double>::quiet_NaN() : wide(rng) * 1e-7;
      if (r % 5) rec.selected = NodeKey{static_cast<std::uint32_t>(r % 40), NodeIndex{}};
      rec.feedbacks_received = r % 3;
      rec.tree_height = static_cast<std::uint32_t>(r / 7);
      rec.node_count = 2 * r + 1;
      t.rounds.push_back(rec);
    }
    auto rows = parse_trace_csv(trace_csv(t));
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
      const auto& a = t.rounds[i];
      if (i >= rows.size()) {
        rt.check(false);
        continue;
      }
      const auto& b = rows[i];
      const bool reg = std::isnan(a.simple_regret) ? std::isnan(b.simple_regret) : a.simple_regret == b.simple_regret;
      rt.check(reg && a.round == b.round && a.cumulative_cost == b.cumulative_cost && a.fidelity == b.fidelity &&
               a.best_value == b.best_value && a.tree_height == b.tree_height && a.node_count == b.node_count &&
               a.feedbacks_received == b.feedbacks_received &&
               (a.selected ? b.depth_selected == a.selected->depth : !b.depth_selected));
    }
    props.push_back(rt);

    Property det{"CSV determinism across reruns and thread counts"};
    det.need = 1;
    OptionMap opts{{"preset", "branin-geo"}, {"budget-rounds", "80"}, {"seeds", "0-5"}};
    ExperimentSpec s1 = resolve_spec(opts);
    opts["jobs"] = "3";
    ExperimentSpec s3 = resolve_spec(opts);
    auto bytes = [](const SuiteResult& r) {
      std::string out = summary_csv(std::span(&r.summary, 1)) + curve_csv(r.curve);
      for (const auto& t : r.traces) out += trace_csv(t);
      return out;
    };
    const std::string first = bytes(run_suite(s1));
    det.check(first == bytes(run_suite(s1)));
    det.check(first == bytes(run_suite(s3)));
    props.push_back(det);

    Property agg{"aggregation vs direct computation"};
    SuiteResult r = run_suite(s1);
    std::vector<double> finals;
    for (const auto& t : r.traces) finals.push_back(t.final.true_value);
    std::vector<double> sorted = finals;
    std::sort(sorted.begin(), sorted.end());
    const double med = 0.5 * (sorted[2] + sorted[3]);
    double mean = 0;
    for (double f : finals) mean += f / 6.0;
    double sq = 0;
    for (double f : finals) sq += (f - mean) * (f - mean) / 6.0;
    agg.need = 1;
    agg.check(r.summary.median_final == med && r.summary.max_final == sorted.back() &&
              std::abs(r.summary.std_final - std::sqrt(sq)) <= 1e-12 * std::max(1.0, std::sqrt(sq)));
    props.push_back(agg);
  }
  {
    // checked on every benchmark that has a fidelity knob
    for (const auto& name : benchmark_names()) {
      const Benchmark& b = benchmark_by_name(name);
      if (!b.multi_fidelity) continue;
      Property p{"fidelity sandwich: " + name};
      p.need = 10000;
      for (int i = 0; i < 10000; ++i) {
        const VectorXd x = sample_uniform(b.domain, rng);
        double z1 = u(rng), z2 = u(rng);
        if (z1 > z2) std::swap(z1, z2);
        const double f1 = b.evaluate(x, 1.0);
        p.check(std::abs(f1 - b.evaluate(x, z2)) <=
                std::abs(f1 - b.evaluate(x, z1)) + 1e-9 * std::max(1.0, std::abs(f1)));
      }
      props.push_back(p);
    }
  }

  bool all = true;
  std::string failed;
  std::size_t total = 0;
  for (const auto& p : props) {
    total += p.cases;
    if (p.pass()) continue;
    all = false;
    failed += fmt("; %s: %zu/%zu cases failed", p.name.c_str(), p.failures, p.cases);
  }
  return {all, fmt("%zu properties, %zu cases", props.size(), total) + (all ? "" : failed)};
}

// ---- fixtures -------------------------------------------------------------

Outcome a10() {
  struct Fixture {
    const char* name;
    double published;
    double tol;
  };
  const Fixture fixtures[] = {{"hartmann3", 3.86278, 1e-3},   {"hartmann6", 3.32237, 1e-3},
                              {"currin", 13.798685, 1e-3},    {"borehole", 309.523221, 1e-2},
                              {"branin", -0.397887, 1e-3},    {"schwefel", 0.0, 1e-1}};
  std::string misses;
  for (const auto& f : fixtures) {
    const Benchmark& b = benchmark_by_name(f.name);
    const double v = b.evaluate(*b.maximizer_hint, 1.0);
    if (std::abs(v - f.published) > f.tol || std::abs(v - b.f_star) > 1e-9 * std::max(1.0, std::abs(b.f_star))) {
      misses += fmt("; %s at maximizer %.6f vs %.6f (tol %g)", f.name, v, f.published, f.tol);
    }
  }
  auto rel = [](double got, double want) { return std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)); };
  const double pi = std::numbers::pi;
  const std::pair<double, double> constants[] = {
      {hartmann6(VectorXd::Zero(6), 1.0), oracle::hartmann6_corner_z1},
      {hartmann3(VectorXd::Constant(3, 0.5), 0.5), oracle::hartmann3_center_z05},
      {currin_exp(VectorXd::Constant(2, 0.5), 0.3), oracle::currin_mid_z03},
      {borehole(benchmark_by_name("borehole").domain.center(), 0.5), oracle::borehole_mid_z05},
      {branin(VectorXd::Zero(2), 0.2), oracle::branin_origin_z02},
      {branin((VectorXd(2) << pi, 2.275).finished(), 1.0), oracle::branin_min},
      {schwefel(VectorXd::Zero(20)), oracle::schwefel_zero},
      {benchmark_by_name("schwefel").f_star, oracle::schwefel_max},
  };
  int bad = 0;
  for (const auto& [got, want] : constants) bad += rel(got, want) ? 0 : 1;
  if (bad) misses += fmt("; %d regression constants off", bad);
  return {misses.empty(), "6 fixtures, 8 regression constants" + misses};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-4s %s  %s [%.2fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
