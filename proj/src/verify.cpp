#include "wreath/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "wreath/belyi.hpp"
#include "wreath/errors.hpp"
#include "wreath/normalizer.hpp"

namespace wreath {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<Family> families_of(const SuiteParams& p) {
  if (p.family) {
    if (*p.family == Family::W)
      throw Error(ErrorKind::InvalidParameter, "this suite takes family E or U");
    return {*p.family};
  }
  return {Family::E, Family::U};
}

std::int64_t samples_or(const SuiteParams& p, std::int64_t fallback) {
  const std::int64_t s = p.samples.value_or(fallback);
  if (s < 0) throw Error(ErrorKind::InvalidParameter, "samples must be >= 0");
  return s;
}

VerificationReport make_report(std::string suite, const SuiteParams& p) {
  VerificationReport r;
  r.command = "verify " + suite;
  r.seed = p.seed;
  return r;
}

std::vector<TreeAut> children_of(const TreeAut& a) {
  std::vector<TreeAut> out;
  if (a.level() == 0) return out;
  out.reserve(static_cast<std::size_t>(a.degree()));
  for (int j = 0; j < a.degree(); ++j) out.push_back(a.child(j));
  return out;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Images of all leaves, computed through the word action.
std::vector<std::uint32_t> leaf_images(const TreeAut& a) {
  const std::size_t leaves = ipow(static_cast<std::size_t>(a.degree()), a.level());
  std::vector<std::uint32_t> out(leaves);
  VertexWord w{a.degree(), std::vector<int>(static_cast<std::size_t>(a.level()))};
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    std::size_t x = leaf;
    for (int t = a.level() - 1; t >= 0; --t) {
      w.letters[static_cast<std::size_t>(t)] = static_cast<int>(x % static_cast<std::size_t>(a.degree()));
      x /= static_cast<std::size_t>(a.degree());
    }
    const VertexWord img = act_on_word(a, w);
    std::uint32_t idx = 0;
    for (int l : img.letters) idx = idx * static_cast<std::uint32_t>(a.degree()) + static_cast<std::uint32_t>(l);
    out[leaf] = idx;
  }
  return out;
}

bool order_fits(const BigInt& order, std::uint64_t guard) { return order <= BigInt(guard); }

std::string describe(const TreeAut& a) { return to_string(a); }

} // namespace

bool VerificationReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(v);
  return v.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (c.skipped) cj["skipped"] = true;
    cj["details"] = c.details;
    cj["counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.counts) cj["counts"][k] = big_to_json(v);
    j["checks"].push_back(std::move(cj));
  }
  j["seed"] = seed;
  j["elapsed_ms"] = elapsed_ms;
  j["version"] = version;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << command << "  (seed " << seed << ", " << elapsed_ms << " ms)\n";
  for (const auto& c : checks) {
    os << (c.skipped ? "[SKIP] " : c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    if (!c.counts.empty()) {
      os << " {";
      for (std::size_t i = 0; i < c.counts.size(); ++i)
        os << (i ? ", " : "") << c.counts[i].first << "=" << c.counts[i].second;
      os << "}";
    }
    os << "\n";
  }
  os << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

TreeAut random_tower_element(int degree, int level, Family family, std::mt19937_64& rng) {
  CosetVector v = zero_vector(family, degree, level);
  for (auto& b : v.bits) b = static_cast<std::uint8_t>(rng() & 1u);
  const TreeAut rep = phi_representative(v);
  const TreeAut g = random_member(degree, level, family, rng);
  return (rng() & 1u) ? compose(rep, g) : compose(g, rep);
}

// ---------------------------------------------------------------------------

VerificationReport verify_relations(const SuiteParams& p) {
  auto report = make_report("relations", p);
  check_degree(p.d);
  if (p.n < 1) throw Error(ErrorKind::InvalidParameter, "relations need level >= 1");
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;

  std::mt19937_64 rng(p.seed);
  Check product{"componentwise-product", true, false, "(x)(y) = (x_i y_i)", {}};
  Check conj{"root-conjugation", true, false, "tau (x) = (x_{tau^-1(i)}) tau", {}};
  Check factor{"portrait-factorization", true, false, "(x) tau = (x) * tau", {}};
  Check action{"action-compatibility", true, false, "act(ab, v) = act(a, act(b, v)) on all leaves", {}};

  const Perm id = Perm::identity(p.d);
  std::int64_t pairs = 0;
  std::int64_t failures[4] = {0, 0, 0, 0};

  auto check_pair = [&](const TreeAut& a, const std::vector<TreeAut>& xa,
                        const std::vector<std::uint32_t>& leaves_a, const TreeAut& b,
                        const std::vector<TreeAut>& yb, const std::vector<std::uint32_t>& leaves_b) {
    ++pairs;
    std::vector<TreeAut> prod(xa.size());
    for (std::size_t i = 0; i < xa.size(); ++i) prod[i] = compose(xa[i], yb[i]);
    if (compose(TreeAut::assemble(xa, id), TreeAut::assemble(yb, id)) != TreeAut::assemble(prod, id))
      ++failures[0];
    const Perm tau = a.root();
    const Perm tau_inv = inverse(tau);
    std::vector<TreeAut> moved(yb.size());
    for (int i = 0; i < p.d; ++i) moved[static_cast<std::size_t>(i)] = yb[static_cast<std::size_t>(tau_inv(i))];
    if (compose(TreeAut::embed(tau, p.n), TreeAut::assemble(yb, id)) != TreeAut::assemble(moved, tau))
      ++failures[1];
    const auto leaves_ab = leaf_images(compose(a, b));
    for (std::size_t v = 0; v < leaves_ab.size(); ++v)
      if (leaves_ab[v] != leaves_a[leaves_b[v]]) {
        ++failures[3];
        break;
      }
  };
  std::int64_t elements = 0;
  auto check_factor = [&](const TreeAut& a, const std::vector<TreeAut>& xa) {
    ++elements;
    if (compose(TreeAut::assemble(xa, id), TreeAut::embed(a.root(), p.n)) != a) ++failures[2];
  };

  const BigInt w_order = order_of_family(std::max(p.d, 3), p.n, Family::W);
  const bool exhaustive = p.d >= 3 && w_order <= 2000 && !p.samples;
  if (exhaustive) {
    const auto all = enumerate_level(p.d, p.n, p.guard).elements();
    std::vector<std::vector<TreeAut>> kids;
    std::vector<std::vector<std::uint32_t>> leaves;
    for (const auto& a : all) {
      kids.push_back(children_of(a));
      leaves.push_back(leaf_images(a));
      check_factor(a, kids.back());
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        check_pair(all[i], kids[i], leaves[i], all[j], kids[j], leaves[j]);
    report.parameters["mode"] = "exhaustive";
  } else {
    const std::int64_t samples = samples_or(p, 100000);
    for (std::int64_t s = 0; s < samples; ++s) {
      std::vector<simd::Block> la(node_count(p.d, p.n)), lb(la.size());
      for (auto& x : la) x = random_perm(p.d, rng).block();
      for (auto& x : lb) x = random_perm(p.d, rng).block();
      const auto a = TreeAut::from_labels_unchecked(p.d, p.n, std::move(la));
      const auto b = TreeAut::from_labels_unchecked(p.d, p.n, std::move(lb));
      const auto xa = children_of(a);
      check_factor(a, xa);
      check_pair(a, xa, leaf_images(a), b, children_of(b), leaf_images(b));
    }
    report.parameters["mode"] = "sampled";
    report.parameters["samples"] = samples;
  }
  Check* checks[4] = {&product, &conj, &factor, &action};
  for (int k = 0; k < 4; ++k) {
    checks[k]->count(k == 2 ? "elements" : "pairs", k == 2 ? elements : pairs).count("failures", failures[k]);
    if (failures[k]) checks[k]->fail(std::to_string(failures[k]) + " counterexamples");
    report.checks.push_back(*checks[k]);
  }
  return report;
}

VerificationReport verify_sgn2_hom(const SuiteParams& p) {
  auto report = make_report("sgn2-hom", p);
  check_degree(p.d);
  if (p.n < 2) throw Error(ErrorKind::InvalidParameter, "sgn2 needs level >= 2");
  const std::int64_t samples = samples_or(p, 10000);
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["samples"] = samples;
  std::mt19937_64 rng(p.seed);
  auto random_w = [&](int from_depth) {
    std::vector<simd::Block> labels(node_count(p.d, p.n), simd::identity_block());
    for (std::size_t k = depth_offset(p.d, from_depth); k < labels.size(); ++k)
      labels[k] = random_perm(p.d, rng).block();
    return TreeAut::from_labels_unchecked(p.d, p.n, std::move(labels));
  };
  Check hom{"homomorphism", true, false, "sgn2(ab) = sgn2(a) sgn2(b)", {}};
  Check factors{"factors-through-level-2", true, false,
                "sgn2(a k) = sgn2(a) for k trivial on T_2", {}};
  std::int64_t bad_hom = 0, bad_factor = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    const TreeAut a = random_w(0), b = random_w(0);
    if (sgn2(compose(a, b)) != sgn2(a) * sgn2(b)) ++bad_hom;
    const TreeAut ak = compose(a, random_w(2));
    if (restrict(ak, 2) != restrict(a, 2) || sgn2(ak) != sgn2(a)) ++bad_factor;
  }
  hom.count("samples", samples).count("failures", bad_hom);
  factors.count("samples", samples).count("failures", bad_factor);
  if (bad_hom) hom.fail(std::to_string(bad_hom) + " counterexamples");
  if (bad_factor) factors.fail(std::to_string(bad_factor) + " counterexamples");
  report.checks = {hom, factors};
  return report;
}

VerificationReport verify_subgroup_orders(const SuiteParams& p) {
  auto report = make_report("subgroup-orders", p);
  check_tower_degree(p.d);
  if (p.n < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["guard"] = p.guard;

  const BigInt w = order_of_family(p.d, p.n, Family::W);
  const BigInt e = order_of_family(p.d, p.n, Family::E);
  const BigInt u = order_of_family(p.d, p.n, Family::U);
  Check orders{"orders", true, false, "", {}};
  orders.count("formula_W", w).count("formula_E", e).count("formula_U", u);

  if (order_fits(w, p.guard)) {
    const ElementSet all = enumerate_level(p.d, p.n, p.guard);
    std::int64_t ne = 0, nu = 0;
    std::vector<TreeAut> e_members;
    for (const auto& a : all.elements()) {
      if (is_member(a, Family::E)) {
        ++ne;
        if (p.n == 2) e_members.push_back(a);
      }
      if (is_member(a, Family::U)) ++nu;
    }
    orders.count("W", static_cast<std::int64_t>(all.size())).count("E", ne).count("U", nu);
    orders.details = "enumerated W_n and filtered by membership";
    if (BigInt(all.size()) != w) orders.fail("|W_n| enumeration disagrees with formula");
    if (BigInt(ne) != e) orders.fail("|E_n| enumeration disagrees with formula");
    if (BigInt(nu) != u) orders.fail("|U_n| enumeration disagrees with formula");
    report.checks.push_back(orders);

    if (p.n == 2) {
      // ker(sgn2) is normal: x E_2 x^-1 = E_2 for every x in W_2.
      Check normal{"E2-normal-in-W2", true, false, "conjugation over enumerated W_2", {}};
      const ElementSet e_set(p.d, p.n, [&] {
        std::vector<std::string> keys;
        for (const auto& a : e_members) keys.push_back(all.codec().encode(a));
        return keys;
      }());
      const auto gens = generators_of(p.d, p.n, Family::E);
      std::int64_t bad = 0;
      for (const auto& x : all.elements())
        if (!conjugation_normalizes(e_set, gens, x)) ++bad;
      normal.count("conjugators", static_cast<std::int64_t>(all.size())).count("failures", bad);
      if (bad) normal.fail(std::to_string(bad) + " conjugators leave E_2");
      report.checks.push_back(normal);
    }
  } else {
    orders.details = "W_n exceeds the guard; closures of generators used where they fit";
    orders.count("W", w);
    for (Family f : {Family::E, Family::U}) {
      const BigInt expected = f == Family::E ? e : u;
      if (!order_fits(expected, p.guard)) {
        orders.details += "; " + std::string(to_string(f)) + "_n exceeds the guard";
        continue;
      }
      const ElementSet g = closure(generators_of(p.d, p.n, f), p.guard);
      orders.count(std::string(to_string(f)), static_cast<std::int64_t>(g.size()));
      if (BigInt(g.size()) != expected)
        orders.fail("|" + std::string(to_string(f)) + "_n| closure disagrees with formula");
    }
    report.checks.push_back(orders);
  }

  // restrict(., m) maps F_n into F_m
  Check tower{"tower-compatibility", true, false, "restrict(F_n) lies in F_m", {}};
  std::mt19937_64 rng(p.seed);
  std::int64_t tested = 0, bad = 0;
  for (Family f : {Family::E, Family::U})
    for (int s = 0; s < 200; ++s) {
      const TreeAut a = random_member(p.d, p.n, f, rng);
      for (int m = 1; m <= p.n; ++m) {
        ++tested;
        if (!is_member(restrict(a, m), f)) ++bad;
      }
    }
  tower.count("restrictions", tested).count("failures", bad);
  if (bad) tower.fail(std::to_string(bad) + " restrictions left the family");
  report.checks.push_back(tower);
  return report;
}

VerificationReport verify_generators_closure(const SuiteParams& p) {
  auto report = make_report("generators-closure", p);
  check_tower_degree(p.d);
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["guard"] = p.guard;
  for (Family f : families_of(p)) {
    Check c{"closure-" + std::string(to_string(f)), true, false, "", {}};
    const BigInt expected = order_of_family(p.d, p.n, f);
    const auto gens = generators_of(p.d, p.n, f);
    c.count("generators", static_cast<std::int64_t>(gens.size())).count("formula", expected);
    for (const auto& g : gens)
      if (!is_member(g, f)) c.fail("generator " + describe(g) + " is not a member");
    if (!order_fits(expected, p.guard)) {
      c.skipped = true;
      c.details = "order exceeds guard " + std::to_string(p.guard);
    } else {
      const ElementSet g = closure(gens, p.guard);
      c.count("closure", static_cast<std::int64_t>(g.size()));
      c.details = "closure size equals order formula";
      if (BigInt(g.size()) != expected) c.fail("closure size differs from formula");
    }
    report.checks.push_back(c);
  }
  return report;
}

VerificationReport verify_w_lemmas(const SuiteParams& p) {
  auto report = make_report("w-lemmas", p);
  check_tower_degree(p.d);
  if (p.max_n < 1) throw Error(ErrorKind::InvalidParameter, "max-n must be >= 1");
  report.parameters["d"] = p.d;
  report.parameters["max_n"] = p.max_n;
  Check order2{"order-2", true, false, "w_i restricted to T_n has order 2 (i <= n)", {}};
  Check commute{"commutation", true, false, "w_i w_j = w_j w_i", {}};
  Check outside{"not-in-G", true, false,
                "w_i restricted to T_n is not in G_n for i within the coset vector length", {}};
  Check boundary{"boundary-members", true, false,
                 "for E, w_n restricted to T_n lies in E_n iff n = 1 or d is even", {}};
  Check inside{"in-normalizer-tower", true, false, "w_i restricted to T_n is in the tower", {}};
  std::int64_t n_order = 0, n_comm = 0, n_out = 0, n_in = 0, n_boundary = 0, n_boundary_members = 0;
  for (int n = 1; n <= p.max_n; ++n) {
    std::vector<TreeAut> w;
    for (int i = 1; i <= n; ++i) w.push_back(w_generator(i, p.d, n));
    for (int i = 1; i <= n; ++i) {
      const TreeAut& wi = w[static_cast<std::size_t>(i - 1)];
      const std::string at = "w_" + std::to_string(i) + " at level " + std::to_string(n);
      ++n_order;
      if (order_of(wi, 4) != 2) order2.fail(at);
      for (int j = 1; j <= n; ++j) {
        ++n_comm;
        const TreeAut& wj = w[static_cast<std::size_t>(j - 1)];
        if (compose(wi, wj) != compose(wj, wi)) commute.fail("w_" + std::to_string(j) + " with " + at);
      }
      for (Family f : families_of(p)) {
        const std::string tag = std::string(to_string(f));
        ++n_in;
        if (!in_normalizer_tower(wi, f)) inside.fail(at + " for " + tag);
        const bool member = is_member(wi, f);
        if (static_cast<std::size_t>(i) <= coset_vector_length(f, n)) {
          ++n_out;
          if (member) outside.fail(at + " lies in " + tag);
        } else {
          // only E at i = n falls outside the coset vector range
          ++n_boundary;
          n_boundary_members += member;
          const bool predicted = n == 1 || p.d % 2 == 0;
          if (member != predicted) boundary.fail(at + (member ? " lies in " : " avoids ") + tag);
        }
      }
    }
  }
  order2.count("elements", n_order);
  commute.count("pairs", n_comm);
  outside.count("tests", n_out);
  boundary.count("tests", n_boundary).count("members", n_boundary_members);
  if (n_boundary == 0) boundary.skipped = true;
  inside.count("tests", n_in);
  report.checks = {order2, commute, outside, boundary, inside};
  return report;
}

VerificationReport verify_phi_bijectivity(const SuiteParams& p) {
  auto report = make_report("phi-bijectivity", p);
  check_tower_degree(p.d);
  if (p.n < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  const std::int64_t samples = samples_or(p, 1000);
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["samples"] = samples;
  std::mt19937_64 rng(p.seed);
  for (Family f : families_of(p)) {
    const std::string tag = std::string(to_string(f));
    Check round{"round-trip-" + tag, true, false, "decompose(representative(v)) = v", {}};
    Check distinct{"distinct-cosets-" + tag, true, false,
                   "representative(v) representative(v')^-1 not in G for v != v'", {}};
    Check injective{"injectivity-" + tag, true, false, "representative(v) not in G for v != 0", {}};
    Check noise{"noise-round-trip-" + tag, true, false,
                "representative(v) g decomposes to v and stays in its coset", {}};
    std::int64_t vectors = 0, pairs = 0, noisy = 0;
    for (int m = 1; m <= p.n; ++m) {
      const std::size_t len = coset_vector_length(f, m);
      if (len > 20) throw Error(ErrorKind::GuardExceeded, "too many coset vectors");
      const std::uint64_t count = std::uint64_t{1} << len;
      std::vector<TreeAut> reps;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const CosetVector v = vector_from_index(f, p.d, m, idx);
        reps.push_back(phi_representative(v));
        ++vectors;
        const auto back = coset_decompose(reps.back(), f);
        if (!back || *back != v) round.fail("vector " + to_string(v));
        if (idx != 0 && is_member(reps.back(), f)) injective.fail("vector " + to_string(v));
        for (std::int64_t s = 0; s < samples; ++s) {
          ++noisy;
          const TreeAut g = random_member(p.d, m, f, rng);
          const TreeAut a = (s % 2 == 0) ? compose(reps.back(), g) : compose(g, reps.back());
          const auto got = coset_decompose(a, f);
          if (!got || *got != v) {
            noise.fail("vector " + to_string(v) + " with noise " + describe(g));
            continue;
          }
          if (!is_member(compose(inverse(phi_representative(*got)), a), f))
            noise.fail("representative of " + to_string(v) + " misses the coset");
        }
      }
      for (std::uint64_t i = 0; i < count; ++i)
        for (std::uint64_t j = 0; j < count; ++j) {
          if (i == j) continue;
          ++pairs;
          if (is_member(compose(reps[i], inverse(reps[j])), f))
            distinct.fail("vectors " + std::to_string(i) + " and " + std::to_string(j) +
                          " at level " + std::to_string(m));
        }
    }
    round.count("vectors", vectors);
    injective.count("vectors", vectors);
    distinct.count("pairs", pairs);
    noise.count("samples", noisy);
    for (Check* c : {&round, &distinct, &injective, &noise}) report.checks.push_back(*c);
  }
  return report;
}

VerificationReport verify_normalizer_oracle(const SuiteParams& p) {
  auto report = make_report("normalizer-oracle", p);
  check_tower_degree(p.d);
  if (p.n < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["guard"] = p.guard;
  const BigInt w_order = order_of_family(p.d, p.n, Family::W);
  const bool exhaustive = order_fits(w_order, p.guard);
  std::optional<ElementSet> ambient;
  if (exhaustive) ambient = enumerate_level(p.d, p.n, p.guard);
  std::mt19937_64 rng(p.seed);
  for (Family f : families_of(p)) {
    const std::string tag = std::string(to_string(f));
    Check c{"oracle-agreement-" + tag, true, false, "", {}};
    const BigInt g_order = order_of_family(p.d, p.n, f);
    if (!order_fits(g_order, p.guard)) {
      c.skipped = true;
      c.details = tag + "_n exceeds guard " + std::to_string(p.guard);
      report.checks.push_back(c);
      continue;
    }
    const auto gens = generators_of(p.d, p.n, f);
    const ElementSet group = closure(gens, p.guard);
    c.count("group", static_cast<std::int64_t>(group.size()));
    if (BigInt(group.size()) != g_order) c.fail("closure of generators is not the whole group");
    const BigInt expected = g_order * (BigInt(1) << coset_vector_length(f, p.n));
    if (exhaustive) {
      const ElementSet normalizer = bruteforce_normalizer(group, gens, *ambient);
      std::int64_t mismatches = 0, tower = 0;
      for (const auto& key : ambient->keys()) {
        const TreeAut x = ambient->codec().decode(key);
        const bool t = in_normalizer_tower(x, f);
        tower += t;
        if (t != std::binary_search(normalizer.keys().begin(), normalizer.keys().end(), key))
          ++mismatches;
      }
      c.details = "brute-force normalizer over all of W_n vs coset decomposition";
      c.count("ambient", static_cast<std::int64_t>(ambient->size()))
          .count("normalizer", static_cast<std::int64_t>(normalizer.size()))
          .count("tower", tower)
          .count("expected", expected)
          .count("mismatches", mismatches);
      if (mismatches) c.fail(std::to_string(mismatches) + " verdicts differ");
      if (BigInt(normalizer.size()) != expected) c.fail("normalizer size is not |G_n| 2^m");
    } else {
      const std::int64_t samples = samples_or(p, 10000);
      std::vector<TreeAut> xs;
      for (std::int64_t s = 0; s < samples; ++s) xs.push_back(random_member(p.d, p.n, Family::W, rng));
      const std::int64_t extra = samples / 10;
      for (std::int64_t s = 0; s < extra; ++s) xs.push_back(random_tower_element(p.d, p.n, f, rng));
      const auto brute = bruteforce_normalizer_verdicts(group, gens, xs);
      std::int64_t mismatches = 0, positives = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const bool t = in_normalizer_tower(xs[k], f);
        positives += t;
        if (t != brute[k]) ++mismatches;
      }
      c.details = "generator-conjugation verdicts on random W_n samples plus tower samples";
      c.count("uniform_samples", samples)
          .count("tower_samples", extra)
          .count("positives", positives)
          .count("mismatches", mismatches);
      if (mismatches) c.fail(std::to_string(mismatches) + " verdicts differ");
    }
    report.checks.push_back(c);
  }
  return report;
}

VerificationReport verify_prop_components(const SuiteParams& p) {
  auto report = make_report("prop-components", p);
  check_tower_degree(p.d);
  if (p.n < 2) throw Error(ErrorKind::InvalidParameter, "component checks need level >= 2");
  const std::int64_t samples = samples_or(p, 1000);
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["samples"] = samples;
  std::mt19937_64 rng(p.seed);
  for (Family f : families_of(p)) {
    const std::string tag = std::string(to_string(f));
    Check pos{"components-" + tag, true, false,
              "children in the tower and x_i x_j^-1 in G for tower elements", {}};
    Check neg{"negative-control-" + tag, true, false,
              "multiplying one child by w_1 breaks x_i x_j^-1 in G", {}};
    std::int64_t bad = 0, caught = 0, controls = 0;
    const TreeAut w1 = w_generator(1, p.d, p.n - 1);
    // w_1 is in E_1, so corrupting a level-1 child is not a corruption.
    const bool control_applies = !(f == Family::E && p.n == 2);
    for (std::int64_t s = 0; s < samples; ++s) {
      const TreeAut a = random_tower_element(p.d, p.n, f, rng);
      const ComponentReport r = component_checks(a, f);
      if (!r.in_tower || !r.passed()) ++bad;
      if (!control_applies) continue;
      auto kids = children_of(a);
      const int victim = static_cast<int>(rng() % static_cast<std::uint64_t>(p.d));
      kids[static_cast<std::size_t>(victim)] = compose(kids[static_cast<std::size_t>(victim)], w1);
      ++controls;
      if (!component_checks(TreeAut::assemble(kids, a.root()), f).quotients_in_group) ++caught;
    }
    pos.count("samples", samples).count("failures", bad);
    if (bad) pos.fail(std::to_string(bad) + " tower elements failed");
    neg.count("controls", controls).count("detected", caught);
    if (!control_applies) {
      neg.skipped = true;
      neg.details = "not applicable: w_1 lies in E_1";
    } else if (caught != controls) {
      neg.fail(std::to_string(controls - caught) + " corrupted elements passed check (2)");
    }
    report.checks.push_back(pos);
    report.checks.push_back(neg);
  }
  return report;
}

namespace {

Check fixed_point_check(int max_m) {
  Check c{"shift-fixed-points", true, false,
          "only the constant vectors are invariant under the shift", {}};
  std::int64_t vectors = 0;
  for (int m = 1; m <= max_m; ++m) {
    std::int64_t invariant = 0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) bits[static_cast<std::size_t>(j)] = (idx >> (m - 1 - j)) & 1u;
      ++vectors;
      if (shift_bits(bits) != bits) continue;
      ++invariant;
      const bool constant = idx == 0 || idx == (std::uint64_t{1} << m) - 1;
      if (!constant) c.fail("non-constant invariant vector at length " + std::to_string(m));
    }
    if (invariant != 2) c.fail(std::to_string(invariant) + " invariant vectors at length " + std::to_string(m));
  }
  c.count("max_m", max_m).count("vectors", vectors);
  return c;
}

} // namespace

VerificationReport verify_shift_identity(const SuiteParams& p) {
  auto report = make_report("shift-identity", p);
  check_tower_degree(p.d);
  const std::int64_t samples = samples_or(p, 1000);
  report.parameters["d"] = p.d;
  report.parameters["n"] = p.n;
  report.parameters["samples"] = samples;
  report.parameters["max_m"] = p.max_m;
  std::mt19937_64 rng(p.seed);
  for (Family f : families_of(p)) {
    const std::string tag = std::string(to_string(f));
    Check c{"shift-" + tag, true, false,
            "child 0 of w_1^-k1 a decomposes to (k_2, k_3, ...)", {}};
    const int min_level = f == Family::E ? 3 : 2;
    if (p.n < min_level) {
      c.skipped = true;
      c.details = "needs level >= " + std::to_string(min_level);
      report.checks.push_back(c);
      continue;
    }
    std::int64_t bad = 0;
    for (std::int64_t s = 0; s < samples; ++s)
      if (!shift_check(random_tower_element(p.d, p.n, f, rng), f)) ++bad;
    c.count("samples", samples).count("failures", bad);
    if (bad) c.fail(std::to_string(bad) + " elements failed");
    report.checks.push_back(c);
  }
  report.checks.push_back(fixed_point_check(p.max_m));
  return report;
}

VerificationReport verify_fixed_points(const SuiteParams& p) {
  auto report = make_report("fixed-points", p);
  if (p.max_m < 1 || p.max_m > 24) throw Error(ErrorKind::InvalidParameter, "max-m must be in [1, 24]");
  report.parameters["max_m"] = p.max_m;
  report.checks.push_back(fixed_point_check(p.max_m));
  return report;
}

VerificationReport verify_liu_osserman(const SuiteParams& p) {
  auto report = make_report("liu-osserman", p);
  if (p.max_d < 3 || p.max_d > kDefaultTripleSearchBound)
    throw Error(ErrorKind::InvalidParameter, "max-d must be in [3, 9]");
  report.parameters["max_d"] = p.max_d;
  Check triples{"triple-invariants", true, false, "single cycles, product identity, transitive", {}};
  Check groups{"level-1-groups", true, false,
               "<sigma0, sigma1> is A_d iff all e_i odd, S_d otherwise", {}};
  Check labels{"family-labels", true, false, "level-1 group and geometric family agree", {}};
  std::int64_t types = 0, alternating = 0;
  for (int d = 3; d <= p.max_d; ++d) {
    BigInt fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    for (const auto& t : enumerate_types(d)) {
      ++types;
      const MonodromyTriple m = monodromy_triple(t);
      if (!satisfies_triple_invariants(t, m)) triples.fail(to_string(t));
      const ElementSet g = closure_of_perms({m.sigma0, m.sigma1}, p.guard);
      bool all_even = true;
      for (const auto& a : g.elements()) all_even = all_even && a.root().sign() == 1;
      const bool is_alt = BigInt(g.size()) * 2 == fact && all_even;
      const bool is_sym = BigInt(g.size()) == fact;
      const bool want_alt = level1_group(t) == Level1Group::Alternating;
      alternating += want_alt;
      if (want_alt ? !is_alt : !is_sym)
        groups.fail(to_string(t) + " generates a group of order " + std::to_string(g.size()));
      if ((geometric_family(t) == Family::U) != want_alt) labels.fail(to_string(t));
    }
  }
  triples.count("types", types);
  groups.count("types", types).count("alternating", alternating).count("symmetric", types - alternating);
  labels.count("types", types);
  report.checks = {triples, groups, labels};
  return report;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "relations",     "sgn2-hom",         "subgroup-orders", "generators-closure",
      "w-lemmas",      "phi-bijectivity",  "normalizer-oracle", "prop-components",
      "shift-identity", "liu-osserman",    "fixed-points"};
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteParams& params) {
  static const std::map<std::string, std::function<VerificationReport(const SuiteParams&)>, std::less<>>
      suites = {
          {"relations", verify_relations},
          {"sgn2-hom", verify_sgn2_hom},
          {"subgroup-orders", verify_subgroup_orders},
          {"generators-closure", verify_generators_closure},
          {"w-lemmas", verify_w_lemmas},
          {"phi-bijectivity", verify_phi_bijectivity},
          {"normalizer-oracle", verify_normalizer_oracle},
          {"prop-components", verify_prop_components},
          {"shift-identity", verify_shift_identity},
          {"liu-osserman", verify_liu_osserman},
          {"fixed-points", verify_fixed_points},
      };
  const auto it = suites.find(name);
  if (it == suites.end())
    throw Error(ErrorKind::InvalidParameter, "unknown suite '" + std::string(name) + "'");
  const auto start = Clock::now();
  VerificationReport report = it->second(params);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

} // namespace wreath
