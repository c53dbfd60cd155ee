#include "wreath/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/belyi.hpp"
#include "wreath/errors.hpp"
#include "wreath/normalizer.hpp"
#include "wreath/verify.hpp"

namespace wreath::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  int d = 3;
  int n = 2;
  std::string family;
  std::uint64_t seed = 0;
  std::int64_t samples = -1;
  std::uint64_t guard = kDefaultGuard;
  bool json = false;
  bool strict = false;
  int max_n = 6;
  int max_d = 7;
  int max_m = 12;
};

// Query output: a report with one check plus a free-form result.
struct Outcome {
  VerificationReport report;
  json result;          // null for verify suites
  std::string text;     // human rendering of the result
  bool negative = false; // "not a member" / "not in tower" style answer
};

Family require_family(const Options& o) {
  if (o.family.empty()) throw Error(ErrorKind::InvalidParameter, "--family is required");
  return parse_family(o.family);
}

json base_parameters(const Options& o, bool with_family) {
  json p;
  p["d"] = o.d;
  p["n"] = o.n;
  if (with_family && !o.family.empty()) p["family"] = std::string(to_string(parse_family(o.family)));
  return p;
}

Outcome query(std::string command, json parameters, json result, std::string text,
              bool negative = false, bool passed = true, std::string details = {}) {
  Outcome out;
  out.report.command = std::move(command);
  out.report.parameters = std::move(parameters);
  Check c{out.report.command, passed, false, std::move(details), {}};
  out.report.checks.push_back(std::move(c));
  out.result = std::move(result);
  out.text = std::move(text);
  out.negative = negative;
  return out;
}

json bits_json(const CosetVector& v) {
  json a = json::array();
  for (auto b : v.bits) a.push_back(static_cast<int>(b));
  return a;
}

std::string bits_text(const CosetVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.bits.size(); ++i) s += (i ? "," : "") + std::to_string(v.bits[i]);
  return s + ")";
}

json perm_json(const Perm& p) { return p.to_string(); }

void add_globals(CLI::App* app, Options& o) {
  app->add_option("--d", o.d, "tree degree");
  app->add_option("--n", o.n, "truncation level");
  app->add_option("--family", o.family, "subgroup family: E, U or W");
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--samples", o.samples, "number of random samples");
  app->add_option("--guard", o.guard, "size limit for enumerations and closures");
  app->add_flag("--json", o.json, "JSON output");
  app->add_flag("--strict", o.strict, "exit 1 on negative query results");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"automorphisms of finite rooted regular trees", "wreath"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome()> action;

  std::vector<std::string> literals;
  std::string single;
  std::string word, type_text, rational_text, suite;
  int m = 1;
  int bound = 1 << 20;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_globals(sub, o);
    return sub;
  };
  auto elem = [&](std::size_t i) { return parse_aut(o.d, o.n, literals.at(i)); };
  auto one = [&] { return parse_aut(o.d, o.n, single); };

  // aut ---------------------------------------------------------------------
  CLI::App* aut = app.add_subcommand("aut", "arithmetic on portraits")->require_subcommand(1);
  {
    auto* mul = leaf(aut, "mul", "product a b ... (rightmost acts first)");
    mul->add_option("elements", literals, "element literals")->required()->expected(1, -1);
    mul->callback([&] {
      action = [&] {
        TreeAut acc = elem(0);
        for (std::size_t i = 1; i < literals.size(); ++i) acc = compose(acc, elem(i));
        const std::string s = to_string(acc);
        return query("aut mul", base_parameters(o, false), s, s);
      };
    });
    auto* inv = leaf(aut, "inv", "inverse");
    inv->add_option("element", single, "element literal")->required();
    inv->callback([&] {
      action = [&] {
        const std::string s = to_string(inverse(one()));
        return query("aut inv", base_parameters(o, false), s, s);
      };
    });
    auto* res = leaf(aut, "restrict", "restriction to T_m");
    res->add_option("element", single, "element literal")->required();
    res->add_option("--m", m, "target level")->required();
    res->callback([&] {
      action = [&] {
        json p = base_parameters(o, false);
        p["m"] = m;
        const std::string s = to_string(restrict(one(), m));
        return query("aut restrict", p, s, s);
      };
    });
    auto* act = leaf(aut, "act", "image of a vertex word");
    act->add_option("element", single, "element literal")->required();
    act->add_option("word", word, "vertex word such as 0.2.1 or e")->required();
    act->callback([&] {
      action = [&] {
        const std::string s = to_string(act_on_word(one(), parse_word(o.d, word)));
        return query("aut act", base_parameters(o, false), s, s);
      };
    });
    auto* sg = leaf(aut, "sgn2", "level-2 sign character");
    sg->add_option("element", single, "element literal")->required();
    sg->callback([&] {
      action = [&] {
        const int s = sgn2(one());
        return query("aut sgn2", base_parameters(o, false), s, std::to_string(s));
      };
    });
    auto* ord = leaf(aut, "order", "element order");
    ord->add_option("element", single, "element literal")->required();
    ord->add_option("--bound", bound, "search bound");
    ord->callback([&] {
      action = [&] {
        const auto k = order_of(one(), bound);
        if (!k) throw Error(ErrorKind::SearchBoundExceeded, "order exceeds bound " + std::to_string(bound));
        return query("aut order", base_parameters(o, false), *k, std::to_string(*k));
      };
    });
  }

  // group -------------------------------------------------------------------
  CLI::App* group = app.add_subcommand("group", "subgroup towers E, U, W")->require_subcommand(1);
  {
    auto* mem = leaf(group, "member", "membership in F_n");
    mem->add_option("element", single, "element literal")->required();
    mem->callback([&] {
      action = [&] {
        const Family f = require_family(o);
        const bool yes = is_member(one(), f);
        return query("group member", base_parameters(o, true), yes, yes ? "member" : "not a member", !yes);
      };
    });
    auto* ord = leaf(group, "order", "order of F_n");
    ord->callback([&] {
      action = [&] {
        const BigInt k = order_of_family(o.d, o.n, require_family(o));
        return query("group order", base_parameters(o, true), k.str(), k.str());
      };
    });
    auto* gens = leaf(group, "gens", "generators of F_n");
    gens->callback([&] {
      action = [&] {
        json a = json::array();
        std::string text;
        for (const auto& g : generators_of(o.d, o.n, require_family(o))) {
          a.push_back(to_string(g));
          text += to_string(g) + "\n";
        }
        if (!text.empty()) text.pop_back();
        return query("group gens", base_parameters(o, true), a, text);
      };
    });
  }

  // norm --------------------------------------------------------------------
  CLI::App* norm = app.add_subcommand("norm", "normalizer tower")->require_subcommand(1);
  {
    auto* dec = leaf(norm, "decompose", "coset vector of an element");
    dec->add_option("element", single, "element literal")->required();
    dec->callback([&] {
      action = [&] {
        const auto v = coset_decompose(one(), require_family(o));
        if (!v) return query("norm decompose", base_parameters(o, true), nullptr, "not in tower", true);
        json r;
        r["vector"] = bits_json(*v);
        r["literal"] = to_string(*v);
        return query("norm decompose", base_parameters(o, true), r, bits_text(*v));
      };
    });
    auto* mem = leaf(norm, "member", "membership in the normalizer tower");
    mem->add_option("element", single, "element literal")->required();
    mem->callback([&] {
      action = [&] {
        const bool yes = in_normalizer_tower(one(), require_family(o));
        return query("norm member", base_parameters(o, true), yes, yes ? "in tower" : "not in tower", !yes);
      };
    });
    auto* comp = leaf(norm, "components", "child checks (1) and (2)");
    comp->add_option("element", single, "element literal")->required();
    comp->callback([&] {
      action = [&] {
        const ComponentReport r = component_checks(one(), require_family(o));
        json j;
        j["in_tower"] = r.in_tower;
        j["children_in_tower"] = r.children_in_tower;
        j["quotients_in_group"] = r.quotients_in_group;
        j["failing_children"] = r.failing_children;
        j["failing_pairs"] = json::array();
        for (auto [a, b] : r.failing_pairs) j["failing_pairs"].push_back({a, b});
        std::ostringstream t;
        t << "in tower: " << (r.in_tower ? "yes" : "no") << "\n"
          << "children in tower: " << (r.children_in_tower ? "yes" : "no") << "\n"
          << "child quotients in group: " << (r.quotients_in_group ? "yes" : "no");
        return query("norm components", base_parameters(o, true), j, t.str(), !r.in_tower, r.passed());
      };
    });
    auto* sh = leaf(norm, "shift", "shift identity on one element");
    sh->add_option("element", single, "element literal")->required();
    sh->callback([&] {
      action = [&] {
        const Family f = require_family(o);
        const TreeAut a = one();
        if (!in_normalizer_tower(a, f))
          return query("norm shift", base_parameters(o, true), nullptr, "not in tower", true);
        const ShiftResult r = shift_details(a, f);
        json j;
        j["vector"] = bits_json(r.vector);
        j["child_vector"] = bits_json(r.child_vector);
        j["passed"] = r.passed;
        const std::string t = "vector " + bits_text(r.vector) + ", child vector " + bits_text(r.child_vector) +
                              (r.passed ? ", shift identity holds" : ", shift identity FAILS");
        return query("norm shift", base_parameters(o, true), j, t, false, r.passed);
      };
    });
  }

  // belyi -------------------------------------------------------------------
  CLI::App* belyi = app.add_subcommand("belyi", "combinatorial types")->require_subcommand(1);
  auto type_params = [&] {
    json p;
    p["type"] = type_text;
    return p;
  };
  {
    auto* val = leaf(belyi, "validate", "check a type d:e1,e2,e3");
    val->add_option("type", type_text)->required();
    val->callback([&] {
      action = [&] {
        const auto t = parse_type(type_text);
        return query("belyi validate", type_params(), to_string(t), "valid " + to_string(t));
      };
    });
    auto* tri = leaf(belyi, "triple", "canonical monodromy triple");
    tri->add_option("type", type_text)->required();
    tri->callback([&] {
      action = [&] {
        const auto t = parse_type(type_text);
        const auto mt = monodromy_triple(t);
        json j;
        j["sigma0"] = perm_json(mt.sigma0);
        j["sigma1"] = perm_json(mt.sigma1);
        j["sigma_inf"] = perm_json(mt.sigma_inf);
        const std::string text = "sigma0 = " + mt.sigma0.to_string() + "\nsigma1 = " + mt.sigma1.to_string() +
                                 "\nsigma_inf = " + mt.sigma_inf.to_string();
        return query("belyi triple", type_params(), j, text);
      };
    });
    auto* cls = leaf(belyi, "classify", "level-1 group and family");
    cls->add_option("type", type_text)->required();
    cls->callback([&] {
      action = [&] {
        const auto t = parse_type(type_text);
        json j;
        j["family"] = std::string(to_string(geometric_family(t)));
        j["level1_group"] = std::string(to_string(level1_group(t)));
        const std::string text = "family " + j["family"].get<std::string>() + ", level-1 " +
                                 j["level1_group"].get<std::string>();
        return query("belyi classify", type_params(), j, text);
      };
    });
    auto* quo = leaf(belyi, "quotient", "arithmetic quotient for a parameter u");
    quo->add_option("type", type_text)->required();
    quo->add_option("u", rational_text, "rational p/q")->required();
    quo->callback([&] {
      action = [&] {
        const auto t = parse_type(type_text);
        const Rational u = parse_rational(rational_text);
        const QuotientResult r = arithmetic_quotient(t, u);
        json p = type_params();
        p["u"] = to_string(u);
        json j;
        j["order"] = r.order;
        j["field"] = r.field_label;
        j["squarefree"] = r.squarefree.str();
        j["discriminant_exponents"] = {r.discriminant_exponents.first, r.discriminant_exponents.second};
        const std::string text = "order " + std::to_string(r.order) + ", field " + r.field_label +
                                 ", exponents (" + std::to_string(r.discriminant_exponents.first) + ", " +
                                 std::to_string(r.discriminant_exponents.second) + ")";
        return query("belyi quotient", p, j, text);
      };
    });
  }

  // verify ------------------------------------------------------------------
  {
    auto* ver = leaf(&app, "verify", "run a named verification suite");
    ver->add_option("suite", suite, "suite name")->required();
    ver->add_option("--max-n", o.max_n, "largest level");
    ver->add_option("--max-d", o.max_d, "largest degree");
    ver->add_option("--max-m,--m", o.max_m, "largest vector length");
    ver->callback([&] {
      action = [&] {
        SuiteParams sp;
        sp.d = o.d;
        sp.n = o.n;
        sp.max_n = o.max_n;
        sp.max_d = o.max_d;
        sp.max_m = o.max_m;
        if (!o.family.empty()) sp.family = parse_family(o.family);
        sp.seed = o.seed;
        if (o.samples >= 0) sp.samples = o.samples;
        sp.guard = o.guard;
        Outcome out;
        out.report = run_suite(suite, sp);
        return out;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }

  Outcome result;
  const auto start = std::chrono::steady_clock::now();
  try {
    result = action();
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  }
  if (result.report.elapsed_ms == 0)
    result.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
  result.report.seed = o.seed;

  const bool is_query = result.report.command.rfind("verify", 0) != 0;
  if (is_query && o.strict && result.negative) {
    result.report.checks.front().fail("negative result under --strict");
  }
  if (o.json) {
    json j = result.report.to_json();
    if (is_query) {
      json ordered;
      for (auto it = j.begin(); it != j.end(); ++it) {
        ordered[it.key()] = it.value();
        if (it.key() == "parameters") ordered["result"] = result.result;
      }
      j = std::move(ordered);
    }
    out << j.dump(2) << "\n";
  } else if (is_query) {
    out << result.text << "\n";
  } else {
    out << result.report.to_text();
  }
  return result.report.passed() ? 0 : 1;
}

} // namespace wreath::cli
