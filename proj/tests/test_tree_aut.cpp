#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "wreath/errors.hpp"
#include "wreath/subgroup_tower.hpp"
#include "wreath/tree_aut.hpp"

using namespace wreath;

namespace {

TreeAut lit(int d, int n, const char* text) { return parse_aut(d, n, text); }

std::vector<TreeAut> kids(const TreeAut& a) {
  std::vector<TreeAut> out;
  for (int i = 0; i < a.degree(); ++i) out.push_back(a.child(i));
  return out;
}

} // namespace

TEST_CASE("basic constructors") {
  const TreeAut id = TreeAut::identity(3, 2);
  CHECK(id.labels().size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(id.label(k).is_identity());
  CHECK(TreeAut::embed(Perm::parse(3, "(0 1)"), 1).root() == Perm::parse(3, "(0 1)"));
  std::vector<TreeAut> c(3, TreeAut::identity(3, 1));
  CHECK(TreeAut::assemble(c, Perm::identity(3)).is_identity());
  CHECK(node_count(3, 4) == 40);
  CHECK(depth_offset(3, 2) == 4);
}

TEST_CASE("action on words") {
  const auto w = [](const char* s) { return parse_word(3, s); };
  CHECK(act_on_word(TreeAut::identity(3, 3), w("021")) == w("021"));
  CHECK(act_on_word(TreeAut::embed(Perm::parse(3, "(0 1)"), 2), w("01")) == w("11"));
  CHECK(act_on_word(lit(3, 2, "((0 1),e,e)"), w("00")) == w("01"));
  CHECK(act_on_word(lit(3, 2, "((0 1),e,e)(0 1)"), w("10")) == w("01"));
}

TEST_CASE("portrait arithmetic matches the leaf-map model") {
  std::mt19937_64 rng(5);
  for (auto [d, n] : {std::pair{2, 5}, {3, 3}, {4, 2}, {5, 2}, {3, 4}}) {
    for (int trial = 0; trial < 40; ++trial) {
      const TreeAut a = random_member(d, n, Family::W, rng), b = random_member(d, n, Family::W, rng);
      const auto la = oracle::from_portrait(a), lb = oracle::from_portrait(b);
      REQUIRE(oracle::from_portrait(compose(a, b)) == oracle::compose(la, lb));
      REQUIRE(oracle::from_portrait(inverse(a)) == oracle::inverse(la));
      REQUIRE(oracle::from_portrait(restrict(a, n - 1)) == oracle::truncate(la, n - 1));
      if (n >= 2) REQUIRE(sgn2(a) == oracle::sgn2(la));
      // a(v) for a random leaf through the word interface
      const long leaf = static_cast<long>(rng() % la.img.size());
      VertexWord v{d, {}};
      for (int t = 0; t < n; ++t) v.letters.push_back(static_cast<int>(leaf / oracle::ipow(d, n - 1 - t) % d));
      const VertexWord img = act_on_word(a, v);
      long idx = 0;
      for (int l : img.letters) idx = idx * d + l;
      REQUIRE(idx == la.img[static_cast<std::size_t>(leaf)]);
    }
  }
}

TEST_CASE("the wreath relations") {
  std::mt19937_64 rng(9);
  const Perm id = Perm::identity(3);
  for (int trial = 0; trial < 300; ++trial) {
    const TreeAut a = random_member(3, 3, Family::W, rng), b = random_member(3, 3, Family::W, rng);
    const auto x = kids(a), y = kids(b);
    std::vector<TreeAut> xy, moved;
    const Perm tau = a.root(), tinv = inverse(tau);
    for (int i = 0; i < 3; ++i) {
      xy.push_back(compose(x[i], y[i]));
      moved.push_back(y[static_cast<std::size_t>(tinv(i))]);
    }
    CHECK(compose(TreeAut::assemble(x, id), TreeAut::assemble(y, id)) == TreeAut::assemble(xy, id));
    CHECK(compose(TreeAut::embed(tau, 3), TreeAut::assemble(y, id)) == TreeAut::assemble(moved, tau));
    CHECK(compose(TreeAut::assemble(x, id), TreeAut::embed(tau, 3)) == a);
    CHECK(TreeAut::assemble(x, tau) == a);
  }
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const TreeAut a = random_member(4, 3, Family::W, rng), b = random_member(4, 3, Family::W, rng),
                  c = random_member(4, 3, Family::W, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(a, TreeAut::identity(4, 3)) == a);
    CHECK(power(a, -3) == inverse(power(a, 3)));
    CHECK(sgn2(compose(a, b)) == sgn2(a) * sgn2(b));
  }
}

TEST_CASE("sgn2 and order examples") {
  CHECK(sgn2(lit(3, 2, "((0 1),e,e)(0 1)")) == 1);
  CHECK(sgn2(TreeAut::embed(Perm::parse(3, "(0 1)"), 2)) == -1);
  CHECK(order_of(TreeAut::identity(3, 2), 10) == 1);
  CHECK(order_of(TreeAut::embed(Perm::parse(3, "(0 1 2)"), 3), 10) == 3);
  CHECK(order_of(lit(3, 2, "((0 1 2),e,e)(0 1)"), 2) == std::nullopt);
  CHECK_THROWS_AS(sgn2(TreeAut::identity(3, 1)), Error);
}

TEST_CASE("literal grammar round trip") {
  CHECK(lit(3, 2, "e").is_identity());
  CHECK(to_string(TreeAut::identity(3, 2)) == "e");
  CHECK(to_string(lit(3, 2, "((0 1),e,e)(0 1)")) == "((0 1),e,e)(0 1)");
  CHECK(to_string(lit(3, 2, "(e,e,e)(0 1 2)")) == "(0 1 2)");
  std::mt19937_64 rng(4);
  for (auto [d, n] : {std::pair{3, 1}, {3, 3}, {4, 2}, {5, 3}})
    for (int trial = 0; trial < 50; ++trial) {
      const TreeAut a = random_member(d, n, Family::W, rng);
      REQUIRE(parse_aut(d, n, to_string(a)) == a);
    }
}

TEST_CASE("literal errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Precondition;  // unreachable in these cases
  };
  CHECK(kind_of([] { parse_aut(3, 2, "(e,e)"); }) == ErrorKind::ArityMismatch);
  CHECK(kind_of([] { parse_aut(3, 1, "((0 1),e,e)"); }) == ErrorKind::LevelMismatch);
  CHECK(kind_of([] { parse_aut(3, 2, "((0 1),e,e"); }) == ErrorKind::Syntax);
  CHECK(kind_of([] { parse_aut(3, 2, "(0 3)"); }) == ErrorKind::OutOfRange);
  try {
    parse_aut(3, 2, "((0 1),e,#)");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("hashing") {
  std::mt19937_64 rng(6);
  std::unordered_set<TreeAut> seen;
  for (int i = 0; i < 3000; ++i) seen.insert(random_member(3, 1, Family::W, rng));
  CHECK(seen.size() == 6);
}
