#include "wreath/subgroup_tower.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wreath/errors.hpp"

namespace wreath {

std::string_view to_string(Family f) {
  switch (f) {
  case Family::E: return "E";
  case Family::U: return "U";
  case Family::W: return "W";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'E': return Family::E;
    case 'U': return Family::U;
    case 'W': return Family::W;
    default: break;
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown group family '" + std::string(text) + "'");
}

void check_tower_degree(int degree) {
  check_degree(degree);
  if (degree < 3)
    throw Error(ErrorKind::DegreeTooSmall, "subgroup towers need degree >= 3, got " +
                                               std::to_string(degree));
}

bool is_member(const TreeAut& a, Family family) {
  check_tower_degree(a.degree());
  const auto labels = a.labels();
  switch (family) {
  case Family::W: return true;
  case Family::U:
    return std::all_of(labels.begin(), labels.end(), [&](const simd::Block& b) {
      return Perm::from_block(a.degree(), b).sign() == 1;
    });
  case Family::E: {
    if (a.level() < 1) throw Error(ErrorKind::Precondition, "E membership needs level >= 1");
    const int d = a.degree();
    std::vector<signed char> sign(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
      sign[k] = static_cast<signed char>(Perm::from_block(d, labels[k]).sign());
    // Every vertex whose subtree has depth >= 2 must lie in ker(sgn2).
    std::size_t width = 1;
    for (int t = 0; t + 2 <= a.level(); ++t) {
      const std::size_t off = depth_offset(d, t);
      const std::size_t next = off + width;
      for (std::size_t p = 0; p < width; ++p) {
        int s = sign[off + p];
        for (int j = 0; j < d; ++j) s *= sign[next + p * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)];
        if (s != 1) return false;
      }
      width *= static_cast<std::size_t>(d);
    }
    return true;
  }
  }
  return false;
}

BigInt order_of_family(int degree, int level, Family family) {
  check_tower_degree(degree);
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  BigInt factorial = 1;
  for (int i = 2; i <= degree; ++i) factorial *= i;
  const auto nodes = static_cast<unsigned>(node_count(degree, level));
  switch (family) {
  case Family::W: return boost::multiprecision::pow(factorial, nodes);
  case Family::U: return boost::multiprecision::pow(factorial / 2, nodes);
  case Family::E: {
    BigInt order = factorial;
    for (int m = 2; m <= level; ++m)
      order = boost::multiprecision::pow(order, static_cast<unsigned>(degree)) * factorial / 2;
    return order;
  }
  }
  return 0;
}

std::vector<Perm> alternating_generators(int degree) {
  std::vector<Perm> out;
  for (int i = 2; i < degree; ++i) out.push_back(Perm::from_cycles(degree, {{0, 1, i}}));
  return out;
}

std::vector<TreeAut> generators_of(int degree, int level, Family family) {
  check_tower_degree(degree);
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  const Perm transposition = Perm::from_cycles(degree, {{0, 1}});
  std::vector<TreeAut> gens;
  for (const Perm& p : alternating_generators(degree)) gens.push_back(TreeAut::embed(p, level));
  if (family == Family::W || (family == Family::E && level == 1))
    gens.push_back(TreeAut::embed(transposition, level));
  if (level == 1) return gens;

  const Perm id = Perm::identity(degree);
  std::vector<TreeAut> children(static_cast<std::size_t>(degree), TreeAut::identity(degree, level - 1));
  for (const TreeAut& g : generators_of(degree, level - 1, family)) {
    children[0] = g;
    // In E the first-slot embedding has sgn2 = sign(g root); an odd one is
    // corrected by the root transposition.
    const bool odd = g.root().sign() == -1;
    const Perm root = (family == Family::E && odd) ? transposition : id;
    gens.push_back(TreeAut::assemble(children, root));
  }
  return gens;
}

Perm random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (int i = degree - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(pick(rng))]);
  }
  return Perm::from_images(images);
}

namespace {

Perm random_perm_with_sign(int degree, int sign, std::mt19937_64& rng) {
  Perm p = random_perm(degree, rng);
  if (p.sign() != sign) p = compose(Perm::from_cycles(degree, {{0, 1}}), p);
  return p;
}

} // namespace

TreeAut random_member(int degree, int level, Family family, std::mt19937_64& rng) {
  if (family == Family::W) check_degree(degree);
  else check_tower_degree(degree);
  if (family == Family::E && level < 1)
    throw Error(ErrorKind::Precondition, "E needs level >= 1");
  const std::size_t n = node_count(degree, level);
  std::vector<simd::Block> labels(n);
  switch (family) {
  case Family::W:
    for (auto& b : labels) b = random_perm(degree, rng).block();
    break;
  case Family::U:
    for (auto& b : labels) b = random_perm_with_sign(degree, 1, rng).block();
    break;
  case Family::E: {
    // Leaves-parents are free; every shallower label takes the parity that
    // puts its vertex in ker(sgn2).
    std::vector<int> sign(n, 1);
    const std::size_t last = depth_offset(degree, level - 1);
    for (std::size_t k = last; k < n; ++k) {
      const Perm p = random_perm(degree, rng);
      labels[k] = p.block();
      sign[k] = p.sign();
    }
    for (int t = level - 2; t >= 0; --t) {
      const std::size_t off = depth_offset(degree, t);
      const std::size_t next = depth_offset(degree, t + 1);
      for (std::size_t p = 0; off + p < next; ++p) {
        int s = 1;
        for (int j = 0; j < degree; ++j) s *= sign[next + p * static_cast<std::size_t>(degree) + static_cast<std::size_t>(j)];
        const Perm q = random_perm_with_sign(degree, s, rng);
        labels[off + p] = q.block();
        sign[off + p] = q.sign();
      }
    }
    break;
  }
  }
  return TreeAut::from_labels_unchecked(degree, level, std::move(labels));
}

} // namespace wreath
