#include "wreath/normalizer.hpp"

#include <cctype>

#include "wreath/errors.hpp"

namespace wreath {
namespace {

void check_normalizer_family(Family family) {
  if (family == Family::W)
    throw Error(ErrorKind::InvalidParameter, "normalizer tower is defined for E and U only");
}

void check_normalizer_input(int degree, int level, Family family) {
  check_normalizer_family(family);
  check_tower_degree(degree);
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
}

// prod_{j} w_{j+offset}^{bits[j]} at the given level.
TreeAut w_word(const std::vector<std::uint8_t>& bits, int offset, int degree, int level) {
  TreeAut out = TreeAut::identity(degree, level);
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) out = compose(out, w_generator(static_cast<int>(j) + offset, degree, level));
  return out;
}

std::optional<std::vector<std::uint8_t>> decompose_bits(const TreeAut& a, Family family) {
  const int d = a.degree();
  const int n = a.level();
  if (family == Family::U && n == 1)
    return std::vector<std::uint8_t>{static_cast<std::uint8_t>(a.root().sign() == -1)};
  if (family == Family::E && n == 1) return std::vector<std::uint8_t>{};
  if (family == Family::E && n == 2)
    return std::vector<std::uint8_t>{static_cast<std::uint8_t>(sgn2(a) == -1)};

  auto tail = decompose_bits(a.child(0), family);
  if (!tail) return std::nullopt;
  for (int j = 1; j < d; ++j) {
    auto other = decompose_bits(a.child(j), family);
    if (!other || *other != *tail) return std::nullopt;
  }
  // The diagonal part prod w_{j+1}^{v_j} has identity root, so the remaining
  // bit is read off the parity functional of G.
  const TreeAut diagonal = w_word(*tail, 2, d, n);
  std::uint8_t k = 0;
  if (family == Family::U)
    k = a.root().sign() == -1;
  else
    k = sgn2(restrict(compose(a, inverse(diagonal)), 2)) == -1;

  TreeAut representative = k ? compose(w_generator(1, d, n), diagonal) : diagonal;
  if (!is_member(compose(a, inverse(representative)), family)) return std::nullopt;

  std::vector<std::uint8_t> bits;
  bits.reserve(tail->size() + 1);
  bits.push_back(k);
  bits.insert(bits.end(), tail->begin(), tail->end());
  return bits;
}

} // namespace

std::size_t coset_vector_length(Family family, int level) {
  check_normalizer_family(family);
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  return family == Family::E ? static_cast<std::size_t>(level - 1) : static_cast<std::size_t>(level);
}

CosetVector zero_vector(Family family, int degree, int level) {
  check_normalizer_input(degree, level, family);
  return CosetVector{family, degree, level,
                     std::vector<std::uint8_t>(coset_vector_length(family, level), 0)};
}

CosetVector vector_from_index(Family family, int degree, int level, std::uint64_t index) {
  CosetVector v = zero_vector(family, degree, level);
  const std::size_t m = v.bits.size();
  if (m < 64 && index >> m)
    throw Error(ErrorKind::OutOfRange, "index does not fit in " + std::to_string(m) + " bits");
  for (std::size_t j = 0; j < m; ++j) v.bits[j] = (index >> (m - 1 - j)) & 1u;
  return v;
}

CosetVector operator^(const CosetVector& a, const CosetVector& b) {
  if (a.family != b.family || a.degree != b.degree || a.level != b.level)
    throw Error(ErrorKind::InvalidParameter, "coset vectors of different shape");
  CosetVector out = a;
  for (std::size_t j = 0; j < out.bits.size(); ++j) out.bits[j] ^= b.bits[j];
  return out;
}

std::string to_string(const CosetVector& v) {
  std::string s = std::string(to_string(v.family)) + ":" + std::to_string(v.degree) + ":" +
                  std::to_string(v.level) + ":";
  for (auto b : v.bits) s += b ? '1' : '0';
  return s;
}

CosetVector parse_coset_vector(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4) throw SyntaxError(0, "expected family:degree:level:bits");
  auto parse_int = [&](std::string_view s, std::size_t where) {
    if (s.empty() || s.size() > 6) throw SyntaxError(where, "expected integer");
    int value = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw SyntaxError(where, "expected integer");
      value = value * 10 + (c - '0');
    }
    return value;
  };
  const Family family = parse_family(parts[0]);
  const int degree = parse_int(parts[1], parts[0].size() + 1);
  const int level = parse_int(parts[2], parts[0].size() + parts[1].size() + 2);
  CosetVector v = zero_vector(family, degree, level);
  const std::size_t bits_at = text.size() - parts[3].size();
  if (parts[3].size() != v.bits.size())
    throw Error(ErrorKind::InvalidParameter,
                "family " + std::string(parts[0]) + " at level " + std::to_string(level) +
                    " needs " + std::to_string(v.bits.size()) + " bits, got " +
                    std::to_string(parts[3].size()));
  for (std::size_t j = 0; j < parts[3].size(); ++j) {
    const char c = parts[3][j];
    if (c != '0' && c != '1') throw SyntaxError(bits_at + j, "bits must be 0 or 1");
    v.bits[j] = c == '1';
  }
  return v;
}

TreeAut w_generator(int i, int degree, int level) {
  if (i < 1) throw Error(ErrorKind::InvalidParameter, "w index must be >= 1");
  check_tower_degree(degree);
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "level must be >= 1");
  std::vector<simd::Block> labels(node_count(degree, level), simd::identity_block());
  if (i <= level) {
    const simd::Block sigma = Perm::from_cycles(degree, {{0, 1}}).block();
    const std::size_t begin = depth_offset(degree, i - 1);
    const std::size_t end = depth_offset(degree, i);
    for (std::size_t k = begin; k < end; ++k) labels[k] = sigma;
  }
  return TreeAut::from_labels_unchecked(degree, level, std::move(labels));
}

TreeAut phi_representative(const CosetVector& v) {
  check_normalizer_input(v.degree, v.level, v.family);
  if (v.bits.size() != coset_vector_length(v.family, v.level))
    throw Error(ErrorKind::InvalidParameter, "coset vector length does not match family and level");
  return w_word(v.bits, 1, v.degree, v.level);
}

std::optional<CosetVector> coset_decompose(const TreeAut& a, Family family) {
  check_normalizer_input(a.degree(), a.level(), family);
  auto bits = decompose_bits(a, family);
  if (!bits) return std::nullopt;
  return CosetVector{family, a.degree(), a.level(), std::move(*bits)};
}

bool in_normalizer_tower(const TreeAut& a, Family family) {
  return coset_decompose(a, family).has_value();
}

ComponentReport component_checks(const TreeAut& a, Family family) {
  check_normalizer_input(a.degree(), a.level(), family);
  if (a.level() < 2) throw Error(ErrorKind::Precondition, "component checks need level >= 2");
  ComponentReport report;
  report.in_tower = in_normalizer_tower(a, family);
  std::vector<TreeAut> children;
  for (int j = 0; j < a.degree(); ++j) children.push_back(a.child(j));
  for (int j = 0; j < a.degree(); ++j) {
    if (!in_normalizer_tower(children[static_cast<std::size_t>(j)], family)) {
      report.children_in_tower = false;
      report.failing_children.push_back(j);
    }
  }
  const bool trivial = family == Family::E && a.level() == 2;  // E_1 = W_1
  for (int i = 0; i < a.degree(); ++i) {
    for (int j = 0; j < a.degree(); ++j) {
      if (i == j || trivial) continue;
      const TreeAut q = compose(children[static_cast<std::size_t>(i)],
                                inverse(children[static_cast<std::size_t>(j)]));
      if (!is_member(q, family)) {
        report.quotients_in_group = false;
        report.failing_pairs.emplace_back(i, j);
      }
    }
  }
  return report;
}

ShiftResult shift_details(const TreeAut& a, Family family) {
  check_normalizer_input(a.degree(), a.level(), family);
  const int min_level = family == Family::E ? 3 : 2;
  if (a.level() < min_level)
    throw Error(ErrorKind::Precondition, "shift check for family " + std::string(to_string(family)) +
                                             " needs level >= " + std::to_string(min_level));
  auto v = coset_decompose(a, family);
  if (!v) throw Error(ErrorKind::Precondition, "element is not in the normalizer tower");
  const TreeAut w1 = w_generator(1, a.degree(), a.level());
  const TreeAut b = v->bits[0] ? compose(inverse(w1), a) : a;
  auto child = coset_decompose(b.child(0), family);
  ShiftResult result{*v, child.value_or(zero_vector(family, a.degree(), a.level() - 1)), false};
  if (child) {
    const std::vector<std::uint8_t> tail(v->bits.begin() + 1, v->bits.end());
    result.passed = child->bits == tail;
  }
  return result;
}

bool shift_check(const TreeAut& a, Family family) { return shift_details(a, family).passed; }

std::vector<std::uint8_t> shift_bits(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) return {};
  std::vector<std::uint8_t> out(bits.begin() + 1, bits.end());
  out.push_back(bits.back());
  return out;
}

} // namespace wreath
