#include "wreath/tree_aut.hpp"

#include <cctype>

#include "wreath/errors.hpp"

namespace wreath {
namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 24;

void check_same_shape(const TreeAut& a, const TreeAut& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "degree " + std::to_string(a.degree()) + " vs " +
                                               std::to_string(b.degree()));
  if (a.level() != b.level())
    throw Error(ErrorKind::LevelMismatch, "level " + std::to_string(a.level()) + " vs " +
                                              std::to_string(b.level()));
}

} // namespace

void check_level(int level) {
  if (level < 0) throw Error(ErrorKind::InvalidParameter, "negative level");
}

std::size_t depth_offset(int degree, int depth) {
  std::size_t total = 0;
  std::size_t width = 1;
  for (int t = 0; t < depth; ++t) {
    total += width;
    width *= static_cast<std::size_t>(degree);
    if (total > kMaxNodes)
      throw Error(ErrorKind::InvalidParameter,
                  "tree of degree " + std::to_string(degree) + " and depth " +
                      std::to_string(depth) + " is too large to store densely");
  }
  return total;
}

std::size_t node_count(int degree, int level) { return depth_offset(degree, level); }

VertexWord parse_word(int degree, std::string_view text) {
  VertexWord w{degree, {}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.') continue;
    if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isalpha(static_cast<unsigned char>(c)))
      throw SyntaxError(i, "unexpected character in vertex word");
    int letter = std::isdigit(static_cast<unsigned char>(c))
                     ? c - '0'
                     : 10 + std::tolower(static_cast<unsigned char>(c)) - 'a';
    if (letter >= degree)
      throw Error(ErrorKind::OutOfRange, "letter " + std::to_string(letter) +
                                             " out of range for degree " + std::to_string(degree));
    w.letters.push_back(letter);
  }
  return w;
}

std::string to_string(const VertexWord& w) {
  std::string s;
  for (int x : w.letters) s += static_cast<char>(x < 10 ? '0' + x : 'a' + (x - 10));
  return s;
}

TreeAut TreeAut::identity(int degree, int level) {
  check_degree(degree);
  check_level(level);
  return TreeAut(degree, level,
                 std::vector<simd::Block>(node_count(degree, level), simd::identity_block()));
}

TreeAut TreeAut::embed(const Perm& tau, int level) {
  if (level < 1) throw Error(ErrorKind::InvalidParameter, "embedding needs level >= 1");
  TreeAut a = identity(tau.degree(), level);
  a.labels_[0] = tau.block();
  return a;
}

TreeAut TreeAut::assemble(std::span<const TreeAut> children, const Perm& tau) {
  const int d = tau.degree();
  if (static_cast<int>(children.size()) != d)
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(d) + " children, got " +
                                              std::to_string(children.size()));
  const int child_level = children[0].level();
  for (const auto& c : children) {
    if (c.degree() != d)
      throw Error(ErrorKind::DegreeMismatch, "child degree " + std::to_string(c.degree()) +
                                                 " differs from root degree " + std::to_string(d));
    if (c.level() != child_level)
      throw Error(ErrorKind::LevelMismatch, "children have different levels");
  }
  const int level = child_level + 1;
  std::vector<simd::Block> labels(node_count(d, level));
  labels[0] = tau.block();
  std::size_t width = 1;
  for (int t = 0; t < child_level; ++t) {
    const std::size_t src = depth_offset(d, t);
    const std::size_t dst = depth_offset(d, t + 1);
    for (int j = 0; j < d; ++j)
      for (std::size_t p = 0; p < width; ++p)
        labels[dst + static_cast<std::size_t>(j) * width + p] =
            children[static_cast<std::size_t>(j)].labels_[src + p];
    width *= static_cast<std::size_t>(d);
  }
  return TreeAut(d, level, std::move(labels));
}

TreeAut TreeAut::from_labels(int degree, int level, std::vector<simd::Block> labels) {
  check_degree(degree);
  check_level(level);
  if (labels.size() != node_count(degree, level))
    throw Error(ErrorKind::InvalidParameter, "label count does not match tree shape");
  for (const auto& b : labels) {
    std::uint32_t seen = 0;
    for (int i = 0; i < kMaxDegree; ++i) {
      const int x = b.v[static_cast<std::size_t>(i)];
      if (i >= degree ? x != i : x >= degree)
        throw Error(ErrorKind::OutOfRange, "label is not a permutation of the alphabet");
      seen |= 1u << x;
    }
    if (seen != 0xFFFFu) throw Error(ErrorKind::RepeatedEntry, "label is not a bijection");
  }
  return TreeAut(degree, level, std::move(labels));
}

Perm TreeAut::root() const {
  if (level_ == 0) return Perm::identity(degree_);
  return Perm::from_block(degree_, labels_[0]);
}

TreeAut TreeAut::child(int i) const {
  if (level_ < 1) throw Error(ErrorKind::Precondition, "level-0 automorphism has no children");
  if (i < 0 || i >= degree_)
    throw Error(ErrorKind::OutOfRange, "child index " + std::to_string(i) + " out of range");
  const int child_level = level_ - 1;
  std::vector<simd::Block> labels(node_count(degree_, child_level));
  std::size_t width = 1;
  for (int t = 0; t < child_level; ++t) {
    const std::size_t src = depth_offset(degree_, t + 1) + static_cast<std::size_t>(i) * width;
    const std::size_t dst = depth_offset(degree_, t);
    std::copy_n(labels_.begin() + static_cast<std::ptrdiff_t>(src), width,
                labels.begin() + static_cast<std::ptrdiff_t>(dst));
    width *= static_cast<std::size_t>(degree_);
  }
  return TreeAut(degree_, child_level, std::move(labels));
}

bool TreeAut::is_identity() const {
  return simd::active().all_identity(labels_.data(), labels_.size());
}

TreeAut compose(const TreeAut& a, const TreeAut& b) {
  check_same_shape(a, b);
  const int d = a.degree();
  const auto la = a.labels();
  const auto lb = b.labels();
  const std::size_t n = la.size();
  // index[k] is the vertex of b whose label is composed into vertex k of a:
  // child j of a*b pairs child j of a with child sigma^-1(j) of b.
  std::vector<std::uint32_t> index(n);
  if (n > 0) index[0] = 0;
  std::size_t width = 1;
  for (int t = 0; t + 1 < a.level(); ++t) {
    const std::size_t off = depth_offset(d, t);
    const std::size_t next = off + width;
    for (std::size_t p = 0; p < width; ++p) {
      const auto& sigma = la[off + p].v;
      const std::size_t bp = index[off + p] - off;
      for (int j = 0; j < d; ++j)
        index[next + p * static_cast<std::size_t>(d) + sigma[static_cast<std::size_t>(j)]] =
            static_cast<std::uint32_t>(next + bp * static_cast<std::size_t>(d) +
                                       static_cast<std::size_t>(j));
    }
    width *= static_cast<std::size_t>(d);
  }
  std::vector<simd::Block> out(n);
  simd::active().compose_gather(out.data(), la.data(), lb.data(), index.data(), n);
  return TreeAut::from_labels_unchecked(d, a.level(), std::move(out));
}

TreeAut inverse(const TreeAut& a) {
  const int d = a.degree();
  const auto la = a.labels();
  const std::size_t n = la.size();
  // source[r] is the vertex of a whose inverted label lands at vertex r:
  // child k of a^-1 is the inverse of child sigma(k) of a.
  std::vector<std::uint32_t> source(n);
  if (n > 0) source[0] = 0;
  std::size_t width = 1;
  for (int t = 0; t + 1 < a.level(); ++t) {
    const std::size_t off = depth_offset(d, t);
    const std::size_t next = off + width;
    for (std::size_t r = 0; r < width; ++r) {
      const std::size_t pa = source[off + r] - off;
      const auto& sigma = la[source[off + r]].v;
      for (int k = 0; k < d; ++k)
        source[next + r * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)] =
            static_cast<std::uint32_t>(next + pa * static_cast<std::size_t>(d) +
                                       sigma[static_cast<std::size_t>(k)]);
    }
    width *= static_cast<std::size_t>(d);
  }
  std::vector<simd::Block> out(n, simd::identity_block());
  for (std::size_t r = 0; r < n; ++r) {
    const auto& src = la[source[r]].v;
    for (int i = 0; i < d; ++i) out[r].v[src[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  }
  return TreeAut::from_labels_unchecked(d, a.level(), std::move(out));
}

TreeAut power(const TreeAut& a, long long exponent) {
  TreeAut base = exponent < 0 ? inverse(a) : a;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  TreeAut result = TreeAut::identity(a.degree(), a.level());
  while (e) {
    if (e & 1ULL) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

TreeAut restrict(const TreeAut& a, int m) {
  if (m < 0 || m > a.level())
    throw Error(ErrorKind::OutOfRange, "cannot restrict level " + std::to_string(a.level()) +
                                           " automorphism to level " + std::to_string(m));
  const auto la = a.labels();
  return TreeAut::from_labels_unchecked(
      a.degree(), m, std::vector<simd::Block>(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(
                                                                            node_count(a.degree(), m))));
}

VertexWord act_on_word(const TreeAut& a, const VertexWord& v) {
  if (v.degree != a.degree())
    throw Error(ErrorKind::DegreeMismatch, "word degree differs from automorphism degree");
  if (static_cast<int>(v.letters.size()) > a.level())
    throw Error(ErrorKind::OutOfRange, "word of length " + std::to_string(v.letters.size()) +
                                           " exceeds level " + std::to_string(a.level()));
  const int d = a.degree();
  VertexWord out{d, {}};
  out.letters.reserve(v.letters.size());
  std::size_t pos = 0;
  for (std::size_t t = 0; t < v.letters.size(); ++t) {
    const int letter = v.letters[t];
    if (letter < 0 || letter >= d)
      throw Error(ErrorKind::OutOfRange, "letter " + std::to_string(letter) + " out of range");
    const int image = a.labels()[depth_offset(d, static_cast<int>(t)) + pos].v[static_cast<std::size_t>(letter)];
    out.letters.push_back(image);
    pos = pos * static_cast<std::size_t>(d) + static_cast<std::size_t>(image);
  }
  return out;
}

int sgn2(const TreeAut& a) {
  if (a.level() < 2) throw Error(ErrorKind::Precondition, "sgn2 needs level >= 2");
  int s = a.label(0).sign();
  for (int j = 1; j <= a.degree(); ++j) s *= a.label(static_cast<std::size_t>(j)).sign();
  return s;
}

std::optional<int> order_of(const TreeAut& a, int bound) {
  if (bound < 1) throw Error(ErrorKind::InvalidParameter, "bound must be >= 1");
  TreeAut x = a;
  for (int k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    if (k < bound) x = compose(x, a);
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const TreeAut& a) { return os << to_string(a); }

} // namespace wreath

std::size_t std::hash<wreath::TreeAut>::operator()(const wreath::TreeAut& a) const noexcept {
  std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(a.level());
  for (const auto& b : a.labels())
    for (int i = 0; i < a.degree(); ++i) h = (h ^ b.v[static_cast<std::size_t>(i)]) * 1099511628211ULL;
  return h;
}
