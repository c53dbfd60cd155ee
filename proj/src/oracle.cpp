#include "wreath/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "wreath/errors.hpp"

namespace wreath {
namespace {

std::uint64_t factorial(int d) {
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::size_t bytes_for(std::uint64_t values) {
  std::size_t bytes = 1;
  while (bytes < 8 && (values - 1) >> (8 * bytes)) ++bytes;
  return bytes;
}

[[noreturn]] void guard_exceeded(const std::string& what, const std::string& size,
                                 std::uint64_t guard) {
  throw Error(ErrorKind::GuardExceeded,
              what + " has " + size + " elements, more than the guard " + std::to_string(guard));
}

} // namespace

std::uint64_t perm_rank(const Perm& p) {
  const int d = p.degree();
  std::uint64_t rank = 0;
  for (int i = 0; i < d; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < d; ++j) smaller += p(j) < p(i);
    rank = rank * static_cast<std::uint64_t>(d - i) + smaller;
  }
  return rank;
}

Perm perm_unrank(int degree, std::uint64_t rank) {
  check_degree(degree);
  std::vector<int> digits(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(degree - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  if (rank != 0) throw Error(ErrorKind::OutOfRange, "rank exceeds d! - 1");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> images;
  for (int i = 0; i < degree; ++i) {
    const auto k = static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]);
    images.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Perm::from_images(images);
}

PortraitCodec::PortraitCodec(int degree, int level)
    : degree_(degree), level_(level), nodes_(node_count(degree, level)),
      bytes_per_label_(bytes_for(factorial(degree))) {
  check_degree(degree);
  if (degree <= 9) {
    auto table = std::make_shared<std::vector<simd::Block>>(factorial(degree));
    for (std::size_t r = 0; r < table->size(); ++r)
      (*table)[r] = perm_unrank(degree, r).block();
    unrank_table_ = std::move(table);
  }
}

std::string PortraitCodec::encode(const TreeAut& a) const {
  std::string key(key_size(), '\0');
  const auto labels = a.labels();
  for (std::size_t k = 0; k < nodes_; ++k) {
    std::uint64_t r = perm_rank(Perm::from_block(degree_, labels[k]));
    for (std::size_t b = 0; b < bytes_per_label_; ++b, r >>= 8)
      key[k * bytes_per_label_ + b] = static_cast<char>(r & 0xFFu);
  }
  return key;
}

TreeAut PortraitCodec::decode(const std::string& key) const {
  std::vector<simd::Block> labels(nodes_);
  for (std::size_t k = 0; k < nodes_; ++k) {
    std::uint64_t r = 0;
    for (std::size_t b = bytes_per_label_; b-- > 0;)
      r = (r << 8) | static_cast<unsigned char>(key[k * bytes_per_label_ + b]);
    labels[k] = unrank_table_ ? (*unrank_table_)[r] : perm_unrank(degree_, r).block();
  }
  return TreeAut::from_labels_unchecked(degree_, level_, std::move(labels));
}

ElementSet::ElementSet(int degree, int level, std::vector<std::string> keys)
    : codec_(degree, level), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool ElementSet::contains(const TreeAut& a) const {
  if (a.degree() != degree() || a.level() != level()) return false;
  return std::binary_search(keys_.begin(), keys_.end(), codec_.encode(a));
}

std::vector<TreeAut> ElementSet::elements() const {
  std::vector<TreeAut> out;
  out.reserve(keys_.size());
  for (const auto& k : keys_) out.push_back(codec_.decode(k));
  return out;
}

ElementSet enumerate_level(int degree, int level, std::uint64_t guard) {
  check_degree(degree);
  check_level(level);
  const std::uint64_t f = factorial(degree);
  const std::size_t nodes = node_count(degree, level);
  std::uint64_t total = 1;
  bool overflow = false;
  for (std::size_t k = 0; k < nodes && !overflow; ++k) {
    if (total > guard) overflow = true;
    else total *= f;
  }
  if (overflow || total > guard) {
    std::string size = std::to_string(f) + "^" + std::to_string(nodes);
    guard_exceeded("W_" + std::to_string(level) + " (degree " + std::to_string(degree) + ")", size,
                   guard);
  }
  const PortraitCodec codec(degree, level);
  std::vector<simd::Block> ranked(f);
  for (std::uint64_t r = 0; r < f; ++r) ranked[r] = perm_unrank(degree, r).block();
  std::vector<std::uint64_t> digits(nodes, 0);
  std::vector<std::string> keys;
  keys.reserve(total);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::vector<simd::Block> labels(nodes);
    for (std::size_t k = 0; k < nodes; ++k) labels[k] = ranked[digits[k]];
    keys.push_back(codec.encode(TreeAut::from_labels_unchecked(degree, level, std::move(labels))));
    for (std::size_t k = nodes; k-- > 0;) {
      if (++digits[k] < f) break;
      digits[k] = 0;
    }
  }
  return ElementSet(degree, level, std::move(keys));
}

ElementSet closure(const std::vector<TreeAut>& gens, std::uint64_t guard) {
  if (gens.empty()) throw Error(ErrorKind::InvalidParameter, "closure needs at least one generator");
  const int d = gens[0].degree();
  const int n = gens[0].level();
  for (const auto& g : gens)
    if (g.degree() != d || g.level() != n)
      throw Error(ErrorKind::LevelMismatch, "generators of different shape");
  const PortraitCodec codec(d, n);
  std::unordered_set<std::string> seen;
  std::vector<std::string> order;  // BFS order; also the work queue
  const std::string start = codec.encode(TreeAut::identity(d, n));
  seen.insert(start);
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const TreeAut x = codec.decode(order[head]);
    for (const auto& g : gens) {
      std::string key = codec.encode(compose(x, g));
      if (seen.insert(key).second) {
        if (seen.size() > guard)
          guard_exceeded("generated group", "more than " + std::to_string(guard), guard);
        order.push_back(std::move(key));
      }
    }
  }
  seen.clear();
  return ElementSet(d, n, std::move(order));
}

ElementSet closure_of_perms(const std::vector<Perm>& gens, std::uint64_t guard) {
  std::vector<TreeAut> auts;
  for (const auto& p : gens) auts.push_back(TreeAut::embed(p, 1));
  return closure(auts, guard);
}

bool conjugation_normalizes(const ElementSet& group, const std::vector<TreeAut>& gens,
                            const TreeAut& x) {
  const TreeAut xi = inverse(x);
  return std::all_of(gens.begin(), gens.end(),
                     [&](const TreeAut& g) { return group.contains(compose(compose(x, g), xi)); });
}

namespace {

void check_gens_in_group(const ElementSet& group, const std::vector<TreeAut>& gens) {
  for (const auto& g : gens)
    if (!group.contains(g))
      throw Error(ErrorKind::Precondition, "generator " + to_string(g) + " is not in the group");
}

} // namespace

ElementSet bruteforce_normalizer(const ElementSet& group, const std::vector<TreeAut>& gens,
                                 const ElementSet& ambient) {
  check_gens_in_group(group, gens);
  std::vector<std::string> keys;
  for (const auto& key : ambient.keys())
    if (conjugation_normalizes(group, gens, ambient.codec().decode(key))) keys.push_back(key);
  return ElementSet(ambient.degree(), ambient.level(), std::move(keys));
}

std::vector<bool> bruteforce_normalizer_verdicts(const ElementSet& group,
                                                 const std::vector<TreeAut>& gens,
                                                 const std::vector<TreeAut>& samples) {
  check_gens_in_group(group, gens);
  std::vector<bool> out;
  out.reserve(samples.size());
  for (const auto& x : samples) out.push_back(conjugation_normalizes(group, gens, x));
  return out;
}

bool is_transitive(const std::vector<Perm>& gens) {
  if (gens.empty()) return false;
  const int d = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != d) throw Error(ErrorKind::DegreeMismatch, "generators of different degree");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const int y = g(x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == d;
}

} // namespace wreath
