#include <cctype>

#include "wreath/errors.hpp"
#include "wreath/tree_aut.hpp"

namespace wreath {
namespace {

class AutParser {
public:
  AutParser(int degree, std::string_view text) : degree_(degree), text_(text) {}

  TreeAut parse_top(int level) {
    TreeAut a = parse_aut(level);
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing input");
    return a;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // True when the '(' at the cursor opens a cycle rather than a child tuple.
  bool at_cycle() {
    if (peek() != '(') return false;
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  bool at_id() {
    return peek() == 'i' && text_.substr(pos_, 2) == "id";
  }

  Perm parse_perm() {
    if (at_id()) {
      pos_ += 2;
      return Perm::identity(degree_);
    }
    std::vector<std::vector<int>> cycles;
    while (at_cycle()) {
      const std::size_t start = pos_;
      ++pos_;
      std::vector<int> cycle;
      while (true) {
        // Inside a cycle only spaces may separate integers.
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unterminated cycle");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw SyntaxError(pos_, "expected integer or ')' inside cycle");
        if (!cycle.empty() && text_[pos_ - 1] != ' ')
          throw SyntaxError(pos_, "cycle entries must be separated by spaces");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + (text_[pos_] - '0');
          if (value > 1'000'000) throw SyntaxError(pos_, "integer too large");
          ++pos_;
        }
        cycle.push_back(static_cast<int>(value));
      }
      if (cycle.size() < 2) throw SyntaxError(start, "cycle needs at least two points");
      cycles.push_back(std::move(cycle));
    }
    if (cycles.empty()) throw SyntaxError(pos_, "expected permutation");
    return Perm::from_cycles(degree_, cycles);
  }

  TreeAut perm_at_level(const Perm& p, int level, std::size_t where) {
    if (level == 0) {
      if (!p.is_identity())
        throw Error(ErrorKind::LevelMismatch,
                    "literal at position " + std::to_string(where) + " is deeper than the level");
      return TreeAut::identity(degree_, 0);
    }
    return TreeAut::embed(p, level);
  }

  TreeAut parse_aut(int level) {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == 'e' && !at_id()) {
      ++pos_;
      return TreeAut::identity(degree_, level);
    }
    if (at_id() || at_cycle()) return perm_at_level(parse_perm(), level, start);
    if (c != '(') throw SyntaxError(pos_, "expected 'e', a permutation, or a child tuple");
    if (level == 0)
      throw Error(ErrorKind::LevelMismatch,
                  "child tuple at position " + std::to_string(start) + " is deeper than the level");
    ++pos_;
    std::vector<TreeAut> children;
    children.push_back(parse_aut(level - 1));
    while (peek() == ',') {
      ++pos_;
      children.push_back(parse_aut(level - 1));
    }
    if (peek() != ')') throw SyntaxError(pos_, "expected ',' or ')'");
    ++pos_;
    if (static_cast<int>(children.size()) != degree_)
      throw Error(ErrorKind::ArityMismatch,
                  "child tuple at position " + std::to_string(start) + " has " +
                      std::to_string(children.size()) + " entries, expected " +
                      std::to_string(degree_));
    Perm tau = Perm::identity(degree_);
    if (at_id() || at_cycle()) tau = parse_perm();
    return TreeAut::assemble(children, tau);
  }

  int degree_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

TreeAut parse_aut(int degree, int level, std::string_view text) {
  check_degree(degree);
  check_level(level);
  return AutParser(degree, text).parse_top(level);
}

std::string to_string(const TreeAut& a) {
  if (a.is_identity()) return "e";
  bool children_trivial = true;
  std::vector<TreeAut> children;
  if (a.level() >= 2) {
    for (int j = 0; j < a.degree(); ++j) {
      children.push_back(a.child(j));
      children_trivial = children_trivial && children.back().is_identity();
    }
  }
  if (children_trivial) return a.root().to_string();
  std::string s = "(";
  for (std::size_t j = 0; j < children.size(); ++j) {
    if (j) s += ',';
    s += to_string(children[j]);
  }
  s += ')';
  if (!a.root().is_identity()) s += a.root().to_string();
  return s;
}

} // namespace wreath
