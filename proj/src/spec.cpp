#include "perfgrp/spec.hpp"

#include "perfgrp/errors.hpp"

#include <cctype>
#include <limits>

namespace perfgrp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  GroupSpec expr() {
    GroupSpec left = term();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
        left = GroupSpec::product(std::move(left), term());
      } else {
        return left;
      }
    }
  }

  GroupSpec term() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      GroupSpec inner = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return atom();
  }

  GroupSpec atom() {
    if (pos_ >= text_.size()) fail("expected a group atom (C, D, S or A followed by a number)");
    const std::size_t start = pos_;
    GroupSpec::Kind kind;
    switch (std::toupper(static_cast<unsigned char>(text_[pos_]))) {
      case 'C': kind = GroupSpec::Kind::Cyclic; break;
      case 'D': kind = GroupSpec::Kind::Dihedral; break;
      case 'S': kind = GroupSpec::Kind::Symmetric; break;
      case 'A': kind = GroupSpec::Kind::Alternating; break;
      default: fail("expected a group atom (C, D, S or A followed by a number)");
    }
    ++pos_;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::uint64_t value = 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (kMax - digit) / 10) throw SemanticError("parameter does not fit in 64 bits", start);
      value = value * 10 + digit;
      ++pos_;
    }
    if (value == 0) throw SemanticError("group parameter must be >= 1", start);
    if (kind == GroupSpec::Kind::Dihedral && value % 2 != 0) {
      throw SemanticError("dihedral group D" + std::to_string(value) + " needs an even order", start);
    }
    return GroupSpec::leaf(kind, value);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

char letter(GroupSpec::Kind kind) {
  switch (kind) {
    case GroupSpec::Kind::Cyclic: return 'C';
    case GroupSpec::Kind::Dihedral: return 'D';
    case GroupSpec::Kind::Symmetric: return 'S';
    case GroupSpec::Kind::Alternating: return 'A';
    case GroupSpec::Kind::Product: break;
  }
  return '?';
}

BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void collect_atoms(const GroupSpec& s, std::vector<GroupSpec>& out) {
  if (s.is_leaf()) {
    out.push_back(s);
    return;
  }
  collect_atoms(s.operands[0], out);
  collect_atoms(s.operands[1], out);
}

}  // namespace

GroupSpec GroupSpec::leaf(Kind kind, std::uint64_t parameter) {
  if (kind == Kind::Product) throw DomainError("GroupSpec::leaf: Product is not a leaf kind");
  return GroupSpec{kind, parameter, {}};
}

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
  GroupSpec s{Kind::Product, 0, {}};
  s.operands.push_back(std::move(left));
  s.operands.push_back(std::move(right));
  return s;
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec) {
  if (spec.is_leaf()) return letter(spec.kind) + std::to_string(spec.parameter);
  const GroupSpec& right = spec.operands[1];
  std::string rhs = to_string(right);
  if (!right.is_leaf()) rhs = "(" + rhs + ")";
  return to_string(spec.operands[0]) + " x " + rhs;
}

std::vector<GroupSpec> atoms(const GroupSpec& spec) {
  std::vector<GroupSpec> out;
  collect_atoms(spec, out);
  return out;
}

BigInt spec_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::Dihedral: return BigInt(spec.parameter);
    case GroupSpec::Kind::Symmetric: return factorial(spec.parameter);
    case GroupSpec::Kind::Alternating: return spec.parameter < 2 ? BigInt(1) : factorial(spec.parameter) / 2;
    case GroupSpec::Kind::Product: return spec_order(spec.operands[0]) * spec_order(spec.operands[1]);
  }
  return 0;
}

Group evaluate(const GroupSpec& spec, const Limits& limits) {
  const BigInt order = spec_order(spec);
  if (order > limits.max_order) {
    throw ResourceError("'" + to_string(spec) + "' has order " + order.str() +
                        ", above the realization bound max_order=" + std::to_string(limits.max_order));
  }
  const auto n = static_cast<std::size_t>(spec.parameter);
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic(n, limits);
    case GroupSpec::Kind::Dihedral: return dihedral(n, limits);
    case GroupSpec::Kind::Symmetric: return symmetric(n, limits);
    case GroupSpec::Kind::Alternating: return alternating(n, limits);
    case GroupSpec::Kind::Product:
      return direct_product(evaluate(spec.operands[0], limits), evaluate(spec.operands[1], limits), limits);
  }
  throw std::logic_error("unreachable GroupSpec kind");
}

}  // namespace perfgrp
