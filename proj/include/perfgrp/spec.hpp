#pragma once

#include "perfgrp/group.hpp"
#include "perfgrp/numbers.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace perfgrp {

// Parse tree of the group-description language:
//
//   Expr := Term { "x" Term }
//   Term := Atom | "(" Expr ")"
//   Atom := ("C" | "D" | "S" | "A") unsigned-integer
//
// Whitespace is ignored and letters are case-insensitive. "D<m>" is the
// dihedral group of order m. Products associate to the left.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Symmetric, Alternating, Product };

  Kind kind = Kind::Cyclic;
  std::uint64_t parameter = 0;     // leaves only
  std::vector<GroupSpec> operands;  // Product only: exactly two

  static GroupSpec leaf(Kind kind, std::uint64_t parameter);
  static GroupSpec product(GroupSpec left, GroupSpec right);

  bool is_leaf() const noexcept { return kind != Kind::Product; }
  bool operator==(const GroupSpec&) const = default;
};

// Throws SyntaxError / SemanticError carrying a 0-based position.
GroupSpec parse_spec(std::string_view text);

// Canonical text; parse_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

// Leaves in left-to-right order.
std::vector<GroupSpec> atoms(const GroupSpec& spec);

// Order without realizing anything.
BigInt spec_order(const GroupSpec& spec);

// Realizes the group (ResourceError beyond limits.max_order).
Group evaluate(const GroupSpec& spec, const Limits& limits = {});

}  // namespace perfgrp
