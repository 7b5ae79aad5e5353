#include "perfgrp/report.hpp"

#include "perfgrp/errors.hpp"
#include "perfgrp/normal.hpp"

#include <algorithm>
#include <sstream>

namespace perfgrp {

namespace {

AnalysisReport analyze_realized(const GroupSpec& spec, const Limits& limits) {
  const Group g = evaluate(spec, limits);
  const NormalLattice lattice = normal_subgroups(g);
  const DResult d = d_group(lattice);
  const Abelianization ab = abelianization(g);

  AnalysisReport r;
  r.spec = to_string(spec);
  r.order = d.order;
  r.d_value = d.d_value;
  r.ratio = d.ratio;
  r.is_perfect = d.is_perfect;
  r.is_tight = is_tight(lattice);
  for (const auto& member : lattice.members) r.normal_subgroup_orders.emplace_back(member.order());
  r.composition_factors = composition_factors(g);
  r.abelianization_factors = ab.structure.invariant_factors;
  r.normal_generator_count = normal_generators(lattice).size();
  return r;
}

bool is_simple_atom(const GroupSpec& atom) {
  return atom.kind == GroupSpec::Kind::Alternating && atom.parameter >= 5;
}

// D is multiplicative over coprime direct factors; cyclic factors
// contribute sigma(n) and a simple factor S contributes |S| + 1.
AnalysisReport analyze_symbolic(const GroupSpec& spec, const Limits& limits) {
  std::optional<GroupSpec> simple;
  BigInt cyclic_part = 1;
  for (const auto& atom : atoms(spec)) {
    if (is_simple_atom(atom) && !simple) {
      simple = atom;
    } else if (atom.kind == GroupSpec::Kind::Cyclic) {
      const BigInt n(atom.parameter);
      if (boost::multiprecision::gcd(cyclic_part, n) != 1) {
        throw DomainError("'" + to_string(spec) + "' is too large to realize, and its cyclic factors share a prime: " +
                          "D is only multiplicative over coprime factors (no composition factor in common)");
      }
      cyclic_part *= n;
    } else {
      throw ResourceError("'" + to_string(spec) + "' has order " + spec_order(spec).str() +
                          ", above the realization bound max_order=" + std::to_string(limits.max_order) +
                          ", and is not a simple group times cyclic groups");
    }
  }

  AnalysisReport r;
  r.spec = to_string(spec);
  r.symbolic = true;
  r.order = spec_order(spec);
  const BigInt simple_order = simple ? spec_order(*simple) : BigInt(1);
  r.d_value = (simple ? simple_order + 1 : BigInt(1)) * divisor_sum(cyclic_part);
  r.ratio = Rational(r.d_value, r.order);
  r.is_perfect = r.d_value == 2 * r.order;

  // Normal subgroups of the coprime product are products N1 x N2.
  for (const auto& d : divisors(cyclic_part)) {
    r.normal_subgroup_orders.push_back(d);
    if (simple) r.normal_subgroup_orders.push_back(d * simple_order);
  }
  std::sort(r.normal_subgroup_orders.begin(), r.normal_subgroup_orders.end());

  FactorMultiset factors;
  if (simple) factors.add(FactorLabel::nonabelian_simple(to_u64(simple_order, "analyze")));
  for (const auto& [p, e] : factorize(cyclic_part)) factors.add(FactorLabel::cyclic_prime(p), e);
  r.composition_factors = factors;
  return r;
}

std::string join_numbers(const auto& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

AnalysisReport analyze(const GroupSpec& spec, const Limits& limits) {
  if (spec_order(spec) <= limits.max_order) return analyze_realized(spec, limits);
  return analyze_symbolic(spec, limits);
}

nlohmann::ordered_json big_to_json(const BigInt& n) {
  if (auto v = try_u64(n)) return *v;
  return n.str();
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["spec"] = r.spec;
  j["symbolic"] = r.symbolic;
  j["order"] = big_to_json(r.order);
  j["d_value"] = big_to_json(r.d_value);
  j["ratio"] = r.ratio.to_string();
  j["is_perfect"] = r.is_perfect;
  j["is_tight"] = r.is_tight ? nlohmann::ordered_json(*r.is_tight) : nullptr;
  auto orders = nlohmann::ordered_json::array();
  for (const auto& o : r.normal_subgroup_orders) orders.push_back(big_to_json(o));
  j["normal_subgroup_orders"] = orders;
  if (r.composition_factors) {
    auto factors = nlohmann::ordered_json::object();
    for (const auto& [label, k] : r.composition_factors->counts()) factors[label.to_string()] = k;
    j["composition_factors"] = factors;
  } else {
    j["composition_factors"] = nullptr;
  }
  j["abelianization_factors"] =
      r.abelianization_factors ? nlohmann::ordered_json(*r.abelianization_factors) : nlohmann::ordered_json(nullptr);
  j["normal_generator_count"] =
      r.normal_generator_count ? nlohmann::ordered_json(*r.normal_generator_count) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto opt = [](const auto& o, auto render) { return o ? render(*o) : std::string("n/a"); };
  os << "spec: " << r.spec << '\n'
     << "symbolic: " << (r.symbolic ? "true" : "false") << '\n'
     << "order: " << r.order << '\n'
     << "d_value: " << r.d_value << '\n'
     << "ratio: " << r.ratio << '\n'
     << "is_perfect: " << (r.is_perfect ? "true" : "false") << '\n'
     << "is_tight: " << opt(r.is_tight, [](bool b) { return std::string(b ? "true" : "false"); }) << '\n'
     << "normal_subgroup_orders: " << join_numbers(r.normal_subgroup_orders) << '\n'
     << "composition_factors: " << opt(r.composition_factors, [](const FactorMultiset& f) { return f.to_string(); })
     << '\n'
     << "abelianization_factors: "
     << opt(r.abelianization_factors, [](const std::vector<std::uint64_t>& v) { return "[" + join_numbers(v) + "]"; })
     << '\n'
     << "normal_generator_count: " << opt(r.normal_generator_count, [](std::size_t n) { return std::to_string(n); })
     << '\n';
  return os.str();
}

}  // namespace perfgrp
