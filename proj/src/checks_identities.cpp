#include <set>

#include "checks.hpp"
#include "reekit/symbolic.hpp"

namespace reekit::checks {

namespace {

using symbolic::FormalPoly;
using symbolic::Identity;

std::vector<std::string> identity_variables(const Identity& id) {
  std::set<std::string> names;
  for (const auto* side : {&id.lhs, &id.rhs}) {
    for (const auto& p : *side) {
      for (auto& v : p.variables()) names.insert(v);
    }
  }
  return {names.begin(), names.end()};
}

std::string assignment_string(const std::map<std::string, FieldElement>& values) {
  std::string s;
  for (const auto& [k, v] : values) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v.to_string();
  }
  return s;
}

// Returns the first component where the two sides differ, or -1.
int differs(const Field& field, const Identity& id, const std::map<std::string, FieldElement>& v) {
  for (std::size_t i = 0; i < id.lhs.size(); ++i) {
    if (id.lhs[i].evaluate(field, v) != id.rhs[i].evaluate(field, v)) return static_cast<int>(i);
  }
  return -1;
}

Outcome run_identity(const Identity& id, Context& c) {
  const auto sym = symbolic::check_identity(id);
  const std::string detail = "terms " + std::to_string(sym.lhs_terms) + "/" +
                             std::to_string(sym.rhs_terms);
  const auto vars = identity_variables(id);
  std::map<std::string, FieldElement> values;
  for (const auto& v : vars) values[v] = c.field.zero();

  if (!sym.pass) {
    std::string witness;
    for (std::size_t i = 0; i < id.lhs.size() && i < id.rhs.size(); ++i) {
      if (!symbolic::verify_identity(id.lhs[i], id.rhs[i])) {
        witness = "component " + std::to_string(i) + ": lhs - rhs = " + (id.lhs[i] - id.rhs[i]).to_string();
        break;
      }
    }
    std::string numeric = "no counterexample over GF(" + std::to_string(c.field.order()) + ")";
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      for (const auto& v : vars) values[v] = c.random_element();
      if (differs(c.field, id, values) >= 0) {
        numeric = "counterexample " + assignment_string(values);
        break;
      }
    }
    return Outcome::fail(witness, detail + ", " + numeric);
  }

  if (c.exhaustive()) {
    const std::size_t q = c.elements.size();
    std::vector<std::size_t> digits(vars.size(), 0);
    std::size_t evaluations = 0;
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i) values[vars[i]] = c.elements[digits[i]];
      ++evaluations;
      if (differs(c.field, id, values) >= 0) return Outcome::fail(assignment_string(values), detail);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    return Outcome::ok(detail + ", " + std::to_string(evaluations) + " assignments");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    for (const auto& v : vars) values[v] = c.random_element();
    if (differs(c.field, id, values) >= 0) return Outcome::fail(assignment_string(values), detail);
  }
  return Outcome::ok(detail);
}

}  // namespace

void add_identity_checks(std::vector<CheckDef>& out) {
  for (const auto& id : symbolic::builtin_identities()) {
    out.push_back({"identity." + id.name, SuiteName::identities, any_field,
                   [id](Context& c) { return run_identity(id, c); }});
  }
}

}  // namespace reekit::checks
