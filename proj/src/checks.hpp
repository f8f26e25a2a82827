#pragma once

#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "reekit/geometry.hpp"
#include "reekit/hexagon.hpp"
#include "reekit/ovoid.hpp"
#include "reekit/suite.hpp"

namespace reekit::checks {

/// Data shared by the checks of one run, built on first use.
class SharedData {
 public:
  explicit SharedData(const Field& field) : field_(field) {}

  const HexagonGraph& graph();
  const std::vector<Block>& circles();
  const std::vector<Block>& spheres();
  const PermutationGroup& group(Structure s);

 private:
  const Field& field_;
  std::once_flag graph_once_, circles_once_, spheres_once_;
  std::once_flag group_once_[3];
  std::unique_ptr<HexagonGraph> graph_;
  std::vector<Block> circles_, spheres_;
  PermutationGroup groups_[3];
};

struct Context {
  const Field& field;
  std::uint64_t seed;
  std::uint64_t trials;
  const std::vector<Block>* imported;
  SharedData& data;
  std::vector<FieldElement> elements;
  std::mt19937_64 rng;

  bool exhaustive() const { return field.order() <= 3; }
  FieldElement random_element();
  FieldElement random_nonzero();
  Triple random_triple();
  OvoidPoint random_finite_point();
  /// Length 0..5, weighted towards 5.
  HexElement random_hex(ElementKind kind);
  std::vector<OvoidPoint> omega() const { return ovoid(field); }
};

struct Outcome {
  bool pass = true;
  std::string witness;
  std::string detail;
  /// Sample count when a check draws fewer than the requested trials.
  std::uint64_t trials = 0;

  static Outcome fail(std::string witness, std::string detail = {}) {
    return {false, std::move(witness), std::move(detail), 0};
  }
  static Outcome ok(std::string detail = {}) { return {true, {}, std::move(detail), 0}; }
  Outcome& with_trials(std::uint64_t n) {
    trials = n;
    return *this;
  }
};

struct CheckDef {
  std::string name;
  SuiteName suite;
  bool (*applies)(const Field&, const SuiteOptions&);
  std::function<Outcome(Context&)> run;
};

bool any_field(const Field&, const SuiteOptions&);
bool small_field(const Field& f, const SuiteOptions&);

void add_hexagon_checks(std::vector<CheckDef>& out);
void add_ovoid_checks(std::vector<CheckDef>& out);
void add_geometry_checks(std::vector<CheckDef>& out);
void add_identity_checks(std::vector<CheckDef>& out);

std::string join_points(const std::vector<OvoidPoint>& pts);

}  // namespace reekit::checks
