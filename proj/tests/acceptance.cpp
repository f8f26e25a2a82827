// Acceptance run: one line per criterion with its pinned runtime limit.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "reekit/suite.hpp"

using namespace reekit;

namespace {

struct Part {
  int e;
  std::vector<std::string> checks;
  double limit_seconds;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Part> parts;
};

const std::vector<std::string> kIdentities{
    "identity.theta-twice-is-cube", "identity.u-infty-associativity", "identity.u-infty-identity",
    "identity.u-infty-right-inverse", "identity.u-infty-left-inverse", "identity.commutator-display",
    "identity.derived-commutator", "identity.cube-formula"};

const std::vector<std::string> kDerived{
    "geometry.derived-objects", "geometry.parallelism", "geometry.parallel-class-gnarls",
    "geometry.intersect", "geometry.intersect2", "geometry.intersect3"};

std::vector<Criterion> criteria() {
  return {
      {1, "hexagon axioms q=3", {{0, {"hexagon.element-count", "hexagon.axioms"}, 10}}},
      {2, "embedding coherence q=3", {{0, {"hexagon.embedding", "hexagon.five-coordinate-span"}, 30}}},
      {3, "polarity and ovoid q=3",
       {{0,
         {"ovoid.polarity-involution", "ovoid.polarity-incidence", "ovoid.absolute-points",
          "ovoid.opposite", "ovoid.unique-collinear"},
         30}}},
      {4, "coordinate dictionary q=3, q=27",
       {{0, {"ovoid.dictionary", "ovoid.proj-roundtrip"}, 60}, {1, {"ovoid.dictionary"}, 60}}},
      {5, "root groups q=3, q=27",
       {{0,
         {"ovoid.u-infty-group", "ovoid.u-zero-group", "ovoid.u-zero-omega", "ovoid.root-groups",
          "ovoid.second-derived-center"},
         60},
        {1, {"ovoid.u-infty-group", "ovoid.u-zero-group", "ovoid.u-zero-omega"}, 60}}},
      {6, "symbolic identities over N[theta]", {{0, kIdentities, 5}}},
      {7, "block families q=3",
       {{0,
         {"geometry.circles", "geometry.spheres", "geometry.samegnarl", "geometry.hexagon-circles",
          "geometry.hexagon-spheres"},
         120}}},
      {8, "derived geometry q=3, q=27", {{0, kDerived, 120}, {1, kDerived, 300}}},
      {9, "unital q=3", {{0, {"unital.design", "unital.base-display", "unital.w-sets"}, 60}}},
      {10, "automorphism groups q=3",
       {{0,
         {"geometry.aut-order", "geometry.aut-gnarls-kinds", "geometry.aut-derived-types",
          "geometry.aut-stabilizer", "geometry.aut-membership"},
         600}}},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reekit acceptance criteria"};
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--trials", trials, "trials for sampled checks");
  CLI11_PARSE(app, argc, argv);

  const std::shared_ptr<const Field> fields[] = {Field::standard(0), Field::standard(1)};
  SuiteOptions options;
  options.seed = seed;
  options.trials = trials;

  int failed = 0;
  for (const auto& c : criteria()) {
    bool ok = true;
    std::string parts;
    std::vector<std::string> failures;
    for (const auto& part : c.parts) {
      const auto& field = *fields[part.e];
      const auto start = std::chrono::steady_clock::now();
      const auto reports = run_checks(part.checks, field, options);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::size_t passed = 0;
      for (const auto& r : reports) {
        if (r.pass) {
          ++passed;
        } else {
          failures.push_back(r.name + " q=" + std::to_string(field.order()) + ": " + r.witness);
        }
      }
      const bool in_time = secs < part.limit_seconds;
      ok = ok && passed == reports.size() && in_time;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%sq=%llu %zu/%zu checks %.1fs<%.0fs%s", parts.empty() ? "" : "; ",
                    static_cast<unsigned long long>(field.order()), passed, reports.size(), secs,
                    part.limit_seconds, in_time ? "" : " TIMEOUT");
      parts += buf;
    }
    std::printf("criterion %2d %s  %s  [%s]\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), parts.c_str());
    for (const auto& f : failures) std::printf("    failed %s\n", f.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
