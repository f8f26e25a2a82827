#include "reekit/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "checks.hpp"

namespace reekit {

namespace checks {

const HexagonGraph& SharedData::graph() {
  std::call_once(graph_once_, [&] { graph_ = std::make_unique<HexagonGraph>(field_); });
  return *graph_;
}

const std::vector<Block>& SharedData::circles() {
  std::call_once(circles_once_, [&] { circles_ = all_blocks(field_, BlockKind::circle); });
  return circles_;
}

const std::vector<Block>& SharedData::spheres() {
  std::call_once(spheres_once_, [&] { spheres_ = all_blocks(field_, BlockKind::sphere); });
  return spheres_;
}

const PermutationGroup& SharedData::group(Structure s) {
  const auto i = static_cast<std::size_t>(s);
  std::call_once(group_once_[i], [&] { groups_[i] = automorphism_group(field_, s); });
  return groups_[i];
}

FieldElement Context::random_element() {
  return elements[std::uniform_int_distribution<std::size_t>(0, elements.size() - 1)(rng)];
}

FieldElement Context::random_nonzero() {
  return elements[std::uniform_int_distribution<std::size_t>(1, elements.size() - 1)(rng)];
}

Triple Context::random_triple() { return {random_element(), random_element(), random_element()}; }

OvoidPoint Context::random_finite_point() { return OvoidPoint::triple(random_triple()); }

HexElement Context::random_hex(ElementKind kind) {
  static constexpr std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 5, 5, 5, 5};
  const std::size_t len = kLengths[std::uniform_int_distribution<std::size_t>(0, 9)(rng)];
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_element());
  return {kind, std::move(c)};
}

bool any_field(const Field&, const SuiteOptions&) { return true; }
bool small_field(const Field& f, const SuiteOptions&) { return f.order() <= 3; }

std::string join_points(const std::vector<OvoidPoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) s += ' ';
    s += pts[i].to_string();
  }
  return s + "}";
}

}  // namespace checks

namespace {

const std::vector<checks::CheckDef>& registry() {
  static const std::vector<checks::CheckDef> defs = [] {
    std::vector<checks::CheckDef> d;
    checks::add_identity_checks(d);
    checks::add_hexagon_checks(d);
    checks::add_ovoid_checks(d);
    checks::add_geometry_checks(d);
    return d;
  }();
  return defs;
}

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<CheckReport> run_defs(const std::vector<const checks::CheckDef*>& defs,
                                  const Field& field, const SuiteOptions& options) {
  checks::SharedData data(field);
  std::vector<CheckReport> reports(defs.size());
  std::atomic<std::size_t> next{0};
  const auto elements = field.elements();
  auto worker = [&] {
    for (std::size_t i = next++; i < defs.size(); i = next++) {
      const auto& def = *defs[i];
      checks::Context ctx{field,
                          options.seed,
                          options.trials,
                          options.imported_blocks.get(),
                          data,
                          elements,
                          std::mt19937_64(options.seed ^ name_hash(def.name))};
      CheckReport& r = reports[i];
      r.name = def.name;
      r.exhaustive = ctx.exhaustive();
      r.seed = options.seed;
      r.trials = options.trials;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const checks::Outcome o = def.run(ctx);
        r.pass = o.pass;
        r.witness = o.witness;
        r.detail = o.detail;
        if (o.trials != 0 && !r.exhaustive) r.trials = o.trials;
      } catch (const std::exception& e) {
        r.pass = false;
        r.witness = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned n = options.threads ? options.threads : thread_limit();
  n = std::max(1U, std::min<unsigned>(n, static_cast<unsigned>(defs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

}  // namespace

SuiteName parse_suite_name(const std::string& s) {
  if (s == "all") return SuiteName::all;
  if (s == "hexagon") return SuiteName::hexagon;
  if (s == "ovoid") return SuiteName::ovoid;
  if (s == "geometry") return SuiteName::geometry;
  if (s == "identities") return SuiteName::identities;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

const char* suite_name(SuiteName s) {
  switch (s) {
    case SuiteName::all: return "all";
    case SuiteName::hexagon: return "hexagon";
    case SuiteName::ovoid: return "ovoid";
    case SuiteName::geometry: return "geometry";
    case SuiteName::identities: return "identities";
  }
  return "?";
}

std::string CheckReport::scope() const {
  if (exhaustive) return "exhaustive";
  return "sampled(seed=" + std::to_string(seed) + ",trials=" + std::to_string(trials) + ")";
}

std::vector<std::string> suite_checks(SuiteName suite, const Field& field,
                                      const SuiteOptions& options) {
  std::vector<std::string> names;
  for (const auto& d : registry()) {
    if ((suite == SuiteName::all || d.suite == suite) && d.applies(field, options)) {
      names.push_back(d.name);
    }
  }
  return names;
}

std::vector<CheckReport> run_suite(SuiteName suite, const Field& field,
                                   const SuiteOptions& options) {
  return run_checks(suite_checks(suite, field, options), field, options);
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const Field& field,
                                    const SuiteOptions& options) {
  std::vector<const checks::CheckDef*> defs;
  for (const auto& n : names) {
    auto it = std::find_if(registry().begin(), registry().end(),
                           [&](const auto& d) { return d.name == n; });
    if (it == registry().end()) throw std::invalid_argument("unknown check '" + n + "'");
    defs.push_back(&*it);
  }
  return run_defs(defs, field, options);
}

unsigned thread_limit() {
  if (const char* env = std::getenv("REEKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string format_text(const std::vector<CheckReport>& reports, bool timings) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.scope();
    if (timings) os << "  " << std::fixed << std::setprecision(3) << r.seconds << "s";
    if (!r.detail.empty()) os << "  " << r.detail;
    if (!r.pass) os << "  witness: " << r.witness;
    os << '\n';
  }
  return os.str();
}

std::string format_json(const std::vector<CheckReport>& reports, const Field& field,
                        bool timings) {
  nlohmann::ordered_json j;
  j["field"] = {{"e", field.e()}, {"order", field.order()}, {"modulus", field.params().modulus}};
  j["pass"] = all_pass(reports);
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    if (r.exhaustive) {
      c["scope"] = {{"kind", "exhaustive"}};
    } else {
      c["scope"] = {{"kind", "sampled"}, {"seed", r.seed}, {"trials", r.trials}};
    }
    c["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) c["witness"] = r.witness;
    if (!r.detail.empty()) c["detail"] = r.detail;
    if (timings) c["seconds"] = r.seconds;
    arr.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace reekit
