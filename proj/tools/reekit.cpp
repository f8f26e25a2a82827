#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "reekit/field.hpp"
#include "reekit/geometry.hpp"
#include "reekit/hexagon.hpp"
#include "reekit/io.hpp"
#include "reekit/ovoid.hpp"
#include "reekit/suite.hpp"

using namespace reekit;

namespace {

struct Globals {
  std::string field = "0";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::string format = "text";
  bool timings = false;
  std::string blocks_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int run_and_report(SuiteName suite, const Field& f, const Globals& g,
                   const std::vector<std::string>& only = {}) {
  SuiteOptions opts;
  opts.seed = g.seed;
  opts.trials = g.trials;
  if (!g.blocks_file.empty()) {
    opts.imported_blocks = std::make_shared<const std::vector<Block>>(import_blocks(f, read_file(g.blocks_file)));
  }
  const auto reports = only.empty() ? run_suite(suite, f, opts) : run_checks(only, f, opts);
  std::cout << (g.format == "json" ? format_json(reports, f, g.timings) : format_text(reports, g.timings));
  return all_pass(reports) ? 0 : 1;
}

std::vector<std::string> lemma_checks(const Field& f, const Globals& g) {
  std::vector<std::string> out;
  for (const auto& n : suite_checks(SuiteName::geometry, f)) {
    if (n.find("aut-") == std::string::npos) out.push_back(n);
  }
  (void)g;
  return out;
}

std::string block_lines(const std::vector<Block>& blocks) { return export_blocks(blocks); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ree hexagon, Ree-Tits ovoid and Ree geometry verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "e or e:c0,c1,... for GF(3^(2e+1)); e=0 is GF(3), e=1 is GF(27)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--trials", g.trials, "samples per sampled check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timings", g.timings, "include wall times in reports");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all | hexagon | ovoid | geometry | identities")
      ->check(CLI::IsMember({"all", "hexagon", "ovoid", "geometry", "identities"}))
      ->capture_default_str();
  verify->add_option("--blocks", g.blocks_file, "block file to validate with the geometry suite");

  std::string hex_kind = "all";
  auto* hexagon = app.add_subcommand("hexagon", "hexagon elements and checks");
  hexagon->require_subcommand(1);
  auto* hex_enum = hexagon->add_subcommand("enumerate", "list points and lines");
  hex_enum->add_option("--kind", hex_kind)->check(CLI::IsMember({"point", "line", "all"}))->capture_default_str();
  auto* hex_check = hexagon->add_subcommand("check", "run the hexagon suite");

  auto* ovoid_cmd = app.add_subcommand("ovoid", "the ovoid and its root groups");
  ovoid_cmd->require_subcommand(1);
  auto* ov_enum = ovoid_cmd->add_subcommand("enumerate", "list Omega");
  auto* ov_check = ovoid_cmd->add_subcommand("check", "run the ovoid suite");

  std::string block_kind = "circle";
  std::string structure = "G";
  auto* geometry = app.add_subcommand("geometry", "circles, spheres and automorphisms");
  geometry->require_subcommand(1);
  auto* geo_blocks = geometry->add_subcommand("blocks", "list blocks");
  geo_blocks->add_option("--kind", block_kind)->check(CLI::IsMember({"circle", "sphere"}))->capture_default_str();
  auto* geo_lemmas = geometry->add_subcommand("check-lemmas", "run the geometry checks except the automorphism search");
  auto* geo_aut = geometry->add_subcommand("aut", "automorphism group of a block family");
  geo_aut->add_option("--structure", structure)->check(CLI::IsMember({"G", "GC", "GS"}))->capture_default_str();

  auto* unital = app.add_subcommand("unital", "the Ree unital");
  unital->require_subcommand(1);
  auto* un_blocks = unital->add_subcommand("blocks", "list unital blocks");

  std::string what;
  std::string out_path;
  auto* exp = app.add_subcommand("export", "write a data file");
  exp->add_option("--what", what)->required()->check(CLI::IsMember({"elements", "incidence", "omega", "blocks", "unital"}));
  exp->add_option("--out", out_path, "output file (default stdout)");

  std::string in_path;
  auto* imp = app.add_subcommand("import", "read and validate a data file");
  imp->add_option("--what", what)->required()->check(CLI::IsMember({"elements", "incidence", "omega", "blocks", "unital"}));
  imp->add_option("file", in_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto field = Field::create(FieldParams::parse(g.field));
    const Field& f = *field;

    if (*verify) return run_and_report(parse_suite_name(suite), f, g);
    if (*hex_check) return run_and_report(SuiteName::hexagon, f, g);
    if (*ov_check) return run_and_report(SuiteName::ovoid, f, g);
    if (*geo_lemmas) return run_and_report(SuiteName::geometry, f, g, lemma_checks(f, g));

    if (*hex_enum) {
      for (const auto& e : enumerate_elements(f)) {
        if (hex_kind == "all" || (hex_kind == "point") == e.is_point()) std::cout << e.to_string() << '\n';
      }
      return 0;
    }
    if (*ov_enum) {
      std::cout << export_omega(ovoid(f));
      return 0;
    }
    if (*geo_blocks) {
      std::cout << block_lines(all_blocks(f, block_kind == "circle" ? BlockKind::circle : BlockKind::sphere));
      return 0;
    }
    if (*geo_aut) {
      const Structure s = structure == "G" ? Structure::G : structure == "GC" ? Structure::GC : Structure::GS;
      const auto group = automorphism_group(f, s);
      std::cout << "order " << group.order << '\n';
      for (const auto& gen : group.generators) {
        std::cout << "gen";
        for (auto v : gen) std::cout << ' ' << v;
        std::cout << '\n';
      }
      return 0;
    }
    if (*un_blocks) {
      std::cout << export_unital(unital_blocks(f));
      return 0;
    }
    if (*exp) {
      std::string text;
      if (what == "elements") {
        text = export_elements(enumerate_elements(f));
      } else if (what == "incidence") {
        text = export_incidence(HexagonGraph(f));
      } else if (what == "omega") {
        text = export_omega(ovoid(f));
      } else if (what == "blocks") {
        auto blocks = all_blocks(f, BlockKind::circle);
        for (auto& b : all_blocks(f, BlockKind::sphere)) blocks.push_back(std::move(b));
        text = export_blocks(blocks);
      } else {
        text = export_unital(unital_blocks(f));
      }
      write_output(out_path, text);
      return 0;
    }
    if (*imp) {
      const std::string text = read_file(in_path);
      std::size_t count = 0;
      if (what == "elements") {
        count = import_elements(f, text).size();
      } else if (what == "incidence") {
        const auto flags = import_incidence(text);
        const auto n = element_count(f);
        for (const auto& [p, l] : flags) {
          if (p >= n || l >= n || !incident(element_at(f, ElementKind::point, p), element_at(f, ElementKind::line, l))) {
            std::cerr << "error: not a flag: I " << p << ' ' << l << '\n';
            return 1;
          }
        }
        count = flags.size();
      } else if (what == "omega") {
        count = import_omega(f, text).size();
      } else if (what == "blocks") {
        const auto blocks = import_blocks(f, text);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          try {
            validate_block(f, blocks[i]);
          } catch (const DataError& e) {
            std::cerr << "error: block " << i + 1 << ": " << e.what() << '\n';
            return 1;
          }
        }
        count = blocks.size();
      } else {
        count = import_unital(f, text).size();
      }
      std::cout << "read " << count << ' ' << what << " records\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
