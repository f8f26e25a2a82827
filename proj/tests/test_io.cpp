#include <doctest.h>

#include "reekit/io.hpp"

using namespace reekit;

TEST_CASE("element round trip") {
  const auto f = Field::standard(0);
  const auto all = enumerate_elements(*f);
  const auto text = export_elements(all);
  CHECK(import_elements(*f, text) == all);
  CHECK(import_elements(*f, "# comment\n\nP inf\nL 1,2\n") ==
        std::vector{HexElement::point({}), HexElement::line({f->one(), f->from_int(2)})});
}

TEST_CASE("incidence export lists every flag once") {
  const auto f = Field::standard(0);
  const HexagonGraph g(*f);
  const auto flags = import_incidence(export_incidence(g));
  CHECK(flags.size() == 364 * 4);
  for (const auto& [p, l] : flags) {
    CHECK(incident(element_at(*f, ElementKind::point, p), element_at(*f, ElementKind::line, l)));
  }
}

TEST_CASE("Omega round trip") {
  const auto f = Field::standard(0);
  const auto om = ovoid(*f);
  CHECK(import_omega(*f, export_omega(om)) == om);
  CHECK(import_omega(*f, "O 1|0,2\n") == std::vector{OvoidPoint::triple(f->one(), f->zero(), f->from_int(2))});
}

TEST_CASE("block round trip") {
  const auto f = Field::standard(0);
  for (auto kind : {BlockKind::circle, BlockKind::sphere}) {
    const auto blocks = all_blocks(*f, kind);
    CHECK(import_blocks(*f, export_blocks(blocks)) == blocks);
  }
}

TEST_CASE("unital round trip") {
  const auto f = Field::standard(0);
  const auto blocks = unital_blocks(*f);
  CHECK(import_unital(*f, export_unital(blocks)) == blocks);
}

TEST_CASE("parse errors carry line numbers") {
  const auto f = Field::standard(0);
  auto line_of = [](auto&& fn) -> std::size_t {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of([&] { import_elements(*f, "P inf\n\nQ 1\n"); }) == 3);
  CHECK(line_of([&] { import_omega(*f, "# x\nO 1,1\n"); }) == 2);
  CHECK(line_of([&] { import_blocks(*f, "C 0 : 0 1 1 2\n"); }) == 1);
  CHECK(line_of([&] { import_blocks(*f, "C 5 : 0 1 2 3\n"); }) == 1);
  CHECK(line_of([&] { import_blocks(*f, "C 0 : 0 1 2 99\n"); }) == 1);
  CHECK(line_of([&] { import_incidence("I 1\n"); }) == 1);
}

TEST_CASE("a corrupted gnarl is detected after import") {
  const auto f = Field::standard(0);
  auto blocks = all_blocks(*f, BlockKind::circle);
  auto& b = blocks[17];
  b.gnarl = b.points[0] == b.gnarl ? b.points[1] : b.points[0];
  const auto back = import_blocks(*f, export_blocks(blocks));
  CHECK_THROWS_AS(validate_block(*f, back[17]), DataError);
  CHECK_NOTHROW(validate_block(*f, back[16]));
}
