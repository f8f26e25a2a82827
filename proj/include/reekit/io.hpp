#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored on input.
//
//   P 1,0,2 / L inf     hexagon elements
//   I 12 345            incidence by canonical point and line index
//   O inf / O 1,0,2     Omega points (O 1|0,2 is accepted as well)
//   C 3 : 3 7 9 11      block by gnarl index and point indices into Omega
//   b 0 1 5 9           unital block

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reekit/field.hpp"
#include "reekit/geometry.hpp"
#include "reekit/hexagon.hpp"
#include "reekit/ovoid.hpp"

namespace reekit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string export_elements(const std::vector<HexElement>& elements);
std::vector<HexElement> import_elements(const Field& field, std::string_view text);

/// One `I` line per flag, points before lines in canonical order.
std::string export_incidence(const HexagonGraph& graph);
std::vector<std::pair<std::uint64_t, std::uint64_t>> import_incidence(std::string_view text);

std::string export_omega(const std::vector<OvoidPoint>& points);
std::vector<OvoidPoint> import_omega(const Field& field, std::string_view text);

std::string export_blocks(const std::vector<Block>& blocks);
/// Parses only; point indices must be in range and listed once.
std::vector<Block> import_blocks(const Field& field, std::string_view text);

std::string export_unital(const std::vector<std::vector<OvoidPoint>>& blocks);
std::vector<std::vector<OvoidPoint>> import_unital(const Field& field, std::string_view text);

}  // namespace reekit
