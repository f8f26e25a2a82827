#include "reekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace reekit {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t n = 0;
  while (!text.empty()) {
    ++n;
    const auto end = text.find('\n');
    const std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({n, t});
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto w : split(s, ' ')) {
    w = trim(w);
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

std::uint64_t parse_index(const Line& l, std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(l.number, "bad index '" + std::string(s) + "'");
  }
  return v;
}

FieldElement parse_element(const Field& f, const Line& l, std::string_view s) {
  try {
    return f.parse(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.number, e.what());
  }
}

// Tag followed by one space-separated payload.
std::string_view payload(const Line& l, std::string_view tag) {
  if (l.text.substr(0, tag.size()) != tag || l.text.size() <= tag.size() || l.text[tag.size()] != ' ') {
    throw ParseError(l.number, "expected '" + std::string(tag) + " ...'");
  }
  return trim(l.text.substr(tag.size() + 1));
}

OvoidPoint omega_point(const Field& f, const Line& l, std::size_t index) {
  const std::size_t n = static_cast<std::size_t>(f.order()) * f.order() * f.order() + 1;
  if (index >= n) throw ParseError(l.number, "point index " + std::to_string(index) + " out of range");
  return ovoid_at(f, index);
}

}  // namespace

std::string export_elements(const std::vector<HexElement>& elements) {
  std::string s;
  for (const auto& e : elements) s += e.to_string() + '\n';
  return s;
}

std::vector<HexElement> import_elements(const Field& field, std::string_view text) {
  std::vector<HexElement> out;
  for (const auto& l : content_lines(text)) {
    ElementKind kind;
    if (l.text.starts_with("P ")) {
      kind = ElementKind::point;
    } else if (l.text.starts_with("L ")) {
      kind = ElementKind::line;
    } else {
      throw ParseError(l.number, "expected 'P ...' or 'L ...'");
    }
    const auto body = trim(l.text.substr(2));
    std::vector<FieldElement> c;
    if (body != "inf") {
      for (auto w : split(body, ',')) c.push_back(parse_element(field, l, trim(w)));
      if (c.size() > 5) throw ParseError(l.number, "more than five coordinates");
    }
    out.push_back({kind, std::move(c)});
  }
  return out;
}

std::string export_incidence(const HexagonGraph& graph) {
  std::ostringstream os;
  const std::size_t n = graph.points_count();
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint32_t> adj(graph.adjacent(v).begin(), graph.adjacent(v).end());
    std::sort(adj.begin(), adj.end());
    for (auto w : adj) os << "I " << v << ' ' << (w - n) << '\n';
  }
  return os.str();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> import_incidence(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& l : content_lines(text)) {
    const auto w = words(payload(l, "I"));
    if (w.size() != 2) throw ParseError(l.number, "expected 'I point line'");
    out.emplace_back(parse_index(l, w[0]), parse_index(l, w[1]));
  }
  return out;
}

std::string export_omega(const std::vector<OvoidPoint>& points) {
  std::string s;
  for (const auto& p : points) s += "O " + p.to_string() + '\n';
  return s;
}

std::vector<OvoidPoint> import_omega(const Field& field, std::string_view text) {
  std::vector<OvoidPoint> out;
  for (const auto& l : content_lines(text)) {
    const auto body = payload(l, "O");
    if (body == "inf") {
      out.push_back(OvoidPoint::infinity());
      continue;
    }
    std::string normalized(body);
    std::replace(normalized.begin(), normalized.end(), '|', ',');
    const auto parts = split(normalized, ',');
    if (parts.size() != 3) throw ParseError(l.number, "expected three coordinates");
    out.push_back(OvoidPoint::triple(parse_element(field, l, trim(parts[0])),
                                     parse_element(field, l, trim(parts[1])),
                                     parse_element(field, l, trim(parts[2]))));
  }
  return out;
}

std::string export_blocks(const std::vector<Block>& blocks) {
  std::ostringstream os;
  for (const auto& b : blocks) {
    os << (b.kind == BlockKind::circle ? 'C' : 'S') << ' ' << ovoid_index(b.gnarl) << " :";
    for (const auto& p : b.points) os << ' ' << ovoid_index(p);
    os << '\n';
  }
  return os.str();
}

std::vector<Block> import_blocks(const Field& field, std::string_view text) {
  std::vector<Block> out;
  for (const auto& l : content_lines(text)) {
    Block b;
    if (l.text.starts_with("C ")) {
      b.kind = BlockKind::circle;
    } else if (l.text.starts_with("S ")) {
      b.kind = BlockKind::sphere;
    } else {
      throw ParseError(l.number, "expected 'C ...' or 'S ...'");
    }
    const auto w = words(l.text.substr(2));
    if (w.size() < 2 || w[1] != ":") throw ParseError(l.number, "expected 'gnarl : points'");
    b.gnarl = omega_point(field, l, parse_index(l, w[0]));
    for (std::size_t i = 2; i < w.size(); ++i) {
      b.points.push_back(omega_point(field, l, parse_index(l, w[i])));
    }
    std::sort(b.points.begin(), b.points.end());
    if (std::adjacent_find(b.points.begin(), b.points.end()) != b.points.end()) {
      throw ParseError(l.number, "repeated point");
    }
    if (!b.contains(b.gnarl)) throw ParseError(l.number, "gnarl not among the points");
    out.push_back(std::move(b));
  }
  return out;
}

std::string export_unital(const std::vector<std::vector<OvoidPoint>>& blocks) {
  std::ostringstream os;
  for (const auto& b : blocks) {
    os << 'b';
    for (const auto& p : b) os << ' ' << ovoid_index(p);
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<OvoidPoint>> import_unital(const Field& field, std::string_view text) {
  std::vector<std::vector<OvoidPoint>> out;
  for (const auto& l : content_lines(text)) {
    std::vector<OvoidPoint> b;
    for (auto w : words(payload(l, "b"))) b.push_back(omega_point(field, l, parse_index(l, w)));
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ParseError(l.number, "repeated point");
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace reekit
