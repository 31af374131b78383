#include "selfdual/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || (end != line.data() + line.size() && *end != ' ' && *end != '\t')) {
      throw ParseError("expected a non-negative integer in '" + std::string(line) + "'", line_no);
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(end - line.data());
  }
  return values;
}

}  // namespace

Hypergraph parse_instance(std::istream& in, const ParseOptions& options) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned n = 0;
  std::uint64_t m = 0;
  std::vector<EdgeMask> edges;
  std::unordered_set<EdgeMask> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() == '#') {
      continue;
    }
    if (!have_header) {
      if (line.empty()) {
        continue;
      }
      const auto header = parse_numbers(line, line_no);
      if (header.size() != 2) {
        throw ParseError("header must be 'n m'", line_no);
      }
      if (header[0] == 0) {
        throw ParseError("n must be at least 1", line_no);
      }
      if (header[0] > kMaxVertices) {
        throw ParseError("n exceeds " + std::to_string(kMaxVertices), line_no);
      }
      n = static_cast<unsigned>(header[0]);
      m = header[1];
      have_header = true;
      continue;
    }
    if (edges.size() == m) {
      if (!line.empty()) {
        throw ParseError("more edge lines than the declared " + std::to_string(m), line_no);
      }
      continue;
    }
    if (line.empty()) {
      throw ParseError("empty edge", line_no);
    }
    EdgeMask edge = 0;
    std::int64_t previous = -1;
    for (const std::uint64_t v : parse_numbers(line, line_no)) {
      if (v >= n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1), line_no);
      }
      if (static_cast<std::int64_t>(v) == previous) {
        throw ParseError("duplicate vertex " + std::to_string(v) + " in edge", line_no);
      }
      if (static_cast<std::int64_t>(v) < previous) {
        throw ParseError("vertex ids must be strictly increasing", line_no);
      }
      previous = static_cast<std::int64_t>(v);
      edge |= vertex_bit(static_cast<unsigned>(v));
    }
    if (!seen.insert(edge).second) {
      throw ParseError("duplicate edge " + format_edge(edge), line_no);
    }
    edges.push_back(edge);
  }

  if (!have_header) {
    throw ParseError("missing 'n m' header", line_no);
  }
  if (edges.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), line_no);
  }

  Hypergraph h(n, std::move(edges));
  if (options.require_pidnf) {
    require_intersecting_sperner(h);
  }
  return h;
}

Hypergraph read_instance_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return parse_instance(in, options);
}

void write_instance(std::ostream& out, const Hypergraph& h, std::span<const std::string> comments) {
  for (const auto& comment : comments) {
    out << "# " << comment << '\n';
  }
  out << h.n() << ' ' << h.size() << '\n';
  for (const EdgeMask e : h.edges()) {
    bool first = true;
    for (EdgeMask rest = e; rest != 0; rest &= rest - 1) {
      if (!first) {
        out << ' ';
      }
      out << std::countr_zero(rest);
      first = false;
    }
    out << '\n';
  }
}

void write_instance_file(const std::filesystem::path& path, const Hypergraph& h, std::span<const std::string> comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  write_instance(out, h, comments);
  if (!out.flush()) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

}  // namespace selfdual
