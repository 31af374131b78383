#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "selfdual/hypergraph.hpp"

namespace selfdual {

struct ParseOptions {
  // Also reject Sperner and pairwise-intersection violations.
  bool require_pidnf = false;
};

// Instance text format:
//
//   # optional comment lines, anywhere
//   n m
//   <m lines, each a strictly increasing list of 0-based vertex ids>
//
// Throws ParseError (with the 1-based line number) on malformed input,
// out-of-range or repeated vertices, empty or duplicate edges, and, under
// require_pidnf, PreconditionError for structural violations.
Hypergraph parse_instance(std::istream& in, const ParseOptions& options = {});

Hypergraph read_instance_file(const std::filesystem::path& path, const ParseOptions& options = {});

// Each comment is written as "# <comment>" ahead of the data lines.
void write_instance(std::ostream& out, const Hypergraph& h, std::span<const std::string> comments = {});

void write_instance_file(const std::filesystem::path& path, const Hypergraph& h,
                         std::span<const std::string> comments = {});

}  // namespace selfdual
