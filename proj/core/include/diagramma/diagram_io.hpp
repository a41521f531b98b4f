#pragma once

// Diagram text format:
//
//   over <presentation-file>
//   top <word>
//   bot <word>
//   t <id> <relation-id> <F|B>
//   w <upper-port> <lower-port> <letter> [| <label>]
//
// Ports are FT:<i>, FB:<i>, T<id>:top:<i> and T<id>:bot:<i>. Blank lines and
// `#` comments are ignored. Labeled diagrams carry the `| <label>` field on
// every wire line.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "diagramma/diagram.hpp"

namespace diagramma {

struct DiagramDocument {
  /// The `over` path exactly as written in the file.
  std::string over;
  PresentationPtr presentation;
  Diagram diagram;
  bool labeled = false;
};

/// Reads a document, loading the presentation named on the `over` line
/// relative to `base_dir`. Throws ParseError with the offending line.
DiagramDocument read_diagram(std::istream& in, const std::filesystem::path& base_dir);
DiagramDocument read_diagram_file(const std::filesystem::path& path);

/// Reads the body against an already loaded presentation; the `over` line is
/// kept but not followed.
DiagramDocument read_diagram_with(std::istream& in, PresentationPtr presentation);

void write_diagram(std::ostream& out, const Diagram& d, const std::string& over,
                   bool labeled = false);

std::string format_port(const Port& p);

}  // namespace diagramma
