#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcross/coloring.hpp"
#include "kcross/doubling.hpp"
#include "kcross/geom.hpp"

/// Line-oriented instance files:
///
///   kcross instance 1
///   k 2
///   n 4
///   points
///   0 0
///   7 1
///   3 9
///   11 6
///   colors
///   1 2 1 2 1 1
///   matching        # optional, 0-based targets
///   1 2 3 0
///   details         # optional, one "color {L|R|S} {L|R}" line per vertex
///   1 L L
///   2 S R
///   1 R L
///   2 L R
///   end
///
/// '#' starts a comment; blank lines are skipped. Colors are listed in
/// lexicographic pair order (0,1), (0,2), ..., and may wrap across lines.

namespace kcross {

struct Instance {
    PointSet points;
    EdgeColoring coloring;
    std::optional<Matching> matching;
    std::optional<std::vector<VertexDetails>> details;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what);
};

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);

void serialize_instance(const Instance& inst, std::ostream& out);

/// Writes to a temporary file in place, then renames over the target.
void save_instance(const Instance& inst, const std::string& path);

} // namespace kcross
