#pragma once

#include <cstddef>
#include <string>

#include "coxfold/symmetry.hpp"

namespace coxfold {

/// Reads the line-oriented graph file format. Statements end at ';' or a newline and '#'
/// starts a comment:
///
///   vertices 1..6            (or a list: vertices 0, 2, 5)
///   edge 1-2                 (label 3)
///   edge 3-4 label 4         (label inf for an infinite bond; ids may be negative: -1--2)
///   symmetry g: (1 6)(3 5)
///   group: g                 (defaults to every declared symmetry)
///   infinite 7 8             (vertices whose orbit is infinite)
///   name E6
///   catalog E6               (start from a catalog graph and its named symmetries)
///
/// Throws ParseError with the line and column of the offending token.
SymmetricGraph parse_graph_text(const std::string& text,
                                std::size_t closure_cap = SymmetryGroup::kDefaultCap);

/// A catalog token such as "E6:g", or the path of a graph file when one exists.
SymmetricGraph load_input(const std::string& input,
                          std::size_t closure_cap = SymmetryGroup::kDefaultCap);

}  // namespace coxfold
