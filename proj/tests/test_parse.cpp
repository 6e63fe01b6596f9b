#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "coxfold/catalog.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/parse.hpp"

using namespace coxfold;

namespace {

/// Line and column of the ParseError raised by `text`, or {0, 0}.
std::pair<int, int> error_at(const std::string& text) {
  try {
    parse_graph_text(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("E6 with its flip") {
  const SymmetricGraph p = parse_graph_text(
      "# E6 in Bourbaki numbering\n"
      "vertices 1..6\n"
      "edge 1-3; edge 3-4; edge 4-5; edge 5-6\n"
      "edge 2-4\n"
      "symmetry g: (1 6)(3 5)\n"
      "name E6\n");
  CHECK(p.graph == catalog_graph("E6").graph);
  CHECK(p.graph.name() == "E6");
  CHECK(p.group.order() == 2);
}

TEST_CASE("labels, infinity and negative ids") {
  const SymmetricGraph p = parse_graph_text("vertices -2, -1, 0\nedge -2--1 label inf\nedge -1-0 label 4\n");
  CHECK(p.graph.label_of(-2, -1).is_infinite());
  CHECK(p.graph.label_of(-1, 0) == Label(4));
  CHECK(p.group.is_trivial());
}

TEST_CASE("group selection and infinite vertices") {
  const SymmetricGraph p = parse_graph_text(
      "vertices 1..4\nedge 1-2\nedge 2-3\nedge 3-4\n"
      "symmetry flip: (1 4)(2 3)\n"
      "group:\n"
      "infinite 4\n");
  CHECK(p.group.is_trivial());
  CHECK(p.group.infinite_positions() == std::vector<int>{3});
  const SymmetricGraph q = parse_graph_text("vertices 1..3\nedge 1-2\nedge 2-3\nsymmetry f: (1 3)\ngroup: f\n");
  CHECK(q.group.order() == 2);
}

TEST_CASE("catalog statement") {
  const SymmetricGraph p = parse_graph_text("catalog tD4:g1g2\n");
  CHECK(p.group.order() == 6);
  CHECK(p.graph == catalog_graph("tD4").graph);
}

TEST_CASE("errors carry line and column") {
  CHECK(error_at("vertices 1..3\nedge 1-4\n") == std::pair{2, 8});
  CHECK(error_at("vertices 1..3\nedge 1-1\n").first == 2);
  CHECK(error_at("vertices 1, 2, 2\n").first == 1);
  CHECK(error_at("vertices 1..2\nedge 1-2 label 1\n").first == 2);
  CHECK(error_at("vertices 1..2\nedge 1-2 label 3\nedge 2-1 label 4\n").first == 3);
  CHECK(error_at("vertices 1..3\nedge 1-2\nsymmetry s: (1 3)\n").first == 3);
  CHECK(error_at("vertices 1..3\ngroup: t\n") == std::pair{2, 8});
  CHECK(error_at("vertices 1..3\nfrobnicate\n") == std::pair{2, 1});
  CHECK(error_at("vertices 1..3 $\n").first == 1);
  CHECK(error_at("catalog E6\nedge 1-2\n").first == 2);
  CHECK(error_at("").first == 1);
}

TEST_CASE("load_input reads files and falls back to catalog tokens") {
  const std::string path = "coxfold_parse_test.cox";
  {
    std::ofstream out(path);
    out << "vertices 1..3\nedge 1-2\nedge 2-3\nsymmetry g: (1 3)\n";
  }
  const SymmetricGraph p = load_input(path);
  CHECK(p.group.order() == 2);
  std::remove(path.c_str());
  CHECK(load_input("A3:g").group.order() == 2);
  CHECK_THROWS_AS(load_input("nosuch"), CatalogError);
  CHECK_THROWS_AS(load_input("tD4:g1g2", 2), CapExceeded);
}
