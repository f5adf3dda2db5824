#ifndef GCA_TESTS_FIXTURES_HPP
#define GCA_TESTS_FIXTURES_HPP

#include <string>

#include "gca/graph.hpp"

namespace fixture {

inline gca::Graph edge() { return gca::parse_graph("vertex u; vertex v; edge e : u -> v"); }
inline gca::Graph two() { return gca::parse_graph("vertex u; vertex v; vertex w; edge e : u -> v; edge f : u -> w"); }
inline gca::Graph o2() { return gca::parse_graph("vertex u; edge a : u -> u; edge b : u -> u"); }
inline gca::Graph oinf() { return gca::parse_graph("vertex u; edge a : u -> u * omega"); }
inline gca::Graph loop() { return gca::parse_graph("vertex u; edge a : u -> u"); }
inline gca::Graph chain() { return gca::parse_graph("vertex u; vertex v; vertex w; edge a : u -> v; edge b : v -> w"); }
inline gca::Graph trans() { return gca::parse_graph("vertex u; vertex v; edge a : u -> u; edge e : u -> v"); }

inline std::string corpus_dir() { return GCA_CORPUS_DIR; }

}  // namespace fixture

#endif
