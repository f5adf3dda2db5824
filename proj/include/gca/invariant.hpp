#ifndef GCA_INVARIANT_HPP
#define GCA_INVARIANT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/graph.hpp"

namespace gca {

// A vertex set N with a finite exclusion set F_u of exits for each u in N.
// Only nonempty F_u are stored.
struct Invariant {
  VertexSet members;
  std::map<VertexId, std::vector<EdgeInstance>> excluded;

  static Invariant empty(const Graph& g) { return Invariant{g.empty_set(), {}}; }
  static Invariant full(const Graph& g) { return Invariant{g.all_vertices(), {}}; }

  bool contains(VertexId v) const { return members.contains(v.value); }
  const std::vector<EdgeInstance>& excluded_at(VertexId v) const;
  void normalize();
  bool operator==(const Invariant& other) const;
};

enum class Clause {
  Malformed,
  FiniteValence,   // a member with finitely many exits excludes nothing
  ExitClosure,     // a non-excluded exit leads to a member excluding nothing
  ExcludedTarget,  // an excluded exit landing in N lands on a member that excludes something
  Saturation,      // a regular vertex all of whose exits land on such members is itself a member
};

std::string clause_name(Clause c);

struct Violation {
  Clause clause;
  VertexId vertex;
  std::optional<EdgeInstance> edge;
  std::string message;
};

// First violated clause in the order listed above, vertices in id order.
std::optional<Violation> check_invariant(const Graph& g, const Invariant& inv);
bool is_invariant(const Graph& g, const Invariant& inv);

// N1 inside N2 and F1_u containing F2_u for u in N1.
bool invariant_leq(const Invariant& a, const Invariant& b);

std::string format_invariant(const Graph& g, const Invariant& inv);

}  // namespace gca

#endif
