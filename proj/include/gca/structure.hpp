#ifndef GCA_STRUCTURE_HPP
#define GCA_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gca/graph.hpp"
#include "gca/path.hpp"
#include "gca/point.hpp"

namespace gca {

enum class CycleKind { Terminal, Transitory, Returning };
std::string cycle_kind_name(CycleKind k);

// Vertex-simple directed cycle at bundle level. Parallel instances of the
// same bundles give identical cycles; they are folded into one entry.
struct Cycle {
  std::vector<BundleId> bundles;
  std::vector<VertexId> vertices;  // vertices[i] = origin of bundles[i]
  bool omega_instances = false;    // some bundle has omega multiplicity
  std::uint64_t instance_count = 1;  // product of multiplicities when finite
  CycleKind kind = CycleKind::Terminal;
  std::optional<EdgeInstance> exit;  // an exit, preferring one that leads back

  // The cycle through instance 0 of each bundle.
  Path path(const Graph& g) const;
};

std::vector<Cycle> find_cycles(const Graph& g, std::size_t cap = 100000);

struct Verdict {
  bool holds = false;
  std::string reason;
};

struct StructureReport {
  std::vector<Cycle> cycles;
  Verdict af;
  Verdict locally_contractive;
  Verdict cofinal;
  Verdict essentially_free;
  Verdict essentially_principal;
  Verdict simple;
  Verdict purely_infinite_simple;
};

StructureReport analyze(const Graph& g, std::size_t cap = 100000);

Verdict is_af(const Graph& g, const std::vector<Cycle>& cycles);
Verdict is_locally_contractive(const Graph& g, const std::vector<Cycle>& cycles);
Verdict is_cofinal(const Graph& g);
Verdict is_essentially_free(const Graph& g, const std::vector<Cycle>& cycles);
Verdict is_essentially_principal(const Graph& g, const std::vector<Cycle>& cycles);
Verdict is_simple(const Graph& g, const std::vector<Cycle>& cycles);
Verdict is_purely_infinite_simple(const Graph& g, const std::vector<Cycle>& cycles);

// Vertices lying on some cycle (including loops).
VertexSet cyclic_vertices(const Graph& g);

struct Isotropy {
  bool nontrivial = false;
  std::optional<Path> witness;  // stem . cycle . stem^-1
};
Isotropy isotropy(const BoundaryPoint& x);

// Infinite word alpha (beta gamma)^1 delta gamma (beta gamma)^2 delta gamma ...
// which is not eventually periodic.
struct AperiodicWord {
  Path alpha;
  Path beta;
  Path gamma;
  Path delta;
  std::vector<SignedEdge> prefix(std::size_t n) const;
  std::string describe(const Graph& g, std::size_t letters) const;
};

struct FreePoint {
  std::optional<BoundaryPoint> finite;
  std::optional<AperiodicWord> aperiodic;
};

// A boundary point over u with trivial isotropy. Requires no terminal cycles.
FreePoint free_point_from(const Graph& g, VertexId u, std::size_t cap = 100000);

struct IdealDimension {
  VertexId vertex;
  std::optional<std::uint64_t> count;  // nullopt means infinitely many paths
};

// For u in sigma \ S: the number of directed paths ending at u.
std::vector<IdealDimension> toeplitz_ideal_report(const Graph& g, const VertexSet& s);

}  // namespace gca

#endif
