#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diagramkit/diagram.hpp"

namespace diagramkit {

// One relation of the presentation, instantiated at a concrete position and
// label context; check_relation certifies lhs == rhs as operators.
struct RelationInstance {
  std::string id;
  std::string context;
  DiagExpr lhs;
  DiagExpr rhs;
};

struct RegistryCfg {
  DiagramCfg dcfg;
  ringkit::Field field;
  ringkit::TruncSeries qq;                  // q d(h)
  std::vector<ringkit::TruncSeries> Qtilde; // per red entry, Q_s b(sigma z_s)
  bool deform = true;                       // keep h in KLR deformation factors
  bool reverse_edges = true;                // KLR multiplier on u_{k+1} = q u_k
  Loading base;                             // positions only; labels added per context
  int mutation = -1;                        // seeded mutation index, -1 = none
};

// Number of seeded mutations available for checker sanity tests.
constexpr int kMutationCount = 10;
// Family and relation id targeted by a mutation.
std::pair<Family, std::string> mutation_target(int mutation);

// The complete, context-instantiated relation list for the family.
std::vector<RelationInstance> relation_registry(const RegistryCfg& cfg, Family family);

}  // namespace diagramkit
