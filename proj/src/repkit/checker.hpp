#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repkit/engine.hpp"

namespace repkit {

struct RelationReport {
  std::string id;
  std::string context;
  bool pass = false;
  int certified_degree = 0;
  int probe_count = 0;
  std::string counterexample;            // empty on PASS
  std::optional<int> degree;             // homogeneous degree, KLR side
  bool homogeneous = true;
  std::string json() const;
};

struct SuiteReport {
  std::vector<RelationReport> records;
  bool all_pass() const;
  int fail_count() const;
  std::string summary_json() const;
};

struct SuiteOptions {
  int probe_box = 2;        // Hecke-side Laurent exponent box
  int probe_degree = -1;    // KLR-side probe degree; -1 = cutoff - 2
  int mutation = -1;
  int workers = 1;
};

// Evaluates lhs - rhs of one instantiated relation on the probe set.
RelationReport check_relation(const Engine& eng, const diagramkit::RelationInstance& inst,
                              const SuiteOptions& opt);

// All registry relations of the engine's family over all label contexts.
SuiteReport run_suite(const Engine& eng, const SuiteOptions& opt = {});

// Operator-level dictionary checks for Theorems relating the type O
// diagrammatics, the algebraic Hecke presentation, and the WAHA composite
// crossing under both kappa signs.
SuiteReport check_dictionary_type_o(const EngineCfg& base_cfg, const SuiteOptions& opt = {});

// Rank over the scalar field of the probe-evaluation matrix of the given
// basis diagrams; full rank certifies linear independence.
int basis_rank(const Engine& eng, const std::vector<diagramkit::BasisDiagram>& basis,
               const std::vector<XPoly>& probes);

}  // namespace repkit
