#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramkit/geometry.hpp"
#include "paramkit/params.hpp"
#include "ringkit/series.hpp"

namespace diagramkit {

using paramkit::Loading;
using paramkit::ParamGraph;
using paramkit::RedData;
using paramkit::Weighting;
using ringkit::Scalar;
using ringkit::TruncSeries;

enum class Family {
  HeckeOPlus,   // type O diagrams, crossing = T_r + 1
  HeckeOMinus,  // type O diagrams, crossing = T_r - q
  Waha,         // type W affine Hecke
  FHecke,       // type F affine Hecke (red lines, q-relations)
  WfHecke,      // type WF affine Hecke
  Klr,          // KLR algebra of the spectrum graph
  Wklr,         // weighted KLR
  TLambda,      // Stendhal / tensor-product algebra with red lines
  WfKlr         // weighted KLR with red lines
};

bool hecke_side(Family f);
bool has_ghosts(Family f);
bool has_reds(Family f);
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// One elementary slice of a diagram.  Indices refer to positions in the
// current left-to-right strand order at the time of the event.
struct Event {
  enum class Kind { StrandCross, StrandGhost, StrandRed, Dot, Square };
  Kind kind;
  int i = 0;     // acting strand position (left strand for StrandCross)
  int j = 0;     // ghost owner position / red index (1-based)
  int dir = 0;   // +1 when the strand moves rightward across the other line
  int exp = 1;   // Square exponent, +1 or -1

  static Event cross(int r) { return {Kind::StrandCross, r, 0, 0, 1}; }
  static Event ghost(int i, int j, int dir) { return {Kind::StrandGhost, i, j, dir, 1}; }
  static Event red(int i, int j, int dir) { return {Kind::StrandRed, i, j, dir, 1}; }
  static Event dot(int i) { return {Kind::Dot, i, 0, 0, 1}; }
  static Event square(int i, int e) { return {Kind::Square, i, 0, 0, e}; }

  bool operator==(const Event&) const = default;
};

class BadDiagram : public std::runtime_error {
 public:
  explicit BadDiagram(const std::string& what) : std::runtime_error(what) {}
};

// A composable word of events between two loadings.
struct Diagram {
  Family family;
  Loading bottom;
  Loading top;
  std::vector<Event> events;

  int strands() const { return bottom.size(); }

  // Local consistency: indices in range at every slice, red bookkeeping
  // coherent, and the final slice matching `top`.  Throws BadDiagram.
  void validate(const RedData& reds) const;

  // Permutation induced on strands (bottom rank -> top rank, 1-based).
  std::vector<int> induced_permutation() const;

  std::string str() const;
};

// Stacks a on top of b.  Returns nullopt (the distinguished ZERO) when the
// boundaries differ; throws on family mismatch.
std::optional<Diagram> compose(const Diagram& a, const Diagram& b);

// A formal sum of diagrams sharing boundary, with k[[h,z]] coefficients.
struct DiagExpr {
  Family family;
  std::vector<std::pair<TruncSeries, Diagram>> terms;

  static DiagExpr zero(Family f) { return DiagExpr{f, {}}; }
  static DiagExpr single(const Diagram& d, const TruncSeries& c);
  DiagExpr& add(const TruncSeries& c, const Diagram& d);
};

// Parameters shared by diagram constructions for one family.
struct DiagramCfg {
  Family family;
  const ParamGraph* graph = nullptr;
  ringkit::VarCtx ctx;
  Weighting kappa;
  RedData reds;
};

// The chosen reduced diagram D_w: the straight-line interpolation from
// `bottom` to its w-permutation, with the deterministic lexicographic
// perturbation of top endpoints applied on tangency.
Diagram d_w(const DiagramCfg& cfg, const std::vector<int>& w, const Loading& bottom);

// Identity diagram, and the straight-line diagram between two loadings of
// equal size with the identity matching.
Diagram identity_diagram(const DiagramCfg& cfg, const Loading& at);
Diagram straight_line(const DiagramCfg& cfg, const Loading& bottom, const Loading& top,
                      const std::vector<int>& match);

// All e_B D_w X^a with w in S_n and |a_i| <= expbox, tagged by (w, a).
struct BasisDiagram {
  std::vector<int> w;
  std::vector<int> a;
  Diagram diagram;
};
std::vector<BasisDiagram> enumerate_basis(const DiagramCfg& cfg, const Loading& bottom,
                                          int expbox);

class NotHomogeneous : public std::runtime_error {
 public:
  NotHomogeneous() : std::runtime_error("diagram expression is not homogeneous") {}
};

// Degree of a KLR-side diagram: dots count 2, crossings via the Cartan
// datum of the spectrum graph, ghost and red crossings per the weighted
// conventions.  Throws NotHomogeneous only at the DiagExpr level.
int grading(const DiagramCfg& cfg, const Diagram& d);
// degree of every term (diagram degree + twice the h,z-degree of each
// coefficient monomial); NotHomogeneous when they disagree.
int grading(const DiagramCfg& cfg, const DiagExpr& e);

std::vector<std::vector<int>> all_permutations(int n);
std::vector<int> inverse_permutation(const std::vector<int>& w);
int permutation_length(const std::vector<int>& w);
// lexicographically minimal reduced word (list of simple reflections)
std::vector<int> reduced_word(const std::vector<int>& w);

}  // namespace diagramkit
