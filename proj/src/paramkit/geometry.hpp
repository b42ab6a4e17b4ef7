#pragma once

#include <optional>
#include <vector>

#include "paramkit/params.hpp"

namespace paramkit {

class Tangency : public std::runtime_error {
 public:
  Tangency() : std::runtime_error("simultaneous crossings; perturb the endpoints") {}
};

enum class GeoKind { StrandStrand, StrandGhost, StrandRed };

// A crossing event on the straight-line interpolation, in strand identity
// (not position) terms; `time` orders the events from bottom to top.
struct GeoEvent {
  GeoKind kind;
  Rational time;
  int a = 0;      // strand id (bottom rank)
  int b = 0;      // other strand id (ghost owner) or red index
  int dir = 0;    // +1: strand a moves rightward across the other line
};

struct GeoOptions {
  bool ghosts = false;               // weighted families only
  std::optional<Rational> kappa;     // required when ghosts is set
  std::vector<Rational> reds;        // red line x-values
};

// All crossing events of the straight-line diagram taking bottom position
// rank i to top position rank match[i] (1-based), ordered by time.  Throws
// Tangency when two events collide at the same time on a shared line or at
// the boundary.
std::vector<GeoEvent> geometry_events(const std::vector<Rational>& bottom,
                                      const std::vector<Rational>& top,
                                      const std::vector<int>& match,
                                      const GeoOptions& opt);

}  // namespace paramkit
