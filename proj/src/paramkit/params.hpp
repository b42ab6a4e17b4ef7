#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringkit/scalar.hpp"

namespace paramkit {

using ringkit::Field;
using ringkit::Rational;
using ringkit::Scalar;

class InvalidQ : public std::runtime_error {
 public:
  InvalidQ() : std::runtime_error("q must differ from 0 and 1") {}
};

class DuplicateSpectrum : public std::runtime_error {
 public:
  DuplicateSpectrum() : std::runtime_error("spectrum entries must be nonzero and distinct") {}
};

// The spectrum U with an edge u -> u' whenever u' = q u, together with the
// multiplicative order of q (0 encodes infinite order).
struct ParamGraph {
  Field field;
  Scalar q;
  std::vector<Scalar> U;
  std::vector<std::pair<int, int>> edges;  // indices into U
  long order_of_q = 0;                     // 0 = infinite

  bool has_edge(const Scalar& u, const Scalar& v) const;  // u -> v, i.e. v = q u
  int index_of(const Scalar& u) const;                    // -1 if absent
};

ParamGraph make_param_graph(const Field& f, const Scalar& q, std::vector<Scalar> U);

enum class DChoice { One, Exp };

// The series b(t) = 1 + t + ..., and d(h) with qd(h) the Hecke parameter.
struct SeriesChoice {
  enum class Kind { OnePlus, Exp, Custom };
  Kind kind = Kind::OnePlus;
  DChoice d = DChoice::One;
  std::vector<Scalar> custom;  // includes constant term when kind == Custom

  bool deformed() const { return d == DChoice::Exp; }
  // coefficients b[0..cutoff]; throws in positive characteristic for Exp
  std::vector<Scalar> b_coeffs(const Field& f, int cutoff) const;
  std::vector<Scalar> d_coeffs(const Field& f, int cutoff) const;
  bool b_exact() const { return kind == Kind::OnePlus; }
  void validate(const Field& f) const;
};

// A loading: strictly increasing exact positions, with U-labels when the
// representation is spectral.
struct Loading {
  std::vector<Rational> positions;
  std::vector<Scalar> labels;  // empty, or one per position

  int size() const { return int(positions.size()); }
  bool labeled() const { return !labels.empty(); }
  bool operator==(const Loading&) const = default;
  bool operator<(const Loading& o) const;
  Loading permuted(const std::vector<int>& w) const;  // labels follow strands
  void validate() const;
};

// Red (framing) strand data: position, label, and the z-variable it owns.
struct RedEntry {
  Rational theta;
  Scalar Q;
  int z_index;  // 1-based into z_1..z_ell
};

struct RedData {
  std::vector<RedEntry> entries;  // sorted by theta; equal thetas share a line
  int size() const { return int(entries.size()); }
  void validate() const;

  // distinct x-values, each carrying the multiset of entries drawn there
  int line_count() const;
  Rational line_theta(int line) const;                 // 1-based
  std::vector<int> line_entries(int line) const;       // entry indices
  std::vector<Rational> line_thetas() const;
};

struct Weighting {
  Rational kappa = Rational(-1);
  bool negative() const { return kappa < 0; }
};

// sequence swap u -> u^{s_r}, 1-based r
std::vector<Scalar> seq_swap(std::vector<Scalar> u, int r);

// A loading is unsteady when a nonempty left group of strands is separated
// from every other strand and every red line by a gap exceeding |kappa|.
bool unsteady(const Loading& loading, const RedData& reds, const Weighting& kappa);

}  // namespace paramkit
