#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repkit/checker.hpp"
#include "repkit/engine.hpp"

namespace isokit {

using diagramkit::Family;
using paramkit::Loading;
using repkit::Engine;
using repkit::EngineCfg;
using ringkit::Scalar;
using ringkit::TruncSeries;
using ringkit::XPoly;

enum class ACoeffCase { Equal, QEdgeD1, QEdgeDExp, Generic };

struct ACoeff {
  int r;
  std::vector<Scalar> labels;
  ACoeffCase tag;
  TruncSeries value;  // always a unit
};

struct IsoRecord {
  std::string generator;
  std::string context;
  bool pass = false;
  int certified_degree = 0;
  std::string unit_constant;  // constant term of a certified unit, when relevant
  std::string note;
  std::string json(const std::string& family, int sigma) const;
};

struct IsoReport {
  std::vector<IsoRecord> records;
  bool all_pass() const;
};

// The two-family isomorphism engine.  The configured family names the
// KLR side (Klr, Wklr, TLambda, WfKlr); Hecke-side operators act through
// their completed polynomial representation realized on the series module,
// with X_i acting as u_i b(y_i).
class Iso {
 public:
  explicit Iso(EngineCfg cfg);

  const Engine& engine() const { return eng_; }
  const ringkit::VarCtx& ctx() const { return eng_.ctx(); }
  const ringkit::Field& field() const { return eng_.field(); }

  using YVec = Engine::YVec;

  // b(y_i) and the divided difference (b(y_{r+1}) - b(y_r))/(y_{r+1} - y_r)
  const TruncSeries& b_at(int i) const;
  TruncSeries beta(int r) const;

  // ---- transported Hecke-side operators ----
  YVec h_mult_x(int r, int exp, const YVec& v) const;
  YVec h_phi(int r, const YVec& v) const;
  YVec h_cross(int r, const YVec& v) const;                       // WAHA crossing
  YVec h_ghost(int r, int s, bool mult_dir, const YVec& v) const;
  YVec h_red(int line, int strand, int dir, const YVec& v, const Loading& top) const;

  // ---- images of the generators in the KLR algebra ----
  ACoeff a_coeff(int r, const std::vector<Scalar>& labels) const;
  YVec k_phi(int r, const YVec& v) const;
  YVec k_cross(int r, const YVec& v) const;
  YVec k_ghost(int r, int s, bool mult_dir, const YVec& v) const;
  // the red-crossing coefficient, a certified unit
  TruncSeries red_coeff(int line, const Scalar& u, int strand) const;
  YVec k_red(int line, int strand, int dir, const YVec& v, const Loading& top) const;

  // gamma_p as the monomial substitution map, with its two-sided inverse
  TruncSeries gamma_p(const XPoly& f, const std::vector<Scalar>& labels) const;
  XPoly gamma_p_inv(const TruncSeries& f, const std::vector<Scalar>& labels) const;

 private:
  Engine eng_;
  std::vector<TruncSeries> b_cache_;
  std::vector<Scalar> binv_coeffs_;  // compositional data for gamma_p_inv
};

// gamma_p . g == gamma(g) . gamma_p for every generator of the family, on
// every component and probe.
IsoReport check_intertwine(const EngineCfg& cfg);

// gamma(C(X_1)) e_u against c_{u_1}(y_1): the quotient is a certified unit
// under the configured sign convention; the opposite sign must fail.
struct CycloResult {
  TruncSeries unit;
  bool unit_certified = false;
  bool other_sign_fails = false;
  std::vector<IsoRecord> records;
};
CycloResult cyclo_correspondence(const EngineCfg& cfg, const Scalar& u1);

// the pull-leftmost-strand-around diagram equals multiplication by
// prod (X_1 - Qtilde_s), and its mid-slice loading is unsteady
IsoReport violating_generator_check(const EngineCfg& hecke_cfg);

// y_1^{k-1}...y_{k-1} d_{w0} on k strands, with an idempotency report
struct NilHeckeIdem {
  int k;
  XPoly apply(const Engine& eng, const XPoly& f) const;
};
IsoReport nilhecke_idem_check(const EngineCfg& waha_cfg, int kmax);

// Young-subgroup (anti)symmetrizers and their absorption identities
IsoReport symmetrizer_check(const EngineCfg& o_cfg, const std::vector<int>& composition);

// gamma_p_inv . gamma_p == id on Laurent probes
IsoReport gamma_p_roundtrip(const EngineCfg& cfg);

}  // namespace isokit
