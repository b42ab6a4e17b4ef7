#pragma once

#include <map>
#include <optional>

#include "diagramkit/diagram.hpp"
#include "diagramkit/registry.hpp"
#include "ringkit/xpoly.hpp"

namespace repkit {

using diagramkit::DiagExpr;
using diagramkit::Diagram;
using diagramkit::Event;
using diagramkit::Family;
using paramkit::Loading;
using ringkit::Scalar;
using ringkit::TruncSeries;
using ringkit::XPoly;

struct EngineCfg {
  Family family;
  paramkit::ParamGraph graph;
  paramkit::SeriesChoice series;
  ringkit::VarCtx ctx;
  paramkit::Weighting kappa;
  paramkit::RedData reds;
  int sigma = 1;              // Hecke-side deformation Qtilde = Q b(sigma z)
  bool deform = true;         // keep h in the KLR-side deformation factors
  bool reverse_edges = true;  // KLR multiplier fires on u_{k+1} = q u_k
  int rep_sign = -1;          // type O realization: -1 signed, +1 unsigned
  Loading base;               // default loading (positions; labels per use)
};

// Builds a default base loading: n strands right of every red line, spaced
// wider than |kappa|.
Loading default_base(const ringkit::VarCtx& ctx, const paramkit::RedData& reds,
                     const paramkit::Weighting& kappa);

// Evaluates diagrams of one family on its polynomial module.  Hecke-side
// modules carry Laurent polynomials, KLR-side modules truncated series;
// components are loadings (labeled on the KLR side).
class Engine {
 public:
  explicit Engine(EngineCfg cfg);

  const EngineCfg& cfg() const { return cfg_; }
  const ringkit::Field& field() const { return cfg_.graph.field; }
  const ringkit::VarCtx& ctx() const { return cfg_.ctx; }
  const TruncSeries& qq() const { return qq_; }
  const TruncSeries& Qtilde(int entry) const { return Qtilde_[entry]; }
  const std::vector<Scalar>& b_coeffs() const { return b_; }
  bool b_exact() const { return b_exact_; }
  diagramkit::DiagramCfg dcfg() const;
  diagramkit::RegistryCfg registry_cfg(int mutation = -1) const;

  using XVec = std::map<Loading, XPoly>;
  using YVec = std::map<Loading, TruncSeries>;

  XVec apply(const Diagram& d, const XVec& v) const;
  YVec apply(const Diagram& d, const YVec& v) const;
  XVec apply(const DiagExpr& e, const XVec& v) const;
  YVec apply(const DiagExpr& e, const YVec& v) const;

  // Affine Hecke generator T_r on the type O module; sign -1 gives the
  // signed representation action, +1 the unsigned one.
  XPoly hecke_T(int r, int sign, const XPoly& F) const;
  // multiplication by q d(h) as a series in h
  TruncSeries htilde() const;
  // product over the entries of a red line of (X_i - Qtilde_s)
  XPoly red_factor_x(int line, int i) const;
  // product over the line entries with Q_s = u of (y_i - z_s)
  TruncSeries red_factor_y(int line, const Scalar& u, int i) const;

  std::vector<XPoly> x_probes(int box) const;
  std::vector<TruncSeries> y_probes(int maxdeg) const;

 private:
  XPoly x_event(const Event& ev, const std::vector<int>& nu, const XPoly& F) const;
  TruncSeries y_event(const Event& ev, const std::vector<Scalar>& labels,
                      const TruncSeries& f) const;

  EngineCfg cfg_;
  TruncSeries qq_;
  std::vector<TruncSeries> Qtilde_;
  std::vector<Scalar> b_;
  bool b_exact_;
};

}  // namespace repkit
