#include "repkit/engine.hpp"

#include <cassert>

namespace repkit {

using diagramkit::hecke_side;
using paramkit::Rational;

Loading default_base(const ringkit::VarCtx& ctx, const paramkit::RedData& reds,
                     const paramkit::Weighting& kappa) {
  Rational lo(0);
  for (const auto& e : reds.entries) lo = std::max(lo, e.theta);
  Rational step = kappa.kappa < 0 ? -kappa.kappa : kappa.kappa;
  step = std::max(step, Rational(1)) * 2;
  Loading l;
  for (int i = 1; i <= ctx.n; ++i) l.positions.push_back(lo + step * i);
  return l;
}

Engine::Engine(EngineCfg cfg) : cfg_(std::move(cfg)) {
  const auto& f = cfg_.graph.field;
  cfg_.series.validate(f);
  if (cfg_.base.positions.empty()) cfg_.base = default_base(cfg_.ctx, cfg_.reds, cfg_.kappa);
  b_ = cfg_.series.b_coeffs(f, cfg_.ctx.cutoff);
  b_exact_ = cfg_.series.b_exact();

  TruncSeries h = TruncSeries::var_h(cfg_.ctx, f);
  auto d = cfg_.series.d_coeffs(f, cfg_.ctx.cutoff);
  qq_ = TruncSeries::subst(cfg_.ctx, f, d, cfg_.series.d == paramkit::DChoice::One, h)
            .scaled(cfg_.graph.q);

  for (const auto& e : cfg_.reds.entries) {
    TruncSeries z = TruncSeries::var_z(cfg_.ctx, f, e.z_index);
    if (cfg_.sigma < 0) z = -z;
    Qtilde_.push_back(TruncSeries::subst(cfg_.ctx, f, b_, b_exact_, z).scaled(e.Q));
  }
}

diagramkit::DiagramCfg Engine::dcfg() const {
  return diagramkit::DiagramCfg{cfg_.family, &cfg_.graph, cfg_.ctx, cfg_.kappa, cfg_.reds};
}

diagramkit::RegistryCfg Engine::registry_cfg(int mutation) const {
  diagramkit::RegistryCfg rc{dcfg(),    field(),     qq_,  Qtilde_,
                             cfg_.deform, cfg_.reverse_edges, cfg_.base, mutation};
  return rc;
}

TruncSeries Engine::htilde() const {
  return cfg_.deform ? TruncSeries::var_h(cfg_.ctx, field()) : TruncSeries(cfg_.ctx, field());
}

XPoly Engine::red_factor_x(int line, int i) const {
  XPoly out = XPoly::one(cfg_.ctx, field());
  for (int idx : cfg_.reds.line_entries(line)) {
    XPoly f = XPoly::var(cfg_.ctx, field(), i);
    f -= XPoly::monomial(cfg_.ctx, std::vector<int>(cfg_.ctx.n, 0), Qtilde_[idx]);
    out = out * f;
  }
  return out;
}

TruncSeries Engine::red_factor_y(int line, const Scalar& u, int i) const {
  TruncSeries out = TruncSeries::constant(cfg_.ctx, Scalar(field(), 1));
  for (int idx : cfg_.reds.line_entries(line)) {
    const auto& e = cfg_.reds.entries[idx];
    if (!(e.Q == u)) continue;
    out = out * (TruncSeries::var_y(cfg_.ctx, field(), i) -
                 TruncSeries::var_z(cfg_.ctx, field(), e.z_index));
  }
  return out;
}

XPoly Engine::hecke_T(int r, int sign, const XPoly& F) const {
  XPoly fs = F.swapped(r);
  XPoly dd = F.demazure(r);
  TruncSeries one = TruncSeries::constant(cfg_.ctx, Scalar(field(), 1));
  XPoly out = XPoly::var(cfg_.ctx, field(), r + 1) * dd;
  out = out.scaled(one - qq_);
  if (sign < 0)
    out -= fs;  // T F = -F^s + (1-q) X_{r+1} dd(F)
  else
    out += fs.scaled(qq_);  // T F = q F^s + (1-q) X_{r+1} dd(F)
  return out;
}

namespace {

std::vector<int> nu_of(const Loading& l, const paramkit::RedData& reds) {
  std::vector<int> nu;
  for (const auto& theta : reds.line_thetas()) {
    int c = 0;
    for (const auto& p : l.positions)
      if (p < theta) ++c;
    nu.push_back(c);
  }
  return nu;
}

}  // namespace

XPoly Engine::x_event(const Event& ev, const std::vector<int>& nu, const XPoly& F) const {
  switch (ev.kind) {
    case Event::Kind::Square: {
      return F * XPoly::var(cfg_.ctx, field(), ev.i, ev.exp);
    }
    case Event::Kind::StrandCross: {
      switch (cfg_.family) {
        case Family::HeckeOPlus: {
          return hecke_T(ev.i, cfg_.rep_sign, F) + F;  // T + 1
        }
        case Family::HeckeOMinus:
        case Family::FHecke: {
          return hecke_T(ev.i, cfg_.rep_sign, F) - F.scaled(qq_);  // T - q
        }
        case Family::Waha:
        case Family::WfHecke:
          return F.demazure(ev.i);
        default:
          throw std::logic_error("crossing on a KLR-side module");
      }
    }
    case Event::Kind::StrandGhost: {
      bool mult = (cfg_.kappa.negative() && ev.dir < 0) || (!cfg_.kappa.negative() && ev.dir > 0);
      if (!mult) return F;
      XPoly m = XPoly::var(cfg_.ctx, field(), ev.i) -
                XPoly::var(cfg_.ctx, field(), ev.j).scaled(qq_);
      return F * m;
    }
    case Event::Kind::StrandRed: {
      if (ev.dir < 0) return F;
      return F * red_factor_x(ev.j, ev.i);
    }
    case Event::Kind::Dot:
      throw std::logic_error("dot on a Hecke-side module");
  }
  throw std::logic_error("unreachable");
}

TruncSeries Engine::y_event(const Event& ev, const std::vector<Scalar>& labels,
                            const TruncSeries& f) const {
  const auto& g = cfg_.graph;
  switch (ev.kind) {
    case Event::Kind::Dot:
      return f * TruncSeries::var_y(cfg_.ctx, field(), ev.i);
    case Event::Kind::StrandCross: {
      const Scalar& u = labels[ev.i - 1];
      const Scalar& v = labels[ev.i];
      if (u == v) return f.demazure(ev.i);
      bool weighted = has_ghosts(cfg_.family);
      bool mult = false;
      if (!weighted)
        mult = cfg_.reverse_edges ? g.has_edge(u, v) : g.has_edge(v, u);
      TruncSeries out = f.swapped_y(ev.i);
      if (mult) {
        TruncSeries p = TruncSeries::var_y(cfg_.ctx, field(), ev.i + 1) -
                        TruncSeries::var_y(cfg_.ctx, field(), ev.i) + htilde();
        out = out * p;
      }
      return out;
    }
    case Event::Kind::StrandGhost: {
      bool mult_dir =
          (cfg_.kappa.negative() && ev.dir < 0) || (!cfg_.kappa.negative() && ev.dir > 0);
      if (!mult_dir) return f;
      const Scalar& u = labels[ev.i - 1];
      const Scalar& v = labels[ev.j - 1];
      if (!g.has_edge(v, u)) return f;  // fires only when u = q v
      TruncSeries p = TruncSeries::var_y(cfg_.ctx, field(), ev.j) -
                      TruncSeries::var_y(cfg_.ctx, field(), ev.i) + htilde();
      return f * p;
    }
    case Event::Kind::StrandRed: {
      if (ev.dir < 0) return f;
      return f * red_factor_y(ev.j, labels[ev.i - 1], ev.i);
    }
    case Event::Kind::Square:
      throw std::logic_error("square on a KLR-side module");
  }
  throw std::logic_error("unreachable");
}

Engine::XVec Engine::apply(const Diagram& d, const XVec& v) const {
  XVec out;
  auto it = v.find(d.bottom);
  if (it == v.end()) return out;
  XPoly val = it->second;
  std::vector<int> nu = nu_of(d.bottom, cfg_.reds);
  for (const auto& ev : d.events) {
    val = x_event(ev, nu, val);
    if (ev.kind == Event::Kind::StrandRed) nu[ev.j - 1] += ev.dir > 0 ? -1 : 1;
  }
  if (!val.is_zero()) out[d.top] = std::move(val);
  return out;
}

Engine::YVec Engine::apply(const Diagram& d, const YVec& v) const {
  YVec out;
  auto it = v.find(d.bottom);
  if (it == v.end()) return out;
  TruncSeries val = it->second;
  std::vector<Scalar> labels = d.bottom.labels;
  for (const auto& ev : d.events) {
    val = y_event(ev, labels, val);
    if (ev.kind == Event::Kind::StrandCross) std::swap(labels[ev.i - 1], labels[ev.i]);
  }
  if (!val.is_zero()) out[d.top] = std::move(val);
  return out;
}

Engine::XVec Engine::apply(const DiagExpr& e, const XVec& v) const {
  XVec out;
  for (const auto& [c, d] : e.terms) {
    XVec part = apply(d, v);
    for (auto& [l, val] : part) {
      XPoly scaled = val.scaled(c);
      auto [it, inserted] = out.try_emplace(l, scaled);
      if (!inserted) it->second += scaled;
    }
  }
  return out;
}

Engine::YVec Engine::apply(const DiagExpr& e, const YVec& v) const {
  YVec out;
  for (const auto& [c, d] : e.terms) {
    YVec part = apply(d, v);
    for (auto& [l, val] : part) {
      TruncSeries scaled = val * c;
      auto [it, inserted] = out.try_emplace(l, scaled);
      if (!inserted) it->second += scaled;
    }
  }
  return out;
}

std::vector<XPoly> Engine::x_probes(int box) const {
  std::vector<XPoly> out;
  std::vector<int> e(cfg_.ctx.n, -box);
  while (true) {
    out.push_back(XPoly::monomial(cfg_.ctx, e,
                                  TruncSeries::constant(cfg_.ctx, Scalar(field(), 1))));
    int i = 0;
    while (i < cfg_.ctx.n && e[i] == box) e[i++] = -box;
    if (i == cfg_.ctx.n) break;
    ++e[i];
  }
  return out;
}

std::vector<TruncSeries> Engine::y_probes(int maxdeg) const {
  std::vector<TruncSeries> out;
  std::vector<int> e(cfg_.ctx.n, 0);
  while (true) {
    int deg = 0;
    for (int x : e) deg += x;
    if (deg <= maxdeg) {
      TruncSeries m = TruncSeries::constant(cfg_.ctx, Scalar(field(), 1));
      for (int i = 0; i < cfg_.ctx.n; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * TruncSeries::var_y(cfg_.ctx, field(), i + 1);
      out.push_back(m);
    }
    int i = 0;
    while (i < cfg_.ctx.n && e[i] == maxdeg) e[i++] = 0;
    if (i == cfg_.ctx.n) break;
    ++e[i];
  }
  return out;
}

}  // namespace repkit
