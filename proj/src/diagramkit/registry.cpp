#include "diagramkit/registry.hpp"

#include <cassert>
#include <sstream>

namespace diagramkit {

using paramkit::Rational;
using ringkit::Field;
using ringkit::Scalar;
using ringkit::TruncSeries;

namespace {

// elementary symmetric polynomials e_0..e_m of the given series
std::vector<TruncSeries> elementary_symmetric(const ringkit::VarCtx& ctx, const Field& f,
                                              const std::vector<TruncSeries>& roots) {
  std::vector<TruncSeries> e;
  e.push_back(TruncSeries::constant(ctx, Scalar(f, 1)));
  for (const auto& a : roots) {
    e.push_back(e.back() * a);
    for (size_t k = e.size() - 2; k >= 1; --k) e[k] += e[k - 1] * a;
  }
  return e;
}

struct Builder {
  const RegistryCfg& cfg;
  Family fam;
  std::vector<RelationInstance> out;

  const ringkit::VarCtx& ctx() const { return cfg.dcfg.ctx; }
  const Field& field() const { return cfg.field; }
  int n() const { return cfg.base.size(); }
  bool mutated(int idx) const { return cfg.mutation == idx; }

  TruncSeries ser(long c) const { return TruncSeries::constant(ctx(), Scalar(field(), c)); }
  TruncSeries one() const { return ser(1); }
  TruncSeries qq() const { return cfg.qq; }
  TruncSeries htilde() const {
    return cfg.deform ? TruncSeries::var_h(ctx(), field()) : TruncSeries(ctx(), field());
  }
  TruncSeries zvar(int j) const { return TruncSeries::var_z(ctx(), field(), j); }

  bool edge(const Scalar& u, const Scalar& v) const {  // v = q u
    return cfg.dcfg.graph->has_edge(u, v);
  }
  bool minus_one_pair(const Scalar& u, const Scalar& v) const {
    return cfg.dcfg.graph->q == -Scalar(field(), 1) && v == -u && u != v;
  }
  // the case whose action multiplies (y_{r+1} - y_r + h), per orientation
  bool mult_edge(const Scalar& u, const Scalar& v) const {
    return cfg.reverse_edges ? edge(u, v) : edge(v, u);
  }

  Loading labeled(const std::vector<Scalar>& labels) const {
    Loading l = cfg.base;
    if (!hecke_side(fam)) l.labels = labels;
    return l;
  }

  Diagram word(const Loading& bottom, std::vector<Event> evs) const {
    Diagram d{fam, bottom, bottom, std::move(evs)};
    d.top = bottom.permuted(d.induced_permutation());
    d.validate(cfg.dcfg.reds);
    return d;
  }
  Diagram word(const Loading& bottom, const Loading& top, std::vector<Event> evs) const {
    Diagram d{fam, bottom, top, std::move(evs)};
    d.validate(cfg.dcfg.reds);
    return d;
  }

  void emit(const std::string& id, const std::string& context, DiagExpr lhs, DiagExpr rhs) {
    out.push_back(RelationInstance{id, context, std::move(lhs), std::move(rhs)});
  }

  std::string ctx_str(int r, const std::vector<Scalar>& labels, const char* variant = nullptr) const {
    std::ostringstream os;
    os << "r=" << r;
    if (variant) os << variant;
    if (!hecke_side(fam) && !labels.empty()) {
      os << " u=(";
      for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i].str();
      os << ")";
    }
    return os.str();
  }

  // ---- label context enumeration ------------------------------------
  std::vector<std::vector<Scalar>> label_pairs() const {
    std::vector<std::vector<Scalar>> out;
    if (hecke_side(fam)) return {{}};
    for (const auto& u : cfg.dcfg.graph->U)
      for (const auto& v : cfg.dcfg.graph->U) out.push_back({u, v});
    return out;
  }
  std::vector<std::vector<Scalar>> label_triples() const {
    std::vector<std::vector<Scalar>> out;
    if (hecke_side(fam)) return {{}};
    for (const auto& u : cfg.dcfg.graph->U)
      for (const auto& v : cfg.dcfg.graph->U)
        for (const auto& w : cfg.dcfg.graph->U) out.push_back({u, v, w});
    return out;
  }
  // full label vector with `local` placed at positions pos..pos+k-1
  std::vector<Scalar> pad(const std::vector<Scalar>& local, int pos) const {
    if (hecke_side(fam)) return {};
    std::vector<Scalar> full(n(), cfg.dcfg.graph->U.front());
    for (size_t k = 0; k < local.size(); ++k) full[pos - 1 + k] = local[k];
    return full;
  }

  // ---- type O Hecke -------------------------------------------------
  void hecke_o(bool plus) {
    const char* pfx = plus ? "Hecke" : "qHecke";
    for (int r = 1; r < n(); ++r) {
      Loading B = labeled({});
      auto C = Event::cross(r);
      auto Sr = Event::square(r, 1);
      auto Sr1 = Event::square(r + 1, 1);
      {  // square slides: X_r c - c X_{r+1} and X_{r+1} c - c X_r
        DiagExpr lhs = DiagExpr::single(word(B, {C, Sr}), one());
        lhs.add(-one(), word(B, {Sr1, C}));
        DiagExpr rhs = DiagExpr::zero(fam);
        if (plus) {
          rhs.add(one(), word(B, {Sr}));
          rhs.add(-qq(), word(B, {Sr1}));
        } else if (mutated(4)) {
          rhs.add(one(), word(B, {Sr}));
          rhs.add(-qq(), word(B, {Sr1}));
        } else {
          rhs.add(one(), word(B, {Sr1}));
          rhs.add(-qq(), word(B, {Sr}));
        }
        emit(std::string(pfx) + "-1", ctx_str(r, {}, "a"), std::move(lhs), std::move(rhs));
      }
      {
        DiagExpr lhs = DiagExpr::single(word(B, {C, Sr1}), one());
        lhs.add(-one(), word(B, {Sr, C}));
        DiagExpr rhs = DiagExpr::zero(fam);
        if (plus) {
          rhs.add(qq(), word(B, {Sr1}));
          rhs.add(-one(), word(B, {Sr}));
        } else {
          rhs.add(qq(), word(B, {Sr}));
          rhs.add(-one(), word(B, {Sr1}));
        }
        emit(std::string(pfx) + "-1", ctx_str(r, {}, "b"), std::move(lhs), std::move(rhs));
      }
      {
        DiagExpr lhs = DiagExpr::single(word(B, {C, C}), one());
        TruncSeries c = plus ? one() + qq() : -(one() + qq());
        if (mutated(3) && plus) c = ser(2) + qq();
        DiagExpr rhs = DiagExpr::single(word(B, {C}), c);
        emit(std::string(pfx) + "-2", ctx_str(r, {}), std::move(lhs), std::move(rhs));
      }
    }
    for (int r = 1; r + 1 < n(); ++r) {
      Loading B = labeled({});
      auto Cr = Event::cross(r);
      auto Cs = Event::cross(r + 1);
      DiagExpr lhs = DiagExpr::single(word(B, {Cr, Cs, Cr}), one());
      lhs.add(-one(), word(B, {Cs, Cr, Cs}));
      DiagExpr rhs = DiagExpr::zero(fam);
      rhs.add(qq(), word(B, {Cr}));
      rhs.add(-qq(), word(B, {Cs}));
      emit(std::string(pfx) + "-triple", ctx_str(r, {}), std::move(lhs), std::move(rhs));
    }
  }

  // ---- type W Hecke (WAHA) -------------------------------------------
  void waha_core() {
    for (int r = 1; r < n(); ++r) {
      Loading B = labeled({});
      auto C = Event::cross(r);
      auto Sr = Event::square(r, 1);
      auto Sr1 = Event::square(r + 1, 1);
      {
        DiagExpr lhs = DiagExpr::single(word(B, {C, Sr}), one());
        lhs.add(-one(), word(B, {Sr1, C}));
        emit("nilHecke-2", ctx_str(r, {}, "a"), std::move(lhs),
             DiagExpr::single(word(B, {}), one()));
      }
      {
        DiagExpr lhs = DiagExpr::single(word(B, {Sr, C}), one());
        lhs.add(-one(), word(B, {C, Sr1}));
        emit("nilHecke-2", ctx_str(r, {}, "b"), std::move(lhs),
             DiagExpr::single(word(B, {}), one()));
      }
      emit("NilHecke3", ctx_str(r, {}, "sq"), DiagExpr::single(word(B, {C, C}), one()),
           DiagExpr::zero(fam));
    }
    for (int r = 1; r + 1 < n(); ++r) {
      Loading B = labeled({});
      auto Cr = Event::cross(r);
      auto Cs = Event::cross(r + 1);
      emit("NilHecke3", ctx_str(r, {}, "braid"),
           DiagExpr::single(word(B, {Cr, Cs, Cr}), one()),
           DiagExpr::single(word(B, {Cs, Cr, Cs}), one()));
    }
    for (int r = 1; r <= n(); ++r)
      for (int s = 1; s <= n(); ++s) {
        if (r == s) continue;
        Loading B = labeled({});
        std::ostringstream c;
        c << "r=" << r << " s=" << s;
        for (int variant = 0; variant < 2; ++variant) {
          int d0 = variant == 0 ? 1 : -1;
          DiagExpr lhs = DiagExpr::single(
              word(B, {Event::ghost(r, s, d0), Event::ghost(r, s, -d0)}), one());
          DiagExpr rhs = DiagExpr::zero(fam);
          rhs.add(one(), word(B, {Event::square(r, 1)}));
          rhs.add(mutated(5) && variant == 0 ? -one() : -qq(), word(B, {Event::square(s, 1)}));
          emit(variant == 0 ? "green-ghost-bigon1" : "green-ghost-bigon2", c.str(),
               std::move(lhs), std::move(rhs));
        }
      }
    for (int p = 1; p + 2 <= n(); ++p) {
      Loading B = labeled({});
      {  // strand p through the crossing of the ghosts of p+1, p+2
        DiagExpr lhs = DiagExpr::single(
            word(B, {Event::ghost(p, p + 1, -1), Event::cross(p + 1), Event::ghost(p, p + 1, 1)}),
            one());
        lhs.add(-one(), word(B, {Event::ghost(p, p + 2, 1), Event::cross(p + 1),
                                 Event::ghost(p, p + 2, -1)}));
        emit("eq:triple-point-1", ctx_str(p, {}), std::move(lhs),
             DiagExpr::single(word(B, {}), -qq()));
      }
      {  // ghost of p+2 through the crossing of strands p, p+1
        DiagExpr lhs = DiagExpr::single(
            word(B, {Event::ghost(p, p + 2, 1), Event::cross(p), Event::ghost(p, p + 2, -1)}),
            one());
        lhs.add(-one(), word(B, {Event::ghost(p + 1, p + 2, -1), Event::cross(p),
                                 Event::ghost(p + 1, p + 2, 1)}));
        TruncSeries c = mutated(6) ? -one() : one();
        emit("eq:triple-point-2", ctx_str(p, {}), std::move(lhs),
             DiagExpr::single(word(B, {}), c));
      }
    }
  }

  // ---- red-line geometry helpers --------------------------------------
  Rational line_gap(int j) const {
    const auto thetas = cfg.dcfg.reds.line_thetas();
    Rational g(1);
    if (j - 2 >= 0) g = std::min(g, thetas[j - 1] - thetas[j - 2]);
    if (j < int(thetas.size())) g = std::min(g, thetas[j] - thetas[j - 1]);
    return g / 4;
  }
  Rational far_right(int k) const {
    const auto thetas = cfg.dcfg.reds.line_thetas();
    Rational base(0);
    for (const auto& t : thetas) base = std::max(base, t);
    for (const auto& p : cfg.base.positions) base = std::max(base, p);
    return base + 1 + k;
  }
  // strand 1 offset delta right (or left) of line j, others far right
  Loading red_local(int j, int n_near, int side, const std::vector<Scalar>& labels) const {
    Loading l;
    Rational th = cfg.dcfg.reds.line_theta(j);
    Rational d = line_gap(j);
    for (int k = 0; k < n_near; ++k)
      l.positions.push_back(side > 0 ? th + d * (k + 1) : th - d * (n_near - k));
    for (int k = n_near; k < n(); ++k) l.positions.push_back(far_right(k));
    if (!hecke_side(fam)) l.labels = labels;
    l.validate();
    return l;
  }
  // strand 1 left of line j, strand 2 right, rest far
  Loading red_straddle(int j, const std::vector<Scalar>& labels) const {
    Loading l;
    Rational th = cfg.dcfg.reds.line_theta(j);
    Rational d = line_gap(j);
    l.positions.push_back(th - d);
    l.positions.push_back(th + d);
    for (int k = 2; k < n(); ++k) l.positions.push_back(far_right(k));
    if (!hecke_side(fam)) l.labels = labels;
    l.validate();
    return l;
  }

  std::vector<TruncSeries> line_Qtilde(int j) const {
    std::vector<TruncSeries> out;
    for (int idx : cfg.dcfg.reds.line_entries(j)) {
      TruncSeries s = cfg.Qtilde[idx];
      if (mutated(9)) s = -s;
      out.push_back(-s);
    }
    return out;
  }
  std::vector<TruncSeries> line_zroots(int j, const Scalar& u) const {
    std::vector<TruncSeries> out;
    for (int idx : cfg.dcfg.reds.line_entries(j))
      if (cfg.dcfg.reds.entries[idx].Q == u)
        out.push_back(-zvar(cfg.dcfg.reds.entries[idx].z_index));
    return out;
  }

  std::vector<Event> dots(int i, int count) const {
    return std::vector<Event>(count, Event::dot(i));
  }
  std::vector<Event> squares(int i, int count) const {
    return std::vector<Event>(count, Event::square(i, 1));
  }
  static std::vector<Event> cat(std::initializer_list<std::vector<Event>> parts) {
    std::vector<Event> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  }

  // ---- Hecke-side red relations ---------------------------------------
  void hecke_red(bool smart_triple) {
    for (int j = 1; j <= cfg.dcfg.reds.line_count(); ++j) {
      auto negQ = line_Qtilde(j);
      auto e = elementary_symmetric(ctx(), field(), negQ);
      int m = int(negQ.size());
      std::ostringstream c;
      c << "line=" << j;
      {  // strand right of the line curls around it
        Loading B = red_local(j, 1, +1, {});
        DiagExpr lhs = DiagExpr::single(word(B, {Event::red(1, j, -1), Event::red(1, j, 1)}), one());
        DiagExpr rhs = DiagExpr::zero(fam);
        for (int k = 0; k <= m; ++k) rhs.add(e[k], word(B, squares(1, m - k)));
        emit("qHcost", c.str(), std::move(lhs), std::move(rhs));
      }
      {  // two strands crossing on either side of the line
        Loading B = red_straddle(j, {});
        DiagExpr lhs = DiagExpr::single(
            word(B, {Event::red(1, j, 1), Event::cross(1), Event::red(1, j, -1)}), one());
        lhs.add(-one(), word(B, {Event::red(2, j, -1), Event::cross(1), Event::red(2, j, 1)}));
        DiagExpr rhs = DiagExpr::zero(fam);
        for (int i = 1; i <= m; ++i)
          for (int a = 0; a + 1 <= i; ++a) {
            int b = i - 1 - a;
            if (smart_triple) {
              rhs.add(e[m - i], word(B, cat({squares(1, a), squares(2, b)})));
            } else {
              rhs.add(e[m - i], word(B, cat({squares(1, a), squares(2, b + 1)})));
              rhs.add(-(e[m - i] * qq()), word(B, cat({squares(1, a + 1), squares(2, b)})));
            }
          }
        emit(smart_triple ? "PCsmart-red-triple" : "qred-triple", c.str(), std::move(lhs),
             std::move(rhs));
      }
      if (smart_triple) {  // ghosts pass red lines freely
        Loading B = red_local(j, 1, -1, {});
        Diagram d = word(B, red_local(j, 1, +1, {}), {Event::red(1, j, 1)});
        emit("PC-dumb-red-triple", c.str(), DiagExpr::single(d, one()),
             DiagExpr::single(d, one()));
      }
    }
  }

  // ---- KLR side --------------------------------------------------------
  void klr_core(bool weighted) {
    for (int r = 1; r < n(); ++r) {
      for (const auto& uv : label_pairs()) {
        const Scalar &u = uv[0], &v = uv[1];
        auto full = pad(uv, r);
        Loading B = labeled(full);
        auto C = Event::cross(r);
        auto Dr = Event::dot(r);
        auto Dr1 = Event::dot(r + 1);
        if (u != v) {
          const char* slide = weighted ? "dots-1" : "first-QH";
          emit(slide, ctx_str(r, uv, "a"), DiagExpr::single(word(B, {C, Dr}), one()),
               DiagExpr::single(word(B, {Dr1, C}), one()));
          emit(slide, ctx_str(r, uv, "b"), DiagExpr::single(word(B, {C, Dr1}), one()),
               DiagExpr::single(word(B, {Dr, C}), one()));
        } else {
          const char* id = weighted ? "dots-2" : "nilHecke-1";
          TruncSeries corr = mutated(2) && !weighted ? ser(2) : one();
          {
            DiagExpr lhs = DiagExpr::single(word(B, {C, Dr}), one());
            DiagExpr rhs = DiagExpr::single(word(B, {Dr1, C}), one());
            rhs.add(corr, word(B, {}));
            emit(id, ctx_str(r, uv, "a"), std::move(lhs), std::move(rhs));
          }
          {
            DiagExpr lhs = DiagExpr::single(word(B, {Dr, C}), one());
            DiagExpr rhs = DiagExpr::single(word(B, {C, Dr1}), one());
            rhs.add(corr, word(B, {}));
            emit(id, ctx_str(r, uv, "b"), std::move(lhs), std::move(rhs));
          }
        }
        {  // bigon
          DiagExpr lhs = DiagExpr::single(word(B, {C, C}), one());
          DiagExpr rhs = DiagExpr::zero(fam);
          if (u == v) {
            // zero
          } else if (weighted) {
            rhs.add(one(), word(B, {}));
          } else if (minus_one_pair(u, v)) {
            rhs.add(-one(), word(B, {Dr, Dr}));
            rhs.add(ser(2), word(B, {Dr, Dr1}));
            rhs.add(-one(), word(B, {Dr1, Dr1}));
            if (!mutated(0)) rhs.add(htilde() * htilde(), word(B, {}));
          } else if (mult_edge(u, v)) {
            rhs.add(one(), word(B, {Dr}));
            rhs.add(-one(), word(B, {Dr1}));
            if (!mutated(0)) rhs.add(htilde(), word(B, {}));
          } else if (mult_edge(v, u)) {
            rhs.add(one(), word(B, {Dr1}));
            rhs.add(-one(), word(B, {Dr}));
            if (!mutated(0)) rhs.add(htilde(), word(B, {}));
          } else {
            rhs.add(one(), word(B, {}));
          }
          emit(weighted ? "strand-bigon" : "black-bigon", ctx_str(r, uv), std::move(lhs),
               std::move(rhs));
        }
      }
    }
    for (int p = 1; p + 2 <= n(); ++p) {
      for (const auto& uvw : label_triples()) {
        const Scalar &u = uvw[0], &v = uvw[1], &w = uvw[2];
        auto full = pad(uvw, p);
        Loading B = labeled(full);
        auto Cp = Event::cross(p);
        auto Cq = Event::cross(p + 1);
        DiagExpr lhs = DiagExpr::single(word(B, {Cp, Cq, Cp}), one());
        lhs.add(-one(), word(B, {Cq, Cp, Cq}));
        DiagExpr rhs = DiagExpr::zero(fam);
        if (!weighted) {
          TruncSeries sign = mutated(1) ? -one() : one();
          if (u == w && minus_one_pair(u, v)) {
            rhs.add(ser(2), word(B, {Event::dot(p + 1)}));
            rhs.add(-one(), word(B, {Event::dot(p)}));
            rhs.add(-one(), word(B, {Event::dot(p + 2)}));
          } else if (u == w && mult_edge(u, v)) {
            rhs.add(sign, word(B, {}));
          } else if (u == w && mult_edge(v, u)) {
            rhs.add(-sign, word(B, {}));
          }
        }
        emit(weighted ? "triple-boring" : "triple-dumb", ctx_str(p, uvw), std::move(lhs),
             std::move(rhs));
      }
    }
    if (weighted) wklr_ghosts();
  }

  void wklr_ghosts() {
    // strand/ghost bigons on every ordered pair
    for (int r = 1; r <= n(); ++r)
      for (int s = 1; s <= n(); ++s) {
        if (r == s) continue;
        for (const auto& uv : label_pairs()) {
          const Scalar &u = uv[0], &v = uv[1];
          std::vector<Scalar> full(n(), cfg.dcfg.graph->U.front());
          full[r - 1] = u;
          full[s - 1] = v;
          Loading B = labeled(full);
          std::ostringstream c;
          c << "r=" << r << " s=" << s << " u=" << u.str() << " v=" << v.str();
          for (int variant = 0; variant < 2; ++variant) {
            bool fires = mutated(7) && variant == 0 ? edge(u, v) : edge(v, u);  // u = q v
            int d0 = variant == 0 ? 1 : -1;
            DiagExpr lhs = DiagExpr::single(
                word(B, {Event::ghost(r, s, d0), Event::ghost(r, s, -d0)}), one());
            DiagExpr rhs = DiagExpr::zero(fam);
            if (fires) {
              rhs.add(one(), word(B, {Event::dot(s)}));
              rhs.add(-one(), word(B, {Event::dot(r)}));
              rhs.add(htilde(), word(B, {}));
            } else {
              rhs.add(one(), word(B, {}));
            }
            emit(variant == 0 ? "ghost-bigon1" : "ghost-bigon1a", c.str(), std::move(lhs),
                 std::move(rhs));
          }
        }
      }
    for (int p = 1; p + 2 <= n(); ++p) {
      for (const auto& uvw : label_triples()) {
        const Scalar &u = uvw[0], &v = uvw[1], &w = uvw[2];
        auto full = pad(uvw, p);
        Loading B = labeled(full);
        {  // strand p through the ghost crossing of p+1, p+2
          DiagExpr lhs = DiagExpr::single(
              word(B, {Event::ghost(p, p + 1, -1), Event::cross(p + 1), Event::ghost(p, p + 1, 1)}),
              one());
          lhs.add(-one(), word(B, {Event::ghost(p, p + 2, 1), Event::cross(p + 1),
                                   Event::ghost(p, p + 2, -1)}));
          DiagExpr rhs = DiagExpr::zero(fam);
          if (v == w && edge(v, u)) rhs.add(one(), word(B, {}));
          emit("eq:triple-point1", ctx_str(p, uvw), std::move(lhs), std::move(rhs));
        }
        {  // ghost of p+2 through the crossing of p, p+1
          DiagExpr lhs = DiagExpr::single(
              word(B, {Event::ghost(p, p + 2, 1), Event::cross(p), Event::ghost(p, p + 2, -1)}),
              one());
          lhs.add(-one(), word(B, {Event::ghost(p + 1, p + 2, -1), Event::cross(p),
                                   Event::ghost(p + 1, p + 2, 1)}));
          DiagExpr rhs = DiagExpr::zero(fam);
          if (u == v && edge(w, u)) rhs.add(-one(), word(B, {}));
          emit("eq:KLRtriple-point2", ctx_str(p, uvw), std::move(lhs), std::move(rhs));
        }
      }
    }
  }

  void klr_red(bool with_ghost_transparency) {
    for (int j = 1; j <= cfg.dcfg.reds.line_count(); ++j) {
      for (const auto& u : cfg.dcfg.graph->U) {
        auto roots = line_zroots(j, u);
        auto e = elementary_symmetric(ctx(), field(), roots);
        int m = int(roots.size());
        std::ostringstream c;
        c << "line=" << j << " u=" << u.str();
        {  // cost, strand right of the line
          Loading B = red_local(j, 1, +1, pad({u}, 1));
          DiagExpr lhs =
              DiagExpr::single(word(B, {Event::red(1, j, -1), Event::red(1, j, 1)}), one());
          DiagExpr rhs = DiagExpr::zero(fam);
          for (int k = 0; k <= m; ++k) rhs.add(e[k], word(B, dots(1, m - k)));
          emit("cost", c.str() + " a", std::move(lhs), std::move(rhs));
        }
        {  // cost, strand left of the line
          Loading B = red_local(j, 1, -1, pad({u}, 1));
          DiagExpr lhs =
              DiagExpr::single(word(B, {Event::red(1, j, 1), Event::red(1, j, -1)}), one());
          DiagExpr rhs = DiagExpr::zero(fam);
          for (int k = 0; k <= m; ++k) rhs.add(e[k], word(B, dots(1, m - k)));
          emit("cost", c.str() + " b", std::move(lhs), std::move(rhs));
        }
        {  // red-dot
          Loading B = red_local(j, 1, -1, pad({u}, 1));
          Loading T = red_local(j, 1, +1, pad({u}, 1));
          emit("red-dot", c.str(),
               DiagExpr::single(word(B, T, {Event::red(1, j, 1), Event::dot(1)}), one()),
               DiagExpr::single(word(B, T, {Event::dot(1), Event::red(1, j, 1)}), one()));
        }
      }
      for (const auto& uv : label_pairs()) {
        const Scalar &u = uv[0], &v = uv[1];
        std::ostringstream c;
        c << "line=" << j << " u=" << u.str() << " v=" << v.str();
        {  // red-triple
          Loading B = red_straddle(j, pad(uv, 1));
          DiagExpr lhs = DiagExpr::single(
              word(B, {Event::red(1, j, 1), Event::cross(1), Event::red(1, j, -1)}), one());
          lhs.add(-one(), word(B, {Event::red(2, j, -1), Event::cross(1), Event::red(2, j, 1)}));
          DiagExpr rhs = DiagExpr::zero(fam);
          if (u == v || mutated(8)) {
            auto roots = line_zroots(j, u);
            auto e = elementary_symmetric(ctx(), field(), roots);
            int m = int(roots.size());
            for (int i = 1; i <= m; ++i)
              for (int a = 0; a + 1 <= i; ++a)
                rhs.add(e[m - i], word(B, cat({dots(1, a), dots(2, i - 1 - a)})));
          }
          emit("red-triple", c.str(), std::move(lhs), std::move(rhs));
        }
        {  // dumb: the black crossing slides across the line
          Loading B = red_local(j, 2, -1, pad(uv, 1));
          Loading T = red_local(j, 2, +1, pad({v, u}, 1));
          DiagExpr lhs = DiagExpr::single(
              word(B, T, {Event::cross(1), Event::red(2, j, 1), Event::red(1, j, 1)}), one());
          DiagExpr rhs = DiagExpr::single(
              word(B, T, {Event::red(2, j, 1), Event::red(1, j, 1), Event::cross(1)}), one());
          emit("dumb", c.str(), std::move(lhs), std::move(rhs));
        }
      }
      if (with_ghost_transparency) {
        const Scalar& u = cfg.dcfg.graph->U.front();
        Loading B = red_local(j, 1, -1, pad({u}, 1));
        Loading T = red_local(j, 1, +1, pad({u}, 1));
        Diagram d = word(B, T, {Event::red(1, j, 1)});
        std::ostringstream c;
        c << "line=" << j;
        emit("KLR-dumb-red-triple", c.str(), DiagExpr::single(d, one()),
             DiagExpr::single(d, one()));
      }
    }
  }
};

}  // namespace

std::pair<Family, std::string> mutation_target(int m) {
  switch (m) {
    case 0: return {Family::Klr, "black-bigon"};
    case 1: return {Family::Klr, "triple-dumb"};
    case 2: return {Family::Klr, "nilHecke-1"};
    case 3: return {Family::HeckeOPlus, "Hecke-2"};
    case 4: return {Family::HeckeOMinus, "qHecke-1"};
    case 5: return {Family::Waha, "green-ghost-bigon1"};
    case 6: return {Family::Waha, "eq:triple-point-2"};
    case 7: return {Family::Wklr, "ghost-bigon1"};
    case 8: return {Family::TLambda, "red-triple"};
    case 9: return {Family::WfHecke, "qHcost"};
  }
  throw std::out_of_range("mutation index");
}

std::vector<RelationInstance> relation_registry(const RegistryCfg& cfg, Family family) {
  Builder b{cfg, family, {}};
  switch (family) {
    case Family::HeckeOPlus:
      b.hecke_o(true);
      break;
    case Family::HeckeOMinus:
      b.hecke_o(false);
      break;
    case Family::Waha:
      b.waha_core();
      break;
    case Family::FHecke:
      b.hecke_o(false);
      b.hecke_red(false);
      break;
    case Family::WfHecke:
      b.waha_core();
      b.hecke_red(true);
      break;
    case Family::Klr:
      b.klr_core(false);
      break;
    case Family::Wklr:
      b.klr_core(true);
      break;
    case Family::TLambda:
      b.klr_core(false);
      b.klr_red(false);
      break;
    case Family::WfKlr:
      b.klr_core(true);
      b.klr_red(true);
      break;
  }
  return b.out;
}

}  // namespace diagramkit
