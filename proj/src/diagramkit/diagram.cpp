#include "diagramkit/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace diagramkit {

using paramkit::GeoEvent;
using paramkit::GeoKind;
using paramkit::GeoOptions;
using paramkit::Rational;

bool hecke_side(Family f) {
  switch (f) {
    case Family::HeckeOPlus:
    case Family::HeckeOMinus:
    case Family::Waha:
    case Family::FHecke:
    case Family::WfHecke:
      return true;
    default:
      return false;
  }
}

bool has_ghosts(Family f) {
  return f == Family::Waha || f == Family::WfHecke || f == Family::Wklr ||
         f == Family::WfKlr;
}

bool has_reds(Family f) {
  return f == Family::FHecke || f == Family::WfHecke || f == Family::TLambda ||
         f == Family::WfKlr;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::HeckeOPlus: return "hecke_o_plus";
    case Family::HeckeOMinus: return "hecke_o_minus";
    case Family::Waha: return "waha";
    case Family::FHecke: return "f_hecke";
    case Family::WfHecke: return "wf_hecke";
    case Family::Klr: return "klr";
    case Family::Wklr: return "wklr";
    case Family::TLambda: return "t_lambda";
    case Family::WfKlr: return "wf_klr";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::HeckeOPlus, Family::HeckeOMinus, Family::Waha, Family::FHecke,
                   Family::WfHecke, Family::Klr, Family::Wklr, Family::TLambda, Family::WfKlr})
    if (family_name(f) == s) return f;
  return std::nullopt;
}

namespace {

std::vector<int> nu_of(const Loading& l, const RedData& reds) {
  std::vector<int> nu;
  for (const auto& theta : reds.line_thetas()) {
    int c = 0;
    for (const auto& p : l.positions) {
      if (p == theta) throw BadDiagram("strand position collides with a red line");
      if (p < theta) ++c;
    }
    nu.push_back(c);
  }
  return nu;
}

struct ReplayState {
  int n;
  std::vector<Scalar> labels;
  std::vector<int> nu;

  void apply(const Event& ev, Family family, const RedData& reds) {
    switch (ev.kind) {
      case Event::Kind::StrandCross: {
        if (ev.i < 1 || ev.i >= n) throw BadDiagram("crossing index out of range");
        for (size_t j = 0; j < nu.size(); ++j)
          if (nu[j] == ev.i) throw BadDiagram("crossing through a red line");
        if (!labels.empty()) std::swap(labels[ev.i - 1], labels[ev.i]);
        break;
      }
      case Event::Kind::StrandGhost:
        if (!has_ghosts(family)) throw BadDiagram("ghost event in an unweighted family");
        if (ev.i < 1 || ev.i > n || ev.j < 1 || ev.j > n || ev.i == ev.j)
          throw BadDiagram("ghost event indices out of range");
        break;
      case Event::Kind::StrandRed: {
        if (!has_reds(family)) throw BadDiagram("red event in an unframed family");
        if (ev.i < 1 || ev.i > n || ev.j < 1 || ev.j > int(nu.size()))
          throw BadDiagram("red event indices out of range");
        int j = ev.j - 1;
        auto thetas = reds.line_thetas();
        if (ev.dir > 0) {
          if (nu[j] != ev.i) throw BadDiagram("rightward red crossing from a wrong slot");
          for (size_t k = 0; k < nu.size(); ++k)
            if (int(k) != j && thetas[k] < thetas[j] && nu[k] >= ev.i)
              throw BadDiagram("red crossing skips another red line");
          nu[j] = ev.i - 1;
        } else {
          if (nu[j] != ev.i - 1) throw BadDiagram("leftward red crossing from a wrong slot");
          for (size_t k = 0; k < nu.size(); ++k)
            if (int(k) != j && thetas[k] > thetas[j] && nu[k] < ev.i)
              throw BadDiagram("red crossing skips another red line");
          nu[j] = ev.i;
        }
        break;
      }
      case Event::Kind::Dot:
        if (hecke_side(family)) throw BadDiagram("dots live on KLR-side diagrams");
        if (ev.i < 1 || ev.i > n) throw BadDiagram("dot index out of range");
        break;
      case Event::Kind::Square:
        if (!hecke_side(family)) throw BadDiagram("squares live on Hecke-side diagrams");
        if (ev.i < 1 || ev.i > n) throw BadDiagram("square index out of range");
        if (ev.exp != 1 && ev.exp != -1) throw BadDiagram("square exponent must be +-1");
        break;
    }
  }
};

}  // namespace

void Diagram::validate(const RedData& reds) const {
  bottom.validate();
  top.validate();
  if (bottom.size() != top.size()) throw BadDiagram("boundary sizes differ");
  ReplayState st{bottom.size(), bottom.labels, nu_of(bottom, reds)};
  for (const auto& ev : events) st.apply(ev, family, reds);
  if (st.nu != nu_of(top, reds)) throw BadDiagram("events do not reach the top loading");
  if (!bottom.labels.empty() && st.labels != top.labels)
    throw BadDiagram("labels do not reach the top loading");
}

std::vector<int> Diagram::induced_permutation() const {
  std::vector<int> order(strands());
  std::iota(order.begin(), order.end(), 1);
  for (const auto& ev : events)
    if (ev.kind == Event::Kind::StrandCross) std::swap(order[ev.i - 1], order[ev.i]);
  // order[r-1] = which bottom strand ends at top rank r; invert
  std::vector<int> w(strands());
  for (int r = 1; r <= strands(); ++r) w[order[r - 1] - 1] = r;
  return w;
}

std::string Diagram::str() const {
  std::ostringstream os;
  os << family_name(family) << "[";
  for (size_t k = 0; k < events.size(); ++k) {
    const auto& ev = events[k];
    if (k) os << " ";
    switch (ev.kind) {
      case Event::Kind::StrandCross: os << "x" << ev.i; break;
      case Event::Kind::StrandGhost: os << "g" << ev.i << "," << ev.j << (ev.dir > 0 ? "+" : "-"); break;
      case Event::Kind::StrandRed: os << "r" << ev.i << "," << ev.j << (ev.dir > 0 ? "+" : "-"); break;
      case Event::Kind::Dot: os << "d" << ev.i; break;
      case Event::Kind::Square: os << (ev.exp > 0 ? "s" : "S") << ev.i; break;
    }
  }
  os << "]";
  return os.str();
}

std::optional<Diagram> compose(const Diagram& a, const Diagram& b) {
  if (a.family != b.family) throw BadDiagram("composition across families");
  if (!(a.bottom == b.top)) return std::nullopt;
  Diagram out{a.family, b.bottom, a.top, b.events};
  out.events.insert(out.events.end(), a.events.begin(), a.events.end());
  return out;
}

DiagExpr DiagExpr::single(const Diagram& d, const TruncSeries& c) {
  DiagExpr e{d.family, {}};
  e.add(c, d);
  return e;
}

DiagExpr& DiagExpr::add(const TruncSeries& c, const Diagram& d) {
  if (!c.is_zero()) terms.emplace_back(c, d);
  return *this;
}

Diagram straight_line(const DiagramCfg& cfg, const Loading& bottom, const Loading& top,
                      const std::vector<int>& match) {
  GeoOptions opt;
  opt.ghosts = has_ghosts(cfg.family);
  if (opt.ghosts) opt.kappa = cfg.kappa.kappa;
  opt.reds = cfg.reds.line_thetas();

  const int n = bottom.size();
  std::vector<Rational> tops = top.positions;
  std::vector<GeoEvent> geo;
  Rational eps(1, 16);
  for (int attempt = 0;; ++attempt) {
    try {
      geo = paramkit::geometry_events(bottom.positions, tops, match, opt);
      break;
    } catch (const paramkit::Tangency&) {
      if (attempt >= 12) throw;
      // affine weights can shear a triple point into another triple point,
      // so the k-th endpoint moves by a quadratically growing offset
      tops = top.positions;
      for (int k = 0; k < n; ++k) tops[k] += Rational((k + 1) * (k + 1)) * eps;
      eps /= 64;
    }
  }

  Diagram d{cfg.family, bottom, top, {}};
  std::vector<int> rank(n);  // strand id -> current rank (1-based)
  std::vector<int> at(n);    // rank-1 -> strand id
  std::iota(at.begin(), at.end(), 0);
  for (int i = 0; i < n; ++i) rank[i] = i + 1;
  for (const auto& g : geo) {
    switch (g.kind) {
      case GeoKind::StrandStrand: {
        int i = std::min(rank[g.a], rank[g.b]);
        if (std::max(rank[g.a], rank[g.b]) != i + 1)
          throw BadDiagram("non-adjacent strand crossing in geometry replay");
        d.events.push_back(Event::cross(i));
        std::swap(rank[at[i - 1]], rank[at[i]]);
        std::swap(at[i - 1], at[i]);
        break;
      }
      case GeoKind::StrandGhost:
        d.events.push_back(Event::ghost(rank[g.a], rank[g.b], g.dir));
        break;
      case GeoKind::StrandRed:
        d.events.push_back(Event::red(rank[g.a], g.b + 1, g.dir));
        break;
    }
  }
  d.validate(cfg.reds);
  return d;
}

Diagram identity_diagram(const DiagramCfg& cfg, const Loading& at) {
  Diagram d{cfg.family, at, at, {}};
  return d;
}

Diagram d_w(const DiagramCfg& cfg, const std::vector<int>& w, const Loading& bottom) {
  return straight_line(cfg, bottom, bottom.permuted(w), w);
}

std::vector<BasisDiagram> enumerate_basis(const DiagramCfg& cfg, const Loading& bottom,
                                          int expbox) {
  const int n = bottom.size();
  std::vector<BasisDiagram> out;
  for (const auto& w : all_permutations(n)) {
    Diagram dw = d_w(cfg, w, bottom);
    std::vector<int> a(n, -expbox);
    while (true) {
      Diagram d = dw;
      std::vector<Event> evs;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < std::abs(a[i]); ++k)
          evs.push_back(Event::square(i + 1, a[i] > 0 ? 1 : -1));
      evs.insert(evs.end(), d.events.begin(), d.events.end());
      d.events = std::move(evs);
      out.push_back(BasisDiagram{w, a, std::move(d)});
      int i = 0;
      while (i < n && a[i] == expbox) a[i++] = -expbox;
      if (i == n) break;
      ++a[i];
    }
  }
  return out;
}

int grading(const DiagramCfg& cfg, const Diagram& d) {
  if (hecke_side(d.family)) throw std::invalid_argument("grading is defined for KLR-side diagrams");
  assert(cfg.graph != nullptr);
  const auto& g = *cfg.graph;
  std::vector<Scalar> labels = d.bottom.labels;
  assert(!labels.empty());
  int deg = 0;
  bool weighted = has_ghosts(d.family);
  for (const auto& ev : d.events) {
    switch (ev.kind) {
      case Event::Kind::Dot:
        deg += 2;
        break;
      case Event::Kind::StrandCross: {
        const Scalar& u = labels[ev.i - 1];
        const Scalar& v = labels[ev.i];
        if (u == v)
          deg -= 2;
        else if (!weighted)
          deg += int(g.has_edge(u, v)) + int(g.has_edge(v, u));
        std::swap(labels[ev.i - 1], labels[ev.i]);
        break;
      }
      case Event::Kind::StrandGhost: {
        const Scalar& u = labels[ev.i - 1];
        const Scalar& v = labels[ev.j - 1];
        if (g.has_edge(v, u)) deg += 1;  // u = q v
        break;
      }
      case Event::Kind::StrandRed: {
        const Scalar& u = labels[ev.i - 1];
        for (int idx : cfg.reds.line_entries(ev.j))
          if (cfg.reds.entries[idx].Q == u) deg += 1;
        break;
      }
      case Event::Kind::Square:
        throw std::invalid_argument("square on a KLR-side diagram");
    }
  }
  return deg;
}

int grading(const DiagramCfg& cfg, const DiagExpr& e) {
  bool have = false;
  int deg = 0;
  for (const auto& [c, d] : e.terms) {
    int base = grading(cfg, d);
    for (const auto& [key, s] : c.terms()) {
      int hz = 0;
      for (int v = cfg.ctx.n; v < cfg.ctx.nvars(); ++v)
        hz += int((key >> (4 * v)) & 0xf);
      int total = base + 2 * hz;
      if (!have) {
        deg = total;
        have = true;
      } else if (deg != total) {
        throw NotHomogeneous();
      }
    }
  }
  return deg;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = int(i) + 1;
  return inv;
}

int permutation_length(const std::vector<int>& w) {
  int len = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++len;
  return len;
}

std::vector<int> reduced_word(const std::vector<int>& w) {
  std::vector<int> v = w, word;
  int len = permutation_length(v);
  while (len > 0) {
    // smallest left descent: v^{-1}(i) > v^{-1}(i+1)
    std::vector<int> inv = inverse_permutation(v);
    for (size_t i = 0; i + 1 < inv.size(); ++i) {
      if (inv[i] > inv[i + 1]) {
        word.push_back(int(i) + 1);
        std::swap(v[inv[i + 1] - 1], v[inv[i] - 1]);
        break;
      }
    }
    --len;
  }
  return word;
}

}  // namespace diagramkit
