#include "paramkit/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace paramkit {

namespace {

struct Line {
  Rational start, delta;
  Rational at(const Rational& t) const { return start + t * delta; }
};

struct RawEvent {
  GeoEvent ev;
  Rational x;               // crossing x, for deterministic tie order
  std::pair<int, int> l1;   // line ids: (0,strand), (1,ghost), (2,red)
  std::pair<int, int> l2;
};

std::optional<Rational> cross_time(const Line& p, const Line& q) {
  if (p.delta == q.delta) {
    if (p.start == q.start) throw Tangency();  // parallel overlap
    return std::nullopt;
  }
  Rational t = (q.start - p.start) / (p.delta - q.delta);
  if (t <= 0 || t >= 1) {
    if (t == 0 || t == 1) throw Tangency();
    return std::nullopt;
  }
  return t;
}

}  // namespace

std::vector<GeoEvent> geometry_events(const std::vector<Rational>& bottom,
                                      const std::vector<Rational>& top,
                                      const std::vector<int>& match,
                                      const GeoOptions& opt) {
  const int n = int(bottom.size());
  assert(int(top.size()) == n && int(match.size()) == n);
  std::vector<Line> strand(n);
  for (int i = 0; i < n; ++i)
    strand[i] = Line{bottom[i], top[match[i] - 1] - bottom[i]};

  std::vector<RawEvent> raw;
  auto push = [&](GeoEvent ev, const Rational& x, std::pair<int, int> l1,
                  std::pair<int, int> l2) {
    raw.push_back(RawEvent{std::move(ev), x, l1, l2});
  };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto t = cross_time(strand[a], strand[b]);
      if (!t) continue;
      int dir = strand[a].delta > strand[b].delta ? 1 : -1;
      push(GeoEvent{GeoKind::StrandStrand, *t, a, b, dir}, strand[a].at(*t), {0, a}, {0, b});
    }

  if (opt.ghosts) {
    Rational kappa = *opt.kappa;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        Line ghost{strand[b].start + kappa, strand[b].delta};
        auto t = cross_time(strand[a], ghost);
        if (!t) continue;
        int dir = strand[a].delta > ghost.delta ? 1 : -1;
        push(GeoEvent{GeoKind::StrandGhost, *t, a, b, dir}, strand[a].at(*t), {0, a}, {1, b});
      }
  }

  for (int j = 0; j < int(opt.reds.size()); ++j) {
    Line red{opt.reds[j], Rational(0)};
    for (int a = 0; a < n; ++a) {
      auto t = cross_time(strand[a], red);
      if (!t) continue;
      int dir = strand[a].delta > 0 ? 1 : -1;
      push(GeoEvent{GeoKind::StrandRed, *t, a, j, dir}, opt.reds[j], {0, a}, {2, j});
    }
  }

  std::sort(raw.begin(), raw.end(), [](const RawEvent& u, const RawEvent& v) {
    return std::tie(u.ev.time, u.x, u.l1, u.l2) < std::tie(v.ev.time, v.x, v.l1, v.l2);
  });
  for (size_t i = 0; i < raw.size();) {
    size_t j = i;
    while (j < raw.size() && raw[j].ev.time == raw[i].ev.time) ++j;
    for (size_t a = i; a < j; ++a)
      for (size_t b = a + 1; b < j; ++b) {
        const auto& u = raw[a];
        const auto& v = raw[b];
        if (u.l1 == v.l1 || u.l1 == v.l2 || u.l2 == v.l1 || u.l2 == v.l2) throw Tangency();
      }
    i = j;
  }

  std::vector<GeoEvent> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(r.ev);
  return out;
}

}  // namespace paramkit
