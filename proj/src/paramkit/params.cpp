#include "paramkit/params.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace paramkit {

bool ParamGraph::has_edge(const Scalar& u, const Scalar& v) const { return v == q * u; }

int ParamGraph::index_of(const Scalar& u) const {
  for (size_t i = 0; i < U.size(); ++i)
    if (U[i] == u) return int(i);
  return -1;
}

ParamGraph make_param_graph(const Field& f, const Scalar& q, std::vector<Scalar> U) {
  if (q.is_zero() || q.is_one()) throw InvalidQ();
  for (size_t i = 0; i < U.size(); ++i) {
    if (U[i].is_zero()) throw DuplicateSpectrum();
    for (size_t j = i + 1; j < U.size(); ++j)
      if (U[i] == U[j]) throw DuplicateSpectrum();
  }
  ParamGraph g{f, q, std::move(U), {}, 0};
  for (size_t i = 0; i < g.U.size(); ++i)
    for (size_t j = 0; j < g.U.size(); ++j)
      if (g.U[j] == q * g.U[i]) g.edges.emplace_back(int(i), int(j));

  // only cycles inside U matter downstream, so a bound of |U|^2 suffices in
  // characteristic zero, where only -1 has finite order anyway
  long bound = f.is_rational() ? std::max<long>(2, long(g.U.size() * g.U.size()))
                               : f.characteristic - 1;
  Scalar acc = q;
  Scalar one(f, 1);
  for (long k = 1; k <= bound; ++k) {
    if (acc == one) {
      g.order_of_q = k;
      break;
    }
    acc *= q;
  }
  return g;
}

void SeriesChoice::validate(const Field& f) const {
  if (d == DChoice::Exp) {
    if (kind != Kind::Exp) throw std::invalid_argument("d = exp forces b = exp");
    if (!f.is_rational()) throw std::invalid_argument("exp deformation requires characteristic 0");
  }
  if (kind == Kind::Exp && !f.is_rational())
    throw std::invalid_argument("the exp series choice requires characteristic 0");
  if (kind == Kind::Custom) {
    if (custom.size() < 2 || !custom[0].is_one() || !custom[1].is_one())
      throw std::invalid_argument("b must lie in 1 + t + t^2 k[[t]]");
  }
}

std::vector<Scalar> SeriesChoice::b_coeffs(const Field& f, int cutoff) const {
  validate(f);
  std::vector<Scalar> out;
  switch (kind) {
    case Kind::OnePlus:
      out = {Scalar(f, 1), Scalar(f, 1)};
      break;
    case Kind::Exp: {
      Rational fact(1);
      for (int k = 0; k <= cutoff; ++k) {
        if (k > 0) fact /= k;
        out.push_back(Scalar::from_rational(f, fact));
      }
      break;
    }
    case Kind::Custom:
      out = custom;
      out.resize(std::min<size_t>(out.size(), cutoff + 1), Scalar(f, 0));
      break;
  }
  return out;
}

std::vector<Scalar> SeriesChoice::d_coeffs(const Field& f, int cutoff) const {
  if (d == DChoice::One) return {Scalar(f, 1)};
  SeriesChoice e{Kind::Exp, DChoice::One, {}};
  return e.b_coeffs(f, cutoff);
}

bool Loading::operator<(const Loading& o) const {
  if (positions != o.positions) return positions < o.positions;
  if (labels.size() != o.labels.size()) return labels.size() < o.labels.size();
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != o.labels[i]) return labels[i] < o.labels[i];
  }
  return false;
}

Loading Loading::permuted(const std::vector<int>& w) const {
  Loading out = *this;
  if (!labels.empty()) {
    assert(w.size() == labels.size());
    for (size_t i = 0; i < labels.size(); ++i) out.labels[w[i] - 1] = labels[i];
  }
  return out;
}

void Loading::validate() const {
  for (size_t i = 0; i + 1 < positions.size(); ++i)
    if (!(positions[i] < positions[i + 1]))
      throw std::invalid_argument("loading positions must be strictly increasing");
  if (!labels.empty() && labels.size() != positions.size())
    throw std::invalid_argument("loading labels must match positions");
}

void RedData::validate() const {
  std::set<int> zs;
  for (const auto& e : entries) zs.insert(e.z_index);
  if (int(zs.size()) != size())
    throw std::invalid_argument("red entries must carry distinct z indices");
  for (const auto& e : entries)
    if (e.z_index < 1 || e.z_index > size())
      throw std::invalid_argument("red z indices must cover 1..ell");
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i + 1].theta < entries[i].theta)
      throw std::invalid_argument("red entries must be sorted by position");
}

int RedData::line_count() const {
  int c = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    if (i == 0 || entries[i].theta != entries[i - 1].theta) ++c;
  return c;
}

Rational RedData::line_theta(int line) const {
  int c = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    if (i == 0 || entries[i].theta != entries[i - 1].theta)
      if (++c == line) return entries[i].theta;
  throw std::out_of_range("red line index");
}

std::vector<int> RedData::line_entries(int line) const {
  Rational theta = line_theta(line);
  std::vector<int> out;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].theta == theta) out.push_back(int(i));
  return out;
}

std::vector<Rational> RedData::line_thetas() const {
  std::vector<Rational> out;
  for (int l = 1; l <= line_count(); ++l) out.push_back(line_theta(l));
  return out;
}

std::vector<Scalar> seq_swap(std::vector<Scalar> u, int r) {
  if (r < 1 || r >= int(u.size())) throw std::out_of_range("seq_swap index");
  std::swap(u[r - 1], u[r]);
  return u;
}

bool unsteady(const Loading& loading, const RedData& reds, const Weighting& kappa) {
  Rational gap = kappa.kappa < 0 ? -kappa.kappa : kappa.kappa;
  std::vector<Rational> xs = loading.positions;
  std::sort(xs.begin(), xs.end());
  if (xs.empty()) return false;
  for (size_t k = 1; k <= xs.size(); ++k) {
    Rational left_max = xs[k - 1];
    bool ok = true;
    if (k < xs.size() && !(xs[k] - left_max > gap)) ok = false;
    for (const auto& r : reds.entries)
      if (!(r.theta - left_max > gap)) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace paramkit
