#include "coarsedim/space.hpp"

#include <algorithm>
#include <cstdlib>

#include "coarsedim/error.hpp"
#include "coarsedim/sfamily.hpp"

namespace coarsedim {

namespace {

bool divisibleByPow2(Coord x, unsigned k) {
  if (k >= 63) return x == 0;
  return x % (Coord{1} << k) == 0;
}

}  // namespace

TauLabel::TauLabel(FinSet elements) : elements_(std::move(elements)) {
  if (elements_.min() < 2) throw InvalidArgument("lattice label " + elements_.toString() + " has element below 2");
  if (elements_.max() > 61) throw InvalidArgument("lattice label " + elements_.toString() + " too large");
}

std::string TauLabel::toString() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

bool xTauMember(const TauLabel& tau, std::span<const Coord> x) {
  if (x.size() != tau.dimension())
    throw InvalidArgument("point of length " + std::to_string(x.size()) + " for label {" + tau.toString() + "}");
  for (std::size_t p = 0; p < tau.dimension(); ++p) {
    const auto off = std::count_if(x.begin(), x.end(), [&](Coord c) { return !divisibleByPow2(c, tau.shift(p)); });
    if (static_cast<std::size_t>(off) > p) return false;
  }
  return true;
}

LatticePoint::LatticePoint(TauLabel label, std::vector<Coord> coords)
    : label_(std::move(label)), coords_(std::move(coords)) {
  if (!xTauMember(label_, coords_)) throw InvalidArgument(toString() + " is not a point of X_tau");
}

std::string LatticePoint::toString() const {
  std::string out = label_.toString();
  for (Coord c : coords_) out += ";" + std::to_string(c);
  return out;
}

SupportedSeq::SupportedSeq(std::vector<Coord> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

Coord seqDist(const SupportedSeq& a, const SupportedSeq& b) {
  Coord best = 0;
  const std::size_t n = std::max(a.supportBound(), b.supportBound());
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(a.at(i) - b.at(i)));
  return best;
}

std::vector<LatticePoint> enumerateXTau(const TauLabel& tau, const Box& box, std::uint64_t budget) {
  const std::size_t dim = tau.dimension();
  if (box.size() != dim) throw InvalidArgument("box dimension does not match label {" + tau.toString() + "}");
  const Coord step = Coord{1} << tau.shift(0);

  // Per-axis candidate values: multiples of 2^{k_0} inside the range.
  std::vector<std::vector<Coord>> axes(dim);
  double volume = 1.0;
  for (std::size_t a = 0; a < dim; ++a) {
    const auto [lo, hi] = box[a];
    if (hi < lo) return {};
    Coord q = lo / step;
    if (q * step < lo) ++q;
    const Coord first = q * step;
    for (Coord v = first; v <= hi; v += step) axes[a].push_back(v);
    volume *= static_cast<double>(axes[a].size());
    if (volume > static_cast<double>(budget))
      throw BudgetExceeded("enumeration of X_{" + tau.toString() + "} exceeds budget of " + std::to_string(budget));
    if (axes[a].empty()) return {};
  }

  std::vector<LatticePoint> out;
  std::vector<std::size_t> cursor(dim, 0);
  std::vector<Coord> x(dim);
  while (true) {
    for (std::size_t a = 0; a < dim; ++a) x[a] = axes[a][cursor[a]];
    if (xTauMember(tau, x)) out.emplace_back(tau, x);
    std::size_t a = dim;
    while (a > 0) {
      --a;
      if (++cursor[a] < axes[a].size()) break;
      cursor[a] = 0;
      if (a == 0) return out;
    }
  }
}

Coord supDist(const LatticePoint& x, const LatticePoint& y) {
  if (!(x.label() == y.label()))
    throw InvalidArgument("supDist across labels {" + x.label().toString() + "} and {" + y.label().toString() + "}");
  Coord best = 0;
  for (std::size_t i = 0; i < x.coords().size(); ++i) best = std::max(best, std::abs(x.coords()[i] - y.coords()[i]));
  return best;
}

SupportedSeq embed(const LatticePoint& x) { return SupportedSeq(x.coords()); }

Coord sWeight(const TauLabel& tau) { return Coord{1} << tau.maxElement(); }

Coord dXi(const LatticePoint& p, const LatticePoint& q) {
  if (p.label() == q.label()) return supDist(p, q);
  Coord rho = 0;
  const std::size_t n = std::max(p.coords().size(), q.coords().size());
  for (std::size_t i = 0; i < n; ++i) {
    const Coord a = i < p.coords().size() ? p.coords()[i] : 0;
    const Coord b = i < q.coords().size() ? q.coords()[i] : 0;
    rho = std::max(rho, std::abs(a - b));
  }
  return std::max({sWeight(p.label()), sWeight(q.label()), rho});
}

std::vector<LatticePoint> enumerateXi(const XiSample& sample, std::uint64_t budget) {
  std::vector<LatticePoint> out;
  for (const auto& [label, box] : sample.pieces) {
    if (!sMemberShifted(label.elements(), sample.xi))
      throw InvalidArgument("label {" + label.toString() + "} is not in S_xi[L] for xi = " + sample.xi.toString());
    auto piece = enumerateXTau(label, box, budget);
    out.insert(out.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace coarsedim
