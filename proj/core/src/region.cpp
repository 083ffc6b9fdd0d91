#include "dofb/region.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace dofb {

namespace {

// Boundary line a·x + b·y = c; the implicit axes are included here.
struct Line {
  Rational a;
  Rational b;
  Rational c;
};

Rational cross(const DofPoint& o, const DofPoint& p, const DofPoint& q) {
  return (p.d1 - o.d1) * (q.d2 - o.d2) - (p.d2 - o.d2) * (q.d1 - o.d1);
}

bool point_less(const DofPoint& p, const DofPoint& q) {
  if (p.d1 != q.d1) return p.d1 < q.d1;
  return p.d2 < q.d2;
}

// Counter-clockwise hull (Andrew's monotone chain), collinear points dropped,
// rotated to start at the lowest-then-leftmost point.
std::vector<DofPoint> convex_hull(std::vector<DofPoint> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<DofPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const DofPoint& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  const auto start = std::min_element(hull.begin(), hull.end(), [](const DofPoint& p, const DofPoint& q) {
    if (p.d2 != q.d2) return p.d2 < q.d2;
    return p.d1 < q.d1;
  });
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

std::optional<Rational> finite_weight(const std::optional<std::int64_t>& m) {
  if (!m) return std::nullopt;
  return Rational(*m);
}

DofRegion region_with(const std::optional<std::int64_t>& m1, const std::optional<std::int64_t>& m2) {
  std::vector<HalfPlane> bounds;
  if (m1) bounds.push_back(HalfPlane::bottleneck(1, *finite_weight(m1)));
  if (m2) bounds.push_back(HalfPlane::bottleneck(2, *finite_weight(m2)));
  return DofRegion(std::move(bounds));
}

// Candidate weights for bounds w·D_i + D_other <= w passing through a vertex
// with D_i < 1: w = D_other / (1 - D_i), kept when a positive integer.
std::set<std::int64_t> candidate_weights(const DofRegion& region, int dest) {
  std::set<std::int64_t> out;
  for (const DofPoint& p : region.vertices()) {
    const Rational di = dest == 1 ? p.d1 : p.d2;
    const Rational other = dest == 1 ? p.d2 : p.d1;
    if (di >= 1) continue;
    const Rational w = other / (1 - di);
    if (w.denominator() == 1 && w.numerator() >= 1) out.insert(w.numerator());
  }
  return out;
}

}  // namespace

std::string to_string(const DofPoint& p) { return "(" + to_string(p.d1) + ", " + to_string(p.d2) + ")"; }

DofRegion::DofRegion(std::vector<HalfPlane> bounds) {
  constraints_.emplace_back(1, 0, 1);
  constraints_.emplace_back(0, 1, 1);
  constraints_.insert(constraints_.end(), bounds.begin(), bounds.end());

  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (const HalfPlane& h : constraints_) lines.push_back({h.a, h.b, h.c});

  std::vector<DofPoint> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      const Rational det = p.a * q.b - p.b * q.a;
      if (det == 0) continue;
      const DofPoint x{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
      if (contains(x)) candidates.push_back(x);
    }
  }
  vertices_ = convex_hull(std::move(candidates));
  if (vertices_.empty() || !(vertices_.front() == DofPoint{0, 0})) {
    throw InternalInconsistency("region does not contain the origin as a vertex");
  }

  redundant_.reserve(constraints_.size());
  for (const HalfPlane& h : constraints_) {
    const auto touching = std::count_if(vertices_.begin(), vertices_.end(),
                                        [&](const DofPoint& p) { return h.on_boundary(p.d1, p.d2); });
    redundant_.push_back(touching < 2);
  }
}

bool DofRegion::contains(const DofPoint& p) const {
  if (p.d1 < 0 || p.d2 < 0) return false;
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const HalfPlane& h) { return h.contains(p.d1, p.d2); });
}

bool DofRegion::is_vertex(const DofPoint& p) const {
  return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

bool DofRegion::on_boundary(const DofPoint& p) const {
  if (!contains(p)) return false;
  if (p.d1 == 0 || p.d2 == 0) return true;
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [&](const HalfPlane& h) { return h.on_boundary(p.d1, p.d2); });
}

DofRegion build_region(const std::vector<BottleneckCertificate>& certs) {
  std::vector<HalfPlane> bounds;
  for (const auto& cert : certs) bounds.push_back(bottleneck_bound(cert));
  return DofRegion(std::move(bounds));
}

DofRegion build_prior_region(const std::vector<BottleneckCertificate>& certs) {
  std::vector<HalfPlane> bounds;
  for (const auto& cert : certs) {
    bounds.push_back(HalfPlane::bottleneck(cert.dest, Rational(static_cast<std::int64_t>(cert.prior_m_size))));
  }
  return DofRegion(std::move(bounds));
}

Rational sum_dof(const DofRegion& region) {
  Rational best = 0;
  for (const DofPoint& p : region.vertices()) best = std::max(best, p.d1 + p.d2);
  return best;
}

bool in_S(const Rational& x) {
  if (x == 2) return true;
  if (x > 2) return false;
  const Rational k = Rational(2) / (Rational(2) - x);
  return k.denominator() == 1 && k.numerator() >= 1;
}

Expressibility expressible_by_bottleneck_bounds(const DofRegion& region) {
  std::vector<std::optional<std::int64_t>> m1s{std::nullopt};
  std::vector<std::optional<std::int64_t>> m2s{std::nullopt};
  for (std::int64_t w : candidate_weights(region, 1)) m1s.emplace_back(w);
  for (std::int64_t w : candidate_weights(region, 2)) m2s.emplace_back(w);

  for (std::size_t finite = 0; finite <= 2; ++finite) {
    for (const auto& m1 : m1s) {
      for (const auto& m2 : m2s) {
        if (static_cast<std::size_t>(m1.has_value()) + static_cast<std::size_t>(m2.has_value()) != finite) continue;
        if (region_with(m1, m2).same_set(region)) return {true, m1, m2};
      }
    }
  }
  return {};
}

BoundGap compare_bounds(const HalfPlane& new_bound, const HalfPlane& prior) {
  const auto wn = new_bound.bottleneck_weight();
  const auto wp = prior.bottleneck_weight();
  if (!wn || !wp) throw MismatchedDestination("bounds must read w·D_i + D_other <= w");
  // A weight of 1 (D1 + D2 <= 1) fits either destination.
  int dest = *new_bound.bottleneck_dest();
  const int prior_dest = *prior.bottleneck_dest();
  if (*wn == 1) {
    dest = prior_dest;
  } else if (*wp != 1 && prior_dest != dest) {
    throw MismatchedDestination("bounds constrain different destinations: " + to_string(new_bound) + " vs " +
                                to_string(prior));
  }
  const Rational ni = 1 - Rational(1) / *wn;
  const Rational pi = 1 - Rational(1) / *wp;
  return BoundGap{dest, new_bound, prior, ni, pi, ni - pi};
}

std::string region_csv(const DofRegion& region) {
  std::string out = "D1,D2\n";
  for (const DofPoint& p : region.vertices()) out += to_string(p.d1) + "," + to_string(p.d2) + "\n";
  return out;
}

std::string region_json(const DofRegion& region) {
  nlohmann::ordered_json j;
  j["constraints"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < region.constraints().size(); ++i) {
    j["constraints"].push_back({{"bound", to_string(region.constraints()[i])},
                                {"redundant", static_cast<bool>(region.redundant()[i])}});
  }
  j["vertices"] = nlohmann::ordered_json::array();
  for (const DofPoint& p : region.vertices()) j["vertices"].push_back({to_string(p.d1), to_string(p.d2)});
  j["sum_dof"] = to_string(sum_dof(region));
  return j.dump();
}

}  // namespace dofb
