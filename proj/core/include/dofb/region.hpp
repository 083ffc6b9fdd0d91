#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dofb/bottleneck.hpp"
#include "dofb/rational.hpp"

namespace dofb {

struct DofPoint {
  Rational d1;
  Rational d2;

  friend bool operator==(const DofPoint&, const DofPoint&) = default;
};

std::string to_string(const DofPoint& p);

/// Convex polygon {D1, D2 >= 0} ∩ constraints, always inside the unit square.
///
/// Non-negativity is implicit; the box bounds D1 <= 1 and D2 <= 1 are the
/// first two entries of constraints(). Vertices are exact, listed
/// counter-clockwise from the origin.
class DofRegion {
 public:
  /// Unit square intersected with `bounds`.
  explicit DofRegion(std::vector<HalfPlane> bounds = {});

  const std::vector<HalfPlane>& constraints() const noexcept { return constraints_; }
  const std::vector<DofPoint>& vertices() const noexcept { return vertices_; }
  /// Per constraint: true when no edge of the polygon lies on it.
  const std::vector<bool>& redundant() const noexcept { return redundant_; }

  bool contains(const DofPoint& p) const;
  bool is_vertex(const DofPoint& p) const;
  bool on_boundary(const DofPoint& p) const;

  /// Same feasible set (compares vertex lists).
  bool same_set(const DofRegion& other) const { return vertices_ == other.vertices_; }

 private:
  std::vector<HalfPlane> constraints_;
  std::vector<DofPoint> vertices_;
  std::vector<bool> redundant_;
};

/// Unit square ∩ {rho·D_i + D_other <= rho} for every certificate.
DofRegion build_region(const std::vector<BottleneckCertificate>& certs);

/// Region from the older |M|-based bounds of the same certificates.
DofRegion build_prior_region(const std::vector<BottleneckCertificate>& certs);

/// max(D1 + D2) over the region.
Rational sum_dof(const DofRegion& region);

/// x = 2 or x = 2(1 - 1/k) for some positive integer k.
bool in_S(const Rational& x);

struct Expressibility {
  bool expressible = false;
  // nullopt stands for "no bound" (m = infinity).
  std::optional<std::int64_t> m1;
  std::optional<std::int64_t> m2;
};

/// Whether the region equals box ∩ {m1·D1 + D2 <= m1} ∩ {D1 + m2·D2 <= m2}
/// for some m1, m2 in N ∪ {∞}. Witnesses with fewer finite bounds are
/// preferred.
Expressibility expressible_by_bottleneck_bounds(const DofRegion& region);

struct BoundGap {
  int dest = 1;
  HalfPlane new_bound;
  HalfPlane prior_bound;
  Rational new_intercept;    // D_i where the new bound meets D_other = 1
  Rational prior_intercept;
  Rational gap;              // new_intercept - prior_intercept
};

/// Both bounds must read w·D_i + D_other <= w for the same i. Throws
/// MismatchedDestination otherwise.
BoundGap compare_bounds(const HalfPlane& new_bound, const HalfPlane& prior);

/// "D1,D2" header, then one "p/q,p/q" line per vertex.
std::string region_csv(const DofRegion& region);
/// {"constraints": [...], "vertices": [["p/q","p/q"], ...], "sum_dof": "p/q"}
std::string region_json(const DofRegion& region);

}  // namespace dofb
