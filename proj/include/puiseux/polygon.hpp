#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "puiseux/form.hpp"

namespace puiseux {

/// A point (i, j) of the cloud of a form. Ordered by i, then j.
struct CloudPoint {
  Rat i;
  unsigned j = 0;

  friend bool operator==(const CloudPoint&, const CloudPoint&) = default;
  friend std::strong_ordering operator<=>(const CloudPoint&, const CloudPoint&) = default;
};

/// Sorted, duplicate-free set of cloud points.
using Cloud = std::vector<CloudPoint>;

struct Side {
  CloudPoint from;  // upper-left endpoint
  CloudPoint to;    // lower-right endpoint
  Rat coslope;      // the side lies on a line of slope -1/coslope
  /// Every cloud point on the side, endpoints included, by decreasing j.
  std::vector<CloudPoint> members;

  friend bool operator==(const Side&, const Side&) = default;
};

/// Lower-left boundary of the convex envelope of the cloud translated by the
/// positive quadrant. Vertices run left to right with strictly decreasing j;
/// side co-slopes strictly increase.
struct NewtonPolygon {
  Cloud cloud;
  std::vector<CloudPoint> vertices;
  std::vector<Side> sides;

  /// Co-slope range (lo, hi) in which the support line touches only
  /// vertices[idx]; hi is empty for the last vertex (unbounded).
  std::pair<Rat, std::optional<Rat>> vertex_interval(std::size_t idx) const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

enum class ContactKind { vertex, side };

const char* to_string(ContactKind kind);

/// Where the support line of co-slope mu touches the polygon.
struct SupportContact {
  Rat mu;
  Rat tau;  // abscissa where the line meets the horizontal axis
  ContactKind kind = ContactKind::vertex;
  /// All cloud points on the line, by decreasing j.
  std::vector<CloudPoint> points;

  const CloudPoint& highest() const { return points.front(); }
  const CloudPoint& lowest() const { return points.back(); }
};

/// {(i,j) : a_{i,j} != 0} united with {(i,j) : b_{i+1,j-1} != 0}.
/// Throws when a b-term would land at i < -1.
Cloud cloud(const OneForm& w);

/// Throws on an empty cloud.
NewtonPolygon newton_polygon(std::span<const CloudPoint> cloud);
NewtonPolygon newton_polygon(const OneForm& w);

/// tau = min over the cloud of i + mu j, with its argmin set. Requires mu > 0;
/// the expansion only ever asks for mu >= 1.
SupportContact support(const NewtonPolygon& np, const Rat& mu);

/// Ordinate of the highest point where the co-slope 1 support line touches.
unsigned y_order(const OneForm& w);

/// min(order(a), order(b)) + 1 for a form with integer exponents.
unsigned multiplicity(const OneForm& w);

}  // namespace puiseux
