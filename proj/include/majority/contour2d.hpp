#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majority/lattice.hpp"
#include "majority/rng.hpp"

namespace majority::contour2d {

/// The dual-lattice point (i + 1/2, j + 1/2).
struct DualPoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const DualPoint&, const DualPoint&) = default;
};

std::string to_string(DualPoint p);

/// Open dual edge, oriented so that the 1 it separates lies on the right:
/// following the edges walks around clusters of 1s clockwise.
struct DualEdge {
  DualPoint from;
  DualPoint to;

  friend auto operator<=>(const DualEdge&, const DualEdge&) = default;
};

/// Every dual edge separating two disagreeing vertices.
class Contour {
 public:
  Contour() = default;
  explicit Contour(std::vector<DualEdge> edges);

  const std::vector<DualEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  /// Number of open edges meeting p (0, 2 or 4).
  int degree(DualPoint p) const;
  /// Dual points with positive degree, ordered.
  std::vector<DualPoint> vertices() const;
  /// Indices of edges leaving p, in edge order.
  const std::vector<std::size_t>& outgoing(DualPoint p) const;
  /// Indices of edges meeting p.
  std::vector<std::size_t> incident(DualPoint p) const;

 private:
  struct Incidence {
    std::vector<std::size_t> out;
    std::vector<std::size_t> in;
  };
  std::vector<DualEdge> edges_;
  std::map<DualPoint, Incidence> incidence_;
};

Contour build_contour(const Configuration& config);

struct JordanVerdict {
  bool jordan = false;
  std::string reason;  // "empty", "pinch", "multiple cycles"; empty when jordan
  std::optional<DualPoint> witness;
};

JordanVerdict is_jordan(const Contour& contour);

struct CornerReport {
  std::vector<Coord> positive;
  std::vector<Coord> negative;

  std::size_t c_plus() const noexcept { return positive.size(); }
  std::size_t c_minus() const noexcept { return negative.size(); }
};

CornerReport find_corners(const Configuration& config);

struct RegularityVerdict {
  bool r0 = false;
  bool r1 = false;
  bool r2 = false;
  JordanVerdict jordan;
  std::optional<DualPoint> r1_witness;
  std::optional<std::pair<Coord, Coord>> r2_witness;
  std::size_t vertex_count = 0;

  bool regular() const noexcept { return r0 && r1 && r2; }
};

RegularityVerdict is_regular_cluster(const Configuration& config);

/// Change in the number of 1s when the 3x3 square centered at center is
/// updated by the majority rule.
int phi(const Configuration& config, Coord center);
std::int64_t phi_sum(const Configuration& config);

struct Theorem4Report {
  std::size_t vertices = 0;
  std::size_t c_plus = 0;
  std::size_t c_minus = 0;
  std::int64_t phi_sum = 0;
  bool regular = false;
  /// Regular with at least 11 vertices: the identity is claimed.
  bool asserted = false;
  bool identity_holds = false;
};

Theorem4Report check_theorem4(const Configuration& config);

struct TurnCounts {
  std::int64_t rights = 0;
  std::int64_t lefts = 0;
};

/// Turns met walking the (Jordan) contour clockwise. DomainError otherwise.
TurnCounts turn_counts(const Contour& contour);

struct PatternVerdict {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<Coord> witness;  // x of the first failing pair (x, x + e)
  Coord direction{};             // e
};

/// For every disagreeing pair (x, x + e_i), checks that
/// eta(x - 2e) = eta(x - e) = eta(x) != eta(x + e) = eta(x + 2e) = eta(x + 3e).
PatternVerdict check_tictactoe(const Configuration& config);

enum class ShapeClass { rectangle, staircase, random_orthoconvex };

std::optional<ShapeClass> parse_shape_class(const std::string& name);
std::string to_string(ShapeClass shape);

/// Rejection sampler for regular clusters with at least 11 vertices, placed
/// in a zero-padded window with 3 cells of margin. target_size is the rough
/// number of vertices aimed for. GenerationError when the budget runs out.
Configuration generate_regular_cluster(RngStream& rng, int target_size, ShapeClass shape, int budget = 1000);

}  // namespace majority::contour2d
