#include "majority/contour2d.hpp"

#include <algorithm>
#include <numeric>

#include "majority/errors.hpp"

namespace majority::contour2d {

namespace {

void require_window(const Configuration& config) {
  if (config.geometry().dim() != 2 || config.geometry().periodic())
    throw DomainError("cluster geometry needs a zero-padded two-dimensional configuration");
}

// Support box grown by margin on every side; empty box when there are no 1s.
Rect scan_box(const Configuration& config, std::int64_t margin) {
  Rect s = config.support();
  if (s.width == 0) return s;
  return {{s.lo.x - margin, s.lo.y - margin}, s.width + 2 * margin, s.height + 2 * margin};
}

std::int64_t chebyshev(Coord a, Coord b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

const std::vector<std::size_t> kNoEdges;

}  // namespace

std::string to_string(DualPoint p) {
  return "(" + std::to_string(p.i) + "+1/2, " + std::to_string(p.j) + "+1/2)";
}

Contour::Contour(std::vector<DualEdge> edges) : edges_(std::move(edges)) {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    incidence_[edges_[k].from].out.push_back(k);
    incidence_[edges_[k].to].in.push_back(k);
  }
}

int Contour::degree(DualPoint p) const {
  auto it = incidence_.find(p);
  if (it == incidence_.end()) return 0;
  return static_cast<int>(it->second.out.size() + it->second.in.size());
}

std::vector<DualPoint> Contour::vertices() const {
  std::vector<DualPoint> out;
  out.reserve(incidence_.size());
  for (const auto& [p, inc] : incidence_) out.push_back(p);
  return out;
}

const std::vector<std::size_t>& Contour::outgoing(DualPoint p) const {
  auto it = incidence_.find(p);
  return it == incidence_.end() ? kNoEdges : it->second.out;
}

std::vector<std::size_t> Contour::incident(DualPoint p) const {
  auto it = incidence_.find(p);
  if (it == incidence_.end()) return {};
  std::vector<std::size_t> out = it->second.out;
  out.insert(out.end(), it->second.in.begin(), it->second.in.end());
  std::sort(out.begin(), out.end());
  return out;
}

Contour build_contour(const Configuration& config) {
  require_window(config);
  std::vector<DualEdge> edges;
  const Rect box = scan_box(config, 1);
  for (std::int64_t y = box.lo.y; y < box.lo.y + box.height; ++y) {
    for (std::int64_t x = box.lo.x; x < box.lo.x + box.width; ++x) {
      const int here = config.get({x, y});
      // Vertical dual edge at x + 1/2 between (x, y) and (x + 1, y).
      if (const int right = config.get({x + 1, y}); right != here) {
        if (right) edges.push_back({{x, y - 1}, {x, y}});  // northbound, 1 on the east
        else edges.push_back({{x, y}, {x, y - 1}});
      }
      // Horizontal dual edge at y + 1/2 between (x, y) and (x, y + 1).
      if (const int up = config.get({x, y + 1}); up != here) {
        if (here) edges.push_back({{x - 1, y}, {x, y}});  // eastbound, 1 to the south
        else edges.push_back({{x, y}, {x - 1, y}});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return Contour(std::move(edges));
}

JordanVerdict is_jordan(const Contour& contour) {
  if (contour.empty()) return {false, "empty", std::nullopt};
  const std::vector<DualPoint> points = contour.vertices();
  for (const DualPoint p : points)
    if (contour.degree(p) != 2) return {false, "pinch", p};

  // With every degree equal to 2 each point has one outgoing edge; follow it.
  const auto& edges = contour.edges();
  std::size_t walked = 0;
  std::size_t k = 0;
  do {
    k = contour.outgoing(edges[k].to).front();
    ++walked;
  } while (k != 0 && walked <= edges.size());
  if (walked != edges.size()) {
    std::vector<bool> seen(edges.size(), false);
    std::size_t j = 0;
    do {
      seen[j] = true;
      j = contour.outgoing(edges[j].to).front();
    } while (j != 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!seen[i]) return {false, "multiple cycles", edges[i].from};
  }
  return {true, "", std::nullopt};
}

CornerReport find_corners(const Configuration& config) {
  require_window(config);
  CornerReport report;
  const Rect box = scan_box(config, 1);
  for (std::int64_t x = box.lo.x; x < box.lo.x + box.width; ++x) {
    for (std::int64_t y = box.lo.y; y < box.lo.y + box.height; ++y) {
      const int v = config.get({x, y});
      const int a = config.get({x - 1, y - 1}), b = config.get({x + 1, y + 1});
      const int c = config.get({x - 1, y + 1}), d = config.get({x + 1, y - 1});
      if ((a == b && a != v) || (c == d && c != v)) (v ? report.positive : report.negative).push_back({x, y});
    }
  }
  return report;
}

RegularityVerdict is_regular_cluster(const Configuration& config) {
  require_window(config);
  RegularityVerdict verdict;
  verdict.vertex_count = config.count_ones();
  const Contour contour = build_contour(config);
  verdict.jordan = is_jordan(contour);
  verdict.r0 = verdict.jordan.jordan;

  // R1: the contour inside every closed square p + [-1, 1]^2 is the set of
  // contour points there plus the edges with both ends there; it must be
  // connected.
  verdict.r1 = true;
  const std::vector<DualPoint> points = contour.vertices();
  std::vector<DualPoint> centers;
  for (const DualPoint p : points)
    for (std::int64_t di = -1; di <= 1; ++di)
      for (std::int64_t dj = -1; dj <= 1; ++dj) centers.push_back({p.i + di, p.j + dj});
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

  for (const DualPoint c : centers) {
    std::vector<DualPoint> inside;
    for (std::int64_t di = -1; di <= 1; ++di)
      for (std::int64_t dj = -1; dj <= 1; ++dj)
        if (contour.degree({c.i + di, c.j + dj}) > 0) inside.push_back({c.i + di, c.j + dj});
    if (inside.size() <= 1) continue;
    std::vector<std::size_t> parent(inside.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    auto slot = [&](DualPoint p) -> std::optional<std::size_t> {
      auto it = std::find(inside.begin(), inside.end(), p);
      if (it == inside.end()) return std::nullopt;
      return static_cast<std::size_t>(it - inside.begin());
    };
    std::size_t components = inside.size();
    for (std::size_t a = 0; a < inside.size(); ++a) {
      for (const std::size_t k : contour.outgoing(inside[a])) {
        const auto b = slot(contour.edges()[k].to);
        if (!b) continue;
        const std::size_t ra = find(a), rb = find(*b);
        if (ra != rb) {
          parent[ra] = rb;
          --components;
        }
      }
    }
    if (components != 1) {
      verdict.r1 = false;
      verdict.r1_witness = c;
      break;
    }
  }

  // R2: corner neighbourhoods x + [-1, 1]^2 pairwise disjoint.
  verdict.r2 = true;
  const CornerReport corners = find_corners(config);
  std::vector<Coord> all = corners.positive;
  all.insert(all.end(), corners.negative.begin(), corners.negative.end());
  std::sort(all.begin(), all.end());
  for (std::size_t a = 0; a < all.size() && verdict.r2; ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (chebyshev(all[a], all[b]) <= 2) {
        verdict.r2 = false;
        verdict.r2_witness = std::make_pair(all[a], all[b]);
        break;
      }
  return verdict;
}

int phi(const Configuration& config, Coord center) {
  int k = 0;
  for (std::int64_t dx = -1; dx <= 1; ++dx)
    for (std::int64_t dy = -1; dy <= 1; ++dy) k += config.get({center.x + dx, center.y + dy});
  return k >= 5 ? 9 - k : -k;
}

std::int64_t phi_sum(const Configuration& config) {
  require_window(config);
  // phi vanishes unless the centered square meets a 1.
  const Rect box = scan_box(config, 1);
  std::int64_t total = 0;
  for (std::int64_t x = box.lo.x; x < box.lo.x + box.width; ++x)
    for (std::int64_t y = box.lo.y; y < box.lo.y + box.height; ++y) total += phi(config, {x, y});
  return total;
}

Theorem4Report check_theorem4(const Configuration& config) {
  Theorem4Report report;
  const RegularityVerdict verdict = is_regular_cluster(config);
  const CornerReport corners = find_corners(config);
  report.vertices = verdict.vertex_count;
  report.c_plus = corners.c_plus();
  report.c_minus = corners.c_minus();
  report.phi_sum = phi_sum(config);
  report.regular = verdict.regular();
  report.asserted = report.regular && report.vertices >= 11;
  report.identity_holds =
      report.phi_sum == 9 * (static_cast<std::int64_t>(report.c_minus) - static_cast<std::int64_t>(report.c_plus));
  return report;
}

TurnCounts turn_counts(const Contour& contour) {
  const JordanVerdict verdict = is_jordan(contour);
  if (!verdict.jordan) throw DomainError("turn counts need a Jordan contour (" + verdict.reason + ")");
  const auto& edges = contour.edges();
  TurnCounts counts;
  std::size_t k = 0;
  do {
    const std::size_t next = contour.outgoing(edges[k].to).front();
    const std::int64_t dx1 = edges[k].to.i - edges[k].from.i, dy1 = edges[k].to.j - edges[k].from.j;
    const std::int64_t dx2 = edges[next].to.i - edges[next].from.i, dy2 = edges[next].to.j - edges[next].from.j;
    const std::int64_t cross = dx1 * dy2 - dy1 * dx2;
    if (cross < 0) ++counts.rights;
    if (cross > 0) ++counts.lefts;
    k = next;
  } while (k != 0);
  return counts;
}

PatternVerdict check_tictactoe(const Configuration& config) {
  require_window(config);
  PatternVerdict verdict;
  const Rect box = scan_box(config, 1);
  static constexpr Coord kAxes[2] = {{1, 0}, {0, 1}};
  for (std::int64_t x = box.lo.x; x < box.lo.x + box.width; ++x) {
    for (std::int64_t y = box.lo.y; y < box.lo.y + box.height; ++y) {
      for (const Coord e : kAxes) {
        auto at = [&](std::int64_t s) { return config.get({x + s * e.x, y + s * e.y}); };
        if (at(0) == at(1)) continue;
        ++verdict.pairs_checked;
        const bool ok = at(-2) == at(0) && at(-1) == at(0) && at(2) == at(1) && at(3) == at(1);
        if (!ok && verdict.holds) {
          verdict.holds = false;
          verdict.witness = Coord{x, y};
          verdict.direction = e;
        }
      }
    }
  }
  return verdict;
}

std::optional<ShapeClass> parse_shape_class(const std::string& name) {
  if (name == "rectangle") return ShapeClass::rectangle;
  if (name == "staircase") return ShapeClass::staircase;
  if (name == "random_orthoconvex") return ShapeClass::random_orthoconvex;
  return std::nullopt;
}

std::string to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::rectangle: return "rectangle";
    case ShapeClass::staircase: return "staircase";
    case ShapeClass::random_orthoconvex: return "random_orthoconvex";
  }
  return "unknown";
}

namespace {

struct RowSpan {
  std::int64_t left;
  std::int64_t right;  // inclusive
};

std::int64_t uniform_in(RngStream& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<RowSpan> rectangle_rows(RngStream& rng, int target) {
  const std::int64_t max_w = std::clamp<std::int64_t>(target / 4, 4, 40);
  const std::int64_t w = uniform_in(rng, 4, max_w);
  const std::int64_t h = std::clamp<std::int64_t>(target / w + uniform_in(rng, -2, 2), 4, 40);
  return std::vector<RowSpan>(static_cast<std::size_t>(h), RowSpan{0, w - 1});
}

// Bottom-left aligned staircase: step k spans a column block of height
// heights[k], heights strictly decreasing by at least 4.
std::vector<RowSpan> staircase_rows(RngStream& rng, int target) {
  const std::int64_t steps = uniform_in(rng, 2, 4);
  const std::int64_t max_w = std::max<std::int64_t>(5, std::min<std::int64_t>(12, target / 40 + 4));
  std::vector<std::int64_t> widths, heights(static_cast<std::size_t>(steps));
  for (std::int64_t k = 0; k < steps; ++k) widths.push_back(uniform_in(rng, 4, max_w));
  heights.back() = uniform_in(rng, 4, 10);
  for (std::int64_t k = steps - 2; k >= 0; --k)
    heights[static_cast<std::size_t>(k)] = heights[static_cast<std::size_t>(k + 1)] + uniform_in(rng, 4, 8);
  std::vector<RowSpan> rows;
  for (std::int64_t y = 0; y < heights.front(); ++y) {
    std::int64_t right = -1;
    for (std::size_t k = 0; k < widths.size(); ++k)
      if (heights[k] > y) right += widths[k];
    rows.push_back({0, right});
  }
  return rows;
}

// Profile that moves one way until a turning row and back afterwards, in
// steps of 4..6 cells held for at least 4 rows. A unit step is still regular
// but hides its corners, so it is kept out of the corpus.
std::vector<std::int64_t> unimodal_profile(RngStream& rng, std::int64_t height) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(height), 0);
  const std::int64_t turn = uniform_in(rng, 0, height - 1);
  std::int64_t value = 0;
  std::int64_t y = uniform_in(rng, 4, 8);
  std::int64_t last = 0;
  while (y + 4 <= height) {
    const std::int64_t step = uniform_in(rng, 4, 6);
    for (std::int64_t r = last; r < y; ++r) out[static_cast<std::size_t>(r)] = value;
    value += y <= turn ? -step : step;
    last = y;
    y += uniform_in(rng, 4, 8);
  }
  for (std::int64_t r = last; r < height; ++r) out[static_cast<std::size_t>(r)] = value;
  return out;
}

std::vector<RowSpan> orthoconvex_rows(RngStream& rng, int target) {
  const std::int64_t height = std::clamp<std::int64_t>(uniform_in(rng, 8, 40), 8, std::max(8, target / 4));
  const std::int64_t base = uniform_in(rng, 6, 24);
  const auto left = unimodal_profile(rng, height);
  const auto right = unimodal_profile(rng, height);
  std::vector<RowSpan> rows;
  for (std::size_t y = 0; y < left.size(); ++y) rows.push_back({left[y], base - right[y]});
  return rows;
}

Configuration place(const std::vector<RowSpan>& rows, int symmetry) {
  std::vector<Coord> cells;
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (std::int64_t x = rows[y].left; x <= rows[y].right; ++x) {
      std::int64_t a = x, b = static_cast<std::int64_t>(y);
      if (symmetry & 1) std::swap(a, b);
      if (symmetry & 2) a = -a;
      if (symmetry & 4) b = -b;
      cells.push_back({a, b});
    }
  Coord lo = cells.front(), hi = cells.front();
  for (const Coord c : cells) {
    lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
  }
  const std::int64_t margin = 3;
  Configuration config(Geometry::window(2, {0, 0}, hi.x - lo.x + 1 + 2 * margin, hi.y - lo.y + 1 + 2 * margin));
  for (const Coord c : cells) config.set({c.x - lo.x + margin, c.y - lo.y + margin}, 1);
  return config;
}

}  // namespace

Configuration generate_regular_cluster(RngStream& rng, int target_size, ShapeClass shape, int budget) {
  if (target_size < 11) target_size = 11;
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<RowSpan> rows;
    switch (shape) {
      case ShapeClass::rectangle: rows = rectangle_rows(rng, target_size); break;
      case ShapeClass::staircase: rows = staircase_rows(rng, target_size); break;
      case ShapeClass::random_orthoconvex: rows = orthoconvex_rows(rng, target_size); break;
    }
    bool wide = true;
    for (const RowSpan& r : rows) wide = wide && r.right - r.left + 1 >= 4;
    if (!wide) continue;
    const int symmetry = static_cast<int>(rng.below(8));
    Configuration config = place(rows, symmetry);
    const RegularityVerdict verdict = is_regular_cluster(config);
    if (verdict.regular() && verdict.vertex_count >= 11) return config;
  }
  throw GenerationError("no regular " + to_string(shape) + " cluster within the rejection budget");
}

}  // namespace majority::contour2d
