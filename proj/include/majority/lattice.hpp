#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace majority {

/// Integer lattice point. One-dimensional geometries keep y == 0.
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
};

std::string to_string(Coord c);

enum class Boundary { periodic, zero_padded };

/// A finite lattice: a d-dimensional torus of side L, or a rectangular window
/// of Z^d whose outside is permanently 0.
class Geometry {
 public:
  static Geometry torus(int dim, std::int64_t side);
  /// For dim == 1 the height must be 1 and origin.y must be 0.
  static Geometry window(int dim, Coord origin, std::int64_t width, std::int64_t height = 1);

  int dim() const noexcept { return dim_; }
  Boundary boundary() const noexcept { return boundary_; }
  bool periodic() const noexcept { return boundary_ == Boundary::periodic; }
  Coord origin() const noexcept { return origin_; }
  std::int64_t width() const noexcept { return width_; }
  std::int64_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(width_ * height_); }

  /// Inside the stored window. Always true on a torus.
  bool contains(Coord c) const noexcept;
  /// Wraps on a torus; throws RangeError outside a zero-padded window.
  std::size_t index(Coord c) const;
  /// Stored coordinate of an index (torus coordinates are in [0, L)).
  Coord coord(std::size_t index) const;
  /// Reduce modulo L on a torus; identity for windows.
  Coord wrap(Coord c) const noexcept;

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  Geometry(int dim, Boundary boundary, Coord origin, std::int64_t width, std::int64_t height);

  int dim_;
  Boundary boundary_;
  Coord origin_;
  std::int64_t width_;
  std::int64_t height_;
};

/// Axis-aligned box of lattice points: [lo.x, lo.x + width) x [lo.y, lo.y + height).
struct Rect {
  Coord lo;
  std::int64_t width = 0;
  std::int64_t height = 0;
};

/// One state bit per vertex. Reads outside a zero-padded window return 0.
class Configuration {
 public:
  explicit Configuration(Geometry geometry);

  const Geometry& geometry() const noexcept { return geometry_; }

  int get(Coord c) const;
  void set(Coord c, int value);

  int at_index(std::size_t i) const noexcept { return bits_[i]; }
  void set_index(std::size_t i, int value) noexcept { bits_[i] = static_cast<std::uint8_t>(value != 0); }

  std::size_t count_ones() const noexcept;
  bool empty() const noexcept { return count_ones() == 0; }
  /// Smallest box holding every 1. Width 0 when there are none.
  Rect support() const;

  std::vector<std::uint8_t>& bits() noexcept { return bits_; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Geometry geometry_;
  std::vector<std::uint8_t> bits_;
};

/// The block hyperedges h_x = x + {0, ..., n-1}^d. On a torus every vertex
/// anchors a block (coordinates wrap); in a zero-padded window only anchors
/// whose block lies fully inside the window exist.
class HyperedgeFamily {
 public:
  HyperedgeFamily(int n, Geometry geometry);

  int n() const noexcept { return n_; }
  const Geometry& geometry() const noexcept { return geometry_; }
  /// n^d.
  int block_size() const noexcept { return block_size_; }

  std::size_t anchor_count() const noexcept;
  Coord anchor(std::size_t k) const;
  bool has_anchor(Coord anchor) const noexcept;

  /// Vertices of h_anchor in lexicographic order, wrapped on a torus.
  std::vector<Coord> vertices_of(Coord anchor) const;

 private:
  int n_;
  int block_size_;
  Geometry geometry_;
  std::int64_t anchor_width_;
  std::int64_t anchor_height_;
};

std::vector<Coord> vertices_of(const HyperedgeFamily& family, Coord anchor);
int count_ones(const Configuration& config, Coord anchor, const HyperedgeFamily& family);

Configuration set_block(Configuration config, const Rect& rect, int value);

/// Grid text: one row per line, '#' for 1 and '.' for 0, first row is the
/// highest y. An optional leading "x0 y0 width height" line fixes the window
/// (lower-left corner at (x0, y0)); otherwise the window starts at (0, 0).
Configuration read_grid_text(std::string_view text);
std::string write_grid_text(const Configuration& config);

Configuration read_grid_file(const std::string& path);
void write_grid_file(const Configuration& config, const std::string& path);

}  // namespace majority
