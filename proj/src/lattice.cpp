#include "majority/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "majority/errors.hpp"

namespace majority {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string to_string(Coord c) { return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")"; }

Geometry::Geometry(int dim, Boundary boundary, Coord origin, std::int64_t width, std::int64_t height)
    : dim_(dim), boundary_(boundary), origin_(origin), width_(width), height_(height) {}

Geometry Geometry::torus(int dim, std::int64_t side) {
  if (dim != 1 && dim != 2) throw InvalidArgument("dimension must be 1 or 2");
  if (side < 1) throw InvalidArgument("torus side must be at least 1");
  return Geometry(dim, Boundary::periodic, {0, 0}, side, dim == 2 ? side : 1);
}

Geometry Geometry::window(int dim, Coord origin, std::int64_t width, std::int64_t height) {
  if (dim != 1 && dim != 2) throw InvalidArgument("dimension must be 1 or 2");
  if (width < 1 || height < 1) throw InvalidArgument("window extent must be at least 1");
  if (dim == 1 && (height != 1 || origin.y != 0))
    throw InvalidArgument("one-dimensional window must have height 1 and origin.y == 0");
  return Geometry(dim, Boundary::zero_padded, origin, width, height);
}

bool Geometry::contains(Coord c) const noexcept {
  if (periodic()) return dim_ == 2 || c.y == 0;
  return c.x >= origin_.x && c.x < origin_.x + width_ && c.y >= origin_.y && c.y < origin_.y + height_;
}

Coord Geometry::wrap(Coord c) const noexcept {
  if (!periodic()) return c;
  return {floor_mod(c.x, width_), dim_ == 2 ? floor_mod(c.y, height_) : 0};
}

std::size_t Geometry::index(Coord c) const {
  if (periodic()) {
    const Coord w = wrap(c);
    return static_cast<std::size_t>(w.y * width_ + w.x);
  }
  if (!contains(c)) throw RangeError("coordinate " + to_string(c) + " outside the window");
  return static_cast<std::size_t>((c.y - origin_.y) * width_ + (c.x - origin_.x));
}

Coord Geometry::coord(std::size_t index) const {
  const auto i = static_cast<std::int64_t>(index);
  return {origin_.x + i % width_, origin_.y + i / width_};
}

Configuration::Configuration(Geometry geometry) : geometry_(geometry), bits_(geometry.size(), 0) {}

int Configuration::get(Coord c) const {
  if (!geometry_.contains(c)) return 0;
  return bits_[geometry_.index(c)];
}

void Configuration::set(Coord c, int value) { bits_[geometry_.index(c)] = static_cast<std::uint8_t>(value != 0); }

std::size_t Configuration::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Rect Configuration::support() const {
  bool any = false;
  Coord lo{}, hi{};
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    const Coord c = geometry_.coord(i);
    if (!any) {
      lo = hi = c;
      any = true;
    } else {
      lo.x = std::min(lo.x, c.x);
      lo.y = std::min(lo.y, c.y);
      hi.x = std::max(hi.x, c.x);
      hi.y = std::max(hi.y, c.y);
    }
  }
  if (!any) return {};
  return {lo, hi.x - lo.x + 1, hi.y - lo.y + 1};
}

HyperedgeFamily::HyperedgeFamily(int n, Geometry geometry)
    : n_(n), block_size_(geometry.dim() == 2 ? n * n : n), geometry_(geometry) {
  if (n < 2) throw InvalidArgument("hyperedge side n must be greater than 1");
  if (geometry.periodic()) {
    if (geometry.width() < n) throw InvalidArgument("torus side must be at least n");
    anchor_width_ = geometry.width();
    anchor_height_ = geometry.height();
  } else {
    anchor_width_ = std::max<std::int64_t>(0, geometry.width() - n + 1);
    anchor_height_ = geometry.dim() == 2 ? std::max<std::int64_t>(0, geometry.height() - n + 1) : 1;
    if (anchor_width_ == 0 || anchor_height_ == 0)
      throw InvalidArgument("window too small for a single hyperedge");
  }
}

std::size_t HyperedgeFamily::anchor_count() const noexcept {
  return static_cast<std::size_t>(anchor_width_ * anchor_height_);
}

Coord HyperedgeFamily::anchor(std::size_t k) const {
  if (k >= anchor_count()) throw RangeError("hyperedge index out of range");
  const auto i = static_cast<std::int64_t>(k);
  const Coord o = geometry_.origin();
  return {o.x + i % anchor_width_, o.y + i / anchor_width_};
}

bool HyperedgeFamily::has_anchor(Coord a) const noexcept {
  if (geometry_.periodic()) return geometry_.contains(a);
  const Coord o = geometry_.origin();
  return a.x >= o.x && a.x < o.x + anchor_width_ && a.y >= o.y && a.y < o.y + anchor_height_;
}

std::vector<Coord> HyperedgeFamily::vertices_of(Coord a) const {
  if (!has_anchor(a)) throw RangeError("no hyperedge anchored at " + to_string(a));
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(block_size_));
  const int ny = geometry_.dim() == 2 ? n_ : 1;
  for (int dx = 0; dx < n_; ++dx)
    for (int dy = 0; dy < ny; ++dy) out.push_back(geometry_.wrap({a.x + dx, a.y + dy}));
  return out;
}

std::vector<Coord> vertices_of(const HyperedgeFamily& family, Coord anchor) { return family.vertices_of(anchor); }

int count_ones(const Configuration& config, Coord anchor, const HyperedgeFamily& family) {
  int k = 0;
  for (const Coord v : family.vertices_of(anchor)) k += config.get(v);
  return k;
}

Configuration set_block(Configuration config, const Rect& rect, int value) {
  for (std::int64_t dy = 0; dy < rect.height; ++dy)
    for (std::int64_t dx = 0; dx < rect.width; ++dx) {
      const Coord c{rect.lo.x + dx, rect.lo.y + dy};
      if (!config.geometry().periodic() && !config.geometry().contains(c))
        throw RangeError("block cell " + to_string(c) + " outside the window");
      config.set(c, value);
    }
  return config;
}

Configuration read_grid_text(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t first_row_line = 1;
  bool have_header = false;
  Coord origin{0, 0};
  std::int64_t width = 0, height = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    if (line_no == 1 && line.find_first_not_of("#.") != std::string::npos) {
      std::istringstream in(line);
      std::string extra;
      if (!(in >> origin.x >> origin.y >> width >> height) || (in >> extra))
        throw ParseError(line_no, "expected a grid row or a header \"x0 y0 width height\"");
      if (width < 1 || height < 1) throw ParseError(line_no, "header extent must be positive");
      have_header = true;
      first_row_line = 2;
      continue;
    }
    if (line.empty() && pos >= text.size()) break;
    if (const auto bad = line.find_first_not_of("#."); bad != std::string::npos)
      throw ParseError(line_no, std::string("illegal character '") + line[bad] + "'");
    if (line.empty()) throw ParseError(line_no, "empty row");
    if (!rows.empty() && line.size() != rows.front().size())
      throw ParseError(line_no, "ragged row: expected " + std::to_string(rows.front().size()) + " cells, got " +
                                    std::to_string(line.size()));
    rows.push_back(std::move(line));
  }

  if (rows.empty() && !have_header) throw ParseError(1, "empty grid");
  if (have_header && !rows.empty()) {
    if (static_cast<std::int64_t>(rows.size()) != height || static_cast<std::int64_t>(rows.front().size()) != width)
      throw ParseError(first_row_line, "grid size does not match the header");
  }
  if (!have_header) {
    height = static_cast<std::int64_t>(rows.size());
    width = static_cast<std::int64_t>(rows.front().size());
  }

  Configuration config(Geometry::window(2, origin, width, height));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::int64_t y = origin.y + height - 1 - static_cast<std::int64_t>(r);
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == '#') config.set({origin.x + static_cast<std::int64_t>(c), y}, 1);
  }
  return config;
}

std::string write_grid_text(const Configuration& config) {
  const Geometry& g = config.geometry();
  std::string out;
  if (g.origin() != Coord{0, 0})
    out += std::to_string(g.origin().x) + " " + std::to_string(g.origin().y) + " " + std::to_string(g.width()) + " " +
           std::to_string(g.height()) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>((g.width() + 1) * g.height()));
  for (std::int64_t r = g.height() - 1; r >= 0; --r) {
    for (std::int64_t c = 0; c < g.width(); ++c)
      out += config.at_index(static_cast<std::size_t>(r * g.width() + c)) ? '#' : '.';
    out += '\n';
  }
  return out;
}

Configuration read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return read_grid_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

void write_grid_file(const Configuration& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << write_grid_text(config);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace majority
