#include "core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

namespace equilib {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::NoViolation: return "NoViolation";
    case ErrorCode::EmptyConstraint: return "EmptyConstraint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty())
    throw Error(ErrorCode::InvalidArgument, "point must have dimension >= 1");
  for (double c : coords_)
    if (!std::isfinite(c))
      throw Error(ErrorCode::InvalidArgument, "point coordinate is not finite");
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

std::string Point::to_string() const {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    auto res = std::to_chars(buf, buf + sizeof buf, coords_[i]);
    out.append(buf, res.ptr);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.to_string();
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void sort_unique(std::vector<Point>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

Domain Domain::box(std::vector<Interval> bounds) {
  if (bounds.empty())
    throw Error(ErrorCode::EmptyInput, "box needs at least one interval");
  for (const auto& iv : bounds) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw Error(ErrorCode::InvalidArgument, "box bounds must be finite");
    if (iv.lo > iv.hi)
      throw Error(ErrorCode::InvalidArgument, "box interval has lo > hi");
  }
  Domain d;
  d.kind_ = Kind::Box;
  d.dim_ = bounds.size();
  d.bounds_ = std::move(bounds);
  return d;
}

Domain Domain::finite_set(std::vector<Point> points) {
  if (points.empty())
    throw Error(ErrorCode::EmptyInput, "finite set must be non-empty");
  const std::size_t dim = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "finite set points have unequal dimension");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw Error(ErrorCode::InvalidArgument, "finite set has duplicate points");
  Domain d;
  d.kind_ = Kind::FiniteSet;
  d.dim_ = dim;
  d.points_ = std::move(points);
  return d;
}

bool Domain::contains(const Point& p) const {
  if (p.dim() != dim_) return false;
  if (kind_ == Kind::FiniteSet)
    return std::binary_search(points_.begin(), points_.end(), p);
  for (std::size_t i = 0; i < dim_; ++i)
    if (p[i] < bounds_[i].lo || p[i] > bounds_[i].hi) return false;
  return true;
}

PointSample::PointSample(std::vector<Point> points,
                         std::shared_ptr<const Domain> source,
                         unsigned resolution)
    : points_(std::move(points)),
      source_(std::move(source)),
      resolution_(resolution) {
  sort_unique(points_);
}

std::size_t PointSample::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || !(*it == p)) return npos;
  return static_cast<std::size_t>(it - points_.begin());
}

Tolerance::Tolerance(double v) : value(v) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and >= 0");
}

Bifunction::Bifunction(Fn fn, std::string provenance)
    : fn_(std::make_shared<const Fn>(std::move(fn))),
      provenance_(std::move(provenance)) {
  if (!*fn_) throw Error(ErrorCode::InvalidArgument, "empty bifunction");
}

Bifunction Bifunction::negated() const {
  auto inner = fn_;
  return Bifunction(
      [inner](const Point& x, const Point& y) { return -(*inner)(x, y); },
      "neg(" + provenance_ + ")");
}

Bifunction Bifunction::dual() const {
  auto inner = fn_;
  return Bifunction(
      [inner](const Point& x, const Point& y) { return -(*inner)(y, x); },
      "dual(" + provenance_ + ")");
}

ValueTable::ValueTable(const Bifunction& f, const PointSample& sample)
    : n_(sample.size()), values_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      values_[i * n_ + j] = f(sample[i], sample[j]);
}

namespace {

// Lattice coordinate lo + k (hi - lo) / r computed as a single division of
// an exact-ish numerator so that e.g. k=3, r=10 on [0,1] yields exactly 0.3.
double lattice_coord(double lo, double hi, unsigned k, unsigned r) {
  if (k == 0) return lo;
  if (k == r) return hi;
  return (lo * static_cast<double>(r - k) + hi * static_cast<double>(k)) /
         static_cast<double>(r);
}

}  // namespace

PointSample sample_domain(std::shared_ptr<const Domain> domain,
                          unsigned resolution) {
  if (!domain) throw Error(ErrorCode::InvalidArgument, "null domain");
  if (domain->kind() == Domain::Kind::FiniteSet)
    return PointSample(domain->points(), domain, resolution);
  if (resolution == 0)
    throw Error(ErrorCode::InvalidResolution, "box resolution must be >= 1");

  const auto& b = domain->bounds();
  const std::size_t dim = b.size();
  std::vector<std::vector<double>> axes(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (unsigned k = 0; k <= resolution; ++k)
      axes[i].push_back(lattice_coord(b[i].lo, b[i].hi, k, resolution));

  std::vector<Point> pts;
  std::vector<std::size_t> idx(dim, 0);
  std::vector<double> coords(dim);
  while (true) {
    for (std::size_t i = 0; i < dim; ++i) coords[i] = axes[i][idx[i]];
    pts.emplace_back(coords);
    std::size_t axis = dim;
    while (axis > 0) {
      --axis;
      if (++idx[axis] <= resolution) break;
      idx[axis] = 0;
      if (axis == 0) return PointSample(std::move(pts), domain, resolution);
    }
  }
}

PointSample sample_domain(const Domain& domain, unsigned resolution) {
  return sample_domain(std::make_shared<const Domain>(domain), resolution);
}

PointSample simplex_grid(std::span<const Point> vertices,
                         unsigned subdivisions) {
  if (vertices.empty())
    throw Error(ErrorCode::EmptyInput, "simplex grid needs vertices");
  if (subdivisions == 0)
    throw Error(ErrorCode::InvalidResolution, "subdivisions must be >= 1");
  const std::size_t dim = vertices.front().dim();
  for (const auto& v : vertices)
    if (v.dim() != dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "simplex vertices have unequal dimension");

  const std::size_t m = vertices.size();
  std::vector<Point> pts;
  std::vector<unsigned> k(m, 0);
  std::vector<double> coords(dim);
  auto emit = [&] {
    for (std::size_t a = 0; a < m; ++a)
      if (k[a] == subdivisions) {
        pts.push_back(vertices[a]);
        return;
      }
    for (std::size_t i = 0; i < dim; ++i) {
      double s = 0.0;
      for (std::size_t a = 0; a < m; ++a)
        s += static_cast<double>(k[a]) * vertices[a][i];
      coords[i] = s / static_cast<double>(subdivisions);
    }
    pts.emplace_back(coords);
  };
  // Weight vectors k with sum(k) == subdivisions.
  auto fill = [&](auto&& self, std::size_t slot, unsigned left) -> void {
    if (slot + 1 == m) {
      k[slot] = left;
      emit();
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      k[slot] = v;
      self(self, slot + 1, left - v);
    }
  };
  fill(fill, 0, subdivisions);
  return PointSample(std::move(pts), nullptr, subdivisions);
}

PointSample segment_sample(const Point& x, const Point& y,
                           unsigned subdivisions) {
  if (subdivisions < 2)
    throw Error(ErrorCode::InvalidResolution,
                "segment subdivisions must be >= 2");
  if (x.dim() != y.dim())
    throw Error(ErrorCode::DimensionMismatch, "segment endpoints differ in dim");
  std::vector<Point> pts;
  std::vector<double> coords(x.dim());
  for (unsigned k = 1; k < subdivisions; ++k) {
    for (std::size_t i = 0; i < x.dim(); ++i)
      coords[i] = (static_cast<double>(subdivisions - k) * x[i] +
                   static_cast<double>(k) * y[i]) /
                  static_cast<double>(subdivisions);
    pts.emplace_back(coords);
  }
  return PointSample(std::move(pts), nullptr, subdivisions);
}

}  // namespace equilib
