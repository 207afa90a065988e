#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace equilib {

/// A point of R^n. Coordinates are finite and the dimension is at least one.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  // Lexicographic on coordinates; all enumerations use this order.
  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

 private:
  std::vector<double> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);

struct Interval {
  double lo;
  double hi;
};

/// Compact non-empty domain: an axis-aligned box or an explicit finite set.
class Domain {
 public:
  enum class Kind { Box, FiniteSet };

  static Domain box(std::vector<Interval> bounds);
  static Domain finite_set(std::vector<Point> points);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Interval>& bounds() const { return bounds_; }
  // Stored in lexicographic order.
  const std::vector<Point>& points() const { return points_; }

  bool contains(const Point& p) const;

 private:
  Domain() = default;

  Kind kind_ = Kind::Box;
  std::size_t dim_ = 0;
  std::vector<Interval> bounds_;
  std::vector<Point> points_;
};

/// Deterministic finite sample of a domain, sorted lexicographically and free
/// of duplicates.
class PointSample {
 public:
  PointSample(std::vector<Point> points, std::shared_ptr<const Domain> source,
              unsigned resolution);

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  const Domain* source() const { return source_.get(); }
  std::shared_ptr<const Domain> source_ptr() const { return source_; }
  unsigned resolution() const { return resolution_; }

  // Index of an exact member, or npos.
  std::size_t index_of(const Point& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
  std::shared_ptr<const Domain> source_;
  unsigned resolution_ = 0;
};

struct Tolerance {
  double value = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double v);
};

/// Scalar map f(x, y) on R^n x R^n. Copies share the underlying callable.
class Bifunction {
 public:
  using Fn = std::function<double(const Point&, const Point&)>;

  Bifunction(Fn fn, std::string provenance);

  double operator()(const Point& x, const Point& y) const {
    return (*fn_)(x, y);
  }
  const std::string& provenance() const { return provenance_; }

  // (x, y) -> -f(x, y)
  Bifunction negated() const;
  // (x, y) -> -f(y, x); EP of f coincides with MEP of the dual.
  Bifunction dual() const;

 private:
  std::shared_ptr<const Fn> fn_;
  std::string provenance_;
};

/// f evaluated once on every ordered pair of a sample. Row index is the first
/// argument.
class ValueTable {
 public:
  ValueTable(const Bifunction& f, const PointSample& sample);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

PointSample sample_domain(std::shared_ptr<const Domain> domain,
                          unsigned resolution);
PointSample sample_domain(const Domain& domain, unsigned resolution);

/// All convex combinations with weights k/subdivisions.
PointSample simplex_grid(std::span<const Point> vertices,
                         unsigned subdivisions);

/// Points (1-t)x + t y for t = k/subdivisions, k = 1..subdivisions-1.
PointSample segment_sample(const Point& x, const Point& y,
                           unsigned subdivisions);

// Sorts and removes exact duplicates.
void sort_unique(std::vector<Point>& points);

}  // namespace equilib
