#pragma once

#include <vector>

#include "bisect/field.hpp"

namespace bisect {

struct Point {
  Fe x1, x2;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The line a*x + b*y + c = 0 with (a, b) != (0, 0), scaled so that the
/// first nonzero coefficient among (a, b) equals 1. Two Line values are
/// equal iff they describe the same point locus.
struct Line {
  Fe a, b, c;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Circle of "radius" r about u: the norm value r itself, never a length.
/// r = 0 is a genuine object (nonempty when p = 1 mod 4).
struct Circle {
  Point center;
  Fe radius;
};

inline Fe norm(const PrimeField& F, Point x) {
  return F.add(F.mul(x.x1, x.x1), F.mul(x.x2, x.x2));
}

inline Fe dot(const PrimeField& F, Point x, Point y) {
  return F.add(F.mul(x.x1, y.x1), F.mul(x.x2, y.x2));
}

inline Point p_add(const PrimeField& F, Point x, Point y) {
  return Point{F.add(x.x1, y.x1), F.add(x.x2, y.x2)};
}

inline Point p_sub(const PrimeField& F, Point x, Point y) {
  return Point{F.sub(x.x1, y.x1), F.sub(x.x2, y.x2)};
}

inline Point p_neg(const PrimeField& F, Point x) { return Point{F.neg(x.x1), F.neg(x.x2)}; }

inline Point p_scale(const PrimeField& F, Fe s, Point x) {
  return Point{F.mul(s, x.x1), F.mul(s, x.x2)};
}

/// Canonicalizes (A, B, C); throws InvalidInput when (A, B) == (0, 0).
Line make_line(const PrimeField& F, Fe A, Fe B, Fe C);

inline bool on_line(const PrimeField& F, const Line& l, Point x) {
  return F.add(F.add(F.mul(l.a, x.x1), F.mul(l.b, x.x2)), l.c).v == 0;
}

/// A direction vector of l; any two differ by a scalar.
inline Point line_direction(const PrimeField& F, const Line& l) {
  return Point{l.b, F.neg(l.a)};
}

/// Perpendicular bisector of distinct a, b: the locus of points equidistant
/// from both, i.e. the line through (a+b)/2 orthogonal to a-b.
Line bisector(const PrimeField& F, Point a, Point b);

/// True iff the direction d of l satisfies ||d|| = 0 (and d != 0, which
/// holds for every Line). Always false when p = 3 mod 4.
inline bool is_isotropic(const PrimeField& F, const Line& l) {
  return F.add(F.mul(l.a, l.a), F.mul(l.b, l.b)).v == 0;
}

/// All q points of l, in lexicographic order.
std::vector<Point> line_points(const PrimeField& F, const Line& l);

/// Exact enumeration of C_r(u), in lexicographic order.
std::vector<Point> circle_points(const PrimeField& F, const Circle& c);

std::vector<Point> line_circle_intersection(const PrimeField& F, const Line& l, const Circle& c);

/// The q+1 canonical lines through u, sorted by (a, b, c).
std::vector<Line> lines_through(const PrimeField& F, Point u);

/// All q^2 + q canonical lines of the plane, sorted by (a, b, c).
std::vector<Line> all_lines(const PrimeField& F);

}  // namespace bisect
