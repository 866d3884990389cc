#include "bisect/plane.hpp"

#include <algorithm>

namespace bisect {

Line make_line(const PrimeField& F, Fe A, Fe B, Fe C) {
  if (A.v == 0 && B.v == 0) {
    fail(ErrorCode::InvalidInput, "line coefficients (a, b) must not both vanish");
  }
  Fe s = A.v != 0 ? F.inverse(A) : F.inverse(B);
  return Line{F.mul(A, s), F.mul(B, s), F.mul(C, s)};
}

Line bisector(const PrimeField& F, Point a, Point b) {
  if (a == b) fail(ErrorCode::DegeneratePair, "bisector of a point with itself");
  // ||c-a|| = ||c-b||  <=>  2(b-a).c + (||a|| - ||b||) = 0
  Point d = p_sub(F, b, a);
  Fe two{2 % F.p()};
  Fe A = F.mul(two, d.x1);
  Fe B = F.mul(two, d.x2);
  Fe C = F.sub(norm(F, a), norm(F, b));
  return make_line(F, A, B, C);
}

std::vector<Point> line_points(const PrimeField& F, const Line& l) {
  std::vector<Point> pts;
  pts.reserve(F.p());
  if (l.a.v == 0) {
    // (0, 1, c): the horizontal line y = -c.
    Fe y = F.neg(l.c);
    for (std::uint32_t x = 0; x < F.p(); ++x) pts.push_back(Point{Fe{x}, y});
  } else {
    // (1, b, c): x = -(b*y + c).
    for (std::uint32_t y = 0; y < F.p(); ++y) {
      Fe fy{y};
      Fe x = F.neg(F.add(F.mul(l.b, fy), l.c));
      pts.push_back(Point{x, fy});
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> circle_points(const PrimeField& F, const Circle& c) {
  // For each x1, solve x2^2 = r - (x1 - u1)^2. Small moduli get a root
  // table built once; large ones fall back to per-column square roots.
  const std::uint32_t p = F.p();
  constexpr std::uint32_t kTableLimit = 1u << 26;
  std::vector<std::uint32_t> root;
  if (p < kTableLimit) {
    root.assign(p, UINT32_MAX);
    for (std::uint32_t t = 0; t <= (p - 1) / 2; ++t) {
      root[static_cast<std::uint64_t>(t) * t % p] = t;
    }
  }
  std::vector<Point> pts;
  for (std::uint32_t x = 0; x < p; ++x) {
    Fe dx = F.sub(Fe{x}, c.center.x1);
    Fe rhs = F.sub(c.radius, F.mul(dx, dx));
    std::uint32_t r;
    if (!root.empty()) {
      r = root[rhs.v];
      if (r == UINT32_MAX) continue;
    } else {
      auto s = F.sqrt(rhs);
      if (!s) continue;
      r = s->v;
    }
    pts.push_back(Point{Fe{x}, F.add(Fe{r}, c.center.x2)});
    if (r != 0) {
      pts.push_back(Point{Fe{x}, F.add(F.neg(Fe{r}), c.center.x2)});
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> line_circle_intersection(const PrimeField& F, const Line& l, const Circle& c) {
  std::vector<Point> pts;
  for (const Point& x : line_points(F, l)) {
    if (norm(F, p_sub(F, x, c.center)) == c.radius) pts.push_back(x);
  }
  return pts;
}

std::vector<Line> lines_through(const PrimeField& F, Point u) {
  std::vector<Line> out;
  out.reserve(F.p() + 1);
  // Vertical line x = u1, then one line per slope m: y - u2 = m (x - u1).
  out.push_back(make_line(F, Fe{1}, Fe{0}, F.neg(u.x1)));
  for (std::uint32_t m = 0; m < F.p(); ++m) {
    Fe fm{m};
    Fe C = F.sub(F.mul(fm, u.x1), u.x2);
    out.push_back(make_line(F, F.neg(fm), Fe{1}, C));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Line> all_lines(const PrimeField& F) {
  std::vector<Line> out;
  out.reserve(static_cast<std::size_t>(F.p()) * (F.p() + 1));
  for (std::uint32_t c = 0; c < F.p(); ++c) out.push_back(Line{Fe{0}, Fe{1}, Fe{c}});
  for (std::uint32_t b = 0; b < F.p(); ++b) {
    for (std::uint32_t c = 0; c < F.p(); ++c) out.push_back(Line{Fe{1}, Fe{b}, Fe{c}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bisect
