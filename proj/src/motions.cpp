#include "bisect/motions.hpp"

#include <algorithm>

namespace bisect {

const char* motion_kind_name(MotionKind kind) {
  switch (kind) {
    case MotionKind::Identity: return "Identity";
    case MotionKind::Rotation: return "Rotation";
    case MotionKind::Reflection: return "Reflection";
    case MotionKind::Translation: return "Translation";
  }
  return "?";
}

namespace {

bool unit_norm(const PrimeField& F, Fe a, Fe b) {
  return F.add(F.mul(a, a), F.mul(b, b)).v == 1;
}

}  // namespace

bool is_rotation_matrix(const PrimeField& F, const Matrix2& m) {
  return m.m22 == m.m11 && m.m21 == F.neg(m.m12) && unit_norm(F, m.m11, m.m21);
}

bool is_reflection_matrix(const PrimeField& F, const Matrix2& m) {
  return m.m21 == m.m12 && m.m22 == F.neg(m.m11) && unit_norm(F, m.m11, m.m12);
}

RigidMotion make_motion(const PrimeField& F, const Matrix2& m, Point t) {
  const bool ident = m == mat_identity();
  MotionKind kind;
  if (ident) {
    kind = (t == Point{}) ? MotionKind::Identity : MotionKind::Translation;
  } else if (is_rotation_matrix(F, m)) {
    kind = MotionKind::Rotation;
  } else if (is_reflection_matrix(F, m)) {
    kind = MotionKind::Reflection;
  } else {
    fail(ErrorCode::InvalidMatrix, "matrix is neither rotation- nor reflection-shaped");
  }
  return RigidMotion{m, t, kind};
}

RigidMotion rotation_about(const PrimeField& F, Point u, const Matrix2& R) {
  if (!is_rotation_matrix(F, R)) fail(ErrorCode::InvalidMatrix, "not a rotation matrix");
  return make_motion(F, R, p_sub(F, u, mat_apply(F, R, u)));
}

RigidMotion reflection_about(const PrimeField& F, Point u, const Matrix2& S) {
  if (!is_reflection_matrix(F, S)) fail(ErrorCode::InvalidMatrix, "not a reflection matrix");
  return make_motion(F, S, p_sub(F, u, mat_apply(F, S, u)));
}

RigidMotion translation_by(const PrimeField& F, Point d) {
  return make_motion(F, mat_identity(), d);
}

std::vector<Matrix2> enumerate_rotation_matrices(const PrimeField& F) {
  std::vector<Matrix2> out;
  for (std::uint32_t a = 0; a < F.p(); ++a) {
    Fe fa{a};
    Fe rhs = F.sub(Fe{1}, F.mul(fa, fa));
    auto r = F.sqrt(rhs);
    if (!r) continue;
    out.push_back(Matrix2{fa, F.neg(*r), *r, fa});
    if (r->v != 0) {
      Fe nb = F.neg(*r);
      out.push_back(Matrix2{fa, *r, nb, fa});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matrix2> enumerate_reflection_matrices(const PrimeField& F) {
  std::vector<Matrix2> out;
  for (const Matrix2& r : enumerate_rotation_matrices(F)) {
    out.push_back(Matrix2{r.m11, r.m21, r.m21, F.neg(r.m11)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RigidMotion> enumerate_reflections(const PrimeField& F) {
  std::vector<RigidMotion> out;
  for (const Line& l : all_lines(F)) {
    if (is_isotropic(F, l)) continue;
    out.push_back(reflection_fixing_line(F, l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RigidMotion compose(const PrimeField& F, const RigidMotion& m1, const RigidMotion& m2) {
  // (m2 o m1)(v) = M2 (M1 v + t1) + t2
  Matrix2 m = mat_mul(F, m2.matrix, m1.matrix);
  Point t = p_add(F, mat_apply(F, m2.matrix, m1.translation), m2.translation);
  return make_motion(F, m, t);
}

FixedSet fixed_set(const PrimeField& F, const RigidMotion& m) {
  switch (m.kind) {
    case MotionKind::Identity:
      return FixedSet{FixedSet::Kind::All};
    case MotionKind::Translation:
      return FixedSet{FixedSet::Kind::None};
    case MotionKind::Rotation: {
      // (I - R) u = t is uniquely solvable: det(I - R) = 2 - 2a != 0.
      Fe a = m.matrix.m11, b = m.matrix.m21;
      Fe det = F.sub(Fe{2 % F.p()}, F.mul(Fe{2 % F.p()}, a));
      Fe inv = F.inverse(det);
      // inverse of (1-a, b; -b, 1-a) applied to t
      Fe d1 = F.sub(Fe{1}, a);
      Point u{F.mul(inv, F.sub(F.mul(d1, m.translation.x1), F.mul(b, m.translation.x2))),
              F.mul(inv, F.add(F.mul(b, m.translation.x1), F.mul(d1, m.translation.x2)))};
      return FixedSet{FixedSet::Kind::Point, u};
    }
    case MotionKind::Reflection: {
      // (I - S) u = t has solutions iff t lies in the -1 eigenspace of S,
      // i.e. S t = -t; then u = t/2 is one solution and the fixed set is
      // the line through it along the +1 eigenvector. Otherwise the motion
      // is a glide reflection with no fixed points.
      Point st = mat_apply(F, m.matrix, m.translation);
      if (!(st == p_neg(F, m.translation))) return FixedSet{FixedSet::Kind::None};
      Point u0{F.half(m.translation.x1), F.half(m.translation.x2)};
      Fe a = m.matrix.m11, b = m.matrix.m12;
      Point e{b, F.sub(Fe{1}, a)};
      if (e.x1.v == 0 && e.x2.v == 0) e = Point{F.add(Fe{1}, a), b};
      // Line through u0 with direction e: e2*x - e1*y + (e1*u0y - e2*u0x) = 0
      Fe C = F.sub(F.mul(e.x1, u0.x2), F.mul(e.x2, u0.x1));
      Line l = make_line(F, e.x2, F.neg(e.x1), C);
      return FixedSet{FixedSet::Kind::Line, Point{}, l};
    }
  }
  fail(ErrorCode::InvalidInput, "unreachable motion kind");
}

RigidMotion reflection_fixing_line(const PrimeField& F, const Line& l) {
  if (is_isotropic(F, l)) {
    fail(ErrorCode::IsotropicLine, "no reflection fixes an isotropic line");
  }
  Point d = line_direction(F, l);
  Fe nd = norm(F, d);
  Fe s = F.inverse(nd);
  Fe d11 = F.mul(F.sub(F.mul(d.x1, d.x1), F.mul(d.x2, d.x2)), s);
  Fe d12 = F.mul(F.mul(Fe{2 % F.p()}, F.mul(d.x1, d.x2)), s);
  Matrix2 S{d11, d12, d12, F.neg(d11)};
  // Any point on l serves as the centre.
  Point u = l.a.v != 0 ? Point{F.neg(l.c), Fe{0}} : Point{Fe{0}, F.neg(l.c)};
  return reflection_about(F, u, S);
}

RigidMotion rotation_mapping_on_circle(const PrimeField& F, Point u, Point x, Point y) {
  Point xs = p_sub(F, x, u);
  Point ys = p_sub(F, y, u);
  Fe r = norm(F, xs);
  if (r.v == 0 || !(norm(F, ys) == r)) {
    fail(ErrorCode::InvalidCirclePair, "points must share a circle of nonzero radius about u");
  }
  Fe inv = F.inverse(r);
  Fe a = F.mul(inv, F.add(F.mul(xs.x1, ys.x1), F.mul(xs.x2, ys.x2)));
  Fe b = F.mul(inv, F.sub(F.mul(xs.x1, ys.x2), F.mul(xs.x2, ys.x1)));
  Matrix2 R{a, F.neg(b), b, a};
  return rotation_about(F, u, R);
}

RigidMotion motion_mapping_pair(const PrimeField& F, Point x, Point y, Point z, Point w) {
  if (x == z && y == w) fail(ErrorCode::InvalidQuadruple, "(x, y) and (z, w) must differ");
  Fe d = norm(F, p_sub(F, x, y));
  if (d.v == 0 || !(norm(F, p_sub(F, z, w)) == d)) {
    fail(ErrorCode::InvalidQuadruple, "pairs must span equal nonzero distances");
  }
  Point u = p_sub(F, y, x);
  Point v = p_sub(F, w, z);
  Matrix2 R;
  if (u == v) {
    R = mat_identity();
  } else {
    // Rotation matrix sending y-x to w-z; both vectors have norm d != 0.
    Fe inv = F.inverse(d);
    Fe a = F.mul(inv, F.add(F.mul(u.x1, v.x1), F.mul(u.x2, v.x2)));
    Fe b = F.mul(inv, F.sub(F.mul(u.x1, v.x2), F.mul(u.x2, v.x1)));
    R = Matrix2{a, F.neg(b), b, a};
  }
  return make_motion(F, R, p_sub(F, z, mat_apply(F, R, x)));
}

std::vector<std::pair<RigidMotion, RigidMotion>> reflection_pair_decompositions(
    const PrimeField& F, const RigidMotion& m) {
  std::vector<std::pair<RigidMotion, RigidMotion>> out;
  if (m.kind == MotionKind::Rotation) {
    FixedSet fs = fixed_set(F, m);
    Point u = fs.point;
    for (const Matrix2& S : enumerate_reflection_matrices(F)) {
      Matrix2 S2 = mat_mul(F, m.matrix, S);  // R = S2 * S, both about u
      out.emplace_back(reflection_about(F, u, S), reflection_about(F, u, S2));
    }
  } else if (m.kind == MotionKind::Translation) {
    Point d = m.translation;
    if (norm(F, d).v != 0) {
      // The reflection matrix negating d fixes the orthogonal direction e.
      Point e{F.neg(d.x2), d.x1};
      Fe s = F.inverse(norm(F, e));
      Fe s11 = F.mul(F.sub(F.mul(e.x1, e.x1), F.mul(e.x2, e.x2)), s);
      Fe s12 = F.mul(F.mul(Fe{2 % F.p()}, F.mul(e.x1, e.x2)), s);
      Matrix2 S{s11, s12, s12, F.neg(s11)};
      Fe hal = F.half(Fe{1});
      for (std::uint32_t t = 0; t < F.p(); ++t) {
        Fe ft{t};
        Point u1 = p_scale(F, F.neg(ft), d);
        Point u2 = p_scale(F, F.sub(hal, ft), d);
        out.emplace_back(reflection_about(F, u1, S), reflection_about(F, u2, S));
      }
    }
  } else {
    fail(ErrorCode::InvalidKind, "only rotations and translations decompose into reflection pairs");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_reflection_pairs_mapping(const PrimeField& F, Point x, Point y, Point z,
                                             Point w) {
  if ((x == z && y == w) || norm(F, p_sub(F, x, y)).v == 0 ||
      !(norm(F, p_sub(F, x, y)) == norm(F, p_sub(F, z, w)))) {
    fail(ErrorCode::InvalidQuadruple, "pairs must differ and span equal nonzero distances");
  }
  const auto refl = enumerate_reflections(F);
  std::uint64_t count = 0;
  for (const RigidMotion& r1 : refl) {
    Point r1x = apply(F, r1, x);
    Point r1y = apply(F, r1, y);
    for (const RigidMotion& r2 : refl) {
      if (apply(F, r2, z) == r1x && apply(F, r2, w) == r1y) ++count;
    }
  }
  return count;
}

}  // namespace bisect
