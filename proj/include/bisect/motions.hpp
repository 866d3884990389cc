#pragma once

#include <utility>
#include <vector>

#include "bisect/plane.hpp"

namespace bisect {

struct Matrix2 {
  Fe m11, m12, m21, m22;
  friend auto operator<=>(const Matrix2&, const Matrix2&) = default;
};

inline Matrix2 mat_identity() { return Matrix2{Fe{1}, Fe{0}, Fe{0}, Fe{1}}; }

inline Point mat_apply(const PrimeField& F, const Matrix2& m, Point v) {
  return Point{F.add(F.mul(m.m11, v.x1), F.mul(m.m12, v.x2)),
               F.add(F.mul(m.m21, v.x1), F.mul(m.m22, v.x2))};
}

inline Matrix2 mat_mul(const PrimeField& F, const Matrix2& a, const Matrix2& b) {
  return Matrix2{F.add(F.mul(a.m11, b.m11), F.mul(a.m12, b.m21)),
                 F.add(F.mul(a.m11, b.m12), F.mul(a.m12, b.m22)),
                 F.add(F.mul(a.m21, b.m11), F.mul(a.m22, b.m21)),
                 F.add(F.mul(a.m21, b.m12), F.mul(a.m22, b.m22))};
}

inline Matrix2 mat_transpose(const Matrix2& m) { return Matrix2{m.m11, m.m21, m.m12, m.m22}; }

/// Shape (a, -b; b, a) with a^2 + b^2 = 1. Includes the identity.
bool is_rotation_matrix(const PrimeField& F, const Matrix2& m);

/// Shape (a, b; b, -a) with a^2 + b^2 = 1.
bool is_reflection_matrix(const PrimeField& F, const Matrix2& m);

enum class MotionKind { Identity, Rotation, Reflection, Translation };

const char* motion_kind_name(MotionKind kind);

/// A rigid motion in normal form: v |-> matrix * v + translation.
///
/// The kind tag is a pure function of the normal form: the identity matrix
/// splits into Identity/Translation on the translation part, any other
/// rotation-shaped matrix is a Rotation, and a reflection-shaped matrix is
/// tagged Reflection whether or not a fixed line exists (a reflection
/// composed with a translation off its axis glides; fixed_set reports None
/// for those).
struct RigidMotion {
  Matrix2 matrix;
  Point translation;
  MotionKind kind;
  friend auto operator<=>(const RigidMotion&, const RigidMotion&) = default;
};

/// Classifies (M, t); throws InvalidMatrix unless M is rotation- or
/// reflection-shaped with a^2 + b^2 = 1.
RigidMotion make_motion(const PrimeField& F, const Matrix2& m, Point t);

inline Point apply(const PrimeField& F, const RigidMotion& m, Point v) {
  return p_add(F, mat_apply(F, m.matrix, v), m.translation);
}

/// v |-> R(v - u) + u; throws InvalidMatrix when R is not a rotation matrix.
RigidMotion rotation_about(const PrimeField& F, Point u, const Matrix2& R);

/// v |-> S(v - u) + u; throws InvalidMatrix when S is not a reflection matrix.
RigidMotion reflection_about(const PrimeField& F, Point u, const Matrix2& S);

RigidMotion translation_by(const PrimeField& F, Point d);

/// All (a, b) with a^2 + b^2 = 1 as rotation matrices, sorted by (a, b).
/// Count: q-1 when p = 1 mod 4, q+1 when p = 3 mod 4.
std::vector<Matrix2> enumerate_rotation_matrices(const PrimeField& F);

/// Same counts, shape (a, b; b, -a).
std::vector<Matrix2> enumerate_reflection_matrices(const PrimeField& F);

/// Every reflection of the plane, one per non-isotropic line, sorted by
/// normal form. Count: q(q-1) resp. q(q+1).
std::vector<RigidMotion> enumerate_reflections(const PrimeField& F);

/// m2 after m1, classified.
RigidMotion compose(const PrimeField& F, const RigidMotion& m1, const RigidMotion& m2);

struct FixedSet {
  enum class Kind { All, None, Point, Line } kind;
  Point point{};  // valid when kind == Point
  Line line{};    // valid when kind == Line
};

/// Identity -> All; fixed-point-free motions (translations, glides) -> None;
/// non-trivial rotation -> its unique fixed point; reflection -> fixed line.
FixedSet fixed_set(const PrimeField& F, const RigidMotion& m);

/// The unique reflection whose fixed line is l; throws IsotropicLine when l
/// is isotropic (no reflection fixes such a line).
RigidMotion reflection_fixing_line(const PrimeField& F, const Line& l);

/// The unique rotation about u sending x to y, both on C_r(u) with r != 0.
/// Returns the identity when x == y. Throws InvalidCirclePair when r = 0 or
/// the radii differ.
RigidMotion rotation_mapping_on_circle(const PrimeField& F, Point u, Point x, Point y);

/// The unique rotation or translation with m(x) = z, m(y) = w, given
/// (x, y) != (z, w) and ||x-y|| = ||z-w|| != 0. Throws InvalidQuadruple on a
/// precondition violation.
RigidMotion motion_mapping_pair(const PrimeField& F, Point x, Point y, Point z, Point w);

/// All ordered reflection pairs (s1, s2) with s2 after s1 == m, sorted.
/// Rotation: q-1 resp. q+1 pairs; translation by non-isotropic d: q pairs;
/// translation by isotropic d != 0: none. Throws InvalidKind for identity or
/// reflection input.
std::vector<std::pair<RigidMotion, RigidMotion>> reflection_pair_decompositions(
    const PrimeField& F, const RigidMotion& m);

/// Number of ordered reflection pairs (r1, r2) with r1(x) = r2(z) and
/// r1(y) = r2(w), counted by exhaustive double loop over all reflections.
/// Preconditions as for motion_mapping_pair.
std::uint64_t count_reflection_pairs_mapping(const PrimeField& F, Point x, Point y, Point z,
                                             Point w);

}  // namespace bisect
