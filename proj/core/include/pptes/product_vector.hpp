#pragma once

// Product vectors |a> ⊗ |b> in C3 ⊗ C3, stored projectively: each factor is
// scaled so its first nonzero coordinate equals one, and coordinates smaller
// than 1e-12 of the largest modulus are clipped to exact zero first.

#include <vector>

#include "pptes/types.hpp"

namespace pptes {

// Relative threshold below which a component counts as zero when choosing
// the canonical representative. It must absorb the numerical noise a polished
// root leaves in components that vanish exactly at a solution; otherwise the
// noise becomes the scaling pivot and one projective point gets wildly
// different representatives.
inline constexpr double kProjectiveZeroClip = 1e-9;

// Canonical projective representative of a nonzero vector.
Vec3 projective_canonical(const Vec3& v, double zero_clip = kProjectiveZeroClip);

// Componentwise relative sup distance between canonical representatives.
// Relative, because canonical components can be large (the representative is
// scaled so its first nonzero component is 1) and closeness of projective
// points must not depend on that scale.
double projective_distance(const Vec3& v, const Vec3& w);

struct ProductVector {
  Vec3 a;
  Vec3 b;

  // Canonicalizes both factors; throws InvalidParameterError on a zero factor.
  ProductVector(const Vec3& a_in, const Vec3& b_in);

  // |a> ⊗ |b> of the canonical representatives, index 3 i + j.
  CVec full() const;

  static ProductVector basis(int i, int j);
};

// Max of the two factor distances (projective_distance on each side).
double product_distance(const ProductVector& v, const ProductVector& w);

bool operator==(const ProductVector& v, const ProductVector& w);

// Strict deterministic ordering of canonical representatives, used to make
// search output reproducible.
bool product_vector_less(const ProductVector& v, const ProductVector& w);

}  // namespace pptes
