#pragma once

#include <cstdint>
#include <vector>

#include "semibetti/linalg.hpp"
#include "semibetti/semigroup.hpp"

namespace semibetti {

/// Bitmask over the vertex list; bit i set means vertex i is in the face.
using FaceMask = std::uint32_t;

/// Simplicial complex on a vertex set of at most 24 generators. Faces are
/// stored as sorted bitmasks. The void complex (no faces at all) and the
/// complex {emptyset} are distinct values.
struct SimplicialComplex {
  std::vector<Int> vertices;
  std::vector<FaceMask> faces;

  bool is_void() const noexcept { return faces.empty(); }
  bool has_face(FaceMask face) const;
  bool is_full_simplex() const noexcept { return faces.size() == (std::size_t{1} << vertices.size()); }
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

inline constexpr std::size_t kMaxVertices = 24;

/// Squarefree divisor complex: generator subsets A with s - sum(A) in S.
/// Contains the empty face iff s is in S.
SimplicialComplex divisor_complex(const NumericalSemigroup& s, Int degree);

bool is_downward_closed(const SimplicialComplex& c);

/// dim of reduced homology H~_q for q = -1 .. |vertices|-1, stored at index
/// q+1. Ranks of the boundary maps are computed exactly over `field`
/// (fraction-free elimination for QQ). Orientation follows the vertex order.
/// The void complex has all dims 0.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c,
                                               CoefficientField field = CoefficientField::rationals());

/// Sum over faces of (-1)^dim, the empty face counted in dimension -1.
Int reduced_euler_characteristic(const SimplicialComplex& c);

}  // namespace semibetti
