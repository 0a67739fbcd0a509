#include "semibetti/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace semibetti {

namespace {

int face_size(FaceMask face) { return std::popcount(face); }

// A complex with a cone point is contractible.
bool has_cone_point(const SimplicialComplex& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    const FaceMask bit = FaceMask{1} << v;
    const bool apex = std::all_of(c.faces.begin(), c.faces.end(),
                                  [&](FaceMask face) { return c.has_face(face | bit); });
    if (apex) return true;
  }
  return false;
}

}  // namespace

bool SimplicialComplex::has_face(FaceMask face) const {
  return std::binary_search(faces.begin(), faces.end(), face);
}

SimplicialComplex divisor_complex(const NumericalSemigroup& s, Int degree) {
  const auto& gens = s.generators();
  if (gens.size() > kMaxVertices) {
    throw Error(ErrorKind::InvalidGenerator, "divisor complexes support at most 24 generators");
  }
  SimplicialComplex c{gens, {}};
  const FaceMask limit = FaceMask{1} << gens.size();
  for (FaceMask face = 0; face < limit; ++face) {
    Int sum = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (face & (FaceMask{1} << i)) sum += gens[i];
    }
    if (s.contains(degree - sum)) c.faces.push_back(face);
  }
  return c;
}

bool is_downward_closed(const SimplicialComplex& c) {
  for (FaceMask face : c.faces) {
    for (FaceMask rest = face; rest; rest &= rest - 1) {
      const FaceMask lowest = rest & (~rest + 1);
      if (!c.has_face(face & ~lowest)) return false;
    }
  }
  return true;
}

Int reduced_euler_characteristic(const SimplicialComplex& c) {
  Int chi = 0;
  for (FaceMask face : c.faces) chi += (face_size(face) % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c, CoefficientField field) {
  const std::size_t k = c.vertices.size();
  std::vector<std::size_t> dims(k + 1, 0);
  if (c.is_void() || c.is_full_simplex() || has_cone_point(c)) return dims;

  // faces_by_size[p] holds faces with p vertices, i.e. dimension p - 1.
  std::vector<std::vector<FaceMask>> faces_by_size(k + 1);
  for (FaceMask face : c.faces) faces_by_size[static_cast<std::size_t>(face_size(face))].push_back(face);

  // boundary_rank[p] = rank of the map from p-vertex faces to (p-1)-vertex faces.
  std::vector<std::size_t> boundary_rank(k + 2, 0);
  for (std::size_t p = 1; p <= k; ++p) {
    const auto& cols = faces_by_size[p];
    const auto& rows = faces_by_size[p - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<FaceMask, std::uint32_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<std::uint32_t>(r));
    // Transposed: one sparse row per p-vertex face.
    SparseIntMatrix boundary;
    boundary.cols = rows.size();
    boundary.rows.resize(cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) {
      auto& entries = boundary.rows[col];
      int position = 0;
      for (std::size_t v = 0; v < k; ++v) {
        const FaceMask bit = FaceMask{1} << v;
        if (!(cols[col] & bit)) continue;
        entries.emplace_back(row_index.at(cols[col] & ~bit), (position % 2 == 0) ? 1 : -1);
        ++position;
      }
      std::sort(entries.begin(), entries.end());
    }
    boundary_rank[p] = rank(boundary, field);
  }
  for (std::size_t p = 0; p <= k; ++p) {
    dims[p] = faces_by_size[p].size() - boundary_rank[p] - boundary_rank[p + 1];
  }
  return dims;
}

}  // namespace semibetti
