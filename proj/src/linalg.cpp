#include "semibetti/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <optional>
#include <type_traits>
#include <utility>

namespace semibetti {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const T p = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, Int>) {
          a[i][j] = checked_sub(checked_mul(p, a[i][j]), checked_mul(lead, a[rank][j])) / prev;
        } else {
          a[i][j] = (p * a[i][j] - lead * a[rank][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<std::vector<T>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = T(m(r, c));
  }
  return out;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
  try {
    return bareiss_rank(to_rows<Int>(m));
  } catch (const Overflow&) {
    return bareiss_rank(to_rows<BigInt>(m));
  }
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint32_t p) {
  const Int mod = p;
  auto a = to_rows<Int>(m);
  for (auto& row : a) {
    for (Int& v : row) v = ((v % mod) + mod) % mod;
  }
  const auto inverse = [mod](Int x) {
    // Fermat: x^(p-2)
    Int result = 1, base = x, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Int inv = inverse(a[rank][c]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Int factor = a[i][c] * inv % mod;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = ((a[i][j] - factor * a[rank][j]) % mod + mod) % mod;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const IntMatrix& m, CoefficientField field) {
  if (field.is_rational()) return rank_rational(m);
  return rank_mod_prime(m, field.characteristic);
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) out(r, c) = v;
  }
  return out;
}

namespace {

using Row = SparseIntMatrix::Row;

// target - factor * pivot, dropping zeros. Entries are reduced mod p when
// p is nonzero.
Row axpy(const Row& target, Int factor, const Row& pivot, Int p) {
  Row out;
  out.reserve(target.size() + pivot.size());
  const auto reduce = [p](Int v) { return p == 0 ? v : ((v % p) + p) % p; };
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
      continue;
    }
    const Int scaled = reduce(checked_mul(factor, pivot[j].second));
    Int v;
    std::uint32_t col;
    if (i == target.size() || pivot[j].first < target[i].first) {
      col = pivot[j].first;
      v = reduce(checked_sub(0, scaled));
    } else {
      col = target[i].first;
      v = reduce(checked_sub(target[i].second, scaled));
      ++i;
    }
    ++j;
    if (v != 0) out.emplace_back(col, v);
  }
  return out;
}

Int inverse_mod(Int x, Int p) {
  Int result = 1, base = x % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t sparse_rank(SparseIntMatrix m, Int p) {
  auto& rows = m.rows;
  if (p != 0) {
    for (auto& row : rows) {
      Row reduced;
      for (auto [c, v] : row) {
        const Int r = ((v % p) + p) % p;
        if (r != 0) reduced.emplace_back(c, r);
      }
      row = std::move(reduced);
    }
  }
  const auto is_unit = [p](Int v) { return p == 0 ? (v == 1 || v == -1) : v != 0; };

  // col_rows[c] lists rows that may hold column c (stale entries allowed).
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }
  std::vector<char> active(rows.size(), 1);
  std::size_t rank = 0;
  while (true) {
    // Shortest active row with a unit entry; its unit column of least fill.
    std::size_t best_row = rows.size();
    std::size_t best_pos = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      if (rows[r].empty()) {
        active[r] = 0;
        continue;
      }
      if (best_row != rows.size() && rows[r].size() >= rows[best_row].size()) continue;
      std::size_t pos = rows[r].size();
      for (std::size_t k = 0; k < rows[r].size(); ++k) {
        if (!is_unit(rows[r][k].second)) continue;
        if (pos == rows[r].size() || col_rows[rows[r][k].first].size() < col_rows[rows[r][pos].first].size()) pos = k;
      }
      if (pos == rows[r].size()) continue;
      best_row = r;
      best_pos = pos;
      if (rows[r].size() == 1) break;
    }
    if (best_row == rows.size()) break;

    const Row pivot = rows[best_row];
    const auto [col, u] = pivot[best_pos];
    active[best_row] = 0;
    ++rank;
    const Int u_inv = p == 0 ? u : inverse_mod(u, p);
    const auto holders = std::move(col_rows[col]);
    col_rows[col].clear();
    for (std::uint32_t r : holders) {
      if (!active[r]) continue;
      const auto it = std::lower_bound(rows[r].begin(), rows[r].end(), std::make_pair(col, Int{0}),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it == rows[r].end() || it->first != col) continue;
      const Int factor = p == 0 ? checked_mul(it->second, u_inv) : it->second * u_inv % p;
      Row updated = axpy(rows[r], factor, pivot, p);
      for (const auto& [c, v] : updated) {
        if (c != col && !std::binary_search(rows[r].begin(), rows[r].end(), std::make_pair(c, Int{0}),
                                            [](const auto& a, const auto& b) { return a.first < b.first; })) {
          col_rows[c].push_back(r);
        }
      }
      rows[r] = std::move(updated);
    }
  }

  SparseIntMatrix rest;
  rest.cols = m.cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (active[r] && !rows[r].empty()) rest.rows.push_back(std::move(rows[r]));
  }
  if (rest.rows.empty()) return rank;
  const IntMatrix dense = rest.to_dense();
  return rank + (p == 0 ? rank_rational(dense) : rank_mod_prime(dense, static_cast<std::uint32_t>(p)));
}

}  // namespace

std::size_t rank(const SparseIntMatrix& m, CoefficientField field) {
  if (!field.is_rational()) return sparse_rank(m, field.characteristic);
  try {
    return sparse_rank(m, 0);
  } catch (const Overflow&) {
    return rank_rational(m.to_dense());
  }
}

}  // namespace semibetti
