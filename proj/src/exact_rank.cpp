#include "sdepth/exact_rank.hpp"

#include <algorithm>
#include <limits>

#include "sdepth/error.hpp"

namespace sdepth {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_i64(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    fail("overflow", "pivot growth exceeded 64 bits in exact elimination");
  return static_cast<std::int64_t>(v);
}

// Bareiss one-step fraction-free elimination. All intermediate entries are
// minors of the input matrix, so they stay integral; the division by the
// previous pivot is exact.
int rank_bareiss(IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::int64_t prev_pivot = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
    const std::int64_t pivot = m.at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const std::int64_t head = m.at(i, c);
      for (int j = c; j < cols; ++j) {
        __int128 t = static_cast<__int128>(pivot) * m.at(i, j) -
                     static_cast<__int128>(head) * m.at(r, j);
        m.at(i, j) = checked_i64(t / prev_pivot);
      }
    }
    prev_pivot = pivot;
    ++r;
  }
  return r;
}

int rank_mod_p(IntMatrix& m, long long p) {
  const int rows = m.rows(), cols = m.cols();
  auto norm = [p](std::int64_t v) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = norm(m.at(i, j));
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot_row, j));
    // invert the pivot by Fermat
    std::int64_t inv = 1, base = m.at(r, c) % p;
    for (long long exp = p - 2; exp > 0; exp >>= 1) {
      if (exp & 1) inv = static_cast<std::int64_t>((__int128)inv * base % p);
      base = static_cast<std::int64_t>((__int128)base * base % p);
    }
    for (int i = r + 1; i < rows; ++i) {
      const std::int64_t factor =
          static_cast<std::int64_t>((__int128)m.at(i, c) * inv % p);
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j) {
        __int128 t = m.at(i, j) - (__int128)factor * m.at(r, j) % p;
        m.at(i, j) = norm(static_cast<std::int64_t>(t % p));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

CoefficientField CoefficientField::prime_field(long long p) {
  if (!is_prime(p)) fail("malformed-input", "field characteristic must be prime");
  return CoefficientField{p};
}

CoefficientField CoefficientField::of_characteristic(long long c) {
  return c == 0 ? rationals() : prime_field(c);
}

int rank(IntMatrix m, CoefficientField k) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return k.characteristic == 0 ? rank_bareiss(m) : rank_mod_p(m, k.characteristic);
}

}  // namespace sdepth
