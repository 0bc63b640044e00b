#pragma once

#include <cstdint>
#include <vector>

namespace sdepth {

// Arithmetic is exact: the rationals, or integers mod a prime.
struct CoefficientField {
  long long characteristic = 0;

  static CoefficientField rationals() { return CoefficientField{0}; }
  static CoefficientField prime_field(long long p);
  static CoefficientField of_characteristic(long long c);

  bool operator==(const CoefficientField&) const = default;
};

// Small dense integer matrix, row major.
class IntMatrix {
public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }
  std::int64_t at(int r, int c) const {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Rank of an integer matrix over the given field. Characteristic zero uses
// fraction-free Bareiss elimination with 128-bit intermediates (overflow is a
// hard error, never a wrong answer); characteristic p reduces mod p first.
int rank(IntMatrix m, CoefficientField k);

}  // namespace sdepth
