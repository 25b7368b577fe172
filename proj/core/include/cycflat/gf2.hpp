// Binary matrices with at most 64 columns, one uint64 mask per row.
#pragma once

#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "cycflat/subset.hpp"

namespace cycflat {

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  // Each row is a mask over the n columns; column j (0-based) is bit j.
  BinaryMatrix(int cols, std::vector<std::uint64_t> rows);
  // Builds a matrix from its columns, each a mask over `rows` bits.
  static BinaryMatrix from_columns(int rows, const std::vector<std::uint64_t>& columns);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  std::uint64_t row(int i) const { return rows_[i]; }
  const std::vector<std::uint64_t>& row_masks() const { return rows_; }
  bool at(int r, int c) const { return (rows_[r] >> c) & 1U; }
  // Keeps the given columns, in ascending order.
  BinaryMatrix select_columns(SubsetMask cols) const;

 private:
  int cols_ = 0;
  std::vector<std::uint64_t> rows_;
};

// One row per line, entries 0/1 either whitespace-separated or run together. Blank lines and
// lines starting with '#' are ignored. Throws ParseError.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix_text(std::string_view text);

// Rank over GF(2) of the columns indexed by `cols`.
int rank_of_columns(const BinaryMatrix& m, SubsetMask cols);

// Reduced basis of the row space: independent rows with distinct leading bits.
std::vector<std::uint64_t> row_space_basis(const BinaryMatrix& m);

struct Codeword {
  std::uint64_t bits = 0;
  int weight = 0;
  bool operator==(const Codeword&) const = default;
};

inline constexpr int kMaxCodewordDimension = 24;

// All distinct codewords of the row space, zero included, sorted by
// (weight, mask). Throws GuardExceeded above kMaxCodewordDimension.
std::vector<Codeword> enumerate_codewords(const BinaryMatrix& m);

}  // namespace cycflat
