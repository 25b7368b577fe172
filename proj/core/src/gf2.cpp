#include "cycflat/gf2.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "cycflat/error.hpp"

namespace cycflat {

BinaryMatrix::BinaryMatrix(int cols, std::vector<std::uint64_t> rows)
    : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0 || cols > kMaxGround) throw PreconditionError("matrix must have 0..64 columns");
  const std::uint64_t keep = SubsetMask::full(cols).bits();
  for (auto& r : rows_) r &= keep;
}

BinaryMatrix BinaryMatrix::from_columns(int rows, const std::vector<std::uint64_t>& columns) {
  std::vector<std::uint64_t> r(rows, 0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int i = 0; i < rows; ++i) {
      if ((columns[j] >> i) & 1U) r[i] |= std::uint64_t{1} << j;
    }
  }
  return BinaryMatrix(static_cast<int>(columns.size()), std::move(r));
}

BinaryMatrix BinaryMatrix::select_columns(SubsetMask cols) const {
  std::vector<std::uint64_t> r;
  r.reserve(rows_.size());
  const SubsetMask support = cols & SubsetMask::full(cols_);
  for (auto row : rows_) r.push_back(compress(SubsetMask(row), support).bits());
  return BinaryMatrix(support.size(), std::move(r));
}

BinaryMatrix parse_matrix(std::istream& in) {
  std::vector<std::uint64_t> rows;
  int width = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::string tok;
    std::uint64_t row = 0;
    int count = 0;
    // Entries may be separated by whitespace or written as one run "0110".
    while (ss >> tok) {
      if (tok.find_first_not_of("01") != std::string::npos) {
        throw ParseError(ParseErrorKind::NonBinary, lineno,
                         "line " + std::to_string(lineno) + ": non-binary token '" + tok + "'");
      }
      for (char c : tok) {
        if (count >= kMaxGround) {
          throw ParseError(ParseErrorKind::TooWide, lineno,
                           "line " + std::to_string(lineno) + ": more than 64 columns");
        }
        if (c == '1') row |= std::uint64_t{1} << count;
        ++count;
      }
    }
    if (width < 0) {
      width = count;
    } else if (count != width) {
      throw ParseError(ParseErrorKind::Ragged, lineno,
                       "line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                           " entries, found " + std::to_string(count));
    }
    rows.push_back(row);
  }
  if (rows.empty() || width == 0) throw ParseError(ParseErrorKind::Empty, 0, "empty matrix");
  return BinaryMatrix(width, std::move(rows));
}

BinaryMatrix parse_matrix_text(std::string_view text) {
  std::istringstream ss{std::string(text)};
  return parse_matrix(ss);
}

namespace {

// Inserts v into a pivot table indexed by leading bit; returns true when v was
// independent of the table.
bool insert_reduced(std::array<std::uint64_t, 64>& pivots, std::uint64_t v) {
  while (v != 0) {
    const int p = 63 - std::countl_zero(v);
    if (pivots[p] == 0) {
      pivots[p] = v;
      return true;
    }
    v ^= pivots[p];
  }
  return false;
}

}  // namespace

int rank_of_columns(const BinaryMatrix& m, SubsetMask cols) {
  // Row rank of the column-restricted matrix equals its column rank.
  std::array<std::uint64_t, 64> pivots{};
  int rank = 0;
  const std::uint64_t mask = cols.bits();
  for (auto row : m.row_masks()) {
    if (insert_reduced(pivots, row & mask)) {
      if (++rank == cols.size()) break;
    }
  }
  return rank;
}

std::vector<std::uint64_t> row_space_basis(const BinaryMatrix& m) {
  std::array<std::uint64_t, 64> pivots{};
  for (auto row : m.row_masks()) insert_reduced(pivots, row);
  std::vector<std::uint64_t> basis;
  for (auto v : pivots) {
    if (v != 0) basis.push_back(v);
  }
  return basis;
}

std::vector<Codeword> enumerate_codewords(const BinaryMatrix& m) {
  const auto basis = row_space_basis(m);
  const int dim = static_cast<int>(basis.size());
  if (dim > kMaxCodewordDimension) {
    throw GuardExceeded("row space dimension " + std::to_string(dim) + " exceeds " +
                        std::to_string(kMaxCodewordDimension));
  }
  const std::uint64_t count = std::uint64_t{1} << dim;
  std::vector<Codeword> out;
  out.reserve(count);
  std::uint64_t word = 0;
  out.push_back({0, 0});
  // Gray code walk: step i flips the basis vector at the lowest set bit of i.
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= basis[std::countr_zero(i)];
    out.push_back({word, std::popcount(word)});
  }
  std::sort(out.begin(), out.end(), [](const Codeword& a, const Codeword& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.bits < b.bits;
  });
  return out;
}

}  // namespace cycflat
