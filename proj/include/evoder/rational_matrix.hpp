#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evoder {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses `p` or `p/q` (optional sign, surrounding whitespace ignored).
/// Throws MalformedInput on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

/// Dense row-major matrix of rationals. Empty shapes (0 rows or 0 cols)
/// are valid.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Throws MalformedInput if the rows are ragged.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix column(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;
  RationalMatrix transposed() const;
  /// Row-major flattening into a rows*cols x 1 column.
  RationalMatrix flattened() const;
  /// Inverse of flattened(): reads a column (or row) vector into shape.
  static RationalMatrix reshaped(const RationalMatrix& vec, std::size_t rows,
                                 std::size_t cols);

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Gauss-Jordan elimination with pivot-row normalization.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Kernel basis in RREF-parameterized form: one column vector per free
/// column f, with x_f = 1, other free entries 0, pivot entries solved.
std::vector<RationalMatrix> null_space(const RationalMatrix& m);

/// Throws DimensionMismatch when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

/// One row per line, comma-separated rational literals. Blank lines are
/// skipped; ragged rows throw MalformedInput.
RationalMatrix parse_matrix_csv(std::string_view text);
std::string to_csv(const RationalMatrix& m);

/// Canonical basis of the span of `vectors`, each flattened row-major:
/// the nonzero rows of the RREF of the stacked vectors. Two families span
/// the same space iff their canonical spans are equal.
RationalMatrix canonical_span(const std::vector<RationalMatrix>& vectors,
                              std::size_t length);

bool same_span(const std::vector<RationalMatrix>& a,
               const std::vector<RationalMatrix>& b);

bool in_span(const std::vector<RationalMatrix>& basis, const RationalMatrix& x);

}  // namespace evoder
