#include "evoder/rational_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "evoder/errors.hpp"

namespace evoder {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) ||
      (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-' || den.front() == '+'))) {
    throw MalformedInput("not a rational literal: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view v) {
    return std::string(!v.empty() && v.front() == '+' ? v.substr(1) : v);
  };
  mpz_class p(strip_plus(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) {
    q = mpz_class(std::string(den), 10);
    if (q == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::column(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), 1);
  m.data_ = entries;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::flattened() const {
  RationalMatrix v(rows_ * cols_, 1);
  v.data_ = data_;
  return v;
}

RationalMatrix RationalMatrix::reshaped(const RationalMatrix& vec, std::size_t rows,
                                        std::size_t cols) {
  if (vec.data_.size() != rows * cols) throw DimensionMismatch("reshape: element count differs");
  RationalMatrix m(rows, cols);
  m.data_ = vec.data_;
  return m;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shapes differ");
  RationalMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c) + b(r, c);
  return s;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

RrefResult rref(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;  // nonzero columns of the current pivot row
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pick = lead;
    while (pick < rows && sgn(m(pick, col)) == 0) ++pick;
    if (pick == rows) continue;
    m.swap_rows(lead, pick);

    const Rational inv = 1 / m(lead, col);
    support.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (sgn(m(lead, c)) != 0) {
        m(lead, c) *= inv;
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c : support) m(r, c) -= factor * m(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalMatrix> null_space(const RationalMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalMatrix> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalMatrix x(cols, 1);
    x(free, 0) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r], 0) = -reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<Rational> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

std::string to_csv(const RationalMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

RationalMatrix canonical_span(const std::vector<RationalMatrix>& vectors, std::size_t length) {
  RationalMatrix stacked(vectors.size(), length);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    const auto& v = vectors[r].data();
    if (v.size() != length) throw DimensionMismatch("canonical_span: vector length differs");
    for (std::size_t c = 0; c < length; ++c) stacked(r, c) = v[c];
  }
  auto [reduced, pivots] = rref(std::move(stacked));
  RationalMatrix basis(pivots.size(), length);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < length; ++c) basis(r, c) = reduced(r, c);
  return basis;
}

bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b) {
  std::size_t length = 0;
  if (!a.empty()) length = a.front().data().size();
  else if (!b.empty()) length = b.front().data().size();
  return canonical_span(a, length) == canonical_span(b, length);
}

bool in_span(const std::vector<RationalMatrix>& basis, const RationalMatrix& x) {
  auto extended = basis;
  extended.push_back(x);
  const std::size_t length = x.data().size();
  return canonical_span(basis, length).rows() == canonical_span(extended, length).rows();
}

}  // namespace evoder
