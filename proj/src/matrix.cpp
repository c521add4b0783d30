#include "qsun/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsun {

namespace {

void require_field(const Field& a, const Field& b) {
  if (!(a == b)) throw std::invalid_argument("matrices over different fields");
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    : Matrix(std::move(field), rows.size(), cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!field_.contains(rows[r][c])) throw std::invalid_argument("matrix entry outside field");
      (*this)(r, c) = rows[r][c];
    }
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<std::vector<Elem>> data;
  for (const auto& r : rows) {
    auto& out = data.emplace_back();
    for (int v : r) out.push_back(field.from_int(v));
  }
  return Matrix(field, cols, data);
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.a_) e = field_.neg(e);
  return r;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = field_.mul(e, s);
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("cannot multiply " + shape(a) + " by " + shape(b));
  }
  const Field& f = a.field_;
  Matrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && a.field_ == b.field_;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.a_ <=> b.a_;
}

Rref rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix w = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < w.cols() && lead < w.rows(); ++c) {
    std::size_t r = lead;
    while (r < w.rows() && w(r, c) == 0) ++r;
    if (r == w.rows()) continue;
    if (r != lead) {
      auto a = w.row(r);
      auto b = w.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem s = f.inv(w(lead, c));
    for (auto& e : w.row(lead)) e = f.mul(e, s);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == lead) continue;
      const Elem factor = w(i, c);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < w.cols(); ++j) w(i, j) = f.add(w(i, j), f.mul(nf, w(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(f, lead, w.cols());
  for (std::size_t i = 0; i < lead; ++i) {
    std::copy(w.row(i).begin(), w.row(i).end(), reduced.row(i).begin());
  }
  return {std::move(reduced), lead, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix matmul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack of no blocks");
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    require_field(blocks.front().field(), b.field());
    if (b.rows() != rows) throw std::invalid_argument("hstack row count mismatch");
    cols += b.cols();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, off + c) = b(r, c);
    }
    off += b.cols();
  }
  return out;
}

Matrix hstack(std::initializer_list<Matrix> blocks) {
  return hstack(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack of no blocks");
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_field(blocks.front().field(), b.field());
    if (b.cols() != cols) throw std::invalid_argument("vstack column count mismatch");
    rows += b.rows();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      std::copy(b.row(r).begin(), b.row(r).end(), out.row(off + r).begin());
    }
    off += b.rows();
  }
  return out;
}

Matrix vstack(std::initializer_list<Matrix> blocks) {
  return vstack(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix companion(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("companion matrix needs a monic polynomial");
  if (f.degree() < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  const auto k = static_cast<std::size_t>(f.degree());
  const Field& fld = f.field();
  Matrix a(fld, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = fld.one();
  for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = fld.neg(f.coeffs()[j]);
  return a;
}

Matrix evaluate(const Poly& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  require_field(f.field(), a.field());
  const Matrix id = Matrix::identity(a.field(), a.rows());
  Matrix acc(a.field(), a.rows(), a.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * a + id.scaled(f.coeffs()[i]);
  return acc;
}

Matrix first_column(const Matrix& a) {
  if (a.cols() == 0) throw std::invalid_argument("first_column of a matrix with no columns");
  Matrix c(a.field(), a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) c(r, 0) = a(r, 0);
  return c;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const Rref r = rref(hstack({a, Matrix::identity(a.field(), n)}));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) throw std::domain_error("matrix is singular");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

}  // namespace qsun
