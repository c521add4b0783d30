#include "qsun/subspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace qsun {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(a.ambient_dim()) +
                                " vs " + std::to_string(b.ambient_dim()));
  }
}

// Calls emit(M) for every k x d matrix in reduced row echelon form of full
// row rank, i.e. once per k-subspace of F_q^d.
void for_each_rref(const Field& field, std::size_t d, std::size_t k,
                   const std::function<void(const Matrix&)>& emit) {
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  const std::uint32_t q = field.order();
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_piv(d, false);
    for (auto p : piv) is_piv[p] = true;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = piv[r] + 1; c < d; ++c) {
        if (!is_piv[c]) free.emplace_back(r, c);
      }
    }
    Matrix m(field, k, d);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = field.one();
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) {
        m(free[i].first, free[i].second) = static_cast<Elem>(digits[i]);
      }
      emit(m);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    // Next pivot combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == d - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace

Subspace Subspace::from_rows(const Field& field, std::size_t n,
                             const std::vector<std::vector<Elem>>& rows) {
  return row_space(Matrix(field, n, rows));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

Subspace Subspace::zero(const Field& field, std::size_t n) { return row_space(Matrix(field, 0, n)); }

Subspace Subspace::full(const Field& field, std::size_t n) {
  return row_space(Matrix::identity(field, n));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length differs from ambient dimension");
  const Field& f = field();
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(nc, basis_(i, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis().row(i))) return false;
  }
  return true;
}

Subspace sum(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw std::invalid_argument("sum of no subspaces");
  std::vector<Matrix> blocks;
  blocks.reserve(spaces.size());
  for (const auto& s : spaces) {
    require_compatible(spaces.front(), s);
    blocks.push_back(s.basis());
  }
  return Subspace::row_space(vstack(blocks));
}

Subspace sum(std::initializer_list<Subspace> spaces) {
  return sum(std::span<const Subspace>(spaces.begin(), spaces.size()));
}

Subspace intersect(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw std::invalid_argument("intersection of no subspaces");
  std::vector<Subspace> perps;
  perps.reserve(spaces.size());
  for (const auto& s : spaces) {
    require_compatible(spaces.front(), s);
    perps.push_back(orthocomplement(s));
  }
  return orthocomplement(sum(perps));
}

Subspace intersect(std::initializer_list<Subspace> spaces) {
  return intersect(std::span<const Subspace>(spaces.begin(), spaces.size()));
}

Subspace orthocomplement(const Subspace& u) {
  const Field& f = u.field();
  const std::size_t n = u.ambient_dim();
  const Matrix& b = u.basis();
  std::vector<bool> is_piv(n, false);
  for (auto p : u.pivots()) is_piv[p] = true;
  // One kernel vector per free column j: x_j = 1, x_{pivot_i} = -b(i, j).
  Matrix kernel(f, n - u.dim(), n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    kernel(r, j) = f.one();
    for (std::size_t i = 0; i < u.dim(); ++i) kernel(r, u.pivots()[i]) = f.neg(b(i, j));
    ++r;
  }
  return Subspace::row_space(kernel);
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, std::size_t k,
                                          const SubspaceFilter& filter, EnumerationOptions options) {
  if (k > n) throw std::invalid_argument("subspace dimension " + std::to_string(k) + " exceeds ambient " +
                                         std::to_string(n));
  for (const auto* w : {&filter.through, &filter.disjoint_from, &filter.within}) {
    if (!*w) continue;
    if (!((*w)->field() == field) || (*w)->ambient_dim() != n) {
      throw std::invalid_argument("filter subspace lives in a different ambient space");
    }
  }

  const std::size_t search_dim = filter.within ? filter.within->dim() : n;
  std::vector<Subspace> out;
  if (k > search_dim) return out;
  const BigInt count = gaussian_binomial(field.order(), search_dim, k);
  if (count > options.max_count) {
    throw LimitExceeded("enumeration of " + count.str() + " subspaces exceeds the cap of " +
                        std::to_string(options.max_count));
  }

  auto accept = [&](const Subspace& s) {
    if (filter.through && !s.contains(*filter.through)) return false;
    if (filter.disjoint_from && sum({s, *filter.disjoint_from}).dim() != s.dim() + filter.disjoint_from->dim()) {
      return false;
    }
    return true;
  };

  for_each_rref(field, search_dim, k, [&](const Matrix& m) {
    Subspace s = filter.within ? Subspace::row_space(m * filter.within->basis()) : Subspace::row_space(m);
    if (accept(s)) out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, i + 1) - 1;
  }
  return num / den;
}

}  // namespace qsun
