#include "qsun/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "qsun/poly.hpp"

namespace qsun {

RankMetricCode::RankMetricCode(Field field, std::size_t rows, std::size_t cols, std::vector<Matrix> words)
    : field_(std::move(field)), rows_(rows), cols_(cols), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (!(w.field() == field_)) throw std::invalid_argument("code word over a different field");
    if (w.rows() != rows_ || w.cols() != cols_) throw std::invalid_argument("code word has the wrong shape");
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw std::invalid_argument("duplicate code word");
  }
}

ConstantDimensionFamily::ConstantDimensionFamily(Field field, std::size_t ambient_dim, std::size_t member_dim,
                                                 std::vector<Subspace> members)
    : field_(std::move(field)), ambient_dim_(ambient_dim), member_dim_(member_dim), members_(std::move(members)) {
  for (const auto& s : members_) {
    if (!(s.field() == field_)) throw std::invalid_argument("family member over a different field");
    if (s.ambient_dim() != ambient_dim_) throw std::invalid_argument("family member has the wrong ambient dimension");
    if (s.dim() != member_dim_) {
      throw std::invalid_argument("family member has dimension " + std::to_string(s.dim()) + ", expected " +
                                  std::to_string(member_dim_));
    }
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("duplicate family member");
  }
}

std::optional<std::size_t> ConstantDimensionFamily::find(const Subspace& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::size_t rank_distance(const Matrix& a, const Matrix& b) { return rank(a - b); }

std::size_t min_rank_distance(const RankMetricCode& code) {
  const auto& w = code.words();
  if (w.size() < 2) throw std::invalid_argument("minimum distance needs at least two code words");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, rank_distance(w[i], w[j]));
  }
  return best;
}

BigInt singleton_bound(std::size_t rows, std::size_t cols, std::size_t d, std::uint64_t q) {
  const std::size_t lo = std::min(rows, cols);
  const std::size_t hi = std::max(rows, cols);
  if (d < 1 || d > lo) {
    throw std::invalid_argument("rank distance " + std::to_string(d) + " outside [1, " + std::to_string(lo) + "]");
  }
  return big_pow(q, hi * (lo - d + 1));
}

MrdVerdict is_mrd(const RankMetricCode& code) {
  const std::size_t d = min_rank_distance(code);
  BigInt bound = singleton_bound(code.rows(), code.cols(), d, code.field().order());
  if (BigInt(code.size()) > bound) throw std::logic_error("code exceeds the Singleton-like bound");
  return {BigInt(code.size()) == bound, code.size(), std::move(bound), d};
}

RankMetricCode field_matrix_rep(const Field& base, std::size_t ell) {
  if (ell < 1) throw std::invalid_argument("representation degree must be >= 1");
  const Matrix a = companion(smallest_monic_irreducible(base, static_cast<int>(ell)));
  std::vector<Matrix> powers{Matrix::identity(base, ell)};
  for (std::size_t i = 1; i < ell; ++i) powers.push_back(powers.back() * a);

  const std::uint32_t q = base.order();
  std::vector<Matrix> words;
  std::vector<std::uint32_t> c(ell, 0);
  while (true) {
    Matrix w(base, ell, ell);
    for (std::size_t i = 0; i < ell; ++i) w = w + powers[i].scaled(static_cast<Elem>(c[i]));
    words.push_back(std::move(w));
    std::size_t i = 0;
    while (i < ell && ++c[i] == q) c[i++] = 0;
    if (i == ell) break;
  }
  return RankMetricCode(base, ell, ell, std::move(words));
}

ConstantDimensionFamily lift(const RankMetricCode& code) {
  const std::size_t k = code.rows();
  const Matrix id = Matrix::identity(code.field(), k);
  std::vector<Subspace> members;
  members.reserve(code.size());
  for (const auto& w : code.words()) members.push_back(Subspace::row_space(hstack({id, w})));
  return ConstantDimensionFamily(code.field(), k + code.cols(), k, std::move(members));
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - 2 * intersect({u, v}).dim();
}

std::size_t min_subspace_distance(const ConstantDimensionFamily& family) {
  if (family.size() < 2) throw std::invalid_argument("minimum distance needs at least two members");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      best = std::min(best, subspace_distance(family[i], family[j]));
    }
  }
  return best;
}

}  // namespace qsun
