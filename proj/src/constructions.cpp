#include "qsun/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsun {

namespace {

// Rows of a full-rank matrix, completed to a basis of F^d with the unit
// vectors of its non-pivot columns.
Matrix complete_basis(const Subspace& s) {
  const std::size_t d = s.ambient_dim();
  Matrix out(s.field(), d, d);
  std::vector<bool> is_piv(d, false);
  for (auto p : s.pivots()) is_piv[p] = true;
  std::size_t r = 0;
  for (; r < s.dim(); ++r) {
    std::copy(s.basis().row(r).begin(), s.basis().row(r).end(), out.row(r).begin());
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!is_piv[j]) out(r++, j) = s.field().one();
  }
  return out;
}

// Inserts a zero column at `pos` into every row.
Matrix insert_zero_column(const Matrix& m, std::size_t pos) {
  Matrix out(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, o = 0; o < out.cols(); ++o) {
      if (o == pos) continue;
      out(r, o) = m(r, c++);
    }
  }
  return out;
}

Matrix drop_column(const Matrix& m, std::size_t pos) {
  Matrix out(m.field(), m.rows(), m.cols() - 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, o = 0; c < m.cols(); ++c) {
      if (c == pos) continue;
      out(r, o++) = m(r, c);
    }
  }
  return out;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("rank chain check failed: " + what);
}

}  // namespace

InclExclReport incl_excl_demo(const Field& field) {
  const auto u = Subspace::row_space(Matrix::from_ints(field, {{1, 0, 0}, {0, 1, 0}}));
  const auto v = Subspace::row_space(Matrix::from_ints(field, {{1, 0, 0}, {0, 0, 1}}));
  const auto w = Subspace::row_space(Matrix::from_ints(field, {{1, 0, 0}, {0, 1, 1}}));
  const Subspace uv = intersect({u, v});
  const Subspace uw = intersect({u, w});
  const Subspace vw = intersect({v, w});
  InclExclReport r{u, v, w, uv.dim(), uw.dim(), vw.dim(), intersect({u, v, w}).dim(), sum({u, v, w}).dim(), 0,
                   uv == uw && uw == vw};
  r.naive_rhs = static_cast<long>(u.dim() + v.dim() + w.dim()) - static_cast<long>(r.dim_uv + r.dim_uw + r.dim_vw) +
                static_cast<long>(r.dim_uvw);
  return r;
}

std::vector<Subspace> field_reduction_spread(const Field& field) {
  std::vector<Subspace> spread = lift(field_matrix_rep(field, 2)).members();
  spread.push_back(
      Subspace::row_space(hstack({Matrix(field, 2, 2), Matrix::identity(field, 2)})));
  std::sort(spread.begin(), spread.end());
  return spread;
}

std::vector<Subspace> build_spread_through(const Field& field, const Subspace& t,
                                           const std::optional<Subspace>& first) {
  if (!(t.field() == field) || t.ambient_dim() != 5 || t.dim() != 1) {
    throw std::invalid_argument("spread needs a 1-space T of F_q^5");
  }
  const std::size_t c = t.pivots().front();

  std::vector<Subspace> quotient = field_reduction_spread(field);
  if (first) {
    if (!(first->field() == field) || first->ambient_dim() != 5 || first->dim() != 3 || !first->contains(t)) {
      throw std::invalid_argument("preferred plane must be a 3-space of F_q^5 through T");
    }
    // first = T + (first n {x_c = 0}); carry spread member 0 onto that part.
    std::vector<std::vector<Elem>> rows;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j == c) continue;
      std::vector<Elem> e(5, 0);
      e[j] = field.one();
      rows.push_back(e);
    }
    const Subspace complement = Subspace::from_rows(field, 5, rows);
    const Subspace target = Subspace::row_space(drop_column(intersect({*first, complement}).basis(), c));
    const Matrix g = inverse(complete_basis(quotient.front())) * complete_basis(target);
    for (auto& x : quotient) x = Subspace::row_space(x.basis() * g);
  }

  std::vector<Subspace> planes;
  planes.reserve(quotient.size());
  for (const auto& x : quotient) {
    planes.push_back(sum({t, Subspace::row_space(insert_zero_column(x.basis(), c))}));
  }
  const Subspace lead = first ? *first : *std::min_element(planes.begin(), planes.end());
  auto it = std::find(planes.begin(), planes.end(), lead);
  if (it == planes.end()) throw std::logic_error("preferred plane missing from the transformed spread");
  std::iter_swap(planes.begin(), it);
  std::sort(planes.begin() + 1, planes.end());
  return planes;
}

Subspace example4_plane(const Field& field) {
  return Subspace::row_space(Matrix::from_ints(field, {{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}}));
}

IkExample build_ik_family(const Field& field) {
  const Subspace t = Subspace::row_space(Matrix::from_ints(field, {{1, 0, 0, 0, 0}}));
  std::optional<Subspace> first;
  if (field.order() == 2) first = example4_plane(field);
  std::vector<Subspace> planes = build_spread_through(field, t, first);

  SubspaceFilter all_lines;
  all_lines.within = planes.front();
  std::vector<Subspace> members = enumerate_subspaces(field, 5, 2, all_lines);
  for (std::size_t i = 1; i < planes.size(); ++i) {
    SubspaceFilter missing_t;
    missing_t.disjoint_from = t;
    missing_t.within = planes[i];
    auto part = enumerate_subspaces(field, 5, 2, missing_t);
    members.insert(members.end(), part.begin(), part.end());
  }
  ConstantDimensionFamily family(field, 5, 2, std::move(members));
  return {t, std::move(planes), std::move(family)};
}

Example4 example4_triple(const Field& field) {
  if (field.order() != 2) throw std::invalid_argument("the explicit triple is defined over F_2 only");
  auto span = [&](std::initializer_list<std::initializer_list<int>> rows) {
    return Subspace::row_space(Matrix::from_ints(field, rows));
  };
  return {span({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}}), span({{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}}),
          span({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 1}}), span({{1, 0, 0, 0, 0}}), example4_plane(field)};
}

ThmConstruction build_thm_family(const Field& field, std::size_t ell, std::size_t n) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (n < 2 * ell + 1) {
    throw std::invalid_argument("need n >= 2 ell + 1, got n = " + std::to_string(n) + ", ell = " + std::to_string(ell));
  }
  RankMetricCode code = field_matrix_rep(field, ell);
  const Matrix id = Matrix::identity(field, ell);
  const Matrix zero(field, ell, n - 2 * ell - 1);
  std::vector<Matrix> generators;
  std::vector<Subspace> members;
  for (const auto& a : code.words()) {
    generators.push_back(hstack({id, a, first_column(a * a), zero}));
    members.push_back(orthocomplement(Subspace::row_space(generators.back())));
  }
  ConstantDimensionFamily family(field, n, n - ell, std::move(members));
  return {field, ell, n, n - ell, std::move(code), std::move(generators), std::move(family)};
}

RankChainReport verify_thm_rank_chain(const ThmConstruction& thm) {
  RankChainReport r;
  r.pair_rank = 2 * thm.ell;
  r.triple_rank = 2 * thm.ell + 1;
  r.pair_intersection_dim = thm.n - 2 * thm.ell;
  r.triple_intersection_dim = thm.n - 2 * thm.ell - 1;

  const auto& g = thm.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      expect(rank(vstack({g[i], g[j]})) == r.pair_rank, "pair rank");
      ++r.pairs_checked;
      for (std::size_t l = j + 1; l < g.size(); ++l) {
        expect(rank(vstack({g[i], g[j], g[l]})) == r.triple_rank, "triple rank");
        ++r.triples_checked;
      }
    }
  }

  const auto& words = thm.code.words();
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a == b) continue;
      expect(inverse(b - a) * (b * b - a * a) == b + a, "(B-A)^-1 (B^2-A^2) = B+A");
      ++r.quotient_identities;
      expect(!first_column(b - a).is_zero(), "[C-B]_1 nonzero");
      ++r.nonzero_columns;
    }
  }

  const auto& f = thm.family;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      expect(intersect({f[i], f[j]}).dim() == r.pair_intersection_dim, "pairwise intersection dimension");
      for (std::size_t l = j + 1; l < f.size(); ++l) {
        expect(intersect({f[i], f[j], f[l]}).dim() == r.triple_intersection_dim, "triple intersection dimension");
      }
    }
  }
  return r;
}

}  // namespace qsun
