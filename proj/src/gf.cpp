#include "qsun/gf.hpp"

#include <sstream>

#include "qsun/poly.hpp"

namespace qsun {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> split_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

Field Field::build(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  auto t = std::make_shared<Tables>();
  const std::uint32_t m = static_cast<std::uint32_t>(modulus.size()) - 1;
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  t->p = p;
  t->m = m;
  t->q = q;
  t->modulus = std::move(modulus);

  auto digits = [&](std::uint32_t code) {
    std::vector<std::uint32_t> c(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      c[i] = code % p;
      code /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t code = 0;
    for (std::uint32_t i = m; i-- > 0;) code = code * p + c[i];
    return code;
  };

  t->add.resize(static_cast<std::size_t>(q) * q);
  t->mul.resize(static_cast<std::size_t>(q) * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<std::uint32_t> n(m);
    for (std::uint32_t i = 0; i < m; ++i) n[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<Elem>(encode(n));
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<std::uint32_t> s(m);
      for (std::uint32_t i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      t->add[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(encode(s));

      // Schoolbook product, then reduce by the monic modulus from the top.
      std::vector<std::uint32_t> prod(2 * m - 1, 0);
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      for (std::uint32_t top = 2 * m - 1; top-- > m;) {
        const std::uint32_t c = prod[top];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= m; ++i) {
          const std::uint32_t k = top - m + i;
          prod[k] = (prod[k] + (p - c) * t->modulus[i]) % p;
        }
      }
      prod.resize(m);
      t->mul[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(encode(prod));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (t->mul[static_cast<std::size_t>(a) * q + b] == 1) {
        t->inv[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  return Field(std::move(t));
}

Field Field::make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> irreducible, FieldOptions options) {
  if (!qsun::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) break;
  }
  const std::uint32_t cap = std::min(options.max_order, kMaxFieldOrder);
  if (q > cap) {
    throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds the configured cap of " + std::to_string(cap));
  }

  const Field prime = build(p, {0, 1});
  if (!irreducible) {
    if (m == 1) return prime;
    const Poly f = smallest_monic_irreducible(prime, static_cast<int>(m));
    return build(p, std::vector<std::uint32_t>(f.coeffs().begin(), f.coeffs().end()));
  }

  std::vector<std::uint32_t> c = *irreducible;
  if (c.size() == m) c.push_back(1);
  if (c.size() != m + 1 || c.back() != 1) {
    throw std::invalid_argument("supplied polynomial must be monic of degree " + std::to_string(m));
  }
  std::vector<Elem> coeffs;
  for (std::uint32_t v : c) {
    if (v >= p) throw std::invalid_argument("polynomial coefficient outside [0, p)");
    coeffs.push_back(static_cast<Elem>(v));
  }
  if (!is_irreducible(Poly(prime, coeffs))) {
    throw std::invalid_argument("supplied polynomial is reducible over F_" + std::to_string(p));
  }
  // All degree-1 moduli give the same prime field; keep one identity for it.
  if (m == 1) return prime;
  return build(p, std::move(c));
}

Field Field::of_order(std::uint32_t q, FieldOptions options) {
  const auto pm = split_prime_power(q);
  if (!pm) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second, std::nullopt, options);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return t_->inv[a];
}

Elem Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(t_->p);
  return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> c(t_->m);
  std::uint32_t code = a;
  for (auto& d : c) {
    d = code % t_->p;
    code /= t_->p;
  }
  return c;
}

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != t_->m) throw std::invalid_argument("element needs exactly m coordinates");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= t_->p) throw std::invalid_argument("element coordinate outside [0, p)");
    code = code * t_->p + c[i];
  }
  return static_cast<Elem>(code);
}

FieldElem Field::elem(Elem code) const { return FieldElem(*this, code); }

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << t_->q;
  if (t_->m > 1) {
    os << " = F_" << t_->p << "[x]/(";
    bool first = true;
    for (std::size_t i = t_->modulus.size(); i-- > 0;) {
      const auto c = t_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus;
}

FieldElem::FieldElem(Field field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code_)) throw std::invalid_argument("element code outside field");
}

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("elements from different fields");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field(), a.field().add(a.code(), b.code())};
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field(), a.field().sub(a.code(), b.code())};
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field(), a.field().mul(a.code(), b.code())};
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.field(), a.field().div(a.code(), b.code())};
}
bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field() == b.field() && a.code() == b.code();
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    case FieldOp::inv: return a.inv();
    case FieldOp::neg: return -a;
  }
  throw std::invalid_argument("unknown field operation");
}

}  // namespace qsun
