#include "elemgs/field.hpp"

#include <algorithm>
#include <sstream>

#include "elemgs/errors.hpp"

namespace elemgs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // small binomial C(ni, ki) mod p by direct product with inverses
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible since ki < p
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return std::uint32_t(result);
}

namespace {

using PolyP = std::vector<std::uint32_t>;  // low-to-high coefficients mod p

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return std::uint32_t(r);
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = std::uint32_t((a[shift + i] + std::uint64_t(p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

PolyP from_code(std::uint32_t code, std::uint32_t p, unsigned k) {
  PolyP c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  trim(c);
  return c;
}

std::uint32_t to_code(const PolyP& c, std::uint32_t p) {
  std::uint32_t code = 0, w = 1;
  for (std::uint32_t v : c) {
    code += v * w;
    w *= p;
  }
  return code;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  PolyP f = monic;
  trim(f);
  if (f.size() < 2) return false;
  std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      PolyP g(d + 1, 0);
      std::uint64_t c = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  k_ = unsigned(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  q_ = std::uint32_t(q);
  if (k_ == 1) {
    inv_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a) inv_[a] = inv_mod(a, p_);
    return;
  }
  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    PolyP c = from_code(a, p_, k_);
    for (auto& v : c) v = (p_ - v) % p_;
    neg_table_[a] = to_code(c, p_);
  }
  // primitive element search: smallest code whose powers exhaust F_q^*
  PolyP m(modulus_.begin(), modulus_.end());
  for (Elem g = 1; g < q_; ++g) {
    PolyP gp = from_code(g, p_, k_);
    std::vector<Elem> exps;
    exps.reserve(q_ - 1);
    PolyP cur{1};
    bool ok = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      Elem code = to_code(cur, p_);
      if (i > 0 && code == 1) {
        ok = false;
        break;
      }
      exps.push_back(code);
      cur = poly_mod(poly_mul(cur, gp, p_), m, p_);
    }
    if (!ok || to_code(cur, p_) != 1) continue;
    exp_ = std::move(exps);
    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
    break;
  }
  if (exp_.empty()) throw ConsistencyError("no primitive element found; modulus not irreducible");
  inv_.assign(q_, 0);
  for (Elem a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  if (q_ <= 256) {
    add_table_.resize(std::size_t(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = std::uint16_t(add_digits(a, b));
  }
}

Elem FiniteField::add_digits(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  Elem r = 0, w = 1;
  while (a || b) {
    Elem d = (a % p_ + b % p_) % p_;
    r += d * w;
    w *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FieldRef FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (p > 65521) throw InputError("characteristic too large for table-driven arithmetic");
  return FieldRef(new FiniteField(p, {0, 1}));
}

FieldRef FiniteField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) {
    if (c >= p) throw InputError("modulus coefficient out of range");
  }
  trim(modulus);
  if (modulus.size() < 2) throw InputError("modulus must have degree >= 1");
  if (modulus.back() != 1) throw InputError("modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) q *= p;
  if (q > 65536) throw InputError("field order exceeds 65536");
  if (!is_irreducible(p, modulus)) throw InputError("modulus is reducible over F_" + std::to_string(p));
  return FieldRef(new FiniteField(p, std::move(modulus)));
}

FieldRef FiniteField::extension(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw InputError("extension degree must be >= 1");
  if (degree == 1) return prime(p);
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  if (count > 65536) throw InputError("field order exceeds 65536");
  for (std::uint64_t low = 0; low < count; ++low) {
    std::vector<std::uint32_t> m(degree + 1, 0);
    std::uint64_t c = low;
    for (unsigned i = 0; i < degree; ++i) {
      m[i] = std::uint32_t(c % p);
      c /= p;
    }
    m[degree] = 1;
    if (is_irreducible(p, m)) return FieldRef(new FiniteField(p, std::move(m)));
  }
  throw ConsistencyError("no irreducible polynomial found");
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InputError("division by zero in " + name());
  return inv_[a];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem FiniteField::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % std::int64_t(p_);
  if (m < 0) m += p_;
  return Elem(m);
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem FiniteField::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() > k_) throw InputError("coefficient vector longer than extension degree");
  Elem code = 0, w = 1;
  for (std::uint32_t v : c) {
    if (v >= p_) throw InputError("coefficient out of range mod p");
    code += v * w;
    w *= p_;
  }
  return code;
}

std::string FiniteField::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) {
    os << "[a]/(";
    bool first = true;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) os << "a";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool same_field(const FieldRef& a, const FieldRef& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

std::vector<Elem> embedding(const FieldRef& from, const FieldRef& to) {
  if (from->characteristic() != to->characteristic())
    throw InputError("embedding between fields of different characteristic");
  if (to->degree() % from->degree() != 0)
    throw InputError("no embedding " + from->name() + " -> " + to->name());
  std::vector<Elem> table(from->order());
  if (from->degree() == 1) {
    for (Elem a = 0; a < from->order(); ++a) table[a] = a;
    return table;
  }
  const auto& m = from->modulus();
  Elem root = 0;
  bool found = false;
  for (Elem b = 0; b < to->order() && !found; ++b) {
    Elem v = 0, pw = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      v = to->add(v, to->mul(Elem(m[i]), pw));
      pw = to->mul(pw, b);
    }
    if (v == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw ConsistencyError("modulus has no root in target field");
  for (Elem a = 0; a < from->order(); ++a) {
    auto c = from->coefficients(a);
    Elem v = 0, pw = 1;
    for (auto ci : c) {
      v = to->add(v, to->mul(Elem(ci), pw));
      pw = to->mul(pw, root);
    }
    table[a] = v;
  }
  return table;
}

}  // namespace elemgs
