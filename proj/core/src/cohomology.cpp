#include "elemgs/cohomology.hpp"

#include <cctype>
#include <sstream>

#include "elemgs/errors.hpp"

namespace elemgs {

CohContextRef make_context(std::uint32_t p, unsigned r, unsigned s, FieldRef field) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (!field) field = FiniteField::prime(p);
  if (field->characteristic() != p) throw InputError("field characteristic differs from p");
  if (r + s > 8) throw InputError("r + s must be at most 8");
  auto ctx = std::make_shared<CohContext>();
  ctx->p = p;
  ctx->r = r;
  ctx->s = s;
  ctx->field = std::move(field);
  return ctx;
}

int monomial_degree(const CohContext& ctx, const MonomialKey& key) {
  int d = 0;
  if (ctx.p == 2) {
    for (auto e : key) d += e;
    return d;
  }
  for (std::size_t i = 0; i < key.size(); ++i) d += ctx.odd_position(i) ? key[i] : 2 * key[i];
  return d;
}

CohElement::CohElement(CohContextRef ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InputError("cohomology element needs a context");
}

CohElement CohElement::one(CohContextRef ctx) {
  MonomialKey k(ctx->key_size(), 0);
  return monomial(std::move(ctx), std::move(k), 1);
}

CohElement CohElement::generator(CohContextRef ctx, char kind, unsigned index) {
  const CohContext& c = *ctx;
  bool g_part = kind == 'x' || kind == 'l';
  unsigned bound = g_part ? c.r : c.s;
  if (index == 0 || index > bound)
    throw InputError(std::string("generator ") + kind + std::to_string(index) + " out of range for r=" +
                     std::to_string(c.r) + ", s=" + std::to_string(c.s));
  MonomialKey k(c.key_size(), 0);
  unsigned i = index - 1;
  switch (kind) {
    case 'x':
      if (c.p == 2)
        k[c.l_pos(i)] = 2;
      else
        k[c.x_pos(i)] = 1;
      break;
    case 'l':
      k[c.l_pos(i)] = 1;
      break;
    case 'z':
      if (c.p == 2)
        k[c.y_pos(i)] = 2;
      else
        k[c.z_pos(i)] = 1;
      break;
    case 'y':
      k[c.y_pos(i)] = 1;
      break;
    default:
      throw InputError(std::string("unknown generator kind '") + kind + "'");
  }
  return monomial(std::move(ctx), std::move(k), 1);
}

CohElement CohElement::monomial(CohContextRef ctx, MonomialKey key, Elem coeff) {
  if (key.size() != ctx->key_size()) throw InputError("monomial key has wrong length");
  for (std::size_t i = 0; i < key.size(); ++i)
    if (ctx->odd_position(i) && key[i] > 1) return CohElement(std::move(ctx));
  CohElement e(std::move(ctx));
  e.add_term(key, coeff);
  return e;
}

Elem CohElement::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> CohElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return monomial_degree(*ctx_, terms_.begin()->first);
}

bool CohElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = monomial_degree(*ctx_, terms_.begin()->first);
  for (const auto& [k, c] : terms_)
    if (monomial_degree(*ctx_, k) != d) return false;
  return true;
}

void CohElement::require_same(const CohElement& o) const {
  if (!ctx_->same_as(*o.ctx_)) throw InputError("cohomology elements from different contexts");
}

void CohElement::add_term(const MonomialKey& key, Elem c) {
  if (!c) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second = ctx_->field->add(it->second, c);
  if (!it->second) terms_.erase(it);
}

CohElement& CohElement::operator+=(const CohElement& o) {
  require_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CohElement CohElement::operator+(const CohElement& o) const {
  CohElement r = *this;
  r += o;
  return r;
}

CohElement CohElement::operator-() const {
  CohElement r(ctx_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, ctx_->field->neg(c));
  return r;
}

CohElement CohElement::operator-(const CohElement& o) const { return *this + (-o); }

CohElement CohElement::scaled(Elem c) const {
  CohElement r(ctx_);
  if (!c) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, ctx_->field->mul(v, c));
  return r;
}

CohElement CohElement::operator*(const CohElement& o) const {
  require_same(o);
  const CohContext& c = *ctx_;
  const FiniteField& f = *c.field;
  CohElement r(ctx_);
  MonomialKey key(c.key_size());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      bool vanish = false;
      std::size_t crossings = 0, odd_after = 0;
      // walk positions from the right so odd_after counts odd factors of a to the right
      for (std::size_t i = key.size(); i-- > 0;) {
        if (c.odd_position(i)) {
          if (ka[i] && kb[i]) {
            vanish = true;
            break;
          }
          if (kb[i]) crossings += odd_after;
          if (ka[i]) ++odd_after;
        }
        key[i] = std::uint16_t(ka[i] + kb[i]);
      }
      if (vanish) continue;
      Elem v = f.mul(ca, cb);
      r.add_term(key, crossings % 2 ? f.neg(v) : v);
    }
  return r;
}

CohElement multiply(const CohElement& a, const CohElement& b) { return a * b; }

int OperationId::degree_shift(std::uint32_t p) const noexcept {
  switch (kind) {
    case Kind::P:
      return int(2 * index * (p - 1));
    case Kind::BP:
      return int(2 * index * (p - 1) + 1);
    case Kind::Sq:
      return int(index);
  }
  return 0;
}

std::string OperationId::name() const {
  switch (kind) {
    case Kind::P:
      return "P" + std::to_string(index);
    case Kind::BP:
      return "bP" + std::to_string(index);
    case Kind::Sq:
      return "Sq" + std::to_string(index);
  }
  return "?";
}

OperationId OperationId::parse(std::string_view text) {
  OperationId op;
  std::size_t pos = 0;
  if (text.substr(0, 2) == "Sq") {
    op.kind = Kind::Sq;
    pos = 2;
  } else if (text.substr(0, 2) == "bP" || text.substr(0, 2) == "BP") {
    op.kind = Kind::BP;
    pos = 2;
  } else if (text.substr(0, 1) == "P") {
    op.kind = Kind::P;
    pos = 1;
  } else {
    throw ParseError("unknown operation '" + std::string(text) + "'", 0);
  }
  if (pos < text.size() && text[pos] == '^') ++pos;
  if (pos >= text.size()) throw ParseError("operation index expected", pos);
  unsigned v = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("digit expected in operation name", i);
    v = v * 10 + unsigned(text[i] - '0');
    if (v > 100000) throw ParseError("operation index too large", i);
  }
  op.index = v;
  return op;
}

namespace {

// Truncated power series in t with cohomology coefficients.
using Series = std::vector<CohElement>;

Series series_mul(const Series& a, const Series& b, unsigned cap, const CohContextRef& ctx) {
  Series out(cap + 1, CohElement(ctx));
  for (std::size_t i = 0; i < a.size() && i <= cap; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= cap; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_add(Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), CohElement(b.front().context()));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// (g_next + t * g^m)^e, where g_next may be absent (index overflow)
Series binomial_series(const CohContextRef& ctx, std::size_t pos, std::optional<std::size_t> next_pos, unsigned e,
                       unsigned m_exp, unsigned cap, int next_step, int self_step) {
  const CohContext& c = *ctx;
  Series out(cap + 1, CohElement(ctx));
  for (unsigned k = 0; k <= e && k <= cap; ++k) {
    Elem b = binomial_mod(e, k, c.p);
    if (!b) continue;
    if (e - k > 0 && !next_pos) continue;
    MonomialKey key(c.key_size(), 0);
    key[pos] = std::uint16_t(key[pos] + self_step * int(k) * int(m_exp));
    if (e - k > 0) key[*next_pos] = std::uint16_t(key[*next_pos] + next_step * int(e - k));
    out[k].add_term(key, b);
  }
  return out;
}

struct TotalOps {
  Series p;  // sum_j t^j P^j (or Sq^j)
  Series b;  // sum_j t^j bP^j (p > 2)
};

TotalOps total_operations(const CohContextRef& ctx, const MonomialKey& key, unsigned cap) {
  const CohContext& c = *ctx;
  TotalOps acc{Series{CohElement::one(ctx)}, Series{CohElement(ctx)}};
  if (c.p == 2) {
    for (unsigned i = 0; i < c.r; ++i) {
      unsigned a = key[c.l_pos(i)];
      if (!a) continue;
      std::optional<std::size_t> next;
      if (i + 1 < c.r) next = c.l_pos(i + 1);
      // Sq(l_i) = l_{i+1} + t l_i^2, raised to the a-th power
      Series s = binomial_series(ctx, c.l_pos(i), next, a, 2, cap, 1, 1);
      acc.p = series_mul(acc.p, s, cap, ctx);
    }
    for (unsigned j = 0; j < c.s; ++j) {
      unsigned a = key[c.y_pos(j)];
      if (!a) continue;
      // Sq(y) = y + t y^2: y^a t^k y^k
      Series s(cap + 1, CohElement(ctx));
      for (unsigned k = 0; k <= a && k <= cap; ++k) {
        Elem b = binomial_mod(a, k, 2);
        if (!b) continue;
        MonomialKey m(c.key_size(), 0);
        m[c.y_pos(j)] = std::uint16_t(a + k);
        s[k].add_term(m, b);
      }
      acc.p = series_mul(acc.p, s, cap, ctx);
    }
    return acc;
  }

  int deg_acc = 0;
  auto absorb_even = [&](const Series& pf, int deg) {
    acc.p = series_mul(acc.p, pf, cap, ctx);
    acc.b = series_mul(acc.b, pf, cap, ctx);
    deg_acc += deg;
  };
  auto absorb_odd = [&](const Series& pf, const Series& bf) {
    Series nb = series_mul(acc.b, pf, cap, ctx);
    Series pb = series_mul(acc.p, bf, cap, ctx);
    if (deg_acc % 2)
      for (auto& e : pb) e = -e;
    acc.b = series_add(std::move(nb), pb);
    acc.p = series_mul(acc.p, pf, cap, ctx);
    deg_acc += 1;
  };

  for (unsigned i = 0; i < c.r; ++i) {
    unsigned e = key[c.x_pos(i)];
    if (!e) continue;
    std::optional<std::size_t> next;
    if (i + 1 < c.r) next = c.x_pos(i + 1);
    // P(x_i) = x_{i+1} + t x_i^p
    Series s(cap + 1, CohElement(ctx));
    for (unsigned k = 0; k <= e && k <= cap; ++k) {
      Elem b = binomial_mod(e, k, c.p);
      if (!b || (e - k > 0 && !next)) continue;
      MonomialKey m(c.key_size(), 0);
      m[c.x_pos(i)] = std::uint16_t(c.p * k);
      if (e - k > 0) m[*next] = std::uint16_t(e - k);
      s[k].add_term(m, b);
    }
    absorb_even(s, 2 * int(e));
  }
  for (unsigned j = 0; j < c.s; ++j) {
    unsigned e = key[c.z_pos(j)];
    if (!e) continue;
    // P(z) = z + t z^p
    Series s(cap + 1, CohElement(ctx));
    for (unsigned k = 0; k <= e && k <= cap; ++k) {
      Elem b = binomial_mod(e, k, c.p);
      if (!b) continue;
      MonomialKey m(c.key_size(), 0);
      m[c.z_pos(j)] = std::uint16_t(e + (c.p - 1) * k);
      s[k].add_term(m, b);
    }
    absorb_even(s, 2 * int(e));
  }
  for (unsigned i = 0; i < c.r; ++i) {
    if (!key[c.l_pos(i)]) continue;
    Series pf{CohElement(ctx)}, bf{CohElement(ctx)};
    if (i + 1 < c.r) pf[0] = CohElement::generator(ctx, 'l', i + 2);
    bf[0] = -CohElement::generator(ctx, 'x', i + 1);
    absorb_odd(pf, bf);
  }
  for (unsigned j = 0; j < c.s; ++j) {
    if (!key[c.y_pos(j)]) continue;
    Series pf{CohElement::generator(ctx, 'y', j + 1)}, bf{CohElement::generator(ctx, 'z', j + 1)};
    absorb_odd(pf, bf);
  }
  
  return acc;
}

}  // namespace

CohElement steenrod_apply(const OperationId& op, const CohElement& a) {
  const CohContextRef& ctx = a.context();
  const CohContext& c = *ctx;
  if (c.p == 2 && op.kind != OperationId::Kind::Sq) throw InputError("P and bP are not defined at p = 2; use Sq");
  if (c.p != 2 && op.kind == OperationId::Kind::Sq) throw InputError("Sq is only defined at p = 2");
  const FiniteField& f = *c.field;
  CohElement out(ctx);
  for (const auto& [key, coeff] : a.terms()) {
    // an operation of index j is zero on a monomial of degree < j (resp. 2j)
    int deg = monomial_degree(c, key);
    if (c.p == 2 ? int(op.index) > deg : 2 * int(op.index) > deg) continue;
    TotalOps t = total_operations(ctx, key, op.index);
    const Series& s = op.kind == OperationId::Kind::BP ? t.b : t.p;
    if (op.index >= s.size() || s[op.index].is_zero()) continue;
    out += s[op.index].scaled(f.frobenius(coeff));
  }
  return out;
}

CohElement theta(const CohElement& a) {
  const CohContext& c = *a.context();
  for (const auto& [key, coeff] : a.terms())
    for (std::size_t i = 0; i < key.size(); ++i) {
      bool z_slot = c.p == 2 ? (i >= c.r && key[i] % 2 == 0) : (i >= 2 * c.r && i < 2 * c.r + c.s);
      if (key[i] && !z_slot) throw InputError("theta is only defined on the polynomial subring in the z_j");
    }
  CohElement out(a.context());
  int top = 0;
  for (const auto& [key, coeff] : a.terms()) top = std::max(top, monomial_degree(c, key));
  OperationId::Kind kind = c.p == 2 ? OperationId::Kind::Sq : OperationId::Kind::P;
  for (int j = 0; j <= top; ++j) out += steenrod_apply(OperationId{kind, unsigned(j)}, a);
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(const CohContextRef& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  CohElement parse() {
    CohElement result(ctx_);
    skip();
    if (pos_ == text_.size()) throw ParseError("empty element", pos_);
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      CohElement t = term();
      result += negate ? -t : t;
      skip();
      if (pos_ == text_.size()) break;
      char ch = text_[pos_];
      if (ch != '+' && ch != '-') throw ParseError(std::string("expected '+' or '-' but found '") + ch + "'", pos_);
      negate = ch == '-';
      ++pos_;
    }
    return result;
  }

 private:
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  unsigned long nat() {
    skip();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + unsigned(text_[pos_] - '0');
      if (v > 1000000000ul) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("number expected", start);
    return v;
  }

  Elem coefficient() {
    const FiniteField& f = *ctx_->field;
    if (peek() == '(') {
      std::size_t start = pos_;
      ++pos_;
      std::vector<std::uint32_t> cs;
      for (;;) {
        cs.push_back(std::uint32_t(nat() % f.characteristic()));
        char ch = peek();
        ++pos_;
        if (ch == ')') break;
        if (ch != ',') throw ParseError("expected ',' or ')' in coefficient vector", pos_ - 1);
      }
      if (cs.size() > f.degree()) throw ParseError("coefficient vector longer than the field degree", start);
      cs.resize(f.degree(), 0);
      return f.from_coefficients(cs);
    }
    return f.from_int(std::int64_t(nat() % f.characteristic()));
  }

  CohElement factor() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError("generator expected", pos_);
    char kind = text_[pos_];
    if (kind != 'x' && kind != 'l' && kind != 'z' && kind != 'y')
      throw ParseError(std::string("unknown generator '") + kind + "'", pos_);
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("generator index expected", pos_);
    unsigned long idx = nat();
    CohElement g(ctx_);
    try {
      g = CohElement::generator(ctx_, kind, unsigned(idx));
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
    unsigned long e = 1;
    if (peek() == '^') {
      ++pos_;
      e = nat();
      if (e > 4096) throw ParseError("exponent too large", pos_);
    }
    CohElement out = CohElement::one(ctx_);
    for (unsigned long i = 0; i < e; ++i) out = out * g;
    return out;
  }

  CohElement term() {
    CohElement out = CohElement::one(ctx_);
    char ch = peek();
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') {
      out = out.scaled(coefficient());
      if (peek() != '*') return out;
      ++pos_;
    }
    while (need_factor) {
      out = out * factor();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return out;
  }

  const CohContextRef& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_coefficient(const FiniteField& f, Elem c) {
  if (f.is_prime_field()) return std::to_string(c);
  auto cs = f.coefficients(c);
  std::string s = "(";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cs[i]);
  }
  return s + ")";
}

}  // namespace

CohElement parse_element(const CohContextRef& ctx, std::string_view text) {
  return ElementParser(ctx, text).parse();
}

std::string format_element(const CohElement& a) {
  const CohContext& c = *a.context();
  const FiniteField& f = *c.field;
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : a.terms()) {
    std::vector<std::string> factors;
    auto emit = [&](char kind, unsigned idx, unsigned e) {
      if (!e) return;
      std::string s = kind + std::to_string(idx + 1);
      if (e > 1) s += "^" + std::to_string(e);
      factors.push_back(std::move(s));
    };
    if (c.p == 2) {
      for (unsigned i = 0; i < c.r; ++i) emit('x', i, key[c.l_pos(i)] / 2);
      for (unsigned i = 0; i < c.r; ++i) emit('l', i, key[c.l_pos(i)] % 2);
      for (unsigned j = 0; j < c.s; ++j) emit('z', j, key[c.y_pos(j)] / 2);
      for (unsigned j = 0; j < c.s; ++j) emit('y', j, key[c.y_pos(j)] % 2);
    } else {
      for (unsigned i = 0; i < c.r; ++i) emit('x', i, key[c.x_pos(i)]);
      for (unsigned i = 0; i < c.r; ++i) emit('l', i, key[c.l_pos(i)]);
      for (unsigned j = 0; j < c.s; ++j) emit('z', j, key[c.z_pos(j)]);
      for (unsigned j = 0; j < c.s; ++j) emit('y', j, key[c.y_pos(j)]);
    }
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < factors.size(); ++i) mono += (i ? "*" : "") + factors[i];
    if (mono.empty())
      os << format_coefficient(f, coeff);
    else if (coeff == 1)
      os << mono;
    else
      os << format_coefficient(f, coeff) << "*" << mono;
  }
  return os.str();
}

}  // namespace elemgs
