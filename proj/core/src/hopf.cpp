#include "elemgs/hopf.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "elemgs/errors.hpp"

namespace elemgs {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

HopfData empty_hopf(FieldRef field, std::size_t dim) {
  HopfData h;
  h.field = field;
  h.dim = dim;
  h.labels.resize(dim);
  h.mult.assign(dim * dim * dim, 0);
  h.comult.assign(dim * dim * dim, 0);
  h.unit.assign(dim, 0);
  h.counit.assign(dim, 0);
  h.antipode = Mat(field, dim, dim);
  return h;
}

// k[T]/(T^N), N = p^r; Delta(T) = T (x) 1 + 1 (x) T.
HopfData truncated_additive(std::uint32_t p, unsigned r, FieldRef f) {
  std::size_t N = ipow(p, r);
  HopfData h = empty_hopf(f, N);
  for (std::size_t n = 0; n < N; ++n) {
    h.labels[n] = n == 0 ? "1" : (n == 1 ? "T" : "T^" + std::to_string(n));
    for (std::size_t m = 0; n + m < N; ++m) h.mult[(n * N + m) * N + (n + m)] = 1;
    for (std::size_t i = 0; i <= n; ++i) h.comult[(n * N + i) * N + (n - i)] = binomial_mod(n, i, p);
    h.antipode(n, n) = (n % 2 == 0) ? 1 : f->neg(1);
  }
  h.unit[0] = 1;
  h.counit[0] = 1;
  return h;
}

// Functions on (Z/p)^s in the indicator basis; group element g encoded as sum g_i p^(i-1).
HopfData elementary_functions(std::uint32_t p, unsigned s, FieldRef f) {
  std::size_t N = ipow(p, s);
  HopfData h = empty_hopf(f, N);
  auto digits = [&](std::size_t g) {
    std::vector<std::size_t> d(s);
    for (unsigned i = 0; i < s; ++i) {
      d[i] = g % p;
      g /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t g = 0, w = 1;
    for (unsigned i = 0; i < s; ++i) {
      g += (d[i] % p) * w;
      w *= p;
    }
    return g;
  };
  for (std::size_t g = 0; g < N; ++g) {
    auto dg = digits(g);
    std::string label = "d[";
    for (unsigned i = 0; i < s; ++i) label += (i ? "," : "") + std::to_string(dg[i]);
    h.labels[g] = label + "]";
    h.mult[(g * N + g) * N + g] = 1;
    h.unit[g] = 1;
    for (std::size_t a = 0; a < N; ++a) {
      auto da = digits(a);
      std::vector<std::size_t> rest(s);
      for (unsigned i = 0; i < s; ++i) rest[i] = (dg[i] + p - da[i]) % p;
      h.comult[(g * N + a) * N + encode(rest)] = 1;
    }
    std::vector<std::size_t> neg(s);
    for (unsigned i = 0; i < s; ++i) neg[i] = (p - dg[i]) % p;
    h.antipode(encode(neg), g) = 1;
  }
  h.counit[0] = 1;
  return h;
}

using Sparse3 = std::vector<std::vector<std::tuple<std::size_t, std::size_t, Elem>>>;

// Per-k nonzero (i, j, d^{ij}_k).
Sparse3 comult_lists(const HopfData& h) {
  Sparse3 out(h.dim);
  for (std::size_t k = 0; k < h.dim; ++k)
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t j = 0; j < h.dim; ++j)
        if (Elem c = h.comult_at(k, i, j)) out[k].emplace_back(i, j, c);
  return out;
}

// Per (i, j) nonzero (k, c^k_{ij}).
std::vector<std::vector<std::pair<std::size_t, Elem>>> mult_lists(const HopfData& h) {
  std::vector<std::vector<std::pair<std::size_t, Elem>>> out(h.dim * h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (Elem c = h.mult_at(i, j, k)) out[i * h.dim + j].emplace_back(k, c);
  return out;
}

}  // namespace

std::vector<Elem> HopfData::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  if (a.size() != dim || b.size() != dim) throw InputError("element length does not match algebra dimension");
  std::vector<Elem> out(dim, 0);
  const FiniteField& f = *field;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!b[j]) continue;
      Elem ab = f.mul(a[i], b[j]);
      const Elem* row = &mult[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k)
        if (row[k]) out[k] = f.add(out[k], f.mul(ab, row[k]));
    }
  }
  return out;
}

HopfData tensor_product(const HopfData& a, const HopfData& b) {
  if (!same_field(a.field, b.field)) throw InputError("tensor product of Hopf algebras over different fields");
  const FiniteField& f = *a.field;
  std::size_t da = a.dim, db = b.dim, D = da * db;
  HopfData h = empty_hopf(a.field, D);
  auto idx = [db](std::size_t i, std::size_t j) { return i * db + j; };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      if (da == 1)
        h.labels[idx(i, j)] = b.labels[j];
      else if (db == 1)
        h.labels[idx(i, j)] = a.labels[i];
      else
        h.labels[idx(i, j)] = a.labels[i] + "*" + b.labels[j];
      h.unit[idx(i, j)] = f.mul(a.unit[i], b.unit[j]);
      h.counit[idx(i, j)] = f.mul(a.counit[i], b.counit[j]);
    }
  auto ma = mult_lists(a), mb = mult_lists(b);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t i2 = 0; i2 < da; ++i2)
      for (auto [k1, c1] : ma[i1 * da + i2])
        for (std::size_t j1 = 0; j1 < db; ++j1)
          for (std::size_t j2 = 0; j2 < db; ++j2)
            for (auto [k2, c2] : mb[j1 * db + j2])
              h.mult[(idx(i1, j1) * D + idx(i2, j2)) * D + idx(k1, k2)] = f.mul(c1, c2);
  auto ca = comult_lists(a), cb = comult_lists(b);
  for (std::size_t k1 = 0; k1 < da; ++k1)
    for (std::size_t k2 = 0; k2 < db; ++k2)
      for (auto [i1, j1, c1] : ca[k1])
        for (auto [i2, j2, c2] : cb[k2])
          h.comult[(idx(k1, k2) * D + idx(i1, i2)) * D + idx(j1, j2)] = f.mul(c1, c2);
  h.antipode = Mat::kron(a.antipode, b.antipode);
  return h;
}

HopfData build_coordinate_hopf(std::uint32_t p, unsigned r, unsigned s, FieldRef field) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (r + s == 0) throw InputError("E_{0,0} is the trivial group scheme; r + s >= 1 required");
  if (!field) field = FiniteField::prime(p);
  if (field->characteristic() != p) throw InputError("field characteristic differs from p");
  std::size_t dim = ipow(p, r + s);
  if (dim > 4096) throw InputError("p^(r+s) exceeds 4096; structure tensors too large");
  return tensor_product(truncated_additive(p, r, field), elementary_functions(p, s, field));
}

HopfData dualize(const HopfData& h) {
  AxiomReport rep = check_axioms(h);
  if (!rep.hopf()) {
    std::string why = rep.failures.empty() ? "Hopf axiom failure" : rep.failures.front();
    throw InputError("cannot dualize: " + why);
  }
  std::size_t D = h.dim;
  HopfData d = empty_hopf(h.field, D);
  for (std::size_t i = 0; i < D; ++i) {
    const std::string& l = h.labels[i];
    if (l.size() > 1 && l.front() == '(' && l.substr(l.size() - 2) == ")*")
      d.labels[i] = l.substr(1, l.size() - 3);
    else
      d.labels[i] = "(" + l + ")*";
  }
  for (std::size_t k = 0; k < D; ++k)
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) {
        d.mult[(i * D + j) * D + k] = h.comult_at(k, i, j);
        d.comult[(k * D + i) * D + j] = h.mult_at(i, j, k);
      }
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  return d;
}

AxiomReport check_axioms(const HopfData& h) {
  AxiomReport rep;
  const FiniteField& f = *h.field;
  const std::size_t D = h.dim;
  auto ml = mult_lists(h);
  auto cl = comult_lists(h);
  auto fail = [&](const std::string& s) {
    if (rep.failures.size() < 16) rep.failures.push_back(s);
  };

  // associativity
  rep.associative = true;
  for (std::size_t i = 0; i < D && rep.associative; ++i)
    for (std::size_t j = 0; j < D && rep.associative; ++j)
      for (std::size_t l = 0; l < D && rep.associative; ++l) {
        std::vector<Elem> left(D, 0), right(D, 0);
        for (auto [m, c] : ml[i * D + j])
          for (auto [k, c2] : ml[m * D + l]) left[k] = f.add(left[k], f.mul(c, c2));
        for (auto [m, c] : ml[j * D + l])
          for (auto [k, c2] : ml[i * D + m]) right[k] = f.add(right[k], f.mul(c, c2));
        if (left != right) {
          rep.associative = false;
          fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")");
        }
      }

  // unit
  rep.unital = true;
  for (std::size_t j = 0; j < D && rep.unital; ++j) {
    std::vector<Elem> e(D, 0);
    e[j] = 1;
    if (h.multiply(h.unit, e) != e || h.multiply(e, h.unit) != e) {
      rep.unital = false;
      fail("unit fails on e_" + std::to_string(j));
    }
  }

  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
  rep.coassociative = true;
  for (std::size_t k = 0; k < D && rep.coassociative; ++k) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Elem> left, right;
    for (auto [m, c, x] : cl[k]) {
      for (auto [a, b, y] : cl[m]) {
        auto& v = left[{a, b, c}];
        v = f.add(v, f.mul(x, y));
      }
      for (auto [b, cc, y] : cl[c]) {
        auto& v = right[{m, b, cc}];
        v = f.add(v, f.mul(x, y));
      }
    }
    std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
    if (left != right) {
      rep.coassociative = false;
      fail("coassociativity fails on e_" + std::to_string(k));
    }
  }

  // counit
  rep.counital = true;
  for (std::size_t k = 0; k < D && rep.counital; ++k) {
    std::vector<Elem> left(D, 0), right(D, 0);
    for (auto [i, j, c] : cl[k]) {
      left[j] = f.add(left[j], f.mul(h.counit[i], c));
      right[i] = f.add(right[i], f.mul(h.counit[j], c));
    }
    std::vector<Elem> e(D, 0);
    e[k] = 1;
    if (left != e || right != e) {
      rep.counital = false;
      fail("counit fails on e_" + std::to_string(k));
    }
  }

  // Delta and epsilon are algebra maps
  rep.bialgebra = true;
  {
    std::map<std::pair<std::size_t, std::size_t>, Elem> d1;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) {
        Elem c = f.mul(h.unit[i], h.unit[j]);
        if (c) d1[{i, j}] = c;
      }
    std::map<std::pair<std::size_t, std::size_t>, Elem> du;
    for (std::size_t k = 0; k < D; ++k)
      if (h.unit[k])
        for (auto [i, j, c] : cl[k]) {
          auto& v = du[{i, j}];
          v = f.add(v, f.mul(h.unit[k], c));
        }
    std::erase_if(du, [](const auto& kv) { return kv.second == 0; });
    Elem eps1 = 0;
    for (std::size_t k = 0; k < D; ++k) eps1 = f.add(eps1, f.mul(h.counit[k], h.unit[k]));
    if (du != d1 || eps1 != 1) {
      rep.bialgebra = false;
      fail("Delta(1) != 1 (x) 1 or epsilon(1) != 1");
    }
  }
  {
    std::vector<Elem> acc(D * D, 0);
    std::vector<std::size_t> touched;
    auto bump = [&](std::size_t a, std::size_t b, Elem v) {
      std::size_t at = a * D + b;
      if (acc[at] == 0) touched.push_back(at);
      acc[at] = f.add(acc[at], v);
    };
    for (std::size_t i = 0; i < D && rep.bialgebra; ++i)
      for (std::size_t j = 0; j < D && rep.bialgebra; ++j) {
        touched.clear();
        for (auto [k, c] : ml[i * D + j])
          for (auto [a, b, d] : cl[k]) bump(a, b, f.mul(c, d));
        for (auto [a1, b1, c1] : cl[i])
          for (auto [a2, b2, c2] : cl[j]) {
            Elem c12 = f.neg(f.mul(c1, c2));
            for (auto [a, ca] : ml[a1 * D + a2])
              for (auto [b, cb] : ml[b1 * D + b2]) bump(a, b, f.mul(c12, f.mul(ca, cb)));
          }
        bool ok = true;
        for (std::size_t at : touched) {
          if (acc[at] != 0) ok = false;
          acc[at] = 0;
        }
        Elem eps_prod = 0;
        for (auto [k, c] : ml[i * D + j]) eps_prod = f.add(eps_prod, f.mul(c, h.counit[k]));
        if (!ok || eps_prod != f.mul(h.counit[i], h.counit[j])) {
          rep.bialgebra = false;
          fail("Delta or epsilon not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
  }

  // antipode: m (S (x) id) Delta = eta epsilon = m (id (x) S) Delta
  rep.antipode = true;
  for (std::size_t k = 0; k < D && rep.antipode; ++k) {
    std::vector<Elem> left(D, 0), right(D, 0);
    for (auto [i, j, c] : cl[k]) {
      for (std::size_t a = 0; a < D; ++a) {
        if (Elem s = h.antipode(a, i))
          for (auto [m, cm] : ml[a * D + j]) left[m] = f.add(left[m], f.mul(c, f.mul(s, cm)));
        if (Elem s = h.antipode(a, j))
          for (auto [m, cm] : ml[i * D + a]) right[m] = f.add(right[m], f.mul(c, f.mul(s, cm)));
      }
    }
    std::vector<Elem> expect(D, 0);
    for (std::size_t m = 0; m < D; ++m) expect[m] = f.mul(h.counit[k], h.unit[m]);
    if (left != expect || right != expect) {
      rep.antipode = false;
      fail("antipode identity fails on e_" + std::to_string(k));
    }
  }

  rep.commutative = true;
  for (std::size_t i = 0; i < D && rep.commutative; ++i)
    for (std::size_t j = i + 1; j < D && rep.commutative; ++j)
      for (std::size_t k = 0; k < D; ++k)
        if (h.mult_at(i, j, k) != h.mult_at(j, i, k)) {
          rep.commutative = false;
          break;
        }
  rep.cocommutative = true;
  for (std::size_t k = 0; k < D && rep.cocommutative; ++k)
    for (auto [i, j, c] : cl[k])
      if (h.comult_at(k, j, i) != c) {
        rep.cocommutative = false;
        break;
      }
  return rep;
}

std::size_t GeneratorSet::monomial_index(std::span<const unsigned> exps) const {
  if (exps.size() != n()) throw InputError("exponent vector has wrong length");
  std::size_t idx = 0, w = 1;
  for (unsigned e : exps) {
    if (e >= p) throw InputError("exponent must be < p in the truncated algebra");
    idx += e * w;
    w *= p;
  }
  return idx;
}

GeneratorSet truncated_iso_check(const HopfData& dual, std::uint32_t p, unsigned r, unsigned s) {
  std::size_t dim_g = ipow(p, r), dim_e = ipow(p, s);
  if (dual.dim != dim_g * dim_e) throw ConsistencyError("dual algebra has unexpected dimension");
  const FiniteField& f = *dual.field;
  GeneratorSet gs;
  gs.p = p;
  gs.r = r;
  gs.s = s;
  auto basis = [&](std::size_t idx) {
    std::vector<Elem> v(dual.dim, 0);
    v[idx] = 1;
    return v;
  };
  // u_j = dual of T^{p^j} (x) [identity of (Z/p)^s]
  for (unsigned j = 0; j < r; ++j) {
    gs.names.push_back("u" + std::to_string(j));
    gs.generators.push_back(basis(ipow(p, j) * dim_e));
  }
  // v_i = sigma_i - 1; sigma_i is the point evaluation at the i-th basis vector
  for (unsigned i = 0; i < s; ++i) {
    gs.names.push_back("v" + std::to_string(i + 1));
    std::vector<Elem> v = basis(ipow(p, i));
    for (std::size_t k = 0; k < dual.dim; ++k) v[k] = f.sub(v[k], dual.unit[k]);
    gs.generators.push_back(std::move(v));
  }
  const std::size_t n = r + s;
  // each generator is nilpotent of order exactly p
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Elem> pw = gs.generators[g];
    for (std::uint32_t e = 1; e < p; ++e) {
      if (std::all_of(pw.begin(), pw.end(), [](Elem x) { return x == 0; }))
        throw ConsistencyError(gs.names[g] + "^" + std::to_string(e) + " = 0 before exponent p");
      pw = dual.multiply(pw, gs.generators[g]);
    }
    if (!std::all_of(pw.begin(), pw.end(), [](Elem x) { return x == 0; }))
      throw ConsistencyError(gs.names[g] + "^p != 0");
  }
  // generators commute
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (dual.multiply(gs.generators[a], gs.generators[b]) != dual.multiply(gs.generators[b], gs.generators[a]))
        throw ConsistencyError("generators " + gs.names[a] + ", " + gs.names[b] + " do not commute");
  // monomials with exponents < p form a basis
  Mat m(dual.field, dual.dim, dual.dim);
  std::vector<std::vector<Elem>> mono(dual.dim);
  mono[0] = dual.unit;
  for (std::size_t idx = 1; idx < dual.dim; ++idx) {
    std::size_t g = 0, w = 1;
    while ((idx / w) % p == 0) {
      ++g;
      w *= p;
    }
    mono[idx] = dual.multiply(mono[idx - w], gs.generators[g]);
  }
  for (std::size_t idx = 0; idx < dual.dim; ++idx)
    for (std::size_t k = 0; k < dual.dim; ++k) m(k, idx) = mono[idx][k];
  if (rank(m) != dual.dim) throw ConsistencyError("truncated monomials are linearly dependent");
  gs.monomial_to_basis = m;
  gs.basis_to_monomial = inverse(m);
  return gs;
}

}  // namespace elemgs
