#include "elemgs/module.hpp"

#include <algorithm>
#include <sstream>

#include "elemgs/errors.hpp"

namespace elemgs {

TruncatedAlgebra::TruncatedAlgebra(std::uint32_t p, std::size_t n, FieldRef field)
    : p_(p), n_(n), field_(std::move(field)) {
  if (!field_ || field_->characteristic() != p_) throw InputError("algebra field must have characteristic p");
  dim_ = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    dim_ *= p_;
    if (dim_ > 4096) throw InputError("A_n too large (p^n > 4096)");
  }
}

std::vector<unsigned> TruncatedAlgebra::exponents(std::size_t index) const {
  std::vector<unsigned> e(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    e[i] = unsigned(index % p_);
    index /= p_;
  }
  return e;
}

std::size_t TruncatedAlgebra::index(std::span<const unsigned> exps) const {
  if (exps.size() != n_) throw InputError("exponent vector has wrong length");
  std::size_t idx = 0, w = 1;
  for (unsigned e : exps) {
    if (e >= p_) throw InputError("exponent must be < p");
    idx += e * w;
    w *= p_;
  }
  return idx;
}

std::size_t TruncatedAlgebra::shift(std::size_t index, std::size_t g) const noexcept {
  std::size_t w = 1;
  for (std::size_t i = 0; i < g; ++i) w *= p_;
  if ((index / w) % p_ == p_ - 1) return dim_;
  return index + w;
}

TruncatedAlgebra::Element TruncatedAlgebra::one() const {
  Element e = zero();
  e[0] = 1;
  return e;
}

TruncatedAlgebra::Element TruncatedAlgebra::generator(std::size_t g) const {
  if (g >= n_) throw InputError("generator index out of range");
  Element e = zero();
  std::size_t w = 1;
  for (std::size_t i = 0; i < g; ++i) w *= p_;
  if (p_ > 1) e[w] = 1;
  return e;
}

TruncatedAlgebra::Element TruncatedAlgebra::multiply(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw InputError("algebra element has wrong length");
  const FiniteField& f = *field_;
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      // add exponent vectors digit by digit; any carry means the product vanishes
      std::size_t x = i, y = j, idx = 0, w = 1;
      bool zero_product = false;
      for (std::size_t g = 0; g < n_; ++g) {
        std::size_t d = x % p_ + y % p_;
        if (d >= p_) {
          zero_product = true;
          break;
        }
        idx += d * w;
        w *= p_;
        x /= p_;
        y /= p_;
      }
      if (!zero_product) out[idx] = f.add(out[idx], f.mul(a[i], b[j]));
    }
  }
  return out;
}

std::vector<Mat> TruncatedAlgebra::monomial_actions(std::span<const Mat> actions) const {
  if (actions.size() != n_) throw InputError("expected one action matrix per generator");
  std::size_t d = actions.empty() ? 0 : actions.front().rows();
  std::vector<Mat> mono(dim_);
  mono[0] = Mat::identity(actions.empty() ? field_ : actions.front().field(), d);
  for (std::size_t idx = 1; idx < dim_; ++idx) {
    std::size_t g = 0, w = 1;
    while ((idx / w) % p_ == 0) {
      ++g;
      w *= p_;
    }
    mono[idx] = actions[g] * mono[idx - w];
  }
  return mono;
}

Mat TruncatedAlgebra::act(const Element& a, std::span<const Mat> monomial_actions) const {
  if (a.size() != dim_ || monomial_actions.size() != dim_) throw InputError("algebra element has wrong length");
  const Mat& id = monomial_actions.front();
  Mat out(id.field(), id.rows(), id.cols());
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i]) out = out + monomial_actions[i].scaled(a[i]);
  return out;
}

std::string TruncatedAlgebra::to_string(const Element& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    if (!first) os << " + ";
    first = false;
    auto e = exponents(i);
    bool any = false;
    std::ostringstream m;
    for (std::size_t g = 0; g < n_; ++g) {
      if (!e[g]) continue;
      if (any) m << "*";
      any = true;
      m << "x" << (g + 1);
      if (e[g] > 1) m << "^" << e[g];
    }
    if (!any)
      os << a[i];
    else if (a[i] == 1)
      os << m.str();
    else
      os << a[i] << "*" << m.str();
  }
  return first ? "0" : os.str();
}

ValidationReport validate_module(const ModuleRep& m) {
  ValidationReport rep;
  auto bad = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };
  if (!m.field) {
    bad("module has no field");
    return rep;
  }
  if (m.field->characteristic() != m.p) bad("field characteristic differs from p");
  if (m.actions.size() != m.n) bad("expected " + std::to_string(m.n) + " action matrices, got " + std::to_string(m.actions.size()));
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    const Mat& x = m.actions[i];
    if (x.rows() != m.dim || x.cols() != m.dim) bad("X_" + std::to_string(i + 1) + " is not dim x dim");
    else if (!same_field(x.field(), m.field)) bad("X_" + std::to_string(i + 1) + " is over a different field");
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j)
      if (!(m.actions[i] * m.actions[j] == m.actions[j] * m.actions[i]))
        bad("X_" + std::to_string(i + 1) + " X_" + std::to_string(j + 1) + " != X_" + std::to_string(j + 1) + " X_" +
            std::to_string(i + 1));
  for (std::size_t i = 0; i < m.n; ++i)
    if (!m.actions[i].pow(m.p).is_zero()) bad("X_" + std::to_string(i + 1) + "^p != 0");
  return rep;
}

ModuleRep trivial_module(std::uint32_t p, std::size_t n, FieldRef field) {
  if (!field) field = FiniteField::prime(p);
  ModuleRep m{field, p, n, 1, {}};
  for (std::size_t i = 0; i < n; ++i) m.actions.emplace_back(field, 1, 1);
  return m;
}

ModuleRep free_module(std::uint32_t p, std::size_t n, std::size_t rank, FieldRef field) {
  if (rank == 0) throw InputError("free module rank must be >= 1");
  if (!field) field = FiniteField::prime(p);
  TruncatedAlgebra alg(p, n, field);
  std::size_t P = alg.dim();
  ModuleRep m{field, p, n, rank * P, {}};
  for (std::size_t g = 0; g < n; ++g) {
    Mat x(field, m.dim, m.dim);
    for (std::size_t c = 0; c < rank; ++c)
      for (std::size_t idx = 0; idx < P; ++idx) {
        std::size_t to = alg.shift(idx, g);
        if (to < P) x(c * P + to, c * P + idx) = 1;
      }
    m.actions.push_back(std::move(x));
  }
  return m;
}

ModuleRep presentation_cokernel(std::uint32_t p, std::size_t n, FieldRef field, const Presentation& pres) {
  if (!field) field = FiniteField::prime(p);
  TruncatedAlgebra alg(p, n, field);
  const std::size_t P = alg.dim(), b = pres.generators, V = b * P;
  if (b == 0) throw InputError("presentation needs at least one generator");
  const FiniteField& f = *field;
  // k-span of all monomial multiples of the relations
  EchelonBasis rel(field, V);
  for (const auto& r : pres.relations) {
    if (r.size() != b) throw InputError("relation has " + std::to_string(r.size()) + " entries, expected " + std::to_string(b));
    for (const auto& e : r)
      if (e.size() != P) throw InputError("relation entry is not an element of A_n");
    for (std::size_t mu = 0; mu < P; ++mu) {
      TruncatedAlgebra::Element xm = alg.zero();
      xm[mu] = 1;
      std::vector<Elem> v(V, 0);
      for (std::size_t g = 0; g < b; ++g) {
        auto prod = alg.multiply(xm, r[g]);
        std::copy(prod.begin(), prod.end(), v.begin() + g * P);
      }
      rel.insert(std::move(v));
    }
  }
  // fully reduce so that non-pivot coordinates give canonical quotient coordinates
  Mat relmat(field, rel.size(), V);
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < V; ++j) relmat(i, j) = rel.rows()[i][j];
  RowEchelon e = rref(relmat);
  std::vector<bool> is_pivot(V, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> qbasis;
  std::vector<std::size_t> qpos(V, V);
  for (std::size_t c = 0; c < V; ++c)
    if (!is_pivot[c]) {
      qpos[c] = qbasis.size();
      qbasis.push_back(c);
    }
  const std::size_t d = qbasis.size();
  ModuleRep m{field, p, n, d, {}};
  for (std::size_t g = 0; g < n; ++g) {
    Mat x(field, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t c = qbasis[j];
      std::size_t blk = c / P, mono = c % P;
      std::size_t to = alg.shift(mono, g);
      if (to >= P) continue;
      std::size_t col = blk * P + to;
      // reduce e_col modulo the relation span: e_col - sum_i [pivot_i == col] row_i
      std::vector<Elem> v(V, 0);
      v[col] = 1;
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        Elem a = v[e.pivots[i]];
        if (!a) continue;
        Elem na = f.neg(a);
        for (std::size_t t = 0; t < V; ++t)
          if (e.rows(i, t)) v[t] = f.add(v[t], f.mul(na, e.rows(i, t)));
      }
      for (std::size_t t = 0; t < V; ++t)
        if (v[t] && qpos[t] < V) x(qpos[t], j) = v[t];
    }
    m.actions.push_back(std::move(x));
  }
  return m;
}

ModuleRep restrict_module(const ModuleRep& m, const AlgebraMap& f) {
  TruncatedAlgebra alg(m.p, m.n, m.field);
  auto mono = alg.monomial_actions(m.actions);
  ModuleRep out{m.field, m.p, f.images.size(), m.dim, {}};
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    const auto& img = f.images[i];
    if (img.size() != alg.dim()) throw InputError("image " + std::to_string(i + 1) + " is not an element of A_n");
    if (img[0] != 0) throw InputError("image " + std::to_string(i + 1) + " has nonzero constant term");
    out.actions.push_back(alg.act(img, mono));
  }
  return out;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.p != b.p || a.n != b.n || !same_field(a.field, b.field))
    throw InputError("direct sum of modules over different algebras");
  ModuleRep m{a.field, a.p, a.n, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.n; ++i) m.actions.push_back(Mat::block_diag(a.actions[i], b.actions[i]));
  return m;
}

ModuleRep tensor(const ModuleRep& a, const ModuleRep& b, const HopfData& h, const GeneratorSet& gens) {
  if (a.p != b.p || a.n != b.n || !same_field(a.field, b.field))
    throw InputError("tensor product of modules over different algebras");
  if (a.p != gens.p || a.n != gens.n() || h.dim != gens.monomial_to_basis.rows())
    throw InputError("Hopf algebra does not match the modules' algebra");
  if (!h.field->is_prime_field() && !same_field(h.field, a.field))
    throw InputError("Hopf algebra field is not contained in the module field");
  const FiniteField& hf = *h.field;
  const std::size_t D = h.dim;
  TruncatedAlgebra alg(a.p, a.n, a.field);
  auto ma = alg.monomial_actions(a.actions), mb = alg.monomial_actions(b.actions);
  ModuleRep out{a.field, a.p, a.n, a.dim * b.dim, {}};
  for (std::size_t g = 0; g < a.n; ++g) {
    const auto& gv = gens.generators[g];
    Mat c(h.field, D, D);
    for (std::size_t k = 0; k < D; ++k) {
      if (!gv[k]) continue;
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
          if (Elem d = h.comult_at(k, i, j)) c(i, j) = hf.add(c(i, j), hf.mul(gv[k], d));
    }
    Mat cm = gens.basis_to_monomial * c * gens.basis_to_monomial.transpose();
    Mat acc(a.field, out.dim, out.dim);
    for (std::size_t x = 0; x < D; ++x) {
      Mat right(a.field, b.dim, b.dim);
      bool any = false;
      for (std::size_t y = 0; y < D; ++y)
        if (Elem coeff = cm(x, y)) {
          right = right + mb[y].scaled(coeff);
          any = true;
        }
      if (any) acc = acc + Mat::kron(ma[x], right);
    }
    out.actions.push_back(std::move(acc));
  }
  return out;
}

ModuleRep extend_scalars(const ModuleRep& m, const FieldRef& to) {
  if (same_field(m.field, to)) return m;
  auto emb = embedding(m.field, to);
  ModuleRep out{to, m.p, m.n, m.dim, {}};
  for (const auto& x : m.actions) out.actions.push_back(x.mapped(to, emb));
  return out;
}

ModuleRep submodule(const ModuleRep& m, const Mat& basis) {
  if (basis.rows() != m.dim) throw InputError("submodule basis has wrong length");
  const FiniteField& f = *m.field;
  const std::size_t d = basis.cols();
  // echelon rows of the column span, each remembered as a combination of the given columns
  EchelonBasis eb(m.field, m.dim);
  std::vector<std::vector<Elem>> expr;
  for (std::size_t j = 0; j < d; ++j) {
    auto v = basis.column(j);
    auto mult = eb.reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) throw InputError("submodule basis is linearly dependent");
    std::vector<Elem> e(d, 0);
    e[j] = 1;
    for (std::size_t i = 0; i < mult.size(); ++i)
      if (mult[i])
        for (std::size_t t = 0; t < d; ++t) e[t] = f.sub(e[t], f.mul(mult[i], expr[i][t]));
    Elem s = f.inv(*it);
    for (auto& x : e) x = f.mul(x, s);
    eb.insert(basis.column(j));
    expr.push_back(std::move(e));
  }
  ModuleRep out{m.field, m.p, m.n, d, {}};
  for (const auto& x : m.actions) {
    Mat img = x * basis;
    Mat y(m.field, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto v = img.column(j);
      auto mult = eb.reduce(v);
      if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; }))
        throw InputError("submodule basis does not span an invariant subspace");
      for (std::size_t i = 0; i < d; ++i)
        if (mult[i])
          for (std::size_t t = 0; t < d; ++t)
            if (expr[i][t]) y(t, j) = f.add(y(t, j), f.mul(mult[i], expr[i][t]));
    }
    out.actions.push_back(std::move(y));
  }
  return out;
}

}  // namespace elemgs
