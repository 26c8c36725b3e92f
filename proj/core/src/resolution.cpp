#include "elemgs/resolution.hpp"

#include <algorithm>

#include "elemgs/errors.hpp"

namespace elemgs {

namespace {

// Span of the syzygy's radical together with lex-earliest reduced echelon
// vectors of the syzygy outside it; returns the chosen top lifts.
std::vector<std::vector<Elem>> choose_top(const Mat& syzygy_cols, const std::vector<Mat>& actions) {
  const FieldRef& field = syzygy_cols.field();
  const std::size_t dim = syzygy_cols.rows();
  EchelonBasis span(field, dim);
  for (const auto& x : actions) {
    Mat img = x * syzygy_cols;
    for (std::size_t j = 0; j < img.cols(); ++j) span.insert(img.column(j));
  }
  RowEchelon e = rref(syzygy_cols.transpose());
  std::vector<std::vector<Elem>> chosen;
  for (std::size_t i = 0; i < e.rows.rows(); ++i) {
    auto row = e.rows.row(i);
    std::vector<Elem> v(row.begin(), row.end());
    if (span.insert(v)) chosen.push_back(std::move(v));
  }
  return chosen;
}

// k-matrix of A^b -> target sending e_g to images[g], given the monomial
// actions of the target.
Mat cover_map(const std::vector<std::vector<Elem>>& images, const std::vector<Mat>& mono, std::size_t target_dim) {
  const FieldRef& field = mono.front().field();
  const std::size_t P = mono.size();
  Mat out(field, target_dim, images.size() * P);
  for (std::size_t g = 0; g < images.size(); ++g)
    for (std::size_t mu = 0; mu < P; ++mu) {
      auto col = mono[mu].apply(images[g]);
      for (std::size_t r = 0; r < target_dim; ++r) out(r, g * P + mu) = col[r];
    }
  return out;
}

}  // namespace

Mat Resolution::expanded(std::size_t i) const {
  if (i == 0 || i > differentials.size()) throw InputError("differential index out of range");
  TruncatedAlgebra alg(p, n, field);
  const std::size_t P = alg.dim();
  const auto& d = differentials[i - 1];
  const std::size_t src = betti[i], dst = betti[i - 1];
  Mat out(field, dst * P, src * P);
  for (std::size_t g = 0; g < src; ++g)
    for (std::size_t mu = 0; mu < P; ++mu) {
      TruncatedAlgebra::Element xm = alg.zero();
      xm[mu] = 1;
      for (std::size_t h = 0; h < dst; ++h) {
        auto prod = alg.multiply(xm, d[h][g]);
        for (std::size_t nu = 0; nu < P; ++nu) out(h * P + nu, g * P + mu) = prod[nu];
      }
    }
  return out;
}

Resolution minimal_resolution(const ModuleRep& m, std::size_t length) {
  auto rep = validate_module(m);
  if (!rep.ok) throw InputError("invalid module: " + rep.violations.front());
  TruncatedAlgebra alg(m.p, m.n, m.field);
  const std::size_t P = alg.dim();
  Resolution res;
  res.p = m.p;
  res.n = m.n;
  res.field = m.field;

  // F_0 -> M
  Mat ident = Mat::identity(m.field, m.dim);
  res.augmentation = m.dim ? choose_top(ident, m.actions) : std::vector<std::vector<Elem>>{};
  res.betti.push_back(res.augmentation.size());
  Mat syz;
  if (m.dim == 0) {
    syz = Mat(m.field, 0, 0);
  } else {
    auto mono = alg.monomial_actions(m.actions);
    syz = kernel(cover_map(res.augmentation, mono, m.dim));
  }

  ModuleRep free_prev = res.betti[0] ? free_module(m.p, m.n, res.betti[0], m.field) : ModuleRep{};
  for (std::size_t i = 1; i <= length; ++i) {
    const std::size_t prev = res.betti[i - 1];
    std::vector<std::vector<TruncatedAlgebra::Element>> d(prev);
    if (syz.cols() == 0) {
      res.betti.push_back(0);
      res.differentials.push_back(std::move(d));
      syz = Mat(m.field, 0, 0);
      continue;
    }
    auto tops = choose_top(syz, free_prev.actions);
    const std::size_t b = tops.size();
    for (std::size_t h = 0; h < prev; ++h) {
      d[h].resize(b);
      for (std::size_t g = 0; g < b; ++g) d[h][g].assign(tops[g].begin() + h * P, tops[g].begin() + (h + 1) * P);
    }
    res.betti.push_back(b);
    res.differentials.push_back(std::move(d));
    auto mono = alg.monomial_actions(free_prev.actions);
    syz = kernel(cover_map(tops, mono, prev * P));
    free_prev = free_module(m.p, m.n, b, m.field);
  }
  res.last_syzygy = syz;
  return res;
}

std::vector<std::size_t> ext_dims(const ModuleRep& m, std::size_t length) {
  auto rep = validate_module(m);
  if (!rep.ok) throw InputError("invalid module: " + rep.violations.front());
  Resolution res = minimal_resolution(trivial_module(m.p, m.n, m.field), length + 1);
  TruncatedAlgebra alg(m.p, m.n, m.field);
  auto mono = m.dim ? alg.monomial_actions(m.actions) : std::vector<Mat>{};
  // delta^i : Hom(F_{i-1}, M) -> Hom(F_i, M), f |-> f . d_i
  auto coboundary_rank = [&](std::size_t i) -> std::size_t {
    if (i == 0 || m.dim == 0) return 0;
    const std::size_t src = res.betti[i - 1], dst = res.betti[i];
    if (!src || !dst) return 0;
    const auto& d = res.differentials[i - 1];
    Mat delta(m.field, dst * m.dim, src * m.dim);
    for (std::size_t g = 0; g < dst; ++g)
      for (std::size_t h = 0; h < src; ++h) {
        Mat blk = alg.act(d[h][g], mono);
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t c = 0; c < m.dim; ++c) delta(g * m.dim + r, h * m.dim + c) = blk(r, c);
      }
    return rank(delta);
  };
  std::vector<std::size_t> out;
  std::size_t rank_in = 0;
  for (std::size_t i = 0; i <= length; ++i) {
    std::size_t rank_out = coboundary_rank(i + 1);
    out.push_back(res.betti[i] * m.dim - rank_out - rank_in);
    rank_in = rank_out;
  }
  return out;
}

Verdict h1_projectivity(const ModuleRep& m) {
  Verdict v;
  v.method = "h1";
  std::size_t h1 = ext_dims(m, 1)[1];
  if (h1 == 0) {
    v.status = Status::projective;
  } else {
    v.status = Status::not_projective;
    Witness w;
    w.kind = Witness::Kind::cohomology;
    w.observed = h1;
    v.witness = w;
  }
  v.note = "dim H^1 = " + std::to_string(h1);
  return v;
}

ModuleRep carlson_kernel(const QuadraticForm& zeta, FieldRef field) {
  if (!field) field = FiniteField::prime(2);
  if (field->characteristic() != 2) throw InputError("Carlson kernels are built for p = 2");
  for (Elem e : {zeta.a, zeta.b, zeta.c})
    if (!field->contains(e)) throw InputError("quadratic form coefficient outside the field");
  if (!zeta.a && !zeta.b && !zeta.c) throw InputError("zeta must be non-zero");
  Resolution res = minimal_resolution(trivial_module(2, 2, field), 1);
  TruncatedAlgebra alg(2, 2, field);
  if (res.betti[1] != 2 || res.differentials[0][0][0] != alg.generator(0) || res.differentials[0][0][1] != alg.generator(1))
    throw ConsistencyError("unexpected first differential of the resolution of k");
  const Mat& omega2 = res.last_syzygy;  // inside A e_1 + A e_2, e_i -> x_i
  // the cocycle reads off the degree-one coefficients of the minimal generators
  // (x_1, 0), (x_2, x_1), (0, x_2) of Omega^2 k
  Mat phi(field, 1, omega2.cols());
  for (std::size_t j = 0; j < omega2.cols(); ++j) {
    const FiniteField& f = *field;
    Elem v = f.add(f.mul(zeta.a, omega2(1, j)), f.add(f.mul(zeta.b, omega2(2, j)), f.mul(zeta.c, omega2(4 + 2, j))));
    phi(0, j) = v;
  }
  Mat basis = omega2 * kernel(phi);
  return submodule(free_module(2, 2, 2, field), basis);
}

}  // namespace elemgs
