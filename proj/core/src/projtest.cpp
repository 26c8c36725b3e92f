#include "elemgs/projtest.hpp"

#include <algorithm>

#include "elemgs/errors.hpp"

namespace elemgs {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::projective:
      return "projective";
    case Status::not_projective:
      return "not_projective";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Mat combination(const std::vector<Mat>& xs, std::span<const Elem> c, const FieldRef& field, std::size_t dim) {
  Mat x(field, dim, dim);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (c[i]) x = x + xs[i].scaled(c[i]);
  return x;
}

JordanProfile profile_of(const Mat& x, std::uint32_t p, std::size_t dim) {
  JordanProfile prof;
  prof.ranks.push_back(dim);
  Mat power = Mat::identity(x.field(), dim);
  for (std::uint32_t j = 1; j < p; ++j) {
    power = power * x;
    prof.ranks.push_back(rank(power));
  }
  prof.free = dim % p == 0 && std::size_t(p) * prof.ranks.back() == dim;
  return prof;
}

// Next vector in lexicographic order (last coordinate fastest); false on wrap.
bool next_point(std::vector<Elem>& c, std::uint32_t q) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < q) return true;
    c[i] = 0;
  }
  return false;
}

bool normalized(const std::vector<Elem>& c) {
  for (Elem e : c)
    if (e) return e == 1;
  return false;
}

}  // namespace

Verdict radical_top_test(const ModuleRep& m) {
  Verdict v;
  v.method = "direct";
  Mat rad(m.field, m.dim, m.dim * m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) rad(r, i * m.dim + c) = m.actions[i](r, c);
  std::size_t top = m.dim - (m.n ? rank(rad) : 0);
  std::size_t need = top * ipow(m.p, m.n);
  if (need == m.dim) {
    v.status = Status::projective;
    v.note = "free of rank " + std::to_string(top);
  } else {
    v.status = Status::not_projective;
    Witness w;
    w.kind = Witness::Kind::dimension;
    w.observed = m.dim;
    w.expected = need;
    v.witness = w;
    v.note = "top has dimension " + std::to_string(top);
  }
  return v;
}

JordanProfile cyclic_freeness(const ModuleRep& m, const ShiftedElement& c) {
  if (c.c.size() != m.n) throw InputError("shifted element needs one coefficient per generator");
  if (std::all_of(c.c.begin(), c.c.end(), [](Elem e) { return e == 0; }))
    throw InputError("shifted element must be non-zero");
  FieldRef field = c.field ? c.field : m.field;
  for (Elem e : c.c)
    if (!field->contains(e)) throw InputError("shifted element coefficient outside its field");
  ModuleRep ext = extend_scalars(m, field);
  return profile_of(combination(ext.actions, c.c, field, m.dim), m.p, m.dim);
}

Verdict dade_scan(const ModuleRep& m, unsigned max_ext_degree, const DadeOptions& opts) {
  Verdict v;
  v.method = "dade";
  if (max_ext_degree == 0) throw InputError("extension degree must be >= 1");
  if (m.n == 0) {
    v.status = Status::projective;
    v.note = "A_0 = k";
    return v;
  }
  const unsigned base_deg = m.field->degree();
  std::size_t points = 0;
  for (unsigned k = 1; k <= max_ext_degree; ++k) {
    FieldRef f = k == 1 ? m.field : FiniteField::extension(m.p, base_deg * k);
    ModuleRep ext = extend_scalars(m, f);
    std::vector<Elem> c(m.n, 0);
    while (next_point(c, f->order())) {
      if (!normalized(c)) continue;
      ++points;
      if (!profile_of(combination(ext.actions, c, f, m.dim), m.p, m.dim).free) {
        v.status = Status::not_projective;
        v.witness = Witness{Witness::Kind::point, c, f, k, 0, 0};
        return v;
      }
    }
  }
  bool generic = generic_point_test(m);
  bool within = m.dim <= opts.max_dim && m.n <= opts.max_n && max_ext_degree >= opts.min_ext_degree;
  v.note = std::to_string(points) + " points free; generic point " + (generic ? "free" : "not free");
  if (!generic) {
    v.status = Status::inconclusive;
  } else if (within) {
    v.status = Status::projective;
  } else {
    v.status = Status::inconclusive;
    v.note += "; outside the scan bounds";
  }
  return v;
}

bool generic_point_test(const ModuleRep& m) {
  if (m.dim % m.p != 0) return false;
  if (m.n == 0 || m.dim == 0) return true;
  if (m.n > Poly::kMaxVars) throw InputError("generic point test supports at most 6 generators");
  PolyMat y = PolyMat::linear_combination(m.actions).pow(m.p - 1);
  return std::size_t(m.p) * generic_rank(y) == m.dim;
}

RankVariety rank_variety_generators(const ModuleRep& m, std::size_t max_minors) {
  RankVariety rv;
  if (m.dim % m.p != 0 || m.n == 0) {
    rv.degenerate = m.dim % m.p != 0;
    return rv;
  }
  if (m.n > Poly::kMaxVars) throw InputError("rank variety supports at most 6 generators");
  const std::size_t q = m.dim / m.p;
  rv.minor_size = q;
  if (q == 0) return rv;
  PolyMat y = PolyMat::linear_combination(m.actions).pow(m.p - 1);
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c)
      if (!y(r, c).is_zero()) {
        rows.push_back(r);
        break;
      }
  for (std::size_t c = 0; c < y.cols(); ++c)
    for (std::size_t r = 0; r < y.rows(); ++r)
      if (!y(r, c).is_zero()) {
        cols.push_back(c);
        break;
      }
  if (rows.size() < q || cols.size() < q) return rv;

  auto first_comb = [q](std::vector<std::size_t>& idx) {
    idx.resize(q);
    for (std::size_t i = 0; i < q; ++i) idx[i] = i;
  };
  auto next_comb = [q](std::vector<std::size_t>& idx, std::size_t total) {
    for (std::size_t i = q; i-- > 0;) {
      if (idx[i] < total - q + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  std::vector<std::size_t> ri, ci, rsel(q), csel(q);
  std::size_t count = 0;
  first_comb(ri);
  do {
    for (std::size_t i = 0; i < q; ++i) rsel[i] = rows[ri[i]];
    first_comb(ci);
    do {
      if (count++ == max_minors) {
        rv.truncated = true;
        return rv;
      }
      for (std::size_t i = 0; i < q; ++i) csel[i] = cols[ci[i]];
      Poly d = determinant(y.submatrix(rsel, csel));
      if (d.is_zero()) continue;
      d = d.monic();
      if (std::find(rv.generators.begin(), rv.generators.end(), d) == rv.generators.end())
        rv.generators.push_back(std::move(d));
    } while (next_comb(ci, cols.size()));
  } while (next_comb(ri, rows.size()));
  return rv;
}

}  // namespace elemgs
