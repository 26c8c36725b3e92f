#include "elemgs/serre.hpp"

#include <algorithm>
#include <functional>

#include "elemgs/errors.hpp"

namespace elemgs {

unsigned default_degree_cap(std::uint32_t p) { return 2 * p * p + 2 * p + 4; }

std::vector<MonomialKey> monomials_of_degree(const CohContext& ctx, unsigned degree) {
  std::vector<MonomialKey> out;
  MonomialKey key(ctx.key_size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == key.size()) {
      if (left == 0) out.push_back(key);
      return;
    }
    if (ctx.p != 2 && ctx.odd_position(pos)) {
      key[pos] = 0;
      rec(pos + 1, left);
      if (left >= 1) {
        key[pos] = 1;
        rec(pos + 1, left - 1);
      }
      key[pos] = 0;
      return;
    }
    unsigned w = ctx.p == 2 ? 1 : 2;
    for (unsigned e = 0; e * w <= left; ++e) {
      key[pos] = std::uint16_t(e);
      rec(pos + 1, left - e * w);
    }
    key[pos] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

OperationId op_p0(std::uint32_t p) { return p == 2 ? OperationId{OperationId::Kind::Sq, 0} : OperationId{OperationId::Kind::P, 0}; }
OperationId op_bp0(std::uint32_t p) { return p == 2 ? OperationId{OperationId::Kind::Sq, 1} : OperationId{OperationId::Kind::BP, 0}; }
OperationId op_bp1(std::uint32_t p) { return p == 2 ? OperationId{OperationId::Kind::Sq, 3} : OperationId{OperationId::Kind::BP, 1}; }
// P^{p^t}; at p = 2 its counterpart is Sq^{2^{t+1}}
OperationId op_p_power(std::uint32_t p, unsigned t) {
  if (p == 2) return {OperationId::Kind::Sq, 1u << (t + 1)};
  unsigned e = 1;
  for (unsigned i = 0; i < t; ++i) e *= p;
  return {OperationId::Kind::P, e};
}

std::vector<MonomialKey> ring_generator_keys(const CohContext& ctx) {
  std::vector<MonomialKey> out;
  for (std::size_t i = 0; i < ctx.key_size(); ++i) {
    MonomialKey k(ctx.key_size(), 0);
    k[i] = 1;
    out.push_back(std::move(k));
  }
  return out;
}

bool is_z_monomial(const CohContext& c, const MonomialKey& key) {
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (!key[i]) continue;
    bool z = c.p == 2 ? (i >= c.r && key[i] % 2 == 0) : (i >= 2 * c.r && i < 2 * c.r + c.s);
    if (!z) return false;
  }
  return true;
}

bool in_z_subring(const CohElement& a) {
  for (const auto& [key, coeff] : a.terms())
    if (!is_z_monomial(*a.context(), key)) return false;
  return true;
}

CohElement z_form(const CohContextRef& ctx, const std::vector<Elem>& c) {
  CohElement out(ctx);
  for (unsigned j = 0; j < c.size(); ++j)
    if (c[j]) out += CohElement::generator(ctx, 'z', j + 1).scaled(c[j]);
  return out;
}

CohElement xr_power(const CohContextRef& ctx, unsigned m) {
  MonomialKey k(ctx->key_size(), 0);
  if (m == 0) return CohElement::one(ctx);
  if (ctx->p == 2)
    k[ctx->l_pos(ctx->r - 1)] = std::uint16_t(2 * m);
  else
    k[ctx->x_pos(ctx->r - 1)] = std::uint16_t(m);
  return CohElement::monomial(ctx, k);
}

// exponent m of x_r if the key is x_r^m times something in the remaining slots listed
std::optional<unsigned> xr_exponent(const CohContext& c, const MonomialKey& key) {
  if (c.r == 0) return 0u;
  if (c.p == 2) {
    unsigned a = key[c.l_pos(c.r - 1)];
    if (a % 2) return std::nullopt;
    return a / 2;
  }
  if (key[c.l_pos(c.r - 1)]) return std::nullopt;
  return unsigned(key[c.x_pos(c.r - 1)]);
}

// index j if the key is exactly z_j after removing the x_r power
std::optional<unsigned> single_z(const CohContext& c, MonomialKey key) {
  if (c.r > 0) {
    if (c.p == 2)
      key[c.l_pos(c.r - 1)] = 0;
    else
      key[c.x_pos(c.r - 1)] = 0;
  }
  std::optional<unsigned> found;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (!key[i]) continue;
    if (found) return std::nullopt;
    for (unsigned j = 0; j < c.s; ++j) {
      bool hit = c.p == 2 ? (i == c.y_pos(j) && key[i] == 2) : (i == c.z_pos(j) && key[i] == 1);
      if (hit) found = j;
    }
    if (!found) return std::nullopt;
  }
  return found;
}

struct XrForm {
  unsigned m = 0;
  std::vector<Elem> coeffs;
};

// f = x_r^m * sum_j c_j z_j with a common m
std::optional<XrForm> xr_times_linear(const CohElement& f) {
  const CohContext& c = *f.context();
  if (f.is_zero()) return std::nullopt;
  XrForm out;
  out.coeffs.assign(c.s, 0);
  bool first = true;
  for (const auto& [key, coeff] : f.terms()) {
    auto m = xr_exponent(c, key);
    auto j = single_z(c, key);
    if (!m || !j) return std::nullopt;
    if (first) out.m = *m;
    else if (out.m != *m) return std::nullopt;
    first = false;
    out.coeffs[*j] = coeff;
  }
  return out;
}

std::optional<unsigned> xr_pure_power(const CohElement& f) {
  const CohContext& c = *f.context();
  if (c.r == 0 || f.terms().size() != 1) return std::nullopt;
  const MonomialKey& key = f.terms().begin()->first;
  auto m = xr_exponent(c, key);
  if (!m || *m == 0) return std::nullopt;
  MonomialKey rest = key;
  if (c.p == 2)
    rest[c.l_pos(c.r - 1)] = 0;
  else
    rest[c.x_pos(c.r - 1)] = 0;
  if (std::any_of(rest.begin(), rest.end(), [](auto e) { return e != 0; })) return std::nullopt;
  return m;
}

bool proportional(const CohElement& a, const CohElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_leading(a) == normalize_leading(b);
}

void require_degree_two_member(const GradedIdealSpan& ideal, const CohElement& u) {
  if (!u.context()->same_as(*ideal.context())) throw InputError("element and ideal live in different cohomology rings");
  if (u.is_zero()) throw InputError("u must be nonzero");
  auto d = u.degree();
  if (!u.is_homogeneous() || !d || *d != 2) throw InputError("u must be homogeneous of degree 2");
  if (!ideal.membership(u).member) throw InputError("u does not lie in the ideal");
}

class Runner {
 public:
  Runner(const GradedIdealSpan& ideal, const CohElement& u) : ideal_(ideal), cert(ideal.context()), cur(u) {
    cert.initial = u;
  }

  void step(CertificateStep s) {
    if (s.kind == CertificateStep::Kind::operation && !cur.is_zero()) {
      int target = *cur.degree() + s.op.degree_shift(ideal_.context()->p);
      if (target > int(ideal_.cap()))
        throw InconclusiveError("extraction needs degree " + std::to_string(target) + " beyond the cap " +
                                    std::to_string(ideal_.cap()),
                                unsigned(target));
    }
    cur = apply_step(s, cur);
    cert.steps.push_back(s);
  }
  void op(const OperationId& o) { step(CertificateStep{CertificateStep::Kind::operation, o}); }
  void op_nonzero(const OperationId& o) {
    op(o);
    if (cur.is_zero()) throw ConsistencyError("operation " + o.name() + " vanished inside the extraction chain");
  }

  // normalize, then descend until P^0 fixes the element
  void to_prime_field() {
    step(CertificateStep{CertificateStep::Kind::normalize, {}});
    OperationId p0 = op_p0(ideal_.context()->p);
    for (int guard = 0; guard < 4096 && !(steenrod_apply(p0, cur) == cur); ++guard) {
      step(CertificateStep{CertificateStep::Kind::descend, {}});
      if (cur.is_zero()) throw ConsistencyError("descent reached zero");
    }
  }

  // applies P^0 while the image stays nonzero, at most `limit` times; returns the count
  unsigned shift_up(unsigned limit) {
    OperationId p0 = op_p0(ideal_.context()->p);
    unsigned k = 0;
    while (k < limit) {
      CohElement next = steenrod_apply(p0, cur);
      if (next.is_zero()) break;
      op(p0);
      ++k;
    }
    return k;
  }

  void xr_chain() {
    std::uint32_t p = ideal_.context()->p;
    shift_up(ideal_.context()->r + 1);
    if (auto m = xr_pure_power(cur)) {
      cert.m = *m;
      return;
    }
    op_nonzero(op_bp0(p));
    op_nonzero(op_bp1(p));
    for (unsigned t = 1;; ++t) {
      if (auto m = xr_pure_power(cur)) {
        cert.m = *m;
        return;
      }
      op_nonzero(op_p_power(p, t));
    }
  }

  void finish() {
    cert.final_element = cur;
    CohElement prod = xr_power(ideal_.context(), cert.m);
    for (const auto& f : cert.forms) prod = prod * f;
    cert.product = prod;
    cert.final_proportional_to_product = proportional(cert.final_element, cert.product);
    cert.verified = verify_certificate(cert, ideal_);
    if (!cert.verified) throw ConsistencyError("extraction certificate failed to verify");
  }

  const GradedIdealSpan& ideal_;
  ExtractionCertificate cert;
  CohElement cur;
};

}  // namespace

GradedIdealSpan::GradedIdealSpan(CohContextRef ctx, std::vector<CohElement> generators, unsigned cap)
    : ctx_(std::move(ctx)), cap_(cap) {
  for (auto& g : generators) {
    if (!g.context()->same_as(*ctx_)) throw InputError("generator from a different cohomology ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InputError("ideal generators must be homogeneous");
    generators_.push_back(std::move(g));
  }
}

const GradedIdealSpan::Piece& GradedIdealSpan::piece(unsigned degree) const {
  std::lock_guard lock(mutex_);
  if (degree > cap_)
    throw InconclusiveError("degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap_), degree);
  auto it = pieces_.find(degree);
  if (it == pieces_.end()) {
    build(degree);
    it = pieces_.find(degree);
  }
  return *it->second;
}

std::vector<Elem> GradedIdealSpan::to_vector(const Piece& pc, const CohElement& a) const {
  std::vector<Elem> v(pc.monomials.size(), 0);
  for (const auto& [key, coeff] : a.terms()) {
    auto it = pc.index.find(key);
    if (it == pc.index.end()) throw ConsistencyError("monomial outside its degree piece");
    v[it->second] = coeff;
  }
  return v;
}

CohElement GradedIdealSpan::to_element(const Piece& pc, const std::vector<Elem>& v) const {
  CohElement out(ctx_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out.add_term(pc.monomials[i], v[i]);
  return out;
}

void GradedIdealSpan::build(unsigned degree) const {
  const CohContext& c = *ctx_;
  // lower pieces first, so recursion below never re-enters a half-built piece
  for (unsigned e = 0; e < degree; ++e) piece(e);

  auto pc = std::make_unique<Piece>();
  pc->monomials = monomials_of_degree(c, degree);
  for (std::size_t i = 0; i < pc->monomials.size(); ++i) pc->index.emplace(pc->monomials[i], i);
  const std::size_t dim = pc->monomials.size();
  pc->stable = EchelonBasis(c.field, dim);
  pc->ideal = EchelonBasis(c.field, dim);

  for (const auto& g : generators_)
    if (*g.degree() == int(degree)) pc->stable.insert(to_vector(*pc, g));

  for (unsigned e = 0; e < degree && !pc->stable.full(); ++e) {
    unsigned shift = degree - e;
    std::vector<OperationId> ops;
    if (c.p == 2) {
      ops.push_back({OperationId::Kind::Sq, shift});
    } else {
      unsigned q = 2 * (c.p - 1);
      if (shift % q == 0) ops.push_back({OperationId::Kind::P, shift / q});
      if (shift % q == 1) ops.push_back({OperationId::Kind::BP, shift / q});
    }
    if (ops.empty()) continue;
    const Piece& lower = *pieces_.at(e);
    for (const auto& row : lower.stable.rows()) {
      CohElement b = to_element(lower, row);
      for (const auto& o : ops) {
        CohElement img = steenrod_apply(o, b);
        if (!img.is_zero()) pc->stable.insert(to_vector(*pc, img));
      }
    }
  }

  OperationId p0 = op_p0(c.p);
  for (std::size_t i = 0; i < pc->stable.size() && !pc->stable.full(); ++i) {
    CohElement img = steenrod_apply(p0, to_element(*pc, pc->stable.rows()[i]));
    if (!img.is_zero()) pc->stable.insert(to_vector(*pc, img));
  }

  for (const auto& row : pc->stable.rows()) pc->ideal.insert(row);
  for (const auto& gk : ring_generator_keys(c)) {
    if (pc->ideal.full()) break;
    int dg = monomial_degree(c, gk);
    if (dg > int(degree)) continue;
    const Piece& lower = *pieces_.at(degree - unsigned(dg));
    CohElement g = CohElement::monomial(ctx_, gk);
    for (const auto& row : lower.ideal.rows()) {
      CohElement prod = g * to_element(lower, row);
      if (!prod.is_zero()) pc->ideal.insert(to_vector(*pc, prod));
    }
  }
  pieces_.emplace(degree, std::move(pc));
}

std::vector<CohElement> GradedIdealSpan::basis(unsigned degree) const {
  std::lock_guard lock(mutex_);
  const Piece& pc = piece(degree);
  std::vector<CohElement> out;
  for (const auto& row : pc.ideal.rows()) out.push_back(to_element(pc, row));
  return out;
}

std::size_t GradedIdealSpan::dimension(unsigned degree) const {
  std::lock_guard lock(mutex_);
  return piece(degree).ideal.size();
}

GradedIdealSpan::Membership GradedIdealSpan::membership(const CohElement& a) const {
  if (!a.context()->same_as(*ctx_)) throw InputError("element from a different cohomology ring");
  Membership out;
  out.member = true;
  std::map<int, CohElement> parts;
  for (const auto& [key, coeff] : a.terms()) {
    int d = monomial_degree(*ctx_, key);
    parts.try_emplace(d, ctx_).first->second.add_term(key, coeff);
  }
  std::lock_guard lock(mutex_);
  for (const auto& [d, part] : parts) {
    const Piece& pc = piece(unsigned(d));
    std::vector<Elem> v = to_vector(pc, part);
    std::vector<Elem> coords = pc.ideal.reduce(v);
    if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; })) {
      out.member = false;
      out.coordinates.clear();
      return out;
    }
    out.coordinates.insert(out.coordinates.end(), coords.begin(), coords.end());
  }
  return out;
}

std::unique_ptr<GradedIdealSpan> steenrod_closure(const std::vector<CohElement>& generators, unsigned cap) {
  if (generators.empty()) throw InputError("closure needs at least one generator to fix the ring");
  return std::make_unique<GradedIdealSpan>(generators.front().context(), generators, cap);
}

GradedIdealSpan::Membership graded_membership(const GradedIdealSpan& ideal, const CohElement& a) {
  return ideal.membership(a);
}

CohElement normalize_leading(const CohElement& a) {
  if (a.is_zero()) return a;
  Elem lead = a.terms().begin()->second;
  return a.scaled(a.context()->field->inv(lead));
}

CohElement descend_to_prime_field(const CohElement& f) {
  if (f.is_zero()) throw InputError("cannot descend the zero element");
  if (!in_z_subring(f)) throw InputError("descent is only defined on the polynomial subring in the z_j");
  OperationId p0 = op_p0(f.context()->p);
  CohElement cur = normalize_leading(f);
  while (true) {
    CohElement g = steenrod_apply(p0, cur) - cur;
    if (g.is_zero()) return cur;
    cur = normalize_leading(g);
  }
}

CohElement descend_to_prime_field(const GradedIdealSpan& ideal) {
  const CohContext& c = *ideal.context();
  for (unsigned d = 0; d <= ideal.cap(); d += 2) {
    auto basis = ideal.basis(d);
    if (basis.empty()) continue;
    auto monos = monomials_of_degree(c, d);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (!is_z_monomial(c, monos[i])) order.push_back(i);
    std::size_t first_z = order.size();
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (is_z_monomial(c, monos[i])) order.push_back(i);
    std::map<MonomialKey, std::size_t, std::greater<>> pos;
    for (std::size_t j = 0; j < order.size(); ++j) pos.emplace(monos[order[j]], j);

    std::vector<std::vector<Elem>> rows;
    for (const auto& b : basis) {
      std::vector<Elem> v(monos.size(), 0);
      for (const auto& [key, coeff] : b.terms()) v[pos.at(key)] = coeff;
      rows.push_back(std::move(v));
    }
    RowEchelon re = rref(Mat::from_rows(c.field, rows));
    std::optional<CohElement> best;
    std::size_t best_support = 0;
    for (std::size_t i = 0; i < re.pivots.size(); ++i) {
      if (re.pivots[i] < first_z) continue;
      CohElement e(ideal.context());
      std::size_t support = 0;
      for (std::size_t j = first_z; j < order.size(); ++j)
        if (Elem x = re.rows(i, j)) {
          e.add_term(monos[order[j]], x);
          ++support;
        }
      if (!best || support < best_support) {
        best = e;
        best_support = support;
      }
    }
    if (best) return descend_to_prime_field(*best);
  }
  throw InconclusiveError("the ideal meets the z-subring trivially up to the degree cap", ideal.cap() + 2);
}

std::vector<CohElement> normalized_linear_forms(const CohContextRef& ctx) {
  std::vector<CohElement> out;
  unsigned s = ctx->s;
  std::uint32_t p = ctx->p;
  std::vector<Elem> c(s, 0);
  std::function<void(unsigned)> rec = [&](unsigned j) {
    if (j == s) {
      auto it = std::find_if(c.begin(), c.end(), [](Elem e) { return e != 0; });
      if (it != c.end() && *it == 1) out.push_back(z_form(ctx, c));
      return;
    }
    for (Elem v = 0; v < p; ++v) {
      c[j] = v;
      rec(j + 1);
    }
    c[j] = 0;
  };
  rec(0);
  return out;
}

std::vector<CohElement> linear_form_product_search(const GradedIdealSpan& ideal, unsigned max_length) {
  const CohContextRef& ctx = ideal.context();
  if (ctx->s == 0) throw InputError("there are no z variables to form products of");
  auto forms = normalized_linear_forms(ctx);
  std::vector<std::size_t> pick;
  std::optional<std::vector<CohElement>> found;
  std::function<bool(std::size_t, unsigned, const CohElement&)> rec = [&](std::size_t from, unsigned left,
                                                                          const CohElement& prefix) {
    if (left == 0) {
      if (!ideal.membership(prefix).member) return false;
      std::vector<CohElement> out;
      for (auto i : pick) out.push_back(forms[i]);
      found = std::move(out);
      return true;
    }
    for (std::size_t i = from; i < forms.size(); ++i) {
      pick.push_back(i);
      if (rec(i, left - 1, prefix * forms[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (unsigned len = 1; len <= max_length; ++len) {
    if (2 * len > ideal.cap())
      throw InconclusiveError("no product of linear forms found below the degree cap", 2 * len);
    if (rec(0, len, CohElement::one(ctx))) return *found;
  }
  throw InconclusiveError("no product of at most " + std::to_string(max_length) + " linear forms lies in the ideal",
                          2 * (max_length + 1));
}

std::string CertificateStep::name() const {
  switch (kind) {
    case Kind::normalize: return "normalize";
    case Kind::descend: return "descend";
    default: return op.name();
  }
}

CertificateStep CertificateStep::parse(std::string_view text) {
  if (text == "normalize") return {Kind::normalize, {}};
  if (text == "descend") return {Kind::descend, {}};
  return {Kind::operation, OperationId::parse(text)};
}

CohElement apply_step(const CertificateStep& step, const CohElement& a) {
  switch (step.kind) {
    case CertificateStep::Kind::normalize: return normalize_leading(a);
    case CertificateStep::Kind::descend:
      return normalize_leading(steenrod_apply(op_p0(a.context()->p), a) - a);
    default: return steenrod_apply(step.op, a);
  }
}

CohElement replay(const CohElement& initial, const std::vector<CertificateStep>& steps) {
  CohElement cur = initial;
  for (const auto& s : steps) cur = apply_step(s, cur);
  return cur;
}

bool verify_certificate(const ExtractionCertificate& cert, const GradedIdealSpan& ideal) {
  const CohContextRef& ctx = ideal.context();
  if (!(replay(cert.initial, cert.steps) == cert.final_element)) return false;
  if (cert.final_element.is_zero() || cert.product.is_zero()) return false;
  if (cert.m > 0 && ctx->r == 0) return false;
  CohElement prod = xr_power(ctx, cert.m);
  for (const auto& f : cert.forms) {
    auto shape = xr_times_linear(f);
    if (!shape || shape->m != 0) return false;
    prod = prod * f;
  }
  if (!(prod == cert.product)) return false;
  return ideal.membership(cert.initial).member && ideal.membership(cert.final_element).member &&
         ideal.membership(cert.product).member;
}

ExtractionCertificate xr_power_extract(const GradedIdealSpan& ideal, const CohElement& u) {
  const CohContext& c = *ideal.context();
  if (c.r == 0) throw InputError("x_r powers need r >= 1");
  require_degree_two_member(ideal, u);
  for (const auto& [key, coeff] : u.terms())
    for (unsigned j = 0; j < c.s; ++j)
      if ((c.p != 2 && key[c.z_pos(j)]) || key[c.y_pos(j)])
        throw InputError("u must lie in the cohomology of the G_a part");
  Runner run(ideal, u);
  run.xr_chain();
  run.cert.branch = "xr-power";
  run.finish();
  return std::move(run.cert);
}

ExtractionCertificate serre3_extract(const GradedIdealSpan& ideal, const CohElement& u, unsigned max_forms) {
  const CohContextRef& ctx = ideal.context();
  const CohContext& c = *ctx;
  require_degree_two_member(ideal, u);
  Runner run(ideal, u);
  std::uint32_t p = c.p;

  // after r shifts only the E_s part can survive; if the shifts stop early,
  // the last nonzero image has no E_s part left
  run.shift_up(c.r);
  bool pure_e_s = true;
  for (const auto& [key, coeff] : run.cur.terms())
    for (unsigned i = 0; i < c.r; ++i)
      if (key[c.l_pos(i)] || (p != 2 && key[c.x_pos(i)])) pure_e_s = false;

  if (pure_e_s) {
    if (auto lin = xr_times_linear(run.cur); lin && lin->m == 0) {
      run.to_prime_field();
      run.cert.forms = {run.cur};
      run.cert.branch = "linear-form";
    } else {
      if (p == 2) {
        run.op_nonzero({OperationId::Kind::Sq, 1});
        run.op_nonzero({OperationId::Kind::Sq, 2});
        run.op_nonzero({OperationId::Kind::Sq, 1});
      } else {
        run.op_nonzero(op_bp0(p));
        run.op_nonzero(op_bp1(p));
      }
      run.to_prime_field();
      run.cert.forms = linear_form_product_search(ideal, max_forms);
      run.cert.branch = "product-of-forms";
    }
    run.finish();
    return std::move(run.cert);
  }

  bool mixed = false;
  for (const auto& [key, coeff] : run.cur.terms())
    if (key[c.l_pos(c.r - 1)])
      for (unsigned j = 0; j < c.s; ++j)
        if (key[c.y_pos(j)]) mixed = true;

  if (!mixed) {
    run.xr_chain();
    run.cert.branch = "xr-power";
    run.finish();
    return std::move(run.cert);
  }

  run.op_nonzero(op_bp0(p));
  run.op_nonzero(op_bp1(p));
  for (unsigned t = 1;; ++t) {
    if (auto shape = xr_times_linear(run.cur); shape && shape->m > 0) {
      run.cert.m = shape->m;
      run.cert.forms = {normalize_leading(z_form(ctx, shape->coeffs))};
      break;
    }
    run.op_nonzero(op_p_power(p, t));
  }
  run.cert.branch = "xr-times-form";
  run.finish();
  return std::move(run.cert);
}

}  // namespace elemgs
