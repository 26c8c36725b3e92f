#include "elemgs/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "elemgs/errors.hpp"
#include "elemgs/resolution.hpp"
#include "elemgs/serre.hpp"

namespace elemgs {

CorpusItem random_presented_module(std::mt19937_64& rng, const CorpusOptions& opts) {
  if (opts.primes.empty() || opts.max_n == 0 || opts.max_generators == 0)
    throw InputError("corpus options leave nothing to draw");
  while (true) {
    CorpusItem item;
    item.p = opts.primes[rng() % opts.primes.size()];
    item.n = 1 + rng() % opts.max_n;
    FieldRef f = FiniteField::prime(item.p);
    TruncatedAlgebra alg(item.p, item.n, f);
    std::size_t b = 1 + rng() % opts.max_generators;
    std::size_t a = rng() % (opts.max_relations + 1);
    item.presentation.generators = b;
    for (std::size_t c = 0; c < a; ++c) {
      std::vector<TruncatedAlgebra::Element> rel;
      for (std::size_t g = 0; g < b; ++g) {
        auto e = alg.zero();
        std::size_t terms = rng() % (opts.max_terms + 1);
        for (std::size_t t = 0; t < terms; ++t) {
          std::size_t mono = 1 + rng() % (alg.dim() - 1);
          e[mono] = Elem(1 + rng() % (item.p - 1));
        }
        rel.push_back(std::move(e));
      }
      item.presentation.relations.push_back(std::move(rel));
    }
    if (b * alg.dim() > 4 * opts.max_dim + 64) continue;
    item.module = presentation_cokernel(item.p, item.n, f, item.presentation);
    if (item.module.dim == 0 || item.module.dim > opts.max_dim) continue;
    return item;
  }
}

std::vector<CorpusItem> random_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusItem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_presented_module(rng, opts));
  return out;
}

bool AgreementRow::agree() const noexcept {
  return direct.status == h1.status && h1.status == dade.status;
}

bool AgreementRow::any_inconclusive() const noexcept {
  return direct.status == Status::inconclusive || h1.status == Status::inconclusive ||
         dade.status == Status::inconclusive;
}

AgreementRow run_agreement(const ModuleRep& m, unsigned ext_degree) {
  AgreementRow row;
  row.p = m.p;
  row.n = m.n;
  row.dim = m.dim;
  row.direct = radical_top_test(m);
  row.h1 = h1_projectivity(m);
  row.dade = dade_scan(m, ext_degree);
  return row;
}

std::vector<AgreementRow> run_agreement_suite(const std::vector<CorpusItem>& corpus, unsigned ext_degree,
                                              unsigned threads) {
  std::vector<AgreementRow> rows(corpus.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, unsigned(std::max<std::size_t>(1, corpus.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        rows[i] = run_agreement(corpus[i].module, ext_degree);
        rows[i].index = i;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

CohElement random_degree_two(const CohContextRef& ctx, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(*ctx, 2);
  if (monos.empty()) throw InputError("H^2 is zero for r = s = 0");
  while (true) {
    CohElement u(ctx);
    for (const auto& m : monos)
      if (rng() % 2) u.add_term(m, Elem(rng() % ctx->p));
    if (!u.is_zero()) return u;
  }
}

}  // namespace elemgs
