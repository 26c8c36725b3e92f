#pragma once

// Seeded random fixtures: presented modules for the detector agreement suite
// and degree-2 cohomology classes for the extraction suite. One generator
// (std::mt19937_64, draws reduced with %) feeds everything.

#include <cstdint>
#include <random>
#include <vector>

#include "elemgs/cohomology.hpp"
#include "elemgs/module.hpp"
#include "elemgs/projtest.hpp"

namespace elemgs {

struct CorpusOptions {
  std::vector<std::uint32_t> primes{2, 3};
  std::size_t max_n = 3;
  std::size_t max_generators = 3;  // b
  std::size_t max_relations = 3;   // a
  std::size_t max_dim = 24;
  std::size_t max_terms = 3;       // nonzero monomials per relation entry
};

struct CorpusItem {
  std::uint32_t p = 2;
  std::size_t n = 0;
  Presentation presentation;
  ModuleRep module;
};

/// Relation entries lie in the radical; draws with dim 0 or dim > max_dim are redrawn.
CorpusItem random_presented_module(std::mt19937_64& rng, const CorpusOptions& opts = {});
std::vector<CorpusItem> random_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& opts = {});

struct AgreementRow {
  std::size_t index = 0;
  std::uint32_t p = 2;
  std::size_t n = 0, dim = 0;
  Verdict direct, h1, dade;
  bool agree() const noexcept;
  bool any_inconclusive() const noexcept;
};

AgreementRow run_agreement(const ModuleRep& m, unsigned ext_degree = 2);
/// Items run on up to `threads` workers; rows come back in input order.
std::vector<AgreementRow> run_agreement_suite(const std::vector<CorpusItem>& corpus, unsigned ext_degree = 2,
                                              unsigned threads = 0);

/// A nonzero element of H^2(E_{r,s}, F_p) with random F_p coefficients.
CohElement random_degree_two(const CohContextRef& ctx, std::mt19937_64& rng);

}  // namespace elemgs
