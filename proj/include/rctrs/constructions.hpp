#pragma once

// Builders for RCTRS codes whose MDS and non-RS properties follow from
// membership hypotheses on the parameters. Each result carries guarantee
// flags plus the name of the construction that justified them.

#include <string>
#include <utility>
#include <vector>

#include "rctrs/codes.hpp"

namespace rctrs {

struct Guarantees {
  bool mds = false;
  bool non_rs = false;
  bool ctrs_incompatible = false;
};

struct Construction {
  CodeSpec spec;
  Guarantees flags;
  std::vector<std::string> provenance;
  std::vector<std::string> warnings;
};

/// alpha_i = (b - mu_i c) / (1 - mu_i) over the non-identity subgroup elements,
/// in subgroup listing order. Throws DegenerateBC when b == c.
std::vector<Element> subgroup_eval_points(const MultiplicativeSubgroup& g, const Element& b, const Element& c);

struct SubgroupConstructionParams {
  Field ambient;
  unsigned base_degree = 1;  // F_q0 is the degree-d subfield view
  std::size_t group_order = 0;
  Element b, c, lambda, eta;
  std::size_t h = 0;
  std::size_t k = 0;
  bool extended = false;
  /// Accept eta inside F_q0^*; every guarantee flag is then cleared.
  bool unguaranteed = false;
};

/// Errors: MembershipViolation, DegenerateBC, OrderDoesNotDivide,
/// UnsupportedExtendedGeneralH, InvalidSpec.
Construction build_subgroup_code(const SubgroupConstructionParams& params);

struct SubfieldChainParams {
  Field ambient;
  unsigned q0_degree = 1;
  unsigned q1_degree = 2;
  std::vector<Element> alphas;
  Element b, c, lambda, eta;
  std::size_t k = 0;
  bool extended = false;
};

/// Hook 0, twist 1. When the length exceeds q0 the MDS flag is withheld and a
/// warning is attached.
Construction build_subfield_chain_code(const SubfieldChainParams& params);

/// ((q-1)/p, (q-1)/p + 1). Throws NotPrime or NotADivisor.
std::pair<std::size_t, std::size_t> corollary_lengths(std::uint64_t q, std::uint64_t p_div);

/// Hook-0 witness over GF(q^2) with group order (q-1)/p_div; q must be prime.
/// k = min(3, max(1, n/2)), b and c the first two nonzero elements of F_q,
/// lambda the first nonzero element of F_q outside G, eta primitive.
Construction corollary_witness(std::uint64_t q, std::uint64_t p_div, bool extended);

}  // namespace rctrs
