#include "rctrs/constructions.hpp"

#include <algorithm>

namespace rctrs {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::MembershipViolation, what); }

Element bind(const Field& f, const Element& x) { return x + f.zero(); }

}  // namespace

std::vector<Element> subgroup_eval_points(const MultiplicativeSubgroup& g, const Element& b, const Element& c) {
  if (b == c) throw Error(Errc::DegenerateBC, "b and c must differ");
  std::vector<Element> pts;
  pts.reserve(g.order() > 0 ? g.order() - 1 : 0);
  for (const auto& mu : g.elements) {
    if (mu.is_one()) continue;
    pts.push_back((b - mu * c) / (Element(1) - mu));
  }
  return pts;
}

Construction build_subgroup_code(const SubgroupConstructionParams& p) {
  const Field f = p.ambient;
  if (!f.valid()) throw Error(Errc::InvalidArgument, "no ambient field");
  const SubfieldView q0 = f.subfield(p.base_degree);
  const MultiplicativeSubgroup g = subgroup_of_order(q0, p.group_order);
  const Element b = bind(f, p.b), c = bind(f, p.c), lambda = bind(f, p.lambda), eta = bind(f, p.eta);

  if (!q0.contains(b) || !q0.contains(c)) violation("b and c must lie in the base subfield");
  if (b == c) throw Error(Errc::DegenerateBC, "b and c must differ");
  if (!q0.contains(lambda) || g.contains(lambda)) violation("lambda must lie in the base subfield outside G");
  const bool eta_in_base = q0.contains_nonzero(eta);
  if (eta_in_base && !p.unguaranteed) violation("eta must lie outside the nonzero base subfield");

  const std::size_t n = p.group_order, k = p.k, h = p.h;
  const bool hook0 = h == 0, hook_top = h + 1 == k;
  if (p.extended && !hook0 && !hook_top)
    throw Error(Errc::UnsupportedExtendedGeneralH, "extended codes are only covered for h = 0 and h = k-1");

  Construction out;
  out.spec = make_rctrs(f, subgroup_eval_points(g, b, c), k, h, 1, b, c, lambda, eta, p.extended);
  out.warnings = spec_warnings(out.spec);
  if (p.unguaranteed) {
    out.warnings.emplace_back("unguaranteed mode: no guarantee flags set");
    return out;
  }

  const bool bc_nonzero = !b.is_zero() && !c.is_zero();
  const bool non_rs_range = 3 <= k && 2 * k <= n;
  const bool ctrs_common =
      !lambda.is_zero() && !eta.is_zero() && !q0.contains(eta) && 4 <= k && 2 * k + 1 <= n;

  out.flags.mds = true;
  if (hook0) {
    out.provenance.emplace_back("subgroup construction, hook 0");
    out.flags.non_rs = bc_nonzero && !lambda.is_zero() && non_rs_range;
    out.flags.ctrs_incompatible = bc_nonzero && ctrs_common;
    if (out.flags.ctrs_incompatible) out.provenance.emplace_back("CTRS inequivalence, hook 0");
  } else if (hook_top) {
    out.provenance.emplace_back("subgroup construction, hook k-1");
    out.flags.non_rs = !lambda.is_zero() && !eta.is_zero() && non_rs_range;
    out.flags.ctrs_incompatible = ctrs_common;
    if (out.flags.ctrs_incompatible) out.provenance.emplace_back("CTRS inequivalence, hook k-1");
  } else {
    out.provenance.emplace_back("subgroup construction, general hook");
    const bool h1_extra = h != 1 || bc_nonzero;
    out.flags.non_rs = !lambda.is_zero() && !eta.is_zero() && non_rs_range && h1_extra;
    out.flags.ctrs_incompatible = ctrs_common && h1_extra;
    if (out.flags.ctrs_incompatible) out.provenance.emplace_back("CTRS inequivalence, general hook");
  }
  if (out.flags.non_rs) out.provenance.emplace_back("Schur square of dimension at least 2k");
  return out;
}

Construction build_subfield_chain_code(const SubfieldChainParams& p) {
  const Field f = p.ambient;
  if (!f.valid()) throw Error(Errc::InvalidArgument, "no ambient field");
  if (p.q0_degree == 0 || p.q1_degree % p.q0_degree != 0 || p.q0_degree == p.q1_degree)
    throw Error(Errc::NotADivisor, "q0 must be a proper subfield of q1");
  const SubfieldView q0 = f.subfield(p.q0_degree);
  const SubfieldView q1 = f.subfield(p.q1_degree);
  const Element b = bind(f, p.b), c = bind(f, p.c), lambda = bind(f, p.lambda), eta = bind(f, p.eta);

  for (const auto& a : p.alphas)
    if (!q0.contains(bind(f, a))) violation("evaluation points must lie in q0");
  if (!q0.contains(b) || !q0.contains(c)) violation("b and c must lie in q0");
  if (!q1.contains_nonzero(lambda) || q0.contains(lambda)) violation("lambda must lie in q1^* outside q0");
  if (q1.contains_nonzero(eta)) violation("eta must lie outside q1^*");

  Construction out;
  out.spec = make_rctrs(f, p.alphas, p.k, 0, 1, b, c, lambda, eta, p.extended);
  out.warnings = spec_warnings(out.spec);
  const std::size_t n = out.spec.n;
  if (n > q0.order) {
    out.warnings.emplace_back("length " + std::to_string(n) + " exceeds q0 = " + std::to_string(q0.order) +
                              "; MDS not guaranteed");
    return out;
  }
  out.flags.mds = true;
  out.provenance.emplace_back("subfield-chain construction");
  out.flags.non_rs = !b.is_zero() && !c.is_zero() && b != c && 3 <= p.k && 2 * p.k <= n;
  if (out.flags.non_rs) out.provenance.emplace_back("Schur square of dimension 2k");
  return out;
}

std::pair<std::size_t, std::size_t> corollary_lengths(std::uint64_t q, std::uint64_t p_div) {
  if (!is_prime(p_div)) throw Error(Errc::NotPrime, std::to_string(p_div) + " is not prime");
  if (q < 2 || (q - 1) % p_div != 0)
    throw Error(Errc::NotADivisor, std::to_string(p_div) + " does not divide " + std::to_string(q) + " - 1");
  const auto n = static_cast<std::size_t>((q - 1) / p_div);
  return {n, n + 1};
}

Construction corollary_witness(std::uint64_t q, std::uint64_t p_div, bool extended) {
  const auto [n, n_ext] = corollary_lengths(q, p_div);
  (void)n_ext;
  const Field f = Field::create(q, 2);
  const SubfieldView base = f.subfield(1);
  const MultiplicativeSubgroup g = subgroup_of_order(base, n);

  SubgroupConstructionParams p;
  p.ambient = f;
  p.base_degree = 1;
  p.group_order = n;
  p.b = f.from_index(1);
  p.c = f.from_index(2);
  for (std::uint64_t i = 1; i < q; ++i)
    if (!g.contains(f.from_index(i))) {
      p.lambda = f.from_index(i);
      break;
    }
  p.eta = f.primitive_element();
  p.h = 0;
  p.k = std::min<std::size_t>(3, std::max<std::size_t>(1, n / 2));
  p.extended = extended;
  return build_subgroup_code(p);
}

}  // namespace rctrs
