#include "rctrs/mds.hpp"

#include <sstream>

namespace rctrs {

std::string_view to_string(MdsMethod m) noexcept {
  switch (m) {
    case MdsMethod::Minors: return "minors";
    case MdsMethod::ClosedFormH0: return "closed_form_h0";
    case MdsMethod::ClosedFormHk1: return "closed_form_hk1";
    case MdsMethod::ClosedFormGeneral: return "closed_form_general";
    case MdsMethod::Both: return "both";
  }
  return "?";
}

std::string_view to_string(DistanceMethod m) noexcept {
  switch (m) {
    case DistanceMethod::Enumeration: return "enumeration";
    case DistanceMethod::SingletonMinors: return "minors";
    case DistanceMethod::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

std::string render(const MdsVerdict& v) {
  std::ostringstream os;
  os << "mds=" << (v.is_mds ? "true" : "false");
  if (v.is_mds) {
    os << " method=" << to_string(v.method);
  } else if (v.witness) {
    os << " witness=[";
    for (std::size_t i = 0; i < v.witness->size(); ++i) os << (i ? "," : "") << (*v.witness)[i];
    os << ']';
  }
  return os.str();
}

Matrix column_submatrix(const Matrix& g, std::span<const std::size_t> cols) {
  Matrix sub(g.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = g.col(static_cast<Eigen::Index>(cols[j]));
  return sub;
}

MdsVerdict mds_by_minors(const Matrix& g) {
  MdsVerdict v;
  v.method = MdsMethod::Minors;
  const auto k = static_cast<std::size_t>(g.rows());
  const auto n = static_cast<std::size_t>(g.cols());
  Matrix sub(g.rows(), g.rows());
  for_each_subset_colex(n, k, [&](std::span<const std::size_t> cols) {
    for (std::size_t j = 0; j < k; ++j) sub.col(static_cast<Eigen::Index>(j)) = g.col(static_cast<Eigen::Index>(cols[j]));
    if (determinant(sub).is_zero()) {
      v.is_mds = false;
      v.witness.emplace(cols.begin(), cols.end());
      return false;
    }
    return true;
  });
  if (k > n) {
    v.is_mds = false;
    v.witness.emplace();
  }
  return v;
}

// --- Closed-form factors ----------------------------------------------------

namespace {

Element product(std::span<const Element> pts) {
  Element r(1);
  for (const auto& a : pts) r *= a;
  return r;
}

Element sum(std::span<const Element> pts) {
  Element r(0);
  for (const auto& a : pts) r += a;
  return r;
}

Element signed_one(std::size_t exponent) { return exponent % 2 ? Element(-1) : Element(1); }

Element roots(const Element& x, std::span<const Element> pts) {
  Element r(1);
  for (const auto& a : pts) r *= x - a;
  return r;
}

}  // namespace

Element phi(const Element& x, std::span<const Element> pts, const Element& eta) {
  return roots(x, pts) * (Element(1) + signed_one(pts.size()) * eta * x * product(pts));
}

Element phi_extended(const Element& x, std::span<const Element> pts, const Element& eta) {
  return roots(x, pts) *
         (Element(1) + signed_one(pts.size()) * eta * x * product(pts) * (x + sum(pts)));
}

Element psi(const Element& x, std::span<const Element> pts, const Element& eta) {
  return roots(x, pts) * (Element(1) + eta * x + eta * sum(pts));
}

Element omega(const Element& x, std::span<const Element> pts) { return roots(x, pts); }

Element phi_general(const Element& x, std::span<const Element> pts, const Element& eta, std::size_t h,
                    std::size_t k) {
  std::vector<Element> with_x(pts.begin(), pts.end());
  with_x.push_back(x);
  return roots(x, pts) * (Element(1) + signed_one(k - 1 - h) * eta * sigma_r(with_x, k - h));
}

// --- Closed-form verdicts ---------------------------------------------------

namespace {

/// Walks the point subsets of one size; `fails(pts)` true means the
/// condition is violated. The witness is the subset's column indices plus
/// `extra` columns.
class ConditionRunner {
 public:
  ConditionRunner(const CodeSpec& spec, MdsMethod method) : spec_(spec) { verdict_.method = method; }

  template <typename Fails>
  void check(std::size_t size, std::vector<std::size_t> extra, const char* name, Fails&& fails) {
    if (!verdict_.is_mds) return;
    const std::size_t npts = spec_.alphas.size();
    std::vector<Element> pts(size);
    for_each_subset_colex(npts, size, [&](std::span<const std::size_t> idx) {
      for (std::size_t i = 0; i < size; ++i) pts[i] = spec_.alphas[idx[i]];
      if (!fails(std::span<const Element>(pts))) return true;
      verdict_.is_mds = false;
      std::vector<std::size_t> w(idx.begin(), idx.end());
      w.insert(w.end(), extra.begin(), extra.end());
      verdict_.witness = std::move(w);
      verdict_.failed_condition = name;
      return false;
    });
  }

  MdsVerdict result() const { return verdict_; }

 private:
  const CodeSpec& spec_;
  MdsVerdict verdict_;
};

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::WrongHookTwist, what);
}

struct Params {
  Element b, c, lambda, eta;
  std::size_t k, twist_col, ext_col;
};

Params params(const CodeSpec& s) {
  const Element z = s.field.zero();
  return {s.b + z, s.c + z, s.lambda + z, s.eta + z, s.k, s.n - 1, s.n};
}

}  // namespace

MdsVerdict mds_closed_form_h0(const CodeSpec& spec) {
  require(spec.family == Family::RCTRS && spec.t == 1 && spec.h == 0,
          "closed form for hook 0 needs an RCTRS spec with h = 0, t = 1");
  validate(spec);
  const auto [b, c, lambda, eta, k, tw, ext] = params(spec);
  const Element one = spec.field.one();
  ConditionRunner run(spec, MdsMethod::ClosedFormH0);

  run.check(k, {}, "signed product over k points equals 1", [&](auto pts) {
    return signed_one(k) * eta * product(pts) == one;
  });
  run.check(k - 1, {tw}, "phi(b) = lambda phi(c)", [&](auto pts) {
    return phi(b, pts, eta) == lambda * phi(c, pts, eta);
  });
  if (spec.extended) {
    run.check(k - 1, {ext}, "signed product times sum over k-1 points equals 1", [&](auto pts) {
      return signed_one(k - 1) * eta * product(pts) * sum(pts) == one;
    });
    if (k >= 2)
      run.check(k - 2, {tw, ext}, "extended phi(b) = lambda extended phi(c)", [&](auto pts) {
        return phi_extended(b, pts, eta) == lambda * phi_extended(c, pts, eta);
      });
  }
  return run.result();
}

MdsVerdict mds_closed_form_hk1(const CodeSpec& spec) {
  require(spec.family == Family::RCTRS && spec.t == 1 && spec.h + 1 == spec.k,
          "closed form for hook k-1 needs an RCTRS spec with h = k-1, t = 1");
  validate(spec);
  const auto [b, c, lambda, eta, k, tw, ext] = params(spec);
  const Element minus_one = -spec.field.one();
  ConditionRunner run(spec, MdsMethod::ClosedFormHk1);

  run.check(k, {}, "eta times sum over k points equals -1", [&](auto pts) {
    return eta * sum(pts) == minus_one;
  });
  run.check(k - 1, {tw}, "psi(b) = lambda psi(c)", [&](auto pts) {
    return psi(b, pts, eta) == lambda * psi(c, pts, eta);
  });
  if (spec.extended && k >= 2)
    run.check(k - 2, {tw, ext}, "omega(b) = lambda omega(c)", [&](auto pts) {
      return omega(b, pts) == lambda * omega(c, pts);
    });
  return run.result();
}

MdsVerdict mds_closed_form_general(const CodeSpec& spec) {
  require(spec.family == Family::RCTRS && spec.t == 1 && !spec.extended,
          "general closed form needs a non-extended RCTRS spec with t = 1");
  validate(spec);
  const auto [b, c, lambda, eta, k, tw, ext] = params(spec);
  const std::size_t h = spec.h;
  const Element one = spec.field.one();
  ConditionRunner run(spec, MdsMethod::ClosedFormGeneral);

  run.check(k, {}, "signed sigma_{k-h} over k points equals 1", [&](auto pts) {
    return signed_one(k - h) * eta * sigma_r(pts, k - h) == one;
  });
  run.check(k - 1, {tw}, "phi_h(b) = lambda phi_h(c)", [&](auto pts) {
    return phi_general(b, pts, eta, h, k) == lambda * phi_general(c, pts, eta, h, k);
  });
  (void)ext;
  return run.result();
}

std::optional<MdsVerdict> mds_closed_form(const CodeSpec& spec) {
  if (spec.family != Family::RCTRS || spec.t != 1) return std::nullopt;
  if (spec.h == 0) return mds_closed_form_h0(spec);
  if (spec.h + 1 == spec.k) return mds_closed_form_hk1(spec);
  if (!spec.extended) return mds_closed_form_general(spec);
  return std::nullopt;
}

MdsReport check_mds(const GeneratorMatrix& g, MdsCheck how) {
  MdsReport r;
  if (how != MdsCheck::Minors) r.closed = mds_closed_form(g.spec);
  if (how != MdsCheck::Closed || !r.closed) r.minors = mds_by_minors(g);

  if (r.closed && r.minors) {
    r.disagreement = r.closed->is_mds != r.minors->is_mds;
    r.verdict = *r.minors;
    if (!r.disagreement) r.verdict.method = MdsMethod::Both;
  } else {
    r.verdict = r.closed ? *r.closed : *r.minors;
  }
  return r;
}

// --- Minimum distance -------------------------------------------------------

DistanceResult min_distance(const Matrix& g, const Field& f, std::uint64_t budget) {
  const std::uint64_t q = f.order();
  const auto k = static_cast<std::size_t>(g.rows());
  const auto n = static_cast<std::size_t>(g.cols());

  std::uint64_t count = 1;
  bool within = true;
  for (std::size_t i = 0; i < k && within; ++i) {
    if (count > budget / q) within = false;
    else count *= q;
  }

  DistanceResult res;
  if (within && count <= budget) {
    // Mixed-radix walk over message indices; the codeword is updated by one
    // row per step.
    std::vector<std::uint64_t> digits(k, 0);
    std::vector<Element> word(n, f.zero());
    std::size_t best = n + 1;
    const Element top = f.from_index(q - 1);
    while (true) {
      std::size_t i = 0;
      for (; i < k; ++i) {
        const std::uint64_t old = digits[i];
        Element delta;
        if (old + 1 < q) {
          delta = f.from_index(old + 1) - f.from_index(old);
          digits[i] = old + 1;
        } else {
          delta = -top;
          digits[i] = 0;
        }
        for (std::size_t j = 0; j < n; ++j) word[j] += delta * g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (digits[i] != 0) break;
      }
      if (i == k) break;
      ++res.enumerated;
      std::size_t weight = 0;
      for (const auto& x : word) weight += x.is_zero() ? 0 : 1;
      if (weight < best) best = weight;
    }
    res.d = best;
    res.method = DistanceMethod::Enumeration;
    return res;
  }
  if (mds_by_minors(g).is_mds) {
    res.d = n - k + 1;
    res.method = DistanceMethod::SingletonMinors;
    return res;
  }
  res.method = DistanceMethod::BudgetExceeded;
  return res;
}

}  // namespace rctrs
