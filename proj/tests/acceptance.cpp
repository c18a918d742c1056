// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rctrs/report.hpp"

using namespace rctrs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.ok) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

void check_golden(Checker& c, const std::string& name) {
  for (const auto& e : golden_cases(name)) {
    const GoldenResult r = run_golden(e);
    for (const auto& f : r.failures) c.require(false, e.label + ": " + f);
  }
}

Outcome criterion1() {
  Checker c;
  check_golden(c, "7_4");
  const auto cases = golden_cases("7_4");
  const GoldenResult plain = run_golden(cases[0]);
  c.require(plain.report.mds.closed && plain.report.mds.closed->method == MdsMethod::ClosedFormH0,
            "closed form for hook 0 not used");
  c.require(plain.report.schur.dim == 6, "schur dim != 6");
  c.note("[7,3,5] and [8,3,6], schur_dim=6");
  return c.result();
}

Outcome criterion2() {
  Checker c;
  check_golden(c, "23_2");
  for (const auto& e : golden_cases("23_2")) {
    const GeneratorMatrix g = generator_matrix(e.spec);
    c.require(is_non_rs(g.matrix, mds_by_minors(g)) == Tristate::True, e.label + ": is_non_rs != true");
  }
  c.note("[11,4,8] and [12,4,9], non_rs=true");
  return c.result();
}

Outcome criterion3() {
  Checker c;
  check_golden(c, "17");
  const auto e = golden_cases("17").front();
  const DistanceResult d = min_distance(generator_matrix(e.spec));
  c.require(d.method == DistanceMethod::Enumeration, "distance not by enumeration");
  c.require(d.enumerated == 83520, "enumerated " + std::to_string(d.enumerated) + " codewords, expected 83520");
  c.require(d.d && *d.d == 5, "d != 5");
  c.require(schur_square_dim(generator_matrix(e.spec)) == 8, "schur dim != 8");
  c.note("[8,4,5] over 83520 codewords, schur_dim=8");
  return c.result();
}

Outcome criterion4() {
  Checker c;
  check_golden(c, "29_2");
  for (const auto& e : golden_cases("29_2")) {
    const GeneratorMatrix g = generator_matrix(e.spec);
    c.require(schur_square_dim(g) == 9, e.label + ": schur dim != 9");
    c.require(ctrs_distinguisher(g.matrix, mds_by_minors(g)) == Tristate::True,
              e.label + ": ctrs_distinguisher != true");
  }
  c.note("[14,4,11] and [15,4,12], schur_dim=9, ctrs_distinguisher=true");
  return c.result();
}

Outcome criterion5() {
  Checker c;
  std::mt19937_64 rng(5);
  std::size_t trials = 0, mds = 0, non_mds = 0, mismatches = 0, general_checks = 0, extended = 0;
  for (std::uint64_t q : {13, 9}) {
    const Field f = q == 13 ? Field::create(13, 1) : Field::create(3, 2);
    for (std::size_t h = 0; h <= 4; ++h) {
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = oracle::uniform(h + 1, 5, rng);
        const std::size_t n = oracle::uniform(k, std::min<std::size_t>(10, q + 1), rng);
        const bool ext = (h == 0 || h + 1 == k) && oracle::uniform(0, 1, rng) == 1;
        const CodeSpec s = make_rctrs(f, oracle::random_distinct(f, n - 1, rng), k, h, 1,
                                      oracle::random_element(f, rng), oracle::random_element(f, rng),
                                      oracle::random_element(f, rng), oracle::random_element(f, rng), ext);
        const GeneratorMatrix g = generator_matrix(s);
        const MdsVerdict minors = mds_by_minors(g);
        const auto closed = mds_closed_form(s);
        ++trials;
        extended += ext;
        (minors.is_mds ? mds : non_mds)++;
        if (!closed || closed->is_mds != minors.is_mds) {
          ++mismatches;
          continue;
        }
        if (!closed->is_mds) {
          const Matrix sub = column_submatrix(g.matrix, *closed->witness);
          if (!determinant(sub).is_zero()) ++mismatches;
        }
        if (!ext && (h == 0 || h + 1 == k)) {
          ++general_checks;
          if (mds_closed_form_general(s).is_mds != minors.is_mds) ++mismatches;
        }
      }
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.require(mds > 0 && non_mds > 0, "trials did not cover both verdicts");
  std::ostringstream os;
  os << trials << " specs (" << extended << " extended, " << mds << " MDS, " << non_mds << " not), "
     << general_checks << " general-vs-specialized checks, 0 mismatches";
  c.note(os.str());
  return c.result();
}

Outcome criterion6() {
  Checker c;
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = trial % 2 ? Field::create(13, 1) : Field::create(7, 2);
    const std::size_t n = oracle::uniform(2, 12, rng);
    const std::size_t k = oracle::uniform(1, n / 2, rng);
    const auto alphas = oracle::random_distinct(f, n, rng);
    std::vector<Element> v, vv;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(oracle::random_nonzero(f, rng));
      vv.push_back(v.back() * v.back());
    }
    const GeneratorMatrix g = generator_matrix(make_grs(f, alphas, k, v));
    const GeneratorMatrix sq = generator_matrix(make_grs(f, alphas, 2 * k - 1, vv));
    const Matrix s = schur_square(g.matrix);
    c.require(rank(s) == static_cast<Eigen::Index>(2 * k - 1), "schur dim != 2k-1");
    c.require(same_row_space(s, sq.matrix), "row spaces differ");
  }
  c.note("100 GRS codes over GF(13), GF(49)");
  return c.result();
}

Outcome criterion7() {
  Checker c;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = trial % 3 == 0 ? Field::create(13, 1) : trial % 3 == 1 ? Field::create(7, 2) : Field::create(2, 3);
    const std::size_t n = oracle::uniform(2, std::min<std::size_t>(7, f.order()), rng);
    const std::size_t h = oracle::uniform(1, n - 1, rng);
    const auto alphas = oracle::random_distinct(f, n, rng);
    const Matrix m = deleted_row_vandermonde_matrix(alphas, h);
    const Element closed = deleted_row_vandermonde_det(alphas, h);
    c.require(closed == determinant(m), "closed form != elimination determinant");
    c.require(closed == oracle::leibniz_det(m), "closed form != Leibniz determinant");
  }
  c.note("200 instances");
  return c.result();
}

Outcome criterion8() {
  Checker c;
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = trial % 2 ? Field::create(13, 1) : Field::create(5, 2);
    const std::size_t n = oracle::uniform(3, 10, rng);
    const std::size_t k = oracle::uniform(1, n - 1, rng);
    const std::size_t h = oracle::uniform(0, k - 1, rng);
    const std::size_t t = oracle::uniform(1, 2, rng);
    const bool ext = trial % 3 == 0;
    const auto pts = oracle::random_distinct(f, n, rng);
    std::vector<Element> alphas(pts.begin(), pts.end() - 1), with_b(pts);
    const Element b = pts.back(), cc = oracle::random_element(f, rng);
    const Element lambda = oracle::random_nonzero(f, rng), eta = oracle::random_nonzero(f, rng);
    const Element zero = f.zero();

    const auto rctrs = [&](Element l, Element e) {
      return generator_matrix(make_rctrs(f, alphas, k, h, t, b, cc, l, e, ext)).matrix;
    };
    c.require(rctrs(zero, zero) == generator_matrix(make_grs(f, with_b, k, {}, ext)).matrix,
              "lambda=eta=0 differs from RS");
    c.require(rctrs(lambda, zero) == generator_matrix(make_ctrs(f, alphas, k, b, cc, lambda, ext)).matrix,
              "eta=0 differs from CTRS");
    c.require(rctrs(zero, eta) == generator_matrix(make_trs(f, with_b, k, h, t, eta, ext)).matrix,
              "lambda=0 differs from TRS");
  }
  c.note("50 specs, plain and extended");
  return c.result();
}

Outcome criterion9() {
  Checker c;
  std::size_t built = 0;
  for (std::uint64_t q : {17, 23, 29}) {
    for (std::uint64_t p : prime_factors(q - 1)) {
      const auto [n1, n2] = corollary_lengths(q, p);
      for (bool ext : {false, true}) {
        const Construction w = corollary_witness(q, p, ext);
        const GeneratorMatrix g = generator_matrix(w.spec);
        const std::size_t want = ext ? n2 : n1;
        const std::string tag = "q=" + std::to_string(q) + " p=" + std::to_string(p) + (ext ? " ext" : "");
        c.require(static_cast<std::size_t>(g.length()) == want, tag + ": wrong length");
        c.require(w.flags.mds, tag + ": MDS flag unset");
        c.require(mds_by_minors(g).is_mds, tag + ": not MDS by minors");
        ++built;
      }
    }
  }
  c.note(std::to_string(built) + " codes over GF(17^2), GF(23^2), GF(29^2)");
  return c.result();
}

Outcome criterion10() {
  Checker c;
  std::mt19937_64 rng(10);
  std::size_t applied = 0;
  for (const auto& name : golden_names()) {
    for (const auto& e : golden_cases(name)) {
      const GeneratorMatrix g = generator_matrix(e.spec);
      const Field f = e.spec.field;
      const Eigen::Index dim = schur_square_dim(g);
      const bool is_mds = mds_by_minors(g).is_mds;
      for (int trial = 0; trial < 100; ++trial) {
        Isometry iso = Isometry::identity(f, static_cast<std::size_t>(g.length()));
        std::shuffle(iso.perm.begin(), iso.perm.end(), rng);
        for (auto& s : iso.scale) s = oracle::random_nonzero(f, rng);
        const Matrix m = apply_isometry(g.matrix, iso);
        c.require(schur_square_dim(m) == dim, e.label + ": schur dim changed");
        c.require(mds_by_minors(m).is_mds == is_mds, e.label + ": MDS verdict changed");
        ++applied;
      }
    }
  }
  c.note(std::to_string(applied) + " isometries over 7 golden matrices");
  return c.result();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, 5, criterion1},  {2, 5, criterion2},  {3, 10, criterion3}, {4, 10, criterion4},
      {5, 60, criterion5}, {6, 10, criterion6}, {7, 5, criterion7},  {8, 5, criterion8},
      {9, 60, criterion9}, {10, 10, criterion10},
  };
  int failed = 0;
  for (const auto& cr : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= cr.limit_s) o = {false, "took longer than " + std::to_string(cr.limit_s) + " s"};
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << secs << " s, limit " << cr.limit_s
         << " s): " << o.detail;
    std::cout << line.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
