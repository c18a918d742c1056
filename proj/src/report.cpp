#include "rctrs/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rctrs {

AnalysisReport analyze(const GeneratorMatrix& g, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.spec = g.spec;
  r.length = g.length();
  r.k = g.k();
  r.mds = check_mds(g, opts.mds);
  if (opts.distance) r.distance = min_distance(g, opts.budget);
  r.schur = schur_report(g.matrix, r.mds.verdict);
  r.warnings = spec_warnings(g.spec);
  return r;
}

AnalysisReport analyze(const Matrix& g, const Field& f, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.spec.field = f;
  r.length = g.cols();
  r.k = g.rows();
  r.mds.minors = mds_by_minors(g);
  r.mds.verdict = *r.mds.minors;
  if (opts.distance) r.distance = min_distance(g, f, opts.budget);
  r.schur = schur_report(g, r.mds.verdict);
  return r;
}

AnalysisReport analyze(const Construction& c, const AnalysisOptions& opts) {
  AnalysisReport r = analyze(generator_matrix(c.spec), opts);
  r.provenance = c.provenance;
  for (const auto& w : c.warnings)
    if (std::find(r.warnings.begin(), r.warnings.end(), w) == r.warnings.end()) r.warnings.push_back(w);
  return r;
}

std::string parameters(const AnalysisReport& r) {
  std::ostringstream os;
  os << '[' << r.length << ',' << r.k;
  if (r.distance.d) os << ',' << *r.distance.d;
  os << ']';
  return os.str();
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

void render(std::ostream& os, const AnalysisReport& r, const GeneratorMatrix* g, bool verbose) {
  if (r.spec.field.valid()) os << "field=" << r.spec.field.descriptor() << '\n';
  if (g) {
    const CodeSpec& s = g->spec;
    os << "code=" << to_string(s.family) << " h=" << s.h << " t=" << s.t << " extended=" << (s.extended ? 1 : 0)
       << '\n';
  }
  os << "params=" << parameters(r) << " d_method=" << to_string(r.distance.method) << '\n';
  os << render(r.mds.verdict) << '\n';
  if (r.mds.disagreement) os << "disagreement=closed_form_vs_minors\n";
  os << render(r.schur) << '\n';
  for (const auto& p : r.provenance) os << "provenance=" << p << '\n';
  for (const auto& w : r.warnings) os << "warning=" << w << '\n';
  if (!verbose) return;
  if (r.mds.closed) {
    os << "closed_form=" << render(*r.mds.closed);
    if (!r.mds.closed->failed_condition.empty()) os << " condition=\"" << r.mds.closed->failed_condition << '"';
    os << '\n';
  }
  if (r.mds.minors) os << "minors=" << render(*r.mds.minors) << '\n';
  if (r.mds.verdict.witness) os << "witness=" << join(*r.mds.verdict.witness) << '\n';
  if (g) {
    os << "matrix:\n";
    write_matrix(os, g->matrix, g->spec.field);
  }
}

// --- Golden examples ---------------------------------------------------------

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names{"7_4", "23_2", "17", "29_2"};
  return names;
}

namespace {

CodeSpec with_extension(CodeSpec s) {
  s.extended = true;
  return s;
}

GoldenExpectation expect(std::string label, CodeSpec spec, std::size_t n, std::size_t k, std::size_t d,
                         DistanceMethod m = DistanceMethod::SingletonMinors) {
  GoldenExpectation e;
  e.label = std::move(label);
  e.spec = std::move(spec);
  e.length = n;
  e.k = k;
  e.d = d;
  e.d_method = m;
  return e;
}

}  // namespace

std::vector<GoldenExpectation> golden_cases(const std::string& name) {
  std::vector<GoldenExpectation> out;
  if (name == "7_4") {
    const Field f = Field::create(7, 4);
    SubfieldChainParams p;
    p.ambient = f;
    p.q0_degree = 1;
    p.q1_degree = 2;
    for (std::uint64_t i = 0; i < 6; ++i) p.alphas.push_back(f.from_index(i));
    p.b = f.from_index(6);
    p.c = f.from_index(5);
    p.lambda = f.subfield(2).primitive;
    p.eta = f.primitive_element();
    p.k = 3;
    const CodeSpec s = build_subfield_chain_code(p).spec;
    auto a = expect("7_4", s, 7, 3, 5);
    a.schur_dim = 6;
    a.non_rs = Tristate::True;
    auto b = expect("7_4 extended", with_extension(s), 8, 3, 6);
    b.non_rs = Tristate::True;
    out = {a, b};
  } else if (name == "23_2") {
    const Field f = Field::create(23, 2);
    SubgroupConstructionParams p;
    p.ambient = f;
    p.group_order = 11;
    p.b = f.from_index(12);
    p.c = f.from_index(7);
    p.lambda = f.from_index(5);
    p.eta = f.primitive_element();
    p.k = 4;
    const CodeSpec s = build_subgroup_code(p).spec;
    auto a = expect("23_2", s, 11, 4, 8);
    a.non_rs = Tristate::True;
    a.point_set = {2, 3, 4, 6, 13, 15, 16, 17, 20, 22};
    auto b = expect("23_2 extended", with_extension(s), 12, 4, 9);
    b.non_rs = Tristate::True;
    out = {a, b};
  } else if (name == "17") {
    const Field f = Field::create(17, 1);
    SubgroupConstructionParams p;
    p.ambient = f;
    p.group_order = 8;
    p.b = f.from_index(1);
    p.c = f.from_index(2);
    p.lambda = f.from_index(10);
    p.eta = f.from_index(4);
    p.k = 4;
    p.unguaranteed = true;
    auto a = expect("17", build_subgroup_code(p).spec, 8, 4, 5, DistanceMethod::Enumeration);
    a.schur_dim = 8;
    a.non_rs = Tristate::True;
    a.point_set = {0, 3, 7, 8, 10, 12, 13};
    out = {a};
  } else if (name == "29_2") {
    const Field f = Field::create(29, 2);
    SubgroupConstructionParams p;
    p.ambient = f;
    p.group_order = 14;
    p.b = f.from_index(12);
    p.c = f.from_index(7);
    p.lambda = f.from_index(15);
    p.eta = f.primitive_element();
    p.h = 3;
    p.k = 4;
    const CodeSpec s = build_subgroup_code(p).spec;
    auto a = expect("29_2", s, 14, 4, 11);
    a.schur_dim = 9;
    a.ctrs_incompatible = Tristate::True;
    a.point_set = {22, 15, 13, 4, 6, 16, 3, 11, 8, 10, 24, 9, 26};
    auto b = expect("29_2 extended", with_extension(s), 15, 4, 12);
    b.schur_dim = 9;
    b.ctrs_incompatible = Tristate::True;
    out = {a, b};
  } else {
    throw Error(Errc::InvalidArgument, "unknown example '" + name + "'");
  }
  return out;
}

GoldenResult run_golden(const GoldenExpectation& e, std::uint64_t budget) {
  GoldenResult res;
  res.expected = e;
  AnalysisOptions opts;
  opts.budget = budget;
  const GeneratorMatrix g = generator_matrix(e.spec);
  res.report = analyze(g, opts);
  const AnalysisReport& r = res.report;
  auto fail = [&](const std::string& what) { res.failures.push_back(what); };

  if (!e.point_set.empty()) {
    std::set<std::uint64_t> got, want(e.point_set.begin(), e.point_set.end());
    for (const auto& a : e.spec.alphas) got.insert(a.index());
    if (got != want) fail("evaluation points differ");
  }
  if (static_cast<std::size_t>(r.length) != e.length || static_cast<std::size_t>(r.k) != e.k)
    fail("length/dimension differ");
  if (!r.mds.verdict.is_mds) fail("not MDS");
  if (r.mds.disagreement) fail("closed form and minors disagree");
  if (!r.mds.closed || !r.mds.minors) fail("both MDS methods were not run");
  if (!r.distance.d || *r.distance.d != e.d) fail("minimum distance differs");
  if (r.distance.method != e.d_method) fail("distance method differs");
  if (e.schur_dim && r.schur.dim != *e.schur_dim) fail("schur dimension differs");
  if (e.non_rs && r.schur.non_rs != *e.non_rs) fail("non_rs verdict differs");
  if (e.ctrs_incompatible && r.schur.ctrs_incompatible != *e.ctrs_incompatible)
    fail("ctrs_incompatible verdict differs");
  return res;
}

bool reproduce(const std::string& name, std::ostream& os, bool verbose, std::uint64_t budget) {
  std::vector<std::string> names;
  if (name == "all") names = golden_names();
  else names = {name};
  bool ok = true;
  for (const auto& n : names) {
    for (const auto& e : golden_cases(n)) {
      const GoldenResult res = run_golden(e, budget);
      os << "example=" << e.label << '\n';
      if (verbose) {
        const GeneratorMatrix g = generator_matrix(e.spec);
        render(os, res.report, &g, true);
      } else {
        render(os, res.report);
      }
      if (res.ok()) {
        os << "check=ok\n";
      } else {
        ok = false;
        for (const auto& f : res.failures) os << "check=FAIL " << f << '\n';
      }
      os << '\n';
    }
  }
  return ok;
}

}  // namespace rctrs
