#include "rctrs/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "rctrs/codespec_io.hpp"
#include "rctrs/report.hpp"

namespace rctrs {

namespace {

constexpr int kOk = 0;
constexpr int kAnalysisFailure = 1;
constexpr int kUsage = 2;

/// Index, "g" (primitive element) or "g@d" (primitive of the degree-d subfield).
Element parse_element(const Field& f, const std::string& tok) {
  if (tok == "g") return f.primitive_element();
  if (tok.rfind("g@", 0) == 0) {
    unsigned d = 0;
    try {
      d = static_cast<unsigned>(std::stoul(tok.substr(2)));
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "bad element token '" + tok + "'");
    }
    return f.subfield(d).primitive;
  }
  std::uint64_t idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoull(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, "bad element token '" + tok + "'");
  }
  return f.from_index(idx);
}

std::vector<Element> parse_elements(const Field& f, const std::string& list) {
  std::vector<Element> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_element(f, tok));
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RCTRS_DISTANCE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "RCTRS_DISTANCE_BUDGET is not an integer");
    }
  }
  return kDefaultDistanceBudget;
}

void emit_construction(const Construction& c, const std::string& path, std::ostream& out) {
  std::ostringstream body;
  body << "# guarantee mds=" << c.flags.mds << " non_rs=" << c.flags.non_rs
       << " ctrs_incompatible=" << c.flags.ctrs_incompatible << '\n';
  for (const auto& p : c.provenance) body << "# provenance " << p << '\n';
  for (const auto& w : c.warnings) body << "# warning " << w << '\n';
  codespec_write(body, c.spec);
  if (path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(path);
    if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    f << body.str();
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Row-column twisted Reed-Solomon code toolkit", "rctrs"};
  app.require_subcommand(1);

  std::function<int()> action;

  // field-info
  std::string field_desc;
  auto* info = app.add_subcommand("field-info", "Modulus, primitive element and subfields");
  info->add_option("--field", field_desc, "p, p^m or p^m/c_m,...,c_0")->required();
  info->callback([&] {
    action = [&] {
      const Field f = Field::parse(field_desc);
      out << "field=" << f.descriptor() << '\n'
          << "order=" << f.order() << '\n'
          << "primitive=" << f.primitive_element().index() << '\n';
      for (unsigned d = 1; d <= f.degree(); ++d)
        if (f.degree() % d == 0) {
          const SubfieldView v = f.subfield(d);
          out << "subfield degree=" << d << " order=" << v.order << " primitive=" << v.primitive.index() << '\n';
        }
      return kOk;
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a code from a construction");
  construct->require_subcommand(1);
  std::string c_field, c_out, c_alphas, c_b = "0", c_c = "0", c_lambda, c_eta = "0";
  std::size_t c_k = 0, c_h = 0, c_order = 0;
  unsigned c_q0 = 1, c_q1 = 2, c_base = 1;
  bool c_ext = false, c_unguaranteed = false;

  auto* chain = construct->add_subcommand("subfield-chain", "Points in q0, lambda in q1 \\ q0, eta outside q1^*");
  chain->add_option("--field", c_field)->required();
  chain->add_option("--q0", c_q0, "degree of the smallest subfield");
  chain->add_option("--q1", c_q1, "degree of the middle subfield");
  chain->add_option("--alphas", c_alphas, "comma-separated element tokens")->required();
  chain->add_option("--b", c_b);
  chain->add_option("--c", c_c);
  chain->add_option("--lambda", c_lambda)->required();
  chain->add_option("--eta", c_eta);
  chain->add_option("--k", c_k)->required();
  chain->add_flag("--extended", c_ext);
  chain->add_option("-o,--output", c_out);
  chain->callback([&] {
    action = [&] {
      SubfieldChainParams p;
      p.ambient = Field::parse(c_field);
      p.q0_degree = c_q0;
      p.q1_degree = c_q1;
      p.alphas = parse_elements(p.ambient, c_alphas);
      p.b = parse_element(p.ambient, c_b);
      p.c = parse_element(p.ambient, c_c);
      p.lambda = parse_element(p.ambient, c_lambda);
      p.eta = parse_element(p.ambient, c_eta);
      p.k = c_k;
      p.extended = c_ext;
      emit_construction(build_subfield_chain_code(p), c_out, out);
      return kOk;
    };
  });

  auto* sub = construct->add_subcommand("subgroup", "Points from a multiplicative subgroup of a subfield");
  sub->add_option("--field", c_field)->required();
  sub->add_option("--base-degree", c_base, "degree of F_q0");
  sub->add_option("--order", c_order, "subgroup order n")->required();
  sub->add_option("--b", c_b)->required();
  sub->add_option("--c", c_c)->required();
  sub->add_option("--lambda", c_lambda)->required();
  sub->add_option("--eta", c_eta);
  sub->add_option("--hook", c_h, "hook h");
  sub->add_option("--k", c_k)->required();
  sub->add_flag("--extended", c_ext);
  sub->add_flag("--unguaranteed", c_unguaranteed, "allow eta in F_q0^*; clears all guarantees");
  sub->add_option("-o,--output", c_out);
  sub->callback([&] {
    action = [&] {
      SubgroupConstructionParams p;
      p.ambient = Field::parse(c_field);
      p.base_degree = c_base;
      p.group_order = c_order;
      p.b = parse_element(p.ambient, c_b);
      p.c = parse_element(p.ambient, c_c);
      p.lambda = parse_element(p.ambient, c_lambda);
      p.eta = parse_element(p.ambient, c_eta);
      p.h = c_h;
      p.k = c_k;
      p.extended = c_ext;
      p.unguaranteed = c_unguaranteed;
      emit_construction(build_subgroup_code(p), c_out, out);
      return kOk;
    };
  });

  // spec-based analyses
  std::string spec_path, method = "both", target = "rs", example = "all", out_path;
  std::uint64_t budget = 0;
  bool verbose = false;

  auto* check = app.add_subcommand("check-mds", "MDS verdict of a codespec");
  check->add_option("spec", spec_path)->required();
  check->add_option("--method", method)->check(CLI::IsMember({"minors", "closed", "both"}));
  check->add_flag("-v,--verbose", verbose);
  check->callback([&] {
    action = [&] {
      const GeneratorMatrix g = generator_matrix(codespec_read_file(spec_path));
      const MdsCheck how = method == "minors" ? MdsCheck::Minors : method == "closed" ? MdsCheck::Closed : MdsCheck::Both;
      const MdsReport r = check_mds(g, how);
      out << render(r.verdict) << '\n';
      if (r.disagreement) out << "disagreement=closed_form_vs_minors\n";
      if (verbose) {
        if (r.closed) out << "closed_form=" << render(*r.closed) << '\n';
        if (r.minors) out << "minors=" << render(*r.minors) << '\n';
      }
      return r.verdict.is_mds && !r.disagreement ? kOk : kAnalysisFailure;
    };
  });

  auto* schur = app.add_subcommand("schur-dim", "Schur-square dimension and distinguishers");
  schur->add_option("spec", spec_path)->required();
  schur->callback([&] {
    action = [&] {
      const GeneratorMatrix g = generator_matrix(codespec_read_file(spec_path));
      out << render(schur_report(g.matrix, mds_by_minors(g))) << '\n';
      return kOk;
    };
  });

  auto* dist = app.add_subcommand("distance", "Minimum distance");
  dist->add_option("spec", spec_path)->required();
  dist->add_option("--budget", budget, "max codewords to enumerate (env RCTRS_DISTANCE_BUDGET)");
  dist->callback([&] {
    action = [&] {
      const GeneratorMatrix g = generator_matrix(codespec_read_file(spec_path));
      const DistanceResult d = min_distance(g, budget ? budget : default_budget());
      out << "d=" << (d.d ? std::to_string(*d.d) : std::string("unknown")) << " method=" << to_string(d.method)
          << '\n';
      return kOk;
    };
  });

  auto* dis = app.add_subcommand("distinguish", "Schur-square distinguisher against RS or CTRS");
  dis->add_option("spec", spec_path)->required();
  dis->add_option("--target", target)->check(CLI::IsMember({"rs", "ctrs"}));
  dis->callback([&] {
    action = [&] {
      const GeneratorMatrix g = generator_matrix(codespec_read_file(spec_path));
      const MdsVerdict v = mds_by_minors(g);
      const Tristate t = target == "rs" ? is_non_rs(g.matrix, v) : ctrs_distinguisher(g.matrix, v);
      out << "target=" << target << " inequivalent=" << to_string(t) << " schur_dim=" << schur_square_dim(g)
          << '\n';
      return kOk;
    };
  });

  auto* repro = app.add_subcommand("reproduce", "Golden worked examples");
  repro->add_option("--example", example)->check(CLI::IsMember({"7_4", "23_2", "17", "29_2", "all"}));
  repro->add_flag("-v,--verbose", verbose);
  repro->callback([&] {
    action = [&] { return reproduce(example, out, verbose, default_budget()) ? kOk : kAnalysisFailure; };
  });

  auto* exp = app.add_subcommand("export", "Write the generator matrix of a codespec");
  exp->add_option("spec", spec_path)->required();
  exp->add_option("-o,--output", out_path);
  exp->callback([&] {
    action = [&] {
      const GeneratorMatrix g = generator_matrix(codespec_read_file(spec_path));
      if (out_path.empty()) {
        write_matrix(out, g.matrix, g.spec.field);
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + out_path + "'");
        write_matrix(f, g.matrix, g.spec.field);
      }
      return kOk;
    };
  });

  std::string field_override;
  auto* imp = app.add_subcommand("import", "Analyze a generator matrix file");
  imp->add_option("matrix", spec_path)->required();
  imp->add_option("--field", field_override, "field descriptor when the default modulus does not apply");
  imp->add_option("--budget", budget);
  imp->callback([&] {
    action = [&] {
      std::ifstream in(spec_path);
      if (!in) throw Error(Errc::ParseError, "cannot open '" + spec_path + "'");
      Field f;
      Matrix m;
      if (field_override.empty()) {
        std::tie(f, m) = read_matrix(in);
      } else {
        f = Field::parse(field_override);
        m = read_matrix(in, f);
      }
      AnalysisOptions opts;
      opts.budget = budget ? budget : default_budget();
      const AnalysisReport r = analyze(m, f, opts);
      render(out, r);
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace rctrs
