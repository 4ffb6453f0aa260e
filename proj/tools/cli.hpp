#pragma once

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordweight.hpp"

namespace chordweight::cli {

enum class Format { text, json, csv };

struct RunConfig {
  std::string subcommand;
  std::size_t n = 0;
  std::size_t max_n = 4;
  bool unframed = false;
  Format format = Format::text;
  std::string tensor_path;
  std::string lie_path;
  std::string curvature_path;
  std::string form_path;
  std::string diagram;
  std::string N = "3";
  bool naive = false;
  std::uint64_t work_bound = default_work_bound();
};

// A failed identity check; maps to exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ChordDiagram read_diagram(const std::string& code) {
  if (code == "(empty)") return {};
  return ChordDiagram::parse(code);
}

inline std::string show(const ChordDiagram& d) { return d.empty() ? std::string("(empty)") : d.code(); }

inline void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << to_string(m(r, c));
    out << "]\n";
  }
}

inline void print_brackets(std::ostream& out, const StructureConstants& f, const std::string& indent) {
  bool any = false;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = i + 1; j < f.dim(); ++j) {
      std::string terms;
      for (std::size_t k = 0; k < f.dim(); ++k) {
        const Rational& c = f(i, j, k);
        if (c == 0) continue;
        terms += terms.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        const Rational a = abs(c);
        if (a != 1) terms += to_string(a) + "*";
        terms += "x" + std::to_string(k);
      }
      if (terms.empty()) continue;
      out << indent << "[x" << i << ", x" << j << "] = " << terms << '\n';
      any = true;
    }
  if (!any) out << indent << "(all brackets vanish)\n";
}

inline bool report(std::ostream& out, const std::string& name, const CheckResult& r) {
  out << name << ": " << (r ? "pass" : "FAIL");
  if (!r) {
    out << " (" << r.what;
    if (!r.witness.empty()) out << " at " << format_witness(r.witness);
    out << ')';
  }
  out << '\n';
  return r.ok;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline WeightTensor tensor_of_rep_file(const std::string& path) {
  const Representation rep = io::representation_from_json(io::read_file(path));
  if (rep.dim_v == 0) throw InputError(path + ": no representation matrices (\"dimV\", \"matrices\")");
  if (auto r = validate_algebra(rep.algebra); !r) throw CheckFailure("invalid Lie algebra: " + r.what + " at " + format_witness(r.witness));
  if (auto r = validate_representation(rep); !r)
    throw CheckFailure("invalid representation: " + r.what + " at " + format_witness(r.witness));
  return weight_tensor_of_rep(rep);
}

inline CurvatureModel valid_curvature_file(const std::string& path) {
  CurvatureModel m = io::curvature_from_json(io::read_file(path));
  if (auto r = validate_curvature(m); !r) throw CheckFailure("invalid curvature: " + r.what + " at " + format_witness(r.witness));
  return m;
}

}  // namespace detail

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto ds = enumerate_diagrams(cfg.n);
  if (cfg.format == Format::json) {
    io::json arr = io::json::array();
    for (const auto& d : ds) arr.push_back(d.code());
    out << arr.dump() << '\n';
  } else {
    for (const auto& d : ds) out << detail::show(d) << '\n';
  }
  return 0;
}

inline int cmd_dims(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::size_t> framed;
  std::vector<std::size_t> unframed;
  for (std::size_t n = 0; n <= cfg.max_n; ++n) {
    if (cfg.format == Format::csv || !cfg.unframed) framed.push_back(quotient_dimension(n, Framing::framed));
    if (cfg.format == Format::csv || cfg.unframed) unframed.push_back(quotient_dimension(n, Framing::unframed));
  }
  switch (cfg.format) {
    case Format::csv:
      out << "n,framed_dim,unframed_dim\n";
      for (std::size_t n = 0; n <= cfg.max_n; ++n) out << n << ',' << framed[n] << ',' << unframed[n] << '\n';
      break;
    case Format::json:
      out << io::dims_json(cfg.unframed ? unframed : framed, cfg.unframed ? Framing::unframed : Framing::framed) << '\n';
      break;
    case Format::text: {
      const auto& dims = cfg.unframed ? unframed : framed;
      out << "n\t" << (cfg.unframed ? "unframed" : "framed") << '\n';
      for (std::size_t n = 0; n < dims.size(); ++n) out << n << '\t' << dims[n] << '\n';
      break;
    }
  }
  return 0;
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  WeightTensor h;
  if (!cfg.tensor_path.empty())
    h = io::tensor_from_json(io::read_file(cfg.tensor_path));
  else if (!cfg.lie_path.empty())
    h = detail::tensor_of_rep_file(cfg.lie_path);
  else
    h = to_weight_tensor(detail::valid_curvature_file(cfg.curvature_path));
  const ChordDiagram d = detail::read_diagram(cfg.diagram);
  out << to_string(cfg.naive ? evaluate_naive(h, d, cfg.work_bound) : evaluate(h, d)) << '\n';
  return 0;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  if (!cfg.tensor_path.empty()) {
    const WeightTensor h = io::tensor_from_json(io::read_file(cfg.tensor_path));
    ok &= detail::report(out, "leg-swap symmetry", validate_symmetry(h));
    ok &= detail::report(out, "four-term identity", check_4t_tensor(h));
  } else if (!cfg.lie_path.empty()) {
    const Representation rep = io::representation_from_json(io::read_file(cfg.lie_path));
    const bool alg = detail::report(out, "metrized Lie algebra", validate_algebra(rep.algebra));
    ok &= alg;
    if (rep.dim_v > 0) {
      const bool hom = detail::report(out, "representation", validate_representation(rep));
      ok &= hom;
      if (alg && hom) {
        const WeightTensor h = weight_tensor_of_rep(rep);
        ok &= detail::report(out, "rho(C) leg-swap symmetry", validate_symmetry(h));
        ok &= detail::report(out, "rho(C) four-term identity", check_4t_tensor(h));
        ok &= detail::report(out, "structure-tensor identity", check_structure_tensor_identity(rep));
      }
    }
  } else {
    const CurvatureModel m = io::curvature_from_json(io::read_file(cfg.curvature_path));
    const bool valid = detail::report(out, "curvature symmetries", validate_curvature(m));
    ok &= valid;
    const CheckResult parallel = check_parallel_4t(m);
    ok &= detail::report(out, "parallel-curvature identity", parallel);
    const WeightTensor h = to_weight_tensor(m);
    ok &= detail::report(out, "Hhat leg-swap symmetry", validate_symmetry(h));
    const CheckResult tensor4t = check_4t_tensor(h);
    ok &= detail::report(out, "Hhat four-term identity", tensor4t);
    const bool agree = parallel.ok == tensor4t.ok;
    out << "parallel and tensor checks agree: " << detail::yes_no(agree) << '\n';
    ok &= agree;
  }
  out << (ok ? "all checks passed" : "some checks failed") << '\n';
  return ok ? 0 : 1;
}

inline void print_triple_report(std::ostream& out, const CurvatureModel& m, const SymmetricTriple& t) {
  const HolonomyAlgebra& h = t.h;
  out << "dim p = " << m.dim() << '\n';
  out << "dim h = " << h.dim() << '\n';
  out << "h basis:";
  for (std::size_t i = 0; i < h.dim(); ++i)
    out << (i ? ", " : " ") << "x" << i << " = R(e" << h.generators[i].first << ",e" << h.generators[i].second << ")";
  out << '\n';
  out << "h brackets:\n";
  detail::print_brackets(out, h.bracket, "  ");
  out << "B_h:\n";
  detail::print_matrix(out, h.form, "  ");
  const Signature bs = signature(h.form);
  out << "B_h non-degenerate: " << detail::yes_no(h.form_nondegenerate()) << " (signature +" << bs.positive << " -"
      << bs.negative << ")\n";
  const Signature ts = signature(t.form);
  out << "symmetric triple: dim g = " << t.dim() << ", Jacobi: " << (check_jacobi(t.bracket) ? "pass" : "FAIL")
      << ", form signature +" << ts.positive << " -" << ts.negative << '\n';
}

inline int cmd_holonomy(const RunConfig& cfg, std::ostream& out) {
  const CurvatureModel m = detail::valid_curvature_file(cfg.curvature_path);
  if (auto r = check_parallel_4t(m); !r)
    throw CheckFailure("curvature is not parallel: " + r.what + " at " + format_witness(r.witness));
  const SymmetricTriple t = symmetric_triple(m);
  const bool so = isomorphism_to_so(t.h, m.dim()).has_value();
  const CheckResult lie_type = verify_lie_type(m);
  if (cfg.format == Format::json) {
    io::json j = io::triple_to_json(t);
    j["isomorphic_to_so"] = so;
    j["rho_C_h_equals_Hhat"] = lie_type.ok;
    out << j.dump(2) << '\n';
  } else {
    print_triple_report(out, m, t);
    out << "isomorphic to so" << m.dim() << ": " << detail::yes_no(so) << '\n';
    out << "rho(C_h) == Hhat: " << detail::yes_no(lie_type.ok) << '\n';
    if (!lie_type) out << "  first difference: " << lie_type.what << " at " << format_witness(lie_type.witness) << '\n';
  }
  return lie_type ? 0 : 1;
}

inline int cmd_realize(const RunConfig& cfg, std::ostream& out) {
  const Representation rep = io::representation_from_json(io::read_file(cfg.lie_path));
  if (rep.dim_v == 0) throw InputError(cfg.lie_path + ": no representation matrices (\"dimV\", \"matrices\")");
  if (auto r = validate_algebra(rep.algebra); !r) throw CheckFailure("invalid Lie algebra: " + r.what + " at " + format_witness(r.witness));
  if (auto r = validate_representation(rep); !r)
    throw CheckFailure("invalid representation: " + r.what + " at " + format_witness(r.witness));
  const Matrix form = io::form_from_json(io::read_file(cfg.form_path));
  if (form.rows() != rep.dim_v) throw InputError(cfg.form_path + ": form size does not match dimV");
  const RealizabilityVerdict v = rep_curvature_symmetries(rep, form);
  out << "verdict: " << to_string(v.status);
  if (!v.witness.empty()) out << " at " << format_witness(v.witness);
  out << '\n';
  if (v.status != RealizabilityStatus::pass) return 1;
  if (!form.is_symmetric()) {
    out << "form is not symmetric; no symmetric triple is built\n";
    return 0;
  }
  const CurvatureModel m = curvature_model_from_rep(rep, form);
  const SymmetricTriple t = symmetric_triple(m);
  if (cfg.format == Format::json) {
    out << io::triple_to_json(t).dump(2) << '\n';
  } else {
    print_triple_report(out, m, t);
    const bool round_trip = weight_tensor_of_rep(holonomy_representation(t.h)) == weight_tensor_of_rep(rep);
    out << "rho(C_h) == rho(C): " << detail::yes_no(round_trip) << '\n';
    if (!round_trip) return 1;
  }
  return 0;
}

inline int cmd_yamada(const RunConfig& cfg, std::ostream& out) {
  Rational N;
  try {
    N = parse_rational(cfg.N);
  } catch (const InputError& e) {
    throw InputError(std::string("--N: ") + e.what());
  }
  out << to_string(yamada_weight(detail::read_diagram(cfg.diagram), N)) << '\n';
  return 0;
}

inline int cmd_verify(const RunConfig&, std::ostream& out) { return acceptance::run_all(out) ? 0 : 1; }

/// Exit codes: 0 success, 1 failed check, 2 usage, parse or I/O error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Exact weight systems on chord diagrams", "chordweight"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_sources = [&](CLI::App* sub) {
    auto* group = sub->add_option_group("input", "Exactly one input file");
    group->add_option("--tensor", cfg.tensor_path, "Weight tensor JSON")->check(CLI::ExistingFile);
    group->add_option("--lie", cfg.lie_path, "Lie algebra / representation JSON")->check(CLI::ExistingFile);
    group->add_option("--curvature", cfg.curvature_path, "Curvature model JSON")->check(CLI::ExistingFile);
    group->require_option(1);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List canonical diagram codes with n chords");
  enumerate->add_option("--n", cfg.n, "Chord count")->required()->check(CLI::Range(std::size_t{0}, kDefaultMaxChords));
  add_format(enumerate);

  auto* dims = app.add_subcommand("dims", "Dimensions of the chord-diagram spaces");
  dims->add_option("--max-n", cfg.max_n, "Largest chord count")->required()->check(CLI::Range(std::size_t{0}, kDefaultMaxChords));
  dims->add_flag("--unframed", cfg.unframed, "Also impose the one-term relation");
  add_format(dims);

  auto* eval = app.add_subcommand("eval", "Evaluate a weight system on one diagram");
  add_sources(eval);
  eval->add_option("--diagram", cfg.diagram, "Diagram letter code, e.g. ABAB")->required();
  eval->add_flag("--naive", cfg.naive, "Use the full index sum instead of the sweep");
  eval->add_option("--work-bound", cfg.work_bound, "Term limit for --naive");

  auto* check = app.add_subcommand("check", "Run identity checks on an input");
  add_sources(check);

  auto* holonomy = app.add_subcommand("holonomy", "Holonomy algebra and symmetric triple of a curvature model");
  holonomy->add_option("--curvature", cfg.curvature_path, "Curvature model JSON")->required()->check(CLI::ExistingFile);
  add_format(holonomy);

  auto* realize = app.add_subcommand("realize", "Curvature-symmetry test for a representation and form");
  realize->add_option("--lie", cfg.lie_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  realize->add_option("--form", cfg.form_path, "Form on V (JSON matrix)")->required()->check(CLI::ExistingFile);
  add_format(realize);

  auto* yamada = app.add_subcommand("yamada", "Smoothing state sum");
  yamada->add_option("--diagram", cfg.diagram, "Diagram letter code")->required();
  yamada->add_option("--N", cfg.N, "Circle weight (rational)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> table{
      {enumerate, cmd_enumerate}, {dims, cmd_dims},       {eval, cmd_eval},     {check, cmd_check},
      {holonomy, cmd_holonomy},   {realize, cmd_realize}, {yamada, cmd_yamada}, {verify, cmd_verify}};
  try {
    for (const auto& [sub, fn] : table)
      if (sub->parsed()) {
        cfg.subcommand = sub->get_name();
        return fn(cfg, out);
      }
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const TripleError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace chordweight::cli
