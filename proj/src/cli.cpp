#include "bess/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "bess/errors.hpp"
#include "bess/expression.hpp"
#include "bess/pencil_io.hpp"
#include "bess/quotring.hpp"
#include "bess/realizer.hpp"
#include "bess/verify.hpp"

namespace bess {

namespace {

// Raised for bad input that is not a library error (files, option combinations).
class InputError : public Error {
 public:
  using Error::Error;
};

// The answer is mathematically negative: not realizable, not a realizer.
class NegativeResult : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

struct ExprSource {
  std::string expr;
  std::string in;

  void attach(CLI::App* cmd) {
    auto* e = cmd->add_option("--expr", expr, "Rational matrix expression");
    auto* i = cmd->add_option("--in", in, "File holding the expression");
    e->excludes(i);
  }

  std::string text() const {
    if (!expr.empty()) return expr;
    if (!in.empty()) return read_file(in);
    throw InputError("one of --expr or --in is required");
  }
};

RationalMatrix parse_target(const ExprSource& src, const Field& field, std::size_t nvars) {
  return parse_rational_matrix(src.text(), field, nvars);
}

// Entries must be polynomials in ctx->n_vars() variables.
QuotMatrix parse_quot_matrix(const std::string& text, const QuotContextPtr& ctx) {
  const std::size_t n = ctx->n_vars();
  if (max_variable_index(text) > n) {
    throw InputError("expression uses variables beyond the " + std::to_string(n) +
                     " given by --ell");
  }
  const RationalMatrix m = parse_rational_matrix(text, ctx->field(), n);
  PolyMatrix p = poly_zero(ctx->field(), n, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RationalFunction& e = m(i, j);
      if (!e.is_polynomial()) throw InputError("quotient ring entries must be polynomials");
      p(i, j) = e.num() * e.den().constant_value().inverse();
    }
  }
  return QuotMatrix(ctx, p);
}

std::vector<FieldElement> parse_ell(const std::string& csv, const Field& field) {
  std::vector<FieldElement> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    out.push_back(FieldElement::parse(field, item));
  }
  if (out.empty()) throw InputError("--ell must list one value per variable");
  return out;
}

std::string char2_failure(std::size_t index, const Char2Certificate& cert) {
  return "verdict: not realizable\ndiagonal entry " + std::to_string(index + 1) + ":\n" +
         cert.to_string();
}

int emit_pencil(const LinearPencil& p, const std::string& out_path, std::ostream& out) {
  const std::string text = serialize_pencil(p);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "wrote " << out_path << " (m = " << p.size() << ", split = " << p.split() << ")\n";
  }
  return exit_code::ok;
}

int cmd_realize(const std::string& field_text, const std::string& kind_text, const ExprSource& src,
                const std::string& out_path, std::size_t nvars, std::ostream& out) {
  const Field field = Field::parse(field_text);
  const RationalMatrix f = parse_target(src, field, nvars);
  try {
    switch (parse_realization_kind(kind_text)) {
      case RealizationKind::BR:
        return emit_pencil(realize_br(f).pencil, out_path, out);
      case RealizationKind::hBR:
        return emit_pencil(realize_hbr(f).pencil, out_path, out);
      case RealizationKind::SBR:
        return emit_pencil(realize_sbr(f).pencil, out_path, out);
      case RealizationKind::hSBR: {
        auto result = decide_and_realize_hsbr(f);
        if (auto* obstruction = std::get_if<DiagonalObstruction>(&result)) {
          out << char2_failure(obstruction->index, obstruction->certificate);
          return exit_code::negative;
        }
        return emit_pencil(std::get<RealizationResult>(result).pencil, out_path, out);
      }
    }
  } catch (const NotRealizableChar2& e) {
    out << char2_failure(e.index(), e.certificate());
    return exit_code::negative;
  } catch (const NotSymmetric& e) {
    throw NegativeResult(e.what());
  } catch (const NotHomogeneousDegreeOne& e) {
    throw NegativeResult(e.what());
  } catch (const TooFewVariables& e) {
    throw NegativeResult(e.what());
  }
  throw InputError("unknown kind '" + kind_text + "'");
}

int cmd_verify(const std::string& pencil_path, const ExprSource& src, const std::string& kind_text,
               std::ostream& out) {
  const LinearPencil p = parse_pencil(read_file(pencil_path));
  const RealizationKind kind = parse_realization_kind(kind_text);
  const std::string text = src.text();
  if (max_variable_index(text) > p.n_vars()) {
    throw InputError("expression uses more variables than the pencil");
  }
  const RationalMatrix f = parse_rational_matrix(text, p.field(), p.n_vars());
  VerificationReport report;
  try {
    report = check_realization(p, f, kind);
  } catch (const SingularBlock& e) {
    throw NegativeResult(e.what());
  }
  out << report_to_json(report).dump(2) << "\n";
  return report.passed() ? exit_code::ok : exit_code::negative;
}

int cmd_decide(const std::string& field_text, const std::string& kind_text, const ExprSource& src,
               std::size_t nvars, std::ostream& out) {
  const Field field = Field::parse(field_text);
  const RationalMatrix f = parse_target(src, field, nvars);
  const RealizationKind kind = parse_realization_kind(kind_text);
  RealizabilityVerdict v;
  if (kind == RealizationKind::SBR) {
    v = decide_sbr(f);
  } else if (kind == RealizationKind::hSBR) {
    v = decide_hsbr(f);
  } else {
    throw InputError("decide supports --kind sbr or hsbr");
  }
  out << v.to_string();
  return v.realizable ? exit_code::ok : exit_code::negative;
}

int cmd_reduce(const std::string& field_text, const std::string& ell_text,
               const std::string& matrix_path, const std::string& r_text, bool trace,
               std::ostream& out) {
  const Field field = Field::parse(field_text);
  const QuotContextPtr ctx = make_quot_context(field, parse_ell(ell_text, field));
  const QuotMatrix a = parse_quot_matrix(read_file(matrix_path), ctx);
  const QuotMatrix r_matrix = parse_quot_matrix(r_text, ctx);
  if (r_matrix.rows() != 1 || r_matrix.cols() != 1) throw InputError("--r must be a scalar");
  Trace events;
  QuotElement r = QuotElement::zero(ctx);
  try {
    r = reduce_realizer(a, r_matrix(0, 0), trace ? &events : nullptr);
  } catch (const NotARealizer& e) {
    throw NegativeResult(e.what());
  } catch (const NotSymmetric& e) {
    throw NegativeResult(e.what());
  } catch (const NotLinearEntries& e) {
    throw NegativeResult(e.what());
  }
  if (trace) out << trace_to_string(events);
  out << "r = " << r.to_string() << "\n";
  return exit_code::ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bessmertnyi realizations of rational matrix functions", "bess"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string field = "q", kind, out_path, pencil_path, ell, matrix_path, r_text;
  std::size_t nvars = 0;
  bool trace = false;
  ExprSource src;

  auto* realize = app.add_subcommand("realize", "Build a realization pencil");
  realize->add_option("--field", field, "q, gf2 or gf:<p>")->required();
  realize->add_option("--kind", kind, "br, sbr, hbr or hsbr")
      ->required()
      ->check(CLI::IsMember({"br", "sbr", "hbr", "hsbr"}));
  src.attach(realize);
  realize->add_option("--out", out_path, "Write the pencil JSON here");
  realize->add_option("--nvars", nvars, "Minimum number of variables");

  auto* verify = app.add_subcommand("verify", "Check a pencil against a target");
  verify->add_option("--pencil", pencil_path, "Pencil JSON file")->required();
  ExprSource verify_src;
  verify_src.attach(verify);
  verify->add_option("--kind", kind, "br, sbr, hbr or hsbr")
      ->required()
      ->check(CLI::IsMember({"br", "sbr", "hbr", "hsbr"}));

  auto* decide = app.add_subcommand("decide", "Decide symmetric realizability");
  decide->add_option("--field", field, "q, gf2 or gf:<p>")->required();
  decide->add_option("--kind", kind, "sbr or hsbr")
      ->required()
      ->check(CLI::IsMember({"sbr", "hsbr"}));
  ExprSource decide_src;
  decide_src.attach(decide);
  decide->add_option("--nvars", nvars, "Minimum number of variables");

  auto* reduce = app.add_subcommand("reduce", "Reduce a quotient-ring realizer");
  reduce->add_option("--field", field, "Field of characteristic 2")->required();
  reduce->add_option("--ell", ell, "Comma separated point l")->required();
  reduce->add_option("--matrix", matrix_path, "File holding the realizer matrix")->required();
  reduce->add_option("--r", r_text, "Realized element")->required();
  reduce->add_flag("--trace", trace, "Print every intermediate matrix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::input_error;
  }

  try {
    if (realize->parsed()) return cmd_realize(field, kind, src, out_path, nvars, out);
    if (verify->parsed()) return cmd_verify(pencil_path, verify_src, kind, out);
    if (decide->parsed()) return cmd_decide(field, kind, decide_src, nvars, out);
    if (reduce->parsed()) return cmd_reduce(field, ell, matrix_path, r_text, trace, out);
  } catch (const NegativeResult& e) {
    out << "verdict: not realizable\nreason: " << e.what() << "\n";
    return exit_code::negative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  }
  return exit_code::input_error;
}

}  // namespace bess
