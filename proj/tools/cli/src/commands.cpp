#include "torusplit_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <system_error>

#include "CLI11.hpp"

#include "torusplit/error.hpp"
#include "torusplit/monoid.hpp"
#include "torusplit/splitting.hpp"
#include "torusplit_cli/fixtures.hpp"
#include "torusplit_cli/report.hpp"
#include "torusplit_cli/variety_file.hpp"

namespace torusplit::cli {

namespace {

struct Loaded {
  std::string text;
  VarietyFile file;
};

Loaded load(const std::filesystem::path& path) {
  Loaded l;
  l.text = read_text_file(path);
  l.file = parse_variety_file(l.text, path.string());
  return l;
}

std::string vec_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

bool same_contents(const std::filesystem::path& path, std::string_view expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::string actual((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return actual == expected;
}

} // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  if (options.trials == 0) {
    err << "error: --trials must be at least 1\n";
    return kExitInvalidInput;
  }
  Loaded in;
  std::optional<GradedPresentation> pres;
  std::optional<IntMatrix> embedding;
  try {
    in = load(options.file);
    GradedPresentation raw =
        to_presentation(in.file, in.text, options.file.string(), options.reduce);
    if (options.reduce && !raw.is_faithful()) {
      Reduction red = reduce_nonfaithful_with_map(raw);
      embedding = red.embedding;
      pres.emplace(std::move(red.presentation));
      err << "note: weights do not act faithfully; reduced to a torus of rank "
          << pres->torus_rank() << "\n";
    } else {
      pres.emplace(std::move(raw));
    }
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << options.file.string() << ": " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    Analysis analysis = analyze(*pres, {options.trials, options.seed});
    SmoothnessEvidence smooth = smoothness_probe(*pres, options.trials, options.seed);
    ReportInputs ri;
    ri.input_name = options.file.filename().string();
    ri.input_sha256 = sha256_hex(in.text);
    ri.seed = options.seed;
    ri.trials = options.trials;
    ri.reduction_embedding = embedding;
    nlohmann::json report = build_report(in.file, *pres, analysis, smooth, ri);
    out << (options.json ? dump_report(report) : render_human(report));

    const Evidence& ev = analysis.verdict.evidence;
    // Quotient of dimension 0 or 1, both positive branches, and no way to tell.
    if (ev.hypotheses_asserted && !ev.decided_dim && ev.quotient.ambient_dim == 1) {
      err << "unsupported: quotient dimension undecidable (" << ev.quotient.unknown_reason << ")\n";
      return kExitUnsupported;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "internal error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_oracle(const std::filesystem::path& file, long bound, std::ostream& out, std::ostream& err) {
  if (bound < 1) {
    err << "error: --bound must be at least 1\n";
    return kExitInvalidInput;
  }
  std::optional<GradedPresentation> pres;
  try {
    Loaded in = load(file);
    pres.emplace(to_presentation(in.file, in.text, file.string(), true));
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    HilbertBasis basis = invariant_basis(*pres);
    std::vector<IntVector> solutions = brute_force_solutions(basis.system, bound);
    out << "basis (" << basis.elements.size() << " elements):\n";
    for (const auto& e : basis.elements) out << "  " << vec_text(e) << "\n";
    out << "solutions with |v_i| <= " << bound << " (" << solutions.size() << "):\n";
    std::size_t missing = 0;
    for (const auto& s : solutions) {
      bool ok = generates(basis, s);
      if (!ok) ++missing;
      out << "  " << vec_text(s) << (ok ? "  generated" : "  NOT GENERATED") << "\n";
    }
    out << (missing == 0 ? "all solutions generated\n"
                         : std::to_string(missing) + " solutions not generated\n");
    return missing == 0 ? kExitOk : kExitFailure;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SearchSpaceTooLarge) {
      err << "error: " << e.what() << "; lower --bound\n";
      return kExitSearchSpace;
    }
    err << "internal error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_examples(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    err << "error: cannot create directory " << dir.string()
        << (ec ? ": " + ec.message() : std::string()) << "\n";
    return kExitUnwritable;
  }
  for (const Fixture& f : builtin_fixtures()) {
    std::filesystem::path target = dir / f.file_name;
    if (same_contents(target, f.contents)) {
      out << "unchanged " << target.string() << "\n";
      continue;
    }
    std::ofstream o(target, std::ios::binary | std::ios::trunc);
    o.write(f.contents.data(), static_cast<std::streamsize>(f.contents.size()));
    o.close();
    if (!o) {
      err << "error: cannot write " << target.string() << "\n";
      return kExitUnwritable;
    }
    out << "wrote " << target.string() << "\n";
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus splitting and uniform rationality certificates for affine T-varieties",
               "torusplit"};
  app.set_version_flag("--version", std::string("torusplit ") + TORUSPLIT_VERSION_STRING);
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on a variety file");
  analyze_cmd->add_option("file", analyze_opts.file, "Variety description (JSON)")->required();
  analyze_cmd->add_flag("--json", analyze_opts.json, "Emit the machine-readable report");
  analyze_cmd->add_option("--seed", analyze_opts.seed, "Seed for point sampling")
      ->capture_default_str();
  analyze_cmd->add_flag("--reduce", analyze_opts.reduce,
                        "Accept non-faithful weights by passing to the faithful torus");
  analyze_cmd->add_option("--trials", analyze_opts.trials, "Sampled points for dimension probing")
      ->capture_default_str();

  std::filesystem::path oracle_file;
  long bound = 0;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Check the invariant Hilbert basis against brute force");
  oracle_cmd->add_option("file", oracle_file, "Variety description (JSON)")->required();
  oracle_cmd->add_option("--bound", bound, "Coordinate bound for enumeration")->required();

  std::filesystem::path examples_dir = "examples";
  auto* examples_cmd = app.add_subcommand("examples", "Write the bundled example files");
  examples_cmd->add_option("--dir", examples_dir, "Target directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts, out, err);
  if (oracle_cmd->parsed()) return cmd_oracle(oracle_file, bound, out, err);
  return cmd_examples(examples_dir, out, err);
}

} // namespace torusplit::cli
