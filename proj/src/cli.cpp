#include "ideallab/cli.hpp"

#include <CLI11.hpp>

#include "ideallab/parse.hpp"
#include "ideallab/serialize.hpp"

namespace ideallab {

namespace {

std::pair<i64, i64> parse_range(const std::string& s) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos)
    throw parse_error("range must look like a..b, got '" + s + "'");
  i64 lo = std::stoll(s.substr(0, dots));
  i64 hi = std::stoll(s.substr(dots + 2));
  if (hi < lo) throw parse_error("empty range '" + s + "'");
  return {lo, hi};
}

int cmd_classify(const std::string& ring_spec, const std::string& ideal_spec,
                 const std::string& format, int degree_bound, std::ostream& out) {
  RingHandle ring = parse_ring(ring_spec);
  Ideal I = parse_ideal(ring, ideal_spec);
  if (!I.is_proper()) throw domain_error("classify: ideal " + I.str() + " is the whole ring");
  ScanLimits limits{degree_bound, 2};
  ClassificationReport rep = classify_report(I, limits);
  if (format == "json")
    out << classification_json(rep);
  else if (format == "csv")
    out << scan_csv_header() << classification_csv_row(rep);
  else
    out << classification_text(rep);
  return 0;
}

void emit_rows(const std::vector<Ideal>& ideals, const ScanLimits& limits,
               const std::string& format, std::string& csv, std::string& text,
               std::vector<std::string>& jsons) {
  for (const auto& I : ideals) {
    if (!I.is_proper()) {
      if (format == "csv") csv += whole_ring_csv_row(I.ring(), I);
      continue;
    }
    ClassificationReport rep = classify_report(I, limits);
    if (format == "csv")
      csv += classification_csv_row(rep);
    else if (format == "json")
      jsons.push_back(classification_json(rep));
    else
      text += classification_text(rep);
  }
}

int cmd_scan(const std::string& family, const std::string& n_range, i64 left, i64 right,
             int degree_bound, const std::string& format, std::ostream& out) {
  ScanLimits limits{degree_bound, 2};
  std::string csv = scan_csv_header(), text;
  std::vector<std::string> jsons;
  if (family == "zmod") {
    auto [lo, hi] = parse_range(n_range);
    if (lo < 2) throw parse_error("zmod family needs moduli >= 2");
    for (i64 n = lo; n <= hi; ++n) {
      RingHandle R = RingHandle::z_mod(n);
      emit_rows(enumerate_ideals(IdealFamily{R, std::nullopt, degree_bound}), limits, format,
                csv, text, jsons);
    }
  } else if (family == "int") {
    auto [lo, hi] = parse_range(n_range);
    RingHandle Z = RingHandle::integers();
    std::vector<Ideal> ideals;
    for (i64 m = lo; m <= hi; ++m) ideals.push_back(Ideal::from_modulus(Z, m));
    emit_rows(ideals, limits, format, csv, text, jsons);
  } else if (family == "prod") {
    if (left < 2 || right < 2) throw parse_error("prod family needs --left and --right >= 2");
    RingHandle R = RingHandle::product(RingHandle::z_mod(left), RingHandle::z_mod(right));
    emit_rows(enumerate_ideals(IdealFamily{R, std::nullopt, degree_bound}), limits, format, csv,
              text, jsons);
  } else if (family == "monloc") {
    RingHandle K = RingHandle::mon_loc();
    emit_rows(enumerate_ideals(IdealFamily{K, std::nullopt, degree_bound}), limits, format, csv,
              text, jsons);
  } else {
    throw parse_error("unknown family '" + family + "'");
  }
  if (format == "csv") {
    out << csv;
  } else if (format == "json") {
    out << "[\n";
    for (std::size_t i = 0; i < jsons.size(); ++i) {
      // each entry is already a dumped object ending in newline
      std::string piece = jsons[i];
      if (!piece.empty() && piece.back() == '\n') piece.pop_back();
      out << piece << (i + 1 < jsons.size() ? ",\n" : "\n");
    }
    out << "]\n";
  } else {
    out << text;
  }
  return 0;
}

int cmd_verify(const std::string& theorems, const Scope& scope, const std::string& format,
               std::ostream& out) {
  std::vector<TheoremId> ids;
  if (theorems == "all") {
    ids = all_theorem_ids();
  } else {
    std::size_t start = 0;
    while (start <= theorems.size()) {
      std::size_t comma = theorems.find(',', start);
      std::string name = comma == std::string::npos ? theorems.substr(start)
                                                    : theorems.substr(start, comma - start);
      auto id = theorem_from_name(name);
      if (!id) throw parse_error("unknown theorem id '" + name + "'");
      ids.push_back(*id);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  std::vector<VerificationReport> reps;
  reps.reserve(ids.size());
  for (TheoremId id : ids) reps.push_back(verify_theorem(id, scope));
  out << (format == "json" ? reports_json(reps) : reports_text(reps));
  for (const auto& r : reps)
    if (!r.violations.empty()) return 1;
  return 0;
}

int cmd_construct(const std::string& kind, const std::string& ring_spec,
                  const std::string& elem_spec, const std::string& prime_spec,
                  const std::string& format, std::ostream& out) {
  RingHandle ring = parse_ring(ring_spec);
  Construction c = [&]() {
    if (kind == "xm") {
      if (elem_spec.empty()) throw parse_error("construct xm needs --elem");
      return construct_xM(ring, parse_element(ring, elem_spec));
    }
    if (kind == "pm") {
      if (prime_spec.empty()) throw parse_error("construct pm needs --prime");
      return construct_PM(ring, parse_ideal(ring, prime_spec));
    }
    throw parse_error("unknown construct kind '" + kind + "'");
  }();
  out << (format == "json" ? construction_json(ring, c) : construction_text(ring, c));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact classification of prime / primary / 1-absorbing primary / 2-absorbing "
               "primary ideals over concrete rings"};
  app.name("ideallab");
  app.require_subcommand(1);

  std::string ring_spec, ideal_spec, elem_spec, prime_spec, kind;
  std::string format_classify = "text", format_scan = "csv", format_verify = "text",
              format_construct = "text";
  std::string family, n_range, theorems = "all", mutate;
  i64 left = 0, right = 0;
  int degree_bound = 4;
  Scope scope;

  auto* classify = app.add_subcommand("classify", "classify one ideal");
  classify->add_option("--ring", ring_spec, "ring spec")->required();
  classify->add_option("--ideal", ideal_spec, "ideal literal")->required();
  classify->add_option("--format", format_classify)->check(CLI::IsMember({"json", "csv", "text"}));
  classify->add_option("--degree-bound", degree_bound);

  auto* scan = app.add_subcommand("scan", "classify a family of ideals");
  scan->add_option("--family", family)->required()
      ->check(CLI::IsMember({"zmod", "int", "prod", "monloc"}));
  scan->add_option("--n-range", n_range, "modulus range a..b");
  scan->add_option("--left", left);
  scan->add_option("--right", right);
  scan->add_option("--degree-bound", degree_bound);
  scan->add_option("--format", format_scan)->check(CLI::IsMember({"json", "csv", "text"}));

  auto* verify = app.add_subcommand("verify", "run theorem verifiers");
  verify->add_option("--theorem", theorems, "comma-separated ids, or 'all'");
  verify->add_option("--max-n", scope.int_max, "bound for moduli over Z");
  verify->add_option("--zmod-max", scope.zmod_max);
  verify->add_option("--prod-max", scope.prod_max);
  verify->add_option("--degree-bound", scope.monloc_degree);
  verify->add_option("--mutate", mutate, "deliberately false claim to refute");
  verify->add_option("--format", format_verify)->check(CLI::IsMember({"json", "text"}));

  auto* construct = app.add_subcommand("construct", "run a certified constructor");
  construct->add_option("--kind", kind)->required()->check(CLI::IsMember({"xm", "pm"}));
  construct->add_option("--ring", ring_spec)->required();
  construct->add_option("--elem", elem_spec);
  construct->add_option("--prime", prime_spec);
  construct->add_option("--format", format_construct)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv_vec = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("ideallab");
    for (const auto& a : argv_vec) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (classify->parsed())
      return cmd_classify(ring_spec, ideal_spec, format_classify, degree_bound, out);
    if (scan->parsed())
      return cmd_scan(family, n_range, left, right, degree_bound, format_scan, out);
    if (verify->parsed()) {
      if (!mutate.empty()) {
        if (mutate != "2abs-implies-1abs")
          throw parse_error("unknown mutation '" + mutate + "'");
        scope.mutation = mutate;
      }
      return cmd_verify(theorems, scope, format_verify, out);
    }
    if (construct->parsed())
      return cmd_construct(kind, ring_spec, elem_spec, prime_spec, format_construct, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const unsupported_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const backend_mismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ideallab
