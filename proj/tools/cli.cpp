#include "cli.hpp"

#include "example.hpp"

#include "arpt/classifier.hpp"
#include "arpt/corpus.hpp"
#include "arpt/galois.hpp"
#include "arpt/report.hpp"
#include "arpt/torsion.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace arpt::cli {

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Curve parse_coeffs(const std::string& text) {
  std::vector<Rat> c;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      c.push_back(Rat::parse(tok));
    } catch (const std::exception&) {
      throw usage_error("bad coefficient '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (c.size() != 5) throw usage_error("--coeffs needs exactly five comma-separated values a1,a2,a3,a4,a6");
  try {
    return curve_from_coeffs(Coefficients{c[0], c[1], c[2], c[3], c[4]});
  } catch (const singular_curve& ex) {
    throw usage_error(ex.what());
  }
}

int gm_check(long max_order, std::ostream& out) {
  long violations = 0;
  for (long n = 1; n <= max_order; ++n) {
    GmVerdict v = gm_almost_rational(n);
    bool divides6 = 6 % n == 0;
    bool witness_ok = v.almost_rational || gm_witness_valid(n, v.witness->first, v.witness->second);
    if (v.almost_rational != divides6 || !witness_ok) {
      ++violations;
      out << "violation at n = " << n << ": almost_rational=" << v.almost_rational << "\n";
    }
  }
  if (violations == 0) {
    out << "all almost rational orders divide 6 (checked n = 1.." << max_order << ")\n";
    return 0;
  }
  out << violations << " violations\n";
  return 1;
}

void print_report(const ClassificationReport& r, std::ostream& out) {
  out << "curve            " << curve_from_coeffs(r.coefficients).str() << "\n";
  out << "semistable       " << (r.semistable ? "yes" : "no") << "\n";
  out << "bad primes      ";
  for (const auto& b : r.bad_primes) out << " " << b.prime << ":" << to_string(b.kind);
  out << "\nE(Q)_tors        " << r.rational_torsion.str() << "\n";
  if (!r.quadratic_torsion) {
    out << "no almost-rationality analysis (curve is not semistable)\n";
    return;
  }
  out << "E(K)_tors        " << r.quadratic_torsion->str() << "  (K = Q(sqrt -3))\n";
  out << "mu3              " << (r.mu3_generator ? r.mu3_generator->str() : "absent") << "\n";
  out << "AR points        " << r.ar_points.size() << "\n";
  for (const auto& a : r.ar_points) {
    out << "  order " << a.order << "  " << a.point.str();
    if (a.decomposition) {
      const Decomposition& d = *a.decomposition;
      out << "  = " << (d.q == r.mu3_generator ? "Q" : "-Q") << " + " << d.r.str() << " + " << d.s.str();
    }
    out << "\n";
  }
  out << "predicted=actual " << (*r.predicted_equals_actual ? "yes" : "NO") << "\n";
  for (const auto& p : r.predicted_only) out << "  predicted only: " << p.str() << "\n";
  for (const auto& p : r.actual_only) out << "  actual only: " << p.str() << "\n";
  if (r.order16_s_found) out << "FLAG: decomposition uses an S of order 16\n";
  for (const auto& v : r.violations) out << "VIOLATION: " << v << "\n";
}

int run(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  long max_order = 0;
  auto* gm = app.add_subcommand("gm-check", "Check which orders of points on G_m are almost rational");
  gm->add_option("--max-order", max_order, "Largest order n to test")->required()->check(CLI::Range(1L, 100000000L));

  std::string coeffs;
  bool as_json = false;
  auto* cls = app.add_subcommand("classify", "Classify the almost rational torsion of one curve");
  cls->add_option("--coeffs", coeffs, "a1,a2,a3,a4,a6")->required();
  cls->add_flag("--json", as_json, "Emit the JSON report");

  std::string input, output, format = "json";
  unsigned threads = 0;
  auto* scn = app.add_subcommand("scan", "Classify every curve in a file");
  scn->add_option("--input", input, "Curve file")->required();
  scn->add_option("--output", output, "Report file")->required();
  scn->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  scn->add_option("--threads", threads, "Worker threads (0 = all cores)");

  app.add_subcommand("verify-example", "Check the conductor-1302 example");

  std::string tcoeffs;
  std::int64_t d = -3;
  auto* tor = app.add_subcommand("torsion", "Print the torsion subgroup over Q(sqrt D)");
  tor->add_option("--coeffs", tcoeffs, "a1,a2,a3,a4,a6")->required();
  tor->add_option("--d", d, "Squarefree D != 1; 0 means Q");
  app.require_subcommand(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gm) return gm_check(max_order, out);
    if (*cls) {
      ClassificationReport r = classify(parse_coeffs(coeffs));
      if (as_json) {
        out << emit_json(r) << "\n";
      } else {
        print_report(r, out);
      }
      return r.consistent() ? 0 : 1;
    }
    if (*scn) {
      CurveFile file;
      try {
        file = parse_curve_file(input);
      } catch (const std::runtime_error& ex) {
        throw usage_error(ex.what());
      }
      for (const auto& le : file.errors) err << input << ":" << le.line << ": " << le.message << "\n";
      BatchResult batch = scan(file, threads);
      std::ofstream os(output);
      if (!os) throw usage_error("cannot write '" + output + "'");
      os << (format == "json" ? emit_batch_json(batch) + "\n" : emit_batch_tsv(batch));
      const BatchSummary& s = batch.summary;
      for (const auto& e : batch.entries)
        if (e.error && !e.input_error) err << input << ":" << e.line << ": " << *e.error << "\n";
      out << "total " << s.total << ", semistable " << s.semistable << ", with mu3 " << s.with_mu3
          << ", with nonrational AR point " << s.with_nonrational_ar << ", mismatches " << s.mismatches << ", errors "
          << s.errors << " (" << s.input_errors << " input)\n";
      if (s.order16_flags) out << "FLAG: " << s.order16_flags << " curve(s) use an S of order 16\n";
      return s.mismatches == 0 && s.errors == s.input_errors ? 0 : 1;
    }
    if (app.got_subcommand("verify-example")) {
      ExampleTranscript t = verify_example();
      for (const auto& f : t.facts)
        out << (f.ok ? "PASS  " : "FAIL  ") << f.fact << (f.detail.empty() ? "" : "  [" + f.detail + "]") << "\n";
      for (const auto& f : t.diagnostics)
        out << (f.ok ? "note  " : "note! ") << f.fact << (f.detail.empty() ? "" : "  [" + f.detail + "]") << "\n";
      return t.all_ok() ? 0 : 1;
    }
    if (*tor) {
      Curve e = parse_coeffs(tcoeffs);
      if (d != 0 && (d == 1 || !is_squarefree(d))) throw usage_error("--d must be 0 or a squarefree integer other than 1");
      TorsionGroup g;
      try {
        g = d == 0 ? rational_torsion(e) : quadratic_torsion(e, d);
      } catch (const std::invalid_argument& ex) {
        throw usage_error(ex.what());
      }
      out << (d == 0 ? "E(Q)_tors = " : "E(Q(sqrt " + std::to_string(d) + "))_tors = ") << g.structure.str() << "\n";
      for (const auto& p : g.all_points) out << "  " << p.str() << "\n";
      return 0;
    }
  } catch (const usage_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "failure: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost rational torsion points on semistable elliptic curves", "arpt"};
  return run(app, args, out, err);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace arpt::cli
