#include "quon/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quon/bandfit.hpp"
#include "quon/models.hpp"
#include "quon/symsector.hpp"
#include "quon/verify.hpp"

namespace quon::cli {

namespace {

std::string g10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

MixedWord parse_word_spec(const std::string& spec) {
  MixedWord word;
  std::istringstream ss(spec);
  std::string tok;
  while (ss >> tok) {
    OpKind kind;
    std::string num;
    if (tok.size() > 2 && tok.compare(0, 2, "ad") == 0) {
      kind = OpKind::Create;
      num = tok.substr(2);
    } else if (tok.size() > 1 && tok[0] == 'a') {
      kind = OpKind::Annihilate;
      num = tok.substr(1);
    } else {
      throw std::invalid_argument("bad operator token '" + tok + "' (want a<i> or ad<i>)");
    }
    std::size_t pos = 0;
    int mode = -1;
    try {
      mode = std::stoi(num, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != num.size() || mode < 0 || mode > 255)
      throw std::invalid_argument("bad mode index in token '" + tok + "'");
    word.push_back({static_cast<Mode>(mode), kind});
  }
  if (word.empty()) throw std::invalid_argument("empty operator word");
  return word;
}

OccupancyVector parse_occupancy(const std::vector<std::string>& specs) {
  std::map<Mode, int> counts;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("occupancy must be mode:count, got '" + s + "'");
    int mode = -1, count = -1;
    try {
      std::size_t p1 = 0, p2 = 0;
      mode = std::stoi(s.substr(0, colon), &p1);
      count = std::stoi(s.substr(colon + 1), &p2);
      if (p1 != colon || p2 != s.size() - colon - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("occupancy must be mode:count, got '" + s + "'");
    }
    if (mode < 0 || mode > 255 || count < 1)
      throw std::invalid_argument("occupancy out of range: '" + s + "'");
    counts[static_cast<Mode>(mode)] += count;
  }
  return OccupancyVector(counts);
}

// --output switches the primary table to a file; everything else stays on out.
class TableSink {
 public:
  TableSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::vector<std::pair<std::string, double>> parse_q_list(const std::string& csv) {
  std::vector<std::pair<std::string, double>> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad q value '" + tok + "'");
    out.emplace_back(tok, v);
  }
  if (out.empty()) throw std::invalid_argument("empty q list");
  return out;
}

void print_classify(const GramSpectrum& spec, bool exact, const std::string& format,
                    std::ostream& os) {
  const auto& clusters = (exact && !spec.exact_clusters.empty()) ? spec.exact_clusters
                                                                 : spec.clusters;
  const bool csv = format == "csv";
  if (csv) {
    os << "eigenvalue,multiplicity,sector,null";
    if (exact) os << ",exact";
    os << "\n";
  } else {
    os << "eigenvalue        multiplicity  sector          null";
    if (exact) os << "  exact";
    os << "\n";
  }
  for (const auto& c : clusters) {
    const std::string poly = c.exact_poly ? c.exact_poly->to_string() : "";
    if (csv) {
      os << g10(c.eigenvalue) << ',' << c.multiplicity << ',' << c.label.to_string() << ','
         << (c.null_state ? "yes" : "no");
      if (exact) os << ',' << poly;
      os << "\n";
    } else {
      char line[256];
      std::snprintf(line, sizeof line, "%-17s %-13d %-15s %-4s", g10(c.eigenvalue).c_str(),
                    c.multiplicity, c.label.to_string().c_str(), c.null_state ? "yes" : "no");
      os << line;
      if (exact) os << "  " << poly;
      os << "\n";
    }
  }
}

int cmd_fit_run(const std::string& input, const std::string& output, bool emit_comparison,
                bool allow_negative_q, std::ostream& out, std::ostream& err) {
  const BandData band = load_band_csv(input);
  TableSink sink(output, out);
  const FitResult fit = fit_band(band, allow_negative_q ? -1.0 : 0.0, 1.0);
  if (fit.boundary_minimum)
    err << "warning: fitted q lies at the boundary of the search interval; the data may "
           "prefer a deformation outside the quon range\n";

  out << "A=" << g10(fit.inertia_A) << " q=" << g10(fit.q) << " rms=" << g10(fit.rms_residual)
      << "\n";

  // rigid-rotor comparison refits A at q = 1
  double a_rigid = 0.0;
  if (emit_comparison) a_rigid = optimal_A_given_q(band, 1.0).inertia_A;

  std::ostream& os = sink.stream();
  os << "l,energy_exp,energy_fit,residual";
  if (emit_comparison) os << ",energy_rigid";
  os << "\n";
  for (std::size_t i = 0; i < band.levels.size(); ++i) {
    const auto& lv = band.levels[i];
    os << lv.l << ',' << g10(lv.energy_kev) << ','
       << g10(lv.energy_kev - fit.per_level_residuals[i]) << ','
       << g10(fit.per_level_residuals[i]);
    if (emit_comparison) os << ',' << g10(a_rigid * lv.l * (lv.l + 1));
    os << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quon algebra toolkit: vacuum expectation values, permutation-symmetry "
               "classification, oscillator and rotor spectra, rotational-band fitting"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  double q_value = 1.0;
  bool exact = false;
  std::string output_path;
  std::string format = "table";
  app.add_option("--q", q_value, "deformation parameter in [-1, 1]")->capture_default_str();
  app.add_flag("--exact", exact, "exact integer-polynomial output where available");
  app.add_option("--output", output_path, "write the primary table to a file");
  app.add_option("--format", format, "table output format")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();

  // vev
  auto* vev = app.add_subcommand("vev", "vacuum expectation value of an operator word");
  std::string word_spec;
  vev->add_option("word", word_spec, "whitespace-separated a<i>/ad<i> tokens, bra-ket order")
      ->required();

  // classify
  auto* classify = app.add_subcommand("classify", "Gram-matrix symmetry sectors of an occupancy");
  std::vector<std::string> occupancy_spec;
  classify->add_option("occupancy", occupancy_spec, "mode:count pairs")->required();

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "oscillator or rotor energy tables");
  std::string model;
  int nmax = -1, lmax = -1;
  double inertia_a = 1.0, hbar_omega = 1.0;
  std::string compare_q;
  spectrum->add_option("model", model, "osc | rotor")
      ->required()
      ->check(CLI::IsMember({"osc", "rotor"}));
  spectrum->add_option("--nmax", nmax, "largest oscillator quantum number N");
  spectrum->add_option("--lmax", lmax, "largest rotor angular momentum l");
  spectrum->add_option("--A", inertia_a, "rotor inertia constant")->capture_default_str();
  spectrum->add_option("--hbar-omega", hbar_omega, "oscillator energy unit")
      ->capture_default_str();
  spectrum->add_option("--compare-q", compare_q, "comma-separated q list, one column each");

  // fit
  auto* fit = app.add_subcommand("fit", "least-squares (A, q) fit of a rotational band");
  std::string input_csv;
  bool emit_comparison = false, allow_negative_q = false;
  fit->add_option("input", input_csv, "band CSV: l,energy_kev[,weight]")->required();
  fit->add_flag("--emit-comparison", emit_comparison, "add a rigid-rotor column (q=1 refit)");
  fit->add_flag("--allow-negative-q", allow_negative_q, "search q in (-1, 1] instead of (0, 1]");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the cross-module invariant suites");
  std::string suite = "all";
  int max_n = 4;
  verify_cmd->add_option("--suite", suite, "one suite name, or 'all'")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "size cap for the suites")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const DeformationParameter q(q_value);

    if (*vev) {
      const MixedWord word = parse_word_spec(word_spec);
      if (exact)
        out << vev_rewrite_poly(word).to_string() << "\n";
      else
        out << g10(vev_rewrite(word, q)) << "\n";
      return kExitOk;
    }

    if (*classify) {
      const OccupancyVector occ = parse_occupancy(occupancy_spec);
      const auto spec = classify_occupancy(occ, q, exact);
      TableSink sink(output_path, out);
      print_classify(spec, exact, format, sink.stream());
      return kExitOk;
    }

    if (*spectrum) {
      TableSink sink(output_path, out);
      std::ostream& os = sink.stream();
      std::vector<std::pair<std::string, double>> q_cols;
      if (!compare_q.empty())
        q_cols = parse_q_list(compare_q);
      else
        q_cols.emplace_back(g10(q_value), q_value);
      if (model == "osc") {
        if (nmax < 0) throw std::invalid_argument("spectrum osc requires --nmax");
        os << "N";
        if (q_cols.size() == 1)
          os << ",energy";
        else
          for (const auto& [name, _] : q_cols) os << ",energy[q=" << name << "]";
        os << ",degeneracy\n";
        for (int n = 0; n <= nmax; ++n) {
          os << n;
          for (const auto& [_, qv] : q_cols)
            os << ',' << g10(oscillator_energy(n, {hbar_omega, qv}));
          os << ',' << oscillator_degeneracy(n) << "\n";
        }
      } else {
        if (lmax < 0) throw std::invalid_argument("spectrum rotor requires --lmax");
        os << "l";
        if (q_cols.size() == 1)
          os << ",energy";
        else
          for (const auto& [name, _] : q_cols) os << ",energy[q=" << name << "]";
        os << "\n";
        for (int l = 0; l <= lmax; ++l) {
          os << l;
          for (const auto& [_, qv] : q_cols) os << ',' << g10(rotor_energy(l, {inertia_a, qv}));
          os << "\n";
        }
      }
      return kExitOk;
    }

    if (*fit) return cmd_fit_run(input_csv, output_path, emit_comparison, allow_negative_q, out, err);

    if (*verify_cmd) {
      const auto results = verify::run_suites(suite, max_n);
      long failures = 0;
      for (const auto& r : results) {
        out << "suite " << r.name << ": " << (r.checks - r.failures) << "/" << r.checks
            << " checks passed" << (r.failures ? "  [FAILED]" : "") << "\n";
        for (const auto& m : r.messages) err << "  " << r.name << ": " << m << "\n";
        failures += r.failures;
      }
      out << (failures == 0 ? "verification passed" : "verification FAILED") << "\n";
      return failures == 0 ? kExitOk : kExitVerifyFailure;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const BandInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace quon::cli
