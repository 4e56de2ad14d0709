#include "quon/bandfit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace quon {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  return out;
}

void validate(const BandData& band) {
  int prev_l = -1;
  for (const auto& lv : band.levels) {
    if (lv.l < 0 || lv.l % 2 != 0)
      throw BandInputError("band level l = " + std::to_string(lv.l) +
                           ": rotational bands carry even non-negative l");
    if (lv.l <= prev_l) throw BandInputError("band l values must be strictly increasing");
    if (!std::isfinite(lv.energy_kev)) throw BandInputError("band energies must be finite");
    if (lv.l == 0 && lv.energy_kev != 0.0)
      throw BandInputError("the l = 0 band head must sit at energy 0");
    if (!(lv.weight > 0.0) || !std::isfinite(lv.weight))
      throw BandInputError("band weights must be positive");
    prev_l = lv.l;
  }
}

double rotor_f(int l, DeformationParameter q) {
  const double half = 0.5 * q_bracket(2 * l, q);
  return half * (half + 1.0);
}

}  // namespace

BandData parse_band_csv(std::istream& in) {
  BandData band;
  std::string line;
  bool have_header = false;
  std::size_t expected_fields = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (!have_header) {
      if (fields.size() < 2 || fields[0] != "l" || fields[1] != "energy_kev" ||
          (fields.size() == 3 && fields[2] != "weight") || fields.size() > 3)
        throw BandInputError("band CSV header must be 'l,energy_kev[,weight]'");
      expected_fields = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != expected_fields)
      throw BandInputError("band CSV row has " + std::to_string(fields.size()) +
                           " fields, expected " + std::to_string(expected_fields));
    BandLevel lv;
    try {
      std::size_t pos = 0;
      lv.l = std::stoi(fields[0], &pos);
      if (pos != fields[0].size()) throw std::invalid_argument(fields[0]);
      lv.energy_kev = std::stod(fields[1], &pos);
      if (pos != fields[1].size()) throw std::invalid_argument(fields[1]);
      if (expected_fields == 3) {
        lv.weight = std::stod(fields[2], &pos);
        if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
      }
    } catch (const std::exception&) {
      throw BandInputError("unparsable band CSV row: " + line);
    }
    band.levels.push_back(lv);
  }
  if (!have_header) throw BandInputError("band CSV is empty");
  if (band.levels.empty()) throw BandInputError("band CSV contains no levels");
  validate(band);
  return band;
}

BandData load_band_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BandInputError("cannot open band file: " + path);
  return parse_band_csv(in);
}

ALinearFit optimal_A_given_q(const BandData& band, DeformationParameter q) {
  double sfe = 0.0, sff = 0.0;
  for (const auto& lv : band.levels) {
    const double f = rotor_f(lv.l, q);
    sfe += lv.weight * f * lv.energy_kev;
    sff += lv.weight * f * f;
  }
  if (sff == 0.0)
    throw BandInputError("optimal_A_given_q: no level with l > 0 (Σ f² vanishes)");
  ALinearFit fit;
  fit.inertia_A = sfe / sff;
  for (const auto& lv : band.levels) {
    const double r = fit.inertia_A * rotor_f(lv.l, q) - lv.energy_kev;
    fit.sse += lv.weight * r * r;
  }
  return fit;
}

FitResult fit_band(const BandData& band, double q_min, double q_max) {
  int nonzero = 0;
  for (const auto& lv : band.levels)
    if (lv.l > 0) ++nonzero;
  if (nonzero < 2)
    throw BandInputError("fit_band: need at least two levels with l > 0 for a two-parameter fit");
  if (!(q_min < q_max) || q_min < -1.0 || q_max > 1.0)
    throw BandInputError("fit_band: search interval must satisfy -1 <= q_min < q_max <= 1");

  long evaluations = 0;
  const auto sse_at = [&](double q) {
    ++evaluations;
    return optimal_A_given_q(band, q).sse;
  };

  constexpr double kGridStep = 1e-3;
  double best_q = 0.0, best_sse = 0.0;
  bool first = true;
  const long steps = std::lround((q_max - q_min) / kGridStep);
  for (long k = 1; k <= steps; ++k) {
    const double q = (k == steps) ? q_max : q_min + kGridStep * static_cast<double>(k);
    const double s = sse_at(q);
    if (first || s < best_sse) {  // strict: ties keep the lowest q
      best_q = q;
      best_sse = s;
      first = false;
    }
  }

  // Golden-section refinement inside the bracketing grid cells.
  double lo = std::max(q_min + kGridStep * 0.5, best_q - kGridStep);
  double hi = std::min(q_max, best_q + kGridStep);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = sse_at(x1), f2 = sse_at(x2);
  while (hi - lo > 1e-8) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = sse_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = sse_at(x2);
    }
  }
  for (double q : {lo, 0.5 * (lo + hi), hi}) {
    const double s = sse_at(q);
    if (s < best_sse) {
      best_sse = s;
      best_q = q;
    }
  }

  FitResult result;
  result.q = best_q;
  const auto a_fit = optimal_A_given_q(band, best_q);
  result.inertia_A = a_fit.inertia_A;
  double wsum = 0.0;
  for (const auto& lv : band.levels) {
    result.per_level_residuals.push_back(lv.energy_kev -
                                         a_fit.inertia_A * rotor_f(lv.l, best_q));
    wsum += lv.weight;
  }
  result.rms_residual = std::sqrt(a_fit.sse / wsum);
  result.evaluations = evaluations;
  result.boundary_minimum =
      (q_max - best_q < 1e-7) || (best_q - q_min < kGridStep + 1e-7);
  return result;
}

}  // namespace quon
