#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quon/bandfit.hpp"
#include "quon/models.hpp"
#include "quon/symsector.hpp"
#include "quon/verify.hpp"

namespace py = pybind11;
using namespace quon;

namespace {

MixedWord word_from_tokens(const std::string& spec) {
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
      throw std::invalid_argument("bad operator token '" + tok + "'");
    }
    word.push_back({static_cast<Mode>(std::stoi(num)), kind});
  }
  return word;
}

CreationWord to_word(const std::vector<int>& modes) {
  CreationWord w;
  for (int m : modes) {
    if (m < 0 || m > 255) throw std::invalid_argument("mode index out of range");
    w.push_back(static_cast<Mode>(m));
  }
  return w;
}

OccupancyVector to_occ(const std::map<int, int>& counts) {
  std::map<Mode, int> m;
  for (auto [mode, c] : counts) {
    if (mode < 0 || mode > 255) throw std::invalid_argument("mode index out of range");
    m[static_cast<Mode>(mode)] = c;
  }
  return OccupancyVector(m);
}

RotorOp rotor_op_from_name(const std::string& name) {
  if (name == "L+") return RotorOp::LPlus;
  if (name == "L-") return RotorOp::LMinus;
  if (name == "L0") return RotorOp::LZero;
  if (name == "L2") return RotorOp::LSquared;
  if (name == "[L+,L-]") return RotorOp::CommPlusMinus;
  if (name == "[L0,L+]") return RotorOp::CommZeroPlus;
  if (name == "[L0,L-]") return RotorOp::CommZeroMinus;
  throw std::invalid_argument("unknown rotor operator '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_quon, m) {
  m.doc() = "quon algebra: q-mutation vacuum expectation values, permutation-symmetry "
            "classification, quonic oscillator/rotor spectra, rotational-band fitting";

  py::class_<QPoly>(m, "QPoly")
      .def(py::init([](const std::vector<long long>& coeffs) {
             std::vector<BigInt> c;
             for (long long x : coeffs) c.emplace_back(x);
             return QPoly(std::move(c));
           }),
           py::arg("coeffs"))
      .def_property_readonly("coeffs",
                             [](const QPoly& p) {
                               std::vector<long long> out;
                               for (const auto& c : p.coeffs())
                                 out.push_back(c.convert_to<long long>());
                               return out;
                             })
      .def("degree", &QPoly::degree)
      .def("__call__", [](const QPoly& p, double q) { return p.eval(q); }, py::arg("q"))
      .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
      .def("__str__", &QPoly::to_string)
      .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.to_string() + ")"; });

  m.def("q_bracket", [](int n, double q) { return q_bracket(n, q); }, py::arg("n"), py::arg("q"),
        "[N] = 1 + q + ... + q^(N-1)");
  m.def("q_bracket_poly", &q_bracket_poly, py::arg("n"));
  m.def("q_factorial", [](int n, double q) { return q_factorial(n, q); }, py::arg("n"),
        py::arg("q"), "[N]! = [N][N-1]...[1]");
  m.def("q_factorial_poly", &q_factorial_poly, py::arg("n"));

  m.def("vev", [](const std::string& word, double q) { return vev_rewrite(word_from_tokens(word), q); },
        py::arg("word"), py::arg("q"),
        "<0| word |0> for a token string like 'a2 a1 ad2 ad1', in bra-ket order");
  m.def("vev_poly",
        [](const std::string& word) { return vev_rewrite_poly(word_from_tokens(word)); },
        py::arg("word"));
  m.def("overlap",
        [](const std::vector<int>& bra, const std::vector<int>& ket, double q) {
          return vev_qpermanent(to_word(bra), to_word(ket), q);
        },
        py::arg("bra"), py::arg("ket"), py::arg("q"),
        "<bra|ket> of two creation words via the q-weighted pairing sum");
  m.def("overlap_poly", [](const std::vector<int>& bra, const std::vector<int>& ket) {
    return vev_qpermanent_poly(to_word(bra), to_word(ket));
  });

  m.def("permutation_words",
        [](const std::map<int, int>& occ) {
          std::vector<std::vector<int>> out;
          for (const auto& w : enumerate_permutation_words(to_occ(occ)))
            out.emplace_back(w.begin(), w.end());
          return out;
        },
        py::arg("occupancy"));
  m.def("gram",
        [](const std::map<int, int>& occ, double q) {
          const auto words = enumerate_permutation_words(to_occ(occ));
          const auto g = gram_matrix(words, q);
          std::vector<std::vector<double>> out(static_cast<std::size_t>(g.rows()));
          for (Eigen::Index i = 0; i < g.rows(); ++i)
            for (Eigen::Index j = 0; j < g.cols(); ++j) out[i].push_back(g(i, j));
          return out;
        },
        py::arg("occupancy"), py::arg("q"));
  m.def("classify",
        [](const std::map<int, int>& occ, double q, bool exact) {
          const auto spec = classify_occupancy(to_occ(occ), q, exact);
          const auto& clusters =
              (exact && !spec.exact_clusters.empty()) ? spec.exact_clusters : spec.clusters;
          py::list out;
          for (const auto& c : clusters) {
            py::dict d;
            d["eigenvalue"] = c.eigenvalue;
            d["multiplicity"] = c.multiplicity;
            d["sector"] = c.label.to_string();
            d["null"] = c.null_state;
            if (c.exact_poly) d["exact"] = *c.exact_poly;
            out.append(d);
          }
          return out;
        },
        py::arg("occupancy"), py::arg("q"), py::arg("exact") = false);

  m.def("symmetric_state",
        [](const std::map<int, int>& occ, double q) {
          py::dict out;
          const auto state = symmetric_state(to_occ(occ), q);
          for (const auto& [w, c] : state.terms()) {
            py::tuple key(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) key[i] = static_cast<int>(w[i]);
            out[key] = c;
          }
          return out;
        },
        py::arg("occupancy"), py::arg("q"),
        "normalized symmetric state as {word tuple: coefficient}");
  m.def("lower_symmetric",
        [](const std::map<int, int>& occ, int mode, double q) {
          const auto l = lower_symmetric(to_occ(occ), static_cast<Mode>(mode), q);
          std::map<int, int> counts;
          for (const auto& [mm, c] : l.occ.counts()) counts[mm] = c;
          return py::make_tuple(l.coefficient, counts);
        },
        py::arg("occupancy"), py::arg("mode"), py::arg("q"));
  m.def("raise_symmetric_element",
        [](const std::map<int, int>& occ, int mode, double q) {
          return raise_symmetric_matrix_element(to_occ(occ), static_cast<Mode>(mode), q);
        },
        py::arg("occupancy"), py::arg("mode"), py::arg("q"));

  m.def("oscillator_energy",
        [](int n, double q, double hbar_omega) { return oscillator_energy(n, {hbar_omega, q}); },
        py::arg("n"), py::arg("q"), py::arg("hbar_omega") = 1.0);
  m.def("oscillator_degeneracy", &oscillator_degeneracy, py::arg("n"));
  m.def("oscillator_full_solve",
        [](int n, double q, double hbar_omega) {
          py::list out;
          for (const auto& lvl : oscillator_full_solve(n, {hbar_omega, q}).levels) {
            py::dict d;
            d["energy"] = lvl.energy;
            d["sector"] = lvl.sector.to_string();
            d["multiplicity"] = lvl.multiplicity;
            out.append(d);
          }
          return out;
        },
        py::arg("n"), py::arg("q"), py::arg("hbar_omega") = 1.0);

  m.def("rotor_energy",
        [](int l, double q, double inertia_A) { return rotor_energy(l, {inertia_A, q}); },
        py::arg("l"), py::arg("q"), py::arg("inertia_A") = 1.0);
  m.def("rotor_matrix_element",
        [](const std::string& op, const std::map<int, int>& bra, const std::map<int, int>& ket,
           double q) {
          return rotor_matrix_element(rotor_op_from_name(op), to_occ(bra), to_occ(ket), q);
        },
        py::arg("op"), py::arg("bra"), py::arg("ket"), py::arg("q"),
        "op in {'L+','L-','L0','L2','[L+,L-]','[L0,L+]','[L0,L-]'}; occupancies over modes 0,1");

  m.def("fit_band",
        [](const std::vector<std::pair<int, double>>& levels, bool allow_negative_q) {
          BandData band;
          for (const auto& [l, e] : levels) band.levels.push_back({l, e, 1.0});
          const auto fit = fit_band(band, allow_negative_q ? -1.0 : 0.0, 1.0);
          py::dict d;
          d["A"] = fit.inertia_A;
          d["q"] = fit.q;
          d["rms"] = fit.rms_residual;
          d["residuals"] = fit.per_level_residuals;
          d["evaluations"] = fit.evaluations;
          d["boundary"] = fit.boundary_minimum;
          return d;
        },
        py::arg("levels"), py::arg("allow_negative_q") = false,
        "levels: [(l, energy_keV), ...] with even increasing l");

  m.def("run_verification",
        [](const std::string& suite, int max_n) {
          py::list out;
          for (const auto& r : verify::run_suites(suite, max_n)) {
            py::dict d;
            d["suite"] = r.name;
            d["checks"] = r.checks;
            d["failures"] = r.failures;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("max_n") = 4);

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<BandInputError>(m, "BandInputError");
}
