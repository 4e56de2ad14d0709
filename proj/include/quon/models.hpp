#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quon/symsector.hpp"

namespace quon {

// Oscillator modes +, -, 0 as Fock mode indices.
inline constexpr Mode kModePlus = 0;
inline constexpr Mode kModeMinus = 1;
inline constexpr Mode kModeZero = 2;

struct OscillatorConfig {
  double hbar_omega = 1.0;
  DeformationParameter q{1.0};
};

struct RotorConfig {
  double inertia_A = 1.0;
  DeformationParameter q{1.0};
};

struct EnergyLevel {
  std::map<std::string, int> quantum_numbers;
  double energy = 0.0;
  int degeneracy = 1;
};

/// E = (ħω/2) { [N](1+q) + 3 }.
double oscillator_energy(int n_quanta, const OscillatorConfig& cfg);

/// (N+1)(N+2)/2: symmetric-subspace occupancies (n+, n-, n0) with sum N.
int oscillator_degeneracy(int n_quanta);

std::vector<EnergyLevel> oscillator_spectrum(int n_max, const OscillatorConfig& cfg);

struct FullSolveLevel {
  double energy = 0.0;
  SectorLabel sector;
  int multiplicity = 0;
};

struct FullSolveResult {
  std::vector<FullSolveLevel> levels;  // ascending energy
  double gram_condition = 0.0;         // worst block condition number of S
};

/// Independent spectral oracle: builds H and the Gram matrix S over all
/// permutation words with total quanta N across the three oscillator modes
/// (H entries through vev_rewrite), removes the null space of S, and solves
/// the generalized eigenproblem H c = E S c in the whitened surviving basis.
/// States are grouped by symmetry sector through their S-weighted overlap
/// with the symmetrizer and antisymmetrizer directions, and both directions
/// are verified to be generalized eigenvectors. The symmetric-sector
/// eigenvalue reproduces oscillator_energy.
FullSolveResult oscillator_full_solve(int n_quanta, const OscillatorConfig& cfg,
                                      std::optional<SectorKind> sector_filter = std::nullopt,
                                      int cap = 6);

// Rotor modes (Schwinger construction over two oscillator modes).
inline constexpr Mode kRotorPlus = 0;
inline constexpr Mode kRotorMinus = 1;

enum class RotorOp {
  LPlus,          // L+ = a†+ a-
  LMinus,         // L- = a†- a+
  LZero,          // L0 = (a†+ a+ - a†- a-)/2
  LSquared,       // L0² + (L+L- + L-L+)/2
  CommPlusMinus,  // [L+, L-]
  CommZeroPlus,   // [L0, L+]
  CommZeroMinus,  // [L0, L-]
};

/// Matrix element <bra; S| op |ket; S> over occupancies of the two rotor
/// modes, evaluated by chaining the symmetric lowering rule from both sides;
/// operator products are normal-ordered once with the q-mutation relation.
double rotor_matrix_element(RotorOp op, const OccupancyVector& bra, const OccupancyVector& ket,
                            DeformationParameter q);

/// E_l = A ([2l]/2)([2l]/2 + 1).
double rotor_energy(int l, const RotorConfig& cfg);

std::vector<EnergyLevel> rotor_spectrum(int l_max, const RotorConfig& cfg);

}  // namespace quon
