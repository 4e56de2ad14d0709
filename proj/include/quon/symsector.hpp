#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quon/fock.hpp"
#include "quon/qnum.hpp"

namespace quon {

/// Guard against factorial blowup in permutation-word enumeration.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultQuonCap = 8;

/// Mode -> count map labelling a symmetric-subspace state |n_i n_j ...; S>.
/// Modes with zero count are absent; total() is the quon number N.
class OccupancyVector {
 public:
  OccupancyVector() = default;
  OccupancyVector(std::initializer_list<std::pair<Mode, int>> counts);
  explicit OccupancyVector(const std::map<Mode, int>& counts);

  int count(Mode m) const;
  int total() const { return total_; }
  int distinct_modes() const { return static_cast<int>(counts_.size()); }
  const std::map<Mode, int>& counts() const { return counts_; }

  OccupancyVector lowered(Mode m) const;
  OccupancyVector raised(Mode m) const;

  bool operator==(const OccupancyVector&) const = default;
  auto operator<=>(const OccupancyVector& rhs) const { return counts_ <=> rhs.counts_; }

  std::string to_string() const;

 private:
  std::map<Mode, int> counts_;
  int total_ = 0;
};

/// All N!/(Π n_m!) distinct orderings of the occupancy's creation word, in
/// lexicographic order. Throws CapExceeded for N > cap.
std::vector<CreationWord> enumerate_permutation_words(const OccupancyVector& occ,
                                                      int cap = kDefaultQuonCap);

/// Overlap matrix: entry (a, b) = <words[a]|words[b]>.
Eigen::MatrixXd gram_matrix(const std::vector<CreationWord>& words, DeformationParameter q);
std::vector<std::vector<QPoly>> gram_matrix_poly(const std::vector<CreationWord>& words);

/// Data of the index-swap representation on the word basis: the normalized
/// uniform vector spans the symmetrizer direction; the signed vector spans the
/// antisymmetrizer direction and exists only when all modes are distinct.
struct PermutationAction {
  std::size_t word_count = 0;
  bool all_distinct = false;
  Eigen::VectorXd uniform;
  Eigen::VectorXd sign;
};

PermutationAction permutation_action(const std::vector<CreationWord>& words);

enum class SectorKind { Symmetric, Antisymmetric, Mixed };

struct SectorLabel {
  SectorKind kind = SectorKind::Mixed;
  int ordinal = 0;  // 1-based among mixed clusters, by descending eigenvalue
  std::string to_string() const;
};

struct GramCluster {
  double eigenvalue = 0.0;
  int multiplicity = 0;
  SectorLabel label;
  bool null_state = false;  // below the rank threshold (relevant at q -> ±1)
  std::optional<QPoly> exact_poly;
};

/// Eigen-structure of a permutation-word Gram matrix. Clusters are ordered by
/// descending eigenvalue; eigenvector columns are grouped accordingly.
/// exact_clusters, when non-empty, is the certified exact refinement of the
/// float clustering; it can split clusters the float pass merged at an
/// accidentally degenerate q.
struct GramSpectrum {
  std::vector<GramCluster> clusters;
  Eigen::MatrixXd eigenvectors;        // orthonormal, column i belongs to
  std::vector<int> cluster_of_column;  // cluster_of_column[i]
  double rank_threshold = 0.0;
  std::vector<GramCluster> exact_clusters;

  int total_multiplicity() const;
  const GramCluster* find(SectorKind kind) const;
};

/// Diagonalizes the Gram matrix, groups eigenvalues within relative tolerance,
/// and labels each cluster by projecting its eigenspace onto the symmetrizer
/// and antisymmetrizer directions.
GramSpectrum classify_sectors(const Eigen::MatrixXd& gram, const PermutationAction& action,
                              double tol = 1e-9);

/// classify_sectors over the occupancy's own words, with exact per-cluster
/// polynomials attached where exact_gram_structure can certify them (N <= 4).
GramSpectrum classify_occupancy(const OccupancyVector& occ, DeformationParameter q,
                                bool exact = false, int cap = kDefaultQuonCap);

/// Monic characteristic polynomial of an exact matrix, index k = coefficient
/// of λ^k, computed by the Faddeev-LeVerrier recurrence (all divisions exact).
std::vector<QPoly> charpoly_exact(const std::vector<std::vector<QPoly>>& m);
std::vector<BigRat> charpoly_rational(const std::vector<std::vector<BigRat>>& m);

struct ExactCluster {
  QPoly poly;
  int multiplicity = 0;
  bool symmetric = false;      // certified row-sum eigenvector (all-ones)
  bool antisymmetric = false;  // certified signed row-sum eigenvector
};

/// Integer-polynomial eigenvalues of the occupancy's Gram matrix together
/// with their multiplicities, certified by exact division of the
/// characteristic polynomial. unresolved_dimension counts eigenvalues (with
/// multiplicity) that are not integer polynomials in q; such clusters exist
/// from N = 4 on and carry no closed form.
struct ExactGramStructure {
  std::vector<ExactCluster> clusters;
  int unresolved_dimension = 0;
};

ExactGramStructure exact_gram_structure(const OccupancyVector& occ);

/// Multiplicity profile {multiplicity -> number of distinct eigenvalues} of
/// the Gram matrix at an exact rational q, from the square-free decomposition
/// of the characteristic polynomial. Exact; independent of any float tolerance.
std::map<int, int> gram_multiplicity_profile(const OccupancyVector& occ, const BigRat& q);

/// Ŝ_N (a†_i)^{n_i} (a†_j)^{n_j} ... |0>: the un-normalized symmetrizer image,
/// which collapses to unit coefficient on every distinct permutation word.
FockVector<QPoly> symmetrized_word(const OccupancyVector& occ);

/// Normalized symmetric N-quon state: coefficient sqrt(Π n_m!/(N! [N]!)) on
/// each distinct permutation word.
FockVector<double> symmetric_state(const OccupancyVector& occ, DeformationParameter q);

struct Lowering {
  double coefficient = 0.0;
  OccupancyVector occ;
};

/// a_i |n; S> = sqrt([N]/N) sqrt(n_i) |n - e_i; S>. Annihilating an empty
/// mode returns coefficient 0 with the occupancy unchanged.
Lowering lower_symmetric(const OccupancyVector& occ, Mode i, DeformationParameter q);

/// <n + e_i; S| a†_i |n; S> = sqrt([N+1]/(N+1)) sqrt(n_i + 1). A matrix
/// element only: a†_i applied to a symmetric state is not itself symmetric.
double raise_symmetric_matrix_element(const OccupancyVector& occ, Mode i,
                                      DeformationParameter q);

}  // namespace quon
