#include "quon/symsector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "quon/parallel.hpp"

namespace quon {

unsigned thread_count() {
  if (const char* env = std::getenv("QUON_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::min<std::size_t>(thread_count(), n ? n : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n);  // drain remaining work
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

OccupancyVector::OccupancyVector(std::initializer_list<std::pair<Mode, int>> counts) {
  for (const auto& [m, c] : counts) {
    if (c < 0) throw std::invalid_argument("occupancy counts must be non-negative");
    if (c > 0) {
      counts_[m] += c;
      total_ += c;
    }
  }
}

OccupancyVector::OccupancyVector(const std::map<Mode, int>& counts) {
  for (const auto& [m, c] : counts) {
    if (c < 0) throw std::invalid_argument("occupancy counts must be non-negative");
    if (c > 0) {
      counts_[m] = c;
      total_ += c;
    }
  }
}

int OccupancyVector::count(Mode m) const {
  auto it = counts_.find(m);
  return it == counts_.end() ? 0 : it->second;
}

OccupancyVector OccupancyVector::lowered(Mode m) const {
  if (count(m) == 0) throw std::domain_error("cannot lower an empty mode");
  OccupancyVector out(*this);
  if (--out.counts_[m] == 0) out.counts_.erase(m);
  --out.total_;
  return out;
}

OccupancyVector OccupancyVector::raised(Mode m) const {
  OccupancyVector out(*this);
  ++out.counts_[m];
  ++out.total_;
  return out;
}

std::string OccupancyVector::to_string() const {
  std::string s;
  for (const auto& [m, c] : counts_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(int(m)) + ":" + std::to_string(c);
  }
  return s.empty() ? "vacuum" : s;
}

std::vector<CreationWord> enumerate_permutation_words(const OccupancyVector& occ, int cap) {
  const int n = occ.total();
  if (n < 1) throw std::invalid_argument("enumerate_permutation_words: N must be >= 1");
  if (n > cap) throw CapExceeded("quon number " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
  CreationWord base;
  base.reserve(n);
  for (const auto& [m, c] : occ.counts()) base.insert(base.end(), c, m);
  std::vector<CreationWord> words;
  do {
    words.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return words;
}

Eigen::MatrixXd gram_matrix(const std::vector<CreationWord>& words, DeformationParameter q) {
  const std::size_t n = words.size();
  Eigen::MatrixXd g(n, n);
  // upper triangle incl. diagonal; entries are independent pure computations
  parallel_for(n * (n + 1) / 2, [&](std::size_t idx) {
    // unrank row-major upper-triangular index
    std::size_t a = 0, offset = idx;
    while (offset >= n - a) {
      offset -= n - a;
      ++a;
    }
    const std::size_t b = a + offset;
    g(a, b) = vev_qpermanent(words[a], words[b], q);
    if (a != b) g(b, a) = g(a, b);
  });
  return g;
}

std::vector<std::vector<QPoly>> gram_matrix_poly(const std::vector<CreationWord>& words) {
  const std::size_t n = words.size();
  std::vector<std::vector<QPoly>> g(n, std::vector<QPoly>(n));
  parallel_for(n * (n + 1) / 2, [&](std::size_t idx) {
    std::size_t a = 0, offset = idx;
    while (offset >= n - a) {
      offset -= n - a;
      ++a;
    }
    const std::size_t b = a + offset;
    g[a][b] = vev_qpermanent_poly(words[a], words[b]);
    if (a != b) g[b][a] = g[a][b];
  });
  return g;
}

PermutationAction permutation_action(const std::vector<CreationWord>& words) {
  PermutationAction act;
  act.word_count = words.size();
  if (words.empty()) return act;
  const CreationWord& base = words.front();  // lexicographically least = sorted
  act.all_distinct =
      std::adjacent_find(base.begin(), base.end()) == base.end();
  const auto n = static_cast<Eigen::Index>(words.size());
  act.uniform = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  if (act.all_distinct) {
    act.sign.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const CreationWord& w = words[static_cast<std::size_t>(j)];
      int inv = 0;
      for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
          if (w[a] > w[b]) ++inv;
      act.sign(j) = (inv % 2 == 0 ? 1.0 : -1.0) / std::sqrt(double(n));
    }
  }
  return act;
}

std::string SectorLabel::to_string() const {
  switch (kind) {
    case SectorKind::Symmetric: return "symmetric";
    case SectorKind::Antisymmetric: return "antisymmetric";
    case SectorKind::Mixed:
      return ordinal > 0 ? "mixed(" + std::to_string(ordinal) + ")" : "mixed";
  }
  return "?";
}

int GramSpectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& c : clusters) t += c.multiplicity;
  return t;
}

const GramCluster* GramSpectrum::find(SectorKind kind) const {
  for (const auto& c : clusters)
    if (c.label.kind == kind) return &c;
  return nullptr;
}

GramSpectrum classify_sectors(const Eigen::MatrixXd& gram, const PermutationAction& action,
                              double tol) {
  const Eigen::Index n = gram.rows();
  if (n == 0 || gram.cols() != n) throw std::invalid_argument("classify_sectors: bad matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("classify_sectors: eigen-decomposition failed");

  GramSpectrum spec;
  spec.eigenvectors.resize(n, n);
  spec.cluster_of_column.resize(static_cast<std::size_t>(n));
  // descending order
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());

  const double scale = std::max(std::abs(solver.eigenvalues()(n - 1)), 1e-300);
  spec.rank_threshold = 1e-10 * scale;

  std::vector<std::pair<double, int>> clusters;  // (representative, first column)
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double lam = solver.eigenvalues()(order[i]);
    spec.eigenvectors.col(static_cast<Eigen::Index>(i)) = solver.eigenvectors().col(order[i]);
    if (clusters.empty() || clusters.back().first - lam > tol * scale)
      clusters.emplace_back(lam, static_cast<int>(i));
    spec.cluster_of_column[i] = static_cast<int>(clusters.size()) - 1;
  }

  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const int first = clusters[k].second;
    const int last = (k + 1 < clusters.size()) ? clusters[k + 1].second : static_cast<int>(n);
    GramCluster c;
    c.multiplicity = last - first;
    // mean over the cluster
    double sum = 0.0;
    for (int i = first; i < last; ++i) sum += solver.eigenvalues()(order[static_cast<std::size_t>(i)]);
    c.eigenvalue = sum / c.multiplicity;
    c.null_state = std::abs(c.eigenvalue) < spec.rank_threshold;

    const auto block = spec.eigenvectors.middleCols(first, last - first);
    const double proj_u = (block.transpose() * action.uniform).squaredNorm();
    const double proj_s =
        action.all_distinct ? (block.transpose() * action.sign).squaredNorm() : 0.0;
    if (proj_u > 1.0 - 1e-8)
      c.label.kind = SectorKind::Symmetric;
    else if (proj_s > 1.0 - 1e-8)
      c.label.kind = SectorKind::Antisymmetric;
    else
      c.label.kind = SectorKind::Mixed;
    spec.clusters.push_back(std::move(c));
  }
  int mixed_ordinal = 0;
  for (auto& c : spec.clusters)
    if (c.label.kind == SectorKind::Mixed) c.label.ordinal = ++mixed_ordinal;
  return spec;
}

std::vector<QPoly> charpoly_exact(const std::vector<std::vector<QPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<QPoly> c(n + 1);
  c[n] = QPoly::one();
  std::vector<std::vector<QPoly>> work(n, std::vector<QPoly>(n));
  auto mul_into = [&](const std::vector<std::vector<QPoly>>& a) {
    std::vector<std::vector<QPoly>> out(n, std::vector<QPoly>(n));
    parallel_for(n * n, [&](std::size_t idx) {
      const std::size_t i = idx / n, j = idx % n;
      QPoly acc;
      for (std::size_t k = 0; k < n; ++k) acc += m[i][k] * a[k][j];
      out[i][j] = std::move(acc);
    });
    return out;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) work[i][i] += c[n - k + 1];
    work = mul_into(work);
    QPoly tr;
    for (std::size_t i = 0; i < n; ++i) tr += work[i][i];
    c[n - k] = (-tr).divided_exact(BigInt(k));
  }
  return c;
}

std::vector<BigRat> charpoly_rational(const std::vector<std::vector<BigRat>>& m) {
  const std::size_t n = m.size();
  std::vector<BigRat> c(n + 1, BigRat(0));
  c[n] = 1;
  std::vector<std::vector<BigRat>> work(n, std::vector<BigRat>(n, BigRat(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) work[i][i] += c[n - k + 1];
    std::vector<std::vector<BigRat>> out(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (m[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[i][j] += m[i][l] * work[l][j];
      }
    work = std::move(out);
    BigRat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += work[i][i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

// Synthetic division of Σ c_k λ^k by (λ - p); quotient replaces c (degree drops
// by one). Returns the remainder.
QPoly divide_linear(std::vector<QPoly>& c, const QPoly& p) {
  const std::size_t deg = c.size() - 1;
  std::vector<QPoly> quot(deg);
  QPoly acc = c[deg];
  for (std::size_t k = deg; k-- > 0;) {
    quot[k] = acc;
    acc = c[k] + acc * p;
  }
  c = std::move(quot);
  return acc;
}

// Greedy eigenvalue-track continuation across q samples, then integer
// reconstruction by least squares on a Vandermonde system. The window is much
// wider than the degree cap needs, which keeps the Vandermonde system well
// conditioned; the step stays small so track matching by extrapolation holds.
std::vector<QPoly> interpolate_candidates(const std::vector<CreationWord>& words, int deg_cap) {
  const std::size_t n = words.size();
  const std::size_t nsamp = std::max<std::size_t>(static_cast<std::size_t>(deg_cap) + 5, 31);
  std::vector<double> qs(nsamp);
  for (std::size_t k = 0; k < nsamp; ++k) qs[k] = 0.10 + 0.01 * static_cast<double>(k);

  std::vector<std::vector<double>> tracks(n);
  for (std::size_t s = 0; s < nsamp; ++s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram_matrix(words, qs[s]));
    Eigen::VectorXd lam = solver.eigenvalues().reverse();
    if (s == 0) {
      for (std::size_t i = 0; i < n; ++i) tracks[i].push_back(lam(static_cast<Eigen::Index>(i)));
      continue;
    }
    std::vector<bool> used(n, false);
    for (Eigen::Index e = 0; e < lam.size(); ++e) {
      double best = 0.0;
      std::size_t best_i = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        const auto& t = tracks[i];
        const double pred = t.size() >= 2 ? 2 * t.back() - t[t.size() - 2] : t.back();
        const double d = std::abs(pred - lam(e));
        if (best_i == n || d < best) {
          best = d;
          best_i = i;
        }
      }
      used[best_i] = true;
      tracks[best_i].push_back(lam(e));
    }
  }

  Eigen::MatrixXd vander(nsamp, deg_cap + 1);
  for (std::size_t s = 0; s < nsamp; ++s) {
    double p = 1.0;
    for (int d = 0; d <= deg_cap; ++d) {
      vander(static_cast<Eigen::Index>(s), d) = p;
      p *= qs[s];
    }
  }
  const auto qr = vander.colPivHouseholderQr();

  std::vector<QPoly> candidates;
  for (const auto& t : tracks) {
    Eigen::Map<const Eigen::VectorXd> y(t.data(), static_cast<Eigen::Index>(t.size()));
    Eigen::VectorXd coef = qr.solve(y);
    std::vector<BigInt> rounded(static_cast<std::size_t>(deg_cap) + 1);
    bool ok = true;
    for (int d = 0; d <= deg_cap; ++d) {
      const double r = std::round(coef(d));
      if (std::abs(coef(d) - r) > 1e-5 || std::abs(r) > 1e6) {
        ok = false;
        break;
      }
      rounded[static_cast<std::size_t>(d)] = BigInt(static_cast<long long>(r));
    }
    if (!ok) continue;
    QPoly p{std::move(rounded)};
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(std::move(p));
  }
  return candidates;
}

}  // namespace

ExactGramStructure exact_gram_structure(const OccupancyVector& occ) {
  const int n_quons = occ.total();
  if (n_quons < 1 || n_quons > 4)
    throw std::invalid_argument("exact_gram_structure: supported for 1 <= N <= 4");
  const auto words = enumerate_permutation_words(occ);
  const std::size_t n = words.size();
  const int deg_cap = n_quons * (n_quons - 1) / 2;

  // Certified candidates from the symmetrizer/antisymmetrizer directions:
  // every row of the Gram matrix sums to [N]!, and for all-distinct modes the
  // signed row sums reproduce the antisymmetric eigenvalue.
  const auto g = gram_matrix_poly(words);
  std::vector<QPoly> candidates;
  QPoly sym_poly, asym_poly;
  {
    QPoly row0;
    for (const auto& e : g[0]) row0 += e;
    bool uniform_ok = true;
    for (std::size_t i = 1; i < n && uniform_ok; ++i) {
      QPoly ri;
      for (const auto& e : g[i]) ri += e;
      uniform_ok = (ri == row0);
    }
    if (uniform_ok) {
      sym_poly = row0;
      candidates.push_back(row0);
    }
  }
  const auto act = permutation_action(words);
  if (act.all_distinct && n > 1) {
    std::vector<int> sgn(n);
    for (std::size_t j = 0; j < n; ++j)
      sgn[j] = act.sign(static_cast<Eigen::Index>(j)) > 0 ? 1 : -1;
    QPoly lam_a;
    for (std::size_t j = 0; j < n; ++j) {
      QPoly t = g[0][j];
      if (sgn[j] * sgn[0] < 0) t = -t;
      lam_a += t;
    }
    bool sign_ok = true;
    for (std::size_t i = 0; i < n && sign_ok; ++i) {
      QPoly ri;
      for (std::size_t j = 0; j < n; ++j) {
        QPoly t = g[i][j];
        if (sgn[j] < 0) t = -t;
        ri += t;
      }
      QPoly expect = sgn[i] < 0 ? -lam_a : lam_a;
      sign_ok = (ri == expect);
    }
    if (sign_ok) {
      asym_poly = lam_a;
      if (std::find(candidates.begin(), candidates.end(), lam_a) == candidates.end())
        candidates.push_back(lam_a);
    }
  }
  for (auto& p : interpolate_candidates(words, deg_cap))
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(std::move(p));

  auto make_cluster = [&](const QPoly& p, int mult) {
    ExactCluster c{p, mult, false, false};
    if (!sym_poly.is_zero() && p == sym_poly) c.symmetric = true;
    if (!asym_poly.is_zero() && p == asym_poly && !c.symmetric) c.antisymmetric = true;
    return c;
  };

  ExactGramStructure out;
  if (n <= 12) {
    // Bivariate proof: peel linear factors off the exact characteristic polynomial.
    auto c = charpoly_exact(g);
    for (const auto& p : candidates) {
      int mult = 0;
      while (c.size() > 1) {
        auto saved = c;
        if (!divide_linear(c, p).is_zero()) {
          c = std::move(saved);
          break;
        }
        ++mult;
      }
      if (mult > 0) out.clusters.push_back(make_cluster(p, mult));
    }
    out.unresolved_dimension = static_cast<int>(c.size()) - 1;
  } else {
    // Too large for bivariate arithmetic: verify by exact division of the
    // characteristic polynomial at several exact rational sample points.
    const std::vector<BigRat> samples = {BigRat(2, 5), BigRat(3, 7), BigRat(5, 11)};
    std::vector<std::vector<BigRat>> cs;
    for (const auto& qr : samples) {
      std::vector<std::vector<BigRat>> gm(n, std::vector<BigRat>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gm[i][j] = g[i][j].eval_exact(qr);
      cs.push_back(charpoly_rational(gm));
    }
    int resolved = 0;
    for (const auto& p : candidates) {
      int mult = -1;
      for (std::size_t s = 0; s < samples.size(); ++s) {
        const BigRat pv = p.eval_exact(samples[s]);
        auto c = cs[s];
        int m = 0;
        while (c.size() > 1) {
          std::vector<BigRat> quot(c.size() - 1);
          BigRat acc = c.back();
          for (std::size_t k = c.size() - 1; k-- > 0;) {
            quot[k] = acc;
            acc = c[k] + acc * pv;
          }
          if (acc != 0) break;
          c = std::move(quot);
          ++m;
        }
        if (mult < 0)
          mult = m;
        else if (mult != m)
          mult = 0;  // inconsistent across samples: reject
      }
      if (mult > 0) {
        out.clusters.push_back(make_cluster(p, mult));
        resolved += mult;
        // peel the factor off every sample so repeated candidates cannot double-count
        for (std::size_t s = 0; s < samples.size(); ++s) {
          const BigRat pv = p.eval_exact(samples[s]);
          for (int rep = 0; rep < mult; ++rep) {
            std::vector<BigRat> quot(cs[s].size() - 1);
            BigRat acc = cs[s].back();
            for (std::size_t k = cs[s].size() - 1; k-- > 0;) {
              quot[k] = acc;
              acc = cs[s][k] + acc * pv;
            }
            cs[s] = std::move(quot);
          }
        }
      }
    }
    out.unresolved_dimension = static_cast<int>(n) - resolved;
  }
  return out;
}

namespace {

std::vector<BigRat> rat_derivative(const std::vector<BigRat>& p) {
  std::vector<BigRat> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * k);
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

void rat_normalize(std::vector<BigRat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!p.empty()) {
    const BigRat lead = p.back();
    for (auto& c : p) c /= lead;
  }
}

std::vector<BigRat> rat_mod(std::vector<BigRat> u, const std::vector<BigRat>& v) {
  while (u.size() >= v.size() && !u.empty()) {
    const BigRat f = u.back() / v.back();
    const std::size_t off = u.size() - v.size();
    for (std::size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
    while (!u.empty() && u.back() == 0) u.pop_back();
  }
  return u;
}

std::vector<BigRat> rat_div(const std::vector<BigRat>& u0, const std::vector<BigRat>& v) {
  std::vector<BigRat> u = u0, q(u0.size() >= v.size() ? u0.size() - v.size() + 1 : 0, BigRat(0));
  while (u.size() >= v.size() && !u.empty()) {
    const BigRat f = u.back() / v.back();
    q[u.size() - v.size()] = f;
    const std::size_t off = u.size() - v.size();
    for (std::size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
    while (!u.empty() && u.back() == 0) u.pop_back();
  }
  return q;
}

std::vector<BigRat> rat_gcd(std::vector<BigRat> a, std::vector<BigRat> b) {
  rat_normalize(a);
  rat_normalize(b);
  while (!b.empty()) {
    auto r = rat_mod(a, b);
    rat_normalize(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

std::map<int, int> gram_multiplicity_profile(const OccupancyVector& occ, const BigRat& q) {
  const auto words = enumerate_permutation_words(occ);
  const std::size_t n = words.size();
  const auto g = gram_matrix_poly(words);
  std::vector<std::vector<BigRat>> gm(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gm[i][j] = g[i][j].eval_exact(q);
  auto a = charpoly_rational(gm);
  rat_normalize(a);

  // Musser square-free decomposition over Q.
  std::map<int, int> profile;
  auto gcd = rat_gcd(a, rat_derivative(a));
  auto w = rat_div(a, gcd);
  int mult = 1;
  while (w.size() > 1) {
    auto y = rat_gcd(w, gcd);
    auto z = rat_div(w, y);
    if (z.size() > 1) profile[mult] = static_cast<int>(z.size()) - 1;
    if (y.size() <= 1) break;
    gcd = rat_div(gcd, y);
    w = std::move(y);
    ++mult;
  }
  return profile;
}

GramSpectrum classify_occupancy(const OccupancyVector& occ, DeformationParameter q, bool exact,
                                int cap) {
  const auto words = enumerate_permutation_words(occ, cap);
  auto spec = classify_sectors(gram_matrix(words, q), permutation_action(words));
  if (!exact || occ.total() > 4) return spec;

  const auto structure = exact_gram_structure(occ);
  // Attach certified polynomials to float clusters that carry the same
  // eigenvalue and multiplicity.
  for (auto& c : spec.clusters) {
    for (const auto& ec : structure.clusters) {
      if (ec.multiplicity == c.multiplicity &&
          std::abs(ec.poly.eval(q) - c.eigenvalue) <=
              1e-6 * std::max(1.0, std::abs(c.eigenvalue)))
        c.exact_poly = ec.poly;
    }
  }
  // A complete certified structure also becomes the exact cluster list, which
  // keeps accidentally degenerate sectors apart (they merge in float space).
  int resolved = 0;
  for (const auto& ec : structure.clusters) resolved += ec.multiplicity;
  if (structure.unresolved_dimension == 0 && resolved == static_cast<int>(words.size())) {
    std::vector<GramCluster> out;
    for (const auto& ec : structure.clusters) {
      GramCluster c;
      c.eigenvalue = ec.poly.eval(q);
      c.multiplicity = ec.multiplicity;
      c.exact_poly = ec.poly;
      c.null_state = std::abs(c.eigenvalue) < spec.rank_threshold;
      if (ec.symmetric)
        c.label = {SectorKind::Symmetric, 0};
      else if (ec.antisymmetric)
        c.label = {SectorKind::Antisymmetric, 0};
      else
        c.label = {SectorKind::Mixed, 0};
      out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const GramCluster& a, const GramCluster& b) {
      return a.eigenvalue > b.eigenvalue;
    });
    int mixed_ordinal = 0;
    for (auto& c : out)
      if (c.label.kind == SectorKind::Mixed) c.label.ordinal = ++mixed_ordinal;
    spec.exact_clusters = std::move(out);
  }
  return spec;
}

FockVector<QPoly> symmetrized_word(const OccupancyVector& occ) {
  FockVector<QPoly> v;
  if (occ.total() == 0) {
    v.add_term({}, QPoly::one());
    return v;
  }
  for (const auto& w : enumerate_permutation_words(occ)) v.add_term(w, QPoly::one());
  return v;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

FockVector<double> symmetric_state(const OccupancyVector& occ, DeformationParameter q) {
  const int n = occ.total();
  if (n < 1) throw std::invalid_argument("symmetric_state: N must be >= 1");
  if (q.value() == -1.0 && n >= 2)
    throw std::domain_error("symmetric_state: null state at q = -1 ( [N]! vanishes )");
  double prod_fact = 1.0;
  for (const auto& [m, c] : occ.counts()) prod_fact *= factorial(c);
  const double norm2 = prod_fact / (factorial(n) * q_factorial(n, q));
  const double coeff = std::sqrt(norm2);
  FockVector<double> v;
  for (const auto& w : enumerate_permutation_words(occ)) v.add_term(w, coeff);
  return v;
}

Lowering lower_symmetric(const OccupancyVector& occ, Mode i, DeformationParameter q) {
  const int ni = occ.count(i);
  if (ni == 0) return {0.0, occ};
  const int n = occ.total();
  const double coeff = std::sqrt(q_bracket(n, q) / n) * std::sqrt(double(ni));
  return {coeff, occ.lowered(i)};
}

double raise_symmetric_matrix_element(const OccupancyVector& occ, Mode i,
                                      DeformationParameter q) {
  const int n = occ.total();
  return std::sqrt(q_bracket(n + 1, q) / (n + 1)) * std::sqrt(double(occ.count(i) + 1));
}

}  // namespace quon
