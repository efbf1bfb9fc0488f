#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robin/robin1d.hpp"

namespace robin {

struct IndexPair {
  int i = 0;
  int j = 0;
  auto operator<=>(const IndexPair&) const = default;
};

struct EigenLevel {
  double value = 0.0;
  std::vector<IndexPair> pairs;  // both orders kept, lexicographic
  int label_lo = 0;              // 1-based, inclusive
  int label_hi = 0;
  double h = 0.0;

  int multiplicity() const { return static_cast<int>(pairs.size()); }
  bool contains(IndexPair p) const;
};

class CompletenessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectrumTable {
  double h = 0.0;
  double lambda_max = 0.0;
  double cluster_tol = 1e-9;
  int index_cap = 0;
  std::vector<AlphaBranch> alphas;  // alphas[i] = alpha_i(h), i <= index_cap
  std::vector<EigenLevel> levels;

  int label_count() const;
  // Throws std::out_of_range for labels outside the table.
  const EigenLevel& level_of_label(int n) const;
  std::size_t level_index_of_label(int n) const;
  std::optional<std::size_t> level_index_of_pair(IndexPair p) const;
  double pair_value(IndexPair p) const;  // needs both indices <= index_cap
};

inline constexpr double default_cluster_tol = 1e-9;

// Eigenvalue (alpha_i^2 + alpha_j^2)/pi^2, exact i^2 + j^2 at h = 0.
double pair_eigenvalue(int i, int j, double h);

// index_cap defaults to ceil(sqrt(lambda_max)) + 2. An explicit cap that
// cannot cover lambda_max raises CompletenessFailure.
SpectrumTable build_spectrum(double h, double lambda_max,
                             double cluster_tol = default_cluster_tol,
                             std::optional<int> index_cap = std::nullopt);

// #labels with eigenvalue strictly below lambda.
int counting_function(const SpectrumTable& table, double lambda);

struct WeylCheck {
  double lambda = 0.0;
  int count = 0;
  double lower = 0.0;  // pi/4 lambda, strict
  double upper = 0.0;  // pi/4 lambda + 2 floor(sqrt lambda) + 1
  double lower_margin = 0.0;
  double upper_margin = 0.0;
  bool pass = false;
};

// Neumann only; throws std::invalid_argument if table.h != 0.
WeylCheck weyl_sandwich_check(const SpectrumTable& table, double lambda);

struct JnValue {
  int n = 0;
  int j_n = 0;
};

JnValue jn_value(const SpectrumTable& table, int n);

struct Contradiction {
  std::string rule;
  std::string detail;
};

struct CrossingResult {
  IndexPair a;
  IndexPair b;
  std::optional<double> h_star;
  int sign_changes = 0;
  // Set when a nested pair ordering p < p' <= q' < q applies and was sampled
  // past h_star.
  bool ordering_checked = false;
  bool ordering_holds = true;
  std::optional<Contradiction> contradiction;
};

// Pairs are normalised to i <= j; identical normalised pairs are rejected
// with std::invalid_argument.
CrossingResult find_crossing(IndexPair a, IndexPair b, double h_max,
                             int samples = 400);

struct SubLevel {
  double value = 0.0;
  std::vector<IndexPair> pairs;
};

struct DecayReport {
  double h_probe = 0.0;
  std::vector<SubLevel> sublevels;  // ascending
  bool refines = true;
  std::optional<Contradiction> contradiction;
};

// level must come from an h = 0 table; 0 < h_probe <= 0.05.
DecayReport multiplicity_decay_check(const EigenLevel& level, double h_probe,
                                     double cluster_tol = default_cluster_tol);

}  // namespace robin
