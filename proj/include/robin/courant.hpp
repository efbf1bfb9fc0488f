#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robin/critical.hpp"
#include "robin/nodal.hpp"
#include "robin/spectrum.hpp"

namespace robin {

enum class Status { courant_sharp, not_courant_sharp, undecided };
const char* status_name(Status s);

enum class Subspace { ARot, SRot, AMir };
const char* subspace_name(Subspace s);

// Rule ids, in the order the scan applies them.
namespace rule {
inline constexpr const char* known_case = "known-case";
inline constexpr const char* global_bound = "global-bound";
inline constexpr const char* pleijel = "pleijel";
inline constexpr const char* leydold_arot = "leydold-ARot";
inline constexpr const char* leydold_srot = "leydold-SRot";
inline constexpr const char* leydold_amir = "leydold-AMir";
inline constexpr const char* folding = "folding";
inline constexpr const char* pp = "pp-rule";
inline constexpr const char* parity = "parity";
inline constexpr const char* courant_bound = "courant-bound";
inline constexpr const char* numeric = "numeric-count";
}  // namespace rule

struct CourantVerdict {
  int n = 0;
  double h = 0.0;
  Status status = Status::undecided;
  std::string decided_by;  // empty when undecided
  std::map<std::string, double> evidence;
  std::vector<std::string> fired;  // every rule that eliminated n
  std::optional<Contradiction> contradiction;
};

// -- global thresholds ------------------------------------------------------
// Smallest n0 such that the inequality rules out every n >= n0.
// Neumann path: n < (4/j^2)(n-1) + (8/sqrt(pi)) sqrt(n-1).
// h-uniform path: counting bound n > (pi/4) lambda - 2 sqrt(lambda) + 2
// combined with n <= (pi/j^2) lambda + 4 sqrt(lambda).
int global_bound_threshold(bool neumann);
bool neumann_bound_holds(int n);    // true if n may still be Courant-sharp
bool h_uniform_bound_holds(int n);  // same for the h-uniform chain
double neumann_bound_rhs(int n);

// -- per-rule fragments -----------------------------------------------------
struct RuleResult {
  bool applicable = false;
  bool eliminated = false;
  std::map<std::string, double> evidence;
};

RuleResult pleijel_check(const SpectrumTable& t, int n);
bool in_subspace(Subspace s, IndexPair p);
// 1 + number of subspace eigenvalues (with multiplicity) strictly below
// lambda_n. Only meaningful when every pair of lambda_n lies in s.
int subspace_rank(const SpectrumTable& t, int n, Subspace s);
RuleResult leydold_bound(const SpectrumTable& t, int n, Subspace s);
int folding_bound(int p, int q, int known_mu_half);
RuleResult pp_rule(const SpectrumTable& t, int n);

// -- scan -------------------------------------------------------------------
struct ScanOptions {
  double h = 0.0;
  int n_max = 208;
  int theta_samples = 97;  // uniform k pi / samples, plus critical thetas
  bool use_symmetry = true;
  int jobs = 1;
  CountOptions count;
};

struct ScanReport {
  double h = 0.0;
  std::vector<CourantVerdict> verdicts;
  std::vector<Contradiction> contradictions;
};

// The theta grid used for a family: uniform samples, corner thetas and
// boundary critical thetas, optionally folded by theta -> pi/2 - theta.
std::vector<double> scan_thetas(int p, int q, double h, int samples, bool use_symmetry);

ScanReport courant_scan(const ScanOptions& opts);

// -- case tables ------------------------------------------------------------
struct TableProbe {
  double theta = 0.0;
  int mu = 0;
  int boundary_points = 0;
  int interior_points = 0;
  bool certified = false;
};

struct TableRow {
  std::string region;
  double lo = 0.0, hi = 0.0;
  int expected_mu = 0;
  int expected_boundary = -1;  // -1: not part of this table
  int expected_interior = -1;
  std::vector<TableProbe> probes;
  bool matches = true;
};

struct TransitionTable {
  double h = 0.0;
  std::vector<TableRow> rows;
  std::optional<Contradiction> contradiction;
};

// Requires 0 < h <= 0.05.
TransitionTable transition_table_02(double h, const CountOptions& opts = {});
TransitionTable transition_table_03(double h, const CountOptions& opts = {});

}  // namespace robin
