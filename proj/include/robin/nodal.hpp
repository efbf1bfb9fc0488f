#pragma once

#include <array>
#include <optional>
#include <vector>

#include "robin/spectrum.hpp"
#include "robin/theta_family.hpp"

namespace robin {

// Side order used throughout: x = -pi/2, x = +pi/2, y = -pi/2, y = +pi/2.
enum class Side { left = 0, right = 1, bottom = 2, top = 3 };
inline constexpr std::array<Side, 4> all_sides{Side::left, Side::right, Side::bottom, Side::top};
const char* side_name(Side s);

struct CountOptions {
  int level = 9;            // base grid is (2^level + 1)^2
  int max_level = 11;       // certification escalates up to here
  int refine_levels = 2;    // mixed cells get a 2^refine_levels finer lattice
  double eps_node = 1e-12;  // relative to max |Phi| on the grid
  int boundary_samples = 4096;
};

struct LevelCount {
  int level = 0;
  int mu = 0;
  int mu_inn = 0;
  int mu_out = 0;
};

struct NodalCountResult {
  int p = 0, q = 0;
  double theta = 0.0, h = 0.0;
  int mu = 0;
  int mu_inn = 0;
  int mu_out = 0;
  std::array<int, 4> boundary_zeros{};  // zeros on each open side
  std::array<int, 4> tangencies{};      // of which touch without a sign change
  int level = 0;                        // finest level used
  bool certified = false;
  std::vector<LevelCount> counts;       // every level evaluated, in order
  std::optional<Contradiction> contradiction;  // mu_out > 4 sqrt(lambda)
};

// Counts at a single resolution with adaptive refinement of mixed cells.
LevelCount count_at_level(const ThetaFamily& f, int level, const CountOptions& opts = {});

// Counts at opts.level and the next level; on disagreement keeps going up
// to opts.max_level. certified means two consecutive levels agreed.
// Throws std::invalid_argument for level < 6.
NodalCountResult count_nodal_domains(const ThetaFamily& f, const CountOptions& opts = {});

// Recomputes the inner/outer split at the result's level and checks
// mu_out <= 4 sqrt(lambda).
std::pair<int, int> classify_inner_outer(NodalCountResult& result, const ThetaFamily& f,
                                         const CountOptions& opts = {});

struct SideZeros {
  Side side = Side::left;
  int sign_changes = 0;
  int tangencies = 0;
  std::vector<double> zeros;           // positions along the side
  std::vector<double> tangency_points;
  int count() const { return sign_changes + tangencies; }
};

// Zeros of Phi restricted to the open side, parameterised by the free
// coordinate in (-pi/2, pi/2).
SideZeros boundary_zeros(const ThetaFamily& f, Side side, int samples = 4096);

// Phi on a side as a function of the free coordinate.
double side_value(const ThetaFamily& f, Side side, double t);
double side_derivative(const ThetaFamily& f, Side side, double t);

// Distinct zeros on the closed boundary: open-side zeros plus corners.
int boundary_zero_points(const ThetaFamily& f, int samples = 4096);
int corner_zero_count(const ThetaFamily& f, double rel_tol = 1e-9);

struct SymmetryEntry {
  double theta = 0.0;
  int mu = 0;
  int mu_reflected = 0;           // at pi/2 - theta
  std::optional<int> mu_flipped;  // at pi - theta, p + q odd only
  bool certified = true;
  bool ok = true;
};

struct SymmetryReport {
  int p = 0, q = 0;
  double h = 0.0;
  bool pass = true;
  std::vector<SymmetryEntry> entries;
  std::optional<Contradiction> contradiction;
};

SymmetryReport theta_symmetry_check(int p, int q, double h, const std::vector<double>& thetas,
                                    const CountOptions& opts = {});

// Uniform sample grid used by counting and contour export. values[i * (n+1) + j]
// holds Phi(x_i, y_j) with x_i = (i - n/2) pi / n.
struct SampleGrid {
  int n = 0;
  std::vector<double> coords;
  std::vector<double> values;
  double max_abs = 0.0;
};

SampleGrid sample_grid(const ThetaFamily& f, int level);
double grid_coord(long k, long n);

}  // namespace robin
