#include "robin/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "robin/simd/grid_kernels.hpp"

namespace robin {

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::bottom: return "bottom";
    case Side::top: return "top";
  }
  return "?";
}

double grid_coord(long k, long n) { return double(k - n / 2) * (pi / double(n)); }

SampleGrid sample_grid(const ThetaFamily& f, int level) {
  if (level < 1 || level > 14) throw std::invalid_argument("sample_grid: level out of range");
  SampleGrid g;
  g.n = 1 << level;
  const std::size_t m = g.n + 1;
  g.coords.resize(m);
  std::vector<double> a(m), b(m);
  for (std::size_t k = 0; k < m; ++k) {
    g.coords[k] = grid_coord(long(k), g.n);
    a[k] = eval_u(f.branch_p(), g.coords[k]);
    b[k] = eval_u(f.branch_q(), g.coords[k]);
  }
  const auto& kern = simd::active();
  g.values.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    kern.phi_row(f.c() * a[i], f.s() * b[i], b.data(), a.data(), g.values.data() + i * m, m);
  g.max_abs = kern.max_abs(g.values.data(), g.values.size());
  return g;
}

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

constexpr std::int32_t kNone = -1;

// One counting pass. Coarse nodes are (N+1)^2 samples; every refined cell
// carries a (R+1)^2 fine lattice on the same exact coordinates.
class Counter {
 public:
  Counter(const ThetaFamily& f, int level, const CountOptions& opts)
      : f_(f), n_(1L << level), r_(1L << opts.refine_levels), nf_(n_ * r_), m_(n_ + 1),
        lr_(r_ + 1) {
    fa_.resize(nf_ + 1);
    fb_.resize(nf_ + 1);
    for (long k = 0; k <= nf_; ++k) {
      const double x = grid_coord(k, nf_);
      fa_[k] = eval_u(f.branch_p(), x);
      fb_[k] = eval_u(f.branch_q(), x);
    }
    std::vector<double> a(m_), b(m_);
    for (long i = 0; i < m_; ++i) {
      a[i] = fa_[i * r_];
      b[i] = fb_[i * r_];
    }
    const auto& kern = simd::active();
    std::vector<double> vals(std::size_t(m_) * m_);
    for (long i = 0; i < m_; ++i)
      kern.phi_row(f.c() * a[i], f.s() * b[i], b.data(), a.data(), vals.data() + i * m_, m_);
    const double scale = kern.max_abs(vals.data(), vals.size());
    if (!(scale > 0.0)) throw std::runtime_error("count: eigenfunction vanishes on the grid");
    eps_ = opts.eps_node * scale;
    sign_.resize(vals.size());
    kern.classify(vals.data(), eps_, sign_.data(), vals.size());
  }

  LevelCount run(int level) {
    refine();
    label_cells();
    DisjointSet ds(total_);
    link(ds);
    return tally(ds, level);
  }

 private:
  // -- sampling ------------------------------------------------------------
  std::int8_t fine_sign(long I, long J) const {
    const double r1 = f_.c() * fa_[I], r2 = f_.s() * fb_[I];
    const double v = r1 * fb_[J] + r2 * fa_[J];
    return v > eps_ ? 1 : (v < -eps_ ? -1 : 0);
  }
  std::int8_t coarse_sign(long i, long j) const { return sign_[i * m_ + j]; }
  bool on_boundary(long I, long J) const { return I == 0 || J == 0 || I == nf_ || J == nf_; }

  // Common sign of the four corners, 0 if mixed or touching zero.
  std::int8_t uniform(long ci, long cj) const {
    const std::int8_t s = coarse_sign(ci, cj);
    if (s == 0) return 0;
    if (coarse_sign(ci + 1, cj) != s || coarse_sign(ci, cj + 1) != s ||
        coarse_sign(ci + 1, cj + 1) != s)
      return 0;
    return s;
  }

  long cell(long ci, long cj) const { return ci * n_ + cj; }
  std::size_t lidx(long k, long l) const { return std::size_t(k * lr_ + l); }

  std::int8_t& lsign(std::int32_t slot, long k, long l) {
    return lsign_[std::size_t(slot) * lr_ * lr_ + lidx(k, l)];
  }
  std::int32_t& lcomp(std::int32_t slot, long k, long l) {
    return lcomp_[std::size_t(slot) * lr_ * lr_ + lidx(k, l)];
  }

  // -- refinement ----------------------------------------------------------
  void refine() {
    slot_.assign(std::size_t(n_) * n_, kNone);
    std::vector<long> queue;
    for (long ci = 0; ci < n_; ++ci)
      for (long cj = 0; cj < n_; ++cj)
        if (uniform(ci, cj) == 0) push(queue, ci, cj);

    for (std::size_t head = 0; head < queue.size(); ++head) {
      const long ci = queue[head] / n_, cj = queue[head] % n_;
      const std::int32_t slot = slot_[queue[head]];
      for (long k = 0; k <= r_; ++k)
        for (long l = 0; l <= r_; ++l) lsign(slot, k, l) = fine_sign(ci * r_ + k, cj * r_ + l);

      // A uniform neighbour whose shared edge carries a different fine sign
      // is not really uniform; refine it too.
      const long nb[4][2] = {{ci - 1, cj}, {ci + 1, cj}, {ci, cj - 1}, {ci, cj + 1}};
      for (int d = 0; d < 4; ++d) {
        const long ni = nb[d][0], nj = nb[d][1];
        if (ni < 0 || nj < 0 || ni >= n_ || nj >= n_) continue;
        if (slot_[cell(ni, nj)] != kNone) continue;
        const std::int8_t u = uniform(ni, nj);
        bool differs = false;
        for (long t = 0; t <= r_ && !differs; ++t) {
          std::int8_t s;
          switch (d) {
            case 0: s = lsign(slot, 0, t); break;
            case 1: s = lsign(slot, r_, t); break;
            case 2: s = lsign(slot, t, 0); break;
            default: s = lsign(slot, t, r_); break;
          }
          differs = s != u;
        }
        if (differs) push(queue, ni, nj);
      }
    }
    cells_ = std::move(queue);
  }

  void push(std::vector<long>& queue, long ci, long cj) {
    slot_[cell(ci, cj)] = static_cast<std::int32_t>(queue.size());
    queue.push_back(cell(ci, cj));
    lsign_.resize(queue.size() * lr_ * lr_);
  }

  // -- local components ----------------------------------------------------
  bool linkable(long I1, long J1, long I2, long J2) const {
    return !(on_boundary(I1, J1) && on_boundary(I2, J2));
  }

  void label_cells() {
    lcomp_.assign(lsign_.size(), kNone);
    base_.resize(cells_.size());
    comp_interior_.clear();
    std::uint32_t next = std::uint32_t(m_ * m_);
    std::vector<std::pair<long, long>> stack;
    for (std::size_t slot = 0; slot < cells_.size(); ++slot) {
      const std::int32_t sl = std::int32_t(slot);
      const long ci = cells_[slot] / n_, cj = cells_[slot] % n_;
      base_[slot] = next;
      std::int32_t ncomp = 0;
      for (long k0 = 0; k0 <= r_; ++k0)
        for (long l0 = 0; l0 <= r_; ++l0) {
          const std::int8_t s = lsign(sl, k0, l0);
          if (s == 0 || lcomp(sl, k0, l0) != kNone) continue;
          bool interior = false;
          lcomp(sl, k0, l0) = ncomp;
          stack.assign(1, {k0, l0});
          while (!stack.empty()) {
            auto [k, l] = stack.back();
            stack.pop_back();
            const long I = ci * r_ + k, J = cj * r_ + l;
            interior |= !on_boundary(I, J);
            auto visit = [&](long k2, long l2) {
              if (k2 < 0 || l2 < 0 || k2 > r_ || l2 > r_) return;
              if (lsign(sl, k2, l2) != s || lcomp(sl, k2, l2) != kNone) return;
              if (!linkable(I, J, ci * r_ + k2, cj * r_ + l2)) return;
              lcomp(sl, k2, l2) = ncomp;
              stack.push_back({k2, l2});
            };
            visit(k - 1, l);
            visit(k + 1, l);
            visit(k, l - 1);
            visit(k, l + 1);
            if ((I == 0 || I == nf_) && (J == 0 || J == nf_))
              visit(I == 0 ? k + 1 : k - 1, J == 0 ? l + 1 : l - 1);
            else if ((I == 1 || I == nf_ - 1) && (J == 1 || J == nf_ - 1))
              visit(I == 1 ? k - 1 : k + 1, J == 1 ? l - 1 : l + 1);  // back to the corner
          }
          comp_interior_.push_back(interior);
          ++ncomp;
        }
      next += std::uint32_t(ncomp);
    }
    total_ = next;
  }

  // -- global linking ------------------------------------------------------
  std::uint32_t node(long i, long j) const { return std::uint32_t(i * m_ + j); }
  bool refined(long ci, long cj) const {
    return ci >= 0 && cj >= 0 && ci < n_ && cj < n_ && slot_[cell(ci, cj)] != kNone;
  }

  void link(DisjointSet& ds) {
    for (std::size_t slot = 0; slot < cells_.size(); ++slot) {
      const std::int32_t sl = std::int32_t(slot);
      const long ci = cells_[slot] / n_, cj = cells_[slot] % n_;
      auto elem = [&](std::int32_t s2, long k, long l) -> std::int64_t {
        const std::int32_t c = lcomp(s2, k, l);
        return c == kNone ? -1 : std::int64_t(base_[s2]) + c;
      };
      for (long k : {0L, r_})
        for (long l : {0L, r_}) {
          auto e = elem(sl, k, l);
          if (e >= 0) ds.unite(std::uint32_t(e), node(ci + k / r_, cj + l / r_));
        }
      // right and top neighbours; left/bottom are handled from the other side
      // when refined, and here when not
      const long nb[4][2] = {{ci - 1, cj}, {ci + 1, cj}, {ci, cj - 1}, {ci, cj + 1}};
      for (int d = 0; d < 4; ++d) {
        const long ni = nb[d][0], nj = nb[d][1];
        if (ni < 0 || nj < 0 || ni >= n_ || nj >= n_) continue;
        auto mine = [&](long t) -> std::pair<long, long> {
          switch (d) {
            case 0: return {0, t};
            case 1: return {r_, t};
            case 2: return {t, 0};
            default: return {t, r_};
          }
        };
        if (refined(ni, nj)) {
          if (d == 0 || d == 2) continue;
          const std::int32_t other = slot_[cell(ni, nj)];
          for (long t = 0; t <= r_; ++t) {
            auto [k, l] = mine(t);
            const long k2 = d == 1 ? 0 : k, l2 = d == 3 ? 0 : l;
            auto e1 = elem(sl, k, l), e2 = elem(other, k2, l2);
            if (e1 >= 0 && e2 >= 0) ds.unite(std::uint32_t(e1), std::uint32_t(e2));
          }
        } else {
          // uniform neighbour: everything of its sign on the edge joins it
          const std::int8_t u = uniform(ni, nj);
          const std::uint32_t anchor = node(std::max(ci, ni), std::max(cj, nj));
          for (long t = 0; t <= r_; ++t) {
            auto [k, l] = mine(t);
            auto e = elem(sl, k, l);
            if (e >= 0 && lsign(sl, k, l) == u) ds.unite(std::uint32_t(e), anchor);
          }
        }
      }
    }

    // coarse edges with no refined cell on either side
    for (long i = 0; i < m_; ++i)
      for (long j = 0; j < m_; ++j) {
        const std::int8_t s = coarse_sign(i, j);
        if (s == 0) continue;
        if (i + 1 < m_ && coarse_sign(i + 1, j) == s && !refined(i, j - 1) && !refined(i, j) &&
            linkable(i * r_, j * r_, (i + 1) * r_, j * r_))
          ds.unite(node(i, j), node(i + 1, j));
        if (j + 1 < m_ && coarse_sign(i, j + 1) == s && !refined(i - 1, j) && !refined(i, j) &&
            linkable(i * r_, j * r_, i * r_, (j + 1) * r_))
          ds.unite(node(i, j), node(i, j + 1));
      }
    // square corners of unrefined corner cells
    for (long ci : {0L, n_ - 1})
      for (long cj : {0L, n_ - 1}) {
        if (refined(ci, cj)) continue;
        const long ki = ci == 0 ? 0 : n_, kj = cj == 0 ? 0 : n_;
        const long di = ci == 0 ? 1 : n_ - 1, dj = cj == 0 ? 1 : n_ - 1;
        if (coarse_sign(ki, kj) != 0 && coarse_sign(ki, kj) == coarse_sign(di, dj))
          ds.unite(node(ki, kj), node(di, dj));
      }
  }

  // -- counting ------------------------------------------------------------
  LevelCount tally(DisjointSet& ds, int level) {
    std::vector<std::uint8_t> flag(total_, 0);  // bit0 interior, bit1 outer, bit2 live
    for (long i = 0; i < m_; ++i)
      for (long j = 0; j < m_; ++j)
        if (coarse_sign(i, j) != 0) {
          std::uint8_t& fl = flag[ds.find(node(i, j))];
          fl |= 4;
          if (!on_boundary(i * r_, j * r_)) fl |= 1;
        }
    for (std::size_t slot = 0; slot < cells_.size(); ++slot) {
      const std::uint32_t b = base_[slot];
      const std::uint32_t end = slot + 1 < cells_.size() ? base_[slot + 1] : total_;
      for (std::uint32_t e = b; e < end; ++e) {
        std::uint8_t& fl = flag[ds.find(e)];
        fl |= 4;
        if (comp_interior_[e - m_ * m_]) fl |= 1;
      }
    }

    // Outer domains own two consecutive samples of the boundary ring; a
    // domain touching the boundary at isolated points stays inner.
    std::vector<std::int64_t> ring;
    ring.reserve(std::size_t(4 * nf_));
    auto emit = [&](long ci, long cj, auto&& fine, long ni, long nj) {
      const std::int32_t sl = slot_[cell(ci, cj)];
      if (sl == kNone) {
        ring.push_back(coarse_sign(ni, nj) != 0 ? std::int64_t(node(ni, nj)) : -1);
        return;
      }
      for (long t = 0; t < r_; ++t) {
        auto [k, l] = fine(t);
        const std::int32_t c = lcomp(sl, k, l);
        ring.push_back(c == kNone ? -1 : std::int64_t(base_[sl]) + c);
      }
    };
    for (long ci = 0; ci < n_; ++ci)
      emit(ci, 0, [&](long t) { return std::pair{t, 0L}; }, ci, 0);
    for (long cj = 0; cj < n_; ++cj)
      emit(n_ - 1, cj, [&](long t) { return std::pair{r_, t}; }, n_, cj);
    for (long ci = n_ - 1; ci >= 0; --ci)
      emit(ci, n_ - 1, [&](long t) { return std::pair{r_ - t, r_}; }, ci + 1, n_);
    for (long cj = n_ - 1; cj >= 0; --cj)
      emit(0, cj, [&](long t) { return std::pair{0L, r_ - t}; }, 0, cj + 1);
    for (std::size_t t = 0; t < ring.size(); ++t) {
      const std::int64_t e1 = ring[t], e2 = ring[(t + 1) % ring.size()];
      if (e1 < 0 || e2 < 0) continue;
      const std::uint32_t root = ds.find(std::uint32_t(e1));
      if (root == ds.find(std::uint32_t(e2))) flag[root] |= 2;
    }

    LevelCount lc;
    lc.level = level;
    for (std::uint32_t e = 0; e < total_; ++e) {
      if (ds.find(e) != e) continue;
      const std::uint8_t fl = flag[e];
      if ((fl & 5) != 5) continue;
      ++lc.mu;
      if (fl & 2) ++lc.mu_out;
    }
    lc.mu_inn = lc.mu - lc.mu_out;
    return lc;
  }

  const ThetaFamily& f_;
  long n_, r_, nf_, m_, lr_;
  double eps_ = 0.0;
  std::vector<double> fa_, fb_;
  std::vector<std::int8_t> sign_;
  std::vector<std::int32_t> slot_;
  std::vector<long> cells_;
  std::vector<std::int8_t> lsign_;
  std::vector<std::int32_t> lcomp_;
  std::vector<std::uint32_t> base_;
  std::vector<bool> comp_interior_;
  std::uint32_t total_ = 0;
};

}  // namespace

LevelCount count_at_level(const ThetaFamily& f, int level, const CountOptions& opts) {
  if (level < 6) throw std::invalid_argument("count: level must be >= 6");
  if (level + opts.refine_levels > 16 || opts.refine_levels < 0 || opts.refine_levels > 4)
    throw std::invalid_argument("count: refinement out of range");
  Counter c(f, level, opts);
  return c.run(level);
}

NodalCountResult count_nodal_domains(const ThetaFamily& f, const CountOptions& opts) {
  if (opts.level < 6) throw std::invalid_argument("count_nodal_domains: level must be >= 6");
  NodalCountResult r;
  r.p = f.p();
  r.q = f.q();
  r.theta = f.theta();
  r.h = f.h();

  if (opts.max_level < opts.level)
    throw std::invalid_argument("count_nodal_domains: max_level below level");
  // with max_level == level there is nothing to compare against
  const int top = opts.max_level;
  r.counts.push_back(count_at_level(f, opts.level, opts));
  for (int L = opts.level + 1; L <= top; ++L) {
    r.counts.push_back(count_at_level(f, L, opts));
    const auto& a = r.counts[r.counts.size() - 2];
    const auto& b = r.counts.back();
    if (a.mu == b.mu && a.mu_out == b.mu_out) {
      r.certified = true;
      break;
    }
  }
  const LevelCount& last = r.counts.back();
  r.mu = last.mu;
  r.mu_inn = last.mu_inn;
  r.mu_out = last.mu_out;
  r.level = last.level;

  for (Side s : all_sides) {
    SideZeros z = boundary_zeros(f, s, opts.boundary_samples);
    r.boundary_zeros[int(s)] = z.count();
    r.tangencies[int(s)] = z.tangencies;
  }
  const double bound = 4.0 * std::sqrt(f.eigenvalue());
  // the bound needs lambda > 0; the constant mode has one outer domain
  if (f.eigenvalue() > 0.0 && r.mu_out > bound) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "mu_out = %d exceeds 4 sqrt(lambda) = %.6g", r.mu_out, bound);
    r.contradiction = Contradiction{"outer-bound", buf};
  }
  return r;
}

std::pair<int, int> classify_inner_outer(NodalCountResult& result, const ThetaFamily& f,
                                         const CountOptions& opts) {
  LevelCount lc = count_at_level(f, result.level, opts);
  result.mu_inn = lc.mu_inn;
  result.mu_out = lc.mu_out;
  const double bound = 4.0 * std::sqrt(f.eigenvalue());
  if (f.eigenvalue() > 0.0 && lc.mu_out > bound) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "mu_out = %d exceeds 4 sqrt(lambda) = %.6g", lc.mu_out, bound);
    result.contradiction = Contradiction{"outer-bound", buf};
  } else {
    result.contradiction.reset();
  }
  return {lc.mu_inn, lc.mu_out};
}

}  // namespace robin
