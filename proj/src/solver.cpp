#include "kpzlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "engine.hpp"

namespace kpzlab {

namespace {

using detail::LinearField;

struct StepPlan {
  double dt = 0.0;
  double r = 0.0;      // dt / (2 dx^2)
  double sigma = 0.0;  // sqrt(dt / dx)
};

StepPlan plan_for(const GridSpec& g) {
  StepPlan p;
  p.dt = g.dt;
  p.r = g.dt / (2.0 * g.dx * g.dx);
  p.sigma = std::sqrt(g.dt / g.dx);
  return p;
}

void advance_one(LinearField& lf, const StepPlan& plan,
                 const std::vector<double>& factors, Scheme scheme,
                 bool zero_noise, const NoiseSlice* slice, double dx,
                 std::vector<double>& scratch) {
  detail::heat_step(lf, plan.r, scratch);
  if (zero_noise) return;
  if (scheme == Scheme::SplitExponential) {
    detail::apply_factors(lf, factors);
  } else {
    const size_t first = lf.wall_left ? 1 : 0;
    for (size_t i = first; i < lf.u.size(); ++i) {
      lf.u[i] *= 1.0 + plan.sigma * slice->values[i];
      if (!(lf.u[i] > 0.0))
        throw std::runtime_error(
            "solver: Euler scheme lost positivity (use the split scheme or "
            "reduce dt)");
    }
  }
  (void)dx;
}

// Steps at which snapshots are captured, deduplicated and sorted. The final
// step is always included.
std::vector<int64_t> record_steps(const std::vector<double>& times, double t0,
                                  double dt, int64_t total) {
  std::vector<int64_t> steps;
  for (double t : times) {
    const int64_t s = std::llround((t - t0) / dt);
    if (s < 0 || s > total)
      throw std::invalid_argument("solver: record time outside [t0, t_end]");
    steps.push_back(s);
  }
  steps.push_back(total);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  return steps;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace

FieldState step(const FieldState& f, const NoiseSlice& slice,
                const SchemeConfig& cfg) {
  f.validate();
  if (!cfg.zero_noise &&
      static_cast<int64_t>(slice.values.size()) != f.grid.n)
    throw std::invalid_argument("step: noise slice size does not match grid");
  const StepPlan plan = plan_for(f.grid);
  LinearField lf = LinearField::from_height(f.h, f.grid.dx, f.slope_left,
                                            f.slope_right);
  std::vector<double> scratch;
  std::vector<double> factors;
  if (!cfg.zero_noise && cfg.scheme == Scheme::SplitExponential) {
    factors.resize(slice.values.size());
    const double half_var = 0.5 * plan.sigma * plan.sigma;
    for (size_t i = 0; i < factors.size(); ++i)
      factors[i] = std::exp(plan.sigma * slice.values[i] - half_var);
  }
  advance_one(lf, plan, factors, cfg.scheme, cfg.zero_noise, &slice,
              f.grid.dx, scratch);
  lf.renormalize();
  FieldState out = f;
  lf.to_height(&out.h);
  out.t = f.t + plan.dt;
  return out;
}

CoupledTrajectory evolve_coupled(const CoupledState& initial,
                                 const StreamKey& key, double t_end,
                                 const SchemeConfig& cfg) {
  initial.validate();
  const GridSpec& g = initial.h_minus.grid;
  const StepPlan plan = plan_for(g);
  const double span = t_end - initial.t();
  if (span < 0.0)
    throw std::invalid_argument("evolve_coupled: t_end before initial time");
  const int64_t total = std::llround(span / plan.dt);
  if (std::fabs(static_cast<double>(total) * plan.dt - span) > 1e-9 * plan.dt)
    throw std::invalid_argument(
        "evolve_coupled: t_end - t0 is not a multiple of dt");
  const int64_t step0 = std::llround(initial.t() / plan.dt);
  const std::vector<int64_t> marks =
      record_steps(cfg.record_times, initial.t(), plan.dt, total);

  std::vector<LinearField> members;
  members.push_back(LinearField::from_height(initial.h_minus.h, g.dx,
                                             initial.h_minus.slope_left,
                                             initial.h_minus.slope_right));
  members.push_back(LinearField::from_height(initial.h_plus.h, g.dx,
                                             initial.h_plus.slope_left,
                                             initial.h_plus.slope_right));
  if (initial.h_v)
    members.push_back(LinearField::from_height(initial.h_v->h, g.dx,
                                               initial.h_v->slope_left,
                                               initial.h_v->slope_right));

  CoupledTrajectory traj;
  auto capture = [&](int64_t s) {
    CoupledState snap = initial;
    const double t = initial.t() + static_cast<double>(s) * plan.dt;
    members[0].to_height(&snap.h_minus.h);
    snap.h_minus.t = t;
    members[1].to_height(&snap.h_plus.h);
    snap.h_plus.t = t;
    if (snap.h_v) {
      members[2].to_height(&snap.h_v->h);
      snap.h_v->t = t;
    }
    traj.snapshots.push_back(std::move(snap));
  };

  const int64_t cell0 = g.global_cell(0);
  std::vector<double> scratch;
  std::vector<double> factors(static_cast<size_t>(g.n));
  NoiseSlice slice;
  size_t next_mark = 0;
  if (marks[0] == 0) {
    capture(0);
    ++next_mark;
  }
  for (int64_t s = 0; s < total; ++s) {
    if (!cfg.zero_noise) {
      if (cfg.scheme == Scheme::SplitExponential)
        detail::noise_factors(key, step0 + s, cell0, plan.sigma, factors);
      else
        slice = make_noise_slice(key, step0 + s, cell0, g.n);
    }
    // A log-mean-exp member must see boundary ghosts that are the exact
    // mean of its parents' ghosts, or the identity decays from the edges.
    double vgl = 0.0, vgr = 0.0;
    const bool has_v = members.size() == 3;
    if (has_v) {
      const LinearField& a = members[0];
      const LinearField& b = members[1];
      const double ea = std::exp(a.off - members[2].off);
      const double eb = std::exp(b.off - members[2].off);
      vgl = 0.5 * (a.u.front() * a.ghost_left * ea +
                   b.u.front() * b.ghost_left * eb);
      vgr = 0.5 * (a.u.back() * a.ghost_right * ea +
                   b.u.back() * b.ghost_right * eb);
    }
    for (size_t mi = 0; mi < members.size(); ++mi) {
      if (has_v && mi == 2) {
        detail::heat_step_explicit(members[2], plan.r, vgl, vgr, scratch);
        if (!cfg.zero_noise) {
          if (cfg.scheme == Scheme::SplitExponential)
            detail::apply_factors(members[2], factors);
          else
            for (size_t i = 0; i < members[2].u.size(); ++i) {
              members[2].u[i] *= 1.0 + plan.sigma * slice.values[i];
              if (!(members[2].u[i] > 0.0))
                throw std::runtime_error(
                    "solver: Euler scheme lost positivity (use the split "
                    "scheme or reduce dt)");
            }
        }
      } else {
        advance_one(members[mi], plan, factors, cfg.scheme, cfg.zero_noise,
                    &slice, g.dx, scratch);
      }
    }
    if ((s + 1) % detail::kRenormInterval == 0)
      for (auto& m : members) m.renormalize();
    if (next_mark < marks.size() && marks[next_mark] == s + 1) {
      for (auto& m : members) m.renormalize();
      capture(s + 1);
      ++next_mark;
    }
  }
  return traj;
}

std::vector<FieldState> evolve_field(const FieldState& initial,
                                     const StreamKey& key, double t_end,
                                     const SchemeConfig& cfg) {
  CoupledState c;
  c.h_minus = initial;
  c.h_plus = initial;
  CoupledTrajectory traj = evolve_coupled(c, key, t_end, cfg);
  std::vector<FieldState> out;
  out.reserve(traj.snapshots.size());
  for (auto& s : traj.snapshots) out.push_back(std::move(s.h_minus));
  return out;
}

ShearTwinReport shear_twin_check(double theta, const StreamKey& key,
                                 double t_end, const SchemeConfig& cfg,
                                 const GridSpec& grid, int64_t replicas) {
  if (replicas < 2)
    throw std::invalid_argument("shear_twin_check: need at least 2 replicas");
  const double x_probe = -theta * t_end;
  if (x_probe < grid.x_min || x_probe > grid.x_max)
    throw std::invalid_argument(
        "shear_twin_check: grid does not contain x = -theta*t_end");

  SchemeConfig run = cfg;
  run.record_times.clear();

  std::vector<double> tilted(static_cast<size_t>(replicas));
  std::vector<double> shifted(static_cast<size_t>(replicas));
  FieldState init_tilted, init_flat;
  init_tilted.grid = grid;
  init_tilted.slope_left = theta;
  init_tilted.slope_right = theta;
  init_tilted.h.resize(static_cast<size_t>(grid.n));
  for (int64_t i = 0; i < grid.n; ++i)
    init_tilted.h[static_cast<size_t>(i)] = theta * grid.x_at(i);
  init_flat.grid = grid;
  init_flat.h.assign(static_cast<size_t>(grid.n), 0.0);

  for (int64_t r = 0; r < replicas; ++r) {
    StreamKey ka = key;
    ka.replica_id = key.replica_id + static_cast<uint32_t>(2 * r);
    StreamKey kb = key;
    kb.replica_id = key.replica_id + static_cast<uint32_t>(2 * r + 1);
    const FieldState fa = evolve_field(init_tilted, ka, t_end, run).back();
    const FieldState fb = evolve_field(init_flat, kb, t_end, run).back();
    tilted[static_cast<size_t>(r)] = eval_at(fa, x_probe);
    shifted[static_cast<size_t>(r)] =
        eval_at(fb, 0.0) - 0.5 * theta * theta * t_end;
  }

  ShearTwinReport rep;
  rep.theta = theta;
  rep.t_end = t_end;
  rep.replicas = replicas;
  rep.ks = ks_two_sample(tilted, shifted);
  double ma = 0.0, mb = 0.0;
  for (double v : tilted) ma += v;
  for (double v : shifted) mb += v;
  ma /= static_cast<double>(replicas);
  mb /= static_cast<double>(replicas);
  double va = 0.0, vb = 0.0;
  for (double v : tilted) va += (v - ma) * (v - ma);
  for (double v : shifted) vb += (v - mb) * (v - mb);
  va /= static_cast<double>(replicas - 1);
  vb /= static_cast<double>(replicas - 1);
  rep.mean_shift = ma - mb;
  rep.mean_shift_stderr =
      std::sqrt((va + vb) / static_cast<double>(replicas));
  return rep;
}

}  // namespace kpzlab
