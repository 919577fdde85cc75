//! SSP-RK3 time stepping, CFL time steps and the run loop.

use crate::bench::ProblemSpec;
use crate::dim::{Array, Axis, Dimension};
use crate::error::{Error, Result};
use crate::num::Real;
use crate::scheme::{semidiscrete_rhs, BoundaryConditions, Field, Grid, SchemeConfig};
use crate::state::{entropy_density, max_char_speed, EosParams};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeControls<T> {
    pub cfl: T,
    pub t_end: T,
    /// Caps the step at `cfl · h^{5/3}` so that the spatial error dominates.
    pub accuracy_mode: bool,
    pub max_steps: u64,
}

impl<T: Real> TimeControls<T> {
    pub fn new(t_end: T) -> Self {
        Self { cfl: T::lit(0.4), t_end, accuracy_mode: false, max_steps: 10_000_000 }
    }

    pub fn with_cfl(mut self, cfl: T) -> Self {
        self.cfl = cfl;
        self
    }

    pub fn with_accuracy_mode(mut self, on: bool) -> Self {
        self.accuracy_mode = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cfl > T::zero() && self.cfl <= T::one()) {
            return Err(Error::InvalidConfig(format!("cfl must lie in (0, 1], got {}", self.cfl)));
        }
        if !(self.t_end >= T::zero() && self.t_end.is_finite()) {
            return Err(Error::InvalidConfig(format!("t_end must be finite and >= 0, got {}", self.t_end)));
        }
        Ok(())
    }
}

/// Total entropy `Σ η(U) · vol` after every step.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EntropyTrace<T> {
    pub samples: Vec<(T, T)>,
}

impl<T: Real> EntropyTrace<T> {
    pub fn push(&mut self, t: T, total: T) {
        debug_assert!(self.samples.last().is_none_or(|&(s, _)| t > s));
        self.samples.push((t, total));
    }

    /// Largest single-step increase of the total entropy.
    pub fn max_increase(&self) -> T {
        self.samples.windows(2).map(|w| w[1].1 - w[0].1).fold(T::neg_infinity(), T::max)
    }

    /// Largest deviation from the first sample.
    pub fn max_drift(&self) -> T {
        let first = self.samples.first().map_or(T::zero(), |s| s.1);
        self.samples.iter().map(|s| (s.1 - first).abs()).fold(T::zero(), T::max)
    }
}

pub fn total_entropy<T: Real, D: Dimension>(field: &Field<T, D>, eos: &EosParams<T>) -> T {
    let vol = field.grid().cell_volume();
    field.interior_prims().iter().fold(T::zero(), |acc, w| acc + entropy_density(w, eos)) * vol
}

/// CFL time step from the cached primitives, clipped so as not to pass
/// `t_stop`.
pub fn compute_dt<T: Real, D: Dimension>(
    field: &Field<T, D>,
    eos: &EosParams<T>,
    controls: &TimeControls<T>,
    t: T,
    t_stop: T,
) -> Result<T> {
    let grid = field.grid();
    let mut lam = [T::zero(); 2];
    for w in field.interior_prims() {
        for &axis in D::axes() {
            let k = axis.index();
            lam[k] = lam[k].max(max_char_speed(&w, eos, axis));
        }
    }
    let mut dt = if D::DIM == 1 {
        controls.cfl * grid.dx / lam[Axis::X.index()]
    } else {
        controls.cfl / (lam[0] / grid.dx + lam[1] / grid.dy)
    };
    if controls.accuracy_mode {
        let h = if D::DIM == 1 { grid.dx } else { grid.dx.min(grid.dy) };
        dt = dt.min(controls.cfl * h.powf(T::lit(5.0 / 3.0)));
    }
    if !(dt > T::zero() && dt.is_finite()) {
        return Err(Error::InvalidConfig(format!("degenerate time step {dt} at t={t}")));
    }
    Ok(dt.min(t_stop - t))
}

/// One step of the three-stage SSP Runge–Kutta method
///
/// `U¹ = U + Δt L(U)`, `U² = ¾U + ¼(U¹ + Δt L(U¹))`, `Uⁿ⁺¹ = ⅓U + ⅔(U² + Δt L(U²))`.
///
/// `rhs(k, U)` evaluates `L` on stage `k ∈ {0, 1, 2}`.
pub fn ssp_rk3<T: Real, V: Array<T>>(
    u: &mut [V],
    dt: T,
    mut rhs: impl FnMut(u8, &[V]) -> Result<Vec<V>>,
) -> Result<()> {
    let u0 = u.to_vec();
    let step = |state: &[V], l: &[V]| -> Vec<V> { state.iter().zip(l).map(|(s, d)| s.add(&d.scale(dt))).collect() };

    let l0 = rhs(0, &u0)?;
    let u1 = step(&u0, &l0);
    let l1 = rhs(1, &u1)?;
    let (a, b) = (T::lit(0.75), T::lit(0.25));
    let u2: Vec<V> = u0.iter().zip(step(&u1, &l1)).map(|(x, y)| x.scale(a).add(&y.scale(b))).collect();
    let l2 = rhs(2, &u2)?;
    let (a, b) = (T::lit(1.0 / 3.0), T::lit(2.0 / 3.0));
    for ((out, x), y) in u.iter_mut().zip(&u0).zip(step(&u2, &l2)) {
        *out = x.scale(a).add(&y.scale(b));
    }
    Ok(())
}

/// Advances `field` by `dt`. The primitive cache is refreshed after every
/// stage; a failed recovery is reported with its stage (1, 2 or 3).
pub fn rk3_step<T: Real, D: Dimension>(
    field: &mut Field<T, D>,
    dt: T,
    cfg: &SchemeConfig<T>,
    bc: &BoundaryConditions,
) -> Result<()> {
    let mut u = field.interior_vars();
    ssp_rk3(&mut u, dt, |stage, state| {
        if stage > 0 {
            field.set_interior_vars(state)?;
            field.refresh(&cfg.eos).map_err(|e| e.in_stage(stage))?;
        }
        semidiscrete_rhs(field, cfg, bc).map_err(|e| e.in_stage(stage))
    })?;
    field.set_interior_vars(&u)?;
    field.refresh(&cfg.eos).map_err(|e| e.in_stage(3))
}

/// State of a run in progress.
#[derive(Clone, Debug)]
pub struct Simulation<T: Real, D: Dimension> {
    pub field: Field<T, D>,
    pub t: T,
    pub steps: u64,
    pub trace: EntropyTrace<T>,
    pub cfg: SchemeConfig<T>,
    pub bc: BoundaryConditions,
    pub controls: TimeControls<T>,
}

impl<T: Real, D: Dimension> Simulation<T, D> {
    pub fn new(problem: &ProblemSpec<T, D>, grid: Grid<T>, cfg: SchemeConfig<T>, controls: TimeControls<T>) -> Result<Self> {
        controls.validate()?;
        problem.bc.validate(D::DIM)?;
        let field = problem.initial_field(grid, &cfg.eos)?;
        let mut trace = EntropyTrace::default();
        trace.push(T::zero(), total_entropy(&field, &cfg.eos));
        Ok(Self { field, t: T::zero(), steps: 0, trace, cfg, bc: problem.bc, controls })
    }

    pub fn is_finished(&self) -> bool {
        self.t >= self.controls.t_end
    }

    /// Steps until `t_stop` (capped at `t_end`) is reached exactly.
    pub fn advance_to(&mut self, t_stop: T) -> Result<()> {
        let t_stop = t_stop.min(self.controls.t_end);
        while self.t < t_stop {
            if self.steps >= self.controls.max_steps {
                return Err(Error::MaxStepsExceeded { max_steps: self.controls.max_steps, t: self.t.as_f64() });
            }
            let dt = compute_dt(&self.field, &self.cfg.eos, &self.controls, self.t, t_stop)?;
            rk3_step(&mut self.field, dt, &self.cfg, &self.bc)?;
            self.t = if dt == t_stop - self.t { t_stop } else { self.t + dt };
            self.steps += 1;
            self.trace.push(self.t, total_entropy(&self.field, &self.cfg.eos));
        }
        Ok(())
    }
}

/// Result of [`run`].
#[derive(Clone, Debug)]
pub struct RunOutput<T: Real, D: Dimension> {
    pub field: Field<T, D>,
    pub trace: EntropyTrace<T>,
    pub steps: u64,
}

pub fn run<T: Real, D: Dimension>(
    problem: &ProblemSpec<T, D>,
    grid: Grid<T>,
    cfg: SchemeConfig<T>,
    controls: TimeControls<T>,
) -> Result<RunOutput<T, D>> {
    let mut sim = Simulation::new(problem, grid, cfg, controls)?;
    sim.advance_to(controls.t_end)?;
    Ok(RunOutput { field: sim.field, trace: sim.trace, steps: sim.steps })
}
