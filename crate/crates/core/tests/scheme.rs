mod common;

use std::sync::Arc;

use common::checks::eos;
use common::conservation_drift;
use esrhd::bench::{acc1d, build, AnyProblem, Problem, ProblemParams};
use esrhd::dim::Array;
use esrhd::scheme::semidiscrete_rhs;
use esrhd::timeint::{compute_dt, rk3_step};
use esrhd::{
    BoundaryConditions, BoundaryKind, DissipationKind, FluxMode, Grid, PrimState, ProblemSpec, SchemeConfig, Simulation,
    TimeControls, D1, D2,
};

/// Max-norm error of `L(U)` against `-∂F/∂x` for the smooth density wave.
fn rhs_error(n: usize, mode: FluxMode) -> f64 {
    let p = acc1d::<f64>();
    let g = eos();
    let mut field = p.initial_field(p.grid(n, 1).unwrap(), &g).unwrap();
    let cfg = SchemeConfig::new(mode, DissipationKind::LaxFriedrichs, g);
    let rhs = semidiscrete_rhs(&mut field, &cfg, &p.bc).unwrap();
    let (u, pr) = (0.2_f64, 1.0_f64);
    let w = 1.0 / (1.0 - u * u).sqrt();
    let grid = *field.grid();
    let mut err = 0.0_f64;
    for (i, l) in rhs.iter().enumerate() {
        let x = grid.x_center(i as isize);
        let drho = 0.2 * x.cos();
        // ρh = ρ + Γp/(Γ-1) is affine in ρ, so every flux is too.
        let exact = [-drho * w * u, -drho * w * w * u * u, -drho * w * w * u];
        let _ = pr;
        err = err.max(l.sub(&exact).max_abs());
    }
    err
}

#[test]
fn semidiscrete_operator_is_high_order() {
    for (mode, min_order) in [(FluxMode::Ec, 5.5), (FluxMode::Es, 4.0)] {
        let errs: Vec<f64> = [40, 80, 160].iter().map(|&n| rhs_error(n, mode)).collect();
        for k in 1..errs.len() {
            let order = (errs[k - 1] / errs[k]).log2();
            assert!(order >= min_order, "{mode:?}: errors {errs:?}, order {order}");
        }
    }
}

#[test]
fn llf_operator_is_first_order() {
    let errs: Vec<f64> = [80, 160, 320].iter().map(|&n| rhs_error(n, FluxMode::Llf1)).collect();
    let order = (errs[1] / errs[2]).log2();
    assert!((0.8..1.5).contains(&order), "errors {errs:?}");
}

#[test]
fn periodic_runs_conserve_totals() {
    let p = acc1d::<f64>();
    for mode in [FluxMode::Ec, FluxMode::Es, FluxMode::Llf1] {
        let cfg = SchemeConfig::new(mode, DissipationKind::Roe, eos());
        let mut sim = Simulation::new(&p, p.grid(64, 1).unwrap(), cfg, TimeControls::new(1.0)).unwrap();
        let before = sim.field.total_conserved();
        sim.advance_to(1.0).unwrap();
        let drift = conservation_drift(&before, &sim.field.total_conserved());
        assert!(drift <= 1e-12, "{mode:?}: drift {drift:e}");
    }

    let vortex = esrhd::bench::acc2d::<f64>();
    let mut sim = Simulation::new(&vortex, vortex.grid(16, 16).unwrap(), SchemeConfig::entropy_stable(eos()), TimeControls::new(2.0))
        .unwrap();
    let before = sim.field.total_conserved();
    sim.advance_to(2.0).unwrap();
    let drift = conservation_drift(&before, &sim.field.total_conserved());
    assert!(drift <= 1e-12, "2D drift {drift:e}");
}

#[test]
fn two_dimensional_scheme_reproduces_one_dimensional_runs() {
    let AnyProblem::One(rp) = build::<f64>(Problem::Rp3, &ProblemParams::default()) else { unreachable!() };
    let g = rp.eos().unwrap();
    let ic1 = rp.ic.clone();
    let n = 80;
    let mut f1 = rp.initial_field(rp.grid(n, 1).unwrap(), &g).unwrap();
    let grid2 = Grid::new_2d(n, 6, rp.x_range, (0.0, 1.0)).unwrap();
    let mut f2 = esrhd::Field::from_prim_fn(grid2, &g, |x, _| {
        let w = ic1(x, 0.0);
        PrimState::<f64, D2>::new(w.rho, [w.vel[0], 0.0], w.p)
    })
    .unwrap();
    let bc2 = BoundaryConditions { y_lo: BoundaryKind::Periodic, y_hi: BoundaryKind::Periodic, ..rp.bc };
    for (mode, diss) in [(FluxMode::Es, DissipationKind::Roe), (FluxMode::Es, DissipationKind::LaxFriedrichs), (FluxMode::Llf1, DissipationKind::Roe)] {
        let cfg = SchemeConfig::new(mode, diss, g);
        for _ in 0..30 {
            let dt = compute_dt(&f1, &g, &TimeControls::new(1.0), 0.0, 1.0).unwrap();
            rk3_step(&mut f1, dt, &cfg, &rp.bc).unwrap();
            rk3_step(&mut f2, dt, &cfg, &bc2).unwrap();
        }
        let rho1 = f1.density();
        let rho2 = f2.density();
        for j in 0..6 {
            for i in 0..n {
                let (a, b) = (rho1[i], rho2[j * n + i]);
                assert!((a - b).abs() <= 1e-12 * a, "{mode:?}/{diss:?} cell ({i},{j}): {a} vs {b}");
                assert!(f2.prim_at(i as isize, j as isize).vel[1].abs() <= 1e-14);
            }
        }
    }
}

#[test]
fn every_catalogue_problem_starts_admissible_and_steps() {
    for problem in Problem::ALL {
        match build::<f64>(problem, &ProblemParams::default()) {
            AnyProblem::One(p) => smoke(&p, p.default_n.0 / 8, 1),
            AnyProblem::Two(p) => smoke(&p, p.default_n.0 / 10, p.default_n.1 / 10),
        }
    }
}

fn smoke<D: esrhd::Dimension>(p: &ProblemSpec<f64, D>, nx: usize, ny: usize) {
    let g = p.eos().unwrap();
    p.initial_field(p.default_grid().unwrap(), &g).unwrap_or_else(|e| panic!("{}: {e}", p.name));
    let grid = p.grid(nx.max(8), ny.max(8)).unwrap();
    let mut sim = Simulation::new(p, grid, SchemeConfig::entropy_stable(g), TimeControls::new(p.t_end).with_cfl(0.2)).unwrap();
    while sim.steps < 5 && !sim.is_finished() {
        let dt = compute_dt(&sim.field, &g, &sim.controls, sim.t, p.t_end).unwrap();
        let t = sim.t + dt;
        sim.advance_to(t).unwrap_or_else(|e| panic!("{}: {e}", p.name));
    }
    assert!(sim.steps >= 1, "{}", p.name);
    assert!(sim.field.interior_prims().iter().all(|w| w.is_admissible()), "{}", p.name);
}

#[test]
fn dirichlet_ghosts_are_held_fixed() {
    let ic: Arc<dyn Fn(f64, f64) -> PrimState<f64, D1> + Send + Sync> =
        Arc::new(|x, _| if x < 0.5 { PrimState::new(1.0, [0.5], 1.0) } else { PrimState::new(0.5, [0.0], 0.5) });
    let p = ProblemSpec {
        name: "inflow",
        x_range: (0.0, 1.0),
        y_range: (0.0, 1.0),
        gamma: 5.0 / 3.0,
        ic,
        bc: BoundaryConditions { x_lo: BoundaryKind::Dirichlet, ..BoundaryConditions::outflow() },
        t_end: 0.3,
        exact: None,
        default_n: (50, 1),
    };
    let out = esrhd::timeint::run(&p, p.grid(50, 1).unwrap(), SchemeConfig::entropy_stable(eos()), TimeControls::new(0.3))
        .unwrap();
    let w = out.field.prim_at(0, 0);
    assert!((w.rho - 1.0).abs() < 1e-3 && (w.vel[0] - 0.5).abs() < 1e-3, "{w:?}");
    for k in 1..=3 {
        assert_eq!(*out.field.prim_at(-k, 0), PrimState::new(1.0, [0.5], 1.0));
    }
}
