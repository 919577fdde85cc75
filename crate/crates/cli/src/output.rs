//! CSV and manifest writers. Numbers are printed with 17 significant digits
//! so that every `f64` survives a text round trip.

use std::fmt::Write as _;
use std::path::Path;

use esrhd::bench::schlieren;
use esrhd::state::prim_to_cons;
use esrhd::{ConsState, ConvergenceRow, Dimension, EosParams, Field, PrimState, D1, D2};

use crate::CliError;

#[inline]
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Row-per-cell text of a field. Conservative columns are recomputed from
/// the stored primitives so that a reader can verify them exactly.
pub trait SnapshotRows: Dimension {
    const HEADER: &'static str;
    fn rows(field: &Field<f64, Self>, eos: &EosParams<f64>) -> String;
}

impl SnapshotRows for D1 {
    const HEADER: &'static str = "x,rho,u,p,D,m,E";

    fn rows(field: &Field<f64, D1>, eos: &EosParams<f64>) -> String {
        let g = *field.grid();
        let mut s = String::new();
        for i in 0..g.nx as isize {
            let w: &PrimState<f64, D1> = field.prim_at(i, 0);
            let u: ConsState<f64, D1> = prim_to_cons(w, eos);
            let cols = [g.x_center(i), w.rho, w.vel[0], w.p, u.d, u.mom[0], u.e];
            push_row(&mut s, &cols);
        }
        s
    }
}

impl SnapshotRows for D2 {
    const HEADER: &'static str = "x,y,rho,u,v,p,D,mx,my,E";

    fn rows(field: &Field<f64, D2>, eos: &EosParams<f64>) -> String {
        let g = *field.grid();
        let mut s = String::new();
        for i in 0..g.nx as isize {
            for j in 0..g.ny as isize {
                let w = field.prim_at(i, j);
                let u = prim_to_cons(w, eos);
                let cols = [g.x_center(i), g.y_center(j), w.rho, w.vel[0], w.vel[1], w.p, u.d, u.mom[0], u.mom[1], u.e];
                push_row(&mut s, &cols);
            }
        }
        s
    }
}

fn push_row(s: &mut String, cols: &[f64]) {
    for (k, c) in cols.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&num(*c));
    }
    s.push('\n');
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn snapshot_text<D: SnapshotRows>(field: &Field<f64, D>, eos: &EosParams<f64>) -> String {
    let mut s = String::from(D::HEADER);
    s.push('\n');
    s.push_str(&D::rows(field, eos));
    s
}

pub fn emit_snapshot<D: SnapshotRows>(field: &Field<f64, D>, eos: &EosParams<f64>, path: &Path) -> Result<(), CliError> {
    write_file(path, &snapshot_text(field, eos))
}

/// `x,y,schlieren` in the same row order as the 2D snapshot.
pub fn schlieren_text(field: &Field<f64, D2>) -> Result<String, CliError> {
    let g = *field.grid();
    let s = schlieren(&field.density(), &g)?;
    let mut out = String::from("x,y,schlieren\n");
    for i in 0..g.nx {
        for j in 0..g.ny {
            push_row(&mut out, &[g.x_center(i as isize), g.y_center(j as isize), s[j * g.nx + i]]);
        }
    }
    Ok(out)
}

pub fn entropy_trace_text(samples: &[(f64, f64)]) -> String {
    let mut s = String::from("t,total_entropy\n");
    for &(t, eta) in samples {
        push_row(&mut s, &[t, eta]);
    }
    s
}

pub fn convergence_text(rows: &[ConvergenceRow<f64>]) -> String {
    let opt = |o: Option<f64>| o.map(num).unwrap_or_default();
    let mut s = String::from("n,l1,order1,l2,order2,linf,orderinf\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.n,
            num(r.err_l1),
            opt(r.order_l1),
            num(r.err_l2),
            opt(r.order_l2),
            num(r.err_linf),
            opt(r.order_linf)
        );
    }
    s
}

/// `true` when every norm strictly decreases with resolution.
pub fn errors_monotone(rows: &[ConvergenceRow<f64>]) -> bool {
    rows.windows(2)
        .all(|w| w[1].err_l1 < w[0].err_l1 && w[1].err_l2 < w[0].err_l2 && w[1].err_linf < w[0].err_linf)
}
