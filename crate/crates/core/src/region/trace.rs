//! Sampling the boundary curve through its rational parametrization.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::scan::GridBox;
use crate::curve::{AffineScalar, CurveData};
use crate::poly::{int, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePoint {
    pub t: Rational,
    pub k1: Rational,
    pub k2: Rational,
}

/// Polylines of the rational component plus the clipped line component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundaryTrace {
    pub branches: Vec<Vec<TracePoint>>,
    /// Endpoints of `l(k) = 0` inside the box; `None` when `l` is constant
    /// or misses the box.
    pub line: Option<[(Rational, Rational); 2]>,
}

impl BoundaryTrace {
    pub fn num_points(&self) -> usize {
        self.branches.iter().map(Vec::len).sum()
    }
}

const BISECTION_STEPS: usize = 40;
const POLE_REFINEMENT: u32 = 24;

/// Trace `k(t) = (q1, q2)/q0` for `t` over the whole real line (the `t >= 0`
/// half is the imaginary-axis crossing set; `t < 0` completes the real
/// curve). Samples follow `t = S x / (1 - |x|)` on a uniform `x` grid with
/// `S` a root bound of the `q`s, are densified geometrically around every
/// pole of `q0`, and are split at poles and where the curve leaves the box
/// enlarged by its own size on every side.
pub fn trace_boundary(curve: &CurveData, grid_box: &GridBox, samples: usize) -> BoundaryTrace {
    let p = &curve.param;
    let half = (samples / 2).max(8) as i64;
    let scale = int(root_bound(&[&p.q0, &p.q1, &p.q2]));

    let mut ts: Vec<Rational> = (-(half - 1)..half)
        .map(|i| {
            let x = Rational::new(BigInt::from(i), BigInt::from(half));
            &scale * &x / (int(1) - x.abs())
        })
        .collect();
    let poles = pole_brackets(&p.q0, &ts);
    for (lo, hi) in poles {
        let w = &hi - &lo;
        for j in 0..POLE_REFINEMENT {
            let d = &w * int((1i64 << j) - 1);
            ts.push(&lo - &d);
            ts.push(&hi + &d);
        }
    }
    ts.sort();
    ts.dedup();

    let (w1, w2) = (&grid_box.k1.1 - &grid_box.k1.0, &grid_box.k2.1 - &grid_box.k2.0);
    let outer = GridBox {
        k1: (&grid_box.k1.0 - &w1, &grid_box.k1.1 + &w1),
        k2: (&grid_box.k2.0 - &w2, &grid_box.k2.1 + &w2),
    };

    let mut branches = Vec::new();
    let mut current: Vec<TracePoint> = Vec::new();
    let mut last_sign: Option<bool> = None;
    for t in ts {
        let d = p.q0.eval(&t);
        if d.is_zero() {
            flush(&mut branches, &mut current);
            last_sign = None;
            continue;
        }
        let sign = d.is_positive();
        if last_sign.is_some_and(|s| s != sign) {
            flush(&mut branches, &mut current);
        }
        last_sign = Some(sign);
        let k1 = p.q1.eval(&t) / &d;
        let k2 = p.q2.eval(&t) / &d;
        if !outer.contains(&k1, &k2) {
            flush(&mut branches, &mut current);
            continue;
        }
        current.push(TracePoint { t, k1, k2 });
    }
    flush(&mut branches, &mut current);

    BoundaryTrace {
        branches,
        line: clip_line(&curve.line, grid_box),
    }
}

fn flush(branches: &mut Vec<Vec<TracePoint>>, current: &mut Vec<TracePoint>) {
    let branch = std::mem::take(current);
    if branch.len() >= 2 {
        branches.push(branch);
    }
}

/// Integer Cauchy bound `1 + max |c_i / lc|` over the nonconstant inputs.
fn root_bound(polys: &[&UniPoly]) -> i64 {
    let mut bound = int(1);
    for q in polys {
        if q.is_constant() {
            continue;
        }
        let lc = q.lc().abs();
        for c in q.coeffs() {
            let r = int(1) + c.abs() / &lc;
            if r > bound {
                bound = r;
            }
        }
    }
    let ceil = bound.ceil().to_integer();
    i64::try_from(ceil).unwrap_or(i64::MAX / 4).min(1 << 20)
}

/// Tight brackets `[lo, hi]` around each real root of `q0` detected by a sign
/// change (or exact zero) on the sample grid.
fn pole_brackets(q0: &UniPoly, ts: &[Rational]) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    if q0.is_constant() {
        return out;
    }
    let vals: Vec<Rational> = ts.iter().map(|t| q0.eval(t)).collect();
    for k in 0..ts.len() {
        if vals[k].is_zero() {
            // exact rational root at a sample
            let gap = if k + 1 < ts.len() { &ts[k + 1] - &ts[k] } else { &ts[k] - &ts[k - 1] };
            let eps = gap / int(1 << 30);
            out.push((&ts[k] - &eps, &ts[k] + &eps));
            continue;
        }
        if k + 1 < ts.len() && !vals[k + 1].is_zero() && vals[k].is_positive() != vals[k + 1].is_positive() {
            let (mut lo, mut hi) = (ts[k].clone(), ts[k + 1].clone());
            let lo_pos = vals[k].is_positive();
            for _ in 0..BISECTION_STEPS {
                let mid = (&lo + &hi) / int(2);
                let v = q0.eval(&mid);
                if v.is_zero() {
                    let eps = (&hi - &lo) / int(1 << 20);
                    lo = &mid - &eps;
                    hi = &mid + &eps;
                    break;
                }
                if v.is_positive() == lo_pos {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            out.push((lo, hi));
        }
    }
    out
}

/// Segment of `c0 + c1 k1 + c2 k2 = 0` inside the box.
fn clip_line(l: &AffineScalar, b: &GridBox) -> Option<[(Rational, Rational); 2]> {
    if l.is_constant() {
        return None;
    }
    let mut pts: Vec<(Rational, Rational)> = Vec::new();
    if !l.c2.is_zero() {
        for k1 in [&b.k1.0, &b.k1.1] {
            let k2 = -(&l.c0 + &l.c1 * k1) / &l.c2;
            if b.contains(k1, &k2) {
                pts.push((k1.clone(), k2));
            }
        }
    }
    if !l.c1.is_zero() {
        for k2 in [&b.k2.0, &b.k2.1] {
            let k1 = -(&l.c0 + &l.c2 * k2) / &l.c1;
            if b.contains(&k1, k2) {
                pts.push((k1, k2.clone()));
            }
        }
    }
    pts.sort();
    pts.dedup();
    if pts.len() < 2 {
        return None;
    }
    Some([pts[0].clone(), pts[pts.len() - 1].clone()])
}
