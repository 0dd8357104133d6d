//! Globally adaptive 1-D quadrature built on the 15-point Gauss-Kronrod
//! pair. Error control is by subdivision of the worst interval; no
//! smoothness is assumed, so kinked integrands converge, just slower.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

// Kronrod abscissae (positive half) and weights for the (G7, K15) pair.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

pub struct Panel {
    pub a: f64,
    pub b: f64,
    pub value: f64,
    pub error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

/// One Gauss-Kronrod pass over `[a, b]`; 15 evaluations.
pub fn gk15(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fa, fb) = if x == 0.0 {
            let v = f(center);
            (v, 0.0)
        } else {
            (f(center - half * x), f(center + half * x))
        };
        let pair = fa + fb;
        kronrod += wk * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Panel { a, b, value, error }
}

pub struct AdaptiveResult {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Adaptive integration of `f` over `[a, b]` to the requested tolerance.
/// `initial_panels` splits the interval up front; useful when interior
/// kinks are likely.
pub fn adaptive_gk(
    f: &mut dyn FnMut(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
    max_evals: usize,
    initial_panels: usize,
) -> AdaptiveResult {
    let n0 = initial_panels.max(1);
    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    let step = (b - a) / n0 as f64;
    for i in 0..n0 {
        let pa = a + i as f64 * step;
        let pb = if i + 1 == n0 { b } else { a + (i + 1) as f64 * step };
        heap.push(gk15(f, pa, pb));
        evals += 15;
    }
    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        let target = abs_tol.max(rel_tol * value.abs());
        if error <= target {
            return AdaptiveResult { value, error, evals, converged: true };
        }
        if evals + 30 > max_evals {
            return AdaptiveResult { value, error, evals, converged: false };
        }
        let worst = heap.pop().unwrap();
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval exhausted at f64 resolution; keep its estimate.
            let mut rest_value: f64 = heap.iter().map(|p| p.value).sum();
            let mut rest_error: f64 = heap.iter().map(|p| p.error).sum();
            rest_value += worst.value;
            rest_error += worst.error;
            return AdaptiveResult { value: rest_value, error: rest_error, evals, converged: false };
        }
        heap.push(gk15(f, worst.a, mid));
        heap.push(gk15(f, mid, worst.b));
        evals += 30;
    }
}
