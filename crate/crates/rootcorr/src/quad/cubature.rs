//! Adaptive multidimensional cubature over hyperrectangles, using the
//! Genz-Malik degree-7 rule with an embedded degree-5 error estimate.
//! The worst region is split along the axis with the largest fourth
//! divided difference.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

const LAMBDA2: f64 = 0.358_568_582_800_318_1; // sqrt(9/70)
const LAMBDA4: f64 = 0.948_683_298_050_513_8; // sqrt(9/10)
const LAMBDA5: f64 = 0.688_247_201_611_685_3; // sqrt(9/19)

struct Weights {
    w1: f64,
    w2: f64,
    w3: f64,
    w4: f64,
    w5: f64,
    e1: f64,
    e2: f64,
    e3: f64,
    e4: f64,
}

fn weights(m: usize) -> Weights {
    let d = m as f64;
    Weights {
        w1: (12824.0 - 9120.0 * d + 400.0 * d * d) / 19683.0,
        w2: 980.0 / 6561.0,
        w3: (1820.0 - 400.0 * d) / 19683.0,
        w4: 200.0 / 19683.0,
        w5: 6859.0 / 19683.0 / (1u64 << m) as f64,
        e1: (729.0 - 950.0 * d + 50.0 * d * d) / 729.0,
        e2: 245.0 / 486.0,
        e3: (265.0 - 100.0 * d) / 1458.0,
        e4: 25.0 / 729.0,
    }
}

/// Evaluations per region: 1 + 4m + 2m(m-1) + 2^m.
pub fn evals_per_region(m: usize) -> usize {
    1 + 4 * m + 2 * m * (m - 1) + (1usize << m)
}

struct Region {
    center: Vec<f64>,
    halfwidth: Vec<f64>,
    value: f64,
    error: f64,
    split_dim: usize,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Region {}
impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Region {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn rate_region(f: &mut dyn FnMut(&[f64]) -> f64, center: &[f64], halfwidth: &[f64], w: &Weights) -> Region {
    let m = center.len();
    let vol: f64 = halfwidth.iter().map(|h| 2.0 * h).product();
    let mut pt = center.to_vec();

    let f0 = f(&pt);
    let mut sum2 = 0.0;
    let mut sum3 = 0.0;
    let mut best_dim = 0usize;
    let mut best_diff = -1.0f64;
    let ratio = (LAMBDA2 / LAMBDA4) * (LAMBDA2 / LAMBDA4);
    for i in 0..m {
        let ci = center[i];
        let hi = halfwidth[i];
        pt[i] = ci - LAMBDA2 * hi;
        let a2 = f(&pt);
        pt[i] = ci + LAMBDA2 * hi;
        let b2 = f(&pt);
        pt[i] = ci - LAMBDA4 * hi;
        let a4 = f(&pt);
        pt[i] = ci + LAMBDA4 * hi;
        let b4 = f(&pt);
        pt[i] = ci;
        sum2 += a2 + b2;
        sum3 += a4 + b4;
        let diff = ((a2 + b2 - 2.0 * f0) - ratio * (a4 + b4 - 2.0 * f0)).abs();
        if diff > best_diff {
            best_diff = diff;
            best_dim = i;
        }
    }

    let mut sum4 = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            for &si in &[-1.0, 1.0] {
                for &sj in &[-1.0, 1.0] {
                    pt[i] = center[i] + si * LAMBDA4 * halfwidth[i];
                    pt[j] = center[j] + sj * LAMBDA4 * halfwidth[j];
                    sum4 += f(&pt);
                }
            }
            pt[i] = center[i];
            pt[j] = center[j];
        }
    }

    let mut sum5 = 0.0;
    for corner in 0..(1usize << m) {
        for i in 0..m {
            let s = if corner >> i & 1 == 1 { 1.0 } else { -1.0 };
            pt[i] = center[i] + s * LAMBDA5 * halfwidth[i];
        }
        sum5 += f(&pt);
    }

    let rule7 = vol * (w.w1 * f0 + w.w2 * sum2 + w.w3 * sum3 + w.w4 * sum4 + w.w5 * sum5);
    let rule5 = vol * (w.e1 * f0 + w.e2 * sum2 + w.e3 * sum3 + w.e4 * sum4);
    Region {
        center: center.to_vec(),
        halfwidth: halfwidth.to_vec(),
        value: rule7,
        error: (rule7 - rule5).abs(),
        split_dim: best_dim,
    }
}

pub struct CubatureResult {
    pub value: f64,
    pub error: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Adaptive cubature of `f` over the box `Π [lo_i, hi_i]`, `m >= 2`.
pub fn genz_malik(
    f: &mut dyn FnMut(&[f64]) -> f64,
    lo: &[f64],
    hi: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_evals: usize,
) -> CubatureResult {
    let m = lo.len();
    assert!(m >= 2, "Genz-Malik needs at least two dimensions");
    let w = weights(m);
    let per = evals_per_region(m);

    let center: Vec<f64> = lo.iter().zip(hi).map(|(a, b)| 0.5 * (a + b)).collect();
    let halfwidth: Vec<f64> = lo.iter().zip(hi).map(|(a, b)| 0.5 * (b - a)).collect();
    let mut heap = BinaryHeap::new();
    heap.push(rate_region(f, &center, &halfwidth, &w));
    let mut evals = per;
    let mut value: f64 = heap.peek().unwrap().value;
    let mut error: f64 = heap.peek().unwrap().error;

    loop {
        let target = abs_tol.max(rel_tol * value.abs());
        if error <= target {
            return CubatureResult { value, error, evals, converged: true };
        }
        if evals + 2 * per > max_evals {
            return CubatureResult { value, error, evals, converged: false };
        }
        let worst = heap.pop().unwrap();
        value -= worst.value;
        error -= worst.error;
        let dim = worst.split_dim;
        let mut h = worst.halfwidth.clone();
        h[dim] *= 0.5;
        for side in [-1.0, 1.0] {
            let mut c = worst.center.clone();
            c[dim] += side * h[dim];
            let child = rate_region(f, &c, &h, &w);
            value += child.value;
            error += child.error;
            heap.push(child);
        }
        evals += 2 * per;
        // Rebuild the running sums occasionally to shed cancellation drift.
        if heap.len() % 4096 == 0 {
            value = heap.iter().map(|r| r.value).sum();
            error = heap.iter().map(|r| r.error).sum();
        }
    }
}
