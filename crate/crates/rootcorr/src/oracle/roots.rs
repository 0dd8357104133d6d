//! Certified real-root isolation.
//!
//! Counting is by Sturm sign variations, isolation by bisection on the
//! variation counts, refinement by bracketed bisection plus Newton polish.
//! Anything the certificate cannot decide (near-multiple roots, vanishing
//! chain remainders) is an explicit failure, never a silently wrong count.

use crate::error::{Error, Result};
use crate::poly::{poly_deriv_eval, poly_eval};

/// Chain remainders below this max-norm (after unit normalization of every
/// chain element) make the squarefree certificate ambiguous.
const CHAIN_TOL: f64 = 1e-12;

/// Isolation gives up on intervals this narrow that still hold two or more
/// counted roots.
const CLUSTER_TOL: f64 = 1e-12;

/// Residual acceptance for a refined root `r`:
/// `|G(r)| <= RESIDUAL_TOL * (1 + Σ |a_j| |r|^j)`.
const RESIDUAL_TOL: f64 = 1e-10;

/// The sorted, certified real roots of one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<f64>,
}

impl RootSet {
    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// Roots falling in the half-open interval `[lo, hi)`.
    pub fn count_in(&self, lo: f64, hi: f64) -> usize {
        self.roots.iter().filter(|&&r| r >= lo && r < hi).count()
    }
}

/// Finds all real roots of `Σ coeffs[j] x^j` with a certified count.
pub fn real_roots(coeffs: &[f64]) -> Result<RootSet> {
    let max_abs = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if max_abs == 0.0 || coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut p: Vec<f64> = coeffs.iter().map(|c| c / max_abs).collect();
    while p.len() > 1 && *p.last().unwrap() == 0.0 {
        p.pop();
    }
    let degree = p.len() - 1;
    if degree == 0 {
        return Ok(RootSet { roots: vec![] });
    }

    let chain = sturm_chain(&p)?;
    let lead = *p.last().unwrap();
    let bound = 1.0 + p[..degree].iter().fold(0.0f64, |m, c| m.max(c.abs())) / lead.abs();

    let va = variations(&chain, -bound);
    let vb = variations(&chain, bound);
    let total = va.saturating_sub(vb);

    let mut roots = Vec::with_capacity(total);
    let mut stack = vec![(-bound, bound, va, vb)];
    while let Some((a, b, ca, cb)) = stack.pop() {
        let count = ca.saturating_sub(cb);
        if count == 0 {
            continue;
        }
        if count == 1 {
            roots.push(refine_root(&p, a, b)?);
            continue;
        }
        if b - a < CLUSTER_TOL * (1.0 + a.abs().max(b.abs())) {
            return Err(Error::CertificationFailure(format!(
                "{count} roots clustered in [{a}, {b}]"
            )));
        }
        let mid = 0.5 * (a + b);
        let cm = variations(&chain, mid);
        stack.push((a, mid, ca, cm));
        stack.push((mid, b, cm, cb));
    }

    if roots.len() != total {
        return Err(Error::CertificationFailure(format!(
            "isolated {} roots, certificate says {total}",
            roots.len()
        )));
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for w in roots.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::CertificationFailure("refined roots collided".into()));
        }
    }
    Ok(RootSet { roots })
}

/// Sturm chain of `p`, every element scaled to unit max-norm.
fn sturm_chain(p: &[f64]) -> Result<Vec<Vec<f64>>> {
    let normalize = |mut q: Vec<f64>| -> Vec<f64> {
        let m = q.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
        if m > 0.0 {
            for c in &mut q {
                *c /= m;
            }
        }
        q
    };

    let mut chain = vec![normalize(p.to_vec())];
    let dp: Vec<f64> = (1..p.len()).map(|j| p[j] * j as f64).collect();
    chain.push(normalize(dp));

    loop {
        let prev = &chain[chain.len() - 2];
        let cur = &chain[chain.len() - 1];
        if cur.len() <= 1 {
            break;
        }
        let mut rem = poly_rem(prev, cur);
        let norm = rem.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if norm <= CHAIN_TOL {
            // gcd(p, p') effectively nontrivial: near-multiple roots.
            return Err(Error::CertificationFailure(
                "Sturm remainder vanished before the constant term".into(),
            ));
        }
        for c in &mut rem {
            *c = -*c;
        }
        chain.push(normalize(rem));
    }
    Ok(chain)
}

/// Remainder of `a` divided by `b`; ascending coefficient order.
fn poly_rem(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr] / lb;
        if f != 0.0 {
            for i in 0..db {
                r[dr - db + i] -= f * b[i];
            }
        }
        r.pop();
    }
    r
}

/// Sign variations of the chain at `x`; exact zeros are skipped (standard
/// Sturm convention).
fn variations(chain: &[Vec<f64>], x: f64) -> usize {
    let mut count = 0usize;
    let mut last = 0.0f64;
    for q in chain {
        let v = poly_eval(q, x);
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Refines the single simple root inside `[a, b]`: bisection on the sign
/// change, then Newton polish, then the residual certificate.
fn refine_root(p: &[f64], mut a: f64, mut b: f64) -> Result<f64> {
    let mut fa = poly_eval(p, a);
    let fb = poly_eval(p, b);
    if fa == 0.0 {
        return check_residual(p, a);
    }
    if fb == 0.0 {
        return check_residual(p, b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::CertificationFailure(format!(
            "no sign change across isolated root in [{a}, {b}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = poly_eval(p, mid);
        if fm == 0.0 {
            return check_residual(p, mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    // Newton polish from the bracket midpoint, constrained to the bracket.
    let mut r = 0.5 * (a + b);
    for _ in 0..4 {
        let d = poly_deriv_eval(p, r);
        if d == 0.0 {
            break;
        }
        let step = poly_eval(p, r) / d;
        let next = r - step;
        if next.is_finite() && next >= a && next <= b {
            r = next;
        } else {
            break;
        }
    }
    check_residual(p, r)
}

fn check_residual(p: &[f64], r: f64) -> Result<f64> {
    let scale: f64 = p.iter().zip(0..).map(|(c, j)| c.abs() * r.abs().powi(j)).sum();
    let res = poly_eval(p, r).abs();
    if res <= RESIDUAL_TOL * (1.0 + scale) {
        Ok(r)
    } else {
        Err(Error::CertificationFailure(format!("residual {res:.3e} too large at root {r}")))
    }
}
