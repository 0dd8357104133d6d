use crate::error::{Error, Result};

/// Relative separation floor: configurations with
/// `min |x_i - x_j| < SEPARATION_FLOOR_REL * (1 + max|x_i|)` are rejected.
/// Vandermonde conditioning degrades there and the correlation prefactor
/// diverges; callers wanting near-diagonal behavior handle the limit
/// themselves.
pub const SEPARATION_FLOOR_REL: f64 = 1e-8;

/// An ordered configuration of pairwise-distinct evaluation points
/// `x_1, ..., x_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfig {
    points: Vec<f64>,
}

impl PointConfig {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if let Some(&p) = points.iter().find(|p| !p.is_finite()) {
            return Err(Error::NonFinitePoint(p));
        }
        let floor = separation_floor(&points);
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if (points[i] - points[j]).abs() < floor {
                    return Err(Error::SeparationViolation(points[i], points[j], floor));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn single(x: f64) -> Result<Self> {
        Self::new(vec![x])
    }

    pub fn k(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// `Π_{i<j} |x_i - x_j|`, the absolute Vandermonde factor of the
    /// correlation formulas.
    pub fn abs_vandermonde(&self) -> f64 {
        let mut p = 1.0;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                p *= (self.points[i] - self.points[j]).abs();
            }
        }
        p
    }
}

fn separation_floor(points: &[f64]) -> f64 {
    let max_abs = points.iter().fold(0.0f64, |m, p| m.max(p.abs()));
    SEPARATION_FLOOR_REL * (1.0 + max_abs)
}

/// An integer partition: weakly decreasing nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] {
                return Err(Error::InvalidPartition(i));
            }
        }
        Ok(Self { parts })
    }

    /// The hook partition `(arm+1, 1^leg)` indexing the Schur expansion of
    /// the vanishing-coefficient map.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = Vec::with_capacity(leg + 1);
        parts.push(arm + 1);
        parts.extend(std::iter::repeat_n(1, leg));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Realizations (or integration variables) of the high-order coefficients
/// `ξ_k, ..., ξ_n` of a degree-`n` polynomial with `k` pinned roots.
#[derive(Debug, Clone, PartialEq)]
pub struct TailCoefficients {
    values: Vec<f64>,
}

impl TailCoefficients {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(&v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinitePoint(v));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
