//! Maps from a finite reference interval onto (possibly unbounded)
//! integration domains.

/// Variable substitution used for unbounded directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Transform {
    /// `t = u / (1 - u^2)` on `(-1, 1)`.
    Algebraic,
    /// `t = tan(pi u / 2)` on `(-1, 1)`.
    Tangent,
}

/// One dimension of the integration domain, reduced to a reference interval
/// with a pointwise jacobian.
#[derive(Debug, Clone, Copy)]
pub enum DimMap {
    /// Affine map of `(-1, 1)` onto `(lo, hi)`.
    Finite { lo: f64, hi: f64 },
    /// `(-1, 1)` onto all of R.
    Real(Transform),
    /// `(-1, 1)` onto `(lo, ∞)` via `t = lo + (1+u)/(1-u)`.
    HalfUp { lo: f64 },
    /// `(-1, 1)` onto `(-∞, hi)` via `t = hi - (1+u)/(1-u)`.
    HalfDown { hi: f64 },
}

impl DimMap {
    /// Chooses the map for endpoints that may be infinite.
    pub fn for_interval(lo: f64, hi: f64, transform: Transform) -> DimMap {
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => DimMap::Finite { lo, hi },
            (true, false) => DimMap::HalfUp { lo },
            (false, true) => DimMap::HalfDown { hi },
            (false, false) => DimMap::Real(transform),
        }
    }

    /// Maps reference coordinate `u ∈ (-1, 1)` to `(t, |dt/du|)`. The
    /// jacobian is returned as a positive weight even when the map is
    /// orientation-reversing.
    pub fn apply(&self, u: f64) -> (f64, f64) {
        match *self {
            DimMap::Finite { lo, hi } => {
                let half = 0.5 * (hi - lo);
                (lo + half * (u + 1.0), half)
            }
            DimMap::Real(Transform::Algebraic) => {
                let d = 1.0 - u * u;
                (u / d, (1.0 + u * u) / (d * d))
            }
            DimMap::Real(Transform::Tangent) => {
                let half_pi = std::f64::consts::FRAC_PI_2;
                let c = (half_pi * u).cos();
                ((half_pi * u).tan(), half_pi / (c * c))
            }
            DimMap::HalfUp { lo } => {
                let d = 1.0 - u;
                (lo + (1.0 + u) / d, 2.0 / (d * d))
            }
            DimMap::HalfDown { hi } => {
                let d = 1.0 - u;
                (hi - (1.0 + u) / d, 2.0 / (d * d))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_map_endpoints() {
        let m = DimMap::Finite { lo: 2.0, hi: 6.0 };
        assert_eq!(m.apply(-1.0).0, 2.0);
        assert_eq!(m.apply(1.0).0, 6.0);
        assert_eq!(m.apply(0.0), (4.0, 2.0));
    }

    #[test]
    fn algebraic_map_is_odd_and_unbounded() {
        let m = DimMap::Real(Transform::Algebraic);
        let (t, j) = m.apply(0.5);
        assert!((t - 0.5 / 0.75).abs() < 1e-15);
        assert!(j > 0.0);
        assert_eq!(m.apply(-0.5).0, -t);
        assert!(m.apply(0.999999).0 > 1e5);
    }

    #[test]
    fn half_line_map() {
        let m = DimMap::HalfUp { lo: 1.0 };
        assert_eq!(m.apply(0.0).0, 2.0);
        assert!(m.apply(0.9999).0 > 1e3);
    }

    #[test]
    fn jacobian_matches_finite_difference() {
        for m in [
            DimMap::Finite { lo: -2.0, hi: 3.0 },
            DimMap::Real(Transform::Algebraic),
            DimMap::Real(Transform::Tangent),
            DimMap::HalfUp { lo: 0.0 },
            DimMap::HalfDown { hi: 1.0 },
        ] {
            let u = 0.3;
            let h = 1e-6;
            let fd = ((m.apply(u + h).0 - m.apply(u - h).0) / (2.0 * h)).abs();
            let j = m.apply(u).1;
            assert!((fd - j).abs() < 1e-6 * j.abs(), "{m:?}");
        }
    }
}
