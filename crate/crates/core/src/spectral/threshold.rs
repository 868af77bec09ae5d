//! Minimum spectral radius over near-regular irregular classes.
//!
//! For `r` and `m`, the class contains connected irregular graphs of
//! maximum degree `r` with `2e >= rn - m`. With order parity opposite to
//! `r` the minimum is [`rho1`]; with order parity equal to `r` it is
//! [`rho2`], which needs cubic equations for `m = 1` and `m = 2`.

use std::fmt;

use serde::Serialize;

use super::SpectralError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdKind {
    ClosedFormEven,
    ClosedFormOdd,
    CubicM1,
    CubicM2,
}

impl ThresholdKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ThresholdKind::ClosedFormEven => "closed-form-even",
            ThresholdKind::ClosedFormOdd => "closed-form-odd",
            ThresholdKind::CubicM1 => "cubic-m1",
            ThresholdKind::CubicM2 => "cubic-m2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralThreshold {
    pub value: f64,
    pub kind: ThresholdKind,
    pub r: usize,
    pub m: usize,
}

/// The characteristic polynomials of the three-part quotient matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubicKind {
    /// `x³ − (r−2)x² − 2rx + (r−1)`, one vertex of degree `r−1`.
    P,
    /// `x³ − (r−2)x² − (2r−1)x + r`, as printed for the `P_4` case.
    F1,
    /// `x³ − (r−2)x² − (2r−1)x + r − 2`, the `2P_3` case.
    F2,
    /// `x³ − (r−2)x² − 2rx + 2(r−2)`, the `K_{1,3}` case.
    F3,
    /// `x³ − (r−3)x² − 3(r−1)x − r`: characteristic polynomial of the
    /// equitable quotient actually realized by the `P_4` case.
    F1Equitable,
}

impl CubicKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CubicKind::P => "P",
            CubicKind::F1 => "f1",
            CubicKind::F2 => "f2",
            CubicKind::F3 => "f3",
            CubicKind::F1Equitable => "f1-equitable",
        }
    }
}

/// Monic cubic `x³ + c[0] x² + c[1] x + c[2]` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Cubic {
    pub coeffs: [i64; 3],
}

impl Cubic {
    pub fn new(a2: i64, a1: i64, a0: i64) -> Self {
        Cubic { coeffs: [a2, a1, a0] }
    }

    pub fn eval(&self, x: f64) -> f64 {
        let [a, b, c] = self.coeffs.map(|v| v as f64);
        ((x + a) * x + b) * x + c
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let [a, b, _] = self.coeffs.map(|v| v as f64);
        (3.0 * x + 2.0 * a) * x + b
    }

    /// All real roots, ascending, with multiplicity collapsed.
    pub fn real_roots(&self) -> Vec<f64> {
        let [a, b, _] = self.coeffs.map(|v| v as f64);
        let bound = 1.0 + self.coeffs.iter().map(|v| v.abs()).max().unwrap_or(0) as f64;
        // critical points solve 3x² + 2ax + b = 0
        let disc = 4.0 * a * a - 12.0 * b;
        let mut knots = vec![-bound];
        if disc > 0.0 {
            let s = disc.sqrt();
            knots.push((-2.0 * a - s) / 6.0);
            knots.push((-2.0 * a + s) / 6.0);
        }
        knots.push(bound);

        let scale = 1.0 + self.coeffs.iter().map(|v| v.abs() as f64).sum::<f64>() * bound * bound;
        let tiny = 1e-13 * scale;
        let mut roots: Vec<f64> = Vec::new();
        for w in knots.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let (flo, fhi) = (self.eval(lo), self.eval(hi));
            if flo.abs() <= tiny && lo > -bound {
                roots.push(lo);
            } else if flo.signum() != fhi.signum() && fhi.abs() > tiny {
                roots.push(self.refine(lo, hi));
            }
        }
        roots.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
        roots
    }

    /// Bisection to 1e-6, then safeguarded Newton to 1e-12.
    fn refine(&self, mut lo: f64, mut hi: f64) -> f64 {
        let up = self.eval(hi) > 0.0;
        while hi - lo > 1e-6 {
            let mid = 0.5 * (lo + hi);
            if (self.eval(mid) > 0.0) == up {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..100 {
            let d = self.derivative(x);
            if d == 0.0 {
                break;
            }
            let step = self.eval(x) / d;
            let next = x - step;
            if next < lo || next > hi {
                break;
            }
            x = next;
            if step.abs() < 1e-12 {
                break;
            }
        }
        x
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        for (c, mono) in self.coeffs.iter().zip(["x^2", "x", ""]) {
            if *c != 0 {
                let sign = if *c < 0 { '-' } else { '+' };
                let mag = c.abs();
                if mag == 1 && !mono.is_empty() {
                    write!(f, " {sign} {mono}")?;
                } else {
                    write!(f, " {sign} {mag}{mono}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn cubic_family(which: CubicKind, r: usize) -> Cubic {
    let r = r as i64;
    match which {
        CubicKind::P => Cubic::new(-(r - 2), -2 * r, r - 1),
        CubicKind::F1 => Cubic::new(-(r - 2), -(2 * r - 1), r),
        CubicKind::F2 => Cubic::new(-(r - 2), -(2 * r - 1), r - 2),
        CubicKind::F3 => Cubic::new(-(r - 2), -2 * r, 2 * (r - 2)),
        CubicKind::F1Equitable => Cubic::new(-(r - 3), -3 * (r - 1), -r),
    }
}

/// Greatest real root. A real cubic always has one.
pub fn largest_root(c: &Cubic) -> f64 {
    *c.real_roots().last().expect("odd degree polynomial has a real root")
}

/// Greatest real root inside `[lo, hi]`.
pub fn largest_root_in(c: &Cubic, lo: f64, hi: f64) -> Result<f64, SpectralError> {
    c.real_roots()
        .into_iter()
        .filter(|&x| x >= lo && x <= hi)
        .last()
        .ok_or_else(|| SpectralError::NoRootInBracket {
            poly: c.to_string(),
            lo,
            hi,
        })
}

/// `½(r − 2 + √((r + 2)² − 4m))` for even `m`, `2 <= m <= r+1`.
pub fn rho1(r: usize, m: usize) -> Result<SpectralThreshold, SpectralError> {
    let err = |reason: String| SpectralError::Domain {
        name: "rho1",
        r,
        m,
        reason,
    };
    if r < 3 {
        return Err(err("r must be at least 3".into()));
    }
    if m % 2 != 0 {
        return Err(err("m must be even".into()));
    }
    if m < 2 || m > r + 1 {
        return Err(err(format!("m must lie in 2..={}", r + 1)));
    }
    let (rf, mf) = (r as f64, m as f64);
    Ok(SpectralThreshold {
        value: 0.5 * (rf - 2.0 + ((rf + 2.0).powi(2) - 4.0 * mf).sqrt()),
        kind: ThresholdKind::ClosedFormEven,
        r,
        m,
    })
}

/// Threshold for order parity equal to `r`: closed form for `m >= 3`,
/// greatest root of `P` for `m = 1`, of `f1` for `m = 2`.
pub fn rho2(r: usize, m: usize) -> Result<SpectralThreshold, SpectralError> {
    let err = |reason: String| SpectralError::Domain {
        name: "rho2",
        r,
        m,
        reason,
    };
    if r < 3 {
        return Err(err("r must be at least 3".into()));
    }
    if m % 2 != r % 2 {
        return Err(err("m must have the parity of r".into()));
    }
    if m < 1 || m > r + 1 {
        return Err(err(format!("m must lie in 1..={}", r + 1)));
    }
    let (value, kind) = match m {
        1 => (cubic_root(CubicKind::P, r)?, ThresholdKind::CubicM1),
        2 => (cubic_root(CubicKind::F1, r)?, ThresholdKind::CubicM2),
        _ => {
            let (rf, mf) = (r as f64, m as f64);
            (
                0.5 * (rf - 3.0 + ((rf + 3.0).powi(2) - 4.0 * mf).sqrt()),
                ThresholdKind::ClosedFormOdd,
            )
        }
    };
    Ok(SpectralThreshold { value, kind, r, m })
}

fn cubic_root(which: CubicKind, r: usize) -> Result<f64, SpectralError> {
    largest_root_in(&cubic_family(which, r), 0.0, r as f64 + 1.0)
}
