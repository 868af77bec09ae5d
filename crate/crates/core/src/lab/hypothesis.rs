//! Arithmetic side conditions relating `r`, `k` and `m`.
//!
//! All inequalities are checked in integers: `r/m <= k` becomes `r <= k·m`
//! and `k <= r(1 − 1/m)` becomes `k·m <= r(m − 1)`.

use serde::Serialize;

use super::LabError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// `r` even, `k` odd, `n` even, `r/m <= k <= r(1 − 1/m)`.
    I,
    /// `r` odd, `k` even, `k <= r(1 − 1/m*)`.
    II,
    /// `r` and `k` odd, `r/m* <= k`.
    III,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypothesisProfile {
    pub r: usize,
    pub k: usize,
    pub m: usize,
    /// Odd element of `{m, m + 1}`.
    pub m_star: usize,
    /// Odd element of `{m, m − 1}`.
    pub m0: usize,
    pub condition: Option<Condition>,
}

pub fn m_star(m: usize) -> usize {
    if m % 2 == 1 {
        m
    } else {
        m + 1
    }
}

/// Odd element of `{m, m − 1}`; `m >= 1`.
pub fn m0(m: usize) -> usize {
    if m % 2 == 1 {
        m
    } else {
        m - 1
    }
}

/// `r/m <= k <= r(1 − 1/m)`.
pub fn in_band(r: usize, k: usize, m: usize) -> bool {
    r <= k * m && k * m <= r * (m - 1)
}

pub fn classify_hypothesis(r: usize, k: usize, m: usize, n_parity: Parity) -> Result<HypothesisProfile, LabError> {
    if k < 1 || k >= r {
        return Err(LabError::Domain(format!("need 1 <= k < r, got r = {r}, k = {k}")));
    }
    if m < 1 {
        return Err(LabError::Domain("need m >= 1".into()));
    }
    let ms = m_star(m);
    let (r_even, k_even) = (r % 2 == 0, k % 2 == 0);
    let condition = if r_even && !k_even && n_parity == Parity::Even && in_band(r, k, m) {
        Some(Condition::I)
    } else if !r_even && k_even && k * ms <= r * (ms - 1) {
        Some(Condition::II)
    } else if !r_even && !k_even && r <= k * ms {
        Some(Condition::III)
    } else {
        None
    };
    Ok(HypothesisProfile {
        r,
        k,
        m,
        m_star: ms,
        m0: m0(m),
        condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = classify_hypothesis(4, 1, 4, Parity::Even).unwrap();
        assert_eq!(p.condition, Some(Condition::I));
        assert_eq!(p.m0, 3);
        assert_eq!(p.m_star, 5);

        let p = classify_hypothesis(3, 2, 3, Parity::Odd).unwrap();
        assert_eq!(p.condition, Some(Condition::II));
        assert_eq!(p.m_star, 3);

        assert!(classify_hypothesis(3, 3, 3, Parity::Even).is_err());
        assert!(classify_hypothesis(3, 0, 3, Parity::Even).is_err());
        // odd order never meets the first condition
        assert_eq!(classify_hypothesis(4, 1, 4, Parity::Odd).unwrap().condition, None);
        // 2 <= 3(1 - 1/1) fails
        assert_eq!(classify_hypothesis(3, 2, 1, Parity::Even).unwrap().condition, None);
        assert_eq!(classify_hypothesis(3, 1, 2, Parity::Even).unwrap().condition, Some(Condition::III));
    }

    #[test]
    fn fired_conditions_recheck_in_rationals() {
        for r in 2..=14usize {
            for k in 1..r {
                for m in 1..=2 * r {
                    for parity in [Parity::Even, Parity::Odd] {
                        let p = classify_hypothesis(r, k, m, parity).unwrap();
                        assert_eq!(p.m_star % 2, 1);
                        assert!(p.m_star == m || p.m_star == m + 1);
                        assert_eq!(p.m0 % 2, 1);
                        assert!(p.m0 == m || p.m0 + 1 == m);
                        let (rf, kf) = (r as f64, k as f64);
                        let eps = 1e-12;
                        match p.condition {
                            Some(Condition::I) => {
                                let mf = m as f64;
                                assert!(r % 2 == 0 && k % 2 == 1 && parity == Parity::Even);
                                assert!(rf / mf <= kf + eps && kf <= rf * (1.0 - 1.0 / mf) + eps);
                            }
                            Some(Condition::II) => {
                                assert!(r % 2 == 1 && k % 2 == 0);
                                assert!(kf <= rf * (1.0 - 1.0 / p.m_star as f64) + eps);
                            }
                            Some(Condition::III) => {
                                assert!(r % 2 == 1 && k % 2 == 1);
                                assert!(rf / p.m_star as f64 <= kf + eps);
                            }
                            None => {
                                let (mf, msf) = (m as f64, p.m_star as f64);
                                let i = r % 2 == 0
                                    && k % 2 == 1
                                    && parity == Parity::Even
                                    && rf / mf <= kf + eps
                                    && kf <= rf * (1.0 - 1.0 / mf) + eps;
                                let ii = r % 2 == 1 && k % 2 == 0 && kf <= rf * (1.0 - 1.0 / msf) - eps;
                                let iii = r % 2 == 1 && k % 2 == 1 && rf / msf < kf - eps;
                                assert!(!i && !ii && !iii, "{p:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
