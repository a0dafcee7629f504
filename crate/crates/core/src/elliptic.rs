//! Real-argument Jacobi elliptic functions and the complete integral `K(k)`.
//!
//! Both are computed from the arithmetic-geometric mean. The descending
//! Landen ladder for a modulus is built once and cached in
//! [`EllipticModulus`], so evaluating a whole polygon family only pays for
//! the backward amplitude recursion.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

const LADDER_CAP: usize = 40;

/// Complete elliptic integral of the first kind, `K(k) = ∫₀^{π/2} dt / √(1 − k² sin² t)`.
///
/// Accepts `0 <= k < 1`.
pub fn complete_k(k: f64) -> Result<f64> {
    if !k.is_finite() {
        return Err(Error::NonFinite(k));
    }
    if !(0.0..1.0).contains(&k) {
        return Err(Error::Domain {
            what: "modulus k",
            value: k,
            domain: "[0, 1)",
        });
    }
    Ok(FRAC_PI_2 / agm(1.0, complementary(k)))
}

/// `sn`, `cn` and `dn` at real `u` for a modulus in `(0, 1)`.
pub fn jacobi_sn_cn_dn(u: f64, k: f64) -> Result<(f64, f64, f64)> {
    let jac = EllipticModulus::new(k)?.sn_cn_dn(u)?;
    Ok((jac.sn, jac.cn, jac.dn))
}

/// Continuous (unwrapped) Jacobi amplitude.
pub fn jacobi_am(u: f64, k: f64) -> Result<f64> {
    EllipticModulus::new(k)?.am(u)
}

fn complementary(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    0.5 * (a + b)
}

/// Values of the three Jacobi functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobi {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// An elliptic modulus `k ∈ (0, 1)` with its derived constants.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticModulus {
    k: f64,
    k_prime: f64,
    quarter_period: f64,
    complementary_period: f64,
    /// `(a_n, c_n)` for n = 1..=N of the descending Landen sequence.
    ladder: Vec<(f64, f64)>,
}

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::NonFinite(k));
        }
        if !(k > 0.0 && k < 1.0) {
            return Err(Error::Domain {
                what: "modulus k",
                value: k,
                domain: "(0, 1)",
            });
        }
        let k_prime = complementary(k);
        let mut ladder = Vec::with_capacity(8);
        let (mut a, mut b) = (1.0_f64, k_prime);
        while ladder.len() < LADDER_CAP {
            let c = 0.5 * (a - b);
            let next = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = next;
            ladder.push((a, c));
            if c.abs() <= 0.5 * f64::EPSILON * a {
                break;
            }
        }
        let quarter_period = FRAC_PI_2 / a;
        let complementary_period = FRAC_PI_2 / agm(1.0, k);
        Ok(Self {
            k,
            k_prime,
            quarter_period,
            complementary_period,
            ladder,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// The parameter `m = k²`.
    pub fn m(&self) -> f64 {
        self.k * self.k
    }

    pub fn k_prime(&self) -> f64 {
        self.k_prime
    }

    /// `K(k)`.
    pub fn quarter_period(&self) -> f64 {
        self.quarter_period
    }

    /// `K'(k) = K(k')`.
    pub fn complementary_period(&self) -> f64 {
        self.complementary_period
    }

    /// Amplitude for `|u| <= K` by the backward Landen recursion.
    fn am_reduced(&self, u: f64) -> f64 {
        let (a_n, _) = *self.ladder.last().expect("ladder is never empty");
        let mut phi = a_n * u * f64::powi(2.0, self.ladder.len() as i32);
        for &(a, c) in self.ladder.iter().rev() {
            phi = 0.5 * (phi + (c / a * phi.sin()).asin());
        }
        phi
    }

    /// Splits `u = 2K·n + r` with `|r| <= K`.
    fn reduce(&self, u: f64) -> Result<(f64, f64)> {
        if !u.is_finite() {
            return Err(Error::NonFinite(u));
        }
        let half_period = 2.0 * self.quarter_period;
        let n = (u / half_period).round();
        Ok((n, u - n * half_period))
    }

    /// Continuous amplitude: `am(u + 2K) = am(u) + π`.
    pub fn am(&self, u: f64) -> Result<f64> {
        let (n, r) = self.reduce(u)?;
        Ok(n * PI + self.am_reduced(r))
    }

    pub fn sn_cn_dn(&self, u: f64) -> Result<Jacobi> {
        let (n, r) = self.reduce(u)?;
        let (s, c) = self.am_reduced(r).sin_cos();
        let sign = if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
        let (sn, cn) = (sign * s, sign * c);
        // 1 - k² sn² = k'² + k² cn², both terms non-negative
        let dn = (self.k_prime * self.k_prime + self.m() * cn * cn).sqrt();
        Ok(Jacobi { sn, cn, dn })
    }
}
