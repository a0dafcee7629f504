use serde::{Deserialize, Serialize};

use super::{
    pedal_sides_closed_form, sum_of_cosines, sum_of_cosines_jacobi, sweep, Family,
    InvariantVerdict, Measurement,
};
use crate::bicentric::{poncelet_solve, tangency_residual, BicentricPair};
use crate::derived::{
    bicentric_from_confocal, billiard_polygon, confocal_ellipses_from_bicentric, focus_inversive,
    limiting_pedal, LimitingPoint,
};
use crate::elliptic::EllipticModulus;
use crate::error::Result;
use crate::geometry::pedal_polygon;

/// Tolerance the per-claim defaults are expressed against.
const BASE_TOL: f64 = 1e-9;

/// Threshold a non-invariance witness must exceed.
const WITNESS: f64 = 1e-3;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub tol: f64,
    pub samples: usize,
    pub rho: f64,
    /// Restrict the family set to one vertex count.
    pub n: Option<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tol: BASE_TOL,
            samples: 256,
            rho: 1.0,
            n: None,
        }
    }
}

/// `(N, τ)` combinations covered by the default suite.
pub const PERIODS: [(u32, u32); 9] = [
    (3, 1),
    (4, 1),
    (5, 1),
    (6, 1),
    (7, 1),
    (8, 1),
    (5, 2),
    (7, 2),
    (7, 3),
];

pub const OFFSETS: [f64; 3] = [0.3, 0.7, 1.0];

pub const OUTER_RADIUS: f64 = 2.0;

/// Deterministic spread of `count` points over `[0, span)`.
fn probe_grid(count: usize, span: f64) -> impl Iterator<Item = f64> {
    (1..=count).map(move |i| span * (i as f64 * GOLDEN).fract())
}

struct Suite {
    cfg: VerifyConfig,
    verdicts: Vec<InvariantVerdict>,
}

impl Suite {
    fn scaled(&self, default: f64) -> f64 {
        default * self.cfg.tol / BASE_TOL
    }

    fn below(&mut self, claim: &str, value: f64, default: f64) {
        let tol = self.scaled(default);
        self.verdicts
            .push(InvariantVerdict::below(claim, value, tol));
    }

    fn above(&mut self, claim: &str, value: f64) {
        self.verdicts
            .push(InvariantVerdict::above(claim, value, WITNESS));
    }
}

fn nan_max(acc: f64, v: f64) -> f64 {
    if v.is_nan() || acc.is_nan() {
        f64::NAN
    } else {
        acc.max(v)
    }
}

fn kernel_residual() -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (i, k) in probe_grid(40, 0.94).map(|k| k + 0.05).enumerate() {
        let ell = EllipticModulus::new(k)?;
        let two_k = 2.0 * ell.quarter_period();
        for u in probe_grid(25, 20.0).map(|u| u - 10.0 + i as f64 * 1e-3) {
            let j = ell.sn_cn_dn(u)?;
            let j4 = ell.sn_cn_dn(u + 2.0 * two_k)?;
            let j2 = ell.sn_cn_dn(u + two_k)?;
            worst = worst
                .max((j.sn * j.sn + j.cn * j.cn - 1.0).abs())
                .max((j.dn * j.dn - (1.0 - k * k * j.sn * j.sn)).abs())
                .max((j4.sn - j.sn).abs())
                .max((j2.dn - j.dn).abs());
        }
    }
    Ok(worst)
}

/// Families of the default suite, optionally restricted to one `N`.
pub fn suite_pairs(n: Option<u32>) -> Result<Vec<BicentricPair>> {
    let mut pairs = Vec::new();
    for &(pn, tau) in PERIODS.iter().filter(|(pn, _)| n.is_none_or(|n| n == *pn)) {
        for d in OFFSETS {
            pairs.push(poncelet_solve(OUTER_RADIUS, d, pn, tau)?);
        }
    }
    Ok(pairs)
}

/// Runs every check and returns one verdict per claim.
pub fn verify(cfg: &VerifyConfig) -> Result<Vec<InvariantVerdict>> {
    let mut suite = Suite {
        cfg: *cfg,
        verdicts: Vec::new(),
    };
    let pairs = suite_pairs(cfg.n)?;
    let (rho, samples) = (cfg.rho, cfg.samples);

    suite.below("kernel_identities", kernel_residual()?, 1e-12);

    let (
        mut closure,
        mut tangency,
        mut jacobi_gap,
        mut side_gap,
        mut inversive_gap,
        mut round_trip,
    ) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    for pair in &pairs {
        let big_r = pair.outer_radius();
        for u in probe_grid(16, 4.0 * pair.quarter_period()) {
            for j in 0..pair.n() as isize {
                let gap = pair
                    .vertex(u, j + pair.n() as isize)?
                    .dist(pair.vertex(u, j)?);
                closure = nan_max(closure, gap / big_r);
            }
            let poly = pair.vertices(u)?;
            tangency = nan_max(tangency, tangency_residual(pair.circles(), &poly));
            jacobi_gap = nan_max(
                jacobi_gap,
                (sum_of_cosines_jacobi(pair, u)? - sum_of_cosines(&poly)?).abs(),
            );
            for which in [LimitingPoint::L1, LimitingPoint::L2] {
                let sides = pedal_sides_closed_form(pair, u, which)?;
                let pedal = pedal_polygon(&poly, which.of(pair))?;
                for (s, (p, q)) in sides.iter().zip(pedal.sides()) {
                    side_gap = nan_max(side_gap, (s - p.dist(q)).abs() / big_r);
                }
            }
            let inv = focus_inversive(&billiard_polygon(pair, u, rho)?, pair.l1(), rho)?;
            let pedal = limiting_pedal(pair, u, LimitingPoint::L1)?;
            for (p, q) in inv.vertices().iter().zip(pedal.vertices()) {
                inversive_gap = nan_max(inversive_gap, p.dist(*q) / big_r);
            }
        }
        let conf = confocal_ellipses_from_bicentric(pair, rho)?;
        let (t, c) = (conf.outer, conf.caustic);
        let back = bicentric_from_confocal(t.a, t.b, c.a, c.b, rho)?.circles;
        let err = [
            back.outer_radius() - pair.outer_radius(),
            back.inner_radius() - pair.inner_radius(),
            back.offset() - pair.offset(),
        ]
        .iter()
        .fold(0.0_f64, |m, e| m.max(e.abs()));
        round_trip = nan_max(round_trip, err / big_r);
    }
    suite.below("poncelet_closure", closure, 1e-8);
    suite.below("poncelet_tangency", tangency, 1e-9);

    let mut spreads = std::collections::BTreeMap::<&str, f64>::new();
    let mut bump = |key: &'static str, v: f64| {
        let e = spreads.entry(key).or_insert(0.0);
        *e = nan_max(*e, v);
    };
    let mut min_perimeter_spread = f64::INFINITY;
    let mut n4_witness = f64::INFINITY;
    let (mut n4_collinear, mut n4_sum4) = (None::<f64>, None::<f64>);
    for pair in &pairs {
        let cos = &sweep(
            Family::Bicentric,
            pair,
            rho,
            &[Measurement::SumOfCosines, Measurement::Perimeter],
            samples,
        )?;
        bump("sum_of_cosines_invariant", cos[0].invariance_spread());
        if is_negative_control(pair) {
            min_perimeter_spread = min_perimeter_spread.min(cos[1].spread_rel);
        }
        let l1 = sweep(
            Family::PedalL1,
            pair,
            rho,
            &[Measurement::Perimeter, Measurement::SumOfCosines],
            samples,
        )?;
        let l2 = sweep(
            Family::PedalL2,
            pair,
            rho,
            &[
                Measurement::Perimeter,
                Measurement::SumOfCosines,
                Measurement::Collinearity,
            ],
            samples,
        )?;
        bump("pedal_l1_perimeter", l1[0].spread_rel);
        bump("pedal_l2_perimeter", l2[0].spread_rel);
        if pair.n() == 4 {
            n4_witness = n4_witness.min(l1[1].spread_rel);
            n4_collinear = Some(n4_collinear.unwrap_or(0.0).max(l2[2].max));
            let sum4 = (l2[1].mean - 4.0).abs() + l2[1].spread_abs();
            n4_sum4 = Some(n4_sum4.unwrap_or(0.0).max(sum4));
        } else {
            bump("pedal_sum_of_cosines", l1[1].invariance_spread());
        }
        bump("pedal_sum_of_cosines", l2[1].invariance_spread());
        let inv = sweep(
            Family::FocusInversive,
            pair,
            rho,
            &[Measurement::Perimeter],
            samples,
        )?;
        bump("focus_inversive_matches_pedal", inv[0].spread_rel);
        let hyp = sweep(
            Family::Hyperbolic,
            pair,
            rho,
            &[Measurement::SignedPerimeter],
            samples,
        )?;
        bump("hyperbolic_signed_perimeter", hyp[0].spread_rel);
    }

    suite.below(
        "sum_of_cosines_invariant",
        spreads["sum_of_cosines_invariant"],
        1e-9,
    );
    suite.below("sum_of_cosines_jacobi_form", jacobi_gap, 1e-10);
    suite.below("pedal_l1_perimeter", spreads["pedal_l1_perimeter"], 1e-9);
    suite.below("pedal_l2_perimeter", spreads["pedal_l2_perimeter"], 1e-9);
    suite.below("pedal_side_formula", side_gap, 1e-9);
    suite.below(
        "focus_inversive_matches_pedal",
        spreads["focus_inversive_matches_pedal"].max(inversive_gap),
        1e-9,
    );
    suite.below("confocal_round_trip", round_trip, 1e-10);
    suite.below(
        "pedal_sum_of_cosines",
        spreads["pedal_sum_of_cosines"],
        1e-8,
    );
    suite.below(
        "hyperbolic_signed_perimeter",
        spreads["hyperbolic_signed_perimeter"],
        1e-8,
    );
    if min_perimeter_spread.is_finite() {
        suite.above("bicentric_perimeter_varies", min_perimeter_spread);
    }
    if n4_witness.is_finite() {
        suite.above("n4_pedal_l1_cosines_vary", n4_witness);
    }
    if let Some(v) = n4_collinear {
        suite.below("n4_pedal_l2_collinear", v, 1e-9);
    }
    if let Some(v) = n4_sum4 {
        suite.below("n4_pedal_l2_sum_is_4", v, 1e-9);
    }
    Ok(suite.verdicts)
}

/// Sum-of-cosines verdicts for both limiting pedals of every requested
/// family. The ℓ₁-pedal at `N = 4` is expected to vary.
pub fn conjecture1_harness(
    ns: &[u32],
    taus: &[u32],
    pairs: &[(f64, f64)],
    samples: usize,
) -> Result<Vec<InvariantVerdict>> {
    let mut out = Vec::new();
    for &n in ns {
        for &tau in taus {
            if 2 * tau >= n || gcd(n, tau) != 1 {
                continue;
            }
            for &(big_r, d) in pairs {
                let pair = poncelet_solve(big_r, d, n, tau)?;
                for (family, tag) in [(Family::PedalL1, "l1"), (Family::PedalL2, "l2")] {
                    let report = sweep(family, &pair, 1.0, &[Measurement::SumOfCosines], samples)?;
                    let spread = report[0].invariance_spread();
                    let claim = format!("pedal_cosines_n{n}_tau{tau}_R{big_r}_d{d}_{tag}");
                    out.push(if n == 4 && family == Family::PedalL1 {
                        InvariantVerdict::above(claim, spread, WITNESS)
                    } else {
                        InvariantVerdict::below(claim, spread, 1e-8)
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Families on which the bicentric perimeter must visibly vary. The
/// variation vanishes as `d → 0` and shrinks with `N` and `τ`, so only
/// simple triangles and pentagons with `d >= 0.7` serve as controls.
pub fn is_negative_control(pair: &BicentricPair) -> bool {
    matches!(pair.n(), 3 | 5) && pair.tau() == 1 && pair.offset() >= 0.7
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
