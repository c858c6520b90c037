//! Numeric evaluation of theta^(+-)_{n,m}(tau, z), the four Mumford thetas,
//! Dedekind eta, and residual checks for their quasi-periodicity and S-rules.
//!
//! Indices are half-integers stored doubled (`n2` = 2n, `m2` = 2m), so index
//! arithmetic like n + 2m stays exact. All transformation checks return
//! residuals instead of asserting; the harness owns the tolerances.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::numerics::{
    check_upper_half, choose_truncation, cis2pi, phase_pi, principal_half_power, q_rational_power,
    residual, TruncationBudget,
};

const I: Complex64 = Complex64::new(0.0, 1.0);
const PI: f64 = std::f64::consts::PI;

/// Sign variant of a theta series: (+1)^j or (-1)^j in the defining sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSign {
    Plus,
    Minus,
}

/// Index of theta^(sign)_{n,m}: characteristic n = n2/2, level m = m2/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThetaIndex {
    pub n2: i64,
    pub m2: i64,
    pub sign: ThetaSign,
}

impl ThetaIndex {
    pub fn new(n2: i64, m2: i64, sign: ThetaSign) -> Result<Self> {
        if m2 < 1 {
            return Err(Error::Domain(format!("theta level 2m = {m2} must be >= 1")));
        }
        Ok(Self { n2, m2, sign })
    }

    pub fn m(&self) -> f64 {
        self.m2 as f64 / 2.0
    }

    pub fn n(&self) -> f64 {
        self.n2 as f64 / 2.0
    }

    fn sign_at(&self, j: i64) -> f64 {
        if self.sign == ThetaSign::Minus && j.rem_euclid(2) == 1 {
            -1.0
        } else {
            1.0
        }
    }
}

/// theta^(sign)_{n,m}(tau, z) = sum_j (sign)^j q^{m (j + n/2m)^2}
/// e^{2 pi i m (j + n/2m) z}, with a certified truncation tail.
pub fn theta_eval(
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    theta_eval_weighted(idx, tau, z, Ratio::new(0, 1), budget)
}

/// q^{extra} theta^(sign)_{n,m}(tau, z) with the q-power fused into every
/// term. When the index lattice is symmetric (2m divides 2n) the j and
/// -j - 2n/2m terms combine into cosine or sine pairs, so values near zeros
/// of theta come out at the accuracy of the pair sizes instead of being
/// destroyed by a giant prefactor times summation noise.
pub fn theta_eval_weighted(
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
    extra: Ratio<i64>,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    check_upper_half(tau)?;
    let m = idx.m();
    let r = idx.n2 as f64 / (2.0 * idx.m2 as f64);
    let linear = idx.n2.abs() as f64 / 2.0 + m * z.im.abs() / tau.im;
    let cut = choose_truncation(m, tau, linear, budget)? as i64;
    let extra_f = crate::numerics::ratio_f64(extra);
    if idx.n2 % idx.m2 == 0 {
        // symmetric lattice: mu and -mu pair up with j' = -j - d
        let d = idx.n2 / idx.m2;
        let flip = idx.sign == ThetaSign::Minus && d.rem_euclid(2) == 1;
        let mut acc = Complex64::new(0.0, 0.0);
        // self-paired mu = 0 exists for even d
        if d.rem_euclid(2) == 0 {
            acc += idx.sign_at(-d / 2) * cis2pi(extra_f * tau);
        }
        let j0 = if d.rem_euclid(2) == 0 {
            -d / 2 + 1
        } else {
            (-d + 1) / 2
        };
        let mut j = j0;
        while j <= cut + j0.abs() {
            let mu = j as f64 + r;
            let w = Complex64::new(0.0, TAU_2PI_THETA) * m * mu * z;
            let pair = if flip {
                // e^w - e^{-w} = 2 sinh(w)
                2.0 * w.sinh()
            } else {
                2.0 * w.cosh()
            };
            acc += idx.sign_at(j) * cis2pi((m * mu * mu + extra_f) * tau) * pair;
            j += 1;
        }
        Ok(acc)
    } else {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in -cut..=cut {
            let mu = j as f64 + r;
            acc += idx.sign_at(j) * cis2pi((m * mu * mu + extra_f) * tau + m * mu * z);
        }
        Ok(acc)
    }
}

const TAU_2PI_THETA: f64 = std::f64::consts::TAU;

/// d/dz of [`theta_eval`] at (tau, z); used for limits at zeros shared by a
/// numerator and denominator pair.
pub fn theta_eval_dz(
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    check_upper_half(tau)?;
    let m = idx.m();
    let r = idx.n2 as f64 / (2.0 * idx.m2 as f64);
    let linear = idx.n2.abs() as f64 / 2.0 + m * z.im.abs() / tau.im + 1.0;
    let cut = choose_truncation(m, tau, linear, budget)? as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let mu = j as f64 + r;
        let factor = I * 2.0 * PI * m * mu;
        acc += idx.sign_at(j) * factor * cis2pi(m * mu * mu * tau + m * mu * z);
    }
    Ok(acc)
}

/// Dedekind eta: q^{1/24} prod_{n >= 1} (1 - q^n), truncated once the
/// remaining product differs from 1 by less than the budget tolerance.
pub fn eta_eval(tau: Complex64, budget: &TruncationBudget) -> Result<Complex64> {
    check_upper_half(tau)?;
    let q = cis2pi(tau);
    let qn = q.norm();
    let mut n_max = 1u32;
    while qn.powi(n_max as i32 + 1) / (1.0 - qn) > budget.tol / 2.0 {
        n_max += 1;
        if n_max > 200 * budget.j_max {
            return Err(Error::BudgetExceeded("eta product does not settle".into()));
        }
    }
    let mut prod = Complex64::new(1.0, 0.0);
    let mut qk = Complex64::new(1.0, 0.0);
    for _ in 1..=n_max {
        qk *= q;
        prod *= Complex64::new(1.0, 0.0) - qk;
    }
    Ok(cis2pi(tau / 24.0) * prod)
}

/// The four Mumford theta functions with half-integer characteristics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MumfordKind {
    K00,
    K01,
    K10,
    K11,
}

impl MumfordKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "00" => Ok(Self::K00),
            "01" => Ok(Self::K01),
            "10" => Ok(Self::K10),
            "11" => Ok(Self::K11),
            other => Err(Error::Domain(format!("unknown mumford kind {other:?}"))),
        }
    }
}

/// vartheta_{ab}(tau, z) in the convention
/// vartheta_00 = sum_j q^{j^2/2} e^{2 pi i j z}, vartheta_01 with (-1)^j,
/// vartheta_10 over half-odd indices, and
/// vartheta_11(tau, z) = sum_j e^{pi i (j+1/2)^2 tau + 2 pi i (j+1/2)(z+1/2)}.
pub fn mumford_eval(
    kind: MumfordKind,
    tau: Complex64,
    z: Complex64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    check_upper_half(tau)?;
    let linear = 0.5 * z.im.abs() / tau.im + 1.0;
    let cut = choose_truncation(0.5, tau, linear, budget)? as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let term = match kind {
            MumfordKind::K00 => cis2pi(0.5 * (j * j) as f64 * tau + j as f64 * z),
            MumfordKind::K01 => {
                let s = if j.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
                s * cis2pi(0.5 * (j * j) as f64 * tau + j as f64 * z)
            }
            MumfordKind::K10 => {
                let mu = j as f64 + 0.5;
                cis2pi(0.5 * mu * mu * tau + mu * z)
            }
            MumfordKind::K11 => {
                let mu = j as f64 + 0.5;
                cis2pi(0.5 * mu * mu * tau + mu * (z + 0.5))
            }
        };
        acc += term;
    }
    Ok(acc)
}

/// Residuals of the quasi-periodicity laws of theta^(sign)_{n,m}:
///
/// * `flow`:  theta(tau, z + (c/m) tau) = q^{-c^2/4m} e^{-pi i c z} theta_{n+c,m}(tau, z)
/// * `shift`: theta(tau, z + b/m) = e^{pi i n b / m} theta(tau, z)
/// * `index`: theta^(-)_{n+2m,m} = -theta^(-)_{n,m} and theta^(+)_{n+2m,m} = theta^(+)_{n,m}
#[derive(Debug, Clone, Copy)]
pub struct TranslateResiduals {
    pub flow: f64,
    pub shift: f64,
    pub index: f64,
}

impl TranslateResiduals {
    pub fn max(&self) -> f64 {
        self.flow.max(self.shift).max(self.index)
    }
}

pub fn theta_translate_check(
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
    c: i64,
    b: i64,
    budget: &TruncationBudget,
) -> Result<TranslateResiduals> {
    let m2 = idx.m2;
    // flow law
    let lhs = theta_eval(
        idx,
        tau,
        z + Complex64::new(2.0 * c as f64 / m2 as f64, 0.0) * tau,
        budget,
    )?;
    let shifted = ThetaIndex::new(idx.n2 + 2 * c, m2, idx.sign)?;
    let rhs = q_rational_power(tau, Ratio::new(-c * c, 2 * m2))?
        * (-I * PI * c as f64 * z).exp()
        * theta_eval(&shifted, tau, z, budget)?;
    let flow = residual(lhs, rhs);
    // b/m translation
    let lhs = theta_eval(idx, tau, z + 2.0 * b as f64 / m2 as f64, budget)?;
    let rhs = phase_pi(idx.n2 * b, m2) * theta_eval(idx, tau, z, budget)?;
    let shift = residual(lhs, rhs);
    // index law
    let bumped = ThetaIndex::new(idx.n2 + 2 * m2, m2, idx.sign)?;
    let lhs = theta_eval(&bumped, tau, z, budget)?;
    let sign = if idx.sign == ThetaSign::Minus {
        -1.0
    } else {
        1.0
    };
    let rhs = sign * theta_eval(idx, tau, z, budget)?;
    let index = residual(lhs, rhs);
    Ok(TranslateResiduals { flow, shift, index })
}

/// Residual of vartheta_11(tau, z + nu tau) =
/// (-1)^nu q^{-nu^2/2} e^{-2 pi i nu z} vartheta_11(tau, z).
pub fn vartheta11_translate_check(
    tau: Complex64,
    z: Complex64,
    nu: i64,
    budget: &TruncationBudget,
) -> Result<f64> {
    let lhs = mumford_eval(MumfordKind::K11, tau, z + nu as f64 * tau, budget)?;
    let sign = if nu.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    let rhs = sign
        * q_rational_power(tau, Ratio::new(-nu * nu, 2))?
        * cis2pi(-(nu as f64) * z)
        * mumford_eval(MumfordKind::K11, tau, z, budget)?;
    Ok(residual(lhs, rhs))
}

/// Residual of the S-transformation rule for the given index.
///
/// Integer characteristics with the (+) sign close among themselves:
///
///   theta_{n,m}(-1/tau, z/tau) = sqrt(-i tau) / sqrt(2m) e^{pi i m z^2 / 2 tau}
///       sum_{k mod 2m} e^{-pi i n k / m} theta_{k,m}(tau, z)
///
/// and half-odd characteristics with the (-) sign close among themselves with
/// kernel e^{-pi i n n' / m}. Mixed parities have no closed rule here.
pub fn theta_s_check(
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
    budget: &TruncationBudget,
) -> Result<f64> {
    check_upper_half(tau)?;
    let m2 = idx.m2;
    let lhs = theta_eval(idx, -1.0 / tau, z / tau, budget)?;
    let pref = principal_half_power(tau, 1)? / (m2 as f64).sqrt()
        * (I * PI * idx.m() * z * z / (2.0 * tau)).exp();
    let mut sum = Complex64::new(0.0, 0.0);
    match (idx.sign, idx.n2.rem_euclid(2)) {
        (ThetaSign::Plus, 0) => {
            for k in 0..m2 {
                let kernel = phase_pi(-idx.n2 * k, m2);
                let t = ThetaIndex::new(2 * k, m2, ThetaSign::Plus)?;
                sum += kernel * theta_eval(&t, tau, z, budget)?;
            }
        }
        (ThetaSign::Minus, 1) => {
            for k in 0..m2 {
                let kernel = phase_pi(-idx.n2 * (2 * k + 1), 2 * m2);
                let t = ThetaIndex::new(2 * k + 1, m2, ThetaSign::Minus)?;
                sum += kernel * theta_eval(&t, tau, z, budget)?;
            }
        }
        _ => {
            return Err(Error::Domain(
                "S-rule implemented for integer-index (+) and half-odd (-) thetas only".into(),
            ))
        }
    }
    Ok(residual(lhs, pref * sum))
}

/// Residual of eta(-1/tau) = sqrt(-i tau) eta(tau).
pub fn eta_s_check(tau: Complex64, budget: &TruncationBudget) -> Result<f64> {
    let lhs = eta_eval(-1.0 / tau, budget)?;
    let rhs = principal_half_power(tau, 1)? * eta_eval(tau, budget)?;
    Ok(residual(lhs, rhs))
}

/// Residual of eta(tau + 1) = e^{pi i / 12} eta(tau).
pub fn eta_t_check(tau: Complex64, budget: &TruncationBudget) -> Result<f64> {
    let lhs = eta_eval(tau + 1.0, budget)?;
    let rhs = phase_pi(1, 12) * eta_eval(tau, budget)?;
    Ok(residual(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> TruncationBudget {
        TruncationBudget::default()
    }

    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    const TAU_I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn theta_01_at_i() {
        // oracle: 1 + 2 sum_{j>=1} e^{-2 pi j^2}, summed independently
        let mut want = 1.0f64;
        for j in 1..=12 {
            want += 2.0 * (-2.0 * PI * (j * j) as f64).exp();
        }
        let idx = ThetaIndex::new(0, 2, ThetaSign::Plus).unwrap();
        let got = theta_eval(&idx, TAU_I, ZERO, &b()).unwrap();
        assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-12);
        assert!((got.re - 1.0037349).abs() < 1e-7);
    }

    #[test]
    fn theta_minus_half_half_vanishes() {
        let idx = ThetaIndex::new(1, 1, ThetaSign::Minus).unwrap();
        for tau in [TAU_I, Complex64::new(0.3, 0.8)] {
            assert!(theta_eval(&idx, tau, ZERO, &b()).unwrap().norm() < 1e-13);
        }
    }

    #[test]
    fn theta_reflection_symmetry() {
        let tau = Complex64::new(0.21, 1.1);
        let z = Complex64::new(0.37, -0.22);
        for (n2, m2, sign) in [
            (2, 4, ThetaSign::Plus),
            (3, 3, ThetaSign::Minus),
            (1, 2, ThetaSign::Plus),
        ] {
            let a = theta_eval(&ThetaIndex::new(-n2, m2, sign).unwrap(), tau, -z, &b()).unwrap();
            let c = theta_eval(&ThetaIndex::new(n2, m2, sign).unwrap(), tau, z, &b()).unwrap();
            assert!((a - c).norm() < 1e-12, "({n2},{m2})");
        }
    }

    #[test]
    fn eta_at_i() {
        // oracle: product to N = 200 at q = e^{-2 pi}
        let q = (-2.0 * PI).exp();
        let mut prod = 1.0f64;
        for n in 1..=200 {
            prod *= 1.0 - q.powi(n);
        }
        let want = q.powf(1.0 / 24.0) * prod;
        let got = eta_eval(TAU_I, &b()).unwrap();
        assert!((got.re - want).abs() < 1e-13 && got.im.abs() < 1e-13);
        assert!((got.re - 0.7682254).abs() < 1e-7);
    }

    #[test]
    fn eta_transformations() {
        for tau in [TAU_I, Complex64::new(0.4, 0.9), Complex64::new(-0.3, 0.6)] {
            assert!(eta_t_check(tau, &b()).unwrap() < 1e-12);
            assert!(eta_s_check(tau, &b()).unwrap() < 1e-10);
        }
    }

    #[test]
    fn vartheta11_is_odd_and_vanishes_at_zero() {
        let tau = Complex64::new(0.11, 0.9);
        assert!(
            mumford_eval(MumfordKind::K11, tau, ZERO, &b())
                .unwrap()
                .norm()
                < 1e-13
        );
        let z = Complex64::new(0.3, 0.15);
        let plus = mumford_eval(MumfordKind::K11, tau, z, &b()).unwrap();
        let minus = mumford_eval(MumfordKind::K11, tau, -z, &b()).unwrap();
        assert!((plus + minus).norm() < 1e-12);
    }

    #[test]
    fn convention_anchor_theta_minus_vs_vartheta11() {
        // theta^(-)_{1/2,1/2}(tau, 2z) + i vartheta_11(tau, z) = 0
        let idx = ThetaIndex::new(1, 1, ThetaSign::Minus).unwrap();
        for (tau, z) in [
            (TAU_I, Complex64::new(0.2, 0.1)),
            (Complex64::new(0.37, 1.4), Complex64::new(-0.33, 0.4)),
        ] {
            let lhs = theta_eval(&idx, tau, 2.0 * z, &b()).unwrap();
            let rhs = -I * mumford_eval(MumfordKind::K11, tau, z, &b()).unwrap();
            assert!((lhs - rhs).norm() < 1e-11, "tau={tau}, z={z}");
        }
    }

    #[test]
    fn gauss_formula_numeric() {
        // vartheta_00(2 tau, 0) = eta(2tau)^5 / (eta(tau)^2 eta(4tau)^2)
        for tau in [TAU_I, Complex64::new(0.2, 0.8)] {
            let lhs = mumford_eval(MumfordKind::K00, 2.0 * tau, ZERO, &b()).unwrap();
            let e1 = eta_eval(tau, &b()).unwrap();
            let e2 = eta_eval(2.0 * tau, &b()).unwrap();
            let e4 = eta_eval(4.0 * tau, &b()).unwrap();
            let rhs = e2.powu(5) / (e1.powu(2) * e4.powu(2));
            assert!((lhs - rhs).norm() < 1e-11);
        }
    }

    #[test]
    fn quasi_periodicity_residuals() {
        let tau = Complex64::new(0.31, 1.2);
        let z = Complex64::new(0.4, 0.23);
        for (n2, m2, sign) in [
            (0, 2, ThetaSign::Plus),
            (1, 2, ThetaSign::Plus),
            (3, 3, ThetaSign::Minus),
            (1, 1, ThetaSign::Minus),
        ] {
            let idx = ThetaIndex::new(n2, m2, sign).unwrap();
            for c in -m2..=m2 {
                for bshift in -m2..=m2 {
                    let res = theta_translate_check(&idx, tau, z, c, bshift, &b()).unwrap();
                    assert!(res.max() < 1e-10, "({n2},{m2},{c},{bshift}): {res:?}");
                }
            }
        }
        assert!(vartheta11_translate_check(tau, z, 1, &b()).unwrap() < 1e-11);
        let trivial = theta_translate_check(
            &ThetaIndex::new(1, 2, ThetaSign::Plus).unwrap(),
            tau,
            z,
            0,
            0,
            &b(),
        )
        .unwrap();
        assert!(trivial.flow < 1e-15 && trivial.shift < 1e-15);
    }

    #[test]
    fn s_rules_hold() {
        let points = [
            (TAU_I, Complex64::new(0.2, 0.0)),
            (Complex64::new(0.41, 1.3), Complex64::new(0.25, -0.31)),
            (Complex64::new(-0.27, 0.7), Complex64::new(-0.4, 0.2)),
        ];
        for (tau, z) in points {
            for m2 in [1i64, 2, 3, 4] {
                for n in 0..m2 {
                    let plus = ThetaIndex::new(2 * n, m2, ThetaSign::Plus).unwrap();
                    assert!(
                        theta_s_check(&plus, tau, z, &b()).unwrap() < 1e-9,
                        "+({n},{m2})"
                    );
                    let minus = ThetaIndex::new(2 * n + 1, m2, ThetaSign::Minus).unwrap();
                    assert!(
                        theta_s_check(&minus, tau, z, &b()).unwrap() < 1e-9,
                        "-({n},{m2})"
                    );
                }
            }
        }
        // self-dual point
        let idx = ThetaIndex::new(0, 2, ThetaSign::Plus).unwrap();
        assert!(theta_s_check(&idx, TAU_I, ZERO, &b()).unwrap() < 1e-10);
    }

    #[test]
    fn s_rule_rejects_mixed_parity() {
        let idx = ThetaIndex::new(1, 2, ThetaSign::Plus).unwrap();
        assert!(matches!(
            theta_s_check(&idx, TAU_I, ZERO, &b()),
            Err(Error::Domain(_))
        ));
    }
}
