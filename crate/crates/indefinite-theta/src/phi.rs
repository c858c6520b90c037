//! The Appell-type sum Phi_1^{(+-)[m,s]} and its identities: root-of-unity
//! averaging, the s-shift with theta corrections, the Kac-Peterson
//! specialization, and the auxiliary triple sum A^{[m,s]} evaluated through
//! its two reindexings.
//!
//! The fourth argument of Phi_1 is fixed to 0 throughout and omitted from the
//! signatures.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::numerics::{
    check_upper_half, choose_truncation, cis2pi, ratio_f64, residual, unity_root, TruncationBudget,
};
use crate::theta::{
    eta_eval, mumford_eval, theta_eval_weighted, MumfordKind, ThetaIndex, ThetaSign,
};

const I: Complex64 = Complex64::new(0.0, 1.0);
const PI: f64 = std::f64::consts::PI;

/// Parameters of Phi_1^{(sign)[m,s]}: level m = m2/2 and shift s = s2/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiParams {
    pub m2: i64,
    pub s2: i64,
    pub sign: ThetaSign,
}

impl PhiParams {
    pub fn new(m2: i64, s2: i64, sign: ThetaSign) -> Result<Self> {
        if m2 < 1 {
            return Err(Error::Domain(format!("phi level 2m = {m2} must be >= 1")));
        }
        Ok(Self { m2, s2, sign })
    }

    pub fn m(&self) -> f64 {
        self.m2 as f64 / 2.0
    }

    pub fn s(&self) -> f64 {
        self.s2 as f64 / 2.0
    }
}

/// Truncation cutoff for a Phi-type bilateral sum whose denominators are
/// 1 - e^{2 pi i w} q^{g j}: wide enough for the tail bound and to cover the
/// strip where a denominator can vanish.
fn phi_cutoff(
    quad: f64,
    linear: f64,
    w_im: f64,
    gear: f64,
    tau: Complex64,
    budget: &TruncationBudget,
) -> Result<i64> {
    let base = choose_truncation(quad, tau, linear, budget)? as i64;
    let pole_center = (w_im / (gear * tau.im)).abs().ceil() as i64;
    Ok(base.max(pole_center + 2))
}

/// The raw bilateral sum; accurate only while Im(z1 + z2) stays small
/// compared to Im(tau), since far-flowed z2 makes huge terms cancel.
fn phi1_raw(
    p: &PhiParams,
    tau: Complex64,
    z1: Complex64,
    z2: Complex64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    let m = p.m();
    let s = p.s();
    let linear = s.abs() + m * (z1 + z2).im.abs() / tau.im + 1.0;
    let cut = phi_cutoff(m, linear, z1.im, 1.0, tau, budget)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let jf = j as f64;
        let denom = Complex64::new(1.0, 0.0) - cis2pi(z1 + jf * tau);
        if denom.norm() < budget.pole_guard {
            return Err(Error::PoleProximity(format!(
                "1 - e(z1) q^{j} has modulus {:.3e} at z1 = {z1}",
                denom.norm()
            )));
        }
        let sign = if p.sign == ThetaSign::Minus && j.rem_euclid(2) == 1 {
            -1.0
        } else {
            1.0
        };
        acc += sign * cis2pi(m * jf * (z1 + z2) + (m * jf * jf + s * jf) * tau) / denom;
    }
    Ok(acc * cis2pi(s * z1))
}

/// Phi_1^{(sign)[m,s]}(tau, z1, z2, 0) =
///   sum_j (sign)^j e^{2 pi i m j (z1+z2) + 2 pi i s z1} q^{m j^2 + s j}
///                / (1 - e^{2 pi i z1} q^j).
///
/// The raw sum is balanced exactly when beta = s + m Im(z1+z2)/Im(tau) sits
/// near zero; otherwise its biggest terms exceed the value by roughly
/// |q|^{-beta^2/4m} and double precision drowns. Since the s-shift ladder
/// moves beta by integers at no cost (the theta corrections are evaluated in
/// fused form, each to full relative accuracy), the evaluator re-centers
/// beta into [-1/2, 1/2] and climbs back.
pub fn phi1_eval(
    p: &PhiParams,
    tau: Complex64,
    z1: Complex64,
    z2: Complex64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    check_upper_half(tau)?;
    let beta = p.s() + p.m() * (z1 + z2).im / tau.im;
    let steps = beta.round();
    if steps == 0.0 || !steps.is_finite() {
        return phi1_raw(p, tau, z1, z2, budget);
    }
    let steps = steps as i64;
    let reduced = PhiParams::new(p.m2, p.s2 - 2 * steps, p.sign)?;
    let base = phi1_raw(&reduced, tau, z1, z2, budget)?;
    // Phi^{[m, s_red + steps]} = Phi^{[m, s_red]} -+ ladder corrections
    let mut correction = Complex64::new(0.0, 0.0);
    let js: Vec<i64> = if steps > 0 {
        (0..steps).collect()
    } else {
        (1..=-steps).map(|j| -j).collect()
    };
    for j in js {
        let s2j = reduced.s2 + 2 * j; // s_red + j going up, s_red - j going down
        let idx = ThetaIndex::new(s2j, p.m2, p.sign)?;
        correction += (I * PI * (s2j as f64 / 2.0) * (z1 - z2)).exp()
            * theta_eval_weighted(&idx, tau, z1 + z2, Ratio::new(-s2j * s2j, 8 * p.m2), budget)?;
    }
    Ok(if steps > 0 {
        base - correction
    } else {
        base + correction
    })
}

/// [`phi1_eval`] at the flowed point (tau, z1, w2 + 2 k tau), for callers
/// that know the flow structure of their argument exactly.
///
/// The ladder thetas then sit at z1 + w2 + 2k tau; the quasi-periodicity law
/// walks them down to the unflowed residual z1 + w2, where the fused paired
/// evaluation resolves their zeros exactly instead of reconstructing the
/// flow from a rounded argument.
pub fn phi1_eval_flowed(
    p: &PhiParams,
    tau: Complex64,
    w1: Complex64,
    w2: Complex64,
    k: i64,
    budget: &TruncationBudget,
) -> Result<Complex64> {
    check_upper_half(tau)?;
    let z1 = w1;
    let z2 = w2 + 2.0 * k as f64 * tau;
    let beta = p.s() + p.m() * ((z1 + w2).im + 2.0 * k as f64 * tau.im) / tau.im;
    let steps = beta.round();
    if steps == 0.0 || !steps.is_finite() {
        return phi1_raw(p, tau, z1, z2, budget);
    }
    let steps = steps as i64;
    let reduced = PhiParams::new(p.m2, p.s2 - 2 * steps, p.sign)?;
    let base = phi1_raw(&reduced, tau, z1, z2, budget)?;
    let mut correction = Complex64::new(0.0, 0.0);
    let js: Vec<i64> = if steps > 0 {
        (0..steps).collect()
    } else {
        (1..=-steps).map(|j| -j).collect()
    };
    // theta_sigma(tau, u + (c/m) tau) = q^{-c^2/4m} e^{-pi i c u} theta_{sigma+c}(tau, u)
    let c = k * p.m2;
    let u = z1 + w2;
    for j in js {
        let s2j = reduced.s2 + 2 * j;
        let idx = ThetaIndex::new(s2j + 2 * c, p.m2, p.sign)?;
        let extra = Ratio::new(-s2j * s2j, 8 * p.m2) - Ratio::new(c * c, 2 * p.m2);
        correction += (I * PI * (s2j as f64 / 2.0) * (z1 - z2)).exp()
            * (-I * PI * c as f64 * u).exp()
            * theta_eval_weighted(&idx, tau, u, extra, budget)?;
    }
    Ok(if steps > 0 {
        base - correction
    } else {
        base + correction
    })
}

/// Which of the two displayed averaging formulas to exercise: part one pairs
/// the phase e^{+2 pi i p k / n} with z1 - k/n, part two pairs
/// e^{-2 pi i p k / n} with z1 + k/n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AveragePart {
    One,
    Two,
}

/// Sign of the z2 +- k/n shift; both directions reach the same right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Z2Shift {
    Plus,
    Minus,
}

/// Both sides of the root-of-unity average
///
///   sum_{k=0}^{n-1} e^{+-2 pi i p k/n} Phi_1^{[nm,0]}(tau, z1 -+ k/n, z2 +- k/n, 0)
///     = n sum_j e^{2 pi i n m j (z1+z2) + 2 pi i p z1} q^{n m j^2 + p j}
///           / (1 - e^{2 pi i n z1} q^{n j}),
///
/// where `m2` doubles the base half-integer m and the Phi level is n*m.
#[allow(clippy::too_many_arguments)]
pub fn phi_average_check(
    m2: i64,
    n_div: u32,
    p: u32,
    part: AveragePart,
    z2_shift: Z2Shift,
    tau: Complex64,
    z1: Complex64,
    z2: Complex64,
    budget: &TruncationBudget,
) -> Result<(Complex64, Complex64)> {
    if n_div < 1 || p >= n_div {
        return Err(Error::Domain(format!(
            "need 0 <= p < n, got p={p}, n={n_div}"
        )));
    }
    let n = n_div as i64;
    let level = PhiParams::new(n * m2, 0, ThetaSign::Plus)?;
    let mut lhs = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let shift = k as f64 / n as f64;
        let (phase, z1k) = match part {
            AveragePart::One => (unity_root(n_div, (p as i64) * k), z1 - shift),
            AveragePart::Two => (unity_root(n_div, -(p as i64) * k), z1 + shift),
        };
        let z2k = match z2_shift {
            Z2Shift::Plus => z2 + shift,
            Z2Shift::Minus => z2 - shift,
        };
        lhs += phase * phi1_eval(&level, tau, z1k, z2k, budget)?;
    }

    // right side: level n m, geometric gear n, characteristic p
    let nm = n as f64 * m2 as f64 / 2.0;
    let pf = p as f64;
    let linear = pf + nm * (z1 + z2).im.abs() / tau.im + 1.0;
    let cut = phi_cutoff(nm, linear, n as f64 * z1.im, n as f64, tau, budget)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let jf = j as f64;
        let denom = Complex64::new(1.0, 0.0) - cis2pi(n as f64 * (z1 + jf * tau));
        if denom.norm() < budget.pole_guard {
            return Err(Error::PoleProximity(format!(
                "1 - e(n z1) q^{{n {j}}} has modulus {:.3e}",
                denom.norm()
            )));
        }
        rhs += cis2pi(nm * jf * (z1 + z2) + (nm * jf * jf + pf * jf) * tau) / denom;
    }
    rhs *= n as f64 * cis2pi(pf * z1);
    Ok((lhs, rhs))
}

/// Both sides of the s-shift identity. For n_shift = n > 0,
///
///   Phi^{(+-)[m, s+n]} = Phi^{(+-)[m,s]}
///     - sum_{j=0}^{n-1} e^{pi i (s+j)(z1-z2)} q^{-(s+j)^2/4m}
///                       theta^(+-)_{s+j, m}(tau, z1+z2),
///
/// and for n_shift = -n < 0 the correction enters with +, summed over
/// j = 1..n with index s - j.
pub fn phi_shift_check(
    p: &PhiParams,
    n_shift: i64,
    tau: Complex64,
    z1: Complex64,
    z2: Complex64,
    budget: &TruncationBudget,
) -> Result<(Complex64, Complex64)> {
    if n_shift == 0 {
        return Err(Error::Domain("shift must be nonzero".into()));
    }
    let shifted = PhiParams::new(p.m2, p.s2 + 2 * n_shift, p.sign)?;
    let lhs = phi1_eval(&shifted, tau, z1, z2, budget)?;
    let base = phi1_eval(p, tau, z1, z2, budget)?;
    let mut correction = Complex64::new(0.0, 0.0);
    let js: Vec<i64> = if n_shift > 0 {
        (0..n_shift).collect()
    } else {
        (1..=-n_shift).map(|j| -j).collect()
    };
    for j in js {
        let s2j = p.s2 + 2 * j; // index s + j (up) or s - j (down)
        let idx = ThetaIndex::new(s2j, p.m2, p.sign)?;
        correction += (I * PI * (s2j as f64 / 2.0) * (z1 - z2)).exp()
            * theta_eval_weighted(&idx, tau, z1 + z2, Ratio::new(-s2j * s2j, 8 * p.m2), budget)?;
    }
    let rhs = if n_shift > 0 {
        base - correction
    } else {
        base + correction
    };
    Ok((lhs, rhs))
}

/// Both sides of the Kac-Peterson specialization: for s an odd half-integer
/// and k an integer,
///
///   Phi_1^{(-)[1/2, s]}(tau, z, -z + 2 k tau, 0)
///     = -i e^{-2 pi i k z} eta(tau)^3 / vartheta_11(tau, z).
pub fn kac_peterson_check(
    s2: i64,
    k: i64,
    tau: Complex64,
    z: Complex64,
    budget: &TruncationBudget,
) -> Result<(Complex64, Complex64)> {
    if s2.rem_euclid(2) == 0 {
        return Err(Error::Domain(format!(
            "s = {s2}/2 must be an odd half-integer"
        )));
    }
    let p = PhiParams::new(1, s2, ThetaSign::Minus)?;
    let lhs = phi1_eval_flowed(&p, tau, z, -z, k, budget)?;
    let v11 = mumford_eval(MumfordKind::K11, tau, z, budget)?;
    if v11.norm() < budget.pole_guard {
        return Err(Error::PoleProximity(format!(
            "vartheta_11(tau, z) = {:.3e} at z = {z}",
            v11.norm()
        )));
    }
    let eta = eta_eval(tau, budget)?;
    let rhs = -I * cis2pi(-(k as f64) * z) * eta.powu(3) / v11;
    Ok((lhs, rhs))
}

/// The triple sum A^{[m,s]}(tau, z1, z2) computed two ways: `via_flow` sums
///
///   sum_j (-1)^j q^{(m+1/2) j^2 + s j} e^{2 pi i j m (z1+z2)}
///       Phi_1^{[m,0]}(tau, z1, z2 + 2 j tau, 0)
///
/// and `via_closed` is
///
///   -i e^{pi i m s (z1-z2)/(m+1/2)} q^{-s^2/(4(m+1/2))}
///      theta^(-)_{s, m+1/2}(tau, z1 + z2 + (z1-z2)/(2m+1))
///      eta^3 / vartheta_11(tau, z1).
pub fn a_series_check(
    m2: i64,
    s2: i64,
    tau: Complex64,
    z1: Complex64,
    z2: Complex64,
    budget: &TruncationBudget,
) -> Result<(Complex64, Complex64)> {
    if s2.rem_euclid(2) == 0 {
        return Err(Error::Domain(format!(
            "s = {s2}/2 must be an odd half-integer"
        )));
    }
    check_upper_half(tau)?;
    let m = m2 as f64 / 2.0;
    let s = s2 as f64 / 2.0;
    let level = PhiParams::new(m2, 0, ThetaSign::Plus)?;
    // the inner Phi_1 at z2 + 2j tau peaks like |q|^{-m j^2}, which the
    // outer prefactor beats by |q|^{(m + 1/2) j^2}; net quadratic rate 1/2.
    // The spectral flow of the inner sum is expanded right here with the
    // outer q-power fused into every theta correction, so no intermediate
    // ever grows beyond its net size (the ladder alone would overflow).
    let cut = choose_truncation(0.5, tau, s.abs() + 2.0, budget)? as i64 + 2;
    let base = phi1_raw(&level, tau, z1, z2, budget)?;
    let mut via_flow = Complex64::new(0.0, 0.0);
    for j in -cut..=cut {
        let jf = j as f64;
        let sign = if j.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
        // outer prefactor, flow phase e^{-4 pi i m j z1}, outer q-power
        let e_outer = Ratio::new((m2 + 1) * j * j + s2 * j, 2);
        let a_j = cis2pi(ratio_f64(e_outer) * tau + m * jf * (z1 + z2) - (m2 * j) as f64 * z1);
        let mut term = a_j * base;
        // ladder from s = 0 to 2mj: indices l (up) or -l (down)
        let steps = m2 * j;
        let ls: Vec<i64> = if steps > 0 {
            (0..steps).collect()
        } else {
            (1..=-steps).map(|l| -l).collect()
        };
        for l in ls {
            let idx = ThetaIndex::new(2 * l, m2, ThetaSign::Plus)?;
            let fused = theta_eval_weighted(
                &idx,
                tau,
                z1 + z2,
                e_outer - Ratio::new(l * l, 2 * m2),
                budget,
            )?;
            let phase = (I * PI * l as f64 * (z1 - z2)).exp()
                * cis2pi(m * jf * (z1 + z2) - (m2 * j) as f64 * z1);
            let contribution = phase * fused;
            if steps > 0 {
                term -= contribution;
            } else {
                term += contribution;
            }
        }
        via_flow += sign * term;
    }

    let v11 = mumford_eval(MumfordKind::K11, tau, z1, budget)?;
    if v11.norm() < budget.pole_guard {
        return Err(Error::PoleProximity(format!(
            "vartheta_11(tau, z1) = {:.3e}",
            v11.norm()
        )));
    }
    let theta = theta_eval_weighted(
        &ThetaIndex::new(s2, m2 + 1, ThetaSign::Minus)?,
        tau,
        z1 + z2 + (z1 - z2) / (m2 + 1) as f64,
        Ratio::new(-s2 * s2, 8 * (m2 + 1)),
        budget,
    )?;
    let eta = eta_eval(tau, budget)?;
    let via_closed = -I
        * (I * PI * (m2 as f64 * s2 as f64 / (2.0 * (m2 + 1) as f64)) * (z1 - z2)).exp()
        * theta
        * eta.powu(3)
        / v11;
    Ok((via_flow, via_closed))
}

/// Convenience wrapper returning the residual of an identity pair.
pub fn pair_residual(pair: (Complex64, Complex64)) -> f64 {
    residual(pair.0, pair.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> TruncationBudget {
        TruncationBudget::default()
    }

    #[test]
    fn phi1_matches_doubled_budget() {
        let p = PhiParams::new(2, 1, ThetaSign::Plus).unwrap();
        let tau = Complex64::new(0.13, 0.9);
        let z1 = Complex64::new(0.21, 0.17);
        let z2 = Complex64::new(-0.34, 0.08);
        let coarse = phi1_eval(&p, tau, z1, z2, &b()).unwrap();
        let fine = phi1_eval(
            &p,
            tau,
            z1,
            z2,
            &TruncationBudget::new(400, 1e-14, 1e-8).unwrap(),
        )
        .unwrap();
        assert!((coarse - fine).norm() < 1e-11);
    }

    #[test]
    fn phi1_summation_order_is_immaterial() {
        // independent resummation from the raw definition, largest |j| first
        let p = PhiParams::new(1, 1, ThetaSign::Minus).unwrap();
        let tau = Complex64::new(-0.21, 1.1);
        let z1 = Complex64::new(0.4, 0.11);
        let z2 = Complex64::new(0.05, -0.2);
        let lib = phi1_eval(&p, tau, z1, z2, &b()).unwrap();
        let mut acc = Complex64::new(0.0, 0.0);
        let (m, s) = (0.5, 0.5);
        for j in (-40i64..=40).rev() {
            let jf = j as f64;
            let sign = if j.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
            let denom = Complex64::new(1.0, 0.0) - cis2pi(z1 + jf * tau);
            acc += sign * cis2pi(m * jf * (z1 + z2) + (m * jf * jf + s * jf) * tau) / denom;
        }
        acc *= cis2pi(s * z1);
        assert!((lib - acc).norm() < 1e-12);
    }

    #[test]
    fn phi1_pole_is_detected() {
        let p = PhiParams::new(2, 0, ThetaSign::Plus).unwrap();
        let tau = Complex64::new(0.0, 1.0);
        // z1 on the lattice Z + tau Z
        let err = phi1_eval(&p, tau, tau + 1.0, Complex64::new(0.3, 0.0), &b()).unwrap_err();
        assert!(matches!(err, Error::PoleProximity(_)));
    }

    #[test]
    fn average_n1_is_definitionally_trivial() {
        let tau = Complex64::new(0.2, 0.8);
        let z1 = Complex64::new(0.31, 0.12);
        let z2 = Complex64::new(-0.14, 0.25);
        let (l, r) =
            phi_average_check(1, 1, 0, AveragePart::One, Z2Shift::Plus, tau, z1, z2, &b()).unwrap();
        assert!((l - r).norm() < 1e-13);
    }

    #[test]
    fn average_all_variants_agree() {
        let tau = Complex64::new(-0.11, 1.05);
        let z1 = Complex64::new(0.23, 0.19);
        let z2 = Complex64::new(0.41, -0.07);
        for part in [AveragePart::One, AveragePart::Two] {
            for shift in [Z2Shift::Plus, Z2Shift::Minus] {
                let (l, r) = phi_average_check(1, 2, 1, part, shift, tau, z1, z2, &b()).unwrap();
                assert!(
                    residual(l, r) < 1e-10,
                    "{part:?}/{shift:?}: {}",
                    residual(l, r)
                );
            }
        }
    }

    #[test]
    fn shift_up_and_down() {
        let p = PhiParams::new(2, 0, ThetaSign::Plus).unwrap();
        let tau = Complex64::new(0.17, 0.95);
        let z1 = Complex64::new(0.29, 0.13);
        let z2 = Complex64::new(-0.31, 0.21);
        let (l, r) = phi_shift_check(&p, 1, tau, z1, z2, &b()).unwrap();
        assert!(residual(l, r) < 1e-10);
        let (l, r) = phi_shift_check(&p, -2, tau, z1, z2, &b()).unwrap();
        assert!(residual(l, r) < 1e-10);
    }

    #[test]
    fn shift_roundtrip_restores_value() {
        // apply the up-shift correction, then the down-shift correction from
        // the shifted parameters; the original value must come back
        let p = PhiParams::new(2, 1, ThetaSign::Minus).unwrap();
        let up = PhiParams::new(2, 1 + 2 * 2, ThetaSign::Minus).unwrap();
        let tau = Complex64::new(-0.23, 1.3);
        let z1 = Complex64::new(0.37, 0.1);
        let z2 = Complex64::new(0.12, 0.31);
        let original = phi1_eval(&p, tau, z1, z2, &b()).unwrap();
        let (upv, upr) = phi_shift_check(&p, 2, tau, z1, z2, &b()).unwrap();
        assert!(residual(upv, upr) < 1e-10);
        let (downv, downr) = phi_shift_check(&up, -2, tau, z1, z2, &b()).unwrap();
        assert!(residual(downv, downr) < 1e-10);
        assert!((downv - original).norm() < 1e-10);
    }

    #[test]
    fn kac_peterson_spot_checks() {
        let tau = Complex64::new(0.19, 1.15);
        let z = Complex64::new(0.33, 0.21);
        for s2 in [1i64, 3, -5] {
            for k in [-1i64, 0, 2] {
                let (l, r) = kac_peterson_check(s2, k, tau, z, &b()).unwrap();
                assert!(residual(l, r) < 1e-9, "s2={s2}, k={k}: {}", residual(l, r));
            }
        }
    }

    #[test]
    fn kac_peterson_rejects_integer_s() {
        assert!(matches!(
            kac_peterson_check(
                2,
                0,
                Complex64::new(0.0, 1.0),
                Complex64::new(0.3, 0.1),
                &b()
            ),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn a_series_two_routes_agree() {
        let tau = Complex64::new(0.21, 1.2);
        let z1 = Complex64::new(0.31, 0.18);
        let z2 = Complex64::new(-0.22, 0.09);
        for (m2, s2) in [(2i64, 1i64), (1, 1), (2, 3), (1, 3)] {
            let (flow, closed) = a_series_check(m2, s2, tau, z1, z2, &b()).unwrap();
            assert!(
                (flow - closed).norm() < 1e-8,
                "(m2={m2}, s2={s2}): {}",
                (flow - closed).norm()
            );
        }
        // collapsed elliptic arguments
        let (flow, closed) = a_series_check(2, 1, tau, z1, z1, &b()).unwrap();
        assert!((flow - closed).norm() < 1e-8);
    }
}
