//! Elementary numeric kernels: the nome, rational powers of q, principal
//! half-odd powers of (-i*tau), roots of unity, the partial-fraction average,
//! and certified truncation of bilateral theta-like sums.
//!
//! Every rational power of q is computed as exp(2*pi*i*r*tau), never as a
//! complex power of q itself, so no branch of the logarithm is ever chosen.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::error::{Error, Result};

pub const TAU_2PI: f64 = std::f64::consts::TAU;

/// Budget for bilateral series truncation and pole guarding.
///
/// `j_max` caps the summation cutoff, `tol` is the target absolute tail
/// bound, and `pole_guard` is the smallest allowed modulus of any partial
/// denominator.
#[derive(Debug, Clone, Copy)]
pub struct TruncationBudget {
    pub j_max: u32,
    pub tol: f64,
    pub pole_guard: f64,
}

impl TruncationBudget {
    pub fn new(j_max: u32, tol: f64, pole_guard: f64) -> Result<Self> {
        if j_max < 1 || !(tol > 0.0 && tol < 1.0) || !(pole_guard > 0.0 && pole_guard < 1.0) {
            return Err(Error::Domain(format!(
                "invalid budget: j_max={j_max}, tol={tol}, pole_guard={pole_guard}"
            )));
        }
        Ok(Self {
            j_max,
            tol,
            pole_guard,
        })
    }
}

impl Default for TruncationBudget {
    /// j_max = 200, tol = 1e-12, pole_guard = 1e-8: double-precision headroom
    /// for Im(tau) >= 0.3.
    fn default() -> Self {
        Self {
            j_max: 200,
            tol: 1e-12,
            pole_guard: 1e-8,
        }
    }
}

/// A point (tau, z) with tau in the upper half-plane.
#[derive(Debug, Clone, Copy)]
pub struct ModularPoint {
    pub tau: Complex64,
    pub z: Complex64,
}

impl ModularPoint {
    pub fn new(tau: Complex64, z: Complex64) -> Result<Self> {
        check_upper_half(tau)?;
        Ok(Self { tau, z })
    }
}

pub(crate) fn check_upper_half(tau: Complex64) -> Result<()> {
    if tau.im > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tau = {tau} is not in the upper half-plane"
        )))
    }
}

/// e^{2 pi i w} for complex w.
#[inline]
pub fn cis2pi(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, TAU_2PI) * w).exp()
}

/// The nome q = e^{2 pi i tau}; |q| < 1 on the upper half-plane.
pub fn nome(tau: Complex64) -> Result<Complex64> {
    check_upper_half(tau)?;
    Ok(cis2pi(tau))
}

/// q^r = e^{2 pi i r tau} for rational r, single-valued by construction.
pub fn q_rational_power(tau: Complex64, r: Ratio<i64>) -> Result<Complex64> {
    check_upper_half(tau)?;
    Ok(cis2pi(ratio_f64(r) * tau))
}

#[inline]
pub fn ratio_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// (-i tau)^{k/2} through the principal logarithm. For Im(tau) > 0 the base
/// -i*tau has positive real part, so the power is continuous on the whole
/// upper half-plane.
pub fn principal_half_power(tau: Complex64, half_numerator: i64) -> Result<Complex64> {
    check_upper_half(tau)?;
    let base = Complex64::new(0.0, -1.0) * tau;
    Ok((base.ln() * (half_numerator as f64 / 2.0)).exp())
}

/// e^{2 pi i k / n}, computed from k reduced mod n.
///
/// Quarter-period values come out exactly, and k and n-k produce exact
/// complex conjugates, so symmetric products cancel to the last ulp.
pub fn unity_root(n: u32, k: i64) -> Complex64 {
    debug_assert!(n >= 1);
    let n_i = n as i64;
    let k = k.rem_euclid(n_i);
    if 4 * k % n_i == 0 {
        return match (4 * k / n_i).rem_euclid(4) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    if 2 * k > n_i {
        return unity_root(n, n_i - k).conj();
    }
    let theta = TAU_2PI * k as f64 / n_i as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// e^{pi i num / den} with exact reduction, via [`unity_root`].
pub fn phase_pi(num: i64, den: i64) -> Complex64 {
    debug_assert!(den != 0);
    let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
    let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
    unity_root((2 * (den / g)) as u32, num / g)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Both sides of the root-of-unity partial-fraction average
///
///   sum_{j=0}^{n-1} w^{-jk} / (1 - w^j x)  =  n x^k / (1 - x^n),
///
/// with w a primitive n-th root of unity and 0 <= k < n. The left side is
/// summed term by term, the right side is the closed form; the caller
/// compares them.
pub fn partial_fraction_average(
    n: u32,
    k: u32,
    x: Complex64,
    pole_guard: f64,
) -> Result<(Complex64, Complex64)> {
    if n < 1 || k >= n {
        return Err(Error::Domain(format!(
            "need 1 <= n and 0 <= k < n, got n={n}, k={k}"
        )));
    }
    let mut lhs = Complex64::new(0.0, 0.0);
    for j in 0..n as i64 {
        let denom = Complex64::new(1.0, 0.0) - unity_root(n, j) * x;
        if denom.norm() < pole_guard {
            return Err(Error::PoleProximity(format!(
                "|1 - w^{j} x| = {:.3e} below guard {pole_guard:.3e}",
                denom.norm()
            )));
        }
        lhs += unity_root(n, -j * k as i64) / denom;
    }
    let xn = x.powu(n);
    let denom = Complex64::new(1.0, 0.0) - xn;
    if denom.norm() < pole_guard {
        return Err(Error::PoleProximity(format!(
            "|1 - x^{n}| = {:.3e} below guard {pole_guard:.3e}",
            denom.norm()
        )));
    }
    let rhs = n as f64 * x.powu(k) / denom;
    Ok((lhs, rhs))
}

/// Smallest J <= j_max such that sum_{|j| > J} bound(j) < tol, where
/// `bound(j)` is a caller-supplied per-term magnitude bound that eventually
/// decreases superexponentially. The tail is summed numerically outward from
/// J until the terms underflow.
pub(crate) fn certify_cutoff(
    budget: &TruncationBudget,
    tol: f64,
    bound: impl Fn(i64) -> f64,
) -> Result<u32> {
    const HARD_CAP: i64 = 100_000;
    for cut in 1..=budget.j_max as i64 {
        // cheap necessary condition before summing the whole tail
        if bound(cut + 1) >= tol {
            continue;
        }
        let mut tail = 0.0f64;
        let mut j = cut + 1;
        let mut ok = false;
        while j < cut + HARD_CAP {
            let t = bound(j) + bound(-j);
            tail += t;
            if tail >= tol {
                break;
            }
            if t < 1e-300 {
                ok = true;
                break;
            }
            j += 1;
        }
        if ok && tail < tol {
            return Ok(cut as u32);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no cutoff <= {} certifies tail < {tol:.3e}",
        budget.j_max
    )))
}

/// Smallest J <= j_max with sum_{|j| > J} |q|^{m j^2 - C |j|} < tol, where C
/// is the largest linear-coefficient magnitude the caller declares for the
/// sum at hand. Deterministic in its inputs.
pub fn choose_truncation(
    m: f64,
    tau: Complex64,
    linear: f64,
    budget: &TruncationBudget,
) -> Result<u32> {
    check_upper_half(tau)?;
    if m <= 0.0 {
        return Err(Error::Domain(format!(
            "quadratic coefficient m = {m} must be positive"
        )));
    }
    let log_q = -TAU_2PI * tau.im; // ln |q|
    certify_cutoff(budget, budget.tol, |j| {
        let e = m * (j as f64) * (j as f64) - linear * (j as f64).abs();
        (log_q * e).min(700.0).exp()
    })
}

/// Residual |lhs - rhs|, relative when |rhs| > 1 and absolute otherwise.
/// Keeps checks near zeros of theta functions from reporting spurious
/// failures.
pub fn residual(lhs: Complex64, rhs: Complex64) -> f64 {
    let d = (lhs - rhs).norm();
    let scale = rhs.norm();
    if scale > 1.0 {
        d / scale
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn nome_at_i() {
        // e^{-2 pi} by direct exponential
        let q = nome(I).unwrap();
        assert!((q.re - (-TAU_2PI).exp()).abs() < 1e-18);
        assert!(q.im.abs() < 1e-18);
        assert!((q.re - 1.8674427e-3).abs() < 1e-9);
    }

    #[test]
    fn nome_periodicity() {
        for tau in [I, Complex64::new(0.3, 0.8), Complex64::new(-0.41, 1.7)] {
            let a = nome(tau).unwrap();
            let b = nome(tau + 1.0).unwrap();
            assert!((a - b).norm() / a.norm() < 1e-14);
        }
    }

    #[test]
    fn nome_rejects_lower_half_plane() {
        assert!(nome(Complex64::new(0.5, 0.0)).is_err());
        assert!(nome(Complex64::new(0.5, -1.0)).is_err());
        assert!(ModularPoint::new(Complex64::new(0.5, -1.0), I).is_err());
        assert!(ModularPoint::new(I, Complex64::new(3.0, -2.0)).is_ok());
    }

    #[test]
    fn q_power_oracle() {
        // independent evaluation of e^{2 pi i r tau} from polar pieces
        let tau = Complex64::new(0.1, 1.2);
        let r = Ratio::new(-5i64, 8);
        let got = q_rational_power(tau, r).unwrap();
        let rf = -5.0 / 8.0;
        let modulus = (-TAU_2PI * rf * tau.im).exp();
        let angle = TAU_2PI * rf * tau.re;
        let want = Complex64::new(modulus * angle.cos(), modulus * angle.sin());
        assert!((got - want).norm() < 4e-15 * want.norm());
        assert_eq!(
            q_rational_power(tau, Ratio::new(0, 1)).unwrap(),
            Complex64::new(1.0, 0.0)
        );
        // e^{-pi/12} by direct exponential
        let e = q_rational_power(I, Ratio::new(1, 24)).unwrap();
        assert!((e.re - (-std::f64::consts::PI / 12.0).exp()).abs() < 1e-16);
        assert!((e.re - 0.7696654).abs() < 1e-7 && e.im.abs() < 1e-16);
    }

    #[test]
    fn half_power_trivial_points() {
        assert!((principal_half_power(I, 3).unwrap() - 1.0).norm() < 1e-15);
        assert!((principal_half_power(I, 1).unwrap() - 1.0).norm() < 1e-15);
        let want = 2.0f64.powf(1.5);
        assert!((principal_half_power(2.0 * I, 3).unwrap().re - want).abs() < 1e-14);
    }

    #[test]
    fn half_power_cube_law() {
        for tau in [Complex64::new(0.4, 0.7), Complex64::new(-0.3, 2.2), I] {
            let h = principal_half_power(tau, 1).unwrap();
            let t = principal_half_power(tau, 3).unwrap();
            assert!((h * h * h - t).norm() / t.norm() < 1e-14);
        }
    }

    #[test]
    fn unity_root_axes() {
        assert_eq!(unity_root(4, 1), Complex64::new(0.0, 1.0));
        assert_eq!(unity_root(17, 0), Complex64::new(1.0, 0.0));
        assert_eq!(unity_root(6, 3), Complex64::new(-1.0, 0.0));
        assert_eq!(unity_root(8, 6), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn unity_root_conjugate_products() {
        for n in 1..=64u32 {
            for k in 0..n as i64 {
                let p = unity_root(n, k) * unity_root(n, n as i64 - k);
                assert!((p.re - 1.0).abs() <= f64::EPSILON, "n={n} k={k}: {p}");
                assert!(p.im.abs() <= f64::EPSILON, "n={n} k={k}: {p}");
            }
        }
    }

    #[test]
    fn partial_fraction_small_cases() {
        // n=2, k=1, x=1/2: 1/(1-x) - 1/(1+x) = 2x/(1-x^2) = 4/3
        let (l, r) = partial_fraction_average(2, 1, Complex64::new(0.5, 0.0), 1e-8).unwrap();
        assert!((l - Complex64::new(4.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((l - r).norm() < 1e-15);
        // n=1, k=0: single term 1/(1-x)
        let (l, r) = partial_fraction_average(1, 0, Complex64::new(0.3, 0.0), 1e-8).unwrap();
        assert!((l - Complex64::new(1.0 / 0.7, 0.0)).norm() < 1e-15);
        assert!((l - r).norm() < 1e-15);
        let (l, r) = partial_fraction_average(5, 3, Complex64::new(0.3, 0.1), 1e-8).unwrap();
        assert!((l - r).norm() < 1e-13);
    }

    #[test]
    fn partial_fraction_pole_guard_trips() {
        let err = partial_fraction_average(3, 1, Complex64::new(1.0, 0.0), 1e-8).unwrap_err();
        assert!(matches!(err, Error::PoleProximity(_)));
    }

    #[test]
    fn truncation_examples() {
        let budget = TruncationBudget::default();
        let j = choose_truncation(1.0, I, 2.0, &budget).unwrap();
        assert!(j <= 10, "expected small cutoff at tau=i, got {j}");
        // larger |q| needs a larger cutoff
        let j2 = choose_truncation(0.5, Complex64::new(0.1, 0.5), 3.0, &budget).unwrap();
        assert!(j2 > j);
        // close to the real axis the budget runs out
        let err = choose_truncation(1.0, Complex64::new(0.0, 5e-5), 2.0, &budget).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    proptest! {
        #[test]
        fn partial_fraction_random(
            n in 1u32..=12,
            kf in 0.0f64..1.0,
            re in -0.95f64..0.95,
            im in -0.95f64..0.95,
        ) {
            let k = ((kf * n as f64) as u32).min(n - 1);
            let x = Complex64::new(re, im);
            prop_assume!(x.norm() < 0.95);
            match partial_fraction_average(n, k, x, 1e-6) {
                Ok((l, r)) => prop_assert!((l - r).norm() < 1e-12),
                Err(Error::PoleProximity(_)) => {}
                Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
            }
        }

        #[test]
        fn unity_root_power_consistency(n in 1u32..=64, k in -200i64..200) {
            let w = unity_root(n, k);
            prop_assert!((w.norm() - 1.0).abs() < 4.0 * f64::EPSILON);
            let again = unity_root(n, k + n as i64);
            prop_assert_eq!(w, again);
        }
    }
}
