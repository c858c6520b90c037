//! Exact q-expansions of the named building blocks: Dedekind eta, the level-m
//! theta series theta^(+-)_{n,m}(tau, 0), Mumford's vartheta_{00}/vartheta_{01}
//! along q-power shifts, the Gauss quotient, and the indefinite region sums
//! behind g^{[m]}_{n,nu} and the elliptic specialization of h^{[m]}_{n,nu}.
//!
//! Region sums are never truncated heuristically: every cutoff is certified
//! from an exact quadratic-growth lower bound, and an insufficient caller
//! cutoff is an error rather than a silently incomplete series.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::family::FamilyIndex;
use crate::qseries::{big_int_ratio, QExpansion};
use crate::theta::{MumfordKind, ThetaIndex, ThetaSign};

type R = Ratio<i64>;

fn r(n: i64, d: i64) -> R {
    Ratio::new(n, d)
}

/// Accumulate sum_j sign(j) q^{expo(j)} over all integers j with
/// expo(j) < order, where expo is a convex parabola with derivative
/// `slope(j)`. Scans outward from the vertex; the derivative sign guards the
/// stopping test so no admissible j is skipped near the vertex.
fn parabola_scan(
    out: &mut QExpansion,
    order: R,
    start: i64,
    expo: impl Fn(i64) -> R,
    slope: impl Fn(i64) -> R,
    coeff: impl Fn(i64) -> i64,
) -> Result<()> {
    let zero = r(0, 1);
    for dir in [1i64, -1] {
        let mut j = if dir == 1 { start } else { start - 1 };
        loop {
            let e = expo(j);
            if e >= order {
                let beyond = if dir == 1 {
                    slope(j) > zero
                } else {
                    slope(j) < zero
                };
                if beyond {
                    break;
                }
            } else {
                out.add_term(e, big_int_ratio(coeff(j)))?;
            }
            j += dir;
        }
    }
    Ok(())
}

/// eta(scale * tau) = q^{scale/24} prod_{n >= 1} (1 - q^{scale n}), exact to
/// `order`. Fractional scales (needed for eta(m tau) at half-odd m) lift the
/// conductor accordingly.
pub fn eta_qexp(scale: R, order: R) -> Result<QExpansion> {
    if scale <= r(0, 1) {
        return Err(Error::Domain(format!("eta scale {scale} must be positive")));
    }
    let lead = scale / 24;
    let conductor = num_integer::lcm(*lead.denom(), *scale.denom());
    let mut prod = QExpansion::one(conductor, order)?;
    let mut n = 1i64;
    loop {
        let e = scale * n;
        if e >= order {
            break;
        }
        let mut factor = QExpansion::one(conductor, order)?;
        factor.add_term(e, big_int_ratio(-1))?;
        prod = prod.mul(&factor)?;
        n += 1;
    }
    let mut out = QExpansion::zero(conductor, order + lead)?;
    for (e, c) in prod.iter() {
        out.add_term(*e + lead, c.clone())?;
    }
    out.truncate(order);
    Ok(out)
}

/// theta^(+-)_{n,m}(tau, 0) = sum_j (+-1)^j q^{(2 m2 j + n2)^2 / (8 m2)},
/// exact to `order`.
pub fn theta_qexp(idx: &ThetaIndex, order: R) -> Result<QExpansion> {
    let m2 = idx.m2;
    let n2 = idx.n2;
    let minus = idx.sign == ThetaSign::Minus;
    let mut out = QExpansion::zero(8 * m2, order)?;
    parabola_scan(
        &mut out,
        order,
        (-n2).div_euclid(2 * m2),
        |j| r((2 * m2 * j + n2).pow(2), 8 * m2),
        |j| r(2 * m2 * j + n2, 1),
        |j| if minus && j.rem_euclid(2) == 1 { -1 } else { 1 },
    )?;
    Ok(out)
}

/// vartheta_{00} or vartheta_{01} evaluated along (scale * tau, shift * tau):
/// sum_j (+-1)^j q^{scale j^2 / 2 + shift j}, exact to `order`.
pub fn mumford_qexp(kind: MumfordKind, scale: R, shift: R, order: R) -> Result<QExpansion> {
    let alternating = match kind {
        MumfordKind::K00 => false,
        MumfordKind::K01 => true,
        _ => {
            return Err(Error::Domain(
                "exact track covers vartheta_00 and vartheta_01 only".into(),
            ))
        }
    };
    if scale <= r(0, 1) {
        return Err(Error::Domain(format!(
            "mumford scale {scale} must be positive"
        )));
    }
    let half_scale = scale / 2;
    let conductor = num_integer::lcm(*half_scale.denom(), *shift.denom());
    let mut out = QExpansion::zero(conductor, order)?;
    parabola_scan(
        &mut out,
        order,
        (-(shift / scale)).floor().to_integer(),
        |j| half_scale * j * j + shift * j,
        |j| scale * j + shift,
        |j| {
            if alternating && j.rem_euclid(2) == 1 {
                -1
            } else {
                1
            }
        },
    )?;
    Ok(out)
}

/// The eta quotient eta(2m tau)^5 / (eta(m tau)^2 eta(4m tau)^2).
pub fn gauss_eta_quotient_qexp(m2: i64, order: R) -> Result<QExpansion> {
    if m2 < 1 {
        return Err(Error::Domain(format!("level 2m = {m2} must be positive")));
    }
    // numerator and denominator share the leading exponent 5m/12, which the
    // division consumes; give the operands room for it
    let work = order + r(5 * m2, 24) + r(2, 1);
    let num = eta_qexp(r(m2, 1), work)?.pow(5)?;
    let den = eta_qexp(r(m2, 2), work)?
        .pow(2)?
        .mul(&eta_qexp(r(2 * m2, 1), work)?.pow(2)?)?;
    let mut q = num.div(&den)?;
    if q.order() < order {
        return Err(Error::CutoffInsufficient(format!(
            "gauss quotient exact only to {} < requested {order}",
            q.order()
        )));
    }
    q.truncate(order);
    Ok(q)
}

/// Both sides of the Gauss identity theta_{0,m}(tau, 0) =
/// eta(2m tau)^5 / (eta(m tau)^2 eta(4m tau)^2), exact to `order`.
///
/// ```
/// use indefinite_theta::qkernels::gauss_quotient_check;
/// use num_rational::Ratio;
///
/// // termwise equality of the two exact expansions, here at m = 1/2
/// let (theta_side, eta_side) = gauss_quotient_check(1, Ratio::new(20, 1))?;
/// assert!(theta_side.agrees_with(&eta_side));
/// assert_eq!(eta_side.conductor() % 48, 0);
/// # Ok::<(), indefinite_theta::error::Error>(())
/// ```
pub fn gauss_quotient_check(m2: i64, order: R) -> Result<(QExpansion, QExpansion)> {
    let lhs = theta_qexp(&ThetaIndex::new(0, m2, ThetaSign::Plus)?, order)?;
    let rhs = gauss_eta_quotient_qexp(m2, order)?;
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// indefinite region sums
// ---------------------------------------------------------------------------

/// Exact lower bound j^2/2 - (2 m2 + 1)(nu + 1)|j| - nu(nu+1)/2 for the
/// exponent of any region term of g at outer index j; valid on both regions
/// for |j| > nu.
fn g_exponent_floor(m2: i64, nu: i64, j: i64) -> R {
    let ja = j.abs();
    r(ja * ja, 2) - r((2 * m2 + 1) * (nu + 1) * ja, 1) - r(nu * (nu + 1), 2)
}

/// Smallest region cutoff certified complete at `order` for g^{[m]}_{n,nu}.
pub fn certified_g_cutoff(idx: &FamilyIndex, order: R) -> u32 {
    let vertex = (2 * idx.m2 + 1) * (idx.nu + 1);
    let mut j = vertex.max(1);
    while g_exponent_floor(idx.m2, idx.nu, j + 1) < order {
        j += 1;
    }
    j as u32
}

/// g^{[m]}_{n,nu} as an exact expansion:
///
///   [ sum_{0 < p <= j} - sum_{j < p <= 0} ] (-1)^j
///       q^{(m + 1/2)(j + nu - (nu + 1/2)/(2m + 1))^2 - m (p + nu - n/2m)^2}
///
/// enumerated over |j| <= j_cut. The cutoff must pass the quadratic-growth
/// certificate for `order`; otherwise [`Error::CutoffInsufficient`].
pub fn g_qexp(idx: &FamilyIndex, j_cut: u32, order: R) -> Result<QExpansion> {
    let (m2, n, nu) = (idx.m2, idx.n, idx.nu);
    let vertex = (2 * m2 + 1) * (nu + 1);
    let jc = j_cut as i64;
    if jc < vertex || g_exponent_floor(m2, nu, jc + 1) < order {
        return Err(Error::CutoffInsufficient(format!(
            "j_cut = {j_cut} cannot certify order {order} (need >= {})",
            certified_g_cutoff(idx, order)
        )));
    }
    let conductor = num_integer::lcm(8 * (m2 + 1), 2 * m2);
    let mut out = QExpansion::zero(conductor, order)?;
    // (m+1/2)(j+nu-kappa)^2 = A^2/(8(m2+1)) with A = 2(m2+1)(j+nu) - (2nu+1)
    // m (p+nu-n/2m)^2 = B^2/(2 m2) with B = m2 (p+nu) - n
    let term = |j: i64, p: i64| -> R {
        let a = 2 * (m2 + 1) * (j + nu) - (2 * nu + 1);
        let b = m2 * (p + nu) - n;
        r(a * a, 8 * (m2 + 1)) - r(b * b, 2 * m2)
    };
    for j in 1..=jc {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for p in 1..=j {
            out.add_term(term(j, p), big_int_ratio(sign))?;
        }
    }
    for j in -jc..=-1 {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        for p in (j + 1)..=0 {
            out.add_term(term(j, p), big_int_ratio(-sign))?;
        }
    }
    Ok(out)
}

/// [`g_qexp`] with the minimal certified cutoff.
pub fn g_qexp_auto(idx: &FamilyIndex, order: R) -> Result<QExpansion> {
    g_qexp(idx, certified_g_cutoff(idx, order), order)
}

/// Where the elliptic specialization z = a tau / m of h^{[m]}_{n,nu} hits a
/// vanishing denominator 1 - q^{a + 2m(j + nu)}: exactly when 2m | a.
pub fn h_specialization_pole(m2: i64, nu: i64, a: i64) -> Option<i64> {
    if a.rem_euclid(m2) == 0 {
        Some(-nu - a / m2)
    } else {
        None
    }
}

/// h^{[m]}_{n,nu}(tau, a tau / m) by geometric expansion of every partial
/// fraction of the defining sum: the j-th summand contributes
/// q^{E0(j) + lambda |N_j|} with N_j = a + 2m(j + nu), lambda >= 0 and
/// coefficient +1 when N_j > 0, lambda >= 1 and coefficient -1 when N_j < 0.
pub fn h_spec_direct_qexp(idx: &FamilyIndex, a: i64, order: R) -> Result<QExpansion> {
    let (m2, n, nu) = (idx.m2, idx.n, idx.nu);
    if let Some(j) = h_specialization_pole(m2, nu, a) {
        return Err(Error::SpecializationPole(format!(
            "a = {a}: denominator 1 - q^0 vanishes at j = {j}"
        )));
    }
    let mut out = QExpansion::zero(num_integer::lcm(2 * m2, m2), order)?;
    // E0(j) = m j^2 + (n + a) j + n nu + n a / 2m
    let base = |j: i64| r(m2 * j * j, 2) + r((n + a) * j + n * nu, 1) + r(n * a, m2);
    let slope = |j: i64| r(m2 * j, 1) + r(n + a, 1);
    let zero = r(0, 1);
    let start = (-(n + a)).div_euclid(m2);
    for dir in [1i64, -1] {
        let mut j = if dir == 1 { start } else { start - 1 };
        loop {
            let e0 = base(j);
            if e0 >= order {
                let beyond = if dir == 1 {
                    slope(j) > zero
                } else {
                    slope(j) < zero
                };
                if beyond {
                    break;
                }
            } else {
                let nj = a + m2 * (j + nu);
                let step = r(nj.abs(), 1);
                let coeff = big_int_ratio(if nj > 0 { 1 } else { -1 });
                let mut e = if nj > 0 { e0 } else { e0 + step };
                while e < order {
                    out.add_term(e, coeff.clone())?;
                    e += step;
                }
            }
            j += dir;
        }
    }
    Ok(out)
}

/// The same specialization through the region identity
///
///   h^{[m]}_{n,nu}(tau, a tau/m) = q^{m nu^2 - a^2/4m}
///     [ sum_{j >= k >= 0} - sum_{j < k < 0} ]
///       q^{m (j - nu + (n+a)/2m)^2 - m (k - nu + n/2m)^2},
///
/// which converges absolutely only for 0 < a < 2m (other representatives of
/// a mod 2m reach the same value through the torsor law).
pub fn h_spec_region_qexp(idx: &FamilyIndex, a: i64, j_cut: u32, order: R) -> Result<QExpansion> {
    let (m2, n, nu) = (idx.m2, idx.n, idx.nu);
    if let Some(j) = h_specialization_pole(m2, nu, a) {
        return Err(Error::SpecializationPole(format!(
            "a = {a}: denominator 1 - q^0 vanishes at j = {j}"
        )));
    }
    if a <= 0 || a >= m2 {
        return Err(Error::Domain(format!(
            "region form needs 0 < a < 2m, got a = {a} at 2m = {m2}"
        )));
    }
    let prefix = r(m2 * nu * nu, 2) - r(a * a, 2 * m2);
    let mut out = QExpansion::zero(2 * m2, order)?;
    // m (x - nu + (n+c)/2m)^2 = (m2 (x - nu) + n + c)^2 / (2 m2)
    let sq = |x: i64, c: i64| -> R {
        let t = m2 * (x - nu) + n + c;
        r(t * t, 2 * m2)
    };
    let jc = j_cut as i64;

    // region j >= k >= 0, coefficient +1
    let mut certified_pos = false;
    for j in 0..=jc {
        for k in 0..=j {
            out.add_term(prefix + sq(j, a) - sq(k, 0), big_int_ratio(1))?;
        }
        if j >= nu {
            // the subtracted square over k in [0, j+1] is maximized at an
            // endpoint; once the resulting floor clears the order it stays
            // cleared (both X -> a(2X+a) and X -> (X+a)^2 - const increase)
            let x = m2 * (j + 1 - nu) + n;
            let worst = (x * x).max((n - m2 * nu).pow(2));
            if prefix + r((x + a) * (x + a) - worst, 2 * m2) >= order {
                certified_pos = true;
                break;
            }
        }
    }

    // region j < k < 0, coefficient -1
    let mut certified_neg = false;
    for k in (-jc..=-1).rev() {
        let mut j = k - 1;
        while j >= -jc {
            let e = prefix + sq(j, a) - sq(k, 0);
            if e >= order {
                break; // monotone in -j this far from the vertex
            }
            out.add_term(e, big_int_ratio(-1))?;
            j -= 1;
        }
        if j < -jc && prefix + sq(j, a) - sq(k, 0) < order {
            return Err(Error::CutoffInsufficient(format!(
                "inner index passed j_cut = {j_cut} before order {order}"
            )));
        }
        // diagonal floor at j = k - 1 grows as k decreases
        if prefix + sq(k - 1, a) - sq(k, 0) >= order {
            certified_neg = true;
            break;
        }
    }
    if !certified_pos || !certified_neg {
        return Err(Error::CutoffInsufficient(format!(
            "j_cut = {j_cut} cannot certify order {order} for (m2, n, nu, a) = ({m2}, {n}, {nu}, {a})"
        )));
    }
    Ok(out)
}

/// Both pipelines for h^{[m]}_{n,nu}(tau, a tau/m): the direct geometric
/// expansion and the region identity, each exact to `order`.
pub fn h_spec_qexp(
    idx: &FamilyIndex,
    a: i64,
    j_cut: u32,
    order: R,
) -> Result<(QExpansion, QExpansion)> {
    let direct = h_spec_direct_qexp(idx, a, order)?;
    let region = h_spec_region_qexp(idx, a, j_cut, order)?;
    Ok((direct, region))
}

/// Exact series for F^{[m](a,0)}_{n,nu}(tau, 0):
///
///   q^{(n+a)^2/4m} vartheta_00(2m tau, (n+a) tau) g^{[m]}_{n,nu}
///   + (-1)^nu q^{(nu+1/2)^2/(4(m+1/2))} vartheta_01(2(m+1/2) tau, (nu+1/2) tau)
///     * [h region sum],
///
/// with a normalized into (0, 2m) through the torsor identification.
pub fn f_zero_qexp(idx: &FamilyIndex, a: i64, order: R) -> Result<QExpansion> {
    let (m2, n, nu) = (idx.m2, idx.n, idx.nu);
    let a_red = a.rem_euclid(m2);
    if a_red == 0 {
        return Err(Error::SpecializationPole(format!(
            "a = {a} is 0 mod 2m: F^{{(a,0)}}(tau, 0) has a pole"
        )));
    }
    // products with principal parts can cost exactness at the top; retry
    // with more room until the requested order is certified
    let mut slack = r(m2 * nu * nu + 4, 2);
    for _ in 0..4 {
        let work = order + slack;
        let t00 = mumford_qexp(MumfordKind::K00, r(m2, 1), r(n + a_red, 1), work)?;
        let g = g_qexp_auto(idx, work)?;
        let piece1 = t00.mul(&g)?.shift(r((n + a_red) * (n + a_red), 2 * m2))?;
        let t01 = mumford_qexp(MumfordKind::K01, r(m2 + 1, 1), r(2 * nu + 1, 2), work)?;
        let cut = 2 * (work.ceil().to_integer().unsigned_abs() as u32 + 2)
            + 8 * (m2 as u32 + nu.unsigned_abs() as u32 + 2);
        let hreg = h_spec_region_qexp(idx, a_red, cut, work)?;
        // strip the q^{m nu^2 - a^2/4m} prefactor to recover the bare bracket
        let bracket = hreg.shift(r(a_red * a_red, 2 * m2) - r(m2 * nu * nu, 2))?;
        let sign = if nu.rem_euclid(2) == 0 { 1 } else { -1 };
        let piece2 = t01
            .mul(&bracket)?
            .shift(r((2 * nu + 1) * (2 * nu + 1), 8 * (m2 + 1)))?
            .scale(&big_int_ratio(sign));
        let mut out = piece1.add(&piece2)?;
        if out.order() >= order {
            out.truncate(order);
            return Ok(out);
        }
        slack = slack + slack + r(4, 1);
    }
    Err(Error::CutoffInsufficient(format!(
        "could not assemble F series to order {order}"
    )))
}
