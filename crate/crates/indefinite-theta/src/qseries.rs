//! Exact formal q-series with rational exponents and rational coefficients.
//!
//! A [`QExpansion`] is a sorted map from exponent to coefficient together
//! with a truncation order: every exponent strictly below `order` is exact,
//! terms at or above `order` are discarded. Exponent denominators must
//! divide a declared conductor, which is checked on every insertion; index
//! arithmetic mistakes therefore surface immediately as conductor errors
//! instead of silently producing wrong series.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{check_upper_half, cis2pi, ratio_f64};
use num_complex::Complex64;

/// Largest supported conductor; ops whose exponent lattice would need more
/// refinement than this fail with [`Error::ConductorOverflow`].
pub const MAX_CONDUCTOR: i64 = 1 << 20;

/// Exact truncated Puiseux-style series in q.
#[derive(Debug, Clone, PartialEq)]
pub struct QExpansion {
    terms: BTreeMap<Ratio<i64>, BigRational>,
    order: Ratio<i64>,
    conductor: i64,
}

impl QExpansion {
    /// Empty (zero) series, exact below `order`.
    pub fn zero(conductor: i64, order: Ratio<i64>) -> Result<Self> {
        if !(1..=MAX_CONDUCTOR).contains(&conductor) {
            return Err(Error::ConductorOverflow(format!(
                "conductor {conductor} out of range"
            )));
        }
        Ok(Self {
            terms: BTreeMap::new(),
            order,
            conductor,
        })
    }

    /// The constant series 1.
    pub fn one(conductor: i64, order: Ratio<i64>) -> Result<Self> {
        let mut s = Self::zero(conductor, order)?;
        s.add_term(Ratio::new(0, 1), BigRational::one())?;
        Ok(s)
    }

    /// c * q^e as a series.
    pub fn monomial(
        conductor: i64,
        order: Ratio<i64>,
        exponent: Ratio<i64>,
        coeff: BigRational,
    ) -> Result<Self> {
        let mut s = Self::zero(conductor, order)?;
        s.add_term(exponent, coeff)?;
        Ok(s)
    }

    pub fn order(&self) -> Ratio<i64> {
        self.order
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sorted iteration over (exponent, coefficient).
    pub fn iter(&self) -> impl Iterator<Item = (&Ratio<i64>, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of q^e (zero if absent).
    pub fn coeff(&self, exponent: Ratio<i64>) -> BigRational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Leading (lowest-exponent) term, if any.
    pub fn leading(&self) -> Option<(Ratio<i64>, BigRational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c.clone()))
    }

    fn check_exponent(&self, exponent: Ratio<i64>) -> Result<()> {
        if self.conductor % exponent.denom() != 0 {
            return Err(Error::ConductorOverflow(format!(
                "exponent {exponent} outside the 1/{} lattice",
                self.conductor
            )));
        }
        Ok(())
    }

    /// Accumulate `coeff * q^exponent`, dropping terms at or above the order
    /// and deleting cancellations. The exponent must lie on the conductor
    /// lattice.
    pub fn add_term(&mut self, exponent: Ratio<i64>, coeff: BigRational) -> Result<()> {
        if exponent >= self.order || coeff.is_zero() {
            return Ok(());
        }
        self.check_exponent(exponent)?;
        let entry = self.terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
        Ok(())
    }

    fn merged_conductor(&self, other: &Self) -> Result<i64> {
        let g = num_integer::gcd(self.conductor, other.conductor);
        let l = self.conductor / g * other.conductor;
        if l > MAX_CONDUCTOR {
            return Err(Error::ConductorOverflow(format!(
                "lcm({}, {}) exceeds {MAX_CONDUCTOR}",
                self.conductor, other.conductor
            )));
        }
        Ok(l)
    }

    /// Exact sum; the result is exact below the finer of the two orders.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.merged_conductor(other)?, self.order.min(other.order))?;
        for (e, c) in self.iter().chain(other.iter()) {
            out.add_term(*e, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self {
                terms: BTreeMap::new(),
                order: self.order,
                conductor: self.conductor,
            };
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor.clone();
        }
        out
    }

    /// Multiply by q^shift exactly (order shifts along).
    pub fn shift(&self, shift: Ratio<i64>) -> Result<Self> {
        let conductor = num_integer::lcm(self.conductor, *shift.denom());
        if conductor > MAX_CONDUCTOR {
            return Err(Error::ConductorOverflow(format!("shift by {shift}")));
        }
        let mut out = Self::zero(conductor, self.order + shift)?;
        for (e, c) in self.iter() {
            out.add_term(*e + shift, c.clone())?;
        }
        Ok(out)
    }

    /// Exact product. The result is exact below
    /// min(order_a + min_exp_b, order_b + min_exp_a): cross terms past either
    /// operand's order are unknown.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let conductor = self.merged_conductor(other)?;
        let zero = Ratio::new(0, 1);
        let min_a = self.leading().map(|(e, _)| e).unwrap_or(zero);
        let min_b = other.leading().map(|(e, _)| e).unwrap_or(zero);
        let order = (self.order + min_b).min(other.order + min_a);
        let mut out = Self::zero(conductor, order)?;
        for (ea, ca) in self.iter() {
            for (eb, cb) in other.iter() {
                let e = *ea + *eb;
                if e >= order {
                    continue;
                }
                out.add_term(e, ca * cb)?;
            }
        }
        Ok(out)
    }

    /// Exact quotient. The divisor must factor as q^e * (unit with nonzero
    /// leading coefficient); long division runs to the common exact order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (lead_e, lead_c) = other
            .leading()
            .ok_or_else(|| Error::Division("division by the zero series".into()))?;
        let conductor = self.merged_conductor(other)?;
        // orders: self exact below order_a, divisor unit exact below
        // order_b - lead_e; the quotient is exact below the min of
        // (order_a - lead_e) and (order_b - 2 lead_e) + min_exp(quotient)...
        // use the conservative common bound
        let order = (self.order - lead_e).min(
            other.order - lead_e - lead_e
                + self
                    .leading()
                    .map(|(e, _)| e)
                    .unwrap_or_else(|| Ratio::new(0, 1)),
        );
        let mut quotient = Self::zero(conductor, order)?;
        let mut remainder = Self {
            terms: self.terms.clone(),
            order: self.order.min(
                other.order - lead_e
                    + self
                        .leading()
                        .map(|(e, _)| e)
                        .unwrap_or_else(|| Ratio::new(0, 1)),
            ),
            conductor,
        };
        while let Some((re, rc)) = remainder.leading() {
            let qe = re - lead_e;
            if qe >= order {
                break;
            }
            let qc = rc / lead_c.clone();
            quotient.add_term(qe, qc.clone())?;
            // remainder -= (qc q^qe) * other
            for (be, bc) in other.iter() {
                let e = qe + *be;
                if e >= remainder.order {
                    continue;
                }
                remainder.add_term(e, -(qc.clone() * bc))?;
            }
        }
        Ok(quotient)
    }

    /// Integer power by repeated squaring (exponent >= 0).
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut result = Self::one(self.conductor, self.order)?;
        // preserve fractional leading exponents: 1 has order = self.order
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Truncate in place to a lower order.
    pub fn truncate(&mut self, order: Ratio<i64>) {
        if order < self.order {
            self.order = order;
            self.terms.retain(|e, _| *e < order);
        }
    }

    /// True when the two expansions agree term by term below the coarser of
    /// the two orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let mine = self.terms.iter().filter(|(e, _)| **e < order);
        let theirs = other.terms.iter().filter(|(e, _)| **e < order);
        mine.eq(theirs)
    }

    /// Evaluate at tau: sum of c * e^{2 pi i e tau} over the stored terms.
    /// The discarded tail is not accounted for; callers pick the order so
    /// that |q|^order is negligible.
    pub fn eval(&self, tau: Complex64) -> Result<Complex64> {
        check_upper_half(tau)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.iter() {
            let cf = big_to_f64(c);
            acc += cf * cis2pi(ratio_f64(*e) * tau);
        }
        Ok(acc)
    }

    /// JSON value: a sorted list of [[exp_num, exp_den], [coeff_num, coeff_den]].
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut rows = Vec::with_capacity(self.terms.len());
        for (e, c) in self.iter() {
            let cn = bigint_to_i64(c.numer())?;
            let cd = bigint_to_i64(c.denom())?;
            rows.push(serde_json::json!([[e.numer(), e.denom()], [cn, cd]]));
        }
        Ok(serde_json::Value::Array(rows))
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in self.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({c})q^({e})")?;
            }
        }
        write!(f, " + O(q^({}))", self.order)
    }
}

fn bigint_to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x.clone())
        .map_err(|_| Error::ConductorOverflow(format!("coefficient part {x} exceeds i64")))
}

pub(crate) fn big_to_f64(x: &BigRational) -> f64 {
    // exact for all coefficients this crate produces; falls back to a
    // quotient of approximations for very large entries
    let n = x.numer();
    let d = x.denom();
    match (i64::try_from(n.clone()), i64::try_from(d.clone())) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
            let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
            nf / df
        }
    }
}

/// Rational helper: integer BigRational.
pub(crate) fn big_int_ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
