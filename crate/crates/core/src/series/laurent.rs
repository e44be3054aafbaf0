//! Truncated formal Laurent series in `q` over the integers.
//!
//! A [`LaurentSeries`] knows its coefficients exactly for every exponent below
//! its `order`; everything at or above `order` is unknown. Binary operations
//! shrink the order so that an unknown coefficient never leaks into a known one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, SeriesError, SparsePoly};

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<BigInt>,
    order: i64,
}

impl LaurentSeries {
    /// Builds a series whose coefficient of `q^(min_exp + k)` is `coeffs[k]`.
    ///
    /// `coeffs` is padded with zeros or cut so that it covers exactly
    /// `[min_exp, order)`.
    pub fn new(min_exp: i64, mut coeffs: Vec<BigInt>, order: i64) -> Self {
        let min_exp = min_exp.min(order);
        coeffs.resize((order - min_exp) as usize, BigInt::zero());
        LaurentSeries { min_exp, coeffs, order }
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64], order: i64) -> Self {
        LaurentSeries::new(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries::new(0, Vec::new(), order)
    }

    pub fn one(order: i64) -> Self {
        LaurentSeries::monomial(BigInt::one(), 0, order)
    }

    /// `coeff * q^exp`, known below `order`.
    pub fn monomial(coeff: BigInt, exp: i64, order: i64) -> Self {
        let mut s = LaurentSeries::new(exp.min(0), Vec::new(), order);
        s.set(exp, coeff);
        s
    }

    /// The exact polynomial `p`, truncated to `order`.
    pub fn from_poly(p: &SparsePoly, order: i64) -> Self {
        let lo = p.min_exp().unwrap_or(0).min(0);
        let mut s = LaurentSeries::new(lo, Vec::new(), order);
        for (e, c) in p.terms() {
            s.set(e, c.clone());
        }
        s
    }

    fn set(&mut self, exp: i64, c: BigInt) {
        if exp >= self.min_exp && exp < self.order {
            self.coeffs[(exp - self.min_exp) as usize] = c;
        }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Dense coefficients covering `[min_exp, order)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^exp`, or `None` when `exp` is at or above the order.
    pub fn coeff(&self, exp: i64) -> Option<BigInt> {
        if exp >= self.order {
            None
        } else if exp < self.min_exp {
            Some(BigInt::zero())
        } else {
            Some(self.coeffs[(exp - self.min_exp) as usize].clone())
        }
    }

    /// Exponent of the lowest nonzero known coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|k| self.min_exp + k as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Nonzero known terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.min_exp + k as i64, c))
    }

    /// Lowers the order to `order` (a no-op if it is already lower).
    pub fn truncate(&self, order: i64) -> LaurentSeries {
        let order = order.min(self.order);
        let min_exp = self.min_exp.min(order);
        let keep = (order - self.min_exp).max(0) as usize;
        LaurentSeries::new(min_exp, self.coeffs[..keep.min(self.coeffs.len())].to_vec(), order)
    }

    /// Drops leading zero coefficients so `min_exp` is the valuation.
    pub fn trimmed(&self) -> LaurentSeries {
        match self.valuation() {
            Some(v) => {
                let skip = (v - self.min_exp) as usize;
                LaurentSeries { min_exp: v, coeffs: self.coeffs[skip..].to_vec(), order: self.order }
            }
            None => LaurentSeries::zero(self.order),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> LaurentSeries {
        LaurentSeries { min_exp: self.min_exp + e, coeffs: self.coeffs.clone(), order: self.order + e }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentSeries {
        LaurentSeries { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|x| x * c).collect(), order: self.order }
    }

    fn valuation_or_order(&self) -> i64 {
        self.valuation().unwrap_or(self.order)
    }

    /// Product with an exact polynomial.
    pub fn mul_poly(&self, p: &SparsePoly) -> LaurentSeries {
        let Some(pv) = p.min_exp() else {
            return LaurentSeries::zero(self.order);
        };
        let order = self.order + pv;
        let min_exp = (self.min_exp + pv).min(order);
        let mut out = vec![BigInt::zero(); (order - min_exp) as usize];
        for (e, c) in p.terms() {
            for (k, x) in self.coeffs.iter().enumerate() {
                let idx = self.min_exp + k as i64 + e - min_exp;
                if idx >= out.len() as i64 {
                    break;
                }
                if !x.is_zero() {
                    out[idx as usize] += x * c;
                }
            }
        }
        LaurentSeries { min_exp, coeffs: out, order }
    }

    /// Multiplicative inverse. The lowest nonzero coefficient must be `±1`.
    pub fn invert(&self) -> Result<LaurentSeries, SeriesError> {
        let v = self
            .valuation()
            .ok_or_else(|| SeriesError::NotInvertible(format!("series is zero below q^{}", self.order)))?;
        let lead = &self.coeffs[(v - self.min_exp) as usize];
        if !lead.abs().is_one() {
            return Err(SeriesError::NotInvertible(format!("lowest coefficient {lead} at q^{v} is not a unit")));
        }
        let len = (self.order - v) as usize;
        let tail = nonzero_tail(&self.coeffs[(v - self.min_exp) as usize..]);
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = if k == 0 { BigInt::one() } else { BigInt::zero() };
            for (j, u) in &tail {
                if *j > k {
                    break;
                }
                acc -= u * &out[k - j];
            }
            out.push(acc * lead);
        }
        Ok(LaurentSeries { min_exp: -v, coeffs: out, order: self.order - 2 * v })
    }

    /// Quotient `self / den`, requiring every coefficient to come out integral.
    ///
    /// Unlike [`invert`](Self::invert), the divisor's lowest coefficient need
    /// not be a unit; this is what `(-1;q)_n`-style factors (leading
    /// coefficient 2) need when the numerator carries the same factor.
    pub fn div_exact(&self, den: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        let vb = den.valuation().ok_or_else(|| {
            SeriesError::NotInvertible(format!("division by a series that is zero below q^{}", den.order))
        })?;
        let lead = &den.coeffs[(vb - den.min_exp) as usize];
        let Some(va) = self.valuation() else {
            return Ok(LaurentSeries::zero(self.order - vb));
        };
        let len = (self.order - va).min(den.order - vb).max(0) as usize;
        let tail = nonzero_tail(&den.coeffs[(vb - den.min_exp) as usize..]);
        let num = &self.coeffs[(va - self.min_exp) as usize..];
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = num[k].clone();
            for (j, b) in &tail {
                if *j > k {
                    break;
                }
                acc -= b * &out[k - j];
            }
            if !(&acc % lead).is_zero() {
                return Err(SeriesError::NotDivisible { exp: va - vb + k as i64 });
            }
            out.push(acc / lead);
        }
        let min_exp = va - vb;
        Ok(LaurentSeries { min_exp, coeffs: out, order: min_exp + len as i64 })
    }

    /// Quotient by the binomial `1 - m`.
    ///
    /// For `m = ±q^e` with `e > 0` this is a strided prefix sum and keeps the
    /// order; other cases go through [`div_exact`](Self::div_exact).
    pub fn div_one_minus(&self, m: Monomial) -> Result<LaurentSeries, SeriesError> {
        if m.exp > 0 {
            let e = m.exp as usize;
            let s = m.sign.as_i64();
            let mut c = self.coeffs.clone();
            for idx in e..c.len() {
                if !c[idx - e].is_zero() {
                    let t = &c[idx - e] * s;
                    c[idx] += t;
                }
            }
            return Ok(LaurentSeries { min_exp: self.min_exp, coeffs: c, order: self.order });
        }
        let Some(va) = self.valuation() else {
            return Ok(LaurentSeries::zero(self.order - m.exp.min(0)));
        };
        let den_order = (self.order - va + m.exp.min(0) + 1).max(m.exp + 1);
        self.div_exact(&LaurentSeries::from_poly(&SparsePoly::one_minus(m), den_order))
    }

    /// Integer power; negative exponents go through [`invert`](Self::invert).
    pub fn pow(&self, k: i64) -> Result<LaurentSeries, SeriesError> {
        if k == 0 {
            return Ok(LaurentSeries::one(self.order.max(0)));
        }
        let mut sq = if k < 0 { self.invert()? } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc: Option<LaurentSeries> = None;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => &a * &sq,
                    None => sq.clone(),
                });
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc.expect("k != 0"))
    }
}

/// `(offset, coeff)` for the nonzero entries of `c[1..]`.
fn nonzero_tail(c: &[BigInt]) -> Vec<(usize, BigInt)> {
    c.iter().enumerate().skip(1).filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect()
}

/// Re-evaluates `f` at increasing working orders until the result is known
/// through `target`, then truncates to `target`.
///
/// Products involving negative powers of `q` lose precision at the top; this
/// compensates by asking for more terms up front.
pub fn to_order<E, F>(target: i64, mut f: F) -> Result<LaurentSeries, E>
where
    F: FnMut(i64) -> Result<LaurentSeries, E>,
{
    let mut work = target;
    let mut last = f(work)?;
    for _ in 0..6 {
        if last.order >= target {
            break;
        }
        work += target - last.order;
        last = f(work)?;
    }
    Ok(last.truncate(target))
}

/// Convolution of two dense coefficient slices, keeping the first `len`
/// results. Tries a machine-integer path first and falls back to bignums on
/// overflow.
fn convolve(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    if let Some(out) = convolve_small(a, b, len) {
        return out;
    }
    let mut out = vec![BigInt::zero(); len];
    let bnz: Vec<(usize, &BigInt)> = b.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    for (i, x) in a.iter().enumerate() {
        if i >= len {
            break;
        }
        if x.is_zero() {
            continue;
        }
        for (j, y) in &bnz {
            if i + j >= len {
                break;
            }
            out[i + j] += x * *y;
        }
    }
    out
}

fn convolve_small(a: &[BigInt], b: &[BigInt], len: usize) -> Option<Vec<BigInt>> {
    let a: Vec<i64> = a.iter().take(len).map(|x| x.to_i64()).collect::<Option<_>>()?;
    let b: Vec<(usize, i64)> = b
        .iter()
        .take(len)
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| x.to_i64().map(|v| (j, v)))
        .collect::<Option<_>>()?;
    let mut out = vec![0i128; len];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for &(j, y) in &b {
            if i + j >= len {
                break;
            }
            out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
        }
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

impl PartialEq for LaurentSeries {
    /// Same order and the same coefficient at every known exponent.
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        let lo = self.min_exp.min(other.min_exp);
        (lo..self.order).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl Eq for LaurentSeries {}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let min_exp = self.min_exp.min(rhs.min_exp).min(order);
        let mut out = vec![BigInt::zero(); (order - min_exp) as usize];
        for s in [self, rhs] {
            for (k, c) in s.coeffs.iter().enumerate() {
                let e = s.min_exp + k as i64;
                if e >= order {
                    break;
                }
                if !c.is_zero() {
                    out[(e - min_exp) as usize] += c;
                }
            }
        }
        LaurentSeries { min_exp, coeffs: out, order }
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries { min_exp: self.min_exp, coeffs: self.coeffs.iter().map(|c| -c).collect(), order: self.order }
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = (self.order + rhs.valuation_or_order()).min(rhs.order + self.valuation_or_order());
        let min_exp = (self.min_exp + rhs.min_exp).min(order);
        let len = (order - min_exp) as usize;
        let coeffs = convolve(&self.coeffs, &rhs.coeffs, len);
        LaurentSeries { min_exp, coeffs, order }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

impl fmt::Display for LaurentSeries {
    /// Renders `c*q^e` terms in ascending order followed by `O(q^order)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}*q^{}", c.abs(), e)?;
            first = false;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(min_exp: i64, c: &[i64], order: i64) -> LaurentSeries {
        LaurentSeries::from_i64s(min_exp, c, order)
    }

    #[test]
    fn difference_of_squares() {
        let p = s(0, &[1, 1], 10) * s(0, &[1, -1], 10);
        assert_eq!(p, s(0, &[1, 0, -1], 10));
    }

    #[test]
    fn shift_moves_window() {
        let t = s(0, &[1, 1], 5).shift(-1);
        assert_eq!(t.min_exp(), -1);
        assert_eq!(t.order(), 4);
        assert_eq!(t.coeff(-1), Some(BigInt::from(1)));
        assert_eq!(t.coeff(0), Some(BigInt::from(1)));
    }

    #[test]
    fn truncated_product() {
        let p = s(0, &[1, 1, 1], 3) * s(0, &[1, 1], 3);
        assert_eq!(p, s(0, &[1, 2, 2], 3));
        assert_eq!(p.coeff(3), None);
    }

    #[test]
    fn product_order_accounts_for_valuation() {
        // q^2 (known to 10) times something known to 5 starting at q^0.
        let a = s(0, &[0, 0, 1], 10);
        let b = s(0, &[1, 1], 5);
        assert_eq!((&a * &b).order(), 7);
        // Laurent factors pull the order down.
        let c = s(-2, &[1], 10);
        assert_eq!((&b * &c).order(), 3);
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(0, &[1, -1], 5).invert().unwrap();
        assert_eq!(inv, s(0, &[1, 1, 1, 1, 1], 5));
    }

    #[test]
    fn inverse_of_laurent_monomial_part() {
        // (q^-1 + 1)^-1 = q (1 + q)^-1
        let x = s(-1, &[1, 1], 6);
        let inv = x.invert().unwrap();
        assert_eq!(inv.min_exp(), 1);
        assert_eq!(inv.order(), 8);
        let back = &x * &inv;
        assert_eq!(back.truncate(6), LaurentSeries::one(back.order()).truncate(6));
    }

    #[test]
    fn non_units_are_rejected() {
        assert!(matches!(s(0, &[2, 1], 5).invert(), Err(SeriesError::NotInvertible(_))));
        assert!(matches!(LaurentSeries::zero(5).invert(), Err(SeriesError::NotInvertible(_))));
    }

    #[test]
    fn exact_division_with_even_lead() {
        // (2 + 2q) / (2 - 2q) = (1 + q)/(1 - q) = 1 + 2q + 2q^2 + ...
        let q = s(0, &[2, 2], 6).div_exact(&s(0, &[2, -2], 6)).unwrap();
        assert_eq!(q, s(0, &[1, 2, 2, 2, 2, 2], 6));
        assert!(matches!(s(0, &[1], 6).div_exact(&s(0, &[2, 1], 6)), Err(SeriesError::NotDivisible { exp: 0 })));
    }

    #[test]
    fn overflow_falls_back_to_bignum() {
        let big = BigInt::from(i64::MAX);
        let a = LaurentSeries::new(0, vec![big.clone(), big.clone()], 4);
        let sq = &a * &a;
        assert_eq!(sq.coeff(1), Some(&big * &big * 2));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = s(0, &[1, -1, 0, 1], 12);
        let cube = &(&a * &a) * &a;
        assert_eq!(a.pow(3).unwrap(), cube);
        let inv2 = a.pow(-2).unwrap();
        assert_eq!(&(&inv2 * &a) * &a, LaurentSeries::one(12));
    }

    #[test]
    fn division_by_binomials() {
        let a = s(0, &[1, 2, 3, 4, 5, 6, 7, 8], 8);
        for m in [Monomial::q(1), Monomial::neg_q(3), Monomial::q(-2)] {
            let d = LaurentSeries::from_poly(&SparsePoly::one_minus(m), 20);
            let fast = a.div_one_minus(m).unwrap();
            let slow = a.div_exact(&d).unwrap();
            assert_eq!(fast.truncate(slow.order()), slow.truncate(fast.order()), "{m}");
            assert!(fast.order() >= 8, "{m}");
        }
        let doubled = a.scale(&BigInt::from(2));
        assert_eq!(doubled.div_one_minus(Monomial::neg_q(0)).unwrap(), a);
        assert!(a.div_one_minus(Monomial::neg_q(0)).is_err());
        assert!(a.div_one_minus(Monomial::ONE).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(s(0, &[1, -1, 0, 2], 5).to_string(), "1*q^0 - 1*q^1 + 2*q^3 + O(q^5)");
        assert_eq!(LaurentSeries::zero(3).to_string(), "O(q^3)");
    }
}
