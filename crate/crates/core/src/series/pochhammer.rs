//! q-Pochhammer symbols `(a; q^b)_n` and `(a; q^b)_inf`, and Gaussian binomials.

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::to_order;
use super::{LaurentSeries, Monomial, SeriesError, Sign, SparsePoly};

fn check_base(base: i64) -> Result<(), SeriesError> {
    if base < 1 {
        return Err(SeriesError::InvalidArgument(format!("Pochhammer base q^{base} must have exponent >= 1")));
    }
    Ok(())
}

/// Product of the factors `1 - sign*q^e` over `exps` (ascending), known below
/// `order`.
///
/// Negative exponents are multiplied in first while the running product is
/// still an exact polynomial, so the dense window never drops a term that a
/// later factor would pull down.
fn factor_product(sign: Sign, exps: &[i64], order: i64) -> LaurentSeries {
    if sign == Sign::Plus && exps.contains(&0) {
        return LaurentSeries::zero(order);
    }
    let low: i64 = exps.iter().filter(|&&e| e < 0).sum();
    let work = order.max(1);
    let len = (work - low) as usize;
    let mut c = vec![BigInt::zero(); len];
    c[(-low) as usize] = BigInt::from(1);
    let s = sign.as_i64();
    for &e in exps {
        match e {
            0 => {
                // 1 - (-1) = 2
                for x in c.iter_mut() {
                    *x *= 2;
                }
            }
            e if e > 0 => {
                let d = e as usize;
                for idx in (d..len).rev() {
                    if !c[idx - d].is_zero() {
                        let t = &c[idx - d] * s;
                        c[idx] -= t;
                    }
                }
            }
            e => {
                let d = (-e) as usize;
                for idx in 0..len.saturating_sub(d) {
                    if !c[idx + d].is_zero() {
                        let t = &c[idx + d] * s;
                        c[idx] -= t;
                    }
                }
            }
        }
    }
    LaurentSeries::new(low, c, work).truncate(order)
}

/// Exponents `a.exp + base*j`, `j >= 0`, of the factors of `(a; q^base)_inf`
/// that can influence coefficients below `order`.
fn infinite_exps(a: Monomial, base: i64, order: i64, skip_zero: bool) -> Vec<i64> {
    let neg: i64 = (0..).map(|j| a.exp + base * j).take_while(|&e| e < 0).sum();
    (0..)
        .map(|j| a.exp + base * j)
        .take_while(|&e| e < order - neg || e <= 0)
        .filter(|&e| !(skip_zero && e == 0))
        .collect()
}

/// `(a; q^base)_inf = prod_{j>=0} (1 - a q^{base*j})`, known below `order`.
///
/// The result is the zero series when some factor is `1 - 1`.
pub fn pochhammer_inf(a: Monomial, base: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    check_base(base)?;
    Ok(factor_product(a.sign, &infinite_exps(a, base, order, false), order))
}

/// Like [`pochhammer_inf`], but fails with [`SeriesError::ZeroFactor`] when
/// the product vanishes identically.
pub fn pochhammer_inf_nonzero(a: Monomial, base: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    check_base(base)?;
    if zero_factor_index(a, base).is_some_and(|k| k >= 0) {
        return Err(SeriesError::ZeroFactor { arg: a, base });
    }
    pochhammer_inf(a, base, order)
}

/// Index `k` with `a q^{base*k} = 1`, if any.
fn zero_factor_index(a: Monomial, base: i64) -> Option<i64> {
    (a.sign == Sign::Plus && a.exp % base == 0).then(|| -a.exp / base)
}

/// The exact polynomial `(a; q^base)_n` for `n >= 0`.
pub fn pochhammer_poly(a: Monomial, base: i64, n: i64) -> SparsePoly {
    assert!(n >= 0, "pochhammer_poly needs n >= 0");
    (0..n).fold(SparsePoly::one(), |acc, j| &acc * &SparsePoly::one_minus(a.shift(base * j)))
}

/// `(a; q^base)_n = (a; q^base)_inf / (a q^{base*n}; q^base)_inf`, valid for
/// negative `n`.
///
/// For `n >= 0` this is the finite product. For `n < 0` the quotient of the
/// two infinite products is expanded directly; a literal `1 - 1` factor common
/// to both products cancels, while one present only in the denominator makes
/// the symbol undefined.
pub fn pochhammer_fin(a: Monomial, base: i64, n: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    check_base(base)?;
    if n >= 0 {
        let all: Vec<i64> = (0..n).map(|j| a.exp + base * j).collect();
        let neg: i64 = all.iter().filter(|&&e| e < 0).sum();
        let exps: Vec<i64> = all.into_iter().filter(|&e| e < order - neg).collect();
        return Ok(factor_product(a.sign, &exps, order));
    }
    let shifted = a.shift(base * n);
    let skip_zero = match zero_factor_index(a, base) {
        Some(k) if (n..0).contains(&k) => {
            return Err(SeriesError::UndefinedPochhammer { arg: a, base, n });
        }
        Some(k) => k >= 0,
        None => false,
    };
    to_order(order, |work| {
        let num = factor_product(a.sign, &infinite_exps(a, base, work, skip_zero), work);
        let den = factor_product(a.sign, &infinite_exps(shifted, base, work, skip_zero), work);
        num.div_exact(&den)
    })
}

/// Gaussian binomial `[n; m]` in `q^base`, zero unless `0 <= m <= n`.
pub fn qbinomial(n: i64, m: i64, base: i64) -> Result<SparsePoly, SeriesError> {
    check_base(base)?;
    if m < 0 || m > n {
        return Ok(SparsePoly::zero());
    }
    let qb = Monomial::q(base);
    let num = pochhammer_poly(qb, base, n);
    let den = &pochhammer_poly(qb, base, m) * &pochhammer_poly(qb, base, n - m);
    num.div_exact(&den).ok_or_else(|| SeriesError::Internal(format!("[{n};{m}] in q^{base} is not a polynomial")))
}

/// Product of several infinite Pochhammer symbols with a common base, known
/// below `order` even when some arguments carry negative powers of `q`.
pub fn pochhammer_inf_product(args: &[Monomial], base: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    to_order(order, |work| {
        let mut acc = LaurentSeries::one(work);
        for &a in args {
            acc = &acc * &pochhammer_inf(a, base, work)?;
        }
        Ok(acc)
    })
}
