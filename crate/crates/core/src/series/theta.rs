//! Both sides of the Jacobi triple product and the quintuple product identity.

use num_bigint::BigInt;

use super::laurent::to_order;
use super::pochhammer::pochhammer_inf_product;
use super::{LaurentSeries, Monomial, SeriesError, Sign};

/// `sum_{n in Z} (-1)^n z^n q^{n^2}`, known below `order`.
pub fn jtp_sum(z: Monomial, order: i64) -> LaurentSeries {
    // n^2 + e n < order  requires  |n + e/2| < sqrt(order + e^2/4)
    let e = z.exp;
    let reach = e.abs() + 2 + isqrt(order.max(0) + e * e);
    let terms: Vec<(i64, i64)> = (-reach..=reach)
        .map(|n| {
            let c = if n.rem_euclid(2) == 1 { -z.sign.as_i64() } else { 1 };
            (n * n + e * n, c)
        })
        .filter(|&(x, _)| x < order)
        .collect();
    let lo = terms.iter().map(|&(x, _)| x).min().unwrap_or(0).min(0);
    let mut coeffs = vec![BigInt::from(0); (order - lo).max(0) as usize];
    for (x, c) in terms {
        coeffs[(x - lo) as usize] += c;
    }
    LaurentSeries::new(lo, coeffs, order)
}

fn isqrt(n: i64) -> i64 {
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `(q/z, zq, q^2; q^2)_inf`
pub fn jtp_product(z: Monomial, order: i64) -> LaurentSeries {
    let args = [z.recip().shift(1), z.shift(1), Monomial::q(2)];
    pochhammer_inf_product(&args, 2, order).expect("base 2 is valid")
}

fn reject_unit(z: Monomial) -> Result<(), SeriesError> {
    if z.is_one() {
        return Err(SeriesError::InvalidArgument("the quintuple product needs z != 1".into()));
    }
    Ok(())
}

/// `(-q z^3, -q^2 z^-3, q^3; q^3)_inf - z (-q z^-3, -q^2 z^3, q^3; q^3)_inf`
pub fn qpi_lhs(z: Monomial, order: i64) -> Result<LaurentSeries, SeriesError> {
    reject_unit(z)?;
    let z3 = z.pow(3);
    let zm3 = z.pow(-3);
    to_order(order, |work| {
        let first = pochhammer_inf_product(&[z3.negate().shift(1), zm3.negate().shift(2), Monomial::q(3)], 3, work)?;
        let second = pochhammer_inf_product(&[zm3.negate().shift(1), z3.negate().shift(2), Monomial::q(3)], 3, work)?;
        let scaled = second.shift(z.exp).scale(&BigInt::from(z.sign.as_i64()));
        Ok(&first - &scaled)
    })
}

/// `(q/z, z, q; q)_inf (q/z^2, q z^2; q^2)_inf`
pub fn qpi_rhs(z: Monomial, order: i64) -> Result<LaurentSeries, SeriesError> {
    reject_unit(z)?;
    let z2 = z.pow(2);
    debug_assert_eq!(z2.sign, Sign::Plus);
    to_order(order, |work| {
        let a = pochhammer_inf_product(&[z.recip().shift(1), z, Monomial::q(1)], 1, work)?;
        let b = pochhammer_inf_product(&[z2.recip().shift(1), z2.shift(1)], 2, work)?;
        Ok(&a * &b)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_equal;

    #[test]
    fn triple_product_at_z_equal_q_vanishes() {
        assert!(jtp_sum(Monomial::q(1), 40).is_zero());
        assert!(jtp_product(Monomial::q(1), 40).is_zero());
    }

    #[test]
    fn triple_product_laurent_case() {
        let z = Monomial::q(2);
        let sum = jtp_sum(z, 30);
        assert_eq!(sum.valuation(), Some(-1));
        assert_eq!(sum.coeff(-1), Some(BigInt::from(-1)));
        assert!(series_equal(&sum, &jtp_product(z, 30)).unwrap().is_equal());
    }

    #[test]
    fn quintuple_product_small_cases() {
        for z in [Monomial::q(1), Monomial::q(2), Monomial::neg_q(1)] {
            let l = qpi_lhs(z, 40).unwrap();
            let r = qpi_rhs(z, 40).unwrap();
            assert!(series_equal(&l, &r).unwrap().is_equal(), "z = {z}");
        }
        assert!(qpi_lhs(Monomial::q(1), 40).unwrap().is_zero());
        assert!(qpi_rhs(Monomial::ONE, 10).is_err());
    }
}
