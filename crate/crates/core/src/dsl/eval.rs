use num_bigint::BigInt;
use thiserror::Error;

use super::{Factor, Index, ProductExpr};
use crate::series::{pochhammer_fin, pochhammer_inf, to_order, LaurentSeries, SeriesError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("factor {index} `{factor}`: {source}")]
pub struct EvalError {
    /// Position of the offending factor in the expression (0-based).
    pub index: usize,
    pub factor: String,
    #[source]
    pub source: SeriesError,
}

fn factor_series(f: &Factor, order: i64) -> Result<LaurentSeries, SeriesError> {
    match f {
        Factor::Mono(m) => Ok(LaurentSeries::monomial(BigInt::from(m.sign.as_i64()), m.exp, order)),
        Factor::Poch { args, base, index, power } => {
            let mut acc = LaurentSeries::one(order);
            for &a in args {
                let s = match index {
                    Index::Infinite => pochhammer_inf(a, *base, order)?,
                    Index::Finite(n) => pochhammer_fin(a, *base, *n, order)?,
                };
                acc = &acc * &s;
            }
            acc.pow(*power)
        }
    }
}

/// Expands `e` as a series known below `order`.
///
/// Factors are multiplied left to right; the working order is raised as
/// needed so that Laurent factors do not eat into the requested precision.
pub fn evaluate(e: &ProductExpr, order: i64) -> Result<LaurentSeries, EvalError> {
    to_order(order, |work| {
        let mut acc = LaurentSeries::one(work);
        for (index, f) in e.factors.iter().enumerate() {
            let s = factor_series(f, work).map_err(|source| EvalError { index, factor: f.to_string(), source })?;
            acc = &acc * &s;
        }
        Ok(acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::series::series_equal;

    fn eval(text: &str, order: i64) -> Result<LaurentSeries, EvalError> {
        evaluate(&parse(text).unwrap(), order)
    }

    /// Oracle: partition numbers by the coin-change recurrence.
    fn partition_counts(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n];
        p[0] = 1;
        for part in 1..n {
            for k in part..n {
                p[k] += p[k - part];
            }
        }
        p
    }

    #[test]
    fn reciprocal_euler_product_counts_partitions() {
        let oracle = partition_counts(8);
        assert_eq!(oracle, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(eval("(q;q)_inf^-1", 8).unwrap(), LaurentSeries::from_i64s(0, &oracle, 8));
    }

    #[test]
    fn capparelli_product_head() {
        let s = eval("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 7).unwrap();
        assert_eq!(s, LaurentSeries::from_i64s(0, &[1, 0, 1, 1, 1, 1, 2], 7));
    }

    #[test]
    fn zero_series_cannot_be_inverted() {
        let err = eval("(q;q)_inf * (1;q)_inf^-1", 10).unwrap_err();
        assert_eq!(err.index, 1);
        assert!(matches!(err.source, SeriesError::NotInvertible(_)));
    }

    #[test]
    fn finite_and_empty_products() {
        assert_eq!(eval("(q;q)_0", 5).unwrap(), LaurentSeries::one(5));
        assert!(matches!(eval("(q^2;q)_-3", 5).unwrap_err().source, SeriesError::UndefinedPochhammer { .. }));
    }

    #[test]
    fn laurent_factors_keep_requested_order() {
        let s = eval("q^-5 * (q;q)_inf", 20).unwrap();
        assert_eq!(s.order(), 20);
        let t = eval("(q;q)_inf", 25).unwrap().shift(-5);
        assert!(series_equal(&s, &t).unwrap().is_equal());
    }

    #[test]
    fn product_equalities_of_the_first_capparelli_identity() {
        let a = eval("(q^2,q^3,q^9,q^10;q^12)_inf^-1", 60).unwrap();
        let b = eval("(-q^2;q^2)_inf * (-q^3;q^6)_inf", 60).unwrap();
        assert!(series_equal(&a, &b).unwrap().is_equal());
    }
}
