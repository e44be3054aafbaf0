use num_bigint::BigInt;
use serde::Serialize;

use super::{LaurentSeries, SeriesError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
}

/// Outcome of comparing two truncated series on their common window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub status: Status,
    /// Half-open exponent range `[lo, hi)` that was compared.
    pub window: (i64, i64),
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_exp: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_big")]
    pub lhs_coeff: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_big")]
    pub rhs_coeff: Option<BigInt>,
}

fn ser_big<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => big_to_json(b).serialize(s),
        None => s.serialize_none(),
    }
}

/// Exact JSON number for an arbitrary-size integer.
pub fn big_to_json(b: &BigInt) -> serde_json::Number {
    b.to_string().parse().expect("decimal integers are valid JSON numbers")
}

impl EqualityReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }
}

/// Compares `s` and `t` coefficientwise.
///
/// The window runs from the lower of the two `min_exp`s (coefficients below a
/// series' `min_exp` are known zeros) up to the lower of the two orders.
pub fn series_equal(s: &LaurentSeries, t: &LaurentSeries) -> Result<EqualityReport, SeriesError> {
    let hi = s.order().min(t.order());
    let lo = s.min_exp().min(t.min_exp());
    if lo >= hi {
        return Err(SeriesError::EmptyWindow { lo, hi });
    }
    for e in lo..hi {
        let (a, b) = (s.coeff(e).unwrap(), t.coeff(e).unwrap());
        if a != b {
            return Ok(EqualityReport {
                status: Status::Mismatch,
                window: (lo, hi),
                first_bad_exp: Some(e),
                lhs_coeff: Some(a),
                rhs_coeff: Some(b),
            });
        }
    }
    Ok(EqualityReport {
        status: Status::Equal,
        window: (lo, hi),
        first_bad_exp: None,
        lhs_coeff: None,
        rhs_coeff: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compares_on_common_window() {
        let a = LaurentSeries::from_i64s(0, &[1, 1], 5);
        let b = LaurentSeries::from_i64s(0, &[1, 1], 9);
        let r = series_equal(&a, &b).unwrap();
        assert!(r.is_equal());
        assert_eq!(r.window, (0, 5));
    }

    #[test]
    fn reports_first_mismatch() {
        let a = LaurentSeries::from_i64s(0, &[1, 1], 5);
        let b = LaurentSeries::from_i64s(0, &[1, 2], 5);
        let r = series_equal(&a, &b).unwrap();
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.first_bad_exp, Some(1));
        assert_eq!(r.lhs_coeff, Some(BigInt::from(1)));
        assert_eq!(r.rhs_coeff, Some(BigInt::from(2)));
    }

    #[test]
    fn lower_terms_of_either_side_are_checked() {
        let a = LaurentSeries::from_i64s(-2, &[1, 0, 1], 5);
        let b = LaurentSeries::from_i64s(0, &[1], 5);
        let r = series_equal(&a, &b).unwrap();
        assert_eq!(r.first_bad_exp, Some(-2));
    }

    #[test]
    fn empty_window() {
        let a = LaurentSeries::from_i64s(10, &[1], 12);
        let b = LaurentSeries::from_i64s(0, &[], 0);
        assert!(matches!(series_equal(&a, &b), Err(SeriesError::EmptyWindow { .. })));
    }
}
