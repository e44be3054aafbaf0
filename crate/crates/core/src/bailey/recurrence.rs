use super::beta::{beta_definitional, beta_residue_closed, via_first_module};
use super::multisum::beta_multisum;
use super::{BaileyError, BaileyPair, BetaForm};
use crate::series::{series_equal, to_order, EqualityReport, LaurentSeries, Monomial, SparsePoly};

/// `left * beta_{3m-1} = a * beta_{3m+1} + b * beta_{3m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub left: SparsePoly,
    pub a: SparsePoly,
    pub b: SparsePoly,
}

fn p(terms: &[(i64, i64)]) -> SparsePoly {
    SparsePoly::from_terms(terms.iter().copied())
}

fn one_minus(e: i64) -> SparsePoly {
    SparsePoly::one_minus(Monomial::q(e))
}

/// The three-term relation linking `beta_{3m-1}`, `beta_{3m}` and
/// `beta_{3m+1}` for the `(level, 1)` pair.
pub fn level_recurrence(level: i64, m: i64) -> Result<Recurrence, BaileyError> {
    let top = &one_minus(6 * m + 1) * &one_minus(6 * m + 2);
    let low = &one_minus(6 * m) * &one_minus(6 * m - 1);
    let cubic = p(&[(1, 0), (1, 3 * m)]);
    let rec = match level {
        3 => Recurrence { left: SparsePoly::one(), a: -&top, b: -p(&[(1, 0), (-1, 6 * m), (-1, 6 * m + 1)]) },
        4 => Recurrence {
            left: SparsePoly::term(1, 3 * m),
            a: -(&top * &cubic),
            b: -(&(&SparsePoly::term(1, 3 * m) * &cubic) * &p(&[(1, 0), (-1, 3 * m), (-1, 3 * m + 1)])),
        },
        5 => Recurrence { left: SparsePoly::term(1, 6 * m - 1), a: SparsePoly::zero(), b: low },
        6 => Recurrence { left: p(&[(1, 1), (1, 6 * m - 1), (-1, 3 * m)]), a: SparsePoly::zero(), b: low },
        7 => Recurrence { left: SparsePoly::term(1, 1), a: SparsePoly::zero(), b: low },
        8 => Recurrence {
            left: SparsePoly::term(1, 3),
            a: -(&top * &cubic),
            b: p(&[(1, 1), (1, 2), (1, 3 * m + 1), (-1, 6 * m + 2)]),
        },
        9 => Recurrence { left: SparsePoly::term(1, 3), a: -&top, b: p(&[(1, 1), (1, 2), (-1, 6 * m + 2)]) },
        other => return Err(BaileyError::InvalidLevel(other)),
    };
    Ok(rec)
}

/// `beta_{3m}` and `beta_{3m+1}` from the level's own formulas: the B form
/// at levels 3, 4, 8, 9 and the per-residue products at levels 5 to 7.
fn known(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    match pair.level() {
        5..=7 => beta_residue_closed(pair, n, order),
        _ => beta_multisum(pair, BetaForm::MultisumB, n, order),
    }
}

/// `beta_{3m-1}` for `m >= 1`, solved from the level recurrence.
pub fn beta_3m_minus_1(pair: BaileyPair, m: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if m < 1 {
        return Err(BaileyError::InvalidResidue { form: BetaForm::Recurrence, n: 3 * m - 1 });
    }
    let rec = level_recurrence(pair.level(), m)?;
    via_first_module(pair, 3 * m - 1, order, |first, target| {
        to_order(target, |work| {
            let rhs = &known(first, 3 * m + 1, work)?.mul_poly(&rec.a) + &known(first, 3 * m, work)?.mul_poly(&rec.b);
            let left = LaurentSeries::from_poly(&rec.left, work + rec.left.max_exp().unwrap_or(0) + 1);
            Ok::<_, BaileyError>(rhs.div_exact(&left)?)
        })
    })
}

/// Checks the level recurrence at `m` on the definitional betas.
pub fn check_level_recurrence(level: i64, m: i64, order: i64) -> Result<EqualityReport, BaileyError> {
    let pair = BaileyPair::new(level, 1)?;
    let rec = level_recurrence(level, m)?;
    let b = |n| beta_definitional(pair, n, order);
    let lhs = b(3 * m - 1)?.mul_poly(&rec.left).truncate(order);
    let rhs = &b(3 * m + 1)?.mul_poly(&rec.a) + &b(3 * m)?.mul_poly(&rec.b);
    Ok(series_equal(&lhs, &rhs.truncate(order))?)
}

/// Checks the level 3 recurrence in `n`:
/// `q^2 (1-q^{2n})(1-q^{2n-1}) beta_n = (-q^2 + q^{2n} + q^{2n+1}) beta_{n-1} - q^2 beta_{n-2}`.
pub fn check_n_recurrence(n: i64, order: i64) -> Result<EqualityReport, BaileyError> {
    if n < 2 {
        return Err(BaileyError::NegativeIndex(n - 2));
    }
    let pair = BaileyPair::new(3, 1)?;
    let b = |k| beta_definitional(pair, k, order);
    let left = &SparsePoly::term(1, 2) * &(&one_minus(2 * n) * &one_minus(2 * n - 1));
    let c1 = p(&[(-1, 2), (1, 2 * n), (1, 2 * n + 1)]);
    let lhs = b(n)?.mul_poly(&left);
    let rhs = &b(n - 1)?.mul_poly(&c1) - &b(n - 2)?.mul_poly(&SparsePoly::term(1, 2));
    Ok(series_equal(&lhs, &rhs)?)
}
