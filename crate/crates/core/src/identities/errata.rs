//! Formulas whose typeset form disagrees with the defining sum, each paired
//! with the corrected version used elsewhere in the crate.
//!
//! An erratum is confirmed when the printed form mismatches and the corrected
//! form matches the same reference series.

use serde::Serialize;

use super::{a22_product, cap_sigma_sum, IdentityError};
use crate::bailey::term::{sum_terms, Term};
use crate::bailey::{beta_definitional, beta_multisum, beta_residue_closed, level_recurrence, BaileyPair, BetaForm};
use crate::series::{qbinomial, series_equal, EqualityReport, LaurentSeries, Monomial, SparsePoly};

/// The printed and corrected forms, followed by the reference series.
type Sides = Result<(LaurentSeries, LaurentSeries, LaurentSeries), IdentityError>;

#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(i64) -> Sides,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErratumReport {
    pub id: &'static str,
    pub description: &'static str,
    pub as_printed: EqualityReport,
    pub corrected: EqualityReport,
    /// The printed form fails and the corrected one holds.
    pub confirmed: bool,
}

impl Erratum {
    pub fn check(&self, order: i64) -> Result<ErratumReport, IdentityError> {
        let (printed, corrected, reference) = (self.run)(order)?;
        let as_printed = series_equal(&printed, &reference)?;
        let corrected = series_equal(&corrected, &reference)?;
        let confirmed = !as_printed.is_equal() && corrected.is_equal();
        Ok(ErratumReport { id: self.id, description: self.description, as_printed, corrected, confirmed })
    }
}

fn q(e: i64) -> Monomial {
    Monomial::q(e)
}

fn pair(level: i64) -> BaileyPair {
    BaileyPair::new(level, 1).expect("levels 3..=9 are valid")
}

const M: i64 = 1;

fn level3_a_plus(order: i64) -> Sides {
    let m = M;
    let mut terms = Vec::new();
    for r in -m..=m {
        terms.push(
            Term::signed(m + r, (3 * m * m + 5 * m + 6 * m * r + 3 * r * r + 5 * r + 2) / 2)
                .times(q(2), 3, 2 * m)
                .times_poly(&qbinomial(2 * m, m + r, 3)?)
                .over(q(1), 1, 6 * m + 1)
                .over(q(2), 3, m + r),
        );
    }
    let n = 3 * m + 1;
    Ok((
        sum_terms(terms, order)?,
        beta_multisum(pair(3), BetaForm::MultisumA, n, order)?,
        beta_definitional(pair(3), n, order)?,
    ))
}

fn level3_b_plus(order: i64) -> Sides {
    let m = M;
    let terms = (0..=2 * m).map(|r| {
        Term::signed(r, (3 * r * r + 5 * r) / 2)
            .over(q(1), 3, 2 * m + 1)
            .over(q(2), 3, r + 1)
            .over(q(3), 3, 2 * m - r)
            .over(q(3), 3, r)
    });
    let n = 3 * m + 1;
    Ok((
        sum_terms(terms, order)?,
        beta_multisum(pair(3), BetaForm::MultisumB, n, order)?,
        beta_definitional(pair(3), n, order)?,
    ))
}

fn level6_residue_zero(order: i64) -> Sides {
    let m = M;
    let printed = Term::new(1, 3 * m)
        .times(Monomial::neg_q(0), 1, 3 * m)
        .over(Monomial::neg_q(0), 3, 3 * m)
        .over(q(1), 1, 6 * m)
        .eval(order)?;
    Ok((printed, beta_residue_closed(pair(6), 3 * m, order)?, beta_definitional(pair(6), 3 * m, order)?))
}

/// Both sides of `left * b_{3m-1} = a b_{3m+1} + b b_{3m}` on the defining
/// betas, with `left` replaced by `printed_left` for the printed version.
fn recurrence_sides(level: i64, printed_left: SparsePoly, order: i64) -> Sides {
    let m = M;
    let rec = level_recurrence(level, m)?;
    let b = |n| beta_definitional(pair(level), n, order);
    let rhs = &b(3 * m + 1)?.mul_poly(&rec.a) + &b(3 * m)?.mul_poly(&rec.b);
    let low = b(3 * m - 1)?;
    Ok((low.mul_poly(&printed_left), low.mul_poly(&rec.left), rhs.truncate(order)))
}

fn level8_recurrence(order: i64) -> Sides {
    recurrence_sides(8, SparsePoly::term(1, 2), order)
}

fn level9_a_plus(order: i64) -> Sides {
    let m = M;
    let mut terms = Vec::new();
    for r in -m..=m {
        terms.push(
            Term::new(1, 3 * r * r + r + 3 * m + 1)
                .times(q(2), 3, 2 * m)
                .times_poly(&qbinomial(2 * m, m + r, 3)?)
                .over_poly(SparsePoly::one_minus(q(3 * m + 1)))
                .over_poly(SparsePoly::one_minus(q(3 * m + 2)))
                .over(q(1), 1, 6 * m)
                .over(q(2), 3, m + r),
        );
    }
    let n = 3 * m + 1;
    Ok((
        sum_terms(terms, order)?,
        beta_multisum(pair(9), BetaForm::MultisumA, n, order)?,
        beta_definitional(pair(9), n, order)?,
    ))
}

fn level9_b_plus(order: i64) -> Sides {
    let m = M;
    let terms = (0..=2 * m).map(|r| {
        Term::new(1, 3 * m * m + 2 * m + 3 * r * r + r - 6 * m * r + 1)
            .over_poly(SparsePoly::one_minus(q(3 * m + 1)))
            .over_poly(SparsePoly::one_minus(q(3 * m + 2)))
            .over(q(1), 3, 2 * m)
            .over(q(2), 3, r)
            .over(q(3), 3, 2 * m - r)
            .over(q(3), 3, r)
    });
    let n = 3 * m + 1;
    Ok((
        sum_terms(terms, order)?,
        beta_multisum(pair(9), BetaForm::MultisumB, n, order)?,
        beta_definitional(pair(9), n, order)?,
    ))
}

fn cap(which: i64, order: i64) -> Sides {
    Ok((cap_sigma_sum(which, true, order)?, cap_sigma_sum(which, false, order)?, a22_product(3, which, order)?))
}

const ERRATA: [Erratum; 8] = [
    Erratum {
        id: "level3-multisum-a-3m+1",
        description: "level 3, beta_{3m+1} A form: the last denominator factor must be (q^2;q^3)_{m+r+1}, not (q^2;q^3)_{m+r}",
        run: level3_a_plus,
    },
    Erratum {
        id: "level3-multisum-b-3m+1",
        description: "level 3, beta_{3m+1} B form: the exponent of q must be (3r^2+5r)/2 + 1",
        run: level3_b_plus,
    },
    Erratum {
        id: "level6-beta-3m",
        description: "level 6, beta_{3m}: the ratio must be (-1;q^3)_{3m}/(-1;q)_{3m}, not its reciprocal",
        run: level6_residue_zero,
    },
    Erratum {
        id: "level8-recurrence",
        description: "level 8 recurrence: the left factor must be q^3, not q^2",
        run: level8_recurrence,
    },
    Erratum {
        id: "level9-multisum-a-3m+1",
        description: "level 9, beta_{3m+1} A form: the denominator must be (q)_{6m+1} (q^2;q^3)_{m+r+1}",
        run: level9_a_plus,
    },
    Erratum {
        id: "level9-multisum-b-3m+1",
        description: "level 9, beta_{3m+1} B form: the denominator must be (q;q^3)_{2m+1} (q^2;q^3)_{r+1} (q^3;q^3)_{2m-r} (q^3;q^3)_r",
        run: level9_b_plus,
    },
    Erratum {
        id: "cap1-bracket-sign",
        description: "first Capparelli double sum: the beta_{3m+1} bracket must read 1/(1-q^{3r+1}) - 1",
        run: |order| cap(1, order),
    },
    Erratum {
        id: "cap2-bracket-sign",
        description: "second Capparelli double sum: the beta_{3m+1} bracket must read 1/(1-q^{3r+1}) - 1",
        run: |order| cap(2, order),
    },
];

pub fn errata() -> &'static [Erratum] {
    &ERRATA
}
