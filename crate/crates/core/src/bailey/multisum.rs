use super::beta::via_first_module;
use super::term::{sum_terms, Term};
use super::{half, BaileyError, BaileyPair, BetaForm};
use crate::series::{qbinomial, LaurentSeries, Monomial, SeriesError, SparsePoly};

fn q(e: i64) -> Monomial {
    Monomial::q(e)
}

fn nq(e: i64) -> Monomial {
    Monomial::neg_q(e)
}

/// The `r`-th summand of a level's A or B form for `beta_{3m+e}`, `e` in {0, 1}.
fn multisum_term(level: i64, form: BetaForm, m: i64, r: i64, e: i64) -> Result<Term, BaileyError> {
    let t = match (level, form) {
        (3, BetaForm::MultisumA) => {
            let exp = if e == 0 {
                half(3 * m * m - m + 6 * m * r + 3 * r * r - r)?
            } else {
                half(3 * m * m + 5 * m + 6 * m * r + 3 * r * r + 5 * r + 2)?
            };
            Term::signed(m + r, exp)
                .times(q(2), 3, 2 * m)
                .times_poly(&qbinomial(2 * m, m + r, 3)?)
                .over(q(1), 1, 6 * m + e)
                .over(q(2), 3, m + r + e)
        }
        (3, BetaForm::MultisumB) => {
            let exp = if e == 0 { half(3 * r * r - r)? } else { half(3 * r * r + 5 * r)? + 1 };
            Term::signed(r, exp).over(q(1), 3, 2 * m + e).over(q(2), 3, r + e).over(q(3), 3, 2 * m - r).over(q(3), 3, r)
        }
        (4, BetaForm::MultisumA) => {
            let exp = if e == 0 {
                half(6 * m * m + 6 * m * r + 3 * r * r - r)?
            } else {
                half(6 * m * m + 6 * m + 6 * m * r + 3 * r * r + 5 * r + 2)?
            };
            Term::signed(m + r, exp)
                .times(nq(2), 3, r)
                .times(q(2), 3, 2 * m)
                .times_poly(&qbinomial(2 * m, m + r, 3)?)
                .over(q(1), 1, 6 * m + e)
                .over(nq(2), 3, m)
                .over(q(2), 3, m + r + e)
        }
        (4, BetaForm::MultisumB) => {
            let exp = 3 * m * m - 3 * m * r + 3 * r * r + e * (3 * r + 1);
            Term::signed(r, exp)
                .over(nq(1), 3, m - r)
                .over(q(1), 3, 2 * m + e)
                .over(nq(2), 3, m)
                .over(q(2), 3, r + e)
                .over(q(3), 3, 2 * m - r)
                .over(q(3), 3, r)
        }
        (8, BetaForm::MultisumA) => Term::new(1, half(3 * r * r + r)? + 3 * m + e)
            .times(nq(2), 3, r)
            .times(q(2), 3, 2 * m)
            .times_poly(&qbinomial(2 * m, m + r, 3)?)
            .over(q(1), 1, 6 * m + e)
            .over(nq(2), 3, m)
            .over(q(2), 3, m + r + e),
        (8, BetaForm::MultisumB) => Term::new(1, 3 * m * m + 2 * m + 3 * r * r + r - 6 * m * r + e)
            .over(nq(1), 3, m - r)
            .over(q(1), 3, 2 * m + e)
            .over(nq(2), 3, m)
            .over(q(2), 3, r + e)
            .over(q(3), 3, 2 * m - r)
            .over(q(3), 3, r),
        (9, BetaForm::MultisumA) => Term::new(1, 3 * r * r + r + 3 * m + e)
            .times(q(2), 3, 2 * m)
            .times_poly(&qbinomial(2 * m, m + r, 3)?)
            .over(q(1), 1, 6 * m + e)
            .over(q(2), 3, m + r + e),
        (9, BetaForm::MultisumB) => Term::new(1, 3 * m * m + 2 * m + 3 * r * r + r - 6 * m * r + e)
            .over(q(1), 3, 2 * m + e)
            .over(q(2), 3, r + e)
            .over(q(3), 3, 2 * m - r)
            .over(q(3), 3, r),
        (level, form) => return Err(BaileyError::FormNotAvailable { form, level }),
    };
    Ok(t)
}

/// `beta_n` for `n = 3m` or `3m+1` from the A form (sum over `-m..=m`) or
/// the B form (sum over `0..=2m`) at levels 3, 4, 8 and 9.
pub fn beta_multisum(pair: BaileyPair, form: BetaForm, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if !matches!(form, BetaForm::MultisumA | BetaForm::MultisumB) || !form.available_at(pair.level()) {
        return Err(BaileyError::FormNotAvailable { form, level: pair.level() });
    }
    if n < 0 || n % 3 == 2 {
        return Err(BaileyError::InvalidResidue { form, n });
    }
    let (m, e) = (n / 3, n % 3);
    let range = if form == BetaForm::MultisumA { -m..=m } else { 0..=2 * m };
    let terms = range.map(|r| multisum_term(pair.level(), form, m, r, e)).collect::<Result<Vec<_>, _>>()?;
    via_first_module(pair, n, order, |_, work| Ok(sum_terms(terms.iter().cloned(), work)?))
}

pub(crate) fn sigma_term(m: i64, r: i64) -> Term {
    Term::signed(r, (3 * r * r + r) / 2).times(q(2), 3, r).over(q(2), 3, 2 * m).over(q(3), 3, 2 * m - r).over(
        q(1),
        1,
        3 * r,
    )
}

/// `sigma(m, r) = (-1)^r q^{(3r^2+r)/2} (q^2;q^3)_r / ((q^2;q^3)_{2m} (q^3;q^3)_{2m-r} (q)_{3r})`,
/// taken as 0 unless `0 <= r <= 2m`.
pub fn sigma(m: i64, r: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    if m < 0 || r < 0 || r > 2 * m {
        return Ok(LaurentSeries::zero(order));
    }
    sigma_term(m, r).eval(order)
}

/// `sigma(m, r) * (1/(1-q^{3r+1}) - 1) / (1-q^{6m+2})`.
pub(crate) fn sigma_plus_term(m: i64, r: i64) -> Term {
    let mut t = sigma_term(m, r);
    t = t.times_poly(&SparsePoly::term(1, 3 * r + 1));
    t.over_poly(SparsePoly::one_minus(q(3 * r + 1))).over_poly(SparsePoly::one_minus(q(6 * m + 2)))
}

/// `sigma(m, r) (q^{6m} - (1-q^{6m+1})/(1-q^{3r+1}))`.
pub(crate) fn sigma_minus_term(m: i64, r: i64) -> Term {
    let num =
        &(&SparsePoly::term(1, 6 * m) * &SparsePoly::one_minus(q(3 * r + 1))) - &SparsePoly::one_minus(q(6 * m + 1));
    sigma_term(m, r).times_poly(&num).over_poly(SparsePoly::one_minus(q(3 * r + 1)))
}

/// Level 3 sums of `sigma(m, r)`: `sum sigma` for `n = 3m`, the divided
/// difference form for `n = 3m+1`, and the direct form for `n = 3m-1`.
pub fn beta_sigma(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if pair.level() != 3 {
        return Err(BaileyError::FormNotAvailable { form: BetaForm::Sigma, level: pair.level() });
    }
    if n < 0 {
        return Err(BaileyError::NegativeIndex(n));
    }
    let terms: Vec<Term> = match n % 3 {
        0 => (0..=2 * (n / 3)).map(|r| sigma_term(n / 3, r)).collect(),
        1 => (0..=2 * (n / 3)).map(|r| sigma_plus_term(n / 3, r)).collect(),
        _ => {
            let m = (n + 1) / 3;
            (0..=2 * m).map(|r| sigma_minus_term(m, r)).collect()
        }
    };
    via_first_module(pair, n, order, |_, work| Ok(sum_terms(terms.iter().cloned(), work)?))
}

/// `beta^(3,1)_{3m+1}` as
/// `sum_r (-1)^r q^{(3r^2+7r+2)/2} (q^2;q^3)_r / ((q^2;q^3)_{2m+1} (q^3;q^3)_{2m-r} (q)_{3r+1})`.
pub fn cap_beta_3m_plus_1(m: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    let terms = (0..=2 * m).map(|r| {
        Term::signed(r, (3 * r * r + 7 * r + 2) / 2)
            .times(q(2), 3, r)
            .over(q(2), 3, 2 * m + 1)
            .over(q(3), 3, 2 * m - r)
            .over(q(1), 1, 3 * r + 1)
    });
    sum_terms(terms, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bailey::beta_definitional;
    use crate::series::series_equal;

    fn p(l: i64, i: i64) -> BaileyPair {
        BaileyPair::new(l, i).unwrap()
    }

    fn agrees(a: &LaurentSeries, b: &LaurentSeries) -> bool {
        series_equal(a, b).unwrap().is_equal()
    }

    #[test]
    fn sigma_small_cases() {
        assert_eq!(sigma(0, 0, 5).unwrap(), LaurentSeries::one(5));
        assert!(sigma(2, -1, 5).unwrap().is_zero());
        assert!(sigma(1, 3, 5).unwrap().is_zero());
        let direct = Term::new(1, 0).over(q(2), 3, 2).over(q(3), 3, 2).eval(10).unwrap();
        assert_eq!(sigma(1, 0, 10).unwrap(), direct);
    }

    #[test]
    fn multisums_match_definition() {
        for level in [3, 4, 8, 9] {
            for form in [BetaForm::MultisumA, BetaForm::MultisumB] {
                for n in [0, 1, 3, 4, 6, 7] {
                    let a = beta_multisum(p(level, 1), form, n, 30).unwrap();
                    let b = beta_definitional(p(level, 1), n, 30).unwrap();
                    assert!(agrees(&a, &b), "level {level} {form} n={n}: {:?}", series_equal(&a, &b));
                }
            }
        }
    }

    #[test]
    fn level_three_sigma_forms() {
        for n in 0..9 {
            let a = beta_sigma(p(3, 1), n, 30).unwrap();
            let b = beta_definitional(p(3, 1), n, 30).unwrap();
            assert!(agrees(&a, &b), "n={n}");
        }
        for m in 0..3 {
            let b = beta_definitional(p(3, 1), 3 * m + 1, 30).unwrap();
            assert!(agrees(&cap_beta_3m_plus_1(m, 30).unwrap(), &b), "m={m}");
        }
    }

    #[test]
    fn residue_two_is_rejected() {
        assert!(matches!(
            beta_multisum(p(3, 1), BetaForm::MultisumA, 5, 10),
            Err(BaileyError::InvalidResidue { n: 5, .. })
        ));
    }
}
