use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::multisum::{beta_multisum, beta_sigma};
use super::recurrence::beta_3m_minus_1;
use super::term::Term;
use super::{BaileyError, BaileyPair, BetaForm};
use crate::series::{to_order, LaurentSeries, Monomial, SeriesError, SparsePoly};

type CacheKey = (i64, i64, i64, i64);

fn cache() -> &'static Mutex<HashMap<CacheKey, LaurentSeries>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, LaurentSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `1/(q)_k` for `k = 0..=k_max`.
fn inverse_factorials(k_max: i64, order: i64) -> Result<Vec<LaurentSeries>, SeriesError> {
    let mut out = vec![LaurentSeries::one(order)];
    for k in 1..=k_max {
        let next = out[k as usize - 1].div_one_minus(Monomial::q(k))?;
        out.push(next);
    }
    Ok(out)
}

/// `sum_{s=0}^{n} alpha(s) / ((q)_{n-s} (q)_{n+s})` for an arbitrary alpha
/// sequence.
pub fn beta_from_alpha<F, E>(alpha: F, n: i64, order: i64) -> Result<LaurentSeries, E>
where
    F: Fn(i64) -> Result<SparsePoly, E>,
    E: From<SeriesError>,
{
    let alphas = (0..=n).map(&alpha).collect::<Result<Vec<_>, E>>()?;
    to_order(order, |work| {
        let inv = inverse_factorials(2 * n, work)?;
        let mut acc = LaurentSeries::zero(work);
        for (s, a) in alphas.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let s = s as i64;
            let t = &inv[(n - s) as usize] * &inv[(n + s) as usize];
            acc = &acc + &t.mul_poly(a);
        }
        Ok(acc)
    })
}

/// The defining sum of the pair, memoized by `(level, i, n, order)`.
pub fn beta_definitional(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if n < 0 {
        return Err(BaileyError::NegativeIndex(n));
    }
    let key = (pair.level(), pair.module_index(), n, order);
    if let Some(hit) = cache().lock().expect("beta cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let s = beta_from_alpha(|k| pair.alpha(k), n, order)?;
    cache().lock().expect("beta cache poisoned").insert(key, s.clone());
    Ok(s)
}

/// Runs an `i = 1` computation and converts it to the pair's module index
/// using `beta^(l,2)_n = q^{-n} beta^(l,1)_n`.
pub(crate) fn via_first_module<F>(pair: BaileyPair, n: i64, order: i64, f: F) -> Result<LaurentSeries, BaileyError>
where
    F: Fn(BaileyPair, i64) -> Result<LaurentSeries, BaileyError>,
{
    if pair.module_index() == 1 {
        f(pair, order)
    } else {
        Ok(f(pair.first(), order + n)?.shift(-n).truncate(order))
    }
}

/// `q^{-n} beta^(l,1)_n`.
pub fn beta_i2_from_i1(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    Ok(beta_definitional(pair.first(), n, order + n)?.shift(-n).truncate(order))
}

/// Product formulas valid for every `n`: `q^{n^2}/(q)_{2n}` at level 5,
/// `q^n (-1;q^3)_n / ((-1;q)_n (q)_{2n})` at level 6, `q^n/(q)_{2n}` at level 7.
pub fn beta_closed(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if n < 0 {
        return Err(BaileyError::NegativeIndex(n));
    }
    let term = match pair.level() {
        5 => Term::new(1, n * n).over(Monomial::q(1), 1, 2 * n),
        6 => Term::new(1, n).times(Monomial::neg_q(0), 3, n).over(Monomial::neg_q(0), 1, n).over(
            Monomial::q(1),
            1,
            2 * n,
        ),
        7 => Term::new(1, n).over(Monomial::q(1), 1, 2 * n),
        level => return Err(BaileyError::FormNotAvailable { form: BetaForm::Closed, level }),
    };
    via_first_module(pair, n, order, |_, work| Ok(term.eval(work)?))
}

/// The per-residue product formulas for `n = 3m` and `n = 3m+1` at levels
/// 5 to 7.
pub fn beta_residue_closed(pair: BaileyPair, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if n < 0 || n % 3 == 2 {
        return Err(BaileyError::InvalidResidue { form: BetaForm::Closed, n });
    }
    let m = n / 3;
    let plus_one = n % 3;
    let term = match (pair.level(), plus_one) {
        (5, 0) => Term::new(1, 9 * m * m).over(Monomial::q(1), 1, 6 * m),
        (5, _) => Term::new(1, 9 * m * m + 6 * m + 1).over(Monomial::q(1), 1, 6 * m + 2),
        (6, e) => Term::new(1, 3 * m + e)
            .times(Monomial::neg_q(0), 3, 3 * m + e)
            .over(Monomial::neg_q(0), 1, 3 * m + e)
            .over(Monomial::q(1), 1, 6 * m + 2 * e),
        (7, e) => Term::new(1, 3 * m + e).over(Monomial::q(1), 1, 6 * m + 2 * e),
        (level, _) => return Err(BaileyError::FormNotAvailable { form: BetaForm::Closed, level }),
    };
    via_first_module(pair, n, order, |_, work| Ok(term.eval(work)?))
}

/// Dispatches to the requested representation.
pub fn beta(pair: BaileyPair, form: BetaForm, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
    if !form.available_at(pair.level()) {
        return Err(BaileyError::FormNotAvailable { form, level: pair.level() });
    }
    match form {
        BetaForm::Definitional => beta_definitional(pair, n, order),
        BetaForm::Closed => beta_closed(pair, n, order),
        BetaForm::MultisumA | BetaForm::MultisumB => beta_multisum(pair, form, n, order),
        BetaForm::Sigma => beta_sigma(pair, n, order),
        BetaForm::Recurrence => {
            if n < 2 || n % 3 != 2 {
                return Err(BaileyError::InvalidResidue { form, n });
            }
            beta_3m_minus_1(pair, (n + 1) / 3, order)
        }
    }
}

/// `alpha_0 = 1`, `alpha_n = (-1)^n q^{n(n-1)/2} (1 + q^n)`.
pub fn unit_pair_alpha(n: i64) -> SparsePoly {
    if n == 0 {
        return SparsePoly::one();
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let base = n * (n - 1) / 2;
    SparsePoly::term(sign, base) + SparsePoly::term(sign, base + n)
}

/// `beta_0 = 1` and `beta_n = 0` otherwise.
pub fn unit_pair_beta(n: i64, order: i64) -> LaurentSeries {
    if n == 0 {
        LaurentSeries::one(order)
    } else {
        LaurentSeries::zero(order)
    }
}

/// `alpha_0 = 1`, `alpha_n = 2 (-1)^n q^{n^2}`.
pub fn even_pair_alpha(n: i64) -> SparsePoly {
    if n == 0 {
        return SparsePoly::one();
    }
    SparsePoly::term(if n % 2 == 0 { 2 } else { -2 }, n * n)
}

/// `1/(q^2;q^2)_n`.
pub fn even_pair_beta(n: i64, order: i64) -> Result<LaurentSeries, SeriesError> {
    Term::new(1, 0).over(Monomial::q(2), 2, n).eval(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_equal;

    fn p(l: i64, i: i64) -> BaileyPair {
        BaileyPair::new(l, i).unwrap()
    }

    fn same(a: &LaurentSeries, b: &LaurentSeries) -> bool {
        series_equal(a, b).unwrap().is_equal()
    }

    #[test]
    fn beta_zero_is_one() {
        for pair in BaileyPair::all() {
            assert_eq!(beta_definitional(pair, 0, 10).unwrap(), LaurentSeries::one(10));
        }
    }

    #[test]
    fn level_five_beta_one() {
        // q/((1-q)(1-q^2)) = q + q^2 + 2q^3 + 2q^4 + 3q^5 + ...
        let s = beta_definitional(p(5, 1), 1, 10).unwrap();
        assert_eq!(s, LaurentSeries::from_i64s(0, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 5], 10));
    }

    #[test]
    fn closed_forms_match_definition() {
        for level in 5..=7 {
            for i in 1..=2 {
                for n in 0..8 {
                    let pair = p(level, i);
                    let a = beta_closed(pair, n, 30).unwrap();
                    let b = beta_definitional(pair, n, 30).unwrap();
                    assert!(same(&a, &b), "{pair} n={n}");
                    if n % 3 != 2 {
                        assert!(same(&beta_residue_closed(pair, n, 30).unwrap(), &b), "{pair} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn level_six_first_term() {
        // q * 2 / (2 (q)_2) = q/(q)_2
        let s = beta_closed(p(6, 1), 1, 10).unwrap();
        let t = Term::new(1, 1).over(Monomial::q(1), 1, 2).eval(10).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn second_module_shift() {
        for pair in BaileyPair::all().filter(|p| p.module_index() == 2) {
            for n in 0..7 {
                let a = beta_i2_from_i1(pair, n, 25).unwrap();
                let b = beta_definitional(pair, n, 25).unwrap();
                assert!(same(&a, &b), "{pair} n={n}");
            }
        }
    }

    #[test]
    fn special_pairs_satisfy_definition() {
        for n in 0..10 {
            let u = beta_from_alpha(|k| Ok::<_, SeriesError>(unit_pair_alpha(k)), n, 30).unwrap();
            assert!(same(&u, &unit_pair_beta(n, 30)), "unit n={n}");
            let e = beta_from_alpha(|k| Ok::<_, SeriesError>(even_pair_alpha(k)), n, 30).unwrap();
            assert!(same(&e, &even_pair_beta(n, 30).unwrap()), "even n={n}");
        }
        assert_eq!(unit_pair_alpha(1), SparsePoly::term(-1, 0) + SparsePoly::term(-1, 1));
        assert_eq!(even_pair_alpha(2), SparsePoly::term(2, 4));
    }

    #[test]
    fn unavailable_forms_are_rejected() {
        assert!(matches!(beta(p(5, 1), BetaForm::MultisumA, 3, 10), Err(BaileyError::FormNotAvailable { .. })));
        assert!(matches!(beta(p(8, 1), BetaForm::Closed, 3, 10), Err(BaileyError::FormNotAvailable { .. })));
        assert!(matches!(beta(p(8, 1), BetaForm::Recurrence, 3, 10), Err(BaileyError::InvalidResidue { .. })));
    }
}
