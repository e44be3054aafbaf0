//! Series-product identities assembled from Bailey pairs, theta products and
//! the Andrews-Gordon-Bressoud multisum, plus a catalog that verifies them.

mod catalog;
mod errata;

use thiserror::Error;

use crate::bailey::term::{sum_terms, Term};
use crate::bailey::{beta_definitional, sigma_minus_term, sigma_plus_term, sigma_term, BaileyError, BaileyPair};
use crate::dsl::{evaluate, parse, EvalError, ParseError};
use crate::series::{pochhammer_inf, LaurentSeries, Monomial, SeriesError, SparsePoly};

pub use catalog::{catalog, find, theta_arguments, verify, CatalogEntry, Check, Expectation, Params, Verification};
pub use errata::{errata, Erratum, ErratumReport};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Bailey(#[from] BaileyError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `sum_{n >= 0} q^{n^2} beta_n`.
///
/// Each `beta_n` must have valuation at least `-n`, which holds for every
/// pair in this crate; summation stops once `n^2 - n >= order`.
pub fn wbl_lhs<F, E>(mut beta: F, order: i64) -> Result<LaurentSeries, E>
where
    F: FnMut(i64, i64) -> Result<LaurentSeries, E>,
{
    let mut acc = LaurentSeries::zero(order);
    let mut n = 0;
    while n == 0 || n * n - n < order {
        let b = beta(n, (order - n * n).max(1))?;
        acc = &acc + &b.shift(n * n).truncate(order);
        n += 1;
    }
    Ok(acc)
}

/// `(1/(q)_inf) sum_{n >= 0} q^{n^2} alpha_n`, with the same valuation
/// assumption as [`wbl_lhs`].
pub fn wbl_rhs_from_alpha<F, E>(mut alpha: F, order: i64) -> Result<LaurentSeries, E>
where
    F: FnMut(i64) -> Result<SparsePoly, E>,
    E: From<SeriesError>,
{
    let theta = alpha_theta_sum(&mut alpha, order)?;
    let euler = pochhammer_inf(Monomial::q(1), 1, order)?;
    Ok(theta.div_exact(&euler)?.truncate(order))
}

fn alpha_theta_sum<F, E>(alpha: &mut F, order: i64) -> Result<LaurentSeries, E>
where
    F: FnMut(i64) -> Result<SparsePoly, E>,
{
    let mut sum = SparsePoly::zero();
    let mut n = 0;
    while n == 0 || n * n - n < order {
        sum = &sum + &alpha(n)?.shift(n * n);
        n += 1;
    }
    Ok(LaurentSeries::from_poly(&sum, order))
}

/// `sum_{n >= 0} q^{n^2} alpha_n` for one of the level `l` pairs.
pub fn alpha_theta(pair: BaileyPair, order: i64) -> Result<LaurentSeries, BaileyError> {
    alpha_theta_sum(&mut |n| pair.alpha(n), order)
}

fn check_a22_index(level: i64, i: i64) -> Result<(), IdentityError> {
    if level < 1 || i < 1 || i > 1 + level / 2 {
        return Err(IdentityError::InvalidArgument(format!("need 1 <= i <= 1 + floor(l/2), got l = {level}, i = {i}")));
    }
    Ok(())
}

/// The quintuple-product numerator of the level `l`, index `i` character,
/// without the `1/(q)_inf`.
pub fn a22_numerator_text(level: i64, i: i64) -> Result<String, IdentityError> {
    check_a22_index(level, i)?;
    let m = level + 3;
    Ok(format!("(q^{i},q^{},q^{m};q^{m})_inf * (q^{},q^{};q^{})_inf", m - i, m - 2 * i, level + 2 * i + 3, 2 * m))
}

/// `(q^i, q^{l+3-i}, q^{l+3}; q^{l+3})_inf (q^{l+3-2i}, q^{l+2i+3}; q^{2l+6})_inf / (q)_inf`
pub fn a22_product_text(level: i64, i: i64) -> Result<String, IdentityError> {
    Ok(format!("{} / (q;q)_inf", a22_numerator_text(level, i)?))
}

pub fn a22_product(level: i64, i: i64, order: i64) -> Result<LaurentSeries, IdentityError> {
    eval_text(&a22_product_text(level, i)?, order)
}

pub fn eval_text(text: &str, order: i64) -> Result<LaurentSeries, IdentityError> {
    Ok(evaluate(&parse(text)?, order)?)
}

/// The three-way grouping of the weak Bailey lemma sum by `n mod 3`:
/// `sum_m q^{9m^2} (q^{1-6m} b_{3m-1} + b_{3m} + q^{6m+1} b_{3m+1})` for
/// `i = 1` and
/// `sum_m q^{9m^2-3m} (q^{2-6m} b_{3m-1} + b_{3m} + q^{6m} b_{3m+1})` for
/// `i = 2`, where `b` is the `(l, 1)` beta and `b_{-1} = 0`.
pub fn grouped_lhs(pair: BaileyPair, order: i64) -> Result<LaurentSeries, BaileyError> {
    let first = pair.first();
    let mut acc = LaurentSeries::zero(order);
    let mut m = 0;
    loop {
        let (outer, minus, plus) = if pair.module_index() == 1 {
            (9 * m * m, 1 - 6 * m, 6 * m + 1)
        } else {
            (9 * m * m - 3 * m, 2 - 6 * m, 6 * m)
        };
        // the 3m-1 slot has the lowest exponent, (3m-1)^2 - (3m-1) or more
        if m > 0 && outer + minus >= order {
            break;
        }
        let mut add = |n: i64, shift: i64| -> Result<(), BaileyError> {
            if n < 0 {
                return Ok(());
            }
            let b = beta_definitional(first, n, (order - shift).max(1))?;
            acc = &acc + &b.shift(shift).truncate(order);
            Ok(())
        };
        add(3 * m - 1, outer + minus)?;
        add(3 * m, outer)?;
        add(3 * m + 1, outer + plus)?;
        m += 1;
    }
    Ok(acc)
}

fn cap_terms(which: i64, flip_last: bool) -> impl Fn(i64, i64) -> Vec<Term> {
    move |m, r| {
        let (outer, minus, plus) =
            if which == 1 { (9 * m * m, 1 - 6 * m, 6 * m + 1) } else { (9 * m * m - 3 * m, 2 - 6 * m, 6 * m) };
        let last = sigma_plus_term(m, r).shifted(outer + plus);
        vec![
            sigma_minus_term(m, r).shifted(outer + minus),
            sigma_term(m, r).shifted(outer),
            if flip_last { last.negated() } else { last },
        ]
    }
}

pub(crate) fn cap_sigma_sum(which: i64, flip_last: bool, order: i64) -> Result<LaurentSeries, IdentityError> {
    if !(1..=2).contains(&which) {
        return Err(IdentityError::InvalidArgument(format!("Capparelli identity {which} does not exist; use 1 or 2")));
    }
    let build = cap_terms(which, flip_last);
    let mut terms = Vec::new();
    let mut m = 0;
    // every summand at m has valuation at least 9m^2 - 9m + 2
    while m == 0 || 9 * m * m - 9 * m + 2 < order {
        for r in 0..=2 * m {
            terms.extend(build(m, r));
        }
        m += 1;
    }
    Ok(sum_terms(terms, order)?)
}

/// The double sums over `m >= 0`, `0 <= r <= 2m` in `sigma(m, r)` whose
/// products are `(-q^2;q^2)_inf (-q^3;q^6)_inf` (`which = 1`) and
/// `(-q;q^2)_inf (-q^6;q^6)_inf` (`which = 2`).
pub fn cap_sigma_lhs(which: i64, order: i64) -> Result<LaurentSeries, IdentityError> {
    cap_sigma_sum(which, false, order)
}

/// Number of summation indices in the Andrews-Gordon-Bressoud multisum.
pub fn agb_k(level: i64) -> i64 {
    1 + level / 2
}

fn check_agb(level: i64, i: i64) -> Result<(), IdentityError> {
    if level < 1 || i < 1 || i > agb_k(level) {
        return Err(IdentityError::InvalidArgument(format!(
            "need l >= 1 and 1 <= i <= 1 + floor(l/2), got l = {level}, i = {i}"
        )));
    }
    Ok(())
}

/// `sum q^{n_1^2+...+n_{k-1}^2 + n_i+...+n_{k-1}} /
/// ((q)_{n_1-n_2} ... (q)_{n_{k-2}-n_{k-1}} (q)_{n_{k-1}} (-q)_{[2|l] n_{k-1}})`
/// over `n_1 >= ... >= n_{k-1} >= 0`.
pub fn agb_lhs(level: i64, i: i64, order: i64) -> Result<LaurentSeries, IdentityError> {
    check_agb(level, i)?;
    let vars = (agb_k(level) - 1) as usize;
    if vars == 0 {
        return Ok(LaurentSeries::one(order));
    }
    let mut top = 0;
    while (top + 1) * (top + 1) < order {
        top += 1;
    }
    let mut inv = vec![LaurentSeries::one(order)];
    let mut inv_neg = vec![LaurentSeries::one(order)];
    for k in 1..=top {
        let a = inv[k as usize - 1].div_one_minus(Monomial::q(k))?;
        let b = inv_neg[k as usize - 1].div_one_minus(Monomial::neg_q(k))?;
        inv.push(a);
        inv_neg.push(b);
    }
    let even = level % 2 == 0;
    let mut acc = LaurentSeries::zero(order);
    let mut ns = Vec::with_capacity(vars);
    let mut walk = Walk { vars, i: i as usize, order, inv: &inv, inv_neg: &inv_neg, even, acc: &mut acc };
    walk.descend(&mut ns, top, 0);
    Ok(acc)
}

struct Walk<'a> {
    vars: usize,
    i: usize,
    order: i64,
    inv: &'a [LaurentSeries],
    inv_neg: &'a [LaurentSeries],
    even: bool,
    acc: &'a mut LaurentSeries,
}

impl Walk<'_> {
    /// Chooses `n_{j+1} <= bound` where `j = ns.len()`; `squares` is the
    /// running sum of squares, a lower bound for the final exponent.
    fn descend(&mut self, ns: &mut Vec<i64>, bound: i64, squares: i64) {
        if ns.len() == self.vars {
            self.emit(ns);
            return;
        }
        for n in 0..=bound {
            if squares + n * n >= self.order && n > 0 {
                break;
            }
            ns.push(n);
            self.descend(ns, n, squares + n * n);
            ns.pop();
        }
    }

    fn emit(&mut self, ns: &[i64]) {
        let squares: i64 = ns.iter().map(|n| n * n).sum();
        let linear: i64 = ns[self.i - 1..].iter().sum();
        let exp = squares + linear;
        if exp >= self.order {
            return;
        }
        let mut term = LaurentSeries::monomial(1.into(), exp, self.order);
        for w in ns.windows(2) {
            term = &term * &self.inv[(w[0] - w[1]) as usize];
        }
        let last = ns[ns.len() - 1] as usize;
        term = &term * &self.inv[last];
        if self.even {
            term = &term * &self.inv_neg[last];
        }
        *self.acc = &*self.acc + &term;
    }
}

/// `(q^i, q^{l+2-i}, q^{l+2}; q^{l+2})_inf / (q)_inf`
pub fn agb_rhs_text(level: i64, i: i64) -> Result<String, IdentityError> {
    check_agb(level, i)?;
    let m = level + 2;
    Ok(format!("(q^{i},q^{},q^{m};q^{m})_inf / (q;q)_inf", m - i))
}

pub fn agb_rhs(level: i64, i: i64, order: i64) -> Result<LaurentSeries, IdentityError> {
    eval_text(&agb_rhs_text(level, i)?, order)
}
