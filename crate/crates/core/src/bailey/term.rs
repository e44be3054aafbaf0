//! Hypergeometric-style terms: a signed power of `q` times a ratio of
//! Pochhammer symbols and polynomials.

use crate::series::{pochhammer_fin, pochhammer_poly, to_order, LaurentSeries, Monomial, SeriesError, SparsePoly};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    coeff: i64,
    exp: i64,
    num: Vec<(Monomial, i64, i64)>,
    den: Vec<(Monomial, i64, i64)>,
    num_poly: SparsePoly,
    den_poly: Vec<SparsePoly>,
}

impl Term {
    /// `coeff * q^exp`
    pub(crate) fn new(coeff: i64, exp: i64) -> Self {
        Term { coeff, exp, num: Vec::new(), den: Vec::new(), num_poly: SparsePoly::one(), den_poly: Vec::new() }
    }

    /// `(-1)^k q^exp`
    pub(crate) fn signed(k: i64, exp: i64) -> Self {
        Term::new(if k.rem_euclid(2) == 0 { 1 } else { -1 }, exp)
    }

    /// Multiplies by `q^e`.
    pub(crate) fn shifted(mut self, e: i64) -> Self {
        self.exp += e;
        self
    }

    pub(crate) fn negated(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }

    /// Multiplies by `(a; q^base)_n`.
    pub(crate) fn times(mut self, a: Monomial, base: i64, n: i64) -> Self {
        self.num.push((a, base, n));
        self
    }

    /// Divides by `(a; q^base)_n`.
    pub(crate) fn over(mut self, a: Monomial, base: i64, n: i64) -> Self {
        self.den.push((a, base, n));
        self
    }

    pub(crate) fn times_poly(mut self, p: &SparsePoly) -> Self {
        self.num_poly = &self.num_poly * p;
        self
    }

    /// Divides by `p`, whose lowest coefficient must be `±1`.
    pub(crate) fn over_poly(mut self, p: SparsePoly) -> Self {
        self.den_poly.push(p);
        self
    }

    fn eval_at(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        let mut head = self.num_poly.shift(self.exp).scale(&self.coeff.into());
        let mut neg_num = Vec::new();
        for &(a, b, n) in &self.num {
            if n >= 0 {
                head = &head * &pochhammer_poly(a, b, n);
            } else {
                neg_num.push((a, b, n));
            }
        }
        let mut s = LaurentSeries::from_poly(&head, order);
        for (a, b, n) in neg_num {
            s = &s * &pochhammer_fin(a, b, n, order)?;
        }
        for &(a, b, n) in &self.den {
            if n >= 0 {
                for j in 0..n {
                    s = s.div_one_minus(a.shift(b * j))?;
                }
            } else {
                // 1/(a;q^b)_n = (a q^{bn};q^b)_{-n} for n < 0
                s = &s * &LaurentSeries::from_poly(&pochhammer_poly(a.shift(b * n), b, -n), order);
            }
        }
        for p in &self.den_poly {
            s = s.div_exact(&LaurentSeries::from_poly(p, order + p.max_exp().unwrap_or(0).abs() + 1))?;
        }
        Ok(s)
    }

    pub(crate) fn eval(&self, order: i64) -> Result<LaurentSeries, SeriesError> {
        to_order(order, |work| self.eval_at(work))
    }
}

/// Sum of terms, each expanded to `order`.
pub(crate) fn sum_terms<I>(terms: I, order: i64) -> Result<LaurentSeries, SeriesError>
where
    I: IntoIterator<Item = Term>,
{
    let mut acc = LaurentSeries::zero(order);
    for t in terms {
        acc = &acc + &t.eval(order)?;
    }
    Ok(acc)
}
