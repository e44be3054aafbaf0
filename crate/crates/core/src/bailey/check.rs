use serde::Serialize;

use super::beta::{
    beta_closed, beta_definitional, beta_from_alpha, beta_i2_from_i1, beta_residue_closed, even_pair_alpha,
    even_pair_beta, unit_pair_alpha, unit_pair_beta,
};
use super::multisum::{beta_multisum, beta_sigma, cap_beta_3m_plus_1};
use super::recurrence::beta_3m_minus_1;
use super::{BaileyError, BaileyPair, BetaForm};
use crate::series::{series_equal, EqualityReport, LaurentSeries, SeriesError};

/// One representation of `beta_n` compared against the defining sum.
#[derive(Clone, Debug, Serialize)]
pub struct RepresentationCheck {
    pub pair: String,
    pub n: i64,
    pub form: String,
    pub report: EqualityReport,
}

/// Every representation the pair has for each `n <= max_n`.
pub fn check_pair(pair: BaileyPair, max_n: i64, order: i64) -> Result<Vec<RepresentationCheck>, BaileyError> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let oracle = beta_definitional(pair, n, order)?;
        let mut reps: Vec<(&str, LaurentSeries)> = Vec::new();
        if pair.module_index() == 2 {
            reps.push(("i2-shift", beta_i2_from_i1(pair, n, order)?));
        }
        if BetaForm::Closed.available_at(pair.level()) {
            reps.push(("closed", beta_closed(pair, n, order)?));
            if n % 3 != 2 {
                reps.push(("closed-residue", beta_residue_closed(pair, n, order)?));
            }
        }
        if BetaForm::MultisumA.available_at(pair.level()) && n % 3 != 2 {
            reps.push(("multisum-a", beta_multisum(pair, BetaForm::MultisumA, n, order)?));
            reps.push(("multisum-b", beta_multisum(pair, BetaForm::MultisumB, n, order)?));
        }
        if pair.level() == 3 {
            reps.push(("sigma", beta_sigma(pair, n, order)?));
            if n % 3 == 1 {
                let s = cap_beta_3m_plus_1(n / 3, order + n)?;
                let s = if pair.module_index() == 2 { s.shift(-n) } else { s };
                reps.push(("sigma-3m+1", s.truncate(order)));
            }
        }
        if n % 3 == 2 {
            reps.push(("recurrence", beta_3m_minus_1(pair, (n + 1) / 3, order)?));
        }
        for (form, s) in reps {
            out.push(RepresentationCheck {
                pair: pair.to_string(),
                n,
                form: form.into(),
                report: series_equal(&s, &oracle)?,
            });
        }
    }
    Ok(out)
}

/// The unit pair and the even-level pair against their defining sums.
pub fn check_special_pairs(max_n: i64, order: i64) -> Result<Vec<RepresentationCheck>, SeriesError> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let unit = beta_from_alpha(|k| Ok::<_, SeriesError>(unit_pair_alpha(k)), n, order)?;
        out.push(RepresentationCheck {
            pair: "unit".into(),
            n,
            form: "stated".into(),
            report: series_equal(&unit_pair_beta(n, order), &unit)?,
        });
        let even = beta_from_alpha(|k| Ok::<_, SeriesError>(even_pair_alpha(k)), n, order)?;
        out.push(RepresentationCheck {
            pair: "even".into(),
            n,
            form: "stated".into(),
            report: series_equal(&even_pair_beta(n, order)?, &even)?,
        });
    }
    Ok(out)
}
