//! Bailey pairs relative to `a = 1` for the `A_2^(2)` standard modules at
//! levels 3 through 9.
//!
//! [`beta_definitional`] expands the defining sum
//! `beta_n = sum_s alpha_s / ((q)_{n-s} (q)_{n+s})` and is the reference every
//! other representation is checked against.

mod beta;
mod check;
mod multisum;
mod recurrence;
pub(crate) mod term;

use serde::Serialize;
use thiserror::Error;

use crate::series::{LaurentSeries, SeriesError, SparsePoly};

pub use beta::{
    beta, beta_closed, beta_definitional, beta_from_alpha, beta_i2_from_i1, beta_residue_closed, even_pair_alpha,
    even_pair_beta, unit_pair_alpha, unit_pair_beta,
};
pub use check::{check_pair, check_special_pairs, RepresentationCheck};
pub use multisum::{beta_multisum, beta_sigma, cap_beta_3m_plus_1, sigma};
pub(crate) use multisum::{sigma_minus_term, sigma_plus_term, sigma_term};
pub use recurrence::{beta_3m_minus_1, check_level_recurrence, check_n_recurrence, level_recurrence, Recurrence};

pub const MIN_LEVEL: i64 = 3;
pub const MAX_LEVEL: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BaileyError {
    #[error("level {0} is outside 3..=9")]
    InvalidLevel(i64),
    #[error("module index {0} must be 1 or 2")]
    InvalidModuleIndex(i64),
    #[error("the {form} form is not available at level {level}")]
    FormNotAvailable { form: BetaForm, level: i64 },
    #[error("the {form} form does not cover n = {n}")]
    InvalidResidue { form: BetaForm, n: i64 },
    #[error("alpha exponent {numerator}/2 is not an integer")]
    NonIntegralExponent { numerator: i64 },
    #[error("index {0} must be nonnegative")]
    NegativeIndex(i64),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which representation of `beta_n` to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BetaForm {
    Definitional,
    /// Single-term products, levels 5 to 7.
    Closed,
    /// Sums over `-m <= r <= m` with a Gaussian binomial in `q^3`.
    MultisumA,
    /// Sums over `0 <= r <= 2m`.
    MultisumB,
    /// `beta_{3m-1}` from `beta_{3m}` and `beta_{3m+1}` by the level's
    /// three-term relation.
    Recurrence,
    /// Level 3 sums built from `sigma(m, r)`.
    Sigma,
}

impl BetaForm {
    pub const ALL: [BetaForm; 6] = [
        BetaForm::Definitional,
        BetaForm::Closed,
        BetaForm::MultisumA,
        BetaForm::MultisumB,
        BetaForm::Recurrence,
        BetaForm::Sigma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BetaForm::Definitional => "definitional",
            BetaForm::Closed => "closed",
            BetaForm::MultisumA => "multisum-a",
            BetaForm::MultisumB => "multisum-b",
            BetaForm::Recurrence => "recurrence",
            BetaForm::Sigma => "sigma",
        }
    }

    pub fn from_name(s: &str) -> Option<BetaForm> {
        BetaForm::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn available_at(self, level: i64) -> bool {
        match self {
            BetaForm::Definitional | BetaForm::Recurrence => true,
            BetaForm::Closed => (5..=7).contains(&level),
            BetaForm::MultisumA | BetaForm::MultisumB => matches!(level, 3 | 4 | 8 | 9),
            BetaForm::Sigma => level == 3,
        }
    }
}

impl std::fmt::Display for BetaForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BaileyPair {
    level: i64,
    module_index: i64,
}

impl BaileyPair {
    /// Validates the indices and that every alpha exponent is integral.
    pub fn new(level: i64, module_index: i64) -> Result<Self, BaileyError> {
        if !(MIN_LEVEL..=MAX_LEVEL).contains(&level) {
            return Err(BaileyError::InvalidLevel(level));
        }
        if !(1..=2).contains(&module_index) {
            return Err(BaileyError::InvalidModuleIndex(module_index));
        }
        let pair = BaileyPair { level, module_index };
        for n in 0..6 {
            pair.alpha(n)?;
        }
        Ok(pair)
    }

    pub fn level(self) -> i64 {
        self.level
    }

    pub fn module_index(self) -> i64 {
        self.module_index
    }

    /// The same level with module index 1.
    pub fn first(self) -> BaileyPair {
        BaileyPair { level: self.level, module_index: 1 }
    }

    pub fn all() -> impl Iterator<Item = BaileyPair> {
        (MIN_LEVEL..=MAX_LEVEL).flat_map(|l| (1..=2).map(move |i| BaileyPair { level: l, module_index: i }))
    }

    /// `alpha_n` as a signed sum of powers of `q`.
    pub fn alpha(self, n: i64) -> Result<SparsePoly, BaileyError> {
        if n < 0 {
            return Err(BaileyError::NegativeIndex(n));
        }
        if n == 0 {
            return Ok(SparsePoly::one());
        }
        let l = self.level;
        let c = l - 3;
        let poly = match (self.module_index, n.rem_euclid(3)) {
            (1, 0) => {
                let r = n / 3;
                SparsePoly::term(1, half(c * (3 * r * r - r))?) + SparsePoly::term(1, half(c * (3 * r * r + r))?)
            }
            (1, 1) => {
                let r = (n - 1) / 3;
                SparsePoly::term(-1, half(c * (3 * r * r + r))?)
            }
            (1, _) => {
                let r = (n + 1) / 3;
                SparsePoly::term(-1, half(c * (3 * r * r - r))?)
            }
            (_, 0) => {
                let r = n / 3;
                SparsePoly::term(1, half(3 * c * r * r - (9 - l) * r)?)
                    + SparsePoly::term(1, half(3 * c * r * r + (9 - l) * r)?)
            }
            (_, 1) => {
                let r = (n - 1) / 3;
                SparsePoly::term(-1, half(3 * c * r * r + (l + 3) * r)? + 1)
            }
            (_, _) => {
                let r = (n + 1) / 3;
                SparsePoly::term(-1, half(3 * c * r * r - (l + 3) * r)? + 1)
            }
        };
        Ok(poly)
    }

    pub fn beta(self, form: BetaForm, n: i64, order: i64) -> Result<LaurentSeries, BaileyError> {
        beta(self, form, n, order)
    }
}

impl std::fmt::Display for BaileyPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.level, self.module_index)
    }
}

pub(crate) fn half(numerator: i64) -> Result<i64, BaileyError> {
    if numerator % 2 != 0 {
        return Err(BaileyError::NonIntegralExponent { numerator });
    }
    Ok(numerator / 2)
}
