//! The table of verifiable identities.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    a22_numerator_text, a22_product_text, agb_lhs, agb_rhs_text, alpha_theta, cap_sigma_lhs, eval_text, grouped_lhs,
    wbl_lhs, wbl_rhs_from_alpha, IdentityError,
};
use crate::bailey::{beta_definitional, BaileyPair};
use crate::dsl::{parse, Factor};
use crate::series::{jtp_sum, qpi_lhs, series_equal, EqualityReport, LaurentSeries, Monomial, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Equal,
    /// A negative control: every comparison must fail.
    Mismatch,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub parameters: &'static [&'static str],
    /// Product side in the expression language, with the parameters left symbolic.
    pub rhs: &'static str,
    pub default_order: i64,
    pub expect: Expectation,
}

const CATALOG: [CatalogEntry; 7] = [
    CatalogEntry {
        id: "jtp",
        description: "Jacobi triple product: sum over n of (-1)^n z^n q^(n^2)",
        parameters: &["z"],
        rhs: "(q/z, z*q, q^2; q^2)_inf",
        default_order: 200,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "qpi",
        description: "quintuple product: (-q z^3, -q^2 z^-3, q^3; q^3)_inf - z (-q z^-3, -q^2 z^3, q^3; q^3)_inf",
        parameters: &["z"],
        rhs: "(q/z, z, q; q)_inf * (q/z^2, q*z^2; q^2)_inf",
        default_order: 200,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "agb",
        description: "Andrews-Gordon-Bressoud multisum with k = 1 + floor(l/2) summation indices",
        parameters: &["level", "i"],
        rhs: "(q^i, q^(l+2-i), q^(l+2); q^(l+2))_inf / (q;q)_inf",
        default_order: 100,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "module",
        description: "A2(2) level l module i: weak Bailey lemma sums, alpha side and grouped beta sum against the quintuple product character",
        parameters: &["level", "i"],
        rhs: "(q^i, q^(l+3-i), q^(l+3); q^(l+3))_inf * (q^(l+3-2i), q^(l+2i+3); q^(2l+6))_inf / (q;q)_inf",
        default_order: 120,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "cap-sigma",
        description: "Capparelli double sums in sigma(m, r); i selects the first or second identity",
        parameters: &["i"],
        rhs: "(-q^2;q^2)_inf * (-q^3;q^6)_inf for i = 1, (-q;q^2)_inf * (-q^6;q^6)_inf for i = 2",
        default_order: 100,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "alpha-theta",
        description: "sum over n of q^(n^2) alpha_n for the level l, module i pair as a theta product",
        parameters: &["level", "i"],
        rhs: "(q^i, q^(l+3-i), q^(l+3); q^(l+3))_inf * (q^(l+3-2i), q^(l+2i+3); q^(2l+6))_inf",
        default_order: 120,
        expect: Expectation::Equal,
    },
    CatalogEntry {
        id: "control",
        description: "negative control: the Andrews-Gordon-Bressoud sum against a product with q^(l+2) changed to q^(l+1)",
        parameters: &["level", "i"],
        rhs: "(q^i, q^(l+2-i), q^(l+1); q^(l+2))_inf / (q;q)_inf",
        default_order: 100,
        expect: Expectation::Mismatch,
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn find(id: &str) -> Result<&'static CatalogEntry, IdentityError> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub level: Option<i64>,
    pub i: Option<i64>,
    pub z: Option<Monomial>,
}

impl Params {
    pub fn level_i(level: i64, i: i64) -> Self {
        Params { level: Some(level), i: Some(i), z: None }
    }

    pub fn z(z: Monomial) -> Self {
        Params { z: Some(z), ..Params::default() }
    }

    pub fn i(i: i64) -> Self {
        Params { i: Some(i), ..Params::default() }
    }

    /// Parses `q^k`, `-q^k`, `1` or `-1`.
    pub fn parse_monomial(text: &str) -> Result<Monomial, IdentityError> {
        let e = parse(text)?;
        match e.factors.as_slice() {
            [Factor::Mono(m)] => Ok(*m),
            _ => Err(IdentityError::InvalidArgument(format!("`{text}` is not a single monomial"))),
        }
    }

    fn need(&self, v: Option<i64>, name: &str) -> Result<i64, IdentityError> {
        v.ok_or_else(|| IdentityError::InvalidArgument(format!("missing parameter --{name}")))
    }

    fn as_map(&self) -> BTreeMap<&'static str, String> {
        let mut m = BTreeMap::new();
        if let Some(l) = self.level {
            m.insert("level", l.to_string());
        }
        if let Some(i) = self.i {
            m.insert("i", i.to_string());
        }
        if let Some(z) = self.z {
            m.insert("z", z.to_string());
        }
        m
    }
}

/// One side-by-side comparison inside a verification.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub lhs: String,
    pub rhs: String,
    pub report: EqualityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub id: &'static str,
    pub parameters: BTreeMap<&'static str, String>,
    pub order: i64,
    pub expect: Expectation,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn check(lhs: &str, rhs: &str, a: &LaurentSeries, b: &LaurentSeries) -> Result<Check, IdentityError> {
    Ok(Check { lhs: lhs.to_string(), rhs: rhs.to_string(), report: series_equal(a, b)? })
}

fn jtp_text(z: Monomial) -> String {
    format!("({},{},q^2;q^2)_inf", z.recip().shift(1), z.shift(1))
}

fn qpi_text(z: Monomial) -> String {
    let z2 = z.pow(2);
    format!("({},{},q;q)_inf * ({},{};q^2)_inf", z.recip().shift(1), z, z2.recip().shift(1), z2.shift(1))
}

fn pair_of(p: &Params) -> Result<BaileyPair, IdentityError> {
    Ok(BaileyPair::new(p.need(p.level, "level")?, p.need(p.i, "i")?)?)
}

/// Runs the catalog entry `id`.
pub fn verify(id: &str, params: &Params, order: i64) -> Result<Verification, IdentityError> {
    let entry = find(id)?;
    if order < 1 {
        return Err(IdentityError::InvalidArgument(format!("order must be positive, got {order}")));
    }
    let mut checks = Vec::new();
    match entry.id {
        "jtp" | "qpi" => {
            let z = params.z.ok_or_else(|| IdentityError::InvalidArgument("missing parameter --z".into()))?;
            let (lhs, rhs) =
                if entry.id == "jtp" { (jtp_sum(z, order), jtp_text(z)) } else { (qpi_lhs(z, order)?, qpi_text(z)) };
            checks.push(check(entry.id, &rhs, &lhs, &eval_text(&rhs, order)?)?);
        }
        "agb" | "control" => {
            let level = params.need(params.level, "level")?;
            let i = params.need(params.i, "i")?;
            let lhs = agb_lhs(level, i, order)?;
            let rhs = if entry.id == "agb" {
                agb_rhs_text(level, i)?
            } else {
                agb_rhs_text(level, i)?;
                let m = level + 2;
                format!("(q^{i},q^{},q^{};q^{m})_inf / (q;q)_inf", m - i, level + 1)
            };
            checks.push(check("agb multisum", &rhs, &lhs, &eval_text(&rhs, order)?)?);
        }
        "module" => {
            let pair = pair_of(params)?;
            let rhs = a22_product_text(pair.level(), pair.module_index())?;
            let prod = eval_text(&rhs, order)?;
            let wbl = wbl_lhs(|n, o| beta_definitional(pair, n, o), order)?;
            checks.push(check("sum q^(n^2) beta_n", &rhs, &wbl, &prod)?);
            let alpha = wbl_rhs_from_alpha(|n| pair.alpha(n), order)?;
            checks.push(check("sum q^(n^2) alpha_n / (q;q)_inf", &rhs, &alpha, &prod)?);
            let grouped = grouped_lhs(pair, order)?;
            checks.push(check("grouped beta sum", &rhs, &grouped, &prod)?);
        }
        "cap-sigma" => {
            let which = params.need(params.i, "i")?;
            let lhs = cap_sigma_lhs(which, order)?;
            let mut renderings = vec![a22_product_text(3, which)?];
            if which == 1 {
                renderings.push("(q^2,q^3,q^9,q^10;q^12)_inf^-1".into());
                renderings.push("(-q^2;q^2)_inf * (-q^3;q^6)_inf".into());
            } else {
                renderings.push("(-q;q^2)_inf * (-q^6;q^6)_inf".into());
                // distinct parts not congruent to +-2 mod 6
                renderings.push("(-q,-q^3,-q^5,-q^6;q^6)_inf".into());
            }
            for rhs in renderings {
                checks.push(check("sigma double sum", &rhs, &lhs, &eval_text(&rhs, order)?)?);
            }
        }
        "alpha-theta" => {
            let pair = pair_of(params)?;
            let rhs = a22_numerator_text(pair.level(), pair.module_index())?;
            let lhs = alpha_theta(pair, order)?;
            checks.push(check("sum q^(n^2) alpha_n", &rhs, &lhs, &eval_text(&rhs, order)?)?);
        }
        other => unreachable!("catalog entry {other} has no verifier"),
    }
    let passed = match entry.expect {
        Expectation::Equal => checks.iter().all(|c| c.report.is_equal()),
        Expectation::Mismatch => checks.iter().all(|c| c.report.first_bad_exp.is_some()),
    };
    Ok(Verification { id: entry.id, parameters: params.as_map(), order, expect: entry.expect, checks, passed })
}

/// `+-q^e` for `1 <= e <= 4`.
pub fn theta_arguments() -> Vec<Monomial> {
    (1..=4).flat_map(|e| [Monomial::new(Sign::Plus, e), Monomial::new(Sign::Minus, e)]).collect()
}
