//! The full verification suite, split into independent jobs so callers can
//! run them in parallel and still report in a fixed order.

use serde::Serialize;

use crate::bailey::{check_level_recurrence, check_n_recurrence, check_pair, check_special_pairs, BaileyPair};
use crate::identities::{agb_k, cap_sigma_lhs, errata, eval_text, theta_arguments, verify, Params, Verification};
use crate::partitions::{capparelli_row, count_difference, counts_to_series, DifferenceRule};
use crate::series::{series_equal, EqualityReport};

/// Orders used by each group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOrders {
    pub theta: i64,
    pub bailey: i64,
    pub module: i64,
    pub capparelli_sums: i64,
    pub agb: i64,
    pub partitions: i64,
    pub errata: i64,
}

impl Default for SuiteOrders {
    fn default() -> Self {
        SuiteOrders { theta: 200, bailey: 80, module: 120, capparelli_sums: 100, agb: 100, partitions: 60, errata: 40 }
    }
}

impl SuiteOrders {
    /// Every order replaced by `order`; the partition range stays at its default.
    pub fn uniform(order: i64) -> Self {
        SuiteOrders {
            theta: order,
            bailey: order,
            module: order,
            capparelli_sums: order,
            agb: order,
            partitions: SuiteOrders::default().partitions,
            errata: order,
        }
    }
}

/// Group labels, indexed by the group number carried by each job.
pub const GROUPS: [(u8, &str); 9] = [
    (1, "triple and quintuple products"),
    (2, "Bailey pair representations"),
    (3, "recurrences"),
    (4, "module identities"),
    (5, "level 3 sigma sums"),
    (6, "Andrews-Gordon-Bressoud"),
    (7, "Capparelli enumeration"),
    (8, "negative control"),
    (10, "typeset formulas confirmed as misprints"),
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<EqualityReport>,
}

impl SuiteCheck {
    fn from_report(label: String, report: EqualityReport) -> Self {
        SuiteCheck { label, passed: report.is_equal(), report: Some(report) }
    }

    fn from_verification(v: Verification) -> Vec<SuiteCheck> {
        let params: Vec<String> = v.parameters.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let passed_all = v.passed;
        v.checks
            .into_iter()
            .map(|c| SuiteCheck {
                label: format!("{} {} : {} = {}", v.id, params.join(" "), c.lhs, c.rhs),
                passed: passed_all,
                report: Some(c.report),
            })
            .collect()
    }
}

type RunFn = Box<dyn Fn() -> Result<Vec<SuiteCheck>, String> + Send + Sync>;

pub struct Job {
    pub group: u8,
    pub label: String,
    run: RunFn,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobResult {
    pub group: u8,
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<SuiteCheck>,
}

impl Job {
    fn new<F>(group: u8, label: impl Into<String>, f: F) -> Self
    where
        F: Fn() -> Result<Vec<SuiteCheck>, String> + Send + Sync + 'static,
    {
        Job { group, label: label.into(), run: Box::new(f) }
    }

    pub fn run(&self) -> JobResult {
        match (self.run)() {
            Ok(checks) => JobResult {
                group: self.group,
                label: self.label.clone(),
                passed: !checks.is_empty() && checks.iter().all(|c| c.passed),
                error: None,
                checks,
            },
            Err(e) => JobResult {
                group: self.group,
                label: self.label.clone(),
                passed: false,
                error: Some(e),
                checks: vec![],
            },
        }
    }
}

fn verification(id: &'static str, params: Params, order: i64) -> Result<Vec<SuiteCheck>, String> {
    verify(id, &params, order).map(SuiteCheck::from_verification).map_err(|e| e.to_string())
}

fn theta_jobs(order: i64) -> Vec<Job> {
    let mut jobs = Vec::new();
    for id in ["jtp", "qpi"] {
        for z in theta_arguments() {
            jobs.push(Job::new(1, format!("{id} z={z}"), move || verification(id, Params::z(z), order)));
        }
    }
    jobs
}

fn bailey_jobs(order: i64) -> Vec<Job> {
    let mut jobs = vec![Job::new(2, "unit and even pairs", move || {
        let checks = check_special_pairs(24, order).map_err(|e| e.to_string())?;
        Ok(checks
            .into_iter()
            .map(|c| SuiteCheck::from_report(format!("{} pair n={}", c.pair, c.n), c.report))
            .collect())
    })];
    for pair in BaileyPair::all() {
        jobs.push(Job::new(2, format!("pair {pair} n<=24"), move || {
            let checks = check_pair(pair, 24, order).map_err(|e| e.to_string())?;
            Ok(checks
                .into_iter()
                .map(|c| SuiteCheck::from_report(format!("{} n={} {}", c.pair, c.n, c.form), c.report))
                .collect())
        }));
    }
    jobs
}

fn recurrence_jobs(order: i64) -> Vec<Job> {
    let mut jobs = vec![Job::new(3, "level 3 recurrence in n, 2<=n<=24", move || {
        (2..=24)
            .map(|n| {
                check_n_recurrence(n, order)
                    .map(|r| SuiteCheck::from_report(format!("n={n}"), r))
                    .map_err(|e| e.to_string())
            })
            .collect()
    })];
    for level in 3..=9 {
        jobs.push(Job::new(3, format!("level {level} recurrence, 1<=m<=8"), move || {
            (1..=8)
                .map(|m| {
                    check_level_recurrence(level, m, order)
                        .map(|r| SuiteCheck::from_report(format!("level {level} m={m}"), r))
                        .map_err(|e| e.to_string())
                })
                .collect()
        }));
    }
    jobs
}

fn module_jobs(order: i64) -> Vec<Job> {
    BaileyPair::all()
        .map(|pair| {
            Job::new(4, format!("module {pair}"), move || {
                verification("module", Params::level_i(pair.level(), pair.module_index()), order)
            })
        })
        .collect()
}

fn cap_sum_jobs(order: i64) -> Vec<Job> {
    (1..=2)
        .map(|i| Job::new(5, format!("cap-sigma i={i}"), move || verification("cap-sigma", Params::i(i), order)))
        .collect()
}

fn agb_jobs(order: i64) -> Vec<Job> {
    let mut jobs = Vec::new();
    for level in 1..=7 {
        for i in 1..=agb_k(level) {
            jobs.push(Job::new(6, format!("agb l={level} i={i}"), move || {
                verification("agb", Params::level_i(level, i), order)
            }));
        }
    }
    jobs
}

fn partition_jobs(max: i64) -> Vec<Job> {
    let mut jobs = Vec::new();
    for which in 1..=2 {
        jobs.push(Job::new(7, format!("Capparelli {which} counts, 0<=n<={max}"), move || {
            Ok((0..=max)
                .map(|n| {
                    let row = capparelli_row(which, n).expect("which is 1 or 2");
                    let counts: Vec<String> = row.counts.iter().map(|c| c.to_string()).collect();
                    SuiteCheck { label: format!("n={n} counts {}", counts.join(" ")), passed: row.equal, report: None }
                })
                .collect())
        }));
        jobs.push(Job::new(7, format!("Capparelli {which} generating function below q^{max}"), move || {
            let rule =
                if which == 1 { DifferenceRule::capparelli_first() } else { DifferenceRule::capparelli_second() };
            let counted = counts_to_series(|n| count_difference(&rule, n), max);
            let product = if which == 1 { "(-q^2;q^2)_inf * (-q^3;q^6)_inf" } else { "(-q;q^2)_inf * (-q^6;q^6)_inf" };
            let mut out = Vec::new();
            let sums = cap_sigma_lhs(which, max).map_err(|e| e.to_string())?;
            let prod = eval_text(product, max).map_err(|e| e.to_string())?;
            for (label, s) in [("sigma double sum", sums), (product, prod)] {
                let r = series_equal(&counted, &s).map_err(|e| e.to_string())?;
                out.push(SuiteCheck::from_report(format!("counts vs {label}"), r));
            }
            Ok(out)
        }));
    }
    jobs
}

fn control_jobs(order: i64) -> Vec<Job> {
    [(3, 1), (5, 2)]
        .into_iter()
        .map(|(l, i)| {
            Job::new(8, format!("control l={l} i={i}"), move || verification("control", Params::level_i(l, i), order))
        })
        .collect()
}

fn errata_jobs(order: i64) -> Vec<Job> {
    errata()
        .iter()
        .map(|e| {
            let e = *e;
            Job::new(10, format!("erratum {}", e.id), move || {
                let r = e.check(order).map_err(|x| x.to_string())?;
                Ok(vec![SuiteCheck {
                    label: format!("{}: printed form fails, corrected form holds", r.description),
                    passed: r.confirmed,
                    report: Some(r.as_printed),
                }])
            })
        })
        .collect()
}

/// Jobs for one group, or an empty list for an unknown group.
pub fn group_jobs(group: u8, orders: &SuiteOrders) -> Vec<Job> {
    match group {
        1 => theta_jobs(orders.theta),
        2 => bailey_jobs(orders.bailey),
        3 => recurrence_jobs(orders.bailey),
        4 => module_jobs(orders.module),
        5 => cap_sum_jobs(orders.capparelli_sums),
        6 => agb_jobs(orders.agb),
        7 => partition_jobs(orders.partitions),
        8 => control_jobs(orders.agb),
        10 => errata_jobs(orders.errata),
        _ => Vec::new(),
    }
}

/// Every job, in reporting order.
pub fn all_jobs(orders: &SuiteOrders) -> Vec<Job> {
    GROUPS.iter().flat_map(|&(g, _)| group_jobs(g, orders)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let orders =
            SuiteOrders { theta: 30, bailey: 20, module: 20, capparelli_sums: 20, agb: 20, partitions: 20, errata: 30 };
        for job in all_jobs(&orders) {
            let r = job.run();
            assert!(
                r.passed,
                "{}: {:?} {:?}",
                r.label,
                r.error,
                r.checks.iter().find(|c| !c.passed).or(r.checks.first())
            );
        }
    }

    #[test]
    fn unknown_group_is_empty() {
        assert!(group_jobs(9, &SuiteOrders::default()).is_empty());
    }
}
