//! The subcommands. Each returns a report plus its text rendering; errors
//! are returned as messages and become exit code 2.

use std::fmt::Write as _;

use qrr_core::bailey::{check_level_recurrence, check_n_recurrence, check_pair, BaileyError, BaileyPair, BetaForm};
use qrr_core::dsl::{evaluate, parse};
use qrr_core::identities::{catalog, find, verify, Expectation, Params};
use qrr_core::partitions::{capparelli_row, capparelli_sides, count_difference, counts_to_series};
use qrr_core::series::{big_to_json, series_equal};
use qrr_core::suite::{all_jobs, JobResult, SuiteOrders, GROUPS};
use serde_json::{json, Value};

use crate::report::{report_line, series_json, RunReport, RunStatus};

pub struct Outcome {
    pub report: RunReport,
    pub text: String,
}

pub type CmdResult = Result<Outcome, String>;

pub fn expand(expr: &str, order: i64) -> CmdResult {
    let parsed = parse(expr).map_err(|e| e.to_string())?;
    let s = evaluate(&parsed, order).map_err(|e| e.to_string())?;
    let mut report = RunReport::new("expand").param("expr", expr).param("order", order);
    report.details.push(series_json(&s));
    let mut text = String::new();
    for (e, c) in s.terms() {
        let _ = writeln!(text, "{e} {c}");
    }
    let _ = writeln!(text, "{s}");
    Ok(Outcome { report, text })
}

pub struct VerifyArgs {
    pub id: String,
    pub level: Option<i64>,
    pub i: Option<i64>,
    pub z: Option<String>,
    pub order: Option<i64>,
}

pub fn verify_one(args: &VerifyArgs) -> CmdResult {
    let entry = find(&args.id).map_err(|e| e.to_string())?;
    let order = args.order.unwrap_or(entry.default_order);
    let mut params = Params { level: args.level, i: args.i, z: None };
    let mut report = RunReport::new("verify").param("id", entry.id).param("order", order);
    if let Some(z) = &args.z {
        params.z = Some(Params::parse_monomial(z).map_err(|e| e.to_string())?);
        report = report.param("z", z);
    }
    if let Some(l) = args.level {
        report = report.param("level", l);
    }
    if let Some(i) = args.i {
        report = report.param("i", i);
    }
    let v = verify(entry.id, &params, order).map_err(|e| e.to_string())?;
    let mut text = format!("{}: {}\n", entry.id, entry.description);
    if v.expect == Expectation::Mismatch {
        text.push_str("negative control: every comparison must report a mismatch\n");
    }
    for c in &v.checks {
        let _ = writeln!(text, "  {} = {}: {}", c.lhs, c.rhs, report_line(&c.report));
        report.details.push(serde_json::to_value(c).expect("checks serialize"));
    }
    report.status = RunStatus::from_pass(v.passed);
    let _ = writeln!(text, "{}", if v.passed { "PASS" } else { "FAIL" });
    Ok(Outcome { report, text })
}

/// Runs every suite job, in parallel when `pool` is given, and reports in
/// the fixed job order.
pub fn verify_all(order: Option<i64>, pool: Option<&rayon::ThreadPool>) -> CmdResult {
    let orders = match order {
        Some(n) => SuiteOrders::uniform(n),
        None => SuiteOrders::default(),
    };
    let jobs = all_jobs(&orders);
    let results: Vec<JobResult> = match pool {
        Some(pool) => pool.install(|| {
            use rayon::prelude::*;
            jobs.par_iter().map(|j| j.run()).collect()
        }),
        None => jobs.iter().map(|j| j.run()).collect(),
    };
    let mut report = RunReport::new("verify all");
    if let Some(n) = order {
        report = report.param("order", n);
    }
    let mut text = String::new();
    let mut any_error = false;
    let mut all_pass = true;
    for &(group, name) in GROUPS.iter() {
        let group_results: Vec<&JobResult> = results.iter().filter(|r| r.group == group).collect();
        let pass = group_results.iter().all(|r| r.passed);
        let checks: usize = group_results.iter().map(|r| r.checks.len()).sum();
        let tag = if group <= 9 { format!("{group}. ") } else { String::new() };
        let _ = writeln!(text, "[{}] {tag}{name} ({} jobs, {checks} checks)", verdict(pass), group_results.len());
        for r in &group_results {
            if let Some(e) = &r.error {
                any_error = true;
                let _ = writeln!(text, "    ERROR {}: {e}", r.label);
            } else if !r.passed {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    let detail = c.report.as_ref().map(report_line).unwrap_or_default();
                    let _ = writeln!(text, "    FAIL {}: {} {detail}", r.label, c.label);
                }
            }
        }
        all_pass &= pass;
    }
    report.details = results.iter().map(|r| serde_json::to_value(r).expect("results serialize")).collect();
    report.status = if any_error { RunStatus::Error } else { RunStatus::from_pass(all_pass) };
    let _ = writeln!(text, "{}", verdict(all_pass));
    Ok(Outcome { report, text })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub struct BaileyArgs {
    pub level: i64,
    pub i: i64,
    pub n: Option<i64>,
    pub max_n: i64,
    pub form: String,
    pub order: i64,
}

pub fn bailey_beta(args: &BaileyArgs) -> CmdResult {
    let pair = BaileyPair::new(args.level, args.i).map_err(|e| e.to_string())?;
    let form = BetaForm::from_name(&args.form).ok_or_else(|| format!("unknown form `{}`", args.form))?;
    if !form.available_at(pair.level()) {
        return Err(BaileyError::FormNotAvailable { form, level: pair.level() }.to_string());
    }
    let n = args.n.ok_or("bailey beta needs --n")?;
    let s = pair.beta(form, n, args.order).map_err(|e| e.to_string())?;
    let mut report = RunReport::new("bailey beta")
        .param("level", args.level)
        .param("i", args.i)
        .param("n", n)
        .param("form", form.name())
        .param("order", args.order);
    report.details.push(series_json(&s));
    Ok(Outcome { report, text: format!("beta_{n} for {pair} ({}):\n{s}\n", form.name()) })
}

pub fn bailey_check(args: &BaileyArgs) -> CmdResult {
    let pair = BaileyPair::new(args.level, args.i).map_err(|e| e.to_string())?;
    if args.max_n < 0 {
        return Err(format!("--max-n must be non-negative, got {}", args.max_n));
    }
    let mut report = RunReport::new("bailey check")
        .param("level", args.level)
        .param("i", args.i)
        .param("max_n", args.max_n)
        .param("order", args.order);
    let mut rows: Vec<(String, qrr_core::series::EqualityReport)> = Vec::new();
    for c in check_pair(pair, args.max_n, args.order).map_err(|e| e.to_string())? {
        rows.push((format!("n={} {}", c.n, c.form), c.report));
    }
    for m in (1..).take_while(|m| 3 * m < args.max_n) {
        let r = check_level_recurrence(args.level, m, args.order).map_err(|e| e.to_string())?;
        rows.push((format!("level recurrence m={m}"), r));
    }
    if args.level == 3 && args.i == 1 {
        for n in 2..=args.max_n {
            let r = check_n_recurrence(n, args.order).map_err(|e| e.to_string())?;
            rows.push((format!("recurrence in n, n={n}"), r));
        }
    }
    let mut text = String::new();
    let mut pass = true;
    for (label, r) in &rows {
        pass &= r.is_equal();
        let _ = writeln!(text, "{pair} {label}: {}", report_line(r));
        report.details.push(json!({ "check": label, "report": r }));
    }
    report.status = RunStatus::from_pass(pass);
    let _ = writeln!(text, "{}", verdict(pass));
    Ok(Outcome { report, text })
}

pub fn capparelli(which: i64, max_n: i64, order: Option<i64>) -> CmdResult {
    let (rule, _) = capparelli_sides(which).ok_or_else(|| format!("--which must be 1 or 2, got {which}"))?;
    if max_n < 0 {
        return Err(format!("--max-n must be non-negative, got {max_n}"));
    }
    let order = order.unwrap_or(max_n);
    if order < 1 {
        return Err(format!("--order must be positive, got {order}"));
    }
    let mut report = RunReport::new("capparelli").param("which", which).param("max_n", max_n).param("order", order);
    let header = if which == 1 { "n c1 c2 c3" } else { "n d1 d2" };
    let mut text = format!("{header} equal\n");
    let mut pass = true;
    let mut table = Vec::new();
    for n in 0..=max_n {
        let row = capparelli_row(which, n).expect("which already validated");
        pass &= row.equal;
        let counts: Vec<String> = row.counts.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(text, "{n} {} {}", counts.join(" "), row.equal);
        table.push(json!({
            "n": n,
            "counts": row.counts.iter().map(|c| Value::Number(big_to_json(c))).collect::<Vec<_>>(),
            "equal": row.equal,
        }));
    }
    report.details.push(json!({ "table": table }));
    let product = if which == 1 { "(-q^2;q^2)_inf * (-q^3;q^6)_inf" } else { "(-q;q^2)_inf * (-q^6;q^6)_inf" };
    let counted = counts_to_series(|n| count_difference(&rule, n), order);
    let prod = evaluate(&parse(product).expect("fixed product parses"), order).map_err(|e| e.to_string())?;
    let r = series_equal(&counted, &prod).map_err(|e| e.to_string())?;
    pass &= r.is_equal();
    let _ = writeln!(text, "generating function vs {product}: {}", report_line(&r));
    report.details.push(json!({ "generating_function": product, "report": r }));
    report.status = RunStatus::from_pass(pass);
    let _ = writeln!(text, "{}", verdict(pass));
    Ok(Outcome { report, text })
}

/// The catalog as a JSON array, or one text block per entry.
pub fn catalog_listing() -> (Value, String) {
    let entries = serde_json::to_value(catalog()).expect("catalog serializes");
    let mut text = String::new();
    for e in catalog() {
        let _ = writeln!(
            text,
            "{}\n  {}\n  parameters: {}\n  product side: {}\n  default order: {}{}",
            e.id,
            e.description,
            if e.parameters.is_empty() { "none".to_string() } else { e.parameters.join(", ") },
            e.rhs,
            e.default_order,
            if e.expect == Expectation::Mismatch { "\n  expected to mismatch" } else { "" },
        );
    }
    (entries, text)
}
