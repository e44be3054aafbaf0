//! Partition counts for the two Capparelli identities: difference-condition
//! partitions by exhaustive descent, congruence-class partitions by dynamic
//! programming (with a descent counter as a second opinion).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::series::LaurentSeries;

/// Constraint on a gap between adjacent parts: the gap is allowed only when
/// the larger part lies in one of `residues` mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapCondition {
    pub gap: i64,
    pub modulus: i64,
    pub residues: Vec<i64>,
}

/// Partitions into parts avoiding `forbidden_parts`, with adjacent parts at
/// least `min_gap` apart and the listed gaps further restricted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferenceRule {
    pub forbidden_parts: Vec<i64>,
    pub min_gap: i64,
    pub gap_exceptions: Vec<GapCondition>,
}

impl DifferenceRule {
    fn capparelli(forbidden: i64) -> Self {
        DifferenceRule {
            forbidden_parts: vec![forbidden],
            min_gap: 2,
            gap_exceptions: vec![
                GapCondition { gap: 2, modulus: 3, residues: vec![1] },
                GapCondition { gap: 3, modulus: 3, residues: vec![0] },
            ],
        }
    }

    /// The conditions defining `c_1`: no part 1.
    pub fn capparelli_first() -> Self {
        Self::capparelli(1)
    }

    /// The conditions defining `d_1`: no part 2.
    pub fn capparelli_second() -> Self {
        Self::capparelli(2)
    }

    pub fn allows_part(&self, part: i64) -> bool {
        part >= 1 && !self.forbidden_parts.contains(&part)
    }

    /// Whether `larger` may directly precede `smaller`.
    pub fn allows_pair(&self, larger: i64, smaller: i64) -> bool {
        let gap = larger - smaller;
        if gap < self.min_gap {
            return false;
        }
        match self.gap_exceptions.iter().find(|c| c.gap == gap) {
            Some(c) => c.residues.contains(&larger.rem_euclid(c.modulus)),
            None => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceClass {
    pub modulus: i64,
    pub allowed_residues: Vec<i64>,
    pub distinct: bool,
}

impl CongruenceClass {
    /// Distinct parts not congruent to +-1 mod 6.
    pub fn c2() -> Self {
        CongruenceClass { modulus: 6, allowed_residues: vec![0, 2, 3, 4], distinct: true }
    }

    /// Parts congruent to +-2, +-3 mod 12.
    pub fn c3() -> Self {
        CongruenceClass { modulus: 12, allowed_residues: vec![2, 3, 9, 10], distinct: false }
    }

    /// Distinct parts not congruent to +-2 mod 6.
    pub fn d2() -> Self {
        CongruenceClass { modulus: 6, allowed_residues: vec![0, 1, 3, 5], distinct: true }
    }

    pub fn allows_part(&self, part: i64) -> bool {
        part >= 1 && self.allowed_residues.contains(&part.rem_euclid(self.modulus))
    }
}

/// Number of partitions of `n` obeying `rule`, by descent over decreasing
/// part lists.
pub fn count_difference(rule: &DifferenceRule, n: i64) -> u64 {
    fn go(rule: &DifferenceRule, remaining: i64, prev: Option<i64>) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let top = match prev {
            Some(p) => (p - rule.min_gap).min(remaining),
            None => remaining,
        };
        let mut total = 0;
        for part in (1..=top).rev() {
            if !rule.allows_part(part) || prev.is_some_and(|p| !rule.allows_pair(p, part)) {
                continue;
            }
            // the parts below `part` are at most part - min_gap, part - 2 min_gap, ...
            if max_tail_sum(part, remaining - part, rule.min_gap) < remaining - part {
                break;
            }
            total += go(rule, remaining - part, Some(part));
        }
        total
    }
    if n < 0 {
        return 0;
    }
    go(rule, n, None)
}

/// Largest total reachable by parts strictly below `part` spaced by `gap`,
/// capped at `need` (enough to decide reachability).
fn max_tail_sum(part: i64, need: i64, gap: i64) -> i64 {
    let mut sum = 0;
    let mut p = part - gap.max(1);
    while p >= 1 && sum < need {
        sum += p;
        p -= gap.max(1);
    }
    sum
}

/// Counts for `0..=max_n` by the usual knapsack recurrence.
pub fn congruence_counts(class: &CongruenceClass, max_n: i64) -> Vec<BigInt> {
    let len = (max_n.max(-1) + 1) as usize;
    let mut c = vec![BigInt::zero(); len];
    if len == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for part in (1..=max_n).filter(|&p| class.allows_part(p)) {
        let p = part as usize;
        if class.distinct {
            for k in (p..len).rev() {
                let add = c[k - p].clone();
                c[k] += add;
            }
        } else {
            for k in p..len {
                let add = c[k - p].clone();
                c[k] += add;
            }
        }
    }
    c
}

pub fn count_congruence(class: &CongruenceClass, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    congruence_counts(class, n).pop().unwrap_or_default()
}

/// The same count by descent over weakly (or strictly) decreasing part lists.
pub fn count_congruence_dfs(class: &CongruenceClass, n: i64) -> u64 {
    fn go(class: &CongruenceClass, remaining: i64, top: i64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for part in (1..=top.min(remaining)).rev() {
            if class.allows_part(part) {
                let next = if class.distinct { part - 1 } else { part };
                total += go(class, remaining - part, next);
            }
        }
        total
    }
    if n < 0 {
        return 0;
    }
    go(class, n, n)
}

/// `sum_{n < order} count(n) q^n`.
pub fn counts_to_series<F, C>(count: F, order: i64) -> LaurentSeries
where
    F: Fn(i64) -> C,
    C: Into<BigInt>,
{
    let coeffs = (0..order.max(0)).map(|n| count(n).into()).collect();
    LaurentSeries::new(0, coeffs, order.max(0))
}

/// One row of a Capparelli comparison table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: i64,
    /// `c_1, c_2, c_3` for the first identity, `d_1, d_2` for the second.
    #[serde(serialize_with = "ser_counts")]
    pub counts: Vec<BigInt>,
    pub equal: bool,
}

fn ser_counts<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&crate::series::big_to_json(c))?;
    }
    seq.end()
}

/// The rule and classes compared by Capparelli's first (`which = 1`) or
/// second (`which = 2`) identity.
pub fn capparelli_sides(which: i64) -> Option<(DifferenceRule, Vec<CongruenceClass>)> {
    match which {
        1 => Some((DifferenceRule::capparelli_first(), vec![CongruenceClass::c2(), CongruenceClass::c3()])),
        2 => Some((DifferenceRule::capparelli_second(), vec![CongruenceClass::d2()])),
        _ => None,
    }
}

/// The row for `n`: the difference-condition count followed by each class count.
pub fn capparelli_row(which: i64, n: i64) -> Option<CountRow> {
    let (rule, classes) = capparelli_sides(which)?;
    let mut counts = vec![BigInt::from(count_difference(&rule, n))];
    counts.extend(classes.iter().map(|c| count_congruence(c, n)));
    let equal = counts.windows(2).all(|w| w[0] == w[1]);
    Some(CountRow { n, counts, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let first = DifferenceRule::capparelli_first();
        assert_eq!(count_difference(&first, 0), 1);
        assert_eq!(count_difference(&DifferenceRule::capparelli_second(), 2), 0);
        assert_eq!(count_congruence(&CongruenceClass::c2(), 6), BigInt::from(2));
        assert_eq!(count_congruence(&CongruenceClass::c3(), 5), BigInt::from(1));
        assert_eq!(count_congruence(&CongruenceClass::d2(), 6), BigInt::from(2));
    }

    #[test]
    fn rule_encodes_the_bullets() {
        let r = DifferenceRule::capparelli_first();
        assert!(!r.allows_part(1));
        assert!(r.allows_part(2));
        assert!(!r.allows_pair(5, 4));
        assert!(r.allows_pair(7, 5)); // 7 = 1 mod 3
        assert!(!r.allows_pair(6, 4));
        assert!(r.allows_pair(6, 3)); // 6 = 0 mod 3
        assert!(!r.allows_pair(7, 4));
        assert!(r.allows_pair(8, 4));
    }

    #[test]
    fn first_identity_to_twelve() {
        for n in 0..=12 {
            let row = capparelli_row(1, n).unwrap();
            assert!(row.equal, "{row:?}");
        }
    }

    #[test]
    fn counts_to_series_is_dense() {
        let s = counts_to_series(|n| n, 4);
        assert_eq!(s, LaurentSeries::from_i64s(0, &[0, 1, 2, 3], 4));
        assert!(capparelli_row(3, 1).is_none());
    }
}
