//! Minimality criteria, exhaustive region enumeration and exact counting.
//!
//! A dominant region of the `m`-Shi arrangement is represented by the unique
//! alcove of the region closest to the origin. Both coordinate systems carry
//! a criterion for this minimality: bounded steps of the level vector, or
//! bounded level gaps between consecutive bases of the sorted abacus. The
//! enumerators below walk all minimal alcoves directly in level-vector
//! coordinates; the counts are cross-checked against the exact product
//! formula.

use num_bigint::BigUint;

use crate::affine::{Abacus, LevelVector};
use crate::error::{Error, Result};

/// One failed minimality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub description: String,
    /// 1-based positions (or bases) the check compared.
    pub indices: (usize, usize),
}

/// Outcome of a minimality test; minimal iff no violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub violations: Vec<Violation>,
}

impl MinimalityReport {
    pub fn is_minimal(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_minimal() {
            "minimal".to_string()
        } else {
            self.violations
                .iter()
                .map(|v| v.description.as_str())
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

/// Level-vector criterion: consecutive steps at most `m`, and the wraparound
/// step `beta_1 - beta_n - 1` at most `m`.
pub fn is_m_minimal_level(v: &LevelVector, m: i64) -> MinimalityReport {
    assert!(m >= 1, "minimality is defined for m >= 1");
    let beta = v.beta();
    let n = beta.len();
    let mut violations = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let step = beta[i + 1] - beta[i];
        if step > m {
            violations.push(Violation {
                description: format!(
                    "beta_{} - beta_{} = {} exceeds m = {}",
                    i + 2,
                    i + 1,
                    step,
                    m
                ),
                indices: (i + 1, i + 2),
            });
        }
    }
    if n >= 1 {
        let wrap = beta[0] - beta[n - 1] - 1;
        if wrap > m {
            violations.push(Violation {
                description: format!("beta_1 - beta_{n} - 1 = {wrap} exceeds m = {m}"),
                indices: (n, 1),
            });
        }
    }
    MinimalityReport { violations }
}

/// Abacus criterion: when base `b` sits at position `i` and base `b+1` at a
/// later position `j`, the level gap is at most `m`; for the pair `(n, 1)`
/// the gap minus one is at most `m`.
pub fn is_m_minimal_abacus(a: &Abacus, m: i64) -> MinimalityReport {
    assert!(m >= 1, "minimality is defined for m >= 1");
    let n = a.n();
    let mut position_of_base = vec![0usize; n];
    for (idx, e) in a.entries().iter().enumerate() {
        position_of_base[(e.base - 1) as usize] = idx;
    }
    let level_at = |pos: usize| a.entries()[pos].level;
    let mut violations = Vec::new();
    for b in 1..n {
        let i = position_of_base[b - 1];
        let j = position_of_base[b];
        if i <= j && level_at(j) - level_at(i) > m {
            violations.push(Violation {
                description: format!(
                    "levels of bases {} and {} differ by {} > m = {}",
                    b,
                    b + 1,
                    level_at(j) - level_at(i),
                    m
                ),
                indices: (i + 1, j + 1),
            });
        }
    }
    let i = position_of_base[n - 1];
    let j = position_of_base[0];
    if i <= j && level_at(j) - level_at(i) - 1 > m {
        violations.push(Violation {
            description: format!(
                "levels of bases {} and 1 differ by {} - 1 > m = {}",
                n,
                level_at(j) - level_at(i),
                m
            ),
            indices: (i + 1, j + 1),
        });
    }
    MinimalityReport { violations }
}

/// Type C criterion: the abacus criterion applied to a balanced abacus of
/// even length. Unbalanced input is rejected.
pub fn is_m_minimal_type_c(a: &Abacus, m: i64) -> Result<MinimalityReport> {
    if !a.is_balanced()? {
        return Err(Error::Unbalanced);
    }
    Ok(is_m_minimal_abacus(a, m))
}

/// Ceiling on enumeration sizes; larger requests are refused up front.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

fn guard(count: &BigUint, limit: u64) -> Result<()> {
    if *count > BigUint::from(limit) {
        return Err(Error::ResourceGuard {
            count: count.to_string(),
            limit,
        });
    }
    Ok(())
}

/// One `m`-minimal alcove per dominant region of the `m`-Shi arrangement of
/// type A, streamed in lexicographic level-vector order. Exactly
/// [`catalan_a`]`(n, m)` items are produced.
pub fn enumerate_regions_a(n: usize, m: i64) -> Result<RegionsA> {
    enumerate_regions_a_with_limit(n, m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_regions_a_with_limit(n: usize, m: i64, limit: u64) -> Result<RegionsA> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n >= 1 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    guard(&catalan_a(n, m), limit)?;
    Ok(RegionsA::new(n, m))
}

/// Analogue of [`enumerate_regions_a`] for type C: balanced length-`2n`
/// abacuses, [`catalan_c`]`(n, m)` of them, again in lexicographic order.
pub fn enumerate_regions_c(n: usize, m: i64) -> Result<RegionsC> {
    enumerate_regions_c_with_limit(n, m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_regions_c_with_limit(n: usize, m: i64, limit: u64) -> Result<RegionsC> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n >= 1 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    guard(&catalan_c(n, m), limit)?;
    Ok(RegionsC::new(n, m))
}

/// Depth-first walk over zero-sum level vectors with steps bounded by `m`
/// and wraparound bounded by `m + 1`, in lexicographic order. Partial sums
/// are pruned against what the remaining coordinates can still contribute.
#[derive(Debug)]
pub struct RegionsA {
    n: usize,
    m: i64,
    bound: i64,
    prefix: Vec<i64>,
    exhausted: bool,
    started: bool,
}

impl RegionsA {
    fn new(n: usize, m: i64) -> Self {
        Self {
            n,
            m,
            bound: (n as i64 - 1) * m + 1,
            prefix: Vec::with_capacity(n),
            exhausted: false,
            started: false,
        }
    }

    fn upper(&self, depth: usize) -> i64 {
        if depth == 0 {
            self.bound
        } else {
            self.bound.min(self.prefix[depth - 1] + self.m)
        }
    }

    /// Can the remaining coordinates still steer the total onto zero?
    fn feasible(&self) -> bool {
        let depth = self.prefix.len() - 1;
        let current = self.prefix[depth];
        let sum: i64 = self.prefix.iter().sum();
        let remaining = self.n - 1 - depth;
        if remaining == 0 {
            return sum == 0 && self.prefix[0] - current - 1 <= self.m;
        }
        let mut max_future = 0i64;
        let mut ceiling = current;
        for _ in 0..remaining {
            ceiling = (ceiling + self.m).min(self.bound);
            max_future += ceiling;
        }
        if sum + max_future < 0 {
            return false;
        }
        let last_floor = (-self.bound).max(self.prefix[0] - self.m - 1);
        let min_future = (remaining as i64 - 1) * (-self.bound) + last_floor;
        sum + min_future <= 0
    }
}

impl Iterator for RegionsA {
    type Item = Abacus;

    fn next(&mut self) -> Option<Abacus> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            self.prefix.push(-self.bound);
        }
        loop {
            let depth = match self.prefix.len() {
                0 => {
                    self.exhausted = true;
                    return None;
                }
                len => len - 1,
            };
            if self.prefix[depth] > self.upper(depth) {
                self.prefix.pop();
                if let Some(last) = self.prefix.last_mut() {
                    *last += 1;
                }
                continue;
            }
            if !self.feasible() {
                self.prefix[depth] += 1;
                continue;
            }
            if depth == self.n - 1 {
                let v = LevelVector::new(self.prefix.clone());
                debug_assert!(is_m_minimal_level(&v, self.m).is_minimal());
                let out = Abacus::from_level_vector(&v).expect("zero-sum by construction");
                self.prefix[depth] += 1;
                return Some(out);
            }
            self.prefix.push(-self.bound);
        }
    }
}

/// Depth-first walk over the lower halves of antisymmetric level vectors.
/// The half determines the whole vector, and the bounds on it are exactly
/// the minimality constraints of the doubled vector, so no filtering is
/// needed afterwards.
#[derive(Debug)]
pub struct RegionsC {
    n: usize,
    m: i64,
    prefix: Vec<i64>,
    exhausted: bool,
    started: bool,
}

impl RegionsC {
    fn new(n: usize, m: i64) -> Self {
        Self {
            n,
            m,
            prefix: Vec::with_capacity(n),
            exhausted: false,
            started: false,
        }
    }

    fn lower(&self, depth: usize) -> i64 {
        -(self.m / 2) - (self.n as i64 - 1 - depth as i64) * self.m
    }

    fn upper(&self, depth: usize) -> i64 {
        if depth == 0 {
            (self.m + 1) / 2
        } else {
            self.prefix[depth - 1] + self.m
        }
    }
}

impl Iterator for RegionsC {
    type Item = Abacus;

    fn next(&mut self) -> Option<Abacus> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            self.prefix.push(self.lower(0));
        }
        loop {
            let depth = match self.prefix.len() {
                0 => {
                    self.exhausted = true;
                    return None;
                }
                len => len - 1,
            };
            if self.prefix[depth] > self.upper(depth) {
                self.prefix.pop();
                if let Some(last) = self.prefix.last_mut() {
                    *last += 1;
                }
                continue;
            }
            if depth == self.n - 1 {
                let mut beta = self.prefix.clone();
                beta.extend(self.prefix.iter().rev().map(|b| -b));
                let v = LevelVector::new(beta);
                debug_assert!(is_m_minimal_level(&v, self.m).is_minimal());
                let out = Abacus::from_level_vector(&v).expect("antisymmetric halves cancel");
                debug_assert_eq!(out.is_balanced(), Ok(true));
                self.prefix[depth] += 1;
                return Some(out);
            }
            let next_lower = self.lower(depth + 1);
            self.prefix.push(next_lower);
        }
    }
}

/// Root-system data for the generalized Catalan product
/// `prod_i (e_i + m*h + 1) / (e_i + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanParams {
    pub m: i64,
    pub exponents: Vec<i64>,
    pub coxeter_number: i64,
}

impl CatalanParams {
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Exponents `1..n-1` and Coxeter number `n`.
    pub fn type_a(n: usize, m: i64) -> Self {
        Self {
            m,
            exponents: (1..n as i64).collect(),
            coxeter_number: n as i64,
        }
    }

    /// Exponents `1, 3, ..., 2n-1` and Coxeter number `2n`.
    pub fn type_c(n: usize, m: i64) -> Self {
        Self {
            m,
            exponents: (0..n as i64).map(|i| 2 * i + 1).collect(),
            coxeter_number: 2 * n as i64,
        }
    }
}

/// Evaluates the Catalan product exactly; rejects parameters for which the
/// product is not an integer.
pub fn catalan_general(params: &CatalanParams) -> Result<BigUint> {
    if params.m < 1 || params.coxeter_number < 1 {
        return Err(Error::InvalidParameter(
            "catalan numbers need m >= 1 and a positive Coxeter number".to_string(),
        ));
    }
    let mh = (params.m as i128)
        .checked_mul(params.coxeter_number as i128)
        .ok_or(Error::Overflow)?;
    let mut numerator = BigUint::from(1u8);
    let mut denominator = BigUint::from(1u8);
    for &e in &params.exponents {
        if e < 1 {
            return Err(Error::InvalidParameter(format!(
                "exponents must be positive, got {e}"
            )));
        }
        let top = mh.checked_add(e as i128 + 1).ok_or(Error::Overflow)?;
        numerator *= BigUint::from(top as u128);
        denominator *= BigUint::from((e + 1) as u128);
    }
    if &numerator % &denominator != BigUint::ZERO {
        return Err(Error::NonIntegralCount);
    }
    Ok(numerator / denominator)
}

/// Number of dominant regions of the `m`-Shi arrangement on `n` residues
/// (type A rank `n - 1`).
pub fn catalan_a(n: usize, m: i64) -> BigUint {
    catalan_general(&CatalanParams::type_a(n, m)).expect("type A product is integral")
}

/// Number of dominant regions of the `m`-Shi arrangement of type C rank `n`.
pub fn catalan_c(n: usize, m: i64) -> BigUint {
    catalan_general(&CatalanParams::type_c(n, m)).expect("type C product is integral")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::BaseLevelEntry;
    use crate::tableau::AlcoveTableau;
    use std::collections::HashSet;

    fn abacus(n: usize, pairs: &[(i64, i64)]) -> Abacus {
        Abacus::new(
            n,
            pairs
                .iter()
                .map(|&(base, level)| BaseLevelEntry { base, level })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn level_criterion_examples() {
        let w = abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]);
        assert_eq!(w.level_vector().beta(), &[-1, 2, 2, -3]);
        assert!(is_m_minimal_level(&w.level_vector(), 3).is_minimal());
        assert!(is_m_minimal_level(&LevelVector::new(vec![0; 5]), 1).is_minimal());
        let bad = abacus(
            8,
            &[
                (3, -3),
                (4, -2),
                (7, -2),
                (8, -2),
                (1, 2),
                (2, 2),
                (5, 2),
                (6, 3),
            ],
        );
        assert_eq!(
            bad.level_vector().beta(),
            &[2, 2, -3, -2, 2, 3, -2, -2]
        );
        let report = is_m_minimal_level(&bad.level_vector(), 3);
        assert!(!report.is_minimal());
        assert_eq!(report.violations[0].indices, (4, 5));
    }

    #[test]
    fn abacus_criterion_matches_level_criterion() {
        let samples = [
            abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]),
            Abacus::identity(4),
            abacus(
                8,
                &[
                    (3, -3),
                    (4, -2),
                    (7, -2),
                    (8, -2),
                    (1, 2),
                    (2, 2),
                    (5, 2),
                    (6, 3),
                ],
            ),
        ];
        for a in &samples {
            for m in 1..=3 {
                assert_eq!(
                    is_m_minimal_abacus(a, m).is_minimal(),
                    is_m_minimal_level(&a.level_vector(), m).is_minimal()
                );
            }
        }
    }

    #[test]
    fn type_c_criterion_examples() {
        let good = abacus(
            8,
            &[
                (2, -3),
                (3, -2),
                (8, -2),
                (5, -1),
                (4, 1),
                (1, 2),
                (6, 2),
                (7, 3),
            ],
        );
        assert!(is_m_minimal_type_c(&good, 3).unwrap().is_minimal());
        assert!(is_m_minimal_type_c(&Abacus::identity(6), 2)
            .unwrap()
            .is_minimal());
        let bad = abacus(
            8,
            &[
                (3, -3),
                (4, -2),
                (7, -2),
                (8, -2),
                (1, 2),
                (2, 2),
                (5, 2),
                (6, 3),
            ],
        );
        assert!(!is_m_minimal_type_c(&bad, 3).unwrap().is_minimal());
        let lopsided = abacus(4, &[(1, -1), (2, 0), (4, 0), (3, 1)]);
        assert_eq!(is_m_minimal_type_c(&lopsided, 2), Err(Error::Unbalanced));
    }

    #[test]
    fn enumerate_a_examples() {
        assert_eq!(enumerate_regions_a(2, 1).unwrap().count(), 2);
        let tableaux: HashSet<Vec<Vec<i64>>> = enumerate_regions_a(2, 2)
            .unwrap()
            .map(|a| AlcoveTableau::from_abacus(&a).rows())
            .collect();
        assert_eq!(
            tableaux,
            HashSet::from([vec![vec![0]], vec![vec![1]], vec![vec![2]]])
        );
        assert_eq!(enumerate_regions_a(4, 3).unwrap().count(), 140);
    }

    #[test]
    fn enumerate_c_examples() {
        assert_eq!(enumerate_regions_c(2, 2).unwrap().count(), 15);
        assert_eq!(enumerate_regions_c(1, 1).unwrap().count(), 2);
        assert_eq!(enumerate_regions_c(4, 3).unwrap().count(), 1820);
    }

    #[test]
    fn enumeration_is_sorted_and_deduplicated() {
        let vectors: Vec<Vec<i64>> = enumerate_regions_a(3, 2)
            .unwrap()
            .map(|a| a.level_vector().beta().to_vec())
            .collect();
        let mut sorted = vectors.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(vectors, sorted);
        let vectors: Vec<Vec<i64>> = enumerate_regions_c(2, 3)
            .unwrap()
            .map(|a| a.level_vector().beta().to_vec())
            .collect();
        let mut sorted = vectors.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(vectors, sorted);
    }

    #[test]
    fn resource_guard_trips() {
        match enumerate_regions_a(30, 3) {
            Err(Error::ResourceGuard { limit, .. }) => {
                assert_eq!(limit, DEFAULT_ENUMERATION_LIMIT)
            }
            other => panic!("expected resource guard, got {other:?}"),
        }
        assert!(enumerate_regions_a_with_limit(4, 3, 139).is_err());
        assert!(enumerate_regions_a_with_limit(4, 3, 140).is_ok());
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_c(2, 2), BigUint::from(15u8));
        for m in 1..=6 {
            assert_eq!(catalan_a(2, m), BigUint::from((m + 1) as u64));
        }
        assert_eq!(catalan_a(4, 3), BigUint::from(140u8));
        assert_eq!(catalan_a(1, 5), BigUint::from(1u8));
    }

    #[test]
    fn catalan_identity_and_integrality() {
        for n in 1..=8usize {
            for m in 1..=5i64 {
                let lhs = catalan_a(n, m) * BigUint::from((m as u64) * (n as u64) + 1);
                assert_eq!(lhs, catalan_c(n, m));
            }
        }
        let bad = CatalanParams {
            m: 1,
            exponents: vec![2],
            coxeter_number: 2,
        };
        assert_eq!(catalan_general(&bad), Err(Error::NonIntegralCount));
    }
}
