//! Base-level arithmetic for affine type A windows.
//!
//! An integer `a` is written in base-level form `r^l` when `a = r + n*l` with
//! the base `r` in `1..=n`. A strictly increasing window whose levels sum to
//! zero (an [`Abacus`]) encodes a minimal-length coset representative, hence a
//! dominant alcove. [`ShiftedWindow`] relaxes the zero-sum constraint; it is
//! what the `k`-shift produces and the antisymmetric expansion consumes.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A window value in base-level form: `value = base + n * level`.
///
/// The modulus `n` is not stored; it is implicit from the containing window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseLevelEntry {
    pub base: i64,
    pub level: i64,
}

impl BaseLevelEntry {
    /// Splits `value` into base and level for modulus `n`, with the base in
    /// `1..=n`; multiples of `n` get base `n`, not `0`.
    pub fn decode(value: i64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        let n = n as i64;
        let base = value
            .checked_sub(1)
            .ok_or(Error::Overflow)?
            .rem_euclid(n)
            + 1;
        let level = value.checked_sub(base).ok_or(Error::Overflow)? / n;
        Ok(Self { base, level })
    }

    /// The integer this entry stands for under modulus `n`.
    pub fn value(&self, n: usize) -> i64 {
        self.base + n as i64 * self.level
    }

    fn checked_value(&self, n: usize) -> Result<i64> {
        (n as i64)
            .checked_mul(self.level)
            .and_then(|nl| nl.checked_add(self.base))
            .ok_or(Error::Overflow)
    }
}

/// `n` integers covering every residue class mod `n` exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    n: usize,
    values: Vec<i64>,
}

impl Window {
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if values.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                found: values.len(),
            });
        }
        let mut seen: Vec<Option<i64>> = vec![None; n];
        for &v in &values {
            let entry = BaseLevelEntry::decode(v, n)?;
            let slot = &mut seen[(entry.base - 1) as usize];
            if let Some(first) = *slot {
                return Err(Error::DuplicateResidue {
                    first,
                    second: v,
                });
            }
            *slot = Some(v);
        }
        Ok(Self { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Per-residue levels `(beta_1, ..., beta_n)`.
///
/// A vector derived from an [`Abacus`] sums to zero; arbitrary vectors are
/// allowed so that shifted windows can be described too.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelVector {
    beta: Vec<i64>,
}

impl LevelVector {
    pub fn new(beta: Vec<i64>) -> Self {
        Self { beta }
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn sum(&self) -> i64 {
        self.beta.iter().sum()
    }
}

/// A sorted base window with zero level sum: the abacus of a dominant alcove.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    n: usize,
    entries: Vec<BaseLevelEntry>,
}

impl Abacus {
    /// Validates sortedness, the base permutation and the zero level sum.
    pub fn new(n: usize, entries: Vec<BaseLevelEntry>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if entries.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                found: entries.len(),
            });
        }
        let mut seen = vec![false; n];
        let mut level_sum: i64 = 0;
        let mut prev: Option<i64> = None;
        for (position, entry) in entries.iter().enumerate() {
            if entry.base < 1 || entry.base > n as i64 {
                return Err(Error::BaseOutOfRange {
                    base: entry.base,
                    n,
                });
            }
            if std::mem::replace(&mut seen[(entry.base - 1) as usize], true) {
                return Err(Error::BasesNotPermutation { n });
            }
            let value = entry.checked_value(n)?;
            if prev.is_some_and(|p| value <= p) {
                return Err(Error::NotSorted { position });
            }
            prev = Some(value);
            level_sum = level_sum.checked_add(entry.level).ok_or(Error::Overflow)?;
        }
        if level_sum != 0 {
            return Err(Error::NonzeroLevelSum { sum: level_sum });
        }
        Ok(Self { n, entries })
    }

    /// The abacus of the fundamental alcove: `[1^0, ..., n^0]`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity abacus needs n >= 1");
        let entries = (1..=n as i64)
            .map(|base| BaseLevelEntry { base, level: 0 })
            .collect();
        Self { n, entries }
    }

    /// Sorts `{1^beta_1, ..., n^beta_n}` by value; rejects nonzero level sums.
    pub fn from_level_vector(v: &LevelVector) -> Result<Self> {
        let n = v.n();
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        let sum = v.sum();
        if sum != 0 {
            return Err(Error::NonzeroLevelSum { sum });
        }
        let mut keyed: Vec<(i64, BaseLevelEntry)> = Vec::with_capacity(n);
        for (i, &level) in v.beta().iter().enumerate() {
            let entry = BaseLevelEntry {
                base: i as i64 + 1,
                level,
            };
            keyed.push((entry.checked_value(n)?, entry));
        }
        keyed.sort_unstable_by_key(|&(value, _)| value);
        Abacus::new(n, keyed.into_iter().map(|(_, e)| e).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BaseLevelEntry] {
        &self.entries
    }

    pub fn values(&self) -> Vec<i64> {
        self.entries.iter().map(|e| e.value(self.n)).collect()
    }

    pub fn window(&self) -> Window {
        Window {
            n: self.n,
            values: self.values(),
        }
    }

    /// `beta_i` = level of the entry with base `i`.
    pub fn level_vector(&self) -> LevelVector {
        let mut beta = vec![0i64; self.n];
        for entry in &self.entries {
            beta[(entry.base - 1) as usize] = entry.level;
        }
        LevelVector::new(beta)
    }

    /// Adds `k` to every window value and re-decodes the result.
    pub fn k_shift(&self, k: i64) -> Result<ShiftedWindow> {
        let mut entries = Vec::with_capacity(self.n);
        for e in &self.entries {
            let value = e
                .checked_value(self.n)?
                .checked_add(k)
                .ok_or(Error::Overflow)?;
            entries.push(BaseLevelEntry::decode(value, self.n)?);
        }
        ShiftedWindow::new(self.n, entries, k)
    }

    /// The same window viewed as a [`ShiftedWindow`] with shift `0`.
    pub fn as_shifted(&self) -> ShiftedWindow {
        ShiftedWindow {
            n: self.n,
            entries: self.entries.clone(),
            origin_shift: 0,
        }
    }

    /// Whether paired entries satisfy `base_i + base_{2n+1-i} = 2n+1` and
    /// `level_i + level_{2n+1-i} = 0`. Only defined for even length.
    pub fn is_balanced(&self) -> Result<bool> {
        if self.n % 2 != 0 {
            return Err(Error::OddLength { len: self.n });
        }
        let e = &self.entries;
        Ok((0..self.n / 2).all(|i| {
            let (a, b) = (&e[i], &e[self.n - 1 - i]);
            a.base + b.base == self.n as i64 + 1 && a.level + b.level == 0
        }))
    }
}

/// A sorted window with distinct bases whose level sum may be nonzero.
///
/// Produced by [`Abacus::k_shift`]; consumed by the antisymmetric expansion.
/// Keeping it a separate type means the zero-sum invariant of [`Abacus`] can
/// never be violated silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedWindow {
    n: usize,
    entries: Vec<BaseLevelEntry>,
    origin_shift: i64,
}

impl ShiftedWindow {
    pub fn new(n: usize, entries: Vec<BaseLevelEntry>, origin_shift: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModulus);
        }
        if entries.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                found: entries.len(),
            });
        }
        let mut seen = vec![false; n];
        let mut prev: Option<i64> = None;
        for (position, entry) in entries.iter().enumerate() {
            if entry.base < 1 || entry.base > n as i64 {
                return Err(Error::BaseOutOfRange {
                    base: entry.base,
                    n,
                });
            }
            if std::mem::replace(&mut seen[(entry.base - 1) as usize], true) {
                return Err(Error::BasesNotPermutation { n });
            }
            let value = entry.checked_value(n)?;
            if prev.is_some_and(|p| value <= p) {
                return Err(Error::NotSorted { position });
            }
            prev = Some(value);
        }
        Ok(Self {
            n,
            entries,
            origin_shift,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[BaseLevelEntry] {
        &self.entries
    }

    pub fn origin_shift(&self) -> i64 {
        self.origin_shift
    }

    pub fn level_sum(&self) -> i64 {
        self.entries.iter().map(|e| e.level).sum()
    }

    /// Doubles the window into a balanced abacus on `2n` runners: every entry
    /// `r^a` contributes both `r^a` and `(2n+1-r)^{-a}`, read with modulus
    /// `2n`, and the union is sorted. The mirrored levels cancel, so the
    /// result always has level sum zero and is balanced.
    pub fn antisymmetric_expansion(&self) -> Result<Abacus> {
        let nn = 2 * self.n;
        let nn_i = nn as i64;
        let mut values = Vec::with_capacity(nn);
        for e in &self.entries {
            let direct = nn_i
                .checked_mul(e.level)
                .and_then(|nl| nl.checked_add(e.base))
                .ok_or(Error::Overflow)?;
            let mirrored = nn_i
                .checked_mul(e.level)
                .and_then(|nl| (nn_i + 1 - e.base).checked_sub(nl))
                .ok_or(Error::Overflow)?;
            values.push(direct);
            values.push(mirrored);
        }
        values.sort_unstable();
        let entries = values
            .into_iter()
            .map(|v| BaseLevelEntry::decode(v, nn))
            .collect::<Result<Vec<_>>>()?;
        let expanded = Abacus::new(nn, entries)?;
        debug_assert_eq!(expanded.is_balanced(), Ok(true));
        Ok(expanded)
    }
}

/// Shifts `values` by the unique constant that turns them into a base window
/// (values summing to `n(n+1)/2`) and sorts the result into an abacus.
///
/// The shift is an integer because the residue multiset is fixed; shifting
/// the input by any constant does not change the result.
pub fn rebase(values: &[i64]) -> Result<Abacus> {
    let shift = rebase_shift(values)?;
    let n = values.len();
    let mut shifted = values
        .iter()
        .map(|v| v.checked_add(shift).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    shifted.sort_unstable();
    let entries = shifted
        .into_iter()
        .map(|v| BaseLevelEntry::decode(v, n))
        .collect::<Result<Vec<_>>>()?;
    Abacus::new(n, entries)
}

/// The constant added to every value by [`rebase`].
pub fn rebase_shift(values: &[i64]) -> Result<i64> {
    Window::new(values.len(), values.to_vec())?;
    let n = values.len() as i64;
    let target = n * (n + 1) / 2;
    let sum = values
        .iter()
        .try_fold(0i64, |acc, &v| acc.checked_add(v))
        .ok_or(Error::Overflow)?;
    let diff = target.checked_sub(sum).ok_or(Error::Overflow)?;
    debug_assert_eq!(diff.rem_euclid(n), 0);
    Ok(diff / n)
}

#[derive(Serialize, Deserialize)]
struct AbacusRepr {
    n: usize,
    entries: Vec<(i64, i64)>,
}

impl Serialize for Abacus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        AbacusRepr {
            n: self.n,
            entries: self.entries.iter().map(|e| (e.base, e.level)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Abacus {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = AbacusRepr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .into_iter()
            .map(|(base, level)| BaseLevelEntry { base, level })
            .collect();
        Abacus::new(repr.n, entries).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct WindowRepr {
    n: usize,
    values: Vec<i64>,
}

impl Serialize for Window {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WindowRepr {
            n: self.n,
            values: self.values.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Window {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = WindowRepr::deserialize(deserializer)?;
        Window::new(repr.n, repr.values).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct LevelVectorRepr {
    beta: Vec<i64>,
}

impl Serialize for LevelVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LevelVectorRepr {
            beta: self.beta.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LevelVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(LevelVector::new(LevelVectorRepr::deserialize(deserializer)?.beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn abacus(n: usize, pairs: &[(i64, i64)]) -> Abacus {
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
    fn decode_examples() {
        assert_eq!(
            BaseLevelEntry::decode(-2, 4).unwrap(),
            BaseLevelEntry { base: 2, level: -1 }
        );
        assert_eq!(
            BaseLevelEntry::decode(3, 4).unwrap(),
            BaseLevelEntry { base: 3, level: 0 }
        );
        assert_eq!(
            BaseLevelEntry::decode(8, 4).unwrap(),
            BaseLevelEntry { base: 4, level: 1 }
        );
        assert_eq!(BaseLevelEntry::decode(5, 0), Err(Error::InvalidModulus));
    }

    #[test]
    fn level_vector_examples() {
        let a = abacus(4, &[(2, -2), (4, -2), (1, 0), (3, 4)]);
        assert_eq!(a.level_vector().beta(), &[0, -2, 4, -2]);
        assert_eq!(Abacus::identity(5).level_vector().beta(), &[0; 5]);
        let b = abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]);
        assert_eq!(b.level_vector().beta(), &[-1, 2, 2, -3]);
    }

    #[test]
    fn from_level_vector_examples() {
        let a = Abacus::from_level_vector(&LevelVector::new(vec![0, -2, 4, -2])).unwrap();
        assert_eq!(a, abacus(4, &[(2, -2), (4, -2), (1, 0), (3, 4)]));
        assert_eq!(a.values(), vec![-6, -4, 1, 19]);
        assert_eq!(
            Abacus::from_level_vector(&LevelVector::new(vec![0, 0, 0])).unwrap(),
            Abacus::identity(3)
        );
        assert_eq!(
            Abacus::from_level_vector(&LevelVector::new(vec![-1, 2, 2, -3])).unwrap(),
            abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)])
        );
        assert_eq!(
            Abacus::from_level_vector(&LevelVector::new(vec![1, 0])),
            Err(Error::NonzeroLevelSum { sum: 1 })
        );
    }

    #[test]
    fn rebase_examples() {
        // normalized window 0^0,2^0,4^1,3^2,1^3 read with modulus 5
        let normalized = vec![0, 2, 9, 13, 16];
        assert_eq!(rebase_shift(&normalized).unwrap(), -5);
        assert_eq!(
            rebase(&normalized).unwrap(),
            abacus(5, &[(5, -2), (2, -1), (4, 0), (3, 1), (1, 2)])
        );
        // a base window is untouched
        let base = abacus(4, &[(2, -2), (4, -2), (1, 0), (3, 4)]);
        assert_eq!(rebase(&base.values()).unwrap(), base);
        // 0..n-1 is the identity shifted by one
        assert_eq!(rebase(&[0, 1, 2, 3]).unwrap(), Abacus::identity(4));
    }

    #[test]
    fn k_shift_examples() {
        let w = abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]);
        let shifted = w.k_shift(-2).unwrap();
        assert_eq!(
            shifted.entries(),
            &[
                BaseLevelEntry { base: 2, level: -3 },
                BaseLevelEntry { base: 3, level: -2 },
                BaseLevelEntry { base: 4, level: 1 },
                BaseLevelEntry { base: 1, level: 2 },
            ]
        );
        assert_eq!(shifted.level_sum(), -2);
        assert_eq!(w.k_shift(0).unwrap(), w.as_shifted());
        let shifted = w.k_shift(-1).unwrap();
        assert_eq!(
            shifted.entries(),
            &[
                BaseLevelEntry { base: 3, level: -3 },
                BaseLevelEntry { base: 4, level: -2 },
                BaseLevelEntry { base: 1, level: 2 },
                BaseLevelEntry { base: 2, level: 2 },
            ]
        );
    }

    #[test]
    fn expansion_examples() {
        let w = abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]);
        let expanded = w.k_shift(-2).unwrap().antisymmetric_expansion().unwrap();
        assert_eq!(
            expanded,
            abacus(
                8,
                &[
                    (2, -3),
                    (3, -2),
                    (8, -2),
                    (5, -1),
                    (4, 1),
                    (1, 2),
                    (6, 2),
                    (7, 3)
                ]
            )
        );
        let expanded = w.k_shift(-1).unwrap().antisymmetric_expansion().unwrap();
        assert_eq!(
            expanded,
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
                    (6, 3)
                ]
            )
        );
        assert_eq!(
            Abacus::identity(3)
                .as_shifted()
                .antisymmetric_expansion()
                .unwrap(),
            Abacus::identity(6)
        );
    }

    #[test]
    fn balance_examples() {
        let balanced = abacus(
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
        assert_eq!(balanced.is_balanced(), Ok(true));
        assert_eq!(Abacus::identity(6).is_balanced(), Ok(true));
        let lopsided = abacus(4, &[(1, -1), (2, 0), (4, 0), (3, 1)]);
        assert_eq!(lopsided.is_balanced(), Ok(false));
        assert_eq!(
            Abacus::identity(3).is_balanced(),
            Err(Error::OddLength { len: 3 })
        );
    }

    #[test]
    fn constructor_rejections() {
        // duplicate base
        assert!(Abacus::new(
            2,
            vec![
                BaseLevelEntry { base: 1, level: 0 },
                BaseLevelEntry { base: 1, level: 1 }
            ]
        )
        .is_err());
        // unsorted values
        assert_eq!(
            Abacus::new(
                2,
                vec![
                    BaseLevelEntry { base: 2, level: 0 },
                    BaseLevelEntry { base: 1, level: 0 }
                ]
            ),
            Err(Error::NotSorted { position: 1 })
        );
        // nonzero level sum
        assert_eq!(
            Abacus::new(
                2,
                vec![
                    BaseLevelEntry { base: 1, level: 0 },
                    BaseLevelEntry { base: 2, level: 1 }
                ]
            ),
            Err(Error::NonzeroLevelSum { sum: 1 })
        );
        assert_eq!(
            Window::new(2, vec![1, 3]),
            Err(Error::DuplicateResidue { first: 1, second: 3 })
        );
    }

    #[test]
    fn serde_round_trip() {
        let a = abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":4,"entries":[[4,-3],[1,-1],[2,2],[3,2]]}"#);
        assert_eq!(serde_json::from_str::<Abacus>(&json).unwrap(), a);
        // invalid payload is rejected while parsing
        assert!(serde_json::from_str::<Abacus>(r#"{"n":2,"entries":[[1,0],[2,1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn decode_round_trips(value in -100_000i64..100_000, n in 1usize..40) {
            let entry = BaseLevelEntry::decode(value, n).unwrap();
            prop_assert!(entry.base >= 1 && entry.base <= n as i64);
            prop_assert_eq!(entry.value(n), value);
        }

        #[test]
        fn rebase_is_shift_invariant(levels in proptest::collection::vec(-4i64..=4, 1..6), c in -50i64..50) {
            let n = levels.len();
            let values: Vec<i64> = levels.iter().enumerate()
                .map(|(i, &l)| i as i64 + 1 + n as i64 * l)
                .collect();
            let shifted: Vec<i64> = values.iter().map(|v| v + c).collect();
            prop_assert_eq!(rebase(&values).unwrap(), rebase(&shifted).unwrap());
            // idempotent: rebasing a base window returns it unchanged
            let based = rebase(&values).unwrap();
            prop_assert_eq!(rebase(&based.values()).unwrap(), based);
        }

        #[test]
        fn level_vector_round_trips(levels in proptest::collection::vec(-4i64..=4, 1..7)) {
            let mut levels = levels;
            let partial: i64 = levels.iter().skip(1).sum();
            levels[0] = -partial;
            let v = LevelVector::new(levels);
            let a = Abacus::from_level_vector(&v).unwrap();
            prop_assert_eq!(a.level_vector(), v);
        }
    }
}
