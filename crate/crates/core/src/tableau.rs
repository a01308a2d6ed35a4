//! Staircase Shi tableaux for alcoves and regions.
//!
//! A rank `N` tableau stores coordinates `k_{ij}` for `1 <= i <= j <= N`;
//! row `i` is displayed left to right as `k_{i,N}, ..., k_{i,i}`. Alcove
//! tableaux correspond to sorted abacuses of length `N + 1`; region tableaux
//! truncate every coordinate at `m` and characterise dominant regions of the
//! `m`-Shi arrangement. Type C alcoves appear as self-conjugate tableaux of
//! odd rank.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::{rebase, Abacus, ShiftedWindow, Window};
use crate::error::{Error, Result};

fn cell_count(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

/// Offset of cell `(i, j)` in row-major storage, 1-based indices.
fn offset(rank: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= rank);
    // rows 1..i hold rank, rank-1, ... cells
    let before = (i - 1) * (2 * rank - i + 2) / 2;
    before + (j - i)
}

fn rows_to_entries(rank: usize, rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    if rows.len() != rank {
        return Err(Error::BadRowCount {
            expected: rank,
            found: rows.len(),
        });
    }
    let mut entries = vec![0i64; cell_count(rank)];
    for (r, row) in rows.iter().enumerate() {
        let i = r + 1;
        if row.len() != rank - i + 1 {
            return Err(Error::BadRowLength {
                row: i,
                expected: rank - i + 1,
                found: row.len(),
            });
        }
        for (c, &value) in row.iter().enumerate() {
            // display order: leftmost cell of row i is k_{i,rank}
            let j = rank - c;
            entries[offset(rank, i, j)] = value;
        }
    }
    Ok(entries)
}

fn entries_to_rows(rank: usize, get: impl Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    (1..=rank)
        .map(|i| (i..=rank).rev().map(|j| get(i, j)).collect())
        .collect()
}

fn render_rows(rows: &[Vec<i64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// The Shi coordinates of a dominant alcove.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlcoveTableau {
    rank: usize,
    entries: Vec<i64>,
}

impl AlcoveTableau {
    /// Builds a tableau from display-order rows, rejecting shape mismatches
    /// and negative coordinates. Shi conditions are checked separately by
    /// [`AlcoveTableau::shi_conditions_hold`], so that invalid coordinate
    /// grids can still be examined.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let rank = rows.len();
        let entries = rows_to_entries(rank, rows)?;
        let t = Self { rank, entries };
        for i in 1..=rank {
            for j in i..=rank {
                if t.get(i, j) < 0 {
                    return Err(Error::NegativeEntry { i, j });
                }
            }
        }
        Ok(t)
    }

    /// Reads the Shi coordinates of a sorted abacus of length `rank + 1`:
    /// `k_{ij} = l_{j+1} - l_i`, minus one when `r_i > r_{j+1}`.
    pub fn from_abacus(a: &Abacus) -> Self {
        Self::from_window_entries(a.n(), a.entries().iter().map(|e| (e.base, e.level)))
    }

    /// Same reading applied to a shifted window. Any window of the same
    /// permutation yields the same tableau as the base window.
    pub fn from_shifted_window(w: &ShiftedWindow) -> Self {
        Self::from_window_entries(w.n(), w.entries().iter().map(|e| (e.base, e.level)))
    }

    fn from_window_entries(n: usize, entries: impl Iterator<Item = (i64, i64)>) -> Self {
        let pairs: Vec<(i64, i64)> = entries.collect();
        debug_assert_eq!(pairs.len(), n);
        let rank = n - 1;
        let mut out = vec![0i64; cell_count(rank)];
        for i in 1..=rank {
            for j in i..=rank {
                let (r_i, l_i) = pairs[i - 1];
                let (r_j1, l_j1) = pairs[j];
                let delta = if r_i > r_j1 { 1 } else { 0 };
                out[offset(rank, i, j)] = l_j1 - l_i - delta;
            }
        }
        let t = Self { rank, entries: out };
        debug_assert!(t.shi_conditions_hold());
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinate `k_{ij}`, 1-based, `i <= j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[offset(self.rank, i, j)]
    }

    /// Rows in display order: row `i` lists `k_{i,rank}, ..., k_{i,i}`.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        entries_to_rows(self.rank, |i, j| self.get(i, j))
    }

    /// Sum of all coordinates; the minimal alcove of a region is the unique
    /// alcove of the region minimising this.
    pub fn entry_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Checks `k_{ij} - k_{il} - k_{l+1,j} in {0, 1}` for every split point.
    pub fn shi_conditions_hold(&self) -> bool {
        self.first_shi_violation().is_none()
    }

    fn first_shi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                for l in i..j {
                    let delta = self.get(i, j) - self.get(i, l) - self.get(l + 1, j);
                    if delta != 0 && delta != 1 {
                        return Some((i, l, j));
                    }
                }
            }
        }
        None
    }

    /// Mirror along the staircase diagonal: `k_{ij} <-> k_{rank+1-j, rank+1-i}`.
    pub fn conjugate(&self) -> Self {
        let mut out = vec![0i64; cell_count(self.rank)];
        for i in 1..=self.rank {
            for j in i..=self.rank {
                out[offset(self.rank, i, j)] = self.get(self.rank + 1 - j, self.rank + 1 - i);
            }
        }
        Self {
            rank: self.rank,
            entries: out,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// How many split points of `k_{1j}` carry the extra unit:
    /// `b_j = #{l < j : k_{1j} = k_{1l} + k_{l+1,j} + 1}`.
    pub fn inversion_counts(&self) -> Vec<usize> {
        (1..=self.rank)
            .map(|j| {
                (1..j)
                    .filter(|&l| self.get(1, j) == self.get(1, l) + self.get(l + 1, j) + 1)
                    .count()
            })
            .collect()
    }

    /// The window of the encoded alcove whose smallest entry is zero. The
    /// first-row coordinates, permuted by the inversion counts, are the
    /// levels of the residues `1..=rank` above the leading zero.
    pub fn normalized_window(&self) -> Result<Window> {
        if let Some((i, l, j)) = self.first_shi_violation() {
            return Err(Error::AlcoveShiViolated { i, l, j });
        }
        let sigma = permutation_from_inversion_table(&self.inversion_counts());
        let n = self.rank + 1;
        let mut values = Vec::with_capacity(n);
        values.push(0i64);
        for (slot, &image) in sigma.iter().enumerate() {
            let level = self.get(1, image);
            let value = (n as i64)
                .checked_mul(level)
                .and_then(|nl| nl.checked_add(slot as i64 + 1))
                .ok_or(Error::Overflow)?;
            values.push(value);
        }
        values.sort_unstable();
        Window::new(n, values)
    }

    /// Inverts [`AlcoveTableau::from_abacus`]: rebuilds the unique sorted
    /// abacus with these Shi coordinates. Rejects coordinate grids that
    /// violate the Shi conditions.
    pub fn to_abacus(&self) -> Result<Abacus> {
        let normalized = self.normalized_window()?;
        rebase(normalized.values())
    }

    /// Truncates every coordinate at `m`.
    pub fn to_region(&self, m: i64) -> RegionTableau {
        assert!(m >= 1, "region tableaux need m >= 1");
        RegionTableau {
            rank: self.rank,
            m,
            entries: self.entries.iter().map(|&k| k.min(m)).collect(),
        }
    }

    /// Aligned plain-text staircase, one row per line.
    pub fn render(&self) -> String {
        render_rows(&self.rows())
    }
}

/// Builds the permutation whose inversion table is `b`: value `i` is placed
/// so that exactly `b[i-1]` smaller values sit to its right.
fn permutation_from_inversion_table(b: &[usize]) -> Vec<usize> {
    let mut sigma: Vec<usize> = Vec::with_capacity(b.len());
    for (idx, &count) in b.iter().enumerate() {
        let value = idx + 1;
        debug_assert!(count <= sigma.len());
        sigma.insert(sigma.len() - count, value);
    }
    sigma
}

/// The truncated Shi coordinates of a dominant region of the `m`-Shi
/// arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegionTableau {
    rank: usize,
    m: i64,
    entries: Vec<i64>,
}

impl RegionTableau {
    pub fn from_rows(m: i64, rows: &[Vec<i64>]) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter(format!(
                "region tableaux need m >= 1, got {m}"
            )));
        }
        let rank = rows.len();
        let entries = rows_to_entries(rank, rows)?;
        let t = Self { rank, m, entries };
        for i in 1..=rank {
            for j in i..=rank {
                let v = t.get(i, j);
                if v < 0 {
                    return Err(Error::NegativeEntry { i, j });
                }
                if v > m {
                    return Err(Error::EntryAboveM { i, j, m });
                }
            }
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[offset(self.rank, i, j)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        entries_to_rows(self.rank, |i, j| self.get(i, j))
    }

    /// Row sums in row order, `sum_j r_{ij}` for `i = 1..=rank`.
    pub fn row_sums(&self) -> Vec<i64> {
        self.rows().iter().map(|row| row.iter().sum()).collect()
    }

    /// Region Shi conditions: below the truncation threshold the alcove rule
    /// applies, at the threshold the coordinate saturates at `m`.
    pub fn shi_conditions_hold(&self) -> bool {
        self.first_shi_violation().is_none()
    }

    fn first_shi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                for l in i..j {
                    let split = self.get(i, l) + self.get(l + 1, j);
                    let whole = self.get(i, j);
                    let ok = if split < self.m {
                        whole - split == 0 || whole - split == 1
                    } else {
                        whole == self.m
                    };
                    if !ok {
                        return Some((i, l, j));
                    }
                }
            }
        }
        None
    }

    /// Reconstructs the Shi coordinates of the region's minimal alcove,
    /// working upwards by root height: a coordinate is the largest of its
    /// own truncated value and every split sum already reconstructed.
    pub fn minimal_alcove(&self) -> Result<AlcoveTableau> {
        if let Some((i, l, j)) = self.first_shi_violation() {
            return Err(Error::RegionShiViolated { i, l, j });
        }
        let mut k = vec![0i64; cell_count(self.rank)];
        for height in 0..self.rank {
            for i in 1..=self.rank - height {
                let j = i + height;
                let mut best = self.get(i, j);
                for l in i..j {
                    best = best.max(k[offset(self.rank, i, l)] + k[offset(self.rank, l + 1, j)]);
                }
                k[offset(self.rank, i, j)] = best;
            }
        }
        let alcove = AlcoveTableau {
            rank: self.rank,
            entries: k,
        };
        debug_assert!(alcove.shi_conditions_hold());
        debug_assert_eq!(alcove.to_region(self.m), *self);
        Ok(alcove)
    }

    pub fn render(&self) -> String {
        render_rows(&self.rows())
    }
}

/// A type C alcove presented as a self-conjugate tableau of odd rank
/// `2n - 1`; the parameter `n` matches balanced abacuses of length `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeCTableau {
    n: usize,
    inner: AlcoveTableau,
}

impl TypeCTableau {
    pub fn new(inner: AlcoveTableau) -> Result<Self> {
        if inner.rank() % 2 == 0 {
            return Err(Error::EvenRank { rank: inner.rank() });
        }
        if !inner.is_self_conjugate() {
            return Err(Error::NotSelfConjugate);
        }
        Ok(Self {
            n: (inner.rank() + 1) / 2,
            inner,
        })
    }

    pub fn from_balanced_abacus(a: &Abacus) -> Result<Self> {
        if !a.is_balanced()? {
            return Err(Error::Unbalanced);
        }
        Self::new(AlcoveTableau::from_abacus(a))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inner(&self) -> &AlcoveTableau {
        &self.inner
    }
}

#[derive(Serialize, Deserialize)]
struct AlcoveTableauRepr {
    rank: usize,
    rows: Vec<Vec<i64>>,
}

impl Serialize for AlcoveTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        AlcoveTableauRepr {
            rank: self.rank,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlcoveTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = AlcoveTableauRepr::deserialize(deserializer)?;
        if repr.rows.len() != repr.rank {
            return Err(D::Error::custom(Error::BadRowCount {
                expected: repr.rank,
                found: repr.rows.len(),
            }));
        }
        AlcoveTableau::from_rows(&repr.rows).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RegionTableauRepr {
    rank: usize,
    m: i64,
    rows: Vec<Vec<i64>>,
}

impl Serialize for RegionTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RegionTableauRepr {
            rank: self.rank,
            m: self.m,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RegionTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RegionTableauRepr::deserialize(deserializer)?;
        if repr.rows.len() != repr.rank {
            return Err(D::Error::custom(Error::BadRowCount {
                expected: repr.rank,
                found: repr.rows.len(),
            }));
        }
        RegionTableau::from_rows(repr.m, &repr.rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{Abacus, BaseLevelEntry, LevelVector};

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

    fn rank4_example() -> (Abacus, AlcoveTableau) {
        let a = abacus(5, &[(5, -2), (2, -1), (4, 0), (3, 1), (1, 2)]);
        let t = AlcoveTableau::from_rows(&[
            vec![3, 2, 1, 0],
            vec![2, 2, 1],
            vec![1, 0],
            vec![0],
        ])
        .unwrap();
        (a, t)
    }

    fn rank7_example() -> (Abacus, AlcoveTableau) {
        let a = abacus(
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
        let t = AlcoveTableau::from_rows(&[
            vec![6, 5, 4, 4, 2, 1, 1],
            vec![5, 4, 3, 3, 1, 0],
            vec![4, 3, 3, 2, 0],
            vec![4, 3, 2, 1],
            vec![2, 1, 0],
            vec![1, 0],
            vec![1],
        ])
        .unwrap();
        (a, t)
    }

    #[test]
    fn tableau_from_abacus_examples() {
        let (a, t) = rank4_example();
        assert_eq!(AlcoveTableau::from_abacus(&a), t);
        let zero = AlcoveTableau::from_abacus(&Abacus::identity(5));
        assert!(zero.rows().iter().flatten().all(|&k| k == 0));
        let (a7, t7) = rank7_example();
        assert_eq!(AlcoveTableau::from_abacus(&a7), t7);
    }

    #[test]
    fn abacus_from_tableau_examples() {
        let (a, t) = rank4_example();
        assert_eq!(t.inversion_counts(), vec![0, 0, 1, 3]);
        assert_eq!(t.normalized_window().unwrap().values(), &[0, 2, 9, 13, 16]);
        assert_eq!(t.to_abacus().unwrap(), a);
        let zero = AlcoveTableau::from_rows(&[vec![0, 0, 0], vec![0, 0], vec![0]]).unwrap();
        assert_eq!(zero.to_abacus().unwrap(), Abacus::identity(4));
        let (a7, t7) = rank7_example();
        assert_eq!(t7.to_abacus().unwrap(), a7);
    }

    #[test]
    fn conjugation_examples() {
        let (_, t7) = rank7_example();
        assert!(t7.is_self_conjugate());
        let zero = AlcoveTableau::from_rows(&[vec![0, 0], vec![0]]).unwrap();
        assert!(zero.is_self_conjugate());
        let (_, t4) = rank4_example();
        assert!(!t4.is_self_conjugate());
        assert_eq!(t4.conjugate().conjugate(), t4);
    }

    #[test]
    fn region_from_alcove_examples() {
        let alcove =
            AlcoveTableau::from_rows(&[vec![4, 2], vec![2]]).unwrap();
        let region = alcove.to_region(3);
        assert_eq!(region.rows(), vec![vec![3, 2], vec![2]]);
        let (_, t7) = rank7_example();
        assert_eq!(
            t7.to_region(3).rows(),
            vec![
                vec![3, 3, 3, 3, 2, 1, 1],
                vec![3, 3, 3, 3, 1, 0],
                vec![3, 3, 3, 2, 0],
                vec![3, 3, 2, 1],
                vec![2, 1, 0],
                vec![1, 0],
                vec![1],
            ]
        );
    }

    #[test]
    fn alcove_from_region_examples() {
        let region = RegionTableau::from_rows(3, &[vec![3, 2], vec![2]]).unwrap();
        assert_eq!(
            region.minimal_alcove().unwrap().rows(),
            vec![vec![4, 2], vec![2]]
        );
        let zero = RegionTableau::from_rows(2, &[vec![0, 0], vec![0]]).unwrap();
        assert_eq!(
            zero.minimal_alcove().unwrap().rows(),
            vec![vec![0, 0], vec![0]]
        );
        // saturated coordinate strictly above every split sum
        let region = RegionTableau::from_rows(3, &[vec![3, 1], vec![1]]).unwrap();
        assert_eq!(
            region.minimal_alcove().unwrap().rows(),
            vec![vec![3, 1], vec![1]]
        );
    }

    #[test]
    fn shi_condition_examples() {
        let (_, t4) = rank4_example();
        assert!(t4.shi_conditions_hold());
        let bad = AlcoveTableau::from_rows(&[vec![0, 1], vec![0]]).unwrap();
        assert!(!bad.shi_conditions_hold());
        assert_eq!(
            bad.to_abacus(),
            Err(Error::AlcoveShiViolated { i: 1, l: 1, j: 2 })
        );
        let region = RegionTableau::from_rows(3, &[vec![3, 1], vec![1]]).unwrap();
        assert!(region.shi_conditions_hold());
        let bad_region = RegionTableau::from_rows(2, &[vec![0, 2], vec![2]]).unwrap();
        assert!(!bad_region.shi_conditions_hold());
    }

    #[test]
    fn window_choice_is_irrelevant() {
        let (a, t) = rank4_example();
        for c in -7..=7 {
            let shifted = a.k_shift(c).unwrap();
            assert_eq!(AlcoveTableau::from_shifted_window(&shifted), t);
        }
    }

    #[test]
    fn type_c_wrapper() {
        let (a7, t7) = rank7_example();
        let c = TypeCTableau::from_balanced_abacus(&a7).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.inner(), &t7);
        let (_, t4) = rank4_example();
        assert_eq!(TypeCTableau::new(t4), Err(Error::EvenRank { rank: 4 }));
        let lopsided = abacus(4, &[(1, -1), (2, 0), (4, 0), (3, 1)]);
        assert_eq!(
            TypeCTableau::from_balanced_abacus(&lopsided),
            Err(Error::Unbalanced)
        );
    }

    #[test]
    fn balanced_iff_self_conjugate_small() {
        // all length-4 abacuses with levels in [-2, 2]
        let mut checked = 0;
        for b1 in -2i64..=2 {
            for b2 in -2i64..=2 {
                for b3 in -2i64..=2 {
                    let b4 = -(b1 + b2 + b3);
                    if b4.abs() > 2 {
                        continue;
                    }
                    let a =
                        Abacus::from_level_vector(&LevelVector::new(vec![b1, b2, b3, b4])).unwrap();
                    let t = AlcoveTableau::from_abacus(&a);
                    assert_eq!(a.is_balanced().unwrap(), t.is_self_conjugate());
                    checked += 1;
                }
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn render_layout() {
        let (_, t4) = rank4_example();
        assert_eq!(t4.render(), "3 2 1 0\n2 2 1\n1 0\n0");
    }

    #[test]
    fn serde_round_trip() {
        let (_, t4) = rank4_example();
        let json = serde_json::to_string(&t4).unwrap();
        assert_eq!(
            json,
            r#"{"rank":4,"rows":[[3,2,1,0],[2,2,1],[1,0],[0]]}"#
        );
        assert_eq!(serde_json::from_str::<AlcoveTableau>(&json).unwrap(), t4);
        let r = t4.to_region(2);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<RegionTableau>(&json).unwrap(), r);
        assert!(serde_json::from_str::<AlcoveTableau>(r#"{"rank":2,"rows":[[1,-1],[0]]}"#).is_err());
    }
}
