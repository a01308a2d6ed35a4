//! Lattice paths, Dyck paths and the rotation bijection between them.
//!
//! A north-east path in an `n x mn` rectangle is stored as its step sequence
//! `(s_1, ..., s_n)`: `s_i` east steps come before the `i`-th north step, so
//! `0 <= s_1 <= ... <= s_n <= mn`. Dyck paths additionally satisfy
//! `s_i <= m(i-1)`. Rotating at a north step turns every rectangle path into
//! a Dyck path for exactly one rotation index, which pairs the rectangle
//! paths with `(Dyck path, shift)` couples; the row-sum correspondence then
//! carries Dyck paths onto region tableaux.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::minimality::{enumerate_regions_a_with_limit, DEFAULT_ENUMERATION_LIMIT};
use crate::tableau::{AlcoveTableau, RegionTableau};

/// A north-east path from `(0,0)` to `(mn, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    n: usize,
    m: i64,
    steps: Vec<i64>,
}

impl LatticePath {
    pub fn new(n: usize, m: i64, steps: Vec<i64>) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::InvalidParameter(format!(
                "paths need n >= 1 and m >= 1, got n = {n}, m = {m}"
            )));
        }
        if steps.len() != n {
            return Err(Error::WrongLength {
                expected: n,
                found: steps.len(),
            });
        }
        let max = m * n as i64;
        let mut prev = 0i64;
        for (position, &s) in steps.iter().enumerate() {
            if s < 0 || s > max {
                return Err(Error::StepOutOfRange {
                    position: position + 1,
                    value: s,
                    max,
                });
            }
            if s < prev {
                return Err(Error::StepsNotMonotone {
                    position: position + 1,
                });
            }
            prev = s;
        }
        Ok(Self { n, m, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    fn rotated_steps(&self, t: usize) -> Vec<i64> {
        let wrap = self.m * self.n as i64 + 1;
        let pivot = self.steps[t];
        let mut out = Vec::with_capacity(self.n);
        out.extend(self.steps[t..].iter().map(|s| s - pivot));
        out.extend(self.steps[..t].iter().map(|s| s + wrap - pivot));
        out
    }

    /// Drops the first `t` north steps and wraps them past the end: the new
    /// sequence is `(s_{t+1}, ..., s_n, s_1 + mn + 1, ..., s_t + mn + 1)`
    /// rebased at `s_{t+1}`. When a wrapped step would leave the rectangle
    /// (which happens exactly when `s_t = s_{t+1}`), the rotation is not a
    /// rectangle path and an error is returned.
    pub fn rotate(&self, t: usize) -> Result<LatticePath> {
        if t >= self.n {
            return Err(Error::RotationOutOfRange {
                t,
                max: self.n - 1,
            });
        }
        LatticePath::new(self.n, self.m, self.rotated_steps(t))
    }

    fn steps_are_dyck(steps: &[i64], m: i64) -> std::result::Result<(), Error> {
        for (position, &s) in steps.iter().enumerate() {
            let bound = m * position as i64;
            if s > bound {
                return Err(Error::NotDyck {
                    position: position + 1,
                    value: s,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// The unique `t` in `0..n` whose rotation is a Dyck path. All `n`
    /// candidates are tested; anything other than exactly one hit would
    /// contradict the rotation lemma, so it is treated as a bug.
    pub fn find_dyck_rotation(&self) -> usize {
        let hits: Vec<usize> = (0..self.n)
            .filter(|&t| Self::steps_are_dyck(&self.rotated_steps(t), self.m).is_ok())
            .collect();
        assert_eq!(
            hits.len(),
            1,
            "expected exactly one Dyck rotation, found {:?} for {:?}",
            hits,
            self.steps
        );
        hits[0]
    }

    /// The path as a word in north and east letters.
    pub fn to_letter_word(&self) -> String {
        let mut word = String::new();
        let mut x = 0i64;
        for &s in &self.steps {
            for _ in x..s {
                word.push('E');
            }
            word.push('N');
            x = s;
        }
        for _ in x..self.m * self.n as i64 {
            word.push('E');
        }
        word
    }
}

/// A rectangle path that never goes below the diagonal: `s_i <= m(i-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    path: LatticePath,
}

impl DyckPath {
    pub fn new(path: LatticePath) -> Result<Self> {
        LatticePath::steps_are_dyck(&path.steps, path.m)?;
        Ok(Self { path })
    }

    pub fn from_steps(n: usize, m: i64, steps: Vec<i64>) -> Result<Self> {
        Self::new(LatticePath::new(n, m, steps)?)
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn n(&self) -> usize {
        self.path.n
    }

    pub fn m(&self) -> i64 {
        self.path.m
    }

    pub fn steps(&self) -> &[i64] {
        &self.path.steps
    }

    /// Reads the step sequence backwards, dropping the leading zero step:
    /// `lambda_i = s_{n+1-i}`, a weakly decreasing vector of length `n - 1`.
    pub fn row_sums(&self) -> Vec<i64> {
        self.path.steps[1..].iter().rev().copied().collect()
    }

    /// The unique region tableau of rank `n - 1` whose `i`-th row sums to
    /// `lambda_i`, found by scanning all regions. Zero or several matches
    /// would contradict the row-sum correspondence and abort.
    pub fn to_region_tableau(&self) -> Result<RegionTableau> {
        self.to_region_tableau_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn to_region_tableau_with_limit(&self, limit: u64) -> Result<RegionTableau> {
        let target = self.row_sums();
        if self.path.n == 1 {
            return RegionTableau::from_rows(self.path.m, &[]);
        }
        let mut found: Option<RegionTableau> = None;
        for region in enumerate_regions_a_with_limit(self.path.n, self.path.m, limit)? {
            let tableau = AlcoveTableau::from_abacus(&region).to_region(self.path.m);
            if tableau.row_sums() == target {
                assert!(
                    found.is_none(),
                    "row sums {target:?} match more than one region tableau"
                );
                found = Some(tableau);
            }
        }
        match found {
            Some(tableau) => Ok(tableau),
            None => panic!("row sums {target:?} match no region tableau"),
        }
    }
}

/// Rotates `p` onto its Dyck representative and remembers the pivot step:
/// the pair `(d_t(p), s_{t+1})` with `t` the unique Dyck rotation index.
pub fn bj2_forward(p: &LatticePath) -> (DyckPath, i64) {
    let t = p.find_dyck_rotation();
    let dyck = DyckPath::new(p.rotate(t).expect("the Dyck rotation fits the rectangle"))
        .expect("rotation was tested to be Dyck");
    (dyck, p.steps[t])
}

/// Rebuilds the rectangle path from `(d, k)`: the largest prefix with
/// `s_j + k <= mn` wraps to the back, everything else moves to the front
/// shifted down by `mn + 1`.
pub fn bj2_inverse(d: &DyckPath, k: i64) -> Result<LatticePath> {
    let n = d.n();
    let m = d.m();
    let max = m * n as i64;
    if k < 0 || k > max {
        return Err(Error::ShiftOutOfRange { k, max });
    }
    let steps = d.steps();
    let cut = steps.iter().take_while(|&&s| s + k <= max).count();
    debug_assert!(cut >= 1, "s_1 = 0 and k <= mn always keep the first step");
    let mut out = Vec::with_capacity(n);
    out.extend(steps[cut..].iter().map(|s| s + k - max - 1));
    out.extend(steps[..cut].iter().map(|s| s + k));
    let path = LatticePath::new(n, m, out)?;
    debug_assert_eq!(bj2_forward(&path), (d.clone(), k));
    Ok(path)
}

/// All step sequences in the `n x mn` rectangle, lexicographic.
pub fn enumerate_lattice_paths(n: usize, m: i64) -> Result<PathIter> {
    enumerate_lattice_paths_with_limit(n, m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_lattice_paths_with_limit(n: usize, m: i64, limit: u64) -> Result<PathIter> {
    PathIter::new(n, m, false, limit)
}

/// All Dyck step sequences of height `n`, lexicographic.
pub fn enumerate_dyck_paths(n: usize, m: i64) -> Result<DyckIter> {
    enumerate_dyck_paths_with_limit(n, m, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_dyck_paths_with_limit(n: usize, m: i64, limit: u64) -> Result<DyckIter> {
    Ok(DyckIter {
        inner: PathIter::new(n, m, true, limit)?,
    })
}

/// Iterator adapter wrapping the odometer's Dyck-capped output.
pub struct DyckIter {
    inner: PathIter,
}

impl Iterator for DyckIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        self.inner.next().map(|path| DyckPath { path })
    }
}

/// Odometer over monotone step sequences, with the per-position cap of the
/// rectangle or the Dyck staircase.
pub struct PathIter {
    n: usize,
    m: i64,
    dyck: bool,
    steps: Vec<i64>,
    exhausted: bool,
    started: bool,
}

impl PathIter {
    fn new(n: usize, m: i64, dyck: bool, limit: u64) -> Result<Self> {
        if n < 1 || m < 1 {
            return Err(Error::InvalidParameter(format!(
                "path enumeration needs n >= 1 and m >= 1, got n = {n}, m = {m}"
            )));
        }
        let count = if dyck {
            crate::minimality::catalan_a(n, m)
        } else {
            crate::minimality::catalan_c(n, m)
        };
        if count > num_bigint::BigUint::from(limit) {
            return Err(Error::ResourceGuard {
                count: count.to_string(),
                limit,
            });
        }
        Ok(Self {
            n,
            m,
            dyck,
            steps: vec![0; n],
            exhausted: false,
            started: false,
        })
    }

    fn cap(&self, position: usize) -> i64 {
        if self.dyck {
            self.m * position as i64
        } else {
            self.m * self.n as i64
        }
    }

    fn emit(&self) -> LatticePath {
        LatticePath::new(self.n, self.m, self.steps.clone()).expect("odometer stays in range")
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.emit());
        }
        let mut position = self.n;
        loop {
            if position == 0 {
                self.exhausted = true;
                return None;
            }
            position -= 1;
            if self.steps[position] < self.cap(position) {
                self.steps[position] += 1;
                let floor = self.steps[position];
                for later in position + 1..self.n {
                    self.steps[later] = floor;
                }
                return Some(self.emit());
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    n: usize,
    m: i64,
    steps: Vec<i64>,
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PathRepr {
            n: self.n,
            m: self.m,
            steps: self.steps.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PathRepr::deserialize(deserializer)?;
        LatticePath::new(repr.n, repr.m, repr.steps).map_err(D::Error::custom)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.path.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        DyckPath::new(LatticePath::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize, m: i64, steps: &[i64]) -> LatticePath {
        LatticePath::new(n, m, steps.to_vec()).unwrap()
    }

    #[test]
    fn rotation_examples() {
        let p = path(5, 3, &[1, 4, 11, 12, 14]);
        assert_eq!(p.rotate(2).unwrap().steps(), &[0, 1, 3, 6, 9]);
        assert_eq!(p.rotate(3).unwrap().steps(), &[0, 2, 5, 8, 15]);
        let dyck = path(4, 2, &[0, 1, 3, 6]);
        assert_eq!(dyck.rotate(0).unwrap(), dyck);
        assert!(matches!(
            p.rotate(5),
            Err(Error::RotationOutOfRange { t: 5, max: 4 })
        ));
        // wrapping past an equal pair of steps leaves the rectangle
        let flat = path(2, 1, &[2, 2]);
        assert!(matches!(
            flat.rotate(1),
            Err(Error::StepOutOfRange { value: 3, .. })
        ));
    }

    #[test]
    fn find_dyck_rotation_examples() {
        assert_eq!(path(5, 3, &[1, 4, 11, 12, 14]).find_dyck_rotation(), 2);
        assert_eq!(path(4, 2, &[0, 1, 3, 6]).find_dyck_rotation(), 0);
        assert_eq!(path(2, 1, &[2, 2]).find_dyck_rotation(), 0);
        assert_eq!(path(2, 1, &[2, 2]).rotate(0).unwrap().steps(), &[0, 0]);
    }

    #[test]
    fn bj2_forward_examples() {
        let (d, k) = bj2_forward(&path(5, 3, &[1, 4, 11, 12, 14]));
        assert_eq!(d.steps(), &[0, 1, 3, 6, 9]);
        assert_eq!(k, 11);
        let dyck = path(4, 2, &[0, 2, 2, 5]);
        let (d, k) = bj2_forward(&dyck);
        assert_eq!(d.path(), &dyck);
        assert_eq!(k, 0);
        let (d, k) = bj2_forward(&path(2, 1, &[2, 2]));
        assert_eq!((d.steps(), k), (&[0i64, 0][..], 2));
    }

    #[test]
    fn bj2_inverse_examples() {
        let d = DyckPath::from_steps(5, 3, vec![0, 1, 3, 6, 9]).unwrap();
        assert_eq!(bj2_inverse(&d, 11).unwrap().steps(), &[1, 4, 11, 12, 14]);
        assert_eq!(bj2_inverse(&d, 0).unwrap(), *d.path());
        let d = DyckPath::from_steps(2, 1, vec![0, 0]).unwrap();
        assert_eq!(bj2_inverse(&d, 2).unwrap().steps(), &[2, 2]);
        assert!(matches!(
            bj2_inverse(&d, 3),
            Err(Error::ShiftOutOfRange { k: 3, max: 2 })
        ));
    }

    #[test]
    fn row_sum_examples() {
        let d = DyckPath::from_steps(5, 3, vec![0, 1, 3, 6, 9]).unwrap();
        assert_eq!(d.row_sums(), vec![9, 6, 3, 1]);
        let zero = DyckPath::from_steps(4, 2, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(zero.row_sums(), vec![0, 0, 0]);
        let d = DyckPath::from_steps(3, 1, vec![0, 0, 1]).unwrap();
        assert_eq!(d.row_sums(), vec![1, 0]);
    }

    #[test]
    fn region_tableau_examples() {
        let d = DyckPath::from_steps(5, 3, vec![0, 1, 3, 6, 9]).unwrap();
        let region = d.to_region_tableau().unwrap();
        assert_eq!(
            region.rows(),
            vec![vec![3, 3, 2, 1], vec![3, 2, 1], vec![2, 1], vec![1]]
        );
        assert_eq!(region.row_sums(), vec![9, 6, 3, 1]);
        assert_eq!(
            region.minimal_alcove().unwrap().rows(),
            vec![vec![4, 3, 2, 1], vec![3, 2, 1], vec![2, 1], vec![1]]
        );
        let zero = DyckPath::from_steps(3, 2, vec![0, 0, 0]).unwrap();
        assert!(zero
            .to_region_tableau()
            .unwrap()
            .rows()
            .iter()
            .flatten()
            .all(|&r| r == 0));
        let d = DyckPath::from_steps(3, 1, vec![0, 0, 1]).unwrap();
        assert_eq!(
            d.to_region_tableau().unwrap().rows(),
            vec![vec![1, 0], vec![0]]
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_lattice_paths(2, 1).unwrap().count(), 6);
        assert_eq!(enumerate_dyck_paths(2, 1).unwrap().count(), 2);
        for m in 1..=4 {
            assert_eq!(enumerate_lattice_paths(1, m).unwrap().count(), m as usize + 1);
            assert_eq!(enumerate_dyck_paths(1, m).unwrap().count(), 1);
        }
        assert_eq!(enumerate_lattice_paths(5, 3).unwrap().count(), 15504);
        assert_eq!(enumerate_dyck_paths(5, 3).unwrap().count(), 969);
    }

    #[test]
    fn letter_words() {
        assert_eq!(
            path(5, 3, &[1, 4, 11, 12, 14]).to_letter_word(),
            "ENEEENEEEEEEENENEENE"
        );
        assert_eq!(path(1, 2, &[0]).to_letter_word(), "NEE");
    }

    #[test]
    fn serde_round_trip() {
        let p = path(5, 3, &[1, 4, 11, 12, 14]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":5,"m":3,"steps":[1,4,11,12,14]}"#);
        assert_eq!(serde_json::from_str::<LatticePath>(&json).unwrap(), p);
        assert!(serde_json::from_str::<LatticePath>(r#"{"n":2,"m":1,"steps":[2,1]}"#).is_err());
        assert!(serde_json::from_str::<DyckPath>(r#"{"n":2,"m":1,"steps":[1,1]}"#).is_err());
    }
}
