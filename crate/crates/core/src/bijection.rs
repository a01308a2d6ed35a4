//! The indexed bijection between dominant regions of types A and C.
//!
//! Shifting an abacus `w` of length `n` by an integer `k` and expanding the
//! result antisymmetrically yields a balanced abacus of length `2n`; the map
//! `psi(w, k)` is a bijection onto the dominant type C alcoves. For an
//! `m`-minimal `w` exactly `m*n + 1` shifts keep the expansion `m`-minimal;
//! listing this admissible set in increasing order turns `psi` into the
//! indexed correspondence `(region, i) <-> type C region`, and forgetting
//! the index leaves a surjection with fibers of size `m*n + 1`.

use crate::affine::{Abacus, LevelVector};
use crate::error::{Error, Result};
use crate::minimality::{is_m_minimal_abacus, is_m_minimal_type_c};

/// Expands the `k`-shift of `w` into a balanced abacus of length `2n`.
pub fn psi(w: &Abacus, k: i64) -> Result<Abacus> {
    w.k_shift(k)?.antisymmetric_expansion()
}

/// Recovers `(w, k)` from a balanced abacus: `k` is the sum of the lower
/// half of the level vector, and the level vector of `w` is the lower half
/// rotated and re-levelled so that it sums to zero again.
pub fn psi_inverse(wbar: &Abacus) -> Result<(Abacus, i64)> {
    if !wbar.is_balanced()? {
        return Err(Error::Unbalanced);
    }
    let n = wbar.n() / 2;
    let beta = wbar.level_vector();
    let half = &beta.beta()[..n];
    let k: i64 = half.iter().sum();
    let n_i = n as i64;
    let r = (-k).rem_euclid(n_i);
    let level = -(k + r) / n_i;
    let cut = n - r as usize;
    let mut lower = Vec::with_capacity(n);
    lower.extend(half[cut..].iter().map(|b| b + level + 1));
    lower.extend(half[..cut].iter().map(|b| b + level));
    let w = Abacus::from_level_vector(&LevelVector::new(lower))?;
    debug_assert_eq!(psi(&w, k).as_ref(), Ok(wbar));
    Ok((w, k))
}

/// The shifts under which the expansion of an `m`-minimal abacus stays
/// `m`-minimal, in increasing order. Always `m * n + 1` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSet {
    n: usize,
    m: i64,
    w: Abacus,
    ks: Vec<i64>,
}

impl AdmissibleSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn w(&self) -> &Abacus {
        &self.w
    }

    pub fn ks(&self) -> &[i64] {
        &self.ks
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    /// The `index`-th smallest admissible shift, 1-based.
    pub fn get(&self, index: usize) -> Result<i64> {
        if index < 1 || index > self.ks.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.ks.len(),
            });
        }
        Ok(self.ks[index - 1])
    }

    /// 1-based position of `k` in the sorted set.
    pub fn index_of(&self, k: i64) -> Result<usize> {
        self.ks
            .binary_search(&k)
            .map(|idx| idx + 1)
            .map_err(|_| Error::ShiftNotAdmissible { k })
    }

    pub fn contains(&self, k: i64) -> bool {
        self.ks.binary_search(&k).is_ok()
    }
}

/// Computes the admissible set of an `m`-minimal abacus directly from the
/// level vector: writing `k = r + n*l`, the residue class `r = 0` admits
/// `-floor(m/2) - beta_n <= l <= floor((m+1)/2) - beta_1`, and each residue
/// `1 <= r <= n-1` admits
/// `-beta_{n-r} - floor(m/2) <= l <= -beta_{n-r+1} + floor((m-1)/2)`.
/// Empty ranges contribute nothing. Non-minimal input is rejected.
pub fn admissible_set(w: &Abacus, m: i64) -> Result<AdmissibleSet> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "admissible sets need m >= 1, got {m}"
        )));
    }
    let report = is_m_minimal_abacus(w, m);
    if !report.is_minimal() {
        return Err(Error::NotMinimal {
            m,
            detail: report.summary(),
        });
    }
    let n = w.n();
    let n_i = n as i64;
    let beta = w.level_vector();
    let beta = beta.beta();
    let mut ks = Vec::with_capacity((m as usize) * n + 1);
    let lo = -(m / 2) - beta[n - 1];
    let hi = (m + 1) / 2 - beta[0];
    for l in lo..=hi {
        ks.push(n_i * l);
    }
    for r in 1..n_i {
        let lo = -beta[n - 1 - r as usize] - m / 2;
        let hi = -beta[n - r as usize] + (m - 1) / 2;
        for l in lo..=hi {
            ks.push(r + n_i * l);
        }
    }
    ks.sort_unstable();
    assert_eq!(
        ks.len(),
        (m as usize) * n + 1,
        "admissible set must have m*n + 1 shifts"
    );
    Ok(AdmissibleSet {
        n,
        m,
        w: w.clone(),
        ks,
    })
}

/// Sends `(w, index)` to the type C minimal alcove `psi(w, k_index)`, where
/// `k_index` is the `index`-th smallest admissible shift.
pub fn bj1_forward(w: &Abacus, index: usize, m: i64) -> Result<Abacus> {
    let ks = admissible_set(w, m)?;
    let k = ks.get(index)?;
    let image = psi(w, k)?;
    debug_assert!(is_m_minimal_type_c(&image, m)
        .is_ok_and(|report| report.is_minimal()));
    Ok(image)
}

/// Inverts [`bj1_forward`]: splits a balanced `m`-minimal abacus into
/// `(w, k)` and locates `k` inside the admissible set of `w`.
pub fn bj1_inverse(wbar: &Abacus, m: i64) -> Result<(Abacus, usize)> {
    let report = is_m_minimal_type_c(wbar, m)?;
    if !report.is_minimal() {
        return Err(Error::NotMinimal {
            m,
            detail: report.summary(),
        });
    }
    let (w, k) = psi_inverse(wbar)?;
    let ks = admissible_set(&w, m)?;
    let index = ks.index_of(k)?;
    Ok((w, index))
}

/// Forgets the index of [`bj1_inverse`]; a surjection onto the type A
/// regions whose fibers all have `m*n + 1` elements.
pub fn phi(wbar: &Abacus, m: i64) -> Result<Abacus> {
    bj1_inverse(wbar, m).map(|(w, _)| w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{BaseLevelEntry, LevelVector};

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

    fn fig_w() -> Abacus {
        abacus(4, &[(4, -3), (1, -1), (2, 2), (3, 2)])
    }

    fn fig_wbar() -> Abacus {
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
                (7, 3),
            ],
        )
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&fig_w(), -2).unwrap(), fig_wbar());
        assert_eq!(
            psi(&fig_w(), -1).unwrap(),
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
            psi(&Abacus::identity(3), 0).unwrap(),
            Abacus::identity(6)
        );
    }

    #[test]
    fn psi_inverse_examples() {
        assert_eq!(psi_inverse(&fig_wbar()).unwrap(), (fig_w(), -2));
        assert_eq!(
            psi_inverse(&Abacus::identity(6)).unwrap(),
            (Abacus::identity(3), 0)
        );
        let other = abacus(
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
        assert_eq!(psi_inverse(&other).unwrap(), (fig_w(), -1));
        let lopsided = abacus(4, &[(1, -1), (2, 0), (4, 0), (3, 1)]);
        assert_eq!(psi_inverse(&lopsided), Err(Error::Unbalanced));
    }

    #[test]
    fn admissible_set_examples() {
        let w = abacus(4, &[(3, -1), (1, 0), (2, 0), (4, 1)]);
        assert_eq!(
            admissible_set(&w, 2).unwrap().ks(),
            &[-8, -4, -2, -1, 0, 2, 3, 4, 6]
        );
        assert_eq!(
            admissible_set(&fig_w(), 3).unwrap().ks(),
            &[-11, -10, -7, -6, -3, -2, 1, 5, 8, 9, 12, 13, 17]
        );
        assert_eq!(admissible_set(&Abacus::identity(2), 1).unwrap().ks(), &[0, 1, 2]);
    }

    #[test]
    fn admissible_set_rejects_non_minimal() {
        // beta = (2, -2) has wraparound 2 - (-2) - 1 = 3 > 2
        let w = Abacus::from_level_vector(&LevelVector::new(vec![2, -2])).unwrap();
        assert!(matches!(
            admissible_set(&w, 2),
            Err(Error::NotMinimal { m: 2, .. })
        ));
    }

    #[test]
    fn bj1_examples() {
        assert_eq!(bj1_forward(&fig_w(), 6, 3).unwrap(), fig_wbar());
        assert_eq!(
            bj1_forward(&Abacus::identity(2), 1, 1).unwrap(),
            Abacus::identity(4)
        );
        let w = abacus(4, &[(3, -1), (1, 0), (2, 0), (4, 1)]);
        assert_eq!(
            bj1_forward(&w, 1, 2).unwrap(),
            abacus(
                8,
                &[
                    (3, -3),
                    (1, -2),
                    (2, -2),
                    (4, -1),
                    (5, 1),
                    (7, 2),
                    (8, 2),
                    (6, 3)
                ]
            )
        );
        assert!(matches!(
            bj1_forward(&fig_w(), 14, 3),
            Err(Error::IndexOutOfRange { index: 14, len: 13 })
        ));
    }

    #[test]
    fn bj1_inverse_examples() {
        assert_eq!(bj1_inverse(&fig_wbar(), 3).unwrap(), (fig_w(), 6));
        let identity = Abacus::identity(4);
        let (w, i) = bj1_inverse(&identity, 1).unwrap();
        assert_eq!(w, Abacus::identity(2));
        assert_eq!(admissible_set(&w, 1).unwrap().get(i).unwrap(), 0);
        // largest admissible shift of the reference instance
        let w = abacus(4, &[(3, -1), (1, 0), (2, 0), (4, 1)]);
        let t9 = psi(&w, 6).unwrap();
        assert_eq!(
            t9,
            abacus(
                8,
                &[
                    (7, -3),
                    (5, -1),
                    (6, -1),
                    (8, -1),
                    (1, 1),
                    (3, 1),
                    (4, 1),
                    (2, 3)
                ]
            )
        );
        assert_eq!(bj1_inverse(&t9, 2).unwrap(), (w, 9));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&fig_wbar(), 3).unwrap(), fig_w());
        assert_eq!(phi(&Abacus::identity(4), 1).unwrap(), Abacus::identity(2));
        // unbalanced input is a domain rejection
        let lopsided = abacus(4, &[(1, -1), (2, 0), (4, 0), (3, 1)]);
        assert_eq!(phi(&lopsided, 1), Err(Error::Unbalanced));
    }
}
