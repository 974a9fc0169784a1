use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Homological data of a cobordism `N: S -> S'` entering the evenness congruence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub beta0_n: u64,
    pub beta1_n: u64,
    /// `dim(j_* l(S) + j'_* l(S'))` inside `H_1(N; Q)`.
    pub dim_lag_sum: u64,
    pub beta0_source: u64,
    pub beta1_target: u64,
    pub beta0_target: u64,
    pub epsilon: u8,
    /// For each component of `N`, the target components it meets.
    pub component_incidence: Vec<Vec<usize>>,
}

/// Betti data of the closed manifold `K(N)` obtained by capping off.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CappedBetti {
    pub beta0_target: u64,
    pub beta1_target: u64,
    pub beta0_k: u64,
    pub beta1_k: u64,
}

impl HomologyProfile {
    /// A closed manifold with the given Betti numbers.
    pub fn closed(beta0: u64, beta1: u64) -> HomologyProfile {
        HomologyProfile {
            beta0_n: beta0,
            beta1_n: beta1,
            component_incidence: vec![Vec::new(); beta0 as usize],
            ..Default::default()
        }
    }

    /// Genus-`g` handlebody viewed as a cobordism from the empty surface, with the
    /// kernel Lagrangian on its boundary.
    pub fn handlebody(genus: u64) -> HomologyProfile {
        HomologyProfile {
            beta0_n: 1,
            beta1_n: genus,
            dim_lag_sum: 0,
            beta0_source: 0,
            beta1_target: 2 * genus,
            beta0_target: 1,
            epsilon: 1,
            component_incidence: vec![vec![0]],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.epsilon > 1 {
            return Err(Error::OutOfRange {
                what: "epsilon must be 0 or 1",
                value: self.epsilon as i64,
            });
        }
        if !self.beta1_target.is_multiple_of(2) {
            return Err(Error::OutOfRange {
                what: "first Betti number of a closed surface must be even",
                value: self.beta1_target as i64,
            });
        }
        Ok(())
    }
}

/// Every component of `N` meets the target surface.
pub fn is_targeted(profile: &HomologyProfile) -> bool {
    profile.component_incidence.iter().all(|c| !c.is_empty())
}

/// The evenness congruence evaluated mod 2.
pub fn is_even(profile: &HomologyProfile, w: i64) -> Result<bool> {
    profile.validate()?;
    let rhs = profile.dim_lag_sum
        + profile.beta1_n
        + profile.beta0_n
        + profile.beta0_source
        + profile.beta1_target / 2
        + profile.epsilon as u64;
    Ok(w.rem_euclid(2) as u64 == rhs % 2)
}

/// The same congruence expressed through the capped-off manifold.
pub fn is_even_capped(b: &CappedBetti, w: i64) -> Result<bool> {
    if !b.beta1_target.is_multiple_of(2) {
        return Err(Error::OutOfRange {
            what: "first Betti number of a closed surface must be even",
            value: b.beta1_target as i64,
        });
    }
    let rhs = b.beta0_target + b.beta1_target / 2 + b.beta0_k + b.beta1_k;
    Ok(w.rem_euclid(2) as u64 == rhs % 2)
}

/// `d w(M) - w(M~)`.
pub fn defect(d: i64, w_base: i64, w_cover: i64) -> i64 {
    d * w_base - w_cover
}

/// Parity relation between the defect of a `Z_d` cover and Betti numbers.
pub fn defect_parity(d: i64, beta1_base: u64, beta1_cover: u64, def: i64) -> bool {
    let rhs = d * (beta1_base as i64 + 1) + beta1_cover as i64 + 1;
    (def - rhs).rem_euclid(2) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targetedness() {
        assert!(is_targeted(&HomologyProfile::default()));
        assert!(!is_targeted(&HomologyProfile::closed(1, 0)));
        assert!(is_targeted(&HomologyProfile::handlebody(2)));
    }

    #[test]
    fn handlebody_and_closed_examples() {
        for g in 0..4 {
            assert!(is_even(&HomologyProfile::handlebody(g), 0).unwrap());
            let k = CappedBetti {
                beta0_target: 1,
                beta1_target: 2 * g,
                beta0_k: 1,
                beta1_k: g,
            };
            assert!(is_even_capped(&k, 0).unwrap());
        }
        for b1 in 0..4u64 {
            for w in -3..3i64 {
                let want = (w - b1 as i64 - 1).rem_euclid(2) == 0;
                assert_eq!(is_even(&HomologyProfile::closed(1, b1), w).unwrap(), want);
                let k = CappedBetti {
                    beta0_k: 1,
                    beta1_k: b1,
                    ..Default::default()
                };
                assert_eq!(is_even_capped(&k, w).unwrap(), want);
            }
        }
    }

    #[test]
    fn odd_surface_betti_rejected() {
        let mut p = HomologyProfile::handlebody(1);
        p.beta1_target = 3;
        assert!(is_even(&p, 0).is_err());
    }

    #[test]
    fn defect_examples() {
        assert_eq!(defect(1, 5, 5), 0);
        assert_eq!(defect(3, 0, 0), 0);
        assert!(defect_parity(1, 2, 2, 0));
        assert!(defect_parity(2, 1, 1, 0));
        assert!(!defect_parity(2, 1, 2, 0));
    }
}
