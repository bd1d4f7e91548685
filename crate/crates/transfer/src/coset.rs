//! Left/right coset decompositions, representative maps, and coset permutations.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A complete set of coset representatives with the g -> (representative,
/// H-factor) lookup. For a left system g = reps[rep_of[g]] * factor_of[g];
/// for a right system g = factor_of[g] * reps[rep_of[g]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    pub side: Side,
    pub group: Arc<FiniteGroup>,
    pub subgroup: SubgroupRef,
    pub reps: Vec<usize>,
    pub rep_of: Vec<usize>,
    pub factor_of: Vec<usize>,
}

/// The permutation a group element induces on the cosets, with its parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPermutation {
    pub mapping: Vec<usize>,
    pub sign: i8,
}

/// Parity of a permutation given in one-line notation: +1 even, -1 odd.
pub fn permutation_parity(mapping: &[usize]) -> i8 {
    let mut seen = vec![false; mapping.len()];
    let mut sign = 1i8;
    for start in 0..mapping.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = mapping[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

impl CosetSystem {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Decompose G into cosets of H. Without `rep_choice`, each coset is
    /// represented by its smallest element index and the identity's coset
    /// comes first, the rest ordered by smallest member.
    pub fn decompose(
        group: Arc<FiniteGroup>,
        subgroup: SubgroupRef,
        side: Side,
        rep_choice: Option<&[usize]>,
    ) -> Result<CosetSystem> {
        if !Arc::ptr_eq(&group, &subgroup.parent) && *group != *subgroup.parent {
            return Err(Error::CarrierMismatch);
        }
        let n = group.order;
        let mut coset_of: Vec<Option<usize>> = vec![None; n];
        let mut default_reps: Vec<usize> = Vec::new();
        let order: Vec<usize> = std::iter::once(group.identity)
            .chain((0..n).filter(|&g| g != group.identity))
            .collect();
        let mut next = 0usize;
        for g in order {
            if coset_of[g].is_some() {
                continue;
            }
            let c = next;
            next += 1;
            for &h in &subgroup.members {
                let member = match side {
                    Side::Left => group.mul(g, h),
                    Side::Right => group.mul(h, g),
                };
                coset_of[member] = Some(c);
            }
        }
        let m = next;
        // default representative: smallest element index in each coset
        default_reps.resize(m, usize::MAX);
        for g in (0..n).rev() {
            default_reps[coset_of[g].unwrap()] = g;
        }
        let rep_of: Vec<usize> = coset_of.into_iter().map(|c| c.unwrap()).collect();
        let reps = match rep_choice {
            None => default_reps,
            Some(choice) => {
                if choice.len() != m {
                    return Err(Error::InvalidRepresentatives(format!(
                        "expected {m} representatives, got {}",
                        choice.len()
                    )));
                }
                let mut reps = vec![usize::MAX; m];
                for &r in choice {
                    if r >= n {
                        return Err(Error::IndexOutOfRange { index: r, order: n });
                    }
                    let c = rep_of[r];
                    if reps[c] != usize::MAX {
                        return Err(Error::InvalidRepresentatives(format!(
                            "elements {} and {} represent the same coset",
                            reps[c], r
                        )));
                    }
                    reps[c] = r;
                }
                reps
            }
        };
        let factor_of = (0..n)
            .map(|g| {
                let t = reps[rep_of[g]];
                match side {
                    Side::Left => group.mul(group.inv(t), g),
                    Side::Right => group.mul(g, group.inv(t)),
                }
            })
            .collect();
        Ok(CosetSystem { side, group, subgroup, reps, rep_of, factor_of })
    }

    /// The bar map (left) / tilde map (right): g -> its coset representative.
    pub fn representative(&self, g: usize) -> usize {
        self.reps[self.rep_of[g]]
    }

    /// The H-factor of g: (bar g)^-1 g for left systems, g (tilde g)^-1 for right.
    pub fn h_factor(&self, g: usize) -> usize {
        self.factor_of[g]
    }

    /// The permutation g induces on coset positions: j -> rep_of[g * t_j]
    /// (left) or j -> rep_of[u_j * g] (right), with its parity.
    pub fn coset_permutation(&self, g: usize) -> CosetPermutation {
        let mapping: Vec<usize> = self
            .reps
            .iter()
            .map(|&t| match self.side {
                Side::Left => self.rep_of[self.group.mul(g, t)],
                Side::Right => self.rep_of[self.group.mul(t, g)],
            })
            .collect();
        let sign = permutation_parity(&mapping);
        CosetPermutation { mapping, sign }
    }

    /// Redraw every representative uniformly from its coset with a
    /// ChaCha8 generator seeded by `rng_seed`. Coset order is preserved.
    pub fn resample(&self, rng_seed: u64) -> CosetSystem {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let m = self.index();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); m];
        for g in 0..self.group.order {
            members[self.rep_of[g]].push(g);
        }
        let reps: Vec<usize> = members
            .iter()
            .map(|coset| coset[rng.gen_range(0..coset.len())])
            .collect();
        let factor_of = (0..self.group.order)
            .map(|g| {
                let t = reps[self.rep_of[g]];
                match self.side {
                    Side::Left => self.group.mul(self.group.inv(t), g),
                    Side::Right => self.group.mul(g, self.group.inv(t)),
                }
            })
            .collect();
        CosetSystem {
            side: self.side,
            group: Arc::clone(&self.group),
            subgroup: self.subgroup.clone(),
            reps,
            rep_of: self.rep_of.clone(),
            factor_of,
        }
    }

    /// Turn a left system T into the right system over T^-1, same coset order.
    pub fn inverse_reps(&self) -> Result<CosetSystem> {
        if self.side != Side::Left {
            return Err(Error::WrongSide { expected: "left" });
        }
        let reps: Vec<usize> = self.reps.iter().map(|&t| self.group.inv(t)).collect();
        let n = self.group.order;
        // rebuild rep_of for the right decomposition H t_i^-1
        let mut rep_of = vec![usize::MAX; n];
        for (i, &u) in reps.iter().enumerate() {
            for &h in &self.subgroup.members {
                rep_of[self.group.mul(h, u)] = i;
            }
        }
        debug_assert!(rep_of.iter().all(|&c| c != usize::MAX));
        let factor_of = (0..n)
            .map(|g| self.group.mul(g, self.group.inv(reps[rep_of[g]])))
            .collect();
        Ok(CosetSystem {
            side: Side::Right,
            group: Arc::clone(&self.group),
            subgroup: self.subgroup.clone(),
            reps,
            rep_of,
            factor_of,
        })
    }

    /// Structural validity check: partition, factorization, self-representation.
    pub fn validate(&self) -> Result<()> {
        let n = self.group.order;
        let m = self.index();
        if m * self.subgroup.order() != n {
            return Err(Error::InvalidRepresentatives("cosets do not partition G".into()));
        }
        for (i, &t) in self.reps.iter().enumerate() {
            if self.rep_of[t] != i {
                return Err(Error::InvalidRepresentatives(format!(
                    "representative {t} does not represent its own coset"
                )));
            }
        }
        for g in 0..n {
            let t = self.reps[self.rep_of[g]];
            let h = self.factor_of[g];
            if !self.subgroup.contains(h) {
                return Err(Error::InvalidRepresentatives(format!("factor of {g} not in H")));
            }
            let rebuilt = match self.side {
                Side::Left => self.group.mul(t, h),
                Side::Right => self.group.mul(h, t),
            };
            if rebuilt != g {
                return Err(Error::InvalidRepresentatives(format!(
                    "factorization fails for element {g}"
                )));
            }
        }
        Ok(())
    }
}
