//! Matrices over group algebras: the regular representations of RG into
//! Mat(m, RH), the entrywise quotient map, determinants over abelian
//! carriers, and the change-of-representatives conjugation matrix.

use std::sync::Arc;

use itertools::Itertools;

use crate::algebra::{project_element, AlgebraElement};
use crate::coset::{permutation_parity, CosetSystem, Side};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup};
use crate::ring::Ring;

/// A square matrix whose entries are algebra elements over one carrier group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMatrix {
    pub dim: usize,
    pub ring: Ring,
    pub carrier: Arc<FiniteGroup>,
    pub entries: Vec<Vec<AlgebraElement>>,
}

impl AlgebraMatrix {
    pub fn new(ring: Ring, carrier: Arc<FiniteGroup>, entries: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        let dim = entries.len();
        for row in &entries {
            if row.len() != dim {
                return Err(Error::DimMismatch(row.len(), dim));
            }
            for e in row {
                if e.ring != ring {
                    return Err(Error::RingMismatch);
                }
                if !Arc::ptr_eq(&e.carrier, &carrier) && *e.carrier != *carrier {
                    return Err(Error::CarrierMismatch);
                }
            }
        }
        Ok(AlgebraMatrix { dim, ring, carrier, entries })
    }

    pub fn identity(ring: Ring, carrier: Arc<FiniteGroup>, dim: usize) -> Self {
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            AlgebraElement::one(ring, Arc::clone(&carrier))
                        } else {
                            AlgebraElement::zero(ring, Arc::clone(&carrier))
                        }
                    })
                    .collect()
            })
            .collect();
        AlgebraMatrix { dim, ring, carrier, entries }
    }

    /// Row-by-column product; entry products are taken (self-entry) * (rhs-entry).
    pub fn mat_mul(&self, rhs: &AlgebraMatrix) -> Result<AlgebraMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimMismatch(self.dim, rhs.dim));
        }
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch);
        }
        if !Arc::ptr_eq(&self.carrier, &rhs.carrier) && *self.carrier != *rhs.carrier {
            return Err(Error::CarrierMismatch);
        }
        let mut entries = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(self.dim);
            for j in 0..self.dim {
                let mut acc = AlgebraElement::zero(self.ring, Arc::clone(&self.carrier));
                for k in 0..self.dim {
                    acc = acc.add(&self.entries[i][k].mul(&rhs.entries[k][j])?)?;
                }
                row.push(acc);
            }
            entries.push(row);
        }
        Ok(AlgebraMatrix { dim: self.dim, ring: self.ring, carrier: Arc::clone(&self.carrier), entries })
    }

    /// Row-major bracketed text form using the element syntax.
    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| format!("[{}]", row.iter().map(|e| e.render()).join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// L_T(alpha): the unique matrix with alpha (t_1 ... t_m) = (t_1 ... t_m) L_T(alpha).
/// Entry (i, j) is the sum over the support of x_g * (t_i^-1 g t_j) whenever
/// that product falls in H.
pub fn left_regular_rep(cs: &CosetSystem, alpha: &AlgebraElement) -> Result<AlgebraMatrix> {
    if cs.side != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    rep_from_factors(cs, alpha, |group, g, t| {
        let p = group.mul(g, t);
        (cs.rep_of[p], cs.factor_of[p])
    })
}

/// R_U(alpha): the matrix with (u_1 ... u_m)^t alpha = R_U(alpha) (u_1 ... u_m)^t.
/// Entry (i, j) collects x_g * (u_i g u_j^-1) whenever that product is in H.
pub fn right_regular_rep(cs: &CosetSystem, alpha: &AlgebraElement) -> Result<AlgebraMatrix> {
    if cs.side != Side::Right {
        return Err(Error::WrongSide { expected: "right" });
    }
    rep_from_factors(cs, alpha, |group, g, u| {
        let p = group.mul(u, g);
        (cs.rep_of[p], cs.factor_of[p])
    })
}

fn rep_from_factors(
    cs: &CosetSystem,
    alpha: &AlgebraElement,
    factor: impl Fn(&FiniteGroup, usize, usize) -> (usize, usize),
) -> Result<AlgebraMatrix> {
    if !Arc::ptr_eq(&alpha.carrier, &cs.group) && *alpha.carrier != *cs.group {
        return Err(Error::CarrierMismatch);
    }
    let m = cs.index();
    let ring = alpha.ring;
    let mut entries: Vec<Vec<AlgebraElement>> = (0..m)
        .map(|_| (0..m).map(|_| AlgebraElement::zero(ring, Arc::clone(&cs.group))).collect())
        .collect();
    for (&g, c) in &alpha.terms {
        for (pos, &t) in cs.reps.iter().enumerate() {
            let (other, h) = factor(&cs.group, g, t);
            // left: column pos gains a term at row `other`; right: row pos at column `other`
            let (i, j) = match cs.side {
                Side::Left => (other, pos),
                Side::Right => (pos, other),
            };
            let term = AlgebraElement::single(ring, Arc::clone(&cs.group), h).scale(c);
            entries[i][j] = entries[i][j].add(&term)?;
        }
    }
    AlgebraMatrix::new(ring, Arc::clone(&cs.group), entries)
}

/// Apply the quotient projection to every entry: Mat(m, RH) -> Mat(m, R(H/K)).
pub fn psi_matrix(q: &QuotientGroup, m: &AlgebraMatrix) -> Result<AlgebraMatrix> {
    if !Arc::ptr_eq(&m.carrier, &q.parent_subgroup.parent) && *m.carrier != *q.parent_subgroup.parent {
        return Err(Error::CarrierMismatch);
    }
    let entries = m
        .entries
        .iter()
        .map(|row| row.iter().map(|e| project_element(q, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    AlgebraMatrix::new(m.ring, Arc::clone(&q.cosets), entries)
}

/// Leibniz determinant over a commutative carrier: sum over permutations of
/// sign(s) * prod_i M[i][s(i)].
pub fn det_commutative(m: &AlgebraMatrix) -> Result<AlgebraElement> {
    if !m.carrier.is_abelian() {
        return Err(Error::NonAbelianCarrier);
    }
    let mut acc = AlgebraElement::zero(m.ring, Arc::clone(&m.carrier));
    for perm in (0..m.dim).permutations(m.dim) {
        let mut prod = AlgebraElement::one(m.ring, Arc::clone(&m.carrier));
        for (i, &j) in perm.iter().enumerate() {
            prod = prod.mul(&m.entries[i][j])?;
            if prod.is_zero() {
                break;
            }
        }
        if permutation_parity(&perm) < 0 {
            prod = prod.neg();
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}

/// Independent determinant route: cofactor expansion along the first row.
pub fn det_cofactor(m: &AlgebraMatrix) -> Result<AlgebraElement> {
    if !m.carrier.is_abelian() {
        return Err(Error::NonAbelianCarrier);
    }
    fn expand(ring: Ring, carrier: &Arc<FiniteGroup>, e: &[Vec<AlgebraElement>]) -> Result<AlgebraElement> {
        let n = e.len();
        if n == 1 {
            return Ok(e[0][0].clone());
        }
        let mut acc = AlgebraElement::zero(ring, Arc::clone(carrier));
        for col in 0..n {
            if e[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<AlgebraElement>> = e[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let mut term = e[0][col].mul(&expand(ring, carrier, &minor)?)?;
            if col % 2 == 1 {
                term = term.neg();
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
    expand(m.ring, &m.carrier, &m.entries)
}

/// The monomial matrix P with (t_1 ... t_m) = (t'_1 ... t'_m) P:
/// P[i][j] = 1 * ((t'_i)^-1 t_j) when that product lies in H, else 0.
/// Swapping the arguments yields P^-1, and L_T(a) = P^-1 L_T'(a) P.
pub fn change_of_basis(ring: Ring, cs: &CosetSystem, cs_new: &CosetSystem) -> Result<AlgebraMatrix> {
    if cs.side != Side::Left || cs_new.side != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    let same_group = Arc::ptr_eq(&cs.group, &cs_new.group) || *cs.group == *cs_new.group;
    if !same_group || cs.subgroup.members != cs_new.subgroup.members || cs.rep_of != cs_new.rep_of {
        return Err(Error::SystemMismatch);
    }
    let m = cs.index();
    let g = &cs.group;
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let prod = g.mul(g.inv(cs_new.reps[i]), cs.reps[j]);
                    if cs.subgroup.contains(prod) {
                        AlgebraElement::single(ring, Arc::clone(g), prod)
                    } else {
                        AlgebraElement::zero(ring, Arc::clone(g))
                    }
                })
                .collect()
        })
        .collect();
    AlgebraMatrix::new(ring, Arc::clone(g), entries)
}
