//! Sparse formal sums over a group with exact coefficients, the subgroup
//! indicator, the quotient projection, and invertibility via the regular
//! representation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, SubgroupRef};
use crate::ring::{Coeff, Ring};

/// Indicator of H inside its parent: 1 on H, 0 elsewhere.
pub fn chi_dot(h: &SubgroupRef, g: usize) -> u8 {
    u8::from(h.contains(g))
}

/// A formal sum of group elements with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub ring: Ring,
    pub carrier: Arc<FiniteGroup>,
    /// element index -> coefficient; never stores a ring zero.
    pub terms: BTreeMap<usize, Coeff>,
}

fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    pub fn zero(ring: Ring, carrier: Arc<FiniteGroup>) -> Self {
        AlgebraElement { ring, carrier, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring, carrier: Arc<FiniteGroup>) -> Self {
        let e = carrier.identity;
        Self::single(ring, carrier, e)
    }

    /// The basis element 1 * g.
    pub fn single(ring: Ring, carrier: Arc<FiniteGroup>, g: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, ring.one());
        AlgebraElement { ring, carrier, terms }
    }

    pub fn from_terms(
        ring: Ring,
        carrier: Arc<FiniteGroup>,
        pairs: impl IntoIterator<Item = (usize, Coeff)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring, carrier);
        for (g, c) in pairs {
            if g >= out.carrier.order {
                return Err(Error::IndexOutOfRange { index: g, order: out.carrier.order });
            }
            out.add_term(g, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: usize, c: &Coeff) {
        let merged = match self.terms.get(&g) {
            Some(old) => self.ring.add(old, c),
            None => c.clone(),
        };
        if self.ring.is_zero(&merged) {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if !same_group(&self.carrier, &other.carrier) {
            return Err(Error::CarrierMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&g, c) in &other.terms {
            out.add_term(g, c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&g, c)| (g, self.ring.neg(c))).collect();
        AlgebraElement { ring: self.ring, carrier: Arc::clone(&self.carrier), terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Convolution product: (sum x_g g)(sum y_h h) = sum x_g y_h (g h).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ring, Arc::clone(&self.carrier));
        for (&g, x) in &self.terms {
            for (&h, y) in &other.terms {
                out.add_term(self.carrier.mul(g, h), &self.ring.mul(x, y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.ring, Arc::clone(&self.carrier));
        for (&g, x) in &self.terms {
            out.add_term(g, &self.ring.mul(x, c));
        }
        out
    }

    /// Matrix of left-multiplication by `self` on the carrier's standard
    /// basis: column j holds the coefficients of self * g_j.
    pub fn regular_matrix(&self) -> Vec<Vec<Coeff>> {
        let n = self.carrier.order;
        let mut m = vec![vec![self.ring.zero(); n]; n];
        for (&g, c) in &self.terms {
            for j in 0..n {
                let i = self.carrier.mul(g, j);
                m[i][j] = self.ring.add(&m[i][j], c);
            }
        }
        m
    }

    /// Invertibility in the group algebra, decided by the determinant of the
    /// regular representation over the base ring.
    pub fn is_invertible(&self) -> bool {
        let det = numeric_det(self.ring, &self.regular_matrix());
        self.ring.is_unit(&det)
    }

    /// Explicit two-sided inverse when one exists, solved from the regular
    /// matrix by Cramer's rule.
    pub fn inverse(&self) -> Option<AlgebraElement> {
        let m = self.regular_matrix();
        let det = numeric_det(self.ring, &m);
        if !self.ring.is_unit(&det) {
            return None;
        }
        let n = self.carrier.order;
        let e = self.carrier.identity;
        let mut pairs = Vec::new();
        for i in 0..n {
            // replace column i by the identity basis vector
            let mut mi = m.clone();
            for (r, row) in mi.iter_mut().enumerate() {
                row[i] = if r == e { self.ring.one() } else { self.ring.zero() };
            }
            let num = numeric_det(self.ring, &mi);
            let c = self.ring.div(&num, &det).expect("determinant is a unit");
            pairs.push((i, c));
        }
        let inv = AlgebraElement::from_terms(self.ring, Arc::clone(&self.carrier), pairs)
            .expect("indices in range");
        Some(inv)
    }

    /// Render with the carrier's labels, e.g. "2*a + 3*b - 1/2*e"; "0" when zero.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (&g, c)) in self.terms.iter().enumerate() {
            let negative = match c {
                Coeff::Int(x) => x.is_negative(),
                Coeff::Rat(x) => x.is_negative(),
                Coeff::Mod(_) => false,
            };
            let abs = if negative { self.ring.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format!("{}*{}", self.ring.render(&abs), self.carrier.label(g)));
        }
        out
    }
}

/// Parse "2*a + 3*b - 1/2*e" (whitespace-insensitive; omitted coefficient
/// means 1; both '-' and the unicode minus are accepted).
pub fn parse_element(ring: Ring, carrier: &Arc<FiniteGroup>, input: &str) -> Result<AlgebraElement> {
    let cleaned: String = input
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if cleaned.is_empty() {
        return Err(Error::Parse {
            location: "element".into(),
            message: "empty expression".into(),
        });
    }
    if cleaned == "0" {
        return Ok(AlgebraElement::zero(ring, Arc::clone(carrier)));
    }
    let mut pairs = Vec::new();
    let mut rest = cleaned.as_str();
    let mut sign_neg = match rest.strip_prefix(['+', '-']) {
        Some(r) => {
            let neg = rest.starts_with('-');
            rest = r;
            neg
        }
        None => false,
    };
    while !rest.is_empty() {
        let split = rest.find(['+', '-']);
        let (term, next_neg, tail) = match split {
            Some(pos) => (&rest[..pos], rest[pos..].starts_with('-'), &rest[pos + 1..]),
            None => (rest, false, ""),
        };
        if term.is_empty() {
            return Err(Error::Parse {
                location: "element".into(),
                message: "empty term".into(),
            });
        }
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => (ring.parse(c)?, l),
            None => (ring.one(), term),
        };
        let coeff = if sign_neg { ring.neg(&coeff) } else { coeff };
        let g = carrier.index_of_label(label)?;
        pairs.push((g, coeff));
        sign_neg = next_neg;
        rest = tail;
    }
    AlgebraElement::from_terms(ring, Arc::clone(carrier), pairs)
}

/// Push an element supported on H down to the quotient H/K, merging
/// coefficients whose terms land in the same class.
pub fn project_element(q: &QuotientGroup, x: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(x.ring, Arc::clone(&q.cosets));
    for (&g, c) in &x.terms {
        let class = q.class_of(g)?;
        out.add_term(class, c);
    }
    Ok(out)
}

/// Exact determinant of a numeric matrix over the given ring: rational
/// Gaussian elimination for the rationals, fraction-free (Bareiss)
/// elimination over the integers, and the integer determinant reduced
/// mod n for modular rings.
pub fn numeric_det(ring: Ring, m: &[Vec<Coeff>]) -> Coeff {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    match ring {
        Ring::Rat => {
            let rows: Vec<Vec<BigRational>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Coeff::Rat(x) => x.clone(),
                            _ => panic!("coefficient does not belong to this ring"),
                        })
                        .collect()
                })
                .collect();
            Coeff::Rat(det_rational(rows))
        }
        Ring::Int => {
            let rows: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Coeff::Int(x) => x.clone(),
                            _ => panic!("coefficient does not belong to this ring"),
                        })
                        .collect()
                })
                .collect();
            Coeff::Int(det_bareiss(rows))
        }
        Ring::Mod(modulus) => {
            let rows: Vec<Vec<BigInt>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Coeff::Mod(x) => BigInt::from(*x),
                            _ => panic!("coefficient does not belong to this ring"),
                        })
                        .collect()
                })
                .collect();
            let d = det_bareiss(rows);
            let md = BigInt::from(modulus);
            let r = ((d % &md) + &md) % &md;
            Coeff::Mod(u64::try_from(r).expect("reduced residue fits u64"))
        }
    }
}

fn det_rational(mut rows: Vec<Vec<BigRational>>) -> BigRational {
    let n = rows.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &p;
            for c in col..n {
                let sub = &f * &rows[col][c];
                rows[r][c] -= sub;
            }
        }
    }
    det
}

fn det_bareiss(mut rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n - 1 {
        let pivot = match (col..n).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != col {
            rows.swap(pivot, col);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let v = &rows[r][c] * &rows[col][col] - &rows[r][col] * &rows[col][c];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero());
                rows[r][c] = q;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[col][col].clone();
    }
    sign * rows[n - 1][n - 1].clone()
}
