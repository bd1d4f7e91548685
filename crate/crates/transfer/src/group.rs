//! Finite groups as index-based Cayley tables, subgroups, and quotients.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Associativity is verified exhaustively (O(n^3)) for groups up to this order.
pub const ASSOC_CHECK_BOUND: usize = 256;

/// Hard cap on constructed group orders (8! covers `symmetric(8)`).
pub const MAX_ORDER: usize = 40320;

/// A finite group given by its full multiplication table on indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub order: usize,
    /// `table[i][j]` is the index of `g_i * g_j`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverses: Vec<usize>,
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validate a multiplication table and derive identity and inverses.
    pub fn build_from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Arc<Self>> {
        let n = table.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::SizeLimitExceeded { order: n, limit: MAX_ORDER });
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::Parse {
                    location: "table".into(),
                    message: "table is not square".into(),
                });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, order: n });
                }
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != n {
                return Err(Error::Parse {
                    location: "labels".into(),
                    message: format!("expected {n} labels, got {}", ls.len()),
                });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or(Error::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or(Error::NoInverse(i))?;
            inverses.push(inv);
        }
        if n <= ASSOC_CHECK_BOUND {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if table[table[i][j]][k] != table[i][table[j][k]] {
                            return Err(Error::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup { order: n, table, identity, inverses, labels }))
    }

    /// Assemble a group from raw parts without any validation.
    ///
    /// Intended for fault-injection tests that need a deliberately broken table.
    pub fn from_parts_unchecked(
        table: Vec<Vec<usize>>,
        identity: usize,
        inverses: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Arc<Self> {
        Arc::new(FiniteGroup { order: table.len(), table, identity, inverses, labels })
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// `g^k` for `k >= 0` by repeated multiplication.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => format!("g{i}"),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        if let Some(ls) = &self.labels {
            if let Some(i) = ls.iter().position(|l| l == label) {
                return Ok(i);
            }
        } else if let Some(num) = label.strip_prefix('g') {
            if let Ok(i) = num.parse::<usize>() {
                if i < self.order {
                    return Ok(i);
                }
            }
        }
        Err(Error::UnknownLabel(label.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Cyclic group Z/nZ under addition; element `i` is the residue `i`.
    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::SizeLimitExceeded { order: n, limit: MAX_ORDER });
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::build_from_table(table, Some(labels))
    }

    /// Dihedral group of order 2n with presentation a^n = b^2 = e, ab = ba^{-1}.
    ///
    /// Element a^i b^j sits at index 2i + j ((i, j) lexicographic, j in {0, 1}).
    pub fn dihedral(n: usize) -> Result<Arc<Self>> {
        if n == 0 || 2 * n > MAX_ORDER {
            return Err(Error::SizeLimitExceeded { order: 2 * n, limit: MAX_ORDER });
        }
        let idx = |i: usize, j: usize| 2 * (i % n) + j % 2;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        // a^i b^j a^k b^l = a^(i + (-1)^j k) b^(j + l)
                        let exp = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                        table[idx(i, j)][idx(k, l)] = idx(exp, j + l);
                    }
                }
            }
        }
        let labels = (0..2 * n)
            .map(|x| {
                let (i, j) = (x / 2, x % 2);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "b".to_string(),
                    (1, 0) => "a".to_string(),
                    (1, 1) => "ab".to_string(),
                    (_, 0) => format!("a{i}"),
                    (_, _) => format!("a{i}b"),
                }
            })
            .collect();
        Self::build_from_table(table, Some(labels))
    }

    /// Symmetric group on n letters, elements ordered lexicographically by
    /// one-line notation. Product is composition with the right factor applied
    /// first: (s * t)(x) = s(t(x)).
    pub fn symmetric(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > 8 {
            return Err(Error::SizeLimitExceeded {
                order: (1..=n).product::<usize>().max(n),
                limit: 40320,
            });
        }
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let composed: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                        index_of(&composed)
                    })
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
            .collect();
        Self::build_from_table(table, Some(labels))
    }

    /// Direct product on pairs (a, b), indexed as a * |B| + b.
    pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<Arc<Self>> {
        let n = a.order * b.order;
        if n > MAX_ORDER {
            return Err(Error::SizeLimitExceeded { order: n, limit: MAX_ORDER });
        }
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![vec![0; n]; n];
        for xa in 0..a.order {
            for xb in 0..b.order {
                for ya in 0..a.order {
                    for yb in 0..b.order {
                        table[idx(xa, xb)][idx(ya, yb)] = idx(a.mul(xa, ya), b.mul(xb, yb));
                    }
                }
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / b.order), b.label(x % b.order)))
            .collect();
        Self::build_from_table(table, Some(labels))
    }
}

/// A subgroup stored as an explicit, strictly increasing member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupRef {
    pub parent: Arc<FiniteGroup>,
    pub members: Vec<usize>,
    membership: Vec<bool>,
}

impl SubgroupRef {
    /// Validate that `members` is a subgroup of `parent`.
    pub fn new(parent: Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if m >= parent.order {
                return Err(Error::IndexOutOfRange { index: m, order: parent.order });
            }
        }
        let mut membership = vec![false; parent.order];
        for &m in &members {
            membership[m] = true;
        }
        if !membership[parent.identity] {
            return Err(Error::NotASubgroup);
        }
        for &x in &members {
            if !membership[parent.inv(x)] {
                return Err(Error::NotASubgroup);
            }
            for &y in &members {
                if !membership[parent.mul(x, y)] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(SubgroupRef { parent, members, membership })
    }

    /// Smallest subgroup containing the generators.
    pub fn closure(parent: Arc<FiniteGroup>, generators: &[usize]) -> Result<Self> {
        for &g in generators {
            if g >= parent.order {
                return Err(Error::IndexOutOfRange { index: g, order: parent.order });
            }
        }
        let mut membership = vec![false; parent.order];
        membership[parent.identity] = true;
        let mut frontier = vec![parent.identity];
        for &g in generators {
            if !membership[g] {
                membership[g] = true;
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            let candidates: Vec<usize> = (0..parent.order)
                .filter(|&y| membership[y])
                .flat_map(|y| [parent.mul(x, y), parent.mul(y, x)])
                .chain([parent.inv(x)])
                .collect();
            for c in candidates {
                if !membership[c] {
                    membership[c] = true;
                    frontier.push(c);
                }
            }
        }
        let members = (0..parent.order).filter(|&i| membership[i]).collect();
        Ok(SubgroupRef { parent, members, membership })
    }

    /// The whole group as a subgroup of itself.
    pub fn full(parent: Arc<FiniteGroup>) -> Self {
        let members: Vec<usize> = (0..parent.order).collect();
        let membership = vec![true; parent.order];
        SubgroupRef { parent, members, membership }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        let e = parent.identity;
        let mut membership = vec![false; parent.order];
        membership[e] = true;
        SubgroupRef { parent, members: vec![e], membership }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.membership[g]
    }

    pub fn same_parent(&self, other: &SubgroupRef) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent
    }

    /// The commutator subgroup [S, S], generated by all x y x^-1 y^-1 with x, y in S.
    pub fn commutator_subgroup(&self) -> SubgroupRef {
        let p = &self.parent;
        let mut gens = Vec::new();
        for &x in &self.members {
            for &y in &self.members {
                let c = p.mul(p.mul(x, y), p.mul(p.inv(x), p.inv(y)));
                gens.push(c);
            }
        }
        SubgroupRef::closure(Arc::clone(p), &gens).expect("commutators are valid indices")
    }

    /// True iff k h k^-1 stays in `kernel` for every h in `self`, k in `kernel`.
    pub fn is_normal_in(kernel: &SubgroupRef, ambient: &SubgroupRef) -> Result<bool> {
        if !kernel.same_parent(ambient) || kernel.members.iter().any(|&m| !ambient.contains(m)) {
            return Err(Error::NotASubset);
        }
        let p = &ambient.parent;
        for &h in &ambient.members {
            for &k in &kernel.members {
                if !kernel.contains(p.mul(p.mul(h, k), p.inv(h))) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The quotient H/K with its own Cayley table and the projection H -> H/K.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub parent_subgroup: SubgroupRef,
    pub kernel: SubgroupRef,
    /// The quotient's own group structure; coset 0 is the class of the identity.
    pub cosets: Arc<FiniteGroup>,
    /// Indexed by parent-group element index; `Some(c)` for members of H.
    pub class_of: Vec<Option<usize>>,
}

impl QuotientGroup {
    pub fn new(h: SubgroupRef, k: SubgroupRef) -> Result<Self> {
        match SubgroupRef::is_normal_in(&k, &h)? {
            true => {}
            false => {
                // locate one violating pair for the error message
                let p = &h.parent;
                for &hh in &h.members {
                    for &kk in &k.members {
                        if !k.contains(p.mul(p.mul(hh, kk), p.inv(hh))) {
                            return Err(Error::NotNormal { h: hh, k: kk });
                        }
                    }
                }
                unreachable!();
            }
        }
        let p = Arc::clone(&h.parent);
        let mut class_of: Vec<Option<usize>> = vec![None; p.order];
        let mut reps: Vec<usize> = Vec::new();
        // identity's class first, then by smallest unassigned member
        let mut pending: Vec<usize> = std::iter::once(p.identity)
            .chain(h.members.iter().copied().filter(|&m| m != p.identity))
            .collect();
        for m in pending.drain(..) {
            if class_of[m].is_some() {
                continue;
            }
            let c = reps.len();
            reps.push(m);
            for &kk in &k.members {
                class_of[p.mul(m, kk)] = Some(c);
            }
        }
        let m = reps.len();
        let mut table = vec![vec![0; m]; m];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i][j] = class_of[p.mul(ri, rj)].expect("product stays in H");
            }
        }
        let labels = (0..m).map(|i| format!("K{i}")).collect();
        let cosets = FiniteGroup::build_from_table(table, Some(labels))?;
        Ok(QuotientGroup { parent_subgroup: h, kernel: k, cosets, class_of })
    }

    pub fn class_of(&self, h: usize) -> Result<usize> {
        self.class_of
            .get(h)
            .copied()
            .flatten()
            .ok_or(Error::SupportOutsideSubgroup(h))
    }

    pub fn order(&self) -> usize {
        self.cosets.order
    }
}
