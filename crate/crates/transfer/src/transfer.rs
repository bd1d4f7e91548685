//! Transfer maps V_{G -> H/K}, the determinant-based transfer, and the
//! verification suite tying the determinant properties to the transfer
//! properties on finite groups.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraElement;
use crate::coset::{CosetSystem, Side};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientGroup, SubgroupRef};
use crate::matrix::{change_of_basis, det_commutative, left_regular_rep, psi_matrix, right_regular_rep};
use crate::ring::Ring;

/// An element of H/K paired with the sign of the induced coset permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferValue {
    pub quotient: Arc<FiniteGroup>,
    pub coset: usize,
    pub sign: i8,
}

fn check_systems(q: &QuotientGroup, cs: &CosetSystem) -> Result<()> {
    let same = (Arc::ptr_eq(&cs.group, &q.parent_subgroup.parent)
        || *cs.group == *q.parent_subgroup.parent)
        && cs.subgroup.members == q.parent_subgroup.members;
    if same {
        Ok(())
    } else {
        Err(Error::CarrierMismatch)
    }
}

/// Left transfer: V(g) = prod_i class((bar(g t_i))^-1 g t_i), sign from the
/// coset permutation of g.
pub fn left_transfer(q: &QuotientGroup, cs: &CosetSystem, g: usize) -> Result<TransferValue> {
    if cs.side != Side::Left {
        return Err(Error::WrongSide { expected: "left" });
    }
    check_systems(q, cs)?;
    let mut coset = q.cosets.identity;
    for &t in &cs.reps {
        let factor = cs.h_factor(cs.group.mul(g, t));
        coset = q.cosets.mul(coset, q.class_of(factor)?);
    }
    Ok(TransferValue {
        quotient: Arc::clone(&q.cosets),
        coset,
        sign: cs.coset_permutation(g).sign,
    })
}

/// Right transfer: V(g) = prod_i class(u_i g (tilde(u_i g))^-1).
pub fn right_transfer(q: &QuotientGroup, cs: &CosetSystem, g: usize) -> Result<TransferValue> {
    if cs.side != Side::Right {
        return Err(Error::WrongSide { expected: "right" });
    }
    check_systems(q, cs)?;
    let mut coset = q.cosets.identity;
    for &u in &cs.reps {
        let factor = cs.h_factor(cs.group.mul(u, g));
        coset = q.cosets.mul(coset, q.class_of(factor)?);
    }
    Ok(TransferValue {
        quotient: Arc::clone(&q.cosets),
        coset,
        sign: cs.coset_permutation(g).sign,
    })
}

/// The determinant route: det(psi(L_T(alpha))) in R(H/K).
pub fn det_transfer(q: &QuotientGroup, cs: &CosetSystem, alpha: &AlgebraElement) -> Result<AlgebraElement> {
    if !q.cosets.is_abelian() {
        return Err(Error::NonAbelianQuotient);
    }
    check_systems(q, cs)?;
    let rep = left_regular_rep(cs, alpha)?;
    det_commutative(&psi_matrix(q, &rep)?)
}

/// Parity of the coset permutation induced by g.
pub fn sign_of(cs: &CosetSystem, g: usize) -> i8 {
    cs.coset_permutation(g).sign
}

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass() -> Self {
        CheckResult { passed: true, counterexample: None }
    }

    fn fail(counterexample: String) -> Self {
        CheckResult { passed: false, counterexample: Some(counterexample) }
    }
}

/// Pass/fail flags for the whole suite, with counterexamples on failure.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub homomorphism: CheckResult,
    pub rep_invariance_left: CheckResult,
    pub rep_invariance_right: CheckResult,
    pub left_equals_right: CheckResult,
    pub sign_multiplicative: CheckResult,
    pub det_multiplicative: CheckResult,
    pub det_rep_invariance: CheckResult,
    pub left_right_rep_equality: CheckResult,
    pub det_equals_sign_times_transfer: CheckResult,
    pub f2_det_equals_transfer: CheckResult,
    /// Informational: whether the sign stayed fixed across every resampling.
    pub sign_resample_invariant: bool,
    pub seed: u64,
    pub samples: usize,
    pub resamples: usize,
}

impl VerificationReport {
    pub fn checks(&self) -> Vec<(&'static str, &CheckResult)> {
        vec![
            ("homomorphism", &self.homomorphism),
            ("rep_invariance_left", &self.rep_invariance_left),
            ("rep_invariance_right", &self.rep_invariance_right),
            ("left_equals_right", &self.left_equals_right),
            ("sign_multiplicative", &self.sign_multiplicative),
            ("det_multiplicative", &self.det_multiplicative),
            ("det_rep_invariance", &self.det_rep_invariance),
            ("left_right_rep_equality", &self.left_right_rep_equality),
            ("det_equals_sign_times_transfer", &self.det_equals_sign_times_transfer),
            ("f2_det_equals_transfer", &self.f2_det_equals_transfer),
        ]
    }

    pub fn all_passed(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, check) in self.checks() {
            match &check.counterexample {
                None => writeln!(f, "{name}: {} seed={}", if check.passed { "pass" } else { "FAIL" }, self.seed)?,
                Some(ce) => writeln!(
                    f,
                    "{name}: {} counterexample=[{ce}] seed={}",
                    if check.passed { "pass" } else { "FAIL" },
                    self.seed
                )?,
            }
        }
        writeln!(
            f,
            "info: sign invariant under resampling: {} (samples={}, resamples={})",
            self.sign_resample_invariant, self.samples, self.resamples
        )
    }
}

fn random_element(ring: Ring, g: &Arc<FiniteGroup>, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let k = rng.gen_range(1..=g.order);
    let pairs: Vec<_> = (0..k)
        .map(|_| (rng.gen_range(0..g.order), ring.from_i64(rng.gen_range(-4i64..=4))))
        .collect();
    AlgebraElement::from_terms(ring, Arc::clone(g), pairs).expect("indices in range")
}

/// Run the full suite on (G, H, K), building canonical coset systems.
pub fn verify_properties(
    group: &Arc<FiniteGroup>,
    h: &SubgroupRef,
    k: &SubgroupRef,
    seed: u64,
    samples: usize,
) -> Result<VerificationReport> {
    let q = QuotientGroup::new(h.clone(), k.clone())?;
    if !q.cosets.is_abelian() {
        return Err(Error::NonAbelianQuotient);
    }
    let left = CosetSystem::decompose(Arc::clone(group), h.clone(), Side::Left, None)?;
    let right = CosetSystem::decompose(Arc::clone(group), h.clone(), Side::Right, None)?;
    verify_properties_with_systems(&q, &left, &right, seed, samples)
}

/// The suite against caller-supplied coset systems. Used directly by the
/// fault-injection tests that corrupt a representative lookup.
pub fn verify_properties_with_systems(
    q: &QuotientGroup,
    left: &CosetSystem,
    right: &CosetSystem,
    seed: u64,
    samples: usize,
) -> Result<VerificationReport> {
    if !q.cosets.is_abelian() {
        return Err(Error::NonAbelianQuotient);
    }
    let group = &left.group;
    let n = group.order;
    let resamples = samples;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let lbl = |g: usize| group.label(g);

    // a computation error inside a check (e.g. a corrupted table pushing a
    // factor outside H) counts as a failure with the error as counterexample
    fn settle(r: Result<CheckResult>) -> CheckResult {
        match r {
            Ok(c) => c,
            Err(e) => CheckResult::fail(format!("computation error: {e}")),
        }
    }

    // (a) V(gh) = V(g) V(h), with the product order check folded in
    let homomorphism = settle((|| {
        for g in 0..n {
            let vg = left_transfer(q, left, g)?;
            // order-independence of the defining product
            let mut rev = q.cosets.identity;
            for &t in left.reps.iter().rev() {
                rev = q.cosets.mul(rev, q.class_of(left.h_factor(group.mul(g, t)))?);
            }
            if rev != vg.coset {
                return Ok(CheckResult::fail(format!(
                    "g={} product depends on factor order",
                    lbl(g)
                )));
            }
            for h in 0..n {
                let vh = left_transfer(q, left, h)?;
                let vgh = left_transfer(q, left, group.mul(g, h))?;
                if vgh.coset != q.cosets.mul(vg.coset, vh.coset) {
                    return Ok(CheckResult::fail(format!(
                        "g={} h={} V(gh)={} V(g)V(h)={}",
                        lbl(g),
                        lbl(h),
                        q.cosets.label(vgh.coset),
                        q.cosets.label(q.cosets.mul(vg.coset, vh.coset))
                    )));
                }
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (d) sgn(gh) = sgn(g) sgn(h)
    let sign_multiplicative = (|| {
        for g in 0..n {
            for h in 0..n {
                if sign_of(left, group.mul(g, h)) != sign_of(left, g) * sign_of(left, h) {
                    return CheckResult::fail(format!("g={} h={}", lbl(g), lbl(h)));
                }
            }
        }
        CheckResult::pass()
    })();

    // (c) left transfer equals right transfer, coset and sign
    let left_equals_right = settle((|| {
        for g in 0..n {
            let l = left_transfer(q, left, g)?;
            let r = right_transfer(q, right, g)?;
            if l.coset != r.coset || l.sign != r.sign {
                return Ok(CheckResult::fail(format!(
                    "g={} left=({}, {:+}) right=({}, {:+})",
                    lbl(g),
                    q.cosets.label(l.coset),
                    l.sign,
                    q.cosets.label(r.coset),
                    r.sign
                )));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (b) transfers unchanged under representative resampling, left and right
    let mut sign_resample_invariant = true;
    let rep_invariance_left = settle((|| {
        let baseline_left: Vec<TransferValue> =
            (0..n).map(|g| left_transfer(q, left, g)).collect::<Result<_>>()?;
        for r in 0..resamples {
            let cs = left.resample(seed.wrapping_add(r as u64));
            for g in 0..n {
                let v = left_transfer(q, &cs, g)?;
                if v.coset != baseline_left[g].coset {
                    return Ok(CheckResult::fail(format!(
                        "g={} reps={:?} V={} expected {}",
                        lbl(g),
                        cs.reps,
                        q.cosets.label(v.coset),
                        q.cosets.label(baseline_left[g].coset)
                    )));
                }
                if v.sign != baseline_left[g].sign {
                    sign_resample_invariant = false;
                }
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());
    let rep_invariance_right = settle((|| {
        let baseline_right: Vec<TransferValue> =
            (0..n).map(|g| right_transfer(q, right, g)).collect::<Result<_>>()?;
        for r in 0..resamples {
            let cs = right.resample(seed.wrapping_add(1000 + r as u64));
            for g in 0..n {
                let v = right_transfer(q, &cs, g)?;
                if v.coset != baseline_right[g].coset {
                    return Ok(CheckResult::fail(format!(
                        "g={} reps={:?} V={} expected {}",
                        lbl(g),
                        cs.reps,
                        q.cosets.label(v.coset),
                        q.cosets.label(baseline_right[g].coset)
                    )));
                }
                if v.sign != baseline_right[g].sign {
                    sign_resample_invariant = false;
                }
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (e) Det(alpha beta) = Det(alpha) Det(beta) over the rationals
    let det_multiplicative = settle((|| {
        for _ in 0..samples {
            let a = random_element(Ring::Rat, group, &mut rng);
            let b = random_element(Ring::Rat, group, &mut rng);
            let lhs = det_transfer(q, left, &a.mul(&b)?)?;
            let rhs = det_transfer(q, left, &a)?.mul(&det_transfer(q, left, &b)?)?;
            if lhs != rhs {
                return Ok(CheckResult::fail(format!(
                    "alpha={} beta={}",
                    a.render(),
                    b.render()
                )));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (f) Det invariant under resampling, (j) with the explicit conjugation
    // L_T = P^-1 L_T' P verified along the way
    let det_rep_invariance = settle((|| {
        for r in 0..resamples {
            let cs2 = left.resample(seed.wrapping_add(2000 + r as u64));
            let alpha = random_element(Ring::Rat, group, &mut rng);
            let base = det_transfer(q, left, &alpha)?;
            let other = det_transfer(q, &cs2, &alpha)?;
            if base != other {
                return Ok(CheckResult::fail(format!(
                    "alpha={} reps={:?} Det={} expected {}",
                    alpha.render(),
                    cs2.reps,
                    other.render(),
                    base.render()
                )));
            }
            let p = change_of_basis(Ring::Rat, left, &cs2)?;
            let p_inv = change_of_basis(Ring::Rat, &cs2, left)?;
            let lhs = left_regular_rep(left, &alpha)?;
            let rhs = p_inv.mat_mul(&left_regular_rep(&cs2, &alpha)?)?.mat_mul(&p)?;
            if lhs != rhs {
                return Ok(CheckResult::fail(format!(
                    "alpha={} reps={:?} conjugation by P fails",
                    alpha.render(),
                    cs2.reps
                )));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (g) R over T^-1 equals L over T entrywise
    let left_right_rep_equality = settle((|| {
        let inv = left.inverse_reps()?;
        for _ in 0..samples {
            let alpha = random_element(Ring::Rat, group, &mut rng);
            if right_regular_rep(&inv, &alpha)? != left_regular_rep(left, &alpha)? {
                return Ok(CheckResult::fail(format!("alpha={}", alpha.render())));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (h) Det(1*g) = sgn(g) * V(g) over the rationals
    let det_equals_sign_times_transfer = settle((|| {
        for g in 0..n {
            let det = det_transfer(q, left, &AlgebraElement::single(Ring::Rat, Arc::clone(group), g))?;
            let v = left_transfer(q, left, g)?;
            let expected = AlgebraElement::single(Ring::Rat, Arc::clone(&q.cosets), v.coset)
                .scale(&Ring::Rat.from_i64(v.sign as i64));
            if det != expected {
                return Ok(CheckResult::fail(format!(
                    "g={} Det={} sgn*V={}",
                    lbl(g),
                    det.render(),
                    expected.render()
                )));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    // (i) over F_2 the sign disappears: Det(1*g) = V(g)
    let f2_det_equals_transfer = settle((|| {
        let f2 = Ring::Mod(2);
        for g in 0..n {
            let det = det_transfer(q, left, &AlgebraElement::single(f2, Arc::clone(group), g))?;
            let v = left_transfer(q, left, g)?;
            let expected = AlgebraElement::single(f2, Arc::clone(&q.cosets), v.coset);
            if det != expected {
                return Ok(CheckResult::fail(format!(
                    "g={} Det={} V={}",
                    lbl(g),
                    det.render(),
                    expected.render()
                )));
            }
        }
        Ok::<_, Error>(CheckResult::pass())
    })());

    Ok(VerificationReport {
        homomorphism,
        rep_invariance_left,
        rep_invariance_right,
        left_equals_right,
        sign_multiplicative,
        det_multiplicative,
        det_rep_invariance,
        left_right_rep_equality,
        det_equals_sign_times_transfer,
        f2_det_equals_transfer,
        sign_resample_invariant,
        seed,
        samples,
        resamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battery::standard_battery;

    fn c4_setup() -> (Arc<FiniteGroup>, QuotientGroup, CosetSystem, CosetSystem) {
        let g = FiniteGroup::cyclic(4).unwrap();
        let h = SubgroupRef::new(Arc::clone(&g), vec![0, 2]).unwrap();
        let k = SubgroupRef::trivial(Arc::clone(&g));
        let q = QuotientGroup::new(h.clone(), k).unwrap();
        let left = CosetSystem::decompose(Arc::clone(&g), h.clone(), Side::Left, None).unwrap();
        let right = CosetSystem::decompose(Arc::clone(&g), h, Side::Right, None).unwrap();
        (g, q, left, right)
    }

    #[test]
    fn transfer_of_identity_is_trivial() {
        let (g, q, left, right) = c4_setup();
        let v = left_transfer(&q, &left, g.identity).unwrap();
        assert_eq!(v.coset, 0);
        assert_eq!(v.sign, 1);
        let v = right_transfer(&q, &right, g.identity).unwrap();
        assert_eq!(v.coset, 0);
        assert_eq!(v.sign, 1);
    }

    #[test]
    fn c4_transfer_of_one() {
        let (_, q, left, right) = c4_setup();
        // factors for g=1: 1+0=1 -> h-factor 0; 1+1=2 -> h-factor 2; product class of 2
        let v = left_transfer(&q, &left, 1).unwrap();
        assert_eq!(v.coset, q.class_of(2).unwrap());
        assert_eq!(v.sign, -1);
        let w = right_transfer(&q, &right, 1).unwrap();
        assert_eq!((w.coset, w.sign), (v.coset, v.sign));
    }

    #[test]
    fn c4_det_transfer_examples() {
        let (g, q, left, _) = c4_setup();
        let one = AlgebraElement::one(Ring::Rat, Arc::clone(&g));
        let d = det_transfer(&q, &left, &one).unwrap();
        assert_eq!(d, AlgebraElement::one(Ring::Rat, Arc::clone(&q.cosets)));
        // 1*g with g=1: determinant of a monomial matrix = sign * product of entries
        let d = det_transfer(&q, &left, &AlgebraElement::single(Ring::Rat, Arc::clone(&g), 1)).unwrap();
        let expected = AlgebraElement::single(Ring::Rat, Arc::clone(&q.cosets), q.class_of(2).unwrap())
            .scale(&Ring::Rat.from_i64(-1));
        assert_eq!(d, expected);
    }

    #[test]
    fn abelian_power_oracle() {
        // for abelian G the transfer is the m-th power map pushed into H/K
        for (g, members) in [
            (FiniteGroup::cyclic(4).unwrap(), vec![0usize, 2]),
            (FiniteGroup::cyclic(6).unwrap(), vec![0, 3]),
            (FiniteGroup::cyclic(6).unwrap(), vec![0, 2, 4]),
        ] {
            let h = SubgroupRef::new(Arc::clone(&g), members).unwrap();
            let k = SubgroupRef::trivial(Arc::clone(&g));
            let q = QuotientGroup::new(h.clone(), k).unwrap();
            let left = CosetSystem::decompose(Arc::clone(&g), h, Side::Left, None).unwrap();
            let m = left.index();
            for x in 0..g.order {
                let v = left_transfer(&q, &left, x).unwrap();
                assert_eq!(v.coset, q.class_of(g.pow(x, m)).unwrap());
            }
        }
    }

    #[test]
    fn trivial_battery_case_passes_vacuously() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let h = SubgroupRef::full(Arc::clone(&g));
        let report = verify_properties(&g, &h, &h.clone(), 1, 5).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn s3_a3_member_passes() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = SubgroupRef::closure(Arc::clone(&g), &[g.index_of_label("231").unwrap()]).unwrap();
        let k = SubgroupRef::trivial(Arc::clone(&g));
        let report = verify_properties(&g, &h, &k, 42, 10).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.sign_resample_invariant);
    }

    #[test]
    fn nonabelian_quotient_rejected() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = SubgroupRef::full(Arc::clone(&g));
        let k = SubgroupRef::trivial(Arc::clone(&g));
        assert!(matches!(
            verify_properties(&g, &h, &k, 1, 1),
            Err(Error::NonAbelianQuotient)
        ));
    }

    #[test]
    fn corrupted_table_is_detected() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let mut table = g.table.clone();
        table[1][1] = 3; // breaks 1 + 1 = 2
        let bad = FiniteGroup::from_parts_unchecked(table, g.identity, g.inverses.clone(), None);
        let h = SubgroupRef::new(Arc::clone(&bad), vec![0, 2]).unwrap();
        let k = SubgroupRef::trivial(Arc::clone(&bad));
        let report = verify_properties(&bad, &h, &k, 7, 5).unwrap();
        assert!(!report.all_passed());
        let failing: Vec<_> = report.checks().into_iter().filter(|(_, c)| !c.passed).collect();
        assert!(failing.iter().all(|(_, c)| c.counterexample.is_some()));
    }

    #[test]
    fn battery_members_pass_quickly() {
        // a fast smoke pass; the acceptance suite runs the full settings
        for member in standard_battery() {
            let report = verify_properties(&member.group, &member.h, &member.k, 1, 3).unwrap();
            assert!(report.all_passed(), "{}: {report}", member.name);
        }
    }
}
