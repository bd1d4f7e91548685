//! End-to-end acceptance suite. Each test prints one pass/fail line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use transfer::{
    det_cofactor, det_commutative, det_transfer, left_regular_rep, left_transfer,
    parse_element, right_regular_rep, standard_battery, verify_properties,
    verify_properties_with_systems, AlgebraElement, AlgebraMatrix, CosetSystem, FiniteGroup,
    QuotientGroup, Ring, Side, SubgroupRef,
};

fn report(name: &str, failures: &[String], elapsed: Duration, budget: Duration) {
    let timed_out = elapsed > budget;
    if failures.is_empty() && !timed_out {
        println!("{name}: PASS ({elapsed:.2?})");
    } else {
        println!("{name}: FAIL ({elapsed:.2?})");
        for f in failures {
            println!("  {f}");
        }
        if timed_out {
            println!("  exceeded time budget {budget:.2?}");
        }
    }
    assert!(failures.is_empty(), "{name}: {failures:?}");
    assert!(!timed_out, "{name}: exceeded {budget:?} (took {elapsed:?})");
}

fn remark_setup() -> (Arc<FiniteGroup>, QuotientGroup, CosetSystem) {
    let g = FiniteGroup::direct_product(
        &FiniteGroup::cyclic(2).unwrap(),
        &FiniteGroup::dihedral(3).unwrap(),
    )
    .unwrap();
    let h = SubgroupRef::new(Arc::clone(&g), (0..6).collect()).unwrap();
    let k = h.commutator_subgroup();
    let q = QuotientGroup::new(h.clone(), k).unwrap();
    let cs = CosetSystem::decompose(Arc::clone(&g), h, Side::Left, None).unwrap();
    (g, q, cs)
}

#[test]
fn criterion_1_invertibility_example() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let (g, q, cs) = remark_setup();
    let r = Ring::Rat;
    // alpha = (0,e) + (0,a) + (0,a2); D3 sits at indices 0..6 with a at 2, a2 at 4
    let alpha =
        AlgebraElement::from_terms(r, Arc::clone(&g), [(0, r.one()), (2, r.one()), (4, r.one())])
            .unwrap();
    let det = det_transfer(&q, &cs, &alpha).unwrap();
    let nine =
        AlgebraElement::single(r, Arc::clone(&q.cosets), 0).scale(&r.from_i64(9));
    if det != nine {
        failures.push(format!("Det(alpha) = {}, expected 9*K0", det.render()));
    }
    if alpha.is_invertible() {
        failures.push("alpha reported invertible in QG".into());
    }
    if !det.is_invertible() {
        failures.push("Det(alpha) reported non-invertible in Q(H/K)".into());
    }
    report("criterion 1 (invertibility example)", &failures, start.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_2_order_two_circulant() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let g = FiniteGroup::cyclic(2).unwrap();
    let h = SubgroupRef::trivial(Arc::clone(&g));
    let cs = CosetSystem::decompose(Arc::clone(&g), h, Side::Left, None).unwrap();
    let r = Ring::Rat;
    let mut rng = StdRng::seed_from_u64(202);
    for _ in 0..100 {
        let x = Coord::sample(&mut rng);
        let y = Coord::sample(&mut rng);
        let alpha = AlgebraElement::from_terms(
            r,
            Arc::clone(&g),
            [(0, x.clone()), (1, y.clone())],
        )
        .unwrap();
        let m = left_regular_rep(&cs, &alpha).unwrap();
        let e0 = |c: &transfer::Coeff| AlgebraElement::from_terms(r, Arc::clone(&g), [(0, c.clone())]).unwrap();
        let expected = AlgebraMatrix::new(
            r,
            Arc::clone(&g),
            vec![vec![e0(&x), e0(&y)], vec![e0(&y), e0(&x)]],
        )
        .unwrap();
        if m != expected {
            failures.push(format!("x={} y={}", r.render(&x), r.render(&y)));
            break;
        }
    }
    report("criterion 2 (order-two circulant)", &failures, start.elapsed(), Duration::from_secs(1));
}

// random nonzero rational p/q with small numerator and denominator
struct Coord;
impl Coord {
    fn sample(rng: &mut StdRng) -> transfer::Coeff {
        let r = Ring::Rat;
        loop {
            let p = rng.gen_range(-20i64..=20);
            let q = rng.gen_range(1i64..=9);
            let c = r.parse(&format!("{p}/{q}")).unwrap();
            if !r.is_zero(&c) {
                return c;
            }
        }
    }
}

#[test]
fn criterion_3_property_suite_on_battery() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for member in standard_battery() {
        for seed in [1u64, 42, 1337] {
            let rep = verify_properties(&member.group, &member.h, &member.k, seed, 100).unwrap();
            if !rep.all_passed() {
                for (name, check) in rep.checks() {
                    if !check.passed {
                        failures.push(format!(
                            "{} seed={seed} check={name}: {:?}",
                            member.name, check.counterexample
                        ));
                    }
                }
            }
        }
    }
    report("criterion 3 (property suite)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_4_f2_regime() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let f2 = Ring::Mod(2);
    for member in standard_battery() {
        let q = QuotientGroup::new(member.h.clone(), member.k.clone()).unwrap();
        let cs = CosetSystem::decompose(
            Arc::clone(&member.group),
            member.h.clone(),
            Side::Left,
            None,
        )
        .unwrap();
        for g in 0..member.group.order {
            let det = det_transfer(
                &q,
                &cs,
                &AlgebraElement::single(f2, Arc::clone(&member.group), g),
            )
            .unwrap();
            let v = left_transfer(&q, &cs, g).unwrap();
            let expected = AlgebraElement::single(f2, Arc::clone(&q.cosets), v.coset);
            if det != expected {
                failures.push(format!("{} g={}", member.name, member.group.label(g)));
            }
        }
    }
    report("criterion 4 (F2 regime)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_5_left_right_rep_equality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(505);
    for member in standard_battery() {
        let left = CosetSystem::decompose(
            Arc::clone(&member.group),
            member.h.clone(),
            Side::Left,
            None,
        )
        .unwrap();
        let right = left.inverse_reps().unwrap();
        for _ in 0..100 {
            let n = member.group.order;
            let terms: Vec<_> = (0..rng.gen_range(1..=n))
                .map(|_| (rng.gen_range(0..n), Ring::Rat.from_i64(rng.gen_range(-9..=9))))
                .collect();
            let alpha =
                AlgebraElement::from_terms(Ring::Rat, Arc::clone(&member.group), terms).unwrap();
            if right_regular_rep(&right, &alpha).unwrap() != left_regular_rep(&left, &alpha).unwrap()
            {
                failures.push(format!("{} alpha={}", member.name, alpha.render()));
                break;
            }
        }
    }
    report("criterion 5 (R over T^-1 = L over T)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_6_abelian_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for member in standard_battery() {
        if !member.group.is_abelian() {
            continue;
        }
        let q = QuotientGroup::new(member.h.clone(), member.k.clone()).unwrap();
        let cs = CosetSystem::decompose(
            Arc::clone(&member.group),
            member.h.clone(),
            Side::Left,
            None,
        )
        .unwrap();
        let m = cs.index();
        for g in 0..member.group.order {
            let v = left_transfer(&q, &cs, g).unwrap();
            let power = member.group.pow(g, m);
            if v.coset != q.class_of(power).unwrap() {
                failures.push(format!("{} g={}", member.name, member.group.label(g)));
            }
        }
    }
    report("criterion 6 (abelian power oracle)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_7_determinant_cross_check() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut rng = StdRng::seed_from_u64(707);
    let carriers = [
        FiniteGroup::cyclic(1).unwrap(),
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::cyclic(4).unwrap(),
    ];
    let mut count = 0;
    'outer: while count < 200 {
        for dim in 1..=5usize {
            let carrier = &carriers[count % carriers.len()];
            let entries: Vec<Vec<AlgebraElement>> = (0..dim)
                .map(|_| {
                    (0..dim)
                        .map(|_| {
                            let terms: Vec<_> = (0..rng.gen_range(0..=carrier.order))
                                .map(|_| {
                                    (
                                        rng.gen_range(0..carrier.order),
                                        Ring::Rat.from_i64(rng.gen_range(-5..=5)),
                                    )
                                })
                                .collect();
                            AlgebraElement::from_terms(Ring::Rat, Arc::clone(carrier), terms)
                                .unwrap()
                        })
                        .collect()
                })
                .collect();
            let m = AlgebraMatrix::new(Ring::Rat, Arc::clone(carrier), entries).unwrap();
            if det_commutative(&m).unwrap() != det_cofactor(&m).unwrap() {
                failures.push(format!("dim={dim} carrier order {}", carrier.order));
                break 'outer;
            }
            count += 1;
        }
    }
    report("criterion 7 (Leibniz vs cofactor)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_8_mutation_sensitivity() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // corrupt one Cayley-table entry of Z/4
    let g = FiniteGroup::cyclic(4).unwrap();
    let mut table = g.table.clone();
    table[1][1] = 3;
    let bad = FiniteGroup::from_parts_unchecked(table, g.identity, g.inverses.clone(), None);
    let h = SubgroupRef::new(Arc::clone(&bad), vec![0, 2]).unwrap();
    let k = SubgroupRef::trivial(Arc::clone(&bad));
    let rep = verify_properties(&bad, &h, &k, 11, 10).unwrap();
    if rep.all_passed() {
        failures.push("corrupted Cayley table went undetected".into());
    } else if rep
        .checks()
        .iter()
        .filter(|(_, c)| !c.passed)
        .any(|(_, c)| c.counterexample.is_none())
    {
        failures.push("a failing check carried no counterexample".into());
    }

    // corrupt one representative-lookup entry of a sound system
    let g = FiniteGroup::cyclic(6).unwrap();
    let h = SubgroupRef::new(Arc::clone(&g), vec![0, 3]).unwrap();
    let k = SubgroupRef::trivial(Arc::clone(&g));
    let q = QuotientGroup::new(h.clone(), k).unwrap();
    let mut left = CosetSystem::decompose(Arc::clone(&g), h.clone(), Side::Left, None).unwrap();
    let right = CosetSystem::decompose(Arc::clone(&g), h, Side::Right, None).unwrap();
    left.rep_of[4] = 0; // element 4 belongs to the coset of 1
    let rep = verify_properties_with_systems(&q, &left, &right, 11, 10).unwrap();
    if rep.all_passed() {
        failures.push("corrupted rep lookup went undetected".into());
    } else if rep
        .checks()
        .iter()
        .filter(|(_, c)| !c.passed)
        .any(|(_, c)| c.counterexample.is_none())
    {
        failures.push("a failing check carried no counterexample".into());
    }

    report("criterion 8 (mutation sensitivity)", &failures, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn cli_det_matches_library() {
    // the CLI path of the invertibility example, end to end through a file
    use std::io::Write;
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{
            "group": {{"product": [{{"cyclic": 2}}, {{"dihedral": 3}}]}},
            "labels": ["e", "b", "a", "ab", "a2", "a2b",
                       "ze", "zb", "za", "zab", "za2", "za2b"],
            "subgroups": {{
                "H": {{"members": ["e", "b", "a", "ab", "a2", "a2b"]}},
                "K": {{"generators": ["a"]}}
            }}
        }}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let (code, out) = transfer::cli::run_command([
        "transfer", "det", "--group", &path, "--subgroup", "H", "--kernel", "K",
        "--alpha", "e + a + a2", "--ring", "rat",
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.trim(), "9*K0");
    let (_, lib_out) = {
        let (g, q, cs) = remark_setup();
        let alpha = parse_element(Ring::Rat, &g, "(0,e) + (0,a) + (0,a2)").unwrap();
        (0, det_transfer(&q, &cs, &alpha).unwrap().render())
    };
    assert_eq!(out.trim(), lib_out);
}
