use std::sync::Arc;

use proptest::prelude::*;

use transfer::{
    parse_element, AlgebraElement, CosetSystem, FiniteGroup, Ring, Side, SubgroupRef,
};

fn rational(r: Ring, p: i64, q: i64) -> transfer::Coeff {
    r.parse(&format!("{p}/{q}")).unwrap()
}

proptest! {
    // parse is a left inverse of render
    #[test]
    fn render_parse_roundtrip(coeffs in proptest::collection::vec((-50i64..=50, 1i64..=12), 0..8)) {
        let g = FiniteGroup::dihedral(4).unwrap();
        let r = Ring::Rat;
        let terms: Vec<_> = coeffs
            .iter()
            .enumerate()
            .map(|(i, &(p, q))| (i % g.order, rational(r, p, q)))
            .collect();
        let alpha = AlgebraElement::from_terms(r, Arc::clone(&g), terms).unwrap();
        let back = parse_element(r, &g, &alpha.render()).unwrap();
        prop_assert_eq!(back, alpha);
    }

    // g = t * h where t is g's representative and h its subgroup factor
    #[test]
    fn coset_factorization(n in 1usize..=12, d in 1usize..=12, g_pick in 0usize..144, seed in 0u64..1000) {
        let g = FiniteGroup::cyclic(n * d).unwrap();
        let members: Vec<usize> = (0..n * d).step_by(n).collect();
        let h = SubgroupRef::new(Arc::clone(&g), members).unwrap();
        let cs = CosetSystem::decompose(Arc::clone(&g), h, Side::Left, None)
            .unwrap()
            .resample(seed);
        let x = g_pick % g.order;
        let t = cs.representative(x);
        let hf = cs.h_factor(x);
        prop_assert_eq!(g.mul(t, hf), x);
    }

    // an invertible element times its inverse is the identity
    #[test]
    fn inverse_roundtrip(c0 in -6i64..=6, c1 in -6i64..=6, c2 in -6i64..=6) {
        let g = FiniteGroup::cyclic(3).unwrap();
        let r = Ring::Rat;
        let alpha = AlgebraElement::from_terms(
            r,
            Arc::clone(&g),
            [(0, r.from_i64(c0)), (1, r.from_i64(c1)), (2, r.from_i64(c2))],
        )
        .unwrap();
        if alpha.is_invertible() {
            let inv = alpha.inverse().unwrap();
            prop_assert_eq!(alpha.mul(&inv).unwrap(), AlgebraElement::one(r, Arc::clone(&g)));
        }
    }
}
