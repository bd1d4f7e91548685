//! The fixed set of (G, H, K) triples the verification suite runs on.
//! Covers indices 1 through 4, abelian and nonabelian H, trivial and
//! nontrivial kernels, and the order-12 product group of the invertibility
//! example.

use std::sync::Arc;

use crate::group::{FiniteGroup, SubgroupRef};

pub struct BatteryMember {
    pub name: &'static str,
    pub group: Arc<FiniteGroup>,
    pub h: SubgroupRef,
    pub k: SubgroupRef,
}

/// The quaternion group Q8 on {1, -1, i, -i, j, -j, k, -k}.
pub fn quaternion_group() -> Arc<FiniteGroup> {
    // axis 0 is the unit; (axis, sign) pairs index as 2*axis + sign
    const AXIS: [[usize; 4]; 4] = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ];
    const NEG: [[usize; 4]; 4] = [
        [0, 0, 0, 0],
        [0, 1, 0, 1],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
    ];
    let table = (0..8usize)
        .map(|x| {
            (0..8usize)
                .map(|y| {
                    let (ax, sx) = (x / 2, x % 2);
                    let (ay, sy) = (y / 2, y % 2);
                    2 * AXIS[ax][ay] + (sx ^ sy ^ NEG[ax][ay])
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(str::to_string)
        .to_vec();
    FiniteGroup::build_from_table(table, Some(labels)).expect("Q8 table is a group")
}

pub fn standard_battery() -> Vec<BatteryMember> {
    let mut out = Vec::new();

    let z2 = FiniteGroup::cyclic(2).unwrap();
    out.push(BatteryMember {
        name: "Z2: H=G, K=trivial",
        h: SubgroupRef::full(Arc::clone(&z2)),
        k: SubgroupRef::trivial(Arc::clone(&z2)),
        group: z2,
    });

    let z4 = FiniteGroup::cyclic(4).unwrap();
    out.push(BatteryMember {
        name: "Z4: H={0,2}, K=trivial",
        h: SubgroupRef::new(Arc::clone(&z4), vec![0, 2]).unwrap(),
        k: SubgroupRef::trivial(Arc::clone(&z4)),
        group: z4,
    });

    let z6 = FiniteGroup::cyclic(6).unwrap();
    out.push(BatteryMember {
        name: "Z6: H={0,3}, K=trivial",
        h: SubgroupRef::new(Arc::clone(&z6), vec![0, 3]).unwrap(),
        k: SubgroupRef::trivial(Arc::clone(&z6)),
        group: z6,
    });

    let s3 = FiniteGroup::symmetric(3).unwrap();
    let a3 = SubgroupRef::closure(Arc::clone(&s3), &[s3.index_of_label("231").unwrap()]).unwrap();
    out.push(BatteryMember {
        name: "S3: H=A3, K=trivial",
        h: a3,
        k: SubgroupRef::trivial(Arc::clone(&s3)),
        group: Arc::clone(&s3),
    });
    let swap = SubgroupRef::closure(Arc::clone(&s3), &[s3.index_of_label("213").unwrap()]).unwrap();
    out.push(BatteryMember {
        name: "S3: H=<(12)>, K=trivial",
        h: swap,
        k: SubgroupRef::trivial(Arc::clone(&s3)),
        group: s3,
    });

    let d4 = FiniteGroup::dihedral(4).unwrap();
    let a = d4.index_of_label("a").unwrap();
    let center = SubgroupRef::closure(Arc::clone(&d4), &[d4.mul(a, a)]).unwrap();
    out.push(BatteryMember {
        name: "D4: H=center, K=[H,H]",
        k: center.commutator_subgroup(),
        h: center,
        group: Arc::clone(&d4),
    });
    let rotations = SubgroupRef::closure(Arc::clone(&d4), &[a]).unwrap();
    out.push(BatteryMember {
        name: "D4: H=<a>, K=[H,H]",
        k: rotations.commutator_subgroup(),
        h: rotations,
        group: d4,
    });

    let q8 = quaternion_group();
    let i_cyclic = SubgroupRef::closure(Arc::clone(&q8), &[q8.index_of_label("i").unwrap()]).unwrap();
    out.push(BatteryMember {
        name: "Q8: H=<i>, K=trivial",
        h: i_cyclic,
        k: SubgroupRef::trivial(Arc::clone(&q8)),
        group: q8,
    });

    let g12 = FiniteGroup::direct_product(
        &FiniteGroup::cyclic(2).unwrap(),
        &FiniteGroup::dihedral(3).unwrap(),
    )
    .unwrap();
    let d3_factor = SubgroupRef::new(Arc::clone(&g12), (0..6).collect()).unwrap();
    out.push(BatteryMember {
        name: "Z2xD3: H=D3, K=[D3,D3]",
        k: d3_factor.commutator_subgroup(),
        h: d3_factor,
        group: g12,
    });

    let s4 = FiniteGroup::symmetric(4).unwrap();
    let a4 = SubgroupRef::closure(
        Arc::clone(&s4),
        &[
            s4.index_of_label("2314").unwrap(),
            s4.index_of_label("2431").unwrap(),
        ],
    )
    .unwrap();
    let v4 = SubgroupRef::closure(
        Arc::clone(&s4),
        &[
            s4.index_of_label("2143").unwrap(),
            s4.index_of_label("3412").unwrap(),
        ],
    )
    .unwrap();
    out.push(BatteryMember { name: "S4: H=A4, K=V4", h: a4, k: v4, group: s4 });

    out
}
