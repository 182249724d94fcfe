//! Oracle equivalence for the antichain reduction: the monotonicity verdict
//! quantified over antichain pairs must equal the verdict quantified over
//! all non-empty subset pairs, on every enumerated small algebra and on
//! randomly sampled larger ones.

use unsharp_core::effect::{EffectAlgebra, ExhaustiveLimits, MonotonicityMode};
use unsharp_core::enumerate::{
    enumerate_structures, sample_effect_algebras, EnumeratedStructure, SearchSpec, StructureKind,
};
use unsharp_core::poset::{Elem, ElementSet};

/// Brute force over every non-empty subset pair of the bound's down-set.
fn monotonous_all_subsets(e: &EffectAlgebra) -> bool {
    let ord = e.induced_order();
    let n = e.size();
    assert!(n <= 12);
    for x in 0..n {
        let dom: Vec<Elem> = ord.down_set(e.comp(x)).iter().collect();
        let m = dom.len();
        let subsets: Vec<ElementSet> = (1u32..1 << m)
            .map(|bits| (0..m).filter(|&i| bits >> i & 1 == 1).map(|i| dom[i]).collect())
            .collect();
        for &a in &subsets {
            let la = ord.lower_cone(a);
            let l_img_a = ord.lower_cone(e.plus_image(x, a).unwrap());
            for &b in &subsets {
                if !ord.set_leq(la, ord.upper_cone(b)) {
                    continue;
                }
                let u_img_b = ord.upper_cone(e.plus_image(x, b).unwrap());
                if !ord.set_leq(l_img_a, u_img_b) {
                    return false;
                }
            }
        }
    }
    true
}

fn antichain_verdict(e: &EffectAlgebra) -> bool {
    e.check_monotonous_with_limits(
        MonotonicityMode::Exhaustive,
        ExhaustiveLimits { max_carrier: 12, max_pairs: u64::MAX },
    )
    .unwrap()
    .passed()
}

#[test]
fn verdicts_agree_on_all_enumerated_up_to_order_5() {
    for order in 2..=5 {
        let row = enumerate_structures(&SearchSpec::new(order, StructureKind::Effect)).unwrap();
        for rep in row.representatives {
            let EnumeratedStructure::Effect(e) = rep.structure else { unreachable!() };
            assert_eq!(antichain_verdict(&e), monotonous_all_subsets(&e), "order {order}");
        }
    }
}

#[test]
fn verdicts_agree_on_200_sampled_candidates_up_to_order_8() {
    let mut candidates = Vec::new();
    candidates.extend(sample_effect_algebras(6, 67, 0xA11CE).unwrap());
    candidates.extend(sample_effect_algebras(7, 67, 0xB0B).unwrap());
    candidates.extend(sample_effect_algebras(8, 66, 0xC0FFEE).unwrap());
    assert_eq!(candidates.len(), 200);
    let mut nonmonotonous = 0usize;
    for e in &candidates {
        let reduced = antichain_verdict(e);
        assert_eq!(reduced, monotonous_all_subsets(e));
        if !reduced {
            nonmonotonous += 1;
        }
    }
    // the sample spans both verdicts, otherwise the test is vacuous
    assert!(nonmonotonous > 0, "all 200 candidates monotonous; sample is too tame");
    assert!(nonmonotonous < 200);
}
