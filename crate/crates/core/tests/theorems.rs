//! Theorem-level sweeps over every enumerated structure: the conversion
//! theorems, the round trips, and the derived consequences of the converse
//! proofs.

use unsharp_core::effect::{EffectAlgebra, MonotonicityMode};
use unsharp_core::enumerate::{enumerate_structures, EnumeratedStructure, SearchSpec, StructureKind};
use unsharp_core::pseudo::{embed_commutative, PseudoEffectAlgebra};
use unsharp_core::transforms::{curp_to_ea, ea_to_curp, pea_to_urp, roundtrip_ea, roundtrip_pea, urp_to_pea};

fn effect_algebras(max_order: usize) -> Vec<EffectAlgebra> {
    (2..=max_order)
        .flat_map(|order| {
            enumerate_structures(&SearchSpec::new(order, StructureKind::Effect))
                .unwrap()
                .representatives
        })
        .map(|r| match r.structure {
            EnumeratedStructure::Effect(e) => e,
            _ => unreachable!(),
        })
        .collect()
}

fn pea_algebras(max_order: usize) -> Vec<PseudoEffectAlgebra> {
    (2..=max_order)
        .flat_map(|order| {
            enumerate_structures(&SearchSpec::new(order, StructureKind::Pseudoeffect))
                .unwrap()
                .representatives
        })
        .map(|r| match r.structure {
            EnumeratedStructure::Pseudo(p) => p,
            _ => unreachable!(),
        })
        .collect()
}

#[test]
fn monotonous_effect_algebras_yield_divisible_curps() {
    for e in effect_algebras(6) {
        let monotonous = e.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed();
        let curp = ea_to_curp(&e);
        if monotonous {
            let axioms = curp.check_axioms().unwrap();
            assert!(axioms.passed(), "order {}: {axioms}", e.size());
            let div = curp.check_divisible().unwrap();
            assert!(div.passed(), "order {}: {div}", e.size());
            // derived consequences of the converse proof
            for x in 0..e.size() {
                assert_eq!(curp.odot().get(x, curp.comp(x)), Some(0));
            }
            for (x, y, v) in curp.odot().iter_defined() {
                if v == 0 {
                    assert_eq!(y, curp.comp(x));
                }
            }
        }
    }
}

#[test]
fn roundtrip_is_identity_on_all_enumerated_effect_algebras() {
    // The algebraic round trip needs no monotonicity at all.
    for e in effect_algebras(6) {
        let r = roundtrip_ea(&e);
        assert!(r.passed(), "order {}: {r}", e.size());
        let back = curp_to_ea(&ea_to_curp(&e)).unwrap();
        assert_eq!(back, e);
    }
}

#[test]
fn decomposition_implies_monotonous_on_all_enumerated() {
    for e in effect_algebras(6) {
        let decomp = e.check_decomposition_sufficiency().unwrap();
        let mono = e.check_monotonous(MonotonicityMode::Exhaustive).unwrap();
        if decomp.passed() {
            assert!(mono.passed(), "order {}", e.size());
        } else {
            // the cross-assert inside the checker must never have fired
            assert!(decomp
                .failures()
                .iter()
                .all(|f| !matches!(f.axiom, unsharp_core::report::AxiomTag::TheoremViolation(_))));
        }
    }
}

#[test]
fn dual_monotonicity_follows_from_monotonicity() {
    for e in effect_algebras(6) {
        let mono = e.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed();
        if mono {
            let dual = e.check_dual_monotonicity().unwrap();
            assert!(dual.passed(), "order {}: {dual}", e.size());
        }
    }
}

#[test]
fn good_monotonous_peas_yield_divisible_urps() {
    for p in pea_algebras(5) {
        let good = p.check_good().passed();
        let mono = p.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed();
        if !(good && mono) {
            continue;
        }
        let urp = pea_to_urp(&p);
        let axioms = urp.check_axioms().unwrap();
        assert!(axioms.passed(), "order {}: {axioms}", p.size());
        let div = urp.check_divisible().unwrap();
        assert!(div.passed(), "order {}: {div}", p.size());
        // x . ~x = 0 and bar x . x = 0
        for x in 0..p.size() {
            assert_eq!(urp.odot().get(x, urp.rcomp(x)), Some(0));
            assert_eq!(urp.odot().get(urp.lcomp(x), x), Some(0));
        }
        // round trip
        let back = urp_to_pea(&urp).unwrap();
        assert_eq!(back, p);
        assert!(roundtrip_pea(&p).passed());
    }
}

#[test]
fn complements_coincide_exactly_on_commutative_peas() {
    for p in pea_algebras(5) {
        let coincide = (0..p.size()).all(|x| p.lcomp(x) == p.rcomp(x));
        assert_eq!(coincide, p.is_commutative(), "order {}", p.size());
    }
}

#[test]
fn embeddings_of_enumerated_effect_algebras_are_good() {
    for e in effect_algebras(5) {
        let p = embed_commutative(&e);
        assert!(p.check_good().passed());
        assert_eq!(p.induced_order(), e.induced_order());
        let m_e = e.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed();
        let m_p = p.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed();
        assert_eq!(m_e, m_p);
    }
}

#[test]
fn nonmonotonous_witness_exists_at_order_6_and_fails_decomposition() {
    let witness = effect_algebras(6)
        .into_iter()
        .find(|e| !e.check_monotonous(MonotonicityMode::Exhaustive).unwrap().passed())
        .expect("order 6 contains a non-monotonous effect algebra");
    assert_eq!(witness.size(), 6);
    let decomp = witness.check_decomposition_sufficiency().unwrap();
    assert!(!decomp.passed());
    // it is also the minimal non-lattice-ordered example
    assert!(!witness.induced_order().is_lattice(witness.carrier()).passed());
}
