//! Property tests for the structural invariants: downward closure after
//! construction, duality as an involution, face-count bookkeeping, the
//! blocker involution, and order-invariance of the bottleneck element.

use proptest::prelude::*;

use rookery::bottleneck::{
    blocker, bottleneck_via_morse, minmax_bruteforce, Clutter, Weighting,
};
use rookery::complex::{join, SimplicialComplex};
use rookery::face::Face;

/// A random facet family over a ground set of size m <= 5.
fn facet_family() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (1usize..=5).prop_flat_map(|m| {
        let mask = (1u32 << m) - 1;
        (
            Just(m),
            prop::collection::vec(0u32..=mask, 0..6),
        )
    })
}

fn complex_from(m: usize, bits: &[u32]) -> SimplicialComplex {
    let facets = bits
        .iter()
        .map(|&b| Face::from_bits(b as u128))
        .collect();
    SimplicialComplex::from_facets(m, facets).expect("facets are in range")
}

proptest! {
    #[test]
    fn closure_holds_and_f_vector_counts_everything((m, bits) in facet_family()) {
        let k = complex_from(m, &bits);
        prop_assert!(k.is_downward_closed());
        let total: usize = k.f_vector().iter().sum();
        let empty = usize::from(!k.is_void());
        prop_assert_eq!(total + empty, k.face_count());
        prop_assert_eq!(k.is_void(), bits.is_empty());
    }

    #[test]
    fn alexander_duality_is_an_involution((m, bits) in facet_family()) {
        let k = complex_from(m, &bits);
        let double = k.alexander_dual().alexander_dual();
        prop_assert_eq!(double, k);
    }

    #[test]
    fn dual_membership_is_complement_nonface((m, bits) in facet_family()) {
        let k = complex_from(m, &bits);
        let dual = k.alexander_dual();
        prop_assert!(dual.is_downward_closed());
        for s in 0..(1u128 << m) {
            let s = Face::from_bits(s);
            prop_assert_eq!(
                dual.contains(s),
                !k.contains(s.complement_in(m)),
                "membership rule fails at {}", s
            );
        }
    }

    #[test]
    fn skeleton_is_a_filtered_subcomplex((m, bits) in facet_family(), k_dim in -1i64..4) {
        let k = complex_from(m, &bits);
        let sk = k.skeleton(k_dim);
        prop_assert!(sk.is_downward_closed());
        prop_assert!(sk.faces().all(|f| f.dim() <= k_dim && k.contains(f)));
        prop_assert!(k.faces().filter(|f| f.dim() <= k_dim).all(|f| sk.contains(f)));
    }

    #[test]
    fn join_multiplies_face_counts((m1, b1) in facet_family(), (m2, b2) in facet_family()) {
        let k1 = complex_from(m1, &b1);
        let k2 = complex_from(m2, &b2);
        let j = join(&[k1.clone(), k2.clone()]).unwrap();
        prop_assert!(j.is_downward_closed());
        if k1.is_void() || k2.is_void() {
            prop_assert!(j.is_void());
        } else {
            prop_assert_eq!(j.face_count(), k1.face_count() * k2.face_count());
        }
    }

    #[test]
    fn blocker_is_an_involution(
        ground in 2usize..=7,
        picks in prop::collection::vec(1u32..128, 1..5),
    ) {
        let mask = (1u32 << ground) - 1;
        let family: Vec<Face> = picks
            .iter()
            .filter_map(|&b| {
                let bits = b & mask;
                (bits != 0).then(|| Face::from_bits(bits as u128))
            })
            .collect();
        prop_assume!(!family.is_empty());
        let clutter = Clutter::from_family(ground, family).unwrap();
        prop_assume!(!clutter.is_empty());
        let double = blocker(&blocker(&clutter).unwrap()).unwrap();
        prop_assert_eq!(double, clutter);
    }

    #[test]
    fn increasing_reweighting_fixes_the_bottleneck_element(
        ground in 2usize..=6,
        picks in prop::collection::vec(1u32..64, 1..4),
        raw_weights in prop::collection::vec(-50i64..50, 6),
        scale in 1i64..5,
        shift in -10i64..10,
    ) {
        let mask = (1u32 << ground) - 1;
        let family: Vec<Face> = picks
            .iter()
            .filter_map(|&b| {
                let bits = b & mask;
                (bits != 0).then(|| Face::from_bits(bits as u128))
            })
            .collect();
        prop_assume!(!family.is_empty());
        let clutter = Clutter::from_family(ground, family).unwrap();
        prop_assume!(!clutter.is_empty());

        let f = Weighting::new(
            raw_weights[..ground].iter().map(|&w| w.into()).collect(),
        );
        // x -> scale * x + shift with scale > 0 preserves the element
        // order, including the index tie-break.
        let g = Weighting::new(
            raw_weights[..ground]
                .iter()
                .map(|&w| (scale * w + shift).into())
                .collect(),
        );
        let before = bottleneck_via_morse(&clutter, &f).unwrap();
        let after = bottleneck_via_morse(&clutter, &g).unwrap();
        prop_assert_eq!(before.element, after.element);
        prop_assert_eq!(before.critical, after.critical);
        prop_assert_eq!(
            before.value,
            minmax_bruteforce(&clutter, &f).unwrap().value
        );
    }
}
