//! Exhaustive perfectness sweep on five-element ground sets: the
//! two-step matching leaves exactly two critical cells (the base vertex
//! and one top cell) on every admissible complex, matching the Betti
//! numbers of the 3-sphere.

use rookery::bier::bier_sphere;
use rookery::enumeration::all_bier_inputs;
use rookery::error::Error;
use rookery::face::Face;
use rookery::morse::bier_dmf;

#[test]
fn two_step_matching_is_perfect_on_all_five_element_inputs() {
    let mut matched = 0usize;
    let mut rejected = 0usize;
    for k in all_bier_inputs(5) {
        let bier = bier_sphere(&k).unwrap();
        match bier_dmf(&bier) {
            Ok(dvf) => {
                matched += 1;
                let mut dims: Vec<i64> = dvf
                    .critical_cells()
                    .unwrap()
                    .iter()
                    .map(|c| c.dim())
                    .collect();
                dims.sort();
                assert_eq!(dims, vec![0, 3], "imperfect matching for {k:?}");
                assert!(dvf.is_acyclic().unwrap().is_acyclic(), "cycle for {k:?}");
            }
            Err(Error::TrivialDual) => {
                rejected += 1;
                assert_eq!(bier.dual().dim(), Some(-1));
            }
            Err(Error::BaseVertexMissing) => {
                rejected += 1;
                assert!(!bier.dual().contains(Face::singleton(0)));
            }
            Err(e) => panic!("unexpected error {e} for {k:?}"),
        }
    }
    // 7581 complexes on [5], minus the void complex and the full powerset.
    assert_eq!(matched + rejected, 7579);
    assert!(matched > 5000, "population skew: only {matched} matched");
}

#[test]
fn bier_spheres_on_five_elements_are_two_connected() {
    use rand::SeedableRng;
    use rookery::enumeration::random_bier_input;
    use rookery::homology::{homological_connectivity, HomConnectivity};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..25 {
        let k = random_bier_input(5, &mut rng);
        let bier = bier_sphere(&k).unwrap();
        assert_eq!(
            homological_connectivity(bier.complex()).unwrap(),
            HomConnectivity::UpTo(2),
            "Bier of {k:?} should be exactly 2-connected homologically"
        );
    }
}
