//! Exhaustive and randomized generators for small complexes and clutters.
//!
//! Exhaustive enumeration walks the downward-closed families of subsets of
//! \[m\]; their number is the Dedekind number of m (20, 168, 7581 for
//! m = 3, 4, 5), so this is strictly a desk-scale tool.

use std::collections::HashSet;

use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::face::Face;

/// All simplicial complexes on the ground set \[m\], the void complex and
/// the full powerset included. Supported for m <= 5.
pub fn all_complexes(m: usize) -> Vec<SimplicialComplex> {
    assert!(m <= 5, "exhaustive enumeration is limited to m <= 5");
    let n_sets = 1usize << m;

    // Subsets of [m] ordered by size; a family is a u64 mask over this
    // ordering. Downward closure only ever looks at earlier positions.
    let mut order: Vec<u32> = (0..n_sets as u32).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let mut position = vec![0usize; n_sets];
    for (idx, &s) in order.iter().enumerate() {
        position[s as usize] = idx;
    }
    let boundary_mask: Vec<u64> = order
        .iter()
        .map(|&s| {
            let mut mask = 0u64;
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                mask |= 1u64 << position[(s & !(1u32 << v)) as usize];
            }
            mask
        })
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((idx, family)) = stack.pop() {
        if idx == n_sets {
            let faces: HashSet<Face> = order
                .iter()
                .enumerate()
                .filter(|(i, _)| family & (1u64 << i) != 0)
                .map(|(_, &s)| Face::from_bits(s as u128))
                .collect();
            out.push(SimplicialComplex::from_closed_faces(m, faces));
            continue;
        }
        // Excluding a set forces excluding all its supersets, but supersets
        // come later, checked by their own boundary masks.
        stack.push((idx + 1, family));
        if boundary_mask[idx] & family == boundary_mask[idx] {
            stack.push((idx + 1, family | (1u64 << idx)));
        }
    }
    out.sort_by_key(|k| k.faces_sorted());
    out
}

/// All nonvoid proper complexes on \[m\]: valid inputs for the Bier sphere.
pub fn all_bier_inputs(m: usize) -> Vec<SimplicialComplex> {
    all_complexes(m)
        .into_iter()
        .filter(|k| !k.is_void() && !k.is_full())
        .collect()
}

/// A random nonvoid proper complex on \[m\], drawn as the closure of a
/// random facet family.
pub fn random_bier_input<R: Rng>(m: usize, rng: &mut R) -> SimplicialComplex {
    loop {
        let n_facets = rng.gen_range(1..=m + 2);
        let facets: Vec<Face> = (0..n_facets)
            .map(|_| {
                // Bias towards mid-size facets so duals stay interesting.
                let size = rng.gen_range(0..=m.saturating_sub(1));
                let mut verts: Vec<usize> = (0..m).collect();
                for i in (1..verts.len()).rev() {
                    verts.swap(i, rng.gen_range(0..=i));
                }
                Face::from_vertices(verts.into_iter().take(size)).unwrap()
            })
            .collect();
        let k = SimplicialComplex::from_facets(m, facets).unwrap();
        if !k.is_void() && !k.is_full() {
            return k;
        }
    }
}

/// A random clutter on \[ground\] with at least one member.
pub fn random_clutter<R: Rng>(ground: usize, rng: &mut R) -> crate::bottleneck::Clutter {
    loop {
        let n_members = rng.gen_range(1..=ground.max(2));
        let family: Vec<Face> = (0..n_members)
            .map(|_| Face::from_bits(rng.gen_range(1..(1u128 << ground))))
            .collect();
        if let Ok(clutter) = crate::bottleneck::Clutter::from_family(ground, family) {
            if !clutter.is_empty() {
                return clutter;
            }
        }
    }
}

/// Random pairwise-distinct rational weights on \[n\].
pub fn random_injective_weighting<R: Rng>(n: usize, rng: &mut R) -> crate::bottleneck::Weighting {
    let mut seen = HashSet::new();
    let mut values = Vec::with_capacity(n);
    while values.len() < n {
        let q = num_rational::Rational64::new(rng.gen_range(-999..1000), rng.gen_range(1..8));
        if seen.insert(q) {
            values.push(q);
        }
    }
    crate::bottleneck::Weighting::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn complex_counts_match_dedekind_numbers() {
        assert_eq!(all_complexes(0).len(), 2); // void and {{}}
        assert_eq!(all_complexes(1).len(), 3);
        assert_eq!(all_complexes(2).len(), 6);
        assert_eq!(all_complexes(3).len(), 20);
        assert_eq!(all_complexes(4).len(), 168);
    }

    #[test]
    fn enumerated_families_are_closed() {
        for k in all_complexes(3) {
            assert!(k.is_downward_closed());
        }
    }

    #[test]
    fn bier_inputs_exclude_void_and_full() {
        let inputs = all_bier_inputs(3);
        assert_eq!(inputs.len(), 18);
        assert!(inputs.iter().all(|k| !k.is_void() && !k.is_full()));
    }

    #[test]
    fn random_generators_are_deterministic_under_a_seed() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        assert_eq!(random_clutter(5, &mut a), random_clutter(5, &mut b));
        assert_eq!(
            random_injective_weighting(5, &mut a),
            random_injective_weighting(5, &mut b)
        );
        assert_eq!(random_bier_input(5, &mut a), random_bier_input(5, &mut b));
    }
}
