//! Bier spheres: the deleted join of a complex with its Alexander dual,
//! together with the (A1, A2; B) triple view of its faces.

use std::collections::HashSet;
use std::fmt;

use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;

/// Partition encoding of a face of the Bier sphere over \[m\]: A1 is a face
/// of K, A2 a face of the dual, B the rest of the ground set. The encoded
/// simplex has dimension |A1| + |A2| - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BierTriple {
    pub k_side: Face,
    pub dual_side: Face,
    pub rest: Face,
}

impl BierTriple {
    pub fn dim(&self) -> i64 {
        (self.k_side.len() + self.dual_side.len()) as i64 - 1
    }
}

impl fmt::Display for BierTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.k_side, self.dual_side, self.rest)
    }
}

/// The Bier sphere of a complex K over \[m\]: a complex on 2m vertices where
/// the first copy of \[m\] carries K-side vertices (indices 0..m-1) and the
/// second copy carries dual-side vertices (indices m..2m-1).
#[derive(Debug, Clone)]
pub struct BierComplex {
    base: SimplicialComplex,
    dual: SimplicialComplex,
    complex: SimplicialComplex,
}

impl BierComplex {
    pub fn m(&self) -> usize {
        self.base.ground_size()
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn dual(&self) -> &SimplicialComplex {
        &self.dual
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Splits a face of the sphere into its (A1, A2; B) triple. Faces that
    /// do not belong to the sphere are rejected.
    pub fn decode(&self, face: Face) -> Result<BierTriple> {
        if !self.complex.contains(face) {
            return Err(Error::ForeignBierFace(face));
        }
        Ok(self.split_unchecked(face))
    }

    pub(crate) fn split_unchecked(&self, face: Face) -> BierTriple {
        let m = self.m();
        let k_side = face.intersection(Face::prefix(m));
        let dual_side = Face::from_bits(face.bits() >> m);
        BierTriple {
            k_side,
            dual_side,
            rest: k_side.union(dual_side).complement_in(m),
        }
    }

    /// Inverse of `decode`.
    pub fn encode(&self, triple: &BierTriple) -> Result<Face> {
        let m = self.m();
        let joined = triple.k_side.union(triple.dual_side);
        let consistent = triple.k_side.is_disjoint(triple.dual_side)
            && triple.rest == joined.complement_in(m)
            && self.base.contains(triple.k_side)
            && self.dual.contains(triple.dual_side);
        let face = Face::from_bits(triple.k_side.bits() | (triple.dual_side.bits() << m));
        if !consistent || !self.complex.contains(face) {
            return Err(Error::ForeignBierFace(face));
        }
        Ok(face)
    }

    /// Facets with their triple decodings, sorted.
    pub fn facet_triples(&self) -> Vec<(Face, BierTriple)> {
        self.complex
            .facets()
            .into_iter()
            .map(|f| (f, self.split_unchecked(f)))
            .collect()
    }

    /// The unique triple (A1, A2; {i}) with A1 < i < A2, A1 in K and A2 in
    /// the dual. Every element of A1 below i and of A2 above i forces
    /// A1 = {1..i-1} and A2 = {i+1..m}, and membership singles out the i
    /// where the prefix chain of K breaks: {1..i-1} in K, {1..i} not in K.
    pub fn threshold_triple(&self) -> BierTriple {
        let m = self.m();
        for i in 0..m {
            let prefix = Face::prefix(i);
            if self.base.contains(prefix) && !self.base.contains(prefix.with(i)) {
                let suffix = Face::prefix(m).difference(Face::prefix(i + 1));
                return BierTriple {
                    k_side: prefix,
                    dual_side: suffix,
                    rest: Face::singleton(i),
                };
            }
        }
        unreachable!("a nonvoid proper complex always breaks its prefix chain")
    }
}

/// Builds Bier(K) = K joined with its Alexander dual under the pairwise
/// disjointness rule. Requires 2 <= m and a nonvoid proper complex, so the
/// dual is again a nonvoid proper complex.
pub fn bier_sphere(k: &SimplicialComplex) -> Result<BierComplex> {
    bier_sphere_with_cap(k, DEFAULT_FACE_CAP)
}

pub fn bier_sphere_with_cap(k: &SimplicialComplex, cap: usize) -> Result<BierComplex> {
    let m = k.ground_size();
    if m < 2 {
        return Err(Error::BierGroundTooSmall(m));
    }
    if k.is_void() {
        return Err(Error::BierOfVoidComplex);
    }
    if k.is_full() {
        return Err(Error::BierOfFullComplex);
    }
    let dual = k.alexander_dual_with_cap(cap)?;

    let mut faces: HashSet<Face> = HashSet::new();
    for a1 in k.faces() {
        for a2 in dual.faces() {
            if a1.is_disjoint(a2)
                && faces.insert(Face::from_bits(a1.bits() | (a2.bits() << m)))
                && faces.len() > cap
            {
                return Err(Error::TooManyFaces { cap });
            }
        }
    }
    let labels = (0..2 * m)
        .map(|v| {
            if v < m {
                format!("{}+", v + 1)
            } else {
                format!("{}-", v - m + 1)
            }
        })
        .collect();
    Ok(BierComplex {
        base: k.clone(),
        dual,
        complex: SimplicialComplex::from_closed_faces(2 * m, faces).with_labels(labels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::deleted_join_jwise;
    use crate::homology::sphere_check;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().map(|v| v - 1)).unwrap()
    }

    #[test]
    fn bier_of_three_points_is_a_hexagon() {
        let k = SimplicialComplex::discrete_points(3).unwrap();
        let bier = bier_sphere(&k).unwrap();
        assert_eq!(bier.dual(), &k, "three points on [3] are self-dual");
        assert_eq!(bier.complex().f_vector(), vec![6, 6]);
        assert!(sphere_check(bier.complex(), 1).unwrap());
    }

    #[test]
    fn bier_over_two_vertices_is_a_zero_sphere() {
        let k = SimplicialComplex::from_facets(2, vec![face(&[1])]).unwrap();
        let bier = bier_sphere(&k).unwrap();
        assert_eq!(bier.complex().f_vector(), vec![2]);
        let triples: Vec<BierTriple> = bier
            .complex()
            .faces_of_dim(0)
            .into_iter()
            .map(|f| bier.decode(f).unwrap())
            .collect();
        assert!(triples.contains(&BierTriple {
            k_side: face(&[1]),
            dual_side: Face::EMPTY,
            rest: face(&[2]),
        }));
        assert!(triples.contains(&BierTriple {
            k_side: Face::EMPTY,
            dual_side: face(&[1]),
            rest: face(&[2]),
        }));
        assert!(sphere_check(bier.complex(), 0).unwrap());
    }

    #[test]
    fn euler_characteristic_of_bier_on_four_elements() {
        // For m = 4 the sphere is S^2, so chi = 2 for every admissible K.
        for k in crate::enumeration::all_bier_inputs(4) {
            let bier = bier_sphere(&k).unwrap();
            assert_eq!(
                bier.complex().euler_characteristic(),
                2,
                "chi(Bier) wrong for {k:?}"
            );
        }
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(matches!(
            bier_sphere(&SimplicialComplex::full_simplex(3).unwrap()),
            Err(Error::BierOfFullComplex)
        ));
        assert!(matches!(
            bier_sphere(&SimplicialComplex::void(3)),
            Err(Error::BierOfVoidComplex)
        ));
        assert!(matches!(
            bier_sphere(&SimplicialComplex::empty_face_only(1)),
            Err(Error::BierGroundTooSmall(1))
        ));
    }

    #[test]
    fn triple_round_trip() {
        let k = SimplicialComplex::from_facets(4, vec![face(&[1, 2]), face(&[3])]).unwrap();
        let bier = bier_sphere(&k).unwrap();
        for f in bier.complex().faces_sorted() {
            let t = bier.decode(f).unwrap();
            assert_eq!(bier.encode(&t).unwrap(), f);
            assert_eq!(t.dim(), f.dim());
            assert_eq!(
                t.k_side.union(t.dual_side).union(t.rest),
                Face::prefix(4),
                "triple must partition the ground set"
            );
        }
    }

    #[test]
    fn empty_face_decodes_to_all_rest() {
        let k = SimplicialComplex::discrete_points(3).unwrap();
        let bier = bier_sphere(&k).unwrap();
        let t = bier.decode(Face::EMPTY).unwrap();
        assert_eq!(t.k_side, Face::EMPTY);
        assert_eq!(t.dual_side, Face::EMPTY);
        assert_eq!(t.rest, Face::prefix(3));

        let vertex = bier.decode(Face::singleton(0)).unwrap();
        assert_eq!(vertex.k_side, face(&[1]));
        assert_eq!(vertex.rest, face(&[2, 3]));
    }

    #[test]
    fn foreign_faces_are_rejected() {
        let k = SimplicialComplex::discrete_points(3).unwrap();
        let bier = bier_sphere(&k).unwrap();
        // {1+, 1-} pairs a vertex with its own dual copy: never a face.
        let bad = Face::from_vertices([0, 3]).unwrap();
        assert!(matches!(
            bier.decode(bad),
            Err(Error::ForeignBierFace(_))
        ));
    }

    #[test]
    fn facets_of_the_sphere_leave_a_single_rest_element() {
        let k = SimplicialComplex::from_facets(4, vec![face(&[1, 2]), face(&[2, 3])]).unwrap();
        let bier = bier_sphere(&k).unwrap();
        for (_, t) in bier.facet_triples() {
            assert_eq!(t.rest.len(), 1, "facet {t} should have singleton rest");
        }
    }

    #[test]
    fn threshold_triple_is_a_critical_shape_face() {
        for k in crate::enumeration::all_bier_inputs(4) {
            let bier = bier_sphere(&k).unwrap();
            let t = bier.threshold_triple();
            assert_eq!(t.rest.len(), 1);
            let i = t.rest.min_vertex().unwrap();
            assert!(t.k_side.vertices().all(|v| v < i));
            assert!(t.dual_side.vertices().all(|v| v > i));
            assert!(bier.base().contains(t.k_side));
            assert!(bier.dual().contains(t.dual_side));
            assert!(bier.encode(&t).is_ok());
        }
    }

    #[test]
    fn bier_agrees_with_the_pairwise_deleted_join() {
        for m in [3usize, 4] {
            for k in crate::enumeration::all_bier_inputs(m) {
                let bier = bier_sphere(&k).unwrap();
                let dj = deleted_join_jwise(&[k.clone(), k.alexander_dual()], 2).unwrap();
                assert_eq!(bier.complex(), &dj, "deleted-join route differs for {k:?}");
            }
        }
    }

    #[test]
    fn swapping_the_two_copies_carries_bier_of_k_to_bier_of_the_dual() {
        // (A1, A2) -> (A2, A1) identifies Bier(K) with Bier(K°) because
        // duality is an involution.
        for k in crate::enumeration::all_bier_inputs(4) {
            let m = k.ground_size();
            let swap: Vec<usize> = (0..2 * m).map(|v| (v + m) % (2 * m)).collect();
            let of_k = bier_sphere(&k).unwrap();
            let of_dual = bier_sphere(&k.alexander_dual()).unwrap();
            assert_eq!(
                &of_k.complex().relabel(&swap).unwrap(),
                of_dual.complex(),
                "side swap fails for {k:?}"
            );
        }
    }

    #[test]
    fn complexes_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SimplicialComplex>();
        assert_send_sync::<BierComplex>();
        assert_send_sync::<crate::morse::DiscreteVectorField>();
    }
}
