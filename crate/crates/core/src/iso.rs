//! Labeled-isomorphism search between simplicial complexes.
//!
//! Exhaustive backtracking over vertex bijections with profile pruning and
//! incremental face checks, intended for ground sets of size <= 16. The
//! search distinguishes "not isomorphic" from "budget exhausted".

use crate::complex::SimplicialComplex;
use crate::face::Face;

/// Witness bijection between the ground sets of two complexes, mapping
/// faces onto faces in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledIsomorphism {
    map: Vec<usize>,
}

impl LabeledIsomorphism {
    pub fn vertex_map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, face: Face) -> Face {
        Face::from_vertices(face.vertices().map(|v| self.map[v]))
            .expect("isomorphism keeps vertices in range")
    }

    /// Full bidirectional re-verification of the witness.
    pub fn verify(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> bool {
        if source.ground_size() != target.ground_size()
            || self.map.len() != source.ground_size()
            || source.face_count() != target.face_count()
        {
            return false;
        }
        let mut seen = vec![false; self.map.len()];
        for &w in &self.map {
            if w >= self.map.len() || seen[w] {
                return false;
            }
            seen[w] = true;
        }
        source.faces().all(|f| target.contains(self.apply(f)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(LabeledIsomorphism),
    NotIsomorphic,
    /// The search budget ran out before the question was settled.
    Undecided,
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

pub const DEFAULT_ISO_BUDGET: u64 = 20_000_000;

pub fn is_isomorphic(source: &SimplicialComplex, target: &SimplicialComplex) -> IsoOutcome {
    is_isomorphic_with_budget(source, target, DEFAULT_ISO_BUDGET)
}

pub fn is_isomorphic_with_budget(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    budget: u64,
) -> IsoOutcome {
    // Ground sets must agree; callers compare complexes with ghost
    // vertices via restrict_to_support first.
    if source.ground_size() != target.ground_size()
        || source.face_count() != target.face_count()
        || source.f_vector() != target.f_vector()
    {
        return IsoOutcome::NotIsomorphic;
    }
    let m = source.ground_size();
    if m == 0 {
        return IsoOutcome::Isomorphic(LabeledIsomorphism { map: Vec::new() });
    }

    let profile = |k: &SimplicialComplex, v: usize| -> Vec<usize> {
        let dim = k.dim().unwrap_or(-1).max(0) as usize;
        let mut counts = vec![0usize; dim + 1];
        for f in k.faces() {
            if f.contains(v) {
                counts[f.dim() as usize] += 1;
            }
        }
        counts
    };
    let src_profiles: Vec<Vec<usize>> = (0..m).map(|v| profile(source, v)).collect();
    let tgt_profiles: Vec<Vec<usize>> = (0..m).map(|v| profile(target, v)).collect();
    {
        let mut a = src_profiles.clone();
        let mut b = tgt_profiles.clone();
        a.sort();
        b.sort();
        if a != b {
            return IsoOutcome::NotIsomorphic;
        }
    }

    let faces_containing = |k: &SimplicialComplex| -> Vec<Vec<Face>> {
        let mut per = vec![Vec::new(); m];
        for f in k.faces_sorted() {
            for v in f.vertices() {
                per[v].push(f);
            }
        }
        per
    };
    let src_star = faces_containing(source);
    let tgt_star = faces_containing(target);

    struct Search<'a> {
        m: usize,
        target: &'a SimplicialComplex,
        src_profiles: &'a [Vec<usize>],
        tgt_profiles: &'a [Vec<usize>],
        src_star: &'a [Vec<Face>],
        tgt_star: &'a [Vec<Face>],
        map: Vec<usize>,
        used: Vec<bool>,
        assigned_src: Face,
        assigned_tgt: Face,
        budget: u64,
        exhausted: bool,
    }

    impl Search<'_> {
        fn next_vertex(&self) -> usize {
            // Expand along edges already placed; fall back to the lowest
            // unassigned vertex.
            let mut best = usize::MAX;
            let mut best_score = -1i64;
            for v in 0..self.m {
                if self.assigned_src.contains(v) {
                    continue;
                }
                let score = self.src_star[v]
                    .iter()
                    .filter(|f| f.len() == 2 && f.without(v).is_subset_of(self.assigned_src))
                    .count() as i64;
                if score > best_score {
                    best_score = score;
                    best = v;
                }
            }
            best
        }

        fn consistent(&self, v: usize, w: usize) -> bool {
            if self.src_profiles[v] != self.tgt_profiles[w] {
                return false;
            }
            let new_src = self.assigned_src.with(v);
            let new_tgt = self.assigned_tgt.with(w);
            let mut fresh_src = 0usize;
            for f in &self.src_star[v] {
                if f.is_subset_of(new_src) {
                    fresh_src += 1;
                    let image = Face::from_vertices(f.vertices().map(|u| {
                        if u == v {
                            w
                        } else {
                            self.map[u]
                        }
                    }))
                    .expect("mapped vertices stay in range");
                    if !self.target.contains(image) {
                        return false;
                    }
                }
            }
            let fresh_tgt = self
                .tgt_star[w]
                .iter()
                .filter(|g| g.is_subset_of(new_tgt))
                .count();
            fresh_src == fresh_tgt
        }

        fn run(&mut self, depth: usize) -> bool {
            if depth == self.m {
                return true;
            }
            let v = self.next_vertex();
            for w in 0..self.m {
                if self.used[w] {
                    continue;
                }
                if self.budget == 0 {
                    self.exhausted = true;
                    return false;
                }
                self.budget -= 1;
                if !self.consistent(v, w) {
                    continue;
                }
                self.map[v] = w;
                self.used[w] = true;
                self.assigned_src = self.assigned_src.with(v);
                self.assigned_tgt = self.assigned_tgt.with(w);
                if self.run(depth + 1) {
                    return true;
                }
                self.assigned_src = self.assigned_src.without(v);
                self.assigned_tgt = self.assigned_tgt.without(w);
                self.used[w] = false;
                self.map[v] = usize::MAX;
                if self.exhausted {
                    return false;
                }
            }
            false
        }
    }

    let mut search = Search {
        m,
        target,
        src_profiles: &src_profiles,
        tgt_profiles: &tgt_profiles,
        src_star: &src_star,
        tgt_star: &tgt_star,
        map: vec![usize::MAX; m],
        used: vec![false; m],
        assigned_src: Face::EMPTY,
        assigned_tgt: Face::EMPTY,
        budget,
        exhausted: false,
    };

    if search.run(0) {
        let witness = LabeledIsomorphism { map: search.map };
        // Witnesses are re-verified so the search can never yield a false
        // positive.
        assert!(witness.verify(source, target));
        IsoOutcome::Isomorphic(witness)
    } else if search.exhausted {
        IsoOutcome::Undecided
    } else {
        IsoOutcome::NotIsomorphic
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().map(|v| v - 1)).unwrap()
    }

    #[test]
    fn shuffled_labels_are_isomorphic() {
        let k = SimplicialComplex::from_facets(5, vec![face(&[1, 2, 3]), face(&[3, 4])]).unwrap();
        let l = k.relabel(&[3, 0, 4, 2, 1]).unwrap();
        let outcome = is_isomorphic(&k, &l);
        match outcome {
            IsoOutcome::Isomorphic(w) => assert!(w.verify(&k, &l)),
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn hexagon_vs_two_triangles_not_isomorphic() {
        // Both have f-vector (6, 6); the edge graphs differ in connectivity.
        let hexagon = SimplicialComplex::from_facets(
            6,
            vec![
                face(&[1, 2]),
                face(&[2, 3]),
                face(&[3, 4]),
                face(&[4, 5]),
                face(&[5, 6]),
                face(&[6, 1]),
            ],
        )
        .unwrap();
        let triangles = SimplicialComplex::from_facets(
            6,
            vec![
                face(&[1, 2]),
                face(&[2, 3]),
                face(&[3, 1]),
                face(&[4, 5]),
                face(&[5, 6]),
                face(&[6, 4]),
            ],
        )
        .unwrap();
        assert_eq!(hexagon.f_vector(), triangles.f_vector());
        assert_eq!(is_isomorphic(&hexagon, &triangles), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn different_ground_sizes_are_not_isomorphic() {
        let a = SimplicialComplex::full_simplex(2).unwrap();
        let b = SimplicialComplex::full_simplex(3).unwrap();
        assert_eq!(is_isomorphic(&a, &b), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn zero_budget_reports_undecided() {
        let k = SimplicialComplex::full_simplex(3).unwrap();
        let outcome = is_isomorphic_with_budget(&k, &k.clone(), 0);
        assert_eq!(outcome, IsoOutcome::Undecided);
    }

    #[test]
    fn void_complexes_are_isomorphic() {
        let a = SimplicialComplex::void(3);
        let b = SimplicialComplex::void(3);
        assert!(is_isomorphic(&a, &b).is_isomorphic());
    }
}
