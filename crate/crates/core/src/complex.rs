use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_GROUND};

/// Default cap on the number of faces any constructor may enumerate.
pub const DEFAULT_FACE_CAP: usize = 1 << 22;

/// An abstract simplicial complex over a labeled ground set, stored as an
/// explicit downward-closed family of faces.
///
/// Conventions:
/// - the *void* complex has no faces at all, not even the empty face;
/// - every nonvoid complex contains the empty face;
/// - a complex may omit singletons, so vertices can be "ghosts" of the
///   ground set without being faces.
#[derive(Clone)]
pub struct SimplicialComplex {
    ground_size: usize,
    faces: HashSet<Face>,
    labels: Option<Vec<String>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground_size == other.ground_size && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SimplicialComplex(m={}, facets=[",
            self.ground_size
        )?;
        for (i, facet) in self.facets().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

fn check_ground(ground_size: usize) -> Result<()> {
    if ground_size > MAX_GROUND {
        return Err(Error::GroundTooLarge(ground_size));
    }
    Ok(())
}

impl SimplicialComplex {
    /// The void complex: no faces whatsoever.
    pub fn void(ground_size: usize) -> SimplicialComplex {
        SimplicialComplex {
            ground_size,
            faces: HashSet::new(),
            labels: None,
        }
    }

    /// The complex whose only face is the empty face.
    pub fn empty_face_only(ground_size: usize) -> SimplicialComplex {
        let mut faces = HashSet::new();
        faces.insert(Face::EMPTY);
        SimplicialComplex {
            ground_size,
            faces,
            labels: None,
        }
    }

    /// The full simplex on the whole ground set (the powerset).
    pub fn full_simplex(ground_size: usize) -> Result<SimplicialComplex> {
        check_ground(ground_size)?;
        Self::from_facets(ground_size, vec![Face::prefix(ground_size)])
    }

    /// A single point: the full simplex on one vertex.
    pub fn point() -> SimplicialComplex {
        Self::full_simplex(1).expect("one vertex is always valid")
    }

    /// All singletons and the empty face: the 0-skeleton of the full simplex.
    pub fn discrete_points(ground_size: usize) -> Result<SimplicialComplex> {
        check_ground(ground_size)?;
        let facets = (0..ground_size).map(Face::singleton).collect();
        Self::from_facets(ground_size, facets)
    }

    /// Downward closure of the given facets. The empty face is included
    /// whenever the facet list is nonempty; an empty facet list yields the
    /// void complex.
    pub fn from_facets(ground_size: usize, facets: Vec<Face>) -> Result<SimplicialComplex> {
        Self::from_facets_with_cap(ground_size, facets, DEFAULT_FACE_CAP)
    }

    pub fn from_facets_with_cap(
        ground_size: usize,
        facets: Vec<Face>,
        cap: usize,
    ) -> Result<SimplicialComplex> {
        check_ground(ground_size)?;
        let ground = Face::prefix(ground_size);
        let mut faces = HashSet::new();
        for facet in facets {
            if !facet.is_subset_of(ground) {
                let bad = facet.difference(ground).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange {
                    index: bad,
                    ground: ground_size,
                });
            }
            for sub in facet.subsets() {
                if faces.insert(sub) && faces.len() > cap {
                    return Err(Error::TooManyFaces { cap });
                }
            }
        }
        Ok(SimplicialComplex {
            ground_size,
            faces,
            labels: None,
        })
    }

    /// Wraps an already downward-closed family without recomputing the closure.
    pub(crate) fn from_closed_faces(ground_size: usize, faces: HashSet<Face>) -> SimplicialComplex {
        let complex = SimplicialComplex {
            ground_size,
            faces,
            labels: None,
        };
        debug_assert!(complex.is_downward_closed());
        complex
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> SimplicialComplex {
        debug_assert_eq!(labels.len(), self.ground_size);
        self.labels = Some(labels);
        self
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) if v < ls.len() => ls[v].clone(),
            _ => (v + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Total number of stored faces, the empty face included.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// True when the complex is the full powerset of its ground set.
    pub fn is_full(&self) -> bool {
        self.contains(Face::prefix(self.ground_size))
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.contains(&face)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    /// All faces sorted by (dimension, bit pattern); deterministic.
    pub fn faces_sorted(&self) -> Vec<Face> {
        let mut all: Vec<Face> = self.faces.iter().copied().collect();
        all.sort();
        all
    }

    pub fn faces_of_dim(&self, d: i64) -> Vec<Face> {
        let mut layer: Vec<Face> = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.dim() == d)
            .collect();
        layer.sort();
        layer
    }

    /// Maximum face dimension: `None` for the void complex, `Some(-1)` for
    /// the empty-face-only complex.
    pub fn dim(&self) -> Option<i64> {
        self.faces.iter().map(|f| f.dim()).max()
    }

    /// Maximal faces, sorted.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self
            .faces
            .iter()
            .copied()
            .filter(|f| {
                (0..self.ground_size)
                    .filter(|&v| !f.contains(v))
                    .all(|v| !self.contains(f.with(v)))
            })
            .collect();
        out.sort();
        out
    }

    /// Entry d counts the faces of dimension d, for d = 0..dim; the empty
    /// face is excluded.
    pub fn f_vector(&self) -> Vec<usize> {
        let dim = match self.dim() {
            Some(d) if d >= 0 => d,
            _ => return Vec::new(),
        };
        let mut counts = vec![0usize; (dim + 1) as usize];
        for f in &self.faces {
            if !f.is_empty() {
                counts[f.dim() as usize] += 1;
            }
        }
        counts
    }

    /// Alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn is_downward_closed(&self) -> bool {
        if self.faces.is_empty() {
            return true;
        }
        if !self.faces.contains(&Face::EMPTY) {
            return false;
        }
        self.faces
            .iter()
            .all(|f| f.boundary_faces().all(|b| self.faces.contains(&b)))
    }

    /// Alexander dual: complements of the nonfaces. Total by convention:
    /// the full simplex dualizes to the void complex and vice versa.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        self.alexander_dual_with_cap(DEFAULT_FACE_CAP)
            .expect("dual of a stored complex never exceeds the default cap")
    }

    pub fn alexander_dual_with_cap(&self, cap: usize) -> Result<SimplicialComplex> {
        let m = self.ground_size;
        // The dual has exactly 2^m - face_count faces; both the sweep and
        // the result must stay within the cap.
        if m >= usize::BITS as usize - 1
            || (1usize << m).saturating_sub(self.face_count()) > cap
        {
            return Err(Error::TooManyFaces { cap });
        }
        let mut dual = HashSet::new();
        for bits in 0..(1u128 << m) {
            let s = Face::from_bits(bits);
            if !self.faces.contains(&s) {
                dual.insert(s.complement_in(m));
            }
        }
        Ok(SimplicialComplex::from_closed_faces(m, dual))
    }

    /// Faces of dimension at most k. `k = -1` keeps only the empty face.
    pub fn skeleton(&self, k: i64) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.dim() <= k)
            .collect();
        SimplicialComplex {
            ground_size: self.ground_size,
            faces,
            labels: self.labels.clone(),
        }
    }

    /// Link of a vertex, on the same ground set.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= self.ground_size {
            return Err(Error::VertexOutOfRange {
                index: v,
                ground: self.ground_size,
            });
        }
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| !f.contains(v) && self.faces.contains(&f.with(v)))
            .collect();
        Ok(SimplicialComplex {
            ground_size: self.ground_size,
            faces,
            labels: self.labels.clone(),
        })
    }

    /// Vertices that actually appear in some face.
    pub fn support(&self) -> Face {
        self.faces
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Relabels vertices onto 0..support_size, dropping ghost vertices.
    /// Returns the restricted complex and the map new -> old.
    pub fn restrict_to_support(&self) -> (SimplicialComplex, Vec<usize>) {
        let support: Vec<usize> = self.support().vertices().collect();
        let mut old_to_new = vec![usize::MAX; self.ground_size];
        for (new, &old) in support.iter().enumerate() {
            old_to_new[old] = new;
        }
        let faces = self
            .faces
            .iter()
            .map(|f| {
                Face::from_vertices(f.vertices().map(|v| old_to_new[v]))
                    .expect("support indices stay in range")
            })
            .collect();
        (
            SimplicialComplex {
                ground_size: support.len(),
                faces,
                labels: None,
            },
            support,
        )
    }

    /// Applies a vertex permutation: vertex v is renamed perm\[v\].
    pub fn relabel(&self, perm: &[usize]) -> Result<SimplicialComplex> {
        if perm.len() != self.ground_size {
            return Err(Error::GroundMismatch {
                expected: self.ground_size,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.ground_size];
        for &p in perm {
            if p >= self.ground_size || seen[p] {
                return Err(Error::Parse(format!(
                    "relabeling is not a permutation of 0..{}",
                    self.ground_size
                )));
            }
            seen[p] = true;
        }
        let faces = self
            .faces
            .iter()
            .map(|f| {
                Face::from_vertices(f.vertices().map(|v| perm[v]))
                    .expect("permutation keeps indices in range")
            })
            .collect();
        Ok(SimplicialComplex {
            ground_size: self.ground_size,
            faces,
            labels: None,
        })
    }
}

/// Join of a list of complexes. Ground sets are stacked disjointly in
/// order; faces are all unions of one face per factor. Any void factor
/// makes the join void; the empty list yields the one-empty-face complex.
pub fn join(factors: &[SimplicialComplex]) -> Result<SimplicialComplex> {
    join_with_cap(factors, DEFAULT_FACE_CAP)
}

pub fn join_with_cap(factors: &[SimplicialComplex], cap: usize) -> Result<SimplicialComplex> {
    let total_ground: usize = factors.iter().map(|k| k.ground_size()).sum();
    check_ground(total_ground)?;

    let mut count: usize = 1;
    for k in factors {
        count = count.saturating_mul(k.face_count());
    }
    if count > cap {
        return Err(Error::TooManyFaces { cap });
    }

    let mut faces: HashSet<Face> = HashSet::new();
    faces.insert(Face::EMPTY);
    let mut offset = 0usize;
    for k in factors {
        if k.is_void() {
            return Ok(SimplicialComplex::void(total_ground));
        }
        let shifted: Vec<Face> = k.faces().map(|f| Face::from_bits(f.bits() << offset)).collect();
        let mut next = HashSet::with_capacity(faces.len() * shifted.len());
        for acc in &faces {
            for s in &shifted {
                next.insert(acc.union(*s));
            }
        }
        faces = next;
        offset += k.ground_size();
    }
    Ok(SimplicialComplex::from_closed_faces(total_ground, faces))
}

/// The n-fold j-wise deleted join of complexes over a common ground set
/// \[m\]: the subcomplex of the join on \[m\] x \[n\] whose faces (A_1,...,A_n)
/// have empty common intersection over every j of the factors,
/// equivalently use no element of \[m\] in j or more factors.
///
/// Grid vertex (i, k) — element i of \[m\] used in factor k — is linearized
/// as i + m*k.
pub fn deleted_join_jwise(factors: &[SimplicialComplex], j: usize) -> Result<SimplicialComplex> {
    deleted_join_jwise_with_cap(factors, j, DEFAULT_FACE_CAP)
}

pub fn deleted_join_jwise_with_cap(
    factors: &[SimplicialComplex],
    j: usize,
    cap: usize,
) -> Result<SimplicialComplex> {
    let n = factors.len();
    if j < 2 || j > n + 1 {
        return Err(Error::BadJoinArity { j, max: n + 1 });
    }
    let m = factors
        .first()
        .map(|k| k.ground_size())
        .unwrap_or(0);
    for k in factors {
        if k.ground_size() != m {
            return Err(Error::GroundMismatch {
                expected: m,
                got: k.ground_size(),
            });
        }
    }
    check_ground(m.saturating_mul(n))?;
    if factors.iter().any(|k| k.is_void()) {
        return Ok(SimplicialComplex::void(m * n));
    }

    // DFS over grid vertices in increasing linear order. Both membership of
    // the factor traces and the per-element usage bound are monotone, so
    // every face of the result extends a smaller one.
    let mut faces: HashSet<Face> = HashSet::new();
    faces.insert(Face::EMPTY);
    let mut usage = vec![0usize; m];
    let mut traces = vec![Face::EMPTY; n];
    let mut stack: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        start: usize,
        m: usize,
        n: usize,
        j: usize,
        factors: &[SimplicialComplex],
        usage: &mut [usize],
        traces: &mut [Face],
        stack: &mut Vec<usize>,
        faces: &mut HashSet<Face>,
        cap: usize,
    ) -> Result<()> {
        for lin in start..m * n {
            let i = lin % m;
            let k = lin / m;
            if usage[i] + 1 >= j {
                continue;
            }
            let new_trace = traces[k].with(i);
            if !factors[k].contains(new_trace) {
                continue;
            }
            usage[i] += 1;
            let old_trace = traces[k];
            traces[k] = new_trace;
            stack.push(lin);

            let face = Face::from_vertices(stack.iter().copied())
                .expect("grid stays within the bit width");
            if faces.insert(face) && faces.len() > cap {
                return Err(Error::TooManyFaces { cap });
            }
            dfs(lin + 1, m, n, j, factors, usage, traces, stack, faces, cap)?;

            stack.pop();
            traces[k] = old_trace;
            usage[i] -= 1;
        }
        Ok(())
    }

    dfs(
        0, m, n, j, factors, &mut usage, &mut traces, &mut stack, &mut faces, cap,
    )?;

    let labels = (0..m * n)
        .map(|lin| format!("({},{})", lin % m + 1, lin / m + 1))
        .collect();
    Ok(SimplicialComplex::from_closed_faces(m * n, faces).with_labels(labels))
}
