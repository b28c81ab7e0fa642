//! Discrete vector fields: validity, acyclicity, critical cells, and the
//! two standard matchings — the two-step matching on Bier spheres and the
//! stepwise row-scan matching on multiple chessboard complexes.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bier::{BierComplex, BierTriple};
use crate::chessboard::{
    multiple_chessboard_with_cap, star_condition, GridSpec, MultiplicityProfile,
};
use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;

/// A partial matching on the face poset of a complex: pairs (alpha, beta)
/// where alpha is a facet of beta. The unmatched nonempty faces are the
/// critical cells.
#[derive(Debug, Clone)]
pub struct DiscreteVectorField {
    complex: SimplicialComplex,
    pairs: Vec<(Face, Face)>,
}

/// A violation of the matching axioms: (a) each simplex in at most one
/// pair, (b) lower is a facet of upper, (c) the empty face is unmatched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingViolation {
    FaceInMultiplePairs(Face),
    NotAFacetPair { lower: Face, upper: Face },
    FaceOutsideComplex(Face),
    EmptyFaceMatched,
}

impl fmt::Display for MatchingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingViolation::FaceInMultiplePairs(x) => {
                write!(f, "face {x} participates in more than one pair")
            }
            MatchingViolation::NotAFacetPair { lower, upper } => {
                write!(f, "{lower} is not a codimension-1 face of {upper}")
            }
            MatchingViolation::FaceOutsideComplex(x) => {
                write!(f, "face {x} does not belong to the complex")
            }
            MatchingViolation::EmptyFaceMatched => write!(f, "the empty face is matched"),
        }
    }
}

/// Outcome of `validate`: an empty violation list means the field is a
/// discrete vector field.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<MatchingViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An alternating up/down walk a_0 < b_0 > a_1 < b_1 > ... > a_last
/// through matched pairs and facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradientPath {
    /// a_0, ..., a_{m+1}; one more entry than `uppers`.
    pub lowers: Vec<Face>,
    /// b_0, ..., b_m.
    pub uppers: Vec<Face>,
}

impl GradientPath {
    pub fn is_closed(&self) -> bool {
        !self.uppers.is_empty() && self.lowers.first() == self.lowers.last()
    }

    /// Checks the path axioms against a vector field: every (a_i, b_i) is
    /// a matched pair, every a_{i+1} is a facet of b_i distinct from a_i.
    pub fn verify(&self, dvf: &DiscreteVectorField) -> bool {
        if self.lowers.len() != self.uppers.len() + 1 || self.uppers.is_empty() {
            return false;
        }
        let Ok((up, _)) = dvf.indexes() else {
            return false;
        };
        for i in 0..self.uppers.len() {
            let (a, b, next) = (self.lowers[i], self.uppers[i], self.lowers[i + 1]);
            if up.get(&a) != Some(&b) {
                return false;
            }
            if next == a || next.dim() + 1 != b.dim() || !next.is_subset_of(b) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for GradientPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.uppers.len() {
            write!(f, "{} < {} > ", self.lowers[i], self.uppers[i])?;
        }
        write!(f, "{}", self.lowers.last().expect("paths are nonempty"))
    }
}

/// Verdict of the acyclicity check, with an explicit closed path on
/// failure.
#[derive(Debug, Clone)]
pub enum Acyclicity {
    Acyclic,
    ClosedPath(GradientPath),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic)
    }
}

impl DiscreteVectorField {
    pub fn from_pairs(complex: SimplicialComplex, pairs: Vec<(Face, Face)>) -> Self {
        DiscreteVectorField { complex, pairs }
    }

    /// The zero matching: every nonempty face is critical.
    pub fn zero(complex: SimplicialComplex) -> Self {
        DiscreteVectorField {
            complex,
            pairs: Vec::new(),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn pairs(&self) -> &[(Face, Face)] {
        &self.pairs
    }

    /// Lists every violation of the matching axioms.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut seen: HashMap<Face, usize> = HashMap::new();
        for &(lower, upper) in &self.pairs {
            for face in [lower, upper] {
                if !self.complex.contains(face) {
                    violations.push(MatchingViolation::FaceOutsideComplex(face));
                }
                *seen.entry(face).or_insert(0) += 1;
            }
            if lower.is_empty() {
                violations.push(MatchingViolation::EmptyFaceMatched);
            }
            if lower.dim() + 1 != upper.dim() || !lower.is_subset_of(upper) {
                violations.push(MatchingViolation::NotAFacetPair { lower, upper });
            }
        }
        let mut dupes: Vec<Face> = seen
            .into_iter()
            .filter(|&(_, count)| count > 1)
            .map(|(face, _)| face)
            .collect();
        dupes.sort();
        violations.extend(dupes.into_iter().map(MatchingViolation::FaceInMultiplePairs));
        ValidationReport { violations }
    }

    /// Up and down lookup maps; fails when the matching axioms are broken.
    fn indexes(&self) -> Result<(HashMap<Face, Face>, HashMap<Face, Face>)> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::InvalidMatching(report.violations[0].to_string()));
        }
        let mut up = HashMap::new();
        let mut down = HashMap::new();
        for &(lower, upper) in &self.pairs {
            up.insert(lower, upper);
            down.insert(upper, lower);
        }
        Ok((up, down))
    }

    /// Partner above a matched lower face, if any.
    pub fn up_partner(&self, face: Face) -> Option<Face> {
        self.pairs
            .iter()
            .find(|&&(l, _)| l == face)
            .map(|&(_, u)| u)
    }

    pub fn down_partner(&self, face: Face) -> Option<Face> {
        self.pairs
            .iter()
            .find(|&&(_, u)| u == face)
            .map(|&(l, _)| l)
    }

    /// All unmatched nonempty faces, sorted by dimension then bits.
    pub fn critical_cells(&self) -> Result<Vec<Face>> {
        let (up, down) = self.indexes()?;
        let mut out: Vec<Face> = self
            .complex
            .faces()
            .filter(|f| !f.is_empty() && !up.contains_key(f) && !down.contains_key(f))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Critical-cell count per dimension d = 0..dim.
    pub fn critical_counts(&self) -> Result<Vec<usize>> {
        let cells = self.critical_cells()?;
        let dim = self.complex.dim().unwrap_or(-1);
        if dim < 0 {
            return Ok(Vec::new());
        }
        let mut counts = vec![0usize; dim as usize + 1];
        for c in cells {
            counts[c.dim() as usize] += 1;
        }
        Ok(counts)
    }

    /// True iff no closed gradient path exists. Per dimension p this walks
    /// the digraph on p-faces with an arc a -> a' whenever a is matched to
    /// some b and a' is a facet of b other than a. A directed cycle there
    /// is exactly a closed path; the returned witness is re-verified
    /// against the path axioms.
    pub fn is_acyclic(&self) -> Result<Acyclicity> {
        let (up, _) = self.indexes()?;

        let mut by_dim: BTreeMap<i64, Vec<Face>> = BTreeMap::new();
        for &lower in up.keys() {
            by_dim.entry(lower.dim()).or_default().push(lower);
        }

        for (_, mut nodes) in by_dim {
            nodes.sort();
            let successors = |a: Face| -> Vec<Face> {
                match up.get(&a) {
                    Some(&b) => {
                        let mut next: Vec<Face> =
                            b.boundary_faces().filter(|&x| x != a).collect();
                        next.sort();
                        next
                    }
                    None => Vec::new(),
                }
            };
            // Iterative DFS with tri-state colors; a back edge closes a path.
            let mut color: HashMap<Face, u8> = HashMap::new(); // 1 on stack, 2 done
            for &start in &nodes {
                if color.get(&start).copied().unwrap_or(0) != 0 {
                    continue;
                }
                let mut stack: Vec<(Face, Vec<Face>)> = Vec::new();
                color.insert(start, 1);
                stack.push((start, successors(start)));
                while let Some((node, todo)) = stack.last_mut() {
                    let Some(next) = todo.pop() else {
                        color.insert(*node, 2);
                        stack.pop();
                        continue;
                    };
                    match color.get(&next).copied().unwrap_or(0) {
                        0 => {
                            if up.contains_key(&next) {
                                color.insert(next, 1);
                                let succ = successors(next);
                                stack.push((next, succ));
                            } else {
                                color.insert(next, 2);
                            }
                        }
                        1 => {
                            // Cycle: slice the DFS stack from `next` onwards.
                            let pos = stack
                                .iter()
                                .position(|(f, _)| *f == next)
                                .expect("gray nodes live on the stack");
                            let cycle: Vec<Face> =
                                stack[pos..].iter().map(|(f, _)| *f).collect();
                            let mut lowers = cycle.clone();
                            lowers.push(cycle[0]);
                            let uppers = cycle.iter().map(|a| up[a]).collect();
                            let path = GradientPath { lowers, uppers };
                            assert!(
                                path.verify(self) && path.is_closed(),
                                "cycle witness failed re-verification"
                            );
                            return Ok(Acyclicity::ClosedPath(path));
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(Acyclicity::Acyclic)
    }

    /// Forman-style connectivity lower bound: with a unique critical
    /// 0-cell and every other critical cell of dimension >= N, the
    /// complex is (N-1)-connected. Returns N - 1, or the complex
    /// dimension when the base cell is the only critical cell.
    pub fn connectivity_certificate(&self) -> Result<i64> {
        match self.is_acyclic()? {
            Acyclicity::Acyclic => {}
            Acyclicity::ClosedPath(p) => {
                return Err(Error::InvalidMatching(format!(
                    "closed gradient path: {p}"
                )))
            }
        }
        let cells = self.critical_cells()?;
        let zero_cells = cells.iter().filter(|c| c.dim() == 0).count();
        if zero_cells != 1 {
            return Err(Error::CertificateNotApplicable { zero_cells });
        }
        let above: Vec<i64> = cells.iter().map(|c| c.dim()).filter(|&d| d >= 1).collect();
        match above.iter().min() {
            Some(&n) => Ok(n - 1),
            None => Ok(self.complex.dim().unwrap_or(0)),
        }
    }
}

// ---------------------------------------------------------------------------
// The two-step matching on a Bier sphere.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BierClass {
    Up(Face),
    Down(Face),
    Critical,
}

/// Classifies one nonempty face of the sphere. Step 1 moves the smallest
/// element of A2 u B between B and A2 (the grown A2 must stay in the
/// dual); step 2, on faces step 1 leaves unmatched on both ends, moves
/// the largest element of A1 u B between B and A1 (the grown A1 must stay
/// in K). The empty face is never matched, which is what leaves the base
/// vertex critical.
fn classify_bier(bier: &BierComplex, triple: &BierTriple) -> BierClass {
    let step1 = |t: &BierTriple| -> Option<BierClass> {
        let candidates = t.dual_side.union(t.rest);
        let i = candidates
            .min_vertex()
            .expect("A1 = [m] would make the base complex full");
        if t.dual_side.contains(i) {
            if t.k_side.is_empty() && t.dual_side.len() == 1 {
                // The partner would be the empty face: base critical cell.
                return Some(BierClass::Critical);
            }
            return Some(BierClass::Down(encode(
                bier,
                t.k_side,
                t.dual_side.without(i),
            )));
        }
        if bier.dual().contains(t.dual_side.with(i)) {
            return Some(BierClass::Up(encode(bier, t.k_side, t.dual_side.with(i))));
        }
        None
    };

    if let Some(outcome) = step1(triple) {
        return outcome;
    }

    // Step 2; both endpoints must have survived step 1.
    let candidates = triple.k_side.union(triple.rest);
    let Some(j) = candidates.max_vertex() else {
        return BierClass::Critical;
    };
    if triple.rest.contains(j) {
        let grown = triple.k_side.with(j);
        if !bier.base().contains(grown) {
            return BierClass::Critical;
        }
        let partner = BierTriple {
            k_side: grown,
            dual_side: triple.dual_side,
            rest: triple.rest.without(j),
        };
        if step1(&partner).is_some() {
            return BierClass::Critical;
        }
        BierClass::Up(encode(bier, grown, triple.dual_side))
    } else {
        let shrunk = triple.k_side.without(j);
        if shrunk.is_empty() && triple.dual_side.is_empty() {
            // The partner would be the empty face.
            return BierClass::Critical;
        }
        let partner = BierTriple {
            k_side: shrunk,
            dual_side: triple.dual_side,
            rest: triple.rest.with(j),
        };
        if step1(&partner).is_some() {
            return BierClass::Critical;
        }
        BierClass::Down(encode(bier, shrunk, triple.dual_side))
    }
}

fn encode(bier: &BierComplex, k_side: Face, dual_side: Face) -> Face {
    Face::from_bits(k_side.bits() | (dual_side.bits() << bier.m()))
}

/// Builds the two-step vector field on any Bier sphere. Validity and
/// acyclicity hold with no assumption on the labeling; the exactly-two
/// critical cells guarantee additionally needs {1} in the dual, which
/// `bier_dmf` enforces.
pub fn bier_vector_field(bier: &BierComplex) -> Result<DiscreteVectorField> {
    let mut class: HashMap<Face, BierClass> = HashMap::new();
    for face in bier.complex().faces() {
        if face.is_empty() {
            continue;
        }
        let triple = bier.split_unchecked(face);
        class.insert(face, classify_bier(bier, &triple));
    }

    let mut pairs = Vec::new();
    for (&face, &outcome) in &class {
        match outcome {
            BierClass::Up(partner) => {
                if class.get(&partner) != Some(&BierClass::Down(face)) {
                    return Err(Error::MatchingInconsistent(face));
                }
                pairs.push((face, partner));
            }
            BierClass::Down(partner) => {
                if class.get(&partner) != Some(&BierClass::Up(face)) {
                    return Err(Error::MatchingInconsistent(face));
                }
            }
            BierClass::Critical => {}
        }
    }
    pairs.sort();
    Ok(DiscreteVectorField::from_pairs(
        bier.complex().clone(),
        pairs,
    ))
}

/// The perfect matching on Bier(K): rejects the trivial-dual case and
/// inputs whose dual misses {1} (a re-enumeration fixes the latter), then
/// delegates to `bier_vector_field`. The result has exactly two critical
/// cells, of dimensions 0 and m - 2.
pub fn bier_dmf(bier: &BierComplex) -> Result<DiscreteVectorField> {
    if bier.dual().dim() == Some(-1) {
        return Err(Error::TrivialDual);
    }
    if !bier.dual().contains(Face::singleton(0)) {
        return Err(Error::BaseVertexMissing);
    }
    bier_vector_field(bier)
}

// ---------------------------------------------------------------------------
// The stepwise matching on multiple chessboard complexes.
// ---------------------------------------------------------------------------

/// Why a face ended up critical or matched in the stepwise scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceOutcome {
    /// Matched upward by adding a rook in `row` at the final pointer.
    PairedUp { partner: Face, row: usize },
    /// Matched downward by removing the rook in `row` at the final pointer.
    PairedDown { partner: Face, row: usize },
    /// Removal would leave the empty face: the unique critical 0-cell.
    CriticalBase,
    /// Survived all rows with every row full.
    CriticalFullRows,
    /// The column pointer ran off the board at the last row (possible
    /// only when the cap inequality is an equality).
    CriticalPointerExhausted,
}

/// Per-face record of the scan: the column pointers a_1 <= a_2 <= ...
/// (1-based), the final reuse counter T, and the outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTrace {
    pub pointers: Vec<usize>,
    pub reuse: usize,
    pub outcome: TraceOutcome,
}

/// The whole scan transcript, face by face.
#[derive(Debug, Clone, Default)]
pub struct MatchingTrace {
    pub per_face: BTreeMap<Face, FaceTrace>,
}

enum StepAction {
    Remove(usize),
    TryAdd(usize),
    Stay,
    Exhausted,
}

#[allow(clippy::needless_range_loop)]
fn classify_chessboard(
    grid: &GridSpec,
    profile: &MultiplicityProfile,
    face: Face,
) -> Result<FaceTrace> {
    let (m, n) = (grid.cols, grid.rows);
    let mut col_counts = vec![0usize; m];
    let mut row_counts = vec![0usize; n];
    for v in face.vertices() {
        let (i, j) = grid.cell(v);
        col_counts[i] += 1;
        row_counts[j] += 1;
    }
    let col_free = |i: usize| col_counts[i] < profile.col_caps[i];
    let has_rook = |i: usize, j: usize| face.contains(grid.vertex(i, j));

    let mut pointers: Vec<usize> = Vec::new();
    let mut reuse: usize = 0;
    let mut ptr: Option<usize> = None;

    for row in 0..n {
        let action = match ptr {
            None => {
                // First usable column: a first-row rook or spare capacity.
                match (0..m).find(|&i| has_rook(i, row) || col_free(i)) {
                    Some(a) => {
                        ptr = Some(a);
                        pointers.push(a + 1);
                        if has_rook(a, row) {
                            StepAction::Remove(a)
                        } else {
                            StepAction::TryAdd(a)
                        }
                    }
                    None => StepAction::Exhausted,
                }
            }
            Some(prev) => {
                if has_rook(prev, row) {
                    pointers.push(prev + 1);
                    StepAction::Remove(prev)
                } else if (col_counts[prev] as i64)
                    < profile.col_caps[prev] as i64 - reuse as i64
                {
                    // The pointer column has capacity to spare beyond its
                    // earlier reuses: stay on it.
                    pointers.push(prev + 1);
                    if row_counts[row] < profile.row_caps[row] {
                        StepAction::TryAdd(prev)
                    } else {
                        reuse += 1;
                        StepAction::Stay
                    }
                } else {
                    match (prev + 1..m).find(|&i| has_rook(i, row) || col_free(i)) {
                        Some(a) => {
                            ptr = Some(a);
                            pointers.push(a + 1);
                            if has_rook(a, row) {
                                StepAction::Remove(a)
                            } else {
                                StepAction::TryAdd(a)
                            }
                        }
                        None => StepAction::Exhausted,
                    }
                }
            }
        };
        match action {
            StepAction::Remove(a) => {
                let partner = face.without(grid.vertex(a, row));
                let outcome = if partner.is_empty() {
                    TraceOutcome::CriticalBase
                } else {
                    TraceOutcome::PairedDown { partner, row }
                };
                return Ok(FaceTrace {
                    pointers,
                    reuse,
                    outcome,
                });
            }
            StepAction::TryAdd(a) => {
                if row_counts[row] < profile.row_caps[row] {
                    let partner = face.with(grid.vertex(a, row));
                    return Ok(FaceTrace {
                        pointers,
                        reuse,
                        outcome: TraceOutcome::PairedUp { partner, row },
                    });
                }
                // Row full, the add is impossible; continue to the next row.
                reuse = 1;
            }
            StepAction::Stay => {}
            StepAction::Exhausted => {
                if row + 1 < n {
                    return Err(Error::PointerUndefined {
                        step: row + 1,
                        face,
                    });
                }
                return Ok(FaceTrace {
                    pointers,
                    reuse,
                    outcome: TraceOutcome::CriticalPointerExhausted,
                });
            }
        }
    }
    Ok(FaceTrace {
        pointers,
        reuse,
        outcome: TraceOutcome::CriticalFullRows,
    })
}

/// Builds the stepwise matching on the multiple chessboard complex. The
/// cap inequality sum(l) >= sum(k) + n - 1 is required up front; under it
/// the column pointer can only run off the board at the last row, and
/// such faces are critical.
pub fn multiple_chessboard_dmf(
    grid: &GridSpec,
    profile: &MultiplicityProfile,
) -> Result<(DiscreteVectorField, MatchingTrace)> {
    multiple_chessboard_dmf_with_cap(grid, profile, DEFAULT_FACE_CAP)
}

pub fn multiple_chessboard_dmf_with_cap(
    grid: &GridSpec,
    profile: &MultiplicityProfile,
    cap: usize,
) -> Result<(DiscreteVectorField, MatchingTrace)> {
    let star = star_condition(profile, grid);
    if !star.holds {
        return Err(Error::StarConditionViolated {
            col_sum: star.col_sum,
            row_sum: star.row_sum,
            rows: star.rows,
        });
    }
    let complex = multiple_chessboard_with_cap(grid, profile, cap)?;

    let mut trace = MatchingTrace::default();
    for face in complex.faces() {
        if face.is_empty() {
            continue;
        }
        let record = classify_chessboard(grid, profile, face)?;
        if record.outcome == TraceOutcome::CriticalPointerExhausted {
            debug_assert!(star.with_equality, "pointer exhaustion needs cap equality");
        }
        trace.per_face.insert(face, record);
    }

    let mut pairs = Vec::new();
    for (&face, record) in &trace.per_face {
        match &record.outcome {
            TraceOutcome::PairedUp { partner, .. } => {
                match trace.per_face.get(partner).map(|r| &r.outcome) {
                    Some(TraceOutcome::PairedDown { partner: down, .. }) if *down == face => {
                        pairs.push((face, *partner));
                    }
                    _ => return Err(Error::MatchingInconsistent(face)),
                }
            }
            TraceOutcome::PairedDown { partner, .. } => {
                match trace.per_face.get(partner).map(|r| &r.outcome) {
                    Some(TraceOutcome::PairedUp { partner: up, .. }) if *up == face => {}
                    _ => return Err(Error::MatchingInconsistent(face)),
                }
            }
            _ => {}
        }
    }
    pairs.sort();
    Ok((DiscreteVectorField::from_pairs(complex, pairs), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bier::bier_sphere;
    use crate::homology::{betti, Coefficients};

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().map(|v| v - 1)).unwrap()
    }

    #[test]
    fn zero_matching_is_valid_and_acyclic() {
        let k = SimplicialComplex::full_simplex(3).unwrap();
        let dvf = DiscreteVectorField::zero(k.clone());
        assert!(dvf.validate().is_valid());
        assert!(dvf.is_acyclic().unwrap().is_acyclic());
        let cells = dvf.critical_cells().unwrap();
        assert_eq!(cells.len(), k.face_count() - 1);
    }

    #[test]
    fn matching_the_empty_face_violates_axiom_c() {
        let k = SimplicialComplex::full_simplex(2).unwrap();
        let dvf = DiscreteVectorField::from_pairs(k, vec![(Face::EMPTY, face(&[1]))]);
        let report = dvf.validate();
        assert!(report
            .violations
            .contains(&MatchingViolation::EmptyFaceMatched));
    }

    #[test]
    fn double_membership_violates_axiom_a() {
        let k = SimplicialComplex::full_simplex(3).unwrap();
        let dvf = DiscreteVectorField::from_pairs(
            k,
            vec![(face(&[1]), face(&[1, 2])), (face(&[1]), face(&[1, 3]))],
        );
        let report = dvf.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, MatchingViolation::FaceInMultiplePairs(_))));
    }

    #[test]
    fn non_facet_pair_violates_axiom_b() {
        let k = SimplicialComplex::full_simplex(3).unwrap();
        let dvf = DiscreteVectorField::from_pairs(k, vec![(face(&[1]), face(&[1, 2, 3]))]);
        assert!(dvf
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, MatchingViolation::NotAFacetPair { .. })));
    }

    #[test]
    fn clockwise_matching_on_a_square_is_cyclic() {
        // 4-cycle with each vertex matched to its clockwise-next edge.
        let k = SimplicialComplex::from_facets(
            4,
            vec![face(&[1, 2]), face(&[2, 3]), face(&[3, 4]), face(&[1, 4])],
        )
        .unwrap();
        let dvf = DiscreteVectorField::from_pairs(
            k,
            vec![
                (face(&[1]), face(&[1, 2])),
                (face(&[2]), face(&[2, 3])),
                (face(&[3]), face(&[3, 4])),
                (face(&[4]), face(&[1, 4])),
            ],
        );
        assert!(dvf.validate().is_valid());
        match dvf.is_acyclic().unwrap() {
            Acyclicity::ClosedPath(p) => {
                assert!(p.is_closed());
                assert!(p.verify(&dvf));
            }
            Acyclicity::Acyclic => panic!("expected a closed path"),
        }
    }

    #[test]
    fn bier_matching_on_three_points_is_perfect() {
        let k = SimplicialComplex::discrete_points(3).unwrap();
        let bier = bier_sphere(&k).unwrap();
        let dvf = bier_dmf(&bier).unwrap();
        assert!(dvf.validate().is_valid());
        assert!(dvf.is_acyclic().unwrap().is_acyclic());
        let cells = dvf.critical_cells().unwrap();
        assert_eq!(cells.len(), 2);
        let dims: Vec<i64> = cells.iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![0, 1]);
        // The base cell is ({},{1};{2,3}) on the dual side.
        let base = bier.decode(cells[0]).unwrap();
        assert_eq!(base.k_side, Face::EMPTY);
        assert_eq!(base.dual_side, face(&[1]));
        // The top cell is the threshold triple.
        assert_eq!(bier.decode(cells[1]).unwrap(), bier.threshold_triple());
    }

    #[test]
    fn bier_matching_on_the_two_element_ground_set() {
        // K = {{}, {1}} on [2]: both critical cells are vertices.
        let k = SimplicialComplex::from_facets(2, vec![face(&[1])]).unwrap();
        let bier = bier_sphere(&k).unwrap();
        let dvf = bier_dmf(&bier).unwrap();
        let cells = dvf.critical_cells().unwrap();
        let dims: Vec<i64> = cells.iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![0, 0]);
    }

    #[test]
    fn bier_matching_exhaustive_on_four_elements() {
        for k in crate::enumeration::all_bier_inputs(4) {
            let bier = bier_sphere(&k).unwrap();
            if !bier.dual().contains(Face::singleton(0)) {
                continue;
            }
            let dvf = bier_dmf(&bier).unwrap();
            assert!(dvf.validate().is_valid(), "invalid for {k:?}");
            assert!(dvf.is_acyclic().unwrap().is_acyclic(), "cyclic for {k:?}");
            let mut dims: Vec<i64> = dvf
                .critical_cells()
                .unwrap()
                .iter()
                .map(|c| c.dim())
                .collect();
            dims.sort();
            assert_eq!(dims, vec![0, 2], "wrong critical cells for {k:?}");
        }
    }

    #[test]
    fn bier_dmf_rejects_trivial_dual_and_missing_base_vertex() {
        // The boundary of the simplex has dual {{}}.
        let boundary = SimplicialComplex::full_simplex(3).unwrap().skeleton(1);
        let bier = bier_sphere(&boundary).unwrap();
        assert!(matches!(bier_dmf(&bier), Err(Error::TrivialDual)));

        // K containing the coatom {2,3} has {1} outside the dual.
        let k = SimplicialComplex::from_facets(3, vec![face(&[2, 3])]).unwrap();
        let bier = bier_sphere(&k).unwrap();
        assert!(matches!(bier_dmf(&bier), Err(Error::BaseVertexMissing)));
        // The raw field still exists, is valid and acyclic.
        let dvf = bier_vector_field(&bier).unwrap();
        assert!(dvf.validate().is_valid());
        assert!(dvf.is_acyclic().unwrap().is_acyclic());
    }

    #[test]
    fn chessboard_dmf_on_the_triangle_boundary() {
        let grid = GridSpec::new(3, 1).unwrap();
        let profile = MultiplicityProfile::new(vec![2], vec![1, 1, 1]);
        let (dvf, trace) = multiple_chessboard_dmf(&grid, &profile).unwrap();
        assert!(dvf.validate().is_valid());
        assert!(dvf.is_acyclic().unwrap().is_acyclic());
        let cells = dvf.critical_cells().unwrap();
        let dims: Vec<i64> = cells.iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![0, 1], "one base vertex and one 1-cell");
        // Matches b = (1, 1) of the circle.
        let profile_betti = betti(dvf.complex(), Coefficients::Integer).unwrap();
        assert_eq!(profile_betti.betti, vec![1, 1]);
        // Pointers never decrease in any trace.
        for record in trace.per_face.values() {
            assert!(record.pointers.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn chessboard_dmf_rejects_the_standard_4_3_board() {
        let grid = GridSpec::new(4, 3).unwrap();
        let profile = MultiplicityProfile::uniform(&grid, 1, 1);
        assert!(matches!(
            multiple_chessboard_dmf(&grid, &profile),
            Err(Error::StarConditionViolated { .. })
        ));
    }

    #[test]
    fn chessboard_dmf_on_the_5_2_board() {
        let grid = GridSpec::new(5, 2).unwrap();
        let profile = MultiplicityProfile::uniform(&grid, 1, 1);
        let (dvf, _) = multiple_chessboard_dmf(&grid, &profile).unwrap();
        assert!(dvf.validate().is_valid());
        assert!(dvf.is_acyclic().unwrap().is_acyclic());
        let cells = dvf.critical_cells().unwrap();
        let zero: Vec<&Face> = cells.iter().filter(|c| c.dim() == 0).collect();
        assert_eq!(zero.len(), 1);
        assert!(cells.iter().all(|c| c.dim() == 0 || c.dim() == 1));
        assert_eq!(dvf.connectivity_certificate().unwrap(), 0);
    }

    #[test]
    fn certificate_of_the_bier_matching() {
        let k =
            SimplicialComplex::from_facets(5, vec![face(&[1, 2]), face(&[2, 3]), face(&[4])])
                .unwrap();
        let bier = bier_sphere(&k).unwrap();
        let dvf = bier_dmf(&bier).unwrap();
        assert_eq!(dvf.connectivity_certificate().unwrap(), 2);
    }

    #[test]
    fn certificate_rejects_multiple_zero_cells() {
        let k = SimplicialComplex::discrete_points(2).unwrap();
        let dvf = DiscreteVectorField::zero(k);
        assert!(matches!(
            dvf.connectivity_certificate(),
            Err(Error::CertificateNotApplicable { zero_cells: 2 })
        ));
    }

    #[test]
    fn certificate_of_a_single_point_is_the_dimension() {
        let dvf = DiscreteVectorField::zero(SimplicialComplex::point());
        assert_eq!(dvf.connectivity_certificate().unwrap(), 0);
    }

    #[test]
    fn cap_equality_surfaces_pointer_exhausted_criticals() {
        // 1+1+1 = 1+1+2-1: the column pointer may run off the board at
        // the last row, exactly on all-rows-full faces, which are then
        // critical. On the unit-capped 3x2 board that yields one such
        // 1-cell next to the base vertex: a perfect matching for the
        // circle.
        let grid = GridSpec::new(3, 2).unwrap();
        let profile = MultiplicityProfile::uniform(&grid, 1, 1);
        assert!(star_condition(&profile, &grid).with_equality);
        let (dvf, trace) = multiple_chessboard_dmf(&grid, &profile).unwrap();

        let exhausted: Vec<Face> = trace
            .per_face
            .iter()
            .filter(|(_, rec)| rec.outcome == TraceOutcome::CriticalPointerExhausted)
            .map(|(f, _)| *f)
            .collect();
        assert_eq!(exhausted.len(), 1);
        for f in &exhausted {
            let mut row_counts = vec![0usize; grid.rows];
            for v in f.vertices() {
                row_counts[grid.cell(v).1] += 1;
            }
            assert_eq!(row_counts, profile.row_caps, "rows not full in {f}");
        }
        let cells = dvf.critical_cells().unwrap();
        let dims: Vec<i64> = cells.iter().map(|c| c.dim()).collect();
        assert_eq!(dims, vec![0, 1]);

        // Away from equality the pointer never runs off the board.
        let slack = MultiplicityProfile::new(vec![1, 1], vec![1, 1, 2]);
        assert!(!star_condition(&slack, &grid).with_equality);
        let (_, trace) = multiple_chessboard_dmf(&grid, &slack).unwrap();
        assert!(trace
            .per_face
            .values()
            .all(|rec| rec.outcome != TraceOutcome::CriticalPointerExhausted));
    }

    #[test]
    fn all_rows_full_on_non_base_critical_cells() {
        let grid = GridSpec::new(4, 2).unwrap();
        let profile = MultiplicityProfile::new(vec![1, 2], vec![1, 1, 1, 1]);
        let (dvf, trace) = multiple_chessboard_dmf(&grid, &profile).unwrap();
        for cell in dvf.critical_cells().unwrap() {
            if trace.per_face[&cell].outcome == TraceOutcome::CriticalBase {
                continue;
            }
            let mut row_counts = vec![0usize; grid.rows];
            for v in cell.vertices() {
                row_counts[grid.cell(v).1] += 1;
            }
            assert_eq!(row_counts, profile.row_caps, "rows not full in {cell}");
        }
    }

    #[test]
    fn morse_counts_dominate_betti_numbers() {
        // Weak Morse inequality on a generated field.
        let grid = GridSpec::new(4, 2).unwrap();
        let profile = MultiplicityProfile::new(vec![2, 1], vec![1, 1, 1, 1]);
        let (dvf, _) = multiple_chessboard_dmf(&grid, &profile).unwrap();
        let counts = dvf.critical_counts().unwrap();
        let b = betti(dvf.complex(), Coefficients::Integer).unwrap().betti;
        for (d, &bd) in b.iter().enumerate() {
            assert!(counts[d] >= bd, "critical_{d} < b_{d}");
        }
    }
}
