//! Bottleneck extrema on clutters: brute-force minmax/maxmin, blockers,
//! the complementary-complex dictionary, and the solution that reads the
//! answer off the top critical cell of the matching on a Bier sphere.

use num_rational::Rational64;

use crate::bier::{bier_sphere_with_cap, BierTriple};
use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::morse::bier_vector_field;

/// Ground-set size limit for the exhaustive clutter operations.
pub const CLUTTER_GROUND_LIMIT: usize = 24;
/// Ground-set size limit for the Bier-sphere route.
pub const MORSE_GROUND_LIMIT: usize = 16;

/// An antichain of nonempty subsets of a ground set \[n\].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clutter {
    ground: usize,
    members: Vec<Face>,
}

impl Clutter {
    pub fn new(ground: usize, mut members: Vec<Face>) -> Result<Clutter> {
        if ground > CLUTTER_GROUND_LIMIT {
            return Err(Error::GroundOverLimit {
                got: ground,
                limit: CLUTTER_GROUND_LIMIT,
            });
        }
        members.sort();
        members.dedup();
        let whole = Face::prefix(ground);
        for (idx, &m) in members.iter().enumerate() {
            if m.is_empty() {
                return Err(Error::EmptyClutterMember(idx));
            }
            if !m.is_subset_of(whole) {
                return Err(Error::VertexOutOfRange {
                    index: m.difference(whole).min_vertex().unwrap(),
                    ground,
                });
            }
        }
        for &a in &members {
            for &b in &members {
                if a != b && a.is_subset_of(b) {
                    return Err(Error::NotAnAntichain(b, a));
                }
            }
        }
        Ok(Clutter { ground, members })
    }

    /// Reduces an arbitrary family to its minimal members.
    pub fn from_family(ground: usize, family: Vec<Face>) -> Result<Clutter> {
        let minimal: Vec<Face> = family
            .iter()
            .filter(|&&a| !a.is_empty() && !family.iter().any(|&b| b != a && b.is_subset_of(a)))
            .copied()
            .collect();
        Clutter::new(ground, minimal)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[Face] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Parses "1 2;1 3" style member lists: elements space-separated and
    /// 1-based, members separated by semicolons.
    pub fn parse(ground: usize, text: &str) -> Result<Clutter> {
        let mut members = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let mut verts = Vec::new();
            for tok in part.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element token `{tok}`")))?;
                if v == 0 || v > ground {
                    return Err(Error::Parse(format!(
                        "element `{tok}` outside 1..={ground}"
                    )));
                }
                verts.push(v - 1);
            }
            members.push(Face::from_vertices(verts)?);
        }
        Clutter::new(ground, members)
    }

    /// Renames element v to perm\[v\] in every member.
    pub fn relabel(&self, perm: &[usize]) -> Clutter {
        let members = self
            .members
            .iter()
            .map(|m| {
                Face::from_vertices(m.vertices().map(|v| perm[v]))
                    .expect("permutation keeps elements in range")
            })
            .collect();
        Clutter::new(self.ground, members).expect("relabeling preserves the antichain")
    }
}

/// Rational weights on the ground set. Injectivity is not required; ties
/// break by element index, which matches perturbing f(e) by epsilon * e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weighting {
    values: Vec<Rational64>,
}

impl Weighting {
    pub fn new(values: Vec<Rational64>) -> Weighting {
        Weighting { values }
    }

    /// The identity weighting e -> e (1-based value on 0-based index).
    pub fn identity(n: usize) -> Weighting {
        Weighting {
            values: (0..n).map(|e| Rational64::from(e as i64 + 1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, e: usize) -> Rational64 {
        self.values[e]
    }

    /// Tie-broken comparison key for element e.
    fn key(&self, e: usize) -> (Rational64, usize) {
        (self.values[e], e)
    }

    /// Parses "3.5,1,-2/3" style comma-separated rationals.
    pub fn parse(text: &str) -> Result<Weighting> {
        let mut values = Vec::new();
        for tok in text.split(',') {
            values.push(parse_rational(tok.trim())?);
        }
        Ok(Weighting { values })
    }
}

fn parse_rational(tok: &str) -> Result<Rational64> {
    if tok.is_empty() {
        return Err(Error::Parse("empty weight token".into()));
    }
    if let Some((num, den)) = tok.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight `{tok}`")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight `{tok}`")))?;
        if d == 0 {
            return Err(Error::Parse(format!("zero denominator in `{tok}`")));
        }
        return Ok(Rational64::new(n, d));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let i: i64 = if int == "-" || int.is_empty() {
            0
        } else {
            int.parse()
                .map_err(|_| Error::Parse(format!("bad weight `{tok}`")))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad weight `{tok}`")));
        }
        let scale = 10i64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| Error::Parse(format!("weight `{tok}` has too many digits")))?;
        let f: i64 = frac
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight `{tok}`")))?;
        let magnitude = i.unsigned_abs() as i64 * scale + f;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(Rational64::new(signed, scale));
    }
    let n: i64 = tok
        .parse()
        .map_err(|_| Error::Parse(format!("bad weight `{tok}`")))?;
    Ok(Rational64::from(n))
}

/// Marks every subset of \[n\] containing some member: a sum-over-subsets
/// sweep over the powerset. The clutter type bounds n at 24, so the
/// table stays desk-sized and the sweep is total.
fn covered_table(clutter: &Clutter) -> Result<Vec<bool>> {
    let n = clutter.ground;
    let mut covered = vec![false; 1 << n];
    for m in &clutter.members {
        covered[m.bits() as usize] = true;
    }
    for b in 0..n {
        for s in 0..(1usize << n) {
            if s & (1 << b) != 0 && covered[s ^ (1 << b)] {
                covered[s] = true;
            }
        }
    }
    Ok(covered)
}

/// The upper closure: all supersets of members, sorted.
pub fn upper_closure(clutter: &Clutter) -> Result<Vec<Face>> {
    let covered = covered_table(clutter)?;
    let mut out: Vec<Face> = covered
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c)
        .map(|(s, _)| Face::from_bits(s as u128))
        .collect();
    out.sort();
    Ok(out)
}

/// The complementary simplicial complex: all subsets containing no member.
pub fn complement_complex(clutter: &Clutter) -> Result<SimplicialComplex> {
    let covered = covered_table(clutter)?;
    let faces = covered
        .iter()
        .enumerate()
        .filter(|&(_, &c)| !c)
        .map(|(s, _)| Face::from_bits(s as u128))
        .collect();
    Ok(SimplicialComplex::from_closed_faces(clutter.ground, faces))
}

/// The complementary clutter: all minimal transversals, by exhaustive
/// enumeration. A transversal meets every member; it is minimal when no
/// element can be dropped.
pub fn blocker(clutter: &Clutter) -> Result<Clutter> {
    if clutter.is_empty() {
        return Err(Error::EmptyClutter);
    }
    let n = clutter.ground;
    let hits_all = |s: Face| clutter.members.iter().all(|m| !m.is_disjoint(s));
    let mut minimal = Vec::new();
    for bits in 1..(1u128 << n) {
        let s = Face::from_bits(bits);
        if hits_all(s) && s.vertices().all(|v| !hits_all(s.without(v))) {
            minimal.push(s);
        }
    }
    Clutter::new(n, minimal)
}

/// Both routes to the dual complex, computed independently: the Alexander
/// dual of the complementary complex, and the complementary complex of
/// the blocker.
#[derive(Debug, Clone)]
pub struct DualIdentityReport {
    pub via_alexander: SimplicialComplex,
    pub via_blocker: SimplicialComplex,
    pub holds: bool,
}

pub fn dual_complex_identity(clutter: &Clutter) -> Result<DualIdentityReport> {
    let via_alexander = complement_complex(clutter)?.alexander_dual();
    let via_blocker = complement_complex(&blocker(clutter)?)?;
    let holds = via_alexander == via_blocker;
    Ok(DualIdentityReport {
        via_alexander,
        via_blocker,
        holds,
    })
}

/// A bottleneck value with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckValue {
    pub value: Rational64,
    pub element: usize,
    pub witness: Face,
}

/// min over members of the max weight inside the member.
pub fn minmax_bruteforce(clutter: &Clutter, f: &Weighting) -> Result<BottleneckValue> {
    if clutter.is_empty() {
        return Err(Error::EmptyClutter);
    }
    let best = clutter
        .members
        .iter()
        .map(|&member| {
            let e = member
                .vertices()
                .max_by_key(|&v| f.key(v))
                .expect("members are nonempty");
            (f.key(e), e, member)
        })
        .min()
        .expect("clutter has members");
    Ok(BottleneckValue {
        value: f.get(best.1),
        element: best.1,
        witness: best.2,
    })
}

/// max over members of the min weight inside the member.
pub fn maxmin_bruteforce(clutter: &Clutter, f: &Weighting) -> Result<BottleneckValue> {
    if clutter.is_empty() {
        return Err(Error::EmptyClutter);
    }
    let best = clutter
        .members
        .iter()
        .map(|&member| {
            let e = member
                .vertices()
                .min_by_key(|&v| f.key(v))
                .expect("members are nonempty");
            (f.key(e), e, member)
        })
        .max()
        .expect("clutter has members");
    Ok(BottleneckValue {
        value: f.get(best.1),
        element: best.1,
        witness: best.2,
    })
}

/// The Morse-theoretic solution: value, bottleneck element, and the top
/// critical cell of the Bier matching, mapped back to original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseSolution {
    pub value: Rational64,
    pub element: usize,
    /// The critical cell (A1, A2; {i}) in original element labels.
    pub critical: BierTriple,
}

/// Solves the bottleneck problem by relabeling the elements into weight
/// order, building Bier(K) for the complementary complex K, running the
/// two-step matching, and reading off the unique top-dimensional critical
/// cell (A1, A2; {i}) with A1 < i < A2, A1 in K, A2 in the dual. The
/// matching runs in the weight order itself; no further re-enumeration is
/// applied, since the value argument needs the weights to be monotone
/// along the matching's element order.
pub fn bottleneck_via_morse(clutter: &Clutter, f: &Weighting) -> Result<MorseSolution> {
    bottleneck_via_morse_with_cap(clutter, f, DEFAULT_FACE_CAP)
}

pub fn bottleneck_via_morse_with_cap(
    clutter: &Clutter,
    f: &Weighting,
    cap: usize,
) -> Result<MorseSolution> {
    if clutter.is_empty() {
        return Err(Error::EmptyClutter);
    }
    let n = clutter.ground;
    if n > MORSE_GROUND_LIMIT {
        return Err(Error::GroundOverLimit {
            got: n,
            limit: MORSE_GROUND_LIMIT,
        });
    }
    if f.len() != n {
        return Err(Error::GroundMismatch {
            expected: n,
            got: f.len(),
        });
    }

    // Sort elements into (weight, index) order; new label t holds the
    // element with the t-th smallest weight.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| f.key(e));
    let mut new_of_old = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old] = new;
    }
    let relabeled = clutter.relabel(&new_of_old);
    let complement = complement_complex(&relabeled)?;

    let restore = |t: &BierTriple| -> BierTriple {
        let back = |face: Face| {
            Face::from_vertices(face.vertices().map(|v| order[v]))
                .expect("inverse relabeling stays in range")
        };
        BierTriple {
            k_side: back(t.k_side),
            dual_side: back(t.dual_side),
            rest: back(t.rest),
        }
    };

    // When the clutter contains every singleton the complementary complex
    // collapses to the empty face alone and the bottleneck is the minimum
    // weight outright (this also covers the one-element ground set, where
    // the sphere construction is out of range).
    if complement.dim() == Some(-1) {
        let i_new = 0usize;
        let element = order[i_new];
        let triple = BierTriple {
            k_side: Face::EMPTY,
            dual_side: Face::prefix(n).without(i_new),
            rest: Face::singleton(i_new),
        };
        return Ok(MorseSolution {
            value: f.get(element),
            element,
            critical: restore(&triple),
        });
    }

    let bier = bier_sphere_with_cap(&complement, cap)?;
    let dvf = bier_vector_field(&bier)?;
    let top_dim = n as i64 - 2;
    let mut tops: Vec<BierTriple> = Vec::new();
    for cell in dvf.critical_cells()? {
        if cell.dim() != top_dim {
            continue;
        }
        let t = bier.decode(cell)?;
        if t.rest.len() != 1 {
            continue;
        }
        let i = t.rest.min_vertex().unwrap();
        if t.k_side.vertices().all(|v| v < i) && t.dual_side.vertices().all(|v| v > i) {
            tops.push(t);
        }
    }
    let [top] = tops.as_slice() else {
        return Err(Error::InvalidMatching(format!(
            "expected one ordered top critical cell, found {}",
            tops.len()
        )));
    };

    // Re-validate the membership characterization and cross-check against
    // the prefix-chain threshold computed without the matching.
    let i_new = top.rest.min_vertex().unwrap();
    if !bier.base().contains(top.k_side)
        || !bier.dual().contains(top.dual_side)
        || bier.base().contains(top.k_side.with(i_new))
        || *top != bier.threshold_triple()
    {
        return Err(Error::InvalidMatching(
            "top critical cell failed re-validation".into(),
        ));
    }

    let element = order[i_new];
    Ok(MorseSolution {
        value: f.get(element),
        element,
        critical: restore(top),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().map(|v| v - 1)).unwrap()
    }

    fn clutter(ground: usize, members: &[&[usize]]) -> Clutter {
        Clutter::new(
            ground,
            members.iter().map(|m| face(m)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn clutter_validation() {
        assert!(matches!(
            Clutter::new(2, vec![Face::EMPTY]),
            Err(Error::EmptyClutterMember(0))
        ));
        assert!(matches!(
            Clutter::new(3, vec![face(&[1]), face(&[1, 2])]),
            Err(Error::NotAnAntichain(_, _))
        ));
        let reduced = Clutter::from_family(3, vec![face(&[1]), face(&[1, 2]), face(&[2, 3])])
            .unwrap();
        assert_eq!(reduced.members(), &[face(&[1]), face(&[2, 3])]);
    }

    #[test]
    fn upper_closure_examples() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(
            upper_closure(&r).unwrap(),
            vec![face(&[1, 2]), face(&[1, 3]), face(&[1, 2, 3])]
        );
        let r = clutter(2, &[&[1]]);
        assert_eq!(upper_closure(&r).unwrap(), vec![face(&[1]), face(&[1, 2])]);
        let empty = Clutter::new(2, vec![]).unwrap();
        assert_eq!(upper_closure(&empty).unwrap(), Vec::<Face>::new());
    }

    #[test]
    fn complement_complex_examples() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        let k = complement_complex(&r).unwrap();
        assert_eq!(k.face_count(), 5);
        assert!(k.contains(face(&[2, 3])));
        assert!(!k.contains(face(&[1, 2])));

        let empty = Clutter::new(3, vec![]).unwrap();
        assert_eq!(
            complement_complex(&empty).unwrap(),
            SimplicialComplex::full_simplex(3).unwrap()
        );

        let singletons = clutter(3, &[&[1], &[2], &[3]]);
        assert_eq!(
            complement_complex(&singletons).unwrap(),
            SimplicialComplex::empty_face_only(3)
        );
    }

    #[test]
    fn blocker_examples() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        let s = blocker(&r).unwrap();
        assert_eq!(s.members(), &[face(&[1]), face(&[2, 3])]);

        let self_blocking = clutter(1, &[&[1]]);
        assert_eq!(blocker(&self_blocking).unwrap().members(), &[face(&[1])]);

        assert!(matches!(
            blocker(&Clutter::new(2, vec![]).unwrap()),
            Err(Error::EmptyClutter)
        ));
    }

    #[test]
    fn blocker_is_an_involution_on_small_grounds() {
        for k in crate::enumeration::all_complexes(4) {
            let facets = k.facets();
            if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
                continue;
            }
            let r = Clutter::new(4, facets).unwrap();
            let double = blocker(&blocker(&r).unwrap()).unwrap();
            assert_eq!(double, r, "blocker^2 differs for {r:?}");
        }
    }

    #[test]
    fn dual_identity_examples_and_exhaustive_on_four() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        let report = dual_complex_identity(&r).unwrap();
        assert!(report.holds);
        assert_eq!(report.via_alexander.face_count(), 3); // {}, {2}, {3}
        assert!(report.via_alexander.contains(face(&[2])));

        for k in crate::enumeration::all_complexes(4) {
            let facets = k.facets();
            if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
                continue;
            }
            let r = Clutter::new(4, facets).unwrap();
            assert!(dual_complex_identity(&r).unwrap().holds, "fails for {r:?}");
        }
    }

    #[test]
    fn partition_dichotomy_on_small_clutters() {
        // Exactly one of "a member inside E0" / "a blocker member inside
        // E1" holds for every 2-partition E = E0 u E1.
        for k in crate::enumeration::all_complexes(3) {
            let facets = k.facets();
            if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
                continue;
            }
            let r = Clutter::new(3, facets).unwrap();
            let s = blocker(&r).unwrap();
            for bits in 0..(1u128 << 3) {
                let e0 = Face::from_bits(bits);
                let e1 = e0.complement_in(3);
                let r_in_e0 = r.members().iter().any(|m| m.is_subset_of(e0));
                let s_in_e1 = s.members().iter().any(|m| m.is_subset_of(e1));
                assert!(r_in_e0 ^ s_in_e1, "dichotomy fails for {r:?} at {e0}");
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        let f = Weighting::identity(3);
        let a = minmax_bruteforce(&r, &f).unwrap();
        assert_eq!(a.value, Rational64::from(2));
        assert_eq!(a.witness, face(&[1, 2]));

        let s = clutter(3, &[&[1], &[2, 3]]);
        let b = maxmin_bruteforce(&s, &f).unwrap();
        assert_eq!(b.value, Rational64::from(2));
        assert_eq!(b.witness, face(&[2, 3]));

        let single = clutter(3, &[&[1, 3]]);
        assert_eq!(
            minmax_bruteforce(&single, &f).unwrap().value,
            Rational64::from(3)
        );
        assert_eq!(
            maxmin_bruteforce(&single, &f).unwrap().value,
            Rational64::from(1)
        );
    }

    #[test]
    fn minmax_equals_blocker_maxmin() {
        let f = Weighting::new(
            [5, 1, 4, 2, 3].iter().map(|&v| Rational64::from(v)).collect(),
        );
        for k in crate::enumeration::all_complexes(4) {
            let facets = k.facets();
            if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
                continue;
            }
            let r = Clutter::new(4, facets).unwrap();
            let s = blocker(&r).unwrap();
            let a = minmax_bruteforce(&r, &f).unwrap();
            let b = maxmin_bruteforce(&s, &f).unwrap();
            assert_eq!(a.value, b.value, "duality gap for {r:?}");
        }
    }

    #[test]
    fn morse_route_on_the_worked_example() {
        let r = clutter(3, &[&[1, 2], &[1, 3]]);
        let f = Weighting::identity(3);
        let sol = bottleneck_via_morse(&r, &f).unwrap();
        assert_eq!(sol.value, Rational64::from(2));
        assert_eq!(sol.element, 1); // 0-based element 1 is "2"
        assert_eq!(sol.critical.k_side, face(&[1]));
        assert_eq!(sol.critical.dual_side, face(&[3]));
        assert_eq!(sol.critical.rest, face(&[2]));
    }

    #[test]
    fn morse_route_forced_singleton() {
        let r = clutter(2, &[&[1]]);
        let f = Weighting::identity(2);
        let sol = bottleneck_via_morse(&r, &f).unwrap();
        assert_eq!(sol.value, Rational64::from(1));
        assert_eq!(sol.element, 0);
    }

    #[test]
    fn morse_route_all_singletons_special_case() {
        let r = clutter(3, &[&[1], &[2], &[3]]);
        let f = Weighting::new(
            [3, 1, 2].iter().map(|&v| Rational64::from(v)).collect(),
        );
        let sol = bottleneck_via_morse(&r, &f).unwrap();
        assert_eq!(sol.value, Rational64::from(1));
        assert_eq!(sol.element, 1);
        assert_eq!(
            sol.value,
            minmax_bruteforce(&r, &f).unwrap().value
        );
    }

    #[test]
    fn morse_route_one_element_ground() {
        let r = clutter(1, &[&[1]]);
        let f = Weighting::new(vec![Rational64::new(7, 2)]);
        let sol = bottleneck_via_morse(&r, &f).unwrap();
        assert_eq!(sol.value, Rational64::new(7, 2));
        assert_eq!(sol.element, 0);
    }

    #[test]
    fn morse_route_needs_no_base_vertex_relabeling() {
        // Every member contains element 1, so the dual misses {1} in
        // weight order; the order-preserving matching still finds the
        // unique ordered top cell.
        let r = clutter(3, &[&[1, 2]]);
        let f = Weighting::identity(3);
        let sol = bottleneck_via_morse(&r, &f).unwrap();
        let a = minmax_bruteforce(&r, &f).unwrap();
        assert_eq!(sol.value, a.value);
        assert_eq!(sol.value, Rational64::from(2));
    }

    #[test]
    fn morse_route_agrees_with_brute_force_on_all_small_clutters() {
        let f = Weighting::new(
            [4, 2, 8, 1].iter().map(|&v| Rational64::from(v)).collect(),
        );
        for k in crate::enumeration::all_complexes(4) {
            let facets = k.facets();
            if facets.is_empty() || facets.iter().any(|f| f.is_empty()) {
                continue;
            }
            let r = Clutter::new(4, facets).unwrap();
            let sol = bottleneck_via_morse(&r, &f).unwrap();
            let a = minmax_bruteforce(&r, &f).unwrap();
            let b = maxmin_bruteforce(&blocker(&r).unwrap(), &f).unwrap();
            assert_eq!(sol.value, a.value, "morse != minmax for {r:?}");
            assert_eq!(sol.value, b.value, "morse != maxmin for {r:?}");
            assert_eq!(sol.element, a.element, "element mismatch for {r:?}");
        }
    }

    #[test]
    fn monotone_reweighting_keeps_the_element() {
        let r = clutter(4, &[&[1, 2], &[2, 3, 4], &[1, 4]]);
        let f = Weighting::new(
            [3, 7, 2, 5].iter().map(|&v| Rational64::from(v)).collect(),
        );
        // x -> 2x + 1 is strictly increasing.
        let g = Weighting::new(
            [3, 7, 2, 5]
                .iter()
                .map(|&v| Rational64::from(2 * v + 1))
                .collect(),
        );
        let before = bottleneck_via_morse(&r, &f).unwrap();
        let after = bottleneck_via_morse(&r, &g).unwrap();
        assert_eq!(before.element, after.element);
        assert_eq!(after.value, Rational64::from(2 * 5 + 1));
        assert_eq!(before.critical, after.critical);
    }

    #[test]
    fn weight_parsing() {
        let w = Weighting::parse("3.5, 1, -2/3, -0.25, 4").unwrap();
        assert_eq!(w.get(0), Rational64::new(7, 2));
        assert_eq!(w.get(1), Rational64::from(1));
        assert_eq!(w.get(2), Rational64::new(-2, 3));
        assert_eq!(w.get(3), Rational64::new(-1, 4));
        assert_eq!(w.get(4), Rational64::from(4));
        assert!(Weighting::parse("x").is_err());
        assert!(Weighting::parse("1/0").is_err());
    }
}
