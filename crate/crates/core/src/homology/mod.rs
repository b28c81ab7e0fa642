//! Exact simplicial homology: the independent oracle behind every sphere,
//! torus, perfectness, and connectivity claim in the crate.

pub mod snf;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Sparse integer matrix of the boundary map from p-faces to (p-1)-faces,
/// with signs from the sorted-vertex orientation convention.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub dim: i64,
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    /// Per column, the (row index, sign) pairs.
    pub entries: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    fn build(rows: Vec<Face>, cols: Vec<Face>, dim: i64) -> BoundaryMatrix {
        let row_index: HashMap<Face, usize> =
            rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let entries = cols
            .iter()
            .map(|col| {
                col.vertices()
                    .map(|v| {
                        let sub = col.without(v);
                        let sign = if col.index_of(v).unwrap() % 2 == 0 {
                            1
                        } else {
                            -1
                        };
                        (row_index[&sub], sign)
                    })
                    .collect()
            })
            .collect();
        BoundaryMatrix {
            dim,
            rows,
            cols,
            entries,
        }
    }

    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (c, col) in self.entries.iter().enumerate() {
            for &(r, sign) in col {
                out.push((r, c, sign));
            }
        }
        out
    }
}

/// The full stack of boundary matrices of a complex. Building it verifies
/// that consecutive boundaries compose to zero.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub layers: Vec<Vec<Face>>,
    pub matrices: Vec<BoundaryMatrix>,
}

impl ChainComplex {
    pub fn build(k: &SimplicialComplex) -> ChainComplex {
        let dim = k.dim().unwrap_or(-1);
        let layers: Vec<Vec<Face>> = (0..=dim.max(-1))
            .filter(|&d| d >= 0)
            .map(|d| k.faces_of_dim(d))
            .collect();
        let mut matrices = Vec::new();
        for p in 1..layers.len() {
            matrices.push(BoundaryMatrix::build(
                layers[p - 1].clone(),
                layers[p].clone(),
                p as i64,
            ));
        }
        let chain = ChainComplex { layers, matrices };
        assert!(
            chain.boundary_squared_is_zero(),
            "boundary composition failed to vanish; orientation bookkeeping is broken"
        );
        chain
    }

    /// Composes consecutive boundary matrices and checks for the zero matrix.
    pub fn boundary_squared_is_zero(&self) -> bool {
        for w in self.matrices.windows(2) {
            let (lower, upper) = (&w[0], &w[1]);
            for col in &upper.entries {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, s1) in col {
                    for &(r, s2) in &lower.entries[mid] {
                        *acc.entry(r).or_insert(0) += s1 * s2;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }

    fn layer_size(&self, p: usize) -> usize {
        self.layers.get(p).map_or(0, |l| l.len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integer,
    F2,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integer => write!(f, "Z"),
            Coefficients::F2 => write!(f, "Z/2"),
        }
    }
}

/// Betti numbers b_0..b_dim plus, for integer coefficients, the torsion
/// invariant factors of each homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfile {
    pub coefficients: Coefficients,
    pub betti: Vec<usize>,
    /// torsion\[d\] lists the invariant factors > 1 of H_d; empty for F2.
    pub torsion: Vec<Vec<BigInt>>,
}

impl BettiProfile {
    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// Alternating sum of the Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn reduced_betti(&self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        let b = self.betti.get(d as usize).copied().unwrap_or(0);
        if d == 0 {
            b.saturating_sub(1)
        } else {
            b
        }
    }

    pub fn torsion_at(&self, d: i64) -> &[BigInt] {
        if d < 0 {
            return &[];
        }
        self.torsion
            .get(d as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// Unreduced Betti numbers of a complex over the requested coefficients.
/// Exact Smith-normal-form ranks; no floating point anywhere.
pub fn betti(k: &SimplicialComplex, coefficients: Coefficients) -> Result<BettiProfile> {
    if k.face_count() > crate::complex::DEFAULT_FACE_CAP {
        return Err(Error::TooManyFaces {
            cap: crate::complex::DEFAULT_FACE_CAP,
        });
    }
    let chain = ChainComplex::build(k);
    let top = chain.layers.len(); // number of nonnegative dimensions present
    let mut betti = Vec::with_capacity(top);
    let mut torsion = Vec::with_capacity(top);

    match coefficients {
        Coefficients::Integer => {
            let snfs: Vec<snf::SnfOutcome> = chain
                .matrices
                .iter()
                .map(|m| snf::smith_normal_form(m.rows.len(), m.cols.len(), &m.triples()))
                .collect();
            for p in 0..top {
                let rank_p = if p == 0 { 0 } else { snfs[p - 1].rank };
                let rank_up = snfs.get(p).map_or(0, |s| s.rank);
                betti.push(chain.layer_size(p) - rank_p - rank_up);
                torsion.push(snfs.get(p).map_or_else(Vec::new, |s| s.torsion.clone()));
            }
        }
        Coefficients::F2 => {
            let ranks: Vec<usize> = chain
                .matrices
                .iter()
                .map(|m| snf::rank_mod2(m.rows.len(), m.cols.len(), &m.triples()))
                .collect();
            for p in 0..top {
                let rank_p = if p == 0 { 0 } else { ranks[p - 1] };
                let rank_up = ranks.get(p).copied().unwrap_or(0);
                betti.push(chain.layer_size(p) - rank_p - rank_up);
                torsion.push(Vec::new());
            }
        }
    }

    Ok(BettiProfile {
        coefficients,
        betti,
        torsion,
    })
}

/// Homological connectivity verdict over the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomConnectivity {
    /// No vertices at all (void complex or the empty face alone); the
    /// realization is the empty space.
    EmptySpace,
    /// More than one connected component.
    Disconnected,
    /// Reduced integer homology (ranks and torsion) vanishes in every
    /// degree <= c, and degree c + 1 obstructs.
    UpTo(i64),
    /// Reduced integer homology vanishes in every degree.
    Acyclic,
}

impl HomConnectivity {
    /// Whether the verdict certifies `bound`-connectedness homologically.
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            HomConnectivity::EmptySpace => bound <= -2,
            HomConnectivity::Disconnected => bound <= -1,
            HomConnectivity::UpTo(c) => bound <= *c,
            HomConnectivity::Acyclic => true,
        }
    }
}

impl fmt::Display for HomConnectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomConnectivity::EmptySpace => write!(f, "empty"),
            HomConnectivity::Disconnected => write!(f, "disconnected"),
            HomConnectivity::UpTo(c) => write!(f, "{c}"),
            HomConnectivity::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Largest c such that reduced integer homology (including torsion)
/// vanishes in all degrees <= c.
pub fn homological_connectivity(k: &SimplicialComplex) -> Result<HomConnectivity> {
    let Some(dim) = k.dim() else {
        return Ok(HomConnectivity::EmptySpace);
    };
    if dim < 0 {
        return Ok(HomConnectivity::EmptySpace);
    }
    let profile = betti(k, Coefficients::Integer)?;
    if profile.betti[0] != 1 {
        return Ok(HomConnectivity::Disconnected);
    }
    let mut c = 0i64;
    loop {
        let next = c + 1;
        if next > dim {
            return Ok(HomConnectivity::Acyclic);
        }
        if profile.reduced_betti(next) != 0 || !profile.torsion_at(next).is_empty() {
            return Ok(HomConnectivity::UpTo(c));
        }
        c = next;
    }
}

/// Whether reduced integer homology equals that of the d-sphere: rank 1
/// in degree d, zero elsewhere, torsion-free. `d = -1` accepts exactly
/// the empty-face-only complex.
pub fn sphere_check(k: &SimplicialComplex, d: i64) -> Result<bool> {
    if d < -1 {
        return Ok(false);
    }
    if d == -1 {
        return Ok(!k.is_void() && k.dim() == Some(-1));
    }
    let Some(dim) = k.dim() else {
        return Ok(false);
    };
    if dim < 0 {
        return Ok(false);
    }
    let profile = betti(k, Coefficients::Integer)?;
    if profile.has_torsion() {
        return Ok(false);
    }
    for deg in 0..=dim {
        let expected = if deg == d { 1 } else { 0 };
        if profile.reduced_betti(deg) != expected {
            return Ok(false);
        }
    }
    // Degrees above dim vanish automatically; require d within range.
    Ok(d <= dim)
}
