//! Standard, generalized, and multiple chessboard complexes on the
//! \[m\] x \[n\] grid.
//!
//! Grid conventions, fixed once for the whole crate:
//! - the grid has m columns indexed by i in \[m\] and n rows indexed by
//!   j in \[n\]; a cell is (i, j) and linearizes to i + m*j;
//! - row constraints: the trace {i : (i,j) in A} of row j must lie in a
//!   complex over \[m\] (for multiplicities: have size at most k_j);
//! - column constraints: the trace {j : (i,j) in A} of column i must lie
//!   in a complex over \[n\] (size at most l_i).

use std::collections::HashSet;

use crate::complex::{SimplicialComplex, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::face::Face;

/// An m-columns by n-rows chessboard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub cols: usize,
    pub rows: usize,
}

impl GridSpec {
    pub fn new(cols: usize, rows: usize) -> Result<GridSpec> {
        if cols == 0 || rows == 0 {
            return Err(Error::Parse("grid dimensions must be positive".into()));
        }
        if cols.saturating_mul(rows) > crate::face::MAX_GROUND {
            return Err(Error::GroundTooLarge(cols * rows));
        }
        Ok(GridSpec { cols, rows })
    }

    pub fn vertex(&self, col: usize, row: usize) -> usize {
        debug_assert!(col < self.cols && row < self.rows);
        col + self.cols * row
    }

    pub fn cell(&self, vertex: usize) -> (usize, usize) {
        (vertex % self.cols, vertex / self.cols)
    }

    pub fn ground_size(&self) -> usize {
        self.cols * self.rows
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.ground_size())
            .map(|v| {
                let (i, j) = self.cell(v);
                format!("({},{})", i + 1, j + 1)
            })
            .collect()
    }

    pub fn transpose(&self) -> GridSpec {
        GridSpec {
            cols: self.rows,
            rows: self.cols,
        }
    }
}

/// Per-row caps (k_1, ..., k_n) and per-column caps (l_1, ..., l_m) for the
/// multiple chessboard complex. Zero caps are allowed and delete the
/// corresponding line of the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub row_caps: Vec<usize>,
    pub col_caps: Vec<usize>,
}

impl MultiplicityProfile {
    pub fn new(row_caps: Vec<usize>, col_caps: Vec<usize>) -> MultiplicityProfile {
        MultiplicityProfile { row_caps, col_caps }
    }

    pub fn uniform(grid: &GridSpec, row_cap: usize, col_cap: usize) -> MultiplicityProfile {
        MultiplicityProfile {
            row_caps: vec![row_cap; grid.rows],
            col_caps: vec![col_cap; grid.cols],
        }
    }

    fn validate(&self, grid: &GridSpec) -> Result<()> {
        if self.row_caps.len() != grid.rows {
            return Err(Error::ProfileLengthMismatch {
                expected: grid.rows,
                got: self.row_caps.len(),
            });
        }
        if self.col_caps.len() != grid.cols {
            return Err(Error::ProfileLengthMismatch {
                expected: grid.cols,
                got: self.col_caps.len(),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> MultiplicityProfile {
        MultiplicityProfile {
            row_caps: self.col_caps.clone(),
            col_caps: self.row_caps.clone(),
        }
    }
}

/// Constraint collections (K_1..K_n over \[m\]; L_1..L_m over \[n\]) for the
/// generalized chessboard complex.
#[derive(Debug, Clone)]
pub struct ComplexPair {
    pub row_constraints: Vec<SimplicialComplex>,
    pub col_constraints: Vec<SimplicialComplex>,
}

impl ComplexPair {
    pub fn new(
        row_constraints: Vec<SimplicialComplex>,
        col_constraints: Vec<SimplicialComplex>,
    ) -> ComplexPair {
        ComplexPair {
            row_constraints,
            col_constraints,
        }
    }

    fn validate(&self, grid: &GridSpec) -> Result<()> {
        if self.row_constraints.len() != grid.rows {
            return Err(Error::ProfileLengthMismatch {
                expected: grid.rows,
                got: self.row_constraints.len(),
            });
        }
        if self.col_constraints.len() != grid.cols {
            return Err(Error::ProfileLengthMismatch {
                expected: grid.cols,
                got: self.col_constraints.len(),
            });
        }
        for k in &self.row_constraints {
            if k.ground_size() != grid.cols {
                return Err(Error::GroundMismatch {
                    expected: grid.cols,
                    got: k.ground_size(),
                });
            }
        }
        for l in &self.col_constraints {
            if l.ground_size() != grid.rows {
                return Err(Error::GroundMismatch {
                    expected: grid.rows,
                    got: l.ground_size(),
                });
            }
        }
        Ok(())
    }
}

/// Outcome of the inequality sum(l) >= sum(k) + n - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarCondition {
    pub holds: bool,
    pub with_equality: bool,
    pub col_sum: usize,
    pub row_sum: usize,
    pub rows: usize,
}

/// Evaluates the hypothesis sum(l) >= sum(k) + n - 1 on a profile and
/// reports whether it holds with equality.
pub fn star_condition(profile: &MultiplicityProfile, grid: &GridSpec) -> StarCondition {
    let col_sum: usize = profile.col_caps.iter().sum();
    let row_sum: usize = profile.row_caps.iter().sum();
    let rhs = row_sum + grid.rows - 1;
    StarCondition {
        holds: col_sum >= rhs,
        with_equality: col_sum == rhs,
        col_sum,
        row_sum,
        rows: grid.rows,
    }
}

/// Non-taking rook placements: no two rooks share a row or a column.
pub fn standard_chessboard(grid: &GridSpec) -> Result<SimplicialComplex> {
    let profile = MultiplicityProfile::uniform(grid, 1, 1);
    multiple_chessboard(grid, &profile)
}

/// Rook placements whose row traces lie in the given row constraints and
/// column traces in the column constraints.
pub fn generalized_chessboard(grid: &GridSpec, pair: &ComplexPair) -> Result<SimplicialComplex> {
    generalized_chessboard_with_cap(grid, pair, DEFAULT_FACE_CAP)
}

pub fn generalized_chessboard_with_cap(
    grid: &GridSpec,
    pair: &ComplexPair,
    cap: usize,
) -> Result<SimplicialComplex> {
    pair.validate(grid)?;
    let (m, n) = (grid.cols, grid.rows);
    if pair.row_constraints.iter().any(|k| k.is_void())
        || pair.col_constraints.iter().any(|l| l.is_void())
    {
        // A void constraint admits no trace at all, not even the empty one.
        return Ok(SimplicialComplex::void(m * n));
    }

    // DFS over cells in linear order; trace membership is monotone, so
    // every face extends a smaller face and pruning is sound.
    let mut faces: HashSet<Face> = HashSet::new();
    faces.insert(Face::EMPTY);
    let mut row_traces = vec![Face::EMPTY; n];
    let mut col_traces = vec![Face::EMPTY; m];
    let mut stack: Vec<usize> = Vec::new();

    struct Dfs<'a> {
        grid: &'a GridSpec,
        pair: &'a ComplexPair,
        cap: usize,
    }

    impl Dfs<'_> {
        #[allow(clippy::too_many_arguments)]
        fn go(
            &self,
            start: usize,
            row_traces: &mut [Face],
            col_traces: &mut [Face],
            stack: &mut Vec<usize>,
            faces: &mut HashSet<Face>,
        ) -> Result<()> {
            for lin in start..self.grid.ground_size() {
                let (i, j) = self.grid.cell(lin);
                let new_row = row_traces[j].with(i);
                if !self.pair.row_constraints[j].contains(new_row) {
                    continue;
                }
                let new_col = col_traces[i].with(j);
                if !self.pair.col_constraints[i].contains(new_col) {
                    continue;
                }
                let old_row = row_traces[j];
                let old_col = col_traces[i];
                row_traces[j] = new_row;
                col_traces[i] = new_col;
                stack.push(lin);

                let face = Face::from_vertices(stack.iter().copied())
                    .expect("grid vertices stay within the bit width");
                if faces.insert(face) && faces.len() > self.cap {
                    return Err(Error::TooManyFaces { cap: self.cap });
                }
                self.go(lin + 1, row_traces, col_traces, stack, faces)?;

                stack.pop();
                row_traces[j] = old_row;
                col_traces[i] = old_col;
            }
            Ok(())
        }
    }

    Dfs { grid, pair, cap }.go(0, &mut row_traces, &mut col_traces, &mut stack, &mut faces)?;
    Ok(SimplicialComplex::from_closed_faces(m * n, faces).with_labels(grid.labels()))
}

/// All subsets of \[m\] of size at most k, enumerated directly.
pub fn bounded_subsets_complex(m: usize, k: usize) -> Result<SimplicialComplex> {
    if m > crate::face::MAX_GROUND {
        return Err(Error::GroundTooLarge(m));
    }
    let mut faces: HashSet<Face> = HashSet::new();
    fn rec(m: usize, k: usize, start: usize, cur: Face, faces: &mut HashSet<Face>) {
        faces.insert(cur);
        if cur.len() == k {
            return;
        }
        for v in start..m {
            rec(m, k, v + 1, cur.with(v), faces);
        }
    }
    rec(m, k, 0, Face::EMPTY, &mut faces);
    Ok(SimplicialComplex::from_closed_faces(m, faces))
}

/// Rook placements with at most `row_caps[j]` rooks in row j and at most
/// `col_caps[i]` rooks in column i; the specialization of the generalized
/// complex to cap constraints.
pub fn multiple_chessboard(
    grid: &GridSpec,
    profile: &MultiplicityProfile,
) -> Result<SimplicialComplex> {
    multiple_chessboard_with_cap(grid, profile, DEFAULT_FACE_CAP)
}

pub fn multiple_chessboard_with_cap(
    grid: &GridSpec,
    profile: &MultiplicityProfile,
    cap: usize,
) -> Result<SimplicialComplex> {
    profile.validate(grid)?;
    let row_constraints = profile
        .row_caps
        .iter()
        .map(|&k| bounded_subsets_complex(grid.cols, k))
        .collect::<Result<Vec<_>>>()?;
    let col_constraints = profile
        .col_caps
        .iter()
        .map(|&l| bounded_subsets_complex(grid.rows, l))
        .collect::<Result<Vec<_>>>()?;
    let pair = ComplexPair::new(row_constraints, col_constraints);
    generalized_chessboard_with_cap(grid, &pair, cap)
}

/// Reflects a complex on the m x n grid onto the n x m grid, swapping the
/// roles of rows and columns.
pub fn transpose_grid_complex(k: &SimplicialComplex, grid: &GridSpec) -> Result<SimplicialComplex> {
    if k.ground_size() != grid.ground_size() {
        return Err(Error::GroundMismatch {
            expected: grid.ground_size(),
            got: k.ground_size(),
        });
    }
    let t = grid.transpose();
    let perm: Vec<usize> = (0..grid.ground_size())
        .map(|v| {
            let (i, j) = grid.cell(v);
            t.vertex(j, i)
        })
        .collect();
    Ok(k.relabel(&perm)?.with_labels(t.labels()))
}
