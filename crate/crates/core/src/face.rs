use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on ground-set size imposed by the bitset representation.
pub const MAX_GROUND: usize = 128;

/// A face of a simplicial complex: a finite set of vertices stored as a
/// 128-bit mask. Vertices are 0-based internally and rendered 1-based.
///
/// The empty face is a valid `Face` of dimension -1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Face {
        Face(bits)
    }

    /// Builds a face from 0-based vertex indices. Duplicates collapse.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Face> {
        let mut bits = 0u128;
        for v in vertices {
            if v >= MAX_GROUND {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    ground: MAX_GROUND,
                });
            }
            bits |= 1u128 << v;
        }
        Ok(Face(bits))
    }

    pub fn singleton(v: usize) -> Face {
        debug_assert!(v < MAX_GROUND);
        Face(1u128 << v)
    }

    /// The face {0, 1, ..., len-1}.
    pub fn prefix(len: usize) -> Face {
        debug_assert!(len <= MAX_GROUND);
        if len == 0 {
            Face(0)
        } else if len == MAX_GROUND {
            Face(u128::MAX)
        } else {
            Face((1u128 << len) - 1)
        }
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of vertices.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension: one less than the vertex count; -1 for the empty face.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_GROUND && self.0 & (1u128 << v) != 0
    }

    pub fn with(self, v: usize) -> Face {
        debug_assert!(v < MAX_GROUND);
        Face(self.0 | (1u128 << v))
    }

    pub fn without(self, v: usize) -> Face {
        debug_assert!(v < MAX_GROUND);
        Face(self.0 & !(1u128 << v))
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside the ground set {0, ..., ground-1}.
    pub fn complement_in(self, ground: usize) -> Face {
        Face(Face::prefix(ground).0 & !self.0)
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    /// 0-based vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All codimension-1 subfaces (one vertex removed each).
    pub fn boundary_faces(self) -> impl Iterator<Item = Face> {
        let whole = self;
        self.vertices().map(move |v| whole.without(v))
    }

    /// Every subset of this face, the face itself and the empty face included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 {
                None
            } else {
                Some((cur - 1) & full)
            };
            Some(Face(cur))
        })
    }

    /// Position of vertex `v` inside the sorted vertex sequence.
    pub fn index_of(self, v: usize) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        let below = self.0 & ((1u128 << v) - 1);
        Some(below.count_ones() as usize)
    }
}

/// Faces order by dimension first, then by bit pattern. This keeps the
/// face poset layered when iterating sorted collections.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_face_has_dimension_minus_one() {
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(Face::EMPTY.len(), 0);
        assert!(Face::EMPTY.is_empty());
    }

    #[test]
    fn vertices_round_trip() {
        let f = Face::from_vertices([4, 0, 2]).unwrap();
        assert_eq!(f.vertices().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(f.len(), 3);
        assert_eq!(f.dim(), 2);
        assert_eq!(f.min_vertex(), Some(0));
        assert_eq!(f.max_vertex(), Some(4));
    }

    #[test]
    fn rejects_vertex_over_bit_width() {
        assert!(Face::from_vertices([128]).is_err());
        assert!(Face::from_vertices([127]).is_ok());
    }

    #[test]
    fn subsets_enumerates_full_powerset() {
        let f = Face::from_vertices([0, 1, 3]).unwrap();
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&Face::EMPTY));
        assert!(subs.contains(&f));
    }

    #[test]
    fn boundary_faces_drop_one_vertex() {
        let f = Face::from_vertices([1, 2, 5]).unwrap();
        let bd: Vec<Face> = f.boundary_faces().collect();
        assert_eq!(bd.len(), 3);
        for b in bd {
            assert_eq!(b.len(), 2);
            assert!(b.is_subset_of(f));
        }
    }

    #[test]
    fn display_renders_one_based() {
        let f = Face::from_vertices([0, 2]).unwrap();
        assert_eq!(f.to_string(), "{1,3}");
        assert_eq!(Face::EMPTY.to_string(), "{}");
    }

    #[test]
    fn order_is_by_dimension_then_bits() {
        let a = Face::from_vertices([5]).unwrap();
        let b = Face::from_vertices([0, 1]).unwrap();
        assert!(a < b);
    }

    #[test]
    fn index_of_counts_smaller_vertices() {
        let f = Face::from_vertices([1, 3, 6]).unwrap();
        assert_eq!(f.index_of(1), Some(0));
        assert_eq!(f.index_of(3), Some(1));
        assert_eq!(f.index_of(6), Some(2));
        assert_eq!(f.index_of(2), None);
    }
}
