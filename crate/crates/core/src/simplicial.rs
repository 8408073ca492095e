//! Skeleta of simplices and the face primitives the deleted square is built from.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty face, stored as a strictly increasing list of vertex indices.
///
/// Ordering is lexicographic on the index list, so `[0, 1] < [0, 2] < [1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Face(Vec<usize>);

impl Face {
    /// Builds a face from vertex indices in any order. Duplicates and the empty list are rejected.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidFace("a face needs at least one vertex".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Self(vertices))
    }

    /// Caller guarantees `vertices` is nonempty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices, `dim + 1`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; faces are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Face> for Vec<usize> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// Codimension-one subfaces of `f`. A vertex has none: the empty set is not a face.
pub fn facets_of(f: &Face) -> Vec<Face> {
    if f.len() == 1 {
        return Vec::new();
    }
    // Dropping the last vertex first yields the facets in lexicographic order.
    (0..f.len())
        .rev()
        .map(|skip| {
            let vs = f.0.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            Face::from_sorted(vs)
        })
        .collect()
}

/// True iff the two vertex sets do not intersect.
pub fn are_disjoint(a: &Face, b: &Face) -> bool {
    // Both lists are sorted, so a merge walk suffices.
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() && j < b.0.len() {
        match a.0[i].cmp(&b.0[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// A downward-closed family of faces on vertices `0..n_vertices`, graded by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    faces: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn dim(&self) -> usize {
        self.faces.len() - 1
    }

    /// Faces of dimension `d`, in lexicographic order. Empty beyond the top dimension.
    pub fn faces_of_dim(&self, d: usize) -> &[Face] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    /// All faces, lower dimensions first.
    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces.get(f.dim()).is_some_and(|fs| fs.binary_search(f).is_ok())
    }
}

/// The `k`-skeleton of the simplex on `n_vertices` vertices: every vertex subset of size `1..=k+1`.
pub fn skeleton_complex(n_vertices: usize, k: usize) -> Result<SimplicialComplex> {
    if n_vertices == 0 || k >= n_vertices {
        return Err(Error::SkeletonRange { n_vertices, k });
    }
    let faces = (1..=k + 1)
        .map(|size| (0..n_vertices).combinations(size).map(Face::from_sorted).collect())
        .collect();
    Ok(SimplicialComplex { n_vertices, faces })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[usize]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn skeleton_counts() {
        let tri = skeleton_complex(3, 1).unwrap();
        assert_eq!(tri.faces_of_dim(0).len(), 3);
        assert_eq!(tri.faces_of_dim(1).len(), 3);
        assert_eq!(tri.dim(), 1);
        assert_eq!(skeleton_complex(5, 2).unwrap().face_count(), 25);
        assert_eq!(skeleton_complex(7, 3).unwrap().face_count(), 98);
    }

    #[test]
    fn skeleton_count_matches_binomial_sum() {
        for n in 1..=9 {
            for k in 0..n {
                let expected: usize = (1..=k + 1).map(|i| binomial(n, i)).sum();
                assert_eq!(skeleton_complex(n, k).unwrap().face_count(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn skeleton_rejects_bad_range() {
        assert!(matches!(skeleton_complex(0, 0), Err(Error::SkeletonRange { .. })));
        assert!(matches!(skeleton_complex(3, 3), Err(Error::SkeletonRange { .. })));
    }

    #[test]
    fn skeleton_is_downward_closed() {
        let k = skeleton_complex(6, 3).unwrap();
        for f in k.faces() {
            for g in facets_of(f) {
                assert!(k.contains(&g), "{g} missing below {f}");
            }
        }
    }

    #[test]
    fn facets() {
        assert_eq!(facets_of(&face(&[0, 1, 2])), vec![face(&[0, 1]), face(&[0, 2]), face(&[1, 2])]);
        assert!(facets_of(&face(&[4])).is_empty());
        assert_eq!(facets_of(&face(&[2, 5])), vec![face(&[2]), face(&[5])]);
    }

    #[test]
    fn disjointness() {
        assert!(are_disjoint(&face(&[0, 1]), &face(&[2, 3])));
        assert!(!are_disjoint(&face(&[0, 1]), &face(&[1, 2])));
        assert!(!are_disjoint(&face(&[0]), &face(&[0])));
    }

    #[test]
    fn face_validation() {
        assert!(Face::new(vec![]).is_err());
        assert!(Face::new(vec![1, 1]).is_err());
        assert_eq!(face(&[3, 0, 2]).vertices(), &[0, 2, 3]);
        assert!(serde_json::from_str::<Face>("[2,2]").is_err());
        assert_eq!(face(&[0, 4]).to_string(), "[0,4]");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_face() -> impl Strategy<Value = Face> {
            proptest::collection::btree_set(0usize..12, 1..6)
                .prop_map(|s| Face::new(s.into_iter().collect()).unwrap())
        }

        proptest! {
            #[test]
            fn disjoint_is_symmetric(a in arb_face(), b in arb_face()) {
                prop_assert_eq!(are_disjoint(&a, &b), are_disjoint(&b, &a));
                let naive = a.vertices().iter().all(|v| !b.contains(*v));
                prop_assert_eq!(are_disjoint(&a, &b), naive);
            }

            #[test]
            fn facets_have_one_fewer_vertex(a in arb_face()) {
                let fs = facets_of(&a);
                prop_assert_eq!(fs.len(), if a.len() == 1 { 0 } else { a.len() });
                for f in &fs {
                    prop_assert_eq!(f.len() + 1, a.len());
                    prop_assert!(f.vertices().iter().all(|v| a.contains(*v)));
                }
                prop_assert!(fs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
