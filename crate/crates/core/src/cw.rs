//! Regular CW complexes with mod-2 incidences.

use std::fmt::Display;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::{facets_of, Face, SimplicialComplex};

/// A finite CW complex over GF(2), graded by dimension.
///
/// `boundary[d][j]` lists the indices (into dimension `d - 1`) of the cells in the boundary of
/// cell `j` of dimension `d`, sorted, each with incidence 1. Dimension 0 cells have empty lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwComplex<C> {
    cells: Vec<Vec<C>>,
    boundary: Vec<Vec<Vec<usize>>>,
}

impl<C> CwComplex<C> {
    /// Assembles a complex from per-dimension cells and boundary index lists.
    ///
    /// Repeated indices in a boundary list cancel in pairs. Trailing empty dimensions are
    /// dropped. Fails if the shapes disagree, a 0-cell has a boundary, or an index is out of
    /// range.
    pub fn from_parts(mut cells: Vec<Vec<C>>, mut boundary: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if cells.len() != boundary.len() {
            return Err(Error::InvalidComplex(format!(
                "{} cell dimensions but {} boundary dimensions",
                cells.len(),
                boundary.len()
            )));
        }
        for d in 0..cells.len() {
            if cells[d].len() != boundary[d].len() {
                return Err(Error::InvalidComplex(format!(
                    "dimension {d}: {} cells but {} boundary lists",
                    cells[d].len(),
                    boundary[d].len()
                )));
            }
            for (j, list) in boundary[d].iter_mut().enumerate() {
                if d == 0 && !list.is_empty() {
                    return Err(Error::InvalidComplex(format!("0-cell {j} has a nonempty boundary")));
                }
                if let Some(&bad) = list.iter().find(|&&i| d > 0 && i >= cells[d - 1].len()) {
                    return Err(Error::InvalidComplex(format!(
                        "cell {j} of dimension {d} refers to missing cell {bad} of dimension {}",
                        d - 1
                    )));
                }
                *list = reduce_mod2(std::mem::take(list));
            }
        }
        while cells.last().is_some_and(Vec::is_empty) {
            cells.pop();
            boundary.pop();
        }
        Ok(Self { cells, boundary })
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells of dimension `d`; empty outside `0..=dim`.
    pub fn cells(&self, d: usize) -> &[C] {
        self.cells.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn cell_count(&self, d: usize) -> usize {
        self.cells(d).len()
    }

    /// Cell counts `c_0, ..., c_dim`.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Boundary of cell `j` in dimension `d`, as indices into dimension `d - 1`.
    pub fn boundary_of(&self, d: usize, j: usize) -> &[usize] {
        &self.boundary[d][j]
    }

    pub(crate) fn boundaries(&self, d: usize) -> &[Vec<usize>] {
        self.boundary.get(d).map_or(&[], Vec::as_slice)
    }

    /// Alternating sum of the cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(d, cs)| if d % 2 == 0 { cs.len() as i64 } else { -(cs.len() as i64) })
            .sum()
    }

    /// Checks that the boundary of every boundary vanishes mod 2.
    pub fn boundary_squares_to_zero(&self) -> bool {
        let mut parity = Vec::new();
        for d in 2..self.cells.len() {
            parity.clear();
            parity.resize(self.cells[d - 2].len(), false);
            for list in &self.boundary[d] {
                for &i in list {
                    for &g in &self.boundary[d - 1][i] {
                        parity[g] ^= true;
                    }
                }
                if parity.iter().any(|&p| p) {
                    return false;
                }
            }
        }
        true
    }

    /// For each cell of dimension `d - 1`, the cells of dimension `d` having it in their boundary.
    pub fn cofaces(&self, d: usize) -> Vec<Vec<usize>> {
        let Some(below) = d.checked_sub(1) else {
            return Vec::new();
        };
        let mut out = vec![Vec::new(); self.cell_count(below)];
        for (j, list) in self.boundaries(d).iter().enumerate() {
            for &i in list {
                out[i].push(j);
            }
        }
        out
    }

    /// Relabels every cell, keeping the incidence structure.
    pub fn map_cells<D>(&self, mut f: impl FnMut(&C) -> D) -> CwComplex<D> {
        CwComplex {
            cells: self.cells.iter().map(|cs| cs.iter().map(&mut f).collect()).collect(),
            boundary: self.boundary.clone(),
        }
    }
}

impl<C: PartialEq> CwComplex<C> {
    /// Dimension and index of a cell, by linear search.
    pub fn position(&self, cell: &C) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .enumerate()
            .find_map(|(d, cs)| cs.iter().position(|c| c == cell).map(|j| (d, j)))
    }
}

/// One cell of a [`ComplexListing`].
#[derive(Clone, Debug, Serialize)]
pub struct CellListing {
    pub dim: usize,
    pub label: String,
    pub boundary: Vec<String>,
}

/// Debug export of a complex: every cell with the labels of its boundary cells.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexListing {
    pub dim: Option<usize>,
    pub cell_counts: Vec<usize>,
    pub cells: Vec<CellListing>,
}

impl<C: Display> CwComplex<C> {
    pub fn to_listing(&self) -> ComplexListing {
        let cells = self
            .cells
            .iter()
            .enumerate()
            .flat_map(|(d, cs)| {
                cs.iter().enumerate().map(move |(j, c)| CellListing {
                    dim: d,
                    label: c.to_string(),
                    boundary: self.boundary[d][j].iter().map(|&i| self.cells[d - 1][i].to_string()).collect(),
                })
            })
            .collect();
        ComplexListing { dim: self.dim(), cell_counts: self.cell_counts(), cells }
    }
}

/// The simplicial chain complex of `k` viewed as a CW complex.
pub fn from_simplicial(k: &SimplicialComplex) -> CwComplex<Face> {
    let cells: Vec<Vec<Face>> = (0..=k.dim()).map(|d| k.faces_of_dim(d).to_vec()).collect();
    let boundary = cells
        .iter()
        .enumerate()
        .map(|(d, fs)| {
            fs.iter()
                .map(|f| {
                    if d == 0 {
                        return Vec::new();
                    }
                    let below = &cells[d - 1];
                    let mut idx: Vec<usize> = facets_of(f)
                        .iter()
                        .map(|g| below.binary_search(g).expect("skeleton is downward closed"))
                        .collect();
                    idx.sort_unstable();
                    idx
                })
                .collect()
        })
        .collect();
    CwComplex { cells, boundary }
}

/// Sorts and cancels repeated entries in pairs.
pub(crate) fn reduce_mod2(mut list: Vec<usize>) -> Vec<usize> {
    list.sort_unstable();
    let mut out = Vec::with_capacity(list.len());
    for i in list {
        if out.last() == Some(&i) {
            out.pop();
        } else {
            out.push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::skeleton_complex;

    #[test]
    fn reduce_cancels_pairs() {
        assert_eq!(reduce_mod2(vec![3, 1, 3, 2, 1, 1]), vec![1, 2]);
        assert!(reduce_mod2(vec![4, 4]).is_empty());
    }

    #[test]
    fn from_parts_validates() {
        let bad = CwComplex::from_parts(vec![vec!['a'], vec!['e']], vec![vec![vec![]], vec![vec![1]]]);
        assert!(matches!(bad, Err(Error::InvalidComplex(_))));
        let bad0 = CwComplex::from_parts(vec![vec!['a']], vec![vec![vec![0]]]);
        assert!(bad0.is_err());
        let shape = CwComplex::<char>::from_parts(vec![vec!['a']], vec![]);
        assert!(shape.is_err());
    }

    #[test]
    fn from_parts_drops_empty_top() {
        let c = CwComplex::from_parts(vec![vec!['a'], vec![]], vec![vec![vec![]], vec![]]).unwrap();
        assert_eq!(c.dim(), Some(0));
    }

    #[test]
    fn simplicial_boundary_of_triangle() {
        let k = skeleton_complex(3, 2).unwrap();
        let c = from_simplicial(&k);
        assert_eq!(c.cell_counts(), vec![3, 3, 1]);
        assert_eq!(c.boundary_of(2, 0), &[0, 1, 2]);
        assert!(c.boundary_squares_to_zero());
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn detects_nonzero_boundary_square() {
        // A 2-cell glued along a single edge of a path: not a chain complex.
        let c = CwComplex::from_parts(
            vec![vec![0, 1], vec![0], vec![0]],
            vec![vec![vec![], vec![]], vec![vec![0, 1]], vec![vec![0]]],
        )
        .unwrap();
        assert!(!c.boundary_squares_to_zero());
    }

    #[test]
    fn cofaces_invert_boundary() {
        let c = from_simplicial(&skeleton_complex(4, 2).unwrap());
        let co = c.cofaces(2);
        assert_eq!(co.len(), 6);
        assert!(co.iter().all(|l| l.len() == 2));
    }

    #[test]
    fn listing_labels() {
        let c = from_simplicial(&skeleton_complex(2, 1).unwrap());
        let l = c.to_listing();
        assert_eq!(l.cells.len(), 3);
        assert_eq!(l.cells[2].label, "[0,1]");
        assert_eq!(l.cells[2].boundary, vec!["[0]", "[1]"]);
    }
}
