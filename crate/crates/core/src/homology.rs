//! Mod-2 cellular homology and free-facet analysis.

use serde::Serialize;

use crate::cw::CwComplex;
use crate::error::{Error, Result};

const WORD: usize = 64;

/// A dense matrix over GF(2) with rows packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        Self { rows, cols, stride, bits: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.bits[r * self.stride + c / WORD] >> (c % WORD) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        let w = &mut self.bits[r * self.stride + c / WORD];
        let mask = 1u64 << (c % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.bits[r * self.stride + c / WORD] ^= 1u64 << (c % WORD);
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Column indices of the nonzero entries of row `r`.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[r * self.stride..(r + 1) * self.stride];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Number of ones in column `c`.
    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in self.row_ones(r) {
                let src = &rhs.bits[k * rhs.stride..(k + 1) * rhs.stride];
                let dst = &mut out.bits[r * out.stride..(r + 1) * out.stride];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }
}

/// Rank over GF(2) by forward elimination on packed rows.
///
/// Rows are processed in order; each is reduced against the pivot rows found so far, always
/// pivoting on its lowest nonzero column.
pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    let stride = m.stride;
    // pivot_of[c] = index into `pivots` of the reduced row whose leading column is c.
    let mut pivot_of: Vec<Option<usize>> = vec![None; m.cols];
    let mut pivots: Vec<Vec<u64>> = Vec::new();
    let mut row = vec![0u64; stride];
    for r in 0..m.rows {
        row.copy_from_slice(&m.bits[r * stride..(r + 1) * stride]);
        let mut start = 0;
        while let Some((wi, w)) =
            row[start..].iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| (i + start, w))
        {
            start = wi;
            let lead = wi * WORD + w.trailing_zeros() as usize;
            match pivot_of[lead] {
                Some(p) => {
                    for (d, s) in row[wi..].iter_mut().zip(&pivots[p][wi..]) {
                        *d ^= s;
                    }
                }
                None => {
                    pivot_of[lead] = Some(pivots.len());
                    pivots.push(row.clone());
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// The matrix of the boundary map from dimension `d` to `d - 1`.
///
/// Entry `(i, j)` is 1 iff cell `i` of dimension `d - 1` lies in the boundary of cell `j` of
/// dimension `d`.
pub fn boundary_matrix<C>(c: &CwComplex<C>, d: usize) -> Result<Gf2Matrix> {
    let top = c.dim().unwrap_or(0);
    if d == 0 || d > top {
        return Err(Error::BoundaryDimension { d, top });
    }
    let mut m = Gf2Matrix::zeros(c.cell_count(d - 1), c.cell_count(d));
    for (j, list) in c.boundaries(d).iter().enumerate() {
        for &i in list {
            m.flip(i, j);
        }
    }
    Ok(m)
}

/// Rank of the boundary map out of dimension `d`, built directly in transposed form (one packed
/// row per `d`-cell), which has the same rank.
fn boundary_rank<C>(c: &CwComplex<C>, d: usize) -> usize {
    if d == 0 || c.dim().is_none_or(|top| d > top) {
        return 0;
    }
    let mut m = Gf2Matrix::zeros(c.cell_count(d), c.cell_count(d - 1));
    for (j, list) in c.boundaries(d).iter().enumerate() {
        for &i in list {
            m.flip(j, i);
        }
    }
    gf2_rank(&m)
}

/// Mod-2 Betti numbers with the matching Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub betti: Vec<usize>,
    pub euler: i64,
}

impl BettiProfile {
    pub fn top(&self) -> usize {
        self.betti.last().copied().unwrap_or(0)
    }

    /// Alternating sum of the Betti numbers.
    pub fn betti_euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// `beta_d = c_d - rank d_d - rank d_{d+1}` for every dimension of `c`.
pub fn betti_profile<C: Sync>(c: &CwComplex<C>) -> BettiProfile {
    let Some(top) = c.dim() else {
        return BettiProfile { betti: Vec::new(), euler: 0 };
    };
    // ranks[d] = rank of the boundary map out of dimension d; ranks[0] = ranks[top + 1] = 0.
    let ranks: Vec<usize> = {
        use rayon::prelude::*;
        (0..=top + 1).into_par_iter().map(|d| boundary_rank(c, d)).collect()
    };
    let betti = (0..=top).map(|d| c.cell_count(d) - ranks[d] - ranks[d + 1]).collect();
    BettiProfile { betti, euler: c.euler_characteristic() }
}

/// True iff the top boundary map is injective, i.e. top-dimensional homology is zero.
///
/// An empty complex and a 0-dimensional one count as vacuous passes.
pub fn top_homology_vanishes<C>(c: &CwComplex<C>) -> bool {
    match c.dim() {
        None | Some(0) => true,
        Some(top) => boundary_rank(c, top) == c.cell_count(top),
    }
}

/// A top cell and those of its facets that lie in no other top cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopCellFacets<T> {
    pub cell: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<T>,
    pub free_facets: Vec<usize>,
}

/// A coface entry of a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coface<T> {
    pub cell: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<T>,
}

/// A facet of some top cell, with all of its top-dimensional cofaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCofaces<T> {
    pub facet: usize,
    pub label: String,
    pub cofaces: Vec<Coface<T>>,
}

/// Coface counts of codimension-one cells against the top-dimensional cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeFacetReport<T> {
    pub top_dim: usize,
    pub top_cells: Vec<TopCellFacets<T>>,
    pub facets: Vec<FacetCofaces<T>>,
}

impl<T> FreeFacetReport<T> {
    pub fn cells_with_free_facet(&self) -> usize {
        self.top_cells.iter().filter(|c| !c.free_facets.is_empty()).count()
    }

    pub fn every_top_cell_has_free_facet(&self) -> bool {
        self.top_cells.iter().all(|c| !c.free_facets.is_empty())
    }

    pub fn no_top_cell_has_free_facet(&self) -> bool {
        self.top_cells.iter().all(|c| c.free_facets.is_empty())
    }

    /// Cofaces of the facet with index `facet`, if it bounds any top cell.
    pub fn cofaces_of(&self, facet: usize) -> Option<&[Coface<T>]> {
        self.facets
            .binary_search_by_key(&facet, |f| f.facet)
            .ok()
            .map(|i| self.facets[i].cofaces.as_slice())
    }
}

/// Free-facet structure of the top-dimensional cells of `c`.
///
/// `tagger`, when given, labels every top cell (for deleted squares, typically by face shape).
pub fn free_facet_report<C, T>(
    c: &CwComplex<C>,
    tagger: Option<&dyn Fn(&C) -> T>,
) -> Result<FreeFacetReport<T>>
where
    C: std::fmt::Display,
    T: Clone,
{
    let top = match c.dim() {
        Some(top) if top >= 1 => top,
        other => {
            return Err(Error::InvalidComplex(format!(
                "free facet analysis needs dimension >= 1, got {other:?}"
            )))
        }
    };
    let tops = c.cells(top);
    let tags: Vec<Option<T>> = tops.iter().map(|cell| tagger.map(|f| f(cell))).collect();
    let cofaces = c.cofaces(top);

    let top_cells = tops
        .iter()
        .enumerate()
        .map(|(j, cell)| TopCellFacets {
            cell: j,
            label: cell.to_string(),
            tag: tags[j].clone(),
            free_facets: c.boundary_of(top, j).iter().copied().filter(|&f| cofaces[f].len() == 1).collect(),
        })
        .collect();

    let below = c.cells(top - 1);
    let facets = cofaces
        .iter()
        .enumerate()
        .filter(|(_, co)| !co.is_empty())
        .map(|(i, co)| FacetCofaces {
            facet: i,
            label: below[i].to_string(),
            cofaces: co.iter().map(|&j| Coface { cell: j, tag: tags[j].clone() }).collect(),
        })
        .collect();

    Ok(FreeFacetReport { top_dim: top, top_cells, facets })
}
