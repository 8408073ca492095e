//! The deleted square of a simplicial complex, its swap involution and its orbit complex.
//!
//! Cells of the deleted square are ordered pairs `(sigma, tau)` of disjoint nonempty faces. The
//! boundary of `sigma x tau` is `d(sigma) x tau + sigma x d(tau)`, every incidence being 1 mod 2.
//! Within each dimension cells are indexed in lexicographic order of `(sigma, tau)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::cw::{reduce_mod2, CwComplex};
use crate::error::{Error, Result};
use crate::simplicial::{are_disjoint, facets_of, Face, SimplicialComplex};

/// A product cell `sigma x tau` of two disjoint faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProductCell {
    pub sigma: Face,
    pub tau: Face,
}

impl ProductCell {
    pub fn new(sigma: Face, tau: Face) -> Result<Self> {
        if !are_disjoint(&sigma, &tau) {
            return Err(Error::InvalidFace(format!("{sigma} and {tau} are not disjoint")));
        }
        Ok(Self { sigma, tau })
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim() + self.tau.dim()
    }

    /// Vertex counts `(|sigma|, |tau|)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.sigma.len(), self.tau.len())
    }

    pub fn boundary_cells(&self) -> Vec<ProductCell> {
        let left = facets_of(&self.sigma)
            .into_iter()
            .map(|s| ProductCell { sigma: s, tau: self.tau.clone() });
        let right = facets_of(&self.tau)
            .into_iter()
            .map(|t| ProductCell { sigma: self.sigma.clone(), tau: t });
        left.chain(right).collect()
    }
}

impl fmt::Display for ProductCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.sigma, self.tau)
    }
}

/// The free involution `(sigma, tau) -> (tau, sigma)`.
pub fn swap(c: &ProductCell) -> ProductCell {
    ProductCell { sigma: c.tau.clone(), tau: c.sigma.clone() }
}

/// An unordered pair of disjoint faces, kept with the lexicographically smaller face first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitCell {
    pub first: Face,
    pub second: Face,
}

impl OrbitCell {
    pub fn of(c: &ProductCell) -> Self {
        if c.sigma < c.tau {
            Self { first: c.sigma.clone(), second: c.tau.clone() }
        } else {
            Self { first: c.tau.clone(), second: c.sigma.clone() }
        }
    }

    /// The ordered representative whose first face is the smaller one.
    pub fn representative(&self) -> ProductCell {
        ProductCell { sigma: self.first.clone(), tau: self.second.clone() }
    }

    pub fn dim(&self) -> usize {
        self.first.dim() + self.second.dim()
    }

    /// Vertex counts of the two faces, larger first.
    pub fn shape(&self) -> (usize, usize) {
        let (a, b) = (self.first.len(), self.second.len());
        (a.max(b), a.min(b))
    }
}

impl fmt::Display for OrbitCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.first, self.second)
    }
}

/// Builds the deleted square of `k` as a regular CW complex.
pub fn deleted_square(k: &SimplicialComplex) -> CwComplex<ProductCell> {
    let faces: Vec<&Face> = k.faces().collect();
    let top = 2 * k.dim();
    let mut cells: Vec<Vec<ProductCell>> = vec![Vec::new(); top + 1];
    for sigma in &faces {
        for tau in &faces {
            if are_disjoint(sigma, tau) {
                let c = ProductCell { sigma: (*sigma).clone(), tau: (*tau).clone() };
                cells[c.dim()].push(c);
            }
        }
    }
    for cs in &mut cells {
        cs.sort_unstable();
    }
    let index: Vec<HashMap<&ProductCell, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c, i)).collect()).collect();
    let boundary = cells
        .iter()
        .enumerate()
        .map(|(d, cs)| {
            cs.iter()
                .map(|c| {
                    if d == 0 {
                        return Vec::new();
                    }
                    let mut idx: Vec<usize> = c
                        .boundary_cells()
                        .iter()
                        .map(|b| index[d - 1][b])
                        .collect();
                    idx.sort_unstable();
                    idx
                })
                .collect()
        })
        .collect();
    drop(index);
    CwComplex::from_parts(cells, boundary).expect("deleted square is well formed")
}

/// Quotient of a deleted square by the swap involution.
///
/// Fails if the cell set of `d` is not closed under [`swap`].
pub fn orbit_complex(d: &CwComplex<ProductCell>) -> Result<CwComplex<OrbitCell>> {
    let Some(top) = d.dim() else {
        return CwComplex::from_parts(Vec::new(), Vec::new());
    };
    let mut cells: Vec<Vec<OrbitCell>> = Vec::with_capacity(top + 1);
    let mut to_orbit: Vec<Vec<usize>> = Vec::with_capacity(top + 1);
    for dim in 0..=top {
        let cs = d.cells(dim);
        let mut orbits: Vec<OrbitCell> = cs.iter().filter(|c| c.sigma < c.tau).map(OrbitCell::of).collect();
        orbits.sort_unstable();
        if 2 * orbits.len() != cs.len() {
            return Err(Error::InvalidComplex(format!(
                "dimension {dim} is not closed under swap ({} cells, {} orbits)",
                cs.len(),
                orbits.len()
            )));
        }
        let lookup: HashMap<&OrbitCell, usize> = orbits.iter().enumerate().map(|(i, o)| (o, i)).collect();
        let map = cs
            .iter()
            .map(|c| {
                lookup.get(&OrbitCell::of(c)).copied().ok_or_else(|| {
                    Error::InvalidComplex(format!("swap partner of {c} is missing"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        drop(lookup);
        to_orbit.push(map);
        cells.push(orbits);
    }
    let mut boundary: Vec<Vec<Vec<usize>>> = Vec::with_capacity(top + 1);
    for dim in 0..=top {
        let reps = d.cells(dim);
        let mut lists = vec![Vec::new(); cells[dim].len()];
        if dim > 0 {
            for (j, c) in reps.iter().enumerate() {
                if c.sigma < c.tau {
                    let o = to_orbit[dim][j];
                    let image = d.boundary_of(dim, j).iter().map(|&i| to_orbit[dim - 1][i]).collect();
                    lists[o] = reduce_mod2(image);
                }
            }
        }
        boundary.push(lists);
    }
    CwComplex::from_parts(cells, boundary)
}
