//! Minimal-multiplicity tables and the named check suites run by the CLI.
//!
//! Every [`TheoremCheck`] carries a list of [`Assertion`]s (expected vs. observed values) and its
//! verdict is exactly "all assertions pass", so it can be recomputed from the JSON report.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::covers::{self, Cover, SampleReport, DEFAULT_EPSILON};
use crate::cw::CwComplex;
use crate::deleted_square::{deleted_square, orbit_complex, OrbitCell, ProductCell};
use crate::error::{Error, Result};
use crate::homology::{betti_profile, free_facet_report, top_homology_vanishes, BettiProfile, FreeFacetReport};
use crate::simplicial::{skeleton_complex, Face};

pub const DEFAULT_SAMPLES: usize = 100_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_LIFT_DIM: usize = 4;
pub const DEFAULT_TABLE_MAX: usize = 10;

/// Largest `k` run without `allow_large`, and the hard ceiling, for the two homology suites.
const ODD_K_DEFAULT_MAX: usize = 4;
const ODD_K_LIMIT: usize = 5;
const EVEN_K_DEFAULT_MAX: usize = 3;
const EVEN_K_LIMIT: usize = 4;

/// Minimal multiplicity of an antipodal-free open cover of `S^h`.
pub fn q_of(h: usize) -> usize {
    if h == 0 {
        1
    } else {
        h / 2 + 2
    }
}

/// Minimal number of sets in an antipodal-free open cover of `S^h` of multiplicity `q_of(h)`.
pub fn min_vertices(h: usize) -> Result<usize> {
    match h {
        0 => Err(Error::InvalidParameter("min_vertices is defined for h >= 1".into())),
        1 => Ok(3),
        2 => Ok(4),
        _ => Ok(h + 3),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QEntry {
    pub h: usize,
    pub q: usize,
    /// Absent for `h = 0`.
    pub min_vertices: Option<usize>,
}

pub fn q_entry(h: usize) -> QEntry {
    QEntry { h, q: q_of(h), min_vertices: min_vertices(h).ok() }
}

pub fn q_table(h_max: usize) -> Vec<QEntry> {
    (0..=h_max).map(q_entry).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(Error::InvalidParameter(format!("parity must be odd or even, got `{other}`"))),
        }
    }
}

/// The check suites understood by [`run_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    /// Odd spheres: top homology of the deleted square of the k-skeleton of the 2k-simplex.
    OddCertificate,
    /// Even spheres: the same for the (k+1)-skeleton of the (2k+1)-simplex.
    EvenCertificate,
    /// The k = 1 cases where the free-facet argument breaks down.
    LowDimensionExceptions,
    /// Iterated lifting from the three-cap cover of the circle.
    LiftChain,
    /// Inscribed-simplex cap cover of one sphere.
    CapCover,
    /// The Q(h) / minimal-cardinality table.
    QTable,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::OddCertificate,
        CheckId::EvenCertificate,
        CheckId::LowDimensionExceptions,
        CheckId::LiftChain,
        CheckId::CapCover,
        CheckId::QTable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::OddCertificate => "thm4.3-odd",
            CheckId::EvenCertificate => "thm4.3-even",
            CheckId::LowDimensionExceptions => "remark4.4",
            CheckId::LiftChain => "lemma4.1-lift",
            CheckId::CapCover => "cap-cover",
            CheckId::QTable => "q-table",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parameters of a check. Unset fields take per-check defaults; the report records the values
/// actually used.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<Parity>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub allow_large: bool,
}

/// One expected-vs-observed comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub assertions: Vec<Assertion>,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub parameters: CheckParams,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

impl TheoremCheck {
    /// The verdict implied by the evidence: pass iff every assertion passed.
    pub fn recomputed_verdict(&self) -> Verdict {
        if self.evidence.assertions.iter().all(|a| a.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed_assertions(&self) -> impl Iterator<Item = &Assertion> {
        self.evidence.assertions.iter().filter(|a| !a.pass)
    }
}

#[derive(Default)]
struct Assertions(Vec<Assertion>);

impl Assertions {
    fn eq(&mut self, name: impl Into<String>, expected: impl Serialize, observed: impl Serialize) {
        let expected = serde_json::to_value(expected).expect("serializable");
        let observed = serde_json::to_value(observed).expect("serializable");
        let pass = expected == observed;
        self.0.push(Assertion { name: name.into(), expected, observed, pass });
    }

    fn at_most(&mut self, name: impl Into<String>, bound: usize, observed: usize) {
        self.0.push(Assertion {
            name: name.into(),
            expected: json!({ "at_most": bound }),
            observed: json!(observed),
            pass: observed <= bound,
        });
    }

    fn finish(self, id: CheckId, parameters: CheckParams, details: Value) -> TheoremCheck {
        let mut check = TheoremCheck {
            id: id.as_str().to_string(),
            parameters,
            verdict: Verdict::Fail,
            evidence: Evidence { assertions: self.0, details },
        };
        check.verdict = check.recomputed_verdict();
        check
    }
}

/// Cell counts, Betti numbers and free-facet tallies of one complex.
#[derive(Clone, Debug, Serialize)]
struct ComplexSummary {
    dim: Option<usize>,
    cell_counts: Vec<usize>,
    betti: BettiProfile,
    boundary_squares_to_zero: bool,
    top_homology_vanishes: bool,
}

fn summarize<C: Sync>(c: &CwComplex<C>) -> ComplexSummary {
    ComplexSummary {
        dim: c.dim(),
        cell_counts: c.cell_counts(),
        betti: betti_profile(c),
        boundary_squares_to_zero: c.boundary_squares_to_zero(),
        top_homology_vanishes: top_homology_vanishes(c),
    }
}

fn sanity(a: &mut Assertions, prefix: &str, s: &ComplexSummary) {
    a.eq(format!("{prefix}.boundary_squares_to_zero"), true, s.boundary_squares_to_zero);
    a.eq(format!("{prefix}.euler_identity"), s.betti.euler, s.betti.betti_euler());
}

fn face_range(lo: usize, hi: usize) -> Face {
    Face::new((lo..=hi).collect()).expect("nonempty range")
}

/// True iff `facet` is a free facet of the top cell `cell`.
fn has_free_facet<C: PartialEq, T>(c: &CwComplex<C>, report: &FreeFacetReport<T>, cell: &C, facet: &C) -> bool {
    let top = report.top_dim;
    let (Some((dc, jc)), Some((df, jf))) = (c.position(cell), c.position(facet)) else {
        return false;
    };
    dc == top && df + 1 == top && report.top_cells[jc].free_facets.contains(&jf)
}

fn check_k(k: Option<usize>, default: usize, default_max: usize, limit: usize, allow_large: bool, what: &str) -> Result<usize> {
    let k = k.unwrap_or(default);
    if k == 0 {
        return Err(Error::InvalidParameter(format!("{what} needs k >= 1")));
    }
    if k > limit {
        return Err(Error::InfeasibleSize(format!(
            "{what} with k = {k} exceeds the supported maximum k = {limit}; cell counts grow combinatorially"
        )));
    }
    if k > default_max && !allow_large {
        return Err(Error::InfeasibleSize(format!(
            "{what} with k = {k} is large (default maximum k = {default_max}); pass --allow-large to run it"
        )));
    }
    Ok(k)
}

/// Deleted square of the k-skeleton of the 2k-simplex; dimension 2k - 1.
fn odd_certificate(params: &CheckParams) -> Result<TheoremCheck> {
    let k = check_k(params.k, 2, ODD_K_DEFAULT_MAX, ODD_K_LIMIT, params.allow_large, "thm4.3-odd")?;
    let skeleton = skeleton_complex(2 * k + 1, k)?;
    let d = deleted_square(&skeleton);
    let o = orbit_complex(&d)?;
    let (sd, so) = (summarize(&d), summarize(&o));
    let rd = free_facet_report::<_, ()>(&d, None)?;
    let ro = free_facet_report::<_, ()>(&o, None)?;

    let mut a = Assertions::default();
    a.eq("deleted_square.dim", 2 * k - 1, sd.dim);
    a.eq("orbit.dim", 2 * k - 1, so.dim);
    sanity(&mut a, "deleted_square", &sd);
    sanity(&mut a, "orbit", &so);
    a.eq("orbit.half_cell_counts", sd.cell_counts.iter().map(|c| c / 2).collect::<Vec<_>>(), &so.cell_counts);
    let expect_vanishing = k >= 2;
    a.eq("deleted_square.top_homology_vanishes", expect_vanishing, sd.top_homology_vanishes);
    a.eq("orbit.top_homology_vanishes", expect_vanishing, so.top_homology_vanishes);
    let (nd, no) = (rd.top_cells.len(), ro.top_cells.len());
    a.eq(
        "deleted_square.top_cells_with_free_facet",
        if expect_vanishing { nd } else { 0 },
        rd.cells_with_free_facet(),
    );
    a.eq("orbit.top_cells_with_free_facet", if expect_vanishing { no } else { 0 }, ro.cells_with_free_facet());
    if k >= 2 {
        // (v_0..v_k) x (v_{k+1}..v_{2k}) is free along (v_0..v_k) x (v_{k+1}..v_{2k-1}).
        let cell = ProductCell { sigma: face_range(0, k), tau: face_range(k + 1, 2 * k) };
        let facet = ProductCell { sigma: face_range(0, k), tau: face_range(k + 1, 2 * k - 1) };
        a.eq(format!("deleted_square.free_facet[{facet} < {cell}]"), true, has_free_facet(&d, &rd, &cell, &facet));
        let (oc, of) = (OrbitCell::of(&cell), OrbitCell::of(&facet));
        a.eq(format!("orbit.free_facet[{of} < {oc}]"), true, has_free_facet(&o, &ro, &oc, &of));
    }
    let details = json!({
        "skeleton": { "n_vertices": 2 * k + 1, "k": k, "faces": skeleton.face_count() },
        "deleted_square": sd,
        "orbit": so,
        "top_cells": { "deleted_square": nd, "orbit": no },
    });
    let parameters = CheckParams { k: Some(k), allow_large: params.allow_large, ..Default::default() };
    Ok(a.finish(CheckId::OddCertificate, parameters, details))
}

/// 1 for shape (k+1, k+1), 2 for (k+2, k) in either order, 0 otherwise.
fn even_top_type(shape: (usize, usize), k: usize) -> u8 {
    let (big, small) = (shape.0.max(shape.1), shape.0.min(shape.1));
    if big == k + 1 && small == k + 1 {
        1
    } else if big == k + 2 && small == k {
        2
    } else {
        0
    }
}

#[derive(Clone, Debug, Default, Serialize)]
struct TypeTally {
    type1: usize,
    type2: usize,
    untyped: usize,
    type1_with_free_facet: usize,
    type2_with_free_facet: usize,
    /// Facets of type-1 cells not having exactly two top cofaces with the other one of type 2.
    type1_facet_violations: usize,
}

fn tally<T: Copy + Into<u8>>(report: &FreeFacetReport<T>) -> TypeTally {
    let mut t = TypeTally::default();
    for cell in &report.top_cells {
        let free = !cell.free_facets.is_empty();
        match cell.tag.map(Into::into) {
            Some(1) => {
                t.type1 += 1;
                t.type1_with_free_facet += usize::from(free);
            }
            Some(2) => {
                t.type2 += 1;
                t.type2_with_free_facet += usize::from(free);
            }
            _ => t.untyped += 1,
        }
    }
    t.type1_facet_violations = report
        .top_cells
        .iter()
        .filter(|c| c.tag.map(Into::into) == Some(1))
        .map(|c| {
            report
                .facets
                .iter()
                .filter(|f| f.cofaces.iter().any(|co| co.cell == c.cell))
                .filter(|f| {
                    let others: Vec<_> = f.cofaces.iter().filter(|co| co.cell != c.cell).collect();
                    !(f.cofaces.len() == 2 && others.len() == 1 && others[0].tag.map(Into::into) == Some(2))
                })
                .count()
        })
        .sum();
    t
}

/// Deleted square of the (k+1)-skeleton of the (2k+1)-simplex; dimension 2k.
fn even_certificate(params: &CheckParams) -> Result<TheoremCheck> {
    let k = check_k(params.k, 2, EVEN_K_DEFAULT_MAX, EVEN_K_LIMIT, params.allow_large, "thm4.3-even")?;
    let skeleton = skeleton_complex(2 * k + 2, k + 1)?;
    let d = deleted_square(&skeleton);
    let o = orbit_complex(&d)?;
    let (sd, so) = (summarize(&d), summarize(&o));
    let tag_d = |c: &ProductCell| even_top_type(c.shape(), k);
    let tag_o = |c: &OrbitCell| even_top_type(c.shape(), k);
    let rd = free_facet_report(&d, Some(&tag_d))?;
    let ro = free_facet_report(&o, Some(&tag_o))?;
    let (td, to) = (tally(&rd), tally(&ro));

    let mut a = Assertions::default();
    a.eq("deleted_square.dim", 2 * k, sd.dim);
    a.eq("orbit.dim", 2 * k, so.dim);
    sanity(&mut a, "deleted_square", &sd);
    sanity(&mut a, "orbit", &so);
    a.eq("orbit.half_cell_counts", sd.cell_counts.iter().map(|c| c / 2).collect::<Vec<_>>(), &so.cell_counts);
    a.eq("deleted_square.untyped_top_cells", 0, td.untyped);
    a.eq("orbit.untyped_top_cells", 0, to.untyped);
    a.eq("deleted_square.type1_facet_violations", 0, td.type1_facet_violations);
    a.eq("orbit.type1_facet_violations", 0, to.type1_facet_violations);
    a.eq("deleted_square.type1_with_free_facet", 0, td.type1_with_free_facet);
    a.eq("orbit.type1_with_free_facet", 0, to.type1_with_free_facet);
    let expect_vanishing = k >= 2;
    a.eq("deleted_square.type2_with_free_facet", if expect_vanishing { td.type2 } else { 0 }, td.type2_with_free_facet);
    a.eq("orbit.type2_with_free_facet", if expect_vanishing { to.type2 } else { 0 }, to.type2_with_free_facet);
    a.eq("orbit.top_homology_vanishes", expect_vanishing, so.top_homology_vanishes);
    a.eq("deleted_square.top_homology_vanishes", expect_vanishing, sd.top_homology_vanishes);
    if k >= 2 {
        // (v_0..v_{k+1}) x (v_{k+2}..v_{2k+1}) is free along (v_0..v_{k+1}) x (v_{k+2}..v_{2k}).
        let cell = ProductCell { sigma: face_range(0, k + 1), tau: face_range(k + 2, 2 * k + 1) };
        let facet = ProductCell { sigma: face_range(0, k + 1), tau: face_range(k + 2, 2 * k) };
        a.eq(format!("deleted_square.free_facet[{facet} < {cell}]"), true, has_free_facet(&d, &rd, &cell, &facet));
        let (oc, of) = (OrbitCell::of(&cell), OrbitCell::of(&facet));
        a.eq(format!("orbit.free_facet[{of} < {oc}]"), true, has_free_facet(&o, &ro, &oc, &of));
    }
    let details = json!({
        "skeleton": { "n_vertices": 2 * k + 2, "k": k + 1, "faces": skeleton.face_count() },
        "deleted_square": sd,
        "orbit": so,
        "top_cell_types": { "deleted_square": td, "orbit": to },
    });
    let parameters = CheckParams { k: Some(k), allow_large: params.allow_large, ..Default::default() };
    Ok(a.finish(CheckId::EvenCertificate, parameters, details))
}

fn low_dimension_exceptions(params: &CheckParams) -> Result<TheoremCheck> {
    let parities = match params.parity {
        Some(p) => vec![p],
        None => vec![Parity::Odd, Parity::Even],
    };
    let mut a = Assertions::default();
    let mut details = serde_json::Map::new();
    for parity in parities {
        let (name, skeleton, betti_d, betti_o) = match parity {
            // Triangle graph: the deleted square is a hexagon, the orbit a triangle.
            Parity::Odd => ("odd", skeleton_complex(3, 1)?, vec![1, 1], vec![1, 1]),
            // Boundary of the tetrahedron.
            Parity::Even => ("even", skeleton_complex(4, 2)?, vec![1, 0, 1], vec![1, 1, 1]),
        };
        let d = deleted_square(&skeleton);
        let o = orbit_complex(&d)?;
        let (sd, so) = (summarize(&d), summarize(&o));
        sanity(&mut a, &format!("{name}.deleted_square"), &sd);
        sanity(&mut a, &format!("{name}.orbit"), &so);
        a.eq(format!("{name}.deleted_square.betti"), &betti_d, &sd.betti.betti);
        a.eq(format!("{name}.orbit.betti"), &betti_o, &so.betti.betti);
        a.eq(format!("{name}.deleted_square.top_homology_vanishes"), false, sd.top_homology_vanishes);
        a.eq(format!("{name}.orbit.top_homology_vanishes"), false, so.top_homology_vanishes);
        let (free_d, free_o) = match parity {
            Parity::Odd => (
                free_facet_report::<_, ()>(&d, None)?.cells_with_free_facet(),
                free_facet_report::<_, ()>(&o, None)?.cells_with_free_facet(),
            ),
            Parity::Even => {
                let tag_d = |c: &ProductCell| even_top_type(c.shape(), 1);
                let tag_o = |c: &OrbitCell| even_top_type(c.shape(), 1);
                (
                    tally(&free_facet_report(&d, Some(&tag_d))?).type2_with_free_facet,
                    tally(&free_facet_report(&o, Some(&tag_o))?).type2_with_free_facet,
                )
            }
        };
        let what = if parity == Parity::Odd { "top_cells" } else { "type2_cells" };
        a.eq(format!("{name}.deleted_square.{what}_with_free_facet"), 0, free_d);
        a.eq(format!("{name}.orbit.{what}_with_free_facet"), 0, free_o);
        details.insert(name.to_string(), json!({ "deleted_square": sd, "orbit": so }));
    }
    let parameters = CheckParams { parity: params.parity, ..Default::default() };
    Ok(a.finish(CheckId::LowDimensionExceptions, parameters, Value::Object(details)))
}

/// Summary of one verified cover, as stored in check details.
#[derive(Serialize)]
struct CoverLevel<'a> {
    sphere_dim: usize,
    n_sets: usize,
    report: &'a SampleReport,
}

fn lift_chain(params: &CheckParams) -> Result<TheoremCheck> {
    let h = params.h.unwrap_or(DEFAULT_LIFT_DIM);
    if h < 2 {
        return Err(Error::InvalidParameter("lemma4.1-lift needs h >= 2".into()));
    }
    let epsilon = params.epsilon.unwrap_or(DEFAULT_EPSILON);
    let samples = params.samples.unwrap_or(DEFAULT_SAMPLES);
    let seed = params.seed.unwrap_or(DEFAULT_SEED);

    let mut a = Assertions::default();
    let mut cover = covers::cap_cover(1)?;
    let mut levels = Vec::new();
    let mut reports = Vec::new();
    let mut previous: Option<(usize, usize)> = None;
    for level in 1..=h {
        if level > 1 {
            cover = covers::lift_cover(&cover, epsilon)?;
        }
        let report = covers::verify_cover(&cover, &covers::sample_sphere(level, samples, seed)?)?;
        a.eq(format!("S{level}.covered"), true, report.covered);
        a.eq(format!("S{level}.antipodal_free"), true, report.antipodal_free);
        match previous {
            None => a.eq(format!("S{level}.n_sets"), 3, cover.sets.len()),
            Some((n, l)) => {
                a.eq(format!("S{level}.n_sets"), n + 1, cover.sets.len());
                a.at_most(format!("S{level}.max_multiplicity"), l + 1, report.max_multiplicity);
            }
        }
        previous = Some((cover.sets.len(), report.max_multiplicity));
        reports.push((level, cover.sets.len(), report));
    }
    for (level, n_sets, report) in &reports {
        levels.push(CoverLevel { sphere_dim: *level, n_sets: *n_sets, report });
    }
    let details = json!({ "levels": levels });
    let parameters = CheckParams {
        h: Some(h),
        epsilon: Some(epsilon),
        samples: Some(samples),
        seed: Some(seed),
        ..Default::default()
    };
    Ok(a.finish(CheckId::LiftChain, parameters, details))
}

fn verify_caps(h: usize, samples: usize, seed: u64) -> Result<(Cover, SampleReport)> {
    let cover = covers::cap_cover(h)?;
    let report = covers::verify_cover(&cover, &covers::sample_sphere(h, samples, seed)?)?;
    Ok((cover, report))
}

fn cap_cover_check(params: &CheckParams) -> Result<TheoremCheck> {
    let h = params.h.unwrap_or(2);
    let samples = params.samples.unwrap_or(DEFAULT_SAMPLES);
    let seed = params.seed.unwrap_or(DEFAULT_SEED);
    let (cover, report) = verify_caps(h, samples, seed)?;
    let mut a = Assertions::default();
    a.eq("n_sets", h + 2, cover.sets.len());
    a.eq("covered", true, report.covered);
    a.eq("antipodal_free", true, report.antipodal_free);
    a.eq("max_multiplicity", h + 1, report.max_multiplicity);
    a.eq("multiplicity_witness_recorded", true, report.multiplicity_witness.is_some());
    let details = json!({ "report": report });
    let parameters = CheckParams { h: Some(h), samples: Some(samples), seed: Some(seed), ..Default::default() };
    Ok(a.finish(CheckId::CapCover, parameters, details))
}

fn q_table_check(params: &CheckParams) -> Result<TheoremCheck> {
    let h_max = params.h_max.unwrap_or(DEFAULT_TABLE_MAX);
    let samples = params.samples.unwrap_or(DEFAULT_SAMPLES);
    let seed = params.seed.unwrap_or(DEFAULT_SEED);
    let table = q_table(h_max);
    let mut a = Assertions::default();
    a.eq("q(0)", 1, q_of(0));
    if h_max >= 2 {
        a.eq("q(2)", 3, q_of(2));
    }
    let mut constructive = Vec::new();
    for h in 1..=h_max.min(2) {
        let (cover, report) = verify_caps(h, samples, seed)?;
        a.eq(format!("S{h}.cap_cover.max_multiplicity"), q_of(h), report.max_multiplicity);
        a.eq(format!("S{h}.cap_cover.n_sets"), min_vertices(h)?, cover.sets.len());
        a.eq(format!("S{h}.cap_cover.antipodal_free"), true, report.antipodal_free);
        a.eq(format!("S{h}.cap_cover.covered"), true, report.covered);
        constructive.push(json!({ "h": h, "n_sets": cover.sets.len(), "max_multiplicity": report.max_multiplicity }));
    }
    let details = json!({ "entries": table, "constructive": constructive });
    let parameters = CheckParams { h_max: Some(h_max), samples: Some(samples), seed: Some(seed), ..Default::default() };
    Ok(a.finish(CheckId::QTable, parameters, details))
}

/// Runs the named check suite.
pub fn run_check(id: &str, params: &CheckParams) -> Result<TheoremCheck> {
    match id.parse::<CheckId>()? {
        CheckId::OddCertificate => odd_certificate(params),
        CheckId::EvenCertificate => even_certificate(params),
        CheckId::LowDimensionExceptions => low_dimension_exceptions(params),
        CheckId::LiftChain => lift_chain(params),
        CheckId::CapCover => cap_cover_check(params),
        CheckId::QTable => q_table_check(params),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_values() {
        assert_eq!(q_of(2), 3);
        assert_eq!(q_of(5), 4);
        assert_eq!(q_of(0), 1);
        assert_eq!(q_of(1), 2);
    }

    #[test]
    fn min_vertex_values() {
        assert_eq!(min_vertices(1).unwrap(), 3);
        assert_eq!(min_vertices(3).unwrap(), 6);
        assert_eq!(min_vertices(4).unwrap(), 7);
        assert!(min_vertices(0).is_err());
        // Odd h = 2k - 1 needs 2k + 2 sets, even h = 2k needs 2k + 3.
        for k in 2..10 {
            assert_eq!(min_vertices(2 * k - 1).unwrap(), 2 * k + 2);
            assert_eq!(min_vertices(2 * k).unwrap(), 2 * k + 3);
        }
    }

    #[test]
    fn table_shape() {
        let t = q_table(3);
        assert_eq!(t.len(), 4);
        assert_eq!(t[0], QEntry { h: 0, q: 1, min_vertices: None });
        assert_eq!(serde_json::to_string(&t[3]).unwrap(), r#"{"h":3,"q":3,"min_vertices":6}"#);
    }

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert!(matches!(run_check("thm9.9", &CheckParams::default()), Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn size_limits() {
        let even = |k, allow_large| CheckParams { k: Some(k), allow_large, ..Default::default() };
        assert!(matches!(run_check("thm4.3-even", &even(5, true)), Err(Error::InfeasibleSize(_))));
        assert!(matches!(run_check("thm4.3-even", &even(4, false)), Err(Error::InfeasibleSize(_))));
        assert!(matches!(run_check("thm4.3-odd", &even(6, true)), Err(Error::InfeasibleSize(_))));
        assert!(matches!(run_check("thm4.3-odd", &even(0, false)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn odd_k1_records_the_failure_of_the_argument() {
        let c = run_check("thm4.3-odd", &CheckParams { k: Some(1), ..Default::default() }).unwrap();
        assert!(c.passed(), "{:?}", c.failed_assertions().collect::<Vec<_>>());
    }

    #[test]
    fn remark_both_parities() {
        let c = run_check("remark4.4", &CheckParams::default()).unwrap();
        assert!(c.passed(), "{:?}", c.failed_assertions().collect::<Vec<_>>());
        assert_eq!(c.recomputed_verdict(), c.verdict);
    }

    #[test]
    fn even_type_classification() {
        assert_eq!(even_top_type((3, 3), 2), 1);
        assert_eq!(even_top_type((4, 2), 2), 2);
        assert_eq!(even_top_type((2, 4), 2), 2);
        assert_eq!(even_top_type((4, 3), 2), 0);
    }

    #[test]
    fn params_deserialize_strictly() {
        let p: CheckParams = serde_json::from_str(r#"{"k": 3, "parity": "even"}"#).unwrap();
        assert_eq!(p.k, Some(3));
        assert_eq!(p.parity, Some(Parity::Even));
        assert!(serde_json::from_str::<CheckParams>(r#"{"kk": 3}"#).is_err());
    }
}
