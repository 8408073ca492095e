//! Open covers of spheres by caps and latitude bands, and their sampled verification.
//!
//! A point of `S^h` is a unit vector in `R^(h+1)`. Its latitude is `asin` of the last coordinate
//! and its equatorial foot is the normalized vector of the leading `h` coordinates, a point of
//! `S^(h-1)`. Lifting a cover always adds the new coordinate last.

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Allowed deviation from unit norm for constructed points.
pub const UNIT_TOLERANCE: f64 = 1e-12;
/// Allowed deviation from unit norm for cap normals read from a cover file.
pub const NORMAL_TOLERANCE: f64 = 1e-9;
/// Points whose leading coordinates have norm at most this are treated as poles.
pub const POLE_TOLERANCE: f64 = 1e-12;
/// Band half-widths are multiples of this when no epsilon is given.
pub const DEFAULT_EPSILON: f64 = 0.05;

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// False for NaN.
fn near_one(n: f64, tolerance: f64) -> bool {
    (n - 1.0).abs() <= tolerance
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn latitude(x: &[f64]) -> f64 {
    x[x.len() - 1].clamp(-1.0, 1.0).asin()
}

/// A unit vector in `R^(h+1)`, i.e. a point of `S^h`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Accepts `coords` if it has at least one entry and unit norm within [`UNIT_TOLERANCE`].
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let n = norm(&coords);
        if coords.is_empty() || !near_one(n, UNIT_TOLERANCE) {
            return Err(Error::NotUnit { norm: n });
        }
        Ok(Self { coords })
    }

    /// Scales a nonzero vector onto the sphere.
    pub fn normalize(mut coords: Vec<f64>) -> Result<Self> {
        let n = norm(&coords);
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::NotUnit { norm: n });
        }
        coords.iter_mut().for_each(|c| *c /= n);
        Self::new(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Sphere dimension `h`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn antipode(&self) -> Self {
        Self { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn latitude(&self) -> f64 {
        latitude(&self.coords)
    }

    /// The same point on `S^h` for `h >= self.dim()`, with zeros appended.
    pub fn embed(&self, h: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.resize(h + 1, 0.0);
        Self { coords }
    }

    /// Places `foot` (on the equator) at latitude `t`: `(cos t * foot, sin t)`.
    pub fn at_latitude(foot: &SpherePoint, t: f64) -> Result<Self> {
        let mut coords: Vec<f64> = foot.coords.iter().map(|c| c * t.cos()).collect();
        coords.push(t.sin());
        Self::normalize(coords)
    }
}

/// One open set of a sphere cover, as a membership predicate tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoverSet {
    /// `{x : <x, normal> < threshold}`.
    Cap { normal: Vec<f64>, threshold: f64 },
    /// Points with latitude in `(lower, upper)` whose equatorial foot lies in `base`.
    Band { base: Box<CoverSet>, lower: f64, upper: f64 },
    /// Latitude strictly above `bound`.
    LatitudeAbove { bound: f64 },
    /// Latitude strictly below `bound`.
    LatitudeBelow { bound: f64 },
    Union { parts: Vec<CoverSet> },
}

impl CoverSet {
    /// Checks that this set is well formed on `S^h`.
    pub fn validate(&self, h: usize) -> Result<()> {
        match self {
            CoverSet::Cap { normal, threshold } => {
                if normal.len() != h + 1 {
                    return Err(Error::InvalidCover(format!(
                        "cap normal has {} coordinates on S^{h} (expected {})",
                        normal.len(),
                        h + 1
                    )));
                }
                let n = norm(normal);
                if !near_one(n, NORMAL_TOLERANCE) {
                    return Err(Error::InvalidCover(format!("cap normal has norm {n}")));
                }
                if !threshold.is_finite() {
                    return Err(Error::InvalidCover("cap threshold is not finite".into()));
                }
            }
            CoverSet::Band { base, lower, upper } => {
                if h == 0 {
                    return Err(Error::InvalidCover("a band needs a sphere of dimension >= 1".into()));
                }
                if !(-FRAC_PI_2 < *lower && lower < upper && *upper < FRAC_PI_2) {
                    return Err(Error::InvalidCover(format!(
                        "band latitudes ({lower}, {upper}) must satisfy -pi/2 < lower < upper < pi/2"
                    )));
                }
                base.validate(h - 1)?;
            }
            CoverSet::LatitudeAbove { bound } | CoverSet::LatitudeBelow { bound } => {
                if !bound.is_finite() {
                    return Err(Error::InvalidCover("latitude bound is not finite".into()));
                }
            }
            CoverSet::Union { parts } => {
                for p in parts {
                    p.validate(h)?;
                }
            }
        }
        Ok(())
    }

    /// Membership of raw coordinates; the caller has checked dimensions.
    fn contains(&self, x: &[f64]) -> bool {
        match self {
            CoverSet::Cap { normal, threshold } => dot(x, normal) < *threshold,
            CoverSet::Band { base, lower, upper } => {
                let (lead, _) = x.split_at(x.len() - 1);
                let r = norm(lead);
                if r <= POLE_TOLERANCE {
                    return false;
                }
                let t = latitude(x);
                if !(*lower < t && t < *upper) {
                    return false;
                }
                let foot: Vec<f64> = lead.iter().map(|c| c / r).collect();
                base.contains(&foot)
            }
            CoverSet::LatitudeAbove { bound } => latitude(x) > *bound,
            CoverSet::LatitudeBelow { bound } => latitude(x) < *bound,
            CoverSet::Union { parts } => parts.iter().any(|p| p.contains(x)),
        }
    }
}

/// Evaluates `s` at `x`, after checking that `s` is a valid set on the sphere of `x`.
pub fn membership(s: &CoverSet, x: &SpherePoint) -> Result<bool> {
    if let Some(expected) = s.first_cap_dim().filter(|&d| d != x.dim()) {
        return Err(Error::DimensionMismatch { expected, found: x.dim() });
    }
    s.validate(x.dim())?;
    Ok(s.contains(&x.coords))
}

impl CoverSet {
    /// Sphere dimension implied by the first cap reached in the tree, if any.
    fn first_cap_dim(&self) -> Option<usize> {
        match self {
            CoverSet::Cap { normal, .. } => normal.len().checked_sub(1),
            CoverSet::Band { base, .. } => base.first_cap_dim().map(|d| d + 1),
            CoverSet::LatitudeAbove { .. } | CoverSet::LatitudeBelow { .. } => None,
            CoverSet::Union { parts } => parts.iter().find_map(CoverSet::first_cap_dim),
        }
    }
}

/// A finite family of open sets on `S^sphere_dim`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cover {
    pub sphere_dim: usize,
    pub sets: Vec<CoverSet>,
    /// Band parameter of the last lifting step; absent for base covers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
}

impl Cover {
    pub fn validate(&self) -> Result<()> {
        if self.sets.is_empty() {
            return Err(Error::InvalidCover("a cover needs at least one set".into()));
        }
        for (i, s) in self.sets.iter().enumerate() {
            s.validate(self.sphere_dim)
                .map_err(|e| Error::InvalidCover(format!("set {i}: {e}")))?;
        }
        Ok(())
    }

    /// Parses and validates a cover document.
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Cover = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("cover serializes")
    }

    /// Indices of the sets containing `x`.
    pub fn members(&self, x: &SpherePoint) -> Result<Vec<usize>> {
        if x.dim() != self.sphere_dim {
            return Err(Error::DimensionMismatch { expected: self.sphere_dim, found: x.dim() });
        }
        Ok(self.members_unchecked(&x.coords))
    }

    fn members_unchecked(&self, x: &[f64]) -> Vec<usize> {
        self.sets.iter().enumerate().filter(|(_, s)| s.contains(x)).map(|(i, _)| i).collect()
    }
}

/// The `h + 2` vertices of a regular simplex inscribed in `S^h`.
///
/// Built recursively: the first vertex is `e_0` and the rest are `(-1/n, sqrt(1 - 1/n^2) u)` for
/// the vertices `u` of the regular simplex one dimension down, with `n = h + 1`.
pub fn regular_simplex_vertices(h: usize) -> Result<Vec<SpherePoint>> {
    if h == 0 {
        return Err(Error::InvalidParameter("simplex vertices need h >= 1".into()));
    }
    let mut verts: Vec<Vec<f64>> = vec![vec![1.0], vec![-1.0]];
    for n in 2..=h + 1 {
        let nf = n as f64;
        let scale = (1.0 - 1.0 / (nf * nf)).sqrt();
        let mut next = Vec::with_capacity(n + 1);
        let mut first = vec![0.0; n];
        first[0] = 1.0;
        next.push(first);
        for u in &verts {
            let mut v = Vec::with_capacity(n);
            v.push(-1.0 / nf);
            v.extend(u.iter().map(|c| c * scale));
            next.push(v);
        }
        verts = next;
    }
    verts.into_iter().map(SpherePoint::normalize).collect()
}

/// The `h + 2` open caps `{x : <x, w_i> < 0}` opposite the vertices of an inscribed regular simplex.
pub fn cap_cover(h: usize) -> Result<Cover> {
    let sets = regular_simplex_vertices(h)?
        .into_iter()
        .map(|w| CoverSet::Cap { normal: w.coords, threshold: 0.0 })
        .collect();
    Ok(Cover { sphere_dim: h, sets, epsilon: None })
}

/// Lifts an antipodal-free cover of `S^h` with `n` sets to one of `S^(h+1)` with `n + 1` sets.
///
/// Each base set becomes the band of points whose foot lies in it and whose latitude is in
/// `(-2 eps, 4 eps)`. The last band also absorbs everything above latitude `3 eps`, and a new
/// set takes everything below `-eps`.
pub fn lift_cover(base: &Cover, epsilon: f64) -> Result<Cover> {
    if !(epsilon > 0.0 && epsilon < FRAC_PI_8) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    base.validate()?;
    let band = |s: &CoverSet| CoverSet::Band { base: Box::new(s.clone()), lower: -2.0 * epsilon, upper: 4.0 * epsilon };
    let n = base.sets.len();
    let mut sets: Vec<CoverSet> = base.sets[..n - 1].iter().map(band).collect();
    sets.push(CoverSet::Union {
        parts: vec![band(&base.sets[n - 1]), CoverSet::LatitudeAbove { bound: 3.0 * epsilon }],
    });
    sets.push(CoverSet::LatitudeBelow { bound: -epsilon });
    Ok(Cover { sphere_dim: base.sphere_dim + 1, sets, epsilon: Some(epsilon) })
}

/// Builds a cover of `S^h` by lifting `cap_cover(1)` `h - 1` times with the same epsilon.
pub fn lifted_cap_cover(h: usize, epsilon: f64) -> Result<Cover> {
    if h == 0 {
        return Err(Error::InvalidParameter("lifted covers need h >= 1".into()));
    }
    let mut cover = cap_cover(1)?;
    for _ in 1..h {
        cover = lift_cover(&cover, epsilon)?;
    }
    Ok(cover)
}

/// Sample points of `S^h`, each standing for the antipodal pair `{x, -x}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleSet {
    pub sphere_dim: usize,
    pub seed: u64,
    /// Number of structured points at the front of `points`.
    pub battery: usize,
    pub points: Vec<SpherePoint>,
}

impl SampleSet {
    pub fn pairs(&self) -> usize {
        self.points.len()
    }
}

/// Structured points always checked on `S^h`, in this order: for every level `j = h, ..., 1` the
/// inscribed simplex vertices of `S^j`, then for every level the normalized midpoints of vertex
/// pairs, then the coordinate poles. Lower levels are embedded with trailing zeros.
pub fn structured_battery(h: usize) -> Vec<SpherePoint> {
    let levels: Vec<Vec<SpherePoint>> =
        (1..=h).rev().map(|level| regular_simplex_vertices(level).expect("level >= 1")).collect();
    let mut out: Vec<SpherePoint> = levels.iter().flatten().map(|w| w.embed(h)).collect();
    for ws in &levels {
        for i in 0..ws.len() {
            for j in i + 1..ws.len() {
                let mid: Vec<f64> = ws[i].coords.iter().zip(&ws[j].coords).map(|(a, b)| a + b).collect();
                out.push(SpherePoint::normalize(mid).expect("simplex vertices are never antipodal").embed(h));
            }
        }
    }
    for axis in 0..=h {
        let mut e = vec![0.0; h + 1];
        e[axis] = 1.0;
        out.push(SpherePoint { coords: e });
    }
    out
}

/// The structured battery followed by `count` seeded uniform points (normalized Gaussians).
pub fn sample_sphere(h: usize, count: usize, seed: u64) -> Result<SampleSet> {
    if count == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    if h == 0 {
        return Err(Error::InvalidParameter("sampling needs h >= 1".into()));
    }
    let mut points = structured_battery(h);
    let battery = points.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    points.reserve(count);
    while points.len() < battery + count {
        let v: Vec<f64> = (0..=h).map(|_| StandardNormal.sample(&mut rng)).collect();
        if norm(&v) < 1e-6 {
            continue;
        }
        points.push(SpherePoint::normalize(v)?);
    }
    Ok(SampleSet { sphere_dim: h, seed, battery, points })
}

/// A sample point lying in no set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointWitness {
    pub point: SpherePoint,
}

/// A set containing both a sample point and its antipode.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AntipodalWitness {
    pub set: usize,
    pub point: SpherePoint,
}

/// A sample point attaining the maximal multiplicity, with the sets containing it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityWitness {
    pub point: SpherePoint,
    pub sets: Vec<usize>,
}

/// Outcome of checking a cover against a sample set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport {
    pub sphere_dim: usize,
    pub n_sets: usize,
    pub seed: u64,
    pub pairs: usize,
    pub samples_used: usize,
    pub covered: bool,
    pub uncovered_witness: Option<PointWitness>,
    pub antipodal_free: bool,
    pub antipodal_witness: Option<AntipodalWitness>,
    pub max_multiplicity: usize,
    pub multiplicity_witness: Option<MultiplicityWitness>,
    /// `multiplicity_histogram[m]` = number of sample points lying in exactly `m` sets.
    pub multiplicity_histogram: Vec<usize>,
}

/// Memberships of `x` and `-x` for every sample pair, in sample order.
fn evaluate(cover: &Cover, samples: &SampleSet) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if cover.sphere_dim != samples.sphere_dim {
        return Err(Error::DimensionMismatch { expected: cover.sphere_dim, found: samples.sphere_dim });
    }
    cover.validate()?;
    Ok(samples
        .points
        .par_iter()
        .map(|x| {
            let neg: Vec<f64> = x.coords.iter().map(|c| -c).collect();
            (cover.members_unchecked(&x.coords), cover.members_unchecked(&neg))
        })
        .collect())
}

/// Coverage, antipodal-freeness and maximal multiplicity of `cover` over the sample pairs.
///
/// Witnesses are the first offending point in sample order, `x` before `-x`.
pub fn verify_cover(cover: &Cover, samples: &SampleSet) -> Result<SampleReport> {
    let evals = evaluate(cover, samples)?;
    let mut report = SampleReport {
        sphere_dim: cover.sphere_dim,
        n_sets: cover.sets.len(),
        seed: samples.seed,
        pairs: samples.pairs(),
        samples_used: 2 * samples.pairs(),
        covered: true,
        uncovered_witness: None,
        antipodal_free: true,
        antipodal_witness: None,
        max_multiplicity: 0,
        multiplicity_witness: None,
        multiplicity_histogram: vec![0; cover.sets.len() + 1],
    };
    for (x, (plus, minus)) in samples.points.iter().zip(&evals) {
        if report.antipodal_free {
            if let Some(&set) = plus.iter().find(|i| minus.binary_search(i).is_ok()) {
                report.antipodal_free = false;
                report.antipodal_witness = Some(AntipodalWitness { set, point: x.clone() });
            }
        }
        for (point, members) in [(x, plus), (&x.antipode(), minus)] {
            report.multiplicity_histogram[members.len()] += 1;
            if members.is_empty() && report.covered {
                report.covered = false;
                report.uncovered_witness = Some(PointWitness { point: point.clone() });
            }
            if members.len() > report.max_multiplicity {
                report.max_multiplicity = members.len();
                report.multiplicity_witness = Some(MultiplicityWitness { point: point.clone(), sets: members.clone() });
            }
        }
    }
    Ok(report)
}

/// Nerve of a cover as witnessed by sample points: a face for every family of sets sharing a
/// sample point, closed under taking nonempty subfamilies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalNerve {
    pub n_vertices: usize,
    /// Faces graded by dimension, each a sorted list of set indices, in lexicographic order.
    pub faces: Vec<Vec<Vec<usize>>>,
    pub dimension: Option<usize>,
}

impl EmpiricalNerve {
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        face.len()
            .checked_sub(1)
            .and_then(|d| self.faces.get(d))
            .is_some_and(|fs| fs.iter().any(|f| f == face))
    }
}

pub fn empirical_nerve(cover: &Cover, samples: &SampleSet) -> Result<EmpiricalNerve> {
    let evals = evaluate(cover, samples)?;
    let signatures: BTreeSet<&Vec<usize>> =
        evals.iter().flat_map(|(a, b)| [a, b]).filter(|s| !s.is_empty()).collect();
    let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
    for sig in signatures {
        if closed.contains(sig) {
            continue;
        }
        for mask in 1u64..(1u64 << sig.len()) {
            let sub: Vec<usize> = sig.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
            closed.insert(sub);
        }
    }
    let top = closed.iter().map(Vec::len).max();
    let mut faces = vec![Vec::new(); top.unwrap_or(0)];
    for f in closed {
        faces[f.len() - 1].push(f);
    }
    Ok(EmpiricalNerve { n_vertices: cover.sets.len(), faces, dimension: top.map(|t| t - 1) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_vertices_are_regular() {
        for h in 1..=7 {
            let ws = regular_simplex_vertices(h).unwrap();
            assert_eq!(ws.len(), h + 2);
            let target = -1.0 / (h as f64 + 1.0);
            for i in 0..ws.len() {
                for j in i + 1..ws.len() {
                    assert!((dot(&ws[i].coords, &ws[j].coords) - target).abs() <= 1e-9);
                }
            }
            let sum: Vec<f64> = (0..=h).map(|c| ws.iter().map(|w| w.coords[c]).sum()).collect();
            assert!(norm(&sum) <= 1e-9);
        }
        assert!(regular_simplex_vertices(0).is_err());
    }

    #[test]
    fn triangle_vertices_at_120_degrees() {
        let ws = regular_simplex_vertices(1).unwrap();
        assert!((dot(&ws[0].coords, &ws[1].coords) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn sphere_point_validation() {
        assert!(SpherePoint::new(vec![1.0, 1.0]).is_err());
        assert!(SpherePoint::new(vec![]).is_err());
        assert!(SpherePoint::normalize(vec![0.0, 0.0]).is_err());
        let p = SpherePoint::normalize(vec![3.0, 4.0]).unwrap();
        assert!((p.coords()[0] - 0.6).abs() < 1e-15);
    }

    #[test]
    fn cap_membership() {
        let w = SpherePoint::new(vec![1.0, 0.0]).unwrap();
        let cap = CoverSet::Cap { normal: w.coords.clone(), threshold: 0.0 };
        let x = SpherePoint::normalize(vec![-0.3, (1.0f64 - 0.09).sqrt()]).unwrap();
        assert!(membership(&cap, &x).unwrap());
        assert!(!membership(&cap, &x.antipode()).unwrap());
        // Boundary points belong to neither.
        let e = SpherePoint::new(vec![0.0, 1.0]).unwrap();
        assert!(!membership(&cap, &e).unwrap() && !membership(&cap, &e.antipode()).unwrap());
    }

    #[test]
    fn band_excludes_poles() {
        let base = cap_cover(1).unwrap().sets[0].clone();
        let band = CoverSet::Band { base: Box::new(base), lower: -0.1, upper: 0.2 };
        let north = SpherePoint::new(vec![0.0, 0.0, 1.0]).unwrap();
        assert!(!membership(&band, &north).unwrap());
        assert!(!membership(&band, &north.antipode()).unwrap());
    }

    #[test]
    fn membership_dimension_mismatch() {
        let cap = cap_cover(2).unwrap().sets[0].clone();
        let x = SpherePoint::new(vec![1.0, 0.0]).unwrap();
        assert!(matches!(membership(&cap, &x), Err(Error::DimensionMismatch { expected: 2, found: 1 })));
        let c = cap_cover(2).unwrap();
        assert!(matches!(c.members(&x), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn lift_rejects_bad_epsilon() {
        let c = cap_cover(1).unwrap();
        for eps in [0.0, -0.1, FRAC_PI_8, 1.0, f64::NAN] {
            assert!(matches!(lift_cover(&c, eps), Err(Error::EpsilonOutOfRange(_))), "{eps}");
        }
        assert!(lift_cover(&c, 0.39).is_ok());
    }

    #[test]
    fn lift_structure() {
        let c = lift_cover(&cap_cover(1).unwrap(), 0.05).unwrap();
        assert_eq!(c.sphere_dim, 2);
        assert_eq!(c.sets.len(), 4);
        assert_eq!(c.epsilon, Some(0.05));
        let north = SpherePoint::new(vec![0.0, 0.0, 1.0]).unwrap();
        assert_eq!(c.members(&north).unwrap(), vec![2]);
        assert_eq!(c.members(&north.antipode()).unwrap(), vec![3]);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_sphere(3, 500, 7).unwrap();
        let b = sample_sphere(3, 500, 7).unwrap();
        assert_eq!(serde_json::to_vec(&a).unwrap(), serde_json::to_vec(&b).unwrap());
        assert_ne!(a.points, sample_sphere(3, 500, 8).unwrap().points);
        assert_eq!(a.pairs(), a.battery + 500);
        assert!(a.points.iter().all(|p| (norm(&p.coords) - 1.0).abs() <= UNIT_TOLERANCE));
        assert!(sample_sphere(3, 0, 7).is_err());
    }

    #[test]
    fn battery_contains_simplex_vertices() {
        let battery = structured_battery(2);
        for w in regular_simplex_vertices(2).unwrap() {
            assert!(battery.contains(&w));
        }
    }

    #[test]
    fn cover_json_round_trip_and_validation() {
        let c = lift_cover(&cap_cover(1).unwrap(), 0.05).unwrap();
        let text = c.to_json();
        assert!(text.contains("\"kind\": \"latitude_above\""));
        assert_eq!(Cover::from_json(&text).unwrap(), c);
        let bad = r#"{"sphere_dim": 1, "sets": [{"kind": "cap", "normal": [1.0, 0.1], "threshold": 0.0}]}"#;
        assert!(matches!(Cover::from_json(bad), Err(Error::InvalidCover(_))));
        let wrong_len = r#"{"sphere_dim": 2, "sets": [{"kind": "cap", "normal": [1.0, 0.0], "threshold": 0.0}]}"#;
        assert!(Cover::from_json(wrong_len).is_err());
        let high_band = r#"{"sphere_dim": 2, "sets": [{"kind": "band", "lower": 0.0, "upper": 1.6,
            "base": {"kind": "cap", "normal": [1.0, 0.0], "threshold": 0.0}}]}"#;
        assert!(Cover::from_json(high_band).is_err());
        assert!(Cover::from_json(r#"{"sphere_dim": 1, "sets": []}"#).is_err());
        assert!(Cover::from_json(r#"{"sphere_dim": 1, "sets": [{"kind": "blob"}]}"#).is_err());
    }

    #[test]
    fn nerve_of_circle_cover() {
        let c = cap_cover(1).unwrap();
        let s = sample_sphere(1, 2000, 1).unwrap();
        let n = empirical_nerve(&c, &s).unwrap();
        assert_eq!(n.face_counts(), vec![3, 3]);
        assert_eq!(n.dimension, Some(1));
        assert!(n.contains(&[0, 2]) && !n.contains(&[0, 1, 2]));
    }

    #[test]
    fn verify_reports_dimension_mismatch() {
        let c = cap_cover(2).unwrap();
        let s = sample_sphere(1, 10, 0).unwrap();
        assert!(matches!(verify_cover(&c, &s), Err(Error::DimensionMismatch { .. })));
    }
}
