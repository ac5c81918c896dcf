//! Degeneracy-locus classes: Thom–Porteous polynomials, their
//! evaluation for split bundles over projective space, and the Segre
//! refinement that computes Euler characteristics of singular loci.
//!
//! For a generic bundle map `E → F` with ranks `e ≤ f`, the locus
//! where the kernel has dimension at least `i` has codimension
//! `i·(f-e+i)` and its fundamental class is the Schur-type Hankel
//! determinant of size `i` and shift `f-e+i` in the classes `c(F-E)`.
//!
//! For a smooth invariant linear locus with normal weights `w_j`, the
//! Segre refinement is the exact series `Π w_j · Π (1+w_j)^{-1}`; its
//! lowest-degree part is the plain Thom polynomial `Π w_j`, and
//! integrating it against the total Chern class of projective space
//! recovers the Euler characteristic of the locus.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{rat, Rat};
use crate::series::{
    proj_substitute, DegreePolicy, GradedSeries, ProjPoly, ProjRing, SeriesRing,
};

/// Ranks of the two bundles and the kernel-dimension bound of the locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PorteousSpec {
    e: usize,
    f: usize,
    i: usize,
}

impl PorteousSpec {
    /// Requires `e ≥ 1`, `f ≥ e` and `0 ≤ i ≤ e`.
    pub fn new(e: usize, f: usize, i: usize) -> Result<Self> {
        if e < 1 {
            return Err(Error::InvalidArgument("rank e must be at least 1".into()));
        }
        if f < e {
            return Err(Error::InvalidArgument(format!(
                "rank f = {f} must be at least rank e = {e}"
            )));
        }
        if i > e {
            return Err(Error::InvalidArgument(format!(
                "kernel bound i = {i} exceeds rank e = {e}"
            )));
        }
        Ok(PorteousSpec { e, f, i })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// Expected codimension `i·(f-e+i)` of the locus.
    pub fn codimension(&self) -> usize {
        self.i * (self.f - self.e + self.i)
    }
}

/// Split bundles `⊕ O(a)` over `P^n`, given by their twist lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleData {
    base_dim: usize,
    e_degrees: Vec<i64>,
    f_degrees: Vec<i64>,
}

impl BundleData {
    pub fn new(base_dim: usize, e_degrees: Vec<i64>, f_degrees: Vec<i64>) -> Self {
        BundleData {
            base_dim,
            e_degrees,
            f_degrees,
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }
}

/// The Thom–Porteous polynomial: the Hankel determinant of size `i`
/// and shift `f-e+i` in the Chern variables `c_1, c_2, …` of `F-E`.
/// Homogeneous of degree `i·(f-e+i)`; requires the truncation order to
/// reach that degree.
pub fn porteous_tp(spec: &PorteousSpec, trunc: usize) -> Result<GradedSeries> {
    let codim = spec.codimension();
    if trunc < codim {
        return Err(Error::InvalidArgument(format!(
            "truncation {trunc} below the locus codimension {codim}"
        )));
    }
    let shift = spec.f - spec.e + spec.i;
    let max_index = if spec.i == 0 { 0 } else { shift + spec.i - 1 };
    let ring = SeriesRing::chern(max_index, trunc)?;
    let det = crate::series::hankel_det(
        &ring,
        |index| {
            ring.var(&format!("c{index}"))
                .unwrap_or_else(|_| ring.zero())
        },
        spec.i,
        shift as i64,
    );
    Ok(det)
}

/// Chern classes of the virtual bundle `F-E` inside the cohomology of
/// projective space, as the list `c_1(F-E)·h, c_2(F-E)·h², …` up to
/// the base dimension.
fn chern_difference(ring: &ProjRing, bundles: &BundleData) -> Result<Vec<ProjPoly>> {
    let cf = ring.chern_of_split(&bundles.f_degrees);
    let ce = ring.chern_of_split(&bundles.e_degrees);
    let quotient = ring.mul(&cf, &ring.inverse(&ce)?);
    Ok((1..=ring.dimension())
        .map(|k| ring.monomial(quotient.coeffs()[k].clone(), k))
        .collect())
}

/// Fundamental class of the degeneracy locus for split bundles over
/// `P^n`: the Thom–Porteous polynomial evaluated at `c(F-E)`. Returns
/// the zero class when the codimension exceeds the base dimension.
pub fn degeneracy_class(spec: &PorteousSpec, bundles: &BundleData) -> Result<ProjPoly> {
    if bundles.e_degrees.len() != spec.e || bundles.f_degrees.len() != spec.f {
        return Err(Error::InvalidArgument(format!(
            "bundle summand counts ({}, {}) do not match ranks ({}, {})",
            bundles.e_degrees.len(),
            bundles.f_degrees.len(),
            spec.e,
            spec.f
        )));
    }
    let ring = ProjRing::new(bundles.base_dim);
    let tp = porteous_tp(spec, spec.codimension())?;
    let chern = chern_difference(&ring, bundles)?;
    let mut assignment = BTreeMap::new();
    for (k, value) in chern.iter().enumerate() {
        assignment.insert(format!("c{}", k + 1), value.clone());
    }
    // variables beyond the base dimension evaluate to zero
    for v in tp.ring().vars() {
        assignment
            .entry(v.name.clone())
            .or_insert_with(|| ring.zero());
    }
    let result = proj_substitute(&tp, &assignment, &ring, DegreePolicy::Warn)?;
    Ok(result.value)
}

/// The Segre refinement of the Thom polynomial for a smooth invariant
/// linear locus with the given normal weights (degree-1 series):
/// `Π w_j · Π (1+w_j)^{-1}`, whose lowest-degree part is `Π w_j`.
pub fn segre_sm_smooth(weights: &[GradedSeries]) -> Result<GradedSeries> {
    let ring = match weights.first() {
        None => {
            // codimension 0: the locus is the whole space
            let ring = SeriesRing::degree_one(&["h"], 0)?;
            return Ok(ring.one());
        }
        Some(w) => w.ring().clone(),
    };
    let mut numerator = ring.one();
    let mut denominator = ring.one();
    for w in weights {
        if w.ring() != &ring {
            return Err(Error::RingMismatch(
                "all weights must live in one ring".to_string(),
            ));
        }
        if w.is_zero() {
            return Err(Error::InvalidArgument(
                "normal weights must be nonzero series".to_string(),
            ));
        }
        numerator = numerator.mul(w);
        denominator = denominator.mul(&ring.one().add(w));
    }
    numerator.div(&denominator)
}

/// Euler characteristic of the zero locus of a generic section of
/// `⊕ O(a_j)` on `P^n`: integrates the Segre refinement with weights
/// `a_j·h` against the total Chern class `(1+h)^(n+1)` of the base.
pub fn euler_of_singular_locus(normal_degrees: &[i64], n: usize) -> Result<Rat> {
    let codim_total: usize = normal_degrees.len();
    if codim_total > n {
        return Err(Error::InvalidArgument(format!(
            "{codim_total} conditions exceed the dimension {n}"
        )));
    }
    let ring = SeriesRing::degree_one(&["h"], n)?;
    let h = ring.var("h")?;
    let weights: Vec<GradedSeries> = normal_degrees
        .iter()
        .map(|&a| h.scale(&rat(a)))
        .collect();
    let tp_sm = segre_sm_smooth(&weights)?;

    let proj = ProjRing::new(n);
    let mut assignment = BTreeMap::new();
    assignment.insert("h".to_string(), proj.hyperplane());
    let integrand = proj_substitute(&tp_sm, &assignment, &proj, DegreePolicy::Warn)?.value;
    let tangent = proj.pow(&proj.add(&proj.one(), &proj.hyperplane()), (n + 1) as u32);
    Ok(proj.integrate(&proj.mul(&integrand, &tangent)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::GradedVariable;

    #[test]
    fn spec_validation() {
        assert!(PorteousSpec::new(0, 1, 0).is_err());
        assert!(PorteousSpec::new(2, 1, 0).is_err());
        assert!(PorteousSpec::new(2, 2, 3).is_err());
        let spec = PorteousSpec::new(2, 3, 1).unwrap();
        assert_eq!(spec.codimension(), 2);
    }

    #[test]
    fn porteous_small_cases() {
        // i = 0: empty condition, the class of the whole space
        let spec = PorteousSpec::new(2, 3, 0).unwrap();
        let tp = porteous_tp(&spec, 4).unwrap();
        assert_eq!(tp.constant_term(), rat(1));
        assert_eq!(tp.terms().len(), 1);

        // i = 1, e = f: the first Chern class
        for e in 1..=2usize {
            let spec = PorteousSpec::new(e, e, 1).unwrap();
            let tp = porteous_tp(&spec, 3).unwrap();
            let ring = tp.ring().clone();
            assert_eq!(tp, ring.var("c1").unwrap());
        }
    }

    #[test]
    fn porteous_is_homogeneous() {
        for e in 1..=3usize {
            for extra in 0..=3usize {
                let f = e + extra;
                for i in 0..=e.min(3) {
                    let spec = PorteousSpec::new(e, f, i).unwrap();
                    let codim = spec.codimension();
                    let tp = porteous_tp(&spec, codim + 2).unwrap();
                    assert!(
                        tp.is_homogeneous_of(codim),
                        "e={e} f={f} i={i}: {tp}"
                    );
                    assert!(!tp.is_zero());
                }
            }
        }
    }

    #[test]
    fn porteous_needs_room() {
        let spec = PorteousSpec::new(2, 4, 2).unwrap();
        assert!(porteous_tp(&spec, 3).is_err());
    }

    #[test]
    fn degeneracy_zero_count_on_line() {
        // sections of O(d) on P¹ vanish at d points
        for d in 0..=10i64 {
            let spec = PorteousSpec::new(1, 1, 1).unwrap();
            let bundles = BundleData::new(1, vec![0], vec![d]);
            let class = degeneracy_class(&spec, &bundles).unwrap();
            assert_eq!(class.coeffs()[1], rat(d));
            assert_eq!(class.coeffs()[0], rat(0));
        }
    }

    #[test]
    fn degeneracy_determinantal_conic() {
        // generic 2×2 matrix of linear forms on P² degenerates on a conic
        let spec = PorteousSpec::new(2, 2, 1).unwrap();
        let bundles = BundleData::new(2, vec![0, 0], vec![1, 1]);
        let class = degeneracy_class(&spec, &bundles).unwrap();
        assert_eq!(class.display(), "2h");
    }

    #[test]
    fn degeneracy_constant_map_is_empty() {
        let spec = PorteousSpec::new(1, 1, 1).unwrap();
        let bundles = BundleData::new(2, vec![0], vec![0]);
        let class = degeneracy_class(&spec, &bundles).unwrap();
        assert!(class.is_zero());
    }

    #[test]
    fn degeneracy_codimension_matches() {
        let spec = PorteousSpec::new(2, 3, 1).unwrap();
        let bundles = BundleData::new(4, vec![0, 1], vec![1, 1, 2]);
        let class = degeneracy_class(&spec, &bundles).unwrap();
        if !class.is_zero() {
            assert_eq!(class.bottom_degree(), Some(spec.codimension()));
            assert_eq!(class.top_degree(), Some(spec.codimension()));
        }
    }

    #[test]
    fn segre_sm_examples() {
        assert_eq!(segre_sm_smooth(&[]).unwrap().constant_term(), rat(1));

        let ring = SeriesRing::degree_one(&["w"], 3).unwrap();
        let w = ring.var("w").unwrap();
        let s = segre_sm_smooth(&[w.clone()]).unwrap();
        let expected = w
            .sub(&w.pow(2))
            .add(&w.pow(3));
        assert_eq!(s, expected);

        let ring2 = SeriesRing::degree_one(&["w1", "w2"], 4).unwrap();
        let w1 = ring2.var("w1").unwrap();
        let w2 = ring2.var("w2").unwrap();
        let s2 = segre_sm_smooth(&[w1.clone(), w2.clone()]).unwrap();
        assert_eq!(s2.homogeneous_part(2), w1.mul(&w2));
        assert_eq!(s2.min_degree(), Some(2));
    }

    #[test]
    fn segre_sm_rejects_zero_weights() {
        let ring = SeriesRing::degree_one(&["w"], 3).unwrap();
        assert!(segre_sm_smooth(&[ring.zero()]).is_err());
    }

    #[test]
    fn leading_term_is_weight_product() {
        // deterministic pseudo-random weight sets in up to three variables
        let mut state: u64 = 12345;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let nvars = 1 + (next() % 3) as usize;
            let nweights = 1 + (next() % 4) as usize;
            let names: Vec<String> = (1..=nvars).map(|j| format!("t{j}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let ring = SeriesRing::degree_one(&refs, nweights + 2).unwrap();
            let mut weights = Vec::new();
            for _ in 0..nweights {
                let mut w = ring.zero();
                loop {
                    for j in 0..nvars {
                        let c = (next() % 7) as i64 - 3;
                        let mut expo = vec![0u32; nvars];
                        expo[j] = 1;
                        w.add_term(expo, rat(c));
                    }
                    if !w.is_zero() {
                        break;
                    }
                }
                weights.push(w);
            }
            let product = weights
                .iter()
                .fold(ring.one(), |acc, w| acc.mul(w));
            let s = segre_sm_smooth(&weights).unwrap();
            assert_eq!(s.homogeneous_part(nweights), product);
            if !product.is_zero() {
                assert_eq!(s.min_degree(), Some(nweights));
            }
        }
    }

    #[test]
    fn euler_of_plane_curves() {
        // χ of a smooth degree-d plane curve is 3d - d²
        let expected = [(1i64, 2i64), (2, 2), (3, 0), (4, -4), (5, -10), (6, -18)];
        for (d, chi) in expected {
            assert_eq!(
                euler_of_singular_locus(&[d], 2).unwrap(),
                rat(chi),
                "degree {d}"
            );
        }
    }

    #[test]
    fn euler_of_hyperplanes_and_whole_space() {
        for n in 1..=4usize {
            assert_eq!(euler_of_singular_locus(&[1], n).unwrap(), rat(n as i64));
        }
        for n in 0..=4usize {
            assert_eq!(
                euler_of_singular_locus(&[], n).unwrap(),
                rat((n + 1) as i64)
            );
        }
    }

    #[test]
    fn codimension_one_pipelines_agree() {
        // degree of the Porteous class for O → O(d) equals the lowest
        // coefficient of the Segre integrand
        for d in 1..=6i64 {
            let spec = PorteousSpec::new(1, 1, 1).unwrap();
            let bundles = BundleData::new(3, vec![0], vec![d]);
            let class = degeneracy_class(&spec, &bundles).unwrap();

            let ring = SeriesRing::degree_one(&["h"], 3).unwrap();
            let w = ring.var("h").unwrap().scale(&rat(d));
            let tp_sm = segre_sm_smooth(&[w]).unwrap();
            assert_eq!(
                class.coeffs()[1],
                tp_sm.homogeneous_part(1).coefficient(&[1])
            );
        }
    }

    #[test]
    fn twisting_by_chern_class_is_invertible() {
        // multiplying by c and then by c⁻¹ is the identity
        let mut state: u64 = 99;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..20 {
            let rank = 1 + (next() % 3) as usize;
            let nweights = (next() % 4) as usize;
            let weights: Vec<Vec<i64>> = (0..nweights)
                .map(|_| (0..rank).map(|_| (next() % 9) as i64 - 4).collect())
                .collect();
            let c = crate::series::chern_of_weights(&weights, rank, 5).unwrap();
            let ring = c.ring().clone();
            // a random series to twist
            let mut a = ring.zero();
            for _ in 0..5 {
                let expo: Vec<u32> = (0..rank).map(|_| (next() % 3) as u32).collect();
                a.add_term(expo, rat((next() % 11) as i64 - 5));
            }
            let twisted = a.mul(&c).mul(&c.inverse().unwrap());
            assert_eq!(twisted, a);
        }
        // a fixed sanity case with named variables
        let ring = SeriesRing::new(
            vec![GradedVariable { name: "t1".into(), degree: 1 }],
            4,
        )
        .unwrap();
        let c = ring.one().add(&ring.var("t1").unwrap());
        let a = ring.var("t1").unwrap().pow(2).scale(&rat(3));
        assert_eq!(a.mul(&c).mul(&c.inverse().unwrap()), a);
    }
}
