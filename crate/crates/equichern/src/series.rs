//! Truncated graded power series over the rationals.
//!
//! A [`SeriesRing`] fixes a list of graded variables (Chern classes
//! `c_i` of degree i, torus parameters `t_j` and the hyperplane class
//! `h` of degree 1) and a truncation order `D`; a [`GradedSeries`]
//! stores the coefficients of all monomials of weighted degree at most
//! `D`. All arithmetic is exact — characteristic-class identities hold
//! on the nose, so nothing here is floating point.
//!
//! The module also provides the Chern class of a list of torus
//! weights, Hankel (Jacobi–Trudi style) determinants in the `c_i`, and
//! evaluation in the cohomology of projective space, where integration
//! reads off the top coefficient.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_rat, rat, Rat};

/// A named variable with a positive weight (half the cohomological degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVariable {
    pub name: String,
    pub degree: usize,
}

/// Variable list plus truncation order; the ambient ring of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRing {
    vars: Vec<GradedVariable>,
    trunc: usize,
}

impl SeriesRing {
    pub fn new(vars: Vec<GradedVariable>, trunc: usize) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if v.degree == 0 {
                return Err(Error::InvalidArgument(format!(
                    "variable {:?} must have positive degree",
                    v.name
                )));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate variable name {:?}",
                    v.name
                )));
            }
        }
        Ok(SeriesRing { vars, trunc })
    }

    /// Ring in variables all of degree 1 named as given.
    pub fn degree_one(names: &[&str], trunc: usize) -> Result<Self> {
        SeriesRing::new(
            names
                .iter()
                .map(|n| GradedVariable {
                    name: n.to_string(),
                    degree: 1,
                })
                .collect(),
            trunc,
        )
    }

    /// Ring in Chern-class variables `c_1 … c_n` with `deg c_i = i`.
    pub fn chern(n: usize, trunc: usize) -> Result<Self> {
        SeriesRing::new(
            (1..=n)
                .map(|i| GradedVariable {
                    name: format!("c{i}"),
                    degree: i,
                })
                .collect(),
            trunc,
        )
    }

    pub fn vars(&self) -> &[GradedVariable] {
        &self.vars
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    fn weighted_degree(&self, expo: &[u32]) -> usize {
        expo.iter()
            .zip(&self.vars)
            .map(|(&e, v)| e as usize * v.degree)
            .sum()
    }

    pub fn zero(&self) -> GradedSeries {
        GradedSeries {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> GradedSeries {
        self.constant(rat(1))
    }

    pub fn constant(&self, c: Rat) -> GradedSeries {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; self.vars.len()], c);
        }
        GradedSeries {
            ring: self.clone(),
            terms,
        }
    }

    /// The series consisting of the named variable.
    pub fn var(&self, name: &str) -> Result<GradedSeries> {
        let index = self
            .var_index(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name:?}")))?;
        let mut expo = vec![0u32; self.vars.len()];
        expo[index] = 1;
        let mut series = self.zero();
        series.add_term(expo, rat(1));
        Ok(series)
    }
}

/// A truncated graded power series: monomial exponents mapped to
/// nonzero rational coefficients, all of weighted degree ≤ the ring's
/// truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    ring: SeriesRing,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl GradedSeries {
    pub fn ring(&self) -> &SeriesRing {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, expo: &[u32]) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&vec![0; self.ring.vars.len()])
    }

    /// Adds a term, dropping it when beyond truncation and erasing
    /// cancelled coefficients.
    pub fn add_term(&mut self, expo: Vec<u32>, coefficient: Rat) {
        assert_eq!(expo.len(), self.ring.vars.len(), "exponent arity");
        if coefficient.is_zero() || self.ring.weighted_degree(&expo) > self.ring.trunc {
            return;
        }
        match self.terms.get_mut(&expo) {
            Some(entry) => {
                *entry += coefficient;
                if entry.is_zero() {
                    self.terms.remove(&expo);
                }
            }
            None => {
                self.terms.insert(expo, coefficient);
            }
        }
    }

    fn assert_same_ring(&self, other: &GradedSeries) {
        assert_eq!(
            self.ring, other.ring,
            "series from different rings cannot be combined"
        );
    }

    pub fn add(&self, other: &GradedSeries) -> GradedSeries {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (expo, c) in &other.terms {
            out.add_term(expo.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedSeries) -> GradedSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedSeries {
        GradedSeries {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> GradedSeries {
        if c.is_zero() {
            return self.ring.zero();
        }
        GradedSeries {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        self.assert_same_ring(other);
        let mut out = self.ring.zero();
        for (ea, ca) in &self.terms {
            let da = self.ring.weighted_degree(ea);
            for (eb, cb) in &other.terms {
                if da + self.ring.weighted_degree(eb) > self.ring.trunc {
                    continue;
                }
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(expo, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> GradedSeries {
        let mut out = self.ring.one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a unit.
    /// Writes `a = c·(1 + n)` with `n` of positive order and expands
    /// the geometric series up to truncation.
    pub fn inverse(&self) -> Result<GradedSeries> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotInvertible(format_rat(&c)));
        }
        let unit_inverse = rat(1) / c.clone();
        let mut tail = self.scale(&unit_inverse);
        tail.terms.remove(&vec![0; self.ring.vars.len()]);
        let mut out = self.ring.one();
        let mut power = self.ring.one();
        for _ in 0..self.ring.trunc {
            power = power.mul(&tail).scale(&rat(-1));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out.scale(&unit_inverse))
    }

    pub fn div(&self, other: &GradedSeries) -> Result<GradedSeries> {
        Ok(self.mul(&other.inverse()?))
    }

    /// The same series in a ring truncated at a smaller order.
    pub fn truncate_to(&self, trunc: usize) -> GradedSeries {
        let ring = SeriesRing {
            vars: self.ring.vars.clone(),
            trunc,
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| ring.weighted_degree(e) <= trunc)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        GradedSeries { ring, terms }
    }

    /// The homogeneous part of the given weighted degree.
    pub fn homogeneous_part(&self, degree: usize) -> GradedSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.ring.weighted_degree(e) == degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        GradedSeries {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// The smallest weighted degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| self.ring.weighted_degree(e))
            .min()
    }

    /// The largest weighted degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| self.ring.weighted_degree(e))
            .max()
    }

    /// True when every nonzero term has the given weighted degree.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms
            .keys()
            .all(|e| self.ring.weighted_degree(e) == degree)
    }
}

impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (expo, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (e, v) in expo.iter().zip(&self.ring.vars) {
                match e {
                    0 => {}
                    1 => write!(f, "·{}", v.name)?,
                    _ => write!(f, "·{}^{}", v.name, e)?,
                }
            }
        }
        Ok(())
    }
}

/// Total Chern class of a torus representation with the given weight
/// vectors: the product over weights `w` of `1 + Σ_j w_j·t_j`.
pub fn chern_of_weights(weights: &[Vec<i64>], rank: usize, trunc: usize) -> Result<GradedSeries> {
    let names: Vec<String> = (1..=rank).map(|j| format!("t{j}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = SeriesRing::degree_one(&refs, trunc)?;
    let mut out = ring.one();
    for w in weights {
        if w.len() != rank {
            return Err(Error::InvalidArgument(format!(
                "weight vector {w:?} does not have rank {rank}"
            )));
        }
        let mut factor = ring.one();
        for (j, &wj) in w.iter().enumerate() {
            let mut expo = vec![0u32; rank];
            expo[j] = 1;
            factor.add_term(expo, rat(wj));
        }
        out = out.mul(&factor);
    }
    Ok(out)
}

/// Determinant of the s×s Hankel-type matrix with entry `c_{shift+j-l}`
/// in row `j`, column `l`, under the conventions `c_0 = 1` and
/// `c_{i<0} = 0`. The entry provider is consulted for indices ≥ 1 only.
pub fn hankel_det(
    ring: &SeriesRing,
    entry: impl Fn(usize) -> GradedSeries,
    size: usize,
    shift: i64,
) -> GradedSeries {
    let lookup = |index: i64| -> GradedSeries {
        if index < 0 {
            ring.zero()
        } else if index == 0 {
            ring.one()
        } else {
            entry(index as usize)
        }
    };
    let matrix: Vec<Vec<GradedSeries>> = (0..size)
        .map(|j| {
            (0..size)
                .map(|l| lookup(shift + j as i64 - l as i64))
                .collect()
        })
        .collect();
    determinant(ring, &matrix)
}

fn determinant(ring: &SeriesRing, m: &[Vec<GradedSeries>]) -> GradedSeries {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    // Laplace expansion along the first row
    let mut out = ring.zero();
    for (col, cell) in m[0].iter().enumerate() {
        if cell.is_zero() {
            continue;
        }
        let minor: Vec<Vec<GradedSeries>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cofactor = cell.mul(&determinant(ring, &minor));
        out = if col % 2 == 0 {
            out.add(&cofactor)
        } else {
            out.sub(&cofactor)
        };
    }
    out
}

/// The truncated cohomology ring of `P^n`: polynomials in the
/// hyperplane class `h` modulo `h^(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjRing {
    n: usize,
}

/// An element of the cohomology of `P^n`: coefficients of `h^0 … h^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoly {
    coeffs: Vec<Rat>,
}

impl ProjRing {
    pub fn new(n: usize) -> Self {
        ProjRing { n }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> ProjPoly {
        ProjPoly {
            coeffs: vec![Rat::zero(); self.n + 1],
        }
    }

    pub fn one(&self) -> ProjPoly {
        self.monomial(rat(1), 0)
    }

    /// `c · h^k`; zero when `k > n`.
    pub fn monomial(&self, c: Rat, k: usize) -> ProjPoly {
        let mut p = self.zero();
        if k <= self.n {
            p.coeffs[k] = c;
        }
        p
    }

    pub fn hyperplane(&self) -> ProjPoly {
        self.monomial(rat(1), 1)
    }

    pub fn add(&self, a: &ProjPoly, b: &ProjPoly) -> ProjPoly {
        ProjPoly {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn mul(&self, a: &ProjPoly, b: &ProjPoly) -> ProjPoly {
        let mut out = self.zero();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j > self.n {
                    break;
                }
                out.coeffs[i + j] += x * y;
            }
        }
        out
    }

    pub fn pow(&self, a: &ProjPoly, e: u32) -> ProjPoly {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    /// Inverse in the truncated ring; requires a unit constant term.
    pub fn inverse(&self, a: &ProjPoly) -> Result<ProjPoly> {
        let c = a.coeffs[0].clone();
        if c.is_zero() {
            return Err(Error::NotInvertible(format_rat(&c)));
        }
        let mut inv = self.zero();
        inv.coeffs[0] = rat(1) / c.clone();
        // solve (a·inv)[k] = 0 for k ≥ 1 coefficient by coefficient
        for k in 1..=self.n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                acc += &a.coeffs[i] * &inv.coeffs[k - i];
            }
            inv.coeffs[k] = -acc / c.clone();
        }
        Ok(inv)
    }

    /// Total Chern class of the split bundle `⊕ O(a_j)`.
    pub fn chern_of_split(&self, degrees: &[i64]) -> ProjPoly {
        let mut out = self.one();
        for &a in degrees {
            let factor = self.add(&self.one(), &self.monomial(rat(a), 1));
            out = self.mul(&out, &factor);
        }
        out
    }

    /// Integration over `P^n`: the coefficient of `h^n`.
    pub fn integrate(&self, a: &ProjPoly) -> Rat {
        a.coeffs[self.n].clone()
    }
}

impl ProjPoly {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of the highest nonzero coefficient.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Degree of the lowest nonzero coefficient.
    pub fn bottom_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Human-readable polynomial in `h`, lowest degree first: `3h`, `1 + 2h^2`.
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = format_rat(c);
            let part = match k {
                0 => coeff,
                1 if coeff == "1" => "h".to_string(),
                1 if coeff == "-1" => "-h".to_string(),
                1 => format!("{coeff}h"),
                _ if coeff == "1" => format!("h^{k}"),
                _ if coeff == "-1" => format!("-h^{k}"),
                _ => format!("{coeff}h^{k}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

/// How to treat substitution values whose degrees do not match the
/// variable they replace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreePolicy {
    /// Record a warning and substitute anyway.
    Warn,
    /// Fail with a degree-mismatch error.
    Strict,
}

/// The result of a substitution, with any degree warnings collected.
#[derive(Clone, Debug)]
pub struct Substitution {
    pub value: ProjPoly,
    pub warnings: Vec<String>,
}

/// Substitutes a `ProjPoly` for every variable of the series and
/// evaluates in the cohomology of projective space. A variable of
/// degree `d` is expected to receive a polynomial concentrated in
/// `h`-degree `d`.
pub fn proj_substitute(
    series: &GradedSeries,
    assignment: &BTreeMap<String, ProjPoly>,
    ring: &ProjRing,
    policy: DegreePolicy,
) -> Result<Substitution> {
    let mut warnings = Vec::new();
    let mut images = Vec::with_capacity(series.ring().vars().len());
    for v in series.ring().vars() {
        let image = assignment.get(&v.name).ok_or_else(|| {
            Error::InvalidArgument(format!("no substitution for variable {:?}", v.name))
        })?;
        let pure = image
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || k == v.degree);
        if !pure && !image.is_zero() {
            let message = format!(
                "variable {:?} of degree {} receives mixed-degree value {}",
                v.name,
                v.degree,
                image.display()
            );
            if policy == DegreePolicy::Strict {
                return Err(Error::DegreeMismatch(message));
            }
            warnings.push(message);
        }
        images.push(image.clone());
    }
    let mut value = ring.zero();
    for (expo, c) in series.terms() {
        let mut term = ring.monomial(c.clone(), 0);
        for (e, image) in expo.iter().zip(&images) {
            if *e > 0 {
                term = ring.mul(&term, &ring.pow(image, *e));
            }
        }
        value = ring.add(&value, &term);
    }
    Ok(Substitution { value, warnings })
}

/// Integration over `P^n` after substitution: the `h^n` coefficient.
pub fn proj_integrate(ring: &ProjRing, value: &ProjPoly) -> Rat {
    ring.integrate(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ring_h(trunc: usize) -> SeriesRing {
        SeriesRing::degree_one(&["h"], trunc).unwrap()
    }

    #[test]
    fn geometric_series_inverse() {
        let ring = ring_h(3);
        let one_plus_h = ring.one().add(&ring.var("h").unwrap());
        let inv = one_plus_h.inverse().unwrap();
        let mut expected = ring.one();
        expected.add_term(vec![1], rat(-1));
        expected.add_term(vec![2], rat(1));
        expected.add_term(vec![3], rat(-1));
        assert_eq!(inv, expected);
        assert_eq!(one_plus_h.mul(&inv), ring.one());
    }

    #[test]
    fn non_unit_not_invertible() {
        let ring = ring_h(3);
        assert!(ring.var("h").unwrap().inverse().is_err());
        assert!(ring.zero().inverse().is_err());
    }

    #[test]
    fn chern_quotient_hand_expansion() {
        // c(F)/c(E) with c(E)=1+e1, c(F)=1+f1+f2 at D=2
        let ring = SeriesRing::new(
            vec![
                GradedVariable { name: "e1".into(), degree: 1 },
                GradedVariable { name: "f1".into(), degree: 1 },
                GradedVariable { name: "f2".into(), degree: 2 },
            ],
            2,
        )
        .unwrap();
        let e1 = ring.var("e1").unwrap();
        let f1 = ring.var("f1").unwrap();
        let f2 = ring.var("f2").unwrap();
        let quotient = ring
            .one()
            .add(&f1)
            .add(&f2)
            .div(&ring.one().add(&e1))
            .unwrap();
        let expected = ring
            .one()
            .add(&f1.sub(&e1))
            .add(&f2.sub(&e1.mul(&f1)).add(&e1.mul(&e1)));
        assert_eq!(quotient, expected);
    }

    #[test]
    fn chern_of_weights_examples() {
        let empty = chern_of_weights(&[], 1, 4).unwrap();
        assert_eq!(empty.constant_term(), rat(1));
        assert_eq!(empty.terms().len(), 1);

        let single = chern_of_weights(&[vec![1]], 1, 4).unwrap();
        assert_eq!(single.coefficient(&[0]), rat(1));
        assert_eq!(single.coefficient(&[1]), rat(1));

        let square = chern_of_weights(&[vec![1], vec![1]], 1, 4).unwrap();
        assert_eq!(square.coefficient(&[0]), rat(1));
        assert_eq!(square.coefficient(&[1]), rat(2));
        assert_eq!(square.coefficient(&[2]), rat(1));
    }

    #[test]
    fn whitney_sum() {
        let a = vec![vec![1, 0], vec![2, -1]];
        let b = vec![vec![0, 3]];
        let mut both = a.clone();
        both.extend(b.clone());
        let product = chern_of_weights(&a, 2, 5)
            .unwrap()
            .mul(&chern_of_weights(&b, 2, 5).unwrap());
        assert_eq!(chern_of_weights(&both, 2, 5).unwrap(), product);
    }

    #[test]
    fn hankel_examples() {
        let ring = SeriesRing::chern(4, 6).unwrap();
        let entry = |i: usize| {
            ring.var(&format!("c{i}"))
                .unwrap_or_else(|_| ring.zero())
        };
        assert_eq!(hankel_det(&ring, entry, 0, 5), ring.one());
        assert_eq!(hankel_det(&ring, entry, 1, 1), ring.var("c1").unwrap());
        // det [[c1, c2], [c0, c1]] = c1² − c2
        let expected = ring
            .var("c1")
            .unwrap()
            .mul(&ring.var("c1").unwrap())
            .sub(&ring.var("c2").unwrap());
        assert_eq!(hankel_det(&ring, entry, 2, 1), expected);
    }

    #[test]
    fn truncation_coherence() {
        let ring = ring_h(6);
        let a = ring.one().add(&ring.var("h").unwrap());
        let b = a.inverse().unwrap().mul(&a.pow(3));
        assert_eq!(b.truncate_to(3), {
            let small = ring_h(3);
            let a = small.one().add(&small.var("h").unwrap());
            a.inverse().unwrap().mul(&a.pow(3))
        });
    }

    #[test]
    fn proj_ring_basics() {
        let p2 = ProjRing::new(2);
        let h = p2.hyperplane();
        let one_plus_h = p2.add(&p2.one(), &h);
        let cubed = p2.pow(&one_plus_h, 3);
        assert_eq!(p2.integrate(&cubed), rat(3));

        let inv = p2.inverse(&one_plus_h).unwrap();
        assert_eq!(p2.mul(&inv, &one_plus_h), p2.one());

        assert_eq!(p2.integrate(&p2.one()), rat(0));
    }

    #[test]
    fn substitution_examples() {
        let p1 = ProjRing::new(1);
        let ring = SeriesRing::chern(1, 4).unwrap();
        let c1 = ring.var("c1").unwrap();
        let mut assignment = BTreeMap::new();
        assignment.insert("c1".to_string(), p1.monomial(rat(5), 1));
        let result = proj_substitute(&c1, &assignment, &p1, DegreePolicy::Warn).unwrap();
        assert!(result.warnings.is_empty());
        assert_eq!(p1.integrate(&result.value), rat(5));

        // mixed-degree value triggers the policy
        let mut mixed = BTreeMap::new();
        mixed.insert(
            "c1".to_string(),
            p1.add(&p1.one(), &p1.monomial(rat(5), 1)),
        );
        let lenient = proj_substitute(&c1, &mixed, &p1, DegreePolicy::Warn).unwrap();
        assert_eq!(lenient.warnings.len(), 1);
        assert!(matches!(
            proj_substitute(&c1, &mixed, &p1, DegreePolicy::Strict),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn display_polynomials() {
        let p2 = ProjRing::new(2);
        assert_eq!(p2.monomial(rat(3), 1).display(), "3h");
        assert_eq!(p2.zero().display(), "0");
        assert_eq!(
            p2.add(&p2.one(), &p2.monomial(rat(-2), 2)).display(),
            "1 - 2h^2"
        );
        assert_eq!(p2.hyperplane().display(), "h");
    }

    #[test]
    fn scale_and_homogeneous_parts() {
        let ring = ring_h(4);
        let h = ring.var("h").unwrap();
        let s = ring.one().add(&h.scale(&ratio(3, 2))).add(&h.pow(2));
        assert_eq!(s.homogeneous_part(1), h.scale(&ratio(3, 2)));
        assert_eq!(s.min_degree(), Some(0));
        assert_eq!(s.max_degree(), Some(2));
        assert!(s.homogeneous_part(2).is_homogeneous_of(2));
    }
}
