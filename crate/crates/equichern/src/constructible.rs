//! Constructible functions and Euler-integration pushforward.
//!
//! A [`ConstructibleFunction`] assigns one rational value to each atom
//! of a space. A [`CellMap`] is an atom-to-atom map carrying declared
//! fiber Euler characteristics; pushing a function forward along it
//! integrates against the Euler characteristic measure:
//! `(f_*α)(B) = Σ_{A ↦ B} α(A)·χ(fiber over B at A)`.
//!
//! Fiber data is declared, not inferred — the combinatorial model
//! cannot reconstruct fiber topology. Construction checks the declared
//! values against `chi(A) = fiber_chi(A) · chi(image(A))` whenever the
//! image's chi is nonzero; when it is zero the declaration is accepted
//! as given.

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gspace::{AtomSpace, GSpace, Space};
use crate::rational::{rat, Rat};

/// A rational-valued function on the atoms of a space, stored by atom index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructibleFunction {
    values: Vec<Rat>,
}

impl ConstructibleFunction {
    pub fn from_values(values: Vec<Rat>) -> Self {
        ConstructibleFunction { values }
    }

    /// The zero function.
    pub fn zero(space: &impl AtomSpace) -> Self {
        ConstructibleFunction {
            values: vec![Rat::zero(); space.atom_count()],
        }
    }

    /// The characteristic function of the whole space.
    pub fn ones(space: &impl AtomSpace) -> Self {
        ConstructibleFunction {
            values: vec![rat(1); space.atom_count()],
        }
    }

    /// Indicator of a set of atoms, given by id.
    pub fn indicator(space: &impl AtomSpace, atom_ids: &[&str]) -> Result<Self> {
        let mut values = vec![Rat::zero(); space.atom_count()];
        for id in atom_ids {
            let index = space
                .atom_index(id)
                .ok_or_else(|| Error::UnknownAtom(id.to_string()))?;
            values[index] = rat(1);
        }
        Ok(ConstructibleFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn value(&self, index: usize) -> Result<&Rat> {
        self.values.get(index).ok_or(Error::AtomIndex {
            index,
            count: self.values.len(),
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        ConstructibleFunction {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    /// Integral against the Euler characteristic measure: `Σ α(A)·chi(A)`.
    pub fn integral(&self, space: &impl AtomSpace) -> Result<Rat> {
        self.check_space(space)?;
        Ok(self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| v * rat(space.atom_chi(i)))
            .sum())
    }

    /// True when the value is constant on every atom orbit.
    pub fn is_orbit_constant(&self, space: &GSpace) -> bool {
        self.values.len() == space.atom_count()
            && space.orbits().iter().all(|orbit| {
                orbit[1..]
                    .iter()
                    .all(|&a| self.values[a] == self.values[orbit[0]])
            })
    }

    fn check_space(&self, space: &impl AtomSpace) -> Result<()> {
        if self.values.len() != space.atom_count() {
            return Err(Error::SpaceMismatch(format!(
                "function has {} values, space has {} atoms",
                self.values.len(),
                space.atom_count()
            )));
        }
        Ok(())
    }
}

impl Add for &ConstructibleFunction {
    type Output = ConstructibleFunction;
    fn add(self, rhs: &ConstructibleFunction) -> ConstructibleFunction {
        assert_eq!(self.values.len(), rhs.values.len(), "space mismatch");
        ConstructibleFunction {
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ConstructibleFunction {
    type Output = ConstructibleFunction;
    fn sub(self, rhs: &ConstructibleFunction) -> ConstructibleFunction {
        assert_eq!(self.values.len(), rhs.values.len(), "space mismatch");
        ConstructibleFunction {
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ConstructibleFunction {
    type Output = ConstructibleFunction;
    fn neg(self) -> ConstructibleFunction {
        ConstructibleFunction {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

/// An atom-to-atom map with declared fiber Euler characteristics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap {
    source_len: usize,
    target_len: usize,
    image: Vec<usize>,
    fiber_chi: Vec<Rat>,
}

impl CellMap {
    /// Builds a map, checking image bounds and the fiber consistency
    /// law `chi(A) = fiber_chi(A)·chi(image(A))` wherever `chi(image(A)) ≠ 0`.
    pub fn new(
        source: &impl AtomSpace,
        target: &impl AtomSpace,
        image: Vec<usize>,
        fiber_chi: Vec<Rat>,
    ) -> Result<Self> {
        if image.len() != source.atom_count() || fiber_chi.len() != source.atom_count() {
            return Err(Error::SpaceMismatch(format!(
                "map data has {} images / {} fibers for {} source atoms",
                image.len(),
                fiber_chi.len(),
                source.atom_count()
            )));
        }
        for (a, &b) in image.iter().enumerate() {
            if b >= target.atom_count() {
                return Err(Error::AtomIndex {
                    index: b,
                    count: target.atom_count(),
                });
            }
            let target_chi = rat(target.atom_chi(b));
            if !target_chi.is_zero() {
                let expected = rat(source.atom_chi(a));
                let declared = &fiber_chi[a] * &target_chi;
                if declared != expected {
                    return Err(Error::MapInconsistent(format!(
                        "atom {:?}: chi {} ≠ fiber {} · chi(image) {}",
                        source.atom_id(a),
                        source.atom_chi(a),
                        crate::rational::format_rat(&fiber_chi[a]),
                        target.atom_chi(b),
                    )));
                }
            }
        }
        Ok(CellMap {
            source_len: source.atom_count(),
            target_len: target.atom_count(),
            image,
            fiber_chi,
        })
    }

    fn from_parts(source_len: usize, target_len: usize, image: Vec<usize>, fiber_chi: Vec<Rat>) -> Self {
        CellMap {
            source_len,
            target_len,
            image,
            fiber_chi,
        }
    }

    /// The identity map of a space (fiber chi ≡ 1).
    pub fn identity(space: &impl AtomSpace) -> Self {
        let n = space.atom_count();
        CellMap::from_parts(n, n, (0..n).collect(), vec![rat(1); n])
    }

    /// The map to a point, with `fiber_chi(A) = chi(A)`; pushing forward
    /// along it computes the integral.
    pub fn to_point(space: &impl AtomSpace) -> (Space, Self) {
        let point = Space::point();
        let n = space.atom_count();
        let fiber_chi = (0..n).map(|i| rat(space.atom_chi(i))).collect();
        (
            point,
            CellMap::from_parts(n, 1, vec![0; n], fiber_chi),
        )
    }

    /// The quotient projection of a G-space onto its orbit space
    /// (fiber chi ≡ 1: each atom maps bijectively onto its orbit atom).
    pub fn quotient_projection(space: &GSpace) -> (Space, Self) {
        let orbits = space.orbits();
        let quotient = space.quotient();
        let mut image = vec![0; space.atom_count()];
        for (o, orbit) in orbits.iter().enumerate() {
            for &a in orbit {
                image[a] = o;
            }
        }
        let map = CellMap::from_parts(
            space.atom_count(),
            quotient.atom_count(),
            image,
            vec![rat(1); space.atom_count()],
        );
        (quotient, map)
    }

    /// Projection of a product space onto its first factor;
    /// `fiber_chi(A,B) = chi(B)`.
    pub fn first_projection(x: &impl AtomSpace, y: &impl AtomSpace) -> Self {
        let m = y.atom_count();
        let n = x.atom_count() * m;
        let mut image = Vec::with_capacity(n);
        let mut fiber_chi = Vec::with_capacity(n);
        for i in 0..x.atom_count() {
            for j in 0..m {
                image.push(i);
                fiber_chi.push(rat(y.atom_chi(j)));
            }
        }
        CellMap::from_parts(n, x.atom_count(), image, fiber_chi)
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn fiber_chi(&self) -> &[Rat] {
        &self.fiber_chi
    }

    /// Euler-integration pushforward:
    /// `(f_*α)(B) = Σ_{A : image(A)=B} α(A)·fiber_chi(A)`.
    pub fn pushforward(&self, alpha: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        if alpha.len() != self.source_len {
            return Err(Error::SpaceMismatch(format!(
                "function on {} atoms pushed along map with {} source atoms",
                alpha.len(),
                self.source_len
            )));
        }
        let mut values = vec![Rat::zero(); self.target_len];
        for (a, &b) in self.image.iter().enumerate() {
            values[b] += &alpha.values[a] * &self.fiber_chi[a];
        }
        Ok(ConstructibleFunction { values })
    }

    /// Pullback by composition: `(f^*β)(A) = β(image(A))`.
    pub fn pullback(&self, beta: &ConstructibleFunction) -> Result<ConstructibleFunction> {
        if beta.len() != self.target_len {
            return Err(Error::SpaceMismatch(format!(
                "function on {} atoms pulled back along map with {} target atoms",
                beta.len(),
                self.target_len
            )));
        }
        let values = self
            .image
            .iter()
            .map(|&b| beta.values[b].clone())
            .collect();
        Ok(ConstructibleFunction { values })
    }

    /// Composite `self ∘ earlier` (apply `earlier` first). Fiber data
    /// multiplies along the chain, which makes pushforward functorial.
    pub fn compose(&self, earlier: &CellMap) -> Result<CellMap> {
        if earlier.target_len != self.source_len {
            return Err(Error::SpaceMismatch(format!(
                "composition: inner map targets {} atoms, outer map expects {}",
                earlier.target_len, self.source_len
            )));
        }
        let image = earlier.image.iter().map(|&mid| self.image[mid]).collect();
        let fiber_chi = earlier
            .image
            .iter()
            .enumerate()
            .map(|(a, &mid)| &earlier.fiber_chi[a] * &self.fiber_chi[mid])
            .collect();
        Ok(CellMap::from_parts(
            earlier.source_len,
            self.target_len,
            image,
            fiber_chi,
        ))
    }
}

/// Exterior product: value on the pair atom `(A,B)` (row-major order of
/// [`GSpace::product`]) is `α(A)·β(B)`.
pub fn cross(
    alpha: &ConstructibleFunction,
    beta: &ConstructibleFunction,
) -> ConstructibleFunction {
    let mut values = Vec::with_capacity(alpha.len() * beta.len());
    for a in alpha.values() {
        for b in beta.values() {
            values.push(a * b);
        }
    }
    ConstructibleFunction { values }
}
