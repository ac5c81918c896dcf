//! Combinatorial models of varieties with a finite group action.
//!
//! A [`GSpace`] is a finite list of isotropy-constant strata, called
//! atoms. Every point of an atom has the same stabilizer, and the
//! setwise stabilizer of the atom equals that subgroup, so fixed-point
//! sets of group elements are unions of atoms and their Euler
//! characteristics are finite sums. A [`Space`] is the same thing
//! without an action (quotients live here).
//!
//! `chi` is the compactly-supported Euler characteristic of the
//! stratum, additive over disjoint strata.

use crate::error::{Error, Result};
use crate::group::{ElemId, FiniteGroup, Subgroup};

/// Read-only interface shared by [`GSpace`] and [`Space`].
pub trait AtomSpace {
    fn atom_count(&self) -> usize;
    fn atom_id(&self, index: usize) -> &str;
    fn atom_chi(&self, index: usize) -> i64;
    fn atom_index(&self, id: &str) -> Option<usize>;

    /// Euler characteristic of the whole space: the sum over atoms.
    fn euler(&self) -> i64 {
        (0..self.atom_count()).map(|i| self.atom_chi(i)).sum()
    }
}

/// A single isotropy-constant stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub id: String,
    pub chi: i64,
    pub isotropy: Subgroup,
}

/// An atom of a quotient or other action-free space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceAtom {
    pub id: String,
    pub chi: i64,
}

/// A finite stratified space without a group action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    atoms: Vec<SpaceAtom>,
}

impl Space {
    pub fn new(atoms: Vec<SpaceAtom>) -> Result<Self> {
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::DuplicateAtom(a.id.clone()));
            }
        }
        Ok(Space { atoms })
    }

    /// A single point of Euler characteristic 1.
    pub fn point() -> Self {
        Space {
            atoms: vec![SpaceAtom {
                id: "pt".to_string(),
                chi: 1,
            }],
        }
    }

    pub fn atoms(&self) -> &[SpaceAtom] {
        &self.atoms
    }
}

impl AtomSpace for Space {
    fn atom_count(&self) -> usize {
        self.atoms.len()
    }
    fn atom_id(&self, index: usize) -> &str {
        &self.atoms[index].id
    }
    fn atom_chi(&self, index: usize) -> i64 {
        self.atoms[index].chi
    }
    fn atom_index(&self, id: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.id == id)
    }
}

/// First violated invariant of a [`GSpace`], with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceViolation {
    #[error("action of element {element} on atoms is not a permutation")]
    ActionNotPermutation { element: ElemId },
    #[error("action is not a homomorphism: act({g}·{h}) differs from act({g})∘act({h})")]
    NotHomomorphism { g: ElemId, h: ElemId },
    #[error("isotropy of atom {atom:?} is not a subgroup")]
    IsotropyNotSubgroup { atom: String },
    #[error(
        "isotropy-exactness fails at atom {atom:?} and element {element}: \
         fixes-atom = {fixes}, in-isotropy = {in_isotropy}"
    )]
    IsotropyExactness {
        atom: String,
        element: ElemId,
        fixes: bool,
        in_isotropy: bool,
    },
    #[error("isotropy of {image:?} is not the conjugate of isotropy of {atom:?} by element {element}")]
    IsotropyNotEquivariant {
        atom: String,
        image: String,
        element: ElemId,
    },
    #[error("chi is not constant on the orbit of {atom:?}: atom {other:?} differs")]
    ChiNotOrbitConstant { atom: String, other: String },
}

/// A finite group acting on a list of isotropy-constant atoms.
///
/// The action is stored per generator and extended to every element by
/// the homomorphism property along the group's enumeration order.
#[derive(Clone, Debug)]
pub struct GSpace {
    group: FiniteGroup,
    atoms: Vec<Atom>,
    /// `action[g][a]` = index of the image of atom `a` under element `g`.
    action: Vec<Vec<usize>>,
}

fn is_permutation_of(v: &[usize], n: usize) -> bool {
    if v.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in v {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl GSpace {
    /// Builds from per-generator atom permutations (one per group
    /// generator, in generator input order).
    pub fn new(
        group: FiniteGroup,
        atoms: Vec<Atom>,
        generator_actions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if generator_actions.len() != group.generators().len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} generator actions, got {}",
                group.generators().len(),
                generator_actions.len()
            )));
        }
        let n = atoms.len();
        for ga in &generator_actions {
            if !is_permutation_of(ga, n) {
                return Err(Error::InvalidArgument(format!(
                    "generator action {ga:?} is not a permutation of {n} atoms"
                )));
            }
        }
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::DuplicateAtom(a.id.clone()));
            }
        }
        let identity: Vec<usize> = (0..n).collect();
        let action = group.extend_by_homomorphism(identity, &generator_actions, |a, b| {
            // value(g·s) = act(g)∘act(s)
            b.iter().map(|&x| a[x]).collect()
        });
        Ok(GSpace {
            group,
            atoms,
            action,
        })
    }

    /// Builds directly from a full per-element action table.
    pub(crate) fn from_full_action(
        group: FiniteGroup,
        atoms: Vec<Atom>,
        action: Vec<Vec<usize>>,
    ) -> Self {
        debug_assert_eq!(action.len(), group.order());
        GSpace {
            group,
            atoms,
            action,
        }
    }

    /// A point with full isotropy and chi 1: the unit for [`GSpace::product`].
    pub fn point(group: FiniteGroup) -> Self {
        let atom = Atom {
            id: "pt".to_string(),
            chi: 1,
            isotropy: group.full_subgroup(),
        };
        let action = vec![vec![0]; group.order()];
        GSpace {
            group,
            atoms: vec![atom],
            action,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Image of atom index `a` under element `g`.
    pub fn act(&self, g: ElemId, a: usize) -> Result<usize> {
        let row = self.action.get(g).ok_or(Error::ElementIndex {
            id: g,
            order: self.group.order(),
        })?;
        row.get(a).copied().ok_or(Error::AtomIndex {
            index: a,
            count: self.atoms.len(),
        })
    }

    /// Checks all model invariants and reports the first violation.
    ///
    /// The homomorphism law is checked on all element pairs when
    /// `|G|² · #atoms` stays within a fixed budget; otherwise on all
    /// (element, generator) pairs plus deterministic random spot checks.
    pub fn validate(&self) -> std::result::Result<(), SpaceViolation> {
        let n = self.atoms.len();
        let order = self.group.order();

        for g in 0..order {
            if !is_permutation_of(&self.action[g], n) {
                return Err(SpaceViolation::ActionNotPermutation { element: g });
            }
        }

        let compose_ok = |g: ElemId, h: ElemId| -> bool {
            let gh = self.group.mul(g, h);
            (0..n).all(|a| self.action[gh][a] == self.action[g][self.action[h][a]])
        };
        let budget = 2_000_000usize;
        if order * order * n.max(1) <= budget {
            for g in 0..order {
                for h in 0..order {
                    if !compose_ok(g, h) {
                        return Err(SpaceViolation::NotHomomorphism { g, h });
                    }
                }
            }
        } else {
            for g in 0..order {
                for &h in self.group.generator_ids() {
                    if !compose_ok(g, h) {
                        return Err(SpaceViolation::NotHomomorphism { g, h });
                    }
                }
            }
            // fixed-seed xorshift keeps the spot checks deterministic
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..1024 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let g = (state % order as u64) as usize;
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let h = (state % order as u64) as usize;
                if !compose_ok(g, h) {
                    return Err(SpaceViolation::NotHomomorphism { g, h });
                }
            }
        }

        for atom in &self.atoms {
            if !atom.isotropy.is_subgroup_of(&self.group) {
                return Err(SpaceViolation::IsotropyNotSubgroup {
                    atom: atom.id.clone(),
                });
            }
        }

        for (a, atom) in self.atoms.iter().enumerate() {
            for g in 0..order {
                let fixes = self.action[g][a] == a;
                let in_isotropy = atom.isotropy.contains(g);
                if fixes != in_isotropy {
                    return Err(SpaceViolation::IsotropyExactness {
                        atom: atom.id.clone(),
                        element: g,
                        fixes,
                        in_isotropy,
                    });
                }
            }
        }

        for (a, atom) in self.atoms.iter().enumerate() {
            for g in 0..order {
                let image = self.action[g][a];
                let expected = atom.isotropy.conjugate(&self.group, g);
                if self.atoms[image].isotropy != expected {
                    return Err(SpaceViolation::IsotropyNotEquivariant {
                        atom: atom.id.clone(),
                        image: self.atoms[image].id.clone(),
                        element: g,
                    });
                }
            }
        }

        // chi must be constant on orbits: an element maps its atom
        // bijectively onto the image atom, so the strata it models are
        // homeomorphic. Quotients and the Burnside identity rely on this.
        for orbit in self.orbits() {
            let chi = self.atoms[orbit[0]].chi;
            for &a in &orbit[1..] {
                if self.atoms[a].chi != chi {
                    return Err(SpaceViolation::ChiNotOrbitConstant {
                        atom: self.atoms[orbit[0]].id.clone(),
                        other: self.atoms[a].id.clone(),
                    });
                }
            }
        }

        Ok(())
    }

    /// Euler characteristic of the simultaneous fixed set of the tuple:
    /// the sum of `chi` over atoms whose isotropy contains every entry.
    /// The empty tuple gives the Euler characteristic of the space.
    pub fn fixed_chi(&self, tuple: &[ElemId]) -> Result<i64> {
        for &g in tuple {
            if g >= self.group.order() {
                return Err(Error::ElementIndex {
                    id: g,
                    order: self.group.order(),
                });
            }
        }
        Ok(self
            .atoms
            .iter()
            .filter(|a| tuple.iter().all(|&g| a.isotropy.contains(g)))
            .map(|a| a.chi)
            .sum())
    }

    /// Atom indices of the simultaneous fixed set.
    pub fn fixed_atoms(&self, tuple: &[ElemId]) -> Vec<usize> {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| tuple.iter().all(|&g| a.isotropy.contains(g)))
            .map(|(i, _)| i)
            .collect()
    }

    /// Orbits of atoms under the action, each sorted, ordered by
    /// minimal member index.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.atoms.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(a) = stack.pop() {
                orbit.push(a);
                for g in 0..self.group.order() {
                    let b = self.action[g][a];
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// The quotient space: one atom per orbit, carrying the id and chi
    /// of the minimal-index representative.
    pub fn quotient(&self) -> Space {
        let atoms = self
            .orbits()
            .into_iter()
            .map(|orbit| {
                let rep = &self.atoms[orbit[0]];
                SpaceAtom {
                    id: rep.id.clone(),
                    chi: rep.chi,
                }
            })
            .collect();
        Space { atoms }
    }

    /// Product with the diagonal action of the common group. Atoms are
    /// pairs in row-major order, chi multiplies, isotropies intersect.
    pub fn product(&self, other: &GSpace) -> Result<GSpace> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                "product requires the same group on both factors".to_string(),
            ));
        }
        let m = other.atoms.len();
        let mut atoms = Vec::with_capacity(self.atoms.len() * m);
        for a in &self.atoms {
            for b in &other.atoms {
                atoms.push(Atom {
                    id: format!("({},{})", a.id, b.id),
                    chi: a.chi * b.chi,
                    isotropy: a.isotropy.intersect(&b.isotropy),
                });
            }
        }
        let action = (0..self.group.order())
            .map(|g| {
                let mut row = Vec::with_capacity(atoms.len());
                for i in 0..self.atoms.len() {
                    for j in 0..m {
                        row.push(self.action[g][i] * m + other.action[g][j]);
                    }
                }
                row
            })
            .collect();
        Ok(GSpace::from_full_action(self.group.clone(), atoms, action))
    }
}

impl AtomSpace for GSpace {
    fn atom_count(&self) -> usize {
        self.atoms.len()
    }
    fn atom_id(&self, index: usize) -> &str {
        &self.atoms[index].id
    }
    fn atom_chi(&self, index: usize) -> i64 {
        self.atoms[index].chi
    }
    fn atom_index(&self, id: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.id == id)
    }
}
