//! Finite permutation groups with full element enumeration.
//!
//! A [`FiniteGroup`] is the closure of a generator list inside the
//! symmetric group on `{0, …, degree-1}`. Elements are stored in a
//! deterministic order — breadth-first over the generators in input
//! order, each layer sorted by one-line notation — so element ids are
//! stable across runs and can be written to files.
//!
//! On top of the enumeration the module provides centralizers,
//! conjugacy classes, subgroup closures and the enumeration of
//! pairwise-commuting k-tuples `Com(G;k)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Index of an element in a group's deterministic enumeration.
pub type ElemId = usize;

/// A permutation of `{0, …, degree-1}` in one-line notation:
/// `images[x]` is the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from one-line notation, rejecting non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::MalformedPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Permutation from disjoint-cycle data, e.g. `&[&[0, 1, 2]]` for a 3-cycle.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(Error::MalformedPermutation(format!("cycle {cycle:?}")));
                }
                images[from] = to;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// How an element was first reached during enumeration; used to extend
/// generator data (such as an action on atoms) along the homomorphism.
#[derive(Clone, Debug)]
pub(crate) enum Derivation {
    Identity,
    /// element = elements[parent] ∘ generators[gen]
    Product { parent: ElemId, gen: usize },
}

/// Default cap on the number of elements enumerated by closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A fully enumerated finite permutation group.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, ElemId>,
    generators: Vec<Permutation>,
    generator_ids: Vec<ElemId>,
    derivations: Vec<Derivation>,
    inverses: Vec<ElemId>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Closure of the generators with the default element cap.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_capped(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    /// Closure of the generators, failing once more than `cap` elements appear.
    ///
    /// Element 0 is the identity. Enumeration is breadth-first over the
    /// generators in input order; within a BFS layer elements are sorted
    /// by one-line notation, so the ordering is fully deterministic.
    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::MalformedPermutation(format!(
                    "generator degree {} does not match group degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut derivations = vec![Derivation::Identity];
        let mut index = HashMap::new();
        index.insert(identity, 0);

        let mut frontier: Vec<ElemId> = vec![0];
        while !frontier.is_empty() {
            // BTreeMap orders the fresh layer lexicographically.
            let mut layer: BTreeMap<Permutation, Derivation> = BTreeMap::new();
            for &id in &frontier {
                for (gi, gen) in generators.iter().enumerate() {
                    let product = elements[id].compose(gen);
                    if !index.contains_key(&product) && !layer.contains_key(&product) {
                        layer.insert(product, Derivation::Product { parent: id, gen: gi });
                    }
                }
            }
            frontier = Vec::with_capacity(layer.len());
            for (perm, derivation) in layer {
                let id = elements.len();
                if id >= cap {
                    return Err(Error::SizeLimit { cap });
                }
                index.insert(perm.clone(), id);
                elements.push(perm);
                derivations.push(derivation);
                frontier.push(id);
            }
        }

        let inverses = elements
            .iter()
            .map(|p| index[&p.inverse()])
            .collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            degree,
            elements,
            index,
            generators,
            generator_ids,
            derivations,
            inverses,
        })
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n <= 1 {
            return Self::from_generators(n.max(1), vec![]);
        }
        let transposition = Permutation::from_cycles(n, &[&[0, 1]])?;
        let cycle = Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])?;
        Self::from_generators(n, vec![transposition, cycle])
    }

    /// Cyclic group generated by an n-cycle on `n` points.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n <= 1 {
            return Self::from_generators(n.max(1), vec![]);
        }
        let cycle = Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()])?;
        Self::from_generators(n, vec![cycle])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_id(&self) -> ElemId {
        0
    }

    pub fn element(&self, id: ElemId) -> Result<&Permutation> {
        self.elements.get(id).ok_or(Error::ElementIndex {
            id,
            order: self.order(),
        })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[ElemId] {
        &self.generator_ids
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElemId> {
        self.index.get(p).copied()
    }

    /// Product of two elements by id.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverses[a]
    }

    pub fn commutes(&self, a: ElemId, b: ElemId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub(crate) fn derivation(&self, id: ElemId) -> &Derivation {
        &self.derivations[id]
    }

    /// Extends per-generator data to every element along first-discovery
    /// products: `value(e) = unit`, `value(g·s) = combine(value(g), gen_value(s))`.
    pub(crate) fn extend_by_homomorphism<T: Clone>(
        &self,
        unit: T,
        gen_values: &[T],
        combine: impl Fn(&T, &T) -> T,
    ) -> Vec<T> {
        let mut values: Vec<T> = Vec::with_capacity(self.order());
        for id in 0..self.order() {
            let v = match self.derivation(id) {
                Derivation::Identity => unit.clone(),
                Derivation::Product { parent, gen } => {
                    combine(&values[*parent], &gen_values[*gen])
                }
            };
            values.push(v);
        }
        values
    }

    /// The centralizer `C(g) = {h : hg = gh}`.
    pub fn centralizer(&self, g: ElemId) -> Result<Subgroup> {
        if g >= self.order() {
            return Err(Error::ElementIndex {
                id: g,
                order: self.order(),
            });
        }
        let member_ids = (0..self.order())
            .filter(|&h| self.commutes(h, g))
            .collect();
        Ok(Subgroup { member_ids })
    }

    /// Conjugacy classes as sorted id sets, ordered by minimal member.
    /// Each class is the closure of its representative under
    /// conjugation by the generators.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElemId>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut class = vec![g];
            assigned[g] = true;
            let mut stack = vec![g];
            while let Some(x) = stack.pop() {
                for &s in &self.generator_ids {
                    let y = self.mul(self.mul(s, x), self.inv(s));
                    if !assigned[y] {
                        assigned[y] = true;
                        class.push(y);
                        stack.push(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Subgroup generated inside this group by the given element ids.
    pub fn subgroup_from(&self, gens: &[ElemId]) -> Result<Subgroup> {
        for &g in gens {
            if g >= self.order() {
                return Err(Error::ElementIndex {
                    id: g,
                    order: self.order(),
                });
            }
        }
        let mut members = vec![false; self.order()];
        members[self.identity_id()] = true;
        let mut stack: Vec<ElemId> = vec![self.identity_id()];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    stack.push(y);
                }
            }
        }
        let member_ids = (0..self.order()).filter(|&i| members[i]).collect();
        Ok(Subgroup { member_ids })
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            member_ids: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            member_ids: vec![self.identity_id()],
        }
    }

    /// Number of pairwise-commuting k-tuples with entries in `within`
    /// (the whole group when `None`). `k = 0` counts the empty tuple.
    pub fn commuting_tuple_count(&self, k: usize, within: Option<&Subgroup>) -> BigUint {
        let candidates: Vec<ElemId> = match within {
            Some(sub) => sub.member_ids.clone(),
            None => (0..self.order()).collect(),
        };
        let mut memo: HashMap<(Vec<ElemId>, usize), BigUint> = HashMap::new();
        self.count_tuples(&candidates, k, &mut memo)
    }

    fn count_tuples(
        &self,
        candidates: &[ElemId],
        k: usize,
        memo: &mut HashMap<(Vec<ElemId>, usize), BigUint>,
    ) -> BigUint {
        if k == 0 {
            return BigUint::one();
        }
        if candidates.is_empty() {
            return BigUint::zero();
        }
        let key = (candidates.to_vec(), k);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for &g in candidates {
            // Restrict the running candidate set to the centralizer of g:
            // the intersection is again a subgroup.
            let next: Vec<ElemId> = candidates
                .iter()
                .copied()
                .filter(|&h| self.commutes(h, g))
                .collect();
            total += self.count_tuples(&next, k - 1, memo);
        }
        memo.insert(key, total.clone());
        total
    }

    /// Iterator over all pairwise-commuting k-tuples in deterministic
    /// (lexicographic in element ids) order.
    pub fn commuting_tuples(&self, k: usize, within: Option<&Subgroup>) -> CommutingTuples<'_> {
        let candidates: Vec<ElemId> = match within {
            Some(sub) => sub.member_ids.clone(),
            None => (0..self.order()).collect(),
        };
        CommutingTuples::new(self, candidates, k)
    }
}

/// Depth-first enumeration of commuting tuples with centralizer pruning:
/// candidates for the next entry are restricted to the simultaneous
/// centralizer of the prefix.
pub struct CommutingTuples<'g> {
    group: &'g FiniteGroup,
    k: usize,
    // stack[d] = (candidate list at depth d, next position to try)
    stack: Vec<(Vec<ElemId>, usize)>,
    prefix: Vec<ElemId>,
    emitted_empty: bool,
    done: bool,
}

impl<'g> CommutingTuples<'g> {
    fn new(group: &'g FiniteGroup, candidates: Vec<ElemId>, k: usize) -> Self {
        CommutingTuples {
            group,
            k,
            stack: vec![(candidates, 0)],
            prefix: Vec::new(),
            emitted_empty: false,
            done: false,
        }
    }
}

impl<'g> Iterator for CommutingTuples<'g> {
    type Item = Vec<ElemId>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.k == 0 {
            self.done = true;
            if !self.emitted_empty {
                self.emitted_empty = true;
                return Some(Vec::new());
            }
            return None;
        }
        loop {
            let depth = self.prefix.len();
            let (candidates, pos) = match self.stack.last_mut() {
                Some(top) => top,
                None => {
                    self.done = true;
                    return None;
                }
            };
            if *pos >= candidates.len() {
                self.stack.pop();
                self.prefix.pop();
                continue;
            }
            let g = candidates[*pos];
            *pos += 1;
            if depth + 1 == self.k {
                let mut tuple = self.prefix.clone();
                tuple.push(g);
                return Some(tuple);
            }
            let next: Vec<ElemId> = self.stack.last().unwrap().0
                .iter()
                .copied()
                .filter(|&h| self.group.commutes(h, g))
                .collect();
            self.prefix.push(g);
            self.stack.push((next, 0));
        }
    }
}

/// A subgroup stored as a sorted set of element ids of its parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    member_ids: Vec<ElemId>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.member_ids.len()
    }

    pub fn member_ids(&self) -> &[ElemId] {
        &self.member_ids
    }

    pub fn contains(&self, id: ElemId) -> bool {
        self.member_ids.binary_search(&id).is_ok()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let member_ids = self
            .member_ids
            .iter()
            .copied()
            .filter(|&id| other.contains(id))
            .collect();
        Subgroup { member_ids }
    }

    /// The conjugate subgroup `g H g⁻¹`.
    pub fn conjugate(&self, group: &FiniteGroup, g: ElemId) -> Subgroup {
        let gi = group.inv(g);
        let mut member_ids: Vec<ElemId> = self
            .member_ids
            .iter()
            .map(|&h| group.mul(group.mul(g, h), gi))
            .collect();
        member_ids.sort_unstable();
        Subgroup { member_ids }
    }

    /// Checks closure under the parent's product and inverse.
    pub fn is_subgroup_of(&self, group: &FiniteGroup) -> bool {
        if !self.contains(group.identity_id()) {
            return false;
        }
        if self.member_ids.iter().any(|&id| id >= group.order()) {
            return false;
        }
        for &a in &self.member_ids {
            if !self.contains(group.inv(a)) {
                return false;
            }
            for &b in &self.member_ids {
                if !self.contains(group.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}
