//! Canonical constructible functions and orbifold Euler characteristics.
//!
//! For a finite group action the k-th canonical constructible function
//! sends a point to the number of pairwise-commuting k-tuples inside
//! its stabilizer; dividing by the group order gives the rational
//! quotient function (k = 1) and orbifold function (k = 2). Integrating
//! yields the orbifold Euler characteristics of all orders,
//!
//! ```text
//! χ^(k)(X; G) = (1/|G|) · Σ over commuting k-tuples of χ(X^{g_1,…,g_k}),
//! ```
//!
//! with k = 1 recovering χ(X/G).
//!
//! Cartesian powers X^n acted on by subgroups of S_n need a dedicated
//! backend: the factor-permuting cells are not isotropy-constant, but
//! the simultaneous fixed set of a tuple is a power of X, one factor
//! per orbit of the generated subgroup, so
//! `χ((X^n)^{g_1,…,g_k}) = χ(X)^(number of orbits)`. This is what the
//! symmetric-product generating functions are built from.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::constructible::{CellMap, ConstructibleFunction};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::gspace::{GSpace, Space};
use crate::rational::{rat, Rat};

/// The k-th canonical constructible function: value on an atom is the
/// number of commuting k-tuples inside its isotropy subgroup. k = 0
/// gives the constant 1 and k = 1 the stabilizer order.
pub fn canonical_function(space: &GSpace, k: usize) -> ConstructibleFunction {
    let group = space.group();
    let values = space
        .atoms()
        .iter()
        .map(|atom| {
            let count = group.commuting_tuple_count(k, Some(&atom.isotropy));
            Rat::from_integer(BigInt::from(count))
        })
        .collect();
    ConstructibleFunction::from_values(values)
}

/// The rational canonical function: [`canonical_function`] divided by
/// the group order. k = 1 is the quotient function `1_quo`, k = 2 the
/// orbifold function `1_orb`.
pub fn quo_orb_function(space: &GSpace, k: usize) -> ConstructibleFunction {
    let order = rat(space.group().order() as i64);
    canonical_function(space, k).scale(&(rat(1) / order))
}

/// The k-th orbifold Euler characteristic, computed two independent
/// ways that must agree exactly: as the integral of the rational
/// canonical function, and as the normalized sum of fixed-set Euler
/// characteristics over all commuting k-tuples.
pub fn orbifold_euler(space: &GSpace, k: usize) -> Rat {
    let group = space.group();
    let via_function = quo_orb_function(space, k)
        .integral(space)
        .expect("function built on the same space");

    let mut tuple_sum = Rat::zero();
    for tuple in group.commuting_tuples(k, None) {
        tuple_sum += rat(space.fixed_chi(&tuple).expect("ids from the group"));
    }
    let via_tuples = tuple_sum / rat(group.order() as i64);

    assert_eq!(
        via_function, via_tuples,
        "canonical-function route and commuting-tuple route disagree"
    );
    via_function
}

/// Pushes the quotient function forward along the orbit projection.
/// The result is the constant function 1 on the quotient.
pub fn quotient_pushforward_check(space: &GSpace) -> (Space, ConstructibleFunction) {
    let (quotient, projection) = CellMap::quotient_projection(space);
    let pushed = projection
        .pushforward(&quo_orb_function(space, 1))
        .expect("function built on the same space");
    (quotient, pushed)
}

/// Degree of the zeroth component of the associated class: the
/// integral of the function over the space.
pub fn degree_c0(space: &GSpace, alpha: &ConstructibleFunction) -> Result<Rat> {
    alpha.integral(space)
}

/// Number of orbits of the subgroup of S_n generated by `gens` on
/// `{0,…,n-1}`: connected components under the generator images.
fn orbit_count(n: usize, gens: &[&Permutation]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let a = find(&mut parent, x);
            let b = find(&mut parent, g.apply(x));
            if a != b {
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

/// Euler characteristic of the fixed set of a permutation subgroup on
/// the n-th power of a space of Euler characteristic `chi_x`:
/// `chi_x` raised to the number of orbits of the generated subgroup.
pub fn power_fixed_chi(chi_x: i64, n: usize, subgroup_gens: &[Permutation]) -> Result<BigInt> {
    for g in subgroup_gens {
        if g.degree() != n {
            return Err(Error::MalformedPermutation(format!(
                "generator degree {} does not match power {}",
                g.degree(),
                n
            )));
        }
    }
    let gens: Vec<&Permutation> = subgroup_gens.iter().collect();
    Ok(BigInt::from(chi_x).pow(orbit_count(n, &gens) as u32))
}

/// The k-th orbifold Euler characteristic of `X^n` under a permutation
/// group (all of S_n when `group` is `None`):
/// `(1/|Γ|) Σ over commuting k-tuples in Γ of chi_x^(orbits of the tuple)`.
///
/// The sum runs over conjugacy-class representatives of the first tuple
/// entry, weighted by class size — the orbit count is conjugation-
/// invariant — and the remaining entries walk the centralizer chain.
pub fn power_orbifold_euler(
    chi_x: i64,
    n: usize,
    k: usize,
    group: Option<&FiniteGroup>,
) -> Result<Rat> {
    let owned;
    let gamma = match group {
        Some(g) => {
            if g.degree() != n {
                return Err(Error::GroupMismatch(format!(
                    "group of degree {} acting on power {}",
                    g.degree(),
                    n
                )));
            }
            g
        }
        None => {
            owned = FiniteGroup::symmetric(n)?;
            &owned
        }
    };

    let total = if k == 0 {
        // one empty tuple fixing everything: chi(X^n) = chi_x^n
        Rat::from_integer(BigInt::from(chi_x).pow(n as u32)) * rat(gamma.order() as i64)
    } else {
        let mut sum = Rat::zero();
        for class in gamma.conjugacy_classes() {
            let rep = class[0];
            let weight = rat(class.len() as i64);
            if k == 1 {
                let gens = vec![gamma.element(rep)?];
                let chi = BigInt::from(chi_x).pow(orbit_count(n, &gens) as u32);
                sum += &weight * Rat::from_integer(chi);
                continue;
            }
            let centralizer = gamma.centralizer(rep)?;
            for rest in gamma.commuting_tuples(k - 1, Some(&centralizer)) {
                let mut gens: Vec<&Permutation> = vec![gamma.element(rep)?];
                for &g in &rest {
                    gens.push(gamma.element(g)?);
                }
                let chi = BigInt::from(chi_x).pow(orbit_count(n, &gens) as u32);
                sum += &weight * Rat::from_integer(chi);
            }
        }
        sum
    };
    Ok(total / rat(gamma.order() as i64))
}

/// Coefficients `t^0 … t^max_n` of the symmetric-product generating
/// function of order k: coefficient n is the k-th orbifold Euler
/// characteristic of `X^n/S_n`. For k = 1 this expands `(1-t)^(-χ)`,
/// for k = 2 the product `Π_{m≥1} (1-t^m)^(-χ)`.
pub fn symprod_genfun(chi_x: i64, max_n: usize, k: usize) -> Result<Vec<Rat>> {
    let mut coefficients = Vec::with_capacity(max_n + 1);
    coefficients.push(rat(1));
    for n in 1..=max_n {
        let sym = FiniteGroup::symmetric(n)?;
        coefficients.push(power_orbifold_euler(chi_x, n, k, Some(&sym))?);
    }
    Ok(coefficients)
}
