//! Shared fixtures for the integration suites: a family of groups of
//! order at most 24, a generator of random valid models built from
//! coset actions, and independent test-side oracles (univariate series
//! expansion, tableau-based Schur polynomials).
//!
//! Not every binary uses every helper.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;

use equichern::{rat, Atom, FiniteGroup, GSpace, Permutation, Rat, Space, SpaceAtom};

pub fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).unwrap()
}

/// Groups of order ≤ 24 exercised by the property and acceptance suites.
pub fn test_groups() -> Vec<(String, FiniteGroup)> {
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    groups.push((
        "trivial".into(),
        FiniteGroup::from_generators(1, vec![]).unwrap(),
    ));
    for n in [2usize, 3, 4, 5, 6, 7, 8, 9, 11, 12] {
        groups.push((format!("Z{n}"), FiniteGroup::cyclic(n).unwrap()));
    }
    groups.push((
        "V4".into(),
        FiniteGroup::from_generators(4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])]).unwrap(),
    ));
    groups.push((
        "Z2xZ4".into(),
        FiniteGroup::from_generators(6, vec![perm(6, &[&[0, 1]]), perm(6, &[&[2, 3, 4, 5]])])
            .unwrap(),
    ));
    groups.push((
        "Z2^3".into(),
        FiniteGroup::from_generators(
            6,
            vec![perm(6, &[&[0, 1]]), perm(6, &[&[2, 3]]), perm(6, &[&[4, 5]])],
        )
        .unwrap(),
    ));
    groups.push((
        "Z3xZ3".into(),
        FiniteGroup::from_generators(6, vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[3, 4, 5]])])
            .unwrap(),
    ));
    groups.push(("S3".into(), FiniteGroup::symmetric(3).unwrap()));
    groups.push((
        "D4".into(),
        FiniteGroup::from_generators(4, vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[1, 3]])])
            .unwrap(),
    ));
    groups.push((
        "Q8".into(),
        FiniteGroup::from_generators(
            8,
            vec![
                Permutation::new(vec![2, 3, 1, 0, 6, 7, 5, 4]).unwrap(),
                Permutation::new(vec![4, 5, 7, 6, 1, 0, 2, 3]).unwrap(),
            ],
        )
        .unwrap(),
    ));
    groups.push((
        "D5".into(),
        FiniteGroup::from_generators(
            5,
            vec![perm(5, &[&[0, 1, 2, 3, 4]]), perm(5, &[&[1, 4], &[2, 3]])],
        )
        .unwrap(),
    ));
    groups.push((
        "D6".into(),
        FiniteGroup::from_generators(
            6,
            vec![
                perm(6, &[&[0, 1, 2, 3, 4, 5]]),
                perm(6, &[&[1, 5], &[2, 4]]),
            ],
        )
        .unwrap(),
    ));
    groups.push((
        "A4".into(),
        FiniteGroup::from_generators(
            4,
            vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[0, 1], &[2, 3]])],
        )
        .unwrap(),
    ));
    groups.push((
        "Z6xZ2".into(),
        FiniteGroup::from_generators(
            8,
            vec![perm(8, &[&[0, 1, 2, 3, 4, 5]]), perm(8, &[&[6, 7]])],
        )
        .unwrap(),
    ));
    groups.push(("S4".into(), FiniteGroup::symmetric(4).unwrap()));
    groups.push((
        "D12".into(),
        FiniteGroup::from_generators(
            12,
            vec![
                perm(12, &[&(0..12).collect::<Vec<_>>()]),
                perm(12, &[&[1, 11], &[2, 10], &[3, 9], &[4, 8], &[5, 7]]),
            ],
        )
        .unwrap(),
    ));
    groups.push((
        "A4xZ2".into(),
        FiniteGroup::from_generators(
            6,
            vec![
                perm(6, &[&[0, 1, 2]]),
                perm(6, &[&[0, 1], &[2, 3]]),
                perm(6, &[&[4, 5]]),
            ],
        )
        .unwrap(),
    ));
    groups
}

/// The rotated projective line: two poles with full isotropy and a
/// freely rotated four-sector belt of chi 0.
pub fn p1_rotation() -> GSpace {
    let group = FiniteGroup::cyclic(4).unwrap();
    let full = group.full_subgroup();
    let trivial = group.trivial_subgroup();
    let atoms = vec![
        Atom { id: "zero".into(), chi: 1, isotropy: full.clone() },
        Atom { id: "inf".into(), chi: 1, isotropy: full },
        Atom { id: "c0".into(), chi: 0, isotropy: trivial.clone() },
        Atom { id: "c1".into(), chi: 0, isotropy: trivial.clone() },
        Atom { id: "c2".into(), chi: 0, isotropy: trivial.clone() },
        Atom { id: "c3".into(), chi: 0, isotropy: trivial },
    ];
    GSpace::new(group, atoms, vec![vec![0, 1, 3, 4, 5, 2]]).unwrap()
}

/// A random valid model: a disjoint union of coset actions `G/K` with
/// one chi value per orbit. Every valid model is of this shape, so the
/// generator covers the whole class.
pub fn random_gspace(rng: &mut impl Rng, group: &FiniteGroup, max_atoms: usize) -> GSpace {
    let order = group.order();
    let mut atom_ids: Vec<String> = Vec::new();
    let mut chis: Vec<i64> = Vec::new();
    let mut isotropies = Vec::new();
    let mut gen_actions: Vec<Vec<usize>> =
        vec![Vec::new(); group.generators().len()];

    let blocks = rng.gen_range(1..=4);
    for block in 0..blocks {
        // subgroup from up to two random elements
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            gens.push(rng.gen_range(0..order));
        }
        let subgroup = group.subgroup_from(&gens).unwrap();
        let cosets = order / subgroup.order();
        let subgroup = if atom_ids.len() + cosets > max_atoms {
            group.full_subgroup()
        } else {
            subgroup
        };

        // left cosets by ascending representative
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if coset_of[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for &h in subgroup.member_ids() {
                    coset_of[group.mul(x, h)] = c;
                }
            }
        }

        if atom_ids.len() + reps.len() > max_atoms {
            continue;
        }
        let offset = atom_ids.len();
        let chi = rng.gen_range(-3..=4);
        for (c, &rep) in reps.iter().enumerate() {
            atom_ids.push(format!("b{block}c{c}"));
            chis.push(chi);
            isotropies.push(subgroup.conjugate(group, rep));
        }
        for (gi, &gid) in group.generator_ids().iter().enumerate() {
            for &rep in &reps {
                gen_actions[gi].push(offset + coset_of[group.mul(gid, rep)]);
            }
        }
    }

    if atom_ids.is_empty() {
        // at least one block: the one-atom quotient of the full group
        atom_ids.push("b0c0".into());
        chis.push(rng.gen_range(-3..=4));
        isotropies.push(group.full_subgroup());
        for row in gen_actions.iter_mut() {
            row.push(0);
        }
    }

    let atoms = atom_ids
        .into_iter()
        .zip(chis)
        .zip(isotropies)
        .map(|((id, chi), isotropy)| Atom { id, chi, isotropy })
        .collect();
    GSpace::new(group.clone(), atoms, gen_actions).unwrap()
}

/// A random action-free space.
pub fn random_space(rng: &mut impl Rng, atoms: usize, label: &str) -> Space {
    Space::new(
        (0..atoms)
            .map(|i| SpaceAtom {
                id: format!("{label}{i}"),
                chi: rng.gen_range(-3..=4),
            })
            .collect(),
    )
    .unwrap()
}

/// A random map into `target`, returning the consistent source space
/// it maps from: source chi values are derived from integer fiber
/// declarations so the consistency law holds by construction.
pub fn random_map_onto(
    rng: &mut impl Rng,
    target: &Space,
    source_atoms: usize,
    label: &str,
) -> (Space, Vec<usize>, Vec<Rat>) {
    use equichern::AtomSpace;
    let mut image = Vec::with_capacity(source_atoms);
    let mut fiber = Vec::with_capacity(source_atoms);
    let mut atoms = Vec::with_capacity(source_atoms);
    for i in 0..source_atoms {
        let b = rng.gen_range(0..target.atom_count());
        let fc: i64 = rng.gen_range(-2..=3);
        image.push(b);
        fiber.push(rat(fc));
        atoms.push(SpaceAtom {
            id: format!("{label}{i}"),
            chi: fc * target.atom_chi(b),
        });
    }
    (Space::new(atoms).unwrap(), image, fiber)
}

/// A random constructible function with small rational values.
pub fn random_function(rng: &mut impl Rng, atoms: usize) -> equichern::ConstructibleFunction {
    equichern::ConstructibleFunction::from_values(
        (0..atoms)
            .map(|_| equichern::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect(),
    )
}

// --- univariate series oracle (independent of the library engine) ---

pub fn poly_mul_trunc(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_inv_trunc(a: &[Rat], len: usize) -> Vec<Rat> {
    assert_eq!(a[0], rat(1), "oracle inverse needs unit constant term");
    let mut out = vec![Rat::zero(); len];
    out[0] = rat(1);
    for k in 1..len {
        let mut acc = Rat::zero();
        for i in 1..=k {
            if i < a.len() {
                acc += &a[i] * &out[k - i];
            }
        }
        out[k] = -acc;
    }
    out
}

/// Coefficients of `(1 - t^m)^(-chi)` up to degree `len - 1`.
pub fn one_minus_tm_pow_neg_chi(m: usize, chi: i64, len: usize) -> Vec<Rat> {
    let mut base = vec![Rat::zero(); len];
    base[0] = rat(1);
    if m < len {
        base[m] = rat(-1);
    }
    let mut out = vec![Rat::zero(); len];
    out[0] = rat(1);
    let factor = if chi >= 0 {
        poly_inv_trunc(&base, len)
    } else {
        base
    };
    for _ in 0..chi.unsigned_abs() {
        out = poly_mul_trunc(&out, &factor, len);
    }
    out
}

// --- tableau-based Schur polynomial oracle ---

/// Schur polynomial of a partition in `nvars` variables, as monomial
/// exponent counts, by direct enumeration of semistandard tableaux
/// (rows weakly increasing, columns strictly increasing).
pub fn schur_by_tableaux(shape: &[usize], nvars: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut result = BTreeMap::new();
    let cells: usize = shape.iter().sum();
    if cells == 0 {
        result.insert(vec![0u32; nvars], 1);
        return result;
    }
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill(shape, nvars, 0, 0, &mut filling, &mut result);
    result
}

fn fill(
    shape: &[usize],
    nvars: usize,
    row: usize,
    col: usize,
    filling: &mut Vec<Vec<usize>>,
    result: &mut BTreeMap<Vec<u32>, i64>,
) {
    if row == shape.len() {
        let mut expo = vec![0u32; nvars];
        for r in filling.iter() {
            for &v in r {
                expo[v - 1] += 1;
            }
        }
        *result.entry(expo).or_insert(0) += 1;
        return;
    }
    let (next_row, next_col) = if col + 1 == shape[row] {
        (row + 1, 0)
    } else {
        (row, col + 1)
    };
    let min_in_row = if col > 0 { filling[row][col - 1] } else { 1 };
    let above = if row > 0 { filling[row - 1][col] } else { 0 };
    for value in min_in_row.max(above + 1)..=nvars {
        filling[row][col] = value;
        fill(shape, nvars, next_row, next_col, filling, result);
    }
    filling[row][col] = 0;
}
