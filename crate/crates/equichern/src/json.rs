//! JSON schemas for groups, spaces, functions, maps and series.
//!
//! Rationals travel as strings in lowest terms with positive
//! denominator (`"3"`, `"-1/4"`). Element ids refer to the
//! deterministic enumeration of the group file they accompany.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructible::{CellMap, ConstructibleFunction};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::gspace::{Atom, AtomSpace, GSpace, Space, SpaceAtom};
use crate::rational::{format_rat, parse_rat};
use crate::series::{GradedSeries, GradedVariable, SeriesRing};

/// `{ "degree": n, "generators": [[one-line perm], …] }`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        let generators = self
            .generators
            .iter()
            .map(|images| Permutation::new(images.clone()))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_generators(self.degree, generators)
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupJson {
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| g.images().to_vec())
                .collect(),
        }
    }
}

/// A group either inline or referenced by file path.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupJson),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GSpaceAtomJson {
    pub id: String,
    pub chi: i64,
    pub isotropy_gens: Vec<usize>,
}

/// `{ "group": …, "atoms": […], "action": { "<generator index>": [perm] } }`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GSpaceJson {
    pub group: GroupRef,
    pub atoms: Vec<GSpaceAtomJson>,
    pub action: BTreeMap<String, Vec<usize>>,
}

impl GSpaceJson {
    /// Builds the space, resolving a group file reference through the
    /// given loader (typically reading relative to the space file).
    pub fn to_gspace(
        &self,
        load_group: impl Fn(&str) -> Result<GroupJson>,
    ) -> Result<GSpace> {
        let group = match &self.group {
            GroupRef::Inline(g) => g.to_group()?,
            GroupRef::Path(path) => load_group(path)?.to_group()?,
        };
        let atoms = self
            .atoms
            .iter()
            .map(|a| {
                Ok(Atom {
                    id: a.id.clone(),
                    chi: a.chi,
                    isotropy: group.subgroup_from(&a.isotropy_gens)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut generator_actions = vec![None; group.generators().len()];
        for (key, perm) in &self.action {
            let index: usize = key.parse().map_err(|_| {
                Error::InvalidArgument(format!("action key {key:?} is not a generator index"))
            })?;
            if index >= generator_actions.len() {
                return Err(Error::InvalidArgument(format!(
                    "action key {index} exceeds the {} generators",
                    generator_actions.len()
                )));
            }
            generator_actions[index] = Some(perm.clone());
        }
        let n = atoms.len();
        let generator_actions = generator_actions
            .into_iter()
            .map(|ga| ga.unwrap_or_else(|| (0..n).collect()))
            .collect();
        GSpace::new(group, atoms, generator_actions)
    }

    pub fn from_gspace(space: &GSpace) -> Self {
        let group = GroupRef::Inline(GroupJson::from_group(space.group()));
        let atoms = space
            .atoms()
            .iter()
            .map(|a| GSpaceAtomJson {
                id: a.id.clone(),
                chi: a.chi,
                isotropy_gens: a.isotropy.member_ids().to_vec(),
            })
            .collect();
        let mut action = BTreeMap::new();
        for (index, &gid) in space.group().generator_ids().iter().enumerate() {
            let perm = (0..space.atom_count())
                .map(|a| space.act(gid, a).expect("valid indices"))
                .collect();
            action.insert(index.to_string(), perm);
        }
        GSpaceJson {
            group,
            atoms,
            action,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceAtomJson {
    pub id: String,
    pub chi: i64,
}

/// `{ "atoms": [{"id": …, "chi": …}] }` — a space without action.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceJson {
    pub atoms: Vec<SpaceAtomJson>,
}

impl SpaceJson {
    pub fn to_space(&self) -> Result<Space> {
        Space::new(
            self.atoms
                .iter()
                .map(|a| SpaceAtom {
                    id: a.id.clone(),
                    chi: a.chi,
                })
                .collect(),
        )
    }

    pub fn from_space(space: &Space) -> Self {
        SpaceJson {
            atoms: space
                .atoms()
                .iter()
                .map(|a| SpaceAtomJson {
                    id: a.id.clone(),
                    chi: a.chi,
                })
                .collect(),
        }
    }
}

/// `{ "space": id, "values": { atom id: "p/q" } }` — all atoms listed.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctionJson {
    pub space: String,
    pub values: BTreeMap<String, String>,
}

impl FunctionJson {
    pub fn from_function(
        space_label: &str,
        space: &impl AtomSpace,
        function: &ConstructibleFunction,
    ) -> Result<Self> {
        if function.len() != space.atom_count() {
            return Err(Error::SpaceMismatch(format!(
                "function has {} values for {} atoms",
                function.len(),
                space.atom_count()
            )));
        }
        let values = (0..space.atom_count())
            .map(|i| {
                (
                    space.atom_id(i).to_string(),
                    format_rat(&function.values()[i]),
                )
            })
            .collect();
        Ok(FunctionJson {
            space: space_label.to_string(),
            values,
        })
    }

    /// Missing atoms read as zero; unknown atom ids are an error.
    pub fn to_function(&self, space: &impl AtomSpace) -> Result<ConstructibleFunction> {
        let mut values = vec![crate::rational::rat(0); space.atom_count()];
        for (id, value) in &self.values {
            let index = space
                .atom_index(id)
                .ok_or_else(|| Error::UnknownAtom(id.clone()))?;
            values[index] = parse_rat(value)?;
        }
        Ok(ConstructibleFunction::from_values(values))
    }
}

/// Cell map with explicit fiber data, atoms addressed by id.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CellMapJson {
    pub source: String,
    pub target: String,
    pub image: BTreeMap<String, String>,
    pub fiber_chi: BTreeMap<String, String>,
}

impl CellMapJson {
    pub fn to_cell_map(
        &self,
        source: &impl AtomSpace,
        target: &impl AtomSpace,
    ) -> Result<CellMap> {
        let mut image = Vec::with_capacity(source.atom_count());
        let mut fiber = Vec::with_capacity(source.atom_count());
        for i in 0..source.atom_count() {
            let id = source.atom_id(i);
            let target_id = self
                .image
                .get(id)
                .ok_or_else(|| Error::UnknownAtom(format!("image of {id}")))?;
            let target_index = target
                .atom_index(target_id)
                .ok_or_else(|| Error::UnknownAtom(target_id.clone()))?;
            image.push(target_index);
            let fc = self
                .fiber_chi
                .get(id)
                .ok_or_else(|| Error::UnknownAtom(format!("fiber over {id}")))?;
            fiber.push(parse_rat(fc)?);
        }
        CellMap::new(source, target, image, fiber)
    }

    pub fn from_cell_map(
        source_label: &str,
        target_label: &str,
        source: &impl AtomSpace,
        target: &impl AtomSpace,
        map: &CellMap,
    ) -> Self {
        let image = (0..source.atom_count())
            .map(|i| {
                (
                    source.atom_id(i).to_string(),
                    target.atom_id(map.image()[i]).to_string(),
                )
            })
            .collect();
        let fiber_chi = (0..source.atom_count())
            .map(|i| {
                (
                    source.atom_id(i).to_string(),
                    format_rat(&map.fiber_chi()[i]),
                )
            })
            .collect();
        CellMapJson {
            source: source_label.to_string(),
            target: target_label.to_string(),
            image,
            fiber_chi,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VarJson {
    pub name: String,
    pub degree: usize,
}

/// `{ "vars": […], "trunc": D, "terms": { "e1,e2,…": "p/q" } }`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeriesJson {
    pub vars: Vec<VarJson>,
    pub trunc: usize,
    pub terms: BTreeMap<String, String>,
}

impl SeriesJson {
    pub fn from_series(series: &GradedSeries) -> Self {
        let vars = series
            .ring()
            .vars()
            .iter()
            .map(|v| VarJson {
                name: v.name.clone(),
                degree: v.degree,
            })
            .collect();
        let terms = series
            .terms()
            .iter()
            .map(|(expo, c)| {
                let key = expo
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                (key, format_rat(c))
            })
            .collect();
        SeriesJson {
            vars,
            trunc: series.ring().trunc(),
            terms,
        }
    }

    pub fn to_series(&self) -> Result<GradedSeries> {
        let ring = SeriesRing::new(
            self.vars
                .iter()
                .map(|v| GradedVariable {
                    name: v.name.clone(),
                    degree: v.degree,
                })
                .collect(),
            self.trunc,
        )?;
        let mut series = ring.zero();
        for (key, value) in &self.terms {
            let expo = if key.is_empty() {
                vec![]
            } else {
                key.split(',')
                    .map(|p| {
                        p.trim().parse::<u32>().map_err(|_| {
                            Error::InvalidArgument(format!("bad exponent key {key:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            if expo.len() != self.vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "exponent key {key:?} has {} entries for {} variables",
                    expo.len(),
                    self.vars.len()
                )));
            }
            series.add_term(expo, parse_rat(value)?);
        }
        Ok(series)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p1_rotation_json() -> GSpaceJson {
        GSpaceJson {
            group: GroupRef::Inline(GroupJson {
                degree: 4,
                generators: vec![vec![1, 2, 3, 0]],
            }),
            atoms: vec![
                GSpaceAtomJson { id: "zero".into(), chi: 1, isotropy_gens: vec![1] },
                GSpaceAtomJson { id: "inf".into(), chi: 1, isotropy_gens: vec![1] },
                GSpaceAtomJson { id: "c0".into(), chi: 0, isotropy_gens: vec![] },
                GSpaceAtomJson { id: "c1".into(), chi: 0, isotropy_gens: vec![] },
                GSpaceAtomJson { id: "c2".into(), chi: 0, isotropy_gens: vec![] },
                GSpaceAtomJson { id: "c3".into(), chi: 0, isotropy_gens: vec![] },
            ],
            action: [("0".to_string(), vec![0, 1, 3, 4, 5, 2])]
                .into_iter()
                .collect(),
        }
    }

    #[test]
    fn group_round_trip() {
        let json = GroupJson {
            degree: 3,
            generators: vec![vec![1, 0, 2], vec![1, 2, 0]],
        };
        let group = json.to_group().unwrap();
        assert_eq!(group.order(), 6);
        assert_eq!(GroupJson::from_group(&group), json);
    }

    #[test]
    fn gspace_round_trip() {
        let json = p1_rotation_json();
        let space = json
            .to_gspace(|_| Err(Error::InvalidArgument("no file loading".into())))
            .unwrap();
        assert_eq!(space.validate(), Ok(()));
        assert_eq!(space.euler(), 2);
        let back = GSpaceJson::from_gspace(&space);
        let again = back
            .to_gspace(|_| Err(Error::InvalidArgument("no file loading".into())))
            .unwrap();
        assert_eq!(again.atoms(), space.atoms());
        assert_eq!(again.group(), space.group());
    }

    #[test]
    fn function_round_trip() {
        let json = p1_rotation_json();
        let space = json
            .to_gspace(|_| Err(Error::InvalidArgument("no file loading".into())))
            .unwrap();
        let alpha = crate::orbifold::quo_orb_function(&space, 1);
        let file = FunctionJson::from_function("x", &space, &alpha).unwrap();
        assert_eq!(file.values["zero"], "1");
        assert_eq!(file.values["c0"], "1/4");
        assert_eq!(file.to_function(&space).unwrap(), alpha);

        let sparse = FunctionJson {
            space: "x".into(),
            values: [("inf".to_string(), "2".to_string())].into_iter().collect(),
        };
        let f = sparse.to_function(&space).unwrap();
        assert_eq!(f.values()[1], rat(2));
        assert_eq!(f.values()[0], rat(0));

        let bad = FunctionJson {
            space: "x".into(),
            values: [("ghost".to_string(), "1".to_string())].into_iter().collect(),
        };
        assert!(bad.to_function(&space).is_err());
    }

    #[test]
    fn cell_map_round_trip() {
        let json = p1_rotation_json();
        let space = json
            .to_gspace(|_| Err(Error::InvalidArgument("no file loading".into())))
            .unwrap();
        let (quotient, map) = CellMap::quotient_projection(&space);
        let file = CellMapJson::from_cell_map("x", "x/G", &space, &quotient, &map);
        let back = file.to_cell_map(&space, &quotient).unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn series_round_trip() {
        let ring = SeriesRing::chern(2, 4).unwrap();
        let s = ring
            .var("c1")
            .unwrap()
            .pow(2)
            .sub(&ring.var("c2").unwrap())
            .scale(&crate::rational::ratio(3, 7));
        let json = SeriesJson::from_series(&s);
        assert_eq!(json.to_series().unwrap(), s);
        let text = serde_json::to_string(&json).unwrap();
        let reparsed: SeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed.to_series().unwrap(), s);
    }

    #[test]
    fn space_round_trip() {
        let space = Space::new(vec![
            SpaceAtom { id: "a".into(), chi: 3 },
            SpaceAtom { id: "b".into(), chi: -1 },
        ])
        .unwrap();
        let json = SpaceJson::from_space(&space);
        assert_eq!(json.to_space().unwrap(), space);
    }
}
