//! JSON monoid-spec documents: local factorization tables, finite monoids,
//! Coxeter matrices and Garside structures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorability::{search_factorization, PhiMonoid, PhiTable};
use crate::foundation::{Alphabet, FiniteMonoid, FiniteTable};
use crate::garside::{ArtinMonoid, CoxeterMatrix, GarsideGroup, GarsideStructure};

/// Upper bound on candidate factorization maps tried when a finite table
/// comes without one.
pub const SEARCH_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiEntry {
    pub from: [String; 2],
    pub to: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaEntry {
    pub element: String,
    pub rest: String,
    pub last: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MEntry {
    pub pair: [String; 2],
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MonoidSpec {
    PhiTable {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        generators: Vec<String>,
        phi: Vec<PhiEntry>,
    },
    FiniteTable {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        elements: Vec<String>,
        unit: String,
        generators: Vec<String>,
        table: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<Vec<EtaEntry>>,
    },
    Coxeter {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        generators: Vec<String>,
        m: Vec<MEntry>,
    },
    Garside {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        generators: Vec<String>,
        m: Vec<MEntry>,
        delta: String,
    },
}

/// A spec turned into a working monoid.
#[derive(Clone, Debug)]
pub enum Loaded {
    Phi(PhiMonoid),
    Finite(FiniteMonoid),
    Artin(ArtinMonoid),
    Garside(GarsideGroup),
}

impl MonoidSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec serialises");
        s.push('\n');
        s
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            MonoidSpec::PhiTable { name, .. }
            | MonoidSpec::FiniteTable { name, .. }
            | MonoidSpec::Coxeter { name, .. }
            | MonoidSpec::Garside { name, .. } => name.as_deref(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MonoidSpec::PhiTable { .. } => "phi-table",
            MonoidSpec::FiniteTable { .. } => "finite-table",
            MonoidSpec::Coxeter { .. } => "coxeter",
            MonoidSpec::Garside { .. } => "garside",
        }
    }

    pub fn load(&self) -> Result<Loaded> {
        match self {
            MonoidSpec::PhiTable { generators, phi, .. } => {
                let al = Alphabet::new(generators.iter().cloned())?;
                let mut entries = Vec::with_capacity(phi.len());
                for e in phi {
                    entries.push((
                        (al.pointed(&e.from[0])?, al.pointed(&e.from[1])?),
                        (al.pointed(&e.to[0])?, al.pointed(&e.to[1])?),
                    ));
                }
                Ok(Loaded::Phi(PhiMonoid::new(PhiTable::new(al, entries)?)))
            }
            MonoidSpec::FiniteTable { elements, unit, generators, table, eta, .. } => {
                let idx = |x: &str| {
                    elements.iter().position(|e| e == x).ok_or_else(|| Error::UnknownLetter(x.to_string()))
                };
                let mut rows = Vec::with_capacity(table.len());
                for row in table {
                    rows.push(row.iter().map(|x| idx(x)).collect::<Result<Vec<_>>>()?);
                }
                let gens = generators.iter().map(|x| idx(x)).collect::<Result<Vec<_>>>()?;
                let t = FiniteTable::new(elements.clone(), rows, idx(unit)?, gens)?;
                match eta {
                    Some(entries) => {
                        let mut map = vec![None; t.len()];
                        for e in entries {
                            let x = idx(&e.element)?;
                            if map[x].replace((idx(&e.rest)?, idx(&e.last)?)).is_some() {
                                return Err(Error::Spec(format!("duplicate factorization for `{}`", e.element)));
                            }
                        }
                        map[t.unit] = map[t.unit].or(Some((t.unit, t.unit)));
                        let map = map
                            .into_iter()
                            .enumerate()
                            .map(|(x, v)| v.ok_or_else(|| Error::Spec(format!("no factorization for `{}`", elements[x]))))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Loaded::Finite(FiniteMonoid::new(t, map)?))
                    }
                    None => match search_factorization(&t, SEARCH_LIMIT)? {
                        Some(m) => Ok(Loaded::Finite(m)),
                        None => Err(Error::InvalidTable("no factorization map satisfies the axioms".into())),
                    },
                }
            }
            MonoidSpec::Coxeter { generators, m, .. } => Ok(Loaded::Artin(ArtinMonoid::new(matrix(generators, m)?)?)),
            MonoidSpec::Garside { generators, m, delta, .. } => {
                let artin = ArtinMonoid::new(matrix(generators, m)?)?;
                let d = artin.parse_positive(delta)?;
                Ok(Loaded::Garside(GarsideGroup::new(GarsideStructure::with_delta(artin, &d)?)))
            }
        }
    }

    pub fn from_phi_table(name: Option<String>, t: &PhiTable) -> Self {
        let al = t.alphabet();
        let phi = t
            .entries()
            .iter()
            .map(|&((a, b), (c, d))| PhiEntry {
                from: [al.render_pointed(a), al.render_pointed(b)],
                to: [al.render_pointed(c), al.render_pointed(d)],
            })
            .collect();
        MonoidSpec::PhiTable { name, generators: al.names().to_vec(), phi }
    }

    pub fn from_finite(name: Option<String>, m: &FiniteMonoid) -> Self {
        let t = &m.table;
        let n = |x: usize| t.names[x].clone();
        MonoidSpec::FiniteTable {
            name,
            elements: t.names.clone(),
            unit: n(t.unit),
            generators: t.generators.iter().map(|&g| n(g)).collect(),
            table: t.table.iter().map(|row| row.iter().map(|&x| n(x)).collect()).collect(),
            eta: Some(
                m.eta
                    .iter()
                    .enumerate()
                    .filter(|&(x, _)| x != t.unit)
                    .map(|(x, &(r, l))| EtaEntry { element: n(x), rest: n(r), last: n(l) })
                    .collect(),
            ),
        }
    }

    pub fn from_coxeter(name: Option<String>, c: &CoxeterMatrix, delta: Option<String>) -> Self {
        let names = c.names();
        let m = c
            .finite_pairs()
            .into_iter()
            .map(|(s, t, v)| MEntry { pair: [names[s].clone(), names[t].clone()], m: v })
            .collect();
        match delta {
            Some(delta) => MonoidSpec::Garside { name, generators: names.to_vec(), m, delta },
            None => MonoidSpec::Coxeter { name, generators: names.to_vec(), m },
        }
    }
}

fn matrix(generators: &[String], m: &[MEntry]) -> Result<CoxeterMatrix> {
    let idx = |x: &str| generators.iter().position(|g| g == x).ok_or_else(|| Error::UnknownLetter(x.to_string()));
    let mut pairs = Vec::with_capacity(m.len());
    for e in m {
        pairs.push((idx(&e.pair[0])?, idx(&e.pair[1])?, e.m));
    }
    CoxeterMatrix::new(generators.to_vec(), &pairs)
}
