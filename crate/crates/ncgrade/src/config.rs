//! JSON-facing configuration schemas and their conversion into domain
//! objects. One set of schemas serves both named-check configs and
//! the direct CLI subcommands, so every report and config round-trips
//! through the same representation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{builtin_f, builtin_h, down_up, Presentation};
use crate::error::{Error, Result};
use crate::grading::{cyclic, dihedral, direct_product, quaternion8, FiniteGroup, Grading};
use crate::order::MonomialOrder;
use crate::poly::NcPoly;
use crate::scalar::Scalar;
use crate::word::{Alphabet, GeneratorSymbol, Word};

/// One polynomial term: a rational coefficient rendered `"p"` or
/// `"p/q"`, and a word as a list of generator names (empty = unit).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

/// A polynomial as a list of terms.
pub type PolyJson = Vec<TermJson>;

/// Generator declaration; weight defaults to 1.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    #[serde(default = "default_weight")]
    pub weight: usize,
}

fn default_weight() -> usize {
    1
}

/// A presentation: builtin `downup` (with `alpha`, `beta`), builtin
/// `F` or `H`, or an explicit generators-and-relations description.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PresentationJson {
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<String>,
    },
    Explicit {
        generators: Vec<GeneratorJson>,
        relations: Vec<PolyJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

/// A finite group: builtin `cyclic`/`dihedral` (with rotation count
/// `n`), `quaternion8`, `product` (with `factors`), or an explicit
/// multiplication table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factors: Option<Vec<GroupJson>>,
    },
    Table {
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    },
}

/// Config for the direct CLI subcommands; each subcommand uses the
/// subset of fields it needs and rejects configs missing them.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskConfig {
    pub presentation: PresentationJson,
    /// Generator names in ascending precedence for the word order;
    /// defaults to listing order.
    #[serde(default)]
    pub order: Option<Vec<String>>,
    #[serde(default)]
    pub max_degree: Option<usize>,
    /// Polynomial to reduce (`nf`).
    #[serde(default)]
    pub poly: Option<PolyJson>,
    /// Closed-form numerator coefficients (`hilbert`).
    #[serde(default)]
    pub numerator: Option<Vec<i64>>,
    /// Closed-form denominator coefficients (`hilbert`).
    #[serde(default)]
    pub denominator: Option<Vec<i64>>,
    /// Grading group (`fixed-ring`, `min-gens`).
    #[serde(default)]
    pub group: Option<GroupJson>,
    /// Generator name to group element name (`fixed-ring`, `min-gens`).
    #[serde(default)]
    pub grading: Option<BTreeMap<String, String>>,
}

/// Converts a polynomial description over the given alphabet.
pub fn poly_from_json(alphabet: &Alphabet, poly: &PolyJson) -> Result<NcPoly> {
    let mut acc = NcPoly::zero();
    for term in poly {
        let coeff: Scalar = term.coeff.parse()?;
        let word = alphabet.word_from_names(&term.word)?;
        let mut t = NcPoly::zero();
        t.add_term(word, coeff);
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Renders a polynomial with terms in descending word order.
pub fn poly_to_json(order: &MonomialOrder, p: &NcPoly) -> PolyJson {
    let mut terms: Vec<(&Word, &Scalar)> = p.terms().collect();
    terms.sort_by(|a, b| order.compare(b.0, a.0));
    terms
        .into_iter()
        .map(|(w, c)| TermJson {
            coeff: c.to_string(),
            word: word_to_json(order.alphabet(), w),
        })
        .collect()
}

/// A word as the list of its generator names.
pub fn word_to_json(alphabet: &Alphabet, w: &Word) -> Vec<String> {
    w.letters()
        .iter()
        .map(|&l| alphabet.symbol(l as usize).name.clone())
        .collect()
}

/// Builds the presentation described by the config.
pub fn presentation_from_json(p: &PresentationJson) -> Result<Presentation> {
    match p {
        PresentationJson::Builtin { builtin, alpha, beta } => match builtin.as_str() {
            "downup" => {
                let a: Scalar = alpha
                    .as_deref()
                    .ok_or_else(|| Error::Config("builtin 'downup' needs 'alpha'".into()))?
                    .parse()?;
                let b: Scalar = beta
                    .as_deref()
                    .ok_or_else(|| Error::Config("builtin 'downup' needs 'beta'".into()))?
                    .parse()?;
                down_up(&a, &b)
            }
            "F" => {
                reject_parameters(alpha, beta, "F")?;
                Ok(builtin_f())
            }
            "H" => {
                reject_parameters(alpha, beta, "H")?;
                Ok(builtin_h())
            }
            other => Err(Error::Config(format!(
                "unknown builtin presentation '{other}' (expected downup, F, or H)"
            ))),
        },
        PresentationJson::Explicit {
            generators,
            relations,
            label,
        } => {
            let symbols: Vec<GeneratorSymbol> = generators
                .iter()
                .map(|g| GeneratorSymbol {
                    name: g.name.clone(),
                    weight: g.weight,
                })
                .collect();
            let alphabet = Alphabet::new(symbols)?;
            let rels: Vec<NcPoly> = relations
                .iter()
                .map(|r| poly_from_json(&alphabet, r))
                .collect::<Result<_>>()?;
            Presentation::new(
                alphabet,
                rels,
                label.clone().unwrap_or_else(|| "custom".to_string()),
            )
        }
    }
}

fn reject_parameters(alpha: &Option<String>, beta: &Option<String>, name: &str) -> Result<()> {
    if alpha.is_some() || beta.is_some() {
        return Err(Error::Config(format!(
            "builtin '{name}' takes no parameters"
        )));
    }
    Ok(())
}

/// Builds the finite group described by the config. For `dihedral`,
/// `n` counts rotations, so the group has order `2n`.
pub fn group_from_json(g: &GroupJson) -> Result<FiniteGroup> {
    match g {
        GroupJson::Builtin { builtin, n, factors } => match builtin.as_str() {
            "cyclic" => {
                let n = n.ok_or_else(|| Error::Config("builtin 'cyclic' needs 'n'".into()))?;
                cyclic(n)
            }
            "dihedral" => {
                let n = n.ok_or_else(|| Error::Config("builtin 'dihedral' needs 'n'".into()))?;
                dihedral(2 * n)
            }
            "quaternion8" => Ok(quaternion8()),
            "product" => {
                let factors = factors
                    .as_ref()
                    .filter(|f| f.len() >= 2)
                    .ok_or_else(|| {
                        Error::Config("builtin 'product' needs at least two 'factors'".into())
                    })?;
                let groups: Vec<FiniteGroup> =
                    factors.iter().map(group_from_json).collect::<Result<_>>()?;
                let mut acc = groups[0].clone();
                for g in &groups[1..] {
                    acc = direct_product(&acc, g)?;
                }
                Ok(acc)
            }
            other => Err(Error::Config(format!(
                "unknown builtin group '{other}' (expected cyclic, dihedral, quaternion8, or product)"
            ))),
        },
        GroupJson::Table {
            names,
            table,
            identity,
        } => FiniteGroup::new(names.clone(), table.clone(), *identity, "custom table"),
    }
}

/// Builds the grading from a generator-name to element-name map.
pub fn grading_from_json(
    group: FiniteGroup,
    alphabet: &Alphabet,
    assignment: &BTreeMap<String, String>,
) -> Result<Grading> {
    let pairs: Vec<(String, String)> = assignment
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    Grading::new(group, alphabet, &pairs)
}

/// Word order from an optional ascending precedence list.
pub fn order_from_json(alphabet: &Alphabet, precedence: Option<&[String]>) -> Result<MonomialOrder> {
    match precedence {
        Some(names) => MonomialOrder::deglex_with_precedence(alphabet, names),
        None => Ok(MonomialOrder::deglex(alphabet)),
    }
}
