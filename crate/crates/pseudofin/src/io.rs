//! JSON interchange for semigroups, acts, diameter reports, and
//! construction specs. All indices are zero-based; labels are optional and,
//! when present, resolve before numeric indices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acts::{ActError, FiniteRightAct};
use crate::metric::{DiameterReport, GenSet, Step};
use crate::semigroup::{
    closure_from_transformations, ElementId, FiniteSemigroup, SemigroupError, Transformation,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Act(#[from] ActError),
    #[error("declared identity {declared} does not match the table (found {found:?})")]
    IdentityMismatch { declared: usize, found: Option<usize> },
    #[error("unknown element {token:?}")]
    UnknownElement { token: String },
    #[error("input is neither a multiplication table nor a generator list")]
    UnrecognizedInput,
}

/// A semigroup as a full multiplication table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl SemigroupJson {
    pub fn from_semigroup(s: &FiniteSemigroup) -> Self {
        SemigroupJson {
            order: s.order(),
            table: s.rows(),
            identity: s.identity(),
            labels: s.labels().map(|ls| ls.to_vec()),
        }
    }

    pub fn to_semigroup(&self) -> Result<FiniteSemigroup, IoError> {
        let s = FiniteSemigroup::from_table_labeled(self.table.clone(), self.labels.clone())?;
        if let Some(declared) = self.identity {
            if s.identity() != Some(declared) {
                return Err(IoError::IdentityMismatch { declared, found: s.identity() });
            }
        }
        Ok(s)
    }
}

/// A transformation monoid given by generators on {0, .., degree-1}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorsJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GeneratorsJson {
    pub fn to_semigroup(&self) -> Result<(FiniteSemigroup, Vec<Transformation>), IoError> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                let t = Transformation::new(imgs.clone())?;
                if t.degree() != self.degree {
                    return Err(SemigroupError::DegreeMismatch {
                        expected: self.degree,
                        found: t.degree(),
                    });
                }
                Ok(t)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(closure_from_transformations(&gens)?)
    }
}

/// Either form of semigroup input.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupInput {
    Table(SemigroupJson),
    Generators(GeneratorsJson),
}

impl SemigroupInput {
    pub fn to_semigroup(&self) -> Result<FiniteSemigroup, IoError> {
        match self {
            SemigroupInput::Table(t) => t.to_semigroup(),
            SemigroupInput::Generators(g) => Ok(g.to_semigroup()?.0),
        }
    }
}

/// A right act with its acting semigroup inline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActJson {
    pub carrier: usize,
    pub semigroup: SemigroupInput,
    /// action[a][s] = a * s
    pub action: Vec<Vec<usize>>,
}

impl ActJson {
    pub fn from_act(act: &FiniteRightAct) -> Self {
        ActJson {
            carrier: act.carrier(),
            semigroup: SemigroupInput::Table(SemigroupJson::from_semigroup(act.semigroup())),
            action: act.action_rows(),
        }
    }

    pub fn to_act(&self) -> Result<FiniteRightAct, IoError> {
        let s = self.semigroup.to_semigroup()?;
        Ok(FiniteRightAct::new(s, self.carrier, self.action.clone())?)
    }
}

/// Serialized distance data; `null` distances mean the pair is not
/// connected (infinite distance).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiameterReportJson {
    pub diameter: Option<u32>,
    pub distances: Vec<Vec<Option<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disconnected_pair: Option<(usize, usize)>,
    pub genset: GenSet,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub pair: (usize, usize),
    pub sequence: Vec<Step>,
}

impl DiameterReportJson {
    pub fn from_report(r: &DiameterReport) -> Self {
        let n = r.carrier();
        DiameterReportJson {
            diameter: r.diameter,
            distances: (0..n)
                .map(|a| (0..n).map(|b| r.distance(a, b)).collect())
                .collect(),
            witness: r
                .witness
                .as_ref()
                .map(|w| WitnessJson { pair: w.pair, sequence: w.sequence.clone() }),
            disconnected_pair: r.disconnected_pair,
            genset: r.genset.clone(),
        }
    }
}

/// Construction requests for the `construct` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructSpecJson {
    Rees {
        t: SemigroupInput,
        i_size: usize,
        j_size: usize,
        p: Vec<Vec<usize>>,
    },
    Extension {
        #[serde(default)]
        s: Option<SemigroupInput>,
        t: SemigroupInput,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
        p: Vec<Vec<usize>>,
    },
    EOf {
        s: SemigroupInput,
        x: usize,
        #[serde(default)]
        y: Option<Vec<usize>>,
    },
    Constants {
        s: SemigroupInput,
    },
}

/// Resolves an element given by label (preferred) or decimal index.
pub fn resolve_element(s: &FiniteSemigroup, token: &str) -> Result<ElementId, IoError> {
    if let Some(e) = s.element_by_label(token) {
        return Ok(e);
    }
    if let Ok(idx) = token.parse::<usize>() {
        if idx < s.order() {
            return Ok(idx);
        }
    }
    Err(IoError::UnknownElement { token: token.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::metric::{right_diameter_report, GenSet};

    #[test]
    fn semigroup_round_trips_through_json() {
        let t2 = fixtures::t2();
        let json = serde_json::to_string(&SemigroupJson::from_semigroup(&t2)).unwrap();
        let parsed: SemigroupJson = serde_json::from_str(&json).unwrap();
        let back = parsed.to_semigroup().unwrap();
        assert_eq!(back, t2);
    }

    #[test]
    fn identity_declaration_is_validated() {
        let mut j = SemigroupJson::from_semigroup(&fixtures::z2());
        j.identity = Some(1);
        assert!(matches!(
            j.to_semigroup(),
            Err(IoError::IdentityMismatch { declared: 1, found: Some(0) })
        ));
    }

    #[test]
    fn generator_input_closes() {
        let json = r#"{"degree": 2, "generators": [[1, 0], [0, 0]]}"#;
        let input: SemigroupInput = serde_json::from_str(json).unwrap();
        let s = input.to_semigroup().unwrap();
        assert_eq!(s.order(), 4); // closure of {swap, c0} is all of T2
    }

    #[test]
    fn diameter_report_serializes_infinities_as_null() {
        let n3 = fixtures::n3();
        let report = right_diameter_report(&n3, &GenSet::Symmetric(vec![1, 2])).unwrap();
        let json = DiameterReportJson::from_report(&report);
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"diameter\":null"));
        let back: DiameterReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.distances[0][2], None);
        assert_eq!(back.distances[1][2], Some(1));
    }

    #[test]
    fn construct_specs_parse_by_kind() {
        let text = r#"{
            "kind": "rees",
            "t": {"order": 1, "table": [[0]]},
            "i_size": 1,
            "j_size": 2,
            "p": [[0], [0]]
        }"#;
        let spec: ConstructSpecJson = serde_json::from_str(text).unwrap();
        assert!(matches!(spec, ConstructSpecJson::Rees { i_size: 1, j_size: 2, .. }));
        let text = r#"{"kind": "e_of", "s": {"order": 1, "table": [[0]]}, "x": 0}"#;
        let spec: ConstructSpecJson = serde_json::from_str(text).unwrap();
        assert!(matches!(spec, ConstructSpecJson::EOf { x: 0, y: None, .. }));
    }

    #[test]
    fn elements_resolve_by_label_then_index() {
        let n3 = fixtures::n3();
        assert_eq!(resolve_element(&n3, "a").unwrap(), 1);
        assert_eq!(resolve_element(&n3, "0").unwrap(), 2); // label wins over index
        assert_eq!(resolve_element(&n3, "1").unwrap(), 0);
        let bare = FiniteSemigroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(resolve_element(&bare, "1").unwrap(), 1); // no labels: index
        assert!(matches!(
            resolve_element(&n3, "q"),
            Err(IoError::UnknownElement { .. })
        ));
    }
}
