//! The JSON model file format.
//!
//! ```json
//! {
//!   "kind": "argument",
//!   "propositions": ["p", "q"],
//!   "agents": ["a", "b"],
//!   "arguments": ["A1", "B", "A2"],
//!   "attacks": { "p": [["A1", "B"]], "q": [["B", "A2"]] },
//!   "availability": { "a": ["A1", "A2"], "b": ["B"] },
//!   "current": "A2"
//! }
//! ```
//!
//! A pair `[U, V]` under `attacks` means V attacks U. Epistemic files use
//! `worlds`, `relations` (agent to pairs) and `valuation` (proposition to
//! the worlds where it holds) instead. Generated files carry an extra
//! `provenance` object that readers ignore.

use std::fs;
use std::path::Path;

use dualkripke_core::formula::FormulaKind;
use dualkripke_core::kripke::{ArgumentModel, EpistemicModel};
use dualkripke_core::Signature;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Epistemic,
    Argument,
}

impl ModelKind {
    pub fn formula_kind(self) -> FormulaKind {
        match self {
            ModelKind::Epistemic => FormulaKind::Epistemic,
            ModelKind::Argument => FormulaKind::Argument,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Epistemic => "epistemic",
            ModelKind::Argument => "argument",
        }
    }
}

type Pairs = Vec<[String; 2]>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub kind: ModelKind,
    pub propositions: Vec<String>,
    pub agents: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worlds: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<IndexMap<String, Pairs>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arguments: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attacks: Option<IndexMap<String, Pairs>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub availability: Option<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub current: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Value>,
}

/// A model file turned into a model. Unknown names inside relations are
/// kept as validation findings rather than load errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadedModel {
    Epistemic {
        model: EpistemicModel,
        current: Option<String>,
    },
    Argument {
        model: ArgumentModel,
        current: Option<String>,
    },
}

impl LoadedModel {
    pub fn kind(&self) -> ModelKind {
        match self {
            LoadedModel::Epistemic { .. } => ModelKind::Epistemic,
            LoadedModel::Argument { .. } => ModelKind::Argument,
        }
    }

    pub fn signature(&self) -> &Signature {
        match self {
            LoadedModel::Epistemic { model, .. } => model.signature(),
            LoadedModel::Argument { model, .. } => model.signature(),
        }
    }

    pub fn current(&self) -> Option<&str> {
        match self {
            LoadedModel::Epistemic { current, .. } | LoadedModel::Argument { current, .. } => current.as_deref(),
        }
    }

    pub fn into_epistemic(self) -> Result<(EpistemicModel, Option<String>), CliError> {
        match self {
            LoadedModel::Epistemic { model, current } => Ok((model, current)),
            LoadedModel::Argument { .. } => {
                Err(CliError::usage("expected an epistemic model, found an argument model"))
            }
        }
    }

    pub fn into_argument(self) -> Result<(ArgumentModel, Option<String>), CliError> {
        match self {
            LoadedModel::Argument { model, current } => Ok((model, current)),
            LoadedModel::Epistemic { .. } => {
                Err(CliError::usage("expected an argument model, found an epistemic model"))
            }
        }
    }
}

impl ModelFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.into(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.into(),
            source,
        })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json()).map_err(|source| CliError::Write {
            path: path.into(),
            source,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("model files always serialize");
        s.push('\n');
        s
    }

    pub fn into_model(self) -> Result<LoadedModel, CliError> {
        let sig = Signature::new(&self.propositions, &self.agents)?;
        match self.kind {
            ModelKind::Epistemic => {
                self.forbid(
                    ModelKind::Epistemic,
                    [
                        ("arguments", self.arguments.is_some()),
                        ("attacks", self.attacks.is_some()),
                        ("availability", self.availability.is_some()),
                    ],
                )?;
                let worlds = self
                    .worlds
                    .ok_or_else(|| CliError::usage("epistemic model file lacks `worlds`"))?;
                let mut b = EpistemicModel::builder(sig, worlds);
                for (agent, pairs) in self.relations.iter().flatten() {
                    for [from, to] in pairs {
                        b.relate(agent, from, to);
                    }
                }
                for (prop, worlds) in self.valuation.iter().flatten() {
                    for w in worlds {
                        b.set_true(prop, w);
                    }
                }
                Ok(LoadedModel::Epistemic {
                    model: b.build(),
                    current: self.current,
                })
            }
            ModelKind::Argument => {
                self.forbid(
                    ModelKind::Argument,
                    [
                        ("worlds", self.worlds.is_some()),
                        ("relations", self.relations.is_some()),
                        ("valuation", self.valuation.is_some()),
                    ],
                )?;
                let arguments = self
                    .arguments
                    .ok_or_else(|| CliError::usage("argument model file lacks `arguments`"))?;
                let mut b = ArgumentModel::builder(sig, arguments);
                for (prop, pairs) in self.attacks.iter().flatten() {
                    for [attacked, attacker] in pairs {
                        b.attack(prop, attacked, attacker);
                    }
                }
                for (agent, args) in self.availability.iter().flatten() {
                    for u in args {
                        b.available(agent, u);
                    }
                }
                Ok(LoadedModel::Argument {
                    model: b.build(),
                    current: self.current,
                })
            }
        }
    }

    fn forbid<const N: usize>(&self, kind: ModelKind, fields: [(&str, bool); N]) -> Result<(), CliError> {
        match fields.iter().find(|(_, present)| *present) {
            Some((name, _)) => Err(CliError::usage(format!(
                "`{name}` is not a field of {} model files",
                kind.name()
            ))),
            None => Ok(()),
        }
    }

    pub fn from_epistemic(model: &EpistemicModel, current: Option<&str>) -> Self {
        let sig = model.signature();
        let name = |w: usize| model.world(w).to_owned();
        ModelFile {
            kind: ModelKind::Epistemic,
            propositions: sig.propositions().to_vec(),
            agents: sig.agents().to_vec(),
            worlds: Some(model.worlds().to_vec()),
            relations: Some(
                sig.agents()
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        (
                            a.clone(),
                            model.relation(i).pairs().map(|(u, v)| [name(u), name(v)]).collect(),
                        )
                    })
                    .collect(),
            ),
            valuation: Some(
                sig.propositions()
                    .iter()
                    .enumerate()
                    .map(|(p, n)| (n.clone(), model.valuation(p).iter().map(name).collect()))
                    .collect(),
            ),
            arguments: None,
            attacks: None,
            availability: None,
            current: current.map(str::to_owned),
            provenance: None,
        }
    }

    pub fn from_argument(model: &ArgumentModel, current: Option<&str>) -> Self {
        let sig = model.signature();
        let name = |u: usize| model.argument(u).to_owned();
        ModelFile {
            kind: ModelKind::Argument,
            propositions: sig.propositions().to_vec(),
            agents: sig.agents().to_vec(),
            worlds: None,
            relations: None,
            valuation: None,
            arguments: Some(model.arguments().to_vec()),
            attacks: Some(
                sig.propositions()
                    .iter()
                    .enumerate()
                    .map(|(p, n)| {
                        (
                            n.clone(),
                            model.attacks(p).pairs().map(|(u, v)| [name(u), name(v)]).collect(),
                        )
                    })
                    .collect(),
            ),
            availability: Some(
                sig.agents()
                    .iter()
                    .enumerate()
                    .map(|(i, a)| (a.clone(), model.availability(i).iter().map(name).collect()))
                    .collect(),
            ),
            current: current.map(str::to_owned),
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, provenance: Value) -> Self {
        self.provenance = Some(provenance);
        self
    }
}

pub fn load(path: &Path) -> Result<LoadedModel, CliError> {
    ModelFile::read(path)?.into_model()
}

#[cfg(test)]
mod tests {
    use super::*;
    use dualkripke_core::samples::{example1, example2};

    #[test]
    fn epistemic_round_trip() {
        let m = example1();
        let file = ModelFile::from_epistemic(m.model(), Some(m.current_name()));
        let back: ModelFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back, file);
        match back.into_model().unwrap() {
            LoadedModel::Epistemic { model, current } => {
                assert_eq!(&model, m.model());
                assert_eq!(current.as_deref(), Some("s2"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn argument_round_trip_keeps_orientation() {
        let m = example2();
        let file = ModelFile::from_argument(m.model(), None);
        assert_eq!(
            file.attacks.as_ref().unwrap()["p"],
            vec![["A1".to_owned(), "B".to_owned()]]
        );
        let LoadedModel::Argument { model, current } = file.into_model().unwrap() else {
            panic!()
        };
        assert_eq!(&model, m.model());
        assert_eq!(current, None);
    }

    #[test]
    fn wrong_fields_are_rejected() {
        let text = r#"{"kind":"argument","propositions":["p"],"agents":["a"],"worlds":["s"],"arguments":["A"]}"#;
        let file: ModelFile = serde_json::from_str(text).unwrap();
        assert!(matches!(file.into_model(), Err(CliError::Usage(m)) if m.contains("worlds")));
        let text = r#"{"kind":"epistemic","propositions":["p"],"agents":["a"],"worlds":["s"],"extra":1}"#;
        assert!(serde_json::from_str::<ModelFile>(text).is_err());
    }

    #[test]
    fn unknown_names_become_findings() {
        let text = r#"{"kind":"epistemic","propositions":["p"],"agents":["a"],"worlds":["s"],
            "relations":{"a":[["s","s"],["s","t"]]},"valuation":{"r":["s"]}}"#;
        let file: ModelFile = serde_json::from_str(text).unwrap();
        let LoadedModel::Epistemic { model, .. } = file.into_model().unwrap() else {
            panic!()
        };
        let report = dualkripke_core::kripke::validate_epistemic(&model);
        assert_eq!(report.violations.len(), 2);
    }
}
