//! The JSON problem file and its parsed form.

use std::collections::BTreeMap;
use std::path::Path;

use modclosure::multiplicity::RandomSpec;
use modclosure::{Ideal, PolyMatrix, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Optional overrides of the Monte Carlo parameters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomFields {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
}

impl RandomFields {
    /// Fields set in `other` win.
    pub fn overridden_by(self, other: RandomFields) -> RandomFields {
        RandomFields {
            seed: other.seed.or(self.seed),
            bound: other.bound.or(self.bound),
            trials: other.trials.or(self.trials),
        }
    }

    pub fn resolve(self) -> Result<RandomSpec, CliError> {
        let d = RandomSpec::default();
        let rs = RandomSpec {
            seed: self.seed.unwrap_or(d.seed),
            bound: self.bound.unwrap_or(d.bound),
            trials: self.trials.unwrap_or(d.trials),
        };
        rs.validate()?;
        Ok(rs)
    }
}

/// A problem as written on disk: polynomials are strings over `vars`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    /// Row-major; columns are the generators of the submodule.
    pub matrix: Vec<Vec<String>>,
    /// Supplied integrally closed ideals by name, `K` being the default.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
    /// Arc components, univariate in `arc_var`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc_var: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomFields>,
}

impl ProblemFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed problem file: {e}")))
    }

    pub fn load(&self) -> Result<Problem, CliError> {
        if self.vars.is_empty() {
            return Err(CliError::Input("`vars` must name at least one variable".into()));
        }
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let ring = Ring::new(&names);
        if self.matrix.is_empty() {
            return Err(CliError::Input("`matrix` needs at least one row".into()));
        }
        let width = self.matrix[0].len();
        if let Some(bad) = self.matrix.iter().position(|r| r.len() != width) {
            return Err(CliError::Input(format!(
                "matrix is not rectangular: row {bad} has {} entries, row 0 has {width}",
                self.matrix[bad].len()
            )));
        }
        let matrix = PolyMatrix::parse(&ring, &self.matrix)?;
        let mut ideals = BTreeMap::new();
        for (name, gens) in &self.ideals {
            ideals.insert(name.clone(), Ideal::parse(&ring, gens)?);
        }
        let h = match &self.h {
            None => None,
            Some(v) => {
                if v.len() != matrix.nrows() {
                    return Err(CliError::Input(format!(
                        "`h` has {} entries but the matrix has {} rows",
                        v.len(),
                        matrix.nrows()
                    )));
                }
                Some(parse_all(v, &ring)?)
            }
        };
        let phi = match &self.phi {
            None => None,
            Some(v) => {
                let var = self.arc_var.as_deref().unwrap_or("t");
                Some(parse_all(v, &Ring::new(&[var]))?)
            }
        };
        Ok(Problem {
            ring,
            matrix,
            ideals,
            h,
            phi,
            random: self.random.unwrap_or_default(),
        })
    }
}

fn parse_all(texts: &[String], ring: &Ring) -> Result<Vec<Polynomial>, CliError> {
    texts
        .iter()
        .map(|s| Polynomial::parse(s, ring).map_err(CliError::from))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Problem {
    pub ring: Ring,
    pub matrix: PolyMatrix,
    pub ideals: BTreeMap<String, Ideal>,
    pub h: Option<Vec<Polynomial>>,
    pub phi: Option<Vec<Polynomial>>,
    pub random: RandomFields,
}

impl Problem {
    pub fn ideal(&self, name: &str) -> Result<&Ideal, CliError> {
        self.ideals
            .get(name)
            .ok_or_else(|| CliError::Input(format!("no ideal named `{name}` in the problem file")))
    }

    pub fn h(&self) -> Result<&[Polynomial], CliError> {
        self.h
            .as_deref()
            .ok_or_else(|| CliError::Input("this command needs a vector `h`".into()))
    }

    pub fn phi(&self) -> Result<&[Polynomial], CliError> {
        self.phi
            .as_deref()
            .ok_or_else(|| CliError::Input("this command needs an arc `phi`".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_matrix() {
        let f = ProblemFile {
            vars: vec!["x".into()],
            matrix: vec![vec!["x".into(), "1".into()], vec!["x".into()]],
            ..Default::default()
        };
        assert!(matches!(f.load(), Err(CliError::Input(_))));
    }

    #[test]
    fn random_overrides() {
        let file = RandomFields {
            seed: Some(7),
            bound: Some(10),
            trials: None,
        };
        let flags = RandomFields {
            seed: Some(9),
            ..Default::default()
        };
        let rs = file.overridden_by(flags).resolve().unwrap();
        assert_eq!((rs.seed, rs.bound, rs.trials), (9, 10, 5));
        assert!(RandomFields {
            trials: Some(0),
            ..Default::default()
        }
        .resolve()
        .is_err());
    }

    #[test]
    fn unknown_fields_are_errors() {
        assert!(ProblemFile::from_json(r#"{"vars":["x"],"matrix":[["x"]],"bogus":1}"#).is_err());
    }
}
