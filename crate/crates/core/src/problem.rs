//! Problem files: a JSON document describing a semigroup by generators,
//! inequalities, or homogeneous equations and congruences, plus optional
//! form system, bounds, class and options.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{from_equations, AffineSemigroup, FormSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    Generators,
    Inequalities,
    Equations,
}

/// Which lattice the normalization of a generator list lives in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeChoice {
    /// `Z^n ∩ span(generators)`.
    #[default]
    Saturation,
    /// The group generated by the generators.
    Group,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Congruence {
    pub coefficients: Vec<i64>,
    pub modulus: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap_faces: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hs_window: Option<usize>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub rank: usize,
    pub presentation: Presentation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeChoice>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub congruences: Option<Vec<Congruence>>,
    /// Forms on the ambient lattice `Z^rank`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<i64>>,
    #[serde(default)]
    pub options: Options,
}

fn check_vectors(field: &str, vs: &[Vec<i64>], n: usize) -> Result<()> {
    for (i, v) in vs.iter().enumerate() {
        if v.len() != n {
            return Err(Error::Dimension(format!("{field}[{i}] has length {} but rank is {n}", v.len())));
        }
    }
    Ok(())
}

impl ProblemFile {
    pub fn validate(&self) -> Result<()> {
        let n = self.rank;
        if n == 0 {
            return Err(Error::Input("rank: must be positive".into()));
        }
        let present = [
            ("generators", self.generators.is_some()),
            ("inequalities", self.inequalities.is_some()),
            ("equations", self.equations.is_some() || self.congruences.is_some()),
        ];
        let wanted = match self.presentation {
            Presentation::Generators => "generators",
            Presentation::Inequalities => "inequalities",
            Presentation::Equations => "equations",
        };
        for (name, here) in present {
            if here && name != wanted {
                return Err(Error::Input(format!("{name}: not allowed with presentation \"{wanted}\"")));
            }
        }
        if self.lattice.is_some() && self.presentation != Presentation::Generators {
            return Err(Error::Input("lattice: only meaningful for a generator presentation".into()));
        }
        match self.presentation {
            Presentation::Generators => {
                let g = self.generators.as_ref().ok_or_else(|| Error::Input("generators: missing".into()))?;
                if g.is_empty() {
                    return Err(Error::Input("generators: empty semigroup description".into()));
                }
                check_vectors("generators", g, n)?;
            }
            Presentation::Inequalities => {
                let f = self.inequalities.as_ref().ok_or_else(|| Error::Input("inequalities: missing".into()))?;
                if f.is_empty() {
                    return Err(Error::Input("inequalities: empty semigroup description".into()));
                }
                check_vectors("inequalities", f, n)?;
            }
            Presentation::Equations => {
                check_vectors("equations", self.equations.as_deref().unwrap_or(&[]), n)?;
                for (i, c) in self.congruences.iter().flatten().enumerate() {
                    if c.coefficients.len() != n {
                        return Err(Error::Dimension(format!(
                            "congruences[{i}].coefficients has length {} but rank is {n}",
                            c.coefficients.len()
                        )));
                    }
                    if c.modulus < 2 {
                        return Err(Error::Input(format!("congruences[{i}].modulus: must be at least 2")));
                    }
                }
            }
        }
        if let Some(xi) = &self.xi {
            if xi.is_empty() {
                return Err(Error::Input("xi: empty form system".into()));
            }
            check_vectors("xi", xi, n)?;
        }
        Ok(())
    }

    pub fn semigroup(&self) -> Result<AffineSemigroup> {
        self.validate()?;
        let n = self.rank;
        match self.presentation {
            Presentation::Generators => {
                let g = self.generators.as_deref().unwrap_or(&[]);
                match self.lattice.unwrap_or_default() {
                    LatticeChoice::Saturation => AffineSemigroup::from_generators(n, g),
                    LatticeChoice::Group => AffineSemigroup::from_generators_in_group(n, g),
                }
            }
            Presentation::Inequalities => {
                AffineSemigroup::from_inequalities(n, self.inequalities.as_deref().unwrap_or(&[]))
            }
            Presentation::Equations => {
                let cong: Vec<(Vec<i64>, i64)> =
                    self.congruences.iter().flatten().map(|c| (c.coefficients.clone(), c.modulus)).collect();
                from_equations(n, self.equations.as_deref().unwrap_or(&[]), &cong)
            }
        }
    }

    /// The `xi` system restricted to `gp(S)`, if present.
    pub fn form_system(&self, s: &AffineSemigroup) -> Result<Option<FormSystem>> {
        self.xi.as_ref().map(|xi| FormSystem::from_ambient(s, xi)).transpose()
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let p: ProblemFile = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    p.validate()?;
    Ok(p)
}

pub fn load_problem(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        Error::Dimension(m) => Error::Dimension(format!("{}: {m}", path.display())),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_from_generators() {
        let p = parse_problem(r#"{"rank": 2, "presentation": "generators", "generators": [[1,0],[0,1]]}"#).unwrap();
        assert_eq!(p.generators.as_ref().unwrap().len(), 2);
        let s = p.semigroup().unwrap();
        assert_eq!(s.hilbert_basis, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn segre_from_equations() {
        let p = parse_problem(r#"{"rank": 5, "presentation": "equations", "equations": [[1,1,-1,-1,-1]]}"#).unwrap();
        let s = p.semigroup().unwrap();
        assert_eq!((s.rank, s.num_forms(), s.hilbert_basis.len()), (4, 5, 6));
    }

    #[test]
    fn congruence_gives_the_quadratic_cone() {
        let p = parse_problem(
            r#"{"rank": 2, "presentation": "equations", "congruences": [{"coefficients": [1,1], "modulus": 2}]}"#,
        )
        .unwrap();
        let s = p.semigroup().unwrap();
        assert_eq!((s.rank, s.num_forms(), s.hilbert_basis.len()), (2, 2, 3));
    }

    #[test]
    fn diagnostics() {
        let e = parse_problem(r#"{"rank": 2, "presentation": "generators", "generators": [[1,0],[0,1,2]]}"#);
        assert!(matches!(e, Err(Error::Dimension(m)) if m.contains("generators[1]")));
        let e = parse_problem(r#"{"rank": 2, "presentation": "generators", "generators": []}"#);
        assert!(matches!(e, Err(Error::Input(m)) if m.contains("empty")));
        let e = parse_problem(r#"{"rank": 2, "presentation": "generators", "inequalities": [[1,0]]}"#);
        assert!(matches!(e, Err(Error::Input(_))));
        let e = parse_problem(
            r#"{"rank": 2, "presentation": "equations", "congruences": [{"coefficients": [1,1], "modulus": 1}]}"#,
        );
        assert!(matches!(e, Err(Error::Input(m)) if m.contains("modulus")));
        let e = parse_problem("{\"rank\": 2,\n \"presentation\": \"generators\",\n \"generators\": [[1, 0.5]]}");
        assert!(matches!(e, Err(Error::Input(m)) if m.contains("line 3")));
        let e = parse_problem(r#"{"rank": 2, "presentation": "generators", "generators": [[1,0]], "colour": 1}"#);
        assert!(matches!(e, Err(Error::Input(m)) if m.contains("colour")));
    }
}
