//! The JSON instance format and the two standard families.
//!
//! An instance is `{"n": 2, "summands": [[1,1,1],[1,2,1],[2,2,1]], "e": [1,1]}`
//! with each summand an `[i, j, mult]` triple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repcore::{DimVector, Instance, Interval, Representation};

/// Unvalidated instance document. Integers are signed so that negative
/// entries surface as semantic errors with a field path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub n: i64,
    pub summands: Vec<[i64; 3]>,
    pub e: Vec<i64>,
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Invalid {
        path: path.into(),
        message: message.into(),
    }
}

/// Parses a document; fails with [`Error::Syntax`] on malformed JSON or
/// unknown fields. Semantic checks happen in [`InstanceSpec::to_instance`].
pub fn parse_instance(text: &str) -> Result<InstanceSpec> {
    serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))
}

/// Parses and validates in one step.
pub fn read_instance(text: &str) -> Result<Instance> {
    parse_instance(text)?.to_instance()
}

impl InstanceSpec {
    pub fn to_instance(&self) -> Result<Instance> {
        if self.n < 1 {
            return Err(invalid("n", "must be at least 1"));
        }
        let n = self.n as usize;
        let mut rep = Representation::zero(n);
        for (k, &[i, j, m]) in self.summands.iter().enumerate() {
            let path = format!("summands[{k}]");
            if i < 1 || j > self.n {
                return Err(invalid(path, format!("[{i},{j}] is not inside [1,{n}]")));
            }
            if i > j {
                return Err(invalid(path, "i > j"));
            }
            if m < 1 {
                return Err(invalid(path, "multiplicity must be positive"));
            }
            rep.add(Interval::new(i as usize, j as usize, n)?, m as usize)?;
        }
        if self.e.len() != n {
            return Err(invalid("e", format!("expected {n} entries, got {}", self.e.len())));
        }
        let mut e = Vec::with_capacity(n);
        for (k, &x) in self.e.iter().enumerate() {
            if x < 0 {
                return Err(invalid(format!("e[{k}]"), "negative"));
            }
            e.push(x as usize);
        }
        Instance::new(rep, DimVector::new(e))
    }

    /// Canonical form of an instance: summands merged and in lexicographic order.
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceSpec {
            n: inst.n() as i64,
            summands: inst
                .rep()
                .triples()
                .into_iter()
                .map(|(i, j, m)| [i as i64, j as i64, m as i64])
                .collect(),
            e: inst.e().iter().map(|&x| x as i64).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// `degflag n`: `P_1 ⊕ ⋯ ⊕ P_n ⊕ I_1 ⊕ ⋯ ⊕ I_n` with `e = (1, 2, …, n)`.
/// `complexes n`: `M[1,1] ⊕ M[1,2] ⊕ ⋯ ⊕ M[n−1,n] ⊕ M[n,n]` with `e = (1, …, 1)`.
pub fn family(name: &str, n: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::Domain("family size must be positive".into()));
    }
    let mut rep = Representation::zero(n);
    let e: Vec<usize> = match name {
        "degflag" => {
            for a in 1..=n {
                rep.add(Interval::projective(a, n)?, 1)?;
                rep.add(Interval::injective(a, n)?, 1)?;
            }
            (1..=n).collect()
        }
        "complexes" => {
            rep.add(Interval::simple(1, n)?, 1)?;
            for i in 1..n {
                rep.add(Interval::new(i, i + 1, n)?, 1)?;
            }
            rep.add(Interval::simple(n, n)?, 1)?;
            vec![1; n]
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    Instance::new(rep, DimVector::new(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let c = read_instance(r#"{"n":2,"summands":[[1,1,1],[1,2,1],[2,2,1]],"e":[1,1]}"#).unwrap();
        assert_eq!(c, family("complexes", 2).unwrap());
        let g = read_instance(r#"{"n":1,"summands":[[1,1,2]],"e":[1]}"#).unwrap();
        assert_eq!(g.rep().triples(), vec![(1, 1, 2)]);
        let err = read_instance(r#"{"n":2,"summands":[[2,1,1]],"e":[0,0]}"#).unwrap_err();
        assert_eq!(err.to_string(), "summands[0]: i > j");
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse_instance("{"), Err(Error::Syntax(_))));
        assert!(matches!(parse_instance(r#"{"n":1,"summands":[],"e":[0],"x":1}"#), Err(Error::Syntax(_))));
        assert!(matches!(parse_instance(r#"{"n":1,"summands":[[1,1]],"e":[0]}"#), Err(Error::Syntax(_))));
        let err = read_instance(r#"{"n":2,"summands":[[1,2,1]],"e":[0,-1]}"#).unwrap_err();
        assert_eq!(err.to_string(), "e[1]: negative");
        let err = read_instance(r#"{"n":2,"summands":[[1,2,1]],"e":[0]}"#).unwrap_err();
        assert_eq!(err.to_string(), "e: expected 2 entries, got 1");
        let err = read_instance(r#"{"n":2,"summands":[[1,3,1]],"e":[0,0]}"#).unwrap_err();
        assert!(err.to_string().starts_with("summands[0]"));
        let err = read_instance(r#"{"n":2,"summands":[[1,2,0]],"e":[0,0]}"#).unwrap_err();
        assert!(err.to_string().starts_with("summands[0]"));
    }

    #[test]
    fn families() {
        let d = family("degflag", 2).unwrap();
        assert_eq!(d.rep().triples(), vec![(1, 1, 1), (1, 2, 2), (2, 2, 1)]);
        assert_eq!(d.e().as_slice(), &[1, 2]);
        let c = family("complexes", 3).unwrap();
        assert_eq!(c.rep().triples(), vec![(1, 1, 1), (1, 2, 1), (2, 3, 1), (3, 3, 1)]);
        assert_eq!(c.e().as_slice(), &[1, 1, 1]);
        assert_eq!(family("complexes", 1).unwrap().rep().triples(), vec![(1, 1, 2)]);
        assert!(matches!(family("flags", 2), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn canonical_roundtrip() {
        for inst in [family("degflag", 3).unwrap(), family("complexes", 4).unwrap()] {
            let doc = InstanceSpec::from_instance(&inst);
            let text = doc.to_json();
            assert_eq!(parse_instance(&text).unwrap(), doc);
            assert_eq!(read_instance(&text).unwrap(), inst);
        }
        let doc = InstanceSpec::from_instance(&family("complexes", 2).unwrap());
        assert_eq!(doc.to_json(), r#"{"n":2,"summands":[[1,1,1],[1,2,1],[2,2,1]],"e":[1,1]}"#);
    }
}
