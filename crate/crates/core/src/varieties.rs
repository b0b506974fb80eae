//! Variety presentations: built-in catalogs and a loader for user-defined
//! files in the identity language.

use crate::error::Error;
use crate::terms::{parse_polynomial, Context, Polylinearity, Polynomial, Signature};
use std::path::Path;

/// One defining identity with its stable id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyIdentity {
    pub id: String,
    pub poly: Polynomial,
}

/// A variety of algebras over an unsplit signature, presented by polylinear
/// identities of degree at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPresentation {
    pub name: String,
    pub nops: usize,
    pub identities: Vec<VarietyIdentity>,
}

pub const BUILTIN_NAMES: &[&str] = &["associative", "commutative", "lie", "poisson", "perm"];

impl VarietyPresentation {
    pub fn new(
        name: impl Into<String>,
        nops: usize,
        identities: Vec<(&str, Polynomial)>,
    ) -> Result<VarietyPresentation, Error> {
        let v = VarietyPresentation {
            name: name.into(),
            nops,
            identities: identities
                .into_iter()
                .map(|(id, poly)| VarietyIdentity {
                    id: id.to_string(),
                    poly,
                })
                .collect(),
        };
        v.validate()?;
        Ok(v)
    }

    pub fn signature(&self) -> Signature {
        Signature::omega(self.nops)
    }

    fn validate(&self) -> Result<(), Error> {
        for id in &self.identities {
            if id.poly.signature() != self.signature() {
                return Err(Error::invalid(format!(
                    "identity `{}` has signature {}, presentation declares {}",
                    id.id,
                    id.poly.signature(),
                    self.signature()
                )));
            }
            match id.poly.polylinearity() {
                Polylinearity::Degree(n) if n >= 2 => {}
                Polylinearity::Degree(_) | Polylinearity::Zero => {
                    return Err(Error::invalid(format!(
                        "identity `{}` must have degree at least two",
                        id.id
                    )));
                }
                Polylinearity::No => {
                    return Err(Error::invalid(format!(
                        "identity `{}` is not polylinear",
                        id.id
                    )));
                }
            }
        }
        Ok(())
    }

    /// A built-in presentation by name.
    pub fn builtin(name: &str) -> Result<VarietyPresentation, Error> {
        let mk = |nops: usize, ids: &[(&str, &str)]| -> VarietyPresentation {
            let sig = Signature::omega(nops);
            VarietyPresentation {
                name: name.to_string(),
                nops,
                identities: ids
                    .iter()
                    .map(|(id, text)| VarietyIdentity {
                        id: id.to_string(),
                        poly: parse_polynomial(text, &sig).expect("builtin identity"),
                    })
                    .collect(),
            }
        };
        let v = match name {
            "associative" => mk(1, &[("assoc", "(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3)")]),
            "commutative" => mk(
                1,
                &[
                    ("comm", "(x1 *1 x2) = (x2 *1 x1)"),
                    ("assoc", "(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3)"),
                ],
            ),
            // Anticommutativity is stored in its polylinear form; the
            // quadratic form x*x would not be accepted here.
            "lie" => mk(
                1,
                &[
                    ("anticomm", "(x1 *1 x2) + (x2 *1 x1)"),
                    (
                        "jacobi",
                        "((x1 *1 x2) *1 x3) + ((x2 *1 x3) *1 x1) + ((x3 *1 x1) *1 x2)",
                    ),
                ],
            ),
            // Operation 1 is the commutative associative product, operation 2
            // the Lie bracket.
            "poisson" => mk(
                2,
                &[
                    ("comm", "(x1 *1 x2) = (x2 *1 x1)"),
                    ("assoc", "(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3)"),
                    ("anticomm", "(x1 *2 x2) + (x2 *2 x1)"),
                    (
                        "jacobi",
                        "((x1 *2 x2) *2 x3) + ((x2 *2 x3) *2 x1) + ((x3 *2 x1) *2 x2)",
                    ),
                    (
                        "leibniz",
                        "((x1 *1 x2) *2 x3) = (x1 *1 (x2 *2 x3)) + (x2 *1 (x1 *2 x3))",
                    ),
                ],
            ),
            "perm" => mk(
                1,
                &[
                    ("assoc", "(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3)"),
                    ("left-comm", "((x1 *1 x2) *1 x3) = ((x2 *1 x1) *1 x3)"),
                ],
            ),
            _ => {
                return Err(Error::invalid(format!(
                    "unknown variety `{name}` (builtins: {})",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        };
        v.validate()?;
        Ok(v)
    }

    /// Loads a presentation from a file: a `# nops: k` header followed by one
    /// identity per line; `#` starts a comment.
    pub fn load(path: impl AsRef<Path>) -> Result<VarietyPresentation, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "variety".to_string());
        VarietyPresentation::parse_str(&text, &name)
    }

    pub fn parse_str(text: &str, name: &str) -> Result<VarietyPresentation, Error> {
        let (sig, identities) = parse_identity_file(text, Context::Omega)?;
        let v = VarietyPresentation {
            name: name.to_string(),
            nops: sig.nops,
            identities: identities
                .into_iter()
                .map(|(id, poly)| VarietyIdentity { id, poly })
                .collect(),
        };
        v.validate()?;
        Ok(v)
    }
}

/// Reads an identity-language file: `# nops:` (required) and `# context:`
/// (optional, defaulting to the given context) headers, then one identity per
/// line. Labels come from preceding `# source:`/`# zero:` comments when
/// present, else from the 1-based position.
pub fn parse_identity_file(
    text: &str,
    default_context: Context,
) -> Result<(Signature, Vec<(String, Polynomial)>), Error> {
    let mut nops: Option<usize> = None;
    let mut context = default_context;
    let mut out: Vec<(String, Polynomial)> = Vec::new();
    let mut pending_label: Option<String> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(v) = comment.strip_prefix("nops:") {
                let k: usize = v.trim().parse().map_err(|_| {
                    Error::invalid(format!("line {}: bad nops header", lineno + 1))
                })?;
                if k == 0 {
                    return Err(Error::invalid("nops must be positive"));
                }
                nops = Some(k);
            } else if let Some(v) = comment.strip_prefix("context:") {
                context = Context::from_name(v.trim()).ok_or_else(|| {
                    Error::invalid(format!("line {}: bad context header", lineno + 1))
                })?;
            } else if let Some(v) = comment.strip_prefix("source:") {
                pending_label = Some(v.trim().to_string());
            } else if let Some(v) = comment.strip_prefix("zero:") {
                pending_label = Some(v.trim().to_string());
            }
            continue;
        }
        let Some(k) = nops else {
            return Err(Error::invalid(format!(
                "line {}: identity before `# nops:` header",
                lineno + 1
            )));
        };
        let sig = Signature::new(k, context);
        let poly = parse_polynomial(line, &sig).map_err(|e| {
            Error::invalid(format!("line {}: {e}", lineno + 1))
        })?;
        let label = pending_label
            .take()
            .unwrap_or_else(|| (out.len() + 1).to_string());
        out.push((label, poly));
    }
    let Some(k) = nops else {
        return Err(Error::invalid("missing `# nops:` header"));
    };
    Ok((Signature::new(k, context), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Polylinearity;

    #[test]
    fn builtin_catalog() {
        let assoc = VarietyPresentation::builtin("associative").unwrap();
        assert_eq!(assoc.nops, 1);
        assert_eq!(assoc.identities.len(), 1);

        let poisson = VarietyPresentation::builtin("poisson").unwrap();
        assert_eq!(poisson.nops, 2);
        assert_eq!(poisson.identities.len(), 5);
        let ids: Vec<&str> = poisson.identities.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(ids, ["comm", "assoc", "anticomm", "jacobi", "leibniz"]);

        let perm = VarietyPresentation::builtin("perm").unwrap();
        assert_eq!(perm.nops, 1);
        assert_eq!(perm.identities.len(), 2);

        assert!(VarietyPresentation::builtin("boolean").is_err());
    }

    #[test]
    fn builtins_are_polylinear() {
        for name in BUILTIN_NAMES {
            let v = VarietyPresentation::builtin(name).unwrap();
            for id in &v.identities {
                assert!(
                    matches!(id.poly.polylinearity(), Polylinearity::Degree(n) if n >= 2),
                    "{name}/{} not polylinear",
                    id.id
                );
            }
        }
    }

    #[test]
    fn file_round_trip_matches_builtin() {
        let text = "# nops: 1\n(x1 *1 (x2 *1 x3)) - ((x1 *1 x2) *1 x3)\n";
        let v = VarietyPresentation::parse_str(text, "associative").unwrap();
        let b = VarietyPresentation::builtin("associative").unwrap();
        assert_eq!(v.identities[0].poly, b.identities[0].poly);
    }

    #[test]
    fn rejects_non_polylinear_file() {
        let text = "# nops: 1\n(x1 *1 x1)\n";
        let err = VarietyPresentation::parse_str(text, "bad").unwrap_err();
        assert!(err.to_string().contains("not polylinear"), "{err}");
    }

    #[test]
    fn accepts_leibniz_algebra_file() {
        // Left Leibniz identity: x1 acts as a derivation of the product.
        let text = "# nops: 1\n(x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3) + (x2 *1 (x1 *1 x3))\n";
        let v = VarietyPresentation::parse_str(text, "leibniz").unwrap();
        assert_eq!(v.nops, 1);
        assert_eq!(v.identities.len(), 1);
        assert_eq!(v.identities[0].poly.polylinearity(), Polylinearity::Degree(3));
    }

    #[test]
    fn missing_header_is_rejected() {
        assert!(VarietyPresentation::parse_str("(x1 *1 x2)", "x").is_err());
    }
}
