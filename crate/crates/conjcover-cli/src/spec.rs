//! Group specifications: a small JSON schema plus a compact shorthand, both
//! resolving to enumerated group tables.

use serde::{Deserialize, Serialize};

use conjcover::constructions::{alternating, cyclic, dihedral, symmetric, wreath_product};
use conjcover::error::{Error, Result};
use conjcover::perm::Perm;
use conjcover::solvable::{agl1, SolvableFrame};
use conjcover::table::GroupTable;

/// Degree-11 generators whose closure is the Mathieu group of order 7920.
pub const M11_GENERATORS: [&str; 2] = ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"];

/// Degree-8 generators of the quaternion group in its regular action.
pub const Q8_GENERATORS: [&str; 2] = ["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"];

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Perm {
        degree: usize,
        generators: Vec<String>,
    },
    Dihedral {
        n: usize,
    },
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    Cyclic {
        n: usize,
    },
    Agl1 {
        p: u64,
        k: u64,
    },
    Wreath {
        base: Box<GroupSpec>,
        copies: usize,
        top: Box<GroupSpec>,
    },
}

/// A resolved specification: the table, a frame when the spec is affine, and
/// a printable name.
pub struct Resolved {
    pub name: String,
    pub table: GroupTable,
    pub frame: Option<SolvableFrame>,
}

impl GroupSpec {
    /// Accepts either a JSON object (leading `{`) or the shorthand
    /// `kind:arg[:arg]`, e.g. `dihedral:7`, `sym:5`, `agl1:13:4`,
    /// `perm:4:(1 2 3 4),(1 2)`, and the named groups `m11` and `q8`.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed)
                .map_err(|e| Error::InvalidParameter(format!("bad group spec JSON: {e}")));
        }
        let lower = trimmed.to_ascii_lowercase();
        if lower == "m11" {
            return Ok(GroupSpec::Perm {
                degree: 11,
                generators: M11_GENERATORS.iter().map(|s| s.to_string()).collect(),
            });
        }
        if lower == "q8" {
            return Ok(GroupSpec::Perm {
                degree: 8,
                generators: Q8_GENERATORS.iter().map(|s| s.to_string()).collect(),
            });
        }
        let mut parts = trimmed.splitn(3, ':');
        let kind = parts.next().unwrap_or_default().to_ascii_lowercase();
        let arg1 = parts.next();
        let arg2 = parts.next();
        let num = |s: Option<&str>| -> Result<usize> {
            s.and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| Error::InvalidParameter(format!("bad group spec '{trimmed}'")))
        };
        match kind.as_str() {
            "dihedral" | "d" => Ok(GroupSpec::Dihedral { n: num(arg1)? }),
            "symmetric" | "sym" | "s" => Ok(GroupSpec::Symmetric { n: num(arg1)? }),
            "alternating" | "alt" | "a" => Ok(GroupSpec::Alternating { n: num(arg1)? }),
            "cyclic" | "c" => Ok(GroupSpec::Cyclic { n: num(arg1)? }),
            "agl1" => Ok(GroupSpec::Agl1 {
                p: num(arg1)? as u64,
                k: num(arg2)? as u64,
            }),
            "perm" => {
                let degree = num(arg1)?;
                let gens = arg2
                    .ok_or_else(|| Error::InvalidParameter("perm spec needs generators".into()))?;
                let generators = split_generator_list(gens);
                Ok(GroupSpec::Perm { degree, generators })
            }
            _ => Err(Error::InvalidParameter(format!(
                "unknown group kind '{kind}'"
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupSpec::Perm { degree, generators } => {
                format!("perm(deg {degree}, {} gens)", generators.len())
            }
            GroupSpec::Dihedral { n } => format!("D_{}", 2 * n),
            GroupSpec::Symmetric { n } => format!("Sym({n})"),
            GroupSpec::Alternating { n } => format!("Alt({n})"),
            GroupSpec::Cyclic { n } => format!("C_{n}"),
            GroupSpec::Agl1 { p, k } => format!("AGL1({p},{k})"),
            GroupSpec::Wreath { base, copies, top } => {
                format!("({}) wr[{}] ({})", base.name(), copies, top.name())
            }
        }
    }

    /// Builds the group, enforcing the order cap.
    pub fn resolve(&self, cap: usize) -> Result<Resolved> {
        let name = self.name();
        match self {
            GroupSpec::Perm { degree, generators } => {
                let gens: Vec<Perm> = generators
                    .iter()
                    .map(|s| Perm::parse_cycles(s, *degree))
                    .collect::<Result<_>>()?;
                let table = GroupTable::generate(*degree, &gens, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
            GroupSpec::Dihedral { n } => {
                let table = with_cap(dihedral(*n)?, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
            GroupSpec::Symmetric { n } => {
                let table = with_cap(symmetric(*n)?, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
            GroupSpec::Alternating { n } => {
                let table = with_cap(alternating(*n)?, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
            GroupSpec::Cyclic { n } => {
                let table = with_cap(cyclic(*n)?, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
            GroupSpec::Agl1 { p, k } => {
                let frame = agl1(*p, *k)?;
                if frame.table.order() > cap {
                    return Err(Error::OrderCapExceeded { cap });
                }
                let table = frame.table.clone();
                Ok(Resolved {
                    name,
                    table,
                    frame: Some(frame),
                })
            }
            GroupSpec::Wreath { base, copies, top } => {
                let base = base.resolve(cap)?;
                let top = top.resolve(cap)?;
                let table = wreath_product(&base.table, *copies, &top.table, cap)?;
                Ok(Resolved {
                    name,
                    table,
                    frame: None,
                })
            }
        }
    }
}

fn with_cap(table: GroupTable, cap: usize) -> Result<GroupTable> {
    if table.order() > cap {
        return Err(Error::OrderCapExceeded { cap });
    }
    Ok(table)
}

/// Splits `"(1 2 3),(1 2)"` into cycle strings, respecting parentheses.
pub fn split_generator_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                current.push(c);
            }
            ',' | ';' if depth == 0 => {
                if !current.trim().is_empty() {
                    out.push(current.trim().to_string());
                }
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        out.push(current.trim().to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_specs_resolve() {
        let r = GroupSpec::parse("dihedral:7")
            .unwrap()
            .resolve(10_000)
            .unwrap();
        assert_eq!(r.table.order(), 14);
        assert_eq!(r.name, "D_14");

        let r = GroupSpec::parse("sym:5").unwrap().resolve(10_000).unwrap();
        assert_eq!(r.table.order(), 120);

        let r = GroupSpec::parse("agl1:13:4")
            .unwrap()
            .resolve(10_000)
            .unwrap();
        assert_eq!(r.table.order(), 52);
        assert!(r.frame.is_some());

        let r = GroupSpec::parse("perm:5:(1 2 3 4 5),(1 2)")
            .unwrap()
            .resolve(10_000)
            .unwrap();
        assert_eq!(r.table.order(), 120);

        let r = GroupSpec::parse("q8").unwrap().resolve(10_000).unwrap();
        assert_eq!(r.table.order(), 8);
    }

    #[test]
    fn json_specs_resolve() {
        let text = r#"{"kind": "perm", "degree": 5, "generators": ["(1 2 3 4 5)", "(1 2)"]}"#;
        let r = GroupSpec::parse(text).unwrap().resolve(10_000).unwrap();
        assert_eq!(r.table.order(), 120);

        let text = r#"{"kind": "wreath",
                       "base": {"kind": "symmetric", "n": 3},
                       "copies": 2,
                       "top": {"kind": "cyclic", "n": 2}}"#;
        let r = GroupSpec::parse(text).unwrap().resolve(10_000).unwrap();
        assert_eq!(r.table.order(), 72);
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(GroupSpec::parse("noidea:7").is_err());
        assert!(GroupSpec::parse("dihedral:x").is_err());
        assert!(GroupSpec::parse("{\"kind\": \"nope\"}").is_err());
        assert!(GroupSpec::parse("sym:5").unwrap().resolve(50).is_err());
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = GroupSpec::Wreath {
            base: Box::new(GroupSpec::Alternating { n: 5 }),
            copies: 2,
            top: Box::new(GroupSpec::Cyclic { n: 2 }),
        };
        let text = serde_json::to_string(&spec).unwrap();
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
    }
}
