//! Assignment mini-syntax for `boole eval`.
//!
//! Classes: `U=3; x={0,2}; y={}`. Multisets: `x=(1,-2,0); y=(0,1,1)`, with an
//! optional `U=n` that must match the tuple lengths.

use std::collections::BTreeMap;

use boole_core::models::{ClassAssignment, Multiset, MultisetAssignment, Universe};
use boole_core::VarName;
use num_bigint::BigInt;

fn split_bindings(text: &str) -> Result<Vec<(&str, &str)>, String> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|b| {
            b.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| format!("expected name=value, found {b:?}"))
        })
        .collect()
}

fn delimited(v: &str, open: char, close: char) -> Result<Vec<&str>, String> {
    let inner = v
        .strip_prefix(open)
        .and_then(|s| s.strip_suffix(close))
        .ok_or_else(|| format!("expected {open}…{close}, found {v:?}"))?;
    Ok(inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect())
}

fn universe_size(v: &str) -> Result<usize, String> {
    v.parse().map_err(|_| format!("bad universe size {v:?}"))
}

fn name(k: &str) -> Result<VarName, String> {
    VarName::new(k).map_err(|e| e.to_string())
}

pub fn parse_classes(text: &str) -> Result<ClassAssignment, String> {
    let mut size = None;
    let mut map = BTreeMap::new();
    for (k, v) in split_bindings(text)? {
        if k == "U" {
            size = Some(universe_size(v)?);
            continue;
        }
        let mut mask = 0u32;
        for e in delimited(v, '{', '}')? {
            let i: u32 = e.parse().map_err(|_| format!("bad element {e:?}"))?;
            if i >= 32 {
                return Err(format!("element {i} is out of range"));
            }
            mask |= 1 << i;
        }
        if map.insert(name(k)?, mask).is_some() {
            return Err(format!("{k} is assigned twice"));
        }
    }
    let size = size.ok_or("missing universe size U=n")?;
    let universe = Universe::new(size).map_err(|e| e.to_string())?;
    ClassAssignment::new(universe, map).map_err(|e| e.to_string())
}

pub fn parse_multisets(text: &str) -> Result<MultisetAssignment, String> {
    let mut size = None;
    let mut map = BTreeMap::new();
    for (k, v) in split_bindings(text)? {
        if k == "U" {
            size = Some(universe_size(v)?);
            continue;
        }
        let values = delimited(v, '(', ')')?
            .into_iter()
            .map(|e| {
                e.parse::<BigInt>()
                    .map_err(|_| format!("bad integer {e:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if map.insert(name(k)?, Multiset::new(values)).is_some() {
            return Err(format!("{k} is assigned twice"));
        }
    }
    let size = match size {
        Some(s) => s,
        None => map
            .values()
            .next()
            .map(Multiset::len)
            .ok_or("missing universe size U=n")?,
    };
    let universe = Universe::new(size).map_err(|e| e.to_string())?;
    MultisetAssignment::new(universe, map).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        let a = parse_classes("U=2; x={0}; y={0,1}").unwrap();
        assert_eq!(a.universe().size(), 2);
        assert_eq!(a.get(&VarName::new("x").unwrap()), Some(0b01));
        assert_eq!(a.get(&VarName::new("y").unwrap()), Some(0b11));
        let a = parse_classes(" U = 3 ; z = { } ;").unwrap();
        assert_eq!(a.get(&VarName::new("z").unwrap()), Some(0));
        assert!(parse_classes("x={0}").is_err());
        assert!(parse_classes("U=1; x={1}").is_err());
        assert!(parse_classes("U=2; x=0").is_err());
        assert!(parse_classes("U=2; x={0}; x={1}").is_err());
        assert!(parse_classes("U=17").is_err());
    }

    #[test]
    fn multisets() {
        let m = parse_multisets("x=(1,-2,0); y=(0,1,1)").unwrap();
        assert_eq!(m.universe().size(), 3);
        assert!(parse_multisets("x=(1,2); y=(1)").is_err());
        assert!(parse_multisets("U=2; x=(1,2,3)").is_err());
        assert_eq!(parse_multisets("U=4").unwrap().universe().size(), 4);
        assert!(parse_multisets("").is_err());
    }
}
