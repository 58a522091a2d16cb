use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use obrsk_core::{IdElement, Root};
use serde::de::DeserializeOwned;

pub fn read_json<T: DeserializeOwned>(path: Option<&Path>) -> Result<T> {
    let mut text = String::new();
    match path {
        Some(p) => text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
    }
    serde_json::from_str(&text).context("parsing JSON input")
}

pub fn id_element(d: u32, s: &str, name: &str) -> Result<IdElement> {
    IdElement::parse(d, s).with_context(|| format!("--{name} {s} is not an element of I({d})"))
}

/// `"2,1;5,3"` as roots.
pub fn roots(s: &str) -> Result<Vec<Root>> {
    let mut out = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let xs: Vec<&str> = part.split(',').map(str::trim).collect();
        if xs.len() != 2 {
            bail!("expected r,c but got {part:?}");
        }
        let r = xs[0].parse().with_context(|| format!("bad row in {part:?}"))?;
        let c = xs[1].parse().with_context(|| format!("bad column in {part:?}"))?;
        out.push(Root::new(r, c));
    }
    Ok(out)
}

pub fn print_json<T: serde::Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string(v)?);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_roots() {
        assert_eq!(roots("2,1; 5,3").unwrap(), vec![Root::new(2, 1), Root::new(5, 3)]);
        assert!(roots("2").is_err());
        assert!(roots("").unwrap().is_empty());
    }

    #[test]
    fn rejects_non_members() {
        assert!(id_element(2, "3,4", "beta").is_ok());
        assert!(id_element(2, "1,4", "beta").is_err());
    }
}
