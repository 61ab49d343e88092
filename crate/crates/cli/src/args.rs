//! Argument parsing shared by the subcommands.

use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use disthom::complex::{ComplexPart, PartKind, ScalarVector};
use disthom::enumeration::{Dedup, Predicate};
use disthom::MultiMagma;

use crate::CliError;

/// Reads a magma file and optionally adjoins `◁` and/or `▷`.
pub fn load_magma(path: &Path, adjoin: Option<&str>) -> Result<MultiMagma, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let m = MultiMagma::from_json(&text)?;
    match adjoin {
        None => Ok(m),
        Some(spec) => {
            let (left, right) = parse_adjoin(spec)?;
            Ok(m.augment_with_trivial(left, right)?)
        }
    }
}

/// `left`, `right` or `left,right`.
pub fn parse_adjoin(spec: &str) -> Result<(bool, bool), CliError> {
    let mut left = false;
    let mut right = false;
    for part in spec.split(',').map(str::trim) {
        match part {
            "left" => left = true,
            "right" => right = true,
            other => return Err(CliError::Input(format!("--adjoin-trivial: unknown side `{other}`"))),
        }
    }
    Ok((left, right))
}

/// Comma-separated integers, checked against the operation count.
pub fn parse_scalars(text: &str, ops: Option<usize>) -> Result<ScalarVector, CliError> {
    let values = text
        .split(',')
        .map(|v| {
            v.trim()
                .replace('−', "-")
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("--scalars: `{}` is not an integer", v.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(k) = ops {
        if values.len() != k {
            return Err(CliError::Input(format!(
                "--scalars has {} values but the input has {k} operations",
                values.len()
            )));
        }
    }
    Ok(ScalarVector::new(values))
}

/// `full`, `reduced[:t]`, `f[:t]`, `cf[:t]`, `filtration:p`, `degenerate`, `normalized`.
pub fn parse_part(text: &str, augmented: bool) -> Result<ComplexPart, CliError> {
    let (name, arg) = match text.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (text, None),
    };
    let index = |default: Option<usize>| -> Result<usize, CliError> {
        match arg {
            Some(a) => a
                .parse()
                .map_err(|_| CliError::Input(format!("--part: `{a}` is not an element index"))),
            None => default.ok_or_else(|| CliError::Input(format!("--part {name} needs an index, e.g. {name}:1"))),
        }
    };
    let kind = match name {
        "full" => PartKind::Full,
        "reduced" => PartKind::Reduced(index(Some(0))?),
        "f" => PartKind::InitDeg(index(Some(0))?),
        "cf" => PartKind::InitNorm(index(Some(0))?),
        "filtration" => PartKind::Filtration(index(None)?),
        "degenerate" => PartKind::Degenerate,
        "normalized" => PartKind::Normalized,
        other => return Err(CliError::Input(format!("--part: unknown part `{other}`"))),
    };
    let part = ComplexPart::new(kind);
    Ok(if augmented { part.augmented() } else { part })
}

/// `3`, `3..4` or `3..=4`.
pub fn parse_sizes(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Input(format!("--sizes: cannot read `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (lo, hi) = (num(a)?, num(b)?);
        if lo > hi {
            return Err(bad());
        }
        Ok(lo..=hi)
    } else {
        let n = num(text)?;
        Ok(n..=n)
    }
}

fn kebab<T: serde::Serialize>(v: T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

pub fn predicate_name(p: Predicate) -> String {
    kebab(p)
}

pub fn parse_predicate(text: &str) -> Result<Predicate, CliError> {
    Predicate::all().into_iter().find(|&p| predicate_name(p) == text).ok_or_else(|| {
        let names: Vec<String> = Predicate::all().into_iter().map(predicate_name).collect();
        CliError::Input(format!("unknown predicate `{text}`; expected one of {}", names.join(", ")))
    })
}

pub fn parse_dedup(text: &str) -> Result<Dedup, CliError> {
    [Dedup::None, Dedup::Iso, Dedup::IsoDuality]
        .into_iter()
        .find(|&d| kebab(d) == text)
        .ok_or_else(|| CliError::Input(format!("unknown dedup `{text}`; expected none, iso or iso-duality")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts() {
        assert_eq!(parse_part("cf:2", false).unwrap(), ComplexPart::cf(2));
        assert_eq!(parse_part("reduced", false).unwrap(), ComplexPart::reduced(0));
        assert!(parse_part("normalized", true).unwrap().augmented);
        assert!(parse_part("filtration", false).is_err());
        assert!(parse_part("bogus", false).is_err());
    }

    #[test]
    fn scalars_accept_unicode_minus() {
        assert_eq!(parse_scalars("1,−2", Some(2)).unwrap().as_slice(), &[1, -2]);
        assert!(parse_scalars("1,2", Some(3)).is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("3..4").unwrap(), 3..=4);
        assert_eq!(parse_sizes("3..=4").unwrap(), 3..=4);
        assert_eq!(parse_sizes("2").unwrap(), 2..=2);
        assert!(parse_sizes("4..3").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(parse_predicate("generalized-lattice").unwrap(), Predicate::GeneralizedLattice);
        assert_eq!(parse_dedup("iso-duality").unwrap(), Dedup::IsoDuality);
        assert_eq!(parse_adjoin("left,right").unwrap(), (true, true));
    }
}
