//! Spectrum and configuration arguments.
//!
//! A spectrum source is one of
//!
//! * `fermat:N,D`
//! * `germ:CLASS` or `germ:CLASS@N` (curve germ by default)
//! * `weights:W1,W2`
//! * an inline JSON array of `{"num","den","mult"}` objects
//! * a path to a file holding such an array
//!
//! A configuration is inline JSON (`{"n":2,"d":4,"germs":["A7"]}`), the compact
//! form `N,D:G1,G2,...` (`N,D:` for a smooth hypersurface), or a file path.

use std::fs;

use singspec::scalar::parse_rational;
use singspec::{fermat_spectrum, spectrum_from_weights, Configuration, Error, GermClass, GermKind, Result, Spectrum};

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| Error::Parse(format!("{what}: expected a non-negative integer, got `{s}`")))
}

fn pair<'a>(s: &'a str, what: &str) -> Result<(&'a str, &'a str)> {
    s.split_once(',').ok_or_else(|| Error::Parse(format!("{what}: expected two comma-separated values, got `{s}`")))
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))
}

pub fn spectrum(src: &str) -> Result<Spectrum> {
    let src = src.trim();
    if let Some(rest) = src.strip_prefix("fermat:") {
        let (n, d) = pair(rest, "fermat")?;
        return fermat_spectrum(parse_u32(n, "n")?, parse_u32(d, "d")?);
    }
    if let Some(rest) = src.strip_prefix("germ:") {
        let (class, vars) = match rest.split_once('@') {
            Some((c, n)) => (c, parse_u32(n, "variables")?),
            None => (rest, 2),
        };
        return GermClass::new(class.parse::<GermKind>()?, vars).germ_spectrum();
    }
    if let Some(rest) = src.strip_prefix("weights:") {
        let (w1, w2) = pair(rest, "weights")?;
        return spectrum_from_weights(&parse_rational(w1)?, &parse_rational(w2)?);
    }
    let text = if src.starts_with('[') { src.to_string() } else { read_file(src)? };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("spectrum JSON: {e}")))
}

pub fn configuration(src: &str) -> Result<Configuration> {
    let src = src.trim();
    if src.starts_with('{') {
        return serde_json::from_str(src).map_err(|e| Error::Parse(format!("configuration JSON: {e}")));
    }
    if let Some((nd, germs)) = src.split_once(':') {
        if !nd.contains('/') && !nd.contains('.') {
            let (n, d) = pair(nd, "configuration")?;
            let names: Vec<&str> = germs.split(',').map(str::trim).filter(|g| !g.is_empty()).collect();
            return Configuration::parse(parse_u32(n, "n")?, parse_u32(d, "d")?, &names);
        }
    }
    configuration_file(src)
}

fn configuration_file(path: &str) -> Result<Configuration> {
    serde_json::from_str(&read_file(path)?).map_err(|e| Error::Parse(format!("configuration JSON in `{path}`: {e}")))
}
