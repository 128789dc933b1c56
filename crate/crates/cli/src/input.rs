//! Text inputs: points, variable lists and the ideal file format.
//!
//! An ideal file starts with a ring header and lists one generator per
//! line; blank lines and lines starting with `#` are skipped:
//!
//! ```text
//! ring: QQ[x,y,z]
//! x^2 - y*z
//! x*y
//! ```

use std::path::Path;

use osculate_core::arith::{Field, QuadExt, Rational};
use osculate_core::groebner::Ideal;
use osculate_core::poly::{parse_poly, PolyRing, RingRef};
use osculate_core::Error;

/// Inserts `*` between a number and a directly following name, so that
/// `3f-b-d` reads as `3*f-b-d`.
pub fn implicit_products(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 4);
    let mut in_number = false;
    let mut prev: Option<char> = None;
    for c in text.chars() {
        if c.is_ascii_digit() {
            // A digit run starts a number unless it continues a name.
            if !in_number && !prev.is_some_and(|p| p.is_alphanumeric() || p == '_') {
                in_number = true;
            }
        } else if c.is_alphabetic() && in_number {
            out.push('*');
            in_number = false;
        } else if c != '/' {
            in_number = false;
        }
        out.push(c);
        prev = Some(c);
    }
    out
}

/// Comma-separated coordinates, each rational or of the form `a + b*sqrt(d)`.
pub fn parse_point(text: &str) -> Result<Vec<QuadExt>, Error> {
    let coords: Vec<QuadExt> = text.split(',').map(QuadExt::parse).collect::<Result<_, _>>()?;
    if coords.len() != 3 {
        return Err(Error::InvalidArgument(format!("a plane point has 3 coordinates, got {}", coords.len())));
    }
    Ok(coords)
}

/// The point as rationals, when every coordinate is rational.
pub fn rational_point(coords: &[QuadExt]) -> Option<Vec<Rational>> {
    coords.iter().map(Field::to_rational).collect()
}

pub fn parse_names(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn parse_ideal_text(text: &str) -> Result<Ideal, Error> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::InvalidArgument("empty ideal file".into()))?;
    let ring = parse_ring_header(header)?;
    let gens = lines.map(|l| parse_poly(&implicit_products(l), &ring)).collect::<Result<Vec<_>, _>>()?;
    Ideal::new(&ring, gens)
}

pub fn read_ideal(path: &Path) -> Result<Ideal, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal_text(&text)
}

fn parse_ring_header(line: &str) -> Result<RingRef, Error> {
    let bad = || Error::InvalidArgument(format!("expected a header like `ring: QQ[x,y,z]`, got `{line}`"));
    let rest = line.strip_prefix("ring:").ok_or_else(bad)?.trim();
    let inner = rest.strip_prefix("QQ[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    PolyRing::new(&parse_names(inner))
}

/// Renders an ideal in the file format read by [`parse_ideal_text`].
pub fn ideal_to_text(ideal: &Ideal) -> String {
    let mut out = format!("ring: QQ[{}]\n", ideal.ring().vars().join(","));
    for g in ideal.gens() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_products_only_after_numbers() {
        assert_eq!(implicit_products("a+g;3f-b-d;9e+c-d"), "a+g;3*f-b-d;9*e+c-d");
        assert_eq!(implicit_products("z10 - 2z0 + 1/9w"), "z10 - 2*z0 + 1/9*w");
        assert_eq!(implicit_products("x^2*y"), "x^2*y");
    }

    #[test]
    fn ideal_file_round_trip() {
        let i = parse_ideal_text("# comment\nring: QQ[u, v, w]\n\nw^2\nv*w\nv^2 - u*w\n").unwrap();
        assert_eq!(i.gens().len(), 3);
        assert_eq!(parse_ideal_text(&ideal_to_text(&i)).unwrap(), i);
        assert!(parse_ideal_text("QQ[x]\nx").is_err());
        assert!(parse_ideal_text("ring: QQ[x]\ny").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(rational_point(&parse_point("0, 1/2, -3").unwrap()).unwrap().len(), 3);
        assert!(rational_point(&parse_point("1, sqrt(-1), 0").unwrap()).is_none());
        assert!(parse_point("1,2").is_err());
    }
}
