//! Text and JSON formats: curve files, biform term listings, planes.
//!
//! Curve file (JSON):
//!
//! ```text
//! {"n": 2, "d": 2, "coeffs": [["1","0","0"], ["0","1","0"], ["0","0","1"]]}
//! ```
//!
//! Row `i` lists the coefficients of `fi` against `z0^(d-j) z1^j`. Entries
//! are rational strings `"p"` or `"p/q"`; bare JSON integers are accepted.
//!
//! Biform listing: one term per line, descending graded-lex order,
//!
//! ```text
//! +1 * u0^1 v1^1
//! -1 * u1^1 v0^1
//! ```
//!
//! with a trailing ` * eps^k` on terms carrying `eps`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cayley::{CayleyBiform, CurveMap, Plane};
use crate::error::{Error, Result};
use crate::exactpoly::{parse_scalar, Monomial, MPoly, Ring, Scalar};

#[derive(Debug, Deserialize)]
struct RawCurveFile {
    n: usize,
    d: usize,
    coeffs: Vec<Vec<Value>>,
}

/// Parses a curve file. Errors carry line/column for malformed JSON and
/// row/column for bad entries.
pub fn parse_curve_file(text: &str) -> Result<CurveMap> {
    let raw: RawCurveFile = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "parse error at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    if raw.coeffs.len() != raw.n + 1 {
        return Err(Error::Parse(format!(
            "expected n+1 = {} rows, found {}",
            raw.n + 1,
            raw.coeffs.len()
        )));
    }
    let mut rows = Vec::with_capacity(raw.coeffs.len());
    for (i, row) in raw.coeffs.iter().enumerate() {
        if row.len() != raw.d + 1 {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected d+1 = {}",
                row.len(),
                raw.d + 1
            )));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let bad = || Error::Parse(format!("invalid rational at row {i} col {j}"));
                match v {
                    Value::String(s) => parse_scalar(s).map_err(|_| bad()),
                    Value::Number(num) => num
                        .as_i64()
                        .map(|x| Scalar::from_integer(x.into()))
                        .ok_or_else(bad),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    CurveMap::from_rows(&rows).map_err(|e| Error::Parse(e.to_string()))
}

fn scalar_text(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes a curve map in curve-file form.
pub fn write_curve_file(f: &CurveMap) -> String {
    let rows: Vec<Vec<String>> = f
        .rows()
        .iter()
        .map(|r| r.iter().map(scalar_text).collect())
        .collect();
    serde_json::json!({ "n": f.n(), "d": f.d(), "coeffs": rows }).to_string()
}

fn signed_text(c: &Scalar) -> String {
    if *c < Scalar::from_integer(0.into()) {
        scalar_text(c)
    } else {
        format!("+{}", scalar_text(c))
    }
}

/// One term per line, `coeff * u0^a0 ... vn^bn [* eps^k]`, descending.
pub fn format_biform(ca: &CayleyBiform) -> String {
    let ring = ca.poly().ring().clone();
    let mut out = String::new();
    for (m, c) in ca.poly().terms().rev() {
        let mut vars = Vec::new();
        let mut eps = 0;
        for (slot, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = &ring.vars()[slot].name;
            if name == "eps" {
                eps = e;
            } else {
                vars.push(format!("{name}^{e}"));
            }
        }
        out.push_str(&signed_text(c));
        if !vars.is_empty() {
            out.push_str(" * ");
            out.push_str(&vars.join(" "));
        }
        if eps > 0 {
            out.push_str(&format!(" * eps^{eps}"));
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`format_biform`].
pub fn parse_biform(n: usize, d: usize, text: &str) -> Result<CayleyBiform> {
    let with_eps = text.contains("eps^");
    let ring = Ring::chow(n, with_eps);
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        let mut parts = line.split(" * ");
        let coeff = parts.next().ok_or_else(|| bad("missing coefficient"))?;
        let coeff = parse_scalar(coeff.trim_start_matches('+')).map_err(|_| bad("bad coefficient"))?;
        let mut exps = vec![0u32; ring.arity()];
        for part in parts {
            for tok in part.split_whitespace() {
                let (name, e) = tok.split_once('^').ok_or_else(|| bad("expected name^exponent"))?;
                let slot = ring.index_of(name).ok_or_else(|| bad("unknown variable"))?;
                exps[slot] += e.parse::<u32>().map_err(|_| bad("bad exponent"))?;
            }
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    CayleyBiform::from_poly(n, d, MPoly::from_terms(&ring, terms))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub u: Vec<u32>,
    pub v: Vec<u32>,
    #[serde(skip_serializing_if = "is_zero_u32", default)]
    pub eps: u32,
}

fn is_zero_u32(x: &u32) -> bool {
    *x == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiformJson {
    pub n: usize,
    pub d: usize,
    pub terms: Vec<TermJson>,
}

pub fn biform_json(ca: &CayleyBiform) -> BiformJson {
    BiformJson {
        n: ca.n(),
        d: ca.d(),
        terms: ca
            .terms()
            .into_iter()
            .map(|t| TermJson {
                coeff: scalar_text(&t.coeff),
                u: t.alpha,
                v: t.beta,
                eps: t.eps,
            })
            .collect(),
    }
}

/// Parses `"u0,...,un;v0,...,vn"`.
pub fn parse_plane(text: &str) -> Result<Plane> {
    let (u, v) = text
        .split_once(';')
        .ok_or_else(|| Error::Parse("plane must be `u0,...,un;v0,...,vn`".into()))?;
    let vec = |s: &str| {
        s.split(',')
            .map(|x| parse_scalar(x).map_err(|_| Error::Parse(format!("invalid rational `{}` in plane", x.trim()))))
            .collect::<Result<Vec<_>>>()
    };
    Plane::new(vec(u)?, vec(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{cayley_biform, normalize};

    const CONIC: &str = r#"{"n":2,"d":2,"coeffs":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#;

    #[test]
    fn curve_files() {
        let f = parse_curve_file(CONIC).unwrap();
        assert_eq!((f.n(), f.d()), (2, 2));
        assert_eq!(parse_curve_file(&write_curve_file(&f)).unwrap(), f);
        let mixed = r#"{"n":1,"d":1,"coeffs":[[1,"-2/4"],["0",3]]}"#;
        assert_eq!(parse_curve_file(mixed).unwrap().rows()[0][1], Scalar::new((-1).into(), 2.into()));
    }

    #[test]
    fn curve_file_errors() {
        let e = parse_curve_file(r#"{"n":2,"d":1,"coeffs":[["1","1/0"],["0","1"],["0","0"]]}"#).unwrap_err();
        assert_eq!(e.to_string(), "invalid rational at row 0 col 1");
        let e = parse_curve_file("{\"n\":2,\n\"d\":}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_curve_file(r#"{"n":2,"d":1,"coeffs":[["1","0"],["0","1"]]}"#).unwrap_err();
        assert!(e.to_string().contains("rows"), "{e}");
        let e = parse_curve_file(r#"{"n":1,"d":1,"coeffs":[["1","0"],["0"]]}"#).unwrap_err();
        assert!(e.to_string().contains("row 1"), "{e}");
    }

    #[test]
    fn line_listing() {
        let f = parse_curve_file(r#"{"n":2,"d":1,"coeffs":[["1","0"],["0","1"],["0","0"]]}"#).unwrap();
        let text = format_biform(&normalize(&cayley_biform(&f)).unwrap());
        assert_eq!(text, "+1 * u0^1 v1^1\n-1 * u1^1 v0^1\n");
    }

    #[test]
    fn listing_round_trip() {
        let f = parse_curve_file(CONIC).unwrap();
        let ca = normalize(&cayley_biform(&f)).unwrap();
        let back = parse_biform(2, 2, &format_biform(&ca)).unwrap();
        assert_eq!(normalize(&back).unwrap(), ca);
        let json = serde_json::to_string(&biform_json(&ca)).unwrap();
        assert!(json.starts_with(r#"{"n":2,"d":2,"terms":[{"coeff":"1","u":[2,0,0]"#), "{json}");
    }

    #[test]
    fn planes() {
        let p = parse_plane("0,1,0;1,0,-1").unwrap();
        assert_eq!(p.v()[2], Scalar::from_integer((-1).into()));
        assert_eq!(parse_plane("1,0,0;2,0,0"), Err(Error::DependentCovectors));
        assert!(parse_plane("1,0,0").is_err());
    }
}
