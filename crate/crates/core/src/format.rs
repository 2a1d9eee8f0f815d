//! Line-oriented text format for algebras.
//!
//! ```text
//! # comment
//! field Q            (or: field GF 5)
//! dim 3
//! mult 0 1 1 1       e0*e1 has coefficient 1 on e1 (mirrored to e1*e0)
//! form 0 0 2         (e0, e0) = 2 (mirrored)
//! ```
//!
//! Unlisted products and form entries are zero.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl FormatError {
    fn at(line: usize, reason: impl Into<String>) -> Self {
        FormatError::Parse { line, reason: reason.into() }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<Algebra, FormatError> {
    let mut field: Option<FieldSpec> = None;
    let mut dim: Option<usize> = None;
    let mut mult: HashMap<(usize, usize, usize), (Scalar, usize)> = HashMap::new();
    let mut form: HashMap<(usize, usize), (Scalar, usize)> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "field" => {
                if field.is_some() {
                    return Err(FormatError::at(line, "duplicate field line"));
                }
                let spec = words[1..].join(" ");
                let f: FieldSpec =
                    spec.parse().map_err(|e: ScalarError| FormatError::at(line, e.to_string()))?;
                field = Some(f);
            }
            "dim" => {
                if field.is_none() {
                    return Err(FormatError::at(line, "dim before field"));
                }
                if dim.is_some() {
                    return Err(FormatError::at(line, "duplicate dim line"));
                }
                if words.len() != 2 {
                    return Err(FormatError::at(line, "expected `dim <n>`"));
                }
                let n: usize = words[1]
                    .parse()
                    .map_err(|_| FormatError::at(line, format!("invalid dimension {:?}", words[1])))?;
                if n == 0 {
                    return Err(FormatError::at(line, "dimension must be positive"));
                }
                dim = Some(n);
            }
            "mult" | "form" => {
                let (Some(f), Some(n)) = (field, dim) else {
                    return Err(FormatError::at(line, "entries must follow the field and dim lines"));
                };
                let arity = if words[0] == "mult" { 3 } else { 2 };
                if words.len() != arity + 2 {
                    return Err(FormatError::at(line, format!("expected {} indices and a scalar", arity)));
                }
                let mut idx = Vec::with_capacity(arity);
                for w in &words[1..=arity] {
                    let i: usize =
                        w.parse().map_err(|_| FormatError::at(line, format!("invalid index {w:?}")))?;
                    if i >= n {
                        return Err(FormatError::at(line, format!("index {i} out of range for dim {n}")));
                    }
                    idx.push(i);
                }
                let s = f.parse(words[arity + 1]).map_err(|e| FormatError::at(line, e.to_string()))?;
                let (i, j) = (idx[0].min(idx[1]), idx[0].max(idx[1]));
                let previous = if arity == 3 {
                    mult.insert((i, j, idx[2]), (s.clone(), line))
                } else {
                    form.insert((i, j), (s.clone(), line))
                };
                if let Some((old, old_line)) = previous {
                    if old != s {
                        return Err(FormatError::at(line, format!("conflicts with line {old_line}")));
                    }
                }
            }
            other => return Err(FormatError::at(line, format!("unknown directive {other:?}"))),
        }
    }

    let field = field.ok_or_else(|| FormatError::at(1, "missing field line"))?;
    let n = dim.ok_or_else(|| FormatError::at(1, "missing dim line"))?;
    let mut gram = Matrix::zeros(field, n, n);
    for ((i, j), (s, _)) in form {
        gram.set(i, j, s.clone());
        gram.set(j, i, s);
    }
    let products = mult.into_iter().map(|((i, j, k), (s, _))| (i, j, k, s));
    Ok(Algebra::from_products(field, n, products, gram)?)
}

/// Parses a linear combination of basis vectors such as `1/2*e0 - e2`
/// (the `Display` form of [`Element`]).
pub fn parse_element(alg: &Algebra, text: &str) -> Result<Element, ElementSyntaxError> {
    let f = alg.field();
    let err = |reason: String| ElementSyntaxError { text: text.to_string(), reason };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty expression".into()));
    }
    if compact == "0" {
        return Ok(alg.zero());
    }
    let mut coords = vec![f.zero(); alg.dim()];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (negative, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ if rest.len() == compact.len() => (false, rest),
            _ => return Err(err("expected + or -".into())),
        };
        let end = body[1.min(body.len())..].find(['+', '-']).map_or(body.len(), |k| k + 1);
        let term = &body[..end];
        rest = &body[end..];
        let (coeff, basis) = match term.rsplit_once('e') {
            Some((c, idx)) => (c.strip_suffix('*').unwrap_or(c), idx),
            None => return Err(err(format!("term {term:?} names no basis vector e<i>"))),
        };
        let i: usize = basis.parse().map_err(|_| err(format!("invalid basis index in {term:?}")))?;
        if i >= alg.dim() {
            return Err(err(format!("e{i} out of range for dim {}", alg.dim())));
        }
        let mut c =
            if coeff.is_empty() { f.one() } else { f.parse(coeff).map_err(|e| err(e.to_string()))? };
        if negative {
            c = f.neg(&c);
        }
        coords[i] = f.add(&coords[i], &c);
    }
    Ok(alg.element(coords).expect("coordinates sized to the algebra"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse element {text:?}: {reason}")]
pub struct ElementSyntaxError {
    pub text: String,
    pub reason: String,
}

pub fn format_algebra(alg: &Algebra) -> String {
    let f = alg.field();
    let n = alg.dim();
    let mut out = String::new();
    match f {
        FieldSpec::Rationals => out.push_str("field Q\n"),
        FieldSpec::PrimeField(p) => {
            let _ = writeln!(out, "field GF {p}");
        }
    }
    let _ = writeln!(out, "dim {n}");
    for i in 0..n {
        for j in i..n {
            for (k, s) in alg.product_terms(i, j) {
                let _ = writeln!(out, "mult {i} {j} {k} {s}");
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let s = alg.gram().get(i, j);
            if !f.is_zero(s) {
                let _ = writeln!(out, "form {i} {j} {s}");
            }
        }
    }
    out
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra, FormatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_algebra(&text)
}

pub fn save_algebra(alg: &Algebra, path: impl AsRef<Path>) -> Result<(), FormatError> {
    let path = path.as_ref();
    std::fs::write(path, format_algebra(alg))
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
