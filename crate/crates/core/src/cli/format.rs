//! Sectioned text format.
//!
//! ```text
//! # comment
//! [ring]
//! vars = x_1 x_2 z_1
//! weights = 1 1 2
//! field = qq
//! order = grevlex
//!
//! [ideal]
//! x_1*z_1-x_2^3
//!
//! [matrix]
//! target = 0 0
//! [0, x_1]
//! [-x_1, 0]
//!
//! [complex]
//! twists 0 = 0
//! twists 1 = 3
//! d 1
//! [x_1*z_1-x_2^3]
//! ```
//!
//! Every matrix row sits on its own line in brackets; a row of a map with no
//! columns is `[]`.

use crate::complex::ChainComplex;
use crate::gb::{FreeModuleMap, Ideal};
use crate::ring::{Field, MonomialOrder, PolyRing, Polynomial};
use crate::{Error, Result};
use std::fmt::Write as _;

/// A parsed file: named sections in input order, each a list of
/// `(line number, content)` with comments and blank lines removed.
#[derive(Clone, Debug, Default)]
pub struct Document {
    sections: Vec<(String, Vec<(usize, String)>)>,
}

const SECTIONS: [&str; 5] = ["ring", "ideal", "matrix", "complex", "phi"];

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc = Document::default();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = k + 1;
            if let Some(name) = section_header(line) {
                if doc.section(name).is_some() {
                    return Err(Error::Parse(format!("line {lineno}: duplicate section [{name}]")));
                }
                doc.sections.push((name.to_string(), Vec::new()));
                continue;
            }
            match doc.sections.last_mut() {
                Some((_, body)) => body.push((lineno, line.to_string())),
                None => return Err(Error::Parse(format!("line {lineno}: text before the first section"))),
            }
        }
        Ok(doc)
    }

    pub fn section(&self, name: &str) -> Option<&[(usize, String)]> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b.as_slice())
    }

    fn require(&self, name: &str) -> Result<&[(usize, String)]> {
        self.section(name)
            .ok_or_else(|| Error::Parse(format!("missing section [{name}]")))
    }

    pub fn has(&self, name: &str) -> bool {
        self.section(name).is_some()
    }
}

/// Known section names only, so a one-entry row such as `[x]` stays a row.
fn section_header(line: &str) -> Option<&str> {
    let inner = line.strip_prefix('[')?.strip_suffix(']')?.trim();
    SECTIONS.contains(&inner).then_some(inner)
}

fn key_value(line: &str) -> Option<(&str, &str)> {
    let (k, v) = line.split_once('=')?;
    Some((k.trim(), v.trim()))
}

fn ints(lineno: usize, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("line {lineno}: `{t}` is not an integer")))
        })
        .collect()
}

/// Command-line overrides for the `[ring]` section.
#[derive(Clone, Copy, Debug, Default)]
pub struct RingOverrides {
    pub field: Option<Field>,
    pub order: Option<MonomialOrder>,
}

pub fn read_ring(doc: &Document, ov: RingOverrides) -> Result<PolyRing> {
    let mut vars: Option<Vec<String>> = None;
    let mut weights: Option<Vec<i64>> = None;
    let mut field = Field::Rationals;
    let mut order = MonomialOrder::GRevLex;
    for (lineno, line) in doc.require("ring")? {
        let (k, v) = key_value(line)
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected `key = value`")))?;
        match k {
            "vars" => vars = Some(v.split_whitespace().map(String::from).collect()),
            "weights" => weights = Some(ints(*lineno, v)?),
            "field" => field = Field::parse(v)?,
            "order" => order = MonomialOrder::parse(v)?,
            _ => return Err(Error::Parse(format!("line {lineno}: unknown ring key `{k}`"))),
        }
    }
    let vars = vars.ok_or_else(|| Error::Parse("[ring] has no `vars`".into()))?;
    let weights = weights.unwrap_or_else(|| vec![1; vars.len()]);
    PolyRing::new(
        &vars,
        &weights,
        ov.field.unwrap_or(field),
        ov.order.unwrap_or(order),
    )
}

fn poly(ring: &PolyRing, lineno: usize, s: &str) -> Result<Polynomial> {
    ring.parse(s).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("line {lineno}: {m}")),
        other => other,
    })
}

pub fn read_ideal(doc: &Document, ring: &PolyRing) -> Result<Ideal> {
    let gens = doc
        .require("ideal")?
        .iter()
        .map(|(n, l)| poly(ring, *n, l.trim_end_matches(',')))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

fn row(ring: &PolyRing, lineno: usize, line: &str) -> Result<Vec<Polynomial>> {
    let inner = line
        .strip_prefix('[')
        .and_then(|l| l.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("line {lineno}: expected a bracketed row")))?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|e| poly(ring, lineno, e.trim())).collect()
}

/// The `[matrix]` section; source twists are inferred from the entries.
pub fn read_matrix(doc: &Document, ring: &PolyRing) -> Result<FreeModuleMap> {
    let body = doc.require("matrix")?;
    let mut target = None;
    let mut rows = Vec::new();
    for (lineno, line) in body {
        match key_value(line) {
            Some(("target", v)) if !line.starts_with('[') => target = Some(ints(*lineno, v)?),
            _ => rows.push(row(ring, *lineno, line)?),
        }
    }
    let target = target.unwrap_or_else(|| vec![0; rows.len()]);
    FreeModuleMap::from_rows_infer(ring, target, rows, 0)
}

pub fn read_complex(doc: &Document, ring: &PolyRing) -> Result<ChainComplex> {
    let body = doc.require("complex")?;
    let mut twists: Vec<Option<Vec<i64>>> = Vec::new();
    let mut rows: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Option<usize> = None;
    for (lineno, line) in body {
        if line.starts_with('[') {
            let k = current.ok_or_else(|| Error::Parse(format!("line {lineno}: row outside a `d` block")))?;
            rows[k - 1].push((*lineno, line));
            continue;
        }
        current = None;
        if let Some((k, v)) = key_value(line) {
            let idx = k
                .strip_prefix("twists")
                .and_then(|i| i.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("line {lineno}: expected `twists <i> = ...`")))?;
            if twists.len() <= idx {
                twists.resize(idx + 1, None);
            }
            twists[idx] = Some(ints(*lineno, v)?);
        } else {
            let idx = line
                .strip_prefix('d')
                .and_then(|i| i.trim().parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::Parse(format!("line {lineno}: expected `d <i>`")))?;
            if rows.len() < idx {
                rows.resize(idx, Vec::new());
            }
            current = Some(idx);
        }
    }
    let twists = twists
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::Parse(format!("[complex] has no `twists {i}`"))))
        .collect::<Result<Vec<_>>>()?;
    if twists.is_empty() {
        return Err(Error::Parse("[complex] has no modules".into()));
    }
    if rows.len() + 1 > twists.len() {
        return Err(Error::Parse(format!("`d {}` has no source module", rows.len())));
    }
    let mut maps = Vec::new();
    for k in 1..twists.len() {
        let block = rows.get(k - 1).map_or(&[][..], |r| r.as_slice());
        let (nr, nc) = (twists[k - 1].len(), twists[k].len());
        if block.len() != nr {
            return Err(Error::Shape(format!("`d {k}` needs {nr} rows, found {}", block.len())));
        }
        let mut entries = Vec::with_capacity(nr * nc);
        for (lineno, line) in block {
            let r = row(ring, *lineno, line)?;
            if r.len() != nc {
                return Err(Error::Shape(format!("line {lineno}: expected {nc} entries, found {}", r.len())));
            }
            entries.extend(r);
        }
        maps.push(FreeModuleMap::new(ring, twists[k - 1].clone(), twists[k].clone(), 0, entries)?);
    }
    ChainComplex::from_differentials(ring, twists[0].clone(), maps)
}

/// Parses `[phi]` lines `generator -> lift`.
pub fn read_phi(doc: &Document, ring: &PolyRing) -> Result<Vec<(Polynomial, Polynomial)>> {
    doc.require("phi")?
        .iter()
        .map(|(lineno, line)| {
            let (g, l) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("line {lineno}: expected `generator -> lift`")))?;
            Ok((poly(ring, *lineno, g.trim())?, poly(ring, *lineno, l.trim())?))
        })
        .collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn write_ring(ring: &PolyRing) -> String {
    format!(
        "[ring]\nvars = {}\nweights = {}\nfield = {}\norder = {}\n",
        join(ring.names(), " "),
        join(ring.weights(), " "),
        ring.field(),
        ring.order().name()
    )
}

pub fn write_ideal(gens: &[Polynomial]) -> String {
    let mut s = String::from("[ideal]\n");
    for g in gens {
        let _ = writeln!(s, "{g}");
    }
    s
}

pub fn write_phi(pairs: &[(Polynomial, Polynomial)]) -> String {
    let mut s = String::from("[phi]\n");
    for (g, l) in pairs {
        let _ = writeln!(s, "{g} -> {l}");
    }
    s
}

fn write_rows(s: &mut String, m: &FreeModuleMap) {
    for r in 0..m.rows() {
        let _ = writeln!(s, "[{}]", join(m.row(r), ", "));
    }
}

pub fn write_matrix(m: &FreeModuleMap) -> String {
    let mut s = format!("[matrix]\ntarget = {}\n", join(m.target_twists(), " "));
    write_rows(&mut s, m);
    s
}

pub fn write_complex(c: &ChainComplex) -> String {
    let mut s = String::from("[complex]\n");
    for i in 0..=c.len() {
        let _ = writeln!(s, "twists {i} = {}", join(c.module(i), " "));
    }
    for i in 1..=c.len() {
        let _ = writeln!(s, "d {i}");
        write_rows(&mut s, c.d(i));
    }
    s
}

/// Ring and complex together, as written by `--out`.
pub fn write_complex_file(c: &ChainComplex) -> String {
    format!("{}\n{}", write_ring(c.ring()), write_complex(c))
}
