//! Line-oriented instance text format.
//!
//! ```text
//! qmst 1
//! vertices <n>
//! edges <m>
//! edge <u> <v> <tfu> <tfv> <tfw> <a1> <a2> <a3> <a4>     (m lines, 1-based vertices)
//! quads <k>
//! quad <i> <j> <tfu> <tfv> <tfw> <a1> <a2> <a3> <a4>     (k lines, 0-based edge ids)
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::uncertainty::{RoughFuzzyWeight, TriangularFuzzy};

use super::Instance;

const MAGIC: &str = "qmst";
const VERSION: &str = "1";

/// Nonblank lines as `(line number, tokens)`.
type TokenLines<'a> = Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>;

struct Lines<'a> {
    inner: std::iter::Peekable<TokenLines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: TokenLines<'a> = Box::new(text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect()))
        }));
        Self {
            inner: it.peekable(),
            last_line: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.inner.next() {
            Some((line, toks)) => {
                self.last_line = line;
                Ok((line, toks))
            }
            None => Err(Error::Syntax {
                line: self.last_line + 1,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn header(&mut self, keyword: &str) -> Result<usize> {
        let (line, toks) = self.next(keyword)?;
        if toks.len() != 2 || toks[0] != keyword {
            return Err(syntax(line, format!("expected `{keyword} <count>`")));
        }
        parse_num::<usize>(line, toks[1], keyword)
    }
}

fn syntax(line: usize, message: String) -> Error {
    Error::Syntax { line, message }
}

fn parse_num<N: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<N> {
    tok.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{tok}`")))
}

fn parse_weight<T: Scalar>(line: usize, toks: &[&str]) -> Result<RoughFuzzyWeight<T>> {
    let mut vals = [T::zero(); 7];
    for (slot, tok) in vals.iter_mut().zip(toks) {
        let x: T = parse_num(line, tok, "number")?;
        if !x.is_finite() {
            return Err(syntax(line, format!("non-finite number `{tok}`")));
        }
        *slot = x;
    }
    let base = TriangularFuzzy::new(vals[0], vals[1], vals[2])?;
    RoughFuzzyWeight::new(base, vals[3], vals[4], vals[5], vals[6])
}

/// Parses an instance; edge ids follow file order.
pub fn parse_instance<T: Scalar>(text: &str) -> Result<Instance<T>> {
    let mut lines = Lines::new(text);
    let (line, toks) = lines.next("magic line")?;
    if toks != [MAGIC, VERSION] {
        return Err(syntax(line, format!("expected `{MAGIC} {VERSION}`")));
    }
    let vertex_count = lines.header("vertices")?;
    let edge_count = lines.header("edges")?;
    let mut edges = Vec::with_capacity(edge_count);
    for _ in 0..edge_count {
        let (line, toks) = lines.next("edge line")?;
        if toks.len() != 10 || toks[0] != "edge" {
            return Err(syntax(
                line,
                "expected `edge <u> <v>` followed by 7 numbers".into(),
            ));
        }
        let a: usize = parse_num(line, toks[1], "vertex")?;
        let b: usize = parse_num(line, toks[2], "vertex")?;
        if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
            return Err(syntax(
                line,
                format!("vertex ids must lie in 1..={vertex_count}"),
            ));
        }
        edges.push((a - 1, b - 1, parse_weight(line, &toks[3..])?));
    }
    let quad_count = lines.header("quads")?;
    let mut quads = Vec::with_capacity(quad_count);
    for _ in 0..quad_count {
        let (line, toks) = lines.next("quad line")?;
        if toks.len() != 10 || toks[0] != "quad" {
            return Err(syntax(
                line,
                "expected `quad <i> <j>` followed by 7 numbers".into(),
            ));
        }
        let i: usize = parse_num(line, toks[1], "edge id")?;
        let j: usize = parse_num(line, toks[2], "edge id")?;
        quads.push((i, j, parse_weight(line, &toks[3..])?));
    }
    if let Some((line, _)) = lines.inner.next() {
        return Err(syntax(line, "trailing content after quad section".into()));
    }
    Instance::new(vertex_count, edges, quads)
}

fn push_weight<T: Scalar>(out: &mut String, w: &RoughFuzzyWeight<T>) {
    let b = &w.base;
    let _ = write!(
        out,
        " {} {} {} {} {} {} {}",
        b.u, b.v, b.w, w.a1, w.a2, w.a3, w.a4
    );
}

/// Canonical text: no comments, quads ordered by `(i, j)` with `i < j`.
pub fn serialize_instance<T: Scalar>(inst: &Instance<T>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{MAGIC} {VERSION}");
    let _ = writeln!(out, "vertices {}", inst.vertex_count());
    let _ = writeln!(out, "edges {}", inst.edge_count());
    for e in inst.edges() {
        let _ = write!(out, "edge {} {}", e.endpoints.0 + 1, e.endpoints.1 + 1);
        push_weight(&mut out, &e.weight);
        out.push('\n');
    }
    let _ = writeln!(out, "quads {}", inst.quad_count());
    for q in inst.quads() {
        let _ = write!(out, "quad {} {}", q.pair.0, q.pair.1);
        push_weight(&mut out, &q.weight);
        out.push('\n');
    }
    out
}
