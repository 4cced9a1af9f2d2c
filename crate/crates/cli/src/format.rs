//! Plain-text instance format.
//!
//! ```text
//! c comment
//! p vcb <n> <m>
//! v <id> <num>/<den>
//! e <u> <v>
//! s <id> <id> ...
//! y <u> <v> <num>/<den>
//! k <id> <class>
//! ```
//!
//! Ids and classes are 1-based. An integer stands for `n/1`. The `k`-th
//! `y` line for a pair of endpoints belongs to the `k`-th edge joining
//! them; edges without a `y` line get dual zero. `s`, `y` and `k` lines
//! are optional, but when `k` lines appear every vertex needs one. A graph
//! without edges has no `y` lines, so it never carries a dual.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rbvc_core::relax::DualSolution;
use rbvc_core::{Graph, Rational, VertexSet};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub comments: Vec<String>,
    pub graph: Graph,
    pub set: Option<VertexSet>,
    pub dual: Option<DualSolution>,
    /// 0-based class of each vertex.
    pub colors: Option<Vec<usize>>,
}

impl Instance {
    pub fn new(graph: Graph) -> Self {
        Self {
            comments: Vec::new(),
            graph,
            set: None,
            dual: None,
            colors: None,
        }
    }
}

/// `num/den` in lowest terms, denominator always written.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("bad rational `{s}`");
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

fn err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_id(tok: &str, n: usize, line: usize) -> Result<usize> {
    match tok.parse::<usize>() {
        Ok(id) if (1..=n).contains(&id) => Ok(id - 1),
        Ok(id) => Err(err(line, format!("vertex {id} out of range 1..={n}"))),
        Err(_) => Err(err(line, format!("bad vertex id `{tok}`"))),
    }
}

fn non_negative(tok: &str, line: usize) -> Result<Rational> {
    let r = parse_rational(tok).map_err(|m| err(line, m))?;
    if r.is_negative() {
        return Err(err(line, format!("negative value `{tok}`")));
    }
    Ok(r)
}

pub fn parse(text: &str) -> Result<Instance> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<Rational>> = Vec::new();
    let mut edges = Vec::new();
    let mut set: Option<VertexSet> = None;
    let mut duals: Vec<(usize, usize, usize, Rational)> = Vec::new();
    let mut colors: Vec<Option<usize>> = Vec::new();
    let mut any_color = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "c" || trimmed.starts_with("c ") {
            comments.push(trimmed[1..].trim_start().to_string());
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(err(line, "duplicate header"));
            }
            if toks.len() != 4 || toks[1] != "vcb" {
                return Err(err(line, "expected `p vcb <n> <m>`"));
            }
            let n: usize = toks[2].parse().map_err(|_| err(line, "bad vertex count"))?;
            let m: usize = toks[3].parse().map_err(|_| err(line, "bad edge count"))?;
            header = Some((n, m));
            weights = vec![None; n];
            colors = vec![None; n];
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err(line, "line before header"));
        };
        match toks[0] {
            "v" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected `v <id> <weight>`"));
                }
                let v = parse_id(toks[1], n, line)?;
                if weights[v].is_some() {
                    return Err(err(line, format!("vertex {} given twice", v + 1)));
                }
                weights[v] = Some(non_negative(toks[2], line)?);
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected `e <u> <v>`"));
                }
                let u = parse_id(toks[1], n, line)?;
                let v = parse_id(toks[2], n, line)?;
                if u == v {
                    return Err(err(line, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            "s" => {
                if set.is_some() {
                    return Err(err(line, "duplicate set line"));
                }
                let mut s = VertexSet::new();
                for tok in &toks[1..] {
                    if !s.insert(parse_id(tok, n, line)?) {
                        return Err(err(line, format!("vertex {tok} repeated in set")));
                    }
                }
                set = Some(s);
            }
            "y" => {
                if toks.len() != 4 {
                    return Err(err(line, "expected `y <u> <v> <value>`"));
                }
                let u = parse_id(toks[1], n, line)?;
                let v = parse_id(toks[2], n, line)?;
                duals.push((line, u.min(v), u.max(v), non_negative(toks[3], line)?));
            }
            "k" => {
                if toks.len() != 3 {
                    return Err(err(line, "expected `k <id> <class>`"));
                }
                let v = parse_id(toks[1], n, line)?;
                let class = match toks[2].parse::<usize>() {
                    Ok(c) if c >= 1 => c - 1,
                    _ => return Err(err(line, format!("bad class `{}`", toks[2]))),
                };
                if colors[v].replace(class).is_some() {
                    return Err(err(line, format!("vertex {} colored twice", v + 1)));
                }
                any_color = true;
            }
            other => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let Some((_, m)) = header else {
        return Err(err(last, "missing header"));
    };
    if edges.len() != m {
        return Err(err(
            last,
            format!("header says {m} edges, found {}", edges.len()),
        ));
    }
    let weights = weights
        .into_iter()
        .enumerate()
        .map(|(v, w)| w.ok_or_else(|| err(last, format!("missing weight for vertex {}", v + 1))))
        .collect::<Result<Vec<_>>>()?;
    let graph = Graph::new(weights, edges).map_err(|e| err(last, e.to_string()))?;

    let dual = if duals.is_empty() {
        None
    } else {
        let mut slots: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            slots.entry((u.min(v), u.max(v))).or_default().push(e);
        }
        let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut values = vec![Rational::zero(); graph.num_edges()];
        for (line, u, v, y) in duals {
            let k = next.entry((u, v)).or_insert(0);
            let e = slots
                .get(&(u, v))
                .and_then(|es| es.get(*k))
                .ok_or_else(|| err(line, format!("no matching edge {} {}", u + 1, v + 1)))?;
            values[*e] = y;
            *k += 1;
        }
        Some(DualSolution::new(values))
    };

    let colors = if any_color {
        let c = colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| err(last, format!("vertex {} has no class", v + 1))))
            .collect::<Result<Vec<_>>>()?;
        Some(c)
    } else {
        None
    };

    Ok(Instance {
        comments,
        graph,
        set,
        dual,
        colors,
    })
}

pub fn serialize(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    for c in &inst.comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            out.push_str(&format!("c {c}\n"));
        }
    }
    out.push_str(&format!("p vcb {} {}\n", g.num_vertices(), g.num_edges()));
    for (v, w) in g.weights().iter().enumerate() {
        out.push_str(&format!("v {} {}\n", v + 1, fmt_rational(w)));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    if let Some(s) = &inst.set {
        out.push('s');
        for v in s {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    if let Some(y) = &inst.dual {
        for (&(u, v), value) in g.edges().iter().zip(&y.values) {
            out.push_str(&format!("y {} {} {}\n", u + 1, v + 1, fmt_rational(value)));
        }
    }
    if let Some(colors) = &inst.colors {
        for (v, c) in colors.iter().enumerate() {
            out.push_str(&format!("k {} {}\n", v + 1, c + 1));
        }
    }
    out
}
