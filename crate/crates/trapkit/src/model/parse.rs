//! Parsers for the five model file formats, expressions, and CLI strings.
//!
//! All formats are UTF-8 and line oriented; `#` starts a comment. Component
//! indices and variable indices are 1-based in every textual form.

use std::collections::HashMap;

use super::{
    Bdd, BddNode, BddRef, BooleanNetwork, Clause, Configuration, Dnf, DoubleDnf, Expr,
    FunctionalGraph, Hypercube, Literal, LocalFunction, Orientation, TruthTable, UnateOrdering,
};
use crate::error::{Error, Result};

/// The five on-disk formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelFormat {
    /// `.bn` — one `NAME, EXPR` line per component.
    Bn,
    /// `.tt` — local truth tables.
    Tt,
    /// `.bdd` — one node-table block per component.
    Bdd,
    /// `.d01` — double DNF, two lines per component.
    D01,
    /// `.fg` — explicit functional graph.
    Fg,
}

impl ModelFormat {
    pub fn from_extension(path: &str) -> Option<ModelFormat> {
        let ext = path.rsplit('.').next()?;
        match ext {
            "bn" => Some(ModelFormat::Bn),
            "tt" => Some(ModelFormat::Tt),
            "bdd" => Some(ModelFormat::Bdd),
            "d01" => Some(ModelFormat::D01),
            "fg" => Some(ModelFormat::Fg),
            _ => None,
        }
    }
}

impl std::str::FromStr for ModelFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModelFormat> {
        match s {
            "formula" | "bn" => Ok(ModelFormat::Bn),
            "tt" => Ok(ModelFormat::Tt),
            "bdd" => Ok(ModelFormat::Bdd),
            "dnf01" | "d01" => Ok(ModelFormat::D01),
            "fg" => Ok(ModelFormat::Fg),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown model format `{other}`"),
            }),
        }
    }
}

/// Result of parsing a model file: a network, or for `.fg` a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedModel {
    Network(BooleanNetwork),
    Graph(FunctionalGraph),
}

pub fn parse_model(text: &str, format: ModelFormat) -> Result<ParsedModel> {
    match format {
        ModelFormat::Bn => parse_bn(text).map(ParsedModel::Network),
        ModelFormat::Tt => parse_tt(text).map(ParsedModel::Network),
        ModelFormat::Bdd => parse_bdd(text).map(ParsedModel::Network),
        ModelFormat::D01 => parse_d01(text).map(ParsedModel::Network),
        ModelFormat::Fg => parse_fg(text).map(ParsedModel::Graph),
    }
}

/// Like [`parse_model`] for the four local-function formats.
pub fn parse_network(text: &str, format: ModelFormat) -> Result<BooleanNetwork> {
    match parse_model(text, format)? {
        ParsedModel::Network(net) => Ok(net),
        ParsedModel::Graph(_) => Err(Error::Parse {
            line: 1,
            column: 1,
            message: "a functional graph file does not define local functions".into(),
        }),
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Comment-stripped, non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim_end();
        if line.trim().is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

// ---------------------------------------------------------------------------
// Configurations and hypercubes
// ---------------------------------------------------------------------------

pub fn parse_configuration(s: &str) -> Result<Configuration> {
    if s.is_empty() {
        return Err(err(1, 1, "empty configuration"));
    }
    let bits = s
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(err(
                1,
                i + 1,
                format!("expected `0` or `1`, found `{other}`"),
            )),
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(Configuration::new(bits))
}

pub fn parse_hypercube(s: &str) -> Result<Hypercube> {
    if s.is_empty() {
        return Err(err(1, 1, "empty hypercube"));
    }
    let cells = s
        .chars()
        .enumerate()
        .map(|(i, c)| match c {
            '0' => Ok(Some(false)),
            '1' => Ok(Some(true)),
            '*' => Ok(None),
            other => Err(err(
                1,
                i + 1,
                format!("expected `0`, `1` or `*`, found `{other}`"),
            )),
        })
        .collect::<Result<Vec<Option<bool>>>>()?;
    Ok(Hypercube::new(cells))
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

/// Recursive-descent parser for
/// `expr := term ('|' term)* ; term := factor ('&' factor)* ;
///  factor := '!' factor | '(' expr ')' | NAME | '0' | '1'`.
struct ExprParser<'a> {
    src: &'a [char],
    pos: usize,
    line: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
}

impl<'a> ExprParser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            acc = Expr::or(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            acc = Expr::and(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Expr::not(self.factor()?))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(err(self.line, self.col(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.src[start..self.pos].iter().collect();
                match (self.resolve)(&name) {
                    Some(idx) => Ok(Expr::Var(idx)),
                    None => Err(err(
                        self.line,
                        start + 1,
                        format!("unknown component `{name}`"),
                    )),
                }
            }
            Some(c) => Err(err(
                self.line,
                self.col(),
                format!("unexpected character `{c}`"),
            )),
            None => Err(err(self.line, self.col(), "unexpected end of expression")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(c) = self.peek() {
            return Err(err(
                self.line,
                self.col(),
                format!("unexpected trailing `{c}`"),
            ));
        }
        Ok(())
    }
}

fn parse_expr_with(
    text: &str,
    line: usize,
    resolve: &dyn Fn(&str) -> Option<usize>,
) -> Result<Expr> {
    let chars: Vec<char> = text.chars().collect();
    let mut p = ExprParser {
        src: &chars,
        pos: 0,
        line,
        resolve,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses an expression whose variables are indexed identifiers such as
/// `x3` or `y12` (trailing digits give the 1-based index). Used by the
/// reduction instance formats.
pub fn parse_expr_indexed(text: &str, line: usize) -> Result<Expr> {
    parse_expr_with(text, line, &|name| {
        let digits = name.trim_start_matches(|c: char| !c.is_ascii_digit());
        if digits.is_empty() || digits.contains(|c: char| !c.is_ascii_digit()) {
            return None;
        }
        let idx: usize = digits.parse().ok()?;
        (idx >= 1).then(|| idx - 1)
    })
}

// ---------------------------------------------------------------------------
// .bn — formula networks
// ---------------------------------------------------------------------------

fn parse_bn(text: &str) -> Result<BooleanNetwork> {
    struct Line<'a> {
        line_no: usize,
        name: &'a str,
        body: &'a str,
        body_offset: usize,
    }
    let mut components: Vec<Line> = Vec::new();
    let mut unate_lines: Vec<(usize, &str)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        if let Some(rest) = line.trim_start().strip_prefix("unate:") {
            unate_lines.push((line_no, rest));
            continue;
        }
        let Some(comma) = line.find(',') else {
            return Err(err(line_no, line.len() + 1, "expected `NAME, EXPR`"));
        };
        let name = line[..comma].trim();
        if name.is_empty() {
            return Err(err(line_no, 1, "missing component name"));
        }
        components.push(Line {
            line_no,
            name,
            body: &line[comma + 1..],
            body_offset: comma + 1,
        });
    }
    if components.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    let index: HashMap<&str, usize> = components
        .iter()
        .enumerate()
        .map(|(i, l)| (l.name, i))
        .collect();
    if index.len() != components.len() {
        for (i, l) in components.iter().enumerate() {
            if index[l.name] != i {
                return Err(err(
                    l.line_no,
                    1,
                    format!("duplicate component `{}`", l.name),
                ));
            }
        }
    }
    let mut locals = Vec::with_capacity(components.len());
    for l in &components {
        let resolve = |name: &str| index.get(name).copied();
        let expr = parse_expr_with(l.body, l.line_no, &resolve).map_err(|e| match e {
            Error::Parse {
                line,
                column,
                message,
            } => Error::Parse {
                line,
                column: column + l.body_offset,
                message,
            },
            other => other,
        })?;
        locals.push(LocalFunction::from(expr));
    }
    let n = locals.len();
    for (line_no, rest) in unate_lines {
        let Some(colon) = rest.find(':') else {
            return Err(err(line_no, 1, "expected `unate: NAME: ORDERING`"));
        };
        let name = rest[..colon].trim();
        let Some(&who) = index.get(name) else {
            return Err(err(
                line_no,
                1,
                format!("unknown component `{name}` in unate line"),
            ));
        };
        let ord_text = rest[colon + 1..].trim();
        let mut orientations = Vec::with_capacity(ord_text.len());
        for (i, c) in ord_text.chars().enumerate() {
            orientations.push(match c {
                '+' => Orientation::Inc,
                '-' => Orientation::Dec,
                other => {
                    return Err(err(
                        line_no,
                        i + 1,
                        format!("expected `+` or `-`, found `{other}`"),
                    ))
                }
            });
        }
        if orientations.len() != n {
            return Err(err(
                line_no,
                1,
                format!(
                    "unate ordering has {} entries, expected {n}",
                    orientations.len()
                ),
            ));
        }
        locals[who].unate = Some(UnateOrdering::new(orientations));
    }
    let names = components.iter().map(|l| l.name.to_string()).collect();
    BooleanNetwork::with_names(locals, names)
}

// ---------------------------------------------------------------------------
// Indexed-line helpers shared by .tt / .bdd / .d01
// ---------------------------------------------------------------------------

fn parse_component_index(token: &str, line_no: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&i| i >= 1)
        .ok_or_else(|| {
            err(
                line_no,
                1,
                format!("expected a 1-based component index, found `{token}`"),
            )
        })
}

fn place<T>(slots: &mut Vec<Option<T>>, index: usize, value: T, line_no: usize) -> Result<()> {
    if slots.len() < index {
        slots.resize_with(index, || None);
    }
    if slots[index - 1].is_some() {
        return Err(err(line_no, 1, format!("component {index} defined twice")));
    }
    slots[index - 1] = Some(value);
    Ok(())
}

fn collect_slots<T>(slots: Vec<Option<T>>) -> Result<Vec<T>> {
    if slots.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| err(1, 1, format!("component {} is missing", i + 1))))
        .collect()
}

// ---------------------------------------------------------------------------
// .tt — truth-table networks
// ---------------------------------------------------------------------------

fn parse_tt(text: &str) -> Result<BooleanNetwork> {
    let mut slots: Vec<Option<TruthTable>> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let Some(colon) = line.find(':') else {
            return Err(err(line_no, 1, "expected `INDEX: k=K p=... t=...`"));
        };
        let index = parse_component_index(line[..colon].trim(), line_no)?;
        let rest = &line[colon + 1..];
        let mut k: Option<usize> = None;
        let mut p: Option<Vec<usize>> = None;
        let mut t: Option<Vec<bool>> = None;
        for token in rest.split_whitespace() {
            if let Some(v) = token.strip_prefix("k=") {
                k = Some(
                    v.parse()
                        .map_err(|_| err(line_no, 1, format!("invalid arity `{v}`")))?,
                );
            } else if let Some(v) = token.strip_prefix("p=") {
                let mut inputs = Vec::new();
                if !v.is_empty() {
                    for part in v.split(',') {
                        let idx: usize = part.parse().map_err(|_| {
                            err(line_no, 1, format!("invalid input index `{part}`"))
                        })?;
                        if idx == 0 {
                            return Err(err(line_no, 1, "input indices are 1-based"));
                        }
                        inputs.push(idx - 1);
                    }
                }
                p = Some(inputs);
            } else if let Some(v) = token.strip_prefix("t=") {
                let mut bits = Vec::with_capacity(v.len());
                for c in v.chars() {
                    bits.push(match c {
                        '0' => false,
                        '1' => true,
                        other => {
                            return Err(err(line_no, 1, format!("invalid table bit `{other}`")))
                        }
                    });
                }
                t = Some(bits);
            } else {
                return Err(err(line_no, 1, format!("unexpected token `{token}`")));
            }
        }
        let (Some(k), Some(p), Some(t)) = (k, p, t) else {
            return Err(err(line_no, 1, "line must provide k=, p= and t="));
        };
        if p.len() != k {
            return Err(err(
                line_no,
                1,
                format!("p lists {} inputs but k={k}", p.len()),
            ));
        }
        if k >= usize::BITS as usize || t.len() != 1usize << k {
            return Err(err(
                line_no,
                1,
                format!("t must contain 2^{k} bits, found {}", t.len()),
            ));
        }
        let mut sorted = p.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != p.len() {
            return Err(err(line_no, 1, "input indices must be distinct"));
        }
        place(&mut slots, index, TruthTable::new(p, t), line_no)?;
    }
    let tables = collect_slots(slots)?;
    BooleanNetwork::new(tables.into_iter().map(LocalFunction::from).collect())
}

// ---------------------------------------------------------------------------
// .bdd — BDD networks
// ---------------------------------------------------------------------------

fn parse_bdd_ref(token: &str, ids: &HashMap<u64, u32>, line_no: usize) -> Result<BddRef> {
    match token {
        "T0" => Ok(BddRef::Terminal(false)),
        "T1" => Ok(BddRef::Terminal(true)),
        other => {
            let id: u64 = other
                .parse()
                .map_err(|_| err(line_no, 1, format!("invalid edge target `{other}`")))?;
            ids.get(&id).copied().map(BddRef::Node).ok_or_else(|| {
                err(
                    line_no,
                    1,
                    format!("edge target `{other}` is not a node of this block"),
                )
            })
        }
    }
}

fn parse_bdd(text: &str) -> Result<BooleanNetwork> {
    struct RawNode {
        line_no: usize,
        var: usize,
        lo: String,
        hi: String,
    }
    let mut slots: Vec<Option<Bdd>> = Vec::new();
    let mut lines = content_lines(text).peekable();
    while let Some((line_no, line)) = lines.next() {
        let mut head = line.split_whitespace();
        let index_token = head.next().unwrap_or("");
        let index = parse_component_index(index_token, line_no)?;
        if head.next() != Some("{") || head.next().is_some() {
            return Err(err(line_no, 1, "expected `INDEX {` to open a block"));
        }
        let mut ids: HashMap<u64, u32> = HashMap::new();
        let mut raw: Vec<(u64, RawNode)> = Vec::new();
        let mut root_token: Option<(usize, String)> = None;
        let mut closed = false;
        for (line_no, line) in lines.by_ref() {
            let trimmed = line.trim();
            if trimmed == "}" {
                closed = true;
                break;
            }
            if let Some(v) = trimmed.strip_prefix("root=") {
                if root_token.is_some() {
                    return Err(err(line_no, 1, "duplicate root declaration"));
                }
                root_token = Some((line_no, v.trim().to_string()));
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let id: u64 = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err(line_no, 1, "expected `NODEID var=J lo=T hi=T`"))?;
            let mut var: Option<usize> = None;
            let mut lo: Option<String> = None;
            let mut hi: Option<String> = None;
            for token in tokens {
                if let Some(v) = token.strip_prefix("var=") {
                    let j: usize = v
                        .parse()
                        .map_err(|_| err(line_no, 1, format!("invalid variable `{v}`")))?;
                    if j == 0 {
                        return Err(err(line_no, 1, "variables are 1-based"));
                    }
                    var = Some(j - 1);
                } else if let Some(v) = token.strip_prefix("lo=") {
                    lo = Some(v.to_string());
                } else if let Some(v) = token.strip_prefix("hi=") {
                    hi = Some(v.to_string());
                } else {
                    return Err(err(line_no, 1, format!("unexpected token `{token}`")));
                }
            }
            let (Some(var), Some(lo), Some(hi)) = (var, lo, hi) else {
                return Err(err(line_no, 1, "node line must provide var=, lo= and hi="));
            };
            if ids.insert(id, raw.len() as u32).is_some() {
                return Err(err(line_no, 1, format!("duplicate node id {id}")));
            }
            raw.push((
                id,
                RawNode {
                    line_no,
                    var,
                    lo,
                    hi,
                },
            ));
        }
        if !closed {
            return Err(err(line_no, 1, "unterminated block: missing `}`"));
        }
        let Some((root_line, root_token)) = root_token else {
            return Err(err(line_no, 1, "block is missing a root declaration"));
        };
        let nodes = raw
            .iter()
            .map(|(_, node)| {
                Ok(BddNode {
                    var: node.var,
                    lo: parse_bdd_ref(&node.lo, &ids, node.line_no)?,
                    hi: parse_bdd_ref(&node.hi, &ids, node.line_no)?,
                })
            })
            .collect::<Result<Vec<BddNode>>>()?;
        let root = parse_bdd_ref(&root_token, &ids, root_line)?;
        place(&mut slots, index, Bdd::new(nodes, root), line_no)?;
    }
    let bdds = collect_slots(slots)?;
    BooleanNetwork::new(bdds.into_iter().map(LocalFunction::from).collect())
}

// ---------------------------------------------------------------------------
// .d01 — double-DNF networks
// ---------------------------------------------------------------------------

/// Parses `;`-separated clauses of `,`-separated literals (`J` / `!J`), or
/// the tokens `TRUE` / `FALSE`.
pub(crate) fn parse_clause_list(text: &str, line_no: usize) -> Result<Dnf> {
    let trimmed = text.trim();
    if trimmed == "TRUE" {
        return Ok(Dnf::top());
    }
    if trimmed == "FALSE" {
        return Ok(Dnf::bottom());
    }
    let mut clauses = Vec::new();
    for clause_text in trimmed.split(';') {
        let clause_text = clause_text.trim();
        if clause_text.is_empty() {
            return Err(err(
                line_no,
                1,
                "empty clause; use TRUE for the empty clause",
            ));
        }
        let mut literals = Vec::new();
        for lit in clause_text.split(',') {
            let lit = lit.trim();
            let (positive, digits) = match lit.strip_prefix('!') {
                Some(rest) => (false, rest.trim()),
                None => (true, lit),
            };
            let var: usize = digits
                .parse()
                .map_err(|_| err(line_no, 1, format!("invalid literal `{lit}`")))?;
            if var == 0 {
                return Err(err(line_no, 1, "literals are 1-based"));
            }
            literals.push(Literal {
                var: var - 1,
                positive,
            });
        }
        clauses.push(Clause::new(literals));
    }
    Ok(Dnf::new(clauses))
}

fn parse_d01(text: &str) -> Result<BooleanNetwork> {
    let mut offs: Vec<Option<Dnf>> = Vec::new();
    let mut ons: Vec<Option<Dnf>> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let Some(colon) = line.find(':') else {
            return Err(err(
                line_no,
                1,
                "expected `INDEX.0: CLAUSES` or `INDEX.1: CLAUSES`",
            ));
        };
        let head = line[..colon].trim();
        let Some((index_token, side)) = head.split_once('.') else {
            return Err(err(
                line_no,
                1,
                "expected `INDEX.0` or `INDEX.1` before `:`",
            ));
        };
        let index = parse_component_index(index_token, line_no)?;
        let dnf = parse_clause_list(&line[colon + 1..], line_no)?;
        match side {
            "0" => place(&mut offs, index, dnf, line_no)?,
            "1" => place(&mut ons, index, dnf, line_no)?,
            other => {
                return Err(err(
                    line_no,
                    1,
                    format!("expected side 0 or 1, found `{other}`"),
                ))
            }
        }
    }
    if offs.len() != ons.len() {
        let missing = offs.len().max(ons.len());
        return Err(err(
            1,
            1,
            format!("component {missing} must define both covers"),
        ));
    }
    let offs = collect_slots(offs)?;
    let ons = collect_slots(ons)?;
    let locals = offs
        .into_iter()
        .zip(ons)
        .map(|(off, on)| LocalFunction::from(DoubleDnf::new(off, on)))
        .collect();
    BooleanNetwork::new(locals)
}

// ---------------------------------------------------------------------------
// .fg — functional graphs
// ---------------------------------------------------------------------------

fn parse_fg(text: &str) -> Result<FunctionalGraph> {
    let mut n: Option<usize> = None;
    let mut succ: Vec<u32> = Vec::new();
    let mut seen: Vec<bool> = Vec::new();
    let mut count = 0usize;
    for (line_no, line) in content_lines(text) {
        let Some((left, right)) = line.split_once("->") else {
            return Err(err(line_no, 1, "expected `XBITS -> YBITS`"));
        };
        let x = parse_configuration(left.trim())
            .map_err(|_| err(line_no, 1, "invalid source configuration"))?;
        let y = parse_configuration(right.trim())
            .map_err(|_| err(line_no, 1, "invalid target configuration"))?;
        let dim = *n.get_or_insert_with(|| x.n());
        if dim > super::MAX_GRAPH_DIMENSION {
            return Err(Error::DimensionGuard {
                what: "functional graph",
                n: dim,
                limit: super::MAX_GRAPH_DIMENSION,
            });
        }
        if x.n() != dim || y.n() != dim {
            return Err(err(line_no, 1, format!("expected dimension {dim}")));
        }
        if succ.is_empty() {
            succ = vec![0; 1 << dim];
            seen = vec![false; 1 << dim];
        }
        let rank = x.to_rank() as usize;
        if seen[rank] {
            return Err(err(line_no, 1, format!("configuration {x} listed twice")));
        }
        seen[rank] = true;
        succ[rank] = y.to_rank();
        count += 1;
    }
    let Some(n) = n else {
        return Err(Error::EmptyNetwork);
    };
    if count != 1 << n {
        return Err(err(
            1,
            1,
            format!(
                "functional graph lists {count} of {} configurations",
                1u64 << n
            ),
        ));
    }
    FunctionalGraph::new(n, succ)
}
