//! Domain types: configurations, sub-hypercubes, local functions in five
//! encodings, Boolean networks, and functional graphs.
//!
//! Conventions used everywhere: component 1 is position 0 internally, the
//! leftmost character of every textual form, and the most significant bit of
//! ranks and truth-table row indices.

mod bdd;
mod convert;
mod dnf;
mod expr;
mod parse;
mod table;
mod write;

pub use bdd::{Bdd, BddNode, BddRef};
pub(crate) use convert::dependency_table;
pub use convert::{convert, convert_local, dependency_set, MAX_CONVERT_SUPPORT};
pub use dnf::{Clause, Dnf, DoubleDnf, Literal};
pub use expr::Expr;
pub(crate) use parse::parse_clause_list;
pub use parse::{
    parse_configuration, parse_expr_indexed, parse_hypercube, parse_model, parse_network,
    ModelFormat, ParsedModel,
};
pub use table::TruthTable;
pub(crate) use write::write_clause_list;
pub use write::{
    write_bdd_network, write_bn_network, write_d01_network, write_expr, write_functional_graph,
    write_network, write_tt_network,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exhaustive invariant checks run up to this support size; larger supports
/// are checked on deterministically sampled inputs.
const EXHAUSTIVE_CHECK_LIMIT: usize = 16;
const SAMPLED_CHECKS: usize = 1024;

/// Functional graphs hold all `2^n` successors explicitly.
pub const MAX_GRAPH_DIMENSION: usize = 24;

// ---------------------------------------------------------------------------
// Configurations and hypercubes
// ---------------------------------------------------------------------------

/// A point of the `n`-dimensional Boolean hypercube.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    bits: Vec<bool>,
}

impl Configuration {
    pub fn new(bits: Vec<bool>) -> Configuration {
        Configuration { bits }
    }

    pub fn zeros(n: usize) -> Configuration {
        Configuration {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Configuration {
        Configuration {
            bits: vec![true; n],
        }
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Big-endian rank: component 1 is the most significant bit.
    pub fn to_rank(&self) -> u32 {
        assert!(self.bits.len() <= 32);
        self.bits
            .iter()
            .fold(0u32, |acc, &b| (acc << 1) | u32::from(b))
    }

    pub fn from_rank(n: usize, rank: u32) -> Configuration {
        assert!((1..=32).contains(&n));
        let bits = (0..n).map(|i| rank >> (n - 1 - i) & 1 == 1).collect();
        Configuration { bits }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Configuration> {
        parse_configuration(s)
    }
}

/// A sub-hypercube: each cell is fixed (`Some`) or free (`None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypercube {
    cells: Vec<Option<bool>>,
}

impl Hypercube {
    pub fn new(cells: Vec<Option<bool>>) -> Hypercube {
        Hypercube { cells }
    }

    /// The full space `*^n`.
    pub fn full(n: usize) -> Hypercube {
        Hypercube {
            cells: vec![None; n],
        }
    }

    pub fn point(x: &Configuration) -> Hypercube {
        Hypercube {
            cells: x.bits().iter().map(|&b| Some(b)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, i: usize) -> Option<bool> {
        self.cells[i]
    }

    pub fn set(&mut self, i: usize, cell: Option<bool>) {
        self.cells[i] = cell;
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.cells[i].is_some()
    }

    pub fn free_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_none()).count()
    }

    pub fn free_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.is_none().then_some(i))
    }

    pub fn fixed_positions(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|b| (i, b)))
    }

    /// Does `x` belong to `v(h)`?
    pub fn contains(&self, x: &Configuration) -> bool {
        self.cells.len() == x.n()
            && self
                .cells
                .iter()
                .zip(x.bits())
                .all(|(c, &b)| c.is_none_or(|v| v == b))
    }

    /// Cellwise inclusion: `inner ⊆ self` iff every cell fixed in `self` is
    /// fixed to the same value in `inner`. Coincides with vertex-set
    /// inclusion.
    pub fn contains_cube(&self, inner: &Hypercube) -> bool {
        self.cells.len() == inner.cells.len()
            && self
                .cells
                .iter()
                .zip(&inner.cells)
                .all(|(outer, inner)| outer.is_none_or(|v| *inner == Some(v)))
    }

    /// The configuration this hypercube denotes, when no cell is free.
    pub fn as_configuration(&self) -> Option<Configuration> {
        self.cells
            .iter()
            .copied()
            .collect::<Option<Vec<bool>>>()
            .map(Configuration::new)
    }

    /// Frees every cell where `bits` disagrees; returns whether anything
    /// changed.
    pub fn widen_with(&mut self, bits: &[bool]) -> bool {
        let mut changed = false;
        for (c, &b) in self.cells.iter_mut().zip(bits) {
            if c.is_some_and(|v| v != b) {
                *c = None;
                changed = true;
            }
        }
        changed
    }

    /// Vertices of `v(h)` in ascending rank order.
    pub fn vertices(&self) -> Vertices<'_> {
        Vertices {
            cube: self,
            next: Some(self.first_vertex()),
        }
    }

    /// Vertex ranks in ascending order; requires `n <= 32`.
    pub fn rank_vertices(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.n();
        assert!(n <= 32);
        let free: Vec<usize> = self.free_positions().collect();
        let base: u32 = self
            .fixed_positions()
            .fold(0, |acc, (i, b)| acc | (u32::from(b) << (n - 1 - i)));
        let count: u64 = 1 << free.len();
        (0..count).map(move |m| {
            let mut rank = base;
            for (t, &p) in free.iter().enumerate() {
                // free positions ascending keep rank order ascending
                let bit = m >> (free.len() - 1 - t) & 1;
                rank |= (bit as u32) << (n - 1 - p);
            }
            rank
        })
    }

    fn first_vertex(&self) -> Configuration {
        Configuration::new(self.cells.iter().map(|c| c.unwrap_or(false)).collect())
    }
}

impl From<&Configuration> for Hypercube {
    fn from(x: &Configuration) -> Hypercube {
        Hypercube::point(x)
    }
}

impl fmt::Display for Hypercube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            f.write_str(match c {
                Some(true) => "1",
                Some(false) => "0",
                None => "*",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Hypercube {
    type Err = Error;

    fn from_str(s: &str) -> Result<Hypercube> {
        parse_hypercube(s)
    }
}

/// Iterator over the vertices of a hypercube, odometer-style over the free
/// cells (rightmost free cell least significant).
pub struct Vertices<'a> {
    cube: &'a Hypercube,
    next: Option<Configuration>,
}

impl Iterator for Vertices<'_> {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = false;
        for i in (0..self.cube.n()).rev() {
            if self.cube.is_fixed(i) {
                continue;
            }
            if succ.bit(i) {
                succ.set(i, false);
            } else {
                succ.set(i, true);
                carried = true;
                break;
            }
        }
        if carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

// ---------------------------------------------------------------------------
// Unate orderings
// ---------------------------------------------------------------------------

/// Orientation of one component in a unate ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `≤`: flipping the input 0 → 1 never decreases the function.
    Inc,
    /// `≥`: flipping the input 0 → 1 never increases the function.
    Dec,
}

/// A per-component orientation vector of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnateOrdering(Vec<Orientation>);

impl UnateOrdering {
    pub fn new(orientations: Vec<Orientation>) -> UnateOrdering {
        UnateOrdering(orientations)
    }

    pub fn all_inc(n: usize) -> UnateOrdering {
        UnateOrdering(vec![Orientation::Inc; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Orientation {
        self.0[i]
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.0
    }

    /// Value of position `i` in the extreme vertex that maximizes the chance
    /// of hitting `target`: for `target = 1`, inc → 1 and dec → 0.
    pub fn extreme(&self, i: usize, target: bool) -> bool {
        match self.0[i] {
            Orientation::Inc => target,
            Orientation::Dec => !target,
        }
    }
}

impl fmt::Display for UnateOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.0 {
            f.write_str(match o {
                Orientation::Inc => "+",
                Orientation::Dec => "-",
            })?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Local functions
// ---------------------------------------------------------------------------

/// The encoding tags of the five local-function representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    Formula,
    Dnf,
    Table,
    Bdd,
    Dnf01,
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Encoding::Formula => "formula",
            Encoding::Dnf => "dnf",
            Encoding::Table => "tt",
            Encoding::Bdd => "bdd",
            Encoding::Dnf01 => "dnf01",
        })
    }
}

impl FromStr for Encoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Encoding> {
        match s {
            "formula" | "bn" => Ok(Encoding::Formula),
            "dnf" => Ok(Encoding::Dnf),
            "tt" => Ok(Encoding::Table),
            "bdd" => Ok(Encoding::Bdd),
            "dnf01" | "d01" => Ok(Encoding::Dnf01),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown encoding `{other}`"),
            }),
        }
    }
}

/// One of the five concrete representations of a local function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Repr {
    Formula(Expr),
    Dnf(Dnf),
    Table(TruthTable),
    Bdd(Bdd),
    Dnf01(DoubleDnf),
}

impl Repr {
    pub fn encoding(&self) -> Encoding {
        match self {
            Repr::Formula(_) => Encoding::Formula,
            Repr::Dnf(_) => Encoding::Dnf,
            Repr::Table(_) => Encoding::Table,
            Repr::Bdd(_) => Encoding::Bdd,
            Repr::Dnf01(_) => Encoding::Dnf01,
        }
    }

    /// Syntactic support: variables the representation mentions. For tables
    /// this is `p`, for BDDs every component in the node table.
    pub fn support(&self) -> BTreeSet<usize> {
        match self {
            Repr::Formula(e) => e.support(),
            Repr::Dnf(d) => d.support(),
            Repr::Table(t) => t.inputs().iter().copied().collect(),
            Repr::Bdd(b) => b.table_vars(),
            Repr::Dnf01(d) => d.support(),
        }
    }

    /// Value at `x`, reading a double DNF through its on-cover without the
    /// consistency check. Network validation makes the two agree.
    pub(crate) fn eval_raw(&self, x: &[bool]) -> bool {
        match self {
            Repr::Formula(e) => e.eval(x),
            Repr::Dnf(d) => d.eval(x),
            Repr::Table(t) => t.eval(x),
            Repr::Bdd(b) => b.eval(x),
            Repr::Dnf01(d) => d.on.eval(x),
        }
    }

    /// Value at `x`. For double DNFs the two covers are cross-checked and an
    /// integrity error names the offending configuration.
    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        if let Repr::Dnf01(d) = self {
            let on = d.on.eval(x);
            if d.off.eval(x) == on {
                return Err(Error::Dnf01Inconsistent {
                    config: Configuration::new(x.to_vec()).to_string(),
                });
            }
            return Ok(on);
        }
        Ok(self.eval_raw(x))
    }
}

/// A component's update rule: a representation plus an optional unate
/// ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFunction {
    pub repr: Repr,
    pub unate: Option<UnateOrdering>,
}

impl LocalFunction {
    pub fn new(repr: Repr) -> LocalFunction {
        LocalFunction { repr, unate: None }
    }

    pub fn with_unate(mut self, ordering: UnateOrdering) -> LocalFunction {
        self.unate = Some(ordering);
        self
    }

    pub fn eval(&self, x: &[bool]) -> Result<bool> {
        self.repr.eval(x)
    }
}

impl From<Expr> for LocalFunction {
    fn from(e: Expr) -> LocalFunction {
        LocalFunction::new(Repr::Formula(e))
    }
}

impl From<Dnf> for LocalFunction {
    fn from(d: Dnf) -> LocalFunction {
        LocalFunction::new(Repr::Dnf(d))
    }
}

impl From<TruthTable> for LocalFunction {
    fn from(t: TruthTable) -> LocalFunction {
        LocalFunction::new(Repr::Table(t))
    }
}

impl From<Bdd> for LocalFunction {
    fn from(b: Bdd) -> LocalFunction {
        LocalFunction::new(Repr::Bdd(b))
    }
}

impl From<DoubleDnf> for LocalFunction {
    fn from(d: DoubleDnf) -> LocalFunction {
        LocalFunction::new(Repr::Dnf01(d))
    }
}

// ---------------------------------------------------------------------------
// Boolean networks
// ---------------------------------------------------------------------------

/// An `n`-dimensional Boolean network: one local function per component.
///
/// Immutable after construction; construction validates every type
/// invariant (index ranges, free BDDs, double-DNF consistency, attached
/// unate orderings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanNetwork {
    locals: Vec<LocalFunction>,
    names: Vec<String>,
}

impl BooleanNetwork {
    pub fn new(locals: Vec<LocalFunction>) -> Result<BooleanNetwork> {
        let names = (1..=locals.len()).map(|i| format!("x{i}")).collect();
        BooleanNetwork::with_names(locals, names)
    }

    pub fn with_names(locals: Vec<LocalFunction>, names: Vec<String>) -> Result<BooleanNetwork> {
        let n = locals.len();
        if n == 0 {
            return Err(Error::EmptyNetwork);
        }
        assert_eq!(names.len(), n, "one name per component");
        for (idx, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let head_ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !head_ok || !tail_ok {
                return Err(Error::InvalidFunction {
                    component: idx + 1,
                    message: format!("invalid component name `{name}`"),
                });
            }
            if names[..idx].contains(name) {
                return Err(Error::InvalidFunction {
                    component: idx + 1,
                    message: format!("duplicate component name `{name}`"),
                });
            }
        }
        let net = BooleanNetwork { locals, names };
        net.validate()?;
        Ok(net)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        for (idx, local) in self.locals.iter().enumerate() {
            let component = idx + 1;
            if let Some(&max) = local.repr.support().iter().max() {
                if max >= n {
                    return Err(Error::IndexOutOfRange {
                        component,
                        index: max + 1,
                        n,
                    });
                }
            }
            if let Repr::Bdd(b) = &local.repr {
                b.validate(component, n)?;
            }
            if let Repr::Dnf01(d) = &local.repr {
                check_dnf01_consistency(d, component, n)?;
            }
            if let Some(ord) = &local.unate {
                if ord.len() != n {
                    return Err(Error::InvalidFunction {
                        component,
                        message: format!("unate ordering has length {}, expected {n}", ord.len()),
                    });
                }
                check_unate_ordering(&local.repr, ord, component, n)?;
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.locals.len()
    }

    pub fn locals(&self) -> &[LocalFunction] {
        &self.locals
    }

    pub fn local(&self, i: usize) -> &LocalFunction {
        &self.locals[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Every local function carries a unate ordering.
    pub fn is_locally_monotone(&self) -> bool {
        self.locals.iter().all(|l| l.unate.is_some())
    }

    /// The synchronous image `f(x)`.
    pub fn image(&self, x: &Configuration) -> Result<Configuration> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                actual: x.n(),
            });
        }
        let bits = self
            .locals
            .iter()
            .map(|l| l.eval(x.bits()))
            .collect::<Result<Vec<bool>>>()?;
        Ok(Configuration::new(bits))
    }
}

/// Exhaustively (or, above the limit, on sampled inputs) checks that the two
/// covers of a double DNF complement each other.
fn check_dnf01_consistency(d: &DoubleDnf, component: usize, n: usize) -> Result<()> {
    let support: Vec<usize> = d.support().into_iter().collect();
    let mut x = vec![false; n];
    let check = |x: &[bool]| -> Result<()> {
        if d.off.eval(x) == d.on.eval(x) {
            return Err(Error::InvalidFunction {
                component,
                message: format!(
                    "double DNF covers agree at {}",
                    Configuration::new(x.to_vec())
                ),
            });
        }
        Ok(())
    };
    if support.len() <= EXHAUSTIVE_CHECK_LIMIT {
        for m in 0u64..1 << support.len() {
            for (t, &p) in support.iter().enumerate() {
                x[p] = m >> t & 1 == 1;
            }
            check(&x)?;
        }
    } else {
        let mut rng = crate::rng::SplitMix64::new(0x7d01);
        check(&x)?;
        for p in &support {
            x[*p] = true;
        }
        check(&x)?;
        for _ in 0..SAMPLED_CHECKS {
            for &p in &support {
                x[p] = rng.bool();
            }
            check(&x)?;
        }
    }
    Ok(())
}

/// Checks that `repr` is unate under the attached ordering.
fn check_unate_ordering(
    repr: &Repr,
    ord: &UnateOrdering,
    component: usize,
    n: usize,
) -> Result<()> {
    let support: Vec<usize> = repr.support().into_iter().collect();
    let mut x = vec![false; n];
    let check = |x: &mut Vec<bool>, j: usize| -> Result<()> {
        x[j] = false;
        let low = repr.eval_raw(x);
        x[j] = true;
        let high = repr.eval_raw(x);
        let ok = match ord.get(j) {
            Orientation::Inc => low <= high,
            Orientation::Dec => low >= high,
        };
        if !ok {
            return Err(Error::InvalidFunction {
                component,
                message: format!(
                    "function is not unate under the attached ordering at x{}",
                    j + 1
                ),
            });
        }
        Ok(())
    };
    if support.len() <= EXHAUSTIVE_CHECK_LIMIT {
        for m in 0u64..1 << support.len() {
            for (t, &p) in support.iter().enumerate() {
                x[p] = m >> t & 1 == 1;
            }
            for &j in &support {
                check(&mut x, j)?;
            }
        }
    } else {
        let mut rng = crate::rng::SplitMix64::new(0x0a7e);
        for _ in 0..SAMPLED_CHECKS {
            for &p in &support {
                x[p] = rng.bool();
            }
            for &j in &support {
                check(&mut x, j)?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Functional graphs
// ---------------------------------------------------------------------------

/// The synchronous state transition graph: every configuration rank maps to
/// the rank of its unique successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalGraph {
    n: usize,
    succ: Vec<u32>,
}

impl FunctionalGraph {
    pub fn new(n: usize, succ: Vec<u32>) -> Result<FunctionalGraph> {
        if n == 0 {
            return Err(Error::EmptyNetwork);
        }
        if n > MAX_GRAPH_DIMENSION {
            return Err(Error::DimensionGuard {
                what: "functional graph",
                n,
                limit: MAX_GRAPH_DIMENSION,
            });
        }
        let size = 1usize << n;
        assert_eq!(
            succ.len(),
            size,
            "successor map must cover all 2^n configurations"
        );
        for &s in &succ {
            assert!((s as usize) < size, "successor rank out of range");
        }
        Ok(FunctionalGraph { n, succ })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.succ.len()
    }

    pub fn successor_rank(&self, rank: u32) -> u32 {
        self.succ[rank as usize]
    }

    pub fn successor(&self, x: &Configuration) -> Configuration {
        Configuration::from_rank(self.n, self.successor_rank(x.to_rank()))
    }

    pub fn successors(&self) -> &[u32] {
        &self.succ
    }
}
