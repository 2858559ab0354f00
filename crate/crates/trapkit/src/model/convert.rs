//! Semantic dependency analysis and cross-encoding conversion.
//!
//! Conversion runs through a truth table over the syntactic support, refines
//! it to the semantically relevant components, and rebuilds the requested
//! encoding from there.

use std::collections::{BTreeSet, HashMap};

use super::{
    Bdd, BddNode, BddRef, BooleanNetwork, Clause, Dnf, DoubleDnf, Encoding, Expr, Literal,
    LocalFunction, Repr, TruthTable,
};
use crate::error::{Error, Result};

/// Supports larger than this cannot be tabulated.
pub const MAX_CONVERT_SUPPORT: usize = 20;

/// Value table of a function over its syntactic support.
///
/// `vars` is sorted ascending; bit `t` (LSB) of a table index is the value
/// of `vars[t]`.
struct SupportTable {
    vars: Vec<usize>,
    values: Vec<bool>,
}

fn support_table(repr: &Repr, component: usize) -> Result<SupportTable> {
    let vars: Vec<usize> = repr.support().into_iter().collect();
    if vars.len() > MAX_CONVERT_SUPPORT {
        return Err(Error::SupportGuard {
            component,
            size: vars.len(),
            limit: MAX_CONVERT_SUPPORT,
        });
    }
    let width = vars.len();
    let scratch_len = vars.iter().max().map_or(0, |&m| m + 1);
    let mut x = vec![false; scratch_len];
    let mut values = Vec::with_capacity(1 << width);
    for m in 0u64..1 << width {
        for (t, &p) in vars.iter().enumerate() {
            x[p] = m >> t & 1 == 1;
        }
        values.push(repr.eval_raw(&x));
    }
    Ok(SupportTable { vars, values })
}

impl SupportTable {
    /// Positions (within `vars`) the values actually depend on.
    fn relevant_positions(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&t| {
                let bit = 1usize << t;
                (0..self.values.len())
                    .any(|m| m & bit == 0 && self.values[m] != self.values[m | bit])
            })
            .collect()
    }

    /// Collapses the table onto `positions`, fixing the other support
    /// variables to 0 (sound: they are semantically irrelevant).
    fn restrict_to(&self, positions: &[usize]) -> (Vec<usize>, Vec<bool>) {
        let deps: Vec<usize> = positions.iter().map(|&t| self.vars[t]).collect();
        let mut values = Vec::with_capacity(1 << positions.len());
        for m2 in 0usize..1 << positions.len() {
            let mut m = 0usize;
            for (bit2, &t) in positions.iter().enumerate() {
                if m2 >> bit2 & 1 == 1 {
                    m |= 1 << t;
                }
            }
            values.push(self.values[m]);
        }
        (deps, values)
    }
}

/// Dependency-restricted truth table: the semantically relevant components
/// (ascending) and the `2^k` values, bit `t` of an index being `deps[t]`.
pub(crate) fn dependency_table(repr: &Repr, component: usize) -> Result<(Vec<usize>, Vec<bool>)> {
    let table = support_table(repr, component)?;
    let positions = table.relevant_positions();
    Ok(table.restrict_to(&positions))
}

/// The set of components the function semantically depends on: flipping any
/// of them changes the value for some input.
pub fn dependency_set(f: &LocalFunction, _n: usize) -> Result<BTreeSet<usize>> {
    let (deps, _) = dependency_table(&f.repr, 0)?;
    Ok(deps.into_iter().collect())
}

fn minterm_clauses(deps: &[usize], values: &[bool], polarity: bool) -> Vec<Clause> {
    values
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == polarity)
        .map(|(m, _)| {
            Clause::new(
                deps.iter()
                    .enumerate()
                    .map(|(t, &var)| Literal {
                        var,
                        positive: m >> t & 1 == 1,
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Builds a free (in fact ordered) BDD from the dependency table by Shannon
/// expansion in ascending component order, sharing equal subgraphs.
fn bdd_from_table(deps: &[usize], values: &[bool]) -> Bdd {
    #[derive(PartialEq, Eq, Hash)]
    struct Key(usize, BddRef, BddRef);

    fn build(
        deps: &[usize],
        values: &[bool],
        depth: usize,
        nodes: &mut Vec<BddNode>,
        cache: &mut HashMap<Key, u32>,
    ) -> BddRef {
        if values.iter().all(|&v| v == values[0]) {
            return BddRef::Terminal(values[0]);
        }
        // bit 0 of the remaining index is deps[depth]
        let lo_vals: Vec<bool> = values.iter().copied().step_by(2).collect();
        let hi_vals: Vec<bool> = values.iter().copied().skip(1).step_by(2).collect();
        let lo = build(deps, &lo_vals, depth + 1, nodes, cache);
        let hi = build(deps, &hi_vals, depth + 1, nodes, cache);
        if lo == hi {
            return lo;
        }
        let var = deps[depth];
        let id = *cache.entry(Key(var, lo, hi)).or_insert_with(|| {
            nodes.push(BddNode { var, lo, hi });
            (nodes.len() - 1) as u32
        });
        BddRef::Node(id)
    }

    let mut nodes = Vec::new();
    let mut cache = HashMap::new();
    let root = build(deps, values, 0, &mut nodes, &mut cache);
    Bdd::new(nodes, root)
}

/// Converts one local function to `target`, preserving semantics.
///
/// Unate orderings survive only onto formula and DNF targets; the other
/// encodings drop them.
pub fn convert_local(
    f: &LocalFunction,
    component: usize,
    target: Encoding,
) -> Result<LocalFunction> {
    // Identity conversions keep the original structure (and ordering).
    match (&f.repr, target) {
        (Repr::Formula(_), Encoding::Formula) | (Repr::Dnf(_), Encoding::Dnf) => {
            return Ok(f.clone())
        }
        _ => {}
    }
    let (deps, values) = dependency_table(&f.repr, component)?;
    let repr = match target {
        Encoding::Formula => {
            if deps.is_empty() {
                Repr::Formula(Expr::Const(values[0]))
            } else {
                Repr::Formula(Dnf::new(minterm_clauses(&deps, &values, true)).to_expr())
            }
        }
        Encoding::Dnf => Repr::Dnf(Dnf::new(minterm_clauses(&deps, &values, true))),
        Encoding::Table => Repr::Table(table_from(&deps, &values)),
        Encoding::Bdd => Repr::Bdd(bdd_from_table(&deps, &values)),
        Encoding::Dnf01 => Repr::Dnf01(DoubleDnf::new(
            Dnf::new(minterm_clauses(&deps, &values, false)),
            Dnf::new(minterm_clauses(&deps, &values, true)),
        )),
    };
    let unate = match target {
        Encoding::Formula | Encoding::Dnf => f.unate.clone(),
        _ => None,
    };
    Ok(LocalFunction { repr, unate })
}

/// Reorders the LSB-first dependency table into the big-endian row order of
/// [`TruthTable`].
fn table_from(deps: &[usize], values: &[bool]) -> TruthTable {
    let k = deps.len();
    let rows = (0..values.len())
        .map(|row| {
            let mut m = 0usize;
            for t in 0..k {
                if row >> (k - 1 - t) & 1 == 1 {
                    m |= 1 << t;
                }
            }
            values[m]
        })
        .collect();
    TruthTable::new(deps.to_vec(), rows)
}

/// Converts every local function of `net` to `target`.
pub fn convert(net: &BooleanNetwork, target: Encoding) -> Result<BooleanNetwork> {
    let locals = net
        .locals()
        .iter()
        .enumerate()
        .map(|(idx, f)| convert_local(f, idx + 1, target))
        .collect::<Result<Vec<LocalFunction>>>()?;
    BooleanNetwork::with_names(locals, net.names().to_vec())
}
