//! Ground truth by exhaustive enumeration; deliberately naive.
//!
//! Every trap space of a small network is found by checking closure of all
//! `3^n` hypercubes against the explicit successor map.

use crate::error::{Error, Result};
use crate::funcgraph::build_functional_graph;
use crate::model::{BooleanNetwork, Configuration, FunctionalGraph, Hypercube};

pub const MAX_ORACLE_DIMENSION: usize = 12;

fn check_guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_DIMENSION {
        return Err(Error::DimensionGuard {
            what: "oracle",
            n,
            limit: MAX_ORACLE_DIMENSION,
        });
    }
    Ok(())
}

/// All hypercubes over `{0,1,*}^n` in ternary-counter order (digit order
/// 0 < 1 < *, component 1 most significant).
fn all_hypercubes(n: usize) -> impl Iterator<Item = Hypercube> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut cells = vec![None; n];
        for i in (0..n).rev() {
            cells[i] = match code % 3 {
                0 => Some(false),
                1 => Some(true),
                _ => None,
            };
            code /= 3;
        }
        Hypercube::new(cells)
    })
}

fn closed_under(g: &FunctionalGraph, h: &Hypercube) -> bool {
    let n = g.n();
    let mut mask = 0u32;
    let mut fixed = 0u32;
    for (i, v) in h.fixed_positions() {
        mask |= 1 << (n - 1 - i);
        if v {
            fixed |= 1 << (n - 1 - i);
        }
    }
    h.rank_vertices()
        .all(|r| g.successor_rank(r) & mask == fixed)
}

/// Every trap space of `f`, in enumeration order. Always contains `*^n`.
pub fn enumerate_trap_spaces(f: &BooleanNetwork) -> Result<Vec<Hypercube>> {
    check_guard(f.n())?;
    let g = build_functional_graph(f)?;
    enumerate_trap_spaces_graph(&g)
}

/// [`enumerate_trap_spaces`] for an explicit functional graph.
pub fn enumerate_trap_spaces_graph(g: &FunctionalGraph) -> Result<Vec<Hypercube>> {
    check_guard(g.n())?;
    Ok(all_hypercubes(g.n())
        .filter(|h| closed_under(g, h))
        .collect())
}

/// Keeps the trap spaces that contain no strictly smaller trap space.
fn minimal_among(traps: &[Hypercube]) -> Vec<Hypercube> {
    traps
        .iter()
        .filter(|h| {
            !traps
                .iter()
                .any(|inner| inner != *h && h.contains_cube(inner))
        })
        .cloned()
        .collect()
}

pub fn enumerate_minimal_trap_spaces(f: &BooleanNetwork) -> Result<Vec<Hypercube>> {
    Ok(minimal_among(&enumerate_trap_spaces(f)?))
}

pub fn enumerate_minimal_trap_spaces_graph(g: &FunctionalGraph) -> Result<Vec<Hypercube>> {
    Ok(minimal_among(&enumerate_trap_spaces_graph(g)?))
}

/// MINTRAP by membership in the enumerated minimal set.
pub fn oracle_mintrap(f: &BooleanNetwork, h: &Hypercube) -> Result<bool> {
    if f.n() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            actual: h.n(),
        });
    }
    Ok(enumerate_minimal_trap_spaces(f)?.contains(h))
}

/// IN-MINTRAP by membership of `x` in some enumerated minimal trap space.
pub fn oracle_in_mintrap(f: &BooleanNetwork, x: &Configuration) -> Result<bool> {
    if f.n() != x.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            actual: x.n(),
        });
    }
    Ok(enumerate_minimal_trap_spaces(f)?
        .iter()
        .any(|m| m.contains(x)))
}

/// `T(seed)` from the enumeration: the cellwise intersection of every trap
/// space enclosing `v(seed)`.
pub fn oracle_closure(traps: &[Hypercube], seed: &Hypercube) -> Hypercube {
    let mut result = Hypercube::full(seed.n());
    for t in traps.iter().filter(|t| t.contains_cube(seed)) {
        for (i, v) in t.fixed_positions() {
            result.set(i, Some(v));
        }
    }
    result
}
