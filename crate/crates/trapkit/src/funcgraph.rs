//! Polynomial-time algorithms for networks given as functional graphs.
//!
//! All queries run on the explicit `2^n`-vertex successor map, so they are
//! linear (or near-linear) in the size of the graph: trap-space checks scan
//! `v(h)`, minimality goes through terminal strongly connected components,
//! and saturation widens the enclosing hypercube at most `n` times.

use std::fmt::Write as _;

use crate::deciders::{TrapVerdict, Witness};
use crate::error::{Error, Result};
use crate::model::{BooleanNetwork, Configuration, FunctionalGraph, Hypercube};

pub use crate::model::MAX_GRAPH_DIMENSION;

/// A set of configurations, stored as sorted ranks for deterministic
/// iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    ranks: Vec<u32>,
}

impl VertexSet {
    pub fn from_ranks(n: usize, mut ranks: Vec<u32>) -> VertexSet {
        ranks.sort_unstable();
        ranks.dedup();
        VertexSet { n, ranks }
    }

    pub fn from_configs<'a>(
        n: usize,
        configs: impl IntoIterator<Item = &'a Configuration>,
    ) -> VertexSet {
        VertexSet::from_ranks(n, configs.into_iter().map(Configuration::to_rank).collect())
    }

    pub fn singleton(x: &Configuration) -> VertexSet {
        VertexSet {
            n: x.n(),
            ranks: vec![x.to_rank()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn contains(&self, x: &Configuration) -> bool {
        self.ranks.binary_search(&x.to_rank()).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Configuration> + '_ {
        self.ranks
            .iter()
            .map(|&r| Configuration::from_rank(self.n, r))
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Builds the synchronous state transition graph of `f`.
pub fn build_functional_graph(f: &BooleanNetwork) -> Result<FunctionalGraph> {
    build_functional_graph_with(f, 1)
}

/// Like [`build_functional_graph`], evaluating vertex ranges on up to
/// `threads` workers. The result is identical for any thread count.
pub fn build_functional_graph_with(f: &BooleanNetwork, threads: usize) -> Result<FunctionalGraph> {
    let n = f.n();
    if n > MAX_GRAPH_DIMENSION {
        return Err(Error::DimensionGuard {
            what: "functional graph",
            n,
            limit: MAX_GRAPH_DIMENSION,
        });
    }
    let size = 1usize << n;
    let eval_range = |range: std::ops::Range<usize>| -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(range.len());
        let mut bits = vec![false; n];
        for rank in range {
            for (i, b) in bits.iter_mut().enumerate() {
                *b = rank >> (n - 1 - i) & 1 == 1;
            }
            let mut succ = 0u32;
            for (i, local) in f.locals().iter().enumerate() {
                if local.eval(&bits)? {
                    succ |= 1 << (n - 1 - i);
                }
            }
            out.push(succ);
        }
        Ok(out)
    };
    let threads = threads.max(1).min(size);
    if threads == 1 {
        return FunctionalGraph::new(n, eval_range(0..size)?);
    }
    let chunk = size.div_ceil(threads);
    let results: Vec<Result<Vec<u32>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let eval_range = &eval_range;
                let lo = t * chunk;
                let hi = ((t + 1) * chunk).min(size);
                scope.spawn(move || eval_range(lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut succ = Vec::with_capacity(size);
    for part in results {
        succ.extend(part?);
    }
    FunctionalGraph::new(n, succ)
}

/// The smallest sub-hypercube enclosing a non-empty vertex set: seed with
/// one element, free each dimension on disagreement.
pub fn sub_hypercube(w: &VertexSet) -> Result<Hypercube> {
    let Some(&first) = w.ranks().first() else {
        return Err(Error::EmptyVertexSet);
    };
    let mut h = Hypercube::point(&Configuration::from_rank(w.n(), first));
    for &rank in &w.ranks()[1..] {
        widen_rank(&mut h, rank);
    }
    Ok(h)
}

/// Frees every fixed cell of `h` that disagrees with `rank`.
fn widen_rank(h: &mut Hypercube, rank: u32) -> bool {
    let n = h.n();
    let mut changed = false;
    for i in 0..n {
        if let Some(v) = h.cell(i) {
            if v != (rank >> (n - 1 - i) & 1 == 1) {
                h.set(i, None);
                changed = true;
            }
        }
    }
    changed
}

/// `T(SUB-HYPERCUBE(W))`: repeatedly encloses `v(h)` and its successors
/// until the hypercube stabilizes; at most `n` widening rounds.
pub fn saturate(g: &FunctionalGraph, w: &VertexSet) -> Result<Hypercube> {
    let mut h = sub_hypercube(w)?;
    loop {
        let successors: Vec<u32> = h.rank_vertices().map(|r| g.successor_rank(r)).collect();
        let mut changed = false;
        for succ in successors {
            changed |= widen_rank(&mut h, succ);
        }
        if !changed {
            return Ok(h);
        }
    }
}

/// Rank-arithmetic membership test: `(rank & mask) == fixed`.
fn cube_masks(h: &Hypercube) -> (u32, u32) {
    let n = h.n();
    let mut mask = 0u32;
    let mut fixed = 0u32;
    for (i, v) in h.fixed_positions() {
        mask |= 1 << (n - 1 - i);
        if v {
            fixed |= 1 << (n - 1 - i);
        }
    }
    (mask, fixed)
}

/// TRAPSPACE on a functional graph: scan `v(h)` for an escaping edge.
pub fn trapspace_g(g: &FunctionalGraph, h: &Hypercube) -> Result<TrapVerdict> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: h.n(),
        });
    }
    let (mask, fixed) = cube_masks(h);
    for rank in h.rank_vertices() {
        let succ = g.successor_rank(rank);
        if succ & mask != fixed {
            return Ok(TrapVerdict::no(Witness::Transition {
                from: Configuration::from_rank(g.n(), rank),
                to: Configuration::from_rank(g.n(), succ),
            }));
        }
    }
    Ok(TrapVerdict::yes())
}

/// Terminal strongly connected components of the subgraph induced by
/// `v(h)`, which must be successor-closed. Components are sorted by their
/// minimal member, members ascending.
pub fn terminal_sccs(g: &FunctionalGraph, h: &Hypercube) -> Result<Vec<VertexSet>> {
    if !trapspace_g(g, h)?.answer {
        return Err(Error::NotATrapSpace {
            cube: h.to_string(),
        });
    }
    let sccs = tarjan_sccs(g, h);
    let mut terminal: Vec<VertexSet> = Vec::new();
    for scc in sccs {
        let inside = scc
            .iter()
            .all(|&r| scc.binary_search(&g.successor_rank(r)).is_ok());
        if inside {
            terminal.push(VertexSet {
                n: g.n(),
                ranks: scc,
            });
        }
    }
    terminal.sort_by_key(|w| w.ranks()[0]);
    Ok(terminal)
}

/// Iterative Tarjan over the induced subgraph: an explicit frame stack
/// keeps deep successor chains from exhausting call depth. Each vertex has
/// exactly one out-edge, and closure of `v(h)` guarantees it stays inside.
fn tarjan_sccs(g: &FunctionalGraph, h: &Hypercube) -> Vec<Vec<u32>> {
    const UNSET: u32 = u32::MAX;
    let members: Vec<u32> = h.rank_vertices().collect();
    let mut local_of = vec![UNSET; g.vertex_count()];
    for (i, &r) in members.iter().enumerate() {
        local_of[r as usize] = i as u32;
    }
    let m = members.len();
    let mut index = vec![UNSET; m];
    let mut low = vec![UNSET; m];
    let mut on_stack = vec![false; m];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut sccs: Vec<Vec<u32>> = Vec::new();
    // frame: (vertex, 0 = enter, 1 = back from its single successor)
    let mut frames: Vec<(u32, u8)> = Vec::new();
    for start in 0..m as u32 {
        if index[start as usize] != UNSET {
            continue;
        }
        frames.push((start, 0));
        while let Some((v, phase)) = frames.pop() {
            let vu = v as usize;
            let w = local_of[g.successor_rank(members[vu]) as usize];
            if phase == 0 {
                index[vu] = next_index;
                low[vu] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[vu] = true;
                if index[w as usize] == UNSET {
                    frames.push((v, 1));
                    frames.push((w, 0));
                    continue;
                }
                if on_stack[w as usize] {
                    low[vu] = low[vu].min(index[w as usize]);
                }
            } else {
                low[vu] = low[vu].min(low[w as usize]);
            }
            if low[vu] == index[vu] {
                let mut scc = Vec::new();
                loop {
                    let u = stack.pop().expect("tarjan stack underflow");
                    on_stack[u as usize] = false;
                    scc.push(members[u as usize]);
                    if u == v {
                        break;
                    }
                }
                scc.sort_unstable();
                sccs.push(scc);
            }
        }
    }
    sccs
}

/// MINTRAP on a functional graph: `h` is minimal iff it is closed and every
/// terminal SCC of the induced subgraph saturates back to `h`; the first
/// failing component (by minimal member) yields its strictly smaller
/// saturation as witness.
pub fn mintrap_g(g: &FunctionalGraph, h: &Hypercube) -> Result<TrapVerdict> {
    let closed = trapspace_g(g, h)?;
    if !closed.answer {
        return Ok(closed);
    }
    for w in terminal_sccs(g, h)? {
        let t = saturate(g, &w)?;
        if &t != h {
            debug_assert!(h.contains_cube(&t));
            return Ok(TrapVerdict::no(Witness::SmallerTrap(t)));
        }
    }
    Ok(TrapVerdict::yes())
}

/// IN-MINTRAP on a functional graph: `MINTRAP(G, SATURATE({x}))`.
pub fn in_mintrap_g(g: &FunctionalGraph, x: &Configuration) -> Result<TrapVerdict> {
    if g.n() != x.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: x.n(),
        });
    }
    let closure = saturate(g, &VertexSet::singleton(x))?;
    let mut verdict = mintrap_g(g, &closure)?;
    verdict.closure = Some(closure);
    Ok(verdict)
}

/// Fully asynchronous out-neighbours: configurations differing from `x` in
/// exactly one component `i` with `y_i = f_i(x)`.
pub fn async_out(f: &BooleanNetwork, x: &Configuration) -> Result<VertexSet> {
    let n = f.n();
    if n > MAX_GRAPH_DIMENSION {
        return Err(Error::DimensionGuard {
            what: "functional graph",
            n,
            limit: MAX_GRAPH_DIMENSION,
        });
    }
    if x.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: x.n(),
        });
    }
    let mut out = Vec::new();
    for i in 0..n {
        let target = f.local(i).eval(x.bits())?;
        if target != x.bit(i) {
            let mut y = x.clone();
            y.set(i, target);
            out.push(y.to_rank());
        }
    }
    Ok(VertexSet::from_ranks(n, out))
}

/// DOT rendering of `G_{v(h)}`. Terminal SCCs are filled with a cycling
/// palette when `h` is closed; otherwise escaping edges are drawn dashed
/// with their outside targets as diamonds.
pub fn to_dot(g: &FunctionalGraph, h: &Hypercube) -> Result<String> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: h.n(),
        });
    }
    const PALETTE: [&str; 6] = [
        "lightblue",
        "lightsalmon",
        "palegreen",
        "plum",
        "khaki",
        "lightpink",
    ];
    let (mask, fixed) = cube_masks(h);
    let closed = trapspace_g(g, h)?.answer;
    let mut fills: Vec<(u32, &str)> = Vec::new();
    if closed {
        for (i, scc) in terminal_sccs(g, h)?.into_iter().enumerate() {
            for &r in scc.ranks() {
                fills.push((r, PALETTE[i % PALETTE.len()]));
            }
        }
        fills.sort_unstable_by_key(|&(r, _)| r);
    }
    let name = |rank: u32| Configuration::from_rank(g.n(), rank).to_string();
    let mut out = String::new();
    writeln!(out, "digraph functional_graph {{").unwrap();
    writeln!(out, "  label=\"cube {h}\";").unwrap();
    writeln!(out, "  node [shape=box fontname=\"monospace\"];").unwrap();
    for rank in h.rank_vertices() {
        match fills.binary_search_by_key(&rank, |&(r, _)| r) {
            Ok(i) => writeln!(
                out,
                "  \"{}\" [style=filled fillcolor={}];",
                name(rank),
                fills[i].1
            )
            .unwrap(),
            Err(_) => writeln!(out, "  \"{}\";", name(rank)).unwrap(),
        }
    }
    for rank in h.rank_vertices() {
        let succ = g.successor_rank(rank);
        if succ & mask == fixed {
            writeln!(out, "  \"{}\" -> \"{}\";", name(rank), name(succ)).unwrap();
        } else {
            writeln!(out, "  \"{}\" [shape=diamond];", name(succ)).unwrap();
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [style=dashed];",
                name(rank),
                name(succ)
            )
            .unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{parse_network, ModelFormat};

    fn example2() -> BooleanNetwork {
        parse_network(
            "x1, (!x1 | !x2) & x3\nx2, x1 & x3\nx3, x1 | x2 | x3\n",
            ModelFormat::Bn,
        )
        .unwrap()
    }

    fn xor_or() -> BooleanNetwork {
        parse_network(
            "x1, (x1 & !x2) | (!x1 & x2)\nx2, x1 | x2\n",
            ModelFormat::Bn,
        )
        .unwrap()
    }

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn cube(s: &str) -> Hypercube {
        s.parse().unwrap()
    }

    #[test]
    fn build_example2_graph() {
        let g = build_functional_graph(&example2()).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.successor(&cfg("111")), cfg("011"));
        assert_eq!(g.successor(&cfg("101")), cfg("111"));
    }

    #[test]
    fn build_identity_network_self_loops() {
        let f = parse_network("a, a\nb, b\n", ModelFormat::Bn).unwrap();
        let g = build_functional_graph(&f).unwrap();
        for r in 0..4 {
            assert_eq!(g.successor_rank(r), r);
        }
    }

    #[test]
    fn build_xor_or_graph() {
        let g = build_functional_graph(&xor_or()).unwrap();
        assert_eq!(g.successor(&cfg("00")), cfg("00"));
        assert_eq!(g.successor(&cfg("01")), cfg("11"));
        assert_eq!(g.successor(&cfg("10")), cfg("11"));
        assert_eq!(g.successor(&cfg("11")), cfg("01"));
    }

    #[test]
    fn parallel_build_matches_sequential() {
        let f = example2();
        let a = build_functional_graph(&f).unwrap();
        let b = build_functional_graph_with(&f, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sub_hypercube_cases() {
        let w = VertexSet::from_configs(3, &[cfg("010")]);
        assert_eq!(sub_hypercube(&w).unwrap(), cube("010"));
        let w = VertexSet::from_configs(3, &[cfg("000"), cfg("011")]);
        assert_eq!(sub_hypercube(&w).unwrap(), cube("0**"));
        let w = VertexSet::from_configs(3, &[cfg("101"), cfg("111"), cfg("011")]);
        assert_eq!(sub_hypercube(&w).unwrap(), cube("**1"));
    }

    #[test]
    fn sub_hypercube_rejects_empty_set() {
        let w = VertexSet::from_ranks(3, Vec::new());
        assert_eq!(sub_hypercube(&w), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn saturate_example2() {
        let g = build_functional_graph(&example2()).unwrap();
        let t = saturate(&g, &VertexSet::singleton(&cfg("010"))).unwrap();
        assert_eq!(t, cube("***"));
        let t = saturate(&g, &VertexSet::singleton(&cfg("000"))).unwrap();
        assert_eq!(t, cube("000"));
    }

    #[test]
    fn saturate_xor_or() {
        let g = build_functional_graph(&xor_or()).unwrap();
        let t = saturate(&g, &VertexSet::singleton(&cfg("11"))).unwrap();
        assert_eq!(t, cube("*1"));
    }

    #[test]
    fn trapspace_g_example2() {
        let g = build_functional_graph(&example2()).unwrap();
        assert!(trapspace_g(&g, &cube("**1")).unwrap().answer);
        assert!(trapspace_g(&g, &cube("***")).unwrap().answer);
        let v = trapspace_g(&g, &cube("01*")).unwrap();
        assert!(!v.answer);
        let Some(Witness::Transition { from, to }) = v.witness else {
            panic!("expected a transition witness");
        };
        // any escaping edge verifies; the scan finds the first by rank
        assert!(cube("01*").contains(&from));
        assert!(!cube("01*").contains(&to));
        // the derived escape f(011) = 101 is indeed escaping
        assert_eq!(g.successor(&cfg("011")), cfg("101"));
    }

    #[test]
    fn terminal_sccs_example2() {
        let g = build_functional_graph(&example2()).unwrap();
        let sccs = terminal_sccs(&g, &cube("***")).unwrap();
        let rendered: Vec<String> = sccs.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{000}", "{011, 101, 111}"]);
    }

    #[test]
    fn terminal_sccs_identity() {
        let f = parse_network("a, a\nb, b\n", ModelFormat::Bn).unwrap();
        let g = build_functional_graph(&f).unwrap();
        let sccs = terminal_sccs(&g, &cube("**")).unwrap();
        assert_eq!(sccs.len(), 4);
        assert!(sccs.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn terminal_sccs_xor_or() {
        let g = build_functional_graph(&xor_or()).unwrap();
        let sccs = terminal_sccs(&g, &cube("**")).unwrap();
        let rendered: Vec<String> = sccs.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{00}", "{01, 11}"]);
    }

    #[test]
    fn terminal_sccs_requires_a_trap_space() {
        let g = build_functional_graph(&example2()).unwrap();
        assert!(matches!(
            terminal_sccs(&g, &cube("01*")),
            Err(Error::NotATrapSpace { .. })
        ));
    }

    #[test]
    fn mintrap_g_cases() {
        let g = build_functional_graph(&example2()).unwrap();
        assert!(mintrap_g(&g, &cube("**1")).unwrap().answer);
        let v = mintrap_g(&g, &cube("***")).unwrap();
        assert!(!v.answer);
        match v.witness {
            Some(Witness::SmallerTrap(t)) => assert_eq!(t, cube("000")),
            other => panic!("unexpected witness: {other:?}"),
        }
        let g = build_functional_graph(&xor_or()).unwrap();
        assert!(mintrap_g(&g, &cube("*1")).unwrap().answer);
    }

    #[test]
    fn in_mintrap_g_cases() {
        let g = build_functional_graph(&example2()).unwrap();
        assert!(in_mintrap_g(&g, &cfg("111")).unwrap().answer);
        assert!(in_mintrap_g(&g, &cfg("000")).unwrap().answer);
        let v = in_mintrap_g(&g, &cfg("110")).unwrap();
        assert!(!v.answer);
        assert_eq!(v.closure.unwrap(), cube("***"));
    }

    #[test]
    fn async_out_cases() {
        let f = example2();
        let out = async_out(&f, &cfg("010")).unwrap();
        assert_eq!(out.to_string(), "{000, 011}");
        let out = async_out(&f, &cfg("000")).unwrap();
        assert!(out.is_empty());
        let out = async_out(&f, &cfg("110")).unwrap();
        assert_eq!(out.to_string(), "{010, 100, 111}");
    }

    #[test]
    fn async_equivalence_on_example2() {
        // SUB-HYPERCUBE({x} ∪ out'(x)) = SUB-HYPERCUBE({x, f(x)})
        let f = example2();
        let g = build_functional_graph(&f).unwrap();
        for rank in 0..8u32 {
            let x = Configuration::from_rank(3, rank);
            let mut with_async = vec![x.to_rank()];
            with_async.extend(async_out(&f, &x).unwrap().ranks());
            let a = sub_hypercube(&VertexSet::from_ranks(3, with_async)).unwrap();
            let b = sub_hypercube(&VertexSet::from_ranks(
                3,
                vec![rank, g.successor_rank(rank)],
            ))
            .unwrap();
            assert_eq!(a, b, "x = {x}");
        }
    }

    #[test]
    fn tarjan_survives_a_deep_successor_chain() {
        // rank r -> r + 1, last rank self-loops: one path of depth 2^n
        let n = 16;
        let size = 1u32 << n;
        let succ: Vec<u32> = (0..size).map(|r| (r + 1).min(size - 1)).collect();
        let g = crate::model::FunctionalGraph::new(n, succ).unwrap();
        let full = Hypercube::full(n);
        let sccs = terminal_sccs(&g, &full).unwrap();
        assert_eq!(sccs.len(), 1);
        assert_eq!(sccs[0].ranks(), &[size - 1]);
        let v = mintrap_g(&g, &full).unwrap();
        assert!(!v.answer);
        match v.witness {
            Some(Witness::SmallerTrap(t)) => {
                assert_eq!(t, Hypercube::point(&Configuration::from_rank(n, size - 1)))
            }
            other => panic!("unexpected witness: {other:?}"),
        }
    }

    #[test]
    fn dot_export_mentions_sccs() {
        let g = build_functional_graph(&example2()).unwrap();
        let dot = to_dot(&g, &cube("***")).unwrap();
        assert!(dot.contains("digraph"));
        assert!(dot.contains("\"000\" [style=filled"));
        assert!(dot.contains("\"111\" -> \"011\";"));
    }
}
