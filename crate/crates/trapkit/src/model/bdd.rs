//! Free binary decision diagrams.
//!
//! No global variable order is required: the only structural demands are
//! acyclicity and the free property (no root-to-terminal path tests a
//! component twice).

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Target of a decision edge: another node or a terminal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BddRef {
    Terminal(bool),
    Node(u32),
}

/// A non-terminal node: branch on `var`, follow `lo` on 0 and `hi` on 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BddNode {
    pub var: usize,
    pub lo: BddRef,
    pub hi: BddRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bdd {
    nodes: Vec<BddNode>,
    root: BddRef,
}

impl Bdd {
    /// Panics on dangling node references; graph-shape invariants are
    /// checked by [`Bdd::validate`] during network assembly.
    pub fn new(nodes: Vec<BddNode>, root: BddRef) -> Bdd {
        let check = |r: BddRef| {
            if let BddRef::Node(i) = r {
                assert!((i as usize) < nodes.len(), "dangling BDD node reference");
            }
        };
        check(root);
        for n in &nodes {
            check(n.lo);
            check(n.hi);
        }
        Bdd { nodes, root }
    }

    pub fn constant(value: bool) -> Bdd {
        Bdd {
            nodes: Vec::new(),
            root: BddRef::Terminal(value),
        }
    }

    pub fn nodes(&self) -> &[BddNode] {
        &self.nodes
    }

    pub fn root(&self) -> BddRef {
        self.root
    }

    /// Components appearing anywhere in the node table.
    pub fn table_vars(&self) -> BTreeSet<usize> {
        self.nodes.iter().map(|n| n.var).collect()
    }

    pub fn eval(&self, x: &[bool]) -> bool {
        let mut cur = self.root;
        loop {
            match cur {
                BddRef::Terminal(b) => return b,
                BddRef::Node(i) => {
                    let n = &self.nodes[i as usize];
                    cur = if x[n.var] { n.hi } else { n.lo };
                }
            }
        }
    }

    /// Checks acyclicity of the node table and the free property along every
    /// root-to-terminal path. `component` is the 1-based owner, used in
    /// error messages.
    pub(crate) fn validate(&self, component: usize, n: usize) -> Result<()> {
        for node in &self.nodes {
            if node.var >= n {
                return Err(Error::IndexOutOfRange {
                    component,
                    index: node.var + 1,
                    n,
                });
            }
        }
        self.check_acyclic(component)?;
        self.check_free(component, n)
    }

    fn check_acyclic(&self, component: usize) -> Result<()> {
        // Iterative three-color DFS over the whole table, unreachable nodes
        // included.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; self.nodes.len()];
        for start in 0..self.nodes.len() {
            if color[start] != WHITE {
                continue;
            }
            // (node, next edge to explore: 0 = lo, 1 = hi, 2 = done)
            let mut stack: Vec<(usize, u8)> = vec![(start, 0)];
            color[start] = GRAY;
            while let Some((v, edge)) = stack.pop() {
                if edge == 2 {
                    color[v] = BLACK;
                    continue;
                }
                stack.push((v, edge + 1));
                let target = if edge == 0 {
                    self.nodes[v].lo
                } else {
                    self.nodes[v].hi
                };
                if let BddRef::Node(w) = target {
                    let w = w as usize;
                    match color[w] {
                        WHITE => {
                            color[w] = GRAY;
                            stack.push((w, 0));
                        }
                        GRAY => {
                            return Err(Error::InvalidFunction {
                                component,
                                message: format!(
                                    "BDD node table contains a cycle through node {w}"
                                ),
                            });
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// Free property: for every node reachable from the root, no path from
    /// the root to it may already have tested the node's own variable.
    /// Propagates may-appear-above variable sets in topological order.
    fn check_free(&self, component: usize, n: usize) -> Result<()> {
        let root = match self.root {
            BddRef::Node(i) => i as usize,
            BddRef::Terminal(_) => return Ok(()),
        };
        let words = n.div_ceil(64);
        let order = self.topo_order(root);
        let mut above: Vec<Option<Vec<u64>>> = vec![None; self.nodes.len()];
        above[root] = Some(vec![0u64; words]);
        for &v in &order {
            let Some(set) = above[v].clone() else {
                continue;
            };
            let var = self.nodes[v].var;
            if set[var / 64] >> (var % 64) & 1 == 1 {
                return Err(Error::InvalidFunction {
                    component,
                    message: format!(
                        "BDD is not free: some path tests variable {} twice",
                        var + 1
                    ),
                });
            }
            let mut with_var = set;
            with_var[var / 64] |= 1 << (var % 64);
            for target in [self.nodes[v].lo, self.nodes[v].hi] {
                if let BddRef::Node(w) = target {
                    let w = w as usize;
                    match &mut above[w] {
                        Some(acc) => {
                            for (a, b) in acc.iter_mut().zip(&with_var) {
                                *a |= *b;
                            }
                        }
                        none => *none = Some(with_var.clone()),
                    }
                }
            }
        }
        Ok(())
    }

    /// Topological order of nodes reachable from `root` (parents first).
    /// Assumes acyclicity, which `check_acyclic` established.
    fn topo_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        let mut post = Vec::new();
        let mut stack: Vec<(usize, u8)> = vec![(root, 0)];
        seen[root] = true;
        while let Some((v, edge)) = stack.pop() {
            if edge == 2 {
                post.push(v);
                continue;
            }
            stack.push((v, edge + 1));
            let target = if edge == 0 {
                self.nodes[v].lo
            } else {
                self.nodes[v].hi
            };
            if let BddRef::Node(w) = target {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            }
        }
        post.reverse();
        post
    }
}
