//! Brute-force ground truth, independent of the refinement search and of
//! Schreier–Sims: full `n!` filtering, reachability by breadth-first search
//! over labeled copies, and an exhaustive small-graph corpus.

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fer::EdgeReplacement;
use crate::lgraph::LabeledGraph;
use crate::permgroup::{factorial, Domain, Permutation};

pub const COSET_LIMIT: usize = 8;
pub const REACH_LIMIT: usize = 6;
pub const COPIES_LIMIT: usize = 100_000;
pub const CORPUS_LIMIT: usize = 6;

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::SizeGuard { what, size, limit });
    }
    Ok(())
}

fn all_images(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..n as u32).permutations(n)
}

/// Every `σ` with `g_σ = g − removed + added`, by testing all of `Sym(X)`.
/// Replacements that do not apply to `g` give an empty list.
pub fn brute_coset(g: &LabeledGraph, r: &EdgeReplacement) -> Result<Vec<Permutation>> {
    guard("brute-force coset", g.len(), COSET_LIMIT)?;
    let Ok(target) = r.apply(g) else {
        return Ok(Vec::new());
    };
    let mut out: Vec<Permutation> = all_images(g.len())
        .filter(|s| g.embed_raw(s).same_edges(&target))
        .map(|s| Permutation::from_images(g.domain(), s).expect("permutation"))
        .collect();
    out.sort();
    Ok(out)
}

pub fn brute_automorphisms(g: &LabeledGraph) -> Result<Vec<Permutation>> {
    brute_coset(g, &EdgeReplacement::Neutral)
}

type EdgeList = Vec<(u8, u8)>;

fn edge_list(g: &LabeledGraph) -> EdgeList {
    g.index_edges()
        .into_iter()
        .map(|(i, j)| (i as u8, j as u8))
        .collect()
}

/// The labeled graphs reachable from a start graph by feasible
/// edge-replacements, as sorted edge lists over its label indices.
#[derive(Clone, Debug)]
pub struct ReachabilitySet {
    pub start: LabeledGraph,
    pub reached: BTreeSet<EdgeList>,
    /// Moves examined whose result was a labeled copy of the start graph.
    pub transitions: usize,
    /// Number of labeled copies of the start graph on its label set.
    pub total_copies: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReachabilitySummary {
    pub reached: usize,
    pub total_copies: usize,
}

impl ReachabilitySet {
    pub fn summary(&self) -> ReachabilitySummary {
        ReachabilitySummary {
            reached: self.reached.len(),
            total_copies: self.total_copies,
        }
    }

    /// Every labeled copy was reached.
    pub fn is_complete(&self) -> bool {
        self.reached.len() == self.total_copies
    }

    pub fn graphs(&self) -> Vec<LabeledGraph> {
        self.reached
            .iter()
            .map(|es| {
                let es: Vec<(usize, usize)> =
                    es.iter().map(|&(i, j)| (i as usize, j as usize)).collect();
                LabeledGraph::from_index_edges(self.start.domain(), &es, self.start.root_index())
            })
            .collect()
    }
}

/// Breadth-first search over labeled graphs on `g`'s labels: a move removes a
/// present edge and adds an absent one, and is kept when the result is one of
/// the labeled copies `{g_σ}` (enumerated over all of `Sym(X)`).
pub fn reachability(g: &LabeledGraph) -> Result<ReachabilitySet> {
    let n = g.len();
    guard("reachability", n, REACH_LIMIT)?;
    let copies: HashSet<EdgeList> = all_images(n).map(|s| edge_list(&g.embed_raw(&s))).collect();
    guard("labeled copies", copies.len(), COPIES_LIMIT)?;
    let start = edge_list(g);
    let mut reached = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut transitions = 0;
    let pairs: Vec<(u8, u8)> = (0..n as u8)
        .flat_map(|i| (i + 1..n as u8).map(move |j| (i, j)))
        .collect();
    while let Some(state) = queue.pop_front() {
        let present: HashSet<(u8, u8)> = state.iter().copied().collect();
        for &e in &state {
            for &f in pairs.iter().filter(|f| !present.contains(f)) {
                let mut next: EdgeList = state.iter().copied().filter(|&x| x != e).collect();
                next.push(f);
                next.sort_unstable();
                if copies.contains(&next) {
                    transitions += 1;
                    if reached.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(ReachabilitySet {
        start: g.clone(),
        reached,
        transitions,
        total_copies: copies.len(),
    })
}

/// Number of labeled copies `n!/|A_G|`, from a brute-force automorphism count.
pub fn labeled_copy_count(g: &LabeledGraph) -> Result<u64> {
    let a = brute_automorphisms(g)?.len() as u64;
    let f: u64 = factorial(g.len()).try_into().expect("small factorial");
    Ok(f / a)
}

/// Adjacency as a bitmask over the pairs `i < j`.
fn code(n: usize, adj: &[u32], perm: &[u32]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i] as usize] >> perm[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

fn canonical(n: usize, adj: &[u32], perms: &[Vec<u32>]) -> u64 {
    perms.iter().map(|p| code(n, adj, p)).min().unwrap_or(0)
}

/// One graph per isomorphism class on `n` vertices, labeled `1..=n` and
/// unrooted, ordered by edge count then canonical code.
pub fn corpus(n: usize) -> Result<Vec<LabeledGraph>> {
    guard("corpus", n, CORPUS_LIMIT)?;
    // grow vertex by vertex, deduplicating by minimum code over all relabelings
    let mut level: Vec<Vec<u32>> = vec![vec![]];
    for k in 1..=n {
        let perms: Vec<Vec<u32>> = all_images(k).collect();
        let mut seen: BTreeSet<(u32, u64)> = BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nb in 0u32..1 << (k - 1) {
                let mut a = adj.clone();
                for (v, row) in a.iter_mut().enumerate() {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                a.push(nb);
                let c = canonical(k, &a, &perms);
                if seen.insert((c.count_ones(), c)) {
                    next.push((c.count_ones(), c, a));
                }
            }
        }
        next.sort_by_key(|&(e, c, _)| (e, c));
        level = next.into_iter().map(|(_, _, a)| a).collect();
    }
    let domain = Domain::numbered(n);
    Ok(level
        .iter()
        .map(|adj| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| adj[i] >> j & 1 == 1)
                .collect();
            LabeledGraph::from_index_edges(&domain, &edges, None)
        })
        .collect())
}

/// Every corpus graph on `n` vertices with every choice of root.
pub fn rooted_corpus(n: usize) -> Result<Vec<LabeledGraph>> {
    Ok(corpus(n)?
        .into_iter()
        .flat_map(|g| (0..n).map(move |r| g.with_root_index(Some(r))))
        .collect())
}
