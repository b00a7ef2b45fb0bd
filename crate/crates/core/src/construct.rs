//! Graph constructions: `G*`, `G†`, comb products, gluing, named families
//! and the example graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lgraph::{Edge, LabeledGraph};
use crate::permgroup::{Domain, Label};

/// `G*`: `g` plus an isolated vertex with a fresh label `*k`. The root, if
/// any, is kept.
pub fn star(g: &LabeledGraph) -> Result<LabeledGraph> {
    g.with_isolated(g.domain().fresh_label("*"))
}

/// `G†`: `g` plus a fresh leaf `+k` joined to the root, re-rooted at the
/// new leaf.
pub fn dagger(g: &LabeledGraph) -> Result<LabeledGraph> {
    let root = g.require_root()?;
    let leaf = g.domain().fresh_label("+");
    let grown = g.with_isolated(leaf.clone())?;
    grown
        .add_edge(&Edge::new(g.label(root).clone(), leaf.clone())?)?
        .with_root(&leaf)
}

/// `G ∗ H`: a copy of `h` glued by its root at every vertex of `g`.
///
/// Vertex `(b, x)` is vertex `b` of the copy hanging at `x`. The spine edges
/// are `(r, x)(r, x')` for `xx' ∈ E(G)`, where `r` is the root of `h`. The
/// product is rooted at `(r, i)` when `g` is rooted at `i`, and unrooted
/// otherwise.
pub fn comb_product(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    let r = h.require_root()?;
    let m = h.len();
    if g.len() * m > crate::lgraph::MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "comb product",
            size: g.len() * m,
            limit: crate::lgraph::MAX_VERTICES,
        });
    }
    let domain = Domain::product(h.domain(), g.domain());
    let at = |b: usize, x: usize| x * m + b;
    let mut edges = Vec::with_capacity(g.edge_count() + g.len() * h.edge_count());
    for (x, y) in g.index_edges() {
        edges.push((at(r, x), at(r, y)));
    }
    for x in 0..g.len() {
        for (b, c) in h.index_edges() {
            edges.push((at(b, x), at(c, x)));
        }
    }
    let root = g.root_index().map(|i| at(r, i));
    Ok(LabeledGraph::from_index_edges(&domain, &edges, root))
}

/// `(h1 ∪ j1) + uv`, rooted like `h1`.
pub fn glue(h1: &LabeledGraph, j1: &LabeledGraph, u: &Label, v: &Label) -> Result<LabeledGraph> {
    h1.index_of(u)?;
    j1.index_of(v)?;
    let union = LabeledGraph::disjoint_union(h1, j1)?;
    let glued = union.add_edge(&Edge::new(u.clone(), v.clone())?)?;
    Ok(glued.with_root_index(h1.root_index()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Complete,
    AFamily,
    BFamily,
    Cube,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Complete,
        Family::AFamily,
        Family::BFamily,
        Family::Cube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Complete => "complete",
            Family::AFamily => "a_family",
            Family::BFamily => "b_family",
            Family::Cube => "cube",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

/// A named family member. Roots follow a fixed policy: paths and complete
/// graphs at label `1`, `A_n` by the comb convention, `B_n` at the new leaf;
/// the cube is unrooted and ignores `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

pub fn family(spec: FamilySpec) -> Result<LabeledGraph> {
    let n = spec.n;
    let at_least = |k: usize| {
        if n < k {
            Err(Error::InvalidSize(format!(
                "{} needs n ≥ {k}, got {n}",
                spec.family
            )))
        } else {
            Ok(())
        }
    };
    match spec.family {
        Family::Path => {
            at_least(1)?;
            path(n)
        }
        Family::Complete => {
            at_least(1)?;
            complete(n)
        }
        Family::AFamily => {
            at_least(1)?;
            a_family(n)
        }
        Family::BFamily => {
            at_least(1)?;
            b_family(n)
        }
        Family::Cube => Ok(cube()),
    }
}

fn guard_n(n: usize) -> Result<()> {
    if n > crate::lgraph::MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "family",
            size: n,
            limit: crate::lgraph::MAX_VERTICES,
        });
    }
    Ok(())
}

/// `P_n` on `1..=n` in path order, rooted at `1`.
pub fn path(n: usize) -> Result<LabeledGraph> {
    guard_n(n)?;
    let edges: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
    Ok(LabeledGraph::from_index_edges(
        &Domain::numbered(n),
        &edges,
        (n > 0).then_some(0),
    ))
}

/// `K_n` on `1..=n`, rooted at `1`.
pub fn complete(n: usize) -> Result<LabeledGraph> {
    guard_n(n)?;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(LabeledGraph::from_index_edges(
        &Domain::numbered(n),
        &edges,
        (n > 0).then_some(0),
    ))
}

/// `A_1 = P_2` and `A_n = A_{n−1} ∗ P_2`, with `P_2` rooted at `1`.
pub fn a_family(n: usize) -> Result<LabeledGraph> {
    if n >= 8 {
        return Err(Error::SizeGuard {
            what: "a_family",
            size: 1 << n.min(62),
            limit: crate::lgraph::MAX_VERTICES,
        });
    }
    let p2 = path(2)?;
    let mut g = p2.clone();
    for _ in 1..n {
        g = comb_product(&g, &p2)?;
    }
    Ok(g)
}

/// `B_n = A_n†`, rooted at the new leaf.
pub fn b_family(n: usize) -> Result<LabeledGraph> {
    dagger(&a_family(n)?)
}

/// The 3-cube on `1..=8`, where label `k` is the bit vector `k − 1`.
pub fn cube() -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
        .filter(|(a, b)| (a ^ b).count_ones() == 1)
        .collect();
    LabeledGraph::from_index_edges(&Domain::numbered(8), &edges, None)
}

pub const EXAMPLES: [&str; 5] = [
    "fig1",
    "hang_symm_8",
    "counterexample_G",
    "counterexample_H",
    "counterexample_GH_labeled",
];

pub fn paper_example(name: &str) -> Result<LabeledGraph> {
    match name {
        "fig1" => LabeledGraph::numbered(5, &[(1, 3), (2, 3), (3, 4), (4, 5)], None),
        "hang_symm_8" => LabeledGraph::numbered(
            8,
            &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7), (4, 8)],
            Some(1),
        ),
        "counterexample_G" => path(3),
        // the triangle 1-2-3 with pendant 4 at 2, hung from the degree-2 vertex 1
        "counterexample_H" => LabeledGraph::numbered(4, &[(1, 2), (1, 3), (2, 3), (2, 4)], Some(1)),
        "counterexample_GH_labeled" => {
            let mut edges = Vec::new();
            for c in [0, 4, 8] {
                edges.extend([
                    (c + 1, c + 2),
                    (c + 1, c + 3),
                    (c + 2, c + 3),
                    (c + 2, c + 4),
                ]);
            }
            edges.extend([(1, 5), (5, 9)]);
            LabeledGraph::numbered(12, &edges, Some(1))
        }
        _ => Err(Error::UnknownName(name.into())),
    }
}
