//! Labeled simple graphs and the embeddings `G_σ`.

mod iso;
mod json;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permgroup::{compose, same_domain, Domain, Label, PermGroup, Permutation};

pub(crate) use iso::{automorphism_generators, find_isos};
pub use json::GraphJson;

/// Adjacency rows are `u128` bitsets.
pub const MAX_VERTICES: usize = 128;

/// An undirected edge between two distinct labels, stored with `a < b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    a: Label,
    b: Label,
}

impl Edge {
    pub fn new(a: Label, b: Label) -> Result<Edge> {
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        Ok(if a < b {
            Edge { a, b }
        } else {
            Edge { a: b, b: a }
        })
    }

    pub fn a(&self) -> &Label {
        &self.a
    }

    pub fn b(&self) -> &Label {
        &self.b
    }
}

fn is_short(l: &Label) -> bool {
    matches!(l, Label::Atom(s) if s.chars().count() == 1)
}

/// `13` when both endpoints are one-character atoms, `1.1,2.1` otherwise.
impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if is_short(&self.a) && is_short(&self.b) {
            write!(f, "{}{}", self.a, self.b)
        } else {
            write!(f, "{},{}", self.a, self.b)
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Edge> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once(',') {
            return Edge::new(a.trim().parse()?, b.trim().parse()?);
        }
        let chars: Vec<char> = s.chars().collect();
        if chars.len() == 2 {
            return Edge::new(
                Label::atom(chars[0].to_string())?,
                Label::atom(chars[1].to_string())?,
            );
        }
        Err(Error::Format(format!(
            "edge `{s}`: expected two one-character labels or `a,b`"
        )))
    }
}

/// A simple graph on a label domain, with an optional root label.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    domain: Arc<Domain>,
    adj: Vec<u128>,
    root: Option<usize>,
}

impl LabeledGraph {
    pub fn new(
        domain: &Arc<Domain>,
        edges: impl IntoIterator<Item = Edge>,
        root: Option<&Label>,
    ) -> Result<LabeledGraph> {
        guard(domain.len())?;
        let mut g = LabeledGraph {
            domain: domain.clone(),
            adj: vec![0; domain.len()],
            root: root.map(|r| domain.require(r)).transpose()?,
        };
        for e in edges {
            let (i, j) = g.endpoints(&e)?;
            if g.has_edge_at(i, j) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
            g.set(i, j, true);
        }
        Ok(g)
    }

    /// Graph on the atoms `1..=n` with edges given as label pairs.
    pub fn numbered(n: usize, edges: &[(u32, u32)], root: Option<u32>) -> Result<LabeledGraph> {
        let edges = edges
            .iter()
            .map(|&(a, b)| Edge::new(a.into(), b.into()))
            .collect::<Result<Vec<_>>>()?;
        LabeledGraph::new(&Domain::numbered(n), edges, root.map(Label::from).as_ref())
    }

    pub(crate) fn from_index_edges(
        domain: &Arc<Domain>,
        edges: &[(usize, usize)],
        root: Option<usize>,
    ) -> LabeledGraph {
        let mut g = LabeledGraph {
            domain: domain.clone(),
            adj: vec![0; domain.len()],
            root,
        };
        for &(i, j) in edges {
            g.set(i, j, true);
        }
        g
    }

    fn endpoints(&self, e: &Edge) -> Result<(usize, usize)> {
        Ok((self.domain.require(&e.a)?, self.domain.require(&e.b)?))
    }

    fn set(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.adj[i] |= 1 << j;
            self.adj[j] |= 1 << i;
        } else {
            self.adj[i] &= !(1 << j);
            self.adj[j] &= !(1 << i);
        }
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        self.domain.labels()
    }

    pub fn label(&self, i: usize) -> &Label {
        self.domain.label(i)
    }

    pub fn index_of(&self, label: &Label) -> Result<usize> {
        self.domain.require(label)
    }

    pub fn root(&self) -> Option<&Label> {
        self.root.map(|r| self.domain.label(r))
    }

    pub fn root_index(&self) -> Option<usize> {
        self.root
    }

    pub fn require_root(&self) -> Result<usize> {
        self.root.ok_or(Error::Unrooted)
    }

    pub fn with_root(&self, root: &Label) -> Result<LabeledGraph> {
        let mut g = self.clone();
        g.root = Some(self.domain.require(root)?);
        Ok(g)
    }

    pub(crate) fn with_root_index(&self, root: Option<usize>) -> LabeledGraph {
        let mut g = self.clone();
        g.root = root;
        g
    }

    pub fn unrooted(&self) -> LabeledGraph {
        self.with_root_index(None)
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> u128 {
        self.adj[i]
    }

    #[inline]
    pub fn has_edge_at(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn contains_edge(&self, e: &Edge) -> Result<bool> {
        let (i, j) = self.endpoints(e)?;
        Ok(self.has_edge_at(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Index pairs `(i, j)` with `i < j`, in index order.
    pub fn index_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge_at(i, j))
            .collect()
    }

    /// Index pairs `(i, j)` with `i < j` that are not edges.
    pub fn index_non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge_at(i, j))
            .collect()
    }

    pub(crate) fn edge_at(&self, i: usize, j: usize) -> Edge {
        Edge::new(self.label(i).clone(), self.label(j).clone()).expect("distinct endpoints")
    }

    /// The edge labels `L_G`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .index_edges()
            .into_iter()
            .map(|(i, j)| self.edge_at(i, j))
            .collect();
        edges.sort();
        edges
    }

    pub fn degree_at(&self, i: usize) -> usize {
        self.adj[i].count_ones() as usize
    }

    pub fn degree(&self, label: &Label) -> Result<usize> {
        Ok(self.degree_at(self.domain.require(label)?))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.len()).map(|i| self.degree_at(i)).collect();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.len())
            .map(|i| self.degree_at(i))
            .min()
            .unwrap_or(0)
    }

    pub fn leaf_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.degree_at(i) == 1)
            .collect()
    }

    pub fn isolated_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.degree_at(i) == 0)
            .collect()
    }

    /// Labels of degree-one vertices, sorted.
    pub fn leaves(&self) -> Vec<Label> {
        self.sorted_labels(self.leaf_indices())
    }

    /// Labels of degree-zero vertices, sorted.
    pub fn isolated(&self) -> Vec<Label> {
        self.sorted_labels(self.isolated_indices())
    }

    fn sorted_labels(&self, idx: Vec<usize>) -> Vec<Label> {
        let mut v: Vec<Label> = idx.into_iter().map(|i| self.label(i).clone()).collect();
        v.sort();
        v
    }

    /// `G_σ`: the graph on the same labels in which `ij` is an edge iff
    /// `σ(i)σ(j)` is an edge of `G`. The root label is carried unchanged.
    pub fn embed(&self, sigma: &Permutation) -> Result<LabeledGraph> {
        if !same_domain(&self.domain, sigma.domain()) {
            return Err(Error::DomainMismatch("embedding permutation".into()));
        }
        Ok(self.embed_raw(sigma.images()))
    }

    pub(crate) fn embed_raw(&self, sigma: &[u32]) -> LabeledGraph {
        let n = self.len();
        let mut adj = vec![0u128; n];
        for (i, row) in adj.iter_mut().enumerate() {
            let si = sigma[i] as usize;
            for (j, &sj) in sigma.iter().enumerate() {
                if self.has_edge_at(si, sj as usize) {
                    *row |= 1 << j;
                }
            }
        }
        LabeledGraph {
            domain: self.domain.clone(),
            adj,
            root: self.root,
        }
    }

    pub fn add_edge(&self, e: &Edge) -> Result<LabeledGraph> {
        let (i, j) = self.endpoints(e)?;
        if self.has_edge_at(i, j) {
            return Err(Error::DuplicateEdge(e.to_string()));
        }
        let mut g = self.clone();
        g.set(i, j, true);
        Ok(g)
    }

    pub fn remove_edge(&self, e: &Edge) -> Result<LabeledGraph> {
        let (i, j) = self.endpoints(e)?;
        if !self.has_edge_at(i, j) {
            return Err(Error::MissingEdge(e.to_string()));
        }
        let mut g = self.clone();
        g.set(i, j, false);
        Ok(g)
    }

    /// `G − rs + kl` on indices; the caller guarantees `rs ∈ L`, `kl ∉ L`.
    pub(crate) fn replaced(&self, rs: (usize, usize), kl: (usize, usize)) -> LabeledGraph {
        let mut g = self.clone();
        g.set(rs.0, rs.1, false);
        g.set(kl.0, kl.1, true);
        g
    }

    /// This graph plus an isolated vertex labeled `label`.
    pub fn with_isolated(&self, label: Label) -> Result<LabeledGraph> {
        guard(self.len() + 1)?;
        if self.domain.contains(&label) {
            return Err(Error::LabelCollision(label.to_string()));
        }
        let domain = self.domain.extended(label)?;
        let mut adj = self.adj.clone();
        adj.push(0);
        Ok(LabeledGraph {
            domain,
            adj,
            root: self.root,
        })
    }

    /// `g ∪ h` on the concatenated label sets. The root of `g` is kept, or
    /// the root of `h` when `g` is unrooted.
    pub fn disjoint_union(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
        if let Some(l) = h.labels().iter().find(|l| g.domain.contains(l)) {
            return Err(Error::LabelCollision(l.to_string()));
        }
        let n = g.len();
        guard(n + h.len())?;
        let mut labels = g.labels().to_vec();
        labels.extend_from_slice(h.labels());
        let domain = Domain::new(labels)?;
        let mut adj = g.adj.clone();
        adj.extend(h.adj.iter().map(|r| r << n));
        Ok(LabeledGraph {
            domain,
            adj,
            root: g.root.or(h.root.map(|r| r + n)),
        })
    }

    /// All labeled graphs on the same domain are compared by edge set.
    pub fn same_edges(&self, other: &LabeledGraph) -> bool {
        self.adj == other.adj && same_domain(&self.domain, &other.domain)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels().iter().enumerate() {
            if Some(i) == self.root {
                out.push_str(&format!("  \"{l}\" [shape=doublecircle];\n"));
            } else {
                out.push_str(&format!("  \"{l}\";\n"));
            }
        }
        for e in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", e.a, e.b));
        }
        out.push_str("}\n");
        out
    }
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeGuard {
            what: "graph",
            size: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("labels", &self.labels())
            .field("edges", &self.edges())
            .field("root", &self.root())
            .finish()
    }
}

/// `A_G = {σ : G_σ = G}`.
pub fn automorphism_group(g: &LabeledGraph) -> PermGroup {
    let gens = automorphism_generators(g)
        .into_iter()
        .map(|p| Permutation::from_images(g.domain(), p).expect("search yields bijections"))
        .collect();
    PermGroup::from_generators(g.domain(), gens).expect("same domain")
}

/// Unlabeled isomorphism.
pub fn is_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    a.len() == b.len()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && !find_isos(a, b, &[], 1).is_empty()
}

/// Some `σ` with `g_σ = h`, on graphs with the same domain.
pub fn label_isomorphism(h: &LabeledGraph, g: &LabeledGraph) -> Result<Option<Permutation>> {
    if !same_domain(h.domain(), g.domain()) {
        return Err(Error::DomainMismatch("label isomorphism".into()));
    }
    if h.edge_count() != g.edge_count() || h.degree_sequence() != g.degree_sequence() {
        return Ok(None);
    }
    Ok(find_isos(h, g, &[], 1)
        .pop()
        .map(|p| Permutation::from_images(g.domain(), p).expect("search yields bijections")))
}

/// Every `σ` with `g_σ = h`: empty, or the coset `{a∘σ₀ : a ∈ A_g}`.
pub fn label_isomorphisms(h: &LabeledGraph, g: &LabeledGraph) -> Result<Vec<Permutation>> {
    let Some(s0) = label_isomorphism(h, g)? else {
        return Ok(Vec::new());
    };
    let mut all: Vec<Permutation> = automorphism_group(g)
        .elements()
        .iter()
        .map(|a| compose(a, &s0).expect("same domain"))
        .collect();
    all.sort();
    Ok(all)
}
