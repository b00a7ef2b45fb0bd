//! Feasible edge-replacements and the groups they generate.
//!
//! Every coset `Fer_G(e→e')` is `{a∘σ₀ : a ∈ A_G}` for one representative
//! `σ₀`, so the groups are built from representatives and automorphism
//! generators rather than from the (possibly huge) explicit union `E_G`:
//!
//! * `Fer(G) = ⟨A-gens, σ₀(r) for each r⟩`;
//! * `Fer^i(G) = ⟨Stab_A(i)-gens, c_r∘σ₀(r)⟩` where `c_r ∈ A` maps
//!   `σ₀(r)(i)` back to `i` (replacements with no such `c_r` contribute no
//!   element fixing `i`);
//! * `H_i(G) = ⟨Fer^i-gens, A-gens⟩`.
//!
//! The explicit sets are still available for small graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgraph::{automorphism_group, find_isos, Edge, LabeledGraph};
use crate::permgroup::{compose, Label, PermGroup, Permutation};

/// Cap on `|A_G|·|R_G|` for the explicit sets.
pub const EXPLICIT_LIMIT: usize = 2_000_000;

/// `rs→kl`, or the neutral replacement `∅→∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeReplacement {
    Neutral,
    Replace { removed: Edge, added: Edge },
}

impl EdgeReplacement {
    pub fn new(removed: Edge, added: Edge) -> Result<EdgeReplacement> {
        if removed == added {
            return Err(Error::InfeasibleReplacement(format!(
                "{removed}->{added} (use the neutral replacement)"
            )));
        }
        Ok(EdgeReplacement::Replace { removed, added })
    }

    pub fn is_neutral(&self) -> bool {
        matches!(self, EdgeReplacement::Neutral)
    }

    /// `G − removed + added`; errors unless `removed ∈ L_G` and `added ∉ L_G`.
    pub fn apply(&self, g: &LabeledGraph) -> Result<LabeledGraph> {
        match self {
            EdgeReplacement::Neutral => Ok(g.clone()),
            EdgeReplacement::Replace { removed, added } => {
                let bad = || Error::InfeasibleReplacement(self.to_string());
                g.remove_edge(removed)
                    .map_err(|_| bad())?
                    .add_edge(added)
                    .map_err(|_| bad())
            }
        }
    }

    /// ASCII form, with `0->0` for the neutral replacement.
    pub fn to_ascii(&self) -> String {
        match self {
            EdgeReplacement::Neutral => "0->0".into(),
            r => r.to_string(),
        }
    }
}

impl fmt::Display for EdgeReplacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeReplacement::Neutral => f.write_str("∅->∅"),
            EdgeReplacement::Replace { removed, added } => write!(f, "{removed}->{added}"),
        }
    }
}

impl FromStr for EdgeReplacement {
    type Err = Error;

    fn from_str(s: &str) -> Result<EdgeReplacement> {
        let (a, b) = s
            .split_once("->")
            .ok_or_else(|| Error::Format(format!("replacement `{s}`: expected `rs->kl`")))?;
        match (a.trim(), b.trim()) {
            ("∅", "∅") | ("0", "0") => Ok(EdgeReplacement::Neutral),
            (a, b) => EdgeReplacement::new(a.parse()?, b.parse()?),
        }
    }
}

/// `Fer_G(e→e')` with its members sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FerCoset {
    pub replacement: EdgeReplacement,
    pub perms: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FerCosetJson {
    pub replacement: String,
    pub perms: Vec<String>,
}

impl FerCoset {
    pub fn to_json(&self) -> FerCosetJson {
        FerCosetJson {
            replacement: self.replacement.to_string(),
            perms: self.perms.iter().map(|p| p.to_cycle_string()).collect(),
        }
    }
}

/// The feasible replacements of one graph, each with a coset representative,
/// together with its automorphism group.
#[derive(Clone, Debug)]
pub struct FerAnalysis {
    graph: LabeledGraph,
    aut: PermGroup,
    reps: Vec<(EdgeReplacement, Permutation)>,
}

impl FerAnalysis {
    pub fn new(g: &LabeledGraph) -> FerAnalysis {
        let aut = automorphism_group(g);
        let mut reps = vec![(EdgeReplacement::Neutral, Permutation::identity(g.domain()))];
        let base_degrees = g.degree_sequence();
        for rs in g.index_edges() {
            for kl in g.index_non_edges() {
                if let Some(sigma) = feasible_at(g, &base_degrees, rs, kl) {
                    let r = EdgeReplacement::Replace {
                        removed: g.edge_at(rs.0, rs.1),
                        added: g.edge_at(kl.0, kl.1),
                    };
                    reps.push((r, sigma));
                }
            }
        }
        reps.sort_by(|a, b| a.0.cmp(&b.0));
        FerAnalysis {
            graph: g.clone(),
            aut,
            reps,
        }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn automorphisms(&self) -> &PermGroup {
        &self.aut
    }

    /// `R_G`, neutral first.
    pub fn replacements(&self) -> Vec<EdgeReplacement> {
        self.reps.iter().map(|(r, _)| r.clone()).collect()
    }

    /// One member of each coset, in the order of [`replacements`](Self::replacements).
    pub fn representatives(&self) -> &[(EdgeReplacement, Permutation)] {
        &self.reps
    }

    fn explicit_guard(&self) -> Result<()> {
        let a: usize = self.aut.order().try_into().unwrap_or(usize::MAX);
        let size = a.saturating_mul(self.reps.len());
        if size > EXPLICIT_LIMIT {
            return Err(Error::SizeGuard {
                what: "explicit generating set",
                size,
                limit: EXPLICIT_LIMIT,
            });
        }
        Ok(())
    }

    fn coset_of(&self, sigma: &Permutation) -> Vec<Permutation> {
        let mut perms: Vec<Permutation> = self
            .aut
            .elements()
            .iter()
            .map(|a| compose(a, sigma).expect("same domain"))
            .collect();
        perms.sort();
        perms
    }

    pub fn coset(&self, r: &EdgeReplacement) -> Result<FerCoset> {
        let (_, sigma) = self
            .reps
            .iter()
            .find(|(q, _)| q == r)
            .ok_or_else(|| Error::InfeasibleReplacement(r.to_string()))?;
        self.explicit_guard()?;
        Ok(FerCoset {
            replacement: r.clone(),
            perms: self.coset_of(sigma),
        })
    }

    pub fn cosets(&self) -> Result<Vec<FerCoset>> {
        self.explicit_guard()?;
        Ok(self
            .reps
            .iter()
            .map(|(r, s)| FerCoset {
                replacement: r.clone(),
                perms: self.coset_of(s),
            })
            .collect())
    }

    /// `E_G`, deduplicated and sorted.
    pub fn generating_set(&self) -> Result<Vec<Permutation>> {
        let all: BTreeSet<Permutation> = self.cosets()?.into_iter().flat_map(|c| c.perms).collect();
        Ok(all.into_iter().collect())
    }

    /// `E^i_G`: the members of `E_G` fixing `i`.
    pub fn fixed_generating_set(&self, i: usize) -> Result<Vec<Permutation>> {
        Ok(self
            .generating_set()?
            .into_iter()
            .filter(|p| p.fixes(i))
            .collect())
    }

    pub fn fer_group(&self) -> PermGroup {
        let mut gens = self.aut.generators().to_vec();
        gens.extend(
            self.reps
                .iter()
                .filter(|(r, _)| !r.is_neutral())
                .map(|(_, s)| s.clone()),
        );
        PermGroup::from_generators(self.graph.domain(), gens).expect("same domain")
    }

    /// Generators of `Fer^i(G)`, each a member of `E^i_G`.
    pub fn fixed_generators(&self, i: usize) -> Vec<Permutation> {
        let mut gens = self.aut.stabilizer(i).generators().to_vec();
        for (r, sigma) in &self.reps {
            if r.is_neutral() {
                continue;
            }
            let j = sigma.apply(i);
            if j == i {
                gens.push(sigma.clone());
            } else if let Some(c) = self.aut.element_mapping(j, i) {
                gens.push(compose(&c, sigma).expect("same domain"));
            }
        }
        gens
    }

    pub fn fixed_group(&self, i: usize) -> PermGroup {
        PermGroup::from_generators(self.graph.domain(), self.fixed_generators(i))
            .expect("same domain")
    }

    /// `H_i(G) = ⟨E^i_G ∪ A_G⟩`.
    pub fn hang_group(&self, i: usize) -> PermGroup {
        let mut gens = self.fixed_generators(i);
        gens.extend(self.aut.generators().iter().cloned());
        PermGroup::from_generators(self.graph.domain(), gens).expect("same domain")
    }
}

/// A label map `σ` with `G_σ = G − rs + kl`, if the replacement is feasible.
fn feasible_at(
    g: &LabeledGraph,
    base_degrees: &[usize],
    rs: (usize, usize),
    kl: (usize, usize),
) -> Option<Permutation> {
    let mut deg: Vec<usize> = (0..g.len()).map(|v| g.degree_at(v)).collect();
    deg[rs.0] -= 1;
    deg[rs.1] -= 1;
    deg[kl.0] += 1;
    deg[kl.1] += 1;
    deg.sort_unstable();
    if deg != base_degrees {
        return None;
    }
    let h = g.replaced(rs, kl);
    find_isos(&h, g, &[], 1)
        .pop()
        .map(|p| Permutation::from_images(g.domain(), p).expect("search yields bijections"))
}

pub fn feasible_replacements(g: &LabeledGraph) -> Vec<EdgeReplacement> {
    FerAnalysis::new(g).replacements()
}

pub fn fer_coset(g: &LabeledGraph, r: &EdgeReplacement) -> Result<FerCoset> {
    FerAnalysis::new(g).coset(r)
}

pub fn generating_set(g: &LabeledGraph) -> Result<Vec<Permutation>> {
    FerAnalysis::new(g).generating_set()
}

pub fn fer_group(g: &LabeledGraph) -> PermGroup {
    FerAnalysis::new(g).fer_group()
}

pub fn fixed_generating_set(g: &LabeledGraph, i: &Label) -> Result<Vec<Permutation>> {
    let i = g.index_of(i)?;
    FerAnalysis::new(g).fixed_generating_set(i)
}

pub fn fer_fixed_group(g: &LabeledGraph, i: &Label) -> Result<PermGroup> {
    let i = g.index_of(i)?;
    Ok(FerAnalysis::new(g).fixed_group(i))
}

pub fn hang_group(g: &LabeledGraph, i: &Label) -> Result<PermGroup> {
    let i = g.index_of(i)?;
    Ok(FerAnalysis::new(g).hang_group(i))
}
