//! Individualization–refinement search for label maps between graphs.
//!
//! Both graphs are coloured jointly, so that colour ids mean the same thing
//! on either side. A search node fails as soon as the colour histograms of
//! the two sides differ.

use std::collections::BTreeMap;

use super::LabeledGraph;

type Colors = Vec<u32>;

fn class_count(c: &[u32]) -> usize {
    c.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn histogram(c: &[u32], k: usize) -> Vec<u32> {
    let mut h = vec![0u32; k];
    for &x in c {
        h[x as usize] += 1;
    }
    h
}

/// Refines `ca`, `cb` to the coarsest equitable colouring finer than both,
/// using neighbour-colour multisets. Returns `false` if the histograms of
/// the two sides disagree at any round.
fn refine(a: &LabeledGraph, b: &LabeledGraph, ca: &mut Colors, cb: &mut Colors) -> bool {
    let mut k = class_count(ca).max(class_count(cb));
    loop {
        if histogram(ca, k) != histogram(cb, k) {
            return false;
        }
        let sig = |g: &LabeledGraph, c: &Colors, v: usize| {
            let mut row = g.row(v);
            let mut nb = Vec::with_capacity(row.count_ones() as usize);
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                nb.push(c[w]);
                row &= row - 1;
            }
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.len()).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..b.len()).map(|v| sig(b, cb, v)).collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            ids.insert(s, 0);
        }
        for (n, id) in ids.values_mut().enumerate() {
            *id = n as u32;
        }
        let next = ids.len();
        *ca = sa.iter().map(|s| ids[s]).collect();
        *cb = sb.iter().map(|s| ids[s]).collect();
        if next == k {
            return histogram(ca, k) == histogram(cb, k);
        }
        k = next;
    }
}

/// The smallest non-singleton colour class (ties by colour id).
fn target_cell(c: &[u32]) -> Option<u32> {
    let h = histogram(c, class_count(c));
    h.iter()
        .enumerate()
        .filter(|(_, &n)| n > 1)
        .min_by_key(|(i, &n)| (n, *i))
        .map(|(i, _)| i as u32)
}

fn individualize(c: &mut Colors, v: usize) {
    c[v] = class_count(c) as u32;
}

fn is_iso(h: &LabeledGraph, g: &LabeledGraph, phi: &[u32]) -> bool {
    (0..h.len()).all(|v| {
        let mut row = h.row(v);
        let mut image = 0u128;
        while row != 0 {
            let w = row.trailing_zeros() as usize;
            image |= 1 << phi[w];
            row &= row - 1;
        }
        image == g.row(phi[v] as usize)
    })
}

fn search(
    h: &LabeledGraph,
    g: &LabeledGraph,
    mut ch: Colors,
    mut cg: Colors,
    limit: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if !refine(h, g, &mut ch, &mut cg) {
        return;
    }
    match target_cell(&ch) {
        None => {
            let mut at = vec![0u32; cg.len()];
            for (u, &c) in cg.iter().enumerate() {
                at[c as usize] = u as u32;
            }
            let phi: Vec<u32> = ch.iter().map(|&c| at[c as usize]).collect();
            if is_iso(h, g, &phi) {
                out.push(phi);
            }
        }
        Some(cell) => {
            let v = ch.iter().position(|&c| c == cell).expect("nonempty cell");
            for u in (0..cg.len()).filter(|&u| cg[u] == cell) {
                let (mut nh, mut ng) = (ch.clone(), cg.clone());
                individualize(&mut nh, v);
                individualize(&mut ng, u);
                search(h, g, nh, ng, limit, out);
                if out.len() >= limit {
                    return;
                }
            }
        }
    }
}

/// Up to `limit` maps `φ` (as image arrays) with `vw ∈ E(h) ⇔ φ(v)φ(w) ∈ E(g)`
/// and `φ(v) = u` for each `(v, u)` in `fixed`. Such a `φ` satisfies
/// `g_φ = h`.
pub(crate) fn find_isos(
    h: &LabeledGraph,
    g: &LabeledGraph,
    fixed: &[(usize, usize)],
    limit: usize,
) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if h.len() != g.len() || limit == 0 {
        return out;
    }
    let (mut ch, mut cg) = (vec![0; h.len()], vec![0; g.len()]);
    for &(v, u) in fixed {
        individualize(&mut ch, v);
        individualize(&mut cg, u);
    }
    search(h, g, ch, cg, limit, &mut out);
    out
}

fn orbit_partition(n: usize, gens: &[Vec<u32>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in gens {
        for (x, &gx) in g.iter().enumerate().take(n) {
            let (a, b) = (find(&mut parent, x), find(&mut parent, gx as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// Generators of the automorphism group, one stabilizer level at a time
/// along the leftmost path of the search tree, deepest level first.
pub(crate) fn automorphism_generators(g: &LabeledGraph) -> Vec<Vec<u32>> {
    let n = g.len();
    let mut c = vec![0u32; n];
    let mut twin = c.clone();
    refine(g, g, &mut c, &mut twin);
    let mut path: Vec<(usize, Colors)> = Vec::new();
    while let Some(cell) = target_cell(&c) {
        let v = c.iter().position(|&x| x == cell).expect("nonempty cell");
        path.push((v, c.clone()));
        individualize(&mut c, v);
        let mut twin = c.clone();
        refine(g, g, &mut c, &mut twin);
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for (v, c) in path.iter().rev() {
        let cell = c[*v];
        let mut orbit = orbit_partition(n, &gens);
        for u in (0..n).filter(|&u| c[u] == cell && u != *v) {
            if orbit[u] == orbit[*v] {
                continue;
            }
            let (mut ch, mut cg) = (c.clone(), c.clone());
            individualize(&mut ch, *v);
            individualize(&mut cg, u);
            let mut found = Vec::new();
            search(g, g, ch, cg, 1, &mut found);
            if let Some(phi) = found.pop() {
                gens.push(phi);
                orbit = orbit_partition(n, &gens);
            }
        }
    }
    gens
}
