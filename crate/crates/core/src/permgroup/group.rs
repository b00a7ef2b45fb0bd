use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use super::domain::{same_domain, Domain};
use super::perm::{compose_raw, inverse_raw, Permutation};
use crate::error::{Error, Result};

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Every strong generator fixing the earlier base points.
    gens: Vec<Vec<u32>>,
    /// `trans[x] = u` with `u(base) = x`, for `x` in the basic orbit.
    trans: Vec<Option<Vec<u32>>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Level {
        let mut trans = vec![None; n];
        trans[base] = Some((0..n as u32).collect());
        Level {
            base,
            gens: Vec::new(),
            trans,
            orbit: vec![base],
        }
    }
}

/// A permutation group given by generators, with a base and strong
/// generating set built eagerly by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct PermGroup {
    domain: Arc<Domain>,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(domain: &Arc<Domain>) -> PermGroup {
        PermGroup {
            domain: domain.clone(),
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    pub fn symmetric(domain: &Arc<Domain>) -> PermGroup {
        let n = domain.len() as u32;
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap: Vec<u32> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(Permutation::from_images_unchecked(domain, swap));
        }
        if n >= 3 {
            let cycle: Vec<u32> = (0..n).map(|k| (k + 1) % n).collect();
            gens.push(Permutation::from_images_unchecked(domain, cycle));
        }
        PermGroup::from_generators(domain, gens).expect("same domain")
    }

    pub fn from_generators(domain: &Arc<Domain>, gens: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::with_base(domain, gens, &[])
    }

    /// Like [`from_generators`](Self::from_generators), with the base
    /// starting at the given points (in order).
    pub fn with_base(
        domain: &Arc<Domain>,
        gens: Vec<Permutation>,
        base_prefix: &[usize],
    ) -> Result<PermGroup> {
        for g in &gens {
            if !same_domain(domain, g.domain()) {
                return Err(Error::DomainMismatch(
                    "generators live on different domains".into(),
                ));
            }
        }
        let n = domain.len();
        let mut group = PermGroup {
            domain: domain.clone(),
            generators: gens,
            levels: Vec::new(),
        };
        let mut seen = HashSet::new();
        for &b in base_prefix {
            if b < n && seen.insert(b) {
                group.levels.push(Level::new(b, n));
            }
        }
        let raw: Vec<Vec<u32>> = group
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| g.images().to_vec())
            .collect();
        for g in raw {
            if let Some((level, residue)) = group.sift(0, g) {
                group.add(level, residue);
            }
        }
        Ok(group)
    }

    /// Adds a new strong generator fixing the first `k` base points. It joins
    /// the generating sets of levels `0..=k`.
    fn add(&mut self, k: usize, g: Vec<u32>) {
        if k == self.levels.len() {
            let base = g
                .iter()
                .enumerate()
                .find(|(i, &x)| *i as u32 != x)
                .map(|(i, _)| i)
                .expect("sift residues are never the identity");
            self.levels.push(Level::new(base, self.domain.len()));
        }
        for l in (0..=k).rev() {
            self.levels[l].gens.push(g.clone());
            let work = self.levels[l]
                .orbit
                .iter()
                .map(|&b| compose_raw(&g, self.levels[l].trans[b].as_ref().expect("orbit point")))
                .collect();
            self.extend_orbit(l, work);
        }
    }

    /// Processes candidate transversal elements at level `k`: new orbit
    /// points are recorded, known ones yield Schreier generators that are
    /// sifted into deeper levels.
    fn extend_orbit(&mut self, k: usize, mut work: Vec<Vec<u32>>) {
        while let Some(t) = work.pop() {
            let x = t[self.levels[k].base] as usize;
            match &self.levels[k].trans[x] {
                Some(u) => {
                    let h = compose_raw(&inverse_raw(u), &t);
                    if let Some((level, residue)) = self.sift(k + 1, h) {
                        self.add(level, residue);
                    }
                }
                None => {
                    let level = &mut self.levels[k];
                    for s in &level.gens {
                        work.push(compose_raw(s, &t));
                    }
                    level.trans[x] = Some(t);
                    level.orbit.push(x);
                }
            }
        }
    }

    /// Strips `h` through the chain from level `from`. Returns the level at
    /// which it fell out together with the residue, or `None` if it sifted to
    /// the identity.
    fn sift(&self, from: usize, mut h: Vec<u32>) -> Option<(usize, Vec<u32>)> {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let x = h[level.base] as usize;
            match &level.trans[x] {
                None => return Some((j, h)),
                Some(u) => h = compose_raw(&inverse_raw(u), &h),
            }
        }
        if h.iter().enumerate().all(|(i, &x)| i as u32 == x) {
            None
        } else {
            Some((self.levels.len(), h))
        }
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.domain.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .first()
            .map(|l| {
                l.gens
                    .iter()
                    .map(|g| Permutation::from_images_unchecked(&self.domain, g.clone()))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Exact group order: the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if !same_domain(&self.domain, p.domain()) {
            return Err(Error::DomainMismatch("membership test".into()));
        }
        Ok(self.sift(0, p.images().to_vec()).is_none())
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.iter().all(|l| l.orbit.len() == 1)
    }

    /// Orbit partition under the generators, each cell sorted by index and
    /// cells ordered by their smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.domain.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_of = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if cell_of[r] == usize::MAX {
                cell_of[r] = cells.len();
                cells.push(Vec::new());
            }
            cells[cell_of[r]].push(x);
        }
        cells
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|c| c.contains(&point))
            .unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// True iff this is the full symmetric group on its domain.
    pub fn is_symmetric(&self) -> bool {
        self.order() == factorial(self.domain.len())
    }

    /// Some group element mapping `from` to `to`, if one exists.
    pub fn element_mapping(&self, from: usize, to: usize) -> Option<Permutation> {
        let n = self.domain.len();
        let mut word: Vec<Option<Vec<u32>>> = vec![None; n];
        word[from] = Some((0..n as u32).collect());
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            let wx = word[x].clone().expect("visited");
            for g in &self.generators {
                let y = g.apply(x);
                if word[y].is_none() {
                    word[y] = Some(compose_raw(g.images(), &wx));
                    queue.push_back(y);
                }
            }
        }
        word[to]
            .take()
            .map(|w| Permutation::from_images_unchecked(&self.domain, w))
    }

    /// The point stabilizer of `point`.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let chain = PermGroup::with_base(&self.domain, self.generators.clone(), &[point])
            .expect("same domain");
        let gens = chain
            .levels
            .get(1)
            .map(|l| {
                l.gens
                    .iter()
                    .map(|g| Permutation::from_images_unchecked(&self.domain, g.clone()))
                    .collect()
            })
            .unwrap_or_default();
        PermGroup::from_generators(&self.domain, gens).expect("same domain")
    }

    /// Every element, in a deterministic order. Callers bound the order.
    pub fn elements(&self) -> Vec<Permutation> {
        let n = self.domain.len();
        let mut acc: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.trans[x].as_ref().expect("orbit point");
                for rest in &acc {
                    next.push(compose_raw(u, rest));
                }
            }
            acc = next;
        }
        acc.sort();
        acc.into_iter()
            .map(|g| Permutation::from_images_unchecked(&self.domain, g))
            .collect()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same set of elements.
    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.is_subgroup_of(other)?)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            domain: self.domain.labels().iter().map(|l| l.to_string()).collect(),
            generators: self
                .generators
                .iter()
                .map(|g| g.to_cycle_string())
                .collect(),
            order: self.order().to_string(),
        }
    }
}

/// `{"domain":[...], "generators":["(1 4)(2 3)", ...], "order":"82944"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupJson {
    pub domain: Vec<String>,
    pub generators: Vec<String>,
    pub order: String,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
