use std::sync::Arc;

use super::domain::{same_domain, Domain, Label};
use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A partition of a domain into nonempty disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    domain: Arc<Domain>,
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl BlockSystem {
    pub fn new(domain: &Arc<Domain>, cells: Vec<Vec<usize>>) -> Result<BlockSystem> {
        let n = domain.len();
        let mut cell_of = vec![usize::MAX; n];
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        for (k, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::PartitionMismatch("empty cell".into()));
            }
            for &x in cell {
                if x >= n {
                    return Err(Error::PartitionMismatch(format!("point {x} out of range")));
                }
                if cell_of[x] != usize::MAX {
                    return Err(Error::PartitionMismatch(format!(
                        "`{}` lies in two cells",
                        domain.label(x)
                    )));
                }
                cell_of[x] = k;
            }
        }
        if let Some(x) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::PartitionMismatch(format!(
                "`{}` is not covered",
                domain.label(x)
            )));
        }
        Ok(BlockSystem {
            domain: domain.clone(),
            cells,
            cell_of,
        })
    }

    pub fn from_labels(domain: &Arc<Domain>, cells: &[Vec<Label>]) -> Result<BlockSystem> {
        let cells = cells
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| domain.require(l))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BlockSystem::new(domain, cells)
    }

    pub fn singletons(domain: &Arc<Domain>) -> BlockSystem {
        BlockSystem::new(domain, (0..domain.len()).map(|x| vec![x]).collect())
            .expect("singletons partition")
    }

    /// The blocks `{B × {x}}` of a product domain, grouping pair labels by
    /// their `x` component.
    pub fn product_blocks(domain: &Arc<Domain>) -> Result<BlockSystem> {
        let mut keys: Vec<&Label> = Vec::new();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (k, label) in domain.labels().iter().enumerate() {
            let (_, x) = label.as_pair().ok_or_else(|| {
                Error::PartitionMismatch(format!("`{label}` is not a pair label"))
            })?;
            match keys.iter().position(|&key| key == x) {
                Some(c) => cells[c].push(k),
                None => {
                    keys.push(x);
                    cells.push(vec![k]);
                }
            }
        }
        BlockSystem::new(domain, cells)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_labels(&self) -> Vec<Vec<Label>> {
        self.cells
            .iter()
            .map(|c| c.iter().map(|&x| self.domain.label(x).clone()).collect())
            .collect()
    }
}

/// True iff `p` maps every cell onto a cell. `false` certifies that `p`
/// does not respect the partition.
pub fn preserves_partition(p: &Permutation, bs: &BlockSystem) -> Result<bool> {
    if !same_domain(p.domain(), bs.domain()) {
        return Err(Error::DomainMismatch("permutation vs partition".into()));
    }
    Ok(bs.cells.iter().all(|cell| {
        let target = bs.cell_of[p.apply(cell[0])];
        bs.cells[target].len() == cell.len()
            && cell.iter().all(|&x| bs.cell_of[p.apply(x)] == target)
    }))
}

pub fn is_block_system(g: &PermGroup, bs: &BlockSystem) -> Result<bool> {
    if !same_domain(g.domain(), bs.domain()) {
        return Err(Error::PartitionMismatch(
            "partition is on another domain".into(),
        ));
    }
    for s in g.generators() {
        if !preserves_partition(s, bs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The finest block system of a transitive group in which `a` and `b` share
/// a cell (Atkinson's merging procedure).
pub fn minimal_block_system(g: &PermGroup, a: usize, b: usize) -> Result<BlockSystem> {
    let n = g.degree();
    if a >= n || b >= n || a == b {
        return Err(Error::PartitionMismatch(
            "seed must be two distinct points".into(),
        ));
    }
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    parent[a.max(b)] = a.min(b);
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (c, d) = (find(&mut parent, s.apply(x)), find(&mut parent, s.apply(y)));
            if c != d {
                parent[c.max(d)] = c.min(d);
                queue.push((c, d));
            }
        }
    }
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = find(&mut parent, x);
        cells[r].push(x);
    }
    BlockSystem::new(
        g.domain(),
        cells.into_iter().filter(|c| !c.is_empty()).collect(),
    )
}
