use std::sync::Arc;

use super::domain::Domain;
use super::group::PermGroup;
use super::perm::Permutation;

/// Imprimitive wreath product `s ≀ t` acting on `B × X`, where `s` acts on
/// `B` and `t` on `X`. The product domain is ordered x-major.
///
/// Generated by one copy of each generator of `s` acting inside every block
/// `B × {x}`, together with `t` permuting the blocks.
pub fn wreath_product(s: &PermGroup, t: &PermGroup) -> PermGroup {
    let domain = Domain::product(s.domain(), t.domain());
    let gens = wreath_generators(s, t, &domain);
    PermGroup::from_generators(&domain, gens).expect("generators built on the product domain")
}

pub(crate) fn wreath_generators(
    s: &PermGroup,
    t: &PermGroup,
    domain: &Arc<Domain>,
) -> Vec<Permutation> {
    let m = s.degree();
    let n = t.degree();
    let mut gens = Vec::new();
    for x in 0..n {
        for g in s.generators().iter().filter(|g| !g.is_identity()) {
            gens.push(block_copy(g, x, m, n, domain));
        }
    }
    for g in t.generators().iter().filter(|g| !g.is_identity()) {
        gens.push(block_shift(g, m, domain));
    }
    gens
}

/// `s` acting on the block `B × {x}` and trivially elsewhere.
pub(crate) fn block_copy(
    s: &Permutation,
    x: usize,
    m: usize,
    n: usize,
    domain: &Arc<Domain>,
) -> Permutation {
    let mut images: Vec<u32> = (0..(m * n) as u32).collect();
    for b in 0..m {
        images[x * m + b] = (x * m + s.apply(b)) as u32;
    }
    Permutation::from_images_unchecked(domain, images)
}

/// `(b, x) ↦ (b, t(x))`.
pub(crate) fn block_shift(t: &Permutation, m: usize, domain: &Arc<Domain>) -> Permutation {
    let n = t.len();
    let mut images = vec![0u32; m * n];
    for x in 0..n {
        for b in 0..m {
            images[x * m + b] = (t.apply(x) * m + b) as u32;
        }
    }
    Permutation::from_images_unchecked(domain, images)
}
