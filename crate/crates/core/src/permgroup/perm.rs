use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::domain::{same_domain, Domain, Label};
use crate::error::{Error, Result};

/// A bijection on a [`Domain`]; `images[k]` is the index of the image of
/// label `k`.
#[derive(Clone)]
pub struct Permutation {
    domain: Arc<Domain>,
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(domain: &Arc<Domain>) -> Permutation {
        Permutation {
            domain: domain.clone(),
            images: (0..domain.len() as u32).collect(),
        }
    }

    pub fn from_images(domain: &Arc<Domain>, images: Vec<u32>) -> Result<Permutation> {
        if images.len() != domain.len() {
            return Err(Error::NotAPermutation(format!(
                "{} images for a domain of {} labels",
                images.len(),
                domain.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::NotAPermutation(format!("image {i} out of range")))?;
            if std::mem::replace(slot, true) {
                return Err(Error::NotAPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Permutation {
            domain: domain.clone(),
            images,
        })
    }

    pub(crate) fn from_images_unchecked(domain: &Arc<Domain>, images: Vec<u32>) -> Permutation {
        debug_assert_eq!(images.len(), domain.len());
        Permutation {
            domain: domain.clone(),
            images,
        }
    }

    /// Builds a permutation from label cycles, e.g. `[[1, 4], [2, 3]]`.
    pub fn from_cycles(domain: &Arc<Domain>, cycles: &[Vec<Label>]) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..domain.len() as u32).collect();
        let mut touched = vec![false; domain.len()];
        for cycle in cycles {
            let idx: Vec<usize> = cycle
                .iter()
                .map(|l| domain.require(l))
                .collect::<Result<_>>()?;
            for (k, &i) in idx.iter().enumerate() {
                if std::mem::replace(&mut touched[i], true) {
                    return Err(Error::CycleSyntax(format!(
                        "label `{}` appears twice",
                        domain.label(i)
                    )));
                }
                images[i] = idx[(k + 1) % idx.len()] as u32;
            }
        }
        Ok(Permutation {
            domain: domain.clone(),
            images,
        })
    }

    /// Parses cycle notation such as `(1 4)(2 3)`; `()` is the identity.
    pub fn parse(domain: &Arc<Domain>, text: &str) -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::CycleSyntax(format!("expected `(` in `{text}`")))?;
            let close = matching_paren(body)
                .ok_or_else(|| Error::CycleSyntax(format!("unbalanced `(` in `{text}`")))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Label>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(domain, &cycles)
    }

    pub fn domain(&self) -> &Arc<Domain> {
        &self.domain
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn image(&self, label: &Label) -> Result<&Label> {
        let k = self.domain.require(label)?;
        Ok(self.domain.label(self.apply(k)))
    }

    pub fn fixes(&self, k: usize) -> bool {
        self.apply(k) == k
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k as u32 == i)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (k, &i) in self.images.iter().enumerate() {
            inv[i as usize] = k as u32;
        }
        Permutation {
            domain: self.domain.clone(),
            images: inv,
        }
    }

    /// Same images on a larger domain whose prefix is this domain, fixing the
    /// new labels.
    pub fn extend_to(&self, domain: &Arc<Domain>) -> Result<Permutation> {
        if domain.len() < self.domain.len()
            || domain.labels()[..self.domain.len()] != *self.domain.labels()
        {
            return Err(Error::DomainMismatch(
                "target domain does not extend the permutation's domain".into(),
            ));
        }
        let mut images = self.images.clone();
        images.extend(self.domain.len() as u32..domain.len() as u32);
        Ok(Permutation {
            domain: domain.clone(),
            images,
        })
    }

    /// Rewrites this permutation on another domain of the same size, where
    /// position `k` here corresponds to position `k` there.
    pub fn transport(&self, domain: &Arc<Domain>) -> Result<Permutation> {
        if domain.len() != self.domain.len() {
            return Err(Error::DomainMismatch(format!(
                "cannot transport between domains of sizes {} and {}",
                self.domain.len(),
                domain.len()
            )));
        }
        Ok(Permutation {
            domain: domain.clone(),
            images: self.images.clone(),
        })
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest index,
    /// ordered by that index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[k] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (n, k) in c.iter().enumerate() {
                if n > 0 {
                    s.push(' ');
                }
                s.push_str(&self.domain.label(*k).to_string());
            }
            s.push(')');
        }
        s
    }
}

fn matching_paren(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' if depth == 0 => return Some(i),
            ')' => depth -= 1,
            _ => {}
        }
    }
    None
}

/// `x ↦ a(b(x))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if !same_domain(&a.domain, &b.domain) {
        return Err(Error::DomainMismatch("compose".into()));
    }
    Ok(Permutation {
        domain: a.domain.clone(),
        images: compose_raw(&a.images, &b.images),
    })
}

#[inline]
pub(crate) fn compose_raw(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&i| a[i as usize]).collect()
}

#[inline]
pub(crate) fn inverse_raw(a: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; a.len()];
    for (k, &i) in a.iter().enumerate() {
        inv[i as usize] = k as u32;
    }
    inv
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && same_domain(&self.domain, &other.domain)
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d3() -> Arc<Domain> {
        Domain::numbered(3)
    }

    #[test]
    fn compose_with_identity() {
        let d = d3();
        let s = Permutation::parse(&d, "(1 3 2)").unwrap();
        assert_eq!(compose(&Permutation::identity(&d), &s).unwrap(), s);
        assert_eq!(compose(&s, &Permutation::identity(&d)).unwrap(), s);
    }

    #[test]
    fn transposition_is_an_involution() {
        let d = d3();
        let t = Permutation::parse(&d, "(1 2)").unwrap();
        assert!(compose(&t, &t).unwrap().is_identity());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let d = d3();
        let a = Permutation::parse(&d, "(1 2)").unwrap();
        let b = Permutation::parse(&d, "(2 3)").unwrap();
        let c = compose(&a, &b).unwrap();
        // pointwise table: x -> a(b(x))
        let table = |x: &str| -> String {
            let lx: Label = x.parse().unwrap();
            let bx = b.image(&lx).unwrap().clone();
            a.image(&bx).unwrap().to_string()
        };
        for x in ["1", "2", "3"] {
            assert_eq!(c.image(&x.parse().unwrap()).unwrap().to_string(), table(x));
        }
        assert_eq!(c.to_cycle_string(), "(1 2 3)");
    }

    #[test]
    fn compose_rejects_mixed_domains() {
        let a = Permutation::identity(&Domain::numbered(3));
        let b = Permutation::identity(&Domain::numbered(4));
        assert!(matches!(compose(&a, &b), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn cycle_strings() {
        let d = Domain::numbered(4);
        let p = Permutation::parse(&d, "(4 1)(3 2)").unwrap();
        assert_eq!(p.to_cycle_string(), "(1 4)(2 3)");
        assert_eq!(Permutation::identity(&d).to_cycle_string(), "()");
        assert!(Permutation::parse(&d, "()").unwrap().is_identity());
        assert!(Permutation::parse(&d, "(1 2").is_err());
        assert!(Permutation::parse(&d, "(1 1)").is_err());
        assert!(Permutation::parse(&d, "(1 9)").is_err());
    }

    #[test]
    fn pair_label_cycles_round_trip() {
        let b = Domain::numbered(2);
        let p = Domain::product(&b, &Domain::numbered(2));
        let s = Permutation::parse(&p, "(1.1 2.2)(1.2 2.1)").unwrap();
        assert_eq!(Permutation::parse(&p, &s.to_cycle_string()).unwrap(), s);
    }

    #[test]
    fn from_images_validates() {
        let d = d3();
        assert!(Permutation::from_images(&d, vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(&d, vec![0, 1]).is_err());
        assert!(Permutation::from_images(&d, vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn extend_fixes_new_points() {
        let d = d3();
        let big = d.extended("x".parse().unwrap()).unwrap();
        let p = Permutation::parse(&d, "(1 2 3)")
            .unwrap()
            .extend_to(&big)
            .unwrap();
        assert_eq!(p.to_cycle_string(), "(1 2 3)");
        assert!(p.fixes(3));
    }
}
