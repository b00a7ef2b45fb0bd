use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A point label: an opaque atom, or an ordered pair `(b, x)` as produced by
/// comb products and wreath products.
///
/// Pairs print as `b.x`. The pair is right-associative, so a pair whose first
/// component is itself a pair is printed with parentheses: `(1.2).3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Atom(Arc<str>),
    Pair(Arc<Label>, Arc<Label>),
}

impl Label {
    pub fn atom(name: impl AsRef<str>) -> Result<Label> {
        let name = name.as_ref();
        validate_atom(name)?;
        Ok(Label::Atom(Arc::from(name)))
    }

    pub fn pair(b: Label, x: Label) -> Label {
        Label::Pair(Arc::new(b), Arc::new(x))
    }

    /// The `b` and `x` components of a pair label.
    pub fn as_pair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(b, x) => Some((b, x)),
            Label::Atom(_) => None,
        }
    }

    fn numeric(&self) -> Option<u64> {
        match self {
            Label::Atom(s) => s.parse().ok(),
            Label::Pair(..) => None,
        }
    }
}

fn validate_atom(name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(Error::InvalidLabel(name.into(), "empty label".into()));
    }
    if let Some(c) = name
        .chars()
        .find(|c| c.is_whitespace() || matches!(c, '.' | '(' | ')' | ','))
    {
        return Err(Error::InvalidLabel(
            name.into(),
            format!("atoms may not contain {c:?}"),
        ));
    }
    Ok(())
}

impl From<u32> for Label {
    fn from(v: u32) -> Label {
        Label::Atom(Arc::from(v.to_string()))
    }
}

impl From<usize> for Label {
    fn from(v: usize) -> Label {
        Label::Atom(Arc::from(v.to_string()))
    }
}

// Integer-looking atoms compare numerically so that `2 < 10`; pairs sort
// after atoms and compare x-major, which matches the block layout of
// product domains.
impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Atom(a), Label::Atom(b)) => match (self.numeric(), other.numeric()) {
                (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => a.cmp(b),
            },
            (Label::Atom(_), Label::Pair(..)) => Ordering::Less,
            (Label::Pair(..), Label::Atom(_)) => Ordering::Greater,
            (Label::Pair(b1, x1), Label::Pair(b2, x2)) => x1.cmp(x2).then_with(|| b1.cmp(b2)),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Pair(b, x) => {
                if b.as_pair().is_some() {
                    write!(f, "({b}).{x}")
                } else {
                    write!(f, "{b}.{x}")
                }
            }
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let (label, rest) = parse_label(s, s)?;
        if !rest.is_empty() {
            return Err(Error::InvalidLabel(s.into(), format!("trailing `{rest}`")));
        }
        Ok(label)
    }
}

fn parse_label<'a>(whole: &str, s: &'a str) -> Result<(Label, &'a str)> {
    let (first, rest) = parse_component(whole, s)?;
    match rest.strip_prefix('.') {
        Some(tail) => {
            let (second, rest) = parse_label(whole, tail)?;
            Ok((Label::pair(first, second), rest))
        }
        None => Ok((first, rest)),
    }
}

fn parse_component<'a>(whole: &str, s: &'a str) -> Result<(Label, &'a str)> {
    if let Some(inner) = s.strip_prefix('(') {
        let (label, rest) = parse_label(whole, inner)?;
        let rest = rest
            .strip_prefix(')')
            .ok_or_else(|| Error::InvalidLabel(whole.into(), "unbalanced parenthesis".into()))?;
        return Ok((label, rest));
    }
    let end = s.find(['.', '(', ')']).unwrap_or(s.len());
    let atom = Label::atom(&s[..end])
        .map_err(|_| Error::InvalidLabel(whole.into(), format!("bad atom `{}`", &s[..end])))?;
    Ok((atom, &s[end..]))
}

/// An ordered finite label set with an inverse index.
#[derive(Clone)]
pub struct Domain {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl Domain {
    pub fn new(labels: Vec<Label>) -> Result<Arc<Domain>> {
        let mut index = HashMap::with_capacity(labels.len());
        for (k, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), k).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        Ok(Arc::new(Domain { labels, index }))
    }

    /// Atoms `1..=n`.
    pub fn numbered(n: usize) -> Arc<Domain> {
        Domain::new((1..=n).map(Label::from).collect()).expect("distinct")
    }

    /// The product domain `B × X`, ordered x-major then b.
    pub fn product(b: &Domain, x: &Domain) -> Arc<Domain> {
        let labels = x
            .labels
            .iter()
            .flat_map(|xl| {
                b.labels
                    .iter()
                    .map(move |bl| Label::pair(bl.clone(), xl.clone()))
            })
            .collect();
        Domain::new(labels).expect("product of distinct labels is distinct")
    }

    /// This domain with `extra` appended.
    pub fn extended(&self, extra: Label) -> Result<Arc<Domain>> {
        let mut labels = self.labels.clone();
        labels.push(extra);
        Domain::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, k: usize) -> &Label {
        &self.labels[k]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &Label) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index.contains_key(label)
    }

    /// A label of the form `{prefix}{k}` not already present, smallest k ≥ 1.
    pub fn fresh_label(&self, prefix: &str) -> Label {
        (1..)
            .map(|k| Label::atom(format!("{prefix}{k}")).expect("valid prefix"))
            .find(|l| !self.contains(l))
            .expect("unbounded search")
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Domain {}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

pub(crate) fn same_domain(a: &Arc<Domain>, b: &Arc<Domain>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
