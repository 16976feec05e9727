//! Ground sets and subset masks.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on ground-set size; tables hold `2^n` values.
pub const MAX_ELEMENTS: usize = 24;

/// A subset of a ground set, stored as a bit mask: bit `i` is the element at position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    /// The subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Positions of the members, ascending.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == mask {
                None
            } else {
                Some((current.wrapping_sub(mask)) & mask)
            };
            Some(Subset(current))
        })
    }
}

/// All `2^n` subsets of an `n`-element ground set, in ascending mask order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u32 << n).map(Subset)
}

/// An ordered list of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroundSet {
    labels: Vec<String>,
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                size: labels.len(),
                cap: MAX_ELEMENTS,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn empty() -> GroundSet {
        GroundSet::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Number of subsets, `2^n`.
    pub fn table_len(&self) -> usize {
        1 << self.len()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    /// Builds a subset from labels; unknown or repeated labels are errors.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .position(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            if s.contains(i) {
                return Err(Error::RepeatedLabel(label.to_string()));
            }
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn complement(&self, s: Subset) -> Subset {
        self.full().difference(s)
    }

    /// The ground set `E - removed`, keeping the original relative order, together
    /// with the original position of each surviving element.
    pub fn remove(&self, removed: Subset) -> (GroundSet, Vec<usize>) {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| !removed.contains(i)).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        (GroundSet { labels }, kept)
    }

    /// Renders `s` in the `{a,b}` syntax shared by files and the command line.
    pub fn format(&self, s: Subset) -> String {
        let names: Vec<&str> = s.elements().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn display(&self, s: Subset) -> impl fmt::Display + '_ {
        struct Shown<'a>(&'a GroundSet, Subset);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        Shown(self, s)
    }
}

/// Maps a mask over a reduced ground set back to the original positions.
pub(crate) fn expand(s: Subset, positions: &[usize]) -> Subset {
    s.elements()
        .fold(Subset::EMPTY, |acc, i| acc.with(positions[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_is_ascending_and_complete() {
        let s = Subset(0b1011);
        let subs: Vec<u32> = s.subsets().map(|x| x.0).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
        assert_eq!(Subset::full(24).len(), 24);
    }

    #[test]
    fn elements_and_set_algebra() {
        let a = Subset(0b0110);
        let b = Subset(0b0011);
        assert_eq!(a.elements().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(a.union(b), Subset(0b0111));
        assert_eq!(a.intersection(b), Subset(0b0010));
        assert_eq!(a.difference(b), Subset(0b0100));
        assert!(Subset(0b0010).is_subset_of(a));
        assert!(!b.is_subset_of(a));
    }

    #[test]
    fn ground_set_validation() {
        assert!(GroundSet::new(["a", "b_2", "C"]).is_ok());
        assert!(matches!(GroundSet::new(["a", "a"]), Err(Error::DuplicateLabel(l)) if l == "a"));
        assert!(matches!(
            GroundSet::new(["a-b"]),
            Err(Error::InvalidLabel(_))
        ));
        assert!(matches!(GroundSet::new([""]), Err(Error::InvalidLabel(_))));
        let many: Vec<String> = (0..25).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            GroundSet::new(many),
            Err(Error::TooManyElements { .. })
        ));
    }

    #[test]
    fn subsets_from_labels() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        assert_eq!(g.subset(["c", "a"]).unwrap(), Subset(0b101));
        assert!(matches!(g.subset(["d"]), Err(Error::UnknownLabel(_))));
        assert!(matches!(g.subset(["a", "a"]), Err(Error::RepeatedLabel(_))));
        assert_eq!(g.format(Subset(0b101)), "{a,c}");
        assert_eq!(g.format(Subset::EMPTY), "{}");
    }

    #[test]
    fn removal_keeps_order() {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let (h, pos) = g.remove(Subset(0b0101));
        assert_eq!(h.labels(), ["b", "d"]);
        assert_eq!(pos, vec![1, 3]);
        assert_eq!(expand(Subset(0b10), &pos), Subset(0b1000));
    }
}
