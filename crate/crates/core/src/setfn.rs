//! Dense set functions: one exact value per subset of the ground set.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ground::{all_subsets, GroundSet, Subset};
use crate::rat::Rat;

/// A set function `f : 2^E -> Q`, stored as a table indexed by subset mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFunction {
    ground: GroundSet,
    table: Vec<Rat>,
}

impl SetFunction {
    pub fn from_table(ground: GroundSet, table: Vec<Rat>) -> Result<SetFunction> {
        if table.len() != ground.table_len() {
            return Err(Error::TableLength {
                expected: ground.table_len(),
                found: table.len(),
            });
        }
        Ok(SetFunction { ground, table })
    }

    pub fn from_fn(ground: GroundSet, mut f: impl FnMut(Subset) -> Rat) -> SetFunction {
        let table = all_subsets(ground.len()).map(&mut f).collect();
        SetFunction { ground, table }
    }

    /// Builds a set function from `(subset labels, value)` pairs, which must
    /// cover every subset of `ground` exactly once.
    pub fn from_assignments<I, S, L>(ground: GroundSet, values: I) -> Result<SetFunction>
    where
        I: IntoIterator<Item = (S, Rat)>,
        S: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let mut slots: Vec<Option<Rat>> = vec![None; ground.table_len()];
        for (labels, value) in values {
            let s = ground.subset(labels)?;
            let slot = &mut slots[s.index()];
            if slot.is_some() {
                return Err(Error::DuplicateSubset(ground.format(s)));
            }
            *slot = Some(value);
        }
        let mut table = Vec::with_capacity(slots.len());
        for (mask, slot) in slots.into_iter().enumerate() {
            match slot {
                Some(v) => table.push(v),
                None => return Err(Error::MissingSubset(ground.format(Subset(mask as u32)))),
            }
        }
        Ok(SetFunction { ground, table })
    }

    pub fn zero(ground: GroundSet) -> SetFunction {
        SetFunction::from_fn(ground, |_| Rat::zero())
    }

    /// The unique set function on the empty ground set, `{} -> 0`.
    pub fn empty() -> SetFunction {
        SetFunction::zero(GroundSet::empty())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn table(&self) -> &[Rat] {
        &self.table
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    /// Value at `s`. Panics if `s` is outside the ground set.
    pub fn value(&self, s: Subset) -> &Rat {
        &self.table[s.index()]
    }

    pub fn singleton(&self, i: usize) -> &Rat {
        self.value(Subset::singleton(i))
    }

    pub fn eval(&self, s: Subset) -> Result<&Rat> {
        if !self.ground.contains_subset(s) {
            return Err(Error::OutsideGround {
                mask: s.bits(),
                size: self.len(),
            });
        }
        Ok(self.value(s))
    }

    pub fn eval_labels<I, L>(&self, labels: I) -> Result<&Rat>
    where
        I: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        Ok(self.value(self.ground.subset(labels)?))
    }

    /// `||X||_f`: the sum of the singleton values over the elements of `s`.
    pub fn norm(&self, s: Subset) -> Result<Rat> {
        self.eval(s)?;
        Ok(self.norm_unchecked(s))
    }

    pub(crate) fn norm_unchecked(&self, s: Subset) -> Rat {
        s.elements()
            .fold(Rat::zero(), |acc, i| acc + self.singleton(i))
    }

    /// Norms of every subset, built incrementally from the lowest element.
    pub(crate) fn norm_table(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.table.len());
        out.push(Rat::zero());
        for mask in 1..self.table.len() {
            let low = mask.trailing_zeros() as usize;
            let v = &out[mask & (mask - 1)] + self.singleton(low);
            out.push(v);
        }
        out
    }

    pub fn max_value(&self) -> &Rat {
        self.table.iter().max().expect("table is never empty")
    }

    /// Largest singleton value; `None` on the empty ground set.
    pub fn max_singleton(&self) -> Option<&Rat> {
        (0..self.len()).map(|i| self.singleton(i)).max()
    }

    /// Same labels in the same order and identical values.
    pub fn equal(&self, other: &SetFunction) -> bool {
        self == other
    }

    /// First subset (ascending mask order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &SetFunction) -> Option<Subset> {
        if self.ground != other.ground {
            return Some(Subset::EMPTY);
        }
        self.table
            .iter()
            .zip(&other.table)
            .position(|(a, b)| a != b)
            .map(|m| Subset(m as u32))
    }

    pub fn map(&self, f: impl Fn(&Rat) -> Rat) -> SetFunction {
        SetFunction {
            ground: self.ground.clone(),
            table: self.table.iter().map(f).collect(),
        }
    }

    /// Relabels the elements in place without changing any value.
    pub fn relabel(&self, ground: GroundSet) -> Result<SetFunction> {
        if ground.len() != self.len() {
            return Err(Error::GroundMismatch);
        }
        Ok(SetFunction {
            ground,
            table: self.table.clone(),
        })
    }
}
