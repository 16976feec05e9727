//! Matroid families and the polymatroid of a family of subsets.

use crate::check::{self, CheckReport};
use crate::error::{Error, Result};
use crate::ground::{is_valid_label, GroundSet, Subset, MAX_ELEMENTS};
use crate::rat::int;
use crate::setfn::SetFunction;

/// `r(X) = min(|X|, rank)`.
pub fn uniform_matroid(rank: usize, ground: GroundSet) -> Result<SetFunction> {
    if rank > ground.len() {
        return Err(Error::RankTooLarge {
            rank,
            size: ground.len(),
        });
    }
    Ok(SetFunction::from_fn(ground, |x| {
        int(x.len().min(rank) as i64)
    }))
}

/// `r(X) = |X|`.
pub fn free_matroid(ground: GroundSet) -> SetFunction {
    SetFunction::from_fn(ground, |x| int(x.len() as i64))
}

/// Rank over GF(2) of the chosen columns; column `i` is a bit vector.
pub fn binary_matroid(columns: &[u64], ground: GroundSet) -> Result<SetFunction> {
    if columns.len() != ground.len() {
        return Err(Error::GroundMismatch);
    }
    Ok(SetFunction::from_fn(ground, |x| {
        int(gf2_rank(x.elements().map(|i| columns[i])) as i64)
    }))
}

fn gf2_rank(vectors: impl Iterator<Item = u64>) -> usize {
    // basis[b] holds a vector whose highest set bit is b
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in vectors {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

/// Integer-valued polymatroid with every singleton value at most 1.
pub fn matroid_check(r: &SetFunction) -> CheckReport {
    let report = CheckReport::first_failure([
        check::check_polymatroid(r),
        check::check_integer_valued(r),
        check::check_singleton_bound(r, &int(1)),
    ]);
    CheckReport {
        property: "matroid",
        ..report
    }
}

/// A labeled collection of subsets of a base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    base: GroundSet,
    members: Vec<(String, Subset)>,
}

impl SubsetFamily {
    pub fn new<I, S, L>(base: GroundSet, members: I) -> Result<SubsetFamily>
    where
        I: IntoIterator<Item = (String, S)>,
        S: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let mut out = SubsetFamily {
            base,
            members: Vec::new(),
        };
        for (label, subset) in members {
            if !is_valid_label(&label) {
                return Err(Error::InvalidLabel(label));
            }
            if out.members.iter().any(|(l, _)| *l == label) {
                return Err(Error::DuplicateLabel(label));
            }
            let s = out.base.subset(subset)?;
            out.members.push((label, s));
        }
        if out.members.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                size: out.members.len(),
                cap: MAX_ELEMENTS,
            });
        }
        Ok(out)
    }

    pub fn from_masks(base: GroundSet, members: Vec<(String, Subset)>) -> Result<SubsetFamily> {
        if let Some((_, s)) = members.iter().find(|(_, s)| !base.contains_subset(*s)) {
            return Err(Error::OutsideGround {
                mask: s.bits(),
                size: base.len(),
            });
        }
        let named: Vec<(String, Vec<String>)> = members
            .into_iter()
            .map(|(l, s)| (l, s.elements().map(|i| base.label(i).to_string()).collect()))
            .collect();
        SubsetFamily::new(base, named)
    }

    pub fn base(&self) -> &GroundSet {
        &self.base
    }

    pub fn members(&self) -> &[(String, Subset)] {
        &self.members
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new(self.members.iter().map(|(l, _)| l.clone()))
            .expect("member labels are validated on construction")
    }
}

/// `r_P(X) = r_M(union of the members chosen by X)`.
pub fn polymatroid_from_subsets(m: &SetFunction, family: &SubsetFamily) -> Result<SetFunction> {
    if m.ground() != family.base() {
        return Err(Error::GroundMismatch);
    }
    let report = matroid_check(m);
    if !report.holds() {
        return Err(Error::Precondition {
            operation: "polymatroid from subsets",
            requirement: "a matroid rank function",
            report: Box::new(report),
        });
    }
    let sets: Vec<Subset> = family.members.iter().map(|(_, s)| *s).collect();
    let size = 1usize << sets.len();
    let mut unions = vec![Subset::EMPTY; size];
    for x in 1..size {
        unions[x] = unions[x & (x - 1)].union(sets[x.trailing_zeros() as usize]);
    }
    Ok(SetFunction::from_fn(family.ground(), |x| {
        m.value(unions[x.index()]).clone()
    }))
}
