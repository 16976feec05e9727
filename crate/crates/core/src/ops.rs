//! Transforms on polymatroids and connectivity functions.
//!
//! The functions at the top level enforce the hypotheses under which their
//! results are guaranteed (polymatroid input for duals, minors and
//! compactification; connectivity-function input for the induced
//! polymatroid). The formulas themselves are total and live in [`raw`] for
//! callers that want them without enforcement.

use crate::check::{self, CheckReport};
use crate::error::{Error, Result};
use crate::ground::Subset;
use crate::rat::{self, Rat};
use crate::setfn::SetFunction;

/// The formulas with no precondition checks.
pub mod raw {
    use super::*;
    use crate::ground::expand;

    /// `λ(X) = r(X) + r(E-X) - r(E)`.
    pub fn connectivity(r: &SetFunction) -> SetFunction {
        let full = r.value(r.full()).clone();
        SetFunction::from_fn(r.ground().clone(), |x| {
            r.value(x) + r.value(r.ground().complement(x)) - &full
        })
    }

    /// `r*(X) = r(E-X) + ||X||_r - r(E)`.
    pub fn dual(r: &SetFunction) -> SetFunction {
        let full = r.value(r.full()).clone();
        let norms = r.norm_table();
        SetFunction::from_fn(r.ground().clone(), |x| {
            r.value(r.ground().complement(x)) + &norms[x.index()] - &full
        })
    }

    /// `r^{*k}(X) = r(E-X) + k|X| - r(E)`.
    pub fn k_dual(r: &SetFunction, k: &Rat) -> SetFunction {
        let full = r.value(r.full()).clone();
        SetFunction::from_fn(r.ground().clone(), |x| {
            r.value(r.ground().complement(x)) + k * rat::int(x.len() as i64) - &full
        })
    }

    /// `r♭(X) = r(X) + sum over x in X of (λ({x}) - r({x}))`.
    ///
    /// The per-element correction `λ({x}) - r({x})` equals `r(E-x) - r(E)`.
    pub fn compactify(r: &SetFunction) -> SetFunction {
        let lambda = connectivity(r);
        let corrections: Vec<Rat> = (0..r.len())
            .map(|i| lambda.singleton(i) - r.singleton(i))
            .collect();
        SetFunction::from_fn(r.ground().clone(), |x| {
            x.elements()
                .fold(r.value(x).clone(), |acc, i| acc + &corrections[i])
        })
    }

    /// Elements `e` with `r(E-e) = r(E)`.
    pub fn compact_elements(r: &SetFunction) -> Subset {
        let full = r.full();
        (0..r.len())
            .filter(|&e| r.value(full.without(e)) == r.value(full))
            .fold(Subset::EMPTY, Subset::with)
    }

    /// Elements `e` with `r({e}) = λ_r({e})`.
    pub fn compact_elements_by_connectivity(r: &SetFunction) -> Subset {
        let lambda = connectivity(r);
        (0..r.len())
            .filter(|&e| r.singleton(e) == lambda.singleton(e))
            .fold(Subset::EMPTY, Subset::with)
    }

    /// Restriction to `E - removed`. Panics if `removed` is outside the ground set.
    pub fn delete(r: &SetFunction, removed: Subset) -> SetFunction {
        let (ground, positions) = r.ground().remove(removed);
        SetFunction::from_fn(ground, |x| r.value(expand(x, &positions)).clone())
    }

    /// `r_{/A}(X) = r(X ∪ A) - r(A)` on `E - A`. Panics if `a` is outside the ground set.
    pub fn contract(r: &SetFunction, a: Subset) -> SetFunction {
        let (ground, positions) = r.ground().remove(a);
        let base = r.value(a).clone();
        SetFunction::from_fn(ground, |x| r.value(expand(x, &positions).union(a)) - &base)
    }

    pub fn scale(f: &SetFunction, c: &Rat) -> SetFunction {
        f.map(|v| v * c)
    }

    /// `r(X) = λ(X) + ||X||_λ`.
    pub fn induced_polymatroid(lambda: &SetFunction) -> SetFunction {
        let norms = lambda.norm_table();
        SetFunction::from_fn(lambda.ground().clone(), |x| {
            lambda.value(x) + &norms[x.index()]
        })
    }

    /// Half of the induced polymatroid.
    pub fn canonical_self_dual(lambda: &SetFunction) -> SetFunction {
        scale(&induced_polymatroid(lambda), &rat::ratio(1, 2))
    }
}

fn require(operation: &'static str, requirement: &'static str, report: CheckReport) -> Result<()> {
    if report.holds() {
        Ok(())
    } else {
        Err(Error::Precondition {
            operation,
            requirement,
            report: Box::new(report),
        })
    }
}

fn require_polymatroid(operation: &'static str, r: &SetFunction) -> Result<()> {
    require(operation, "a polymatroid", check::check_polymatroid(r))
}

fn require_connectivity_function(operation: &'static str, f: &SetFunction) -> Result<()> {
    require(
        operation,
        "a connectivity function",
        check::check_connectivity_function(f),
    )
}

fn require_inside(r: &SetFunction, a: Subset) -> Result<()> {
    if r.ground().contains_subset(a) {
        Ok(())
    } else {
        Err(Error::OutsideGround {
            mask: a.bits(),
            size: r.len(),
        })
    }
}

/// The connectivity function `λ_P` of a polymatroid.
pub fn connectivity_of(r: &SetFunction) -> Result<SetFunction> {
    require_polymatroid("connectivity", r)?;
    Ok(raw::connectivity(r))
}

pub fn dual(r: &SetFunction) -> Result<SetFunction> {
    require_polymatroid("dual", r)?;
    Ok(raw::dual(r))
}

/// Dual with respect to a fixed bound `k` on the singleton values.
pub fn k_dual(r: &SetFunction, k: &Rat) -> Result<SetFunction> {
    require_polymatroid("k-dual", r)?;
    require(
        "k-dual",
        "every singleton value at most k",
        check::check_singleton_bound(r, k),
    )?;
    Ok(raw::k_dual(r, k))
}

pub fn compactify(r: &SetFunction) -> Result<SetFunction> {
    require_polymatroid("compactify", r)?;
    Ok(raw::compactify(r))
}

pub fn compact_elements(r: &SetFunction) -> Result<Subset> {
    require_polymatroid("compact elements", r)?;
    Ok(raw::compact_elements(r))
}

pub fn delete(r: &SetFunction, a: Subset) -> Result<SetFunction> {
    require_inside(r, a)?;
    require_polymatroid("delete", r)?;
    Ok(raw::delete(r, a))
}

pub fn contract(r: &SetFunction, a: Subset) -> Result<SetFunction> {
    require_inside(r, a)?;
    require_polymatroid("contract", r)?;
    Ok(raw::contract(r, a))
}

pub fn scale(f: &SetFunction, c: &Rat) -> Result<SetFunction> {
    if !rat::is_positive(c) {
        return Err(Error::NonPositiveFactor(c.clone()));
    }
    Ok(raw::scale(f, c))
}

/// Pointwise sum of two functions on the same ground set.
pub fn sum(f: &SetFunction, g: &SetFunction) -> Result<SetFunction> {
    if f.ground() != g.ground() {
        return Err(Error::GroundMismatch);
    }
    SetFunction::from_table(
        f.ground().clone(),
        f.table()
            .iter()
            .zip(g.table())
            .map(|(a, b)| a + b)
            .collect(),
    )
}

pub fn induced_polymatroid(lambda: &SetFunction) -> Result<SetFunction> {
    require_connectivity_function("induce", lambda)?;
    Ok(raw::induced_polymatroid(lambda))
}

/// A compact self-dual polymatroid whose connectivity function is exactly `lambda`.
pub fn canonical_self_dual(lambda: &SetFunction) -> Result<SetFunction> {
    require_connectivity_function("canonical", lambda)?;
    Ok(raw::canonical_self_dual(lambda))
}

/// Compares `(r/A)*` with `(r* \ A)♭`, which agree for every polymatroid.
pub fn minor_dual_identity_check(r: &SetFunction, a: Subset) -> Result<CheckReport> {
    let left = dual(&contract(r, a)?)?;
    let right = compactify(&delete(&dual(r)?, a)?)?;
    Ok(check::check_equal(
        "dual of contraction equals compactified deletion of dual",
        &left,
        &right,
    ))
}

/// `true` when `r` equals its own dual.
pub fn is_self_dual(r: &SetFunction) -> Result<bool> {
    Ok(dual(r)? == *r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::rat::{int, ratio};

    fn ground(labels: &[&str]) -> GroundSet {
        GroundSet::new(labels.iter().copied()).unwrap()
    }

    fn table(labels: &[&str], values: &[Rat]) -> SetFunction {
        SetFunction::from_table(ground(labels), values.to_vec()).unwrap()
    }

    fn ints(labels: &[&str], values: &[i64]) -> SetFunction {
        table(labels, &values.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    fn u12() -> SetFunction {
        ints(&["a", "b"], &[0, 1, 1, 1])
    }
    fn u23() -> SetFunction {
        ints(&["a", "b", "c"], &[0, 1, 1, 2, 1, 2, 2, 2])
    }
    fn u13() -> SetFunction {
        ints(&["a", "b", "c"], &[0, 1, 1, 1, 1, 1, 1, 1])
    }
    fn lu13() -> SetFunction {
        ints(&["a", "b", "c"], &[0, 1, 1, 1, 1, 1, 1, 0])
    }
    fn coloop() -> SetFunction {
        ints(&["a"], &[0, 1])
    }
    fn loop_() -> SetFunction {
        ints(&["a"], &[0, 0])
    }
    fn free2() -> SetFunction {
        ints(&["a", "b"], &[0, 1, 1, 2])
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(
            connectivity_of(&u23()).unwrap(),
            ints(&["a", "b", "c"], &[0, 1, 1, 1, 1, 1, 1, 0])
        );
        assert_eq!(connectivity_of(&coloop()).unwrap(), loop_());
        assert_eq!(
            connectivity_of(&free2()).unwrap(),
            SetFunction::zero(ground(&["a", "b"]))
        );
        let err = connectivity_of(&lu13()).unwrap_err();
        assert!(matches!(err, Error::Precondition { ref report, .. } if !report.holds()));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&u23()).unwrap(), u13());
        assert_eq!(dual(&coloop()).unwrap(), loop_());
        assert_eq!(dual(&loop_()).unwrap(), loop_());
        assert!(dual(&lu13()).is_err());
    }

    #[test]
    fn k_dual_examples() {
        assert_eq!(k_dual(&u23(), &int(1)).unwrap(), u13());
        assert_eq!(k_dual(&loop_(), &int(1)).unwrap(), coloop());
        let twice = k_dual(&k_dual(&loop_(), &int(1)).unwrap(), &int(1)).unwrap();
        assert_eq!(twice, loop_());
        // free matroid rank 2 has singleton values 1, so k = 1/2 is too small
        assert!(matches!(
            k_dual(&free2(), &ratio(1, 2)),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn compactify_examples() {
        assert_eq!(compactify(&coloop()).unwrap(), loop_());
        assert_eq!(compactify(&u23()).unwrap(), u23());
        assert_eq!(
            compactify(&free2()).unwrap(),
            SetFunction::zero(ground(&["a", "b"]))
        );
    }

    #[test]
    fn compact_element_examples() {
        assert_eq!(compact_elements(&u23()).unwrap(), Subset(0b111));
        assert_eq!(compact_elements(&coloop()).unwrap(), Subset::EMPTY);
        assert_eq!(compact_elements(&u12()).unwrap(), Subset(0b11));
        for r in [u23(), coloop(), u12(), free2(), loop_()] {
            assert_eq!(
                raw::compact_elements(&r),
                raw::compact_elements_by_connectivity(&r)
            );
        }
    }

    #[test]
    fn minors() {
        assert_eq!(
            delete(&u23(), Subset(0b001)).unwrap(),
            ints(&["b", "c"], &[0, 1, 1, 2])
        );
        assert_eq!(delete(&u23(), Subset::EMPTY).unwrap(), u23());
        assert_eq!(delete(&u12(), Subset(0b11)).unwrap(), SetFunction::empty());
        assert_eq!(
            contract(&u23(), Subset(0b001)).unwrap(),
            ints(&["b", "c"], &[0, 1, 1, 1])
        );
        assert_eq!(contract(&u23(), Subset::EMPTY).unwrap(), u23());
        assert_eq!(
            contract(&u12(), Subset(0b01)).unwrap(),
            ints(&["b"], &[0, 0])
        );
        assert!(matches!(
            delete(&u12(), Subset(0b100)),
            Err(Error::OutsideGround { .. })
        ));
        assert!(matches!(
            contract(&u12(), Subset(0b100)),
            Err(Error::OutsideGround { .. })
        ));
    }

    #[test]
    fn scaling() {
        assert_eq!(scale(&u23(), &int(1)).unwrap(), u23());
        let half = scale(&u23(), &ratio(1, 2)).unwrap();
        let h = ratio(1, 2);
        assert_eq!(
            half,
            table(
                &["a", "b", "c"],
                &[
                    int(0),
                    h.clone(),
                    h.clone(),
                    int(1),
                    h,
                    int(1),
                    int(1),
                    int(1)
                ]
            )
        );
        let back = scale(&scale(&u12(), &ratio(1, 2)).unwrap(), &int(2)).unwrap();
        assert_eq!(back, u12());
        assert!(matches!(
            scale(&u12(), &int(0)),
            Err(Error::NonPositiveFactor(_))
        ));
        assert!(matches!(
            scale(&u12(), &int(-1)),
            Err(Error::NonPositiveFactor(_))
        ));
    }

    #[test]
    fn sums() {
        assert_eq!(
            sum(&u12(), &u12()).unwrap(),
            ints(&["a", "b"], &[0, 2, 2, 2])
        );
        assert_eq!(
            sum(&u23(), &dual(&u23()).unwrap()).unwrap(),
            ints(&["a", "b", "c"], &[0, 2, 2, 3, 2, 3, 3, 3])
        );
        assert_eq!(
            sum(&u23(), &SetFunction::zero(ground(&["a", "b", "c"]))).unwrap(),
            u23()
        );
        assert!(matches!(sum(&u12(), &u23()), Err(Error::GroundMismatch)));
    }

    #[test]
    fn induced_examples() {
        let induced = ints(&["a", "b", "c"], &[0, 2, 2, 3, 2, 3, 3, 3]);
        assert_eq!(induced_polymatroid(&lu13()).unwrap(), induced);
        let zero = SetFunction::zero(ground(&["a", "b"]));
        assert_eq!(induced_polymatroid(&zero).unwrap(), zero);
        let lambda = connectivity_of(&u23()).unwrap();
        assert_eq!(induced_polymatroid(&lambda).unwrap(), induced);
        assert!(is_self_dual(&induced).unwrap());
        assert!(matches!(
            induced_polymatroid(&u23()),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_self_dual(&lu13()).unwrap();
        let (one, three_halves) = (int(1), ratio(3, 2));
        assert_eq!(
            c,
            table(
                &["a", "b", "c"],
                &[
                    int(0),
                    one.clone(),
                    one.clone(),
                    three_halves.clone(),
                    one,
                    three_halves.clone(),
                    three_halves.clone(),
                    three_halves
                ]
            )
        );
        assert_eq!(connectivity_of(&c).unwrap(), lu13());
        let zero = SetFunction::zero(ground(&["a"]));
        assert_eq!(canonical_self_dual(&zero).unwrap(), zero);
    }

    #[test]
    fn minor_dual_identity_examples() {
        let r = minor_dual_identity_check(&u23(), Subset(0b001)).unwrap();
        assert!(r.holds());
        assert_eq!(
            dual(&contract(&u23(), Subset(0b001)).unwrap()).unwrap(),
            ints(&["b", "c"], &[0, 1, 1, 1])
        );
        assert!(minor_dual_identity_check(&u23(), Subset::EMPTY)
            .unwrap()
            .holds());
        assert!(minor_dual_identity_check(&coloop(), Subset(0b1))
            .unwrap()
            .holds());
    }

    #[test]
    fn dual_is_not_an_involution_in_general() {
        let twice = dual(&dual(&coloop()).unwrap()).unwrap();
        assert_eq!(twice, loop_());
        assert_ne!(twice, coloop());
    }
}
