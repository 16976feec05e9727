//! Exhaustive axiom checks.
//!
//! Every check scans subsets in ascending mask order and reports the first
//! violation it meets, so the witness is deterministic. The comparisons run
//! on integer numerators over a common denominator, which keeps them exact
//! while avoiding rational normalisation in the inner loops.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::ground::{all_subsets, GroundSet, Subset};
use crate::rat::{self, format_rat, Rat};
use crate::setfn::SetFunction;

/// A concrete counterexample to a property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `f({}) != 0`.
    NotNormalised {
        value: Rat,
    },
    /// `f(X) != f(E - X)`.
    Asymmetric {
        set: Subset,
        value: Rat,
        complement_value: Rat,
    },
    /// `f(X & Y) + f(X | Y) = lhs > rhs = f(X) + f(Y)`.
    NotSubmodular {
        x: Subset,
        y: Subset,
        lhs: Rat,
        rhs: Rat,
    },
    /// `f(X) > f(X + e)`.
    Decreasing {
        set: Subset,
        element: usize,
        before: Rat,
        after: Rat,
    },
    /// `f(X) > f(Y)` for `X` a subset of `Y`.
    NotMonotone {
        smaller: Subset,
        larger: Subset,
        lower: Rat,
        upper: Rat,
    },
    /// `f(X) <= 0` for a proper nonempty `X`.
    NotPositive {
        set: Subset,
        value: Rat,
    },
    NotInteger {
        set: Subset,
        value: Rat,
    },
    NotHalfIntegral {
        set: Subset,
        value: Rat,
    },
    /// `f(X) > bound`.
    ExceedsBound {
        set: Subset,
        value: Rat,
        bound: Rat,
    },
    /// `r(E - e) != r(E)`.
    NotCompact {
        element: usize,
        without: Rat,
        full: Rat,
    },
    /// `f(Y) - f(X) = increase > norm = ||Y - X||_f` for `X` a subset of `Y`.
    ExceedsNorm {
        smaller: Subset,
        larger: Subset,
        increase: Rat,
        norm: Rat,
    },
    /// Two functions that should agree differ at `set` (or have different grounds).
    Mismatch {
        set: Subset,
        left: Rat,
        right: Rat,
    },
    /// Two functions that should share a ground set do not.
    GroundMismatch,
}

impl Witness {
    /// Re-evaluates the witness against `f` and confirms the violation it records.
    /// Witnesses comparing two functions never reproduce against one.
    pub fn reproduces(&self, f: &SetFunction) -> bool {
        let inside = |s: Subset| f.ground().contains_subset(s);
        match self {
            Witness::NotNormalised { value } => f.value(Subset::EMPTY) == value && !value.is_zero(),
            Witness::Asymmetric {
                set,
                value,
                complement_value,
            } => {
                inside(*set)
                    && f.value(*set) == value
                    && f.value(f.ground().complement(*set)) == complement_value
                    && value != complement_value
            }
            Witness::NotSubmodular { x, y, lhs, rhs } => {
                inside(*x)
                    && inside(*y)
                    && &(f.value(x.intersection(*y)) + f.value(x.union(*y))) == lhs
                    && &(f.value(*x) + f.value(*y)) == rhs
                    && lhs > rhs
            }
            Witness::Decreasing {
                set,
                element,
                before,
                after,
            } => {
                *element < f.len()
                    && inside(*set)
                    && !set.contains(*element)
                    && f.value(*set) == before
                    && f.value(set.with(*element)) == after
                    && before > after
            }
            Witness::NotMonotone {
                smaller,
                larger,
                lower,
                upper,
            } => {
                inside(*larger)
                    && smaller.is_subset_of(*larger)
                    && f.value(*smaller) == lower
                    && f.value(*larger) == upper
                    && lower > upper
            }
            Witness::NotPositive { set, value } => {
                inside(*set)
                    && !set.is_empty()
                    && *set != f.full()
                    && f.value(*set) == value
                    && !rat::is_positive(value)
            }
            Witness::NotInteger { set, value } => {
                inside(*set) && f.value(*set) == value && !rat::is_integer(value)
            }
            Witness::NotHalfIntegral { set, value } => {
                inside(*set) && f.value(*set) == value && !rat::is_half_integer(value)
            }
            Witness::ExceedsBound { set, value, bound } => {
                inside(*set) && f.value(*set) == value && value > bound
            }
            Witness::NotCompact {
                element,
                without,
                full,
            } => {
                *element < f.len()
                    && f.value(f.full().without(*element)) == without
                    && f.value(f.full()) == full
                    && without != full
            }
            Witness::ExceedsNorm {
                smaller,
                larger,
                increase,
                norm,
            } => {
                inside(*larger)
                    && smaller.is_subset_of(*larger)
                    && &(f.value(*larger) - f.value(*smaller)) == increase
                    && &f.norm_unchecked(larger.difference(*smaller)) == norm
                    && increase > norm
            }
            Witness::Mismatch { .. } | Witness::GroundMismatch => false,
        }
    }

    /// Re-evaluates a two-function witness.
    pub fn reproduces_between(&self, left: &SetFunction, right: &SetFunction) -> bool {
        match self {
            Witness::Mismatch {
                set,
                left: l,
                right: r,
            } => {
                left.ground() == right.ground()
                    && left.ground().contains_subset(*set)
                    && left.value(*set) == l
                    && right.value(*set) == r
                    && l != r
            }
            Witness::GroundMismatch => left.ground() != right.ground(),
            _ => false,
        }
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        let s = |x: &Subset| ground.format(*x);
        let v = format_rat;
        match self {
            Witness::NotNormalised { value } => format!("f({{}}) = {} != 0", v(value)),
            Witness::Asymmetric {
                set,
                value,
                complement_value,
            } => format!(
                "f({}) = {} != {} = f({})",
                s(set),
                v(value),
                v(complement_value),
                s(&ground.complement(*set))
            ),
            Witness::NotSubmodular { x, y, lhs, rhs } => format!(
                "X = {}, Y = {}: f(X&Y) + f(X|Y) = {} > {} = f(X) + f(Y)",
                s(x),
                s(y),
                v(lhs),
                v(rhs)
            ),
            Witness::Decreasing {
                set,
                element,
                before,
                after,
            } => format!(
                "X = {}, e = {}: f(X) = {} > {} = f(X+e)",
                s(set),
                ground.label(*element),
                v(before),
                v(after)
            ),
            Witness::NotMonotone {
                smaller,
                larger,
                lower,
                upper,
            } => format!(
                "f({}) = {} > {} = f({})",
                s(smaller),
                v(lower),
                v(upper),
                s(larger)
            ),
            Witness::NotPositive { set, value } => {
                format!("f({}) = {} is not positive", s(set), v(value))
            }
            Witness::NotInteger { set, value } => {
                format!("f({}) = {} is not an integer", s(set), v(value))
            }
            Witness::NotHalfIntegral { set, value } => {
                format!("f({}) = {} is not a multiple of 1/2", s(set), v(value))
            }
            Witness::ExceedsBound { set, value, bound } => {
                format!("f({}) = {} > {}", s(set), v(value), v(bound))
            }
            Witness::NotCompact {
                element,
                without,
                full,
            } => format!(
                "e = {}: r(E-e) = {} != {} = r(E)",
                ground.label(*element),
                v(without),
                v(full)
            ),
            Witness::ExceedsNorm {
                smaller,
                larger,
                increase,
                norm,
            } => format!(
                "X = {}, Y = {}: f(Y) - f(X) = {} > {} = ||Y-X||",
                s(smaller),
                s(larger),
                v(increase),
                v(norm)
            ),
            Witness::Mismatch { set, left, right } => {
                format!("at {}: {} != {}", s(set), v(left), v(right))
            }
            Witness::GroundMismatch => "ground sets differ".to_string(),
        }
    }
}

/// Outcome of a check: either the property holds, or it fails with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub property: &'static str,
    pub witness: Option<Witness>,
    /// Human-readable rendering of the witness, with labels.
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn pass(property: &'static str) -> CheckReport {
        CheckReport {
            property,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(property: &'static str, witness: Witness, ground: &GroundSet) -> CheckReport {
        let detail = witness.describe(ground);
        CheckReport {
            property,
            witness: Some(witness),
            detail: Some(detail),
        }
    }

    pub(crate) fn from_option(
        property: &'static str,
        witness: Option<Witness>,
        ground: &GroundSet,
    ) -> CheckReport {
        match witness {
            None => CheckReport::pass(property),
            Some(w) => CheckReport::fail(property, w, ground),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    /// Keeps the first failing report, or the last one if all hold.
    pub(crate) fn first_failure(reports: impl IntoIterator<Item = CheckReport>) -> CheckReport {
        let mut last = None;
        for r in reports {
            if !r.holds() {
                return r;
            }
            last = Some(r);
        }
        last.expect("at least one report")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.detail {
            None => write!(f, "{}: holds", self.property),
            Some(d) => write!(f, "{}: fails ({})", self.property, d),
        }
    }
}

/// Values scaled to integers by a common denominator.
enum Scaled {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

fn scaled(f: &SetFunction) -> Scaled {
    let den = rat::common_denominator(f.table());
    let nums: Vec<BigInt> = f
        .table()
        .iter()
        .map(|v| v.numer() * (&den / v.denom()))
        .collect();
    // i64-range inputs leave headroom for two-term sums in i128
    match nums.iter().map(|n| n.to_i64().map(i128::from)).collect() {
        Some(small) => Scaled::Small(small),
        None => Scaled::Big(nums),
    }
}

trait Exact: Ord + Clone
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>,
{
}
impl Exact for i128 {}
impl Exact for BigInt {}

fn sum<T>(a: &T, b: &T) -> T
where
    T: Exact,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    a + b
}

/// First `(X, Y)` with `v(X&Y) + v(X|Y) > v(X) + v(Y)`.
fn submodular_violation_naive<T>(v: &[T]) -> Option<(Subset, Subset)>
where
    T: Exact,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    let size = v.len();
    for x in 0..size {
        for y in 0..size {
            let lhs = sum(&v[x & y], &v[x | y]);
            let rhs = sum(&v[x], &v[y]);
            if lhs > rhs {
                return Some((Subset(x as u32), Subset(y as u32)));
            }
        }
    }
    None
}

/// First `(X, a, b)` with `a < b` outside `X` and
/// `v(X+a) + v(X+b) < v(X+a+b) + v(X)`.
fn submodular_violation_local<T>(v: &[T], n: usize) -> Option<(Subset, usize, usize)>
where
    T: Exact,
    for<'a> &'a T: Add<&'a T, Output = T>,
{
    for x in 0..v.len() {
        for a in (0..n).filter(|a| x >> a & 1 == 0) {
            let xa = x | 1 << a;
            for b in (a + 1..n).filter(|b| x >> b & 1 == 0) {
                let xb = x | 1 << b;
                let lhs = sum(&v[xa], &v[xb]);
                let rhs = sum(&v[xa | xb], &v[x]);
                if lhs < rhs {
                    return Some((Subset(x as u32), a, b));
                }
            }
        }
    }
    None
}

fn decreasing_step<T: Ord>(v: &[T], n: usize) -> Option<(Subset, usize)> {
    for x in 0..v.len() {
        for a in (0..n).filter(|a| x >> a & 1 == 0) {
            if v[x] > v[x | 1 << a] {
                return Some((Subset(x as u32), a));
            }
        }
    }
    None
}

pub fn check_normalised(f: &SetFunction) -> CheckReport {
    let value = f.value(Subset::EMPTY);
    let witness = (!value.is_zero()).then(|| Witness::NotNormalised {
        value: value.clone(),
    });
    CheckReport::from_option("normalised", witness, f.ground())
}

pub fn check_symmetric(f: &SetFunction) -> CheckReport {
    let witness = all_subsets(f.len()).find_map(|s| {
        let c = f.ground().complement(s);
        (f.value(s) != f.value(c)).then(|| Witness::Asymmetric {
            set: s,
            value: f.value(s).clone(),
            complement_value: f.value(c).clone(),
        })
    });
    CheckReport::from_option("symmetric", witness, f.ground())
}

fn submodular_witness(f: &SetFunction, x: Subset, y: Subset) -> Witness {
    Witness::NotSubmodular {
        x,
        y,
        lhs: f.value(x.intersection(y)) + f.value(x.union(y)),
        rhs: f.value(x) + f.value(y),
    }
}

/// Submodularity straight from the definition: all `4^n` ordered pairs.
pub fn check_submodular_naive(f: &SetFunction) -> CheckReport {
    let found = match scaled(f) {
        Scaled::Small(v) => submodular_violation_naive(&v),
        Scaled::Big(v) => submodular_violation_naive(&v),
    };
    let witness = found.map(|(x, y)| submodular_witness(f, x, y));
    CheckReport::from_option("submodular", witness, f.ground())
}

/// Submodularity via the local exchange inequality
/// `f(X+a) + f(X+b) >= f(X+a+b) + f(X)` for distinct `a, b` outside `X`.
/// The witness is the violating pair `(X+a, X+b)`.
pub fn check_submodular_fast(f: &SetFunction) -> CheckReport {
    let n = f.len();
    let found = match scaled(f) {
        Scaled::Small(v) => submodular_violation_local(&v, n),
        Scaled::Big(v) => submodular_violation_local(&v, n),
    };
    let witness = found.map(|(x, a, b)| submodular_witness(f, x.with(a), x.with(b)));
    CheckReport::from_option("submodular", witness, f.ground())
}

pub fn check_submodular(f: &SetFunction) -> CheckReport {
    check_submodular_fast(f)
}

/// Monotonicity via single-element steps `f(X) <= f(X+a)`.
pub fn check_increasing(f: &SetFunction) -> CheckReport {
    let n = f.len();
    let found = match scaled(f) {
        Scaled::Small(v) => decreasing_step(&v, n),
        Scaled::Big(v) => decreasing_step(&v, n),
    };
    let witness = found.map(|(set, element)| Witness::Decreasing {
        set,
        element,
        before: f.value(set).clone(),
        after: f.value(set.with(element)).clone(),
    });
    CheckReport::from_option("increasing", witness, f.ground())
}

/// Monotonicity straight from the definition: every nested pair `X <= Y`.
pub fn check_increasing_naive(f: &SetFunction) -> CheckReport {
    let witness = all_subsets(f.len()).find_map(|y| {
        y.subsets().find_map(|x| {
            (f.value(x) > f.value(y)).then(|| Witness::NotMonotone {
                smaller: x,
                larger: y,
                lower: f.value(x).clone(),
                upper: f.value(y).clone(),
            })
        })
    });
    CheckReport::from_option("increasing", witness, f.ground())
}

/// `f(X) > 0` for every proper nonempty `X`.
pub fn check_connected(f: &SetFunction) -> CheckReport {
    let full = f.full();
    let witness = all_subsets(f.len())
        .filter(|&s| !s.is_empty() && s != full)
        .find_map(|s| {
            (!rat::is_positive(f.value(s))).then(|| Witness::NotPositive {
                set: s,
                value: f.value(s).clone(),
            })
        });
    CheckReport::from_option("connected", witness, f.ground())
}

pub fn check_integer_valued(f: &SetFunction) -> CheckReport {
    let witness = all_subsets(f.len()).find_map(|s| {
        (!rat::is_integer(f.value(s))).then(|| Witness::NotInteger {
            set: s,
            value: f.value(s).clone(),
        })
    });
    CheckReport::from_option("integer-valued", witness, f.ground())
}

pub fn check_half_integral(f: &SetFunction) -> CheckReport {
    let witness = all_subsets(f.len()).find_map(|s| {
        (!rat::is_half_integer(f.value(s))).then(|| Witness::NotHalfIntegral {
            set: s,
            value: f.value(s).clone(),
        })
    });
    CheckReport::from_option("half-integral", witness, f.ground())
}

/// Every singleton value is at most `bound`.
pub fn check_singleton_bound(f: &SetFunction, bound: &Rat) -> CheckReport {
    let witness = (0..f.len()).map(Subset::singleton).find_map(|s| {
        (f.value(s) > bound).then(|| Witness::ExceedsBound {
            set: s,
            value: f.value(s).clone(),
            bound: bound.clone(),
        })
    });
    CheckReport::from_option("singleton-bounded", witness, f.ground())
}

/// Every value is at most `bound`.
pub fn check_bounded(f: &SetFunction, bound: &Rat) -> CheckReport {
    let witness = all_subsets(f.len()).find_map(|s| {
        (f.value(s) > bound).then(|| Witness::ExceedsBound {
            set: s,
            value: f.value(s).clone(),
            bound: bound.clone(),
        })
    });
    CheckReport::from_option("bounded", witness, f.ground())
}

/// Normalised, symmetric and submodular; reports the first axiom that fails.
pub fn check_connectivity_function(f: &SetFunction) -> CheckReport {
    let report =
        CheckReport::first_failure([check_normalised(f), check_symmetric(f), check_submodular(f)]);
    CheckReport {
        property: "connectivity function",
        ..report
    }
}

/// Normalised, increasing and submodular; reports the first axiom that fails.
pub fn check_polymatroid(f: &SetFunction) -> CheckReport {
    let report = CheckReport::first_failure([
        check_normalised(f),
        check_increasing(f),
        check_submodular(f),
    ]);
    CheckReport {
        property: "polymatroid",
        ..report
    }
}

/// Every element `e` satisfies `r(E - e) = r(E)`.
pub fn check_compact(r: &SetFunction) -> CheckReport {
    let full = r.full();
    let witness = (0..r.len()).find_map(|e| {
        let without = r.value(full.without(e));
        (without != r.value(full)).then(|| Witness::NotCompact {
            element: e,
            without: without.clone(),
            full: r.value(full).clone(),
        })
    });
    CheckReport::from_option("compact", witness, r.ground())
}

/// Exact equality of two set functions, with the first differing subset as witness.
pub fn check_equal(property: &'static str, left: &SetFunction, right: &SetFunction) -> CheckReport {
    if left.ground() != right.ground() {
        return CheckReport::fail(property, Witness::GroundMismatch, left.ground());
    }
    let witness = left.first_difference(right).map(|set| Witness::Mismatch {
        set,
        left: left.value(set).clone(),
        right: right.value(set).clone(),
    });
    CheckReport::from_option(property, witness, left.ground())
}

/// `f(Y) - f(X) <= ||Y - X||_f` for every nested pair `X <= Y`.
pub fn check_increase_bounded_by_norm(f: &SetFunction) -> CheckReport {
    let norms = f.norm_table();
    let witness = all_subsets(f.len()).find_map(|y| {
        y.subsets().find_map(|x| {
            let increase = f.value(y) - f.value(x);
            let norm = &norms[y.difference(x).index()];
            (&increase > norm).then(|| Witness::ExceedsNorm {
                smaller: x,
                larger: y,
                increase,
                norm: norm.clone(),
            })
        })
    });
    CheckReport::from_option("increase bounded by norm", witness, f.ground())
}

/// `f(Z) <= ||Z||_f` for every `Z`.
pub fn check_bounded_by_norm(f: &SetFunction) -> CheckReport {
    let norms = f.norm_table();
    let witness = all_subsets(f.len()).find_map(|z| {
        let norm = &norms[z.index()];
        (f.value(z) > norm).then(|| Witness::ExceedsNorm {
            smaller: Subset::EMPTY,
            larger: z,
            increase: f.value(z) - f.value(Subset::EMPTY),
            norm: norm.clone(),
        })
    });
    CheckReport::from_option("bounded by norm", witness, f.ground())
}
