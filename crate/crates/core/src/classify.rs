use std::fmt;

use crate::check::{self, CheckReport};
use crate::rat::{format_rat, Rat};
use crate::setfn::SetFunction;

/// Every property of a set function that the library can decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub is_normalised: bool,
    pub is_symmetric: bool,
    pub is_submodular: bool,
    pub is_increasing: bool,
    pub is_connectivity_function: bool,
    pub is_polymatroid: bool,
    pub is_integer_valued: bool,
    pub is_half_integral: bool,
    /// Every singleton value is at most 1.
    pub is_unitary: bool,
    pub is_connected: bool,
    /// Only decided for polymatroids.
    pub is_compact: Option<bool>,
    /// Least `k` with `r(X) <= k` for all `X`; only for polymatroids.
    pub min_k: Option<Rat>,
    /// Largest singleton value, i.e. the least `k` bounding every `r({x})`;
    /// only for polymatroids on a nonempty ground set.
    pub element_bound: Option<Rat>,
}

impl Classification {
    /// Integer-valued polymatroid with every singleton value at most 1.
    pub fn is_matroid(&self) -> bool {
        self.is_polymatroid && self.is_integer_valued && self.is_unitary
    }
}

pub fn classify(f: &SetFunction) -> Classification {
    let holds = |r: CheckReport| r.holds();
    let is_normalised = holds(check::check_normalised(f));
    let is_symmetric = holds(check::check_symmetric(f));
    let is_submodular = holds(check::check_submodular(f));
    let is_increasing = holds(check::check_increasing(f));
    let is_polymatroid = is_normalised && is_submodular && is_increasing;
    let unit = crate::rat::int(1);
    Classification {
        is_normalised,
        is_symmetric,
        is_submodular,
        is_increasing,
        is_connectivity_function: is_normalised && is_symmetric && is_submodular,
        is_polymatroid,
        is_integer_valued: holds(check::check_integer_valued(f)),
        is_half_integral: holds(check::check_half_integral(f)),
        is_unitary: holds(check::check_singleton_bound(f, &unit)),
        is_connected: holds(check::check_connected(f)),
        is_compact: is_polymatroid.then(|| holds(check::check_compact(f))),
        min_k: is_polymatroid.then(|| f.max_value().clone()),
        element_bound: if is_polymatroid {
            f.max_singleton().cloned()
        } else {
            None
        },
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags = [
            ("normalised", self.is_normalised),
            ("symmetric", self.is_symmetric),
            ("submodular", self.is_submodular),
            ("increasing", self.is_increasing),
            ("connectivity-function", self.is_connectivity_function),
            ("polymatroid", self.is_polymatroid),
            ("matroid", self.is_matroid()),
            ("integer-valued", self.is_integer_valued),
            ("half-integral", self.is_half_integral),
            ("unitary", self.is_unitary),
            ("connected", self.is_connected),
        ];
        for (name, value) in flags {
            writeln!(f, "{name}: {}", yes_no(value))?;
        }
        match self.is_compact {
            Some(c) => writeln!(f, "compact: {}", yes_no(c))?,
            None => writeln!(f, "compact: n/a")?,
        }
        let show = |v: &Option<Rat>| v.as_ref().map_or("n/a".to_string(), format_rat);
        writeln!(f, "min-k: {}", show(&self.min_k))?;
        write!(f, "element-bound: {}", show(&self.element_bound))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
