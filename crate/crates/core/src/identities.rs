//! Batteries of identities and inequalities that hold for every polymatroid
//! or connectivity function.
//!
//! A failure here is never a property of the input: it means a transform is
//! wrong. The batteries back the `lemmas` command and the acceptance tests.

use crate::check::{self, CheckReport, Witness};
use crate::classify::classify;
use crate::ground::{all_subsets, Subset};
use crate::ops::raw;
use crate::rat::{self, int, Rat};
use crate::setfn::SetFunction;

/// Largest ground set for which identities quantified over all subsets `A` run.
pub const DEFAULT_SUBSET_LIMIT: usize = 10;

/// One named identity: checked, or skipped because the input is too large.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub report: Option<CheckReport>,
}

impl IdentityResult {
    fn checked(name: &'static str, report: CheckReport) -> IdentityResult {
        IdentityResult {
            name,
            report: Some(CheckReport {
                property: name,
                ..report
            }),
        }
    }

    fn skipped(name: &'static str) -> IdentityResult {
        IdentityResult { name, report: None }
    }

    pub fn passed(&self) -> bool {
        self.report.as_ref().is_none_or(CheckReport::holds)
    }
}

/// Runs `per_subset` for every `A` and keeps the first failure, annotated with `A`.
fn for_every_subset(
    f: &SetFunction,
    mut per_subset: impl FnMut(Subset) -> CheckReport,
) -> CheckReport {
    for a in all_subsets(f.len()) {
        let report = per_subset(a);
        if !report.holds() {
            let detail = format!(
                "A = {}: {}",
                f.ground().format(a),
                report.detail.clone().unwrap_or_default()
            );
            return CheckReport {
                detail: Some(detail),
                ..report
            };
        }
    }
    CheckReport::pass("")
}

fn compact_characterizations_agree(r: &SetFunction) -> CheckReport {
    let by_span = raw::compact_elements(r);
    let by_connectivity = raw::compact_elements_by_connectivity(r);
    let lambda = raw::connectivity(r);
    let witness = (0..r.len())
        .find(|&e| by_span.contains(e) != by_connectivity.contains(e))
        .map(|e| Witness::Mismatch {
            set: Subset::singleton(e),
            left: r.singleton(e).clone(),
            right: lambda.singleton(e).clone(),
        });
    CheckReport::from_option("", witness, r.ground())
}

/// Identities for a polymatroid `r`. Returns nothing if `r` is not one.
pub fn polymatroid_identities(r: &SetFunction, subset_limit: usize) -> Vec<IdentityResult> {
    if !check::check_polymatroid(r).holds() {
        return Vec::new();
    }
    let lambda = raw::connectivity(r);
    let dual = raw::dual(r);
    let flat = raw::compactify(r);
    let exhaustive = r.len() <= subset_limit;
    let mut out = vec![
        IdentityResult::checked("dual is a polymatroid", check::check_polymatroid(&dual)),
        IdentityResult::checked(
            "dual has the same connectivity function",
            check::check_equal("", &raw::connectivity(&dual), &lambda),
        ),
        IdentityResult::checked("dual is compact", check::check_compact(&dual)),
        IdentityResult::checked(
            "double dual is the compactification",
            check::check_equal("", &raw::dual(&dual), &flat),
        ),
        IdentityResult::checked(
            "compactification is a polymatroid",
            check::check_polymatroid(&flat),
        ),
        IdentityResult::checked(
            "compactification has the same connectivity function",
            check::check_equal("", &raw::connectivity(&flat), &lambda),
        ),
        IdentityResult::checked("compactification is compact", check::check_compact(&flat)),
        IdentityResult::checked(
            "compact elements: spanning and connectivity characterizations agree",
            compact_characterizations_agree(r),
        ),
        IdentityResult::checked(
            "rank increase bounded by norm",
            check::check_increase_bounded_by_norm(r),
        ),
    ];

    if exhaustive {
        out.push(IdentityResult::checked(
            "contractions of a compact polymatroid are compact",
            for_every_subset(r, |a| {
                let mut report = check::check_compact(&raw::contract(&dual, a));
                if check::check_compact(r).holds() && report.holds() {
                    report = check::check_compact(&raw::contract(r, a));
                }
                report
            }),
        ));
        out.push(IdentityResult::checked(
            "dual of contraction is compactified deletion of dual",
            for_every_subset(r, |a| {
                check::check_equal(
                    "",
                    &raw::dual(&raw::contract(r, a)),
                    &raw::compactify(&raw::delete(&dual, a)),
                )
            }),
        ));
    } else {
        out.push(IdentityResult::skipped(
            "contractions of a compact polymatroid are compact",
        ));
        out.push(IdentityResult::skipped(
            "dual of contraction is compactified deletion of dual",
        ));
    }

    let k = r.max_singleton().cloned().unwrap_or_else(|| int(0));
    out.push(IdentityResult::checked(
        "k-dual is an involution",
        check::check_equal("", &raw::k_dual(&raw::k_dual(r, &k), &k), r),
    ));
    out.push(k_dual_swaps_minors(r, &k, exhaustive));

    if classify(r).is_matroid() && (0..r.len()).all(|i| *r.singleton(i) == int(1)) {
        out.extend(loopless_matroid_identities(r));
    }
    out.extend(connectivity_identities(&lambda));
    out
}

fn k_dual_swaps_minors(r: &SetFunction, k: &Rat, exhaustive: bool) -> IdentityResult {
    let name = "k-dual swaps deletion and contraction";
    if !exhaustive {
        return IdentityResult::skipped(name);
    }
    let kd = raw::k_dual(r, k);
    IdentityResult::checked(
        name,
        for_every_subset(r, |x| {
            check::check_equal(
                "",
                &raw::k_dual(&raw::delete(r, x), k),
                &raw::contract(&kd, x),
            )
        }),
    )
}

/// Identities for the rank function of a loopless matroid.
pub fn loopless_matroid_identities(r: &SetFunction) -> Vec<IdentityResult> {
    let one = int(1);
    let lambda = raw::connectivity(r);
    let dual_rank = raw::k_dual(r, &one);
    let total = crate::ops::sum(r, &dual_rank).expect("same ground");
    let expected = SetFunction::from_fn(r.ground().clone(), |x| {
        lambda.value(x) + int(x.len() as i64)
    });
    vec![
        IdentityResult::checked(
            "rank plus dual rank is connectivity plus size",
            check::check_equal("", &total, &expected),
        ),
        IdentityResult::checked(
            "rank plus dual rank has doubled connectivity",
            check::check_equal(
                "",
                &raw::connectivity(&total),
                &raw::scale(&lambda, &int(2)),
            ),
        ),
        IdentityResult::checked(
            "dual agrees with the 1-dual",
            check::check_equal("", &raw::dual(r), &dual_rank),
        ),
    ]
}

/// Identities for a connectivity function. Returns nothing if `lambda` is not one.
pub fn connectivity_identities(lambda: &SetFunction) -> Vec<IdentityResult> {
    if !check::check_connectivity_function(lambda).holds() {
        return Vec::new();
    }
    let induced = raw::induced_polymatroid(lambda);
    let canonical = raw::canonical_self_dual(lambda);
    let mut out = vec![
        IdentityResult::checked(
            "connectivity bounded by norm",
            check::check_bounded_by_norm(lambda),
        ),
        IdentityResult::checked(
            "connectivity increase bounded by norm",
            check::check_increase_bounded_by_norm(lambda),
        ),
        IdentityResult::checked(
            "induced polymatroid is a polymatroid",
            check::check_polymatroid(&induced),
        ),
        IdentityResult::checked(
            "induced polymatroid is compact",
            check::check_compact(&induced),
        ),
        IdentityResult::checked(
            "induced polymatroid is self-dual",
            check::check_equal("", &raw::dual(&induced), &induced),
        ),
        IdentityResult::checked(
            "induced polymatroid has doubled connectivity",
            check::check_equal(
                "",
                &raw::connectivity(&induced),
                &raw::scale(lambda, &int(2)),
            ),
        ),
        IdentityResult::checked(
            "canonical self-dual polymatroid is a compact polymatroid",
            CheckReport::first_failure([
                check::check_polymatroid(&canonical),
                check::check_compact(&canonical),
            ]),
        ),
        IdentityResult::checked(
            "canonical self-dual polymatroid is self-dual",
            check::check_equal("", &raw::dual(&canonical), &canonical),
        ),
        IdentityResult::checked(
            "canonical self-dual polymatroid has the same connectivity function",
            check::check_equal("", &raw::connectivity(&canonical), lambda),
        ),
    ];
    if lambda.table().iter().all(rat::is_integer) {
        out.push(IdentityResult::checked(
            "canonical self-dual polymatroid is half-integral",
            check::check_half_integral(&canonical),
        ));
    }
    out
}

/// Every identity that applies to `f`.
pub fn all_identities(f: &SetFunction, subset_limit: usize) -> Vec<IdentityResult> {
    let mut out = polymatroid_identities(f, subset_limit);
    if out.is_empty() {
        out = connectivity_identities(f);
    }
    out
}
