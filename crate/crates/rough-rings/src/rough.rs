//! Rough approximations of ring subsets relative to an ideal, and the
//! element-set sum and product they interact with.
//!
//! The operators here work directly from the ring tables: for each element
//! `x` the coset `x + I` is built and compared against the subset under
//! study. The equivalent route through [`Ideal::coset_partition`] and the
//! generic space operators exists independently, and the auditor checks both
//! against each other on every instance it evaluates.

use std::fmt;

use thiserror::Error;

use crate::ideal::Ideal;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operand {0} must be a non-empty set")]
    EmptyOperand(&'static str),
}

/// How the element-set sum `A + B` is read.
///
/// `Pairwise` is the standard reading `{a + b : a in A, b in B}`;
/// `Closure` additionally closes the pairwise sums under addition, so it
/// contains every finite sum `(a1+b1) + .. + (ak+bk)`. The auditor can run
/// under either reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    Pairwise,
    Closure,
}

impl fmt::Display for SumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumMode::Pairwise => "pairwise",
            SumMode::Closure => "closure",
        })
    }
}

/// The approximation bundle for one subset relative to one ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoughApproximation {
    pub subset: ElementSet,
    /// Member set of the ideal the approximation is relative to.
    pub ideal: ElementSet,
    pub lower: ElementSet,
    pub upper: ElementSet,
    pub boundary: ElementSet,
    pub rough: bool,
}

/// Elements whose coset meets `x`: the upper approximation of `x` with
/// respect to the ideal. Always a union of cosets containing `x`.
pub fn upper(ideal: &Ideal<'_>, x: &ElementSet) -> ElementSet {
    let ring = ideal.ring();
    check_universe(ring, x);
    let mut out = ElementSet::empty(ring.size());
    for e in ring.elements() {
        if ideal.coset_of(e).intersects(x) {
            out.insert(e);
        }
    }
    out
}

/// Elements whose coset is contained in `x`: the lower approximation.
pub fn lower(ideal: &Ideal<'_>, x: &ElementSet) -> ElementSet {
    let ring = ideal.ring();
    check_universe(ring, x);
    let mut out = ElementSet::empty(ring.size());
    for e in ring.elements() {
        if ideal.coset_of(e).is_subset_of(x) {
            out.insert(e);
        }
    }
    out
}

/// Bundles lower, upper, boundary, and the roughness verdict.
pub fn approximate(ideal: &Ideal<'_>, x: &ElementSet) -> RoughApproximation {
    let lower = lower(ideal, x);
    let upper = upper(ideal, x);
    let boundary = upper.difference(&lower);
    debug_assert!(lower.is_subset_of(x) && x.is_subset_of(&upper));
    RoughApproximation {
        subset: *x,
        ideal: ideal.members(),
        lower,
        upper,
        boundary,
        rough: !boundary.is_empty(),
    }
}

/// The element-set sum `A + B` of two non-empty subsets, under the chosen
/// reading of the sum.
pub fn set_sum(
    ring: &FiniteRing,
    a: &ElementSet,
    b: &ElementSet,
    mode: SumMode,
) -> Result<ElementSet, AlgebraError> {
    check_operands(ring, a, b)?;
    let pairwise = ring.pairwise_sum(a, b);
    Ok(match mode {
        SumMode::Pairwise => pairwise,
        SumMode::Closure => ring.sum_closure(&pairwise),
    })
}

/// The element-set product `A · B` of two non-empty subsets: all finite sums
/// `a1*b1 + .. + ak*bk` with `k >= 1`. Computed as the additive closure of
/// the pairwise products; the empty sum is excluded, so zero appears only
/// when some combination reaches it.
pub fn set_product(
    ring: &FiniteRing,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<ElementSet, AlgebraError> {
    check_operands(ring, a, b)?;
    Ok(ring.sum_closure(&ring.pairwise_product(a, b)))
}

fn check_operands(
    ring: &FiniteRing,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<(), AlgebraError> {
    check_universe(ring, a);
    check_universe(ring, b);
    if a.is_empty() {
        return Err(AlgebraError::EmptyOperand("A"));
    }
    if b.is_empty() {
        return Err(AlgebraError::EmptyOperand("B"));
    }
    Ok(())
}

fn check_universe(ring: &FiniteRing, x: &ElementSet) {
    assert_eq!(
        x.universe_size(),
        ring.size(),
        "subset indexes a different ring than this ideal"
    );
}
