//! Brute-force and seeded-randomized verification of the approximation
//! identities, producing verdicts and minimal counterexample witnesses.
//!
//! Coverage is tiered by universe size. In exhaustive mode, single-set items
//! sweep all `2^n` subsets and two-set items sweep all pairs while
//! `n <= 8`; above that, two-set items fall back to seeded sampling so a full
//! audit stays fast. Randomized mode samples everything. The sampler is a
//! SplitMix64 stream (recorded in the report as `splitmix64`) drawing
//! uniformly over nonempty bit patterns, with an independent substream per
//! report entry, so identical inputs always produce identical reports.
//!
//! Ring audits evaluate every operator application twice: once with the
//! direct coset arithmetic in [`crate::rough`] and once through the generic
//! partition operators on [`Ideal::coset_partition`]. Any disagreement
//! aborts the audit; it would mean a bug in one of the routes.
//!
//! When an audit finds violations of an item, it reports the witness that is
//! first in canonical order (total set size, then bit patterns), selected by
//! comparison over all violations found, and re-evaluates the item on that
//! witness before reporting it.

use std::fmt;

use thiserror::Error;

use crate::ideal::Ideal;
use crate::report::{AuditReport, PropertyEntry, PropertyGroup, StrategyEcho, Verdict};
use crate::ring::FiniteRing;
use crate::rough::{self, SumMode};
use crate::set::ElementSet;
use crate::space::ApproximationSpace;

/// Identifier of the sample generator, echoed in every report.
pub const GENERATOR_ID: &str = "splitmix64";
/// Universe size up to which two-set items are audited over all pairs.
pub const EXHAUSTIVE_PAIR_UNIVERSE_CAP: usize = 8;
/// Default ceiling for exhaustive single-set sweeps.
pub const DEFAULT_MAX_EXHAUSTIVE_UNIVERSE: usize = 16;
pub const DEFAULT_SAMPLE_COUNT: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditMode {
    Exhaustive,
    Randomized,
}

impl fmt::Display for AuditMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditMode::Exhaustive => "exhaustive",
            AuditMode::Randomized => "randomized",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strategy {
    pub mode: AuditMode,
    pub max_universe_for_exhaustive: usize,
    pub sample_count: u64,
    pub seed: u64,
}

impl Strategy {
    pub fn exhaustive() -> Self {
        Strategy {
            mode: AuditMode::Exhaustive,
            max_universe_for_exhaustive: DEFAULT_MAX_EXHAUSTIVE_UNIVERSE,
            sample_count: DEFAULT_SAMPLE_COUNT,
            seed: 0,
        }
    }

    pub fn randomized(sample_count: u64, seed: u64) -> Self {
        Strategy {
            mode: AuditMode::Randomized,
            max_universe_for_exhaustive: DEFAULT_MAX_EXHAUSTIVE_UNIVERSE,
            sample_count,
            seed,
        }
    }

    pub fn with_samples(mut self, sample_count: u64) -> Self {
        self.sample_count = sample_count;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn echo(&self) -> StrategyEcho {
        StrategyEcho {
            mode: self.mode.to_string(),
            max_universe_for_exhaustive: self.max_universe_for_exhaustive,
            sample_count: self.sample_count,
            seed: self.seed,
            generator: GENERATOR_ID.to_string(),
        }
    }
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::exhaustive()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("universe of size {size} is too large for an exhaustive audit (cap {max}); use a randomized strategy")]
    UniverseTooLargeForExhaustive { size: usize, max: usize },
    #[error("ideal {ideal} is not maximal; pass force to audit it anyway")]
    NotMaximal { ideal: String },
    #[error("sampled audits need sample_count >= 1")]
    ZeroSampleCount,
}

/// SplitMix64: the deterministic stream behind randomized audits. Small,
/// stable across releases, and trivially seedable.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform over the `2^n - 1` nonempty subsets, by rejection.
    pub fn nonempty_subset(&mut self, universe: usize) -> ElementSet {
        assert!((1..=64).contains(&universe));
        let mask = if universe == 64 { u64::MAX } else { (1u64 << universe) - 1 };
        loop {
            let bits = self.next_u64() & mask;
            if bits != 0 {
                return ElementSet::from_bits(universe, bits);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Operator access, with the dual-route cross-check for ring audits.

trait RoughOps {
    fn universe_size(&self) -> usize;
    fn lower(&self, x: &ElementSet) -> ElementSet;
    fn upper(&self, x: &ElementSet) -> ElementSet;

    fn universe(&self) -> ElementSet {
        ElementSet::full(self.universe_size())
    }
}

struct SpaceOps<'a> {
    space: &'a ApproximationSpace,
}

impl RoughOps for SpaceOps<'_> {
    fn universe_size(&self) -> usize {
        self.space.universe_size()
    }

    fn lower(&self, x: &ElementSet) -> ElementSet {
        self.space.lower(x)
    }

    fn upper(&self, x: &ElementSet) -> ElementSet {
        self.space.upper(x)
    }
}

/// Computes each approximation along both routes and insists they agree.
struct IdealOps<'a, 'r> {
    ideal: &'a Ideal<'r>,
    oracle: ApproximationSpace,
}

impl<'a, 'r> IdealOps<'a, 'r> {
    fn new(ideal: &'a Ideal<'r>) -> Self {
        IdealOps { ideal, oracle: ideal.coset_partition() }
    }
}

impl RoughOps for IdealOps<'_, '_> {
    fn universe_size(&self) -> usize {
        self.ideal.ring().size()
    }

    fn lower(&self, x: &ElementSet) -> ElementSet {
        let direct = rough::lower(self.ideal, x);
        let via_partition = self.oracle.lower(x);
        assert_eq!(
            direct, via_partition,
            "lower({x}) disagrees between coset arithmetic and the partition operators; this is a bug"
        );
        direct
    }

    fn upper(&self, x: &ElementSet) -> ElementSet {
        let direct = rough::upper(self.ideal, x);
        let via_partition = self.oracle.upper(x);
        assert_eq!(
            direct, via_partition,
            "upper({x}) disagrees between coset arithmetic and the partition operators; this is a bug"
        );
        direct
    }
}

// ---------------------------------------------------------------------------
// Item tables.

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arity {
    Nullary,
    Unary,
    Binary,
}

/// Items whose printed forms are not well-typed are audited in their
/// standard Pawlak readings and flagged with this note.
pub const NOTE_CANONICAL_READING: &str = "canonical reading";

type Violation = (ElementSet, ElementSet);
type CheckFn<O> = fn(&O, &ElementSet, &ElementSet) -> Result<(), Violation>;

struct ItemDef<O> {
    item: u32,
    arity: Arity,
    note: Option<&'static str>,
    check: CheckFn<O>,
}

fn eq(lhs: ElementSet, rhs: ElementSet) -> Result<(), Violation> {
    if lhs == rhs {
        Ok(())
    } else {
        Err((lhs, rhs))
    }
}

fn subset(lhs: ElementSet, rhs: ElementSet) -> Result<(), Violation> {
    if lhs.is_subset_of(&rhs) {
        Ok(())
    } else {
        Err((lhs, rhs))
    }
}

/// The ten identities a partition's operators satisfy. Single-set items feed
/// on `a`; two-set items on `a` and `b`.
fn space_items<O: RoughOps>() -> Vec<ItemDef<O>> {
    vec![
        ItemDef {
            item: 1,
            arity: Arity::Unary,
            note: None,
            check: |o: &O, x: &ElementSet, _: &ElementSet| {
                subset(o.lower(x), *x)?;
                subset(*x, o.upper(x))
            },
        },
        ItemDef {
            item: 2,
            arity: Arity::Nullary,
            note: None,
            check: |o: &O, _: &ElementSet, _: &ElementSet| {
                let empty = ElementSet::empty(o.universe_size());
                let full = o.universe();
                eq(o.lower(&empty), empty)?;
                eq(o.upper(&empty), empty)?;
                eq(o.lower(&full), full)?;
                eq(o.upper(&full), full)
            },
        },
        ItemDef {
            item: 3,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, x: &ElementSet, y: &ElementSet| {
                subset(o.lower(x).union(&o.lower(y)), o.lower(&x.union(y)))
            },
        },
        ItemDef {
            item: 4,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, x: &ElementSet, y: &ElementSet| {
                eq(o.lower(&x.intersection(y)), o.lower(x).intersection(&o.lower(y)))
            },
        },
        ItemDef {
            item: 5,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, x: &ElementSet, y: &ElementSet| {
                eq(o.upper(&x.union(y)), o.upper(x).union(&o.upper(y)))
            },
        },
        ItemDef {
            item: 6,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, x: &ElementSet, y: &ElementSet| {
                subset(o.upper(&x.intersection(y)), o.upper(x).intersection(&o.upper(y)))
            },
        },
        ItemDef {
            item: 7,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, x: &ElementSet, _: &ElementSet| {
                eq(o.lower(&x.complement()), o.upper(x).complement())
            },
        },
        ItemDef {
            item: 8,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, x: &ElementSet, _: &ElementSet| {
                eq(o.upper(&x.complement()), o.lower(x).complement())
            },
        },
        ItemDef {
            item: 9,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, x: &ElementSet, _: &ElementSet| {
                let lo = o.lower(x);
                eq(o.lower(&lo), lo)?;
                eq(o.upper(&lo), lo)
            },
        },
        ItemDef {
            item: 10,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, x: &ElementSet, _: &ElementSet| {
                let up = o.upper(x);
                eq(o.upper(&up), up)?;
                eq(o.lower(&up), up)
            },
        },
    ]
}

/// The twelve identities shared by the maximal-ideal and principal-ideal
/// groups (coset exactness, item 13 of the principal group, is run
/// separately).
fn ring_items<O: RoughOps>() -> Vec<ItemDef<O>> {
    vec![
        ItemDef {
            item: 1,
            arity: Arity::Unary,
            note: None,
            check: |o: &O, a: &ElementSet, _: &ElementSet| {
                subset(o.lower(a), *a)?;
                subset(*a, o.upper(a))
            },
        },
        ItemDef {
            item: 2,
            arity: Arity::Nullary,
            note: None,
            check: |o: &O, _: &ElementSet, _: &ElementSet| {
                let empty = ElementSet::empty(o.universe_size());
                eq(o.lower(&empty), empty)?;
                eq(o.upper(&empty), empty)
            },
        },
        ItemDef {
            item: 3,
            arity: Arity::Nullary,
            note: None,
            check: |o: &O, _: &ElementSet, _: &ElementSet| {
                let full = o.universe();
                eq(o.lower(&full), full)?;
                eq(o.upper(&full), full)
            },
        },
        ItemDef {
            item: 4,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, a: &ElementSet, b: &ElementSet| {
                eq(o.lower(&a.intersection(b)), o.lower(a).intersection(&o.lower(b)))
            },
        },
        ItemDef {
            item: 5,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, a: &ElementSet, b: &ElementSet| {
                eq(o.upper(&a.union(b)), o.upper(a).union(&o.upper(b)))
            },
        },
        ItemDef {
            item: 6,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, a: &ElementSet, b: &ElementSet| {
                if !a.is_subset_of(b) {
                    return Ok(());
                }
                subset(o.lower(a), o.lower(b))?;
                subset(o.upper(a), o.upper(b))
            },
        },
        ItemDef {
            item: 7,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, a: &ElementSet, b: &ElementSet| {
                subset(o.lower(a).union(&o.lower(b)), o.lower(&a.union(b)))
            },
        },
        ItemDef {
            item: 8,
            arity: Arity::Binary,
            note: None,
            check: |o: &O, a: &ElementSet, b: &ElementSet| {
                subset(o.upper(&a.intersection(b)), o.upper(a).intersection(&o.upper(b)))
            },
        },
        ItemDef {
            item: 9,
            arity: Arity::Unary,
            note: None,
            check: |o: &O, a: &ElementSet, _: &ElementSet| {
                eq(o.lower(a), o.upper(&a.complement()).complement())
            },
        },
        ItemDef {
            item: 10,
            arity: Arity::Unary,
            note: None,
            check: |o: &O, a: &ElementSet, _: &ElementSet| {
                eq(o.upper(a), o.lower(&a.complement()).complement())
            },
        },
        ItemDef {
            item: 11,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, a: &ElementSet, _: &ElementSet| {
                let lo = o.lower(a);
                eq(o.lower(&lo), lo)?;
                eq(o.upper(&lo), lo)
            },
        },
        ItemDef {
            item: 12,
            arity: Arity::Unary,
            note: Some(NOTE_CANONICAL_READING),
            check: |o: &O, a: &ElementSet, _: &ElementSet| {
                let up = o.upper(a);
                eq(o.upper(&up), up)?;
                eq(o.lower(&up), up)
            },
        },
    ]
}

// ---------------------------------------------------------------------------
// Instance coverage.

#[derive(Clone, Copy)]
enum Coverage {
    Exhaustive,
    Sampled(u64),
}

#[derive(Clone, Copy)]
struct Plan {
    unary: Coverage,
    binary: Coverage,
}

fn resolve_plan(strategy: &Strategy, n: usize) -> Result<Plan, AuditError> {
    match strategy.mode {
        AuditMode::Exhaustive => {
            if n > strategy.max_universe_for_exhaustive {
                return Err(AuditError::UniverseTooLargeForExhaustive {
                    size: n,
                    max: strategy.max_universe_for_exhaustive,
                });
            }
            let binary = if n <= EXHAUSTIVE_PAIR_UNIVERSE_CAP {
                Coverage::Exhaustive
            } else {
                if strategy.sample_count == 0 {
                    return Err(AuditError::ZeroSampleCount);
                }
                Coverage::Sampled(strategy.sample_count)
            };
            Ok(Plan { unary: Coverage::Exhaustive, binary })
        }
        AuditMode::Randomized => {
            if strategy.sample_count == 0 {
                return Err(AuditError::ZeroSampleCount);
            }
            Ok(Plan {
                unary: Coverage::Sampled(strategy.sample_count),
                binary: Coverage::Sampled(strategy.sample_count),
            })
        }
    }
}

/// Independent deterministic substream for the entry at `ordinal` within
/// `group`.
fn entry_seed(base: u64, group: PropertyGroup, ordinal: usize) -> u64 {
    let tag = ((group as u64) << 32) | ordinal as u64;
    SplitMix64::new(base ^ tag).next_u64()
}

// ---------------------------------------------------------------------------
// Witness selection.

struct Witness {
    key: (usize, u64, u64),
    a: ElementSet,
    b: Option<ElementSet>,
    lhs: ElementSet,
    rhs: ElementSet,
}

fn witness_key(a: &ElementSet, b: Option<&ElementSet>) -> (usize, u64, u64) {
    (
        a.len() + b.map_or(0, ElementSet::len),
        a.bits(),
        b.map_or(0, ElementSet::bits),
    )
}

fn consider(
    worst: &mut Option<Witness>,
    a: ElementSet,
    b: Option<ElementSet>,
    violation: Violation,
) {
    let key = witness_key(&a, b.as_ref());
    if worst.as_ref().is_none_or(|w| key < w.key) {
        *worst = Some(Witness { key, a, b, lhs: violation.0, rhs: violation.1 });
    }
}

fn build_entry(
    group: PropertyGroup,
    item: u32,
    instances_tested: u64,
    worst: Option<Witness>,
    note: Option<&str>,
) -> PropertyEntry {
    match worst {
        None => PropertyEntry {
            group,
            item,
            verdict: Verdict::Holds,
            instances_tested,
            witness_a: None,
            witness_b: None,
            lhs: None,
            rhs: None,
            note: note.map(String::from),
        },
        Some(w) => PropertyEntry {
            group,
            item,
            verdict: Verdict::Counterexample,
            instances_tested,
            witness_a: Some(w.a.indices()),
            witness_b: w.b.map(|s| s.indices()),
            lhs: Some(w.lhs.indices()),
            rhs: Some(w.rhs.indices()),
            note: note.map(String::from),
        },
    }
}

// ---------------------------------------------------------------------------
// Runners.

fn run_item<O: RoughOps>(
    ops: &O,
    group: PropertyGroup,
    def: &ItemDef<O>,
    plan: &Plan,
    seed: u64,
) -> PropertyEntry {
    let n = ops.universe_size();
    let mut worst: Option<Witness> = None;
    let consider_pair = |worst: &mut Option<Witness>, a: ElementSet, b: Option<ElementSet>| {
        let probe = b.unwrap_or(a);
        if let Err(violation) = (def.check)(ops, &a, &probe) {
            consider(worst, a, b, violation);
        }
    };

    let instances_tested = match def.arity {
        Arity::Nullary => {
            consider_pair(&mut worst, ElementSet::empty(n), None);
            1
        }
        Arity::Unary => match plan.unary {
            Coverage::Exhaustive => {
                for a in ElementSet::all_subsets(n) {
                    consider_pair(&mut worst, a, None);
                }
                1u64 << n
            }
            Coverage::Sampled(count) => {
                let mut rng = SplitMix64::new(seed);
                for _ in 0..count {
                    let a = rng.nonempty_subset(n);
                    consider_pair(&mut worst, a, None);
                }
                count
            }
        },
        Arity::Binary => match plan.binary {
            Coverage::Exhaustive => {
                for a in ElementSet::all_subsets(n) {
                    for b in ElementSet::all_subsets(n) {
                        consider_pair(&mut worst, a, Some(b));
                    }
                }
                1u64 << (2 * n)
            }
            Coverage::Sampled(count) => {
                let mut rng = SplitMix64::new(seed);
                for _ in 0..count {
                    let a = rng.nonempty_subset(n);
                    let b = rng.nonempty_subset(n);
                    consider_pair(&mut worst, a, Some(b));
                }
                count
            }
        },
    };

    // Re-evaluate the selected witness; its violation must reproduce.
    if let Some(w) = &worst {
        let probe = w.b.unwrap_or(w.a);
        let violation = (def.check)(ops, &w.a, &probe)
            .expect_err("selected witness no longer violates the item; this is a bug");
        assert_eq!((violation.0, violation.1), (w.lhs, w.rhs), "witness re-evaluation drifted");
    }

    build_entry(group, def.item, instances_tested, worst, def.note)
}

fn run_table<O: RoughOps>(
    ops: &O,
    group: PropertyGroup,
    items: &[ItemDef<O>],
    plan: &Plan,
    seed: u64,
) -> Vec<PropertyEntry> {
    items
        .iter()
        .enumerate()
        .map(|(ordinal, def)| run_item(ops, group, def, plan, entry_seed(seed, group, ordinal)))
        .collect()
}

/// Coset exactness: every coset is its own lower and upper approximation.
/// Always swept over all ring elements.
fn run_coset_exactness(ops: &IdealOps<'_, '_>, ideal: &Ideal<'_>) -> PropertyEntry {
    let n = ops.universe_size();
    let mut worst: Option<Witness> = None;
    for x in 0..n {
        let coset = ideal.coset_of(x);
        let result = eq(ops.lower(&coset), coset).and_then(|()| eq(ops.upper(&coset), coset));
        if let Err(violation) = result {
            consider(&mut worst, coset, None, violation);
        }
    }
    build_entry(
        PropertyGroup::Prop4_1,
        13,
        n as u64,
        worst,
        Some("coset exactness: lower(x+I) = upper(x+I) = x+I for every x"),
    )
}

// ---------------------------------------------------------------------------
// The four audit entry points.

/// Audits the ten partition identities on an arbitrary approximation space.
pub fn audit_space_properties(
    space: &ApproximationSpace,
    strategy: &Strategy,
) -> Result<AuditReport, AuditError> {
    let plan = resolve_plan(strategy, space.universe_size())?;
    let ops = SpaceOps { space };
    let properties =
        run_table(&ops, PropertyGroup::SpaceProps, &space_items(), &plan, strategy.seed);
    Ok(AuditReport {
        ring: space.describe(),
        ideal: None,
        strategy: strategy.echo(),
        notes: vec![],
        properties,
    })
}

/// Audits the twelve identities for approximations relative to a maximal
/// ideal. Unless `force` is set, the ideal must actually be maximal; the
/// maximality precondition is checked by two independent methods (element
/// adjunction and ideal-lattice scan) which must agree.
pub fn audit_prop_3_1(
    ideal: &Ideal<'_>,
    strategy: &Strategy,
    force: bool,
) -> Result<AuditReport, AuditError> {
    let ring = ideal.ring();
    let plan = resolve_plan(strategy, ring.size())?;
    let maximal = ideal.is_maximal();
    let maximal_by_lattice = ideal.is_maximal_among(&Ideal::all(ring));
    assert_eq!(
        maximal, maximal_by_lattice,
        "maximality methods disagree for {ideal}; this is a bug"
    );
    let mut notes = Vec::new();
    if !maximal {
        if !force {
            return Err(AuditError::NotMaximal { ideal: ideal.to_string() });
        }
        notes.push(format!(
            "Prop3_1: forced: ideal {ideal} is not maximal; the identities hold for any ideal"
        ));
    }
    let ops = IdealOps::new(ideal);
    let properties = run_table(&ops, PropertyGroup::Prop3_1, &ring_items(), &plan, strategy.seed);
    Ok(AuditReport {
        ring: ring.name().to_string(),
        ideal: Some(ideal.to_string()),
        strategy: strategy.echo(),
        notes,
        properties,
    })
}

/// Audits the same twelve identities relative to an arbitrary ideal, plus
/// coset exactness as item 13. Whether the ideal is principal is recorded in
/// the report notes.
pub fn audit_prop_4_1(ideal: &Ideal<'_>, strategy: &Strategy) -> Result<AuditReport, AuditError> {
    let ring = ideal.ring();
    let plan = resolve_plan(strategy, ring.size())?;
    let classification = ideal.classify();
    let notes = vec![match classification.principal_generator {
        Some(g) => format!("Prop4_1: ideal is principal: true (generator {g})"),
        None => "Prop4_1: ideal is principal: false".to_string(),
    }];
    let ops = IdealOps::new(ideal);
    let mut properties =
        run_table(&ops, PropertyGroup::Prop4_1, &ring_items(), &plan, strategy.seed);
    properties.push(run_coset_exactness(&ops, ideal));
    Ok(AuditReport {
        ring: ring.name().to_string(),
        ideal: Some(ideal.to_string()),
        strategy: strategy.echo(),
        notes,
        properties,
    })
}

// The sum/product interaction laws relate approximations of A+B and A·B to
// sums and products of approximations. The stated equalities do not all
// hold; the two-sided claims are additionally decomposed into their separate
// inclusions so the report says exactly which direction fails.

enum Rel {
    Eq,
    SubsetEq,
}

struct LawDef {
    item: u32,
    note: &'static str,
    rel: Rel,
    eval: fn(&AlgebraCtx<'_, '_>, &ElementSet, &ElementSet) -> (ElementSet, ElementSet),
}

struct AlgebraCtx<'a, 'r> {
    ops: IdealOps<'a, 'r>,
    ring: &'r FiniteRing,
    mode: SumMode,
}

impl AlgebraCtx<'_, '_> {
    /// Set sum that treats an empty operand as an empty result, so laws
    /// about lower approximations stay evaluable when a lower is empty.
    fn sum(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        if a.is_empty() || b.is_empty() {
            return ElementSet::empty(self.ring.size());
        }
        rough::set_sum(self.ring, a, b, self.mode).expect("operands checked nonempty")
    }

    fn prod(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        if a.is_empty() || b.is_empty() {
            return ElementSet::empty(self.ring.size());
        }
        rough::set_product(self.ring, a, b).expect("operands checked nonempty")
    }

    fn lo(&self, x: &ElementSet) -> ElementSet {
        self.ops.lower(x)
    }

    fn up(&self, x: &ElementSet) -> ElementSet {
        self.ops.upper(x)
    }
}

fn algebra_laws() -> Vec<LawDef> {
    vec![
        LawDef {
            item: 1,
            note: "equality as stated: upper(A)+upper(B) = upper(A+B)",
            rel: Rel::Eq,
            eval: |c, a, b| (c.sum(&c.up(a), &c.up(b)), c.up(&c.sum(a, b))),
        },
        LawDef {
            item: 2,
            note: "equality as stated: upper(A)·upper(B) = upper(A·B)",
            rel: Rel::Eq,
            eval: |c, a, b| (c.prod(&c.up(a), &c.up(b)), c.up(&c.prod(a, b))),
        },
        LawDef {
            item: 2,
            note: "inclusion: upper(A)·upper(B) ⊆ upper(A·B)",
            rel: Rel::SubsetEq,
            eval: |c, a, b| (c.prod(&c.up(a), &c.up(b)), c.up(&c.prod(a, b))),
        },
        LawDef {
            item: 2,
            note: "inclusion: upper(A·B) ⊆ upper(A)·upper(B)",
            rel: Rel::SubsetEq,
            eval: |c, a, b| (c.up(&c.prod(a, b)), c.prod(&c.up(a), &c.up(b))),
        },
        LawDef {
            item: 3,
            note: "inclusion as stated: lower(A)+lower(B) ⊆ lower(A+B)",
            rel: Rel::SubsetEq,
            eval: |c, a, b| (c.sum(&c.lo(a), &c.lo(b)), c.lo(&c.sum(a, b))),
        },
        LawDef {
            item: 4,
            note: "inclusion as stated: lower(A)·lower(B) ⊆ lower(A·B)",
            rel: Rel::SubsetEq,
            eval: |c, a, b| (c.prod(&c.lo(a), &c.lo(b)), c.lo(&c.prod(a, b))),
        },
        LawDef {
            item: 4,
            note: "reverse inclusion: lower(A·B) ⊆ lower(A)·lower(B)",
            rel: Rel::SubsetEq,
            eval: |c, a, b| (c.lo(&c.prod(a, b)), c.prod(&c.lo(a), &c.lo(b))),
        },
    ]
}

fn law_violation(
    ctx: &AlgebraCtx<'_, '_>,
    def: &LawDef,
    a: &ElementSet,
    b: &ElementSet,
) -> Result<(), Violation> {
    let (lhs, rhs) = (def.eval)(ctx, a, b);
    match def.rel {
        Rel::Eq => eq(lhs, rhs),
        Rel::SubsetEq => subset(lhs, rhs),
    }
}

fn run_law(ctx: &AlgebraCtx<'_, '_>, def: &LawDef, plan: &Plan, seed: u64) -> PropertyEntry {
    let n = ctx.ring.size();
    let mut worst: Option<Witness> = None;
    let instances_tested = match plan.binary {
        Coverage::Exhaustive => {
            for a in ElementSet::all_subsets(n).skip(1) {
                for b in ElementSet::all_subsets(n).skip(1) {
                    if let Err(v) = law_violation(ctx, def, &a, &b) {
                        consider(&mut worst, a, Some(b), v);
                    }
                }
            }
            let nonempty = (1u64 << n) - 1;
            nonempty * nonempty
        }
        Coverage::Sampled(count) => {
            let mut rng = SplitMix64::new(seed);
            for _ in 0..count {
                let a = rng.nonempty_subset(n);
                let b = rng.nonempty_subset(n);
                if let Err(v) = law_violation(ctx, def, &a, &b) {
                    consider(&mut worst, a, Some(b), v);
                }
            }
            count
        }
    };
    if let Some(w) = &worst {
        let b = w.b.expect("law witnesses are pairs");
        let violation = law_violation(ctx, def, &w.a, &b)
            .expect_err("selected witness no longer violates the law; this is a bug");
        assert_eq!((violation.0, violation.1), (w.lhs, w.rhs), "witness re-evaluation drifted");
    }
    build_entry(PropertyGroup::Prop4_2, def.item, instances_tested, worst, Some(def.note))
}

/// Audits the four sum/product interaction laws over nonempty subset pairs.
/// The two equality/containment claims about products are decomposed into
/// separate inclusions, each with its own verdict. The sum reading
/// (`pairwise` or `closure`) applies to both sides of the sum laws and is
/// recorded in the report notes, as is the maximal-or-principal hypothesis.
pub fn audit_prop_4_2(
    ideal: &Ideal<'_>,
    strategy: &Strategy,
    sum_mode: SumMode,
) -> Result<AuditReport, AuditError> {
    let ring = ideal.ring();
    let plan = resolve_plan(strategy, ring.size())?;
    let classification = ideal.classify();
    let mut notes = vec![
        format!("Prop4_2: sum interpretation: {sum_mode}"),
        format!(
            "Prop4_2: hypothesis: ideal is maximal: {}, principal: {}",
            classification.is_maximal, classification.is_principal
        ),
    ];
    if !classification.is_maximal && !classification.is_principal {
        notes.push(
            "Prop4_2: warning: ideal is neither maximal nor principal; auditing anyway"
                .to_string(),
        );
    }
    let ctx = AlgebraCtx { ops: IdealOps::new(ideal), ring, mode: sum_mode };
    let properties = algebra_laws()
        .iter()
        .enumerate()
        .map(|(ordinal, def)| {
            run_law(&ctx, def, &plan, entry_seed(strategy.seed, PropertyGroup::Prop4_2, ordinal))
        })
        .collect();
    Ok(AuditReport {
        ring: ring.name().to_string(),
        ideal: Some(ideal.to_string()),
        strategy: strategy.echo(),
        notes,
        properties,
    })
}
