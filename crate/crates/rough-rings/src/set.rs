//! Bit-indexed subsets of a fixed finite universe.
//!
//! Every set in this crate lives inside a universe of at most [`MAX_UNIVERSE`]
//! elements, identified by indices `0..n`. That keeps a set in one machine
//! word, so the exhaustive subset sweeps the auditor runs stay cheap.

use std::fmt;

use thiserror::Error;

/// Largest universe a set can index. Universes beyond this are rejected at
/// construction time by every entry point in the crate.
pub const MAX_UNIVERSE: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetError {
    #[error("universe size {0} exceeds the supported maximum of {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("element index {index} is out of bounds for a universe of size {universe}")]
    IndexOutOfBounds { index: usize, universe: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SetParseError {
    #[error("set literal `{0}` must be braced, e.g. {{0,2,4}} or {{}}")]
    Syntax(String),
    #[error("`{0}` is not a nonnegative integer")]
    BadElement(String),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// A subset of `{0, .., universe-1}`, stored as a bit pattern.
///
/// Two sets are equal iff they have the same universe size and members;
/// ordering is by universe, then cardinality, then bit pattern, which is the
/// canonical order used for ideal listings and counterexample witnesses.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: u64,
    universe: usize,
}

fn universe_mask(universe: usize) -> u64 {
    if universe == MAX_UNIVERSE {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

impl ElementSet {
    /// The empty subset of a universe of size `universe`.
    ///
    /// Panics if `universe` exceeds [`MAX_UNIVERSE`]; universes are validated
    /// by the ring and space constructors before sets are ever built.
    pub fn empty(universe: usize) -> Self {
        assert!(
            universe <= MAX_UNIVERSE,
            "universe size {universe} exceeds the supported maximum of {MAX_UNIVERSE}"
        );
        ElementSet { bits: 0, universe }
    }

    /// The whole universe.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits = universe_mask(universe);
        s
    }

    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = usize>,
    {
        if universe > MAX_UNIVERSE {
            return Err(SetError::UniverseTooLarge(universe));
        }
        let mut s = Self::empty(universe);
        for index in indices {
            if index >= universe {
                return Err(SetError::IndexOutOfBounds { index, universe });
            }
            s.bits |= 1 << index;
        }
        Ok(s)
    }

    /// Reinterprets a raw bit pattern as a set. The pattern must fit inside
    /// the universe.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        let s = Self::empty(universe);
        assert!(
            bits & !universe_mask(universe) == 0,
            "bit pattern {bits:#x} has members outside a universe of size {universe}"
        );
        ElementSet { bits, ..s }
    }

    /// Parses a braced literal such as `{0,2,4}` or `{}`. Whitespace around
    /// elements is ignored.
    pub fn parse(universe: usize, text: &str) -> Result<Self, SetParseError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| SetParseError::Syntax(text.to_string()))?;
        let mut indices = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                if inner.trim().is_empty() {
                    break; // `{}`
                }
                return Err(SetParseError::Syntax(text.to_string()));
            }
            let index: usize = piece
                .parse()
                .map_err(|_| SetParseError::BadElement(piece.to_string()))?;
            indices.push(index);
        }
        Ok(Self::from_indices(universe, indices)?)
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.bits & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(
            index < self.universe,
            "element index {index} is out of bounds for a universe of size {}",
            self.universe
        );
        self.bits |= 1 << index;
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "sets from different universes cannot be combined"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        ElementSet { bits: self.bits | other.bits, universe: self.universe }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        ElementSet { bits: self.bits & other.bits, universe: self.universe }
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        ElementSet { bits: self.bits & !other.bits, universe: self.universe }
    }

    pub fn complement(&self) -> Self {
        ElementSet {
            bits: !self.bits & universe_mask(self.universe),
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.bits & other.bits != 0
    }

    pub fn iter(&self) -> Indices {
        Indices { bits: self.bits }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `2^universe` subsets in ascending bit-pattern order. Only sensible
    /// for small universes; callers cap the size before asking.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = ElementSet> {
        assert!(universe <= 32, "subset enumeration over {universe} elements is infeasible");
        (0..(1u64 << universe)).map(move |bits| ElementSet { bits, universe })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.universe, self.len(), self.bits).cmp(&(other.universe, other.len(), other.bits))
    }
}

/// Iterator over the member indices of a set, ascending.
pub struct Indices {
    bits: u64,
}

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let index = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(index)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, index) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{index}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/U{}", self.universe)
    }
}
