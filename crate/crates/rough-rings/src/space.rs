//! Finite approximation spaces: a universe partitioned into equivalence
//! classes, with the classical lower/upper approximation operators.
//!
//! A space can be built from an explicit partition, from a class assignment,
//! or from an equivalence relation given as index pairs (which is validated
//! for reflexivity, symmetry, and transitivity before the classes are read
//! off).

use thiserror::Error;

use crate::set::{ElementSet, MAX_UNIVERSE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("universe size {0} exceeds the supported maximum of {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("block {block} indexes a universe of size {found}, expected {expected}")]
    BlockUniverseMismatch { block: usize, found: usize, expected: usize },
    #[error("element {0} appears in more than one block")]
    OverlappingBlocks(usize),
    #[error("element {0} is not covered by any block")]
    UncoveredElement(usize),
    #[error("element index {index} is out of bounds for a universe of size {universe}")]
    IndexOutOfBounds { index: usize, universe: usize },
    #[error("expected {labels} class assignments, got {classes}")]
    ClassCountMismatch { labels: usize, classes: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("relation is not reflexive: pair ({0},{0}) is missing")]
    NotReflexive(usize),
    #[error("relation is not symmetric: ({a},{b}) is present but ({b},{a}) is missing")]
    NotSymmetric { a: usize, b: usize },
    #[error("relation is not transitive: ({a},{b}) and ({b},{c}) hold but ({a},{c}) is missing")]
    NotTransitive { a: usize, b: usize, c: usize },
    #[error("pair ({a},{b}) is out of bounds for a universe of size {universe}")]
    PairOutOfBounds { a: usize, b: usize, universe: usize },
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A universe with an equivalence partition. Elements are canonical indices
/// `0..n`; the labels are presentation-only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    labels: Vec<String>,
    blocks: Vec<ElementSet>,
    class_of: Vec<usize>,
}

impl ApproximationSpace {
    /// Builds a space from partition blocks. The blocks must be nonempty,
    /// pairwise disjoint, and cover the universe.
    pub fn new(labels: Vec<String>, blocks: Vec<ElementSet>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n == 0 {
            return Err(SpaceError::EmptyUniverse);
        }
        if n > MAX_UNIVERSE {
            return Err(SpaceError::UniverseTooLarge(n));
        }
        let mut class_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.universe_size() != n {
                return Err(SpaceError::BlockUniverseMismatch {
                    block: b,
                    found: block.universe_size(),
                    expected: n,
                });
            }
            if block.is_empty() {
                return Err(SpaceError::EmptyBlock(b));
            }
            for x in block.iter() {
                if class_of[x] != usize::MAX {
                    return Err(SpaceError::OverlappingBlocks(x));
                }
                class_of[x] = b;
            }
        }
        if let Some(x) = class_of.iter().position(|&b| b == usize::MAX) {
            return Err(SpaceError::UncoveredElement(x));
        }
        Ok(ApproximationSpace { labels, blocks, class_of })
    }

    /// Builds a space from an element-to-class assignment. Class ids may be
    /// arbitrary; blocks are created in order of first appearance.
    pub fn from_classes(labels: Vec<String>, class_of: &[usize]) -> Result<Self, SpaceError> {
        let n = labels.len();
        if class_of.len() != n {
            return Err(SpaceError::ClassCountMismatch { labels: n, classes: class_of.len() });
        }
        if n == 0 {
            return Err(SpaceError::EmptyUniverse);
        }
        if n > MAX_UNIVERSE {
            return Err(SpaceError::UniverseTooLarge(n));
        }
        let mut ids: Vec<usize> = Vec::new();
        let mut blocks: Vec<ElementSet> = Vec::new();
        for (x, &id) in class_of.iter().enumerate() {
            let b = match ids.iter().position(|&seen| seen == id) {
                Some(b) => b,
                None => {
                    ids.push(id);
                    blocks.push(ElementSet::empty(n));
                    blocks.len() - 1
                }
            };
            blocks[b].insert(x);
        }
        Self::new(labels, blocks)
    }

    /// Builds a space from an equivalence relation given as ordered index
    /// pairs. The relation is checked to be reflexive, symmetric, and
    /// transitive; the first violation found (in ascending index order) is
    /// reported.
    pub fn from_relation(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self, RelationError> {
        let n = labels.len();
        if n == 0 {
            return Err(SpaceError::EmptyUniverse.into());
        }
        if n > MAX_UNIVERSE {
            return Err(SpaceError::UniverseTooLarge(n).into());
        }
        // Row x holds the bit pattern of {y : (x,y) in R}.
        let mut rows = vec![0u64; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(RelationError::PairOutOfBounds { a, b, universe: n });
            }
            rows[a] |= 1 << b;
        }
        for (x, row) in rows.iter().enumerate() {
            if row & (1 << x) == 0 {
                return Err(RelationError::NotReflexive(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if rows[a] & (1 << b) != 0 && rows[b] & (1 << a) == 0 {
                    return Err(RelationError::NotSymmetric { a, b });
                }
            }
        }
        // Transitive iff row_a covers row_b whenever (a,b) holds.
        for a in 0..n {
            for b in 0..n {
                if rows[a] & (1 << b) != 0 {
                    let missing = rows[b] & !rows[a];
                    if missing != 0 {
                        let c = missing.trailing_zeros() as usize;
                        return Err(RelationError::NotTransitive { a, b, c });
                    }
                }
            }
        }
        // For an equivalence relation each row is the class of its element;
        // keep one block per class, ordered by least representative.
        let mut blocks = Vec::new();
        for (x, &row) in rows.iter().enumerate() {
            if row.trailing_zeros() as usize == x {
                blocks.push(ElementSet::from_bits(n, row));
            }
        }
        Ok(Self::new(labels, blocks)?)
    }

    pub fn universe_size(&self) -> usize {
        self.labels.len()
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.universe_size())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    pub fn class_index_of(&self, x: usize) -> Result<usize, SpaceError> {
        if x >= self.universe_size() {
            return Err(SpaceError::IndexOutOfBounds { index: x, universe: self.universe_size() });
        }
        Ok(self.class_of[x])
    }

    /// The equivalence class containing `x`.
    pub fn equivalence_class(&self, x: usize) -> Result<ElementSet, SpaceError> {
        Ok(self.blocks[self.class_index_of(x)?])
    }

    /// Union of the blocks that meet `x`: the elements possibly in `x`.
    pub fn upper(&self, x: &ElementSet) -> ElementSet {
        self.check_universe(x);
        let mut out = ElementSet::empty(self.universe_size());
        for block in &self.blocks {
            if block.intersects(x) {
                out = out.union(block);
            }
        }
        out
    }

    /// Union of the blocks contained in `x`: the elements certainly in `x`.
    pub fn lower(&self, x: &ElementSet) -> ElementSet {
        self.check_universe(x);
        let mut out = ElementSet::empty(self.universe_size());
        for block in &self.blocks {
            if block.is_subset_of(x) {
                out = out.union(block);
            }
        }
        out
    }

    pub fn boundary(&self, x: &ElementSet) -> ElementSet {
        self.upper(x).difference(&self.lower(x))
    }

    /// A set is rough exactly when its boundary region is nonempty.
    pub fn is_rough(&self, x: &ElementSet) -> bool {
        !self.boundary(x).is_empty()
    }

    pub fn is_exact(&self, x: &ElementSet) -> bool {
        !self.is_rough(x)
    }

    pub fn describe(&self) -> String {
        format!(
            "approximation space (|U|={}, {} classes)",
            self.universe_size(),
            self.blocks.len()
        )
    }

    fn check_universe(&self, x: &ElementSet) {
        assert_eq!(
            x.universe_size(),
            self.universe_size(),
            "subset indexes a different universe than this space"
        );
    }
}

/// Convenience for tests and examples: numbered labels `prefix1..prefixN`.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}
