//! Ideals of a finite commutative ring: membership validation, generation,
//! full enumeration, maximality and primality tests, and the coset partition
//! that turns a ring with an ideal into an approximation space.
//!
//! Ideal specs accepted by the CLI are parsed here: an explicit member set
//! `{0,3,6,9}`, `principal(<s>)`, `gen(<s1>,<s2>,...)`, and `maximal#<k>`
//! (the k-th maximal ideal in canonical order, counting from 1).

use std::fmt;

use thiserror::Error;

use crate::ring::FiniteRing;
use crate::set::{ElementSet, SetParseError};
use crate::space::ApproximationSpace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealViolation {
    #[error("the zero element is missing")]
    MissingZero,
    #[error("not closed under addition: {a} + {b} lands outside the set")]
    NotClosedUnderAddition { a: usize, b: usize },
    #[error("not closed under negation: -{0} lands outside the set")]
    NotClosedUnderNegation(usize),
    #[error("does not absorb ring multiplication: {r} * {i} lands outside the set")]
    NotAbsorbing { r: usize, i: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("not an ideal: {0}")]
    NotAnIdeal(#[from] IdealViolation),
    #[error("generator set must not be empty")]
    EmptyGeneratorSet,
    #[error("element {index} is out of bounds for a ring of size {size}")]
    ElementOutOfBounds { index: usize, size: usize },
}

#[derive(Debug, Error)]
pub enum IdealSpecError {
    #[error("cannot parse ideal spec `{0}`: expected {{..}}, principal(s), gen(s1,..), or maximal#k")]
    Syntax(String),
    #[error(transparent)]
    Literal(#[from] SetParseError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("ring has {available} maximal ideal(s); maximal#{k} does not exist")]
    NoSuchMaximal { k: usize, available: usize },
}

/// Checks the three ideal axioms, reporting the first violation found:
/// contains zero and is closed under negation, closed under addition, and
/// absorbs multiplication by arbitrary ring elements.
pub fn check_ideal(ring: &FiniteRing, set: &ElementSet) -> Result<(), IdealViolation> {
    assert_eq!(set.universe_size(), ring.size(), "set indexes a different ring");
    if !set.contains(ring.zero()) {
        return Err(IdealViolation::MissingZero);
    }
    for a in set.iter() {
        for b in set.iter() {
            if !set.contains(ring.add(a, b)) {
                return Err(IdealViolation::NotClosedUnderAddition { a, b });
            }
        }
    }
    for a in set.iter() {
        if !set.contains(ring.neg(a)) {
            return Err(IdealViolation::NotClosedUnderNegation(a));
        }
    }
    for r in ring.elements() {
        for i in set.iter() {
            if !set.contains(ring.mul(r, i)) {
                return Err(IdealViolation::NotAbsorbing { r, i });
            }
        }
    }
    Ok(())
}

pub fn is_ideal(ring: &FiniteRing, set: &ElementSet) -> bool {
    check_ideal(ring, set).is_ok()
}

/// Maximality, primality, and principality flags for one ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealClassification {
    pub is_proper: bool,
    pub is_maximal: bool,
    pub is_prime: bool,
    pub is_principal: bool,
    /// Smallest element generating the ideal, when principal.
    pub principal_generator: Option<usize>,
}

/// A validated ideal of a finite ring, with optional generator provenance.
#[derive(Debug, Clone)]
pub struct Ideal<'r> {
    ring: &'r FiniteRing,
    members: ElementSet,
    generators: Option<Vec<usize>>,
}

impl<'r> Ideal<'r> {
    /// Validates `members` against the ideal axioms.
    pub fn new(ring: &'r FiniteRing, members: ElementSet) -> Result<Self, IdealError> {
        check_ideal(ring, &members)?;
        Ok(Ideal { ring, members, generators: None })
    }

    /// The zero ideal `{0}`.
    pub fn zero(ring: &'r FiniteRing) -> Self {
        Ideal::principal(ring, ring.zero())
    }

    /// The principal ideal `{r*s : r in R}`.
    pub fn principal(ring: &'r FiniteRing, s: usize) -> Self {
        assert!(s < ring.size(), "generator index out of bounds");
        Ideal { ring, members: principal_members(ring, s), generators: Some(vec![s]) }
    }

    /// The smallest ideal containing the generators: the additive closure of
    /// all multiples of the generators.
    pub fn generated(ring: &'r FiniteRing, generators: &[usize]) -> Result<Self, IdealError> {
        if generators.is_empty() {
            return Err(IdealError::EmptyGeneratorSet);
        }
        let mut seed = ElementSet::empty(ring.size());
        for &s in generators {
            if s >= ring.size() {
                return Err(IdealError::ElementOutOfBounds { index: s, size: ring.size() });
            }
            seed = seed.union(&principal_members(ring, s));
        }
        Ok(Ideal {
            ring,
            members: ring.sum_closure(&seed),
            generators: Some(generators.to_vec()),
        })
    }

    /// Every ideal of the ring, each exactly once, in canonical order
    /// (cardinality, then bit pattern). Computed by closing the principal
    /// ideals under pairwise ideal sum.
    pub fn all(ring: &'r FiniteRing) -> Vec<Ideal<'r>> {
        let mut sets: Vec<ElementSet> = Vec::new();
        for s in ring.elements() {
            let members = principal_members(ring, s);
            if !sets.contains(&members) {
                sets.push(members);
            }
        }
        loop {
            let mut grew = false;
            let snapshot = sets.clone();
            for (k, a) in snapshot.iter().enumerate() {
                for b in snapshot.iter().skip(k + 1) {
                    let sum = ring.sum_closure(&a.union(b));
                    if !sets.contains(&sum) {
                        sets.push(sum);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        sets.sort();
        sets.into_iter()
            .map(|members| Ideal { ring, members, generators: None })
            .collect()
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains zero
    }

    pub fn is_proper(&self) -> bool {
        self.members != self.ring.universe()
    }

    /// Maximality by the adjunction test: the ideal is proper and adjoining
    /// any outside element generates the whole ring. Works standalone,
    /// without enumerating the ideal lattice.
    pub fn is_maximal(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let full = self.ring.universe();
        for x in self.ring.elements() {
            if self.members.contains(x) {
                continue;
            }
            let grown = self
                .ring
                .sum_closure(&self.members.union(&principal_members(self.ring, x)));
            if grown != full {
                return false;
            }
        }
        true
    }

    /// Maximality by scanning an ideal list: proper, and no listed ideal
    /// sits strictly between this one and the whole ring. Used to cross-check
    /// [`Ideal::is_maximal`].
    pub fn is_maximal_among(&self, ideals: &[Ideal<'_>]) -> bool {
        if !self.is_proper() {
            return false;
        }
        !ideals.iter().any(|j| {
            j.members != self.members
                && j.is_proper()
                && self.members.is_subset_of(&j.members)
        })
    }

    /// A proper ideal is prime when `a*b` in the ideal forces `a` or `b` in.
    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        for a in self.ring.elements() {
            for b in self.ring.elements() {
                if self.members.contains(self.ring.mul(a, b))
                    && !self.members.contains(a)
                    && !self.members.contains(b)
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn classify(&self) -> IdealClassification {
        let principal_generator = self
            .ring
            .elements()
            .find(|&s| principal_members(self.ring, s) == self.members);
        IdealClassification {
            is_proper: self.is_proper(),
            is_maximal: self.is_maximal(),
            is_prime: self.is_prime(),
            is_principal: principal_generator.is_some(),
            principal_generator,
        }
    }

    /// The coset `x + I`.
    pub fn coset_of(&self, x: usize) -> ElementSet {
        self.ring.translate(x, &self.members)
    }

    /// The partition of the ring into cosets of this ideal, as an
    /// approximation space. Blocks are ordered by least representative, so
    /// the first block is the ideal itself.
    pub fn coset_partition(&self) -> ApproximationSpace {
        let n = self.ring.size();
        let mut seen = ElementSet::empty(n);
        let mut blocks = Vec::with_capacity(n / self.members.len());
        for x in self.ring.elements() {
            if !seen.contains(x) {
                let coset = self.coset_of(x);
                blocks.push(coset);
                seen = seen.union(&coset);
            }
        }
        ApproximationSpace::new(self.ring.labels().to_vec(), blocks)
            .expect("cosets of an ideal partition the ring")
    }

    /// The ideal sum `I + J`: the smallest ideal containing both.
    pub fn sum(&self, other: &Ideal<'r>) -> Ideal<'r> {
        Ideal {
            ring: self.ring,
            members: self.ring.sum_closure(&self.members.union(&other.members)),
            generators: None,
        }
    }
}

impl PartialEq for Ideal<'_> {
    /// Equality by member set; generator provenance is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.members)
    }
}

fn principal_members(ring: &FiniteRing, s: usize) -> ElementSet {
    let mut out = ElementSet::empty(ring.size());
    for r in ring.elements() {
        out.insert(ring.mul(r, s));
    }
    out
}

/// Parses an ideal spec against a ring. See the module docs for the grammar.
pub fn parse_ideal_spec<'r>(
    ring: &'r FiniteRing,
    spec: &str,
) -> Result<Ideal<'r>, IdealSpecError> {
    let s = spec.trim();
    if s.starts_with('{') {
        let set = ElementSet::parse(ring.size(), s)?;
        return Ok(Ideal::new(ring, set)?);
    }
    if let Some(rest) = s.strip_prefix("principal(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| IdealSpecError::Syntax(spec.to_string()))?;
        let g: usize = inner
            .trim()
            .parse()
            .map_err(|_| IdealSpecError::Syntax(spec.to_string()))?;
        if g >= ring.size() {
            return Err(IdealError::ElementOutOfBounds { index: g, size: ring.size() }.into());
        }
        return Ok(Ideal::principal(ring, g));
    }
    if let Some(rest) = s.strip_prefix("gen(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| IdealSpecError::Syntax(spec.to_string()))?;
        let mut generators = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let g: usize = piece
                .parse()
                .map_err(|_| IdealSpecError::Syntax(spec.to_string()))?;
            if g >= ring.size() {
                return Err(IdealError::ElementOutOfBounds { index: g, size: ring.size() }.into());
            }
            generators.push(g);
        }
        return Ok(Ideal::generated(ring, &generators)?);
    }
    if let Some(rest) = s.strip_prefix("maximal#") {
        let k: usize = rest
            .trim()
            .parse()
            .map_err(|_| IdealSpecError::Syntax(spec.to_string()))?;
        let maximals: Vec<Ideal<'r>> =
            Ideal::all(ring).into_iter().filter(|i| i.is_maximal()).collect();
        if k == 0 || k > maximals.len() {
            return Err(IdealSpecError::NoSuchMaximal { k, available: maximals.len() });
        }
        return Ok(maximals.into_iter().nth(k - 1).unwrap());
    }
    Err(IdealSpecError::Syntax(spec.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, members.iter().copied()).unwrap()
    }

    /// Independent oracle: enumerate the ideals of Z_n by scanning all 2^n
    /// subsets with raw mod-n arithmetic, bypassing FiniteRing entirely.
    fn zn_ideals_bruteforce(n: usize) -> Vec<u64> {
        assert!(n <= 16);
        let mut found = Vec::new();
        'subsets: for bits in 0u64..(1 << n) {
            if bits & 1 == 0 {
                continue; // must contain 0
            }
            let members: Vec<usize> = (0..n).filter(|&i| bits & (1 << i) != 0).collect();
            for &a in &members {
                if bits & (1 << ((n - a) % n)) == 0 {
                    continue 'subsets;
                }
                for &b in &members {
                    if bits & (1 << ((a + b) % n)) == 0 {
                        continue 'subsets;
                    }
                }
                for r in 0..n {
                    if bits & (1 << ((r * a) % n)) == 0 {
                        continue 'subsets;
                    }
                }
            }
            found.push(bits);
        }
        found.sort_by_key(|&bits| (bits.count_ones(), bits));
        found
    }

    #[test]
    fn enumeration_matches_bruteforce_oracle() {
        for n in 1..=12 {
            let ring = FiniteRing::zn(n).unwrap();
            let enumerated: Vec<u64> =
                Ideal::all(&ring).iter().map(|i| i.members().bits()).collect();
            assert_eq!(enumerated, zn_ideals_bruteforce(n), "ideals of Z{n}");
        }
    }

    #[test]
    fn z12_ideal_membership() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert!(is_ideal(&z12, &set(12, &[0, 3, 6, 9])));
        assert_eq!(
            check_ideal(&z12, &set(12, &[0, 3, 6])),
            Err(IdealViolation::NotClosedUnderAddition { a: 3, b: 6 })
        );
        assert!(is_ideal(&z12, &set(12, &[0])));
    }

    #[test]
    fn z12_ideal_lattice() {
        let z12 = FiniteRing::zn(12).unwrap();
        let ideals = Ideal::all(&z12);
        let sets: Vec<ElementSet> = ideals.iter().map(|i| i.members()).collect();
        assert_eq!(
            sets,
            vec![
                set(12, &[0]),
                set(12, &[0, 6]),
                set(12, &[0, 4, 8]),
                set(12, &[0, 3, 6, 9]),
                set(12, &[0, 2, 4, 6, 8, 10]),
                ElementSet::full(12),
            ]
        );
        // Closed under ideal sum, and every member passes the axiom check.
        for a in &ideals {
            assert!(is_ideal(&z12, &a.members()));
            for b in &ideals {
                assert!(sets.contains(&a.sum(b).members()));
            }
        }
    }

    #[test]
    fn z6_and_z1_lattices() {
        let z6 = FiniteRing::zn(6).unwrap();
        let sets: Vec<ElementSet> = Ideal::all(&z6).iter().map(|i| i.members()).collect();
        assert_eq!(
            sets,
            vec![set(6, &[0]), set(6, &[0, 3]), set(6, &[0, 2, 4]), ElementSet::full(6)]
        );
        let z1 = FiniteRing::zn(1).unwrap();
        let ideals = Ideal::all(&z1);
        assert_eq!(ideals.len(), 1);
        // The zero ring's only ideal is the whole ring: neither maximal nor prime.
        assert!(!ideals[0].is_maximal());
        assert!(!ideals[0].is_prime());
    }

    #[test]
    fn generated_ideals() {
        let z12 = FiniteRing::zn(12).unwrap();
        let evens = set(12, &[0, 2, 4, 6, 8, 10]);
        assert_eq!(Ideal::generated(&z12, &[2]).unwrap().members(), evens);
        assert_eq!(Ideal::generated(&z12, &[4, 6]).unwrap().members(), evens);
        assert_eq!(Ideal::generated(&z12, &[0]).unwrap().members(), set(12, &[0]));
        assert_eq!(Ideal::generated(&z12, &[]), Err(IdealError::EmptyGeneratorSet));
        // Generating with a single element agrees with the principal form.
        for s in 0..12 {
            assert_eq!(
                Ideal::generated(&z12, &[s]).unwrap().members(),
                Ideal::principal(&z12, s).members()
            );
        }
    }

    #[test]
    fn principal_ideals() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert_eq!(
            Ideal::principal(&z12, 2).members(),
            set(12, &[0, 2, 4, 6, 8, 10])
        );
        assert_eq!(Ideal::principal(&z12, 0).members(), set(12, &[0]));
        // 5 is a unit mod 12, so it generates everything.
        assert_eq!(Ideal::principal(&z12, 5).members(), ElementSet::full(12));
        assert_eq!(Ideal::principal(&z12, 2).generators(), Some(&[2][..]));
    }

    #[test]
    fn maximality() {
        let z12 = FiniteRing::zn(12).unwrap();
        let maximal = [set(12, &[0, 2, 4, 6, 8, 10]), set(12, &[0, 3, 6, 9])];
        let not_maximal = [set(12, &[0, 4, 8]), set(12, &[0, 6])];
        for members in maximal {
            assert!(Ideal::new(&z12, members).unwrap().is_maximal());
        }
        for members in not_maximal {
            assert!(!Ideal::new(&z12, members).unwrap().is_maximal());
        }
        // The whole ring is never maximal.
        assert!(!Ideal::new(&z12, ElementSet::full(12)).unwrap().is_maximal());
    }

    #[test]
    fn maximality_methods_agree() {
        for spec in ["Z2", "Z4", "Z6", "Z8", "Z12", "Z2xZ2", "Z2xZ6", "Z3xZ3"] {
            let ring = crate::ring::parse_ring_spec(spec).unwrap();
            let ideals = Ideal::all(&ring);
            for ideal in &ideals {
                assert_eq!(
                    ideal.is_maximal(),
                    ideal.is_maximal_among(&ideals),
                    "{spec} ideal {ideal}"
                );
            }
        }
    }

    #[test]
    fn primality() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert!(Ideal::new(&z12, set(12, &[0, 2, 4, 6, 8, 10])).unwrap().is_prime());
        // 2*3 = 6 lands in {0,6} but neither factor does.
        assert!(!Ideal::new(&z12, set(12, &[0, 6])).unwrap().is_prime());
        assert!(!Ideal::new(&z12, ElementSet::full(12)).unwrap().is_prime());
    }

    #[test]
    fn maximal_implies_prime_on_small_rings() {
        for spec in ["Z2", "Z3", "Z4", "Z6", "Z8", "Z9", "Z12", "Z2xZ2", "Z2xZ6", "Z3xZ3"] {
            let ring = crate::ring::parse_ring_spec(spec).unwrap();
            for ideal in Ideal::all(&ring) {
                if ideal.is_maximal() {
                    assert!(ideal.is_prime(), "{spec}: maximal ideal {ideal} must be prime");
                }
            }
        }
    }

    #[test]
    fn classification() {
        let z12 = FiniteRing::zn(12).unwrap();
        let c = Ideal::new(&z12, set(12, &[0, 3, 6, 9])).unwrap().classify();
        assert!(c.is_proper && c.is_maximal && c.is_prime && c.is_principal);
        assert_eq!(c.principal_generator, Some(3));
        let whole = Ideal::new(&z12, ElementSet::full(12)).unwrap().classify();
        assert!(!whole.is_proper && !whole.is_maximal && !whole.is_prime);
        assert_eq!(whole.principal_generator, Some(1));
    }

    #[test]
    fn coset_partitions() {
        let z12 = FiniteRing::zn(12).unwrap();
        let m = Ideal::new(&z12, set(12, &[0, 3, 6, 9])).unwrap();
        assert_eq!(
            m.coset_partition().blocks(),
            &[set(12, &[0, 3, 6, 9]), set(12, &[1, 4, 7, 10]), set(12, &[2, 5, 8, 11])]
        );
        let z6 = FiniteRing::zn(6).unwrap();
        let j = Ideal::new(&z6, set(6, &[0, 2, 4])).unwrap();
        assert_eq!(j.coset_partition().blocks(), &[set(6, &[0, 2, 4]), set(6, &[1, 3, 5])]);
        // The zero ideal gives singleton blocks.
        let zero = Ideal::zero(&z6);
        assert_eq!(zero.coset_partition().blocks().len(), 6);
    }

    #[test]
    fn congruence_relation_matches_coset_partition() {
        for spec in ["Z4", "Z6", "Z12", "Z2xZ2", "Z2xZ6"] {
            let ring = crate::ring::parse_ring_spec(spec).unwrap();
            for ideal in Ideal::all(&ring) {
                let mut pairs = Vec::new();
                for a in ring.elements() {
                    for b in ring.elements() {
                        if ideal.contains(ring.sub(a, b)) {
                            pairs.push((a, b));
                        }
                    }
                }
                let via_relation =
                    ApproximationSpace::from_relation(ring.labels().to_vec(), &pairs).unwrap();
                assert_eq!(via_relation, ideal.coset_partition(), "{spec} ideal {ideal}");
            }
        }
    }

    #[test]
    fn zn_maximal_ideals_are_prime_multiples() {
        // In Z_n the maximal ideals are exactly <p> for primes p dividing n.
        let is_prime_number = |k: usize| k >= 2 && (2..k).all(|d| !k.is_multiple_of(d));
        for n in 2..=16 {
            let ring = FiniteRing::zn(n).unwrap();
            let mut expected: Vec<ElementSet> = (2..=n)
                .filter(|&p| is_prime_number(p) && n.is_multiple_of(p))
                .map(|p| Ideal::principal(&ring, p % n).members())
                .collect();
            expected.sort();
            let mut found: Vec<ElementSet> = Ideal::all(&ring)
                .into_iter()
                .filter(|i| i.is_maximal())
                .map(|i| i.members())
                .collect();
            found.sort();
            assert_eq!(found, expected, "maximal ideals of Z{n}");
        }
    }

    #[test]
    fn spec_grammar() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert_eq!(
            parse_ideal_spec(&z12, "{0,3,6,9}").unwrap().members(),
            set(12, &[0, 3, 6, 9])
        );
        assert_eq!(
            parse_ideal_spec(&z12, "principal(2)").unwrap().members(),
            set(12, &[0, 2, 4, 6, 8, 10])
        );
        assert_eq!(
            parse_ideal_spec(&z12, "gen(4,6)").unwrap().members(),
            set(12, &[0, 2, 4, 6, 8, 10])
        );
        // Canonical order puts {0,3,6,9} before {0,2,4,6,8,10}.
        assert_eq!(
            parse_ideal_spec(&z12, "maximal#1").unwrap().members(),
            set(12, &[0, 3, 6, 9])
        );
        assert_eq!(
            parse_ideal_spec(&z12, "maximal#2").unwrap().members(),
            set(12, &[0, 2, 4, 6, 8, 10])
        );
        assert!(matches!(
            parse_ideal_spec(&z12, "maximal#3"),
            Err(IdealSpecError::NoSuchMaximal { k: 3, available: 2 })
        ));
        assert!(matches!(
            parse_ideal_spec(&z12, "{0,3,6}"),
            Err(IdealSpecError::Ideal(IdealError::NotAnIdeal(_)))
        ));
        assert!(matches!(
            parse_ideal_spec(&z12, "principal(99)"),
            Err(IdealSpecError::Ideal(IdealError::ElementOutOfBounds { .. }))
        ));
        assert!(matches!(parse_ideal_spec(&z12, "nonsense"), Err(IdealSpecError::Syntax(_))));
    }
}
