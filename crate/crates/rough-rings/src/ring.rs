//! Finite commutative rings with identity, given by explicit operation
//! tables.
//!
//! Rings are capped at [`MAX_UNIVERSE`] elements so that subsets fit in one
//! machine word. Constructors either build correct tables directly (`zn`,
//! `direct_product`) or validate arbitrary tables against the full ring
//! axioms (`from_tables`), reporting a violating witness on failure.
//!
//! Ring specs accepted by the CLI are parsed here: `Z<n>`, products joined
//! with `x` such as `Z4xZ6`, and `table:<path>` naming a table file with
//! fields `n`, `zero`, `one`, `add` (n rows of n integers), and `mul` (same
//! shape); `#` starts a comment line.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::set::{ElementSet, MAX_UNIVERSE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring size {0} is outside the supported range 1..={MAX_UNIVERSE}")]
    SizeOutOfRange(usize),
    #[error("{table} table is malformed: {detail}")]
    MalformedTable { table: &'static str, detail: String },
    #[error("claimed {name} element {value} is out of range for a ring of size {n}")]
    IdentityOutOfRange { name: &'static str, value: usize, n: usize },
    #[error("addition does not form an abelian group: {0}")]
    NotAbelianGroup(String),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    MulNotAssociative { a: usize, b: usize, c: usize },
    #[error("multiplication is not commutative: {a}*{b} != {b}*{a}")]
    MulNotCommutative { a: usize, b: usize },
    #[error("element {one} is not a multiplicative identity: {one}*{witness} != {witness}")]
    NoUnity { one: usize, witness: usize },
    #[error("distributivity fails: {a}*({b}+{c}) != {a}*{b} + {a}*{c}")]
    NotDistributive { a: usize, b: usize, c: usize },
}

#[derive(Debug, Error)]
pub enum RingSpecError {
    #[error("cannot parse ring spec `{0}`: expected Z<n>, a product like Z4xZ6, or table:<path>")]
    Syntax(String),
    #[error("cannot read table file `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed table file `{path}`: {detail}")]
    TableFormat { path: String, detail: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A finite commutative ring with identity. Elements are indices `0..n`;
/// the labels are presentation-only (tuples for product rings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    labels: Vec<String>,
    size: usize,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
}

impl FiniteRing {
    /// The ring of integers modulo `n`, for `1 <= n <= 64`. `Z1` is the zero
    /// ring (`0 = 1`), admitted but reported by [`FiniteRing::is_zero_ring`].
    pub fn zn(n: usize) -> Result<Self, RingError> {
        if n == 0 || n > MAX_UNIVERSE {
            return Err(RingError::SizeOutOfRange(n));
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        let neg = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteRing {
            name: format!("Z{n}"),
            labels: (0..n).map(|i| i.to_string()).collect(),
            size: n,
            zero: 0,
            one: if n == 1 { 0 } else { 1 },
            add,
            mul,
            neg,
        })
    }

    /// Componentwise product ring. Element `(i, j)` gets index `i*|b| + j`.
    pub fn direct_product(&self, other: &FiniteRing) -> Result<Self, RingError> {
        let n = self.size * other.size;
        if n > MAX_UNIVERSE {
            return Err(RingError::SizeOutOfRange(n));
        }
        let nb = other.size;
        let pair = |ia: usize, ib: usize| ia * nb + ib;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        let mut neg = vec![0; n];
        for ia in 0..self.size {
            for ib in 0..nb {
                let i = pair(ia, ib);
                neg[i] = pair(self.neg(ia), other.neg(ib));
                for ja in 0..self.size {
                    for jb in 0..nb {
                        let j = pair(ja, jb);
                        add[i * n + j] = pair(self.add(ia, ja), other.add(ib, jb));
                        mul[i * n + j] = pair(self.mul(ia, ja), other.mul(ib, jb));
                    }
                }
            }
        }
        let labels = (0..self.size)
            .flat_map(|ia| {
                (0..nb).map(move |ib| tuple_label(&self.labels[ia], &other.labels[ib]))
            })
            .collect();
        Ok(FiniteRing {
            name: format!("{}x{}", self.name, other.name),
            labels,
            size: n,
            zero: pair(self.zero, other.zero),
            one: pair(self.one, other.one),
            add,
            mul,
            neg,
        })
    }

    /// Builds a ring from explicit `n x n` addition and multiplication
    /// tables, validating every ring axiom. Validation is cubic in `n`.
    pub fn from_tables(
        name: impl Into<String>,
        n: usize,
        add_rows: &[Vec<usize>],
        mul_rows: &[Vec<usize>],
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        if n == 0 || n > MAX_UNIVERSE {
            return Err(RingError::SizeOutOfRange(n));
        }
        let add = flatten_table("add", n, add_rows)?;
        let mul = flatten_table("mul", n, mul_rows)?;
        if zero >= n {
            return Err(RingError::IdentityOutOfRange { name: "zero", value: zero, n });
        }
        if one >= n {
            return Err(RingError::IdentityOutOfRange { name: "one", value: one, n });
        }

        let at = |t: &[usize], a: usize, b: usize| t[a * n + b];
        for a in 0..n {
            if at(&add, zero, a) != a {
                return Err(RingError::NotAbelianGroup(format!(
                    "{zero}+{a} = {}, expected {a}",
                    at(&add, zero, a)
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(RingError::NotAbelianGroup(format!("{a}+{b} != {b}+{a}")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(&add, at(&add, a, b), c) != at(&add, a, at(&add, b, c)) {
                        return Err(RingError::NotAbelianGroup(format!(
                            "({a}+{b})+{c} != {a}+({b}+{c})"
                        )));
                    }
                }
            }
        }
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| at(&add, a, b) == zero) {
                Some(b) => neg.push(b),
                None => {
                    return Err(RingError::NotAbelianGroup(format!(
                        "{a} has no additive inverse"
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if at(&mul, a, b) != at(&mul, b, a) {
                    return Err(RingError::MulNotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(&mul, at(&mul, a, b), c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(RingError::MulNotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if at(&mul, one, a) != a {
                return Err(RingError::NoUnity { one, witness: a });
            }
        }
        // Multiplication is commutative here, so left distributivity suffices.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
                        return Err(RingError::NotDistributive { a, b, c });
                    }
                }
            }
        }

        Ok(FiniteRing {
            name: name.into(),
            labels: (0..n).map(|i| i.to_string()).collect(),
            size: n,
            zero,
            one,
            add,
            mul,
            neg,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// `Z1`, where `0 = 1`. It has no proper ideals and no maximal ideals.
    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// True when labels carry more information than the bare indices.
    pub fn has_distinct_labels(&self) -> bool {
        self.labels.iter().enumerate().any(|(i, l)| l != &i.to_string())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        assert!(a < self.size && b < self.size, "ring element index out of bounds");
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.size && b < self.size, "ring element index out of bounds");
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        assert!(a < self.size, "ring element index out of bounds");
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// The translate `{x + s : s in set}`.
    pub fn translate(&self, x: usize, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.size);
        for s in set.iter() {
            out.insert(self.add(x, s));
        }
        out
    }

    /// All pairwise sums `{a + b : a in A, b in B}`.
    pub fn pairwise_sum(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// All pairwise products `{a * b : a in A, b in B}`.
    pub fn pairwise_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.size);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// The set of all finite sums of one or more elements of `set`:
    /// the smallest superset closed under addition. Stabilizes in at most
    /// `|R|` rounds.
    pub fn sum_closure(&self, set: &ElementSet) -> ElementSet {
        let mut current = *set;
        loop {
            let grown = current.union(&self.pairwise_sum(&current, &current));
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    pub fn format_element(&self, x: usize) -> String {
        if self.has_distinct_labels() {
            format!("{x}=({})", self.labels[x].trim_matches(|c| c == '(' || c == ')'))
        } else {
            x.to_string()
        }
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

fn tuple_label(a: &str, b: &str) -> String {
    format!("({},{})", strip_parens(a), strip_parens(b))
}

fn flatten_table(table: &'static str, n: usize, rows: &[Vec<usize>]) -> Result<Vec<usize>, RingError> {
    if rows.len() != n {
        return Err(RingError::MalformedTable {
            table,
            detail: format!("expected {n} rows, got {}", rows.len()),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(RingError::MalformedTable {
                table,
                detail: format!("row {r} has {} entries, expected {n}", row.len()),
            });
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(RingError::MalformedTable {
                    table,
                    detail: format!("entry ({r},{c}) = {v} is out of range 0..{n}"),
                });
            }
            flat.push(v);
        }
    }
    Ok(flat)
}

/// Searches for a ring isomorphism from `a` to `b`, returning the element
/// mapping if one exists. Backtracking with forced-image propagation; meant
/// for the small rings this crate works with.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !assign(a, b, &mut map, &mut used, a.zero(), b.zero()) {
        return None;
    }
    if map[a.one()] == usize::MAX && !assign(a, b, &mut map, &mut used, a.one(), b.one()) {
        return None;
    }
    if map[a.one()] != b.one() {
        return None;
    }
    extend(a, b, map, used)
}

fn extend(a: &FiniteRing, b: &FiniteRing, map: Vec<usize>, used: Vec<bool>) -> Option<Vec<usize>> {
    let n = a.size();
    let next = match (0..n).find(|&x| map[x] == usize::MAX) {
        None => return Some(map),
        Some(x) => x,
    };
    for image in 0..n {
        if used[image] {
            continue;
        }
        let mut map2 = map.clone();
        let mut used2 = used.clone();
        if assign(a, b, &mut map2, &mut used2, next, image) {
            if let Some(done) = extend(a, b, map2, used2) {
                return Some(done);
            }
        }
    }
    None
}

/// Records `map[x] = image` and propagates every image forced through the
/// operation tables. Returns false on any conflict.
fn assign(
    a: &FiniteRing,
    b: &FiniteRing,
    map: &mut [usize],
    used: &mut [bool],
    x: usize,
    image: usize,
) -> bool {
    if map[x] != usize::MAX {
        return map[x] == image;
    }
    if used[image] {
        return false;
    }
    map[x] = image;
    used[image] = true;
    let n = a.size();
    loop {
        let mut changed = false;
        for p in 0..n {
            if map[p] == usize::MAX {
                continue;
            }
            for q in 0..n {
                if map[q] == usize::MAX {
                    continue;
                }
                for (ka, kb) in [
                    (a.add(p, q), b.add(map[p], map[q])),
                    (a.mul(p, q), b.mul(map[p], map[q])),
                ] {
                    if map[ka] == usize::MAX {
                        if used[kb] {
                            return false;
                        }
                        map[ka] = kb;
                        used[kb] = true;
                        changed = true;
                    } else if map[ka] != kb {
                        return false;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// Parses a ring spec: `Z<n>`, a product like `Z2xZ3xZ4`, or `table:<path>`.
pub fn parse_ring_spec(spec: &str) -> Result<FiniteRing, RingSpecError> {
    let s = spec.trim();
    if let Some(path) = s.strip_prefix("table:") {
        return FiniteRing::from_table_file(Path::new(path.trim()));
    }
    if s.is_empty() {
        return Err(RingSpecError::Syntax(spec.to_string()));
    }
    let mut factors = Vec::new();
    for atom in s.split('x') {
        let digits = atom
            .strip_prefix('Z')
            .ok_or_else(|| RingSpecError::Syntax(spec.to_string()))?;
        let n: usize = digits
            .parse()
            .map_err(|_| RingSpecError::Syntax(spec.to_string()))?;
        factors.push(FiniteRing::zn(n)?);
    }
    let mut ring = factors.remove(0);
    for factor in factors {
        ring = ring.direct_product(&factor)?;
    }
    Ok(ring)
}

impl FiniteRing {
    /// Loads and validates a ring from a table file. See the module docs for
    /// the format.
    pub fn from_table_file(path: &Path) -> Result<Self, RingSpecError> {
        let text = std::fs::read_to_string(path).map_err(|source| RingSpecError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "table".to_string());
        let (n, add, mul, zero, one) =
            parse_table_text(&text).map_err(|detail| RingSpecError::TableFormat {
                path: path.display().to_string(),
                detail,
            })?;
        Ok(FiniteRing::from_tables(name, n, &add, &mul, zero, one)?)
    }
}

type TableFields = (usize, Vec<Vec<usize>>, Vec<Vec<usize>>, usize, usize);

fn parse_table_text(text: &str) -> Result<TableFields, String> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut n: Option<usize> = None;
    let mut zero: Option<usize> = None;
    let mut one: Option<usize> = None;
    let mut add: Option<Vec<Vec<usize>>> = None;
    let mut mul: Option<Vec<Vec<usize>>> = None;

    let mut i = 0;
    while i < lines.len() {
        let mut tokens = lines[i].split_whitespace();
        let keyword = tokens.next().unwrap();
        match keyword {
            "n" | "zero" | "one" => {
                let value: usize = tokens
                    .next()
                    .ok_or_else(|| format!("field `{keyword}` is missing a value"))?
                    .parse()
                    .map_err(|_| format!("field `{keyword}` must be an integer"))?;
                if tokens.next().is_some() {
                    return Err(format!("field `{keyword}` has trailing tokens"));
                }
                match keyword {
                    "n" => n = Some(value),
                    "zero" => zero = Some(value),
                    _ => one = Some(value),
                }
                i += 1;
            }
            "add" | "mul" => {
                let size = n.ok_or_else(|| format!("`n` must be declared before `{keyword}`"))?;
                if tokens.next().is_some() {
                    return Err(format!("`{keyword}` must appear alone on its line"));
                }
                let mut rows = Vec::with_capacity(size);
                for r in 0..size {
                    let line = lines
                        .get(i + 1 + r)
                        .ok_or_else(|| format!("`{keyword}` table is missing row {r}"))?;
                    let row: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|_| format!("`{keyword}` row {r}: `{t}` is not an integer"))
                        })
                        .collect::<Result<_, String>>()?;
                    rows.push(row);
                }
                match keyword {
                    "add" => add = Some(rows),
                    _ => mul = Some(rows),
                }
                i += 1 + size;
            }
            other => return Err(format!("unknown field `{other}`")),
        }
    }

    let n = n.ok_or("missing field `n`")?;
    let zero = zero.ok_or("missing field `zero`")?;
    let one = one.ok_or("missing field `one`")?;
    let add = add.ok_or("missing `add` table")?;
    let mul = mul.ok_or("missing `mul` table")?;
    Ok((n, add, mul, zero, one))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_arithmetic() {
        let z6 = FiniteRing::zn(6).unwrap();
        assert_eq!(z6.add(3, 5), 2);
        assert_eq!(z6.mul(3, 4), 0);
        assert_eq!(z6.neg(0), 0);
        assert_eq!(z6.neg(2), 4);
        let z12 = FiniteRing::zn(12).unwrap();
        assert_eq!(z12.mul(5, 5), 1);
        assert_eq!(z12.mul(3, 4), 0);
    }

    #[test]
    fn zero_ring_is_admitted() {
        let z1 = FiniteRing::zn(1).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.zero(), z1.one());
        assert_eq!(FiniteRing::zn(0), Err(RingError::SizeOutOfRange(0)));
        assert_eq!(FiniteRing::zn(65), Err(RingError::SizeOutOfRange(65)));
    }

    #[test]
    fn from_tables_reproduces_zn() {
        for n in [1, 2, 4, 6, 9, 12] {
            let ring = FiniteRing::zn(n).unwrap();
            let rows = |t: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
                (0..n).map(|a| (0..n).map(|b| t(a, b)).collect()).collect()
            };
            let add = rows(&|a, b| ring.add(a, b));
            let mul = rows(&|a, b| ring.mul(a, b));
            let rebuilt =
                FiniteRing::from_tables(format!("Z{n}"), n, &add, &mul, 0, ring.one()).unwrap();
            assert_eq!(rebuilt, ring);
        }
    }

    #[test]
    fn from_tables_rejects_patched_multiplication() {
        let z4 = FiniteRing::zn(4).unwrap();
        let add: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| z4.add(a, b)).collect()).collect();
        let mut mul: Vec<Vec<usize>> =
            (0..4).map(|a| (0..4).map(|b| z4.mul(a, b)).collect()).collect();
        mul[2][2] = 1;
        let err = FiniteRing::from_tables("bad", 4, &add, &mul, 0, 1).unwrap_err();
        assert!(
            matches!(err, RingError::MulNotAssociative { .. } | RingError::NotDistributive { .. }),
            "unexpected error: {err:?}"
        );
    }

    #[test]
    fn from_tables_trivial_ring() {
        let ring = FiniteRing::from_tables("Z1", 1, &[vec![0]], &[vec![0]], 0, 0).unwrap();
        assert!(ring.is_zero_ring());
    }

    #[test]
    fn product_componentwise() {
        let z2 = FiniteRing::zn(2).unwrap();
        let klein = z2.direct_product(&z2).unwrap();
        // Pair (i,j) has index i*2 + j, so (1,0) is 2 and (0,1) is 1.
        assert_eq!(klein.mul(2, 1), klein.zero());
        assert_eq!(klein.label(3), "(1,1)");
        assert_eq!(klein.one(), 3);
    }

    #[test]
    fn product_size_cap() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert!(matches!(
            z12.direct_product(&FiniteRing::zn(6).unwrap()),
            Err(RingError::SizeOutOfRange(72))
        ));
    }

    #[test]
    fn coprime_product_is_cyclic() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z3 = FiniteRing::zn(3).unwrap();
        let z6 = FiniteRing::zn(6).unwrap();
        let product = z2.direct_product(&z3).unwrap();
        let iso = find_isomorphism(&product, &z6).expect("Z2xZ3 is isomorphic to Z6");
        for a in product.elements() {
            for b in product.elements() {
                assert_eq!(iso[product.add(a, b)], z6.add(iso[a], iso[b]));
                assert_eq!(iso[product.mul(a, b)], z6.mul(iso[a], iso[b]));
            }
        }
        // Identity factor changes nothing up to isomorphism.
        let z1 = FiniteRing::zn(1).unwrap();
        assert!(find_isomorphism(&z1.direct_product(&z6).unwrap(), &z6).is_some());
    }

    #[test]
    fn non_coprime_product_is_not_cyclic() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        assert!(find_isomorphism(&z2.direct_product(&z2).unwrap(), &z4).is_none());
    }

    #[test]
    fn spec_grammar() {
        assert_eq!(parse_ring_spec("Z12").unwrap().size(), 12);
        assert_eq!(parse_ring_spec(" Z12 ").unwrap().size(), 12);
        let p = parse_ring_spec("Z4xZ6").unwrap();
        assert_eq!(p.size(), 24);
        assert_eq!(p.name(), "Z4xZ6");
        let triple = parse_ring_spec("Z2xZ2xZ3").unwrap();
        assert_eq!(triple.size(), 12);
        assert_eq!(triple.label(0), "(0,0,0)");
        assert!(matches!(parse_ring_spec("Q8"), Err(RingSpecError::Syntax(_))));
        assert!(matches!(parse_ring_spec("Zx"), Err(RingSpecError::Syntax(_))));
        assert!(matches!(parse_ring_spec("Z0"), Err(RingSpecError::Ring(_))));
    }

    #[test]
    fn table_file_roundtrip() {
        let dir = std::env::temp_dir().join(format!("rough-rings-ring-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("z4.ring");
        std::fs::write(
            &path,
            "# Z4 written out longhand\nn 4\nzero 0\none 1\nadd\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\nmul\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n",
        )
        .unwrap();
        let ring = FiniteRing::from_table_file(&path).unwrap();
        assert_eq!(ring.size(), 4);
        assert_eq!(ring.name(), "z4");
        assert_eq!(ring.mul(3, 3), 1);
        let via_spec = parse_ring_spec(&format!("table:{}", path.display())).unwrap();
        assert_eq!(via_spec.size(), 4);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn set_helpers() {
        let z12 = FiniteRing::zn(12).unwrap();
        let ideal = ElementSet::from_indices(12, [0, 3, 6, 9]).unwrap();
        assert_eq!(
            z12.translate(1, &ideal),
            ElementSet::from_indices(12, [1, 4, 7, 10]).unwrap()
        );
        let z6 = FiniteRing::zn(6).unwrap();
        let a = ElementSet::from_indices(6, [0, 3]).unwrap();
        assert_eq!(z6.pairwise_sum(&a, &a), a);
        let two = ElementSet::from_indices(6, [2]).unwrap();
        assert_eq!(
            z6.sum_closure(&two),
            ElementSet::from_indices(6, [0, 2, 4]).unwrap()
        );
    }
}
