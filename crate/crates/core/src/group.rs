//! Finite groups with a fixed element ordering.
//!
//! A group is an ordering g_0, ..., g_{n-1} of its elements (g_0 is always
//! the identity) together with the multiplication law on indices. All
//! matrices built downstream are defined relative to this ordering.
//!
//! Each family implements the [`GroupLaw`] trait; small groups additionally
//! cache the full Cayley table, while cyclic/dihedral/product groups of any
//! order evaluate the law arithmetically.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on group orders (overridable through the spec parser).
pub const DEFAULT_MAX_GROUP_ORDER: usize = 1 << 20;

/// Orders up to this limit get a materialized Cayley table for O(1) lookups.
const TABLE_CACHE_LIMIT: usize = 512;

/// Structural description of a group, used for equality and spec strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupStructure {
    Cyclic(usize),
    Dihedral(usize),
    /// Flattened list of non-product factors, first factor slowest.
    Product(Vec<GroupStructure>),
    Custom { order: usize, fingerprint: u64 },
}

impl GroupStructure {
    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupStructure::Cyclic(_))
    }

    /// Cyclic factor orders when the group is cyclic or a product of cyclics.
    pub fn cyclic_factors(&self) -> Option<Vec<usize>> {
        match self {
            GroupStructure::Cyclic(n) => Some(vec![*n]),
            GroupStructure::Product(fs) => fs
                .iter()
                .map(|f| match f {
                    GroupStructure::Cyclic(n) => Some(*n),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }
}

/// Multiplication law of one group family.
///
/// Implementations must satisfy the group axioms with the identity at
/// index 0; this is verified exhaustively in tests and, for custom tables,
/// at load time.
pub trait GroupLaw: Send + Sync {
    fn order(&self) -> usize;
    fn mul(&self, i: usize, j: usize) -> usize;
    fn inv(&self, i: usize) -> usize;
    fn label(&self, i: usize) -> String;
    fn structure(&self) -> GroupStructure;
    /// Leaf factors when this law is a direct product, None otherwise.
    fn product_factors(&self) -> Option<&[FiniteGroup]> {
        None
    }
}

struct CyclicLaw {
    n: usize,
}

impl GroupLaw for CyclicLaw {
    fn order(&self) -> usize {
        self.n
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        (i + j) % self.n
    }

    fn inv(&self, i: usize) -> usize {
        (self.n - i) % self.n
    }

    fn label(&self, i: usize) -> String {
        power_label("x", i)
    }

    fn structure(&self) -> GroupStructure {
        GroupStructure::Cyclic(self.n)
    }
}

struct DihedralLaw {
    m: usize,
}

impl GroupLaw for DihedralLaw {
    fn order(&self) -> usize {
        2 * self.m
    }

    // Indices 0..m are rotations x^i, indices m..2m are reflections x^(i-m)y,
    // with yx = x^(-1)y.
    fn mul(&self, i: usize, j: usize) -> usize {
        let m = self.m;
        match (i < m, j < m) {
            (true, true) => (i + j) % m,
            (true, false) => m + (i + (j - m)) % m,
            (false, true) => m + ((i - m) + m - j % m) % m,
            (false, false) => ((i - m) + m - (j - m)) % m,
        }
    }

    fn inv(&self, i: usize) -> usize {
        if i < self.m {
            (self.m - i) % self.m
        } else {
            i
        }
    }

    fn label(&self, i: usize) -> String {
        if i < self.m {
            power_label("x", i)
        } else {
            let k = i - self.m;
            match k {
                0 => "y".to_string(),
                1 => "xy".to_string(),
                _ => format!("x^{k}y"),
            }
        }
    }

    fn structure(&self) -> GroupStructure {
        GroupStructure::Dihedral(self.m)
    }
}

struct ProductLaw {
    factors: Vec<FiniteGroup>,
    /// strides[t] = product of the orders of factors after t.
    strides: Vec<usize>,
    order: usize,
}

impl ProductLaw {
    fn component(&self, i: usize, t: usize) -> usize {
        (i / self.strides[t]) % self.factors[t].order()
    }
}

impl GroupLaw for ProductLaw {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        let mut out = 0;
        for t in 0..self.factors.len() {
            let c = self.factors[t].mul(self.component(i, t), self.component(j, t));
            out += c * self.strides[t];
        }
        out
    }

    fn inv(&self, i: usize) -> usize {
        let mut out = 0;
        for t in 0..self.factors.len() {
            out += self.factors[t].inv(self.component(i, t)) * self.strides[t];
        }
        out
    }

    fn label(&self, i: usize) -> String {
        // Products of cyclic groups get monomial labels (x, y, z, ...);
        // anything else falls back to tuples of factor labels.
        const LETTERS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        let all_cyclic = self
            .factors
            .iter()
            .all(|f| f.structure().is_cyclic());
        if all_cyclic && self.factors.len() <= LETTERS.len() {
            let mut s = String::new();
            for t in 0..self.factors.len() {
                let e = self.component(i, t);
                if e > 0 {
                    s.push_str(&power_label(LETTERS[t], e));
                }
            }
            if s.is_empty() {
                s.push('1');
            }
            s
        } else {
            let parts: Vec<String> = (0..self.factors.len())
                .map(|t| self.factors[t].label(self.component(i, t)))
                .collect();
            format!("({})", parts.join(","))
        }
    }

    fn structure(&self) -> GroupStructure {
        GroupStructure::Product(self.factors.iter().map(|f| f.structure()).collect())
    }

    fn product_factors(&self) -> Option<&[FiniteGroup]> {
        Some(&self.factors)
    }
}

struct TableLaw {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    fingerprint: u64,
}

impl GroupLaw for TableLaw {
    fn order(&self) -> usize {
        self.n
    }

    fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.n + j] as usize
    }

    fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    fn label(&self, i: usize) -> String {
        if i == 0 {
            "1".to_string()
        } else {
            format!("g{i}")
        }
    }

    fn structure(&self) -> GroupStructure {
        GroupStructure::Custom {
            order: self.n,
            fingerprint: self.fingerprint,
        }
    }
}

fn power_label(letter: &str, e: usize) -> String {
    match e {
        0 => "1".to_string(),
        1 => letter.to_string(),
        _ => format!("{letter}^{e}"),
    }
}

struct Inner {
    order: usize,
    law: Box<dyn GroupLaw>,
    structure: GroupStructure,
    spec: String,
    mul_cache: Option<Vec<u32>>,
    inv_cache: Vec<u32>,
}

/// A finite group with a fixed element ordering; identity at index 0.
///
/// Cheap to clone (shared internals) and immutable after construction, so
/// concurrent reads are safe.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.inner.order)
            .field("spec", &self.inner.spec)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.structure == other.inner.structure
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    fn from_law(law: Box<dyn GroupLaw>, spec: String) -> Self {
        let order = law.order();
        let structure = law.structure();
        let mul_cache = if order <= TABLE_CACHE_LIMIT {
            let mut t = Vec::with_capacity(order * order);
            for i in 0..order {
                for j in 0..order {
                    t.push(law.mul(i, j) as u32);
                }
            }
            Some(t)
        } else {
            None
        };
        let inv_cache = (0..order).map(|i| law.inv(i) as u32).collect();
        FiniteGroup {
            inner: Arc::new(Inner {
                order,
                law,
                structure,
                spec,
                mul_cache,
                inv_cache,
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    /// Index of the identity element. Always 0 by construction.
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.order() && j < self.order());
        match &self.inner.mul_cache {
            Some(t) => t[i * self.inner.order + j] as usize,
            None => self.inner.law.mul(i, j),
        }
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inner.inv_cache[i] as usize
    }

    /// g_i raised to the k-th power by repeated squaring over indices.
    pub fn pow(&self, i: usize, k: usize) -> usize {
        let mut acc = 0usize;
        let mut base = i;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label(&self, i: usize) -> String {
        self.inner.law.label(i)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order()).map(|i| self.label(i)).collect()
    }

    pub fn structure(&self) -> &GroupStructure {
        &self.inner.structure
    }

    /// The spec string this group round-trips through (`cyclic:n`, ...).
    pub fn spec_string(&self) -> &str {
        &self.inner.spec
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        for i in 1..n {
            for j in (i + 1)..n {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest d >= 1 with g_i^d = identity.
    ///
    /// The index must be in range.
    pub fn element_order(&self, i: usize) -> usize {
        assert!(i < self.order(), "element index out of range");
        let mut cur = i;
        let mut d = 1;
        while cur != 0 {
            cur = self.mul(cur, i);
            d += 1;
        }
        d
    }

    /// Checks the group axioms from scratch: Latin-square rows/columns,
    /// two-sided identity at 0, inverses, and associativity (exhaustive for
    /// order <= 64, deterministically sampled beyond).
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        let table: Vec<u32> = (0..n)
            .flat_map(|i| (0..n).map(move |j| self.mul(i, j) as u32))
            .collect();
        validate_table(n, &table)
    }

    /// Leaf factors when this group was built as a direct product.
    pub fn product_factors(&self) -> Option<&[FiniteGroup]> {
        self.inner.law.product_factors()
    }

    fn flatten_factors(&self) -> Vec<FiniteGroup> {
        match self.product_factors() {
            Some(fs) => fs.to_vec(),
            None => vec![self.clone()],
        }
    }
}

/// The cyclic group C_n with ordering 1, x, ..., x^(n-1).
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok(FiniteGroup::from_law(
        Box::new(CyclicLaw { n }),
        format!("cyclic:{n}"),
    ))
}

/// The dihedral group of order 2m with ordering
/// 1, x, ..., x^(m-1), y, xy, ..., x^(m-1)y and relations
/// x^m = y^2 = (xy)^2 = 1.
pub fn dihedral_group(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidOrder);
    }
    Ok(FiniteGroup::from_law(
        Box::new(DihedralLaw { m }),
        format!("dihedral:{m}"),
    ))
}

/// Direct product with lexicographic ordering, first factor slowest:
/// element (g_i, h_j) sits at index i*|H| + j.
///
/// Nested products flatten, so `product(product(G,H),K)` and
/// `product(G,product(H,K))` produce the same indexed group.
pub fn product_group(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    product_group_capped(g, h, DEFAULT_MAX_GROUP_ORDER)
}

pub fn product_group_capped(
    g: &FiniteGroup,
    h: &FiniteGroup,
    max_order: usize,
) -> Result<FiniteGroup> {
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or(Error::GroupTooLarge {
            order: usize::MAX,
            max: max_order,
        })?;
    if order > max_order {
        return Err(Error::GroupTooLarge {
            order,
            max: max_order,
        });
    }
    let mut factors = g.flatten_factors();
    factors.extend(h.flatten_factors());
    product_of_factors(factors)
}

fn product_of_factors(factors: Vec<FiniteGroup>) -> Result<FiniteGroup> {
    let mut strides = vec![1usize; factors.len()];
    for t in (0..factors.len().saturating_sub(1)).rev() {
        strides[t] = strides[t + 1] * factors[t + 1].order();
    }
    let order = factors.iter().map(|f| f.order()).product();
    let spec = format!(
        "product:{}",
        factors
            .iter()
            .map(|f| f.spec_string().to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    Ok(FiniteGroup::from_law(
        Box::new(ProductLaw {
            factors,
            strides,
            order,
        }),
        spec,
    ))
}

/// Builds a group from an explicit Cayley table (row-major indices).
/// The table is always validated: Latin square, identity at index 0,
/// associativity.
pub fn group_from_table(table: Vec<u32>, spec: Option<String>) -> Result<FiniteGroup> {
    let n2 = table.len();
    let n = (n2 as f64).sqrt() as usize;
    if n * n != n2 || n == 0 {
        return Err(Error::InvalidTable(format!(
            "table length {n2} is not a positive square"
        )));
    }
    validate_table(n, &table)?;
    let mut inv = vec![0u32; n];
    for i in 0..n {
        let j = (0..n).find(|&j| table[i * n + j] == 0).unwrap();
        inv[i] = j as u32;
    }
    let fingerprint = fnv1a(n, &table);
    let spec = spec.unwrap_or_else(|| format!("custom:{fingerprint:016x}"));
    Ok(FiniteGroup::from_law(
        Box::new(TableLaw {
            n,
            mul: table,
            inv,
            fingerprint,
        }),
        spec,
    ))
}

/// Loads a Cayley table file: whitespace-separated `n` followed by n^2
/// 0-based indices.
pub fn group_from_table_file(path: &str, max_order: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| Error::InvalidTable("empty table file".into()))?
        .parse()
        .map_err(|_| Error::InvalidTable("order is not an integer".into()))?;
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    if n > max_order {
        return Err(Error::GroupTooLarge {
            order: n,
            max: max_order,
        });
    }
    let mut table = Vec::with_capacity(n * n);
    for t in tokens {
        let v: u32 = t
            .parse()
            .map_err(|_| Error::InvalidTable(format!("bad table entry `{t}`")))?;
        table.push(v);
    }
    if table.len() != n * n {
        return Err(Error::InvalidTable(format!(
            "expected {} entries, found {}",
            n * n,
            table.len()
        )));
    }
    group_from_table(table, Some(format!("table:{path}")))
}

fn validate_table(n: usize, table: &[u32]) -> Result<()> {
    let at = |i: usize, j: usize| table[i * n + j] as usize;
    for (k, &v) in table.iter().enumerate() {
        if v as usize >= n {
            return Err(Error::InvalidTable(format!(
                "entry {v} at position {k} out of range 0..{n}"
            )));
        }
    }
    // Two-sided identity at index 0.
    for i in 0..n {
        if at(0, i) != i || at(i, 0) != i {
            return Err(Error::InvalidTable(format!(
                "index 0 is not a two-sided identity at element {i}"
            )));
        }
    }
    // Latin square.
    let mut seen = vec![false; n];
    for i in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for j in 0..n {
            let v = at(i, j);
            if seen[v] {
                return Err(Error::InvalidTable(format!("row {i} repeats element {v}")));
            }
            seen[v] = true;
        }
    }
    for j in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for i in 0..n {
            let v = at(i, j);
            if seen[v] {
                return Err(Error::InvalidTable(format!(
                    "column {j} repeats element {v}"
                )));
            }
            seen[v] = true;
        }
    }
    // Associativity: exhaustive for small orders, sampled deterministically
    // beyond that.
    if n <= 64 {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize
        };
        for _ in 0..65536 {
            let (a, b, c) = (next() % n, next() % n, next() % n);
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::InvalidTable(format!(
                    "associativity fails at ({a},{b},{c})"
                )));
            }
        }
    }
    Ok(())
}

fn fnv1a(n: usize, table: &[u32]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(n as u64);
    for &v in table {
        eat(u64::from(v));
    }
    h
}

/// Group spec grammar: `cyclic:n`, `dihedral:m`, `product:spec,spec,...`
/// (factors must not themselves be products; nest-free since products
/// flatten), `table:<path>`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    parse_group_spec_with_limit(spec, DEFAULT_MAX_GROUP_ORDER)
}

type FamilyBuilder = fn(&str, usize) -> Result<FiniteGroup>;

/// Family registry keyed by spec-string prefix.
const FAMILIES: &[(&str, FamilyBuilder)] = &[
    ("cyclic", build_cyclic),
    ("dihedral", build_dihedral),
    ("product", build_product),
    ("table", build_table),
];

pub fn parse_group_spec_with_limit(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    let spec = spec.trim();
    let (name, payload) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidGroupSpec(spec.to_string()))?;
    let builder = FAMILIES
        .iter()
        .find(|(f, _)| *f == name)
        .map(|(_, b)| *b)
        .ok_or_else(|| Error::InvalidGroupSpec(spec.to_string()))?;
    let g = builder(payload, max_order)?;
    if g.order() > max_order {
        return Err(Error::GroupTooLarge {
            order: g.order(),
            max: max_order,
        });
    }
    Ok(g)
}

fn parse_order(payload: &str) -> Result<usize> {
    payload
        .trim()
        .parse()
        .map_err(|_| Error::InvalidGroupSpec(payload.to_string()))
}

fn build_cyclic(payload: &str, _max: usize) -> Result<FiniteGroup> {
    cyclic_group(parse_order(payload)?)
}

fn build_dihedral(payload: &str, _max: usize) -> Result<FiniteGroup> {
    dihedral_group(parse_order(payload)?)
}

fn build_product(payload: &str, max: usize) -> Result<FiniteGroup> {
    let parts: Vec<&str> = payload.split(',').collect();
    if parts.len() < 2 {
        return Err(Error::InvalidGroupSpec(format!(
            "product needs at least two factors, got `{payload}`"
        )));
    }
    let mut acc: Option<FiniteGroup> = None;
    for part in parts {
        if part.trim().starts_with("product") {
            return Err(Error::InvalidGroupSpec(
                "nested product specs are not supported; list all factors in one product".into(),
            ));
        }
        let f = parse_group_spec_with_limit(part, max)?;
        acc = Some(match acc {
            None => f,
            Some(a) => product_group_capped(&a, &f, max)?,
        });
    }
    Ok(acc.unwrap())
}

fn build_table(payload: &str, max: usize) -> Result<FiniteGroup> {
    group_from_table_file(payload.trim(), max)
}

/// A group homomorphism given as a mapping table on element indices.
#[derive(Debug, Clone)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    map: Vec<u32>,
}

impl GroupHom {
    /// Size-checks the mapping table; the homomorphism law itself is tested
    /// by [`GroupHom::check`].
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, map: Vec<u32>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::MalformedHom(format!(
                "map has {} entries for a domain of order {}",
                map.len(),
                domain.order()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v as usize >= codomain.order()) {
            return Err(Error::MalformedHom(format!(
                "image index {v} out of range for codomain of order {}",
                codomain.order()
            )));
        }
        Ok(GroupHom {
            domain,
            codomain,
            map,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            map: (0..g.order() as u32).collect(),
        }
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.map.iter().all(|&v| {
            let hit = seen[v as usize];
            seen[v as usize] = true;
            !hit
        })
    }

    /// Exhaustively checks map(ab) = map(a)map(b) and map(1) = 1.
    pub fn check(&self) -> bool {
        if self.map[0] != 0 {
            return false;
        }
        let n = self.domain.order();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.map[self.domain.mul(i, j)] as usize;
                let rhs = self
                    .codomain
                    .mul(self.map[i] as usize, self.map[j] as usize);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustive homomorphism test; free function mirror of [`GroupHom::check`].
pub fn check_hom(candidate: &GroupHom) -> bool {
    candidate.check()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_small_cyclic() {
        let c1 = cyclic_group(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.mul(0, 0), 0);

        let c3 = cyclic_group(3).unwrap();
        assert_eq!(c3.mul(1, 2), 0); // x * x^2 = 1
        assert_eq!(c3.inv(1), 2);
        assert_eq!(c3.labels(), vec!["1", "x", "x^2"]);

        assert!(matches!(cyclic_group(0), Err(Error::InvalidOrder)));
    }

    #[test]
    fn cyclic_31_generator_order() {
        let g = cyclic_group(31).unwrap();
        // Independent oracle: iterate powers until the identity reappears.
        let mut cur = 1usize;
        let mut d = 1usize;
        while cur != 0 {
            cur = g.mul(cur, 1);
            d += 1;
        }
        assert_eq!(d, 31);
        assert_eq!(g.element_order(1), 31);
    }

    #[test]
    fn dihedral_matches_relations() {
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(
            d4.labels(),
            vec!["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]
        );
        // yx = x^3 y from (xy)^2 = 1
        let y = 4;
        let x = 1;
        assert_eq!(d4.mul(y, x), 7);
        assert_eq!(d4.label(7), "x^3y");
        assert_eq!(d4.element_order(y), 2);
        // x^m = y^2 = (xy)^2 = 1
        assert_eq!(d4.pow(x, 4), 0);
        assert_eq!(d4.mul(y, y), 0);
        let xy = 5;
        assert_eq!(d4.mul(xy, xy), 0);

        assert!(matches!(dihedral_group(0), Err(Error::InvalidOrder)));
    }

    #[test]
    fn dihedral_1_is_c2() {
        let d1 = dihedral_group(1).unwrap();
        let c2 = cyclic_group(2).unwrap();
        assert_eq!(d1.order(), 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(d1.mul(i, j), c2.mul(i, j));
            }
        }
    }

    #[test]
    fn dihedral_nonabelian_from_3() {
        assert!(dihedral_group(1).unwrap().is_abelian());
        assert!(dihedral_group(2).unwrap().is_abelian());
        for m in 3..8 {
            assert!(!dihedral_group(m).unwrap().is_abelian());
        }
    }

    #[test]
    fn product_ordering_is_example_2_7() {
        let c2 = cyclic_group(2).unwrap();
        let c4 = cyclic_group(4).unwrap();
        let g = product_group(&c2, &c4).unwrap();
        assert_eq!(
            g.labels(),
            vec!["1", "y", "y^2", "y^3", "x", "xy", "xy^2", "xy^3"]
        );
    }

    #[test]
    fn product_with_trivial_factor() {
        let c1 = cyclic_group(1).unwrap();
        let c5 = cyclic_group(5).unwrap();
        let g = product_group(&c1, &c5).unwrap();
        assert_eq!(g.order(), 5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.mul(i, j), c5.mul(i, j));
            }
        }
    }

    #[test]
    fn product_componentwise() {
        let c2 = cyclic_group(2).unwrap();
        let g = product_group(&c2, &c2).unwrap();
        // (1,0)*(1,1) = (0,1)
        assert_eq!(g.mul(2, 3), 1);
    }

    #[test]
    fn product_flattening_is_associative() {
        let c2 = cyclic_group(2).unwrap();
        let c3 = cyclic_group(3).unwrap();
        let c4 = cyclic_group(4).unwrap();
        let left = product_group(&product_group(&c2, &c3).unwrap(), &c4).unwrap();
        let right = product_group(&c2, &product_group(&c3, &c4).unwrap()).unwrap();
        assert_eq!(left, right);
        for i in 0..24 {
            for j in 0..24 {
                assert_eq!(left.mul(i, j), right.mul(i, j));
            }
        }
        assert_eq!(
            left.structure().cyclic_factors(),
            Some(vec![2usize, 3, 4])
        );
    }

    #[test]
    fn product_order_cap() {
        let c = cyclic_group(2048).unwrap();
        let err = product_group_capped(&c, &c, 1 << 20).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { .. }));
    }

    #[test]
    fn axioms_hold_for_builtin_families() {
        for g in [
            cyclic_group(1).unwrap(),
            cyclic_group(8).unwrap(),
            dihedral_group(4).unwrap(),
            product_group(&cyclic_group(2).unwrap(), &cyclic_group(4).unwrap()).unwrap(),
            product_group(&dihedral_group(3).unwrap(), &cyclic_group(2).unwrap()).unwrap(),
        ] {
            g.verify_axioms().unwrap();
        }
    }

    #[test]
    fn formula_path_agrees_with_table_path() {
        // Order above the cache limit exercises the arithmetic law.
        let big = cyclic_group(1013).unwrap();
        for (i, j) in [(0, 0), (1, 1012), (500, 700), (1012, 1012)] {
            assert_eq!(big.mul(i, j), (i + j) % 1013);
            assert_eq!(big.mul(i, big.inv(i)), 0);
        }
        // Same family below the limit runs off the cached table; spot-check
        // agreement with the formula.
        let small = cyclic_group(12).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(small.mul(i, j), (i + j) % 12);
            }
        }
    }

    #[test]
    fn element_orders() {
        let c4 = cyclic_group(4).unwrap();
        assert_eq!(c4.element_order(2), 2);
        assert_eq!(c4.element_order(0), 1);
        let c31 = cyclic_group(31).unwrap();
        assert_eq!(c31.element_order(1), 31);
    }

    #[test]
    fn hom_checks() {
        let c4 = cyclic_group(4).unwrap();
        let c2 = cyclic_group(2).unwrap();

        assert!(GroupHom::identity(&c4).check());

        // Quotient x^k -> y^(k mod 2); verify all 16 pairs independently.
        let q = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let lhs = [0, 1, 0, 1][c4.mul(i, j)];
                let rhs = c2.mul([0, 1, 0, 1][i], [0, 1, 0, 1][j]);
                assert_eq!(lhs, rhs);
            }
        }
        assert!(q.check());

        // Inconsistent table: x -> x but x^2 -> x^3.
        let bad = GroupHom::new(c4.clone(), c4.clone(), vec![0, 1, 3, 3]).unwrap();
        assert!(!bad.check());

        // Size mismatch is rejected at construction.
        assert!(matches!(
            GroupHom::new(c4.clone(), c2.clone(), vec![0, 1]),
            Err(Error::MalformedHom(_))
        ));
        assert!(matches!(
            GroupHom::new(c4, c2, vec![0, 1, 0, 5]),
            Err(Error::MalformedHom(_))
        ));
    }

    #[test]
    fn custom_table_validation() {
        // C3 as an explicit table.
        let c3 = group_from_table(vec![0, 1, 2, 1, 2, 0, 2, 0, 1], None).unwrap();
        assert_eq!(c3.mul(1, 2), 0);
        assert_eq!(c3.inv(1), 2);

        // A Latin square with identity that is not associative
        // ((1*1)*2 = 2 but 1*(1*2) = 4): the validator must reject it.
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 3, 4, 0, 1, //
            3, 4, 1, 2, 0, //
            4, 2, 0, 1, 3,
        ];
        let err = group_from_table(loop5, None).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(m) if m.contains("associativity")));

        // Row repeats an element.
        let err = group_from_table(vec![0, 1, 1, 0], None).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)));

        // Identity not at index 0.
        let err = group_from_table(vec![1, 0, 0, 1], None).unwrap_err();
        assert!(matches!(err, Error::InvalidTable(_)));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_group_spec("cyclic:15").unwrap().order(), 15);
        assert_eq!(parse_group_spec("dihedral:4").unwrap().order(), 8);
        let g = parse_group_spec("product:cyclic:2,cyclic:3,cyclic:4").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.spec_string(), "product:cyclic:2,cyclic:3,cyclic:4");
        assert!(parse_group_spec("frobnicate:3").is_err());
        assert!(parse_group_spec("cyclic").is_err());
        assert!(parse_group_spec("cyclic:x").is_err());
        assert!(parse_group_spec("product:cyclic:2").is_err());
        assert!(matches!(
            parse_group_spec_with_limit("cyclic:2000000", 1 << 20),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn table_file_round_trip() {
        let dir = std::env::temp_dir().join("galgebra-group-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c4.table");
        let c4 = cyclic_group(4).unwrap();
        let mut text = String::from("4\n");
        for i in 0..4 {
            for j in 0..4 {
                text.push_str(&format!("{} ", c4.mul(i, j)));
            }
            text.push('\n');
        }
        std::fs::write(&path, text).unwrap();
        let spec = format!("table:{}", path.display());
        let loaded = parse_group_spec(&spec).unwrap();
        assert_eq!(loaded.order(), 4);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(loaded.mul(i, j), c4.mul(i, j));
            }
        }
        // Truncated file.
        std::fs::write(&path, "4\n0 1 2 3\n").unwrap();
        assert!(matches!(
            parse_group_spec(&spec),
            Err(Error::InvalidTable(_))
        ));
    }
}
