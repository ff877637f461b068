//! Finite monoids given by their multiplication tables.
//!
//! A [`Monoid`] is always in normal form: the identity is element `0`. Tables
//! coming from outside go through [`validate_monoid`], which checks the axioms
//! and relabels the identity to `0` while keeping every other element in its
//! original relative order.

use std::fmt;

use crate::congruence::Partition;
use crate::error::{Error, Result};

/// Largest carrier [`direct_product`] will build by default.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// A finite monoid. Element `s·t` lives at `table[s * size + t]`; element `0`
/// is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monoid {
    size: usize,
    table: Vec<usize>,
}

impl fmt::Debug for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Monoid")
            .field("size", &self.size)
            .field("rows", &self.rows())
            .finish()
    }
}

/// Checks the monoid axioms for a `size`×`size` table and returns the monoid in
/// normal form together with the relabeling `old index -> new index`.
pub fn validate_monoid(size: usize, rows: &[Vec<usize>]) -> Result<(Monoid, Vec<usize>)> {
    if size == 0 {
        return Err(Error::EmptyCarrier);
    }
    check_square(size, rows)?;
    let mul = |s: usize, t: usize| rows[s][t];

    for s in 0..size {
        for t in 0..size {
            let st = mul(s, t);
            for u in 0..size {
                if mul(st, u) != mul(s, mul(t, u)) {
                    return Err(Error::NotAssociative { s, t, u });
                }
            }
        }
    }

    let identity = (0..size)
        .find(|&e| (0..size).all(|s| mul(e, s) == s && mul(s, e) == s))
        .ok_or(Error::NoIdentity)?;

    let relabel = identity_first(size, identity);
    let mut table = vec![0; size * size];
    for s in 0..size {
        for t in 0..size {
            table[relabel[s] * size + relabel[t]] = relabel[mul(s, t)];
        }
    }
    Ok((Monoid { size, table }, relabel))
}

fn check_square(size: usize, rows: &[Vec<usize>]) -> Result<()> {
    if rows.len() != size {
        return Err(Error::BadShape {
            expected: format!("{size} rows"),
            found: format!("{} rows", rows.len()),
        });
    }
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != size {
            return Err(Error::BadShape {
                expected: format!("{size} entries in row {row}"),
                found: format!("{}", entries.len()),
            });
        }
        if let Some((col, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(Error::EntryOutOfRange {
                row,
                col,
                value,
                bound: size,
            });
        }
    }
    Ok(())
}

/// Relabeling that sends `first` to 0 and keeps the others in order.
fn identity_first(size: usize, first: usize) -> Vec<usize> {
    (0..size)
        .map(|i| match i.cmp(&first) {
            std::cmp::Ordering::Less => i + 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => i,
        })
        .collect()
}

impl Monoid {
    /// The one-element monoid.
    pub fn trivial() -> Self {
        Monoid {
            size: 1,
            table: vec![0],
        }
    }

    /// Builds a monoid whose identity is already `0`, rejecting anything else.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let (monoid, relabel) = validate_monoid(rows.len(), rows)?;
        if relabel[0] != 0 {
            return Err(Error::BadShape {
                expected: "identity at index 0".into(),
                found: format!(
                    "identity at index {}",
                    relabel.iter().position(|&r| r == 0).unwrap_or(0)
                ),
            });
        }
        Ok(monoid)
    }

    /// Trusted constructor for tables produced by a construction that is a
    /// monoid by design (products, composition tables, enumeration).
    pub(crate) fn from_table_unchecked(size: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        debug_assert!((0..size).all(|s| table[s] == s && table[s * size] == s));
        Monoid { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.size + t]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub(crate) fn table(&self) -> &[usize] {
        &self.table
    }

    /// `s^n` for `n >= 1`.
    pub fn power(&self, s: usize, n: usize) -> usize {
        assert!(n >= 1, "power exponent must be positive");
        (1..n).fold(s, |acc, _| self.mul(acc, s))
    }

    /// `r(s) = {(x, y) : s·x = s·y}`, the kernel of left translation by `s`.
    pub fn right_relation(&self, s: usize) -> Partition {
        Partition::kernel_of(&self.table[s * self.size..(s + 1) * self.size])
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|s| (s + 1..self.size).all(|t| self.mul(s, t) == self.mul(t, s)))
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    /// The table after renaming element `i` to `perm[i]`.
    pub(crate) fn relabeled_table(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.size;
        let mut out = vec![0; n * n];
        for s in 0..n {
            for t in 0..n {
                out[perm[s] * n + perm[t]] = perm[self.mul(s, t)];
            }
        }
        out
    }
}

/// Component-wise product. Element indices are mixed-radix with the first
/// factor most significant; the identity tuple is index 0.
pub fn direct_product(factors: &[Monoid]) -> Result<Monoid> {
    direct_product_capped(factors, DEFAULT_SIZE_CAP)
}

pub fn direct_product_capped(factors: &[Monoid], cap: usize) -> Result<Monoid> {
    if factors.is_empty() {
        return Err(Error::BadShape {
            expected: "at least one factor".into(),
            found: "none".into(),
        });
    }
    let sizes: Vec<usize> = factors.iter().map(Monoid::size).collect();
    let size = sizes
        .iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n).filter(|&p| p <= cap))
        .ok_or_else(|| Error::SizeOverflow {
            size: sizes.iter().fold(1usize, |a, &n| a.saturating_mul(n)),
            cap,
        })?;

    let components: Vec<Vec<usize>> = (0..size).map(|i| split_index(&sizes, i)).collect();
    let mut table = vec![0; size * size];
    let mut prod = vec![0; factors.len()];
    for (s, cs) in components.iter().enumerate() {
        for (t, ct) in components.iter().enumerate() {
            for (k, m) in factors.iter().enumerate() {
                prod[k] = m.mul(cs[k], ct[k]);
            }
            table[s * size + t] = join_index(&sizes, &prod);
        }
    }
    Ok(Monoid::from_table_unchecked(size, table))
}

/// Mixed-radix decoding, first coordinate most significant.
pub fn split_index(sizes: &[usize], mut index: usize) -> Vec<usize> {
    let mut out = vec![0; sizes.len()];
    for (slot, &n) in out.iter_mut().zip(sizes).rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

pub fn join_index(sizes: &[usize], components: &[usize]) -> usize {
    sizes
        .iter()
        .zip(components)
        .fold(0, |acc, (&n, &c)| acc * n + c)
}

/// `({0, …, m-1}, · mod m)`. Residue 1 becomes index 0; see [`zmod_index`].
pub fn zmod_mult_monoid(m: usize) -> Monoid {
    assert!(m >= 1, "modulus must be positive");
    let rows: Vec<Vec<usize>> = (0..m)
        .map(|a| (0..m).map(|b| (a * b) % m).collect())
        .collect();
    validate_monoid(m, &rows)
        .expect("multiplication mod m is a monoid")
        .0
}

/// Index of `residue` inside [`zmod_mult_monoid`]`(m)`.
pub fn zmod_index(m: usize, residue: usize) -> usize {
    let r = residue % m;
    if m == 1 {
        0
    } else {
        identity_first(m, 1)[r]
    }
}

/// Residue represented by `index` inside [`zmod_mult_monoid`]`(m)`.
pub fn zmod_residue(m: usize, index: usize) -> usize {
    match (m, index) {
        (1, _) => 0,
        (_, 0) => 1,
        (_, 1) => 0,
        (_, i) => i,
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The product `Z/p × Z/p² × … × Z/p^n` of multiplicative monoids together with
/// the element whose `k`-th coordinate is `p mod p^k`.
///
/// Left multiplication by this element has a kernel chain that climbs for
/// exactly `n` steps before it stabilizes.
pub fn prime_power_product(p: u64, n: usize) -> Result<(Monoid, usize)> {
    prime_power_product_capped(p, n, DEFAULT_SIZE_CAP)
}

pub fn prime_power_product_capped(p: u64, n: usize, cap: usize) -> Result<(Monoid, usize)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::BadShape {
            expected: "at least one factor".into(),
            found: "0".into(),
        });
    }
    let p = p as usize;
    let mut moduli = Vec::with_capacity(n);
    let mut total: usize = 1;
    let mut q: usize = 1;
    for _ in 0..n {
        q = q.checked_mul(p).ok_or(Error::SizeOverflow {
            size: usize::MAX,
            cap,
        })?;
        total = total.saturating_mul(q);
        moduli.push(q);
    }
    if total > cap {
        return Err(Error::SizeOverflow { size: total, cap });
    }
    let factors: Vec<Monoid> = moduli.iter().map(|&m| zmod_mult_monoid(m)).collect();
    let monoid = direct_product_capped(&factors, cap)?;
    let coords: Vec<usize> = moduli.iter().map(|&m| zmod_index(m, p % m)).collect();
    let sizes: Vec<usize> = moduli.clone();
    Ok((monoid, join_index(&sizes, &coords)))
}
