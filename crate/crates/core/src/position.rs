//! Canonical positions and the bit-level quantities derived from them.
//!
//! A position is a multiset of pile sizes, stored as a non-decreasing tuple.
//! The Bouton matrix writes each pile in binary with the least significant
//! bit in column 0; the Moore vector counts the ones in each column.

use std::fmt;
use std::str::FromStr;

/// Largest pile count a [`Position`] can hold.
pub const MAX_PILES: usize = 8;

/// A sorted tuple of pile sizes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    len: u8,
    piles: [u32; MAX_PILES],
}

impl Position {
    /// Sorts `raw` into canonical (non-decreasing) order.
    ///
    /// Panics if `raw` has more than [`MAX_PILES`] entries.
    pub fn canonical(raw: &[u32]) -> Self {
        assert!(raw.len() <= MAX_PILES, "at most {MAX_PILES} piles supported");
        let mut piles = [0u32; MAX_PILES];
        piles[..raw.len()].copy_from_slice(raw);
        piles[..raw.len()].sort_unstable();
        Self {
            len: raw.len() as u8,
            piles,
        }
    }

    /// Builds a position from an already sorted slice without re-sorting.
    pub(crate) fn from_sorted(sorted: &[u32]) -> Self {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        let mut piles = [0u32; MAX_PILES];
        piles[..sorted.len()].copy_from_slice(sorted);
        Self {
            len: sorted.len() as u8,
            piles,
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::canonical(&vec![0; n])
    }

    #[inline]
    pub fn piles(&self) -> &[u32] {
        &self.piles[..self.len as usize]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn total(&self) -> u64 {
        self.piles().iter().map(|&p| p as u64).sum()
    }

    /// The largest pile (the leader); 0 for an empty tuple.
    pub fn leader(&self) -> u32 {
        self.piles().last().copied().unwrap_or(0)
    }

    pub fn nonempty_piles(&self) -> usize {
        self.piles().iter().filter(|&&p| p > 0).count()
    }

    /// Drops one occurrence of the largest pile.
    pub fn reduce(&self) -> ReducedPosition {
        assert!(self.len >= 2, "reduction needs at least two piles");
        ReducedPosition(Self::from_sorted(&self.piles()[..self.len() - 1]))
    }

    pub fn bouton_matrix(&self) -> BoutonMatrix {
        BoutonMatrix::new(self.piles())
    }

    pub fn moore_vector(&self) -> MooreVector {
        self.bouton_matrix().moore_vector()
    }

    /// Scales every pile by `2^shift`, i.e. inserts `shift` zero columns
    /// at the low end of the Bouton matrix.
    pub fn shifted(&self, shift: u32) -> Self {
        let v: Vec<u32> = self.piles().iter().map(|&p| p << shift).collect();
        Self::from_sorted(&v)
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.piles().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl From<&[u32]> for Position {
    fn from(raw: &[u32]) -> Self {
        Self::canonical(raw)
    }
}

impl<const N: usize> From<[u32; N]> for Position {
    fn from(raw: [u32; N]) -> Self {
        Self::canonical(&raw)
    }
}

impl serde::Serialize for Position {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.piles())
    }
}

impl<'de> serde::Deserialize<'de> for Position {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        if v.len() > MAX_PILES {
            return Err(serde::de::Error::custom("too many piles"));
        }
        Ok(Self::canonical(&v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePositionError(pub String);

impl fmt::Display for ParsePositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad position {:?}: expected comma-separated pile sizes", self.0)
    }
}

impl std::error::Error for ParsePositionError {}

impl FromStr for Position {
    type Err = ParsePositionError;

    /// Parses `"3,1,2"` style input; the result is canonicalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParsePositionError(s.to_string());
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let piles = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        if piles.is_empty() || piles.len() > MAX_PILES {
            return Err(err());
        }
        Ok(Self::canonical(&piles))
    }
}

/// A position with one copy of its maximum pile removed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ReducedPosition(Position);

impl ReducedPosition {
    pub fn as_position(&self) -> &Position {
        &self.0
    }

    pub fn into_position(self) -> Position {
        self.0
    }

    pub fn piles(&self) -> &[u32] {
        self.0.piles()
    }
}

impl fmt::Display for ReducedPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of bits needed to write `v`, at least 1.
#[inline]
pub fn bit_length(v: u32) -> u32 {
    (32 - v.leading_zeros()).max(1)
}

/// Rows are the pile values themselves; bit `j` of row `i` is `x_ij`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoutonMatrix {
    rows: Vec<u32>,
    width: u32,
}

impl BoutonMatrix {
    pub fn new(rows: &[u32]) -> Self {
        let width = rows.iter().copied().map(bit_length).max().unwrap_or(1);
        Self {
            rows: rows.to_vec(),
            width,
        }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn bit(&self, row: usize, col: u32) -> bool {
        col < 32 && (self.rows[row] >> col) & 1 == 1
    }

    /// Column `col` as a bit mask over rows (bit `i` set iff row `i` has a one).
    /// Columns past the width read as zero.
    pub fn column(&self, col: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| col < 32 && (r >> col) & 1 == 1)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// All columns padded with zero columns up to `width`.
    pub fn columns_padded(&self, width: u32) -> Vec<u32> {
        (0..width.max(self.width)).map(|c| self.column(c)).collect()
    }

    pub fn moore_vector(&self) -> MooreVector {
        let sums = (0..self.width)
            .map(|c| self.column(c).count_ones() as u8)
            .collect();
        MooreVector { sums }
    }
}

impl fmt::Display for BoutonMatrix {
    /// One line per row, LSB first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, _) in self.rows.iter().enumerate() {
            for c in 0..self.width {
                if c > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.bit(i, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Per-column one counts of a Bouton matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MooreVector {
    sums: Vec<u8>,
}

impl MooreVector {
    pub fn from_sums(sums: Vec<u8>) -> Self {
        Self { sums }
    }

    pub fn sums(&self) -> &[u8] {
        &self.sums
    }

    pub fn width(&self) -> usize {
        self.sums.len()
    }

    /// Integer whose bit `c` is set iff column `c` sums to `w`.
    pub fn xi(&self, w: u32) -> u64 {
        self.sums
            .iter()
            .enumerate()
            .filter(|(_, &s)| s as u32 == w)
            .fold(0, |acc, (c, _)| acc | (1u64 << c))
    }

    /// Every column sum is a multiple of `modulus`.
    pub fn all_divisible_by(&self, modulus: u32) -> bool {
        self.sums.iter().all(|&s| s as u32 % modulus == 0)
    }
}

/// Column sums computed straight from pile values, without building a matrix.
#[inline]
pub(crate) fn column_sums_mod_zero(piles: &[u32], modulus: u32) -> bool {
    let mut rem: u32 = piles.iter().fold(0, |a, &p| a | p);
    while rem != 0 {
        let c = rem.trailing_zeros();
        let s = piles.iter().filter(|&&p| (p >> c) & 1 == 1).count() as u32;
        if s % modulus != 0 {
            return false;
        }
        rem &= rem - 1;
    }
    true
}
