//! The three winching actions on sequence spaces and the column-profile
//! bijections linking them to order ideals.
//!
//! * [`IncreasingSeq`]: `0 < x_1 < ... < x_k < m+1`, acted on by winching.
//! * [`BoundedSeq`]: an increasing sequence with entrywise lower bounds,
//!   acted on by winching-with-lower-bounds (plain winching clamped at the
//!   bound).
//! * [`ZeroPrefixSeq`]: a zero prefix followed by a strictly increasing tail
//!   in `[1, n]`, acted on by winching-with-zeros.
//!
//! Winching at index `i` increments entry `i` when the increment stays below
//! the next entry (with sentinels `x_0 = 0`, `x_{k+1} = m+1`), and otherwise
//! wraps it down to `x_{i-1} + 1`. A pass applies index `nu(1)` first.
//!
//! The bijections pair column `j` of an ideal with sequence index `a+1-j`:
//! one column toggle corresponds to one winching step at the reversed index,
//! and a full comotion pass with `nu` to a winching pass with
//! `nu'(t) = a+1-nu(t)` (see [`Perm::complemented`]).

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poset::{Ideal, Shape};
use itertools::Itertools;
use std::fmt;

/// A strictly increasing sequence in `S_{k,m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingSeq {
    m: u32,
    entries: Vec<u32>,
}

impl IncreasingSeq {
    pub fn new(m: u32, entries: Vec<u32>) -> Result<Self> {
        let k = entries.len() as u32;
        if k > m {
            return Err(Error::InvalidSequence {
                entries,
                reason: format!("length {k} exceeds bound {m}"),
            });
        }
        for w in entries.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidSequence {
                    entries: entries.clone(),
                    reason: "entries must be strictly increasing".to_string(),
                });
            }
        }
        if let (Some(&first), Some(&last)) = (entries.first(), entries.last()) {
            if first < 1 || last > m {
                return Err(Error::InvalidSequence {
                    entries: entries.clone(),
                    reason: format!("entries must lie in 1..={m}"),
                });
            }
        }
        Ok(IncreasingSeq { m, entries })
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.entries.len(),
            });
        }
        Ok(())
    }

    /// Winching at index `i` (1-based).
    pub fn winch_at(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let k = self.entries.len();
        let next = if i < k { self.entries[i] } else { self.m + 1 };
        let prev = if i >= 2 { self.entries[i - 2] } else { 0 };
        let mut out = self.clone();
        out.entries[i - 1] = if self.entries[i - 1] + 1 < next {
            self.entries[i - 1] + 1
        } else {
            prev + 1
        };
        Ok(out)
    }

    /// Inverse winching at index `i`; left inverse of [`Self::winch_at`].
    pub fn inverse_winch_at(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let k = self.entries.len();
        let next = if i < k { self.entries[i] } else { self.m + 1 };
        let prev = if i >= 2 { self.entries[i - 2] } else { 0 };
        let mut out = self.clone();
        out.entries[i - 1] = if self.entries[i - 1] == prev + 1 {
            next - 1
        } else {
            self.entries[i - 1] - 1
        };
        Ok(out)
    }

    /// One full pass: winch at `nu(1)` first through `nu(k)` last.
    pub fn winch_pass(&self, nu: &Perm) -> Result<Self> {
        check_perm_len(nu, self.k())?;
        let mut cur = self.clone();
        for &i in nu.order() {
            cur = cur.winch_at(i)?;
        }
        Ok(cur)
    }

    /// Inverse of [`Self::winch_pass`]: inverse-winches at `nu(k)` first.
    pub fn inverse_winch_pass(&self, nu: &Perm) -> Result<Self> {
        check_perm_len(nu, self.k())?;
        let mut cur = self.clone();
        for &i in nu.order().iter().rev() {
            cur = cur.inverse_winch_at(i)?;
        }
        Ok(cur)
    }

    /// All of `S_{k,m}` in lexicographic order.
    pub fn all(k: usize, m: u32) -> Vec<Self> {
        (1..=m)
            .combinations(k)
            .map(|entries| IncreasingSeq { m, entries })
            .sorted()
            .collect()
    }
}

impl fmt::Display for IncreasingSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

fn check_perm_len(nu: &Perm, k: usize) -> Result<()> {
    if nu.len() != k {
        return Err(Error::InvalidPermutation {
            expected: format!("[{k}]"),
            got: nu.order().iter().map(|&x| x as i64).collect(),
        });
    }
    Ok(())
}

/// An increasing sequence constrained by lower bounds, in `S'_{k,m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedSeq {
    bounds: Vec<u32>,
    seq: IncreasingSeq,
}

impl BoundedSeq {
    /// Validates `0 < l_1 < ... < l_k < m+1` and `x_i >= l_i`.
    pub fn new(m: u32, bounds: Vec<u32>, entries: Vec<u32>) -> Result<Self> {
        validate_bounds(m, &bounds)?;
        let seq = IncreasingSeq::new(m, entries)?;
        if seq.k() != bounds.len() {
            return Err(Error::InvalidSequence {
                entries: seq.entries().to_vec(),
                reason: format!("expected {} entries to match the bounds", bounds.len()),
            });
        }
        for (x, l) in seq.entries().iter().zip(&bounds) {
            if x < l {
                return Err(Error::InvalidSequence {
                    entries: seq.entries().to_vec(),
                    reason: format!("entry {x} below its lower bound {l}"),
                });
            }
        }
        Ok(BoundedSeq { bounds, seq })
    }

    pub fn k(&self) -> usize {
        self.seq.k()
    }

    pub fn m(&self) -> u32 {
        self.seq.m()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn entries(&self) -> &[u32] {
        self.seq.entries()
    }

    pub fn as_increasing(&self) -> &IncreasingSeq {
        &self.seq
    }

    /// Winching clamped at the lower bound: entry `i` becomes
    /// `max(plain winching result, l_i)`.
    pub fn winch_at(&self, i: usize) -> Result<Self> {
        let plain = self.seq.winch_at(i)?;
        let mut out = self.clone();
        out.seq = plain;
        let e = &mut out.seq.entries[i - 1];
        *e = (*e).max(self.bounds[i - 1]);
        Ok(out)
    }

    pub fn winch_pass(&self, nu: &Perm) -> Result<Self> {
        check_perm_len(nu, self.k())?;
        let mut cur = self.clone();
        for &i in nu.order() {
            cur = cur.winch_at(i)?;
        }
        Ok(cur)
    }

    /// All of `S'_{k,m}` for the given bounds, in lexicographic order.
    pub fn all(m: u32, bounds: &[u32]) -> Result<Vec<Self>> {
        validate_bounds(m, bounds)?;
        Ok(IncreasingSeq::all(bounds.len(), m)
            .into_iter()
            .filter(|s| s.entries().iter().zip(bounds).all(|(x, l)| x >= l))
            .map(|seq| BoundedSeq {
                bounds: bounds.to_vec(),
                seq,
            })
            .collect())
    }
}

fn validate_bounds(m: u32, bounds: &[u32]) -> Result<()> {
    let ok = !bounds.is_empty()
        && bounds[0] >= 1
        && *bounds.last().unwrap() <= m
        && bounds.windows(2).all(|w| w[0] < w[1]);
    if !ok {
        return Err(Error::InvalidBounds {
            bounds: bounds.to_vec(),
            reason: format!("need 0 < l_1 < ... < l_k < {}", m + 1),
        });
    }
    Ok(())
}

impl fmt::Display for BoundedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.seq.fmt(f)
    }
}

/// A zero-prefix sequence in `S_n`: `x_1 = ... = x_j = 0` followed by a
/// strictly increasing tail in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroPrefixSeq {
    entries: Vec<u32>,
}

impl ZeroPrefixSeq {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len() as u32;
        let zeros = entries.iter().take_while(|&&x| x == 0).count();
        let tail = &entries[zeros..];
        let ok = tail.iter().all(|&x| x >= 1 && x <= n)
            && tail.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidSequence {
                entries,
                reason: format!(
                    "need a zero prefix then strictly increasing entries in 1..={n}"
                ),
            });
        }
        Ok(ZeroPrefixSeq { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Winching with zeros at index `i`: increment when strictly below the
    /// next entry (sentinel `n+1`); otherwise wrap to `x_{i-1}+1` when that
    /// neighbor exists and is positive, else drop to zero.
    pub fn winch_at(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.entries.len(),
            });
        }
        let n = self.entries.len() as u32;
        let next = if i < self.entries.len() {
            self.entries[i].min(n + 1)
        } else {
            n + 1
        };
        let mut out = self.clone();
        out.entries[i - 1] = if self.entries[i - 1] + 1 < next {
            self.entries[i - 1] + 1
        } else if i > 1 && self.entries[i - 2] > 0 {
            self.entries[i - 2] + 1
        } else {
            0
        };
        Ok(out)
    }

    pub fn winch_pass(&self, nu: &Perm) -> Result<Self> {
        check_perm_len(nu, self.n())?;
        let mut cur = self.clone();
        for &i in nu.order() {
            cur = cur.winch_at(i)?;
        }
        Ok(cur)
    }

    /// All of `S_n` in lexicographic order; there are `2^n` states.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for zeros in 0..=n {
            for tail in (1..=n as u32).combinations(n - zeros) {
                let mut entries = vec![0; zeros];
                entries.extend(tail);
                out.push(ZeroPrefixSeq { entries });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for ZeroPrefixSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl Ideal {
    /// The increasing sequence carrying an ideal of `Square(a, b)`:
    /// entry `j` is `|C_{a+1-j}| + j`. A bijection onto `S_{a,a+b}` that
    /// intertwines the column toggle of column `j` with winching at `a+1-j`.
    pub fn to_winch_seq(&self) -> Result<IncreasingSeq> {
        let Shape::Square { a, b } = self.shape() else {
            return Err(Error::InvalidShape(format!(
                "{} is not a square shape",
                self.shape()
            )));
        };
        let cols = self.columns();
        let entries = (1..=a)
            .map(|j| cols[(a - j) as usize] + j)
            .collect();
        IncreasingSeq::new(a + b, entries)
    }

    /// Inverse of [`Self::to_winch_seq`] for `Square(a, b)` with `a+b = m`.
    pub fn from_winch_seq(a: u32, b: u32, x: &IncreasingSeq) -> Result<Ideal> {
        let shape = Shape::square(a, b)?;
        if x.k() != a as usize || x.m() != a + b {
            return Err(Error::InvalidSequence {
                entries: x.entries().to_vec(),
                reason: format!("expected a sequence in S_{{{a},{}}}", a + b),
            });
        }
        let cols = (1..=a)
            .map(|i| x.entries()[(a - i) as usize] - (a + 1 - i))
            .collect();
        Ideal::from_columns(shape, cols)
    }

    /// The bounded sequence carrying an ideal of `Upper(a)`:
    /// entry `j` is `|C_{a+1-j}| + 2j-1`, with lower bounds `(1,3,...,2a-1)`.
    /// Intertwines the column toggle of column `j` with bounded winching at
    /// `a+1-j`.
    pub fn to_bounded_seq(&self) -> Result<BoundedSeq> {
        let Shape::Upper { a } = self.shape() else {
            return Err(Error::InvalidShape(format!(
                "{} is not an upper shape",
                self.shape()
            )));
        };
        let cols = self.columns();
        let bounds: Vec<u32> = (1..=a).map(|j| 2 * j - 1).collect();
        let entries = (1..=a)
            .map(|j| cols[(a - j) as usize] + 2 * j - 1)
            .collect();
        BoundedSeq::new(2 * a, bounds, entries)
    }

    /// Inverse of [`Self::to_bounded_seq`].
    pub fn from_bounded_seq(x: &BoundedSeq) -> Result<Ideal> {
        let a = x.k() as u32;
        let shape = Shape::upper(a)?;
        let expected_bounds: Vec<u32> = (1..=a).map(|j| 2 * j - 1).collect();
        if x.m() != 2 * a || x.bounds() != expected_bounds {
            return Err(Error::InvalidBounds {
                bounds: x.bounds().to_vec(),
                reason: format!("expected bounds (1,3,...,{}) with m={}", 2 * a - 1, 2 * a),
            });
        }
        let cols = (1..=a)
            .map(|i| x.entries()[(a - i) as usize] - (2 * (a + 1 - i) - 1))
            .collect();
        Ideal::from_columns(shape, cols)
    }

    /// The zero-prefix sequence carrying an ideal of `Left(a)`:
    /// entry `j` is `|C_{a+1-j}|`. Intertwines the column toggle of column
    /// `j` with zero-winching at `a+1-j`.
    pub fn to_zero_prefix_seq(&self) -> Result<ZeroPrefixSeq> {
        let Shape::Left { a } = self.shape() else {
            return Err(Error::InvalidShape(format!(
                "{} is not a left shape",
                self.shape()
            )));
        };
        let cols = self.columns();
        let entries = (1..=a).map(|j| cols[(a - j) as usize]).collect();
        ZeroPrefixSeq::new(entries)
    }

    /// Inverse of [`Self::to_zero_prefix_seq`].
    pub fn from_zero_prefix_seq(x: &ZeroPrefixSeq) -> Result<Ideal> {
        let a = x.n() as u32;
        let shape = Shape::left(a)?;
        let cols = (1..=a)
            .map(|i| x.entries()[(a - i) as usize])
            .collect();
        Ideal::from_columns(shape, cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(m: u32, e: &[u32]) -> IncreasingSeq {
        IncreasingSeq::new(m, e.to_vec()).unwrap()
    }

    fn zseq(e: &[u32]) -> ZeroPrefixSeq {
        ZeroPrefixSeq::new(e.to_vec()).unwrap()
    }

    #[test]
    fn winch_at_examples() {
        let x = seq(7, &[2, 3, 5, 7]);
        assert_eq!(x.winch_at(1).unwrap(), seq(7, &[1, 3, 5, 7]));
        assert_eq!(x.winch_at(2).unwrap(), seq(7, &[2, 4, 5, 7]));
        // x_4 + 1 = 8 = m+1 wraps to x_3 + 1
        assert_eq!(x.winch_at(4).unwrap(), seq(7, &[2, 3, 5, 6]));
        assert!(x.winch_at(0).is_err());
        assert!(x.winch_at(5).is_err());
    }

    #[test]
    fn winch_pass_examples() {
        let nu = Perm::identity(2);
        assert_eq!(seq(4, &[1, 3]).winch_pass(&nu).unwrap(), seq(4, &[2, 4]));
        assert_eq!(seq(4, &[3, 4]).winch_pass(&nu).unwrap(), seq(4, &[1, 2]));
        // the definitional order applies nu(1) first; with nu = (2,3,1,4) the
        // pass yields (3,4,6,7), while applying the indices in the order of
        // nu's inverse yields (1,4,6,7)
        let x = seq(7, &[2, 3, 5, 7]);
        let nu = Perm::new(vec![2, 3, 1, 4]).unwrap();
        assert_eq!(x.winch_pass(&nu).unwrap(), seq(7, &[3, 4, 6, 7]));
        assert_eq!(
            x.winch_pass(&nu.inverse()).unwrap(),
            seq(7, &[1, 4, 6, 7])
        );
    }

    #[test]
    fn inverse_winch_examples() {
        assert_eq!(
            seq(7, &[1, 3, 5, 7]).inverse_winch_at(1).unwrap(),
            seq(7, &[2, 3, 5, 7])
        );
        assert_eq!(
            seq(7, &[2, 4, 5, 7]).inverse_winch_at(2).unwrap(),
            seq(7, &[2, 3, 5, 7])
        );
        // round trip at every index, exhaustively on S_{3,5}
        for x in IncreasingSeq::all(3, 5) {
            for i in 1..=3 {
                assert_eq!(x.winch_at(i).unwrap().inverse_winch_at(i).unwrap(), x);
            }
        }
    }

    #[test]
    fn bounded_winch_examples() {
        let b = |e: &[u32]| BoundedSeq::new(4, vec![1, 3], e.to_vec()).unwrap();
        assert_eq!(b(&[1, 3]).winch_at(1).unwrap(), b(&[2, 3]));
        assert_eq!(b(&[2, 3]).winch_at(2).unwrap(), b(&[2, 4]));
        // the wrap value 2 is clamped up to the bound 3
        assert_eq!(b(&[1, 4]).winch_at(2).unwrap(), b(&[1, 3]));
        assert!(BoundedSeq::new(4, vec![1, 3], vec![1, 2]).is_err());
        assert!(BoundedSeq::new(4, vec![3, 1], vec![3, 4]).is_err());
    }

    #[test]
    fn zero_winch_examples() {
        assert_eq!(zseq(&[0, 0, 1]).winch_at(3).unwrap(), zseq(&[0, 0, 2]));
        assert_eq!(zseq(&[1, 2, 3]).winch_at(1).unwrap(), zseq(&[0, 2, 3]));
        assert_eq!(zseq(&[0, 2, 3]).winch_at(3).unwrap(), zseq(&[0, 2, 3]));
        assert!(ZeroPrefixSeq::new(vec![1, 0, 2]).is_err());
        assert!(ZeroPrefixSeq::new(vec![0, 4, 2]).is_err());
    }

    /// Every single winching step lands back inside its space, exhaustively
    /// at the sizes the rest of the suite relies on.
    #[test]
    fn winching_validity_exhaustive() {
        for m in 1..=8u32 {
            for k in 1..=m as usize {
                for x in IncreasingSeq::all(k, m) {
                    for i in 1..=k {
                        let y = x.winch_at(i).unwrap();
                        IncreasingSeq::new(m, y.entries().to_vec()).unwrap();
                        let z = x.inverse_winch_at(i).unwrap();
                        IncreasingSeq::new(m, z.entries().to_vec()).unwrap();
                    }
                }
            }
        }
        for n in 1..=7usize {
            for x in ZeroPrefixSeq::all(n) {
                for i in 1..=n {
                    let y = x.winch_at(i).unwrap();
                    ZeroPrefixSeq::new(y.entries().to_vec()).unwrap();
                }
            }
        }
        for (m, bounds) in [(4u32, vec![1, 3]), (6, vec![2, 3, 5]), (5, vec![1, 2, 3, 4])] {
            for x in BoundedSeq::all(m, &bounds).unwrap() {
                for i in 1..=bounds.len() {
                    let y = x.winch_at(i).unwrap();
                    BoundedSeq::new(m, bounds.clone(), y.entries().to_vec()).unwrap();
                }
            }
        }
    }

    #[test]
    fn space_cardinalities() {
        assert_eq!(IncreasingSeq::all(2, 4).len(), 6);
        assert_eq!(ZeroPrefixSeq::all(3).len(), 8);
        assert_eq!(BoundedSeq::all(4, &[1, 3]).unwrap().len(), 5);
    }

    #[test]
    fn square_bijection_examples() {
        let sh = Shape::square(2, 2).unwrap();
        assert_eq!(
            Ideal::empty(sh).to_winch_seq().unwrap(),
            seq(4, &[1, 2])
        );
        assert_eq!(Ideal::full(sh).to_winch_seq().unwrap(), seq(4, &[3, 4]));
        let i = Ideal::from_columns(sh, vec![2, 1]).unwrap();
        assert_eq!(i.to_winch_seq().unwrap(), seq(4, &[2, 4]));
        assert_eq!(Ideal::from_winch_seq(2, 2, &seq(4, &[2, 4])).unwrap(), i);
    }

    #[test]
    fn upper_bijection_examples() {
        let u2 = Shape::upper(2).unwrap();
        let bs = |e: &[u32]| BoundedSeq::new(4, vec![1, 3], e.to_vec()).unwrap();
        assert_eq!(Ideal::empty(u2).to_bounded_seq().unwrap(), bs(&[1, 3]));
        assert_eq!(Ideal::full(u2).to_bounded_seq().unwrap(), bs(&[3, 4]));
        let i = Ideal::from_columns(u2, vec![0, 1]).unwrap();
        assert_eq!(i.to_bounded_seq().unwrap(), bs(&[2, 3]));
        assert_eq!(Ideal::from_bounded_seq(&bs(&[2, 3])).unwrap(), i);
    }

    #[test]
    fn left_bijection_examples() {
        let l3 = Shape::left(3).unwrap();
        assert_eq!(
            Ideal::empty(l3).to_zero_prefix_seq().unwrap(),
            zseq(&[0, 0, 0])
        );
        assert_eq!(
            Ideal::full(l3).to_zero_prefix_seq().unwrap(),
            zseq(&[1, 2, 3])
        );
        let i = Ideal::from_columns(l3, vec![1, 0, 0]).unwrap();
        assert_eq!(i.to_zero_prefix_seq().unwrap(), zseq(&[0, 0, 1]));
        assert_eq!(Ideal::from_zero_prefix_seq(&zseq(&[0, 0, 1])).unwrap(), i);
    }
}
