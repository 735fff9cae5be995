//! The three lattice families, their order ideals, element toggles, and
//! toggle-pass actions (rowmotion, promotion, comotion, generalized passes).
//!
//! Elements are coordinate pairs `(col, row)`, 1-based, ordered componentwise.
//! The families:
//!
//! * `Square(a, b)`: all `(i, j)` with `i in [a]`, `j in [b]`.
//! * `Upper(a)`: the subset of the `a x a` square with `i + j >= a + 1`.
//! * `Left(a)`: the subset of the `a x a` square with `j >= i`.
//!
//! An ideal is stored canonically as its column profile, the vector of column
//! sizes; each column of an ideal consists of the lowest cells of that column.

use crate::error::{Error, Result};
use crate::perm::Perm;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the three lattice families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Square { a: u32, b: u32 },
    Upper { a: u32 },
    Left { a: u32 },
}

/// A lattice element `(col, row)`, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub col: u32,
    pub row: u32,
}

impl Element {
    pub fn new(col: u32, row: u32) -> Self {
        Element { col, row }
    }

    /// Componentwise order.
    pub fn le(&self, other: &Element) -> bool {
        self.col <= other.col && self.row <= other.row
    }

    pub fn rank(&self) -> i64 {
        self.col as i64 + self.row as i64
    }

    pub fn file(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Toggle-pass axes: rank = constant `i+j`, file = constant `i-j`,
/// column = constant `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    Rank,
    File,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Rank => write!(f, "rank"),
            Axis::File => write!(f, "file"),
            Axis::Column => write!(f, "column"),
        }
    }
}

impl Shape {
    pub fn square(a: u32, b: u32) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidShape(format!("q:{a},{b} needs a,b >= 1")));
        }
        Ok(Shape::Square { a, b })
    }

    pub fn upper(a: u32) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidShape(format!("u:{a} needs a >= 1")));
        }
        Ok(Shape::Upper { a })
    }

    pub fn left(a: u32) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidShape(format!("l:{a} needs a >= 1")));
        }
        Ok(Shape::Left { a })
    }

    /// Number of columns.
    pub fn cols(&self) -> u32 {
        match *self {
            Shape::Square { a, .. } | Shape::Upper { a } | Shape::Left { a } => a,
        }
    }

    /// Row of the lowest cell of column `c`.
    pub fn row_min(&self, c: u32) -> u32 {
        match *self {
            Shape::Square { .. } => 1,
            Shape::Upper { a } => a + 1 - c,
            Shape::Left { .. } => c,
        }
    }

    /// Number of cells in column `c`.
    pub fn capacity(&self, c: u32) -> u32 {
        match *self {
            Shape::Square { b, .. } => b,
            Shape::Upper { .. } => c,
            Shape::Left { a } => a + 1 - c,
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        x.col >= 1
            && x.col <= self.cols()
            && x.row >= self.row_min(x.col)
            && x.row < self.row_min(x.col) + self.capacity(x.col)
    }

    /// Total number of elements.
    pub fn len(&self) -> usize {
        (1..=self.cols()).map(|c| self.capacity(c) as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All elements, column-major from the bottom of each column.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.len());
        for c in 1..=self.cols() {
            let lo = self.row_min(c);
            for r in lo..lo + self.capacity(c) {
                out.push(Element::new(c, r));
            }
        }
        out
    }

    /// The index values present along an axis, ascending.
    pub fn axis_indices(&self, axis: Axis) -> Vec<i64> {
        match axis {
            Axis::Column => (1..=self.cols() as i64).collect(),
            Axis::Rank => self
                .elements()
                .iter()
                .map(Element::rank)
                .sorted()
                .dedup()
                .collect(),
            Axis::File => self
                .elements()
                .iter()
                .map(Element::file)
                .sorted()
                .dedup()
                .collect(),
        }
    }

    /// The elements with the given axis index, ascending.
    pub fn axis_members(&self, axis: Axis, v: i64) -> Vec<Element> {
        self.elements()
            .into_iter()
            .filter(|x| match axis {
                Axis::Rank => x.rank() == v,
                Axis::File => x.file() == v,
                Axis::Column => x.col as i64 == v,
            })
            .collect()
    }

    /// All linear extensions, each listing the elements bottom-up.
    ///
    /// Feasible at desk scale only; `Square(3,3)` already has 42.
    pub fn linear_extensions(&self) -> Vec<Vec<Element>> {
        fn rec(remaining: &mut Vec<Element>, acc: &mut Vec<Element>, out: &mut Vec<Vec<Element>>) {
            if remaining.is_empty() {
                out.push(acc.clone());
                return;
            }
            for idx in 0..remaining.len() {
                let cand = remaining[idx];
                let minimal = remaining.iter().all(|y| *y == cand || !y.le(&cand));
                if minimal {
                    remaining.swap_remove(idx);
                    acc.push(cand);
                    rec(remaining, acc, out);
                    acc.pop();
                    remaining.push(cand);
                    let last = remaining.len() - 1;
                    remaining.swap(idx, last);
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut self.elements(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::Square { a, b } => write!(f, "q:{a},{b}"),
            Shape::Upper { a } => write!(f, "u:{a}"),
            Shape::Left { a } => write!(f, "l:{a}"),
        }
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |token: &str| Error::Parse {
            input: s.to_string(),
            what: "shape spec (q:A,B | u:A | l:A)".to_string(),
            token: token.to_string(),
        };
        let (kind, rest) = s.split_once(':').ok_or_else(|| parse_err(s))?;
        match kind {
            "q" => {
                let (sa, sb) = rest.split_once(',').ok_or_else(|| parse_err(rest))?;
                let a = sa.parse().map_err(|_| parse_err(sa))?;
                let b = sb.parse().map_err(|_| parse_err(sb))?;
                Shape::square(a, b)
            }
            "u" => Shape::upper(rest.parse().map_err(|_| parse_err(rest))?),
            "l" => Shape::left(rest.parse().map_err(|_| parse_err(rest))?),
            _ => Err(parse_err(kind)),
        }
    }
}

/// An order ideal, canonically stored as its column profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    shape: Shape,
    cols: Vec<u32>,
}

impl Ideal {
    pub fn empty(shape: Shape) -> Self {
        Ideal {
            shape,
            cols: vec![0; shape.cols() as usize],
        }
    }

    pub fn full(shape: Shape) -> Self {
        Ideal {
            shape,
            cols: (1..=shape.cols()).map(|c| shape.capacity(c)).collect(),
        }
    }

    /// Builds an ideal from a column profile, validating the shape-specific
    /// profile law (down-closure expressed on column sizes).
    pub fn from_columns(shape: Shape, cols: Vec<u32>) -> Result<Self> {
        let a = shape.cols() as usize;
        let fail = |reason: &str| Error::InvalidProfile {
            shape: shape.to_string(),
            profile: cols.clone(),
            reason: reason.to_string(),
        };
        if cols.len() != a {
            return Err(fail(&format!("expected {a} columns")));
        }
        for (i, &c) in cols.iter().enumerate() {
            if c > shape.capacity(i as u32 + 1) {
                return Err(fail(&format!("column {} exceeds capacity", i + 1)));
            }
        }
        for i in 1..a {
            let (prev, cur) = (cols[i - 1], cols[i]);
            let ok = match shape {
                Shape::Square { .. } => cur <= prev,
                Shape::Upper { .. } => cur <= prev + 1,
                Shape::Left { .. } => cur == 0 || prev > cur,
            };
            if !ok {
                return Err(fail(&format!("columns {i} and {} violate down-closure", i + 1)));
            }
        }
        Ok(Ideal { shape, cols })
    }

    /// Builds an ideal from an explicit element set, checking down-closure
    /// and that each column is a bottom segment.
    pub fn from_elements(shape: Shape, elements: &[Element]) -> Result<Self> {
        for &x in elements {
            if !shape.contains(x) {
                return Err(Error::ElementOutsideShape {
                    shape: shape.to_string(),
                    col: x.col,
                    row: x.row,
                });
            }
        }
        let mut cols = vec![0u32; shape.cols() as usize];
        for &x in elements {
            cols[x.col as usize - 1] += 1;
        }
        let ideal = Ideal::from_columns(shape, cols)
            .map_err(|e| Error::NotAnIdeal(e.to_string()))?;
        for &x in elements {
            if !ideal.contains(x) {
                return Err(Error::NotAnIdeal(format!(
                    "column {} of the set is not a bottom segment",
                    x.col
                )));
            }
        }
        Ok(ideal)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The column profile `(|C_1|, ..., |C_a|)`.
    pub fn columns(&self) -> &[u32] {
        &self.cols
    }

    /// Number of elements.
    pub fn size(&self) -> u32 {
        self.cols.iter().sum()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.shape.contains(x) && {
            let h = x.row - self.shape.row_min(x.col) + 1;
            h <= self.cols[x.col as usize - 1]
        }
    }

    /// The elements of the ideal, column-major bottom-up.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = Vec::new();
        for c in 1..=self.shape.cols() {
            let lo = self.shape.row_min(c);
            for r in lo..lo + self.cols[c as usize - 1] {
                out.push(Element::new(c, r));
            }
        }
        out
    }

    /// Toggles one element: adds it if the union is an ideal, removes it if
    /// the difference is one, and otherwise returns the ideal unchanged.
    /// Involutive: toggling twice restores the input.
    pub fn toggle(&self, x: Element) -> Result<Ideal> {
        if !self.shape.contains(x) {
            return Err(Error::ElementOutsideShape {
                shape: self.shape.to_string(),
                col: x.col,
                row: x.row,
            });
        }
        let sh = self.shape;
        let ci = x.col as usize - 1;
        let h = x.row - sh.row_min(x.col) + 1;
        let mut next = self.clone();
        if h == self.cols[ci] + 1 {
            // addable iff the left neighbor is outside the shape or present
            let left = Element::new(x.col - 1, x.row);
            if x.col == 1 || !sh.contains(left) || self.contains(left) {
                next.cols[ci] += 1;
            }
        } else if h == self.cols[ci] {
            // removable iff the right neighbor is outside the shape or absent
            let right = Element::new(x.col + 1, x.row);
            if !sh.contains(right) || !self.contains(right) {
                next.cols[ci] -= 1;
            }
        }
        Ok(next)
    }

    /// One column pass: toggles every cell of column `c`, top element first.
    ///
    /// Closed form on the profile: the column grows by one when the cell above
    /// its top is present in the shape and its left neighbor does not block it;
    /// otherwise cells are removed from the top down until one is held in place
    /// by its right neighbor.
    pub fn toggle_column(&self, c: u32) -> Ideal {
        debug_assert!(c >= 1 && c <= self.shape.cols());
        let sh = self.shape;
        let a = sh.cols();
        let ci = c as usize - 1;
        let l = self.cols[ci];
        let mut next = self.clone();
        if l < sh.capacity(c) {
            let grow = if c == 1 {
                true
            } else {
                let lh = l as i64 + 1 + sh.row_min(c) as i64 - sh.row_min(c - 1) as i64;
                lh <= 0 || self.cols[ci - 1] as i64 >= lh
            };
            if grow {
                next.cols[ci] = l + 1;
                return next;
            }
        }
        let mut h = l as i64;
        while h >= 1 {
            if c < a {
                let rh = h + sh.row_min(c) as i64 - sh.row_min(c + 1) as i64;
                if rh >= 1 && rh <= sh.capacity(c + 1) as i64 && self.cols[ci + 1] as i64 >= rh {
                    break;
                }
            }
            h -= 1;
        }
        next.cols[ci] = h as u32;
        next
    }

    /// Comotion: one column pass per column, in the order `nu(1), ..., nu(a)`.
    pub fn comotion(&self, nu: &Perm) -> Result<Ideal> {
        if nu.len() != self.shape.cols() as usize {
            return Err(Error::InvalidPermutation {
                expected: format!("[{}]", self.shape.cols()),
                got: nu.order().iter().map(|&x| x as i64).collect(),
            });
        }
        let mut cur = self.clone();
        for &c in nu.order() {
            cur = cur.toggle_column(c as u32);
        }
        Ok(cur)
    }

    /// Applies the toggle pass over one axis set, built from element toggles.
    /// Within a column the top element toggles first; within a rank or file
    /// the member order does not matter (the toggles commute).
    pub fn toggle_axis_set(&self, axis: Axis, v: i64) -> Ideal {
        let mut members = self.shape.axis_members(axis, v);
        members.reverse();
        let mut cur = self.clone();
        for x in members {
            cur = cur.toggle(x).expect("member is in shape");
        }
        cur
    }

    /// A full pass over an axis: `order` lists every axis index exactly once,
    /// applied first to last.
    pub fn toggle_pass(&self, axis: Axis, order: &[i64]) -> Result<Ideal> {
        let mut expected = self.shape.axis_indices(axis);
        let mut got: Vec<i64> = order.to_vec();
        expected.sort_unstable();
        got.sort_unstable();
        if expected != got {
            return Err(Error::InvalidPermutation {
                expected: format!("{axis} indices {expected:?} of {}", self.shape),
                got: order.to_vec(),
            });
        }
        let mut cur = self.clone();
        for &v in order {
            cur = cur.toggle_axis_set(axis, v);
        }
        Ok(cur)
    }

    /// Rowmotion by its direct definition: the down-set of the minimal
    /// elements of the ideal's complement.
    pub fn rowmotion_direct(&self) -> Ideal {
        let sh = self.shape;
        // Minimal elements of the complement are exactly the addable cells.
        let mut addable = Vec::new();
        for c in 1..=sh.cols() {
            let l = self.cols[c as usize - 1];
            if l < sh.capacity(c) {
                let cell = Element::new(c, sh.row_min(c) + l);
                let left = Element::new(c.wrapping_sub(1), cell.row);
                if c == 1 || !sh.contains(left) || self.contains(left) {
                    addable.push(cell);
                }
            }
        }
        let mut cols = vec![0u32; sh.cols() as usize];
        for x in addable {
            for c in 1..=x.col {
                let lo = sh.row_min(c);
                if x.row >= lo {
                    let h = (x.row - lo + 1).min(sh.capacity(c));
                    let ci = c as usize - 1;
                    cols[ci] = cols[ci].max(h);
                }
            }
        }
        Ideal { shape: sh, cols }
    }

    /// Promotion: the file pass in ascending file order.
    pub fn promotion(&self) -> Ideal {
        let order = self.shape.axis_indices(Axis::File);
        self.toggle_pass(Axis::File, &order)
            .expect("ascending file order is a permutation")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.cols.iter().join(","))
    }
}

/// Every ideal of the shape, in lexicographic column-profile order.
pub fn all_ideals(shape: Shape) -> Vec<Ideal> {
    fn rec(shape: Shape, acc: &mut Vec<u32>, out: &mut Vec<Ideal>) {
        let a = shape.cols() as usize;
        if acc.len() == a {
            out.push(Ideal {
                shape,
                cols: acc.clone(),
            });
            return;
        }
        let c = acc.len() as u32 + 1;
        let cap = shape.capacity(c);
        let prev = if acc.is_empty() { None } else { Some(acc[acc.len() - 1]) };
        for v in 0..=cap {
            let ok = match (shape, prev) {
                (_, None) => true,
                (Shape::Square { .. }, Some(p)) => v <= p,
                (Shape::Upper { .. }, Some(p)) => v <= p + 1,
                (Shape::Left { .. }, Some(p)) => v == 0 || p > v,
            };
            if ok {
                acc.push(v);
                rec(shape, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: u32, b: u32) -> Shape {
        Shape::square(a, b).unwrap()
    }

    fn ideal(sh: Shape, cols: &[u32]) -> Ideal {
        Ideal::from_columns(sh, cols.to_vec()).unwrap()
    }

    #[test]
    fn element_sets_of_the_three_families() {
        assert_eq!(q(2, 2).len(), 4);
        assert_eq!(Shape::upper(3).unwrap().len(), 6);
        assert_eq!(Shape::left(3).unwrap().len(), 6);
        // Left uses the transposed convention j >= i.
        assert!(Shape::left(3).unwrap().contains(Element::new(1, 3)));
        assert!(!Shape::left(3).unwrap().contains(Element::new(3, 1)));
        assert!(Shape::upper(3).unwrap().contains(Element::new(3, 1)));
        assert!(!Shape::upper(3).unwrap().contains(Element::new(1, 1)));
    }

    #[test]
    fn toggle_examples_on_the_square() {
        let sh = q(2, 2);
        let empty = Ideal::empty(sh);
        // forced add at the minimum
        assert_eq!(empty.toggle(Element::new(1, 1)).unwrap(), ideal(sh, &[1, 0]));
        // cannot add (2,1): (1,1) missing
        assert_eq!(empty.toggle(Element::new(2, 1)).unwrap(), empty);
        // removing (1,2) from [2,1] keeps down-closure
        let i = ideal(sh, &[2, 1]);
        assert_eq!(i.toggle(Element::new(1, 2)).unwrap(), ideal(sh, &[1, 1]));
        // outside the shape is a domain error
        assert!(empty.toggle(Element::new(3, 1)).is_err());
    }

    #[test]
    fn column_pass_examples() {
        let sh = q(2, 2);
        let nu = Perm::identity(2);
        assert_eq!(Ideal::empty(sh).comotion(&nu).unwrap(), ideal(sh, &[1, 1]));
        assert_eq!(Ideal::full(sh).comotion(&nu).unwrap(), ideal(sh, &[2, 0]));
        let u2 = Shape::upper(2).unwrap();
        let i = ideal(u2, &[0, 1]); // the single element (2,1)
        assert_eq!(i.comotion(&Perm::identity(2)).unwrap(), Ideal::full(u2));
    }

    #[test]
    fn comotion_orbits_on_the_square() {
        let sh = q(2, 2);
        let nu = Perm::identity(2);
        let mut i = Ideal::empty(sh);
        let mut orbit = vec![i.columns().to_vec()];
        for _ in 0..3 {
            i = i.comotion(&nu).unwrap();
            orbit.push(i.columns().to_vec());
        }
        assert_eq!(
            orbit,
            vec![vec![0, 0], vec![1, 1], vec![2, 2], vec![2, 0]]
        );
        assert_eq!(i.comotion(&nu).unwrap(), Ideal::empty(sh));
        // the other orbit has length 2
        let j = ideal(sh, &[1, 0]);
        assert_eq!(j.comotion(&nu).unwrap(), ideal(sh, &[2, 1]));
        assert_eq!(ideal(sh, &[2, 1]).comotion(&nu).unwrap(), j);
    }

    #[test]
    fn comotion_on_left_shapes_has_period_dividing_two_a() {
        for a in 1..=5u32 {
            let sh = Shape::left(a).unwrap();
            for nu in [Perm::identity(a as usize), Perm::reversed(a as usize)] {
                let mut cur = Ideal::empty(sh);
                for _ in 0..2 * a {
                    cur = cur.comotion(&nu).unwrap();
                }
                assert_eq!(cur, Ideal::empty(sh), "l:{a} nu={nu}");
            }
        }
    }

    #[test]
    fn rowmotion_direct_examples() {
        let sh = q(2, 2);
        assert_eq!(Ideal::empty(sh).rowmotion_direct(), ideal(sh, &[1, 0]));
        assert_eq!(Ideal::full(sh).rowmotion_direct(), Ideal::empty(sh));
        assert_eq!(ideal(sh, &[1, 0]).rowmotion_direct(), ideal(sh, &[2, 1]));
    }

    /// The printed pairing "T_(1,..,a) = rowmotion" fails; under the
    /// rightmost-first composition convention the correct specializations are
    /// T_(a,..,1) = rowmotion and T_(1,..,a) = promotion.
    #[test]
    fn comotion_specializations_are_reversed_vs_naive_reading() {
        let sh = q(2, 2);
        for i in all_ideals(sh) {
            assert_eq!(i.comotion(&Perm::reversed(2)).unwrap(), i.rowmotion_direct());
            assert_eq!(i.comotion(&Perm::identity(2)).unwrap(), i.promotion());
        }
        let empty = Ideal::empty(sh);
        assert_ne!(
            empty.comotion(&Perm::identity(2)).unwrap(),
            empty.rowmotion_direct()
        );
    }

    #[test]
    fn column_profile_examples() {
        assert_eq!(Ideal::full(q(2, 2)).columns(), &[2, 2]);
        let u2 = Shape::upper(2).unwrap();
        let i = Ideal::from_elements(u2, &[Element::new(1, 2), Element::new(2, 1)]).unwrap();
        assert_eq!(i.columns(), &[1, 1]);
        let l3 = Shape::left(3).unwrap();
        let j = Ideal::from_elements(l3, &[Element::new(1, 1)]).unwrap();
        assert_eq!(j.columns(), &[1, 0, 0]);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(all_ideals(q(2, 2)).len(), 6);
        assert_eq!(all_ideals(q(3, 3)).len(), 20); // binomial(6,3)
        assert_eq!(all_ideals(Shape::left(3).unwrap()).len(), 8); // 2^3
        assert_eq!(all_ideals(Shape::upper(2).unwrap()).len(), 5);
        assert_eq!(all_ideals(q(1, 4)).len(), 5); // degenerate a=1
    }

    #[test]
    fn from_elements_rejects_non_ideals() {
        let sh = q(2, 2);
        assert!(Ideal::from_elements(sh, &[Element::new(2, 1)]).is_err());
        assert!(Ideal::from_elements(sh, &[Element::new(1, 2)]).is_err());
        assert!(Ideal::from_elements(sh, &[Element::new(1, 1), Element::new(2, 1)]).is_ok());
    }

    #[test]
    fn linear_extension_count_is_catalan_for_q33() {
        assert_eq!(q(3, 3).linear_extensions().len(), 42);
    }

    /// Ranks and files never contain covering pairs, which is what makes
    /// their member order irrelevant in a pass.
    #[test]
    fn rank_and_file_members_never_cover_each_other() {
        for sh in [
            q(3, 3),
            q(4, 2),
            Shape::upper(4).unwrap(),
            Shape::left(4).unwrap(),
        ] {
            for axis in [Axis::Rank, Axis::File] {
                for v in sh.axis_indices(axis) {
                    let members = sh.axis_members(axis, v);
                    for &x in &members {
                        for &y in &members {
                            let adjacent = (x.col == y.col && x.row.abs_diff(y.row) == 1)
                                || (x.row == y.row && x.col.abs_diff(y.col) == 1);
                            assert!(!adjacent, "{sh} {axis} {v}: {x} covers {y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn toggle_pass_rejects_bad_orders() {
        let i = Ideal::empty(q(2, 2));
        assert!(i.toggle_pass(Axis::Rank, &[2, 3]).is_err());
        assert!(i.toggle_pass(Axis::Rank, &[4, 3, 2]).is_ok());
        assert!(i.toggle_pass(Axis::File, &[-1, 0, 1]).is_ok());
        assert!(i.toggle_pass(Axis::File, &[-1, 0, 2]).is_err());
    }

    #[test]
    fn shape_spec_round_trip() {
        for s in ["q:2,2", "u:3", "l:4", "q:1,7"] {
            let sh: Shape = s.parse().unwrap();
            assert_eq!(sh.to_string(), s);
        }
        assert!("q:0,2".parse::<Shape>().is_err());
        assert!("x:3".parse::<Shape>().is_err());
        assert!("q:2".parse::<Shape>().is_err());
    }
}
