//! Tuple boards (orbit traces of a winching action), their snake
//! decompositions, the crawl action on snake maps, complementary binary words
//! with block rotation, and the necklace correspondence.
//!
//! A tuple board lists the iterates of a seed, one row per step, and closes
//! into a cylinder once the orbit returns. Snake analysis uses a standard
//! cylinder circumference: `m` rows for plain winching and `2n` rows for
//! winching with zeros (the orbit period divides both), and the bare period
//! for lower-bound winching.
//!
//! A snake is a maximal chain of cells holding consecutive values, linked by
//! the successor map: prefer the cell below; otherwise step right (same row)
//! when the current column is winched before the next one in the pass, or
//! diagonally down-right when it is winched after. The comparison is on
//! application *positions* within the pass — for a pass ordered by `nu` the
//! position of column `j` is `nu^{-1}(j)` — which is what makes the snake
//! laws hold for every `nu`, not only for involutions.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq::{BoundedSeq, IncreasingSeq, ZeroPrefixSeq};
use itertools::Itertools;
use std::fmt;

/// Which winching variant generated a board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoardAction {
    Winch { m: u32 },
    WinchLb { m: u32, bounds: Vec<u32> },
    WinchZero,
}

impl BoardAction {
    pub fn tag(&self) -> &'static str {
        match self {
            BoardAction::Winch { .. } => "winch",
            BoardAction::WinchLb { .. } => "winch_lb",
            BoardAction::WinchZero => "winch_zero",
        }
    }
}

/// A board cell, `row` and `col` both 1-based. Rows wrap around the cylinder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// A maximal snake: cells with their (consecutive) values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snake {
    cells: Vec<(Cell, u32)>,
}

impl Snake {
    pub fn cells(&self) -> &[(Cell, u32)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn start(&self) -> (Cell, u32) {
        self.cells[0]
    }

    pub fn end(&self) -> (Cell, u32) {
        *self.cells.last().unwrap()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.cells.iter().any(|&(c, _)| c == cell)
    }

    /// The snake map: cell count per column.
    pub fn map(&self, width: usize) -> Vec<u32> {
        let mut counts = vec![0u32; width];
        for &(c, _) in &self.cells {
            counts[c.col - 1] += 1;
        }
        counts
    }
}

/// Cyclic left shift of a snake map by one position.
pub fn left_shift(map: &[u32]) -> Vec<u32> {
    if map.is_empty() {
        return Vec::new();
    }
    let mut out = map[1..].to_vec();
    out.push(map[0]);
    out
}

/// The orbit trace of a seed under one winching variant, with cylinder
/// semantics (row indices wrap modulo the period).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleBoard {
    action: BoardAction,
    nu: Perm,
    /// Position of each column in the pass; `pos[j-1] = t` means column `j`
    /// is winched `t`-th (1-based).
    pos: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl TupleBoard {
    /// Rows of a plain-winching board: seed, pass(seed), ... until the first
    /// return. The period always divides `m`.
    pub fn build_winch(seed: &IncreasingSeq, nu: &Perm) -> Result<TupleBoard> {
        let mut rows = vec![seed.entries().to_vec()];
        let mut cur = seed.winch_pass(nu)?;
        while cur != *seed {
            rows.push(cur.entries().to_vec());
            cur = cur.winch_pass(nu)?;
        }
        let board = TupleBoard::assemble(BoardAction::Winch { m: seed.m() }, nu, rows);
        assert!(
            board.cylinder_rows().is_multiple_of(board.period()),
            "winching period must divide m"
        );
        Ok(board)
    }

    pub fn build_winch_lb(seed: &BoundedSeq, nu: &Perm) -> Result<TupleBoard> {
        let mut rows = vec![seed.entries().to_vec()];
        let mut cur = seed.winch_pass(nu)?;
        while cur != *seed {
            rows.push(cur.entries().to_vec());
            cur = cur.winch_pass(nu)?;
        }
        Ok(TupleBoard::assemble(
            BoardAction::WinchLb {
                m: seed.m(),
                bounds: seed.bounds().to_vec(),
            },
            nu,
            rows,
        ))
    }

    /// Rows of a zero-winching board; the period always divides `2n`.
    pub fn build_winch_zero(seed: &ZeroPrefixSeq, nu: &Perm) -> Result<TupleBoard> {
        let mut rows = vec![seed.entries().to_vec()];
        let mut cur = seed.winch_pass(nu)?;
        while cur != *seed {
            rows.push(cur.entries().to_vec());
            cur = cur.winch_pass(nu)?;
        }
        let board = TupleBoard::assemble(BoardAction::WinchZero, nu, rows);
        assert!(
            board.cylinder_rows().is_multiple_of(board.period()),
            "zero-winching period must divide 2n"
        );
        Ok(board)
    }

    fn assemble(action: BoardAction, nu: &Perm, rows: Vec<Vec<u32>>) -> TupleBoard {
        TupleBoard {
            action,
            nu: nu.clone(),
            pos: (1..=nu.len()).map(|j| nu.position_of(j)).collect(),
            rows,
        }
    }

    pub fn action(&self) -> &BoardAction {
        &self.action
    }

    pub fn nu(&self) -> &Perm {
        &self.nu
    }

    /// Orbit length of the seed.
    pub fn period(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.nu.len()
    }

    /// The raw period rows (row 1 is the seed).
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Circumference of the cylinder used for snake analysis.
    pub fn cylinder_rows(&self) -> usize {
        match &self.action {
            BoardAction::Winch { m } => *m as usize,
            BoardAction::WinchZero => 2 * self.width(),
            BoardAction::WinchLb { .. } => self.period(),
        }
    }

    /// Largest value a snake can reach (`m`, or `n` for zero-winching).
    fn max_value(&self) -> u32 {
        match &self.action {
            BoardAction::Winch { m } | BoardAction::WinchLb { m, .. } => *m,
            BoardAction::WinchZero => self.width() as u32,
        }
    }

    /// Value at a cell; the row index wraps around the cylinder.
    pub fn value(&self, cell: Cell) -> u32 {
        self.rows[(cell.row - 1) % self.rows.len()][cell.col - 1]
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if cell.row < 1
            || cell.row > self.cylinder_rows()
            || cell.col < 1
            || cell.col > self.width()
        {
            return Err(Error::CellOutOfRange {
                row: cell.row,
                col: cell.col,
                height: self.cylinder_rows(),
                width: self.width(),
            });
        }
        Ok(())
    }

    fn row_below(&self, r: usize) -> usize {
        r % self.cylinder_rows() + 1
    }

    /// The unique snake successor of a cell, or `None` where the snake ends.
    pub fn successor(&self, cell: Cell) -> Result<Option<Cell>> {
        self.check_cell(cell)?;
        Ok(self.successor_unchecked(cell))
    }

    fn successor_unchecked(&self, cell: Cell) -> Option<Cell> {
        let v = self.value(cell);
        if v >= self.max_value() {
            return None;
        }
        let below = Cell {
            row: self.row_below(cell.row),
            col: cell.col,
        };
        if self.value(below) == v + 1 {
            return Some(below);
        }
        if cell.col < self.width() {
            let right = Cell {
                row: cell.row,
                col: cell.col + 1,
            };
            let diag = Cell {
                row: below.row,
                col: cell.col + 1,
            };
            let before_next = self.pos[cell.col - 1] < self.pos[cell.col];
            if before_next && self.value(right) == v + 1 {
                return Some(right);
            }
            if !before_next && self.value(diag) == v + 1 {
                return Some(diag);
            }
        }
        None
    }

    fn has_predecessor(&self, cell: Cell) -> bool {
        let v = self.value(cell);
        if v <= 1 {
            // snakes hold positive values, so a 1-cell (or the 0 cells of a
            // zero-winching board) never continues an earlier cell
            return false;
        }
        let above = Cell {
            row: (cell.row + self.cylinder_rows() - 2) % self.cylinder_rows() + 1,
            col: cell.col,
        };
        let mut candidates = vec![above];
        if cell.col > 1 {
            candidates.push(Cell {
                row: cell.row,
                col: cell.col - 1,
            });
            candidates.push(Cell {
                row: above.row,
                col: cell.col - 1,
            });
        }
        candidates
            .into_iter()
            .any(|p| self.value(p) == v - 1 && self.successor_unchecked(p) == Some(cell))
    }

    fn follow(&self, start: Cell) -> Snake {
        let mut cells = vec![(start, self.value(start))];
        let mut cur = start;
        while let Some(next) = self.successor_unchecked(cur) {
            cells.push((next, self.value(next)));
            cur = next;
        }
        Snake { cells }
    }

    /// The complete set of maximal snakes on the cylinder.
    ///
    /// Plain winching: each snake has length `m`, starts at value 1 in
    /// column 1, ends at value `m` in column `k`, and the `k` snakes tile the
    /// cylinder. Lower-bound winching: each snake starts at the bound of its
    /// start column and ends at `m`. Zero winching: every nonzero cell lies
    /// in exactly one snake, each running 1 through `n`.
    pub fn snakes(&self) -> Vec<Snake> {
        let mut out = Vec::new();
        for row in 1..=self.cylinder_rows() {
            for col in 1..=self.width() {
                let cell = Cell { row, col };
                let v = self.value(cell);
                let starts = match &self.action {
                    BoardAction::Winch { .. } | BoardAction::WinchZero => v == 1,
                    BoardAction::WinchLb { bounds, .. } => {
                        v == bounds[col - 1] && !self.has_predecessor(cell)
                    }
                };
                if starts {
                    out.push(self.follow(cell));
                }
            }
        }
        out
    }

    /// The snake covering a given cell, if any.
    pub fn snake_through(&self, cell: Cell) -> Result<Option<Snake>> {
        self.check_cell(cell)?;
        Ok(self.snakes().into_iter().find(|s| s.contains_cell(cell)))
    }

    /// How many cells of column `col` hold the value `v`.
    pub fn census(&self, col: usize, v: u32) -> Result<usize> {
        self.check_cell(Cell { row: 1, col })?;
        Ok((1..=self.cylinder_rows())
            .filter(|&row| self.value(Cell { row, col }) == v)
            .count())
    }
}

/// Column-symmetry census of a plain-winching cylinder: the number of cells
/// holding `j` in column `r` together with the number holding `m+1-j` in the
/// mirrored column `k+1-r`. The two counts are always equal.
pub fn column_symmetry_census(board: &TupleBoard, r: usize, j: u32) -> Result<(usize, usize)> {
    let BoardAction::Winch { m } = board.action() else {
        return Err(Error::SpaceMismatch {
            action: board.action().tag().to_string(),
            space: "column symmetry census needs a plain-winching board".to_string(),
        });
    };
    let k = board.width();
    Ok((board.census(r, j)?, board.census(k + 1 - r, m + 1 - j)?))
}

/// A snake-map state: a zero prefix followed by positive counts summing to
/// the length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrawlState {
    entries: Vec<u32>,
}

impl CrawlState {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len() as u32;
        let zeros = entries.iter().take_while(|&&x| x == 0).count();
        let tail = &entries[zeros..];
        if tail.is_empty()
            || tail.contains(&0)
            || tail.iter().sum::<u32>() != n
        {
            return Err(Error::InvalidCrawlState {
                entries,
                reason: format!(
                    "need a zero prefix then positive entries summing to {n}"
                ),
            });
        }
        Ok(CrawlState { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The crawl action: `c'_i = max(0, c_{i+1} - 1)` while every prefix
    /// entry so far is at most 1, `c_{i+1}` afterwards, and the last entry
    /// absorbs the remainder. Period `n`.
    pub fn crawl(&self) -> CrawlState {
        let n = self.entries.len();
        let mut out = Vec::with_capacity(n);
        let mut prefix_small = true;
        for i in 0..n - 1 {
            prefix_small = prefix_small && self.entries[i] <= 1;
            if prefix_small {
                out.push(self.entries[i + 1].saturating_sub(1));
            } else {
                out.push(self.entries[i + 1]);
            }
        }
        let used: u32 = out.iter().sum();
        out.push(n as u32 - used);
        CrawlState::new(out).expect("crawl stays within the state set")
    }

    /// All states of length `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<CrawlState> {
        fn rec(n: u32, left: u32, acc: &mut Vec<u32>, out: &mut Vec<CrawlState>) {
            if acc.len() == n as usize {
                if left == 0 {
                    out.push(CrawlState {
                        entries: acc.clone(),
                    });
                }
                return;
            }
            let remaining_slots = n as usize - acc.len();
            for v in 1..=left.saturating_sub(remaining_slots as u32 - 1) {
                acc.push(v);
                rec(n, left - v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        for zeros in 0..n {
            let mut acc = vec![0; zeros];
            rec(n as u32, n as u32, &mut acc, &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for CrawlState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

/// A complementary binary word: length `2n` with `b_i = !b_{n+i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceWord {
    bits: Vec<bool>,
}

impl NecklaceWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let len = bits.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::InvalidWord(format!(
                "length {len} is not a positive even number"
            )));
        }
        let n = len / 2;
        for i in 0..n {
            if bits[i] == bits[n + i] {
                return Err(Error::InvalidWord(format!(
                    "positions {} and {} must be complementary",
                    i + 1,
                    n + i + 1
                )));
            }
        }
        Ok(NecklaceWord { bits })
    }

    pub fn n(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Block rotation: remove the leftmost maximal block `1^k 0` and append
    /// it on the right — a cyclic left shift past the first 0. The result is
    /// again complementary. On words ending in 0 this is a bijection of
    /// period `n`; a word ending in 1 maps into that set and never returns.
    pub fn rotate_blocks(&self) -> NecklaceWord {
        let z = self
            .bits
            .iter()
            .position(|&b| !b)
            .expect("a complementary word contains a 0");
        let mut bits = self.bits[z + 1..].to_vec();
        bits.extend_from_slice(&self.bits[..=z]);
        NecklaceWord { bits }
    }

    /// All `2^n` complementary words of half-length `n`.
    pub fn all(n: usize) -> Vec<NecklaceWord> {
        (0..1u64 << n)
            .map(|mask| {
                let mut bits: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                let tail: Vec<bool> = bits.iter().map(|&b| !b).collect();
                bits.extend(tail);
                NecklaceWord { bits }
            })
            .sorted()
            .collect()
    }
}

impl fmt::Display for NecklaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// The word of a snake-map state: first half marks the prefix sums, second
/// half is the complement. Injective, and it intertwines crawl with block
/// rotation.
pub fn word_of(c: &CrawlState) -> NecklaceWord {
    let n = c.n();
    let mut first = vec![false; n];
    let mut total = 0u32;
    for &v in c.entries() {
        total += v;
        if (1..=n as u32).contains(&total) {
            first[total as usize - 1] = true;
        }
    }
    let mut bits = first.clone();
    bits.extend(first.iter().map(|&b| !b));
    NecklaceWord { bits }
}

/// A 2-colored necklace: a `k`-subset of `[m]`, acted on by rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    m: u32,
    positions: Vec<u32>,
}

impl Necklace {
    pub fn new(m: u32, positions: Vec<u32>) -> Result<Self> {
        let ok = !positions.is_empty()
            && positions[0] >= 1
            && *positions.last().unwrap() <= m
            && positions.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(Error::InvalidNecklace { positions, m });
        }
        Ok(Necklace { m, positions })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    /// Rotation by one: add 1 to every bead position, wrapping the largest
    /// back to 1. Period divides `m`.
    pub fn rotate(&self) -> Necklace {
        let k = self.positions.len();
        let mut positions;
        if self.positions[k - 1] < self.m {
            positions = self.positions.iter().map(|&x| x + 1).collect::<Vec<_>>();
        } else {
            positions = Vec::with_capacity(k);
            positions.push(1);
            positions.extend(self.positions[..k - 1].iter().map(|&x| x + 1));
        }
        Necklace {
            m: self.m,
            positions,
        }
    }

    /// All `k`-subsets of `[m]`, in lexicographic order.
    pub fn all(k: usize, m: u32) -> Vec<Necklace> {
        (1..=m)
            .combinations(k)
            .map(|positions| Necklace { m, positions })
            .sorted()
            .collect()
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.positions.iter().join(","))
    }
}

/// The necklace of a sequence under plain winching: read the snake map
/// `c` of the snake covering the top-left board cell and lay out partial
/// sums anchored at `c_1 - x_1 + 1`. Intertwines one winching pass with one
/// necklace rotation: `R(K(W(x))) = K(x)`.
pub fn necklace_of(x: &IncreasingSeq, nu: &Perm) -> Result<Necklace> {
    let board = TupleBoard::build_winch(x, nu)?;
    let snake = board
        .snake_through(Cell { row: 1, col: 1 })?
        .expect("plain-winching snakes tile the cylinder");
    let c = snake.map(board.width());
    let mut positions = Vec::with_capacity(x.k());
    let mut cur = c[0] - x.entries()[0] + 1;
    positions.push(cur);
    for &ci in &c[1..] {
        cur += ci;
        positions.push(cur);
    }
    Necklace::new(x.m(), positions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(m: u32, e: &[u32]) -> IncreasingSeq {
        IncreasingSeq::new(m, e.to_vec()).unwrap()
    }

    fn board(m: u32, e: &[u32], nu: &[usize]) -> TupleBoard {
        TupleBoard::build_winch(&seq(m, e), &Perm::new(nu.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn board_rows_and_periods() {
        let b = board(4, &[1, 2], &[1, 2]);
        assert_eq!(b.period(), 4);
        assert_eq!(
            b.rows(),
            &[vec![1, 2], vec![1, 3], vec![2, 4], vec![3, 4]]
        );
        let b2 = board(4, &[1, 4], &[1, 2]);
        assert_eq!(b2.rows(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(b2.cylinder_rows(), 4);

        let z = ZeroPrefixSeq::new(vec![0, 0, 1]).unwrap();
        let bz = TupleBoard::build_winch_zero(&z, &Perm::identity(3)).unwrap();
        assert_eq!(bz.period(), 6);
        assert_eq!(
            bz.rows(),
            &[
                vec![0, 0, 1],
                vec![0, 0, 2],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
                vec![0, 0, 0]
            ]
        );
    }

    #[test]
    fn snake_extraction_small() {
        let b = board(4, &[1, 2], &[1, 2]);
        let snakes = b.snakes();
        assert_eq!(snakes.len(), 2);
        let mut maps: Vec<Vec<u32>> = snakes.iter().map(|s| s.map(2)).collect();
        maps.sort();
        assert_eq!(maps, vec![vec![1, 3], vec![3, 1]]);
        for s in &snakes {
            assert_eq!(s.len(), 4);
            assert_eq!(s.start().1, 1);
            assert_eq!(s.end().1, 4);
        }
        // every cell covered exactly once
        let mut covered: Vec<Cell> = snakes
            .iter()
            .flat_map(|s| s.cells().iter().map(|&(c, _)| c))
            .collect();
        covered.sort();
        covered.dedup();
        assert_eq!(covered.len(), 8);
    }

    #[test]
    fn successor_stops_at_the_top_value() {
        let b = board(4, &[1, 2], &[1, 2]);
        // (3,2) holds 4 = m
        let cell = Cell { row: 3, col: 2 };
        assert_eq!(b.value(cell), 4);
        assert_eq!(b.successor(cell).unwrap(), None);
        assert!(b.successor(Cell { row: 9, col: 1 }).is_err());
    }

    #[test]
    fn left_shift_examples() {
        assert_eq!(left_shift(&[2, 1, 3, 1]), vec![1, 3, 1, 2]);
        assert_eq!(left_shift(&[5]), vec![5]);
        let mut m = vec![1, 2, 3, 4];
        for _ in 0..4 {
            m = left_shift(&m);
        }
        assert_eq!(m, vec![1, 2, 3, 4]);
    }

    #[test]
    fn crawl_examples() {
        let c = |e: &[u32]| CrawlState::new(e.to_vec()).unwrap();
        assert_eq!(c(&[0, 1, 2, 1, 1]).crawl(), c(&[0, 1, 1, 1, 2]));
        assert_eq!(c(&[0, 0, 3]).crawl(), c(&[0, 2, 1]));
        for s in CrawlState::all(7) {
            assert_eq!(s.crawl().entries().iter().sum::<u32>(), 7);
        }
        assert!(CrawlState::new(vec![0, 2, 0]).is_err());
        assert!(CrawlState::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn word_examples() {
        // a single block puts the only first-half 1 at the end
        let w = word_of(&CrawlState::new(vec![0, 0, 0, 4]).unwrap());
        assert_eq!(w.to_string(), "00011110");
        // injective over M_n
        for n in 1..=7 {
            let all = CrawlState::all(n);
            let words: std::collections::BTreeSet<String> =
                all.iter().map(|c| word_of(c).to_string()).collect();
            assert_eq!(words.len(), all.len());
        }
    }

    fn word(s: &str) -> NecklaceWord {
        NecklaceWord::new(s.chars().map(|c| c == '1').collect()).unwrap()
    }

    #[test]
    fn block_rotation_examples() {
        assert_eq!(
            word("110010001101").rotate_blocks(),
            word("010001101110")
        );
        // the alternating word shifts by two
        assert_eq!(word("101010010101").rotate_blocks(), word("101001010110"));
        for b in NecklaceWord::all(6) {
            // closure under rotation
            let _ = b.rotate_blocks();
        }
        assert!(NecklaceWord::new(vec![true, true]).is_err());
    }

    #[test]
    fn rotation_period_on_complete_block_words() {
        for n in 1..=6 {
            for b in NecklaceWord::all(n) {
                if !b.bits()[2 * n - 1] {
                    let mut cur = b.clone();
                    for _ in 0..n {
                        cur = cur.rotate_blocks();
                    }
                    assert_eq!(cur, b);
                }
            }
        }
        // a word ending in 1 is transient: it maps into the ending-in-0 set
        // and never returns
        let b = word("01");
        assert_eq!(b.rotate_blocks(), word("10"));
        assert_eq!(word("10").rotate_blocks(), word("10"));
    }

    #[test]
    fn necklace_rotation_examples() {
        let nk = |p: &[u32]| Necklace::new(7, p.to_vec()).unwrap();
        assert_eq!(nk(&[1, 4, 5, 7]).rotate(), nk(&[1, 2, 5, 6]));
        assert_eq!(
            Necklace::new(9, vec![1, 2, 3]).unwrap().rotate(),
            Necklace::new(9, vec![2, 3, 4]).unwrap()
        );
        for k in 1..=4 {
            for m in k..=8 {
                for x in Necklace::all(k as usize, m) {
                    let mut cur = x.clone();
                    for _ in 0..m {
                        cur = cur.rotate();
                    }
                    assert_eq!(cur, x);
                }
            }
        }
    }

    #[test]
    fn necklace_of_reproduces_the_worked_board() {
        let id = Perm::identity(4);
        let x = seq(7, &[2, 3, 4, 6]);
        let wx = x.winch_pass(&id).unwrap();
        assert_eq!(wx, seq(7, &[1, 2, 5, 7]));
        // the snake through the top-left cell has map (2,1,3,1)
        let b = TupleBoard::build_winch(&x, &id).unwrap();
        let s = b.snake_through(Cell { row: 1, col: 1 }).unwrap().unwrap();
        assert_eq!(s.map(4), vec![2, 1, 3, 1]);
        let b2 = TupleBoard::build_winch(&wx, &id).unwrap();
        let s2 = b2.snake_through(Cell { row: 1, col: 1 }).unwrap().unwrap();
        assert_eq!(s2.map(4), vec![1, 3, 1, 2]);

        let kx = necklace_of(&x, &id).unwrap();
        let kwx = necklace_of(&wx, &id).unwrap();
        assert_eq!(kx, Necklace::new(7, vec![1, 2, 5, 6]).unwrap());
        assert_eq!(kwx, Necklace::new(7, vec![1, 4, 5, 7]).unwrap());
        assert_eq!(kwx.rotate(), kx);
    }

    #[test]
    fn census_spot_values() {
        let b = board(4, &[1, 2], &[1, 2]);
        assert_eq!(column_symmetry_census(&b, 1, 1).unwrap(), (2, 2));
        // zero occurrences on both sides
        assert_eq!(column_symmetry_census(&b, 1, 4).unwrap().0, 0);
        let z = ZeroPrefixSeq::new(vec![0, 0, 1]).unwrap();
        let bz = TupleBoard::build_winch_zero(&z, &Perm::identity(3)).unwrap();
        assert!(column_symmetry_census(&bz, 1, 1).is_err());
    }

    #[test]
    fn lower_bound_snakes_start_at_their_bound() {
        let bounds = vec![2, 4, 6, 7, 8];
        let m = 10;
        for s in BoundedSeq::all(m, &bounds).unwrap().into_iter().take(6) {
            let b = TupleBoard::build_winch_lb(&s, &Perm::new(vec![1, 3, 2, 4, 5]).unwrap())
                .unwrap();
            for snake in b.snakes() {
                let (start, v) = snake.start();
                assert_eq!(v, bounds[start.col - 1]);
                assert_eq!(snake.end().1, m);
            }
        }
    }
}
