//! The statistic catalog: exact-rational functions on states, selected by a
//! small name grammar (`size`, `g:i,j`, `d:i,j`, `s:j`, `sdiff:l,j`, `f:j`,
//! `antipodal:i,j`, `rankalt`, `lifted:v1,v2,...`).

use crate::dynamics::{rat_from_str, rat_to_string, Rat, State, StateSpace};
use crate::error::{Error, Result};
use crate::poset::{Element, Ideal, Shape};
use itertools::Itertools;
use std::fmt;

/// A statistic: a deterministic evaluator from states to exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statistic {
    /// Ideal size `|I|`.
    Size,
    /// On square ideals: 1 iff `|C_i(I)| = j` (with `j = 0` allowed).
    ColumnSizeIs { i: u32, j: u32 },
    /// On square ideals: `g_{i,j} - g_{a+1-i, b-j}`; always 0-mesic.
    ColumnSizeAntisym { i: u32, j: u32 },
    /// `s_j`: on square ideals the number of `i` with `|C_i(I)| + (a+1-i) = j`
    /// (the multiplicity of `j` in the carried increasing sequence); on left
    /// ideals the number of columns of size exactly `j`.
    SCount { j: u32 },
    /// `s_l - s_j`; always 0-mesic where `s` is defined.
    SCountDiff { l: u32, j: u32 },
    /// On sequences: 1 iff the value `j` occurs.
    Contains { j: u32 },
    /// On square ideals: membership of `x` minus non-membership of the
    /// antipode `A(x) = (a-i+1, b-j+1)`; always 0-mesic.
    Antipodal { col: u32, row: u32 },
    /// Alternating-sign cardinality: the sum of `(-1)^(i+j)` over the ideal.
    RankAlternating,
    /// On upper ideals or bounded sequences: the sum of `f` over the carried
    /// bounded-sequence entries, for an `f` with equal averages on every tail
    /// starting at a lower bound.
    Lifted { values: Vec<Rat> },
}

impl Statistic {
    /// Parses the selector grammar.
    pub fn parse(s: &str) -> Result<Statistic> {
        let err = |token: &str| Error::Parse {
            input: s.to_string(),
            what: "statistic (size | g:i,j | d:i,j | s:j | sdiff:l,j | f:j | antipodal:i,j | rankalt | lifted:v1,..)".to_string(),
            token: token.to_string(),
        };
        let (name, args) = match s.split_once(':') {
            None => (s, ""),
            Some((n, a)) => (n, a),
        };
        let pair = |args: &str| -> Result<(u32, u32)> {
            let (x, y) = args.split_once(',').ok_or_else(|| err(args))?;
            Ok((
                x.parse().map_err(|_| err(x))?,
                y.parse().map_err(|_| err(y))?,
            ))
        };
        match name {
            "size" => Ok(Statistic::Size),
            "g" => pair(args).map(|(i, j)| Statistic::ColumnSizeIs { i, j }),
            "d" => pair(args).map(|(i, j)| Statistic::ColumnSizeAntisym { i, j }),
            "s" => Ok(Statistic::SCount {
                j: args.parse().map_err(|_| err(args))?,
            }),
            "sdiff" => pair(args).map(|(l, j)| Statistic::SCountDiff { l, j }),
            "f" => Ok(Statistic::Contains {
                j: args.parse().map_err(|_| err(args))?,
            }),
            "antipodal" => pair(args).map(|(col, row)| Statistic::Antipodal { col, row }),
            "rankalt" => Ok(Statistic::RankAlternating),
            "lifted" => {
                let values = args
                    .split(',')
                    .map(rat_from_str)
                    .collect::<Result<Vec<_>>>()?;
                if values.is_empty() {
                    return Err(err(args));
                }
                Ok(Statistic::Lifted { values })
            }
            _ => Err(Error::UnknownStatistic(s.to_string())),
        }
    }

    /// Checks the statistic is defined on every state of the space, including
    /// parameter ranges and the lifted tail-average condition.
    pub fn validate_for(&self, space: &StateSpace) -> Result<()> {
        let fail = || Error::StatSpaceMismatch {
            stat: self.to_string(),
            space: space.to_string(),
        };
        match self {
            Statistic::Size | Statistic::RankAlternating => match space {
                StateSpace::Ideals(_) => Ok(()),
                _ => Err(fail()),
            },
            Statistic::ColumnSizeIs { i, j } | Statistic::ColumnSizeAntisym { i, j } => {
                match space {
                    StateSpace::Ideals(Shape::Square { a, b }) => {
                        if *i >= 1 && i <= a && j <= b {
                            Ok(())
                        } else {
                            Err(fail())
                        }
                    }
                    _ => Err(fail()),
                }
            }
            Statistic::SCount { j } => match space {
                StateSpace::Ideals(Shape::Square { a, b }) if *j >= 1 && *j <= a + b => Ok(()),
                StateSpace::Ideals(Shape::Left { a }) if *j >= 1 && j <= a => Ok(()),
                _ => Err(fail()),
            },
            Statistic::SCountDiff { l, j } => {
                Statistic::SCount { j: *l }.validate_for(space)?;
                Statistic::SCount { j: *j }.validate_for(space)
            }
            Statistic::Contains { j } => match space {
                StateSpace::Seqs { m, .. } | StateSpace::BoundedSeqs { m, .. }
                    if *j >= 1 && j <= m =>
                {
                    Ok(())
                }
                StateSpace::ZeroSeqs { n } if *j >= 1 && *j as usize <= *n => Ok(()),
                _ => Err(fail()),
            },
            Statistic::Antipodal { col, row } => match space {
                StateSpace::Ideals(Shape::Square { a, b })
                    if *col >= 1 && col <= a && *row >= 1 && row <= b =>
                {
                    Ok(())
                }
                _ => Err(fail()),
            },
            Statistic::Lifted { values } => {
                let (m, bounds): (u32, Vec<u32>) = match space {
                    StateSpace::Ideals(Shape::Upper { a }) => {
                        (2 * a, (1..=*a).map(|j| 2 * j - 1).collect())
                    }
                    StateSpace::BoundedSeqs { m, bounds } => (*m, bounds.clone()),
                    _ => return Err(fail()),
                };
                if values.len() != m as usize {
                    return Err(Error::LiftedTailCondition(format!(
                        "need {} values on 1..={m}, got {}",
                        m,
                        values.len()
                    )));
                }
                check_tail_averages(values, &bounds, m)
            }
        }
    }

    /// Evaluates the statistic at one state.
    pub fn eval(&self, space: &StateSpace, state: &State) -> Result<Rat> {
        let int = |v: i64| Rat::from_integer(v);
        match (self, state) {
            (Statistic::Size, State::Ideal(i)) => Ok(int(i.size() as i64)),
            (Statistic::ColumnSizeIs { i, j }, State::Ideal(id)) => {
                Ok(int(g_value(id, *i, *j)))
            }
            (Statistic::ColumnSizeAntisym { i, j }, State::Ideal(id)) => {
                let Shape::Square { a, b } = id.shape() else {
                    return Err(self.mismatch(space));
                };
                Ok(int(g_value(id, *i, *j) - g_value(id, a + 1 - i, b - j)))
            }
            (Statistic::SCount { j }, State::Ideal(id)) => Ok(int(s_count(id, *j)?)),
            (Statistic::SCountDiff { l, j }, State::Ideal(id)) => {
                Ok(int(s_count(id, *l)? - s_count(id, *j)?))
            }
            (Statistic::Contains { j }, State::Seq(x)) => {
                Ok(int(x.entries().contains(j) as i64))
            }
            (Statistic::Contains { j }, State::Bounded(x)) => {
                Ok(int(x.entries().contains(j) as i64))
            }
            (Statistic::Contains { j }, State::Zero(x)) => {
                Ok(int(x.entries().contains(j) as i64))
            }
            (Statistic::Antipodal { col, row }, State::Ideal(id)) => {
                let Shape::Square { a, b } = id.shape() else {
                    return Err(self.mismatch(space));
                };
                let x = Element::new(*col, *row);
                let ax = Element::new(a - col + 1, b - row + 1);
                Ok(int(id.contains(x) as i64 - (1 - id.contains(ax) as i64)))
            }
            (Statistic::RankAlternating, State::Ideal(id)) => {
                let mut sum = 0i64;
                for e in id.elements() {
                    sum += if (e.col + e.row) % 2 == 0 { 1 } else { -1 };
                }
                Ok(int(sum))
            }
            (Statistic::Lifted { values }, State::Ideal(id)) => {
                let bs = id.to_bounded_seq().map_err(|_| self.mismatch(space))?;
                Ok(lifted_sum(values, bs.entries()))
            }
            (Statistic::Lifted { values }, State::Bounded(x)) => {
                Ok(lifted_sum(values, x.entries()))
            }
            _ => Err(self.mismatch(space)),
        }
    }

    fn mismatch(&self, space: &StateSpace) -> Error {
        Error::StatSpaceMismatch {
            stat: self.to_string(),
            space: space.to_string(),
        }
    }
}

fn g_value(id: &Ideal, i: u32, j: u32) -> i64 {
    (id.columns()[i as usize - 1] == j) as i64
}

fn s_count(id: &Ideal, j: u32) -> Result<i64> {
    match id.shape() {
        Shape::Square { a, .. } => Ok((1..=a)
            .filter(|&i| id.columns()[i as usize - 1] + (a + 1 - i) == j)
            .count() as i64),
        Shape::Left { a } => Ok((1..=a)
            .filter(|&i| id.columns()[i as usize - 1] == j)
            .count() as i64),
        Shape::Upper { .. } => Err(Error::StatSpaceMismatch {
            stat: format!("s:{j}"),
            space: id.shape().to_string(),
        }),
    }
}

fn lifted_sum(values: &[Rat], entries: &[u32]) -> Rat {
    entries
        .iter()
        .map(|&x| values[x as usize - 1])
        .sum()
}

/// The exact admissibility condition for a lifted statistic: `f` must have
/// the same average on every tail `[l_i, m]`.
fn check_tail_averages(values: &[Rat], bounds: &[u32], m: u32) -> Result<()> {
    let avg_of = |lo: u32| -> Rat {
        let count = (m - lo + 1) as i64;
        let sum: Rat = values[(lo as usize - 1)..].iter().copied().sum();
        sum / Rat::from_integer(count)
    };
    let first = avg_of(bounds[0]);
    for &l in &bounds[1..] {
        let a = avg_of(l);
        if a != first {
            return Err(Error::LiftedTailCondition(format!(
                "tail [{},{}] has average {} but tail [{},{}] has {}",
                bounds[0],
                m,
                rat_to_string(first),
                l,
                m,
                rat_to_string(a),
            )));
        }
    }
    Ok(())
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Size => write!(f, "size"),
            Statistic::ColumnSizeIs { i, j } => write!(f, "g:{i},{j}"),
            Statistic::ColumnSizeAntisym { i, j } => write!(f, "d:{i},{j}"),
            Statistic::SCount { j } => write!(f, "s:{j}"),
            Statistic::SCountDiff { l, j } => write!(f, "sdiff:{l},{j}"),
            Statistic::Contains { j } => write!(f, "f:{j}"),
            Statistic::Antipodal { col, row } => write!(f, "antipodal:{col},{row}"),
            Statistic::RankAlternating => write!(f, "rankalt"),
            Statistic::Lifted { values } => write!(
                f,
                "lifted:{}",
                values.iter().map(|&v| rat_to_string(v)).join(",")
            ),
        }
    }
}
