//! State-space enumeration, orbit partitioning, and exact-rational homomesy
//! checking.
//!
//! A [`StateSpace`] enumerates its states completely and in a canonical
//! (lexicographic) order; an [`Action`] is a bijection on a compatible space.
//! [`orbit_partition`] walks the forward action from each canonically-least
//! unvisited state, so orbit order and the member order inside each orbit are
//! deterministic. All statistic averages are exact rationals; homomesy
//! verdicts never use approximate comparison.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poset::{all_ideals, Ideal, Shape};
use crate::seq::{BoundedSeq, IncreasingSeq, ZeroPrefixSeq};
use crate::stats::Statistic;
use itertools::Itertools;
use num_integer::{binomial, gcd};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// Exact rational statistic values.
pub type Rat = num_rational::Rational64;

/// Renders a rational as `p/q` (or just `p` for integers).
pub fn rat_to_string(r: Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let err = || Error::Parse {
        input: s.to_string(),
        what: "rational p/q".to_string(),
        token: s.to_string(),
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| err())?)),
        Some((p, q)) => {
            let num: i64 = p.trim().parse().map_err(|_| err())?;
            let den: i64 = q.trim().parse().map_err(|_| err())?;
            if den == 0 {
                return Err(err());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// One of the enumerable state spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateSpace {
    /// Order ideals of a lattice shape.
    Ideals(Shape),
    /// Strictly increasing `k`-tuples bounded by `m`.
    Seqs { k: usize, m: u32 },
    /// Increasing tuples with entrywise lower bounds.
    BoundedSeqs { m: u32, bounds: Vec<u32> },
    /// Zero-prefix tuples of length `n`.
    ZeroSeqs { n: usize },
}

/// A state of any space, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum State {
    Ideal(Ideal),
    Seq(IncreasingSeq),
    Bounded(BoundedSeq),
    Zero(ZeroPrefixSeq),
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            State::Ideal(i) => i.fmt(f),
            State::Seq(s) => s.fmt(f),
            State::Bounded(s) => s.fmt(f),
            State::Zero(s) => s.fmt(f),
        }
    }
}

impl StateSpace {
    /// Complete, duplicate-free enumeration in canonical order.
    pub fn states(&self) -> Vec<State> {
        match self {
            StateSpace::Ideals(shape) => {
                all_ideals(*shape).into_iter().map(State::Ideal).collect()
            }
            StateSpace::Seqs { k, m } => IncreasingSeq::all(*k, *m)
                .into_iter()
                .map(State::Seq)
                .collect(),
            StateSpace::BoundedSeqs { m, bounds } => BoundedSeq::all(*m, bounds)
                .expect("space carries validated bounds")
                .into_iter()
                .map(State::Bounded)
                .collect(),
            StateSpace::ZeroSeqs { n } => ZeroPrefixSeq::all(*n)
                .into_iter()
                .map(State::Zero)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.states().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Parses a state in this space's canonical serialization.
    pub fn parse_state(&self, s: &str) -> Result<State> {
        let nums = |txt: &str| -> Result<Vec<u32>> {
            txt.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| Error::Parse {
                        input: s.to_string(),
                        what: "state".to_string(),
                        token: t.to_string(),
                    })
                })
                .collect()
        };
        match self {
            StateSpace::Ideals(shape) => {
                let inner = s
                    .trim()
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse {
                        input: s.to_string(),
                        what: "column profile [c1,...,ca]".to_string(),
                        token: s.to_string(),
                    })?;
                Ok(State::Ideal(Ideal::from_columns(*shape, nums(inner)?)?))
            }
            StateSpace::Seqs { m, .. } => Ok(State::Seq(IncreasingSeq::new(*m, nums(s)?)?)),
            StateSpace::BoundedSeqs { m, bounds } => Ok(State::Bounded(BoundedSeq::new(
                *m,
                bounds.clone(),
                nums(s)?,
            )?)),
            StateSpace::ZeroSeqs { .. } => Ok(State::Zero(ZeroPrefixSeq::new(nums(s)?)?)),
        }
    }

    /// Length of the pass permutations acting on this space (`a`, `k`, or `n`).
    pub fn pass_len(&self) -> usize {
        match self {
            StateSpace::Ideals(shape) => shape.cols() as usize,
            StateSpace::Seqs { k, .. } => *k,
            StateSpace::BoundedSeqs { bounds, .. } => bounds.len(),
            StateSpace::ZeroSeqs { n } => *n,
        }
    }
}

impl fmt::Display for StateSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpace::Ideals(shape) => shape.fmt(f),
            StateSpace::Seqs { k, m } => write!(f, "seq:{k},{m}"),
            StateSpace::BoundedSeqs { m, bounds } => {
                write!(f, "lbseq:{},{m}:{}", bounds.len(), bounds.iter().join(","))
            }
            StateSpace::ZeroSeqs { n } => write!(f, "zseq:{n}"),
        }
    }
}

impl FromStr for StateSpace {
    type Err = Error;

    /// Grammar: `q:A,B | u:A | l:A | seq:K,M | lbseq:K,M:l1,...,lK | zseq:N`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |token: &str| Error::Parse {
            input: s.to_string(),
            what: "space spec (q:A,B | u:A | l:A | seq:K,M | lbseq:K,M:l1,.. | zseq:N)"
                .to_string(),
            token: token.to_string(),
        };
        let (kind, rest) = s.split_once(':').ok_or_else(|| err(s))?;
        match kind {
            "q" | "u" | "l" => Ok(StateSpace::Ideals(s.parse()?)),
            "seq" => {
                let (ks, ms) = rest.split_once(',').ok_or_else(|| err(rest))?;
                let k: usize = ks.parse().map_err(|_| err(ks))?;
                let m: u32 = ms.parse().map_err(|_| err(ms))?;
                if k == 0 || k as u32 > m {
                    return Err(err(rest));
                }
                Ok(StateSpace::Seqs { k, m })
            }
            "lbseq" => {
                let (km, ls) = rest.split_once(':').ok_or_else(|| err(rest))?;
                let (ks, ms) = km.split_once(',').ok_or_else(|| err(km))?;
                let k: usize = ks.parse().map_err(|_| err(ks))?;
                let m: u32 = ms.parse().map_err(|_| err(ms))?;
                let bounds: Vec<u32> = ls
                    .split(',')
                    .map(|t| t.parse::<u32>().map_err(|_| err(t)))
                    .collect::<Result<_>>()?;
                if bounds.len() != k {
                    return Err(err(ls));
                }
                // constructing the empty check validates the bounds
                BoundedSeq::all(m, &bounds)?;
                Ok(StateSpace::BoundedSeqs { m, bounds })
            }
            "zseq" => {
                let n: usize = rest.parse().map_err(|_| err(rest))?;
                if n == 0 {
                    return Err(err(rest));
                }
                Ok(StateSpace::ZeroSeqs { n })
            }
            _ => Err(err(kind)),
        }
    }
}

/// A bijective action on a state space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// Column toggle pass on ideals, in the order `nu(1), ..., nu(a)`.
    Comotion(Perm),
    /// Down-set of the minimal elements of the complement.
    Rowmotion,
    /// File toggle pass in ascending file order.
    Promotion,
    /// Plain winching pass.
    Winch(Perm),
    /// Winching with lower bounds.
    WinchLb(Perm),
    /// Winching with zeros.
    WinchZero(Perm),
}

impl Action {
    pub fn tag(&self) -> &'static str {
        match self {
            Action::Comotion(_) => "comotion",
            Action::Rowmotion => "rowmotion",
            Action::Promotion => "promotion",
            Action::Winch(_) => "winch",
            Action::WinchLb(_) => "winch_lb",
            Action::WinchZero(_) => "winch_zero",
        }
    }

    pub fn nu(&self) -> Option<&Perm> {
        match self {
            Action::Comotion(nu)
            | Action::Winch(nu)
            | Action::WinchLb(nu)
            | Action::WinchZero(nu) => Some(nu),
            Action::Rowmotion | Action::Promotion => None,
        }
    }

    /// Checks that the action acts on the space and that its pass length
    /// matches.
    pub fn validate_for(&self, space: &StateSpace) -> Result<()> {
        let mismatch = || Error::SpaceMismatch {
            action: self.tag().to_string(),
            space: space.to_string(),
        };
        let ok = matches!(
            (self, space),
            (
                Action::Comotion(_) | Action::Rowmotion | Action::Promotion,
                StateSpace::Ideals(_)
            ) | (Action::Winch(_), StateSpace::Seqs { .. })
                | (Action::WinchLb(_), StateSpace::BoundedSeqs { .. })
                | (Action::WinchZero(_), StateSpace::ZeroSeqs { .. })
        );
        if !ok {
            return Err(mismatch());
        }
        if let Some(nu) = self.nu() {
            if nu.len() != space.pass_len() {
                return Err(Error::InvalidPermutation {
                    expected: format!("[{}]", space.pass_len()),
                    got: nu.order().iter().map(|&x| x as i64).collect(),
                });
            }
        }
        Ok(())
    }

    pub fn apply(&self, state: &State) -> Result<State> {
        let mismatch = || Error::SpaceMismatch {
            action: self.tag().to_string(),
            space: "state of another space".to_string(),
        };
        Ok(match (self, state) {
            (Action::Comotion(nu), State::Ideal(i)) => State::Ideal(i.comotion(nu)?),
            (Action::Rowmotion, State::Ideal(i)) => State::Ideal(i.rowmotion_direct()),
            (Action::Promotion, State::Ideal(i)) => State::Ideal(i.promotion()),
            (Action::Winch(nu), State::Seq(x)) => State::Seq(x.winch_pass(nu)?),
            (Action::WinchLb(nu), State::Bounded(x)) => State::Bounded(x.winch_pass(nu)?),
            (Action::WinchZero(nu), State::Zero(x)) => State::Zero(x.winch_pass(nu)?),
            _ => return Err(mismatch()),
        })
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.nu() {
            Some(nu) => write!(f, "{} nu={}", self.tag(), nu),
            None => write!(f, "{}", self.tag()),
        }
    }
}

/// A complete orbit partition of a space under an action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub space: StateSpace,
    pub action: Action,
    /// Orbits sorted by canonically-least member; each orbit starts at that
    /// member and follows the forward action.
    pub orbits: Vec<Vec<State>>,
}

impl OrbitReport {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// The multiset of orbit sizes, sorted ascending.
    pub fn orbit_structure(&self) -> Vec<usize> {
        self.orbit_sizes().into_iter().sorted().collect()
    }
}

/// Partitions the whole space into orbits of the action.
pub fn orbit_partition(space: &StateSpace, action: &Action) -> Result<OrbitReport> {
    action.validate_for(space)?;
    let states = space.states();
    let mut seen: HashSet<State> = HashSet::with_capacity(states.len());
    let mut orbits = Vec::new();
    for start in &states {
        if seen.contains(start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        let mut cur = action.apply(start)?;
        while cur != *start {
            orbit.push(cur.clone());
            cur = action.apply(&cur)?;
        }
        for s in &orbit {
            seen.insert(s.clone());
        }
        orbits.push(orbit);
    }
    Ok(OrbitReport {
        space: space.clone(),
        action: action.clone(),
        orbits,
    })
}

/// Multiset equality of orbit sizes.
pub fn orbit_structure_equal(a: &OrbitReport, b: &OrbitReport) -> bool {
    a.orbit_structure() == b.orbit_structure()
}

/// Per-orbit averages of one statistic, with the homomesy verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomesyCheck {
    pub stat: Statistic,
    pub per_orbit: Vec<Rat>,
    pub verdict: HomomesyVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomomesyVerdict {
    Homomesic { constant: Rat },
    /// A witness pair of orbits (indices into the report) whose averages differ.
    Counterexample {
        orbit_a: usize,
        orbit_b: usize,
        avg_a: Rat,
        avg_b: Rat,
    },
}

impl HomomesyVerdict {
    pub fn is_homomesic(&self) -> bool {
        matches!(self, HomomesyVerdict::Homomesic { .. })
    }
}

/// Computes exact per-orbit averages and decides homomesy.
pub fn check_homomesy(report: &OrbitReport, stat: &Statistic) -> Result<HomomesyCheck> {
    stat.validate_for(&report.space)?;
    let mut per_orbit = Vec::with_capacity(report.orbits.len());
    for orbit in &report.orbits {
        let mut sum = Rat::from_integer(0);
        for state in orbit {
            sum += stat.eval(&report.space, state)?;
        }
        per_orbit.push(sum / Rat::from_integer(orbit.len() as i64));
    }
    let first = per_orbit[0];
    let verdict = match per_orbit.iter().position(|&a| a != first) {
        None => HomomesyVerdict::Homomesic { constant: first },
        Some(i) => HomomesyVerdict::Counterexample {
            orbit_a: 0,
            orbit_b: i,
            avg_a: first,
            avg_b: per_orbit[i],
        },
    };
    Ok(HomomesyCheck {
        stat: stat.clone(),
        per_orbit,
        verdict,
    })
}

/// Orbit sizes of rotation on `k`-subsets of `[m]`, by direct enumeration.
/// The orbit count always matches [`burnside_orbit_count`].
pub fn necklace_orbit_structure(k: usize, m: u32) -> Vec<usize> {
    use crate::snake::Necklace;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut sizes = Vec::new();
    for start in Necklace::all(k, m) {
        if seen.contains(start.positions()) {
            continue;
        }
        let mut size = 1;
        seen.insert(start.positions().to_vec());
        let mut cur = start.rotate();
        while cur != start {
            seen.insert(cur.positions().to_vec());
            size += 1;
            cur = cur.rotate();
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

/// Orbit count of rotation on `k`-subsets of `[m]` by the cyclic-group
/// counting formula: `(1/m) * sum over d | gcd(k, m) of phi(d) * C(m/d, k/d)`.
pub fn burnside_orbit_count(k: u64, m: u64) -> u64 {
    let g = gcd(k, m);
    let mut total = 0u64;
    for d in 1..=g {
        if g.is_multiple_of(d) {
            total += euler_phi(d) * binomial(m / d, k / d);
        }
    }
    debug_assert_eq!(total % m, 0);
    total / m
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        assert_eq!(rat_to_string(Rat::new(1, 2)), "1/2");
        assert_eq!(rat_to_string(Rat::new(4, 2)), "2");
        assert_eq!(rat_from_str("1/2").unwrap(), Rat::new(1, 2));
        assert_eq!(rat_from_str("-3").unwrap(), Rat::from_integer(-3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn space_spec_round_trip() {
        for s in ["q:2,2", "u:3", "l:4", "seq:2,4", "lbseq:2,4:1,3", "zseq:3"] {
            let sp: StateSpace = s.parse().unwrap();
            assert_eq!(sp.to_string(), s);
        }
        assert!("seq:0,4".parse::<StateSpace>().is_err());
        assert!("seq:5,4".parse::<StateSpace>().is_err());
        assert!("lbseq:2,4:3,1".parse::<StateSpace>().is_err());
        assert!("zseq:x".parse::<StateSpace>().is_err());
    }

    #[test]
    fn cardinalities() {
        let q33: StateSpace = "q:3,3".parse().unwrap();
        assert_eq!(q33.len(), 20);
        let l4: StateSpace = "l:4".parse().unwrap();
        assert_eq!(l4.len(), 16);
        let s: StateSpace = "seq:2,4".parse().unwrap();
        assert_eq!(s.len(), 6);
        let z: StateSpace = "zseq:4".parse().unwrap();
        assert_eq!(z.len(), 16);
    }

    #[test]
    fn spot_orbit_structures() {
        let q22: StateSpace = "q:2,2".parse().unwrap();
        let r = orbit_partition(&q22, &Action::Comotion(Perm::identity(2))).unwrap();
        assert_eq!(r.orbit_structure(), vec![2, 4]);

        let u2: StateSpace = "u:2".parse().unwrap();
        let r = orbit_partition(&u2, &Action::Comotion(Perm::identity(2))).unwrap();
        assert_eq!(r.orbit_structure(), vec![2, 3]);

        let s3: StateSpace = "zseq:3".parse().unwrap();
        let r = orbit_partition(&s3, &Action::WinchZero(Perm::identity(3))).unwrap();
        assert_eq!(r.orbit_structure(), vec![2, 6]);
    }

    #[test]
    fn orbit_partition_is_deterministic_and_complete() {
        let sp: StateSpace = "q:2,2".parse().unwrap();
        let r = orbit_partition(&sp, &Action::Comotion(Perm::identity(2))).unwrap();
        let total: usize = r.orbit_sizes().iter().sum();
        assert_eq!(total, sp.len());
        // orbits sorted by canonically-least member, which leads its orbit
        for orbit in &r.orbits {
            assert_eq!(orbit.iter().min().unwrap(), &orbit[0]);
        }
        let firsts: Vec<&State> = r.orbits.iter().map(|o| &o[0]).collect();
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn action_space_mismatches_are_rejected() {
        let sp: StateSpace = "seq:2,4".parse().unwrap();
        assert!(Action::Comotion(Perm::identity(2)).validate_for(&sp).is_err());
        assert!(Action::Winch(Perm::identity(3)).validate_for(&sp).is_err());
        assert!(Action::Winch(Perm::identity(2)).validate_for(&sp).is_ok());
    }

    #[test]
    fn necklace_structures_and_burnside() {
        assert_eq!(necklace_orbit_structure(2, 4), vec![2, 4]);
        assert_eq!(necklace_orbit_structure(1, 5), vec![5]);
        assert_eq!(necklace_orbit_structure(3, 3), vec![1]);
        for k in 1..=6u64 {
            for m in k..=9 {
                let sizes = necklace_orbit_structure(k as usize, m as u32);
                assert_eq!(sizes.len() as u64, burnside_orbit_count(k, m), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn state_parsing_round_trip() {
        let sp: StateSpace = "q:2,2".parse().unwrap();
        for s in sp.states() {
            assert_eq!(sp.parse_state(&s.to_string()).unwrap(), s);
        }
        assert!(sp.parse_state("[2,3]").is_err());
        let z: StateSpace = "zseq:3".parse().unwrap();
        assert_eq!(
            z.parse_state("0,0,2").unwrap().to_string(),
            "0,0,2".to_string()
        );
    }
}
