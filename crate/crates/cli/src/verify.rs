//! The `verify` battery: every structural law and homomesy claim the library
//! is built on, re-checked by exhaustive enumeration under size caps, with a
//! replayable witness printed for any failure.

use comotion_core::{
    all_ideals, burnside_orbit_count, check_homomesy, left_shift, necklace_of,
    necklace_orbit_structure, orbit_partition, rat_to_string, word_of, Action, Cell, CrawlState,
    HomomesyVerdict, IncreasingSeq, Necklace, NecklaceWord, Perm, Rat, ReportDoc, Shape,
    StateSpace, Statistic, TupleBoard, ZeroPrefixSeq,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Size caps for the battery; the defaults finish in seconds.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_a: u32,
    pub max_b: u32,
    pub max_m: u32,
    pub max_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_a: 4,
            max_b: 4,
            max_m: 8,
            max_n: 7,
        }
    }
}

pub struct CheckResult {
    pub name: &'static str,
    pub params: String,
    /// `Err` carries a replayable witness.
    pub outcome: Result<(), String>,
}

type CheckFn = Box<dyn Fn(Caps) -> Result<(), String> + Send + Sync>;
type CheckTable = Vec<(&'static str, fn(Caps) -> String, CheckFn)>;

fn checks() -> CheckTable {
    let mut out: CheckTable = Vec::new();
    macro_rules! check {
        ($name:literal, $params:expr, $body:expr) => {
            out.push(($name, $params, Box::new($body)));
        };
    }
    check!(
        "winch-periodicity",
        |c| format!("k<=m<={} 20-random-nu", c.max_m),
        winch_periodicity
    );
    check!(
        "wz-periodicity",
        |c| format!("n<={} all-nu<=5", c.max_n),
        wz_periodicity
    );
    check!(
        "comotion-nu-independence-square",
        |c| format!("a<={} b<={} all-nu", c.max_a, c.max_b),
        nu_independence_square
    );
    check!(
        "comotion-nu-independence-left",
        |c| format!("a<={} all-nu", c.max_a),
        nu_independence_left
    );
    check!(
        "spot-orbit-structures",
        |_| "q:2,2 u:2 zseq:3".to_string(),
        spot_orbit_structures
    );
    check!(
        "necklace-equivalence",
        |c| format!("a<={} b<={} burnside", c.max_a, c.max_b),
        necklace_equivalence
    );
    check!(
        "homomesy-size",
        |c| format!("q a<={} b<={} const=ab/2; l a<={}", c.max_a, c.max_b, c.max_a),
        homomesy_size
    );
    check!(
        "homomesy-scount-square",
        |c| format!("a<={} b<={} const=a/(a+b)", c.max_a, c.max_b),
        homomesy_scount_square
    );
    check!(
        "homomesy-contains-winch",
        |c| format!("k<=m<={} const=k/m", c.max_m.min(6)),
        homomesy_contains_winch
    );
    check!(
        "homomesy-contains-wz",
        |c| format!("n<={} const=1/2", c.max_n.min(6)),
        homomesy_contains_wz
    );
    check!(
        "zeromesy-column-antisym",
        |c| format!("a<={} b<={}", c.max_a, c.max_b),
        zeromesy_column_antisym
    );
    check!(
        "zeromesy-antipodal",
        |c| format!("a<={} b<={}", c.max_a, c.max_b),
        zeromesy_antipodal
    );
    check!(
        "homomesy-rank-alternating",
        |c| format!("q a<={} b<={}; u a<={}", c.max_a, c.max_b, c.max_a),
        homomesy_rank_alternating
    );
    check!(
        "zeromesy-scount-diff-left",
        |c| format!("a<={}", c.max_a),
        zeromesy_scount_diff_left
    );
    check!(
        "homomesy-lifted-upper",
        |c| format!("a<={} 50-random-f", c.max_a),
        homomesy_lifted_upper
    );
    check!(
        "bijection-equivariance",
        |c| format!("q/u/l a<={}", c.max_a.min(4)),
        bijection_equivariance
    );
    check!(
        "snake-laws-winch",
        |c| format!("k<=m<={}", c.max_m.min(7)),
        snake_laws_winch
    );
    check!(
        "snake-laws-wz",
        |c| format!("n<={} gap2-identity", c.max_n.clamp(1, 6)),
        snake_laws_wz
    );
    check!("crawl-word-machinery", |c| format!("n<={}", c.max_n), crawl_word);
    check!(
        "comotion-specializations",
        |c| format!("a<={} b<={} linexts<=3", c.max_a.min(4), c.max_b.min(4)),
        specializations
    );
    check!(
        "report-determinism",
        |_| "q:2,2 json-roundtrip".to_string(),
        report_determinism
    );
    out
}

/// Runs the whole battery (in parallel) and reports results in a fixed order.
pub fn run_battery(caps: Caps) -> Vec<CheckResult> {
    let table = checks();
    table
        .par_iter()
        .map(|(name, params, body)| CheckResult {
            name,
            params: params(caps),
            outcome: body(caps),
        })
        .collect()
}

/// Renders one line per check plus a summary; returns the rendered text and
/// whether everything passed.
pub fn render(results: &[CheckResult]) -> (String, bool) {
    let mut out = String::new();
    let mut passed = 0;
    for r in results {
        match &r.outcome {
            Ok(()) => {
                passed += 1;
                out.push_str(&format!("PASS {} [{}]\n", r.name, r.params));
            }
            Err(w) => out.push_str(&format!("FAIL {} [{}] witness: {}\n", r.name, r.params, w)),
        }
    }
    let all = passed == results.len();
    out.push_str(&format!(
        "verify: {} checks, {} passed, {} failed\n",
        results.len(),
        passed,
        results.len() - passed
    ));
    (out, all)
}

fn nus_for(k: usize, rng: &mut ChaCha8Rng) -> Vec<Perm> {
    if k <= 3 {
        Perm::all(k)
    } else {
        let mut v = vec![Perm::identity(k), Perm::reversed(k)];
        for _ in 0..10 {
            v.push(Perm::random(k, rng));
        }
        v
    }
}

fn winch_periodicity(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for m in 1..=caps.max_m {
        for k in 1..=m as usize {
            for _ in 0..20 {
                let nu = Perm::random(k, &mut rng);
                for x in IncreasingSeq::all(k, m) {
                    let mut cur = x.clone();
                    for _ in 0..m {
                        cur = cur.winch_pass(&nu).unwrap();
                    }
                    if cur != x {
                        return Err(format!("k={k} m={m} nu={nu} x={x} not periodic"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn wz_periodicity(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=caps.max_n {
        let nus = if n <= 5 {
            Perm::all(n)
        } else {
            (0..20).map(|_| Perm::random(n, &mut rng)).collect()
        };
        for nu in nus {
            for x in ZeroPrefixSeq::all(n) {
                let mut cur = x.clone();
                for _ in 0..2 * n {
                    cur = cur.winch_pass(&nu).unwrap();
                }
                if cur != x {
                    return Err(format!("n={n} nu={nu} x={x} not periodic"));
                }
            }
        }
    }
    Ok(())
}

fn structure(space: &StateSpace, action: &Action) -> Vec<usize> {
    orbit_partition(space, action).unwrap().orbit_structure()
}

fn nu_independence_shapes(shapes: Vec<Shape>) -> Result<(), String> {
    for sh in shapes {
        let space = StateSpace::Ideals(sh);
        let a = sh.cols() as usize;
        let nus = Perm::all(a);
        let base = structure(&space, &Action::Comotion(nus[0].clone()));
        for nu in &nus[1..] {
            let st = structure(&space, &Action::Comotion(nu.clone()));
            if st != base {
                return Err(format!(
                    "{sh}: nu={} gives {st:?} but nu={} gives {base:?}",
                    nu, nus[0]
                ));
            }
        }
    }
    Ok(())
}

fn nu_independence_square(caps: Caps) -> Result<(), String> {
    let mut shapes = Vec::new();
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            shapes.push(Shape::square(a, b).unwrap());
        }
    }
    nu_independence_shapes(shapes)
}

fn nu_independence_left(caps: Caps) -> Result<(), String> {
    nu_independence_shapes((1..=caps.max_a).map(|a| Shape::left(a).unwrap()).collect())
}

fn spot_orbit_structures(_: Caps) -> Result<(), String> {
    let cases: [(&str, Action, Vec<usize>); 3] = [
        (
            "q:2,2",
            Action::Comotion(Perm::identity(2)),
            vec![2, 4],
        ),
        ("u:2", Action::Comotion(Perm::identity(2)), vec![2, 3]),
        ("zseq:3", Action::WinchZero(Perm::identity(3)), vec![2, 6]),
    ];
    for (spec, action, expected) in cases {
        let space: StateSpace = spec.parse().unwrap();
        let got = structure(&space, &action);
        if got != expected {
            return Err(format!("{spec}: got {got:?}, expected {expected:?}"));
        }
    }
    Ok(())
}

fn necklace_equivalence(caps: Caps) -> Result<(), String> {
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            let st = structure(&space, &Action::Comotion(Perm::identity(a as usize)));
            let neck = necklace_orbit_structure(a as usize, a + b);
            if st != neck {
                return Err(format!("q:{a},{b}: comotion {st:?} vs rotation {neck:?}"));
            }
            let count = burnside_orbit_count(a as u64, (a + b) as u64);
            if neck.len() as u64 != count {
                return Err(format!(
                    "q:{a},{b}: {} orbits but the counting formula gives {count}",
                    neck.len()
                ));
            }
        }
    }
    Ok(())
}

fn expect_constant(
    space: &StateSpace,
    nu_len: usize,
    stats: &[(Statistic, Option<Rat>)],
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    for nu in nus_for(nu_len, rng) {
        let action = match space {
            StateSpace::Ideals(_) => Action::Comotion(nu.clone()),
            StateSpace::Seqs { .. } => Action::Winch(nu.clone()),
            StateSpace::BoundedSeqs { .. } => Action::WinchLb(nu.clone()),
            StateSpace::ZeroSeqs { .. } => Action::WinchZero(nu.clone()),
        };
        let report = orbit_partition(space, &action).unwrap();
        for (stat, expected) in stats {
            let check = check_homomesy(&report, stat)
                .map_err(|e| format!("{space} {stat}: {e}"))?;
            match check.verdict {
                HomomesyVerdict::Homomesic { constant } => {
                    if let Some(want) = expected {
                        if constant != *want {
                            return Err(format!(
                                "{space} nu={nu} {stat}: constant {} expected {}",
                                rat_to_string(constant),
                                rat_to_string(*want)
                            ));
                        }
                    }
                }
                HomomesyVerdict::Counterexample {
                    orbit_a,
                    orbit_b,
                    avg_a,
                    avg_b,
                } => {
                    return Err(format!(
                        "{space} nu={nu} {stat}: orbit {} avg {} vs orbit {} avg {}",
                        orbit_a + 1,
                        rat_to_string(avg_a),
                        orbit_b + 1,
                        rat_to_string(avg_b)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn homomesy_size(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            let want = Rat::new((a * b) as i64, 2);
            expect_constant(
                &space,
                a as usize,
                &[(Statistic::Size, Some(want))],
                &mut rng,
            )?;
        }
        let space = StateSpace::Ideals(Shape::left(a).unwrap());
        expect_constant(&space, a as usize, &[(Statistic::Size, None)], &mut rng)?;
    }
    Ok(())
}

fn homomesy_scount_square(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            let want = Rat::new(a as i64, (a + b) as i64);
            let stats: Vec<(Statistic, Option<Rat>)> = (1..=a + b)
                .map(|j| (Statistic::SCount { j }, Some(want)))
                .collect();
            expect_constant(&space, a as usize, &stats, &mut rng)?;
        }
    }
    Ok(())
}

fn homomesy_contains_winch(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in 1..=caps.max_m.min(6) {
        for k in 1..=m as usize {
            let space = StateSpace::Seqs { k, m };
            let want = Rat::new(k as i64, m as i64);
            let stats: Vec<(Statistic, Option<Rat>)> = (1..=m)
                .map(|j| (Statistic::Contains { j }, Some(want)))
                .collect();
            expect_constant(&space, k, &stats, &mut rng)?;
        }
    }
    Ok(())
}

fn homomesy_contains_wz(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 1..=caps.max_n.min(6) {
        let space = StateSpace::ZeroSeqs { n };
        let want = Rat::new(1, 2);
        let stats: Vec<(Statistic, Option<Rat>)> = (1..=n as u32)
            .map(|j| (Statistic::Contains { j }, Some(want)))
            .collect();
        expect_constant(&space, n, &stats, &mut rng)?;
    }
    Ok(())
}

fn zeromesy_column_antisym(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let zero = Rat::from_integer(0);
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            let mut stats = Vec::new();
            for i in 1..=a {
                for j in 0..=b {
                    stats.push((Statistic::ColumnSizeAntisym { i, j }, Some(zero)));
                }
            }
            expect_constant(&space, a as usize, &stats, &mut rng)?;
        }
    }
    Ok(())
}

fn zeromesy_antipodal(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let zero = Rat::from_integer(0);
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            let mut stats = Vec::new();
            for col in 1..=a {
                for row in 1..=b {
                    stats.push((Statistic::Antipodal { col, row }, Some(zero)));
                }
            }
            expect_constant(&space, a as usize, &stats, &mut rng)?;
        }
    }
    Ok(())
}

fn homomesy_rank_alternating(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for a in 1..=caps.max_a {
        for b in 1..=caps.max_b {
            let space = StateSpace::Ideals(Shape::square(a, b).unwrap());
            expect_constant(
                &space,
                a as usize,
                &[(Statistic::RankAlternating, None)],
                &mut rng,
            )?;
        }
        let space = StateSpace::Ideals(Shape::upper(a).unwrap());
        expect_constant(
            &space,
            a as usize,
            &[(Statistic::RankAlternating, None)],
            &mut rng,
        )?;
    }
    Ok(())
}

fn zeromesy_scount_diff_left(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let zero = Rat::from_integer(0);
    for a in 1..=caps.max_a {
        let space = StateSpace::Ideals(Shape::left(a).unwrap());
        let mut stats = Vec::new();
        for l in 1..=a {
            for j in 1..=a {
                stats.push((Statistic::SCountDiff { l, j }, Some(zero)));
            }
        }
        expect_constant(&space, a as usize, &stats, &mut rng)?;
    }
    Ok(())
}

/// Random integer functions with equal tail averages: pair sums
/// `f(2i-1) + f(2i)` all equal to one constant `2A`; the lifted statistic is
/// then homomesic (with constant `a*A`, asserted via the library verdict).
fn homomesy_lifted_upper(caps: Caps) -> Result<(), String> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for a in 1..=caps.max_a {
        let space = StateSpace::Ideals(Shape::upper(a).unwrap());
        let mut stats = Vec::new();
        for _ in 0..50 {
            let double_avg = rng.gen_range(-10i64..=10);
            let mut values = vec![Rat::from_integer(0); 2 * a as usize];
            for i in 1..=a as usize {
                let hi = rng.gen_range(-9i64..=9);
                values[2 * i - 1] = Rat::from_integer(hi);
                values[2 * i - 2] = Rat::from_integer(double_avg - hi);
            }
            let want = Rat::new(a as i64 * double_avg, 2);
            stats.push((Statistic::Lifted { values }, Some(want)));
        }
        let mut short = ChaCha8Rng::seed_from_u64(12 + a as u64);
        expect_constant(&space, a as usize, &stats, &mut short)?;
    }
    // the documented instance on u:2 has constant 4
    let space: StateSpace = "u:2".parse().unwrap();
    let stat = Statistic::parse("lifted:1,3,2,2").unwrap();
    let mut rng2 = ChaCha8Rng::seed_from_u64(13);
    expect_constant(&space, 2, &[(stat, Some(Rat::from_integer(4)))], &mut rng2)?;
    let _ = rng;
    Ok(())
}

fn bijection_equivariance(caps: Caps) -> Result<(), String> {
    let amax = caps.max_a.min(4);
    for a in 1..=amax {
        for b in 1..=caps.max_b.min(4) {
            let sh = Shape::square(a, b).unwrap();
            let ideals = all_ideals(sh);
            let images: BTreeSet<_> = ideals.iter().map(|i| i.to_winch_seq().unwrap()).collect();
            if images.len() != ideals.len()
                || images.len() != IncreasingSeq::all(a as usize, a + b).len()
            {
                return Err(format!("q:{a},{b}: not a bijection onto its codomain"));
            }
            for i in &ideals {
                let x = i.to_winch_seq().unwrap();
                for j in 1..=a {
                    if i.toggle_column(j).to_winch_seq().unwrap()
                        != x.winch_at((a + 1 - j) as usize).unwrap()
                    {
                        return Err(format!("q:{a},{b} ideal {i} column {j}: not equivariant"));
                    }
                }
            }
        }
        let sh = Shape::upper(a).unwrap();
        for i in all_ideals(sh) {
            let x = i.to_bounded_seq().unwrap();
            for j in 1..=a {
                if i.toggle_column(j).to_bounded_seq().unwrap()
                    != x.winch_at((a + 1 - j) as usize).unwrap()
                {
                    return Err(format!("u:{a} ideal {i} column {j}: not equivariant"));
                }
            }
        }
        let sh = Shape::left(a).unwrap();
        let ideals = all_ideals(sh);
        if ideals.len() != 1 << a {
            return Err(format!("l:{a}: expected 2^{a} ideals"));
        }
        for i in ideals {
            let x = i.to_zero_prefix_seq().unwrap();
            for j in 1..=a {
                if i.toggle_column(j).to_zero_prefix_seq().unwrap()
                    != x.winch_at((a + 1 - j) as usize).unwrap()
                {
                    return Err(format!("l:{a} ideal {i} column {j}: not equivariant"));
                }
            }
        }
    }
    Ok(())
}

fn plain_snake_laws(k: usize, m: u32, nu: &Perm) -> Result<(), String> {
    let fail = |seed: &IncreasingSeq, what: &str| {
        Err(format!("k={k} m={m} nu={nu} seed={seed}: {what}"))
    };
    let mut seen: BTreeSet<IncreasingSeq> = BTreeSet::new();
    for seed in IncreasingSeq::all(k, m) {
        if seen.contains(&seed) {
            continue;
        }
        let board = TupleBoard::build_winch(&seed, nu).unwrap();
        for row in board.rows() {
            seen.insert(IncreasingSeq::new(m, row.clone()).unwrap());
        }
        let h = board.cylinder_rows();
        let snakes = board.snakes();
        if snakes.len() != k {
            return fail(&seed, "snake count");
        }
        let mut covered = BTreeSet::new();
        for s in &snakes {
            if s.len() != m as usize
                || s.start().0.col != 1
                || s.start().1 != 1
                || s.end().0.col != k
                || s.end().1 != m
            {
                return fail(&seed, "snake extent");
            }
            for &(c, _) in s.cells() {
                if !covered.insert(c) {
                    return fail(&seed, "overlapping snakes");
                }
            }
        }
        if covered.len() != h * k {
            return fail(&seed, "tiling");
        }
        let mut starts: Vec<(usize, Vec<u32>)> = snakes
            .iter()
            .map(|s| (s.start().0.row, s.map(k)))
            .collect();
        starts.sort();
        for t in 0..starts.len() {
            let (pr, ref cp) = starts[t];
            let (q_raw, ref cq) = starts[(t + 1) % starts.len()];
            let q = if t + 1 == starts.len() { q_raw + h } else { q_raw };
            if cq != &left_shift(cp) {
                return fail(&seed, "adjacent maps not left-shifted");
            }
            if cp[0] as usize != q - pr {
                return fail(&seed, "first-column gap law");
            }
        }
        for r in 1..=k {
            for j in 1..=m {
                if board.census(r, j).unwrap() != board.census(k + 1 - r, m + 1 - j).unwrap() {
                    return fail(&seed, "column census");
                }
            }
        }
    }
    Ok(())
}

fn snake_laws_winch(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for m in 1..=caps.max_m.min(7) {
        for k in 1..=m as usize {
            let mut nus = if k <= 4 {
                Perm::all(k)
            } else {
                vec![Perm::identity(k), Perm::reversed(k)]
            };
            if k > 4 {
                for _ in 0..3 {
                    nus.push(Perm::random(k, &mut rng));
                }
            }
            for nu in nus {
                plain_snake_laws(k, m, &nu)?;
            }
        }
    }
    Ok(())
}

fn wz_snake_laws(n: usize, nu: &Perm, expect_gap_two: bool) -> Result<(), String> {
    let fail = |seed: &ZeroPrefixSeq, what: &str| {
        Err(format!("n={n} nu={nu} seed={seed}: {what}"))
    };
    let mut seen: BTreeSet<ZeroPrefixSeq> = BTreeSet::new();
    for seed in ZeroPrefixSeq::all(n) {
        if seen.contains(&seed) {
            continue;
        }
        let board = TupleBoard::build_winch_zero(&seed, nu).unwrap();
        for row in board.rows() {
            seen.insert(ZeroPrefixSeq::new(row.clone()).unwrap());
        }
        let h = board.cylinder_rows();
        let snakes = board.snakes();
        let mut covered = BTreeSet::new();
        for s in &snakes {
            if s.len() != n || s.start().1 != 1 || s.end().1 != n as u32 {
                return fail(&seed, "snake extent");
            }
            for &(c, _) in s.cells() {
                if !covered.insert(c) {
                    return fail(&seed, "overlapping snakes");
                }
            }
        }
        let nonzero = (1..=h)
            .flat_map(|row| (1..=n).map(move |col| Cell { row, col }))
            .filter(|&c| board.value(c) > 0)
            .count();
        if covered.len() != nonzero {
            return fail(&seed, "zeros+snakes tiling");
        }
        let mut starts: Vec<(usize, Vec<u32>)> = snakes
            .iter()
            .map(|s| (s.start().0.row, s.map(n)))
            .collect();
        starts.sort();
        if starts.len() != n {
            return fail(&seed, "snake count");
        }
        for t in 0..starts.len() {
            let (pr, ref cp) = starts[t];
            let (q_raw, ref cq) = starts[(t + 1) % starts.len()];
            let q = if t + 1 == starts.len() { q_raw + h } else { q_raw };
            if expect_gap_two && q - pr != 2 {
                return fail(&seed, "1-rows do not alternate");
            }
            let crawled = CrawlState::new(cp.clone()).unwrap().crawl();
            if cq != crawled.entries() {
                return fail(&seed, "adjacent maps not crawl-related");
            }
        }
    }
    Ok(())
}

fn snake_laws_wz(caps: Caps) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in 1..=caps.max_n.min(6) {
        wz_snake_laws(n, &Perm::identity(n), true)?;
        let nus = if n <= 4 {
            Perm::all(n)
        } else {
            (0..4).map(|_| Perm::random(n, &mut rng)).collect()
        };
        for nu in nus {
            wz_snake_laws(n, &nu, false)?;
        }
    }
    Ok(())
}

fn crawl_word(caps: Caps) -> Result<(), String> {
    for n in 1..=caps.max_n {
        let states = CrawlState::all(n);
        let mut words = BTreeSet::new();
        for c in &states {
            let mut cur = c.clone();
            for _ in 0..n {
                cur = cur.crawl();
            }
            if cur != *c {
                return Err(format!("crawl period at n={n}, c={c}"));
            }
            if word_of(&c.crawl()) != word_of(c).rotate_blocks() {
                return Err(format!("word map does not intertwine at n={n}, c={c}"));
            }
            words.insert(word_of(c));
        }
        if words.len() != states.len() {
            return Err(format!("word map not injective at n={n}"));
        }
        for b in NecklaceWord::all(n) {
            if !b.bits()[2 * n - 1] {
                let mut cur = b.clone();
                for _ in 0..n {
                    cur = cur.rotate_blocks();
                }
                if cur != b {
                    return Err(format!("rotation period at n={n}, b={b}"));
                }
            }
        }
    }
    // worked values
    let b = NecklaceWord::new("110010001101".chars().map(|c| c == '1').collect()).unwrap();
    if b.rotate_blocks().to_string() != "010001101110" {
        return Err("block rotation worked value".to_string());
    }
    let prev = CrawlState::new(vec![0, 1, 2, 1, 1]).unwrap();
    if prev.crawl().entries() != [0, 1, 1, 1, 2] {
        return Err("crawl worked value (0,1,2,1,1)".to_string());
    }
    let id = Perm::identity(4);
    let x = IncreasingSeq::new(7, vec![2, 3, 4, 6]).unwrap();
    let wx = x.winch_pass(&id).unwrap();
    let kx = necklace_of(&x, &id).unwrap();
    let kwx = necklace_of(&wx, &id).unwrap();
    if kx != Necklace::new(7, vec![1, 2, 5, 6]).unwrap()
        || kwx != Necklace::new(7, vec![1, 4, 5, 7]).unwrap()
        || kwx.rotate() != kx
    {
        return Err("necklace worked values".to_string());
    }
    // equivariance sweep
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for m in 1..=caps.max_m.min(7) {
        for k in 1..=m as usize {
            let mut nus = vec![Perm::identity(k)];
            nus.push(Perm::random(k, &mut rng));
            for nu in nus {
                for x in IncreasingSeq::all(k, m) {
                    let wx = x.winch_pass(&nu).unwrap();
                    if necklace_of(&wx, &nu).unwrap().rotate() != necklace_of(&x, &nu).unwrap() {
                        return Err(format!("necklace equivariance k={k} m={m} nu={nu} x={x}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn specializations(caps: Caps) -> Result<(), String> {
    let mut shapes = Vec::new();
    for a in 1..=caps.max_a.min(4) {
        for b in 1..=caps.max_b.min(4) {
            shapes.push(Shape::square(a, b).unwrap());
        }
        shapes.push(Shape::upper(a).unwrap());
        shapes.push(Shape::left(a).unwrap());
    }
    for sh in &shapes {
        let a = sh.cols() as usize;
        for ideal in all_ideals(*sh) {
            if ideal.comotion(&Perm::reversed(a)).unwrap() != ideal.rowmotion_direct() {
                return Err(format!("{sh} ideal {ideal}: reversed comotion vs rowmotion"));
            }
            if ideal.comotion(&Perm::identity(a)).unwrap() != ideal.promotion() {
                return Err(format!("{sh} ideal {ideal}: identity comotion vs promotion"));
            }
        }
    }
    for a in 1..=caps.max_a.min(3) {
        for b in 1..=caps.max_b.min(3) {
            let sh = Shape::square(a, b).unwrap();
            for ext in sh.linear_extensions() {
                for ideal in all_ideals(sh) {
                    let mut cur = ideal.clone();
                    for &x in ext.iter().rev() {
                        cur = cur.toggle(x).unwrap();
                    }
                    if cur != ideal.rowmotion_direct() {
                        return Err(format!("{sh} ideal {ideal}: linear extension mismatch"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn report_determinism(_: Caps) -> Result<(), String> {
    let space: StateSpace = "q:2,2".parse().unwrap();
    let report = orbit_partition(&space, &Action::Comotion(Perm::identity(2))).unwrap();
    let checks = vec![
        check_homomesy(&report, &Statistic::Size).unwrap(),
        check_homomesy(&report, &Statistic::parse("s:2").unwrap()).unwrap(),
    ];
    let doc = ReportDoc::new(&report, &checks, None);
    let a = doc.to_json();
    let b = ReportDoc::new(&report, &checks, None).to_json();
    if a != b {
        return Err("repeated rendering differs".to_string());
    }
    match ReportDoc::from_json(&a) {
        Ok(parsed) if parsed == doc => Ok(()),
        Ok(_) => Err("round trip is not the identity".to_string()),
        Err(e) => Err(format!("round trip failed: {e}")),
    }
}
