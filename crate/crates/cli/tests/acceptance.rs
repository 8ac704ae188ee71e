//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

use std::collections::HashSet;
use std::panic;
use std::path::Path;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use num_integer::gcd;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use seaweed_core::partition::{
    conjugate, enumerate_colored_partitions, enumerate_compositions, enumerate_partitions,
    pad_with_ones, phi, phi_inverse, psi, Composition, Partition,
};
use seaweed_core::series::{a300574_gf, two_colored_gf};
use seaweed_core::stats::{
    c_in, conj_statistic, d8_witnesses, detect_period, frobenius_counts, ind_maxpar, ind_ones,
    ones_table, rev_statistic,
};
use seaweed_core::{index_dk, index_via_winding, SeaweedType, ThreePartShape};

type Check = Result<String, String>;

/// Cells of the published table: partitions of n (rows 1..=10) by all-ones
/// index value (columns 0..=9).
const TABLE_1: [[u64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 2, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 4, 2, 1, 0, 0, 0, 0, 0],
    [0, 0, 3, 5, 2, 1, 0, 0, 0, 0],
    [0, 0, 0, 7, 5, 2, 1, 0, 0, 0],
    [0, 0, 0, 5, 9, 5, 2, 1, 0, 0],
    [0, 0, 0, 0, 12, 10, 5, 2, 1, 0],
    [0, 0, 0, 0, 7, 17, 10, 5, 2, 1],
];

const FIGURE_3: [(&str, &str); 6] = [
    ("R", "10|3/3|4|6"),
    ("P", "4|3|3/4|6"),
    ("C(4)", "3|3/6"),
    ("F_v", "6/3|3"),
    ("B", "3/3"),
    ("C(3)", "/"),
];

/// Published eventual values for d = 5, 6, 7, and the period length the
/// prose gives for each.
const TAILS: [(u32, u32, &[u64], u32); 3] = [
    (5, 21, &[7, 3, 5, 3], 4),
    (6, 37, &[14, 5, 9, 3, 11, 5, 11, 3, 12, 5, 8, 3], 14),
    (7, 41, &[19, 9, 18, 7, 19, 9, 17, 7, 20, 9, 17, 7], 14),
];

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Check); 11] = [
        (1, table_1),
        (2, worked_examples),
        (3, winding_trace),
        (4, oracle_equivalence),
        (5, stabilization),
        (6, periodicity),
        (7, example_sequences),
        (8, d8_breakdown),
        (9, conjecture),
        (10, pair_statistics),
        (11, standalone_properties),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n}: PASS [{secs:.2}s] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL [{secs:.2}s] {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn seaweed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seaweed"))
        .args(args)
        .output()
        .expect("seaweed binary runs")
}

fn sw(text: &str) -> SeaweedType {
    text.parse().expect("valid seaweed type")
}

fn table_1() -> Check {
    let start = Instant::now();
    let out = seaweed(&["ones-table", "--n-max", "10", "--i-max", "10", "--format", "csv"]);
    within(start, Duration::from_secs(1))?;
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<&str> = text.lines().skip(1).collect();
    ensure(rows.len() == 10, || format!("{} rows", rows.len()))?;
    for (r, line) in rows.iter().enumerate() {
        let cells: Vec<u64> = line.split(',').skip(1).map(|c| c.parse().unwrap()).collect();
        ensure(cells == TABLE_1[r], || format!("row n={}: {cells:?} vs {:?}", r + 1, TABLE_1[r]))?;
    }
    let lib = ones_table(10, 10).map_err(|e| e.to_string())?;
    ensure(lib.cells.iter().zip(&TABLE_1).all(|(a, b)| a == b), || "library table differs".into())?;
    Ok("100 cells exact".into())
}

fn worked_examples() -> Check {
    let e4 = index_dk(&sw("2|4/1|2|3")).map_err(|e| e.to_string())?;
    ensure(e4 == 0, || format!("index(2|4/1|2|3) = {e4}"))?;
    let lambda = Partition::new(vec![3, 2, 1]).unwrap();
    let maxpar = ind_maxpar(&lambda).map_err(|e| e.to_string())?;
    let ones = ind_ones(&lambda).map_err(|e| e.to_string())?;
    ensure(maxpar == 0, || format!("ind_6(3,2,1) = {maxpar}"))?;
    ensure(ones == 3, || format!("ind_1^6(3,2,1) = {ones}"))?;
    let via_meander = index_dk(&sw("3|2|1/1|1|1|1|1|1")).map_err(|e| e.to_string())?;
    ensure(via_meander == 3, || format!("index(3|2|1/1^6) = {via_meander}"))?;
    Ok("index(2|4/1|2|3)=0, ind_6(3,2,1)=0, ind_1^6(3,2,1)=3".into())
}

fn winding_trace() -> Check {
    let out = seaweed(&["wind", "17|3/10|4|6"]);
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let mut expected: Vec<String> = FIGURE_3
        .iter()
        .map(|(kind, result)| format!("MOVE kind={kind} result={result}"))
        .collect();
    expected.push("index=6".into());
    let lines: Vec<&str> = text.lines().collect();
    ensure(lines == expected, || format!("got {lines:?}"))?;
    Ok("R, P, C(4), F_v, B, C(3) with every intermediate type".into())
}

fn pairs_of_weight(n: u32) -> Vec<(Composition, Composition)> {
    let comps = enumerate_compositions(n);
    comps
        .iter()
        .flat_map(|t| comps.iter().map(move |b| (t.clone(), b.clone())))
        .collect()
}

fn random_composition(rng: &mut ChaCha8Rng, n: u32) -> Composition {
    let mut parts = Vec::new();
    let mut run = 1;
    for _ in 1..n {
        if rng.gen_bool(0.5) {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::new(parts).unwrap()
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut exhaustive = 0usize;
    for n in 1..=12 {
        let pairs = pairs_of_weight(n);
        exhaustive += pairs.len();
        let bad = pairs.par_iter().find_any(|(t, b)| {
            let s = SeaweedType::new(t.clone(), b.clone()).unwrap();
            index_via_winding(&s).unwrap() != index_dk(&s).unwrap()
        });
        if let Some((t, b)) = bad {
            return Err(format!("winding and meander disagree on {t}/{b}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ea_3eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=60);
        let s = SeaweedType::new(random_composition(&mut rng, n), random_composition(&mut rng, n))
            .unwrap();
        ensure(index_via_winding(&s).unwrap() == index_dk(&s).unwrap(), || format!("random pair {s}"))?;
    }
    for n in 2..=40u32 {
        for a in 1..n {
            let s = SeaweedType::from_parts(&[a, n - a], &[n]).unwrap();
            let got = index_dk(&s).unwrap();
            ensure(got == gcd(a, n - a) - 1, || format!("{s}: {got}"))?;
        }
    }
    let mut three = 0;
    for n in 3..=30u32 {
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                for shape in [ThreePartShape::ThreeOverOne, ThreePartShape::TwoOverTwo] {
                    let Ok(s) = shape.seaweed(a, b, c) else { continue };
                    let got = index_dk(&s).unwrap();
                    ensure(got == gcd(a + b, b + c) - 1, || format!("{s}: {got}"))?;
                    three += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{exhaustive} exhaustive pairs, 10000 random pairs, two-part a+b<=40, {three} three-part types"
    ))
}

fn stabilization() -> Check {
    let gf = two_colored_gf(10).map_err(|e| e.to_string())?;
    let mut stable = Vec::new();
    for i in 1..=10u32 {
        let from = (3 * i).saturating_sub(3).max(1);
        let values: Vec<u64> = (from..=3 * i + 5).map(|n| c_in(i, n).unwrap()).collect();
        ensure(values.windows(2).all(|w| w[0] == w[1]), || format!("c^{i}_n not constant: {values:?}"))?;
        let coeff = gf.coeff((i - 1) as usize);
        ensure(i128::from(values[0]) == coeff, || format!("c^{i} = {} vs coefficient {coeff}", values[0]))?;
        stable.push(values[0]);
    }
    for i in 1..=6u32 {
        let colored = enumerate_colored_partitions(i - 1);
        for n in (3 * i).saturating_sub(3).max(1)..=3 * i {
            let level: Vec<Partition> = enumerate_partitions(n, None)
                .into_iter()
                .filter(|l| ind_ones(l).unwrap() == n - i)
                .collect();
            ensure(level.len() == colored.len(), || format!("i={i}, n={n}: sizes differ"))?;
            let mut seen = HashSet::new();
            for lambda in &level {
                let kappa = phi_inverse(&psi(lambda)).ok_or(format!("psi({lambda}) has a part 1"))?;
                ensure(pad_with_ones(&phi(&kappa), n).as_ref() == Some(lambda), || {
                    format!("phi(psi({lambda})) does not return")
                })?;
                ensure(seen.insert(kappa), || format!("psi not injective at {lambda}"))?;
            }
        }
    }
    Ok(format!("c^1..c^10 = {stable:?}; phi/psi round trip for i <= 6"))
}

fn periodicity() -> Check {
    let start = Instant::now();
    let expected = |d: u32, n: u32| -> Option<u64> {
        match d {
            1 if n >= 3 => Some(0),
            2 if n >= 5 => Some(if n % 2 == 1 { 1 } else { 0 }),
            3 if n >= 13 => Some(if n % 2 == 1 { 2 } else { 0 }),
            4 if n >= 17 => Some([0, 4, 2, 3][(n % 4) as usize]),
            _ => None,
        }
    };
    for d in 1..=4 {
        for c in frobenius_counts(d, 80).map_err(|e| e.to_string())? {
            if let Some(want) = expected(d, c.n) {
                ensure(c.count == want, || format!("|P({}, {d})| = {} vs {want}", c.n, c.count))?;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok("d = 1..4 residue patterns hold for n <= 80".into())
}

fn example_sequences() -> Check {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (d, onset, values, stated) in TAILS {
        let counts: Vec<u64> = frobenius_counts(d, 120)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|c| c.count)
            .collect();
        for n in onset..=120 {
            let want = values[((n - onset) as usize) % values.len()];
            let got = counts[(n - 1) as usize];
            ensure(got == want, || format!("d={d}, n={n}: {got} vs {want}"))?;
        }
        let p = detect_period(&counts, 1, 3).ok_or(format!("d={d}: no period detected"))?;
        ensure(p.onset <= onset, || format!("d={d}: detected onset {} after {onset}", p.onset))?;
        let flag = if p.period == stated {
            String::new()
        } else {
            format!(", differs from stated period {stated}")
        };
        notes.push(format!("d={d}: period {} from n={}{flag}", p.period, p.onset));
    }
    within(start, Duration::from_secs(600))?;
    Ok(notes.join("; "))
}

fn d8_breakdown() -> Check {
    let counts = frobenius_counts(8, 41).map_err(|e| e.to_string())?;
    let along: Vec<u64> = [17, 25, 33, 41].iter().map(|&n| counts[n - 1].count).collect();
    ensure(along.windows(2).all(|w| w[0] < w[1]), || format!("not increasing: {along:?}"))?;
    let mut witnesses = 0;
    for m in 2..=5 {
        for lambda in d8_witnesses(m) {
            let s = SeaweedType::maximal_parabolic(lambda.as_composition()).unwrap();
            ensure(index_dk(&s).unwrap() == 0, || format!("witness {lambda} has positive index"))?;
            witnesses += 1;
        }
    }
    Ok(format!("|P(n,8)| at n=17,25,33,41: {along:?}; {witnesses} witnesses Frobenius"))
}

fn conjecture() -> Check {
    let start = Instant::now();
    let out = seaweed(&["conjecture", "--n-max", "40", "--format", "csv"]);
    within(start, Duration::from_secs(120))?;
    let code = out.status.code();
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let gf = a300574_gf(40).map_err(|e| e.to_string())?;
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let n: usize = f[0].parse().unwrap();
        let abs: i128 = f[3].parse().unwrap();
        ensure(abs == gf.coeff(n) && f[6] == "MATCH", || format!("row {line}"))?;
        rows += 1;
    }
    ensure(rows == 40, || format!("{rows} rows"))?;
    ensure(code == Some(0), || format!("exit {code:?}"))?;
    Ok("|e_n - o_n| matches the product coefficient for n = 1..40".into())
}

fn pair_statistics() -> Check {
    let mut failures = Vec::new();
    let mut conj_equals_fixed_points = true;
    for n in 1..=20u32 {
        let divisors = (1..=n).filter(|k| n % k == 0).count() as u64;
        let rev = rev_statistic(n).map_err(|e| e.to_string())?;
        if rev != divisors {
            failures.push(format!("rev n={n}: {rev} vs d(n)={divisors}"));
        }
        let fixed = enumerate_partitions(n, None)
            .iter()
            .filter(|l| conjugate(l) == **l)
            .count() as u64;
        let conj = conj_statistic(n).map_err(|e| e.to_string())?;
        conj_equals_fixed_points &= conj == fixed;
        if conj != 2 * fixed {
            failures.push(format!("conj n={n}: {conj} vs 2*sc(n)={}", 2 * fixed));
        }
    }
    if failures.is_empty() {
        return Ok("rev = d(n) and conj = 2 sc(n) for n <= 20".into());
    }
    let shown = failures.iter().take(4).cloned().collect::<Vec<_>>().join("; ");
    let observed = if conj_equals_fixed_points {
        " (observed: conj = sc(n) for every n <= 20)"
    } else {
        ""
    };
    Err(format!("{} mismatches: {shown}{observed}", failures.len()))
}

fn standalone_properties() -> Check {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let target = root.join("target/standalone-core");
    let out = Command::new(env!("CARGO"))
        .current_dir(&root)
        .env("CARGO_TARGET_DIR", &target)
        .args(["test", "-p", "seaweed-core", "--test", "properties", "--", "--exact"])
        .args([
            "lemma_filters_are_sound",
            "conjugation_is_an_involution",
            "meander_degree_bound",
            "series_multiply_back_identity",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || {
        format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    ensure(stdout.contains("test result: ok. 4 passed"), || format!("unexpected output: {stdout}"))?;
    let cli_built = ["debug", "release"]
        .iter()
        .any(|p| target.join(p).join("seaweed").exists());
    ensure(!cli_built, || "the CLI was built".into())?;
    Ok("4 property tests green in a core-only build".into())
}
