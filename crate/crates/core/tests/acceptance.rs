//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
//! a failure status if any hard criterion fails. The complexity smoke check
//! only warns.
//!
//! cargo test --release --test acceptance

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use highway_center::bench::{bench, Variant};
use highway_center::freeway::{solve_freeway, FreewaySolution};
use highway_center::generate::{generate, Family};
use highway_center::geom::{extreme_set_in, Frame, Point};
use highway_center::metric::{freeway_time, turnpike_time, Highway, HighwayKind};
use highway_center::oracle::{
    brute_basic, brute_turnpike, grid_freeway, sampled_freeway_time, verify,
};
use highway_center::problem::{Instance, LengthMode};
use highway_center::solution::solve;
use highway_center::turnpike::{
    rectilinear_1center, solve_basic_fixed, solve_basic_variable, solve_turnpike,
    solve_turnpike_quadratic, solve_vl_fast, TurnpikeSolution,
};

enum Outcome {
    Pass(String),
    Fail(String),
    Warn(String),
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn random_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<Point> {
    (0..n)
        .map(|_| Point::new(rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)))
        .collect()
}

fn radius_tol(r: f64) -> f64 {
    1e-6 * (1.0 + r)
}

fn turnpike_exhaustive() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for i in 0..200 {
        let n = rng.gen_range(3..=10);
        let pts = random_points(&mut rng, n);
        let v = [1.5, 2.0, 5.0][rng.gen_range(0..3)];
        let length = if i % 2 == 0 {
            LengthMode::Variable
        } else {
            LengthMode::Fixed(rng.gen_range(0.5..12.0))
        };
        let inst =
            Instance::new(pts.clone(), HighwayKind::Turnpike, length, v).expect("valid instance");
        let r = solve_turnpike(&inst).expect("solver").radius;
        let b = brute_turnpike(&pts, v, length).expect("oracle");
        let gap = (r - b).abs() / (1.0 + r);
        worst = worst.max(gap);
        if gap > 1e-4 {
            bad.push(format!("#{i}: solver {r} oracle {b}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "200 instances, worst |R - R_oracle|/(1+R) = {worst:.2e} (limit 1e-4) {}",
            bad.join("; ")
        ),
    )
}

fn vl_fast_path() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let (mut worst, mut bad) = (0.0f64, Vec::new());
    for i in 0..500 {
        let n = rng.gen_range(1..=60);
        let family = Family::ALL[i % Family::ALL.len()];
        let pts = generate(family, n, rng.gen()).expect("generator");
        let v = rng.gen_range(1.05..8.0);
        let fast = solve_vl_fast(&pts, v).expect("fast path").radius;
        let quad = solve_turnpike_quadratic(&pts, LengthMode::Variable, v)
            .expect("quadratic path")
            .radius;
        let rel = if fast == quad {
            0.0
        } else {
            (fast - quad).abs() / fast.abs().max(quad.abs())
        };
        worst = worst.max(rel);
        if rel > 1e-9 {
            bad.push(format!("#{i} ({family}, n={n}): {fast} vs {quad}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "500 instances, worst relative difference {worst:.2e} (limit 1e-9) {}",
            bad.join("; ")
        ),
    )
}

fn random_freeway(rng: &mut ChaCha8Rng) -> (Highway, Point) {
    let a = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let b = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let v = rng.gen_range(1.01..8.0);
    let f = a.lerp(b, rng.gen_range(0.0..1.0));
    let h = if rng.gen_bool(0.5) {
        Highway::freeway(a, b, v).expect("segment")
    } else {
        Highway::freeway_line(a, b - a, v).expect("line")
    };
    (h, f)
}

fn freeway_metric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let (mut worst_gap, mut worst_below, mut bad) = (0.0f64, 0.0f64, 0usize);
    for _ in 0..1000 {
        let (h, f) = random_freeway(&mut rng);
        let p = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let exact = freeway_time(p, f, &h).expect("metric");
        let sampled = sampled_freeway_time(p, f, &h, 100_000).expect("sampled");
        worst_gap = worst_gap.max(sampled - exact);
        worst_below = worst_below.max(exact - sampled);
        // Both sides are sums of a few rounded terms.
        if exact > sampled + 1e-12 || sampled - exact > 1e-4 {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!(
            "1000 configurations, worst gap {worst_gap:.2e} (limit 1e-4), exact above sampled by at most {:.1e}, {bad} violations",
            worst_below.max(0.0)
        ),
    )
}

fn diameter(points: &[Point]) -> f64 {
    let mut d = 0.0f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(p.l2(*q));
        }
    }
    d
}

fn freeway_grid() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let (mut slack, mut bad) = (f64::INFINITY, Vec::new());
    for i in 0..100 {
        let n = rng.gen_range(1..=7);
        let pts = random_points(&mut rng, n);
        let v = rng.gen_range(1.2..6.0);
        for length in [
            LengthMode::Variable,
            LengthMode::Fixed(rng.gen_range(0.5..12.0)),
        ] {
            let inst = Instance::new(pts.clone(), HighwayKind::Freeway, length, v)
                .expect("valid instance");
            let r = solve_freeway(&inst).expect("solver").radius;
            let g = grid_freeway(&pts, v, length, 64).expect("grid oracle");
            let lower = diameter(&pts) / (2.0 * v);
            slack = slack.min(g + 1e-3 * (1.0 + r) - r);
            if r > g + 1e-3 * (1.0 + r) || r < lower - 1e-9 {
                bad.push(format!(
                    "#{i} {length:?}: solver {r} grid {g} lower {lower}"
                ));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "200 solves (100 instances x 2 modes), smallest margin below grid bound {slack:.2e} {}",
            bad.join("; ")
        ),
    )
}

struct Run {
    pts: Vec<Point>,
    v: f64,
    ell: f64,
}

fn check_walk(
    pts: &[Point],
    f: Point,
    time: impl Fn(Point) -> f64,
    what: &str,
    errs: &mut Vec<String>,
) {
    for &p in pts {
        let t = time(p);
        if t > p.l1(f) + 1e-9 * (1.0 + p.l1(f)) {
            errs.push(format!("{what}: time {t} exceeds walking {}", p.l1(f)));
        }
    }
}

fn check_on_freeway(sol: &FreewaySolution, what: &str, errs: &mut Vec<String>) {
    let h = &sol.highway;
    let d = h.b - h.a;
    let len = d.norm();
    let off = if len == 0.0 {
        sol.facility.l2(h.a)
    } else {
        (d * (1.0 / len)).cross(sol.facility - h.a).abs()
    };
    let scale = 1.0 + sol.facility.x.abs().max(sol.facility.y.abs());
    if off > 1e-9 * scale {
        errs.push(format!("{what}: facility {off} off the freeway"));
    }
}

fn check_convex(
    sol: &FreewaySolution,
    rng: &mut ChaCha8Rng,
    what: &str,
    errs: &mut Vec<String>,
) -> f64 {
    let f = sol.facility;
    let span = 2.0 * sol.radius + 1.0;
    let d = |p: Point| freeway_time(p, f, &sol.highway).expect("metric");
    let mut worst = 0.0f64;
    for _ in 0..4 {
        let p = f + Point::new(rng.gen_range(-span..span), rng.gen_range(-span..span));
        let q = f + Point::new(rng.gen_range(-span..span), rng.gen_range(-span..span));
        let m = p.lerp(q, rng.gen_range(0.0..1.0));
        let excess = d(m) - d(p).max(d(q));
        worst = worst.max(excess);
        if excess > 1e-9 {
            errs.push(format!("{what}: ball not convex, excess {excess}"));
        }
    }
    worst
}

fn structural_run(run: &Run, rng: &mut ChaCha8Rng, errs: &mut Vec<String>) -> f64 {
    let (pts, v, ell) = (&run.pts, run.v, run.ell);
    let inst = |kind, length| Instance::new(pts.clone(), kind, length, v).expect("valid instance");
    let tvl: TurnpikeSolution =
        solve_turnpike(&inst(HighwayKind::Turnpike, LengthMode::Variable)).expect("turnpike vl");
    let tfl =
        solve_turnpike(&inst(HighwayKind::Turnpike, LengthMode::Fixed(ell))).expect("turnpike fl");
    let fvl = solve_freeway(&inst(HighwayKind::Freeway, LengthMode::Variable)).expect("freeway vl");
    let ffl =
        solve_freeway(&inst(HighwayKind::Freeway, LengthMode::Fixed(ell))).expect("freeway fl");
    let (_, rect) = rectilinear_1center(pts).expect("1-center");

    for (name, t) in [("turnpike VL", &tvl), ("turnpike FL", &tfl)] {
        check_walk(
            pts,
            t.facility,
            |p| turnpike_time(p, t.facility, t.t, t.facility, v).expect("metric"),
            name,
            errs,
        );
    }
    for (name, s) in [("freeway VL", &fvl), ("freeway FL", &ffl)] {
        check_walk(
            pts,
            s.facility,
            |p| freeway_time(p, s.facility, &s.highway).expect("metric"),
            name,
            errs,
        );
        check_on_freeway(s, name, errs);
    }
    let pairs = [
        ("R_freeway <= R_turnpike (VL)", fvl.radius, tvl.radius),
        ("R_freeway <= R_turnpike (FL)", ffl.radius, tfl.radius),
        ("R_VL <= R_FL (turnpike)", tvl.radius, tfl.radius),
        ("R_VL <= R_FL (freeway)", fvl.radius, ffl.radius),
        ("turnpike VL <= rectilinear", tvl.radius, rect),
        ("turnpike FL <= rectilinear", tfl.radius, rect),
        ("freeway VL <= rectilinear", fvl.radius, rect),
        ("freeway FL <= rectilinear", ffl.radius, rect),
    ];
    for (name, lo, hi) in pairs {
        if lo > hi + radius_tol(hi) {
            errs.push(format!("{name}: {lo} > {hi}"));
        }
    }
    for (name, got) in [
        ("freeway FL", ffl.highway.length()),
        ("turnpike FL", tfl.length),
    ] {
        if (got - ell).abs() > 1e-9 {
            errs.push(format!("{name}: length {got} instead of {ell}"));
        }
    }
    check_convex(&fvl, rng, "freeway VL", errs).max(check_convex(&ffl, rng, "freeway FL", errs))
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let mut errs = Vec::new();
    let mut worst_convex = 0.0f64;
    let runs = 10_000;
    for i in 0..runs {
        let family = Family::ALL[i % Family::ALL.len()];
        let n = rng.gen_range(1..=8);
        let run = Run {
            pts: generate(family, n, rng.gen()).expect("generator"),
            v: rng.gen_range(1.05..8.0),
            ell: rng.gen_range(1.0..80.0),
        };
        let before = errs.len();
        worst_convex = worst_convex.max(structural_run(&run, &mut rng, &mut errs));
        if errs.len() > before {
            errs.truncate(before + 1);
            errs[before] = format!("run {i} ({family}, n={n}): {}", errs[before]);
        }
    }
    let shown: Vec<&String> = errs.iter().take(3).collect();
    outcome(
        errs.is_empty(),
        format!(
            "{runs} runs x 4 solves, {} violations, worst convexity excess {:.1e} {shown:?}",
            errs.len(),
            worst_convex.max(0.0)
        ),
    )
}

fn complexity() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (variant, sizes, lo, hi) in [
        (Variant::TurnpikeVl, [2000, 4000], 0.0, 3.0),
        (Variant::FreewayVl, [2000, 4000], 0.0, 3.0),
        (Variant::FreewayFl, [2000, 4000], 0.0, 3.0),
        (Variant::TurnpikeFl, [500, 1000], 3.0, 5.5),
    ] {
        let report = bench(variant, &sizes, 5, 1006).expect("bench");
        let ratio = report.rows[1].ratio.expect("two sizes");
        let inside = if lo > 0.0 {
            (lo..=hi).contains(&ratio)
        } else {
            ratio < hi
        };
        ok &= inside;
        notes.push(format!("{variant} {}->{}: {ratio:.2}", sizes[0], sizes[1]));
    }
    let detail = format!("doubling ratios {}", notes.join(", "));
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Warn(detail)
    }
}

fn known_values() -> Outcome {
    let two = vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)];
    let solve_r = |kind, length| {
        solve(&Instance::new(two.clone(), kind, length, 5.0).expect("valid instance"))
            .expect("solver")
            .radius
    };
    let ext = |pts: &[(f64, f64)]| {
        let p: Vec<Point> = pts.iter().map(|&q| Point::from(q)).collect();
        extreme_set_in(&p, Frame::Original).expect("extreme set")
    };
    let (w, h) = (ext(&[(0., 0.), (2., 2.)]), ext(&[(10., 0.), (12., 2.)]));
    let (wp, hp) = (
        [Point::new(0., 0.), Point::new(2., 2.)],
        [Point::new(10., 0.), Point::new(12., 2.)],
    );
    let cases: Vec<(&str, f64, f64, f64, f64)> = vec![
        (
            "turnpike VL",
            5.0 / 3.0,
            brute_turnpike(&two, 5.0, LengthMode::Variable).expect("oracle"),
            1e-4,
            solve_r(HighwayKind::Turnpike, LengthMode::Variable),
        ),
        (
            "turnpike FL",
            3.0,
            brute_turnpike(&two, 5.0, LengthMode::Fixed(5.0)).expect("oracle"),
            1e-4,
            solve_r(HighwayKind::Turnpike, LengthMode::Fixed(5.0)),
        ),
        (
            "freeway VL",
            1.0,
            grid_freeway(&two, 5.0, LengthMode::Variable, 64).expect("oracle"),
            2e-3,
            solve_r(HighwayKind::Freeway, LengthMode::Variable),
        ),
        (
            "freeway FL",
            3.4,
            grid_freeway(&two, 5.0, LengthMode::Fixed(4.0), 64).expect("oracle"),
            2e-3,
            solve_r(HighwayKind::Freeway, LengthMode::Fixed(4.0)),
        ),
        (
            "basic VL",
            8.0 / 3.0,
            brute_basic(&wp, &hp, 5.0, LengthMode::Variable, Frame::Original).expect("oracle"),
            1e-4,
            solve_basic_variable(&w, &h, 5.0).expect("basic").radius,
        ),
        (
            "basic FL",
            3.0,
            brute_basic(&wp, &hp, 5.0, LengthMode::Fixed(10.0), Frame::Original).expect("oracle"),
            1e-4,
            solve_basic_fixed(&w, &h, 10.0, 5.0).expect("basic").radius,
        ),
    ];
    let mut bad = Vec::new();
    let mut shown = Vec::new();
    for (name, expected, oracle, oracle_tol, solver) in cases {
        let oracle_ok = (oracle - expected).abs() <= oracle_tol;
        let solver_ok = (solver - expected).abs() <= 1e-4;
        if !(oracle_ok && solver_ok) {
            bad.push(format!(
                "{name}: expected {expected}, oracle {oracle}, solver {solver}"
            ));
        }
        shown.push(format!("{name} {solver:.6}"));
    }
    outcome(
        bad.is_empty(),
        format!("{} {}", shown.join(", "), bad.join("; ")),
    )
}

fn degenerate() -> Outcome {
    let mut sets: Vec<(String, Vec<Point>)> = vec![
        ("n=1".into(), vec![Point::new(3.0, -2.0)]),
        (
            "n=2".into(),
            vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)],
        ),
        (
            "n=2 diagonal".into(),
            vec![Point::new(1.0, 1.0), Point::new(4.0, 5.0)],
        ),
        ("all equal".into(), vec![Point::new(7.0, 7.0); 6]),
        (
            "vertical line".into(),
            (0..7).map(|i| Point::new(2.0, i as f64 * 1.5)).collect(),
        ),
        (
            "diagonal line".into(),
            (0..7).map(|i| Point::new(i as f64, i as f64)).collect(),
        ),
    ];
    for seed in 0..3 {
        sets.push((
            format!("duplicate-heavy #{seed}"),
            generate(Family::DuplicateHeavy, 12, seed).expect("gen"),
        ));
        sets.push((
            format!("collinear #{seed}"),
            generate(Family::Collinear, 10, seed).expect("gen"),
        ));
    }
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, pts) in &sets {
        for v in [1.0 + 1e-9, 2.0] {
            for kind in [HighwayKind::Turnpike, HighwayKind::Freeway] {
                for length in [LengthMode::Variable, LengthMode::Fixed(3.0)] {
                    count += 1;
                    let inst = Instance::new(pts.clone(), kind, length, v).expect("valid instance");
                    let res = solve(&inst).and_then(|rec| verify(&inst, &rec, true));
                    match res {
                        Ok(report) if report.passed() => {}
                        Ok(report) => {
                            let failed: Vec<&str> =
                                report.failures().map(|c| c.name.as_str()).collect();
                            bad.push(format!("{name} v={v} {kind:?} {length:?}: {failed:?}"));
                        }
                        Err(e) => bad.push(format!("{name} v={v} {kind:?} {length:?}: {e}")),
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{count} solve+verify runs, {} failures {}",
            bad.len(),
            bad.join("; ")
        ),
    )
}

fn main() -> ExitCode {
    let only: Option<String> = std::env::args().skip(1).find(|a| a.starts_with('C'));
    let criteria: [Criterion; 8] = [
        (
            "C1 turnpike exhaustive-partition equivalence",
            turnpike_exhaustive,
        ),
        ("C2 variable-length fast path equivalence", vl_fast_path),
        (
            "C3 freeway metric against sampled entry points",
            freeway_metric,
        ),
        ("C4 freeway solver against grid oracle", freeway_grid),
        ("C5 structural invariants on randomized solves", structural),
        ("C6 complexity smoke", complexity),
        ("C7 known-value fixtures", known_values),
        ("C8 degenerate robustness", degenerate),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        if only.as_deref().is_some_and(|o| !name.starts_with(o)) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match result {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Warn(d) => ("WARN", d),
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("[{tag}] {name}: {} ({secs:.1} s)", detail.trim_end());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
