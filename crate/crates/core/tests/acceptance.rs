//! One test per acceptance criterion. Each prints a `PASS` or `FAIL` line.

use std::time::{Duration, Instant};

use hooklab::arith::{rat, MultiPoly, RatFunc, Var};
use hooklab::harness::{random_matrices, run_all, run_check, Bounds, CheckResult, Status};
use hooklab::identity::{
    cofactor_determinant, corollary_5_2, cycle_index_determinant, eta_product, partition_product_series, rr_q_series,
    CellFilter, EtaFactor, RrKind, SignConvention,
};
use hooklab::perm::involution_trace_moment;
use hooklab::report::Report;

fn bounds(pairs: &[(&str, i64)]) -> Bounds {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn run(id: &str, pairs: &[(&str, i64)]) -> CheckResult {
    run_check(id, &bounds(pairs)).unwrap()
}

fn expect(r: &CheckResult, status: Status, errors: &mut Vec<String>) {
    if r.status != status {
        errors.push(format!(
            "{} is {} (expected {}){}",
            r.id,
            r.status,
            status,
            r.witness.as_ref().map(|w| format!(": {w}")).unwrap_or_default()
        ));
    }
}

fn verified(id: &str, pairs: &[(&str, i64)], errors: &mut Vec<String>) -> CheckResult {
    let r = run(id, pairs);
    expect(&r, Status::Verified, errors);
    r
}

fn criterion(n: u32, title: &str, limit: Duration, body: impl FnOnce(&mut Vec<String>)) {
    let start = Instant::now();
    let mut errors = Vec::new();
    body(&mut errors);
    let elapsed = start.elapsed();
    if elapsed > limit {
        errors.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    if errors.is_empty() {
        println!("PASS criterion {n}: {title} ({elapsed:.2?})");
    } else {
        println!("FAIL criterion {n}: {title} ({elapsed:.2?})");
        for e in &errors {
            println!("    {e}");
        }
        panic!("criterion {n} failed: {}", errors.join("; "));
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_eulerian() {
    criterion(1, "Eulerian suite", secs(5), |e| {
        verified("L1.1", &[("max_n", 10)], e);
        verified("L1.3", &[("max_n", 10)], e);
        let r = verified("L1.2", &[("max_sum", 10), ("convention", 1)], e);
        let mixed = run("L1.2", &[("max_sum", 10), ("convention", 2)]);
        for n in [&r.notes, &mixed.notes] {
            if !n.contains("k>=1") {
                e.push(format!("convention finding missing from notes: {n}"));
            }
        }
    });
}

#[test]
fn criterion_02_q_eulerian() {
    criterion(2, "q-Eulerian suite", secs(60), |e| {
        let r = verified("L1.7", &[("max_n", 6)], e);
        if !r.notes.contains("certified polynomial") {
            e.push(format!("L1.7 notes lack the polynomial certificate: {}", r.notes));
        }
        let c = run("C1.8", &[("max_alpha", 8)]);
        if !matches!(c.status, Status::Verified | Status::Refuted) || c.notes.is_empty() {
            e.push(format!("C1.8 verdict not reported: {c:?}"));
        }
    });
}

#[test]
fn criterion_03_hooks() {
    criterion(3, "hook suite", secs(120), |e| {
        verified("C2.1", &[("max_n", 16)], e);
        verified("C2.2a", &[("max_n", 10)], e);
        verified("C2.2b", &[("max_n", 16)], e);
        let eta = eta_product(&[EtaFactor::int(2, 0, -2), EtaFactor::int(1, 0, 1)], 4).unwrap();
        // x/(1-x) times the product, coefficients 1..5
        let mut partial = rat(0, 1);
        let mut series = Vec::new();
        for n in 1..=5 {
            partial += eta.coeff(n - 1).as_polynomial().unwrap().constant_term();
            series.push(partial.clone());
        }
        let b: Vec<_> = [1, 1, 2, 2, 2].iter().map(|&v| rat(v, 1)).collect();
        if series != b {
            let got: Vec<String> = series.iter().map(ToString::to_string).collect();
            e.push(format!("b_1..b_5 = 1,1,2,2,2 but the product gives {}", got.join(",")));
        }
        verified("P2.2", &[("max_n", 30)], e);
        let l = verified("L2.3", &[("max_n", 14)], e);
        if !l.notes.contains("upper limit") {
            e.push(format!("L2.3 notes lack the upper-limit finding: {}", l.notes));
        }
    });
}

#[test]
fn criterion_04_cycle_statistics() {
    criterion(4, "cycle statistic suite", secs(60), |e| {
        for id in ["L3.1", "X3.2", "X3.3", "X3.5"] {
            verified(id, &[("order", 10)], e);
        }
        verified("X3.6", &[("max_n", 10)], e);
        for id in ["X3.4", "X3.7", "X3.8"] {
            verified(id, &[("max_n", 14)], e);
        }
    });
}

#[test]
fn criterion_05_involutions() {
    criterion(5, "involution trace suite", secs(30), |e| {
        verified("C4.1", &[("max_n", 14), ("max_k", 5)], e);
        // involutions of S_3: identity (trace 3) and three transpositions (trace 1)
        if involution_trace_moment(3, 1) != 6.into() {
            e.push("n=3, k=1 value is not 6".into());
        }
        verified("C4.2", &[("max_n", 12)], e);
        for id in ["C4.3", "R4"] {
            let r = verified(id, &[], e);
            if !r.notes.contains("B̂") {
                e.push(format!("{id} notes lack the Bell reading: {}", r.notes));
            }
        }
    });
}

#[test]
fn criterion_06_hook_moments() {
    criterion(6, "hook moment identity", secs(10), |e| {
        verified("C5.2", &[("max_n", 10), ("max_r", 4)], e);
        for (n, r, v) in [(1, 1, 1), (2, 1, 5)] {
            let c = corollary_5_2(n, r);
            if c.lhs != rat(v, 1) || c.rhs != rat(v, 1) {
                e.push(format!("({n},{r}): lhs {} rhs {}, expected {v}", c.lhs, c.rhs));
            }
        }
    });
}

#[test]
fn criterion_07_contents() {
    criterion(7, "symplectic and orthogonal content suite", secs(180), |e| {
        verified("P6.1", &[("max_n", 16)], e);
        for id in ["C6.2a", "C6.2b", "C6.2c", "C6.3a", "C6.3b"] {
            verified(id, &[("order", 12)], e);
        }
        verified("C6.3c", &[("max_n", 12)], e);
        verified("P6.4", &[("max_k", 6), ("max_m", 5)], e);
        let lhs = partition_product_series(
            2,
            |_, c| RatFunc::new(MultiPoly::from_int(c.sp_content), MultiPoly::from_int(c.hook as i64)),
            CellFilter::All,
        )
        .unwrap();
        let rhs = eta_product(&[EtaFactor::int(4, 2, -1), EtaFactor::int(8, 4, 1)], 2).unwrap();
        let minus_one = RatFunc::from_int(-1);
        if lhs.coeff(2) != &minus_one || rhs.coeff(2) != &minus_one {
            e.push(format!("[x^2]: {} vs {}, expected -1", lhs.coeff(2), rhs.coeff(2)));
        }
    });
}

#[test]
fn criterion_08_determinant() {
    criterion(8, "cycle-index determinant", secs(5), |e| {
        let mats = random_matrices(50, 6, 7);
        for m in &mats {
            let det = cofactor_determinant(m).unwrap();
            let newton = cycle_index_determinant(m, SignConvention::Newton).unwrap();
            if det != newton {
                e.push(format!("Newton sign {newton} != det {det} on a {}x{} matrix", m.len(), m.len()));
            }
        }
        let r = run("P7.1", &[("trials", 50), ("max_size", 6)]);
        if !matches!(r.status, Status::Verified | Status::Refuted) || !r.notes.contains("cycle-count sign") {
            e.push(format!("cycle-count sign relationship not recorded: {r:?}"));
        }
    });
}

#[test]
fn criterion_09_quantum_hooks() {
    criterion(9, "quantum hook sum suite", secs(60), |e| {
        verified("E8.3", &[("max_alpha", 3), ("order", 12)], e);
        verified("C8.1", &[("max_alpha", 3), ("order", 12)], e);
        verified("P8.2", &[("order", 12), ("max_n", 14)], e);
    });
}

#[test]
fn criterion_10_squares() {
    criterion(10, "counting squares suite", secs(120), |e| {
        verified("P9.1", &[("order", 12), ("q_order", 12)], e);
        verified("P9.2", &[("order", 12), ("q_order", 12)], e);
        verified("T9.5iii", &[("order", 12)], e);
        verified("L9.3", &[("max_n", 25)], e);
        verified("C9.7", &[("max_n", 14)], e);
        let q = |k: i64, pow: u32| RatFunc::from(MultiPoly::var_pow(Var::Q, pow).scale(&rat(k, 1)));
        if rr_q_series(RrKind::Prop91, 12, Some(12)).coeff(4) != &q(2, 4) {
            e.push("[x^4] of the gap-two sum is not 2q^4".into());
        }
        if rr_q_series(RrKind::Thm95, 12, None).coeff(2) != &q(2, 2) {
            e.push("[x^2] of the squares sum is not 2q^2".into());
        }
    });
}

#[test]
fn criterion_11_cores() {
    criterion(11, "simultaneous core suite", secs(120), |e| {
        let f = verified("C11.1", &[("max_s", 6)], e);
        if !f.notes.contains("f(1..6) = 1,2,4,9,") {
            e.push(format!("f(1..4) spot values missing: {}", f.notes));
        }
        let g = verified("C11.2", &[("max_s", 6)], e);
        if !g.notes.contains("g(1..6) = 0,1,2,") {
            e.push(format!("g(3) = 2 not observed: {}", g.notes));
        }
        verified("C11.3", &[("max_s", 6)], e);
    });
}

#[test]
fn criterion_12_infrastructure() {
    criterion(12, "full run, determinism and JSON round trip", secs(600), |e| {
        let parallel = run_all(None, 4).unwrap();
        if parallel.summary.error != 0 {
            let bad: Vec<_> = parallel.checks.iter().filter(|c| c.status == Status::Error).map(|c| &c.id).collect();
            e.push(format!("errors in {bad:?}"));
        }
        let serial = run_all(None, 1).unwrap();
        let same = serial.checks.len() == parallel.checks.len()
            && serial.checks.iter().zip(&parallel.checks).all(|(a, b)| a.same_outcome(b));
        if !same || serial.summary != parallel.summary {
            e.push("serial and parallel reports differ".into());
        }
        let back = Report::from_json(&parallel.to_json().unwrap()).unwrap();
        if back != parallel {
            e.push("JSON round trip changed the report".into());
        }
    });
}
