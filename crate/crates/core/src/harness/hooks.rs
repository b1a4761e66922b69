//! Hook-length products, their root structure and the `d_1` statistics.

use super::{chain_witness, Check, Outcome, Params};
use crate::arith::{rat, sturm_analysis, unimodal, MultiPoly, RatFunc, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::identity::{eta_product, partition_product_series, partition_sum_series, CellFilter, EtaFactor};
use crate::partition::{part_statistics, partition_counts, partitions_of, Cell, Partition};

const LOCATION: &str = "hook products";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "C2.1",
        location: LOCATION,
        description: "arm-zero, multiplicity-binomial, full (h^2+t)/h^2 and leg-zero partition sums agree",
        defaults: &[("max_n", 16)],
        runner: c2_1,
    },
    Check {
        id: "C2.2a",
        location: LOCATION,
        description: "P_n(t) = sum prod (h^2+t)/h^2 has only simple negative real roots",
        defaults: &[("max_n", 10)],
        runner: c2_2a,
    },
    Check {
        id: "C2.2b",
        location: LOCATION,
        description: "P_n(t) is unimodal",
        defaults: &[("max_n", 16)],
        runner: c2_2b,
    },
    Check {
        id: "P2.2",
        location: LOCATION,
        description: "b_n = max d_1(λ) against x/(1-x) (x^2;x^2)^2/(x;x)",
        defaults: &[("max_n", 30)],
        runner: p2_2,
    },
    Check {
        id: "L2.3",
        location: LOCATION,
        description: "sum f_1 = sum g_1 = sum d_1 = partial sums of p(k)",
        defaults: &[("max_n", 14)],
        runner: l2_3,
    },
];

fn t() -> MultiPoly {
    MultiPoly::var(Var::T)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::from_int(n)
}

fn linear_hook(_: &Partition, c: &Cell) -> Result<RatFunc> {
    RatFunc::new(&int(c.hook as i64) + &t(), int(c.hook as i64))
}

fn square_hook(_: &Partition, c: &Cell) -> Result<RatFunc> {
    let h2 = int((c.hook * c.hook) as i64);
    RatFunc::new(&h2 + &t(), h2)
}

/// `sum_n x^n P_n(t)`.
pub(super) fn p_series(order: usize) -> Result<TruncatedSeries> {
    partition_product_series(order, square_hook, CellFilter::All)
}

/// `prod_j C(k_j + t, k_j)` with `k_j` the multiplicity of part `j`.
fn multiplicity_binomials(lambda: &Partition) -> Result<RatFunc> {
    let mut p = MultiPoly::one();
    let mut d = 1i64;
    for &k in lambda.multiplicities().values() {
        for i in 1..=k as i64 {
            p = &p * &(&t() + &int(i));
            d *= i;
        }
    }
    RatFunc::new(p, int(d))
}

fn c2_1(p: &Params) -> Result<Outcome> {
    let n = p.usize("max_n")?;
    let arm = partition_product_series(n, linear_hook, CellFilter::ArmZero)?;
    p.tick()?;
    let mid = partition_sum_series(n, multiplicity_binomials)?;
    p.tick()?;
    let full = p_series(n)?;
    p.tick()?;
    let leg = partition_product_series(n, linear_hook, CellFilter::LegZero)?;
    let eta = eta_product(&[EtaFactor::new(1, 0, &t() + &int(1))], n)?;
    let w = chain_witness(&[
        ("arm-zero product", &arm),
        ("binomial product", &mid),
        ("full product", &full),
        ("leg-zero product", &leg),
    ]);
    let notes = match chain_witness(&[("full product", &full), ("prod (1-x^j)^(-t-1)", &eta)]) {
        None => "the full product also equals prod (1-x^j)^(-t-1)".to_string(),
        Some(e) => format!("full product differs from prod (1-x^j)^(-t-1): {e}"),
    };
    Ok(Outcome::from_failure(w, notes))
}

fn p_polys(p: &Params) -> Result<Vec<MultiPoly>> {
    p_series(p.usize("max_n")?)?.poly_coeffs()
}

fn c2_2a(p: &Params) -> Result<Outcome> {
    for (n, pn) in p_polys(p)?.iter().enumerate().skip(1) {
        p.tick()?;
        let r = sturm_analysis(pn)?;
        let deg = pn.degree_in(Var::T) as usize;
        if r.real_root_count != deg || !r.all_roots_simple || !r.all_roots_negative {
            return Ok(Outcome::refuted(
                format!(
                    "n={n}: P_n = {pn}; {} real roots of degree {deg}, simple = {}, negative = {}",
                    r.real_root_count, r.all_roots_simple, r.all_roots_negative
                ),
                "",
            ));
        }
    }
    Ok(Outcome::verified("root counts by Sturm sequences over the rationals"))
}

fn c2_2b(p: &Params) -> Result<Outcome> {
    for (n, pn) in p_polys(p)?.iter().enumerate().skip(1) {
        p.tick()?;
        if !unimodal(pn)? {
            return Ok(Outcome::refuted(format!("n={n}: P_n = {pn}"), ""));
        }
    }
    Ok(Outcome::verified(""))
}

/// `max_{λ ⊢ n} d_1(λ)` for `n = 0..=max`.
pub(super) fn max_corners(max: u32) -> Vec<u32> {
    (0..=max).map(|n| partitions_of(n).map(|l| part_statistics(&l).d1).max().unwrap_or(0)).collect()
}

fn p2_2(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let b = max_corners(max_n);
    p.tick()?;
    let eta = eta_product(&[EtaFactor::int(2, 0, -2), EtaFactor::int(1, 0, 1)], max_n as usize)?;
    let eta: Vec<Rational> = eta.poly_coeffs()?.iter().map(MultiPoly::constant_term).collect();
    // x/(1-x) shifts by one and takes partial sums
    let mut series = vec![rat(0, 1); max_n as usize + 1];
    for n in 1..=max_n as usize {
        series[n] = &series[n - 1] + &eta[n - 1];
    }
    let witness = (0..=max_n as usize)
        .find(|&n| rat(b[n] as i64, 1) != series[n])
        .map(|n| format!("n={n}: b_n = {}, series coefficient = {}", b[n], series[n]));

    // (sum_{k>=0} x^{k(k+1)/2} - 1)/(1-x) counts triangular numbers T_k <= n, k >= 1
    let tri = |n: u32| (1..).take_while(|k| k * (k + 1) / 2 <= n).count() as u32;
    let alt_ok = (0..=max_n).all(|n| b[n as usize] == tri(n));
    let head: Vec<String> = b.iter().skip(1).take(10).map(u32::to_string).collect();
    let notes = format!(
        "b_1.. = {}; (x^2;x^2)^2/(x;x) = sum_k x^(k(k+1)/2); (sum_k x^(k(k+1)/2) - 1)/(1-x) {} b_n for n <= {max_n}",
        head.join(","),
        if alt_ok { "matches" } else { "does not match" }
    );
    Ok(Outcome::from_failure(witness, notes))
}

fn l2_3(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let pc = partition_counts(max_n as usize);
    let mut printed_fail = None;
    for n in 1..=max_n {
        p.tick()?;
        let (mut f, mut g, mut d) = (0u64, 0u64, 0u64);
        for l in partitions_of(n) {
            let s = part_statistics(&l);
            f += s.f1 as u64;
            g += s.g1 as u64;
            d += s.d1 as u64;
        }
        let below: u64 = pc[..n as usize].iter().sum();
        let through = below + pc[n as usize];
        if f != g || g != d || d != below {
            return Ok(Outcome::refuted(
                format!("n={n}: sum f_1 = {f}, sum g_1 = {g}, sum d_1 = {d}, sum_(k<n) p(k) = {below}"),
                "",
            ));
        }
        if printed_fail.is_none() && d != through {
            printed_fail = Some(format!("n={n}: common value {d}, sum_(k=0..n) p(k) = {through}"));
        }
    }
    let notes = match printed_fail {
        Some(w) => format!("three sums agree and equal sum_(k=0..n-1) p(k); the upper limit k = n fails first at {w}"),
        None => "three sums agree and equal sum_(k=0..n) p(k)".to_string(),
    };
    Ok(Outcome::verified(notes))
}
