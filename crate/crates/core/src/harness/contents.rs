//! Symplectic and orthogonal content products, flattening and the
//! cycle-index determinant.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{chain_witness, Check, Outcome, Params};
use crate::arith::{factorial, rat, MultiPoly, RatFunc, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::identity::{
    cofactor_determinant, cycle_index_determinant, eta_product, partition_product_series, CellFilter, EtaFactor,
    Matrix, SignConvention,
};
use crate::partition::{cell_stats, dim_sytx, partitions_of, Cell, Partition};
use crate::symfunc::problem_6_4_check;

const LOCATION: &str = "symplectic and orthogonal contents";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "P6.1",
        location: LOCATION,
        description: "sum prod c_sp/h = sum prod c_O/h",
        defaults: &[("max_n", 16)],
        runner: p6_1,
    },
    Check {
        id: "C6.2a",
        location: LOCATION,
        description: "sum prod (t+c_sp)/h against the four-block eta product",
        defaults: &[("order", 12)],
        runner: c6_2a,
    },
    Check {
        id: "C6.2b",
        location: LOCATION,
        description: "sum prod (t+c_O)/h against the four-block eta product",
        defaults: &[("order", 12)],
        runner: c6_2b,
    },
    Check {
        id: "C6.2c",
        location: LOCATION,
        description: "t = 0: sum prod c_sp/h = sum prod c_O/h = prod 1/(1+x^(4j-2))",
        defaults: &[("order", 12)],
        runner: c6_2c,
    },
    Check {
        id: "C6.3a",
        location: LOCATION,
        description: "sum prod (t+c_sp^2)/h^2 = sum prod (t+c_O^2)/h^2 = prod 1/(1-x^(4j-2)) prod 1/(1-x^j)^t",
        defaults: &[("order", 12)],
        runner: c6_3a,
    },
    Check {
        id: "C6.3b",
        location: LOCATION,
        description: "t = 0: sum prod c_sp^2/h^2 = sum prod c_O^2/h^2 = prod 1/(1-x^(4j-2))",
        defaults: &[("order", 12)],
        runner: c6_3b,
    },
    Check {
        id: "C6.3c",
        location: LOCATION,
        description: "delta_n sum f^2 prod c_sp^2 = n! sum f prod c_sp",
        defaults: &[("max_n", 14)],
        runner: c6_3c,
    },
    Check {
        id: "P6.4",
        location: LOCATION,
        description: "flattened sum f_λ s_λ(y) = sum_j j! S(k,j) e_j(y)",
        defaults: &[("max_k", 6), ("max_m", 5)],
        runner: p6_4,
    },
    Check {
        id: "P7.1",
        location: "cycle index determinant",
        description: "det M = (1/n!) sum (-1)^(kappa-1) prod tr(M^i)^(c_i), with the Newton sign as control",
        defaults: &[("trials", 50), ("max_size", 6), ("seed", 7)],
        runner: p7_1,
    },
];

fn t() -> MultiPoly {
    MultiPoly::var(Var::T)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::from_int(n)
}

fn choose2(p: &MultiPoly) -> MultiPoly {
    (p * &(p - &int(1))).scale(&rat(1, 2))
}

#[derive(Clone, Copy)]
enum Content {
    Sp,
    O,
}

impl Content {
    fn of(self, c: &Cell) -> i64 {
        match self {
            Content::Sp => c.sp_content,
            Content::O => c.o_content,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Content::Sp => "c_sp",
            Content::O => "c_O",
        }
    }
}

/// `sum x^n sum prod (shift + c^power)/h^power`.
fn content_series(order: usize, kind: Content, power: u32, shift: &MultiPoly) -> Result<TruncatedSeries> {
    partition_product_series(
        order,
        |_, c| {
            let num = shift + &int(kind.of(c).pow(power));
            RatFunc::new(num, int((c.hook as i64).pow(power)))
        },
        CellFilter::All,
    )
}

/// Exact `prod_u c(u)/h(u)` for one diagram.
fn content_ratio(lambda: &Partition, kind: Content) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for c in cell_stats(lambda) {
        num *= kind.of(&c);
        den *= c.hook;
    }
    Rational::new(num, den)
}

fn p6_1(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let mut nonzero = Vec::new();
    for n in 0..=max_n {
        p.tick()?;
        let (mut sp, mut o) = (Rational::zero(), Rational::zero());
        for l in partitions_of(n) {
            sp += content_ratio(&l, Content::Sp);
            o += content_ratio(&l, Content::O);
        }
        if sp != o {
            return Ok(Outcome::refuted(format!("n={n}: sum prod c_sp/h = {sp}, sum prod c_O/h = {o}"), ""));
        }
        if !sp.is_zero() {
            nonzero.push(format!("{n}:{sp}"));
        }
    }
    Ok(Outcome::verified(format!("nonzero common values {}", nonzero.join(", "))))
}

fn six_two(p: &Params, kind: Content, factors: Vec<EtaFactor>) -> Result<Outcome> {
    let order = p.usize("order")?;
    let lhs = content_series(order, kind, 1, &t())?;
    p.tick()?;
    let rhs = eta_product(&factors, order)?;
    let name = format!("sum prod (t+{})/h", kind.name());
    Ok(Outcome::from_failure(chain_witness(&[(&name, &lhs), ("eta product", &rhs)]), ""))
}

fn c6_2a(p: &Params) -> Result<Outcome> {
    let (a, b) = (choose2(&(&t() + &int(1))), choose2(&t()));
    let one = int(1);
    six_two(
        p,
        Content::Sp,
        vec![
            EtaFactor::new(8, 0, -&a),
            EtaFactor::new(8, 2, &a - &one),
            EtaFactor::new(4, 1, -&t()),
            EtaFactor::new(4, 3, t()),
            EtaFactor::new(8, 4, -&(&b - &one)),
            EtaFactor::new(8, 6, &b - &one),
        ],
    )
}

fn c6_2b(p: &Params) -> Result<Outcome> {
    let (a, b) = (choose2(&(&t() + &int(1))), choose2(&t()));
    let one = int(1);
    six_two(
        p,
        Content::O,
        vec![
            EtaFactor::new(8, 0, -&b),
            EtaFactor::new(8, 6, &b - &one),
            EtaFactor::new(4, 1, -&t()),
            EtaFactor::new(4, 3, t()),
            EtaFactor::new(8, 4, -&(&a - &one)),
            EtaFactor::new(8, 2, &a - &one),
        ],
    )
}

fn three_way(p: &Params, power: u32, shift: &MultiPoly, factors: &[EtaFactor]) -> Result<Outcome> {
    let order = p.usize("order")?;
    let sp = content_series(order, Content::Sp, power, shift)?;
    p.tick()?;
    let o = content_series(order, Content::O, power, shift)?;
    p.tick()?;
    let rhs = eta_product(factors, order)?;
    Ok(Outcome::from_failure(chain_witness(&[("c_sp side", &sp), ("c_O side", &o), ("eta product", &rhs)]), ""))
}

fn c6_2c(p: &Params) -> Result<Outcome> {
    three_way(p, 1, &MultiPoly::zero(), &[EtaFactor::int(4, 2, -1), EtaFactor::int(8, 4, 1)])
}

fn c6_3a(p: &Params) -> Result<Outcome> {
    three_way(p, 2, &t(), &[EtaFactor::int(4, 2, 1), EtaFactor::new(1, 0, t())])
}

fn c6_3b(p: &Params) -> Result<Outcome> {
    three_way(p, 2, &MultiPoly::zero(), &[EtaFactor::int(4, 2, 1)])
}

fn c6_3c(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    for n in 0..=max_n {
        p.tick()?;
        let (mut lhs, mut rhs) = (BigInt::zero(), BigInt::zero());
        for l in partitions_of(n) {
            let prod: BigInt = cell_stats(&l).iter().map(|c| BigInt::from(c.sp_content)).product();
            let f = dim_sytx(&l);
            lhs += &f * &f * &prod * &prod;
            rhs += f * prod;
        }
        if (n as u64 * n.saturating_sub(1) as u64 / 2) % 2 == 1 {
            lhs = -lhs;
        }
        rhs *= factorial(n);
        if lhs != rhs {
            return Ok(Outcome::refuted(
                format!("n={n}: delta_n sum f^2 prod c_sp^2 = {lhs}, n! sum f prod c_sp = {rhs}"),
                "",
            ));
        }
    }
    Ok(Outcome::verified(""))
}

fn p6_4(p: &Params) -> Result<Outcome> {
    let max_k = p.nonneg("max_k")?;
    let max_m = p.usize("max_m")?;
    for k in 0..=max_k {
        for m in 1..=max_m {
            p.tick()?;
            let c = problem_6_4_check(k, m)?;
            if !c.holds {
                return Ok(Outcome::refuted(format!("k={k}, m={m}: lhs = {}, rhs = {}", c.lhs, c.rhs), ""));
            }
        }
    }
    Ok(Outcome::verified(""))
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Identity matrices of every size up to `max_size`, then `trials` random
/// matrices with entries `a/b`, `|a| <= 9`, `1 <= b <= 5`.
pub fn random_matrices(trials: usize, max_size: usize, seed: u64) -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Matrix> = (1..=max_size).map(identity).collect();
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_size.max(1));
        out.push((0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect()).collect());
    }
    out
}

fn render(m: &Matrix) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn p7_1(p: &Params) -> Result<Outcome> {
    let trials = p.usize("trials")?;
    let max_size = p.usize("max_size")?;
    let seed = p.nonneg("seed")? as u64;
    let mats = random_matrices(trials, max_size, seed);
    let mut witness = None;
    let (mut equal, mut negated, mut alternating) = (0, 0, 0);
    for m in &mats {
        p.tick()?;
        let det = cofactor_determinant(m)?;
        let newton = cycle_index_determinant(m, SignConvention::Newton)?;
        if newton != det {
            return Ok(Outcome::refuted(
                format!("{}: Newton-sign sum = {newton}, cofactor det = {det}", render(m)),
                "Newton sign disagrees with the cofactor determinant",
            ));
        }
        let by_cycles = cycle_index_determinant(m, SignConvention::CycleCount)?;
        equal += usize::from(by_cycles == det);
        negated += usize::from(by_cycles == -det.clone());
        let sign = if m.len() % 2 == 0 { -Rational::one() } else { Rational::one() };
        alternating += usize::from(by_cycles == &sign * &det);
        if witness.is_none() && by_cycles != det {
            witness = Some(format!("{}: cycle-count sign sum = {by_cycles}, det = {det}", render(m)));
        }
    }
    let total = mats.len();
    let notes = format!(
        "{total} matrices; Newton sign matches the cofactor determinant on all; cycle-count sign equals det on {equal}, \
         -det on {negated}, (-1)^(n+1) det on {alternating}"
    );
    Ok(Outcome::from_failure(witness, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{run_check, Bounds, Status};

    #[test]
    fn c6_2c_second_coefficient() {
        let s = content_series(2, Content::Sp, 1, &MultiPoly::zero()).unwrap();
        assert_eq!(s.coeff(2), &RatFunc::from_int(-1));
        let e = eta_product(&[EtaFactor::int(4, 2, -1), EtaFactor::int(8, 4, 1)], 4).unwrap();
        assert_eq!(e.coeff(2), &RatFunc::from_int(-1));
        assert_eq!(e.coeff(4), &RatFunc::from_int(1));
    }

    #[test]
    fn matrices_are_seeded() {
        let a = random_matrices(10, 4, 1);
        assert_eq!(a, random_matrices(10, 4, 1));
        assert_eq!(a.len(), 14);
        assert_eq!(a[1], identity(2));
        assert!(a.iter().all(|m| (1..=4).contains(&m.len())));
    }

    #[test]
    fn cycle_count_sign_fails_at_the_two_by_two_identity() {
        let r = run_check("P7.1", &Bounds::new()).unwrap();
        assert_eq!(r.status, Status::Refuted);
        assert_eq!(r.witness.as_deref(), Some("[[1,0],[0,1]]: cycle-count sign sum = -1, det = 1"));
        assert!(r.notes.contains("(-1)^(n+1) det on 56"), "{}", r.notes);
    }

    #[test]
    fn finite_content_checks() {
        for id in ["P6.1", "C6.3c", "P6.4"] {
            let r = run_check(id, &Bounds::new()).unwrap();
            assert_eq!(r.status, Status::Verified, "{r:?}");
        }
    }
}
