//! Diagonal hooks, Rogers-Ramanujan sums and counting squares in diagrams.

use std::collections::BTreeSet;

use super::{chain_witness, Check, Outcome, Params};
use crate::arith::{q_coeff, rat, MultiPoly, RatFunc, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::identity::{
    equivalence_classes_d, eta_product, rr_partition_side, rr_q_series, squares_polynomial, squares_total, EtaFactor,
    RrKind,
};
use crate::partition::{
    diagonal_hooks, partition_counts, partitions_of, rr_sets, squares_by_diagonal_hooks, squares_by_min,
    squares_geometric, Partition,
};

const LOCATION: &str = "counting squares";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "RR9",
        location: LOCATION,
        description: "#A_n = #B_n and 1 + sum x^(k^2)/(x;x)_k = prod 1/((1-x^(5j-1))(1-x^(5j-4)))",
        defaults: &[("max_n", 25)],
        runner: rr9,
    },
    Check {
        id: "P9.1",
        location: LOCATION,
        description: "sum over A_n of q^h(1,1) = sum_k x^(k^2) q^(3k-2)/(qx;x)_k",
        defaults: &[("order", 12), ("q_order", 12)],
        runner: p9_1,
    },
    Check {
        id: "P9.2",
        location: LOCATION,
        description: "sum q^h(1,1) = sum_k x^(k(k+1)) q^(2k)/((qx;x)_k (qx;x)_(k+1)) = Gaussian binomial double sum",
        defaults: &[("order", 12), ("q_order", 12)],
        runner: p9_2,
    },
    Check {
        id: "L9.3",
        location: LOCATION,
        description: "λ -> diagonal hooks maps the partitions of n onto A_n",
        defaults: &[("max_n", 25)],
        runner: l9_3,
    },
    Check {
        id: "T9.5i",
        location: LOCATION,
        description: "a(λ) = N . h_λ = sum min(i,j) = direct square count",
        defaults: &[("max_n", 20)],
        runner: t9_5i,
    },
    Check {
        id: "T9.5ii",
        location: LOCATION,
        description: "F_n(1) = p(n) and F_n'(1) = f(n)",
        defaults: &[("max_n", 20)],
        runner: t9_5ii,
    },
    Check {
        id: "T9.5iii",
        location: LOCATION,
        description: "sum F_n(q) x^n = sum_k x^(k^2) q^(k(k+1)(2k+1)/6) / prod (1 - x^j q^(j(j+1)/2))^2",
        defaults: &[("order", 14)],
        runner: t9_5iii,
    },
    Check {
        id: "C9.7",
        location: LOCATION,
        description: "D_j(n), j >= n, partition the partitions of n and #D_j(n) = [q^j] F_n(q)",
        defaults: &[("max_n", 14)],
        runner: c9_7,
    },
];

fn q_order(p: &Params) -> Result<Option<u32>> {
    Ok(Some(p.nonneg("q_order")?))
}

fn at_q_one(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    let one = rat(1, 1);
    let polys = s.poly_coeffs()?.iter().map(|c| c.eval_var(Var::Q, &one)).collect();
    Ok(TruncatedSeries::from_polys(s.var(), s.order(), polys))
}

fn rr9(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let mut counts = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        p.tick()?;
        let sets = rr_sets(n);
        if sets.a.len() != sets.b.len() {
            return Ok(Outcome::refuted(format!("n={n}: #A_n = {}, #B_n = {}", sets.a.len(), sets.b.len()), ""));
        }
        counts.push(MultiPoly::from_int(sets.a.len() as i64));
    }
    let order = max_n as usize;
    let census = TruncatedSeries::from_polys("x", order, counts);
    let mut sum = at_q_one(&rr_q_series(RrKind::Prop91, order, None))?;
    sum.set_coeff(0, &sum.coeff(0).clone() + &RatFunc::one());
    let product = eta_product(&[EtaFactor::int(5, 1, 1), EtaFactor::int(5, 4, 1)], order)?;
    Ok(Outcome::from_failure(
        chain_witness(&[("#A_n", &census), ("sum x^(k^2)/(x;x)_k", &sum), ("product", &product)]),
        "",
    ))
}

fn p9_1(p: &Params) -> Result<Outcome> {
    let order = p.usize("order")?;
    let nq = q_order(p)?;
    let lhs = rr_partition_side(RrKind::Prop91, order, nq);
    p.tick()?;
    let rhs = rr_q_series(RrKind::Prop91, order, nq);
    Ok(Outcome::from_failure(chain_witness(&[("partition side", &lhs), ("q-sum", &rhs)]), ""))
}

fn p9_2(p: &Params) -> Result<Outcome> {
    let order = p.usize("order")?;
    let nq = q_order(p)?;
    let lhs = rr_partition_side(RrKind::Prop92Middle, order, nq);
    p.tick()?;
    let mid = rr_q_series(RrKind::Prop92Middle, order, nq);
    p.tick()?;
    let right = rr_q_series(RrKind::Prop92Right, order, nq);
    Ok(Outcome::from_failure(
        chain_witness(&[("partition side", &lhs), ("q-sum", &mid), ("Gaussian binomial sum", &right)]),
        "the empty partition contributes 1; the double sum is taken with 1 added at n=0",
    ))
}

fn l9_3(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    for n in 0..=max_n {
        p.tick()?;
        let mut image = BTreeSet::new();
        for l in partitions_of(n) {
            let h = diagonal_hooks(&l);
            if h.size() != n || !h.has_gap_two() {
                return Ok(Outcome::refuted(format!("n={n}: λ = {l} has diagonal hooks {h} outside A_n"), ""));
            }
            image.insert(h);
        }
        let a: BTreeSet<Partition> = rr_sets(n).a.into_iter().collect();
        if let Some(missed) = a.difference(&image).next() {
            return Ok(Outcome::refuted(format!("n={n}: {missed} in A_n is not a diagonal-hook vector"), ""));
        }
    }
    Ok(Outcome::verified(""))
}

fn t9_5i(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    for n in 0..=max_n {
        p.tick()?;
        for l in partitions_of(n) {
            let (g, m, d) = (squares_geometric(&l), squares_by_min(&l), squares_by_diagonal_hooks(&l));
            if g != m || m != d {
                return Ok(Outcome::refuted(format!("λ = {l}: squares = {g}, sum min(i,j) = {m}, N . h_λ = {d}"), ""));
            }
        }
    }
    Ok(Outcome::verified(""))
}

fn t9_5ii(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let pc = partition_counts(max_n as usize);
    let one = rat(1, 1);
    for n in 0..=max_n {
        p.tick()?;
        let f = squares_polynomial(n);
        let at_one = f.eval_var(Var::Q, &one).constant_term();
        let slope = f.derivative(Var::Q).eval_var(Var::Q, &one).constant_term();
        let total = Rational::from_integer(squares_total(n).into());
        if at_one != Rational::from_integer(pc[n as usize].into()) || slope != total {
            return Ok(Outcome::refuted(
                format!("n={n}: F_n(1) = {at_one}, p(n) = {}, F_n'(1) = {slope}, f(n) = {total}", pc[n as usize]),
                "",
            ));
        }
    }
    let head: Vec<String> = (1..=max_n.min(10)).map(|n| squares_total(n).to_string()).collect();
    Ok(Outcome::verified(format!("f(1..) = {}", head.join(","))))
}

fn t9_5iii(p: &Params) -> Result<Outcome> {
    let order = p.usize("order")?;
    let lhs = rr_partition_side(RrKind::Thm95, order, None);
    p.tick()?;
    let rhs = rr_q_series(RrKind::Thm95, order, None);
    Ok(Outcome::from_failure(chain_witness(&[("sum F_n(q) x^n", &lhs), ("q-sum", &rhs)]), ""))
}

fn c9_7(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let pc = partition_counts(max_n as usize);
    for n in 0..=max_n {
        p.tick()?;
        let classes = equivalence_classes_d(n);
        let total: usize = classes.values().map(Vec::len).sum();
        if total as u64 != pc[n as usize] {
            return Ok(Outcome::refuted(
                format!("n={n}: classes hold {total} partitions, p(n) = {}", pc[n as usize]),
                "",
            ));
        }
        if let Some(&j) = classes.keys().find(|&&j| j < n as u64) {
            return Ok(Outcome::refuted(format!("n={n}: nonempty D_{j}(n) below j = n"), ""));
        }
        let f = squares_polynomial(n);
        for (&j, members) in &classes {
            let c = q_coeff(&f, j as u32);
            if c != Rational::from_integer((members.len() as i64).into()) {
                return Ok(Outcome::refuted(format!("n={n}, j={j}: #D_j(n) = {}, [q^j] F_n = {c}", members.len()), ""));
            }
        }
        let support = f.terms().count();
        if support != classes.len() {
            return Ok(Outcome::refuted(format!("n={n}: F_n has {support} terms, {} classes", classes.len()), ""));
        }
    }
    Ok(Outcome::verified("parts (i) and (ii) checked; part (iii) is not checked"))
}
