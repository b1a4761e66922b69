//! Cycle-statistic generating functions and their hook/content counterparts.

use num_bigint::BigInt;

use super::{chain_witness, Check, Outcome, Params};
use crate::arith::{
    binomial_series, factorial, rat, MultiPoly, RatFunc, Rational, SeriesMonomial, TruncatedSeries, Var,
};
use crate::error::Result;
use crate::identity::{partition_product_series, CellFilter};
use crate::partition::{dim_sytx, partitions_of};
use crate::perm::{egf_cycle_statistic, involution_count};

const LOCATION: &str = "cycle statistics";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "L3.1",
        location: LOCATION,
        description: "(1-x)^(-t) (1-x^2)^(-(q-t)/2) = egf of t^O q^E",
        defaults: &[("order", 10)],
        runner: l3_1,
    },
    Check {
        id: "X3.2",
        location: LOCATION,
        description: "sum prod (t+c)(v+c)/h^2 = (1-x)^(-tv) = egf of (tv)^kappa",
        defaults: &[("order", 10)],
        runner: x3_2,
    },
    Check {
        id: "X3.3",
        location: LOCATION,
        description: "sum prod (t+c)/h = (1-x)^(-t) (1-x^2)^(-C(t,2)) = egf of t^(O+2E)",
        defaults: &[("order", 10)],
        runner: x3_3,
    },
    Check {
        id: "X3.4",
        location: LOCATION,
        description: "sum prod (t+c)/h^2 = t^n/n!",
        defaults: &[("max_n", 14)],
        runner: x3_4,
    },
    Check {
        id: "X3.5",
        location: LOCATION,
        description: "egf of a^O b^kappa = (egf of a^O)^b",
        defaults: &[("order", 10)],
        runner: x3_5,
    },
    Check {
        id: "X3.6",
        location: LOCATION,
        description: "hook product with ((1+a)^h+(1-a)^h)/((1+a)^h-(1-a)^h) a/h = e^(y + a^2 y^2/2)",
        defaults: &[("max_n", 10)],
        runner: x3_6,
    },
    Check { id: "X3.7", location: LOCATION, description: "sum f_λ^2 = n!", defaults: &[("max_n", 14)], runner: x3_7 },
    Check {
        id: "X3.8",
        location: LOCATION,
        description: "sum f_λ = #Inv(S_n) = n! [y^n] e^(y + y^2/2)",
        defaults: &[("max_n", 14)],
        runner: x3_8,
    },
];

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn int(n: i64) -> MultiPoly {
    MultiPoly::from_int(n)
}

fn x_pow(k: usize) -> SeriesMonomial {
    SeriesMonomial::x_pow(k)
}

fn l3_1(p: &Params) -> Result<Outcome> {
    let n = p.usize("order")?;
    let (t, q) = (var(Var::T), var(Var::Q));
    let egf = egf_cycle_statistic("x", n, |c| Ok(RatFunc::from(&t.pow(c.odd_cycles()) * &q.pow(c.even_cycles()))))?;
    let half = (&q - &t).scale(&rat(1, 2));
    let closed = binomial_series("x", &t, &x_pow(1), n)?.mul(&binomial_series("x", &half, &x_pow(2), n)?)?;
    Ok(Outcome::from_failure(chain_witness(&[("binomial product", &closed), ("egf", &egf)]), ""))
}

fn x3_2(p: &Params) -> Result<Outcome> {
    let n = p.usize("order")?;
    let (t, v) = (var(Var::T), var(Var::V));
    let tv = &t * &v;
    let lhs = partition_product_series(
        n,
        |_, c| {
            let cc = int(c.content);
            RatFunc::new(&(&t + &cc) * &(&v + &cc), int((c.hook * c.hook) as i64))
        },
        CellFilter::All,
    )?;
    p.tick()?;
    let mid = binomial_series("x", &tv, &x_pow(1), n)?;
    let egf = egf_cycle_statistic("x", n, |c| Ok(RatFunc::from(tv.pow(c.cycles()))))?;
    Ok(Outcome::from_failure(chain_witness(&[("content product", &lhs), ("(1-x)^(-tv)", &mid), ("egf", &egf)]), ""))
}

fn x3_3(p: &Params) -> Result<Outcome> {
    let n = p.usize("order")?;
    let t = var(Var::T);
    let lhs =
        partition_product_series(n, |_, c| RatFunc::new(&t + &int(c.content), int(c.hook as i64)), CellFilter::All)?;
    p.tick()?;
    let choose2 = (&t * &(&t - &int(1))).scale(&rat(1, 2));
    let mid = binomial_series("x", &t, &x_pow(1), n)?.mul(&binomial_series("x", &choose2, &x_pow(2), n)?)?;
    let egf = egf_cycle_statistic("x", n, |c| Ok(RatFunc::from(t.pow(c.odd_cycles() + 2 * c.even_cycles()))))?;
    Ok(Outcome::from_failure(
        chain_witness(&[("content product", &lhs), ("binomial product", &mid), ("egf", &egf)]),
        "",
    ))
}

fn x3_4(p: &Params) -> Result<Outcome> {
    let n = p.usize("max_n")?;
    let t = var(Var::T);
    let lhs = partition_product_series(
        n,
        |_, c| RatFunc::new(&t + &int(c.content), int((c.hook * c.hook) as i64)),
        CellFilter::All,
    )?;
    p.tick()?;
    let exp = TruncatedSeries::monomial("x", n, RatFunc::from(t.clone()), 1).exp()?;
    let egf = egf_cycle_statistic("x", n, |c| {
        Ok(if c.trace() == c.n() { RatFunc::from(t.pow(c.trace())) } else { RatFunc::zero() })
    })?;
    Ok(Outcome::from_failure(
        chain_witness(&[("content product", &lhs), ("e^(tx)", &exp), ("egf over the identity", &egf)]),
        "",
    ))
}

fn x3_5(p: &Params) -> Result<Outcome> {
    let n = p.usize("order")?;
    let (a, b) = (var(Var::A), var(Var::B));
    let lhs = egf_cycle_statistic("x", n, |c| Ok(RatFunc::from(&a.pow(c.odd_cycles()) * &b.pow(c.cycles()))))?;
    let base = egf_cycle_statistic("x", n, |c| Ok(RatFunc::from(a.pow(c.odd_cycles()))))?;
    let rhs = base.log()?.scale(&RatFunc::from(b)).exp()?;
    Ok(Outcome::from_failure(chain_witness(&[("egf of a^O b^kappa", &lhs), ("(egf of a^O)^b", &rhs)]), ""))
}

fn x3_6(p: &Params) -> Result<Outcome> {
    let n = p.usize("max_n")?;
    let a = var(Var::A);
    let one = MultiPoly::one();
    let lhs = partition_product_series(
        n,
        |_, c| {
            let plus = (&one + &a).pow(c.hook);
            let minus = (&one - &a).pow(c.hook);
            RatFunc::new(&(&plus + &minus) * &a, (&plus - &minus).scale(&rat(c.hook as i64, 1)))
        },
        CellFilter::All,
    )?;
    p.tick()?;
    let inner = TruncatedSeries::from_polys("x", n, {
        let mut c = vec![MultiPoly::zero(); n + 1];
        if n >= 1 {
            c[1] = one.clone();
        }
        if n >= 2 {
            c[2] = (&a * &a).scale(&rat(1, 2));
        }
        c
    });
    let exp = inner.exp()?;
    let egf = egf_cycle_statistic("x", n, |c| {
        Ok(if c.is_involution() { RatFunc::from(a.pow(2 * c.cycles_of_length(2))) } else { RatFunc::zero() })
    })?;
    let polynomial = lhs.coeffs().iter().all(RatFunc::is_polynomial);
    let notes = if polynomial {
        "each hook-product coefficient reduces to a polynomial in a"
    } else {
        "some hook-product coefficient is not a polynomial in a"
    };
    Ok(Outcome::from_failure(
        chain_witness(&[("hook product", &lhs), ("e^(y + a^2 y^2/2)", &exp), ("egf over involutions", &egf)]),
        notes,
    ))
}

fn x3_7(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    for n in 0..=max_n {
        p.tick()?;
        let s: BigInt = partitions_of(n).map(|l| dim_sytx(&l).pow(2)).sum();
        if s != factorial(n) {
            return Ok(Outcome::refuted(format!("n={n}: sum f^2 = {s}, n! = {}", factorial(n)), ""));
        }
    }
    Ok(Outcome::verified(""))
}

fn x3_8(p: &Params) -> Result<Outcome> {
    let max_n = p.usize("max_n")?;
    let mut inner = vec![MultiPoly::zero(); max_n + 1];
    if max_n >= 1 {
        inner[1] = MultiPoly::one();
    }
    if max_n >= 2 {
        inner[2] = MultiPoly::constant(rat(1, 2));
    }
    let exp = TruncatedSeries::from_polys("x", max_n, inner).exp()?.poly_coeffs()?;
    for n in 0..=max_n as u32 {
        p.tick()?;
        let s: BigInt = partitions_of(n).map(|l| dim_sytx(&l)).sum();
        let inv = involution_count(n);
        let series = exp[n as usize].constant_term() * Rational::from_integer(factorial(n));
        if s != inv || Rational::from_integer(inv.clone()) != series {
            return Ok(Outcome::refuted(
                format!("n={n}: sum f = {s}, #Inv = {inv}, n! [y^n] e^(y+y^2/2) = {series}"),
                "",
            ));
        }
    }
    Ok(Outcome::verified(""))
}

#[cfg(test)]
mod tests {
    use crate::harness::{run_check, Bounds, Status};

    #[test]
    fn small_orders_verify() {
        for id in ["L3.1", "X3.2", "X3.3", "X3.5"] {
            let r = run_check(id, &[("order".to_string(), 5)].into()).unwrap();
            assert_eq!(r.status, Status::Verified, "{r:?}");
        }
        for id in ["X3.4", "X3.6", "X3.7", "X3.8"] {
            let r = run_check(id, &[("max_n".to_string(), 6)].into()).unwrap();
            assert_eq!(r.status, Status::Verified, "{r:?}");
        }
        let r = run_check("X3.7", &Bounds::new()).unwrap();
        assert_eq!(r.status, Status::Verified);
    }
}
