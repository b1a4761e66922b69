//! Involution trace moments, Bell polynomials and the hook moment identity.

use num_bigint::BigInt;

use super::{Check, Outcome, Params};
use crate::arith::{factorial, rat, MultiPoly, Rational, TruncatedSeries, Var};
use crate::error::Result;
use crate::identity::corollary_5_2;
use crate::perm::{
    bell_poly, cycle_types, eulerian_b, involution_count, involution_trace_moment, stirling2, CycleType,
};

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "C4.1",
        location: "involution traces",
        description: "sum_n z^n/n! sum_(π in Inv) tr(π)^k = B̂_k(z) e^(z + z^2/2)",
        defaults: &[("max_n", 14), ("max_k", 5)],
        runner: c4_1,
    },
    Check {
        id: "C4.2",
        location: "involution traces",
        description: "odd-cycle permutations weighted by 2^kappa B̂_kappa(z) have egf e^(2zx/(1-x))",
        defaults: &[("max_n", 12)],
        runner: c4_2,
    },
    Check {
        id: "C4.3",
        location: "involution traces",
        description: "Stirling expansion of trace moments and the (2z)^kappa prod j^(c_j) form",
        defaults: &[("max_n", 12), ("max_k", 5)],
        runner: c4_3,
    },
    Check {
        id: "R4",
        location: "involution traces",
        description: "z = 1 specialization over odd-part partitions against 2^L/prod m_i!",
        defaults: &[("max_n", 12)],
        runner: r4,
    },
    Check {
        id: "C5.2",
        location: "hook moments",
        description: "(1/n!) sum f_λ^2 sum_u prod_(j<r) (h_u^2 - j^2) in closed binomial form",
        defaults: &[("max_n", 10), ("max_r", 4)],
        runner: c5_2,
    },
];

fn int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `exp(z + z^2/2)` coefficients.
fn involution_egf(order: usize) -> Result<Vec<Rational>> {
    let mut inner = vec![MultiPoly::zero(); order + 1];
    if order >= 1 {
        inner[1] = MultiPoly::one();
    }
    if order >= 2 {
        inner[2] = MultiPoly::constant(rat(1, 2));
    }
    Ok(TruncatedSeries::from_polys("z", order, inner)
        .exp()?
        .poly_coeffs()?
        .iter()
        .map(MultiPoly::constant_term)
        .collect())
}

fn c4_1(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let max_k = p.nonneg("max_k")?;
    let e = involution_egf(max_n as usize)?;
    for n in 0..=max_n {
        p.tick()?;
        for k in 0..=max_k {
            let coeff: Rational = (0..=k.min(n)).map(|j| int(&stirling2(k, j)) * &e[(n - j) as usize]).sum();
            let lhs = coeff * int(&factorial(n));
            let rhs = int(&involution_trace_moment(n, k));
            if lhs != rhs {
                return Ok(Outcome::refuted(
                    format!("n={n}, k={k}: n! [z^n] B̂_k(z) e^(z+z^2/2) = {lhs}, sum tr^k = {rhs}"),
                    "",
                ));
            }
        }
    }
    Ok(Outcome::verified(format!("e.g. n=3, k=1 gives {}", involution_trace_moment(3, 1))))
}

fn odd_only(c: &CycleType) -> bool {
    c.even_cycles() == 0
}

fn two_pow(k: u32) -> Rational {
    int(&BigInt::from(2).pow(k))
}

/// `sum_(odd-cycle π in S_n) 2^kappa B(kappa)` for a polynomial family `B`.
fn odd_cycle_sum(n: u32, b: &dyn Fn(u32) -> MultiPoly) -> MultiPoly {
    cycle_types(n).filter(odd_only).map(|c| b(c.cycles()).scale(&(int(c.class_size()) * two_pow(c.cycles())))).sum()
}

fn c4_2(p: &Params) -> Result<Outcome> {
    let max_n = p.usize("max_n")?;
    let z = MultiPoly::var(Var::Z);
    let mut inner = vec![z.scale(&rat(2, 1)); max_n + 1];
    inner[0] = MultiPoly::zero();
    let exp = TruncatedSeries::from_polys("x", max_n, inner).exp()?.poly_coeffs()?;
    for n in 0..=max_n as u32 {
        p.tick()?;
        let lhs = odd_cycle_sum(n, &bell_poly);
        let rhs = exp[n as usize].scale(&int(&factorial(n)));
        if lhs != rhs {
            return Ok(Outcome::refuted(format!("n={n}: cycle sum = {lhs}, n! [x^n] e^(2zx/(1-x)) = {rhs}"), ""));
        }
    }
    Ok(Outcome::verified(""))
}

fn eulerian_b_in_z(k: u32) -> MultiPoly {
    eulerian_b(k).substitute(Var::T, &MultiPoly::var(Var::Z))
}

fn c4_3(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let max_k = p.nonneg("max_k")?;
    let inv_ratio = |m: u32| Rational::new(involution_count(m), factorial(m));
    for n in 0..=max_n {
        p.tick()?;
        for k in 0..=max_k {
            let lhs = Rational::new(involution_trace_moment(n, k), factorial(n));
            let rhs: Rational = (0..=k.min(n)).map(|j| int(&stirling2(k, j)) * inv_ratio(n - j)).sum();
            if lhs != rhs {
                return Ok(Outcome::refuted(format!("first form, n={n}, k={k}: lhs = {lhs}, rhs = {rhs}"), ""));
            }
        }
    }
    let z2 = MultiPoly::var(Var::Z).scale(&rat(2, 1));
    let weighted = |n: u32| -> MultiPoly {
        cycle_types(n)
            .map(|c| {
                let prod: BigInt = c.multiplicities().iter().map(|(&j, &m)| BigInt::from(j).pow(m)).product();
                z2.pow(c.cycles()).scale(&int(&(c.class_size() * prod)))
            })
            .sum()
    };
    let mut eulerian_fail = None;
    for n in 0..=max_n {
        p.tick()?;
        let rhs = weighted(n);
        let lhs = odd_cycle_sum(n, &bell_poly);
        if lhs != rhs {
            return Ok(Outcome::refuted(format!("second form, n={n}: lhs = {lhs}, rhs = {rhs}"), ""));
        }
        if eulerian_fail.is_none() && odd_cycle_sum(n, &eulerian_b_in_z) != rhs {
            eulerian_fail = Some(n);
        }
    }
    let notes = format!(
        "B in the second form read as the Bell polynomial B̂; reading it as the type B Eulerian polynomial {}",
        match eulerian_fail {
            Some(n) => format!("fails first at n={n}"),
            None => format!("also holds for n <= {max_n}"),
        }
    );
    Ok(Outcome::verified(notes))
}

fn r4(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let one = rat(1, 1);
    let bell_at_one = |l: u32| bell_poly(l).eval_var(Var::Z, &one).constant_term();
    let eulerian_at_one = |l: u32| eulerian_b(l).eval_var(Var::T, &one).constant_term();
    let mut eulerian_fail = None;
    for n in 0..=max_n {
        p.tick()?;
        let mut lhs = rat(0, 1);
        let mut alt = rat(0, 1);
        let mut rhs = rat(0, 1);
        for c in cycle_types(n) {
            let l = c.cycles();
            let mult_fact: BigInt = c.multiplicities().values().map(|&m| factorial(m)).product();
            rhs += two_pow(l) / int(&mult_fact);
            if odd_only(&c) {
                let den: BigInt =
                    c.multiplicities().iter().map(|(&j, &m)| BigInt::from(j).pow(m) * factorial(m)).product();
                lhs += two_pow(l) * bell_at_one(l) / int(&den);
                alt += two_pow(l) * eulerian_at_one(l) / int(&den);
            }
        }
        if lhs != rhs {
            return Ok(Outcome::refuted(format!("n={n}: odd-part side = {lhs}, 2^L/prod m_i! side = {rhs}"), ""));
        }
        if eulerian_fail.is_none() && alt != rhs {
            eulerian_fail = Some(format!("n={n} ({alt} vs {rhs})"));
        }
    }
    let notes = format!(
        "B_L read as the Bell number B̂_L(1); reading it as the type B Eulerian value B_L(1) = 2^L L! {}",
        match eulerian_fail {
            Some(w) => format!("fails first at {w}"),
            None => format!("also holds for n <= {max_n}"),
        }
    );
    Ok(Outcome::verified(notes))
}

fn c5_2(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let max_r = p.nonneg("max_r")?;
    for n in 1..=max_n {
        p.tick()?;
        for r in 1..=max_r {
            let c = corollary_5_2(n, r);
            if c.lhs != c.rhs {
                return Ok(Outcome::refuted(format!("n={n}, r={r}: lhs = {}, rhs = {}", c.lhs, c.rhs), ""));
            }
        }
    }
    Ok(Outcome::verified(""))
}
