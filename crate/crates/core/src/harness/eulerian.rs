//! Eulerian polynomials of types A and B and their q-analogue.

use num_bigint::BigInt;

use super::{Check, Outcome, Params};
use crate::arith::{binomial, factorial, gaussian_binomial, MultiPoly, Rational, Var};
use crate::error::{Error, Result};
use crate::perm::{eulerian_a, eulerian_b, eulerian_coeff, q_eulerian_table, stirling2};

const LOCATION: &str = "Eulerian polynomials";

pub(super) const CHECKS: &[Check] = &[
    Check {
        id: "L1.1",
        location: LOCATION,
        description: "binomial convolutions linking type A and type B Eulerian numbers",
        defaults: &[("max_n", 10)],
        runner: l1_1,
    },
    Check {
        id: "L1.2",
        location: LOCATION,
        description: "sum_k C(a+b,k) B_{k,b} = sum_k C(a+b,k) 2^k A_{k,a-1}",
        defaults: &[("max_sum", 10), ("convention", 2)],
        runner: l1_2,
    },
    Check {
        id: "L1.3",
        location: LOCATION,
        description: "A_k(t) = sum_j j! S(k,j) t^{j-1} (1-t)^{k-j}",
        defaults: &[("max_n", 10)],
        runner: l1_3,
    },
    Check {
        id: "L1.7",
        location: LOCATION,
        description: "q-Eulerian B_n(t,q) is a polynomial with B_{n,k}(q) = B_{n,n-k}(q) and B_n(t,1) = B_n(t)",
        defaults: &[("max_n", 6)],
        runner: l1_7,
    },
    Check {
        id: "C1.8",
        location: LOCATION,
        description: "symmetric Gaussian-binomial relation for q-Eulerian numbers",
        defaults: &[("max_alpha", 8), ("k_start", 1)],
        runner: c1_8,
    },
];

fn int(c: &BigInt) -> Rational {
    Rational::from_integer(c.clone())
}

fn l1_1(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    for n in 0..=max_n {
        p.tick()?;
        let a = eulerian_a(n);
        let b = eulerian_b(n);
        let n1 = n as i64 + 1;
        for k in 0..=n as i64 {
            let conv = |shift: i64| -> Rational {
                (0..=n as i64).map(|j| int(&binomial(n1, shift - j)) * eulerian_coeff(&a, j)).sum()
            };
            let lhs_a = int(&BigInt::from(2).pow(n)) * eulerian_coeff(&a, k);
            let rhs_a = conv(2 * k + 1);
            if lhs_a != rhs_a {
                return Ok(Outcome::refuted(format!("n={n}, k={k}: 2^n A_(n,k) = {lhs_a}, convolution = {rhs_a}"), ""));
            }
            let lhs_b = eulerian_coeff(&b, k);
            let rhs_b = conv(2 * k);
            if lhs_b != rhs_b {
                return Ok(Outcome::refuted(format!("n={n}, k={k}: B_(n,k) = {lhs_b}, convolution = {rhs_b}"), ""));
            }
        }
    }
    Ok(Outcome::verified(""))
}

/// Both sides of the intertwining sum with the B-side and A-side sums
/// starting at the given `k`.
fn l1_2_sides(
    a: u32,
    b: u32,
    b_from: u32,
    a_from: u32,
    tab_a: &[MultiPoly],
    tab_b: &[MultiPoly],
) -> (Rational, Rational) {
    let s = (a + b) as i64;
    let lhs =
        (b_from..=a + b).map(|k| int(&binomial(s, k as i64)) * eulerian_coeff(&tab_b[k as usize], b as i64)).sum();
    let rhs = (a_from..=a + b)
        .map(|k| {
            int(&(binomial(s, k as i64) * BigInt::from(2).pow(k))) * eulerian_coeff(&tab_a[k as usize], a as i64 - 1)
        })
        .sum();
    (lhs, rhs)
}

const CONVENTIONS: [(&str, u32, u32); 3] = [("k>=0", 0, 0), ("k>=1", 1, 1), ("mixed (B-side k>=0, A-side k>=1)", 0, 1)];

fn l1_2(p: &Params) -> Result<Outcome> {
    let max_sum = p.nonneg("max_sum")?;
    let conv = p.nonneg("convention")? as usize;
    if conv >= CONVENTIONS.len() {
        return Err(Error::InvalidArgument("convention must be 0 (k>=0), 1 (k>=1) or 2 (mixed)".into()));
    }
    let tab_a: Vec<MultiPoly> = (0..=max_sum).map(eulerian_a).collect();
    let tab_b: Vec<MultiPoly> = (0..=max_sum).map(eulerian_b).collect();
    let mut first_fail: Vec<Option<String>> = vec![None; CONVENTIONS.len()];
    for s in 1..=max_sum {
        p.tick()?;
        for a in 1..=s {
            let b = s - a;
            for (i, &(_, bf, af)) in CONVENTIONS.iter().enumerate() {
                if first_fail[i].is_none() {
                    let (l, r) = l1_2_sides(a, b, bf, af, &tab_a, &tab_b);
                    if l != r {
                        first_fail[i] = Some(format!("a={a}, b={b}: lhs = {l}, rhs = {r}"));
                    }
                }
            }
        }
    }
    let summary: Vec<String> = CONVENTIONS
        .iter()
        .zip(&first_fail)
        .map(|(&(name, _, _), f)| match f {
            None => format!("{name}: holds for 1 <= a, a+b <= {max_sum}"),
            Some(w) => format!("{name}: fails first at {w}"),
        })
        .collect();
    let notes = format!("convention {}; {}", CONVENTIONS[conv].0, summary.join("; "));
    Ok(Outcome::from_failure(first_fail[conv].clone(), notes))
}

fn l1_3(p: &Params) -> Result<Outcome> {
    let max_n = p.nonneg("max_n")?;
    let t = MultiPoly::var(Var::T);
    let one_minus_t = &MultiPoly::one() - &t;
    for k in 1..=max_n {
        p.tick()?;
        let rhs: MultiPoly = (1..=k)
            .map(|j| (&t.pow(j - 1) * &one_minus_t.pow(k - j)).scale(&int(&(factorial(j) * stirling2(k, j)))))
            .sum();
        let lhs = eulerian_a(k);
        if lhs != rhs {
            return Ok(Outcome::refuted(format!("k={k}: A_k = {lhs}, Stirling sum = {rhs}"), ""));
        }
    }
    Ok(Outcome::verified("k = 0 excluded: the Stirling sum is empty while A_0 = 1"))
}

fn l1_7(p: &Params) -> Result<Outcome> {
    let max_n = p.usize("max_n")?;
    let table = q_eulerian_table(max_n)?;
    let one = Rational::from_integer(1.into());
    for (n, bn) in table.iter().enumerate().skip(1) {
        p.tick()?;
        for k in 0..=n as u32 {
            let lo = bn.coeff_in(Var::T, k);
            let hi = bn.coeff_in(Var::T, n as u32 - k);
            if lo != hi {
                return Ok(Outcome::refuted(format!("n={n}, k={k}: B_(n,k)(q) = {lo}, B_(n,n-k)(q) = {hi}"), ""));
            }
        }
        let at_one = bn.eval_var(Var::Q, &one);
        let classical = eulerian_b(n as u32);
        if at_one != classical {
            return Ok(Outcome::refuted(format!("n={n}: B_n(t,1) = {at_one}, B_n(t) = {classical}"), ""));
        }
    }
    Ok(Outcome::verified(format!(
        "B_n(t,q) certified polynomial for 1 <= n <= {max_n}; B_{max_n}(t,q) has {} terms",
        table[max_n].terms().count()
    )))
}

/// One side of the Gaussian-binomial relation, `C(α,a)_q + sum_k C(α,k)_q 2^{α-k} B_{k,b}(q)`.
fn c1_8_side(
    alpha: u32,
    a: u32,
    b: u32,
    k_start: u32,
    coeff: &dyn Fn(usize, u32) -> MultiPoly,
    gb: &dyn Fn(u32, u32) -> MultiPoly,
) -> MultiPoly {
    let mut acc = gb(alpha, a);
    for k in k_start..=alpha {
        let c = coeff(k as usize, b);
        if c.is_zero() {
            continue;
        }
        acc += &(&gb(alpha, k) * &c).scale(&int(&BigInt::from(2).pow(alpha - k)));
    }
    acc
}

fn c1_8(p: &Params) -> Result<Outcome> {
    let max_alpha = p.nonneg("max_alpha")?;
    let k_start = p.nonneg("k_start")?;
    if k_start > 1 {
        return Err(Error::InvalidArgument("k_start must be 0 or 1".into()));
    }
    let table = q_eulerian_table(max_alpha as usize)?;
    let q_coeff = |k: usize, b: u32| table[k].coeff_in(Var::T, b);
    let gauss = |n: u32, k: u32| gaussian_binomial(n as i64, k as i64);

    // classical shadow at q = 1 with B_0 = 1
    let classical: Vec<MultiPoly> = (0..=max_alpha).map(eulerian_b).collect();
    let c_coeff = |k: usize, b: u32| classical[k].coeff_in(Var::T, b);
    let plain = |n: u32, k: u32| MultiPoly::from_bigint(binomial(n as i64, k as i64));

    let mut witness = None;
    let mut shadow = [None, None];
    for alpha in 1..=max_alpha {
        p.tick()?;
        for a in 0..alpha {
            let b = alpha - 1 - a;
            if witness.is_none() {
                let l = c1_8_side(alpha, a, b, k_start, &q_coeff, &gauss);
                let r = c1_8_side(alpha, b, a, k_start, &q_coeff, &gauss);
                if l != r {
                    witness = Some(format!("alpha={alpha}, a={a}, b={b}: lhs = {l}, rhs = {r}"));
                }
            }
            for (ks, slot) in shadow.iter_mut().enumerate() {
                if slot.is_none() {
                    let l = c1_8_side(alpha, a, b, ks as u32, &c_coeff, &plain);
                    let r = c1_8_side(alpha, b, a, ks as u32, &c_coeff, &plain);
                    if l != r {
                        *slot = Some(format!("alpha={alpha}, a={a}, b={b}"));
                    }
                }
            }
        }
    }
    let shadow_note = |ks: usize| match &shadow[ks] {
        None => format!("k>={ks} holds for alpha <= {max_alpha}"),
        Some(w) => format!("k>={ks} fails first at {w}"),
    };
    let notes = format!(
        "a, b >= 0; B_0(t,q) = 0 since the generating function starts at n = 1, so k>=0 and k>=1 give the same sums; \
         at q = 1 with classical B_0 = 1: {}; {}",
        shadow_note(0),
        shadow_note(1)
    );
    Ok(Outcome::from_failure(witness, notes))
}
