//! Eulerian polynomials of types A and B and the q-Eulerian polynomials of type B.

use num_bigint::BigInt;

use crate::arith::{q_factorial, MultiPoly, RatFunc, Rational, TruncatedSeries, Var};
use crate::error::Result;

/// `(1 - t)^{n+1} sum_{k=0}^{n} f(k)^n t^k`, truncated to degree `n`.
fn from_defining_sum(n: u32, base: impl Fn(u32) -> u32) -> MultiPoly {
    let t = Var::T;
    let sum = MultiPoly::from_univariate(
        t,
        &(0..=n).map(|k| Rational::from_integer(BigInt::from(base(k)).pow(n))).collect::<Vec<_>>(),
    );
    let one_minus_t = &MultiPoly::one() - &MultiPoly::var(t);
    (&one_minus_t.pow(n + 1) * &sum).truncate_in(t, n)
}

/// `A_n(t)` from `sum_k (k+1)^n t^k = A_n(t) / (1-t)^{n+1}`.
pub fn eulerian_a(n: u32) -> MultiPoly {
    from_defining_sum(n, |k| k + 1)
}

/// `B_n(t)` from `sum_k (2k+1)^n t^k = B_n(t) / (1-t)^{n+1}`.
pub fn eulerian_b(n: u32) -> MultiPoly {
    from_defining_sum(n, |k| 2 * k + 1)
}

/// Coefficient of `t^k` in a polynomial of `t` alone; zero for negative `k`.
pub fn eulerian_coeff(p: &MultiPoly, k: i64) -> Rational {
    if k < 0 {
        return Rational::from_integer(0.into());
    }
    p.coeff_in(Var::T, k as u32).constant_term()
}

/// `e(z; q) = sum_n z^n / (q;q)_n`.
pub fn q_exponential(order: usize) -> Result<TruncatedSeries> {
    q_exponential_scaled(&MultiPoly::one(), order)
}

/// `e(c z; q)` for a polynomial `c`.
pub fn q_exponential_scaled(c: &MultiPoly, order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(RatFunc::new(c.pow(n as u32), q_factorial(n))?);
    }
    Ok(TruncatedSeries::from_coeffs("z", order, coeffs))
}

/// `B_0(t,q), ..., B_max(t,q)` from the defining quotient of q-exponentials.
///
/// The quotient is computed over rational functions in `t, q`; each
/// coefficient times `(q;q)_n` must come out a polynomial, otherwise
/// [`crate::Error::NonPolynomialResult`] is returned. `B_0 = 0` since the
/// generating function has no constant term.
pub fn q_eulerian_table(max_n: usize) -> Result<Vec<MultiPoly>> {
    let t = MultiPoly::var(Var::T);
    let two = MultiPoly::from_int(2);
    let e = q_exponential(max_n)?;
    let et = q_exponential_scaled(&t, max_n)?;
    let e2 = q_exponential_scaled(&two, max_n)?;
    let e2t = q_exponential_scaled(&(&two * &t), max_n)?;
    let tr = RatFunc::from(&t);

    let num = e.sub(&et)?.mul(&et.add(&e.scale(&tr))?)?;
    let den = e2t.sub(&e2.scale(&tr))?;
    let quotient = num.div(&den)?;

    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        out.push((quotient.coeff(n) * &q_factorial(n)).into_polynomial()?);
    }
    Ok(out)
}

/// `B_n(t, q)`.
pub fn q_eulerian_b(n: usize) -> Result<MultiPoly> {
    Ok(q_eulerian_table(n)?.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, gaussian_binomial, rat};

    fn permutations(n: usize) -> Vec<Vec<i64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n as i64);
                out.push(q);
            }
        }
        out
    }

    fn descent_poly(counts: &[i64]) -> MultiPoly {
        MultiPoly::from_univariate(Var::T, &counts.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn type_a_matches_descents() {
        for n in 1..=7usize {
            let mut counts = vec![0i64; n + 1];
            for p in permutations(n) {
                counts[p.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
            }
            assert_eq!(eulerian_a(n as u32), descent_poly(&counts), "n={n}");
        }
    }

    #[test]
    fn type_b_matches_signed_descents() {
        // des_B counts i in 0..n with w(i) > w(i+1), where w(0) = 0
        for n in 1..=5usize {
            let mut counts = vec![0i64; n + 1];
            for p in permutations(n) {
                for signs in 0..(1u32 << n) {
                    let mut w = vec![0i64];
                    w.extend(p.iter().enumerate().map(|(i, &x)| if signs >> i & 1 == 1 { -x } else { x }));
                    counts[w.windows(2).filter(|v| v[0] > v[1]).count()] += 1;
                }
            }
            assert_eq!(eulerian_b(n as u32), descent_poly(&counts), "n={n}");
        }
    }

    #[test]
    fn examples_and_values_at_one() {
        assert_eq!(eulerian_a(3).to_string(), "1 + 4*t + t^2");
        assert_eq!(eulerian_b(2).to_string(), "1 + 6*t + t^2");
        assert!(eulerian_a(0).is_one());
        assert!(eulerian_b(0).is_one());
        for n in 0..=10u32 {
            let one = rat(1, 1);
            assert_eq!(eulerian_a(n).eval_var(Var::T, &one).constant_term(), Rational::from_integer(factorial(n)));
            let b1 = Rational::from_integer(factorial(n) * BigInt::from(2).pow(n));
            assert_eq!(eulerian_b(n).eval_var(Var::T, &one).constant_term(), b1);
            if n >= 1 {
                assert_eq!(eulerian_a(n).degree_in(Var::T), n - 1);
                assert_eq!(eulerian_b(n).degree_in(Var::T), n);
            }
        }
    }

    #[test]
    fn q_exponential_coefficients() {
        let e = q_exponential(2).unwrap();
        assert!(e.coeff(0).is_one());
        let one = MultiPoly::one();
        let q = MultiPoly::var(Var::Q);
        assert_eq!(e.coeff(1), &RatFunc::new(one.clone(), &one - &q).unwrap());
        let d2 = &(&one - &q) * &(&one - &q.pow(2));
        assert_eq!(e.coeff(2), &RatFunc::new(one, d2).unwrap());
    }

    /// Multiplying generating functions of the form `sum a_n z^n / (q;q)_n`
    /// convolves with Gaussian binomials; solving the defining relation in
    /// that basis gives an independent route to `B_n(t,q)`.
    fn q_eulerian_by_convolution(max_n: usize) -> Vec<MultiPoly> {
        let t = MultiPoly::var(Var::T);
        let one = MultiPoly::one();
        let gb = |n: usize, k: usize| gaussian_binomial(n as i64, k as i64);
        let d = |k: usize| {
            t.scale(&rat(2, 1)).pow(k as u32) - &t.scale(&Rational::from_integer(BigInt::from(2).pow(k as u32)))
        };
        let d0 = &one - &t;
        let mut b: Vec<MultiPoly> = Vec::new();
        for n in 0..=max_n {
            let mut acc = MultiPoly::zero();
            for k in 0..=n {
                let left = &one - &t.pow(k as u32);
                let right = &t.pow((n - k) as u32) + &t;
                acc += &(&gb(n, k) * &(&left * &right));
            }
            for k in 1..=n {
                acc -= &(&gb(n, k) * &(&d(k) * &b[n - k]));
            }
            b.push(acc.div_exact(&d0).expect("exact division by 1 - t"));
        }
        b
    }

    #[test]
    fn q_eulerian_matches_convolution_oracle() {
        let table = q_eulerian_table(5).unwrap();
        let oracle = q_eulerian_by_convolution(5);
        assert_eq!(table, oracle);
        assert!(table[0].is_zero());
        assert_eq!(table[1].to_string(), "1 + t");
        let one = rat(1, 1);
        for (n, b) in table.iter().enumerate().skip(1) {
            assert_eq!(b.eval_var(Var::Q, &one), eulerian_b(n as u32), "n={n}");
            assert_eq!(b.degree_in(Var::T), n as u32);
        }
        let b2 = q_eulerian_b(2).unwrap();
        let expected = MultiPoly::from_terms([
            (crate::arith::Monomial::ONE, rat(1, 1)),
            (crate::arith::Monomial::var(Var::T), rat(4, 1)),
            (crate::arith::Monomial::from_pairs(&[(Var::T, 1), (Var::Q, 1)]), rat(2, 1)),
            (crate::arith::Monomial::var_pow(Var::T, 2), rat(1, 1)),
        ]);
        assert_eq!(b2, expected);
    }
}
