//! The fixed global variable set and exponent vectors over it.
//!
//! Every polynomial in the crate lives over the same ordered list of
//! variables `t, q, v, a, b, z, y1, ..., y8`. Lexicographic order over this
//! list (with `t` most significant) is the monomial order used for leading
//! terms and rational-function normalization.

use std::fmt;

/// Number of named scalar variables (`t q v a b z`).
pub const NAMED_VARS: usize = 6;
/// Size of the `y1 ... ym` block used by the symmetric-function code.
pub const Y_BLOCK: usize = 8;
/// Total number of variables.
pub const NVARS: usize = NAMED_VARS + Y_BLOCK;

const NAMES: [&str; NAMED_VARS] = ["t", "q", "v", "a", "b", "z"];

/// A variable of the global set, identified by its position in the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub const T: Var = Var(0);
    pub const Q: Var = Var(1);
    pub const V: Var = Var(2);
    pub const A: Var = Var(3);
    pub const B: Var = Var(4);
    pub const Z: Var = Var(5);

    /// The symmetric-function variable `y_i`, 1-based.
    ///
    /// Panics if `i` is 0 or larger than [`Y_BLOCK`].
    pub fn y(i: usize) -> Var {
        assert!((1..=Y_BLOCK).contains(&i), "y index {i} outside 1..={Y_BLOCK}");
        Var((NAMED_VARS + i - 1) as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Var {
        assert!(i < NVARS);
        Var(i as u8)
    }

    pub fn is_y(self) -> bool {
        self.index() >= NAMED_VARS
    }

    pub fn name(self) -> String {
        let i = self.index();
        if i < NAMED_VARS {
            NAMES[i].to_string()
        } else {
            format!("y{}", i - NAMED_VARS + 1)
        }
    }

    /// Looks a variable up by its rendered name.
    pub fn parse(name: &str) -> Option<Var> {
        if let Some(i) = NAMES.iter().position(|n| *n == name) {
            return Some(Var(i as u8));
        }
        let idx: usize = name.strip_prefix('y')?.parse().ok()?;
        (1..=Y_BLOCK).contains(&idx).then(|| Var::y(idx))
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS).map(Var::from_index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Exponent vector over the global variable set.
///
/// The derived `Ord` is lexicographic with `t` most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    pub fn set_exp(&mut self, v: Var, e: u32) {
        self.0[v.index()] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = *self;
        for e in out.0.iter_mut() {
            *e *= k;
        }
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for (o, e) in out.0.iter_mut().zip(self.0.iter()) {
            *o -= e;
        }
        out
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| Var::from_index(i))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.exp(v) {
                1 => write!(f, "{v}")?,
                e => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}
