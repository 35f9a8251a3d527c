//! Exact non-negative integer arithmetic.
//!
//! Every intermediate quantity of the search (`s*x*y*z`, `2p^2`,
//! `64(x+y)^3`, ...) lives in a [`Nat`]. Operations that would leave the
//! 128-bit range return [`Error::Overflow`] instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};

/// A non-negative integer with checked arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(pub u128);

impl Nat {
    pub const ZERO: Nat = Nat(0);
    pub const ONE: Nat = Nat(1);
    pub const MAX: Nat = Nat(u128::MAX);

    pub const fn new(value: u128) -> Self {
        Nat(value)
    }

    pub const fn get(self) -> u128 {
        self.0
    }

    pub fn try_add(self, rhs: Nat) -> Result<Nat> {
        self.0
            .checked_add(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow("add"))
    }

    pub fn try_sub(self, rhs: Nat) -> Result<Nat> {
        self.0
            .checked_sub(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow("sub"))
    }

    pub fn try_mul(self, rhs: Nat) -> Result<Nat> {
        self.0
            .checked_mul(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow("mul"))
    }

    pub fn try_pow(self, exp: u32) -> Result<Nat> {
        self.0
            .checked_pow(exp)
            .map(Nat)
            .ok_or(Error::Overflow("pow"))
    }

    /// Product of all factors, failing on the first overflow.
    pub fn try_product<I: IntoIterator<Item = Nat>>(factors: I) -> Result<Nat> {
        factors.into_iter().try_fold(Nat::ONE, Nat::try_mul)
    }

    pub fn divides(self, n: Nat) -> bool {
        match self.0 {
            0 => n.0 == 0,
            d => n.0.is_multiple_of(d),
        }
    }

    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    /// Narrow to `u64`, failing if the value does not fit.
    pub fn to_u64(self) -> Result<u64> {
        u64::try_from(self.0).map_err(|_| Error::Overflow("narrowing to u64"))
    }
}

impl From<u64> for Nat {
    fn from(v: u64) -> Self {
        Nat(u128::from(v))
    }
}

impl From<u32> for Nat {
    fn from(v: u32) -> Self {
        Nat(u128::from(v))
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Floor square root: the unique `r` with `r^2 <= n < (r+1)^2`.
pub fn isqrt(n: Nat) -> Nat {
    Nat(isqrt_u128(n.0))
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    if n < 1 << 52 {
        // f64 is exact on these inputs; the fixup loops still settle the
        // floor with integer comparisons only.
        let mut r = (n as f64).sqrt() as u128;
        while r * r > n {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        return r;
    }
    // Newton from above: x0 = 2^ceil(bits/2) >= sqrt(n), then decreasing.
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

const fn residue_table<const M: usize>() -> [bool; M] {
    let mut table = [false; M];
    let mut i = 0;
    while i < M {
        table[(i * i) % M] = true;
        i += 1;
    }
    table
}

static SQUARES_MOD_64: [bool; 64] = residue_table::<64>();
static SQUARES_MOD_63: [bool; 63] = residue_table::<63>();
static SQUARES_MOD_65: [bool; 65] = residue_table::<65>();
static SQUARES_MOD_11: [bool; 11] = residue_table::<11>();

/// Returns the square root of `n` when `n` is a perfect square.
pub fn perfect_square_root(n: Nat) -> Option<Nat> {
    let v = n.0;
    if !SQUARES_MOD_64[(v % 64) as usize]
        || !SQUARES_MOD_63[(v % 63) as usize]
        || !SQUARES_MOD_65[(v % 65) as usize]
        || !SQUARES_MOD_11[(v % 11) as usize]
    {
        return None;
    }
    let r = isqrt_u128(v);
    (r * r == v).then_some(Nat(r))
}

pub fn is_perfect_square(n: Nat) -> bool {
    perfect_square_root(n).is_some()
}

/// All positive divisors of `n` in increasing order, by trial division up to `sqrt(n)`.
pub fn divisors(n: Nat) -> Result<Vec<Nat>> {
    if n.0 == 0 {
        return Err(Error::ZeroDivisors);
    }
    let n = n.0;
    let root = isqrt_u128(n);
    let mut small = Vec::new();
    let mut large = Vec::new();
    for d in 1..=root {
        if n.is_multiple_of(d) {
            small.push(Nat(d));
            let co = n / d;
            if co != d {
                large.push(Nat(co));
            }
        }
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Prime factors of `n` with multiplicity, ascending. `prime_factors(1)` is empty.
pub fn prime_factors(n: Nat) -> Result<Vec<Nat>> {
    if n.0 == 0 {
        return Err(Error::ZeroDivisors);
    }
    let mut n = n.0;
    let mut factors = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        while n.is_multiple_of(p) {
            factors.push(Nat(p));
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push(Nat(n));
    }
    Ok(factors)
}
