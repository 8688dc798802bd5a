//! Integer identities around the Fibonacci polyominoes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::binomial;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::words::{for_each_word, generalized_fibonacci};

/// Ordinary Fibonacci number `F_n` (`F_0 = 0`, `F_1 = 1`), zero for `n < 0`.
pub fn fib(n: i64) -> BigInt {
    generalized_fibonacci(n, 2).expect("k = 2 is valid").into()
}

/// Total area over all Fibonacci polyominoes of length `n`:
/// `(6n·F_{n+2} + (n+2)·F_n) / 5`.
pub fn total_area_closed(n: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Parameter(format!("length must be ≥ 1, got {n}")));
    }
    let m = n as i64;
    let raw = BigInt::from(6 * m) * fib(m + 2) + BigInt::from(m + 2) * fib(m);
    let (q, r) = raw.div_rem(&BigInt::from(5));
    if !r.is_zero() {
        return Err(Error::Invariant(format!(
            "total area numerator {raw} is not divisible by 5"
        )));
    }
    Ok(q)
}

/// Total area as the binomial sum `Σ_i (n+i)·C(n+1−i, i)`.
pub fn total_area_binomial(n: usize) -> BigInt {
    let n = n as i64;
    (0..=(n + 1) / 2)
        .map(|i| binomial(n + 1 - i, i) * (n + i))
        .sum()
}

/// `c(n) = Σ_{i=0}^{n} F_i·F_{n−i}`, checked against `((n−1)F_n + 2n·F_{n−1}) / 5`.
pub fn fib_convolution(n: usize) -> Result<BigInt> {
    let m = n as i64;
    let direct: BigInt = (0..=m).map(|i| fib(i) * fib(m - i)).sum();
    let raw = BigInt::from(m - 1) * fib(m) + BigInt::from(2 * m) * fib(m - 1);
    let (q, r) = raw.div_rem(&BigInt::from(5));
    if !r.is_zero() || q != direct {
        return Err(Error::Invariant(format!(
            "convolution c({n}) = {direct} disagrees with the closed form {raw}/5"
        )));
    }
    Ok(direct)
}

/// Narayana's cows `b_n = b_{n−1} + b_{n−3}` with `b_0 = b_1 = b_2 = 1`, the
/// coefficients of `1/(1 − x − x³)`, checked against `Σ_i C(n−2i, i)`.
pub fn narayana(n: usize) -> Result<BigInt> {
    let mut b: Vec<BigInt> = vec![1.into(), 1.into(), 1.into()];
    for j in 3..=n {
        let next = &b[j - 1] + &b[j - 3];
        b.push(next);
    }
    let value = b.swap_remove(n);
    let m = n as i64;
    let by_binomial: BigInt = (0..=m / 3).map(|i| binomial(m - 2 * i, i)).sum();
    if by_binomial != value {
        return Err(Error::Invariant(format!(
            "narayana b_{n}: recurrence {value} but binomial sum {by_binomial}"
        )));
    }
    Ok(value)
}

/// Number of Fibonacci polyominoes (any length) with exactly `area` cells.
pub fn count_polyominoes_by_area(area: usize, exec: Exec) -> Result<BigInt> {
    if area < 1 {
        return Err(Error::Parameter(format!("area must be ≥ 1, got {area}")));
    }
    let lengths: Vec<usize> = (1..=area).collect();
    let counts = exec.map(&lengths, |&n| {
        let mut hits = 0u64;
        for_each_word(n, 2, |bits| {
            let cells = n + bits.iter().filter(|&&b| b == 1).count();
            hits += (cells == area) as u64;
        })
        .map(|()| hits)
    });
    counts
        .into_iter()
        .try_fold(BigInt::zero(), |acc, c| Ok(acc + c?))
}
