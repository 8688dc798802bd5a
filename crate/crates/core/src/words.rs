//! Binary words avoiding `k` consecutive 1's.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{check_k, Error, Result};

/// A binary word validated against a fixed avoidance parameter `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: Vec<u8>,
    k: usize,
}

impl Word {
    /// Validates `bits` (each 0 or 1) against `k`.
    pub fn new(bits: Vec<u8>, k: usize) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain(format!("not a binary letter: {b}")));
        }
        if !is_kbonacci(&bits, k)? {
            return Err(Error::Domain(format!(
                "word {} contains {k} consecutive 1's",
                ascii(&bits)
            )));
        }
        Ok(Word { bits, k })
    }

    /// Parses an ASCII string of '0'/'1'.
    pub fn parse(s: &str, k: usize) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Domain(format!("not a binary letter: {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(bits, k)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Lengths of the maximal blocks of consecutive 1's, left to right.
    pub fn one_runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0;
        for &b in &self.bits {
            if b == 1 {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        if current > 0 {
            runs.push(current);
        }
        runs
    }

    pub fn reverse(&self) -> Word {
        let mut bits = self.bits.clone();
        bits.reverse();
        Word { bits, k: self.k }
    }

    /// Checks the same bits against another parameter.
    pub fn revalidate(&self, k: usize) -> Result<Word> {
        Word::new(self.bits.clone(), k)
    }

    /// '0'/'1' string; the empty word is `""`.
    pub fn to_ascii(&self) -> String {
        ascii(&self.bits)
    }
}

/// Text rendering: the ASCII bits, or `ε` for the empty word.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.to_ascii())
        }
    }
}

fn ascii(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

/// True iff no run of 1's in `bits` has length `k` or more.
pub fn is_kbonacci(bits: &[u8], k: usize) -> Result<bool> {
    check_k(k)?;
    let mut run = 0;
    for &b in bits {
        if b == 1 {
            run += 1;
            if run >= k {
                return Ok(false);
            }
        } else {
            run = 0;
        }
    }
    Ok(true)
}

/// `F_{n,k}`: zero for `n <= 0`, one at `n = 1`, otherwise the sum of the
/// previous `k` terms.
pub fn generalized_fibonacci(n: i64, k: usize) -> Result<BigUint> {
    check_k(k)?;
    if n <= 0 {
        return Ok(BigUint::zero());
    }
    // Sliding window over the last k values, with the running window sum.
    let mut window = vec![BigUint::zero(); k];
    window[0] = BigUint::one();
    let mut sum = BigUint::one();
    let mut head = 0;
    for _ in 1..n {
        let next = sum.clone();
        head = (head + 1) % k;
        sum -= &window[head];
        sum += &next;
        window[head] = next;
    }
    Ok(window[head].clone())
}

/// Number of length-`n` words avoiding `1^k`, i.e. `F_{n+2,k}`.
pub fn count_words(n: usize, k: usize) -> Result<BigUint> {
    generalized_fibonacci(n as i64 + 2, k)
}

/// Calls `visit` with every valid word of length `n` in lexicographic order
/// (0 < 1). Invalid prefixes are pruned, never materialized.
pub fn for_each_word<F: FnMut(&[u8])>(n: usize, k: usize, mut visit: F) -> Result<()> {
    check_k(k)?;
    let mut bits = Vec::with_capacity(n);
    extend(&mut bits, 0, n, k, &mut visit);
    Ok(())
}

fn extend<F: FnMut(&[u8])>(bits: &mut Vec<u8>, run: usize, n: usize, k: usize, visit: &mut F) {
    if bits.len() == n {
        visit(bits);
        return;
    }
    bits.push(0);
    extend(bits, 0, n, k, visit);
    bits.pop();
    if run + 1 < k {
        bits.push(1);
        extend(bits, run + 1, n, k, visit);
        bits.pop();
    }
}

/// All valid words of length `n`, lexicographically sorted.
pub fn enumerate_words(n: usize, k: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for_each_word(n, k, |bits| {
        out.push(Word {
            bits: bits.to_vec(),
            k,
        })
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(Word::to_ascii).collect()
    }

    #[test]
    fn membership() {
        assert!(!is_kbonacci(&[1, 1, 1], 3).unwrap());
        assert!(is_kbonacci(&[1, 1, 0], 3).unwrap());
        assert!(is_kbonacci(&[1, 0, 1], 2).unwrap());
        assert!(is_kbonacci(&[], 2).unwrap());
        assert!(matches!(is_kbonacci(&[0], 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(generalized_fibonacci(1, 2).unwrap(), BigUint::from(1u8));
        assert_eq!(generalized_fibonacci(0, 3).unwrap(), BigUint::zero());
        assert_eq!(generalized_fibonacci(-4, 3).unwrap(), BigUint::zero());
        assert_eq!(generalized_fibonacci(5, 2).unwrap(), BigUint::from(5u8));
        // tribonacci: 1, 1, 2, 4, 7, 13
        assert_eq!(generalized_fibonacci(6, 3).unwrap(), BigUint::from(13u8));
        assert!(generalized_fibonacci(3, 0).is_err());
    }

    #[test]
    fn classical_fibonacci_against_memo_recursion() {
        fn fib(n: usize, memo: &mut Vec<Option<u64>>) -> u64 {
            if n <= 2 {
                return 1;
            }
            if let Some(v) = memo[n] {
                return v;
            }
            let v = fib(n - 1, memo) + fib(n - 2, memo);
            memo[n] = Some(v);
            v
        }
        let mut memo = vec![None; 31];
        for n in 1..=30 {
            assert_eq!(
                generalized_fibonacci(n as i64, 2).unwrap(),
                BigUint::from(fib(n, &mut memo))
            );
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_words(3, 2).unwrap(), BigUint::from(5u8));
        assert_eq!(count_words(3, 3).unwrap(), BigUint::from(7u8));
        for k in 2..6 {
            assert_eq!(count_words(0, k).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn small_listings() {
        assert_eq!(strings(&enumerate_words(1, 2).unwrap()), ["0", "1"]);
        assert_eq!(strings(&enumerate_words(2, 2).unwrap()), ["00", "01", "10"]);
        assert_eq!(
            strings(&enumerate_words(3, 2).unwrap()),
            ["000", "001", "010", "100", "101"]
        );
        assert_eq!(
            strings(&enumerate_words(3, 3).unwrap()),
            ["000", "001", "010", "011", "100", "101", "110"]
        );
        let empty = enumerate_words(0, 4).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].to_string(), "ε");
        assert_eq!(empty[0].to_ascii(), "");
    }

    #[test]
    fn enumeration_matches_filtered_cube() {
        for k in 2..=5 {
            for n in 0..=12 {
                let words = enumerate_words(n, k).unwrap();
                assert_eq!(BigUint::from(words.len()), count_words(n, k).unwrap());
                // brute force over all 2^n words, in numeric = lexicographic order
                let brute: Vec<Vec<u8>> = (0u32..1 << n)
                    .map(|m| (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect())
                    .filter(|b: &Vec<u8>| is_kbonacci(b, k).unwrap())
                    .collect();
                let got: Vec<Vec<u8>> = words.iter().map(|w| w.bits().to_vec()).collect();
                assert_eq!(got, brute);
                assert!(words.windows(2).all(|p| p[0].bits() < p[1].bits()));
                for w in &words {
                    assert!(is_kbonacci(w.reverse().bits(), k).unwrap());
                }
            }
        }
    }

    #[test]
    fn reversal_and_parsing() {
        let rev = |s: &str| Word::parse(s, 3).unwrap().reverse().to_ascii();
        assert_eq!(rev("001"), "100");
        assert_eq!(rev("010"), "010");
        assert_eq!(rev("110"), "011");
        assert!(Word::parse("111", 3).is_err());
        assert!(Word::parse("1a", 3).is_err());
        let w = Word::parse("0110", 3).unwrap();
        assert!(w.revalidate(2).is_err());
        assert_eq!(w.revalidate(4).unwrap().k(), 4);
        assert_eq!(Word::parse("1101110", 4).unwrap().one_runs(), [2, 3]);
    }
}
