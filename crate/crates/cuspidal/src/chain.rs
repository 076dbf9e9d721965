//! Weighted linear chains in bracket notation.
//!
//! A chain `[a1,...,ar]` records a string of rational curves `D1,...,Dr`
//! where consecutive curves meet once and `ai = -Di^2`. Storing the negated
//! self-intersections keeps every quantity here a positive integer. The
//! graph-level modules store honest self-intersection numbers; conversion
//! happens in exactly one place (`resolution::assemble`), nowhere else.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Errors from chain construction and the inductance inverse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    /// The operation needs a non-empty chain with all entries >= 2.
    #[error("chain must be non-empty with every entry >= 2")]
    NotAdmissible,
    /// `from_inductance` needs a rational strictly between 0 and 1.
    #[error("inductance must lie strictly between 0 and 1")]
    InductanceOutOfRange,
    /// A computed entry does not fit in `i64`.
    #[error("chain entry does not fit in i64")]
    EntryOverflow,
    /// Bracket notation that could not be parsed.
    #[error("cannot parse chain from {0:?}")]
    Parse(String),
}

/// A weighted linear chain `[a1,...,ar]`, possibly empty.
///
/// Serializes as a plain JSON array of integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearChain(pub Vec<i64>);

impl LinearChain {
    pub fn new(entries: Vec<i64>) -> Self {
        LinearChain(entries)
    }

    pub fn empty() -> Self {
        LinearChain(Vec::new())
    }

    pub fn single(a: i64) -> Self {
        LinearChain(vec![a])
    }

    /// The chain `[2,2,...,2]` of length `n`. `twos(0)` is the empty chain.
    pub fn twos(n: usize) -> Self {
        LinearChain(vec![2; n])
    }

    /// `n` copies of the entry `a`.
    pub fn run(a: i64, n: usize) -> Self {
        LinearChain(vec![a; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Non-empty and every entry at least 2.
    pub fn is_admissible(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&a| a >= 2)
    }

    /// The reversed chain `[ar,...,a1]`.
    pub fn transposed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        LinearChain(v)
    }

    /// The chain with its first entry removed.
    pub fn drop_first(&self) -> Self {
        LinearChain(self.0[usize::min(1, self.0.len())..].to_vec())
    }

    /// The chain with its last entry removed.
    pub fn drop_last(&self) -> Self {
        LinearChain(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    pub fn appended(&self, a: i64) -> Self {
        let mut v = self.0.clone();
        v.push(a);
        LinearChain(v)
    }

    pub fn prepended(&self, a: i64) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        LinearChain(v)
    }

    pub fn concat(&self, other: &LinearChain) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        LinearChain(v)
    }

    /// Determinant of the tridiagonal intersection form of the chain:
    /// main diagonal `a1..ar`, off-diagonal entries -1.
    ///
    /// Satisfies `d([]) = 1`, `d([a]) = a`, and
    /// `d(A) = a1 * d(A') - d(A'')` where one resp. two leading entries
    /// are removed. Computed right to left so each partial value is the
    /// determinant of a suffix.
    pub fn discriminant(&self) -> BigInt {
        let mut prev = BigInt::zero();
        let mut cur = BigInt::one();
        for &a in self.0.iter().rev() {
            let next = BigInt::from(a) * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }

    /// `d(chain minus first entry) / d(chain)`, a rational in (0,1).
    ///
    /// Only defined for admissible chains.
    pub fn inductance(&self) -> Result<BigRational, ChainError> {
        if !self.is_admissible() {
            return Err(ChainError::NotAdmissible);
        }
        Ok(BigRational::new(
            self.drop_first().discriminant(),
            self.discriminant(),
        ))
    }

    /// Inverse of [`inductance`](Self::inductance): the unique admissible
    /// chain with the given inductance, via the ceiling continued fraction
    /// expansion of the denominator over the numerator.
    pub fn from_inductance(q: &BigRational) -> Result<Self, ChainError> {
        if !q.is_positive() || *q >= BigRational::one() {
            return Err(ChainError::InductanceOutOfRange);
        }
        let mut num = q.numer().clone();
        let mut den = q.denom().clone();
        let mut entries = Vec::new();
        while !num.is_zero() {
            // ceil(den / num) for positive integers
            let a = (&den + &num - BigInt::one()) / &num;
            entries.push(i64::try_from(&a).map_err(|_| ChainError::EntryOverflow)?);
            let next_num = a * &num - &den;
            den = std::mem::replace(&mut num, next_num);
            debug_assert!(num < den, "denominators must strictly decrease");
        }
        debug_assert!(den.is_one(), "a reduced fraction must terminate at 1");
        Ok(LinearChain(entries))
    }

    /// The adjoint chain.
    ///
    /// Built by folding the entries from the right: entry `a` contributes
    /// the block `[2,...,2]` of length `a - 1` when it starts the result,
    /// and otherwise bumps the last entry by one and appends `a - 2` twos.
    /// In debug builds the result is cross-checked against the independent
    /// characterization through inductances, `e(adj A) = 1 - e(transpose A)`.
    pub fn adjoint(&self) -> Self {
        assert!(
            self.is_admissible(),
            "adjoint is only defined for admissible chains"
        );
        let mut out: Vec<i64> = Vec::new();
        for &a in self.0.iter().rev() {
            if out.is_empty() {
                out = vec![2; (a - 1) as usize];
            } else {
                *out.last_mut().expect("non-empty") += 1;
                out.extend(std::iter::repeat(2).take((a - 2) as usize));
            }
        }
        let out = LinearChain(out);
        #[cfg(debug_assertions)]
        {
            let e = self
                .transposed()
                .inductance()
                .expect("admissible chain has an inductance");
            let alt = LinearChain::from_inductance(&(BigRational::one() - e))
                .expect("1 - e lies in (0,1)");
            debug_assert_eq!(out, alt, "adjoint routes disagree on {self}");
        }
        out
    }

    /// The star join: glue two non-empty chains, merging the touching ends
    /// into a single entry `ar + b1 - 1`.
    pub fn star(&self, other: &LinearChain) -> Self {
        assert!(
            !self.is_empty() && !other.is_empty(),
            "star join needs non-empty operands"
        );
        let mut v = self.0[..self.0.len() - 1].to_vec();
        v.push(self.0[self.0.len() - 1] + other.0[0] - 1);
        v.extend_from_slice(&other.0[1..]);
        LinearChain(v)
    }

    /// `n`-fold star join of the chain with itself, `n >= 1`.
    pub fn star_power(&self, n: usize) -> Self {
        assert!(n >= 1, "star power needs n >= 1");
        let mut out = self.clone();
        for _ in 1..n {
            out = out.star(self);
        }
        out
    }
}

impl fmt::Display for LinearChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for LinearChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LinearChain {
    type Err = ChainError;

    /// Accepts `[2,2,8]`, with or without the brackets, and `[]` for the
    /// empty chain. Whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = match (t.starts_with('['), t.ends_with(']')) {
            (true, true) => &t[1..t.len() - 1],
            (false, false) => t,
            _ => return Err(ChainError::Parse(s.to_string())),
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(LinearChain::empty());
        }
        let entries = inner
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ChainError::Parse(s.to_string()))?;
        Ok(LinearChain(entries))
    }
}
