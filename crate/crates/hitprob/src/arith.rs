//! Arithmetic in the prime field `F_p` for odd `p`, together with the p-adic
//! digit utilities the Steenrod action is built from.
//!
//! Everything downstream routes its field arithmetic through
//! [`PrimeModulus`], so the "odd prime only" contract is enforced in exactly
//! one place.  Binomial coefficients mod p are computed digit-by-digit via
//! Lucas' theorem: `binom(n, m) = prod_s binom(n_s, m_s) (mod p)` where
//! `n_s`, `m_s` are the base-p digits of `n` and `m`.

use thiserror::Error;

/// Errors from constructing or using a prime modulus.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// The engine is specific to odd primes: the Steenrod algebra at p = 2
    /// has a different operation basis and is out of scope.
    #[error("p = 2 is not supported; this engine computes over odd primes only")]
    EvenPrime,
    /// The requested modulus is not prime at all.
    #[error("{0} is not a prime number")]
    NotPrime(u64),
}

/// Validated odd prime `p`, carrying all `F_p` arithmetic as methods.
///
/// Copy-cheap; pass it by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeModulus {
    /// Validate `p` as an odd prime.  `p = 2` gets its own error so callers
    /// can report "wrong engine" distinctly from "not a prime".
    pub fn new(p: u32) -> Result<Self, ArithError> {
        if p == 2 {
            return Err(ArithError::EvenPrime);
        }
        if !is_prime(p as u64) {
            return Err(ArithError::NotPrime(p as u64));
        }
        Ok(PrimeModulus { p })
    }

    /// The prime itself.
    #[inline]
    pub fn get(self) -> u32 {
        self.p
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, a: u64) -> u32 {
        (a % self.p as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.p && b < self.p);
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a^e mod p` by square-and-multiply.  `0^0 = 1`.
    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        debug_assert!(a < self.p);
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: `a^(p-2)`.
    ///
    /// # Panics
    /// Panics on `a = 0`; callers must guard.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "attempted to invert 0 mod {}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Base-p digits of `n`, least significant first.  `0` yields `[0]` so
    /// every number has at least one digit.
    pub fn p_digits(self, mut n: u64) -> Vec<u32> {
        let mut out = Vec::new();
        loop {
            out.push((n % self.p as u64) as u32);
            n /= self.p as u64;
            if n == 0 {
                break;
            }
        }
        out
    }

    /// The `s`-th base-p digit of `n` (digit 0 is the units digit).
    #[inline]
    pub fn digit(self, n: u64, s: u32) -> u32 {
        let q = n / (self.p as u64).pow(s);
        (q % self.p as u64) as u32
    }

    /// Sum of the base-p digits of `n`.
    pub fn digit_sum(self, n: u64) -> u64 {
        self.p_digits(n).iter().map(|&d| d as u64).sum()
    }

    /// `binom(n, m) mod p` by Lucas' theorem.  Zero whenever any digit of
    /// `m` exceeds the matching digit of `n`; in particular zero for
    /// `m > n`.
    pub fn lucas_binom(self, n: u64, m: u64) -> u32 {
        if m > n {
            return 0;
        }
        let mut n = n;
        let mut m = m;
        let p = self.p as u64;
        let mut acc = 1u32;
        while m > 0 || n > 0 {
            let nd = (n % p) as u32;
            let md = (m % p) as u32;
            if md > nd {
                return 0;
            }
            acc = self.mul(acc, binom_small(self, nd, md));
            n /= p;
            m /= p;
        }
        acc
    }

    /// Smallest generator of the multiplicative group `F_p^*` that is
    /// at least 2.
    pub fn primitive_root(self) -> u32 {
        // p - 1 is small enough for trial factorization.
        let mut factors = Vec::new();
        let mut n = self.p as u64 - 1;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                factors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        'cand: for g in 2..self.p {
            for &q in &factors {
                if self.pow(g, (self.p as u64 - 1) / q) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("every prime field has a primitive root >= 2");
    }
}

/// `binom(n, m) mod p` for single digits `n, m < p`, by the multiplicative
/// formula with on-the-fly inversion.
fn binom_small(f: PrimeModulus, n: u32, m: u32) -> u32 {
    debug_assert!(n < f.get() && m < f.get());
    if m > n {
        return 0;
    }
    let m = m.min(n - m);
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..m {
        num = f.mul(num, (n - i) % f.get());
        den = f.mul(den, (i + 1) % f.get());
    }
    f.mul(num, f.inv(den))
}
