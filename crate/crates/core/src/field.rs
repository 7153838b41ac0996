//! Arithmetic in the prime field F_p.
//!
//! Scalars are stored as `u32` residues in `0..p`. All helpers take the
//! prime explicitly so that they stay free functions.

/// Returns true if `p` is prime.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse; panics on zero.
pub fn inv(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    pow(a, (p - 2) as u64, p)
}

/// Reduce a signed integer into `0..p`.
pub fn from_i64(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// `(-1)^e` in F_p.
#[inline]
pub fn sign(e: u32, p: u32) -> u32 {
    if e.is_multiple_of(2) {
        1 % p
    } else {
        p - 1
    }
}

/// Binomial coefficient C(n, k) mod p by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let pp = p as u64;
    let mut acc = 1u32;
    while k > 0 || n > 0 {
        let (nd, kd) = ((n % pp) as u32, (k % pp) as u32);
        if kd > nd {
            return 0;
        }
        acc = mul(acc, small_binomial(nd, kd, p), p);
        n /= pp;
        k /= pp;
    }
    acc
}

// C(n, k) mod p for n < p
fn small_binomial(n: u32, k: u32, p: u32) -> u32 {
    let k = k.min(n - k);
    let mut num = 1u32;
    let mut den = 1u32;
    for t in 0..k {
        num = mul(num, n - t, p);
        den = mul(den, t + 1, p);
    }
    mul(num, inv(den, p), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn lucas_matches_pascal() {
        for p in [2u32, 3, 5, 7] {
            let lim = 2 * p * p;
            let mut row = vec![1u32];
            for n in 0..=lim {
                for k in 0..=n {
                    assert_eq!(binomial_mod_p(n as u64, k as u64, p), row[k as usize]);
                }
                let mut next = vec![1u32; n as usize + 2];
                for k in 1..=n as usize {
                    next[k] = add(row[k - 1], row[k], p);
                }
                row = next;
            }
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_mod_p(4, 2, 3), 0);
        assert_eq!(binomial_mod_p(6, 3, 3), 2);
        for k in 1..5 {
            assert_eq!(binomial_mod_p(5, k, 5), 0);
        }
    }

    #[test]
    fn inverses() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
    }
}
