//! Exact multiplicative number theory: gcd, factorization, divisor functions,
//! Euler's totient, unit groups and extreme prime divisors.
//!
//! Everything here is integer-only. Contract violations (e.g. `gcd(0, 0)`)
//! panic; there are no silent fallbacks and no floating point.

use std::fmt;

/// Prime factorization of a positive integer, primes strictly increasing.
///
/// `Factorization::of(1)` has an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with primes strictly increasing and exponents >= 1.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct prime divisors, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Greatest common divisor, with the convention `gcd(0, n) = n`.
///
/// The convention matters: every identity in this crate evaluates
/// `gcd(a - 1, n)` and the unit `a = 1` contributes `gcd(0, n) = n`.
///
/// Panics if both arguments are zero (no greatest common divisor exists).
pub fn gcd(a: u64, b: u64) -> u64 {
    assert!(a != 0 || b != 0, "gcd(0, 0) is undefined");
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Factor `n >= 1` by trial division up to sqrt(n).
///
/// Panics if `n = 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize(0) is undefined");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p: u64 = 2;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { value: n, factors }
}

/// Euler's totient: the number of `a` in `1..=n` with `gcd(a, n) = 1`.
///
/// Computed from the factorization via `phi(p^e) = p^(e-1) * (p - 1)`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi(0) is undefined");
    let mut phi = 1u64;
    for &(p, e) in factorize(n).factors() {
        phi *= p.pow(e - 1) * (p - 1);
    }
    phi
}

/// Number of positive divisors of `n`.
pub fn tau(n: u64) -> u64 {
    assert!(n >= 1, "tau(0) is undefined");
    factorize(n)
        .factors()
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Sum of the positive divisors of `n`.
pub fn sigma_divisor_sum(n: u64) -> u64 {
    assert!(n >= 1, "sigma(0) is undefined");
    let mut sigma = 1u64;
    for &(p, e) in factorize(n).factors() {
        // 1 + p + ... + p^e
        let mut geom = 1u64;
        let mut pk = 1u64;
        for _ in 0..e {
            pk = pk.checked_mul(p).expect("sigma overflow");
            geom = geom.checked_add(pk).expect("sigma overflow");
        }
        sigma = sigma.checked_mul(geom).expect("sigma overflow");
    }
    sigma
}

/// All positive divisors of `n` in strictly ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors(0) is undefined");
    let mut divs = vec![1u64];
    for &(p, e) in factorize(n).factors() {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// The group of units mod `n`: all `a` in `1..=n` with `gcd(a, n) = 1`, ascending.
///
/// For `n = 1` this is `[1]` (the degenerate modulus has a single unit).
pub fn units_mod(n: u64) -> Vec<u64> {
    assert!(n >= 1, "units_mod(0) is undefined");
    (1..=n).filter(|&a| gcd(a, n) == 1).collect()
}

/// Smallest and largest prime divisor `(q, p)` of `n >= 2`; `q <= p`.
///
/// Panics if `n < 2` (a unit has no prime divisors).
pub fn extreme_prime_divisors(n: u64) -> (u64, u64) {
    assert!(n >= 2, "extreme_prime_divisors requires n >= 2");
    let f = factorize(n);
    let factors = f.factors();
    (factors[0].0, factors[factors.len() - 1].0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_zero_convention() {
        assert_eq!(gcd(0, 6), 6);
        assert_eq!(gcd(6, 0), 6);
        assert_eq!(gcd(0, 1), 1);
    }

    #[test]
    fn gcd_small_cases() {
        assert_eq!(gcd(4, 6), 2);
        assert_eq!(gcd(6, 4), 2);
        assert_eq!(gcd(1, 99), 1);
        for a in 1..=100 {
            assert_eq!(gcd(a, a), a);
        }
    }

    #[test]
    #[should_panic(expected = "gcd(0, 0)")]
    fn gcd_both_zero_panics() {
        gcd(0, 0);
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).factors(), &[(97, 1)]);
        assert_eq!(factorize(5040).factors(), &[(2, 4), (3, 2), (5, 1), (7, 1)]);
    }

    #[test]
    #[should_panic(expected = "factorize(0)")]
    fn factorize_zero_panics() {
        factorize(0);
    }

    // Trial-division primality, independent of factorize.
    fn is_prime_naive(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn factorize_round_trips_and_primes_are_prime() {
        for n in 1..=2000u64 {
            let f = factorize(n);
            let product: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(product, n);
            for &(p, e) in f.factors() {
                assert!(is_prime_naive(p), "{p} listed as prime factor of {n}");
                assert!(e >= 1);
            }
            // primes strictly increasing
            for w in f.factors().windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn phi_matches_gcd_scan_oracle() {
        for n in 1..=2000u64 {
            let scan = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), scan, "phi({n})");
            assert_eq!(units_mod(n).len() as u64, scan);
        }
    }

    #[test]
    fn tau_and_sigma_examples() {
        assert_eq!(tau(1), 1);
        assert_eq!(tau(6), 4);
        assert_eq!(sigma_divisor_sum(1), 1);
        assert_eq!(sigma_divisor_sum(6), 12);
        assert_eq!(sigma_divisor_sum(4), 7);
    }

    #[test]
    fn divisor_list_matches_scan_oracle() {
        for n in 1..=2000u64 {
            let scan: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), scan, "divisors({n})");
            assert_eq!(tau(n), scan.len() as u64);
            assert_eq!(sigma_divisor_sum(n), scan.iter().sum::<u64>());
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(97), vec![1, 97]);
    }

    #[test]
    fn gauss_identity() {
        // sum over d | n of phi(d) = n; ties divisors and phi together
        for n in 1..=2000u64 {
            let total: u64 = divisors(n).into_iter().map(euler_phi).sum();
            assert_eq!(total, n);
        }
    }

    #[test]
    fn units_examples() {
        assert_eq!(units_mod(1), vec![1]);
        assert_eq!(units_mod(6), vec![1, 5]);
        assert_eq!(units_mod(8), vec![1, 3, 5, 7]);
    }

    #[test]
    fn extreme_primes_examples() {
        assert_eq!(extreme_prime_divisors(12), (2, 3));
        assert_eq!(extreme_prime_divisors(7), (7, 7));
        assert_eq!(extreme_prime_divisors(30), (2, 5));
        assert_eq!(extreme_prime_divisors(2), (2, 2));
    }

    #[test]
    #[should_panic(expected = "requires n >= 2")]
    fn extreme_primes_reject_unit() {
        extreme_prime_divisors(1);
    }

    #[test]
    fn factorization_display() {
        assert_eq!(factorize(1).to_string(), "1");
        assert_eq!(factorize(12).to_string(), "2^2 * 3");
        assert_eq!(factorize(30).to_string(), "2 * 3 * 5");
    }
}
