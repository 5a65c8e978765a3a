//! Integer factorization support for rational-root extraction: trial
//! division, deterministic-witness Miller-Rabin, and Brent's variant of
//! Pollard's rho. Sizes here are whatever exact polynomial arithmetic
//! produces, so everything runs on BigUint.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

fn small_primes() -> &'static [u64] {
    &[
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
        191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
    ]
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in small_primes() {
        let bp = BigUint::from(p);
        if n == &bp {
            return true;
        }
        if n.is_multiple_of(&bp) {
            return false;
        }
    }
    // n - 1 = d * 2^s
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // Deterministic for n < 3.3e24; overwhelming evidence beyond.
    let witnesses: &[u64] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    'witness: for &a in witnesses {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho; returns a nontrivial factor of a composite n.
fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n.is_multiple_of(&two) {
        return two;
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let mut count: u64 = 0;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            count += 1;
            if count > 1u64 << 24 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += &one;
    }
}

/// Prime factorization as prime -> exponent.
pub fn factor(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    let mut n = n.clone();
    if n <= BigUint::one() {
        return out;
    }
    for &p in small_primes() {
        let bp = BigUint::from(p);
        while n.is_multiple_of(&bp) {
            *out.entry(bp.clone()).or_insert(0) += 1;
            n /= &bp;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m);
        let q = &m / &d;
        stack.push(d);
        stack.push(q);
    }
    out
}

/// All positive divisors not exceeding `bound`, ascending.
pub fn divisors_up_to(factors: &BTreeMap<BigUint, u32>, bound: &BigUint) -> Vec<BigUint> {
    let mut divisors = vec![BigUint::one()];
    for (p, &e) in factors {
        let mut extended = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut cur = d.clone();
            extended.push(cur.clone());
            for _ in 0..e {
                cur = &cur * p;
                if &cur > bound {
                    break;
                }
                extended.push(cur.clone());
            }
        }
        divisors = extended;
    }
    divisors.retain(|d| d <= bound);
    divisors.sort();
    divisors.dedup();
    divisors
}
