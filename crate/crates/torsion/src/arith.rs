//! Integer utilities shared by the curve and solver modules: perfect squares,
//! factorization (trial division + Pollard's rho), divisor enumeration.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Floor square root for non-negative inputs; `None` for negative.
pub fn floor_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    Some(n.sqrt())
}

/// Returns `Some(r)` with `r >= 0` and `r*r == n`, if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = floor_sqrt(n)?;
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

/// Exact division: `Some(n / d)` iff `d != 0` and `d | n`.
pub fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    if d.is_zero() {
        return None;
    }
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

fn is_prime_u(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // deterministic Miller-Rabin for n < 3.3 * 10^24 with the bases above
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint, rng: &mut ChaCha8Rng) -> BigUint {
    // Brent's cycle-finding variant.
    let one = BigUint::one();
    loop {
        let c = rng.gen_biguint_below(n).max(one.clone());
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = rng.gen_biguint_below(n);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && d != *n {
            return d;
        }
    }
}

fn factor_u(n: BigUint, out: &mut BTreeMap<BigInt, u32>, rng: &mut ChaCha8Rng) {
    if n.is_one() {
        return;
    }
    if is_prime_u(&n) {
        *out.entry(BigInt::from(n)).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(&n, rng);
    factor_u(&n / &d, out, rng);
    factor_u(d, out, rng);
}

/// Prime factorization of `|n|` for `n != 0`.
pub fn factor(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor(0)");
    let mut m = n.abs().to_biguint().unwrap();
    let mut out = BTreeMap::new();
    for p in 2u64..=9973 {
        if BigUint::from(p * p) > m {
            break;
        }
        let pb = BigUint::from(p);
        while (&m % &pb).is_zero() {
            m /= &pb;
            *out.entry(BigInt::from(p)).or_insert(0) += 1;
        }
    }
    if !m.is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        factor_u(m, &mut out, &mut rng);
    }
    out
}

/// All positive divisors of `|n|`, ascending. `n` must be nonzero.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        let mut pe = BigInt::one();
        for _ in 0..=e {
            for d in &ds {
                next.push(d * &pe);
            }
            pe *= &p;
        }
        ds = next;
    }
    ds.sort();
    ds
}

/// Largest `y >= 1` with `y^2 | n` (`n != 0`).
pub fn square_part_root(n: &BigInt) -> BigInt {
    let mut y = BigInt::one();
    for (p, e) in factor(n) {
        y *= p.pow(e / 2);
    }
    y
}

/// Sign of `n` represented as -1, 0, 1.
pub fn signum(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
