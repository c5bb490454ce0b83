//! Integer helpers for the catalog: squarefree tests, Pell solutions,
//! continued fractions and divisor enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square_u128(n: u128) -> bool {
    let r = isqrt_u128(n);
    r * r == n
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Continued fraction of `sqrt(n)` for non-square `n`: `(a0, period)`.
pub fn sqrt_cf(n: u64) -> Option<(u64, Vec<u64>)> {
    let a0 = isqrt_u128(n as u128) as u64;
    if a0 * a0 == n {
        return None;
    }
    let (mut m, mut d, mut a) = (0u64, 1u64, a0);
    let mut period = Vec::new();
    loop {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        period.push(a);
        if a == 2 * a0 {
            break;
        }
    }
    Some((a0, period))
}

/// Partial quotients `a_0, a_1, ...` of `sqrt(n)` (at least `count` terms).
pub fn sqrt_cf_terms(n: u64, count: usize) -> Option<Vec<u64>> {
    let (a0, period) = sqrt_cf(n)?;
    let mut out = vec![a0];
    let mut i = 0;
    while out.len() < count {
        out.push(period[i % period.len()]);
        i += 1;
    }
    Some(out)
}

/// Solutions `(q, p)` of `q^2 - n p^2 = 1` with `p > 0`, in increasing order.
pub fn pell_solutions(n: u64, count: usize) -> Option<Vec<(BigInt, BigInt)>> {
    let (a0, period) = sqrt_cf(n)?;
    // Fundamental solution from the convergent before the end of the
    // (possibly doubled) period.
    let len = if period.len() % 2 == 0 { period.len() } else { 2 * period.len() };
    let mut terms = vec![a0];
    for i in 0..len - 1 {
        terms.push(period[i % period.len()]);
    }
    let (mut h0, mut h1) = (BigInt::one(), BigInt::from(terms[0]));
    let (mut k0, mut k1) = (BigInt::zero(), BigInt::one());
    for &a in &terms[1..] {
        let a = BigInt::from(a);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    let (x1, y1) = (h1, k1);
    let nb = BigInt::from(n);
    debug_assert_eq!(&x1 * &x1 - &nb * &y1 * &y1, BigInt::one());
    let mut out = Vec::with_capacity(count);
    let (mut x, mut y) = (x1.clone(), y1.clone());
    for _ in 0..count {
        out.push((x.clone(), y.clone()));
        let nx = &x * &x1 + &nb * &y * &y1;
        let ny = &x * &y1 + &y * &x1;
        x = nx;
        y = ny;
    }
    Some(out)
}

/// Convergents `p/q` of `1/sqrt(n)`, skipping the leading `0/1`.
pub fn convergents_inv_sqrt(n: u64, count: usize) -> Option<Vec<(BigInt, BigInt)>> {
    let terms = sqrt_cf_terms(n, count + 1)?;
    // 1/sqrt(n) = [0; a0, a1, ...]
    let (mut p0, mut p1) = (BigInt::one(), BigInt::zero());
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(count);
    for &a in terms.iter().take(count) {
        let a = BigInt::from(a);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        out.push((p1.clone(), q1.clone()));
    }
    Some(out)
}

/// Is `p/q` (reduced, positive) a convergent of `1/sqrt(n)`?
pub fn is_convergent_inv_sqrt(n: u64, p: &BigInt, q: &BigInt) -> bool {
    let Some((a0, period)) = sqrt_cf(n) else {
        return false;
    };
    let (mut p0, mut p1) = (BigInt::one(), BigInt::zero());
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    let mut i = 0usize;
    loop {
        let a = BigInt::from(if i == 0 { a0 } else { period[(i - 1) % period.len()] });
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        if &q1 == q && &p1 == p {
            return true;
        }
        if &q1 > q {
            return false;
        }
        i += 1;
    }
}

/// Prime factorization by trial division (`n <= 10^12` keeps this cheap).
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Positive divisors of `b^2`.
pub fn divisors_of_square(b: u64) -> Vec<u128> {
    let mut divs = vec![1u128];
    for (p, e) in factor(b) {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = 1u128;
            for _ in 0..=(2 * e) {
                next.push(d * pk);
                pk *= p as u128;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    divs
}

/// Best rational approximation `p/q` with `q <= max_den` within `tol` of `x`.
pub fn rational_approx(x: f64, max_den: i64, tol: f64) -> Option<(i64, i64)> {
    if !x.is_finite() {
        return None;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            return None;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if ((h1 as f64) / (k1 as f64) - x).abs() <= tol * x.abs().max(1.0) {
            return Some((h1 as i64, k1 as i64));
        }
        let frac = r - a;
        if frac == 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn bigint_to_u64(n: &BigInt) -> Option<u64> {
    if n.is_negative() {
        None
    } else {
        n.to_u64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree() {
        assert!(is_squarefree(1));
        assert!(is_squarefree(6));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(9));
    }

    #[test]
    fn cf_sqrt() {
        assert_eq!(sqrt_cf(2), Some((1, vec![2])));
        assert_eq!(sqrt_cf(7), Some((2, vec![1, 1, 1, 4])));
        assert_eq!(sqrt_cf(4), None);
    }

    #[test]
    fn pell_fundamental() {
        let s = pell_solutions(2, 2).unwrap();
        assert_eq!(s[0], (BigInt::from(3), BigInt::from(2)));
        assert_eq!(s[1], (BigInt::from(17), BigInt::from(12)));
        let s = pell_solutions(61, 1).unwrap();
        assert_eq!(s[0].0, BigInt::from(1766319049u64));
        let s = pell_solutions(13, 1).unwrap();
        assert_eq!(s[0], (BigInt::from(649), BigInt::from(180)));
    }

    #[test]
    fn convergents() {
        // 1/sqrt(2) = [0; 1, 2, 2, ...]: 1/1, 2/3, 5/7
        let c = convergents_inv_sqrt(2, 3).unwrap();
        let c: Vec<(i64, i64)> = c.iter().map(|(p, q)| (p.try_into().unwrap(), q.try_into().unwrap())).collect();
        assert_eq!(c, vec![(1, 1), (2, 3), (5, 7)]);
        assert!(is_convergent_inv_sqrt(2, &BigInt::from(5), &BigInt::from(7)));
        assert!(!is_convergent_inv_sqrt(2, &BigInt::from(3), &BigInt::from(4)));
    }

    #[test]
    fn divisors() {
        assert_eq!(divisors_of_square(6), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn approx() {
        assert_eq!(rational_approx(0.125, 1_000_000_000, 1e-15), Some((1, 8)));
        assert_eq!(rational_approx(9.0 / 50.0, 1_000_000_000, 1e-15), Some((9, 50)));
        assert_eq!(rational_approx(std::f64::consts::PI, 1000, 1e-15), None);
    }
}
