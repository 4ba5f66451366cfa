//! Exact root finding used by the spectral routines: rational roots of
//! rational polynomials and integer solutions of `q^k = w`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalars::{rational_pow, Rational};

/// Prime factorization by trial division.
fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigUint::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factor(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs
}

fn eval(coeffs: &[Rational], z: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
}

/// Distinct rational roots of `sum_i coeffs[i] z^i`, sorted ascending.
/// The zero polynomial has no well-defined root set and returns empty.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let Some(top) = coeffs.iter().rposition(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if top > low {
        let lcm = coeffs[low..=top].iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            coeffs[low..=top].iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let c0 = ints[0].magnitude();
        let cn = ints[ints.len() - 1].magnitude();
        let shifted = &coeffs[low..=top];
        for r in divisors(c0) {
            for s in divisors(cn) {
                if !r.gcd(&s).is_one() {
                    continue;
                }
                let base = Rational::new(BigInt::from(r.clone()), BigInt::from(s.clone()));
                for cand in [base.clone(), -base] {
                    if eval(shifted, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Height of a rational: the larger of |numerator| and denominator.
fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// The integer `k` with `q^k = w`, if any. Requires `q` not in `{0, 1, -1}`;
/// then `height(q^k)` grows strictly with `|k|`, so the search is bounded by
/// the height of `w`.
pub fn solve_power(q: &Rational, w: &Rational) -> Option<i64> {
    debug_assert!(!q.is_zero() && q.abs() != Rational::one());
    if w.is_one() {
        return Some(0);
    }
    if w.is_zero() {
        return None;
    }
    let target = height(w);
    let mut pos = Rational::one();
    let mut k = 0i64;
    loop {
        k += 1;
        pos *= q;
        if height(&pos) > target {
            return None;
        }
        if &pos == w {
            return Some(k);
        }
        if pos.recip() == *w {
            return Some(-k);
        }
    }
}

/// Integers `k` with `{k}_q = z`, i.e. `q^k = 1 + z (q - 1)` (or `k = z` when `q = 1`).
pub fn q_int_preimage(q: &Rational, z: &Rational) -> Option<i64> {
    if q.is_one() {
        return if z.is_integer() { i64::try_from(z.to_integer()).ok() } else { None };
    }
    let w = Rational::one() + z * (q - Rational::one());
    let k = solve_power(q, &w)?;
    debug_assert_eq!(rational_pow(q, k), w);
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    #[test]
    fn roots_of_products() {
        // (z - 1/2)(z + 3) z = z^3 + 5/2 z^2 - 3/2 z
        let c = [int(0), rat(-3, 2), rat(5, 2), int(1)];
        assert_eq!(rational_roots(&c), vec![int(-3), int(0), rat(1, 2)]);
        assert!(rational_roots(&[int(1), int(0), int(1)]).is_empty());
        assert!(rational_roots(&[int(5)]).is_empty());
    }

    #[test]
    fn powers() {
        assert_eq!(solve_power(&int(2), &int(8)), Some(3));
        assert_eq!(solve_power(&int(2), &rat(1, 8)), Some(-3));
        assert_eq!(solve_power(&rat(-3, 2), &rat(9, 4)), Some(2));
        assert_eq!(solve_power(&rat(-3, 2), &rat(-8, 27)), Some(-3));
        assert_eq!(solve_power(&int(2), &int(6)), None);
        assert_eq!(solve_power(&int(2), &int(-8)), None);
        assert_eq!(q_int_preimage(&int(2), &int(15)), Some(4));
        assert_eq!(q_int_preimage(&int(2), &rat(-1, 2)), Some(-1));
        assert_eq!(q_int_preimage(&int(1), &int(-7)), Some(-7));
        assert_eq!(q_int_preimage(&int(1), &rat(1, 2)), None);
    }
}
