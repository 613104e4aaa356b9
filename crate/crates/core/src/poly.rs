//! Dense univariate polynomials over Q, coefficients stored low degree first.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Rational, RationalMatrix};

pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Rational]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Quotient and remainder; panics on a zero divisor.
pub fn div_rem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &lead;
        q[dr - db] = f.clone();
        for i in 0..=db {
            r[dr - db + i] -= &f * &b[i];
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn monic(p: Poly) -> Poly {
    match degree(&p) {
        Some(d) => {
            let l = p[d].clone();
            p.into_iter().map(|c| c / &l).collect()
        }
        None => p,
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while degree(&y).is_some() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Product of the distinct irreducible factors of `p`.
pub fn square_free(p: &[Rational]) -> Poly {
    let g = gcd(p, &derivative(p));
    if degree(&g).unwrap_or(0) == 0 {
        return monic(trim(p.to_vec()));
    }
    monic(div_rem(p, &g).0)
}

/// Characteristic polynomial `det(tI - m)` by Faddeev-LeVerrier.
pub fn char_poly(m: &RationalMatrix) -> Poly {
    let n = m.rows();
    assert!(m.is_square());
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk).expect("square");
        for i in 0..n {
            next[(i, i)] += &c[n + 1 - k];
        }
        mk = next;
        let tr = m.mul(&mk).expect("square").trace();
        c[n - k] = -tr / Rational::from_integer(BigInt::from(k));
    }
    c
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = eval(p, x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

fn sturm(p: &[Rational]) -> Vec<Poly> {
    let mut seq = vec![trim(p.to_vec()), derivative(p)];
    while degree(seq.last().unwrap()).is_some_and(|d| d > 0) {
        let n = seq.len();
        let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
        let r: Poly = r.into_iter().map(|c| -c).collect();
        if degree(&r).is_none() {
            break;
        }
        seq.push(r);
    }
    seq
}

/// Distinct rational roots of `p`, in increasing order, provided `p` splits
/// into linear factors over Q. Returns `None` when some root is not rational.
pub fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let f = square_free(p);
    let k = degree(&f)?;
    if k == 0 {
        return Some(Vec::new());
    }
    // Scale to an integer polynomial, then substitute t = u / a_k to get a
    // monic integer polynomial whose rational roots are integers.
    let lcm = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let lead = ints[k].clone();
    let mut g = Vec::with_capacity(k + 1);
    let mut pow = BigInt::one();
    for i in (0..=k).rev() {
        g.push((i, &ints[i] * &pow));
        pow *= &lead;
    }
    let mut gcoef = vec![Rational::zero(); k + 1];
    for (i, c) in g {
        gcoef[i] = Rational::from_integer(c);
    }
    // Leading coefficient is lead^k; divide through by lead to make it monic.
    let lead_k = gcoef[k].clone();
    let gcoef: Poly = gcoef.into_iter().map(|c| c / &lead_k).collect();
    if gcoef.iter().any(|c| !c.is_integer()) {
        return None;
    }
    let bound = gcoef
        .iter()
        .map(|c| c.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let seq = sturm(&gcoef);
    let mut roots = Vec::new();
    let mut stack = vec![(-&bound - BigInt::one(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let lo_r = Rational::from_integer(lo.clone());
        let hi_r = Rational::from_integer(hi.clone());
        let count = sign_changes(&seq, &lo_r).saturating_sub(sign_changes(&seq, &hi_r));
        if count == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if !eval(&gcoef, &hi_r).is_zero() {
                return None;
            }
            roots.push(Rational::new(hi, lead.clone()));
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    if roots.len() != k {
        return None;
    }
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn p(cs: &[i64]) -> Poly {
        cs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn char_poly_of_2x2() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(char_poly(&m), p(&[-2, -5, 1]));
    }

    #[test]
    fn roots_of_split_polynomial() {
        // (t - 1/2)^2 (t + 3) (t - 5)
        let lin = |r: Rational| vec![-r, rat(1)];
        let mul = |a: &Poly, b: &Poly| {
            let mut out = vec![rat(0); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        };
        let f = mul(
            &mul(&lin(ratio(1, 2)), &lin(ratio(1, 2))),
            &mul(&lin(rat(-3)), &lin(rat(5))),
        );
        assert_eq!(rational_roots(&f), Some(vec![rat(-3), ratio(1, 2), rat(5)]));
    }

    #[test]
    fn irrational_roots_rejected() {
        assert_eq!(rational_roots(&p(&[-2, 0, 1])), None);
    }
}
