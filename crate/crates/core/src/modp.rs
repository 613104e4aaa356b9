//! Rank modulo the Mersenne prime 2^61 - 1.
//!
//! `rank mod p <= rank over Q` always, so a modular rank that already reaches
//! a known upper bound certifies the rational rank exactly. Regularity checks
//! use this: the centralizer of any element has dimension at least `rank g`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::Rational;

pub const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    let prod = (a as u128) * (b as u128);
    let lo = (prod as u64) & P;
    let hi = (prod >> 61) as u64;
    let s = lo + hi;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = if m < BigInt::zero() { m + BigInt::from(P) } else { m };
    m.to_u64().expect("residue fits in u64")
}

/// Residue of a rational, or `None` if `p` divides the denominator.
pub fn reduce(r: &Rational) -> Option<u64> {
    let d = reduce_int(r.denom());
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(r.numer()), inv(d)))
}

/// Rank of rational rows modulo `P`; `None` when some denominator vanishes.
pub fn rank_of_rows(rows: &[Vec<Rational>], ncols: usize) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for r in rows {
        let row: Option<Vec<u64>> = r.iter().map(reduce).collect();
        m.push(row?);
    }
    Some(rank_u64(&mut m, ncols))
}

fn rank_u64(m: &mut [Vec<u64>], ncols: usize) -> usize {
    let nrows = m.len();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, p);
        let pinv = inv(m[r][col]);
        let (head, tail) = m.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mul(row[col], pinv);
            for j in col..ncols {
                if prow[j] != 0 {
                    row[j] = (row[j] + P - mul(f, prow[j])) % P;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};
    use alloc::vec;

    #[test]
    fn field_inverse() {
        for a in [1u64, 2, 3, 12345, P - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn rank_matches_exact_on_small_matrix() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![ratio(1, 2), rat(0), rat(-7)],
        ];
        assert_eq!(rank_of_rows(&rows, 3), Some(2));
        assert_eq!(crate::linalg::rank_of_rows(&rows, 3), 2);
    }
}
