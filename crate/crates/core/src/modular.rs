//! Multimodular kernels over Q. The reduced echelon form is computed modulo
//! word-size primes, lifted by CRT and rational reconstruction, and accepted
//! only after an exact check `A v = 0`. Since `rank_p A <= rank_Q A`, a
//! verified set of `dim ker_p A` independent vectors is a basis of `ker_Q A`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::Mat;
use crate::scalar::{FieldSpec, Scalar};

const MAX_PRIMES: usize = 400;

/// Rows scaled to primitive integer vectors.
fn integer_rows(m: &Mat) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row: Vec<BigRational> = (0..m.cols).map(|c| m[(r, c)].to_big_rational()).collect();
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn primes() -> impl Iterator<Item = u64> {
    ((1u64 << 20) + 1..1u64 << 31).rev().step_by(2).filter(|&p| is_prime(p))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced echelon form modulo `p`: `(matrix, pivot columns)`.
fn rref_mod(a: &[Vec<u64>], cols: usize, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut a = a.to_vec();
    let mut piv = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(k) = (row..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(k, row);
        let inv = pow_mod(a[row][col], p - 2, p);
        for x in a[row].iter_mut().skip(col) {
            *x = *x * inv % p;
        }
        let pr = a[row].clone();
        for (r, other) in a.iter_mut().enumerate() {
            let f = other[col];
            if r == row || f == 0 {
                continue;
            }
            for c in col..cols {
                if pr[c] != 0 {
                    other[c] = (other[c] + p - f * pr[c] % p) % p;
                }
            }
        }
        piv.push(col);
        row += 1;
    }
    (a, piv)
}

/// The default prime for single-prime rank certificates.
const CERT_PRIME: u64 = 2_147_483_647;

/// `v` modulo the certificate prime, or `None` if a denominator vanishes.
pub(crate) fn reduce_vec(v: &[Scalar]) -> Option<Vec<u64>> {
    let p = BigInt::from(CERT_PRIME);
    v.iter()
        .map(|x| {
            let q = x.to_big_rational();
            let d = q.denom().mod_floor(&p).to_u64()?;
            if d == 0 {
                return None;
            }
            let n = q.numer().mod_floor(&p).to_u64()?;
            Some(n * pow_mod(d, CERT_PRIME - 2, CERT_PRIME) % CERT_PRIME)
        })
        .collect()
}

/// Rank modulo the certificate prime of vectors of length `cols`. It never
/// exceeds the rank over Q of the vectors they reduce from.
pub(crate) fn rank_mod(rows: &[&Vec<u64>], cols: usize) -> usize {
    let a: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
    if a.is_empty() {
        return 0;
    }
    rref_mod(&a, cols, CERT_PRIME).1.len()
}

/// Rank of `m` modulo the certificate prime, if every entry reduces.
pub(crate) fn rank_mod_mat(m: &Mat) -> Option<usize> {
    let rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| reduce_vec(&(0..m.cols).map(|c| m[(r, c)].clone()).collect::<Vec<_>>()))
        .collect::<Option<_>>()?;
    Some(rank_mod(&rows.iter().collect::<Vec<_>>(), m.cols))
}

/// Pivot columns of `m` modulo the certificate prime. Columns independent
/// modulo a prime are independent over Q.
pub(crate) fn pivots_mod(m: &Mat) -> Option<Vec<usize>> {
    let rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| reduce_vec(&(0..m.cols).map(|c| m[(r, c)].clone()).collect::<Vec<_>>()))
        .collect::<Option<_>>()?;
    Some(rref_mod(&rows, m.cols, CERT_PRIME).1)
}

/// Inverse of a square matrix over Q as the kernel of `[S | -I]`: the
/// kernel vector that is `e_j` on the right block is `(S^{-1} e_j, e_j)`.
pub(crate) fn inverse_q(m: &Mat) -> Option<Mat> {
    let n = m.rows;
    let aug = m.hstack(&Mat::identity(m.field, n).scale(&m.field.from_i64(-1)));
    let k = kernel_q(&aug)?;
    if k.len() != n {
        return None;
    }
    let mut inv = Mat::zeros(m.field, n, n);
    for (j, v) in k.iter().enumerate() {
        // Free columns are the right block, in order, when `S` is invertible.
        if (0..n).any(|c| !(if c == j { v[n + c].is_one() } else { v[n + c].is_zero() })) {
            return None;
        }
        for r in 0..n {
            inv[(r, j)] = v[r].clone();
        }
    }
    Some(inv)
}

/// `n/d` with `|n|, d <= sqrt(m/2)` and `n = a d mod m`.
fn reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.clone().gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn verified(rows: &[Vec<BigInt>], v: &[BigRational]) -> bool {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let w: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    rows.iter().all(|row| {
        row.iter()
            .zip(&w)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

/// Kernel basis over Q, or `None` if the prime budget runs out.
pub(crate) fn kernel_q(m: &Mat) -> Option<Vec<Vec<Scalar>>> {
    debug_assert_eq!(m.field, FieldSpec::Rationals);
    let rows = integer_rows(m);
    let cols = m.cols;
    // Residues of the free-column entries of the kernel vectors, by CRT.
    let mut state: Option<(Vec<usize>, Vec<Vec<BigInt>>, BigInt)> = None;
    // Reconstruction is tried only when the prime count reaches the next
    // checkpoint, which grows geometrically.
    let mut used = 0usize;
    let mut checkpoint = 1usize;
    for p in primes().take(MAX_PRIMES) {
        let pb = BigInt::from(p);
        let red: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect())
            .collect();
        let (r, piv) = rref_mod(&red, cols, p);
        if let Some((old, _, _)) = &state {
            // Unlucky primes lose rank or shift pivots to the right.
            if piv.len() < old.len() || (piv.len() == old.len() && piv > *old) {
                continue;
            }
            if piv != *old {
                state = None;
                used = 0;
                checkpoint = 1;
            }
        }
        let free = crate::linalg::free_columns(cols, &piv);
        let vecs: Vec<Vec<u64>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u64; cols];
                v[fc] = 1;
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = (p - r[i][fc]) % p;
                }
                v
            })
            .collect();
        let (piv, acc, modulus) = match state.take() {
            None => (
                piv,
                vecs.iter()
                    .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                    .collect(),
                pb,
            ),
            Some((piv, acc, modulus)) => {
                // x = a mod M, x = b mod p.
                let minv = BigInt::from(pow_mod((&modulus % p).to_u64().unwrap(), p - 2, p));
                let acc: Vec<Vec<BigInt>> = acc
                    .into_iter()
                    .zip(&vecs)
                    .map(|(av, bv)| {
                        av.into_iter()
                            .zip(bv)
                            .map(|(a, &b)| {
                                let t = ((BigInt::from(b) - &a) * &minv).mod_floor(&pb);
                                a + &modulus * t
                            })
                            .collect()
                    })
                    .collect();
                (piv, acc, &modulus * &pb)
            }
        };
        used += 1;
        if used < checkpoint {
            state = Some((piv, acc, modulus));
            continue;
        }
        checkpoint = used + used.div_ceil(2);
        let lifted: Option<Vec<Vec<BigRational>>> = acc
            .iter()
            .map(|v| v.iter().map(|x| reconstruct(x, &modulus)).collect())
            .collect();
        if let Some(l) = lifted {
            if l.iter().all(|v| verified(&rows, v)) {
                return Some(
                    l.into_iter()
                        .map(|v| v.into_iter().map(Scalar::from_big_rational).collect())
                        .collect(),
                );
            }
        }
        state = Some((piv, acc, modulus));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_rref_kernel() {
        let f = FieldSpec::Rationals;
        let rows = vec![vec![2, -3, 5, 7, 0], vec![1, 4, -2, 0, 9], vec![3, 1, 3, 7, 9]];
        let m = Mat::from_rows(
            f,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.from_i64(x)).collect())
                .collect(),
        );
        let (r, piv) = crate::linalg::rref(&m);
        assert_eq!(kernel_q(&m).unwrap(), crate::linalg::kernel_from_rref(&r, &piv));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(999_983u64);
        let x = BigRational::new(BigInt::from(-7), BigInt::from(11));
        // -7 * 11^{-1} mod m via extended gcd.
        let e = BigInt::from(11).extended_gcd(&m);
        let a = (BigInt::from(-7) * e.x).mod_floor(&m);
        assert_eq!(reconstruct(&a, &m), Some(x));
    }
}
