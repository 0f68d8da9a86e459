//! Multi-modular elimination for large integer blocks.
//!
//! The rank modulo a prime never exceeds the rank over Q. To close the gap we
//! reconstruct the reduced-row-echelon kernel over Q from several primes and
//! check it exactly: `nullity` independent rational kernel vectors bound the
//! rank from above. Nothing is returned unless that check succeeds.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Give up (and let the caller fall back to exact elimination) after this
/// many primes.
const MAX_PRIMES: usize = 48;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < MAX_PRIMES {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the bases cover every `n < 3.4e14`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for a in [2u64, 3, 5, 7, 11, 13, 17] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Dense matrix over `Z/p` with `p < 2^31`, so products fit in a `u64`.
struct ModMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    fn from_int(a: &[Vec<BigInt>], cols: usize, p: u64) -> Self {
        let mut data = Vec::with_capacity(a.len() * cols);
        for row in a {
            for x in row {
                data.push(if x.is_zero() { 0 } else { reduce(x, p) });
            }
        }
        ModMatrix { rows: a.len(), cols, p, data }
    }

    /// Row-reduces in place; with `full` the result is reduced row echelon
    /// form, otherwise only an echelon form. Returns the pivot columns.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(i) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if i != r {
                for j in c..cols {
                    self.data.swap(i * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], p);
            for j in c..cols {
                let e = &mut self.data[r * cols + j];
                *e = (*e * inv) % p;
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let lo = if full { 0 } else { r + 1 };
            for i in lo..rows {
                if i == r {
                    continue;
                }
                let row = if i < r {
                    &mut before[i * cols..(i + 1) * cols]
                } else {
                    let k = i - r - 1;
                    &mut after[k * cols..(k + 1) * cols]
                };
                let f = row[c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                for j in c..cols {
                    let pj = pivot_row[j];
                    if pj != 0 {
                        row[j] = (row[j] + nf * pj) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Rank of an integer matrix modulo the `k`-th working prime.
pub(crate) fn rank_mod_prime(a: &[Vec<BigInt>], cols: usize, k: usize) -> usize {
    ModMatrix::from_int(a, cols, primes()[k]).eliminate(false).len()
}

fn transpose(a: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Exact rank of an integer matrix, or `None` if the certificate could not
/// be completed within the prime budget.
pub(crate) fn certified_rank(a: &[Vec<BigInt>], cols: usize) -> Option<usize> {
    let rows = a.len();
    if rows == 0 || cols == 0 {
        return Some(0);
    }
    let r0 = rank_mod_prime(a, cols, 0);
    if r0 == rows.min(cols) {
        // a nonzero maximal minor mod p is nonzero over Z
        return Some(r0);
    }
    // certify on whichever side has the smaller kernel
    if cols - r0 <= rows - r0 {
        certify_right_kernel(a, cols)
    } else {
        let t = transpose(a, cols);
        certify_right_kernel(&t, rows)
    }
}

fn certify_right_kernel(a: &[Vec<BigInt>], cols: usize) -> Option<usize> {
    let mut pivots: Option<Vec<usize>> = None;
    // kernel entries as residues modulo `modulus`, one vector per free column
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<Vec<(BigInt, BigInt)>>> = None;

    for &p in primes() {
        let mut m = ModMatrix::from_int(a, cols, p);
        let piv = m.eliminate(true);
        match &pivots {
            Some(old) if old.len() > piv.len() => continue,
            Some(old) if old.len() == piv.len() && old != &piv => {
                // same rank, different pattern: keep the lexicographically earlier one
                if old < &piv {
                    continue;
                }
                pivots = None;
            }
            Some(old) if old.len() < piv.len() => pivots = None,
            _ => {}
        }
        let fresh = pivots.is_none();
        if fresh {
            residues.clear();
            modulus = BigInt::one();
            last = None;
        }
        let free: Vec<usize> = free_columns(&piv, cols);
        let kernel: Vec<Vec<u64>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (i, &pc) in piv.iter().enumerate() {
                    let e = m.data[i * cols + f];
                    v[pc] = if e == 0 { 0 } else { p - e };
                }
                v
            })
            .collect();
        if fresh {
            residues = kernel.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            modulus = BigInt::from(p);
            pivots = Some(piv);
        } else {
            let pb = BigInt::from(p);
            for (acc, v) in residues.iter_mut().zip(&kernel) {
                for (x, &y) in acc.iter_mut().zip(v) {
                    *x = crt(x, &modulus, y, &pb);
                }
            }
            modulus *= &pb;
        }
        if free_columns(pivots.as_ref().unwrap(), cols).is_empty() {
            return Some(pivots.unwrap().len());
        }
        let Some(recon) = reconstruct_all(&residues, &modulus) else {
            continue;
        };
        // require one extra prime of agreement before the (costly) exact check
        if last.as_ref() == Some(&recon) && verify_kernel(a, &recon) {
            return Some(pivots.unwrap().len());
        }
        last = Some(recon);
    }
    None
}

fn free_columns(pivots: &[usize], cols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

/// Chinese remaindering of `x mod m` with `y mod p`, result in `[0, m*p)`.
fn crt(x: &BigInt, m: &BigInt, y: u64, p: &BigInt) -> BigInt {
    let m_mod_p = reduce(m, p.to_u64_digits().1[0]);
    let pu = p.to_u64_digits().1[0];
    let x_mod_p = reduce(x, pu);
    let diff = (y + pu - x_mod_p) % pu;
    let t = mul_mod(diff, inv_mod(m_mod_p, pu), pu);
    x + m * BigInt::from(t)
}

fn reconstruct_all(res: &[Vec<BigInt>], modulus: &BigInt) -> Option<Vec<Vec<(BigInt, BigInt)>>> {
    let bound = (modulus / 2u32).sqrt();
    res.iter()
        .map(|v| v.iter().map(|x| rational_reconstruct(x, modulus, &bound)).collect())
        .collect()
}

/// Finds `n/d` with `|n|, d <= bound` and `n = x d (mod m)`.
fn rational_reconstruct(x: &BigInt, m: &BigInt, bound: &BigInt) -> Option<(BigInt, BigInt)> {
    if x.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.sign() == Sign::Minus {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

fn verify_kernel(a: &[Vec<BigInt>], kernel: &[Vec<(BigInt, BigInt)>]) -> bool {
    for v in kernel {
        let lcm = v.iter().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
        let scaled: Vec<BigInt> = v.iter().map(|(n, d)| n * (&lcm / d)).collect();
        for row in a {
            let mut s = BigInt::zero();
            for (x, y) in row.iter().zip(&scaled) {
                if !x.is_zero() && !y.is_zero() {
                    s += x * y;
                }
            }
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}
