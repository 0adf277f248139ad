//! Hom dimension by brute-force linear algebra on the representations.
//!
//! The intertwining equations have integer coefficients in `{-1, 0, 1}`; their
//! rank is computed modulo the Mersenne prime `2^61 - 1`.

use crate::quiver::{Quiver, Sign};
use crate::string::StringModule;

const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

/// Rank of a dense matrix over `F_p`, destroying it.
pub fn rank_mod_p(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = mul(*x, scale);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + P - mul(f, p)) % P;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of a string module, grouped by vertex: `basis[v]` lists cover positions.
struct Rep {
    basis: Vec<Vec<i64>>,
    start: i64,
    end: i64,
}

impl Rep {
    fn new(q: &Quiver, m: &StringModule) -> Rep {
        let mut basis = vec![Vec::new(); q.n()];
        for p in m.start() + 1..=m.end() {
            basis[q.residue(p)].push(p);
        }
        Rep { basis, start: m.start(), end: m.end() }
    }

    fn index(&self, q: &Quiver, p: i64) -> usize {
        self.basis[q.residue(p)].iter().position(|&x| x == p).unwrap()
    }

    /// Matrix of arrow `c` as `(target index, source index)` pairs with coefficient 1.
    fn arrow_entries(&self, q: &Quiver, c: usize) -> Vec<(usize, usize)> {
        let n = q.n() as i64;
        let mut out = Vec::new();
        let first = self.start + 1 + (c as i64 - (self.start + 1)).rem_euclid(n);
        let mut m = first;
        while m < self.end {
            let (lo, hi) = (self.index(q, m), self.index(q, m + 1));
            match q.sign(c) {
                Sign::Plus => out.push((hi, lo)),
                Sign::Minus => out.push((lo, hi)),
            }
            m += n;
        }
        out
    }
}

/// `dim Hom(M, N)` by solving `psi_c theta_s = theta_t phi_c` for every arrow `c`.
pub fn dim_hom_linear_algebra(q: &Quiver, m: &StringModule, n: &StringModule) -> usize {
    let rm = Rep::new(q, m);
    let rn = Rep::new(q, n);
    let nv = q.n();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + rn.basis[v].len() * rm.basis[v].len();
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return 0;
    }
    // theta_v[r][c] is unknown offset[v] + r * dim_m(v) + c.
    let var = |v: usize, r: usize, c: usize| offset[v] + r * rm.basis[v].len() + c;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for arrow in q.arrows() {
        let (s, t) = (arrow.source, arrow.target);
        let phi = rm.arrow_entries(q, arrow.index);
        let psi = rn.arrow_entries(q, arrow.index);
        // Entry (r, c) of psi*theta_s - theta_t*phi, r in N_t, c in M_s.
        for r in 0..rn.basis[t].len() {
            for c in 0..rm.basis[s].len() {
                let mut row = vec![0u64; unknowns];
                for &(pt, ps) in &psi {
                    if pt == r {
                        row[var(s, ps, c)] = (row[var(s, ps, c)] + 1) % P;
                    }
                }
                for &(ft, fs) in &phi {
                    if fs == c {
                        row[var(t, r, ft)] = (row[var(t, r, ft)] + P - 1) % P;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    unknowns - rank_mod_p(&mut rows, unknowns)
}
