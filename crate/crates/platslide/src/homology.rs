//! First homology of the closed manifolds, two independent ways.
//!
//! A plat-slide word set abelianizes to a relator matrix for H_1 of the
//! closed 3-manifold: drop every `b<j>`, read `a<j>` as the j-th meridian
//! generator, and take exponent sums.  Smith normal form over the integers
//! (arbitrary precision, no overflow games) turns the matrix into
//! `Z^rank + Z/d1 + Z/d2 + …` with `d1 | d2 | …`.
//!
//! For the periodic Takahashi manifolds there is a second route: they are
//! Dehn surgery on a cyclic chain of 2n unknots with coefficients
//! alternating p/q, r/s, so the linking-matrix presentation gives H_1
//! without ever building a Heegaard diagram.  The two routes are played
//! against each other in the tests.

use crate::word::{Gen, Word};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// A finite presentation with generators `x1..x<generators>`; each relator
/// is a reduced sequence of (generator index, exponent) runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Vec<(usize, i64)>>,
}

/// Turn plat-slide words into a presentation of the fundamental group of the
/// closed manifold: delete `b<j>`, map `a<j>` to `x<j>`, reduce freely.
/// Words with braid letters are rejected — they are not curve words.
pub fn presentation_from_psl(words: &[Word], generators: usize) -> Result<Presentation> {
    let mut relators = Vec::with_capacity(words.len());
    for w in words {
        let mut rel: Vec<(usize, i64)> = Vec::new();
        for l in w.letters() {
            match l.gen {
                Gen::Sigma => {
                    return Err(Error::InvalidParams(format!(
                        "word {} has a braid letter; cannot read it as a curve word",
                        w
                    )))
                }
                Gen::Beta => {}
                Gen::Alpha => {
                    if l.index > generators {
                        return Err(Error::InvalidParams(format!(
                            "generator index {} exceeds {}",
                            l.index, generators
                        )));
                    }
                    match rel.last_mut() {
                        Some((i, e)) if *i == l.index => {
                            *e += l.exp;
                            if *e == 0 {
                                rel.pop();
                            }
                        }
                        _ => rel.push((l.index, l.exp)),
                    }
                }
            }
        }
        relators.push(rel);
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

/// Exponent-sum matrix of a presentation: one row per relator, one column
/// per generator.
pub fn relator_matrix(p: &Presentation) -> Vec<Vec<BigInt>> {
    p.relators
        .iter()
        .map(|rel| {
            let mut row = vec![BigInt::zero(); p.generators];
            for &(i, e) in rel {
                row[i - 1] += e;
            }
            row
        })
        .collect()
}

/// H_1 as free rank plus torsion coefficients in divisibility order, each >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Homology {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::from(1);
        for t in &self.torsion {
            o *= t;
        }
        Some(o)
    }
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Smith invariant factors of an integer matrix: the diagonal of the Smith
/// normal form, nonnegative, each dividing the next, zeros trailing.  The
/// length is min(rows, cols).
pub fn smith_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let size = rows.min(cols);
    let mut inv = Vec::with_capacity(size);
    let mut top = 0;
    while top < size {
        // find a nonzero entry of least magnitude in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }

        // clear the pivot row and column; restart whenever a remainder
        // strictly smaller than the pivot shows up
        let mut dirty = false;
        for i in top + 1..rows {
            if m[i][top].is_zero() {
                continue;
            }
            let q = &m[i][top] / &m[top][top];
            for j in top..cols {
                let t = &q * &m[top][j];
                m[i][j] -= t;
            }
            if !m[i][top].is_zero() {
                dirty = true;
            }
        }
        for j in top + 1..cols {
            if m[top][j].is_zero() {
                continue;
            }
            let q = &m[top][j] / &m[top][top];
            for i in top..rows {
                let t = &q * &m[i][top];
                m[i][j] -= t;
            }
            if !m[top][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }

        // pivot must divide everything below-right; if not, fold the
        // offending row in and redo this step
        let mut fixed = true;
        'scan: for i in top + 1..rows {
            for j in top + 1..cols {
                if (&m[i][j] % &m[top][top]).is_zero() {
                    continue;
                }
                for jj in top..cols {
                    let t = m[i][jj].clone();
                    m[top][jj] += t;
                }
                fixed = false;
                break 'scan;
            }
        }
        if !fixed {
            continue;
        }
        inv.push(m[top][top].abs());
        top += 1;
    }
    inv.resize(size, BigInt::zero());
    inv
}

/// H_1 of the cokernel Z^cols / rowspace(m).
pub fn homology_of_matrix(m: Vec<Vec<BigInt>>, cols: usize) -> Homology {
    let rank_bound = m.len().min(cols);
    let inv = smith_invariants(m);
    let nonzero = inv.iter().take(rank_bound).filter(|d| !d.is_zero()).count();
    let torsion = inv
        .iter()
        .filter(|d| **d > BigInt::from(1))
        .cloned()
        .collect();
    Homology {
        free_rank: cols - nonzero,
        torsion,
    }
}

pub fn homology_of_presentation(p: &Presentation) -> Homology {
    homology_of_matrix(relator_matrix(p), p.generators)
}

/// Slow reference for the Smith invariants: d_k = gcd of all k×k minors,
/// invariant factor s_k = d_k / d_{k-1}.  Exponential in the matrix size;
/// used by the tests to check the fast routine.
pub fn minor_gcd_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let size = rows.min(cols);
    let mut out = Vec::with_capacity(size);
    let mut prev = BigInt::from(1);
    for k in 1..=size {
        let mut g = BigInt::zero();
        for ri in subsets(rows, k) {
            for ci in subsets(cols, k) {
                let d = det(m, &ri, &ci);
                g = gcd_big(g, d);
            }
        }
        if g.is_zero() {
            // all larger minors vanish as well
            out.resize(size, BigInt::zero());
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn gcd_big(a: BigInt, b: BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn det(m: &[Vec<BigInt>], ri: &[usize], ci: &[usize]) -> BigInt {
    let k = ri.len();
    if k == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for (pos, &r) in ri.iter().enumerate() {
        let sub_r: Vec<usize> = ri
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &x)| x)
            .collect();
        let term = &m[r][ci[0]] * det(m, &sub_r, &ci[1..]);
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Linking-matrix presentation of H_1 for the periodic Takahashi manifold
/// T_n(p/q, r/s): surgery on a cyclic chain of 2n unknots, coefficient p/q
/// on the odd components, r/s on the even ones, consecutive components
/// clasped with alternating signs.  Row m reads
/// `num_m x_m + den_m (± x_{m+1} ∓ x_{m-1})` with indices mod 2n.
pub fn takahashi_surgery_matrix(n: usize, p: i64, q: i64, r: i64, s: i64) -> Vec<Vec<BigInt>> {
    let size = 2 * n;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for row in 1..=size {
        let (num, den) = if row % 2 == 1 { (p, q) } else { (r, s) };
        m[row - 1][row - 1] += num;
        let succ = row % size; // 0-based index of component row+1
        let pred = (row + size - 2) % size;
        let eps_succ: i64 = if row % 2 == 1 { 1 } else { -1 };
        let eps_pred = -eps_succ; // edge row-1 has the opposite parity
        m[row - 1][succ] += eps_succ * den;
        m[row - 1][pred] += eps_pred * den;
    }
    m
}

pub fn takahashi_surgery_h1(n: usize, p: i64, q: i64, r: i64, s: i64) -> Homology {
    let m = takahashi_surgery_matrix(n, p, q, r, s);
    homology_of_matrix(m, 2 * n)
}

pub fn takahashi_surgery_h1_of(params: &crate::takahashi::TakahashiParams) -> Homology {
    takahashi_surgery_h1(
        params.n,
        params.p as i64,
        params.q as i64,
        params.r as i64,
        params.s as i64,
    )
}

/// H_1 from the Dunwoody curve words.
pub fn dunwoody_h1(t: crate::dunwoody::DunwoodyTuple) -> Result<Homology> {
    let words = crate::dunwoody::psl_set(t)?;
    let p = presentation_from_psl(&words, t.genus())?;
    Ok(homology_of_presentation(&p))
}

/// H_1 from the Takahashi curve words.
pub fn takahashi_h1(params: crate::takahashi::TakahashiParams) -> Result<Homology> {
    let words = crate::takahashi::tak_psl_set(params)?;
    let p = presentation_from_psl(&words, params.genus())?;
    Ok(homology_of_presentation(&p))
}
