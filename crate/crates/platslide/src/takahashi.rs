//! Open Heegaard diagrams of periodic Takahashi manifolds T_n(p/q, r/s).
//!
//! T_n(p/q, r/s) is Dehn surgery on a cyclic chain of 2n unknots whose
//! coefficients alternate p/q and r/s.  Its genus-2n diagram has 2n upper
//! and 2n lower disks in columns 1..2n; the curve over an odd handle winds
//! p/q-fashion through the neighbouring columns, the curve over an even
//! handle r/s-fashion.  Unlike the Dunwoody case the boundary gluing is
//! straight (D_i^u against D_i^d, equal labels), all the twisting being
//! carried by the arcs.
//!
//! The arc families: A^U/A^L run along the top/bottom between columns
//! 2i, 2i+1; B drops from an odd upper disk to the next lower disk; C is
//! vertical; F and G pass over a column between its two upper neighbours
//! (F over odd columns, G over even), X and Y underneath (X over odd,
//! Y over even).  Coefficients p/q, r/s must be nonnegative, in lowest
//! terms and different from 1.

use crate::dunwoody::Row;
use crate::word::{Context, Gen, Word};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TakahashiParams {
    pub n: usize,
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub s: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl TakahashiParams {
    pub fn new(n: usize, p: u64, q: u64, r: u64, s: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        for (num, den, name) in [(p, q, "p/q"), (r, s, "r/s")] {
            if den == 0 {
                return Err(Error::InvalidParams(format!("{} has denominator 0", name)));
            }
            if gcd(num, den) != 1 {
                return Err(Error::InvalidParams(format!(
                    "{} = {}/{} is not in lowest terms",
                    name, num, den
                )));
            }
            if num == den {
                return Err(Error::InvalidParams(format!(
                    "surgery coefficient {} must differ from 1",
                    name
                )));
            }
        }
        Ok(TakahashiParams { n, p, q, r, s })
    }

    pub fn genus(&self) -> usize {
        2 * self.n
    }

    fn modc(&self, x: i64) -> usize {
        ((x - 1).rem_euclid(2 * self.n as i64) + 1) as usize
    }
}

impl fmt::Display for TakahashiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}({}/{}, {}/{})", self.n, self.p, self.q, self.r, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TakKind {
    AU,
    AL,
    B,
    C,
    F,
    G,
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TakPos {
    pub row: Row,
    pub col: usize,
    pub label: usize,
}

/// `base` is the column the family is attached to; ends[0] is the start of
/// the forward traversal direction (rightward resp. downward).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TakArc {
    pub kind: TakKind,
    pub base: usize,
    pub copy: usize,
    pub ends: [TakPos; 2],
}

/// geometric span: (row, forward-start column, forward-end column)
fn arc_span(params: &TakahashiParams, kind: TakKind, base: usize) -> (Row, Row, usize, usize) {
    let k = base as i64;
    let m = |x| params.modc(x);
    match kind {
        TakKind::AU => (Row::Upper, Row::Upper, m(k), m(k + 1)),
        TakKind::AL => (Row::Lower, Row::Lower, m(k), m(k + 1)),
        TakKind::B => (Row::Upper, Row::Lower, m(k), m(k + 1)),
        TakKind::C => (Row::Upper, Row::Lower, m(k), m(k)),
        TakKind::F | TakKind::G => (Row::Upper, Row::Upper, m(k - 1), m(k + 1)),
        TakKind::X | TakKind::Y => (Row::Lower, Row::Lower, m(k - 1), m(k + 1)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Step {
    kind: TakKind,
    base: usize,
    fwd: bool,
}

/// Split `excess` into `strands` near-even parts, the earlier strands
/// taking the surplus: part_i = ceil(i e / s) - ceil((i-1) e / s).
fn distribute(excess: u64, strands: u64, i: u64) -> u64 {
    let ceil = |x: u64| x.div_ceil(strands);
    ceil(i * excess) - ceil((i - 1) * excess)
}

/// The designed curve over handle m (odd handles wind p/q, even r/s).
fn handle_curve(params: &TakahashiParams, m: usize) -> Vec<Step> {
    let odd = m % 2 == 1;
    let (num, den) = if odd {
        (params.p, params.q)
    } else {
        (params.r, params.s)
    };
    let fwd = |kind, base| Step { kind, base, fwd: true };
    let bwd = |kind, base| Step { kind, base, fwd: false };
    let entry = if odd { TakKind::B } else { TakKind::AU };
    let comb = if odd {
        bwd(TakKind::F, m)
    } else {
        bwd(TakKind::Y, m)
    };
    let repeat = if odd {
        fwd(TakKind::X, m)
    } else {
        fwd(TakKind::G, m)
    };
    let tail = if odd {
        fwd(TakKind::AL, params.modc(m as i64 - 1))
    } else {
        fwd(TakKind::B, params.modc(m as i64 - 1))
    };

    if num == 0 {
        return if odd {
            vec![comb, repeat]
        } else {
            vec![repeat, comb]
        };
    }
    let mut steps = Vec::new();
    if num < den {
        for i in 1..=num {
            steps.push(fwd(entry, m));
            steps.push(comb);
            for _ in 0..distribute(den - num, num, i) {
                steps.push(repeat);
                steps.push(comb);
            }
            steps.push(tail);
        }
    } else {
        for i in 1..=den {
            steps.push(fwd(entry, m));
            steps.push(comb);
            steps.push(tail);
            for _ in 0..distribute(num - den, den, i) {
                steps.push(fwd(TakKind::C, m));
            }
        }
    }
    steps
}

fn expected_mult(params: &TakahashiParams, kind: TakKind, base: usize) -> u64 {
    let TakahashiParams { p, q, r, s, .. } = *params;
    let odd = base % 2 == 1;
    match kind {
        TakKind::AU => r.min(s),
        TakKind::AL => p.min(q),
        TakKind::B => p.min(q) + r.min(s),
        TakKind::C => {
            if odd {
                p.saturating_sub(q)
            } else {
                r.saturating_sub(s)
            }
        }
        TakKind::F => q,
        TakKind::G => s.saturating_sub(r),
        TakKind::X => q.saturating_sub(p),
        TakKind::Y => s,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraversedTak {
    pub arc: usize,
    pub from_end: usize,
}

#[derive(Debug, Clone)]
pub struct TakahashiDiagram {
    pub params: TakahashiParams,
    pub arcs: Vec<TakArc>,
    /// curves over handles 1, 3, …, 2n-1, then 2, 4, …, 2n
    pub curves: Vec<Vec<TraversedTak>>,
    /// labels in use on column j (the same on the upper and lower disk)
    pub slots: Vec<usize>,
}

impl TakahashiDiagram {
    pub fn build(params: TakahashiParams) -> Result<TakahashiDiagram> {
        let cols = 2 * params.n;
        let handle_order = (1..=cols).step_by(2).chain((2..=cols).step_by(2));
        let mut arcs: Vec<TakArc> = Vec::new();
        let mut curves = Vec::with_capacity(cols);
        let mut next_label = vec![0usize; cols + 1];
        let mut copies: std::collections::HashMap<(TakKind, usize), usize> =
            std::collections::HashMap::new();
        let placeholder = TakPos {
            row: Row::Upper,
            col: 0,
            label: 0,
        };

        for m in handle_order {
            let steps = handle_curve(&params, m);
            let ids: Vec<usize> = steps
                .iter()
                .map(|st| {
                    let copy = copies.entry((st.kind, st.base)).or_insert(0);
                    *copy += 1;
                    arcs.push(TakArc {
                        kind: st.kind,
                        base: st.base,
                        copy: *copy,
                        ends: [placeholder; 2],
                    });
                    arcs.len() - 1
                })
                .collect();
            // junction between consecutive steps: the walk leaves one arc and
            // enters the next through the glued boundary of one column
            for t in 0..steps.len() {
                let u = (t + 1) % steps.len();
                let (st, su) = (steps[t], steps[u]);
                let (s0, e0, c0, c1) = arc_span(&params, st.kind, st.base);
                let (exit_row, exit_col) = if st.fwd { (e0, c1) } else { (s0, c0) };
                let (t0, f0, d0, d1) = arc_span(&params, su.kind, su.base);
                let (enter_row, enter_col) = if su.fwd { (t0, d0) } else { (f0, d1) };
                if exit_col != enter_col || exit_row == enter_row {
                    return Err(Error::Diagram(format!(
                        "curve over handle {} of {} does not close",
                        m, params
                    )));
                }
                next_label[exit_col] += 1;
                let label = next_label[exit_col];
                arcs[ids[t]].ends[usize::from(st.fwd)] = TakPos {
                    row: exit_row,
                    col: exit_col,
                    label,
                };
                arcs[ids[u]].ends[usize::from(!su.fwd)] = TakPos {
                    row: enter_row,
                    col: enter_col,
                    label,
                };
            }
            curves.push(
                steps
                    .iter()
                    .zip(&ids)
                    .map(|(st, &arc)| TraversedTak {
                        arc,
                        from_end: usize::from(!st.fwd),
                    })
                    .collect(),
            );
        }

        for (arc, a) in arcs.iter().enumerate() {
            if a.ends.iter().any(|p| p.col == 0) {
                return Err(Error::Diagram(format!("arc {} left unattached", arc)));
            }
            let expect = expected_mult(&params, a.kind, a.base);
            if (a.copy as u64) > expect {
                return Err(Error::Diagram(format!(
                    "family {:?}/{} of {} exceeds its multiplicity {}",
                    a.kind, a.base, params, expect
                )));
            }
        }
        for (&(kind, base), &count) in &copies {
            if count as u64 != expected_mult(&params, kind, base) {
                return Err(Error::Diagram(format!(
                    "family {:?}/{} of {} has {} arcs, expected {}",
                    kind,
                    base,
                    params,
                    count,
                    expected_mult(&params, kind, base)
                )));
            }
        }

        // slot occupancy must be a clean bijection per circle
        let diag = TakahashiDiagram {
            params,
            arcs,
            curves,
            slots: next_label[1..].to_vec(),
        };
        let mut seen = std::collections::HashSet::new();
        for a in &diag.arcs {
            for p in a.ends {
                if !seen.insert(p) {
                    return Err(Error::Diagram(format!(
                        "slot collision at {:?} in {}",
                        p, params
                    )));
                }
            }
        }
        Ok(diag)
    }
}

/// Symbol attached to one traversed arc; `name` is the subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TakSymbol {
    pub kind: TakKind,
    pub forward: bool,
    pub name: usize,
}

impl fmt::Display for TakSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = match (self.kind, self.forward) {
            (TakKind::C, true) => "↓",
            (TakKind::C, false) => "↑",
            (_, true) => "→",
            (_, false) => "←",
        };
        let letter = match self.kind {
            TakKind::AU => "AU",
            TakKind::AL => "AL",
            TakKind::B => "B",
            TakKind::C => "C",
            TakKind::F => "F",
            TakKind::G => "G",
            TakKind::X => "X",
            TakKind::Y => "Y",
        };
        write!(f, "{}{}{}", arrow, letter, self.name)
    }
}

impl TakSymbol {
    /// dictionary entry in B_{2n,2}
    pub fn word(&self, params: &TakahashiParams) -> Word {
        let ctx = Context::new(params.genus(), 1);
        let m = self.name as i64;
        let (a, b) = (Gen::Alpha, Gen::Beta);
        let letters: Vec<(Gen, i64, i64)> = match (self.kind, self.forward) {
            (TakKind::AU, true) => vec![(b, m + 1, -1), (a, m + 1, 1)],
            (TakKind::AU, false) => vec![(b, m + 1, 1), (a, m, 1)],
            (TakKind::AL, true) => vec![(a, m + 1, -1)],
            (TakKind::AL, false) => vec![(a, m, -1)],
            (TakKind::B, true) => vec![(a, m + 1, -1)],
            (TakKind::B, false) => vec![(a, m, 1)],
            (TakKind::C, true) => vec![(a, m, -1)],
            (TakKind::C, false) => vec![(a, m, 1)],
            (TakKind::F, true) => vec![
                (a, m + 1, -1),
                (b, m + 1, -1),
                (a, m + 1, 1),
                (b, m + 1, 1),
                (b, m + 2, -1),
                (a, m + 2, 1),
            ],
            (TakKind::F, false) => vec![
                (b, m, 1),
                (b, m - 1, -1),
                (a, m - 1, -1),
                (b, m - 1, 1),
                (a, m - 1, 1),
                (a, m - 2, 1),
            ],
            (TakKind::G, true) => vec![(b, m + 1, -1), (b, m + 2, -1), (a, m + 2, 1)],
            (TakKind::G, false) => vec![(b, m, 1), (b, m - 1, 1), (a, m - 2, 1)],
            (TakKind::X, true) => vec![(b, m + 2, -1), (a, m + 3, -1)],
            (TakKind::X, false) => vec![(b, m, -1), (a, m - 1, -1)],
            (TakKind::Y, true) => vec![(a, m + 2, -1)],
            (TakKind::Y, false) => vec![(a, m - 2, -1)],
        };
        Word::build(ctx, letters).expect("dictionary words have no braid letters")
    }
}

pub fn curve_symbols(diag: &TakahashiDiagram, curve: &[TraversedTak]) -> Vec<TakSymbol> {
    let params = &diag.params;
    curve
        .iter()
        .map(|tt| {
            let arc = diag.arcs[tt.arc];
            let forward = tt.from_end == 0;
            let k = arc.base as i64;
            let name = match (arc.kind, forward) {
                (TakKind::AU | TakKind::AL | TakKind::B | TakKind::C, _) => k,
                (TakKind::F | TakKind::G, true) => k - 1,
                (TakKind::F | TakKind::G, false) => k + 1,
                (TakKind::X, true) => k - 2,
                (TakKind::X, false) => k,
                (TakKind::Y, true) => k - 1,
                (TakKind::Y, false) => k + 1,
            };
            TakSymbol {
                kind: arc.kind,
                forward,
                name: params.modc(name),
            }
        })
        .collect()
}

pub fn curve_to_word(diag: &TakahashiDiagram, curve: &[TraversedTak]) -> Word {
    let mut w = Word::empty(Context::new(diag.params.genus(), 1));
    for sym in curve_symbols(diag, curve) {
        w = w.concat(&sym.word(&diag.params)).expect("same context");
    }
    w
}

/// Curve words ē_1 .. ē_2n: odd-handle curves first, then even.
pub fn tak_psl_set(params: TakahashiParams) -> Result<Vec<Word>> {
    let diag = TakahashiDiagram::build(params)?;
    Ok(diag
        .curves
        .iter()
        .map(|c| curve_to_word(&diag, c))
        .collect())
}

pub fn annotated_tak_psl_set(
    params: TakahashiParams,
) -> Result<Vec<(Vec<TakSymbol>, Word)>> {
    let diag = TakahashiDiagram::build(params)?;
    Ok(diag
        .curves
        .iter()
        .map(|c| (curve_symbols(&diag, c), curve_to_word(&diag, c)))
        .collect())
}
