//! Open Heegaard diagrams of Dunwoody manifolds.
//!
//! A 6-tuple (a, b, c, n, r, s) with a+b+c > 0 and n >= 1 describes a
//! diagram with cyclic symmetry of order n: n upper and n lower disks with
//! d = 2a+b+c boundary slots each, joined per period by a upper arcs,
//! a lower arcs, b diagonal arcs and c vertical arcs, the slot labels of
//! D_i^u rotated against D_i^d by the parameter r, and D_i^u glued to
//! D_{i+s}^d.  Closing the arcs through the glued boundaries yields the
//! curve system; if it is admissible (n curves whose complement in the
//! closed surface is connected) the diagram is a genus-n Heegaard diagram
//! and each curve reads off as a word in B_{n,2} via the symbol dictionary
//! below.

use crate::faces::{self, DiskSpec, SphereGraph};
use crate::word::{Context, Gen, Word};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DunwoodyTuple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl DunwoodyTuple {
    /// r is reduced mod 2a+b+c, s mod n.
    pub fn new(a: usize, b: usize, c: usize, n: usize, r: i64, s: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if a + b + c == 0 {
            return Err(Error::InvalidParams(
                "a + b + c must be positive".into(),
            ));
        }
        let d = (2 * a + b + c) as i64;
        Ok(DunwoodyTuple {
            a,
            b,
            c,
            n,
            r: r.rem_euclid(d) as usize,
            s: s.rem_euclid(n as i64) as usize,
        })
    }

    /// slots per disk
    pub fn d(&self) -> usize {
        2 * self.a + self.b + self.c
    }

    pub fn genus(&self) -> usize {
        self.n
    }

    fn modd(&self, x: i64) -> usize {
        ((x - 1).rem_euclid(self.d() as i64) + 1) as usize
    }

    fn modn(&self, x: i64) -> usize {
        ((x - 1).rem_euclid(self.n as i64) + 1) as usize
    }
}

impl fmt::Display for DunwoodyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.a, self.b, self.c, self.n, self.r, self.s
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Row {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Pos {
    pub row: Row,
    pub col: usize,
    pub label: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArcKind {
    Upper,
    Lower,
    Diagonal,
    Vertical,
}

/// One arc of the open diagram.  `family` is the period index i in 1..=n,
/// `copy` counts parallel arcs of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiagArc {
    pub kind: ArcKind,
    pub family: usize,
    pub copy: usize,
    pub ends: [Pos; 2],
}

#[derive(Debug, Clone)]
pub struct OpenDiagram {
    pub tuple: DunwoodyTuple,
    /// first label of the vertical block on the lower disks
    pub v: usize,
    pub arcs: Vec<DiagArc>,
    slot: Vec<Option<(u32, u8)>>,
}

/// One step of a curve: an arc together with the end it is entered from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraversedArc {
    pub arc: usize,
    pub from_end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve(pub Vec<TraversedArc>);

impl OpenDiagram {
    pub fn build(t: DunwoodyTuple) -> Result<OpenDiagram> {
        let (a, b, c, n) = (t.a as i64, t.b as i64, t.c as i64, t.n);
        let d = t.d();
        let v = t.modd(a + 2 * b + c + t.r as i64) as i64;
        let mut arcs = Vec::with_capacity(n * d);
        for col in 1..=n as i64 {
            for k in 1..=a {
                arcs.push(DiagArc {
                    kind: ArcKind::Upper,
                    family: col as usize,
                    copy: k as usize,
                    ends: [
                        Pos { row: Row::Upper, col: t.modn(col - 1), label: t.modd(b + k) },
                        Pos { row: Row::Upper, col: col as usize, label: t.modd(b + 1 - k) },
                    ],
                });
            }
            for k in 1..=a {
                arcs.push(DiagArc {
                    kind: ArcKind::Lower,
                    family: col as usize,
                    copy: k as usize,
                    ends: [
                        Pos { row: Row::Lower, col: t.modn(col - 1), label: t.modd(v + c + a - 1 + k) },
                        Pos { row: Row::Lower, col: col as usize, label: t.modd(v + c + a - k) },
                    ],
                });
            }
            for k in 1..=b {
                arcs.push(DiagArc {
                    kind: ArcKind::Diagonal,
                    family: col as usize,
                    copy: k as usize,
                    ends: [
                        Pos { row: Row::Upper, col: col as usize, label: t.modd(a + b + c + k) },
                        Pos { row: Row::Lower, col: t.modn(col - 1), label: t.modd(v + 2 * a + c + k - 1) },
                    ],
                });
            }
            for k in 1..=c {
                arcs.push(DiagArc {
                    kind: ArcKind::Vertical,
                    family: col as usize,
                    copy: k as usize,
                    ends: [
                        Pos { row: Row::Upper, col: col as usize, label: t.modd(a + b + k) },
                        Pos { row: Row::Lower, col: col as usize, label: t.modd(v + k - 1) },
                    ],
                });
            }
        }
        let mut diag = OpenDiagram {
            tuple: t,
            v: v as usize,
            arcs,
            slot: vec![None; 2 * n * d],
        };
        for (ai, arc) in diag.arcs.iter().enumerate() {
            for (ei, p) in arc.ends.iter().enumerate() {
                let idx = diag.pos_index(*p);
                if diag.slot[idx].replace((ai as u32, ei as u8)).is_some() {
                    return Err(Error::Diagram(format!(
                        "slot collision at {:?} for tuple {}",
                        p, t
                    )));
                }
            }
        }
        debug_assert!(diag.slot.iter().all(|s| s.is_some()));
        Ok(diag)
    }

    fn pos_index(&self, p: Pos) -> usize {
        let (n, d) = (self.tuple.n, self.tuple.d());
        let row = match p.row {
            Row::Upper => 0,
            Row::Lower => 1,
        };
        row * n * d + (p.col - 1) * d + (p.label - 1)
    }

    /// arc end occupying a boundary slot
    pub fn slot(&self, p: Pos) -> (usize, usize) {
        let (arc, end) = self.slot[self.pos_index(p)].unwrap();
        (arc as usize, end as usize)
    }

    /// crossing the glued boundary: D_i^u is identified with D_{i+s}^d,
    /// equal labels matching
    pub fn transport(&self, p: Pos) -> Pos {
        let t = self.tuple;
        match p.row {
            Row::Upper => Pos {
                row: Row::Lower,
                col: t.modn(p.col as i64 + t.s as i64),
                label: p.label,
            },
            Row::Lower => Pos {
                row: Row::Upper,
                col: t.modn(p.col as i64 - t.s as i64),
                label: p.label,
            },
        }
    }

    fn trace_from(&self, arc0: usize, end0: usize, visited: &mut [bool]) -> Curve {
        let mut out = Vec::new();
        let (mut arc, mut end) = (arc0, end0);
        loop {
            debug_assert!(!visited[arc]);
            visited[arc] = true;
            out.push(TraversedArc { arc, from_end: end });
            let exit = self.arcs[arc].ends[1 - end];
            let entry = self.transport(exit);
            let (na, ne) = self.slot(entry);
            if (na, ne) == (arc0, end0) {
                break;
            }
            arc = na;
            end = ne;
        }
        Curve(out)
    }

    /// Close the arcs through the glued boundaries into the curve system.
    /// The curve through the distinguished vertex a+b+1 of D_i^u comes
    /// i-th, entered through that vertex; leftover curves follow in order
    /// of their first arc.
    pub fn curves(&self) -> Vec<Curve> {
        let t = self.tuple;
        let mut visited = vec![false; self.arcs.len()];
        let mut out = Vec::new();
        for i in 1..=t.n {
            let anchor = Pos {
                row: Row::Upper,
                col: i,
                label: t.modd(t.a as i64 + t.b as i64 + 1),
            };
            let (arc, end) = self.slot(anchor);
            if !visited[arc] {
                out.push(self.trace_from(arc, end, &mut visited));
            }
        }
        for arc in 0..self.arcs.len() {
            if !visited[arc] {
                out.push(self.trace_from(arc, 0, &mut visited));
            }
        }
        out
    }

    /// circles-on-the-sphere view for the face analysis
    pub fn sphere_graph(&self) -> SphereGraph {
        let t = self.tuple;
        let (n, d) = (t.n, t.d());
        let disk_id = |p: Pos| match p.row {
            Row::Upper => p.col - 1,
            Row::Lower => n + p.col - 1,
        };
        let mut disks = Vec::with_capacity(2 * n);
        for _ in 0..n {
            disks.push(DiskSpec { slots: d, clockwise: true });
        }
        for _ in 0..n {
            disks.push(DiskSpec { slots: d, clockwise: false });
        }
        SphereGraph {
            disks,
            arcs: self
                .arcs
                .iter()
                .map(|arc| arc.ends.map(|p| (disk_id(p), p.label)))
                .collect(),
            glue: (1..=n as i64)
                .map(|i| (i as usize - 1, n + t.modn(i + t.s as i64) - 1))
                .collect(),
        }
    }
}

/// A traversed arc in symbol form; `name` is the subscript in the symbol,
/// `forward` distinguishes the two traversal directions of the arc family
/// (right/down against left/up).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DunSymbol {
    pub kind: ArcKind,
    pub forward: bool,
    pub name: usize,
}

impl fmt::Display for DunSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (arrow, letter) = match (self.kind, self.forward) {
            (ArcKind::Upper, true) => ("→", "AU"),
            (ArcKind::Upper, false) => ("←", "AU"),
            (ArcKind::Lower, true) => ("→", "AL"),
            (ArcKind::Lower, false) => ("←", "AL"),
            (ArcKind::Diagonal, true) => ("↓", "B"),
            (ArcKind::Diagonal, false) => ("↑", "B"),
            (ArcKind::Vertical, true) => ("↓", "C"),
            (ArcKind::Vertical, false) => ("↑", "C"),
        };
        write!(f, "{}{}{}", arrow, letter, self.name)
    }
}

impl DunSymbol {
    /// the word w_{i,s} = b<i> b<i+1> … with (n - s) mod n factors
    fn beta_run(t: DunwoodyTuple, i: i64, s: i64) -> Vec<(Gen, i64, i64)> {
        let len = (t.n as i64 - s).rem_euclid(t.n as i64);
        (0..len).map(|j| (Gen::Beta, i + j, 1)).collect()
    }

    /// dictionary entry for the symbol, in B_{n,2}
    pub fn word(&self, t: DunwoodyTuple) -> Word {
        let ctx = Context::new(t.n, 1);
        let m = self.name as i64;
        let n = t.n as i64;
        let s = t.s as i64;
        let letters: Vec<(Gen, i64, i64)> = match (self.kind, self.forward) {
            (ArcKind::Upper, true) => vec![(Gen::Beta, m - 1, -1), (Gen::Alpha, m - 1, 1)],
            (ArcKind::Upper, false) => vec![(Gen::Beta, m, 1), (Gen::Alpha, m + 1, 1)],
            (ArcKind::Lower, true) => vec![(Gen::Alpha, m - s - 1, -1)],
            (ArcKind::Lower, false) => vec![(Gen::Alpha, m - s + 1, -1)],
            (ArcKind::Vertical, true) => {
                let mut w = Self::beta_run(t, m, s);
                w.push((Gen::Alpha, m + n - s, -1));
                w
            }
            (ArcKind::Vertical, false) => {
                let mut w: Vec<_> = Self::beta_run(t, m, s)
                    .into_iter()
                    .rev()
                    .map(|(g, i, e)| (g, i, -e))
                    .collect();
                w.push((Gen::Alpha, m, 1));
                w
            }
            (ArcKind::Diagonal, true) => {
                let mut w = Self::beta_run(t, m, s + 1);
                w.push((Gen::Alpha, m + n - s - 1, -1));
                w
            }
            (ArcKind::Diagonal, false) => {
                let mut w: Vec<_> = Self::beta_run(t, m + 1, s + 1)
                    .into_iter()
                    .rev()
                    .map(|(g, i, e)| (g, i, -e))
                    .collect();
                w.push((Gen::Alpha, m + 1, 1));
                w
            }
        };
        Word::build(ctx, letters).expect("dictionary words have no braid letters")
    }
}

/// Symbol sequence of a traversed curve.
pub fn curve_symbols(diag: &OpenDiagram, curve: &Curve) -> Vec<DunSymbol> {
    let t = diag.tuple;
    curve
        .0
        .iter()
        .map(|ta| {
            let arc = diag.arcs[ta.arc];
            let i = arc.family as i64;
            let forward = ta.from_end == if arc.kind == ArcKind::Upper || arc.kind == ArcKind::Lower { 1 } else { 0 };
            let name = match (arc.kind, forward) {
                (ArcKind::Upper | ArcKind::Lower, true) => i,
                (ArcKind::Upper | ArcKind::Lower, false) => i - 1,
                (ArcKind::Vertical, _) => i,
                (ArcKind::Diagonal, true) => i,
                (ArcKind::Diagonal, false) => i - 1,
            };
            DunSymbol {
                kind: arc.kind,
                forward,
                name: t.modn(name),
            }
        })
        .collect()
}

pub fn curve_to_word(diag: &OpenDiagram, curve: &Curve) -> Word {
    let t = diag.tuple;
    let mut w = Word::empty(Context::new(t.n, 1));
    for sym in curve_symbols(diag, curve) {
        w = w.concat(&sym.word(t)).expect("same context");
    }
    w
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    /// number of curves in the closed system
    pub m: usize,
    /// rank of their classes in H_1 of the surface over Z/2
    pub curve_z2_rank: usize,
    /// pieces of the curve complement
    pub complement_components: usize,
    /// faces of the glued surface
    pub regions: usize,
    pub admissible: bool,
}

pub fn admissibility(t: DunwoodyTuple) -> Result<AdmissibilityReport> {
    let diag = OpenDiagram::build(t)?;
    let curves = diag.curves();
    let arc_sets: Vec<Vec<usize>> = curves
        .iter()
        .map(|c| c.0.iter().map(|ta| ta.arc).collect())
        .collect();
    let report = faces::analyze(&diag.sphere_graph(), &arc_sets)?;
    debug_assert_eq!(
        report.complement_components,
        curves.len() - report.curve_z2_rank + 1,
        "cut count identity for {}",
        t
    );
    Ok(AdmissibilityReport {
        m: curves.len(),
        curve_z2_rank: report.curve_z2_rank,
        complement_components: report.complement_components,
        regions: report.regions,
        admissible: curves.len() == t.n && report.complement_components == 1,
    })
}

pub fn is_admissible(t: DunwoodyTuple) -> Result<bool> {
    Ok(admissibility(t)?.admissible)
}

/// Independent admissibility check for testing: the curve count comes from
/// the cycle structure of the slot permutation (entering slot -> next
/// entering slot), each closed curve contributing one forward and one
/// backward cycle, and connectivity is decided through the rank criterion
/// (the complement of m curves is connected iff their classes have full
/// rank m over Z/2).
pub fn admissible_oracle(t: DunwoodyTuple) -> Result<bool> {
    let diag = OpenDiagram::build(t)?;
    let total = 2 * diag.arcs.len();
    let mut seen = vec![false; total];
    let mut cycles = 0usize;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let (mut arc, mut end) = (start / 2, start % 2);
        loop {
            seen[2 * arc + end] = true;
            let exit = diag.arcs[arc].ends[1 - end];
            let (na, ne) = diag.slot(diag.transport(exit));
            arc = na;
            end = ne;
            if 2 * arc + end == start {
                break;
            }
        }
    }
    debug_assert_eq!(cycles % 2, 0);
    let m = cycles / 2;
    if m != t.n {
        return Ok(false);
    }
    let curves = diag.curves();
    let arc_sets: Vec<Vec<usize>> = curves
        .iter()
        .map(|c| c.0.iter().map(|ta| ta.arc).collect())
        .collect();
    let report = faces::analyze(&diag.sphere_graph(), &arc_sets)?;
    Ok(report.curve_z2_rank == m)
}

/// Curve words of an admissible tuple, in curve order e_1 .. e_n.
pub fn psl_set(t: DunwoodyTuple) -> Result<Vec<Word>> {
    let report = admissibility(t)?;
    if !report.admissible {
        return Err(Error::InvalidParams(format!(
            "tuple {} is not admissible: {} curves, complement has {} pieces (class rank {})",
            t, report.m, report.complement_components, report.curve_z2_rank
        )));
    }
    let diag = OpenDiagram::build(t)?;
    Ok(diag
        .curves()
        .iter()
        .map(|c| curve_to_word(&diag, c))
        .collect())
}

/// Symbol sequences and words side by side, for display.
pub fn annotated_psl_set(t: DunwoodyTuple) -> Result<Vec<(Vec<DunSymbol>, Word)>> {
    let words = psl_set(t)?;
    let diag = OpenDiagram::build(t)?;
    Ok(diag
        .curves()
        .iter()
        .zip(words)
        .map(|(c, w)| (curve_symbols(&diag, c), w))
        .collect())
}

/// The gluing offset that makes (a, 0, 1, n, r, s̄) close up into the cyclic
/// branched cover of the (2a+1, 2r)-bridge construction: trace the curve
/// from the distinguished vertex of D_1^u through its vertical arc and
/// count signed horizontal progress until the next vertical arc.
pub fn compute_s_bar(a: usize, n: usize, r: i64) -> Result<i64> {
    let d = 2 * a as i64 + 1;
    let mut x = d;
    let mut y = (2 * r % d).abs();
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    if x != 1 {
        return Err(Error::InvalidParams(format!(
            "gcd(2a+1, 2r) = {} must be 1 (a = {}, r = {})",
            x, a, r
        )));
    }
    let t = DunwoodyTuple::new(a, 0, 1, n, r, 0)?;
    let diag = OpenDiagram::build(t)?;
    let mut pos = Pos {
        row: Row::Upper,
        col: 1,
        label: a + 1,
    };
    let mut drift = 0i64;
    let limit = 10 * diag.arcs.len() + 10;
    for step in 0.. {
        let (arc, end) = diag.slot(pos);
        let kind = diag.arcs[arc].kind;
        if kind == ArcKind::Vertical && step > 0 {
            return Ok(drift);
        }
        if step > limit {
            return Err(Error::Diagram(format!(
                "curve failed to return to a vertical arc for {}",
                t
            )));
        }
        match kind {
            ArcKind::Upper | ArcKind::Lower => {
                drift += if end == 0 { 1 } else { -1 };
            }
            ArcKind::Vertical => {}
            ArcKind::Diagonal => unreachable!("b = 0"),
        }
        pos = diag.transport(diag.arcs[arc].ends[1 - end]);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(a: usize, b: usize, c: usize, n: usize, r: i64, s: i64) -> DunwoodyTuple {
        DunwoodyTuple::new(a, b, c, n, r, s).unwrap()
    }

    #[test]
    fn golden_example_words() {
        let t = tuple(1, 1, 1, 3, 2, 1);
        let words = psl_set(t).unwrap();
        let expect = [
            "b1 b2 a3^-1 b3 a1 b3^-1 a3 a1^-1",
            "b2 b3 a1^-1 b1 a2 b1^-1 a1 a2^-1",
            "b3 b1 a2^-1 b2 a3 b2^-1 a2 a3^-1",
        ];
        assert_eq!(words.len(), 3);
        for (w, e) in words.iter().zip(expect) {
            assert_eq!(w.to_string(), e);
        }
    }

    #[test]
    fn golden_example_symbols() {
        let t = tuple(1, 1, 1, 3, 2, 1);
        let annotated = annotated_psl_set(t).unwrap();
        let syms: Vec<String> = annotated[0]
            .0
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(syms, ["↓C1", "←AU3", "↑B2", "←AL1"]);
    }

    #[test]
    fn golden_example_is_admissible() {
        let rep = admissibility(tuple(1, 1, 1, 3, 2, 1)).unwrap();
        assert!(rep.admissible);
        assert_eq!(rep.m, 3);
        assert_eq!(rep.regions, 8);
        // three curves on a genus-3 surface with a connected complement
        // have class rank 3
        assert_eq!(rep.curve_z2_rank, 3);
    }

    #[test]
    fn fibonacci_closed_form() {
        for n in 3..=8 {
            let t = tuple(2, 0, 1, n, 1, 0);
            let words = psl_set(t).unwrap();
            for (idx, w) in words.iter().enumerate() {
                let i = idx as i64 + 1;
                let expect = Word::build(
                    Context::new(n, 1),
                    [
                        (Gen::Alpha, i, -1),
                        (Gen::Beta, i - 1, -1),
                        (Gen::Alpha, i - 1, 1),
                        (Gen::Alpha, i, -1),
                        (Gen::Beta, i, 1),
                        (Gen::Alpha, i + 1, 1),
                        (Gen::Alpha, i, -1),
                    ],
                )
                .unwrap();
                assert_eq!(*w, expect, "n = {}, i = {}", n, i);
            }
        }
    }

    #[test]
    fn sieradski_closed_form() {
        for n in 3..=8 {
            let t = tuple(1, 0, 1, n, 1, n as i64 - 2);
            let words = psl_set(t).unwrap();
            for (idx, w) in words.iter().enumerate() {
                let i = idx as i64 + 1;
                let expect = Word::build(
                    Context::new(n, 1),
                    [
                        (Gen::Beta, i, 1),
                        (Gen::Beta, i + 1, 1),
                        (Gen::Alpha, i + 2, -1),
                        (Gen::Beta, i + 1, -1),
                        (Gen::Alpha, i + 1, 1),
                        (Gen::Alpha, i, -1),
                    ],
                )
                .unwrap();
                assert_eq!(*w, expect, "n = {}, i = {}", n, i);
            }
        }
    }

    #[test]
    fn s_bar_families() {
        for n in 2..=8 {
            assert_eq!(compute_s_bar(2, n, 1).unwrap(), 0, "n = {}", n);
        }
        for n in 3..=8 {
            assert_eq!(compute_s_bar(1, n, 1).unwrap(), -2, "n = {}", n);
        }
        assert_eq!(compute_s_bar(3, 3, 1).unwrap(), -2);
        assert!(compute_s_bar(2, 3, 5).is_err()); // gcd(5, 10) = 5
    }

    #[test]
    fn reversal_gives_cyclic_inverse() {
        // reading a curve backwards yields the inverse word up to rotation
        let t = tuple(1, 1, 1, 3, 2, 1);
        let diag = OpenDiagram::build(t).unwrap();
        let curves = diag.curves();
        let fwd = curve_to_word(&diag, &curves[0]);
        let rev_curve = Curve(
            curves[0]
                .0
                .iter()
                .rev()
                .map(|ta| TraversedArc {
                    arc: ta.arc,
                    from_end: 1 - ta.from_end,
                })
                .collect(),
        );
        let rev = curve_to_word(&diag, &rev_curve);
        assert!(rev.cyclically_equal(&fwd.inverse()));
    }

    #[test]
    fn inadmissible_tuple_is_refused() {
        let t = tuple(1, 1, 1, 3, 1, 1); // four curves on genus 3
        let rep = admissibility(t).unwrap();
        assert!(!rep.admissible);
        assert_eq!(rep.m, 4);
        assert!(psl_set(t).is_err());
    }

    #[test]
    fn edge_tuple_curve_counts_are_frozen() {
        let rep = admissibility(tuple(1, 1, 1, 3, 0, 1)).unwrap();
        assert!(!rep.admissible);
        assert_eq!(rep.m, 6);
        // a diagram with no vertical arcs still closes up
        let rep = admissibility(tuple(1, 0, 0, 2, 0, 0)).unwrap();
        assert!(rep.admissible);
        assert_eq!(rep.m, 2);
        let words = psl_set(tuple(1, 0, 0, 2, 0, 0)).unwrap();
        assert_eq!(words[0].to_string(), "b2^-1 a2 a1^-1");
        assert_eq!(words[1].to_string(), "b1^-1 a1 a2^-1");
    }

    #[test]
    fn oracle_agrees_on_small_tuples() {
        for a in 0..=1 {
            for b in 0..=1 {
                for c in 0..=1 {
                    if a + b + c == 0 {
                        continue;
                    }
                    let d = (2 * a + b + c) as i64;
                    for n in 1..=3usize {
                        for r in 0..d {
                            for s in 0..n as i64 {
                                let t = tuple(a, b, c, n, r, s);
                                assert_eq!(
                                    is_admissible(t).unwrap(),
                                    admissible_oracle(t).unwrap(),
                                    "tuple {}",
                                    t
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
