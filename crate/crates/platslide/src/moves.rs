//! The plat equivalence calculus on surface braid words: moves M1–M6 and the
//! two plat-slide moves, plus the stabilization map `T_k` used by M6.
//!
//! Two braids have isotopic plat closures exactly when they differ by a
//! sequence of these moves, so each is implemented as an invertible rewrite
//! of a [`Word`]:
//!
//! * M1 multiplies by `s1`,
//! * M2 by `s(2i) s(2i+1) s(2i-1) s(2i)`,
//! * M3 by `s2 s1^2 s2`,
//! * M4 by `a<j> s1^-1 a<j> s1^-1`,
//! * M5 by `b<j> s1^-1 b<j> s1^-1`,
//! * M6 sends `w` to `T_k(w) s(2k)` one strand pair up,
//! * psl* right-multiplies by `b<i>`,
//! * psl left-multiplies by a supplied meridian word `d̄_i`.
//!
//! Inverting M1–M5 and the psl moves multiplies by the inverse word on the
//! same side; inverting M6 is partial and only succeeds on words that are
//! `T_k(u) s(2k)` up to free reduction.

use crate::word::{Context, Gen, Letter, Word};
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    PslStar,
    Psl,
}

impl MoveKind {
    fn name(self) -> &'static str {
        match self {
            MoveKind::M1 => "M1",
            MoveKind::M2 => "M2",
            MoveKind::M3 => "M3",
            MoveKind::M4 => "M4",
            MoveKind::M5 => "M5",
            MoveKind::M6 => "M6",
            MoveKind::PslStar => "psl*",
            MoveKind::Psl => "psl",
        }
    }

    fn takes_side(self) -> bool {
        matches!(
            self,
            MoveKind::M1 | MoveKind::M2 | MoveKind::M3 | MoveKind::M4 | MoveKind::M5
        )
    }

    fn takes_parameter(self) -> bool {
        !matches!(self, MoveKind::M1 | MoveKind::M3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// One move instance: which move, where, and whether to run it backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub side: Option<Side>,
    pub parameter: Option<usize>,
    pub invert: bool,
}

impl MoveSpec {
    pub fn new(kind: MoveKind, side: Option<Side>, parameter: Option<usize>) -> Self {
        MoveSpec {
            kind,
            side,
            parameter,
            invert: false,
        }
    }

    pub fn inverted(mut self) -> Self {
        self.invert = !self.invert;
        self
    }

    /// Parse `"M1:right"`, `"M2:left:1"`, `"M6:1"`, `"psl:2"`, `"psl*:1"`.
    /// Order of the side and parameter fields after the name is free.
    pub fn parse(text: &str) -> Result<MoveSpec> {
        let mut parts = text.split(':');
        let name = parts.next().unwrap_or("");
        let kind = match name.to_ascii_lowercase().as_str() {
            "m1" => MoveKind::M1,
            "m2" => MoveKind::M2,
            "m3" => MoveKind::M3,
            "m4" => MoveKind::M4,
            "m5" => MoveKind::M5,
            "m6" => MoveKind::M6,
            "psl*" | "pslstar" => MoveKind::PslStar,
            "psl" => MoveKind::Psl,
            other => {
                return Err(Error::Parse(format!(
                    "unknown move {:?} (expected M1..M6, psl* or psl)",
                    other
                )))
            }
        };
        let mut side = None;
        let mut parameter = None;
        for field in parts {
            match field.to_ascii_lowercase().as_str() {
                "left" => side = Some(Side::Left),
                "right" => side = Some(Side::Right),
                num => {
                    let p: usize = num.parse().map_err(|_| {
                        Error::Parse(format!("bad move field {:?} in {:?}", field, text))
                    })?;
                    parameter = Some(p);
                }
            }
        }
        if kind.takes_side() && side.is_none() {
            return Err(Error::Parse(format!(
                "{} needs a side, e.g. \"{}:right\"",
                kind.name(),
                kind.name()
            )));
        }
        if kind.takes_parameter() && parameter.is_none() {
            return Err(Error::Parse(format!(
                "{} needs an index, e.g. \"{}:...:1\"",
                kind.name(),
                kind.name()
            )));
        }
        if !kind.takes_side() && side.is_some() {
            return Err(Error::Parse(format!("{} does not take a side", kind.name())));
        }
        Ok(MoveSpec::new(kind, side, parameter))
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if let Some(s) = self.side {
            write!(f, ":{}", if s == Side::Left { "left" } else { "right" })?;
        }
        if let Some(p) = self.parameter {
            write!(f, ":{}", p)?;
        }
        Ok(())
    }
}

/// Multiplier word for the moves that act by one-sided multiplication.
fn multiplier(ctx: Context, kind: MoveKind, parameter: Option<usize>) -> Result<Word> {
    let bad = |msg: String| Err(Error::MoveNotApplicable(msg));
    let p = parameter.unwrap_or(0) as i64;
    match kind {
        MoveKind::M1 => Word::build(ctx, [(Gen::Sigma, 1, 1)]),
        MoveKind::M2 => {
            let i = p;
            if i < 1 || 2 * i + 1 > ctx.max_sigma() as i64 {
                return bad(format!("M2 index {} out of range in {}", i, ctx));
            }
            Word::build(
                ctx,
                [
                    (Gen::Sigma, 2 * i, 1),
                    (Gen::Sigma, 2 * i + 1, 1),
                    (Gen::Sigma, 2 * i - 1, 1),
                    (Gen::Sigma, 2 * i, 1),
                ],
            )
        }
        MoveKind::M3 => Word::build(
            ctx,
            [(Gen::Sigma, 2, 1), (Gen::Sigma, 1, 2), (Gen::Sigma, 2, 1)],
        ),
        MoveKind::M4 | MoveKind::M5 => {
            let j = p;
            if j < 1 || j > ctx.genus as i64 {
                return bad(format!("handle index {} out of range in {}", j, ctx));
            }
            let gen = if kind == MoveKind::M4 { Gen::Alpha } else { Gen::Beta };
            Word::build(
                ctx,
                [(gen, j, 1), (Gen::Sigma, 1, -1), (gen, j, 1), (Gen::Sigma, 1, -1)],
            )
        }
        _ => unreachable!("multiplier only covers M1..M5"),
    }
}

/// Apply one move.  `psl_words` supplies the meridian words `d̄_1, d̄_2, …`
/// for the psl move (required there, ignored elsewhere).
pub fn apply_move(w: &Word, spec: MoveSpec, psl_words: Option<&[Word]>) -> Result<Word> {
    let ctx = w.context();
    match spec.kind {
        MoveKind::M1 | MoveKind::M2 | MoveKind::M3 | MoveKind::M4 | MoveKind::M5 => {
            let mut m = multiplier(ctx, spec.kind, spec.parameter)?;
            if spec.invert {
                m = m.inverse();
            }
            match spec.side {
                Some(Side::Left) => m.concat(w),
                Some(Side::Right) | None => w.concat(&m),
            }
        }
        MoveKind::M6 => {
            let k = spec
                .parameter
                .ok_or_else(|| Error::MoveNotApplicable("M6 needs k".into()))?;
            if spec.invert {
                destabilize_tk(w, k)
            } else {
                let up = stabilize_tk(w, k)?;
                let mut out = up;
                out.push_raw(Gen::Sigma, 2 * k as i64, 1)?;
                Ok(out)
            }
        }
        MoveKind::PslStar => {
            let i = spec
                .parameter
                .ok_or_else(|| Error::MoveNotApplicable("psl* needs i".into()))?;
            if i < 1 || i > ctx.genus {
                return Err(Error::MoveNotApplicable(format!(
                    "psl* index {} out of range in {}",
                    i, ctx
                )));
            }
            let exp = if spec.invert { -1 } else { 1 };
            let mut out = w.clone();
            out.push_raw(Gen::Beta, i as i64, exp)?;
            Ok(out)
        }
        MoveKind::Psl => {
            let words = psl_words.ok_or_else(|| {
                Error::MoveNotApplicable("psl needs the meridian words d̄_i".into())
            })?;
            let i = spec
                .parameter
                .ok_or_else(|| Error::MoveNotApplicable("psl needs i".into()))?;
            if i < 1 || i > words.len() {
                return Err(Error::MoveNotApplicable(format!(
                    "psl index {} out of range (have {} words)",
                    i,
                    words.len()
                )));
            }
            let d = &words[i - 1];
            if d.has_sigma() {
                return Err(Error::MoveNotApplicable(format!(
                    "meridian word {} contains a braid letter",
                    d
                )));
            }
            // the meridian lives in B_{g,2}; re-express its handle letters in
            // the context of the word being rewritten
            let mut m = Word::empty(ctx);
            for l in d.letters() {
                m.push_raw(l.gen, l.index as i64, l.exp)?;
            }
            if spec.invert {
                m = m.inverse();
            }
            m.concat(w)
        }
    }
}

/// The stabilization `T_k : B_{g,2n} -> B_{g,2n+2}`: handle letters fixed,
/// `s<i>` fixed for `i < 2k`, shifted up by two for `i > 2k`, and
/// `s(2k) -> s(2k) s(2k+1) s(2k+2) s(2k+1)^-1 s(2k)^-1`.
pub fn stabilize_tk(w: &Word, k: usize) -> Result<Word> {
    let ctx = w.context();
    if k < 1 || 2 * k > ctx.points() {
        return Err(Error::MoveNotApplicable(format!(
            "T_{} undefined on {}",
            k, ctx
        )));
    }
    let up = Context::new(ctx.genus, ctx.pairs + 1);
    let mut out = Word::empty(up);
    for l in w.letters() {
        match l.gen {
            Gen::Alpha | Gen::Beta => out.push_raw(l.gen, l.index as i64, l.exp)?,
            Gen::Sigma => {
                let i = l.index;
                if i < 2 * k {
                    out.push_raw(Gen::Sigma, i as i64, l.exp)?;
                } else if i > 2 * k {
                    out.push_raw(Gen::Sigma, (i + 2) as i64, l.exp)?;
                } else {
                    let b = 2 * k as i64;
                    out.push_raw(Gen::Sigma, b, 1)?;
                    out.push_raw(Gen::Sigma, b + 1, 1)?;
                    out.push_raw(Gen::Sigma, b + 2, l.exp)?;
                    out.push_raw(Gen::Sigma, b + 1, -1)?;
                    out.push_raw(Gen::Sigma, b, -1)?;
                }
            }
        }
    }
    Ok(out)
}

/// Partial inverse of move M6: recognize `w = T_k(u) s(2k)` up to free
/// reduction and return `u`, one strand pair down.
pub fn destabilize_tk(w: &Word, k: usize) -> Result<Word> {
    let ctx = w.context();
    if ctx.pairs < 2 {
        return Err(Error::MoveNotApplicable(format!(
            "cannot destabilize below one strand pair ({})",
            ctx
        )));
    }
    let down = Context::new(ctx.genus, ctx.pairs - 1);
    if k < 1 || 2 * k > down.points() {
        return Err(Error::MoveNotApplicable(format!(
            "T_{} undefined on {}",
            k, down
        )));
    }
    let b = 2 * k;
    let mut stripped = w.clone();
    stripped.push_raw(Gen::Sigma, b as i64, -1)?;

    let shape_err = || {
        Error::MoveNotApplicable(format!(
            "word is not of the form T_{}(u) s{} up to free reduction",
            k, b
        ))
    };
    let runs = stripped.letters();
    let mut out = Word::empty(down);
    let mut i = 0;
    while i < runs.len() {
        let l = runs[i];
        match l.gen {
            Gen::Alpha | Gen::Beta => {
                out.push_raw(l.gen, l.index as i64, l.exp)?;
                i += 1;
            }
            Gen::Sigma if l.index < b => {
                out.push_raw(Gen::Sigma, l.index as i64, l.exp)?;
                i += 1;
            }
            Gen::Sigma if l.index > b + 2 => {
                out.push_raw(Gen::Sigma, l.index as i64 - 2, l.exp)?;
                i += 1;
            }
            Gen::Sigma if l.index == b => {
                // the conjugation block s(2k) s(2k+1) s(2k+2)^e s(2k+1)^-1 s(2k)^-1
                let ok = i + 4 < runs.len()
                    && runs[i] == Letter::new(Gen::Sigma, b, 1)
                    && runs[i + 1] == Letter::new(Gen::Sigma, b + 1, 1)
                    && runs[i + 2].gen == Gen::Sigma
                    && runs[i + 2].index == b + 2
                    && runs[i + 3] == Letter::new(Gen::Sigma, b + 1, -1)
                    && runs[i + 4] == Letter::new(Gen::Sigma, b, -1);
                if !ok {
                    return Err(shape_err());
                }
                out.push_raw(Gen::Sigma, b as i64, runs[i + 2].exp)?;
                i += 5;
            }
            Gen::Sigma => return Err(shape_err()),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ctx: Context, s: &str) -> Word {
        Word::parse(ctx, s).unwrap()
    }

    #[test]
    fn m1_on_empty_word() {
        let ctx = Context::new(1, 1);
        let spec = MoveSpec::parse("M1:right").unwrap();
        let out = apply_move(&Word::empty(ctx), spec, None).unwrap();
        assert_eq!(out.to_string(), "s1");
    }

    #[test]
    fn m4_left_prepends() {
        let ctx = Context::new(2, 2);
        let g = w(ctx, "s2 b1");
        let spec = MoveSpec::parse("M4:left:1").unwrap();
        let out = apply_move(&g, spec, None).unwrap();
        assert_eq!(out.to_string(), "a1 s1^-1 a1 s1^-1 s2 b1");
    }

    #[test]
    fn m2_multiplier_shape() {
        let ctx = Context::new(1, 3);
        let spec = MoveSpec::parse("M2:right:1").unwrap();
        let out = apply_move(&Word::empty(ctx), spec, None).unwrap();
        assert_eq!(out.to_string(), "s2 s3 s1 s2");
    }

    #[test]
    fn moves_invert_each_other() {
        let ctx = Context::new(3, 3);
        let g = w(ctx, "a1 s3^-1 b2 s1 a3^2");
        for spec_text in ["M1:left", "M1:right", "M2:right:2", "M3:left", "M4:right:3", "M5:left:1", "psl*:2"] {
            let spec = MoveSpec::parse(spec_text).unwrap();
            let there = apply_move(&g, spec, None).unwrap();
            let back = apply_move(&there, spec.inverted(), None).unwrap();
            assert_eq!(back, g, "move {}", spec_text);
        }
    }

    #[test]
    fn psl_left_multiplies_by_data() {
        let ctx = Context::new(2, 1);
        let d1 = w(Context::new(2, 1), "b1^3 a2");
        let g = w(ctx, "a2^-1 s1");
        let spec = MoveSpec::parse("psl:1").unwrap();
        let out = apply_move(&g, spec, Some(std::slice::from_ref(&d1))).unwrap();
        assert_eq!(out.to_string(), "b1^3 s1");
        let back = apply_move(&out, spec.inverted(), Some(std::slice::from_ref(&d1))).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn psl_rejects_braid_letters() {
        let ctx = Context::new(2, 1);
        let bad = w(ctx, "b1 s1");
        let spec = MoveSpec::parse("psl:1").unwrap();
        assert!(apply_move(&Word::empty(ctx), spec, Some(std::slice::from_ref(&bad))).is_err());
    }

    #[test]
    fn tk_maps_the_listed_generators() {
        let ctx = Context::new(2, 2);
        assert_eq!(
            stabilize_tk(&w(ctx, "s2"), 1).unwrap().to_string(),
            "s2 s3 s4 s3^-1 s2^-1"
        );
        assert_eq!(stabilize_tk(&w(ctx, "s1"), 1).unwrap().to_string(), "s1");
        assert_eq!(stabilize_tk(&w(ctx, "s3"), 1).unwrap().to_string(), "s5");
        assert_eq!(stabilize_tk(&w(ctx, "a1 b2"), 1).unwrap().to_string(), "a1 b2");
        let up = stabilize_tk(&w(ctx, "s2^-3"), 1).unwrap();
        assert_eq!(up.to_string(), "s2 s3 s4^-3 s3^-1 s2^-1");
    }

    #[test]
    fn m6_round_trip() {
        let ctx = Context::new(2, 3);
        let g = w(ctx, "s2 a1 s4^2 b2 s2^-1 s5");
        for k in 1..=3 {
            let spec = MoveSpec::new(MoveKind::M6, None, Some(k));
            let up = apply_move(&g, spec, None).unwrap();
            assert_eq!(up.context(), Context::new(2, 4));
            let back = apply_move(&up, spec.inverted(), None).unwrap();
            assert_eq!(back, g, "k = {}", k);
        }
    }

    #[test]
    fn m6_invert_rejects_garbage() {
        let ctx = Context::new(1, 2);
        // a bare s3 cannot come from T_1(u) s2
        let bad = w(ctx, "s3 s2");
        let spec = MoveSpec {
            kind: MoveKind::M6,
            side: None,
            parameter: Some(1),
            invert: true,
        };
        assert!(apply_move(&bad, spec, None).is_err());
    }

    #[test]
    fn spec_round_trip() {
        for t in ["M1:right", "M2:left:1", "M4:right:2", "M6:3", "psl*:1", "psl:2"] {
            let spec = MoveSpec::parse(t).unwrap();
            assert_eq!(spec.to_string(), t);
        }
        assert!(MoveSpec::parse("M2:left").is_err());
        assert!(MoveSpec::parse("M7:left").is_err());
        assert!(MoveSpec::parse("M6:1:left").is_err());
    }
}
