//! Words in the surface braid group `B_{g,2n}` of the closed orientable
//! surface of genus `g` on `2n` marked points.
//!
//! Generators: the braid half-twists `s1 .. s(2n-1)` and, for each handle
//! `j` in `1..=g`, the two handle loops `a<j>` and `b<j>`.  Words are kept
//! freely reduced at all times; equality of [`Word`]s is free equality.
//!
//! Text grammar (used by the CLI and the serializers): tokens separated by
//! whitespace, each token one of `a<j>`, `b<j>`, `s<i>`, optionally followed
//! by `^<e>` with `e` a nonzero integer.  The empty word is written `1`.

use crate::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// Generator kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    /// Handle loop `a<j>` through handle `j`.
    Alpha,
    /// Handle loop `b<j>` around handle `j`.
    Beta,
    /// Braid generator `s<i>` exchanging punctures `i` and `i + 1`.
    Sigma,
}

impl Gen {
    fn token(self) -> char {
        match self {
            Gen::Alpha => 'a',
            Gen::Beta => 'b',
            Gen::Sigma => 's',
        }
    }
}

/// A run of a single generator: `gen<index>^exp` with `exp != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub gen: Gen,
    pub index: usize,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: Gen, index: usize, exp: i64) -> Self {
        Letter { gen, index, exp }
    }

    fn same_generator(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.index == other.index
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.gen.token(), self.index)?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// Ambient group: genus `g` surface, braid on `2 * pairs` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Context {
    pub genus: usize,
    pub pairs: usize,
}

impl Context {
    pub fn new(genus: usize, pairs: usize) -> Self {
        Context { genus, pairs }
    }

    /// Number of braid strands.
    pub fn points(&self) -> usize {
        2 * self.pairs
    }

    /// Highest legal sigma index, `2n - 1`.
    pub fn max_sigma(&self) -> usize {
        if self.pairs == 0 {
            0
        } else {
            2 * self.pairs - 1
        }
    }

    /// Reduce a (possibly negative) handle index into `1..=g`.
    pub fn norm_handle(&self, raw: i64) -> Result<usize> {
        if self.genus == 0 {
            return Err(Error::ContextMismatch(
                "handle generator in a genus-0 context".into(),
            ));
        }
        let g = self.genus as i64;
        Ok(((raw - 1).rem_euclid(g) + 1) as usize)
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B_{{{},{}}}", self.genus, self.points())
    }
}

/// A freely reduced word, stored as maximal runs of a single generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    ctx: Context,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(ctx: Context) -> Self {
        Word {
            ctx,
            letters: Vec::new(),
        }
    }

    /// Build from raw `(gen, index, exp)` triples.  Handle indices are
    /// reduced mod `g` into `1..=g`; sigma indices must already lie in
    /// `1..=2n-1`.  Zero exponents are dropped, adjacent equal generators
    /// merged, and the result freely reduced.
    pub fn build<I>(ctx: Context, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Gen, i64, i64)>,
    {
        let mut w = Word::empty(ctx);
        for (gen, raw, exp) in triples {
            w.push_raw(gen, raw, exp)?;
        }
        Ok(w)
    }

    /// Push one run on the right, maintaining free reduction.
    pub fn push_raw(&mut self, gen: Gen, raw_index: i64, exp: i64) -> Result<()> {
        if exp == 0 {
            return Ok(());
        }
        let index = match gen {
            Gen::Alpha | Gen::Beta => self.ctx.norm_handle(raw_index)?,
            Gen::Sigma => {
                if raw_index < 1 || raw_index > self.ctx.max_sigma() as i64 {
                    return Err(Error::ContextMismatch(format!(
                        "s{} out of range in {}",
                        raw_index, self.ctx
                    )));
                }
                raw_index as usize
            }
        };
        self.push_reduced(Letter::new(gen, index, exp));
        Ok(())
    }

    fn push_reduced(&mut self, letter: Letter) {
        if letter.exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(top) if top.same_generator(&letter) => {
                top.exp += letter.exp;
                if top.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total letter length, i.e. the sum of |exp| over all runs.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    /// `self * other` with free reduction at the seam.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "cannot multiply a word in {} by a word in {}",
                self.ctx, other.ctx
            )));
        }
        let mut w = self.clone();
        for l in &other.letters {
            w.push_reduced(*l);
        }
        Ok(w)
    }

    pub fn inverse(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter::new(l.gen, l.index, -l.exp))
            .collect();
        Word {
            ctx: self.ctx,
            letters,
        }
    }

    /// Expand runs into single letters with exponent ±1.
    pub fn flat(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.len());
        for l in &self.letters {
            let step = if l.exp > 0 { 1 } else { -1 };
            for _ in 0..l.exp.unsigned_abs() {
                out.push(Letter::new(l.gen, l.index, step));
            }
        }
        out
    }

    /// Does any sigma generator occur?
    pub fn has_sigma(&self) -> bool {
        self.letters.iter().any(|l| l.gen == Gen::Sigma)
    }

    /// Exponent sums of the handle generators: `(alpha, beta)`, each of
    /// length `g`, entry `j - 1` for handle `j`.
    pub fn exponent_vector(&self) -> (Vec<i64>, Vec<i64>) {
        let mut alpha = vec![0i64; self.ctx.genus];
        let mut beta = vec![0i64; self.ctx.genus];
        for l in &self.letters {
            match l.gen {
                Gen::Alpha => alpha[l.index - 1] += l.exp,
                Gen::Beta => beta[l.index - 1] += l.exp,
                Gen::Sigma => {}
            }
        }
        (alpha, beta)
    }

    /// Shift every handle index by `delta` (mod `g`); sigma letters are left
    /// alone.  Used for the rotational symmetry of the diagram families.
    pub fn shift_handles(&self, delta: i64) -> Word {
        let mut w = Word::empty(self.ctx);
        for l in &self.letters {
            let raw = match l.gen {
                Gen::Alpha | Gen::Beta => l.index as i64 + delta,
                Gen::Sigma => l.index as i64,
            };
            // indices stay in range, so this cannot fail
            w.push_raw(l.gen, raw, l.exp).expect("shift in range");
        }
        w
    }

    /// Cyclically reduce: conjugate away inverse first/last letters.
    pub fn cyclic_reduction(&self) -> Word {
        let mut flat = self.flat();
        loop {
            match (flat.first(), flat.last()) {
                (Some(a), Some(z))
                    if flat.len() >= 2 && a.same_generator(z) && a.exp == -z.exp =>
                {
                    flat.pop();
                    flat.remove(0);
                }
                _ => break,
            }
        }
        let mut w = Word::empty(self.ctx);
        for l in flat {
            w.push_reduced(l);
        }
        w
    }

    /// Equality up to cyclic rotation (both sides cyclically reduced first).
    pub fn cyclically_equal(&self, other: &Word) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        let a = self.cyclic_reduction().flat();
        let b = other.cyclic_reduction().flat();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|r| (0..a.len()).all(|i| a[(i + r) % a.len()] == b[i]))
    }

    /// Parse the text grammar in the given context.
    pub fn parse(ctx: Context, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && tokens[0] == "1" {
            return Ok(Word::empty(ctx));
        }
        let mut w = Word::empty(ctx);
        for tok in tokens {
            let (gen, rest) = match tok.chars().next() {
                Some('a') => (Gen::Alpha, &tok[1..]),
                Some('b') => (Gen::Beta, &tok[1..]),
                Some('s') => (Gen::Sigma, &tok[1..]),
                _ => {
                    return Err(Error::Parse(format!(
                        "token {:?} does not start with a, b or s",
                        tok
                    )))
                }
            };
            let (idx_str, exp) = match rest.split_once('^') {
                Some((i, e)) => {
                    let exp: i64 = e.parse().map_err(|_| {
                        Error::Parse(format!("bad exponent in token {:?}", tok))
                    })?;
                    if exp == 0 {
                        return Err(Error::Parse(format!(
                            "zero exponent in token {:?}",
                            tok
                        )));
                    }
                    (i, exp)
                }
                None => (rest, 1),
            };
            let index: i64 = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in token {:?}", tok)))?;
            if index < 1 {
                return Err(Error::Parse(format!(
                    "index must be positive in token {:?}",
                    tok
                )));
            }
            w.push_raw(gen, index, exp)
                .map_err(|e| Error::Parse(format!("token {:?}: {}", tok, e)))?;
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::new(3, 2)
    }

    #[test]
    fn parse_display_round_trip() {
        let cases = ["1", "a1", "b2^-1", "a1 b2^-1 s3^2", "a3^4 s1 b1^-3"];
        for c in cases {
            let w = Word::parse(ctx(), c).unwrap();
            assert_eq!(w.to_string(), c);
        }
    }

    #[test]
    fn free_reduction() {
        let w = Word::parse(ctx(), "a1 a1^-1").unwrap();
        assert!(w.is_empty());
        assert_eq!(w.to_string(), "1");
        let w = Word::parse(ctx(), "a1 b2 b2^-1 a1 a1^-2").unwrap();
        assert!(w.is_empty());
        let w = Word::parse(ctx(), "s1^2 s1^-1").unwrap();
        assert_eq!(w.to_string(), "s1");
    }

    #[test]
    fn concat_inverse_cancels() {
        let w = Word::parse(ctx(), "a1 b2^-1 s3^2 a2").unwrap();
        assert!(w.concat(&w.inverse()).unwrap().is_empty());
        assert!(w.inverse().concat(&w).unwrap().is_empty());
    }

    #[test]
    fn handle_indices_wrap_mod_genus() {
        let w = Word::build(ctx(), [(Gen::Alpha, 4, 1), (Gen::Beta, 0, 1), (Gen::Alpha, -2, 1)])
            .unwrap();
        assert_eq!(w.to_string(), "a1 b3 a1");
    }

    #[test]
    fn sigma_out_of_range_rejected() {
        assert!(Word::parse(ctx(), "s4").is_err());
        assert!(Word::parse(Context::new(3, 1), "s2").is_err());
        assert!(Word::parse(ctx(), "s3").is_ok());
    }

    #[test]
    fn zero_exponent_rejected() {
        assert!(Word::parse(ctx(), "a1^0").is_err());
    }

    #[test]
    fn exponent_vector_sums() {
        // the first curve word of the genus-3 example diagram
        let w = Word::parse(ctx(), "b1 b2 a3^-1 b3 a1 b3^-1 a3 a1^-1").unwrap();
        let (alpha, beta) = w.exponent_vector();
        assert_eq!(alpha, vec![0, 0, 0]);
        assert_eq!(beta, vec![1, 1, 0]);
        assert!(!w.has_sigma());
    }

    #[test]
    fn cyclic_equality() {
        let a = Word::parse(ctx(), "a1 b2 a3").unwrap();
        let b = Word::parse(ctx(), "b2 a3 a1").unwrap();
        assert!(a.cyclically_equal(&b));
        let c = Word::parse(ctx(), "a3 b2 a1").unwrap();
        assert!(!a.cyclically_equal(&c));
        // conjugates are cyclically equal after cyclic reduction
        let conj = Word::parse(ctx(), "b1 a1 b2 a3 b1^-1").unwrap();
        assert!(a.cyclically_equal(&conj));
    }

    #[test]
    fn shift_handles_wraps() {
        let w = Word::parse(ctx(), "a1 b3^-1").unwrap();
        assert_eq!(w.shift_handles(1).to_string(), "a2 b1^-1");
        assert_eq!(w.shift_handles(-1).to_string(), "a3 b2^-1");
    }
}
