//! Browser bindings: three entry points returning JSON strings, consumed by
//! the static page in web/.  Build with `wasm-pack build --target web`.

use platslide::dunwoody::{self, DunwoodyTuple};
use platslide::homology::{dunwoody_h1, takahashi_h1, takahashi_surgery_h1_of};
use platslide::moves::{apply_move, MoveSpec};
use platslide::takahashi::{self, TakahashiParams};
use platslide::word::{Context, Word};
use wasm_bindgen::prelude::*;

fn err_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

/// Admissibility, curve words and homology of M(a,b,c,n,r,s).
#[wasm_bindgen]
pub fn dunwoody_report(a: usize, b: usize, c: usize, n: usize, r: i64, s: i64) -> String {
    let go = || -> platslide::Result<String> {
        let t = DunwoodyTuple::new(a, b, c, n, r, s)?;
        let rep = dunwoody::admissibility(t)?;
        let mut out = serde_json::json!({
            "tuple": t.to_string(),
            "genus": t.genus(),
            "curves": rep.m,
            "admissible": rep.admissible,
        });
        if rep.admissible {
            let rows: Vec<_> = dunwoody::annotated_psl_set(t)?
                .into_iter()
                .map(|(syms, w)| {
                    serde_json::json!({
                        "arcs": syms.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                        "word": w.to_string(),
                    })
                })
                .collect();
            out["words"] = rows.into();
            out["h1"] = dunwoody_h1(t)?.to_string().into();
        }
        Ok(out.to_string())
    };
    go().unwrap_or_else(err_json)
}

/// Curve words and the two homology computations for T_n(p/q, r/s).
#[wasm_bindgen]
pub fn takahashi_report(n: usize, p: u64, q: u64, r: u64, s: u64) -> String {
    let go = || -> platslide::Result<String> {
        let params = TakahashiParams::new(n, p, q, r, s)?;
        let rows: Vec<_> = takahashi::annotated_tak_psl_set(params)?
            .into_iter()
            .map(|(syms, w)| {
                serde_json::json!({
                    "arcs": syms.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "word": w.to_string(),
                })
            })
            .collect();
        let h = takahashi_h1(params)?;
        let surgery = takahashi_surgery_h1_of(&params);
        Ok(serde_json::json!({
            "params": params.to_string(),
            "genus": params.genus(),
            "words": rows,
            "h1": h.to_string(),
            "surgery_h1": surgery.to_string(),
            "agrees": h == surgery,
        })
        .to_string())
    };
    go().unwrap_or_else(err_json)
}

/// Apply one plat move to a word in B_{genus,2*pairs}.
#[wasm_bindgen]
pub fn move_playground(
    word: &str,
    move_spec: &str,
    invert: bool,
    genus: usize,
    pairs: usize,
) -> String {
    let go = || -> platslide::Result<String> {
        let ctx = Context::new(genus, pairs);
        let w = Word::parse(ctx, word)?;
        let mut spec = MoveSpec::parse(move_spec)?;
        if invert {
            spec = spec.inverted();
        }
        let out = apply_move(&w, spec, None)?;
        Ok(serde_json::json!({
            "input": w.to_string(),
            "move": spec.to_string(),
            "result": out.to_string(),
            "genus": out.context().genus,
            "pairs": out.context().pairs,
            "length": out.len(),
        })
        .to_string())
    };
    go().unwrap_or_else(err_json)
}
