//! Property tests: the algebraic laws of words and moves, the fast Smith
//! normal form against the minor-gcd reference, and relabeling invariance
//! of the homology computations.

use num_bigint::BigInt;
use platslide::dunwoody::{is_admissible, psl_set, DunwoodyTuple};
use platslide::homology::{
    homology_of_matrix, homology_of_presentation, minor_gcd_invariants, presentation_from_psl,
    relator_matrix, smith_invariants,
};
use platslide::moves::{apply_move, stabilize_tk, MoveKind, MoveSpec, Side};
use platslide::word::{Context, Gen, Word};
use proptest::prelude::*;
use std::sync::OnceLock;

fn nonzero_exp() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

/// Raw generator runs legal in `ctx`, ready for `Word::build`.
fn triples_in(ctx: Context, max_len: usize) -> impl Strategy<Value = Vec<(Gen, i64, i64)>> {
    let g = ctx.genus as i64;
    let ms = ctx.max_sigma() as i64;
    let letter = prop_oneof![
        (1..=g, nonzero_exp()).prop_map(|(j, e)| (Gen::Alpha, j, e)),
        (1..=g, nonzero_exp()).prop_map(|(j, e)| (Gen::Beta, j, e)),
        (1..=ms, nonzero_exp()).prop_map(|(i, e)| (Gen::Sigma, i, e)),
    ];
    proptest::collection::vec(letter, 0..=max_len)
}

fn word_in(ctx: Context) -> impl Strategy<Value = Word> {
    triples_in(ctx, 12).prop_map(move |ts| Word::build(ctx, ts).unwrap())
}

/// A word with no braid letters, as the curve words are.
fn handle_word_in(ctx: Context) -> impl Strategy<Value = Word> {
    let g = ctx.genus as i64;
    let letter = prop_oneof![
        (1..=g, nonzero_exp()).prop_map(|(j, e)| (Gen::Alpha, j, e)),
        (1..=g, nonzero_exp()).prop_map(|(j, e)| (Gen::Beta, j, e)),
    ];
    proptest::collection::vec(letter, 0..=10)
        .prop_map(move |ts| Word::build(ctx, ts).unwrap())
}

fn arb_ctx() -> impl Strategy<Value = Context> {
    (1usize..=4, 1usize..=4).prop_map(|(g, n)| Context::new(g, n))
}

fn arb_word() -> impl Strategy<Value = Word> {
    arb_ctx().prop_flat_map(word_in)
}

fn arb_word_pair() -> impl Strategy<Value = (Word, Word)> {
    arb_ctx().prop_flat_map(|ctx| (word_in(ctx), word_in(ctx)))
}

fn arb_word_triple() -> impl Strategy<Value = (Word, Word, Word)> {
    arb_ctx().prop_flat_map(|ctx| (word_in(ctx), word_in(ctx), word_in(ctx)))
}

fn arb_side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Left), Just(Side::Right)]
}

/// A word together with a move that is applicable in its context.  Pairs is
/// kept at two or more so M2 and M3 always have room.
fn arb_move_case() -> impl Strategy<Value = (Word, MoveSpec)> {
    (1usize..=4, 2usize..=4).prop_flat_map(|(g, n)| {
        let ctx = Context::new(g, n);
        let spec = prop_oneof![
            arb_side().prop_map(|s| MoveSpec::new(MoveKind::M1, Some(s), None)),
            (arb_side(), 1..=n - 1)
                .prop_map(|(s, i)| MoveSpec::new(MoveKind::M2, Some(s), Some(i))),
            arb_side().prop_map(|s| MoveSpec::new(MoveKind::M3, Some(s), None)),
            (arb_side(), 1..=g).prop_map(|(s, j)| MoveSpec::new(MoveKind::M4, Some(s), Some(j))),
            (arb_side(), 1..=g).prop_map(|(s, j)| MoveSpec::new(MoveKind::M5, Some(s), Some(j))),
            (1..=g).prop_map(|i| MoveSpec::new(MoveKind::PslStar, None, Some(i))),
        ];
        (word_in(ctx), spec)
    })
}

fn big_matrix() -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(
            proptest::collection::vec((-9i64..=9).prop_map(BigInt::from), cols),
            rows,
        )
    })
}

/// An elementary operation that does not change the Smith invariants.
#[derive(Debug, Clone, Copy)]
struct ElemOp {
    kind: u8,
    x: usize,
    y: usize,
    mult: i64,
}

fn elem_ops() -> impl Strategy<Value = Vec<ElemOp>> {
    proptest::collection::vec(
        (0u8..5, 0usize..8, 0usize..8, -3i64..=3)
            .prop_map(|(kind, x, y, mult)| ElemOp { kind, x, y, mult }),
        0..=8,
    )
}

fn apply_elem(m: &mut Vec<Vec<BigInt>>, op: ElemOp) {
    let rows = m.len();
    let cols = m[0].len();
    let (x, y) = (op.x, op.y);
    match op.kind {
        0 => m.swap(x % rows, y % rows),
        1 => {
            let (x, y) = (x % cols, y % cols);
            for row in m.iter_mut() {
                row.swap(x, y);
            }
        }
        2 => {
            let (from, to) = (x % rows, y % rows);
            if from != to {
                for j in 0..cols {
                    let t = &m[from][j] * op.mult;
                    m[to][j] += t;
                }
            }
        }
        3 => {
            let (from, to) = (x % cols, y % cols);
            if from != to {
                for row in m.iter_mut() {
                    let t = &row[from] * op.mult;
                    row[to] += t;
                }
            }
        }
        _ => {
            for e in m[x % rows].iter_mut() {
                *e = -std::mem::take(e);
            }
        }
    }
}

/// Every admissible tuple with a, b, c <= 2 and n <= 4, computed once.
fn admissible_pool() -> &'static Vec<DunwoodyTuple> {
    static POOL: OnceLock<Vec<DunwoodyTuple>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for a in 0..=2usize {
            for b in 0..=2usize {
                for c in 0..=2usize {
                    if a + b + c == 0 {
                        continue;
                    }
                    let d = (2 * a + b + c) as i64;
                    for n in 1..=4usize {
                        for r in 0..d {
                            for s in 0..n as i64 {
                                let t = DunwoodyTuple::new(a, b, c, n, r, s).unwrap();
                                if is_admissible(t).unwrap() {
                                    pool.push(t);
                                }
                            }
                        }
                    }
                }
            }
        }
        pool
    })
}

proptest! {
    #[test]
    fn built_words_are_reduced(w in arb_word()) {
        for l in w.letters() {
            prop_assert!(l.exp != 0);
        }
        for pair in w.letters().windows(2) {
            prop_assert!(pair[0].gen != pair[1].gen || pair[0].index != pair[1].index);
        }
        prop_assert_eq!(w.len(), w.flat().len());
    }

    #[test]
    fn display_parse_round_trip(w in arb_word()) {
        let text = w.to_string();
        let back = Word::parse(w.context(), &text).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn concat_is_associative((u, v, w) in arb_word_triple()) {
        let left = u.concat(&v).unwrap().concat(&w).unwrap();
        let right = u.concat(&v.concat(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn empty_word_is_the_identity(w in arb_word()) {
        let e = Word::empty(w.context());
        prop_assert_eq!(e.concat(&w).unwrap(), w.clone());
        prop_assert_eq!(w.concat(&e).unwrap(), w);
    }

    #[test]
    fn inverse_cancels(w in arb_word()) {
        prop_assert!(w.concat(&w.inverse()).unwrap().is_empty());
        prop_assert!(w.inverse().concat(&w).unwrap().is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn inverse_reverses_products((u, v) in arb_word_pair()) {
        let lhs = u.concat(&v).unwrap().inverse();
        let rhs = v.inverse().concat(&u.inverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exponent_vector_is_additive((u, v) in arb_word_pair()) {
        let (ua, ub) = u.exponent_vector();
        let (va, vb) = v.exponent_vector();
        let (pa, pb) = u.concat(&v).unwrap().exponent_vector();
        for j in 0..u.context().genus {
            prop_assert_eq!(pa[j], ua[j] + va[j]);
            prop_assert_eq!(pb[j], ub[j] + vb[j]);
        }
    }

    #[test]
    fn shift_handles_is_an_action(w in arb_word(), d1 in -6i64..=6, d2 in -6i64..=6) {
        let g = w.context().genus as i64;
        prop_assert_eq!(w.shift_handles(g), w.clone());
        prop_assert_eq!(
            w.shift_handles(d1).shift_handles(d2),
            w.shift_handles(d1 + d2)
        );
        prop_assert_eq!(w.shift_handles(d1).len(), w.len());
    }

    #[test]
    fn conjugates_are_cyclically_equal((u, w) in arb_word_pair()) {
        let conj = u.concat(&w).unwrap().concat(&u.inverse()).unwrap();
        prop_assert!(conj.cyclically_equal(&w));
        prop_assert!(w.cyclically_equal(&w.cyclic_reduction()));
    }

    #[test]
    fn one_sided_moves_round_trip((w, spec) in arb_move_case()) {
        let there = apply_move(&w, spec, None).unwrap();
        let back = apply_move(&there, spec.inverted(), None).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn move_specs_survive_display_and_parse((_, spec) in arb_move_case()) {
        let text = spec.to_string();
        prop_assert_eq!(MoveSpec::parse(&text).unwrap(), spec);
    }

    #[test]
    fn m6_round_trips(case in (1usize..=4, 1usize..=4).prop_flat_map(|(g, n)| {
        (word_in(Context::new(g, n)), 1..=n)
    })) {
        let (w, k) = case;
        let spec = MoveSpec::new(MoveKind::M6, None, Some(k));
        let up = apply_move(&w, spec, None).unwrap();
        prop_assert_eq!(up.context().pairs, w.context().pairs + 1);
        let back = apply_move(&up, spec.inverted(), None).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn psl_round_trips(case in arb_ctx().prop_flat_map(|ctx| {
        (word_in(ctx), handle_word_in(ctx))
    })) {
        let (w, meridian) = case;
        let spec = MoveSpec::new(MoveKind::Psl, None, Some(1));
        let data = [meridian];
        let there = apply_move(&w, spec, Some(&data)).unwrap();
        let back = apply_move(&there, spec.inverted(), Some(&data)).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn tk_is_a_homomorphism(case in (1usize..=4, 1usize..=4).prop_flat_map(|(g, n)| {
        let ctx = Context::new(g, n);
        (word_in(ctx), word_in(ctx), 1..=n)
    })) {
        let (u, v, k) = case;
        let product = stabilize_tk(&u.concat(&v).unwrap(), k).unwrap();
        let factors = stabilize_tk(&u, k)
            .unwrap()
            .concat(&stabilize_tk(&v, k).unwrap())
            .unwrap();
        prop_assert_eq!(product, factors);
        prop_assert_eq!(
            stabilize_tk(&u.inverse(), k).unwrap(),
            stabilize_tk(&u, k).unwrap().inverse()
        );
    }

    #[test]
    fn smith_matches_the_minor_gcd_reference(m in big_matrix()) {
        prop_assert_eq!(smith_invariants(m.clone()), minor_gcd_invariants(&m));
    }

    #[test]
    fn smith_survives_elementary_operations(m in big_matrix(), ops in elem_ops()) {
        let before = smith_invariants(m.clone());
        let mut m = m;
        for op in ops {
            apply_elem(&mut m, op);
        }
        prop_assert_eq!(smith_invariants(m), before);
    }

    #[test]
    fn cokernel_ranks_are_consistent(m in big_matrix()) {
        let cols = m[0].len();
        let inv = smith_invariants(m.clone());
        let h = homology_of_matrix(m, cols);
        let nonzero = inv.iter().filter(|d| **d != BigInt::ZERO).count();
        prop_assert_eq!(h.free_rank, cols - nonzero);
        for t in &h.torsion {
            prop_assert!(*t >= BigInt::from(2));
        }
        for pair in h.torsion.windows(2) {
            prop_assert_eq!(&pair[1] % &pair[0], BigInt::ZERO);
        }
    }

    #[test]
    fn beta_deletion_is_additive(case in arb_ctx().prop_flat_map(|ctx| {
        (Just(ctx), handle_word_in(ctx), handle_word_in(ctx))
    })) {
        let (ctx, u, v) = case;
        let g = ctx.genus;
        let row = |w: &Word| {
            let p = presentation_from_psl(std::slice::from_ref(w), g).unwrap();
            relator_matrix(&p).remove(0)
        };
        let (ru, rv) = (row(&u), row(&v));
        let rp = row(&u.concat(&v).unwrap());
        for j in 0..g {
            prop_assert_eq!(&rp[j], &(&ru[j] + &rv[j]));
        }
    }

    #[test]
    fn pslstar_never_changes_homology(case in arb_ctx().prop_flat_map(|ctx| {
        let g = ctx.genus;
        (
            proptest::collection::vec(handle_word_in(ctx), 1..=g),
            1..=g,
            prop_oneof![Just(false), Just(true)],
        )
    })) {
        let (mut words, i, invert) = case;
        let g = words[0].context().genus;
        let before = homology_of_presentation(&presentation_from_psl(&words, g).unwrap());
        let mut spec = MoveSpec::new(MoveKind::PslStar, None, Some(i));
        if invert {
            spec = spec.inverted();
        }
        words[0] = apply_move(&words[0], spec, None).unwrap();
        let after = homology_of_presentation(&presentation_from_psl(&words, g).unwrap());
        prop_assert_eq!(before, after);
    }

    #[test]
    fn dunwoody_homology_survives_handle_relabeling(
        t in proptest::sample::select(admissible_pool().clone()),
        delta in 0i64..=8,
    ) {
        let words = psl_set(t).unwrap();
        let shifted: Vec<Word> = words.iter().map(|w| w.shift_handles(delta)).collect();
        let h = |ws: &[Word]| {
            homology_of_presentation(&presentation_from_psl(ws, t.genus()).unwrap())
        };
        prop_assert_eq!(h(&words), h(&shifted));
    }
}
