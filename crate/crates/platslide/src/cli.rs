//! Command line interface.
//!
//! Exit codes: 0 on success, 1 for invalid input, 2 when an internal
//! diagram invariant fails.

use crate::dunwoody::{self, DunwoodyTuple};
use crate::homology::{dunwoody_h1, takahashi_h1, takahashi_surgery_h1_of};
use crate::moves::{apply_move, MoveSpec};
use crate::takahashi::{self, TakahashiParams};
use crate::word::{Context, Word};
use crate::{export, Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

#[derive(Parser)]
#[command(name = "platslide", version, about = "Heegaard diagrams and plat slide moves for Dunwoody and periodic Takahashi manifolds")]
pub struct Cli {
    /// emit line-delimited JSON records instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Dunwoody manifolds M(a,b,c,n,r,s)
    #[command(subcommand)]
    Dunwoody(DunwoodyCmd),
    /// periodic Takahashi manifolds T_n(p/q, r/s)
    #[command(subcommand)]
    Takahashi(TakahashiCmd),
    /// first homology of the closed manifold
    #[command(subcommand)]
    Homology(HomologyCmd),
    /// rewrite words with the plat moves
    #[command(subcommand)]
    Moves(MovesCmd),
    /// export open diagrams
    #[command(subcommand)]
    Diagram(DiagramCmd),
}

#[derive(Subcommand)]
pub enum DunwoodyCmd {
    /// curve words of an admissible tuple, one per line
    Words {
        /// a,b,c,n,r,s
        #[arg(long, value_parser = parse_tuple)]
        tuple: DunwoodyTuple,
        /// also print the traversed arc symbols
        #[arg(long)]
        arcs: bool,
    },
    /// scan a parameter box and stream the admissible tuples
    Admissible {
        /// aMax,bMax,cMax,nMax
        #[arg(long, value_parser = parse_scan)]
        scan: ScanLimits,
    },
    /// gluing offset making (a,0,1,n,r,·) close into the cyclic cover
    Sbar {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: i64,
    },
}

#[derive(Subcommand)]
pub enum TakahashiCmd {
    /// curve words, one per line (odd handles first)
    Words {
        #[arg(long)]
        n: usize,
        /// first surgery coefficient, e.g. 1/2
        #[arg(long, value_parser = parse_ratio)]
        pq: Ratio,
        /// second surgery coefficient, e.g. 2/3
        #[arg(long, value_parser = parse_ratio)]
        rs: Ratio,
        /// also print the traversed arc symbols
        #[arg(long)]
        arcs: bool,
    },
}

#[derive(Subcommand)]
pub enum HomologyCmd {
    /// from the Dunwoody curve words
    Dunwoody {
        #[arg(long, value_parser = parse_tuple)]
        tuple: DunwoodyTuple,
    },
    /// from the Takahashi curve words, cross-checked against surgery
    Takahashi {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_ratio)]
        pq: Ratio,
        #[arg(long, value_parser = parse_ratio)]
        rs: Ratio,
    },
}

#[derive(Subcommand)]
pub enum MovesCmd {
    /// apply one move to a word
    Apply {
        /// the word, e.g. "a1 s1^-1 b2"; "1" is the empty word
        #[arg(long)]
        word: String,
        /// move spec: M1:right, M2:left:1, M4:right:2, M6:1, psl:1, psl*:2
        #[arg(long = "move")]
        move_spec: String,
        /// run the move backwards
        #[arg(long)]
        invert: bool,
        /// genus of the braid context
        #[arg(long, default_value_t = 1)]
        genus: usize,
        /// strand pairs of the braid context
        #[arg(long, default_value_t = 1)]
        pairs: usize,
        /// meridian words for psl, one per line
        #[arg(long)]
        psl_file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum DiagramCmd {
    /// write the open diagram as DOT or JSON
    Export {
        /// Dunwoody tuple a,b,c,n,r,s
        #[arg(long, value_parser = parse_tuple, conflicts_with_all = ["n", "pq", "rs"])]
        tuple: Option<DunwoodyTuple>,
        /// Takahashi period
        #[arg(long, requires = "pq", requires = "rs")]
        n: Option<usize>,
        #[arg(long, value_parser = parse_ratio, requires = "n")]
        pq: Option<Ratio>,
        #[arg(long, value_parser = parse_ratio, requires = "n")]
        rs: Option<Ratio>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        /// output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanLimits {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub n: usize,
}

fn parse_tuple(text: &str) -> std::result::Result<DunwoodyTuple, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(format!("expected a,b,c,n,r,s, got {:?}", text));
    }
    let nat = |p: &str| p.parse::<usize>().map_err(|_| format!("bad number {:?}", p));
    let int = |p: &str| p.parse::<i64>().map_err(|_| format!("bad number {:?}", p));
    DunwoodyTuple::new(
        nat(parts[0])?,
        nat(parts[1])?,
        nat(parts[2])?,
        nat(parts[3])?,
        int(parts[4])?,
        int(parts[5])?,
    )
    .map_err(|e| e.to_string())
}

fn parse_ratio(text: &str) -> std::result::Result<Ratio, String> {
    let (num, den) = text
        .split_once('/')
        .ok_or_else(|| format!("expected num/den, got {:?}", text))?;
    Ok(Ratio {
        num: num.trim().parse().map_err(|_| format!("bad numerator {:?}", num))?,
        den: den.trim().parse().map_err(|_| format!("bad denominator {:?}", den))?,
    })
}

fn parse_scan(text: &str) -> std::result::Result<ScanLimits, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected aMax,bMax,cMax,nMax, got {:?}", text));
    }
    let nat = |p: &str| p.parse::<usize>().map_err(|_| format!("bad number {:?}", p));
    Ok(ScanLimits {
        a: nat(parts[0])?,
        b: nat(parts[1])?,
        c: nat(parts[2])?,
        n: nat(parts[3])?,
    })
}

fn tak_params(n: usize, pq: Ratio, rs: Ratio) -> Result<TakahashiParams> {
    TakahashiParams::new(n, pq.num, pq.den, rs.num, rs.den)
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Diagram(_) => 2,
                _ => 1,
            }
        }
    }
}

fn emit(args: std::fmt::Arguments, newline: bool) {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    let res = out
        .write_fmt(args)
        .and_then(|()| if newline { out.write_all(b"\n") } else { Ok(()) });
    if let Err(e) = res {
        // a closed pipe just means the reader has seen enough
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("error: cannot write to stdout: {}", e);
            std::process::exit(2);
        }
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!($($arg)*), true) };
}

macro_rules! outp {
    ($($arg:tt)*) => { emit(format_args!($($arg)*), false) };
}

#[derive(Serialize)]
struct WordRecord {
    index: usize,
    word: String,
    arcs: Vec<String>,
}

fn print_words(json: bool, show_arcs: bool, rows: Vec<(Vec<String>, Word)>) {
    for (i, (arcs, word)) in rows.into_iter().enumerate() {
        if json {
            let rec = WordRecord {
                index: i + 1,
                word: word.to_string(),
                arcs,
            };
            outln!("{}", serde_json::to_string(&rec).unwrap());
        } else if show_arcs {
            outln!("{} : {}", arcs.join(" "), word);
        } else {
            outln!("{}", word);
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Dunwoody(DunwoodyCmd::Words { tuple, arcs }) => {
            let rows = dunwoody::annotated_psl_set(tuple)?
                .into_iter()
                .map(|(syms, w)| (syms.iter().map(|s| s.to_string()).collect(), w))
                .collect();
            print_words(json, arcs, rows);
            Ok(())
        }
        Command::Dunwoody(DunwoodyCmd::Admissible { scan }) => run_scan(scan, json),
        Command::Dunwoody(DunwoodyCmd::Sbar { a, n, r }) => {
            let s_bar = dunwoody::compute_s_bar(a, n, r)?;
            if json {
                outln!(
                    "{}",
                    serde_json::json!({ "a": a, "n": n, "r": r, "s_bar": s_bar })
                );
            } else {
                outln!("{}", s_bar);
            }
            Ok(())
        }
        Command::Takahashi(TakahashiCmd::Words { n, pq, rs, arcs }) => {
            let params = tak_params(n, pq, rs)?;
            let rows = takahashi::annotated_tak_psl_set(params)?
                .into_iter()
                .map(|(syms, w)| (syms.iter().map(|s| s.to_string()).collect(), w))
                .collect();
            print_words(json, arcs, rows);
            Ok(())
        }
        Command::Homology(HomologyCmd::Dunwoody { tuple }) => {
            let h = dunwoody_h1(tuple)?;
            if json {
                outln!(
                    "{}",
                    serde_json::json!({
                        "family": "dunwoody",
                        "tuple": [tuple.a, tuple.b, tuple.c, tuple.n, tuple.r, tuple.s],
                        "h1": h.to_string(),
                        "free_rank": h.free_rank,
                        "torsion": h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                outln!("H1 = {}", h);
            }
            Ok(())
        }
        Command::Homology(HomologyCmd::Takahashi { n, pq, rs }) => {
            let params = tak_params(n, pq, rs)?;
            let h = takahashi_h1(params)?;
            let surgery = takahashi_surgery_h1_of(&params);
            let agree = h == surgery;
            if json {
                outln!(
                    "{}",
                    serde_json::json!({
                        "family": "takahashi",
                        "n": n, "p": params.p, "q": params.q, "r": params.r, "s": params.s,
                        "h1": h.to_string(),
                        "surgery_h1": surgery.to_string(),
                        "agrees": agree,
                    })
                );
            } else {
                outln!("H1 = {}", h);
                outln!(
                    "surgery check: {} ({})",
                    surgery,
                    if agree { "agrees" } else { "DISAGREES" }
                );
            }
            if !agree {
                return Err(Error::Diagram(format!(
                    "diagram homology {} disagrees with surgery homology {} for {}",
                    h, surgery, params
                )));
            }
            Ok(())
        }
        Command::Moves(MovesCmd::Apply {
            word,
            move_spec,
            invert,
            genus,
            pairs,
            psl_file,
        }) => {
            let ctx = Context::new(genus, pairs);
            let w = Word::parse(ctx, &word)?;
            let mut spec = MoveSpec::parse(&move_spec)?;
            if invert {
                spec = spec.inverted();
            }
            let meridians = match psl_file {
                None => None,
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::InvalidParams(format!("cannot read {}: {}", path.display(), e))
                    })?;
                    let mut ws = Vec::new();
                    for line in text.lines() {
                        let line = line.trim();
                        if line.is_empty() {
                            continue;
                        }
                        ws.push(Word::parse(ctx, line)?);
                    }
                    Some(ws)
                }
            };
            let out = apply_move(&w, spec, meridians.as_deref())?;
            if json {
                outln!(
                    "{}",
                    serde_json::json!({
                        "input": w.to_string(),
                        "move": spec.to_string(),
                        "result": out.to_string(),
                        "genus": out.context().genus,
                        "pairs": out.context().pairs,
                    })
                );
            } else {
                outln!("{}", out);
            }
            Ok(())
        }
        Command::Diagram(DiagramCmd::Export {
            tuple,
            n,
            pq,
            rs,
            format,
            out,
        }) => {
            let graph = match (tuple, n, pq, rs) {
                (Some(t), None, None, None) => {
                    export::from_dunwoody(&dunwoody::OpenDiagram::build(t)?)
                }
                (None, Some(n), Some(pq), Some(rs)) => export::from_takahashi(
                    &takahashi::TakahashiDiagram::build(tak_params(n, pq, rs)?)?,
                ),
                _ => {
                    return Err(Error::InvalidParams(
                        "give either --tuple or --n with --pq and --rs".into(),
                    ))
                }
            };
            let text = match format {
                ExportFormat::Dot => export::to_dot(&graph),
                ExportFormat::Json => export::to_json(&graph),
            };
            match out {
                None => {
                    outp!("{}", text);
                }
                Some(path) => {
                    let mut f = std::fs::File::create(&path).map_err(|e| {
                        Error::InvalidParams(format!("cannot write {}: {}", path.display(), e))
                    })?;
                    f.write_all(text.as_bytes()).map_err(|e| {
                        Error::InvalidParams(format!("cannot write {}: {}", path.display(), e))
                    })?;
                }
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ScanRecord {
    tuple: [usize; 6],
    m: usize,
    h1: String,
}

/// Enumerate the box lexicographically and stream admissible tuples in
/// order; tuples are checked in parallel (PLATSLIDE_SCAN_THREADS workers)
/// behind a reorder buffer.
fn run_scan(limits: ScanLimits, json: bool) -> Result<()> {
    let mut tuples = Vec::new();
    for a in 0..=limits.a {
        for b in 0..=limits.b {
            for c in 0..=limits.c {
                if a + b + c == 0 {
                    continue;
                }
                for n in 1..=limits.n.max(1) {
                    let d = 2 * a + b + c;
                    for r in 0..d {
                        for s in 0..n {
                            tuples.push(DunwoodyTuple::new(a, b, c, n, r as i64, s as i64)?);
                        }
                    }
                }
            }
        }
    }
    let threads = std::env::var("PLATSLIDE_SCAN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|v| v.get())
                .unwrap_or(1)
        })
        .min(tuples.len().max(1));

    fn evaluate(t: DunwoodyTuple) -> Result<Option<ScanRecord>> {
        let report = dunwoody::admissibility(t)?;
        if !report.admissible {
            return Ok(None);
        }
        let h = dunwoody_h1(t)?;
        Ok(Some(ScanRecord {
            tuple: [t.a, t.b, t.c, t.n, t.r, t.s],
            m: report.m,
            h1: h.to_string(),
        }))
    }

    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<Option<ScanRecord>>)>();
    let mut first_error: Option<Error> = None;
    std::thread::scope(|scope| {
        for _ in 0..threads {
            let tx = tx.clone();
            let tuples = &tuples;
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= tuples.len() {
                    break;
                }
                if tx.send((i, evaluate(tuples[i]))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending: BTreeMap<usize, Result<Option<ScanRecord>>> = BTreeMap::new();
        let mut want = 0usize;
        for (i, row) in rx {
            pending.insert(i, row);
            while let Some(row) = pending.remove(&want) {
                want += 1;
                match row {
                    Ok(Some(rec)) => {
                        if json {
                            outln!("{}", serde_json::to_string(&rec).unwrap());
                        } else {
                            let [a, b, c, n, r, s] = rec.tuple;
                            outln!(
                                "({},{},{},{},{},{}) m={} H1={}",
                                a, b, c, n, r, s, rec.m, rec.h1
                            );
                        }
                    }
                    Ok(None) => {}
                    Err(e) => {
                        if first_error.is_none() {
                            first_error = Some(e);
                        }
                    }
                }
            }
        }
    });
    match first_error {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
