//! Diagram export: a family-independent graph view of an open Heegaard
//! diagram, serialized as Graphviz DOT or JSON.

use crate::dunwoody::{ArcKind, OpenDiagram, Row};
use crate::takahashi::{TakKind, TakahashiDiagram};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ExportDisk {
    pub id: String,
    pub slots: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportEnd {
    pub disk: String,
    pub slot: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportArc {
    pub family: String,
    pub copy: usize,
    pub from: ExportEnd,
    pub to: ExportEnd,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportGraph {
    pub title: String,
    pub genus: usize,
    pub disks: Vec<ExportDisk>,
    pub arcs: Vec<ExportArc>,
    /// identified boundary circle pairs
    pub gluing: Vec<[String; 2]>,
}

pub fn from_dunwoody(diag: &OpenDiagram) -> ExportGraph {
    let t = diag.tuple;
    let disk_name = |row: Row, col: usize| match row {
        Row::Upper => format!("U{}", col),
        Row::Lower => format!("D{}", col),
    };
    let kind_name = |k: ArcKind| match k {
        ArcKind::Upper => "AU",
        ArcKind::Lower => "AL",
        ArcKind::Diagonal => "B",
        ArcKind::Vertical => "C",
    };
    ExportGraph {
        title: format!("dunwoody{}", t),
        genus: t.genus(),
        disks: (1..=t.n)
            .map(|i| ExportDisk {
                id: disk_name(Row::Upper, i),
                slots: t.d(),
            })
            .chain((1..=t.n).map(|i| ExportDisk {
                id: disk_name(Row::Lower, i),
                slots: t.d(),
            }))
            .collect(),
        arcs: diag
            .arcs
            .iter()
            .map(|a| ExportArc {
                family: format!("{}{}", kind_name(a.kind), a.family),
                copy: a.copy,
                from: ExportEnd {
                    disk: disk_name(a.ends[0].row, a.ends[0].col),
                    slot: a.ends[0].label,
                },
                to: ExportEnd {
                    disk: disk_name(a.ends[1].row, a.ends[1].col),
                    slot: a.ends[1].label,
                },
            })
            .collect(),
        gluing: (1..=t.n as i64)
            .map(|i| {
                let j = ((i + t.s as i64 - 1).rem_euclid(t.n as i64) + 1) as usize;
                [disk_name(Row::Upper, i as usize), disk_name(Row::Lower, j)]
            })
            .collect(),
    }
}

pub fn from_takahashi(diag: &TakahashiDiagram) -> ExportGraph {
    let params = diag.params;
    let disk_name = |row: Row, col: usize| match row {
        Row::Upper => format!("U{}", col),
        Row::Lower => format!("D{}", col),
    };
    let kind_name = |k: TakKind| match k {
        TakKind::AU => "AU",
        TakKind::AL => "AL",
        TakKind::B => "B",
        TakKind::C => "C",
        TakKind::F => "F",
        TakKind::G => "G",
        TakKind::X => "X",
        TakKind::Y => "Y",
    };
    let cols = 2 * params.n;
    ExportGraph {
        title: format!(
            "takahashi_{}_{}_{}_{}_{}",
            params.n, params.p, params.q, params.r, params.s
        ),
        genus: params.genus(),
        disks: (1..=cols)
            .map(|i| ExportDisk {
                id: disk_name(Row::Upper, i),
                slots: diag.slots[i - 1],
            })
            .chain((1..=cols).map(|i| ExportDisk {
                id: disk_name(Row::Lower, i),
                slots: diag.slots[i - 1],
            }))
            .collect(),
        arcs: diag
            .arcs
            .iter()
            .map(|a| ExportArc {
                family: format!("{}{}", kind_name(a.kind), a.base),
                copy: a.copy,
                from: ExportEnd {
                    disk: disk_name(a.ends[0].row, a.ends[0].col),
                    slot: a.ends[0].label,
                },
                to: ExportEnd {
                    disk: disk_name(a.ends[1].row, a.ends[1].col),
                    slot: a.ends[1].label,
                },
            })
            .collect(),
        gluing: (1..=cols)
            .map(|i| [disk_name(Row::Upper, i), disk_name(Row::Lower, i)])
            .collect(),
    }
}

pub fn to_dot(g: &ExportGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", g.title));
    out.push_str("  node [shape=circle];\n");
    for d in &g.disks {
        out.push_str(&format!("  {} [label=\"{} ({})\"];\n", d.id, d.id, d.slots));
    }
    for a in &g.arcs {
        out.push_str(&format!(
            "  {} -- {} [label=\"{}.{}\", taillabel=\"{}\", headlabel=\"{}\"];\n",
            a.from.disk, a.to.disk, a.family, a.copy, a.from.slot, a.to.slot
        ));
    }
    for [x, y] in &g.gluing {
        out.push_str(&format!("  {} -- {} [style=dashed, constraint=false];\n", x, y));
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &ExportGraph) -> String {
    let mut s = serde_json::to_string_pretty(g).expect("export graph serializes");
    s.push('\n');
    s
}
