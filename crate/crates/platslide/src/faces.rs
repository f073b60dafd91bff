//! Face combinatorics of an open Heegaard diagram.
//!
//! The diagram is a family of labelled circles ("disks") on the sphere with
//! arcs drawn between boundary slots.  Tracing faces of that plane graph via
//! rotation systems, discarding the disk interiors, and gluing the boundary
//! circles in pairs yields the closed genus-g surface together with its
//! region decomposition.  From that we read off what admissibility needs:
//! how many pieces the curve complement has, and the rank of the curve
//! classes in H_1 of the surface over Z/2.
//!
//! Disconnected diagrams (no arcs joining some columns) are drawn on one
//! sphere by inserting invisible bridge edges between components; any
//! placement gives a valid plane drawing and the glued-up surface does not
//! depend on the choice.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct DiskSpec {
    pub slots: usize,
    /// direction in which labels 1..slots are written around the circle
    pub clockwise: bool,
}

/// Circles-with-arcs graph on the sphere.  Arc endpoints are (disk, slot)
/// with slots 1-based; every slot must carry exactly one arc end.  `glue`
/// pairs circles with equal slot counts, identifying equal labels.
#[derive(Debug, Clone)]
pub struct SphereGraph {
    pub disks: Vec<DiskSpec>,
    pub arcs: Vec<[(usize, usize); 2]>,
    pub glue: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceReport {
    /// faces of the glued surface (complement regions of the arc system)
    pub regions: usize,
    /// connected pieces of the complement of the full arc system in the surface
    pub complement_components: usize,
    /// rank over Z/2 of the given curves' homology classes in the surface
    pub curve_z2_rank: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn unite(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

/// Z/2 row reduction over u64 limbs; returns the rank contribution of `row`
/// against the accumulated `basis` and absorbs it if independent.
fn gf2_absorb(basis: &mut Vec<Vec<u64>>, mut row: Vec<u64>) -> bool {
    for b in basis.iter() {
        let lead = b.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| (i, w.trailing_zeros()));
        if let Some((i, bit)) = lead {
            if row[i] >> bit & 1 == 1 {
                for (r, v) in row.iter_mut().zip(b.iter()) {
                    *r ^= v;
                }
            }
        }
    }
    if row.iter().all(|w| *w == 0) {
        false
    } else {
        basis.push(row);
        true
    }
}

pub fn analyze(g: &SphereGraph, curves: &[Vec<usize>]) -> Result<FaceReport> {
    let err = |m: String| Error::Diagram(m);

    // vertex ids
    let mut disk_vertex0 = Vec::with_capacity(g.disks.len());
    let mut nv = 0usize;
    for d in &g.disks {
        if d.slots == 0 {
            return Err(err("disk with no slots".into()));
        }
        disk_vertex0.push(nv);
        nv += d.slots;
    }
    let vid = |disk: usize, slot: usize| disk_vertex0[disk] + slot - 1;

    // edge ids: arcs, then one segment per (disk, gap), then bridges
    let na = g.arcs.len();
    let mut disk_seg0 = Vec::with_capacity(g.disks.len());
    let mut ns = 0usize;
    for d in &g.disks {
        disk_seg0.push(na + ns);
        ns += d.slots;
    }
    let seg_id = |disk: usize, gap: usize| disk_seg0[disk] + gap - 1;
    let seg_of = |edge: usize| -> (usize, usize) {
        let disk = disk_seg0.partition_point(|&o| o <= edge) - 1;
        (disk, edge - disk_seg0[disk] + 1)
    };

    // one arc end per slot
    let mut arc_at: Vec<Option<(usize, usize)>> = vec![None; nv];
    for (ai, ends) in g.arcs.iter().enumerate() {
        for (endi, &(disk, slot)) in ends.iter().enumerate() {
            if disk >= g.disks.len() || slot < 1 || slot > g.disks[disk].slots {
                return Err(err(format!("arc {} endpoint out of range", ai)));
            }
            let v = vid(disk, slot);
            if arc_at[v].replace((ai, endi)).is_some() {
                return Err(err(format!("two arc ends on disk {} slot {}", disk, slot)));
            }
        }
    }
    if let Some(v) = arc_at.iter().position(|a| a.is_none()) {
        return Err(err(format!("empty slot (vertex {})", v)));
    }

    // connectivity of the plane graph; bridge the components together
    let mut comp = UnionFind::new(nv);
    for d in 0..g.disks.len() {
        for slot in 1..g.disks[d].slots {
            comp.unite(vid(d, slot), vid(d, slot + 1));
        }
    }
    for ends in &g.arcs {
        comp.unite(vid(ends[0].0, ends[0].1), vid(ends[1].0, ends[1].1));
    }
    let mut reps: Vec<usize> = Vec::new();
    let mut seen = vec![false; nv];
    for v in 0..nv {
        let r = comp.find(v);
        if !seen[r] {
            seen[r] = true;
            reps.push(v);
        }
    }
    let bridges: Vec<(usize, usize)> = reps[1..].iter().map(|&v| (reps[0], v)).collect();
    let nb = bridges.len();
    let ne = na + ns + nb;

    // rotation lists; directed edge = 2*edge + dir
    let mut rotation: Vec<Vec<usize>> = vec![Vec::with_capacity(3); nv];
    for d in 0..g.disks.len() {
        let slots = g.disks[d].slots;
        for slot in 1..=slots {
            let v = vid(d, slot);
            let (ai, endi) = arc_at[v].unwrap();
            let arc_out = 2 * ai + endi;
            let next_gap = slot; // gap from slot to slot+1
            let prev_gap = (slot + slots - 2) % slots + 1;
            let to_next = 2 * seg_id(d, next_gap);
            let to_prev = 2 * seg_id(d, prev_gap) + 1;
            if g.disks[d].clockwise {
                rotation[v].extend([arc_out, to_prev, to_next]);
            } else {
                rotation[v].extend([arc_out, to_next, to_prev]);
            }
        }
    }
    for (bi, &(a, b)) in bridges.iter().enumerate() {
        let e = na + ns + bi;
        rotation[a].push(2 * e);
        rotation[b].push(2 * e + 1);
    }

    let mut rot_pos = vec![(0usize, 0usize); 2 * ne];
    for (v, list) in rotation.iter().enumerate() {
        for (pos, &de) in list.iter().enumerate() {
            rot_pos[de] = (v, pos);
        }
    }

    // face tracing: successor of e is rotation-next after reverse(e)
    let succ = |de: usize| -> usize {
        let (v, pos) = rot_pos[de ^ 1];
        rotation[v][(pos + 1) % rotation[v].len()]
    };
    let mut face_of = vec![usize::MAX; 2 * ne];
    let mut face_edges: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * ne {
        if face_of[start] != usize::MAX {
            continue;
        }
        let fid = face_edges.len();
        let mut orbit = Vec::new();
        let mut e = start;
        loop {
            face_of[e] = fid;
            orbit.push(e);
            e = succ(e);
            if e == start {
                break;
            }
        }
        face_edges.push(orbit);
    }
    let nf = face_edges.len();
    let euler_sphere = nv as i64 - ne as i64 + nf as i64;
    if euler_sphere != 2 {
        return Err(err(format!(
            "plane graph face count is inconsistent (V-E+F = {})",
            euler_sphere
        )));
    }

    // disk interiors: the unique all-own-segment face of each disk
    let mut disk_face = vec![usize::MAX; g.disks.len()];
    let mut is_disk_face = vec![false; nf];
    for (fid, orbit) in face_edges.iter().enumerate() {
        let mut one_disk: Option<usize> = None;
        let all_segs = orbit.iter().all(|&de| {
            let e = de >> 1;
            if e < na || e >= na + ns {
                return false;
            }
            let (disk, _) = seg_of(e);
            match one_disk {
                None => {
                    one_disk = Some(disk);
                    true
                }
                Some(d) => d == disk,
            }
        });
        if all_segs {
            let d = one_disk.unwrap();
            if disk_face[d] != usize::MAX {
                return Err(err(format!("disk {} has two interior faces", d)));
            }
            disk_face[d] = fid;
            is_disk_face[fid] = true;
        }
    }
    if let Some(d) = disk_face.iter().position(|&f| f == usize::MAX) {
        return Err(err(format!("disk {} has no interior face", d)));
    }

    // pair the circles; every disk in exactly one glue pair
    let mut pair_of = vec![usize::MAX; g.disks.len()];
    let mut pair_seg0 = Vec::with_capacity(g.glue.len());
    let mut nglued = 0usize;
    for (pi, &(d1, d2)) in g.glue.iter().enumerate() {
        if d1 == d2 || d1 >= g.disks.len() || d2 >= g.disks.len() {
            return Err(err(format!("bad glue pair {:?}", (d1, d2))));
        }
        if g.disks[d1].slots != g.disks[d2].slots {
            return Err(err(format!("glued disks {} and {} differ in slots", d1, d2)));
        }
        for d in [d1, d2] {
            if pair_of[d] != usize::MAX {
                return Err(err(format!("disk {} glued twice", d)));
            }
            pair_of[d] = pi;
        }
        pair_seg0.push(nglued);
        nglued += g.disks[d1].slots;
    }
    if let Some(d) = pair_of.iter().position(|&p| p == usize::MAX) {
        return Err(err(format!("disk {} is not glued", d)));
    }

    // region side of each boundary gap
    let region_of_gap = |disk: usize, gap: usize| -> Result<usize> {
        let e = seg_id(disk, gap);
        let (f0, f1) = (face_of[2 * e], face_of[2 * e + 1]);
        match (f0 == disk_face[disk], f1 == disk_face[disk]) {
            (true, false) => Ok(f1),
            (false, true) => Ok(f0),
            _ => Err(err(format!(
                "gap {} of disk {} does not separate interior from a region",
                gap, disk
            ))),
        }
    };

    // glue regions across identified gaps and count components
    let mut region_uf = UnionFind::new(nf);
    for &(d1, d2) in &g.glue {
        for gap in 1..=g.disks[d1].slots {
            let r1 = region_of_gap(d1, gap)?;
            let r2 = region_of_gap(d2, gap)?;
            region_uf.unite(r1, r2);
        }
    }
    let mut comp_seen = vec![false; nf];
    let mut complement_components = 0usize;
    for fid in 0..nf {
        if is_disk_face[fid] {
            continue;
        }
        let r = region_uf.find(fid);
        if !comp_seen[r] {
            comp_seen[r] = true;
            complement_components += 1;
        }
    }

    let regions = nf - g.disks.len();
    let glued_euler = regions as i64 - na as i64 - nb as i64;
    let expect = 2 - 2 * g.glue.len() as i64;
    if glued_euler != expect {
        return Err(err(format!(
            "glued surface Euler characteristic {} differs from {}",
            glued_euler, expect
        )));
    }

    // Z/2 boundary space of the glued complex: coordinates are arcs then
    // glued gap classes; bridges bound a face on both sides and drop out
    let width = na + nglued;
    let limbs = width.div_ceil(64);
    let coord = |edge: usize| -> Option<usize> {
        if edge < na {
            Some(edge)
        } else if edge < na + ns {
            let (disk, gap) = seg_of(edge);
            Some(na + pair_seg0[pair_of[disk]] + gap - 1)
        } else {
            None
        }
    };
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for (fid, orbit) in face_edges.iter().enumerate() {
        if is_disk_face[fid] {
            continue;
        }
        let mut row = vec![0u64; limbs];
        for &de in orbit {
            if let Some(c) = coord(de >> 1) {
                row[c / 64] ^= 1u64 << (c % 64);
            }
        }
        gf2_absorb(&mut basis, row);
    }
    let mut curve_z2_rank = 0usize;
    for curve in curves {
        let mut row = vec![0u64; limbs];
        for &arc in curve {
            if arc >= na {
                return Err(err(format!("curve references arc {} of {}", arc, na)));
            }
            row[arc / 64] ^= 1u64 << (arc % 64);
        }
        if gf2_absorb(&mut basis, row) {
            curve_z2_rank += 1;
        }
    }

    Ok(FaceReport {
        regions,
        complement_components,
        curve_z2_rank,
    })
}
