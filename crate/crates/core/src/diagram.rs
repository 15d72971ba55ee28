//! Topological link diagrams extracted from fronts.
//!
//! A diagram is a set of 4-valent crossings plus a perfect matching on their
//! half-edges (the arcs), plus a count of crossing-free circles. Half-edge
//! slots are numbered counterclockwise SW=0, SE=1, NE=2, NW=3, so the two
//! strands occupy the diagonals (0,2) and (1,3). At a front crossing the
//! descending strand runs NW-SE and is the over strand (lesser slope in
//! front), so fronts always produce `over02 = false`; mirroring flips it.

use crate::error::{Error, Result};
use crate::orient::{OrientedFront, Sense};

/// Direction into the crossing when entering at a slot.
fn dir_in(slot: usize) -> (i64, i64) {
    // -pos(slot) for pos: SW=(-1,-1), SE=(1,-1), NE=(1,1), NW=(-1,1)
    match slot {
        0 => (1, 1),
        1 => (-1, 1),
        2 => (-1, -1),
        3 => (1, -1),
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct CrossingGeom {
    /// Entry slot of the (0,2) strand: 0 or 2.
    pub entry02: usize,
    /// Entry slot of the (1,3) strand: 1 or 3.
    pub entry13: usize,
}

impl CrossingGeom {
    pub(crate) fn sign(&self, over02: bool) -> i64 {
        let (over_entry, under_entry) = if over02 {
            (self.entry02, self.entry13)
        } else {
            (self.entry13, self.entry02)
        };
        let o = dir_in(over_entry);
        let u = dir_in(under_entry);
        (o.0 * u.1 - o.1 * u.0).signum()
    }
}

/// A combinatorial link diagram with over/under data and orientation.
#[derive(Debug, Clone)]
pub struct LinkDiagram {
    pub(crate) geom: Vec<CrossingGeom>,
    pub(crate) over02: Vec<bool>,
    /// pairing[h] = the half-edge joined to h by an arc; involution.
    pub(crate) pairing: Vec<usize>,
    pub(crate) free_circles: usize,
}

impl LinkDiagram {
    /// Builds the diagram of an oriented front: crossings carry over/under by
    /// the descending-over rule, cusps become smooth turns.
    pub fn from_front(front: &OrientedFront) -> Result<LinkDiagram> {
        if front.front().is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let map = front.strand_map();
        let senses = front.senses();
        let sites = map.crossings();
        let n = sites.len();
        let strands = map.strands();

        // Per strand, the crossing passes in column order, by the slot at the
        // geometric left of the pass: SW(0) for the ascending strand, NW(3)
        // for the descending (over) strand.
        let mut passes: Vec<Vec<(usize, usize)>> = vec![Vec::new(); strands.len()];
        for (ci, site) in sites.iter().enumerate() {
            passes[site.lower].push((ci, 0));
            passes[site.upper].push((ci, 3));
        }

        // Points: crossing half-edges 0..4n, then two cusp ends per strand.
        let left_end = |s: usize| 4 * n + 2 * s;
        let right_end = |s: usize| 4 * n + 2 * s + 1;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 4 * n + 2 * strands.len()];
        let connect = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for (s, ps) in passes.iter().enumerate() {
            let mut prev = left_end(s);
            for &(ci, left_slot) in ps {
                let (first, second) = if left_slot == 0 {
                    (4 * ci, 4 * ci + 2)
                } else {
                    (4 * ci + 3, 4 * ci + 1)
                };
                connect(prev, first, &mut adj);
                prev = second;
            }
            connect(prev, right_end(s), &mut adj);
        }
        for (s, info) in strands.iter().enumerate() {
            if s < info.birth_partner {
                connect(left_end(s), left_end(info.birth_partner), &mut adj);
            }
            if s < info.death_partner {
                connect(right_end(s), right_end(info.death_partner), &mut adj);
            }
        }

        // Contract cusp ends: walk from each half-edge to the next half-edge;
        // pure cusp cycles become free circles.
        let mut pairing = vec![usize::MAX; 4 * n];
        for h in 0..4 * n {
            if pairing[h] != usize::MAX {
                continue;
            }
            let mut prev = h;
            let mut cur = adj[h][0];
            while cur >= 4 * n {
                let nbrs = &adj[cur];
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                prev = cur;
                cur = next;
            }
            pairing[h] = cur;
            pairing[cur] = h;
        }
        let mut free_circles = 0;
        let mut seen = vec![false; adj.len()];
        for p in 4 * n..adj.len() {
            if seen[p] || adj[p].is_empty() {
                continue;
            }
            // cusp ends always have degree 2; a cycle avoiding slots is a circle
            let mut cur = p;
            let mut prev = usize::MAX;
            let mut circle = true;
            loop {
                seen[cur] = true;
                let nbrs = &adj[cur];
                let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
                if next < 4 * n {
                    circle = false;
                    break;
                }
                prev = cur;
                cur = next;
                if cur == p {
                    break;
                }
            }
            if circle {
                free_circles += 1;
            } else {
                // mark the rest of this path as seen via the pairing walk
                continue;
            }
        }

        let geom = sites
            .iter()
            .map(|site| CrossingGeom {
                entry02: if senses[site.lower] == Sense::Right { 0 } else { 2 },
                entry13: if senses[site.upper] == Sense::Right { 3 } else { 1 },
            })
            .collect();

        Ok(LinkDiagram {
            geom,
            over02: vec![false; n],
            pairing,
            free_circles,
        })
    }

    pub fn n_crossings(&self) -> usize {
        self.geom.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Per-crossing signs under the diagram's orientation.
    pub fn signs(&self) -> Vec<i64> {
        self.geom
            .iter()
            .zip(&self.over02)
            .map(|(g, &o)| g.sign(o))
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().sum()
    }

    /// The mirror diagram: every crossing switched.
    pub fn mirrored(&self) -> LinkDiagram {
        LinkDiagram {
            geom: self.geom.clone(),
            over02: self.over02.iter().map(|o| !o).collect(),
            pairing: self.pairing.clone(),
            free_circles: self.free_circles,
        }
    }

    /// Number of link components (crossing components plus free circles).
    pub fn component_count(&self) -> usize {
        let n = self.geom.len();
        let mut seen = vec![false; 4 * n];
        let mut comps = 0;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut h = start;
            loop {
                seen[h] = true;
                let j = self.pairing[h];
                seen[j] = true;
                h = 4 * (j / 4) + (j + 2) % 4;
                if h == start {
                    break;
                }
            }
        }
        comps + self.free_circles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{trefoil, unknot, FrontDiagram};

    fn diagram(front: FrontDiagram) -> LinkDiagram {
        LinkDiagram::from_front(&OrientedFront::standard(front).unwrap()).unwrap()
    }

    #[test]
    fn unknot_is_a_free_circle() {
        let d = diagram(unknot());
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.free_circles(), 1);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn trefoil_diagram_shape() {
        let d = diagram(trefoil());
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.free_circles(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.signs(), vec![1, 1, 1]);
        assert_eq!(d.writhe(), 3);
        // pairing is an involution covering every half-edge
        for h in 0..12 {
            assert_eq!(d.pairing[d.pairing[h]], h);
        }
    }

    #[test]
    fn mirror_negates_signs() {
        let d = diagram(trefoil());
        let m = d.mirrored();
        assert_eq!(m.signs(), vec![-1, -1, -1]);
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.component_count(), 1);
    }

    #[test]
    fn kinked_unknot() {
        use crate::front::Event::{L, R, X};
        let f = FrontDiagram::new(vec![L(1), X(1), X(1), X(1), R(1)]);
        let d = diagram(f);
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), -3, "self-pair front crossings are negative");
    }
}
