//! Strand tracing, components, orientations and the classical invariants
//! (writhe, Thurston-Bennequin, rotation).

use crate::error::{Error, Result};
use crate::front::{Event, FrontDiagram};
use serde::Serialize;

/// Horizontal sense of a strand under an orientation of the link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sense {
    Right,
    Left,
}

impl Sense {
    pub fn flip(self) -> Sense {
        match self {
            Sense::Right => Sense::Left,
            Sense::Left => Sense::Right,
        }
    }
}

/// Where a strand is born and dies, and who it is paired with at each cusp.
#[derive(Debug, Clone)]
pub struct StrandInfo {
    pub birth_column: usize,
    pub death_column: usize,
    /// True if this strand is the upper of its birth pair.
    pub birth_upper: bool,
    pub birth_partner: usize,
    pub death_partner: usize,
    pub component: usize,
}

/// A crossing together with the two strands it transposes.
#[derive(Debug, Clone, Copy)]
pub struct CrossingSite {
    pub column: usize,
    pub level: usize,
    /// Strand entering at level `level` (ascends through the crossing).
    pub lower: usize,
    /// Strand entering at level `level + 1` (descends; in front, the over strand).
    pub upper: usize,
}

/// Full sweep data for a valid front: stack states at every gap, strand
/// biographies, crossings and component labels.
#[derive(Debug, Clone)]
pub struct StrandMap {
    stacks: Vec<Vec<usize>>,
    strands: Vec<StrandInfo>,
    crossings: Vec<CrossingSite>,
    component_count: usize,
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
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl StrandMap {
    pub fn build(front: &FrontDiagram) -> Result<StrandMap> {
        let mut stack: Vec<usize> = Vec::new();
        let mut stacks = vec![Vec::new()];
        let mut strands: Vec<StrandInfo> = Vec::new();
        let mut crossings = Vec::new();
        let n = front.events().len();

        for (column, ev) in front.events().iter().enumerate() {
            let s = stack.len();
            match *ev {
                Event::L(l) => {
                    if l < 1 || l > s + 1 {
                        return Err(Error::InvalidFront {
                            column,
                            reason: format!("LeftCusp level {l} out of range"),
                        });
                    }
                    let lo = strands.len();
                    let up = lo + 1;
                    for (id, upper) in [(lo, false), (up, true)] {
                        strands.push(StrandInfo {
                            birth_column: column,
                            death_column: usize::MAX,
                            birth_upper: upper,
                            birth_partner: lo + up - id,
                            death_partner: usize::MAX,
                            component: usize::MAX,
                        });
                    }
                    stack.splice(l - 1..l - 1, [lo, up]);
                }
                Event::R(l) => {
                    if s < 2 || l < 1 || l > s - 1 {
                        return Err(Error::InvalidFront {
                            column,
                            reason: format!("RightCusp level {l} out of range"),
                        });
                    }
                    let lo = stack[l - 1];
                    let up = stack[l];
                    strands[lo].death_column = column;
                    strands[up].death_column = column;
                    strands[lo].death_partner = up;
                    strands[up].death_partner = lo;
                    stack.drain(l - 1..l + 1);
                }
                Event::X(l) => {
                    if s < 2 || l < 1 || l > s - 1 {
                        return Err(Error::InvalidFront {
                            column,
                            reason: format!("Crossing level {l} out of range"),
                        });
                    }
                    crossings.push(CrossingSite {
                        column,
                        level: l,
                        lower: stack[l - 1],
                        upper: stack[l],
                    });
                    stack.swap(l - 1, l);
                }
            }
            stacks.push(stack.clone());
        }
        if !stack.is_empty() {
            return Err(Error::InvalidFront {
                column: n,
                reason: format!("nonzero final strand count {}", stack.len()),
            });
        }

        let mut uf = UnionFind::new(strands.len());
        for (id, info) in strands.iter().enumerate() {
            uf.union(id, info.birth_partner);
            uf.union(id, info.death_partner);
        }
        let mut component_count = 0;
        let mut label = vec![usize::MAX; strands.len()];
        for id in 0..strands.len() {
            let root = uf.find(id);
            if label[root] == usize::MAX {
                label[root] = component_count;
                component_count += 1;
            }
            strands[id].component = label[root];
        }

        Ok(StrandMap {
            stacks,
            strands,
            crossings,
            component_count,
        })
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn strands(&self) -> &[StrandInfo] {
        &self.strands
    }

    pub fn crossings(&self) -> &[CrossingSite] {
        &self.crossings
    }

    /// Stack of strand ids in the gap before column `gap` (0..=events.len()).
    pub fn stack_before(&self, gap: usize) -> &[usize] {
        &self.stacks[gap]
    }

    /// Strand occupying `level` in the gap before column `gap`.
    pub fn strand_at(&self, gap: usize, level: usize) -> usize {
        self.stacks[gap][level - 1]
    }

    /// Canonical orientation: in each component the lowest-numbered strand
    /// runs rightward; senses alternate across cusps.
    pub fn canonical_senses(&self) -> Vec<Sense> {
        let mut senses = vec![None; self.strands.len()];
        for start in 0..self.strands.len() {
            if senses[start].is_some() {
                continue;
            }
            senses[start] = Some(Sense::Right);
            let mut frontier = vec![start];
            while let Some(id) = frontier.pop() {
                let here = senses[id].unwrap();
                for other in [self.strands[id].birth_partner, self.strands[id].death_partner] {
                    if senses[other].is_none() {
                        senses[other] = Some(here.flip());
                        frontier.push(other);
                    }
                }
            }
        }
        senses.into_iter().map(Option::unwrap).collect()
    }
}

/// Component count and per-strand component labels.
#[derive(Debug, Clone, Serialize)]
pub struct Components {
    pub count: usize,
    pub strand_component: Vec<usize>,
}

/// Component count via union-find over cusp births and deaths.
pub fn components(front: &FrontDiagram) -> Result<Components> {
    front.checked()?;
    let map = StrandMap::build(front)?;
    Ok(Components {
        count: map.component_count(),
        strand_component: map.strands().iter().map(|s| s.component).collect(),
    })
}

/// A front together with a consistent orientation (one sense per strand).
#[derive(Debug, Clone)]
pub struct OrientedFront {
    front: FrontDiagram,
    senses: Vec<Sense>,
    map: StrandMap,
}

impl OrientedFront {
    /// Canonical orientation: lowest strand of each component runs rightward.
    pub fn standard(front: FrontDiagram) -> Result<OrientedFront> {
        front.checked()?;
        let map = StrandMap::build(&front)?;
        let senses = map.canonical_senses();
        Ok(OrientedFront { front, senses, map })
    }

    /// Explicit orientation; rejects senses that disagree across a cusp.
    pub fn with_senses(front: FrontDiagram, senses: Vec<Sense>) -> Result<OrientedFront> {
        front.checked()?;
        let map = StrandMap::build(&front)?;
        if senses.len() != map.strands().len() {
            return Err(Error::Domain(format!(
                "expected {} senses, got {}",
                map.strands().len(),
                senses.len()
            )));
        }
        for (id, info) in map.strands().iter().enumerate() {
            if senses[id] == senses[info.birth_partner] || senses[id] == senses[info.death_partner]
            {
                return Err(Error::Domain(format!(
                    "orientation inconsistent at strand {id}"
                )));
            }
        }
        Ok(OrientedFront { front, senses, map })
    }

    /// Reverses the orientation of every component.
    pub fn reversed(&self) -> OrientedFront {
        OrientedFront {
            front: self.front.clone(),
            senses: self.senses.iter().map(|s| s.flip()).collect(),
            map: self.map.clone(),
        }
    }

    pub fn front(&self) -> &FrontDiagram {
        &self.front
    }

    pub fn senses(&self) -> &[Sense] {
        &self.senses
    }

    pub fn strand_map(&self) -> &StrandMap {
        &self.map
    }

    pub fn component_count(&self) -> usize {
        self.map.component_count()
    }

    fn require_knot(&self) -> Result<()> {
        match self.component_count() {
            0 => Err(Error::EmptyDiagram),
            1 => Ok(()),
            n => Err(Error::MultiComponent { components: n }),
        }
    }

    /// Sum of crossing signs. A front crossing is positive exactly when the
    /// two strands run in the same horizontal sense.
    pub fn writhe(&self) -> Result<i64> {
        if self.front.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        Ok(self
            .map
            .crossings()
            .iter()
            .map(|c| {
                if self.senses[c.lower] == self.senses[c.upper] {
                    1
                } else {
                    -1
                }
            })
            .sum())
    }

    /// Per-crossing signs in column order.
    pub fn crossing_signs(&self) -> Vec<i8> {
        self.map
            .crossings()
            .iter()
            .map(|c| {
                if self.senses[c.lower] == self.senses[c.upper] {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Thurston-Bennequin number: writhe minus the number of right cusps.
    /// Defined here for knots only.
    pub fn tb(&self) -> Result<i64> {
        self.require_knot()?;
        Ok(self.writhe()? - self.front.right_cusps() as i64)
    }

    /// Rotation number: (down cusps - up cusps) / 2. Negates under
    /// orientation reversal. Knots only.
    pub fn rotation(&self) -> Result<i64> {
        self.require_knot()?;
        let (mut down, mut up) = (0i64, 0i64);
        for (column, ev) in self.front.events().iter().enumerate() {
            match *ev {
                Event::L(l) => {
                    // Upper strand of the born pair leaves rightward at an up cusp.
                    let upper = self.map.strand_at(column + 1, l + 1);
                    if self.senses[upper] == Sense::Right {
                        up += 1;
                    } else {
                        down += 1;
                    }
                }
                Event::R(l) => {
                    // Lower strand of the dying pair arrives rightward at an up cusp.
                    let lower = self.map.strand_at(column, l);
                    if self.senses[lower] == Sense::Right {
                        up += 1;
                    } else {
                        down += 1;
                    }
                }
                Event::X(_) => {}
            }
        }
        debug_assert_eq!((down - up) % 2, 0);
        Ok((down - up) / 2)
    }
}

/// Writhe under the canonical orientation.
pub fn writhe(front: &FrontDiagram) -> Result<i64> {
    OrientedFront::standard(front.clone())?.writhe()
}

/// tb under the canonical orientation (orientation independent).
pub fn tb(front: &FrontDiagram) -> Result<i64> {
    OrientedFront::standard(front.clone())?.tb()
}

/// Rotation number under the canonical orientation.
pub fn rotation(front: &FrontDiagram) -> Result<i64> {
    OrientedFront::standard(front.clone())?.rotation()
}
