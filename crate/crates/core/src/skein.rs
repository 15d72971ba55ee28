//! Exact skein engines: the Dubrovnik form of the Kauffman polynomial with
//! its Thurston-Bennequin bound, and the Conway polynomial.
//!
//! Both engines resolve crossings toward descending diagrams. The traversal
//! route depends only on the arc structure, never on over/under data, so
//! switching the first badly-met crossing strictly advances the descending
//! prefix and the recursion terminates. Smoothings drop a crossing. Partially
//! resolved diagrams are memoized on their exact combinatorial encoding,
//! which is identical no matter in which order commuting resolutions were
//! applied.

use crate::diagram::{CrossingGeom, LinkDiagram};
use crate::error::{Error, Result};
use crate::poly::{Laurent1, Laurent2};
use std::collections::HashMap;

/// Default crossing cap guarding the exponential recursion.
pub const DEFAULT_CROSSING_CAP: usize = 14;

/// Hard ceiling imposed by the bitmask state encoding.
const MASK_LIMIT: usize = 60;

#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    alive: u64,
    over02: u64,
    pairing: Vec<u16>,
    free: u32,
}

impl State {
    fn initial(d: &LinkDiagram) -> State {
        let mut over02 = 0u64;
        for (i, &o) in d.over02.iter().enumerate() {
            if o {
                over02 |= 1 << i;
            }
        }
        State {
            alive: if d.n_crossings() == 0 {
                0
            } else {
                (1u64 << d.n_crossings()) - 1
            },
            over02,
            pairing: d.pairing.iter().map(|&p| p as u16).collect(),
            free: d.free_circles as u32,
        }
    }

    fn is_over(&self, c: usize, slot: usize) -> bool {
        let on02 = slot % 2 == 0;
        (self.over02 >> c & 1 == 1) == on02
    }

    fn switched(&self, c: usize) -> State {
        let mut s = self.clone();
        s.over02 ^= 1 << c;
        s
    }

    /// Removes crossing `c`, reconnecting its slots in the two given pairs.
    fn smoothed(&self, c: usize, joins: [(usize, usize); 2]) -> State {
        let mut s = self.clone();
        s.alive &= !(1 << c);
        for (x, y) in joins {
            let a = (4 * c + x) as u16;
            let b = (4 * c + y) as u16;
            let pa = s.pairing[a as usize];
            let pb = s.pairing[b as usize];
            if pa == b {
                s.free += 1;
            } else {
                s.pairing[pa as usize] = pb;
                s.pairing[pb as usize] = pa;
            }
        }
        for slot in 0..4 {
            s.pairing[4 * c + slot] = u16::MAX;
        }
        s
    }
}

struct Walk {
    /// First crossing reached on its under strand, in traversal order.
    first_bad: Option<usize>,
    /// Arrival records per crossing: (component, slot), exactly two when alive.
    arrivals: Vec<Vec<(usize, usize)>>,
    components: usize,
}

fn traverse(state: &State, n: usize) -> Walk {
    let mut visited = vec![false; 4 * n];
    let mut arrivals = vec![Vec::new(); n];
    let mut first_bad = None;
    let mut encountered = vec![false; n];
    let mut components = 0;

    for start in 0..4 * n {
        if visited[start] || state.alive >> (start / 4) & 1 == 0 {
            continue;
        }
        let comp = components;
        components += 1;
        let mut h = start;
        loop {
            visited[h] = true;
            let j = state.pairing[h] as usize;
            visited[j] = true;
            let (c, slot) = (j / 4, j % 4);
            arrivals[c].push((comp, slot));
            if !encountered[c] {
                encountered[c] = true;
                if first_bad.is_none() && !state.is_over(c, slot) {
                    first_bad = Some(c);
                }
            }
            h = 4 * c + (slot + 2) % 4;
            if h == start {
                break;
            }
        }
    }
    Walk {
        first_bad,
        arrivals,
        components,
    }
}

fn dir_in(slot: usize) -> (i64, i64) {
    match slot {
        0 => (1, 1),
        1 => (-1, 1),
        2 => (-1, -1),
        3 => (1, -1),
        _ => unreachable!(),
    }
}

struct DubrovnikEngine {
    n: usize,
    memo: HashMap<State, Laurent2>,
    delta: Laurent2,
    z: Laurent2,
}

impl DubrovnikEngine {
    fn new(n: usize) -> Self {
        DubrovnikEngine {
            n,
            memo: HashMap::new(),
            // loop value: (a - a^{-1}) z^{-1} + 1
            delta: Laurent2::from_terms(&[(1, -1, 1), (-1, -1, -1), (0, 0, 1)]),
            z: Laurent2::monomial(0, 1, 1),
        }
    }

    fn eval(&mut self, state: State) -> Laurent2 {
        if let Some(hit) = self.memo.get(&state) {
            return hit.clone();
        }
        let walk = traverse(&state, self.n);
        let value = match walk.first_bad {
            None => self.terminal(&state, &walk),
            Some(c) => {
                // D(L) = D(switched) + z (D(cw smoothing) - D(ccw smoothing)),
                // rotating the over diagonal clockwise resp. counterclockwise.
                let over02 = state.over02 >> c & 1 == 1;
                let (cw, ccw) = if over02 {
                    ([(0, 3), (1, 2)], [(0, 1), (2, 3)])
                } else {
                    ([(0, 1), (2, 3)], [(1, 2), (3, 0)])
                };
                let switched = self.eval(state.switched(c));
                let s_cw = self.eval(state.smoothed(c, cw));
                let s_ccw = self.eval(state.smoothed(c, ccw));
                switched + &self.z * &(s_cw - s_ccw)
            }
        };
        self.memo.insert(state, value.clone());
        value
    }

    /// Value of a descending diagram: delta^{components-1} a^{sum of self
    /// crossing signs}, with orientations taken from the traversal itself.
    fn terminal(&self, state: &State, walk: &Walk) -> Laurent2 {
        let mut curl = 0i64;
        for c in 0..self.n {
            if state.alive >> c & 1 == 0 {
                continue;
            }
            let a = &walk.arrivals[c];
            debug_assert_eq!(a.len(), 2);
            if a[0].0 == a[1].0 {
                let (s1, s2) = (a[0].1, a[1].1);
                let (over_s, under_s) = if state.is_over(c, s1) { (s1, s2) } else { (s2, s1) };
                let o = dir_in(over_s);
                let u = dir_in(under_s);
                curl += (o.0 * u.1 - o.1 * u.0).signum();
            }
        }
        let total = walk.components + state.free as usize;
        if total == 0 {
            return Laurent2::one();
        }
        let mut value = Laurent2::monomial(curl as i32, 0, 1);
        for _ in 1..total {
            value = &value * &self.delta;
        }
        value
    }
}

fn check_cap(d: &LinkDiagram, cap: usize) -> Result<()> {
    let cap = cap.min(MASK_LIMIT);
    if d.n_crossings() > cap {
        return Err(Error::CrossingCapExceeded {
            crossings: d.n_crossings(),
            cap,
        });
    }
    Ok(())
}

/// The Dubrovnik polynomial normalized by writhe: an invariant of the
/// oriented link with value 1 on the unknot.
pub fn kauffman_polynomial(d: &LinkDiagram, cap: usize) -> Result<Laurent2> {
    check_cap(d, cap)?;
    let mut engine = DubrovnikEngine::new(d.n_crossings());
    let raw = engine.eval(State::initial(d));
    let w = d.writhe();
    Ok(raw.shift(-(w as i32), 0, 1))
}

/// The Kauffman bound on the maximal Thurston-Bennequin number:
/// -(maximal a-degree) - 1. Equals -1 on the unknot.
pub fn kauffman_bound(d: &LinkDiagram, cap: usize) -> Result<i64> {
    let f = kauffman_polynomial(d, cap)?;
    let deg = f
        .max_a_degree()
        .ok_or_else(|| Error::Postcondition("kauffman polynomial is zero".into()))?;
    Ok(-(deg as i64) - 1)
}

struct ConwayEngine {
    n: usize,
    geom: Vec<CrossingGeom>,
    memo: HashMap<State, Laurent1>,
    z: Laurent1,
}

impl ConwayEngine {
    fn new(d: &LinkDiagram) -> Self {
        ConwayEngine {
            n: d.n_crossings(),
            geom: d.geom.clone(),
            memo: HashMap::new(),
            z: Laurent1::monomial(1, 1),
        }
    }

    fn eval(&mut self, state: State) -> Laurent1 {
        if let Some(hit) = self.memo.get(&state) {
            return hit.clone();
        }
        let walk = traverse(&state, self.n);
        let value = match walk.first_bad {
            None => {
                // descending diagrams are unlinks
                let total = walk.components + state.free as usize;
                if total == 1 {
                    Laurent1::one()
                } else {
                    Laurent1::zero()
                }
            }
            Some(c) => {
                let g = self.geom[c];
                let sign = g.sign(state.over02 >> c & 1 == 1);
                // oriented smoothing: each entry joins the other strand's exit
                let joins = [
                    (g.entry02, (g.entry13 + 2) % 4),
                    (g.entry13, (g.entry02 + 2) % 4),
                ];
                let switched = self.eval(state.switched(c));
                let smoothed = self.eval(state.smoothed(c, joins));
                let term = &self.z * &smoothed;
                if sign > 0 {
                    switched + term
                } else {
                    switched - term
                }
            }
        };
        self.memo.insert(state, value.clone());
        value
    }
}

/// The Conway polynomial of the oriented link. For knots this is an even
/// polynomial with constant term 1; split links give 0.
pub fn conway_polynomial(d: &LinkDiagram, cap: usize) -> Result<Laurent1> {
    check_cap(d, cap)?;
    let mut engine = ConwayEngine::new(d);
    Ok(engine.eval(State::initial(d)))
}

/// The second derivative of the Alexander polynomial at 1, computed as twice
/// the z^2 coefficient of the Conway polynomial.
pub fn alexander_second_derivative(d: &LinkDiagram, cap: usize) -> Result<i64> {
    Ok(2 * conway_polynomial(d, cap)?.coeff(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{trefoil, unknot, Event, FrontDiagram, StabSign};
    use crate::orient::OrientedFront;
    use Event::{L, R, X};

    fn diagram(front: FrontDiagram) -> LinkDiagram {
        LinkDiagram::from_front(&OrientedFront::standard(front).unwrap()).unwrap()
    }

    fn kauffman(front: FrontDiagram) -> Laurent2 {
        kauffman_polynomial(&diagram(front), DEFAULT_CROSSING_CAP).unwrap()
    }

    fn conway(front: FrontDiagram) -> Laurent1 {
        conway_polynomial(&diagram(front), DEFAULT_CROSSING_CAP).unwrap()
    }

    #[test]
    fn unknot_normalizations() {
        assert_eq!(kauffman(unknot()), Laurent2::one());
        assert_eq!(conway(unknot()), Laurent1::one());
        assert_eq!(
            kauffman_bound(&diagram(unknot()), DEFAULT_CROSSING_CAP).unwrap(),
            -1
        );
    }

    #[test]
    fn kinked_unknots_normalize_to_one() {
        // curls must cancel against the writhe normalization
        let kinked = FrontDiagram::new(vec![L(1), X(1), X(1), X(1), R(1)]);
        assert_eq!(kauffman(kinked.clone()), Laurent2::one());
        assert_eq!(conway(kinked), Laurent1::one());
        let stab = unknot().stabilize(StabSign::Pos, 1, 1).unwrap();
        assert_eq!(kauffman(stab.clone()), Laurent2::one());
        assert_eq!(conway(stab), Laurent1::one());
    }

    #[test]
    fn two_component_unlinks() {
        let stacked = FrontDiagram::new(vec![L(1), L(3), R(3), R(1)]);
        let nested = FrontDiagram::new(vec![L(1), L(2), R(2), R(1)]);
        let delta = Laurent2::from_terms(&[(1, -1, 1), (-1, -1, -1), (0, 0, 1)]);
        assert_eq!(kauffman(stacked.clone()), delta);
        assert_eq!(kauffman(nested), delta);
        assert_eq!(conway(stacked), Laurent1::zero());
    }

    #[test]
    fn conway_of_trefoil_matches_seifert_oracle() {
        // Oracle: det(x V - x^{-1} V^T) for the genus-1 Seifert matrix
        // V = [[-1, 1], [0, -1]], evaluated as a Laurent polynomial in x and
        // rewritten in z = x - x^{-1}:
        //   det = (x - x^{-1})^2 + 1  =>  conway = z^2 + 1.
        let expected = Laurent1::from_terms(&[(0, 1), (2, 1)]);
        assert_eq!(seifert_conway(&[[-1, 1], [0, -1]]), expected);
        assert_eq!(conway(trefoil()), expected);
    }

    /// Conway polynomial from a 2x2 Seifert matrix, via det(xV - x^{-1}V^T)
    /// expanded exactly and converted with z^2 = (x - x^{-1})^2.
    fn seifert_conway(v: &[[i64; 2]; 2]) -> Laurent1 {
        // entries of xV - x^{-1}V^T as Laurent polynomials in x
        let entry = |i: usize, j: usize| {
            Laurent1::from_terms(&[(1, v[i][j]), (-1, -v[j][i])])
        };
        let det = &(&entry(0, 0) * &entry(1, 1)) - &(&entry(0, 1) * &entry(1, 0));
        // det is symmetric in x <-> -x^{-1}; rewrite in z = x - x^{-1}
        // by repeatedly subtracting z^k expansions from the top degree.
        let z_in_x = Laurent1::from_terms(&[(1, 1), (-1, -1)]);
        let mut rem = det;
        let mut out = Laurent1::zero();
        while let Some(d) = rem.max_degree() {
            if d < 0 {
                panic!("conversion to conway form failed: {rem}");
            }
            let c = rem.coeff(d);
            let mut zk = Laurent1::one();
            for _ in 0..d {
                zk = &zk * &z_in_x;
            }
            rem = &rem - &zk.shift(0, c);
            out.add_term(d, c);
        }
        assert!(rem.is_zero());
        out
    }

    #[test]
    fn trefoil_kauffman_properties() {
        let f = kauffman(trefoil());
        // Rutherford sharpness: the trefoil certifies tb = 1, so the bound is 1.
        assert_eq!(
            kauffman_bound(&diagram(trefoil()), DEFAULT_CROSSING_CAP).unwrap(),
            1
        );
        assert_eq!(f.max_a_degree(), Some(-2));
        // the polynomial of the mirror diagram, computed independently
        let m = diagram(trefoil()).mirrored();
        let fm = kauffman_polynomial(&m, DEFAULT_CROSSING_CAP).unwrap();
        assert_eq!(fm, f.invert_a().negate_z());
        assert_eq!(
            kauffman_bound(&m, DEFAULT_CROSSING_CAP).unwrap(),
            -6,
            "mirror trefoil bound"
        );
    }

    #[test]
    fn invariance_across_trefoil_fronts() {
        let alt = FrontDiagram::new(vec![L(1), L(3), X(2), X(2), X(2), R(3), R(1)]);
        assert_eq!(kauffman(trefoil()), kauffman(alt.clone()));
        assert_eq!(conway(trefoil()), conway(alt.clone()));
        let stab = trefoil().stabilize(StabSign::Pos, 1, 1).unwrap();
        assert_eq!(kauffman(trefoil()), kauffman(stab.clone()));
        assert_eq!(
            kauffman_bound(&diagram(stab), DEFAULT_CROSSING_CAP).unwrap(),
            1,
            "the bound is a knot invariant even though front tb dropped"
        );
    }

    #[test]
    fn connected_sum_multiplies_conway() {
        let t = trefoil();
        let double = t.connected_sum(&t).unwrap();
        let ct = conway(t.clone());
        assert_eq!(conway(double), &ct * &ct);
    }

    #[test]
    fn crossing_cap_guard() {
        let t = trefoil();
        assert!(matches!(
            kauffman_polynomial(&diagram(t.clone()), 2),
            Err(Error::CrossingCapExceeded {
                crossings: 3,
                cap: 2
            })
        ));
        assert!(conway_polynomial(&diagram(t), 3).is_ok());
    }

    #[test]
    fn conway_constant_term_and_parity() {
        for f in [unknot(), trefoil()] {
            let c = conway(f);
            assert_eq!(c.coeff(0), 1);
            assert!(c.even_powers_only());
        }
    }

    #[test]
    fn alexander_second_derivative_values() {
        assert_eq!(
            alexander_second_derivative(&diagram(unknot()), DEFAULT_CROSSING_CAP).unwrap(),
            0
        );
        assert_eq!(
            alexander_second_derivative(&diagram(trefoil()), DEFAULT_CROSSING_CAP).unwrap(),
            2
        );
    }
}
