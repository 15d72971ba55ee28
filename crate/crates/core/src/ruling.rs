//! Normal rulings: smoothing, the normality check, enumeration, and max-tb
//! certificates.
//!
//! A switch set is a subset of the crossing columns. Smoothing a crossing
//! replaces the transposition by two parallel strands. The set is a ruling
//! when every component of the smoothed diagram is an eye (one left cusp, one
//! right cusp, no self-crossing) and every switch is normal: the two smoothed
//! strands belong to distinct eyes that are vertically adjacent or nested at
//! that column.

use crate::error::{Error, Result};
use crate::front::{Event, FrontDiagram};
use crate::orient::OrientedFront;
use crate::par;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Why a switch set fails to be a ruling. `column` is the first offending column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// An unswitched crossing between the two strands of one eye.
    SelfCrossing,
    /// A switch whose two strands belong to the same eye.
    SwitchSameEye,
    /// A right cusp joining strands from different birth pairs, giving a
    /// component with more than one left cusp.
    EyeMerge,
    /// Switch roles are (upper-of-i, lower-of-j): not one of the normal cases.
    AbnormalSwitch,
    /// Roles match case (ii) or (iii) but the nesting comparison fails.
    NestingOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RulingViolation {
    pub column: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for RulingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::SelfCrossing => "eye crosses itself",
            ViolationKind::SwitchSameEye => "switch joins one eye to itself",
            ViolationKind::EyeMerge => "component acquires a second left cusp",
            ViolationKind::AbnormalSwitch => "switch strands are upper-of-one, lower-of-other",
            ViolationKind::NestingOrder => "eyes at the switch are not nested the normal way",
        };
        write!(f, "{what} at column {}", self.column)
    }
}

/// One component of a smoothed diagram that passed the eye conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Eye {
    pub left_cusp: usize,
    pub right_cusp: usize,
    pub upper_strand: usize,
    pub lower_strand: usize,
}

/// A verified ruling: the switch set plus the eye decomposition produced by
/// smoothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ruling {
    pub switches: BTreeSet<usize>,
    pub eyes: Vec<Eye>,
}

/// Verdict of [`is_ruling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RulingVerdict {
    Ruling(Ruling),
    Rejected(RulingViolation),
}

impl RulingVerdict {
    pub fn is_ruling(&self) -> bool {
        matches!(self, RulingVerdict::Ruling(_))
    }
}

/// A front with a subset of its crossings smoothed. Switched columns carry no
/// transposition; everything else sweeps as in the host.
#[derive(Debug, Clone)]
pub struct SmoothedDiagram {
    host: FrontDiagram,
    switches: BTreeSet<usize>,
    component_count: usize,
    strand_component: Vec<usize>,
}

impl SmoothedDiagram {
    pub fn host(&self) -> &FrontDiagram {
        &self.host
    }

    pub fn switches(&self) -> &BTreeSet<usize> {
        &self.switches
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn strand_component(&self) -> &[usize] {
        &self.strand_component
    }
}

fn check_switch_set(front: &FrontDiagram, switches: &BTreeSet<usize>) -> Result<()> {
    front.checked()?;
    let crossing_cols: BTreeSet<usize> = front.crossing_columns().into_iter().collect();
    for &col in switches {
        if !crossing_cols.contains(&col) {
            return Err(Error::NotACrossing { column: col });
        }
    }
    Ok(())
}

/// Smooths the crossings in `switches`, returning the resulting diagram with
/// its component structure.
pub fn smooth(front: &FrontDiagram, switches: &BTreeSet<usize>) -> Result<SmoothedDiagram> {
    check_switch_set(front, switches)?;
    let mut stack: Vec<usize> = Vec::new();
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for (column, ev) in front.events().iter().enumerate() {
        match *ev {
            Event::L(l) => {
                let a = parent.len();
                parent.push(a);
                parent.push(a); // birth pair shares a class from the start
                stack.splice(l - 1..l - 1, [a, a + 1]);
            }
            Event::R(l) => {
                let (a, b) = (stack[l - 1], stack[l]);
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
                stack.drain(l - 1..l + 1);
            }
            Event::X(l) => {
                if !switches.contains(&column) {
                    stack.swap(l - 1, l);
                }
            }
        }
    }
    let mut count = 0;
    let mut label = vec![usize::MAX; parent.len()];
    let mut strand_component = vec![0; parent.len()];
    for s in 0..parent.len() {
        let root = find(&mut parent, s);
        if label[root] == usize::MAX {
            label[root] = count;
            count += 1;
        }
        strand_component[s] = label[root];
    }
    Ok(SmoothedDiagram {
        host: front.clone(),
        switches: switches.clone(),
        component_count: count,
        strand_component,
    })
}

#[derive(Clone, Copy)]
struct SweepStrand {
    partner: usize,
    upper: bool,
    birth: usize,
}

/// Checks the ruling conditions for `switches`, reporting the first violation
/// or the eye decomposition on success.
pub fn is_ruling(front: &FrontDiagram, switches: &BTreeSet<usize>) -> Result<RulingVerdict> {
    check_switch_set(front, switches)?;
    let mut stack: Vec<usize> = Vec::new();
    let mut strands: Vec<SweepStrand> = Vec::new();
    let mut eyes: Vec<Eye> = Vec::new();

    for (column, ev) in front.events().iter().enumerate() {
        match *ev {
            Event::L(l) => {
                let lo = strands.len();
                strands.push(SweepStrand {
                    partner: lo + 1,
                    upper: false,
                    birth: column,
                });
                strands.push(SweepStrand {
                    partner: lo,
                    upper: true,
                    birth: column,
                });
                stack.splice(l - 1..l - 1, [lo, lo + 1]);
            }
            Event::R(l) => {
                let (a, b) = (stack[l - 1], stack[l]);
                if strands[a].partner != b {
                    return Ok(RulingVerdict::Rejected(RulingViolation {
                        column,
                        kind: ViolationKind::EyeMerge,
                    }));
                }
                eyes.push(Eye {
                    left_cusp: strands[a].birth,
                    right_cusp: column,
                    upper_strand: b,
                    lower_strand: a,
                });
                stack.drain(l - 1..l + 1);
            }
            Event::X(l) => {
                let (q, p) = (stack[l - 1], stack[l]); // lower, upper
                if switches.contains(&column) {
                    if let Some(kind) = switch_violation(&strands, &stack, q, p) {
                        return Ok(RulingVerdict::Rejected(RulingViolation { column, kind }));
                    }
                    // smoothed: no transposition
                } else {
                    if strands[q].partner == p {
                        return Ok(RulingVerdict::Rejected(RulingViolation {
                            column,
                            kind: ViolationKind::SelfCrossing,
                        }));
                    }
                    stack.swap(l - 1, l);
                }
            }
        }
    }
    eyes.sort_by_key(|e| e.left_cusp);
    Ok(RulingVerdict::Ruling(Ruling {
        switches: switches.clone(),
        eyes,
    }))
}

/// Normality at a switch whose smoothed strands are `q` (lower) and `p`
/// (upper). Cases, with i the eye of p and j the eye of q:
/// (i)   p = L_i, q = U_j: adjacent eyes, no further condition;
/// (ii)  p = L_i, q = L_j: requires U_i below U_j (i nested in j);
/// (iii) p = U_i, q = U_j: requires L_i below L_j (j nested in i).
fn switch_violation(
    strands: &[SweepStrand],
    stack: &[usize],
    q: usize,
    p: usize,
) -> Option<ViolationKind> {
    if strands[q].partner == p {
        return Some(ViolationKind::SwitchSameEye);
    }
    match (strands[p].upper, strands[q].upper) {
        (false, true) => None, // (i)
        (false, false) | (true, true) => {
            let level_of = |s: usize| stack.iter().position(|&x| x == s).unwrap();
            if level_of(strands[p].partner) < level_of(strands[q].partner) {
                None // (ii) or (iii)
            } else {
                Some(ViolationKind::NestingOrder)
            }
        }
        (true, false) => Some(ViolationKind::AbnormalSwitch),
    }
}

/// All rulings of the front, in lexicographic order on the sorted switch
/// columns. Found by a left-to-right sweep branching at each crossing with
/// immediate pruning; works for links as well as knots.
pub fn enumerate_rulings(front: &FrontDiagram) -> Result<Vec<BTreeSet<usize>>> {
    front.checked()?;
    let mut results = Vec::new();
    let mut chosen = Vec::new();
    let mut strands = Vec::new();
    dfs(
        front.events(),
        0,
        &mut Vec::new(),
        &mut strands,
        &mut chosen,
        &mut results,
    );
    results.sort();
    Ok(results)
}

fn dfs(
    events: &[Event],
    column: usize,
    stack: &mut Vec<usize>,
    strands: &mut Vec<SweepStrand>,
    chosen: &mut Vec<usize>,
    results: &mut Vec<BTreeSet<usize>>,
) {
    let Some(ev) = events.get(column) else {
        results.push(chosen.iter().copied().collect());
        return;
    };
    match *ev {
        Event::L(l) => {
            let lo = strands.len();
            strands.push(SweepStrand {
                partner: lo + 1,
                upper: false,
                birth: column,
            });
            strands.push(SweepStrand {
                partner: lo,
                upper: true,
                birth: column,
            });
            stack.splice(l - 1..l - 1, [lo, lo + 1]);
            dfs(events, column + 1, stack, strands, chosen, results);
            stack.drain(l - 1..l + 1);
            strands.truncate(lo);
        }
        Event::R(l) => {
            let (a, b) = (stack[l - 1], stack[l]);
            if strands[a].partner != b {
                return; // eye merge: no later choice can repair it
            }
            let removed: Vec<usize> = stack.drain(l - 1..l + 1).collect();
            dfs(events, column + 1, stack, strands, chosen, results);
            stack.splice(l - 1..l - 1, removed);
        }
        Event::X(l) => {
            let (q, p) = (stack[l - 1], stack[l]);
            let partners = strands[q].partner == p;
            if !partners {
                // pass: keep the transposition
                stack.swap(l - 1, l);
                dfs(events, column + 1, stack, strands, chosen, results);
                stack.swap(l - 1, l);
                // switch: smooth, subject to normality
                if switch_violation(strands, stack, q, p).is_none() {
                    chosen.push(column);
                    dfs(events, column + 1, stack, strands, chosen, results);
                    chosen.pop();
                }
            }
            // partner strands can neither pass (self-crossing) nor switch
        }
    }
}

/// Brute-force oracle: filters all 2^c subsets of crossing columns through
/// [`is_ruling`]. Independent of the sweep enumerator. Fans out over subsets
/// when the `parallel` feature is on.
pub fn brute_force_rulings(front: &FrontDiagram) -> Result<Vec<BTreeSet<usize>>> {
    front.checked()?;
    let cols = front.crossing_columns();
    let masks: Vec<u64> = (0..(1u64 << cols.len())).collect();
    let hits = par::map_collect(masks, |mask| brute_one(front, &cols, mask));
    Ok(collect_hits(hits))
}

/// Sequential twin of [`brute_force_rulings`], for benchmarking.
pub fn brute_force_rulings_seq(front: &FrontDiagram) -> Result<Vec<BTreeSet<usize>>> {
    front.checked()?;
    let cols = front.crossing_columns();
    let masks: Vec<u64> = (0..(1u64 << cols.len())).collect();
    let hits = par::map_collect_seq(masks, |mask| brute_one(front, &cols, mask));
    Ok(collect_hits(hits))
}

fn brute_one(front: &FrontDiagram, cols: &[usize], mask: u64) -> Option<BTreeSet<usize>> {
    let subset: BTreeSet<usize> = cols
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &c)| c)
        .collect();
    match is_ruling(front, &subset) {
        Ok(RulingVerdict::Ruling(_)) => Some(subset),
        _ => None,
    }
}

fn collect_hits(hits: Vec<Option<BTreeSet<usize>>>) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = hits.into_iter().flatten().collect();
    out.sort();
    out
}

/// A front, a verified ruling of it, and the certified maximal
/// Thurston-Bennequin value tb(front).
#[derive(Debug, Clone, Serialize)]
pub struct MaxTbCertificate {
    pub front: FrontDiagram,
    pub ruling: Ruling,
    pub certified_value: i64,
}

impl MaxTbCertificate {
    /// Re-derives the certificate from its own data.
    pub fn verify(&self) -> Result<bool> {
        let verdict = is_ruling(&self.front, &self.ruling.switches)?;
        let t = crate::orient::tb(&self.front)?;
        Ok(verdict.is_ruling() && t == self.certified_value)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from("certificate v1\n");
        out.push_str(&format!("value {}\n", self.certified_value));
        out.push_str("ruling");
        for c in &self.ruling.switches {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
        out.push_str(&self.front.serialize());
        out
    }
}

/// If the front admits a ruling, certifies tb(front) as the maximal
/// Thurston-Bennequin number of the knot. `None` means this front certifies
/// nothing: absence of a ruling on one front is inconclusive for the knot.
pub fn maxtb_certificate(front: &OrientedFront) -> Result<Option<MaxTbCertificate>> {
    let tb = front.tb()?; // rejects links and the empty front
    let mut all = enumerate_rulings(front.front())?;
    let Some(first) = all.drain(..).next() else {
        return Ok(None);
    };
    let RulingVerdict::Ruling(ruling) = is_ruling(front.front(), &first)? else {
        return Err(Error::Postcondition("enumerated set failed is_ruling".into()));
    };
    Ok(Some(MaxTbCertificate {
        front: front.front().clone(),
        ruling,
        certified_value: tb,
    }))
}

/// Serializes switch sets as a `rulings v1` block.
pub fn serialize_rulings(rulings: &[BTreeSet<usize>]) -> String {
    let mut out = String::from("rulings v1\n");
    out.push_str(&format!("count {}\n", rulings.len()));
    for r in rulings {
        out.push_str("ruling");
        for c in r {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{trefoil, unknot, StabSign};

    fn set(cols: &[usize]) -> BTreeSet<usize> {
        cols.iter().copied().collect()
    }

    #[test]
    fn smoothing_empty_set_is_identity() {
        let f = trefoil();
        let s = smooth(&f, &set(&[])).unwrap();
        assert_eq!(s.component_count(), 1);
    }

    #[test]
    fn smoothing_component_counts() {
        let f = trefoil();
        // one smoothed crossing leaves the two eyes separate
        assert_eq!(smooth(&f, &set(&[2])).unwrap().component_count(), 2);
        // smoothing the middle crossing only: the outer right cusps reconnect
        assert_eq!(smooth(&f, &set(&[3])).unwrap().component_count(), 2);
        // smoothing two: strands reconnect into one component
        assert_eq!(smooth(&f, &set(&[2, 4])).unwrap().component_count(), 1);
        // smoothing everything: the two stacked eyes
        assert_eq!(smooth(&f, &set(&[2, 3, 4])).unwrap().component_count(), 2);
    }

    #[test]
    fn smooth_rejects_non_crossing() {
        assert!(matches!(
            smooth(&trefoil(), &set(&[0])),
            Err(Error::NotACrossing { column: 0 })
        ));
    }

    #[test]
    fn unknot_has_the_empty_ruling() {
        assert!(is_ruling(&unknot(), &set(&[])).unwrap().is_ruling());
        assert_eq!(enumerate_rulings(&unknot()).unwrap(), vec![set(&[])]);
    }

    #[test]
    fn trefoil_rulings_match_brute_force() {
        let f = trefoil();
        let swept = enumerate_rulings(&f).unwrap();
        let brute = brute_force_rulings(&f).unwrap();
        assert_eq!(swept, brute);
        assert_eq!(swept, vec![set(&[2]), set(&[2, 3, 4]), set(&[4])]);
    }

    #[test]
    fn trefoil_switch_verdicts() {
        let f = trefoil();
        assert!(is_ruling(&f, &set(&[2])).unwrap().is_ruling());
        assert!(is_ruling(&f, &set(&[2, 3, 4])).unwrap().is_ruling());
        match is_ruling(&f, &set(&[3])).unwrap() {
            RulingVerdict::Rejected(v) => {
                assert_eq!(v.column, 3);
                assert_eq!(v.kind, ViolationKind::AbnormalSwitch);
            }
            v => panic!("{v:?}"),
        }
        match is_ruling(&f, &set(&[2, 4])).unwrap() {
            RulingVerdict::Rejected(v) => {
                assert_eq!(v.column, 4);
                assert_eq!(v.kind, ViolationKind::AbnormalSwitch);
            }
            v => panic!("{v:?}"),
        }
        // the empty set fails only at the far right, where the eyes merge
        match is_ruling(&f, &set(&[])).unwrap() {
            RulingVerdict::Rejected(v) => {
                assert_eq!(v.column, 5);
                assert_eq!(v.kind, ViolationKind::EyeMerge);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn eye_count_equals_left_cusps() {
        let f = trefoil();
        for switches in enumerate_rulings(&f).unwrap() {
            match is_ruling(&f, &switches).unwrap() {
                RulingVerdict::Ruling(r) => assert_eq!(r.eyes.len(), f.left_cusps()),
                v => panic!("{v:?}"),
            }
        }
    }

    #[test]
    fn stabilized_fronts_have_no_rulings() {
        for f in [unknot(), trefoil()] {
            let s = f.stabilize(StabSign::Pos, 1, 1).unwrap();
            assert!(enumerate_rulings(&s).unwrap().is_empty());
            assert!(brute_force_rulings(&s).unwrap().is_empty());
        }
    }

    #[test]
    fn certificates() {
        let u = OrientedFront::standard(unknot()).unwrap();
        let cert = maxtb_certificate(&u).unwrap().unwrap();
        assert_eq!(cert.certified_value, -1);
        assert!(cert.verify().unwrap());

        let t = OrientedFront::standard(trefoil()).unwrap();
        let cert = maxtb_certificate(&t).unwrap().unwrap();
        assert_eq!(cert.certified_value, 1);
        assert!(cert.verify().unwrap());

        let stab = trefoil().stabilize(StabSign::Neg, 1, 1).unwrap();
        let s = OrientedFront::standard(stab).unwrap();
        assert!(maxtb_certificate(&s).unwrap().is_none());
    }

    #[test]
    fn certificate_rejected_for_links() {
        use crate::front::Event::{L, R};
        let link = FrontDiagram::new(vec![L(1), L(3), R(3), R(1)]);
        let f = OrientedFront::standard(link).unwrap();
        assert!(matches!(
            maxtb_certificate(&f),
            Err(Error::MultiComponent { .. })
        ));
    }

    #[test]
    fn links_enumerate_fine() {
        use crate::front::Event::{L, R};
        let link = FrontDiagram::new(vec![L(1), L(3), R(3), R(1)]);
        assert_eq!(enumerate_rulings(&link).unwrap(), vec![set(&[])]);
    }

    #[test]
    fn ruling_block_serialization() {
        let rs = enumerate_rulings(&trefoil()).unwrap();
        let text = serialize_rulings(&rs);
        assert_eq!(
            text,
            "rulings v1\ncount 3\nruling 2\nruling 2 3 4\nruling 4\n"
        );
    }
}
