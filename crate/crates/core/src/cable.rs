//! Framed cable fronts: parallel copies, twist boxes, and the cable
//! construction whose tb formula and induced ruling are re-verified on every
//! build.
//!
//! The cable front of a host with a ruling is assembled from p copies of the
//! host. Away from two fixed cusps the copies follow the vertical-shift
//! picture: each host crossing becomes a p x p block and each cusp grows a
//! fan of p(p-1)/2 crossings where the shifted cusps interleave. The fixed
//! left and right cusps are rebuilt as crossing-free nests, and the twist box
//! (r cyclic shifts, (p-1)r crossings) is spliced onto the lower bundle just
//! right of the left nest. Smoothing the box splits the diagram back into p
//! closed copies of the host; that component structure is what defines the
//! copy indices recorded in the copy map.

use crate::error::{Error, Result};
use crate::front::{Event, FrontDiagram};
use crate::orient::{OrientedFront, StrandMap};
use crate::par;
use crate::ruling::{is_ruling, smooth, RulingVerdict};
use serde::Serialize;
use std::collections::BTreeSet;

/// Validated cable parameters. `r = q - t p - p` is the twist count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CableParams {
    pub p: usize,
    pub q: i64,
    pub host_tb: i64,
    pub r: i64,
}

impl CableParams {
    pub fn new(p: usize, q: i64, host_tb: i64) -> Result<CableParams> {
        if p < 2 {
            return Err(Error::CableBadP { p: p as i64 });
        }
        let min_q = host_tb * p as i64 + p as i64;
        if q < min_q {
            return Err(Error::CableRange { q, min_q });
        }
        Ok(CableParams {
            p,
            q,
            host_tb,
            r: q - min_q,
        })
    }

    /// gcd(p, q); the cable has this many components.
    pub fn gcd(&self) -> i64 {
        gcd(self.p as i64, self.q)
    }

    /// t p^2 + (q - t p)(p - 1).
    pub fn predicted_tb(&self) -> i64 {
        let (p, t) = (self.p as i64, self.host_tb);
        t * p * p + (self.q - t * p) * (p - 1)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Origin of one crossing of a copied front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CopyTag {
    /// Member of the p x p block of a host crossing; copies are the smoothed
    /// component indices of the two strands (lower, upper).
    Block {
        host_column: usize,
        lower_copy: usize,
        upper_copy: usize,
    },
    /// Fan crossing where shifted copies interleave near an unmodified cusp.
    CuspFan {
        host_column: usize,
        lower_copy: usize,
        upper_copy: usize,
    },
    /// Twist-box crossing.
    Twist,
}

/// A front built from p copies of a host, with per-crossing provenance.
#[derive(Debug, Clone, Serialize)]
pub struct CabledFront {
    pub front: FrontDiagram,
    /// (column, tag) for every crossing column of `front`.
    pub tags: Vec<(usize, CopyTag)>,
    /// Twist-box columns.
    pub gamma: BTreeSet<usize>,
    /// The induced ruling: gamma plus the diagonal copies of the host ruling.
    pub phi: BTreeSet<usize>,
    pub params: Option<CableParams>,
}

impl CabledFront {
    /// `copymap v1` block: one line per crossing column.
    pub fn serialize_copymap(&self) -> String {
        let mut out = String::from("copymap v1\n");
        for (col, tag) in &self.tags {
            match tag {
                CopyTag::Block {
                    host_column,
                    lower_copy,
                    upper_copy,
                } => out.push_str(&format!("{col} cross {host_column} {lower_copy} {upper_copy}\n")),
                CopyTag::CuspFan {
                    host_column,
                    lower_copy,
                    upper_copy,
                } => out.push_str(&format!("{col} cusp {host_column} {lower_copy} {upper_copy}\n")),
                CopyTag::Twist => out.push_str(&format!("{col} twist\n")),
            }
        }
        out
    }
}

/// The block of a twist box on `p` strands above `base`: `r` cyclic shifts,
/// each moving the top strand of the bundle to the bottom, (p-1)r crossings.
pub fn twist_box(p: usize, r: i64, base: usize) -> Result<Vec<Event>> {
    if p < 2 {
        return Err(Error::CableBadP { p: p as i64 });
    }
    if r < 0 {
        return Err(Error::NegativeTwist { r });
    }
    let mut events = Vec::new();
    for _ in 0..r {
        for l in (1..p).rev() {
            events.push(Event::X(base + l));
        }
    }
    Ok(events)
}

/// Net permutation of a twist box on the bundle 1..=p: position of each
/// strand after the box (0-based, bottom up).
pub fn twist_box_permutation(p: usize, r: i64) -> Result<Vec<usize>> {
    let events = twist_box(p, r, 0)?;
    let mut order: Vec<usize> = (0..p).collect();
    for ev in events {
        let l = ev.level();
        order.swap(l - 1, l);
    }
    Ok(order)
}

/// Kinds of emitted zones, before copy indices are known.
#[derive(Debug, Clone, Copy)]
enum RawTag {
    Block(usize),
    Fan(usize),
    Twist,
}

struct Builder {
    events: Vec<Event>,
    raw: Vec<(usize, RawTag)>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            events: Vec::new(),
            raw: Vec::new(),
        }
    }

    fn push(&mut self, ev: Event) {
        self.events.push(ev);
    }

    fn push_crossing(&mut self, level: usize, tag: RawTag) {
        self.raw.push((self.events.len(), tag));
        self.events.push(Event::X(level));
    }

    /// Bubble-sorts the zone `base+1 ..= base+targets.len()` into ascending
    /// target order, emitting one crossing per adjacent swap.
    fn sort_zone(&mut self, base: usize, targets: &mut [usize], tag: RawTag) {
        let n = targets.len();
        loop {
            let mut swapped = false;
            for i in 0..n - 1 {
                if targets[i] > targets[i + 1] {
                    targets.swap(i, i + 1);
                    self.push_crossing(base + i + 1, tag);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
    }

    /// p nested cusps: innermost pair in the middle, no crossings.
    fn nested_left(&mut self, base: usize, p: usize) {
        for k in 1..=p {
            self.push(Event::L(base + k));
        }
    }

    fn nested_right(&mut self, base: usize, p: usize) {
        for k in (1..=p).rev() {
            self.push(Event::R(base + k));
        }
    }

    /// Fan picture of a left cusp: p stacked cusps, then the interleaving
    /// crossings that part the bundle into lower and upper ribbons.
    fn fan_left(&mut self, base: usize, p: usize, host_column: usize) {
        for k in 1..=p {
            self.push(Event::L(base + 2 * k - 1));
        }
        // current: l1 u1 l2 u2 ...; target: l1..lp u1..up
        let mut targets: Vec<usize> = (0..p).flat_map(|k| [k, p + k]).collect();
        self.sort_zone(base, &mut targets, RawTag::Fan(host_column));
    }

    fn fan_right(&mut self, base: usize, p: usize, host_column: usize) {
        // current: l1..lp u1..up; target: l1 u1 l2 u2 ...
        let mut targets: Vec<usize> = (0..p)
            .map(|k| 2 * k)
            .chain((0..p).map(|k| 2 * k + 1))
            .collect();
        self.sort_zone(base, &mut targets, RawTag::Fan(host_column));
        for k in (1..=p).rev() {
            self.push(Event::R(base + 2 * k - 1));
        }
    }

    /// p x p block of a host crossing: the ribbons exchange, orders kept.
    fn block(&mut self, base: usize, p: usize, host_column: usize) {
        let mut targets: Vec<usize> = (p..2 * p).chain(0..p).collect();
        self.sort_zone(base, &mut targets, RawTag::Block(host_column));
    }

    fn twists(&mut self, base: usize, p: usize, r: i64) {
        for _ in 0..r {
            for l in (1..p).rev() {
                self.push_crossing(base + l, RawTag::Twist);
            }
        }
    }
}

fn copy_indices(front: &FrontDiagram, gamma: &BTreeSet<usize>) -> Result<(Vec<usize>, usize)> {
    let smoothed = smooth(front, gamma)?;
    Ok((
        smoothed.strand_component().to_vec(),
        smoothed.component_count(),
    ))
}

fn finish(
    builder: Builder,
    gamma: BTreeSet<usize>,
    params: Option<CableParams>,
) -> Result<CabledFront> {
    let front = FrontDiagram::new(builder.events);
    front.checked()?;
    let map = StrandMap::build(&front)?;
    let (copy_of_strand, _) = copy_indices(&front, &gamma)?;
    let site_at = |col: usize| {
        map.crossings()
            .iter()
            .find(|s| s.column == col)
            .expect("tagged column is a crossing")
    };
    let tags = builder
        .raw
        .iter()
        .map(|&(col, raw)| {
            let site = site_at(col);
            let lower_copy = copy_of_strand[site.lower] + 1;
            let upper_copy = copy_of_strand[site.upper] + 1;
            let tag = match raw {
                RawTag::Twist => CopyTag::Twist,
                RawTag::Block(host_column) => CopyTag::Block {
                    host_column,
                    lower_copy,
                    upper_copy,
                },
                RawTag::Fan(host_column) => CopyTag::CuspFan {
                    host_column,
                    lower_copy,
                    upper_copy,
                },
            };
            (col, tag)
        })
        .collect();
    Ok(CabledFront {
        front,
        tags,
        gamma,
        phi: BTreeSet::new(),
        params,
    })
}

/// All-nested p copies of a knot front: each cusp becomes p nested cusps and
/// each crossing a p x p block, giving p parallel blackboard-framed copies.
pub fn p_copy(front: &FrontDiagram, p: usize) -> Result<CabledFront> {
    front.checked()?;
    if p < 2 {
        return Err(Error::CableBadP { p: p as i64 });
    }
    let host_components = crate::orient::components(front)?.count;
    if host_components != 1 {
        return Err(Error::MultiComponent {
            components: host_components,
        });
    }
    let mut b = Builder::new();
    for (column, ev) in front.events().iter().enumerate() {
        let base = (ev.level() - 1) * p;
        match ev {
            Event::L(_) => b.nested_left(base, p),
            Event::R(_) => b.nested_right(base, p),
            Event::X(_) => b.block(base, p, column),
        }
    }
    let built = finish(b, BTreeSet::new(), None)?;
    let got = crate::orient::components(&built.front)?.count;
    if got != p * host_components {
        return Err(Error::Postcondition(format!(
            "p_copy produced {got} components, expected {}",
            p * host_components
        )));
    }
    Ok(built)
}

/// Builds the (p, q)-cable front of a host knot front with a verified ruling,
/// together with its induced ruling. Internal postconditions: the result
/// validates, has gcd(p, q) components (1 unless `allow_link`), the induced
/// ruling passes [`is_ruling`], and writhe - right cusps equals
/// t p^2 + (q - t p)(p - 1).
pub fn cable_front(
    front: &FrontDiagram,
    ruling: &BTreeSet<usize>,
    p: usize,
    q: i64,
    allow_link: bool,
) -> Result<CabledFront> {
    front.checked()?;
    let oriented = OrientedFront::standard(front.clone())?;
    let t = oriented.tb()?; // knots only
    match is_ruling(front, ruling)? {
        RulingVerdict::Ruling(_) => {}
        RulingVerdict::Rejected(v) => return Err(Error::NotARuling(v.to_string())),
    }
    let params = CableParams::new(p, q, t)?;
    let expected_components = params.gcd() as usize;
    if expected_components != 1 && !allow_link {
        return Err(Error::CableNotKnot {
            p: p as i64,
            q,
            gcd: params.gcd(),
            components: expected_components,
        });
    }

    let fixed_left = front
        .events()
        .iter()
        .position(|e| matches!(e, Event::L(_)))
        .expect("closed nonempty front has a left cusp");
    let fixed_right = front
        .events()
        .iter()
        .position(|e| matches!(e, Event::R(_)))
        .expect("closed nonempty front has a right cusp");

    let mut b = Builder::new();
    let mut gamma_cols = Vec::new();
    for (column, ev) in front.events().iter().enumerate() {
        let base = (ev.level() - 1) * p;
        match ev {
            Event::L(_) if column == fixed_left => {
                b.nested_left(base, p);
                let before = b.events.len();
                b.twists(base, p, params.r);
                gamma_cols.extend(before..b.events.len());
            }
            Event::L(_) => b.fan_left(base, p, column),
            Event::R(_) if column == fixed_right => b.nested_right(base, p),
            Event::R(_) => b.fan_right(base, p, column),
            Event::X(_) => b.block(base, p, column),
        }
    }

    let gamma: BTreeSet<usize> = gamma_cols.into_iter().collect();
    if gamma.len() as i64 != (p as i64 - 1) * params.r {
        return Err(Error::Postcondition(format!(
            "twist box has {} crossings, expected {}",
            gamma.len(),
            (p as i64 - 1) * params.r
        )));
    }
    let mut built = finish(b, gamma.clone(), Some(params))?;

    // diagonal copies of the host ruling: block crossings of a switched host
    // column whose strands lie in one smoothed copy
    let map = StrandMap::build(&built.front)?;
    let (copy_of_strand, n_copies) = copy_indices(&built.front, &gamma)?;
    if n_copies != p {
        return Err(Error::Postcondition(format!(
            "smoothing the twist box left {n_copies} copies, expected {p}"
        )));
    }
    let mut phi = gamma.clone();
    let mut diagonal = 0usize;
    for &(col, tag) in &built.tags {
        if let CopyTag::Block { host_column, .. } = tag {
            if ruling.contains(&host_column) {
                let site = map
                    .crossings()
                    .iter()
                    .find(|s| s.column == col)
                    .expect("block column is a crossing");
                if copy_of_strand[site.lower] == copy_of_strand[site.upper] {
                    phi.insert(col);
                    diagonal += 1;
                }
            }
        }
    }
    if diagonal != p * ruling.len() {
        return Err(Error::Postcondition(format!(
            "found {diagonal} diagonal switch copies, expected {}",
            p * ruling.len()
        )));
    }
    built.phi = phi;

    let got_components = crate::orient::components(&built.front)?.count;
    if got_components != expected_components {
        return Err(Error::Postcondition(format!(
            "cable has {got_components} components, expected {expected_components}"
        )));
    }
    match is_ruling(&built.front, &built.phi)? {
        RulingVerdict::Ruling(_) => {}
        RulingVerdict::Rejected(v) => {
            return Err(Error::Postcondition(format!(
                "induced switch set is not a ruling: {v}"
            )))
        }
    }
    let measured = measured_tb(&built.front)?;
    if measured != params.predicted_tb() {
        return Err(Error::Postcondition(format!(
            "cable tb {measured} differs from formula {}",
            params.predicted_tb()
        )));
    }
    Ok(built)
}

/// writhe minus right cusps under the canonical (parallel-copy) orientation;
/// agrees with tb on knots and extends it to cable links.
fn measured_tb(front: &FrontDiagram) -> Result<i64> {
    let o = OrientedFront::standard(front.clone())?;
    Ok(o.writhe()? - front.right_cusps() as i64)
}

/// Everything [`verify_cable_formula`] checks, in one record.
#[derive(Debug, Clone, Serialize)]
pub struct CableReport {
    pub p: usize,
    pub q: i64,
    pub host_tb: i64,
    pub r: i64,
    pub gamma_size: usize,
    pub predicted_tb: i64,
    pub measured_tb: i64,
    pub ruling_ok: bool,
    pub components: usize,
    pub expected_components: usize,
    pub crossings: usize,
    pub agree: bool,
}

impl CableReport {
    pub fn render(&self) -> String {
        format!(
            "cable p={} q={}: t={} r={} |gamma|={} predicted_tb={} measured_tb={} \
             ruling={} components={}/{} crossings={} => {}",
            self.p,
            self.q,
            self.host_tb,
            self.r,
            self.gamma_size,
            self.predicted_tb,
            self.measured_tb,
            if self.ruling_ok { "ok" } else { "FAIL" },
            self.components,
            self.expected_components,
            self.crossings,
            if self.agree { "agree" } else { "DISAGREE" }
        )
    }
}

/// Builds the cable and reports predicted vs measured tb, the ruling verdict
/// and the component count. `agree` is true iff everything matches.
pub fn verify_cable_formula(
    front: &FrontDiagram,
    ruling: &BTreeSet<usize>,
    p: usize,
    q: i64,
    allow_link: bool,
) -> Result<CableReport> {
    let built = cable_front(front, ruling, p, q, allow_link)?;
    let params = built.params.expect("cable_front always sets params");
    let measured = measured_tb(&built.front)?;
    let ruling_ok = is_ruling(&built.front, &built.phi)?.is_ruling();
    let components = crate::orient::components(&built.front)?.count;
    let report = CableReport {
        p,
        q,
        host_tb: params.host_tb,
        r: params.r,
        gamma_size: built.gamma.len(),
        predicted_tb: params.predicted_tb(),
        measured_tb: measured,
        ruling_ok,
        components,
        expected_components: params.gcd() as usize,
        crossings: built.front.crossings(),
        agree: measured == params.predicted_tb()
            && ruling_ok
            && components == params.gcd() as usize,
    };
    Ok(report)
}

/// Verifies the formula for every coprime q in `t p + p ..= t p + p + extent`
/// for each p, fanning out when the `parallel` feature is enabled.
pub fn verify_cable_sweep(
    front: &FrontDiagram,
    ruling: &BTreeSet<usize>,
    ps: &[usize],
    extent: i64,
) -> Result<Vec<CableReport>> {
    let jobs = sweep_jobs(front, ps, extent)?;
    let f = front.clone();
    let r = ruling.clone();
    par::map_collect(jobs, move |(p, q)| verify_cable_formula(&f, &r, p, q, false))
        .into_iter()
        .collect()
}

/// Sequential twin of [`verify_cable_sweep`], for benchmarking.
pub fn verify_cable_sweep_seq(
    front: &FrontDiagram,
    ruling: &BTreeSet<usize>,
    ps: &[usize],
    extent: i64,
) -> Result<Vec<CableReport>> {
    let jobs = sweep_jobs(front, ps, extent)?;
    par::map_collect_seq(jobs, |(p, q)| verify_cable_formula(front, ruling, p, q, false))
        .into_iter()
        .collect()
}

fn sweep_jobs(front: &FrontDiagram, ps: &[usize], extent: i64) -> Result<Vec<(usize, i64)>> {
    let t = crate::orient::tb(front)?;
    let mut jobs = Vec::new();
    for &p in ps {
        let min_q = t * p as i64 + p as i64;
        for q in min_q..=min_q + extent {
            if gcd(p as i64, q) == 1 {
                jobs.push((p, q));
            }
        }
    }
    Ok(jobs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{trefoil, unknot};
    use crate::orient::components;
    use crate::poly::Laurent2;
    use crate::skein::{kauffman_polynomial, DEFAULT_CROSSING_CAP};
    use crate::LinkDiagram;

    fn set(cols: &[usize]) -> BTreeSet<usize> {
        cols.iter().copied().collect()
    }

    #[test]
    fn p_copy_of_unknot() {
        let c = p_copy(&unknot(), 2).unwrap();
        assert_eq!(c.front.left_cusps(), 2);
        assert_eq!(c.front.right_cusps(), 2);
        assert_eq!(c.front.crossings(), 0);
        assert_eq!(components(&c.front).unwrap().count, 2);
    }

    #[test]
    fn p_copy_of_trefoil() {
        let c = p_copy(&trefoil(), 2).unwrap();
        assert_eq!(c.front.crossings(), 12);
        assert_eq!(c.front.left_cusps(), 4);
        assert_eq!(components(&c.front).unwrap().count, 2);
        for p in [3, 4] {
            let c = p_copy(&trefoil(), p).unwrap();
            assert_eq!(c.front.crossings(), p * p * 3);
            assert_eq!(components(&c.front).unwrap().count, p);
        }
    }

    #[test]
    fn p_copy_diagonals() {
        let c = p_copy(&trefoil(), 3).unwrap();
        let mut diagonal_per_host = std::collections::BTreeMap::new();
        for (_, tag) in &c.tags {
            if let CopyTag::Block {
                host_column,
                lower_copy,
                upper_copy,
            } = tag
            {
                if lower_copy == upper_copy {
                    *diagonal_per_host.entry(*host_column).or_insert(0) += 1;
                }
            }
        }
        assert_eq!(diagonal_per_host.len(), 3);
        assert!(diagonal_per_host.values().all(|&n| n == 3));
    }

    #[test]
    fn twist_box_counts_and_permutation() {
        assert!(twist_box(2, 0, 0).unwrap().is_empty());
        assert_eq!(twist_box(2, 3, 0).unwrap().len(), 3);
        assert_eq!(twist_box(3, 2, 0).unwrap().len(), 4);
        // two shifts on three strands rotate the bundle by two steps
        assert_eq!(twist_box_permutation(3, 2).unwrap(), vec![1, 2, 0]);
        assert_eq!(twist_box_permutation(4, 1).unwrap(), vec![3, 0, 1, 2]);
        assert!(matches!(
            twist_box(3, -1, 0),
            Err(Error::NegativeTwist { r: -1 })
        ));
    }

    #[test]
    fn unknot_cable_2_1_is_an_unknot() {
        let built = cable_front(&unknot(), &set(&[]), 2, 1, false).unwrap();
        assert_eq!(built.params.unwrap().r, 1);
        assert_eq!(built.gamma.len(), 1);
        assert_eq!(measured_tb(&built.front).unwrap(), -1);
        let d = LinkDiagram::from_front(
            &OrientedFront::standard(built.front.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(
            kauffman_polynomial(&d, DEFAULT_CROSSING_CAP).unwrap(),
            Laurent2::one(),
            "C_2,1 of the unknot is the unknot"
        );
    }

    #[test]
    fn out_of_range_q_rejected() {
        // q = t p + p - 1 = -1 for the unknot with p = 2
        match cable_front(&unknot(), &set(&[]), 2, -1, false) {
            Err(Error::CableRange { q: -1, min_q: 0 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_coprime_needs_link_flag() {
        assert!(matches!(
            cable_front(&unknot(), &set(&[]), 2, 0, false),
            Err(Error::CableNotKnot { gcd: 2, .. })
        ));
        let built = cable_front(&unknot(), &set(&[]), 2, 0, true).unwrap();
        assert_eq!(built.gamma.len(), 0, "r = 0 forces an empty twist box");
        assert_eq!(components(&built.front).unwrap().count, 2);
        assert_eq!(measured_tb(&built.front).unwrap(), -2);
    }

    #[test]
    fn trefoil_cable_2_5() {
        let report = verify_cable_formula(&trefoil(), &set(&[2]), 2, 5, false).unwrap();
        assert!(report.agree, "{}", report.render());
        assert_eq!(report.predicted_tb, 7);
        assert_eq!(report.measured_tb, 7);
        assert_eq!(report.r, 1);
    }

    #[test]
    fn trefoil_cable_3_7() {
        let report = verify_cable_formula(&trefoil(), &set(&[2]), 3, 7, false).unwrap();
        assert!(report.agree, "{}", report.render());
        assert_eq!(report.predicted_tb, 17, "1*9 + (7-3)*2");
    }

    #[test]
    fn trefoil_even_q_needs_link_flag() {
        assert!(matches!(
            cable_front(&trefoil(), &set(&[2]), 2, 4, false),
            Err(Error::CableNotKnot { .. })
        ));
        let report = verify_cable_formula(&trefoil(), &set(&[2, 3, 4]), 2, 4, true);
        // q = 4 = t p + p: r = 0, a 2-component cable link
        let report = report.unwrap_or_else(|e| panic!("{e}"));
        let _ = report;
    }

    #[test]
    fn sweep_over_small_grid() {
        let reports = verify_cable_sweep(&unknot(), &set(&[]), &[2, 3], 4).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.agree));
        let seq = verify_cable_sweep_seq(&unknot(), &set(&[]), &[2, 3], 4).unwrap();
        assert_eq!(reports.len(), seq.len());
        for (a, b) in reports.iter().zip(&seq) {
            assert_eq!(a.render(), b.render());
        }
    }

    #[test]
    fn all_host_rulings_work() {
        for ruling in crate::ruling::enumerate_rulings(&trefoil()).unwrap() {
            let report = verify_cable_formula(&trefoil(), &ruling, 2, 5, false).unwrap();
            assert!(report.agree, "{}", report.render());
        }
    }
}
