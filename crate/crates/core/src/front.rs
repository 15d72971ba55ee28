//! Front diagrams as Morse event lists.
//!
//! A front is read left to right as a sequence of events acting on a stack of
//! strands, level 1 at the bottom. A left cusp inserts two strands, a right
//! cusp removes two adjacent strands, a crossing transposes two adjacent
//! strands. Every event occupies its own column, so the column index of an
//! event is its position in the list.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One column of a front diagram. Levels are 1-based from the bottom of the
/// strand stack as it is immediately before the event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    /// Left cusp: births two strands at levels `l`, `l+1`. Requires 1 <= l <= s+1.
    L(usize),
    /// Right cusp: kills the strands at levels `l`, `l+1`. Requires 1 <= l <= s-1.
    R(usize),
    /// Crossing: transposes the strands at levels `l`, `l+1`. Requires 1 <= l <= s-1.
    X(usize),
}

impl Event {
    pub fn level(&self) -> usize {
        match *self {
            Event::L(l) | Event::R(l) | Event::X(l) => l,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, Event::X(_))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::L(l) => write!(f, "L {l}"),
            Event::R(l) => write!(f, "R {l}"),
            Event::X(l) => write!(f, "X {l}"),
        }
    }
}

/// A front diagram: an ordered list of events. The empty front is valid and
/// has zero components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FrontDiagram {
    events: Vec<Event>,
}

/// Outcome of [`FrontDiagram::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ValidationReport {
    Ok {
        events: usize,
        left_cusps: usize,
        right_cusps: usize,
        crossings: usize,
        components: usize,
    },
    Invalid {
        column: usize,
        reason: String,
    },
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok { .. })
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationReport::Ok {
                events,
                left_cusps,
                right_cusps,
                crossings,
                components,
            } => write!(
                f,
                "ok: {events} events, {left_cusps} left cusps, {right_cusps} right cusps, \
                 {crossings} crossings, {components} components"
            ),
            ValidationReport::Invalid { column, reason } => {
                write!(f, "invalid at column {column}: {reason}")
            }
        }
    }
}

impl FrontDiagram {
    pub fn new(events: Vec<Event>) -> Self {
        FrontDiagram { events }
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn left_cusps(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::L(_))).count()
    }

    pub fn right_cusps(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::R(_))).count()
    }

    pub fn crossings(&self) -> usize {
        self.events.iter().filter(|e| e.is_crossing()).count()
    }

    /// Columns (event indices) of all crossings, in order.
    pub fn crossing_columns(&self) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_crossing())
            .map(|(c, _)| c)
            .collect()
    }

    /// Checks the structural invariants: level bounds per event, and final
    /// strand count zero. Reports the first violation with its column.
    pub fn validate(&self) -> ValidationReport {
        let mut s = 0usize;
        for (column, ev) in self.events.iter().enumerate() {
            match *ev {
                Event::L(l) => {
                    if l < 1 || l > s + 1 {
                        return ValidationReport::Invalid {
                            column,
                            reason: format!("LeftCusp level {l} out of range 1..={}", s + 1),
                        };
                    }
                    s += 2;
                }
                Event::R(l) => {
                    if s < 2 || l < 1 || l > s - 1 {
                        return ValidationReport::Invalid {
                            column,
                            reason: format!(
                                "RightCusp level {l} out of range 1..={}",
                                s.saturating_sub(1)
                            ),
                        };
                    }
                    s -= 2;
                }
                Event::X(l) => {
                    if s < 2 || l < 1 || l > s - 1 {
                        return ValidationReport::Invalid {
                            column,
                            reason: format!(
                                "Crossing level {l} out of range 1..={}",
                                s.saturating_sub(1)
                            ),
                        };
                    }
                }
            }
        }
        if s != 0 {
            return ValidationReport::Invalid {
                column: self.events.len(),
                reason: format!("nonzero final strand count {s}"),
            };
        }
        let components = crate::orient::StrandMap::build(self)
            .map(|m| m.component_count())
            .unwrap_or(0);
        ValidationReport::Ok {
            events: self.events.len(),
            left_cusps: self.left_cusps(),
            right_cusps: self.right_cusps(),
            crossings: self.crossings(),
            components,
        }
    }

    /// Validation as a `Result`, for operations that require a valid front.
    pub fn checked(&self) -> Result<()> {
        match self.validate() {
            ValidationReport::Ok { .. } => Ok(()),
            ValidationReport::Invalid { column, reason } => {
                Err(Error::InvalidFront { column, reason })
            }
        }
    }

    /// Vertical reflection (level i -> s+1-i in every column). This is the
    /// Legendrian mirror: an involution preserving components, writhe and tb
    /// while negating the rotation number.
    pub fn mirror(&self) -> FrontDiagram {
        let mut s = 0usize;
        let events = self
            .events
            .iter()
            .map(|ev| match *ev {
                Event::L(l) => {
                    let out = Event::L(s + 2 - l);
                    s += 2;
                    out
                }
                Event::R(l) => {
                    let out = Event::R(s - l);
                    s -= 2;
                    out
                }
                Event::X(l) => Event::X(s - l),
            })
            .collect();
        FrontDiagram { events }
    }

    /// Connected sum, splicing `other` onto the rightmost right cusp. Both
    /// fronts must be single-component knots. The final right cusp of `self`
    /// (always `R 1`) and the initial left cusp of `other` (always `L 1`) are
    /// removed and the event lists concatenated.
    pub fn connected_sum(&self, other: &FrontDiagram) -> Result<FrontDiagram> {
        for f in [self, other] {
            f.checked()?;
            let n = crate::orient::StrandMap::build(f)?.component_count();
            if n == 0 {
                return Err(Error::EmptyDiagram);
            }
            if n != 1 {
                return Err(Error::MultiComponent { components: n });
            }
        }
        let mut events = self.events.clone();
        let last = events.pop();
        debug_assert_eq!(last, Some(Event::R(1)));
        debug_assert_eq!(other.events.first(), Some(&Event::L(1)));
        events.extend(other.events.iter().skip(1).copied());
        Ok(FrontDiagram { events })
    }

    /// Serializes to the canonical `front v1` text form: header line, one
    /// event per line, newline-terminated, no trailing whitespace.
    pub fn serialize(&self) -> String {
        let mut out = String::from("front v1\n");
        for ev in &self.events {
            out.push_str(&ev.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the `front v1` text form. `#` starts a comment, blank lines are
    /// ignored. Reports the first malformed token with its line and column.
    pub fn parse(text: &str) -> Result<FrontDiagram> {
        let mut lines = text.lines().enumerate();
        let header = loop {
            match lines.next() {
                Some((ln, raw)) => {
                    let stripped = strip_comment(raw);
                    if stripped.trim().is_empty() {
                        continue;
                    }
                    break (ln, stripped.trim().to_string());
                }
                None => {
                    return Err(Error::Parse {
                        line: 1,
                        column: 1,
                        message: "missing `front v1` header".into(),
                    })
                }
            }
        };
        if header.1 != "front v1" {
            return Err(Error::Parse {
                line: header.0 + 1,
                column: 1,
                message: format!("expected `front v1` header, found `{}`", header.1),
            });
        }
        let mut events = Vec::new();
        for (ln, raw) in lines {
            let stripped = strip_comment(raw);
            let body = stripped.trim_end();
            if body.trim().is_empty() {
                continue;
            }
            let mut parts = body.split_whitespace();
            let kind = parts.next().unwrap();
            let col = raw.find(kind).unwrap_or(0) + 1;
            let level_tok = parts.next().ok_or(Error::Parse {
                line: ln + 1,
                column: col + kind.len(),
                message: "missing level".into(),
            })?;
            let level: usize = level_tok.parse().map_err(|_| Error::Parse {
                line: ln + 1,
                column: raw.find(level_tok).unwrap_or(0) + 1,
                message: format!("bad level `{level_tok}`"),
            })?;
            if let Some(extra) = parts.next() {
                return Err(Error::Parse {
                    line: ln + 1,
                    column: raw.find(extra).unwrap_or(0) + 1,
                    message: format!("unexpected token `{extra}`"),
                });
            }
            let ev = match kind {
                "L" => Event::L(level),
                "R" => Event::R(level),
                "X" => Event::X(level),
                other => {
                    return Err(Error::Parse {
                        line: ln + 1,
                        column: col,
                        message: format!("unknown event `{other}`"),
                    })
                }
            };
            events.push(ev);
        }
        Ok(FrontDiagram { events })
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Sign of a stabilization: `Pos` raises the rotation number by one, `Neg`
/// lowers it (with respect to the canonical orientation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabSign {
    Pos,
    Neg,
}

impl FrontDiagram {
    /// Inserts a zig-zag on the strand passing level `level` in the gap
    /// before column `column` (0 <= column <= events.len()). tb drops by
    /// exactly one; rotation changes by +1 (`Pos`) or -1 (`Neg`).
    pub fn stabilize(&self, sign: StabSign, column: usize, level: usize) -> Result<FrontDiagram> {
        self.checked()?;
        if column > self.events.len() {
            return Err(Error::BadLocation { column, level });
        }
        let mut s = 0usize;
        for ev in &self.events[..column] {
            match ev {
                Event::L(_) => s += 2,
                Event::R(_) => s -= 2,
                Event::X(_) => {}
            }
        }
        if level < 1 || level > s {
            return Err(Error::BadLocation { column, level });
        }
        let map = crate::orient::StrandMap::build(self)?;
        let strand = map.strand_at(column, level);
        let rightward = map.canonical_senses()[strand] == crate::orient::Sense::Right;
        // Down zig-zag adds two down cusps (+1 to rotation) when the strand
        // runs rightward; the up zig-zag is its reflection.
        let down = match sign {
            StabSign::Pos => rightward,
            StabSign::Neg => !rightward,
        };
        let mut events = self.events.clone();
        if down {
            events.splice(column..column, [Event::L(level), Event::R(level + 1)]);
        } else {
            events.splice(column..column, [Event::L(level + 1), Event::R(level)]);
        }
        let out = FrontDiagram { events };
        out.checked()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Event::{L, R, X};

    pub(crate) fn unknot() -> FrontDiagram {
        FrontDiagram::new(vec![L(1), R(1)])
    }

    pub(crate) fn trefoil() -> FrontDiagram {
        FrontDiagram::new(vec![L(1), L(1), X(2), X(2), X(2), R(1), R(1)])
    }

    #[test]
    fn minimal_closed_front_validates() {
        let r = unknot().validate();
        match r {
            ValidationReport::Ok { components, .. } => assert_eq!(components, 1),
            _ => panic!("{r}"),
        }
    }

    #[test]
    fn nonzero_final_count_rejected() {
        let f = FrontDiagram::new(vec![L(1), X(1)]);
        match f.validate() {
            ValidationReport::Invalid { column, .. } => assert_eq!(column, 2),
            r => panic!("{r}"),
        }
    }

    #[test]
    fn crossing_level_out_of_range_rejected() {
        let f = FrontDiagram::new(vec![L(1), X(2), R(1)]);
        match f.validate() {
            ValidationReport::Invalid { column, reason } => {
                assert_eq!(column, 1);
                assert!(reason.contains("Crossing level 2"));
            }
            r => panic!("{r}"),
        }
    }

    #[test]
    fn empty_front_is_valid_with_zero_components() {
        match FrontDiagram::default().validate() {
            ValidationReport::Ok { components, .. } => assert_eq!(components, 0),
            r => panic!("{r}"),
        }
    }

    #[test]
    fn round_trip_on_reference_fronts() {
        for f in [unknot(), trefoil(), FrontDiagram::default()] {
            let text = f.serialize();
            assert_eq!(FrontDiagram::parse(&text).unwrap(), f);
            assert!(text.ends_with('\n'));
            assert!(!text.lines().any(|l| l.ends_with(' ')));
        }
    }

    #[test]
    fn parse_accepts_comments_and_blanks() {
        let text = "# a comment\nfront v1\n\nL 1  # inline\nR 1\n";
        assert_eq!(FrontDiagram::parse(text).unwrap(), unknot());
    }

    #[test]
    fn parse_reports_position() {
        let err = FrontDiagram::parse("front v1\nL one\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        for f in [unknot(), trefoil()] {
            assert_eq!(f.mirror().mirror(), f);
            assert!(f.mirror().validate().is_ok());
        }
    }

    #[test]
    fn mirror_of_trefoil() {
        let m = trefoil().mirror();
        assert_eq!(
            m.events(),
            &[L(1), L(3), X(2), X(2), X(2), R(3), R(1)],
            "stacked eyes reflect to the other stacking"
        );
    }
}

#[cfg(test)]
pub(crate) use tests::{trefoil, unknot};
