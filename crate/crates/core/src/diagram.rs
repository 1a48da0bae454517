//! Tied braid diagrams: one row per letter, read top to bottom.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{ElementError, GenKind, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("row index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot stack diagrams on {top} and {bottom} strands")]
    StrandMismatch { top: usize, bottom: usize },
}

impl From<DiagramError> for ElementError {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::IndexOutOfRange { index, n } => ElementError::IndexOutOfRange { index, n },
            DiagramError::StrandMismatch { top, bottom } => ElementError::AmbientMismatch { left: top, right: bottom },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Row {
    Identity,
    Crossing { i: usize, sign: Sign },
    Tie { i: usize },
}

impl Row {
    fn index(&self) -> Option<usize> {
        match *self {
            Row::Identity => None,
            Row::Crossing { i, .. } | Row::Tie { i } => Some(i),
        }
    }

    fn of(g: Generator) -> Row {
        match g.kind {
            GenKind::T => Row::Crossing { i: g.index, sign: Sign::Positive },
            GenKind::TInv => Row::Crossing { i: g.index, sign: Sign::Negative },
            GenKind::E => Row::Tie { i: g.index },
        }
    }

    fn letter(&self) -> Option<Generator> {
        match *self {
            Row::Identity => None,
            Row::Crossing { i, sign: Sign::Positive } => Some(Generator::t(i)),
            Row::Crossing { i, sign: Sign::Negative } => Some(Generator::t_inv(i)),
            Row::Tie { i } => Some(Generator::e(i)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TiedBraidDiagram {
    pub n: usize,
    pub rows: Vec<Row>,
}

impl TiedBraidDiagram {
    pub fn new(n: usize, rows: Vec<Row>) -> Result<Self, DiagramError> {
        for r in &rows {
            if let Some(i) = r.index() {
                if i == 0 || i >= n {
                    return Err(DiagramError::IndexOutOfRange { index: i, n });
                }
            }
        }
        Ok(TiedBraidDiagram { n, rows })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Ascii => render_ascii(self),
            Format::Svg => render_svg(self),
        }
    }
}

pub fn to_diagram(w: &Word, n: usize) -> Result<TiedBraidDiagram, DiagramError> {
    if w.is_empty() {
        return TiedBraidDiagram::new(n, vec![Row::Identity]);
    }
    TiedBraidDiagram::new(n, w.letters().iter().map(|&g| Row::of(g)).collect())
}

/// Identity rows contribute nothing.
pub fn to_word(d: &TiedBraidDiagram) -> Word {
    Word(d.rows.iter().filter_map(Row::letter).collect())
}

/// `a` above `b`.
pub fn stack(a: &TiedBraidDiagram, b: &TiedBraidDiagram) -> Result<TiedBraidDiagram, DiagramError> {
    if a.n != b.n {
        return Err(DiagramError::StrandMismatch { top: a.n, bottom: b.n });
    }
    Ok(TiedBraidDiagram { n: a.n, rows: a.rows.iter().chain(&b.rows).copied().collect() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

const PITCH: usize = 4;

fn strands(n: usize) -> Vec<char> {
    let mut line = vec![' '; PITCH * (n - 1) + 1];
    for k in 0..n {
        line[k * PITCH] = '|';
    }
    line
}

fn push_line(out: &mut String, line: Vec<char>) {
    out.push_str(line.into_iter().collect::<String>().trim_end());
    out.push('\n');
}

/// Strands every four columns. A crossing takes three lines, the middle one
/// showing which strand is on top; a tie is the rung `:- -:`.
pub fn render_ascii(d: &TiedBraidDiagram) -> String {
    let n = d.n.max(1);
    let mut out = String::new();
    let rows: &[Row] = if d.rows.is_empty() { &[Row::Identity] } else { &d.rows };
    for row in rows {
        match *row {
            Row::Identity => push_line(&mut out, strands(n)),
            Row::Tie { i } => {
                let mut l = strands(n);
                let c = (i - 1) * PITCH;
                l[c..=c + PITCH].copy_from_slice(&[':', '-', ' ', '-', ':']);
                push_line(&mut out, l);
            }
            Row::Crossing { i, sign } => {
                let c = (i - 1) * PITCH;
                let mid = if sign == Sign::Positive { '\\' } else { '/' };
                for pattern in [[' ', '\\', ' ', '/', ' '], [' ', ' ', mid, ' ', ' '], [' ', '/', ' ', '\\', ' ']] {
                    let mut l = strands(n);
                    l[c..=c + PITCH].copy_from_slice(&pattern);
                    push_line(&mut out, l);
                }
            }
        }
    }
    out
}

const UNIT: usize = 40;

/// SVG 1.1; the strand on top of a crossing is drawn whole, the other with a gap.
pub fn render_svg(d: &TiedBraidDiagram) -> String {
    let n = d.n.max(1);
    let rows: &[Row] = if d.rows.is_empty() { &[Row::Identity] } else { &d.rows };
    let width = UNIT * n;
    let height = UNIT * rows.len();
    let x = |k: usize| UNIT / 2 + k * UNIT;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="2" fill="none" stroke-linecap="round">"#);
    for (r, row) in rows.iter().enumerate() {
        let (y0, y1) = (r * UNIT, (r + 1) * UNIT);
        let ym = y0 + UNIT / 2;
        let crossing = match row {
            Row::Crossing { i, .. } => Some(i - 1),
            _ => None,
        };
        for k in 0..n {
            if crossing == Some(k) || crossing.map(|c| c + 1) == Some(k) {
                continue;
            }
            let _ = writeln!(s, r#"<line x1="{0}" y1="{y0}" x2="{0}" y2="{y1}"/>"#, x(k));
        }
        match *row {
            Row::Identity => {}
            Row::Tie { i } => {
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{ym}" x2="{}" y2="{ym}" stroke-dasharray="4 4"/>"#,
                    x(i - 1),
                    x(i)
                );
            }
            Row::Crossing { i, sign } => {
                let (l, rr) = (x(i - 1), x(i));
                let mx = (l + rr) / 2;
                let gap = 6;
                // top-left to bottom-right, then top-right to bottom-left
                let down = [(l, y0), (rr, y1)];
                let up = [(rr, y0), (l, y1)];
                let (over, under) = if sign == Sign::Positive { (down, up) } else { (up, down) };
                let _ = writeln!(
                    s,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    over[0].0, over[0].1, over[1].0, over[1].1
                );
                let dir = |p: (usize, usize)| (p.0 as i64 - mx as i64).signum();
                for end in under {
                    let ex = mx as i64 + dir(end) * gap;
                    let ey = ym as i64 + (end.1 as i64 - ym as i64).signum() * gap;
                    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{ex}" y2="{ey}"/>"#, end.0, end.1);
                }
            }
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn rows_follow_letters() {
        assert_eq!(
            to_diagram(&w("T1 E1", 2), 2).unwrap().rows,
            vec![Row::Crossing { i: 1, sign: Sign::Positive }, Row::Tie { i: 1 }]
        );
        assert_eq!(to_diagram(&Word::identity(), 2).unwrap().rows, vec![Row::Identity]);
        assert_eq!(to_diagram(&w("T2^-1", 3), 3).unwrap().rows, vec![Row::Crossing { i: 2, sign: Sign::Negative }]);
        let d = TiedBraidDiagram::new(3, vec![Row::Crossing { i: 1, sign: Sign::Positive }, Row::Tie { i: 2 }]).unwrap();
        assert_eq!(to_word(&d), w("T1 E2", 3));
        assert!(to_word(&TiedBraidDiagram::new(2, vec![Row::Identity]).unwrap()).is_empty());
        assert!(TiedBraidDiagram::new(2, vec![Row::Tie { i: 2 }]).is_err());
    }

    #[test]
    fn stacking() {
        let t = to_diagram(&w("T1", 2), 2).unwrap();
        let e = to_diagram(&w("E1", 2), 2).unwrap();
        assert_eq!(stack(&t, &e).unwrap(), to_diagram(&w("T1 E1", 2), 2).unwrap());
        let one = to_diagram(&Word::identity(), 2).unwrap();
        let s = stack(&t, &one).unwrap();
        assert_eq!(s.rows.len(), 2);
        assert_eq!(to_word(&s), to_word(&t));
        assert!(stack(&t, &to_diagram(&w("T1", 3), 3).unwrap()).is_err());
    }

    #[test]
    fn ascii_pictures() {
        assert_eq!(render_ascii(&to_diagram(&w("E1", 2), 2).unwrap()), ":- -:\n");
        assert_eq!(render_ascii(&TiedBraidDiagram { n: 3, rows: vec![] }), "|   |   |\n");
        assert_eq!(render_ascii(&to_diagram(&w("T2", 3), 3).unwrap()), "|    \\ /\n|     \\\n|    / \\\n");
    }

    #[test]
    fn json_shape() {
        let d = to_diagram(&w("E1 T2^-1", 3), 3).unwrap();
        let j = d.to_json();
        assert_eq!(j["rows"][0], serde_json::json!({"kind": "tie", "i": 1}));
        assert_eq!(j["rows"][1], serde_json::json!({"kind": "crossing", "i": 2, "sign": "-"}));
        let back: TiedBraidDiagram = serde_json::from_value(j).unwrap();
        assert_eq!(back, d);
    }
}
