//! Defining relations of `E_n(u)` and a corpus of identities derived from them.

use crate::word::Element;

/// A named equation `lhs = rhs` between elements on `n` strands.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: Element,
    pub rhs: Element,
}

impl Relation {
    fn new(name: String, n: usize, lhs: &str, rhs: &str) -> Self {
        let parse = |s: &str| Element::parse(s, n).unwrap_or_else(|e| panic!("bad relation text {s:?}: {e}"));
        Relation { name, lhs: parse(lhs), rhs: parse(rhs) }
    }

    /// `lhs - rhs`, the element that must vanish.
    pub fn difference(&self) -> Element {
        self.lhs.sub(&self.rhs).expect("same strand count")
    }
}

fn adjacent_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |i| (1..n).filter(move |&j| i.abs_diff(j) == 1).map(move |j| (i, j)))
}

fn distant_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |i| (1..n).filter(move |&j| i.abs_diff(j) > 1).map(move |j| (i, j)))
}

/// Relations (1) to (9) for every admissible choice of indices.
pub fn defining_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |tag: &str, i: usize, j: usize, lhs: String, rhs: String| {
        out.push(Relation::new(format!("({tag}) i={i} j={j}"), n, &lhs, &rhs));
    };
    for (i, j) in distant_pairs(n) {
        push("1", i, j, format!("T{i} T{j}"), format!("T{j} T{i}"));
    }
    for (i, j) in adjacent_pairs(n) {
        push("2", i, j, format!("T{i} T{j} T{i}"), format!("T{j} T{i} T{j}"));
    }
    for i in 1..n {
        push("3", i, i, format!("E{i} E{i}"), format!("E{i}"));
    }
    for i in 1..n {
        for j in 1..n {
            if i != j {
                push("4", i, j, format!("E{i} E{j}"), format!("E{j} E{i}"));
            }
        }
    }
    for i in 1..n {
        push("5", i, i, format!("E{i} T{i}"), format!("T{i} E{i}"));
    }
    for (i, j) in distant_pairs(n) {
        push("6", i, j, format!("E{i} T{j}"), format!("T{j} E{i}"));
    }
    for (i, j) in adjacent_pairs(n) {
        push("7", i, j, format!("E{j} T{i} T{j}"), format!("T{i} T{j} E{i}"));
    }
    for (i, j) in adjacent_pairs(n) {
        push("8a", i, j, format!("E{i} E{j} T{j}"), format!("E{i} T{j} E{i}"));
        push("8b", i, j, format!("E{i} T{j} E{i}"), format!("T{j} E{i} E{j}"));
    }
    for i in 1..n {
        push(
            "9",
            i,
            i,
            format!("T{i} T{i}"),
            format!("1 + ((1-u)/u)*E{i} - ((1-u)/u)*E{i} T{i}"),
        );
    }
    out
}

/// Identities stated as consequences of the defining relations: inverse
/// substitutions, the tie-sliding moves, the skein forms and the two
/// product lemmas used for the spanning set.
pub fn derived_identities(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let mut push = |tag: &str, i: usize, j: usize, lhs: String, rhs: String| {
        out.push(Relation::new(format!("{tag} i={i} j={j}"), n, &lhs, &rhs));
    };
    for i in 1..n {
        push("inverse", i, i, format!("T{i} T{i}^-1"), "1".into());
        push("inverse-left", i, i, format!("T{i}^-1 T{i}"), "1".into());
        push("tim (5)", i, i, format!("E{i} T{i}^-1"), format!("T{i}^-1 E{i}"));
        push("skein-1", i, i, format!("u*E{i} T{i} - E{i} T{i}^-1"), format!("(u-1)*E{i}"));
        push("skein-2", i, i, format!("E{i} T{i} - E{i} T{i}^-1"), format!("T{i} - T{i}^-1"));
    }
    for (i, j) in distant_pairs(n) {
        push("tim (6)", i, j, format!("E{i} T{j}^-1"), format!("T{j}^-1 E{i}"));
    }
    for (i, j) in adjacent_pairs(n) {
        push("tim (7)", i, j, format!("E{j} T{i}^-1 T{j}^-1"), format!("T{i}^-1 T{j}^-1 E{i}"));
        push("tim (8a)", i, j, format!("E{i} E{j} T{j}^-1"), format!("E{i} T{j}^-1 E{i}"));
        push("tim (8b)", i, j, format!("E{i} T{j}^-1 E{i}"), format!("T{j}^-1 E{i} E{j}"));
        push("re13", i, j, format!("T{i}^-1 E{j} T{i}"), format!("T{j} E{i} T{j}^-1"));
        push("re14", i, j, format!("T{i}^-1 E{j} T{i}"), format!("T{j}^-1 E{i} T{j}"));
        push("bypass", i, j, format!("T{i}^-1 E{j} T{i}"), format!("T{i} E{j} T{i}^-1"));
        push(
            "re14A",
            i,
            j,
            format!("u*T{i} E{j} T{i} - u*T{j} E{i} T{j}"),
            format!("(u-1)*E{j} T{i} E{j} - (u-1)*E{i} T{j} E{i}"),
        );
        push("re15", i, j, format!("T{i} T{j} E{j} T{i}"), format!("T{j} T{i} E{i} T{j}"));
        push("slide", i, j, format!("E{j} T{i}^-1 T{j}"), format!("T{i}^-1 T{j} E{i}"));
    }
    out.extend(lemma_as_printed(n));
    out
}

/// The spanning-set lemma exactly as printed.
pub fn lemma_as_printed(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(n) {
        out.push(Relation::new(
            format!("lemma.1 i={i} j={j}"),
            n,
            &format!("E{j} T{i}"),
            &format!("T{i} T{j} E{i} T{j} + (u-1)*T{i} T{j} E{i} E{j} + (u-1)*T{i} E{i} E{j}"),
        ));
        out.push(Relation::new(
            format!("lemma.2 i={i} j={j}"),
            n,
            &format!("T{j} E{j} T{i}"),
            &format!("T{i} T{j} T{i} E{i} T{j} + (u-1)*T{i} T{j} T{i} E{i} E{j} + (u-1)*T{j} T{i} E{i} E{j}"),
        ));
    }
    out
}

/// The same lemma with the quadratic relation applied as defined, so the
/// deformation coefficient is `(1-u)/u` and the last term changes sign.
pub fn lemma_corrected(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for (i, j) in adjacent_pairs(n) {
        out.push(Relation::new(
            format!("lemma.1 corrected i={i} j={j}"),
            n,
            &format!("E{j} T{i}"),
            &format!("T{i} T{j} E{i} T{j} + ((1-u)/u)*T{i} T{j} E{i} E{j} - ((1-u)/u)*T{i} E{i} E{j}"),
        ));
        out.push(Relation::new(
            format!("lemma.2 corrected i={i} j={j}"),
            n,
            &format!("T{j} E{j} T{i}"),
            &format!("T{i} T{j} T{i} E{i} T{j} + ((1-u)/u)*T{i} T{j} T{i} E{i} E{j} - ((1-u)/u)*T{j} T{i} E{i} E{j}"),
        ));
    }
    out
}
