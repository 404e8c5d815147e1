//! Published catalogs: class ids with their crossing sets, the non-identity
//! homomorphisms of K6, its parameter table and nonprecedence table, and the
//! cover relations stated for the small posets.
//!
//! Sets are stored as listed (any representative of the class); compare them
//! after canonicalization.

use geoposet_core::filters::canonical_form;
use geoposet_core::graph::{CrossingSet, FamilyKind, GraphFamily};
use geoposet_core::poset::CertificateKind;

/// Path/cycle pairs `(a, b)` mean `e_a × e_b`.
pub type Indexed = &'static [(usize, usize)];
/// Clique pairs `((a, b), (c, d))` mean `e_{a,b} × e_{c,d}`.
pub type Quads = &'static [((usize, usize), (usize, usize))];

pub const P5: &[(&str, Indexed)] = &[
    ("0.1", &[]),
    ("1.1", &[(1, 3)]),
    ("1.2", &[(1, 4)]),
    ("2.1", &[(1, 3), (1, 4)]),
    ("3.1", &[(1, 3), (1, 4), (2, 4)]),
];

pub const P6: &[(&str, Indexed)] = &[
    ("0.1", &[]),
    ("1.1", &[(1, 3)]),
    ("1.2", &[(1, 4)]),
    ("1.3", &[(1, 5)]),
    ("1.4", &[(2, 4)]),
    ("2.1", &[(1, 3), (1, 4)]),
    ("2.2", &[(1, 3), (1, 5)]),
    ("2.3", &[(1, 3), (2, 5)]),
    ("2.4", &[(1, 3), (3, 5)]),
    ("2.5", &[(1, 4), (1, 5)]),
    ("2.6", &[(1, 4), (2, 4)]),
    ("2.7", &[(1, 4), (2, 5)]),
    ("2.8", &[(1, 5), (2, 4)]),
    ("3.1", &[(1, 3), (1, 4), (1, 5)]),
    ("3.2", &[(1, 3), (1, 4), (2, 4)]),
    ("3.3", &[(1, 3), (1, 4), (2, 5)]),
    ("3.4", &[(1, 3), (1, 4), (3, 5)]),
    ("3.5", &[(1, 3), (1, 5), (2, 5)]),
    ("3.6", &[(1, 3), (1, 5), (3, 5)]),
    ("3.7", &[(1, 4), (1, 5), (2, 4)]),
    ("3.8", &[(1, 4), (1, 5), (2, 5)]),
    ("3.9", &[(1, 4), (2, 4), (2, 5)]),
    ("4.1", &[(1, 3), (1, 4), (1, 5), (2, 4)]),
    ("4.2", &[(1, 3), (1, 4), (1, 5), (2, 5)]),
    ("4.3", &[(1, 3), (1, 4), (1, 5), (3, 5)]),
    ("4.4", &[(1, 3), (1, 4), (2, 4), (2, 5)]),
    ("4.5", &[(1, 3), (1, 4), (2, 5), (3, 5)]),
    ("4.6", &[(1, 4), (1, 5), (2, 4), (2, 5)]),
    ("5.1", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]),
    ("5.2", &[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]),
    ("6.1", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]),
];

/// The set satisfying the five-vertex rule that no drawing of P6 realizes.
pub const P6_VICTIM: Indexed = &[(1, 3), (1, 4), (1, 5), (2, 5), (3, 5)];

/// The 5-crossing class is the whole candidate universe of C5 (the listing
/// prints one pair as `e3 × e4`, which are adjacent; `e3 × e5` is meant).
pub const C5: &[(&str, Indexed)] = &[
    ("0.1", &[]),
    ("1.1", &[(1, 3)]),
    ("2.1", &[(1, 3), (1, 4)]),
    ("3.1", &[(1, 3), (1, 4), (2, 4)]),
    ("5.1", &[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]),
];

pub const C6: &[(&str, Indexed)] = &[
    ("0.1", &[]),
    ("1.1", &[(1, 3)]),
    ("1.2", &[(1, 4)]),
    ("2.1", &[(1, 3), (1, 4)]),
    ("2.2", &[(1, 3), (1, 5)]),
    ("2.3", &[(1, 3), (4, 6)]),
    ("3.1", &[(1, 3), (1, 4), (1, 5)]),
    ("3.2", &[(1, 3), (1, 4), (2, 4)]),
    ("3.3", &[(1, 3), (1, 4), (2, 5)]),
    ("3.4", &[(1, 3), (1, 4), (3, 5)]),
    ("3.5", &[(1, 3), (1, 4), (3, 6)]),
    ("3.6", &[(1, 3), (1, 4), (4, 6)]),
    ("3.7", &[(1, 3), (1, 5), (3, 5)]),
    ("3.8", &[(1, 4), (2, 5), (3, 6)]),
    ("4.1", &[(1, 3), (1, 4), (1, 5), (2, 4)]),
    ("4.2", &[(1, 3), (1, 4), (1, 5), (2, 5)]),
    ("4.3", &[(1, 3), (1, 4), (1, 5), (3, 5)]),
    ("4.4", &[(1, 3), (1, 4), (2, 5), (3, 5)]),
    ("4.5", &[(1, 3), (1, 4), (3, 6), (4, 6)]),
    ("5.1", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]),
    ("5.2", &[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]),
    ("5.3", &[(1, 3), (1, 4), (2, 4), (2, 5), (3, 6)]),
    ("5.4", &[(1, 3), (1, 4), (2, 5), (3, 6), (4, 6)]),
    ("6.1", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]),
    ("6.2", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 6)]),
    ("7.1", &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 6), (4, 6)]),
];

pub const K5: &[(&str, Quads)] = &[
    ("1.1", &[((3, 5), (2, 4))]),
    ("3.1", &[((1, 4), (2, 5)), ((1, 4), (3, 5)), ((2, 4), (3, 5))]),
    ("5.1", &[((1, 3), (2, 4)), ((1, 3), (2, 5)), ((1, 4), (2, 5)), ((1, 4), (3, 5)), ((2, 4), (3, 5))]),
];

pub const K6: &[(&str, Quads)] = &[
    ("3.1", &[((1, 3), (2, 6)), ((1, 4), (2, 5)), ((3, 5), (4, 6))]),
    ("4.1", &[((1, 3), (2, 6)), ((1, 4), (3, 5)), ((1, 4), (5, 6)), ((3, 5), (4, 6))]),
    ("5.1", &[((1, 3), (2, 4)), ((1, 3), (2, 6)), ((1, 4), (2, 6)), ((1, 4), (3, 6)), ((2, 4), (3, 6))]),
    ("5.2", &[((1, 3), (2, 6)), ((1, 4), (2, 6)), ((1, 4), (3, 5)), ((1, 4), (3, 6)), ((3, 5), (4, 6))]),
    (
        "6.1",
        &[((1, 4), (2, 5)), ((1, 4), (2, 6)), ((1, 4), (3, 6)), ((2, 4), (3, 6)), ((2, 5), (3, 6)), ((2, 5), (4, 6))],
    ),
    (
        "7.1",
        &[
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (3, 5)),
            ((1, 4), (5, 6)),
            ((1, 6), (2, 5)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "7.2",
        &[
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (3, 5)),
            ((1, 5), (4, 6)),
            ((2, 4), (3, 5)),
            ((2, 5), (4, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "8.1",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 6)),
            ((1, 4), (3, 5)),
            ((1, 4), (5, 6)),
            ((1, 6), (2, 4)),
            ((2, 4), (3, 5)),
            ((2, 4), (5, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "8.2",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 6)),
            ((1, 4), (3, 6)),
            ((1, 5), (2, 6)),
            ((1, 5), (3, 6)),
            ((1, 5), (4, 6)),
            ((2, 4), (3, 6)),
        ],
    ),
    (
        "9.1",
        &[
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (2, 6)),
            ((1, 4), (3, 5)),
            ((1, 4), (3, 6)),
            ((2, 5), (3, 6)),
            ((2, 5), (4, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "9.2",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (2, 6)),
            ((1, 4), (3, 6)),
            ((2, 4), (3, 6)),
            ((2, 5), (3, 6)),
            ((2, 5), (4, 6)),
        ],
    ),
    (
        "10.1",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (3, 5)),
            ((1, 4), (5, 6)),
            ((1, 6), (2, 5)),
            ((2, 4), (3, 5)),
            ((2, 4), (3, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "11.1",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (3, 5)),
            ((1, 4), (5, 6)),
            ((1, 6), (2, 4)),
            ((1, 6), (2, 5)),
            ((2, 4), (3, 5)),
            ((2, 4), (5, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "12.1",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (2, 6)),
            ((1, 4), (3, 5)),
            ((1, 4), (3, 6)),
            ((2, 4), (3, 5)),
            ((2, 4), (3, 6)),
            ((2, 5), (3, 6)),
            ((2, 5), (4, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
    (
        "15.1",
        &[
            ((1, 3), (2, 4)),
            ((1, 3), (2, 5)),
            ((1, 3), (2, 6)),
            ((1, 4), (2, 5)),
            ((1, 4), (2, 6)),
            ((1, 4), (3, 5)),
            ((1, 4), (3, 6)),
            ((1, 5), (2, 6)),
            ((1, 5), (3, 6)),
            ((1, 5), (4, 6)),
            ((2, 4), (3, 5)),
            ((2, 4), (3, 6)),
            ((2, 5), (3, 6)),
            ((2, 5), (4, 6)),
            ((3, 5), (4, 6)),
        ],
    ),
];

/// Non-identity homomorphisms of K6: source, target, image of vertices 1..6.
pub const K6_MAPS: &[(&str, &str, [usize; 6])] = &[
    ("3.1", "8.1", [1, 6, 3, 4, 5, 2]),
    ("4.1", "7.2", [3, 6, 1, 5, 4, 2]),
    ("4.1", "8.2", [6, 5, 2, 3, 4, 1]),
    ("4.1", "9.2", [1, 5, 3, 4, 6, 2]),
    ("5.1", "10.1", [1, 2, 3, 4, 6, 5]),
    ("5.2", "8.1", [2, 3, 6, 4, 5, 1]),
    ("5.2", "8.2", [6, 5, 4, 3, 2, 1]),
    ("8.2", "11.1", [1, 5, 4, 6, 3, 2]),
    ("8.2", "12.1", [3, 2, 1, 6, 5, 4]),
];

pub struct ParamRow {
    pub id: &'static str,
    pub cr: usize,
    pub e0: usize,
    pub omega_hat: usize,
    pub d0: [usize; 6],
    pub m: [usize; 6],
}

const fn row(id: &'static str, cr: usize, e0: usize, omega_hat: usize, d0: [usize; 6], m: [usize; 6]) -> ParamRow {
    ParamRow { id, cr, e0, omega_hat, d0, m }
}

pub const K6_PARAMS: &[ParamRow] = &[
    row("3.1", 3, 9, 4, [3, 3, 3, 3, 3, 3], [1, 1, 1, 1, 1, 1]),
    row("4.1", 4, 9, 4, [4, 3, 3, 3, 3, 2], [2, 2, 2, 2, 1, 1]),
    row("5.1", 5, 10, 5, [5, 3, 3, 3, 3, 3], [2, 2, 2, 2, 2, 0]),
    row("5.2", 5, 9, 4, [4, 4, 3, 3, 2, 2], [3, 3, 2, 2, 2, 2]),
    row("6.1", 6, 9, 4, [4, 4, 4, 2, 2, 2], [3, 3, 3, 3, 3, 3]),
    row("7.1", 7, 7, 4, [3, 3, 3, 2, 2, 1], [3, 3, 3, 3, 2, 1]),
    row("7.2", 7, 7, 4, [3, 3, 2, 2, 2, 2], [3, 3, 3, 3, 2, 2]),
    row("8.1", 8, 7, 4, [3, 3, 3, 2, 2, 1], [4, 4, 3, 3, 2, 2]),
    row("8.2", 8, 8, 5, [4, 3, 3, 2, 2, 2], [3, 3, 3, 3, 3, 2]),
    row("9.1", 9, 8, 4, [3, 3, 3, 3, 2, 2], [4, 4, 4, 4, 2, 2]),
    row("9.2", 9, 8, 5, [4, 3, 3, 2, 2, 2], [4, 4, 3, 3, 3, 3]),
    row("10.1", 10, 5, 5, [2, 2, 2, 2, 2, 0], [3, 3, 3, 3, 3, 1]),
    row("11.1", 11, 6, 5, [3, 2, 2, 2, 2, 1], [4, 4, 3, 3, 3, 2]),
    row("12.1", 12, 7, 5, [3, 3, 2, 2, 2, 2], [4, 4, 4, 4, 3, 3]),
    row("15.1", 15, 6, 6, [2, 2, 2, 2, 2, 2], [4, 4, 4, 4, 4, 4]),
];

/// One cell of the K6 nonprecedence table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    Equal,
    Cover,
    Composite,
    /// Unrelated, with the cited obstruction.
    Cited(CertificateKind),
    /// Unrelated by an argument outside the parameter conditions.
    Bespoke,
}

/// Rows and columns follow [`K6`]. Tokens: `=`, `<` cover, `o` composite,
/// blank for the crossing count, `E` uncrossed-edge count, `G` uncrossed
/// subgraph, `W` convex clique number, `D` sorted uncrossed degrees,
/// `M` sorted multiplicities, `*` bespoke.
const K6_TABLE: [&str; 15] = [
    "= D E D D < < < D < D o o o o",
    "_ = E D D < < < < G < o o o o",
    "_ _ = W W W W W < W < < o o o",
    "_ _ E = D M * < < < G M o o o",
    "_ _ _ _ = M M M M D < M M o o",
    "_ _ _ _ _ = D G E E E < < D D",
    "_ _ _ _ _ M = D E E E M G G <",
    "_ _ _ _ _ _ _ = E E E M < G G",
    "_ _ _ _ _ _ _ M = W G M < < o",
    "_ _ _ _ _ _ _ _ _ = M M M < o",
    "_ _ _ _ _ _ _ _ _ W = M M < o",
    "_ _ _ _ _ _ _ _ _ _ _ = E E E",
    "_ _ _ _ _ _ _ _ _ _ _ _ = E G",
    "_ _ _ _ _ _ _ _ _ _ _ _ _ = <",
    "_ _ _ _ _ _ _ _ _ _ _ _ _ _ =",
];

/// The K6 nonprecedence table as `(src id, dst id, cell)`.
pub fn k6_justifications() -> Vec<(&'static str, &'static str, Justification)> {
    let mut out = Vec::new();
    for (r, line) in K6_TABLE.iter().enumerate() {
        for (c, tok) in line.split(' ').enumerate() {
            let j = match tok {
                "=" => Justification::Equal,
                "<" => Justification::Cover,
                "o" => Justification::Composite,
                "_" => Justification::Cited(CertificateKind::CrTotal),
                "E" => Justification::Cited(CertificateKind::E0Ex),
                "G" => Justification::Cited(CertificateKind::G0NotSubgraph),
                "W" => Justification::Cited(CertificateKind::OmegaHat),
                "D" => Justification::Cited(CertificateKind::D0Dominance),
                "M" => Justification::Cited(CertificateKind::MDominance),
                "*" => Justification::Bespoke,
                _ => unreachable!("bad table token {tok}"),
            };
            out.push((K6[r].0, K6[c].0, j));
        }
    }
    out
}

/// Cover relations of K6 (the `<` cells).
pub fn k6_covers() -> Vec<(&'static str, &'static str)> {
    k6_justifications().into_iter().filter(|c| c.2 == Justification::Cover).map(|c| (c.0, c.1)).collect()
}

pub const P5_COVERS: &[(&str, &str)] = &[("0.1", "1.1"), ("0.1", "1.2"), ("1.1", "2.1"), ("1.2", "2.1"), ("2.1", "3.1")];

pub const P6_CHAINS: [&[&str]; 2] =
    [&["0.1", "1.4", "2.8", "3.7", "4.6", "5.1", "6.1"], &["0.1", "1.1", "2.2", "3.5", "4.3", "6.1"]];
pub const C6_CHAINS: [&[&str]; 2] =
    [&["0.1", "1.1", "2.2", "3.7", "4.3", "6.1"], &["0.1", "1.1", "2.2", "3.1", "4.1", "5.1", "6.1"]];
pub const K6_CHAINS: [&[&str]; 2] = [&["3.1", "7.2", "15.1"], &["3.1", "9.1", "12.1", "15.1"]];

/// The only cover of P6 whose crossing counts differ by more than one.
pub const P6_LONG_COVER: (&str, &str) = ("4.3", "6.1");

/// Stated relations among P6 classes: (src, dst, related).
pub const P6_RELATIONS: &[(&str, &str, bool)] = &[("2.3", "3.2", false), ("2.3", "3.3", true), ("2.3", "3.4", true)];

pub const CHAIN_K6: &[&str] = &["5.1", "9.2", "12.1", "15.1"];

/// Id table for a family, if one is published.
pub fn catalog(family: &GraphFamily) -> Option<Vec<(&'static str, CrossingSet)>> {
    let indexed = |t: &[(&'static str, Indexed)]| {
        t.iter().map(|(id, s)| (*id, CrossingSet::from_indexed(family, s).expect("fixture pairs are candidates"))).collect()
    };
    let quads = |t: &[(&'static str, Quads)]| {
        t.iter()
            .map(|(id, s)| (*id, CrossingSet::from_vertex_pairs(family, s).expect("fixture pairs are candidates")))
            .collect()
    };
    match (family.kind(), family.n()) {
        (FamilyKind::Path, 5) => Some(indexed(P5)),
        (FamilyKind::Path, 6) => Some(indexed(P6)),
        (FamilyKind::Cycle, 5) => Some(indexed(C5)),
        (FamilyKind::Cycle, 6) => Some(indexed(C6)),
        (FamilyKind::Clique, 5) => Some(quads(K5)),
        (FamilyKind::Clique, 6) => Some(quads(K6)),
        _ => None,
    }
}

/// Published id of a crossing set, matched up to symmetry.
pub fn published_id(family: &GraphFamily, x: &CrossingSet) -> Option<&'static str> {
    let key = canonical_form(x, family);
    catalog(family)?.into_iter().find(|(_, s)| canonical_form(s, family) == key).map(|(id, _)| id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_well_formed() {
        for f in [
            GraphFamily::path(5),
            GraphFamily::path(6),
            GraphFamily::cycle(5),
            GraphFamily::cycle(6),
            GraphFamily::clique(5),
            GraphFamily::clique(6),
        ] {
            let cat = catalog(&f).unwrap();
            for (id, x) in &cat {
                let cr: usize = id.split('.').next().unwrap().parse().unwrap();
                assert_eq!(cr, x.len(), "{} {}", f, id);
            }
            let mut keys: Vec<CrossingSet> = cat.iter().map(|(_, x)| canonical_form(x, &f)).collect();
            keys.sort();
            keys.dedup();
            assert_eq!(keys.len(), cat.len(), "{}", f);
        }
        let cells = k6_justifications();
        assert_eq!(cells.len(), 225);
        assert_eq!(k6_covers().len(), 25);
        for p in K6_PARAMS.iter().zip(K6) {
            assert_eq!(p.0.id, p.1 .0);
        }
    }
}
