//! Forbidden families: books `B(r,s)`, complete graphs and the fixed graphs
//! `H1` and `H2`, together with freeness tests that produce witnesses.
//!
//! Family strings use comma-separated terms:
//!
//! ```text
//! family := term ("," term)*
//! term   := "B(" r "," s ")"   two r-cliques sharing exactly s vertices, 0 <= s < r, r >= 2
//!         | "K(" m ")"         complete graph on m >= 1 vertices
//!         | "H1" | "H2"
//! ```
//!
//! Whitespace is ignored and the empty string is the empty family.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    contains_subgraph, enumerate_cliques, find_clique_in, find_subgraph, has_clique, Graph,
    VertexSet,
};

/// Default bound on the number of `r`-cliques a book scan will visit.
pub const DEFAULT_CLIQUE_CAP: u64 = 1_000_000;

/// Two `r`-cliques sharing exactly `s` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BookSpec {
    r: usize,
    s: usize,
}

impl BookSpec {
    pub fn new(r: usize, s: usize) -> Result<BookSpec> {
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "B({r},{s}): r must be at least 2"
            )));
        }
        if s >= r {
            return Err(Error::InvalidParameter(format!(
                "B({r},{s}): overlap s must be smaller than r"
            )));
        }
        Ok(BookSpec { r, s })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }
}

impl fmt::Display for BookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.r, self.s)
    }
}

/// The book as a graph on `2r - s` vertices: cliques on `0..r` and `r-s..2r-s`.
pub fn book_pattern_graph(spec: BookSpec) -> Graph {
    let (r, s) = (spec.r, spec.s);
    let mut g = Graph::empty(2 * r - s);
    for block in [0..r, r - s..2 * r - s] {
        for u in block.clone() {
            for v in block.clone().filter(|&v| v > u) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A pair of cliques certifying a book occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub overlap: usize,
}

impl CliqueWitness {
    /// Checks both sets are cliques of size `r` in `g` meeting in `overlap` vertices.
    pub fn verify(&self, g: &Graph, r: usize) -> bool {
        let is_clique = |vs: &[usize]| {
            vs.len() == r
                && vs.iter().all(|&v| v < g.n())
                && vs
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && g.has_edge(a, b)))
        };
        let shared = self
            .first
            .iter()
            .filter(|v| self.second.contains(v))
            .count();
        is_clique(&self.first) && is_clique(&self.second) && shared == self.overlap
    }
}

/// Finds two `r`-cliques meeting in exactly `s` vertices.
///
/// Cliques `A` are scanned in enumeration order; for each `s`-subset `S` of
/// `A` (lexicographic), the first `(r-s)`-clique inside the common
/// neighbourhood of `S` minus `A` completes the partner `B`. The first hit in
/// that order is returned.
pub fn book_violation(g: &Graph, spec: BookSpec) -> Result<Option<CliqueWitness>> {
    book_violation_capped(g, spec, DEFAULT_CLIQUE_CAP)
}

pub fn book_violation_capped(g: &Graph, spec: BookSpec, cap: u64) -> Result<Option<CliqueWitness>> {
    let (r, s) = (spec.r, spec.s);
    let n = g.n();
    if 2 * r - s > n {
        return Ok(None);
    }
    let mut scanned = 0u64;
    let mut cliques = enumerate_cliques(g, r);
    let mut subset = vec![0usize; s];
    while let Some(a) = cliques.next_slice() {
        scanned += 1;
        if scanned > cap {
            return Err(Error::ResourceLimit(format!(
                "book scan for {spec} exceeded {cap} cliques"
            )));
        }
        let a_set = VertexSet::from_vertices(n, a.iter().copied());
        // walk s-subsets of positions 0..r in lexicographic order
        for (i, slot) in subset.iter_mut().enumerate() {
            *slot = i;
        }
        loop {
            let mut common = VertexSet::full(n);
            for &i in &subset {
                common.intersect_with(g.row(a[i]));
            }
            common.difference_with(a_set.words());
            if let Some(rest) = find_clique_in(g, &common, r - s) {
                let mut second: Vec<usize> = subset.iter().map(|&i| a[i]).chain(rest).collect();
                second.sort_unstable();
                return Ok(Some(CliqueWitness {
                    first: a.to_vec(),
                    second,
                    overlap: s,
                }));
            }
            if !next_combination(&mut subset, r) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A fixed forbidden graph with a display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPattern {
    pub name: String,
    pub graph: Graph,
}

/// Conjunction of forbidden books and fixed patterns; the empty family
/// forbids nothing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbiddenFamily {
    books: Vec<BookSpec>,
    patterns: Vec<NamedPattern>,
}

impl ForbiddenFamily {
    pub fn empty() -> ForbiddenFamily {
        ForbiddenFamily::default()
    }

    pub fn with_book(mut self, spec: BookSpec) -> Self {
        self.books.push(spec);
        self
    }

    /// Adds a pattern graph. Empty (zero-vertex) patterns are rejected.
    pub fn with_pattern(mut self, name: impl Into<String>, graph: Graph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::InvalidParameter(
                "pattern graphs must be nonempty".into(),
            ));
        }
        self.patterns.push(NamedPattern {
            name: name.into(),
            graph,
        });
        Ok(self)
    }

    pub fn with_clique(self, m: usize) -> Result<Self> {
        self.with_pattern(format!("K({m})"), Graph::complete(m))
    }

    pub fn books(&self) -> &[BookSpec] {
        &self.books
    }

    pub fn patterns(&self) -> &[NamedPattern] {
        &self.patterns
    }

    pub fn is_empty(&self) -> bool {
        self.books.is_empty() && self.patterns.is_empty()
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .books
            .iter()
            .map(ToString::to_string)
            .chain(self.patterns.iter().map(|p| p.name.clone()))
            .collect();
        f.write_str(&terms.join(","))
    }
}

impl Serialize for ForbiddenFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for ForbiddenFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut family = ForbiddenFamily::empty();
        if compact.is_empty() {
            return Ok(family);
        }
        for term in split_terms(&compact)? {
            let upper = term.to_ascii_uppercase();
            family = match upper.as_str() {
                "H1" => family.with_pattern("H1", h1_graph())?,
                "H2" => family.with_pattern("H2", h2_graph())?,
                _ => {
                    if let Some(args) = call_args(&upper, "B") {
                        let [r, s] = parse_ints::<2>(&args, term)?;
                        family.with_book(BookSpec::new(r, s)?)
                    } else if let Some(args) = call_args(&upper, "K") {
                        let [m] = parse_ints::<1>(&args, term)?;
                        if m == 0 {
                            return Err(Error::Parse("K(0) is not a valid pattern".into()));
                        }
                        family.with_clique(m)?
                    } else {
                        return Err(Error::Parse(format!(
                            "unknown family term {term:?}; expected B(r,s), K(m), H1 or H2"
                        )));
                    }
                }
            };
        }
        Ok(family)
    }
}

/// Splits on commas that are not inside parentheses.
fn split_terms(text: &str) -> Result<Vec<&str>> {
    let mut terms = vec![];
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                terms.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
    }
    terms.push(&text[start..]);
    if terms.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse(format!("empty term in {text:?}")));
    }
    Ok(terms)
}

fn call_args(term: &str, head: &str) -> Option<String> {
    term.strip_prefix(head)?
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::to_string)
}

fn parse_ints<const N: usize>(args: &str, term: &str) -> Result<[usize; N]> {
    let parts: Vec<usize> = args
        .split(',')
        .map(|a| a.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad integer arguments in {term:?}")))?;
    parts
        .try_into()
        .map_err(|_| Error::Parse(format!("{term:?} takes {N} argument(s)")))
}

/// True when `g` contains no member of `family` as a subgraph.
pub fn is_free(g: &Graph, family: &ForbiddenFamily) -> Result<bool> {
    for &spec in &family.books {
        if book_violation(g, spec)?.is_some() {
            return Ok(false);
        }
    }
    for p in &family.patterns {
        let hit = if p.graph.is_complete() {
            has_clique(g, p.graph.n())
        } else {
            contains_subgraph(g, &p.graph)
        };
        if hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A family member found in a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Violation {
    Book {
        book: String,
        witness: CliqueWitness,
    },
    /// `embedding[i]` is the host vertex playing pattern vertex `i`.
    Pattern { name: String, embedding: Vec<usize> },
}

/// The first member of `family` (books first, then patterns, each in
/// insertion order) that occurs in `g`, with a certificate.
pub fn first_violation(g: &Graph, family: &ForbiddenFamily) -> Result<Option<Violation>> {
    for &spec in &family.books {
        if let Some(witness) = book_violation(g, spec)? {
            return Ok(Some(Violation::Book {
                book: spec.to_string(),
                witness,
            }));
        }
    }
    for p in &family.patterns {
        if let Some(embedding) = find_subgraph(g, &p.graph) {
            return Ok(Some(Violation::Pattern {
                name: p.name.clone(),
                embedding,
            }));
        }
    }
    Ok(None)
}

/// Seven vertices `h,i,j,k,l,m,n = 0..7`: the union of the 4-cliques
/// `{h,i,j,k}`, `{i,j,k,m}`, `{i,k,l,m}` and `{j,k,m,n}`; 15 edges.
pub fn h1_graph() -> Graph {
    let (h, i, j, k, l, m, n) = (0, 1, 2, 3, 4, 5, 6);
    clique_union(
        7,
        &[&[h, i, j, k], &[i, j, k, m], &[i, k, l, m], &[j, k, m, n]],
    )
}

/// Six vertices `a..f = 0..6`: a 5-clique on `a..e` and `f` joined to `c, d, e`;
/// 13 edges.
pub fn h2_graph() -> Graph {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    clique_union(6, &[&[a, b, c, d, e], &[c, d, e, f]])
}

fn clique_union(n: usize, cliques: &[&[usize]]) -> Graph {
    let mut g = Graph::empty(n);
    for c in cliques {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    g
}
