//! Parser and renderer for the compact multipartite notation used on the
//! command line and in table data files.
//!
//! Grammar:
//!
//! ```text
//! expr    := 'K' '{' INT (',' INT)* '}' [ '-' removal ]
//! removal := '{' item (',' item)* '}' | INT 'e'
//! item    := '(' vref ',' vref ')' | 'e'
//! vref    := LETTER [INT]
//! ```
//!
//! Whitespace is insignificant. A bare `e` item inside braces marks one
//! free edge slot (a constrained wildcard, used by table data); `INT e`
//! outside braces removes any INT edges. A bare part letter refers to the
//! part's first vertex, which for singleton parts is the only one.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::deficient::{effective_parts, enumerate_deficient, DeficientCase, DeficientError};
use crate::graph::{complete_multipartite, Graph, PartLabeling};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("unknown part letter '{letter}' at position {pos}")]
    UnknownPart { letter: char, pos: usize },
    #[error("index {index} exceeds part '{letter}' of size {size} (position {pos})")]
    IndexOutOfPart {
        letter: char,
        index: usize,
        size: usize,
        pos: usize,
    },
    #[error("edge at position {pos} joins two vertices of part '{letter}'; no such edge exists")]
    SamePartEdge { letter: char, pos: usize },
    #[error("duplicate removed edge {edge} at position {pos}")]
    DuplicateEdge { edge: String, pos: usize },
    #[error("part size must be positive (position {pos})")]
    ZeroPart { pos: usize },
    #[error("{0}")]
    Graph(#[from] crate::error::GraphError),
    #[error("{0}")]
    Deficient(#[from] DeficientError),
    #[error("cannot remove {k} edges from a graph with {m}")]
    TooManyRemovals { k: usize, m: usize },
}

/// Reference to a vertex by part letter and optional 1-based index.
/// A missing index means index 1 (the bare-letter shorthand).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexRef {
    pub letter: char,
    pub index: Option<usize>,
}

impl VertexRef {
    pub fn effective_index(&self) -> usize {
        self.index.unwrap_or(1)
    }

    fn sort_key(&self) -> (char, usize) {
        (self.letter, self.effective_index())
    }
}

impl PartialOrd for VertexRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexRef {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.letter, i),
            None => write!(f, "{}", self.letter),
        }
    }
}

/// A removed edge in paper notation, endpoints in sorted order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeLabel(pub VertexRef, pub VertexRef);

impl EdgeLabel {
    pub fn new(a: VertexRef, b: VertexRef) -> EdgeLabel {
        if a <= b {
            EdgeLabel(a, b)
        } else {
            EdgeLabel(b, a)
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Removal {
    None,
    Explicit(Vec<EdgeLabel>),
    /// Remove any `k` edges; resolution enumerates isomorphism orbits.
    Wildcard(usize),
    /// Fixed edges plus `free` arbitrary further edges.
    Constrained { fixed: Vec<EdgeLabel>, free: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphExpr {
    pub parts: Vec<usize>,
    pub removal: Removal,
}

/// Result of resolving an expression: a single labeled graph, or one
/// representative per isomorphism orbit for wildcard removals.
#[derive(Debug, Clone)]
pub enum Resolved {
    One {
        graph: Graph,
        labeling: PartLabeling,
        removed: Vec<EdgeLabel>,
    },
    Cases(Vec<DeficientCase>),
}

impl Resolved {
    /// All concrete graphs, one per case.
    pub fn graphs(&self) -> Vec<&Graph> {
        match self {
            Resolved::One { graph, .. } => vec![graph],
            Resolved::Cases(cases) => cases.iter().map(|c| &c.graph).collect(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), NotationError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("'{}'", c as char)))
        }
    }

    fn err(&self, expected: &str) -> NotationError {
        NotationError::Syntax {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn integer(&mut self) -> Result<usize, NotationError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("a smaller integer"))
    }

    fn vref(&mut self) -> Result<(VertexRef, usize), NotationError> {
        self.skip_ws();
        let pos = self.pos;
        let letter = match self.bump() {
            Some(c) if c.is_ascii_lowercase() => c as char,
            _ => return Err(self.err("a part letter")),
        };
        let index = if self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            Some(self.integer()?)
        } else {
            None
        };
        Ok((VertexRef { letter, index }, pos))
    }

    fn edge(&mut self) -> Result<(EdgeLabel, usize), NotationError> {
        self.skip_ws();
        let pos = self.pos;
        self.expect(b'(')?;
        let (a, _) = self.vref()?;
        self.expect(b',')?;
        let (b, _) = self.vref()?;
        self.expect(b')')?;
        Ok((EdgeLabel::new(a, b), pos))
    }
}

/// Parse the notation into an expression; syntax errors carry a position.
pub fn parse(text: &str) -> Result<GraphExpr, NotationError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    match p.bump() {
        Some(b'K') => {}
        _ => return Err(p.err("'K'")),
    }
    p.expect(b'{')?;
    let mut parts = Vec::new();
    loop {
        p.skip_ws();
        let pos = p.pos;
        let size = p.integer()?;
        if size == 0 {
            return Err(NotationError::ZeroPart { pos });
        }
        parts.push(size);
        match p.peek() {
            Some(b',') => {
                p.bump();
            }
            Some(b'}') => {
                p.bump();
                break;
            }
            _ => return Err(p.err("',' or '}'")),
        }
    }

    let removal = match p.peek() {
        None => Removal::None,
        Some(b'-') => {
            p.bump();
            match p.peek() {
                Some(b'{') => {
                    p.bump();
                    let mut fixed: Vec<(EdgeLabel, usize)> = Vec::new();
                    let mut free = 0usize;
                    loop {
                        match p.peek() {
                            Some(b'(') => {
                                let e = p.edge()?;
                                fixed.push(e);
                            }
                            Some(b'e') => {
                                p.bump();
                                free += 1;
                            }
                            _ => return Err(p.err("an edge '(x,y)' or 'e'")),
                        }
                        match p.peek() {
                            Some(b',') => {
                                p.bump();
                            }
                            Some(b'}') => {
                                p.bump();
                                break;
                            }
                            _ => return Err(p.err("',' or '}'")),
                        }
                    }
                    validate_edges(&parts, &fixed)?;
                    let edges = fixed.into_iter().map(|(e, _)| e).collect();
                    if free == 0 {
                        Removal::Explicit(edges)
                    } else {
                        Removal::Constrained { fixed: edges, free }
                    }
                }
                Some(c) if c.is_ascii_digit() => {
                    let k = p.integer()?;
                    match p.bump() {
                        Some(b'e') => Removal::Wildcard(k),
                        _ => return Err(p.err("'e'")),
                    }
                }
                _ => return Err(p.err("'{' or an edge count")),
            }
        }
        _ => return Err(p.err("end of input or '-'")),
    };

    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("end of input"));
    }
    Ok(GraphExpr { parts, removal })
}

/// Check edge labels against the part list: letters in range, indices in
/// range, endpoints in distinct parts, no duplicates.
fn validate_edges(raw_parts: &[usize], edges: &[(EdgeLabel, usize)]) -> Result<(), NotationError> {
    let parts = &effective_parts(raw_parts);
    let labeling = PartLabeling::new(parts)?;
    let mut seen: Vec<EdgeLabel> = Vec::new();
    for &(e, pos) in edges {
        for r in [e.0, e.1] {
            let part = (r.letter as i32) - ('a' as i32);
            if part < 0 || part as usize >= parts.len() {
                return Err(NotationError::UnknownPart {
                    letter: r.letter,
                    pos,
                });
            }
            let size = parts[part as usize];
            if r.effective_index() > size {
                return Err(NotationError::IndexOutOfPart {
                    letter: r.letter,
                    index: r.effective_index(),
                    size,
                    pos,
                });
            }
        }
        if e.0.letter == e.1.letter {
            return Err(NotationError::SamePartEdge {
                letter: e.0.letter,
                pos,
            });
        }
        let norm = normalize_label(&labeling, e);
        if seen.contains(&norm) {
            return Err(NotationError::DuplicateEdge {
                edge: e.to_string(),
                pos,
            });
        }
        seen.push(norm);
    }
    Ok(())
}

/// Replace bare letters by explicit index 1 so duplicates compare equal.
fn normalize_label(_labeling: &PartLabeling, e: EdgeLabel) -> EdgeLabel {
    let fix = |r: VertexRef| VertexRef {
        letter: r.letter,
        index: Some(r.effective_index()),
    };
    EdgeLabel::new(fix(e.0), fix(e.1))
}

/// Resolve an expression to one graph or a set of orbit representatives.
/// A single part `K{n}` denotes the complete graph K_n.
pub fn resolve(expr: &GraphExpr) -> Result<Resolved, NotationError> {
    let (graph, labeling) = complete_multipartite(&effective_parts(&expr.parts))?;
    match &expr.removal {
        Removal::None => Ok(Resolved::One {
            graph,
            labeling,
            removed: Vec::new(),
        }),
        Removal::Explicit(edges) => {
            let mut g = graph;
            for e in edges {
                let u = labeling.vertex(e.0.letter, e.0.index)?;
                let v = labeling.vertex(e.1.letter, e.1.index)?;
                g = g.delete_edge(u, v)?;
            }
            Ok(Resolved::One {
                graph: g,
                labeling,
                removed: edges.clone(),
            })
        }
        Removal::Wildcard(k) => {
            let m = graph.edge_count();
            if *k > m {
                return Err(NotationError::TooManyRemovals { k: *k, m });
            }
            Ok(Resolved::Cases(enumerate_deficient(&expr.parts, *k, &[])?))
        }
        Removal::Constrained { fixed, free } => {
            let mut fixed_pairs = Vec::new();
            for e in fixed {
                let u = labeling.vertex(e.0.letter, e.0.index)?;
                let v = labeling.vertex(e.1.letter, e.1.index)?;
                fixed_pairs.push((u, v));
            }
            let m = graph.edge_count();
            if fixed.len() + free > m {
                return Err(NotationError::TooManyRemovals {
                    k: fixed.len() + free,
                    m,
                });
            }
            Ok(Resolved::Cases(enumerate_deficient(
                &expr.parts,
                fixed.len() + free,
                &fixed_pairs,
            )?))
        }
    }
}

/// Parse and resolve in one step.
pub fn resolve_text(text: &str) -> Result<Resolved, NotationError> {
    resolve(&parse(text)?)
}

/// Render an expression canonically: parts in descending order (edge
/// labels remapped accordingly), removed edges sorted.
pub fn render(expr: &GraphExpr) -> String {
    // stable sort: ranks[i] = new part position of original part i
    let mut order: Vec<usize> = (0..expr.parts.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(expr.parts[i]), i));
    let mut rank = vec![0usize; expr.parts.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let remap = |r: VertexRef| VertexRef {
        letter: (b'a' + rank[(r.letter as u8 - b'a') as usize] as u8) as char,
        index: r.index,
    };

    let mut sorted_parts = expr.parts.clone();
    sorted_parts.sort_unstable_by(|a, b| b.cmp(a));
    let parts_str = sorted_parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");

    let removal_str = match &expr.removal {
        Removal::None => String::new(),
        Removal::Explicit(edges) => {
            let mut es: Vec<EdgeLabel> = edges
                .iter()
                .map(|e| EdgeLabel::new(remap(e.0), remap(e.1)))
                .collect();
            es.sort();
            format!(
                "-{{{}}}",
                es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            )
        }
        Removal::Wildcard(k) => format!("-{}e", k),
        Removal::Constrained { fixed, free } => {
            let mut es: Vec<EdgeLabel> = fixed
                .iter()
                .map(|e| EdgeLabel::new(remap(e.0), remap(e.1)))
                .collect();
            es.sort();
            let mut items: Vec<String> = es.iter().map(|e| e.to_string()).collect();
            items.extend(std::iter::repeat_n("e".to_string(), *free));
            format!("-{{{}}}", items.join(","))
        }
    };
    format!("K{{{}}}{}", parts_str, removal_str)
}

/// Render a part labeling as a complete multipartite expression.
pub fn render_parts(labeling: &PartLabeling) -> String {
    let mut sizes = labeling.sizes().to_vec();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    format!(
        "K{{{}}}",
        sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn parse_explicit_singletons() {
        let expr = parse("K{3,3,1,1}-{(c,d)}").unwrap();
        assert_eq!(expr.parts, vec![3, 3, 1, 1]);
        match resolve(&expr).unwrap() {
            Resolved::One { graph, .. } => {
                assert_eq!(graph.n(), 8);
                assert_eq!(graph.edge_count(), 21);
            }
            _ => panic!("expected single graph"),
        }
    }

    #[test]
    fn parse_wildcard() {
        let expr = parse("K{7}-2e").unwrap();
        assert_eq!(expr.removal, Removal::Wildcard(2));
    }

    #[test]
    fn parse_rejects_same_part_edge() {
        let err = parse("K{4,3,1}-{(a1,a2)}").unwrap_err();
        assert!(matches!(err, NotationError::SamePartEdge { letter: 'a', .. }));
    }

    #[test]
    fn parse_rejects_bad_index_and_letter() {
        assert!(matches!(
            parse("K{4,3,1}-{(a5,b1)}").unwrap_err(),
            NotationError::IndexOutOfPart { .. }
        ));
        assert!(matches!(
            parse("K{4,3,1}-{(a1,d)}").unwrap_err(),
            NotationError::UnknownPart { letter: 'd', .. }
        ));
        assert!(matches!(
            parse("K{4,3,1}-{(a1,b1),(b1,a1)}").unwrap_err(),
            NotationError::DuplicateEdge { .. }
        ));
    }

    #[test]
    fn syntax_error_positions() {
        match parse("K{3,}") {
            Err(NotationError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(parse("").is_err());
        assert!(parse("G{3}").is_err());
        assert!(parse("K{3}x").is_err());
        assert!(matches!(
            parse("K{0,3}").unwrap_err(),
            NotationError::ZeroPart { pos: 2 }
        ));
    }

    #[test]
    fn resolve_explicit_two_edges() {
        match resolve_text("K{4,3,1}-{(a1,b1),(a1,b2)}").unwrap() {
            Resolved::One { graph, .. } => {
                assert_eq!(graph.n(), 8);
                assert_eq!(graph.edge_count(), 17);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn whitespace_insignificant() {
        let a = parse("K{4,3,1}-{(a1,b1),(a1,b2)}").unwrap();
        let b = parse(" K { 4 , 3 , 1 } - { ( a1 , b1 ) , ( a1 , b2 ) } ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn render_round_trips() {
        for text in ["K{5,5}", "K{7}-2e", "K{3,3,1,1}-{(c,d)}"] {
            let expr = parse(text).unwrap();
            assert_eq!(render(&expr), *text);
            let back = parse(&render(&expr)).unwrap();
            assert_eq!(back, expr);
        }
    }

    #[test]
    fn render_sorts_edges_and_parts() {
        let expr = parse("K{4,3,1}-{(a1,b2),(a1,b1)}").unwrap();
        assert_eq!(render(&expr), "K{4,3,1}-{(a1,b1),(a1,b2)}");
        // ascending part list renders descending with remapped letters
        let expr = parse("K{1,3}-{(a,b2)}").unwrap();
        assert_eq!(render(&expr), "K{3,1}-{(a2,b)}");
        let r1 = resolve_text("K{1,3}-{(a,b2)}").unwrap();
        let r2 = resolve_text("K{3,1}-{(a2,b)}").unwrap();
        match (&r1, &r2) {
            (Resolved::One { graph: g1, .. }, Resolved::One { graph: g2, .. }) => {
                assert!(is_isomorphic(g1, g2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn render_k6_as_multipartite() {
        let lab = PartLabeling::new(&[1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(render_parts(&lab), "K{1,1,1,1,1,1}");
    }

    #[test]
    fn bare_letter_means_index_one() {
        // K_{3,2,1,1}-{(b,c)}: bare b on a part of size 2 picks b1
        match resolve_text("K{3,2,1,1}-{(b,c)}").unwrap() {
            Resolved::One { graph, labeling, .. } => {
                let b1 = labeling.vertex('b', Some(1)).unwrap();
                let c = labeling.vertex('c', None).unwrap();
                assert!(!graph.has_edge(b1, c));
            }
            _ => panic!(),
        }
    }
}
