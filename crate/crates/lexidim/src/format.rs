//! Graph text formats: edge lists, graph6, and the family expression
//! language.
//!
//! Edge lists look like `"4; 0-1,1-2,2-3"` and ignore whitespace. graph6 is
//! the usual 6-bit encoding of the upper triangle (column order), accepted
//! with or without the optional `>>graph6<<` header and never emitted with
//! one; nonzero padding bits are rejected. Family expressions compose named
//! graphs:
//!
//! ```text
//! atom := P<n> | C<n> | K<n> | E<n> | K(<m1>,...,<mt>) | wheel(<n>) | fan(<n>)
//! expr := atom | comp(expr) | join(expr,expr) | lex(expr,expr)
//! ```

use thiserror::Error;

use crate::graph::{Family, Graph, GraphError};

/// The supported text encodings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
    FamilyDsl,
}

/// Parse failure with the byte position it was detected at.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

/// Parses `input` in the named format.
pub fn parse(input: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(input),
        GraphFormat::Graph6 => parse_graph6(input),
        GraphFormat::FamilyDsl => parse_family(input),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Cursor<'a> {
        Cursor {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found '{}'", byte as char, b as char),
            )),
            None => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found end of input", byte as char),
            )),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(start, "expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| ParseError::new(start, "number too large"))
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).expect("letters are ascii")
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }
}

// ---------------------------------------------------------------------------
// edge list

/// Parses `"<n>; <i>-<j>,<i>-<j>,..."`.
pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut cur = Cursor::new(input);
    cur.skip_ws();
    let order_pos = cur.pos;
    let order = cur.number()?;
    if order == 0 {
        return Err(ParseError::new(order_pos, "graph order must be at least 1"));
    }
    cur.skip_ws();
    cur.expect(b';')?;
    let mut edges = Vec::new();
    cur.skip_ws();
    if !cur.at_end() {
        loop {
            cur.skip_ws();
            let edge_pos = cur.pos;
            let u = cur.number()?;
            cur.skip_ws();
            cur.expect(b'-')?;
            cur.skip_ws();
            let v = cur.number()?;
            if u >= order || v >= order {
                return Err(ParseError::new(
                    edge_pos,
                    format!("edge {u}-{v} out of range for order {order}"),
                ));
            }
            if u == v {
                return Err(ParseError::new(edge_pos, format!("self-loop {u}-{v}")));
            }
            edges.push((u, v));
            cur.skip_ws();
            match cur.bump() {
                None => break,
                Some(b',') => continue,
                Some(b) => {
                    return Err(ParseError::new(
                        cur.pos - 1,
                        format!("expected ',' or end of input, found '{}'", b as char),
                    ))
                }
            }
        }
    }
    Ok(Graph::from_edges(order, &edges).expect("edges validated during parse"))
}

/// Renders a graph in the edge-list format; inverse of [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let body: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if body.is_empty() {
        format!("{};", g.order())
    } else {
        format!("{}; {}", g.order(), body.join(","))
    }
}

// ---------------------------------------------------------------------------
// graph6

const G6_HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 value.
pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let trimmed = input.trim();
    let offset = input.len() - input.trim_start().len();
    let (body, offset) = match trimmed.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, offset + G6_HEADER.len()),
        None => (trimmed, offset),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(offset, "empty graph6 input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(
                offset + i,
                format!("byte 0x{b:02x} outside the graph6 alphabet"),
            ));
        }
    }

    // Order: one byte below 126, or 126 + 3 bytes, or 126 126 + 6 bytes.
    let (order, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(ParseError::new(offset, "truncated graph6 order field"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(ParseError::new(offset, "truncated graph6 order field"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    if order == 0 {
        return Err(ParseError::new(offset, "graph6 order must be at least 1"));
    }

    let bit_count = order * (order - 1) / 2;
    let data = &bytes[header_len..];
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(ParseError::new(
            offset + header_len,
            format!(
                "graph6 body for order {order} needs {expected} bytes, found {}",
                data.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for col in 1..order {
        for row in 0..col {
            let byte = data[bit / 6];
            let value = (byte - 63) >> (5 - bit % 6) & 1;
            if value == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    // Padding must be zero.
    while bit < expected * 6 {
        let byte = data[bit / 6];
        if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
            return Err(ParseError::new(
                offset + header_len + bit / 6,
                "nonzero padding bits in graph6 body",
            ));
        }
        bit += 1;
    }
    Ok(Graph::from_edges(order, &edges).expect("decoded edges are in range"))
}

/// Encodes a graph in graph6, headerless; inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> String {
    let order = g.order();
    let mut out: Vec<u8> = Vec::new();
    if order <= 62 {
        out.push(order as u8 + 63);
    } else if order <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((order >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((order >> shift) & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u32;
    for col in 1..order {
        for row in 0..col {
            group <<= 1;
            if g.is_adjacent(row, col) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

// ---------------------------------------------------------------------------
// family expressions

/// Parses a family expression such as `lex(C5,P2)` or `comp(K(2,2))`.
pub fn parse_family(input: &str) -> Result<Graph, ParseError> {
    let mut cur = Cursor::new(input);
    let g = parse_expr(&mut cur)?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(ParseError::new(cur.pos, "trailing input after expression"));
    }
    Ok(g)
}

fn parse_expr(cur: &mut Cursor) -> Result<Graph, ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let ident = cur.ident();
    match ident {
        "comp" => {
            cur.skip_ws();
            cur.expect(b'(')?;
            let inner = parse_expr(cur)?;
            cur.skip_ws();
            cur.expect(b')')?;
            Ok(inner.complement())
        }
        "join" | "lex" => {
            cur.skip_ws();
            cur.expect(b'(')?;
            let left = parse_expr(cur)?;
            cur.skip_ws();
            cur.expect(b',')?;
            let right = parse_expr(cur)?;
            cur.skip_ws();
            cur.expect(b')')?;
            Ok(if ident == "join" {
                left.join(&right)
            } else {
                left.lex_product(&right)
            })
        }
        "wheel" | "fan" => {
            cur.skip_ws();
            cur.expect(b'(')?;
            cur.skip_ws();
            let n = cur.number()?;
            cur.skip_ws();
            cur.expect(b')')?;
            let family = if ident == "wheel" {
                Family::Wheel(n)
            } else {
                Family::Fan(n)
            };
            build_at(family, start)
        }
        "P" | "C" | "E" => {
            cur.skip_ws();
            let n = cur.number()?;
            let family = match ident {
                "P" => Family::Path(n),
                "C" => Family::Cycle(n),
                _ => Family::Empty(n),
            };
            build_at(family, start)
        }
        "K" => {
            cur.skip_ws();
            if cur.peek() == Some(b'(') {
                cur.bump();
                let mut parts = Vec::new();
                loop {
                    cur.skip_ws();
                    parts.push(cur.number()?);
                    cur.skip_ws();
                    match cur.bump() {
                        Some(b',') => continue,
                        Some(b')') => break,
                        Some(b) => {
                            return Err(ParseError::new(
                                cur.pos - 1,
                                format!("expected ',' or ')', found '{}'", b as char),
                            ))
                        }
                        None => {
                            return Err(ParseError::new(cur.pos, "unterminated part list"))
                        }
                    }
                }
                build_at(Family::CompleteMultipartite(parts), start)
            } else {
                let n = cur.number()?;
                build_at(Family::Complete(n), start)
            }
        }
        "" => Err(ParseError::new(start, "expected a graph expression")),
        other => Err(ParseError::new(
            start,
            format!("unknown constructor '{other}'"),
        )),
    }
}

fn build_at(family: Family, position: usize) -> Result<Graph, ParseError> {
    family
        .build()
        .map_err(|e: GraphError| ParseError::new(position, e.to_string()))
}
